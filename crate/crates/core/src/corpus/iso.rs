//! Loop isomorphism by extending generator images.

use crate::table::{element_order, Loop};

/// A generating set picked greedily: each element is not in the subloop
/// generated by the earlier ones.
pub fn generating_set(l: &Loop) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![false; l.order()];
    span[0] = true;
    for x in l.elements() {
        if !span[x] {
            gens.push(x);
            span = subloop_flags(l, &gens);
        }
    }
    gens
}

fn subloop_flags(l: &Loop, gens: &[usize]) -> Vec<bool> {
    let mut flags = vec![false; l.order()];
    let mut members = vec![0];
    flags[0] = true;
    for &g in gens {
        if !flags[g] {
            flags[g] = true;
            members.push(g);
        }
    }
    let mut i = 0;
    while i < members.len() {
        for j in 0..=i {
            let (a, b) = (members[i], members[j]);
            for p in [l.mul(a, b), l.mul(b, a), l.left_div(a, b), l.left_div(b, a), l.right_div(a, b), l.right_div(b, a)] {
                if !flags[p] {
                    flags[p] = true;
                    members.push(p);
                }
            }
        }
        i += 1;
    }
    flags
}

/// Extends `images` (defined on `gens`) multiplicatively. Returns the full
/// map if it is a well-defined bijective homomorphism.
fn extend_map(a: &Loop, b: &Loop, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut known = Vec::with_capacity(n);
    let mut assign = |x: usize, y: usize, map: &mut Vec<usize>, known: &mut Vec<usize>| -> bool {
        if map[x] == usize::MAX {
            if used[y] {
                return false;
            }
            used[y] = true;
            map[x] = y;
            known.push(x);
            true
        } else {
            map[x] == y
        }
    };
    if !assign(0, 0, &mut map, &mut known) {
        return None;
    }
    for (&g, &h) in gens.iter().zip(images) {
        if !assign(g, h, &mut map, &mut known) {
            return None;
        }
    }
    let mut i = 0;
    while i < known.len() {
        for j in 0..=i {
            let (x, y) = (known[i], known[j]);
            for (p, q) in [(x, y), (y, x)] {
                let (fp, fq) = (map[p], map[q]);
                if !assign(a.mul(p, q), b.mul(fp, fq), &mut map, &mut known) {
                    return None;
                }
            }
        }
        i += 1;
    }
    if known.len() != n {
        return None;
    }
    // Verify on all pairs; closure above only checked products it visited.
    let ok = (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
    ok.then_some(map)
}

fn order_profile(l: &Loop) -> Vec<usize> {
    let mut orders: Vec<usize> = l.elements().map(|x| element_order(l, x)).collect();
    orders.sort_unstable();
    orders
}

/// An isomorphism `a -> b` as an image vector, if one exists.
pub fn isomorphism(a: &Loop, b: &Loop) -> Option<Vec<usize>> {
    if a.order() != b.order() || order_profile(a) != order_profile(b) {
        return None;
    }
    let gens = generating_set(a);
    let gen_orders: Vec<usize> = gens.iter().map(|&g| element_order(a, g)).collect();
    let candidates: Vec<Vec<usize>> = gen_orders
        .iter()
        .map(|&k| b.elements().filter(|&y| element_order(b, y) == k).collect())
        .collect();

    let mut choice = vec![0usize; gens.len()];
    let mut images = vec![0usize; gens.len()];
    let mut depth = 0;
    // Odometer over candidate images.
    loop {
        if depth == gens.len() {
            if let Some(map) = extend_map(a, b, &gens, &images) {
                return Some(map);
            }
            if depth == 0 {
                return None;
            }
            depth -= 1;
            choice[depth] += 1;
            continue;
        }
        if choice[depth] >= candidates[depth].len() {
            if depth == 0 {
                return None;
            }
            choice[depth] = 0;
            depth -= 1;
            choice[depth] += 1;
            continue;
        }
        images[depth] = candidates[depth][choice[depth]];
        depth += 1;
    }
}

pub fn is_isomorphic(a: &Loop, b: &Loop) -> bool {
    isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::groups;
    use crate::table::{CayleyTable, Magma};

    fn relabel(l: &Loop, perm: &[usize]) -> Loop {
        // perm fixes 0
        let n = l.order();
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let m = Magma::from_fn(n, |a, b| perm[l.mul(inv[a], inv[b])]);
        Loop::new(CayleyTable::new(m).unwrap()).unwrap()
    }

    #[test]
    fn relabelled_copies_are_isomorphic() {
        let q = groups::quaternion8();
        let r = relabel(&q, &[0, 5, 3, 7, 1, 2, 6, 4]);
        let map = isomorphism(&q, &r).unwrap();
        assert_eq!(map[0], 0);
        assert!(is_isomorphic(&r, &q));
    }

    #[test]
    fn distinct_groups_are_not() {
        assert!(!is_isomorphic(&groups::quaternion8(), &groups::dihedral4()));
        assert!(!is_isomorphic(&groups::cyclic(4), &groups::by_name("Z2xZ2").unwrap()));
        assert!(!is_isomorphic(&groups::cyclic(6), &groups::symmetric3()));
        assert!(is_isomorphic(&groups::cyclic(6), &groups::by_name("Z2xZ3").unwrap()));
    }
}
