//! Standard group tables.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::permgroup::{closure, PermGroup};
use crate::table::{CayleyTable, Loop, Magma};

fn lift(m: Magma) -> Loop {
    Loop::new(CayleyTable::new(m).expect("group tables are Latin")).expect("groups have an identity")
}

pub fn cyclic(n: usize) -> Loop {
    lift(Magma::from_fn(n, |x, y| (x + y) % n))
}

/// Cayley table of an enumerated permutation group, elements in sorted order.
pub fn from_perm_group(g: &PermGroup) -> Loop {
    let elements = g.elements();
    lift(Magma::from_fn(elements.len(), |a, b| {
        g.index_of(&elements[a].then(&elements[b]))
            .expect("groups are closed")
    }))
}

fn from_cycles(degree: usize, gens: &[&[&[usize]]]) -> Loop {
    let gens: Vec<Perm> = gens
        .iter()
        .map(|c| Perm::from_cycles(degree, c).expect("valid cycles"))
        .collect();
    from_perm_group(&closure(&gens, usize::MAX).expect("small group"))
}

pub fn symmetric3() -> Loop {
    from_cycles(3, &[&[&[0, 1]], &[&[0, 1, 2]]])
}

pub fn dihedral4() -> Loop {
    dihedral(4).expect("4 >= 3")
}

/// Symmetries of the regular `n`-gon, order `2n`.
pub fn dihedral(n: usize) -> Result<Loop> {
    if n < 3 {
        return Err(Error::Invalid(format!("dihedral group needs n >= 3, got {n}")));
    }
    let rotation = Perm::new((0..n).map(|i| (i + 1) % n).collect())?;
    let reflection = Perm::new((0..n).map(|i| (n - i) % n).collect())?;
    Ok(from_perm_group(&closure(&[rotation, reflection], usize::MAX)?))
}

/// The dicyclic group of order 12, `<a, x | a^6, x^2 = a^3, x^-1 a x = a^-1>`,
/// with `a^i x^j` stored as `6j + i`.
pub fn dicyclic3() -> Loop {
    lift(Magma::from_fn(12, |p, q| {
        let (i, j, k, l) = (p % 6, p / 6, q % 6, q / 6);
        let k = if j == 1 { (6 - k) % 6 } else { k };
        let carry = if j + l == 2 { 3 } else { 0 };
        ((j + l) % 2) * 6 + (i + k + carry) % 6
    }))
}

pub fn quaternion8() -> Loop {
    from_cycles(8, &[&[&[0, 1, 2, 3], &[4, 5, 6, 7]], &[&[0, 4, 2, 6], &[1, 7, 3, 5]]])
}

pub fn alternating4() -> Loop {
    from_cycles(4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]])
}

pub fn alternating5() -> Loop {
    from_cycles(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]])
}

/// `(a, b) -> a * |b| + b`.
pub fn direct_product(a: &Loop, b: &Loop) -> Loop {
    let m = b.order();
    lift(Magma::from_fn(a.order() * m, |x, y| {
        a.mul(x / m, y / m) * m + b.mul(x % m, y % m)
    }))
}

/// Parses names like `Z5`, `S3`, `Q8`, `D4`, `Dic3`, `A4`, `A5` and products such as `Z3xZ3`.
pub fn by_name(name: &str) -> Result<Loop> {
    if let Some((a, b)) = name.split_once(['x', 'X']) {
        return Ok(direct_product(&by_name(a)?, &by_name(b)?));
    }
    let unknown = || Error::Invalid(format!("unknown group {name:?}"));
    match name {
        "S3" => Ok(symmetric3()),
        "Dic3" => Ok(dicyclic3()),
        "Q8" => Ok(quaternion8()),
        "A4" => Ok(alternating4()),
        "A5" => Ok(alternating5()),
        _ if name.starts_with('D') => dihedral(name[1..].parse().map_err(|_| unknown())?),
        _ => {
            let n: usize = name
                .strip_prefix(['Z', 'C'])
                .and_then(|k| k.parse().ok())
                .ok_or_else(unknown)?;
            if n == 0 {
                return Err(unknown());
            }
            Ok(cyclic(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{element_order, is_associative};

    fn involutions(l: &Loop) -> usize {
        l.elements().filter(|&x| x != 0 && element_order(l, x) == 2).count()
    }

    #[test]
    fn standard_groups() {
        for (name, order, abelian, invs) in [
            ("Z5", 5, true, 0),
            ("S3", 6, false, 3),
            ("D4", 8, false, 5),
            ("Q8", 8, false, 1),
            ("A4", 12, false, 3),
            ("A5", 60, false, 15),
            ("Z2xZ2", 4, true, 3),
            ("Z3xZ3", 9, true, 0),
            ("D5", 10, false, 5),
            ("D6", 12, false, 7),
            ("Dic3", 12, false, 1),
        ] {
            let g = by_name(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert!(is_associative(&g).holds, "{name}");
            assert_eq!(g.is_commutative(), abelian, "{name}");
            assert_eq!(involutions(&g), invs, "{name}");
        }
        assert!(by_name("Z0").is_err());
        assert!(by_name("M7").is_err());
    }
}
