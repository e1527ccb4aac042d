mod common;

use bolkit::corpus::groups;
use bolkit::multgroups::{
    is_simple_loop, is_strongly_simple, strong_simplicity_scan, mult_group, normal_subloop_closure, translations, Side,
};
use bolkit::permgroup::{stabilizer, DEFAULT_CLOSURE_CAP as CAP};
use bolkit::table::{
    element_order, inverse_properties, is_associative, is_moufang, is_right_bol, power, Loop,
};

fn all_loops() -> Vec<(String, Loop)> {
    let mut v = common::corpus_loops();
    v.extend(common::search_loops(6));
    v
}

#[test]
fn identity_implications() {
    for (name, m) in common::corpus_magmas() {
        if is_associative(&m).holds {
            assert!(is_right_bol(&m).holds && is_moufang(&m).holds, "{name}");
        }
    }
    for (name, l) in all_loops() {
        if !is_right_bol(&l).holds {
            continue;
        }
        let ip = inverse_properties(&l);
        assert!(ip.right_ip, "{name}: Bol loops have the right inverse property");
        if ip.left_ip {
            assert!(is_moufang(&l).holds, "{name}: left inverse property forces Moufang");
        }
    }
}

#[test]
fn b8_properties() {
    let b8 = bolkit::io::read_loop(&common::read("bol8/b8.tbl")).unwrap();
    let ip = inverse_properties(&b8);
    assert!(ip.right_ip && !ip.left_ip);
    assert!(!is_associative(&b8).holds);
    for x in b8.elements() {
        let k = element_order(&b8, x);
        assert_eq!(8 % k, 0);
        assert_eq!(power(&b8, x, k as i64), 0);
        assert_eq!(power(&b8, x, 1), x);
    }
    let t = translations(&b8);
    let mut rights = t.rights.clone();
    rights.sort();
    rights.dedup();
    assert_eq!(rights.len(), 8);
    assert!(!is_simple_loop(&b8, CAP).unwrap());
    assert!(!is_strongly_simple(&b8, CAP).unwrap());
}

/// Every bracketing of `k` copies of `x` in a Bol loop gives the same element.
#[test]
fn bol_loops_are_power_associative() {
    fn all_products(l: &Loop, x: usize, k: usize, memo: &mut Vec<Vec<usize>>) -> Vec<usize> {
        if k < memo.len() {
            return memo[k].clone();
        }
        let mut out = Vec::new();
        for i in 1..k {
            let left = all_products(l, x, i, memo);
            let right = all_products(l, x, k - i, memo);
            for &a in &left {
                for &b in &right {
                    out.push(l.mul(a, b));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        memo.push(out.clone());
        out
    }
    for (name, l) in all_loops().into_iter().filter(|(_, l)| is_right_bol(l).holds) {
        for x in l.elements() {
            let mut memo = vec![vec![], vec![x]];
            for k in 2..=6 {
                let ps = all_products(&l, x, k, &mut memo);
                assert_eq!(ps, vec![power(&l, x, k as i64)], "{name}: x = {x}, k = {k}");
            }
        }
    }
}

#[test]
fn operator_form_matches_bol() {
    for (name, l) in all_loops() {
        let t = translations(&l);
        let operator = l.elements().all(|y| {
            l.elements().all(|z| {
                let lhs = t.rights[y].then(&t.rights[z]).then(&t.rights[y]);
                lhs == t.rights[l.mul(l.mul(y, z), y)]
            })
        });
        assert_eq!(operator, is_right_bol(&l).holds, "{name}");
    }
}

#[test]
fn multiplication_groups_are_transitive() {
    for (name, l) in common::corpus_loops().into_iter().filter(|(_, l)| l.order() <= 24) {
        let r = mult_group(&l, Side::Full, CAP).unwrap();
        assert_eq!(r.group.order() % l.order(), 0, "{name}");
        assert!(r.group.is_transitive(), "{name}");
        assert_eq!(r.group.order(), r.inner.order() * l.order(), "{name}");
        let stab = stabilizer(&r.group, 0);
        assert_eq!(stab, r.inner);
    }
}

#[test]
fn group_multiplication_groups() {
    // |Gr(G)| = |G|^2 / |Z(G)|
    for (name, center) in [("Z3", 3), ("S3", 1), ("Q8", 2), ("A5", 1)] {
        let g = groups::by_name(name).unwrap();
        let n = g.order();
        let z = g.elements().filter(|&a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a))).count();
        assert_eq!(z, center);
        assert_eq!(mult_group(&g, Side::Right, CAP).unwrap().group.order(), n, "{name}");
        assert_eq!(mult_group(&g, Side::Full, CAP).unwrap().group.order(), n * n / center, "{name}");
    }
}

#[test]
fn normal_subloops_of_chein_doubles() {
    // G x {0} has index 2 in M(G, 2), so it is normal.
    let m = bolkit::io::read_loop(&common::read("chein/m_s3.tbl")).unwrap();
    let closure = normal_subloop_closure(&m, &[1], CAP).unwrap();
    assert!(closure.len() < 12 && 12 % closure.len() == 0);
    assert!(!is_simple_loop(&m, CAP).unwrap());
}

#[test]
fn scan_marks_strongly_simple_groups() {
    let loops: Vec<(String, Loop)> = ["Z5", "A5", "Z6"]
        .iter()
        .map(|n| (n.to_string(), groups::by_name(n).unwrap()))
        .collect();
    let r = strong_simplicity_scan(&loops, CAP).unwrap();
    let strong: Vec<Option<bool>> = r.entries.iter().map(|e| e.strongly_simple).collect();
    assert_eq!(strong, vec![Some(true), Some(true), Some(false)]);
    assert!(r.candidates.is_empty());
}
