use bolkit::corpus::groups;
use bolkit::io;
use bolkit::perm::Perm;
use bolkit::permgroup::{closure, conjugacy_classes, core, is_normal, is_simple_group, normal_closure, stabilizer};
use bolkit::table::{is_moufang, is_moufang_naive, is_right_bol, is_right_bol_naive, Magma};
use proptest::prelude::*;

const CAP: usize = 1 << 16;

fn magma() -> impl Strategy<Value = Magma> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |v| Magma::from_fn(n, |x, y| v[x * n + y]))
    })
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::new(v).unwrap())
}

/// Isotope of a group table: x o y = a(x) * b(y), relabelled by c.
fn isotope() -> impl Strategy<Value = Magma> {
    prop::sample::select(vec!["Z4", "Z2xZ2", "S3", "Z5"]).prop_flat_map(|name| {
        let g = groups::by_name(name).unwrap();
        let n = g.order();
        (perm(n), perm(n), perm(n)).prop_map(move |(a, b, c)| {
            Magma::from_fn(n, |x, y| c.apply(g.mul(a.apply(x), b.apply(y))))
        })
    })
}

proptest! {
    #[test]
    fn checkers_agree_on_random_magmas(m in magma()) {
        prop_assert_eq!(is_right_bol(&m), is_right_bol_naive(&m));
        prop_assert_eq!(is_moufang(&m), is_moufang_naive(&m));
        if let Some(c) = is_right_bol(&m).counterexample {
            prop_assert!(c.reproduces(&m));
        }
    }

    #[test]
    fn checkers_agree_on_isotopes(m in isotope()) {
        prop_assert_eq!(is_right_bol(&m), is_right_bol_naive(&m));
        prop_assert_eq!(is_moufang(&m), is_moufang_naive(&m));
    }

    #[test]
    fn table_text_round_trip(m in magma()) {
        prop_assert_eq!(io::read_magma(&io::write_table(&m)).unwrap(), m);
    }

    #[test]
    fn closure_ignores_generator_order(gens in prop::collection::vec(perm(5), 1..4), seed in any::<u64>()) {
        let mut shuffled = gens.clone();
        shuffled.rotate_left((seed as usize) % gens.len());
        shuffled.reverse();
        let a = closure(&gens, CAP).unwrap();
        let b = closure(&shuffled, CAP).unwrap();
        let mut ea = a.elements().to_vec();
        let mut eb = b.elements().to_vec();
        ea.sort();
        eb.sort();
        prop_assert_eq!(ea, eb);
    }

    #[test]
    fn orbit_stabilizer(gens in prop::collection::vec(perm(6), 1..3), point in 0usize..6) {
        let g = closure(&gens, CAP).unwrap();
        prop_assert_eq!(g.order(), g.orbit(point).len() * stabilizer(&g, point).order());
    }

    #[test]
    fn core_is_largest_normal_subgroup_inside(h_gens in prop::collection::vec(perm(4), 1..3)) {
        let s4 = closure(&[Perm::from_cycles(4, &[&[0, 1]]).unwrap(), Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()], CAP).unwrap();
        let h = closure(&h_gens, CAP).unwrap();
        let k = core(&s4, &h).unwrap();
        prop_assert!(k.is_subgroup_of(&h));
        prop_assert!(is_normal(&s4, &k).unwrap());
        // Oracle: intersection of all conjugates of H.
        let inside: Vec<&Perm> = h.elements().iter()
            .filter(|x| s4.elements().iter().all(|g| h.contains(&x.conjugate_by(g))))
            .collect();
        prop_assert_eq!(k.order(), inside.len());
    }
}

/// Simple iff the normal closure of every nonempty set of nontrivial class
/// representatives is the whole group.
fn simple_oracle(g: &bolkit::permgroup::PermGroup) -> bool {
    if g.order() == 1 {
        return false;
    }
    let reps: Vec<Perm> = conjugacy_classes(g)
        .into_iter()
        .map(|c| c[0].clone())
        .filter(|p| !p.is_identity())
        .collect();
    (1u32..1 << reps.len()).all(|mask| {
        let seed: Vec<Perm> = reps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()).collect();
        normal_closure(g, &seed).unwrap().order() == g.order()
    })
}

#[test]
fn simplicity_matches_class_oracle() {
    let cases: Vec<(&str, Vec<Perm>, bool)> = vec![
        ("Z5", vec![Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()], true),
        ("S3", vec![Perm::from_cycles(3, &[&[0, 1]]).unwrap(), Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()], false),
        ("A4", vec![Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap(), Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()], false),
        ("S4", vec![Perm::from_cycles(4, &[&[0, 1]]).unwrap(), Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()], false),
        ("A5", vec![Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(), Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()], true),
        ("A6", vec![Perm::from_cycles(6, &[&[0, 1, 2]]).unwrap(), Perm::from_cycles(6, &[&[1, 2, 3, 4, 5]]).unwrap()], true),
        ("trivial", vec![Perm::identity(3)], false),
    ];
    for (name, gens, expected) in cases {
        let g = closure(&gens, CAP).unwrap();
        assert_eq!(simple_oracle(&g), expected, "{name}");
        assert_eq!(is_simple_group(&g), expected, "{name}");
    }
}
