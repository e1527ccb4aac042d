//! Multiplication groups of loops, normal subloops and simplicity.
//!
//! Translations act on the right: `y R_x = yx` and `y L_x = xy`. The right
//! multiplication group `Gr_r` is generated by all `R_x`, `Gr_l` by all
//! `L_x`, and the full group `Gr` by both. Inner mappings are the stabilizer
//! of the identity in `Gr`.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::perm::Perm;
use crate::permgroup::{self, closure, intersection, is_normal, stabilizer, PermGroup};
use crate::table::{is_moufang, is_right_bol, Loop};

#[derive(Debug, Clone)]
pub struct TranslationSet {
    pub rights: Vec<Perm>,
    pub lefts: Vec<Perm>,
}

pub fn translations(l: &Loop) -> TranslationSet {
    let n = l.order();
    TranslationSet {
        rights: (0..n).map(|x| Perm::from_images_unchecked(l.column(x))).collect(),
        lefts: (0..n)
            .map(|x| Perm::from_images_unchecked(l.row(x).to_vec()))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
    Full,
}

impl std::str::FromStr for Side {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            "full" | "both" => Ok(Side::Full),
            _ => Err(crate::Error::Invalid(format!("unknown side {s:?}"))),
        }
    }
}

fn group_of(l: &Loop, gens: Vec<Perm>, cap: usize) -> Result<PermGroup> {
    let mut seen = HashSet::new();
    let gens: Vec<Perm> = gens
        .into_iter()
        .filter(|p| !p.is_identity() && seen.insert(p.clone()))
        .collect();
    if gens.is_empty() {
        return Ok(PermGroup::trivial(l.order()));
    }
    closure(&gens, cap)
}

/// The multiplication group on one side, without the simplicity analysis.
pub fn multiplication_group(l: &Loop, side: Side, cap: usize) -> Result<PermGroup> {
    let t = translations(l);
    let gens = match side {
        Side::Right => t.rights,
        Side::Left => t.lefts,
        Side::Full => t.rights.into_iter().chain(t.lefts).collect(),
    };
    group_of(l, gens, cap)
}

#[derive(Debug, Clone)]
pub struct MultGroupReport {
    pub side: Side,
    pub group: PermGroup,
    /// Stabilizer of the identity element.
    pub inner: PermGroup,
    pub simple: bool,
}

pub fn mult_group(l: &Loop, side: Side, cap: usize) -> Result<MultGroupReport> {
    let group = multiplication_group(l, side, cap)?;
    let inner = stabilizer(&group, 0);
    let simple = permgroup::is_simple_group(&group);
    Ok(MultGroupReport {
        side,
        group,
        inner,
        simple,
    })
}

/// `R_x R_y R_{xy}^-1`, which fixes the identity.
pub fn right_inner_generator(t: &TranslationSet, l: &Loop, x: usize, y: usize) -> Perm {
    t.rights[x].then(&t.rights[y]).then(&t.rights[l.mul(x, y)].inverse())
}

/// Checks that the maps `R_x R_y R_{xy}^-1` generate exactly the stabilizer
/// of the identity in `Gr_r`.
pub fn inner_generator_check(l: &Loop, cap: usize) -> Result<bool> {
    let t = translations(l);
    let gr_r = multiplication_group(l, Side::Right, cap)?;
    let stab = stabilizer(&gr_r, 0);
    let n = l.order();
    let gens: Vec<Perm> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| right_inner_generator(&t, l, x, y))
        .collect();
    let generated = group_of(l, gens, cap)?;
    Ok(generated == stab)
}

/// Precomputed inner mapping group for repeated normal-subloop closures.
pub struct NormalityContext<'a> {
    l: &'a Loop,
    inner: PermGroup,
}

impl<'a> NormalityContext<'a> {
    pub fn new(l: &'a Loop, cap: usize) -> Result<Self> {
        let gr = multiplication_group(l, Side::Full, cap)?;
        Ok(NormalityContext {
            l,
            inner: stabilizer(&gr, 0),
        })
    }

    pub fn inner(&self) -> &PermGroup {
        &self.inner
    }

    /// Smallest subset containing `seed` and `0` that is closed under
    /// multiplication, both divisions and every inner mapping. Sorted.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let l = self.l;
        let mut flags = vec![false; l.order()];
        let mut members = Vec::new();
        let add = |x: usize, flags: &mut Vec<bool>, members: &mut Vec<usize>| {
            if !flags[x] {
                flags[x] = true;
                members.push(x);
            }
        };
        add(0, &mut flags, &mut members);
        for &x in seed {
            add(x, &mut flags, &mut members);
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for g in self.inner.generators() {
                add(g.apply(a), &mut flags, &mut members);
            }
            for j in 0..=i {
                let b = members[j];
                for p in [
                    l.mul(a, b),
                    l.mul(b, a),
                    l.left_div(a, b),
                    l.left_div(b, a),
                    l.right_div(a, b),
                    l.right_div(b, a),
                ] {
                    add(p, &mut flags, &mut members);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn is_simple(&self) -> bool {
        let n = self.l.order();
        n > 1 && (1..n).all(|x| self.closure(&[x]).len() == n)
    }
}

pub fn normal_subloop_closure(l: &Loop, seed: &[usize], cap: usize) -> Result<Vec<usize>> {
    Ok(NormalityContext::new(l, cap)?.closure(seed))
}

/// No proper nontrivial normal subloops. The one-element loop is not simple.
pub fn is_simple_loop(l: &Loop, cap: usize) -> Result<bool> {
    if l.order() == 1 {
        return Ok(false);
    }
    Ok(NormalityContext::new(l, cap)?.is_simple())
}

/// `Gr_r` is a simple group.
pub fn is_strongly_simple(l: &Loop, cap: usize) -> Result<bool> {
    let gr_r = multiplication_group(l, Side::Right, cap)?;
    Ok(permgroup::is_simple_group(&gr_r))
}

/// The implication "strongly simple => simple"; never false on a correct build.
pub fn strong_implies_simple_check(l: &Loop, cap: usize) -> Result<bool> {
    Ok(!is_strongly_simple(l, cap)? || is_simple_loop(l, cap)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrShape {
    /// `Gr` is simple and the loop is Moufang.
    SimpleGr,
    /// `Gr_l` is normal and `Gr = Gr_l ⋊ Gr_r`.
    Semidirect,
    /// `Gr = Gr_l × H` for a normal `H ≅ Gr_r`.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectEvidence {
    pub h_order: usize,
    pub h_meets_left: usize,
    pub h_commutes_with_left: bool,
    /// The projection `Gr_r -> H` along `Gr_l` is a bijective homomorphism.
    pub projection_isomorphism: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrShapeReport {
    pub applicable: bool,
    pub gr_order: usize,
    pub gr_left_order: usize,
    pub gr_right_order: usize,
    pub gr_simple: bool,
    pub moufang: bool,
    pub left_normal: bool,
    pub left_meets_right: usize,
    pub normal_subgroup_orders: Vec<usize>,
    pub direct: Option<DirectEvidence>,
    /// Every case whose conditions were verified; not necessarily just one.
    pub realized: Vec<GrShape>,
}

impl GrShapeReport {
    fn not_applicable() -> Self {
        GrShapeReport {
            applicable: false,
            gr_order: 0,
            gr_left_order: 0,
            gr_right_order: 0,
            gr_simple: false,
            moufang: false,
            left_normal: false,
            left_meets_right: 0,
            normal_subgroup_orders: Vec::new(),
            direct: None,
            realized: Vec::new(),
        }
    }
}

/// Writes each element of `gr_r` as `l h` with `l` in `left`, `h` in `h`, and
/// checks that `r -> h` is a bijective homomorphism onto `h`.
fn projection_is_isomorphism(gr_r: &PermGroup, left: &PermGroup, h: &PermGroup) -> bool {
    let mut image = Vec::with_capacity(gr_r.order());
    for r in gr_r.elements() {
        let parts: Vec<Perm> = left
            .elements()
            .iter()
            .map(|l| l.inverse().then(r))
            .filter(|x| h.contains(x))
            .collect();
        if parts.len() != 1 {
            return false;
        }
        image.push(parts.into_iter().next().expect("one part"));
    }
    let distinct: HashSet<&Perm> = image.iter().collect();
    if distinct.len() != h.order() || gr_r.order() != h.order() {
        return false;
    }
    let elements = gr_r.elements();
    gr_r.generators().iter().all(|g| {
        let gi = gr_r.index_of(g).expect("generators are elements");
        elements.iter().enumerate().all(|(a, ea)| {
            let prod = gr_r.index_of(&ea.then(g)).expect("closed");
            image[prod] == image[a].then(&image[gi])
        })
    })
}

/// Which of the three structural cases for `Gr(S)` of a strongly simple loop
/// are realised. Loops that are not strongly simple are not applicable.
pub fn classify_gr_shape(l: &Loop, cap: usize) -> Result<GrShapeReport> {
    let gr_r = multiplication_group(l, Side::Right, cap)?;
    if !permgroup::is_simple_group(&gr_r) {
        return Ok(GrShapeReport::not_applicable());
    }
    let gr = multiplication_group(l, Side::Full, cap)?;
    let gr_l = multiplication_group(l, Side::Left, cap)?;
    let gr_simple = permgroup::is_simple_group(&gr);
    let moufang = is_moufang(l).holds;
    let left_normal = is_normal(&gr, &gr_l)?;
    let left_meets_right = intersection(&gr_l, &gr_r).order();
    let normals = permgroup::normal_subgroups(&gr);

    let mut realized = Vec::new();
    if gr_simple && moufang {
        realized.push(GrShape::SimpleGr);
    }
    if left_normal && left_meets_right == 1 && gr_l.order() * gr_r.order() == gr.order() {
        realized.push(GrShape::Semidirect);
    }
    let direct = normals
        .iter()
        .filter(|h| h.order() == gr_r.order() && gr_l.order() * h.order() == gr.order())
        .find_map(|h| {
            let meets = intersection(h, &gr_l).order();
            let commutes = h.generators().iter().all(|a| {
                gr_l.generators()
                    .iter()
                    .all(|b| a.then(b) == b.then(a))
            });
            if meets != 1 || !commutes {
                return None;
            }
            Some(DirectEvidence {
                h_order: h.order(),
                h_meets_left: meets,
                h_commutes_with_left: commutes,
                projection_isomorphism: left_meets_right == 1
                    && projection_is_isomorphism(&gr_r, &gr_l, h),
            })
        });
    if direct.as_ref().is_some_and(|d| d.projection_isomorphism) {
        realized.push(GrShape::Direct);
    }
    Ok(GrShapeReport {
        applicable: true,
        gr_order: gr.order(),
        gr_left_order: gr_l.order(),
        gr_right_order: gr_r.order(),
        gr_simple,
        moufang,
        left_normal,
        left_meets_right,
        normal_subgroup_orders: normals.iter().map(|h| h.order()).collect(),
        direct,
        realized,
    })
}

/// `sum_{k=1}^{n} n!/(n-k)!`, exactly.
pub fn falling_factorial_sum(n: usize) -> BigUint {
    let mut sum = BigUint::zero();
    let mut term = BigUint::one();
    for k in 1..=n {
        term *= BigUint::from(n - k + 1);
        sum += &term;
    }
    sum
}

/// Upper bound `(1/2) sum_{k=1}^{n} n!/(n-k)!` on `|Gr_r|`, as an exact rational.
pub fn mult_group_bound(n: usize) -> BigRational {
    let sum = falling_factorial_sum(n);
    BigRational::new(sum.into(), 2.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub order: usize,
    pub gr_right_order: usize,
    /// The exact bound as a reduced fraction.
    pub bound: String,
    /// The bound rounded up, which is what `holds` compares against.
    pub bound_ceiling: String,
    pub holds: bool,
}

pub fn bound_check(l: &Loop, cap: usize) -> Result<BoundCheck> {
    let gr_r = multiplication_group(l, Side::Right, cap)?;
    let n = l.order();
    let bound = mult_group_bound(n);
    let ceiling = bound.ceil().to_integer();
    // Equivalent to the exact comparison for n >= 2; at n = 1 the exact
    // bound is 1/2 and the ceiling keeps the trivial loop within it.
    let holds = num_bigint::BigInt::from(gr_r.order()) <= ceiling;
    Ok(BoundCheck {
        order: n,
        gr_right_order: gr_r.order(),
        bound: bound.to_string(),
        bound_ceiling: ceiling.to_string(),
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub name: String,
    pub order: usize,
    pub right_bol: bool,
    pub moufang: bool,
    pub gr_right_order: Option<usize>,
    pub strongly_simple: Option<bool>,
    pub simple: Option<bool>,
    pub candidate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ScanReport {
    pub entries: Vec<ScanEntry>,
    /// Names of strongly simple Bol loops that are not Moufang.
    pub candidates: Vec<String>,
}

/// Records strong simplicity and the Moufang law for every Bol loop in the
/// corpus and flags strongly simple non-Moufang entries. Non-Bol entries are
/// listed but not analysed.
pub fn strong_simplicity_scan(corpus: &[(String, Loop)], cap: usize) -> Result<ScanReport> {
    let mut report = ScanReport::default();
    for (name, l) in corpus {
        let right_bol = is_right_bol(l).holds;
        let moufang = is_moufang(l).holds;
        let mut entry = ScanEntry {
            name: name.clone(),
            order: l.order(),
            right_bol,
            moufang,
            gr_right_order: None,
            strongly_simple: None,
            simple: None,
            candidate: false,
        };
        if right_bol {
            let gr_r = multiplication_group(l, Side::Right, cap)?;
            let strong = permgroup::is_simple_group(&gr_r);
            entry.gr_right_order = Some(gr_r.order());
            entry.strongly_simple = Some(strong);
            entry.simple = Some(is_simple_loop(l, cap)?);
            entry.candidate = strong && !moufang;
        }
        if entry.candidate {
            report.candidates.push(name.clone());
        }
        report.entries.push(entry);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::groups;
    use crate::permgroup::DEFAULT_CLOSURE_CAP as CAP;

    #[test]
    fn translations_of_z3() {
        let t = translations(&groups::cyclic(3));
        assert_eq!(t.rights[1], Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap());
        assert!(t.rights[0].is_identity() && t.lefts[0].is_identity());
    }

    #[test]
    fn cyclic_groups() {
        let z5 = groups::cyclic(5);
        let r = mult_group(&z5, Side::Right, CAP).unwrap();
        assert_eq!(r.group.order(), 5);
        assert!(r.simple && r.inner.is_trivial());
        assert!(is_strongly_simple(&z5, CAP).unwrap());
        assert!(is_simple_loop(&z5, CAP).unwrap());

        let z6 = groups::cyclic(6);
        assert!(!is_strongly_simple(&z6, CAP).unwrap());
        assert!(!is_simple_loop(&z6, CAP).unwrap());
        assert!(strong_implies_simple_check(&z6, CAP).unwrap());
        assert_eq!(normal_subloop_closure(&z6, &[3], CAP).unwrap(), vec![0, 3]);
        assert_eq!(normal_subloop_closure(&z6, &[2], CAP).unwrap(), vec![0, 2, 4]);
        assert_eq!(normal_subloop_closure(&z6, &[0], CAP).unwrap(), vec![0]);
    }

    #[test]
    fn central_involution_of_q8_is_normal() {
        let q8 = groups::quaternion8();
        let z = (1..8).find(|&x| crate::table::element_order(&q8, x) == 2).unwrap();
        assert_eq!(normal_subloop_closure(&q8, &[z], CAP).unwrap(), vec![0, z]);
    }

    #[test]
    fn s3_full_group_and_stabilizer() {
        let s3 = groups::symmetric3();
        let full = mult_group(&s3, Side::Full, CAP).unwrap();
        assert_eq!(full.group.order(), 36);
        assert_eq!(full.inner.order(), 6);
        assert!(inner_generator_check(&s3, CAP).unwrap());
    }

    #[test]
    fn bound_values() {
        assert_eq!(falling_factorial_sum(1), BigUint::from(1u32));
        assert_eq!(mult_group_bound(3), BigRational::new(15.into(), 2.into()));
        assert_eq!(mult_group_bound(3).to_string(), "15/2");
        assert_eq!(mult_group_bound(1).to_string(), "1/2");
        let trivial = bound_check(&groups::cyclic(1), CAP).unwrap();
        assert_eq!((trivial.gr_right_order, trivial.bound_ceiling.as_str()), (1, "1"));
        assert!(trivial.holds);
        let c = bound_check(&groups::cyclic(3), CAP).unwrap();
        assert!(c.holds && c.gr_right_order == 3);
    }

    #[test]
    fn gr_shape_for_cyclic_prime() {
        let r = classify_gr_shape(&groups::cyclic(5), CAP).unwrap();
        assert!(r.applicable);
        assert_eq!(r.realized, vec![GrShape::SimpleGr]);
        assert!(!classify_gr_shape(&groups::cyclic(6), CAP).unwrap().applicable);
    }

    #[test]
    fn scan_edge_cases() {
        assert_eq!(strong_simplicity_scan(&[], CAP).unwrap(), ScanReport::default());
        let r = strong_simplicity_scan(&[("Z6".into(), groups::cyclic(6))], CAP).unwrap();
        assert_eq!(r.entries[0].strongly_simple, Some(false));
        assert!(r.candidates.is_empty());
    }
}
