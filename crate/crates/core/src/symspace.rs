//! Finite symmetric spaces and the two spaces attached to a group with an
//! involutory automorphism.
//!
//! A symmetric space is a set with a product `x.y` such that `x.x = x`,
//! `x.(x.y) = y` and `x.(y.z) = (x.y).(x.z)`. Given a group `G` and an
//! involutory automorphism `σ`, both the twisted set
//! `G_σ = { x^-1 σ(x) }` with `x.y = x y^-1 x` and the right cosets of the
//! fixed subgroup `I_σ` with `I_σ x . I_σ y = I_σ σ(y) σ(x)^-1 x` are
//! symmetric spaces, and `ψ(I_σ x) = x^-1 σ(x)` is an isomorphism between them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{check_law_naive, is_associative, Counterexample, IdentityWitness, Law, Loop, Magma};

/// Checks the three symmetric-space axioms in order: idempotence over `x`,
/// left symmetry over `(x, y)`, then left distributivity.
pub fn check_symspace(m: &Magma) -> IdentityWitness {
    let n = m.order();
    let fail = |law: Law, x: usize, y: usize| {
        let (lhs, rhs) = law.eval(m, x, y, 0);
        IdentityWitness::from_counterexample(Some(Counterexample {
            law,
            x,
            y,
            z: 0,
            lhs,
            rhs,
        }))
    };
    if let Some(x) = (0..n).find(|&x| m.mul(x, x) != x) {
        return fail(Law::Idempotent, x, 0);
    }
    for x in 0..n {
        if let Some(y) = (0..n).find(|&y| m.mul(x, m.mul(x, y)) != y) {
            return fail(Law::LeftSymmetric, x, y);
        }
    }
    check_law_naive(m, Law::LeftDistributive)
}

/// A finite symmetric space, optionally punctured at a base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSpace {
    dot: Magma,
    base: Option<usize>,
}

impl SymSpace {
    pub fn new(dot: Magma, base: Option<usize>) -> Result<Self> {
        if let Some(e) = base {
            if e >= dot.order() {
                return Err(Error::Invalid(format!("base point {e} out of range")));
            }
        }
        let w = check_symspace(&dot);
        if let Some(c) = w.counterexample {
            return Err(Error::AxiomFailure(format!(
                "{:?} fails at ({}, {}, {}): {} != {}",
                c.law, c.x, c.y, c.z, c.lhs, c.rhs
            )));
        }
        Ok(SymSpace { dot, base })
    }

    pub fn order(&self) -> usize {
        self.dot.order()
    }

    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.dot.mul(x, y)
    }

    pub fn table(&self) -> &Magma {
        &self.dot
    }

    pub fn base(&self) -> Option<usize> {
        self.base
    }

    fn require_base(&self) -> Result<usize> {
        self.base
            .ok_or_else(|| Error::Invalid("operation needs a punctured space".into()))
    }
}

/// Powers relative to the base point `e`: `x^0 = e`, `x^1 = x`,
/// `x^(k+2) = x.(e.x^k)` and `x^-k = e.x^k`.
pub fn space_power(s: &SymSpace, x: usize, k: i64) -> Result<usize> {
    let e = s.require_base()?;
    let m = k.unsigned_abs();
    // Walk the two interleaved chains x^0, x^2, ... and x^1, x^3, ...
    let mut p = if m % 2 == 0 { e } else { x };
    for _ in 0..m / 2 {
        p = s.dot(x, s.dot(e, p));
    }
    Ok(if k < 0 { s.dot(e, p) } else { p })
}

/// `(x.y)^-1 = x^-1 . y^-1` for all pairs, where `x^-1 = e.x`.
pub fn inversion_automorphism_check(s: &SymSpace) -> Result<bool> {
    let e = s.require_base()?;
    let n = s.order();
    let inv = |x| s.dot(e, x);
    Ok((0..n).all(|x| (0..n).all(|y| inv(s.dot(x, y)) == s.dot(inv(x), inv(y)))))
}

/// Checks that `map` is a homomorphism of spaces; for punctured spaces it
/// must also send base point to base point.
pub fn validate_space_map(from: &SymSpace, to: &SymSpace, map: &[usize]) -> Result<()> {
    let n = from.order();
    if map.len() != n || map.iter().any(|&v| v >= to.order()) {
        return Err(Error::Invalid("space map has the wrong length or range".into()));
    }
    if let (Some(a), Some(b)) = (from.base, to.base) {
        if map[a] != b {
            return Err(Error::Invalid(format!(
                "base point {a} maps to {} instead of {b}",
                map[a]
            )));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if map[from.dot(x, y)] != to.dot(map[x], map[y]) {
                return Err(Error::HomomorphismFailure(x, y));
            }
        }
    }
    Ok(())
}

/// `G⁺`: the group as a space with `x.y = x y^-1 x`, punctured at the identity.
pub fn group_plus(group: &Loop) -> Result<SymSpace> {
    let dot = Magma::from_fn(group.order(), |x, y| group.mul(group.mul(x, group.inv(y)), x));
    SymSpace::new(dot, Some(0))
}

/// A finite group with an involutory automorphism `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWithInvolution {
    group: Loop,
    sigma: Vec<usize>,
}

impl GroupWithInvolution {
    /// Rejects the identity map; use [`GroupWithInvolution::trivial`] for that.
    pub fn new(group: Loop, sigma: Vec<usize>) -> Result<Self> {
        let gw = Self::checked(group, sigma)?;
        if gw.is_trivial() {
            return Err(Error::InvalidInvolution(
                "sigma is the identity; build it with `trivial` if intended".into(),
            ));
        }
        Ok(gw)
    }

    /// The group with `σ = id`.
    pub fn trivial(group: Loop) -> Result<Self> {
        let n = group.order();
        Self::checked(group, (0..n).collect())
    }

    /// Conjugation `σ(x) = t^-1 x t`, an involution when `t` is not central
    /// but `t^2` is.
    pub fn conjugation(group: Loop, t: usize) -> Result<Self> {
        let ti = group.inv(t);
        let sigma = (0..group.order())
            .map(|x| group.mul(group.mul(ti, x), t))
            .collect();
        Self::new(group, sigma)
    }

    /// Inversion `x -> x^-1`, an automorphism only for abelian groups.
    pub fn inversion(group: Loop) -> Result<Self> {
        let sigma = (0..group.order()).map(|x| group.inv(x)).collect();
        Self::new(group, sigma)
    }

    /// `K x K` with `σ(a, b) = (b, a)`, using the layout of `direct_product`.
    pub fn swap(factor: &Loop) -> Result<Self> {
        let m = factor.order();
        let group = crate::corpus::groups::direct_product(factor, factor);
        let sigma = (0..m * m).map(|x| (x % m) * m + x / m).collect();
        Self::new(group, sigma)
    }

    fn checked(group: Loop, sigma: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if let Some(c) = is_associative(&group).counterexample {
            return Err(Error::InvalidGroup(format!(
                "not associative at {:?}",
                c.triple()
            )));
        }
        if sigma.len() != n || sigma.iter().any(|&v| v >= n) {
            return Err(Error::InvalidInvolution("sigma has the wrong length or range".into()));
        }
        if let Some(x) = (0..n).find(|&x| sigma[sigma[x]] != x) {
            return Err(Error::InvalidInvolution(format!("sigma(sigma({x})) != {x}")));
        }
        for x in 0..n {
            if let Some(y) = (0..n).find(|&y| sigma[group.mul(x, y)] != group.mul(sigma[x], sigma[y])) {
                return Err(Error::InvalidInvolution(format!(
                    "sigma is not multiplicative at ({x}, {y})"
                )));
            }
        }
        Ok(GroupWithInvolution { group, sigma })
    }

    pub fn group(&self) -> &Loop {
        &self.group
    }

    pub fn sigma(&self, x: usize) -> usize {
        self.sigma[x]
    }

    pub fn sigma_map(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_trivial(&self) -> bool {
        self.sigma.iter().enumerate().all(|(x, &s)| x == s)
    }

    /// `x^-1 σ(x)`.
    pub fn twist(&self, x: usize) -> usize {
        self.group.mul(self.group.inv(x), self.sigma[x])
    }
}

/// The subgroup generated by `set`, as sorted element indices.
pub fn subgroup_generated(group: &Loop, set: &[usize]) -> Vec<usize> {
    let mut flags = vec![false; group.order()];
    let mut members = vec![0];
    flags[0] = true;
    for &s in set {
        if !flags[s] {
            flags[s] = true;
            members.push(s);
        }
    }
    let gens: Vec<usize> = members.clone();
    let mut i = 0;
    while i < members.len() {
        for &g in &gens {
            let p = group.mul(members[i], g);
            if !flags[p] {
                flags[p] = true;
                members.push(p);
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

/// `I_σ`, the fixed points of `σ`.
pub fn fixed_subgroup(gw: &GroupWithInvolution) -> Vec<usize> {
    let fixed: Vec<usize> = (0..gw.group.order()).filter(|&x| gw.sigma(x) == x).collect();
    debug_assert_eq!(subgroup_generated(&gw.group, &fixed), fixed);
    fixed
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistedSet {
    /// `G_σ`, sorted.
    pub elements: Vec<usize>,
    /// `N = <G_σ>`, sorted.
    pub generated: Vec<usize>,
}

pub fn twisted_set(gw: &GroupWithInvolution) -> TwistedSet {
    let mut elements: Vec<usize> = (0..gw.group.order()).map(|x| gw.twist(x)).collect();
    elements.sort_unstable();
    elements.dedup();
    let generated = subgroup_generated(&gw.group, &elements);
    TwistedSet {
        elements,
        generated,
    }
}

/// A space whose points are labelled by a sorted list of group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarrierSpace {
    pub space: SymSpace,
    pub carrier: Vec<usize>,
}

/// `G_σ` with `x.y = x y^-1 x`, punctured at the identity.
pub fn space_on_twisted_set(gw: &GroupWithInvolution) -> Result<CarrierSpace> {
    let carrier = twisted_set(gw).elements;
    let g = &gw.group;
    let index = |v: usize| {
        carrier
            .binary_search(&v)
            .map_err(|_| Error::AxiomFailure(format!("G_sigma is not closed: {v} missing")))
    };
    let k = carrier.len();
    let mut rows = Vec::with_capacity(k);
    for &x in &carrier {
        let mut row = Vec::with_capacity(k);
        for &y in &carrier {
            row.push(index(g.mul(g.mul(x, g.inv(y)), x))? as i64);
        }
        rows.push(row);
    }
    // The identity is in G_σ and is the smallest element.
    let space = SymSpace::new(Magma::from_rows(&rows)?, Some(0))?;
    Ok(CarrierSpace { space, carrier })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    pub space: SymSpace,
    /// Right cosets `I_σ x`, each sorted, ordered by minimal element.
    pub cosets: Vec<Vec<usize>>,
    /// `coset_of[g]`: index of the coset containing `g`.
    pub coset_of: Vec<usize>,
}

/// Right cosets `H x` of a subgroup given as sorted element indices.
pub fn right_cosets(group: &Loop, subgroup: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = subgroup.iter().map(|&h| group.mul(h, x)).collect();
        coset.sort_unstable();
        for &c in &coset {
            coset_of[c] = cosets.len();
        }
        cosets.push(coset);
    }
    (cosets, coset_of)
}

/// Right cosets of `I_σ` with `I_σ x . I_σ y = I_σ σ(y) σ(x)^-1 x`, evaluated
/// on every pair of representatives.
pub fn coset_space(gw: &GroupWithInvolution) -> Result<CosetSpace> {
    let g = &gw.group;
    let (cosets, coset_of) = right_cosets(g, &fixed_subgroup(gw));
    let k = cosets.len();
    let mut rows = vec![vec![0i64; k]; k];
    for a in 0..k {
        for b in 0..k {
            let mut value = None;
            for &x in &cosets[a] {
                for &y in &cosets[b] {
                    let p = g.mul(g.mul(gw.sigma(y), g.inv(gw.sigma(x))), x);
                    let c = coset_of[p];
                    if *value.get_or_insert(c) != c {
                        return Err(Error::IllDefined(a, b));
                    }
                }
            }
            rows[a][b] = value.expect("cosets are nonempty") as i64;
        }
    }
    let space = SymSpace::new(Magma::from_rows(&rows)?, Some(0))?;
    Ok(CosetSpace {
        space,
        cosets,
        coset_of,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiVerdict {
    pub well_defined: bool,
    pub bijective: bool,
    pub preserves_dot: bool,
    /// First failing coset (or coset pair) when a check fails.
    pub witness: Option<(usize, usize)>,
}

impl PsiVerdict {
    pub fn holds(&self) -> bool {
        self.well_defined && self.bijective && self.preserves_dot
    }
}

/// Verifies that `ψ(I_σ x) = x^-1 σ(x)` is an isomorphism from the coset
/// space onto the twisted-set space.
pub fn psi_isomorphism_check(gw: &GroupWithInvolution) -> Result<PsiVerdict> {
    let cs = coset_space(gw)?;
    let ts = space_on_twisted_set(gw)?;
    let mut verdict = PsiVerdict {
        well_defined: true,
        bijective: true,
        preserves_dot: true,
        witness: None,
    };
    let mut psi = Vec::with_capacity(cs.cosets.len());
    for (a, coset) in cs.cosets.iter().enumerate() {
        let image = gw.twist(coset[0]);
        if let Some(&x) = coset.iter().find(|&&x| gw.twist(x) != image) {
            verdict.well_defined = false;
            verdict.witness = Some((a, x));
            return Ok(verdict);
        }
        psi.push(image);
    }
    let mut sorted = psi.clone();
    sorted.sort_unstable();
    if sorted != ts.carrier {
        verdict.bijective = false;
        return Ok(verdict);
    }
    let point = |v: usize| ts.carrier.binary_search(&v).expect("psi lands in G_sigma");
    let k = psi.len();
    for a in 0..k {
        for b in 0..k {
            if point(psi[cs.space.dot(a, b)]) != ts.space.dot(point(psi[a]), point(psi[b])) {
                verdict.preserves_dot = false;
                verdict.witness = Some((a, b));
                return Ok(verdict);
            }
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::groups;

    fn z5_negation() -> GroupWithInvolution {
        GroupWithInvolution::inversion(groups::cyclic(5)).unwrap()
    }

    fn z3z3_swap() -> GroupWithInvolution {
        GroupWithInvolution::swap(&groups::cyclic(3)).unwrap()
    }

    #[test]
    fn axioms() {
        assert!(check_symspace(&Magma::from_fn(1, |_, _| 0)).holds);
        assert!(check_symspace(&Magma::from_fn(5, |x, y| (2 * x + 5 - y) % 5)).holds);
        let c = check_symspace(&Magma::from_fn(3, |x, y| (x + y) % 3)).counterexample.unwrap();
        assert_eq!((c.law, c.x), (Law::Idempotent, 1));
        let bad = SymSpace::new(Magma::from_fn(3, |x, y| (x + y) % 3), None);
        assert!(matches!(bad, Err(Error::AxiomFailure(_))));
    }

    #[test]
    fn fixed_and_twisted_sets() {
        let z5 = z5_negation();
        assert_eq!(fixed_subgroup(&z5), vec![0]);
        let t = twisted_set(&z5);
        assert_eq!(t.elements, vec![0, 1, 2, 3, 4]);
        assert_eq!(t.generated.len(), 5);

        let sw = z3z3_swap();
        // (a, b) is stored as 3a + b.
        assert_eq!(fixed_subgroup(&sw), vec![0, 4, 8]);
        let t = twisted_set(&sw);
        assert_eq!(t.elements, vec![0, 5, 7]); // (c, -c)
        assert_eq!(t.generated, vec![0, 5, 7]);

        let triv = GroupWithInvolution::trivial(groups::cyclic(4)).unwrap();
        assert_eq!(fixed_subgroup(&triv), vec![0, 1, 2, 3]);
        assert_eq!(twisted_set(&triv).elements, vec![0]);
    }

    #[test]
    fn twisted_space_of_z5() {
        let cs = space_on_twisted_set(&z5_negation()).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(cs.space.dot(x, y), (2 * x + 5 - y) % 5);
            }
        }
        // x^k = k x
        for x in 0..5 {
            for k in -7i64..=7 {
                assert_eq!(space_power(&cs.space, x, k).unwrap(), (k * x as i64).rem_euclid(5) as usize);
            }
        }
        assert!(inversion_automorphism_check(&cs.space).unwrap());
    }

    #[test]
    fn coset_spaces_and_psi() {
        for gw in [z5_negation(), z3z3_swap(), GroupWithInvolution::trivial(groups::cyclic(3)).unwrap()] {
            let cs = coset_space(&gw).unwrap();
            let ts = space_on_twisted_set(&gw).unwrap();
            assert_eq!(cs.space.order(), ts.space.order());
            assert!(psi_isomorphism_check(&gw).unwrap().holds());
        }
        assert_eq!(coset_space(&z3z3_swap()).unwrap().cosets.len(), 3);
        assert_eq!(coset_space(&GroupWithInvolution::trivial(groups::cyclic(3)).unwrap()).unwrap().cosets.len(), 1);
    }

    #[test]
    fn involution_validation() {
        let z4 = groups::cyclic(4);
        assert!(GroupWithInvolution::new(z4.clone(), vec![0, 1, 2, 3]).is_err());
        // x -> x + 1 is not an automorphism.
        assert!(GroupWithInvolution::new(z4.clone(), vec![1, 0, 3, 2]).is_err());
        // x -> 3x has order 2.
        assert!(GroupWithInvolution::new(z4, vec![0, 3, 2, 1]).is_ok());
        assert!(GroupWithInvolution::inversion(groups::symmetric3()).is_err());
        let s3 = groups::symmetric3();
        let t = (1..6).find(|&x| s3.mul(x, x) == 0).unwrap();
        assert!(GroupWithInvolution::conjugation(s3.clone(), t).is_ok());
        // Conjugation by a 3-cycle has order 3.
        let c = (1..6).find(|&x| s3.mul(x, x) != 0).unwrap();
        assert!(matches!(GroupWithInvolution::conjugation(s3, c), Err(Error::InvalidInvolution(_))));
        // In Q8 conjugation by an element of order 4 is an involution.
        let q8 = groups::quaternion8();
        let i = (1..8).find(|&x| q8.mul(x, x) != 0).unwrap();
        assert!(GroupWithInvolution::conjugation(q8, i).is_ok());
    }

    #[test]
    fn group_plus_of_s3() {
        let s = group_plus(&groups::symmetric3()).unwrap();
        assert!(inversion_automorphism_check(&s).unwrap());
        assert_eq!(space_power(&s, 3, 0).unwrap(), 0);
        assert_eq!(space_power(&s, 3, 1).unwrap(), 3);
        assert_eq!(space_power(&s, 3, -1).unwrap(), s.dot(0, 3));
    }

    #[test]
    fn space_maps_keep_base_points() {
        let s = group_plus(&groups::cyclic(5)).unwrap();
        let id: Vec<usize> = (0..5).collect();
        assert!(validate_space_map(&s, &s, &id).is_ok());
        // x -> x + 1 preserves 2x - y but moves the base point.
        let shift: Vec<usize> = (0..5).map(|x| (x + 1) % 5).collect();
        assert!(validate_space_map(&s, &s, &shift).is_err());
        let unpunctured = SymSpace::new(s.table().clone(), None).unwrap();
        assert!(validate_space_map(&unpunctured, &unpunctured, &shift).is_ok());
    }
}
