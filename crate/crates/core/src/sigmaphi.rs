//! Bol loops from groups with an involutory automorphism `σ` and a
//! homomorphism `φ: N -> G`, where `N = <G_σ>`.
//!
//! Such a pair gives a `(σ,φ)`-group when
//!
//! 1. `G` is generated by `φ(G_σ)` together with its image under `σ`;
//! 2. `φ(φ(x)^-1 σ(φ(x))) = φ(x)` for every `x` in `G_σ`;
//! 3. every right coset `I g` of `I = I_σ ∩ φ(N)` in `φ(N)` meets `φ(G_σ)`.
//!
//! The loop then lives on `S = φ(G_σ)` (sorted by group index, so the
//! identity is element 0): `x y = z` exactly when `I P_x P_y = I P_z`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::{normal_subgroups, regular_representation, PermGroup};
use crate::symspace::{right_cosets, subgroup_generated, twisted_set, GroupWithInvolution};
use crate::table::{is_moufang, is_right_bol, CayleyTable, Loop, Magma};

/// Status of one condition, with the offending elements when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Check {
    const PASS: Check = Check {
        holds: true,
        witness: None,
    };

    fn fail(witness: Vec<usize>) -> Self {
        Check {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// A group with involution together with `φ`, given on every element of `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPhiData {
    gw: GroupWithInvolution,
    twisted: Vec<usize>,
    n: Vec<usize>,
    phi: Vec<Option<usize>>,
}

impl SigmaPhiData {
    /// Takes `φ` as `(n, φ(n))` pairs. Every element of `N` must appear and
    /// nothing outside `N` may.
    pub fn new(gw: GroupWithInvolution, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let order = gw.group().order();
        let ts = twisted_set(&gw);
        let mut phi = vec![None; order];
        for (a, b) in pairs {
            if a >= order || b >= order {
                return Err(Error::InvalidPhi(format!("pair {a} -> {b} is out of range")));
            }
            if ts.generated.binary_search(&a).is_err() {
                return Err(Error::InvalidPhi(format!("{a} is not in N")));
            }
            match phi[a] {
                Some(old) if old != b => {
                    return Err(Error::InvalidPhi(format!("{a} is mapped to both {old} and {b}")))
                }
                _ => phi[a] = Some(b),
            }
        }
        if let Some(&a) = ts.generated.iter().find(|&&a| phi[a].is_none()) {
            return Err(Error::InvalidPhi(format!("no image given for {a} in N")));
        }
        Ok(SigmaPhiData {
            gw,
            twisted: ts.elements,
            n: ts.generated,
            phi,
        })
    }

    pub fn from_fn(gw: GroupWithInvolution, f: impl Fn(usize) -> usize) -> Result<Self> {
        let n = twisted_set(&gw).generated;
        Self::new(gw, n.into_iter().map(|a| (a, f(a))))
    }

    pub fn gw(&self) -> &GroupWithInvolution {
        &self.gw
    }

    pub fn group(&self) -> &Loop {
        self.gw.group()
    }

    /// `G_σ`, sorted.
    pub fn twisted(&self) -> &[usize] {
        &self.twisted
    }

    /// `N`, sorted.
    pub fn n(&self) -> &[usize] {
        &self.n
    }

    /// `φ(a)` for `a` in `N`.
    pub fn phi(&self, a: usize) -> usize {
        self.phi[a].expect("phi is only defined on N")
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.n.iter().map(|&a| (a, self.phi(a))).collect()
    }

    /// `φ(N)`, sorted.
    pub fn phi_n(&self) -> Vec<usize> {
        sorted_image(self.n.iter().map(|&a| self.phi(a)))
    }

    /// `φ(G_σ)`, sorted.
    pub fn phi_twisted(&self) -> Vec<usize> {
        sorted_image(self.twisted.iter().map(|&a| self.phi(a)))
    }

    /// `I = I_σ ∩ φ(N)`, sorted.
    pub fn i_subgroup(&self) -> Vec<usize> {
        self.phi_n()
            .into_iter()
            .filter(|&g| self.gw.sigma(g) == g)
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.phi_n().len() == self.n.len()
    }
}

fn sorted_image(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaPhiVerdict {
    /// Witness `[a, b]` with `φ(ab) != φ(a)φ(b)`.
    pub homomorphism: Check,
    /// Witness `[k]`, the order of the subgroup actually generated.
    pub condition1: Check,
    /// Witness `[x]` in `G_σ`.
    pub condition2: Check,
    /// Witness `[g]`, the smallest element of a coset missing `φ(G_σ)`.
    pub condition3: Check,
}

impl SigmaPhiVerdict {
    pub fn holds(&self) -> bool {
        self.homomorphism.holds && self.condition1.holds && self.condition2.holds && self.condition3.holds
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("homomorphism", &self.homomorphism),
            ("condition 1", &self.condition1),
            ("condition 2", &self.condition2),
            ("condition 3", &self.condition3),
        ]
        .into_iter()
        .filter(|(_, c)| !c.holds)
        .map(|(name, _)| name)
        .collect()
    }
}

pub fn verify_sigma_phi(d: &SigmaPhiData) -> SigmaPhiVerdict {
    let g = d.group();
    let homomorphism = d
        .n
        .iter()
        .flat_map(|&a| d.n.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| d.phi(g.mul(a, b)) != g.mul(d.phi(a), d.phi(b)))
        .map_or(Check::PASS, |(a, b)| Check::fail(vec![a, b]));

    let image = d.phi_twisted();
    let mut gens = image.clone();
    gens.extend(image.iter().map(|&x| d.gw.sigma(x)));
    let generated = subgroup_generated(g, &gens).len();
    let condition1 = if generated == g.order() {
        Check::PASS
    } else {
        Check::fail(vec![generated])
    };

    let condition2 = d
        .twisted
        .iter()
        .find(|&&x| d.phi(d.gw.twist(d.phi(x))) != d.phi(x))
        .map_or(Check::PASS, |&x| Check::fail(vec![x]));

    let condition3 = if homomorphism.holds {
        let phi_n = d.phi_n();
        let (cosets, _) = right_cosets_in(g, &d.i_subgroup(), &phi_n);
        cosets
            .iter()
            .find(|c| !c.iter().any(|x| image.binary_search(x).is_ok()))
            .map_or(Check::PASS, |c| Check::fail(vec![c[0]]))
    } else {
        // φ(N) need not be a subgroup, so its cosets are meaningless.
        Check::fail(vec![])
    };

    SigmaPhiVerdict {
        homomorphism,
        condition1,
        condition2,
        condition3,
    }
}

/// Right cosets `I g` of `sub` inside the subgroup `ambient`, indexed by their
/// smallest element. The second value maps group elements to coset indices
/// (`usize::MAX` outside `ambient`).
fn right_cosets_in(g: &Loop, sub: &[usize], ambient: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut cosets = Vec::new();
    for &x in ambient {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut c: Vec<usize> = sub.iter().map(|&i| g.mul(i, x)).collect();
        c.sort_unstable();
        for &y in &c {
            coset_of[y] = cosets.len();
        }
        cosets.push(c);
    }
    (cosets, coset_of)
}

/// The loop of a `(σ,φ)`-group with the data needed to re-check it in `G`.
#[derive(Debug, Clone)]
pub struct ConstructedLoop {
    data: SigmaPhiData,
    lp: Loop,
    reps: Vec<usize>,
    r_map: Vec<usize>,
    i_sub: Vec<usize>,
    phi_n: Vec<usize>,
    coset_of: Vec<usize>,
}

impl ConstructedLoop {
    pub fn as_loop(&self) -> &Loop {
        &self.lp
    }

    pub fn data(&self) -> &SigmaPhiData {
        &self.data
    }

    /// `P_x` as a group element.
    pub fn rep(&self, x: usize) -> usize {
        self.reps[x]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// `R_x = σ(P_{x^-1})`.
    pub fn r(&self, x: usize) -> usize {
        self.r_map[x]
    }

    /// `I`, sorted.
    pub fn i_subgroup(&self) -> &[usize] {
        &self.i_sub
    }

    /// `φ(N)`, sorted.
    pub fn phi_n(&self) -> &[usize] {
        &self.phi_n
    }

    /// The point `e g` of `S` for `g` in `φ(N)`.
    pub fn act_on_identity(&self, g: usize) -> usize {
        self.point_of_coset(self.coset_of[g])
    }

    fn point_of_coset(&self, c: usize) -> usize {
        self.reps
            .iter()
            .position(|&p| self.coset_of[p] == c)
            .expect("every coset has a representative")
    }
}

/// Builds the Bol loop on `phi(G_sigma)`. Refuses to run unless every condition holds.
pub fn construct_loop(d: &SigmaPhiData) -> Result<ConstructedLoop> {
    let verdict = verify_sigma_phi(d);
    if !verdict.holds() {
        return Err(Error::ConditionsFail(verdict.failures().join(", ")));
    }
    let g = d.group();
    let reps = d.phi_twisted();
    let phi_n = d.phi_n();
    let i_sub = d.i_subgroup();
    let (cosets, coset_of) = right_cosets_in(g, &i_sub, &phi_n);

    let mut point = vec![usize::MAX; cosets.len()];
    let mut count = vec![0usize; cosets.len()];
    for (x, &p) in reps.iter().enumerate() {
        let c = coset_of[p];
        count[c] += 1;
        point[c] = x;
    }
    if let Some(c) = (0..cosets.len()).find(|&c| count[c] != 1) {
        return Err(Error::UniquenessViolation {
            element: cosets[c][0],
            count: count[c],
        });
    }

    let k = reps.len();
    let rows: Vec<Vec<i64>> = (0..k)
        .map(|x| {
            (0..k)
                .map(|y| point[coset_of[g.mul(reps[x], reps[y])]] as i64)
                .collect()
        })
        .collect();
    let table = CayleyTable::new(Magma::from_rows(&rows)?)
        .map_err(|e| Error::AxiomFailure(format!("constructed table: {e}")))?;
    let lp = Loop::new(table).map_err(|e| Error::AxiomFailure(format!("constructed table: {e}")))?;
    if lp.relabeling().iter().enumerate().any(|(i, &j)| i != j) {
        return Err(Error::AxiomFailure("P_e is not the identity".into()));
    }
    if let Some(c) = is_right_bol(&lp).counterexample {
        return Err(Error::AxiomFailure(format!("right Bol fails at {:?}", c.triple())));
    }
    if d.is_injective() {
        if let Some(c) = is_moufang(&lp).counterexample {
            return Err(Error::AxiomFailure(format!("Moufang fails at {:?}", c.triple())));
        }
    }
    let r_map = (0..k).map(|x| d.gw.sigma(reps[lp.inv(x)])).collect();
    Ok(ConstructedLoop {
        data: d.clone(),
        lp,
        reps,
        r_map,
        i_sub,
        phi_n,
        coset_of,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationsVerdict {
    /// `P_e = R_e = 1`.
    pub identity: Check,
    /// `P_{x^-1} = P_x^-1`, `R_{x^-1} = R_x^-1`; witness `[x]`.
    pub inverses: Check,
    /// `P_{(xy)x} = P_x P_y P_x` and the same for `R`; witness `[x, y]`.
    pub bol_products: Check,
    /// `P_x P_y P_{xy}^-1 = R_x^-1 R_y^-1 R_{xy}`; witness `[x, y]`.
    pub associators: Check,
}

impl RelationsVerdict {
    pub fn holds(&self) -> bool {
        self.identity.holds && self.inverses.holds && self.bol_products.holds && self.associators.holds
    }
}

/// Checks P and R relations between `P_x` and `R_x` inside `G`.
pub fn relations_check(c: &ConstructedLoop) -> RelationsVerdict {
    let g = c.data.group();
    let l = &c.lp;
    let (p, r) = (&c.reps, &c.r_map);
    let k = l.order();
    let m3 = |a, b, d| g.mul(g.mul(a, b), d);
    let pairs = || (0..k).flat_map(move |x| (0..k).map(move |y| (x, y)));

    let identity = if p[0] == 0 && r[0] == 0 {
        Check::PASS
    } else {
        Check::fail(vec![0])
    };
    let inverses = (0..k)
        .find(|&x| p[l.inv(x)] != g.inv(p[x]) || r[l.inv(x)] != g.inv(r[x]))
        .map_or(Check::PASS, |x| Check::fail(vec![x]));
    let bol_products = pairs()
        .find(|&(x, y)| {
            let xyx = l.mul(l.mul(x, y), x);
            p[xyx] != m3(p[x], p[y], p[x]) || r[xyx] != m3(r[x], r[y], r[x])
        })
        .map_or(Check::PASS, |(x, y)| Check::fail(vec![x, y]));
    let associators = pairs()
        .find(|&(x, y)| {
            let xy = l.mul(x, y);
            m3(p[x], p[y], g.inv(p[xy])) != m3(g.inv(r[x]), g.inv(r[y]), r[xy])
        })
        .map_or(Check::PASS, |(x, y)| Check::fail(vec![x, y]));
    RelationsVerdict {
        identity,
        inverses,
        bol_products,
        associators,
    }
}

/// `<P_x P_y P_{xy}^-1>`, sorted.
pub fn p_associator_subgroup(c: &ConstructedLoop) -> Vec<usize> {
    let g = c.data.group();
    let l = &c.lp;
    let p = &c.reps;
    let k = l.order();
    let gens: Vec<usize> = (0..k)
        .flat_map(|x| (0..k).map(move |y| (x, y)))
        .map(|(x, y)| g.mul(g.mul(p[x], p[y]), g.inv(p[l.mul(x, y)])))
        .collect();
    subgroup_generated(g, &gens)
}

/// `<P_x P_y P_{xy}^-1> = I = { g in φ(N) : e g = e }`.
pub fn associator_stabilizer_check(c: &ConstructedLoop) -> bool {
    let stabilizer: Vec<usize> = c
        .phi_n
        .iter()
        .copied()
        .filter(|&g| c.act_on_identity(g) == 0)
        .collect();
    p_associator_subgroup(c) == c.i_sub && c.i_sub == stabilizer
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub normal: bool,
    /// `H` normal, `σ(H) = H` and `σ` induces a non-identity map on `G/H`.
    pub sigma_adm: bool,
    /// `φ(N ∩ H) ⊆ H`.
    pub phi_adm: bool,
}

impl Admissibility {
    pub fn both(&self) -> bool {
        self.sigma_adm && self.phi_adm
    }
}

fn check_subgroup(g: &Loop, h: &[usize]) -> Result<Vec<usize>> {
    let mut h: Vec<usize> = h.to_vec();
    h.sort_unstable();
    h.dedup();
    if h.iter().any(|&x| x >= g.order()) || subgroup_generated(g, &h) != h {
        return Err(Error::NotSubgroup);
    }
    Ok(h)
}

fn is_normal_subset(g: &Loop, h: &[usize]) -> bool {
    (0..g.order()).all(|x| {
        h.iter()
            .all(|&y| h.binary_search(&g.mul(g.mul(g.inv(x), y), x)).is_ok())
    })
}

pub fn admissibility(d: &SigmaPhiData, h: &[usize]) -> Result<Admissibility> {
    let g = d.group();
    let h = check_subgroup(g, h)?;
    let contains = |x: usize| h.binary_search(&x).is_ok();
    let normal = is_normal_subset(g, &h);
    let sigma_adm = normal
        && h.iter().all(|&x| contains(d.gw.sigma(x)))
        && (0..g.order()).any(|x| !contains(d.gw.twist(x)));
    let phi_adm = d.n.iter().filter(|&&x| contains(x)).all(|&x| contains(d.phi(x)));
    Ok(Admissibility {
        normal,
        sigma_adm,
        phi_adm,
    })
}

/// Normal subgroups of `G` as sorted element sets, smallest first.
pub fn group_normal_subgroups(g: &Loop) -> Vec<Vec<usize>> {
    let regular = regular_representation(g);
    let whole = PermGroup::from_elements(g.order(), regular).expect("a group's translations form a group");
    normal_subgroups(&whole)
        .iter()
        .map(|n| sorted_image(n.elements().iter().map(|p| p.apply(0))))
        .collect()
}

/// Proper nontrivial normal subgroups that are both σ- and φ-admissible.
pub fn admissible_normal_subgroups(d: &SigmaPhiData) -> Result<Vec<Vec<usize>>> {
    let n = d.group().order();
    let mut out = Vec::new();
    for h in group_normal_subgroups(d.group()) {
        if h.len() > 1 && h.len() < n && admissibility(d, &h)?.both() {
            out.push(h);
        }
    }
    Ok(out)
}

pub fn sigma_phi_simple(d: &SigmaPhiData) -> Result<bool> {
    Ok(admissible_normal_subgroups(d)?.is_empty())
}

#[derive(Debug, Clone)]
pub struct QuotientReport {
    /// The loop of `G/H`.
    pub quotient: ConstructedLoop,
    /// Cosets of `H`, indexed by smallest element.
    pub cosets: Vec<Vec<usize>>,
    /// `x -> P_x H`, as points of the quotient loop.
    pub projection: Vec<usize>,
    /// The projection is a bijection.
    pub isomorphic: bool,
    /// `φ(N) ∩ H` lies in the core of `I` in `φ(N)`.
    pub core_criterion: bool,
}

/// Builds `G/H` with the induced `σ` and `φ`, constructs its loop and checks
/// that `P_x -> P_x H` is a loop homomorphism.
pub fn quotient_loop(c: &ConstructedLoop, h: &[usize]) -> Result<QuotientReport> {
    let d = &c.data;
    let g = d.group();
    let adm = admissibility(d, h)?;
    if !adm.normal {
        return Err(Error::NotNormal);
    }
    if !adm.both() {
        return Err(Error::Invalid(format!(
            "subgroup is not admissible (sigma: {}, phi: {})",
            adm.sigma_adm, adm.phi_adm
        )));
    }
    let h = check_subgroup(g, h)?;
    let (cosets, coset_of) = right_cosets(g, &h);
    let q = cosets.len();
    let qg = Magma::from_fn(q, |a, b| coset_of[g.mul(cosets[a][0], cosets[b][0])]);
    let qloop = Loop::new(CayleyTable::new(qg)?)?;
    let qsigma = (0..q).map(|a| coset_of[d.gw.sigma(cosets[a][0])]).collect();
    let qgw = GroupWithInvolution::new(qloop, qsigma)?;

    let mut qphi = vec![None; q];
    for &a in &d.n {
        let (ca, img) = (coset_of[a], coset_of[d.phi(a)]);
        match qphi[ca] {
            Some(old) if old != img => return Err(Error::IllDefined(ca, img)),
            _ => qphi[ca] = Some(img),
        }
    }
    let qd = SigmaPhiData::new(qgw, qphi.iter().enumerate().filter_map(|(a, v)| v.map(|b| (a, b))))?;
    let quotient = construct_loop(&qd)?;

    let projection: Vec<usize> = c
        .reps
        .iter()
        .map(|&p| {
            quotient
                .reps
                .binary_search(&coset_of[p])
                .map_err(|_| Error::Invalid(format!("P_x H for P_x = {p} is not a quotient point")))
        })
        .collect::<Result<_>>()?;
    let (l, ql) = (&c.lp, &quotient.lp);
    for x in 0..l.order() {
        for y in 0..l.order() {
            if projection[l.mul(x, y)] != ql.mul(projection[x], projection[y]) {
                return Err(Error::HomomorphismFailure(x, y));
            }
        }
    }
    let isomorphic = ql.order() == l.order();

    let core = core_in(g, &c.i_sub, &c.phi_n);
    let core_criterion = c
        .phi_n
        .iter()
        .filter(|&&x| h.binary_search(&x).is_ok())
        .all(|x| core.binary_search(x).is_ok());

    Ok(QuotientReport {
        quotient,
        cosets,
        projection,
        isomorphic,
        core_criterion,
    })
}

/// Intersection of the conjugates `x sub x^-1` for `x` in `ambient`.
fn core_in(g: &Loop, sub: &[usize], ambient: &[usize]) -> Vec<usize> {
    sub.iter()
        .copied()
        .filter(|&y| {
            ambient
                .iter()
                .all(|&x| sub.binary_search(&g.mul(g.mul(g.inv(x), y), x)).is_ok())
        })
        .collect()
}

/// Bundled instances, each with a short name.
pub mod instances {
    use super::*;
    use crate::corpus::groups;

    /// `Z3 x Z3`, `σ(a, b) = (b, a)`, `φ(h, -h) = (-h, 0)`.
    pub fn z3z3_swap() -> SigmaPhiData {
        let gw = GroupWithInvolution::swap(&groups::cyclic(3)).expect("swap is an involution");
        // (a, b) is stored as 3a + b and N = {(h, -h)}.
        SigmaPhiData::from_fn(gw, |x| ((3 - x / 3) % 3) * 3).expect("phi is total on N")
    }

    /// The same group with `φ(h, -h) = (h, 0)`, which breaks condition 2.
    pub fn z3z3_swap_bad() -> SigmaPhiData {
        let gw = GroupWithInvolution::swap(&groups::cyclic(3)).expect("swap is an involution");
        SigmaPhiData::from_fn(gw, |x| (x / 3) * 3).expect("phi is total on N")
    }

    /// `Z_n` (`n` odd) with `σ(x) = -x` and `φ(x) = x / (-2)`.
    pub fn cyclic_negation(n: usize) -> Result<SigmaPhiData> {
        if n % 2 == 0 || n < 3 {
            return Err(Error::Invalid("needs an odd order of at least 3".into()));
        }
        let gw = GroupWithInvolution::inversion(groups::cyclic(n))?;
        // -1/2 = (n - 1) / 2 mod n
        let half = (n - 1) / 2;
        SigmaPhiData::from_fn(gw, |x| x * half % n)
    }

    pub fn z5_negation() -> SigmaPhiData {
        cyclic_negation(5).expect("5 is odd")
    }

    /// `K x K` with the swap and `φ(u, v) = (v, 1)`.
    pub fn square_swap(k: &Loop) -> Result<SigmaPhiData> {
        let m = k.order();
        let gw = GroupWithInvolution::swap(k)?;
        SigmaPhiData::from_fn(gw, |x| (x % m) * m)
    }

    pub fn trivial() -> SigmaPhiData {
        let gw = GroupWithInvolution::trivial(groups::cyclic(1)).expect("trivial group");
        SigmaPhiData::from_fn(gw, |x| x).expect("phi is total on N")
    }
}
