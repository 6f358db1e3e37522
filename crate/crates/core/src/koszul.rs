//! Stanley-Reisner ideals and the squarefree Koszul complex.
//!
//! A monomial `u_A x_B` has disjoint `A` (exterior part) and `B` (polynomial
//! part); it vanishes when `B` is not a face. The differential turns one `u`
//! into an `x`:
//!
//! `d(u_{a_1..a_s} x_B) = Σ_l (-1)^(l+1) u_{A \ a_l} x_{B ∪ a_l}`.
//!
//! At a fixed support `J = A ∪ B` the complex is the augmented cochain complex
//! of the full subcomplex `K_J`, with `|B| = s` matching `H̃^{s-1}(K_J)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::chain::{parity_sign, Chain, Ring};
use crate::complex::{ComplexView, CrossPolytopePairs, GhostComplex, Simplex};
use crate::error::{Error, Result};
use crate::homology::{betti, pair};
use crate::hypercube::{hamming, Params, SubcubeEmbedding, Vertex};
use crate::linalg::SparseMatrix;

/// A minimal generator of a Stanley-Reisner ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SRGenerator {
    /// `x_a x_b` with `a < b` at distance greater than `r`.
    Pair(Vertex, Vertex),
    /// `x_a` for a ghost vertex `a`.
    Ghost(Vertex),
}

impl Serialize for SRGenerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            SRGenerator::Pair(a, b) => [a, b].serialize(s),
            SRGenerator::Ghost(a) => [a].serialize(s),
        }
    }
}

/// Stanley-Reisner ideal of `VR(Q_n; r)`, possibly with ghost vertices.
#[derive(Debug, Clone)]
pub struct SRIdeal {
    params: Params,
    live: VertexSet,
    view: ComplexView,
}

impl SRIdeal {
    pub fn new(params: Params) -> Self {
        let live = VertexSet::full(params.order());
        Self { params, live, view: ComplexView::new(params) }
    }

    /// Ideal of the ghost complex: vertices outside `live` are killed.
    pub fn with_live(params: Params, live: VertexSet) -> Result<Self> {
        let view = ComplexView::restricted(params, live.clone())?;
        Ok(Self { params, live, view })
    }

    pub fn from_ghost(g: &GhostComplex) -> Self {
        Self { params: g.params(), live: g.live().clone(), view: g.view().clone() }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn live(&self) -> &VertexSet {
        &self.live
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.params.order())
    }

    pub fn ghosts(&self) -> VertexSet {
        self.universe().difference(&self.live)
    }

    pub fn view(&self) -> &ComplexView {
        &self.view
    }

    /// Whether `x_B` survives in the Stanley-Reisner ring.
    pub fn is_face(&self, b: &VertexSet) -> bool {
        if !b.is_subset(&self.live) {
            return false;
        }
        let vs = b.to_vec();
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&c| self.params.adjacent(a, c)))
    }

    /// Whether `x_B ∪ {v}` survives, given that `x_B` does.
    fn extends(&self, b: &VertexSet, v: Vertex) -> bool {
        self.live.contains(v) && b.iter().all(|w| self.params.adjacent(v, w))
    }

    /// Minimal generators: far pairs among live vertices, sorted, then ghost
    /// singletons.
    pub fn generators(&self) -> Vec<SRGenerator> {
        let live = self.live.to_vec();
        let mut out = Vec::new();
        for (i, &a) in live.iter().enumerate() {
            for &b in &live[i + 1..] {
                if !self.params.adjacent(a, b) {
                    out.push(SRGenerator::Pair(a, b));
                }
            }
        }
        out.extend(self.ghosts().iter().map(SRGenerator::Ghost));
        out
    }
}

pub fn sr_generators(ideal: &SRIdeal) -> Vec<SRGenerator> {
    ideal.generators()
}

/// `u_U x_X` with `U ∩ X = ∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KoszulMonomial {
    u: VertexSet,
    x: VertexSet,
}

impl KoszulMonomial {
    pub fn new(u: VertexSet, x: VertexSet) -> Result<Self> {
        if !u.is_disjoint(&x) {
            return Err(Error::InvalidParams(format!("u-part and x-part share {:?}", u.intersection(&x))));
        }
        Ok(Self { u, x })
    }

    pub fn from_slices(u: &[Vertex], x: &[Vertex]) -> Result<Self> {
        Self::new(VertexSet::from_slice(u), VertexSet::from_slice(x))
    }

    /// `u_* x_X` with `u_*` the product over the rest of `universe`.
    pub fn full_support(x: VertexSet, universe: &VertexSet) -> Self {
        Self { u: universe.difference(&x), x }
    }

    pub fn u(&self) -> &VertexSet {
        &self.u
    }

    pub fn x(&self) -> &VertexSet {
        &self.x
    }

    pub fn support(&self) -> VertexSet {
        self.u.union(&self.x)
    }

    /// Number of `x` factors.
    pub fn x_degree(&self) -> usize {
        self.x.len()
    }
}

/// A combination of Koszul monomials with integer (or mod-2) coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulCochain {
    ring: Ring,
    terms: BTreeMap<KoszulMonomial, i64>,
}

impl KoszulCochain {
    pub fn zero(ring: Ring) -> Self {
        Self { ring, terms: BTreeMap::new() }
    }

    pub fn monomial(m: KoszulMonomial, ring: Ring) -> Self {
        let mut c = Self::zero(ring);
        c.add(m, 1);
        c
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    fn normalize(&self, c: i64) -> i64 {
        match self.ring {
            Ring::F2 => c.rem_euclid(2),
            Ring::Q | Ring::Z => c,
        }
    }

    pub fn add(&mut self, m: KoszulMonomial, c: i64) {
        let c = self.normalize(c);
        if c == 0 {
            return;
        }
        let v = self.terms.entry(m.clone()).or_insert(0);
        *v += c;
        let nv = match self.ring {
            Ring::F2 => v.rem_euclid(2),
            _ => *v,
        };
        if nv == 0 {
            self.terms.remove(&m);
        } else {
            *v = nv;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coef(&self, m: &KoszulMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&KoszulMonomial, &i64)> {
        self.terms.iter()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add(m.clone(), *c);
        }
        out
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = Self::zero(self.ring);
        for (m, c) in self.iter() {
            out.add(m.clone(), c * k);
        }
        out
    }

    /// The common support, if all terms share one.
    pub fn support(&self) -> Option<VertexSet> {
        let mut it = self.terms.keys().map(KoszulMonomial::support);
        let first = it.next()?;
        it.all(|s| s == first).then_some(first)
    }

    pub fn to_document(&self, params: Params, ghosts: &VertexSet) -> KoszulCochainDocument {
        let mut terms: Vec<KoszulTermDocument> =
            self.terms.iter().map(|(m, &c)| KoszulTermDocument { u: m.u.to_vec(), x: m.x.to_vec(), coef: c }).collect();
        terms.sort_by(|a, b| (&a.x, &a.u).cmp(&(&b.x, &b.u)));
        KoszulCochainDocument { n: params.n, r: params.r, ghosts: ghosts.to_vec(), ring: self.ring, terms }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulTermDocument {
    pub u: Vec<Vertex>,
    pub x: Vec<Vertex>,
    pub coef: i64,
}

/// On-disk form of a Koszul cochain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulCochainDocument {
    pub n: u32,
    pub r: u32,
    #[serde(default)]
    pub ghosts: Vec<Vertex>,
    #[serde(default)]
    pub ring: Ring,
    pub terms: Vec<KoszulTermDocument>,
}

impl KoszulCochainDocument {
    /// The ideal named by the document and the cochain itself.
    pub fn into_cochain(self) -> Result<(SRIdeal, KoszulCochain)> {
        let params = Params::new(self.n, self.r)?;
        for &v in self.ghosts.iter().chain(self.terms.iter().flat_map(|t| t.u.iter().chain(&t.x))) {
            params.check_vertex(v)?;
        }
        let ghosts = VertexSet::from_slice(&self.ghosts);
        let ideal = SRIdeal::with_live(params, VertexSet::full(params.order()).difference(&ghosts))?;
        let mut c = KoszulCochain::zero(self.ring);
        for t in self.terms {
            c.add(KoszulMonomial::from_slices(&t.u, &t.x)?, t.coef);
        }
        Ok((ideal, c))
    }
}

/// Koszul differential; terms whose `x`-part is not a face vanish.
pub fn koszul_differential(c: &KoszulCochain, ideal: &SRIdeal) -> KoszulCochain {
    let mut out = KoszulCochain::zero(c.ring());
    for (m, &coef) in c.iter() {
        if !ideal.is_face(&m.x) {
            continue;
        }
        for (l, a) in m.u.iter().enumerate() {
            if !ideal.extends(&m.x, a) {
                continue;
            }
            let mut u = m.u.clone();
            u.remove(a);
            let mut x = m.x.clone();
            x.insert(a);
            // l is zero-based, so (-1)^(l+1) for one-based positions is (-1)^l here
            out.add(KoszulMonomial { u, x }, coef * parity_sign(l));
        }
    }
    out
}

/// A monomial of full support is a cocycle exactly when its `x`-part is a
/// maximal face. Both sides of that equivalence are computed and compared.
pub fn is_monomial_cocycle(m: &KoszulMonomial, ideal: &SRIdeal) -> Result<bool> {
    if m.support() != ideal.universe() {
        return Err(Error::SupportNotFull);
    }
    if !ideal.is_face(&m.x) {
        return Err(Error::NotAFace(m.x.to_vec()));
    }
    let simplex = Simplex::new(m.x.to_vec())?;
    let maximal = ideal.view().is_maximal_simplex(&simplex);
    let closed = koszul_differential(&KoszulCochain::monomial(m.clone(), Ring::Z), ideal).is_zero();
    if maximal != closed {
        return Err(Error::Internal(format!(
            "maximality ({maximal}) and vanishing differential ({closed}) disagree for {:?}",
            m.x
        )));
    }
    Ok(closed)
}

/// For a maximal simplex `σ` of `VR(Q_{r+1}; r)`: every vertex has another
/// member of `σ` at distance at least `r`.
pub fn local_diameter_check(sigma: &[Vertex], r: u32) -> Result<bool> {
    Ok(local_diameter_failure(sigma, r)?.is_none())
}

fn local_diameter_failure(sigma: &[Vertex], r: u32) -> Result<Option<Vertex>> {
    let params = Params::new(r + 1, r)?;
    for &v in sigma {
        params.check_vertex(v)?;
    }
    let s = Simplex::new(sigma.to_vec())?;
    if !ComplexView::new(params).is_maximal_simplex(&s) {
        return Err(Error::NotMaximal(sigma.to_vec()));
    }
    Ok(s.vertices().iter().copied().find(|&v| !s.vertices().iter().any(|&w| w != v && hamming(v, w) >= r)))
}

/// Push a local-diameter simplex of `Q_{r+1}` through a subcube embedding and
/// return the full-support monomial `u_* x_σ` in the Koszul complex of
/// `VR(Q_n; r)`, checked to be a cocycle.
pub fn lift_cocycle(sigma: &[Vertex], emb: &SubcubeEmbedding, params: Params) -> Result<KoszulMonomial> {
    let r = params.r;
    if emb.dim() != r + 1 {
        return Err(Error::InvalidParams(format!("embedding has dimension {}, expected r + 1 = {}", emb.dim(), r + 1)));
    }
    if let Some(&c) = emb.variable_coords().iter().find(|&&c| c >= params.n) {
        return Err(Error::InvalidParams(format!("coordinate {c} outside Q_{}", params.n)));
    }
    if let Some(v) = local_diameter_failure(sigma, r)? {
        return Err(Error::LocalDiameter(v));
    }
    let image: VertexSet = sigma.iter().map(|&v| emb.map(v)).collect();
    let ideal = SRIdeal::new(params);
    let m = KoszulMonomial::full_support(image, &ideal.universe());
    if !koszul_differential(&KoszulCochain::monomial(m.clone(), Ring::Z), &ideal).is_zero() {
        return Err(Error::LiftNotCocycle(format!("{:?}", m.x)));
    }
    Ok(m)
}

/// Sign of sorting the concatenation of two disjoint ascending lists.
fn shuffle_sign(a: &VertexSet, b: &VertexSet) -> i64 {
    // each element of b jumps over the elements of a that exceed it
    let total: usize = b.iter().map(|v| a.len() - a.rank_of(v)).sum();
    parity_sign(total)
}

/// Product of monomials with disjoint supports: `u_A x_B · u_C x_D =
/// ± u_{A∪C} x_{B∪D}`, zero on overlapping supports or a non-face `x`-part.
pub fn star_product(c1: &KoszulCochain, c2: &KoszulCochain, ideal: &SRIdeal) -> Result<KoszulCochain> {
    if c1.ring() != c2.ring() {
        return Err(Error::Mismatch("star product of cochains over different rings".into()));
    }
    let mut out = KoszulCochain::zero(c1.ring());
    for (m1, &a) in c1.iter() {
        let s1 = m1.support();
        for (m2, &b) in c2.iter() {
            if !s1.is_disjoint(&m2.support()) {
                continue;
            }
            let x = m1.x.union(&m2.x);
            if !ideal.is_face(&x) {
                continue;
            }
            let sign = shuffle_sign(&m1.u, &m2.u);
            out.add(KoszulMonomial { u: m1.u.union(&m2.u), x }, a * b * sign);
        }
    }
    Ok(out)
}

/// Image in the Koszul complex of the ghost complex on `live`: monomials
/// with an `x` on a ghost vanish.
pub fn ghost_restrict(c: &KoszulCochain, live: &VertexSet) -> KoszulCochain {
    let mut out = KoszulCochain::zero(c.ring());
    for (m, &coef) in c.iter() {
        if m.x.is_subset(live) {
            out.add(m.clone(), coef);
        }
    }
    out
}

/// Simplicial cochain of `K_J` matching a cochain of common support `J`:
/// `u_A x_B ↦ ε B*`, `ε = (-1)^{#{(a, b) : a ∈ A, b ∈ B, a < b}}`. This map
/// intertwines the Koszul differential with `(-1)^{|B|} δ`.
pub fn to_simplicial(c: &KoszulCochain) -> Result<Chain> {
    let Some(first) = c.iter().next().map(|(m, _)| m.x_degree()) else {
        return Err(Error::Mismatch("zero Koszul cochain has no degree".into()));
    };
    if first == 0 {
        return Err(Error::Mismatch("degree-zero Koszul cochain has no simplicial dual".into()));
    }
    if c.support().is_none() {
        return Err(Error::Mismatch("Koszul cochain terms have different supports".into()));
    }
    let mut out = Chain::zero(first - 1, c.ring());
    for (m, &coef) in c.iter() {
        if m.x_degree() != first {
            return Err(Error::Mismatch("Koszul cochain terms have different degrees".into()));
        }
        let inversions: usize = m.x.iter().map(|b| m.u.rank_of(b)).sum();
        out.add_int(Simplex::new(m.x.to_vec())?, coef * parity_sign(inversions))?;
    }
    Ok(out)
}

/// Ranks of the Koszul cohomology at support `J`, indexed by the number of
/// `x` factors `0..=|J|`.
pub fn support_cohomology_ranks(ideal: &SRIdeal, support: &VertexSet, ring: Ring, cap: usize) -> Result<Vec<usize>> {
    let m = support.len();
    // basis in degree s: faces B ⊆ J ∩ live with |B| = s
    let live_j = support.intersection(ideal.live());
    let faces = ComplexView::restricted(ideal.params(), live_j)?.enumerate_skeleton(m.max(1) - 1, cap)?;
    let mut basis: Vec<Vec<VertexSet>> = vec![Vec::new(); m + 1];
    basis[0].push(VertexSet::new());
    for k in 0..faces.num_dims() {
        basis[k + 1] = faces.simplices(k).iter().map(Simplex::bitform).collect();
    }
    let index: Vec<BTreeMap<&VertexSet, usize>> =
        basis.iter().map(|b| b.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    // rank of d: degree s -> s+1
    let mut ranks = vec![0usize; m + 1];
    for s in 0..m {
        let mut mat = SparseMatrix::new(basis[s + 1].len());
        for b in &basis[s] {
            let mono = KoszulMonomial { u: support.difference(b), x: b.clone() };
            let d = koszul_differential(&KoszulCochain::monomial(mono, ring), ideal);
            mat.push_col(d.iter().map(|(t, &c)| (index[s + 1][&t.x] as u32, c)));
        }
        ranks[s] = match ring {
            Ring::F2 => mat.rank_f2(),
            _ => mat.rank_q(),
        };
    }
    Ok((0..=m).map(|s| basis[s].len() - ranks[s] - if s > 0 { ranks[s - 1] } else { 0 }).collect())
}

/// Two computations of `rank H̃^degree` of a ghost complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhostRank {
    pub degree: i64,
    /// From the Koszul complex of the ghost ideal at full support.
    pub koszul: usize,
    /// From `H̃*(VR(Q_n; r)_I) ⊗ Λ(u_a : a ∉ I)`; at full support the
    /// exterior factor contributes its top monomial only.
    pub tensor: usize,
}

impl GhostRank {
    pub fn agrees(&self) -> bool {
        self.koszul == self.tensor
    }
}

pub fn ghost_cohomology_rank(ghost: &GhostComplex, degree: i64, ring: Ring, cap: usize) -> Result<GhostRank> {
    let ideal = SRIdeal::from_ghost(ghost);
    let full = ideal.universe();
    let ranks = support_cohomology_ranks(&ideal, &full, ring, cap)?;
    let s = degree + 1;
    let koszul = if s < 0 { 0 } else { ranks.get(s as usize).copied().unwrap_or(0) };
    let tensor = if degree < -1 {
        0
    } else {
        let b = betti(ghost.view(), degree.max(0) as usize, ring, cap, crate::linalg::DEFAULT_MAX_MATRIX)?;
        b.get(degree)
    };
    let out = GhostRank { degree, koszul, tensor };
    if !out.agrees() {
        return Err(Error::Internal(format!("ghost ranks disagree: {out:?}")));
    }
    Ok(out)
}

/// Outcome of an independence certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum IndependenceVerdict {
    Pass { order: Vec<usize> },
    Fail { step: usize, class: usize, detector: usize, reason: String },
}

impl IndependenceVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass { .. })
    }

    pub fn to_error(&self) -> Option<Error> {
        match self {
            Self::Pass { .. } => None,
            Self::Fail { step, reason, .. } => Some(Error::PatternViolation { step: *step, reason: reason.clone() }),
        }
    }
}

/// Pairs of a detector set when its full subcomplex is the boundary of a
/// cross-polytope: every vertex has exactly one non-neighbour in the set.
pub fn detector_pairs(detector: &VertexSet, params: Params) -> Result<CrossPolytopePairs> {
    let vs = detector.to_vec();
    let mut pairs = Vec::new();
    for &v in &vs {
        let far: Vec<Vertex> = vs.iter().copied().filter(|&w| !params.adjacent(v, w)).collect();
        if far.len() != 1 {
            return Err(Error::InvalidPairs(format!(
                "vertex {v} has {} non-neighbours in the detector, expected 1",
                far.len()
            )));
        }
        if v < far[0] {
            pairs.push((v, far[0]));
        }
    }
    CrossPolytopePairs::new(pairs, &ComplexView::restricted(params, detector.clone())?)
}

/// Pairing of a restricted class with the fundamental cycle of the
/// cross-polytope detector.
fn detect(class: &KoszulCochain, detector: &VertexSet, pairs: &CrossPolytopePairs) -> Result<i64> {
    let restricted = ghost_restrict(class, detector);
    if restricted.is_zero() {
        return Ok(0);
    }
    let phi = to_simplicial(&restricted)?;
    if phi.dim() + 1 != pairs.len() {
        return Ok(0);
    }
    let cycle = pairs.cycle(phi.ring())?;
    Ok(pair(&cycle, &phi)?.to_integer())
}

/// Triangular detection: at each step the detector of the current class
/// must send every class not yet eliminated to zero and the current class to
/// a nonzero multiple of the generator of its cross-polytope subcomplex.
/// Without an explicit order, the smallest index that passes is taken next.
pub fn independence_certificate(
    classes: &[KoszulCochain],
    detectors: &[VertexSet],
    params: Params,
    order: Option<&[usize]>,
) -> Result<IndependenceVerdict> {
    if classes.len() != detectors.len() {
        return Err(Error::InvalidParams(format!("{} classes but {} detectors", classes.len(), detectors.len())));
    }
    if let Some(o) = order {
        let mut seen = o.to_vec();
        seen.sort_unstable();
        if seen != (0..classes.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidParams("elimination order is not a permutation".into()));
        }
    }
    let mut remaining: Vec<usize> = (0..classes.len()).collect();
    let mut done = Vec::new();
    for step in 0..classes.len() {
        let candidates: Vec<usize> = match order {
            Some(o) => vec![o[step]],
            None => remaining.clone(),
        };
        let mut first_failure = None;
        for &i in &candidates {
            match check_step(classes, detectors, params, &remaining, i)? {
                Ok(()) => {
                    first_failure = None;
                    remaining.retain(|&j| j != i);
                    done.push(i);
                    break;
                }
                Err((class, reason)) => {
                    first_failure.get_or_insert((class, i, reason));
                }
            }
        }
        if let Some((class, detector, reason)) = first_failure {
            return Ok(IndependenceVerdict::Fail { step, class, detector, reason });
        }
    }
    Ok(IndependenceVerdict::Pass { order: done })
}

type StepResult = std::result::Result<(), (usize, String)>;

fn check_step(
    classes: &[KoszulCochain],
    detectors: &[VertexSet],
    params: Params,
    remaining: &[usize],
    i: usize,
) -> Result<StepResult> {
    let det = &detectors[i];
    for &j in remaining.iter().filter(|&&j| j != i) {
        if !ghost_restrict(&classes[j], det).is_zero() {
            return Ok(Err((j, format!("class {j} survives restriction to detector {i}"))));
        }
    }
    let pairs = match detector_pairs(det, params) {
        Ok(p) => p,
        Err(e) => return Ok(Err((i, format!("detector {i} is not a cross-polytope: {e}")))),
    };
    if detect(&classes[i], det, &pairs)? == 0 {
        return Ok(Err((i, format!("class {i} restricts to zero on detector {i}"))));
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_MAX_SIMPLICES;

    fn p(n: u32, r: u32) -> Params {
        Params::new(n, r).unwrap()
    }

    fn mono(u: &[Vertex], x: &[Vertex]) -> KoszulMonomial {
        KoszulMonomial::from_slices(u, x).unwrap()
    }

    fn full(x: &[Vertex], n: u32) -> KoszulMonomial {
        KoszulMonomial::full_support(VertexSet::from_slice(x), &VertexSet::full(1 << n))
    }

    #[test]
    fn generator_examples() {
        let g = SRIdeal::new(p(3, 2)).generators();
        assert_eq!(
            g,
            vec![SRGenerator::Pair(0, 7), SRGenerator::Pair(1, 6), SRGenerator::Pair(2, 5), SRGenerator::Pair(3, 4)]
        );
        assert_eq!(SRIdeal::new(p(2, 1)).generators(), vec![SRGenerator::Pair(0, 3), SRGenerator::Pair(1, 2)]);
        let l2 = VertexSet::from_slice(&[0, 1, 4, 5, 8, 9, 12, 13]);
        let gi = SRIdeal::with_live(p(4, 2), l2.clone()).unwrap().generators();
        let ghosts: Vec<Vertex> =
            gi.iter().filter_map(|g| if let SRGenerator::Ghost(a) = g { Some(*a) } else { None }).collect();
        assert_eq!(ghosts, vec![2, 3, 6, 7, 10, 11, 14, 15]);
        for g in &gi {
            if let SRGenerator::Pair(a, b) = *g {
                assert!(l2.contains(a) && l2.contains(b) && hamming(a, b) > 2);
            }
        }
    }

    #[test]
    fn differential_examples() {
        let ideal = SRIdeal::new(p(2, 1));
        let d = koszul_differential(&KoszulCochain::monomial(mono(&[0], &[]), Ring::Z), &ideal);
        assert_eq!(d.coef(&mono(&[], &[0])), 1);
        let d = koszul_differential(&KoszulCochain::monomial(mono(&[2, 3], &[0, 1]), Ring::Z), &ideal);
        assert!(d.is_zero());
        let q4 = SRIdeal::new(p(4, 2));
        let a1 = KoszulCochain::monomial(full(&[0, 1, 2, 3], 4), Ring::Z);
        assert!(koszul_differential(&a1, &q4).is_zero());
    }

    #[test]
    fn monomial_cocycle_examples() {
        let q4 = SRIdeal::new(p(4, 2));
        assert!(is_monomial_cocycle(&full(&[8, 9, 10, 11], 4), &q4).unwrap());
        assert!(!is_monomial_cocycle(&full(&[0, 1, 2, 4], 4), &q4).unwrap());
        let q3 = SRIdeal::new(p(3, 2));
        assert!(is_monomial_cocycle(&mono(&[3, 5, 6, 7], &[0, 1, 2, 4]), &q3).unwrap());
        assert_eq!(is_monomial_cocycle(&mono(&[3], &[0, 1]), &q3), Err(Error::SupportNotFull));
    }

    #[test]
    fn local_diameter_examples() {
        assert!(local_diameter_check(&[0, 1, 2, 3], 2).unwrap());
        assert!(!local_diameter_check(&[0, 1, 2, 4], 2).unwrap());
        assert!(matches!(local_diameter_check(&[0, 1, 2], 2), Err(Error::NotMaximal(_))));
        let facets = ComplexView::new(p(3, 2)).maximal_simplices(1000).unwrap();
        assert_eq!(facets.len(), 16);
        let good = facets.iter().filter(|f| local_diameter_check(f.vertices(), 2).unwrap()).count();
        assert_eq!(good, 8);
    }

    #[test]
    fn lift_examples() {
        let params = p(4, 2);
        let low = SubcubeEmbedding::new(vec![0, 1, 2], 0, 4).unwrap();
        let high = SubcubeEmbedding::new(vec![0, 1, 2], 0b1000, 4).unwrap();
        assert_eq!(lift_cocycle(&[0, 1, 2, 3], &low, params).unwrap(), full(&[0, 1, 2, 3], 4));
        assert_eq!(lift_cocycle(&[0, 1, 2, 3], &high, params).unwrap(), full(&[8, 9, 10, 11], 4));
        assert_eq!(lift_cocycle(&[0, 1, 2, 4], &low, params), Err(Error::LocalDiameter(0)));
    }

    #[test]
    fn star_product_examples() {
        let ideal = SRIdeal::new(p(2, 1));
        let a = KoszulCochain::monomial(mono(&[3], &[0]), Ring::Z);
        let b = KoszulCochain::monomial(mono(&[2], &[1]), Ring::Z);
        let prod = star_product(&a, &b, &ideal).unwrap();
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.coef(&mono(&[2, 3], &[0, 1])).abs(), 1);
        assert!(koszul_differential(&prod, &ideal).is_zero());
        assert!(star_product(&a, &a, &ideal).unwrap().is_zero());

        // product of the four one-dimensional classes of VR(Q3;2)
        let q3 = SRIdeal::new(p(3, 2));
        let mut acc = KoszulCochain::monomial(mono(&[], &[]), Ring::Z);
        for v in [0u32, 1, 2, 3] {
            let one = KoszulCochain::monomial(mono(&[7 - v], &[v]), Ring::Z);
            acc = star_product(&acc, &one, &q3).unwrap();
        }
        assert_eq!(acc.len(), 1);
        assert_eq!(acc.coef(&full(&[0, 1, 2, 3], 3)).abs(), 1);
    }

    #[test]
    fn ghost_restriction_examples() {
        let l2 = VertexSet::from_slice(&[0, 1, 4, 5, 8, 9, 12, 13]);
        let a1 = KoszulCochain::monomial(full(&[0, 1, 2, 3], 4), Ring::F2);
        let a2 = KoszulCochain::monomial(full(&[0, 1, 4, 5], 4), Ring::F2);
        assert!(ghost_restrict(&a1, &l2).is_zero());
        let pairs = detector_pairs(&l2, p(4, 2)).unwrap();
        assert_eq!(pairs.pairs(), &[(0, 13), (1, 12), (4, 9), (5, 8)]);
        assert_eq!(detect(&a2, &l2, &pairs).unwrap(), 1);
    }

    #[test]
    fn ghost_ranks_examples() {
        let params = p(4, 2);
        let l2 = GhostComplex::new(params, VertexSet::from_slice(&[0, 1, 4, 5, 8, 9, 12, 13])).unwrap();
        for d in -1..=3 {
            let g = ghost_cohomology_rank(&l2, d, Ring::F2, DEFAULT_MAX_SIMPLICES).unwrap();
            assert_eq!(g.koszul, usize::from(d == 3));
        }
        let point = GhostComplex::new(params, VertexSet::from_slice(&[6])).unwrap();
        for d in -1..=2 {
            assert_eq!(ghost_cohomology_rank(&point, d, Ring::Q, DEFAULT_MAX_SIMPLICES).unwrap().koszul, 0);
        }
    }

    #[test]
    fn simplicial_map_intertwines_differentials() {
        let ideal = SRIdeal::new(p(3, 1));
        let j = VertexSet::from_slice(&[0, 1, 3, 5, 7]);
        for b in [vec![1u32], vec![0, 1], vec![3, 7], vec![5]] {
            let bs = VertexSet::from_slice(&b);
            let m = KoszulMonomial { u: j.difference(&bs), x: bs.clone() };
            let c = KoszulCochain::monomial(m, Ring::Z);
            let dk = koszul_differential(&c, &ideal);
            let view = ComplexView::restricted(p(3, 1), j.clone()).unwrap();
            let delta = crate::homology::coboundary(&to_simplicial(&c).unwrap(), &view, usize::MAX).unwrap();
            let sign = parity_sign(b.len());
            if dk.is_zero() {
                assert!(delta.is_zero());
            } else {
                let lhs = to_simplicial(&dk).unwrap();
                assert_eq!(lhs, delta.scaled(sign.into()).unwrap());
            }
        }
    }
}
