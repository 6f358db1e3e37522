//! Taylor and Lyubeznik resolutions of the Stanley-Reisner ideal of
//! `VR(Q_n; r)`, and the dual complexes built from admissible products.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::chain::{parity_sign, Ring};
use crate::complex::{ComplexView, SimplexListDocument, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{betti, betti_of_complex};
use crate::hypercube::{antipode, hamming, Params, Vertex};

/// Generator order: by distance, then lexicographically.
pub fn compare_generators(p1: (Vertex, Vertex), p2: (Vertex, Vertex)) -> Ordering {
    let key = |(a, b): (Vertex, Vertex)| (hamming(a, b), a.min(b), a.max(b));
    key(p1).cmp(&key(p2))
}

/// The quadratic generators `x_a x_b` (`d(a, b) > r`) in generator order.
#[derive(Debug, Clone)]
pub struct TaylorIdeal {
    params: Params,
    pairs: Vec<(Vertex, Vertex)>,
    index: HashMap<(Vertex, Vertex), usize>,
}

impl TaylorIdeal {
    pub fn new(params: Params) -> Self {
        let m = params.order() as Vertex;
        let mut pairs: Vec<(Vertex, Vertex)> =
            (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| !params.adjacent(a, b)).collect();
        pairs.sort_by(|&p, &q| compare_generators(p, q));
        let index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Self { params, pairs, index }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, i: usize) -> (Vertex, Vertex) {
        self.pairs[i]
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    /// Position of the generator `x_a x_b` in generator order.
    pub fn index_of(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.index.get(&(a.min(b), a.max(b))).copied()
    }

    /// `e_I` from pair positions; they must be strictly increasing.
    pub fn generator(&self, ids: Vec<usize>) -> Result<TaylorGenerator> {
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Unsorted);
        }
        if let Some(&bad) = ids.iter().find(|&&i| i >= self.len()) {
            return Err(Error::InvalidParams(format!("generator index {bad} out of range")));
        }
        Ok(self.generator_unchecked(ids))
    }

    /// `e_I` from vertex pairs in any order; returns the sign of sorting them.
    pub fn generator_from_pairs(&self, pairs: &[(Vertex, Vertex)]) -> Result<(i64, TaylorGenerator)> {
        let mut ids = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            ids.push(self.index_of(a, b).ok_or_else(|| {
                Error::InvalidPairs(format!("({a},{b}) is not a generator: distance {} <= r", hamming(a, b)))
            })?);
        }
        let sign = sort_sign(&mut ids);
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPairs("repeated generator".into()));
        }
        Ok((sign, self.generator_unchecked(ids)))
    }

    fn generator_unchecked(&self, ids: Vec<usize>) -> TaylorGenerator {
        let lcm = ids.iter().flat_map(|&i| [self.pairs[i].0, self.pairs[i].1]).collect();
        TaylorGenerator { ids, lcm }
    }

    /// Reverse admissibility: for every prefix, no later generator divides
    /// the prefix lcm.
    pub fn is_admissible(&self, e: &TaylorGenerator) -> Result<bool> {
        if e.ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Unsorted);
        }
        let mut lcm: Vec<Vertex> = Vec::new();
        for &i in &e.ids {
            let (a, b) = self.pairs[i];
            for v in [a, b] {
                if !lcm.contains(&v) {
                    lcm.push(v);
                }
            }
            for (k, &u) in lcm.iter().enumerate() {
                for &v in &lcm[k + 1..] {
                    if let Some(q) = self.index_of(u, v) {
                        if q > i {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// `Θ_n`: the product of all antipodal-pair generators.
    pub fn theta(&self) -> Result<TaylorGenerator> {
        let n = self.params.n;
        let mut ids = Vec::new();
        for i in 0..1u32 << (n - 1) {
            ids.push(self.index_of(i, antipode(i, n)).ok_or_else(|| {
                Error::InvalidParams(format!("antipodal pairs are not generators when r >= n (r={})", self.params.r))
            })?);
        }
        ids.sort_unstable();
        Ok(self.generator_unchecked(ids))
    }
}

fn sort_sign(ids: &mut [usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if ids[i] > ids[j] {
                inv += 1;
            }
        }
    }
    ids.sort_unstable();
    parity_sign(inv)
}

/// `e_I` with its cached lcm.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TaylorGenerator {
    ids: Vec<usize>,
    lcm: VertexSet,
}

impl TaylorGenerator {
    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn lcm(&self) -> &VertexSet {
        &self.lcm
    }

    /// Number of factors.
    pub fn filtration(&self) -> usize {
        self.ids.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DifferentialMode {
    /// Coefficients are squarefree monomials.
    Resolution,
    /// After tensoring with the field: only coefficient-one terms survive.
    Reduced,
}

/// A term `sign · x_coef · e_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorTerm {
    pub sign: i64,
    pub coef: VertexSet,
    pub generator: TaylorGenerator,
}

/// `δ(e_J) = Σ (-1)^{i-1} (m_J / m_{J∖j_i}) e_{J∖j_i}`.
pub fn taylor_differential(ideal: &TaylorIdeal, e: &TaylorGenerator, mode: DifferentialMode) -> Vec<TaylorTerm> {
    let mut out = Vec::new();
    for i in 0..e.ids.len() {
        let mut ids = e.ids.clone();
        ids.remove(i);
        let face = ideal.generator_unchecked(ids);
        let coef = e.lcm.difference(&face.lcm);
        if mode == DifferentialMode::Reduced && !coef.is_empty() {
            continue;
        }
        out.push(TaylorTerm { sign: parity_sign(i), coef, generator: face });
    }
    out
}

/// A linear combination of `x_coef · e_J`.
pub type TaylorChain = BTreeMap<(TaylorGenerator, VertexSet), i64>;

/// Apply the differential to a combination; coefficient monomials multiply.
pub fn taylor_differential_chain(ideal: &TaylorIdeal, c: &TaylorChain, mode: DifferentialMode) -> TaylorChain {
    let mut out = TaylorChain::new();
    for ((e, m), &k) in c {
        for t in taylor_differential(ideal, e, mode) {
            debug_assert!(t.coef.is_disjoint(m));
            let key = (t.generator, t.coef.union(m));
            let v = out.entry(key.clone()).or_insert(0);
            *v += k * t.sign;
            if *v == 0 {
                out.remove(&key);
            }
        }
    }
    out
}

/// `e_W * e_Q`: zero if `W ∩ Q ≠ ∅`, else `±(m_W m_Q / m_{W∪Q}) e_{W∪Q}`.
pub fn gemeda_product(
    ideal: &TaylorIdeal,
    w: &TaylorGenerator,
    q: &TaylorGenerator,
    mode: DifferentialMode,
) -> Option<TaylorTerm> {
    if w.ids.iter().any(|i| q.ids.binary_search(i).is_ok()) {
        return None;
    }
    let coef = w.lcm.intersection(&q.lcm);
    if mode == DifferentialMode::Reduced && !coef.is_empty() {
        return None;
    }
    let mut ids: Vec<usize> = w.ids.iter().chain(&q.ids).copied().collect();
    let sign = sort_sign(&mut ids);
    Some(TaylorTerm { sign, coef, generator: ideal.generator_unchecked(ids) })
}

/// Split an admissible full-support `e_I` as `e_J Θ_n`.
pub fn decompose_full_support(ideal: &TaylorIdeal, e: &TaylorGenerator) -> Result<(TaylorGenerator, TaylorGenerator)> {
    let params = ideal.params();
    if e.lcm != VertexSet::full(params.order()) || !ideal.is_admissible(e)? {
        return Err(Error::NotFullSupportAdmissible);
    }
    let theta = ideal.theta()?;
    for &t in &theta.ids {
        if e.ids.binary_search(&t).is_err() {
            let (a, b) = ideal.pair(t);
            return Err(Error::LemmaViolation(a, b));
        }
    }
    let rest: Vec<usize> = e.ids.iter().copied().filter(|i| theta.ids.binary_search(i).is_err()).collect();
    let j = ideal.generator_unchecked(rest);
    if !ideal.is_admissible(&j)? {
        return Err(Error::Internal("factor of an admissible generator is not admissible".into()));
    }
    Ok((j, theta))
}

/// All admissible generators of filtration at most `max_filtration`, found by
/// extending admissible prefixes.
pub fn admissible_generators(ideal: &TaylorIdeal, max_filtration: usize, cap: usize) -> Result<Vec<TaylorGenerator>> {
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn walk(
        ideal: &TaylorIdeal,
        stack: &mut Vec<usize>,
        max: usize,
        cap: usize,
        out: &mut Vec<TaylorGenerator>,
    ) -> Result<()> {
        let start = stack.last().map_or(0, |&l| l + 1);
        for i in start..ideal.len() {
            stack.push(i);
            let g = ideal.generator_unchecked(stack.clone());
            if ideal.is_admissible(&g)? {
                if out.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "admissible generator enumeration".into(),
                        limit: cap,
                        dim_reached: stack.len(),
                    });
                }
                out.push(g);
                if stack.len() < max {
                    walk(ideal, stack, max, cap, out)?;
                }
            }
            stack.pop();
        }
        Ok(())
    }
    walk(ideal, &mut stack, max_filtration, cap, &mut out)?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DualVariant {
    /// Faces are admissible products.
    C,
    /// Faces are products whose endpoints contain no antipodal pair.
    J,
}

impl std::str::FromStr for DualVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "c" => Ok(Self::C),
            "J" | "j" => Ok(Self::J),
            other => Err(Error::Parse(format!("unknown dual variant {other:?}"))),
        }
    }
}

/// A dual complex on the pairs at intermediate distance `r < d < n`.
#[derive(Debug, Clone)]
pub struct DualComplex {
    pub params: Params,
    pub variant: DualVariant,
    /// Vertex `i` is the pair `vertices[i]`; pairs are in generator order.
    pub vertices: Vec<(Vertex, Vertex)>,
    pub complex: SimplicialComplex,
}

impl DualComplex {
    pub fn to_document(&self) -> SimplexListDocument {
        let mut doc = self.complex.to_document(self.params);
        doc.vertex_labels = Some(self.vertices.iter().map(|&(a, b)| vec![a, b]).collect());
        doc
    }
}

/// Pairs with `r < d(a, b) < n`, in generator order.
pub fn dual_vertices(params: Params) -> Vec<(Vertex, Vertex)> {
    TaylorIdeal::new(params).pairs.into_iter().filter(|&(a, b)| hamming(a, b) < params.n).collect()
}

fn modified_admissible(n: u32, pairs: &[(Vertex, Vertex)]) -> bool {
    let ends: VertexSet = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    !ends.iter().any(|v| ends.contains(antipode(v, n)))
}

/// Adjacency of the 1-skeleton of a dual complex, as neighbour sets over
/// vertex positions.
pub fn dual_graph(params: Params, variant: DualVariant) -> Result<(Vec<(Vertex, Vertex)>, Vec<VertexSet>)> {
    let verts = dual_vertices(params);
    let ideal = TaylorIdeal::new(params);
    let mut adj = vec![VertexSet::new(); verts.len()];
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let ok = match variant {
                DualVariant::J => modified_admissible(params.n, &[verts[i], verts[j]]),
                DualVariant::C => {
                    let (_, g) = ideal.generator_from_pairs(&[verts[i], verts[j]])?;
                    ideal.is_admissible(&g)?
                }
            };
            if ok {
                adj[i].insert(j as u32);
                adj[j].insert(i as u32);
            }
        }
    }
    Ok((verts, adj))
}

/// Build `𝒞_{n,r}` or `𝒥_{n,r}` up to `dim_cap` as the clique complex of its
/// pairwise graph.
pub fn build_dual_complex(params: Params, variant: DualVariant, dim_cap: usize, cap: usize) -> Result<DualComplex> {
    let (vertices, adj) = dual_graph(params, variant)?;
    let all = VertexSet::full(vertices.len());
    let complex = SimplicialComplex::clique_complex(|v| Cow::Borrowed(&adj[v as usize]), &all, dim_cap, cap)?;
    Ok(DualComplex { params, variant, vertices, complex })
}

/// Whether a set of dual vertices spans a face, tested directly from the
/// definition rather than pairwise.
pub fn is_dual_face(params: Params, variant: DualVariant, pairs: &[(Vertex, Vertex)]) -> Result<bool> {
    match variant {
        DualVariant::J => Ok(modified_admissible(params.n, pairs)),
        DualVariant::C => {
            let ideal = TaylorIdeal::new(params);
            let (_, g) = ideal.generator_from_pairs(pairs)?;
            ideal.is_admissible(&g)
        }
    }
}

/// Vertex count and degree range of the complement of the 1-skeleton of `𝒥`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementStats {
    pub vertices: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

pub fn complement_graph_stats(params: Params) -> Result<ComplementStats> {
    let (verts, adj) = dual_graph(params, DualVariant::J)?;
    let m = verts.len();
    let degrees: Vec<usize> = adj.iter().map(|a| m - 1 - a.len()).collect();
    Ok(ComplementStats {
        vertices: m,
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
    })
}

/// Ranks on both sides of the duality in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualComparison {
    pub n: u32,
    pub r: u32,
    pub t: usize,
    /// `2^(n-1) - t - 1`.
    pub vr_degree: i64,
    pub vr_rank: usize,
    pub c_rank: usize,
    pub j_rank: usize,
    pub c_matches: bool,
    pub j_bounds: bool,
}

/// Compare `rank H^{2^(n-1)-t-1}(VR(Q_n; r))` with `rank H̃_{t-1}` of both
/// dual complexes.
pub fn dual_homology_check(
    params: Params,
    t: usize,
    ring: Ring,
    max_simplices: usize,
    max_matrix: usize,
) -> Result<DualComparison> {
    if t < 2 {
        return Err(Error::InvalidParams("the duality holds for t > 1".into()));
    }
    let vr_degree = (1i64 << (params.n - 1)) - t as i64 - 1;
    let vr_rank = if vr_degree < -1 {
        0
    } else {
        let view = ComplexView::new(params);
        betti(&view, vr_degree.max(0) as usize, ring, max_simplices, max_matrix)?.get(vr_degree)
    };
    let rank_of = |variant| -> Result<usize> {
        let d = build_dual_complex(params, variant, t, max_simplices)?;
        Ok(betti_of_complex(&d.complex, t - 1, ring, max_matrix)?.get(t as i64 - 1))
    };
    let c_rank = rank_of(DualVariant::C)?;
    let j_rank = rank_of(DualVariant::J)?;
    Ok(DualComparison {
        n: params.n,
        r: params.r,
        t,
        vr_degree,
        vr_rank,
        c_rank,
        j_rank,
        c_matches: vr_rank == c_rank,
        j_bounds: vr_rank <= j_rank,
    })
}
