//! Vietoris-Rips complexes of hypercubes as flag complexes.
//!
//! `VR(Q_n; r)` is never stored as a whole. A [`ComplexView`] answers face
//! queries from Hamming distances alone, and [`ComplexView::enumerate_skeleton`]
//! materializes a skeleton as a [`SimplicialComplex`] when one is needed.

use std::borrow::Cow;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::chain::{parity_sign, Chain, Ring};
use crate::error::{Error, Result};
use crate::hypercube::{hamming, Params, Vertex};

/// Default cap on the number of simplices a single enumeration may produce.
pub const DEFAULT_MAX_SIMPLICES: usize = 50_000_000;

/// Neighbor sets are cached for cubes up to this dimension.
pub const ADJACENCY_CACHE_MAX_N: u32 = 13;

/// A simplex as a strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Self(vertices))
    }

    /// Sort an oriented vertex list, returning the sign of the sorting
    /// permutation.
    pub fn from_ordered(vertices: Vec<Vertex>) -> Result<(i64, Self)> {
        let mut inversions = 0usize;
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i] > vertices[j] {
                    inversions += 1;
                }
            }
        }
        Ok((parity_sign(inversions), Self::new(vertices)?))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `len - 1`; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn bitform(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Codimension-one faces with their incidence signs `(-1)^i`.
    pub fn facets(&self) -> impl Iterator<Item = (i64, Simplex)> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut vs = self.0.clone();
            vs.remove(i);
            (parity_sign(i), Simplex(vs))
        })
    }

    /// `self ∪ {v}` and the incidence sign of `self` inside it.
    pub fn with_vertex(&self, v: Vertex) -> (i64, Simplex) {
        let pos = self.0.partition_point(|&x| x < v);
        let mut vs = self.0.clone();
        vs.insert(pos, v);
        (parity_sign(pos), Simplex(vs))
    }

    /// Largest pairwise Hamming distance.
    pub fn diameter(&self) -> u32 {
        let mut d = 0;
        for (i, &a) in self.0.iter().enumerate() {
            for &b in &self.0[i + 1..] {
                d = d.max(hamming(a, b));
            }
        }
        d
    }
}

/// A face-query view of `VR(Q_n; r)`, optionally restricted to the full
/// subcomplex on a vertex subset and truncated at a dimension.
#[derive(Debug, Clone)]
pub struct ComplexView {
    params: Params,
    vertex_subset: Option<VertexSet>,
    dim_cap: Option<usize>,
    adjacency: Arc<OnceLock<Vec<VertexSet>>>,
}

impl ComplexView {
    pub fn new(params: Params) -> Self {
        Self { params, vertex_subset: None, dim_cap: None, adjacency: Arc::default() }
    }

    /// Full subcomplex on `subset`.
    pub fn restricted(params: Params, subset: VertexSet) -> Result<Self> {
        if let Some(v) = subset.iter().last() {
            params.check_vertex(v)?;
        }
        Ok(Self { vertex_subset: Some(subset), ..Self::new(params) })
    }

    pub fn with_dim_cap(mut self, cap: usize) -> Self {
        self.dim_cap = Some(cap);
        self
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn vertex_subset(&self) -> Option<&VertexSet> {
        self.vertex_subset.as_ref()
    }

    pub fn dim_cap(&self) -> Option<usize> {
        self.dim_cap
    }

    #[inline]
    pub fn is_live(&self, v: Vertex) -> bool {
        (v as usize) < self.params.order() && self.vertex_subset.as_ref().is_none_or(|j| j.contains(v))
    }

    pub fn live_vertices(&self) -> VertexSet {
        match &self.vertex_subset {
            Some(j) => j.clone(),
            None => VertexSet::full(self.params.order()),
        }
    }

    fn raw_neighbors(&self, v: Vertex) -> VertexSet {
        (0..self.params.order() as Vertex).filter(|&w| w != v && self.params.adjacent(v, w)).collect()
    }

    fn cached(&self) -> Option<&Vec<VertexSet>> {
        if self.params.n > ADJACENCY_CACHE_MAX_N {
            return None;
        }
        Some(self.adjacency.get_or_init(|| (0..self.params.order() as Vertex).map(|v| self.raw_neighbors(v)).collect()))
    }

    /// Live vertices adjacent to `v` (excluding `v`).
    pub fn neighbors(&self, v: Vertex) -> Cow<'_, VertexSet> {
        let base = match self.cached() {
            Some(adj) => Cow::Borrowed(&adj[v as usize]),
            None => Cow::Owned(self.raw_neighbors(v)),
        };
        match &self.vertex_subset {
            Some(j) => Cow::Owned(base.intersection(j)),
            None => base,
        }
    }

    /// True iff all vertices are live and all pairwise distances are at most `r`.
    pub fn is_simplex(&self, s: &Simplex) -> bool {
        if let Some(cap) = self.dim_cap {
            if s.dim() > cap as isize {
                return false;
            }
        }
        s.vertices().iter().all(|&v| self.is_live(v)) && s.diameter() <= self.params.r
    }

    /// Live vertices outside `s` that extend it to a larger simplex.
    pub fn extension_vertices(&self, s: &Simplex) -> VertexSet {
        let mut it = s.vertices().iter();
        let Some(&first) = it.next() else {
            return self.live_vertices();
        };
        let mut common = self.neighbors(first).into_owned();
        for &v in it {
            common.intersect_with(&self.neighbors(v));
        }
        common
    }

    /// True iff `s` is a face that no live vertex extends.
    pub fn is_maximal_simplex(&self, s: &Simplex) -> bool {
        if !self.is_simplex(s) {
            return false;
        }
        if let Some(cap) = self.dim_cap {
            if s.dim() >= cap as isize {
                return true;
            }
        }
        self.extension_vertices(s).is_empty()
    }

    /// All faces up to dimension `max_dim` (further limited by the view's
    /// dimension cap), in canonical order.
    pub fn enumerate_skeleton(&self, max_dim: usize, cap: usize) -> Result<SimplicialComplex> {
        let max_dim = self.dim_cap.map_or(max_dim, |c| c.min(max_dim));
        let live = self.live_vertices();
        SimplicialComplex::clique_complex(|v| self.neighbors(v), &live, max_dim, cap)
    }

    /// Maximal faces, via Bron-Kerbosch with pivoting.
    pub fn maximal_simplices(&self, cap: usize) -> Result<Vec<Simplex>> {
        maximal_cliques(|v| self.neighbors(v), &self.live_vertices(), cap)
    }
}

/// An explicit finite simplicial complex stored dimension by dimension.
#[derive(Debug, Clone, Default)]
pub struct SimplicialComplex {
    dims: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl SimplicialComplex {
    /// Build from per-dimension lists; each list is sorted into canonical order.
    pub fn from_dims(mut dims: Vec<Vec<Simplex>>) -> Self {
        while dims.last().is_some_and(|d| d.is_empty()) {
            dims.pop();
        }
        for d in &mut dims {
            d.sort();
            d.dedup();
        }
        let index = dims.iter().map(|d| d.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        Self { dims, index }
    }

    /// Downward closure of a set of simplices.
    pub fn from_facets(facets: &[Simplex]) -> Self {
        let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut dims: Vec<Vec<Simplex>> = vec![Vec::new(); top];
        for f in facets {
            let k = f.len();
            for m in 1u64..1 << k {
                let vs: Vec<Vertex> = (0..k).filter(|i| m >> i & 1 == 1).map(|i| f.vertices()[i]).collect();
                dims[vs.len() - 1].push(Simplex(vs));
            }
        }
        Self::from_dims(dims)
    }

    /// Clique complex of a graph given by its neighbor function, restricted to
    /// `vertices`, up to dimension `max_dim`.
    pub fn clique_complex<'a, N>(neighbors: N, vertices: &VertexSet, max_dim: usize, cap: usize) -> Result<Self>
    where
        N: Fn(Vertex) -> Cow<'a, VertexSet>,
    {
        let mut dims: Vec<Vec<Simplex>> = vec![Vec::new(); max_dim + 1];
        let mut count = 0usize;
        let mut stack = Vec::new();
        for v in vertices.iter() {
            let cand = neighbors(v).intersection(vertices);
            stack.push(v);
            grow_cliques(&neighbors, &mut stack, cand, max_dim, cap, &mut count, &mut dims)?;
            stack.pop();
        }
        Ok(Self::from_dims(dims))
    }

    /// Number of stored dimensions (top dimension + 1; 0 for the void complex).
    pub fn num_dims(&self) -> usize {
        self.dims.len()
    }

    pub fn is_void(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.dims.get(k).map_or(&[], |d| d.as_slice())
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn index_of(&self, k: usize, s: &Simplex) -> Option<usize> {
        self.index.get(k)?.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        s.len() >= 1 && self.index_of(s.len() - 1, s).is_some()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.dims.iter().map(|d| d.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(k, d)| parity_sign(k) * d.len() as i64).sum()
    }

    /// Maximal clique size among stored simplices.
    pub fn max_face_size(&self) -> usize {
        self.dims.len()
    }

    pub fn to_document(&self, params: Params) -> SimplexListDocument {
        SimplexListDocument {
            n: params.n,
            r: params.r,
            dims: self
                .dims
                .iter()
                .enumerate()
                .map(|(k, d)| (k, d.iter().map(|s| s.vertices().to_vec()).collect()))
                .collect(),
            vertex_labels: None,
        }
    }
}

fn grow_cliques<'a, N>(
    neighbors: &N,
    stack: &mut Vec<Vertex>,
    cand: VertexSet,
    max_dim: usize,
    cap: usize,
    count: &mut usize,
    dims: &mut [Vec<Simplex>],
) -> Result<()>
where
    N: Fn(Vertex) -> Cow<'a, VertexSet>,
{
    let dim = stack.len() - 1;
    *count += 1;
    if *count > cap {
        return Err(Error::CapExceeded { what: "simplex enumeration".into(), limit: cap, dim_reached: dim });
    }
    dims[dim].push(Simplex(stack.clone()));
    if dim == max_dim {
        return Ok(());
    }
    let last = *stack.last().expect("non-empty clique");
    for w in cand.iter().filter(|&w| w > last) {
        let next = cand.intersection(&neighbors(w));
        stack.push(w);
        grow_cliques(neighbors, stack, next, max_dim, cap, count, dims)?;
        stack.pop();
    }
    Ok(())
}

/// All maximal cliques of the graph restricted to `vertices`, sorted.
pub fn maximal_cliques<'a, N>(neighbors: N, vertices: &VertexSet, cap: usize) -> Result<Vec<Simplex>>
where
    N: Fn(Vertex) -> Cow<'a, VertexSet>,
{
    fn bk<'a, N: Fn(Vertex) -> Cow<'a, VertexSet>>(
        nb: &N,
        vertices: &VertexSet,
        r: &mut Vec<Vertex>,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<Simplex>,
        cap: usize,
    ) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                if out.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "maximal clique enumeration".into(),
                        limit: cap,
                        dim_reached: r.len().saturating_sub(1),
                    });
                }
                let mut s = r.clone();
                s.sort_unstable();
                out.push(Simplex(s));
            }
            return Ok(());
        }
        // pivot: vertex of P ∪ X with most neighbors in P
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (nb(u).intersection_len(&p), std::cmp::Reverse(u)))
            .expect("P non-empty");
        let skip = nb(pivot).into_owned();
        for v in p.difference(&skip).to_vec() {
            let nv = nb(v).intersection(vertices);
            r.push(v);
            bk(nb, vertices, r, p.intersection(&nv), x.intersection(&nv), out, cap)?;
            r.pop();
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
    let mut out = Vec::new();
    bk(&neighbors, vertices, &mut Vec::new(), vertices.clone(), VertexSet::new(), &mut out, cap)?;
    out.sort();
    Ok(out)
}

/// Vertex pairs spanning the boundary of a cross-polytope: each pair is a
/// missing edge, every other pair of the `2m` vertices is an edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossPolytopePairs {
    pairs: Vec<(Vertex, Vertex)>,
}

impl CrossPolytopePairs {
    pub fn new(pairs: Vec<(Vertex, Vertex)>, view: &ComplexView) -> Result<Self> {
        let mut seen = VertexSet::new();
        for &(v, w) in &pairs {
            for x in [v, w] {
                if !view.is_live(x) {
                    return Err(Error::InvalidPairs(format!("vertex {x} is not a vertex of the complex")));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidPairs(format!("vertex {x} appears twice")));
                }
            }
            if view.params().adjacent(v, w) {
                return Err(Error::InvalidPairs(format!(
                    "pair {{{v},{w}}} is an edge (distance {} <= {})",
                    hamming(v, w),
                    view.params().r
                )));
            }
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
                    if !view.params().adjacent(x, y) {
                        return Err(Error::InvalidPairs(format!(
                            "cross pair {{{x},{y}}} is not an edge (distance {})",
                            hamming(x, y)
                        )));
                    }
                }
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.pairs.iter().flat_map(|&(v, w)| [v, w]).collect()
    }

    /// The fundamental `(m-1)`-cycle: the join of the 0-cycles `[w_i] - [v_i]`.
    /// A simplex choosing the first element in `k` slots carries `(-1)^k`
    /// times the sign of sorting its pair-ordered vertex list.
    pub fn cycle(&self, ring: Ring) -> Result<Chain> {
        let m = self.pairs.len();
        if m == 0 {
            return Err(Error::InvalidPairs("no pairs".into()));
        }
        let mut ch = Chain::zero(m - 1, ring);
        for choice in 0u64..1 << m {
            let picked: Vec<Vertex> =
                self.pairs.iter().enumerate().map(|(i, &(v, w))| if choice >> i & 1 == 1 { w } else { v }).collect();
            let firsts = m - choice.count_ones() as usize;
            let (sign, s) = Simplex::from_ordered(picked)?;
            ch.add_term(s, Rational64::from_integer(sign * parity_sign(firsts)))?;
        }
        Ok(ch)
    }

    /// Explicit boundary-of-cross-polytope complex on the `2m` vertices.
    pub fn complex(&self) -> SimplicialComplex {
        let facets: Vec<Simplex> = (0u64..1 << self.pairs.len())
            .map(|choice| {
                let vs = self
                    .pairs
                    .iter()
                    .enumerate()
                    .map(|(i, &(v, w))| if choice >> i & 1 == 1 { w } else { v })
                    .collect();
                Simplex::new(vs).expect("distinct vertices")
            })
            .collect();
        SimplicialComplex::from_facets(&facets)
    }
}

/// The cycle of a validated set of cross-polytope pairs; every simplex of the
/// result is a face of `view`.
pub fn cross_polytope_cycle(pairs: &CrossPolytopePairs, view: &ComplexView, ring: Ring) -> Result<Chain> {
    let ch = pairs.cycle(ring)?;
    if let Some(bad) = ch.support().find(|s| !view.is_simplex(s)) {
        return Err(Error::NotAFace(bad.vertices().to_vec()));
    }
    Ok(ch)
}

/// The unique simplex of a cross-polytope cycle on `Q_n` whose vertices all lie
/// below `2^(n-1)`.
pub fn small_chain(cycle: &Chain, n: u32) -> Result<Simplex> {
    let half = 1u32 << (n - 1);
    let found: Vec<&Simplex> = cycle.support().filter(|s| s.vertices().iter().all(|&v| v < half)).collect();
    match found.as_slice() {
        [one] => Ok((*one).clone()),
        _ => Err(Error::SmallChain { found: found.len() }),
    }
}

/// `VR(Q_n; r)` on all `2^n` vertices with the vertices outside `live` kept
/// only algebraically (each killed by a degree-one generator).
#[derive(Debug, Clone)]
pub struct GhostComplex {
    params: Params,
    live: VertexSet,
    view: ComplexView,
}

impl GhostComplex {
    pub fn new(params: Params, live: VertexSet) -> Result<Self> {
        let view = ComplexView::restricted(params, live.clone())?;
        Ok(Self { params, live, view })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn live(&self) -> &VertexSet {
        &self.live
    }

    pub fn ghosts(&self) -> VertexSet {
        VertexSet::full(self.params.order()).difference(&self.live)
    }

    pub fn view(&self) -> &ComplexView {
        &self.view
    }

    pub fn is_face(&self, s: &Simplex) -> bool {
        self.view.is_simplex(s)
    }
}

pub fn ghost_complex(params: Params, live: VertexSet) -> Result<GhostComplex> {
    GhostComplex::new(params, live)
}

/// JSON simplex-list form: `{"n", "r", "dims": {"0": [[v], ..], ..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexListDocument {
    pub n: u32,
    pub r: u32,
    pub dims: BTreeMap<usize, Vec<Vec<Vertex>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_labels: Option<Vec<Vec<Vertex>>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::boundary_unchecked;

    fn view(n: u32, r: u32) -> ComplexView {
        ComplexView::new(Params::new(n, r).unwrap())
    }

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn is_simplex_examples() {
        assert!(view(4, 2).is_simplex(&s(&[0, 1, 2, 3])));
        assert!(!view(3, 2).is_simplex(&s(&[0, 7])));
        assert!(view(5, 3).is_simplex(&s(&[1, 2, 4, 8, 15])));
        let j = ComplexView::restricted(Params::new(4, 2).unwrap(), VertexSet::from_slice(&[0, 1, 2])).unwrap();
        assert!(!j.is_simplex(&s(&[0, 1, 3])));
        assert!(j.is_simplex(&s(&[0, 1, 2])));
    }

    #[test]
    fn skeleton_counts() {
        let c = view(3, 1).enumerate_skeleton(2, DEFAULT_MAX_SIMPLICES).unwrap();
        assert_eq!(c.f_vector(), vec![8, 12]);
        let c = view(2, 1).enumerate_skeleton(1, DEFAULT_MAX_SIMPLICES).unwrap();
        assert_eq!(c.f_vector(), vec![4, 4]);
        let c = view(3, 2).enumerate_skeleton(3, DEFAULT_MAX_SIMPLICES).unwrap();
        assert_eq!(c.count(3), 16);
        for t in c.simplices(3) {
            assert!(view(3, 2).is_maximal_simplex(t));
        }
    }

    #[test]
    fn skeleton_matches_brute_force_triples() {
        let v = view(4, 2);
        let c = v.enumerate_skeleton(2, DEFAULT_MAX_SIMPLICES).unwrap();
        let mut brute = 0;
        for a in 0..16 {
            for b in a + 1..16 {
                for d in b + 1..16 {
                    if v.is_simplex(&s(&[a, b, d])) {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(c.count(2), brute);
        assert!(c.simplices(2).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn cap_exceeded_reports_dimension() {
        let err = view(4, 2).enumerate_skeleton(4, 30).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { limit: 30, .. }));
    }

    #[test]
    fn maximality_examples() {
        assert!(view(3, 2).is_maximal_simplex(&s(&[0, 1, 2, 3])));
        assert!(!view(4, 2).is_maximal_simplex(&s(&[0, 1, 2, 4])));
        assert!(view(4, 2).extension_vertices(&s(&[0, 1, 2, 4])).contains(8));
    }

    #[test]
    fn maximal_cliques_agree_with_skeleton() {
        let v = view(4, 2);
        let facets = v.maximal_simplices(DEFAULT_MAX_SIMPLICES).unwrap();
        assert!(facets.iter().all(|f| v.is_maximal_simplex(f)));
        let rebuilt = SimplicialComplex::from_facets(&facets);
        let direct = v.enumerate_skeleton(10, DEFAULT_MAX_SIMPLICES).unwrap();
        assert_eq!(rebuilt.f_vector(), direct.f_vector());
        assert_eq!(direct.max_face_size(), 5);
    }

    #[test]
    fn cross_polytope_examples() {
        let v5 = view(5, 3);
        let pairs = CrossPolytopePairs::new(vec![(1, 30), (2, 29), (4, 27), (8, 23), (15, 16)], &v5).unwrap();
        let cyc = cross_polytope_cycle(&pairs, &v5, Ring::Z).unwrap();
        assert_eq!(cyc.len(), 32);
        assert_eq!(cyc.dim(), 4);
        assert!(boundary_unchecked(&cyc).is_zero());
        assert_eq!(small_chain(&cyc, 5).unwrap(), s(&[1, 2, 4, 8, 15]));

        let v3 = view(3, 2);
        let p = CrossPolytopePairs::new(vec![(0, 7)], &v3).unwrap();
        let c = p.cycle(Ring::Z).unwrap();
        assert_eq!(c.coef(&s(&[7])), 1.into());
        assert_eq!(c.coef(&s(&[0])), (-1).into());
        assert_eq!(small_chain(&c, 3).unwrap(), s(&[0]));

        let v2 = view(2, 1);
        let sq = CrossPolytopePairs::new(vec![(0, 3), (1, 2)], &v2).unwrap().cycle(Ring::Z).unwrap();
        assert_eq!(sq.len(), 4);
        assert!(boundary_unchecked(&sq).is_zero());

        let b = CrossPolytopePairs::new(vec![(0, 31), (3, 28), (5, 26), (9, 22), (17, 14)], &v5).unwrap();
        assert_eq!(small_chain(&b.cycle(Ring::F2).unwrap(), 5).unwrap(), s(&[0, 3, 5, 9, 14]));
    }

    #[test]
    fn invalid_pairs_are_named() {
        let v = view(3, 2);
        let e = CrossPolytopePairs::new(vec![(0, 1)], &v).unwrap_err();
        assert!(e.to_string().contains("{0,1}"));
        let e = CrossPolytopePairs::new(vec![(0, 7), (1, 6), (2, 6)], &v).unwrap_err();
        assert!(e.to_string().contains("twice"));
    }

    #[test]
    fn ghost_examples() {
        let p = Params::new(4, 2).unwrap();
        let full = ghost_complex(p, VertexSet::full(16)).unwrap();
        let plain = view(4, 2);
        let l2 = ghost_complex(p, VertexSet::from_slice(&[0, 1, 4, 5, 8, 9, 12, 13])).unwrap();
        let none = ghost_complex(p, VertexSet::new()).unwrap();
        for t in plain.enumerate_skeleton(4, DEFAULT_MAX_SIMPLICES).unwrap().simplices(2) {
            assert!(full.is_face(t));
            assert_eq!(l2.is_face(t), t.vertices().iter().all(|&v| l2.live().contains(v)));
            assert!(!none.is_face(t));
        }
        assert!(none.view().enumerate_skeleton(3, 10).unwrap().is_void());
        assert_eq!(l2.ghosts().to_vec(), vec![2, 3, 6, 7, 10, 11, 14, 15]);
    }
}
