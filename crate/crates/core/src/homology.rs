//! Reduced (co)homology of explicit complexes, boundaries, coboundaries and
//! the chain/cochain pairing.

use std::collections::{BTreeMap, VecDeque};

use num_rational::Rational64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Cochain, Ring};
use crate::complex::{ComplexView, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;

/// Boundary of a chain, checking that every simplex is a face of `view`.
pub fn boundary(c: &Chain, view: &ComplexView) -> Result<Chain> {
    if let Some(bad) = c.support().find(|s| !view.is_simplex(s)) {
        return Err(Error::NotAFace(bad.vertices().to_vec()));
    }
    if c.dim() == 0 {
        return Err(Error::Mismatch("boundary of a 0-chain is not a chain".into()));
    }
    Ok(boundary_unchecked(c))
}

/// Boundary with no face checks. A 0-chain maps to the zero 0-chain.
pub fn boundary_unchecked(c: &Chain) -> Chain {
    if c.dim() == 0 {
        return Chain::zero(0, c.ring());
    }
    let mut out = Chain::zero(c.dim() - 1, c.ring());
    for (s, coef) in c.iter() {
        for (sign, f) in s.facets() {
            out.add_term(f, *coef * Rational64::from_integer(sign)).expect("coefficients already normalized");
        }
    }
    out
}

/// Coboundary of a cochain inside `view`: one term per cofacet `τ` with
/// `δφ(τ) = Σ [τ:σ] φ(σ)`. Cofacets are found by intersecting neighbor sets.
pub fn coboundary(phi: &Cochain, view: &ComplexView, cap: usize) -> Result<Cochain> {
    let mut out = Chain::zero(phi.dim() + 1, phi.ring());
    let mut visited = 0usize;
    for (s, coef) in phi.iter() {
        if !view.is_simplex(s) {
            return Err(Error::NotAFace(s.vertices().to_vec()));
        }
        if view.dim_cap().is_some_and(|c| s.dim() >= c as isize) {
            continue;
        }
        for v in view.extension_vertices(s).iter() {
            visited += 1;
            if visited > cap {
                return Err(Error::CapExceeded {
                    what: "cofacet enumeration".into(),
                    limit: cap,
                    dim_reached: phi.dim() + 1,
                });
            }
            let (sign, tau) = s.with_vertex(v);
            out.add_term(tau, *coef * Rational64::from_integer(sign))?;
        }
    }
    Ok(out)
}

pub fn is_cocycle(phi: &Cochain, view: &ComplexView, cap: usize) -> Result<bool> {
    Ok(coboundary(phi, view, cap)?.is_zero())
}

/// `Σ β(σ) φ(σ)` in the common ring.
pub fn pair(beta: &Chain, phi: &Cochain) -> Result<Rational64> {
    if beta.dim() != phi.dim() || beta.ring() != phi.ring() {
        return Err(Error::Mismatch(format!(
            "pairing a {}-chain over {} with a {}-cochain over {}",
            beta.dim(),
            beta.ring(),
            phi.dim(),
            phi.ring()
        )));
    }
    let (small, large) = if beta.len() <= phi.len() { (beta, phi) } else { (phi, beta) };
    let total = small.iter().map(|(s, c)| *c * large.coef(s)).fold(Rational64::zero(), |a, b| a + b);
    beta.ring().normalize(total)
}

/// Boundary matrix `C_k -> C_{k-1}` in canonical simplex order. For `k = 0`
/// this is the augmentation onto a single row.
pub fn boundary_matrix(cx: &SimplicialComplex, k: usize) -> SparseMatrix {
    if k == 0 {
        let mut m = SparseMatrix::new(1);
        for _ in cx.simplices(0) {
            m.push_col([(0, 1)]);
        }
        return m;
    }
    let mut m = SparseMatrix::new(cx.count(k - 1));
    for s in cx.simplices(k) {
        m.push_col(s.facets().map(|(sign, f)| {
            let row = cx.index_of(k - 1, &f).expect("complex is closed under faces");
            (row as u32, sign)
        }));
    }
    m
}

/// Reduced Betti numbers, indexed from dimension `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiProfile {
    pub ring: Ring,
    pub max_dim: usize,
    pub reduced: BTreeMap<i64, usize>,
    /// Torsion coefficients of `H_k(K; Z)` (values greater than one), keyed by
    /// `k`; only present for integral computations.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub torsion: BTreeMap<i64, Vec<u128>>,
    pub face_counts: Vec<usize>,
}

impl BettiProfile {
    pub fn get(&self, k: i64) -> usize {
        self.reduced.get(&k).copied().unwrap_or(0)
    }

    /// Reduced Betti numbers as a list from dimension 0.
    pub fn from_zero(&self) -> Vec<usize> {
        (0..=self.max_dim as i64).map(|k| self.get(k)).collect()
    }
}

fn matrix_rank(m: &SparseMatrix, ring: Ring) -> usize {
    match ring {
        Ring::F2 => m.rank_f2(),
        Ring::Q | Ring::Z => m.rank_q(),
    }
}

/// Reduced Betti numbers of `cx` in dimensions `-1..=max_dim`. The complex
/// must contain its `(max_dim + 1)`-faces for the top number to be correct.
pub fn betti_of_complex(cx: &SimplicialComplex, max_dim: usize, ring: Ring, max_matrix: usize) -> Result<BettiProfile> {
    // ranks of ∂_0 (augmentation) .. ∂_{max_dim+1}
    let ranks: Vec<usize> =
        (0..=max_dim + 1).into_par_iter().map(|k| matrix_rank(&boundary_matrix(cx, k), ring)).collect();
    let mut reduced = BTreeMap::new();
    reduced.insert(-1, 1 - ranks[0]);
    for k in 0..=max_dim {
        reduced.insert(k as i64, cx.count(k) - ranks[k] - ranks[k + 1]);
    }
    let mut torsion = BTreeMap::new();
    if ring == Ring::Z {
        for k in 0..=max_dim {
            let inv = boundary_matrix(cx, k + 1).smith_invariants(max_matrix)?;
            let t: Vec<u128> = inv.into_iter().filter(|&d| d > 1).collect();
            if !t.is_empty() {
                torsion.insert(k as i64, t);
            }
        }
    }
    Ok(BettiProfile { ring, max_dim, reduced, torsion, face_counts: cx.f_vector() })
}

/// Reduced Betti numbers of the complex behind `view` up to `max_dim`.
pub fn betti(
    view: &ComplexView,
    max_dim: usize,
    ring: Ring,
    max_simplices: usize,
    max_matrix: usize,
) -> Result<BettiProfile> {
    let cx = view.enumerate_skeleton(max_dim + 1, max_simplices)?;
    betti_of_complex(&cx, max_dim, ring, max_matrix)
}

/// Outcome of trying to lift an F2 cocycle to an integral one with the same
/// support and unit coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZLift {
    /// A signed lift that is an integral cocycle.
    Lifted(Cochain),
    /// Sign propagation forces contradictory signs on this simplex.
    Obstructed(Simplex),
    /// Some cofacet meets the support in more than two facets, so signs are
    /// not forced by propagation alone.
    Undetermined(Simplex),
}

/// Attempt a `±1` lift of an F2 cocycle by propagating signs across cofacets
/// that contain exactly two support simplices.
pub fn z_lift(phi: &Cochain, view: &ComplexView, cap: usize) -> Result<ZLift> {
    let support: Vec<Simplex> = phi.support().cloned().collect();
    // cofacet -> incident support simplices with incidence signs
    let mut incidences: BTreeMap<Simplex, Vec<(usize, i64)>> = BTreeMap::new();
    let mut visited = 0usize;
    for (i, s) in support.iter().enumerate() {
        if !view.is_simplex(s) {
            return Err(Error::NotAFace(s.vertices().to_vec()));
        }
        for v in view.extension_vertices(s).iter() {
            visited += 1;
            if visited > cap {
                return Err(Error::CapExceeded {
                    what: "cofacet enumeration".into(),
                    limit: cap,
                    dim_reached: phi.dim() + 1,
                });
            }
            let (sign, tau) = s.with_vertex(v);
            incidences.entry(tau).or_default().push((i, sign));
        }
    }
    let mut graph: Vec<Vec<(usize, i64)>> = vec![Vec::new(); support.len()];
    for (tau, inc) in &incidences {
        match inc.as_slice() {
            [(a, sa), (b, sb)] => {
                // s_a * sa + s_b * sb = 0  =>  s_b = -sa * sb * s_a
                graph[*a].push((*b, -sa * sb));
                graph[*b].push((*a, -sa * sb));
            }
            _ => return Ok(ZLift::Undetermined(tau.clone())),
        }
    }
    let mut signs: Vec<i64> = vec![0; support.len()];
    for start in 0..support.len() {
        if signs[start] != 0 {
            continue;
        }
        signs[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            for &(b, rel) in &graph[a] {
                let want = signs[a] * rel;
                if signs[b] == 0 {
                    signs[b] = want;
                    queue.push_back(b);
                } else if signs[b] != want {
                    return Ok(ZLift::Obstructed(support[b].clone()));
                }
            }
        }
    }
    let mut lift = Chain::zero(phi.dim(), Ring::Z);
    for (s, sign) in support.into_iter().zip(signs) {
        lift.add_int(s, sign)?;
    }
    if !is_cocycle(&lift, view, cap)? {
        return Err(Error::Internal("sign propagation produced a non-cocycle".into()));
    }
    Ok(ZLift::Lifted(lift))
}

/// Simplices outside the support of `phi` whose addition (over F2) turns it
/// into a cocycle.
pub fn single_simplex_repairs(phi: &Cochain, view: &ComplexView, cap: usize) -> Result<Vec<Simplex>> {
    let phi = phi.change_ring(Ring::F2)?;
    let defect = coboundary(&phi, view, cap)?;
    let Some(first) = defect.support().next() else {
        return Ok(Vec::new());
    };
    let mut found = Vec::new();
    for (_, candidate) in first.facets() {
        if !phi.coef(&candidate).is_zero() {
            continue;
        }
        let mut fixed = phi.clone();
        fixed.add_int(candidate.clone(), 1)?;
        if is_cocycle(&fixed, view, cap)? {
            found.push(candidate);
        }
    }
    Ok(found)
}
