//! Numeric connectivity and coconnectivity bounds, and small total-domination
//! oracles.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::CrossPolytopePairs;
use crate::error::{Error, Result};
use crate::hypercube::{binomial, binomial_sum, degree_complement, hamming, Params, Vertex};

/// Largest graph accepted by [`gamma_t_exact`].
pub const GAMMA_T_MAX_ORDER: usize = 24;

fn big(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn require_r_below_n(n: u32, r: u32) -> Result<()> {
    Params::new(n, r)?;
    if r >= n {
        return Err(Error::DivisionByZero(format!(
            "r < n required: no pairs exceed distance {r} in Q_{n}, so the complement graph has no edges"
        )));
    }
    Ok(())
}

/// Render an exact rational as `p/q` (or `p` when integral).
pub fn render_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `2^(n-1) / sum_{i>r} C(n, i)`.
pub fn alpha(n: u32, r: u32) -> Result<BigRational> {
    require_r_below_n(n, r)?;
    let num = BigInt::one() << (n - 1);
    Ok(BigRational::new(num, degree_complement(n, r).into()))
}

/// `k - 1`, where `k` is the largest integer strictly below `alpha` when
/// `alpha` is integral and `floor(alpha)` otherwise.
pub fn conn_lower_bound(n: u32, r: u32) -> Result<BigInt> {
    let a = alpha(n, r)?;
    let k = if a.is_integer() { a.to_integer() - 1 } else { a.floor().to_integer() };
    Ok(k - 1)
}

/// `m / Δ`.
pub fn total_domination_lb(m: u64, max_degree: u64) -> Result<BigRational> {
    if max_degree == 0 {
        return Err(Error::DivisionByZero("maximum degree is zero (isolated vertices)".into()));
    }
    Ok(BigRational::new(m.into(), max_degree.into()))
}

/// A simple graph on `{0, .., m-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallGraphDocument {
    pub m: usize,
    pub edges: Vec<[usize; 2]>,
}

impl SmallGraph {
    pub fn from_edges(m: usize, edges: &[[usize; 2]]) -> Result<Self> {
        let mut adj = vec![Vec::new(); m];
        for &[a, b] in edges {
            if a >= m || b >= m {
                return Err(Error::InvalidParams(format!("edge ({a},{b}) outside 0..{m}")));
            }
            if a == b {
                return Err(Error::InvalidParams(format!("loop at vertex {a}")));
            }
            if !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(Self { adj })
    }

    pub fn from_document(doc: &SmallGraphDocument) -> Result<Self> {
        Self::from_edges(doc.m, &doc.edges)
    }

    pub fn to_document(&self) -> SmallGraphDocument {
        let edges =
            (0..self.order()).flat_map(|a| self.adj[a].iter().filter(move |&&b| a < b).map(move |&b| [a, b])).collect();
        SmallGraphDocument { m: self.order(), edges }
    }

    pub fn path(m: usize) -> Self {
        let edges: Vec<[usize; 2]> = (1..m).map(|i| [i - 1, i]).collect();
        Self::from_edges(m, &edges).expect("valid path")
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<[usize; 2]> = (1..=k).map(|i| [0, i]).collect();
        Self::from_edges(k + 1, &edges).expect("valid star")
    }

    /// `components` copies of two adjacent hubs, each carrying `degree - 1`
    /// pendant leaves; every copy has `2 * degree` vertices and needs both hubs.
    pub fn hub_pairs(components: usize, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParams("degree must be positive".into()));
        }
        let mut edges = Vec::new();
        let block = 2 * degree;
        for c in 0..components {
            let h1 = c * block;
            let h2 = h1 + 1;
            edges.push([h1, h2]);
            for i in 0..degree - 1 {
                edges.push([h1, h1 + 2 + i]);
                edges.push([h2, h1 + 2 + (degree - 1) + i]);
            }
        }
        Self::from_edges(components * block, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(Vec::is_empty)
    }

    /// `m / Δ` for this graph; rejects graphs with isolated vertices.
    pub fn domination_lb(&self) -> Result<BigRational> {
        if let Some(v) = self.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        total_domination_lb(self.order() as u64, self.max_degree() as u64)
    }
}

/// Every vertex, members included, has a neighbour in `set`.
pub fn is_total_dominating(g: &SmallGraph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &s in set {
        if s < g.order() {
            inside[s] = true;
        }
    }
    (0..g.order()).all(|v| g.neighbors(v).iter().any(|&w| inside[w]))
}

/// Exact total domination number by branch and bound.
pub fn gamma_t_exact(g: &SmallGraph) -> Result<usize> {
    gamma_t_exact_capped(g, GAMMA_T_MAX_ORDER)
}

pub fn gamma_t_exact_capped(g: &SmallGraph, max_order: usize) -> Result<usize> {
    let m = g.order();
    if m > max_order || m > 64 {
        return Err(Error::CapExceeded { what: "exact total domination".into(), limit: max_order, dim_reached: 0 });
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    if m == 0 {
        return Ok(0);
    }
    let nb: Vec<u64> = (0..m).map(|v| g.neighbors(v).iter().fold(0u64, |a, &w| a | 1 << w)).collect();
    let all: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let delta = g.max_degree() as u32;

    // greedy: repeatedly take the vertex dominating the most undominated ones
    let mut dominated = 0u64;
    let mut greedy = 0usize;
    while dominated != all {
        let best = (0..m).max_by_key(|&v| ((nb[v] & !dominated).count_ones(), std::cmp::Reverse(v))).unwrap();
        dominated |= nb[best];
        greedy += 1;
    }

    fn search(nb: &[u64], all: u64, delta: u32, dominated: u64, budget: usize) -> bool {
        if dominated == all {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let missing = (all & !dominated).count_ones();
        if missing > delta * budget as u32 {
            return false;
        }
        // the first undominated vertex needs one of its neighbours in the set
        let u = (all & !dominated).trailing_zeros() as usize;
        let mut choices = nb[u];
        while choices != 0 {
            let w = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            if search(nb, all, delta, dominated | nb[w], budget - 1) {
                return true;
            }
        }
        false
    }

    let lower = (m as u32).div_ceil(delta) as usize;
    for k in lower.max(1)..greedy {
        if search(&nb, all, delta, 0, k) {
            return Ok(k);
        }
    }
    Ok(greedy)
}

/// Laplacian eigenvalues of the Cayley graph `G^c_{n,r}`, one per weight class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaplacianSpectrum {
    pub n: u32,
    pub r: u32,
    /// Eigenvalue on the characters of weight `i`.
    pub eigenvalues: Vec<i64>,
    /// `C(n, i)`.
    pub multiplicities: Vec<u64>,
}

impl LaplacianSpectrum {
    pub fn max(&self) -> i64 {
        self.eigenvalues.iter().copied().max().unwrap_or(0)
    }
}

/// `K_j(i; n) = sum_t (-1)^t C(i, t) C(n - i, j - t)`.
pub fn krawtchouk(j: u32, i: u32, n: u32) -> i64 {
    let mut acc = BigInt::zero();
    for t in 0..=j.min(i) {
        if j - t > n - i {
            continue;
        }
        let term = BigInt::from(binomial(i as u64, t as u64) * binomial((n - i) as u64, (j - t) as u64));
        if t % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_i64().expect("Krawtchouk value fits in i64 for n <= 30")
}

pub fn laplacian_spectrum_complement(n: u32, r: u32) -> Result<LaplacianSpectrum> {
    Params::new(n, r)?;
    let degree = degree_complement(n, r).to_i64().expect("degree fits");
    let eigenvalues = (0..=n).map(|i| degree - (r + 1..=n).map(|j| krawtchouk(j, i, n)).sum::<i64>()).collect();
    let multiplicities = (0..=n).map(|i| binomial(n as u64, i as u64).to_u64().expect("fits")).collect();
    Ok(LaplacianSpectrum { n, r, eigenvalues, multiplicities })
}

/// `2^n / λ_max - 2`.
pub fn spectral_conn_lb(n: u32, r: u32) -> Result<BigRational> {
    require_r_below_n(n, r)?;
    let lambda = laplacian_spectrum_complement(n, r)?.max();
    if lambda == 0 {
        return Err(Error::DivisionByZero("largest Laplacian eigenvalue is zero".into()));
    }
    Ok(BigRational::new(BigInt::one() << n, lambda.into()) - big(2))
}

/// Exact coconnectivity bound and the first integer degree it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoconnBound {
    pub exact: BigRational,
    pub degree: BigInt,
}

/// `B = 2^(n-1) - 2^(n-2) S / (2S - 1) - 1` with `S = sum_{i=r+1}^{n-1} C(n, i)`;
/// cohomology vanishes in every degree `>= ceil(B)`.
pub fn coconn_upper_bound(n: u32, r: u32) -> Result<CoconnBound> {
    Params::new(n, r)?;
    if n <= r + 1 {
        return Err(Error::InvalidParams(format!("the coconnectivity bound needs n > r + 1, got n={n}, r={r}")));
    }
    let s: BigInt = binomial_sum(n as u64, r as u64 + 1, n as u64 - 1).into();
    let two_s_minus_one = &s * 2 - 1;
    let exact =
        big(BigInt::one() << (n - 1)) - BigRational::new((BigInt::one() << (n - 2)) * &s, two_s_minus_one) - big(1);
    let degree = exact.ceil().to_integer();
    Ok(CoconnBound { exact, degree })
}

/// Kleitman's bound on the size of a set of diameter at most `r` in `Q_n`.
pub fn kleitman_max_cardinality(n: u32, r: u32) -> BigUint {
    let (t, odd) = r.div_rem(&2);
    let t = t as u64;
    if odd == 0 {
        binomial_sum(n as u64, 0, t.min(n as u64))
    } else if n == 0 {
        BigUint::one()
    } else {
        binomial_sum(n as u64 - 1, 0, t.min(n as u64 - 1)) * 2u32
    }
}

/// Result of checking total domination of `G^c_{n,r}` by a vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdsVerdict {
    pub dominating: bool,
    /// First hypercube vertex with no member at distance greater than `r`.
    pub witness: Option<Vertex>,
}

/// Whether the vertices of a cross-polytope cycle totally dominate `G^c_{n,r}`.
pub fn tds_from_cycle(pairs: &CrossPolytopePairs, params: Params) -> TdsVerdict {
    let members = pairs.vertices().to_vec();
    tds_in_complement(&members, params)
}

/// Whether `members` totally dominate `G^c_{n,r}`.
pub fn tds_in_complement(members: &[Vertex], params: Params) -> TdsVerdict {
    let witness = (0..params.order() as Vertex).find(|&v| members.iter().all(|&w| hamming(v, w) <= params.r));
    TdsVerdict { dominating: witness.is_none(), witness }
}

/// All bounds for one parameter pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u32,
    pub r: u32,
    pub alpha: String,
    pub conn_lb: i64,
    pub spectral_lambda: i64,
    pub spectral_conn_lb: String,
    /// Absent when `n <= r + 1`.
    pub coconn_ub: Option<i64>,
    pub coconn_exact: Option<String>,
    pub kleitman_max_card: u64,
}

pub fn bound_report(n: u32, r: u32) -> Result<BoundReport> {
    require_r_below_n(n, r)?;
    let overflow = || Error::Overflow("bound report");
    let coconn = if n > r + 1 { Some(coconn_upper_bound(n, r)?) } else { None };
    Ok(BoundReport {
        n,
        r,
        alpha: render_rational(&alpha(n, r)?),
        conn_lb: conn_lower_bound(n, r)?.to_i64().ok_or_else(overflow)?,
        spectral_lambda: laplacian_spectrum_complement(n, r)?.max(),
        spectral_conn_lb: render_rational(&spectral_conn_lb(n, r)?),
        coconn_ub: coconn.as_ref().map(|c| c.degree.to_i64().ok_or_else(overflow)).transpose()?,
        coconn_exact: coconn.as_ref().map(|c| render_rational(&c.exact)),
        kleitman_max_card: kleitman_max_cardinality(n, r).to_u64().ok_or_else(overflow)?,
    })
}
