//! Hypercube metric primitives.
//!
//! A vertex of `Q_n` is an integer in `[0, 2^n)`; its binary expansion is the
//! corresponding binary string. Every distance is `popcount(a ^ b)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Largest cube dimension whose vertex set we are willing to index.
pub const MAX_N: u32 = 30;

/// Cube dimension and Vietoris-Rips scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub n: u32,
    pub r: u32,
}

impl Params {
    pub fn new(n: u32, r: u32) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidParams(format!("n must lie in 1..={MAX_N}, got {n}")));
        }
        Ok(Self { n, r })
    }

    /// Number of vertices, `2^n`.
    pub fn order(&self) -> usize {
        1usize << self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Whether `a` and `b` are joined by an edge of `VR(Q_n; r)`.
    #[inline]
    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        hamming(a, b) <= self.r
    }
}

#[inline]
pub fn hamming(a: Vertex, b: Vertex) -> u32 {
    (a ^ b).count_ones()
}

/// Bitwise complement inside `Q_n`.
#[inline]
pub fn antipode(a: Vertex, n: u32) -> Vertex {
    a ^ mask(n)
}

#[inline]
pub(crate) fn mask(n: u32) -> Vertex {
    if n >= 32 {
        Vertex::MAX
    } else {
        (1 << n) - 1
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `sum_{i=lo}^{hi} C(n, i)`; empty when `lo > hi`.
pub fn binomial_sum(n: u64, lo: u64, hi: u64) -> BigUint {
    (lo..=hi).map(|i| binomial(n, i)).sum()
}

/// Vertex degree of the complement graph `G^c_{n,r}`: the number of vertices
/// at Hamming distance greater than `r` from a fixed vertex.
pub fn degree_complement(n: u32, r: u32) -> BigUint {
    binomial_sum(n as u64, r as u64 + 1, n as u64)
}

/// An isometric copy of `Q_p` inside `Q_n`: the coordinates in
/// `variable_coords` range freely, the others are frozen to `offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcubeEmbedding {
    variable_coords: Vec<u32>,
    offset: Vertex,
}

impl SubcubeEmbedding {
    /// `offset` is a bit pattern over `[n]`; it must vanish on the variable
    /// coordinates.
    pub fn new(mut variable_coords: Vec<u32>, offset: Vertex, n: u32) -> Result<Self> {
        variable_coords.sort_unstable();
        variable_coords.dedup();
        if let Some(&c) = variable_coords.iter().find(|&&c| c >= n) {
            return Err(Error::InvalidParams(format!("coordinate {c} outside [0, {n})")));
        }
        let var_mask: Vertex = variable_coords.iter().map(|&c| 1 << c).sum();
        if offset & !mask(n) != 0 {
            return Err(Error::VertexOutOfRange { vertex: offset, n });
        }
        if offset & var_mask != 0 {
            return Err(Error::OffsetOverlap { overlap: (offset & var_mask) as u64 });
        }
        Ok(Self { variable_coords, offset })
    }

    /// The identity embedding of `Q_n` into itself.
    pub fn identity(n: u32) -> Self {
        Self { variable_coords: (0..n).collect(), offset: 0 }
    }

    pub fn dim(&self) -> u32 {
        self.variable_coords.len() as u32
    }

    pub fn variable_coords(&self) -> &[u32] {
        &self.variable_coords
    }

    pub fn offset(&self) -> Vertex {
        self.offset
    }

    /// Image of a vertex of `Q_p`: bit `i` of `x` lands on the `i`-th
    /// variable coordinate.
    pub fn map(&self, x: Vertex) -> Vertex {
        self.variable_coords.iter().enumerate().fold(self.offset, |acc, (i, &c)| acc | ((x >> i) & 1) << c)
    }

    /// All `2^p` image vertices, listed in `Q_p` order.
    pub fn image(&self) -> Vec<Vertex> {
        (0..1u32 << self.dim()).map(|x| self.map(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(9, 9), 0);
        assert_eq!(hamming(0, (1 << 6) - 1), 6);
        assert_eq!(hamming(0b10110, 0b01101), 4);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(0, 3), 7);
        assert_eq!(antipode(5, 3), 2);
        for n in 1..=10 {
            for a in 0..1u32 << n {
                assert_eq!(antipode(antipode(a, n), n), a);
                assert_eq!(hamming(a, antipode(a, n)), n);
            }
        }
    }

    #[test]
    fn metric_axioms_exhaustive() {
        for n in 1..=6u32 {
            let m = 1u32 << n;
            for a in 0..m {
                for b in 0..m {
                    assert_eq!(hamming(a, b), hamming(b, a));
                    assert_eq!(hamming(a, b) == 0, a == b);
                    for c in 0..m {
                        assert!(hamming(a, c) <= hamming(a, b) + hamming(b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn subcube_examples() {
        let e = SubcubeEmbedding::new(vec![0, 1, 2], 0b1000, 4).unwrap();
        let mut img = e.image();
        img.sort();
        assert_eq!(img, (8..16).collect::<Vec<_>>());
        assert_eq!(SubcubeEmbedding::identity(5).image(), (0..32).collect::<Vec<_>>());
        assert!(matches!(SubcubeEmbedding::new(vec![0, 1, 2], 0b0100, 4), Err(Error::OffsetOverlap { .. })));
    }

    #[test]
    fn subcube_isometry_exhaustive() {
        for n in 1..=6u32 {
            for coords in 0u32..1 << n {
                let p = coords.count_ones();
                if p > 4 {
                    continue;
                }
                let free = mask(n) & !coords;
                // a couple of offsets per coordinate choice
                for offset in [0, free, free & 0b0101_0101] {
                    let vars: Vec<u32> = (0..n).filter(|c| coords >> c & 1 == 1).collect();
                    let e = SubcubeEmbedding::new(vars, offset, n).unwrap();
                    for x in 0..1u32 << p {
                        for y in 0..1u32 << p {
                            assert_eq!(hamming(e.map(x), e.map(y)), hamming(x, y));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degree_complement_examples() {
        assert_eq!(degree_complement(7, 5), BigUint::from(8u32));
        assert_eq!(degree_complement(9, 9), BigUint::zero());
        assert_eq!(degree_complement(3, 1), BigUint::from(4u32));
        for n in 1..=20u32 {
            for r in 0..=n {
                let total = degree_complement(n, r) + binomial_sum(n as u64, 0, r as u64);
                assert_eq!(total, BigUint::one() << n);
            }
        }
    }
}
