//! Chains and cochains with coefficients in F2, Q or Z, and their JSON form.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::Simplex;
use crate::error::{Error, Result};
use crate::hypercube::{Params, Vertex};

/// Coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    #[default]
    F2,
    Q,
    Z,
}

impl Ring {
    /// Bring a coefficient into canonical form for this ring.
    pub fn normalize(self, c: Rational64) -> Result<Rational64> {
        match self {
            Ring::Q => Ok(c),
            Ring::Z => {
                if c.is_integer() {
                    Ok(c)
                } else {
                    Err(Error::Mismatch(format!("coefficient {c} is not an integer")))
                }
            }
            Ring::F2 => {
                if !c.is_integer() {
                    return Err(Error::Mismatch(format!("coefficient {c} is not in F2")));
                }
                Ok(Rational64::from_integer(c.to_integer().mod_floor(&2)))
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::F2 => "f2",
            Ring::Q => "q",
            Ring::Z => "z",
        })
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f2" => Ok(Ring::F2),
            "q" => Ok(Ring::Q),
            "z" => Ok(Ring::Z),
            other => Err(Error::Parse(format!("unknown ring {other:?}"))),
        }
    }
}

/// A finite formal sum of `dim`-simplices. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    dim: usize,
    ring: Ring,
    terms: BTreeMap<Simplex, Rational64>,
}

/// Cochains share the representation of chains; a cochain assigns its
/// coefficient to the dual of each listed simplex.
pub type Cochain = Chain;

impl Chain {
    pub fn zero(dim: usize, ring: Ring) -> Self {
        Self { dim, ring, terms: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coef(&self, s: &Simplex) -> Rational64 {
        self.terms.get(s).copied().unwrap_or_else(Rational64::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, &Rational64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Simplex> {
        self.terms.keys()
    }

    /// Add `c * s` to the chain.
    pub fn add_term(&mut self, s: Simplex, c: Rational64) -> Result<()> {
        if s.len() != self.dim + 1 {
            return Err(Error::Mismatch(format!(
                "simplex {:?} has dimension {}, chain has dimension {}",
                s.vertices(),
                s.dim(),
                self.dim
            )));
        }
        let c = self.ring.normalize(c)?;
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = self.ring.normalize(*e.get() + c)?;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
        Ok(())
    }

    pub fn add_int(&mut self, s: Simplex, c: i64) -> Result<()> {
        self.add_term(s, Rational64::from_integer(c))
    }

    /// Build a chain from `(vertices, coef)` pairs; vertex lists may be unsorted,
    /// in which case the coefficient picks up the sign of the sorting permutation.
    pub fn from_terms<I>(dim: usize, ring: Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Vertex>, i64)>,
    {
        let mut ch = Self::zero(dim, ring);
        for (vs, c) in terms {
            let (sign, s) = Simplex::from_ordered(vs)?;
            ch.add_int(s, sign * c)?;
        }
        Ok(ch)
    }

    pub fn scaled(&self, k: Rational64) -> Result<Self> {
        let mut out = Self::zero(self.dim, self.ring);
        for (s, c) in &self.terms {
            out.add_term(s.clone(), *c * k)?;
        }
        Ok(out)
    }

    pub fn plus(&self, other: &Chain) -> Result<Self> {
        if self.dim != other.dim || self.ring != other.ring {
            return Err(Error::Mismatch("adding chains of different dimension or ring".into()));
        }
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), *c)?;
        }
        Ok(out)
    }

    /// Same support and coefficients read in another ring.
    pub fn change_ring(&self, ring: Ring) -> Result<Self> {
        let mut out = Self::zero(self.dim, ring);
        for (s, c) in &self.terms {
            out.add_term(s.clone(), *c)?;
        }
        Ok(out)
    }

    pub fn to_document(&self, params: Params) -> ChainDocument {
        ChainDocument {
            n: params.n,
            r: params.r,
            dim: self.dim,
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| TermDocument { simplex: s.vertices().to_vec(), coef: Coef(*c) })
                .collect(),
        }
    }
}

/// Coefficient rendered as a JSON integer, or as a `"p/q"` string when it is
/// not integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coef(pub Rational64);

impl Serialize for Coef {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            s.serialize_i64(self.0.to_integer())
        } else {
            s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
        }
    }
}

impl<'de> Deserialize<'de> for Coef {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(i) => Ok(Coef(Rational64::from_integer(i))),
            Raw::Str(s) => parse_rational(&s).map(Coef).map_err(serde::de::Error::custom),
        }
    }
}

pub(crate) fn parse_rational(s: &str) -> std::result::Result<Rational64, String> {
    let bad = || format!("bad rational {s:?}");
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => s.trim().parse::<i64>().map(Rational64::from_integer).map_err(|_| bad()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermDocument {
    pub simplex: Vec<Vertex>,
    pub coef: Coef,
}

/// On-disk form of a chain or cochain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainDocument {
    pub n: u32,
    pub r: u32,
    pub dim: usize,
    pub ring: Ring,
    pub terms: Vec<TermDocument>,
}

impl ChainDocument {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn into_chain(self) -> Result<(Params, Chain)> {
        let params = Params::new(self.n, self.r)?;
        let mut ch = Chain::zero(self.dim, self.ring);
        for t in self.terms {
            for &v in &t.simplex {
                params.check_vertex(v)?;
            }
            let (sign, s) = Simplex::from_ordered(t.simplex)?;
            ch.add_term(s, t.coef.0 * Rational64::from_integer(sign))?;
        }
        Ok((params, ch))
    }
}

/// `+1` or `-1` for the parity of an integer.
pub(crate) fn parity_sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_cancellation() {
        let s = Simplex::new(vec![0, 1]).unwrap();
        let mut ch = Chain::zero(1, Ring::F2);
        ch.add_int(s.clone(), 1).unwrap();
        ch.add_int(s.clone(), 1).unwrap();
        assert!(ch.is_zero());
        ch.add_int(s, 3).unwrap();
        assert_eq!(ch.len(), 1);
    }

    #[test]
    fn z_rejects_fractions() {
        let mut ch = Chain::zero(0, Ring::Z);
        let s = Simplex::new(vec![4]).unwrap();
        assert!(ch.add_term(s, Rational64::new(1, 2)).is_err());
    }

    #[test]
    fn document_round_trip_keeps_rationals() {
        let mut ch = Chain::zero(1, Ring::Q);
        ch.add_term(Simplex::new(vec![0, 3]).unwrap(), Rational64::new(-2, 3)).unwrap();
        ch.add_int(Simplex::new(vec![1, 2]).unwrap(), 5).unwrap();
        let doc = ch.to_document(Params::new(2, 1).unwrap());
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains("\"-2/3\""));
        let (_, back) = ChainDocument::from_json(&json).unwrap().into_chain().unwrap();
        assert_eq!(back, ch);
    }

    #[test]
    fn unsorted_input_picks_up_sign() {
        let ch = Chain::from_terms(1, Ring::Z, [(vec![3, 1], 1)]).unwrap();
        assert_eq!(ch.coef(&Simplex::new(vec![1, 3]).unwrap()), Rational64::from_integer(-1));
    }
}
