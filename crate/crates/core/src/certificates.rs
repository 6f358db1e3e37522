//! Bundled cohomology certificates for `VR(Q_4; 2)` and `VR(Q_5; 3)`, and the
//! workflows that check them end to end.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::bounds::{tds_from_cycle, TdsVerdict};
use crate::chain::{Chain, ChainDocument, Cochain, Ring};
use crate::complex::{small_chain, ComplexView, CrossPolytopePairs, DEFAULT_MAX_SIMPLICES};
use crate::error::{Error, Result};
use crate::homology::{betti, boundary, coboundary, is_cocycle, pair, z_lift, ZLift};
use crate::hypercube::{hamming, Params, Vertex};
use crate::koszul::{
    independence_certificate, is_monomial_cocycle, IndependenceVerdict, KoszulCochain, KoszulCochainDocument, SRIdeal,
};
use crate::linalg::DEFAULT_MAX_MATRIX;

const Q4_COCYCLES: &str = include_str!("../data/q4r2_cocycles.json");
const Q4_DETECTORS: &str = include_str!("../data/q4r2_detectors.json");
const Q5_ALPHA: &str = include_str!("../data/q5r3_alpha.json");
const Q5_ALPHA_PRINTED: &str = include_str!("../data/q5r3_alpha_printed.json");

/// Cofacet enumeration budget for the bundled workflows.
const WORKFLOW_CAP: usize = 10_000_000;

/// Payload of a named cocycle.
#[derive(Debug, Clone)]
pub enum CocyclePayload {
    Koszul { ideal: SRIdeal, cochain: KoszulCochain },
    Simplicial { params: Params, cochain: Cochain },
}

#[derive(Debug, Clone)]
pub struct NamedCocycle {
    pub label: String,
    pub note: String,
    pub payload: CocyclePayload,
}

impl NamedCocycle {
    /// Run the cocycle check appropriate to the payload.
    pub fn check(&self) -> Result<bool> {
        match &self.payload {
            CocyclePayload::Koszul { ideal, cochain } => {
                for (m, _) in cochain.iter() {
                    if !is_monomial_cocycle(m, ideal)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            CocyclePayload::Simplicial { params, cochain } => {
                is_cocycle(cochain, &ComplexView::new(*params), WORKFLOW_CAP)
            }
        }
    }

    pub fn koszul(&self) -> Option<&KoszulCochain> {
        match &self.payload {
            CocyclePayload::Koszul { cochain, .. } => Some(cochain),
            CocyclePayload::Simplicial { .. } => None,
        }
    }

    pub fn simplicial(&self) -> Option<(Params, &Cochain)> {
        match &self.payload {
            CocyclePayload::Simplicial { params, cochain } => Some((*params, cochain)),
            CocyclePayload::Koszul { .. } => None,
        }
    }
}

#[derive(Debug, Deserialize)]
struct ClassEntry {
    label: String,
    note: String,
    cochain: KoszulCochainDocument,
}

#[derive(Debug, Deserialize)]
struct ClassFile {
    classes: Vec<ClassEntry>,
}

/// A simplicial cochain document with a label.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelledChainDocument {
    pub label: String,
    pub note: String,
    #[serde(flatten)]
    pub chain: ChainDocument,
}

/// Detector sets with their elimination order (zero-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectorFile {
    pub n: u32,
    pub r: u32,
    pub detectors: Vec<LabelledSet>,
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledSet {
    pub label: String,
    pub vertices: Vec<Vertex>,
}

impl DetectorFile {
    pub fn sets(&self) -> Vec<VertexSet> {
        self.detectors.iter().map(|d| VertexSet::from_slice(&d.vertices)).collect()
    }
}

/// The nine Koszul cocycles `a1..a9` of `VR(Q_4; 2)`, checked on load.
pub fn q4_classes() -> Result<Vec<NamedCocycle>> {
    parse_classes(Q4_COCYCLES)
}

pub fn q4_detectors() -> Result<DetectorFile> {
    parse_detectors(Q4_DETECTORS)
}

/// Parse a class file (`{"classes": [{label, note, cochain}]}`); every
/// monomial must pass the cocycle criterion.
pub fn parse_classes(text: &str) -> Result<Vec<NamedCocycle>> {
    let file: ClassFile = serde_json::from_str(text)?;
    let mut out = Vec::new();
    for entry in file.classes {
        let (ideal, cochain) = entry.cochain.into_cochain()?;
        let named =
            NamedCocycle { label: entry.label, note: entry.note, payload: CocyclePayload::Koszul { ideal, cochain } };
        if !named.check()? {
            return Err(Error::LiftNotCocycle(named.label));
        }
        out.push(named);
    }
    Ok(out)
}

pub fn parse_detectors(text: &str) -> Result<DetectorFile> {
    let file: DetectorFile = serde_json::from_str(text)?;
    let params = Params::new(file.n, file.r)?;
    for &v in file.detectors.iter().flat_map(|d| &d.vertices) {
        params.check_vertex(v)?;
    }
    Ok(file)
}

fn load_alpha(text: &str) -> Result<NamedCocycle> {
    let doc: LabelledChainDocument = serde_json::from_str(text)?;
    let (params, cochain) = doc.chain.into_chain()?;
    if let Some(s) = cochain.support().find(|s| s.vertices().iter().any(|&v| v >= 16)) {
        return Err(Error::Template(format!("alpha simplex {:?} has a vertex >= 16", s.vertices())));
    }
    Ok(NamedCocycle { label: doc.label, note: doc.note, payload: CocyclePayload::Simplicial { params, cochain } })
}

/// The degree-4 F2 cocycle `α` on `VR(Q_5; 3)`, checked on load.
pub fn q5_alpha() -> Result<NamedCocycle> {
    let alpha = load_alpha(Q5_ALPHA)?;
    if !alpha.check()? {
        return Err(Error::LiftNotCocycle(alpha.label));
    }
    Ok(alpha)
}

/// The 111-simplex list exactly as transcribed; it is not a cocycle.
pub fn q5_alpha_printed() -> Result<NamedCocycle> {
    load_alpha(Q5_ALPHA_PRINTED)
}

/// Embedded 4-sphere families in `VR(Q_5; 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyTag {
    A,
    B,
    C,
}

impl std::str::FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            "C" | "c" => Ok(Self::C),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFamily {
    pub tag: FamilyTag,
    pub v: Vertex,
    /// Coordinates `i, j, k, l, m` in template order, each in `1..=5`.
    pub indices: [u32; 5],
    pub pairs: CrossPolytopePairs,
}

/// Build one sphere of a family: `v^S` is `v` with the coordinates in `S`
/// flipped, coordinate `c` being bit `c - 1`.
pub fn instantiate_family(tag: FamilyTag, v: Vertex, indices: &[u32]) -> Result<CycleFamily> {
    let idx: [u32; 5] =
        indices.try_into().map_err(|_| Error::Template(format!("expected 5 coordinates, got {}", indices.len())))?;
    if idx.iter().any(|&c| !(1..=5).contains(&c)) {
        return Err(Error::Template(format!("coordinates {idx:?} must lie in 1..=5")));
    }
    if (1..5).any(|a| idx[..a].contains(&idx[a])) {
        return Err(Error::Template(format!("coordinates {idx:?} repeat")));
    }
    if v >= 32 {
        return Err(Error::Template(format!("base vertex {v} is not a vertex of Q_5")));
    }
    let [i, j, k, l, m] = idx;
    let flip = |coords: &[u32]| coords.iter().fold(v, |acc, &c| acc ^ (1 << (c - 1)));
    let template: [(&[u32], &[u32]); 5] = match tag {
        FamilyTag::A => [
            (&[i], &[j, k, l, m]),
            (&[j], &[i, k, l, m]),
            (&[k], &[i, j, l, m]),
            (&[l], &[i, j, k, m]),
            (&[m], &[i, j, k, l]),
        ],
        FamilyTag::B => [
            (&[], &[i, j, k, l, m]),
            (&[i, j], &[k, l, m]),
            (&[i, k], &[j, l, m]),
            (&[i, l], &[j, k, m]),
            (&[i, m], &[j, k, l]),
        ],
        FamilyTag::C => [
            (&[i], &[j, k, l, m]),
            (&[j], &[i, k, l, m]),
            (&[k, l], &[i, j, m]),
            (&[k, m], &[i, j, l]),
            (&[l, m], &[i, j, k]),
        ],
    };
    let pairs: Vec<(Vertex, Vertex)> = template.iter().map(|(a, b)| (flip(a), flip(b))).collect();
    for &(a, b) in &pairs {
        if hamming(a, b) != 5 {
            return Err(Error::Template(format!("pair {{{a},{b}}} is at distance {}", hamming(a, b))));
        }
    }
    let view = ComplexView::new(q5_params());
    let pairs = CrossPolytopePairs::new(pairs, &view).map_err(|e| Error::Template(e.to_string()))?;
    Ok(CycleFamily { tag, v, indices: idx, pairs })
}

fn q5_params() -> Params {
    Params::new(5, 3).expect("valid parameters")
}

/// The instance `v = 0`, coordinates `1..5` in order, of each family.
pub fn default_instances() -> Result<Vec<CycleFamily>> {
    [FamilyTag::A, FamilyTag::B, FamilyTag::C].into_iter().map(|t| instantiate_family(t, 0, &[1, 2, 3, 4, 5])).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPairing {
    pub tag: FamilyTag,
    pub pairs: Vec<(Vertex, Vertex)>,
    pub small_chain: Vec<Vertex>,
    pub is_cycle: bool,
    pub f2_pairing: i64,
    /// Pairing of the integral cycle with the signed lift of `α`, when one exists.
    pub z_pairing: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Q5Report {
    pub alpha_simplices: usize,
    pub alpha_is_cocycle: bool,
    pub printed_simplices: usize,
    /// Cofacets on which the transcribed list fails the cocycle condition.
    pub printed_defects: Vec<Vec<Vertex>>,
    pub z_lift: bool,
    pub families: Vec<FamilyPairing>,
    pub passed: bool,
}

/// Pairing of one family cycle with `α` over F2 and, if possible, over Z.
pub fn family_pairing(family: &CycleFamily, alpha: &Cochain, alpha_z: Option<&Cochain>) -> Result<FamilyPairing> {
    let view = ComplexView::new(q5_params());
    let beta = family.pairs.cycle(Ring::F2)?;
    let is_cycle = boundary(&beta, &view)?.is_zero();
    let f2 = pair(&beta, alpha)?.to_integer();
    let z = match alpha_z {
        Some(a) => Some(pair(&family.pairs.cycle(Ring::Z)?, a)?.to_integer()),
        None => None,
    };
    Ok(FamilyPairing {
        tag: family.tag,
        pairs: family.pairs.pairs().to_vec(),
        small_chain: small_chain(&beta, 5)?.vertices().to_vec(),
        is_cycle,
        f2_pairing: f2,
        z_pairing: z,
    })
}

/// `α` is an F2 cocycle and pairs to 1 with one sphere of each family.
pub fn verify_q5_generator() -> Result<Q5Report> {
    let view = ComplexView::new(q5_params());
    let alpha = q5_alpha()?;
    let (_, a) = alpha.simplicial().expect("simplicial payload");
    let printed = q5_alpha_printed()?;
    let (_, p) = printed.simplicial().expect("simplicial payload");
    let defects = coboundary(p, &view, WORKFLOW_CAP)?.support().map(|s| s.vertices().to_vec()).collect();
    let lifted = match z_lift(a, &view, WORKFLOW_CAP)? {
        ZLift::Lifted(c) => Some(c),
        _ => None,
    };
    let families =
        default_instances()?.iter().map(|f| family_pairing(f, a, lifted.as_ref())).collect::<Result<Vec<_>>>()?;
    let passed = families.iter().all(|f| f.is_cycle && f.f2_pairing == 1);
    Ok(Q5Report {
        alpha_simplices: a.len(),
        alpha_is_cocycle: true,
        printed_simplices: p.len(),
        printed_defects: defects,
        z_lift: lifted.is_some(),
        families,
        passed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageResult {
    pub stage: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Q4Report {
    pub stages: Vec<StageResult>,
    pub rank: Option<usize>,
    pub passed: bool,
}

impl Q4Report {
    pub fn failing_stage(&self) -> Option<&str> {
        self.stages.iter().find(|s| !s.passed).map(|s| s.stage.as_str())
    }
}

/// Cocycle check, triangular independence and the Betti cross-check for the
/// bundled classes and detectors.
pub fn verify_q4_rank9() -> Result<Q4Report> {
    let classes: Vec<KoszulCochain> =
        q4_classes()?.iter().map(|c| c.koszul().expect("Koszul payload").clone()).collect();
    let det = q4_detectors()?;
    verify_q4_with(&classes, &det.sets(), Some(&det.order))
}

/// The same pipeline over caller-supplied classes and detectors.
pub fn verify_q4_with(classes: &[KoszulCochain], detectors: &[VertexSet], order: Option<&[usize]>) -> Result<Q4Report> {
    let params = Params::new(4, 2)?;
    let ideal = SRIdeal::new(params);
    let mut stages = Vec::new();
    let mut bad = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        for (m, _) in c.iter() {
            if !is_monomial_cocycle(m, &ideal)? {
                bad.push(i);
            }
        }
    }
    stages.push(StageResult {
        stage: "cocycle".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() { format!("{} classes", classes.len()) } else { format!("failing classes {bad:?}") },
    });
    let verdict = independence_certificate(classes, detectors, params, order)?;
    stages.push(StageResult {
        stage: "independence".into(),
        passed: verdict.passed(),
        detail: match &verdict {
            IndependenceVerdict::Pass { order } => format!("elimination order {order:?}"),
            IndependenceVerdict::Fail { reason, step, .. } => format!("step {step}: {reason}"),
        },
    });
    let rank = betti(&ComplexView::new(params), 3, Ring::F2, DEFAULT_MAX_SIMPLICES, DEFAULT_MAX_MATRIX)?.get(3);
    stages.push(StageResult {
        stage: "rank".into(),
        passed: rank == classes.len(),
        detail: format!("reduced Betti number in degree 3 over F2 is {rank}"),
    });
    let passed = stages.iter().all(|s| s.passed);
    Ok(Q4Report { stages, rank: Some(rank), passed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdsInstance {
    pub tag: FamilyTag,
    pub vertices: Vec<Vertex>,
    pub f2_pairing: i64,
    pub verdict: TdsVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdsReport {
    pub instances: Vec<TdsInstance>,
    pub passed: bool,
}

/// Every family sphere detected by `α` has a vertex set that totally
/// dominates `G^c_{5,3}`.
pub fn verify_tds_propositions() -> Result<TdsReport> {
    let alpha = q5_alpha()?;
    let (params, a) = alpha.simplicial().expect("simplicial payload");
    let mut instances = Vec::new();
    for f in default_instances()? {
        let beta: Chain = f.pairs.cycle(Ring::F2)?;
        let pairing = pair(&beta, a)?.to_integer();
        instances.push(TdsInstance {
            tag: f.tag,
            vertices: f.pairs.vertices().to_vec(),
            f2_pairing: pairing,
            verdict: tds_from_cycle(&f.pairs, params),
        });
    }
    let passed = instances.iter().filter(|i| i.f2_pairing != 0).all(|i| i.verdict.dominating);
    Ok(TdsReport { instances, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;
    use crate::homology::single_simplex_repairs;

    #[test]
    fn family_examples() {
        let f = default_instances().unwrap();
        assert_eq!(f[0].pairs.pairs(), &[(1, 30), (2, 29), (4, 27), (8, 23), (16, 15)]);
        assert_eq!(f[1].pairs.pairs(), &[(0, 31), (3, 28), (5, 26), (9, 22), (17, 14)]);
        assert_eq!(f[2].pairs.pairs(), &[(1, 30), (2, 29), (12, 19), (20, 11), (24, 7)]);
        assert!(matches!(instantiate_family(FamilyTag::A, 0, &[1, 1, 2, 3, 4]), Err(Error::Template(_))));
        assert!(matches!(instantiate_family(FamilyTag::A, 0, &[1, 2, 3, 4]), Err(Error::Template(_))));
        assert!(matches!(instantiate_family(FamilyTag::B, 32, &[1, 2, 3, 4, 5]), Err(Error::Template(_))));
    }

    #[test]
    fn every_instance_is_valid() {
        for tag in [FamilyTag::A, FamilyTag::B, FamilyTag::C] {
            for v in 0..32 {
                for idx in [[1, 2, 3, 4, 5], [5, 3, 1, 2, 4], [2, 4, 5, 1, 3]] {
                    instantiate_family(tag, v, &idx).unwrap();
                }
            }
        }
    }

    #[test]
    fn bundled_alpha_is_printed_plus_one_repair() {
        let view = ComplexView::new(q5_params());
        let printed = q5_alpha_printed().unwrap();
        let (_, p) = printed.simplicial().unwrap();
        assert_eq!(p.len(), 111);
        assert!(!is_cocycle(p, &view, WORKFLOW_CAP).unwrap());
        let repairs = single_simplex_repairs(p, &view, WORKFLOW_CAP).unwrap();
        let fix = Simplex::new(vec![0, 5, 6, 8, 11]).unwrap();
        assert_eq!(repairs, vec![fix.clone()]);
        let alpha = q5_alpha().unwrap();
        let (_, a) = alpha.simplicial().unwrap();
        let mut expected = p.clone();
        expected.add_int(fix, 1).unwrap();
        assert_eq!(*a, expected);
    }

    #[test]
    fn q5_and_tds() {
        let rep = verify_q5_generator().unwrap();
        assert!(rep.passed);
        assert_eq!(rep.printed_defects.len(), 6);
        assert!(rep.families.iter().all(|f| f.f2_pairing == 1));
        assert_eq!(rep.families[0].small_chain, vec![1, 2, 4, 8, 15]);
        let zero = Chain::zero(4, Ring::F2);
        let (_, a) = q5_alpha().unwrap().simplicial().map(|(p, c)| (p, c.clone())).unwrap();
        assert_eq!(pair(&zero, &a).unwrap().to_integer(), 0);
        assert!(verify_tds_propositions().unwrap().passed);
    }

    #[test]
    fn q4_pipeline_and_failures() {
        let rep = verify_q4_rank9().unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.rank, Some(9));

        let mut classes: Vec<KoszulCochain> =
            q4_classes().unwrap().iter().map(|c| c.koszul().unwrap().clone()).collect();
        let det = q4_detectors().unwrap();
        let sets = det.sets();
        classes[8] = classes[0].clone();
        let rep = verify_q4_with(&classes, &sets, Some(&det.order)).unwrap();
        assert_eq!(rep.failing_stage(), Some("independence"));

        let classes: Vec<KoszulCochain> = q4_classes().unwrap().iter().map(|c| c.koszul().unwrap().clone()).collect();
        let mut sets = det.sets();
        sets[1] = VertexSet::full(16);
        let rep = verify_q4_with(&classes, &sets, Some(&det.order)).unwrap();
        assert_eq!(rep.failing_stage(), Some("independence"));
        assert!(rep.stages[1].detail.contains("class 0 survives"), "{}", rep.stages[1].detail);
    }
}
