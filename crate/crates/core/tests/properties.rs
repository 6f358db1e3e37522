use proptest::prelude::*;

use cuberips::bitset::VertexSet;
use cuberips::certificates::{instantiate_family, FamilyTag};
use cuberips::complex::{ComplexView, Simplex};
use cuberips::homology::{boundary, coboundary};
use cuberips::hypercube::{hamming, Params, Vertex};
use cuberips::koszul::{koszul_differential, star_product, to_simplicial, KoszulCochain, KoszulMonomial, SRIdeal};
use cuberips::taylor::{
    dual_vertices, gemeda_product, is_dual_face, taylor_differential_chain, DifferentialMode, DualVariant, TaylorChain,
    TaylorIdeal,
};
use cuberips::Ring;

fn params() -> impl Strategy<Value = Params> {
    (2u32..=4).prop_flat_map(|n| (Just(n), 1..n)).prop_map(|(n, r)| Params::new(n, r).unwrap())
}

/// A face `x` and a disjoint `u`, both inside `universe`.
fn monomial_in(ideal: &SRIdeal, universe: &VertexSet, picks: &[(u32, bool)]) -> KoszulMonomial {
    let mut x = VertexSet::new();
    let mut u = VertexSet::new();
    for &(v, in_x) in picks {
        if !universe.contains(v) || x.contains(v) || u.contains(v) {
            continue;
        }
        if in_x {
            x.insert(v);
            if !ideal.is_face(&x) {
                x.remove(v);
                u.insert(v);
            }
        } else {
            u.insert(v);
        }
    }
    KoszulMonomial::new(u, x).unwrap()
}

fn picks() -> impl Strategy<Value = Vec<(u32, bool)>> {
    prop::collection::vec((0u32..16, any::<bool>()), 0..12)
}

fn ring() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::F2), Just(Ring::Z)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn koszul_differential_squares_to_zero(p in params(), picks in picks(), ring in ring()) {
        let ideal = SRIdeal::new(p);
        let m = monomial_in(&ideal, &ideal.universe(), &picks);
        let c = KoszulCochain::monomial(m, ring);
        prop_assert!(koszul_differential(&koszul_differential(&c, &ideal), &ideal).is_zero());
    }

    #[test]
    fn simplicial_dual_is_a_chain_map(p in params(), picks in picks()) {
        let ideal = SRIdeal::new(p);
        let m = monomial_in(&ideal, &ideal.universe(), &picks);
        prop_assume!(m.x_degree() > 0);
        let sign = if m.x_degree() % 2 == 0 { 1 } else { -1 };
        let view = ComplexView::restricted(p, m.support()).unwrap();
        let c = KoszulCochain::monomial(m, Ring::Z);
        let d = koszul_differential(&c, &ideal);
        let lhs = if d.is_zero() { None } else { Some(to_simplicial(&d).unwrap()) };
        let delta = coboundary(&to_simplicial(&c).unwrap(), &view, 1_000_000).unwrap();
        match lhs {
            None => prop_assert!(delta.is_zero()),
            Some(l) => {
                let rhs = delta.scaled(sign.into()).unwrap();
                prop_assert_eq!(l, rhs);
            }
        }
    }

    #[test]
    fn star_product_is_associative_and_leibniz(
        p in params(),
        a in picks(),
        b in picks(),
        c in picks(),
        cut in (0u32..16, 0u32..16),
    ) {
        let ideal = SRIdeal::new(p);
        let all = ideal.universe();
        // three disjoint supports
        let lo: VertexSet = all.iter().filter(|&v| v < cut.0.min(cut.1)).collect();
        let mid: VertexSet = all.iter().filter(|&v| v >= cut.0.min(cut.1) && v < cut.0.max(cut.1)).collect();
        let hi = all.difference(&lo).difference(&mid);
        let ma = KoszulCochain::monomial(monomial_in(&ideal, &lo, &a), Ring::Z);
        let mb = KoszulCochain::monomial(monomial_in(&ideal, &mid, &b), Ring::Z);
        let mc = KoszulCochain::monomial(monomial_in(&ideal, &hi, &c), Ring::Z);
        let left = star_product(&star_product(&ma, &mb, &ideal).unwrap(), &mc, &ideal).unwrap();
        let right = star_product(&ma, &star_product(&mb, &mc, &ideal).unwrap(), &ideal).unwrap();
        prop_assert_eq!(left, right);

        let ua = ma.iter().next().unwrap().0.u().len();
        let d_ab = koszul_differential(&star_product(&ma, &mb, &ideal).unwrap(), &ideal);
        let t1 = star_product(&koszul_differential(&ma, &ideal), &mb, &ideal).unwrap();
        let t2 = star_product(&ma, &koszul_differential(&mb, &ideal), &ideal).unwrap();
        let sign = if ua % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(d_ab, t1.plus(&t2.scaled(sign)));
    }

    #[test]
    fn taylor_differentials_square_to_zero(
        n in 2u32..=4,
        r_seed in 0u32..4,
        ids in prop::collection::btree_set(0usize..120, 1..7),
    ) {
        let r = r_seed % n;
        let t = TaylorIdeal::new(Params::new(n, r).unwrap());
        let ids: Vec<usize> = ids.into_iter().filter(|&i| i < t.len()).collect();
        prop_assume!(!ids.is_empty());
        let e = t.generator(ids).unwrap();
        for mode in [DifferentialMode::Resolution, DifferentialMode::Reduced] {
            let mut c = TaylorChain::new();
            c.insert((e.clone(), VertexSet::new()), 1);
            let dd = taylor_differential_chain(&t, &taylor_differential_chain(&t, &c, mode), mode);
            prop_assert!(dd.is_empty());
        }
    }

    #[test]
    fn gemeda_product_is_graded_commutative(
        a in prop::collection::btree_set(0usize..28, 1..4),
        b in prop::collection::btree_set(0usize..28, 1..4),
    ) {
        let t = TaylorIdeal::new(Params::new(3, 0).unwrap());
        let ea = t.generator(a.iter().copied().collect()).unwrap();
        let eb = t.generator(b.iter().copied().collect()).unwrap();
        let ab = gemeda_product(&t, &ea, &eb, DifferentialMode::Resolution);
        let ba = gemeda_product(&t, &eb, &ea, DifferentialMode::Resolution);
        match (ab, ba) {
            (None, None) => prop_assert!(!a.is_disjoint(&b)),
            (Some(x), Some(y)) => {
                let sign = if (a.len() * b.len()) % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(x.generator, y.generator);
                prop_assert_eq!(x.coef, y.coef);
                prop_assert_eq!(x.sign, sign * y.sign);
            }
            _ => prop_assert!(false, "product defined in one order only"),
        }
    }

    #[test]
    fn admissibility_is_decided_pairwise(
        n in 3u32..=4,
        r_seed in 0u32..3,
        picks in prop::collection::btree_set(0usize..200, 1..6),
    ) {
        let r = r_seed % (n - 1);
        let p = Params::new(n, r).unwrap();
        let verts = dual_vertices(p);
        let pairs: Vec<_> = picks.into_iter().filter(|&i| i < verts.len()).map(|i| verts[i]).collect();
        prop_assume!(!pairs.is_empty());
        for variant in [DualVariant::C, DualVariant::J] {
            let whole = is_dual_face(p, variant, &pairs).unwrap();
            let mut pairwise = true;
            for i in 0..pairs.len() {
                for j in i + 1..pairs.len() {
                    pairwise &= is_dual_face(p, variant, &[pairs[i], pairs[j]]).unwrap();
                }
            }
            prop_assert_eq!(whole, pairwise);
        }
        // admissible products satisfy the antipodal condition
        if is_dual_face(p, DualVariant::C, &pairs).unwrap() {
            prop_assert!(is_dual_face(p, DualVariant::J, &pairs).unwrap());
        }
    }

    #[test]
    fn vr_complex_is_flag(p in params(), vs in prop::collection::btree_set(0u32..16, 1..6)) {
        let vs: Vec<Vertex> = vs.into_iter().filter(|&v| (v as usize) < p.order()).collect();
        prop_assume!(!vs.is_empty());
        let s = Simplex::new(vs.clone()).unwrap();
        let pairwise = vs.iter().all(|&a| vs.iter().all(|&b| hamming(a, b) <= p.r));
        prop_assert_eq!(ComplexView::new(p).is_simplex(&s), pairwise);
    }

    #[test]
    fn family_spheres_are_cycles(
        tag in prop_oneof![Just(FamilyTag::A), Just(FamilyTag::B), Just(FamilyTag::C)],
        v in 0u32..32,
        perm in Just([1u32, 2, 3, 4, 5]).prop_shuffle(),
    ) {
        let f = instantiate_family(tag, v, &perm).unwrap();
        let view = ComplexView::new(Params::new(5, 3).unwrap());
        for ring in [Ring::F2, Ring::Z] {
            let beta = f.pairs.cycle(ring).unwrap();
            prop_assert_eq!(beta.len(), 32);
            prop_assert!(boundary(&beta, &view).unwrap().is_zero());
        }
    }

    #[test]
    fn simplex_sign_matches_inversion_parity(vs in prop::collection::btree_set(0u32..64, 1..7).prop_map(|s| s.into_iter().collect::<Vec<_>>()).prop_shuffle()) {
        let (sign, s) = Simplex::from_ordered(vs.clone()).unwrap();
        let mut inv = 0;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                inv += usize::from(vs[i] > vs[j]);
            }
        }
        prop_assert_eq!(sign, if inv % 2 == 0 { 1 } else { -1 });
        prop_assert!(s.vertices().windows(2).all(|w| w[0] < w[1]));
    }
}
