//! The dual complexes on pairs at intermediate distance, and their homology
//! compared against the Vietoris-Rips side.

use cuberips::homology::betti_of_complex;
use cuberips::hypercube::Params;
use cuberips::linalg::DEFAULT_MAX_MATRIX;
use cuberips::taylor::{build_dual_complex, complement_graph_stats, dual_homology_check, DualVariant};
use cuberips::Ring;

const CAP: usize = 2_000_000;

fn main() -> cuberips::Result<()> {
    let p = Params::new(3, 1)?;
    for variant in [DualVariant::C, DualVariant::J] {
        let d = build_dual_complex(p, variant, 2, CAP)?;
        let b = betti_of_complex(&d.complex, 1, Ring::Q, DEFAULT_MAX_MATRIX)?;
        println!("{variant:?} on Q_3, r = 1: {} vertices, reduced betti {:?}", d.vertices.len(), b.from_zero());
    }
    let cmp = dual_homology_check(p, 2, Ring::Q, CAP, DEFAULT_MAX_MATRIX)?;
    println!("degree {}: VR rank {}, C rank {}, J rank {}", cmp.vr_degree, cmp.vr_rank, cmp.c_rank, cmp.j_rank);

    for (n, r) in [(4, 2), (5, 3), (6, 4)] {
        let s = complement_graph_stats(Params::new(n, r)?)?;
        println!(
            "complement graph for ({n}, {r}): {} vertices, degrees {}..={}",
            s.vertices, s.min_degree, s.max_degree
        );
    }
    Ok(())
}
