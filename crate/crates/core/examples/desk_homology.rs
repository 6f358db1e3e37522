//! Reduced Betti numbers of small Vietoris-Rips complexes of the hypercube.

use cuberips::complex::ComplexView;
use cuberips::homology::betti;
use cuberips::hypercube::Params;
use cuberips::linalg::DEFAULT_MAX_MATRIX;
use cuberips::Ring;

const CAP: usize = 5_000_000;

fn main() -> cuberips::Result<()> {
    for (n, r, dim) in [(3, 1, 2), (3, 2, 3), (4, 1, 2), (4, 2, 3)] {
        let view = ComplexView::new(Params::new(n, r)?);
        for ring in [Ring::F2, Ring::Q] {
            let b = betti(&view, dim, ring, CAP, DEFAULT_MAX_MATRIX)?;
            println!("VR(Q_{n}; {r}) over {ring:?}: reduced betti {:?}, faces {:?}", b.from_zero(), b.face_counts);
        }
    }
    Ok(())
}
