//! Taylor generators of the distance ideal: the differential, admissible
//! products and the decomposition through `Θ_n`.

use cuberips::hypercube::Params;
use cuberips::taylor::{
    admissible_generators, decompose_full_support, taylor_differential, DifferentialMode, TaylorIdeal,
};

fn main() -> cuberips::Result<()> {
    let ideal = TaylorIdeal::new(Params::new(3, 1)?);
    println!("{} generators, first {:?}", ideal.len(), &ideal.pairs()[..4]);

    let e = ideal.generator(vec![0, 1, 2])?;
    for mode in [DifferentialMode::Resolution, DifferentialMode::Reduced] {
        let terms = taylor_differential(&ideal, &e, mode);
        println!("{mode:?}: d e_{:?} has {} term(s)", e.ids(), terms.len());
    }

    let theta = ideal.theta()?;
    println!("theta: {:?}, lcm {:?}", theta.ids(), theta.lcm().to_vec());
    let admissible = admissible_generators(&ideal, 8, 100_000)?;
    let full: Vec<_> = admissible.iter().filter(|g| g.lcm().len() == 8).collect();
    println!("{} admissible generators, {} of full support", admissible.len(), full.len());
    if let Some(g) = full.iter().find(|g| g.ids().len() > theta.ids().len()) {
        let (j, t) = decompose_full_support(&ideal, g)?;
        println!("e_{:?} = e_{:?} · e_{:?}", g.ids(), j.ids(), t.ids());
    }
    Ok(())
}
