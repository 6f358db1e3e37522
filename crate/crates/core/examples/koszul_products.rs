//! Koszul cochains of the Stanley-Reisner ideal: differential, cocycle test
//! and the star product.

use cuberips::bitset::VertexSet;
use cuberips::hypercube::Params;
use cuberips::koszul::{
    is_monomial_cocycle, koszul_differential, star_product, to_simplicial, KoszulCochain, KoszulMonomial, SRIdeal,
};
use cuberips::Ring;

fn main() -> cuberips::Result<()> {
    let ideal = SRIdeal::new(Params::new(3, 1)?);
    println!("{} minimal generators", ideal.generators().len());

    // the edge {0, 1} with every other vertex as a u factor
    let m = KoszulMonomial::full_support(VertexSet::from_slice(&[0, 1]), &ideal.universe());
    let c = KoszulCochain::monomial(m.clone(), Ring::Z);
    let d = koszul_differential(&c, &ideal);
    println!("d(u x_0 x_1) has {} term(s); cocycle {}", d.len(), is_monomial_cocycle(&m, &ideal)?);

    let a = KoszulCochain::monomial(KoszulMonomial::from_slices(&[3], &[0])?, Ring::Z);
    let b = KoszulCochain::monomial(KoszulMonomial::from_slices(&[], &[1])?, Ring::Z);
    let ab = star_product(&a, &b, &ideal)?;
    for (mono, coef) in ab.iter() {
        println!("(u_3 x_0) * x_1 = {coef} · u{:?} x{:?}", mono.u().to_vec(), mono.x().to_vec());
    }
    let simplicial = to_simplicial(&c)?;
    println!("as a simplicial cochain: {} term(s) in degree {}", simplicial.len(), simplicial.dim());
    Ok(())
}
