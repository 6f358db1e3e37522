//! Total domination: exact search on small graphs and the hypercube complement test.

use cuberips::bounds::{gamma_t_exact, is_total_dominating, tds_in_complement, total_domination_lb, SmallGraph};
use cuberips::hypercube::{antipode, Params};

fn main() -> cuberips::Result<()> {
    let cycle = SmallGraph::from_edges(6, &[[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]])?;
    println!("C_6: gamma_t = {}, lower bound m/Delta = {}", gamma_t_exact(&cycle)?, total_domination_lb(6, 2)?);
    println!("{{0, 1, 3, 4}} dominates C_6: {}", is_total_dominating(&cycle, &[0, 1, 3, 4]));

    let p = Params::new(5, 3)?;
    let pair = [0, antipode(0, 5)];
    let v = tds_in_complement(&pair, p);
    println!("an antipodal pair in G^c_(5,3): dominating {}, witness {:?}", v.dominating, v.witness);
    let cross = [1, 30, 2, 29, 4, 27, 8, 23, 16, 15];
    println!("a cross-polytope's vertices: dominating {}", tds_in_complement(&cross, p).dominating);
    Ok(())
}
