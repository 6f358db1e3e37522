//! Connectivity and coconnectivity bounds for a range of `(n, r)`.

use cuberips::bounds::bound_report;

fn main() -> cuberips::Result<()> {
    println!("{:>3} {:>3} {:>12} {:>9} {:>8} {:>9}", "n", "r", "alpha", "conn_lb", "lambda", "coconn");
    for (n, r) in [(7, 5), (8, 6), (9, 7), (10, 8), (12, 10), (14, 12), (16, 14), (20, 18)] {
        let b = bound_report(n, r)?;
        let coconn = b.coconn_ub.map_or("-".to_string(), |c| c.to_string());
        println!("{n:>3} {r:>3} {:>12} {:>9} {:>8} {:>9}", b.alpha, b.conn_lb, b.spectral_lambda, coconn);
    }
    Ok(())
}
