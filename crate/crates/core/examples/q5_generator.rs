//! The degree-4 cocycle on `VR(Q_5; 3)` paired against the three sphere families.

use cuberips::certificates::verify_q5_generator;

fn main() -> cuberips::Result<()> {
    let rep = verify_q5_generator()?;
    println!("alpha: {} simplices, cocycle {}", rep.alpha_simplices, rep.alpha_is_cocycle);
    println!("transcribed list: {} simplices, {} defective cofacets", rep.printed_simplices, rep.printed_defects.len());
    for d in &rep.printed_defects {
        println!("  {d:?}");
    }
    println!("integral lift exists: {}", rep.z_lift);
    for f in &rep.families {
        println!(
            "family {:?}: pairs {:?}, cycle {}, <beta, alpha> = {} (F2), {:?} (Z)",
            f.tag, f.pairs, f.is_cycle, f.f2_pairing, f.z_pairing
        );
    }
    println!("passed {}", rep.passed);
    Ok(())
}
