//! The nine degree-3 classes of `VR(Q_4; 2)` and their independence certificate.

use cuberips::certificates::{q4_classes, verify_q4_rank9};

fn main() -> cuberips::Result<()> {
    for c in q4_classes()? {
        let terms = c.koszul().map_or(0, |k| k.len());
        println!("{}: {} term(s), {}", c.label, terms, c.note);
    }
    let report = verify_q4_rank9()?;
    for s in &report.stages {
        println!("{:<13} {} {}", s.stage, if s.passed { "ok  " } else { "FAIL" }, s.detail);
    }
    println!("rank {:?}, passed {}", report.rank, report.passed);
    Ok(())
}
