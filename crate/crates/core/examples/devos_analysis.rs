//! Feasible DeVos-type parameters and the closed-form counts for small d.
use immlab::formulas::{analyze, conjecture_fraction, mk_vertex_count};

fn main() -> immlab::Result<()> {
    for d in 8..=14 {
        let a = analyze(d);
        println!(
            "d={d:<2} regularities={:?} corner_split={} bay_case={} wiring={}",
            a.admissible_regularities, a.corner_split_positive, a.bay_case_positive, a.wiring_bound
        );
        if a.devos.is_empty() {
            println!("  no feasible DeVos parameters for d = {d}");
        }
        for row in &a.devos {
            println!("  parts={:?} t={} chi<={}", row.params.parts, row.params.t, row.chromatic_bound);
        }
    }
    let n = mk_vertex_count(9, 1, 1)?;
    println!("M^7_9: {n} vertices, fraction {}", conjecture_fraction(n as u64, 1, 10));
    Ok(())
}
