//! Quantum strategies for the subsidy game: a shared singlet measured with
//! symmetric POVMs beats every finite classical coin, and the game never
//! even sees a quantum state — only the joint outcome statistics.
//!
//! Run with: `cargo run --example quantum_strategies`

use quoins::csvio::joint_to_csv;
use quoins::game::{payoff, quantum_payoff};
use quoins::quoin::{measure_joint, sic_povm, singlet, trine_povm};

fn main() -> quoins::Result<()> {
    // Three restaurants: both parties measure the trine. The statistics
    // have zero diagonal (they never collide) and a uniform 1/6 elsewhere.
    let rho = singlet();
    let trine = trine_povm();
    let q3 = measure_joint(&rho, &trine, &trine)?;
    println!("singlet + trine statistics:\n{}", joint_to_csv(&q3));
    let v3 = payoff(&q3, 3)?;
    println!("payoff: {v3:.12}  (classical best with any finite coin: 0.125)");
    assert!(v3 > 0.125 + 0.04, "1/6 clears the classical ceiling");
    println!();

    // Four restaurants: the SIC measurement. Off-diagonals all sit at 1/12,
    // against a classical ceiling of 1/15.
    let sic = sic_povm();
    let q4 = measure_joint(&rho, &sic, &sic)?;
    println!("singlet + SIC statistics:\n{}", joint_to_csv(&q4));
    let v4 = payoff(&q4, 4)?;
    println!("payoff: {v4:.12}  (classical best with any finite coin: {:.12})", 1.0 / 15.0);
    println!();

    // The packaged reports carry the same numbers plus bounds and labels.
    for n in [3usize, 4, 5] {
        let report = quantum_payoff(n, 1.0)?;
        println!(
            "n={}: value={:.12} in [{:.6}, {:.6}]  resource={}",
            report.n, report.value, report.lower_bound, report.upper_bound, report.resource_label
        );
    }
    Ok(())
}
