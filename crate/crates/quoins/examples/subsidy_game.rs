//! The restaurant subsidy game: the payoff is the worst-case probability
//! over pairs of distinct restaurant choices, so a good strategy spreads
//! its off-diagonal mass evenly. This example checks the hand-built optimal
//! strategies and then lets the optimizer rediscover the m=2, n=3 value
//! from scratch.
//!
//! Run with: `cargo run --example subsidy_game`

use quoins::csvio::payoff_report_to_csv;
use quoins::freeops::apply_local;
use quoins::game::{classical_max_payoff, payoff, payoff_bounds, table1_strategies};
use quoins::maximin::OptimizerConfig;

fn main() -> quoins::Result<()> {
    // Envelope first: with n restaurants the payoff lives in
    // [1/n^2, 1/(n(n-1))].
    for n in 2..=5 {
        let (lo, hi) = payoff_bounds(n)?;
        println!("n={n}: payoff envelope [{lo:.6}, {hi:.6}]");
    }
    println!();

    // The known optimal finite-coin strategies, re-scored from their parts.
    println!("m,n,payoff,rescored");
    for row in table1_strategies() {
        let q = apply_local(&row.s_a, &row.s_b, &row.source)?;
        let rescored = payoff(&q, row.n)?;
        println!("{},{},{},{}", row.m, row.n, row.payoff, rescored);
        assert!((rescored - row.payoff).abs() < 1e-12);
    }
    println!();

    // Let the solver find the two-faced, three-restaurant optimum on its
    // own. A modest budget is enough to land on 1/8 to optimizer precision.
    let cfg = OptimizerConfig {
        max_starts: 60,
        ..OptimizerConfig::default()
    };
    let report = classical_max_payoff(2, 3, &cfg)?;
    println!("optimizer result for m=2, n=3:");
    print!("{}", payoff_report_to_csv(&report));
    println!(
        "gap to the exact value 1/8: {:.3e}",
        (report.value - 0.125).abs()
    );
    Ok(())
}
