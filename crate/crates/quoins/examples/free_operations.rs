//! Local stochastic processing — the free operations of the theory.
//! Demonstrates applying local maps, composing them, reaching a
//! not-alpha-correlated state from the edge, and the one-way street:
//! mutual information never goes up.
//!
//! Run with: `cargo run --example free_operations`

use quoins::coinspace::{alpha_correlated, make_joint, mutual_information};
use quoins::csvio::joint_to_csv;
use quoins::freeops::{apply_local, make_stochastic, random_stochastic, StochasticMatrix};

fn main() -> quoins::Result<()> {
    // Alice relabels her faces, Bob does nothing: correlation flips to
    // anticorrelation but its strength is untouched.
    let coin = alpha_correlated(0.3)?;
    let swap = make_stochastic(&[vec![0.0, 1.0], vec![1.0, 0.0]])?;
    let id = StochasticMatrix::identity(2);
    let flipped = apply_local(&swap, &id, &coin)?;
    println!("swap x id on the 0.3-edge:\n{}", joint_to_csv(&flipped));
    let drift = (mutual_information(&coin) - mutual_information(&flipped)).abs();
    assert!(drift < 1e-12, "relabeling is reversible, so the measure is unchanged");

    // The edge freely simulates every two-faced coin. Reaching
    // C_delta = (1/3, 0; 1/3, 1/3) from the 2/3-edge takes one noisy map:
    // Alice scrambles heads but forwards tails faithfully.
    let edge = alpha_correlated(2.0 / 3.0)?;
    let scramble = make_stochastic(&[vec![0.5, 0.0], vec![0.5, 1.0]])?;
    let c_delta = apply_local(&scramble, &id, &edge)?;
    println!("C_delta from the 2/3-edge:\n{}", joint_to_csv(&c_delta));
    let target = make_joint(&[vec![1.0 / 3.0, 0.0], vec![1.0 / 3.0, 1.0 / 3.0]])?;
    let gap: f64 = c_delta
        .entries()
        .iter()
        .zip(target.entries())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("max deviation from the target: {gap:.2e}\n");

    // Maps compose: coarse-graining after expansion is itself one map.
    let expand = random_stochastic(4, 2, 11);
    let coarsen = make_stochastic(&[
        vec![1.0, 1.0, 0.0, 0.0],
        vec![0.0, 0.0, 1.0, 1.0],
    ])?;
    let chained = coarsen.compose(&expand)?;
    println!(
        "coarsen . expand is a {}->{} map\n",
        chained.n_in(),
        chained.n_out()
    );

    // The monotone: local processing can only destroy shared randomness.
    println!("mutual information along a processing chain:");
    let mut state = alpha_correlated(0.5)?;
    println!("  start (fair edge):        {:.6} bits", mutual_information(&state));
    for (step, seed) in [(1, 21u64), (2, 22), (3, 23)] {
        let s_a = random_stochastic(3, state.n_a(), seed);
        let s_b = random_stochastic(3, state.n_b(), seed ^ 0xffff);
        state = apply_local(&s_a, &s_b, &state)?;
        println!(
            "  after random step {step}:      {:.6} bits",
            mutual_information(&state)
        );
    }
    Ok(())
}
