//! Tour of the classical coin-state families and the shared-randomness
//! measure: build the named states, inspect their marginals, and see how
//! mutual information separates free (product) states from resourceful
//! ones.
//!
//! Run with: `cargo run --example coin_states`

use quoins::coinspace::{
    alpha_anticorrelated, alpha_correlated, eq_not_alpha, is_not_alpha_correlated, is_product,
    make_joint, marginals, mutual_information, shannon_entropy,
};
use quoins::csvio::joint_to_csv;

fn main() -> quoins::Result<()> {
    // The alpha-correlated edge: both coins land the same face, heads with
    // probability alpha. One parameter sweeps from pure hh to pure tt.
    println!("== the alpha-correlated edge ==");
    for alpha in [0.0, 0.25, 0.5, 1.0] {
        let state = alpha_correlated(alpha)?;
        println!(
            "alpha = {alpha:4}: mutual information = {:.6} bits",
            mutual_information(&state)
        );
    }
    println!("(maximal at alpha = 1/2: one full shared bit)\n");

    // Its mirror image never agrees on a face.
    let anti = alpha_anticorrelated(0.3)?;
    println!("anticorrelated(0.3) statistics:\n{}", joint_to_csv(&anti));

    // Product states carry no shared randomness at all.
    let product = make_joint(&[vec![0.21, 0.49], vec![0.09, 0.21]])?;
    println!(
        "product 2x2 state: is_product = {}, mutual information = {:.2e} bits\n",
        is_product(&product, 1e-9),
        mutual_information(&product)
    );

    // The game-optimal family: zero diagonal, uniform off-diagonal mass.
    println!("== equal not-alpha states ==");
    for n in [3, 4, 5] {
        let state = eq_not_alpha(n)?;
        let (row_marginal, _) = marginals(&state);
        println!(
            "n = {n}: off-diagonal entries 1/{}, marginal entropy {:.6} bits, \
             mutual information {:.6} bits",
            n * (n - 1),
            shannon_entropy(&row_marginal),
            mutual_information(&state)
        );
        assert!(is_not_alpha_correlated(&state, 1e-9)?);
    }

    // A hand-built not-alpha state used throughout: (1/3, 0, 1/3, 1/3).
    let c_delta = make_joint(&[vec![1.0 / 3.0, 0.0], vec![1.0 / 3.0, 1.0 / 3.0]])?;
    println!(
        "\nC_delta = (1/3, 0; 1/3, 1/3): mutual information = {:.16} bits",
        mutual_information(&c_delta)
    );
    Ok(())
}
