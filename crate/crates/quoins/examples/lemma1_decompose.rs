//! Every two-faced coin sits inside the edge family: any 2x2 joint
//! distribution can be written as local processing of some alpha-edge.
//! This example recovers that decomposition numerically for a couple of
//! targets and prints the flat CSV form.
//!
//! Run with: `cargo run --example lemma1_decompose`

use quoins::coinspace::make_joint;
use quoins::csvio::lemma1_to_csv;
use quoins::freeops::{apply_local, lemma1_decompose, random_stochastic};
use quoins::maximin::OptimizerConfig;

fn main() -> quoins::Result<()> {
    let cfg = OptimizerConfig {
        max_starts: 40,
        ..OptimizerConfig::default()
    };

    // The coin that powers the best (2,3) strategy.
    let c_delta = make_joint(&[vec![1.0 / 3.0, 0.0], vec![1.0 / 3.0, 1.0 / 3.0]])?;
    let dec_delta = lemma1_decompose(&c_delta, &cfg)?;
    println!("decomposition of C_delta:");
    print!("{}", lemma1_to_csv(&dec_delta));
    println!();

    // A target with no special structure: push a fair edge through random
    // local maps, then ask for it back.
    let fair = make_joint(&[vec![0.5, 0.0], vec![0.0, 0.5]])?;
    let s_a = random_stochastic(2, 2, 7);
    let s_b = random_stochastic(2, 2, 8);
    let scrambled = apply_local(&s_a, &s_b, &fair)?;
    let dec = lemma1_decompose(&scrambled, &cfg)?;
    println!("decomposition of a randomly processed fair edge:");
    print!("{}", lemma1_to_csv(&dec));
    println!();

    // The residual is the reconstruction error; both should sit at
    // numerical zero, which is the content of the structure theorem.
    println!("residuals: {:.3e} and {:.3e}", dec_delta.residual, dec.residual);
    assert!(dec_delta.residual < 1e-7 && dec.residual < 1e-7);
    Ok(())
}
