//! Deterministic multi-start maximin optimization over products of
//! probability simplices.
//!
//! The optimizer maximizes objectives of the form
//!
//! ```text
//!   f(x) = min_k c_k(x)
//! ```
//!
//! where the parameter vector `x` is a concatenation of probability-simplex
//! blocks and the `c_k` are smooth "cell" values supplied by the caller
//! (payoff entries, negated reconstruction errors, and so on). A plain
//! scalar objective is the single-cell case.
//!
//! Each start runs derivative-free coordinate descent (ascent): perturb one
//! coordinate, re-project its block onto the simplex, and accept the move if
//! the objective strictly improves. The raw minimum is flat along cell ties,
//! where coordinate moves stall easily, so every start first runs a few
//! warm-up passes on a soft-min surrogate with increasing sharpness before
//! switching to the exact minimum. The step size shrinks geometrically from
//! 0.25 down to 1e-9; after a stall the exact phase resets the step and
//! tries again, which lets it escape premature shrinkage.

use crate::rng::{SplitMix64, XorShift64Star};

/// Budget and reproducibility knobs for [`maximize`].
#[derive(Clone, Debug)]
pub struct OptimizerConfig {
    /// Number of independent random starts.
    pub max_starts: usize,
    /// Per-start iteration budget; one iteration is one full coordinate sweep.
    pub max_iters_per_start: usize,
    /// Seed for the start-point generator; fixed seed means bit-identical results.
    pub seed: u64,
    /// Minimum improvement required to accept a move.
    pub convergence_tol: f64,
    /// Initial soft-min temperature for the warm-up passes. The warm-up
    /// schedule sharpens this by two factors of 10 before the exact phase.
    pub smoothing_beta: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            max_starts: 200,
            max_iters_per_start: 2000,
            seed: 0,
            convergence_tol: 1e-10,
            smoothing_beta: 50.0,
        }
    }
}

/// Shape of the feasible set: a product of probability simplices.
///
/// `blocks[i]` is the coordinate count of the i-th block, so a block of
/// size n ranges over the (n-1)-dimensional simplex. A `[0, 1]` scalar is
/// the 2-coordinate case (the value and its complement).
#[derive(Clone, Debug)]
pub struct SimplexBlockSpec {
    blocks: Vec<usize>,
}

impl SimplexBlockSpec {
    /// Builds a block spec; blocks must be nonempty and all sizes positive.
    pub fn new(blocks: Vec<usize>) -> crate::Result<Self> {
        if blocks.is_empty() {
            return Err(crate::Error::DimensionMismatch {
                context: "simplex block list is empty".into(),
            });
        }
        if let Some(&z) = blocks.iter().find(|&&b| b == 0) {
            return Err(crate::Error::OutOfRange {
                name: "block size",
                value: z as f64,
                range: "[1, ...)",
            });
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Total length of the concatenated parameter vector.
    pub fn param_count(&self) -> usize {
        self.blocks.iter().sum()
    }
}

/// Euclidean projection onto the probability simplex.
///
/// Sort-based exact algorithm: find the largest set of coordinates that stay
/// positive after subtracting a common shift, then clamp the rest to zero.
pub fn project_to_simplex(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    project_to_simplex_in_place(&mut out, &mut Vec::new());
    out
}

/// In-place projection; `sorted` is scratch space reused across calls.
fn project_to_simplex_in_place(v: &mut [f64], sorted: &mut Vec<f64>) {
    sorted.clear();
    sorted.extend_from_slice(v);
    sorted.sort_unstable_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut shift = 0.0;
    for (i, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let t = (cumulative - 1.0) / (i + 1) as f64;
        if u - t > 0.0 {
            shift = t;
        }
    }
    for x in v.iter_mut() {
        *x = (*x - shift).max(0.0);
    }
}

/// Result of a [`maximize`] run.
#[derive(Clone, Debug)]
pub struct MaximizeOutcome {
    /// Best objective value over all starts.
    pub value: f64,
    /// Parameter vector achieving `value`.
    pub argmax: Vec<f64>,
    /// Number of starts executed (always `max_starts`; every start runs).
    pub starts_used: usize,
    /// True if at least one start converged by natural stall rather than
    /// by hitting the iteration cap. False flags an uncertified result.
    pub converged: bool,
}

/// Smooth lower bound of the minimum: min(c) - ln(sum exp(-beta (c - min))) / beta.
fn soft_min(cells: &[f64], beta: f64) -> f64 {
    let m = cells.iter().copied().fold(f64::INFINITY, f64::min);
    let s: f64 = cells.iter().map(|&c| (-beta * (c - m)).exp()).sum();
    m - s.ln() / beta
}

fn exact_min(cells: &[f64]) -> f64 {
    cells.iter().copied().fold(f64::INFINITY, f64::min)
}

#[derive(Clone, Copy, PartialEq)]
enum PhaseEnd {
    /// Step size shrank below the floor: natural convergence.
    StepFloor,
    /// Sweep budget for the phase ran out mid-search.
    SweepCap,
}

/// Shared state for one optimization start, holding reusable buffers.
struct StartState<'a, F: Fn(&[f64], &mut Vec<f64>)> {
    objective: &'a F,
    offsets: Vec<usize>,
    x: Vec<f64>,
    candidate: Vec<f64>,
    cells: Vec<f64>,
    scratch: Vec<f64>,
}

impl<'a, F: Fn(&[f64], &mut Vec<f64>)> StartState<'a, F> {
    fn eval(&mut self, scalar: impl Fn(&[f64]) -> f64) -> f64 {
        (self.objective)(&self.candidate, &mut self.cells);
        scalar(&self.cells)
    }

    /// One coordinate-descent phase under the scalarization `scalar`.
    /// Returns (final value, sweeps used, how the phase ended).
    fn sweep_phase(
        &mut self,
        scalar: impl Fn(&[f64]) -> f64 + Copy,
        blocks: &[usize],
        max_sweeps: usize,
        accept_tol: f64,
        step0: f64,
        step_min: f64,
    ) -> (f64, usize, PhaseEnd) {
        self.candidate.copy_from_slice(&self.x);
        let mut f = self.eval(scalar);
        let mut step = step0;
        let mut sweeps = 0;
        while step >= step_min {
            if sweeps == max_sweeps {
                return (f, sweeps, PhaseEnd::SweepCap);
            }
            sweeps += 1;
            let mut improved = false;
            for (bi, &b) in blocks.iter().enumerate() {
                let (s, e) = (self.offsets[bi], self.offsets[bi] + b);
                for c in s..e {
                    for sign in [1.0, -1.0] {
                        self.candidate.copy_from_slice(&self.x);
                        self.candidate[c] += sign * step;
                        project_to_simplex_in_place(
                            &mut self.candidate[s..e],
                            &mut self.scratch,
                        );
                        let fy = self.eval(scalar);
                        if fy > f + accept_tol {
                            self.x.copy_from_slice(&self.candidate);
                            f = fy;
                            improved = true;
                        }
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        (f, sweeps, PhaseEnd::StepFloor)
    }
}

/// Maximizes `min_k c_k(x)` over a product of probability simplices.
///
/// `objective` receives the parameter vector and must write the cell values
/// `c_k(x)` into the provided buffer (clearing it first is the optimizer's
/// job; the closure only pushes). The effective objective is the minimum
/// cell. Deterministic: a fixed `cfg` reproduces the result bit-for-bit.
/// Across starts, strictly greater values win and ties keep the earliest
/// start.
pub fn maximize<F>(objective: F, spec: &SimplexBlockSpec, cfg: &OptimizerConfig) -> MaximizeOutcome
where
    F: Fn(&[f64], &mut Vec<f64>),
{
    let blocks = spec.blocks();
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut acc = 0;
    for &b in blocks {
        offsets.push(acc);
        acc += b;
    }

    let wrapped = |x: &[f64], cells: &mut Vec<f64>| {
        cells.clear();
        objective(x, cells);
    };

    let mut seeder = SplitMix64::new(cfg.seed);
    let mut best_value = f64::NEG_INFINITY;
    let mut best_x = vec![0.0; spec.param_count()];
    let mut any_converged = false;
    let mut state = StartState {
        objective: &wrapped,
        offsets,
        x: vec![0.0; spec.param_count()],
        candidate: vec![0.0; spec.param_count()],
        cells: Vec::new(),
        scratch: Vec::new(),
    };

    let budget = cfg.max_iters_per_start;
    let warm_cap = budget / 6;
    let betas = [
        cfg.smoothing_beta,
        cfg.smoothing_beta * 10.0,
        cfg.smoothing_beta * 100.0,
    ];

    for start in 0..cfg.max_starts {
        let mut rng = XorShift64Star::new(seeder.next_u64());
        let mut pos = 0;
        for &b in blocks {
            rng.fill_simplex(b, &mut state.scratch);
            state.x[pos..pos + b].copy_from_slice(&state.scratch);
            pos += b;
        }

        let mut used = 0;
        for beta in betas {
            let (_, sweeps, _) = state.sweep_phase(
                |cells| soft_min(cells, beta),
                blocks,
                warm_cap,
                cfg.convergence_tol,
                0.25,
                1e-6,
            );
            used += sweeps;
        }

        state.candidate.copy_from_slice(&state.x);
        let mut f = state.eval(exact_min);
        let mut converged = false;
        // Exact phase with step-reset cycles: each cycle shrinks the step to
        // the floor; if the cycle still improved, reset and kick again.
        for _cycle in 0..5 {
            if used >= budget {
                break;
            }
            let f_before = f;
            let (fv, sweeps, end) = state.sweep_phase(
                exact_min,
                blocks,
                budget - used,
                cfg.convergence_tol,
                0.25,
                1e-9,
            );
            f = fv;
            used += sweeps;
            if end == PhaseEnd::SweepCap {
                break;
            }
            converged = true;
            if f - f_before <= 1e-12 {
                break;
            }
        }

        any_converged |= converged;
        if f > best_value {
            best_value = f;
            best_x.copy_from_slice(&state.x);
        }
        let _ = start;
    }

    MaximizeOutcome {
        value: best_value,
        argmax: best_x,
        starts_used: cfg.max_starts,
        converged: any_converged,
    }
}
