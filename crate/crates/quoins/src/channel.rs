//! Qubit channels in Kraus form, shared-randomness distribution through
//! them, advantage thresholds against the classical benchmarks, and the
//! depolarizing classical-capacity formula.
//!
//! The distribution scenario: Alice holds both qubits of a singlet and
//! sends one to Bob through a noisy channel. The payoff of the resulting
//! quoin in the subsidy game, as a function of the noise parameter, decides
//! when the channel is still better than any classical two-coin strategy.

use num_complex::Complex64;

use crate::coinspace::binary_entropy;
use crate::game::{classical_benchmark, payoff};
use crate::linalg::{pauli_x, pauli_y, pauli_z, CMatrix};
use crate::quoin::{
    measure_joint, min_eigenvalue, partial_transpose_b_matrix, sic_povm, singlet, trine_povm,
    Povm, QuoinState,
};
use crate::{Error, Result};

/// Completely positive trace-preserving qubit map, stored as Kraus
/// operators with sum_i K_i^dagger K_i = I (within 1e-9).
#[derive(Clone, Debug, PartialEq)]
pub struct QubitChannel {
    kraus: Vec<CMatrix>,
}

impl QubitChannel {
    pub fn new(kraus: Vec<CMatrix>) -> Result<Self> {
        if kraus.is_empty() {
            return Err(Error::DimensionMismatch {
                context: "channel needs at least one Kraus operator".into(),
            });
        }
        let mut sum = CMatrix::zeros(2, 2);
        for k in &kraus {
            if k.n_rows() != 2 || k.n_cols() != 2 {
                return Err(Error::DimensionMismatch {
                    context: format!(
                        "Kraus operator must be 2x2, got {}x{}",
                        k.n_rows(),
                        k.n_cols()
                    ),
                });
            }
            sum = sum.add(&k.dagger().mul(k));
        }
        let deviation = sum.max_abs_diff(&CMatrix::identity(2));
        if deviation > 1e-9 {
            return Err(Error::Internal {
                context: format!("Kraus operators break trace preservation by {deviation:e}"),
            });
        }
        Ok(Self { kraus })
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    /// Applies the channel to a single-qubit operator: sum_i K_i X K_i^dagger.
    pub fn apply(&self, x: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(2, 2);
        for k in &self.kraus {
            out = out.add(&k.mul(x).mul(&k.dagger()));
        }
        out
    }
}

/// Outcome of the advantage-threshold bisection: the noise level at which
/// the distributed payoff crosses the classical benchmark.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdResult {
    pub p_star: f64,
    pub classical_benchmark: f64,
    pub bracket_width: f64,
}

/// The two channel families under study.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChannelFamily {
    PhaseFlip,
    Depolarizing,
}

impl ChannelFamily {
    pub fn channel(self, p: f64) -> Result<QubitChannel> {
        match self {
            ChannelFamily::PhaseFlip => phase_flip(p),
            ChannelFamily::Depolarizing => depolarizing(p),
        }
    }
}

impl std::fmt::Display for ChannelFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChannelFamily::PhaseFlip => write!(f, "phaseflip"),
            ChannelFamily::Depolarizing => write!(f, "depolarizing"),
        }
    }
}

/// Phase-flip channel p * rho + (1-p) * sigma_z rho sigma_z, as Kraus
/// operators {sqrt(p) I, sqrt(1-p) sigma_z}.
pub fn phase_flip(p: f64) -> Result<QubitChannel> {
    crate::coinspace::check_unit_interval("p", p)?;
    QubitChannel::new(vec![
        CMatrix::identity(2).scale_re(p.sqrt()),
        pauli_z().scale_re((1.0 - p).sqrt()),
    ])
}

/// Depolarizing channel p * rho + (1-p) * I/2, as Kraus operators
/// {sqrt((1+3p)/4) I, sqrt((1-p)/4) sigma_x, ..., sigma_z}.
pub fn depolarizing(p: f64) -> Result<QubitChannel> {
    crate::coinspace::check_unit_interval("p", p)?;
    let w = ((1.0 - p) / 4.0).sqrt();
    QubitChannel::new(vec![
        CMatrix::identity(2).scale_re(((1.0 + 3.0 * p) / 4.0).sqrt()),
        pauli_x().scale_re(w),
        pauli_y().scale_re(w),
        pauli_z().scale_re(w),
    ])
}

/// Sends Bob's half of a shared quoin through the channel:
/// sum_i (I (x) K_i) rho (I (x) K_i)^dagger.
pub fn apply_to_b(ch: &QubitChannel, rho: &QuoinState) -> QuoinState {
    let mut out = CMatrix::zeros(4, 4);
    let id = CMatrix::identity(2);
    for k in ch.kraus() {
        let lifted = id.kron(k);
        out = out.add(&lifted.mul(rho.matrix()).mul(&lifted.dagger()));
    }
    QuoinState::new(out).expect("CPTP maps preserve density matrices")
}

fn game_povm(n: usize) -> Result<Povm> {
    match n {
        3 => Ok(trine_povm()),
        4 => Ok(sic_povm()),
        _ => Err(Error::OutOfRange {
            name: "n",
            value: n as f64,
            range: "{3, 4}",
        }),
    }
}

/// Payoff of the coin obtained by distributing a singlet half through the
/// channel at noise level p, then measuring trine (n = 3) or SIC (n = 4)
/// on both sides.
pub fn distributed_payoff(family: ChannelFamily, p: f64, n: usize) -> Result<f64> {
    let povm = game_povm(n)?;
    let rho = apply_to_b(&family.channel(p)?, &singlet());
    let stats = measure_joint(&rho, &povm, &povm)?;
    payoff(&stats, n)
}

/// Bisects for the noise level where the distributed payoff reaches the
/// classical benchmark (1/8 for n = 3, 1/15 for n = 4). The payoff is
/// monotone nondecreasing in p for both families; this is spot-checked on
/// a coarse grid before bisecting rather than assumed.
pub fn advantage_threshold(family: ChannelFamily, n: usize) -> Result<ThresholdResult> {
    let benchmark = classical_benchmark(n).ok_or(Error::OutOfRange {
        name: "n",
        value: n as f64,
        range: "{3, 4}",
    })?;
    let mut prev = f64::NEG_INFINITY;
    for i in 0..=100 {
        let value = distributed_payoff(family, i as f64 / 100.0, n)?;
        if value < prev - 1e-12 {
            return Err(Error::Internal {
                context: format!("distributed payoff for {family} is not monotone in p"),
            });
        }
        prev = value;
    }
    if distributed_payoff(family, 1.0, n)? <= benchmark {
        return Err(Error::NoCrossing { benchmark });
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-6 {
        let mid = 0.5 * (lo + hi);
        if distributed_payoff(family, mid, n)? > benchmark {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ThresholdResult {
        p_star: 0.5 * (lo + hi),
        classical_benchmark: benchmark,
        bracket_width: hi - lo,
    })
}

/// Choi matrix of the channel under the trace-1 convention: the image of
/// the maximally entangled state, (1/2) sum_ij |i><j| (x) Lambda(|i><j|).
pub fn choi(ch: &QubitChannel) -> CMatrix {
    let mut out = CMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            let mut unit = CMatrix::zeros(2, 2);
            unit.set(i, j, Complex64::new(1.0, 0.0));
            let image = ch.apply(&unit);
            for r in 0..2 {
                for c in 0..2 {
                    let cur = out.get(2 * i + r, 2 * j + c);
                    out.set(2 * i + r, 2 * j + c, cur + 0.5 * image.get(r, c));
                }
            }
        }
    }
    out
}

/// A qubit channel is entanglement breaking exactly when its Choi matrix
/// stays positive under partial transpose (PPT equals separability at
/// 2 (x) 2 dimension).
pub fn is_entanglement_breaking(ch: &QubitChannel) -> bool {
    let pt = partial_transpose_b_matrix(&choi(ch));
    min_eigenvalue(&pt).expect("Choi partial transpose is Hermitian") >= -1e-9
}

/// Classical (Holevo) capacity of the depolarizing channel:
/// 1 - H((1+p)/2) bits.
pub fn depolarizing_classical_capacity(p: f64) -> Result<f64> {
    crate::coinspace::check_unit_interval("p", p)?;
    Ok(1.0 - binary_entropy((1.0 + p) / 2.0))
}

/// One row of a payoff-vs-noise curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvePoint {
    pub p: f64,
    pub payoff: f64,
    pub classical_benchmark: f64,
    /// Classical capacity at this noise level; only the depolarizing
    /// family has the closed form implemented.
    pub capacity: Option<f64>,
}

/// Samples the distributed payoff on a uniform p-grid, with the classical
/// benchmark and (for depolarizing) the channel capacity alongside.
pub fn payoff_curve(family: ChannelFamily, n: usize, grid_points: usize) -> Result<Vec<CurvePoint>> {
    if grid_points < 2 {
        return Err(Error::OutOfRange {
            name: "grid_points",
            value: grid_points as f64,
            range: "[2, ...)",
        });
    }
    let benchmark = classical_benchmark(n).ok_or(Error::OutOfRange {
        name: "n",
        value: n as f64,
        range: "{3, 4}",
    })?;
    let mut rows = Vec::with_capacity(grid_points);
    for i in 0..grid_points {
        let p = i as f64 / (grid_points - 1) as f64;
        let capacity = match family {
            ChannelFamily::Depolarizing => Some(depolarizing_classical_capacity(p)?),
            ChannelFamily::PhaseFlip => None,
        };
        rows.push(CurvePoint {
            p,
            payoff: distributed_payoff(family, p, n)?,
            classical_benchmark: benchmark,
            capacity,
        });
    }
    Ok(rows)
}
