//! Quantum coin ("quoin") states: two-qubit density matrices, local POVM
//! measurements, the joint statistics they induce, and the reduction of
//! classically-correlated states to plain stochastic simulation.
//!
//! A two-2-quoin is a 4x4 density matrix shared between Alice and Bob in
//! Alice-major tensor order (basis |00>, |01>, |10>, |11>). Measuring local
//! POVMs on both sides turns a quoin into a classical coin state, which is
//! where quantum shared randomness outperforms its classical counterpart.

use num_complex::Complex64;

use crate::coinspace::{joint_from_computed, JointDist};
use crate::freeops::StochasticMatrix;
use crate::linalg::CMatrix;
use crate::rng::XorShift64Star;
use crate::{Error, Result};

pub use crate::linalg::{hermitian_eigenpairs, hermitian_eigenvalues, ComplexScalar};

/// Two-qubit density matrix: Hermitian (within 1e-10), unit trace (within
/// 1e-9), positive semidefinite (eigenvalues >= -1e-8; the slack absorbs
/// channel-application rounding).
#[derive(Clone, Debug, PartialEq)]
pub struct QuoinState {
    m: CMatrix,
}

impl QuoinState {
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.n_rows() != 4 || m.n_cols() != 4 {
            return Err(Error::DimensionMismatch {
                context: format!("quoin state must be 4x4, got {}x{}", m.n_rows(), m.n_cols()),
            });
        }
        let deviation = m.hermiticity_deviation();
        if deviation > 1e-10 {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = m.trace().re;
        if (trace - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized { sum: trace });
        }
        let eigs = hermitian_eigenvalues(&m)?;
        if eigs[0] < -1e-8 {
            return Err(Error::Internal {
                context: format!("density matrix has negative eigenvalue {}", eigs[0]),
            });
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }
}

/// Finite positive operator valued measure on one qubit: 2x2 Hermitian PSD
/// elements summing to the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Povm {
    elements: Vec<CMatrix>,
}

impl Povm {
    pub fn new(elements: Vec<CMatrix>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::DimensionMismatch {
                context: "POVM needs at least one element".into(),
            });
        }
        let mut sum = CMatrix::zeros(2, 2);
        for e in &elements {
            if e.n_rows() != 2 || e.n_cols() != 2 {
                return Err(Error::DimensionMismatch {
                    context: format!("POVM element must be 2x2, got {}x{}", e.n_rows(), e.n_cols()),
                });
            }
            let deviation = e.hermiticity_deviation();
            if deviation > 1e-10 {
                return Err(Error::NotHermitian { deviation });
            }
            let eigs = hermitian_eigenvalues(e)?;
            if eigs[0] < -1e-10 {
                return Err(Error::Internal {
                    context: format!("POVM element has negative eigenvalue {}", eigs[0]),
                });
            }
            sum = sum.add(e);
        }
        let completeness = sum.max_abs_diff(&CMatrix::identity(2));
        if completeness > 1e-9 {
            return Err(Error::Internal {
                context: format!("POVM elements sum off identity by {completeness:e}"),
            });
        }
        Ok(Self { elements })
    }

    pub fn n_outcomes(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, k: usize) -> &CMatrix {
        &self.elements[k]
    }

    pub fn elements(&self) -> &[CMatrix] {
        &self.elements
    }
}

/// Classically correlated two-qubit state, diagonal in the computational
/// product basis: weights p_uv on |uv><uv|. Zero quantum discord.
#[derive(Clone, Debug, PartialEq)]
pub struct CcState {
    weights: [[f64; 2]; 2],
}

impl CcState {
    pub fn new(weights: [[f64; 2]; 2]) -> Result<Self> {
        let mut w = weights;
        let mut sum = 0.0;
        for (u, row) in w.iter_mut().enumerate() {
            for (v, x) in row.iter_mut().enumerate() {
                if *x < -1e-12 {
                    return Err(Error::NegativeEntry {
                        row: u,
                        col: v,
                        value: *x,
                    });
                }
                *x = x.max(0.0);
                sum += *x;
            }
        }
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self { weights: w })
    }

    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.weights[u][v]
    }
}

/// Projector onto (|01> + sign * |10>) / sqrt(2), written with exact 0.5
/// entries so serialized states stay clean.
fn bell_psi(sign: f64) -> QuoinState {
    let mut m = CMatrix::zeros(4, 4);
    m.set(1, 1, Complex64::new(0.5, 0.0));
    m.set(2, 2, Complex64::new(0.5, 0.0));
    m.set(1, 2, Complex64::new(0.5 * sign, 0.0));
    m.set(2, 1, Complex64::new(0.5 * sign, 0.0));
    QuoinState { m }
}

/// The singlet state |psi-><psi-| with |psi-> = (|01> - |10>) / sqrt(2):
/// the maximally entangled workhorse of every quantum strategy here.
pub fn singlet() -> QuoinState {
    bell_psi(-1.0)
}

/// The triplet-like partner |psi+><psi+| with |psi+> = (|01> + |10>) / sqrt(2),
/// which the phase-flip channel mixes into the singlet.
pub fn psi_plus() -> QuoinState {
    bell_psi(1.0)
}

/// Werner-form noisy quoin: p * singlet + (1-p) * I/4.
/// Separable (in fact unentangled) exactly when p <= 1/3.
pub fn werner(p: f64) -> Result<QuoinState> {
    crate::coinspace::check_unit_interval("p", p)?;
    let m = singlet()
        .m
        .scale_re(p)
        .add(&CMatrix::identity(4).scale_re((1.0 - p) / 4.0));
    Ok(QuoinState { m })
}

/// Embeds classical weights as the diagonal state
/// sum_uv p_uv |uv><uv|.
pub fn cc_state(w: &CcState) -> QuoinState {
    let mut m = CMatrix::zeros(4, 4);
    for u in 0..2 {
        for v in 0..2 {
            m.set(2 * u + v, 2 * u + v, Complex64::new(w.weight(u, v), 0.0));
        }
    }
    QuoinState { m }
}

/// Real-amplitude ket at angle `theta`: cos(theta)|0> + sin(theta)|1>.
fn planar_ket(theta: f64) -> [Complex64; 2] {
    [
        Complex64::new(theta.cos(), 0.0),
        Complex64::new(theta.sin(), 0.0),
    ]
}

/// Three-outcome trine POVM: elements (2/3)|psi_k><psi_k| with real
/// amplitudes at angles k * 2pi/3, k = 0, 1, 2.
pub fn trine_povm() -> Povm {
    uniform_angle_povm(3).expect("trine POVM is the d = 3 uniform-angle measurement")
}

/// d-outcome uniform-angle POVM: elements (2/d)|psi_k><psi_k| with real
/// amplitudes at angles k * 2pi/d.
///
/// Requires d >= 3: at d = 2 the two projectors coincide (angles 0 and pi
/// give the same ray) and cannot sum to the identity, so no such POVM
/// exists and the construction is rejected.
pub fn uniform_angle_povm(d: usize) -> Result<Povm> {
    if d < 3 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d as f64,
            range: "[3, ...)",
        });
    }
    let elements = (0..d)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / d as f64;
            CMatrix::from_outer(&planar_ket(theta)).scale_re(2.0 / d as f64)
        })
        .collect();
    Povm::new(elements)
}

/// Four-outcome SIC POVM: (1/2)|0><0| together with (1/2)|psi_k><psi_k|,
/// |psi_k> = sqrt(1/3)|0> + e^{i 2k pi/3} sqrt(2/3)|1>, k = 0, 1, 2.
/// All pairwise squared overlaps between the four rays equal 1/3.
pub fn sic_povm() -> Povm {
    let mut elements = vec![CMatrix::from_outer(&[
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
    ])
    .scale_re(0.5)];
    let a = (1.0f64 / 3.0).sqrt();
    let b = (2.0f64 / 3.0).sqrt();
    for k in 0..3 {
        let phase = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 3.0);
        let ket = [Complex64::new(a, 0.0), phase * b];
        elements.push(CMatrix::from_outer(&ket).scale_re(0.5));
    }
    Povm::new(elements).expect("SIC POVM construction is complete by design")
}

/// Joint outcome statistics of local measurements on a shared quoin:
/// p(i, j) = Tr[(A_i (x) B_j) rho].
///
/// Probabilities are real for valid inputs; imaginary residue above 1e-8
/// is an error, below it is discarded. The output table is renormalized to
/// absorb float drift from the completeness sums.
pub fn measure_joint(rho: &QuoinState, a: &Povm, b: &Povm) -> Result<JointDist> {
    let (da, db) = (a.n_outcomes(), b.n_outcomes());
    let mut p = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            let joint_op = a.element(i).kron(b.element(j));
            // Tr[M rho] without forming the product matrix.
            let mut tr = Complex64::new(0.0, 0.0);
            for r in 0..4 {
                for c in 0..4 {
                    tr += joint_op.get(r, c) * rho.m.get(c, r);
                }
            }
            if tr.im.abs() > 1e-8 {
                return Err(Error::NonrealProbability { imag: tr.im });
            }
            p.push(tr.re.max(0.0));
        }
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::Internal {
            context: format!("measurement statistics sum to {sum}"),
        });
    }
    p.iter_mut().for_each(|x| *x /= sum);
    Ok(joint_from_computed(da, db, p))
}

/// Reduces measurement statistics on a classically correlated state to a
/// purely classical simulation: the coin with the CC weights, pushed
/// through the stochastic matrices [S_X]_{kl} = <l| M_k^X |l>.
///
/// The returned triple (coin, S_A, S_B) satisfies
/// apply_local(S_A, S_B, coin) = measure_joint(cc_state(w), a, b) exactly
/// (within 1e-12): zero-discord quoins yield no quantum advantage.
pub fn theorem5_reduce(
    w: &CcState,
    a: &Povm,
    b: &Povm,
) -> (JointDist, StochasticMatrix, StochasticMatrix) {
    let coin = joint_from_computed(
        2,
        2,
        vec![
            w.weight(0, 0),
            w.weight(0, 1),
            w.weight(1, 0),
            w.weight(1, 1),
        ],
    );
    (coin, povm_diagonal_map(a), povm_diagonal_map(b))
}

/// The 2 -> d stochastic matrix of diagonal POVM entries <l| M_k |l>.
/// Columns sum to 1 because the elements sum to the identity.
fn povm_diagonal_map(m: &Povm) -> StochasticMatrix {
    let rows: Vec<Vec<f64>> = (0..m.n_outcomes())
        .map(|k| vec![m.element(k).get(0, 0).re, m.element(k).get(1, 1).re])
        .collect();
    crate::freeops::make_stochastic(&rows)
        .expect("diagonal entries of a POVM form a column-stochastic matrix")
}

/// Transposes Bob's tensor factor: <a b| rho^T_B |a' b'> = <a b'| rho |a' b>.
/// The PPT test on the result detects entanglement at two-qubit dimensions.
pub fn partial_transpose_b(rho: &QuoinState) -> CMatrix {
    partial_transpose_b_matrix(&rho.m)
}

pub(crate) fn partial_transpose_b_matrix(m: &CMatrix) -> CMatrix {
    let mut out = CMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            for ap in 0..2 {
                for bp in 0..2 {
                    out.set(2 * a + b, 2 * ap + bp, m.get(2 * a + bp, 2 * ap + b));
                }
            }
        }
    }
    out
}

/// Smallest eigenvalue of a Hermitian matrix; negative values on a partial
/// transpose certify entanglement.
pub(crate) fn min_eigenvalue(h: &CMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(h)?[0])
}

/// Draws a random d-outcome qubit POVM: random PSD seeds G_k^dagger G_k,
/// jointly renormalized by S^{-1/2} (.) S^{-1/2} so they sum to the
/// identity. Deterministic for a fixed generator state.
pub fn random_povm(d: usize, rng: &mut XorShift64Star) -> Result<Povm> {
    if d < 2 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d as f64,
            range: "[2, ...)",
        });
    }
    let mut seeds = Vec::with_capacity(d);
    for _ in 0..d {
        let mut g = CMatrix::zeros(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                g.set(
                    i,
                    j,
                    Complex64::new(rng.next_f64() - 0.5, rng.next_f64() - 0.5),
                );
            }
        }
        seeds.push(g.dagger().mul(&g));
    }
    let mut total = CMatrix::zeros(2, 2);
    for s in &seeds {
        total = total.add(s);
    }
    // total is positive definite almost surely; build total^{-1/2} from its
    // eigendecomposition.
    let (eigs, vecs) = hermitian_eigenpairs(&total)?;
    let mut inv_sqrt = CMatrix::zeros(2, 2);
    for (lambda, v) in eigs.iter().zip(&vecs) {
        if *lambda <= 1e-12 {
            return Err(Error::Internal {
                context: "random POVM seed sum is numerically singular".into(),
            });
        }
        let proj = CMatrix::from_outer(v).scale_re(1.0 / lambda.sqrt());
        inv_sqrt = inv_sqrt.add(&proj);
    }
    let elements: Vec<CMatrix> = seeds
        .iter()
        .map(|s| inv_sqrt.mul(s).mul(&inv_sqrt))
        .collect();
    Povm::new(elements)
}
