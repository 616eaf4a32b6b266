//! Classical shared-randomness states: joint distributions over paired
//! coins, their marginals and entropic quantifiers, and constructors for
//! the named coin states used throughout the crate.
//!
//! A "two-d-coin" is a pair of d-faced coins whose state is a d x d joint
//! probability distribution. Product distributions carry no shared
//! randomness and are the free states of the theory; classical mutual
//! information is the monotone that free (local) operations cannot increase.

use crate::{Error, Result};

/// Joint probability distribution p(x, y) over `n_a` x `n_b` outcomes.
///
/// Entries are validated on construction: nonnegative within -1e-12 (tiny
/// negative drift is clamped to zero) and summing to 1 within 1e-9.
#[derive(Clone, Debug, PartialEq)]
pub struct JointDist {
    n_a: usize,
    n_b: usize,
    /// Row-major: `p[x * n_b + y]` is p(x, y).
    p: Vec<f64>,
}

impl JointDist {
    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.p[x * self.n_b + y]
    }

    /// Row-major flat view of the probability table.
    pub fn entries(&self) -> &[f64] {
        &self.p
    }

    pub fn is_square(&self) -> bool {
        self.n_a == self.n_b
    }
}

/// Single-party probability vector (a marginal of a [`JointDist`]).
#[derive(Clone, Debug, PartialEq)]
pub struct MarginalDist {
    p: Vec<f64>,
}

impl MarginalDist {
    /// Validates nonnegativity (within -1e-12, clamped) and normalization.
    pub fn new(p: Vec<f64>) -> Result<Self> {
        let mut p = p;
        for (i, v) in p.iter_mut().enumerate() {
            if *v < -1e-12 {
                return Err(Error::NegativeEntry {
                    row: 0,
                    col: i,
                    value: *v,
                });
            }
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self { p })
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.p[i]
    }

    pub fn entries(&self) -> &[f64] {
        &self.p
    }
}

/// Builds a validated joint distribution from a row-major table.
pub fn make_joint(rows: &[Vec<f64>]) -> Result<JointDist> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(Error::DimensionMismatch {
            context: "joint distribution table is empty".into(),
        });
    }
    let n_b = rows[0].len();
    if rows.iter().any(|r| r.len() != n_b) {
        return Err(Error::DimensionMismatch {
            context: "joint distribution table is ragged".into(),
        });
    }
    let mut p = Vec::with_capacity(rows.len() * n_b);
    for (x, row) in rows.iter().enumerate() {
        for (y, &v) in row.iter().enumerate() {
            if v < -1e-12 {
                return Err(Error::NegativeEntry {
                    row: x,
                    col: y,
                    value: v,
                });
            }
            p.push(v.max(0.0));
        }
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized { sum });
    }
    Ok(JointDist {
        n_a: rows.len(),
        n_b,
        p,
    })
}

/// Internal constructor for computed tables (measurement statistics,
/// stochastic-map outputs) that are valid by construction up to float
/// drift. Clamps tiny negatives; panics only on gross violations, which
/// indicate a bug rather than bad user input.
pub(crate) fn joint_from_computed(n_a: usize, n_b: usize, mut p: Vec<f64>) -> JointDist {
    debug_assert_eq!(p.len(), n_a * n_b);
    for v in p.iter_mut() {
        debug_assert!(*v > -1e-9, "computed probability {v} is negative");
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    let sum: f64 = p.iter().sum();
    debug_assert!((sum - 1.0).abs() < 1e-9, "computed table sums to {sum}");
    JointDist { n_a, n_b, p }
}

/// Row marginal P(X) and column marginal Q(Y) of a joint distribution.
pub fn marginals(j: &JointDist) -> (MarginalDist, MarginalDist) {
    let mut pa = vec![0.0; j.n_a];
    let mut pb = vec![0.0; j.n_b];
    for x in 0..j.n_a {
        for y in 0..j.n_b {
            let v = j.get(x, y);
            pa[x] += v;
            pb[y] += v;
        }
    }
    // Entries are sums of validated nonnegative values; direct construction.
    (MarginalDist { p: pa }, MarginalDist { p: pb })
}

/// Entropy term -p log2 p with the 0 log 0 = 0 convention; negatives from
/// accumulated drift in [-1e-12, 0) count as zero.
fn entropy_term(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Shannon entropy in bits.
pub fn shannon_entropy(m: &MarginalDist) -> f64 {
    m.p.iter().map(|&p| entropy_term(p)).sum()
}

/// Binary entropy H(q) in bits; shared with the channel-capacity formula.
pub(crate) fn binary_entropy(q: f64) -> f64 {
    entropy_term(q) + entropy_term(1.0 - q)
}

/// Classical mutual information I = H(X) + H(Y) - H(X,Y) in bits.
///
/// This is the resource monotone: no local stochastic operation can
/// increase it. Tiny negative results from float cancellation are clamped
/// to zero, so I = 0 exactly on (numerically) product distributions.
pub fn mutual_information(j: &JointDist) -> f64 {
    let (pa, pb) = marginals(j);
    let h_joint: f64 = j.p.iter().map(|&p| entropy_term(p)).sum();
    let mi = shannon_entropy(&pa) + shannon_entropy(&pb) - h_joint;
    mi.max(0.0)
}

/// True iff the joint factorizes as p(x,y) = p_A(x) p_B(y) within `tol`
/// (max-abs deviation). Product distributions are the free states.
pub fn is_product(j: &JointDist, tol: f64) -> bool {
    let (pa, pb) = marginals(j);
    for x in 0..j.n_a {
        for y in 0..j.n_b {
            if (j.get(x, y) - pa.get(x) * pb.get(y)).abs() > tol {
                return false;
            }
        }
    }
    true
}

/// The alpha-correlated coin state: both coins agree, heads with
/// probability alpha. As a 2x2 table: [[alpha, 0], [0, 1-alpha]].
/// The one-parameter family over alpha is called the alpha-edge.
pub fn alpha_correlated(alpha: f64) -> Result<JointDist> {
    check_unit_interval("alpha", alpha)?;
    Ok(JointDist {
        n_a: 2,
        n_b: 2,
        p: vec![alpha, 0.0, 0.0, 1.0 - alpha],
    })
}

/// The alpha-anticorrelated coin state: coins always disagree,
/// [[0, alpha], [1-alpha, 0]]. A local relabeling of the alpha-edge.
pub fn alpha_anticorrelated(alpha: f64) -> Result<JointDist> {
    check_unit_interval("alpha", alpha)?;
    Ok(JointDist {
        n_a: 2,
        n_b: 2,
        p: vec![0.0, alpha, 1.0 - alpha, 0.0],
    })
}

/// The equal-weight not-alpha-correlated state on n faces: zero diagonal,
/// every off-diagonal entry 1/(n(n-1)). This is the unique optimizer of the
/// subsidy game payoff.
pub fn eq_not_alpha(n: usize) -> Result<JointDist> {
    if n < 2 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n as f64,
            range: "[2, ...)",
        });
    }
    let w = 1.0 / (n * (n - 1)) as f64;
    let mut p = vec![w; n * n];
    for i in 0..n {
        p[i * n + i] = 0.0;
    }
    Ok(JointDist { n_a: n, n_b: n, p })
}

/// True iff the (square) distribution has all diagonal entries <= tol and
/// all off-diagonal entries strictly greater than tol: the two coins never
/// agree, but every disagreeing pair is possible.
pub fn is_not_alpha_correlated(j: &JointDist, tol: f64) -> Result<bool> {
    if !j.is_square() {
        return Err(Error::NotSquare {
            rows: j.n_a,
            cols: j.n_b,
        });
    }
    let n = j.n_a;
    for x in 0..n {
        for y in 0..n {
            let v = j.get(x, y);
            if x == y && v > tol {
                return Ok(false);
            }
            if x != y && v <= tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange {
            name,
            value,
            range: "[0, 1]",
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn make_joint_accepts_half_correlated() {
        let j = make_joint(&[vec![0.5, 0.0], vec![0.0, 0.5]]).unwrap();
        assert_eq!((j.n_a(), j.n_b()), (2, 2));
        assert_eq!(j.get(0, 0), 0.5);
    }

    #[test]
    fn make_joint_accepts_deterministic_vertex() {
        let j = make_joint(&[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(j.get(0, 0), 1.0);
    }

    #[test]
    fn make_joint_rejects_unnormalized() {
        let err = make_joint(&[vec![0.5, 0.6], vec![0.0, 0.0]]).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));
    }

    #[test]
    fn make_joint_rejects_negative_entry() {
        let err = make_joint(&[vec![0.5, -0.1], vec![0.3, 0.3]]).unwrap_err();
        assert!(matches!(err, Error::NegativeEntry { .. }));
    }

    #[test]
    fn make_joint_clamps_tiny_negative_drift() {
        let j = make_joint(&[vec![0.5, -1e-13], vec![0.25, 0.25]]).unwrap();
        assert_eq!(j.get(0, 1), 0.0);
    }

    #[test]
    fn marginals_of_symmetric_state_are_uniform() {
        let j = alpha_correlated(0.5).unwrap();
        let (pa, pb) = marginals(&j);
        assert_eq!(pa.entries(), &[0.5, 0.5]);
        assert_eq!(pb.entries(), &[0.5, 0.5]);
    }

    #[test]
    fn marginals_of_face_state() {
        // The 2-face state (1/3, 0, 1/3, 1/3) has skewed marginals.
        let j = make_joint(&[vec![1.0 / 3.0, 0.0], vec![1.0 / 3.0, 1.0 / 3.0]]).unwrap();
        let (pa, pb) = marginals(&j);
        assert!(close(pa.get(0), 1.0 / 3.0, 1e-15));
        assert!(close(pa.get(1), 2.0 / 3.0, 1e-15));
        assert!(close(pb.get(0), 2.0 / 3.0, 1e-15));
        assert!(close(pb.get(1), 1.0 / 3.0, 1e-15));
    }

    #[test]
    fn marginals_of_product_are_the_factors() {
        let j = make_joint(&[
            vec![0.3 * 0.2, 0.3 * 0.8],
            vec![0.7 * 0.2, 0.7 * 0.8],
        ])
        .unwrap();
        let (pa, pb) = marginals(&j);
        assert!(close(pa.get(0), 0.3, 1e-15));
        assert!(close(pb.get(0), 0.2, 1e-15));
    }

    #[test]
    fn entropy_of_uniform_bit_is_one() {
        let m = MarginalDist::new(vec![0.5, 0.5]).unwrap();
        assert_eq!(shannon_entropy(&m), 1.0);
    }

    #[test]
    fn entropy_of_deterministic_is_zero() {
        let m = MarginalDist::new(vec![1.0, 0.0]).unwrap();
        assert_eq!(shannon_entropy(&m), 0.0);
    }

    #[test]
    fn entropy_of_third_two_thirds() {
        let m = MarginalDist::new(vec![1.0 / 3.0, 2.0 / 3.0]).unwrap();
        assert!(close(shannon_entropy(&m), 0.9182958340544896, 1e-15));
    }

    #[test]
    fn mutual_information_of_perfect_correlation_is_one_bit() {
        let j = alpha_correlated(0.5).unwrap();
        assert!(close(mutual_information(&j), 1.0, 1e-12));
    }

    #[test]
    fn mutual_information_of_product_is_zero() {
        let j = make_joint(&[
            vec![0.3 * 0.2, 0.3 * 0.8],
            vec![0.7 * 0.2, 0.7 * 0.8],
        ])
        .unwrap();
        assert_eq!(mutual_information(&j), 0.0);
    }

    #[test]
    fn mutual_information_of_eq_not_alpha_three() {
        // H(X) = H(Y) = log2 3, H(X,Y) = log2 6, difference log2(3/2).
        let j = eq_not_alpha(3).unwrap();
        assert!(close(mutual_information(&j), 0.5849625007211562, 1e-12));
    }

    #[test]
    fn mutual_information_matches_binary_entropy_on_alpha_edge() {
        for k in 0..=100 {
            let alpha = k as f64 / 100.0;
            let j = alpha_correlated(alpha).unwrap();
            let h = binary_entropy(alpha);
            assert!(
                close(mutual_information(&j), h, 1e-12),
                "alpha = {alpha}"
            );
        }
    }

    #[test]
    fn mutual_information_invariant_under_local_relabeling() {
        let j = make_joint(&[
            vec![0.1, 0.2, 0.05],
            vec![0.15, 0.1, 0.1],
            vec![0.05, 0.2, 0.05],
        ])
        .unwrap();
        // Swap Alice's rows 0 and 2, and Bob's columns 1 and 2.
        let permuted = make_joint(&[
            vec![0.05, 0.05, 0.2],
            vec![0.15, 0.1, 0.1],
            vec![0.1, 0.05, 0.2],
        ])
        .unwrap();
        assert!(close(
            mutual_information(&j),
            mutual_information(&permuted),
            1e-12
        ));
    }

    #[test]
    fn is_product_detects_products_and_correlations() {
        let product = make_joint(&[
            vec![0.3 * 0.2, 0.3 * 0.8],
            vec![0.7 * 0.2, 0.7 * 0.8],
        ])
        .unwrap();
        assert!(is_product(&product, 1e-9));
        assert!(!is_product(&alpha_correlated(0.5).unwrap(), 1e-9));
        // Deterministic vertices are free states.
        let vertex = make_joint(&[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert!(is_product(&vertex, 1e-9));
    }

    #[test]
    fn alpha_correlated_examples() {
        let half = alpha_correlated(0.5).unwrap();
        assert_eq!(half.entries(), &[0.5, 0.0, 0.0, 0.5]);
        let vertex = alpha_correlated(1.0).unwrap();
        assert!(is_product(&vertex, 1e-9));
        let third = alpha_correlated(1.0 / 3.0).unwrap();
        assert!(close(third.get(1, 1), 2.0 / 3.0, 1e-15));
        assert!(alpha_correlated(1.5).is_err());
        assert!(alpha_correlated(-0.1).is_err());
    }

    #[test]
    fn anticorrelated_is_a_relabeled_edge_state() {
        let anti = alpha_anticorrelated(0.5).unwrap();
        assert_eq!(anti.entries(), &[0.0, 0.5, 0.5, 0.0]);
        assert!(is_product(&alpha_anticorrelated(1.0).unwrap(), 1e-9));
        // Local permutations keep the monotone fixed.
        assert!(close(
            mutual_information(&alpha_anticorrelated(0.3).unwrap()),
            mutual_information(&alpha_correlated(0.3).unwrap()),
            1e-12
        ));
    }

    #[test]
    fn eq_not_alpha_shapes_and_weights() {
        let three = eq_not_alpha(3).unwrap();
        assert!(close(three.get(0, 1), 1.0 / 6.0, 1e-15));
        assert_eq!(three.get(1, 1), 0.0);
        let four = eq_not_alpha(4).unwrap();
        assert!(close(four.get(2, 0), 1.0 / 12.0, 1e-15));
        let two = eq_not_alpha(2).unwrap();
        assert_eq!(two.entries(), alpha_anticorrelated(0.5).unwrap().entries());
        assert!(eq_not_alpha(1).is_err());
    }

    #[test]
    fn not_alpha_detection() {
        assert!(is_not_alpha_correlated(&eq_not_alpha(3).unwrap(), 1e-9).unwrap());
        assert!(!is_not_alpha_correlated(&alpha_correlated(0.5).unwrap(), 1e-9).unwrap());
        for n in 2..=8 {
            assert!(is_not_alpha_correlated(&eq_not_alpha(n).unwrap(), 1e-9).unwrap());
        }
        let rect = make_joint(&[vec![0.2, 0.3, 0.5]]).unwrap();
        assert!(matches!(
            is_not_alpha_correlated(&rect, 1e-9),
            Err(Error::NotSquare { .. })
        ));
    }
}
