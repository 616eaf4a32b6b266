//! CSV serialization for every domain type the command-line front end
//! emits, plus parsers for the classical objects so tables survive a
//! round trip.
//!
//! All numbers print in shortest-round-trip decimal form (at most 17
//! significant digits), which makes output byte-stable across runs and
//! lossless to reload.

use crate::channel::{ChannelFamily, CurvePoint, ThresholdResult};
use crate::coinspace::{make_joint, JointDist};
use crate::freeops::{make_stochastic, Lemma1Decomposition, StochasticMatrix};
use crate::game::PayoffReport;
use crate::quoin::{Povm, QuoinState};
use crate::{Error, Result};

/// Shortest decimal string that parses back to exactly `x`.
/// The standard float formatter already guarantees this.
pub fn fmt_f64(x: f64) -> String {
    format!("{x}")
}

fn parse_field<T: std::str::FromStr>(field: &str, line_no: usize, what: &str) -> Result<T> {
    field.trim().parse().map_err(|_| Error::CsvParse {
        context: format!("line {line_no}: cannot read {what} from {field:?}"),
    })
}

/// Serializes a joint distribution as `i,j,p` rows in row-major order.
pub fn joint_to_csv(j: &JointDist) -> String {
    let mut out = String::from("i,j,p\n");
    for i in 0..j.n_a() {
        for k in 0..j.n_b() {
            out.push_str(&format!("{i},{k},{}\n", fmt_f64(j.get(i, k))));
        }
    }
    out
}

/// Reads back a joint distribution written by [`joint_to_csv`]. Rows may
/// arrive in any order but must cover a full rectangle exactly once.
pub fn joint_from_csv(text: &str) -> Result<JointDist> {
    let cells = parse_indexed_cells(text, "i,j,p")?;
    let rows = cells_to_rows(cells)?;
    make_joint(&rows)
}

/// Serializes a stochastic matrix as `row,col,value` rows.
pub fn stochastic_to_csv(s: &StochasticMatrix) -> String {
    let mut out = String::from("row,col,value\n");
    for r in 0..s.n_out() {
        for c in 0..s.n_in() {
            out.push_str(&format!("{r},{c},{}\n", fmt_f64(s.get(r, c))));
        }
    }
    out
}

/// Reads back a stochastic matrix written by [`stochastic_to_csv`].
pub fn stochastic_from_csv(text: &str) -> Result<StochasticMatrix> {
    let cells = parse_indexed_cells(text, "row,col,value")?;
    let rows = cells_to_rows(cells)?;
    make_stochastic(&rows)
}

fn parse_indexed_cells(text: &str, header: &str) -> Result<Vec<(usize, usize, f64)>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim() == header => {}
        other => {
            return Err(Error::CsvParse {
                context: format!("expected header {header:?}, got {:?}", other.map(|(_, l)| l)),
            })
        }
    }
    let mut cells = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::CsvParse {
                context: format!("line {line_no}: expected 3 fields, got {}", fields.len()),
            });
        }
        cells.push((
            parse_field(fields[0], line_no, "row index")?,
            parse_field(fields[1], line_no, "column index")?,
            parse_field(fields[2], line_no, "value")?,
        ));
    }
    Ok(cells)
}

fn cells_to_rows(cells: Vec<(usize, usize, f64)>) -> Result<Vec<Vec<f64>>> {
    if cells.is_empty() {
        return Err(Error::CsvParse {
            context: "no data rows".into(),
        });
    }
    let n_rows = cells.iter().map(|c| c.0).max().unwrap_or(0) + 1;
    let n_cols = cells.iter().map(|c| c.1).max().unwrap_or(0) + 1;
    if cells.len() != n_rows * n_cols {
        return Err(Error::CsvParse {
            context: format!(
                "expected {} cells for a {n_rows}x{n_cols} table, got {}",
                n_rows * n_cols,
                cells.len()
            ),
        });
    }
    let mut rows = vec![vec![f64::NAN; n_cols]; n_rows];
    for (r, c, v) in cells {
        if !rows[r][c].is_nan() {
            return Err(Error::CsvParse {
                context: format!("duplicate cell ({r}, {c})"),
            });
        }
        rows[r][c] = v;
    }
    if rows.iter().flatten().any(|v| v.is_nan()) {
        return Err(Error::CsvParse {
            context: "incomplete table".into(),
        });
    }
    Ok(rows)
}

/// Serializes a quoin state as 16 `row,col,re,im` rows.
pub fn quoin_to_csv(rho: &QuoinState) -> String {
    let mut out = String::from("row,col,re,im\n");
    for r in 0..4 {
        for c in 0..4 {
            let z = rho.matrix().get(r, c);
            out.push_str(&format!("{r},{c},{},{}\n", fmt_f64(z.re), fmt_f64(z.im)));
        }
    }
    out
}

/// Serializes a POVM as concatenated element blocks with an `element`
/// index column.
pub fn povm_to_csv(povm: &Povm) -> String {
    let mut out = String::from("element,row,col,re,im\n");
    for (k, e) in povm.elements().iter().enumerate() {
        for r in 0..2 {
            for c in 0..2 {
                let z = e.get(r, c);
                out.push_str(&format!(
                    "{k},{r},{c},{},{}\n",
                    fmt_f64(z.re),
                    fmt_f64(z.im)
                ));
            }
        }
    }
    out
}

/// Serializes an edge decomposition as a flat key-value table.
pub fn lemma1_to_csv(d: &Lemma1Decomposition) -> String {
    let mut out = String::from("key,value\n");
    out.push_str(&format!("alpha,{}\n", fmt_f64(d.alpha)));
    for (name, m) in [("sa", &d.s_a), ("sb", &d.s_b)] {
        for r in 0..2 {
            for c in 0..2 {
                out.push_str(&format!("{name}_{r}{c},{}\n", fmt_f64(m.get(r, c))));
            }
        }
    }
    out.push_str(&format!("residual,{}\n", fmt_f64(d.residual)));
    out
}

/// Serializes a payoff report row:
/// `n,resource,value,lower_bound,upper_bound,benchmark`.
pub fn payoff_report_to_csv(report: &PayoffReport) -> String {
    let benchmark = report.benchmark.map(fmt_f64).unwrap_or_default();
    format!(
        "n,resource,value,lower_bound,upper_bound,benchmark\n{},{},{},{},{},{benchmark}\n",
        report.n,
        report.resource_label,
        fmt_f64(report.value),
        fmt_f64(report.lower_bound),
        fmt_f64(report.upper_bound),
    )
}

/// Serializes a threshold row: `family,n,p_star,benchmark,bracket_width`.
pub fn threshold_to_csv(family: ChannelFamily, n: usize, t: &ThresholdResult) -> String {
    format!(
        "family,n,p_star,benchmark,bracket_width\n{family},{n},{},{},{}\n",
        fmt_f64(t.p_star),
        fmt_f64(t.classical_benchmark),
        fmt_f64(t.bracket_width),
    )
}

/// Serializes curve rows: `p,payoff,classical_benchmark,capacity` with the
/// capacity column left empty where no closed form exists.
pub fn curve_to_csv(rows: &[CurvePoint]) -> String {
    let mut out = String::from("p,payoff,classical_benchmark,capacity\n");
    for row in rows {
        let capacity = row.capacity.map(fmt_f64).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{capacity}\n",
            fmt_f64(row.p),
            fmt_f64(row.payoff),
            fmt_f64(row.classical_benchmark),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coinspace::alpha_correlated;
    use crate::quoin::{singlet, trine_povm};
    use crate::rng::XorShift64Star;

    #[test]
    fn formatting_is_shortest_round_trip() {
        assert_eq!(fmt_f64(0.1), "0.1");
        assert_eq!(fmt_f64(0.5), "0.5");
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(1.0 / 3.0), "0.3333333333333333");
        for x in [
            1.0 / 3.0,
            2.0 / 27.0,
            0.045565997075035035,
            -1.0 / 7.0,
            1e-300,
            6.02e23,
        ] {
            let back: f64 = fmt_f64(x).parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{x} did not round-trip");
        }
    }

    #[test]
    fn joint_csv_has_the_documented_shape() {
        let j = alpha_correlated(0.5).unwrap();
        assert_eq!(joint_to_csv(&j), "i,j,p\n0,0,0.5\n0,1,0\n1,0,0\n1,1,0.5\n");
    }

    #[test]
    fn joint_csv_round_trips_bitwise() {
        let mut rng = XorShift64Star::new(404);
        let mut flat = Vec::new();
        rng.fill_simplex(12, &mut flat);
        let rows: Vec<Vec<f64>> = flat.chunks(4).map(<[f64]>::to_vec).collect();
        let j = make_joint(&rows).unwrap();
        let back = joint_from_csv(&joint_to_csv(&j)).unwrap();
        assert_eq!(j.n_a(), back.n_a());
        assert_eq!(j.n_b(), back.n_b());
        for (a, b) in j.entries().iter().zip(back.entries()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn stochastic_csv_round_trips() {
        let s = make_stochastic(&[vec![0.25, 1.0 / 3.0], vec![0.75, 2.0 / 3.0]]).unwrap();
        let text = stochastic_to_csv(&s);
        assert!(text.starts_with("row,col,value\n"));
        let back = stochastic_from_csv(&text).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(joint_from_csv("p,q\n0,0,1\n").is_err());
        assert!(joint_from_csv("i,j,p\n0,0,0.5\n0,1,0.5\n1,0,0\n").is_err()); // hole
        assert!(joint_from_csv("i,j,p\n0,0,abc\n").is_err());
        assert!(stochastic_from_csv("row,col,value\n0,0,1\n0,0,1\n").is_err()); // dup
    }

    #[test]
    fn quoin_csv_lists_all_sixteen_entries() {
        let text = quoin_to_csv(&singlet());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 17);
        assert_eq!(lines[0], "row,col,re,im");
        assert_eq!(lines[1 + 4 + 1], "1,1,0.5,0"); // row 1, col 1
        assert_eq!(lines[1 + 4 + 2], "1,2,-0.5,0");
    }

    #[test]
    fn povm_csv_indexes_elements() {
        let text = povm_to_csv(&trine_povm());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 1 + 3 * 4);
        assert!(lines[1].starts_with("0,0,0,"));
        assert!(lines[12].starts_with("2,1,1,"));
    }

    #[test]
    fn lemma1_csv_is_flat_key_value() {
        let d = Lemma1Decomposition {
            alpha: 0.5,
            s_a: StochasticMatrix::identity(2),
            s_b: StochasticMatrix::identity(2),
            residual: 0.0,
        };
        let text = lemma1_to_csv(&d);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "key,value");
        assert_eq!(lines[1], "alpha,0.5");
        assert_eq!(lines[2], "sa_00,1");
        assert_eq!(lines[10].split(',').next(), Some("residual"));
        assert_eq!(lines.len(), 11);
    }

    #[test]
    fn report_and_threshold_headers_match_the_interface() {
        let report = PayoffReport {
            n: 3,
            value: 1.0 / 6.0,
            resource_label: "singlet+trine".into(),
            strategy_blob: String::new(),
            lower_bound: 1.0 / 9.0,
            upper_bound: 1.0 / 6.0,
            benchmark: Some(0.125),
        };
        let text = payoff_report_to_csv(&report);
        assert!(text.starts_with("n,resource,value,lower_bound,upper_bound,benchmark\n"));
        assert!(text.contains(",0.125\n"));

        let no_benchmark = PayoffReport {
            benchmark: None,
            ..report
        };
        assert!(payoff_report_to_csv(&no_benchmark).trim_end().ends_with(','));

        let t = ThresholdResult {
            p_star: 0.75,
            classical_benchmark: 0.125,
            bracket_width: 1e-6,
        };
        let text = threshold_to_csv(ChannelFamily::PhaseFlip, 3, &t);
        assert_eq!(
            text,
            "family,n,p_star,benchmark,bracket_width\nphaseflip,3,0.75,0.125,0.000001\n"
        );
    }

    #[test]
    fn curve_csv_leaves_capacity_empty_without_a_formula() {
        let rows = vec![
            CurvePoint {
                p: 0.0,
                payoff: 1.0 / 36.0,
                classical_benchmark: 1.0 / 15.0,
                capacity: None,
            },
            CurvePoint {
                p: 1.0,
                payoff: 1.0 / 12.0,
                classical_benchmark: 1.0 / 15.0,
                capacity: Some(1.0),
            },
        ];
        let text = curve_to_csv(&rows);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "p,payoff,classical_benchmark,capacity");
        assert!(lines[1].ends_with(','));
        assert!(lines[2].ends_with(",1"));
    }
}
