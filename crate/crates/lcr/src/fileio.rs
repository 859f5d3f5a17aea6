//! Point-set text format and JSON reports.
//!
//! The text format is line oriented: one point per line as `x y`, where each
//! coordinate is a base-10 integer or a `num/den` rational. `#` starts a
//! comment, blank lines are ignored, and an optional first non-comment line
//! `n <count>` declares the point count as a redundancy check. Serialization
//! is exact, so `parse(serialize(P)) = P` bit for bit.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::crossing::{crossing_profile, CrossingProfile};
use crate::formula::lcr_formula;
use crate::geom::{first_degeneracy, PointSet, Rational};
use crate::separation::{LowerBoundCertificate, SeparationWitness};
use crate::{Error, Result};

fn parse_rational(token: &str, line: usize) -> Result<Rational> {
    let bad = |msg: &str| Error::Parse {
        line,
        msg: format!("invalid coordinate {token:?}: {msg}"),
    };
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let numer = BigInt::from_str(num).map_err(|_| bad("bad numerator"))?;
    let denom = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| bad("bad denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Render a rational exactly, omitting the denominator when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the text format into a point set and validate general position.
///
/// Degeneracies are hard errors: a duplicate pair or collinear triple is
/// reported with the offending point ids.
pub fn parse_pointset(text: &str) -> Result<PointSet> {
    let mut coords: Vec<(Rational, Rational)> = Vec::new();
    let mut declared: Option<usize> = None;
    let mut first_data_line = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if first_data_line && fields.len() == 2 && fields[0] == "n" {
            declared = Some(fields[1].parse().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid count {:?} in n header", fields[1]),
            })?);
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected `x y`, got {} field(s)", fields.len()),
            });
        }
        let x = parse_rational(fields[0], line)?;
        let y = parse_rational(fields[1], line)?;
        coords.push((x, y));
    }
    if let Some(n) = declared {
        if n != coords.len() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header declares {n} points but file has {}", coords.len()),
            });
        }
    }
    let ps = PointSet::from_coords(coords);
    match first_degeneracy(&ps) {
        None => Ok(ps),
        Some(ids) if ids.len() == 2 => Err(Error::DuplicatePoint(ids[0], ids[1])),
        Some(ids) => Err(Error::CollinearTriple(ids[0], ids[1], ids[2])),
    }
}

/// Serialize a point set exactly, with an `n <count>` header.
pub fn serialize_pointset(ps: &PointSet) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", ps.len()).unwrap();
    for p in ps.iter() {
        writeln!(out, "{} {}", format_rational(&p.x), format_rational(&p.y)).unwrap();
    }
    out
}

/// JSON analysis report; `lcr` is always recomputed from the points at hand.
#[derive(Debug, serde::Serialize)]
pub struct Report {
    pub n: usize,
    pub lcr: usize,
    pub total_crossings: usize,
    pub formula_value: u64,
    pub meets_formula: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SeparationWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<LowerBoundCertificate>,
}

impl Report {
    /// Build a report from a profile already computed for `ps`.
    pub fn new(ps: &PointSet, profile: &CrossingProfile, with_profile: bool) -> Report {
        let lcr = profile.lcr();
        let formula_value = lcr_formula(ps.len() as u64).value;
        Report {
            n: ps.len(),
            lcr,
            total_crossings: profile.total(),
            formula_value,
            meets_formula: lcr as u64 == formula_value,
            profile: with_profile.then(|| profile.to_json()),
            witness: None,
            certificate: None,
        }
    }

    /// Build a report straight from a point set, recomputing the profile.
    pub fn analyze(ps: &PointSet, with_profile: bool) -> Report {
        Report::new(ps, &crossing_profile(ps), with_profile)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_plain_integers() {
        let ps = parse_pointset("0 0\n1 0\n0 1\n").unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(ps.point(1).unwrap().x, rat(1, 1));
    }

    #[test]
    fn parses_exact_rationals() {
        let ps = parse_pointset("1/2 3\n2 5/7\n0 0\n").unwrap();
        assert_eq!(ps.point(0).unwrap().x, rat(1, 2));
        assert_eq!(ps.point(1).unwrap().y, rat(5, 7));
    }

    #[test]
    fn collinear_input_names_the_triple() {
        let err = parse_pointset("0 0\n1 1\n2 2\n").unwrap_err();
        assert!(matches!(err, Error::CollinearTriple(0, 1, 2)));
    }

    #[test]
    fn duplicate_input_names_the_pair() {
        let err = parse_pointset("0 0\n5 7\n5 7\n").unwrap_err();
        assert!(matches!(err, Error::DuplicatePoint(1, 2)));
    }

    #[test]
    fn comments_blanks_and_header_are_accepted() {
        let text = "# a triangle\nn 3\n\n0 0 # origin\n7 1\n3 9\n";
        assert_eq!(parse_pointset(text).unwrap().len(), 3);
    }

    #[test]
    fn header_count_mismatch_is_an_error() {
        assert!(parse_pointset("n 4\n0 0\n1 0\n0 1\n").is_err());
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_pointset("0 0\n1 0\nbogus\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(parse_pointset("1/0 2\n0 0\n1 5\n").is_err());
    }

    #[test]
    fn round_trip_is_identity() {
        let text = "n 4\n1/2 -3\n-7/5 0\n4 9/11\n100000000000000000001 2\n";
        let ps = parse_pointset(text).unwrap();
        assert_eq!(serialize_pointset(&ps), text);
        let again = parse_pointset(&serialize_pointset(&ps)).unwrap();
        for (a, b) in ps.iter().zip(again.iter()) {
            assert_eq!((&a.x, &a.y), (&b.x, &b.y));
        }
    }

    #[test]
    fn report_recomputes_lcr() {
        // Convex position: both diagonals cross, so lcr is 1 while the optimum
        // for four points (triangular hull) is 0.
        let convex = parse_pointset("0 0\n9 1\n10 8\n1 7\n").unwrap();
        let report = Report::analyze(&convex, true);
        assert_eq!(report.n, 4);
        assert_eq!(report.lcr, 1);
        assert_eq!(report.total_crossings, 1);
        assert!(!report.meets_formula);
        assert!(report.profile.is_some());

        let optimal = parse_pointset("0 0\n10 0\n5 9\n5 3\n").unwrap();
        let report = Report::analyze(&optimal, false);
        assert_eq!(report.lcr, 0);
        assert!(report.meets_formula);
        assert!(report.profile.is_none());
    }
}
