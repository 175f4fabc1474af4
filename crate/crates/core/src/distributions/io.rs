//! Plain-text file formats.
//!
//! * Distribution file: first line `m <int>`, then one `<bitstring> <prob>`
//!   line per outcome with positive mass. Omitted outcomes have zero mass.
//! * Sample file: one bitstring per line.
//! * Marginals file: a single line of `m` whitespace-separated reals.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::path::Path;

use super::{EmpiricalSample, Enumerable, SparseJoint};
use crate::error::{Error, Result};
use crate::format::sig12;
use crate::label::LabelVector;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_distribution(text: &str) -> Result<SparseJoint> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let m = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["m", value] => value
            .parse::<usize>()
            .map_err(|e| parse_err(hline, format!("bad label count: {e}")))?,
        _ => return Err(parse_err(hline, "expected header `m <int>`")),
    };
    if m == 0 {
        return Err(parse_err(hline, "label count must be positive"));
    }
    let mut entries = Vec::new();
    for (ln, line) in lines {
        let fields: Vec<_> = line.split_whitespace().collect();
        let [bits, prob] = fields.as_slice() else {
            return Err(parse_err(ln, "expected `<bitstring> <prob>`"));
        };
        let y = LabelVector::parse(bits).map_err(|e| parse_err(ln, e.to_string()))?;
        if y.m() != m {
            return Err(parse_err(
                ln,
                format!("bitstring has {} labels, header says {m}", y.m()),
            ));
        }
        let p: f64 = prob
            .parse()
            .map_err(|e| parse_err(ln, format!("bad probability: {e}")))?;
        entries.push((y, p));
    }
    SparseJoint::new(m, entries)
}

pub fn write_distribution(dist: &dyn Enumerable) -> String {
    let mut out = format!("m {}\n", dist.m());
    dist.for_each_outcome(&mut |y, p| out.push_str(&format!("{y} {}\n", sig12(p))));
    out
}

pub fn parse_samples(text: &str) -> Result<EmpiricalSample> {
    let mut vectors = Vec::new();
    let mut m = None;
    for (ln, line) in content_lines(text) {
        let y = LabelVector::parse(line).map_err(|e| parse_err(ln, e.to_string()))?;
        match m {
            None => m = Some(y.m()),
            Some(m) if m != y.m() => {
                return Err(parse_err(
                    ln,
                    format!("bitstring has {} labels, expected {m}", y.m()),
                ))
            }
            _ => {}
        }
        vectors.push(y);
    }
    let m = m.ok_or(Error::EmptySample)?;
    EmpiricalSample::from_vectors(m, vectors)
}

pub fn write_samples(sample: &EmpiricalSample) -> String {
    sample
        .iter_observations()
        .map(|y| format!("{y}\n"))
        .collect()
}

pub fn parse_marginals(text: &str) -> Result<Vec<f64>> {
    let mut lines = content_lines(text);
    let (ln, line) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty marginals file"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_err(extra, "marginals must be on a single line"));
    }
    let p = line
        .split_whitespace()
        .map(|tok| {
            let v: f64 = tok
                .parse()
                .map_err(|e| parse_err(ln, format!("bad marginal {tok:?}: {e}")))?;
            if (0.0..=1.0).contains(&v) {
                Ok(v)
            } else {
                Err(parse_err(ln, format!("marginal {v} outside [0, 1]")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if p.is_empty() {
        return Err(parse_err(ln, "no marginals given"));
    }
    Ok(p)
}

pub fn write_marginals(p: &[f64]) -> String {
    let fields: Vec<_> = p.iter().map(|&x| sig12(x)).collect();
    format!("{}\n", fields.join(" "))
}

pub fn read_distribution(path: impl AsRef<Path>) -> Result<SparseJoint> {
    parse_distribution(&std::fs::read_to_string(path)?)
}

pub fn read_samples(path: impl AsRef<Path>) -> Result<EmpiricalSample> {
    parse_samples(&std::fs::read_to_string(path)?)
}

pub fn read_marginals(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    parse_marginals(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn distribution_round_trip() {
        let d = fixtures::twin_a();
        let text = write_distribution(&d);
        assert!(text.starts_with("m 4\n"));
        assert_eq!(parse_distribution(&text).unwrap(), d);
    }

    #[test]
    fn distribution_errors_carry_line_numbers() {
        let err = parse_distribution("m 3\n101 0.5\n11 0.5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(parse_distribution("labels 3\n").is_err());
        assert!(parse_distribution("m 2\n10 x\n").is_err());
        assert!(matches!(
            parse_distribution("m 2\n10 0.5\n01 0.2\n"),
            Err(Error::InvalidDistribution(_))
        ));
    }

    #[test]
    fn samples_and_marginals() {
        let s = parse_samples("# draws\n110\n110\n\n011\n").unwrap();
        assert_eq!(s.n(), 3);
        assert_eq!(parse_samples(&write_samples(&s)).unwrap(), s);
        assert!(parse_samples("10\n101\n").is_err());

        assert_eq!(parse_marginals("0.5 0.5\n").unwrap(), vec![0.5, 0.5]);
        assert!(parse_marginals("0.5 1.5\n").is_err());
        assert!(parse_marginals("0.5\n0.5\n").is_err());
        assert_eq!(
            parse_marginals(&write_marginals(&[0.25, 1.0])).unwrap(),
            vec![0.25, 1.0]
        );
    }
}
