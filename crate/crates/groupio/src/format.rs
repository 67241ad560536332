//! The permutation group file format.
//!
//! ```text
//! degree 11
//! name M11
//! order 7920
//! 2 10 1 ...    (one permutation per line, 1-based images)
//! ```
//!
//! Header lines: `degree n` (required, first), optional `name ...`,
//! optional `order m` (closure must match it exactly on load), and
//! optional `format cycles`, after which body lines are cycle notation
//! like `(1,2)(3,4,5)` instead of image rows.

use permcore::Perm;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq, Clone)]
pub enum FormatError {
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("missing degree header")]
    MissingDegree,
    #[error("line {0}: image {1} out of range 1..={2}")]
    ImageOutOfRange(usize, usize, usize),
    #[error("line {0}: repeated image {1}")]
    RepeatedImage(usize, usize),
    #[error("declared order {declared} does not match closure order {actual}")]
    OrderMismatch { declared: u64, actual: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub name: Option<String>,
    pub expected_order: Option<u64>,
    pub generators: Vec<Perm>,
}

pub fn parse_group_file(text: &str) -> Result<GroupFile, FormatError> {
    let mut degree: Option<usize> = None;
    let mut name = None;
    let mut expected_order = None;
    let mut cycles_format = false;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree ") {
            degree = Some(rest.trim().parse().map_err(|_| {
                FormatError::Malformed(lineno, "unreadable degree".into())
            })?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("name ") {
            name = Some(rest.trim().to_string());
            continue;
        }
        if let Some(rest) = line.strip_prefix("order ") {
            expected_order = Some(rest.trim().parse().map_err(|_| {
                FormatError::Malformed(lineno, "unreadable order".into())
            })?);
            continue;
        }
        if line == "format cycles" {
            cycles_format = true;
            continue;
        }
        let n = degree.ok_or(FormatError::MissingDegree)?;
        let perm = if cycles_format {
            parse_cycles_line(line, n, lineno)?
        } else {
            parse_images_line(line, n, lineno)?
        };
        generators.push(perm);
    }
    Ok(GroupFile {
        degree: degree.ok_or(FormatError::MissingDegree)?,
        name,
        expected_order,
        generators,
    })
}

fn parse_images_line(line: &str, n: usize, lineno: usize) -> Result<Perm, FormatError> {
    let mut images = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for tok in line.split_whitespace() {
        let img: usize = tok
            .parse()
            .map_err(|_| FormatError::Malformed(lineno, format!("bad token {tok:?}")))?;
        if img < 1 || img > n {
            return Err(FormatError::ImageOutOfRange(lineno, img, n));
        }
        if seen[img - 1] {
            return Err(FormatError::RepeatedImage(lineno, img));
        }
        seen[img - 1] = true;
        images.push((img - 1) as u16);
    }
    if images.len() != n {
        return Err(FormatError::Malformed(
            lineno,
            format!("expected {n} images, found {}", images.len()),
        ));
    }
    Perm::from_images(images).map_err(|e| FormatError::Malformed(lineno, e.to_string()))
}

fn parse_cycles_line(line: &str, n: usize, lineno: usize) -> Result<Perm, FormatError> {
    if line == "()" {
        return Ok(Perm::identity(n));
    }
    let mut cycles: Vec<Vec<u16>> = Vec::new();
    for chunk in line.split(')') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let inner = chunk
            .strip_prefix('(')
            .ok_or_else(|| FormatError::Malformed(lineno, "unbalanced parentheses".into()))?;
        let mut cyc = Vec::new();
        for tok in inner.split(',') {
            let pt: usize = tok
                .trim()
                .parse()
                .map_err(|_| FormatError::Malformed(lineno, format!("bad point {tok:?}")))?;
            if pt < 1 || pt > n {
                return Err(FormatError::ImageOutOfRange(lineno, pt, n));
            }
            cyc.push((pt - 1) as u16);
        }
        cycles.push(cyc);
    }
    Perm::from_cycles(n, &cycles).map_err(|e| FormatError::Malformed(lineno, e.to_string()))
}

/// Canonical serialization: image rows, 1-based.
pub fn serialize_group(file: &GroupFile) -> String {
    let mut out = String::new();
    out.push_str(&format!("degree {}\n", file.degree));
    if let Some(name) = &file.name {
        out.push_str(&format!("name {name}\n"));
    }
    if let Some(order) = file.expected_order {
        out.push_str(&format!("order {order}\n"));
    }
    for g in &file.generators {
        let row: Vec<String> = g.images().iter().map(|&i| (i + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_from_the_two_line_example() {
        let f = parse_group_file("degree 3\n2 1 3\n2 3 1\n").unwrap();
        assert_eq!(f.degree, 3);
        assert_eq!(f.generators.len(), 2);
        let g = permcore::PermGroup::from_generators(3, f.generators, 100).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn cycle_format() {
        let f = parse_group_file("degree 5\nformat cycles\n(1,2)(3,4,5)\n").unwrap();
        assert_eq!(f.generators[0].cycle_lengths(), vec![3, 2]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_group_file("degree 3\n2 1 4\n"),
            Err(FormatError::ImageOutOfRange(2, 4, 3))
        );
        assert_eq!(
            parse_group_file("degree 3\n2 2 1\n"),
            Err(FormatError::RepeatedImage(2, 2))
        );
        assert!(matches!(
            parse_group_file("2 1 3\n"),
            Err(FormatError::MissingDegree)
        ));
    }

    #[test]
    fn roundtrip_is_identity_on_canonical_files() {
        let text = "degree 4\nname V4ish\norder 4\n2 1 4 3\n3 4 1 2\n";
        let f = parse_group_file(text).unwrap();
        assert_eq!(serialize_group(&f), text);
        let f2 = parse_group_file(&serialize_group(&f)).unwrap();
        assert_eq!(f, f2);
    }
}
