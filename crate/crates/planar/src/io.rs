//! Plain-text formats for number sets, points and lines.
//!
//! All formats are line oriented; `#` starts a comment and blank lines are
//! skipped. A `system dual` or `system double` directive fixes the number
//! system; it is required whenever entries do not carry their own unit.
//!
//! * set files: one number per line, e.g. `3/2-1e` or `4+2j`
//! * point files: `x y` as two numbers, or `x_re x_im y_re y_im`
//! * line files: `slope a_re a_im b_re b_im`, `vert b_re b_im`, or
//!   `gen a_re a_im b_re b_im c_re c_im`

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use planar_core::geometry::{Line2, LineForm, Point2};
use planar_core::rational::parse_rational;
use planar_core::{NumberSet, PlanarNumber, System};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Empty(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn parse_err(line: usize, message: impl ToString) -> FormatError {
    FormatError::Parse { line, message: message.to_string() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn directive(body: &str, line: usize) -> Result<Option<System>, FormatError> {
    let mut words = body.split_whitespace();
    if words.next() != Some("system") {
        return Ok(None);
    }
    let name = words.next().ok_or_else(|| parse_err(line, "system directive needs a name"))?;
    name.parse::<System>().map(Some).map_err(|e| parse_err(line, e))
}

pub fn read_text(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), FormatError> {
    fs::write(path, text).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn parse_set(text: &str) -> Result<NumberSet, FormatError> {
    let mut system: Option<System> = None;
    let mut numbers = Vec::new();
    for (line, body) in content_lines(text) {
        if let Some(s) = directive(body, line)? {
            system = Some(s);
            continue;
        }
        let x = PlanarNumber::parse(body, system).map_err(|e| parse_err(line, e))?;
        match system {
            Some(s) if s != x.system() => {
                return Err(parse_err(line, format!("{x} is a {} number in a {s} set", x.system())));
            }
            _ => system = Some(x.system()),
        }
        numbers.push(x);
    }
    let system = system.ok_or_else(|| FormatError::Empty("set file has no entries".into()))?;
    if numbers.is_empty() {
        return Err(FormatError::Empty("set file has no entries".into()));
    }
    NumberSet::new(system, numbers).map_err(|e| parse_err(0, e))
}

pub fn render_set(set: &NumberSet, header: &str) -> String {
    let mut out = String::new();
    for line in header.lines() {
        let _ = writeln!(out, "# {line}");
    }
    let _ = writeln!(out, "system {}", set.system());
    for x in set {
        let _ = writeln!(out, "{x}");
    }
    out
}

pub fn read_set(path: &Path) -> Result<NumberSet, FormatError> {
    parse_set(&read_text(path)?)
}

fn rationals<const N: usize>(fields: &[&str], line: usize) -> Result<[planar_core::Rational; N], FormatError> {
    if fields.len() != N {
        return Err(parse_err(line, format!("expected {N} numbers, found {}", fields.len())));
    }
    let mut out = Vec::with_capacity(N);
    for f in fields {
        out.push(parse_rational(f).map_err(|e| parse_err(line, e))?);
    }
    Ok(out.try_into().expect("length checked"))
}

fn need_system(system: Option<System>, line: usize) -> Result<System, FormatError> {
    system.ok_or_else(|| parse_err(line, "missing `system dual|double` directive"))
}

pub fn parse_points(text: &str) -> Result<Vec<Point2>, FormatError> {
    let mut system = None;
    let mut points = Vec::new();
    for (line, body) in content_lines(text) {
        if let Some(s) = directive(body, line)? {
            system = Some(s);
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let point = match fields.len() {
            2 => {
                let x = PlanarNumber::parse(fields[0], system).map_err(|e| parse_err(line, e))?;
                let y = PlanarNumber::parse(fields[1], system.or(Some(x.system()))).map_err(|e| parse_err(line, e))?;
                Point2::new(x, y).map_err(|e| parse_err(line, e))?
            }
            4 => {
                let s = need_system(system, line)?;
                let [a, b, c, d] = rationals::<4>(&fields, line)?;
                Point2::new(PlanarNumber::new(s, a, b), PlanarNumber::new(s, c, d)).map_err(|e| parse_err(line, e))?
            }
            n => return Err(parse_err(line, format!("expected 2 or 4 fields, found {n}"))),
        };
        if let Some(first) = points.first().map(Point2::system) {
            if first != point.system() {
                return Err(parse_err(line, "points from different systems"));
            }
        }
        points.push(point);
    }
    Ok(points)
}

pub fn render_points(points: &[Point2]) -> String {
    let mut out = String::new();
    if let Some(p) = points.first() {
        let _ = writeln!(out, "system {}", p.system());
    }
    for p in points {
        let _ = writeln!(out, "{} {}", p.x(), p.y());
    }
    out
}

pub fn parse_lines(text: &str) -> Result<Vec<Line2>, FormatError> {
    let mut system = None;
    let mut lines = Vec::new();
    for (line, body) in content_lines(text) {
        if let Some(s) = directive(body, line)? {
            system = Some(s);
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let s = need_system(system, line)?;
        let num = |re: &planar_core::Rational, im: &planar_core::Rational| PlanarNumber::new(s, re.clone(), im.clone());
        let parsed = match fields[0] {
            "slope" => {
                let [a1, a2, b1, b2] = rationals::<4>(&fields[1..], line)?;
                Line2::slope(num(&a1, &a2), num(&b1, &b2)).map_err(|e| parse_err(line, e))?
            }
            "vert" => {
                let [b1, b2] = rationals::<2>(&fields[1..], line)?;
                Line2::vertical(num(&b1, &b2))
            }
            "gen" => {
                let [a1, a2, b1, b2, c1, c2] = rationals::<6>(&fields[1..], line)?;
                Line2::general(num(&a1, &a2), num(&b1, &b2), num(&c1, &c2)).map_err(|e| parse_err(line, e))?
            }
            other => return Err(parse_err(line, format!("unknown line kind `{other}`"))),
        };
        lines.push(parsed);
    }
    Ok(lines)
}

pub fn render_lines(lines: &[Line2]) -> String {
    let mut out = String::new();
    if let Some(l) = lines.first() {
        let _ = writeln!(out, "system {}", l.system());
    }
    for l in lines {
        let _ = match l.form() {
            LineForm::Slope { a, b } => writeln!(out, "slope {} {} {} {}", a.re(), a.im(), b.re(), b.im()),
            LineForm::Vertical { b } => writeln!(out, "vert {} {}", b.re(), b.im()),
            LineForm::General { a, b, c } => {
                writeln!(out, "gen {} {} {} {} {} {}", a.re(), a.im(), b.re(), b.im(), c.re(), c.im())
            }
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use planar_core::sets::unit_real_dual;

    #[test]
    fn set_round_trip() {
        let a = unit_real_dual(5);
        assert_eq!(parse_set(&render_set(&a, "unit-real-dual n=5")).unwrap(), a);
    }

    #[test]
    fn bare_reals_need_a_system() {
        assert!(parse_set("1\n2\n").is_err());
        assert_eq!(parse_set("system double\n1\n2 # two\n").unwrap().len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_set("# header\n1+1e\n\nbogus\n").unwrap_err();
        assert!(err.to_string().starts_with("line 4:"), "{err}");
        let err = parse_set("1+1e\n1+1j\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"), "{err}");
    }

    #[test]
    fn empty_set_file() {
        assert!(matches!(parse_set("# nothing\n"), Err(FormatError::Empty(_))));
    }

    #[test]
    fn line_and_point_round_trip() {
        let text = "system dual\nslope 1 2 3/2 -1\nvert 2 0\ngen 0 1 0 2 1 0\n";
        let lines = parse_lines(text).unwrap();
        assert_eq!(lines.len(), 3);
        assert_eq!(parse_lines(&render_lines(&lines)).unwrap(), lines);
        let points = parse_points("system double\n1+2j 3\n1 2 3 4\n").unwrap();
        assert_eq!(points.len(), 2);
        assert_eq!(parse_points(&render_points(&points)).unwrap(), points);
        assert!(parse_lines("slope 1 2 3 4\n").is_err());
    }
}
