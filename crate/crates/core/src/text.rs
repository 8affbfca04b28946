//! Text forms shared by the CLI and the test fixtures.
//!
//! A class is written `[inf,sup]` when it is a positive class, `point a` when
//! both coordinates agree, and `dual[a,b]` for a negative class: `dual[a,b]`
//! is the class `(0,[b,a])`, whose coordinates are `(-b, -a)`. An algebra
//! element is written `(x1,x2,x3,x4)`.

use crate::algebra4::A4;
use crate::class::GClass;
use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

/// Shortest round-trip decimal form, with `-0` printed as `0`.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

/// Parses a finite real; scientific notation is accepted.
pub fn parse_num(token: &str) -> Result<f64> {
    let t = token.trim();
    let looks_numeric = t
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E'));
    if !looks_numeric || t.is_empty() {
        return Err(Error::parse(t, "expected a real number"));
    }
    match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(Error::parse(t, "number is not finite")),
        Err(_) => Err(Error::parse(t, "expected a real number")),
    }
}

pub fn render_class(c: GClass, tol: f64) -> String {
    let (inf, sup) = (c.inf(), c.sup());
    if (inf - sup).abs() <= tol {
        format!("point {}", fmt_num(inf))
    } else if inf < sup {
        format!("[{},{}]", fmt_num(inf), fmt_num(sup))
    } else {
        format!("dual[{},{}]", fmt_num(-sup), fmt_num(-inf))
    }
}

fn split_pair(body: &str, whole: &str) -> Result<(f64, f64)> {
    let mut parts = body.split(',');
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(Error::parse(whole, "expected two comma-separated endpoints"));
    };
    Ok((parse_num(a)?, parse_num(b)?))
}

fn bracket_body<'a>(s: &'a str, whole: &str) -> Result<&'a str> {
    s.strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(whole, "expected `[a,b]`"))
}

/// Parses any of the three class literals.
pub fn parse_class(s: &str) -> Result<GClass> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix("point") {
        let v = parse_num(rest)?;
        return Ok(GClass::scalar(v));
    }
    if let Some(rest) = t.strip_prefix("dual") {
        let (a, b) = split_pair(bracket_body(rest.trim_start(), t)?, t)?;
        if a < b {
            return Err(Error::parse(
                t,
                "a dual literal lists the larger endpoint first",
            ));
        }
        return Ok(GClass::new(-b, -a));
    }
    let (a, b) = split_pair(bracket_body(t, t)?, t)?;
    if a > b {
        return Err(Error::parse(t, "endpoints out of order, use `dual[..]`"));
    }
    Ok(GClass::new(a, b))
}

pub fn render_a4(x: A4) -> String {
    format!(
        "({},{},{},{})",
        fmt_num(x.x1),
        fmt_num(x.x2),
        fmt_num(x.x3),
        fmt_num(x.x4)
    )
}

pub fn parse_a4(s: &str) -> Result<A4> {
    let t = s.trim();
    let body = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(t, "expected `(x1,x2,x3,x4)`"))?;
    let coords = body.split(',').map(parse_num).collect::<Result<Vec<_>>>()?;
    match coords[..] {
        [x1, x2, x3, x4] => Ok(A4::new(x1, x2, x3, x4)),
        _ => Err(Error::parse(t, "expected four coordinates")),
    }
}

impl std::fmt::Display for GClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_class(*self, DEFAULT_TOL))
    }
}

impl std::str::FromStr for GClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<GClass> {
        parse_class(s)
    }
}

impl std::fmt::Display for A4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_a4(*self))
    }
}

impl std::str::FromStr for A4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<A4> {
        parse_a4(s)
    }
}
