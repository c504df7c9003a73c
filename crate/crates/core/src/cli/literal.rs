//! Textual literals: dyadic numbers, hats and triangles.
//!
//! ```text
//! dyadic   := ["-"] digits [ "/" ( digits | "2^" digits ) ]
//! hat      := ("T" | "TT") int int int
//! triangle := dyadic "," dyadic  dyadic "," dyadic  dyadic "," dyadic
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::geometry::{Point, Triangle};
use crate::hats::Hat;

fn parse_error(what: &str, text: &str) -> Error {
    Error::Parse(format!("malformed {what} {text:?}"))
}

fn parse_int(text: &str) -> Result<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error("integer", text));
    }
    BigInt::from_str(text).map_err(|_| parse_error("integer", text))
}

fn parse_unsigned(text: &str) -> Result<BigInt> {
    if text.starts_with('-') {
        return Err(parse_error("denominator", text));
    }
    parse_int(text)
}

pub fn parse_dyadic(text: &str) -> Result<Dyadic> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        None => return Ok(Dyadic::from_int(parse_int(text)?)),
        Some(parts) => parts,
    };
    let num = parse_int(num)?;
    if let Some(k) = den.strip_prefix("2^") {
        let k = parse_unsigned(k)?;
        let k: i64 = i64::try_from(k).map_err(|_| parse_error("exponent", den))?;
        return Ok(Dyadic::new(num, -k));
    }
    let den = parse_unsigned(den)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let tz = den.trailing_zeros().unwrap_or(0);
    if !(&den >> tz).is_one() {
        return Err(Error::NotDyadic(text.to_string()));
    }
    Ok(Dyadic::new(num, -(tz as i64)))
}

impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_dyadic(s)
    }
}

pub fn format_dyadic(d: &Dyadic) -> String {
    d.to_string()
}

pub fn parse_point(text: &str) -> Result<Point> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| parse_error("point", text))?;
    Ok(Point::new(parse_dyadic(x)?, parse_dyadic(y)?))
}

/// A hat or a triangle given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Hat(Hat),
    Triangle(Triangle),
}

impl Shape {
    pub fn triangle(&self) -> Triangle {
        match self {
            Shape::Hat(h) => h.to_triangle(),
            Shape::Triangle(t) => t.clone(),
        }
    }
}

pub fn parse_hat(text: &str) -> Result<Hat> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [tag @ ("T" | "TT"), i, j, m] => {
            let (i, j, m) = (parse_int(i)?, parse_int(j)?, parse_int(m)?);
            if *tag == "T" {
                Hat::representative(i, j, m)
            } else {
                Hat::new(i, j, m)
            }
        }
        _ => Err(parse_error("hat", text)),
    }
}

pub fn parse_triangle(text: &str) -> Result<Triangle> {
    let points: Vec<&str> = text.split_whitespace().collect();
    if points.len() != 3 {
        return Err(parse_error("triangle", text));
    }
    let [a, b, c] = [points[0], points[1], points[2]].map(parse_point);
    Triangle::new(a?, b?, c?)
}

pub fn parse_shape(text: &str) -> Result<Shape> {
    let first = text.split_whitespace().next().unwrap_or("");
    if first == "T" || first == "TT" {
        parse_hat(text).map(Shape::Hat)
    } else {
        parse_triangle(text).map(Shape::Triangle)
    }
}
