//! Scalar literal grammar.
//!
//! ```text
//! literal := ws* term (ws* sign ws* term)* ws*
//! term    := sign? ws* (number ws* unit? | unit)
//! number  := digits ("/" digits)?
//! unit    := "i" | "j" | "k"
//! ```
//!
//! Each unit may appear at most once. Emission is canonical: nonzero terms
//! in the order `1, i, j, k`, no spaces, unit coefficients elided.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::{Error, Result};

/// Coefficients of `1, i, j, k`.
pub type Components = [Rational; 4];

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn format_components(c: &[Rational; 4]) -> String {
    let units = ["", "i", "j", "k"];
    let mut out = String::new();
    for (coef, unit) in c.iter().zip(units) {
        if coef.is_zero() {
            continue;
        }
        let term = if unit.is_empty() {
            format_rational(coef)
        } else if coef.is_one() {
            unit.to_string()
        } else if *coef == -Rational::one() {
            format!("-{unit}")
        } else {
            format!("{}{unit}", format_rational(coef))
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).ok()?;
        text.parse().ok()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }
}

fn unit_index(b: u8) -> Option<usize> {
    match b {
        b'i' => Some(1),
        b'j' => Some(2),
        b'k' => Some(3),
        _ => None,
    }
}

pub fn parse_literal(text: &str) -> Result<Components> {
    let mut cur = Cursor {
        s: text.as_bytes(),
        pos: 0,
    };
    let mut out: Components = Default::default();
    let mut seen = [false; 4];
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.err("empty literal"));
            }
            break;
        }
        let mut negative = false;
        match cur.peek() {
            Some(b'+') | Some(b'-') => {
                negative = cur.peek() == Some(b'-');
                cur.pos += 1;
                cur.skip_ws();
            }
            _ if !first => return Err(cur.err("expected '+' or '-'")),
            _ => {}
        }
        let coef = match cur.peek() {
            Some(b) if b.is_ascii_digit() => {
                let n = cur.digits().ok_or_else(|| cur.err("bad integer"))?;
                let mut value = Rational::from_integer(n);
                if cur.peek() == Some(b'/') {
                    cur.pos += 1;
                    let d = cur.digits().ok_or_else(|| cur.err("missing denominator"))?;
                    if d.is_zero() {
                        return Err(cur.err("zero denominator"));
                    }
                    value = Rational::new(value.to_integer(), d);
                }
                Some(value)
            }
            _ => None,
        };
        cur.skip_ws();
        let unit = match cur.peek().and_then(unit_index) {
            Some(u) => {
                cur.pos += 1;
                u
            }
            None => 0,
        };
        let coef = match coef {
            Some(c) => c,
            None if unit != 0 => Rational::one(),
            None => return Err(cur.err("expected a number or unit")),
        };
        if seen[unit] {
            return Err(cur.err("repeated unit"));
        }
        seen[unit] = true;
        out[unit] = if negative { -coef } else { coef };
        first = false;
    }
    Ok(out)
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let c = parse_literal(text)?;
    if c[1..].iter().any(|x| !x.is_zero()) {
        return Err(Error::Parse(format!("{text:?} is not rational")));
    }
    let [r, ..] = c;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn comps(a: Rational, b: Rational, c: Rational, d: Rational) -> Components {
        [a, b, c, d]
    }

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert_eq!(
            parse_literal("3/5+4/5 i").unwrap(),
            comps(rat(3, 5), rat(4, 5), int(0), int(0))
        );
        assert_eq!(
            parse_literal("1+0i+1j+0k").unwrap(),
            comps(int(1), int(0), int(1), int(0))
        );
        assert_eq!(
            parse_literal("-i - k").unwrap(),
            comps(int(0), int(-1), int(0), int(-1))
        );
        assert_eq!(
            parse_literal("j").unwrap(),
            comps(int(0), int(0), int(1), int(0))
        );
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "", "1/0", "1 2", "i+i", "1/", "/2", "x", "1++2", "3/5 4/5i", "--1",
        ] {
            assert!(parse_literal(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn canonical_emission() {
        let c = parse_literal("4/5i + 3/5").unwrap();
        assert_eq!(format_components(&c), "3/5+4/5i");
        let c = parse_literal("-1j").unwrap();
        assert_eq!(format_components(&c), "-j");
        assert_eq!(format_components(&Default::default()), "0");
        let c = parse_literal("1-2/3i+j-k").unwrap();
        assert_eq!(format_components(&c), "1-2/3i+j-k");
    }
}
