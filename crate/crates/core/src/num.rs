//! Numeric foundation: precision context, compensated summation, parsing
//! and deterministic formatting helpers.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;

/// Working precision for floating-point computation, in mantissa bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prec(pub u32);

pub const DEFAULT_PREC_BITS: u32 = 128;
pub const MIN_PREC_BITS: u32 = 64;

impl Default for Prec {
    fn default() -> Self {
        Prec(DEFAULT_PREC_BITS)
    }
}

impl Prec {
    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn f<T>(self, x: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.0, x)
    }

    pub fn zero(self) -> Float {
        Float::with_val(self.0, 0)
    }

    pub fn one(self) -> Float {
        Float::with_val(self.0, 1)
    }

    pub fn pi(self) -> Float {
        Float::with_val(self.0, Constant::Pi)
    }

    pub fn from_rational(self, q: &Rational) -> Float {
        Float::with_val(self.0, q)
    }

    pub fn from_integer(self, n: &Integer) -> Float {
        Float::with_val(self.0, n)
    }

    /// Decimal digits that faithfully represent this precision.
    pub fn decimal_digits(self) -> usize {
        // log10(2) ~ 0.30103
        (self.0 as f64 * 0.30103).ceil() as usize + 2
    }
}

/// Kahan-style compensated accumulator.
///
/// All long floating summations in the crate go through this; the
/// compensation term keeps the accumulated rounding error independent of the
/// number of terms.
#[derive(Debug, Clone)]
pub struct Compensated {
    sum: Float,
    c: Float,
}

impl Compensated {
    pub fn new(prec: Prec) -> Self {
        Compensated {
            sum: prec.zero(),
            c: prec.zero(),
        }
    }

    pub fn add(&mut self, term: &Float) {
        // y = term - c; t = sum + y; c = (t - sum) - y; sum = t
        let y = Float::with_val(self.sum.prec(), term - &self.c);
        let t = Float::with_val(self.sum.prec(), &self.sum + &y);
        let mut c = Float::with_val(self.sum.prec(), &t - &self.sum);
        c -= &y;
        self.c = c;
        self.sum = t;
    }

    pub fn value(&self) -> Float {
        self.sum.clone()
    }
}

/// Total order wrapper for `Float` keys in heaps. The crate never produces
/// NaN keys; equal-comparing NaN would be a logic error upstream.
#[derive(Debug, Clone)]
pub struct OrdFloat(pub Float);

impl PartialEq for OrdFloat {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}
impl Eq for OrdFloat {}
impl PartialOrd for OrdFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for OrdFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).expect("NaN in ordered float")
    }
}

/// Deterministic scientific-notation rendering at full working precision.
pub fn format_float(x: &Float, prec: Prec) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    format!("{:.*e}", prec.decimal_digits(), x)
}

/// Parse a rational number: `p/q`, an integer, or a finite decimal.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: Integer = n.trim().parse().ok()?;
        let den: Integer = d.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Rational::from((num, den)));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int_part.starts_with('-');
        let int_digits = int_part.strip_prefix(['-', '+']).unwrap_or(int_part);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let joined = format!("{}{}", int_digits, frac_part);
        let num: Integer = joined.parse().ok()?;
        let den = Integer::from(10).pow(frac_part.len() as u32);
        let mut q = Rational::from((num, den));
        if neg {
            q = -q;
        }
        return Some(q);
    }
    let n: Integer = s.parse().ok()?;
    Some(Rational::from(n))
}

/// A complex exponent; `im == 0` selects the real fast path everywhere.
#[derive(Debug, Clone)]
pub struct CExp {
    pub re: Float,
    pub im: Float,
}

impl CExp {
    pub fn real(re: Float) -> Self {
        let p = re.prec();
        CExp {
            re,
            im: Float::with_val(p, 0),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// Parse `a`, `a+bi`, `a-bi` with decimal or scientific parts.
pub fn parse_cexp(s: &str, prec: Prec) -> Option<CExp> {
    let s = s.trim().replace(' ', "");
    if s.is_empty() {
        return None;
    }
    let parse_part = |t: &str| -> Option<Float> {
        let t = if t.is_empty() || t == "+" {
            "1"
        } else if t == "-" {
            "-1"
        } else {
            t
        };
        Float::parse(t).ok().map(|v| Float::with_val(prec.0, v))
    };
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // Find the split between real and imaginary parts: the last +/- that
        // is not leading and not part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let b = bytes[i];
            if (b == b'+' || b == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
                split = Some(i);
                break;
            }
        }
        match split {
            Some(i) => {
                let re = parse_part(&body[..i])?;
                let im = parse_part(&body[i..])?;
                Some(CExp { re, im })
            }
            None => {
                let im = parse_part(body)?;
                Some(CExp {
                    re: prec.zero(),
                    im,
                })
            }
        }
    } else {
        let re = parse_part(&s)?;
        Some(CExp::real(re))
    }
}

/// `x^s` for `x > 0` and complex `s`, via the principal branch.
pub fn complex_pow(x: &Float, s: &CExp) -> (Float, Float) {
    let p = x.prec();
    let lnx = Float::with_val(p, x.ln_ref());
    let magnitude = if s.re.is_zero() {
        Float::with_val(p, 1)
    } else {
        let e = Float::with_val(p, &lnx * &s.re);
        e.exp()
    };
    if s.im.is_zero() {
        return (magnitude, Float::with_val(p, 0));
    }
    let phase = Float::with_val(p, &lnx * &s.im);
    let (sin, cos) = phase.sin_cos(Float::new(p));
    (
        Float::with_val(p, &magnitude * &cos),
        Float::with_val(p, &magnitude * &sin),
    )
}

/// gcd for machine integers (used by exact small-scale oracles).
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), Rational::from((3, 4)));
        assert_eq!(parse_rational("-7").unwrap(), Rational::from(-7));
        assert_eq!(parse_rational("0.25").unwrap(), Rational::from((1, 4)));
        assert_eq!(parse_rational("-1.5").unwrap(), Rational::from((-3, 2)));
        assert_eq!(parse_rational(" 9/ 3").unwrap(), Rational::from(3));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn complex_exponent_parsing() {
        let p = Prec(64);
        let c = parse_cexp("0.5+0i", p).unwrap();
        assert_eq!(c.re.to_f64(), 0.5);
        assert!(c.is_real());
        let c = parse_cexp("2-0.25i", p).unwrap();
        assert_eq!(c.re.to_f64(), 2.0);
        assert_eq!(c.im.to_f64(), -0.25);
        let c = parse_cexp("1", p).unwrap();
        assert!(c.is_real());
        let c = parse_cexp("1e-2+5e-1i", p).unwrap();
        assert_eq!(c.re.to_f64(), 0.01);
        assert_eq!(c.im.to_f64(), 0.5);
    }

    #[test]
    fn complex_pow_matches_real_pow() {
        let p = Prec(128);
        let x = p.f(3.5f64);
        let s = CExp::real(p.f(0.75f64));
        let (re, im) = complex_pow(&x, &s);
        let expect = p.f(3.5f64).pow(p.f(0.75f64));
        assert!(im.is_zero());
        let diff = Float::with_val(128, &re - &expect);
        assert!(diff.abs().to_f64() < 1e-30);
    }

    #[test]
    fn compensated_sum_small_terms() {
        let p = Prec(64);
        let mut acc = Compensated::new(p);
        let term = p.f(1e-20f64);
        acc.add(&p.one());
        for _ in 0..1000 {
            acc.add(&term);
        }
        let got = acc.value();
        let expect = p.f(1.0f64) + p.f(1e-17f64);
        let diff = Float::with_val(64, &got - &expect).abs();
        assert!(diff.to_f64() < 1e-19, "kahan drift: {}", diff);
    }
}
