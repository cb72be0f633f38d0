//! Exact scalar arithmetic over the Gaussian rationals ℚ(i).
//!
//! `Rational` is an arbitrary-precision reduced fraction (positive
//! denominator, gcd 1; both maintained by the backing type).
//! [`GaussianRational`] is the field actually used by every other module:
//! `re + im·i` with `i² = −1`.  Values are immutable; all operations
//! return fresh values, so scalars can be shared freely across threads.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always stored reduced.
pub type Rational = num_rational::BigRational;

/// Error raised by the scalar text parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar `{input}`: {reason}")]
pub struct ScalarParseError {
    pub input: String,
    pub reason: String,
}

/// An element of ℚ(i): `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    /// The fraction `num/den` as a real scalar.  Panics if `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// The imaginary unit i = √−1.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|² = re² + im², an exact rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    /// True when the scalar sorts "negatively" for rendering purposes:
    /// re < 0, or re = 0 and im < 0.
    pub fn is_display_negative(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // (a+bi)(c+di) = (ac − bd) + (ad + bc)i
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on a zero divisor; use [`GaussianRational::inv`] for the
    /// checked form.
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero GaussianRational");
        self * &inv
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);
forward_value_binop!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

/// Renders a rational in the grammar `[-]digits[/digits]`.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical text form: `R`, `R*i`, `R+R*i` or `R-R*i` with
    /// `R = [-]digits[/digits]`.  Round-trips exactly through `parse`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", render_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", render_rational(&self.im));
        }
        if self.im.is_negative() {
            write!(
                f,
                "{}-{}*i",
                render_rational(&self.re),
                render_rational(&-self.im.clone())
            )
        } else {
            write!(
                f,
                "{}+{}*i",
                render_rational(&self.re),
                render_rational(&self.im)
            )
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = BigInt::from_str(num_str).map_err(|e| format!("bad integer `{num_str}`: {e}"))?;
    let denom = match den_str {
        Some(d) => {
            let d = BigInt::from_str(d).map_err(|e| format!("bad integer `{d}`: {e}"))?;
            if d <= BigInt::zero() {
                return Err(format!("denominator `{d}` must be positive"));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(numer, denom))
}

impl FromStr for GaussianRational {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| ScalarParseError {
            input: s.to_string(),
            reason,
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err("empty input".into()));
        }
        // Split off an imaginary part at a '+'/'-' that is not the leading sign.
        let bytes = t.as_bytes();
        let mut split = None;
        for (pos, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[pos - 1] != b'/' {
                split = Some(pos);
                break;
            }
        }
        match split {
            Some(pos) => {
                let re = parse_rational(&t[..pos]).map_err(&err)?;
                let sign = if bytes[pos] == b'-' { -1 } else { 1 };
                let rest = &t[pos + 1..];
                let body = rest
                    .strip_suffix("*i")
                    .ok_or_else(|| err("imaginary part must end in `*i`".into()))?;
                let im = parse_rational(body).map_err(&err)?;
                Ok(GaussianRational::new(re, if sign < 0 { -im } else { im }))
            }
            None => {
                if let Some(body) = t.strip_suffix("*i") {
                    let im = parse_rational(body).map_err(&err)?;
                    Ok(GaussianRational::new(Rational::zero(), im))
                } else if t == "i" {
                    Ok(GaussianRational::i())
                } else if t == "-i" {
                    Ok(-GaussianRational::i())
                } else {
                    let re = parse_rational(t).map_err(&err)?;
                    Ok(GaussianRational::from_rational(re))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn gr(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(
            Rational::new(BigInt::from(a), BigInt::from(b)),
            Rational::new(BigInt::from(c), BigInt::from(d)),
        )
    }

    #[test]
    fn addition_examples() {
        assert_eq!(
            GaussianRational::ratio(1, 2) + GaussianRational::ratio(1, 2),
            GaussianRational::one()
        );
        assert_eq!(
            GaussianRational::i() + (-GaussianRational::i()),
            GaussianRational::zero()
        );
        assert_eq!(gr(1, 3, 1, 6) + gr(1, 6, 1, 3), gr(1, 2, 1, 2));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(
            GaussianRational::i() * GaussianRational::i(),
            GaussianRational::integer(-1)
        );
        let x = gr(3, 7, -2, 5);
        assert_eq!(GaussianRational::one() * x.clone(), x);
        assert_eq!(
            gr(1, 2, 1, 2) * gr(1, 2, -1, 2),
            GaussianRational::ratio(1, 2)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            GaussianRational::integer(2).inv().unwrap(),
            GaussianRational::ratio(1, 2)
        );
        assert_eq!(GaussianRational::i().inv().unwrap(), -GaussianRational::i());
        assert_eq!(gr(1, 1, 1, 1).inv().unwrap(), gr(1, 2, -1, 2));
        assert_eq!(GaussianRational::zero().inv(), None);
    }

    fn random_scalar(rng: &mut ChaCha12Rng) -> GaussianRational {
        let part = |rng: &mut ChaCha12Rng| {
            Rational::new(
                BigInt::from(rng.gen_range(-40i64..=40)),
                BigInt::from(rng.gen_range(1i64..=12)),
            )
        };
        GaussianRational::new(part(rng), part(rng))
    }

    #[test]
    fn field_axioms_randomized() {
        let mut rng = ChaCha12Rng::seed_from_u64(0x5ca1e);
        for _ in 0..10_000 {
            let a = random_scalar(&mut rng);
            let b = random_scalar(&mut rng);
            let c = random_scalar(&mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
            }
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let mut rng = ChaCha12Rng::seed_from_u64(77);
        for _ in 0..10_000 {
            let x = random_scalar(&mut rng);
            let s = x.to_string();
            let back: GaussianRational = s.parse().unwrap();
            assert_eq!(back, x, "round trip failed for `{s}`");
        }
        for s in [
            "0",
            "1",
            "-1",
            "1/2",
            "-3/4",
            "1*i",
            "-1*i",
            "1/2+1/3*i",
            "1/2-1/3*i",
        ] {
            let x: GaussianRational = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
    }

    #[test]
    fn rejects_malformed_scalars() {
        for s in ["", "1/0", "1/-2", "i*2", "2i", "1+2", "1++i", "1/2+*i"] {
            assert!(s.parse::<GaussianRational>().is_err(), "accepted `{s}`");
        }
    }
}
