use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// A complex number `re + im·i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn imaginary(im: Rational) -> Self {
        Self {
            re: Rational::zero(),
            im,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Nonzero with vanishing real part.
    pub fn is_purely_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Representative of the conjugate pair in the closed upper half plane.
    pub fn upper(&self) -> Self {
        if self.im.is_negative() {
            self.conj()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = |c: &Rational| {
            if c.is_one() {
                String::new()
            } else {
                c.to_string()
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im.is_negative() => write!(f, "-{}i", unit(&-self.im.clone())),
            (true, false) => write!(f, "{}i", unit(&self.im)),
            (false, false) if self.im.is_negative() => {
                write!(f, "{}-{}i", self.re, unit(&-self.im.clone()))
            }
            (false, false) => write!(f, "{}+{}i", self.re, unit(&self.im)),
        }
    }
}

impl FromStr for GaussRational {
    type Err = Error;

    /// Accepts `a/b+c/d i`, `2/3i`, `-i`, `1`, with optional spaces.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let unsupported = || {
            Error::Parse(format!(
                "`{s}` is not a Gaussian rational; eigenvalues need rational real and imaginary parts"
            ))
        };
        if compact.is_empty() {
            return Err(unsupported());
        }
        let Some(body) = compact.strip_suffix('i') else {
            return parse_rational(&compact)
                .map(Self::real)
                .map_err(|_| unsupported());
        };
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re).map_err(|_| unsupported())?
        };
        let im = match im {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))
                .map_err(|_| unsupported())?,
        };
        Ok(Self { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    #[test]
    fn parses_the_literal_forms() {
        let cases = [
            ("1/2+3/4i", rat(1, 2), rat(3, 4)),
            ("1/2 + 3/4 i", rat(1, 2), rat(3, 4)),
            ("i", rat(0, 1), rat(1, 1)),
            ("-i", rat(0, 1), rat(-1, 1)),
            ("2/3i", rat(0, 1), rat(2, 3)),
            ("1-1i", rat(1, 1), rat(-1, 1)),
            ("-5", rat(-5, 1), rat(0, 1)),
            ("-1/2-2i", rat(-1, 2), rat(-2, 1)),
        ];
        for (text, re, im) in cases {
            assert_eq!(
                text.parse::<GaussRational>().unwrap(),
                GaussRational::new(re, im),
                "{text}"
            );
        }
    }

    #[test]
    fn rejects_irrational_input() {
        assert!("sqrt2".parse::<GaussRational>().is_err());
        assert!("1.5i".parse::<GaussRational>().is_err());
        assert!("".parse::<GaussRational>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["0", "3", "i", "-i", "-2/3i", "1+i", "1-i", "1/2-3/4i"] {
            let g: GaussRational = text.parse().unwrap();
            assert_eq!(g.to_string(), text);
            assert_eq!(g.to_string().parse::<GaussRational>().unwrap(), g);
        }
    }
}
