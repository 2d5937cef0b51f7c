//! Textual polynomial format: `1+16z+20z^2+8z^3+z^4`.
//!
//! Terms are printed in ascending powers; a unit coefficient is omitted on
//! non-constant terms and `-z` stands for `-1·z`. The parser accepts the same
//! grammar with optional whitespace and rejects repeated powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ParsePolyError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("power z^{0} appears more than once")]
    RepeatedPower(usize),
    #[error("exponent out of range at byte {0}")]
    BadExponent(usize),
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        if bytes.is_empty() {
            return Err(ParsePolyError::Empty);
        }
        let mut coeffs: Vec<Option<BigInt>> = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            if i > 0 || matches!(bytes[i].1, '+' | '-') {
                match bytes[i].1 {
                    '+' => {}
                    '-' => negative = true,
                    c => return Err(ParsePolyError::Unexpected { pos: bytes[i].0, found: c }),
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let has_digits = i > start;
            let mut coef = if has_digits {
                let digits: String = bytes[start..i].iter().map(|&(_, c)| c).collect();
                digits.parse::<BigInt>().expect("ascii digits")
            } else {
                BigInt::one()
            };
            let mut power = 0usize;
            if i < bytes.len() && bytes[i].1 == 'z' {
                i += 1;
                power = 1;
                if i < bytes.len() && bytes[i].1 == '^' {
                    i += 1;
                    let estart = i;
                    while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                        i += 1;
                    }
                    if i == estart {
                        let pos = bytes.get(i).map_or(s.len(), |b| b.0);
                        return Err(ParsePolyError::BadExponent(pos));
                    }
                    let digits: String = bytes[estart..i].iter().map(|&(_, c)| c).collect();
                    power = digits
                        .parse::<usize>()
                        .ok()
                        .filter(|&p| p <= 1 << 20)
                        .ok_or(ParsePolyError::BadExponent(bytes[estart].0))?;
                }
            } else if !has_digits {
                return match bytes.get(i) {
                    Some(&(pos, found)) => Err(ParsePolyError::Unexpected { pos, found }),
                    None => Err(ParsePolyError::Unexpected { pos: s.len(), found: '\0' }),
                };
            }
            if i < bytes.len() && !matches!(bytes[i].1, '+' | '-') {
                return Err(ParsePolyError::Unexpected { pos: bytes[i].0, found: bytes[i].1 });
            }
            if negative {
                coef = -coef;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, None);
            }
            if coeffs[power].is_some() {
                return Err(ParsePolyError::RepeatedPower(power));
            }
            coeffs[power] = Some(coef);
        }
        Ok(IntPoly::from_coeffs(coeffs.into_iter().map(Option::unwrap_or_default).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prints_ascending() {
        assert_eq!(IntPoly::from_i64(&[1, 16, 20, 8, 1]).to_string(), "1+16z+20z^2+8z^3+z^4");
        assert_eq!(IntPoly::from_i64(&[-1, 0, 2]).to_string(), "-1+2z^2");
        assert_eq!(IntPoly::from_i64(&[0, -1, 0, 4]).to_string(), "-z+4z^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn parses_examples() {
        let p: IntPoly = "1+16z+20z^2+8z^3+z^4".parse().unwrap();
        assert_eq!(p, IntPoly::from_i64(&[1, 16, 20, 8, 1]));
        let q: IntPoly = " 4z + 3 z^2 ".parse().unwrap();
        assert_eq!(q, IntPoly::from_i64(&[0, 4, 3]));
        let r: IntPoly = "-1+2z^2".parse().unwrap();
        assert_eq!(r, IntPoly::from_i64(&[-1, 0, 2]));
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!("".parse::<IntPoly>(), Err(ParsePolyError::Empty));
        assert!(matches!("1+x".parse::<IntPoly>(), Err(ParsePolyError::Unexpected { .. })));
        assert!(matches!("1+z^".parse::<IntPoly>(), Err(ParsePolyError::BadExponent(_))));
        assert_eq!("z+2z".parse::<IntPoly>(), Err(ParsePolyError::RepeatedPower(1)));
        assert!("1++z".parse::<IntPoly>().is_err());
        assert!("3z2".parse::<IntPoly>().is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(c in prop::collection::vec(-1000i64..1000, 0..8)) {
            let p = IntPoly::from_i64(&c);
            let back: IntPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
