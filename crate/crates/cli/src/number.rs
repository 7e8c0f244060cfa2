//! Full-precision numbers for documents.
//!
//! Finite values are written as JSON numbers in scientific notation with 17
//! significant digits, which is enough for every `f64` to parse back to the
//! same bits. Non-finite values are written as the strings `"inf"`, `"-inf"`
//! and `"nan"`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Real(pub f64);

impl Real {
    pub fn render(self) -> String {
        let x = self.0;
        if x.is_nan() {
            "nan".into()
        } else if x.is_infinite() {
            if x > 0.0 {
                "inf".into()
            } else {
                "-inf".into()
            }
        } else {
            format!("{x:.16e}")
        }
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real(x)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let n = Number::from_str(&self.render()).map_err(serde::ser::Error::custom)?;
            n.serialize(s)
        } else {
            s.serialize_str(&self.render())
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::Number(n) => {
                let x: f64 = n.to_string().parse().map_err(D::Error::custom)?;
                if x.is_finite() {
                    Ok(Real(x))
                } else {
                    Err(D::Error::custom(format!("number {n} is out of range")))
                }
            }
            Value::String(s) => match s.as_str() {
                "inf" => Ok(Real(f64::INFINITY)),
                "-inf" => Ok(Real(f64::NEG_INFINITY)),
                "nan" => Ok(Real(f64::NAN)),
                _ => Err(D::Error::custom(format!("expected a number, found string {s:?}"))),
            },
            other => Err(D::Error::custom(format!("expected a number, found {other}"))),
        }
    }
}

/// A complex number written as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Cplx(pub Real, pub Real);

impl From<Complex64> for Cplx {
    fn from(z: Complex64) -> Self {
        Cplx(Real(z.re), Real(z.im))
    }
}

impl From<Cplx> for Complex64 {
    fn from(c: Cplx) -> Self {
        Complex64::new(c.0 .0, c.1 .0)
    }
}

impl fmt::Display for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.0 .0, self.1 .0);
        if im.is_sign_negative() {
            write!(f, "{re:.6} - {:.6}i", -im)
        } else {
            write!(f, "{re:.6} + {im:.6}i")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_seventeen_significant_digits() {
        assert_eq!(Real(1.0).render(), "1.0000000000000000e0");
        assert_eq!(Real(-0.1).render(), "-1.0000000000000001e-1");
        assert_eq!(Real(std::f64::consts::TAU).render(), "6.2831853071795862e0");
    }

    #[test]
    fn bit_exact_round_trip() {
        let xs = [0.0, -0.0, 1.0, 0.1, 1e-300, 5e-324, f64::MAX, f64::MIN_POSITIVE, std::f64::consts::PI, -123.456e7];
        for x in xs {
            let json = serde_json::to_string(&Real(x)).unwrap();
            let back: Real = serde_json::from_str(&json).unwrap();
            assert_eq!(back.0.to_bits(), x.to_bits(), "{json}");
        }
        let json = serde_json::to_string(&Real(f64::NEG_INFINITY)).unwrap();
        assert_eq!(json, "\"-inf\"");
        assert_eq!(serde_json::from_str::<Real>(&json).unwrap().0, f64::NEG_INFINITY);
    }

    #[test]
    fn rejects_garbage_and_overflow() {
        assert!(serde_json::from_str::<Real>("\"pi\"").is_err());
        assert!(serde_json::from_str::<Real>("true").is_err());
        assert!(serde_json::from_str::<Real>("1e400").is_err());
        assert_eq!(serde_json::from_str::<Real>("3").unwrap().0, 3.0);
    }
}
