//! Fixed-precision number formatting for reports and CLI output.

/// Significant digits kept in every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds `x` to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let r: f64 = s.parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest rendering of `round_sig(x)`, in exponent form outside
/// `[1e-4, 1e15)`.
pub fn fmt(x: f64) -> String {
    let r = round_sig(x);
    if r != 0.0 && r.is_finite() && !(1e-4..1e15).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

/// Serde helpers that round on the way out.
pub mod serde_sig {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(super::round_sig(*x))
    }

    pub mod opt {
        use serde::Serializer;

        pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(v) => s.serialize_some(&super::super::round_sig(*v)),
                None => s.serialize_none(),
            }
        }
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&super::super::round_sig(*x))?;
            }
            seq.end()
        }
    }

    pub mod opt_vec {
        use serde::Serializer;

        pub fn serialize<S: Serializer>(xs: &Option<Vec<f64>>, s: S) -> Result<S::Ok, S::Error> {
            match xs {
                Some(v) => {
                    let r: Vec<f64> = v.iter().map(|x| super::super::round_sig(*x)).collect();
                    s.serialize_some(&r)
                }
                None => s.serialize_none(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds_to_twelve_digits() {
        assert_eq!(fmt(3f64.sqrt()), "1.73205080757");
        assert_eq!(fmt(1.9999999999999996), "2");
        assert_eq!(fmt(0.0), "0");
        assert_eq!(fmt(-0.5), "-0.5");
        assert_eq!(fmt(4.440892098500626e-16), "4.4408920985e-16");
        assert_eq!(fmt(-2.5e20), "-2.5e20");
    }
}
