use std::fmt::{self, Write as _};

/// Significant digits used by every emitter.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Render `value` with 12 significant digits in the style of C's `%.12g`:
/// fixed notation for exponents in `[-4, 12)`, scientific otherwise, with
/// trailing zeros removed. Negative zero renders as `0`. The output parses
/// as a number in both TOML and JSON.
pub fn format_number(value: f64) -> String {
    let mut out = String::with_capacity(24);
    push_number(&mut out, value);
    out
}

/// Stack buffer for one `{:e}` rendering.
struct Scratch {
    buf: [u8; 40],
    len: usize,
}

impl fmt::Write for Scratch {
    fn write_str(&mut self, s: &str) -> fmt::Result {
        let end = self.len + s.len();
        if end > self.buf.len() {
            return Err(fmt::Error);
        }
        self.buf[self.len..end].copy_from_slice(s.as_bytes());
        self.len = end;
        Ok(())
    }
}

/// [`format_number`] appending to `out`.
pub fn push_number(out: &mut String, value: f64) {
    if value == 0.0 {
        out.push('0');
        return;
    }
    if !value.is_finite() {
        // not reachable from validated scenarios
        out.push_str(if value.is_nan() {
            "nan"
        } else if value > 0.0 {
            "inf"
        } else {
            "-inf"
        });
        return;
    }
    let mut scratch = Scratch {
        buf: [0; 40],
        len: 0,
    };
    write!(scratch, "{:.*e}", SIGNIFICANT_DIGITS - 1, value).expect("fits in 40 bytes");
    let sci = std::str::from_utf8(&scratch.buf[..scratch.len]).expect("ascii");
    let (mantissa, exponent) = sci.split_once('e').expect("exponent marker");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa),
    };
    if negative {
        out.push('-');
    }
    // 12 digits with the decimal point removed, then trailing zeros dropped
    let mut digits = [0u8; SIGNIFICANT_DIGITS];
    let mut n = 0;
    for &d in mantissa.as_bytes().iter().filter(|d| d.is_ascii_digit()) {
        digits[n] = d;
        n += 1;
    }
    while n > 1 && digits[n - 1] == b'0' {
        n -= 1;
    }
    let digits = std::str::from_utf8(&digits[..n]).expect("ascii digits");

    if (-4..SIGNIFICANT_DIGITS as i32).contains(&exponent) {
        if exponent >= 0 {
            let int_len = exponent as usize + 1;
            if digits.len() <= int_len {
                out.push_str(digits);
                out.extend(std::iter::repeat_n('0', int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-exponent - 1) as usize));
            out.push_str(digits);
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        let _ = write!(out, "e{exponent}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_and_short_decimals() {
        assert_eq!(format_number(4.0), "4");
        assert_eq!(format_number(0.9), "0.9");
        assert_eq!(format_number(2.4), "2.4");
        assert_eq!(format_number(-7.8), "-7.8");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1.1 * 6.0), "6.6");
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_number(2.0 / 3.0), "0.666666666667");
        assert_eq!(format_number(8.0 / 3.0), "2.66666666667");
        assert_eq!(format_number(6500.0 / 4200.0), "1.54761904762");
        assert_eq!(format_number(123456789012.0), "123456789012");
        assert_eq!(format_number(1234567890123.0), "1.23456789012e12");
        assert_eq!(format_number(0.000123), "0.000123");
        assert_eq!(format_number(0.0000123), "1.23e-5");
    }

    #[test]
    fn rounding_carry_moves_exponent() {
        assert_eq!(format_number(9.9999999999999), "10");
        assert_eq!(format_number(0.000099999999999999), "0.0001");
    }

    /// Two-pass rendering kept as an oracle for the digit assembly.
    fn reference(value: f64) -> String {
        let sci = format!("{:.11e}", value);
        let (mantissa, exponent) = sci.split_once('e').unwrap();
        let exponent: i32 = exponent.parse().unwrap();
        let trim = |s: &str| {
            if s.contains('.') {
                s.trim_end_matches('0').trim_end_matches('.').to_owned()
            } else {
                s.to_owned()
            }
        };
        if (-4..12).contains(&exponent) {
            let decimals = (11 - exponent).max(0) as usize;
            trim(&format!("{value:.decimals$}"))
        } else {
            format!("{}e{exponent}", trim(mantissa))
        }
    }

    #[test]
    fn wide_magnitudes() {
        for v in [
            1e-300, -2.5e-5, 7e11, 7.5e11, 1e12, 3.0e100, 0.1, 100.0, -123.456,
        ] {
            assert_eq!(format_number(v), reference(v), "{v}");
        }
        assert_eq!(format_number(1e12), "1e12");
    }

    proptest::proptest! {
        #[test]
        fn rendering_is_a_fixed_point(v in proptest::num::f64::NORMAL) {
            let once = format_number(v);
            let parsed: f64 = once.parse().unwrap();
            proptest::prop_assert_eq!(format_number(parsed), once.clone());
            proptest::prop_assert_eq!(reference(v), once);
        }
    }
}
