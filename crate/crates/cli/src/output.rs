use clap::ValueEnum;
use kirchhoff_core::rational::{to_decimal_string, to_exact_string, Rational};
use serde_json::{json, Value};

pub const DIGITS_ENV: &str = "KIRCHHOFF_DIGITS";
pub const FILE_DEFAULT_DIGITS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Exact,
    Decimal,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Decimal(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub format: Format,
    pub mode: Mode,
    pub digits: usize,
}

/// Digits from `KIRCHHOFF_DIGITS`, if set.
pub fn env_digits() -> Result<Option<usize>, String> {
    match std::env::var(DIGITS_ENV) {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(d) if (1..=40).contains(&d) => Ok(Some(d)),
            _ => Err(format!("{DIGITS_ENV} must be an integer in 1..=40, got {text:?}")),
        },
        Err(_) => Ok(None),
    }
}

impl Settings {
    /// Exact output by default for spec input, decimal for files or when
    /// `--digits` is given explicitly.
    pub fn resolve(
        format: Option<Format>,
        digits: Option<usize>,
        fallback_digits: usize,
        file_input: bool,
    ) -> Result<Self, String> {
        let resolved = match digits {
            Some(d) => d,
            None => env_digits()?.unwrap_or(fallback_digits),
        };
        let mode = match format {
            Some(Format::Exact) => Mode::Exact,
            Some(Format::Decimal) => Mode::Decimal(resolved),
            _ if digits.is_some() || file_input => Mode::Decimal(resolved),
            _ => Mode::Exact,
        };
        Ok(Settings {
            format: format.unwrap_or(match mode {
                Mode::Exact => Format::Exact,
                Mode::Decimal(_) => Format::Decimal,
            }),
            mode,
            digits: resolved,
        })
    }

    pub fn number(&self, v: &Rational) -> String {
        match self.mode {
            Mode::Exact => to_exact_string(v),
            Mode::Decimal(d) => to_decimal_string(v, d),
        }
    }

    pub fn pair(&self, v: &Rational) -> Value {
        json!({ "exact": to_exact_string(v), "decimal": to_decimal_string(v, self.digits) })
    }

    pub fn float(&self, v: f64) -> String {
        match Rational::from_float(v) {
            Some(r) => to_decimal_string(&r, self.digits),
            None => v.to_string(),
        }
    }

    /// A single named quantity.
    pub fn scalar(&self, quantity: &str, v: &Rational) -> String {
        match self.format {
            Format::Exact | Format::Decimal => format!("{}\n", self.number(v)),
            Format::Csv => format!(
                "quantity,exact,decimal\n{quantity},{},{}\n",
                to_exact_string(v),
                to_decimal_string(v, self.digits)
            ),
            Format::Json => {
                let mut body = self.pair(v);
                body["schema"] = json!(1);
                body["quantity"] = json!(quantity);
                json_line(&body)
            }
        }
    }
}

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use kirchhoff_core::rational::ratio;

    #[test]
    fn spec_input_defaults_to_exact() {
        let s = Settings::resolve(None, None, 6, false).unwrap();
        assert_eq!(s.mode, Mode::Exact);
        assert_eq!(s.number(&ratio(409, 35)), "409/35");
    }

    #[test]
    fn digits_or_file_switch_to_decimal() {
        assert_eq!(Settings::resolve(None, Some(5), 6, false).unwrap().mode, Mode::Decimal(5));
        assert_eq!(Settings::resolve(None, None, 6, true).unwrap().format, Format::Decimal);
        let s = Settings::resolve(Some(Format::Exact), Some(3), 6, true).unwrap();
        assert_eq!(s.mode, Mode::Exact);
        assert_eq!(s.digits, 3);
    }

    #[test]
    fn csv_scalar() {
        let s = Settings::resolve(Some(Format::Csv), Some(4), 6, false).unwrap();
        assert_eq!(s.scalar("kirchhoff", &ratio(23, 3)), "quantity,exact,decimal\nkirchhoff,23/3,7.667\n");
    }

    #[test]
    fn float_rendering() {
        let s = Settings::resolve(None, Some(4), 6, false).unwrap();
        assert_eq!(s.float(0.125), "0.1250");
        assert_eq!(s.float(f64::NAN), "NaN");
    }
}
