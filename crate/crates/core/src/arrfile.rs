//! The `.arr` text format.
//!
//! ```text
//! # comment
//! vars: 3
//! form: x1
//! form: x1 - x2
//! mult: 2
//! ```

use crate::arrangement::{Arrangement, LinearForm, Multiarrangement};
use crate::poly::Polynomial;
use crate::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses an arrangement file. Multiplicities default to 1.
pub fn parse(text: &str) -> Result<Multiarrangement> {
    let mut nvars: Option<usize> = None;
    let mut forms: Vec<LinearForm> = Vec::new();
    let mut mult: Vec<u32> = Vec::new();
    let mut mult_set = false;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| err(line_no, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "vars" => {
                if nvars.is_some() {
                    return Err(err(line_no, "`vars` given twice"));
                }
                let n: usize = value.parse().map_err(|_| err(line_no, format!("bad variable count `{value}`")))?;
                if n == 0 || n > crate::poly::MAX_VARS {
                    return Err(err(line_no, format!("variable count must be in 1..={}", crate::poly::MAX_VARS)));
                }
                nvars = Some(n);
            }
            "form" => {
                let n = nvars.ok_or_else(|| err(line_no, "`vars` must come first"))?;
                let p = Polynomial::parse(value, n).map_err(|e| err(line_no, e.to_string()))?;
                let f = LinearForm::from_polynomial(&p).map_err(|e| err(line_no, e.to_string()))?;
                if let Some(q) = forms.iter().position(|g| *g == f) {
                    return Err(err(line_no, format!("duplicate hyperplane {f} (same as hyperplane {})", q + 1)));
                }
                forms.push(f);
                mult.push(1);
                mult_set = false;
            }
            "mult" => {
                if forms.is_empty() || mult_set {
                    return Err(err(line_no, "`mult` must directly follow a `form`"));
                }
                let m: u32 = value.parse().map_err(|_| err(line_no, format!("bad multiplicity `{value}`")))?;
                *mult.last_mut().unwrap() = m;
                mult_set = true;
            }
            other => return Err(err(line_no, format!("unknown key `{other}`"))),
        }
    }
    let n = nvars.ok_or_else(|| err(0, "missing `vars` line"))?;
    let base = Arrangement::new(n, forms)?;
    Multiarrangement::new(base, mult)
}

/// Parses a file that must describe a simple arrangement.
pub fn parse_simple(text: &str) -> Result<Arrangement> {
    parse(text)?
        .into_simple()
        .ok_or_else(|| Error::Precondition("expected a simple arrangement (all multiplicities 1)".into()))
}

/// Canonical serialization with normalized integer forms.
pub fn serialize(am: &Multiarrangement) -> String {
    let mut s = format!("vars: {}\n", am.nvars());
    for (f, m) in am.base().forms().iter().zip(am.multiplicities()) {
        s.push_str(&format!("form: {f}\n"));
        if *m != 1 {
            s.push_str(&format!("mult: {m}\n"));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_file() {
        let a = parse_simple("vars: 3\nform: x1\nform: x2\nform: x3\n").unwrap();
        assert_eq!(a, Arrangement::boolean(3));
    }

    #[test]
    fn comments_rationals_and_multiplicities() {
        let am = parse("# test\nvars: 2 # two\n\nform: 1/2 x1 - x2\nmult: 3\nform: -x2\n").unwrap();
        assert_eq!(am.multiplicities(), &[3, 1]);
        assert_eq!(am.base().forms()[0].to_string(), "x1 - 2*x2");
        assert_eq!(am.base().forms()[1].to_string(), "x2");
        assert_eq!(parse(&serialize(&am)).unwrap(), am);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("vars: 2\nform: x1\nform: 2*x1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse("vars: 2\nform: 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = parse("vars: 2\nform: x1^2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = parse("form: x1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e:?}");
        let e = parse("vars: 2\nmult: 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = parse("vars: 2\nform: x1 + 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        assert!(parse("").is_err());
    }
}
