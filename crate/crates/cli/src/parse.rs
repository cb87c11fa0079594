//! Parsing of command-line weight, group, and rational syntax.

use dimdatum_core::rational::Rational;
use dimdatum_core::reps::{Factor, Group};

/// `p/q` or a plain integer.
pub fn rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: i64 = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if den == 0 {
            return Err(String::from("zero denominator"));
        }
        Ok(Rational::new(num, den))
    } else {
        let n: i64 = s.parse().map_err(|_| format!("bad rational {s:?}"))?;
        Ok(Rational::from_int(n))
    }
}

/// Comma-separated integers.
pub fn int_list(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad integer {part:?}"))
        })
        .collect()
}

/// Per-factor integer blocks separated by `;`.
pub fn weight_blocks(s: &str) -> Result<Vec<Vec<i64>>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(int_list).collect()
}

/// Comma-separated rationals.
pub fn rational_list(s: &str) -> Result<Vec<Rational>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(rational).collect()
}

/// Group names: factors separated by `x`, e.g. `su6`, `su2xsu2`,
/// `sp1xso4`, `u3`.
pub fn group(s: &str) -> Result<Group, String> {
    let s = s.trim().to_lowercase();
    if s.is_empty() || s == "1" || s == "trivial" {
        return Ok(Group::trivial());
    }
    let mut factors = Vec::new();
    for part in s.split('x') {
        factors.push(factor(part)?);
    }
    Ok(Group::new(factors))
}

fn factor(s: &str) -> Result<Factor, String> {
    let take = |prefix: &str| -> Option<usize> {
        s.strip_prefix(prefix).and_then(|rest| rest.parse().ok())
    };
    if let Some(n) = take("su") {
        if n >= 1 {
            return Ok(Factor::SpecialUnitary(n));
        }
    }
    if let Some(n) = take("sp") {
        if n >= 1 {
            return Ok(Factor::Symplectic(n));
        }
    }
    if let Some(n) = take("so") {
        if n >= 2 && n % 2 == 0 {
            return Ok(Factor::OrthogonalEven(n / 2));
        }
        return Err(format!(
            "only even special orthogonal groups are supported: {s:?}"
        ));
    }
    if let Some(n) = take("u") {
        if n >= 1 {
            return Ok(Factor::Unitary(n));
        }
    }
    Err(format!("unknown group factor {s:?}"))
}
