//! Index lists such as `1,2,0` or `tau,1,tau` or `0.5*sqrt2,1,sigma*2`.

use crate::coxeter::{SIGMA, SQRT2, TAU};
use crate::error::{Error, Result};

fn factor(tok: &str) -> Result<f64> {
    let t = tok.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t),
    };
    let v = match body.to_ascii_lowercase().as_str() {
        "tau" | "τ" => TAU,
        "sigma" | "σ" => SIGMA,
        "sqrt2" | "√2" => SQRT2,
        other => other
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::Parse(tok.to_string()))?,
    };
    Ok(if neg { -v } else { v })
}

/// One index: a product of decimals and the symbols `tau`, `sigma`, `sqrt2`.
pub fn parse_index(token: &str) -> Result<f64> {
    if token.trim().is_empty() {
        return Err(Error::Parse(token.to_string()));
    }
    token.split('*').map(factor).try_fold(1.0, |acc, f| Ok(acc * f?))
}

/// Exactly three comma-separated indices.
pub fn parse_indices(text: &str) -> Result<[f64; 3]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("{text} (expected three comma-separated values)")));
    }
    let mut out = [0.0; 3];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = parse_index(p)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_and_symbols() {
        assert_eq!(parse_indices("1,2,0").unwrap(), [1.0, 2.0, 0.0]);
        assert_eq!(parse_indices(" tau, 1 ,TAU").unwrap(), [TAU, 1.0, TAU]);
        let [a, b, c] = parse_indices("2*sqrt2,sigma*sigma,0.5*tau*2").unwrap();
        assert!((a - 2.0 * SQRT2).abs() < 1e-15);
        assert!((b - (1.0 - TAU + 1.0)).abs() < 1e-12);
        assert_eq!(c, TAU);
        assert_eq!(parse_indices("-1,0,0").unwrap()[0], -1.0);
    }

    #[test]
    fn malformed() {
        for bad in ["1,2", "1,2,3,4", "1,,2", "x,1,1", "1,2,inf", "1,2,3*", "1/2,1,1"] {
            assert!(parse_indices(bad).is_err(), "{bad}");
        }
    }
}
