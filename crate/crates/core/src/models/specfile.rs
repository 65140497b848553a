use num_bigint::BigUint;

use super::group::ProductModel;
use crate::arithmetic::PrimeSpec;
use crate::error::{Error, Result};

/// Parse a model spec file:
///
/// ```text
/// # comment
/// primes = 2,3,5
/// exponents = 1,1,1
/// depth = 3
/// moduli = 8,3,25      # optional; replaces p_j^{d_j}
/// ```
///
/// `exponents` defaults to all ones and `depth` to the full list.
pub fn parse_model_spec(text: &str) -> Result<ProductModel> {
    let mut primes: Option<Vec<u64>> = None;
    let mut exponents: Option<Vec<u32>> = None;
    let mut depth: Option<usize> = None;
    let mut moduli: Option<Vec<BigUint>> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, found {line:?}")))?;
        let value = value.trim();
        match key.trim() {
            "primes" => primes = Some(parse_list(value).map_err(err)?),
            "exponents" => exponents = Some(parse_list(value).map_err(err)?),
            "depth" => {
                depth =
                    Some(value.parse().map_err(|_| {
                        err(format!("depth must be a positive integer, got {value:?}"))
                    })?)
            }
            "moduli" => moduli = Some(parse_list(value).map_err(err)?),
            other => return Err(err(format!("unknown key {other:?}"))),
        }
    }

    let spec = match primes {
        Some(primes) => {
            let exponents = exponents.unwrap_or_else(|| vec![1; primes.len()]);
            Some(PrimeSpec::new(primes, exponents).map_err(|e| Error::Parse {
                line: 0,
                message: e.to_string(),
            })?)
        }
        None if exponents.is_some() => {
            return Err(Error::Parse {
                line: 0,
                message: "exponents given without primes".into(),
            })
        }
        None => None,
    };
    let whole_file = |e: Error| Error::Parse {
        line: 0,
        message: e.to_string(),
    };
    match (moduli, spec) {
        (Some(moduli), spec) => {
            let model = ProductModel::from_moduli(moduli, depth).map_err(whole_file)?;
            Ok(match spec {
                Some(spec) => model.with_spec(spec),
                None => model,
            })
        }
        (None, Some(spec)) => ProductModel::from_spec(spec, depth).map_err(whole_file),
        (None, None) => Err(Error::Parse {
            line: 0,
            message: "spec needs `primes` or `moduli`".into(),
        }),
    }
}

fn parse_list<T: std::str::FromStr>(value: &str) -> std::result::Result<Vec<T>, String> {
    value
        .split(',')
        .map(|s| {
            let s = s.trim();
            s.parse()
                .map_err(|_| format!("not a non-negative integer: {s:?}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_primes() {
        let m =
            parse_model_spec("# P235\nprimes = 2, 3, 5\nexponents = 1,1,1\ndepth = 2\n").unwrap();
        assert_eq!(m.depth(), 2);
        assert_eq!(m.spec().unwrap().primes(), &[2, 3, 5]);
        assert_eq!(m.moduli(), &[BigUint::from(2u32), BigUint::from(3u32)]);
    }

    #[test]
    fn parses_moduli() {
        let m = parse_model_spec("moduli = 8,3,25").unwrap();
        assert_eq!(m.depth(), 3);
        assert!(m.spec().is_none());
    }

    #[test]
    fn exponents_default_to_one() {
        let m = parse_model_spec("primes = 5,11,13").unwrap();
        assert_eq!(m.spec().unwrap().exponents(), &[1, 1, 1]);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let e = parse_model_spec("primes = 2,3\n\nfoo = 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse_model_spec("primes = 2,x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_model_spec("primes 2,3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        assert!(parse_model_spec("primes = 2,4").is_err());
        assert!(parse_model_spec("primes = 2,3\ndepth = 3").is_err());
        assert!(parse_model_spec("").is_err());
    }
}
