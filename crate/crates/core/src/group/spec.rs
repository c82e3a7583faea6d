use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Elem;
use crate::error::{Error, Result};

/// Parsed form of `S:<n> | A:<n> | GL:<n>:<q> | SL:<n>:<q> | PSL2:<q> | cayley:<path>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    GeneralLinear(usize, u32),
    SpecialLinear(usize, u32),
    Psl2(u32),
    Cayley(PathBuf),
}

impl GroupSpec {
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let (head, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::spec(spec, "expected `<kind>:<parameters>`"))?;
        if head == "cayley" {
            if rest.is_empty() {
                return Err(Error::spec(spec, "missing path"));
            }
            return Ok(GroupSpec::Cayley(PathBuf::from(rest)));
        }
        let nums: Vec<u64> = rest
            .split(':')
            .map(|s| {
                s.parse::<u64>()
                    .map_err(|_| Error::spec(spec, format!("`{s}` is not a non-negative integer")))
            })
            .collect::<Result<_>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() != k {
                return Err(Error::spec(spec, format!("expected {k} parameter(s)")));
            }
            Ok(())
        };
        let small = |v: u64| -> Result<u32> {
            u32::try_from(v).map_err(|_| Error::spec(spec, "parameter too large"))
        };
        Ok(match head {
            "S" => {
                arity(1)?;
                GroupSpec::Symmetric(nums[0] as usize)
            }
            "A" => {
                arity(1)?;
                GroupSpec::Alternating(nums[0] as usize)
            }
            "GL" => {
                arity(2)?;
                GroupSpec::GeneralLinear(nums[0] as usize, small(nums[1])?)
            }
            "SL" => {
                arity(2)?;
                GroupSpec::SpecialLinear(nums[0] as usize, small(nums[1])?)
            }
            "PSL2" => {
                arity(1)?;
                GroupSpec::Psl2(small(nums[0])?)
            }
            other => return Err(Error::spec(spec, format!("unknown group kind `{other}`"))),
        })
    }
}

/// Reads `|G|` followed by `|G|` rows of `|G|` integers.
pub(super) fn parse_cayley(text: &str) -> Result<(usize, Vec<Elem>)> {
    let mut tokens = text.split_whitespace();
    let order: usize = tokens
        .next()
        .ok_or_else(|| Error::parse(0, "empty Cayley table file"))?
        .parse()
        .map_err(|_| Error::parse(0, "first token must be the group order"))?;
    if order == 0 {
        return Err(Error::parse(0, "group order must be positive"));
    }
    let mut table = Vec::with_capacity(order * order);
    for (i, tok) in tokens.enumerate() {
        let v: Elem = tok
            .parse()
            .map_err(|_| Error::parse(i + 1, format!("`{tok}` is not an element index")))?;
        table.push(v);
    }
    if table.len() != order * order {
        return Err(Error::parse(
            table.len() + 1,
            format!("expected {} table entries, found {}", order * order, table.len()),
        ));
    }
    Ok((order, table))
}

pub(super) fn validate_cayley(order: usize, table: &[Elem]) -> Result<()> {
    let bad = |msg: String| Err(Error::arg(format!("invalid Cayley table: {msg}")));
    if table.len() != order * order {
        return bad(format!("expected {} entries", order * order));
    }
    if table.iter().any(|&x| x as usize >= order) {
        return bad("entry out of range".into());
    }
    for a in 0..order {
        if table[a] as usize != a || table[a * order] as usize != a {
            return bad("element 0 is not the identity".into());
        }
    }
    for a in 0..order {
        let mut row = vec![false; order];
        let mut col = vec![false; order];
        for b in 0..order {
            row[table[a * order + b] as usize] = true;
            col[table[b * order + a] as usize] = true;
        }
        if row.iter().chain(&col).any(|&s| !s) {
            return bad("not a Latin square".into());
        }
    }
    let mul = |a: usize, b: usize| table[a * order + b] as usize;
    let assoc = |a, b, c| mul(mul(a, b), c) == mul(a, mul(b, c));
    if order <= 64 {
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if !assoc(a, b, c) {
                        return bad(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})"));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..100_000 {
            let (a, b, c) = (
                rng.gen_range(0..order),
                rng.gen_range(0..order),
                rng.gen_range(0..order),
            );
            if !assoc(a, b, c) {
                return bad(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_kinds() {
        assert_eq!(GroupSpec::parse("S:3").unwrap(), GroupSpec::Symmetric(3));
        assert_eq!(GroupSpec::parse(" A:5 ").unwrap(), GroupSpec::Alternating(5));
        assert_eq!(GroupSpec::parse("GL:2:2").unwrap(), GroupSpec::GeneralLinear(2, 2));
        assert_eq!(GroupSpec::parse("SL:3:4").unwrap(), GroupSpec::SpecialLinear(3, 4));
        assert_eq!(GroupSpec::parse("PSL2:9").unwrap(), GroupSpec::Psl2(9));
        assert_eq!(
            GroupSpec::parse("cayley:data/d4.txt").unwrap(),
            GroupSpec::Cayley("data/d4.txt".into())
        );
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["S", "S:", "S:3:4", "GL:2", "PSL2:-1", "X:3", "cayley:"] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn cayley_validation() {
        // Z/3
        let ok = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        assert!(validate_cayley(3, &ok).is_ok());
        let not_latin = vec![0, 1, 2, 1, 1, 0, 2, 0, 1];
        assert!(validate_cayley(3, &not_latin).is_err());
        let (n, t) = parse_cayley("2\n0 1\n1 0\n").unwrap();
        assert_eq!((n, t), (2, vec![0, 1, 1, 0]));
        assert!(parse_cayley("2\n0 1\n1\n").is_err());
    }
}
