use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::diagram::ArrowPattern;
use crate::error::{Error, Result};

/// Integer formal sum of arrow patterns, keyed by canonical pattern key.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArrowPolynomial {
    terms: BTreeMap<String, (ArrowPattern, i64)>,
}

impl ArrowPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coef * pattern`, merging with an isomorphic term if present.
    pub fn add(&mut self, pattern: ArrowPattern, coef: i64) {
        if coef == 0 {
            return;
        }
        let key = pattern.canonical_key();
        let remove = {
            let entry = self.terms.entry(key.clone()).or_insert((pattern, 0));
            entry.1 += coef;
            entry.1 == 0
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ArrowPattern, i64)> {
        self.terms.values().map(|(p, c)| (p, *c))
    }

    pub fn coefficient(&self, key: &str) -> i64 {
        self.terms.get(key).map_or(0, |t| t.1)
    }

    /// Canonical key to coefficient map.
    pub fn coefficients(&self) -> BTreeMap<String, i64> {
        self.terms.iter().map(|(k, (_, c))| (k.clone(), *c)).collect()
    }

    /// Applies the string permutation `sigma` to every term.
    pub fn permute(&self, sigma: &[usize]) -> Result<ArrowPolynomial> {
        let mut out = ArrowPolynomial::new();
        for (p, c) in self.terms() {
            out.add(p.permute_components(sigma)?, c);
        }
        Ok(out)
    }

    /// One term per line: `<coefficient> <canonical key>`.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        for (key, (_, c)) in &self.terms {
            writeln!(out, "{c} {key}").expect("writing to a String");
        }
        out
    }

    /// Parses the dump format; blank lines and `#` comment lines are skipped.
    pub fn from_dump(text: &str) -> Result<ArrowPolynomial> {
        let mut out = ArrowPolynomial::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (coef, key) = line.split_once(char::is_whitespace).ok_or_else(|| {
                Error::PolynomialFormat(format!("line {}: expected '<coef> <key>'", n + 1))
            })?;
            let coef: i64 = coef.parse().map_err(|_| {
                Error::PolynomialFormat(format!("line {}: bad coefficient '{coef}'", n + 1))
            })?;
            out.add(ArrowPattern::from_key(key.trim())?, coef);
        }
        Ok(out)
    }
}
