use std::fmt;

use super::{check_permutation, Layout, Role};
use crate::error::{Error, Result};

/// What the arrows of a pattern are drawn on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Carrier {
    /// A single based loop (knot patterns).
    Loop,
    /// `k` ordered strings oriented downwards (link patterns).
    Strings(usize),
}

impl Carrier {
    pub fn n_components(self) -> usize {
        match self {
            Carrier::Loop => 1,
            Carrier::Strings(k) => k,
        }
    }
}

/// Unsigned arrow diagram used as a counting template.
///
/// Isomorphisms of based patterns must preserve component labels, base
/// points, endpoint order and arrow orientation, so the only freedom is the
/// naming of arrows. Arrows are numbered by first appearance, which makes
/// structural equality coincide with isomorphism and the canonical key a
/// complete invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowPattern {
    carrier: Carrier,
    layout: Layout,
}

impl ArrowPattern {
    /// Builds a pattern from labelled endpoint sequences, one per component.
    pub fn from_sequences(carrier: Carrier, seqs: &[Vec<(u32, Role)>]) -> Result<ArrowPattern> {
        if seqs.len() != carrier.n_components() {
            return Err(Error::ComponentMismatch {
                pattern: carrier.n_components(),
                diagram: seqs.len(),
            });
        }
        let (layout, _) = Layout::from_labeled(seqs)?;
        Ok(ArrowPattern { carrier, layout })
    }

    /// Parses a canonical key such as `K|O1 U2 U1 O2` or `S|U1 / O1`.
    pub fn from_key(key: &str) -> Result<ArrowPattern> {
        let bad = |m: &str| Error::PolynomialFormat(format!("{m} in pattern key '{key}'"));
        let (kind, body) = key.split_once('|').ok_or_else(|| bad("missing '|'"))?;
        let parts: Vec<&str> = body.split('/').collect();
        let carrier = match kind.trim() {
            "K" if parts.len() == 1 => Carrier::Loop,
            "K" => return Err(bad("loop pattern with several components")),
            "S" => Carrier::Strings(parts.len()),
            _ => return Err(bad("unknown carrier")),
        };
        let mut seqs = Vec::with_capacity(parts.len());
        for part in parts {
            let mut seq = Vec::new();
            for tok in part.split_whitespace() {
                let role = match tok.as_bytes()[0] {
                    b'O' => Role::Tail,
                    b'U' => Role::Head,
                    _ => return Err(bad("token must start with O or U")),
                };
                let label: u32 = tok[1..].parse().map_err(|_| bad("bad label"))?;
                seq.push((label, role));
            }
            seqs.push(seq);
        }
        ArrowPattern::from_sequences(carrier, &seqs)
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn n_arrows(&self) -> usize {
        self.layout.n_arrows()
    }

    pub fn n_components(&self) -> usize {
        self.carrier.n_components()
    }

    /// Canonical text key: equal iff the patterns are isomorphic.
    pub fn canonical_key(&self) -> String {
        let mut out = String::from(match self.carrier {
            Carrier::Loop => "K|",
            Carrier::Strings(_) => "S|",
        });
        self.layout.write_tokens(&mut out, |_| None);
        out
    }

    /// Labelled endpoint sequences (labels are 0-based arrow indices).
    pub fn sequences(&self) -> Vec<Vec<(u32, Role)>> {
        self.layout.labeled()
    }

    /// Moves string `i` to position `sigma[i]`.
    pub fn permute_components(&self, sigma: &[usize]) -> Result<ArrowPattern> {
        check_permutation(sigma, self.n_components())?;
        let (layout, _) = self.layout.permuted(sigma)?;
        Ok(ArrowPattern {
            carrier: self.carrier,
            layout,
        })
    }

    /// Numbers of (right, left) arrows of a loop pattern.
    pub fn right_left_counts(&self) -> (usize, usize) {
        let right = self.layout.arrows().iter().filter(|a| a.is_right()).count();
        (right, self.n_arrows() - right)
    }
}

impl fmt::Display for ArrowPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Role::*;

    #[test]
    fn key_is_deterministic_and_order_independent() {
        let a = ArrowPattern::from_sequences(
            Carrier::Strings(2),
            &[vec![(5, Tail)], vec![(5, Head)]],
        )
        .unwrap();
        assert_eq!(a.canonical_key(), a.canonical_key());
        assert_eq!(a.canonical_key(), "S|O1 / U1");
        let p = ArrowPattern::from_sequences(
            Carrier::Loop,
            &[vec![(9, Tail), (4, Head), (9, Head), (4, Tail)]],
        )
        .unwrap();
        let q = ArrowPattern::from_sequences(
            Carrier::Loop,
            &[vec![(1, Tail), (2, Head), (1, Head), (2, Tail)]],
        )
        .unwrap();
        assert_eq!(p, q);
        assert_eq!(p.canonical_key(), "K|O1 U2 U1 O2");
        assert_eq!(ArrowPattern::from_key(&p.canonical_key()).unwrap(), p);
    }

    #[test]
    fn key_round_trip_with_empty_strings() {
        let p = ArrowPattern::from_key("S|O1 /  / U1").unwrap();
        assert_eq!(p.n_components(), 3);
        assert_eq!(p.canonical_key(), "S|O1 / / U1");
        let e = ArrowPattern::from_key("K|").unwrap();
        assert_eq!(e.n_arrows(), 0);
        assert!(ArrowPattern::from_key("X|O1 U1").is_err());
        assert!(ArrowPattern::from_key("K|O1 / U1").is_err());
    }

    #[test]
    fn permuting_strings() {
        let p = ArrowPattern::from_key("S|O1 / U1 O2 / U2").unwrap();
        assert_eq!(p.permute_components(&[0, 1, 2]).unwrap(), p);
        let q = p.permute_components(&[1, 2, 0]).unwrap();
        assert_eq!(q.canonical_key(), "S|U1 / O2 / U2 O1");
        assert!(p.permute_components(&[0, 1]).is_err());
    }
}
