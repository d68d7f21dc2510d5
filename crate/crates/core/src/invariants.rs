//! Linking numbers, Conway coefficients and Milnor invariants computed by
//! pairing arrow polynomials with Gauss diagrams.
//!
//! Component indices are 0-based. A Milnor index sequence `(I; j)` is
//! written as a slice whose last entry is `j`, so `[1, 2, 0]` stands for
//! `μ̄(23;1)` in 1-based notation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::arrowgen::{
    build_c, build_z, permute_polynomial, z21, ArrowPolynomial, DEFAULT_CONWAY_CAP,
    DEFAULT_MILNOR_CAP,
};
use crate::diagram::GaussDiagram;
use crate::error::{Error, Result};
use crate::pairing::pair_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Family {
    Conway,
    Milnor,
}

fn cache() -> &'static Mutex<HashMap<(Family, usize), Arc<ArrowPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), Arc<ArrowPolynomial>>>> =
        OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(family: Family, n: usize, cap: usize) -> Result<Arc<ArrowPolynomial>> {
    if let Some(z) = cache().lock().expect("cache lock").get(&(family, n)) {
        if n <= cap {
            return Ok(Arc::clone(z));
        }
    }
    let z = Arc::new(match family {
        Family::Conway => build_c(n, cap)?,
        Family::Milnor => build_z(n, cap)?,
    });
    cache()
        .lock()
        .expect("cache lock")
        .insert((family, n), Arc::clone(&z));
    Ok(z)
}

/// `C_2n`, built once per process and shared.
pub fn conway_polynomial(n: usize, cap: usize) -> Result<Arc<ArrowPolynomial>> {
    cached(Family::Conway, n, cap)
}

/// `Z_{n;1}`, built once per process and shared.
pub fn milnor_polynomial(n: usize, cap: usize) -> Result<Arc<ArrowPolynomial>> {
    cached(Family::Milnor, n, cap)
}

fn check_index(g: &GaussDiagram, index: usize) -> Result<()> {
    if index >= g.n_components() {
        return Err(Error::IndexRange {
            index,
            n: g.n_components(),
        });
    }
    Ok(())
}

fn check_sequence(g: &GaussDiagram, seq: &[usize]) -> Result<()> {
    if seq.len() < 2 {
        return Err(Error::ShortIndex);
    }
    let mut seen = vec![false; g.n_components()];
    for &i in seq {
        check_index(g, i)?;
        if seen[i] {
            return Err(Error::DuplicateIndex(i));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Linking number of components `i` and `j`: the sum of the signs of the
/// crossings where `j` passes over `i`.
pub fn linking_number(g: &GaussDiagram, i: usize, j: usize) -> Result<i64> {
    for c in [i, j] {
        if c >= g.n_components() {
            return Err(Error::ComponentRange {
                index: c,
                n: g.n_components(),
            });
        }
    }
    if i == j {
        return Err(Error::DuplicateIndex(i));
    }
    pair_poly(&z21(), &g.restrict(&[i, j])?)
}

/// `c_2n` of a knot diagram with the default cap.
pub fn conway_c2n(g: &GaussDiagram, n: usize) -> Result<i64> {
    conway_c2n_capped(g, n, DEFAULT_CONWAY_CAP)
}

pub fn conway_c2n_capped(g: &GaussDiagram, n: usize, cap: usize) -> Result<i64> {
    if g.n_components() != 1 {
        return Err(Error::NotAKnot(format!(
            "diagram has {} components",
            g.n_components()
        )));
    }
    pair_poly(&*conway_polynomial(n, cap)?, g)
}

/// A Milnor invariant as a residue class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MilnorResidue {
    pub raw: i64,
    pub modulus: i64,
    pub reduced: i64,
    pub bracket: i64,
}

impl MilnorResidue {
    pub fn new(raw: i64, modulus: i64) -> MilnorResidue {
        let reduced = if modulus > 0 {
            raw.rem_euclid(modulus)
        } else {
            raw
        };
        MilnorResidue {
            raw,
            modulus,
            reduced,
            bracket: bracket(raw, modulus),
        }
    }
}

/// `min(v mod d, d - v mod d)` for `d > 0`, and `|v|` for `d = 0`.
pub fn bracket(value: i64, d: i64) -> i64 {
    if d > 0 {
        let r = value.rem_euclid(d);
        r.min(d - r)
    } else {
        value.abs()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Indeterminacy of `μ̄(seq)`: 0 for two indices, otherwise the gcd of the
/// reduced values over every order-preserving proper subsequence with at
/// least two entries.
pub fn milnor_delta(g: &GaussDiagram, seq: &[usize]) -> Result<i64> {
    milnor_delta_capped(g, seq, DEFAULT_MILNOR_CAP)
}

pub fn milnor_delta_capped(g: &GaussDiagram, seq: &[usize], cap: usize) -> Result<i64> {
    check_sequence(g, seq)?;
    let mut memo = HashMap::new();
    delta_memo(g, seq, cap, &mut memo)
}

type Memo = HashMap<Vec<usize>, MilnorResidue>;

fn delta_memo(g: &GaussDiagram, seq: &[usize], cap: usize, memo: &mut Memo) -> Result<i64> {
    let n = seq.len();
    if n == 2 {
        return Ok(0);
    }
    let mut d = 0;
    // bitmasks over positions; skip the full mask and anything shorter than 2
    for mask in 1u32..(1 << n) - 1 {
        if mask.count_ones() < 2 {
            continue;
        }
        let sub: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).map(|b| seq[b]).collect();
        d = gcd(d, mu_memo(g, &sub, cap, memo)?.reduced);
    }
    Ok(d)
}

fn mu_memo(g: &GaussDiagram, seq: &[usize], cap: usize, memo: &mut Memo) -> Result<MilnorResidue> {
    if let Some(r) = memo.get(seq) {
        return Ok(*r);
    }
    let raw = milnor_raw(g, seq, cap)?;
    let modulus = delta_memo(g, seq, cap, memo)?;
    let r = MilnorResidue::new(raw, modulus);
    memo.insert(seq.to_vec(), r);
    Ok(r)
}

fn milnor_raw(g: &GaussDiagram, seq: &[usize], cap: usize) -> Result<i64> {
    let z = milnor_polynomial(seq.len(), cap)?;
    let mut involved = seq.to_vec();
    involved.sort_unstable();
    let sub = g.restrict(&involved)?;
    let position = |c: usize| involved.binary_search(&c).expect("index is involved");
    // string 0 is the trunk and goes to j; string s goes to I[s-1]
    let (&j, rest) = seq.split_last().expect("length checked");
    let sigma: Vec<usize> = std::iter::once(position(j))
        .chain(rest.iter().map(|&c| position(c)))
        .collect();
    pair_poly(&permute_polynomial(&z, &sigma)?, &sub)
}

/// `μ̄(I; j)` with its indeterminacy. The last entry of `seq` is `j`.
pub fn milnor_mu(g: &GaussDiagram, seq: &[usize]) -> Result<MilnorResidue> {
    milnor_mu_capped(g, seq, DEFAULT_MILNOR_CAP)
}

pub fn milnor_mu_capped(g: &GaussDiagram, seq: &[usize], cap: usize) -> Result<MilnorResidue> {
    check_sequence(g, seq)?;
    if seq.len() > cap {
        return Err(Error::CapExceeded {
            what: "Milnor string count",
            value: seq.len(),
            cap,
        });
    }
    mu_memo(g, seq, cap, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_gauss_code, pretzel_gauss_code};

    fn hopf() -> GaussDiagram {
        parse_gauss_code("O1+ U2+ / U1+ O2+").unwrap()
    }

    fn borromean() -> GaussDiagram {
        braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap()
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(3, 5), 2);
        assert_eq!(bracket(-4, 0), 4);
        assert_eq!(bracket(7, 4), 1);
        assert_eq!(bracket(-1, 4), 1);
    }

    #[test]
    fn linking_numbers() {
        assert_eq!(linking_number(&hopf(), 0, 1).unwrap(), 1);
        assert_eq!(linking_number(&hopf(), 1, 0).unwrap(), 1);
        assert_eq!(linking_number(&GaussDiagram::unlink(2), 0, 1).unwrap(), 0);
        let t24 = braid_closure(2, &[1, 1, 1, 1]).unwrap();
        assert_eq!(linking_number(&t24, 0, 1).unwrap(), 2);
        assert!(matches!(
            linking_number(&hopf(), 0, 2),
            Err(Error::ComponentRange { index: 2, n: 2 })
        ));
    }

    #[test]
    fn conway_examples() {
        let k52 = parse_gauss_code("U1+ O4+ U3+ O1+ U2+ O5+ U4+ O3+ U5+ O2+").unwrap();
        assert_eq!(conway_c2n(&k52, 2).unwrap(), 0);
        assert_eq!(conway_c2n(&k52, 1).unwrap(), 2);
        assert_eq!(conway_c2n(&GaussDiagram::unlink(1), 1).unwrap(), 0);
        let trefoil = pretzel_gauss_code(&[1, 1, 1]).unwrap();
        assert_eq!(conway_c2n(&trefoil, 1).unwrap(), 1);
        assert!(matches!(conway_c2n(&hopf(), 1), Err(Error::NotAKnot(_))));
        assert!(matches!(
            conway_c2n(&trefoil, 5),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn milnor_examples() {
        let b = borromean();
        let r = milnor_mu(&b, &[1, 2, 0]).unwrap();
        assert_eq!((r.bracket, r.modulus), (1, 0));
        assert_eq!(milnor_delta(&b, &[1, 2, 0]).unwrap(), 0);
        let u = milnor_mu(&GaussDiagram::unlink(3), &[1, 2, 0]).unwrap();
        assert_eq!((u.raw, u.bracket), (0, 0));
        let h = milnor_mu(&hopf(), &[1, 0]).unwrap();
        assert_eq!(h.raw, linking_number(&hopf(), 0, 1).unwrap());
        assert_eq!(h.modulus, 0);
    }

    #[test]
    fn delta_is_gcd_of_linking_numbers() {
        // closure of A12^2 A13^4 A23^6 has pairwise linking numbers 2, 4, 6
        let mut word = Vec::new();
        for (i, j, k) in [(1, 2, 2), (1, 3, 4), (2, 3, 6)] {
            for _ in 0..k {
                word.extend(crate::diagram::pure_braid_generator(i, j, false));
            }
        }
        let g = braid_closure(3, &word).unwrap();
        assert_eq!(linking_number(&g, 0, 1).unwrap(), 2);
        assert_eq!(linking_number(&g, 0, 2).unwrap(), 4);
        assert_eq!(linking_number(&g, 1, 2).unwrap(), 6);
        assert_eq!(milnor_delta(&g, &[1, 2, 0]).unwrap(), 2);
        let r = milnor_mu(&g, &[1, 2, 0]).unwrap();
        assert!((0..2).contains(&r.reduced));
    }

    #[test]
    fn index_errors() {
        let b = borromean();
        assert_eq!(milnor_mu(&b, &[0]), Err(Error::ShortIndex));
        assert_eq!(milnor_mu(&b, &[0, 0]), Err(Error::DuplicateIndex(0)));
        assert_eq!(
            milnor_mu(&b, &[0, 3]),
            Err(Error::IndexRange { index: 3, n: 3 })
        );
        assert!(matches!(
            milnor_mu_capped(&b, &[1, 2, 0], 2),
            Err(Error::CapExceeded { .. })
        ));
    }
}
