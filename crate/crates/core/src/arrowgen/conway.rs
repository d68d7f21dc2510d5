use super::chord::{for_each_chord_diagram, DEFAULT_CHORD_CAP};
use super::ArrowPolynomial;
use crate::error::{Error, Result};

/// Default cap on the half-degree `n` of `C_2n`.
pub const DEFAULT_CONWAY_CAP: usize = DEFAULT_CHORD_CAP / 2;

/// `C_2n`: the sum of the ascending arrow diagrams of all based
/// one-component chord diagrams with `2n` chords. Chord diagrams that
/// produce the same pattern add their coefficients.
pub fn build_c(n: usize, cap: usize) -> Result<ArrowPolynomial> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Conway half-degree",
            value: n,
            cap,
        });
    }
    if n == 0 {
        return Err(Error::BadParams("C_2n needs n >= 1".into()));
    }
    let mut c = ArrowPolynomial::new();
    for_each_chord_diagram(2 * n, |cd| {
        if cd.doubling_components() == 1 {
            c.add(cd.ascending_arrows().expect("one-component diagram"), 1);
        }
    });
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_is_the_crossed_pair() {
        let c = build_c(1, DEFAULT_CONWAY_CAP).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.coefficient("K|O1 U2 U1 O2"), 1);
    }

    #[test]
    fn right_left_splits_are_symmetric() {
        for n in 1..=3 {
            let c = build_c(n, DEFAULT_CONWAY_CAP).unwrap();
            let mut one_component = 0;
            for_each_chord_diagram(2 * n, |cd| {
                if cd.doubling_components() == 1 {
                    one_component += 1;
                }
            });
            let total: i64 = c.terms().map(|(_, k)| k).sum();
            assert_eq!(total, one_component);
            let mut by_split = std::collections::BTreeMap::new();
            for (p, k) in c.terms() {
                assert!(k > 0);
                assert_eq!(p.n_arrows(), 2 * n);
                let (r, l) = p.right_left_counts();
                assert!(r >= 1 && l >= 1);
                *by_split.entry((r, l)).or_insert(0) += k;
            }
            // individual terms need not balance, but the splits are symmetric
            for (&(r, l), &k) in &by_split {
                assert_eq!(by_split.get(&(l, r)), Some(&k));
            }
        }
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(build_c(5, 4), Err(Error::CapExceeded { .. })));
    }
}
