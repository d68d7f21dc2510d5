use super::{GaussDiagram, RawEndpoint, RawGauss, Role, Sign};
use crate::error::{Error, Result};

/// Gauss diagram of the closure of a braid on `strands` strands.
///
/// Letter `i > 0` is the positive generator crossing positions `i` and
/// `i + 1` (1-based) with the strand moving right to left on top; `-i` is
/// its inverse. Components are ordered by the smallest strand position they
/// occupy at the top of the braid, which is also where their base point sits.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<GaussDiagram> {
    if strands == 0 {
        return Err(Error::BadParams("braid needs at least one strand".into()));
    }
    for &l in word {
        if l == 0 || l.unsigned_abs() as usize >= strands {
            return Err(Error::BadParams(format!(
                "letter {l} invalid for {strands} strands"
            )));
        }
    }
    let mut done = vec![false; strands];
    let mut components = Vec::new();
    for start in 0..strands {
        if done[start] {
            continue;
        }
        let mut seq = Vec::new();
        let mut pos = start;
        loop {
            done[pos] = true;
            for (idx, &l) in word.iter().enumerate() {
                let p = l.unsigned_abs() as usize - 1;
                if pos != p && pos != p + 1 {
                    continue;
                }
                let moving_left = pos == p + 1;
                let over = moving_left == (l > 0);
                seq.push(RawEndpoint {
                    label: idx as u32 + 1,
                    role: if over { Role::Tail } else { Role::Head },
                    sign: if l > 0 { Sign::Pos } else { Sign::Neg },
                });
                pos = if moving_left { p } else { p + 1 };
            }
            if pos == start {
                break;
            }
        }
        components.push(seq);
    }
    GaussDiagram::validate(&RawGauss { components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::emit_gauss_code;

    #[test]
    fn hopf_from_full_twist() {
        let g = braid_closure(2, &[1, 1]).unwrap();
        assert_eq!(emit_gauss_code(&g), "U1+ O2+ / O1+ U2+");
    }

    #[test]
    fn borromean_has_three_components() {
        let g = braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap();
        assert_eq!(g.n_components(), 3);
        assert_eq!(g.n_arrows(), 6);
    }

    #[test]
    fn trefoil_is_one_component() {
        let g = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(g.n_components(), 1);
        assert!(braid_closure(2, &[2]).is_err());
    }
}

/// Word of the pure braid generator `A_ij` (1-based, `i < j`): strand `j`
/// passes behind strands `j-1..i+1`, winds once around strand `i` and
/// returns.
pub fn pure_braid_generator(i: usize, j: usize, inverse: bool) -> Vec<i32> {
    assert!(1 <= i && i < j, "need 1 <= i < j");
    let mut word: Vec<i32> = ((i + 1)..j).rev().map(|s| s as i32).collect();
    word.push(i as i32);
    word.push(i as i32);
    word.extend(((i + 1)..j).map(|s| -(s as i32)));
    if inverse {
        word.reverse();
        for l in &mut word {
            *l = -*l;
        }
    }
    word
}
