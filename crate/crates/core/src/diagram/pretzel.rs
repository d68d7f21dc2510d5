//! Gauss codes of standard pretzel diagrams.
//!
//! Columns are laid out left to right; column `i` is a vertical twist of
//! `|a_i|` crossings read top to bottom. Adjacent columns are joined by a
//! top arc and a bottom arc, and the outermost columns by arcs passing
//! around the whole diagram. For `a_i > 0` the strand running from upper
//! right to lower left passes over at every crossing of the column, so a
//! crossing is positive when both of its strands travel downwards; for
//! `a_i < 0` the other strand passes over. Signs are then computed from the
//! actual orientation of the traversal, which starts at the top-left port
//! of the first column heading down. That port is the base point.

use super::{GaussDiagram, RawEndpoint, RawGauss, Role, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

pub fn pretzel_gauss_code(a: &[i32]) -> Result<GaussDiagram> {
    let k = a.len();
    if k == 0 {
        return Err(Error::BadParams("pretzel needs at least one column".into()));
    }
    let all_odd = a.iter().all(|x| x % 2 != 0);
    let any_even = a.iter().any(|x| x % 2 == 0);
    if !((all_odd && k % 2 == 1) || any_even) {
        return Err(Error::NotAKnot(format!(
            "P{a:?}: need all entries and the column count odd, or an even entry"
        )));
    }

    // crossing id = offset[i] + t
    let mut offset = vec![0usize; k + 1];
    for i in 0..k {
        offset[i + 1] = offset[i] + a[i].unsigned_abs() as usize;
    }
    let total = offset[k];
    // per crossing: (over direction, under direction) recorded as visited
    let mut over_dir: Vec<Option<(i32, i32)>> = vec![None; total];
    let mut under_dir: Vec<Option<(i32, i32)>> = vec![None; total];
    let mut seq: Vec<(usize, Role)> = Vec::with_capacity(2 * total);

    // state: column, entering from top (downwards) or bottom, side
    let start = (0usize, true, Side::Left);
    let mut state = start;
    let mut steps = 0usize;
    while steps <= 2 * k {
        let (col, down, mut side) = state;
        let c = a[col].unsigned_abs() as usize;
        let positive = a[col] > 0;
        for step in 0..c {
            let t = if down { step } else { c - 1 - step };
            // "/" joins upper right and lower left.
            let (dir, slash) = match (down, side) {
                (true, Side::Left) => ((1, -1), false),
                (true, Side::Right) => ((-1, -1), true),
                (false, Side::Left) => ((1, 1), true),
                (false, Side::Right) => ((-1, 1), false),
            };
            let over = slash == positive;
            let id = offset[col] + t;
            if over {
                over_dir[id] = Some(dir);
                seq.push((id, Role::Tail));
            } else {
                under_dir[id] = Some(dir);
                seq.push((id, Role::Head));
            }
            side = side.other();
        }
        // leave through the bottom (if going down) or top, then follow the arc
        let next = match (down, side) {
            (true, Side::Right) => ((col + 1) % k, false, Side::Left),
            (true, Side::Left) => ((col + k - 1) % k, false, Side::Right),
            (false, Side::Right) => ((col + 1) % k, true, Side::Left),
            (false, Side::Left) => ((col + k - 1) % k, true, Side::Right),
        };
        state = next;
        steps += 1;
        if state == start {
            break;
        }
    }

    // every column carries two strand passages; one closed curve uses all of them
    if state != start || steps != 2 * k {
        return Err(Error::NotAKnot(format!(
            "P{a:?} closes up after {steps} of {} column passages; the diagram has several components",
            2 * k
        )));
    }

    let sign_of = |id: usize| {
        let (o, u) = (over_dir[id].expect("visited"), under_dir[id].expect("visited"));
        let cross = o.0 * u.1 - o.1 * u.0;
        if cross > 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    };
    let component = seq
        .iter()
        .map(|&(id, role)| RawEndpoint {
            label: id as u32 + 1,
            role,
            sign: sign_of(id),
        })
        .collect();
    GaussDiagram::validate(&RawGauss {
        components: vec![component],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::emit_gauss_code;

    #[test]
    fn trefoil_shape() {
        let g = pretzel_gauss_code(&[1, 1, 1]).unwrap();
        assert_eq!(g.n_arrows(), 3);
        assert!(g.signs().iter().all(|&s| s == g.sign(0)));
        // alternating
        let text = emit_gauss_code(&g);
        let roles: Vec<char> = text.split(' ').map(|t| t.chars().next().unwrap()).collect();
        assert!(roles.windows(2).all(|w| w[0] != w[1]), "{text}");
    }

    #[test]
    fn crossing_count_is_sum_of_twists() {
        let g = pretzel_gauss_code(&[3, 5, -7]).unwrap();
        assert_eq!(g.n_arrows(), 15);
        let g = pretzel_gauss_code(&[2, 1, 1]).unwrap();
        assert_eq!(g.n_arrows(), 4);
    }

    #[test]
    fn link_parameters_rejected() {
        assert!(matches!(pretzel_gauss_code(&[1, 1]), Err(Error::NotAKnot(_))));
        assert!(matches!(pretzel_gauss_code(&[3, 3, 3, 3]), Err(Error::NotAKnot(_))));
        assert!(matches!(pretzel_gauss_code(&[2, 2]), Err(Error::NotAKnot(_))));
        assert!(matches!(pretzel_gauss_code(&[]), Err(Error::BadParams(_))));
    }
}
