//! Chord diagrams on a based circle, their parallel doubling, and the
//! ascending orientation of one-component diagrams.

use crate::diagram::{ArrowPattern, Carrier, Role};
use crate::error::{Error, Result};

/// Default cap on the number of chords (`2n <= 8`).
pub const DEFAULT_CHORD_CAP: usize = 8;

/// `m` chords on `2m` points of a based circle, stored as the partner of
/// each point. Point 0 follows the base point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    partner: Vec<usize>,
}

impl ChordDiagram {
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<ChordDiagram> {
        let n = 2 * pairs.len();
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::BadParams(format!(
                    "chord endpoints {pairs:?} do not partition 0..{n}"
                )));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Ok(ChordDiagram { partner })
    }

    pub fn n_chords(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&p| p < self.partner[p])
            .map(|p| (p, self.partner[p]))
            .collect()
    }

    /// Number of closed curves after replacing every chord by two parallel
    /// copies. Leaving point `x` along the circle we reach `x + 1`, cross
    /// its doubled chord and continue from the partner, so curves are the
    /// cycles of `x -> partner(x + 1)` on the `2m` circle arcs.
    pub fn doubling_components(&self) -> usize {
        let n = self.partner.len();
        if n == 0 {
            return 1;
        }
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.partner[(x + 1) % n];
            }
        }
        cycles
    }

    /// Orients each chord by the direction in which the doubled curve,
    /// started at the base point, first runs along it.
    pub fn ascending_arrows(&self) -> Result<ArrowPattern> {
        let comps = self.doubling_components();
        if comps != 1 {
            return Err(Error::NotOneComponent(comps));
        }
        let n = self.partner.len();
        let mut seq: Vec<(u32, Role)> = vec![(0, Role::Tail); n];
        let mut passed = vec![false; n];
        // start on the arc entering point 0
        let mut x = n.wrapping_sub(1);
        for _ in 0..n {
            let y = (x + 1) % n;
            let z = self.partner[y];
            let chord = y.min(z) as u32;
            if !passed[y] && !passed[z] {
                seq[y] = (chord, Role::Tail);
                seq[z] = (chord, Role::Head);
            }
            passed[y] = true;
            passed[z] = true;
            x = z;
        }
        ArrowPattern::from_sequences(Carrier::Loop, &[seq])
    }
}

/// Calls `f` on every chord diagram with `m` chords, `(2m - 1)!!` in all.
pub fn for_each_chord_diagram(m: usize, mut f: impl FnMut(&ChordDiagram)) {
    let mut cd = ChordDiagram {
        partner: vec![usize::MAX; 2 * m],
    };
    fill(&mut cd, &mut f);
}

fn fill(cd: &mut ChordDiagram, f: &mut impl FnMut(&ChordDiagram)) {
    let Some(first) = cd.partner.iter().position(|&p| p == usize::MAX) else {
        f(cd);
        return;
    };
    for other in first + 1..cd.partner.len() {
        if cd.partner[other] != usize::MAX {
            continue;
        }
        cd.partner[first] = other;
        cd.partner[other] = first;
        fill(cd, f);
        cd.partner[first] = usize::MAX;
        cd.partner[other] = usize::MAX;
    }
}

pub fn enumerate_chord_diagrams(m: usize, cap: usize) -> Result<Vec<ChordDiagram>> {
    if m > cap {
        return Err(Error::CapExceeded {
            what: "chord count",
            value: m,
            cap,
        });
    }
    if m == 0 {
        return Err(Error::BadParams("chord count must be at least 1".into()));
    }
    let mut out = Vec::new();
    for_each_chord_diagram(m, |cd| out.push(cd.clone()));
    Ok(out)
}
