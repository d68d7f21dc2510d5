//! Gauss diagrams, arrow patterns and their text codecs.
//!
//! A Gauss diagram records a link diagram as one based sequence of arrow
//! endpoints per component. Every arrow points from the overpassing strand
//! (tail, written `O`) to the underpassing strand (head, written `U`) and
//! carries the sign of its crossing.
//!
//! Arrows are always numbered by first appearance when reading the
//! components in order from their base points, so two diagrams compare
//! equal exactly when they have the same canonical serialization.

mod braid;
mod codec;
mod pattern;
mod pretzel;

pub use braid::{braid_closure, pure_braid_generator};
pub use codec::{emit_gauss_code, parse_gauss_code};
pub use pattern::{ArrowPattern, Carrier};
pub use pretzel::pretzel_gauss_code;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn from_value(v: f64) -> Sign {
        if v >= 0.0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// Which end of an arrow sits at an endpoint slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    /// Arrow tail: the overpassing strand (`O`).
    Tail,
    /// Arrow head: the underpassing strand (`U`).
    Head,
}

impl Role {
    pub fn symbol(self) -> char {
        match self {
            Role::Tail => 'O',
            Role::Head => 'U',
        }
    }

    pub fn flip(self) -> Role {
        match self {
            Role::Tail => Role::Head,
            Role::Head => Role::Tail,
        }
    }
}

/// Position of an arrow endpoint: component index and index in that
/// component's sequence read from its base point (both 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub component: usize,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub arrow: usize,
    pub role: Role,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub tail: Slot,
    pub head: Slot,
}

impl Arrow {
    /// Whether the arrow points along the orientation of a single based
    /// component (tail before head). Only meaningful when both ends lie on
    /// the same component.
    pub fn is_right(&self) -> bool {
        self.tail.position < self.head.position
    }

    pub fn slot(&self, role: Role) -> Slot {
        match role {
            Role::Tail => self.tail,
            Role::Head => self.head,
        }
    }
}

/// The unsigned combinatorial skeleton shared by Gauss diagrams and arrow
/// patterns: endpoint sequences plus arrows, numbered by first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    components: Vec<Vec<Endpoint>>,
    arrows: Vec<Arrow>,
}

impl Layout {
    /// Builds a layout from labelled endpoint sequences, renumbering arrows
    /// by first appearance. Returns the layout and, for every new arrow
    /// index, the label it came from.
    pub(crate) fn from_labeled(seqs: &[Vec<(u32, Role)>]) -> Result<(Layout, Vec<u32>)> {
        if seqs.is_empty() {
            return Err(Error::NoComponents);
        }
        let mut seen: BTreeMap<u32, (usize, usize, usize)> = BTreeMap::new();
        for seq in seqs {
            for &(label, role) in seq {
                let e = seen.entry(label).or_insert((0, 0, 0));
                e.0 += 1;
                match role {
                    Role::Tail => e.1 += 1,
                    Role::Head => e.2 += 1,
                }
            }
        }
        for (&label, &(count, tails, heads)) in &seen {
            if count != 2 {
                return Err(Error::DanglingArrow { label, count });
            }
            if tails != 1 || heads != 1 {
                return Err(Error::RoleError { label });
            }
        }

        let mut index_of: BTreeMap<u32, usize> = BTreeMap::new();
        let mut labels = Vec::with_capacity(seen.len());
        let mut tails: Vec<Option<Slot>> = Vec::new();
        let mut heads: Vec<Option<Slot>> = Vec::new();
        let mut components = Vec::with_capacity(seqs.len());
        for (c, seq) in seqs.iter().enumerate() {
            let mut out = Vec::with_capacity(seq.len());
            for (p, &(label, role)) in seq.iter().enumerate() {
                let idx = *index_of.entry(label).or_insert_with(|| {
                    labels.push(label);
                    tails.push(None);
                    heads.push(None);
                    labels.len() - 1
                });
                let slot = Slot {
                    component: c,
                    position: p,
                };
                match role {
                    Role::Tail => tails[idx] = Some(slot),
                    Role::Head => heads[idx] = Some(slot),
                }
                out.push(Endpoint { arrow: idx, role });
            }
            components.push(out);
        }
        let arrows = tails
            .into_iter()
            .zip(heads)
            .map(|(t, h)| Arrow {
                tail: t.expect("tail checked"),
                head: h.expect("head checked"),
            })
            .collect();
        Ok((Layout { components, arrows }, labels))
    }

    fn labeled(&self) -> Vec<Vec<(u32, Role)>> {
        self.components
            .iter()
            .map(|seq| seq.iter().map(|e| (e.arrow as u32, e.role)).collect())
            .collect()
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn components(&self) -> &[Vec<Endpoint>] {
        &self.components
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn component(&self, c: usize) -> &[Endpoint] {
        &self.components[c]
    }

    fn check_permutation(&self, sigma: &[usize]) -> Result<()> {
        check_permutation(sigma, self.components.len())
    }

    /// Moves component `i` to position `sigma[i]`. Returns the new layout
    /// and, for every new arrow index, the old arrow index.
    fn permuted(&self, sigma: &[usize]) -> Result<(Layout, Vec<usize>)> {
        self.check_permutation(sigma)?;
        let old = self.labeled();
        let mut seqs = vec![Vec::new(); old.len()];
        for (i, seq) in old.into_iter().enumerate() {
            seqs[sigma[i]] = seq;
        }
        let (layout, labels) = Layout::from_labeled(&seqs)?;
        Ok((layout, labels.into_iter().map(|l| l as usize).collect()))
    }

    fn rebased(&self, component: usize, offset: usize) -> Result<(Layout, Vec<usize>)> {
        let n = self.components.len();
        if component >= n {
            return Err(Error::ComponentRange {
                index: component,
                n,
            });
        }
        let len = self.components[component].len();
        if offset > len {
            return Err(Error::OffsetRange { offset, len });
        }
        let mut seqs = self.labeled();
        if len > 0 {
            seqs[component].rotate_left(offset % len);
        }
        let (layout, labels) = Layout::from_labeled(&seqs)?;
        Ok((layout, labels.into_iter().map(|l| l as usize).collect()))
    }

    /// Keeps only the listed components (in the given order) and the arrows
    /// with both ends among them.
    fn restricted(&self, keep: &[usize]) -> Result<(Layout, Vec<usize>)> {
        let n = self.components.len();
        if keep.is_empty() {
            return Err(Error::NoComponents);
        }
        let mut new_index = vec![None; n];
        for (k, &c) in keep.iter().enumerate() {
            if c >= n {
                return Err(Error::ComponentRange { index: c, n });
            }
            if new_index[c].is_some() {
                return Err(Error::BadPermutation { n });
            }
            new_index[c] = Some(k);
        }
        let inside = |a: &Arrow| {
            new_index[a.tail.component].is_some() && new_index[a.head.component].is_some()
        };
        let seqs: Vec<Vec<(u32, Role)>> = keep
            .iter()
            .map(|&c| {
                self.components[c]
                    .iter()
                    .filter(|e| inside(&self.arrows[e.arrow]))
                    .map(|e| (e.arrow as u32, e.role))
                    .collect()
            })
            .collect();
        let (layout, labels) = Layout::from_labeled(&seqs)?;
        Ok((layout, labels.into_iter().map(|l| l as usize).collect()))
    }

    pub(crate) fn write_tokens(&self, out: &mut String, sign: impl Fn(usize) -> Option<Sign>) {
        let mut first = true;
        for (c, seq) in self.components.iter().enumerate() {
            if c > 0 {
                if !first {
                    out.push(' ');
                }
                out.push('/');
                first = false;
            }
            for e in seq {
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push(e.role.symbol());
                out.push_str(&(e.arrow + 1).to_string());
                if let Some(s) = sign(e.arrow) {
                    out.push(s.symbol());
                }
            }
        }
    }
}

pub(crate) fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::BadPermutation { n });
    }
    let mut hit = vec![false; n];
    for &s in sigma {
        if s >= n || hit[s] {
            return Err(Error::BadPermutation { n });
        }
        hit[s] = true;
    }
    Ok(())
}

/// One endpoint of unvalidated Gauss data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawEndpoint {
    pub label: u32,
    pub role: Role,
    pub sign: Sign,
}

/// Unvalidated Gauss data: per component, the endpoints in order from the
/// base point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGauss {
    pub components: Vec<Vec<RawEndpoint>>,
}

/// A based, oriented, signed Gauss diagram of a link.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    layout: Layout,
    signs: Vec<Sign>,
}

impl GaussDiagram {
    /// Checks raw Gauss data and builds the diagram.
    pub fn validate(raw: &RawGauss) -> Result<GaussDiagram> {
        let mut sign_of: BTreeMap<u32, Sign> = BTreeMap::new();
        let seqs: Vec<Vec<(u32, Role)>> = raw
            .components
            .iter()
            .map(|seq| seq.iter().map(|e| (e.label, e.role)).collect())
            .collect();
        let (layout, labels) = Layout::from_labeled(&seqs)?;
        for e in raw.components.iter().flatten() {
            if let Some(&s) = sign_of.get(&e.label) {
                if s != e.sign {
                    return Err(Error::SignMismatch { label: e.label });
                }
            } else {
                sign_of.insert(e.label, e.sign);
            }
        }
        let signs = labels.iter().map(|l| sign_of[l]).collect();
        Ok(GaussDiagram { layout, signs })
    }

    /// Diagram with `n` components and no crossings.
    pub fn unlink(n: usize) -> GaussDiagram {
        GaussDiagram::validate(&RawGauss {
            components: vec![Vec::new(); n.max(1)],
        })
        .expect("empty diagram is valid")
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn n_components(&self) -> usize {
        self.layout.n_components()
    }

    pub fn n_arrows(&self) -> usize {
        self.layout.n_arrows()
    }

    pub fn arrows(&self) -> &[Arrow] {
        self.layout.arrows()
    }

    pub fn sign(&self, arrow: usize) -> Sign {
        self.signs[arrow]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn to_raw(&self) -> RawGauss {
        RawGauss {
            components: self
                .layout
                .components
                .iter()
                .map(|seq| {
                    seq.iter()
                        .map(|e| RawEndpoint {
                            label: e.arrow as u32 + 1,
                            role: e.role,
                            sign: self.signs[e.arrow],
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn with_layout(layout: Layout, old_index: &[usize], old_signs: &[Sign]) -> GaussDiagram {
        let signs = old_index.iter().map(|&i| old_signs[i]).collect();
        GaussDiagram { layout, signs }
    }

    /// Moves component `i` to position `sigma[i]` (0-based).
    pub fn permute_components(&self, sigma: &[usize]) -> Result<GaussDiagram> {
        let (layout, old) = self.layout.permuted(sigma)?;
        Ok(Self::with_layout(layout, &old, &self.signs))
    }

    /// Moves the base point of `component` forward by `offset` endpoints.
    pub fn rebase(&self, component: usize, offset: usize) -> Result<GaussDiagram> {
        let (layout, old) = self.layout.rebased(component, offset)?;
        Ok(Self::with_layout(layout, &old, &self.signs))
    }

    /// Sub-diagram on the listed components, renumbered in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Result<GaussDiagram> {
        let (layout, old) = self.layout.restricted(keep)?;
        Ok(Self::with_layout(layout, &old, &self.signs))
    }

    /// Same diagram with every crossing sign flipped.
    pub fn negated(&self) -> GaussDiagram {
        GaussDiagram {
            layout: self.layout.clone(),
            signs: self.signs.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Whether the diagram comes from a link projection in the plane.
    ///
    /// Each crossing gets the cyclic order of its four half-edges that its
    /// sign dictates, and the faces of the resulting ribbon graph are
    /// counted. The diagram is planar exactly when every connected piece
    /// (components joined through crossings) has Euler characteristic 2.
    pub fn is_classical(&self) -> bool {
        let comps = self.layout.components();
        let mut offset = Vec::with_capacity(comps.len());
        let mut total = 0;
        for c in comps {
            offset.push(total);
            total += c.len();
        }
        // half-edge 2e leaves endpoint e along the strand, 2e + 1 enters it
        let id = |s: Slot| offset[s.component] + s.position;
        let mut next_ccw = vec![usize::MAX; 2 * total];
        for (a, arrow) in self.arrows().iter().enumerate() {
            let (o, u) = (id(arrow.tail), id(arrow.head));
            let order = match self.signs[a] {
                Sign::Pos => [2 * o, 2 * u, 2 * o + 1, 2 * u + 1],
                Sign::Neg => [2 * o, 2 * u + 1, 2 * o + 1, 2 * u],
            };
            for k in 0..4 {
                next_ccw[order[k]] = order[(k + 1) % 4];
            }
        }
        let far_end = |h: usize| {
            let e = h / 2;
            let c = offset.partition_point(|&x| x <= e) - 1;
            let (start, len) = (offset[c], comps[c].len());
            let p = e - start;
            if h % 2 == 0 {
                2 * (start + (p + 1) % len) + 1
            } else {
                2 * (start + (p + len - 1) % len)
            }
        };
        let mut seen = vec![false; 2 * total];
        let mut faces = 0;
        for h0 in 0..2 * total {
            if seen[h0] {
                continue;
            }
            faces += 1;
            let mut h = h0;
            while !seen[h] {
                seen[h] = true;
                h = next_ccw[far_end(h)];
            }
        }
        let mut parent: Vec<usize> = (0..comps.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for arrow in self.arrows() {
            let (a, b) = (root(&mut parent, arrow.tail.component), root(&mut parent, arrow.head.component));
            parent[a] = b;
        }
        let pieces = (0..comps.len())
            .filter(|&c| !comps[c].is_empty() && root(&mut parent, c) == c)
            .count();
        faces == self.n_arrows() + 2 * pieces
    }

    /// Number of arrows from component `i` (tail, over) to component `j`
    /// (head, under).
    pub fn overcrossings(&self, i: usize, j: usize) -> usize {
        self.arrows()
            .iter()
            .filter(|a| a.tail.component == i && a.head.component == j)
            .count()
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_gauss_code(self))
    }
}

/// Seeded random (not necessarily realizable) Gauss diagram with the given
/// numbers of components and arrows.
pub fn random_diagram(seed: u64, n_components: usize, n_arrows: usize) -> GaussDiagram {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = n_components.max(1);
    let mut components: Vec<Vec<RawEndpoint>> = vec![Vec::new(); n];
    for label in 1..=n_arrows as u32 {
        let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
        for role in [Role::Tail, Role::Head] {
            components[rng.gen_range(0..n)].push(RawEndpoint { label, role, sign });
        }
    }
    for seq in &mut components {
        seq.shuffle(&mut rng);
    }
    GaussDiagram::validate(&RawGauss { components }).expect("generated data is consistent")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(comps: &[&[(u32, Role, Sign)]]) -> RawGauss {
        RawGauss {
            components: comps
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|&(label, role, sign)| RawEndpoint { label, role, sign })
                        .collect()
                })
                .collect(),
        }
    }

    #[test]
    fn empty_unknot_is_valid() {
        let g = GaussDiagram::validate(&raw(&[&[]])).unwrap();
        assert_eq!(g.n_components(), 1);
        assert_eq!(g.n_arrows(), 0);
    }

    #[test]
    fn dangling_arrow_rejected() {
        use Role::*;
        use Sign::*;
        let r = raw(&[&[(1, Tail, Pos), (2, Head, Pos), (1, Head, Pos), (3, Tail, Pos)]]);
        assert!(matches!(
            GaussDiagram::validate(&r),
            Err(Error::DanglingArrow { .. })
        ));
        let r = raw(&[&[(1, Tail, Pos), (2, Head, Pos), (1, Head, Pos), (2, Tail, Pos), (3, Tail, Pos)]]);
        assert_eq!(
            GaussDiagram::validate(&r),
            Err(Error::DanglingArrow { label: 3, count: 1 })
        );
    }

    #[test]
    fn role_and_sign_errors() {
        use Role::*;
        use Sign::*;
        let r = raw(&[&[(1, Tail, Pos), (1, Tail, Pos)]]);
        assert_eq!(GaussDiagram::validate(&r), Err(Error::RoleError { label: 1 }));
        let r = raw(&[&[(1, Tail, Pos), (1, Head, Neg)]]);
        assert_eq!(GaussDiagram::validate(&r), Err(Error::SignMismatch { label: 1 }));
        assert_eq!(
            GaussDiagram::validate(&RawGauss::default()),
            Err(Error::NoComponents)
        );
    }

    #[test]
    fn identity_permutation_and_swap() {
        let hopf = parse_gauss_code("O1+ U2+ / U1+ O2+").unwrap();
        assert_eq!(hopf.permute_components(&[0, 1]).unwrap(), hopf);
        let swapped = hopf.permute_components(&[1, 0]).unwrap();
        // old arrow 1 (tail on component 0) now has its tail on component 1
        assert_eq!(emit_gauss_code(&swapped), "U1+ O2+ / O1+ U2+");
        assert!(matches!(
            hopf.permute_components(&[0, 0]),
            Err(Error::BadPermutation { .. })
        ));
    }

    #[test]
    fn rebase_edges() {
        let g = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        assert_eq!(g.rebase(0, 0).unwrap(), g);
        assert_eq!(g.rebase(0, 6).unwrap(), g);
        assert_eq!(
            g.rebase(0, 7),
            Err(Error::OffsetRange { offset: 7, len: 6 })
        );
        let r = g.rebase(0, 1).unwrap();
        assert_eq!(emit_gauss_code(&r), "U1+ O2+ U3+ O1+ U2+ O3+");
    }

    #[test]
    fn restrict_drops_foreign_arrows() {
        let g = parse_gauss_code("O1+ U2+ / U1+ O3- / U3- O2+").unwrap();
        let sub = g.restrict(&[0, 2]).unwrap();
        assert_eq!(emit_gauss_code(&sub), "U1+ / O1+");
        let sub = g.restrict(&[2, 1]).unwrap();
        assert_eq!(emit_gauss_code(&sub), "U1- / O1-");
    }

    #[test]
    fn planarity() {
        for code in [
            "O1+ U2+ O3+ U1+ O2+ U3+",
            "U1+ O4+ U3+ O1+ U2+ O5+ U4+ O3+ U5+ O2+",
            "U1- O4- U3- O1- U2- O5- U4- O3- U5- O2-",
            "O1+ U2+ / U1+ O2+",
            "O1+ U1+",
            "",
            " / ",
        ] {
            assert!(parse_gauss_code(code).unwrap().is_classical(), "{code}");
        }
        // the granny knot's Alexander polynomial on five virtual crossings
        let virtual_knot = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U4+ O5+ U3+ O4+ U5+").unwrap();
        assert!(!virtual_knot.is_classical());
        assert!(!parse_gauss_code("O1+ O2+ U1+ U2+").unwrap().is_classical());
        for word in [&[1i32, -2, 1, -2, 1, -2][..], &[1, 1, 1, 2, -1, 2], &[1, 2, 3, -2, 1, -3, 2]] {
            let strands = word.iter().map(|l| l.unsigned_abs() as usize).max().unwrap() + 1;
            let g = braid_closure(strands, word).unwrap();
            assert!(g.is_classical());
            assert!(g.negated().is_classical());
        }
        for a in [[1, 1, 1], [3, 1, 1], [3, 5, 7], [-3, -3, -5]] {
            assert!(pretzel_gauss_code(&a).unwrap().is_classical(), "{a:?}");
        }
    }
}
