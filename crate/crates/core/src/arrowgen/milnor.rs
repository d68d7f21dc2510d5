//! Tree arrow polynomials `Z_{n;1}` for Milnor invariants, built by
//! stacking elementary trees onto the strings of the previous polynomial.

use super::ArrowPolynomial;
use crate::diagram::{ArrowPattern, Carrier, Role};
use crate::error::{Error, Result};

/// Default cap on the number of strings.
pub const DEFAULT_MILNOR_CAP: usize = 6;

#[cfg(test)]
const Z_TERM_COUNTS: [usize; 5] = [1, 3, 13, 67, 381];

/// The two one-arrow trees on a pair of strings: an existing string of a
/// tree diagram and a new string appended last.
///
/// Every term of `Z_{n;1}` is a rooted tree on its strings with the trunk
/// (string 0) as root. Arrows point toward the root, and on each other
/// string the outgoing tail sits below all incoming heads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryTree {
    /// Hangs the new string as a leaf below `i`: an arrow from the new
    /// string to `i`, its head placed just above the tail of `i` (at the
    /// bottom of the trunk).
    E,
    /// Inserts the new string between `i` and its parent: the tail of `i`
    /// now points into the new string, whose own tail takes over the old
    /// head on the parent. Not defined on the trunk.
    EBar,
}

fn tail_position(seq: &[(u32, Role)]) -> Option<usize> {
    seq.iter().position(|&(_, r)| r == Role::Tail)
}

/// `P ≺_i t`: stacks tree `t` on string `string` (0-based) of the tree
/// diagram `P`.
pub fn stack(p: &ArrowPattern, string: usize, tree: ElementaryTree) -> Result<ArrowPattern> {
    let Carrier::Strings(k) = p.carrier() else {
        return Err(Error::BadString { index: string, n: 0 });
    };
    if string >= k {
        return Err(Error::BadString { index: string, n: k });
    }
    let mut seqs = p.sequences();
    let label = p.n_arrows() as u32;
    let tail = tail_position(&seqs[string]);
    if seqs
        .iter()
        .enumerate()
        .any(|(s, q)| q.iter().filter(|e| e.1 == Role::Tail).count() != usize::from(s != 0))
    {
        return Err(Error::BadParams("stacking needs a tree diagram rooted at string 1".into()));
    }
    match tree {
        ElementaryTree::E => {
            let at = tail.unwrap_or(seqs[string].len());
            seqs[string].insert(at, (label, Role::Head));
            seqs.push(vec![(label, Role::Tail)]);
        }
        ElementaryTree::EBar => {
            let Some(at) = tail else {
                return Err(Error::BadParams("ē cannot be stacked on the trunk".into()));
            };
            let old = seqs[string][at].0;
            seqs[string][at] = (label, Role::Tail);
            seqs.push(vec![(label, Role::Head), (old, Role::Tail)]);
        }
    }
    ArrowPattern::from_sequences(Carrier::Strings(k + 1), &seqs)
}

/// The single-arrow polynomial `Z_{2;1}`.
pub fn z21() -> ArrowPolynomial {
    let trunk = ArrowPattern::from_sequences(Carrier::Strings(1), &[vec![]]).expect("empty string");
    let mut z = ArrowPolynomial::new();
    z.add(stack(&trunk, 0, ElementaryTree::E).expect("string 0 exists"), 1);
    z
}

/// `Z_{n;1}`: the signed sum of tree diagrams that expand, through the
/// Magnus expansion of the trunk's longitude, to the word `X_2 X_3 … X_n`.
///
/// A non-trunk string `v` contributes `(L reversed) X_v (R)`, where its
/// children split into a left group `L` and a right group `R`, each child
/// contributing its own word. Every left child costs a factor `-1`. On
/// the string, the children's heads appear top to bottom as any
/// interleaving of `L` (reversed) with `R`, above the tail of `v`. For
/// `n <= 3` this agrees with stacking `e` on any string and `ē` on any
/// non-trunk string of `Z_{n-1;1}`.
pub fn build_z(n: usize, cap: usize) -> Result<ArrowPolynomial> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Milnor string count",
            value: n,
            cap,
        });
    }
    if n < 2 {
        return Err(Error::BadParams("Z_{n;1} needs n >= 2".into()));
    }
    let mut z = ArrowPolynomial::new();
    for trunk_children in forests(1, n) {
        let mut children = vec![Vec::new(); n];
        let mut sign = 1;
        children[0] = trunk_children.iter().map(|t| t.root).collect();
        for t in &trunk_children {
            t.collect(&mut children, &mut sign);
        }
        let seqs: Vec<Vec<(u32, Role)>> = children
            .iter()
            .enumerate()
            .map(|(v, kids)| {
                let mut seq: Vec<(u32, Role)> = kids.iter().map(|&c| (c as u32, Role::Head)).collect();
                if v != 0 {
                    seq.push((v as u32, Role::Tail));
                }
                seq
            })
            .collect();
        z.add(ArrowPattern::from_sequences(Carrier::Strings(n), &seqs)?, sign);
    }
    Ok(z)
}

/// One way of reading a run of letters as a subtree: its root, and the
/// root's children from top to bottom with a flag for the left group.
#[derive(Clone, Debug)]
struct Subtree {
    root: usize,
    children: Vec<(Subtree, bool)>,
}

impl Subtree {
    fn collect(&self, children: &mut [Vec<usize>], sign: &mut i64) {
        children[self.root] = self.children.iter().map(|(c, _)| c.root).collect();
        for (c, left) in &self.children {
            if *left {
                *sign = -*sign;
            }
            c.collect(children, sign);
        }
    }
}

/// All readings of the letters `a..b` as a sequence of subtrees.
fn forests(a: usize, b: usize) -> Vec<Vec<Subtree>> {
    if a == b {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for mid in a + 1..=b {
        for first in subtrees(a, mid) {
            for rest in forests(mid, b) {
                let mut f = vec![first.clone()];
                f.extend(rest);
                out.push(f);
            }
        }
    }
    out
}

fn subtrees(a: usize, b: usize) -> Vec<Subtree> {
    let mut out = Vec::new();
    for root in a..b {
        for left in forests(a, root) {
            let left: Vec<Subtree> = left.into_iter().rev().collect();
            for right in forests(root + 1, b) {
                for children in interleavings(&left, &right) {
                    out.push(Subtree { root, children });
                }
            }
        }
    }
    out
}

fn interleavings(left: &[Subtree], right: &[Subtree]) -> Vec<Vec<(Subtree, bool)>> {
    match (left.split_first(), right.split_first()) {
        (None, None) => vec![Vec::new()],
        (Some(_), None) => vec![left.iter().map(|t| (t.clone(), true)).collect()],
        (None, Some(_)) => vec![right.iter().map(|t| (t.clone(), false)).collect()],
        (Some((l, lrest)), Some((r, rrest))) => {
            let mut out = Vec::new();
            for mut tail in interleavings(lrest, right) {
                tail.insert(0, (l.clone(), true));
                out.push(tail);
            }
            for mut tail in interleavings(left, rrest) {
                tail.insert(0, (r.clone(), false));
                out.push(tail);
            }
            out
        }
    }
}

/// `σ(Z)`: string `i` of every term moves to position `sigma[i]`.
pub fn permute_polynomial(z: &ArrowPolynomial, sigma: &[usize]) -> Result<ArrowPolynomial> {
    z.permute(sigma)
}
