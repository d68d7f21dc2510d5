//! Signed counting of arrow-pattern embeddings into Gauss diagrams.
//!
//! An embedding sends the arrows of a pattern injectively to arrows of the
//! diagram so that string `i` lands on component `i`, tails go to tails and
//! heads to heads, and the order of endpoints read from each base point is
//! preserved. `pair` sums the product of the image signs over all
//! embeddings. The empty pattern has exactly one (empty) embedding, so its
//! pairing is 1.

use rayon::prelude::*;

use crate::arrowgen::ArrowPolynomial;
use crate::diagram::{ArrowPattern, GaussDiagram, Slot};
use crate::error::{Error, Result};

fn check_components(a: &ArrowPattern, g: &GaussDiagram) -> Result<()> {
    if a.n_components() != g.n_components() {
        return Err(Error::ComponentMismatch {
            pattern: a.n_components(),
            diagram: g.n_components(),
        });
    }
    Ok(())
}

/// `<A, G>` by depth-first assignment with order pruning.
pub fn pair(a: &ArrowPattern, g: &GaussDiagram) -> Result<i64> {
    check_components(a, g)?;
    let pat = a.layout().arrows();
    if pat.len() > g.n_arrows() {
        return Ok(0);
    }
    let garrows = g.arrows();
    let candidates: Vec<Vec<usize>> = pat
        .iter()
        .map(|pa| {
            garrows
                .iter()
                .enumerate()
                .filter(|(_, ga)| {
                    ga.tail.component == pa.tail.component && ga.head.component == pa.head.component
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(0);
    }
    let mut search = Search {
        pat,
        garrows,
        signs: g.signs().iter().map(|s| s.value()).collect(),
        candidates: &candidates,
        used: vec![false; garrows.len()],
        placed: vec![Vec::new(); g.n_components()],
    };
    Ok(search.run(0, 1))
}

struct Search<'a> {
    pat: &'a [crate::diagram::Arrow],
    garrows: &'a [crate::diagram::Arrow],
    signs: Vec<i64>,
    candidates: &'a [Vec<usize>],
    used: Vec<bool>,
    // per component: (pattern position, diagram position) pairs assigned so far
    placed: Vec<Vec<(usize, usize)>>,
}

impl Search<'_> {
    fn compatible(&self, p: Slot, g: Slot) -> bool {
        self.placed[p.component]
            .iter()
            .all(|&(pp, gp)| (pp < p.position) == (gp < g.position))
    }

    fn run(&mut self, k: usize, sign: i64) -> i64 {
        if k == self.pat.len() {
            return sign;
        }
        let pa = self.pat[k];
        let mut total = 0;
        for &gi in &self.candidates[k] {
            if self.used[gi] {
                continue;
            }
            let ga = self.garrows[gi];
            if !self.compatible(pa.tail, ga.tail) || !self.compatible(pa.head, ga.head) {
                continue;
            }
            // tail and head of one arrow on the same component must keep their order too
            if pa.tail.component == pa.head.component
                && (pa.tail.position < pa.head.position) != (ga.tail.position < ga.head.position)
            {
                continue;
            }
            self.used[gi] = true;
            self.placed[pa.tail.component].push((pa.tail.position, ga.tail.position));
            self.placed[pa.head.component].push((pa.head.position, ga.head.position));
            total += self.run(k + 1, sign * self.signs[gi]);
            self.placed[pa.head.component].pop();
            self.placed[pa.tail.component].pop();
            self.used[gi] = false;
        }
        total
    }
}

/// `<Z, G>` = sum of coefficient times pairing over the terms of `Z`.
pub fn pair_poly(z: &ArrowPolynomial, g: &GaussDiagram) -> Result<i64> {
    let terms: Vec<_> = z.terms().collect();
    for (p, _) in &terms {
        check_components(p, g)?;
    }
    terms
        .par_iter()
        .map(|(p, c)| pair(p, g).map(|v| v * c))
        .try_reduce(|| 0, |x, y| Ok(x + y))
}

/// Reference implementation of `pair`: tries every k-subset of diagram
/// arrows with every bijection and checks the embedding conditions from
/// scratch.
pub fn pair_oracle(a: &ArrowPattern, g: &GaussDiagram) -> Result<i64> {
    check_components(a, g)?;
    let k = a.n_arrows();
    let m = g.n_arrows();
    if k > m {
        return Ok(0);
    }
    let mut total = 0i64;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut perm = subset.clone();
        for_each_permutation(&mut perm, 0, &mut |image| {
            if is_embedding(a, g, image) {
                total += image.iter().map(|&i| g.sign(i).value()).product::<i64>();
            }
        });
        if !next_combination(&mut subset, m) {
            break;
        }
    }
    Ok(total)
}

fn is_embedding(a: &ArrowPattern, g: &GaussDiagram, image: &[usize]) -> bool {
    let pat = a.layout().arrows();
    let garrows = g.arrows();
    let mut ends: Vec<(Slot, Slot)> = Vec::with_capacity(2 * pat.len());
    for (pa, &gi) in pat.iter().zip(image) {
        let ga = garrows[gi];
        if pa.tail.component != ga.tail.component || pa.head.component != ga.head.component {
            return false;
        }
        ends.push((pa.tail, ga.tail));
        ends.push((pa.head, ga.head));
    }
    for (i, &(p1, g1)) in ends.iter().enumerate() {
        for &(p2, g2) in &ends[i + 1..] {
            if p1.component == p2.component
                && (p1.position < p2.position) != (g1.position < g2.position)
            {
                return false;
            }
        }
    }
    true
}

fn for_each_permutation(v: &mut [usize], start: usize, f: &mut impl FnMut(&[usize])) {
    if start == v.len() {
        f(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        for_each_permutation(v, start + 1, f);
        v.swap(start, i);
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
