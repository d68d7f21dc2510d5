//! `Z_{n;1}` against a brute-force enumeration of tree diagrams and
//! against link invariance on projections of spatial links.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ropebound_core::arrowgen::build_z;
use ropebound_core::diagram::{pure_braid_generator, Role};
use ropebound_core::geometry::{borromean, braid_link, project, PolyLink, Vec3};
use ropebound_core::invariants::milnor_mu;
use ropebound_core::{ArrowPattern, Carrier};

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn is_tree(parent: &[usize]) -> bool {
    (1..parent.len()).all(|mut v| {
        for _ in 0..parent.len() {
            if v == 0 {
                return true;
            }
            v = parent[v];
        }
        false
    })
}

fn word(v: usize, order: &[Vec<usize>], left: &dyn Fn(usize) -> bool, out: &mut Vec<usize>) {
    let kids = &order[v];
    for &c in kids.iter().rev().filter(|&&c| left(c)) {
        word(c, order, left, out);
    }
    out.push(v);
    for &c in kids.iter().filter(|&&c| !left(c)) {
        word(c, order, left, out);
    }
}

/// Every rooted tree, every order of heads on each string, every split of
/// children into left and right, kept when the trunk's word is `1 2 … n-1`.
fn oracle(n: usize) -> BTreeMap<String, i64> {
    let mut z = BTreeMap::new();
    let total = n.pow(n as u32 - 1);
    for code in 0..total {
        let mut parent = vec![0; n];
        let mut c = code;
        for p in parent.iter_mut().skip(1) {
            *p = c % n;
            c /= n;
        }
        if !is_tree(&parent) {
            continue;
        }
        let kids: Vec<Vec<usize>> = (0..n).map(|v| (1..n).filter(|&k| parent[k] == v).collect()).collect();
        let mut orders = vec![Vec::new()];
        for k in &kids {
            orders = orders
                .into_iter()
                .flat_map(|o: Vec<Vec<usize>>| {
                    permutations(k).into_iter().map(move |p| {
                        let mut o = o.clone();
                        o.push(p);
                        o
                    })
                })
                .collect();
        }
        for order in &orders {
            for mask in 0..1u32 << n {
                let left = |c: usize| mask >> c & 1 == 1;
                if mask & 1 == 1 || (1..n).any(|c| parent[c] == 0 && left(c)) {
                    continue;
                }
                let mut w = Vec::new();
                for &c in &order[0] {
                    word(c, order, &left, &mut w);
                }
                if w != (1..n).collect::<Vec<_>>() {
                    continue;
                }
                let seqs: Vec<Vec<(u32, Role)>> = (0..n)
                    .map(|v| {
                        let mut s: Vec<(u32, Role)> = order[v].iter().map(|&c| (c as u32, Role::Head)).collect();
                        if v != 0 {
                            s.push((v as u32, Role::Tail));
                        }
                        s
                    })
                    .collect();
                let key = ArrowPattern::from_sequences(Carrier::Strings(n), &seqs).unwrap().canonical_key();
                *z.entry(key).or_insert(0) += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    z.retain(|_, c| *c != 0);
    z
}

#[test]
fn generator_matches_brute_force() {
    for n in 2..=5 {
        assert_eq!(build_z(n, 6).unwrap().coefficients(), oracle(n), "n = {n}");
    }
}

fn random_direction(rng: &mut ChaCha8Rng) -> Vec3 {
    Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// `μ̄(seq)` read off a dozen random projections with random base points.
fn readings(p: &PolyLink, seq: &[usize], rng: &mut ChaCha8Rng) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    while out.len() < 12 {
        let Ok(d) = project(p, random_direction(rng)) else {
            continue;
        };
        let c = rng.gen_range(0..p.n_components());
        let len = d.diagram.layout().component(c).len();
        let g = if len == 0 { d.diagram } else { d.diagram.rebase(c, rng.gen_range(0..len)).unwrap() };
        let r = milnor_mu(&g, seq).unwrap();
        out.push((r.reduced, r.modulus));
    }
    out
}

fn assert_constant(p: &PolyLink, seq: &[usize], rng: &mut ChaCha8Rng) -> i64 {
    let r = readings(p, seq, rng);
    assert!(r.windows(2).all(|w| w[0] == w[1]), "{seq:?}: {r:?}");
    r[0].0
}

#[test]
fn triple_linking_of_spatial_borromean_rings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let b = borromean(2.0, 1.0, 48).unwrap();
    let v = assert_constant(&b, &[1, 2, 0], &mut rng);
    assert_eq!(v.abs(), 1);
    assert_eq!(assert_constant(&b, &[2, 1, 0], &mut rng), -v);
}

fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

fn commutator(a: &[i32], b: &[i32]) -> Vec<i32> {
    [a.to_vec(), b.to_vec(), inverse(a), inverse(b)].concat()
}

#[test]
fn four_and_five_component_invariants_are_projection_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nontrivial = 0;
    for seed in 0..24u64 {
        let n = if seed % 3 == 0 { 5 } else { 4 };
        let mut r = ChaCha8Rng::seed_from_u64(seed + 500);
        let mut gen = || {
            let i = r.gen_range(1..n);
            let j = r.gen_range(i + 1..=n);
            let inv = r.gen_bool(0.5);
            pure_braid_generator(i, j, inv)
        };
        let (a, b, c) = (gen(), gen(), gen());
        let p = braid_link(n, &commutator(&commutator(&a, &b), &c)).unwrap();
        let seqs: &[&[usize]] = if n == 4 {
            &[&[1, 2, 3, 0], &[3, 1, 2, 0], &[0, 2, 3, 1]]
        } else {
            &[&[1, 2, 3, 4, 0], &[4, 2, 1, 3, 0]]
        };
        for seq in seqs {
            if assert_constant(&p, seq, &mut rng) != 0 {
                nontrivial += 1;
            }
        }
    }
    assert!(nontrivial >= 10, "only {nontrivial} nonzero readings");
}
