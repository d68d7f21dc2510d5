//! Closed-form lower bounds and the reports assembled from them.
//!
//! Lengths are ropelengths: lengths of a link scaled to unit thickness.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::constants::{binomial, c_n, c_tilde, d0};
use super::report::{BoundEntry, BoundReport, Status};
use crate::error::{Error, Result};

/// Length every closed curve of unit thickness exceeds.
const LENGTH_FLOOR: f64 = 2.0 * PI;

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

pub fn length_from_crossings_34(cr: f64) -> f64 {
    (4.0 * PI / 11.0 * cr).powf(0.75)
}

pub fn length_from_crossings_12(cr: f64) -> f64 {
    4.0 * (PI * cr).sqrt()
}

/// `½(d₀ + √(d₀² + 64π·Cr))`.
pub fn length_from_crossings_quadratic(cr: f64) -> f64 {
    let d = d0();
    0.5 * (d + (d * d + 64.0 * PI * cr).sqrt())
}

/// `Ln^{4/3} >= (4π/11)·acr`, solved for `Ln`.
pub fn length_from_acr_43(acr: f64) -> f64 {
    (4.0 * PI / 11.0 * acr).powf(0.75)
}

/// `Ln² >= 16π·acr`, solved for `Ln`.
pub fn length_from_acr_2(acr: f64) -> f64 {
    (16.0 * PI * acr).sqrt()
}

/// Larger root of `¼Cr(Cr−1) + 1/24 = |c₂|`, or 0 when `c₂ = 0`.
pub fn crossings_from_c2_quadratic(c2: i64) -> f64 {
    if c2 == 0 {
        return 0.0;
    }
    let c = c2.unsigned_abs() as f64;
    0.5 * (1.0 + (1.0 / 3.0 + 16.0 * c).sqrt())
}

/// Smallest `Cr` with `Cr²/8 >= |c₂|`.
pub fn crossings_from_c2_square(c2: i64) -> f64 {
    (8.0 * c2.unsigned_abs() as f64).sqrt()
}

/// Smallest `Cr >= 2` with `¼Cr(Cr−1)(Cr−2) >= |V₃|`.
pub fn crossings_from_v3(v3: i64) -> f64 {
    let target = v3.unsigned_abs() as f64;
    if target == 0.0 {
        return 0.0;
    }
    let f = |x: f64| 0.25 * x * (x - 1.0) * (x - 2.0);
    let (mut lo, mut hi) = (2.0, 3.0);
    while f(hi) < target {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// `(2^{n+1} n! |c_{2n}|)^{1/2n}`.
pub fn crossings_from_conway(n: usize, c: i64) -> f64 {
    (2f64.powi(n as i32 + 1) * factorial(n) * c.unsigned_abs() as f64).powf(1.0 / (2 * n) as f64)
}

/// `√(2n/3)·|c_{2n}|^{1/2n}`, the simplified form of
/// [`crossings_from_conway`].
pub fn crossings_from_conway_simple(n: usize, c: i64) -> f64 {
    (2.0 * n as f64 / 3.0).sqrt() * (c.unsigned_abs() as f64).powf(1.0 / (2 * n) as f64)
}

/// The quadratic crossing-number length bound fed with
/// [`crossings_from_conway_simple`].
pub fn length_from_conway(n: usize, c: i64) -> f64 {
    let d = d0();
    0.5 * (d + (d * d + 64.0 * PI * crossings_from_conway_simple(n, c)).sqrt())
}

/// `2π + 2π√x`, for `x` a total linking number, an asymptotic crossing
/// number or `2g − 1`.
pub fn cone_length(x: f64) -> f64 {
    2.0 * PI + 2.0 * PI * x.sqrt()
}

/// `(3 Σ|lk|)^{3/4} / √(n−1)`.
pub fn length_from_lk_34(n: usize, lk_sum: f64) -> f64 {
    (3.0 * lk_sum).powf(0.75) / (n as f64 - 1.0).sqrt()
}

/// `n √(32π) / √(n²−1) · √(Σ|lk|)`.
pub fn length_from_lk_12(n: usize, lk_sum: f64) -> f64 {
    let n = n as f64;
    n * (32.0 * PI).sqrt() / (n * n - 1.0).sqrt() * lk_sum.sqrt()
}

/// `(3/2 PCr)^{3/4} / √(n−1)`.
pub fn length_from_pcr_34(n: usize, pcr: f64) -> f64 {
    (1.5 * pcr).powf(0.75) / (n as f64 - 1.0).sqrt()
}

/// `n √(16π) / √(n²−1) · √PCr`.
pub fn length_from_pcr_12(n: usize, pcr: f64) -> f64 {
    let n = n as f64;
    n * (16.0 * PI).sqrt() / (n * n - 1.0).sqrt() * pcr.sqrt()
}

fn root(n: usize, x: f64) -> f64 {
    x.powf(1.0 / (n as f64 - 1.0))
}

/// `n^{1/4} ([μ̄]^{1/(n−1)})^{3/4}`.
pub fn length_from_milnor(n: usize, bracket: i64) -> f64 {
    (n as f64).powf(0.25) * root(n, bracket as f64).powf(0.75)
}

/// `(n−1)/3 · [μ̄]^{1/(n−1)}`.
pub fn crossings_from_milnor(n: usize, bracket: i64) -> f64 {
    (n as f64 - 1.0) / 3.0 * root(n, bracket as f64)
}

/// `Ln^{4/3} >= 10 n^{1/3} c_n / (3(n−1)) · [μ̄]^{1/(n−1)}`, solved for `Ln`.
pub fn length_from_milnor_cn(n: usize, bracket: i64) -> f64 {
    let nf = n as f64;
    (10.0 * nf.cbrt() * c_n(n) / (3.0 * (nf - 1.0)) * root(n, bracket as f64)).powf(0.75)
}

/// As [`length_from_milnor_cn`] with `c̃_n` in place of `c_n`; needs
/// vanishing indeterminacy.
pub fn length_from_milnor_brunnian_43(n: usize, mu: i64) -> f64 {
    let nf = n as f64;
    (10.0 * nf.cbrt() * c_tilde(n) / (3.0 * (nf - 1.0)) * root(n, mu.unsigned_abs() as f64)).powf(0.75)
}

/// `Ln² >= 4³π c̃_n n²/(n²−1) |μ̄|^{1/(n−1)}`, solved for `Ln`.
pub fn length_from_milnor_brunnian_2(n: usize, mu: i64) -> f64 {
    let nf = n as f64;
    (64.0 * PI * c_tilde(n) * nf * nf / (nf * nf - 1.0) * root(n, mu.unsigned_abs() as f64)).sqrt()
}

/// Upper bound `(11 / rop)^{1/3}` on the embedding thickness of a link
/// with ropelength `rop`.
pub fn tau_from_rop(rop: f64) -> Result<f64> {
    if !(rop > 0.0) {
        return Err(Error::NonPositive(rop));
    }
    Ok((11.0 / rop).cbrt())
}

/// `Σ_{i1<…<ik} a_{i1}⋯a_{ik}`, by the elementary symmetric recurrence.
pub fn elementary_symmetric(a: &[f64], k: usize) -> f64 {
    let mut e = vec![0.0; k + 1];
    e[0] = 1.0;
    for &x in a {
        for j in (1..=k).rev() {
            e[j] += e[j - 1] * x;
        }
    }
    e[k]
}

/// `N^{−k} C(N, k) (Σ a)^k`, the maximum of [`elementary_symmetric`] for
/// a fixed sum.
pub fn elementary_symmetric_bound(a: &[f64], k: usize) -> f64 {
    let n = a.len();
    let s: f64 = a.iter().sum();
    binomial(n, k) / (n as f64).powi(k as i32) * s.powi(k as i32)
}

/// Known quantities of a knot. Lengths are at unit thickness.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotInputs {
    /// Crossing number.
    pub cr: Option<f64>,
    /// Average crossing number, or a lower bound of it.
    pub acr: Option<f64>,
    /// `c_{2n}` keyed by `n`.
    #[serde(default)]
    pub c2n: BTreeMap<usize, i64>,
    pub v3: Option<i64>,
    /// Asymptotic crossing number, asserted by the caller.
    pub ac: Option<f64>,
    /// Genus, asserted by the caller.
    pub genus: Option<u32>,
    /// Ropelength.
    pub ln: Option<f64>,
}

/// Known quantities of an `n`-component link. Lengths are at unit
/// thickness.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkInputs {
    pub n: usize,
    /// Linking numbers; only entries above the diagonal are read.
    pub lk: Option<Vec<Vec<i64>>>,
    /// Total linking number of each component with the rest. Derived from
    /// `lk` when absent.
    pub lk_totals: Option<Vec<f64>>,
    /// Pairwise crossing number, or a lower bound of it.
    pub pcr: Option<f64>,
    /// `[μ̄]` of a top Milnor invariant.
    pub mu_bracket: Option<i64>,
    /// Set when the indeterminacy of the top invariant vanishes, as for
    /// Brunnian links; `mu_bracket` is then `|μ̄|`.
    #[serde(default)]
    pub brunnian: bool,
    /// Crossing number.
    pub cr: Option<f64>,
    /// Asymptotic crossing numbers of each component with the rest,
    /// asserted by the caller.
    pub ac: Option<Vec<f64>>,
    /// Genera of each component in the complement of the rest, asserted
    /// by the caller.
    pub genus: Option<Vec<u32>>,
    /// Per-component lengths.
    pub lengths: Option<Vec<f64>>,
    /// Ropelength of the whole link.
    pub ln: Option<f64>,
}

const BS_CR: &str = "Buck–Simon crossing-number length bound";
const DIAO: &str = "Diao quadratic crossing-number length bound";
const BS_ACR: &str = "Buck–Simon average-crossing length bound";
const LIN_WANG: &str = "Lin–Wang c2 crossing bound";
const PV: &str = "Polyak–Viro c2 crossing bound";
const WILLERTON: &str = "Willerton V3 crossing bound";
const CONWAY_CR: &str = "Conway coefficient crossing bound";
const CONWAY_LN: &str = "Conway coefficient length bound";
const CONE: &str = "cone-surface length bound";
const LK: &str = "linking-number length bound";
const PCR: &str = "pairwise-crossing length bound";
const MILNOR: &str = "Milnor linking length and crossing bound";
const MILNOR_CN: &str = "Milnor linking length bound with exact c_n";
const BRUNNIAN: &str = "Brunnian Milnor length bound";

/// Every knot inequality, inapplicable ones included.
pub(crate) fn knot_entries(k: &KnotInputs) -> Vec<BoundEntry> {
    let mut out = Vec::new();
    let with_ln = |e: BoundEntry| match k.ln {
        Some(l) => e.input("ln", l),
        None => e,
    };
    let with_cr = |e: BoundEntry| match k.cr {
        Some(c) => e.input("cr", c),
        None => e,
    };

    let crossing_bounds: [(&str, &str, &str, fn(f64) -> f64); 3] = [
        ("knot.cr.length34", BS_CR, "Ln >= (4π/11·Cr)^{3/4}", length_from_crossings_34),
        ("knot.cr.length12", BS_CR, "Ln >= 4√(π·Cr)", length_from_crossings_12),
        ("knot.cr.quadratic", DIAO, "Ln >= ½(d0 + √(d0² + 64π·Cr))", length_from_crossings_quadratic),
    ];
    for (id, anchor, rel, f) in crossing_bounds {
        let e = BoundEntry::new(id, anchor, rel);
        out.push(match k.cr {
            Some(cr) => with_ln(e.input("cr", cr)).compare(k.ln, f(cr), LENGTH_FLOOR),
            None => e.not_applicable("needs cr"),
        });
    }

    let acr_bounds: [(&str, &str, fn(f64) -> f64); 2] = [
        ("knot.acr.length43", "Ln^{4/3} >= (4π/11)·acr", length_from_acr_43),
        ("knot.acr.length2", "Ln² >= 16π·acr", length_from_acr_2),
    ];
    for (id, rel, f) in acr_bounds {
        let e = BoundEntry::new(id, BS_ACR, rel);
        out.push(match k.acr {
            Some(a) => with_ln(e.input("acr", a)).compare(k.ln, f(a), LENGTH_FLOOR),
            None => e.not_applicable("needs acr"),
        });
    }

    let c2 = k.c2n.get(&1).copied();
    let c2_bounds: [(&str, &str, &str, fn(i64) -> f64); 2] = [
        ("knot.c2.crossing-quadratic", LIN_WANG, "¼Cr(Cr−1) + 1/24 >= |c2|", crossings_from_c2_quadratic),
        ("knot.c2.crossing-square", PV, "Cr²/8 >= |c2|", crossings_from_c2_square),
    ];
    for (id, anchor, rel, f) in c2_bounds {
        let e = BoundEntry::new(id, anchor, rel);
        out.push(match c2 {
            Some(c) => with_cr(e.input("c2", c as f64)).compare(k.cr, f(c), 0.0),
            None => e.not_applicable("needs c2"),
        });
    }
    let e = BoundEntry::new("knot.v3.crossing", WILLERTON, "¼Cr(Cr−1)(Cr−2) >= |V3|");
    out.push(match k.v3 {
        Some(v) => with_cr(e.input("v3", v as f64)).compare(k.cr, crossings_from_v3(v), 2.0),
        None => e.not_applicable("needs v3"),
    });

    for (&n, &c) in &k.c2n {
        let tag = format!("c{}", 2 * n);
        let e = BoundEntry::new(
            &format!("knot.{tag}.crossing"),
            CONWAY_CR,
            &format!("Cr >= (2^{} {}! |{tag}|)^{{1/{}}}", n + 1, n, 2 * n),
        );
        out.push(with_cr(e.input(&tag, c as f64)).compare(k.cr, crossings_from_conway(n, c), 0.0));
        let e = BoundEntry::new(
            &format!("knot.{tag}.crossing-simple"),
            CONWAY_CR,
            &format!("Cr >= √(2·{n}/3)·|{tag}|^{{1/{}}}", 2 * n),
        );
        out.push(with_cr(e.input(&tag, c as f64)).compare(k.cr, crossings_from_conway_simple(n, c), 0.0));
        let e = BoundEntry::new(
            &format!("knot.{tag}.length"),
            CONWAY_LN,
            &format!("Ln >= ½(d0 + √(d0² + 64π·√(2·{n}/3)·|{tag}|^{{1/{}}}))", 2 * n),
        );
        out.push(if c == 0 {
            e.input(&tag, 0.0).not_applicable("needs a nonzero coefficient")
        } else {
            with_ln(e.input(&tag, c as f64)).compare(k.ln, length_from_conway(n, c), LENGTH_FLOOR)
        });
    }

    let e = BoundEntry::new("knot.ac.length", CONE, "Ln >= 2π + 2π√Ac");
    out.push(match k.ac {
        Some(a) => with_ln(e.input("ac", a))
            .note("user-asserted")
            .compare(k.ln, cone_length(a), LENGTH_FLOOR),
        None => e.not_applicable("needs ac"),
    });
    let e = BoundEntry::new("knot.genus.length", CONE, "Ln >= 2π + 2π√(2g − 1)");
    out.push(match k.genus {
        Some(0) => e.input("genus", 0.0).not_applicable("needs genus >= 1"),
        Some(g) => with_ln(e.input("genus", g as f64))
            .note("user-asserted")
            .compare(k.ln, cone_length(2.0 * g as f64 - 1.0), LENGTH_FLOOR),
        None => e.not_applicable("needs genus"),
    });
    out
}

/// Every link inequality, inapplicable ones included.
pub(crate) fn link_entries(l: &LinkInputs) -> Result<Vec<BoundEntry>> {
    let n = l.n;
    if n < 2 {
        return Err(Error::BadParams(format!("link bounds need n >= 2, got {n}")));
    }
    let check_len = |what: &str, len: Option<usize>| match len {
        Some(m) if m != n => Err(Error::BadParams(format!("{what} has {m} entries, expected {n}"))),
        _ => Ok(()),
    };
    check_len("lk_totals", l.lk_totals.as_ref().map(Vec::len))?;
    check_len("ac", l.ac.as_ref().map(Vec::len))?;
    check_len("genus", l.genus.as_ref().map(Vec::len))?;
    check_len("lengths", l.lengths.as_ref().map(Vec::len))?;
    if let Some(m) = &l.lk {
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::BadParams(format!("lk must be a {n}×{n} matrix")));
        }
    }
    let mut out = Vec::new();
    let floor = LENGTH_FLOOR * n as f64;
    let with_ln = |e: BoundEntry| match l.ln {
        Some(v) => e.input("ln", v),
        None => e,
    };
    let lk_sum: Option<f64> = l
        .lk
        .as_ref()
        .map(|m| (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| m[i][j].abs() as f64).sum());
    let totals: Option<Vec<f64>> = l.lk_totals.clone().or_else(|| {
        l.lk.as_ref().map(|m| {
            (0..n)
                .map(|i| (0..n).filter(|&j| j != i).map(|j| m[i.min(j)][i.max(j)].abs() as f64).sum())
                .collect()
        })
    });

    for i in 0..n {
        let len = l.lengths.as_ref().map(|v| v[i]);
        let tagged = |e: BoundEntry| match len {
            Some(v) => e.input("length", v),
            None => e,
        };
        let comp = i + 1;
        let e = BoundEntry::new(&format!("link.component{comp}.lk"), CONE, "Ln(L_i) >= 2π + 2π√lk(L_i, L)");
        out.push(match &totals {
            Some(t) if t[i] > 0.0 => tagged(e.input("lk_total", t[i])).compare(len, cone_length(t[i]), LENGTH_FLOOR),
            Some(_) => e.not_applicable("component is algebraically unlinked"),
            None => e.not_applicable("needs lk"),
        });
        let e = BoundEntry::new(&format!("link.component{comp}.ac"), CONE, "Ln(L_i) >= 2π + 2π√Ac(L_i, L)");
        out.push(match &l.ac {
            Some(a) => tagged(e.input("ac", a[i]))
                .note("user-asserted")
                .compare(len, cone_length(a[i]), LENGTH_FLOOR),
            None => e.not_applicable("needs ac"),
        });
        let e = BoundEntry::new(&format!("link.component{comp}.genus"), CONE, "Ln(L_i) >= 2π + 2π√(2g(L_i, L) − 1)");
        out.push(match &l.genus {
            Some(g) if g[i] >= 1 => tagged(e.input("genus", g[i] as f64))
                .note("user-asserted")
                .compare(len, cone_length(2.0 * g[i] as f64 - 1.0), LENGTH_FLOOR),
            Some(_) => e.not_applicable("needs genus >= 1"),
            None => e.not_applicable("needs genus"),
        });
    }

    let lk_bounds: [(&str, &str, fn(usize, f64) -> f64); 2] = [
        ("link.lk.length34", "Ln >= (3 Σ|lk|)^{3/4} / √(n−1)", length_from_lk_34),
        ("link.lk.length12", "Ln >= n√(32π)/√(n²−1) · √(Σ|lk|)", length_from_lk_12),
    ];
    for (id, rel, f) in lk_bounds {
        let e = BoundEntry::new(id, LK, rel).input("n", n as f64);
        out.push(match lk_sum {
            Some(s) if s > 0.0 => with_ln(e.input("lk_sum", s)).compare(l.ln, f(n, s), floor),
            Some(_) => e.not_applicable("all linking numbers vanish"),
            None => e.not_applicable("needs lk"),
        });
    }
    let pcr_bounds: [(&str, &str, fn(usize, f64) -> f64); 2] = [
        ("link.pcr.length34", "Ln >= (3/2 PCr)^{3/4} / √(n−1)", length_from_pcr_34),
        ("link.pcr.length12", "Ln >= n√(16π)/√(n²−1) · √PCr", length_from_pcr_12),
    ];
    for (id, rel, f) in pcr_bounds {
        let e = BoundEntry::new(id, PCR, rel).input("n", n as f64);
        out.push(match l.pcr {
            Some(p) if p > 0.0 => with_ln(e.input("pcr", p)).compare(l.ln, f(n, p), floor),
            Some(_) => e.not_applicable("pcr is zero"),
            None => e.not_applicable("needs pcr"),
        });
    }

    let mu = l.mu_bracket.filter(|&b| b != 0);
    let milnor: [(&str, &str, &str, fn(usize, i64) -> f64, bool); 3] = [
        ("link.milnor.length", MILNOR, "Ln >= n^{1/4} ([μ]^{1/(n−1)})^{3/4}", length_from_milnor, true),
        ("link.milnor.crossing", MILNOR, "Cr >= (n−1)/3 · [μ]^{1/(n−1)}", crossings_from_milnor, false),
        (
            "link.milnor.length-cn",
            MILNOR_CN,
            "Ln^{4/3} >= 10 n^{1/3} c_n / (3(n−1)) · [μ]^{1/(n−1)}",
            length_from_milnor_cn,
            true,
        ),
    ];
    for (id, anchor, rel, f, is_length) in milnor {
        let e = BoundEntry::new(id, anchor, rel).input("n", n as f64);
        out.push(match mu {
            Some(b) => {
                let e = e.input("mu_bracket", b.abs() as f64);
                if is_length {
                    with_ln(e).compare(l.ln, f(n, b.abs()), floor)
                } else {
                    let e = match l.cr {
                        Some(c) => e.input("cr", c),
                        None => e,
                    };
                    e.compare(l.cr, f(n, b.abs()), 0.0)
                }
            }
            None if l.mu_bracket.is_some() => e.not_applicable("top Milnor invariant vanishes"),
            None => e.not_applicable("needs mu_bracket"),
        });
    }
    let brunnian: [(&str, &str, fn(usize, i64) -> f64); 2] = [
        ("link.brunnian.length43", "Ln^{4/3} >= 10 n^{1/3} c̃_n / (3(n−1)) · |μ|^{1/(n−1)}", length_from_milnor_brunnian_43),
        ("link.brunnian.length2", "Ln² >= 64π c̃_n n²/(n²−1) · |μ|^{1/(n−1)}", length_from_milnor_brunnian_2),
    ];
    for (id, rel, f) in brunnian {
        let e = BoundEntry::new(id, BRUNNIAN, rel).input("n", n as f64);
        out.push(match (mu, l.brunnian) {
            (Some(b), true) => with_ln(e.input("mu", b.abs() as f64)).compare(l.ln, f(n, b), floor),
            (_, false) => e.not_applicable("needs vanishing indeterminacy"),
            (None, true) => e.not_applicable("needs a nonzero top Milnor invariant"),
        });
    }
    Ok(out)
}

fn applicable_only(entries: Vec<BoundEntry>) -> Result<BoundReport> {
    let report = BoundReport {
        entries: entries.into_iter().filter(|e| e.status != Status::NotApplicable).collect(),
        notes: vec!["lengths are ropelengths: unit thickness".into()],
    };
    if report.applicable() {
        Ok(report)
    } else {
        Err(Error::NoApplicableBounds)
    }
}

/// Every knot bound whose inputs are present.
pub fn knot_bounds(inputs: &KnotInputs) -> Result<BoundReport> {
    if inputs.c2n.contains_key(&0) {
        return Err(Error::BadParams("Conway coefficients are indexed from c2 (n >= 1)".into()));
    }
    for (name, v) in [("cr", inputs.cr), ("acr", inputs.acr), ("ac", inputs.ac), ("ln", inputs.ln)] {
        if let Some(x) = v {
            if !(x.is_finite() && x >= 0.0) {
                return Err(Error::BadParams(format!("{name} must be finite and nonnegative, got {x}")));
            }
        }
    }
    applicable_only(knot_entries(inputs))
}

/// Every link bound whose inputs are present.
pub fn link_bounds(inputs: &LinkInputs) -> Result<BoundReport> {
    applicable_only(link_entries(inputs)?)
}
