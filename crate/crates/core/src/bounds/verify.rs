//! Measured geometry checked against every applicable bound.

use serde::{Deserialize, Serialize};

use super::catalog::{knot_entries, link_entries, KnotInputs, LinkInputs};
use super::report::{BoundEntry, BoundReport, Status};
use crate::arrowgen::{DEFAULT_CONWAY_CAP, DEFAULT_MILNOR_CAP};
use crate::error::{Error, Result};
use crate::geometry::{average_counts, gauss_pair_integral, project_generic, PolyLink, Sampler, DEFAULT_RESOLUTION};
use crate::invariants::{conway_c2n_capped, linking_number, milnor_mu_capped};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Directions used to estimate the average crossing number of knots.
    pub sampler: Sampler,
    /// Quadrature resolution of the Gauss integrals.
    pub resolution: usize,
    /// Relative allowance on the polygonal thickness estimate. Lengths are
    /// measured in units of the estimate divided by `1 + slack`, and the
    /// embedding thickness is deflated by the same factor. Reports say so in
    /// their notes.
    pub slack: f64,
    /// Highest `n` for which `c_{2n}` of a knot is computed.
    pub conway_max_n: usize,
    pub conway_cap: usize,
    pub milnor_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            sampler: Sampler::MonteCarlo { samples: 2000, seed: 7 },
            resolution: DEFAULT_RESOLUTION,
            slack: 0.02,
            conway_max_n: 2,
            conway_cap: DEFAULT_CONWAY_CAP,
            milnor_cap: DEFAULT_MILNOR_CAP,
        }
    }
}


/// Fills the left side of a crossing-number entry with the crossings of
/// one diagram, which bound the crossing number from above.
fn against_diagram(e: BoundEntry, crossings: usize) -> BoundEntry {
    if e.status != Status::RhsOnly {
        return e;
    }
    let rhs = e.rhs.expect("rhs-only entries carry a right side");
    let mut e = e.input("diagram_crossings", crossings as f64).compare(Some(crossings as f64), rhs, f64::NEG_INFINITY);
    e.notes.push("lhs: crossings of one projection, at least the crossing number".into());
    e
}

fn is_total_length(id: &str) -> bool {
    !id.contains(".component") && !id.contains(".pair") && (id.contains("length") || id.ends_with(".quadratic"))
}

/// Computes metrics and invariants of `p` and evaluates every bound.
///
/// The invariants come from one generic projection; the average crossing
/// number of a knot enters as its estimate minus three standard errors.
/// Quantities the geometry cannot certify (crossing number, asymptotic
/// crossing number, genus) are not assumed; entries that need them are
/// reported as not applicable, or compared against the crossings of the
/// projection where that is sound.
pub fn verify_geometry(p: &PolyLink, opts: &VerifyOptions) -> Result<BoundReport> {
    if !(opts.slack >= 0.0) {
        return Err(Error::BadParams(format!("slack must be nonnegative, got {}", opts.slack)));
    }
    opts.sampler.check()?;
    let m = p.metrics();
    let unit = (1.0 + opts.slack) / m.thickness;
    let lengths: Vec<f64> = m.lengths.iter().map(|l| l * unit).collect();
    let ln = m.total_length * unit;
    let proj = project_generic(p)?;
    let g = &proj.diagram;
    let crossings = g.n_arrows();
    let n = p.n_components();
    let mut notes = vec![
        format!(
            "lengths in units of polygonal thickness / (1 + {}), estimate {:.6e}; ropelength {:.6}",
            opts.slack, m.thickness, ln
        ),
        format!("invariants from the projection along {:?}", <[f64; 3]>::from(proj.direction)),
    ];

    let mut entries = if n == 1 {
        let mut inputs = KnotInputs {
            ln: Some(ln),
            ..Default::default()
        };
        for k in 1..=opts.conway_max_n {
            inputs.c2n.insert(k, conway_c2n_capped(g, k, opts.conway_cap)?);
        }
        let avg = average_counts(p, opts.sampler)?;
        let acr_low = avg.acr_total - 3.0 * avg.acr_total_se;
        notes.push(format!(
            "acr = {:.6} ± {:.6} (standard error); bounds use acr − 3σ",
            avg.acr_total, avg.acr_total_se
        ));
        if acr_low > 0.0 {
            inputs.acr = Some(acr_low);
        }
        knot_entries(&inputs)
            .into_iter()
            .map(|e| against_diagram(e, crossings))
            .map(|e| match vanishing_input(&e) {
                Some(tag) => BoundEntry::new(&e.id, &e.anchor, &e.relation)
                    .input(&tag, 0.0)
                    .not_applicable(&format!("{tag} vanishes")),
                None => e,
            })
            .collect::<Vec<_>>()
    } else {
        let mut lk = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                lk[i][j] = linking_number(g, i, j)?;
                lk[j][i] = lk[i][j];
            }
        }
        let lk_sum: i64 = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| lk[i][j].abs()).sum();
        let mut inputs = LinkInputs {
            n,
            lk: Some(lk),
            pcr: Some(2.0 * lk_sum as f64),
            lengths: Some(lengths.clone()),
            ln: Some(ln),
            ..Default::default()
        };
        notes.push("pcr enters as its lower bound 2 Σ|lk|".into());
        if n <= opts.milnor_cap {
            let seq: Vec<usize> = (1..n).chain([0]).collect();
            let mu = milnor_mu_capped(g, &seq, opts.milnor_cap)?;
            inputs.mu_bracket = Some(mu.bracket);
            inputs.brunnian = mu.modulus == 0;
            notes.push(format!(
                "top Milnor invariant {:?}: {} mod {} (bracket {})",
                seq.iter().map(|i| i + 1).collect::<Vec<_>>(),
                mu.reduced,
                mu.modulus,
                mu.bracket
            ));
        } else {
            notes.push(format!("top Milnor invariant skipped: {n} components exceed the cap {}", opts.milnor_cap));
        }
        let mut entries: Vec<BoundEntry> = link_entries(&inputs)?.into_iter().map(|e| against_diagram(e, crossings)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let gi = gauss_pair_integral(p, i, j, opts.resolution)?;
                let (li, lj) = (lengths[i], lengths[j]);
                let tag = format!("link.pair{}{}", i + 1, j + 1);
                let anchor = "average overcrossing length bound";
                entries.push(
                    BoundEntry::new(&format!("{tag}.overcrossing13"), anchor, "min(ℓi ℓj^{1/3}, ℓj ℓi^{1/3}) >= 5/3 aov")
                        .input("aov", gi.aov)
                        .input("length_i", li)
                        .input("length_j", lj)
                        .compare(Some((li * lj.cbrt()).min(lj * li.cbrt())), 5.0 / 3.0 * gi.aov, 0.0),
                );
                entries.push(
                    BoundEntry::new(&format!("{tag}.overcrossing-product"), anchor, "ℓi ℓj >= 16π aov")
                        .input("aov", gi.aov)
                        .input("length_i", li)
                        .input("length_j", lj)
                        .compare(Some(li * lj), 16.0 * std::f64::consts::PI * gi.aov, 0.0),
                );
            }
        }
        entries
    };

    let best = entries
        .iter()
        .filter(|e| e.status == Status::Pass && is_total_length(&e.id))
        .filter_map(|e| e.rhs)
        .fold(None, |acc: Option<f64>, r| Some(acc.map_or(r, |a| a.max(r))));
    let e = BoundEntry::new("thickness.tau", "thickness-ropelength volume bound", "(11 / B)^{1/3} >= τ, B the best length bound");
    entries.push(match best {
        Some(b) if b > 0.0 => {
            let tau = m.embedding_thickness / (1.0 + opts.slack);
            e.input("best_length_bound", b)
                .input("tau", tau)
                .compare(Some((11.0 / b).cbrt()), tau, f64::NEG_INFINITY)
        }
        _ => e.not_applicable("no positive length bound applies"),
    });
    Ok(BoundReport { entries, notes })
}

/// Name of a Conway coefficient input that is zero, if the entry has one.
fn vanishing_input(e: &BoundEntry) -> Option<String> {
    e.inputs
        .iter()
        .find(|(k, v)| k.starts_with('c') && k[1..].parse::<u32>().is_ok() && **v == 0.0)
        .map(|(k, _)| k.clone())
}
