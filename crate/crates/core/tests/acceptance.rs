//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; the process exits nonzero
//! when any criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use ropebound_core::arrowgen::{build_c, build_z, DEFAULT_CONWAY_CAP, DEFAULT_MILNOR_CAP};
use ropebound_core::bounds::{
    binomial, c_n, c_tilde, crossings_from_conway, crossings_from_conway_simple, d0, six_sqrt_six_pi, verify_geometry,
    Status, VerifyOptions,
};
use ropebound_core::diagram::{parse_gauss_code, pretzel_gauss_code, random_diagram, Role};
use ropebound_core::geometry::{
    average_counts, borromean, gauss_pair_integral, hopf, project_generic, separated_circles, torus_link,
    PolyLink, Sampler,
};
use ropebound_core::invariants::{conway_c2n, milnor_mu};
use ropebound_core::pairing::{pair, pair_oracle, pair_poly};
use ropebound_core::{ArrowPattern, Carrier, GaussDiagram};

const FIVE_TWO: &str = include_str!("../../../data/5_2.gauss");
const THREE_ONE: &str = include_str!("../../../data/3_1.gauss");
const FOUR_ONE: &str = include_str!("../../../data/4_1.gauss");
const HOPF: &str = include_str!("../../../data/hopf.gauss");
const BORROMEAN: &str = include_str!("../../../data/borromean.gauss");

const SLACK: f64 = 0.02;
const VERTICES: usize = 256;

type Check = Result<(bool, String), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Runs one criterion, prints its line and reports whether it passed.
fn criterion(number: u32, title: &str, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok((ok, detail)) => (ok, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    let in_time = elapsed <= limit;
    let pass = ok && in_time;
    let timing = format!("{:.2} s of {} s", elapsed.as_secs_f64(), limit.as_secs());
    let timing = if in_time { timing } else { format!("{timing}, over the limit") };
    println!(
        "criterion {number:>2} [{}] {title} ({timing}): {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1() -> Check {
    let g = parse_gauss_code(FIVE_TWO).map_err(err)?;
    let c2 = pair_poly(&build_c(1, DEFAULT_CONWAY_CAP).map_err(err)?, &g).map_err(err)?;
    Ok((c2 == 2 && g.is_classical(), format!("<C_2, 5_2> = {c2}")))
}

fn c2() -> Check {
    let z2 = build_z(2, DEFAULT_MILNOR_CAP).map_err(err)?;
    let z3 = build_z(3, DEFAULT_MILNOR_CAP).map_err(err)?;
    let z2_coefs: Vec<i64> = z2.terms().map(|(_, c)| c).collect();
    let mut z3_coefs: Vec<i64> = z3.terms().map(|(_, c)| c).collect();
    z3_coefs.sort_unstable();
    let ok = z2_coefs == [1] && z3_coefs == [-1, 1, 1];
    Ok((ok, format!("Z_2 coefficients {z2_coefs:?}, Z_3 coefficients {z3_coefs:?}")))
}

fn c3() -> Check {
    let odd = [1, 3, 5, 7];
    let mut checked = 0;
    let mut wrong = Vec::new();
    for sign in [1, -1] {
        for &a in &odd {
            for &b in &odd {
                for &c in &odd {
                    let (a, b, c) = (sign * a, sign * b, sign * c);
                    let g = pretzel_gauss_code(&[a, b, c]).map_err(err)?;
                    let got = conway_c2n(&g, 1).map_err(err)?;
                    let want = (a * b + a * c + b * c + 1) as i64;
                    checked += 1;
                    if want % 4 != 0 || got != want / 4 {
                        wrong.push(format!("P({a},{b},{c}) = {got}"));
                    }
                }
            }
        }
    }
    let mut family = Vec::new();
    let mut family_ok = true;
    for (m, k) in [(3i32, -2i32), (5, -4), (1, 4)] {
        let eps = k.signum();
        let mut params = vec![m];
        params.extend(std::iter::repeat(eps).take(k.unsigned_abs() as usize));
        let got = conway_c2n(&pretzel_gauss_code(&params).map_err(err)?, 1).map_err(err)?;
        let want = f64::from(m * k) / 4.0;
        let matches = got as f64 == want;
        family_ok &= matches;
        family.push(format!("D({m},{k}): {got} vs mk/4 = {want}"));
    }
    let detail = format!(
        "pretzel {}/{checked} match (ab+ac+bc+1)/4{}; {}",
        checked - wrong.len(),
        if wrong.is_empty() { String::new() } else { format!(" [{}]", wrong.join(", ")) },
        family.join(", ")
    );
    Ok((wrong.is_empty() && family_ok, detail))
}

fn c4() -> Check {
    let z3 = build_z(3, DEFAULT_MILNOR_CAP).map_err(err)?;
    let hand = parse_gauss_code(BORROMEAN).map_err(err)?;
    let hand_value = pair_poly(&z3, &hand).map_err(err)?;
    let hand_delta = milnor_mu(&hand, &[1, 2, 0]).map_err(err)?.modulus;
    let geo = borromean(2.0, 1.0, VERTICES).map_err(err)?;
    let projected = project_generic(&geo).map_err(err)?.diagram;
    let geo_value = pair_poly(&z3, &projected).map_err(err)?;
    let geo_delta = milnor_mu(&projected, &[1, 2, 0]).map_err(err)?.modulus;
    let ok = hand_value.abs() == 1 && geo_value.abs() == 1 && hand_delta == 0 && geo_delta == 0;
    Ok((
        ok,
        format!("hand-built code {hand_value} (Δ = {hand_delta}), projected fixture {geo_value} (Δ = {geo_delta})"),
    ))
}

fn pattern_of(g: &GaussDiagram) -> ArrowPattern {
    let seqs: Vec<Vec<(u32, Role)>> = g
        .to_raw()
        .components
        .iter()
        .map(|c| c.iter().map(|e| (e.label, e.role)).collect())
        .collect();
    let carrier = if seqs.len() == 1 { Carrier::Loop } else { Carrier::Strings(seqs.len()) };
    ArrowPattern::from_sequences(carrier, &seqs).expect("random layout is valid")
}

fn c5() -> Check {
    let mut nonzero = 0;
    for seed in 0..100u64 {
        let components = 1 + (seed % 3) as usize;
        let arrows = 3 + (seed % 8) as usize;
        let g = random_diagram(seed, components, arrows);
        let p = pattern_of(&random_diagram(10_000 + seed, components, 1 + (seed % 4) as usize));
        let fast = pair(&p, &g).map_err(err)?;
        let slow = pair_oracle(&p, &g).map_err(err)?;
        if fast != slow {
            return Ok((false, format!("seed {seed}: pair {fast}, oracle {slow}")));
        }
        nonzero += usize::from(fast != 0);
    }
    Ok((true, format!("100 diagrams agree ({nonzero} nonzero pairings)")))
}

fn c6() -> Check {
    let mut knots = vec![
        parse_gauss_code(THREE_ONE).map_err(err)?,
        parse_gauss_code(FOUR_ONE).map_err(err)?,
        parse_gauss_code(FIVE_TWO).map_err(err)?,
        pretzel_gauss_code(&[3, 1, 3]).map_err(err)?,
    ];
    knots.push(knots[2].negated());
    let mut rebases = 0;
    for k in &knots {
        let len = 2 * k.n_arrows();
        let base = [conway_c2n(k, 1).map_err(err)?, conway_c2n(k, 2).map_err(err)?];
        for offset in 1..len {
            let r = k.rebase(0, offset).map_err(err)?;
            let now = [conway_c2n(&r, 1).map_err(err)?, conway_c2n(&r, 2).map_err(err)?];
            if now != base {
                return Ok((false, format!("{k}: offset {offset} gives {now:?}, expected {base:?}")));
            }
            rebases += 1;
        }
    }
    let hopf_code = parse_gauss_code(HOPF).map_err(err)?;
    let borro = parse_gauss_code(BORROMEAN).map_err(err)?;
    let projected = project_generic(&borromean(2.0, 1.0, VERTICES).map_err(err)?).map_err(err)?.diagram;
    let projected_hopf = project_generic(&hopf(1.0, VERTICES).map_err(err)?).map_err(err)?.diagram;
    let mut links = 0;
    for (g, seq) in [
        (&hopf_code, vec![0, 1]),
        (&projected_hopf, vec![0, 1]),
        (&borro, vec![0, 1, 2]),
        (&projected, vec![0, 1, 2]),
    ] {
        let n = seq.len();
        let reference = milnor_mu(g, &seq).map_err(err)?;
        for shift in 0..n {
            let cyc: Vec<usize> = (0..n).map(|t| seq[(t + shift) % n]).collect();
            let r = milnor_mu(g, &cyc).map_err(err)?;
            if r.modulus != reference.modulus || r.reduced != reference.reduced {
                return Ok((false, format!("{g}: cyclic shift {cyc:?} gives {r:?}, expected {reference:?}")));
            }
        }
        for c in 0..g.n_components() {
            for offset in 1..g.layout().component(c).len() {
                let r = milnor_mu(&g.rebase(c, offset).map_err(err)?, &seq).map_err(err)?;
                if r.reduced != reference.reduced {
                    return Ok((false, format!("{g}: rebase ({c}, {offset}) gives {r:?}")));
                }
                links += 1;
            }
        }
    }
    Ok((true, format!("{rebases} knot rebases, {links} link rebases and all cyclic shifts agree")))
}

fn c7() -> Check {
    let h = hopf(1.0, VERTICES).map_err(err)?;
    let fine = gauss_pair_integral(&h, 0, 1, 512).map_err(err)?;
    let coarse = gauss_pair_integral(&h, 0, 1, 256).map_err(err)?;
    let avg = average_counts(&h, Sampler::MonteCarlo { samples: 10_000, seed: 7 }).map_err(err)?;
    let lk_ok = (fine.lk_real.abs() - 1.0).abs() <= 1e-3;
    let dominates = fine.aov >= fine.lk_real.abs() - 1e-3;
    // quadrature error estimated by halving the resolution
    let se = (avg.aov_se[0][1].powi(2) + (fine.aov - coarse.aov).powi(2)).sqrt();
    let diff = (avg.aov[0][1] - fine.aov).abs();
    let agree = diff <= 3.0 * se;
    Ok((
        lk_ok && dominates && agree,
        format!(
            "lk_real = {:.6}, quadrature aov = {:.6}, Monte Carlo aov = {:.6} ± {:.6} (|Δ| = {:.2} combined SE)",
            fine.lk_real,
            fine.aov,
            avg.aov[0][1],
            avg.aov_se[0][1],
            diff / se
        ),
    ))
}

fn c8() -> Check {
    let fixtures: Vec<(&str, PolyLink)> = vec![
        ("hopf", hopf(1.0, VERTICES).map_err(err)?),
        ("borromean", borromean(2.0, 1.0, VERTICES).map_err(err)?),
        ("torus_link(2,4)", torus_link(2, 4, VERTICES).map_err(err)?),
        ("separated_circles(4)", separated_circles(4.0, VERTICES).map_err(err)?),
    ];
    let mut checked = 0;
    let mut tightest = f64::INFINITY;
    for (name, p) in &fixtures {
        let m = p.metrics();
        let unit = (1.0 + SLACK) / m.thickness;
        let avg = average_counts(p, Sampler::MonteCarlo { samples: 4000, seed: 7 }).map_err(err)?;
        for i in 0..p.n_components() {
            for j in i + 1..p.n_components() {
                let (li, lj) = (m.lengths[i] * unit, m.lengths[j] * unit);
                let aov = (avg.aov[i][j] - 3.0 * avg.aov_se[i][j]).max(0.0);
                let first = (li * lj.cbrt()).min(lj * li.cbrt()) - 5.0 / 3.0 * aov;
                let second = li * lj - 16.0 * PI * aov;
                if first < 0.0 || second < 0.0 {
                    return Ok((false, format!("{name} pair ({i}, {j}): margins {first:.4}, {second:.4}")));
                }
                tightest = tightest.min((li * lj) / (16.0 * PI * aov.max(1e-12)));
                checked += 1;
            }
        }
    }
    Ok((true, format!("{checked} component pairs on {} fixtures, tightest ratio {tightest:.3}", fixtures.len())))
}

fn c9() -> Check {
    let mut problems = Vec::new();
    if (d0() - 17.334).abs() > 1e-3 {
        problems.push(format!("d0 = {}", d0()));
    }
    if (six_sqrt_six_pi() - 26.049).abs() > 1e-3 {
        problems.push(format!("6√(6π) = {}", six_sqrt_six_pi()));
    }
    if c_tilde(3) != 3.0 {
        problems.push(format!("c~_3 = {}", c_tilde(3)));
    }
    for n in 2..=12 {
        if c_n(n) < (n as f64 - 1.0) / 3.0 {
            problems.push(format!("c_{n} = {}", c_n(n)));
        }
    }
    let mut chain = 0u64;
    for n in 1..=20usize {
        for x in 1..=1_000_000i64 {
            if crossings_from_conway(n, x) < crossings_from_conway_simple(n, x) * (1.0 - 1e-12) {
                problems.push(format!("chain fails at n = {n}, x = {x}"));
                break;
            }
            chain += 1;
        }
    }
    let detail = if problems.is_empty() {
        format!(
            "d0 = {:.6}, 6√(6π) = {:.6}, c_12 = {:.4}, C(66, 11) = {:.3e}, {chain} chain points",
            d0(),
            six_sqrt_six_pi(),
            c_n(12),
            binomial(66, 11)
        )
    } else {
        problems.join("; ")
    };
    Ok((problems.is_empty(), detail))
}

fn c10() -> Check {
    let opts = VerifyOptions::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, p) in [
        ("hopf", hopf(1.0, VERTICES).map_err(err)?),
        ("borromean", borromean(2.0, 1.0, VERTICES).map_err(err)?),
        ("torus_link(2,4)", torus_link(2, 4, VERTICES).map_err(err)?),
    ] {
        let r = verify_geometry(&p, &opts).map_err(err)?;
        let fails: Vec<&str> = r.failures().map(|e| e.id.as_str()).collect();
        ok &= fails.is_empty() && r.count(Status::Pass) > 0;
        parts.push(format!("{name}: {} pass, {} fail {fails:?}", r.count(Status::Pass), fails.len()));
    }
    Ok((ok, parts.join("; ")))
}

fn main() {
    let results = [
        criterion(1, "c2(5_2) = 2", secs(1), c1),
        criterion(2, "Z_{2;1} and Z_{3;1} terms", secs(1), c2),
        criterion(3, "pretzel and D(m,k) c2 values", secs(10), c3),
        criterion(4, "Borromean triple linking", secs(5), c4),
        criterion(5, "pairing matches the oracle", secs(60), c5),
        criterion(6, "base point and cyclic invariance", secs(30), c6),
        criterion(7, "Gauss integrals and averages on the Hopf link", secs(60), c7),
        criterion(8, "overcrossing length inequalities on fixtures", secs(120), c8),
        criterion(9, "constants and the Conway crossing chain", secs(5), c9),
        criterion(10, "bound soundness on fixtures", secs(300), c10),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
