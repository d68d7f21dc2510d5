use std::fmt::Write as _;
use std::fs;

use serde::Serialize;

use ropebound_core::arrowgen::{build_z, DEFAULT_MILNOR_CAP};
use ropebound_core::bounds::{c_tilde, d0, length_from_milnor_brunnian_2, six_sqrt_six_pi, tau_from_rop};
use ropebound_core::diagram::{parse_gauss_code, pretzel_gauss_code};
use ropebound_core::geometry::{borromean, hopf, torus_link};
use ropebound_core::invariants::{conway_c2n, linking_number, milnor_mu};

use crate::args::ExamplesArgs;
use crate::output::{write_file, CliError, CliResult, Outcome};

const VERTICES: usize = 256;

/// Text files shipped in `data/`, embedded so `--write` needs no checkout.
pub const DATA_FILES: [(&str, &str); 7] = [
    ("3_1.gauss", include_str!("../../../data/3_1.gauss")),
    ("4_1.gauss", include_str!("../../../data/4_1.gauss")),
    ("5_2.gauss", include_str!("../../../data/5_2.gauss")),
    ("hopf.gauss", include_str!("../../../data/hopf.gauss")),
    ("borromean.gauss", include_str!("../../../data/borromean.gauss")),
    ("5_2.bounds.json", include_str!("../../../data/5_2.bounds.json")),
    ("borromean.bounds.json", include_str!("../../../data/borromean.bounds.json")),
];

fn data(name: &str) -> &'static str {
    DATA_FILES.iter().find(|(n, _)| *n == name).expect("embedded file").1
}

#[derive(Serialize)]
struct Row {
    name: &'static str,
    computed: String,
    expected: String,
    matches: bool,
}

fn exact(name: &'static str, computed: i64, expected: i64) -> Row {
    Row {
        name,
        computed: computed.to_string(),
        expected: expected.to_string(),
        matches: computed == expected,
    }
}

fn approx(name: &'static str, computed: f64, expected: f64, tol: f64) -> Row {
    Row {
        name,
        computed: format!("{computed:.6}"),
        expected: format!("{expected} ± {tol}"),
        matches: (computed - expected).abs() <= tol,
    }
}

fn rows() -> CliResult<Vec<Row>> {
    let k52 = parse_gauss_code(data("5_2.gauss"))?;
    let k31 = parse_gauss_code(data("3_1.gauss"))?;
    let k41 = parse_gauss_code(data("4_1.gauss"))?;
    let hopf_code = parse_gauss_code(data("hopf.gauss"))?;
    let borro = parse_gauss_code(data("borromean.gauss"))?;
    let z3 = build_z(3, DEFAULT_MILNOR_CAP)?;
    let mut signs: Vec<i64> = z3.terms().map(|(_, c)| c).collect();
    signs.sort_unstable();
    let mu = milnor_mu(&borro, &[1, 2, 0])?;
    let brunnian = length_from_milnor_brunnian_2(3, 1);
    Ok(vec![
        exact("c2(5_2)", conway_c2n(&k52, 1)?, 2),
        exact("c4(5_2)", conway_c2n(&k52, 2)?, 0),
        exact("c2(3_1)", conway_c2n(&k31, 1)?, 1),
        exact("c2(4_1)", conway_c2n(&k41, 1)?, -1),
        exact("c2(P(3,5,7))", conway_c2n(&pretzel_gauss_code(&[3, 5, 7])?, 1)?, (15 + 21 + 35 + 1) / 4),
        exact("lk(Hopf)", linking_number(&hopf_code, 0, 1)?, 1),
        exact("terms of Z_{2;1}", build_z(2, DEFAULT_MILNOR_CAP)?.len() as i64, 1),
        Row {
            name: "coefficients of Z_{3;1}",
            computed: format!("{signs:?}"),
            expected: "[-1, 1, 1]".into(),
            matches: signs == [-1, 1, 1],
        },
        exact("|mu(2,3;1)| of the Borromean rings", mu.raw.abs(), 1),
        exact("indeterminacy of mu(2,3;1)", mu.modulus, 0),
        approx("d0", d0(), 17.334, 1e-3),
        approx("6 sqrt(6 pi)", six_sqrt_six_pi(), 26.049, 1e-3),
        approx("Brunnian length bound, n = 3", brunnian, 26.049, 1e-3),
        approx("c~_3", c_tilde(3), 3.0, 0.0),
        approx("thickness bound at length 26.049", tau_from_rop(brunnian)?, 0.7502, 1e-4),
    ])
}

pub fn run(a: &ExamplesArgs) -> CliResult<Outcome> {
    if let Some(dir) = &a.write {
        fs::create_dir_all(dir).map_err(|e| CliError::Data(format!("cannot create {}: {e}", dir.display())))?;
        let mut written = Vec::new();
        for (name, text) in DATA_FILES {
            write_file(&dir.join(name), text)?;
            written.push(name.to_string());
        }
        for (name, link) in [
            ("hopf.json", hopf(1.0, VERTICES)?),
            ("borromean.json", borromean(2.0, 1.0, VERTICES)?),
            ("torus_link_2_4.json", torus_link(2, 4, VERTICES)?),
        ] {
            write_file(&dir.join(name), &link.to_json())?;
            written.push(name.to_string());
        }
        let mut text = String::new();
        for name in &written {
            writeln!(text, "wrote {}", dir.join(name).display()).unwrap();
        }
        return Ok(Outcome::new(serde_json::json!({ "written": written }), text));
    }
    let rows = rows()?;
    let mut text = String::new();
    writeln!(text, "{:<38} {:>14} {:>16}  ok", "example", "computed", "expected").unwrap();
    for r in &rows {
        writeln!(text, "{:<38} {:>14} {:>16}  {}", r.name, r.computed, r.expected, if r.matches { "yes" } else { "NO" }).unwrap();
    }
    let all = rows.iter().all(|r| r.matches);
    writeln!(text, "all examples reproduced: {}", if all { "yes" } else { "no" }).unwrap();
    Ok(Outcome::new(serde_json::json!({ "examples": rows, "all_match": all }), text))
}
