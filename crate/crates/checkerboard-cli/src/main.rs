//! `checkerboard` — exact spectra, spanning-tree counts, and cyclotomic
//! factorizations for checkerboard graphs and Aztec diamonds.
//!
//! Exit codes: 0 success / all verification rows pass; 1 verification
//! failure; 2 usage error.

mod render;
mod sweeps;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use checkerboard::cyclotomic::factor_aztec_count;
use checkerboard::factorize::factor_integer;
use checkerboard::graph::{checkerboard, Parity};
use checkerboard::json::{AztecJson, GraphJson, PolyJson, SpectrumJson, TreeCountJson};
use checkerboard::spectral::{checkerboard_product_spectrum, verify_eq5};
use checkerboard::trees::{
    checkerboard_charpoly, checkerboard_charpoly_weighted, cotree_genfun,
    enumerate_spanning_trees, spanning_tree_count, spanning_tree_count_theorem2, tree_genfun,
    CountMethod, TreeCountResult, ENUMERATION_CAP,
};
use checkerboard::Error as LibError;

use render::{
    factored_math, latex_math_doc, latex_table_doc, mathify, table_csv, table_plain,
};
use sweeps::{cells, parallel_map, run_cell, Row, Sweep};

#[derive(Parser)]
#[command(
    name = "checkerboard",
    version,
    about = "Exact spectra, spanning-tree counts, and cyclotomic factorizations \
             for checkerboard graphs and Aztec diamonds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a checkerboard graph and emit its vertices and signed edges
    Graph(GraphArgs),
    /// Characteristic polynomial of a board, unit or u/v-weighted
    Charpoly(CharpolyArgs),
    /// Closed-form product spectrum with the coefficient identity check
    Spectrum(SpectrumArgs),
    /// Spanning-tree count by Kirchhoff, interior-dual shortcut, or brute force
    Trees(TreesArgs),
    /// Tree and cotree generating functions in u and v
    Gf(GfArgs),
    /// Verification sweeps over board families
    Verify(VerifyArgs),
    /// Galois-orbit factorization of an Aztec diamond tree count
    Aztec(AztecArgs),
    /// Factor a positive integer
    Factor(FactorArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Kirchhoff,
    Theorem2,
    Both,
    Enumerate,
}

fn parse_parity(s: &str) -> Result<Parity, String> {
    s.parse()
}

fn parse_size(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("invalid size '{s}'"))?;
    if v == 0 {
        return Err("board sizes start at 1".into());
    }
    Ok(v)
}

#[derive(Args)]
struct BoardArgs {
    /// Number of rows
    #[arg(short, value_name = "M", value_parser = parse_size)]
    m: usize,
    /// Number of columns
    #[arg(short, value_name = "N", value_parser = parse_size)]
    n: usize,
    /// Color class: even (EC) or odd (OC)
    #[arg(long, value_parser = parse_parity)]
    parity: Parity,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    board: BoardArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CharpolyArgs {
    #[command(flatten)]
    board: BoardArgs,
    /// Weight positive edges u and negative edges v instead of 1
    #[arg(long)]
    weighted: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Number of rows
    #[arg(short, value_name = "M", value_parser = parse_size)]
    m: usize,
    /// Number of columns
    #[arg(short, value_name = "N", value_parser = parse_size)]
    n: usize,
    /// Relative tolerance for the coefficient identity
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TreesArgs {
    #[command(flatten)]
    board: BoardArgs,
    #[arg(long, value_enum, default_value_t = Method::Kirchhoff)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GfArgs {
    #[command(flatten)]
    board: BoardArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Odd boards: count(OC) = 4*count(EC)
    #[arg(long)]
    corollary2: bool,
    /// Even boards: counts are odd; path parity determinants are 1
    #[arg(long)]
    corollary3: bool,
    /// Kirchhoff equals the interior-dual evaluation at 4
    #[arg(long)]
    theorem2: bool,
    /// Cosine-product spectrum matches exact coefficients
    #[arg(long)]
    eq5: bool,
    /// P(EC) = x^(mn mod 2) * P(OC)
    #[arg(long)]
    eq6: bool,
    /// Largest board side in each sweep
    #[arg(long, default_value_t = 9, value_parser = parse_size)]
    max: usize,
    /// Relative tolerance for the eq5 sweep
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Worker threads for sweep cells (output order is unaffected)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..=256))]
    jobs: u16,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AztecArgs {
    /// Aztec diamond order (the board is (2n+1) x (2n+1), odd class)
    #[arg(short, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FactorArgs {
    /// Positive integer to factor, in decimal
    #[arg(value_name = "N")]
    value: String,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// How a command run can fail after argument parsing.
enum Failure {
    /// Bad request: rejected before or instead of computing. Exit 2.
    Usage(String),
    /// The computation ran and a checked identity did not hold. Exit 1.
    Verification(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Library errors that indicate a bad request vs. a failed cross-check.
fn lib_err(e: LibError) -> Failure {
    match e {
        LibError::CountMismatch { .. } | LibError::NonRationalOrbit { .. } => {
            Failure::Verification(e.to_string())
        }
        other => Failure::Usage(other.to_string()),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn to_json_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

// ------------------------------------------------------------------ graph

fn run_graph(a: &GraphArgs) -> Result<(), Failure> {
    let g = checkerboard(a.board.m, a.board.n, a.board.parity);
    let text = match a.format {
        Format::Json => to_json_pretty(&GraphJson::from(&g)),
        Format::Plain => {
            let mut s = format!(
                "{}_{},{}: {} vertices, {} edges\n",
                a.board.parity.kind_str(),
                g.m,
                g.n,
                g.num_vertices(),
                g.num_edges()
            );
            s.push_str("vertices:");
            for &(x, y) in &g.vertices {
                s.push_str(&format!(" ({x},{y})"));
            }
            s.push_str("\nedges (sign +: slope 1, sign -: slope -1):\n");
            for e in &g.edges {
                let (ax, ay) = g.vertices[e.a];
                let (bx, by) = g.vertices[e.b];
                let sign = if e.sign > 0 { '+' } else { '-' };
                s.push_str(&format!("  ({ax},{ay})-({bx},{by}) {sign}\n"));
            }
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = g
                .edges
                .iter()
                .map(|e| {
                    let (ax, ay) = g.vertices[e.a];
                    let (bx, by) = g.vertices[e.b];
                    vec![
                        ax.to_string(),
                        ay.to_string(),
                        bx.to_string(),
                        by.to_string(),
                        e.sign.to_string(),
                    ]
                })
                .collect();
            table_csv(&["a_x", "a_y", "b_x", "b_y", "sign"], &rows)
        }
        Format::Latex => {
            return usage("latex output is not available for `graph`; use json, csv, or plain")
        }
    };
    emit(&text, &a.out)
}

// --------------------------------------------------------------- charpoly

fn run_charpoly(a: &CharpolyArgs) -> Result<(), Failure> {
    let (m, n, parity) = (a.board.m, a.board.n, a.board.parity);
    let text = if a.weighted {
        let p = checkerboard_charpoly_weighted(m, n, parity);
        match a.format {
            Format::Json => to_json_pretty(&PolyJson::from_charpoly_uv(&p)),
            Format::Plain => format!("{p}\n"),
            Format::Latex => latex_math_doc(&[format!(
                "P(\\mathrm{{{}}}_{{{m},{n}}};x) = {}",
                parity.kind_str(),
                mathify(&p.to_string())
            )]),
            Format::Csv => {
                let mut rows = Vec::new();
                for (k, c) in p.coeffs().iter().enumerate() {
                    for ((du, dv), coef) in c.terms_graded() {
                        rows.push(vec![
                            k.to_string(),
                            du.to_string(),
                            dv.to_string(),
                            coef.to_string(),
                        ]);
                    }
                }
                table_csv(&["xdeg", "udeg", "vdeg", "coeff"], &rows)
            }
        }
    } else {
        let p = checkerboard_charpoly(m, n, parity);
        match a.format {
            Format::Json => to_json_pretty(&PolyJson::from_charpoly_int(&p)),
            Format::Plain => format!("{p}\n"),
            Format::Latex => latex_math_doc(&[format!(
                "P(\\mathrm{{{}}}_{{{m},{n}}};x) = {}",
                parity.kind_str(),
                mathify(&p.to_string())
            )]),
            Format::Csv => {
                let rows: Vec<Vec<String>> = p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| {
                        vec![k.to_string(), "0".into(), "0".into(), c.to_string()]
                    })
                    .collect();
                table_csv(&["xdeg", "udeg", "vdeg", "coeff"], &rows)
            }
        }
    };
    emit(&text, &a.out)
}

// --------------------------------------------------------------- spectrum

fn run_spectrum(a: &SpectrumArgs) -> Result<(), Failure> {
    let spectrum = checkerboard_product_spectrum(a.m, a.n);
    let report = verify_eq5(a.m, a.n, a.tol);
    let (pass, max_rel_err) = (report.pass, report.max_rel_err);
    let text = match a.format {
        Format::Json => to_json_pretty(&SpectrumJson {
            m: a.m,
            n: a.n,
            values: spectrum.to_f64_vec(),
            eq5: report,
        }),
        Format::Plain => {
            let mut s = format!(
                "product spectrum of the {0}x{1} board pair ({2} values)\n",
                a.m,
                a.n,
                spectrum.len()
            );
            for v in spectrum.to_f64_vec() {
                s.push_str(&format!("  {v:.15}\n"));
            }
            s.push_str(&format!(
                "eq5 coefficient check: max_rel_err {:.3e} (tol {:e}): {}\n",
                report.max_rel_err,
                a.tol,
                if pass { "PASS" } else { "FAIL" }
            ));
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = spectrum
                .to_f64_vec()
                .iter()
                .map(|v| vec![a.m.to_string(), a.n.to_string(), format!("{v:.17}")])
                .collect();
            table_csv(&["m", "n", "value"], &rows)
        }
        Format::Latex => {
            let rows: Vec<Vec<String>> = spectrum
                .to_f64_vec()
                .iter()
                .enumerate()
                .map(|(i, v)| vec![(i + 1).to_string(), format!("{v:.15}")])
                .collect();
            latex_table_doc(&["index", "eigenvalue"], &rows)
        }
    };
    emit(&text, &a.out)?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "eq5 check failed on the {}x{} board pair (max_rel_err {max_rel_err:.3e})",
            a.m, a.n
        )))
    }
}

// ------------------------------------------------------------------ trees

fn count_result(m: usize, n: usize, parity: Parity, method: Method) -> Result<TreeCountResult, Failure> {
    match method {
        Method::Kirchhoff => Ok(spanning_tree_count(&checkerboard(m, n, parity))),
        Method::Theorem2 => spanning_tree_count_theorem2(m, n, parity).map_err(lib_err),
        Method::Enumerate => {
            let g = checkerboard(m, n, parity);
            let profile = enumerate_spanning_trees(&g, ENUMERATION_CAP).map_err(lib_err)?;
            let count: BigInt = profile.values().map(|&c| BigInt::from(c)).sum();
            Ok(TreeCountResult {
                m,
                n,
                parity,
                count,
                method: CountMethod::Enumerate,
                connected: g.is_connected(),
            })
        }
        Method::Both => unreachable!("handled by run_trees"),
    }
}

fn trees_plain_line(r: &TreeCountResult) -> String {
    let f = factor_integer(&r.count);
    let connected = if r.connected { "" } else { " (disconnected board)" };
    format!("{}: {} = {}{}\n", r.method.as_str(), r.count, f, connected)
}

fn run_trees(a: &TreesArgs) -> Result<(), Failure> {
    let (m, n, parity) = (a.board.m, a.board.n, a.board.parity);
    let results: Vec<TreeCountResult> = match a.method {
        Method::Both => vec![
            count_result(m, n, parity, Method::Kirchhoff)?,
            count_result(m, n, parity, Method::Theorem2)?,
        ],
        single => vec![count_result(m, n, parity, single)?],
    };
    let agree = results.windows(2).all(|w| w[0].count == w[1].count);

    let text = match a.format {
        Format::Json => {
            if results.len() == 1 {
                to_json_pretty(&TreeCountJson::from(&results[0]))
            } else {
                to_json_pretty(&json!({
                    "kirchhoff": TreeCountJson::from(&results[0]),
                    "theorem2": TreeCountJson::from(&results[1]),
                    "agree": agree,
                }))
            }
        }
        Format::Plain => {
            let mut s = format!("{}_{m},{n} spanning trees\n", parity.kind_str());
            for r in &results {
                s.push_str(&trees_plain_line(r));
            }
            if results.len() > 1 {
                s.push_str(if agree { "methods agree\n" } else { "METHODS DISAGREE\n" });
            }
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r.m.to_string(),
                        r.n.to_string(),
                        r.parity.as_str().into(),
                        r.method.as_str().into(),
                        r.count.to_string(),
                    ]
                })
                .collect();
            table_csv(&["m", "n", "parity", "method", "count"], &rows)
        }
        Format::Latex => {
            let lines: Vec<String> = results
                .iter()
                .map(|r| {
                    format!(
                        "t(\\mathrm{{{}}}_{{{m},{n}}}) = {}",
                        parity.kind_str(),
                        factored_math(&r.count, &factor_integer(&r.count))
                    )
                })
                .collect();
            latex_math_doc(&lines)
        }
    };
    emit(&text, &a.out)?;
    if agree {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "spanning-tree methods disagree on {}_{m},{n}: kirchhoff {} vs theorem2 {}",
            parity.kind_str(),
            results[0].count,
            results[1].count
        )))
    }
}

// --------------------------------------------------------------------- gf

fn run_gf(a: &GfArgs) -> Result<(), Failure> {
    let (m, n, parity) = (a.board.m, a.board.n, a.board.parity);
    let trees = tree_genfun(m, n, parity).map_err(lib_err)?;
    let cotrees = cotree_genfun(m, n, parity).map_err(lib_err)?;
    let text = match a.format {
        Format::Json => to_json_pretty(&json!({
            "m": m,
            "n": n,
            "parity": parity.as_str(),
            "trees": PolyJson::from_bipoly(&trees.gf),
            "cotrees": PolyJson::from_bipoly(&cotrees.gf),
        })),
        Format::Plain => format!(
            "{0}_{m},{n} generating functions (u: positive edges, v: negative)\n\
             trees:   {1}\ncotrees: {2}\n",
            parity.kind_str(),
            trees.gf,
            cotrees.gf
        ),
        Format::Latex => latex_math_doc(&[
            format!(
                "T_{{\\mathrm{{{}}}_{{{m},{n}}}}}(u,v) = {}",
                parity.kind_str(),
                mathify(&trees.gf.to_string())
            ),
            format!(
                "\\bar T_{{\\mathrm{{{}}}_{{{m},{n}}}}}(u,v) = {}",
                parity.kind_str(),
                mathify(&cotrees.gf.to_string())
            ),
        ]),
        Format::Csv => {
            let mut rows = Vec::new();
            for (kind, gf) in [("trees", &trees.gf), ("cotrees", &cotrees.gf)] {
                for ((du, dv), c) in gf.terms_graded() {
                    rows.push(vec![
                        kind.to_string(),
                        du.to_string(),
                        dv.to_string(),
                        c.to_string(),
                    ]);
                }
            }
            table_csv(&["kind", "udeg", "vdeg", "coeff"], &rows)
        }
    };
    emit(&text, &a.out)
}

// ---------------------------------------------------------------- verify

fn run_verify(a: &VerifyArgs) -> Result<(), Failure> {
    let selected: Vec<Sweep> = {
        let chosen: Vec<Sweep> = Sweep::ALL
            .into_iter()
            .zip([a.corollary2, a.corollary3, a.theorem2, a.eq5, a.eq6])
            .filter_map(|(s, on)| on.then_some(s))
            .collect();
        if chosen.is_empty() {
            Sweep::ALL.to_vec()
        } else {
            chosen
        }
    };

    let mut all_rows: Vec<Row> = Vec::new();
    for sweep in &selected {
        let specs = cells(*sweep, a.max, a.tol);
        all_rows.extend(parallel_map(a.jobs as usize, specs, run_cell));
    }

    let failing: Vec<String> = all_rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| match r.n {
            Some(n) => format!("{} ({},{})", r.sweep, r.m, n),
            None => format!("{} (m={})", r.sweep, r.m),
        })
        .collect();

    let to_cells = |r: &Row| -> Vec<String> {
        vec![
            r.sweep.to_string(),
            r.m.to_string(),
            r.n.map(|n| n.to_string()).unwrap_or_default(),
            r.parity.map(|p| p.as_str().to_string()).unwrap_or_default(),
            r.check.clone(),
            r.lhs.clone(),
            r.rhs.clone(),
            r.ratio.clone().unwrap_or_default(),
            if r.pass { "PASS" } else { "FAIL" }.to_string(),
        ]
    };
    const HEADERS: [&str; 9] = [
        "sweep", "m", "n", "parity", "check", "lhs", "rhs", "ratio", "result",
    ];

    let text = match a.format {
        Format::Plain => {
            let rows: Vec<Vec<String>> = all_rows.iter().map(to_cells).collect();
            let mut s = table_plain(&HEADERS, &rows);
            for sweep in &selected {
                let (pass, total) = all_rows
                    .iter()
                    .filter(|r| r.sweep == sweep.name())
                    .fold((0usize, 0usize), |(p, t), r| (p + r.pass as usize, t + 1));
                s.push_str(&format!("{}: {pass}/{total} pass\n", sweep.name()));
            }
            s.push_str(if failing.is_empty() {
                "all sweeps pass\n"
            } else {
                "SOME CHECKS FAILED\n"
            });
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = all_rows.iter().map(to_cells).collect();
            table_csv(&HEADERS, &rows)
        }
        Format::Latex => {
            let rows: Vec<Vec<String>> = all_rows.iter().map(to_cells).collect();
            latex_table_doc(&HEADERS, &rows)
        }
        Format::Json => {
            let sweeps_json: Vec<serde_json::Value> = selected
                .iter()
                .map(|sweep| {
                    let rows: Vec<serde_json::Value> = all_rows
                        .iter()
                        .filter(|r| r.sweep == sweep.name())
                        .map(|r| {
                            json!({
                                "m": r.m,
                                "n": r.n,
                                "parity": r.parity.map(|p| p.as_str()),
                                "check": r.check,
                                "lhs": r.lhs,
                                "rhs": r.rhs,
                                "ratio": r.ratio,
                                "pass": r.pass,
                            })
                        })
                        .collect();
                    let pass = all_rows
                        .iter()
                        .filter(|r| r.sweep == sweep.name())
                        .all(|r| r.pass);
                    json!({ "name": sweep.name(), "pass": pass, "rows": rows })
                })
                .collect();
            to_json_pretty(&json!({
                "max": a.max,
                "tol": a.tol,
                "sweeps": sweeps_json,
                "pass": failing.is_empty(),
            }))
        }
    };
    emit(&text, &a.out)?;
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "failing cells: {}",
            failing.join(", ")
        )))
    }
}

// ------------------------------------------------------------------ aztec

fn run_aztec(a: &AztecArgs) -> Result<(), Failure> {
    let fac = factor_aztec_count(a.n).map_err(lib_err)?;
    let text = match a.format {
        Format::Json => to_json_pretty(&AztecJson::from(&fac)),
        Format::Plain => {
            let side = 2 * a.n + 1;
            let mut s = format!(
                "aztec order {} = OC_{side},{side}\ntotal = {} = {}\nprefactor = 4^{}\n",
                a.n, fac.total, fac.factorization, fac.prefactor_exponent
            );
            for orbit in &fac.orbits {
                let members: Vec<String> = orbit
                    .indices
                    .iter()
                    .map(|idx| format!("({},{},{})", idx.j, idx.k, idx.family.as_char()))
                    .collect();
                s.push_str(&format!("orbit {{{}}} -> {}\n", members.join(" "), orbit.product));
            }
            s
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (i, orbit) in fac.orbits.iter().enumerate() {
                for idx in &orbit.indices {
                    rows.push(vec![
                        i.to_string(),
                        idx.j.to_string(),
                        idx.k.to_string(),
                        idx.family.as_char().to_string(),
                        orbit.product.to_string(),
                    ]);
                }
            }
            table_csv(&["orbit", "j", "k", "family", "product"], &rows)
        }
        Format::Latex => {
            let products: Vec<String> = fac.orbits.iter().map(|o| o.product.to_string()).collect();
            let line1 = format!(
                "t(\\mathrm{{AZ}}_{{{}}}) = 4^{{{}}} {} = {}",
                a.n,
                fac.prefactor_exponent,
                products
                    .iter()
                    .map(|p| format!("\\cdot {p}"))
                    .collect::<String>(),
                fac.total
            );
            let line2 = factored_math(&fac.total, &fac.factorization);
            latex_math_doc(&[line1, line2])
        }
    };
    emit(&text, &a.out)
}

// ----------------------------------------------------------------- factor

fn run_factor(a: &FactorArgs) -> Result<(), Failure> {
    let value: BigInt = a
        .value
        .parse()
        .map_err(|_| Failure::Usage(format!("'{}' is not a decimal integer", a.value)))?;
    if value < BigInt::one() {
        return usage("factor expects a positive integer");
    }
    let f = factor_integer(&value);
    let text = match a.format {
        Format::Plain => format!("{value} = {f}\n"),
        Format::Json => to_json_pretty(&json!({
            "n": value.to_string(),
            "factors": f.factors.iter()
                .map(|(p, e)| json!([p.to_string(), e]))
                .collect::<Vec<_>>(),
            "probable": f.probable,
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = f
                .factors
                .iter()
                .map(|(p, e)| vec![p.to_string(), e.to_string()])
                .collect();
            table_csv(&["prime", "exponent"], &rows)
        }
        Format::Latex => latex_math_doc(&[factored_math(&value, &f)]),
    };
    emit(&text, &a.out)
}

// ------------------------------------------------------------------- main

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Graph(a) => run_graph(a),
        Command::Charpoly(a) => run_charpoly(a),
        Command::Spectrum(a) => run_spectrum(a),
        Command::Trees(a) => run_trees(a),
        Command::Gf(a) => run_gf(a),
        Command::Verify(a) => run_verify(a),
        Command::Aztec(a) => run_aztec(a),
        Command::Factor(a) => run_factor(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `checkerboard --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
