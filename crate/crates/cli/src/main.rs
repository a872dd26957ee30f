use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use sxp::abacus::{r_core, sgn_r, skew_quotient, star};
use sxp::coplactic::{dot_orbit, g_involution, is_latticed_word, lr_coefficient};
use sxp::frontier::{carre_leclerc_check, carre_leclerc_sweep, reproduce_table, verify_conjecture, ConjectureConfig};
use sxp::ribbon::{column_word, count_ribbon_tableaux, enumerate_ribbon_tableaux, plethystic_mn, row_number_tableau, RibbonTableau};
use sxp::symfunc::{kostka, oracle_product_plethysm};
use sxp::sxp::{pipeline_trace, sxp_expand};
use sxp::tableaux::enumerate_multitableaux;
use sxp::{Composition, Partition, SkewMultiShape, SkewShape};

#[derive(Parser)]
#[command(name = "pleth", version, about = "Schur expansions of s_tau (s_{lambda/mu} o p_r) and ribbon tableau tools")]
struct Cli {
    /// Pretty-print JSON and draw Young diagrams where relevant.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Runners {
    /// Ribbon length / number of abacus runners.
    #[arg(short = 'r', value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// r-quotient of a skew shape, e.g. `[6,5,2,1]/[3,2]`.
    Quotient {
        #[command(flatten)]
        r: Runners,
        #[arg(value_parser = parse_skew)]
        shape: SkewShape,
    },
    /// r-core of a partition.
    Core {
        #[command(flatten)]
        r: Runners,
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// The partition ν with ν/τ of the given r-quotient.
    Star {
        #[command(flatten)]
        r: Runners,
        #[arg(long, value_parser = parse_partition)]
        tau: Partition,
        /// Multishape as JSON, e.g. `[[1],[],[[2,1],[1]]]`.
        #[arg(value_parser = parse_multishape)]
        quotient: SkewMultiShape,
    },
    /// r-sign of a skew shape (0 if it has no r-ribbon decomposition).
    Sign {
        #[command(flatten)]
        r: Runners,
        #[arg(value_parser = parse_skew)]
        shape: SkewShape,
    },
    /// Number of semistandard tableaux of a skew shape and content.
    SsytCount {
        #[arg(value_parser = parse_skew)]
        shape: SkewShape,
        #[arg(long, value_parser = parse_composition)]
        content: Composition,
    },
    /// Latticed multitableaux of a multishape with content λ.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_multishape)]
        shape: SkewMultiShape,
    },
    /// Action of the involution G on every multitableau of a shape and content.
    GOrbit {
        #[arg(long, value_parser = parse_composition)]
        content: Composition,
        #[arg(value_parser = parse_multishape)]
        shape: SkewMultiShape,
    },
    /// Number of r-ribbon tableaux of a shape and weight.
    RibbonCount {
        #[command(flatten)]
        r: Runners,
        #[arg(value_parser = parse_skew)]
        shape: SkewShape,
        #[arg(long, value_parser = parse_composition)]
        weight: Composition,
    },
    /// List r-ribbon tableaux with their words and an ASCII diagram.
    RibbonShow {
        #[command(flatten)]
        r: Runners,
        #[arg(value_parser = parse_skew)]
        shape: SkewShape,
        #[arg(long, value_parser = parse_composition)]
        weight: Composition,
        /// Write one SVG per tableau into this directory.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Plethystic Murnaghan–Nakayama rule for s_τ (h_α ∘ p_r).
    Mn {
        #[command(flatten)]
        r: Runners,
        #[arg(long, value_parser = parse_partition, default_value = "[]")]
        tau: Partition,
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
    },
    /// Schur expansion of s_τ (s_{λ/μ} ∘ p_r) by ribbon tableaux.
    Sxp {
        #[command(flatten)]
        r: Runners,
        #[arg(long, value_parser = parse_partition, default_value = "[]")]
        tau: Partition,
        #[arg(long, value_parser = parse_skew)]
        skew: SkewShape,
        /// Include the per-shape pipeline counts.
        #[arg(long)]
        trace: bool,
        /// Compare against the monomial oracle; exit 1 on mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Schur expansion of s_τ (s_{λ/μ} ∘ p_r) by monomial coefficients.
    Oracle {
        #[command(flatten)]
        r: Runners,
        #[arg(long, value_parser = parse_partition, default_value = "[]")]
        tau: Partition,
        #[arg(long, value_parser = parse_skew)]
        skew: SkewShape,
    },
    /// Signed latticed-column-word count against the r = 2 multiplicity.
    ClCheck {
        #[arg(long, value_parser = parse_partition, default_value = "[]")]
        tau: Partition,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Check one shape only; all ν ⊇ τ otherwise.
        #[arg(long, value_parser = parse_partition)]
        nu: Option<Partition>,
    },
    /// Sweep the row-number-tableau bound over two-row weights.
    VerifyConjecture {
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, requires = "out")]
        resume: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 100)]
        audit_every: usize,
    },
    /// The four counterexample rows.
    Table,
    /// Latticed column word implies latticed row-number tableau, over ν ⊢ rn and λ ⊢ n.
    LatticeCheck {
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Check this many random (r, ν, λ) cells instead of all of them.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: sxp::Error| e.to_string())
}

fn parse_skew(s: &str) -> Result<SkewShape, String> {
    s.parse().map_err(|e: sxp::Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    let body = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    if body.trim().is_empty() {
        return Ok(Composition::new(Vec::new()));
    }
    body.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Composition::new)
}

fn parse_multishape(s: &str) -> Result<SkewMultiShape, String> {
    let v: Value = serde_json::from_str(s).map_err(|e| e.to_string())?;
    let comps = v.as_array().ok_or("expected a JSON array of components")?;
    let part = |v: &Value| -> Result<Partition, String> {
        let parts: Vec<usize> = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        Partition::from_padded(parts).map_err(|e| e.to_string())
    };
    let mut out = Vec::new();
    for c in comps {
        let shape = match c.as_array() {
            Some(pair) if pair.len() == 2 && pair.iter().all(Value::is_array) => {
                SkewShape::new(part(&pair[0])?, part(&pair[1])?).map_err(|e| e.to_string())?
            }
            _ => SkewShape::straight(part(c)?),
        };
        out.push(shape);
    }
    Ok(SkewMultiShape::new(out))
}

fn shape_json(s: &SkewShape) -> Value {
    if s.is_straight() {
        json!(s.outer())
    } else {
        json!([s.outer(), s.inner()])
    }
}

fn diagram(s: &SkewShape) -> String {
    let mut out = String::new();
    for row in 0..s.rows() {
        let (lo, hi) = s.row_range(row);
        let _ = writeln!(out, "{}{}", ".".repeat(lo), "#".repeat(hi - lo));
    }
    out
}

fn ribbon_svg(t: &RibbonTableau) -> String {
    const CELL: usize = 32;
    let ids = t.box_strip_ids();
    let labels = t.box_labels();
    let width = ids.iter().map(Vec::len).max().unwrap_or(0) * CELL + 4;
    let height = ids.len() * CELL + 4;
    let id = |r: isize, c: isize| -> Option<usize> {
        if r < 0 || c < 0 {
            return None;
        }
        ids.get(r as usize).and_then(|row| row.get(c as usize)).copied().flatten()
    };
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" font-family=\"sans-serif\" font-size=\"16\">\n"
    );
    for (r, row) in ids.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            let Some(me) = *cell else { continue };
            let (x, y) = (2 + c * CELL, 2 + r * CELL);
            let _ = writeln!(svg, "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"none\" stroke=\"#bbb\"/>");
            if let Some(l) = labels[r][c] {
                let _ = writeln!(svg, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{l}</text>", x + CELL / 2, y + CELL / 2 + 6);
            }
            let (ri, ci) = (r as isize, c as isize);
            let edges = [
                (id(ri - 1, ci), (x, y, x + CELL, y)),
                (id(ri + 1, ci), (x, y + CELL, x + CELL, y + CELL)),
                (id(ri, ci - 1), (x, y, x, y + CELL)),
                (id(ri, ci + 1), (x + CELL, y, x + CELL, y + CELL)),
            ];
            for (other, (x1, y1, x2, y2)) in edges {
                if other != Some(me) {
                    let _ = writeln!(svg, "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"black\" stroke-width=\"3\"/>");
                }
            }
        }
    }
    svg.push_str("</svg>\n");
    svg
}

struct Output {
    value: Value,
    diagrams: Vec<String>,
    code: u8,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output { value, diagrams: Vec::new(), code: 0 }
    }

    fn checked(value: Value, passed: bool) -> Self {
        Output { value, diagrams: Vec::new(), code: if passed { 0 } else { 1 } }
    }
}

fn r_of(r: &Runners) -> usize {
    r.r as usize
}

fn run(cmd: Cmd) -> Result<Output> {
    Ok(match cmd {
        Cmd::Quotient { r, shape } => {
            let q = skew_quotient(&shape, r_of(&r))?;
            let mut out = Output::ok(Value::Array(q.components().iter().map(shape_json).collect()));
            out.diagrams = q.components().iter().map(diagram).collect();
            out
        }
        Cmd::Core { r, partition } => {
            let c = r_core(&partition, r_of(&r))?;
            let mut out = Output::ok(json!(c));
            out.diagrams.push(diagram(&SkewShape::straight(c)));
            out
        }
        Cmd::Star { r, tau, quotient } => Output::ok(json!(star(&quotient, &tau, r_of(&r))?)),
        Cmd::Sign { r, shape } => Output::ok(json!(sgn_r(&shape, r_of(&r)))),
        Cmd::SsytCount { shape, content } => {
            let Some(counts) = content.to_counts() else { bail!("--content must be non-negative") };
            Output::ok(json!(kostka(&shape, &counts)))
        }
        Cmd::Lr { lambda, shape } => Output::ok(json!(lr_coefficient(&lambda, &shape)?)),
        Cmd::GOrbit { content, shape } => {
            let Some((lambda, g)) = dot_orbit(&content) else {
                bail!("--content {content} is not in the dot-action orbit of a partition")
            };
            let mut fixed = 0;
            let mut moved = Vec::new();
            for t in enumerate_multitableaux(&shape, &content) {
                let img = g_involution(&t)?;
                match img.k {
                    None => fixed += 1,
                    Some(k) => moved.push(json!({
                        "word": t.word().to_string(),
                        "k": k,
                        "image": img.image.word().to_string(),
                    })),
                }
            }
            Output::ok(json!({
                "lambda": lambda,
                "g": g.images(),
                "sign": g.sign(),
                "fixed": fixed,
                "moved": moved,
            }))
        }
        Cmd::RibbonCount { r, shape, weight } => Output::ok(json!(count_ribbon_tableaux(&shape, &weight, r_of(&r)))),
        Cmd::RibbonShow { r, shape, weight, svg } => {
            let all = enumerate_ribbon_tableaux(&shape, &weight, r_of(&r));
            if let Some(dir) = &svg {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for (i, t) in all.iter().enumerate() {
                    let path = dir.join(format!("ribbon-{}.svg", i + 1));
                    std::fs::write(&path, ribbon_svg(t)).with_context(|| format!("writing {}", path.display()))?;
                }
            }
            let items: Vec<Value> = all
                .iter()
                .map(|t| {
                    json!({
                        "chain": t.chain(),
                        "labels": t.box_labels(),
                        "column_word": column_word(t).to_string(),
                        "row_number_word": row_number_tableau(t).word().to_string(),
                        "ascii": t.to_string(),
                    })
                })
                .collect();
            let mut out = Output::ok(Value::Array(items));
            out.diagrams = all.iter().map(|t| format!("{t}\n")).collect();
            out
        }
        Cmd::Mn { r, tau, alpha } => Output::ok(json!(plethystic_mn(&tau, &alpha, r_of(&r)))),
        Cmd::Sxp { r, tau, skew, trace, verify } => {
            let r = r_of(&r);
            let mut obj = serde_json::Map::new();
            let expansion = if trace {
                let t = pipeline_trace(&tau, &skew, r);
                let e = t.result.clone();
                obj.insert("expansion".into(), json!(e));
                obj.insert("trace".into(), json!(t));
                e
            } else {
                let e = sxp_expand(&tau, &skew, r);
                obj.insert("expansion".into(), json!(e));
                e
            };
            let mut passed = true;
            if verify {
                let oracle = oracle_product_plethysm(&tau, &skew, r);
                passed = oracle == expansion;
                obj.insert("verified".into(), json!(passed));
                if !passed {
                    obj.insert("oracle".into(), json!(oracle));
                }
            }
            Output::checked(Value::Object(obj), passed)
        }
        Cmd::Oracle { r, tau, skew } => Output::ok(json!(oracle_product_plethysm(&tau, &skew, r_of(&r)))),
        Cmd::ClCheck { tau, lambda, nu } => {
            let rows = match nu {
                Some(nu) => vec![(nu.clone(), carre_leclerc_check(&tau, &lambda, &nu))],
                None => carre_leclerc_sweep(&tau, &lambda),
            };
            let passed = rows.iter().all(|(_, o)| o.holds);
            let items: Vec<Value> = rows
                .iter()
                .map(|(nu, o)| json!({"nu": nu, "mult": o.multiplicity, "cwl": o.cwl, "sign": o.sign, "holds": o.holds}))
                .collect();
            Output::checked(json!({"passed": passed, "shapes": items}), passed)
        }
        Cmd::VerifyConjecture { r_max, n_max, out, resume, jobs, audit_every } => {
            let report = verify_conjecture(&ConjectureConfig { r_max, n_max, jobs, out, resume, audit_every })?;
            let passed = report.passed();
            Output::checked(json!({"passed": passed, "report": report}), passed)
        }
        Cmd::Table => Output::ok(json!(reproduce_table())),
        Cmd::LatticeCheck { r_max, n_max, samples, seed } => {
            if r_max == 0 {
                bail!("--r-max must be at least 1");
            }
            let mut cells: Vec<(usize, Partition, Partition)> = Vec::new();
            for r in 1..=r_max {
                for n in 0..=n_max {
                    for nu in Partition::all(r * n) {
                        for lambda in Partition::all(n) {
                            cells.push((r, nu.clone(), lambda));
                        }
                    }
                }
            }
            if let Some(k) = samples {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                cells = (0..k.min(cells.len())).map(|_| cells[rng.gen_range(0..cells.len())].clone()).collect();
            }
            let (tableaux, cwl, rntl, bad) = cells
                .iter()
                .map(|(r, nu, lambda)| {
                    let mut acc = (0u64, 0u64, 0u64, Vec::new());
                    for t in enumerate_ribbon_tableaux(&SkewShape::straight(nu.clone()), &lambda.to_composition(), *r) {
                        let cw = is_latticed_word(&column_word(&t));
                        let rn = row_number_tableau(&t).is_latticed();
                        acc.0 += 1;
                        acc.1 += u64::from(cw);
                        acc.2 += u64::from(rn);
                        if cw && !rn {
                            acc.3.push(json!({"r": r, "nu": nu, "chain": t.chain()}));
                        }
                    }
                    acc
                })
                .fold(
                    (0, 0, 0, Vec::new()),
                    |mut a, b| {
                        a.0 += b.0;
                        a.1 += b.1;
                        a.2 += b.2;
                        a.3.extend(b.3);
                        a
                    },
                );
            let passed = bad.is_empty();
            Output::checked(
                json!({"passed": passed, "cells": cells.len(), "tableaux": tableaux, "cwl": cwl, "rntl": rntl, "violations": bad}),
                passed,
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !matches!(cli.cmd, Cmd::VerifyConjecture { .. }) {
        // verify-conjecture sizes its own pool from --jobs
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    match run(cli.cmd) {
        Ok(out) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&out.value)
            } else {
                serde_json::to_string(&out.value)
            }
            .expect("JSON values always serialize");
            println!("{text}");
            if cli.pretty {
                for d in &out.diagrams {
                    println!("\n{}", d.trim_end());
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
