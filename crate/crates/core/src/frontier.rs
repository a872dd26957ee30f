//! Lattice statistics of ribbon tableaux (latticed column words and
//! latticed row-number tableaux), their comparison with plethysm
//! multiplicities, and a resumable sweep over two-row weights.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::sgn_r;
use crate::coplactic::is_latticed_word;
use crate::partition::{Partition, SkewShape};
use crate::ribbon::{column_word, enumerate_ribbon_tableaux, row_number_tableau};
use crate::symfunc::{oracle_product_plethysm, SchurExpansion};
use crate::sxp::{sxp_classic, sxp_direct};
use crate::tableaux::Word;

/// Ribbon tableaux of one shape and weight, with the two lattice counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RibbonStats {
    pub rt: u64,
    pub cwl: u64,
    pub rntl: u64,
    /// Tableaux with latticed column word but unlatticed row-number tableau.
    pub cwl_not_rntl: u64,
}

pub fn ribbon_stats(s: &SkewShape, lambda: &Partition, r: usize) -> RibbonStats {
    let mut st = RibbonStats::default();
    for t in enumerate_ribbon_tableaux(s, &lambda.to_composition(), r) {
        let cw = is_latticed_word(&column_word(&t));
        let rn = row_number_tableau(&t).is_latticed();
        st.rt += 1;
        st.cwl += u64::from(cw);
        st.rntl += u64::from(rn);
        st.cwl_not_rntl += u64::from(cw && !rn);
    }
    st
}

pub fn count_cwl(s: &SkewShape, lambda: &Partition, r: usize) -> u64 {
    ribbon_stats(s, lambda, r).cwl
}

pub fn count_rntl(s: &SkewShape, lambda: &Partition, r: usize) -> u64 {
    ribbon_stats(s, lambda, r).rntl
}

/// Multiplicity of `s_ν` in `s_τ (s_λ ∘ p_r)`.
pub fn multiplicity(tau: &Partition, lambda: &Partition, nu: &Partition, r: usize) -> i64 {
    sxp_direct(tau, &SkewShape::straight(lambda.clone()), r).coefficient(nu)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CarreLeclercOutcome {
    pub multiplicity: i64,
    pub cwl: u64,
    pub sign: i8,
    pub holds: bool,
}

/// Compares `⟨s_τ(s_λ ∘ p_2), s_ν⟩` with `sgn_2(ν/τ)` times the number of
/// 2-ribbon tableaux with latticed column word.
pub fn carre_leclerc_check(tau: &Partition, lambda: &Partition, nu: &Partition) -> CarreLeclercOutcome {
    let mult = multiplicity(tau, lambda, nu, 2);
    carre_leclerc_with(tau, lambda, nu, mult)
}

fn carre_leclerc_with(tau: &Partition, lambda: &Partition, nu: &Partition, mult: i64) -> CarreLeclercOutcome {
    let Ok(s) = SkewShape::new(nu.clone(), tau.clone()) else {
        return CarreLeclercOutcome { multiplicity: mult, cwl: 0, sign: 0, holds: mult == 0 };
    };
    let cwl = count_cwl(&s, lambda, 2);
    let sign = sgn_r(&s, 2);
    CarreLeclercOutcome { multiplicity: mult, cwl, sign, holds: mult == i64::from(sign) * cwl as i64 }
}

/// Full check at `r = 2` for every `ν ⊇ τ` of the right size.
pub fn carre_leclerc_sweep(tau: &Partition, lambda: &Partition) -> Vec<(Partition, CarreLeclercOutcome)> {
    let expansion = sxp_direct(tau, &SkewShape::straight(lambda.clone()), 2);
    Partition::all(tau.size() + 2 * lambda.size())
        .into_par_iter()
        .filter(|nu| nu.contains(tau))
        .map(|nu| {
            let out = carre_leclerc_with(tau, lambda, &nu, expansion.coefficient(&nu));
            (nu, out)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookOutcome {
    pub multiplicity: i64,
    pub rntl: u64,
    pub sign: i8,
    /// `multiplicity = sgn_r(ν/τ) · rntl`.
    pub count_matches: bool,
    /// Every witness has row-number word equal to its column word.
    pub words_agree: bool,
    /// Every witness has column word `(b+1) b … 2 1^a`.
    pub column_words_canonical: bool,
    pub witness_column_words: Vec<String>,
}

pub fn hook_word(a: usize, b: usize) -> Word {
    Word((2..=b + 1).rev().chain(std::iter::repeat_n(1, a)).collect())
}

/// Tests the hook-weight rule for `λ = (a, 1^b)`.
pub fn hook_check(tau: &Partition, a: usize, b: usize, nu: &Partition, r: usize) -> HookOutcome {
    let mut parts = vec![a];
    parts.extend(std::iter::repeat_n(1, b));
    let lambda = Partition::from_padded(parts).expect("hook shape");
    let mult = multiplicity(tau, &lambda, nu, r);
    let Ok(s) = SkewShape::new(nu.clone(), tau.clone()) else {
        return HookOutcome {
            multiplicity: mult,
            rntl: 0,
            sign: 0,
            count_matches: mult == 0,
            words_agree: true,
            column_words_canonical: true,
            witness_column_words: Vec::new(),
        };
    };
    let canonical = hook_word(a, b);
    let mut words = Vec::new();
    let mut agree = true;
    for t in enumerate_ribbon_tableaux(&s, &lambda.to_composition(), r) {
        let rnt = row_number_tableau(&t);
        if rnt.is_latticed() {
            let cw = column_word(&t);
            agree &= rnt.word() == cw;
            words.push(cw);
        }
    }
    let sign = sgn_r(&s, r);
    HookOutcome {
        multiplicity: mult,
        rntl: words.len() as u64,
        sign,
        count_matches: mult == i64::from(sign) * words.len() as i64,
        words_agree: agree,
        column_words_canonical: words.iter().all(|w| *w == canonical),
        witness_column_words: words.iter().map(ToString::to_string).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub r: usize,
    pub tau: Partition,
    pub lambda: Partition,
    pub nu: Partition,
    pub mult: i64,
    pub rt: u64,
    pub cwl: u64,
    pub rntl: u64,
}

/// `(r, τ, λ, ν)`.
pub type TableCase = (usize, &'static [usize], &'static [usize], &'static [usize]);

/// The four counterexample rows.
pub const TABLE_CASES: [TableCase; 4] = [
    (3, &[], &[3, 3], &[6, 6, 6]),
    (4, &[], &[2, 2, 2], &[7, 4, 4, 4, 4, 1]),
    (3, &[1], &[3, 3], &[6, 6, 6, 1]),
    (4, &[1], &[2, 2], &[5, 4, 4, 4]),
];

pub fn table_row(r: usize, tau: &Partition, lambda: &Partition, nu: &Partition) -> TableRow {
    let s = SkewShape::new(nu.clone(), tau.clone()).expect("ν contains τ");
    let st = ribbon_stats(&s, lambda, r);
    TableRow {
        r,
        tau: tau.clone(),
        lambda: lambda.clone(),
        nu: nu.clone(),
        mult: multiplicity(tau, lambda, nu, r),
        rt: st.rt,
        cwl: st.cwl,
        rntl: st.rntl,
    }
}

pub fn reproduce_table() -> Vec<TableRow> {
    TABLE_CASES
        .iter()
        .map(|&(r, tau, lambda, nu)| {
            let p = |v: &[usize]| Partition::new(v.to_vec()).expect("table entries are partitions");
            table_row(r, &p(tau), &p(lambda), &p(nu))
        })
        .collect()
}

/// One cell of the two-row sweep, as written to the JSON-lines report.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellRecord {
    pub r: usize,
    pub n: usize,
    pub nu: Vec<usize>,
    pub lambda: Vec<usize>,
    pub mult: i64,
    pub rt: u64,
    pub cwl: u64,
    pub rntl: u64,
}

impl CellRecord {
    pub fn slack(&self) -> i64 {
        self.rntl as i64 - self.mult.abs()
    }

    fn key(&self) -> (usize, Vec<usize>, Vec<usize>) {
        (self.r, self.nu.clone(), self.lambda.clone())
    }
}

#[derive(Clone, Debug)]
pub struct ConjectureConfig {
    pub r_max: usize,
    pub n_max: usize,
    pub jobs: usize,
    pub out: Option<PathBuf>,
    pub resume: bool,
    /// Audit one cell in this many against the monomial oracle.
    pub audit_every: usize,
}

impl Default for ConjectureConfig {
    fn default() -> Self {
        ConjectureConfig { r_max: 3, n_max: 6, jobs: 1, out: None, resume: false, audit_every: 100 }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AuditMismatch {
    pub cell: Option<CellRecord>,
    pub oracle: i64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ConjectureReport {
    pub cells: usize,
    pub resumed: usize,
    pub violations: Vec<CellRecord>,
    pub min_slack: Option<i64>,
    pub max_slack: Option<i64>,
    pub b1_cells: usize,
    /// `b = 1` cells where the bound is not attained.
    pub b1_unequal: Vec<CellRecord>,
    /// Cells with a latticed column word but unlatticed row-number tableau.
    pub cwl_not_rntl: u64,
    pub audited: usize,
    pub audit_mismatches: Vec<AuditMismatch>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.b1_unequal.is_empty() && self.audit_mismatches.is_empty() && self.cwl_not_rntl == 0
    }
}

/// Two-row partitions `(a, b)` of `n`, including `b = 0`, with `a` decreasing.
pub fn two_row_partitions(n: usize) -> Vec<Partition> {
    (n.div_ceil(2)..=n).rev().map(|a| Partition::from_padded(vec![a, n - a]).expect("a ≥ b")).collect()
}

fn load_existing(path: &PathBuf) -> io::Result<Vec<CellRecord>> {
    let f = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    for line in BufReader::new(f).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        // a torn final line from an interrupted run is recomputed
        if let Ok(rec) = serde_json::from_str::<CellRecord>(&line) {
            out.push(rec);
        }
    }
    Ok(out)
}

/// Checks `|⟨s_{(a,b)} ∘ p_r, s_ν⟩| ≤ #RNTL` over `r ≤ r_max`, `n ≤ n_max`,
/// `ν ⊢ rn`, appending one JSON line per cell to `out` in canonical order.
pub fn verify_conjecture(cfg: &ConjectureConfig) -> io::Result<ConjectureReport> {
    let previous = match (&cfg.out, cfg.resume) {
        (Some(path), true) => load_existing(path)?,
        _ => Vec::new(),
    };
    let done: HashSet<_> = previous.iter().map(CellRecord::key).collect();
    let mut writer = match &cfg.out {
        Some(path) => {
            let mut opts = OpenOptions::new();
            opts.create(true);
            if cfg.resume {
                opts.append(true);
            } else {
                opts.write(true).truncate(true);
            }
            Some(io::BufWriter::new(opts.open(path)?))
        }
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| io::Error::other(e.to_string()))?;

    let mut report = ConjectureReport { resumed: previous.len(), ..Default::default() };
    let mut all: Vec<CellRecord> = previous;
    let mut index = 0usize;
    for r in 1..=cfg.r_max {
        for n in 0..=cfg.n_max {
            let lambdas = two_row_partitions(n);
            let expansions: Vec<SchurExpansion> = pool.install(|| lambdas.par_iter().map(|l| sxp_classic(l, r)).collect());
            let shapes = Partition::all(r * n);
            let mut cells = Vec::new();
            for nu in &shapes {
                for (li, lam) in lambdas.iter().enumerate() {
                    let audit = cfg.audit_every > 0 && index.is_multiple_of(cfg.audit_every);
                    index += 1;
                    let key = (r, nu.parts().to_vec(), lam.padded(2));
                    if !done.contains(&key) {
                        cells.push((nu.clone(), li, audit));
                    }
                }
            }
            let computed: Vec<(CellRecord, Option<i64>, u64)> = pool.install(|| {
                cells
                    .par_iter()
                    .map(|(nu, li, audit)| {
                        let lam = &lambdas[*li];
                        let st = ribbon_stats(&SkewShape::straight(nu.clone()), lam, r);
                        let rec = CellRecord {
                            r,
                            n,
                            nu: nu.parts().to_vec(),
                            lambda: lam.padded(2),
                            mult: expansions[*li].coefficient(nu),
                            rt: st.rt,
                            cwl: st.cwl,
                            rntl: st.rntl,
                        };
                        let oracle = audit.then(|| oracle_cached(lam, r).coefficient(nu));
                        (rec, oracle, st.cwl_not_rntl)
                    })
                    .collect()
            });
            for (rec, oracle, bad) in computed {
                if let Some(w) = writer.as_mut() {
                    serde_json::to_writer(&mut *w, &rec).map_err(io::Error::other)?;
                    w.write_all(b"\n")?;
                }
                if let Some(o) = oracle {
                    report.audited += 1;
                    if o != rec.mult {
                        report.audit_mismatches.push(AuditMismatch { cell: Some(rec.clone()), oracle: o });
                    }
                }
                report.cwl_not_rntl += bad;
                all.push(rec);
            }
            if let Some(w) = writer.as_mut() {
                w.flush()?;
            }
        }
    }

    for rec in &all {
        if rec.r > cfg.r_max || rec.n > cfg.n_max {
            continue;
        }
        report.cells += 1;
        let slack = rec.slack();
        report.min_slack = Some(report.min_slack.map_or(slack, |m| m.min(slack)));
        report.max_slack = Some(report.max_slack.map_or(slack, |m| m.max(slack)));
        if slack < 0 {
            report.violations.push(rec.clone());
        }
        if rec.lambda.get(1) == Some(&1) {
            report.b1_cells += 1;
            if slack != 0 {
                report.b1_unequal.push(rec.clone());
            }
        }
    }
    Ok(report)
}

fn oracle_cached(lambda: &Partition, r: usize) -> SchurExpansion {
    use parking_lot::Mutex;
    use std::sync::OnceLock;
    static CACHE: OnceLock<Mutex<BTreeMap<(Partition, usize), SchurExpansion>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(e) = cache.lock().get(&(lambda.clone(), r)) {
        return e.clone();
    }
    let e = oracle_product_plethysm(&Partition::empty(), &SkewShape::straight(lambda.clone()), r);
    cache.lock().insert((lambda.clone(), r), e.clone());
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(count_cwl(&sk(&[5, 5, 2, 2], &[3, 1]), &p(&[3, 1, 1]), 2), 2);
        assert_eq!(count_cwl(&sk(&[6, 6, 6], &[]), &p(&[3, 3]), 3), 0);
        assert_eq!(count_cwl(&sk(&[3, 3, 3, 3], &[]), &p(&[2, 2]), 3), 1);
        assert_eq!(count_rntl(&sk(&[6, 6, 6], &[]), &p(&[3, 3]), 3), 2);
        assert_eq!(count_rntl(&sk(&[7, 4, 4, 4, 4, 1], &[]), &p(&[2, 2, 2]), 4), 0);
        assert_eq!(count_rntl(&sk(&[5, 4, 4, 4], &[1]), &p(&[2, 2]), 4), 2);
    }

    #[test]
    fn table() {
        let rows = reproduce_table();
        let got: Vec<(i64, u64, u64, u64)> = rows.iter().map(|r| (r.mult, r.rt, r.cwl, r.rntl)).collect();
        // row 1 has 7 ribbon tableaux: the quotient of (6,6,6) is ((2),(2),(2))
        assert_eq!(got, vec![(1, 7, 0, 2), (-1, 9, 0, 0), (1, 6, 0, 0), (1, 2, 2, 2)]);
        let h3 = crate::symfunc::plethysm(&SkewShape::straight(p(&[3])), 3);
        assert_eq!(crate::symfunc::schur_product(&h3, &h3).coefficient(&p(&[6, 6, 6])), 7);
    }

    #[test]
    fn carre_leclerc_examples() {
        let out = carre_leclerc_check(&p(&[3, 1]), &p(&[3, 1, 1]), &p(&[5, 5, 2, 2]));
        assert_eq!((out.multiplicity, out.cwl), (2, 2));
        assert!(out.holds);
        assert!(carre_leclerc_check(&Partition::empty(), &Partition::empty(), &Partition::empty()).holds);
        for n in 0..=3 {
            for lam in Partition::all(n) {
                for tn in 0..=2 {
                    for tau in Partition::all(tn) {
                        for (nu, out) in carre_leclerc_sweep(&tau, &lam) {
                            assert!(out.holds, "{tau} {lam} {nu} {out:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hook_rule_counts() {
        let fig = hook_check(&p(&[3, 1]), 3, 2, &p(&[5, 5, 2, 2]), 2);
        assert!(fig.count_matches && fig.words_agree);
        assert_eq!(fig.rntl, 2);
        let mut words = fig.witness_column_words.clone();
        words.sort();
        assert_eq!(words, vec!["13121", "32111"]);
        // one witness is not of the form (b+1)…2 1^a
        assert!(!fig.column_words_canonical);
        assert_eq!(hook_word(3, 2).to_string(), "32111");

        // the smallest case where the witness words differ from (b+1)…2 1^a
        let small = hook_check(&Partition::empty(), 2, 1, &p(&[3, 3]), 2);
        assert!(small.count_matches);
        assert_eq!((small.multiplicity, small.witness_column_words.clone()), (-1, vec!["121".to_string()]));
        assert!(!small.words_agree && !small.column_words_canonical);

        for r in 1..=3 {
            for n in 1..=4 {
                for b in 0..n {
                    let a = n - b;
                    for tn in 0..=1 {
                        for tau in Partition::all(tn) {
                            for nu in Partition::all(tn + r * n).into_iter().filter(|nu| nu.contains(&tau)) {
                                let out = hook_check(&tau, a, b, &nu, r);
                                assert!(out.count_matches, "{tau} ({a},1^{b}) {nu} r={r} {out:?}");
                                if b == 0 {
                                    assert!(out.column_words_canonical && out.words_agree);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_sweep_and_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.jsonl");
        let cfg = ConjectureConfig { r_max: 2, n_max: 4, jobs: 2, out: Some(path.clone()), resume: false, audit_every: 7 };
        let full = verify_conjecture(&cfg).unwrap();
        assert!(full.passed(), "{full:?}");
        assert!(full.b1_cells > 0);
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), full.cells);
        assert!(lines[0].starts_with(r#"{"r":1,"n":0,"nu":[],"lambda":[0,0],"mult":1"#), "{}", lines[0]);

        // cut the file and resume: same bytes at the end
        let keep: String = lines[..lines.len() / 2].iter().map(|l| format!("{l}\n")).collect();
        std::fs::write(&path, keep).unwrap();
        let resumed = verify_conjecture(&ConjectureConfig { resume: true, jobs: 3, ..cfg.clone() }).unwrap();
        assert_eq!(resumed.resumed, lines.len() / 2);
        assert_eq!(resumed.cells, full.cells);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
    }
}
