//! Schur expansion of `s_τ (s_{λ/μ} ∘ p_r)`.
//!
//! [`sxp_expand`] runs the full chain: Jacobi–Trudi over `Sym_ℓ`, signed
//! ribbon-tableau counts, the bijection to quotient multitableaux, and the
//! involution `G` on multitableaux with `u(μ)` appended. Each output shape
//! keeps only the fixed points of `G`, which are counted by a
//! Littlewood–Richardson coefficient. [`sxp_direct`] sums those
//! coefficients straight away.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::abacus::{r_quotient, sgn_r, skew_quotient, star};
use crate::coplactic::{dot_orbit, g_unchecked, lr_coefficient};
use crate::partition::{dot_action, enumerate_permutations, Composition, Partition, SkewMultiShape, SkewShape};
use crate::ribbon::{ribbon_to_multitableau, ribbon_tableaux_over};
use crate::symfunc::SchurExpansion;
use crate::tableaux::{superstandard, MultiTableau};

/// One Jacobi–Trudi term `sgn(g) h_{g·λ−μ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiTrudiTerm {
    /// One-line notation of `g`.
    pub g: Vec<usize>,
    pub sign: i8,
    pub weight: Composition,
    /// True when `g·λ−μ` has a negative entry.
    pub dropped: bool,
}

/// Stage counts for one output shape `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeTrace {
    #[serde(serialize_with = "as_string")]
    pub nu: Partition,
    #[serde(serialize_with = "as_string")]
    pub quotient: SkewMultiShape,
    pub sign_r: i8,
    /// Ribbon tableaux of shape `ν/τ`, one entry per surviving Jacobi–Trudi term.
    pub ribbon_counts: Vec<usize>,
    /// Total number of ribbon tableaux (= multitableaux) over all terms.
    pub summands: usize,
    /// `Σ sgn(g)·count` before cancellation.
    pub signed_summands: i64,
    /// Summands removed in pairs by `G`.
    pub cancelled: usize,
    pub survivors: usize,
    /// Littlewood–Richardson coefficient of the quotient with `μ` appended.
    pub lr: u64,
    /// False if some summand's image under `G` fell outside the summand set
    /// or kept its sign.
    pub involution_consistent: bool,
}

fn as_string<T: std::fmt::Display, S: serde::Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineTrace {
    #[serde(serialize_with = "as_string")]
    pub tau: Partition,
    #[serde(serialize_with = "as_string")]
    pub skew: SkewShape,
    pub r: usize,
    pub jacobi_trudi: Vec<JacobiTrudiTerm>,
    pub shapes: Vec<ShapeTrace>,
    pub result: SchurExpansion,
}

impl PipelineTrace {
    pub fn shape(&self, nu: &Partition) -> Option<&ShapeTrace> {
        self.shapes.iter().find(|s| &s.nu == nu)
    }
}

fn jacobi_trudi_terms(s: &SkewShape) -> Vec<JacobiTrudiTerm> {
    let lambda = s.outer();
    let len = lambda.len();
    let mu = s.inner().padded(len);
    enumerate_permutations(len)
        .map(|g| {
            let moved = dot_action(&g, &lambda.to_composition()).expect("lengths agree");
            let weight = moved.minus(&mu);
            let dropped = !weight.is_proper();
            JacobiTrudiTerm { g: g.images().to_vec(), sign: g.sign(), weight, dropped }
        })
        .collect()
}

/// The full pipeline with per-stage counts.
pub fn pipeline_trace(tau: &Partition, s: &SkewShape, r: usize) -> PipelineTrace {
    assert!(r > 0, "plethysm with p_0");
    let jt = jacobi_trudi_terms(s);
    let live: Vec<&JacobiTrudiTerm> = jt.iter().filter(|t| !t.dropped).collect();

    // ribbon tableaux for each live term, grouped by outer shape
    let mut by_shape: BTreeMap<Partition, Vec<Vec<MultiTableau>>> = BTreeMap::new();
    for (idx, term) in live.iter().enumerate() {
        for (nu, tabs) in ribbon_tableaux_over(tau, &term.weight, r) {
            let slot = by_shape.entry(nu).or_insert_with(|| vec![Vec::new(); live.len()]);
            slot[idx] = tabs.iter().map(ribbon_to_multitableau).collect();
        }
    }

    let u_mu = superstandard(s.inner());
    let lambda = s.outer();
    let shapes: Vec<ShapeTrace> = by_shape
        .into_par_iter()
        .map(|(nu, groups)| {
            let shape = SkewShape::new(nu.clone(), tau.clone()).expect("ribbon tableaux are nested");
            let quotient = skew_quotient(&shape, r).expect("ribbon tableau shapes have a quotient");
            let sign_r = sgn_r(&shape, r);
            let mut members: HashMap<MultiTableau, i8> = HashMap::new();
            let mut signed = 0i64;
            for (idx, group) in groups.iter().enumerate() {
                signed += i64::from(live[idx].sign) * group.len() as i64;
                for t in group {
                    members.insert(t.append(u_mu.clone()), live[idx].sign);
                }
            }
            let mut cancelled = 0;
            let mut survivors = 0;
            let mut consistent = true;
            for (t, &sign) in &members {
                let g = g_unchecked(t);
                if g.k.is_none() {
                    survivors += 1;
                    consistent &= sign == 1 && dot_orbit(&t.content()).is_some_and(|(l, _)| &l == lambda);
                } else {
                    cancelled += 1;
                    let back = g_unchecked(&g.image).image == *t;
                    let partner = members.get(&g.image).is_some_and(|&s2| s2 == -sign);
                    let tail_kept = g.image.components().last() == Some(&u_mu);
                    consistent &= back && partner && tail_kept;
                }
            }
            let lr = lr_coefficient(lambda, &quotient.append(s.inner())).expect("sizes agree");
            ShapeTrace {
                nu,
                quotient,
                sign_r,
                ribbon_counts: groups.iter().map(Vec::len).collect(),
                summands: members.len(),
                signed_summands: signed,
                cancelled,
                survivors,
                lr,
                involution_consistent: consistent,
            }
        })
        .collect();

    let degree = tau.size() + r * s.size();
    let result = SchurExpansion::from_terms(
        degree,
        shapes.iter().map(|st| (st.nu.clone(), i64::from(st.sign_r) * st.survivors as i64)),
    )
    .expect("shapes have the output degree");
    PipelineTrace { tau: tau.clone(), skew: s.clone(), r, jacobi_trudi: jt, shapes, result }
}

/// `s_τ (s_{λ/μ} ∘ p_r)` in the Schur basis, via the pipeline.
pub fn sxp_expand(tau: &Partition, s: &SkewShape, r: usize) -> SchurExpansion {
    pipeline_trace(tau, s, r).result
}

/// Skew multipartitions `ν/inner` of total size `n`.
pub fn skew_multipartitions(inner: &[Partition], n: usize) -> Vec<SkewMultiShape> {
    fn go(i: usize, left: usize, inner: &[Partition], cur: &mut Vec<SkewShape>, out: &mut Vec<SkewMultiShape>) {
        if i == inner.len() {
            if left == 0 {
                out.push(SkewMultiShape::new(cur.clone()));
            }
            return;
        }
        let base = inner[i].size();
        for k in 0..=left {
            if i + 1 == inner.len() && k != left {
                continue;
            }
            for outer in Partition::all(base + k).into_iter().filter(|p| p.contains(&inner[i])) {
                cur.push(SkewShape::new(outer, inner[i].clone()).expect("contained"));
                go(i + 1, left - k, inner, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, inner, &mut Vec::with_capacity(inner.len()), &mut out);
    out
}

/// `Σ_{νb} sgn_r · c^λ_{νb/τb : μ} · s_{(νb/τb, τ)^⋆}` evaluated directly.
pub fn sxp_direct(tau: &Partition, s: &SkewShape, r: usize) -> SchurExpansion {
    assert!(r > 0, "plethysm with p_0");
    let tq = r_quotient(tau, r).expect("r > 0");
    let degree = tau.size() + r * s.size();
    let terms: Vec<(Partition, i64)> = skew_multipartitions(&tq, s.size())
        .into_par_iter()
        .filter_map(|q| {
            let c = lr_coefficient(s.outer(), &q.append(s.inner())).expect("sizes agree");
            if c == 0 {
                return None;
            }
            let nu = star(&q, tau, r).expect("quotient over τ");
            let sign = sgn_r(&SkewShape::new(nu.clone(), tau.clone()).expect("star contains τ"), r);
            Some((nu, i64::from(sign) * c as i64))
        })
        .collect();
    SchurExpansion::from_terms(degree, terms).expect("shapes have the output degree")
}

/// `s_λ ∘ p_r = Σ_{νb ⊢ n} sgn_r(ν^⋆) c^λ_{νb} s_{ν^⋆}` over r-multipartitions with empty core.
pub fn sxp_classic(lambda: &Partition, r: usize) -> SchurExpansion {
    assert!(r > 0, "plethysm with p_0");
    let empty = vec![Partition::empty(); r];
    let mut out = SchurExpansion::zero(r * lambda.size());
    for q in skew_multipartitions(&empty, lambda.size()) {
        let c = lr_coefficient(lambda, &q).expect("sizes agree");
        if c == 0 {
            continue;
        }
        let nu = star(&q, &Partition::empty(), r).expect("empty core");
        let sign = sgn_r(&SkewShape::straight(nu.clone()), r);
        out.add_term(nu, i64::from(sign) * c as i64).expect("degree");
    }
    out
}

/// `s_τ s_{λ/μ} = Σ_ν c^λ_{(ν/τ, μ)} s_ν`.
pub fn lr_product_skew(tau: &Partition, s: &SkewShape) -> SchurExpansion {
    let degree = tau.size() + s.size();
    let terms = Partition::all(degree).into_iter().filter(|nu| nu.contains(tau)).filter_map(|nu| {
        let q = SkewMultiShape::new(vec![SkewShape::new(nu.clone(), tau.clone()).expect("contained")]);
        let c = lr_coefficient(s.outer(), &q.append(s.inner())).expect("sizes agree");
        (c > 0).then_some((nu, c as i64))
    });
    SchurExpansion::from_terms(degree, terms).expect("degree")
}

/// `s_{ν/τ} = Σ_λ c^ν_{(λ, τ)} s_λ`.
pub fn lr_skew_expansion(s: &SkewShape) -> SchurExpansion {
    let terms = Partition::all(s.size()).into_iter().filter_map(|lam| {
        let q = SkewMultiShape::new(vec![SkewShape::straight(lam.clone()), SkewShape::straight(s.inner().clone())]);
        let c = lr_coefficient(s.outer(), &q).expect("sizes agree");
        (c > 0).then_some((lam, c as i64))
    });
    SchurExpansion::from_terms(s.size(), terms).expect("degree")
}

/// `⟨s_{ν/τ}, s_{λ/μ}⟩` as the number of `t ∈ SSYT(ν/τ, λ−μ)` with `(t, u(μ))` latticed.
pub fn skew_inner_product(a: &SkewShape, b: &SkewShape) -> u64 {
    if a.size() != b.size() {
        return 0;
    }
    lr_coefficient(b.outer(), &SkewMultiShape::new(vec![a.clone()]).append(b.inner())).expect("sizes agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{inner_product, oracle_product_plethysm, skew_schur};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn worked_example_traces() {
        let nu = p(&[6, 5, 5, 5, 2]);
        let t = pipeline_trace(&p(&[3, 2]), &sk(&[3, 3], &[]), 3);
        assert_eq!(t.jacobi_trudi.len(), 2);
        let st = t.shape(&nu).unwrap();
        assert_eq!(st.ribbon_counts, vec![4, 3]);
        assert_eq!((st.summands, st.cancelled, st.survivors, st.lr), (7, 6, 1, 1));
        assert_eq!(st.sign_r, 1);
        assert!(st.involution_consistent);
        assert_eq!(t.result.coefficient(&nu), 1);

        let t = pipeline_trace(&p(&[3, 2]), &sk(&[4, 3], &[1]), 3);
        let st = t.shape(&nu).unwrap();
        assert_eq!(st.ribbon_counts, vec![4, 1]);
        assert_eq!((st.summands, st.cancelled, st.survivors, st.lr), (5, 2, 3, 3));
        assert_eq!(t.result.coefficient(&nu), 3);
    }

    #[test]
    fn one_row_has_no_cancellation() {
        for n in 1..=4 {
            for r in 1..=3 {
                let t = pipeline_trace(&Partition::empty(), &SkewShape::straight(Partition::from_padded(vec![n]).unwrap()), r);
                assert_eq!(t.jacobi_trudi.len(), 1);
                assert!(t.shapes.iter().all(|s| s.cancelled == 0));
            }
        }
    }

    #[test]
    fn square_of_h2() {
        let want = oracle_product_plethysm(&Partition::empty(), &sk(&[2], &[]), 2);
        assert_eq!(want.to_string(), "s[4] - s[3,1] + s[2,2]");
        assert_eq!(sxp_expand(&Partition::empty(), &sk(&[2], &[]), 2), want);
        assert_eq!(sxp_classic(&p(&[2]), 2), want);
    }

    #[test]
    fn classic_examples() {
        assert_eq!(sxp_classic(&p(&[2, 2]), 3).coefficient(&p(&[3, 3, 3, 3])), 1);
        assert_eq!(sxp_classic(&p(&[2, 2, 2]), 4).coefficient(&p(&[7, 4, 4, 4, 4, 1])), -1);
    }

    #[test]
    fn pipeline_direct_and_oracle_agree() {
        for r in 1..=3 {
            for tn in 0..=2 {
                for tau in Partition::all(tn) {
                    for n in 0..=3 {
                        for lam in Partition::all(n) {
                            for m in 0..=n {
                                for mu in Partition::all_within(m, &lam) {
                                    let s = SkewShape::new(lam.clone(), mu).unwrap();
                                    if r * s.size() + tn > 9 {
                                        continue;
                                    }
                                    let trace = pipeline_trace(&tau, &s, r);
                                    let oracle = oracle_product_plethysm(&tau, &s, r);
                                    assert_eq!(trace.result, oracle, "{tau} {s} r={r}");
                                    assert_eq!(sxp_direct(&tau, &s, r), oracle);
                                    for st in &trace.shapes {
                                        assert!(st.involution_consistent);
                                        assert_eq!(st.signed_summands, st.survivors as i64);
                                        assert_eq!(st.survivors as u64, st.lr);
                                        assert_eq!(st.summands, st.cancelled + st.survivors);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn r_one_gives_schur_function() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                let e = sxp_expand(&Partition::empty(), &SkewShape::straight(lam.clone()), 1);
                assert_eq!(e, SchurExpansion::schur(lam));
            }
        }
    }

    #[test]
    fn specializations() {
        assert_eq!(lr_skew_expansion(&sk(&[4, 3], &[1])).to_string(), "s[4,2] + s[3,3]");
        for n in 0..=5 {
            for tau in Partition::all(n) {
                assert_eq!(lr_product_skew(&tau, &SkewShape::straight(Partition::empty())), SchurExpansion::schur(tau));
            }
        }
        for n in 0..=6 {
            for nu in Partition::all(n) {
                for m in 0..=n {
                    for tau in Partition::all_within(m, &nu) {
                        let s = SkewShape::new(nu.clone(), tau.clone()).unwrap();
                        let expansion = lr_skew_expansion(&s);
                        assert_eq!(expansion, skew_schur(&s));
                        assert!(expansion.terms().all(|(_, c)| c > 0));
                    }
                }
            }
        }
    }

    #[test]
    fn skew_skew_inner_products() {
        for n in 0..=5 {
            for a in Partition::all(n) {
                for ai in 0..=n.min(2) {
                    for ain in Partition::all_within(ai, &a) {
                        let x = SkewShape::new(a.clone(), ain).unwrap();
                        let sx = skew_schur(&x);
                        for b in Partition::all(n) {
                            for bin in Partition::all_within(ai, &b) {
                                let y = SkewShape::new(b.clone(), bin).unwrap();
                                let want = inner_product(&sx, &skew_schur(&y)).unwrap();
                                assert_eq!(skew_inner_product(&x, &y) as i64, want, "{x} {y}");
                            }
                        }
                    }
                }
            }
        }
    }
}
