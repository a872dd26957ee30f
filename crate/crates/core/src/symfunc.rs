//! Schur expansions and a brute-force oracle working with coefficients of
//! dominant monomials `x^ν`, `ν` a partition of the degree.
//!
//! With at least `d` variables a homogeneous symmetric function of degree
//! `d` is determined by its coefficients at `x^ν` for `ν ⊢ d`, and the
//! coefficient of `x^ν` in `s_λ` is the Kostka number `K_{λν}`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use parking_lot::RwLock;
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewMultiShape, SkewShape};

/// A finite integer combination of Schur functions of one degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion { degree, terms: BTreeMap::new() }
    }

    pub fn schur(p: Partition) -> Self {
        let mut e = Self::zero(p.size());
        e.terms.insert(p, 1);
        e
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut e = Self::zero(degree);
        for (p, c) in terms {
            e.add_term(p, c)?;
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, p: Partition, c: i64) -> Result<()> {
        if p.size() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.size() });
        }
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(c).expect("coefficient overflow");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Terms in decreasing lexicographic order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut e = Self::zero(self.degree);
        if k != 0 {
            e.terms = self.terms.iter().map(|(p, &c)| (p.clone(), c.checked_mul(k).expect("coefficient overflow"))).collect();
        }
        e
    }

    pub fn plus(&self, other: &SchurExpansion) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut e = self.clone();
        for (p, c) in other.terms() {
            e.add_term(p.clone(), c)?;
        }
        Ok(e)
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> u64 {
        self.terms.values().map(|c| c.unsigned_abs()).sum()
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (p, c) in self.terms() {
            m.serialize_entry(&p.to_string(), &c)?;
        }
        m.end()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

/// Coefficients of the dominant monomials of a homogeneous symmetric function.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DominantVector {
    degree: usize,
    entries: BTreeMap<Partition, i64>,
}

impl DominantVector {
    pub fn zero(degree: usize) -> Self {
        DominantVector { degree, entries: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, p: &Partition) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn set(&mut self, p: Partition, v: i64) -> Result<()> {
        if p.size() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.size() });
        }
        if v == 0 {
            self.entries.remove(&p);
        } else {
            self.entries.insert(p, v);
        }
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.entries.iter().rev().map(|(p, &c)| (p, c))
    }
}

type KostkaKey = (Vec<usize>, Vec<usize>, Vec<usize>);

fn kostka_cache() -> &'static RwLock<HashMap<KostkaKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<KostkaKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Number of semistandard tableaux of skew shape `s` with the given
/// content (any order; the count is symmetric in the content).
pub fn kostka(s: &SkewShape, content: &[usize]) -> u64 {
    let mut c: Vec<usize> = content.iter().copied().filter(|&x| x > 0).collect();
    c.sort_unstable_by(|a, b| b.cmp(a));
    if c.iter().sum::<usize>() != s.size() {
        return 0;
    }
    kostka_sorted(s.outer().parts(), s.inner().parts(), &c)
}

fn kostka_sorted(outer: &[usize], inner: &[usize], content: &[usize]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(outer == inner);
    };
    if rest.is_empty() {
        return u64::from(is_horizontal(outer, inner));
    }
    let key = (outer.to_vec(), inner.to_vec(), content.to_vec());
    if let Some(&v) = kostka_cache().read().get(&key) {
        return v;
    }
    let mut total = 0;
    for kappa in horizontal_removals(outer, inner, last) {
        total += kostka_sorted(&kappa, inner, rest);
    }
    kostka_cache().write().insert(key, total);
    total
}

fn is_horizontal(outer: &[usize], inner: &[usize]) -> bool {
    (0..outer.len()).all(|i| {
        let lo = inner.get(i).copied().unwrap_or(0);
        let next = outer.get(i + 1).copied().unwrap_or(0);
        lo >= next && lo <= outer[i]
    })
}

/// Partitions `κ` with `inner ⊆ κ ⊆ outer` and `outer/κ` a horizontal strip of size `m`.
fn horizontal_removals(outer: &[usize], inner: &[usize], m: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, left: usize, outer: &[usize], inner: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == outer.len() {
            if left == 0 {
                let mut k = cur.clone();
                while k.last() == Some(&0) {
                    k.pop();
                }
                out.push(k);
            }
            return;
        }
        let hi = outer[i];
        let lo = inner.get(i).copied().unwrap_or(0).max(outer.get(i + 1).copied().unwrap_or(0));
        if lo > hi {
            return;
        }
        for keep in lo..=hi {
            let take = hi - keep;
            if take > left {
                continue;
            }
            cur.push(keep);
            go(i + 1, left - take, outer, inner, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, outer, inner, &mut Vec::with_capacity(outer.len()), &mut out);
    out
}

pub fn schur_to_dominant(e: &SchurExpansion) -> DominantVector {
    let mut v = DominantVector::zero(e.degree);
    for mu in Partition::all(e.degree) {
        let mut total = 0i64;
        for (lam, c) in e.terms() {
            total += c * kostka(&SkewShape::straight(lam.clone()), mu.parts()) as i64;
        }
        v.set(mu, total).expect("degree matches");
    }
    v
}

/// Inverts [`schur_to_dominant`] by back-substitution, taking indices in
/// decreasing lexicographic order (a linear extension of dominance).
pub fn dominant_to_schur(v: &DominantVector) -> Result<SchurExpansion> {
    let all = Partition::all(v.degree);
    let mut residual: BTreeMap<Partition, i64> = v.entries.clone();
    let mut out = SchurExpansion::zero(v.degree);
    for lam in &all {
        let c = residual.get(lam).copied().unwrap_or(0);
        if c == 0 {
            continue;
        }
        out.add_term(lam.clone(), c)?;
        let straight = SkewShape::straight(lam.clone());
        for mu in all.iter().filter(|mu| *mu <= lam) {
            let k = kostka(&straight, mu.parts()) as i64;
            if k != 0 {
                *residual.entry(mu.clone()).or_insert(0) -= c * k;
            }
        }
    }
    if let Some((p, _)) = residual.iter().find(|(_, &c)| c != 0) {
        return Err(Error::NotUnitriangularConsistent(p.parts().to_vec()));
    }
    Ok(out)
}

/// Compositions `γ ≤ ν` (entrywise) with `Σγ = total` and every entry a multiple of `step`.
fn bounded_compositions(nu: &[usize], total: usize, step: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, left: usize, nu: &[usize], step: usize, room: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == nu.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if left > room[i] {
            return;
        }
        let mut g = 0;
        while g <= nu[i] && g <= left {
            cur.push(g);
            go(i + 1, left - g, nu, step, room, cur, out);
            cur.pop();
            g += step;
        }
    }
    // room[i]: the most the entries from i on can still absorb
    let mut room = vec![0; nu.len() + 1];
    for i in (0..nu.len()).rev() {
        room[i] = room[i + 1] + nu[i] / step * step;
    }
    let mut out = Vec::new();
    go(0, total, nu, step, &room, &mut Vec::with_capacity(nu.len()), &mut out);
    out
}

/// Schur expansion of `s_τ · (s_{λ/μ} ∘ p_r)` by monomial convolution.
pub fn oracle_product_plethysm(tau: &Partition, s: &SkewShape, r: usize) -> SchurExpansion {
    assert!(r > 0, "plethysm with p_0");
    let inner_deg = r * s.size();
    let degree = tau.size() + inner_deg;
    let tau_shape = SkewShape::straight(tau.clone());
    let mut v = DominantVector::zero(degree);
    for nu in Partition::all(degree) {
        let mut total = 0i64;
        for gamma in bounded_compositions(nu.parts(), inner_deg, r) {
            let reduced: Vec<usize> = gamma.iter().map(|g| g / r).collect();
            let a = kostka(s, &reduced);
            if a == 0 {
                continue;
            }
            let beta: Vec<usize> = nu.parts().iter().zip(&gamma).map(|(n, g)| n - g).collect();
            total += (a * kostka(&tau_shape, &beta)) as i64;
        }
        v.set(nu, total).expect("degree matches");
    }
    dominant_to_schur(&v).expect("a symmetric function always inverts")
}

/// `s_{λ/μ}` in the Schur basis, via Kostka numbers.
pub fn skew_schur(s: &SkewShape) -> SchurExpansion {
    let mut v = DominantVector::zero(s.size());
    for nu in Partition::all(s.size()) {
        let k = kostka(s, nu.parts()) as i64;
        v.set(nu, k).expect("degree matches");
    }
    dominant_to_schur(&v).expect("a symmetric function always inverts")
}

/// `s_{λ/μ} ∘ p_r` in the Schur basis.
pub fn plethysm(s: &SkewShape, r: usize) -> SchurExpansion {
    oracle_product_plethysm(&Partition::empty(), s, r)
}

pub fn inner_product(a: &SchurExpansion, b: &SchurExpansion) -> Result<i64> {
    if a.degree != b.degree {
        return Err(Error::DegreeMismatch { left: a.degree, right: b.degree });
    }
    Ok(a.terms.iter().map(|(p, &c)| c * b.coefficient(p)).sum())
}

/// Product of two expansions by convolution of their dominant coefficients.
pub fn schur_product(a: &SchurExpansion, b: &SchurExpansion) -> SchurExpansion {
    let degree = a.degree + b.degree;
    let va = schur_to_dominant(a);
    let vb = schur_to_dominant(b);
    let lookup = |v: &DominantVector, comp: &[usize]| {
        let mut parts: Vec<usize> = comp.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        v.get(&Partition::new(parts).expect("sorted positive parts"))
    };
    let mut v = DominantVector::zero(degree);
    for nu in Partition::all(degree) {
        let mut total = 0i64;
        for beta in bounded_compositions(nu.parts(), a.degree, 1) {
            let x = lookup(&va, &beta);
            if x == 0 {
                continue;
            }
            let gamma: Vec<usize> = nu.parts().iter().zip(&beta).map(|(n, g)| n - g).collect();
            total += x * lookup(&vb, &gamma);
        }
        v.set(nu, total).expect("degree matches");
    }
    dominant_to_schur(&v).expect("a symmetric function always inverts")
}

/// `Π_i s_{q(i)}` for a skew multishape `q`.
pub fn multi_skew_product(q: &SkewMultiShape) -> SchurExpansion {
    q.components()
        .iter()
        .fold(SchurExpansion::schur(Partition::empty()), |acc, c| schur_product(&acc, &skew_schur(c)))
}
