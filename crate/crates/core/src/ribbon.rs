//! Horizontal r-ribbon strips, r-ribbon tableaux and their statistics.
//!
//! A horizontal r-ribbon strip is added by single-step bead moves taken in
//! increasing order of source position; the strip's border strips then have
//! weakly decreasing row numbers.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::abacus::{canonical_beads, r_quotient, removable_strips, sgn_r, skew_quotient, star, BorderStrip};
use crate::error::{Error, Result};
use crate::partition::{Composition, Partition, SkewMultiShape, SkewShape};
use crate::symfunc::SchurExpansion;
use crate::tableaux::{MultiTableau, SkewTableau, Word};

/// Bead occupancy with a fixed number of beads.
#[derive(Clone, Debug)]
struct Beads {
    r: usize,
    occupied: Vec<bool>,
}

impl Beads {
    /// `len` must exceed the highest bead position.
    fn new(p: &Partition, r: usize, beads: usize, len: usize) -> Self {
        let mut occupied = vec![false; len];
        for i in 0..beads {
            let part = if i < p.len() { p.part(i) } else { 0 };
            occupied[part + beads - 1 - i] = true;
        }
        Beads { r, occupied }
    }

    fn can_move(&self, pos: usize) -> bool {
        self.occupied[pos] && pos + self.r < self.occupied.len() && !self.occupied[pos + self.r]
    }

    fn shift(&mut self, pos: usize, forward: bool) {
        let (from, to) = if forward { (pos, pos + self.r) } else { (pos + self.r, pos) };
        self.occupied[from] = false;
        self.occupied[to] = true;
    }

    fn partition(&self) -> Partition {
        let mut parts = Vec::new();
        let mut gaps = 0;
        let mut below = Vec::with_capacity(self.occupied.len());
        for &o in &self.occupied {
            below.push(gaps);
            if !o {
                gaps += 1;
            }
        }
        for pos in (0..self.occupied.len()).rev() {
            if self.occupied[pos] {
                if below[pos] == 0 {
                    break;
                }
                parts.push(below[pos]);
            }
        }
        Partition::new(parts).expect("bead positions give a partition")
    }
}

/// A horizontal r-ribbon strip with its chain of border strips.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonStrip {
    shape: SkewShape,
    r: usize,
    chain: Vec<Partition>,
}

impl RibbonStrip {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `σ^(0) ⊂ … ⊂ σ^(q)`.
    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn border_strips(&self) -> Vec<BorderStrip> {
        self.chain
            .windows(2)
            .map(|w| BorderStrip::new(w[1].clone(), w[0].clone()).expect("chain steps are border strips"))
            .collect()
    }

    pub fn row_numbers(&self) -> Vec<usize> {
        self.border_strips().iter().map(BorderStrip::row_number).collect()
    }
}

/// Skew shape has `|s| ≡ 0 mod r` and each quotient component has at most
/// one box per column.
pub fn is_horizontal_strip(s: &SkewShape, r: usize) -> bool {
    if r == 0 || !s.size().is_multiple_of(r) {
        return false;
    }
    match skew_quotient(s, r) {
        Ok(q) => q.components().iter().all(|c| c.boxes().iter().all(|&(a, b)| !c.contains_box(a + 1, b))),
        Err(_) => false,
    }
}

/// The unique border-strip chain of a horizontal r-ribbon strip.
pub fn strip_chain(s: &SkewShape, r: usize) -> Result<RibbonStrip> {
    if !is_horizontal_strip(s, r) {
        return Err(Error::NotAStrip { r });
    }
    let beads = canonical_beads(s.outer().len(), r);
    let len = beads + s.outer().part(0);
    let mut state = Beads::new(s.inner(), r, beads, len);
    let to = Beads::new(s.outer(), r, beads, len);
    let mut sources = Vec::new();
    for pos in 0..len {
        if state.occupied[pos] && !to.occupied[pos] {
            let mut p = pos;
            while !to.occupied[p] {
                sources.push(p);
                p += r;
            }
        }
    }
    sources.sort_unstable();
    let mut chain = vec![s.inner().clone()];
    for pos in sources {
        state.shift(pos, true);
        chain.push(state.partition());
    }
    Ok(RibbonStrip { shape: s.clone(), r, chain })
}

/// An r-ribbon tableau: a chain `τ = ρ^(0) ⊂ … ⊂ ρ^(ℓ) = ν` whose step `j` is
/// a horizontal r-ribbon strip of size `r·α_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonTableau {
    shape: SkewShape,
    r: usize,
    weight: Composition,
    chain: Vec<Partition>,
    /// Per label, the border-strip chain from `ρ^(j-1)` to `ρ^(j)`.
    strips: Vec<Vec<Partition>>,
}

impl RibbonTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn weight(&self) -> &Composition {
        &self.weight
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// The horizontal ribbon strip with label `j` (1-based).
    pub fn strip(&self, j: usize) -> RibbonStrip {
        RibbonStrip {
            shape: SkewShape::new(self.chain[j].clone(), self.chain[j - 1].clone()).expect("chain is nested"),
            r: self.r,
            chain: self.strips[j - 1].clone(),
        }
    }

    /// Every border strip with its label.
    pub fn labelled_border_strips(&self) -> Vec<(usize, BorderStrip)> {
        (1..self.chain.len()).flat_map(|j| self.strip(j).border_strips().into_iter().map(move |b| (j, b))).collect()
    }

    /// Labels of the boxes of the shape, `None` outside.
    pub fn box_labels(&self) -> Vec<Vec<Option<usize>>> {
        let outer = self.shape.outer();
        let mut rows: Vec<Vec<Option<usize>>> = outer.parts().iter().map(|&n| vec![None; n]).collect();
        for (j, b) in self.labelled_border_strips() {
            for (a, c) in b.boxes() {
                rows[a][c] = Some(j);
            }
        }
        rows
    }

    /// Index of the border strip covering each box, in the order of
    /// [`Self::labelled_border_strips`].
    pub fn box_strip_ids(&self) -> Vec<Vec<Option<usize>>> {
        let outer = self.shape.outer();
        let mut rows: Vec<Vec<Option<usize>>> = outer.parts().iter().map(|&n| vec![None; n]).collect();
        for (id, (_, b)) in self.labelled_border_strips().into_iter().enumerate() {
            for (a, c) in b.boxes() {
                rows[a][c] = Some(id);
            }
        }
        rows
    }
}

impl fmt::Display for RibbonTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.box_labels();
        for (a, row) in rows.iter().enumerate() {
            if a > 0 {
                writeln!(f)?;
            }
            for x in row {
                match x {
                    Some(j) if *j < 10 => write!(f, "{j}")?,
                    Some(j) => write!(f, "({j})")?,
                    None => write!(f, ".")?,
                }
            }
        }
        Ok(())
    }
}

impl Serialize for RibbonTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            chain: Vec<String>,
            labels: &'a [Vec<Option<usize>>],
        }
        let labels = self.box_labels();
        Repr { chain: self.chain.iter().map(ToString::to_string).collect(), labels: &labels }.serialize(s)
    }
}

struct Enumerator<'a, F> {
    weight: &'a [usize],
    bound: Option<&'a Partition>,
    chain: Vec<Partition>,
    strips: Vec<Vec<Partition>>,
    visit: F,
}

impl<F: FnMut(&[Partition], &[Vec<Partition>])> Enumerator<'_, F> {
    fn label(&mut self, j: usize, beads: &mut Beads) {
        if j == self.weight.len() {
            (self.visit)(&self.chain, &self.strips);
            return;
        }
        self.strips.push(vec![self.chain[j].clone()]);
        self.moves(j, 0, self.weight[j], beads);
        self.strips.pop();
    }

    fn moves(&mut self, j: usize, min_source: usize, left: usize, beads: &mut Beads) {
        if left == 0 {
            let rho = self.strips[j].last().cloned().expect("strip chain is nonempty");
            self.chain.push(rho);
            self.label(j + 1, beads);
            self.chain.pop();
            return;
        }
        for pos in min_source..beads.occupied.len() {
            if !beads.can_move(pos) {
                continue;
            }
            beads.shift(pos, true);
            let p = beads.partition();
            if self.bound.is_none_or(|b| b.contains(&p)) {
                self.strips[j].push(p);
                self.moves(j, pos + 1, left - 1, beads);
                self.strips[j].pop();
            }
            beads.shift(pos, false);
        }
    }
}

/// Visits every r-ribbon tableau of weight `α` on top of `τ`, optionally
/// inside `bound`, as raw chains.
fn visit_chains<F: FnMut(&[Partition], &[Vec<Partition>])>(
    tau: &Partition,
    alpha: &Composition,
    r: usize,
    bound: Option<&Partition>,
    visit: F,
) {
    let Some(weight) = alpha.to_counts() else {
        return;
    };
    let n: usize = weight.iter().sum();
    let rows = match bound {
        Some(b) => b.len(),
        None => tau.len() + r * n,
    };
    let beads = canonical_beads(rows.max(tau.len()), r);
    let mut state = Beads::new(tau, r, beads, beads + tau.part(0) + r * n + 1);
    let mut e = Enumerator { weight: &weight, bound, chain: vec![tau.clone()], strips: Vec::new(), visit };
    e.label(0, &mut state);
}

/// All r-ribbon tableaux of shape `s` and weight `α`, in a fixed order.
pub fn enumerate_ribbon_tableaux(s: &SkewShape, alpha: &Composition, r: usize) -> Vec<RibbonTableau> {
    let mut out = Vec::new();
    if r == 0 || s.size() as i64 != r as i64 * alpha.total() {
        return out;
    }
    visit_chains(s.inner(), alpha, r, Some(s.outer()), |chain, strips| {
        if chain.last() == Some(s.outer()) {
            out.push(RibbonTableau {
                shape: s.clone(),
                r,
                weight: alpha.clone(),
                chain: chain.to_vec(),
                strips: strips.to_vec(),
            });
        }
    });
    out
}

/// Every r-ribbon tableau of weight `α` with inner shape `τ`, grouped by
/// outer shape.
pub fn ribbon_tableaux_over(tau: &Partition, alpha: &Composition, r: usize) -> BTreeMap<Partition, Vec<RibbonTableau>> {
    let mut out: BTreeMap<Partition, Vec<RibbonTableau>> = BTreeMap::new();
    if r == 0 {
        return out;
    }
    visit_chains(tau, alpha, r, None, |chain, strips| {
        let nu = chain.last().expect("nonempty chain").clone();
        let t = RibbonTableau {
            shape: SkewShape::new(nu.clone(), tau.clone()).expect("chain is nested"),
            r,
            weight: alpha.clone(),
            chain: chain.to_vec(),
            strips: strips.to_vec(),
        };
        out.entry(nu).or_default().push(t);
    });
    out
}

pub fn count_ribbon_tableaux(s: &SkewShape, alpha: &Composition, r: usize) -> u64 {
    let mut n = 0;
    if r == 0 || s.size() as i64 != r as i64 * alpha.total() {
        return 0;
    }
    visit_chains(s.inner(), alpha, r, Some(s.outer()), |chain, _| {
        if chain.last() == Some(s.outer()) {
            n += 1;
        }
    });
    n
}

/// Builds a ribbon tableau from its chain, checking each step.
pub fn ribbon_tableau_from_chain(chain: Vec<Partition>, r: usize) -> Result<RibbonTableau> {
    let first = chain.first().cloned().unwrap_or_default();
    let last = chain.last().cloned().unwrap_or_default();
    let shape = SkewShape::new(last, first)?;
    let mut strips = Vec::new();
    let mut weight = Vec::new();
    for w in chain.windows(2) {
        let step = SkewShape::new(w[1].clone(), w[0].clone())?;
        weight.push((step.size() / r.max(1)) as i64);
        strips.push(strip_chain(&step, r)?.chain);
    }
    Ok(RibbonTableau { shape, r, weight: Composition(weight), chain, strips })
}

/// The multitableau on the skew r-quotient: label `j` goes in the boxes
/// by which the quotient of `ρ^(j)` exceeds that of `ρ^(j-1)`.
pub fn ribbon_to_multitableau(t: &RibbonTableau) -> MultiTableau {
    let r = t.r;
    let q = skew_quotient(&t.shape, r).expect("ribbon tableau shapes have a skew quotient");
    let quotients: Vec<Vec<Partition>> = t.chain.iter().map(|p| r_quotient(p, r).expect("r > 0")).collect();
    let comps = q
        .components()
        .iter()
        .enumerate()
        .map(|(i, shape)| {
            let rows = (0..shape.rows())
                .map(|a| {
                    let (lo, hi) = shape.row_range(a);
                    (lo..hi)
                        .map(|c| (1..quotients.len()).find(|&j| quotients[j][i].contains_box(a, c)).expect("box is covered"))
                        .collect()
                })
                .collect();
            SkewTableau::new(shape.clone(), rows).expect("entries fill the shape")
        })
        .collect();
    MultiTableau::new(comps)
}

/// Inverse of [`ribbon_to_multitableau`] for a semistandard multitableau on
/// the quotient of a skew shape over `τ`.
pub fn multitableau_to_ribbon(t: &MultiTableau, tau: &Partition, r: usize) -> Result<RibbonTableau> {
    if !t.is_semistandard() {
        return Err(Error::ShapeMismatch("multitableau is not semistandard".into()));
    }
    let labels = t.content().len();
    let mut chain = vec![tau.clone()];
    for j in 1..=labels {
        let comps = t
            .components()
            .iter()
            .map(|c| {
                let rows: Vec<usize> =
                    (0..c.shape().rows()).map(|a| c.shape().row_range(a).0 + c.rows()[a].iter().filter(|&&x| x <= j).count()).collect();
                SkewShape::new(Partition::from_padded(rows)?, c.shape().inner().clone())
            })
            .collect::<Result<Vec<_>>>()?;
        chain.push(star(&SkewMultiShape::new(comps), tau, r)?);
    }
    ribbon_tableau_from_chain(chain, r)
}

/// Schur expansion of `s_τ (h_α ∘ p_r)` by signed ribbon-tableau counts.
pub fn plethystic_mn(tau: &Partition, alpha: &Composition, r: usize) -> SchurExpansion {
    let degree = tau.size() + r * alpha.total().max(0) as usize;
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    if alpha.is_proper() && r > 0 {
        visit_chains(tau, alpha, r, None, |chain, _| {
            *counts.entry(chain.last().expect("nonempty chain").clone()).or_insert(0) += 1;
        });
    }
    let terms = counts.into_iter().map(|(nu, c)| {
        let sign = sgn_r(&SkewShape::new(nu.clone(), tau.clone()).expect("chain is nested"), r);
        (nu, c * i64::from(sign))
    });
    SchurExpansion::from_terms(degree, terms).expect("all shapes have the same size")
}

/// Labels of the border strips, each read in its leftmost column, columns
/// left to right and each column bottom to top.
pub fn column_word(t: &RibbonTableau) -> Word {
    Word(column_order(t).into_iter().map(|(j, _)| j).collect())
}

fn column_order(t: &RibbonTableau) -> Vec<(usize, BorderStrip)> {
    let mut strips = t.labelled_border_strips();
    strips.sort_by_key(|(_, b)| {
        let c = b.column_number();
        let lowest = b.boxes().iter().filter(|&&(_, col)| col + 1 == c).map(|&(a, _)| a).max().unwrap_or(0);
        (c, std::cmp::Reverse(lowest))
    });
    strips
}

/// Row `a` holds a label `i` for each border strip of row number `a` in the
/// ribbon strip labelled `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct RowNumberTableau {
    rows: Vec<Vec<usize>>,
}

impl RowNumberTableau {
    pub fn new(mut rows: Vec<Vec<usize>>) -> Self {
        for row in &mut rows {
            row.sort_unstable();
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        RowNumberTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Rows from the last to the first, each left to right.
    pub fn word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn content(&self) -> Composition {
        crate::tableaux::word_content(&self.word())
    }

    pub fn is_latticed(&self) -> bool {
        crate::coplactic::is_latticed_word(&self.word())
    }
}

impl fmt::Display for RowNumberTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| Word(r.clone()).to_string()).collect();
        write!(f, "{}", rows.join("/"))
    }
}

pub fn row_number_tableau(t: &RibbonTableau) -> RowNumberTableau {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (j, b) in t.labelled_border_strips() {
        let a = b.row_number();
        if rows.len() < a {
            rows.resize(a, Vec::new());
        }
        rows[a - 1].push(j);
    }
    RowNumberTableau::new(rows)
}

/// Least column (1-based) met by the border strip.
pub fn column_number(d: &BorderStrip) -> usize {
    d.column_number()
}

/// Block sort of the `{k, k+1}` subword of a column word: at the first
/// inversion `j` (a `k` followed by a `k+1` of larger row number), sort
/// positions `j..=j+s` into decreasing order, where `s` is maximal with a
/// larger row number than position `j`, then continue after the block.
/// Input pairs are `(label, row number)` in column-word order.
///
/// The result only moves letters `k+1` to the left, so it preserves the
/// lattice property; it need not equal the row-number subword.
pub fn inversion_sort(items: &[(usize, usize)], k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = items.iter().map(|&(n, _)| n).collect();
    let mut j = 0;
    while j + 1 < items.len() {
        let (n, r) = items[j];
        let (n1, r1) = items[j + 1];
        if n == k && n1 == k + 1 && r < r1 {
            let s = (1..items.len() - j).filter(|&s| r < items[j + s].1).max().expect("s = 1 qualifies");
            out[j..=j + s].sort_unstable_by(|a, b| b.cmp(a));
            j += s + 1;
        } else {
            j += 1;
        }
    }
    out
}

/// `(label, row number)` of the border strips labelled `k` or `k+1`, in
/// column-word order.
pub fn column_pairs(t: &RibbonTableau, k: usize) -> Vec<(usize, usize)> {
    column_order(t).into_iter().filter(|(j, _)| *j == k || *j == k + 1).map(|(j, b)| (j, b.row_number())).collect()
}

/// Horizontal r-ribbon strips of size `r·q` on top of `p`, by direct search
/// over border-strip chains with weakly decreasing row numbers.
pub fn chains_by_search(s: &SkewShape, r: usize) -> Vec<Vec<Partition>> {
    // walk down from the outer shape removing border strips
    fn go(cur: &Partition, s: &SkewShape, r: usize, min_row: usize, path: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if cur == s.inner() {
            let mut c = path.clone();
            c.reverse();
            out.push(c);
            return;
        }
        for (smaller, _) in removable_strips(cur, r) {
            if !smaller.contains(s.inner()) {
                continue;
            }
            let row = BorderStrip::new(cur.clone(), smaller.clone()).expect("removable strip").row_number();
            if row < min_row {
                continue;
            }
            path.push(smaller.clone());
            go(&smaller, s, r, row, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 || !s.size().is_multiple_of(r) {
        return out;
    }
    let mut path = vec![s.outer().clone()];
    go(s.outer(), s, r, 1, &mut path, &mut out);
    out
}

/// Bead test: on every runner the beads of `τ` that leave and
/// the spaces of `ν` they fill interleave, and no bead is jumped over.
pub fn bead_move_test(s: &SkewShape, r: usize) -> bool {
    if r == 0 || !s.size().is_multiple_of(r) {
        return false;
    }
    let beads = canonical_beads(s.outer().len(), r);
    let len = beads + s.outer().part(0);
    let from = Beads::new(s.inner(), r, beads, len);
    let to = Beads::new(s.outer(), r, beads, len);
    for runner in 0..r {
        let cells: Vec<usize> = (runner..from.occupied.len()).step_by(r).collect();
        let mut sliding = false;
        for &c in &cells {
            match (from.occupied[c], to.occupied[c]) {
                (true, false) => {
                    if sliding {
                        return false;
                    }
                    sliding = true;
                }
                (false, true) => {
                    if !sliding {
                        return false;
                    }
                    sliding = false;
                }
                (true, true) if sliding => return false,
                _ => {}
            }
        }
        if sliding {
            return false;
        }
    }
    true
}
