//! The r-runner abacus: cores, quotients of straight and skew shapes, the
//! star construction and r-signs.
//!
//! Position `β` lies on runner `β mod r` at level `β div r`. A partition
//! with parts `p_1 ≥ p_2 ≥ …` is encoded with `b` beads at positions
//! `p_i + (b − i)` for `1 ≤ i ≤ b`.

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewMultiShape, SkewShape};

/// Bead configuration on an `r`-runner abacus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abacus {
    runners: usize,
    /// Occupied positions, strictly decreasing.
    positions: Vec<usize>,
}

/// Smallest multiple of `r` that is at least `parts`.
pub fn canonical_beads(parts: usize, r: usize) -> usize {
    parts.div_ceil(r) * r
}

impl Abacus {
    pub fn runners(&self) -> usize {
        self.runners
    }

    pub fn bead_count(&self) -> usize {
        self.positions.len()
    }

    /// Occupied positions in decreasing order.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn has_bead(&self, position: usize) -> bool {
        self.positions.binary_search_by(|p| position.cmp(p)).is_ok()
    }

    /// Levels of the beads on `runner`, decreasing.
    pub fn runner_levels(&self, runner: usize) -> Vec<usize> {
        self.positions
            .iter()
            .filter(|&&p| p % self.runners == runner)
            .map(|&p| p / self.runners)
            .collect()
    }

    fn from_positions(runners: usize, mut positions: Vec<usize>) -> Abacus {
        positions.sort_unstable_by(|a, b| b.cmp(a));
        Abacus { runners, positions }
    }

    /// Moves the bead at `position` to `position + r`.
    pub fn move_down(&self, position: usize) -> Result<Abacus> {
        let target = position + self.runners;
        if !self.has_bead(position) || self.has_bead(target) {
            return Err(Error::IllegalMove { position });
        }
        let positions =
            self.positions.iter().map(|&p| if p == position { target } else { p }).collect();
        Ok(Abacus::from_positions(self.runners, positions))
    }

    /// Row number of the r-border strip added by moving the bead at
    /// `position` down one step: one more than the number of beads beyond
    /// `position + r`.
    pub fn strip_row_number(&self, position: usize) -> Result<usize> {
        let target = position + self.runners;
        if !self.has_bead(position) || self.has_bead(target) {
            return Err(Error::IllegalMove { position });
        }
        Ok(1 + self.positions.iter().filter(|&&p| p > target).count())
    }

    /// Number of beads strictly between `position` and `position + r`; the
    /// height of the strip added by moving that bead down.
    pub fn strip_height(&self, position: usize) -> Result<usize> {
        let target = position + self.runners;
        if !self.has_bead(position) || self.has_bead(target) {
            return Err(Error::IllegalMove { position });
        }
        Ok(self.positions.iter().filter(|&&p| p > position && p < target).count())
    }
}

fn check_runners(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::ZeroRunners)
    } else {
        Ok(())
    }
}

/// Encodes `p` with `beads` beads; `beads` must be a multiple of `r`.
pub fn abacus_from_partition(p: &Partition, r: usize, beads: usize) -> Result<Abacus> {
    check_runners(r)?;
    if !beads.is_multiple_of(r) || beads < p.len() {
        return Err(Error::BadBeadCount { beads, r, parts: p.len() });
    }
    Ok(encode(p, r, beads))
}

/// Encoding with an arbitrary bead count (`beads ≥ len(p)`); used for the
/// cyclic-shift behaviour of non-multiple bead counts.
fn encode(p: &Partition, r: usize, beads: usize) -> Abacus {
    let positions = (0..beads).map(|i| p.part(i) + (beads - 1 - i)).collect();
    Abacus { runners: r, positions }
}

pub fn partition_from_abacus(a: &Abacus) -> Partition {
    let b = a.positions.len();
    let parts = a.positions.iter().enumerate().map(|(i, &pos)| pos - (b - 1 - i)).collect();
    Partition::from_padded(parts).expect("abacus positions decode to a partition")
}

fn levels_to_partition(levels: &[usize]) -> Partition {
    let c = levels.len();
    let parts = levels.iter().enumerate().map(|(j, &l)| l - (c - 1 - j)).collect();
    Partition::from_padded(parts).expect("runner levels decode to a partition")
}

fn quotient_of(a: &Abacus) -> Vec<Partition> {
    (0..a.runners).map(|i| levels_to_partition(&a.runner_levels(i))).collect()
}

/// r-quotient using the canonical bead count.
pub fn r_quotient(p: &Partition, r: usize) -> Result<Vec<Partition>> {
    check_runners(r)?;
    Ok(quotient_of(&encode(p, r, canonical_beads(p.len(), r))))
}

/// r-quotient read from an abacus with any bead count `beads ≥ len(p)`.
/// Bead counts that are not multiples of `r` cyclically shift the result.
pub fn r_quotient_with_beads(p: &Partition, r: usize, beads: usize) -> Result<Vec<Partition>> {
    check_runners(r)?;
    if beads < p.len() {
        return Err(Error::BadBeadCount { beads, r, parts: p.len() });
    }
    Ok(quotient_of(&encode(p, r, beads)))
}

/// The partition left after sliding every bead as far up its runner as it goes.
pub fn r_core(p: &Partition, r: usize) -> Result<Partition> {
    check_runners(r)?;
    let a = encode(p, r, canonical_beads(p.len(), r));
    let mut positions = Vec::with_capacity(a.bead_count());
    for i in 0..r {
        let c = a.runner_levels(i).len();
        positions.extend((0..c).map(|l| l * r + i));
    }
    Ok(partition_from_abacus(&Abacus::from_positions(r, positions)))
}

/// Abaci for outer and inner shapes with a common bead count.
fn common_abaci(s: &SkewShape, r: usize) -> (Abacus, Abacus) {
    let beads = canonical_beads(s.outer().len(), r);
    (encode(s.outer(), r, beads), encode(s.inner(), r, beads))
}

fn same_runner_counts(a: &Abacus, b: &Abacus) -> bool {
    (0..a.runners).all(|i| a.runner_levels(i).len() == b.runner_levels(i).len())
}

/// r-quotient of a skew shape, componentwise `outer(i)/inner(i)`.
pub fn skew_quotient(s: &SkewShape, r: usize) -> Result<SkewMultiShape> {
    check_runners(r)?;
    let (outer, inner) = common_abaci(s, r);
    if !same_runner_counts(&outer, &inner) {
        return Err(Error::CoreMismatch { r });
    }
    let oq = quotient_of(&outer);
    let iq = quotient_of(&inner);
    oq.into_iter()
        .zip(iq)
        .enumerate()
        .map(|(i, (o, n))| SkewShape::new(o, n).map_err(|_| Error::NotComponentwiseSkew { runner: i }))
        .collect::<Result<Vec<_>>>()
        .map(SkewMultiShape::new)
}

/// The unique partition `ν ⊇ τ` whose skew quotient over `τ` is `q`.
pub fn star(q: &SkewMultiShape, tau: &Partition, r: usize) -> Result<Partition> {
    check_runners(r)?;
    if q.len() != r {
        return Err(Error::LengthMismatch { expected: r, got: q.len() });
    }
    let tq = r_quotient(tau, r)?;
    if q.inners() != tq {
        return Err(Error::QuotientMismatch);
    }
    let extra = q.components().iter().map(|c| c.outer().len()).max().unwrap_or(0);
    let beads = canonical_beads(tau.len(), r) + r * extra;
    let base = encode(tau, r, beads);
    let mut positions = Vec::with_capacity(beads);
    for (i, comp) in q.components().iter().enumerate() {
        let c = base.runner_levels(i).len();
        let lv = comp.outer().padded(c);
        positions.extend((0..c).map(|j| (lv[j] + (c - 1 - j)) * r + i));
    }
    Ok(partition_from_abacus(&Abacus::from_positions(r, positions)))
}

/// Per-runner bead correspondences `(from, to)` for an r-decomposable skew
/// shape, or `None` when the shape is not r-decomposable.
fn bead_matching(s: &SkewShape, r: usize) -> Option<(Abacus, Vec<(usize, usize)>)> {
    let (outer, inner) = common_abaci(s, r);
    let mut pairs = Vec::new();
    for i in 0..r {
        let lo = inner.runner_levels(i);
        let hi = outer.runner_levels(i);
        if lo.len() != hi.len() {
            return None;
        }
        for (a, b) in lo.iter().zip(&hi) {
            if b < a {
                return None;
            }
            pairs.push((a * r + i, b * r + i));
        }
    }
    Some((inner, pairs))
}

/// True when `s` can be built from r-border strips.
pub fn is_r_decomposable(s: &SkewShape, r: usize) -> bool {
    r > 0 && bead_matching(s, r).is_some()
}

/// r-sign of a skew shape: product of `(−1)^height` over any r-border-strip
/// decomposition, 0 if none exists. Computed as the parity of the bead
/// permutation taking the inner abacus to the outer one.
pub fn sgn_r(s: &SkewShape, r: usize) -> i8 {
    if r == 0 {
        return 0;
    }
    let Some((_, mut pairs)) = bead_matching(s, r) else {
        return 0;
    };
    pairs.sort_unstable();
    let targets: Vec<usize> = pairs.iter().map(|&(_, t)| t).collect();
    let mut inversions = 0usize;
    for i in 0..targets.len() {
        for j in i + 1..targets.len() {
            if targets[i] > targets[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A border strip `outer/inner`: nonempty, edge-connected, no 2×2 block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorderStrip {
    shape: SkewShape,
}

impl BorderStrip {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        let shape = SkewShape::new(outer, inner)?;
        if is_border_strip(&shape) {
            Ok(BorderStrip { shape })
        } else {
            Err(Error::ShapeMismatch(format!("{shape} is not a border strip")))
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        self.shape.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.shape.inner()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    fn nonempty_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.shape.rows()).filter(|&a| {
            let (s, e) = self.shape.row_range(a);
            s < e
        })
    }

    /// Rows met, minus one.
    pub fn height(&self) -> usize {
        self.nonempty_rows().count() - 1
    }

    /// Least row met, 1-based.
    pub fn row_number(&self) -> usize {
        self.nonempty_rows().next().expect("border strips are nonempty") + 1
    }

    /// Greatest row met, 1-based.
    pub fn bottom_row(&self) -> usize {
        self.nonempty_rows().last().expect("border strips are nonempty") + 1
    }

    /// Least column met, 1-based.
    pub fn column_number(&self) -> usize {
        self.nonempty_rows().map(|a| self.shape.row_range(a).0).min().expect("nonempty") + 1
    }

    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.shape.boxes()
    }

    pub fn conjugate(&self) -> BorderStrip {
        BorderStrip { shape: self.shape.conjugate() }
    }
}

/// Geometric border-strip test.
pub fn is_border_strip(s: &SkewShape) -> bool {
    let rows: Vec<usize> = (0..s.rows())
        .filter(|&a| {
            let (b, e) = s.row_range(a);
            b < e
        })
        .collect();
    if rows.is_empty() {
        return false;
    }
    rows.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        b == a + 1 && s.outer().part(b) == s.inner().part(a) + 1
    })
}

/// All ways to remove an r-border strip from `p`: `(smaller, height)` for
/// each box of hook length `r`.
pub fn removable_strips(p: &Partition, r: usize) -> Vec<(Partition, usize)> {
    let conj = p.conjugate();
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in 0..p.part(i) {
            let arm = p.part(i) - j - 1;
            let leg = conj.part(j) - i - 1;
            if arm + leg + 1 != r {
                continue;
            }
            let mut parts = p.parts().to_vec();
            for k in i..i + leg {
                parts[k] = p.part(k + 1) - 1;
            }
            parts[i + leg] = j;
            out.push((Partition::from_padded(parts).expect("rim hook removal"), leg));
        }
    }
    out
}

/// All ways to add an r-border strip to `p`: `(larger, strip)`.
pub fn addable_strips(p: &Partition, r: usize) -> Vec<(Partition, BorderStrip)> {
    if r == 0 {
        return Vec::new();
    }
    let a = encode(p, r, canonical_beads(p.len() + r, r));
    let mut out: Vec<(Partition, BorderStrip)> = a
        .positions()
        .iter()
        .filter_map(|&pos| a.move_down(pos).ok())
        .map(|b| {
            let q = partition_from_abacus(&b);
            let strip = BorderStrip::new(q.clone(), p.clone()).expect("bead move adds a border strip");
            (q, strip)
        })
        .collect();
    out.sort_by(|x, y| y.0.cmp(&x.0));
    out
}
