//! Row-standard and semistandard skew tableaux, multitableaux, reading
//! words, enumeration by content, and the shape/content involution.

use std::fmt;
use std::ops::{ControlFlow, Deref};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition, SkewMultiShape, SkewShape};

/// A word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Deref for Word {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&x| x > 9) { "," } else { "" };
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "{sep}")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Letter multiplicities; entry `i` counts the letter `i + 1`.
pub fn word_content(w: &[usize]) -> Composition {
    let max = w.iter().copied().max().unwrap_or(0);
    let mut c = vec![0i64; max];
    for &x in w {
        c[x - 1] += 1;
    }
    Composition(c)
}

/// A row-standard filling of a skew shape with positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    shape: SkewShape,
    /// `rows[a]` holds the entries of row `a`, left to right.
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Validates row lengths, positivity and weak increase along rows.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::ShapeMismatch(format!("{} rows for shape {shape}", rows.len())));
        }
        for (a, row) in rows.iter().enumerate() {
            let (s, e) = shape.row_range(a);
            if row.len() != e - s {
                return Err(Error::ShapeMismatch(format!("row {} has {} entries", a + 1, row.len())));
            }
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::ShapeMismatch(format!("row {} is not row-standard", a + 1)));
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn empty() -> Self {
        SkewTableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new() }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at `(row, col)`, 0-based, if the box lies in the shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let (s, e) = self.shape.row_range(row);
        (s <= col && col < e).then(|| self.rows[row][col - s])
    }

    /// Columns strictly increase downwards.
    pub fn is_semistandard(&self) -> bool {
        (1..self.rows.len()).all(|a| {
            let (s, e) = self.shape.row_range(a);
            (s..e).all(|b| match self.entry(a - 1, b) {
                Some(up) => up < self.rows[a][b - s],
                None => true,
            })
        })
    }

    pub fn content(&self) -> Composition {
        word_content(&self.word())
    }

    /// Rows read left to right, starting from the bottom row.
    pub fn word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Fills `shape` in reading order from `w`.
    pub fn from_word(shape: &SkewShape, w: &[usize]) -> Result<Self> {
        if w.len() != shape.size() {
            return Err(Error::SizeMismatch { left: w.len(), right: shape.size() });
        }
        let mut rows = vec![Vec::new(); shape.rows()];
        let mut it = w.iter();
        for a in (0..shape.rows()).rev() {
            let (s, e) = shape.row_range(a);
            rows[a] = it.by_ref().take(e - s).copied().collect();
        }
        SkewTableau::new(shape.clone(), rows)
    }

    /// Rows with `None` in the skew holes.
    pub fn to_json_rows(&self) -> Vec<Vec<Option<usize>>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(a, row)| {
                let holes = self.shape.inner().part(a);
                std::iter::repeat_n(None, holes).chain(row.iter().map(|&x| Some(x))).collect()
            })
            .collect()
    }

    pub fn from_json_rows(json: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for row in json {
            let holes = row.iter().take_while(|x| x.is_none()).count();
            let entries: Option<Vec<usize>> = row[holes..].iter().copied().collect();
            let entries =
                entries.ok_or_else(|| Error::ShapeMismatch("hole after an entry".into()))?;
            outer.push(row.len());
            inner.push(holes);
            rows.push(entries);
        }
        while outer.last() == Some(&0) {
            outer.pop();
            inner.pop();
            rows.pop();
        }
        let shape = SkewShape::new(Partition::from_padded(outer)?, Partition::from_padded(inner)?)?;
        rows.truncate(shape.rows());
        SkewTableau::new(shape, rows)
    }
}

impl Serialize for SkewTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Option<usize>>>::deserialize(d)?;
        SkewTableau::from_json_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, row) in self.rows.iter().enumerate() {
            if a > 0 {
                write!(f, "/")?;
            }
            for _ in 0..self.shape.inner().part(a) {
                write!(f, ".")?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// A tuple of skew tableaux read as one word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiTableau(pub Vec<SkewTableau>);

impl MultiTableau {
    pub fn new(components: Vec<SkewTableau>) -> Self {
        MultiTableau(components)
    }

    pub fn components(&self) -> &[SkewTableau] {
        &self.0
    }

    pub fn shape(&self) -> SkewMultiShape {
        SkewMultiShape::new(self.0.iter().map(|t| t.shape.clone()).collect())
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(SkewTableau::size).sum()
    }

    /// Concatenated component words.
    pub fn word(&self) -> Word {
        Word(self.0.iter().flat_map(|t| t.word().0).collect())
    }

    pub fn content(&self) -> Composition {
        word_content(&self.word())
    }

    pub fn is_semistandard(&self) -> bool {
        self.0.iter().all(SkewTableau::is_semistandard)
    }

    /// The multitableau of the given shape whose word is `w`.
    pub fn from_word(shape: &SkewMultiShape, w: &[usize]) -> Result<Self> {
        if w.len() != shape.size() {
            return Err(Error::SizeMismatch { left: w.len(), right: shape.size() });
        }
        let mut offset = 0;
        let mut comps = Vec::with_capacity(shape.len());
        for s in shape.components() {
            comps.push(SkewTableau::from_word(s, &w[offset..offset + s.size()])?);
            offset += s.size();
        }
        Ok(MultiTableau(comps))
    }

    /// Appends `t` as a new last component.
    pub fn append(&self, t: SkewTableau) -> MultiTableau {
        let mut v = self.0.clone();
        v.push(t);
        MultiTableau(v)
    }

    pub fn rotate_right(&self, by: usize) -> MultiTableau {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = by % v.len();
            v.rotate_right(k);
        }
        MultiTableau(v)
    }
}

impl fmt::Display for MultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// Content of a tableau or multitableau.
pub fn content(t: &MultiTableau) -> Composition {
    t.content()
}

/// The tableau of shape `mu` whose row `j` is filled with `j`.
pub fn superstandard(mu: &Partition) -> SkewTableau {
    let rows = mu.parts().iter().enumerate().map(|(j, &len)| vec![j + 1; len]).collect();
    SkewTableau { shape: SkewShape::straight(mu.clone()), rows }
}

/// Appends the straight shape `mu` to a multishape.
pub fn append(q: &SkewMultiShape, mu: &Partition) -> SkewMultiShape {
    q.append(mu)
}

/// One box in a fill order, with the earlier-filled neighbours bounding it.
#[derive(Clone, Copy, Debug)]
struct Slot {
    /// Value must be at least `values[i] + lo_off`.
    lo: Option<(usize, usize)>,
    /// Value must be at most `values[i] - hi_off`.
    hi: Option<(usize, usize)>,
}

/// Backtracking filler over the boxes of a multishape. Forward order is the
/// reading order (so completed fills are visited in lexicographic order of
/// their words); reverse order visits words from the right and supports
/// pruning by the suffix lattice condition.
struct Filler {
    slots: Vec<Slot>,
    content: Vec<usize>,
    lattice: bool,
}

impl Filler {
    fn new(shape: &SkewMultiShape, content: Vec<usize>, reverse: bool, lattice: bool) -> Filler {
        let mut order = Vec::new();
        for (c, s) in shape.components().iter().enumerate() {
            for a in (0..s.rows()).rev() {
                let (b0, b1) = s.row_range(a);
                for b in b0..b1 {
                    order.push((c, a, b));
                }
            }
        }
        if reverse {
            order.reverse();
        }
        let index: std::collections::HashMap<(usize, usize, usize), usize> =
            order.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let slots = order
            .iter()
            .map(|&(c, a, b)| {
                if !reverse {
                    let lo = b.checked_sub(1).and_then(|bl| index.get(&(c, a, bl))).map(|&i| (i, 0));
                    let hi = index.get(&(c, a + 1, b)).map(|&i| (i, 1));
                    Slot { lo, hi }
                } else {
                    let lo = a.checked_sub(1).and_then(|au| index.get(&(c, au, b))).map(|&i| (i, 1));
                    let hi = index.get(&(c, a, b + 1)).map(|&i| (i, 0));
                    Slot { lo, hi }
                }
            })
            .collect();
        Filler { slots, content, lattice }
    }

    fn run<F: FnMut(&[usize]) -> ControlFlow<()>>(&self, visit: &mut F) {
        if self.content.iter().sum::<usize>() != self.slots.len() {
            return;
        }
        let mut values = vec![0usize; self.slots.len()];
        let mut used = vec![0usize; self.content.len() + 1];
        let _ = self.step(0, &mut values, &mut used, visit);
    }

    fn step<F: FnMut(&[usize]) -> ControlFlow<()>>(
        &self,
        i: usize,
        values: &mut [usize],
        used: &mut [usize],
        visit: &mut F,
    ) -> ControlFlow<()> {
        if i == self.slots.len() {
            return visit(values);
        }
        let slot = self.slots[i];
        let lo = slot.lo.map_or(1, |(j, off)| values[j] + off).max(1);
        let hi = match slot.hi {
            Some((j, off)) => match values[j].checked_sub(off) {
                Some(h) => h.min(self.content.len()),
                None => return ControlFlow::Continue(()),
            },
            None => self.content.len(),
        };
        for x in lo..=hi {
            if used[x] == self.content[x - 1] {
                continue;
            }
            if self.lattice && x > 1 && used[x] + 1 > used[x - 1] {
                continue;
            }
            used[x] += 1;
            values[i] = x;
            let flow = self.step(i + 1, values, used, visit);
            used[x] -= 1;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Visits every semistandard multitableau of the given shape and content in
/// lexicographic order of words. Negative content yields nothing.
pub fn visit_multitableaux<F: FnMut(&MultiTableau) -> ControlFlow<()>>(
    shape: &SkewMultiShape,
    content: &Composition,
    mut visit: F,
) {
    let Some(counts) = content.to_counts() else {
        return;
    };
    Filler::new(shape, counts, false, false).run(&mut |w: &[usize]| {
        let t = MultiTableau::from_word(shape, w).expect("filler respects the shape");
        visit(&t)
    });
}

pub fn enumerate_multitableaux(shape: &SkewMultiShape, content: &Composition) -> Vec<MultiTableau> {
    let mut out = Vec::new();
    visit_multitableaux(shape, content, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    });
    out
}

/// Semistandard tableaux of a skew shape with the given content.
pub fn enumerate_ssyt(shape: &SkewShape, content: &Composition) -> Vec<SkewTableau> {
    let multi = SkewMultiShape::new(vec![shape.clone()]);
    enumerate_multitableaux(&multi, content).into_iter().map(|mut t| t.0.remove(0)).collect()
}

/// Number of semistandard multitableaux of the given shape and content.
pub fn count_multitableaux(shape: &SkewMultiShape, content: &Composition) -> u64 {
    let Some(counts) = content.to_counts() else {
        return 0;
    };
    let mut n = 0u64;
    Filler::new(shape, counts, false, false).run(&mut |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// Number of latticed semistandard multitableaux of the given shape and
/// content, filling words from the right and pruning on suffix counts.
pub fn count_latticed_multitableaux(shape: &SkewMultiShape, content: &Composition) -> u64 {
    let Some(counts) = content.to_counts() else {
        return 0;
    };
    let mut n = 0u64;
    Filler::new(shape, counts, true, true).run(&mut |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// Latticed semistandard multitableaux of the given shape and content.
pub fn enumerate_latticed_multitableaux(shape: &SkewMultiShape, content: &Composition) -> Vec<MultiTableau> {
    let Some(counts) = content.to_counts() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    Filler::new(shape, counts, true, true).run(&mut |rev: &[usize]| {
        let w: Vec<usize> = rev.iter().rev().copied().collect();
        out.push(MultiTableau::from_word(shape, &w).expect("filler respects the shape"));
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// The shape/content map: row `a` of the image holds a `k` for every `a`
/// in row `k` of `t`. The image has shape `(beta + cont(t)) / beta`.
pub fn shape_content_involution(t: &SkewTableau, beta: &Partition) -> Result<SkewTableau> {
    let cont = t.content();
    let len = cont.len().max(beta.len());
    let alpha: Vec<usize> =
        (0..len).map(|i| beta.part(i) + cont.0.get(i).copied().unwrap_or(0) as usize).collect();
    let alpha = Partition::from_padded(alpha.clone())
        .map_err(|_| Error::ShapeMismatch(format!("beta + content = {alpha:?} is not a partition")))?;
    let shape = SkewShape::new(alpha, beta.clone())?;
    let mut rows = vec![Vec::new(); shape.rows()];
    for (k, row) in t.rows().iter().enumerate() {
        for &a in row {
            rows[a - 1].push(k + 1);
        }
    }
    SkewTableau::new(shape, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coplactic::is_latticed_word;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    fn tab(o: &[usize], i: &[usize], rows: &[&[usize]]) -> SkewTableau {
        SkewTableau::new(sk(o, i), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn comp(v: &[i64]) -> Composition {
        Composition(v.to_vec())
    }

    // Every row-standard filling, checked box by box.
    fn brute_force_ssyt(shape: &SkewShape, content: &[usize]) -> Vec<SkewTableau> {
        let n = shape.size();
        let letters = content.len();
        let mut out = Vec::new();
        if letters == 0 {
            if n == 0 {
                out.push(SkewTableau::from_word(shape, &[]).unwrap());
            }
            return out;
        }
        let total = letters.pow(n as u32);
        for code in 0..total {
            let mut w = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                w.push(c % letters + 1);
                c /= letters;
            }
            if word_content(&w).0.iter().map(|&x| x as usize).chain(std::iter::repeat(0)).take(letters).collect::<Vec<_>>()
                != content
            {
                continue;
            }
            if let Ok(t) = SkewTableau::from_word(shape, &w) {
                if t.is_semistandard() {
                    out.push(t);
                }
            }
        }
        out.sort_by_key(|t| t.word());
        out
    }

    #[test]
    fn content_and_word_examples() {
        assert!(SkewTableau::empty().content().is_empty());
        assert_eq!(superstandard(&p(&[3, 2])).content(), comp(&[3, 2]));
        assert_eq!(tab(&[3], &[], &[&[1, 1, 2]]).word().0, vec![1, 1, 2]);
        assert_eq!(superstandard(&p(&[2, 1])).word().0, vec![2, 1, 1]);
    }

    #[test]
    fn example_multitableau_word() {
        let t = MultiTableau::new(vec![
            tab(&[3, 2], &[], &[&[2, 2, 2], &[3, 4]]),
            tab(&[3, 2, 1], &[1], &[&[2, 3], &[3, 3], &[4]]),
            tab(&[2], &[], &[&[1, 1]]),
        ]);
        assert_eq!(t.word().0, vec![3, 4, 2, 2, 2, 4, 3, 3, 2, 3, 1, 1]);
        assert_eq!(t.content(), comp(&[2, 4, 4, 2]));
    }

    #[test]
    fn superstandard_examples() {
        assert_eq!(superstandard(&Partition::empty()).size(), 0);
        assert_eq!(superstandard(&p(&[3, 2])).rows(), &[vec![1, 1, 1], vec![2, 2]]);
        assert_eq!(superstandard(&p(&[1, 1, 1])).rows(), &[vec![1], vec![2], vec![3]]);
        assert!(superstandard(&p(&[4, 2, 2])).is_semistandard());
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(enumerate_ssyt(&sk(&[2, 1], &[]), &comp(&[1, 1, 1])).len(), 2);
        assert!(enumerate_ssyt(&sk(&[2, 1], &[]), &comp(&[1, 1])).is_empty());
        assert!(enumerate_ssyt(&sk(&[2, 1], &[]), &comp(&[2, 2, -1])).is_empty());
        // s_{(4,3)/(1)} = s_{(4,2)} + s_{(3,3)}: Kostka numbers at content (3,3)
        // are K_{(4,2),(3,3)} + K_{(3,3),(3,3)} = 1 + 1.
        assert_eq!(enumerate_ssyt(&sk(&[4, 3], &[1]), &comp(&[3, 3])).len(), 2);
        assert_eq!(enumerate_ssyt(&sk(&[4, 3], &[1]), &comp(&[4, 2])).len(), 1);
        assert_eq!(enumerate_ssyt(&sk(&[4, 3], &[1]), &comp(&[2, 2, 2])).len(), 3 + 1);
    }

    #[test]
    fn ssyt_matches_brute_force_in_lexicographic_order() {
        let shapes = [sk(&[3, 2], &[]), sk(&[3, 2, 1], &[1]), sk(&[2, 2], &[1]), sk(&[3, 1], &[2])];
        let contents: [&[usize]; 5] = [&[2, 2, 1], &[1, 1, 1, 1, 1], &[3, 1, 1], &[0, 2, 3], &[1, 2, 1]];
        for s in &shapes {
            for c in contents {
                if c.iter().sum::<usize>() != s.size() {
                    continue;
                }
                let got = enumerate_ssyt(s, &Composition(c.iter().map(|&x| x as i64).collect()));
                assert_eq!(got, brute_force_ssyt(s, c), "{s} {c:?}");
            }
        }
    }

    #[test]
    fn kostka_symmetry() {
        for n in 0..=8 {
            for lam in Partition::all(n) {
                for mu in Partition::all(n) {
                    let base = count_multitableaux(&SkewMultiShape::new(vec![SkewShape::straight(lam.clone())]), &mu.to_composition());
                    let mut rev = mu.parts().to_vec();
                    rev.reverse();
                    let c = Composition(rev.iter().map(|&x| x as i64).collect());
                    assert_eq!(
                        base,
                        count_multitableaux(&SkewMultiShape::new(vec![SkewShape::straight(lam.clone())]), &c)
                    );
                }
            }
        }
    }

    #[test]
    fn multitableau_examples() {
        let q = SkewMultiShape::new(vec![sk(&[1], &[]), sk(&[2], &[]), sk(&[2, 2], &[1])]);
        let all = enumerate_multitableaux(&q, &comp(&[3, 3]));
        assert_eq!(all.len(), 4);
        let expect = [
            // t1..t4 of the worked example
            [&[2usize][..], &[1, 2], &[1, 1, 2]],
            [&[1], &[2, 2], &[1, 1, 2]],
            [&[2], &[1, 1], &[1, 2, 2]],
            [&[1], &[1, 2], &[1, 2, 2]],
        ];
        for e in expect {
            let t = MultiTableau::new(vec![
                tab(&[1], &[], &[e[0]]),
                tab(&[2], &[], &[e[1]]),
                tab(&[2, 2], &[1], &[&e[2][..1], &e[2][1..]]),
            ]);
            assert!(all.contains(&t), "missing {t}");
        }
        assert_eq!(enumerate_multitableaux(&q, &comp(&[2, 4])).len(), 3);
        assert!(enumerate_multitableaux(&q, &comp(&[7, -1])).is_empty());
    }

    #[test]
    fn word_content_consistency() {
        let q = SkewMultiShape::new(vec![sk(&[3, 1], &[1]), sk(&[2, 2], &[])]);
        for t in enumerate_multitableaux(&q, &comp(&[2, 2, 2])) {
            assert_eq!(t.content(), comp(&[2, 2, 2]));
            assert_eq!(word_content(&t.word()), t.content());
            assert!(t.is_semistandard());
            assert_eq!(MultiTableau::from_word(&q, &t.word()).unwrap(), t);
        }
    }

    #[test]
    fn latticed_counter_matches_filter() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                for outer in Partition::all(n + 1) {
                    for inner in Partition::all_within(1, &outer) {
                        let s = SkewShape::new(outer.clone(), inner).unwrap();
                        let q = SkewMultiShape::new(vec![s]);
                        let c = lam.to_composition();
                        let filtered = enumerate_multitableaux(&q, &c)
                            .iter()
                            .filter(|t| is_latticed_word(&t.word()))
                            .count() as u64;
                        assert_eq!(count_latticed_multitableaux(&q, &c), filtered);
                        assert_eq!(enumerate_latticed_multitableaux(&q, &c).len() as u64, filtered);
                    }
                }
            }
        }
    }

    #[test]
    fn append_examples() {
        let q = SkewMultiShape::new(vec![sk(&[2], &[1])]);
        assert_eq!(append(&q, &Partition::empty()).size(), q.size());
        let a = append(&q, &p(&[2, 1]));
        assert_eq!(a.len(), 2);
        assert_eq!(a.components()[1], SkewShape::straight(p(&[2, 1])));
    }

    #[test]
    fn json_rows_round_trip() {
        let t = tab(&[2, 2], &[1], &[&[1], &[1, 2]]);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "[[null,1],[1,2]]");
        let back: SkewTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<SkewTableau>("[[1,null]]").is_err());
        assert!(serde_json::from_str::<SkewTableau>("[[1],[1,2]]").is_err());
    }

    fn row_standard_fillings(shape: &SkewShape, letters: usize) -> Vec<SkewTableau> {
        // rows are independent multisets
        let mut all = vec![Vec::<Vec<usize>>::new()];
        for a in 0..shape.rows() {
            let (s, e) = shape.row_range(a);
            let mut rows = Vec::new();
            multisets(e - s, 1, letters, &mut Vec::new(), &mut rows);
            all = all
                .into_iter()
                .flat_map(|prefix| {
                    rows.iter().map(move |r| {
                        let mut v = prefix.clone();
                        v.push(r.clone());
                        v
                    })
                })
                .collect();
        }
        all.into_iter().map(|rows| SkewTableau::new(shape.clone(), rows).unwrap()).collect()
    }

    fn multisets(len: usize, min: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 0 {
            out.push(cur.clone());
            return;
        }
        for x in min..=max {
            cur.push(x);
            multisets(len - 1, x, max, cur, out);
            cur.pop();
        }
    }

    fn with_beta_latticed(t: &SkewTableau, beta: &Partition) -> bool {
        let mut w = t.word().0;
        w.extend(superstandard(beta).word().0);
        is_latticed_word(&w)
    }

    #[test]
    fn shape_content_involution_laws() {
        let cases = [(sk(&[3, 2], &[]), p(&[])), (sk(&[3, 2], &[1]), p(&[1])), (sk(&[2, 2, 1], &[1]), p(&[2])), (sk(&[3, 1, 1], &[1]), p(&[1, 1]))];
        for (shape, beta) in cases {
            for t in row_standard_fillings(&shape, 3) {
                let Ok(s) = shape_content_involution(&t, &beta) else {
                    continue;
                };
                assert_eq!(s.shape().inner(), &beta);
                let back = shape_content_involution(&s, shape.inner()).unwrap();
                assert_eq!(back, t);
                // semistandard maps onto row-standard latticed
                assert_eq!(t.is_semistandard(), with_beta_latticed(&s, shape.inner()), "{t} -> {s}");
                let latticed_ss = t.is_semistandard() && with_beta_latticed(&t, &beta);
                let image_ss = s.is_semistandard() && with_beta_latticed(&s, shape.inner());
                assert_eq!(latticed_ss, image_ss);
            }
        }
    }

    #[test]
    fn shape_content_counts() {
        let a = enumerate_ssyt(&sk(&[3, 2], &[]), &comp(&[2, 2, 1]))
            .into_iter()
            .filter(|t| is_latticed_word(&t.word()))
            .count();
        let b = enumerate_ssyt(&sk(&[2, 2, 1], &[]), &comp(&[3, 2]))
            .into_iter()
            .filter(|t| is_latticed_word(&t.word()))
            .count();
        assert_eq!(a, b);
        assert_eq!(a, 0);
        let a = enumerate_ssyt(&sk(&[3, 2], &[1]), &comp(&[2, 2]))
            .into_iter()
            .filter(|t| is_latticed_word(&t.word()))
            .count();
        let b = enumerate_ssyt(&sk(&[2, 2], &[]), &comp(&[2, 2]))
            .into_iter()
            .filter(|t| with_beta_latticed(t, &p(&[1])))
            .count();
        assert_eq!(b, 1);
        assert_eq!(a, 1);
    }

    #[test]
    fn shape_content_rejects_non_partition_image() {
        let t = tab(&[2], &[], &[&[2, 2]]);
        assert!(shape_content_involution(&t, &Partition::empty()).is_err());
        assert!(shape_content_involution(&t, &p(&[2])).is_ok());
    }

    #[test]
    fn skew_skew_count_identity() {
        // |{t ∈ SSYT(ν, λ−μ) : (t, u(μ)) latticed}| = |SSYTL(λ/μ, ν)|
        for n in 0..=8 {
            for lam in Partition::all(n) {
                for m in 0..=n {
                    for mu in Partition::all_within(m, &lam) {
                        let diff = lam.to_composition().minus(&mu.padded(lam.len()));
                        let rhs_shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                        for nu in Partition::all(n - m) {
                            let lhs = enumerate_ssyt(&SkewShape::straight(nu.clone()), &diff)
                                .iter()
                                .filter(|t| with_beta_latticed(t, &mu))
                                .count() as u64;
                            let rhs = count_latticed_multitableaux(
                                &SkewMultiShape::new(vec![rhs_shape.clone()]),
                                &nu.to_composition(),
                            );
                            assert_eq!(lhs, rhs, "lambda={lam} mu={mu} nu={nu}");
                        }
                    }
                }
            }
        }
    }
}
