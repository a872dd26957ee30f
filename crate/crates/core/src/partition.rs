//! Partitions, compositions, skew shapes and the dot action of the symmetric
//! group used by the Jacobi–Trudi expansion.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its nonzero parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::NotAPartition(parts))
        }
    }

    /// Builds a partition from a weakly decreasing sequence that may carry
    /// trailing zeros.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        col < self.part(row)
    }

    /// Parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.iter().map(|&p| p as i64).collect())
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        partitions_rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of `n` contained in `bound`, decreasing lexicographic order.
    pub fn all_within(n: usize, bound: &Partition) -> Vec<Partition> {
        Partition::all(n).into_iter().filter(|p| bound.contains(p)).collect()
    }
}

fn partitions_rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::from_padded(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let body = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::from_padded(parse_list(s)?)
    }
}

/// A finite integer sequence. Entries may be negative in intermediate
/// dot-action arithmetic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<i64>);

impl Composition {
    pub fn new(entries: Vec<i64>) -> Self {
        Composition(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// True when every entry is nonnegative.
    pub fn is_proper(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Entries as counts, `None` if some entry is negative.
    pub fn to_counts(&self) -> Option<Vec<usize>> {
        self.0.iter().map(|&a| usize::try_from(a).ok()).collect()
    }

    /// Componentwise difference `self - other`, padding the shorter with zeros.
    pub fn minus(&self, other: &[usize]) -> Composition {
        let len = self.len().max(other.len());
        Composition(
            (0..len)
                .map(|i| self.0.get(i).copied().unwrap_or(0) - other.get(i).map_or(0, |&x| x as i64))
                .collect(),
        )
    }

    /// The partition obtained by sorting, if the entries are nonnegative.
    pub fn sorted_partition(&self) -> Option<Partition> {
        let mut v = self.to_counts()?;
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_padded(v).ok()
    }

    /// True when the entries form a partition (weakly decreasing, nonnegative).
    pub fn is_partition(&self) -> bool {
        self.is_proper() && self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A skew shape `outer/inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        skew(outer, inner)
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of rows, counting empty rows above the last nonempty one.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[start, end)` of row `row`.
    pub fn row_range(&self, row: usize) -> (usize, usize) {
        (self.inner.part(row), self.outer.part(row))
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        self.outer.contains_box(row, col) && !self.inner.contains_box(row, col)
    }

    /// Boxes as `(row, col)`, 0-based, row by row from the top.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|a| {
                let (s, e) = self.row_range(a);
                (s..e).map(move |b| (a, b))
            })
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => skew(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// A tuple of skew shapes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SkewMultiShape(pub Vec<SkewShape>);

impl SkewMultiShape {
    pub fn new(components: Vec<SkewShape>) -> Self {
        SkewMultiShape(components)
    }

    pub fn components(&self) -> &[SkewShape] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(SkewShape::size).sum()
    }

    pub fn outers(&self) -> Vec<Partition> {
        self.0.iter().map(|s| s.outer.clone()).collect()
    }

    pub fn inners(&self) -> Vec<Partition> {
        self.0.iter().map(|s| s.inner.clone()).collect()
    }

    /// Appends the straight shape `mu` as a new last component.
    pub fn append(&self, mu: &Partition) -> SkewMultiShape {
        let mut v = self.0.clone();
        v.push(SkewShape::straight(mu.clone()));
        SkewMultiShape(v)
    }

    /// Rotates components one place to the right (last becomes first).
    pub fn rotate_right(&self, by: usize) -> SkewMultiShape {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = by % v.len();
            v.rotate_right(k);
        }
        SkewMultiShape(v)
    }
}

impl fmt::Display for SkewMultiShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A permutation of `1..=len` together with its sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    images: Vec<usize>,
    sign: i8,
}

impl SignedPermutation {
    /// `images[i]` is the image of `i + 1`, 1-based.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
        }
        let sign = permutation_sign(&images);
        Ok(SignedPermutation { images, sign })
    }

    pub fn identity(len: usize) -> Self {
        SignedPermutation { images: (1..=len).collect(), sign: 1 }
    }

    /// The adjacent transposition `(k, k+1)`, 1-based.
    pub fn transposition(len: usize, k: usize) -> Self {
        let mut images: Vec<usize> = (1..=len).collect();
        images.swap(k - 1, k);
        SignedPermutation { images, sign: -1 }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let images = other.images.iter().map(|&x| self.images[x - 1]).collect();
        SignedPermutation { images, sign: self.sign * other.sign }
    }
}

fn permutation_sign(images: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
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

pub fn conjugate(p: &Partition) -> Partition {
    let width = p.part(0);
    Partition((0..width).map(|c| p.0.iter().take_while(|&&x| x > c).count()).collect())
}

pub fn skew(outer: Partition, inner: Partition) -> Result<SkewShape> {
    if outer.contains(&inner) {
        Ok(SkewShape { outer, inner })
    } else {
        Err(Error::NotNested { outer: outer.0, inner: inner.0 })
    }
}

/// Dominance order: partial sums of `p` bounded by those of `q`.
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch { left: p.size(), right: q.size() });
    }
    let len = p.len().max(q.len());
    let (mut sp, mut sq) = (0, 0);
    for i in 0..len {
        sp += p.part(i);
        sq += q.part(i);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The dot action `g·a = g(a + ρ) − ρ` with `ρ = (ℓ−1, …, 1, 0)`, where `g`
/// moves the entry in position `j` to position `g(j)`.
pub fn dot_action(g: &SignedPermutation, a: &Composition) -> Result<Composition> {
    let len = g.len();
    if a.len() != len {
        return Err(Error::LengthMismatch { expected: len, got: a.len() });
    }
    let rho = |i: usize| (len - 1 - i) as i64;
    let mut out = vec![0i64; len];
    for (j, &img) in g.images.iter().enumerate() {
        out[img - 1] = a.0[j] + rho(j);
    }
    for (i, x) in out.iter_mut().enumerate() {
        *x -= rho(i);
    }
    Ok(Composition(out))
}

/// All permutations of `1..=len` in lexicographic order of their image
/// sequences.
pub fn enumerate_permutations(len: usize) -> Permutations {
    Permutations { next: Some((1..=len).collect()) }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        let sign = permutation_sign(&cur);
        Some(SignedPermutation { images: cur, sign })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
