//! Coplactic operations on words and multitableaux.
//!
//! For a fixed `k`, each `k` in a word acts as a closing bracket and each
//! `k+1` as an opening bracket. Unmatched letters are *k-unpaired*; they
//! always read `k^c (k+1)^d`. `E_k`, `F_k` and `S_k` rewrite that subword
//! and leave every other position alone.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition, SignedPermutation, SkewMultiShape};
use crate::tableaux::{count_latticed_multitableaux, MultiTableau, Word};

/// The k-pairing of a word. Positions are 0-based; `Display` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingAnalysis {
    pub k: usize,
    /// `(position of k+1, position of k)` pairs.
    pub paired: Vec<(usize, usize)>,
    pub unpaired_k: Vec<usize>,
    pub unpaired_k1: Vec<usize>,
}

impl PairingAnalysis {
    pub fn c(&self) -> usize {
        self.unpaired_k.len()
    }

    pub fn d(&self) -> usize {
        self.unpaired_k1.len()
    }

    /// All unpaired positions in increasing order.
    pub fn unpaired_positions(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.unpaired_k.iter().chain(&self.unpaired_k1).copied().collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for PairingAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |v: &[usize]| v.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "k={}: unpaired {}s at [{}], unpaired {}s at [{}]",
            self.k,
            self.k,
            one(&self.unpaired_k),
            self.k + 1,
            one(&self.unpaired_k1)
        )
    }
}

pub fn analyze_pairing(w: &[usize], k: usize) -> PairingAnalysis {
    let mut open = Vec::new();
    let mut paired = Vec::new();
    let mut unpaired_k = Vec::new();
    for (i, &x) in w.iter().enumerate() {
        if x == k + 1 {
            open.push(i);
        } else if x == k {
            match open.pop() {
                Some(j) => paired.push((j, i)),
                None => unpaired_k.push(i),
            }
        }
    }
    paired.sort_unstable();
    PairingAnalysis { k, paired, unpaired_k, unpaired_k1: open }
}

fn rewrite(w: &[usize], pa: &PairingAnalysis, new_c: usize) -> Word {
    let mut out = w.to_vec();
    for (j, pos) in pa.unpaired_positions().into_iter().enumerate() {
        out[pos] = if j < new_c { pa.k } else { pa.k + 1 };
    }
    Word(out)
}

/// Changes the leftmost unpaired `k+1` to `k`.
pub fn e_k(w: &[usize], k: usize) -> Result<Word> {
    let pa = analyze_pairing(w, k);
    if pa.d() == 0 {
        return Err(Error::OperatorUndefined { op: "E", k });
    }
    Ok(rewrite(w, &pa, pa.c() + 1))
}

/// Changes the rightmost unpaired `k` to `k+1`.
pub fn f_k(w: &[usize], k: usize) -> Result<Word> {
    let pa = analyze_pairing(w, k);
    if pa.c() == 0 {
        return Err(Error::OperatorUndefined { op: "F", k });
    }
    Ok(rewrite(w, &pa, pa.c() - 1))
}

/// Swaps the numbers of unpaired `k`s and `k+1`s.
pub fn s_k(w: &[usize], k: usize) -> Word {
    let pa = analyze_pairing(w, k);
    rewrite(w, &pa, pa.d())
}

/// A coplactic operator, for lifting to multitableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    E(usize),
    F(usize),
    S(usize),
    /// `S_k E_k`.
    SE(usize),
}

impl Op {
    pub fn apply(self, w: &[usize]) -> Result<Word> {
        match self {
            Op::E(k) => e_k(w, k),
            Op::F(k) => f_k(w, k),
            Op::S(k) => Ok(s_k(w, k)),
            Op::SE(k) => Ok(s_k(&e_k(w, k)?, k)),
        }
    }
}

/// Applies `op` to the word of `t` and rebuilds a multitableau of the same
/// shape from the result.
pub fn lift(op: Op, t: &MultiTableau) -> Result<MultiTableau> {
    let w = op.apply(&t.word())?;
    MultiTableau::from_word(&t.shape(), &w)
}

/// No `k`-unpaired `k+1` for any `k`; equivalently every suffix has at
/// least as many `k`s as `k+1`s.
pub fn is_latticed_word(w: &[usize]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &x in w.iter().rev() {
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

pub fn is_latticed(t: &MultiTableau) -> bool {
    is_latticed_word(&t.word())
}

/// Rightmost position holding a `k`-unpaired `k+1` over all `k`, with that `k`.
pub fn rightmost_unpaired_raise(w: &[usize]) -> Option<(usize, usize)> {
    let max = w.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for (i, &x) in w.iter().enumerate().rev() {
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            // first suffix violation from the right: this k+1 sets a record
            return Some((i, x - 1));
        }
    }
    None
}

/// Finds the partition `λ` and permutation `g` with `g·λ = α`, if any.
pub fn dot_orbit(alpha: &Composition) -> Option<(Partition, SignedPermutation)> {
    let len = alpha.len();
    let shifted: Vec<i64> = alpha.0.iter().enumerate().map(|(i, &a)| a + (len - 1 - i) as i64).collect();
    let mut order: Vec<usize> = (0..len).collect();
    order.sort_by(|&i, &j| shifted[j].cmp(&shifted[i]));
    if order.windows(2).any(|w| shifted[w[0]] == shifted[w[1]]) {
        return None;
    }
    let parts: Vec<i64> = order.iter().enumerate().map(|(r, &i)| shifted[i] - (len - 1 - r) as i64).collect();
    if parts.iter().any(|&x| x < 0) {
        return None;
    }
    let lambda = Partition::from_padded(parts.iter().map(|&x| x as usize).collect()).ok()?;
    // g sends position r of λ+ρ to position order[r]
    let images = order.iter().map(|&i| i + 1).collect();
    Some((lambda, SignedPermutation::new(images).ok()?))
}

/// Image of a multitableau under the involution, with the acting `k`
/// (`None` for a fixed point).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionImage {
    pub image: MultiTableau,
    pub k: Option<usize>,
}

/// The sign-reversing involution on `⋃_g SSYT(shape, g·λ)`: fixes latticed
/// multitableaux; otherwise applies `S_k E_k` where the rightmost unpaired
/// `k+1` (over all `k`) sits.
pub fn g_involution(t: &MultiTableau) -> Result<InvolutionImage> {
    let cont = t.content();
    if dot_orbit(&cont).is_none() {
        return Err(Error::NotInDomain(cont.0));
    }
    Ok(g_unchecked(t))
}

pub(crate) fn g_unchecked(t: &MultiTableau) -> InvolutionImage {
    let w = t.word();
    match rightmost_unpaired_raise(&w) {
        None => InvolutionImage { image: t.clone(), k: None },
        Some((_, k)) => {
            let image = lift(Op::SE(k), t).expect("E_k is defined when an unpaired k+1 exists");
            InvolutionImage { image, k: Some(k) }
        }
    }
}

/// Number of latticed semistandard multitableaux of shape `q` and content `λ`.
pub fn lr_coefficient(lambda: &Partition, q: &SkewMultiShape) -> Result<u64> {
    if lambda.size() != q.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: q.size() });
    }
    Ok(count_latticed_multitableaux(q, &lambda.to_composition()))
}
