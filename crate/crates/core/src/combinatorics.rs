//! Compositions, permutations and their descent and peak statistics.
//!
//! Everything here is pure combinatorics: the bijection between compositions
//! of `n` and subsets of `[n-1]`, the bijection between odd compositions and
//! peak-lacunar subsets, shuffles and coshuffles of permutation words, and the
//! three-part contraction used by the enriched monomial product rule.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
///
/// Compositions order canonically by size, then length, then parts
/// lexicographically. This is the order in which basis terms are printed
/// and serialized.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Domain(format!(
                "composition part {} is zero (parts must be positive)",
                pos + 1
            )));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// Prefix `(α_1, ..., α_k)`.
    pub fn prefix(&self, k: usize) -> Composition {
        Composition(self.0[..k].to_vec())
    }

    /// Suffix `(α_{k+1}, ..., α_ℓ)`.
    pub fn suffix(&self, k: usize) -> Composition {
        Composition(self.0[k..].to_vec())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Comma-separated parts, empty string for the empty composition.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Domain(format!("invalid composition part {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// A subset of `[n-1]`, stored as a strictly increasing sequence together
/// with the ambient degree `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntervalSubset {
    n: usize,
    elems: Vec<usize>,
}

impl IntervalSubset {
    /// Builds a subset of `[n-1]`; the input is sorted and deduplicated.
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&e| e == 0 || e >= n) {
            return Err(Error::Domain(format!(
                "element {} lies outside [1, {}]",
                bad,
                n.saturating_sub(1)
            )));
        }
        Ok(IntervalSubset { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        IntervalSubset { n, elems: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        IntervalSubset {
            n,
            elems: (1..n).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &IntervalSubset) -> bool {
        self.elems.iter().all(|&e| other.contains(e))
    }

    /// No element equal to 1 and no two consecutive elements.
    pub fn is_peak_lacunar(&self) -> bool {
        !self.contains(1) && self.elems.windows(2).all(|w| w[1] - w[0] >= 2)
    }

    /// `[n-1] \ self`.
    pub fn complement(&self) -> IntervalSubset {
        IntervalSubset {
            n: self.n,
            elems: (1..self.n).filter(|&i| !self.contains(i)).collect(),
        }
    }

    /// All subsets of this set, in binary-counter order.
    pub fn subsets(&self) -> impl Iterator<Item = IntervalSubset> + '_ {
        let k = self.elems.len();
        (0u64..(1u64 << k)).map(move |mask| IntervalSubset {
            n: self.n,
            elems: (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| self.elems[b])
                .collect(),
        })
    }

    /// All supersets of this set inside `[n-1]`.
    pub fn supersets(&self) -> impl Iterator<Item = IntervalSubset> + '_ {
        let free = self.complement();
        let k = free.elems.len();
        (0u64..(1u64 << k)).map(move |mask| {
            let mut elems = self.elems.clone();
            elems.extend((0..k).filter(|b| mask >> b & 1 == 1).map(|b| free.elems[b]));
            elems.sort_unstable();
            IntervalSubset { n: self.n, elems }
        })
    }

    /// Number of elements of `self` that are not in `other`.
    pub fn difference_len(&self, other: &IntervalSubset) -> usize {
        self.elems.iter().filter(|&&e| !other.contains(e)).count()
    }
}

impl fmt::Display for IntervalSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}} in [{}]", body.join(","), self.n.saturating_sub(1))
    }
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w > n || seen[w] {
                return Err(Error::Domain(format!(
                    "{:?} is not a rearrangement of 1..{}",
                    word, n
                )));
            }
            seen[w] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `n (n-1) ... 1`.
    pub fn reversed_identity(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Space-separated one-line notation.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        f.write_str(&body.join(" "))
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Accepts space- or comma-separated letters. A single run of digits with
    /// no separators (for example `"132"`) is read one digit per letter.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Domain(format!("invalid permutation letter {:?}", t)))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Domain(format!("invalid permutation letter {:?}", c)))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

/// One element of a coshuffle: the shuffled word, the shuffled weights and
/// the positions (1-based) that came from the right-hand operand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoshufflePair {
    pub perm: Permutation,
    pub comp: Composition,
    pub right_positions: Vec<usize>,
}

pub fn descent_set(alpha: &Composition) -> IntervalSubset {
    let n = alpha.size();
    let mut acc = 0;
    let mut elems = Vec::with_capacity(alpha.len().saturating_sub(1));
    for &p in &alpha.parts()[..alpha.len().saturating_sub(1)] {
        acc += p;
        elems.push(acc);
    }
    IntervalSubset { n, elems }
}

/// Inverse of [`descent_set`].
pub fn composition_of_subset(n: usize, s: &IntervalSubset) -> Result<Composition> {
    if let Some(&bad) = s.elements().iter().find(|&&e| e == 0 || e >= n) {
        return Err(Error::Domain(format!(
            "element {} lies outside [1, {}]",
            bad,
            n.saturating_sub(1)
        )));
    }
    if n == 0 {
        return Ok(Composition::empty());
    }
    let mut parts = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for &e in s.elements().iter().chain(std::iter::once(&n)) {
        parts.push(e - prev);
        prev = e;
    }
    Ok(Composition(parts))
}

/// `α̂`: each odd part `2i+1` becomes `i` twos followed by a one.
pub fn hat(alpha: &Composition) -> Result<Composition> {
    if !alpha.is_odd() {
        return Err(Error::Domain(format!(
            "composition ({}) has an even part",
            alpha
        )));
    }
    let mut parts = Vec::new();
    for &p in alpha.parts() {
        parts.extend(std::iter::repeat_n(2, p / 2));
        parts.push(1);
    }
    Ok(Composition(parts))
}

/// Peak set of an odd composition, read off `α̂` as the partial sums
/// `Σ_{m ≤ s} (j_m + 2)` where `j_m` is the run of ones before the `m`-th two.
pub fn peak_set_of_composition(alpha: &Composition) -> Result<IntervalSubset> {
    let hatted = hat(alpha)?;
    let mut elems = Vec::new();
    let mut acc = 0;
    for &p in hatted.parts() {
        acc += p;
        if p == 2 {
            elems.push(acc);
        }
    }
    Ok(IntervalSubset {
        n: alpha.size(),
        elems,
    })
}

/// Inverse of [`peak_set_of_composition`].
pub fn odd_composition_of_peak_set(n: usize, s: &IntervalSubset) -> Result<Composition> {
    if s.elements().iter().any(|&e| e == 0 || e >= n) {
        return Err(Error::Domain(format!("{} is not a subset of [{}]", s, n.saturating_sub(1))));
    }
    if !s.is_peak_lacunar() {
        return Err(Error::Domain(format!("{} is not peak-lacunar", s)));
    }
    // Rebuild α̂: a 2 ends at every peak, ones fill the gaps.
    let mut hatted = Vec::new();
    let mut pos = 0;
    for &p in s.elements() {
        hatted.extend(std::iter::repeat_n(1, p - 2 - pos));
        hatted.push(2);
        pos = p;
    }
    hatted.extend(std::iter::repeat_n(1, n - pos));
    // Each 1 closes an odd part; preceding 2s add to it.
    let mut parts = Vec::new();
    let mut cur = 0;
    for h in hatted {
        cur += h;
        if h == 1 {
            parts.push(cur);
            cur = 0;
        }
    }
    debug_assert_eq!(cur, 0);
    Ok(Composition(parts))
}

pub fn descent_set_of_permutation(pi: &Permutation) -> IntervalSubset {
    let w = pi.word();
    IntervalSubset {
        n: w.len(),
        elems: (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect(),
    }
}

pub fn peak_set_of_permutation(pi: &Permutation) -> IntervalSubset {
    let w = pi.word();
    IntervalSubset {
        n: w.len(),
        elems: (2..w.len())
            .filter(|&i| w[i - 2] < w[i - 1] && w[i - 1] > w[i])
            .collect(),
    }
}

/// All interleaving patterns of `n` left letters with `m` right letters.
/// `true` marks a slot taken by the right operand. Patterns come out in
/// lexicographic order with `false < true`.
pub fn interleavings(n: usize, m: usize) -> Vec<Vec<bool>> {
    fn go(n: usize, m: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if n == 0 && m == 0 {
            out.push(cur.clone());
            return;
        }
        if n > 0 {
            cur.push(false);
            go(n - 1, m, cur, out);
            cur.pop();
        }
        if m > 0 {
            cur.push(true);
            go(n, m - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, &mut Vec::with_capacity(n + m), &mut out);
    out
}

fn apply_pattern<T: Copy>(pattern: &[bool], left: &[T], right: &[T]) -> Vec<T> {
    let (mut l, mut r) = (left.iter(), right.iter());
    pattern
        .iter()
        .map(|&from_right| {
            if from_right {
                *r.next().expect("pattern has too many right slots")
            } else {
                *l.next().expect("pattern has too many left slots")
            }
        })
        .collect()
}

/// Shuffles of `π` with the shifted word `n + σ`.
pub fn shuffles(pi: &Permutation, sigma: &Permutation) -> Vec<Permutation> {
    let n = pi.len();
    let shifted: Vec<usize> = sigma.word().iter().map(|&s| s + n).collect();
    interleavings(n, sigma.len())
        .iter()
        .map(|pat| Permutation(apply_pattern(pat, pi.word(), &shifted)))
        .collect()
}

/// Coshuffles of `(π, α)` with `(σ, β)`: one pair per interleaving pattern.
pub fn coshuffles(
    pi: &Permutation,
    alpha: &Composition,
    sigma: &Permutation,
    beta: &Composition,
) -> Result<Vec<CoshufflePair>> {
    if alpha.len() != pi.len() || beta.len() != sigma.len() {
        return Err(Error::Domain(format!(
            "coshuffle needs one weight per letter: got {} and {} letters with {} and {} parts",
            pi.len(),
            sigma.len(),
            alpha.len(),
            beta.len()
        )));
    }
    let n = pi.len();
    let shifted: Vec<usize> = sigma.word().iter().map(|&s| s + n).collect();
    Ok(interleavings(n, sigma.len())
        .iter()
        .map(|pat| CoshufflePair {
            perm: Permutation(apply_pattern(pat, pi.word(), &shifted)),
            comp: Composition(apply_pattern(pat, alpha.parts(), beta.parts())),
            right_positions: pattern_right_positions(pat),
        })
        .collect())
}

/// Interleaves two compositions along a pattern from [`interleavings`].
pub fn shuffle_compositions(pattern: &[bool], alpha: &Composition, beta: &Composition) -> Composition {
    Composition(apply_pattern(pattern, alpha.parts(), beta.parts()))
}

/// 1-based positions marked `true` in a pattern.
pub fn pattern_right_positions(pattern: &[bool]) -> Vec<usize> {
    pattern
        .iter()
        .enumerate()
        .filter(|(_, &r)| r)
        .map(|(i, _)| i + 1)
        .collect()
}

/// `α^{↓↓i}`: merges parts `i-1, i, i+1` (1-based) into their sum.
pub fn contract(alpha: &Composition, i: usize) -> Result<Composition> {
    let l = alpha.len();
    if i < 2 || i + 1 > l {
        return Err(Error::Domain(format!(
            "contraction index {} outside [2, {}] for ({})",
            i,
            l.saturating_sub(1),
            alpha
        )));
    }
    let p = alpha.parts();
    let mut parts = Vec::with_capacity(l - 2);
    parts.extend_from_slice(&p[..i - 2]);
    parts.push(p[i - 2] + p[i - 1] + p[i]);
    parts.extend_from_slice(&p[i + 1..]);
    Ok(Composition(parts))
}

/// `α^{↓↓I}` for a peak-lacunar index set. Indices are applied from the
/// largest down so that the smaller ones still address the original parts.
pub fn contract_set(alpha: &Composition, indices: &[usize]) -> Result<Composition> {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[1] - w[0] < 2) || sorted.first() == Some(&1) {
        return Err(Error::Domain(format!(
            "contraction set {:?} is not peak-lacunar",
            indices
        )));
    }
    let mut cur = alpha.clone();
    for &i in sorted.iter().rev() {
        cur = contract(&cur, i)?;
    }
    Ok(cur)
}

pub fn reverse(alpha: &Composition) -> Composition {
    Composition(alpha.parts().iter().rev().copied().collect())
}

/// The complement `ω(α)`: the composition of `n` whose descent set is
/// `[n-1] \ Des(rev α)`.
pub fn complement_omega(alpha: &Composition) -> Result<Composition> {
    let n = alpha.size();
    if n == 0 {
        return Err(Error::Domain("complement of the empty composition".into()));
    }
    composition_of_subset(n, &descent_set(&reverse(alpha)).complement())
}

/// All compositions of `n`, enumerated through subsets of `[n-1]`.
/// Every composition of every size up to `max`, smallest first.
pub fn compositions_up_to(max: usize) -> Vec<Composition> {
    (0..=max).flat_map(compositions).collect()
}

pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let full = IntervalSubset::full(n);
    let mut out: Vec<Composition> = full
        .subsets()
        .map(|s| composition_of_subset(n, &s).expect("subset of [n-1]"))
        .collect();
    out.sort();
    out
}

pub fn odd_compositions(n: usize) -> Vec<Composition> {
    compositions(n).into_iter().filter(|c| c.is_odd()).collect()
}

/// Compositions with exactly `len` parts, each at most `max_part`.
pub fn compositions_with_bounded_parts(len: usize, max_part: usize) -> Vec<Composition> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (1..=max_part).map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Composition).collect()
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation(word.clone()));
        // next lexicographic permutation
        let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
            break;
        };
        let j = (i..word.len()).rev().find(|&j| word[j] > word[i - 1]).unwrap();
        word.swap(i - 1, j);
        word[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn p(word: &str) -> Permutation {
        word.parse().unwrap()
    }

    fn subset(n: usize, elems: &[usize]) -> IntervalSubset {
        IntervalSubset::new(n, elems.to_vec()).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn descent_sets_of_compositions() {
        assert_eq!(descent_set(&c(&[1, 1, 3, 3, 1])).elements(), &[1, 2, 5, 8]);
        assert!(descent_set(&c(&[6])).is_empty());
        assert_eq!(descent_set(&c(&[2, 1])).elements(), &[2]);
        assert!(descent_set(&Composition::empty()).is_empty());
    }

    #[test]
    fn composition_from_subset() {
        assert_eq!(composition_of_subset(9, &subset(9, &[1, 2, 5, 8])).unwrap(), c(&[1, 1, 3, 3, 1]));
        assert_eq!(composition_of_subset(4, &IntervalSubset::empty(4)).unwrap(), c(&[4]));
        assert_eq!(composition_of_subset(3, &subset(3, &[1, 2])).unwrap(), c(&[1, 1, 1]));
        let wide = IntervalSubset::new(10, vec![9]).unwrap();
        assert!(composition_of_subset(9, &wide).is_err());
        assert!(IntervalSubset::new(3, vec![3]).is_err());
    }

    #[test]
    fn hat_and_peaks_of_odd_compositions() {
        let alpha = c(&[1, 1, 3, 3, 1]);
        assert_eq!(hat(&alpha).unwrap(), c(&[1, 1, 2, 1, 2, 1, 1]));
        assert_eq!(peak_set_of_composition(&alpha).unwrap().elements(), &[4, 7]);
        assert!(peak_set_of_composition(&Composition::ones(5)).unwrap().is_empty());
        assert_eq!(peak_set_of_composition(&c(&[3])).unwrap().elements(), &[2]);
        assert!(peak_set_of_composition(&c(&[2, 1])).is_err());
    }

    #[test]
    fn odd_composition_from_peaks() {
        assert_eq!(odd_composition_of_peak_set(9, &subset(9, &[4, 7])).unwrap(), alpha_11331());
        assert_eq!(odd_composition_of_peak_set(4, &IntervalSubset::empty(4)).unwrap(), Composition::ones(4));
        assert_eq!(odd_composition_of_peak_set(3, &subset(3, &[2])).unwrap(), c(&[3]));
        assert!(odd_composition_of_peak_set(5, &subset(5, &[2, 3])).is_err());
        assert!(odd_composition_of_peak_set(5, &subset(5, &[1])).is_err());
    }

    fn alpha_11331() -> Composition {
        c(&[1, 1, 3, 3, 1])
    }

    #[test]
    fn permutation_statistics() {
        assert_eq!(descent_set_of_permutation(&p("14253")).elements(), &[2, 4]);
        assert!(descent_set_of_permutation(&Permutation::identity(5)).is_empty());
        assert_eq!(
            descent_set_of_permutation(&Permutation::reversed_identity(4)).elements(),
            &[1, 2, 3]
        );
        assert_eq!(peak_set_of_permutation(&p("132")).elements(), &[2]);
        assert!(peak_set_of_permutation(&Permutation::identity(6)).is_empty());
        assert_eq!(peak_set_of_permutation(&p("14253")).elements(), &[2, 4]);
    }

    #[test]
    fn permutation_parsing() {
        assert_eq!(p("1 4 2 5 3"), p("14253"));
        assert!("1 1 2".parse::<Permutation>().is_err());
        assert!("1 3".parse::<Permutation>().is_err());
        assert_eq!(p("1 4 2 5 3").to_string(), "1 4 2 5 3");
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffles(&p("1"), &p("1")), vec![p("12"), p("21")]);
        assert_eq!(shuffles(&p("12"), &p("1")), vec![p("123"), p("132"), p("312")]);
        assert_eq!(shuffles(&p("123"), &p("12")).len(), 10);
    }

    #[test]
    fn coshuffle_examples() {
        let pairs = coshuffles(&p("12"), &c(&[2, 2]), &p("1"), &c(&[1])).unwrap();
        assert!(pairs.iter().any(|q| q.perm == p("132") && q.comp == c(&[2, 1, 2])));

        let unit = coshuffles(&p("1"), &c(&[4]), &Permutation::identity(0), &Composition::empty()).unwrap();
        assert_eq!(unit.len(), 1);
        assert_eq!((unit[0].perm.clone(), unit[0].comp.clone()), (p("1"), c(&[4])));

        let both = coshuffles(&p("1"), &c(&[1]), &p("1"), &c(&[2])).unwrap();
        assert_eq!(both.len(), 2);
        assert_eq!((both[0].perm.clone(), both[0].comp.clone()), (p("12"), c(&[1, 2])));
        assert_eq!(both[0].right_positions, vec![2]);
        assert_eq!((both[1].perm.clone(), both[1].comp.clone()), (p("21"), c(&[2, 1])));
        assert_eq!(both[1].right_positions, vec![1]);

        assert!(coshuffles(&p("12"), &c(&[1]), &p("1"), &c(&[1])).is_err());
    }

    #[test]
    fn contraction_examples() {
        let alpha = c(&[2, 1, 4, 3, 2]);
        assert_eq!(contract(&alpha, 3).unwrap(), c(&[2, 8, 2]));
        assert_eq!(contract(&c(&[1, 2, 3]), 2).unwrap(), c(&[6]));
        assert!(contract(&alpha, 1).is_err());
        assert!(contract(&alpha, 5).is_err());
        assert_eq!(contract_set(&alpha, &[2, 4]).unwrap(), c(&[12]));
        assert_eq!(contract_set(&alpha, &[]).unwrap(), alpha);
        assert_eq!(contract_set(&alpha, &[3]).unwrap(), c(&[2, 8, 2]));
        assert!(contract_set(&alpha, &[2, 3]).is_err());
        assert!(contract_set(&c(&[1, 1, 1]), &[2, 4]).is_err());
    }

    #[test]
    fn reversal_and_complement() {
        assert_eq!(reverse(&c(&[1, 3, 1])), c(&[1, 3, 1]));
        assert_eq!(reverse(&c(&[2, 5])), c(&[5, 2]));
        assert_eq!(reverse(&Composition::empty()), Composition::empty());
        assert_eq!(complement_omega(&c(&[2, 1])).unwrap(), c(&[2, 1]));
        assert_eq!(complement_omega(&c(&[4])).unwrap(), Composition::ones(4));
        assert_eq!(complement_omega(&Composition::ones(4)).unwrap(), c(&[4]));
        assert!(complement_omega(&Composition::empty()).is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![c(&[1, 2]), c(&[3]), c(&[2, 1]), c(&[1]), Composition::empty()];
        v.sort();
        assert_eq!(v, vec![Composition::empty(), c(&[1]), c(&[3]), c(&[1, 2]), c(&[2, 1])]);
    }

    #[test]
    fn descent_round_trips() {
        for n in 0..=8 {
            let comps = compositions(n);
            assert_eq!(comps.len(), if n == 0 { 1 } else { 1 << (n - 1) });
            for alpha in &comps {
                assert_eq!(&composition_of_subset(n, &descent_set(alpha)).unwrap(), alpha);
            }
            for s in IntervalSubset::full(n).subsets() {
                assert_eq!(descent_set(&composition_of_subset(n, &s).unwrap()), s);
            }
        }
    }

    #[test]
    fn peak_round_trips_and_fibonacci_count() {
        let (mut a, mut b) = (1usize, 1usize);
        for n in 1..=9 {
            let odd = odd_compositions(n);
            let lacunar = IntervalSubset::full(n).subsets().filter(|s| s.is_peak_lacunar()).count();
            assert_eq!(odd.len(), lacunar);
            // |Odd(n)| = F(n)
            assert_eq!(odd.len(), a, "n = {}", n);
            (a, b) = (b, a + b);
            for alpha in &odd {
                let peaks = peak_set_of_composition(alpha).unwrap();
                assert!(peaks.is_peak_lacunar());
                assert_eq!(&odd_composition_of_peak_set(n, &peaks).unwrap(), alpha);
            }
        }
    }

    #[test]
    fn permutation_peaks_are_lacunar() {
        for n in 0..=7 {
            let perms = permutations(n);
            assert_eq!(perms.len(), (1..=n).product::<usize>());
            assert!(perms.iter().all(|pi| peak_set_of_permutation(pi).is_peak_lacunar()));
        }
    }

    fn is_subword(word: &[usize], sub: &[usize]) -> bool {
        let mut it = word.iter();
        sub.iter().all(|s| it.any(|w| w == s))
    }

    #[test]
    fn shuffle_counts_and_subwords() {
        for n in 0..=3 {
            for m in 0..=3 {
                for pi in permutations(n) {
                    for sigma in permutations(m) {
                        let sh = shuffles(&pi, &sigma);
                        assert_eq!(sh.len(), binomial(n + m, n));
                        let shifted: Vec<usize> = sigma.word().iter().map(|s| s + n).collect();
                        for tau in &sh {
                            assert!(is_subword(tau.word(), pi.word()));
                            assert!(is_subword(tau.word(), &shifted));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complement_descents() {
        for n in 1..=7 {
            for alpha in compositions(n) {
                let w = complement_omega(&alpha).unwrap();
                assert_eq!(descent_set(&w), descent_set(&reverse(&alpha)).complement());
                assert_eq!(complement_omega(&w).unwrap(), alpha);
            }
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn contract_set_preserves_size(parts in prop::collection::vec(1usize..6, 0..9), mask in any::<u16>()) {
                let alpha = Composition::new(parts).unwrap();
                let l = alpha.len();
                // greedy peak-lacunar subset of interior indices
                let mut idx = Vec::new();
                for i in 2..l {
                    if mask >> i & 1 == 1 && idx.last().is_none_or(|&j: &usize| i - j >= 2) {
                        idx.push(i);
                    }
                }
                let out = contract_set(&alpha, &idx).unwrap();
                prop_assert_eq!(out.size(), alpha.size());
                prop_assert_eq!(out.len(), l - 2 * idx.len());
            }

            #[test]
            fn composition_display_parse(parts in prop::collection::vec(1usize..20, 0..8)) {
                let alpha = Composition::new(parts).unwrap();
                prop_assert_eq!(alpha.to_string().parse::<Composition>().unwrap(), alpha);
            }
        }
    }
}
