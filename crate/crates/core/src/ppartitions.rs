//! Labelled weighted posets and their enriched P-partitions.
//!
//! A labelled weighted poset is a strict partial order on `[n]` together with
//! a positive weight per vertex. Its `Z`-generating function sums
//! `Π x_{|f(i)|}^{ε(i)}` over enriched P-partitions `f` with values in a
//! finite alphabet `Z ⊆ ℙ±`. Chains give the universal functions `U`, which
//! specialise to `M`, `L`, `K` and `η`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::combinatorics::{coshuffles, contract_set, peak_set_of_permutation, Composition, Permutation};
use crate::error::{Error, Result};
use crate::oracle::{Monomial, TruncatedPoly};
use crate::qsym::{Basis, QSymElement};
use crate::rational::Rational;

/// An element `±k` of `ℙ± = {-1 < 1 < -2 < 2 < ...}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedValue {
    negative: bool,
    magnitude: u32,
}

impl SignedValue {
    pub fn new(negative: bool, magnitude: u32) -> Result<Self> {
        if magnitude == 0 {
            return Err(Error::Domain("signed values have positive magnitude".into()));
        }
        Ok(SignedValue { negative, magnitude })
    }

    pub fn pos(magnitude: u32) -> Self {
        SignedValue::new(false, magnitude).expect("positive magnitude")
    }

    pub fn neg(magnitude: u32) -> Self {
        SignedValue::new(true, magnitude).expect("positive magnitude")
    }

    pub fn is_negative(self) -> bool {
        self.negative
    }

    pub fn magnitude(self) -> u32 {
        self.magnitude
    }
}

impl Ord for SignedValue {
    fn cmp(&self, other: &Self) -> Ordering {
        // -k sorts before +k
        self.magnitude
            .cmp(&other.magnitude)
            .then(other.negative.cmp(&self.negative))
    }
}

impl PartialOrd for SignedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.negative { '-' } else { '+' }, self.magnitude)
    }
}

impl std::str::FromStr for SignedValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (negative, digits) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let magnitude: u32 = digits
            .parse()
            .map_err(|_| Error::Format(format!("invalid signed value {:?}", s)))?;
        SignedValue::new(negative, magnitude)
    }
}

/// A finite alphabet `Z ⊆ ℙ±`, sorted and duplicate free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZAlphabet(Vec<SignedValue>);

impl ZAlphabet {
    pub fn new(mut values: Vec<SignedValue>) -> Self {
        values.sort();
        values.dedup();
        ZAlphabet(values)
    }

    /// `ℙ_N = {+1, ..., +N}`.
    pub fn positive(n: u32) -> Self {
        ZAlphabet((1..=n).map(SignedValue::pos).collect())
    }

    /// `ℙ±_N = {-1, +1, ..., -N, +N}`.
    pub fn signed(n: u32) -> Self {
        ZAlphabet((1..=n).flat_map(|k| [SignedValue::neg(k), SignedValue::pos(k)]).collect())
    }

    /// `"P"` for `ℙ_N`, `"Ppm"` for `ℙ±_N`, or an explicit list such as
    /// `"-1,+1,-2"`.
    pub fn from_spec(spec: &str, n: u32) -> Result<Self> {
        match spec.trim() {
            "P" => Ok(ZAlphabet::positive(n)),
            "Ppm" | "P+-" | "P±" => Ok(ZAlphabet::signed(n)),
            list => Ok(ZAlphabet::new(
                list.split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(str::parse)
                    .collect::<Result<_>>()?,
            )),
        }
    }

    pub fn values(&self) -> &[SignedValue] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_magnitude(&self) -> u32 {
        self.0.iter().map(|v| v.magnitude).max().unwrap_or(0)
    }
}

/// A strict partial order on `[n]` with positive vertex weights. The
/// relation is kept transitively closed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledWeightedPoset {
    n: usize,
    less: Vec<bool>,
    weights: Vec<usize>,
}

impl LabelledWeightedPoset {
    /// Builds a poset from relations `i <_P j` (1-based), closing them
    /// transitively. Fails on cycles, out-of-range labels or zero weights.
    pub fn from_relations(n: usize, relations: &[(usize, usize)], weights: Vec<usize>) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::Poset(format!("{} weights for {} vertices", weights.len(), n)));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Poset(format!("vertex {} has weight 0", i + 1)));
        }
        let mut p = LabelledWeightedPoset {
            n,
            less: vec![false; n * n],
            weights,
        };
        for &(i, j) in relations {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Poset(format!("relation {} < {} outside [1, {}]", i, j, n)));
            }
            p.less[(i - 1) * n + (j - 1)] = true;
        }
        p.close()?;
        Ok(p)
    }

    pub fn antichain(weights: Vec<usize>) -> Self {
        let n = weights.len();
        LabelledWeightedPoset {
            n,
            less: vec![false; n * n],
            weights,
        }
    }

    /// The chain `π_1 < π_2 < ... < π_n` with unit weights.
    pub fn chain(pi: &Permutation) -> Self {
        Self::weighted_chain(pi, &Composition::ones(pi.len())).expect("one weight per letter")
    }

    /// The chain of `π` where vertex `π_i` carries weight `α_i`.
    pub fn weighted_chain(pi: &Permutation, alpha: &Composition) -> Result<Self> {
        let n = pi.len();
        if alpha.len() != n {
            return Err(Error::Domain(format!(
                "weighted chain needs {} weights, got ({})",
                n, alpha
            )));
        }
        let w = pi.word();
        let mut weights = vec![0; n];
        let mut less = vec![false; n * n];
        for a in 0..n {
            weights[w[a] - 1] = alpha.parts()[a];
            for b in a + 1..n {
                less[(w[a] - 1) * n + (w[b] - 1)] = true;
            }
        }
        Ok(LabelledWeightedPoset { n, less, weights })
    }

    /// `P ⊔ Q` on `[n+m]`, with `Q`'s labels shifted by `n`.
    pub fn disjoint_union(&self, other: &LabelledWeightedPoset) -> Self {
        let total = self.n + other.n;
        let mut less = vec![false; total * total];
        for i in 0..self.n {
            for j in 0..self.n {
                less[i * total + j] = self.less[i * self.n + j];
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                less[(i + self.n) * total + j + self.n] = other.less[i * other.n + j];
            }
        }
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        LabelledWeightedPoset { n: total, less, weights }
    }

    fn close(&mut self) -> Result<()> {
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if self.less[i * n + k] {
                    for j in 0..n {
                        if self.less[k * n + j] {
                            self.less[i * n + j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| self.less[i * n + i]) {
            return Err(Error::Poset(format!("relations contain a cycle through {}", i + 1)));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> usize {
        self.weights[i - 1]
    }

    pub fn total_weight(&self) -> usize {
        self.weights.iter().sum()
    }

    /// `i <_P j`, 1-based labels.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[(i - 1) * self.n + (j - 1)]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j) || self.less(j, i)
    }

    /// All relations `i <_P j` of the closed order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.less(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Lexicographically first incomparable pair `(i, j)` with `i < j`.
    pub fn first_incomparable_pair(&self) -> Option<(usize, usize)> {
        (1..=self.n)
            .flat_map(|i| (i + 1..=self.n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.comparable(i, j))
    }

    pub fn is_chain(&self) -> bool {
        self.first_incomparable_pair().is_none()
    }

    /// For a chain, the labels read from bottom to top.
    pub fn chain_word(&self) -> Option<Permutation> {
        if !self.is_chain() {
            return None;
        }
        let mut labels: Vec<usize> = (1..=self.n).collect();
        labels.sort_by_key(|&i| (1..=self.n).filter(|&j| self.less(j, i)).count());
        Some(Permutation::new(labels).expect("labels 1..n"))
    }

    /// Topological order that always takes the smallest available label.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut placed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let next = (1..=self.n)
                .find(|&v| !placed[v - 1] && (1..=self.n).all(|u| placed[u - 1] || !self.less(u, v)))
                .expect("closed order is acyclic");
            placed[next - 1] = true;
            order.push(next);
        }
        order
    }

    fn with_relation(&self, i: usize, j: usize) -> Self {
        let mut p = self.clone();
        p.less[(i - 1) * self.n + (j - 1)] = true;
        p.close().expect("adding a relation between incomparable elements keeps the order acyclic");
        p
    }
}

/// Does `(u, v)` with `u <_P v` admit the values `(a, b)`?
fn relation_holds(u: usize, v: usize, a: SignedValue, b: SignedValue) -> bool {
    if a < b {
        return true;
    }
    a == b && (if u < v { !a.negative } else { a.negative })
}

/// Checks both enriched P-partition conditions on every relation of `P`.
pub fn is_enriched_partition(p: &LabelledWeightedPoset, f: &[SignedValue]) -> bool {
    f.len() == p.n
        && p
            .relations()
            .into_iter()
            .all(|(i, j)| relation_holds(i, j, f[i - 1], f[j - 1]))
}

/// Classical P-partition conditions for `f : [n] → ℙ`: weakly increasing
/// along `<_P`, strictly where labels decrease.
pub fn is_p_partition(p: &LabelledWeightedPoset, f: &[u32]) -> bool {
    f.len() == p.n
        && p.relations().into_iter().all(|(i, j)| {
            let (a, b) = (f[i - 1], f[j - 1]);
            a <= b && (i < j || a < b)
        })
}

/// A map `[n] → ℙ±` already checked against its poset.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct EnrichedAssignment(Vec<SignedValue>);

impl EnrichedAssignment {
    pub fn new(p: &LabelledWeightedPoset, values: Vec<SignedValue>) -> Result<Self> {
        if !is_enriched_partition(p, &values) {
            return Err(Error::Domain(format!(
                "{:?} is not an enriched P-partition",
                values.iter().map(ToString::to_string).collect::<Vec<_>>()
            )));
        }
        Ok(EnrichedAssignment(values))
    }

    pub fn values(&self) -> &[SignedValue] {
        &self.0
    }

    pub fn value(&self, i: usize) -> SignedValue {
        self.0[i - 1]
    }
}

/// Backtracks over `Z`-valued assignments along the linear extension,
/// calling `visit` on every enriched P-partition (indexed by label - 1).
fn for_each_assignment<F>(p: &LabelledWeightedPoset, z: &ZAlphabet, mut visit: F)
where
    F: FnMut(&[SignedValue]),
{
    let order = p.linear_extension();
    // Only relations to vertices placed earlier need checking.
    let below: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(k, &v)| order[..k].iter().copied().filter(|&u| p.less(u, v)).collect())
        .collect();
    let mut values = vec![SignedValue::pos(1); p.n];

    fn go<F: FnMut(&[SignedValue])>(
        k: usize,
        order: &[usize],
        below: &[Vec<usize>],
        z: &ZAlphabet,
        values: &mut Vec<SignedValue>,
        visit: &mut F,
    ) {
        if k == order.len() {
            visit(values);
            return;
        }
        let v = order[k];
        for &candidate in z.values() {
            if below[k]
                .iter()
                .all(|&u| relation_holds(u, v, values[u - 1], candidate))
            {
                values[v - 1] = candidate;
                go(k + 1, order, below, z, values, visit);
            }
        }
    }
    go(0, &order, &below, z, &mut values, &mut visit);
}

/// All `Z`-enriched P-partitions, sorted by their value vectors.
pub fn enumerate_assignments(p: &LabelledWeightedPoset, z: &ZAlphabet) -> Vec<EnrichedAssignment> {
    let mut out = Vec::new();
    for_each_assignment(p, z, |f| out.push(EnrichedAssignment(f.to_vec())));
    out.sort();
    out
}

/// `Γ_Z(P) = Σ_f Π_i x_{|f(i)|}^{ε(i)}` in `x_1..x_N`, `N` the largest
/// magnitude in `Z`, with degree bound the total weight.
pub fn gamma(p: &LabelledWeightedPoset, z: &ZAlphabet) -> TruncatedPoly {
    let nvars = z.max_magnitude() as usize;
    let mut out = TruncatedPoly::zero(nvars, p.total_weight());
    let mut dense = vec![0u32; nvars + 1];
    for_each_assignment(p, z, |f| {
        dense.iter_mut().for_each(|e| *e = 0);
        for (i, v) in f.iter().enumerate() {
            dense[v.magnitude() as usize] += p.weights[i] as u32;
        }
        let exps = dense
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(var, &e)| (var, e))
            .collect();
        out.add_term(Monomial::new(exps).expect("valid exponents"), Rational::one());
    });
    out
}

/// `U^Z_{π,α}`: the generating function of the weighted chain of `(π, α)`.
pub fn universal(pi: &Permutation, alpha: &Composition, z: &ZAlphabet) -> Result<TruncatedPoly> {
    Ok(gamma(&LabelledWeightedPoset::weighted_chain(pi, alpha)?, z))
}

/// `U^{ℙ±}_{π,α} = Σ_{I ⊆ Peak(π)} (-1)^{|I|} η_{α^{↓↓I}}`.
pub fn universal_to_eta(pi: &Permutation, alpha: &Composition) -> Result<QSymElement> {
    if alpha.len() != pi.len() {
        return Err(Error::Domain(format!(
            "({}) has {} parts for a permutation of {} letters",
            alpha,
            alpha.len(),
            pi.len()
        )));
    }
    let mut out = QSymElement::zero(Basis::Eta);
    for subset in peak_set_of_permutation(pi).subsets() {
        let comp = contract_set(alpha, subset.elements())?;
        let sign = if subset.len() % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        out.add_term(comp, sign);
    }
    Ok(out)
}

/// The coshuffle list whose `U` functions sum to `U_{π,α} · U_{σ,β}`.
pub fn product_universal(
    pi: &Permutation,
    alpha: &Composition,
    sigma: &Permutation,
    beta: &Composition,
) -> Result<Vec<(Permutation, Composition)>> {
    Ok(coshuffles(pi, alpha, sigma, beta)?
        .into_iter()
        .map(|pair| (pair.perm, pair.comp))
        .collect())
}

/// Splits on an incomparable pair: the first poset adds `i <_P j`, the
/// second `j <_P i`, both transitively closed.
pub fn split_incomparable(
    p: &LabelledWeightedPoset,
    i: usize,
    j: usize,
) -> Result<(LabelledWeightedPoset, LabelledWeightedPoset)> {
    if i == 0 || j == 0 || i > p.n || j > p.n {
        return Err(Error::Domain(format!("labels {} and {} outside [1, {}]", i, j, p.n)));
    }
    if p.comparable(i, j) {
        return Err(Error::Domain(format!("{} and {} are comparable", i, j)));
    }
    Ok((p.with_relation(i, j), p.with_relation(j, i)))
}

/// Splits repeatedly on the first incomparable pair until only chains
/// remain.
pub fn split_into_chains(p: &LabelledWeightedPoset) -> Vec<LabelledWeightedPoset> {
    let mut done = Vec::new();
    let mut stack = vec![p.clone()];
    while let Some(q) = stack.pop() {
        match q.first_incomparable_pair() {
            None => done.push(q),
            Some((i, j)) => {
                let (a, b) = split_incomparable(&q, i, j).expect("pair is incomparable");
                stack.push(b);
                stack.push(a);
            }
        }
    }
    done
}

/// Number of assignments, without materialising them.
pub fn count_assignments(p: &LabelledWeightedPoset, z: &ZAlphabet) -> usize {
    let mut count = 0;
    for_each_assignment(p, z, |_| count += 1);
    count
}

impl fmt::Display for LabelledWeightedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations().iter().map(|(i, j)| format!("{}<{}", i, j)).collect();
        write!(f, "poset on [{}] {{{}}} weights {:?}", self.n, rels.join(", "), self.weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::expand;

    fn p(word: &str) -> Permutation {
        word.parse().unwrap()
    }

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn sv(s: &str) -> SignedValue {
        s.parse().unwrap()
    }

    #[test]
    fn signed_order() {
        let mut v = vec![sv("2"), sv("-2"), sv("1"), sv("-1"), sv("-3")];
        v.sort();
        assert_eq!(v, vec![sv("-1"), sv("+1"), sv("-2"), sv("+2"), sv("-3")]);
        assert!(sv("+1") < sv("-2"));
        assert!("0".parse::<SignedValue>().is_err());
    }

    #[test]
    fn alphabets() {
        assert_eq!(ZAlphabet::signed(2).values(), &[sv("-1"), sv("1"), sv("-2"), sv("2")]);
        assert_eq!(ZAlphabet::from_spec("-1,+1,-2", 9).unwrap().len(), 3);
        assert_eq!(ZAlphabet::from_spec("P", 3).unwrap(), ZAlphabet::positive(3));
    }

    #[test]
    fn chains() {
        let q = LabelledWeightedPoset::chain(&p("12"));
        assert!(q.less(1, 2) && !q.less(2, 1));
        let q = LabelledWeightedPoset::chain(&p("21"));
        assert!(q.less(2, 1));
        let q = LabelledWeightedPoset::chain(&p("132"));
        assert_eq!(q.relations(), vec![(1, 2), (1, 3), (3, 2)]);
        assert_eq!(q.chain_word(), Some(p("132")));

        let w = LabelledWeightedPoset::weighted_chain(&p("12"), &c(&[2, 2])).unwrap();
        assert_eq!(w.weights(), &[2, 2]);
        let w = LabelledWeightedPoset::weighted_chain(&p("21"), &c(&[3, 1])).unwrap();
        assert!(w.less(2, 1));
        assert_eq!((w.weight(2), w.weight(1)), (3, 1));
        let w = LabelledWeightedPoset::weighted_chain(&p("1"), &c(&[5])).unwrap();
        assert_eq!(w.weights(), &[5]);
        assert!(LabelledWeightedPoset::weighted_chain(&p("12"), &c(&[5])).is_err());
    }

    #[test]
    fn poset_validation() {
        assert!(LabelledWeightedPoset::from_relations(2, &[(1, 2), (2, 1)], vec![1, 1]).is_err());
        assert!(LabelledWeightedPoset::from_relations(2, &[(1, 3)], vec![1, 1]).is_err());
        assert!(LabelledWeightedPoset::from_relations(2, &[], vec![1, 0]).is_err());
        let q = LabelledWeightedPoset::from_relations(3, &[(1, 2), (2, 3)], vec![1, 1, 1]).unwrap();
        assert!(q.less(1, 3));
    }

    #[test]
    fn enriched_conditions() {
        let up = LabelledWeightedPoset::chain(&p("12"));
        let down = LabelledWeightedPoset::chain(&p("21"));
        assert!(is_enriched_partition(&up, &[sv("3"), sv("3")]));
        assert!(!is_enriched_partition(&down, &[sv("3"), sv("3")]));
        assert!(is_enriched_partition(&down, &[sv("-3"), sv("-3")]));
    }

    #[test]
    fn assignment_counts() {
        let single = LabelledWeightedPoset::antichain(vec![1]);
        assert_eq!(enumerate_assignments(&single, &ZAlphabet::signed(3)).len(), 6);
        let up = LabelledWeightedPoset::chain(&p("12"));
        let only = enumerate_assignments(&up, &ZAlphabet::positive(1));
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].values(), &[sv("1"), sv("1")]);
        let down = LabelledWeightedPoset::chain(&p("21"));
        assert!(enumerate_assignments(&down, &ZAlphabet::positive(1)).is_empty());
        assert!(EnrichedAssignment::new(&down, vec![sv("1"), sv("1")]).is_err());
    }

    #[test]
    fn gamma_of_a_single_vertex() {
        let n = 4;
        let v = LabelledWeightedPoset::antichain(vec![1]);
        let e1 = expand(&QSymElement::basis_element(Basis::M, c(&[1])).unwrap(), n, 1).unwrap();
        assert_eq!(gamma(&v, &ZAlphabet::positive(n as u32)), e1);
        assert_eq!(gamma(&v, &ZAlphabet::signed(n as u32)), e1.scale(&crate::rational::int(2)));
        let heavy = LabelledWeightedPoset::antichain(vec![3]);
        let eta3 = expand(&QSymElement::basis_element(Basis::Eta, c(&[3])).unwrap(), n, 3).unwrap();
        assert_eq!(gamma(&heavy, &ZAlphabet::signed(n as u32)), eta3);
    }

    #[test]
    fn universal_specialisations() {
        let n = 4u32;
        let alpha = c(&[2, 1, 3]);
        let m = expand(&QSymElement::basis_element(Basis::M, alpha.clone()).unwrap(), 4, 6).unwrap();
        let eta = expand(&QSymElement::basis_element(Basis::Eta, alpha.clone()).unwrap(), 4, 6).unwrap();
        assert_eq!(universal(&Permutation::reversed_identity(3), &alpha, &ZAlphabet::positive(n)).unwrap(), m);
        assert_eq!(universal(&Permutation::identity(3), &alpha, &ZAlphabet::signed(n)).unwrap(), eta);
        let l = expand(&crate::qsym::l_of_permutation(&p("2134")), 4, 4).unwrap();
        assert_eq!(universal(&p("2134"), &Composition::ones(4), &ZAlphabet::positive(n)).unwrap(), l);
    }

    #[test]
    fn universal_in_eta() {
        let alpha = c(&[1, 2, 1]);
        assert_eq!(
            universal_to_eta(&Permutation::identity(3), &alpha).unwrap(),
            QSymElement::basis_element(Basis::Eta, alpha).unwrap()
        );
        let u = universal_to_eta(&p("132"), &Composition::ones(3)).unwrap();
        assert_eq!(u, crate::qsym::k_to_eta(&c(&[3])).unwrap());
        assert!(universal_to_eta(&p("12"), &c(&[1])).is_err());
    }

    #[test]
    fn coshuffle_products() {
        let pairs = product_universal(&p("1"), &c(&[2]), &p("1"), &c(&[1])).unwrap();
        assert_eq!(pairs, vec![(p("12"), c(&[2, 1])), (p("21"), c(&[1, 2]))]);
        let z = ZAlphabet::signed(3);
        let lhs = universal(&p("1"), &c(&[2]), &z).unwrap().with_degree_bound(3).unwrap().mul(&universal(&p("1"), &c(&[1]), &z).unwrap());
        let rhs = pairs.iter().fold(TruncatedPoly::zero(3, 3), |acc, (t, g)| {
            acc.add(&universal(t, g, &z).unwrap())
        });
        assert!(lhs.same_polynomial(&rhs));

        let unit = product_universal(&Permutation::identity(0), &Composition::empty(), &p("21"), &c(&[1, 4])).unwrap();
        assert_eq!(unit, vec![(p("21"), c(&[1, 4]))]);
        let pairs = product_universal(&p("12"), &c(&[2, 2]), &p("1"), &c(&[1])).unwrap();
        assert!(pairs.contains(&(p("132"), c(&[2, 1, 2]))));
    }

    #[test]
    fn splitting() {
        let anti = LabelledWeightedPoset::antichain(vec![2, 5]);
        let (a, b) = split_incomparable(&anti, 1, 2).unwrap();
        assert_eq!(a, LabelledWeightedPoset::weighted_chain(&p("12"), &c(&[2, 5])).unwrap());
        assert_eq!(b, LabelledWeightedPoset::weighted_chain(&p("21"), &c(&[5, 2])).unwrap());
        assert!(split_incomparable(&a, 1, 2).is_err());

        let z = ZAlphabet::signed(3);
        assert_eq!(gamma(&anti, &z), gamma(&a, &z).add(&gamma(&b, &z)));

        let two_chains = LabelledWeightedPoset::chain(&p("21")).disjoint_union(&LabelledWeightedPoset::chain(&p("132")));
        let leaves = split_into_chains(&two_chains);
        assert_eq!(leaves.len(), 10);
        let mut words: Vec<Permutation> = leaves.iter().map(|q| q.chain_word().unwrap()).collect();
        words.sort();
        let mut expected = crate::combinatorics::shuffles(&p("21"), &p("132"));
        expected.sort();
        assert_eq!(words, expected);
    }
}
