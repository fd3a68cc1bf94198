//! Truncated polynomial expansion of quasisymmetric functions.
//!
//! [`expand`] evaluates each basis function from its defining series in the
//! variables `x_1..x_N`, enumerating index tuples directly. It shares no code
//! path with the symbolic conversions in [`crate::qsym`], which is what makes
//! it usable as a ground truth.
//!
//! Two quasisymmetric functions of degree at most `d` are equal iff their
//! expansions in `d` variables agree: the monomial `x_1^{β_1}⋯x_ℓ^{β_ℓ}`
//! has `ℓ ≤ d` variables and its coefficient is the `M_β` coefficient.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::{descent_set, peak_set_of_composition, Composition};
use crate::error::{Error, Result};
use crate::qsym::{Basis, QSymElement, TensorElement};
use crate::rational::{self, Rational};

/// A monomial stored sparsely as `(variable, exponent)` pairs, variables
/// 1-based and strictly increasing, exponents positive.
///
/// Ordered by total degree, then by dense exponent vector in decreasing
/// lexicographic order, so `x_1^2 x_2` precedes `x_1^2 x_3` precedes `x_2^2 x_3`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<(usize, u32)>) -> Result<Self> {
        exps.retain(|&(_, e)| e > 0);
        exps.sort_unstable();
        if exps.windows(2).any(|w| w[0].0 == w[1].0) || exps.iter().any(|&(v, _)| v == 0) {
            return Err(Error::Format(format!("invalid monomial {:?}", exps)));
        }
        Ok(Monomial(exps))
    }

    /// Builds `Π x_{vars[j]}^{exps[j]}`; repeated variables accumulate.
    fn from_pairs(vars: &[usize], exps: &[usize]) -> Self {
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(vars.len());
        for (&v, &e) in vars.iter().zip(exps) {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e as u32,
                _ => out.push((v, e as u32)),
            }
        }
        Monomial(out)
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    /// The exponent composition: nonzero exponents read left to right.
    pub fn exponent_composition(&self) -> Composition {
        Composition::new(self.0.iter().map(|&(_, e)| e as usize).collect()).unwrap()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) if va == vb => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a.0 < b.0 => {
                    out.push(a);
                    i += 1;
                }
                (Some(&a), None) => {
                    out.push(a);
                    i += 1;
                }
                (_, Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    fn shifted(&self, offset: usize) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v + offset, e)).collect())
    }

    fn max_var(&self) -> usize {
        self.0.last().map_or(0, |&(v, _)| v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // Dense vectors compared lexicographically, larger exponent first.
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va < vb {
                            return Ordering::Less;
                        }
                        if vb < va {
                            return Ordering::Greater;
                        }
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { format!("x{}", v) } else { format!("x{}^{}", v, e) })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// A polynomial in `x_1..x_N` with all monomials of degree at most `d`.
///
/// `truncated` records whether any product discarded monomials above the
/// bound; a truncated polynomial never certifies an identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPoly {
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Monomial, Rational>,
    truncated: bool,
}

impl TruncatedPoly {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        TruncatedPoly {
            nvars,
            degree,
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn from_terms<I>(nvars: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut out = TruncatedPoly::zero(nvars, degree);
        for (m, c) in terms {
            if m.max_var() > nvars || m.degree() > degree {
                return Err(Error::Format(format!(
                    "monomial {} outside {} variables of degree at most {}",
                    m, nvars, degree
                )));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree_bound(&self) -> usize {
        self.degree
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        if m.degree() > self.degree {
            self.truncated = true;
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &TruncatedPoly, c: &Rational) -> TruncatedPoly {
        let mut out = self.clone();
        out.nvars = self.nvars.max(other.nvars);
        out.degree = self.degree.max(other.degree);
        out.truncated |= other.truncated;
        for (m, r) in &other.terms {
            out.add_term(m.clone(), r * c);
        }
        out
    }

    pub fn add(&self, other: &TruncatedPoly) -> TruncatedPoly {
        self.add_scaled(other, &Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> TruncatedPoly {
        TruncatedPoly::zero(self.nvars, self.degree).add_scaled(self, c)
    }

    /// Product with monomials above the larger degree bound dropped and
    /// flagged.
    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        let mut out = TruncatedPoly::zero(self.nvars.max(other.nvars), self.degree.max(other.degree));
        out.truncated = self.truncated || other.truncated;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Renames `x_i` to `x_{i+offset}` inside a ring of `nvars` variables.
    pub fn shift_variables(&self, offset: usize, nvars: usize) -> TruncatedPoly {
        assert!(self.nvars + offset <= nvars);
        TruncatedPoly {
            nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (m.shifted(offset), c.clone())).collect(),
            truncated: self.truncated,
        }
    }

    /// Same polynomial, reported with a different degree bound.
    pub fn with_degree_bound(&self, degree: usize) -> Result<TruncatedPoly> {
        if let Some(m) = self.terms.keys().find(|m| m.degree() > degree) {
            return Err(Error::DegreeBound {
                bound: degree,
                degree: m.degree(),
            });
        }
        Ok(TruncatedPoly {
            degree,
            ..self.clone()
        })
    }

    /// Equality of the polynomials as elements of `k[x_1..]`, ignoring the
    /// recorded variable count and degree bound.
    pub fn same_polynomial(&self, other: &TruncatedPoly) -> bool {
        self.terms == other.terms
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "{}", m)?;
            } else if m.0.is_empty() {
                f.write_str(&rational::format(&mag))?;
            } else {
                write!(f, "{}*{}", rational::format(&mag), m)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Calls `visit` with every weakly increasing tuple of length `len` over
/// `1..=nvars`. `strict_after[j]` forces `i_j < i_{j+1}` (0-based `j`).
fn weakly_increasing<F>(len: usize, nvars: usize, strict_after: &[bool], visit: &mut F)
where
    F: FnMut(&[usize]),
{
    fn go<F: FnMut(&[usize])>(
        pos: usize,
        len: usize,
        nvars: usize,
        strict_after: &[bool],
        cur: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if pos == len {
            visit(cur);
            return;
        }
        let lo = match cur.last() {
            None => 1,
            Some(&prev) if strict_after[pos - 1] => prev + 1,
            Some(&prev) => prev,
        };
        // Remaining strict steps need room.
        let needed: usize = strict_after[pos..len.saturating_sub(1).max(pos)].iter().filter(|&&s| s).count();
        if lo + needed > nvars {
            return;
        }
        for v in lo..=nvars - needed {
            cur.push(v);
            go(pos + 1, len, nvars, strict_after, cur, visit);
            cur.pop();
        }
    }
    go(0, len, nvars, strict_after, &mut Vec::with_capacity(len), visit);
}

fn distinct_count(idx: &[usize]) -> usize {
    // idx is weakly increasing
    idx.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!idx.is_empty())
}

fn pow2(k: usize) -> Rational {
    rational::signed_pow2(false, k as i64)
}

/// Expansion of a single basis function in `nvars` variables.
pub fn expand_basis_function(basis: Basis, alpha: &Composition, nvars: usize) -> TruncatedPoly {
    let degree = alpha.size();
    let mut out = TruncatedPoly::zero(nvars, degree);
    let parts = alpha.parts();
    match basis {
        // Σ_{i_1 < ⋯ < i_p} x_{i_1}^{α_1} ⋯ x_{i_p}^{α_p}
        Basis::M => {
            let strict = vec![true; parts.len()];
            weakly_increasing(parts.len(), nvars, &strict, &mut |idx| {
                out.add_term(Monomial::from_pairs(idx, parts), Rational::one());
            });
        }
        // Σ over i_1 ≤ ⋯ ≤ i_n, strict at each descent of α.
        Basis::L => {
            let des = descent_set(alpha);
            let strict: Vec<bool> = (1..=degree).map(|j| des.contains(j)).collect();
            let ones = vec![1; degree];
            weakly_increasing(degree, nvars, &strict, &mut |idx| {
                out.add_term(Monomial::from_pairs(idx, &ones), Rational::one());
            });
        }
        // Σ over i_1 ≤ ⋯ ≤ i_n with i_{j-1} < i_{j+1} at each peak j of α,
        // weighted by 2^{#distinct indices}.
        Basis::K => {
            let peaks = peak_set_of_composition(alpha).expect("K indexed by odd compositions");
            let strict = vec![false; degree];
            let ones = vec![1; degree];
            weakly_increasing(degree, nvars, &strict, &mut |idx| {
                let ok = peaks.elements().iter().all(|&j| idx[j - 2] < idx[j]);
                if ok {
                    out.add_term(Monomial::from_pairs(idx, &ones), pow2(distinct_count(idx)));
                }
            });
        }
        // Σ over i_1 ≤ ⋯ ≤ i_p of 2^{#distinct} x_{i_1}^{α_1} ⋯ x_{i_p}^{α_p}.
        Basis::Eta => {
            let strict = vec![false; parts.len()];
            weakly_increasing(parts.len(), nvars, &strict, &mut |idx| {
                out.add_term(Monomial::from_pairs(idx, parts), pow2(distinct_count(idx)));
            });
        }
    }
    out
}

/// Expands `a` in `x_1..x_nvars`, refusing a degree bound below `a`'s degree.
pub fn expand(a: &QSymElement, nvars: usize, degree: usize) -> Result<TruncatedPoly> {
    if degree < a.degree() {
        return Err(Error::DegreeBound {
            bound: degree,
            degree: a.degree(),
        });
    }
    let mut out = TruncatedPoly::zero(nvars, degree);
    for (alpha, c) in a.iter() {
        let p = expand_basis_function(a.basis(), alpha, nvars);
        for (m, r) in p.terms {
            out.add_term(m, r * c);
        }
    }
    Ok(out)
}

pub fn poly_add(p: &TruncatedPoly, q: &TruncatedPoly) -> TruncatedPoly {
    p.add(q)
}

pub fn poly_mul(p: &TruncatedPoly, q: &TruncatedPoly) -> TruncatedPoly {
    p.mul(q)
}

/// Evaluates `a` on the ordered alphabet `x_1..x_{N₁}, y_1..y_{N₂}`, with
/// `y_j` stored as variable `N₁ + j`.
pub fn alphabet_split_eval(a: &QSymElement, n1: usize, n2: usize, degree: usize) -> Result<TruncatedPoly> {
    expand(a, n1 + n2, degree)
}

/// `Σ c · left(x_1..x_{N₁}) · right(y_1..y_{N₂})` over the tensor's terms:
/// the right-hand side of the alphabet-splitting identity for Δ.
pub fn expand_tensor_split(t: &TensorElement, n1: usize, n2: usize, degree: usize) -> Result<TruncatedPoly> {
    let (lb, rb) = t.bases();
    let mut out = TruncatedPoly::zero(n1 + n2, degree);
    for ((cl, cr), c) in t.terms() {
        let left = expand_basis_function(lb, cl, n1).with_degree_bound(degree)?;
        let right = expand_basis_function(rb, cr, n2).shift_variables(n1, n1 + n2);
        out = out.add_scaled(&left.mul(&right), c);
    }
    Ok(out)
}

/// Equality of two elements, decided on their expansions in `d` variables
/// where `d` is the larger degree.
pub fn certify_equal(a: &QSymElement, b: &QSymElement) -> Result<bool> {
    let d = a.degree().max(b.degree());
    certify_equal_in(a, b, d)
}

/// As [`certify_equal`] with an explicit variable count; sound whenever
/// `nvars ≥ max(deg a, deg b)`.
pub fn certify_equal_in(a: &QSymElement, b: &QSymElement, nvars: usize) -> Result<bool> {
    let d = a.degree().max(b.degree());
    let pa = expand(a, nvars, d)?;
    let pb = expand(b, nvars, d)?;
    Ok(!pa.truncated && !pb.truncated && pa.same_polynomial(&pb))
}

/// Whether the coefficient of every monomial depends only on its exponent
/// composition, and every composition that appears does so on every
/// increasing choice of `ℓ` variables.
pub fn is_quasisymmetric(p: &TruncatedPoly) -> bool {
    let mut by_comp: BTreeMap<Composition, (Rational, usize)> = BTreeMap::new();
    for (m, c) in &p.terms {
        let entry = by_comp
            .entry(m.exponent_composition())
            .or_insert_with(|| (c.clone(), 0));
        if &entry.0 != c {
            return false;
        }
        entry.1 += 1;
    }
    by_comp
        .iter()
        .all(|(comp, &(_, count))| count == binomial(p.nvars, comp.len()))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
