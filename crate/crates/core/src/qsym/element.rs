use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// The four bases of QSym that elements may be expressed in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial quasisymmetric functions.
    M,
    /// Fundamental quasisymmetric functions.
    L,
    /// Peak functions; only odd compositions index basis elements.
    K,
    /// Enriched monomial functions.
    Eta,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::M, Basis::L, Basis::K, Basis::Eta];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::L => "L",
            Basis::K => "K",
            Basis::Eta => "eta",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(Basis::M),
            "L" | "F" => Ok(Basis::L),
            "K" => Ok(Basis::K),
            "eta" | "E" => Ok(Basis::Eta),
            _ => Err(Error::Format(format!(
                "unknown basis {:?} (expected M, L, K or eta)",
                s
            ))),
        }
    }
}

/// A finite linear combination of basis functions with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymElement {
    basis: Basis,
    terms: BTreeMap<Composition, Rational>,
}

impl QSymElement {
    pub fn zero(basis: Basis) -> Self {
        QSymElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit, indexed by the empty composition.
    pub fn one(basis: Basis) -> Self {
        Self::monomial_unchecked(basis, Composition::empty(), Rational::one())
    }

    /// A single basis function with coefficient one.
    pub fn basis_element(basis: Basis, comp: Composition) -> Result<Self> {
        Self::term(basis, comp, Rational::one())
    }

    pub fn term(basis: Basis, comp: Composition, coeff: Rational) -> Result<Self> {
        check_index(basis, &comp)?;
        Ok(Self::monomial_unchecked(basis, comp, coeff))
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, Rational)>,
    {
        let mut out = QSymElement::zero(basis);
        for (comp, coeff) in terms {
            check_index(basis, &comp)?;
            out.add_term(comp, coeff);
        }
        Ok(out)
    }

    pub(crate) fn monomial_unchecked(basis: Basis, comp: Composition, coeff: Rational) -> Self {
        let mut out = QSymElement::zero(basis);
        out.add_term(comp, coeff);
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Composition, Rational> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|α|` among stored terms, 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Composition::size).max().unwrap_or(0)
    }

    pub fn coefficient(&self, comp: &Composition) -> Rational {
        self.terms.get(comp).cloned().unwrap_or_else(Rational::zero)
    }

    /// The counit: coefficient of the empty composition. Every basis has
    /// the same unit, so this is basis independent.
    pub fn counit(&self) -> Rational {
        self.coefficient(&Composition::empty())
    }

    pub(crate) fn add_term(&mut self, comp: Composition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(comp);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`, both in the same basis.
    pub(crate) fn add_scaled(&mut self, other: &QSymElement, c: &Rational) {
        assert_eq!(self.basis, other.basis, "adding elements of different bases");
        for (comp, coeff) in &other.terms {
            self.add_term(comp.clone(), coeff * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> QSymElement {
        let mut out = QSymElement::zero(self.basis);
        out.add_scaled(self, c);
        out
    }

    /// Sum of two elements; `other` is converted into `self`'s basis first
    /// when the bases differ.
    pub fn add(&self, other: &QSymElement) -> Result<QSymElement> {
        let other = super::basis_convert(other, self.basis)?;
        let mut out = self.clone();
        out.add_scaled(&other, &Rational::one());
        Ok(out)
    }

    pub fn sub(&self, other: &QSymElement) -> Result<QSymElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Applies a linear map given on basis functions.
    pub(crate) fn map_linear<F>(&self, target: Basis, mut f: F) -> Result<QSymElement>
    where
        F: FnMut(&Composition) -> Result<QSymElement>,
    {
        let mut out = QSymElement::zero(target);
        for (comp, coeff) in &self.terms {
            let image = f(comp)?;
            out.add_scaled(&image, coeff);
        }
        Ok(out)
    }
}

fn check_index(basis: Basis, comp: &Composition) -> Result<()> {
    if basis == Basis::K && !comp.is_odd() {
        return Err(Error::Domain(format!(
            "K[{}] has an even part; K is indexed by odd compositions",
            comp
        )));
    }
    Ok(())
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    let mut first = true;
    for (symbol, coeff) in terms {
        let mag = coeff.abs();
        let sign = if coeff.is_negative() { "-" } else { "+" };
        if first {
            if coeff.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {} ", sign)?;
        }
        if !mag.is_one() {
            write!(f, "{}*", rational::format(&mag))?;
        }
        f.write_str(&symbol)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Text form, for example `-eta[5] + 2*eta[1,2,2] + eta[2,1,2]`; the zero
/// element prints as `0`.
impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.basis;
        write_terms(
            f,
            self.terms
                .iter()
                .map(|(c, r)| (format!("{}[{}]", basis, c), r)),
        )
    }
}

/// An element of `QSym ⊗ QSym`, with a basis for each tensor factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    left: Basis,
    right: Basis,
    terms: BTreeMap<(Composition, Composition), Rational>,
}

impl TensorElement {
    pub fn zero(left: Basis, right: Basis) -> Self {
        TensorElement {
            left,
            right,
            terms: BTreeMap::new(),
        }
    }

    pub fn bases(&self) -> (Basis, Basis) {
        (self.left, self.right)
    }

    pub fn terms(&self) -> &BTreeMap<(Composition, Composition), Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, left: &Composition, right: &Composition) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, left: Composition, right: Composition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    /// Adds `c * (a ⊗ b)` expanded bilinearly.
    pub(crate) fn add_product(&mut self, a: &QSymElement, b: &QSymElement, c: &Rational) {
        assert_eq!((a.basis(), b.basis()), (self.left, self.right));
        for (ca, ra) in a.iter() {
            for (cb, rb) in b.iter() {
                self.add_term(ca.clone(), cb.clone(), c * ra * rb);
            }
        }
    }

    /// Rewrites each tensor factor in the requested bases.
    pub fn convert(&self, left: Basis, right: Basis) -> Result<TensorElement> {
        let mut out = TensorElement::zero(left, right);
        for ((cl, cr), coeff) in &self.terms {
            let a = super::basis_convert(&QSymElement::monomial_unchecked(self.left, cl.clone(), Rational::one()), left)?;
            let b = super::basis_convert(&QSymElement::monomial_unchecked(self.right, cr.clone(), Rational::one()), right)?;
            out.add_product(&a, &b, coeff);
        }
        Ok(out)
    }

    /// Applies `f ⊗ g` given on basis functions.
    pub fn map<F, G>(&self, left: Basis, right: Basis, mut f: F, mut g: G) -> Result<TensorElement>
    where
        F: FnMut(&Composition) -> Result<QSymElement>,
        G: FnMut(&Composition) -> Result<QSymElement>,
    {
        let mut out = TensorElement::zero(left, right);
        for ((cl, cr), coeff) in &self.terms {
            out.add_product(&f(cl)?, &g(cr)?, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = (self.left, self.right);
        write_terms(
            f,
            self.terms
                .iter()
                .map(|((a, b), c)| (format!("{}[{}] ⊗ {}[{}]", l, a, r, b), c)),
        )
    }
}
