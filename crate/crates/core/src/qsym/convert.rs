//! Change of basis between M, L, K and η.
//!
//! Every conversion is a sum over a boolean interval of descent (or peak)
//! sets, so the single-term maps below enumerate subsets or supersets and
//! [`basis_convert`] extends them linearly. M is the hub for routes that
//! have no direct formula.

use num_traits::One;

use super::element::{Basis, QSymElement};
use crate::combinatorics::{
    composition_of_subset, compositions, descent_set, descent_set_of_permutation,
    odd_composition_of_peak_set, peak_set_of_composition, peak_set_of_permutation, Composition,
    Permutation,
};
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `η_α = Σ_{Des β ⊆ Des α} 2^{ℓ(β)} M_β`.
pub fn eta_to_m(alpha: &Composition) -> QSymElement {
    let n = alpha.size();
    let mut out = QSymElement::zero(Basis::M);
    for s in descent_set(alpha).subsets() {
        let beta = composition_of_subset(n, &s).expect("subset of a descent set");
        let coeff = rational::signed_pow2(false, beta.len() as i64);
        out.add_term(beta, coeff);
    }
    out
}

/// `M_β = 2^{-ℓ(β)} Σ_{Des α ⊆ Des β} (-1)^{ℓ(β)-ℓ(α)} η_α`.
pub fn m_to_eta(beta: &Composition) -> QSymElement {
    let n = beta.size();
    let lb = beta.len() as i64;
    let mut out = QSymElement::zero(Basis::Eta);
    for s in descent_set(beta).subsets() {
        let alpha = composition_of_subset(n, &s).expect("subset of a descent set");
        let negative = (lb - alpha.len() as i64) % 2 != 0;
        out.add_term(alpha, rational::signed_pow2(negative, -lb));
    }
    debug_assert!(out.iter().all(|(_, c)| rational::is_dyadic(c)));
    out
}

/// `L_α = Σ_{Des α ⊆ Des β} M_β`.
pub fn l_to_m(alpha: &Composition) -> QSymElement {
    let n = alpha.size();
    let mut out = QSymElement::zero(Basis::M);
    for s in descent_set(alpha).supersets() {
        out.add_term(composition_of_subset(n, &s).unwrap(), Rational::one());
    }
    out
}

/// Möbius inversion of [`l_to_m`].
pub fn m_to_l(beta: &Composition) -> QSymElement {
    let n = beta.size();
    let lb = beta.len();
    let mut out = QSymElement::zero(Basis::L);
    for s in descent_set(beta).supersets() {
        let gamma = composition_of_subset(n, &s).unwrap();
        let negative = (gamma.len() - lb) % 2 == 1;
        out.add_term(gamma, sign(negative));
    }
    out
}

/// `η_α = 2 Σ_{γ ⊨ n} (-1)^{|Des γ \ Des α|} L_γ` for `n ≥ 1`; `η_∅ = L_∅`.
pub fn eta_to_l(alpha: &Composition) -> QSymElement {
    let n = alpha.size();
    if n == 0 {
        return QSymElement::one(Basis::L);
    }
    let des = descent_set(alpha);
    let mut out = QSymElement::zero(Basis::L);
    for gamma in compositions(n) {
        let negative = descent_set(&gamma).difference_len(&des) % 2 == 1;
        out.add_term(gamma, int(2) * sign(negative));
    }
    out
}

/// `Σ_{I ⊆ S} (-1)^{|I \ T|}`, summed term by term.
pub fn lemma_sign_sum(s: &[usize], t: &[usize]) -> i64 {
    let k = s.len();
    assert!(k < 63, "subset enumeration limited to 62 elements");
    (0u64..(1u64 << k))
        .map(|mask| {
            let outside = (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .filter(|&b| !t.contains(&s[b]))
                .count();
            if outside % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .sum()
}

fn require_odd(alpha: &Composition) -> Result<()> {
    if alpha.is_odd() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "K[{}] has an even part; K is indexed by odd compositions",
            alpha
        )))
    }
}

/// Sign relating the unsigned η of an odd composition to the monomial peak
/// function with the same index: `(-1)^{(n - ℓ(β))/2}`.
fn peak_sign(beta: &Composition) -> Rational {
    sign((beta.size() - beta.len()) / 2 % 2 == 1)
}

/// `K_α = Σ_{Peak β ⊆ Peak α} (-1)^{(n-ℓ(β))/2} η_β` over odd `β`.
pub fn k_to_eta(alpha: &Composition) -> Result<QSymElement> {
    require_odd(alpha)?;
    let n = alpha.size();
    let mut out = QSymElement::zero(Basis::Eta);
    for s in peak_set_of_composition(alpha)?.subsets() {
        let beta = odd_composition_of_peak_set(n, &s)?;
        let c = peak_sign(&beta);
        out.add_term(beta, c);
    }
    Ok(out)
}

/// Inverse of [`k_to_eta`] on an odd-indexed η.
pub fn eta_to_k(alpha: &Composition) -> Result<QSymElement> {
    require_odd(alpha)?;
    let n = alpha.size();
    let peaks = peak_set_of_composition(alpha)?;
    let s_alpha = peak_sign(alpha);
    let mut out = QSymElement::zero(Basis::K);
    for s in peaks.subsets() {
        let gamma = odd_composition_of_peak_set(n, &s)?;
        let negative = (peaks.len() - s.len()) % 2 == 1;
        out.add_term(gamma, &s_alpha * sign(negative));
    }
    Ok(out)
}

pub fn k_to_m(alpha: &Composition) -> Result<QSymElement> {
    k_to_eta(alpha)?.map_linear(Basis::M, |c| Ok(eta_to_m(c)))
}

/// `L_π`: the fundamental function whose descent set is `Des(π)`.
pub fn l_of_permutation(pi: &Permutation) -> QSymElement {
    let comp = composition_of_subset(pi.len(), &descent_set_of_permutation(pi)).unwrap();
    QSymElement::monomial_unchecked(Basis::L, comp, Rational::one())
}

/// `K_π`: the peak function whose peak set is `Peak(π)`.
pub fn k_of_permutation(pi: &Permutation) -> QSymElement {
    let comp = odd_composition_of_peak_set(pi.len(), &peak_set_of_permutation(pi))
        .expect("permutation peak sets are peak-lacunar");
    QSymElement::monomial_unchecked(Basis::K, comp, Rational::one())
}

fn to_m(a: &QSymElement) -> Result<QSymElement> {
    match a.basis() {
        Basis::M => Ok(a.clone()),
        Basis::L => a.map_linear(Basis::M, |c| Ok(l_to_m(c))),
        Basis::Eta => a.map_linear(Basis::M, |c| Ok(eta_to_m(c))),
        Basis::K => a.map_linear(Basis::M, k_to_m),
    }
}

fn to_eta(a: &QSymElement) -> Result<QSymElement> {
    match a.basis() {
        Basis::Eta => Ok(a.clone()),
        Basis::K => a.map_linear(Basis::Eta, k_to_eta),
        _ => to_m(a)?.map_linear(Basis::Eta, |c| Ok(m_to_eta(c))),
    }
}

/// Rewrites `a` in the `target` basis.
///
/// Converting into K fails with [`Error::NotInSpan`] when `a` lies outside
/// the peak algebra; the residual reported is the part of `a`'s η-expansion
/// indexed by compositions with an even part.
pub fn basis_convert(a: &QSymElement, target: Basis) -> Result<QSymElement> {
    if a.basis() == target {
        return Ok(a.clone());
    }
    match target {
        Basis::M => to_m(a),
        Basis::Eta => to_eta(a),
        Basis::L => match a.basis() {
            Basis::Eta => a.map_linear(Basis::L, |c| Ok(eta_to_l(c))),
            Basis::K => to_eta(a)?.map_linear(Basis::L, |c| Ok(eta_to_l(c))),
            _ => to_m(a)?.map_linear(Basis::L, |c| Ok(m_to_l(c))),
        },
        Basis::K => {
            let eta = to_eta(a)?;
            let residual = QSymElement::from_terms(
                Basis::Eta,
                eta.iter()
                    .filter(|(c, _)| !c.is_odd())
                    .map(|(c, r)| (c.clone(), r.clone())),
            )?;
            if !residual.is_zero() {
                return Err(Error::NotInSpan {
                    residual: Box::new(residual),
                });
            }
            eta.map_linear(Basis::K, eta_to_k)
        }
    }
}
