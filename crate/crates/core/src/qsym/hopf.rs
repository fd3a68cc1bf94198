//! Coproduct and antipode.

use num_traits::One;

use super::convert::basis_convert;
use super::element::{Basis, QSymElement, TensorElement};
use crate::combinatorics::{complement_omega, descent_set, reverse, Composition};
use crate::error::Result;
use crate::rational::Rational;

/// `Σ_k X_{(α_1..α_k)} ⊗ X_{(α_{k+1}..α_ℓ)}`, the shape of Δ on both M and η.
pub fn deconcatenate(basis: Basis, alpha: &Composition) -> TensorElement {
    let mut out = TensorElement::zero(basis, basis);
    for k in 0..=alpha.len() {
        out.add_term(alpha.prefix(k), alpha.suffix(k), Rational::one());
    }
    out
}

/// Δ of an element. M and η use deconcatenation directly; L is computed
/// through M and the factors converted back; K goes through η and the
/// result stays in `η ⊗ η`.
pub fn coproduct(a: &QSymElement) -> Result<TensorElement> {
    let basis = a.basis();
    match basis {
        Basis::M | Basis::Eta => {
            let mut out = TensorElement::zero(basis, basis);
            for (alpha, c) in a.iter() {
                for k in 0..=alpha.len() {
                    out.add_term(alpha.prefix(k), alpha.suffix(k), c.clone());
                }
            }
            Ok(out)
        }
        Basis::L => coproduct(&basis_convert(a, Basis::M)?)?.convert(Basis::L, Basis::L),
        Basis::K => coproduct(&basis_convert(a, Basis::Eta)?),
    }
}

/// `S(M_α) = (-1)^ℓ Σ_{Des γ ⊆ Des(rev α)} M_γ`.
pub fn antipode_m(alpha: &Composition) -> QSymElement {
    let n = alpha.size();
    let sign = if alpha.len().is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let mut out = QSymElement::zero(Basis::M);
    for s in descent_set(&reverse(alpha)).subsets() {
        let gamma = crate::combinatorics::composition_of_subset(n, &s).unwrap();
        out.add_term(gamma, sign.clone());
    }
    out
}

/// `S(η_α) = (-1)^{ℓ(α)} η_{rev α}`.
pub fn antipode_eta(alpha: &Composition) -> QSymElement {
    let sign = if alpha.len().is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    QSymElement::monomial_unchecked(Basis::Eta, reverse(alpha), sign)
}

/// `S(L_α) = (-1)^{|α|} L_{ω(α)}`, with `S(L_∅) = L_∅`.
pub fn antipode_l(alpha: &Composition) -> QSymElement {
    if alpha.is_empty() {
        return QSymElement::one(Basis::L);
    }
    let sign = if alpha.size().is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let omega = complement_omega(alpha).expect("nonempty composition");
    QSymElement::monomial_unchecked(Basis::L, omega, sign)
}

/// Antipode in the element's own basis; K elements are mapped through η
/// and the result is returned in η.
pub fn antipode(a: &QSymElement) -> Result<QSymElement> {
    match a.basis() {
        Basis::M => a.map_linear(Basis::M, |c| Ok(antipode_m(c))),
        Basis::Eta => a.map_linear(Basis::Eta, |c| Ok(antipode_eta(c))),
        Basis::L => a.map_linear(Basis::L, |c| Ok(antipode_l(c))),
        Basis::K => antipode(&basis_convert(a, Basis::Eta)?),
    }
}

/// `m ∘ (S ⊗ id) ∘ Δ`, evaluated in the left factor's basis (η for K).
pub fn antipode_convolution(a: &QSymElement) -> Result<QSymElement> {
    let delta = coproduct(a)?;
    let (left, right) = delta.bases();
    let mut out = QSymElement::zero(if left == Basis::K { Basis::Eta } else { left });
    for ((cl, cr), c) in delta.terms() {
        let x = antipode(&QSymElement::term(left, cl.clone(), Rational::one())?)?;
        let y = QSymElement::term(right, cr.clone(), Rational::one())?;
        let p = basis_convert(&super::product(&x, &y)?, out.basis())?;
        out.add_scaled(&p, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions_up_to;
    use crate::rational::int;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn el(basis: Basis, terms: &[(&[usize], i64)]) -> QSymElement {
        QSymElement::from_terms(basis, terms.iter().map(|(p, r)| (c(p), int(*r)))).unwrap()
    }

    #[test]
    fn eta_coproduct_deconcatenates() {
        let one = QSymElement::basis_element(Basis::Eta, c(&[3])).unwrap();
        let d = coproduct(&one).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coefficient(&c(&[]), &c(&[3])), int(1));
        assert_eq!(d.coefficient(&c(&[3]), &c(&[])), int(1));

        let e12 = QSymElement::basis_element(Basis::Eta, c(&[1, 2])).unwrap();
        let d = coproduct(&e12).unwrap();
        assert_eq!(d, deconcatenate(Basis::Eta, &c(&[1, 2])));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coefficient(&c(&[1]), &c(&[2])), int(1));
    }

    #[test]
    fn monomial_antipode() {
        assert_eq!(antipode_m(&c(&[4])), el(Basis::M, &[(&[4], -1)]));
        assert_eq!(antipode_m(&Composition::empty()), QSymElement::one(Basis::M));
        // S(M_{12}) = M_{21} + M_3
        assert_eq!(antipode_m(&c(&[1, 2])), el(Basis::M, &[(&[2, 1], 1), (&[3], 1)]));
    }

    #[test]
    fn eta_antipode() {
        assert_eq!(antipode_eta(&c(&[1, 3, 1])), el(Basis::Eta, &[(&[1, 3, 1], -1)]));
        assert_eq!(antipode_eta(&c(&[2, 5])), el(Basis::Eta, &[(&[5, 2], 1)]));
    }

    #[test]
    fn fundamental_antipode() {
        assert_eq!(antipode_l(&c(&[1])), el(Basis::L, &[(&[1], -1)]));
        assert_eq!(antipode_l(&c(&[2, 1])), el(Basis::L, &[(&[2, 1], -1)]));
        // certify S(L_21) through M
        let l21 = QSymElement::basis_element(Basis::L, c(&[2, 1])).unwrap();
        let via_m = antipode(&basis_convert(&l21, Basis::M).unwrap()).unwrap();
        assert_eq!(basis_convert(&via_m, Basis::L).unwrap(), antipode_l(&c(&[2, 1])));
    }

    #[test]
    fn antipode_is_an_involution_and_bases_agree() {
        for alpha in compositions_up_to(6) {
            for basis in [Basis::M, Basis::L, Basis::Eta] {
                let x = QSymElement::basis_element(basis, alpha.clone()).unwrap();
                let s = antipode(&x).unwrap();
                assert_eq!(antipode(&s).unwrap(), x);
                let via_m = antipode(&basis_convert(&x, Basis::M).unwrap()).unwrap();
                assert_eq!(basis_convert(&s, Basis::M).unwrap(), via_m, "S({})", x);
            }
        }
    }

    #[test]
    fn hopf_axiom_on_small_eta() {
        for alpha in compositions_up_to(4) {
            let x = QSymElement::basis_element(Basis::Eta, alpha.clone()).unwrap();
            let lhs = antipode_convolution(&x).unwrap();
            assert_eq!(lhs, QSymElement::one(Basis::Eta).scale(&x.counit()));
        }
    }
}
