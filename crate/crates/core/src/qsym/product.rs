use std::collections::BTreeMap;

use super::convert::basis_convert;
use super::element::{Basis, QSymElement};
use crate::combinatorics::{contract_set, interleavings, pattern_right_positions, shuffle_compositions, Composition};
use crate::error::Result;
use crate::rational::int;

/// Quasi-shuffles of two compositions with multiplicities: interleavings in
/// which a part of `alpha` may merge with an adjacent part of `beta`.
pub fn quasi_shuffle(alpha: &[usize], beta: &[usize]) -> BTreeMap<Composition, u64> {
    fn go(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, u64>) {
        match (a.split_first(), b.split_first()) {
            (None, None) => *out.entry(prefix.clone()).or_default() += 1,
            (Some((&x, ra)), None) => {
                let mark = prefix.len();
                prefix.push(x);
                prefix.extend_from_slice(ra);
                *out.entry(prefix.clone()).or_default() += 1;
                prefix.truncate(mark);
            }
            (None, Some((&y, rb))) => {
                let mark = prefix.len();
                prefix.push(y);
                prefix.extend_from_slice(rb);
                *out.entry(prefix.clone()).or_default() += 1;
                prefix.truncate(mark);
            }
            (Some((&x, ra)), Some((&y, rb))) => {
                for (part, na, nb) in [(x, ra, b), (y, a, rb), (x + y, ra, rb)] {
                    prefix.push(part);
                    go(na, nb, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut raw = BTreeMap::new();
    go(alpha, beta, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|(parts, k)| (Composition::new(parts).expect("positive parts"), k))
        .collect()
}

/// `M_α · M_β` by quasi-shuffle.
pub fn product_m(alpha: &Composition, beta: &Composition) -> QSymElement {
    let mut out = QSymElement::zero(Basis::M);
    for (gamma, k) in quasi_shuffle(alpha.parts(), beta.parts()) {
        out.add_term(gamma, int(k as i64));
    }
    out
}

/// Positions `i` of a shuffle pattern taken by `β` whose successor is taken
/// by `α`, excluding position 1. The last position has no successor and is
/// never included.
pub fn pattern_peak_indices(pattern: &[bool]) -> Vec<usize> {
    let len = pattern.len();
    pattern_right_positions(pattern)
        .into_iter()
        .filter(|&i| i != 1 && i < len && !pattern[i])
        .collect()
}

/// `η_α · η_β`: for each way of shuffling `α` with `β` and each subset `I`
/// of the pattern's peak indices, add `(-1)^{|I|} η_{γ^{↓↓I}}`.
pub fn product_eta(alpha: &Composition, beta: &Composition) -> QSymElement {
    let mut out = QSymElement::zero(Basis::Eta);
    for pattern in interleavings(alpha.len(), beta.len()) {
        let gamma = shuffle_compositions(&pattern, alpha, beta);
        let peaks = pattern_peak_indices(&pattern);
        let k = peaks.len();
        for mask in 0u64..(1u64 << k) {
            let chosen: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| peaks[b]).collect();
            let contracted = contract_set(&gamma, &chosen).expect("pattern peaks are peak-lacunar");
            let coeff = if chosen.len().is_multiple_of(2) { int(1) } else { int(-1) };
            out.add_term(contracted, coeff);
        }
    }
    out
}

fn bilinear<F>(a: &QSymElement, b: &QSymElement, basis: Basis, f: F) -> QSymElement
where
    F: Fn(&Composition, &Composition) -> QSymElement,
{
    let mut out = QSymElement::zero(basis);
    for (ca, ra) in a.iter() {
        for (cb, rb) in b.iter() {
            out.add_scaled(&f(ca, cb), &(ra * rb));
        }
    }
    out
}

/// Product of two elements, computed in the basis of `a`.
///
/// `b` is first rewritten in `a`'s basis. L products go through M; a K
/// operand moves both factors to η and the result is returned in η.
pub fn product(a: &QSymElement, b: &QSymElement) -> Result<QSymElement> {
    let basis = match (a.basis(), b.basis()) {
        (Basis::K, _) | (_, Basis::K) => Basis::Eta,
        (x, _) => x,
    };
    match basis {
        Basis::Eta => {
            let a = basis_convert(a, Basis::Eta)?;
            let b = basis_convert(b, Basis::Eta)?;
            Ok(bilinear(&a, &b, Basis::Eta, product_eta))
        }
        Basis::M => {
            let b = basis_convert(b, Basis::M)?;
            Ok(bilinear(a, &b, Basis::M, product_m))
        }
        Basis::L => {
            let am = basis_convert(a, Basis::M)?;
            let bm = basis_convert(b, Basis::M)?;
            basis_convert(&bilinear(&am, &bm, Basis::M, product_m), Basis::L)
        }
        Basis::K => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn el(basis: Basis, terms: &[(&[usize], i64)]) -> QSymElement {
        QSymElement::from_terms(basis, terms.iter().map(|(p, r)| (c(p), int(*r)))).unwrap()
    }

    #[test]
    fn monomial_products() {
        assert_eq!(product_m(&c(&[1]), &c(&[1])), el(Basis::M, &[(&[1, 1], 2), (&[2], 1)]));
        assert_eq!(
            product_m(&c(&[1]), &c(&[2])),
            el(Basis::M, &[(&[1, 2], 1), (&[2, 1], 1), (&[3], 1)])
        );
        assert_eq!(product_m(&Composition::empty(), &c(&[2, 1])), el(Basis::M, &[(&[2, 1], 1)]));
    }

    #[test]
    fn enriched_products_match_worked_examples() {
        assert_eq!(
            product_eta(&c(&[1, 2]), &c(&[2])),
            el(Basis::Eta, &[(&[2, 1, 2], 1), (&[1, 2, 2], 2), (&[5], -1)])
        );
        assert_eq!(
            product_eta(&c(&[1, 1]), &c(&[2, 3])),
            el(
                Basis::Eta,
                &[
                    (&[1, 1, 2, 3], 1),
                    (&[1, 2, 1, 3], 1),
                    (&[4, 3], -1),
                    (&[2, 1, 1, 3], 1),
                    (&[1, 2, 3, 1], 1),
                    (&[1, 6], -1),
                    (&[2, 1, 3, 1], 1),
                    (&[2, 5], -1),
                    (&[2, 3, 1, 1], 1),
                    (&[6, 1], -1),
                ]
            )
        );
        let alpha = c(&[3, 1, 2]);
        assert_eq!(product_eta(&Composition::empty(), &alpha), el(Basis::Eta, &[(&[3, 1, 2], 1)]));
        assert_eq!(product_eta(&alpha, &Composition::empty()), el(Basis::Eta, &[(&[3, 1, 2], 1)]));
    }

    #[test]
    fn peak_indices_of_patterns() {
        // β at position 2 of (α_1, β_1, α_2): peak at 2.
        assert_eq!(pattern_peak_indices(&[false, true, false]), vec![2]);
        // β first: position 1 is excluded.
        assert!(pattern_peak_indices(&[true, false, false]).is_empty());
        // β last: no successor.
        assert!(pattern_peak_indices(&[false, false, true]).is_empty());
        assert_eq!(pattern_peak_indices(&[false, true, false, true, false]), vec![2, 4]);
    }

    #[test]
    fn mixed_basis_products() {
        let k1 = QSymElement::basis_element(Basis::K, c(&[1])).unwrap();
        let m1 = QSymElement::basis_element(Basis::M, c(&[1])).unwrap();
        let p = product(&k1, &m1).unwrap();
        assert_eq!(p.basis(), Basis::Eta);
        // K_1 = 2M_1, so K_1 · M_1 = 2(2M_11 + M_2).
        assert_eq!(
            basis_convert(&p, Basis::M).unwrap(),
            el(Basis::M, &[(&[1, 1], 4), (&[2], 2)])
        );
    }
}
