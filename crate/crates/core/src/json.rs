//! JSON forms of elements, tensors, truncated polynomials and posets.
//!
//! Coefficients are strings `"p/q"` (`"p"` when the denominator is 1) and
//! terms are listed in the canonical order of their container.

use serde::{Deserialize, Serialize};

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::oracle::{Monomial, TruncatedPoly};
use crate::ppartitions::LabelledWeightedPoset;
use crate::qsym::{Basis, QSymElement, TensorElement};
use crate::rational;

#[derive(Serialize, Deserialize, Debug)]
struct TermJson {
    comp: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize, Debug)]
struct ElementJson {
    basis: String,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug)]
struct TensorTermJson {
    comp_left: Vec<usize>,
    comp_right: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize, Debug)]
struct TensorJson {
    basis_left: String,
    basis_right: String,
    terms: Vec<TensorTermJson>,
}

#[derive(Serialize, Deserialize, Debug)]
struct PolyTermJson {
    exps: Vec<(usize, u32)>,
    coeff: String,
}

#[derive(Serialize, Deserialize, Debug)]
struct PolyJson {
    nvars: usize,
    degree: usize,
    #[serde(default)]
    truncated: bool,
    terms: Vec<PolyTermJson>,
}

#[derive(Serialize, Deserialize, Debug)]
struct PosetJson {
    n: usize,
    #[serde(default)]
    covers: Vec<(usize, usize)>,
    #[serde(default)]
    weights: Option<Vec<usize>>,
}

fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn from_str<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

pub fn element_to_json(a: &QSymElement) -> String {
    to_string(&ElementJson {
        basis: a.basis().name().to_string(),
        terms: a
            .iter()
            .map(|(c, r)| TermJson {
                comp: c.parts().to_vec(),
                coeff: rational::format(r),
            })
            .collect(),
    })
}

pub fn element_from_json(text: &str) -> Result<QSymElement> {
    let raw: ElementJson = from_str(text)?;
    let basis: Basis = raw.basis.parse()?;
    let terms = raw
        .terms
        .into_iter()
        .map(|t| Ok((Composition::new(t.comp)?, rational::parse(&t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    QSymElement::from_terms(basis, terms)
}

pub fn tensor_to_json(t: &TensorElement) -> String {
    let (l, r) = t.bases();
    to_string(&TensorJson {
        basis_left: l.name().to_string(),
        basis_right: r.name().to_string(),
        terms: t
            .terms()
            .iter()
            .map(|((a, b), c)| TensorTermJson {
                comp_left: a.parts().to_vec(),
                comp_right: b.parts().to_vec(),
                coeff: rational::format(c),
            })
            .collect(),
    })
}

pub fn poly_to_json(p: &TruncatedPoly) -> String {
    to_string(&PolyJson {
        nvars: p.nvars(),
        degree: p.degree_bound(),
        truncated: p.is_truncated(),
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| PolyTermJson {
                exps: m.exponents().to_vec(),
                coeff: rational::format(c),
            })
            .collect(),
    })
}

pub fn poly_from_json(text: &str) -> Result<TruncatedPoly> {
    let raw: PolyJson = from_str(text)?;
    let terms = raw
        .terms
        .into_iter()
        .map(|t| Ok((Monomial::new(t.exps)?, rational::parse(&t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    TruncatedPoly::from_terms(raw.nvars, raw.degree, terms)
}

/// Reads `{"n": .., "covers": [[i, j], ..], "weights": [..]}`; weights
/// default to 1.
pub fn poset_from_json(text: &str) -> Result<LabelledWeightedPoset> {
    let raw: PosetJson = from_str(text)?;
    let weights = raw.weights.unwrap_or_else(|| vec![1; raw.n]);
    LabelledWeightedPoset::from_relations(raw.n, &raw.covers, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn element_schema() {
        let e = QSymElement::from_terms(Basis::Eta, [(c(&[2]), ratio(-1, 4)), (c(&[1, 1]), int(1))]).unwrap();
        assert_eq!(
            element_to_json(&e),
            r#"{"basis":"eta","terms":[{"comp":[2],"coeff":"-1/4"},{"comp":[1,1],"coeff":"1"}]}"#
        );
        assert_eq!(element_from_json(&element_to_json(&e)).unwrap(), e);
        assert!(element_from_json(r#"{"basis":"K","terms":[{"comp":[2],"coeff":"1"}]}"#).is_err());
        assert!(element_from_json(r#"{"basis":"Q","terms":[]}"#).is_err());
    }

    #[test]
    fn tensor_schema() {
        let t = crate::qsym::deconcatenate(Basis::Eta, &c(&[1]));
        assert_eq!(
            tensor_to_json(&t),
            r#"{"basis_left":"eta","basis_right":"eta","terms":[{"comp_left":[],"comp_right":[1],"coeff":"1"},{"comp_left":[1],"comp_right":[],"coeff":"1"}]}"#
        );
    }

    #[test]
    fn poly_schema() {
        let m = QSymElement::basis_element(Basis::M, c(&[2, 1])).unwrap();
        let p = crate::oracle::expand(&m, 2, 3).unwrap();
        assert_eq!(
            poly_to_json(&p),
            r#"{"nvars":2,"degree":3,"truncated":false,"terms":[{"exps":[[1,2],[2,1]],"coeff":"1"}]}"#
        );
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn poset_schema() {
        let p = poset_from_json(r#"{"n":3,"covers":[[1,2],[2,3]]}"#).unwrap();
        assert!(p.less(1, 3));
        assert_eq!(p.weights(), &[1, 1, 1]);
        let w = poset_from_json(r#"{"n":2,"covers":[],"weights":[2,3]}"#).unwrap();
        assert_eq!(w.weights(), &[2, 3]);
        assert!(poset_from_json(r#"{"n":2,"covers":[[1,2],[2,1]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn element_json_round_trip(
            terms in prop::collection::vec((prop::collection::vec(1usize..5, 0..5), -20i64..20, 1i64..9), 0..6),
            basis in prop::sample::select(vec![Basis::M, Basis::L, Basis::Eta]),
        ) {
            let e = QSymElement::from_terms(
                basis,
                terms.into_iter().map(|(p, a, b)| (Composition::new(p).unwrap(), ratio(a, b))),
            ).unwrap();
            prop_assert_eq!(element_from_json(&element_to_json(&e)).unwrap(), e);
        }
    }
}
