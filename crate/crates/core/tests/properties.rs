use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qsym_core::oracle::{certify_equal, expand, is_quasisymmetric, poly_add, poly_mul};
use qsym_core::ppartitions::{enumerate_assignments, gamma, is_p_partition, split_incomparable, split_into_chains};
use qsym_core::qsym::product;
use qsym_core::rational::ratio;
use qsym_core::verify::{random_poset, run_suite};
use qsym_core::{Basis, Composition, LabelledWeightedPoset, QSymElement, SignedValue, ZAlphabet};

fn composition(max_len: usize, max_part: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|p| Composition::new(p).unwrap())
}

fn element(max_len: usize) -> impl Strategy<Value = QSymElement> {
    let basis = prop::sample::select(vec![Basis::M, Basis::L, Basis::Eta]);
    let terms = prop::collection::vec((composition(max_len, 2), -5i64..=5, 1i64..=4), 1..=3);
    (basis, terms).prop_map(|(b, ts)| {
        QSymElement::from_terms(b, ts.into_iter().map(|(c, p, q)| (c, ratio(p, q)))).unwrap()
    })
}

fn poset() -> impl Strategy<Value = LabelledWeightedPoset> {
    any::<u64>().prop_map(|seed| random_poset(&mut ChaCha8Rng::seed_from_u64(seed), 5))
}

/// Every map `[n] → [1, N]`, filtered by the classical conditions.
fn brute_force_p_partitions(p: &LabelledWeightedPoset, nvars: u32) -> Vec<Vec<u32>> {
    let n = p.len();
    let mut out = Vec::new();
    let mut f = vec![1u32; n];
    loop {
        if is_p_partition(p, &f) {
            out.push(f.clone());
        }
        let Some(k) = (0..n).rev().find(|&k| f[k] < nvars) else { break };
        f[k] += 1;
        f[k + 1..].iter_mut().for_each(|v| *v = 1);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expand_is_linear(a in element(3), b in element(3), p in -3i64..=3, q in 1i64..=3) {
        let d = a.degree().max(b.degree());
        let c = ratio(p, q);
        let lhs = expand(&a.add(&b.scale(&c)).unwrap(), d, d).unwrap();
        let rhs = poly_add(&expand(&a, d, d).unwrap(), &expand(&b, d, d).unwrap().scale(&c));
        prop_assert!(lhs.same_polynomial(&rhs));
    }

    #[test]
    fn expand_intertwines_product(a in element(2), b in element(2)) {
        let d = a.degree() + b.degree();
        let ab = product(&a, &b).unwrap();
        let lhs = expand(&ab, d, d).unwrap();
        let rhs = poly_mul(&expand(&a, d, d).unwrap(), &expand(&b, d, d).unwrap());
        prop_assert!(!rhs.is_truncated());
        prop_assert!(lhs.same_polynomial(&rhs));
    }

    #[test]
    fn expansions_are_quasisymmetric(a in element(3)) {
        let d = a.degree();
        prop_assert!(is_quasisymmetric(&expand(&a, d + 1, d).unwrap()));
    }

    #[test]
    fn certify_equal_matches_term_equality(a in element(3), b in element(3)) {
        prop_assert!(certify_equal(&a, &a).unwrap());
        prop_assert_eq!(certify_equal(&a, &b).unwrap(), certify_equal(&b, &a).unwrap());
        if a.basis() == b.basis() {
            prop_assert_eq!(certify_equal(&a, &b).unwrap(), a == b);
        }
    }

    #[test]
    fn product_is_commutative_across_bases(a in element(2), b in element(2)) {
        let ab = product(&a, &b).unwrap();
        let ba = product(&b, &a).unwrap();
        prop_assert!(certify_equal(&ab, &ba).unwrap());
    }

    #[test]
    fn split_preserves_gamma(p in poset()) {
        let z = ZAlphabet::signed(3);
        if let Some((i, j)) = p.first_incomparable_pair() {
            let (a, b) = split_incomparable(&p, i, j).unwrap();
            prop_assert_eq!(gamma(&p, &z), gamma(&a, &z).add(&gamma(&b, &z)));
        }
        let chains = split_into_chains(&p);
        prop_assert!(chains.iter().all(LabelledWeightedPoset::is_chain));
        let total = chains.iter().fold(qsym_core::TruncatedPoly::zero(3, p.total_weight()), |acc, c| acc.add(&gamma(c, &z)));
        prop_assert!(total.same_polynomial(&gamma(&p, &z)));
    }

    #[test]
    fn positive_enriched_partitions_are_p_partitions(p in poset()) {
        let nvars = 3;
        let enriched: Vec<Vec<u32>> = enumerate_assignments(&p, &ZAlphabet::positive(nvars))
            .iter()
            .map(|f| f.values().iter().map(|v: &SignedValue| v.magnitude()).collect())
            .collect();
        let mut classical = brute_force_p_partitions(&p, nvars);
        let mut enriched_sorted = enriched.clone();
        enriched_sorted.sort();
        classical.sort();
        prop_assert_eq!(enriched_sorted, classical);
    }
}

#[test]
fn full_suite_at_degree_five() {
    for report in run_suite(5) {
        assert!(report.passed(), "{}", report);
    }
}
