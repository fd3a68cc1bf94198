//! Identity checks run by `qsym verify` and by the acceptance tests.
//!
//! Each check sweeps a family of inputs, compares two independent routes to
//! the same quantity, and stops at the first disagreement, recording it as a
//! counterexample. Polynomial comparisons go through [`crate::oracle`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{
    compositions, compositions_up_to, compositions_with_bounded_parts, contract_set, descent_set, odd_compositions,
    permutations, shuffles, Composition, IntervalSubset, Permutation,
};
use crate::error::Result;
use crate::oracle::{alphabet_split_eval, certify_equal, expand, expand_tensor_split, TruncatedPoly};
use crate::ppartitions::{
    gamma, product_universal, split_incomparable, universal, universal_to_eta, LabelledWeightedPoset,
    ZAlphabet,
};
use crate::qsym::{
    antipode, antipode_convolution, basis_convert, coproduct, eta_to_l, eta_to_m, k_of_permutation,
    k_to_m, l_of_permutation, lemma_sign_sum, m_to_eta, m_to_l, product, product_eta, Basis, QSymElement,
    TensorElement,
};
use crate::rational::{int, ratio, Rational};

/// Outcome of one identity sweep.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} ({} cases, {:.2}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\n    counterexample: {}", cx)?;
        }
        Ok(())
    }
}

/// Runs `body` with a case counter; `Err` carries the counterexample.
fn run_check<F>(name: &str, body: F) -> CheckReport
where
    F: FnOnce(&mut usize) -> std::result::Result<(), String>,
{
    let start = Instant::now();
    let mut cases = 0;
    let outcome = body(&mut cases);
    CheckReport {
        name: name.to_string(),
        cases,
        counterexample: outcome.err(),
        elapsed: start.elapsed(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn el(basis: Basis, comp: &Composition) -> QSymElement {
    QSymElement::basis_element(basis, comp.clone()).expect("valid index")
}

fn comps(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}

fn describe_poly_mismatch(lhs: &TruncatedPoly, rhs: &TruncatedPoly) -> String {
    let diff = lhs.add_scaled(rhs, &-Rational::one());
    match diff.terms().iter().next() {
        Some((m, c)) => format!("first differing monomial {} (lhs - rhs coefficient {})", m, c),
        None => "degree-bound or truncation mismatch".to_string(),
    }
}

/// Worked examples: descent and peak statistics, contractions, the η-to-M
/// expansion of `η_{131}`, both η products and the `M_{21}`, `L_{21}`
/// expansions in three variables.
pub fn golden_examples() -> CheckReport {
    run_check("golden examples", |cases| {
        let alpha = comps(&[1, 1, 3, 3, 1]);
        *cases += 1;
        ensure(descent_set(&alpha).elements() == [1, 2, 5, 8], || "Des(1,1,3,3,1)".into())?;
        *cases += 1;
        ensure(lift(crate::combinatorics::hat(&alpha))? == comps(&[1, 1, 2, 1, 2, 1, 1]), || "hat(1,1,3,3,1)".into())?;
        *cases += 1;
        ensure(
            lift(crate::combinatorics::peak_set_of_composition(&alpha))?.elements() == [4, 7],
            || "Peak(1,1,3,3,1)".into(),
        )?;

        let beta = comps(&[2, 1, 4, 3, 2]);
        *cases += 1;
        ensure(lift(crate::combinatorics::contract(&beta, 3))? == comps(&[2, 8, 2]), || "contract at 3".into())?;
        *cases += 1;
        ensure(lift(contract_set(&beta, &[2, 4]))? == comps(&[12]), || "contract at {2,4}".into())?;

        let e131 = eta_to_m(&comps(&[1, 3, 1]));
        let expected = lift(QSymElement::from_terms(
            Basis::M,
            [
                (comps(&[5]), int(2)),
                (comps(&[1, 4]), int(4)),
                (comps(&[4, 1]), int(4)),
                (comps(&[1, 3, 1]), int(8)),
            ],
        ))?;
        *cases += 1;
        ensure(e131 == expected, || format!("eta[1,3,1] = {}", e131))?;

        let p1 = product_eta(&comps(&[1, 2]), &comps(&[2]));
        let expected = lift(QSymElement::from_terms(
            Basis::Eta,
            [(comps(&[2, 1, 2]), int(1)), (comps(&[1, 2, 2]), int(2)), (comps(&[5]), int(-1))],
        ))?;
        *cases += 1;
        ensure(p1 == expected, || format!("eta[1,2]*eta[2] = {}", p1))?;

        let p2 = product_eta(&comps(&[1, 1]), &comps(&[2, 3]));
        let terms: [(&[usize], i64); 10] = [
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
        ];
        let expected = lift(QSymElement::from_terms(
            Basis::Eta,
            terms.iter().map(|(p, c)| (comps(p), int(*c))),
        ))?;
        *cases += 1;
        ensure(p2 == expected, || format!("eta[1,1]*eta[2,3] = {}", p2))?;

        let m21 = lift(expand(&el(Basis::M, &comps(&[2, 1])), 3, 3))?;
        *cases += 1;
        ensure(m21.to_string() == "x1^2*x2 + x1^2*x3 + x2^2*x3", || format!("M[2,1] = {}", m21))?;
        let l21 = lift(expand(&el(Basis::L, &comps(&[2, 1])), 3, 3))?;
        *cases += 1;
        ensure(
            l21.to_string() == "x1^2*x2 + x1^2*x3 + x1*x2*x3 + x2^2*x3",
            || format!("L[2,1] = {}", l21),
        )?;
        Ok(())
    })
}

/// `M → η → M` and `η → M → η` are identities on every composition of
/// size at most `max_n`.
pub fn basis_round_trips(max_n: usize) -> CheckReport {
    run_check(&format!("M <-> eta round trips, n <= {}", max_n), |cases| {
        for alpha in compositions_up_to(max_n) {
            *cases += 1;
            let m = el(Basis::M, &alpha);
            let back = lift(basis_convert(&lift(basis_convert(&m, Basis::Eta))?, Basis::M))?;
            ensure(back == m, || format!("M[{}] -> eta -> M gives {}", alpha, back))?;
            let e = el(Basis::Eta, &alpha);
            let back = lift(basis_convert(&lift(basis_convert(&e, Basis::M))?, Basis::Eta))?;
            ensure(back == e, || format!("eta[{}] -> M -> eta gives {}", alpha, back))?;
            let inv = m_to_eta(&alpha);
            ensure(
                inv.iter().all(|(_, c)| crate::rational::is_dyadic(c)),
                || format!("non-dyadic coefficient in M[{}] = {}", alpha, inv),
            )?;
        }
        Ok(())
    })
}

/// The η product rule against the M-basis quasi-shuffle product of the
/// expansions, certified by the oracle, for `|α| + |β| ≤ max_total`.
pub fn eta_product_rule(max_total: usize) -> CheckReport {
    run_check(&format!("eta product rule, |a|+|b| <= {}", max_total), |cases| {
        for total in 0..=max_total {
            for a in 0..=total {
                for alpha in compositions(a) {
                    for beta in compositions(total - a) {
                        *cases += 1;
                        let lhs = product_eta(&alpha, &beta);
                        let rhs = lift(product(&eta_to_m(&alpha), &eta_to_m(&beta)))?;
                        ensure(lift(certify_equal(&lhs, &rhs))?, || {
                            format!("eta[{}] * eta[{}]: rule gives {}, M route gives {}", alpha, beta, lhs, rhs)
                        })?;
                    }
                }
            }
        }
        Ok(())
    })
}

/// Deterministic sample of elements across all four bases with degree at
/// most `max_degree`.
pub fn sample_elements(count: usize, max_degree: usize, seed: u64) -> Vec<QSymElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = compositions_up_to(max_degree);
    let odd: Vec<Composition> = (0..=max_degree).flat_map(odd_compositions).collect();
    (0..count)
        .map(|k| {
            let basis = Basis::ALL[k % 4];
            let source = if basis == Basis::K { &odd } else { &pool };
            let nterms = rng.gen_range(1..=3);
            let terms: Vec<(Composition, Rational)> = (0..nterms)
                .map(|_| {
                    let c = source[rng.gen_range(0..source.len())].clone();
                    (c, ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                })
                .collect();
            QSymElement::from_terms(basis, terms).expect("indices drawn from the right pool")
        })
        .collect()
}

/// The η coproduct against deconcatenation in M, exactly, for
/// `|α| ≤ max_n`; then Δ on `samples` sampled elements against evaluation
/// on a split alphabet.
pub fn coproduct_checks(max_n: usize, samples: usize) -> CheckReport {
    run_check(&format!("eta coproduct, n <= {}; alphabet split on {} samples", max_n, samples), |cases| {
        for alpha in compositions_up_to(max_n) {
            *cases += 1;
            let via_eta = lift(lift(coproduct(&el(Basis::Eta, &alpha)))?.map(
                Basis::M,
                Basis::M,
                |c| Ok(eta_to_m(c)),
                |c| Ok(eta_to_m(c)),
            ))?;
            let via_m = lift(coproduct(&eta_to_m(&alpha)))?;
            ensure(via_eta == via_m, || {
                format!("Delta eta[{}]: {} vs {}", alpha, via_eta, via_m)
            })?;
        }
        for a in sample_elements(samples, 4, 0x5eed) {
            *cases += 1;
            let d = a.degree();
            let lhs = lift(alphabet_split_eval(&a, d, d, d))?;
            let rhs = lift(expand_tensor_split(&lift(coproduct(&a))?, d, d, d))?;
            ensure(!rhs.is_truncated() && lhs.same_polynomial(&rhs), || {
                format!("split evaluation of {}: {}", a, describe_poly_mismatch(&lhs, &rhs))
            })?;
        }
        Ok(())
    })
}

/// `S² = id` on M, L and η up to `max_n`; the η and L antipode formulas
/// against the M formula; and `m ∘ (S ⊗ id) ∘ Δ = ε` on η up to `max_hopf`.
pub fn antipode_checks(max_n: usize, max_hopf: usize) -> CheckReport {
    run_check(
        &format!("antipode: involution and M-route agreement n <= {}, Hopf axiom n <= {}", max_n, max_hopf),
        |cases| {
            for alpha in compositions_up_to(max_n) {
                for basis in [Basis::M, Basis::L, Basis::Eta] {
                    *cases += 1;
                    let x = el(basis, &alpha);
                    let s = lift(antipode(&x))?;
                    let ss = lift(antipode(&s))?;
                    ensure(ss == x, || format!("S(S({})) = {}", x, ss))?;
                    if basis != Basis::M {
                        let via_m = lift(antipode(&lift(basis_convert(&x, Basis::M))?))?;
                        let direct = lift(basis_convert(&s, Basis::M))?;
                        ensure(via_m == direct, || format!("S({}) = {} but M route gives {}", x, s, via_m))?;
                    }
                }
            }
            for alpha in compositions_up_to(max_hopf) {
                *cases += 1;
                let x = el(Basis::Eta, &alpha);
                let lhs = lift(antipode_convolution(&x))?;
                let rhs = QSymElement::one(Basis::Eta).scale(&x.counit());
                ensure(lhs == rhs, || format!("m(S x id)Delta({}) = {}", x, lhs))?;
            }
            Ok(())
        },
    )
}

/// Generating functions of chains against the basis expansions, at
/// `nvars` variables: `U(π, 1ⁿ)` over ℙ and ℙ± give `L_π`, `K_π`; the
/// identity and reversed identity chains give `η_α` and `M_α`.
pub fn ppartition_specialisations(max_n: usize, max_part: usize, nvars: u32) -> CheckReport {
    run_check(
        &format!("P-partition specialisations, n <= {}, parts <= {}, N = {}", max_n, max_part, nvars),
        |cases| {
            let pos = ZAlphabet::positive(nvars);
            let signed = ZAlphabet::signed(nvars);
            let nv = nvars as usize;
            for n in 0..=max_n {
                let ones = Composition::ones(n);
                for pi in permutations(n) {
                    *cases += 1;
                    let u = lift(universal(&pi, &ones, &pos))?;
                    let l = lift(expand(&l_of_permutation(&pi), nv, n))?;
                    ensure(u == l, || format!("U^P({}, 1^{}) vs L_pi: {}", pi, n, describe_poly_mismatch(&u, &l)))?;
                    let u = lift(universal(&pi, &ones, &signed))?;
                    let k = lift(expand(&k_of_permutation(&pi), nv, n))?;
                    ensure(u == k, || format!("U^P+-({}, 1^{}) vs K_pi: {}", pi, n, describe_poly_mismatch(&u, &k)))?;
                }
                for alpha in compositions_with_bounded_parts(n, max_part) {
                    *cases += 1;
                    let d = alpha.size();
                    let u = lift(universal(&Permutation::identity(n), &alpha, &signed))?;
                    let e = lift(expand(&el(Basis::Eta, &alpha), nv, d))?;
                    ensure(u == e, || format!("U^P+-(id, {}) vs eta: {}", alpha, describe_poly_mismatch(&u, &e)))?;
                    let u = lift(universal(&Permutation::reversed_identity(n), &alpha, &pos))?;
                    let m = lift(expand(&el(Basis::M, &alpha), nv, d))?;
                    ensure(u == m, || format!("U^P(rev, {}) vs M: {}", alpha, describe_poly_mismatch(&u, &m)))?;
                }
            }
            Ok(())
        },
    )
}

/// Weights used for the weighted coshuffle sweep: alternating 1, 2, ...
fn alternating_weights(len: usize, start: usize) -> Composition {
    Composition::new((0..len).map(|i| 1 + (i + start) % 2).collect()).expect("positive")
}

/// Shuffle products of chain generating functions, unweighted and with
/// alternating weights, for `n + m ≤ max_total` at `ℙ_N` and `ℙ±_N`.
pub fn shuffle_products(max_total: usize, nvars: u32) -> CheckReport {
    run_check(&format!("shuffle and coshuffle products, n+m <= {}, N = {}", max_total, nvars), |cases| {
        for z in [ZAlphabet::positive(nvars), ZAlphabet::signed(nvars)] {
            let mut cache: HashMap<(Permutation, Composition), TruncatedPoly> = HashMap::new();
            let mut u = |pi: &Permutation, alpha: &Composition| -> std::result::Result<TruncatedPoly, String> {
                if let Some(p) = cache.get(&(pi.clone(), alpha.clone())) {
                    return Ok(p.clone());
                }
                let p = lift(universal(pi, alpha, &z))?;
                cache.insert((pi.clone(), alpha.clone()), p.clone());
                Ok(p)
            };
            for total in 0..=max_total {
                for n in 0..=total {
                    let m = total - n;
                    for pi in permutations(n) {
                        for sigma in permutations(m) {
                            for weighted in [false, true] {
                                *cases += 1;
                                let (alpha, beta) = if weighted {
                                    (alternating_weights(n, 0), alternating_weights(m, 1))
                                } else {
                                    (Composition::ones(n), Composition::ones(m))
                                };
                                let d = alpha.size() + beta.size();
                                let lhs = lift(u(&pi, &alpha)?.with_degree_bound(d))?.mul(&u(&sigma, &beta)?);
                                let mut rhs = TruncatedPoly::zero(nvars as usize, d);
                                if weighted {
                                    for (tau, gamma) in lift(product_universal(&pi, &alpha, &sigma, &beta))? {
                                        rhs = rhs.add(&u(&tau, &gamma)?);
                                    }
                                } else {
                                    for tau in shuffles(&pi, &sigma) {
                                        rhs = rhs.add(&u(&tau, &Composition::ones(total))?);
                                    }
                                }
                                ensure(!lhs.is_truncated() && lhs.same_polynomial(&rhs), || {
                                    format!(
                                        "Z = {:?}, ({}, {}) * ({}, {}): {}",
                                        z.values().iter().map(ToString::to_string).collect::<Vec<_>>(),
                                        pi,
                                        alpha,
                                        sigma,
                                        beta,
                                        describe_poly_mismatch(&lhs, &rhs)
                                    )
                                })?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })
}

/// `U^{ℙ±}_{π,α}` as a signed sum of contracted η against enumeration at
/// `nvars` variables, for `π ∈ S_n` and parts of `α` at most `max_part`.
pub fn universal_as_eta_sum(n: usize, max_part: usize, nvars: u32) -> CheckReport {
    run_check(&format!("U as a sum of eta, S_{}, parts <= {}, N = {}", n, max_part, nvars), |cases| {
        let z = ZAlphabet::signed(nvars);
        for pi in permutations(n) {
            for alpha in compositions_with_bounded_parts(n, max_part) {
                *cases += 1;
                let symbolic = lift(universal_to_eta(&pi, &alpha))?;
                let lhs = lift(expand(&symbolic, nvars as usize, alpha.size()))?;
                let rhs = lift(universal(&pi, &alpha, &z))?;
                ensure(lhs.same_polynomial(&rhs), || {
                    format!("pi = {}, alpha = ({}): {} ; {}", pi, alpha, symbolic, describe_poly_mismatch(&lhs, &rhs))
                })?;
            }
        }
        Ok(())
    })
}

/// The signed K-to-η conversion, composed into M, against the defining
/// series of `K_α`, for odd `α` with `|α| ≤ max_n`.
pub fn k_sign_convention(max_n: usize) -> CheckReport {
    run_check(&format!("K conversion sign convention, n <= {}", max_n), |cases| {
        for n in 0..=max_n {
            for alpha in odd_compositions(n) {
                *cases += 1;
                let via_eta = lift(k_to_m(&alpha))?;
                let direct = el(Basis::K, &alpha);
                ensure(lift(certify_equal(&via_eta, &direct))?, || {
                    format!("K[{}] via eta = {}", alpha, via_eta)
                })?;
            }
        }
        Ok(())
    })
}

/// The alternating subset sum against its closed form for all `S, T ⊆ [k]`.
pub fn sign_sum_lemma(k: usize) -> CheckReport {
    run_check(&format!("subset sign-sum lemma, S, T in [{}]", k), |cases| {
        let ground = IntervalSubset::full(k + 1);
        for s in ground.subsets() {
            for t in ground.subsets() {
                *cases += 1;
                let got = lemma_sign_sum(s.elements(), t.elements());
                let expected = if s.is_subset_of(&t) { 1i64 << s.len() } else { 0 };
                ensure(got == expected, || format!("S = {:?}, T = {:?}: {} != {}", s.elements(), t.elements(), got, expected))?;
            }
        }
        Ok(())
    })
}

/// Products are commutative and associative in every basis, checked on
/// random triples against the M-basis product and the oracle.
pub fn product_ring_axioms(max_total: usize, triples: usize) -> CheckReport {
    run_check(&format!("product commutativity and associativity, degree sum <= {}", max_total), |cases| {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pool = compositions_up_to(max_total);
        let odd: Vec<Composition> = (0..=max_total).flat_map(odd_compositions).collect();
        for k in 0..triples {
            let basis = Basis::ALL[k % 4];
            let source = if basis == Basis::K { &odd } else { &pool };
            let mut pick = |budget: usize| {
                let fits: Vec<&Composition> = source.iter().filter(|c| c.size() <= budget).collect();
                fits[rng.gen_range(0..fits.len())].clone()
            };
            let a = pick(max_total);
            let b = pick(max_total - a.size());
            let c = pick(max_total - a.size() - b.size());
            let (x, y, w) = (el(basis, &a), el(basis, &b), el(basis, &c));
            *cases += 1;
            let xy = lift(product(&x, &y))?;
            let yx = lift(product(&y, &x))?;
            ensure(lift(certify_equal(&xy, &yx))?, || format!("{} * {} not commutative", x, y))?;
            let left = lift(product(&xy, &w))?;
            let right = lift(product(&x, &lift(product(&y, &w))?))?;
            ensure(lift(certify_equal(&left, &right))?, || format!("({} * {}) * {} not associative", x, y, w))?;
            let in_m = lift(product(&lift(basis_convert(&x, Basis::M))?, &lift(basis_convert(&y, Basis::M))?))?;
            ensure(lift(basis_convert(&xy, Basis::M))? == in_m, || {
                format!("{} * {} disagrees with the M product", x, y)
            })?;
            let px = lift(expand(&x, xy.degree().max(1), xy.degree()))?;
            let py = lift(expand(&y, xy.degree().max(1), xy.degree()))?;
            let pxy = lift(expand(&xy, xy.degree().max(1), xy.degree()))?;
            ensure(pxy.same_polynomial(&px.mul(&py)), || format!("expand({} * {}) is not the polynomial product", x, y))?;
        }
        Ok(())
    })
}

fn triple_coproduct(x: &QSymElement, left_first: bool) -> Result<BTreeMap<(Composition, Composition, Composition), Rational>> {
    let mut out: BTreeMap<(Composition, Composition, Composition), Rational> = BTreeMap::new();
    let delta = coproduct(x)?;
    let (lb, rb) = delta.bases();
    for ((l, r), c) in delta.terms() {
        let (split, other, basis): (&Composition, &Composition, Basis) = if left_first { (l, r, lb) } else { (r, l, rb) };
        let inner: TensorElement = coproduct(&QSymElement::basis_element(basis, split.clone())?)?;
        for ((a, b), d) in inner.terms() {
            let key = if left_first {
                (a.clone(), b.clone(), other.clone())
            } else {
                (other.clone(), a.clone(), b.clone())
            };
            let e = out.entry(key).or_insert_with(Rational::zero);
            *e += c * d;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Coassociativity of Δ on η, the antipode as an algebra map, the η-to-L
/// formula against the route through M, and degree grading.
pub fn hopf_structure(max_n: usize) -> CheckReport {
    run_check(&format!("coassociativity, S multiplicative, eta-to-L, grading; n <= {}", max_n), |cases| {
        for alpha in compositions_up_to(max_n) {
            *cases += 1;
            let x = el(Basis::Eta, &alpha);
            ensure(lift(triple_coproduct(&x, true))? == lift(triple_coproduct(&x, false))?, || {
                format!("coassociativity fails on {}", x)
            })?;
            let d = lift(coproduct(&x))?;
            ensure(d.terms().keys().all(|(l, r)| l.size() + r.size() == alpha.size()), || {
                format!("Delta({}) is not graded", x)
            })?;
            let direct = eta_to_l(&alpha);
            let via_m = lift(basis_convert(&eta_to_m(&alpha), Basis::L))?;
            ensure(direct == via_m, || format!("eta[{}] in L: {} vs {}", alpha, direct, via_m))?;
        }
        let all = compositions_up_to(max_n);
        for a in &all {
            for b in all.iter().filter(|b| a.size() + b.size() <= max_n) {
                *cases += 1;
                let (x, y) = (el(Basis::Eta, a), el(Basis::Eta, b));
                let xy = lift(product(&x, &y))?;
                ensure(xy.iter().all(|(c, _)| c.size() == a.size() + b.size()), || {
                    format!("{} * {} is not homogeneous", x, y)
                })?;
                let lhs = lift(antipode(&xy))?;
                let rhs = lift(product(&lift(antipode(&x))?, &lift(antipode(&y))?))?;
                ensure(lhs == rhs, || format!("S({} * {}) = {} but S(x)S(y) = {}", x, y, lhs, rhs))?;
            }
        }
        for n in 0..=max_n {
            for beta in compositions(n) {
                *cases += 1;
                let back = lift(basis_convert(&m_to_l(&beta), Basis::M))?;
                ensure(back == el(Basis::M, &beta), || format!("M[{}] -> L -> M gives {}", beta, back))?;
            }
        }
        Ok(())
    })
}

/// Splitting a random poset on an incomparable pair preserves `Γ_Z`.
pub fn split_recursion(posets: usize, max_n: usize, nvars: u32) -> CheckReport {
    run_check(&format!("split recursion on {} random posets, n <= {}", posets, max_n), |cases| {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let z = ZAlphabet::signed(nvars);
        let mut done = 0;
        while done < posets {
            let p = random_poset(&mut rng, max_n);
            let Some((i, j)) = p.first_incomparable_pair() else { continue };
            done += 1;
            *cases += 1;
            let (a, b) = lift(split_incomparable(&p, i, j))?;
            let whole = gamma(&p, &z);
            let parts = gamma(&a, &z).add(&gamma(&b, &z));
            ensure(whole == parts, || format!("{} split at ({}, {}): {}", p, i, j, describe_poly_mismatch(&whole, &parts)))?;
        }
        Ok(())
    })
}

/// A random labelled poset on `2..=max_n` vertices with weights 1..=2,
/// built from random relations consistent with a random linear order.
pub fn random_poset<R: Rng>(rng: &mut R, max_n: usize) -> LabelledWeightedPoset {
    let n = rng.gen_range(2..=max_n.max(2));
    let mut order: Vec<usize> = (1..=n).collect();
    for k in (1..n).rev() {
        order.swap(k, rng.gen_range(0..=k));
    }
    let mut relations = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.3) {
                relations.push((order[a], order[b]));
            }
        }
    }
    let weights = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    LabelledWeightedPoset::from_relations(n, &relations, weights).expect("relations follow a linear order")
}

/// All checks with sizes capped at `max_degree`.
pub fn run_suite(max_degree: usize) -> Vec<CheckReport> {
    let d = max_degree;
    vec![
        golden_examples(),
        basis_round_trips(d.min(7)),
        eta_product_rule(d.min(7)),
        coproduct_checks(d.min(6), 20),
        antipode_checks(d.min(6), d.min(5)),
        ppartition_specialisations(d.min(5), 2, 5),
        shuffle_products(d.min(6), 4),
        universal_as_eta_sum(d.min(4), 3, 4),
        k_sign_convention(d.min(7)),
        sign_sum_lemma(5),
        product_ring_axioms(d.min(7), 40),
        hopf_structure(d.min(6)),
        split_recursion(50, d.min(6), 3),
    ]
}
