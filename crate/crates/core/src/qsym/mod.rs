//! Sparse exact elements of QSym in the bases M, L, K and η, with change of
//! basis, products, coproducts and antipodes.

mod convert;
mod element;
mod hopf;
mod product;

pub use convert::{
    basis_convert, eta_to_k, eta_to_l, eta_to_m, k_of_permutation, k_to_eta, k_to_m,
    l_of_permutation, l_to_m, lemma_sign_sum, m_to_eta, m_to_l,
};
pub use element::{Basis, QSymElement, TensorElement};
pub use hopf::{
    antipode, antipode_convolution, antipode_eta, antipode_l, antipode_m, coproduct,
    deconcatenate,
};
pub use product::{pattern_peak_indices, product, product_eta, product_m, quasi_shuffle};

