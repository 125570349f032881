//! Checks tying the Apéry numbers to a modular form, and a truncated
//! Ramanujan-type series to the p-adic gamma function.

mod eta;
mod padic_gamma;
mod van_hamme;

pub use eta::{beukers_check, eta_q_expansion, BeukersCheck, QExpansion};
pub use padic_gamma::{padic_gamma, PadicGammaValue};
pub use van_hamme::{
    van_hamme_check, van_hamme_sum, VanHammeBranch, VanHammeCheck, VAN_HAMME_PRECISION,
};
