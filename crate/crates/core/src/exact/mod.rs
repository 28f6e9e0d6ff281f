//! Exact arithmetic: rationals, binomials, harmonic families and the
//! symbolic constant ring.

mod combinat;
mod harmonic;
mod param;
mod rational;
mod sym;

pub use combinat::{binom_gen, binom_nat, binom_rat, catalan, central_binomial, pow2, pow4};
pub use harmonic::{
    harmonic, harmonic2, harmonic2_exact, harmonic_exact, odd_harmonic, odd_harmonic2,
};
pub use param::ExactParam;
pub use rational::Rational;
pub use sym::{Basis, SymValue, LN2, PI_SQUARED};
