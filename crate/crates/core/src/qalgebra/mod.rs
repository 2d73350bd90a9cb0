//! Exact algebra of `q`-integers, `q`-factorials and `q`-hyperfactorials.
//!
//! [`QPoly`] is the expanded form every generating function ends up in;
//! [`QProduct`] is the factored form closed formulas are built in.

mod cyclotomic;
mod poly;
mod product;

pub use cyclotomic::{cyclotomic, divisors, euler_phi, mobius, prime_power_base};
pub use poly::{q_integer, QPoly};
pub use product::{
    hyperfactorial, q_factorial, q_hyperfactorial, q_integer_product, QProduct,
};
