//! Special functions: gamma, Bessel J of real order, Bessel zeros, and the
//! Lommel function that closes the moment formulas.

mod bessel;
#[cfg(test)]
mod bessel_grid;
mod gamma;
mod lommel;
mod zeros;

pub use bessel::bessel_j;
pub use gamma::{gamma, ln_gamma, rgamma};
pub use lommel::{lommel_s, LommelEval};
pub use zeros::bessel_zero;
