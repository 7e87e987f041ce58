//! Groebner bases and ideal operations.

pub mod groebner;
pub mod hilbert;
#[allow(clippy::module_inception)]
pub mod ideal;
pub mod primes;

pub use groebner::{groebner_basis, normal_form, DEFAULT_BUDGET};
pub use ideal::Ideal;
pub use primes::{certify_prime, gcd, minimal_primes, primary_component, primary_multiplicity, PrimeComponent};
