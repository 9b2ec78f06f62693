//! Shared fixtures for the benchmark suite.

use shirshov::{Polynomial, Presentation};

pub const JACOBSON: &str = "\
generators: a b c
order: deglex a < b < c
relations:
  (1 - a*b)*c = 1
  c*(1 - a*b) = 1
";

pub fn jacobson() -> Presentation {
    Presentation::parse(JACOBSON).expect("fixture parses")
}

pub fn aba() -> Presentation {
    Presentation::parse("generators: a b\nrelations:\n  a*b*a = 1\n").expect("fixture parses")
}

/// `(1 + a + b + c)^n`: a dense reduction workload with `4^n`-ish terms.
pub fn dense_poly(pres: &Presentation, n: usize) -> Polynomial {
    let base = pres
        .parse_polynomial("1 + a + b + c")
        .expect("fixture parses");
    let mut acc = Polynomial::one();
    for _ in 0..n {
        acc = &acc * &base;
    }
    acc
}
