use std::fmt;

use crate::algebra::AlgebraElement;
use num_traits::Zero;

use crate::ring::{Rational, Ring};
use crate::scalars::{CycloNumber, Scalar};

/// Coefficient text that can stand as a factor in a product.
pub trait CoeffText: Ring {
    fn coeff_text(&self) -> String;
}

impl CoeffText for Scalar {
    fn coeff_text(&self) -> String {
        self.render()
    }
}

impl CoeffText for Rational {
    fn coeff_text(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl CoeffText for CycloNumber {
    fn coeff_text(&self) -> String {
        let text = self.to_string();
        if self.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({text})")
        } else {
            text
        }
    }
}

/// Canonical text: terms in descending monomial order, signs pulled out,
/// unit coefficients omitted. `0` for the zero element.
pub fn render<K: CoeffText>(x: &AlgebraElement<K>) -> String {
    let mut out = String::new();
    for (m, c) in x.iter() {
        let neg = c.looks_negative();
        let a = if neg { -c.clone() } else { c.clone() };
        let body = if m.is_one() {
            a.coeff_text()
        } else if a.is_one() {
            m.to_string()
        } else {
            format!("{}*{m}", a.coeff_text())
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push_str("- "),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<K: CoeffText> fmt::Display for AlgebraElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
