use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// `f^f e^e ω^{w2/2} ω'^{wp2/2}` in PBW order. Cartan exponents are stored
/// doubled so half powers are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PbwMonomial {
    pub f: u32,
    pub e: u32,
    pub w2: i32,
    pub wp2: i32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial {
        f: 0,
        e: 0,
        w2: 0,
        wp2: 0,
    };

    pub fn new(f: u32, e: u32, w2: i32, wp2: i32) -> Self {
        PbwMonomial { f, e, w2, wp2 }
    }

    pub fn cartan(w2: i32, wp2: i32) -> Self {
        Self::new(0, 0, w2, wp2)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn is_cartan(&self) -> bool {
        self.f == 0 && self.e == 0
    }

    pub fn parity(&self) -> u32 {
        (self.f + self.e) % 2
    }

    pub fn has_half_exponent(&self) -> bool {
        self.w2 % 2 != 0 || self.wp2 % 2 != 0
    }

    /// Key of the monomial order: lexicographic on `(f, w2, wp2, e)`.
    fn key(&self) -> (u32, i32, i32, u32) {
        (self.f, self.w2, self.wp2, self.e)
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn cartan_power(out: &mut Vec<String>, name: &str, doubled: i32) {
    match doubled {
        0 => {}
        2 => out.push(name.to_string()),
        d if d % 2 == 0 => out.push(format!("{name}^{}", d / 2)),
        d => out.push(format!("{name}^({d}/2)")),
    }
}

/// Parser-compatible text, `1` for the identity.
impl fmt::Display for PbwMonomial {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, k) in [("f", self.f), ("e", self.e)] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                k => parts.push(format!("{name}^{k}")),
            }
        }
        cartan_power(&mut parts, "w", self.w2);
        cartan_power(&mut parts, "wp", self.wp2);
        if parts.is_empty() {
            fm.write_str("1")
        } else {
            fm.write_str(&parts.join("*"))
        }
    }
}

/// Z2-degree of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    pub fn bit(self) -> Option<u32> {
        match self {
            Parity::Even => Some(0),
            Parity::Odd => Some(1),
            Parity::Mixed => None,
        }
    }
}

/// Named generators and their half powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    W,
    WInv,
    Wp,
    WpInv,
    WHalf,
    WpHalf,
    One,
}

impl Generator {
    pub fn monomial(self) -> PbwMonomial {
        match self {
            Generator::E => PbwMonomial::new(0, 1, 0, 0),
            Generator::F => PbwMonomial::new(1, 0, 0, 0),
            Generator::W => PbwMonomial::cartan(2, 0),
            Generator::WInv => PbwMonomial::cartan(-2, 0),
            Generator::Wp => PbwMonomial::cartan(0, 2),
            Generator::WpInv => PbwMonomial::cartan(0, -2),
            Generator::WHalf => PbwMonomial::cartan(1, 0),
            Generator::WpHalf => PbwMonomial::cartan(0, 1),
            Generator::One => PbwMonomial::ONE,
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "e" => Generator::E,
            "f" => Generator::F,
            "w" => Generator::W,
            "wInv" => Generator::WInv,
            "wp" => Generator::Wp,
            "wpInv" => Generator::WpInv,
            "wHalf" => Generator::WHalf,
            "wpHalf" => Generator::WpHalf,
            "one" => Generator::One,
            other => {
                return Err(Error::UnknownIdentifier {
                    name: other.to_string(),
                    line: 1,
                    column: 1,
                })
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_prefers_f_then_cartan_then_e() {
        let fe = PbwMonomial::new(1, 1, 0, 0);
        let e2 = PbwMonomial::new(0, 2, 0, 0);
        assert!(fe > e2);
        let fwe = PbwMonomial::new(1, 1, 2, 0);
        let fwp = PbwMonomial::new(1, 0, 0, 2);
        assert!(fwe > fwp);
        let w = PbwMonomial::cartan(2, 0);
        let e = PbwMonomial::new(0, 1, 0, 0);
        assert!(w > e);
    }

    #[test]
    fn display() {
        assert_eq!(PbwMonomial::ONE.to_string(), "1");
        assert_eq!(PbwMonomial::new(2, 1, 1, -2).to_string(), "f^2*e*w^(1/2)*wp^-1");
        assert_eq!(PbwMonomial::new(0, 0, -3, 4).to_string(), "w^(-3/2)*wp^2");
    }

    #[test]
    fn generators() {
        assert_eq!("wHalf".parse::<Generator>().unwrap().monomial(), PbwMonomial::cartan(1, 0));
        assert_eq!(Generator::E.monomial().parity(), 1);
        assert!("x".parse::<Generator>().is_err());
    }
}
