//! The four families of periodic Mathieu solutions.
//!
//! | class      | functions    | characteristic values | Fourier basis               |
//! |------------|--------------|-----------------------|-----------------------------|
//! | even, π    | `ce_{2n}`    | `a_{2n}`              | `cos(2kθ)`, k ≥ 0           |
//! | even, 2π   | `ce_{2n+1}`  | `a_{2n+1}`            | `cos((2k+1)θ)`, k ≥ 0       |
//! | odd, 2π    | `se_{2n+1}`  | `b_{2n+1}`            | `sin((2k+1)θ)`, k ≥ 0       |
//! | odd, π     | `se_{2n+2}`  | `b_{2n+2}`            | `sin((2k+2)θ)`, k ≥ 0       |
//!
//! Throughout the crate `order` is the conventional Mathieu index `m` of
//! `a_m`/`b_m`, while `rank` is the 0-based position of that value within
//! its class's ascending spectrum.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Period {
    Pi,
    TwoPi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryClass {
    EvenPi,
    EvenTwoPi,
    OddTwoPi,
    OddPi,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 4] = [
        SymmetryClass::EvenPi,
        SymmetryClass::EvenTwoPi,
        SymmetryClass::OddTwoPi,
        SymmetryClass::OddPi,
    ];

    pub fn from_parts(parity: Parity, period: Period) -> Self {
        match (parity, period) {
            (Parity::Even, Period::Pi) => SymmetryClass::EvenPi,
            (Parity::Even, Period::TwoPi) => SymmetryClass::EvenTwoPi,
            (Parity::Odd, Period::TwoPi) => SymmetryClass::OddTwoPi,
            (Parity::Odd, Period::Pi) => SymmetryClass::OddPi,
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            SymmetryClass::EvenPi | SymmetryClass::EvenTwoPi => Parity::Even,
            SymmetryClass::OddTwoPi | SymmetryClass::OddPi => Parity::Odd,
        }
    }

    pub fn period(self) -> Period {
        match self {
            SymmetryClass::EvenPi | SymmetryClass::OddPi => Period::Pi,
            SymmetryClass::EvenTwoPi | SymmetryClass::OddTwoPi => Period::TwoPi,
        }
    }

    /// `'a'` for the even classes, `'b'` for the odd ones.
    pub fn letter(self) -> char {
        match self.parity() {
            Parity::Even => 'a',
            Parity::Odd => 'b',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SymmetryClass::EvenPi => "even-pi",
            SymmetryClass::EvenTwoPi => "even-2pi",
            SymmetryClass::OddTwoPi => "odd-2pi",
            SymmetryClass::OddPi => "odd-pi",
        }
    }

    /// Class holding `a_m` (`letter = 'a'`) or `b_m` (`letter = 'b'`).
    pub fn for_label(letter: char, order: u32) -> Result<Self> {
        let class = match (letter, order % 2) {
            ('a', 0) => SymmetryClass::EvenPi,
            ('a', _) => SymmetryClass::EvenTwoPi,
            ('b', 1) => SymmetryClass::OddTwoPi,
            ('b', _) if order > 0 => SymmetryClass::OddPi,
            ('b', _) => {
                return Err(Error::InvalidOrder {
                    class: SymmetryClass::OddPi,
                    order,
                })
            }
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "characteristic value letter must be 'a' or 'b', got {letter:?}"
                )))
            }
        };
        Ok(class)
    }

    /// Position of order `m` within this class's ascending spectrum.
    pub fn rank(self, order: u32) -> Result<usize> {
        let ok = match self {
            SymmetryClass::EvenPi => order.is_multiple_of(2),
            SymmetryClass::EvenTwoPi | SymmetryClass::OddTwoPi => order % 2 == 1,
            SymmetryClass::OddPi => order.is_multiple_of(2) && order >= 2,
        };
        if !ok {
            return Err(Error::InvalidOrder { class: self, order });
        }
        Ok(match self {
            SymmetryClass::EvenPi => order / 2,
            SymmetryClass::EvenTwoPi | SymmetryClass::OddTwoPi => (order - 1) / 2,
            SymmetryClass::OddPi => (order - 2) / 2,
        } as usize)
    }

    pub fn order_of_rank(self, rank: usize) -> u32 {
        let r = rank as u32;
        match self {
            SymmetryClass::EvenPi => 2 * r,
            SymmetryClass::EvenTwoPi | SymmetryClass::OddTwoPi => 2 * r + 1,
            SymmetryClass::OddPi => 2 * r + 2,
        }
    }

    /// Orders `m ≤ max_order` that belong to this class, ascending.
    pub fn orders_up_to(self, max_order: u32) -> impl Iterator<Item = u32> {
        (0..)
            .map(move |r| self.order_of_rank(r))
            .take_while(move |&m| m <= max_order)
    }

    /// Angular wavenumber of the `index`-th basis function.
    pub fn wavenumber(self, index: usize) -> u32 {
        self.order_of_rank(index)
    }

    pub fn label(self, order: u32) -> String {
        format!("{}{}", self.letter(), order)
    }

    /// Parses a sugar label such as `a0` or `b5` into `(class, order)`.
    pub fn parse_label(label: &str) -> Result<(SymmetryClass, u32)> {
        let mut chars = label.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty label".into()))?;
        let order: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("malformed label {label:?}")))?;
        let class = SymmetryClass::for_label(letter, order)?;
        Ok((class, order))
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SymmetryClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown symmetry class {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_mapping() {
        assert_eq!(SymmetryClass::for_label('a', 0).unwrap(), SymmetryClass::EvenPi);
        assert_eq!(SymmetryClass::for_label('a', 3).unwrap(), SymmetryClass::EvenTwoPi);
        assert_eq!(SymmetryClass::for_label('b', 1).unwrap(), SymmetryClass::OddTwoPi);
        assert_eq!(SymmetryClass::for_label('b', 4).unwrap(), SymmetryClass::OddPi);
        assert!(SymmetryClass::for_label('b', 0).is_err());
        assert!(SymmetryClass::for_label('c', 1).is_err());
    }

    #[test]
    fn odd_classes_have_no_order_zero() {
        for class in [SymmetryClass::OddTwoPi, SymmetryClass::OddPi] {
            assert!(matches!(class.rank(0), Err(Error::InvalidOrder { .. })));
        }
        assert_eq!(SymmetryClass::EvenPi.rank(0).unwrap(), 0);
    }

    #[test]
    fn rank_round_trip() {
        for class in SymmetryClass::ALL {
            for r in 0..20 {
                assert_eq!(class.rank(class.order_of_rank(r)).unwrap(), r);
            }
        }
        assert!(SymmetryClass::EvenPi.rank(1).is_err());
        assert!(SymmetryClass::EvenTwoPi.rank(2).is_err());
    }

    #[test]
    fn parts_round_trip() {
        for class in SymmetryClass::ALL {
            assert_eq!(SymmetryClass::from_parts(class.parity(), class.period()), class);
            assert_eq!(class.name().parse::<SymmetryClass>().unwrap(), class);
        }
    }

    #[test]
    fn parse_labels() {
        assert_eq!(
            SymmetryClass::parse_label("b5").unwrap(),
            (SymmetryClass::OddTwoPi, 5)
        );
        assert_eq!(SymmetryClass::parse_label("a12").unwrap(), (SymmetryClass::EvenPi, 12));
        assert!(SymmetryClass::parse_label("b0").is_err());
        assert!(SymmetryClass::parse_label("a").is_err());
        assert!(SymmetryClass::parse_label("").is_err());
    }

    #[test]
    fn orders_up_to_lists_members() {
        let v: Vec<u32> = SymmetryClass::OddPi.orders_up_to(8).collect();
        assert_eq!(v, vec![2, 4, 6, 8]);
        let v: Vec<u32> = SymmetryClass::EvenPi.orders_up_to(0).collect();
        assert_eq!(v, vec![0]);
    }
}
