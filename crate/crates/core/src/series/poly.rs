//! Polynomials over the rationals in a fixed set of named markers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};

use super::{format_rational, Coeff, Rational};
use crate::error::CudError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Marker {
    /// cycles (or the statistic under study)
    T,
    /// fixed points
    X,
    /// odd cycles
    To,
    /// even cycles
    Te,
    /// up-down cycles
    V,
    /// cycles that are not up-down
    W,
}

impl Marker {
    pub const ALL: [Marker; 6] = [Marker::T, Marker::X, Marker::To, Marker::Te, Marker::V, Marker::W];

    pub fn name(self) -> &'static str {
        match self {
            Marker::T => "t",
            Marker::X => "x",
            Marker::To => "t_o",
            Marker::Te => "t_e",
            Marker::V => "v",
            Marker::W => "w",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Marker {
    type Err = CudError;

    fn from_str(s: &str) -> Result<Self, CudError> {
        Marker::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| CudError::UnknownName(s.to_string()))
    }
}

/// Exponent vector indexed by [`Marker`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u16; 6]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(m: Marker) -> Self {
        Self::default().with(m, 1)
    }

    pub fn with(mut self, m: Marker, e: u16) -> Self {
        self.0[m.index()] = e;
        self
    }

    pub fn exponent(&self, m: Marker) -> u16 {
        self.0[m.index()]
    }

    fn product(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a += b;
        }
        out
    }

    /// `t^2`, `x^0*t^3`: every listed marker with its exponent.
    pub fn render(&self, markers: &[Marker]) -> String {
        if markers.is_empty() {
            return "1".into();
        }
        markers
            .iter()
            .map(|&m| format!("{}^{}", m.name(), self.exponent(m)))
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(m: Marker) -> Self {
        Self::term(Monomial::var(m), Rational::one())
    }

    pub fn term(mono: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, c);
        p
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Substitutes `value` for marker `m`.
    pub fn eval(&self, m: Marker, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let e = mono.exponent(m);
            let factor = num_traits::pow(value.clone(), e as usize);
            out.add_term(mono.with(m, 0), c * factor);
        }
        out
    }

    /// Sum of all coefficients (every marker set to 1).
    pub fn total(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Renders as `{"t^1": 1, "t^2": 1}`-style key/value pairs.
    pub fn to_json(&self, markers: &[Marker]) -> serde_json::Value {
        let map = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let value = match c.to_integer().to_i64() {
                    Some(v) if c.is_integer() => serde_json::Value::from(v),
                    _ => serde_json::Value::String(format_rational(c)),
                };
                (mono.render(markers), value)
            })
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn render(&self, markers: &[Marker]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(mono, c)| format!("{}*{}", format_rational(c), mono.render(markers)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Terms in increasing exponent order, markers with exponent 0 omitted:
/// `1 + 2*t + t^2*x`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = Marker::ALL
                .iter()
                .filter(|&&m| mono.exponent(m) > 0)
                .map(|&m| match mono.exponent(m) {
                    1 => m.name().to_string(),
                    e => format!("{}^{e}", m.name()),
                })
                .collect();
            match (vars.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{}", format_rational(c))?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{}*{}", format_rational(c), vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Coeff for MPoly {
    fn ring_zero() -> Self {
        MPoly::zero()
    }

    fn ring_one() -> Self {
        MPoly::one()
    }

    fn is_ring_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_rational(r: Rational) -> Self {
        MPoly::constant(r)
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.product(mb), ca * cb);
            }
        }
        out
    }

    fn scaled(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect() }
    }

    fn inverse(&self) -> Option<Self> {
        self.as_constant()
            .filter(|c| !c.is_zero())
            .map(|c| MPoly::constant(c.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    #[test]
    fn arithmetic_and_eval() {
        let t = MPoly::var(Marker::T);
        let x = MPoly::var(Marker::X);
        let p = t.plus(&x).times(&t.minus(&x)); // t^2 - x^2
        assert_eq!(p.eval(Marker::T, &int(3)).eval(Marker::X, &int(2)).as_constant(), Some(int(5)));
        assert_eq!(p.total(), int(0));
        assert!(p.inverse().is_none());
        assert_eq!(MPoly::constant(int(4)).inverse(), Some(MPoly::constant(crate::series::rat(1, 4))));
    }

    #[test]
    fn rendering() {
        let t = MPoly::var(Marker::T);
        let p = t.plus(&t.times(&t));
        assert_eq!(p.to_json(&[Marker::T]).to_string(), r#"{"t^1":1,"t^2":1}"#);
        let mono = Monomial::one().with(Marker::T, 2);
        assert_eq!(mono.render(&[Marker::X, Marker::T]), "x^0*t^2");
        let x = MPoly::var(Marker::X);
        assert_eq!(p.times(&x).plus(&MPoly::constant(int(3))).to_string(), "3 + t*x + t^2*x");
    }
}
