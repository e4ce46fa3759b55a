//! Named exponential generating functions for the families and statistics
//! handled by the crate.
//!
//! Each entry is built from `sin`, `cos` and the series primitives; marked
//! entries carry polynomial coefficients in the markers they list.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{int, rat, Coeff, MPoly, Marker, Rational, Series};
use crate::error::{CudError, Result};

pub const DEFAULT_ORDER_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    Euler,
    Cud,
    CudCyclic,
    CudEvenOnly,
    CudOddOnly,
    ExcDefSwap,
    GcudOddOnly,
    KEulerOdd,
    GcudEvenCyclic,
    GcudEvenOnly,
    Gcud,
    CudDerangements,
    CudFpCycles,
    CudCycles,
    CudOddEven,
    UdSt,
    UdLrm,
    UdExtr,
    GcudFpCycles,
    PermUdNud,
    AvgUdCycles,
    NoUdCycles,
}

impl SequenceId {
    pub const ALL: [SequenceId; 22] = [
        SequenceId::Euler,
        SequenceId::Cud,
        SequenceId::CudCyclic,
        SequenceId::CudEvenOnly,
        SequenceId::CudOddOnly,
        SequenceId::ExcDefSwap,
        SequenceId::GcudOddOnly,
        SequenceId::KEulerOdd,
        SequenceId::GcudEvenCyclic,
        SequenceId::GcudEvenOnly,
        SequenceId::Gcud,
        SequenceId::CudDerangements,
        SequenceId::CudFpCycles,
        SequenceId::CudCycles,
        SequenceId::CudOddEven,
        SequenceId::UdSt,
        SequenceId::UdLrm,
        SequenceId::UdExtr,
        SequenceId::GcudFpCycles,
        SequenceId::PermUdNud,
        SequenceId::AvgUdCycles,
        SequenceId::NoUdCycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::Euler => "euler",
            SequenceId::Cud => "cud",
            SequenceId::CudCyclic => "cud-cyclic",
            SequenceId::CudEvenOnly => "cud-even-only",
            SequenceId::CudOddOnly => "cud-odd-only",
            SequenceId::ExcDefSwap => "exc-def-swap",
            SequenceId::GcudOddOnly => "gcud-odd-only",
            SequenceId::KEulerOdd => "k-euler-odd",
            SequenceId::GcudEvenCyclic => "gcud-even-cyclic",
            SequenceId::GcudEvenOnly => "gcud-even-only",
            SequenceId::Gcud => "gcud",
            SequenceId::CudDerangements => "cud-derangements",
            SequenceId::CudFpCycles => "cud-fp-cycles",
            SequenceId::CudCycles => "cud-cycles",
            SequenceId::CudOddEven => "cud-odd-even",
            SequenceId::UdSt => "ud-st",
            SequenceId::UdLrm => "ud-lrm",
            SequenceId::UdExtr => "ud-extr",
            SequenceId::GcudFpCycles => "gcud-fp-cycles",
            SequenceId::PermUdNud => "perm-ud-nud",
            SequenceId::AvgUdCycles => "avg-ud-cycles",
            SequenceId::NoUdCycles => "no-ud-cycles",
        }
    }

    /// Closed form, for listings.
    pub fn formula(self) -> &'static str {
        match self {
            SequenceId::Euler => "sec z + tan z",
            SequenceId::Cud => "1/(1 - sin z)",
            SequenceId::CudCyclic => "∫ (sec u + tan u) du",
            SequenceId::CudEvenOnly => "sec z",
            SequenceId::CudOddOnly => "sec z + tan z",
            SequenceId::ExcDefSwap => "e^z sec z (A003701)",
            SequenceId::GcudOddOnly => "exp(tan z) (A006229)",
            SequenceId::KEulerOdd => "(z/2) tan z, terms k E_{2k-1} (A024255)",
            SequenceId::GcudEvenCyclic => "sec z - 1 - (z/2) tan z - ln(cos z)",
            SequenceId::GcudEvenOnly => "sec z exp(sec z - 1 - (z/2) tan z)",
            SequenceId::Gcud => "sec z exp(sec z - 1 + (1 - z/2) tan z)",
            SequenceId::CudDerangements => "e^{-z}/(1 - sin z)",
            SequenceId::CudFpCycles => "e^{(x-1)tz}/(1 - sin z)^t",
            SequenceId::CudCycles => "(1 - sin z)^{-t}",
            SequenceId::CudOddEven => "(sec z + tan z)^{t_o} (sec z)^{t_e}",
            SequenceId::UdSt => "(sec z + tan z)^t",
            SequenceId::UdLrm => "t ∫ (sec u)^{t+1} du + (sec z)^t - 1",
            SequenceId::UdExtr => "∫ (1 - sin u)^{-t} du",
            SequenceId::GcudFpCycles => {
                "sec^t z exp[t((x-1)z + sec z - 1 + (1 - z/2) tan z)]"
            }
            SequenceId::PermUdNud => "(1 - z)^{-w} (1 - sin z)^{-(v-w)}",
            SequenceId::AvgUdCycles => "-ln(1 - sin z)/(1 - z)",
            SequenceId::NoUdCycles => "(1 - sin z)/(1 - z)",
        }
    }

    /// Markers carried by the coefficients; empty for plain entries.
    pub fn markers(self) -> &'static [Marker] {
        match self {
            SequenceId::CudFpCycles | SequenceId::GcudFpCycles => &[Marker::X, Marker::T],
            SequenceId::CudCycles | SequenceId::UdSt | SequenceId::UdLrm | SequenceId::UdExtr => {
                &[Marker::T]
            }
            SequenceId::CudOddEven => &[Marker::To, Marker::Te],
            SequenceId::PermUdNud => &[Marker::V, Marker::W],
            _ => &[],
        }
    }

    /// First index in the conventional listing: 0 for the Euler numbers,
    /// 1 for the families, whose size-0 term is the empty permutation.
    pub fn first_index(self) -> usize {
        match self {
            SequenceId::Euler => 0,
            _ => 1,
        }
    }

    pub fn is_marked(self) -> bool {
        !self.markers().is_empty()
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = CudError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == norm)
            .ok_or_else(|| CudError::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CatalogSeries {
    Plain(Series<Rational>),
    Marked { markers: Vec<Marker>, series: Series<MPoly> },
}

impl CatalogSeries {
    pub fn order(&self) -> usize {
        match self {
            CatalogSeries::Plain(s) => s.order(),
            CatalogSeries::Marked { series, .. } => series.order(),
        }
    }

    pub fn plain(&self) -> Option<&Series<Rational>> {
        match self {
            CatalogSeries::Plain(s) => Some(s),
            CatalogSeries::Marked { .. } => None,
        }
    }

    pub fn marked(&self) -> Option<&Series<MPoly>> {
        match self {
            CatalogSeries::Plain(_) => None,
            CatalogSeries::Marked { series, .. } => Some(series),
        }
    }

    /// EGF terms as polynomials (constants for plain entries).
    pub fn egf_polys(&self) -> Vec<MPoly> {
        match self {
            CatalogSeries::Plain(s) => s.egf_terms().into_iter().map(MPoly::constant).collect(),
            CatalogSeries::Marked { series, .. } => series.egf_terms(),
        }
    }

    /// Integer EGF terms of a plain entry.
    pub fn integer_terms(&self) -> Option<Vec<BigInt>> {
        self.plain()?.integer_egf_terms()
    }
}

/// Elementary series at a common order.
struct Basis {
    order: usize,
    sin: Series<Rational>,
    sec: Series<Rational>,
    tan: Series<Rational>,
}

impl Basis {
    fn new(order: usize) -> Self {
        Self {
            order,
            sin: Series::sin(order),
            sec: Series::sec(order),
            tan: Series::tan(order),
        }
    }

    fn one(&self) -> Series<Rational> {
        Series::one(self.order)
    }

    fn z(&self) -> Series<Rational> {
        Series::variable(self.order)
    }

    fn euler(&self) -> Series<Rational> {
        &self.sec + &self.tan
    }

    fn one_minus_sin(&self) -> Series<Rational> {
        &self.one() - &self.sin
    }

    /// `∫ f`, kept at the basis order.
    fn integral(&self, f: &Series<Rational>) -> Series<Rational> {
        f.integrate().truncate(self.order)
    }

    /// `sec z - 1 + (a - z/2) tan z`: the exponent shared by the GCUD entries.
    fn gcud_exponent(&self, a: i64) -> Series<Rational> {
        let half_z = self.z().scale_rational(&rat(1, 2));
        let factor = &Series::constant(int(a), self.order) - &half_z;
        &(&self.sec - &self.one()) + &(&factor * &self.tan)
    }
}

fn var(m: Marker) -> MPoly {
    MPoly::var(m)
}

pub fn catalog(id: SequenceId, n_max: usize) -> Result<CatalogSeries> {
    catalog_with_cap(id, n_max, DEFAULT_ORDER_CAP)
}

pub fn catalog_with_cap(id: SequenceId, n_max: usize, cap: usize) -> Result<CatalogSeries> {
    if n_max > cap {
        return Err(CudError::CapExceeded { what: format!("series `{id}`"), n: n_max, cap });
    }
    let b = Basis::new(n_max);
    let t = var(Marker::T);
    let plain = |s: Series<Rational>| Ok(CatalogSeries::Plain(s));
    let marked = |s: Series<MPoly>| {
        Ok(CatalogSeries::Marked { markers: id.markers().to_vec(), series: s })
    };
    let expect = "constant terms are fixed by construction";
    match id {
        SequenceId::Euler | SequenceId::CudOddOnly => plain(b.euler()),
        SequenceId::Cud => plain(b.one_minus_sin().reciprocal()?),
        SequenceId::CudCyclic => plain(b.integral(&b.euler())),
        SequenceId::CudEvenOnly => plain(b.sec.clone()),
        SequenceId::ExcDefSwap => plain(&Series::exp_linear(&int(1), n_max) * &b.sec),
        SequenceId::GcudOddOnly => plain(b.tan.exp()?),
        SequenceId::KEulerOdd => plain(&b.z().scale_rational(&rat(1, 2)) * &b.tan),
        SequenceId::GcudEvenCyclic => {
            let half_z_tan = &b.z().scale_rational(&rat(1, 2)) * &b.tan;
            let log_cos = Series::cos(n_max).log().expect(expect);
            plain(&(&(&b.sec - &b.one()) - &half_z_tan) - &log_cos)
        }
        SequenceId::GcudEvenOnly => plain(&b.sec * &b.gcud_exponent(0).exp()?),
        SequenceId::Gcud => plain(&b.sec * &b.gcud_exponent(1).exp()?),
        SequenceId::CudDerangements => {
            plain(Series::exp_linear(&int(-1), n_max).checked_div(&b.one_minus_sin())?)
        }
        SequenceId::CudFpCycles => {
            // e^{(x-1) t z} (1 - sin z)^{-t}
            let coef = var(Marker::X).minus(&MPoly::one()).times(&t);
            let linear = b.z().lift().scale(&coef).exp()?;
            let power = b.one_minus_sin().lift().pow(&t.negated())?;
            marked(&linear * &power)
        }
        SequenceId::CudCycles => marked(b.one_minus_sin().lift().pow(&t.negated())?),
        SequenceId::CudOddEven => {
            let odd = b.euler().lift().pow(&var(Marker::To))?;
            let even = b.sec.lift().pow(&var(Marker::Te))?;
            marked(&odd * &even)
        }
        SequenceId::UdSt => marked(b.euler().lift().pow(&t)?),
        SequenceId::UdLrm => {
            let sec = b.sec.lift();
            let integral = sec.pow(&t.plus(&MPoly::one()))?.integrate().truncate(n_max).scale(&t);
            let power = sec.pow(&t)?;
            marked(&(&integral + &power) - &Series::one(n_max))
        }
        SequenceId::UdExtr => {
            let power = b.one_minus_sin().lift().pow(&t.negated())?;
            marked(power.integrate().truncate(n_max))
        }
        SequenceId::GcudFpCycles => {
            let x_minus_one = var(Marker::X).minus(&MPoly::one());
            let exponent = &b.z().lift().scale(&x_minus_one) + &b.gcud_exponent(1).lift();
            let sec_t = b.sec.lift().pow(&t)?;
            marked(&sec_t * &exponent.scale(&t).exp()?)
        }
        SequenceId::PermUdNud => {
            let v = var(Marker::V);
            let w = var(Marker::W);
            let one_minus_z = (&b.one() - &b.z()).lift();
            let left = one_minus_z.pow(&w.negated())?;
            let right = b.one_minus_sin().lift().pow(&w.minus(&v))?;
            marked(&left * &right)
        }
        SequenceId::AvgUdCycles => {
            let log = b.one_minus_sin().log().expect(expect);
            plain(&(-&log) * &Series::geometric(n_max))
        }
        SequenceId::NoUdCycles => plain(&b.one_minus_sin() * &Series::geometric(n_max)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(id: SequenceId, n: usize) -> Vec<i64> {
        catalog(id, n)
            .unwrap()
            .integer_terms()
            .unwrap()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect()
    }

    #[test]
    fn gcud_terms() {
        assert_eq!(
            terms(SequenceId::Gcud, 9)[1..],
            [1, 2, 6, 21, 97, 491, 2989, 19756, 148444]
        );
        assert_eq!(terms(SequenceId::GcudEvenOnly, 9)[1..], [0, 1, 0, 6, 0, 89, 0, 2431, 0]);
        assert_eq!(terms(SequenceId::GcudEvenCyclic, 9)[1..], [0, 1, 0, 3, 0, 29, 0, 569, 0]);
    }

    #[test]
    fn derangement_terms() {
        assert_eq!(
            terms(SequenceId::CudDerangements, 9)[1..],
            [0, 1, 1, 5, 15, 71, 341, 1945, 12135]
        );
    }

    #[test]
    fn cud_is_shifted_euler() {
        let cud = terms(SequenceId::Cud, 8);
        assert_eq!(cud[3], 5);
        let euler = terms(SequenceId::Euler, 9);
        assert_eq!(cud[..], euler[1..]);
    }

    #[test]
    fn names_parse_back() {
        for id in SequenceId::ALL {
            assert_eq!(id.name().parse::<SequenceId>().unwrap(), id);
            assert_eq!(catalog(id, 3).unwrap().order(), 3);
        }
        assert!("gcud2".parse::<SequenceId>().is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            catalog(SequenceId::Euler, DEFAULT_ORDER_CAP + 1),
            Err(CudError::CapExceeded { .. })
        ));
        assert!(catalog_with_cap(SequenceId::Euler, 30, 30).is_ok());
    }

    #[test]
    fn order_zero_entries() {
        for id in SequenceId::ALL {
            let s = catalog(id, 0).unwrap();
            assert_eq!(s.order(), 0);
        }
    }
}
