use std::f64::consts::PI;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use super::roots::find_root;
use crate::polylog::{li2, ZETA2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    /// Printed in the source text; the reference value carries its decimals.
    #[serde(rename = "PAPER")]
    Printed,
    /// Computed here from the defining equation only.
    Derived,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Printed => "PAPER",
            Provenance::Derived => "DERIVED",
        })
    }
}

pub type Defining = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A constant fixed by an equation `defining(x) = 0` with a sign change on `bracket`.
#[derive(Clone, Serialize)]
pub struct NamedConstant {
    pub id: &'static str,
    pub defining_equation: &'static str,
    pub bracket: (f64, f64),
    pub reference_value: Option<f64>,
    pub provenance: Provenance,
    pub value: f64,
    #[serde(skip)]
    pub defining: Defining,
}

impl fmt::Debug for NamedConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NamedConstant")
            .field("id", &self.id)
            .field("defining_equation", &self.defining_equation)
            .field("bracket", &self.bracket)
            .field("reference_value", &self.reference_value)
            .field("provenance", &self.provenance)
            .field("value", &self.value)
            .finish()
    }
}

impl NamedConstant {
    pub fn residual(&self) -> f64 {
        (self.defining)(self.value)
    }
}

fn l2(x: f64) -> f64 {
    li2(x).expect("argument kept at or below 1 by the bracket")
}

struct Row {
    id: &'static str,
    eq: &'static str,
    printed: Option<f64>,
    provenance: Provenance,
    domain: (f64, f64),
    f: Defining,
}

fn row(
    id: &'static str,
    eq: &'static str,
    printed: Option<f64>,
    domain: (f64, f64),
    f: impl Fn(f64) -> f64 + Send + Sync + 'static,
) -> Row {
    let provenance = if printed.is_some() { Provenance::Printed } else { Provenance::Derived };
    Row { id, eq, printed, provenance, domain, f: Arc::new(f) }
}

impl Row {
    fn printed(mut self) -> Self {
        self.provenance = Provenance::Printed;
        self
    }

    fn solve(self) -> NamedConstant {
        let bracket = match self.printed {
            Some(p) => ((p - 0.5).max(self.domain.0), (p + 0.5).min(self.domain.1)),
            None => self.domain,
        };
        let value = find_root(&*self.f, bracket.0, bracket.1, 1e-15)
            .unwrap_or_else(|e| panic!("constant {} failed to solve: {e}", self.id));
        NamedConstant {
            id: self.id,
            defining_equation: self.eq,
            bracket,
            reference_value: self.printed,
            provenance: self.provenance,
            value,
            defining: self.f,
        }
    }
}

fn inverse_pair(n: f64) -> impl Fn(f64) -> f64 + Send + Sync {
    move |a: f64| {
        let l = a.ln();
        l2(-a) + (2.0 * n - 1.0) / (n + 1.0) * ZETA2 + 0.5 * n / (n + 1.0) * l * l
    }
}

fn build() -> Vec<NamedConstant> {
    let s2 = 2f64.sqrt();
    let lnphi = ((1.0 + 5f64.sqrt()) / 2.0).ln();
    let open = 1.0 + 1e-12;
    let mut rows = vec![
        row("phi", "x^2 - x - 1 = 0", Some(1.618034), (1.0, 2.0), |x| x * x - x - 1.0),
        row("plastic", "x^3 - x - 1 = 0", Some(1.324718), (1.0, 2.0), |x| x * x * x - x - 1.0),
        row("supergolden", "x^3 - x^2 - 1 = 0", Some(1.465571), (1.0, 2.0), |x| {
            x * x * x - x * x - 1.0
        }),
        row("theta1", "x^4 - x^3 - 1 = 0", None, (1.0, 2.0), |x| x.powi(4) - x.powi(3) - 1.0),
        row("a4", "x^4 - x - 1 = 0", Some(1.220744), (1.0, 2.0), |x| x.powi(4) - x - 1.0),
        row("tribonacci", "x^3 - x^2 - x - 1 = 0", None, (1.5, 2.0), |x| {
            x * x * x - x * x - x - 1.0
        }),
        row("addinacci4", "x^5 - 2x^4 - 1 = 0", None, (2.0, 3.0), |x| {
            x.powi(5) - 2.0 * x.powi(4) - 1.0
        }),
        row("infinacci", "x - 2 = 0 (N -> infinity limit of x^(N+1) - 2x^N -+ 1 = 0)", Some(2.0), (1.5, 2.5), |x| {
            x - 2.0
        }),
        row("k0", "x^(sqrt2+1) - x^sqrt2 - 1 = 0", Some(1.542007), (1.0, 2.0), move |x| {
            x.powf(s2 + 1.0) - x.powf(s2) - 1.0
        }),
        row("delta_s", "e^x - 1 - sqrt2 = 0", None, (0.5, 1.5), move |x| x.exp() - 1.0 - s2),
        row("x_s", "x - 1 - sqrt(1 + x^(-x)) = 0", Some(2.100211), (1.0, 3.0), |x| {
            x - 1.0 - (1.0 + x.powf(-x)).sqrt()
        }),
        row("a_c", "pi^2/6 - Li2(-a) - 3 ln^2(1 + sqrt(1 + a)) = 0", Some(2.582815), (-1.0, 1e6), |a| {
            let x0 = (1.0 + (1.0 + a).sqrt()).ln();
            ZETA2 - l2(-a) - 3.0 * x0 * x0
        }),
        row("lambda", "x exp(sqrt(1 + x^2)) / (1 + sqrt(1 + x^2)) - 1 = 0", Some(0.662743), (0.0, 2.0), |x| {
            let r = (1.0 + x * x).sqrt();
            x * r.exp() / (1.0 + r) - 1.0
        }),
        row("c_cfp", "coth(x) - x = 0", Some(1.199678), (0.5, 2.0), |x| 1.0 / x.tanh() - x),
        row("theta_m", "tan^2(x) - 2 = 0", None, (0.5, 1.5), |x| x.tan().powi(2) - 2.0).printed(),
        row("median_log_a", "Li2(1/a) + Li2(-a)/2 = 0", Some(1.798533), (1.0, 10.0), |a| {
            l2(1.0 / a) + 0.5 * l2(-a)
        }),
        row("median_square", "Li2(1/m^2) - Li2(-1/m^2) - ln^2(m) = 0", Some(2.019283), (open, 10.0), |m| {
            let l = m.ln();
            l2(1.0 / (m * m)) - l2(-1.0 / (m * m)) - l * l
        }),
        row(
            "median_cube",
            "4Li2(1/m) - 4Li2(1/m^2) + 2Li2(1/m^3) + 2Li2(1/m^4) - Li2(1/m^6) - ln^2(m) = 0",
            Some(2.905862),
            (open, 10.0),
            |m| {
                let l = m.ln();
                4.0 * l2(1.0 / m) - 4.0 * l2(m.powi(-2)) + 2.0 * l2(m.powi(-3)) + 2.0 * l2(m.powi(-4))
                    - l2(m.powi(-6))
                    - l * l
            },
        ),
        row("inverse_pair_n2", "Li2(-a) + (3/3) pi^2/6 + (2/3) ln^2(a)/2 = 0", Some(3.531384), (open, 1e6), inverse_pair(2.0)),
        row("inverse_pair_n3", "Li2(-a) + (5/4) pi^2/6 + (3/4) ln^2(a)/2 = 0", Some(7.900377), (open, 1e6), inverse_pair(3.0)),
        row("inverse_pair_n4", "Li2(-a) + (7/5) pi^2/6 + (4/5) ln^2(a)/2 = 0", Some(14.759176), (open, 1e6), inverse_pair(4.0)),
        row("inverse_pair_n5", "Li2(-a) + (9/6) pi^2/6 + (5/6) ln^2(a)/2 = 0", Some(24.941163), (open, 1e6), inverse_pair(5.0)),
        row("inverse_pair_n6", "Li2(-a) + (11/7) pi^2/6 + (6/7) ln^2(a)/2 = 0", Some(39.482044), (open, 1e6), inverse_pair(6.0)),
        row("inverse_pair_n7", "Li2(-a) + (13/8) pi^2/6 + (7/8) ln^2(a)/2 = 0", Some(59.654746), (open, 1e6), inverse_pair(7.0)),
        row("n_phi", "n - 22 pi^2 / (7 pi^2 - 15 ln^2(phi)) + 2 = 0", Some(1.309234), (0.0, 10.0), move |n| {
            n - 22.0 * PI * PI / (7.0 * PI * PI - 15.0 * lnphi * lnphi) + 2.0
        }),
        row("no_pi2_arg", "Li2(-a) + pi^2/6 = 0", Some(2.393308), (open, 1e6), |a| l2(-a) + ZETA2),
        row(
            "p_median",
            "Li2(1/p) - pi^2/4 + ln^2(sqrt(p - 1)) + ln(p) ln(sqrt(p)/(p - 1)) = 0",
            Some(1.141080),
            (open, 1e6),
            |p| {
                let h = 0.5 * (p - 1.0).ln();
                l2(1.0 / p) - PI * PI / 4.0 + h * h + p.ln() * (0.5 * p.ln() - (p - 1.0).ln())
            },
        ),
        row(
            "critical_a_p2",
            "Li2(-a) - pi^2/6 + ((a + 2)/(2a)) ln(a + 1) = 0",
            Some(-0.514091),
            (-1.0 + 1e-9, -1e-9),
            |a| l2(-a) - ZETA2 + (a + 2.0) / (2.0 * a) * a.ln_1p(),
        ),
    ];
    rows.drain(..).map(Row::solve).collect()
}

/// The registry, solved once on first use.
pub fn constants_table() -> &'static [NamedConstant] {
    static TABLE: OnceLock<Vec<NamedConstant>> = OnceLock::new();
    TABLE.get_or_init(build)
}

pub fn constant(id: &str) -> Option<&'static NamedConstant> {
    constants_table().iter().find(|c| c.id == id)
}

/// Value of a registered constant; panics on an unknown id.
pub(crate) fn value_of(id: &str) -> f64 {
    constant(id).unwrap_or_else(|| panic!("unknown constant {id}")).value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_back_substitutes() {
        for c in constants_table() {
            assert!(c.residual().abs() < 1e-12, "{}: residual {}", c.id, c.residual());
            assert!(c.bracket.0 < c.value && c.value < c.bracket.1, "{}", c.id);
        }
    }

    #[test]
    fn printed_values_match() {
        for c in constants_table() {
            if let Some(r) = c.reference_value {
                assert!((c.value - r).abs() < 1e-5, "{}: {} vs {}", c.id, c.value, r);
            }
        }
    }

    #[test]
    fn exact_forms() {
        assert!((value_of("theta_m") - 2f64.sqrt().atan()).abs() < 1e-15);
        assert!((value_of("delta_s") - (1.0 + 2f64.sqrt()).ln()).abs() < 1e-15);
        assert!(constant("nope").is_none());
    }
}
