//! Smoothness front end: engine dispatch, the Poincaré polynomial oracle, and
//! the smooth part of each translated cell.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bp::{self, StellarType};
use crate::cells;
use crate::closed_forms;
use crate::error::Result;
use crate::patterns::{self, SignedPattern, TypeAPattern};
use crate::rootsys::{Family, Root, RootSystem};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    TypeA,
    RestrictedList,
    Bp,
    Oracle,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::TypeA => "typeA",
            Engine::RestrictedList => "restricted_list",
            Engine::Bp => "bp",
            Engine::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    TypeA { pattern: TypeAPattern, positions: Vec<usize> },
    SignedPattern { pattern: SignedPattern, positions: Vec<usize> },
    Subsystem { type_label: StellarType, base: Vec<Root>, sigma: Vec<usize> },
    Polynomial(PoincarePolynomial),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::TypeA { pattern, .. } => write!(f, "pattern {pattern}"),
            Witness::SignedPattern { pattern, .. } => write!(f, "pattern {}", pattern.to_bar_string()),
            Witness::Subsystem { type_label, base, sigma } => {
                let base: Vec<String> = base.iter().map(|r| r.to_string()).collect();
                let sigma: String = sigma.iter().map(|i| i.to_string()).collect();
                write!(f, "{type_label} subsystem on {} flattens to {sigma}", base.join(" "))
            }
            Witness::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessVerdict {
    pub smooth: bool,
    pub engine: Engine,
    pub witness: Option<Witness>,
}

impl SmoothnessVerdict {
    pub fn smooth(engine: Engine) -> Self {
        SmoothnessVerdict { smooth: true, engine, witness: None }
    }

    pub fn singular(engine: Engine, witness: Witness) -> Self {
        SmoothnessVerdict { smooth: false, engine, witness: Some(witness) }
    }
}

/// Coefficient `k` counts elements of length `k` below `w` in Bruhat order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincarePolynomial {
    pub coefficients: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    pub fn evaluate_at_one(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (k, 1) => format!("t^{k}"),
                (k, c) => format!("{c}t^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

pub fn poincare(w: &WeylElement, cap: usize) -> Result<PoincarePolynomial> {
    let interval = w.lower_interval(cap)?;
    let mut coefficients = vec![0u64; w.length() + 1];
    for v in interval.iter() {
        coefficients[v.length()] += 1;
    }
    Ok(PoincarePolynomial { coefficients })
}

/// Rational smoothness by palindromicity; reports the polynomial either way.
pub fn smooth_oracle(w: &WeylElement, cap: usize) -> Result<SmoothnessVerdict> {
    let p = poincare(w, cap)?;
    Ok(SmoothnessVerdict { smooth: p.is_palindromic(), engine: Engine::Oracle, witness: Some(Witness::Polynomial(p)) })
}

/// Type A uses 3412/4231; B, C, D on the translated cell use the restricted
/// lists; everything else goes through stellar subsystems. Where two engines
/// apply they must agree: a panic in debug builds, a warning in release.
pub fn is_smooth(w: &WeylElement, extended: bool) -> Result<SmoothnessVerdict> {
    let ct = w.cartan_type();
    let restricted = matches!(ct.family(), Family::B | Family::C) || (ct.family() == Family::D && ct.rank() >= 4);
    let primary = match ct.family() {
        Family::A => patterns::smooth_type_a(w)?,
        _ if restricted && cells::in_w0_cell(w) => patterns::smooth_restricted(w)?,
        _ => return bp::smooth_bp(w, extended),
    };
    let check = bp::smooth_bp(w, extended)?;
    if check.smooth != primary.smooth {
        let msg = format!(
            "engine disagreement on {ct} element {w}: {} says {}, bp says {}",
            primary.engine, primary.smooth, check.smooth
        );
        if cfg!(debug_assertions) {
            panic!("{msg}");
        }
        log::warn!("{msg}");
    }
    Ok(primary)
}

/// `{w in w0 C_i : w smooth}` in cell order.
pub fn smooth_elements_of_cell(rs: &Arc<RootSystem>, i: usize, extended: bool) -> Result<Vec<WeylElement>> {
    let cell = cells::w0_right_cell(rs, i)?;
    let mut out = Vec::new();
    for w in cell.elements {
        if is_smooth(&w, extended)?.smooth {
            out.push(w);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct NodeReport {
    pub node: usize,
    pub computed: Vec<WeylElement>,
    pub expected: Vec<WeylElement>,
    pub matches: bool,
}

/// Compares the smooth part of every `w0 C_i` with the closed forms.
/// Returns `None` for types without closed forms.
pub fn verify_smooth_cells(rs: &Arc<RootSystem>, extended: bool) -> Result<Option<Vec<NodeReport>>> {
    let mut reports = Vec::new();
    for i in 1..=rs.rank() {
        let Some(mut expected) = closed_forms::expected_smooth_set(rs, i)? else {
            return Ok(None);
        };
        cells::sort_elements(&mut expected);
        let computed = smooth_elements_of_cell(rs, i, extended)?;
        let matches = computed == expected;
        reports.push(NodeReport { node: i, computed, expected, matches });
    }
    Ok(Some(reports))
}
