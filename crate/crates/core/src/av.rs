//! Weights, dominance, and the extremal representatives of the translated
//! cells attached to integral minimal modules.

use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cells;
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::WeylElement;

/// Coordinates over the fundamental weights; entry `k` is `(lambda, alpha_k^vee)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<Ratio<i64>>);

impl Weight {
    pub fn rho(rs: &RootSystem) -> Self {
        Weight(vec![Ratio::one(); rs.rank()])
    }

    /// `alpha_i` as a weight: entry `k` is `<alpha_i, alpha_k^vee>`.
    pub fn simple_root(rs: &RootSystem, i: usize) -> Self {
        let a = rs.cartan_matrix();
        Weight((0..rs.rank()).map(|k| Ratio::from_integer(i64::from(a[k][i - 1]))).collect())
    }

    pub fn coords(&self) -> &[Ratio<i64>] {
        &self.0
    }

    pub fn neg(&self) -> Self {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn sub(&self, other: &Weight) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `s_i(lambda) = lambda - (lambda, alpha_i^vee) alpha_i`.
    pub fn reflect(&self, rs: &RootSystem, i: usize) -> Self {
        let c = self.0[i - 1];
        let a = rs.cartan_matrix();
        Weight(self.0.iter().enumerate().map(|(k, x)| x - c * i64::from(a[k][i - 1])).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn weyl_on_weight(w: &WeylElement, lambda: &Weight) -> Weight {
    let rs = w.root_system();
    w.reduced_word().iter().rev().fold(lambda.clone(), |acc, &i| acc.reflect(rs, i))
}

/// `-w rho`.
pub fn neg_w_rho(w: &WeylElement) -> Weight {
    weyl_on_weight(w, &Weight::rho(w.root_system())).neg()
}

fn positive_integer(x: &Ratio<i64>) -> bool {
    x.is_integer() && *x > Ratio::zero()
}

/// Nodes `k` with `(lambda, alpha_k^vee)` a positive integer, for `lambda = -w rho`.
pub fn i_lambda(w: &WeylElement) -> Vec<usize> {
    let lambda = neg_w_rho(w);
    (1..=w.rank()).filter(|&k| positive_integer(&lambda.0[k - 1])).collect()
}

/// True iff `(lambda, alpha_k^vee)` is a positive integer for every node in `nodes`.
pub fn is_dominant_for(lambda: &Weight, nodes: &[usize]) -> bool {
    nodes.iter().all(|&k| positive_integer(&lambda.0[k - 1]))
}

/// `k_i` with `w0(alpha_i) = -alpha_{k_i}`, indexed by `i - 1`.
pub fn opposition(rs: &Arc<RootSystem>) -> Vec<usize> {
    let w0 = WeylElement::longest(rs);
    (1..=rs.rank())
        .map(|i| {
            let mut alpha = vec![0; rs.rank()];
            alpha[i - 1] = 1;
            let img = w0.apply(&alpha);
            img.iter().position(|&c| c == -1).expect("w0 maps simple roots to negative simple roots") + 1
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct AvResult {
    pub node: usize,
    pub min_length_elements: Vec<WeylElement>,
    /// The minimal-length element of `w0 C_i`.
    pub representative_min: WeylElement,
    /// `w0 s_i` for simply-laced types.
    pub representative_max: Option<WeylElement>,
    pub irreducible: bool,
}

/// Extremal data of `w0 C_i` without any uniqueness requirement.
#[derive(Debug, Clone)]
pub struct AvCell {
    pub node: usize,
    pub min_length_elements: Vec<WeylElement>,
    pub max_length_elements: Vec<WeylElement>,
}

pub fn av_cell(rs: &Arc<RootSystem>, i: usize) -> Result<AvCell> {
    let cell = cells::w0_right_cell(rs, i)?;
    Ok(AvCell { node: i, min_length_elements: cell.min_length_elements, max_length_elements: cell.max_length_elements })
}

/// Node `i` with `w` in `w0 C_i`.
pub fn w0_cell_node(w: &WeylElement) -> Result<usize> {
    let x = WeylElement::longest(w.root_system()).multiply(w)?;
    if !cells::has_unique_reduced_word(&x) {
        return Err(Error::NotIntegralMinimal);
    }
    Ok(x.left_descents()[0])
}

/// Minimal (and, when simply laced, maximal) representative of the cell of
/// `w`. Fails unless the minimal-length element is unique.
pub fn av_representative(w: &WeylElement) -> Result<AvResult> {
    let i = w0_cell_node(w)?;
    let rs = w.root_system();
    let data = av_cell(rs, i)?;
    if data.min_length_elements.len() != 1 {
        return Err(Error::NonUniqueMinimum { node: i, count: data.min_length_elements.len() });
    }
    let representative_max = rs.cartan_type().is_simply_laced().then(|| WeylElement::longest(rs).mul_simple_right(i));
    Ok(AvResult {
        node: i,
        representative_min: data.min_length_elements[0].clone(),
        min_length_elements: data.min_length_elements,
        representative_max,
        irreducible: true,
    })
}
