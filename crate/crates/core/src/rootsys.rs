//! Finite crystallographic root systems given abstractly by their Cartan
//! matrix.
//!
//! Roots are integer vectors over the simple roots; nothing is embedded in
//! Euclidean space. The invariant bilinear form is the symmetrized Cartan
//! matrix, normalized so that short roots have squared length 2. Node
//! numbering is documented in `CONVENTIONS.md` at the repository root.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, Mutex};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Squared lengths of the simple roots and the Dynkin edges (0-based).
    fn diagram(&self) -> (Vec<i32>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![2; n], chain(n)),
            Family::B => {
                let mut norms = vec![4; n];
                norms[n - 1] = 2;
                (norms, chain(n))
            }
            Family::C => {
                let mut norms = vec![2; n];
                norms[n - 1] = 4;
                (norms, chain(n))
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![2; n], edges)
            }
            Family::E => {
                // 1-3-4-5-6(-7-8) with 2 hanging off 4
                let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                if n >= 7 {
                    edges.push((5, 6));
                }
                if n == 8 {
                    edges.push((6, 7));
                }
                (vec![2; n], edges)
            }
            Family::F => (vec![4, 4, 2, 2], chain(4)),
            Family::G => (vec![2, 6], chain(2)),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses labels such as `A3`, `e6`, `D_5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars.next().ok_or_else(|| Error::UnknownType(s.to_string()))?.to_string().parse::<Family>()?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest.parse::<usize>().map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(fam, rank)
    }
}

/// A root written over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(Vec<i32>);

impl Root {
    /// Rejects the zero vector and vectors with coefficients of both signs.
    pub fn new(coords: Vec<i32>) -> Result<Self> {
        let pos = coords.iter().any(|&c| c > 0);
        let neg = coords.iter().any(|&c| c < 0);
        if pos == neg {
            return Err(Error::MixedSignRoot(coords));
        }
        Ok(Root(coords))
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&c| c > 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Position of a root in the fixed positive-root order, with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootIndex {
    pub index: usize,
    pub positive: bool,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`, so `diag(d) * cartan` is symmetric.
    cartan: Vec<Vec<i32>>,
    /// `gram[i][j] = (alpha_i, alpha_j)` with short roots of squared length 2.
    gram: Vec<Vec<i32>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    simple_index: Vec<usize>,
    /// `simple_perm[i][p]`: index of `s_i(beta_p)`; `usize::MAX` when `beta_p = alpha_i`.
    simple_perm: Vec<Vec<usize>>,
    highest_root: Root,
    highest_short_root: Root,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> RootSystem {
        let r = cartan_type.rank();
        let (norms, edges) = cartan_type.diagram();
        let mut gram = vec![vec![0i32; r]; r];
        for i in 0..r {
            gram[i][i] = norms[i];
        }
        for &(a, b) in &edges {
            let v = -(norms[a].max(norms[b]) / 2);
            gram[a][b] = v;
            gram[b][a] = v;
        }
        let cartan: Vec<Vec<i32>> = (0..r).map(|i| (0..r).map(|j| 2 * gram[i][j] / gram[i][i]).collect()).collect();

        // closure of the simple roots under simple reflections, positive side only
        let mut positive: Vec<Root> = (1..=r).map(|i| Root::simple(r, i)).collect();
        let mut seen: HashMap<Vec<i32>, ()> = positive.iter().map(|p| (p.0.clone(), ())).collect();
        let mut k = 0;
        while k < positive.len() {
            let beta = positive[k].0.clone();
            for i in 0..r {
                let pair: i32 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                if pair == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= pair;
                if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    positive.push(Root(img));
                }
            }
            k += 1;
        }
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
        let index: HashMap<Vec<i32>, usize> =
            positive.iter().enumerate().map(|(p, root)| (root.0.clone(), p)).collect();
        let simple_index: Vec<usize> = (1..=r).map(|i| index[&Root::simple(r, i).0]).collect();

        let simple_perm = (0..r)
            .map(|i| {
                positive
                    .iter()
                    .map(|beta| {
                        let pair: i32 = (0..r).map(|j| beta.0[j] * cartan[i][j]).sum();
                        let mut img = beta.0.clone();
                        img[i] -= pair;
                        index.get(&img).copied().unwrap_or(usize::MAX)
                    })
                    .collect()
            })
            .collect();

        let norm = |v: &[i32]| -> i32 { (0..r).map(|i| (0..r).map(|j| v[i] * gram[i][j] * v[j]).sum::<i32>()).sum() };
        let highest_root = positive.last().cloned().expect("nonempty root system");
        let short = *norms.iter().min().unwrap();
        let highest_short_root =
            positive.iter().rev().find(|p| norm(&p.0) == short).cloned().expect("short roots exist");

        RootSystem {
            cartan_type,
            cartan,
            gram,
            positive,
            index,
            simple_index,
            simple_perm,
            highest_root,
            highest_short_root,
        }
    }

    /// Process-wide cached instance; building E8 is not free.
    pub fn shared(cartan_type: CartanType) -> Arc<RootSystem> {
        static CACHE: LazyLock<Mutex<HashMap<CartanType, Arc<RootSystem>>>> =
            LazyLock::new(|| Mutex::new(HashMap::new()));
        let mut cache = CACHE.lock().expect("root system cache poisoned");
        cache.entry(cartan_type).or_insert_with(|| Arc::new(RootSystem::build(cartan_type))).clone()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i32>] {
        &self.gram
    }

    /// `d_i = (alpha_i, alpha_i) / 2`.
    pub fn symmetrizer(&self) -> Vec<i32> {
        (0..self.rank()).map(|i| self.gram[i][i] / 2).collect()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn highest_short_root(&self) -> &Root {
        &self.highest_short_root
    }

    /// Index of the simple root `alpha_i` (1-based `i`) in the positive-root order.
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.simple_index[i - 1]
    }

    /// Index of `s_i(beta_p)`, or `None` when `beta_p = alpha_i`.
    pub fn simple_reflection_of(&self, i: usize, p: usize) -> Option<usize> {
        let q = self.simple_perm[i - 1][p];
        (q != usize::MAX).then_some(q)
    }

    pub fn lookup(&self, coords: &[i32]) -> Option<RootIndex> {
        if let Some(&index) = self.index.get(coords) {
            return Some(RootIndex { index, positive: true });
        }
        let neg: Vec<i32> = coords.iter().map(|c| -c).collect();
        self.index.get(&neg).map(|&index| RootIndex { index, positive: false })
    }

    pub fn is_root(&self, coords: &[i32]) -> bool {
        self.lookup(coords).is_some()
    }

    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|j| a[i] * self.gram[i][j] * b[j]).sum::<i32>()).sum()
    }

    pub fn norm(&self, a: &[i32]) -> i32 {
        self.inner(a, a)
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`; integral for roots.
    pub fn cartan_integer(&self, beta: &[i32], alpha: &[i32]) -> i32 {
        2 * self.inner(beta, alpha) / self.norm(alpha)
    }

    /// `s_alpha(beta) = beta - <beta, alpha^vee> alpha`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        for root in [alpha, beta] {
            if !self.is_root(root.coords()) {
                return Err(Error::NotARoot(root.coords().to_vec()));
            }
        }
        let c = self.cartan_integer(beta.coords(), alpha.coords());
        let img = beta.0.iter().zip(&alpha.0).map(|(b, a)| b - c * a).collect();
        Ok(Root(img))
    }

    /// `(lambda, alpha^vee)` for `lambda` in fundamental-weight coordinates.
    pub fn pairing(&self, lambda: &[Ratio<i64>], alpha: &Root) -> Result<Ratio<i64>> {
        if !self.is_root(alpha.coords()) {
            return Err(Error::NotARoot(alpha.coords().to_vec()));
        }
        let alpha_norm = i64::from(self.norm(alpha.coords()));
        let mut acc = Ratio::from_integer(0);
        for (i, &c) in alpha.coords().iter().enumerate() {
            if c != 0 {
                acc += lambda[i] * Ratio::new(i64::from(c) * i64::from(self.gram[i][i]), alpha_norm);
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in
            [("A3", 6), ("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120), ("B3", 9), ("C4", 16), ("D5", 20)]
        {
            assert_eq!(rs(t).num_positive(), n, "{t}");
        }
    }

    #[test]
    fn invalid_ranks() {
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!(CartanType::new(Family::E, 5).is_err());
        assert!(CartanType::new(Family::F, 3).is_err());
        assert!(CartanType::new(Family::G, 3).is_err());
        assert!("X3".parse::<CartanType>().is_err());
        assert_eq!("d_5".parse::<CartanType>().unwrap(), CartanType::new(Family::D, 5).unwrap());
    }

    #[test]
    fn mixed_sign_roots_rejected() {
        assert!(Root::new(vec![1, -1]).is_err());
        assert!(Root::new(vec![0, 0]).is_err());
        assert!(Root::new(vec![-1, -2]).is_ok());
    }

    #[test]
    fn symmetrized_form_and_norms() {
        for t in ["A4", "B3", "C3", "D4", "E6", "F4", "G2"] {
            let rs = rs(t);
            let d = rs.symmetrizer();
            let a = rs.cartan_matrix();
            for i in 0..rs.rank() {
                assert!([2, 4, 6].contains(&rs.gram()[i][i]));
                for j in 0..rs.rank() {
                    assert_eq!(d[i] * a[i][j], d[j] * a[j][i], "{t}");
                }
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        let (a1, a2r) = (Root::simple(2, 1), Root::simple(2, 2));
        assert_eq!(a2.reflect(&a1, &a1).unwrap(), a1.neg());
        assert_eq!(a2.reflect(&a1, &a2r).unwrap().coords(), &[1, 1]);
        let c2 = rs("C2");
        // alpha_2 long in C2
        assert_eq!(c2.reflect(&a2r, &a1).unwrap().coords(), &[1, 1]);
    }

    #[test]
    fn reflection_closure_and_integrality() {
        for t in ["B3", "C3", "F4", "G2", "D4"] {
            let rs = rs(t);
            for alpha in rs.positive_roots() {
                for beta in rs.positive_roots() {
                    assert!(rs.is_root(rs.reflect(alpha, beta).unwrap().coords()));
                    let num = 2 * rs.inner(beta.coords(), alpha.coords());
                    assert_eq!(num % rs.norm(alpha.coords()), 0);
                }
            }
        }
    }

    #[test]
    fn highest_short_root_matches_highest_in_simply_laced() {
        for t in ["A5", "D5", "E6", "E7", "E8"] {
            let rs = rs(t);
            assert_eq!(rs.highest_root(), rs.highest_short_root());
        }
        for t in ["B3", "C3", "F4", "G2"] {
            let rs = rs(t);
            assert_ne!(rs.highest_root(), rs.highest_short_root());
        }
        assert_eq!(rs("G2").highest_root().coords(), &[3, 2]);
        assert_eq!(rs("G2").highest_short_root().coords(), &[2, 1]);
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let one = Ratio::from_integer(1);
        let rho = vec![one; 2];
        for i in 1..=2 {
            assert_eq!(a2.pairing(&rho, &Root::simple(2, i)).unwrap(), one);
        }
        assert_eq!(a2.pairing(&rho, a2.highest_root()).unwrap(), Ratio::from_integer(2));
        // rho - alpha_1 in fundamental-weight coordinates is (1-2, 1+1)
        let shifted = vec![Ratio::from_integer(-1), Ratio::from_integer(2)];
        assert_eq!(a2.pairing(&shifted, &Root::simple(2, 1)).unwrap(), Ratio::from_integer(-1));
        assert!(a2.pairing(&rho, &Root(vec![2, 1])).is_err());
    }
}
