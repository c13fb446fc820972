//! Smoothness through stellar root subsystems.
//!
//! A subsystem is `Phi ∩ V` for a subspace `V` spanned by part of the
//! positive roots. For each stellar subsystem the inversion set of `w` is cut
//! down to the subsystem, read as an element of the standard Weyl group of
//! that type, and compared against a small table of forbidden elements.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, Mutex};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, Root, RootSystem};
use crate::smoothness::{Engine, SmoothnessVerdict, Witness};
use crate::weyl::{word_from_inversions, InversionSet, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StellarType {
    B2,
    G2,
    A3,
    B3,
    C3,
    D4,
}

impl StellarType {
    pub const ALL: [StellarType; 6] =
        [StellarType::B2, StellarType::G2, StellarType::A3, StellarType::B3, StellarType::C3, StellarType::D4];

    pub fn cartan_type(self) -> CartanType {
        let (family, rank) = match self {
            StellarType::B2 => (Family::B, 2),
            StellarType::G2 => (Family::G, 2),
            StellarType::A3 => (Family::A, 3),
            StellarType::B3 => (Family::B, 3),
            StellarType::C3 => (Family::C, 3),
            StellarType::D4 => (Family::D, 4),
        };
        CartanType::new(family, rank).expect("stellar types are valid")
    }

    pub fn root_system(self) -> Arc<RootSystem> {
        RootSystem::shared(self.cartan_type())
    }

    /// Letter permutations induced by diagram automorphisms.
    fn automorphisms(self) -> Vec<Vec<usize>> {
        match self {
            StellarType::A3 => vec![vec![1, 2, 3], vec![3, 2, 1]],
            StellarType::D4 => {
                let leaves = [1usize, 3, 4];
                let mut out = Vec::new();
                for a in 0..3 {
                    for b in 0..3 {
                        for c in 0..3 {
                            if a != b && b != c && a != c {
                                // position k of the map holds the image of letter k+1
                                out.push(vec![leaves[a], 2, leaves[b], leaves[c]]);
                            }
                        }
                    }
                }
                out
            }
            _ => {
                let r = self.cartan_type().rank();
                vec![(1..=r).collect()]
            }
        }
    }

    /// Forbidden words with the bracket shorthand already expanded.
    fn forbidden_words(self) -> Vec<Vec<usize>> {
        let digits = |s: &str| -> Vec<usize> { s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect() };
        let words: &[&str] = match self {
            StellarType::B2 => &["212"],
            StellarType::G2 => &["121", "2121", "1212", "21212", "12121"],
            StellarType::A3 => &["2132", "12321"],
            StellarType::B3 => &["2132", "12321", "123213", "1232132", "1232123", "12321232"],
            StellarType::C3 => &["2132", "32132", "21323", "321323", "32123", "12321323"],
            StellarType::D4 => &["21342"],
        };
        words.iter().map(|s| digits(s)).collect()
    }
}

impl fmt::Display for StellarType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for StellarType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StellarType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownType(s.to_string()))
    }
}

/// Forbidden elements of a stellar type, closed under diagram automorphisms.
pub fn forbidden_elements(t: StellarType) -> Vec<WeylElement> {
    let rs = t.root_system();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for word in t.forbidden_words() {
        for auto in t.automorphisms() {
            let mapped: Vec<usize> = word.iter().map(|&l| auto[l - 1]).collect();
            let x = WeylElement::from_word(&rs, &mapped).expect("letters in range");
            if seen.insert(x.clone()) {
                out.push(x);
            }
        }
    }
    crate::cells::sort_elements(&mut out);
    out
}

fn forbidden_masks(t: StellarType) -> &'static HashSet<u128> {
    static MASKS: LazyLock<HashMap<StellarType, HashSet<u128>>> = LazyLock::new(|| {
        StellarType::ALL
            .into_iter()
            .map(|t| (t, forbidden_elements(t).iter().map(|x| x.inversion_set().bits()).collect()))
            .collect()
    });
    &MASKS[&t]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsystem {
    pub type_label: StellarType,
    /// Simple system of the subsystem; position `k` carries standard node `k + 1`.
    pub base: Vec<Root>,
    /// Positive roots of the subsystem, in host order.
    pub positive_part: Vec<Root>,
    /// Pairs (host positive-root index, standard positive-root index).
    pub root_map: Vec<(usize, usize)>,
    pub host_mask: u128,
}

impl Subsystem {
    /// Standard-labeled inversion set of the flattening of `w`.
    fn flattened_set(&self, inversions: InversionSet) -> InversionSet {
        let mut out = InversionSet::default();
        for &(host, std) in &self.root_map {
            if inversions.contains(host) {
                out.insert(std);
            }
        }
        out
    }
}

type Frac = Ratio<i64>;

/// Inverse of a small rational matrix; `None` when singular.
fn invert(m: &[Vec<Frac>]) -> Option<Vec<Vec<Frac>>> {
    let k = m.len();
    let mut a: Vec<Vec<Frac>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { Frac::one() } else { Frac::zero() }));
            r
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, v) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[k..].to_vec()).collect())
}

/// Tries to complete an ordered base into a subsystem of type `t`.
fn subsystem_from_base(rs: &RootSystem, t: StellarType, base: &[usize]) -> Option<Subsystem> {
    let std = t.root_system();
    let roots = rs.positive_roots();
    let gram: Vec<Vec<Frac>> = base
        .iter()
        .map(|&a| base.iter().map(|&b| Frac::from(i64::from(rs.inner(roots[a].coords(), roots[b].coords())))).collect())
        .collect();
    let inv = invert(&gram)?;
    let mut root_map = Vec::new();
    let mut host_mask = 0u128;
    let mut positive_part = Vec::new();
    for (p, gamma) in roots.iter().enumerate() {
        let pair: Vec<Frac> =
            base.iter().map(|&b| Frac::from(i64::from(rs.inner(roots[b].coords(), gamma.coords())))).collect();
        let coeffs: Vec<Frac> = (0..base.len()).map(|i| (0..base.len()).map(|j| inv[i][j] * pair[j]).sum()).collect();
        let in_span = (0..rs.rank()).all(|c| {
            let v: Frac = coeffs.iter().zip(base).map(|(x, &b)| *x * Frac::from(i64::from(roots[b].coords()[c]))).sum();
            v == Frac::from(i64::from(gamma.coords()[c]))
        });
        if !in_span {
            continue;
        }
        if coeffs.iter().any(|c| !c.is_integer() || *c < Frac::zero()) {
            return None;
        }
        let std_coords: Vec<i32> = coeffs.iter().map(|c| c.to_integer() as i32).collect();
        let ix = std.lookup(&std_coords)?;
        root_map.push((p, ix.index));
        host_mask |= 1 << p;
        positive_part.push(gamma.clone());
    }
    if root_map.len() != std.num_positive() {
        return None;
    }
    Some(Subsystem {
        type_label: t,
        base: base.iter().map(|&b| roots[b].clone()).collect(),
        positive_part,
        root_map,
        host_mask,
    })
}

/// Ordered-base backtracking: the `j`-th base root must pair with every
/// earlier one exactly as the standard Cartan matrix says.
struct BaseSearch<'a> {
    rs: &'a RootSystem,
    t: StellarType,
    cartan: &'a [Vec<i32>],
    base: Vec<usize>,
    out: &'a mut Vec<Subsystem>,
    seen: &'a mut HashSet<u128>,
}

impl BaseSearch<'_> {
    fn extend(&mut self) {
        let j = self.base.len();
        if j == self.cartan.len() {
            if let Some(sub) = subsystem_from_base(self.rs, self.t, &self.base) {
                if self.seen.insert(sub.host_mask) {
                    self.out.push(sub);
                }
            }
            return;
        }
        let roots = self.rs.positive_roots();
        for cand in 0..roots.len() {
            let beta = roots[cand].coords();
            let fits = self.base.iter().enumerate().all(|(i, &b)| {
                let alpha = roots[b].coords();
                let ip = 2 * self.rs.inner(alpha, beta);
                ip == self.cartan[i][j] * self.rs.norm(alpha) && ip == self.cartan[j][i] * self.rs.norm(beta)
            });
            if fits {
                self.base.push(cand);
                self.extend();
                self.base.pop();
            }
        }
    }
}

fn enumerate_type(rs: &RootSystem, t: StellarType, out: &mut Vec<Subsystem>, seen: &mut HashSet<u128>) {
    let std = t.root_system();
    let cartan = std.cartan_matrix();
    let mut search = BaseSearch { rs, t, cartan, base: Vec::with_capacity(cartan.len()), out, seen };
    search.extend();
}

/// Every stellar subsystem, one entry per positive-root set, cached per type.
/// E7 and E8 need `extended`.
pub fn stellar_subsystems(rs: &RootSystem, extended: bool) -> Result<Arc<Vec<Subsystem>>> {
    let ct = rs.cartan_type();
    if ct.family() == Family::E && ct.rank() > 6 && !extended {
        return Err(Error::NeedsExtended(ct));
    }
    static CACHE: LazyLock<Mutex<HashMap<CartanType, Arc<Vec<Subsystem>>>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(hit) = CACHE.lock().expect("subsystem cache poisoned").get(&ct) {
        return Ok(hit.clone());
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for t in StellarType::ALL {
        enumerate_type(rs, t, &mut out, &mut seen);
    }
    let out = Arc::new(out);
    CACHE.lock().expect("subsystem cache poisoned").insert(ct, out.clone());
    Ok(out)
}

/// The element of the standard group of `sub.type_label` whose inversion set
/// is the part of `w`'s inversion set inside the subsystem.
pub fn flatten(w: &WeylElement, sub: &Subsystem) -> Result<WeylElement> {
    let std = sub.type_label.root_system();
    let set = sub.flattened_set(w.inversion_set());
    let word = word_from_inversions(&std, set)?;
    WeylElement::from_word(&std, &word)
}

pub fn smooth_bp(w: &WeylElement, extended: bool) -> Result<SmoothnessVerdict> {
    let subsystems = stellar_subsystems(w.root_system(), extended)?;
    let inversions = w.inversion_set();
    for sub in subsystems.iter() {
        let set = sub.flattened_set(inversions);
        if forbidden_masks(sub.type_label).contains(&set.bits()) {
            let sigma = word_from_inversions(&sub.type_label.root_system(), set)?;
            return Ok(SmoothnessVerdict::singular(
                Engine::Bp,
                Witness::Subsystem { type_label: sub.type_label, base: sub.base.clone(), sigma },
            ));
        }
    }
    Ok(SmoothnessVerdict::smooth(Engine::Bp))
}
