//! Signed-permutation patterns: flattening, containment, the two type-A
//! patterns, and the short forbidden lists valid on the translated cell.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cells;
use crate::error::{Error, Result};
use crate::rootsys::Family;
use crate::smoothness::{Engine, SmoothnessVerdict, Witness};
use crate::weyl::{SignedSequence, WeylElement};

/// A signed sequence whose absolute values are exactly `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPattern(SignedSequence);

impl SignedPattern {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let seq = SignedSequence::new(entries)?;
        let k = seq.len() as i32;
        if let Some(&e) = seq.entries().iter().find(|e| e.abs() > k) {
            return Err(Error::Parse(format!("pattern entry {e} exceeds pattern length {k}")));
        }
        Ok(SignedPattern(seq))
    }

    pub fn entries(&self) -> &[i32] {
        self.0.entries()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_sequence(&self) -> &SignedSequence {
        &self.0
    }

    pub fn to_bar_string(&self) -> String {
        self.0.to_bar_string()
    }
}

impl fmt::Display for SignedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Replaces absolute values by their ranks, keeping signs.
pub fn fl(seq: &[i32]) -> Result<SignedPattern> {
    let seq = SignedSequence::new(seq.to_vec())?;
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by_key(|&k| seq.entries()[k].abs());
    let mut out = vec![0; seq.len()];
    for (rank, &k) in order.iter().enumerate() {
        out[k] = seq.entries()[k].signum() * (rank as i32 + 1);
    }
    Ok(SignedPattern(SignedSequence::new(out)?))
}

fn for_each_subsequence(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        // next combination in lex order
        let mut p = k;
        loop {
            if p == 0 {
                return None;
            }
            p -= 1;
            if idx[p] < n - k + p {
                break;
            }
            if p == 0 {
                return None;
            }
        }
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// 0-based positions of a subsequence of `line` that flattens to `pattern`.
pub fn contains_signed_pattern(line: &[i32], pattern: &SignedPattern) -> Option<Vec<usize>> {
    let p = pattern.entries();
    if p.is_empty() {
        return Some(Vec::new());
    }
    for_each_subsequence(line.len(), p.len(), |idx| {
        // same signs, and absolute values in the same relative order
        idx.iter().zip(p).all(|(&i, &e)| line[i].signum() == e.signum())
            && (0..p.len()).all(|a| {
                (a + 1..p.len()).all(|b| (line[idx[a]].abs() < line[idx[b]].abs()) == (p[a].abs() < p[b].abs()))
            })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeAPattern {
    #[serde(rename = "3412")]
    P3412,
    #[serde(rename = "4231")]
    P4231,
}

impl fmt::Display for TypeAPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeAPattern::P3412 => "3412",
            TypeAPattern::P4231 => "4231",
        })
    }
}

/// `3412`: `w_k < w_l < w_i < w_j`; `4231`: `w_l < w_j < w_k < w_i`, for `i<j<k<l`.
pub fn contains_type_a_pattern(perm: &[i32], pattern: TypeAPattern) -> Option<Vec<usize>> {
    for_each_subsequence(perm.len(), 4, |idx| {
        let [a, b, c, d] = [perm[idx[0]], perm[idx[1]], perm[idx[2]], perm[idx[3]]];
        match pattern {
            TypeAPattern::P3412 => c < d && d < a && a < b,
            TypeAPattern::P4231 => d < b && b < c && c < a,
        }
    })
}

/// Forbidden patterns that decide smoothness on the translated cell `w0 C`.
pub fn restricted_forbidden_list(family: Family, rank: usize) -> Result<Vec<SignedPattern>> {
    let raw: &[&[i32]] = match family {
        Family::B => &[
            &[-1, 2, -3],
            &[1, -2, -3],
            &[1, -3, -2],
            &[-2, 1, -3],
            &[2, -1, -3],
            &[2, -3, -1],
            &[-3, 1, -2],
            &[-3, -2, 1],
            &[-3, 2, -1],
            &[-3, -4, -1, -2],
            &[-2, -1],
        ],
        Family::C => &[
            &[-1, 2, -3],
            &[-2, -1, -3],
            &[-2, 1, -3],
            &[2, -1, -3],
            &[2, -3, -1],
            &[-3, -2, -1],
            &[-3, -2, 1],
            &[-3, 2, -1],
            &[3, -2, -1],
            &[-3, -4, -1, -2],
            &[1, -2],
        ],
        Family::D if rank.is_multiple_of(2) => &[
            &[-1, -3, -2],
            &[2, 1, -3, -4],
            &[-2, -1, -3],
            &[2, -3, 1, -4],
            &[-2, -4, 3, 1],
            &[3, 1, -2, -4],
            &[3, -2, 1, -4],
            &[-3, -2, -1],
            &[3, -2, -4, 1],
            &[-3, -4, -1, -2],
            &[3, -4, 1, -2],
        ],
        Family::D => &[
            &[-1, 2, -3],
            &[1, -3, -2],
            &[-2, -1, -3],
            &[-2, 1, -3, -4],
            &[2, 1, -3, -4],
            &[2, -1, -3, -4],
            &[-2, 4, -3, -1],
            &[3, -1, -2, -4],
            &[3, 1, -2, -4],
            &[3, -4, -1, -2],
        ],
        other => return Err(Error::Parse(format!("no restricted pattern list for family {other}"))),
    };
    raw.iter().map(|p| SignedPattern::new(p.to_vec())).collect()
}

/// Smoothness on `w0 C` for types B, C, D by the restricted lists.
pub fn smooth_restricted(w: &WeylElement) -> Result<SmoothnessVerdict> {
    let ct = w.cartan_type();
    if !matches!(ct.family(), Family::B | Family::C | Family::D) {
        return Err(Error::Parse(format!("restricted pattern lists cover types B, C, D only, not {ct}")));
    }
    if !cells::in_w0_cell(w) {
        return Err(Error::NotIntegralMinimal);
    }
    let line = w.one_line()?;
    for pattern in restricted_forbidden_list(ct.family(), ct.rank())? {
        if let Some(positions) = contains_signed_pattern(line.entries(), &pattern) {
            return Ok(SmoothnessVerdict::singular(
                Engine::RestrictedList,
                Witness::SignedPattern { pattern, positions },
            ));
        }
    }
    Ok(SmoothnessVerdict::smooth(Engine::RestrictedList))
}

/// Type-A verdict by 3412 and 4231 avoidance.
pub fn smooth_type_a(w: &WeylElement) -> Result<SmoothnessVerdict> {
    let line = w.one_line()?;
    for pattern in [TypeAPattern::P3412, TypeAPattern::P4231] {
        if let Some(positions) = contains_type_a_pattern(line.entries(), pattern) {
            return Ok(SmoothnessVerdict::singular(Engine::TypeA, Witness::TypeA { pattern, positions }));
        }
    }
    Ok(SmoothnessVerdict::smooth(Engine::TypeA))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use proptest::prelude::*;

    fn pat(v: &[i32]) -> SignedPattern {
        SignedPattern::new(v.to_vec()).unwrap()
    }

    #[test]
    fn flattening_examples() {
        assert_eq!(fl(&[-5, 4, -6, 2]).unwrap(), pat(&[-3, 2, -4, 1]));
        assert_eq!(fl(&[7]).unwrap(), pat(&[1]));
        assert_eq!(fl(&[-6, 3, -7, 1]).unwrap(), pat(&[-3, 2, -4, 1]));
        assert!(fl(&[2, -2]).is_err());
    }

    #[test]
    fn containment_examples() {
        assert_eq!(contains_signed_pattern(&[2, 1, -3, -4], &pat(&[1, -2, -3])), Some(vec![0, 2, 3]));
        assert_eq!(fl(&[1, -3, -4]).unwrap(), pat(&[1, -2, -3]));
        assert_eq!(contains_signed_pattern(&[-2, -3, 1], &pat(&[1, -2])), None);
        assert_eq!(contains_signed_pattern(&[1, 2, 3], &pat(&[2, 1])), None);
        assert_eq!(contains_signed_pattern(&[1, 2], &pat(&[1, 2, 3])), None);
    }

    #[test]
    fn type_a_examples() {
        assert!(contains_type_a_pattern(&[3, 4, 1, 2], TypeAPattern::P3412).is_some());
        assert!(contains_type_a_pattern(&[4, 2, 3, 1], TypeAPattern::P4231).is_some());
        assert!(contains_type_a_pattern(&[4, 2, 1, 3], TypeAPattern::P3412).is_none());
        assert!(contains_type_a_pattern(&[4, 2, 1, 3], TypeAPattern::P4231).is_none());
    }

    #[test]
    fn list_sizes_and_members() {
        let b = restricted_forbidden_list(Family::B, 4).unwrap();
        let c = restricted_forbidden_list(Family::C, 4).unwrap();
        let de = restricted_forbidden_list(Family::D, 4).unwrap();
        let d_odd = restricted_forbidden_list(Family::D, 5).unwrap();
        assert_eq!((b.len(), c.len(), de.len(), d_odd.len()), (11, 11, 11, 10));
        assert!(b.contains(&pat(&[-2, -1])));
        assert!(c.contains(&pat(&[1, -2])));
        assert!(de.contains(&pat(&[3, -4, 1, -2])));
        for p in b.iter().chain(&c).chain(&de).chain(&d_odd) {
            assert_eq!(&fl(p.entries()).unwrap(), p);
        }
        assert!(restricted_forbidden_list(Family::E, 6).is_err());
    }

    #[test]
    fn restricted_examples() {
        let b3 = RootSystem::shared("B3".parse().unwrap());
        let x = WeylElement::parse(&b3, "w0 3 2 1").unwrap();
        assert_eq!(x.one_line().unwrap().entries(), &[-2, -3, 1]);
        assert!(smooth_restricted(&x).unwrap().smooth);

        let c3 = RootSystem::shared("C3".parse().unwrap());
        let y = WeylElement::parse(&c3, "w0 3 2 3").unwrap();
        assert_eq!(y.one_line().unwrap().entries(), &[2, 1, -3]);
        let v = smooth_restricted(&y).unwrap();
        assert!(!v.smooth);
        assert!(matches!(v.witness, Some(Witness::SignedPattern { ref pattern, .. }) if pattern == &pat(&[1, -2])));

        let d4 = RootSystem::shared("D4".parse().unwrap());
        assert!(!smooth_restricted(&WeylElement::parse(&d4, "w0 2").unwrap()).unwrap().smooth);
        assert!(matches!(smooth_restricted(&WeylElement::identity(&d4)), Err(Error::NotIntegralMinimal)));
    }

    fn signed_seq() -> impl Strategy<Value = Vec<i32>> {
        prop::collection::vec((1i32..40, any::<bool>()), 1..8).prop_filter_map("distinct", |v| {
            let mut abs: Vec<i32> = v.iter().map(|p| p.0).collect();
            abs.sort();
            abs.dedup();
            (abs.len() == v.len()).then(|| v.iter().map(|&(a, neg)| if neg { -a } else { a }).collect())
        })
    }

    proptest! {
        #[test]
        fn fl_idempotent(seq in signed_seq()) {
            let once = fl(&seq).unwrap();
            prop_assert_eq!(fl(once.entries()).unwrap(), once);
        }

        #[test]
        fn fl_preserves_signs_and_order(seq in signed_seq()) {
            let f = fl(&seq).unwrap();
            for i in 0..seq.len() {
                prop_assert_eq!(f.entries()[i].signum(), seq[i].signum());
                for j in 0..seq.len() {
                    prop_assert_eq!(f.entries()[i].abs() < f.entries()[j].abs(), seq[i].abs() < seq[j].abs());
                }
            }
        }

        #[test]
        fn self_containment(seq in signed_seq()) {
            let f = fl(&seq).unwrap();
            prop_assert!(contains_signed_pattern(&seq, &f).is_some());
        }

        #[test]
        fn type_a_inverse_patterns(perm in Just((1..=6).collect::<Vec<i32>>()).prop_shuffle()) {
            // 3412 and 4231 are involutions, so containment is inverse-invariant
            let mut inv = vec![0; perm.len()];
            for (i, &v) in perm.iter().enumerate() {
                inv[v as usize - 1] = i as i32 + 1;
            }
            for p in [TypeAPattern::P3412, TypeAPattern::P4231] {
                prop_assert_eq!(contains_type_a_pattern(&perm, p).is_some(), contains_type_a_pattern(&inv, p).is_some());
            }
        }
    }
}
