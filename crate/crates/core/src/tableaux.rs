//! Robinson–Schensted row insertion.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<i32>>,
}

impl Tableau {
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows and columns strictly increase; row lengths weakly decrease.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| !r.is_empty() && r.windows(2).all(|p| p[0] < p[1]));
        let shape_ok = self.rows.windows(2).all(|p| p[0].len() >= p[1].len());
        let cols_ok = self.rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(below, above)| above < below));
        rows_ok && shape_ok && cols_ok
    }

    /// Transposed tableau.
    pub fn conjugate(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width).map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()).collect();
        Tableau { rows }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Insertion tableau `P` and recording tableau `Q`.
pub fn rs_insert(seq: &[i32]) -> Result<(Tableau, Tableau)> {
    let mut seen = HashSet::new();
    if let Some(&x) = seq.iter().find(|&&x| !seen.insert(x)) {
        return Err(Error::RepeatedValue(x));
    }
    let mut p = Tableau::default();
    let mut q = Tableau::default();
    for (step, &value) in seq.iter().enumerate() {
        let mut x = value;
        let mut row = 0;
        loop {
            if row == p.rows.len() {
                p.rows.push(vec![x]);
                q.rows.push(vec![step as i32 + 1]);
                break;
            }
            // bump the leftmost entry strictly bigger than x
            match p.rows[row].iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut p.rows[row][c], x);
                    row += 1;
                }
                None => {
                    p.rows[row].push(x);
                    q.rows[row].push(step as i32 + 1);
                    break;
                }
            }
        }
    }
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(rows: &[&[i32]]) -> Tableau {
        Tableau { rows: rows.iter().map(|r| r.to_vec()).collect() }
    }

    #[test]
    fn examples() {
        let (p, _) = rs_insert(&[1, 2, 3]).unwrap();
        assert_eq!(p, t(&[&[1, 2, 3]]));
        assert_eq!(p.shape(), vec![3]);
        let (p, _) = rs_insert(&[3, 4, 2, 1]).unwrap();
        assert_eq!(p, t(&[&[1, 4], &[2], &[3]]));
        assert_eq!(p.shape(), vec![2, 1, 1]);
        let (p, q) = rs_insert(&[2, 1]).unwrap();
        assert_eq!(p, t(&[&[1], &[2]]));
        assert_eq!(q, t(&[&[1], &[2]]));
        assert_eq!(rs_insert(&[4, 3, 2, 1]).unwrap().0.shape(), vec![1, 1, 1, 1]);
        assert!(matches!(rs_insert(&[1, 2, 1]), Err(Error::RepeatedValue(1))));
        assert_eq!(t(&[&[1, 4], &[2]]).to_string(), "1 4\n2");
    }

    proptest! {
        #[test]
        fn insertion_invariants(perm in Just((1..=7).collect::<Vec<i32>>()).prop_shuffle()) {
            let (p, q) = rs_insert(&perm).unwrap();
            prop_assert!(p.is_standard());
            prop_assert!(q.is_standard());
            prop_assert_eq!(p.shape(), q.shape());
            prop_assert_eq!(p.size(), perm.len());
            let mut qs: Vec<i32> = q.rows.concat();
            qs.sort();
            prop_assert_eq!(qs, (1..=7).collect::<Vec<_>>());
        }

        #[test]
        fn reversal_conjugates_shape(perm in Just((1..=7).collect::<Vec<i32>>()).prop_shuffle()) {
            let (p, _) = rs_insert(&perm).unwrap();
            let rev: Vec<i32> = perm.iter().rev().copied().collect();
            let (pr, _) = rs_insert(&rev).unwrap();
            prop_assert_eq!(pr.shape(), p.conjugate().shape());
        }
    }
}
