//! The two-sided cell of elements with a unique reduced word, its right
//! cells `C_i` (left descent set `{s_i}`) and their translates `w0 C_i`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, RootSystem};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// `C_i`
    Cell,
    /// `w0 C_i`
    W0Cell,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Cell => "C",
            Side::W0Cell => "w0C",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c" | "cell" => Ok(Side::Cell),
            "w0" | "w0c" | "w0cell" => Ok(Side::W0Cell),
            other => Err(Error::Parse(format!("unknown cell side `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellDescriptor {
    pub cartan_type: CartanType,
    pub node: usize,
    pub side: Side,
}

impl CellDescriptor {
    pub fn new(cartan_type: CartanType, node: usize, side: Side) -> Result<Self> {
        check_node(cartan_type, node)?;
        Ok(CellDescriptor { cartan_type, node, side })
    }
}

impl fmt::Display for CellDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{} of {}", self.side, self.node, self.cartan_type)
    }
}

#[derive(Debug, Clone)]
pub struct CellElements {
    pub descriptor: CellDescriptor,
    /// Sorted by length, then canonical reduced word.
    pub elements: Vec<WeylElement>,
    pub min_length_elements: Vec<WeylElement>,
    pub max_length_elements: Vec<WeylElement>,
}

impl CellElements {
    fn new(descriptor: CellDescriptor, mut elements: Vec<WeylElement>) -> Self {
        sort_elements(&mut elements);
        let lengths: Vec<usize> = elements.iter().map(WeylElement::length).collect();
        let min = lengths.iter().copied().min().unwrap_or(0);
        let max = lengths.iter().copied().max().unwrap_or(0);
        let pick = |target: usize| -> Vec<WeylElement> {
            elements.iter().zip(&lengths).filter(|(_, &l)| l == target).map(|(e, _)| e.clone()).collect()
        };
        let min_length_elements = pick(min);
        let max_length_elements = pick(max);
        CellElements { descriptor, elements, min_length_elements, max_length_elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.contains(w)
    }
}

pub fn sort_elements(elements: &mut [WeylElement]) {
    elements.sort_by_cached_key(|w| (w.length(), w.reduced_word().to_vec()));
}

fn check_node(ct: CartanType, node: usize) -> Result<()> {
    if node == 0 || node > ct.rank() {
        return Err(Error::InvalidNode { node, rank: ct.rank() });
    }
    Ok(())
}

/// True iff `w` is not the identity and has exactly one reduced word.
pub fn has_unique_reduced_word(w: &WeylElement) -> bool {
    if w.is_identity() {
        return false;
    }
    let mut cur = w.clone();
    while !cur.is_identity() {
        let descents = cur.right_descents();
        if descents.len() != 1 {
            return false;
        }
        cur = cur.mul_simple_right(descents[0]);
    }
    true
}

/// Number of reduced words, saturating at `u128::MAX`.
pub fn count_reduced_words(w: &WeylElement) -> u128 {
    fn go(w: &WeylElement, memo: &mut HashMap<WeylElement, u128>) -> u128 {
        if w.is_identity() {
            return 1;
        }
        if let Some(&c) = memo.get(w) {
            return c;
        }
        let total =
            w.right_descents().into_iter().fold(0u128, |acc, s| acc.saturating_add(go(&w.mul_simple_right(s), memo)));
        memo.insert(w.clone(), total);
        total
    }
    go(w, &mut HashMap::new())
}

/// All non-identity elements with a unique reduced word, by right extension:
/// `x s_j` stays in the set iff `j` is its only right descent.
pub fn enumerate_c(rs: &Arc<RootSystem>) -> Vec<WeylElement> {
    let mut out = Vec::new();
    let mut queue: VecDeque<WeylElement> =
        (1..=rs.rank()).map(|i| WeylElement::simple(rs, i).expect("node in range")).collect();
    while let Some(x) = queue.pop_front() {
        for j in 1..=rs.rank() {
            if x.has_right_descent(j) {
                continue;
            }
            let y = x.mul_simple_right(j);
            if y.right_descents() == [j] {
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    sort_elements(&mut out);
    out
}

/// Maximal elements of the closed weak-order intervals that make up `C_i`.
pub fn closed_form_tops(ct: CartanType, i: usize) -> Result<Vec<Vec<usize>>> {
    check_node(ct, i)?;
    let n = ct.rank();
    let down = |from: usize, to: usize| -> Vec<usize> { (to..=from).rev().collect() };
    let up = |from: usize, to: usize| -> Vec<usize> { (from..=to).collect() };
    let cat = |parts: &[Vec<usize>]| -> Vec<usize> { parts.concat() };
    let digits = |s: &str| -> Vec<usize> { s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect() };
    let tops = match ct.family() {
        Family::A => vec![up(i, n), down(i, 1)],
        Family::B | Family::C if i < n => vec![down(i, 1), cat(&[up(i, n), down(n - 1, 1)])],
        Family::B | Family::C => vec![down(n, 1), vec![n, n - 1, n]],
        Family::D if i <= n - 2 => vec![cat(&[up(i, n - 2), vec![n - 1]]), cat(&[up(i, n - 2), vec![n]]), down(i, 1)],
        Family::D if i == n - 1 => vec![down(n - 1, 1), vec![n - 1, n - 2, n]],
        Family::D => vec![cat(&[vec![n], down(n - 2, 1)]), vec![n, n - 2, n - 1]],
        Family::E => {
            let table: &[&str] = match (n, i) {
                (6, 1) => &["13456", "1342"],
                (7, 1) => &["134567", "1342"],
                (8, 1) => &["1345678", "1342"],
                (6, 2) => &["2431", "2456"],
                (7, 2) => &["2431", "24567"],
                (8, 2) => &["2431", "245678"],
                (6, 3) => &["31", "3456", "342"],
                (7, 3) => &["31", "34567", "342"],
                (8, 3) => &["31", "345678", "342"],
                (6, 4) => &["431", "456", "42"],
                (7, 4) => &["431", "4567", "42"],
                (8, 4) => &["431", "45678", "42"],
                (6, 5) => &["5431", "542", "56"],
                (7, 5) => &["5431", "542", "567"],
                (8, 5) => &["5431", "542", "5678"],
                (6, 6) => &["65431", "6542"],
                (7, 6) => &["67", "65431", "6542"],
                (8, 6) => &["678", "65431", "6542"],
                (7, 7) => &["765431", "76542"],
                (8, 7) => &["765431", "76542", "78"],
                (8, 8) => &["8765431", "876542"],
                _ => unreachable!("node checked"),
            };
            table.iter().map(|s| digits(s)).collect()
        }
        Family::F => {
            let table: &[&str] = match i {
                1 => &["1234", "12321"],
                2 => &["21", "234", "2321"],
                3 => &["34", "321", "3234"],
                _ => &["4321", "43234"],
            };
            table.iter().map(|s| digits(s)).collect()
        }
        Family::G => vec![if i == 1 { digits("12121") } else { digits("21212") }],
    };
    Ok(tops)
}

/// `{x : s_i <= x <= top}` in right weak order.
fn weak_interval(top: &WeylElement, i: usize) -> HashSet<WeylElement> {
    let mut below: HashSet<WeylElement> = HashSet::from([top.clone()]);
    let mut stack = vec![top.clone()];
    while let Some(x) = stack.pop() {
        for s in x.right_descents() {
            let y = x.mul_simple_right(s);
            if below.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    below.retain(|x| x.has_left_descent(i));
    below
}

/// `C_i` as the union of the closed-form weak intervals.
pub fn right_cell_closed_form(rs: &Arc<RootSystem>, i: usize) -> Result<Vec<WeylElement>> {
    let mut all = HashSet::new();
    for top in closed_form_tops(rs.cartan_type(), i)? {
        all.extend(weak_interval(&WeylElement::from_word(rs, &top)?, i));
    }
    let mut out: Vec<WeylElement> = all.into_iter().collect();
    sort_elements(&mut out);
    Ok(out)
}

/// `C_i = {w in C : left descents = {i}}`, checked against the closed form.
pub fn right_cell(rs: &Arc<RootSystem>, i: usize) -> Result<CellElements> {
    let ct = rs.cartan_type();
    let descriptor = CellDescriptor::new(ct, i, Side::Cell)?;
    let filtered: Vec<WeylElement> = enumerate_c(rs).into_iter().filter(|w| w.left_descents() == [i]).collect();
    let closed = right_cell_closed_form(rs, i)?;
    if filtered != closed {
        return Err(Error::CellMismatch { cartan_type: ct, node: i });
    }
    Ok(CellElements::new(descriptor, filtered))
}

pub fn w0_right_cell(rs: &Arc<RootSystem>, i: usize) -> Result<CellElements> {
    let cell = right_cell(rs, i)?;
    let w0 = WeylElement::longest(rs);
    let translated = cell.elements.iter().map(|x| w0.multiply(x)).collect::<Result<Vec<_>>>()?;
    Ok(CellElements::new(CellDescriptor::new(rs.cartan_type(), i, Side::W0Cell)?, translated))
}

pub fn cell(rs: &Arc<RootSystem>, i: usize, side: Side) -> Result<CellElements> {
    match side {
        Side::Cell => right_cell(rs, i),
        Side::W0Cell => w0_right_cell(rs, i),
    }
}

/// The node and side of the cell containing `w`, preferring `C_i` when both
/// apply.
pub fn classify(w: &WeylElement) -> Option<(usize, Side)> {
    if has_unique_reduced_word(w) {
        let d = w.left_descents();
        return Some((d[0], Side::Cell));
    }
    let x = WeylElement::longest(w.root_system()).multiply(w).expect("same group");
    if has_unique_reduced_word(&x) {
        let d = x.left_descents();
        return Some((d[0], Side::W0Cell));
    }
    None
}

/// True iff `w0 * w` has a unique reduced word.
pub fn in_w0_cell(w: &WeylElement) -> bool {
    let x = WeylElement::longest(w.root_system()).multiply(w).expect("same group");
    has_unique_reduced_word(&x)
}

/// Expected `|C_i|` for classical types.
pub fn classical_cell_size(ct: CartanType, i: usize) -> Option<usize> {
    let n = ct.rank();
    match ct.family() {
        Family::A | Family::D => Some(n),
        Family::B | Family::C => Some(if i < n { 2 * n - 1 } else { n + 1 }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::shared(s.parse().unwrap())
    }

    fn w(rs: &Arc<RootSystem>, word: &[usize]) -> WeylElement {
        WeylElement::from_word(rs, word).unwrap()
    }

    #[test]
    fn reduced_word_counts() {
        let a2 = rs("A2");
        assert_eq!(count_reduced_words(&w(&a2, &[1])), 1);
        assert_eq!(count_reduced_words(&w(&a2, &[1, 2, 1])), 2);
        let a3 = rs("A3");
        assert_eq!(count_reduced_words(&WeylElement::longest(&a3)), 16);
        assert_eq!(count_reduced_words(&WeylElement::longest(&rs("B2"))), 2);
    }

    /// Brute-force reduced-word enumeration over all words of the right length.
    fn brute_count(x: &WeylElement) -> u128 {
        let r = x.rank();
        let len = x.length();
        let mut total = 0;
        let mut word = vec![1usize; len];
        loop {
            if WeylElement::from_word(x.root_system(), &word).unwrap() == *x {
                total += 1;
            }
            let mut k = 0;
            while k < len && word[k] == r {
                word[k] = 1;
                k += 1;
            }
            if k == len {
                return total;
            }
            word[k] += 1;
        }
    }

    #[test]
    fn reduced_word_count_matches_brute_force() {
        for t in ["A3", "B3"] {
            let r = rs(t);
            for x in WeylElement::enumerate_group(&r).iter().filter(|x| x.length() <= 6) {
                assert_eq!(count_reduced_words(x), brute_count(x), "{t} {x}");
                assert_eq!(has_unique_reduced_word(x), !x.is_identity() && brute_count(x) == 1);
            }
        }
    }

    #[test]
    fn enumerate_small() {
        let a2 = rs("A2");
        let c: HashSet<WeylElement> = enumerate_c(&a2).into_iter().collect();
        let expected: HashSet<WeylElement> =
            [vec![1], vec![2], vec![1, 2], vec![2, 1]].iter().map(|x| w(&a2, x)).collect();
        assert_eq!(c, expected);
        assert_eq!(enumerate_c(&rs("G2")).len(), 10);
        assert_eq!(right_cell(&rs("B3"), 3).unwrap().len(), 4);
    }

    #[test]
    fn cell_sizes_and_partition() {
        for t in ["A2", "A5", "B2", "B4", "C3", "C4", "D3", "D4", "D5", "D6", "E6", "E7", "F4", "G2"] {
            let r = rs(t);
            let ct = r.cartan_type();
            let total = enumerate_c(&r).len();
            let mut seen = HashSet::new();
            for i in 1..=r.rank() {
                let cell = right_cell(&r, i).unwrap_or_else(|e| panic!("{t} {i}: {e}"));
                if let Some(n) = classical_cell_size(ct, i) {
                    assert_eq!(cell.len(), n, "{t} C_{i}");
                }
                for x in cell.elements {
                    assert!(seen.insert(x));
                }
            }
            assert_eq!(seen.len(), total, "{t}");
        }
        assert_eq!(right_cell(&rs("C4"), 2).unwrap().len(), 7);
    }

    #[test]
    fn translates() {
        let a3 = rs("A3");
        let cell = w0_right_cell(&a3, 1).unwrap();
        let lines: Vec<Vec<i32>> = cell.elements.iter().map(|x| x.one_line().unwrap().entries().to_vec()).collect();
        assert_eq!(lines, vec![vec![3, 2, 1, 4], vec![3, 2, 4, 1], vec![3, 4, 2, 1]]);
        let g2 = rs("G2");
        let c2: HashSet<_> = right_cell(&g2, 2).unwrap().elements.into_iter().collect();
        let w0c1: HashSet<_> = w0_right_cell(&g2, 1).unwrap().elements.into_iter().collect();
        assert_eq!(c2, w0c1);
        let cn = rs("C4");
        let t = w0_right_cell(&cn, 4).unwrap();
        let expected = WeylElement::longest(&cn).multiply(&w(&cn, &[4, 3, 2, 1])).unwrap();
        assert_eq!(t.min_length_elements, vec![expected]);
    }

    #[test]
    fn classification() {
        let f4 = rs("F4");
        assert_eq!(classify(&w(&f4, &[3])), Some((3, Side::Cell)));
        let w0 = WeylElement::longest(&f4);
        assert_eq!(classify(&w0.mul_simple_right(3)), Some((3, Side::W0Cell)));
        assert_eq!(classify(&w0), None);
        assert_eq!(classify(&WeylElement::identity(&f4)), None);
    }

    #[test]
    fn e6_cell_4() {
        let e6 = rs("E6");
        let cell = right_cell(&e6, 4).unwrap();
        let tops: Vec<&[usize]> = cell.max_length_elements.iter().map(|x| x.reduced_word()).collect();
        assert_eq!(tops, vec![&[4, 3, 1][..], &[4, 5, 6][..]]);
        assert_eq!(cell.len(), 6);
    }

    #[test]
    fn invalid_node() {
        assert!(matches!(right_cell(&rs("A3"), 4), Err(Error::InvalidNode { node: 4, rank: 3 })));
        assert!(right_cell(&rs("A3"), 0).is_err());
    }
}
