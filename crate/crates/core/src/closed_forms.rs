//! Closed-form expectations for the smooth part of each translated cell and
//! for the extremal representatives used by the associated-variety module.
//!
//! Every element here is `w0` times a short word unless noted.

use std::sync::Arc;

use crate::cells;
use crate::error::Result;
use crate::rootsys::{Family, RootSystem};
use crate::weyl::WeylElement;

fn down(from: usize, to: usize) -> Vec<usize> {
    (to..=from).rev().collect()
}

fn up(from: usize, to: usize) -> Vec<usize> {
    (from..=to).collect()
}

fn digits(s: &str) -> Vec<usize> {
    s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
}

fn w0_times(rs: &Arc<RootSystem>, word: &[usize]) -> Result<WeylElement> {
    WeylElement::longest(rs).multiply(&WeylElement::from_word(rs, word)?)
}

fn plain(rs: &Arc<RootSystem>, word: &[usize]) -> Result<WeylElement> {
    WeylElement::from_word(rs, word)
}

/// Expected smooth elements of `w0 C_i`; `None` where no closed form is
/// claimed (rank-one A and D3).
pub fn expected_smooth_set(rs: &Arc<RootSystem>, i: usize) -> Result<Option<Vec<WeylElement>>> {
    let ct = rs.cartan_type();
    let n = ct.rank();
    let whole = || -> Result<Vec<WeylElement>> { Ok(cells::w0_right_cell(rs, i)?.elements) };
    let words: Vec<Vec<usize>> = match ct.family() {
        Family::A if n < 2 => return Ok(None),
        Family::A if i == 1 || i == n => return whole().map(Some),
        Family::A => vec![down(i, 1), up(i, n)],
        Family::B if i == 1 => (1..=n).map(|j| [up(1, n), down(n - 1, n - j + 1)].concat()).collect(),
        Family::B if i == n => vec![down(n, 1)],
        Family::B => vec![[up(i, n), down(n - 1, 1)].concat()],
        Family::C if i == 1 => return whole().map(Some),
        Family::C if i == n => vec![down(n, 1)],
        Family::C => vec![down(i, 1), [up(i, n), down(n - 1, 1)].concat()],
        Family::D if n < 4 => return Ok(None),
        Family::D if i == 1 => vec![[up(1, n - 2), vec![n - 1]].concat(), [up(1, n - 2), vec![n]].concat()],
        Family::D if i <= n - 2 => vec![],
        Family::D if n == 4 && i == 3 => vec![digits("321"), digits("324")],
        Family::D if n == 4 => vec![digits("421"), digits("423")],
        Family::D if i == n - 1 => vec![down(n - 1, 1)],
        Family::D => vec![[vec![n], down(n - 2, 1)].concat()],
        Family::E | Family::F => vec![],
        Family::G => {
            let plain_words: &[&str] = if i == 1 { &["2", "21", "212"] } else { &["1", "12"] };
            let set = plain_words.iter().map(|s| plain(rs, &digits(s))).collect::<Result<Vec<_>>>()?;
            return Ok(Some(set));
        }
    };
    let set = words.iter().map(|w| w0_times(rs, w)).collect::<Result<Vec<_>>>()?;
    Ok(Some(set))
}

/// Expected minimal-length element of `w0 C_i` where one is named in closed
/// form.
pub fn expected_min_representative(rs: &Arc<RootSystem>, i: usize) -> Result<Option<WeylElement>> {
    let ct = rs.cartan_type();
    let n = ct.rank();
    let word: Vec<usize> = match ct.family() {
        Family::B | Family::C if i < n => [up(i, n), down(n - 1, 1)].concat(),
        Family::B | Family::C => down(n, 1),
        Family::D if n >= 5 && i == 1 => [up(1, n - 2), vec![n - 1]].concat(),
        Family::D if n >= 5 && i <= n - 2 && n - i >= i => up(i, n - 1),
        Family::D if n >= 5 && i <= n - 2 => down(i, 1),
        Family::D if n >= 5 && i == n - 1 => down(n - 1, 1),
        Family::D if n >= 5 => [vec![n], down(n - 2, 1)].concat(),
        Family::E if n == 6 => digits(["13456", "2456", "3456", "456", "5431", "65431"][i - 1]),
        Family::F => digits(["12321", "2321", "3234", "43234"][i - 1]),
        Family::G => digits(if i == 1 { "12121" } else { "21212" }),
        _ => return Ok(None),
    };
    w0_times(rs, &word).map(Some)
}

/// `w0 s_i`, the claimed unique maximal-length element of `w0 C_i`.
pub fn expected_max_representative(rs: &Arc<RootSystem>, i: usize) -> Result<WeylElement> {
    w0_times(rs, &[i])
}
