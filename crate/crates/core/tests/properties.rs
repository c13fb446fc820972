//! Structural invariants, checked exhaustively at small rank and by random
//! words elsewhere.

use std::sync::Arc;

use proptest::prelude::*;
use weylsmooth::bp;
use weylsmooth::cells;
use weylsmooth::closed_forms;
use weylsmooth::patterns;
use weylsmooth::smoothness;
use weylsmooth::weyl::word_from_inversions;
use weylsmooth::{Root, RootSystem, WeylElement};

const TYPES: [&str; 10] = ["A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "B2"];

fn rs(t: &str) -> Arc<RootSystem> {
    RootSystem::shared(t.parse().unwrap())
}

fn element(t: &str, letters: &[usize]) -> WeylElement {
    let r = rs(t);
    let word: Vec<usize> = letters.iter().map(|x| x % r.rank() + 1).collect();
    WeylElement::from_word(&r, &word).unwrap()
}

fn small_groups() -> Vec<Arc<RootSystem>> {
    ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"].into_iter().map(rs).collect()
}

#[test]
fn roots_are_closed_under_reflection_with_integral_pairings() {
    for t in ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let r = rs(t);
        let positive = r.positive_roots();
        let all: Vec<Root> = positive.iter().cloned().chain(positive.iter().map(Root::neg)).collect();
        for alpha in &all {
            for beta in positive {
                let image = r.reflect(alpha, beta).unwrap();
                assert!(r.is_root(image.coords()), "{t}: s_{beta}({alpha}) = {image}");
            }
            for gamma in &all {
                let doubled = 2 * r.inner(alpha.coords(), gamma.coords());
                assert_eq!(doubled % r.norm(gamma.coords()), 0, "{t}: <{alpha},{gamma}^vee>");
            }
        }
        let simply_laced = r.cartan_type().is_simply_laced();
        assert_eq!(r.highest_root() == r.highest_short_root(), simply_laced, "{t}");
    }
}

#[test]
fn inversion_sets_determine_elements_at_small_rank() {
    for r in small_groups() {
        for w in WeylElement::enumerate_group(&r) {
            let word = word_from_inversions(&r, w.inversion_set()).unwrap();
            assert_eq!(WeylElement::from_word(&r, &word).unwrap(), w);
            assert_eq!(word.len(), w.length());
        }
    }
}

#[test]
fn one_line_round_trip_is_exhaustive_on_b3_c3_d4() {
    for t in ["B3", "C3", "D4"] {
        let r = rs(t);
        for w in WeylElement::enumerate_group(&r) {
            let line = w.one_line().unwrap();
            assert_eq!(WeylElement::from_one_line(&r, &line).unwrap(), w, "{t} {line}");
        }
    }
}

#[test]
fn translated_cell_lengths_are_complementary() {
    for t in ["A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let r = rs(t);
        let w0 = WeylElement::longest(&r);
        for x in cells::enumerate_c(&r) {
            assert_eq!(w0.multiply(&x).unwrap().length(), w0.length() - x.length(), "{t} {x}");
        }
    }
}

#[test]
fn subsystem_engine_matches_type_a_patterns() {
    for t in ["A1", "A2", "A3", "A4"] {
        let r = rs(t);
        for w in WeylElement::enumerate_group(&r) {
            let a = patterns::smooth_type_a(&w).unwrap().smooth;
            let b = bp::smooth_bp(&w, false).unwrap().smooth;
            assert_eq!(a, b, "{t} {w}");
        }
    }
}

#[test]
fn subsystem_engine_is_inverse_invariant() {
    for t in ["A3", "B3", "C3", "D4", "G2"] {
        let r = rs(t);
        for w in WeylElement::enumerate_group(&r) {
            let a = bp::smooth_bp(&w, false).unwrap().smooth;
            let b = bp::smooth_bp(&w.inverse(), false).unwrap().smooth;
            assert_eq!(a, b, "{t} {w}");
        }
    }
}

#[test]
fn restricted_lists_agree_with_subsystems_on_b3_c3_d4() {
    for t in ["B3", "C3", "D4"] {
        let r = rs(t);
        for i in 1..=r.rank() {
            for w in cells::w0_right_cell(&r, i).unwrap().elements {
                let a = patterns::smooth_restricted(&w).unwrap().smooth;
                let b = bp::smooth_bp(&w, false).unwrap().smooth;
                assert_eq!(a, b, "{t} {w}");
            }
        }
    }
}

#[test]
fn unique_minimal_representative_is_smooth_when_any_element_is() {
    for t in ["A3", "A4", "A5", "B3", "B4", "C3", "C4", "D4", "D6", "F4", "G2", "E6"] {
        let r = rs(t);
        for i in 1..=r.rank() {
            let Some(expected) = closed_forms::expected_smooth_set(&r, i).unwrap() else {
                continue;
            };
            let cell = cells::w0_right_cell(&r, i).unwrap();
            if expected.is_empty() || cell.min_length_elements.len() != 1 {
                continue;
            }
            let min = &cell.min_length_elements[0];
            assert!(smoothness::is_smooth(min, false).unwrap().smooth, "{t} node {i}: {min}");
            assert!(expected.contains(min), "{t} node {i}: {min}");
        }
    }
}

proptest! {
    #[test]
    fn group_identities(t in prop::sample::select(TYPES.to_vec()), letters in prop::collection::vec(0usize..8, 0..30)) {
        let w = element(t, &letters);
        let r = w.root_system().clone();
        let w0 = WeylElement::longest(&r);
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(w.inversion_set().len(), w.length());
        prop_assert_eq!(w0.multiply(&w).unwrap().length(), w0.length() - w.length());
        prop_assert_eq!(WeylElement::from_word(&r, w.reduced_word()).unwrap(), w.clone());
        let word = word_from_inversions(&r, w.inversion_set()).unwrap();
        prop_assert_eq!(WeylElement::from_word(&r, &word).unwrap(), w);
    }

    #[test]
    fn descents_match_length_drops(t in prop::sample::select(TYPES.to_vec()), letters in prop::collection::vec(0usize..8, 0..30)) {
        let w = element(t, &letters);
        for i in 1..=w.rank() {
            prop_assert_eq!(w.has_right_descent(i), w.mul_simple_right(i).length() < w.length());
            prop_assert_eq!(w.has_left_descent(i), w.mul_simple_left(i).length() < w.length());
        }
    }

    #[test]
    fn flattening_never_grows(t in prop::sample::select(vec!["B3", "C3", "D4", "F4", "G2", "E6"]), letters in prop::collection::vec(0usize..8, 0..30)) {
        let w = element(t, &letters);
        let r = w.root_system().clone();
        let e = WeylElement::identity(&r);
        let subsystems = bp::stellar_subsystems(&r, false).unwrap();
        for sub in subsystems.iter().step_by(7) {
            prop_assert!(bp::flatten(&e, sub).unwrap().is_identity());
            let f = bp::flatten(&w, sub).unwrap();
            prop_assert!(f.length() <= w.length().min(sub.positive_part.len()));
        }
    }
}
