//! The set-operad `Trias_γ`: words over `{0, …, γ}` with at least one
//! `0`. Enumeration, dimensions, the presentation with the extra
//! generator `⊥`, and an oriented rewrite system certified convergent at
//! desk scale with extended hook trees as normal forms.

use crate::dias::series_div;
use crate::linear::Pattern;
use crate::rewrite::{
    check_confluence, check_termination, normal_form_set, Rule,
};
use crate::syntax::{enumerate_trees, trias_generators, Generator};
use crate::words::{all_words, Word};
use std::collections::HashMap;

use Generator::{Left, Middle, Right};

/// Membership test: at least one occurrence of `0`.
pub fn is_element(w: &Word) -> bool {
    w.count(0) >= 1
}

/// The generating set `{0a, 00, a0 : a ∈ [γ]}`, in lexicographic order.
pub fn generators(gamma: u32) -> Vec<Word> {
    let mut gens = vec![Word::new(gamma, vec![0, 0]).unwrap()];
    for a in 1..=gamma {
        gens.push(Word::new(gamma, vec![0, a]).unwrap());
        gens.push(Word::new(gamma, vec![a, 0]).unwrap());
    }
    gens.sort();
    gens
}

/// All elements of `Trias_γ(n)` in lexicographic order.
pub fn enumerate(gamma: u32, n: u32) -> Vec<Word> {
    all_words(gamma, n as usize).into_iter().filter(is_element).collect()
}

/// `dim Trias_γ(n) = (γ+1)^n − γ^n`.
pub fn dim(gamma: u32, n: u32) -> u64 {
    (gamma as u64 + 1).pow(n) - (gamma as u64).pow(n)
}

/// Coefficients of `t/((1 − γt)(1 − γt − t))` for `n = 1..=max_arity`.
pub fn hilbert_coeffs(gamma: u32, max_arity: u32) -> Vec<u64> {
    let g = gamma as i128;
    // (1 − γt)(1 − (γ+1)t) = 1 − (2γ+1)t + γ(γ+1)t².
    series_div(&[0, 1], &[1, -(2 * g + 1), g * (g + 1)], max_arity)
}

/// The eleven relation families of the `Trias_γ` presentation, as chains
/// of pairwise-equivalent degree-2 patterns `(top, pos, bottom)`.
pub fn relation_families(gamma: u32) -> Vec<(u8, Vec<Vec<Pattern>>)> {
    let mut families = Vec::new();
    // (1) ⊥ ∘_1 ⊥ ↔ ⊥ ∘_2 ⊥
    families.push((1, vec![vec![(Middle, 1, Middle), (Middle, 2, Middle)]]));
    let per_a = |f: &dyn Fn(u32) -> Vec<Pattern>| -> Vec<Vec<_>> {
        (1..=gamma).map(f).collect()
    };
    // (2) ⊣_a ∘_1 ⊥ ↔ ⊥ ∘_2 ⊣_a
    families.push((2, per_a(&|a| vec![(Left(a), 1, Middle), (Middle, 2, Left(a))])));
    // (3) ⊥ ∘_1 ⊢_a ↔ ⊢_a ∘_2 ⊥
    families.push((3, per_a(&|a| vec![(Middle, 1, Right(a)), (Right(a), 2, Middle)])));
    // (4) ⊥ ∘_1 ⊣_a ↔ ⊥ ∘_2 ⊢_a
    families.push((4, per_a(&|a| vec![(Middle, 1, Left(a)), (Middle, 2, Right(a))])));
    // (5) ⊣_a ∘_1 ⊢_{a'} ↔ ⊢_{a'} ∘_2 ⊣_a
    let mut fam5 = Vec::new();
    for a in 1..=gamma {
        for a2 in 1..=gamma {
            fam5.push(vec![(Left(a), 1, Right(a2)), (Right(a2), 2, Left(a))]);
        }
    }
    families.push((5, fam5));
    let mut fam6 = Vec::new();
    let mut fam7 = Vec::new();
    let mut fam8 = Vec::new();
    let mut fam9 = Vec::new();
    for a in 1..=gamma {
        for b in (a + 1)..=gamma {
            // (6) ⊣_a ∘_1 ⊣_b ↔ ⊣_a ∘_2 ⊢_b
            fam6.push(vec![(Left(a), 1, Left(b)), (Left(a), 2, Right(b))]);
            // (7) ⊢_a ∘_1 ⊣_b ↔ ⊢_a ∘_2 ⊢_b
            fam7.push(vec![(Right(a), 1, Left(b)), (Right(a), 2, Right(b))]);
            // (8) ⊣_b ∘_1 ⊣_a ↔ ⊣_a ∘_2 ⊣_b
            fam8.push(vec![(Left(b), 1, Left(a)), (Left(a), 2, Left(b))]);
            // (9) ⊢_a ∘_1 ⊢_b ↔ ⊢_b ∘_2 ⊢_a
            fam9.push(vec![(Right(a), 1, Right(b)), (Right(b), 2, Right(a))]);
        }
    }
    families.push((6, fam6));
    families.push((7, fam7));
    families.push((8, fam8));
    families.push((9, fam9));
    let mut fam10 = Vec::new();
    let mut fam11 = Vec::new();
    for c in 1..=gamma {
        for d in c..=gamma {
            // (10) ⊣_d∘_1⊣_d ↔ ⊣_d∘_2⊥ ↔ ⊣_d∘_2⊣_c ↔ ⊣_d∘_2⊢_c
            fam10.push(vec![
                (Left(d), 1, Left(d)),
                (Left(d), 2, Middle),
                (Left(d), 2, Left(c)),
                (Left(d), 2, Right(c)),
            ]);
            // (11) ⊢_d∘_1⊣_c ↔ ⊢_d∘_1⊢_c ↔ ⊢_d∘_1⊥ ↔ ⊢_d∘_2⊢_d
            fam11.push(vec![
                (Right(d), 1, Left(c)),
                (Right(d), 1, Right(c)),
                (Right(d), 1, Middle),
                (Right(d), 2, Right(d)),
            ]);
        }
    }
    families.push((10, fam10));
    families.push((11, fam11));
    families
}

/// Evaluates a degree-2 pattern to its `Trias_γ` word by composing the
/// generator words `⊣_a ↦ 0a`, `⊥ ↦ 00`, `⊢_a ↦ a0` in `T M_γ`.
pub fn pattern_word(pattern: Pattern, gamma: u32) -> Word {
    let top = pattern.0.word(gamma).unwrap();
    let bottom = pattern.2.word(gamma).unwrap();
    top.compose(pattern.1 as usize, &bottom).unwrap()
}

/// Report of the presentation check: every relation family holds under
/// the word evaluation, and the relation space has the rank that makes
/// the degree-2 quotient match `dim Trias_γ(3)`.
#[derive(Debug, Clone)]
pub struct PresentationReport {
    pub gamma: u32,
    /// Per family: id and whether all members evaluate to equal words.
    pub families: Vec<(u8, bool)>,
    pub free_dim: usize,
    pub relation_rank: usize,
    pub quotient_dim: usize,
    pub expected_dim: u64,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|&(_, ok)| ok)
            && self.quotient_dim as u64 == self.expected_dim
    }
}

/// Verifies the eleven relation families and the degree-2 dimension
/// count.
pub fn check_presentation(gamma: u32) -> PresentationReport {
    let mut families = Vec::new();
    let mut difference_rows = Vec::new();
    for (id, instances) in relation_families(gamma) {
        let mut ok = true;
        for chain in &instances {
            let words: Vec<Word> = chain.iter().map(|&p| pattern_word(p, gamma)).collect();
            if words.windows(2).any(|pair| pair[0] != pair[1]) {
                ok = false;
            }
            for pair in chain.windows(2) {
                difference_rows.push(vec![(pair[0], 1i64), (pair[1], -1i64)]);
            }
        }
        families.push((id, ok));
    }
    let free_dim = 2 * (2 * gamma as usize + 1) * (2 * gamma as usize + 1);
    let relation_rank = crate::linear::pattern_rank(&difference_rows);
    PresentationReport {
        gamma,
        families,
        free_dim,
        relation_rank,
        quotient_dim: free_dim - relation_rank,
        expected_dim: dim(gamma, 3),
    }
}

/// The oriented rewrite rules targeting extended hook normal forms: the
/// nine Dias families plus six families eliminating `⊥` from forbidden
/// positions. Certified convergent by the bounded checks; the orientation
/// of `⊥ ∘_1 ⊣_a → ⊥ ∘_2 ⊢_a` is the one that makes the count of normal
/// forms per arity equal `dim Trias_γ(n)`.
pub fn trias_rules(gamma: u32) -> Vec<Rule> {
    let mut rules = crate::rewrite::dias_rules(gamma);
    let mut push = |family: u8, lhs: (Generator, u8, Generator), rhs: (Generator, u8, Generator)| {
        rules.push(Rule {
            lhs: crate::rewrite::QuadPattern { top: lhs.0, pos: lhs.1, bottom: lhs.2 },
            rhs: crate::rewrite::QuadPattern { top: rhs.0, pos: rhs.1, bottom: rhs.2 },
            family,
        });
    };
    // (10) ⊥ ∘_1 ⊥ → ⊥ ∘_2 ⊥
    push(10, (Middle, 1, Middle), (Middle, 2, Middle));
    for a in 1..=gamma {
        // (11) ⊣_a ∘_1 ⊥ → ⊥ ∘_2 ⊣_a
        push(11, (Left(a), 1, Middle), (Middle, 2, Left(a)));
        // (12) ⊢_a ∘_2 ⊥ → ⊥ ∘_1 ⊢_a
        push(12, (Right(a), 2, Middle), (Middle, 1, Right(a)));
        // (13) ⊥ ∘_1 ⊣_a → ⊥ ∘_2 ⊢_a
        push(13, (Middle, 1, Left(a)), (Middle, 2, Right(a)));
        // (14) ⊣_a ∘_2 ⊥ → ⊣_a ∘_1 ⊣_a
        push(14, (Left(a), 2, Middle), (Left(a), 1, Left(a)));
        // (15) ⊢_a ∘_1 ⊥ → ⊢_a ∘_2 ⊢_a
        push(15, (Right(a), 1, Middle), (Right(a), 2, Right(a)));
    }
    rules
}

/// Convergence and normal-form report for the oriented Trias rules.
#[derive(Debug, Clone)]
pub struct PbwReport {
    pub gamma: u32,
    pub degree_bound: usize,
    pub terminating: bool,
    pub confluent: bool,
    /// Per arity `n ≤ degree_bound + 1`: normal-form count and expected
    /// dimension.
    pub normal_form_counts: Vec<(u32, u64, u64)>,
    /// Every normal form is an extended hook tree and conversely.
    pub normal_forms_are_extended_hooks: bool,
    /// Class count of the undirected closure at arity 3 — the fallback
    /// count that stays authoritative even if an orientation misbehaves.
    pub congruence_classes_arity3: u64,
    pub orientation: &'static str,
}

impl PbwReport {
    pub fn passed(&self) -> bool {
        self.terminating
            && self.confluent
            && self.normal_forms_are_extended_hooks
            && self.normal_form_counts.iter().all(|&(_, got, want)| got == want)
            && self.congruence_classes_arity3 == dim(self.gamma, 3)
    }
}

/// Runs the bounded convergence checks for `trias_rules` and counts
/// normal forms per arity against the dimension formula.
pub fn check_pbw(gamma: u32, degree_bound: usize) -> PbwReport {
    let gens = trias_generators(gamma);
    let rules = trias_rules(gamma);
    let terminating = check_termination(&gens, &rules, degree_bound);
    let confluent = terminating && check_confluence(&gens, &rules, degree_bound);
    let mut counts = Vec::new();
    let mut shapes_ok = true;
    if terminating {
        let mut memo = HashMap::new();
        for degree in 0..=degree_bound {
            let mut normal = 0u64;
            for t in enumerate_trees(&gens, degree) {
                let irreducible = crate::rewrite::rewrite_step(&t, &rules).is_empty();
                if irreducible != t.is_extended_hook() {
                    shapes_ok = false;
                }
                if irreducible {
                    normal += 1;
                }
                // Unique normal form must be the extended hook of the word.
                if confluent {
                    if let Some(set) = normal_form_set(&t, &rules, &mut memo) {
                        let expected =
                            crate::syntax::hookt(&t.wordt(gamma).unwrap()).unwrap();
                        if set.len() != 1 || !set.contains(&expected) {
                            shapes_ok = false;
                        }
                    }
                }
            }
            counts.push((degree as u32 + 1, normal, dim(gamma, degree as u32 + 1)));
        }
    }
    let classes = crate::rewrite::congruence_classes(&gens, &rules, 3);
    PbwReport {
        gamma,
        degree_bound,
        terminating,
        confluent,
        normal_form_counts: counts,
        normal_forms_are_extended_hooks: shapes_ok,
        congruence_classes_arity3: classes.len() as u64,
        orientation: "dias 1-9; M o1 M -> M o2 M; L o1 M -> M o2 L; R o2 M -> M o1 R; \
                      M o1 L -> M o2 R; L o2 M -> L o1 L; R o1 M -> R o2 R",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::hookt;

    fn w(s: &str, gamma: u32) -> Word {
        Word::parse(s, gamma).unwrap()
    }

    #[test]
    fn membership_and_generators() {
        assert!(is_element(&w("00", 2)));
        assert!(!is_element(&w("12", 2)));
        assert_eq!(
            generators(2),
            vec![w("00", 2), w("01", 2), w("02", 2), w("10", 2), w("20", 2)]
        );
        assert_eq!(generators(1), vec![w("00", 1), w("01", 1), w("10", 1)]);
        // Dias generators are a subset.
        for g in crate::dias::generators(2) {
            assert!(generators(2).contains(&g));
        }
    }

    #[test]
    fn displayed_components() {
        let expected: Vec<Word> = ["00", "01", "02", "10", "20"].iter().map(|s| w(s, 2)).collect();
        assert_eq!(enumerate(2, 2), expected);
        assert_eq!(enumerate(2, 3).len(), 19);
        assert_eq!(enumerate(0, 4), vec![w("0000", 0)]);
    }

    #[test]
    fn dimension_sequences() {
        assert_eq!(dim(2, 5), 211);
        // The four sequences, eleven terms each.
        let sequences: [(u32, [u64; 11]); 4] = [
            (1, [1, 3, 7, 15, 31, 63, 127, 255, 511, 1023, 2047]),
            (2, [1, 5, 19, 65, 211, 665, 2059, 6305, 19171, 58025, 175099]),
            (3, [1, 7, 37, 175, 781, 3367, 14197, 58975, 242461, 989527, 4017157]),
            (4, [1, 9, 61, 369, 2101, 11529, 61741, 325089, 1690981, 8717049, 44633821]),
        ];
        for (gamma, expected) in sequences {
            let got: Vec<u64> = (1..=11).map(|n| dim(gamma, n)).collect();
            assert_eq!(got, expected, "gamma={gamma}");
            assert_eq!(hilbert_coeffs(gamma, 11), expected, "gamma={gamma} series");
        }
        for gamma in 0..=4 {
            for n in 1..=7 {
                assert_eq!(enumerate(gamma, n).len() as u64, dim(gamma, n));
            }
            assert_eq!(
                hilbert_coeffs(gamma, 9),
                (1..=9).map(|n| dim(gamma, n)).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn dias_is_suboperad() {
        for gamma in 1..=2 {
            for nx in 1..=3u32 {
                for ny in 1..=3u32 {
                    for x in crate::dias::enumerate(gamma, nx) {
                        for y in crate::dias::enumerate(gamma, ny) {
                            for i in 1..=x.arity() {
                                assert!(is_element(&x.compose(i, &y).unwrap()));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn presentation_families_hold() {
        for gamma in 1..=2 {
            let report = check_presentation(gamma);
            assert!(report.families.iter().all(|&(_, ok)| ok), "gamma={gamma}");
            assert_eq!(report.quotient_dim as u64, dim(gamma, 3));
        }
        let r1 = check_presentation(1);
        assert_eq!(r1.free_dim, 18);
        assert_eq!(r1.relation_rank, 11);
        assert_eq!(r1.quotient_dim, 7);
    }

    #[test]
    fn family_five_specializes_to_dias_family_one() {
        // At a = a' = 1 the words of both sides match the Dias relation.
        let fams = relation_families(1);
        let (_, fam5) = &fams[4];
        let chain = &fam5[0];
        assert_eq!(pattern_word(chain[0], 1), w("101", 1));
        assert_eq!(pattern_word(chain[1], 1), w("101", 1));
    }

    #[test]
    fn pbw_small() {
        let report = check_pbw(1, 3);
        assert!(report.terminating);
        assert!(report.confluent);
        assert!(report.normal_forms_are_extended_hooks);
        assert_eq!(report.normal_form_counts, vec![(1, 1, 1), (2, 3, 3), (3, 7, 7), (4, 15, 15)]);
        let report = check_pbw(2, 3);
        assert!(report.passed());
        assert_eq!(report.normal_form_counts.last(), Some(&(4, 65, 65)));
    }

    #[test]
    fn hookt_images_irreducible() {
        for gamma in 1..=2 {
            let rules = trias_rules(gamma);
            for n in 1..=4 {
                for x in enumerate(gamma, n) {
                    let t = hookt(&x).unwrap();
                    assert!(crate::rewrite::rewrite_step(&t, &rules).is_empty());
                }
            }
        }
    }
}
