//! The named verification suites behind `pluriops verify`. Each check
//! certifies one batch of claims at explicit finite bounds and returns a
//! [`Report`] whose failure list is empty on success.

use crate::report::{Budget, Report};
use crate::words::Word;
use crate::{algebra, dias, linear, rewrite, syntax, trias};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn finish(mut report: Report, start: Instant) -> Report {
    report.wall = start.elapsed();
    report
}

/// Enumeration counts, the closed dimension formula, and the Hilbert
/// series route agree, for both operads.
pub fn check_dims(max_gamma: u32, max_arity: u32) -> Report {
    let start = Instant::now();
    let mut report = Report::new("dims", max_gamma, format!("gamma<={max_gamma} n<={max_arity}"));
    for gamma in 0..=max_gamma {
        let dias_series = dias::hilbert_coeffs(gamma, max_arity);
        let trias_series = trias::hilbert_coeffs(gamma, max_arity);
        for n in 1..=max_arity {
            let enumerated = dias::enumerate(gamma, n).len() as u64;
            report.require(
                enumerated == dias::dim(gamma, n) && dias_series[n as usize - 1] == enumerated,
                format!("dias gamma={gamma} n={n}"),
                enumerated,
                dias::dim(gamma, n),
            );
            let enumerated = trias::enumerate(gamma, n).len() as u64;
            report.require(
                enumerated == trias::dim(gamma, n) && trias_series[n as usize - 1] == enumerated,
                format!("trias gamma={gamma} n={n}"),
                enumerated,
                trias::dim(gamma, n),
            );
        }
    }
    finish(report, start)
}

/// Series, parallel and unit operad axioms: exhaustive on all Dias
/// elements of arity at most 3, then seeded random sampling at larger
/// arities.
pub fn check_dias_axioms(max_gamma: u32, max_arity: u32, seed: u64) -> Report {
    let start = Instant::now();
    let sample_arity = max_arity.min(5);
    let mut report = Report::new(
        "dias-axioms",
        max_gamma,
        format!("exhaustive arity<=3, sampled arity<={sample_arity}, gamma<={max_gamma}"),
    );
    for gamma in 1..=max_gamma.min(2) {
        let words: Vec<Word> = (1..=3).flat_map(|n| dias::enumerate(gamma, n)).collect();
        for x in &words {
            for y in &words {
                for z in &words {
                    axiom_instances(&mut report, x, y, z);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2000 {
        let gamma = rng.gen_range(1..=max_gamma);
        let pick = |rng: &mut ChaCha8Rng, max_n: u32| {
            let n = rng.gen_range(1..=max_n);
            let pool = dias::enumerate(gamma, n);
            pool[rng.gen_range(0..pool.len())].clone()
        };
        let x = pick(&mut rng, sample_arity);
        let y = pick(&mut rng, sample_arity);
        let z = pick(&mut rng, sample_arity);
        axiom_instances(&mut report, &x, &y, &z);
    }
    finish(report, start)
}

fn axiom_instances(report: &mut Report, x: &Word, y: &Word, z: &Word) {
    let n = x.arity();
    let m = y.arity();
    for i in 1..=n {
        for j in 1..=m {
            let lhs = x.compose(i, y).unwrap().compose(i + j - 1, z).unwrap();
            let rhs = x.compose(i, &y.compose(j, z).unwrap()).unwrap();
            report.require(lhs == rhs, format!("series x={x} i={i} y={y} j={j} z={z}"), &lhs, &rhs);
        }
        for j in (i + 1)..=n {
            let lhs = x.compose(i, y).unwrap().compose(j + m - 1, z).unwrap();
            let rhs = x.compose(j, z).unwrap().compose(i, y).unwrap();
            report.require(lhs == rhs, format!("parallel x={x} i={i} j={j}"), &lhs, &rhs);
        }
    }
    let unit = Word::unit(x.gamma());
    report.require(
        unit.compose(1, x).unwrap() == *x,
        format!("left unit x={x}"),
        unit.compose(1, x).unwrap(),
        x,
    );
    for i in 1..=n {
        report.require(
            x.compose(i, &unit).unwrap() == *x,
            format!("right unit x={x} i={i}"),
            x.compose(i, &unit).unwrap(),
            x,
        );
    }
    // Full composition equals the explicit fold.
    let ys: Vec<Word> = (0..n).map(|k| if k % 2 == 0 { y.clone() } else { z.clone() }).collect();
    let mut folded = x.clone();
    for (i, yi) in ys.iter().enumerate().rev() {
        folded = folded.compose(i + 1, yi).unwrap();
    }
    report.require(
        x.full_compose(&ys).unwrap() == folded,
        format!("full composition x={x}"),
        x.full_compose(&ys).unwrap(),
        folded,
    );
}

/// The symmetry group certificate: exactly the identity automorphism and
/// the mirror antiautomorphism survive the bounded search.
pub fn check_symmetries(max_gamma: u32, arity_bound: u32) -> Report {
    let start = Instant::now();
    let mut report =
        Report::new("symmetries", max_gamma, format!("gamma<={max_gamma} arity<={arity_bound}"));
    for gamma in 1..=max_gamma {
        let survivors = dias::symmetry_search(gamma, arity_bound);
        let ok = survivors.len() == 2
            && survivors.iter().any(|s| s.is_identity(gamma))
            && survivors.iter().any(|s| s.is_mirror(gamma));
        report.require(
            ok,
            format!("gamma={gamma}"),
            format!("{} survivors", survivors.len()),
            "{identity, mirror}",
        );
    }
    finish(report, start)
}

/// Bounded basicness: injectivity of every fixed-arguments composition
/// map on small components.
pub fn check_basic(max_gamma: u32) -> Report {
    let start = Instant::now();
    let mut report = Report::new("basic", max_gamma, "n<=3, arity<=3".into());
    for gamma in 1..=max_gamma {
        let arity_bound = if gamma >= 3 { 2 } else { 3 };
        for n in 1..=3 {
            let ok = dias::check_basic(gamma, n, arity_bound);
            report.require(
                ok,
                format!("gamma={gamma} n={n} arity<={arity_bound}"),
                ok,
                true,
            );
        }
    }
    finish(report, start)
}

/// The root-map law and the mirror antiautomorphism law, exhaustive over
/// all compositions up to the arity bound.
pub fn check_rooted(max_gamma: u32, max_arity: u32) -> Report {
    let start = Instant::now();
    let mut report =
        Report::new("rooted", max_gamma, format!("gamma<={max_gamma} arity<={max_arity}"));
    for gamma in 1..=max_gamma {
        for p in 1..=(max_arity - 1) {
            for q in 1..=(max_arity + 1 - p) {
                for x in dias::enumerate(gamma, p) {
                    for y in dias::enumerate(gamma, q) {
                        for i in 1..=x.arity() {
                            let z = x.compose(i, &y).unwrap();
                            let got = dias::root(&z).unwrap();
                            let want = dias::root_law(
                                dias::root(&x).unwrap(),
                                dias::root(&y).unwrap(),
                                i,
                                y.arity(),
                            );
                            report.require(
                                got == want,
                                format!("root x={x} i={i} y={y}"),
                                got,
                                want,
                            );
                            let lhs = z.mirror();
                            let rhs = x
                                .mirror()
                                .compose(x.arity() - i + 1, &y.mirror())
                                .unwrap();
                            report.require(
                                lhs == rhs,
                                format!("mirror x={x} i={i} y={y}"),
                                &lhs,
                                &rhs,
                            );
                        }
                    }
                }
            }
        }
    }
    finish(report, start)
}

/// Convergence of the Dias rewrite system: bounded termination and
/// confluence, every normal form is the hook of the evaluated word, and
/// normal-form counts reproduce the dimensions.
pub fn check_convergence(max_gamma: u32, budget: Budget) -> Report {
    let start = Instant::now();
    let mut report = Report::new("convergence", max_gamma, format!("budget {budget}"));
    for gamma in 1..=max_gamma {
        convergence_at(&mut report, gamma, budget.degree_bound(gamma));
    }
    finish(report, start)
}

/// Convergence with an explicit degree bound instead of a budget preset.
pub fn check_convergence_at(max_gamma: u32, degree_bound: usize) -> Report {
    let start = Instant::now();
    let mut report =
        Report::new("convergence", max_gamma, format!("degree<={degree_bound}"));
    for gamma in 1..=max_gamma {
        convergence_at(&mut report, gamma, degree_bound);
    }
    finish(report, start)
}

fn convergence_at(report: &mut Report, gamma: u32, degree_bound: usize) {
    let gens = syntax::dias_generators(gamma);
    let rules = rewrite::dias_rules(gamma);
    report.require(
        rules.len() == 5 * (gamma * gamma) as usize,
        format!("rule count gamma={gamma}"),
        rules.len(),
        5 * (gamma * gamma) as usize,
    );
    let terminating = rewrite::check_termination(&gens, &rules, degree_bound);
    report.require(terminating, format!("termination gamma={gamma} degree<={degree_bound}"), terminating, true);
    let confluent = rewrite::check_confluence(&gens, &rules, degree_bound);
    report.require(confluent, format!("confluence gamma={gamma} degree<={degree_bound}"), confluent, true);
    if !(terminating && confluent) {
        return;
    }
    for degree in 0..=degree_bound {
        let mut normal_count = 0u64;
        for t in syntax::enumerate_trees(&gens, degree) {
            let nf = match rewrite::normal_form(&t, &rules) {
                Ok(nf) => nf,
                Err(e) => {
                    report.require(false, format!("normal form of {t}"), e, "termination");
                    continue;
                }
            };
            let expected = syntax::hook(&t.word(gamma).unwrap()).unwrap();
            report.require(
                nf == expected,
                format!("nf({t}) = hook(word)"),
                &nf,
                &expected,
            );
            let irreducible = rewrite::rewrite_step(&t, &rules).is_empty();
            report.require(
                irreducible == t.is_hook(),
                format!("irreducible iff hook: {t}"),
                irreducible,
                t.is_hook(),
            );
            if irreducible {
                normal_count += 1;
            }
            // Strategy independence at degree <= 3 keeps the sweep fast.
            if degree <= 3 {
                let outer =
                    rewrite::normal_form_with(&t, &rules, rewrite::Strategy::LeftmostOutermost)
                        .unwrap();
                report.require(outer == nf, format!("strategies agree on {t}"), &outer, &nf);
            }
        }
        report.require(
            normal_count == dias::dim(gamma, degree as u32 + 1),
            format!("normal-form count gamma={gamma} arity={}", degree + 1),
            normal_count,
            dias::dim(gamma, degree as u32 + 1),
        );
    }
    // Congruence classes at arity 3: one hook per class, counts match.
    let classes = rewrite::congruence_classes(&gens, &rules, 3);
    report.require(
        classes.len() as u64 == dias::dim(gamma, 3),
        format!("class count gamma={gamma} arity=3"),
        classes.len(),
        dias::dim(gamma, 3),
    );
    for class in &classes {
        let hooks = class.iter().filter(|t| t.is_hook()).count();
        report.require(hooks == 1, format!("hooks in class of {}", class[0]), hooks, 1);
    }
}

/// K-basis certification: the displayed expansions and compositions, the
/// Möbius round-trip, and the closed-form composition against the
/// bilinear oracle, exhaustively on small arities and on seeded random
/// larger instances.
pub fn check_kbasis(max_gamma: u32, max_arity: u32, seed: u64) -> Report {
    let start = Instant::now();
    let sample_arity = max_arity.min(5);
    let mut report = Report::new(
        "kbasis",
        max_gamma,
        format!("exhaustive (2,2),(2,3),(3,2) gamma<=3, 1000 random arity<={sample_arity}"),
    );
    let displayed = [
        ("102", 2, "102 - 202"),
        ("102", 3, "102 - 103 - 202 + 203"),
        ("102", 4, "102 - 103 - 202 + 203"),
        ("23102", 3, "23102 - 23103 - 23202 + 23203 - 33102 + 33103 + 33202 - 33203"),
    ];
    for (word, gamma, expansion) in displayed {
        let got = linear::k_of_word(&Word::parse(word, gamma).unwrap()).unwrap().to_string();
        report.require(got == expansion, format!("K^({gamma})_{word}"), &got, expansion);
    }
    let x = Word::parse("20413", 5).unwrap();
    let y = Word::parse("304", 5).unwrap();
    let composed: Vec<String> =
        (1..=5).map(|i| linear::k_compose(&x, i, &y).unwrap().to_string()).collect();
    let expected = ["3240413", "2304413", "0", "2043143", "2041334 + 2041344 + 2041354"];
    for (i, (got, want)) in composed.iter().zip(expected).enumerate() {
        report.require(got == want, format!("K_20413 o_{} K_304", i + 1), got, want);
    }
    for gamma in 1..=max_gamma.min(3) {
        for (nx, ny) in [(2u32, 2u32), (2, 3), (3, 2)] {
            for x in dias::enumerate(gamma, nx) {
                for y in dias::enumerate(gamma, ny) {
                    for i in 1..=x.arity() {
                        kbasis_instance(&mut report, &x, i, &y);
                    }
                }
            }
        }
        // Möbius round-trip.
        for n in 1..=sample_arity {
            for x in dias::enumerate(gamma, n) {
                let back = linear::k_comb_to_words(&linear::word_as_k_sum(&x).unwrap()).unwrap();
                report.require(
                    back == linear::LinComb::from_word(&x).unwrap(),
                    format!("roundtrip {x}"),
                    back,
                    &x,
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let gamma = rng.gen_range(1..=max_gamma.min(3));
        let nx = rng.gen_range(2..=sample_arity);
        let ny = rng.gen_range(2..=sample_arity);
        let xs = dias::enumerate(gamma, nx);
        let ys = dias::enumerate(gamma, ny);
        let x = xs[rng.gen_range(0..xs.len())].clone();
        let y = ys[rng.gen_range(0..ys.len())].clone();
        let i = rng.gen_range(1..=x.arity());
        kbasis_instance(&mut report, &x, i, &y);
    }
    finish(report, start)
}

fn kbasis_instance(report: &mut Report, x: &Word, i: usize, y: &Word) {
    let direct = linear::k_comb_to_words(&linear::k_compose(x, i, y).unwrap()).unwrap();
    let oracle =
        linear::lin_compose(&linear::k_of_word(x).unwrap(), i, &linear::k_of_word(y).unwrap())
            .unwrap();
    report.require(direct == oracle, format!("K compose x={x} i={i} y={y}"), direct, oracle);
    let structure_ok =
        linear::k_compose(x, i, y).unwrap().terms().all(|(_, c)| num::One::is_one(c));
    report.require(structure_ok, format!("structure constants x={x} i={i} y={y}"), structure_ok, true);
}

/// The alternative presentation: all thirteen families vanish and the
/// relation space has rank `5γ²`.
pub fn check_alt_presentation(max_gamma: u32) -> Report {
    let start = Instant::now();
    let mut report = Report::new("alt-presentation", max_gamma, format!("gamma<={max_gamma}"));
    for gamma in 1..=max_gamma.min(4) {
        let result = linear::check_alternative_presentation(gamma);
        for (family, ok) in &result.families_zero {
            report.require(*ok, format!("gamma={gamma} family {family}"), ok, true);
        }
        report.require(
            result.rank == result.expected_rank,
            format!("gamma={gamma} rank"),
            result.rank,
            result.expected_rank,
        );
    }
    finish(report, start)
}

/// The concise Dias presentation and the Trias presentation: relations
/// vanish, ranks and quotient dimensions come out right.
pub fn check_presentation(max_gamma: u32) -> Report {
    let start = Instant::now();
    let mut report = Report::new("presentation", max_gamma, format!("gamma<={max_gamma}"));
    for gamma in 1..=max_gamma.min(4) {
        let concise = linear::check_concise_presentation(gamma);
        for (family, ok) in &concise.families_zero {
            report.require(*ok, format!("dias gamma={gamma} family {family}"), ok, true);
        }
        report.require(
            concise.rank == concise.expected_rank,
            format!("dias gamma={gamma} rank"),
            concise.rank,
            concise.expected_rank,
        );
    }
    for gamma in 1..=max_gamma.min(4) {
        let result = trias::check_presentation(gamma);
        for (family, ok) in &result.families {
            report.require(*ok, format!("trias gamma={gamma} family {family}"), ok, true);
        }
        report.require(
            result.quotient_dim as u64 == result.expected_dim,
            format!("trias gamma={gamma} quotient dimension"),
            result.quotient_dim,
            result.expected_dim,
        );
    }
    finish(report, start)
}

/// Trias PBW certification: the oriented rules are convergent at the
/// budgeted degree, normal forms are exactly the extended hooks, and the
/// counts per arity equal the dimensions.
pub fn check_pbw(max_gamma: u32, budget: Budget) -> Report {
    let start = Instant::now();
    let mut report = Report::new("pbw", max_gamma, format!("budget {budget}"));
    for gamma in 1..=max_gamma.min(4) {
        pbw_at(&mut report, gamma, budget.degree_bound(gamma));
    }
    finish(report, start)
}

/// PBW certification with an explicit degree bound.
pub fn check_pbw_at(max_gamma: u32, degree_bound: usize) -> Report {
    let start = Instant::now();
    let mut report = Report::new("pbw", max_gamma, format!("degree<={degree_bound}"));
    for gamma in 1..=max_gamma.min(4) {
        pbw_at(&mut report, gamma, degree_bound);
    }
    finish(report, start)
}

fn pbw_at(report: &mut Report, gamma: u32, degree_bound: usize) {
    let result = trias::check_pbw(gamma, degree_bound);
    report.require(result.terminating, format!("termination gamma={gamma}"), result.terminating, true);
    report.require(result.confluent, format!("confluence gamma={gamma}"), result.confluent, true);
    report.require(
        result.normal_forms_are_extended_hooks,
        format!("normal forms = extended hooks gamma={gamma}"),
        result.normal_forms_are_extended_hooks,
        true,
    );
    for (arity, got, want) in &result.normal_form_counts {
        report.require(
            got == want,
            format!("normal-form count gamma={gamma} arity={arity}"),
            got,
            want,
        );
    }
    // hookt images are irreducible.
    let rules = trias::trias_rules(gamma);
    for n in 1..=(degree_bound as u32 + 1).min(4) {
        for x in trias::enumerate(gamma, n) {
            let t = syntax::hookt(&x).unwrap();
            let irreducible = rewrite::rewrite_step(&t, &rules).is_empty();
            report.require(irreducible, format!("hookt({x}) irreducible"), irreducible, true);
        }
    }
}

/// Construction-M certification across the five instance algebras:
/// interface laws, the pluriassociative relations, unit structure, and
/// the agreement of `M(free words)` with the direct free operations.
pub fn check_algebras(max_gamma: u32) -> Report {
    let start = Instant::now();
    let gamma = max_gamma.clamp(2, 3);
    let mut report = Report::new("algebras", gamma, format!("gamma={gamma}, bounded universes"));

    let pos = algebra::PosAlgebra { gamma };
    let pos_universe = algebra::universes::pos(6);
    report.count(1);
    if let Some(v) = algebra::check_multiproj_interface(&pos, &pos_universe).first() {
        report.require(false, "pos interface", v, "no violation");
    }
    if let Some(v) =
        algebra::check_pluri_relations(&algebra::MConstruction(pos), &pos_universe).first()
    {
        report.require(false, "pos relations", v, "no violation");
    }

    let sets = algebra::SetsAlgebra { gamma };
    let sets_universe = algebra::universes::sets(gamma);
    report.count(1);
    if let Some(v) = algebra::check_multiproj_interface(&sets, &sets_universe).first() {
        report.require(false, "sets interface", v, "no violation");
    }
    if let Some(v) =
        algebra::check_pluri_relations(&algebra::MConstruction(sets), &sets_universe).first()
    {
        report.require(false, "sets relations", v, "no violation");
    }

    let words = algebra::WordsAlgebra { gamma };
    let words_universe = algebra::universes::words(gamma.min(2), 2);
    report.count(1);
    if let Some(v) = algebra::check_multiproj_interface(&words, &words_universe).first() {
        report.require(false, "words interface", v, "no violation");
    }
    if let Some(v) =
        algebra::check_pluri_relations(&algebra::MConstruction(words), &words_universe).first()
    {
        report.require(false, "words relations", v, "no violation");
    }

    let mwords = algebra::MWordsAlgebra { gamma: gamma.min(2) };
    let mwords_universe = algebra::universes::mwords(gamma.min(2), 2);
    report.count(1);
    if let Some(v) = algebra::check_multiproj_interface(&mwords, &mwords_universe).first() {
        report.require(false, "mwords interface", v, "no violation");
    }
    if let Some(v) =
        algebra::check_pluri_relations(&algebra::MConstruction(mwords), &mwords_universe).first()
    {
        report.require(false, "mwords relations", v, "no violation");
    }
    for x in &mwords_universe {
        for y in &mwords_universe {
            for a in 1..=mwords.gamma {
                use crate::algebra::Multiproj;
                let u = mwords.star(a, x, y);
                report.require(u.marks_uniform(), format!("marks uniform {x} *_{a} {y}"), &u, "uniform");
            }
        }
    }

    let free = algebra::FreeWordsAlgebra { gamma: gamma.min(2) };
    let free_universe = algebra::universes::free_words(gamma.min(2), 2);
    report.count(1);
    if let Some(v) = algebra::check_multiproj_interface(&free, &free_universe).first() {
        report.require(false, "free-words interface", v, "no violation");
    }
    let free_construction = algebra::MConstruction(free);
    let dias_universe = algebra::universes::dias_words(gamma.min(2), 3);
    if let Some(v) = algebra::check_pluri_relations(&free_construction, &dias_universe).first() {
        report.require(false, "free-words relations", v, "no violation");
    }
    use crate::algebra::Pluri;
    for u in &dias_universe {
        for v in &dias_universe {
            for a in 1..=free_construction.gamma() {
                report.require(
                    free_construction.dashv(a, u, v) == algebra::free_dashv(a, u, v).unwrap(),
                    format!("M(free) dashv a={a} u={u} v={v}"),
                    free_construction.dashv(a, u, v),
                    algebra::free_dashv(a, u, v).unwrap(),
                );
                report.require(
                    free_construction.vdash(a, u, v) == algebra::free_vdash(a, u, v).unwrap(),
                    format!("M(free) vdash a={a} u={u} v={v}"),
                    free_construction.vdash(a, u, v),
                    algebra::free_vdash(a, u, v).unwrap(),
                );
            }
        }
    }

    // Unit propositions: Sets and Words pass, Pos is the negative control.
    let sets2 = algebra::SetsAlgebra { gamma: 2 };
    let sets2_universe = algebra::universes::sets(2);
    let wire = algebra::check_wire_unit_props(&algebra::MConstruction(sets2), &sets2_universe);
    report.require(wire.all_passed(), "wire-unit proposition on M(Sets)", format!("{wire:?}"), "all clauses pass");
    let multi = algebra::check_multiassoc_unit_props(&sets2, &sets2_universe);
    report.require(multi.all_passed(), "multiassociative units on Sets", format!("{multi:?}"), "all clauses pass");
    let m_sets = algebra::check_m_construction_props(&sets2, &sets2_universe);
    report.require(m_sets.all_passed(), "construction-M proposition on Sets", format!("{m_sets:?}"), "all clauses pass");
    let words2 = algebra::WordsAlgebra { gamma: 2 };
    let words2_universe = algebra::universes::words(2, 2);
    let m_words = algebra::check_m_construction_props(&words2, &words2_universe);
    report.require(m_words.all_passed(), "construction-M proposition on Words", format!("{m_words:?}"), "all clauses pass");
    let pos3 = algebra::PosAlgebra { gamma: 3 };
    let m_pos = algebra::check_m_construction_props(&pos3, &algebra::universes::pos(6));
    let clause_ii_failed = m_pos
        .clauses
        .iter()
        .find(|c| c.name.starts_with("(ii)"))
        .map(|c| !c.passed)
        .unwrap_or(false);
    report.require(
        clause_ii_failed && !m_pos.clauses[0].passed,
        "Pos negative control: clause (ii) fails without unitality",
        format!("{m_pos:?}"),
        "clause (ii) fails",
    );

    // Commutativity transfer.
    report.require(
        algebra::is_commutative(&algebra::MConstruction(algebra::PosAlgebra { gamma }), &pos_universe),
        "M(Pos) commutative",
        true,
        true,
    );
    report.require(
        algebra::is_commutative(&algebra::MConstruction(algebra::SetsAlgebra { gamma }), &sets_universe),
        "M(Sets) commutative",
        true,
        true,
    );
    finish(report, start)
}

/// Every suite at its budgeted bounds, in a fixed order. `gamma` caps the
/// parameter sweep; each check may clamp it further where its own bounds
/// ask for less.
pub fn verify_all(gamma: u32, budget: Budget, seed: u64) -> Vec<Report> {
    let arity = budget.max_arity();
    vec![
        check_dims(gamma, arity),
        check_dias_axioms(gamma, arity, seed),
        check_symmetries(gamma.min(3), 3),
        check_basic(gamma.min(2)),
        check_rooted(gamma.min(3), 4),
        check_convergence(gamma.min(4), budget),
        check_kbasis(gamma.min(3), arity, seed),
        check_alt_presentation(gamma.min(4)),
        check_presentation(gamma.min(4)),
        check_pbw(gamma.min(4), budget),
        check_algebras(gamma.min(3)),
    ]
}

/// Look up a single named check.
pub fn run_check(name: &str, gamma: u32, budget: Budget, seed: u64) -> Option<Vec<Report>> {
    let arity = budget.max_arity();
    let reports = match name {
        "dims" => vec![check_dims(gamma, arity)],
        "dias-axioms" => vec![check_dias_axioms(gamma, arity, seed)],
        "symmetries" => vec![check_symmetries(gamma.min(3), 3)],
        "basic" => vec![check_basic(gamma.min(2))],
        "rooted" => vec![check_rooted(gamma.min(3), 4)],
        "convergence" => vec![check_convergence(gamma.min(4), budget)],
        "kbasis" => vec![check_kbasis(gamma.min(3), arity, seed)],
        "alt-presentation" => vec![check_alt_presentation(gamma.min(4))],
        "presentation" => vec![check_presentation(gamma.min(4))],
        "pbw" => vec![check_pbw(gamma.min(4), budget)],
        "algebras" => vec![check_algebras(gamma.min(3))],
        "all" => verify_all(gamma, budget, seed),
        _ => return None,
    };
    Some(reports)
}
