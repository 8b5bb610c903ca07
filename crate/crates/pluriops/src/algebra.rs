//! Pluriassociative algebras: the free algebra on one generator, bar- and
//! wire-units with their halos, multiassociative and multiprojection
//! algebra interfaces, the construction `M`, and the example algebras
//! `Pos`, `Sets`, `Words`, `MWords` and free words.

use crate::words::{max_join, Word};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A `γ`-pluriassociative algebra: `2γ` binary operations `⊣_a`, `⊢_a`
/// subject to the five concise relation families.
pub trait Pluri {
    type Elem: Clone + Eq + Ord + fmt::Debug;
    fn gamma(&self) -> u32;
    fn dashv(&self, a: u32, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn vdash(&self, a: u32, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

/// A `γ`-multiprojection algebra: `γ` associative products `★_a` obeying
/// the dominant-index law, plus endomorphisms `π_a` with
/// `π_a ∘ π_{a'} = π_{a↑a'}`.
pub trait Multiproj {
    type Elem: Clone + Eq + Ord + fmt::Debug;
    fn gamma(&self) -> u32;
    fn star(&self, a: u32, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn proj(&self, a: u32, x: &Self::Elem) -> Self::Elem;
}

/// The construction `M`: `x ⊣_a y := x ★_a π_a(y)` and
/// `x ⊢_a y := π_a(x) ★_a y`.
#[derive(Debug, Clone)]
pub struct MConstruction<M>(pub M);

impl<M: Multiproj> Pluri for MConstruction<M> {
    type Elem = M::Elem;

    fn gamma(&self) -> u32 {
        self.0.gamma()
    }

    fn dashv(&self, a: u32, x: &M::Elem, y: &M::Elem) -> M::Elem {
        self.0.star(a, x, &self.0.proj(a, y))
    }

    fn vdash(&self, a: u32, x: &M::Elem, y: &M::Elem) -> M::Elem {
        self.0.star(a, &self.0.proj(a, x), y)
    }
}

/// `h_a`: replaces every letter smaller than `a` by `a` (the `0`
/// included), i.e. the pointwise join with `a`.
pub fn h_endo(a: u32, w: &Word) -> Word {
    let letters = w.letters().iter().map(|&l| max_join(a, l)).collect();
    Word::new(w.gamma(), letters).unwrap()
}

/// `u ⊣_a v := u h_a(v)` on the free algebra of one-zero words.
pub fn free_dashv(a: u32, u: &Word, v: &Word) -> Result<Word> {
    u.concat(&h_endo(a, v))
}

/// `u ⊢_a v := h_a(u) v`.
pub fn free_vdash(a: u32, u: &Word, v: &Word) -> Result<Word> {
    h_endo(a, u).concat(v)
}

/// The free pluriassociative algebra over one generator, as the
/// construction `M` applied to all words over `{0, …, γ}` with
/// concatenation and the endomorphisms `h_a`.
#[derive(Debug, Clone, Copy)]
pub struct FreeWordsAlgebra {
    pub gamma: u32,
}

impl Multiproj for FreeWordsAlgebra {
    type Elem = Word;

    fn gamma(&self) -> u32 {
        self.gamma
    }

    fn star(&self, _a: u32, x: &Word, y: &Word) -> Word {
        x.concat(y).unwrap()
    }

    fn proj(&self, a: u32, x: &Word) -> Word {
        h_endo(a, x)
    }
}

/// Positive integers with every product equal to `max` and
/// `π_a(x) = a ↑ x`.
#[derive(Debug, Clone, Copy)]
pub struct PosAlgebra {
    pub gamma: u32,
}

impl Multiproj for PosAlgebra {
    type Elem = u32;

    fn gamma(&self) -> u32 {
        self.gamma
    }

    fn star(&self, _a: u32, x: &u32, y: &u32) -> u32 {
        *x.max(y)
    }

    fn proj(&self, a: u32, x: &u32) -> u32 {
        a.max(*x)
    }
}

/// Finite sets of positive integers with union and
/// `π_a(x) = x ∩ [a, γ]`.
#[derive(Debug, Clone, Copy)]
pub struct SetsAlgebra {
    pub gamma: u32,
}

impl Multiproj for SetsAlgebra {
    type Elem = BTreeSet<u32>;

    fn gamma(&self) -> u32 {
        self.gamma
    }

    fn star(&self, _a: u32, x: &BTreeSet<u32>, y: &BTreeSet<u32>) -> BTreeSet<u32> {
        x.union(y).copied().collect()
    }

    fn proj(&self, a: u32, x: &BTreeSet<u32>) -> BTreeSet<u32> {
        x.iter().copied().filter(|&v| v >= a && v <= self.gamma).collect()
    }
}

/// Words of positive integers with concatenation; `π_a` keeps the longest
/// subword of letters at least `a`.
#[derive(Debug, Clone, Copy)]
pub struct WordsAlgebra {
    pub gamma: u32,
}

impl Multiproj for WordsAlgebra {
    type Elem = Vec<u32>;

    fn gamma(&self) -> u32 {
        self.gamma
    }

    fn star(&self, _a: u32, x: &Vec<u32>, y: &Vec<u32>) -> Vec<u32> {
        let mut out = x.clone();
        out.extend_from_slice(y);
        out
    }

    fn proj(&self, a: u32, x: &Vec<u32>) -> Vec<u32> {
        x.iter().copied().filter(|&l| l >= a).collect()
    }
}

/// A word of positive integers whose letters can be marked, with at least
/// one marked letter. Textual form: letters joined by spaces, marked
/// letters suffixed with `!`, e.g. `3 2! 5`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MWord(Vec<(u32, bool)>);

impl MWord {
    pub fn new(letters: Vec<(u32, bool)>) -> Result<MWord> {
        if letters.is_empty() || !letters.iter().any(|&(_, marked)| marked) {
            return Err(Error::ParseWord("marked word needs at least one marked letter".into()));
        }
        Ok(MWord(letters))
    }

    /// Greatest value among the marked letters.
    pub fn max_marked(&self) -> u32 {
        self.0.iter().filter(|&&(_, m)| m).map(|&(v, _)| v).max().unwrap()
    }

    /// All marked letters carry the same value, the invariant restored by
    /// every `★_a`.
    pub fn marks_uniform(&self) -> bool {
        let mut values = self.0.iter().filter(|&&(_, m)| m).map(|&(v, _)| v);
        let first = values.next();
        values.all(|v| Some(v) == first)
    }

    pub fn letters(&self) -> &[(u32, bool)] {
        &self.0
    }

    pub fn parse(s: &str) -> Result<MWord> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let (digits, marked) = match token.strip_suffix('!') {
                Some(d) => (d, true),
                None => (token, false),
            };
            let value: u32 =
                digits.parse().map_err(|_| Error::ParseWord(s.to_string()))?;
            letters.push((value, marked));
        }
        MWord::new(letters)
    }
}

impl fmt::Display for MWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, m)| if m { format!("{v}!") } else { v.to_string() })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Marked words: `★_a` concatenates and re-marks every marked letter with
/// `max(u) ↑ a ↑ max(v)`; `π_a` lifts nonmarked letters below `a` to `a`.
#[derive(Debug, Clone, Copy)]
pub struct MWordsAlgebra {
    pub gamma: u32,
}

impl Multiproj for MWordsAlgebra {
    type Elem = MWord;

    fn gamma(&self) -> u32 {
        self.gamma
    }

    fn star(&self, a: u32, x: &MWord, y: &MWord) -> MWord {
        let c = x.max_marked().max(a).max(y.max_marked());
        let letters = x
            .0
            .iter()
            .chain(y.0.iter())
            .map(|&(v, m)| if m { (c, true) } else { (v, false) })
            .collect();
        MWord(letters)
    }

    fn proj(&self, a: u32, x: &MWord) -> MWord {
        MWord(
            x.0.iter()
                .map(|&(v, m)| if m { (v, true) } else { (v.max(a), false) })
                .collect(),
        )
    }
}

/// A reported counterexample: which law broke and on which inputs.
#[derive(Debug, Clone)]
pub struct Violation {
    pub law: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {} != {}", self.law, self.inputs, self.lhs, self.rhs)
    }
}

/// Checks the multiassociative law, the projection composition law, and
/// that each `π_a` is an endomorphism, over all triples of the universe.
pub fn check_multiproj_interface<M: Multiproj>(m: &M, universe: &[M::Elem]) -> Vec<Violation> {
    let gamma = m.gamma();
    let mut violations = Vec::new();
    for x in universe {
        for y in universe {
            for z in universe {
                for b in 1..=gamma {
                    // All placements of a dominated index agree.
                    let reference = m.star(b, &m.star(b, x, y), z);
                    for a in 1..=b {
                        let candidates = [
                            ("(x*_a y)*_b z", m.star(b, &m.star(a, x, y), z)),
                            ("(x*_b y)*_a z", m.star(a, &m.star(b, x, y), z)),
                            ("x*_a (y*_b z)", m.star(a, x, &m.star(b, y, z))),
                            ("x*_b (y*_a z)", m.star(b, x, &m.star(a, y, z))),
                        ];
                        for (label, value) in candidates {
                            if value != reference {
                                violations.push(Violation {
                                    law: format!("multiassociativity {label}"),
                                    inputs: format!("a={a} b={b} x={x:?} y={y:?} z={z:?}"),
                                    lhs: format!("{value:?}"),
                                    rhs: format!("{reference:?}"),
                                });
                            }
                        }
                    }
                }
            }
        }
        for a in 1..=gamma {
            for a2 in 1..=gamma {
                let lhs = m.proj(a, &m.proj(a2, x));
                let rhs = m.proj(max_join(a, a2), x);
                if lhs != rhs {
                    violations.push(Violation {
                        law: "projection composition".into(),
                        inputs: format!("a={a} a'={a2} x={x:?}"),
                        lhs: format!("{lhs:?}"),
                        rhs: format!("{rhs:?}"),
                    });
                }
            }
        }
    }
    for x in universe {
        for y in universe {
            for a in 1..=gamma {
                for b in 1..=gamma {
                    let lhs = m.proj(a, &m.star(b, x, y));
                    let rhs = m.star(b, &m.proj(a, x), &m.proj(a, y));
                    if lhs != rhs {
                        violations.push(Violation {
                            law: "projection endomorphism".into(),
                            inputs: format!("a={a} b={b} x={x:?} y={y:?}"),
                            lhs: format!("{lhs:?}"),
                            rhs: format!("{rhs:?}"),
                        });
                    }
                }
            }
        }
    }
    violations
}

/// Evaluates the five concise relation families on every triple of the
/// universe and every pair of indices, reporting violations.
pub fn check_pluri_relations<P: Pluri>(p: &P, universe: &[P::Elem]) -> Vec<Violation> {
    let gamma = p.gamma();
    let mut violations = Vec::new();
    let check = |family: &str,
                     lhs: P::Elem,
                     rhs: P::Elem,
                     inputs: String,
                     out: &mut Vec<Violation>| {
        if lhs != rhs {
            out.push(Violation {
                law: format!("relation {family}"),
                inputs,
                lhs: format!("{lhs:?}"),
                rhs: format!("{rhs:?}"),
            });
        }
    };
    for x in universe {
        for y in universe {
            for z in universe {
                for a in 1..=gamma {
                    for a2 in 1..=gamma {
                        let j = a.max(a2);
                        let inputs = format!("a={a} a'={a2} x={x:?} y={y:?} z={z:?}");
                        // (1) (x ⊢_{a'} y) ⊣_a z = x ⊢_{a'} (y ⊣_a z)
                        check(
                            "1",
                            p.dashv(a, &p.vdash(a2, x, y), z),
                            p.vdash(a2, x, &p.dashv(a, y, z)),
                            inputs.clone(),
                            &mut violations,
                        );
                        // (2) (x ⊣_{a↑a'} y) ⊣_a z = x ⊣_a (y ⊢_{a'} z)
                        check(
                            "2",
                            p.dashv(a, &p.dashv(j, x, y), z),
                            p.dashv(a, x, &p.vdash(a2, y, z)),
                            inputs.clone(),
                            &mut violations,
                        );
                        // (3) (x ⊣_{a'} y) ⊢_a z = x ⊢_a (y ⊢_{a↑a'} z)
                        check(
                            "3",
                            p.vdash(a, &p.dashv(a2, x, y), z),
                            p.vdash(a, x, &p.vdash(j, y, z)),
                            inputs.clone(),
                            &mut violations,
                        );
                        // (4) (x ⊣_a y) ⊣_{a↑a'} z = x ⊣_a (y ⊣_{a'} z)
                        check(
                            "4",
                            p.dashv(j, &p.dashv(a, x, y), z),
                            p.dashv(a, x, &p.dashv(a2, y, z)),
                            inputs.clone(),
                            &mut violations,
                        );
                        // (5) (x ⊢_{a'} y) ⊢_a z = x ⊢_{a↑a'} (y ⊢_a z)
                        check(
                            "5",
                            p.vdash(a, &p.vdash(a2, x, y), z),
                            p.vdash(j, x, &p.vdash(a, y, z)),
                            inputs,
                            &mut violations,
                        );
                    }
                }
            }
        }
    }
    violations
}

/// `e` is an `a`-bar-unit if `x ⊣_a e = x = e ⊢_a x` for every `x` of the
/// universe.
pub fn is_bar_unit<P: Pluri>(p: &P, e: &P::Elem, a: u32, universe: &[P::Elem]) -> bool {
    universe
        .iter()
        .all(|x| p.dashv(a, x, e) == *x && p.vdash(a, e, x) == *x)
}

/// `e` is an `a`-wire-unit if `e ⊣_a x = x = x ⊢_a e` for every `x`.
pub fn is_wire_unit<P: Pluri>(p: &P, e: &P::Elem, a: u32, universe: &[P::Elem]) -> bool {
    universe
        .iter()
        .all(|x| p.dashv(a, e, x) == *x && p.vdash(a, x, e) == *x)
}

/// The `a`-halo: all `a`-bar-units found in the universe.
pub fn halo<P: Pluri>(p: &P, a: u32, universe: &[P::Elem]) -> Vec<P::Elem> {
    universe.iter().filter(|e| is_bar_unit(p, e, a, universe)).cloned().collect()
}

/// All wire-units in the universe, each with the set of indices it serves.
pub fn wire_units<P: Pluri>(p: &P, universe: &[P::Elem]) -> Vec<(P::Elem, Vec<u32>)> {
    universe
        .iter()
        .filter_map(|e| {
            let indices: Vec<u32> =
                (1..=p.gamma()).filter(|&a| is_wire_unit(p, e, a, universe)).collect();
            if indices.is_empty() {
                None
            } else {
                Some((e.clone(), indices))
            }
        })
        .collect()
}

/// Height: `0` without a wire-unit, otherwise the greatest `h` such that
/// the wire-unit is an `h`-wire-unit.
pub fn height<P: Pluri>(p: &P, universe: &[P::Elem]) -> u32 {
    wire_units(p, universe)
        .iter()
        .flat_map(|(_, indices)| indices.iter().copied())
        .max()
        .unwrap_or(0)
}

/// Units of a multiassociative algebra (`1 ★_a x = x = x ★_a 1`), with
/// their index sets.
pub fn multiassoc_units<M: Multiproj>(m: &M, universe: &[M::Elem]) -> Vec<(M::Elem, Vec<u32>)> {
    universe
        .iter()
        .filter_map(|e| {
            let indices: Vec<u32> = (1..=m.gamma())
                .filter(|&a| {
                    universe.iter().all(|x| m.star(a, e, x) == *x && m.star(a, x, e) == *x)
                })
                .collect();
            if indices.is_empty() {
                None
            } else {
                Some((e.clone(), indices))
            }
        })
        .collect()
}

/// Height of `M` as a multiassociative algebra on the universe.
pub fn multiassoc_height<M: Multiproj>(m: &M, universe: &[M::Elem]) -> u32 {
    multiassoc_units(m, universe)
        .iter()
        .flat_map(|(_, idx)| idx.iter().copied())
        .max()
        .unwrap_or(0)
}

/// One clause outcome: name, pass/fail, and a note when it fails or is
/// vacuous.
#[derive(Debug, Clone)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub note: String,
}

/// Report for one of the unit propositions, clause by clause.
#[derive(Debug, Clone)]
pub struct UnitPropReport {
    pub subject: String,
    pub clauses: Vec<Clause>,
}

impl UnitPropReport {
    pub fn all_passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// Clauses (i)–(iv) about a pluriassociative algebra with a `b`-wire-unit:
/// operation collapse below `b`, wire-unit downward closure, uniqueness,
/// and absorption of bar-units.
pub fn check_wire_unit_props<P: Pluri>(p: &P, universe: &[P::Elem]) -> UnitPropReport {
    let mut clauses = Vec::new();
    let units = wire_units(p, universe);
    let Some((e, indices)) = units.first() else {
        return UnitPropReport {
            subject: "wire-unit proposition".into(),
            clauses: vec![Clause {
                name: "hypothesis".into(),
                passed: false,
                note: "no wire-unit in the universe".into(),
            }],
        };
    };
    let b = *indices.iter().max().unwrap();
    // (i) for all a in [b], the four operations with index a or b agree.
    let mut ops_equal = true;
    for a in 1..=b {
        for x in universe {
            for y in universe {
                let reference = p.dashv(b, x, y);
                if p.dashv(a, x, y) != reference
                    || p.vdash(a, x, y) != reference
                    || p.vdash(b, x, y) != reference
                {
                    ops_equal = false;
                }
            }
        }
    }
    clauses.push(Clause {
        name: "(i) operations collapse below b".into(),
        passed: ops_equal,
        note: format!("b={b}"),
    });
    // (ii) e is an a-wire-unit for all a in [b].
    let downward = (1..=b).all(|a| is_wire_unit(p, e, a, universe));
    clauses.push(Clause {
        name: "(ii) wire-unit for every a <= b".into(),
        passed: downward,
        note: String::new(),
    });
    // (iii) e is the only wire-unit.
    let unique = units.len() == 1;
    clauses.push(Clause {
        name: "(iii) unique wire-unit".into(),
        passed: unique,
        note: format!("found {}", units.len()),
    });
    // (iv) any a-bar-unit with a <= b equals e.
    let mut absorbed = true;
    for a in 1..=b {
        for e2 in halo(p, a, universe) {
            if e2 != *e {
                absorbed = false;
            }
        }
    }
    clauses.push(Clause {
        name: "(iv) bar-units below b equal e".into(),
        passed: absorbed,
        note: String::new(),
    });
    UnitPropReport { subject: "wire-unit proposition".into(), clauses }
}

/// Clauses (i)–(iii) about a multiassociative algebra with a `b`-unit.
pub fn check_multiassoc_unit_props<M: Multiproj>(m: &M, universe: &[M::Elem]) -> UnitPropReport {
    let mut clauses = Vec::new();
    let units = multiassoc_units(m, universe);
    let Some((one, indices)) = units.first() else {
        return UnitPropReport {
            subject: "multiassociative unit proposition".into(),
            clauses: vec![Clause {
                name: "hypothesis".into(),
                passed: false,
                note: "no unit in the universe".into(),
            }],
        };
    };
    let b = *indices.iter().max().unwrap();
    let mut ops_equal = true;
    for a in 1..=b {
        for x in universe {
            for y in universe {
                if m.star(a, x, y) != m.star(b, x, y) {
                    ops_equal = false;
                }
            }
        }
    }
    clauses.push(Clause {
        name: "(i) products collapse below b".into(),
        passed: ops_equal,
        note: format!("b={b}"),
    });
    let downward = (1..=b).all(|a| {
        universe.iter().all(|x| m.star(a, one, x) == *x && m.star(a, x, one) == *x)
    });
    clauses.push(Clause {
        name: "(ii) unit for every a <= b".into(),
        passed: downward,
        note: String::new(),
    });
    clauses.push(Clause {
        name: "(iii) unique unit".into(),
        passed: units.len() == 1,
        note: format!("found {}", units.len()),
    });
    UnitPropReport { subject: "multiassociative unit proposition".into(), clauses }
}

/// Clauses (i)–(iv) about `M(M)` for a unital multiprojection algebra of
/// height `h`; non-unital inputs are reported with the failing clauses,
/// `Pos` being the standing counterexample for (ii).
pub fn check_m_construction_props<M: Multiproj>(m: &M, universe: &[M::Elem]) -> UnitPropReport {
    let p = MConstruction(MultiprojRef(m));
    let mut clauses = Vec::new();
    let units = multiassoc_units(m, universe);
    let Some((one, _)) = units.first() else {
        return UnitPropReport {
            subject: "construction-M unit proposition".into(),
            clauses: vec![Clause {
                name: "hypothesis".into(),
                passed: false,
                note: "no unit in the universe".into(),
            }],
        };
    };
    let h = multiassoc_height(m, universe);
    let unital = (1..=h).all(|a| m.proj(a, one) == *one);
    clauses.push(Clause {
        name: "hypothesis: unital multiprojection algebra".into(),
        passed: unital,
        note: format!("height {h}"),
    });
    // (i) 1 is an a-bar-unit of M(M) for all a in [h].
    let bar = (1..=h).all(|a| is_bar_unit(&p, one, a, universe));
    clauses.push(Clause { name: "(i) 1 is an a-bar-unit".into(), passed: bar, note: String::new() });
    // (ii) halos grow with the index inside [h].
    let mut halos_nested = true;
    for a in 1..=h {
        let ha: BTreeSet<M::Elem> = halo(&p, a, universe).into_iter().collect();
        for b in a..=h {
            let hb: BTreeSet<M::Elem> = halo(&p, b, universe).into_iter().collect();
            if !ha.is_subset(&hb) {
                halos_nested = false;
            }
        }
    }
    clauses.push(Clause {
        name: "(ii) Halo_a subset of Halo_b for a <= b".into(),
        passed: halos_nested,
        note: String::new(),
    });
    // (iii) each halo is closed under the operations with indices in [a, h].
    let mut halos_closed = true;
    for a in 1..=h {
        let ha = halo(&p, a, universe);
        let set: BTreeSet<M::Elem> = ha.iter().cloned().collect();
        for e in &ha {
            for e2 in &ha {
                for b in a..=h {
                    if !set.contains(&p.dashv(b, e, e2)) || !set.contains(&p.vdash(b, e, e2)) {
                        halos_closed = false;
                    }
                }
            }
        }
    }
    clauses.push(Clause {
        name: "(iii) halos closed under operations in [a, h]".into(),
        passed: halos_closed,
        note: String::new(),
    });
    // (iv) π_a = id iff 1 is an a-wire-unit.
    let mut iff_holds = true;
    for a in 1..=h {
        let proj_is_id = universe.iter().all(|x| m.proj(a, x) == *x);
        let wire = is_wire_unit(&p, one, a, universe);
        if proj_is_id != wire {
            iff_holds = false;
        }
    }
    clauses.push(Clause {
        name: "(iv) proj_a identity iff 1 is a-wire-unit".into(),
        passed: iff_holds,
        note: String::new(),
    });
    UnitPropReport { subject: "construction-M unit proposition".into(), clauses }
}

/// Borrowing adapter so the unit-proposition checks can build `M(M)`
/// without consuming the algebra.
pub struct MultiprojRef<'a, M>(&'a M);

impl<'a, M: Multiproj> Multiproj for MultiprojRef<'a, M> {
    type Elem = M::Elem;

    fn gamma(&self) -> u32 {
        self.0.gamma()
    }

    fn star(&self, a: u32, x: &M::Elem, y: &M::Elem) -> M::Elem {
        self.0.star(a, x, y)
    }

    fn proj(&self, a: u32, x: &M::Elem) -> M::Elem {
        self.0.proj(a, x)
    }
}

/// Commutativity of a pluriassociative algebra on a universe:
/// `x ⊣_a y = y ⊢_a x` everywhere.
pub fn is_commutative<P: Pluri>(p: &P, universe: &[P::Elem]) -> bool {
    universe.iter().all(|x| {
        universe
            .iter()
            .all(|y| (1..=p.gamma()).all(|a| p.dashv(a, x, y) == p.vdash(a, y, x)))
    })
}

/// Universe helpers used by the verification suite and the CLI.
pub mod universes {
    use super::MWord;
    use crate::words::Word;
    use std::collections::BTreeSet;

    /// Integers `1..=max`.
    pub fn pos(max: u32) -> Vec<u32> {
        (1..=max).collect()
    }

    /// All subsets of `[γ]`.
    pub fn sets(gamma: u32) -> Vec<BTreeSet<u32>> {
        let mut out = vec![BTreeSet::new()];
        for v in 1..=gamma {
            let mut extended: Vec<BTreeSet<u32>> = out
                .iter()
                .map(|s| {
                    let mut s = s.clone();
                    s.insert(v);
                    s
                })
                .collect();
            out.append(&mut extended);
        }
        out.sort();
        out
    }

    /// Words over `[1, max_letter]` of length at most `max_len`, the empty
    /// word included.
    pub fn words(max_letter: u32, max_len: usize) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = vec![Vec::new()];
        let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for prefix in &layer {
                for l in 1..=max_letter {
                    let mut w = prefix.clone();
                    w.push(l);
                    next.push(w);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Marked words over values `[1, max_value]` of length at most
    /// `max_len` with at least one mark.
    pub fn mwords(max_value: u32, max_len: usize) -> Vec<MWord> {
        let mut out = Vec::new();
        let mut layer: Vec<Vec<(u32, bool)>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for prefix in &layer {
                for v in 1..=max_value {
                    for marked in [false, true] {
                        let mut w = prefix.clone();
                        w.push((v, marked));
                        next.push(w);
                    }
                }
            }
            for w in &next {
                if w.iter().any(|&(_, m)| m) {
                    out.push(MWord(w.clone()));
                }
            }
            layer = next;
        }
        out
    }

    /// Dias words of arity at most `max_arity`.
    pub fn dias_words(gamma: u32, max_arity: u32) -> Vec<Word> {
        (1..=max_arity).flat_map(|n| crate::dias::enumerate(gamma, n)).collect()
    }

    /// All words over `{0, …, γ}` of length in `[1, max_len]`.
    pub fn free_words(gamma: u32, max_len: usize) -> Vec<Word> {
        (1..=max_len).flat_map(|n| crate::words::all_words(gamma, n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(s: &str, gamma: u32) -> Word {
        Word::parse(s, gamma).unwrap()
    }

    fn set(values: &[u32]) -> BTreeSet<u32> {
        values.iter().copied().collect()
    }

    #[test]
    fn h_replaces_small_letters() {
        assert_eq!(h_endo(2, &w("203", 4)), w("223", 4));
        assert_eq!(h_endo(3, &w("101241", 4)), w("333343", 4));
        assert_eq!(h_endo(1, &w("0", 1)), w("1", 1));
    }

    #[test]
    fn free_algebra_displayed_examples() {
        assert_eq!(free_dashv(2, &w("101241", 4), &w("203", 4)).unwrap(), w("101241223", 4));
        assert_eq!(free_vdash(3, &w("101241", 4), &w("203", 4)).unwrap(), w("333343203", 4));
        assert_eq!(free_dashv(1, &w("0", 1), &w("0", 1)).unwrap(), w("01", 1));
    }

    #[test]
    fn free_algebra_satisfies_relations() {
        for gamma in 1..=3u32 {
            let algebra = MConstruction(FreeWordsAlgebra { gamma });
            let universe = universes::dias_words(gamma, 3);
            assert!(check_pluri_relations(&algebra, &universe).is_empty(), "gamma={gamma}");
        }
    }

    #[test]
    fn construction_m_matches_free_operations() {
        for gamma in 1..=3u32 {
            let algebra = MConstruction(FreeWordsAlgebra { gamma });
            for u in universes::dias_words(gamma, 3) {
                for v in universes::dias_words(gamma, 3) {
                    for a in 1..=gamma {
                        assert_eq!(algebra.dashv(a, &u, &v), free_dashv(a, &u, &v).unwrap());
                        assert_eq!(algebra.vdash(a, &u, &v), free_vdash(a, &u, &v).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn pos_displayed_examples() {
        let pos = MConstruction(PosAlgebra { gamma: 3 });
        assert_eq!(pos.dashv(3, &2, &5), 5);
        assert_eq!(pos.vdash(3, &1, &2), 3);
    }

    #[test]
    fn sets_displayed_examples() {
        let sets = MConstruction(SetsAlgebra { gamma: 5 });
        assert_eq!(sets.dashv(3, &set(&[2, 4]), &set(&[1, 3, 5])), set(&[2, 3, 4, 5]));
        assert_eq!(sets.vdash(3, &set(&[1, 2, 4]), &set(&[1, 3, 5])), set(&[1, 3, 4, 5]));
    }

    #[test]
    fn words_displayed_examples() {
        let words = MConstruction(WordsAlgebra { gamma: 4 });
        assert_eq!(words.dashv(3, &vec![4, 1, 2], &vec![1, 4, 2, 3, 1]), vec![4, 1, 2, 4, 3]);
        assert_eq!(words.vdash(2, &vec![1, 1], &vec![3, 2, 3]), vec![3, 2, 3]);
    }

    #[test]
    fn mwords_displayed_examples() {
        let algebra = MWordsAlgebra { gamma: 4 };
        // 2 1̄ 3 1 3̄ ★_2 3 4̄ 1̄ 2 1 = 2 4̄ 3 1 4̄ 3 4̄ 4̄ 2 1
        assert_eq!(
            algebra.star(
                2,
                &MWord::parse("2 1! 3 1 3!").unwrap(),
                &MWord::parse("3 4! 1! 2 1").unwrap()
            ),
            MWord::parse("2 4! 3 1 4! 3 4! 4! 2 1").unwrap()
        );
        // 2̄ 1 1 1̄ ★_3 3 4 2̄ = 3̄ 1 1 3̄ 3 4 3̄
        assert_eq!(
            algebra.star(3, &MWord::parse("2! 1 1 1!").unwrap(), &MWord::parse("3 4 2!").unwrap()),
            MWord::parse("3! 1 1 3! 3 4 3!").unwrap()
        );
        // π_3(2 2̄ 1 4 4̄ 3 5̄) = 3 2̄ 3 4 4̄ 3 5̄
        assert_eq!(
            algebra.proj(3, &MWord::parse("2 2! 1 4 4! 3 5!").unwrap()),
            MWord::parse("3 2! 3 4 4! 3 5!").unwrap()
        );
        let m = MConstruction(algebra);
        // 3 2̄ 5 ⊣_3 4 4̄ 1 = 3 4̄ 5 4 4̄ 3
        assert_eq!(
            m.dashv(3, &MWord::parse("3 2! 5").unwrap(), &MWord::parse("4 4! 1").unwrap()),
            MWord::parse("3 4! 5 4 4! 3").unwrap()
        );
        // 1 3̄ 4 1̄ 3 ⊢_2 3 1 2̄ 3 1̄ 1 = 2 3̄ 4 3̄ 3 3 1 3̄ 3 3̄ 1
        assert_eq!(
            m.vdash(
                2,
                &MWord::parse("1 3! 4 1! 3").unwrap(),
                &MWord::parse("3 1 2! 3 1! 1").unwrap()
            ),
            MWord::parse("2 3! 4 3! 3 3 1 3! 3 3! 1").unwrap()
        );
    }

    #[test]
    fn mword_display_roundtrip() {
        let m = MWord::parse("3 2! 5").unwrap();
        assert_eq!(m.to_string(), "3 2! 5");
        assert_eq!(MWord::parse(&m.to_string()).unwrap(), m);
        assert!(MWord::parse("1 2 3").is_err());
    }

    #[test]
    fn mwords_mark_uniformity_after_star() {
        let algebra = MWordsAlgebra { gamma: 2 };
        let universe = universes::mwords(2, 2);
        for x in &universe {
            for y in &universe {
                for a in 1..=2 {
                    assert!(algebra.star(a, x, y).marks_uniform());
                }
            }
        }
    }

    #[test]
    fn interfaces_hold_on_bounded_universes() {
        assert!(check_multiproj_interface(&PosAlgebra { gamma: 3 }, &universes::pos(6)).is_empty());
        assert!(
            check_multiproj_interface(&SetsAlgebra { gamma: 3 }, &universes::sets(3)).is_empty()
        );
        assert!(
            check_multiproj_interface(&WordsAlgebra { gamma: 2 }, &universes::words(2, 2))
                .is_empty()
        );
        assert!(
            check_multiproj_interface(&MWordsAlgebra { gamma: 2 }, &universes::mwords(2, 2))
                .is_empty()
        );
        assert!(check_multiproj_interface(
            &FreeWordsAlgebra { gamma: 2 },
            &universes::free_words(2, 2)
        )
        .is_empty());
    }

    #[test]
    fn relations_hold_for_all_instances() {
        assert!(check_pluri_relations(
            &MConstruction(PosAlgebra { gamma: 3 }),
            &universes::pos(6)
        )
        .is_empty());
        assert!(check_pluri_relations(
            &MConstruction(SetsAlgebra { gamma: 2 }),
            &universes::sets(2)
        )
        .is_empty());
        assert!(check_pluri_relations(
            &MConstruction(WordsAlgebra { gamma: 2 }),
            &universes::words(2, 2)
        )
        .is_empty());
        assert!(check_pluri_relations(
            &MConstruction(MWordsAlgebra { gamma: 2 }),
            &universes::mwords(2, 2)
        )
        .is_empty());
    }

    #[test]
    fn broken_operation_table_reports_violations() {
        // ⊢ wired to the wrong projection index breaks relation 3.
        struct Broken;
        impl Pluri for Broken {
            type Elem = u32;
            fn gamma(&self) -> u32 {
                2
            }
            fn dashv(&self, a: u32, x: &u32, y: &u32) -> u32 {
                *x.max(&a.max(*y))
            }
            fn vdash(&self, _a: u32, x: &u32, y: &u32) -> u32 {
                x.max(y) + 1
            }
        }
        let violations = check_pluri_relations(&Broken, &universes::pos(4));
        assert!(!violations.is_empty());
    }

    #[test]
    fn commutative_inputs_give_commutative_outputs() {
        assert!(is_commutative(&MConstruction(PosAlgebra { gamma: 3 }), &universes::pos(6)));
        assert!(is_commutative(&MConstruction(SetsAlgebra { gamma: 2 }), &universes::sets(2)));
        assert!(!is_commutative(
            &MConstruction(WordsAlgebra { gamma: 2 }),
            &universes::words(2, 2)
        ));
    }

    #[test]
    fn sets_units_and_halos() {
        let gamma = 2;
        let p = MConstruction(SetsAlgebra { gamma });
        let universe = universes::sets(gamma);
        assert!(is_wire_unit(&p, &BTreeSet::new(), 1, &universe));
        assert_eq!(height(&p, &universe), 1);
        // a-halo = subsets of [a−1].
        assert_eq!(halo(&p, 1, &universe), vec![BTreeSet::new()]);
        assert_eq!(halo(&p, 2, &universe), vec![BTreeSet::new(), set(&[1])]);
        let p3 = MConstruction(SetsAlgebra { gamma: 3 });
        let universe3 = universes::sets(3);
        assert!(halo(&p3, 2, &universe3).contains(&set(&[1])));
    }

    #[test]
    fn words_units_and_halos() {
        let gamma = 2;
        let p = MConstruction(WordsAlgebra { gamma });
        let universe = universes::words(gamma, 2);
        assert!(is_wire_unit(&p, &Vec::new(), 1, &universe));
        assert_eq!(height(&p, &universe), 1);
        // a-halo = words over [a−1].
        assert_eq!(halo(&p, 2, &universe), vec![vec![], vec![1], vec![1, 1]]);
    }

    #[test]
    fn pos_units_and_halos() {
        let gamma = 3;
        let p = MConstruction(PosAlgebra { gamma });
        let universe = universes::pos(6);
        assert_eq!(halo(&p, 1, &universe), vec![1]);
        assert!(halo(&p, 2, &universe).is_empty());
        assert_eq!(height(&p, &universe), 1);
    }

    #[test]
    fn mwords_have_no_units() {
        let p = MConstruction(MWordsAlgebra { gamma: 2 });
        let universe = universes::mwords(2, 2);
        assert!(wire_units(&p, &universe).is_empty());
        for a in 1..=2 {
            assert!(halo(&p, a, &universe).is_empty());
        }
        assert!(!is_commutative(&p, &universe));
    }

    #[test]
    fn free_words_have_no_units() {
        let p = MConstruction(FreeWordsAlgebra { gamma: 2 });
        let universe = universes::dias_words(2, 3);
        assert!(wire_units(&p, &universe).is_empty());
        for a in 1..=2 {
            assert!(halo(&p, a, &universe).is_empty());
        }
    }

    #[test]
    fn wire_unit_proposition_for_sets() {
        let p = MConstruction(SetsAlgebra { gamma: 2 });
        let report = check_wire_unit_props(&p, &universes::sets(2));
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.clauses.len(), 4);
    }

    #[test]
    fn multiassoc_unit_proposition_for_sets_and_words() {
        let report = check_multiassoc_unit_props(&SetsAlgebra { gamma: 2 }, &universes::sets(2));
        assert!(report.all_passed(), "{report:?}");
        let report =
            check_multiassoc_unit_props(&WordsAlgebra { gamma: 2 }, &universes::words(2, 2));
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn m_construction_props_pass_for_unital_inputs() {
        let report = check_m_construction_props(&SetsAlgebra { gamma: 2 }, &universes::sets(2));
        assert!(report.all_passed(), "{report:?}");
        let report =
            check_m_construction_props(&WordsAlgebra { gamma: 2 }, &universes::words(2, 2));
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn pos_is_the_negative_control() {
        // Pos is not unital as a multiprojection algebra, and clause (ii)
        // fails: Halo_1 = {1} is not inside Halo_2 = ∅.
        let report = check_m_construction_props(&PosAlgebra { gamma: 3 }, &universes::pos(6));
        let hypothesis = &report.clauses[0];
        assert!(!hypothesis.passed);
        let clause_ii = report
            .clauses
            .iter()
            .find(|c| c.name.starts_with("(ii)"))
            .expect("clause (ii) evaluated");
        assert!(!clause_ii.passed);
    }

    #[test]
    fn cwords_quotient_property() {
        // Sorting letters (the commutative image) is compatible with the
        // M(Words) operations, and deduplicating the sorted word lands on
        // the M(Sets) operations.
        let gamma = 2;
        let words = MConstruction(WordsAlgebra { gamma });
        let setsalg = MConstruction(SetsAlgebra { gamma });
        let universe = universes::words(gamma, 2);
        let sorted = |w: &Vec<u32>| {
            let mut s = w.clone();
            s.sort();
            s
        };
        let dedup = |w: &Vec<u32>| -> BTreeSet<u32> { w.iter().copied().collect() };
        for x in &universe {
            for y in &universe {
                for a in 1..=gamma {
                    // The commutative image is well-defined on classes:
                    // replacing arguments by their sorted representatives
                    // does not change the sorted result.
                    assert_eq!(
                        sorted(&words.dashv(a, x, y)),
                        sorted(&words.dashv(a, &sorted(x), &sorted(y)))
                    );
                    assert_eq!(
                        sorted(&words.vdash(a, x, y)),
                        sorted(&words.vdash(a, &sorted(x), &sorted(y)))
                    );
                    // Deduplicating the commutative image lands on M(Sets).
                    assert_eq!(dedup(&words.dashv(a, x, y)), setsalg.dashv(a, &dedup(x), &dedup(y)));
                    assert_eq!(dedup(&words.vdash(a, x, y)), setsalg.vdash(a, &dedup(x), &dedup(y)));
                }
            }
        }
    }
}
