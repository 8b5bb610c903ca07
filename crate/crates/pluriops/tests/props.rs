//! Property tests: operad axioms, evaluation-map morphism laws, and the
//! K-basis oracle equivalence on randomized inputs.

use pluriops::syntax::{self, Generator, SyntaxTree};
use pluriops::words::Word;
use pluriops::{dias, linear};
use proptest::prelude::*;

const GAMMA: u32 = 3;

fn arb_word(max_arity: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..=GAMMA, 1..=max_arity)
        .prop_map(|letters| Word::new(GAMMA, letters).unwrap())
}

fn arb_dias_word(max_arity: usize) -> impl Strategy<Value = Word> {
    (1..=max_arity, prop::collection::vec(1..=GAMMA, max_arity))
        .prop_map(|(n, fill)| {
            let mut letters = fill[..n].to_vec();
            letters[(n - 1) / 2] = 0;
            Word::new(GAMMA, letters).unwrap()
        })
}

fn arb_tree(max_degree: usize) -> impl Strategy<Value = SyntaxTree> {
    let leaf = Just(SyntaxTree::Leaf).boxed();
    leaf.prop_recursive(max_degree as u32, max_degree as u32 * 2, 2, |inner| {
        (arb_generator(), inner.clone(), inner)
            .prop_map(|(g, l, r)| SyntaxTree::node(g, l, r))
            .boxed()
    })
}

fn arb_generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1..=GAMMA).prop_map(Generator::Left),
        (1..=GAMMA).prop_map(Generator::Right),
        Just(Generator::Middle),
    ]
}

proptest! {
    #[test]
    fn series_axiom(x in arb_word(5), y in arb_word(5), z in arb_word(5),
                    i in 0usize..5, j in 0usize..5) {
        let i = i % x.arity() + 1;
        let j = j % y.arity() + 1;
        let lhs = x.compose(i, &y).unwrap().compose(i + j - 1, &z).unwrap();
        let rhs = x.compose(i, &y.compose(j, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parallel_axiom(x in arb_word(5), y in arb_word(5), z in arb_word(5),
                      i in 0usize..5, j in 0usize..5) {
        let n = x.arity();
        prop_assume!(n >= 2);
        let mut i = i % n + 1;
        let mut j = j % n + 1;
        prop_assume!(i != j);
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        let m = y.arity();
        let lhs = x.compose(i, &y).unwrap().compose(j + m - 1, &z).unwrap();
        let rhs = x.compose(j, &z).unwrap().compose(i, &y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_axiom(x in arb_word(6), i in 0usize..6) {
        let unit = Word::unit(GAMMA);
        prop_assert_eq!(unit.compose(1, &x).unwrap(), x.clone());
        prop_assert_eq!(x.compose(i % x.arity() + 1, &unit).unwrap(), x);
    }

    #[test]
    fn full_compose_is_the_fold(x in arb_word(4), ys in prop::collection::vec(arb_word(3), 4)) {
        let ys = &ys[..x.arity()];
        let mut folded = x.clone();
        for (i, y) in ys.iter().enumerate().rev() {
            folded = folded.compose(i + 1, y).unwrap();
        }
        prop_assert_eq!(x.full_compose(ys).unwrap(), folded);
    }

    #[test]
    fn mirror_is_an_antiautomorphism(x in arb_word(5), y in arb_word(5), i in 0usize..5) {
        let i = i % x.arity() + 1;
        let lhs = x.compose(i, &y).unwrap().mirror();
        let rhs = x.mirror().compose(x.arity() - i + 1, &y.mirror()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_morphism(s in arb_tree(3), t in arb_tree(3), i in 0usize..8) {
        let i = i % s.arity() + 1;
        let grafted = s.graft(i, &t).unwrap();
        prop_assert_eq!(grafted.arity(), s.arity() + t.arity() - 1);
        prop_assert_eq!(grafted.degree(), s.degree() + t.degree());
        prop_assert_eq!(
            grafted.wordt(GAMMA).unwrap(),
            s.wordt(GAMMA).unwrap().compose(i, &t.wordt(GAMMA).unwrap()).unwrap()
        );
    }

    #[test]
    fn hookt_inverts_wordt(x in arb_word(6)) {
        prop_assume!(x.count(0) >= 1);
        let t = syntax::hookt(&x).unwrap();
        prop_assert!(t.is_extended_hook());
        prop_assert_eq!(t.wordt(GAMMA).unwrap(), x);
    }

    #[test]
    fn root_law_holds(x in arb_dias_word(5), y in arb_dias_word(5), i in 0usize..5) {
        let i = i % x.arity() + 1;
        let z = x.compose(i, &y).unwrap();
        prop_assert_eq!(
            dias::root(&z).unwrap(),
            dias::root_law(dias::root(&x).unwrap(), dias::root(&y).unwrap(), i, y.arity())
        );
    }

    #[test]
    fn k_compose_agrees_with_bilinear_oracle(
        x in arb_dias_word(4), y in arb_dias_word(4), i in 0usize..4
    ) {
        prop_assume!(x.arity() >= 2 && y.arity() >= 2);
        let i = i % x.arity() + 1;
        let direct = linear::k_comb_to_words(&linear::k_compose(&x, i, &y).unwrap()).unwrap();
        let oracle = linear::lin_compose(
            &linear::k_of_word(&x).unwrap(),
            i,
            &linear::k_of_word(&y).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(direct, oracle);
    }

    #[test]
    fn lin_compose_is_bilinear(
        x in arb_dias_word(3), y in arb_dias_word(3), z in arb_dias_word(3), i in 0usize..3
    ) {
        let f = linear::k_of_word(&x).unwrap();
        let g = linear::k_of_word(&y).unwrap();
        prop_assume!(f.arity() == g.arity());
        let h = linear::LinComb::from_word(&z).unwrap();
        let i = i % f.arity() + 1;
        let lhs = linear::lin_compose(&f.add(&g), i, &h).unwrap();
        let rhs = linear::lin_compose(&f, i, &h)
            .unwrap()
            .add(&linear::lin_compose(&g, i, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
