//! The quadratic rewrite system on Dias syntax trees whose normal forms
//! are the hook trees, together with bounded termination, confluence and
//! congruence-class certification.
//!
//! A rule matches a partial subtree: two adjacent internal nodes with the
//! prescribed labels, the three pattern leaves binding arbitrary subtrees.

use crate::syntax::{enumerate_trees, Generator, SyntaxTree};
use crate::{Error, Result};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// A degree-2 tree pattern: `top ∘_pos bottom` with `pos ∈ {1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadPattern {
    pub top: Generator,
    pub pos: u8,
    pub bottom: Generator,
}

impl QuadPattern {
    pub fn tree(&self) -> SyntaxTree {
        let inner = SyntaxTree::corolla(self.bottom);
        if self.pos == 1 {
            SyntaxTree::node(self.top, inner, SyntaxTree::Leaf)
        } else {
            SyntaxTree::node(self.top, SyntaxTree::Leaf, inner)
        }
    }
}

impl fmt::Display for QuadPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} o{} {}", self.top, self.pos, self.bottom)
    }
}

/// An oriented quadratic rule `lhs → rhs`; both sides have arity 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub lhs: QuadPattern,
    pub rhs: QuadPattern,
    pub family: u8,
}

impl Rule {
    fn new(family: u8, lhs: (Generator, u8, Generator), rhs: (Generator, u8, Generator)) -> Rule {
        Rule {
            lhs: QuadPattern { top: lhs.0, pos: lhs.1, bottom: lhs.2 },
            rhs: QuadPattern { top: rhs.0, pos: rhs.1, bottom: rhs.2 },
            family,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} -> {}", self.family, self.lhs, self.rhs)
    }
}

use Generator::{Left, Right};

/// The nine oriented rule families of `→_γ`; the instance count is `5γ²`.
pub fn dias_rules(gamma: u32) -> Vec<Rule> {
    let mut rules = Vec::new();
    for a in 1..=gamma {
        for a2 in 1..=gamma {
            // (1) ⊢_{a'} ∘_2 ⊣_a → ⊣_a ∘_1 ⊢_{a'}
            rules.push(Rule::new(1, (Right(a2), 2, Left(a)), (Left(a), 1, Right(a2))));
        }
    }
    for a in 1..=gamma {
        for b in (a + 1)..=gamma {
            // (2) ⊣_a ∘_2 ⊢_b → ⊣_a ∘_1 ⊣_b
            rules.push(Rule::new(2, (Left(a), 2, Right(b)), (Left(a), 1, Left(b))));
            // (3) ⊢_a ∘_1 ⊣_b → ⊢_a ∘_2 ⊢_b
            rules.push(Rule::new(3, (Right(a), 1, Left(b)), (Right(a), 2, Right(b))));
            // (4) ⊣_a ∘_2 ⊣_b → ⊣_b ∘_1 ⊣_a
            rules.push(Rule::new(4, (Left(a), 2, Left(b)), (Left(b), 1, Left(a))));
            // (5) ⊢_a ∘_1 ⊢_b → ⊢_b ∘_2 ⊢_a
            rules.push(Rule::new(5, (Right(a), 1, Right(b)), (Right(b), 2, Right(a))));
        }
    }
    for c in 1..=gamma {
        for d in c..=gamma {
            // (6) ⊣_d ∘_2 ⊣_c → ⊣_d ∘_1 ⊣_d
            rules.push(Rule::new(6, (Left(d), 2, Left(c)), (Left(d), 1, Left(d))));
            // (7) ⊣_d ∘_2 ⊢_c → ⊣_d ∘_1 ⊣_d
            rules.push(Rule::new(7, (Left(d), 2, Right(c)), (Left(d), 1, Left(d))));
            // (8) ⊢_d ∘_1 ⊣_c → ⊢_d ∘_2 ⊢_d
            rules.push(Rule::new(8, (Right(d), 1, Left(c)), (Right(d), 2, Right(d))));
            // (9) ⊢_d ∘_1 ⊢_c → ⊢_d ∘_2 ⊢_d
            rules.push(Rule::new(9, (Right(d), 1, Right(c)), (Right(d), 2, Right(d))));
        }
    }
    rules.sort_by_key(|r| r.family);
    rules
}

fn match_at(t: &SyntaxTree, pattern: &QuadPattern) -> Option<[SyntaxTree; 3]> {
    let SyntaxTree::Node(g, l, r) = t else { return None };
    if *g != pattern.top {
        return None;
    }
    if pattern.pos == 1 {
        let SyntaxTree::Node(g2, a, b) = &**l else { return None };
        if *g2 != pattern.bottom {
            return None;
        }
        Some([(**a).clone(), (**b).clone(), (**r).clone()])
    } else {
        let SyntaxTree::Node(g2, b, c) = &**r else { return None };
        if *g2 != pattern.bottom {
            return None;
        }
        Some([(**l).clone(), (**b).clone(), (**c).clone()])
    }
}

fn build(pattern: &QuadPattern, parts: [SyntaxTree; 3]) -> SyntaxTree {
    let [a, b, c] = parts;
    if pattern.pos == 1 {
        SyntaxTree::node(pattern.top, SyntaxTree::node(pattern.bottom, a, b), c)
    } else {
        SyntaxTree::node(pattern.top, a, SyntaxTree::node(pattern.bottom, b, c))
    }
}

/// Paths to internal nodes in left-to-right post-order (children first).
fn internal_paths(t: &SyntaxTree) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    fn walk(t: &SyntaxTree, path: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if let SyntaxTree::Node(_, l, r) = t {
            path.push(0);
            walk(l, path, out);
            path.pop();
            path.push(1);
            walk(r, path, out);
            path.pop();
            out.push(path.clone());
        }
    }
    walk(t, &mut Vec::new(), &mut out);
    out
}

fn subtree_at<'a>(t: &'a SyntaxTree, path: &[u8]) -> &'a SyntaxTree {
    let mut cur = t;
    for &step in path {
        let SyntaxTree::Node(_, l, r) = cur else { unreachable!("path into leaf") };
        cur = if step == 0 { l } else { r };
    }
    cur
}

fn replace_at(t: &SyntaxTree, path: &[u8], replacement: SyntaxTree) -> SyntaxTree {
    match path.split_first() {
        None => replacement,
        Some((&step, rest)) => {
            let SyntaxTree::Node(g, l, r) = t else { unreachable!("path into leaf") };
            if step == 0 {
                SyntaxTree::node(*g, replace_at(l, rest, replacement), (**r).clone())
            } else {
                SyntaxTree::node(*g, (**l).clone(), replace_at(r, rest, replacement))
            }
        }
    }
}

/// One rewrite applied somewhere in the tree: the resulting whole tree,
/// the rule family, and the 1-based post-order index of the matched node.
pub fn rewrite_step_detailed(t: &SyntaxTree, rules: &[Rule]) -> Vec<(SyntaxTree, u8, usize)> {
    let mut out = Vec::new();
    for (idx, path) in internal_paths(t).into_iter().enumerate() {
        let sub = subtree_at(t, &path);
        for rule in rules {
            if let Some(parts) = match_at(sub, &rule.lhs) {
                let rewritten = replace_at(t, &path, build(&rule.rhs, parts));
                out.push((rewritten, rule.family, idx + 1));
            }
        }
    }
    out
}

/// Every tree obtainable by one rule application; empty iff `t` is a
/// normal form.
pub fn rewrite_step(t: &SyntaxTree, rules: &[Rule]) -> Vec<SyntaxTree> {
    rewrite_step_detailed(t, rules).into_iter().map(|(t, _, _)| t).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// First match in a left-to-right post-order scan, first rule in
    /// family order. The default.
    LeftmostInnermost,
    /// First match in a pre-order scan.
    LeftmostOutermost,
}

/// One step of the deterministic strategy.
fn strategy_step(t: &SyntaxTree, rules: &[Rule], strategy: Strategy) -> Option<(SyntaxTree, u8, usize)> {
    let mut paths = internal_paths(t);
    if strategy == Strategy::LeftmostOutermost {
        paths.reverse();
    }
    let order: Vec<(usize, Vec<u8>)> = paths.into_iter().enumerate().collect();
    for (idx, path) in order {
        let sub = subtree_at(t, &path);
        for rule in rules {
            if let Some(parts) = match_at(sub, &rule.lhs) {
                return Some((replace_at(t, &path, build(&rule.rhs, parts)), rule.family, idx + 1));
            }
        }
    }
    None
}

fn step_cap(t: &SyntaxTree) -> usize {
    10 * t.degree() * t.degree() + 10
}

/// Repeatedly applies the first available rewrite until none applies.
/// The iteration cap guards against a non-terminating rule set; it can
/// never fire for `dias_rules`.
pub fn normal_form_with(t: &SyntaxTree, rules: &[Rule], strategy: Strategy) -> Result<SyntaxTree> {
    let cap = step_cap(t);
    let mut current = t.clone();
    for _ in 0..cap {
        match strategy_step(&current, rules, strategy) {
            Some((next, _, _)) => current = next,
            None => return Ok(current),
        }
    }
    if strategy_step(&current, rules, strategy).is_none() {
        return Ok(current);
    }
    Err(Error::RewriteCapExceeded { cap })
}

/// Normal form under the default leftmost-innermost strategy.
pub fn normal_form(t: &SyntaxTree, rules: &[Rule]) -> Result<SyntaxTree> {
    normal_form_with(t, rules, Strategy::LeftmostInnermost)
}

/// A recorded rewrite step: the tree after the step, the rule family, and
/// the post-order position where it was applied.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub tree: SyntaxTree,
    pub family: u8,
    pub position: usize,
}

/// Normal form plus the full reduction trace.
pub fn normal_form_trace(t: &SyntaxTree, rules: &[Rule]) -> Result<(SyntaxTree, Vec<TraceStep>)> {
    let cap = step_cap(t);
    let mut trace = Vec::new();
    let mut current = t.clone();
    for _ in 0..=cap {
        match strategy_step(&current, rules, Strategy::LeftmostInnermost) {
            Some((next, family, position)) => {
                trace.push(TraceStep { tree: next.clone(), family, position });
                current = next;
            }
            None => return Ok((current, trace)),
        }
    }
    Err(Error::RewriteCapExceeded { cap })
}

/// Exhaustive bounded termination certificate: the rewrite digraph on all
/// trees of degree at most `degree_bound` contains no cycle.
pub fn check_termination(gens: &[Generator], rules: &[Rule], degree_bound: usize) -> bool {
    // Rewriting preserves degree, so each degree class is self-contained.
    let mut colors: HashMap<SyntaxTree, u8> = HashMap::new(); // 1 = on stack, 2 = done
    for degree in 0..=degree_bound {
        for seed in enumerate_trees(gens, degree) {
            if !dfs_acyclic(&seed, rules, &mut colors) {
                return false;
            }
        }
    }
    true
}

fn dfs_acyclic(t: &SyntaxTree, rules: &[Rule], colors: &mut HashMap<SyntaxTree, u8>) -> bool {
    match colors.get(t) {
        Some(1) => return false,
        Some(2) => return true,
        _ => {}
    }
    colors.insert(t.clone(), 1);
    for next in rewrite_step(t, rules) {
        if !dfs_acyclic(&next, rules, colors) {
            return false;
        }
    }
    colors.insert(t.clone(), 2);
    true
}

/// The set of normal forms reachable from `t` along maximal rewrite
/// paths; `None` if a cycle is hit.
pub fn normal_form_set(
    t: &SyntaxTree,
    rules: &[Rule],
    memo: &mut HashMap<SyntaxTree, Option<BTreeSet<SyntaxTree>>>,
) -> Option<BTreeSet<SyntaxTree>> {
    if let Some(cached) = memo.get(t) {
        return cached.clone();
    }
    memo.insert(t.clone(), None); // in-progress marker doubles as cycle detector
    let successors = rewrite_step(t, rules);
    let result = if successors.is_empty() {
        let mut set = BTreeSet::new();
        set.insert(t.clone());
        Some(set)
    } else {
        let mut set = BTreeSet::new();
        let mut ok = true;
        for next in successors {
            match normal_form_set(&next, rules, memo) {
                Some(sub) => set.extend(sub),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            Some(set)
        } else {
            None
        }
    };
    memo.insert(t.clone(), result.clone());
    result
}

/// Exhaustive bounded confluence certificate: every tree of degree at most
/// `degree_bound` has exactly one normal form along all maximal paths.
pub fn check_confluence(gens: &[Generator], rules: &[Rule], degree_bound: usize) -> bool {
    let mut memo = HashMap::new();
    for degree in 0..=degree_bound {
        for seed in enumerate_trees(gens, degree) {
            match normal_form_set(&seed, rules, &mut memo) {
                Some(set) if set.len() == 1 => {}
                _ => return false,
            }
        }
    }
    true
}

/// The partition of all trees of arity `n` (degree `n−1`) into classes of
/// the congruence generated by the rules, via undirected closure.
pub fn congruence_classes(gens: &[Generator], rules: &[Rule], n: usize) -> Vec<Vec<SyntaxTree>> {
    assert!(n >= 1);
    let trees = enumerate_trees(gens, n - 1);
    let index: HashMap<&SyntaxTree, usize> =
        trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    // Undirected adjacency via forward edges only; BFS unions both ways.
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); trees.len()];
    for (i, t) in trees.iter().enumerate() {
        for next in rewrite_step(t, rules) {
            let j = index[&next];
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
    }
    let mut seen = vec![false; trees.len()];
    let mut classes = Vec::new();
    for start in 0..trees.len() {
        if seen[start] {
            continue;
        }
        let mut class = Vec::new();
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            class.push(trees[i].clone());
            for &j in &adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        class.sort();
        classes.push(class);
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    classes
}
