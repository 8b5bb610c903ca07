//! Free-operad syntax trees over the generator sets of `Dias_γ` and
//! `Trias_γ`, with grafting, the evaluation maps to words, and the
//! hook-shaped normal-form constructors.
//!
//! Trees are strictly binary: every implemented generator has arity 2.
//! Leaves are indexed 1..arity from left to right.

use crate::words::{Letter, Word};
use crate::{Error, Result};
use std::fmt;

/// A binary generator: `⊣_a` (Left), `⊢_a` (Right) with `a ∈ [γ]`, or the
/// index-free `⊥` (Middle) of the Trias generator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Left(Letter),
    Right(Letter),
    Middle,
}

impl Generator {
    /// The word of `T M_γ` realizing this generator: `0a`, `a0`, or `00`.
    pub fn word(&self, gamma: u32) -> Result<Word> {
        match *self {
            Generator::Left(a) => Word::new(gamma, vec![0, a]),
            Generator::Right(a) => Word::new(gamma, vec![a, 0]),
            Generator::Middle => Word::new(gamma, vec![0, 0]),
        }
    }

    pub fn index(&self) -> Option<Letter> {
        match *self {
            Generator::Left(a) | Generator::Right(a) => Some(a),
            Generator::Middle => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Left(a) => write!(f, "L{a}"),
            Generator::Right(a) => write!(f, "R{a}"),
            Generator::Middle => write!(f, "M"),
        }
    }
}

/// The generator set `{⊣_a, ⊢_a : a ∈ [γ]}` of `Dias_γ`.
pub fn dias_generators(gamma: u32) -> Vec<Generator> {
    let mut gens = Vec::with_capacity(2 * gamma as usize);
    gens.extend((1..=gamma).map(Generator::Left));
    gens.extend((1..=gamma).map(Generator::Right));
    gens
}

/// The generator set `{⊣_a, ⊥, ⊢_a : a ∈ [γ]}` of `Trias_γ`.
pub fn trias_generators(gamma: u32) -> Vec<Generator> {
    let mut gens = dias_generators(gamma);
    gens.push(Generator::Middle);
    gens
}

/// A planar binary syntax tree with internal nodes labeled by generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SyntaxTree {
    Leaf,
    Node(Generator, Box<SyntaxTree>, Box<SyntaxTree>),
}

use SyntaxTree::{Leaf, Node};

impl SyntaxTree {
    pub fn node(g: Generator, left: SyntaxTree, right: SyntaxTree) -> SyntaxTree {
        Node(g, Box::new(left), Box::new(right))
    }

    /// The corolla: one internal node, two leaves.
    pub fn corolla(g: Generator) -> SyntaxTree {
        SyntaxTree::node(g, Leaf, Leaf)
    }

    /// Number of leaves.
    pub fn arity(&self) -> usize {
        match self {
            Leaf => 1,
            Node(_, l, r) => l.arity() + r.arity(),
        }
    }

    /// Number of internal nodes; always `arity - 1` for binary generators.
    pub fn degree(&self) -> usize {
        match self {
            Leaf => 0,
            Node(_, l, r) => 1 + l.degree() + r.degree(),
        }
    }

    /// Grafts the root of `t` onto the `i`-th leaf of `self` (1-based).
    pub fn graft(&self, i: usize, t: &SyntaxTree) -> Result<SyntaxTree> {
        let arity = self.arity();
        if i == 0 || i > arity {
            return Err(Error::PositionOutOfRange { position: i, arity });
        }
        Ok(match self {
            Leaf => t.clone(),
            Node(g, l, r) => {
                let la = l.arity();
                if i <= la {
                    SyntaxTree::node(*g, l.graft(i, t)?, (**r).clone())
                } else {
                    SyntaxTree::node(*g, (**l).clone(), r.graft(i - la, t)?)
                }
            }
        })
    }

    fn collect_images(&self, acc: Letter, out: &mut Vec<Letter>) {
        match self {
            Leaf => out.push(acc),
            Node(g, l, r) => match *g {
                // ⊣_a makes a eligible for leaves of the right subtree,
                // ⊢_a for leaves of the left subtree; ⊥ grants nothing.
                Generator::Left(a) => {
                    l.collect_images(acc, out);
                    r.collect_images(acc.max(a), out);
                }
                Generator::Right(a) => {
                    l.collect_images(acc.max(a), out);
                    r.collect_images(acc, out);
                }
                Generator::Middle => {
                    l.collect_images(acc, out);
                    r.collect_images(acc, out);
                }
            },
        }
    }

    fn validate_labels(&self, gamma: u32, allow_middle: bool) -> Result<()> {
        match self {
            Leaf => Ok(()),
            Node(g, l, r) => {
                match g.index() {
                    Some(a) if a == 0 || a > gamma => {
                        return Err(Error::LetterOutOfRange { letter: a, gamma })
                    }
                    None if !allow_middle => {
                        return Err(Error::WrongGeneratorSet(g.to_string()))
                    }
                    _ => {}
                }
                l.validate_labels(gamma, allow_middle)?;
                r.validate_labels(gamma, allow_middle)
            }
        }
    }

    /// `word_γ`: evaluates a tree over `{⊣_a, ⊢_a}` to its `Dias_γ` word,
    /// the sequence of greatest eligible integers of its leaves.
    pub fn word(&self, gamma: u32) -> Result<Word> {
        self.validate_labels(gamma, false)?;
        let mut out = Vec::with_capacity(self.arity());
        self.collect_images(0, &mut out);
        Word::new(gamma, out)
    }

    /// `wordt_γ`: the same evaluation for trees over `{⊣_a, ⊥, ⊢_a}`.
    pub fn wordt(&self, gamma: u32) -> Result<Word> {
        self.validate_labels(gamma, true)?;
        let mut out = Vec::with_capacity(self.arity());
        self.collect_images(0, &mut out);
        Word::new(gamma, out)
    }

    /// Recognizes hook syntax trees: a chain of `⊣` nodes descending
    /// through left children (right children all leaves) ending in a chain
    /// of `⊢` nodes descending through right children (left children all
    /// leaves) ending in a leaf.
    pub fn is_hook(&self) -> bool {
        let mut t = self;
        while let Node(Generator::Left(_), l, r) = t {
            if **r != Leaf {
                return false;
            }
            t = l;
        }
        is_right_comb(t)
    }

    /// Recognizes extended hook syntax trees: a spine of `⊥` nodes
    /// descending through right children, each left input a `⊢`-comb,
    /// terminating in a hook syntax tree.
    pub fn is_extended_hook(&self) -> bool {
        let mut t = self;
        while let Node(Generator::Middle, l, r) = t {
            if !is_right_comb(l) {
                return false;
            }
            t = r;
        }
        t.is_hook()
    }

    /// Whether any internal node is labeled `⊥`.
    pub fn contains_middle(&self) -> bool {
        match self {
            Leaf => false,
            Node(g, l, r) => {
                *g == Generator::Middle || l.contains_middle() || r.contains_middle()
            }
        }
    }

    /// Parses the prefix notation `(L2 (R1 . .) .)` where `L a` is `⊣_a`,
    /// `R a` is `⊢_a`, `M` is `⊥`, and `.` is a leaf.
    pub fn parse(s: &str) -> Result<SyntaxTree> {
        let tokens = tokenize(s);
        let mut pos = 0;
        let tree = parse_tokens(&tokens, &mut pos).ok_or_else(|| Error::ParseTree(s.to_string()))?;
        if pos != tokens.len() {
            return Err(Error::ParseTree(s.to_string()));
        }
        Ok(tree)
    }
}

fn is_right_comb(mut t: &SyntaxTree) -> bool {
    while let Node(Generator::Right(_), l, r) = t {
        if **l != Leaf {
            return false;
        }
        t = r;
    }
    *t == Leaf
}

fn tokenize(s: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' | ')' | '.' => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
                tokens.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

fn parse_tokens(tokens: &[String], pos: &mut usize) -> Option<SyntaxTree> {
    match tokens.get(*pos)?.as_str() {
        "." => {
            *pos += 1;
            Some(Leaf)
        }
        "(" => {
            *pos += 1;
            let label = tokens.get(*pos)?.clone();
            *pos += 1;
            let g = parse_generator(&label)?;
            let left = parse_tokens(tokens, pos)?;
            let right = parse_tokens(tokens, pos)?;
            if tokens.get(*pos)?.as_str() != ")" {
                return None;
            }
            *pos += 1;
            Some(SyntaxTree::node(g, left, right))
        }
        _ => None,
    }
}

fn parse_generator(label: &str) -> Option<Generator> {
    if label == "M" {
        return Some(Generator::Middle);
    }
    let (kind, idx) = label.split_at(1);
    let a: u32 = idx.parse().ok()?;
    match kind {
        "L" => Some(Generator::Left(a)),
        "R" => Some(Generator::Right(a)),
        _ => None,
    }
}

impl fmt::Display for SyntaxTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => write!(f, "."),
            Node(g, l, r) => write!(f, "({g} {l} {r})"),
        }
    }
}

/// `hook_γ`: the hook syntax tree of a `Dias_γ` word `x = u0v` — a left
/// comb of `⊣_{v_1}, …, ⊣_{v_|v|}` (bottom to top) whose bottom-left input
/// is a right comb of `⊢_{u_1}, …, ⊢_{u_|u|}` (top to bottom).
pub fn hook(x: &Word) -> Result<SyntaxTree> {
    if x.count(0) != 1 {
        return Err(Error::NotDiasElement(x.to_string()));
    }
    let zero = x.letters().iter().position(|&l| l == 0).unwrap();
    let u = &x.letters()[..zero];
    let v = &x.letters()[zero + 1..];
    let mut t = right_comb(u);
    for &a in v {
        t = SyntaxTree::node(Generator::Left(a), t, Leaf);
    }
    Ok(t)
}

/// `hookt_γ`: the extended hook syntax tree of a word with at least one
/// `0`. For `x = u 0 y` with `u` zero-free, the tree is `⊥` with the
/// `⊢`-comb of `u` on the left and `hookt_γ(y)` on the right; words with a
/// single `0` fall back to `hook_γ`.
pub fn hookt(x: &Word) -> Result<SyntaxTree> {
    let zeros = x.count(0);
    if zeros == 0 {
        return Err(Error::NoZero(x.to_string()));
    }
    if zeros == 1 {
        return hook(x);
    }
    let first = x.letters().iter().position(|&l| l == 0).unwrap();
    let u = &x.letters()[..first];
    let rest = Word::new(x.gamma(), x.letters()[first + 1..].to_vec())?;
    Ok(SyntaxTree::node(Generator::Middle, right_comb(u), hookt(&rest)?))
}

fn right_comb(u: &[Letter]) -> SyntaxTree {
    let mut t = Leaf;
    for &a in u.iter().rev() {
        t = SyntaxTree::node(Generator::Right(a), Leaf, t);
    }
    t
}

/// All syntax trees of the given degree over a generator set, ordered by
/// shape and label recursion (deterministic).
pub fn enumerate_trees(gens: &[Generator], degree: usize) -> Vec<SyntaxTree> {
    if degree == 0 {
        return vec![Leaf];
    }
    let mut out = Vec::new();
    for left_degree in 0..degree {
        let lefts = enumerate_trees(gens, left_degree);
        let rights = enumerate_trees(gens, degree - 1 - left_degree);
        for l in &lefts {
            for r in &rights {
                for &g in gens {
                    out.push(SyntaxTree::node(g, l.clone(), r.clone()));
                }
            }
        }
    }
    out
}

/// All syntax trees of degree at most `degree_bound`.
pub fn enumerate_trees_up_to(gens: &[Generator], degree_bound: usize) -> Vec<SyntaxTree> {
    (0..=degree_bound).flat_map(|d| enumerate_trees(gens, d)).collect()
}
