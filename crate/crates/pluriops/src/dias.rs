//! The set-operad `Dias_γ`: words over `{0, …, γ}` with exactly one `0`,
//! composed inside `T M_γ`. Enumeration, dimensions, the root map, the
//! mirror symmetry, bounded certification of the symmetry group and of
//! basicness, and the classical realization of `Dias_1`.

use crate::words::{Letter, Word};
use crate::{Error, Result};
use std::collections::HashMap;

/// Membership test: exactly one occurrence of `0`.
pub fn is_element(w: &Word) -> bool {
    w.count(0) == 1
}

/// The generating set `{0a, a0 : a ∈ [γ]}`, in lexicographic order.
pub fn generators(gamma: u32) -> Vec<Word> {
    let mut gens = Vec::with_capacity(2 * gamma as usize);
    for a in 1..=gamma {
        gens.push(Word::new(gamma, vec![0, a]).unwrap());
    }
    for a in 1..=gamma {
        gens.push(Word::new(gamma, vec![a, 0]).unwrap());
    }
    gens.sort();
    gens
}

/// All elements of `Dias_γ(n)` in lexicographic order.
pub fn enumerate(gamma: u32, n: u32) -> Vec<Word> {
    let n = n as usize;
    if gamma == 0 {
        return if n == 1 { vec![Word::unit(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    // Place the single 0, fill the remaining positions from [γ].
    for zero_pos in 0..n {
        let others = n - 1;
        let total = (gamma as u64).pow(others as u32);
        for code in 0..total {
            let mut c = code;
            let mut digits = vec![1u32; others];
            for pos in (0..others).rev() {
                digits[pos] = (c % gamma as u64) as u32 + 1;
                c /= gamma as u64;
            }
            let mut letters = Vec::with_capacity(n);
            let mut rest = digits.into_iter();
            for j in 0..n {
                letters.push(if j == zero_pos { 0 } else { rest.next().unwrap() });
            }
            out.push(Word::new(gamma, letters).unwrap());
        }
    }
    out.sort();
    out
}

/// `dim Dias_γ(n) = n γ^{n−1}` (with `γ^0 = 1`).
pub fn dim(gamma: u32, n: u32) -> u64 {
    n as u64 * (gamma as u64).pow(n - 1)
}

/// Coefficients of `t/(1 − γt)^2` for `n = 1..=max_arity`, computed by
/// power-series division so the closed form has an independent route.
pub fn hilbert_coeffs(gamma: u32, max_arity: u32) -> Vec<u64> {
    // numerator t, denominator (1 − γt)^2 = 1 − 2γt + γ²t².
    let g = gamma as i128;
    series_div(&[0, 1], &[1, -2 * g, g * g], max_arity)
}

/// Power-series division `numer/denom` returning coefficients of
/// `t^1..=t^max`; `denom[0]` must be `1`.
pub(crate) fn series_div(numer: &[i128], denom: &[i128], max: u32) -> Vec<u64> {
    assert_eq!(denom[0], 1);
    let max = max as usize;
    let mut coeffs = vec![0i128; max + 1];
    for n in 0..=max {
        let mut c = numer.get(n).copied().unwrap_or(0);
        for k in 1..=n.min(denom.len() - 1) {
            c -= denom[k] * coeffs[n - k];
        }
        coeffs[n] = c;
    }
    coeffs[1..].iter().map(|&c| u64::try_from(c).expect("nonnegative coefficient")).collect()
}

/// The root map: the 1-based position of the unique `0`.
pub fn root(x: &Word) -> Result<usize> {
    if !is_element(x) {
        return Err(Error::NotDiasElement(x.to_string()));
    }
    Ok(x.letters().iter().position(|&l| l == 0).unwrap() + 1)
}

/// The three-case law a root map must satisfy under `x ∘_i y`.
pub fn root_law(root_x: usize, root_y: usize, i: usize, m: usize) -> usize {
    if i < root_x {
        root_x + m - 1
    } else if i == root_x {
        root_x + root_y - 1
    } else {
        root_x
    }
}

/// A symmetry candidate that survived the bounded search: a permutation of
/// the generators extending to an automorphism or antiautomorphism on all
/// generator compositions up to the arity bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetry {
    /// Image of each generator, parallel to `generators(γ)`.
    pub images: Vec<Word>,
    pub antimorphism: bool,
}

impl Symmetry {
    pub fn is_identity(&self, gamma: u32) -> bool {
        !self.antimorphism && self.images == generators(gamma)
    }

    pub fn is_mirror(&self, gamma: u32) -> bool {
        self.antimorphism
            && self
                .images
                .iter()
                .zip(generators(gamma))
                .all(|(img, g)| *img == g.mirror())
    }
}

/// Searches all permutations of the `2γ` generators for maps extending to
/// operad (anti)morphisms, checking well-definedness on every composition
/// of already-mapped elements up to `arity_bound`.
pub fn symmetry_search(gamma: u32, arity_bound: u32) -> Vec<Symmetry> {
    let gens = generators(gamma);
    let mut survivors = Vec::new();
    for perm in permutations(gens.len()) {
        for antimorphism in [false, true] {
            let images: Vec<Word> = perm.iter().map(|&j| gens[j].clone()).collect();
            if extends_to_bound(gamma, &gens, &images, antimorphism, arity_bound) {
                survivors.push(Symmetry { images, antimorphism });
            }
        }
    }
    survivors
}

fn extends_to_bound(
    gamma: u32,
    gens: &[Word],
    images: &[Word],
    antimorphism: bool,
    arity_bound: u32,
) -> bool {
    let mut phi: HashMap<Word, Word> = HashMap::new();
    phi.insert(Word::unit(gamma), Word::unit(gamma));
    for (g, img) in gens.iter().zip(images) {
        phi.insert(g.clone(), img.clone());
    }
    // Build arity by arity; every element of arity >= 3 is a composition
    // of two elements of smaller arity >= 2.
    for target in 3..=arity_bound {
        let mut new_entries: Vec<(Word, Word)> = Vec::new();
        for p in 2..target {
            let q = target + 1 - p;
            if q < 2 {
                continue;
            }
            for x in enumerate(gamma, p) {
                for y in enumerate(gamma, q) {
                    let phi_x = &phi[&x];
                    let phi_y = &phi[&y];
                    for i in 1..=(p as usize) {
                        let w = x.compose(i, &y).unwrap();
                        let i_img = if antimorphism { p as usize - i + 1 } else { i };
                        let img = phi_x.compose(i_img, phi_y).unwrap();
                        match phi.get(&w) {
                            Some(prev) if *prev != img => return false,
                            Some(_) => {}
                            None => new_entries.push((w, img)),
                        }
                    }
                }
            }
            for (w, img) in new_entries.drain(..) {
                match phi.get(&w) {
                    Some(prev) if *prev != img => return false,
                    Some(_) => {}
                    None => {
                        phi.insert(w, img);
                    }
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Bounded certificate that `Dias_γ` is basic: for every tuple
/// `(y_1, …, y_n)` of elements of arity at most `arity_bound`, the map
/// `x ↦ x ∘ (y_1, …, y_n)` is injective on `Dias_γ(n)`.
pub fn check_basic(gamma: u32, n: u32, arity_bound: u32) -> bool {
    let xs = enumerate(gamma, n);
    let pool: Vec<Word> = (1..=arity_bound).flat_map(|k| enumerate(gamma, k)).collect();
    if pool.is_empty() {
        return true;
    }
    let mut tuple = vec![0usize; n as usize];
    loop {
        let ys: Vec<Word> = tuple.iter().map(|&j| pool[j].clone()).collect();
        let mut seen = std::collections::BTreeSet::new();
        for x in &xs {
            let image = x.full_compose(&ys).unwrap();
            if !seen.insert(image) {
                return false;
            }
        }
        // advance tuple odometer
        let mut pos = tuple.len();
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            if tuple[pos] + 1 < pool.len() {
                tuple[pos] += 1;
                for slot in tuple.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                break;
            }
            tuple[pos] = 0;
            if pos == 0 {
                return true;
            }
        }
    }
}

/// A basis element `e_{n,k}` of the classical realization of the
/// diassociative operad, with `1 ≤ k ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Classic {
    pub n: u32,
    pub k: u32,
}

impl Classic {
    pub fn new(n: u32, k: u32) -> Result<Classic> {
        if k == 0 || k > n {
            return Err(Error::PositionOutOfRange { position: k as usize, arity: n as usize });
        }
        Ok(Classic { n, k })
    }

    /// The case formula for `e_{n,k} ∘_i e_{m,ℓ}`.
    pub fn compose(&self, i: u32, other: &Classic) -> Result<Classic> {
        if i == 0 || i > self.n {
            return Err(Error::PositionOutOfRange { position: i as usize, arity: self.n as usize });
        }
        let (n, k) = (self.n, self.k);
        let (m, l) = (other.n, other.k);
        let k_new = if i < k {
            k + m - 1
        } else if i == k {
            k + l - 1
        } else {
            k
        };
        Ok(Classic { n: n + m - 1, k: k_new })
    }

    /// The corresponding `Dias_1` word `1^{k−1} 0 1^{n−k}` (zero at
    /// position `k`); intertwines `compose` with the word composition.
    pub fn to_word(&self) -> Word {
        let letters: Vec<Letter> =
            (1..=self.n).map(|j| if j == self.k { 0 } else { 1 }).collect();
        Word::new(1, letters).unwrap()
    }

    /// The word `0^{k−1} 1 0^{n−k}` of the multiplicative-monoid
    /// realization, the letter-complement of [`Classic::to_word`].
    pub fn to_mult_word(&self) -> Word {
        let letters: Vec<Letter> =
            (1..=self.n).map(|j| if j == self.k { 1 } else { 0 }).collect();
        Word::new(1, letters).unwrap()
    }
}
