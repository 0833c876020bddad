//! Words and elements of `G(G)`: generators commute iff their vertices are
//! NOT adjacent.
//!
//! Words are flat letter sequences; equal adjacent letters are never merged
//! into exponents. Reduction deletes cancelling pairs, and the canonical
//! [`NormalForm`] is the lexicographically least reduced word for an element,
//! letters ordered by (vertex order, positive before inverse).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::graphs::SimplicialGraph;

/// A generator or its inverse. Ordered by vertex, then positive before inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u32);

impl Letter {
    pub fn new(vertex: usize, inverse: bool) -> Self {
        Letter(((vertex as u32) << 1) | inverse as u32)
    }

    pub fn pos(vertex: usize) -> Self {
        Letter::new(vertex, false)
    }

    pub fn neg(vertex: usize) -> Self {
        Letter::new(vertex, true)
    }

    #[inline]
    pub fn vertex(self) -> usize {
        (self.0 >> 1) as usize
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn sign(self) -> i8 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// Dense code `2 * vertex + inverse`, usable as an array index.
    #[inline]
    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn from_code(code: usize) -> Self {
        Letter(code as u32)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "v{}^-1", self.vertex())
        } else {
            write!(f, "v{}", self.vertex())
        }
    }
}

/// A finite sequence of letters. The ambient graph is supplied by the
/// [`GraphGroup`] that interprets it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(vertex: usize) -> Self {
        Word(vec![Letter::pos(vertex)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word(out)
    }

    /// Set of vertices occurring in the word (not reduced first).
    pub fn letter_bases(&self) -> BTreeSet<usize> {
        self.0.iter().map(|l| l.vertex()).collect()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

// concatenation: the `+` below is a capacity, not the group operation
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + rhs.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&rhs.0);
        Word(v)
    }
}

impl Mul<Word> for Word {
    type Output = Word;
    fn mul(mut self, rhs: Word) -> Word {
        self.0.extend(rhs.0);
        self
    }
}

impl Mul<&Word> for Word {
    type Output = Word;
    fn mul(mut self, rhs: &Word) -> Word {
        self.0.extend_from_slice(&rhs.0);
        self
    }
}

/// Canonical representative of a group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NormalForm(Word);

impl NormalForm {
    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn new_unchecked(w: Word) -> Self {
        NormalForm(w)
    }
}

/// `G(G)` for a borrowed graph.
#[derive(Clone, Copy)]
pub struct GraphGroup<'a> {
    graph: &'a SimplicialGraph,
}

impl SimplicialGraph {
    pub fn group(&self) -> GraphGroup<'_> {
        GraphGroup { graph: self }
    }
}

impl<'a> GraphGroup<'a> {
    pub fn graph(&self) -> &'a SimplicialGraph {
        self.graph
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.graph.vertex_count()
    }

    #[inline]
    pub fn letters_commute(&self, u: Letter, v: Letter) -> bool {
        u.vertex() == v.vertex() || !self.graph.adjacent(u.vertex(), v.vertex())
    }

    /// Whether generator `v` commutes with every letter of `w` (as letters).
    fn commutes_with_letters(&self, v: usize, w: &[Letter]) -> bool {
        w.iter().all(|l| !self.graph.adjacent(v, l.vertex()))
    }

    /// Position pair `(i, j)` (zero based) of a cancellation `v^±1 .. v^∓1`
    /// whose interior letters all commute with `v` and avoid `v`'s base.
    /// Returns the one with the smallest `j`; for that `j`, the nearest `i`.
    pub fn find_cancellation(&self, w: &Word) -> Option<(usize, usize)> {
        let ls = w.letters();
        for j in 0..ls.len() {
            let l = ls[j];
            for i in (0..j).rev() {
                let m = ls[i];
                if m.vertex() == l.vertex() {
                    if m == l.inverse() {
                        return Some((i, j));
                    }
                    break;
                }
                if self.graph.adjacent(m.vertex(), l.vertex()) {
                    break;
                }
            }
        }
        None
    }

    pub fn is_reduced(&self, w: &Word) -> bool {
        self.find_cancellation(w).is_none()
    }

    /// Whether `l` can be appended to the reduced word `prefix` keeping it reduced.
    pub fn extends_reduced(&self, prefix: &[Letter], l: Letter) -> bool {
        for &m in prefix.iter().rev() {
            if m.vertex() == l.vertex() {
                return m != l.inverse();
            }
            if self.graph.adjacent(m.vertex(), l.vertex()) {
                return true;
            }
        }
        true
    }

    /// Whether `l` can be appended to the normal form `prefix` keeping it a
    /// normal form: reduced, and `l` cannot be shuffled left past a larger letter.
    pub fn extends_normal_form(&self, prefix: &[Letter], l: Letter) -> bool {
        for &m in prefix.iter().rev() {
            if m.vertex() == l.vertex() {
                return m == l;
            }
            if self.graph.adjacent(m.vertex(), l.vertex()) {
                return true;
            }
            if l < m {
                return false;
            }
        }
        true
    }

    /// Deletes cancelling pairs until none remain. Letters are pushed onto a
    /// reduced stack; an incoming letter deletes the nearest inverse it can
    /// commute back to, which is the same pair [`find_cancellation`](Self::find_cancellation)
    /// reports first.
    pub fn reduce(&self, w: &Word) -> Word {
        Word(self.reduce_letters(w.letters()))
    }

    pub(crate) fn reduce_letters(&self, ls: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(ls.len());
        for &l in ls {
            let mut cancel_at = None;
            for k in (0..out.len()).rev() {
                let m = out[k];
                if m.vertex() == l.vertex() {
                    if m == l.inverse() {
                        cancel_at = Some(k);
                    }
                    break;
                }
                if self.graph.adjacent(m.vertex(), l.vertex()) {
                    break;
                }
            }
            match cancel_at {
                Some(k) => {
                    out.remove(k);
                }
                None => out.push(l),
            }
        }
        out
    }

    /// Lexicographically least reduced word for the element of `w`: repeatedly
    /// emit the least letter that commutes with everything still before it.
    pub fn normal_form(&self, w: &Word) -> NormalForm {
        let mut rest = self.reduce_letters(w.letters());
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for k in 0..rest.len() {
                if best.is_some_and(|b| rest[k] >= rest[b]) {
                    continue;
                }
                if rest[..k].iter().all(|&m| self.letters_commute(m, rest[k])) {
                    best = Some(k);
                }
            }
            let k = best.expect("the first letter is always available");
            out.push(rest.remove(k));
        }
        NormalForm(Word(out))
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        self.reduce_letters(w.letters()).is_empty()
    }

    pub fn equal(&self, u: &Word, w: &Word) -> bool {
        self.is_trivial(&(u * &w.inverse()))
    }

    /// Vertices occurring in a reduced word for `w`.
    pub fn support(&self, w: &Word) -> BTreeSet<usize> {
        self.reduce_letters(w.letters()).iter().map(|l| l.vertex()).collect()
    }

    /// `[u, w] = u^-1 w^-1 u w`, as a formal unreduced product.
    pub fn commutator(&self, u: &Word, w: &Word) -> Word {
        u.inverse() * w.inverse() * u * w
    }

    /// Left-normed `[g1, g2, ..., gk] = [[...[g1, g2], ...], gk]`, each step reduced.
    /// A single argument is returned reduced; no arguments give the identity.
    pub fn iterated_commutator(&self, gs: &[Word]) -> Word {
        let mut iter = gs.iter();
        let Some(first) = iter.next() else { return Word::empty() };
        iter.fold(self.reduce(first), |acc, g| self.reduce(&self.commutator(&acc, g)))
    }

    pub fn commute_elements(&self, u: &Word, w: &Word) -> bool {
        self.is_trivial(&self.commutator(u, w))
    }

    /// `b^w = w^-1 b w`, unreduced.
    pub fn conjugate_word(&self, b: Letter, w: &Word) -> Word {
        let mut out = w.inverse();
        out.push(b);
        out * w
    }

    /// `g^h = h^-1 g h`, unreduced.
    pub fn conjugate(&self, g: &Word, h: &Word) -> Word {
        h.inverse() * g * h
    }

    /// `([a, w] == 1, Lk(a) ∩ supp(w) == ∅)`. The two always agree; computed
    /// independently so each can check the other.
    pub fn check_lemma_comm1(&self, a: usize, w: &Word) -> (bool, bool) {
        let commute = self.commute_elements(&Word::generator(a), w);
        let disjoint = self.support(w).iter().all(|&c| !self.graph.adjacent(a, c));
        (commute, disjoint)
    }

    /// Positions of letters of `w` that commute with every letter before them.
    pub fn front_positions(&self, w: &[Letter]) -> Vec<usize> {
        (0..w.len())
            .filter(|&k| w[..k].iter().all(|&m| self.letters_commute(m, w[k])))
            .collect()
    }

    /// Whether `w` commutes letterwise with generator `v` (no letter adjacent to `v`).
    pub fn letters_commute_with(&self, v: usize, w: &Word) -> bool {
        self.commutes_with_letters(v, w.letters())
    }

    /// Visits every normal form of length `1..=max_len` (the identity is not
    /// visited), shorter words before their extensions, letters in increasing order.
    pub fn for_each_normal_form(&self, max_len: usize, mut f: impl FnMut(&[Letter])) {
        let mut cur = Vec::with_capacity(max_len);
        self.nf_dfs(max_len, &mut cur, &mut f, true);
    }

    /// Visits every reduced word of length `1..=max_len`.
    pub fn for_each_reduced_word(&self, max_len: usize, mut f: impl FnMut(&[Letter])) {
        let mut cur = Vec::with_capacity(max_len);
        self.nf_dfs(max_len, &mut cur, &mut f, false);
    }

    fn nf_dfs(&self, max_len: usize, cur: &mut Vec<Letter>, f: &mut impl FnMut(&[Letter]), canonical: bool) {
        if cur.len() == max_len {
            return;
        }
        for code in 0..2 * self.rank() {
            let l = Letter::from_code(code);
            let ok = if canonical { self.extends_normal_form(cur, l) } else { self.extends_reduced(cur, l) };
            if ok {
                cur.push(l);
                f(cur);
                self.nf_dfs(max_len, cur, f, canonical);
                cur.pop();
            }
        }
    }

    /// Normal forms of length `0..=max_len`, ordered by length then lexicographically.
    pub fn normal_forms(&self, max_len: usize) -> Vec<NormalForm> {
        let mut out = vec![NormalForm::default()];
        self.for_each_normal_form(max_len, |w| out.push(NormalForm(Word(w.to_vec()))));
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Parses whitespace-separated tokens `v`, `v^-1` or `v^k` (integer `k`).
    /// Empty input is the identity.
    pub fn parse_word(&self, input: &str) -> Result<Word> {
        let mut out = Vec::new();
        let mut offset = 0;
        for piece in input.split_inclusive(char::is_whitespace) {
            let token = piece.trim_end();
            let column = offset + 1;
            offset += piece.len();
            if token.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: 1, column, message };
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i32),
                Some((name, e)) => {
                    let e = e.trim_start_matches('(').trim_end_matches(')');
                    let k = e.parse::<i32>().map_err(|_| err(format!("bad exponent in {token:?}")))?;
                    (name, k)
                }
            };
            let v = self
                .graph
                .index_of(name)
                .ok_or_else(|| err(format!("unknown generator {name:?}")))?;
            let l = Letter::new(v, exp < 0);
            out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(Word(out))
    }

    pub fn format_letter(&self, l: Letter) -> String {
        let name = self.graph.label(l.vertex());
        if l.is_inverse() {
            format!("{name}^-1")
        } else {
            name.to_string()
        }
    }

    /// Word syntax; the identity formats as the empty string.
    pub fn format_word(&self, w: &Word) -> String {
        let parts: Vec<String> = w.letters().iter().map(|&l| self.format_letter(l)).collect();
        parts.join(" ")
    }

    pub fn format_support(&self, s: &BTreeSet<usize>) -> Vec<String> {
        s.iter().map(|&v| self.graph.label(v).to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> SimplicialGraph {
        SimplicialGraph::path(n).unwrap()
    }

    fn w(g: &SimplicialGraph, s: &str) -> Word {
        g.group().parse_word(s).unwrap()
    }

    #[test]
    fn commutation_of_letters() {
        let g = p(5);
        let grp = g.group();
        assert!(grp.letters_commute(Letter::pos(1), Letter::pos(3)));
        assert!(!grp.letters_commute(Letter::pos(1), Letter::pos(2)));
        for v in 0..5 {
            assert!(grp.letters_commute(Letter::pos(v), Letter::neg(v)));
        }
    }

    #[test]
    fn cancellations() {
        let g = p(5);
        let grp = g.group();
        assert_eq!(grp.find_cancellation(&w(&g, "x1 x3 x1^-1")), Some((0, 2)));
        assert_eq!(grp.find_cancellation(&w(&g, "x2 x3 x2^-1")), None);
        assert_eq!(grp.find_cancellation(&w(&g, "x2 x4 x2^-1 x4^-1")), Some((0, 2)));
        // innermost: the nearer x1 is chosen
        assert_eq!(grp.find_cancellation(&w(&g, "x1^-1 x1^-1 x3 x1")), Some((1, 3)));
    }

    #[test]
    fn reduction() {
        let g = p(5);
        let grp = g.group();
        assert!(grp.reduce(&w(&g, "x1 x1^-1")).is_empty());
        let phi_image = w(&g, "x4^-1 x2^-1 x3^-1 x2 x4 x3");
        assert_eq!(grp.reduce(&phi_image).len(), 6);
        assert_eq!(grp.reduce(&w(&g, "x1 x3 x1")).len(), 3);
        assert_eq!(grp.reduce(&w(&g, "x1 x3 x2 x2^-1 x1^-1 x3^-1")), Word::empty());
    }

    #[test]
    fn normal_forms() {
        let g = p(5);
        let grp = g.group();
        let nf = |s| grp.format_word(grp.normal_form(&w(&g, s)).as_word());
        assert_eq!(nf("x3 x1"), "x1 x3");
        assert_eq!(nf("x3 x2"), "x3 x2");
        assert_eq!(nf("x1 x3 x1"), "x1 x1 x3");
        assert_eq!(nf("x1^-1 x3 x1"), "x3");
        assert_eq!(nf("x3 x1^-1"), "x1^-1 x3");
    }

    #[test]
    fn word_problem() {
        let g = SimplicialGraph::from_labels(&["a", "b"], &[]).unwrap();
        let grp = g.group();
        assert!(grp.equal(&w(&g, "a b"), &w(&g, "b a")));
        let p5 = p(5);
        let grp = p5.group();
        let args = |s: &str| -> Vec<Word> { s.split(';').map(|t| w(&p5, t)).collect() };
        assert!(grp.is_trivial(&grp.iterated_commutator(&args("x2;x3;x1;x5"))));
        assert!(grp.is_trivial(&grp.iterated_commutator(&args("x4;x3;x1;x5"))));
        assert!(!grp.is_trivial(&grp.iterated_commutator(&args("x2 x4;x3;x1;x5"))));
    }

    #[test]
    fn supports() {
        let g = p(5);
        let grp = g.group();
        assert!(grp.support(&w(&g, "x1 x1^-1")).is_empty());
        assert_eq!(grp.support(&w(&g, "x2^-1 x1 x2")), BTreeSet::from([0, 1]));
        let c = grp.commutator(&w(&g, "x2 x4"), &w(&g, "x3"));
        assert_eq!(grp.support(&c), BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn commutators() {
        let g = p(5);
        let grp = g.group();
        let u = w(&g, "x2 x3^-1 x5");
        assert!(grp.commute_elements(&u, &u));
        assert!(!grp.commute_elements(&w(&g, "x1"), &w(&g, "x2^-1 x3 x2")));
        assert_eq!(grp.conjugate_word(Letter::pos(0), &w(&g, "x2")), w(&g, "x2^-1 x1 x2"));
        assert!(grp.iterated_commutator(&[]).is_empty());
    }

    #[test]
    fn lemma_comm1_examples() {
        let g = p(5);
        let grp = g.group();
        assert_eq!(grp.check_lemma_comm1(0, &Word::empty()), (true, true));
        assert_eq!(grp.check_lemma_comm1(0, &w(&g, "x2^-1 x3 x2")), (false, false));
        assert_eq!(grp.check_lemma_comm1(4, &w(&g, "x2^-1 x1 x2")), (true, true));
    }

    #[test]
    fn parse_and_format() {
        let g = p(3);
        let grp = g.group();
        assert_eq!(grp.parse_word("").unwrap(), Word::empty());
        assert_eq!(grp.parse_word("x1^-1  x2 ").unwrap(), Word::new(vec![Letter::neg(0), Letter::pos(1)]));
        assert_eq!(grp.parse_word("x3^2").unwrap().len(), 2);
        assert_eq!(grp.format_word(&w(&g, "x1 x3^-1")), "x1 x3^-1");
        assert_eq!(
            grp.parse_word("x1 x9").unwrap_err(),
            Error::Parse { line: 1, column: 4, message: "unknown generator \"x9\"".into() }
        );
        assert!(grp.parse_word("x1^a").is_err());
    }

    #[test]
    fn normal_form_enumeration_matches_normalizing_all_words() {
        let g = p(4);
        let grp = g.group();
        let mut from_all = BTreeSet::new();
        let mut stack = vec![Vec::new()];
        while let Some(cur) = stack.pop() {
            from_all.insert(grp.normal_form(&Word::new(cur.clone())));
            if cur.len() < 4 {
                for code in 0..8 {
                    let mut nxt = cur.clone();
                    nxt.push(Letter::from_code(code));
                    stack.push(nxt);
                }
            }
        }
        let enumerated: Vec<NormalForm> = grp.normal_forms(4);
        let as_set: BTreeSet<NormalForm> = enumerated.iter().cloned().collect();
        assert_eq!(as_set.len(), enumerated.len());
        assert_eq!(as_set, from_all);
        let mut reduced = 0usize;
        grp.for_each_reduced_word(3, |_| reduced += 1);
        // every reduced word is a shuffle of some normal form, never fewer
        assert!(reduced >= enumerated.iter().filter(|n| (1..=3).contains(&n.len())).count());
    }
}
