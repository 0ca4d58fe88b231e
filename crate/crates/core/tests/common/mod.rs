//! Test oracles built only from the defining relations of each family.
//!
//! `Rewriter` is a naive string-rewriting engine over the free algebra: a
//! rule replaces the first occurrence of a word by a linear combination of
//! words, until nothing applies. The per-family rule sets are the defining
//! relations oriented so that `y`-letters end up left of `x`-letters.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gk2hopf_core::algebra::{BasisIndex, Element, Tensor2};
use gk2hopf_core::scalars::CycloScalar;
use gk2hopf_core::FamilyParams;

pub type Word = Vec<u8>;
pub type Poly = BTreeMap<Word, CycloScalar>;
pub type TensorPoly = BTreeMap<(Word, Word), CycloScalar>;

pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(CycloScalar, Word)>,
}

pub struct Rewriter {
    pub rules: Vec<Rule>,
}

pub fn add_to(p: &mut Poly, w: Word, c: CycloScalar) {
    let e = p.entry(w.clone()).or_insert_with(CycloScalar::zero);
    *e = e.add(&c);
    if e.is_zero() {
        p.remove(&w);
    }
}

fn add_tensor(p: &mut TensorPoly, w: (Word, Word), c: CycloScalar) {
    let e = p.entry(w.clone()).or_insert_with(CycloScalar::zero);
    *e = e.add(&c);
    if e.is_zero() {
        p.remove(&w);
    }
}

impl Rewriter {
    fn find(&self, w: &[u8]) -> Option<(usize, &Rule)> {
        for pos in 0..w.len() {
            for r in &self.rules {
                if w[pos..].starts_with(&r.lhs) {
                    return Some((pos, r));
                }
            }
        }
        None
    }

    pub fn normal_form(&self, start: Poly) -> Poly {
        let mut done = Poly::new();
        let mut todo = start;
        let mut steps = 0usize;
        while let Some((w, c)) = todo.pop_first() {
            steps += 1;
            assert!(steps < 2_000_000, "rewriting does not terminate");
            match self.find(&w) {
                None => add_to(&mut done, w, c),
                Some((pos, rule)) => {
                    for (rc, rw) in &rule.rhs {
                        let mut nw = w[..pos].to_vec();
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[pos + rule.lhs.len()..]);
                        add_to(&mut todo, nw, c.mul(rc));
                    }
                }
            }
        }
        done
    }

    pub fn reduce_word(&self, w: Word) -> Poly {
        let mut p = Poly::new();
        p.insert(w, CycloScalar::one());
        self.normal_form(p)
    }

    /// Product of two tensors, each leg reduced.
    pub fn tensor_mul(&self, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::new();
        for ((l1, r1), c1) in a {
            for ((l2, r2), c2) in b {
                let left = self.reduce_word([l1.as_slice(), l2].concat());
                let right = self.reduce_word([r1.as_slice(), r2].concat());
                for (lw, lc) in &left {
                    for (rw, rc) in &right {
                        add_tensor(&mut out, (lw.clone(), rw.clone()), c1.mul(c2).mul(lc).mul(rc));
                    }
                }
            }
        }
        out
    }
}

pub const X: u8 = b'x';
pub const XI: u8 = b'X';

/// Letter of the `k`-th `y`-type generator and its inverse.
pub fn y_letter(k: usize) -> u8 {
    b'a' + k as u8
}
pub fn y_inv_letter(k: usize) -> u8 {
    b'A' + k as u8
}

fn rep(letter: u8, n: i64) -> Word {
    vec![letter; n.max(0) as usize]
}

fn pow_word(pos: u8, neg: u8, e: i64) -> Word {
    if e >= 0 {
        rep(pos, e)
    } else {
        rep(neg, -e)
    }
}

fn rule(lhs: &[u8], rhs: Vec<(CycloScalar, Word)>) -> Rule {
    Rule { lhs: lhs.to_vec(), rhs }
}

fn one() -> CycloScalar {
    CycloScalar::one()
}

/// Generator images under Δ and S, written as combinations of words.
pub struct Oracle {
    pub rw: Rewriter,
    pub slots: usize,
    pub coproduct: BTreeMap<u8, TensorPoly>,
    pub antipode: BTreeMap<u8, Poly>,
}

fn tp(terms: Vec<(CycloScalar, Word, Word)>) -> TensorPoly {
    let mut out = TensorPoly::new();
    for (c, l, r) in terms {
        add_tensor(&mut out, (l, r), c);
    }
    out
}

fn poly(terms: Vec<(CycloScalar, Word)>) -> Poly {
    let mut out = Poly::new();
    for (c, w) in terms {
        add_to(&mut out, w, c);
    }
    out
}

fn grouplike(l: u8) -> TensorPoly {
    tp(vec![(one(), vec![l], vec![l])])
}

fn primitive(l: u8) -> TensorPoly {
    tp(vec![(one(), vec![l], vec![]), (one(), vec![], vec![l])])
}

fn inverse_rules(rules: &mut Vec<Rule>, a: u8, b: u8) {
    rules.push(rule(&[a, b], vec![(one(), vec![])]));
    rules.push(rule(&[b, a], vec![(one(), vec![])]));
}

/// `u v → c v u`
fn swap(rules: &mut Vec<Rule>, u: u8, v: u8, c: CycloScalar) {
    rules.push(rule(&[u, v], vec![(c, vec![v, u])]));
}

pub fn oracle(params: &FamilyParams) -> Oracle {
    let (y, yi) = (y_letter(0), y_inv_letter(0));
    let mut rules = Vec::new();
    let mut coproduct = BTreeMap::new();
    let mut antipode = BTreeMap::new();
    let mut slots = 1;
    match params {
        FamilyParams::GroupZ2 | FamilyParams::GroupZSemiZ => {
            let twisted = matches!(params, FamilyParams::GroupZSemiZ);
            inverse_rules(&mut rules, y, yi);
            inverse_rules(&mut rules, X, XI);
            let (ty, tyi) = if twisted { (yi, y) } else { (y, yi) };
            for xl in [X, XI] {
                rules.push(rule(&[xl, y], vec![(one(), vec![ty, xl])]));
                rules.push(rule(&[xl, yi], vec![(one(), vec![tyi, xl])]));
            }
            for (a, b) in [(y, yi), (yi, y), (X, XI), (XI, X)] {
                coproduct.insert(a, grouplike(a));
                antipode.insert(a, poly(vec![(one(), vec![b])]));
            }
        }
        FamilyParams::EnvAbelian | FamilyParams::EnvNonabelian => {
            let mut rhs = vec![(one(), vec![y, X])];
            if matches!(params, FamilyParams::EnvNonabelian) {
                rhs.push((one(), vec![y]));
            }
            rules.push(rule(&[X, y], rhs));
            for l in [y, X] {
                coproduct.insert(l, primitive(l));
                antipode.insert(l, poly(vec![(one().neg(), vec![l])]));
            }
        }
        FamilyParams::A { n, q } => {
            let qi = q.inv().unwrap();
            inverse_rules(&mut rules, X, XI);
            swap(&mut rules, X, y, q.clone());
            swap(&mut rules, XI, y, qi);
            let xn = pow_word(X, XI, *n);
            let xmn = pow_word(X, XI, -n);
            coproduct.insert(y, tp(vec![(one(), vec![y], vec![]), (one(), xn.clone(), vec![y])]));
            coproduct.insert(X, grouplike(X));
            coproduct.insert(XI, grouplike(XI));
            antipode.insert(y, poly(vec![(one().neg(), [xmn.as_slice(), &[y]].concat())]));
            antipode.insert(X, poly(vec![(one(), vec![XI])]));
            antipode.insert(XI, poly(vec![(one(), vec![X])]));
        }
        FamilyParams::B { n, p, q } => {
            let data = FamilyParams::b_data(*n, p).unwrap();
            slots = data.s();
            inverse_rules(&mut rules, X, XI);
            for i in 0..slots {
                let qm = q.pow(data.mi[i] as i64);
                swap(&mut rules, X, y_letter(i), qm.clone());
                swap(&mut rules, XI, y_letter(i), qm.inv().unwrap());
                for j in 0..i {
                    swap(&mut rules, y_letter(i), y_letter(j), one());
                }
            }
            for i in 1..slots {
                rules.push(rule(
                    &rep(y_letter(i), data.ps[i] as i64),
                    vec![(one(), rep(y_letter(0), data.ps[0] as i64))],
                ));
            }
            for i in 0..slots {
                let shift = (data.mi[i] * data.n) as i64;
                let l = y_letter(i);
                coproduct.insert(l, tp(vec![(one(), vec![l], vec![]), (one(), rep(X, shift), vec![l])]));
                antipode.insert(l, poly(vec![(one().neg(), [rep(XI, shift).as_slice(), &[l]].concat())]));
            }
            coproduct.insert(X, grouplike(X));
            coproduct.insert(XI, grouplike(XI));
            antipode.insert(X, poly(vec![(one(), vec![XI])]));
            antipode.insert(XI, poly(vec![(one(), vec![X])]));
        }
        FamilyParams::C { .. } | FamilyParams::CLift { .. } => {
            let (n, q) = match params {
                FamilyParams::C { n } => (*n as i64, one()),
                FamilyParams::CLift { n, q } => (*n as i64, q.clone()),
                _ => unreachable!(),
            };
            let qi = q.inv().unwrap();
            inverse_rules(&mut rules, y, yi);
            // xy = q yx + y^n - y
            rules.push(rule(
                &[X, y],
                vec![(q.clone(), vec![y, X]), (one(), pow_word(y, yi, n)), (one().neg(), vec![y])],
            ));
            // conjugating by y^{-1}: x y^{-1} = q^{-1}(y^{-1} x - y^{n-2} + y^{-1})
            rules.push(rule(
                &[X, yi],
                vec![(qi.clone(), vec![yi, X]), (qi.neg(), pow_word(y, yi, n - 2)), (qi.clone(), vec![yi])],
            ));
            coproduct.insert(y, grouplike(y));
            coproduct.insert(yi, grouplike(yi));
            coproduct.insert(X, tp(vec![(one(), vec![X], pow_word(y, yi, n - 1)), (one(), vec![], vec![X])]));
            antipode.insert(y, poly(vec![(one(), vec![yi])]));
            antipode.insert(yi, poly(vec![(one(), vec![y])]));
            antipode.insert(X, poly(vec![(one().neg(), [&[X][..], &pow_word(y, yi, 1 - n)].concat())]));
        }
    }
    Oracle { rw: Rewriter { rules }, slots, coproduct, antipode }
}

impl Oracle {
    pub fn word(&self, idx: &BasisIndex) -> Word {
        let mut w = Vec::new();
        for (k, &e) in idx.y.iter().enumerate() {
            w.extend(pow_word(y_letter(k), y_inv_letter(k), e));
        }
        w.extend(pow_word(X, XI, idx.x));
        w
    }

    /// Reads a normal-form word back as a basis index; panics if the word is
    /// not of the form `y-letters, then x-letters`.
    pub fn index(&self, w: &[u8]) -> BasisIndex {
        let mut y = vec![0i64; self.slots];
        let mut x = 0;
        let mut seen_x = false;
        for &l in w {
            match l {
                X => {
                    x += 1;
                    seen_x = true
                }
                XI => {
                    x -= 1;
                    seen_x = true
                }
                l if l.is_ascii_lowercase() => {
                    assert!(!seen_x, "not a normal form: {}", String::from_utf8_lossy(w));
                    y[(l - b'a') as usize] += 1
                }
                l => {
                    assert!(!seen_x, "not a normal form: {}", String::from_utf8_lossy(w));
                    y[(l - b'A') as usize] -= 1
                }
            }
        }
        BasisIndex::multi(&y, x)
    }

    pub fn element(&self, p: &Poly) -> Element {
        let mut out = Element::zero();
        for (w, c) in p {
            out.add_term(self.index(w), c.clone());
        }
        out
    }

    pub fn tensor(&self, p: &TensorPoly) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l, r), c) in p {
            out.add_term((self.index(l), self.index(r)), c.clone());
        }
        out
    }

    pub fn product(&self, a: &BasisIndex, b: &BasisIndex) -> Element {
        let w = [self.word(a), self.word(b)].concat();
        self.element(&self.rw.reduce_word(w))
    }

    /// `Δ` of a monomial as the product of the generator coproducts.
    pub fn coproduct(&self, idx: &BasisIndex) -> Tensor2 {
        let mut acc = tp(vec![(one(), vec![], vec![])]);
        for l in self.word(idx) {
            acc = self.rw.tensor_mul(&acc, &self.coproduct[&l]);
        }
        self.tensor(&acc)
    }

    /// `S` of a monomial as the reversed product of generator antipodes.
    pub fn antipode(&self, idx: &BasisIndex) -> Element {
        let mut acc = poly(vec![(one(), vec![])]);
        for l in self.word(idx).into_iter().rev() {
            let mut next = Poly::new();
            for (w, c) in &acc {
                for (v, d) in &self.antipode[&l] {
                    add_to(&mut next, [w.as_slice(), v].concat(), c.mul(d));
                }
            }
            acc = self.rw.normal_form(next);
        }
        self.element(&acc)
    }
}

/// Coefficients of `(u + v)^a` with `v u = q u v`, by rewriting words in
/// `u, v`. Entry `r` is the coefficient of `u^{a-r} v^r`.
pub fn two_letter_expansion(a: u32, q: &CycloScalar) -> Vec<CycloScalar> {
    let rw = Rewriter { rules: vec![rule(b"vu", vec![(q.clone(), b"uv".to_vec())])] };
    let mut p = poly(vec![(one(), vec![])]);
    for _ in 0..a {
        let mut next = Poly::new();
        for (w, c) in &p {
            add_to(&mut next, [w.as_slice(), b"u"].concat(), c.clone());
            add_to(&mut next, [w.as_slice(), b"v"].concat(), c.clone());
        }
        p = rw.normal_form(next);
    }
    (0..=a as usize)
        .map(|r| {
            let w: Word = [vec![b'u'; a as usize - r], vec![b'v'; r]].concat();
            p.get(&w).cloned().unwrap_or_else(CycloScalar::zero)
        })
        .collect()
}

/// The acceptance grid of instances.
pub fn grid() -> Vec<FamilyParams> {
    let root_of_unity = CycloScalar::root_of_unity;
    let mut out = vec![
        FamilyParams::GroupZ2,
        FamilyParams::GroupZSemiZ,
        FamilyParams::EnvAbelian,
        FamilyParams::EnvNonabelian,
    ];
    let qs = [
        CycloScalar::one(),
        CycloScalar::from_int(-1),
        root_of_unity(3, 1),
        root_of_unity(5, 1),
        CycloScalar::from_int(2),
    ];
    for n in 0..=3 {
        for q in &qs {
            out.push(FamilyParams::A { n, q: q.clone() });
        }
    }
    out.push(FamilyParams::B { n: 1, p: vec![1, 2, 3], q: root_of_unity(6, 1) });
    out.push(FamilyParams::B { n: 2, p: vec![1, 2, 3], q: root_of_unity(12, 1) });
    out.push(FamilyParams::B { n: 7, p: vec![1, 3, 5], q: root_of_unity(105, 1) });
    for n in 2..=5 {
        out.push(FamilyParams::C { n });
    }
    out.push(FamilyParams::CLift { n: 3, q: root_of_unity(4, 1) });
    out
}
