//! Trace polynomials in a single 2x2 matrix `A`, with every trace kept at
//! its written position.
//!
//! A word like `A^2 tr(A) A` is `[A, A, Tr([A]), A]`; `tr(A^2 tr(A) A)` is
//! `Tr([A, A, Tr([A]), A])`. A word with no bare `A` stands for that
//! product of ring elements times `I`.

use rustc_hash::FxHashMap;

use crate::algebra::RingElement;
use crate::matrix::Mat2;
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sym {
    A,
    Tr(Vec<Sym>),
}

impl Sym {
    /// `tr(A^k)`.
    pub fn tr_pow(k: usize) -> Sym {
        Sym::Tr(vec![Sym::A; k])
    }

    fn render(&self, out: &mut String) {
        match self {
            Sym::A => out.push('A'),
            Sym::Tr(w) => {
                out.push_str("tr(");
                render_word(w, out);
                out.push(')');
            }
        }
    }
}

fn render_word(w: &[Sym], out: &mut String) {
    if w.is_empty() {
        out.push('I');
    }
    for (k, s) in w.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        s.render(out);
    }
}

/// `sum_k c_k * word_k`.
#[derive(Clone, Debug, Default)]
pub struct TraceExpr {
    terms: Vec<(Rational, Vec<Sym>)>,
}

impl TraceExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn term(mut self, num: i64, den: i64, word: Vec<Sym>) -> Self {
        self.terms.push((Rational::new(num, den), word));
        self
    }

    pub fn terms(&self) -> &[(Rational, Vec<Sym>)] {
        &self.terms
    }

    /// Human-readable rendering, e.g. `A A A A - 1/2 A A tr(A) A + ...`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, (c, w)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !c.abs().is_one() {
                out.push_str(&c.abs().to_string());
                out.push(' ');
            }
            render_word(w, &mut out);
        }
        out
    }

    pub fn evaluate(&self, a: &Mat2) -> Mat2 {
        let mut ev = Evaluator::new(a);
        let mut sum = Mat2::zero(a.ring());
        for (c, w) in &self.terms {
            let m = ev.word(w);
            sum = sum.add(&m.scale(c));
        }
        sum
    }
}

#[derive(Clone)]
enum Partial {
    Elem(RingElement),
    Mat(Mat2),
}

/// Evaluates words with memoised prefixes and traces.
struct Evaluator<'a> {
    a: &'a Mat2,
    prefixes: FxHashMap<Vec<Sym>, Partial>,
    traces: FxHashMap<Vec<Sym>, RingElement>,
}

impl<'a> Evaluator<'a> {
    fn new(a: &'a Mat2) -> Self {
        Evaluator { a, prefixes: FxHashMap::default(), traces: FxHashMap::default() }
    }

    fn trace_of(&mut self, w: &[Sym]) -> RingElement {
        if let Some(t) = self.traces.get(w) {
            return t.clone();
        }
        let t = self.word(w).trace();
        self.traces.insert(w.to_vec(), t.clone());
        t
    }

    fn partial(&mut self, w: &[Sym]) -> Option<Partial> {
        if w.is_empty() {
            return None;
        }
        if let Some(p) = self.prefixes.get(w) {
            return Some(p.clone());
        }
        let (last, head) = w.split_last().unwrap();
        let prev = self.partial(head);
        let next = match (prev, last) {
            (None, Sym::A) => Partial::Mat(self.a.clone()),
            (None, Sym::Tr(inner)) => Partial::Elem(self.trace_of(inner)),
            (Some(Partial::Elem(l)), Sym::A) => Partial::Mat(Mat2::scalar_left(&l, self.a)),
            (Some(Partial::Elem(l)), Sym::Tr(inner)) => Partial::Elem(l.mul(&self.trace_of(inner))),
            (Some(Partial::Mat(m)), Sym::A) => Partial::Mat(m.mul(self.a)),
            (Some(Partial::Mat(m)), Sym::Tr(inner)) => {
                Partial::Mat(Mat2::scalar_right(&m, &self.trace_of(inner)))
            }
        };
        self.prefixes.insert(w.to_vec(), next.clone());
        Some(next)
    }

    fn word(&mut self, w: &[Sym]) -> Mat2 {
        match self.partial(w) {
            None => Mat2::identity(self.a.ring()),
            Some(Partial::Elem(e)) => Mat2::scalar_matrix(&e),
            Some(Partial::Mat(m)) => m,
        }
    }
}
