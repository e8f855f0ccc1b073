//! Evaluators for the commutator identities and 2x2 trace identities.
//!
//! Every evaluator returns a residual: a ring element or matrix that is
//! identically zero exactly when the identity holds at the given inputs.

mod trace_expr;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{AlgebraError, Ring, RingElement};
use crate::matrix::Mat2;
use crate::poly::Polynomial;
use crate::scalar::Rational;

pub use trace_expr::{Sym, TraceExpr};

/// Deepest `C_k` the recursion will compute; degree doubles per step.
pub const MAX_CK_DEPTH: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("expected {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("bracket index must be at least 1")]
    BracketIndex,
    #[error("input matrix must have trace zero")]
    NonzeroTrace,
    #[error("hypothesis {0} does not hold for this input")]
    Hypothesis(&'static str),
    #[error("recursion depth {0} exceeds bound {max}", max = MAX_CK_DEPTH)]
    Depth(usize),
    #[error("unknown identity `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Registry of checkable statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `[x,y][u,v] = 0`
    CommProduct,
    /// `[[x,y],z] = 0`
    DoubleCommZ,
    /// `[[x,y],[u,v]] = 0`
    LieSolv2,
    /// `[[x,y],[x,z]] = 0`
    WeakSolv2,
    /// balanced bracket of `2^k` arguments vanishes
    LieSolvK,
    /// left-normed bracket of `m+1` arguments vanishes
    LieNilpM,
    Prop31,
    Cor32,
    Thm33,
    Cor34,
    Cor35,
    Cor36,
    Thm37,
    Domokos,
    /// `C_k = 0` along the squaring recursion
    CkVanish,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::CommProduct,
        IdentityId::DoubleCommZ,
        IdentityId::LieSolv2,
        IdentityId::WeakSolv2,
        IdentityId::LieSolvK,
        IdentityId::LieNilpM,
        IdentityId::Prop31,
        IdentityId::Cor32,
        IdentityId::Thm33,
        IdentityId::Cor34,
        IdentityId::Cor35,
        IdentityId::Cor36,
        IdentityId::Thm37,
        IdentityId::Domokos,
        IdentityId::CkVanish,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::CommProduct => "comm_product",
            IdentityId::DoubleCommZ => "double_comm_z",
            IdentityId::LieSolv2 => "lie_solv2",
            IdentityId::WeakSolv2 => "weak_solv2",
            IdentityId::LieSolvK => "lie_solv_k",
            IdentityId::LieNilpM => "lie_nilp_m",
            IdentityId::Prop31 => "prop31",
            IdentityId::Cor32 => "cor32",
            IdentityId::Thm33 => "thm33",
            IdentityId::Cor34 => "cor34",
            IdentityId::Cor35 => "cor35",
            IdentityId::Cor36 => "cor36",
            IdentityId::Thm37 => "thm37",
            IdentityId::Domokos => "domokos",
            IdentityId::CkVanish => "ck_vanish",
        }
    }

    /// Short formula for reports.
    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::CommProduct => "[x,y][u,v] = 0",
            IdentityId::DoubleCommZ => "[[x,y],z] = 0",
            IdentityId::LieSolv2 => "[[x,y],[u,v]] = 0",
            IdentityId::WeakSolv2 => "[[x,y],[x,z]] = 0",
            IdentityId::LieSolvK => "[x1,...,x_{2^k}]_solv = 0",
            IdentityId::LieNilpM => "[[...[x1,x2],...],x_{m+1}] = 0",
            IdentityId::Prop31 => "A^2 - tr(A)A + 1/2(tr^2(A) - tr(A^2))I = commutator matrix",
            IdentityId::Cor32 => "B^2 - 1/2 tr(B^2)I = commutator matrix, tr(B) = 0",
            IdentityId::Thm33 => "(C^2 - 1/2 tr(C^2)I)^2 - 1/2 tr((C^2 - 1/2 tr(C^2)I)^2)I = 0, tr(C) = 0",
            IdentityId::Cor34 => "C^4 - 1/2 tr(C^2)C^2 - 1/2 C^2 tr(C^2) + 1/2(tr^2(C^2) - tr(C^4))I = 0, tr(C) = 0",
            IdentityId::Cor35 => "C^4 = 0 when tr(C) = tr(C^2) = tr(C^4) = 0",
            IdentityId::Cor36 => "degree-4 identity for C = A - 1/2 tr(A)I",
            IdentityId::Thm37 => "expanded degree-4 trace identity in A",
            IdentityId::Domokos => "A^4 - 2tr(A)A^3 + ... = 0 (left coefficients)",
            IdentityId::CkVanish => "C_k = 0 for C_{k+1} = C_k^2 - 1/2 tr(C_k^2)I",
        }
    }

    pub fn is_matrix(self) -> bool {
        !matches!(
            self,
            IdentityId::CommProduct
                | IdentityId::DoubleCommZ
                | IdentityId::LieSolv2
                | IdentityId::WeakSolv2
                | IdentityId::LieSolvK
                | IdentityId::LieNilpM
        )
    }

    /// Each argument occurs exactly once in every monomial of the residual.
    pub fn is_multilinear(self) -> bool {
        matches!(
            self,
            IdentityId::CommProduct
                | IdentityId::DoubleCommZ
                | IdentityId::LieSolv2
                | IdentityId::LieSolvK
                | IdentityId::LieNilpM
        )
    }

    /// Names of the ring-element arguments, in evaluation order.
    pub fn arg_names(self, params: &Params) -> Vec<String> {
        let fixed: &[&str] = match self {
            IdentityId::CommProduct | IdentityId::LieSolv2 => &["x", "y", "u", "v"],
            IdentityId::DoubleCommZ | IdentityId::WeakSolv2 => &["x", "y", "z"],
            IdentityId::Prop31 | IdentityId::Cor36 | IdentityId::Thm37 | IdentityId::Domokos => {
                &["a11", "a12", "a21", "a22"]
            }
            // traceless inputs [[x, y], [z, -x]]
            IdentityId::Cor32 | IdentityId::Thm33 | IdentityId::Cor34 | IdentityId::CkVanish => {
                &["x", "y", "z"]
            }
            IdentityId::Cor35 => &["c", "d", "e"],
            IdentityId::LieSolvK => {
                return (1..=1usize << params.solv_k).map(|i| format!("x{i}")).collect();
            }
            IdentityId::LieNilpM => return (1..=params.nilp_m + 1).map(|i| format!("x{i}")).collect(),
        };
        fixed.iter().map(|s| s.to_string()).collect()
    }

    pub fn arity(self, params: &Params) -> usize {
        self.arg_names(params).len()
    }

    /// Total degree of the residual in its arguments.
    pub fn degree(self, params: &Params) -> usize {
        match self {
            IdentityId::DoubleCommZ => 3,
            IdentityId::Prop31 | IdentityId::Cor32 => 2,
            IdentityId::LieSolvK => 1 << params.solv_k,
            IdentityId::LieNilpM => params.nilp_m + 1,
            IdentityId::CkVanish => 1 << params.ck_depth,
            _ => 4,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| IdentityError::Unknown(s.to_string()))
    }
}

/// Size parameters of the parameterised identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    /// `k` of `lie_solv_k` (`2^k` arguments).
    pub solv_k: u32,
    /// `m` of `lie_nilp_m` (`m+1` arguments).
    pub nilp_m: usize,
    /// depth of `ck_vanish`.
    pub ck_depth: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params { solv_k: 3, nilp_m: 2, ck_depth: 2 }
    }
}

/// Location of one scalar coefficient inside a residual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coordinate {
    /// Zero-based matrix entry, `None` for element residuals.
    pub entry: Option<(usize, usize)>,
    pub basis: usize,
}

impl Coordinate {
    pub fn render(&self, ring: &Ring) -> String {
        match self.entry {
            Some((r, c)) => format!("({},{})[{}]", r + 1, c + 1, ring.label(self.basis)),
            None => format!("[{}]", ring.label(self.basis)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Element(RingElement),
    Matrix(Mat2),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Element(e) => e.is_zero(),
            Residual::Matrix(m) => m.is_zero(),
        }
    }

    pub fn ring(&self) -> &Ring {
        match self {
            Residual::Element(e) => e.ring(),
            Residual::Matrix(m) => m.ring(),
        }
    }

    /// All nonzero coordinates in entry-major, basis-minor order.
    pub fn nonzero_coordinates(&self) -> Vec<(Coordinate, Polynomial)> {
        match self {
            Residual::Element(e) => e
                .coords()
                .iter()
                .map(|(b, p)| (Coordinate { entry: None, basis: *b }, p.clone()))
                .collect(),
            Residual::Matrix(m) => (0..2)
                .flat_map(|r| (0..2).map(move |c| (r, c)))
                .flat_map(|(r, c)| {
                    m.get(r, c)
                        .coords()
                        .iter()
                        .map(move |(b, p)| (Coordinate { entry: Some((r, c)), basis: *b }, p.clone()))
                })
                .collect(),
        }
    }

    pub fn first_nonzero(&self) -> Option<(Coordinate, Polynomial)> {
        match self {
            Residual::Element(e) => e
                .first_nonzero()
                .map(|(b, p)| (Coordinate { entry: None, basis: b }, p.clone())),
            Residual::Matrix(m) => m
                .first_nonzero()
                .map(|(r, c, b, p)| (Coordinate { entry: Some((r, c)), basis: b }, p.clone())),
        }
    }

    pub fn coordinate(&self, at: Coordinate) -> Polynomial {
        match (self, at.entry) {
            (Residual::Element(e), None) => e.coord(at.basis),
            (Residual::Matrix(m), Some((r, c))) => m.get(r, c).coord(at.basis),
            _ => Polynomial::zero(),
        }
    }

    pub fn sub(&self, other: &Residual) -> Residual {
        match (self, other) {
            (Residual::Element(a), Residual::Element(b)) => Residual::Element(a.sub(b)),
            (Residual::Matrix(a), Residual::Matrix(b)) => Residual::Matrix(a.sub(b)),
            _ => panic!("residual kinds differ"),
        }
    }
}

fn check_arity(xs: &[RingElement], expected: usize) -> Result<(), IdentityError> {
    if xs.len() == expected {
        Ok(())
    } else {
        Err(IdentityError::Arity { expected, got: xs.len() })
    }
}

fn check_same_ring(xs: &[RingElement]) -> Result<(), IdentityError> {
    if let Some(first) = xs.first() {
        for x in &xs[1..] {
            if !x.ring().same_ring(first.ring()) {
                return Err(AlgebraError::DescriptorMismatch(
                    first.ring().name().to_string(),
                    x.ring().name().to_string(),
                )
                .into());
            }
        }
    }
    Ok(())
}

fn require_traceless(m: &Mat2) -> Result<(), IdentityError> {
    if m.trace().is_zero() {
        Ok(())
    } else {
        Err(IdentityError::NonzeroTrace)
    }
}

fn half() -> Rational {
    Rational::half()
}

/// Left-normed `[[...[[x1,x2],x3],...],x_m],x_{m+1}]`.
pub fn lie_nilpotent_bracket(m: usize, xs: &[RingElement]) -> Result<RingElement, IdentityError> {
    if m < 1 {
        return Err(IdentityError::BracketIndex);
    }
    check_arity(xs, m + 1)?;
    check_same_ring(xs)?;
    Ok(xs[2..].iter().fold(xs[0].commutator(&xs[1]), |acc, x| acc.commutator(x)))
}

/// Balanced bracket of `2^k` arguments:
/// `[x1..x_{2^(i+1)}] = [[x1..x_{2^i}], [x_{2^i+1}..x_{2^(i+1)}]]`.
pub fn lie_solvable_bracket(k: u32, xs: &[RingElement]) -> Result<RingElement, IdentityError> {
    if k < 1 {
        return Err(IdentityError::BracketIndex);
    }
    check_arity(xs, 1usize << k)?;
    check_same_ring(xs)?;
    fn go(xs: &[RingElement]) -> RingElement {
        if xs.len() == 2 {
            return xs[0].commutator(&xs[1]);
        }
        let (l, r) = xs.split_at(xs.len() / 2);
        go(l).commutator(&go(r))
    }
    Ok(go(xs))
}

/// Left-hand side `A^2 - tr(A)A + 1/2(tr^2(A) - tr(A^2))I`.
pub fn prop31_lhs(a: &Mat2) -> Mat2 {
    let t = a.trace();
    let a2 = a.mul(a);
    let scalar = t.mul(&t).sub(&a2.trace()).scale(&half());
    a2.sub(&Mat2::scalar_left(&t, a)).add(&Mat2::scalar_matrix(&scalar))
}

/// The commutator matrix
/// `[[1/2[a11,a22] + 1/2[a12,a21], [a12,a22]], [[a21,a11], -(1/2[a11,a22] + 1/2[a12,a21])]]`.
pub fn prop31_display(a: &Mat2) -> Mat2 {
    let e = |r, c| a.get(r, c);
    let diag = e(0, 0).commutator(e(1, 1)).add(&e(0, 1).commutator(e(1, 0))).scale(&half());
    Mat2::from_rows(
        diag.clone(),
        e(0, 1).commutator(e(1, 1)),
        e(1, 0).commutator(e(0, 0)),
        diag.neg(),
    )
    .unwrap()
}

/// `prop31_lhs(A) - prop31_display(A)`; zero over every ring.
pub fn prop31_residual(a: &Mat2) -> Mat2 {
    prop31_lhs(a).sub(&prop31_display(a))
}

/// `B^2 - 1/2 tr(B^2) I`.
fn square_shift(b: &Mat2) -> Mat2 {
    let b2 = b.mul(b);
    let tr = b2.trace().scale(&half());
    b2.sub(&Mat2::scalar_matrix(&tr))
}

/// `[[1/2[b12,b21], -[b12,b11]], [[b21,b11], -1/2[b12,b21]]]`.
pub fn cor32_display(b: &Mat2) -> Result<Mat2, IdentityError> {
    require_traceless(b)?;
    let e = |r, c| b.get(r, c);
    let d = e(0, 1).commutator(e(1, 0)).scale(&half());
    Ok(Mat2::from_rows(
        d.clone(),
        e(0, 1).commutator(e(0, 0)).neg(),
        e(1, 0).commutator(e(0, 0)),
        d.neg(),
    )?)
}

/// `B^2 - 1/2 tr(B^2)I - cor32_display(B)`; zero over every ring.
pub fn cor32_residual(b: &Mat2) -> Result<Mat2, IdentityError> {
    let display = cor32_display(b)?;
    Ok(square_shift(b).sub(&display))
}

/// `(C^2 - 1/2 tr(C^2)I)^2 - 1/2 tr((C^2 - 1/2 tr(C^2)I)^2) I`.
pub fn thm33_residual(c: &Mat2) -> Result<Mat2, IdentityError> {
    require_traceless(c)?;
    Ok(square_shift(&square_shift(c)))
}

/// `1/2 [[-[[c12,c11],[c21,c11]], [[c12,c11],[c12,c21]]],
///       [[[c21,c11],[c12,c21]], [[c12,c11],[c21,c11]]]]`.
pub fn thm33_display(c: &Mat2) -> Result<Mat2, IdentityError> {
    require_traceless(c)?;
    let e = |r, s| c.get(r, s);
    let p = e(0, 1).commutator(e(0, 0)); // [c12,c11]
    let q = e(1, 0).commutator(e(0, 0)); // [c21,c11]
    let r = e(0, 1).commutator(e(1, 0)); // [c12,c21]
    let pq = p.commutator(&q);
    Ok(Mat2::from_rows(pq.neg(), p.commutator(&r), q.commutator(&r), pq)?.scale(&half()))
}

/// `C^4 - 1/2 tr(C^2)C^2 - 1/2 C^2 tr(C^2) + 1/2(tr^2(C^2) - tr(C^4))I`.
pub fn cor34_residual(c: &Mat2) -> Result<Mat2, IdentityError> {
    require_traceless(c)?;
    let c2 = c.mul(c);
    let c4 = c2.mul(&c2);
    let tau = c2.trace();
    let scalar = tau.mul(&tau).sub(&c4.trace()).scale(&half());
    Ok(c4
        .sub(&Mat2::scalar_left(&tau, &c2).scale(&half()))
        .sub(&Mat2::scalar_right(&c2, &tau).scale(&half()))
        .add(&Mat2::scalar_matrix(&scalar)))
}

/// `C^4`, after checking `tr(C) = tr(C^2) = tr(C^4) = 0` exactly.
pub fn cor35_check(c: &Mat2) -> Result<Mat2, IdentityError> {
    if !c.trace().is_zero() {
        return Err(IdentityError::Hypothesis("tr(C) = 0"));
    }
    let c2 = c.mul(c);
    if !c2.trace().is_zero() {
        return Err(IdentityError::Hypothesis("tr(C^2) = 0"));
    }
    let c4 = c2.mul(&c2);
    if !c4.trace().is_zero() {
        return Err(IdentityError::Hypothesis("tr(C^4) = 0"));
    }
    Ok(c4)
}

/// `C = A - 1/2 tr(A) I`.
pub fn center_traceless(a: &Mat2) -> Mat2 {
    let shift = a.trace().scale(&half());
    a.sub(&Mat2::scalar_matrix(&shift))
}

/// Degree-4 identity for arbitrary `A`, obtained by substituting
/// `C = A - 1/2 tr(A) I` into [`cor34_residual`].
pub fn cor36_residual(a: &Mat2) -> Mat2 {
    cor34_residual(&center_traceless(a)).expect("centred matrix is traceless")
}

/// The fully expanded degree-4 trace identity in `A`, term by term with
/// every trace at its written position.
pub fn thm37_expr() -> TraceExpr {
    use Sym::A;
    let t = || Sym::tr_pow(1);
    let s = || Sym::tr_pow(2);
    let tr = |w: Vec<Sym>| Sym::Tr(w);
    TraceExpr::new()
        .term(1, 1, vec![A, A, A, A])
        .term(-1, 2, vec![A, A, t(), A])
        .term(-1, 2, vec![A, t(), A, A])
        .term(-1, 2, vec![A, A, A, t()])
        .term(-1, 2, vec![t(), A, A, A])
        .term(1, 2, vec![A, A, t(), t()])
        .term(1, 2, vec![t(), t(), A, A])
        .term(-1, 2, vec![A, A, s()])
        .term(-1, 2, vec![s(), A, A])
        .term(1, 4, vec![A, t(), A, t()])
        .term(1, 4, vec![t(), A, t(), A])
        .term(1, 4, vec![t(), A, A, t()])
        .term(1, 4, vec![A, t(), t(), A])
        .term(-1, 4, vec![t(), A, t(), t()])
        .term(-1, 4, vec![t(), t(), A, t()])
        .term(1, 4, vec![t(), A, s()])
        .term(1, 4, vec![s(), A, t()])
        .term(-1, 4, vec![A, t(), t(), t()])
        .term(-1, 4, vec![t(), t(), t(), A])
        .term(1, 4, vec![A, t(), s()])
        .term(1, 4, vec![s(), t(), A])
        .term(-1, 2, vec![t(), t(), s()])
        .term(-1, 2, vec![s(), t(), t()])
        .term(1, 2, vec![s(), s()])
        .term(1, 4, vec![tr(vec![A, A, t(), A])])
        .term(1, 4, vec![tr(vec![A, t(), A, A])])
        .term(1, 4, vec![Sym::tr_pow(3), t()])
        .term(1, 4, vec![t(), Sym::tr_pow(3)])
        .term(-1, 8, vec![t(), tr(vec![A, t(), A])])
        .term(-1, 8, vec![tr(vec![A, t(), A]), t()])
        .term(-1, 8, vec![tr(vec![A, t(), t(), A])])
        .term(-1, 8, vec![t(), s(), t()])
        .term(1, 2, vec![t(), t(), t(), t()])
        .term(-1, 2, vec![Sym::tr_pow(4)])
}

pub fn thm37_residual(a: &Mat2) -> Mat2 {
    thm37_expr().evaluate(a)
}

/// The degree-4 trace identity with left coefficients for rings with
/// `[[x,y],z] = 0`.
pub fn domokos_expr() -> TraceExpr {
    use Sym::A;
    let t = || Sym::tr_pow(1);
    let s = || Sym::tr_pow(2);
    let t3 = || Sym::tr_pow(3);
    TraceExpr::new()
        .term(1, 1, vec![A, A, A, A])
        .term(-2, 1, vec![t(), A, A, A])
        .term(2, 1, vec![t(), t(), A, A])
        .term(-1, 1, vec![s(), A, A])
        .term(1, 2, vec![t(), s(), A])
        .term(1, 2, vec![s(), t(), A])
        .term(-1, 1, vec![t(), t(), t(), A])
        .term(1, 4, vec![t(), t(), t(), t()])
        .term(1, 4, vec![s(), s()])
        .term(-5, 8, vec![t(), t(), s()])
        .term(1, 8, vec![s(), t(), t()])
        .term(-1, 2, vec![t3(), t()])
        .term(1, 2, vec![t(), t3()])
}

pub fn domokos_residual(a: &Mat2) -> Mat2 {
    domokos_expr().evaluate(a)
}

/// `[C_0, ..., C_k]` with `C_0 = C` and `C_{i+1} = C_i^2 - 1/2 tr(C_i^2) I`.
pub fn ck_sequence(c: &Mat2, k: usize) -> Result<Vec<Mat2>, IdentityError> {
    require_traceless(c)?;
    if k > MAX_CK_DEPTH {
        return Err(IdentityError::Depth(k));
    }
    let mut seq = vec![c.clone()];
    for _ in 0..k {
        let next = square_shift(seq.last().unwrap());
        seq.push(next);
    }
    Ok(seq)
}

fn mat_from4(xs: &[RingElement]) -> Result<Mat2, IdentityError> {
    Ok(Mat2::from_rows(xs[0].clone(), xs[1].clone(), xs[2].clone(), xs[3].clone())?)
}

fn traceless_from3(xs: &[RingElement]) -> Result<Mat2, IdentityError> {
    Ok(Mat2::traceless(&xs[0], &xs[1], &xs[2])?)
}

/// The 2x2 matrix an identity is evaluated at, built from its arguments.
pub fn input_matrix(id: IdentityId, xs: &[RingElement]) -> Result<Option<Mat2>, IdentityError> {
    match id {
        IdentityId::Prop31 | IdentityId::Cor36 | IdentityId::Thm37 | IdentityId::Domokos => {
            check_arity(xs, 4)?;
            mat_from4(xs).map(Some)
        }
        IdentityId::Cor32 | IdentityId::Thm33 | IdentityId::Cor34 | IdentityId::Cor35 | IdentityId::CkVanish => {
            check_arity(xs, 3)?;
            traceless_from3(xs).map(Some)
        }
        _ => Ok(None),
    }
}

/// Evaluates the residual of `id` at the given arguments.
pub fn evaluate(id: IdentityId, params: &Params, xs: &[RingElement]) -> Result<Residual, IdentityError> {
    check_arity(xs, id.arity(params))?;
    check_same_ring(xs)?;
    let m = input_matrix(id, xs)?;
    let m = m.as_ref();
    Ok(match id {
        IdentityId::CommProduct => Residual::Element(xs[0].commutator(&xs[1]).mul(&xs[2].commutator(&xs[3]))),
        IdentityId::DoubleCommZ => Residual::Element(lie_nilpotent_bracket(2, xs)?),
        IdentityId::LieSolv2 => Residual::Element(lie_solvable_bracket(2, xs)?),
        IdentityId::WeakSolv2 => {
            Residual::Element(xs[0].commutator(&xs[1]).commutator(&xs[0].commutator(&xs[2])))
        }
        IdentityId::LieSolvK => Residual::Element(lie_solvable_bracket(params.solv_k, xs)?),
        IdentityId::LieNilpM => Residual::Element(lie_nilpotent_bracket(params.nilp_m, xs)?),
        IdentityId::Prop31 => Residual::Matrix(prop31_residual(m.unwrap())),
        IdentityId::Cor32 => Residual::Matrix(cor32_residual(m.unwrap())?),
        IdentityId::Thm33 => Residual::Matrix(thm33_residual(m.unwrap())?),
        IdentityId::Cor34 => Residual::Matrix(cor34_residual(m.unwrap())?),
        IdentityId::Cor35 => Residual::Matrix(cor35_check(m.unwrap())?),
        IdentityId::Cor36 => Residual::Matrix(cor36_residual(m.unwrap())),
        IdentityId::Thm37 => Residual::Matrix(thm37_residual(m.unwrap())),
        IdentityId::Domokos => Residual::Matrix(domokos_residual(m.unwrap())),
        IdentityId::CkVanish => {
            let seq = ck_sequence(m.unwrap(), params.ck_depth)?;
            Residual::Matrix(seq.last().unwrap().clone())
        }
    })
}
