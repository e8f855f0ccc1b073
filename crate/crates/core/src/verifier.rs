//! Generic verification, deterministic witness search, and the bridge checks
//! between identities that must agree over every ring.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{make_u3star, mat3_mul, u3star_embed_oracle, AlgebraError, Construction, Ring, RingElement};
use crate::identities::{self, Coordinate, IdentityError, IdentityId, Params, Residual};
use crate::matrix::Mat2;
use crate::poly::{Polynomial, VarAllocator};
use crate::scalar::Rational;

/// Largest estimated coefficient-term count a generic check will attempt.
pub const TERM_BUDGET: f64 = 1e8;

/// Tuples tried when looking for a concrete witness after a generic failure.
pub const FALLBACK_SEARCH_LIMIT: u64 = 1 << 14;

/// Nonzero differences listed in a bridge diff before truncation.
pub const DIFF_LIMIT: usize = 20;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("estimated {estimate:.3e} coefficient terms exceeds the budget of {budget:.0e}")]
    Budget { estimate: f64, budget: f64 },
    #[error("search limit must be at least 1")]
    ZeroLimit,
    #[error("invalid pool `{0}` (expected `basis` or `sums:2`)")]
    Pool(String),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Generic,
    Search,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Generic => "generic",
            Mode::Search => "search",
        }
    }
}

/// Arguments at which a residual is nonzero, with the offending coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub assignment: Vec<(String, RingElement)>,
    pub coordinate: Coordinate,
    pub value: Polynomial,
}

impl Witness {
    /// True when the assignment contains no free variables.
    pub fn is_concrete(&self) -> bool {
        self.assignment.iter().all(|(_, e)| e.variables().is_empty())
    }

    /// Re-evaluates `id` at the assignment and reads the recorded coordinate.
    pub fn replay(&self, id: IdentityId, params: &Params) -> Result<Polynomial, IdentityError> {
        let args: Vec<_> = self.assignment.iter().map(|(_, e)| e.clone()).collect();
        Ok(identities::evaluate(id, params, &args)?.coordinate(self.coordinate))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub identity: String,
    pub algebra: String,
    pub dim: usize,
    pub generic_vars: usize,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub elapsed_ms: u128,
    pub mode: Mode,
    pub note: Option<String>,
    /// Basis labels of the algebra, for rendering the witness coordinate.
    pub ring: Ring,
}

/// Ordered, duplicate-free list of candidate arguments.
#[derive(Clone, Debug)]
pub struct WitnessPool {
    name: String,
    elements: Vec<RingElement>,
}

impl WitnessPool {
    /// All basis monomials in basis order.
    pub fn basis(ring: &Ring) -> Self {
        let elements = (0..ring.dim()).map(|i| RingElement::basis(ring, i)).collect();
        WitnessPool { name: "basis".into(), elements }
    }

    /// Basis monomials followed by every sum `b_i + b_j`, `i < j`.
    pub fn with_sums(ring: &Ring) -> Self {
        let mut pool = Self::basis(ring);
        let d = ring.dim();
        for i in 0..d {
            for j in i + 1..d {
                pool.elements.push(RingElement::basis(ring, i).add(&RingElement::basis(ring, j)));
            }
        }
        pool.name = "sums:2".into();
        pool
    }

    /// `basis` or `sums:2`.
    pub fn parse(text: &str, ring: &Ring) -> Result<Self, VerifyError> {
        match text {
            "basis" => Ok(Self::basis(ring)),
            "sums:2" => Ok(Self::with_sums(ring)),
            _ => Err(VerifyError::Pool(text.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[RingElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The `index`-th tuple of length `arity` in lexicographic order.
    fn tuple(&self, mut index: u64, arity: usize) -> Vec<RingElement> {
        let n = self.len() as u64;
        let mut digits = vec![0usize; arity];
        for slot in digits.iter_mut().rev() {
            *slot = (index % n) as usize;
            index /= n;
        }
        digits.into_iter().map(|i| self.elements[i].clone()).collect()
    }
}

fn binomial(n: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i as f64) / (i as f64 + 1.0))
}

/// Number of basis tuples `(i_1, ..., i_d)` with `b_{i_1} ... b_{i_d}`
/// nonzero, counted along table supports without cancellation.
pub fn product_paths(ring: &Ring, d: usize) -> f64 {
    let dim = ring.dim();
    let mut counts = vec![1.0f64; dim];
    for _ in 1..d {
        let mut next = vec![0.0f64; dim];
        for (j, &c) in counts.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            for i in 0..dim {
                for (l, _) in ring.product(j, i) {
                    next[*l] += c;
                }
            }
        }
        counts = next;
    }
    counts.iter().sum()
}

/// Rough count of coefficient terms in a generic evaluation: the smaller of
/// (output coordinates times monomials of the residual's degree) and
/// (nonzero basis-product paths times the number of words a bracket or 2x2
/// product expands into).
pub fn estimate_terms(id: IdentityId, params: &Params, ring: &Ring) -> f64 {
    let dim = ring.dim() as f64;
    let degree = id.degree(params);
    let vars = (id.arity(params) * ring.dim()) as f64;
    let mut monomials = binomial(vars + degree as f64 - 1.0, degree);
    if id.is_multilinear() {
        monomials = monomials.min(dim.powi(degree as i32));
    }
    let coords = if id.is_matrix() { 4.0 * dim } else { dim };
    let by_monomials = coords * monomials;
    let words = 2f64.powi(degree as i32 - 1) * if id.is_matrix() { 4.0 } else { 1.0 };
    let by_paths = product_paths(ring, degree) * words;
    by_monomials.min(by_paths)
}

fn check_budget(id: IdentityId, params: &Params, ring: &Ring) -> Result<(), VerifyError> {
    let estimate = estimate_terms(id, params, ring);
    if estimate > TERM_BUDGET {
        Err(VerifyError::Budget { estimate, budget: TERM_BUDGET })
    } else {
        Ok(())
    }
}

/// Generic arguments for `id`: one fresh variable per basis coordinate of
/// each argument, or generic odd elements for the nilpotent trace family.
pub fn generic_arguments(
    id: IdentityId,
    params: &Params,
    ring: &Ring,
    vars: &VarAllocator,
) -> Result<Vec<RingElement>, VerifyError> {
    let n = id.arity(params);
    if id == IdentityId::Cor35 && matches!(ring.construction(), Construction::Grassmann(_)) {
        return (0..n).map(|_| Ok(RingElement::generic_odd(ring, vars)?)).collect();
    }
    Ok((0..n).map(|_| RingElement::generic(ring, vars)).collect())
}

fn name_args(id: IdentityId, params: &Params, args: Vec<RingElement>) -> Vec<(String, RingElement)> {
    id.arg_names(params).into_iter().zip(args).collect()
}

/// Substitutes generic elements and checks every residual coordinate for
/// the zero polynomial. A failure is accompanied by a concrete witness from
/// the basis pool when one exists within [`FALLBACK_SEARCH_LIMIT`] tuples,
/// otherwise by the generic assignment itself.
pub fn verify_generic(id: IdentityId, params: &Params, ring: &Ring) -> Result<VerifyReport, VerifyError> {
    let start = Instant::now();
    check_budget(id, params, ring)?;
    let vars = VarAllocator::new();
    let args = generic_arguments(id, params, ring, &vars)?;
    let residual = identities::evaluate(id, params, &args)?;
    let generic_vars = vars.allocated();
    let mut report = VerifyReport {
        identity: id.name().to_string(),
        algebra: ring.name().to_string(),
        dim: ring.dim(),
        generic_vars,
        holds: true,
        witness: None,
        elapsed_ms: 0,
        mode: Mode::Generic,
        note: None,
        ring: ring.clone(),
    };
    if let Some((coordinate, value)) = residual.first_nonzero() {
        report.holds = false;
        let pool = WitnessPool::basis(ring);
        let concrete = find_first(id, params, &pool, FALLBACK_SEARCH_LIMIT, 1)?;
        report.witness = Some(match concrete {
            Some(w) => {
                report.note = Some("witness taken from the basis pool".into());
                w
            }
            None => {
                report.note = Some("no basis-pool witness; generic assignment reported".into());
                Witness { assignment: name_args(id, params, args), coordinate, value }
            }
        });
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn tuple_count(pool: &WitnessPool, arity: usize) -> u64 {
    (pool.len() as u64).checked_pow(arity as u32).unwrap_or(u64::MAX)
}

fn try_tuple(id: IdentityId, params: &Params, pool: &WitnessPool, index: u64) -> Option<Witness> {
    let args = pool.tuple(index, id.arity(params));
    // tuples violating an evaluator precondition are skipped
    let residual = identities::evaluate(id, params, &args).ok()?;
    let (coordinate, value) = residual.first_nonzero()?;
    Some(Witness { assignment: name_args(id, params, args), coordinate, value })
}

fn find_first(
    id: IdentityId,
    params: &Params,
    pool: &WitnessPool,
    limit: u64,
    jobs: usize,
) -> Result<Option<Witness>, VerifyError> {
    let total = tuple_count(pool, id.arity(params)).min(limit);
    if jobs <= 1 {
        return Ok((0..total).find_map(|t| try_tuple(id, params, pool, t)));
    }
    let threads = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    Ok(threads.install(|| {
        (0..total)
            .into_par_iter()
            .map(|t| try_tuple(id, params, pool, t))
            .find_first(Option::is_some)
            .flatten()
    }))
}

/// Evaluates `id` on pool tuples in lexicographic order and reports the first
/// nonzero one. `jobs > 1` partitions the search; the reported witness is
/// still the lexicographically first.
pub fn search_witness(
    id: IdentityId,
    params: &Params,
    ring: &Ring,
    pool: &WitnessPool,
    limit: u64,
    jobs: usize,
) -> Result<VerifyReport, VerifyError> {
    if limit == 0 {
        return Err(VerifyError::ZeroLimit);
    }
    let start = Instant::now();
    let arity = id.arity(params);
    let space = tuple_count(pool, arity);
    let witness = find_first(id, params, pool, limit, jobs)?;
    let note = match &witness {
        Some(_) => None,
        None if space <= limit => {
            Some(format!("no witness among all {space} tuples of the {} pool", pool.name()))
        }
        None => Some(format!("no witness among the first {limit} of {space} tuples of the {} pool", pool.name())),
    };
    Ok(VerifyReport {
        identity: id.name().to_string(),
        algebra: ring.name().to_string(),
        dim: ring.dim(),
        generic_vars: 0,
        holds: witness.is_none(),
        witness,
        elapsed_ms: start.elapsed().as_millis(),
        mode: Mode::Search,
        note,
        ring: ring.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeStatus {
    /// `[[x,y],[x,z]] = 0` fails, so the ring says nothing.
    Inapplicable,
    /// The weak identity holds and no pool tuple violates the strong one.
    ConsistentNotProof,
    /// The weak identity holds but `[[x,y],[u,v]] != 0` at a pool tuple.
    Counterexample,
}

impl ProbeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ProbeStatus::Inapplicable => "inapplicable",
            ProbeStatus::ConsistentNotProof => "consistent, not a proof",
            ProbeStatus::Counterexample => "counterexample",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub status: ProbeStatus,
    pub hypothesis: VerifyReport,
    pub search: Option<VerifyReport>,
}

impl ProbeReport {
    pub fn reports(&self) -> Vec<&VerifyReport> {
        std::iter::once(&self.hypothesis).chain(self.search.as_ref()).collect()
    }
}

/// Does `[[x,y],[x,z]] = 0` force `[[x,y],[u,v]] = 0` on this ring? Checks
/// the first generically, then searches the pool for a violation of the
/// second.
pub fn probe_question(
    ring: &Ring,
    pool: &WitnessPool,
    limit: u64,
    jobs: usize,
) -> Result<ProbeReport, VerifyError> {
    let params = Params::default();
    let mut hypothesis = verify_generic(IdentityId::WeakSolv2, &params, ring)?;
    if !hypothesis.holds {
        hypothesis.note = Some(format!("{}: hypothesis fails", ProbeStatus::Inapplicable.as_str()));
        return Ok(ProbeReport { status: ProbeStatus::Inapplicable, hypothesis, search: None });
    }
    let mut search = search_witness(IdentityId::LieSolv2, &params, ring, pool, limit, jobs)?;
    let status = if search.holds { ProbeStatus::ConsistentNotProof } else { ProbeStatus::Counterexample };
    let detail = search.note.take();
    search.note = Some(match detail {
        Some(d) => format!("{}; {d}", status.as_str()),
        None => status.as_str().to_string(),
    });
    Ok(ProbeReport { status, hypothesis, search: Some(search) })
}

#[derive(Clone, Debug)]
pub struct Thm21Report {
    pub comm_product: VerifyReport,
    pub double_comm_z: VerifyReport,
    pub conclusion: VerifyReport,
}

impl Thm21Report {
    pub fn hypotheses_hold(&self) -> bool {
        self.comm_product.holds && self.double_comm_z.holds
    }

    /// The implication is only tested when both hypotheses hold.
    pub fn vacuous(&self) -> bool {
        !self.hypotheses_hold()
    }

    /// Hypotheses hold on `S` and the conclusion fails on `U3*(S)`.
    pub fn refuted(&self) -> bool {
        self.hypotheses_hold() && !self.conclusion.holds
    }

    pub fn reports(&self) -> [&VerifyReport; 3] {
        [&self.comm_product, &self.double_comm_z, &self.conclusion]
    }
}

/// Checks `[x,y][u,v] = 0` and `[[x,y],z] = 0` on `S` and
/// `[[x,y],[u,v]] = 0` on `U3*(S)`.
pub fn verify_thm21_hypotheses(inner: &Ring) -> Result<Thm21Report, VerifyError> {
    let outer = make_u3star(inner)?;
    let params = Params::default();
    let comm_product = verify_generic(IdentityId::CommProduct, &params, inner)?;
    let double_comm_z = verify_generic(IdentityId::DoubleCommZ, &params, inner)?;
    let mut conclusion = verify_generic(IdentityId::LieSolv2, &params, &outer)?;
    if !(comm_product.holds && double_comm_z.holds) {
        let prior = conclusion.note.take();
        conclusion.note = Some(match prior {
            Some(p) => format!("hypotheses fail on {}; implication untested; {p}", inner.name()),
            None => format!("hypotheses fail on {}; implication untested", inner.name()),
        });
    }
    Ok(Thm21Report { comm_product, double_comm_z, conclusion })
}

/// Equalities that hold over every ring containing 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bridge {
    /// `prop31_residual = 0`
    Prop31Zero,
    /// `cor32_residual = 0`
    Cor32Zero,
    /// `thm33_residual = thm33_display`
    Thm33Display,
    /// `cor34_residual = thm33_residual`
    Cor34Thm33,
    /// `thm37_residual = cor36_residual`
    Thm37Cor36,
    /// `tr(C_i) = 0` along the recursion
    CkTraces,
}

impl Bridge {
    pub const ALL: [Bridge; 6] = [
        Bridge::Prop31Zero,
        Bridge::Cor32Zero,
        Bridge::Thm33Display,
        Bridge::Cor34Thm33,
        Bridge::Thm37Cor36,
        Bridge::CkTraces,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bridge::Prop31Zero => "prop31_residual = 0",
            Bridge::Cor32Zero => "cor32_residual = 0",
            Bridge::Thm33Display => "thm33_residual = thm33_display",
            Bridge::Cor34Thm33 => "cor34_residual = thm33_residual",
            Bridge::Thm37Cor36 => "thm37_residual = cor36_residual",
            Bridge::CkTraces => "tr(C_i) = 0 for i <= 2",
        }
    }
}

impl fmt::Display for Bridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One coefficient on which the two sides of a bridge disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffEntry {
    /// Matrix entry (1-based) and basis label, e.g. `(2,1)[E11]`.
    pub location: String,
    pub monomial: String,
    pub left: Rational,
    pub right: Rational,
}

impl fmt::Display for DiffEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: left {} right {}", self.location, self.monomial, self.left, self.right)
    }
}

#[derive(Clone, Debug)]
pub struct BridgeReport {
    pub bridge: Bridge,
    pub algebra: String,
    pub holds: bool,
    /// First [`DIFF_LIMIT`] differing coefficients.
    pub diff: Vec<DiffEntry>,
    pub differing_terms: usize,
}

fn coefficient_in(p: &Polynomial, m: &crate::poly::Monomial) -> Rational {
    p.terms()
        .binary_search_by(|(k, _)| k.cmp(m))
        .map(|i| p.terms()[i].1.clone())
        .unwrap_or_else(|_| Rational::zero())
}

/// Term-level comparison of two residuals of the same shape.
pub fn residual_diff(left: &Residual, right: &Residual) -> (Vec<DiffEntry>, usize) {
    let ring = left.ring().clone();
    let delta = left.sub(right);
    let mut entries = Vec::new();
    let mut count = 0;
    for (at, p) in delta.nonzero_coordinates() {
        let (l, r) = (left.coordinate(at), right.coordinate(at));
        for (m, _) in p.terms() {
            count += 1;
            if entries.len() < DIFF_LIMIT {
                entries.push(DiffEntry {
                    location: at.render(&ring),
                    monomial: m.to_string(),
                    left: coefficient_in(&l, m),
                    right: coefficient_in(&r, m),
                });
            }
        }
    }
    (entries, count)
}

/// Checks one bridge at generic inputs over `ring`.
pub fn check_bridge(bridge: Bridge, ring: &Ring) -> Result<BridgeReport, VerifyError> {
    let vars = VarAllocator::new();
    let traceless = || -> Result<Mat2, VerifyError> {
        let xs: Vec<_> = (0..3).map(|_| RingElement::generic(ring, &vars)).collect();
        Ok(Mat2::traceless(&xs[0], &xs[1], &xs[2])?)
    };
    let m = Residual::Matrix;
    let (left, right) = match bridge {
        Bridge::Prop31Zero => {
            let a = Mat2::generic(ring, &vars);
            (m(identities::prop31_lhs(&a)), m(identities::prop31_display(&a)))
        }
        Bridge::Cor32Zero => {
            let b = traceless()?;
            let b2 = b.mul(&b);
            let lhs = b2.sub(&Mat2::scalar_matrix(&b2.trace().scale(&Rational::half())));
            (m(lhs), m(identities::cor32_display(&b)?))
        }
        Bridge::Thm33Display => {
            let c = traceless()?;
            (m(identities::thm33_residual(&c)?), m(identities::thm33_display(&c)?))
        }
        Bridge::Cor34Thm33 => {
            let c = traceless()?;
            (m(identities::cor34_residual(&c)?), m(identities::thm33_residual(&c)?))
        }
        Bridge::Thm37Cor36 => {
            let a = Mat2::generic(ring, &vars);
            (m(identities::thm37_residual(&a)), m(identities::cor36_residual(&a)))
        }
        Bridge::CkTraces => {
            let c = traceless()?;
            let seq = identities::ck_sequence(&c, 2)?;
            let traces: Vec<_> = seq.iter().map(|ci| ci.trace()).collect();
            let zero = RingElement::zero(ring);
            let mut diff = Vec::new();
            let mut count = 0;
            for (i, t) in traces.iter().enumerate() {
                let (d, n) = residual_diff(&Residual::Element(t.clone()), &Residual::Element(zero.clone()));
                count += n;
                diff.extend(d.into_iter().map(|mut e| {
                    e.location = format!("tr(C_{i}){}", e.location);
                    e
                }));
            }
            diff.truncate(DIFF_LIMIT);
            return Ok(BridgeReport {
                bridge,
                algebra: ring.name().to_string(),
                holds: count == 0,
                diff,
                differing_terms: count,
            });
        }
    };
    let (diff, count) = residual_diff(&left, &right);
    Ok(BridgeReport { bridge, algebra: ring.name().to_string(), holds: count == 0, diff, differing_terms: count })
}

/// Algebras exercised by the kernel self-test.
pub const STANDARD_ALGEBRAS: [&str; 7] =
    ["rat", "grassmann:3", "grassmann:4", "u3star(rat)", "u3star(u3star(rat))", "full:2", "full:3"];

/// Structural checks on one descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub algebra: String,
    pub dim: usize,
    /// First basis triple breaking associativity.
    pub associativity: Result<(), (usize, usize, usize)>,
    /// First basis element on which the unit fails.
    pub unit: Result<(), usize>,
    /// First basis pair on which the tuple law and the 3x3 oracle disagree;
    /// `None` for rings that are not a u3star construction.
    pub embedding: Option<Result<(), (usize, usize)>>,
}

impl KernelReport {
    pub fn ok(&self) -> bool {
        self.associativity.is_ok() && self.unit.is_ok() && !matches!(self.embedding, Some(Err(_)))
    }
}

/// Compares the tuple-law product with 3x3 matrix multiplication on all
/// basis pairs.
pub fn check_embedding(ring: &Ring) -> Option<Result<(), (usize, usize)>> {
    ring.u3star_inner()?;
    let d = ring.dim();
    let embedded: Vec<_> = (0..d)
        .map(|i| u3star_embed_oracle(&RingElement::basis(ring, i)).expect("u3star ring"))
        .collect();
    for i in 0..d {
        for j in 0..d {
            let product = RingElement::basis(ring, i).mul(&RingElement::basis(ring, j));
            if u3star_embed_oracle(&product).expect("u3star ring") != mat3_mul(&embedded[i], &embedded[j]) {
                return Some(Err((i, j)));
            }
        }
    }
    Some(Ok(()))
}

pub fn kernel_checks(ring: &Ring) -> KernelReport {
    KernelReport {
        algebra: ring.name().to_string(),
        dim: ring.dim(),
        associativity: ring.check_associativity(),
        unit: ring.check_unit(),
        embedding: check_embedding(ring),
    }
}

/// Generic check of `C_k = 0`, with the traces of every `C_i` recorded in
/// the note.
pub fn verify_ck(ring: &Ring, k: usize) -> Result<(VerifyReport, bool), VerifyError> {
    let params = Params { ck_depth: k, ..Params::default() };
    let mut report = verify_generic(IdentityId::CkVanish, &params, ring)?;
    let vars = VarAllocator::new();
    let xs: Vec<_> = (0..3).map(|_| RingElement::generic(ring, &vars)).collect();
    let seq = identities::ck_sequence(&Mat2::traceless(&xs[0], &xs[1], &xs[2])?, k)?;
    let traceless = seq.iter().all(|c| c.trace().is_zero());
    let summary = format!("k={k}; tr(C_i) = 0 for i = 0..={k}: {traceless}");
    report.note = Some(match report.note.take() {
        Some(n) => format!("{summary}; {n}"),
        None => summary,
    });
    Ok((report, traceless))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_full, make_grassmann, make_rat};

    fn uu() -> Ring {
        make_u3star(&make_u3star(&make_rat()).unwrap()).unwrap()
    }

    fn p() -> Params {
        Params::default()
    }

    #[test]
    fn generic_pass_and_fail() {
        let m2 = make_full(2).unwrap();
        let r = verify_generic(IdentityId::Prop31, &p(), &m2).unwrap();
        assert!(r.holds && r.witness.is_none());
        assert_eq!(r.generic_vars, 16);

        let r = verify_generic(IdentityId::Thm37, &p(), &m2).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert!(w.is_concrete());
        assert!(!w.value.is_zero());
        assert_eq!(w.replay(IdentityId::Thm37, &p()).unwrap(), w.value);
    }

    #[test]
    fn prop31_over_full3() {
        assert!(verify_generic(IdentityId::Prop31, &p(), &make_full(3).unwrap()).unwrap().holds);
    }

    #[test]
    fn budget_guard() {
        let m4 = make_full(4).unwrap();
        let params = Params { ck_depth: 3, ..p() };
        assert!(matches!(
            verify_generic(IdentityId::CkVanish, &params, &m4),
            Err(VerifyError::Budget { .. })
        ));
        assert!(estimate_terms(IdentityId::Thm37, &p(), &uu()) < TERM_BUDGET);
    }

    #[test]
    fn product_paths_oracles() {
        // matrix units: E_{i1 j1} E_{j1 j2} ... is nonzero along n^(d+1) chains
        assert_eq!(product_paths(&make_full(3).unwrap(), 4), 243.0);
        // grassmann: each generator sits in at most one factor
        assert_eq!(product_paths(&make_grassmann(4).unwrap(), 4), 625.0);
        assert_eq!(product_paths(&make_rat(), 7), 1.0);
    }

    #[test]
    fn depth_three_over_triple_u3star() {
        let uuu = make_u3star(&uu()).unwrap();
        let (r, traceless) = verify_ck(&uuu, 3).unwrap();
        assert!(r.holds && traceless);
        let solv3 = verify_generic(IdentityId::LieSolvK, &p(), &uuu).unwrap();
        assert!(solv3.holds);
        assert!(!verify_generic(IdentityId::LieSolv2, &p(), &uuu).unwrap().holds);
    }

    #[test]
    fn pools() {
        let q = make_grassmann(2).unwrap();
        assert_eq!(WitnessPool::basis(&q).len(), 4);
        let sums = WitnessPool::with_sums(&q);
        assert_eq!(sums.len(), 10);
        for (i, a) in sums.elements().iter().enumerate() {
            assert!(sums.elements()[i + 1..].iter().all(|b| b != a));
        }
        assert!(WitnessPool::parse("sums:3", &q).is_err());
        assert_eq!(sums.tuple(1, 2)[1], sums.elements()[1]);
        assert_eq!(sums.tuple(10, 2)[0], sums.elements()[1]);
    }

    #[test]
    fn search_is_deterministic_and_parallel_agrees() {
        let ring = uu();
        let pool = WitnessPool::basis(&ring);
        let a = search_witness(IdentityId::CommProduct, &p(), &ring, &pool, u64::MAX, 1).unwrap();
        let b = search_witness(IdentityId::CommProduct, &p(), &ring, &pool, u64::MAX, 3).unwrap();
        assert!(!a.holds);
        assert_eq!(a.witness, b.witness);
        let w = a.witness.unwrap();
        assert_eq!(w.replay(IdentityId::CommProduct, &p()).unwrap(), w.value);
    }

    #[test]
    fn search_respects_limit() {
        let ring = make_grassmann(2).unwrap();
        let pool = WitnessPool::basis(&ring);
        let r = search_witness(IdentityId::CommProduct, &p(), &ring, &pool, 10, 1).unwrap();
        assert!(r.holds);
        assert!(r.note.unwrap().contains("first 10 of 256"));
        assert!(matches!(
            search_witness(IdentityId::CommProduct, &p(), &ring, &pool, 0, 1),
            Err(VerifyError::ZeroLimit)
        ));
    }

    #[test]
    fn probe_statuses() {
        let m2 = make_full(2).unwrap();
        let r = probe_question(&m2, &WitnessPool::basis(&m2), u64::MAX, 1).unwrap();
        assert_eq!(r.status, ProbeStatus::Inapplicable);
        assert!(r.search.is_none());

        let e = make_grassmann(3).unwrap();
        let r = probe_question(&e, &WitnessPool::basis(&e), u64::MAX, 1).unwrap();
        assert_eq!(r.status, ProbeStatus::ConsistentNotProof);
    }

    #[test]
    fn thm21_cases() {
        let r = verify_thm21_hypotheses(&make_rat()).unwrap();
        assert!(r.hypotheses_hold() && r.conclusion.holds);
        let r = verify_thm21_hypotheses(&make_full(2).unwrap()).unwrap();
        assert!(r.vacuous() && !r.refuted());
        assert!(r.conclusion.note.as_ref().unwrap().contains("untested"));
        assert!(matches!(verify_thm21_hypotheses(&make_grassmann(5).unwrap()), Err(VerifyError::Algebra(_))));
    }

    #[test]
    fn bridges_hold_on_small_rings() {
        for ring in [make_rat(), make_full(2).unwrap(), make_grassmann(2).unwrap()] {
            for b in Bridge::ALL {
                let r = check_bridge(b, &ring).unwrap();
                assert!(r.holds, "{b} over {}: {:?}", ring.name(), r.diff);
            }
        }
    }

    #[test]
    fn kernel_checks_pass() {
        for name in ["rat", "grassmann:3", "u3star(rat)", "u3star(grassmann:2)", "full:2"] {
            let ring = crate::spec::AlgebraSpec::parse(name).unwrap().build().unwrap();
            let r = kernel_checks(&ring);
            assert!(r.ok(), "{r:?}");
            assert_eq!(r.embedding.is_some(), name.starts_with("u3star"));
        }
    }

    #[test]
    fn ck_report() {
        let (r, traceless) = verify_ck(&make_full(2).unwrap(), 2).unwrap();
        assert!(!r.holds && traceless);
        let (r, traceless) = verify_ck(&make_grassmann(3).unwrap(), 2).unwrap();
        assert!(r.holds && traceless);
        assert!(r.note.unwrap().starts_with("k=2; tr(C_i) = 0"));
    }

    #[test]
    fn diff_reports_coefficients() {
        let m2 = make_full(2).unwrap();
        let a = Mat2::generic(&m2, &VarAllocator::new());
        let left = Residual::Matrix(identities::thm37_residual(&a));
        let right = Residual::Matrix(Mat2::zero(&m2));
        let (diff, count) = residual_diff(&left, &right);
        assert!(count > DIFF_LIMIT);
        assert_eq!(diff.len(), DIFF_LIMIT);
        assert!(diff.iter().all(|d| d.right.is_zero() && !d.left.is_zero()));
        assert!(diff[0].location.starts_with("(1,1)"));
    }
}
