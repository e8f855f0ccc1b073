use std::sync::Arc;

use super::{AlgebraError, Construction, Ring, RingDescriptor};
use crate::scalar::Rational;

/// Largest descriptor dimension any constructor will build.
pub const MAX_DIM: usize = 64;
pub const MAX_GRASSMANN: u32 = 8;
pub const MAX_FULL: usize = 4;

/// The rationals, one basis element `1`.
pub fn make_rat() -> Ring {
    Arc::new(RingDescriptor::new(
        "rat".to_string(),
        Construction::Rat,
        vec!["1".to_string()],
        vec![(0, Rational::one())],
        vec![vec![(0, Rational::one())]],
    ))
}

// Basis subsets ordered by size, then lexicographically.
fn grassmann_masks(r: u32) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << r).collect();
    masks.sort_by_key(|m| (m.count_ones(), members(*m)));
    masks
}

fn members(mask: u32) -> Vec<u32> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Basis index of the generator `v_g` (generators are numbered from 1).
pub(crate) fn grassmann_generator_index(r: u32, g: u32) -> usize {
    debug_assert!(g >= 1 && g <= r);
    g as usize
}

/// Grassmann algebra on `r` anticommuting generators, basis `v_S` for subsets `S`.
pub fn make_grassmann(r: u32) -> Result<Ring, AlgebraError> {
    if !(1..=MAX_GRASSMANN).contains(&r) {
        return Err(AlgebraError::GeneratorCount(r));
    }
    let masks = grassmann_masks(r);
    let dim = masks.len();
    let mut index_of = vec![0usize; dim];
    for (i, m) in masks.iter().enumerate() {
        index_of[*m as usize] = i;
    }
    let labels = masks
        .iter()
        .map(|&m| {
            if m == 0 {
                "1".to_string()
            } else {
                let parts: Vec<String> = members(m).iter().map(|x| x.to_string()).collect();
                format!("v{}", parts.join(","))
            }
        })
        .collect();
    let mut table = Vec::with_capacity(dim * dim);
    for &s in &masks {
        for &t in &masks {
            if s & t != 0 {
                table.push(Vec::new());
                continue;
            }
            // inversions: pairs s_i in S, t_j in T with s_i > t_j
            let inversions: u32 = members(t)
                .iter()
                .map(|&tj| members(s).iter().filter(|&&si| si > tj).count() as u32)
                .sum();
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            table.push(vec![(index_of[(s | t) as usize], Rational::from_int(sign))]);
        }
    }
    Ok(Arc::new(RingDescriptor::new(
        format!("grassmann:{r}"),
        Construction::Grassmann(r),
        labels,
        vec![(0, Rational::one())],
        table,
    )))
}

/// Full matrix ring `M_n(Q)` with matrix units `E_ij` in row-major order.
pub fn make_full(n: usize) -> Result<Ring, AlgebraError> {
    if !(2..=MAX_FULL).contains(&n) {
        return Err(AlgebraError::MatrixSize(n));
    }
    let dim = n * n;
    let labels = (0..dim).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    let mut table = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            table.push(if j == k { vec![(i * n + l, Rational::one())] } else { Vec::new() });
        }
    }
    let unit = (0..n).map(|i| (i * n + i, Rational::one())).collect();
    Ok(Arc::new(RingDescriptor::new(
        format!("full:{n}"),
        Construction::Full(n),
        labels,
        unit,
        table,
    )))
}

pub(crate) const SLOT_NAMES: [&str; 4] = ["I", "E12", "E13", "E23"];

// Slot product of the tuple law (a,b,c,d)(a',b',c',d') =
// (aa', ab'+ba', ac'+ca'+bd', ad'+da'), slots ordered (I, E12, E13, E23).
fn slot_product(p: usize, q: usize) -> Option<usize> {
    match (p, q) {
        (0, q) => Some(q),
        (p, 0) => Some(p),
        (1, 3) => Some(2),
        _ => None,
    }
}

fn prime_label(label: &str) -> String {
    label
        .split('⊗')
        .map(|part| format!("{part}′"))
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Equal-diagonal upper-triangular 3x3 matrices over `inner`, as a free
/// module of rank 4 with basis `slot ⊗ inner basis`.
pub fn make_u3star(inner: &Ring) -> Result<Ring, AlgebraError> {
    let d = inner.dim();
    let dim = 4 * d;
    if dim > MAX_DIM {
        return Err(AlgebraError::DimensionBound(dim));
    }
    let mut labels = Vec::with_capacity(dim);
    for slot in SLOT_NAMES {
        for k in 0..d {
            let il = inner.label(k);
            labels.push(if d == 1 && il == "1" {
                slot.to_string()
            } else {
                let il = if inner.u3star_inner().is_some() { prime_label(il) } else { il.to_string() };
                format!("{slot}⊗{il}")
            });
        }
    }
    let mut table = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let (p, i) = (a / d, a % d);
            let (q, j) = (b / d, b % d);
            table.push(match slot_product(p, q) {
                Some(r) => inner.product(i, j).iter().map(|(k, c)| (r * d + k, c.clone())).collect(),
                None => Vec::new(),
            });
        }
    }
    let unit = inner.unit_coords().iter().map(|(k, c)| (*k, c.clone())).collect();
    Ok(Arc::new(RingDescriptor::new(
        format!("u3star({})", inner.name()),
        Construction::U3Star(inner.clone()),
        labels,
        unit,
        table,
    )))
}
