//! Local models of hereditary orders over `k[t]` as valuation-matrix orders:
//! `{ (x_ab) in Mat_n(k(t)) : val(x_ab) >= v_ab }`.

mod fiber;
mod pushforward;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use fiber::{fiber, fiber_basic_iso_to_lambda, truncated_algebra, FiberIso, TruncatedOrderAlgebra};
pub use pushforward::{
    derived_restriction_cohomology, pushforward_ext_table, pushforward_module, restrict_to_lambda,
    DerivedRestriction, PushforwardExtTable,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationOrder {
    n: usize,
    v: Vec<i64>,
    /// Block sizes `(n_1, ..., n_r)` for a standard order.
    data: Option<Vec<usize>>,
    p: u64,
}

impl ValuationOrder {
    /// Rows of `v` as given; no order axioms are checked here.
    pub fn from_rows(rows: &[Vec<i64>], p: u64) -> Result<Self> {
        crate::linalg::check_modulus(p)?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("valuation matrix must be square".into()));
        }
        Ok(ValuationOrder {
            n,
            v: rows.concat(),
            data: None,
            p,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn v(&self, a: usize, b: usize) -> i64 {
        self.v[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.v.chunks(self.n.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn data(&self) -> Option<&[usize]> {
        self.data.as_deref()
    }

    /// Number of blocks of a standard order.
    pub fn ramification_index(&self) -> Option<usize> {
        self.data.as_ref().map(Vec::len)
    }

    pub fn is_basic(&self) -> bool {
        self.data.as_ref().is_some_and(|d| d.iter().all(|&k| k == 1))
    }

    /// Block of each row index, for a standard order.
    pub fn block_of(&self) -> Option<Vec<usize>> {
        let data = self.data.as_ref()?;
        Some(
            data.iter()
                .enumerate()
                .flat_map(|(k, &size)| std::iter::repeat(k).take(size))
                .collect(),
        )
    }

    /// First row index of each block.
    pub fn block_corners(&self) -> Option<Vec<usize>> {
        let data = self.data.as_ref()?;
        let mut out = Vec::with_capacity(data.len());
        let mut off = 0;
        for &size in data {
            out.push(off);
            off += size;
        }
        Some(out)
    }

    /// Entrywise `self <= other`: every entry allowed in `other` is allowed here.
    pub fn contains(&self, other: &ValuationOrder) -> bool {
        self.n == other.n && self.v.iter().zip(&other.v).all(|(a, b)| a <= b)
    }

    /// `v_ac <= v_ab + w_bc` and `v_ac <= w_ab + v_bc`: closed under
    /// multiplication by `other` on both sides.
    pub fn is_bimodule_over(&self, other: &ValuationOrder) -> bool {
        let n = self.n;
        if other.n != n {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.v(a, c) <= self.v(a, b) + other.v(b, c) && self.v(a, c) <= other.v(a, b) + self.v(b, c)
                })
            })
        })
    }
}

/// The block-triangular order with valuation 0 on and above the block
/// diagonal and 1 below it.
pub fn standard_hereditary_order(data: &[usize], p: u64) -> Result<ValuationOrder> {
    crate::linalg::check_modulus(p)?;
    if data.is_empty() || data.contains(&0) {
        return Err(Error::InvalidParameter("ramification data must be nonempty and positive".into()));
    }
    let block: Vec<usize> = data
        .iter()
        .enumerate()
        .flat_map(|(k, &size)| std::iter::repeat(k).take(size))
        .collect();
    let n = block.len();
    let v = (0..n * n)
        .map(|i| i64::from(block[i / n] > block[i % n]))
        .collect();
    Ok(ValuationOrder {
        n,
        v,
        data: Some(data.to_vec()),
        p,
    })
}

/// `v_aa = 0` and `v_ac <= v_ab + v_bc`.
pub fn is_order(o: &ValuationOrder) -> bool {
    let n = o.n;
    (0..n).all(|a| o.v(a, a) == 0)
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| o.v(a, c) <= o.v(a, b) + o.v(b, c))))
}

/// `v_ab = d_a - d_b` for some integers `d`; then `d_a = v_a1 - v_11` works.
pub fn is_maximal(o: &ValuationOrder) -> bool {
    let n = o.n;
    n == 0 || (0..n).all(|a| (0..n).all(|b| o.v(a, b) == o.v(a, 0) - o.v(b, 0)))
}

/// The maximal order `End(t^{d_1} k[t] + ... + t^{d_n} k[t])` with `v_ab = d_a - d_b`.
pub fn maximal_order_from_shifts(d: &[i64], p: u64) -> ValuationOrder {
    let n = d.len();
    ValuationOrder {
        n,
        v: (0..n * n).map(|i| d[i / n] - d[i % n]).collect(),
        data: None,
        p,
    }
}

/// All maximal orders `v_ab = d_a - d_b` containing `gamma`, by exhaustive
/// search over shift vectors normalized by `d_1 = 0`.
pub fn enumerate_maximal_overorders(gamma: &ValuationOrder) -> Vec<ValuationOrder> {
    let n = gamma.n;
    if n == 0 {
        return Vec::new();
    }
    // containment with d_1 = 0 forces -v(1, a) <= d_a <= v(a, 1)
    let lo: Vec<i64> = (0..n).map(|a| -gamma.v(0, a)).collect();
    let hi: Vec<i64> = (0..n).map(|a| gamma.v(a, 0)).collect();
    let mut out = Vec::new();
    let mut d = lo.clone();
    loop {
        let ok = (0..n).all(|a| (0..n).all(|b| d[a] - d[b] <= gamma.v(a, b)));
        if ok {
            out.push(maximal_order_from_shifts(&d, gamma.p));
        }
        // odometer over the last n - 1 coordinates
        let mut k = n - 1;
        loop {
            if k == 0 {
                return out;
            }
            if d[k] < hi[k] {
                d[k] += 1;
                break;
            }
            d[k] = lo[k];
            k -= 1;
        }
    }
}

/// The right lattice `t^twist * (row a of the order)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRow {
    pub row: usize,
    pub twist: i64,
}

impl LatticeRow {
    /// Lower bounds on the valuations of the entries.
    pub fn pattern(&self, o: &ValuationOrder) -> Vec<i64> {
        (0..o.n).map(|b| o.v(self.row, b) + self.twist).collect()
    }
}

/// Matches a valuation pattern against the rows `L^(j)` of a standard order
/// up to a twist; returns the 1-based `j` and the twist.
fn match_row(pattern: &[i64], gamma: &ValuationOrder, corners: &[usize]) -> Option<(usize, i64)> {
    let mut found = None;
    for (j, &alpha) in corners.iter().enumerate() {
        let base = LatticeRow { row: alpha, twist: 0 }.pattern(gamma);
        let shift = pattern[0] - base[0];
        if pattern.iter().zip(&base).all(|(x, y)| x - y == shift) {
            if found.is_some() {
                return None;
            }
            found = Some((j + 1, shift));
        }
    }
    found
}

/// Type of a maximal overorder: every row of `b` is a twist of the same
/// `L^(j)`.
pub fn classify_overorder_type(b: &ValuationOrder, gamma: &ValuationOrder) -> Result<usize> {
    let corners = gamma
        .block_corners()
        .ok_or_else(|| Error::InvalidParameter("classification needs a standard order".into()))?;
    let mut ty = None;
    for a in 0..b.n {
        let pattern = LatticeRow { row: a, twist: 0 }.pattern(b);
        let (j, _) = match_row(&pattern, gamma, &corners).ok_or(Error::MixedTypes)?;
        match ty {
            None => ty = Some(j),
            Some(t) if t != j => return Err(Error::MixedTypes),
            _ => {}
        }
    }
    ty.ok_or(Error::MixedTypes)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverorderCheck {
    pub rows: Vec<Vec<i64>>,
    pub is_order: bool,
    pub is_maximal: bool,
    pub contains: bool,
    pub bimodule: bool,
    pub ty: Option<usize>,
    /// Row `a` of `B` is `t^{twist_a} L^(ty)` for every `a`.
    pub rows_match_type: bool,
    pub verdict: bool,
}

/// Checks `B` as an overorder of `gamma` and `B = (L^(j))^n` as right modules.
pub fn overorder_module_check(b: &ValuationOrder, gamma: &ValuationOrder) -> Result<OverorderCheck> {
    let corners = gamma
        .block_corners()
        .ok_or_else(|| Error::InvalidParameter("module check needs a standard order".into()))?;
    let ty = classify_overorder_type(b, gamma).ok();
    let rows_match_type = ty.is_some_and(|j| {
        (0..b.n).all(|a| {
            let pattern = LatticeRow { row: a, twist: 0 }.pattern(b);
            let base = LatticeRow { row: corners[j - 1], twist: pattern[0] - gamma.v(corners[j - 1], 0) };
            base.pattern(gamma) == pattern
        })
    });
    let check = OverorderCheck {
        rows: b.rows(),
        is_order: is_order(b),
        is_maximal: is_maximal(b),
        contains: b.contains(gamma),
        bimodule: b.is_bimodule_over(gamma),
        ty,
        rows_match_type,
        verdict: false,
    };
    let verdict = check.is_order && check.is_maximal && check.contains && check.bimodule && rows_match_type;
    Ok(OverorderCheck { verdict, ..check })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_patterns() {
        assert_eq!(standard_hereditary_order(&[1], 101).unwrap().rows(), vec![vec![0]]);
        assert_eq!(standard_hereditary_order(&[1, 1], 101).unwrap().rows(), vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(
            standard_hereditary_order(&[2, 1], 101).unwrap().rows(),
            vec![vec![0, 0, 0], vec![0, 0, 0], vec![1, 1, 0]]
        );
        assert!(standard_hereditary_order(&[1, 0], 101).is_err());
    }

    #[test]
    fn maximality() {
        let full = ValuationOrder::from_rows(&[vec![0, 0], vec![0, 0]], 101).unwrap();
        assert!(is_order(&full) && is_maximal(&full));
        let std = standard_hereditary_order(&[1, 1], 101).unwrap();
        assert!(is_order(&std) && !is_maximal(&std));
        let other = ValuationOrder::from_rows(&[vec![0, -1], vec![1, 0]], 101).unwrap();
        assert!(is_order(&other) && is_maximal(&other));
        let bad = ValuationOrder::from_rows(&[vec![0, -1], vec![0, 0]], 101).unwrap();
        assert!(!is_order(&bad));
    }

    #[test]
    fn overorders_of_two_blocks() {
        let std = standard_hereditary_order(&[1, 1], 101).unwrap();
        let found = enumerate_maximal_overorders(&std);
        assert_eq!(found.len(), 2);
        let rows: Vec<Vec<Vec<i64>>> = found.iter().map(ValuationOrder::rows).collect();
        assert!(rows.contains(&vec![vec![0, 0], vec![0, 0]]));
        assert!(rows.contains(&vec![vec![0, -1], vec![1, 0]]));
        let mut types: Vec<usize> = found.iter().map(|b| classify_overorder_type(b, &std).unwrap()).collect();
        types.sort_unstable();
        assert_eq!(types, vec![1, 2]);
    }

    #[test]
    fn mixed_rows_are_rejected() {
        let std = standard_hereditary_order(&[1, 1, 1], 101).unwrap();
        // not maximal: rows of two different types
        let mixed = ValuationOrder::from_rows(&[vec![0, 0, 0], vec![1, 0, 0], vec![1, 1, 0]], 101).unwrap();
        assert_eq!(classify_overorder_type(&mixed, &std), Err(Error::MixedTypes));
    }
}
