//! Root-budget problem statements.
//!
//! A [`PackingSpec`] fixes the regularity `h`, the member count `k`, and the
//! lower/upper root-count bounds `lower`/`upper` on `{0, 1, ..., k}` where
//! index `0` carries the total-root bounds. Every theorem instance handled by
//! this crate is a specialization of one spec shape.

use alloc::vec::Vec;
use core::fmt;

/// `i -> min(ell(i), p)` over the per-member values `ell[0..k]`.
pub fn ell_capped(ell: &[usize], p: usize) -> Vec<usize> {
    ell.iter().map(|&x| x.min(p)).collect()
}

/// Sum of the capped function: `ell_p(K)`.
pub fn ell_capped_sum(ell: &[usize], p: usize) -> usize {
    ell.iter().map(|&x| x.min(p)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecViolation {
    /// Arrays must have length `k + 1` with positive entries.
    Malformed,
    /// The chain `upper(K) >= upper(0) >= lower(0) >= lower(K)` fails.
    TotalChain,
    /// `|V| >= upper(i) >= lower(i)` fails for some member `i`.
    MemberBound { member: usize },
}

impl fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecViolation::Malformed => write!(f, "bound arrays malformed"),
            SpecViolation::TotalChain => {
                write!(f, "total-root chain upper(K) >= upper(0) >= lower(0) >= lower(K) violated")
            }
            SpecViolation::MemberBound { member } => {
                write!(f, "member bound |V| >= upper({member}) >= lower({member}) violated")
            }
        }
    }
}

/// An `(h, k, lower, upper)` root-budget problem statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingSpec {
    pub h: usize,
    pub k: usize,
    /// `lower[0]` is the total lower bound, `lower[i]` the bound on member `i`.
    pub lower: Vec<usize>,
    /// Same layout as `lower`.
    pub upper: Vec<usize>,
}

impl PackingSpec {
    pub fn new(h: usize, k: usize, lower: Vec<usize>, upper: Vec<usize>) -> Self {
        Self { h, k, lower, upper }
    }

    /// Fixed root counts: `lower = upper` per member and degenerate totals.
    pub fn exact_roots(h: usize, ell: &[usize]) -> Self {
        let k = ell.len();
        let total: usize = ell.iter().sum();
        let mut lower = Vec::with_capacity(k + 1);
        lower.push(total);
        lower.extend_from_slice(ell);
        Self {
            h,
            k,
            upper: lower.clone(),
            lower,
        }
    }

    /// Spanning packing with prescribed component counts: `h = k`.
    pub fn spanning_components(ell: &[usize]) -> Self {
        Self::exact_roots(ell.len(), ell)
    }

    pub fn lower_members(&self) -> &[usize] {
        &self.lower[1..]
    }

    pub fn upper_members(&self) -> &[usize] {
        &self.upper[1..]
    }

    /// `lower(K)`: the sum of the per-member lower bounds.
    pub fn lower_sum(&self) -> usize {
        self.lower[1..].iter().sum()
    }

    /// `upper(K)`.
    pub fn upper_sum(&self) -> usize {
        self.upper[1..].iter().sum()
    }

    /// True iff `lower = upper` per member and the totals are degenerate,
    /// i.e. the spec prescribes exact root counts.
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper && self.lower[0] == self.lower_sum()
    }

    /// Violations of the standing hypotheses for a host on `n` vertices.
    pub fn validate(&self, n: usize) -> Vec<SpecViolation> {
        let mut out = Vec::new();
        if self.h == 0
            || self.k == 0
            || n == 0
            || self.lower.len() != self.k + 1
            || self.upper.len() != self.k + 1
            || self.lower.iter().any(|&x| x == 0)
            || self.upper.iter().any(|&x| x == 0)
        {
            out.push(SpecViolation::Malformed);
            return out;
        }
        if !(self.upper_sum() >= self.upper[0]
            && self.upper[0] >= self.lower[0]
            && self.lower[0] >= self.lower_sum())
        {
            out.push(SpecViolation::TotalChain);
        }
        for i in 1..=self.k {
            if !(n >= self.upper[i] && self.upper[i] >= self.lower[i]) {
                out.push(SpecViolation::MemberBound { member: i });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capped_function() {
        assert_eq!(ell_capped(&[3, 1], 2), alloc::vec![2, 1]);
        assert_eq!(ell_capped_sum(&[3, 1], 2), 3);
        assert_eq!(ell_capped_sum(&[3, 1], 0), 0);
        assert_eq!(ell_capped_sum(&[2, 5, 1], 4), 7);
    }

    #[test]
    fn capped_is_monotone_and_dominated() {
        let ell = [4usize, 2, 7, 1];
        for p in 0..9 {
            let a = ell_capped(&ell, p);
            let b = ell_capped(&ell, p + 1);
            for i in 0..ell.len() {
                assert!(a[i] <= b[i]);
                assert!(a[i] <= ell[i]);
            }
        }
    }

    #[test]
    fn validates_degenerate_spec() {
        let s = PackingSpec::exact_roots(2, &[1, 1]);
        assert!(s.validate(3).is_empty());
        assert!(s.is_exact());
    }

    #[test]
    fn flags_total_chain() {
        let s = PackingSpec::new(1, 1, alloc::vec![3, 1], alloc::vec![2, 1]);
        assert_eq!(s.validate(3), alloc::vec![SpecViolation::TotalChain]);
    }

    #[test]
    fn flags_member_bound() {
        let s = PackingSpec::new(1, 1, alloc::vec![4, 4], alloc::vec![4, 4]);
        assert!(s
            .validate(3)
            .contains(&SpecViolation::MemberBound { member: 1 }));
    }
}
