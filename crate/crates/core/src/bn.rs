//! Brill-Noether arithmetic primitives for a general smooth curve.
//!
//! The central quantity is the Brill-Noether number
//! `rho(g,r,d) = g - (r+1)(g+r-d)`. On a general curve the locus `W^r_d`
//! of degree-`d` line bundles with at least `r+1` sections is nonempty if
//! and only if `rho >= 0`, which makes every existence question in this
//! crate a pure integer computation.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Inputs are capped so that `(r+1)(g+r-d)` always fits in an `i64`;
/// sweeps in this crate stay far below this.
pub const MAX_INPUT: i64 = 1_000_000_000;

/// A triple `(g, r, d)` indexing the Brill-Noether locus `W^r_d(C)`.
///
/// Validated at construction: `g >= 3` (the standing assumption for all
/// results here), `r >= 0`, `d >= 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BNIndex {
    g: i64,
    r: i64,
    d: i64,
}

impl BNIndex {
    pub fn new(g: i64, r: i64, d: i64) -> Result<Self> {
        if g < 3 {
            return Err(Error::GenusTooSmall(g));
        }
        if r < 0 {
            return Err(Error::RankTooSmall { min: 0, got: r });
        }
        if d < 0 {
            return Err(Error::NegativeDegree(d));
        }
        for v in [g, r, d] {
            if v > MAX_INPUT {
                return Err(Error::OutOfRange(v));
            }
        }
        Ok(BNIndex { g, r, d })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }
}

/// The Brill-Noether number `rho(g,r,d) = g - (r+1)(g+r-d)`. May be negative.
pub fn rho(idx: BNIndex) -> i64 {
    idx.g - (idx.r + 1) * (idx.g + idx.r - idx.d)
}

/// `rho` without constructing a validated index. Callers must have
/// validated `g, r, d` already; used on the oracle's hot path.
pub(crate) fn rho_raw(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g + r - d)
}

/// Whether `W^r_d` is nonempty on a general curve of genus `g`: exactly
/// `rho(g,r,d) >= 0`.
pub fn wrd_nonempty_general(idx: BNIndex) -> bool {
    rho(idx) >= 0
}

/// The least degree `d` with `rho(g,r,d) >= 0`, i.e. the smallest degree
/// at which a general genus-`g` curve carries a linear series of rank `r`.
///
/// Closed form: `g + r - floor(g / (r+1))`. Requires `r >= 1`; rank 0
/// is rejected because every splitting here assumes at least two sections.
pub fn min_degree(g: i64, r: i64) -> Result<i64> {
    if g < 3 {
        return Err(Error::GenusTooSmall(g));
    }
    if r < 1 {
        return Err(Error::RankTooSmall { min: 1, got: r });
    }
    if g > MAX_INPUT || r > MAX_INPUT {
        return Err(Error::OutOfRange(g.max(r)));
    }
    Ok(g + r - g / (r + 1))
}

/// Section count of the residual bundle `L2 = L1^v (x) K_C` via
/// Riemann-Roch: `h^0(L2) = g - d1 + r1`.
///
/// Only valid when `L1` has exactly `r1+1` sections, which on a general
/// curve means `rho(g,r1,d1) = 0` and `rho(g,r1+1,d1) < 0`; anything else
/// is rejected since the shortcut is unjustified there.
pub fn rr_residual_sections(g: i64, d1: i64, r1: i64) -> Result<i64> {
    let idx = BNIndex::new(g, r1, d1)?;
    let next = BNIndex::new(g, r1 + 1, d1)?;
    if rho(idx) != 0 || rho(next) >= 0 {
        return Err(Error::RiemannRochPrecondition { g, r1, d1 });
    }
    Ok(g - d1 + r1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(g: i64, r: i64, d: i64) -> BNIndex {
        BNIndex::new(g, r, d).unwrap()
    }

    #[test]
    fn rho_spot_values() {
        assert_eq!(rho(idx(4, 1, 3)), 0);
        assert_eq!(rho(idx(7, 0, 0)), 0);
        assert_eq!(rho(idx(4, 2, 3)), -5);
        assert_eq!(rho(idx(6, 1, 4)), 0);
    }

    #[test]
    fn index_validation() {
        assert_eq!(BNIndex::new(2, 1, 1), Err(Error::GenusTooSmall(2)));
        assert_eq!(
            BNIndex::new(4, -1, 0),
            Err(Error::RankTooSmall { min: 0, got: -1 })
        );
        assert_eq!(BNIndex::new(4, 0, -2), Err(Error::NegativeDegree(-2)));
        assert!(BNIndex::new(3, 0, 0).is_ok());
    }

    #[test]
    fn nonempty_iff_rho_nonnegative() {
        assert!(wrd_nonempty_general(idx(4, 1, 3)));
        assert!(!wrd_nonempty_general(idx(4, 2, 3)));
        assert!(wrd_nonempty_general(idx(3, 0, 0)));
    }

    #[test]
    fn rho_rank_zero_equals_degree() {
        for g in 3..=40 {
            for d in 0..=100 {
                assert_eq!(rho(idx(g, 0, d)), d);
            }
        }
    }

    #[test]
    fn rho_increases_by_r_plus_one_in_degree() {
        for g in 3..=25 {
            for r in 0..=6 {
                for d in 0..=60 {
                    assert_eq!(rho(idx(g, r, d + 1)), rho(idx(g, r, d)) + (r + 1));
                }
            }
        }
    }

    #[test]
    fn min_degree_spot_values() {
        assert_eq!(min_degree(10, 1).unwrap(), 6);
        assert_eq!(min_degree(16, 2).unwrap(), 13);
        assert_eq!(min_degree(4, 1).unwrap(), 3);
    }

    #[test]
    fn min_degree_rejects_rank_zero_and_small_genus() {
        assert_eq!(
            min_degree(10, 0),
            Err(Error::RankTooSmall { min: 1, got: 0 })
        );
        assert_eq!(min_degree(2, 1), Err(Error::GenusTooSmall(2)));
    }

    // Independent oracle: scan d upward for the first nonnegative rho.
    fn min_degree_by_scan(g: i64, r: i64) -> i64 {
        (0..).find(|&d| rho_raw(g, r, d) >= 0).unwrap()
    }

    #[test]
    fn min_degree_matches_linear_scan() {
        for g in 3..=500 {
            for r in 1..=20 {
                let m = min_degree(g, r).unwrap();
                assert_eq!(m, min_degree_by_scan(g, r), "g={g} r={r}");
                assert!(rho_raw(g, r, m) >= 0);
                assert!(rho_raw(g, r, m - 1) < 0);
            }
        }
    }

    #[test]
    fn residual_spot_values() {
        assert_eq!(rr_residual_sections(6, 4, 1).unwrap(), 3);
        assert_eq!(rr_residual_sections(4, 3, 1).unwrap(), 2);
        // rho(9,1,4) = -3 < 0: the shortcut does not apply.
        assert_eq!(
            rr_residual_sections(9, 4, 1),
            Err(Error::RiemannRochPrecondition { g: 9, r1: 1, d1: 4 })
        );
    }

    #[test]
    fn residual_riemann_roch_identity() {
        // h^0(L2) = h^0(L1) - d1 + g - 1 whenever the shortcut applies.
        for g in 3..=80 {
            for r1 in 1..=6 {
                for d1 in 0..=(2 * g) {
                    if let Ok(h0) = rr_residual_sections(g, d1, r1) {
                        assert_eq!(h0, (r1 + 1) - d1 + g - 1);
                    }
                }
            }
        }
    }
}
