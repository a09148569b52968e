//! Brute-force verification of every closed-form verdict.
//!
//! The oracle decides splitting feasibility by direct enumeration of
//! degree compositions and shares nothing with the closed form except the
//! definition of `rho` itself; in particular it never calls `min_degree`.
//! Sweeps grid over genus, degree rule and rank lists and report every
//! cell where the two paths disagree.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bn::rho_raw;
use crate::feasibility::{canonical_segre_verdict, splitting_feasible, SplitSpec};
use crate::{Error, Result};

/// Default enumeration node budget per sweep cell.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Degree rule for a sweep: how `D` is chosen for each genus.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum DegreeRule {
    /// `D = 2g - 2`.
    Canonical,
    /// A single fixed `D` for every genus.
    Fixed(i64),
    /// `D = m * g` for each listed multiplier.
    GenusMultiples(Vec<i64>),
}

/// Grid description for [`verify_sweep`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepConfig {
    pub g_min: i64,
    pub g_max: i64,
    pub max_n: usize,
    pub max_rank: i64,
    pub degree: DegreeRule,
    /// Node budget per cell.
    pub budget: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.g_min < 3 || self.g_min > self.g_max {
            return Err(Error::InvalidSweepRange {
                g_min: self.g_min,
                g_max: self.g_max,
            });
        }
        if self.max_n < 1 {
            return Err(Error::InvalidSweepConfig("max_n must be at least 1"));
        }
        if self.max_rank < 1 {
            return Err(Error::InvalidSweepConfig("max_rank must be at least 1"));
        }
        match &self.degree {
            DegreeRule::Fixed(d) if *d < 0 => Err(Error::NegativeDegree(*d)),
            DegreeRule::GenusMultiples(ms) if ms.is_empty() => {
                Err(Error::InvalidSweepConfig("empty multiplier list"))
            }
            DegreeRule::GenusMultiples(ms) if ms.iter().any(|m| *m < 0) => {
                Err(Error::InvalidSweepConfig("negative degree multiplier"))
            }
            _ => Ok(()),
        }
    }
}

/// A cell where the closed form and the oracle disagreed. The acceptance
/// suite requires that none are ever produced.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Discrepancy {
    pub g: i64,
    pub total_degree: i64,
    pub ranks: Vec<i64>,
    /// Which comparison failed: the splitting shortcut or the full verdict.
    pub check: String,
    pub closed_form: bool,
    pub oracle: bool,
}

/// Sweep outcome: cell count plus any discrepancies, ordered by
/// `(g, ranks, D)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub cells: u64,
    pub g_max: i64,
    pub discrepancies: Vec<Discrepancy>,
}

/// Exhaustively decides whether degrees `d1, ..., dn >= 0` with
/// `sum di = D` and `rho(g, ri, di) >= 0` exist.
///
/// Depth-first over compositions of `D`, degrees tried in increasing
/// order. Pruning uses only the monotonicity of `rho` in the degree:
/// a coordinate below its feasibility threshold is skipped, and once the
/// first feasible value for a coordinate fails to extend, no larger value
/// can (a larger `di` only shrinks what remains for the suffix, and
/// suffix feasibility is monotone in the remaining budget). Every tried
/// degree value counts one node against `budget`.
pub fn oracle_splitting_feasible(
    g: i64,
    total_degree: i64,
    ranks: &[i64],
    budget: u64,
) -> Result<bool> {
    // Reuse SplitSpec validation, nothing else.
    let spec = SplitSpec::new(g, total_degree, ranks.to_vec())?;
    let mut nodes = 0u64;
    search(g, spec.ranks(), total_degree, &mut nodes, budget)
}

fn search(g: i64, ranks: &[i64], remaining: i64, nodes: &mut u64, budget: u64) -> Result<bool> {
    let (&r, rest) = ranks.split_first().expect("ranks validated nonempty");
    if rest.is_empty() {
        // Last coordinate must absorb the remainder exactly.
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchSpaceTooLarge { budget });
        }
        return Ok(rho_raw(g, r, remaining) >= 0);
    }
    for d in 0..=remaining {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchSpaceTooLarge { budget });
        }
        if rho_raw(g, r, d) >= 0 {
            return search(g, rest, remaining - d, nodes, budget);
        }
    }
    Ok(false)
}

/// All nondecreasing rank lists of length `1..=max_n` over `1..=max_rank`.
fn rank_lists(max_n: usize, max_rank: i64) -> Vec<Vec<i64>> {
    let mut all = Vec::new();
    let mut frontier: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_n {
        let mut next = Vec::new();
        for list in &frontier {
            let lo = list.last().copied().unwrap_or(1);
            for r in lo..=max_rank {
                let mut l = list.clone();
                l.push(r);
                next.push(l);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn degrees_for(g: i64, rule: &DegreeRule) -> Vec<i64> {
    match rule {
        DegreeRule::Canonical => vec![2 * g - 2],
        DegreeRule::Fixed(d) => vec![*d],
        DegreeRule::GenusMultiples(ms) => ms.iter().map(|m| m * g).collect(),
    }
}

/// Cross-checks the closed form against the oracle over the configured
/// grid. For every cell, `splitting_feasible` is compared against
/// exhaustive enumeration; where the cell is a canonical Segre candidate
/// (`prod (ri+1) = g` and `D = 2g-2`) the full verdict is compared too.
///
/// Cells are independent and run in parallel across genus; results are
/// merged in ascending `(g, ranks, D)` order, so the report is
/// deterministic regardless of worker count.
pub fn verify_sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let lists = rank_lists(config.max_n, config.max_rank);

    let per_genus: Vec<Result<(u64, Vec<Discrepancy>)>> = (config.g_min..=config.g_max)
        .into_par_iter()
        .map(|g| sweep_one_genus(g, &lists, config))
        .collect();

    let mut cells = 0u64;
    let mut discrepancies = Vec::new();
    for r in per_genus {
        let (c, d) = r?;
        cells += c;
        discrepancies.extend(d);
    }
    Ok(SweepReport {
        cells,
        g_max: config.g_max,
        discrepancies,
    })
}

fn sweep_one_genus(
    g: i64,
    lists: &[Vec<i64>],
    config: &SweepConfig,
) -> Result<(u64, Vec<Discrepancy>)> {
    let mut cells = 0u64;
    let mut discrepancies = Vec::new();
    for ranks in lists {
        for total_degree in degrees_for(g, &config.degree) {
            cells += 1;
            let spec = SplitSpec::new(g, total_degree, ranks.clone())?;
            let closed = splitting_feasible(&spec).feasible;
            let oracle =
                oracle_splitting_feasible(g, total_degree, ranks, config.budget).map_err(|e| {
                    match e {
                        Error::SearchSpaceTooLarge { budget } => Error::SweepBudgetExceeded {
                            g,
                            total_degree,
                            ranks: ranks.clone(),
                            budget,
                        },
                        other => other,
                    }
                })?;
            if closed != oracle {
                discrepancies.push(Discrepancy {
                    g,
                    total_degree,
                    ranks: ranks.clone(),
                    check: "splitting".into(),
                    closed_form: closed,
                    oracle,
                });
            }

            let product: i64 = ranks.iter().map(|r| r + 1).product();
            if product == g && total_degree == 2 * g - 2 {
                let verdict = canonical_segre_verdict(g, ranks)?.feasible;
                // With the product condition satisfied, the verdict must
                // coincide with raw splitting feasibility.
                if verdict != oracle {
                    discrepancies.push(Discrepancy {
                        g,
                        total_degree,
                        ranks: ranks.clone(),
                        check: "canonical_verdict".into(),
                        closed_form: verdict,
                        oracle,
                    });
                }
            }
        }
    }
    Ok((cells, discrepancies))
}

/// Scans genus upward for the least `g` at which the oracle finds a
/// canonical splitting into the given rank triple; `None` if `cap` is
/// reached first.
pub fn least_feasible_genus(ranks: &[i64], cap: i64) -> Result<Option<i64>> {
    if ranks.len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: ranks.len(),
        });
    }
    for g in 3..=cap {
        if oracle_splitting_feasible(g, 2 * g - 2, ranks, DEFAULT_NODE_BUDGET)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn::min_degree;

    // Oracle's oracle: unpruned full enumeration, small inputs only.
    fn full_enumeration(g: i64, total: i64, ranks: &[i64]) -> bool {
        fn go(g: i64, ranks: &[i64], remaining: i64) -> bool {
            match ranks.split_first() {
                None => remaining == 0,
                Some((&r, rest)) => {
                    (0..=remaining).any(|d| rho_raw(g, r, d) >= 0 && go(g, rest, remaining - d))
                }
            }
        }
        go(g, ranks, total)
    }

    #[test]
    fn oracle_examples() {
        let b = DEFAULT_NODE_BUDGET;
        assert!(oracle_splitting_feasible(10, 18, &[1, 1, 1], b).unwrap());
        assert!(!oracle_splitting_feasible(9, 16, &[1, 1, 1], b).unwrap());
        // Genus 3 canonical degree 4 cannot split into two pencils: each
        // needs degree >= 3. Pinned by the unpruned enumeration.
        assert!(!full_enumeration(3, 4, &[1, 1]));
        assert!(!oracle_splitting_feasible(3, 4, &[1, 1], b).unwrap());
    }

    #[test]
    fn pruned_search_matches_full_enumeration() {
        for g in 3..=14 {
            for ranks in [
                vec![1],
                vec![2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2],
                vec![1, 1, 1],
                vec![1, 1, 2],
                vec![1, 2, 3],
            ] {
                for total in 0..=(3 * g) {
                    assert_eq!(
                        oracle_splitting_feasible(g, total, &ranks, DEFAULT_NODE_BUDGET).unwrap(),
                        full_enumeration(g, total, &ranks),
                        "g={g} D={total} ranks={ranks:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        assert_eq!(
            oracle_splitting_feasible(50, 200, &[1, 1, 1, 1], 3),
            Err(Error::SearchSpaceTooLarge { budget: 3 })
        );
    }

    #[test]
    fn oracle_agrees_with_min_degree_sum() {
        for g in 3..=40 {
            for ranks in [vec![1, 1], vec![1, 2, 3], vec![2, 2, 2, 1]] {
                for total in 0..=(4 * g) {
                    let closed = ranks
                        .iter()
                        .map(|&r| min_degree(g, r).unwrap())
                        .sum::<i64>()
                        <= total;
                    assert_eq!(
                        oracle_splitting_feasible(g, total, &ranks, DEFAULT_NODE_BUDGET).unwrap(),
                        closed
                    );
                }
            }
        }
    }

    #[test]
    fn sweep_examples() {
        let report = verify_sweep(&SweepConfig {
            g_min: 3,
            g_max: 50,
            max_n: 4,
            max_rank: 4,
            degree: DegreeRule::Canonical,
            budget: DEFAULT_NODE_BUDGET,
        })
        .unwrap();
        assert!(report.discrepancies.is_empty());
        assert!(report.cells > 0);

        let report = verify_sweep(&SweepConfig {
            g_min: 3,
            g_max: 30,
            max_n: 6,
            max_rank: 3,
            degree: DegreeRule::GenusMultiples(vec![1, 2, 3]),
            budget: DEFAULT_NODE_BUDGET,
        })
        .unwrap();
        assert!(report.discrepancies.is_empty());
    }

    #[test]
    fn sweep_rejects_bad_config() {
        let bad = SweepConfig {
            g_min: 60,
            g_max: 10,
            max_n: 2,
            max_rank: 2,
            degree: DegreeRule::Canonical,
            budget: DEFAULT_NODE_BUDGET,
        };
        assert_eq!(
            verify_sweep(&bad),
            Err(Error::InvalidSweepRange {
                g_min: 60,
                g_max: 10
            })
        );
    }

    #[test]
    fn sweep_budget_error_identifies_the_cell() {
        let report = verify_sweep(&SweepConfig {
            g_min: 3,
            g_max: 100,
            max_n: 4,
            max_rank: 4,
            degree: DegreeRule::Canonical,
            budget: 2,
        });
        assert!(matches!(
            report,
            Err(Error::SweepBudgetExceeded { budget: 2, .. })
        ));
    }

    #[test]
    fn least_genus_examples() {
        assert_eq!(least_feasible_genus(&[1, 1, 1], 50).unwrap(), Some(10));
        assert_eq!(least_feasible_genus(&[1, 2, 5], 2000).unwrap(), None);
        assert_eq!(least_feasible_genus(&[1, 2, 2], 100).unwrap(), Some(42));
        assert_eq!(
            least_feasible_genus(&[1, 1], 50),
            Err(Error::WrongArity {
                expected: 3,
                got: 2
            })
        );
    }
}
