//! Ground-truth combinatorics by exhaustive enumeration.
//!
//! Everything here is exponential in general and bounded by a node budget:
//! every value tried during backtracking costs one node, and running out
//! yields [`Error::BudgetExceeded`] instead of an open-ended search.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::partition::Partition;
use crate::polytope::{check_trivial_necessary, point_from_counts, RationalPoint, VariableIndex};

/// Default node budget for the enumerators.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Upper bound on the number of cells [`LRFilling::decode`] will materialize.
const MAX_DECODED_CELLS: u64 = 10_000_000;

struct Nodes {
    used: u64,
    budget: u64,
}

impl Nodes {
    fn new(budget: u64) -> Self {
        Self { used: 0, budget }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Letter counts `r[i][j]` of a Littlewood-Richardson skew tableau, i.e. an
/// integer point of the LR polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRFilling {
    rank: usize,
    /// Indexed by [`VariableIndex::position`].
    counts: Vec<BigUint>,
}

impl LRFilling {
    pub fn new(rank: usize, counts: Vec<BigUint>) -> Self {
        assert_eq!(
            counts.len(),
            rank * (rank + 1) / 2,
            "one count per variable"
        );
        Self { rank, counts }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Number of letters `letter` in row `row` (1-based); zero when `letter > row`.
    pub fn get(&self, row: usize, letter: usize) -> BigUint {
        if letter == 0 || letter > row || row > self.rank {
            return BigUint::zero();
        }
        self.counts[VariableIndex::new(row, letter).position()].clone()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn to_point(&self) -> RationalPoint {
        point_from_counts(&VariableIndex::all(self.rank), &self.counts)
    }

    /// Lays the counts out as a skew tableau over the inner shape `alpha`:
    /// row `i` is `alpha_i` empty cells, then `r[i][1]` ones, `r[i][2]` twos
    /// and so on.
    pub fn decode(&self, alpha: &Partition) -> Result<SkewTableau> {
        alpha.check_rank(self.rank)?;
        let small = |x: &BigUint| {
            x.to_u64()
                .filter(|&v| v <= MAX_DECODED_CELLS)
                .ok_or_else(|| Error::TooLarge(format!("{x} cells")))
        };
        small(&self.total())?;
        let mut offsets = Vec::with_capacity(self.rank);
        let mut rows = Vec::with_capacity(self.rank);
        for i in 1..=self.rank {
            offsets.push(small(&alpha.part(i - 1))? as usize);
            let mut row = Vec::new();
            for j in 1..=i {
                row.extend(std::iter::repeat_n(j as u32, small(&self.get(i, j))? as usize));
            }
            rows.push(row);
        }
        Ok(SkewTableau { offsets, rows })
    }
}

impl Serialize for LRFilling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(
            VariableIndex::all(self.rank)
                .into_iter()
                .zip(&self.counts)
                .map(|(k, v)| (k.to_string(), v.to_string())),
        )
    }
}

impl<'de> Deserialize<'de> for LRFilling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut entries = raw
            .iter()
            .map(|(k, v)| {
                let k = VariableIndex::from_str(k).map_err(D::Error::custom)?;
                let v = BigUint::from_str(v)
                    .map_err(|_| D::Error::custom(format!("bad count {v:?}")))?;
                Ok((k, v))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        entries.sort_by_key(|(k, _)| *k);
        let rank = entries.last().map_or(0, |(k, _)| k.row);
        if entries.iter().map(|(k, _)| *k).ne(VariableIndex::all(rank)) {
            return Err(D::Error::custom(
                "filling must list every r^i_j with j <= i <= rank",
            ));
        }
        Ok(Self::new(
            rank,
            entries.into_iter().map(|(_, v)| v).collect(),
        ))
    }
}

/// A filled skew diagram: row `i` starts after `offsets[i]` empty cells and
/// continues with the letters in `rows[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    pub offsets: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn outer_shape(&self) -> Vec<usize> {
        self.offsets
            .iter()
            .zip(&self.rows)
            .map(|(o, r)| o + r.len())
            .collect()
    }

    fn entry(&self, row: usize, col: usize) -> Option<u32> {
        let off = self.offsets[row];
        (col >= off)
            .then(|| self.rows[row].get(col - off).copied())
            .flatten()
    }

    /// Inner and outer shapes are partitions, rows weakly increase and
    /// columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing(&self.offsets) || !decreasing(&self.outer_shape()) {
            return false;
        }
        if self.rows.iter().flatten().any(|&x| x == 0) {
            return false;
        }
        if !self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) {
            return false;
        }
        (1..self.rows.len()).all(|i| {
            (self.offsets[i]..self.offsets[i] + self.rows[i].len()).all(|c| {
                match (self.entry(i - 1, c), self.entry(i, c)) {
                    (Some(up), Some(down)) => up < down,
                    _ => true,
                }
            })
        })
    }

    /// Entries read from the bottom row to the top, left to right.
    pub fn row_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `content[k]` is the number of letters `k + 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &x in self.rows.iter().flatten() {
            let k = x as usize - 1;
            if out.len() <= k {
                out.resize(k + 1, 0);
            }
            out[k] += 1;
        }
        out
    }

    /// Whether this is a Littlewood-Richardson tableau of content `beta`.
    pub fn is_lr_tableau(&self, beta: &[usize]) -> bool {
        let mut want: Vec<usize> = beta.to_vec();
        while want.last() == Some(&0) {
            want.pop();
        }
        self.rows.iter().flatten().all(|&x| x >= 1)
            && self.is_semistandard()
            && self.content() == want
            && is_reverse_lattice_word(&self.row_word())
    }
}

/// Every suffix contains at least as many `k`'s as `k + 1`'s, for all `k`.
pub fn is_reverse_lattice_word(word: &[u32]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for &x in word.iter().rev() {
        if x == 0 {
            return false;
        }
        let k = x as usize;
        if seen.len() <= k {
            seen.resize(k + 1, 0);
        }
        seen[k] += 1;
        if k >= 2 && seen[k] > seen[k - 1] {
            return false;
        }
    }
    true
}

fn small_parts(p: &Partition, n: usize) -> Result<Vec<i128>> {
    p.padded(n)?
        .iter()
        .map(|x| {
            x.to_i128()
                .ok_or_else(|| Error::TooLarge(format!("part {x}")))
        })
        .collect()
}

/// Backtracking over `r[i][j]`: rows top to bottom, letters low to high,
/// values high to low. Column strictness and the lattice condition on the
/// rows already completed bound every value from above.
struct LrSearch {
    n: usize,
    alpha: Vec<i128>,
    gamma: Vec<i128>,
    remaining: Vec<i128>,
    /// Per-letter totals over completed rows.
    above: Vec<i128>,
    r: Vec<Vec<i128>>,
    nodes: Nodes,
}

type Visit<'a> = dyn FnMut(&[Vec<i128>]) -> ControlFlow<()> + 'a;

impl LrSearch {
    fn new(
        alpha: &Partition,
        beta: &Partition,
        gamma: &Partition,
        n: usize,
        budget: u64,
    ) -> Result<Self> {
        Ok(Self {
            n,
            alpha: small_parts(alpha, n)?,
            gamma: small_parts(gamma, n)?,
            remaining: small_parts(beta, n)?,
            above: vec![0; n],
            r: (0..n).map(|i| vec![0; i + 1]).collect(),
            nodes: Nodes::new(budget),
        })
    }

    fn run(&mut self, visit: &mut Visit<'_>) -> Result<()> {
        self.fill(0, 0, 0, visit).map(|_| ())
    }

    fn fill(
        &mut self,
        i: usize,
        j: usize,
        used: i128,
        visit: &mut Visit<'_>,
    ) -> Result<ControlFlow<()>> {
        if i == self.n {
            if self.remaining.iter().all(|&x| x == 0) {
                return Ok(visit(&self.r));
            }
            return Ok(ControlFlow::Continue(()));
        }
        let cap = self.gamma[i] - self.alpha[i];
        let mut ub = (cap - used).min(self.remaining[j]);
        if j >= 1 {
            ub = ub.min(self.above[j - 1] - self.above[j]);
        }
        if i >= 1 {
            let before: i128 = self.r[i - 1].iter().take(j).sum();
            ub = ub.min(self.alpha[i - 1] + before - self.alpha[i] - used);
        }
        let lo = if j == i { cap - used } else { 0 };
        if ub < lo {
            return Ok(ControlFlow::Continue(()));
        }
        let mut v = ub;
        while v >= lo {
            self.nodes.tick()?;
            self.r[i][j] = v;
            self.remaining[j] -= v;
            let flow = if j == i {
                for k in 0..=i {
                    self.above[k] += self.r[i][k];
                }
                let flow = self.fill(i + 1, 0, 0, visit);
                for k in 0..=i {
                    self.above[k] -= self.r[i][k];
                }
                flow
            } else {
                self.fill(i, j + 1, used + v, visit)
            };
            self.remaining[j] += v;
            self.r[i][j] = 0;
            if flow?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
            v -= 1;
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn check_ranks(ps: &[&Partition], n: usize) -> Result<()> {
    ps.iter().try_for_each(|p| p.check_rank(n))
}

/// `c_{α,β}^γ` as the number of LR skew tableaux of shape γ/α and content β.
pub fn count_lr_tableaux(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    n: usize,
    budget: u64,
) -> Result<BigUint> {
    check_ranks(&[alpha, beta, gamma], n)?;
    if !check_trivial_necessary(alpha, beta, gamma) {
        return Ok(BigUint::zero());
    }
    let mut count = 0u64;
    LrSearch::new(alpha, beta, gamma, n, budget)?.run(&mut |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(BigUint::from(count))
}

/// The first LR filling in enumeration order, if any.
pub fn integral_witness(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    n: usize,
    budget: u64,
) -> Result<Option<LRFilling>> {
    check_ranks(&[alpha, beta, gamma], n)?;
    if !check_trivial_necessary(alpha, beta, gamma) {
        return Ok(None);
    }
    let mut found = None;
    LrSearch::new(alpha, beta, gamma, n, budget)?.run(&mut |r| {
        let counts = r
            .iter()
            .flatten()
            .map(|&x| BigUint::from(x as u128))
            .collect();
        found = Some(LRFilling::new(n, counts));
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Number of semistandard tableaux of shape `lambda` with entries in `1..=n`,
/// counted cell by cell.
pub fn count_ssyt(lambda: &Partition, n: usize, budget: u64) -> Result<BigUint> {
    lambda.check_rank(n)?;
    let too_big = || Error::BudgetExceeded { budget };
    let size = lambda
        .size()
        .to_u64()
        .filter(|&s| s <= budget)
        .ok_or_else(too_big)?;
    let shape: Vec<usize> = lambda.to_u64s()?.into_iter().map(|x| x as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |c| (i, c)))
        .collect();
    debug_assert_eq!(cells.len() as u64, size);

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut [Vec<u32>],
        n: u32,
        nodes: &mut Nodes,
        count: &mut u64,
    ) -> Result<()> {
        let Some(&(i, c)) = cells.get(k) else {
            *count += 1;
            return Ok(());
        };
        let left = if c > 0 { grid[i][c - 1] } else { 1 };
        let above = if i > 0 { grid[i - 1][c] + 1 } else { 1 };
        for e in left.max(above)..=n {
            nodes.tick()?;
            grid[i][c] = e;
            rec(k + 1, cells, grid, n, nodes, count)?;
        }
        Ok(())
    }

    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut count = 0u64;
    rec(
        0,
        &cells,
        &mut grid,
        n as u32,
        &mut Nodes::new(budget),
        &mut count,
    )?;
    Ok(BigUint::from(count))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub gamma: Partition,
    #[serde(with = "crate::bigstr")]
    pub mult: BigUint,
}

/// `V_α ⊗ V_β` as a list of `(γ, c_{α,β}^γ)` with positive multiplicities,
/// γ in descending lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Decomposition {
    pub terms: Vec<Term>,
}

impl Decomposition {
    pub fn multiplicity(&self, gamma: &Partition) -> BigUint {
        self.terms
            .iter()
            .find(|t| &t.gamma == gamma)
            .map(|t| t.mult.clone())
            .unwrap_or_default()
    }

    /// `Σ c_γ · dim V_γ` at rank `n`.
    pub fn dimension(&self, n: usize) -> Result<BigUint> {
        self.terms.iter().try_fold(BigUint::zero(), |acc, t| {
            Ok(acc + &t.mult * t.gamma.weyl_dimension(n)?)
        })
    }
}

/// Partitions of `size` with at most `n` parts containing `alpha`, in
/// descending lexicographic order.
fn shapes_containing(
    alpha: &Partition,
    size: u64,
    n: usize,
    budget: u64,
) -> Result<Vec<Partition>> {
    let inner: Vec<u64> = {
        let mut v = alpha.to_u64s()?;
        v.resize(n.max(v.len()), 0);
        v
    };
    // suffix[i] = Σ_{k >= i} inner[k]
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + inner[i];
    }

    struct Gen<'a> {
        inner: &'a [u64],
        suffix: &'a [u64],
        n: usize,
        nodes: Nodes,
        cur: Vec<u64>,
        out: Vec<Partition>,
    }
    impl Gen<'_> {
        fn rec(&mut self, i: usize, rest: u64, max_part: u64) -> Result<()> {
            if i == self.n {
                if rest == 0 {
                    self.out
                        .push(Partition::from_u64s(&self.cur).expect("decreasing by construction"));
                }
                return Ok(());
            }
            let slots = (self.n - i) as u64;
            let mut v = rest.min(max_part);
            while v >= self.inner[i] {
                // later rows need at least their inner parts and can hold at most v each
                if rest - v < self.suffix[i + 1] {
                    if v == 0 {
                        break;
                    }
                    v -= 1;
                    continue;
                }
                if (rest - v) > v.saturating_mul(slots - 1) {
                    break;
                }
                self.nodes.tick()?;
                self.cur.push(v);
                self.rec(i + 1, rest - v, v)?;
                self.cur.pop();
                if v == 0 {
                    break;
                }
                v -= 1;
            }
            Ok(())
        }
    }

    if alpha.height() > n {
        return Ok(Vec::new());
    }
    let mut gen = Gen {
        inner: &inner,
        suffix: &suffix,
        n,
        nodes: Nodes::new(budget),
        cur: Vec::new(),
        out: Vec::new(),
    };
    gen.rec(0, size, size)?;
    Ok(gen.out)
}

/// Decomposes `V_α ⊗ V_β` for GL_n with the default execution strategy.
pub fn decompose_tensor(
    alpha: &Partition,
    beta: &Partition,
    n: usize,
    budget: u64,
) -> Result<Decomposition> {
    decompose_tensor_with(alpha, beta, n, budget, Execution::default())
}

/// As [`decompose_tensor`]; candidate shapes are counted independently, each
/// with its own `budget`.
pub fn decompose_tensor_with(
    alpha: &Partition,
    beta: &Partition,
    n: usize,
    budget: u64,
    exec: Execution,
) -> Result<Decomposition> {
    check_ranks(&[alpha, beta], n)?;
    let size = (alpha.size() + beta.size())
        .to_u64()
        .ok_or_else(|| Error::TooLarge("tensor product size".into()))?;
    let candidates = shapes_containing(alpha, size, n, budget)?;
    let counts = exec::map(&candidates, exec, |g| {
        count_lr_tableaux(alpha, beta, g, n, budget)
    });
    let mut terms = Vec::new();
    for (gamma, mult) in candidates.into_iter().zip(counts) {
        let mult = mult?;
        if !mult.is_zero() {
            terms.push(Term { gamma, mult });
        }
    }
    Ok(Decomposition { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_u64s(parts).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn lattice_words() {
        assert!(is_reverse_lattice_word(&[]));
        assert!(is_reverse_lattice_word(&[2, 1, 1]));
        assert!(is_reverse_lattice_word(&[3, 2, 1]));
        assert!(!is_reverse_lattice_word(&[1, 2]));
        assert!(!is_reverse_lattice_word(&[1, 1, 3, 2]));
        assert!(is_reverse_lattice_word(&[1, 2, 1]));
        assert!(!is_reverse_lattice_word(&[0]));
    }

    #[test]
    fn skew_tableau_checks() {
        // shape (3,2,1)/(2,1): cells (1,3), (2,2), (3,1)
        let t = SkewTableau {
            offsets: vec![2, 1, 0],
            rows: vec![vec![1], vec![1], vec![2]],
        };
        assert!(t.is_semistandard());
        assert_eq!(t.row_word(), vec![2, 1, 1]);
        assert!(t.is_lr_tableau(&[2, 1]));
        assert!(!t.is_lr_tableau(&[1, 2]));

        // column (1,1) over (1,1) is not column strict
        let bad = SkewTableau {
            offsets: vec![0, 0],
            rows: vec![vec![1], vec![1]],
        };
        assert!(!bad.is_semistandard());
        let unsorted = SkewTableau {
            offsets: vec![0],
            rows: vec![vec![2, 1]],
        };
        assert!(!unsorted.is_semistandard());
        let not_a_shape = SkewTableau {
            offsets: vec![0, 0],
            rows: vec![vec![1], vec![2, 2]],
        };
        assert!(!not_a_shape.is_semistandard());
    }

    #[test]
    fn count_examples() {
        let b = DEFAULT_BUDGET;
        for beta in [p(&[]), p(&[1]), p(&[3, 1]), p(&[2, 2, 1])] {
            let n = beta.height().max(1);
            assert_eq!(
                count_lr_tableaux(&p(&[]), &beta, &beta, n, b).unwrap(),
                big(1)
            );
        }
        assert_eq!(
            count_lr_tableaux(&p(&[1]), &p(&[1]), &p(&[2]), 2, b).unwrap(),
            big(1)
        );
        assert_eq!(
            count_lr_tableaux(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 3, b).unwrap(),
            big(2)
        );
        assert_eq!(
            count_lr_tableaux(&p(&[1]), &p(&[1]), &p(&[3]), 2, b).unwrap(),
            big(0)
        );
        assert_eq!(
            count_lr_tableaux(&p(&[2]), &p(&[2]), &p(&[1, 1, 1, 1]), 4, b).unwrap(),
            big(0)
        );
        assert_eq!(
            count_lr_tableaux(&p(&[5]), &p(&[5]), &p(&[10]), 1, b).unwrap(),
            big(1)
        );
    }

    #[test]
    fn rank_and_budget_errors() {
        assert_eq!(
            count_lr_tableaux(&p(&[1, 1]), &p(&[1]), &p(&[2, 1]), 1, 100),
            Err(Error::HeightExceedsRank { height: 2, rank: 1 })
        );
        let big_beta = p(&[6, 4, 2]);
        let res = count_lr_tableaux(&p(&[4, 2]), &big_beta, &p(&[8, 6, 4]), 4, 3);
        assert_eq!(res, Err(Error::BudgetExceeded { budget: 3 }));
    }

    #[test]
    fn witness_examples() {
        let b = DEFAULT_BUDGET;
        let w = integral_witness(&p(&[1]), &p(&[1]), &p(&[2]), 2, b)
            .unwrap()
            .unwrap();
        assert_eq!(w.counts(), &[big(1), big(0), big(0)]);
        assert_eq!(
            integral_witness(&p(&[1]), &p(&[1]), &p(&[3]), 2, b).unwrap(),
            None
        );

        // the two fillings of (3,2,1)/(2,1) with content (2,1): row word 211 or 121.
        // Values are tried high to low, so row 2 takes its 1 first.
        let w = integral_witness(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 3, b)
            .unwrap()
            .unwrap();
        assert_eq!(w.get(1, 1), big(1));
        assert_eq!(w.get(2, 1), big(1));
        assert_eq!(w.get(3, 2), big(1));
        assert!(w.decode(&p(&[2, 1])).unwrap().is_lr_tableau(&[2, 1]));
    }

    #[test]
    fn filling_json() {
        let w = LRFilling::new(2, vec![big(1), big(0), big(0)]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"1.1":"1","2.1":"0","2.2":"0"}"#);
        assert_eq!(serde_json::from_str::<LRFilling>(&json).unwrap(), w);
        assert!(serde_json::from_str::<LRFilling>(r#"{"1.1":"1","2.2":"0"}"#).is_err());
        assert_eq!(
            serde_json::from_str::<LRFilling>("{}").unwrap(),
            LRFilling::new(0, vec![])
        );
    }

    #[test]
    fn ssyt_examples() {
        let b = DEFAULT_BUDGET;
        assert_eq!(count_ssyt(&p(&[]), 3, b).unwrap(), big(1));
        assert_eq!(count_ssyt(&p(&[1]), 3, b).unwrap(), big(3));
        assert_eq!(count_ssyt(&p(&[2, 1]), 3, b).unwrap(), big(8));
        assert!(matches!(
            count_ssyt(&p(&[1, 1]), 1, b),
            Err(Error::HeightExceedsRank { .. })
        ));
        assert!(matches!(
            count_ssyt(&p(&[1_000_000]), 2, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn decomposition_examples() {
        let b = DEFAULT_BUDGET;
        let d = decompose_tensor(&p(&[1]), &p(&[1]), 2, b).unwrap();
        assert_eq!(
            d.terms,
            vec![
                Term {
                    gamma: p(&[2]),
                    mult: big(1)
                },
                Term {
                    gamma: p(&[1, 1]),
                    mult: big(1)
                }
            ]
        );
        let d = decompose_tensor(&p(&[1]), &p(&[1]), 1, b).unwrap();
        assert_eq!(
            d.terms,
            vec![Term {
                gamma: p(&[2]),
                mult: big(1)
            }]
        );
        let d = decompose_tensor(&p(&[]), &p(&[3, 1]), 4, b).unwrap();
        assert_eq!(
            d.terms,
            vec![Term {
                gamma: p(&[3, 1]),
                mult: big(1)
            }]
        );

        let d = decompose_tensor(&p(&[2, 1]), &p(&[2, 1]), 3, b).unwrap();
        assert_eq!(d.multiplicity(&p(&[3, 2, 1])), big(2));
        let dims = p(&[2, 1]).weyl_dimension(3).unwrap();
        assert_eq!(d.dimension(3).unwrap(), &dims * &dims);

        let json =
            serde_json::to_string(&decompose_tensor(&p(&[1]), &p(&[1]), 2, b).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"[{"gamma":["2"],"mult":"1"},{"gamma":["1","1"],"mult":"1"}]"#
        );
    }

    #[test]
    fn containing_shapes_match_filtered_partitions() {
        for (alpha, size, n) in [
            (p(&[2, 1]), 6, 3),
            (p(&[]), 5, 4),
            (p(&[3]), 7, 2),
            (p(&[1, 1, 1]), 5, 3),
        ] {
            let want: Vec<Partition> = partitions_of(size, n)
                .into_iter()
                .filter(|g| alpha.is_contained_in(g))
                .collect();
            assert_eq!(
                shapes_containing(&alpha, size, n, DEFAULT_BUDGET).unwrap(),
                want
            );
        }
    }

    #[test]
    fn execution_modes_agree() {
        let (a, b) = (p(&[3, 2, 1]), p(&[2, 1]));
        let seq = decompose_tensor_with(&a, &b, 4, DEFAULT_BUDGET, Execution::Sequential).unwrap();
        let par = decompose_tensor_with(&a, &b, 4, DEFAULT_BUDGET, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
