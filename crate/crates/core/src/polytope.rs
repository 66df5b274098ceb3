//! The LR polytope: a linear system over the counts `r[i][j]` (number of
//! letters `j` in row `i` of a skew tableau of shape γ/α) whose integer
//! points are exactly the Littlewood-Richardson fillings of content β.
//!
//! Only variables with `j <= i` exist; a letter `j` never appears above row
//! `j` in such a filling. Every coefficient is `-1`, `0` or `+1` and every
//! right-hand side is an integral linear form in the parts of α, β, γ.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Index of the variable counting letter `letter` in row `row`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VariableIndex {
    #[serde(rename = "i")]
    pub row: usize,
    #[serde(rename = "j")]
    pub letter: usize,
}

impl VariableIndex {
    pub fn new(row: usize, letter: usize) -> Self {
        assert!(
            1 <= letter && letter <= row,
            "variable r^{row}_{letter} is eliminated"
        );
        Self { row, letter }
    }

    /// Position of this variable in the lexicographic order used by
    /// [`build_lr_system`].
    pub fn position(self) -> usize {
        self.row * (self.row - 1) / 2 + self.letter - 1
    }

    /// All variables for rank `n` in lexicographic `(row, letter)` order.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n)
            .flat_map(|i| (1..=i).map(move |j| Self::new(i, j)))
            .collect()
    }
}

impl fmt::Display for VariableIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.row, self.letter)
    }
}

impl FromStr for VariableIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedInput(format!("bad variable key {s:?}"));
        let (i, j) = s.split_once('.').ok_or_else(bad)?;
        let (i, j) = (
            i.parse::<usize>().map_err(|_| bad())?,
            j.parse::<usize>().map_err(|_| bad())?,
        );
        if j == 0 || j > i {
            return Err(bad());
        }
        Ok(Self::new(i, j))
    }
}

/// Which constraint family a row belongs to, with the indices that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Shape {
        i: usize,
    },
    Content {
        j: usize,
    },
    Tableau {
        i: usize,
        j: usize,
    },
    Lattice {
        i: usize,
        j: usize,
    },
    /// Rows of hand-built systems.
    Other,
}

/// A sparse row `Σ coeff·x ≤ rhs` (or `= rhs`), coefficients in `{-1, +1}`
/// keyed by variable position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    #[serde(serialize_with = "ser_coeffs", deserialize_with = "de_coeffs")]
    pub coeffs: BTreeMap<usize, i8>,
    #[serde(with = "crate::bigstr")]
    pub rhs: BigInt,
    #[serde(flatten)]
    pub family: Family,
}

impl Row {
    pub fn new(coeffs: BTreeMap<usize, i8>, rhs: BigInt, family: Family) -> Self {
        Self {
            coeffs,
            rhs,
            family,
        }
    }

    /// `row · x - rhs`.
    pub fn residual(&self, x: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (&v, &c) in &self.coeffs {
            match c {
                1 => acc += &x[v],
                -1 => acc -= &x[v],
                _ => acc += &x[v] * BigRational::from_integer(BigInt::from(c)),
            }
        }
        acc - BigRational::from_integer(self.rhs.clone())
    }
}

fn ser_coeffs<S: Serializer>(
    c: &BTreeMap<usize, i8>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(c.iter().map(|(k, v)| (k.to_string(), v)))
}

fn de_coeffs<'de, D: Deserializer<'de>>(
    d: D,
) -> std::result::Result<BTreeMap<usize, i8>, D::Error> {
    let raw = BTreeMap::<String, i8>::deserialize(d)?;
    raw.into_iter()
        .map(|(k, v)| {
            let k = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad variable position {k:?}")))?;
            Ok((k, v))
        })
        .collect()
}

/// Equalities and `≤` inequalities over nonnegative variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub num_vars: usize,
    pub vars: Vec<VariableIndex>,
    pub eq: Vec<Row>,
    pub le: Vec<Row>,
}

impl ConstraintSystem {
    pub fn new(vars: Vec<VariableIndex>) -> Self {
        Self {
            num_vars: vars.len(),
            vars,
            eq: Vec::new(),
            le: Vec::new(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &Row> {
        self.eq.iter().chain(&self.le)
    }

    /// Adds `Σ coeff·x = rhs`, or `≤` when `equality` is false. Rows with no
    /// terms are dropped when trivially true and kept otherwise.
    fn push(&mut self, terms: Vec<(usize, i8)>, rhs: BigInt, family: Family, equality: bool) {
        let mut coeffs = BTreeMap::new();
        for (v, c) in terms {
            let e = coeffs.entry(v).or_insert(0i8);
            *e += c;
            if *e == 0 {
                coeffs.remove(&v);
            }
        }
        if coeffs.is_empty() {
            let holds = if equality {
                rhs.is_zero()
            } else {
                !rhs.is_negative()
            };
            if holds {
                return;
            }
        }
        let row = Row::new(coeffs, rhs, family);
        if equality {
            self.eq.push(row)
        } else {
            self.le.push(row)
        }
    }
}

/// Builds the constraint system of the LR polytope for `c_{α,β}^γ` at rank
/// `n`. Rows come in the order shape, content, tableau, lattice-word, each
/// family in lexicographic `(i, j)` order.
pub fn build_lr_system(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    n: usize,
) -> Result<ConstraintSystem> {
    let to_int = |p: &Partition| -> Result<Vec<BigInt>> {
        Ok(p.padded(n)?.into_iter().map(BigInt::from).collect())
    };
    let (a, b, g) = (to_int(alpha)?, to_int(beta)?, to_int(gamma)?);
    // 1-based helper: r^i_j exists iff 1 <= j <= i
    let var = |i: usize, j: usize| (j <= i).then(|| VariableIndex::new(i, j).position());

    let mut sys = ConstraintSystem::new(VariableIndex::all(n));

    for i in 1..=n {
        let terms = (1..=i).filter_map(|j| var(i, j)).map(|v| (v, 1)).collect();
        sys.push(terms, &g[i - 1] - &a[i - 1], Family::Shape { i }, true);
    }
    for j in 1..=n {
        let terms = (j..=n).filter_map(|i| var(i, j)).map(|v| (v, 1)).collect();
        sys.push(terms, b[j - 1].clone(), Family::Content { j }, true);
    }
    // letters <= j in row i+1 sit strictly left of letters >= j in row i
    for i in 1..n {
        for j in 1..=n {
            let mut terms: Vec<(usize, i8)> = (1..=j)
                .filter_map(|k| var(i + 1, k))
                .map(|v| (v, 1))
                .collect();
            terms.extend((1..j).filter_map(|k| var(i, k)).map(|v| (v, -1)));
            sys.push(terms, &a[i - 1] - &a[i], Family::Tableau { i, j }, false);
        }
    }
    // reading rows 1..=i right to left, the j's never outnumber the (j-1)'s
    for i in 1..=n {
        for j in 2..=n {
            let mut terms: Vec<(usize, i8)> =
                (1..=i).filter_map(|k| var(k, j)).map(|v| (v, 1)).collect();
            terms.extend((1..i).filter_map(|k| var(k, j - 1)).map(|v| (v, -1)));
            sys.push(terms, BigInt::zero(), Family::Lattice { i, j }, false);
        }
    }
    Ok(sys)
}

/// Cheap necessary conditions for `c_{α,β}^γ > 0`: `|α| + |β| = |γ|`,
/// `α ⊆ γ` and `height(γ) <= height(α) + height(β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    SizeMismatch,
    NotContained,
    HeightTooLarge,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SizeMismatch => "size mismatch",
            Self::NotContained => "alpha not contained in gamma",
            Self::HeightTooLarge => "gamma taller than alpha and beta combined",
        })
    }
}

pub fn trivial_obstruction(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Option<Obstruction> {
    if alpha.size() + beta.size() != gamma.size() {
        Some(Obstruction::SizeMismatch)
    } else if !alpha.is_contained_in(gamma) {
        Some(Obstruction::NotContained)
    } else if gamma.height() > alpha.height() + beta.height() {
        Some(Obstruction::HeightTooLarge)
    } else {
        None
    }
}

/// `false` certifies `c_{α,β}^γ = 0`; `true` is inconclusive.
pub fn check_trivial_necessary(alpha: &Partition, beta: &Partition, gamma: &Partition) -> bool {
    trivial_obstruction(alpha, beta, gamma).is_none()
}

/// A point with exact rational coordinates, keyed by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPoint {
    pub coords: BTreeMap<VariableIndex, BigRational>,
}

impl RationalPoint {
    pub fn from_values(vars: &[VariableIndex], values: Vec<BigRational>) -> Self {
        Self {
            coords: vars.iter().copied().zip(values).collect(),
        }
    }

    pub fn get(&self, v: VariableIndex) -> Option<&BigRational> {
        self.coords.get(&v)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.values().all(|x| x.is_integer())
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(
            self.coords
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string())),
        )
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let coords = raw
            .iter()
            .map(|(k, v)| {
                let k = VariableIndex::from_str(k).map_err(D::Error::custom)?;
                let v = BigRational::from_str(v)
                    .map_err(|_| D::Error::custom(format!("bad rational {v:?}")))?;
                Ok((k, v))
            })
            .collect::<std::result::Result<_, D::Error>>()?;
        Ok(Self { coords })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub family: Family,
    pub equality: bool,
    /// `row · x - rhs`: must be zero for equalities, `<= 0` for inequalities.
    pub residual: BigRational,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatisfactionReport {
    pub rows: Vec<RowCheck>,
    pub negative_coords: Vec<VariableIndex>,
    pub satisfied: bool,
}

impl SatisfactionReport {
    pub fn violations(&self) -> impl Iterator<Item = &RowCheck> {
        self.rows.iter().filter(|r| !r.satisfied)
    }
}

/// Checks `pt` against every row of `sys` and against nonnegativity.
pub fn evaluate_point(sys: &ConstraintSystem, pt: &RationalPoint) -> Result<SatisfactionReport> {
    let x = sys
        .vars
        .iter()
        .map(|v| pt.get(*v).cloned())
        .collect::<Option<Vec<_>>>()
        .filter(|_| pt.len() == sys.num_vars)
        .ok_or(Error::DimensionMismatch {
            expected: sys.num_vars,
            found: pt.len(),
        })?;

    let check = |row: &Row, equality: bool| {
        let residual = row.residual(&x);
        let satisfied = if equality {
            residual.is_zero()
        } else {
            !residual.is_positive()
        };
        RowCheck {
            family: row.family,
            equality,
            residual,
            satisfied,
        }
    };
    let rows: Vec<RowCheck> = sys
        .eq
        .iter()
        .map(|r| check(r, true))
        .chain(sys.le.iter().map(|r| check(r, false)))
        .collect();
    let negative_coords: Vec<VariableIndex> = sys
        .vars
        .iter()
        .zip(&x)
        .filter(|(_, v)| v.is_negative())
        .map(|(k, _)| *k)
        .collect();
    let satisfied = negative_coords.is_empty() && rows.iter().all(|r| r.satisfied);
    Ok(SatisfactionReport {
        rows,
        negative_coords,
        satisfied,
    })
}

/// Integer point of a system as a count vector, for callers holding
/// nonnegative integer counts in variable order.
pub fn point_from_counts(vars: &[VariableIndex], counts: &[BigUint]) -> RationalPoint {
    RationalPoint::from_values(
        vars,
        counts
            .iter()
            .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
            .collect(),
    )
}
