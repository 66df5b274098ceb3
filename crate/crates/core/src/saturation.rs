//! Deciding `c_{α,β}^γ > 0` by LP feasibility of the LR polytope.
//!
//! The polytope has an integer point (an LR tableau) exactly when it has a
//! rational point: a rational point becomes integral after scaling by some
//! `q`, which makes `c_{qα,qβ}^{qγ}` positive, and by Knutson-Tao saturation
//! `c_{α,β}^γ` is then positive too. So an exact feasibility check suffices
//! and no enumeration is needed on the decision path.
//!
//! Throughout, `c_{α,β}^γ` and `c_{α,β,γ}` name the same number: the
//! multiplicity of `V_γ` in `V_α ⊗ V_β`.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::lp::feasible;
use crate::oracle::{count_lr_tableaux, integral_witness, LRFilling, DEFAULT_BUDGET};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::polytope::{
    build_lr_system, evaluate_point, trivial_obstruction, Obstruction, RationalPoint,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    TrivialReject,
    LpFeasible,
    LpInfeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub positive: bool,
    pub route: Route,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    pub rank: usize,
    pub rational_witness: Option<RationalPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral_witness: Option<LRFilling>,
    pub pivot_count: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    pub rank: Option<usize>,
    /// Also search for an LR tableau (exponential; off by default).
    pub integral_witness: bool,
    pub budget: u64,
}

impl Default for DecideOptions {
    fn default() -> Self {
        Self {
            rank: None,
            integral_witness: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// The rank to work at: `rank` if given (checked against all heights),
/// otherwise the largest height, and at least 1.
pub fn resolve_rank(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    rank: Option<usize>,
) -> Result<usize> {
    match rank {
        Some(n) => {
            for p in [alpha, beta, gamma] {
                p.check_rank(n)?;
            }
            Ok(n)
        }
        None => Ok(alpha.height().max(beta.height()).max(gamma.height()).max(1)),
    }
}

pub fn decide_positive(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    rank: Option<usize>,
) -> Result<Decision> {
    decide_with(
        alpha,
        beta,
        gamma,
        &DecideOptions {
            rank,
            ..Default::default()
        },
    )
}

pub fn decide_with(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    opts: &DecideOptions,
) -> Result<Decision> {
    let start = Instant::now();
    let n = resolve_rank(alpha, beta, gamma, opts.rank)?;
    if let Some(obstruction) = trivial_obstruction(alpha, beta, gamma) {
        return Ok(Decision {
            positive: false,
            route: Route::TrivialReject,
            obstruction: Some(obstruction),
            rank: n,
            rational_witness: None,
            integral_witness: None,
            pivot_count: 0,
            elapsed: start.elapsed(),
        });
    }
    let sys = build_lr_system(alpha, beta, gamma, n)?;
    let lp = feasible(&sys);
    let positive = lp.is_feasible();
    let integral = if positive && opts.integral_witness {
        integral_witness(alpha, beta, gamma, n, opts.budget)?
    } else {
        None
    };
    Ok(Decision {
        positive,
        route: if positive {
            Route::LpFeasible
        } else {
            Route::LpInfeasible
        },
        obstruction: None,
        rank: n,
        rational_witness: lp.witness,
        integral_witness: integral,
        pivot_count: lp.pivot_count,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum OracleOutcome {
    Count {
        #[serde(with = "crate::bigstr")]
        count: BigUint,
    },
    BudgetExceeded,
    TooLarge,
}

impl OracleOutcome {
    fn run(
        alpha: &Partition,
        beta: &Partition,
        gamma: &Partition,
        n: usize,
        budget: u64,
    ) -> Result<Self> {
        match count_lr_tableaux(alpha, beta, gamma, n, budget) {
            Ok(count) => Ok(Self::Count { count }),
            Err(Error::BudgetExceeded { .. }) => Ok(Self::BudgetExceeded),
            Err(Error::TooLarge(_)) => Ok(Self::TooLarge),
            Err(e) => Err(e),
        }
    }

    pub fn positive(&self) -> Option<bool> {
        match self {
            Self::Count { count } => Some(!count.is_zero()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeEntry {
    #[serde(with = "crate::bigstr")]
    pub q: BigUint,
    pub positive: bool,
    pub route: Route,
    pub oracle: OracleOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub rank: usize,
    pub entries: Vec<ProbeEntry>,
    /// Some verdict differs across `q`, or from a completed oracle count.
    pub disagreement: bool,
}

/// Decides `(qα, qβ, qγ)` for `q = 1` and every `q` in `qs`, and counts
/// tableaux where the budget allows.
pub fn saturation_probe(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    rank: Option<usize>,
    qs: &[BigUint],
    budget: u64,
) -> Result<ProbeReport> {
    let n = resolve_rank(alpha, beta, gamma, rank)?;
    let mut scales = vec![BigUint::one()];
    for q in qs {
        if q.is_zero() {
            return Err(Error::NonpositiveScale);
        }
        if !scales.contains(q) {
            scales.push(q.clone());
        }
    }
    let mut entries = Vec::with_capacity(scales.len());
    for q in scales {
        let (a, b, g) = (alpha.scale(&q)?, beta.scale(&q)?, gamma.scale(&q)?);
        let d = decide_positive(&a, &b, &g, Some(n))?;
        let oracle = OracleOutcome::run(&a, &b, &g, n, budget)?;
        entries.push(ProbeEntry {
            q,
            positive: d.positive,
            route: d.route,
            oracle,
        });
    }
    let first = entries[0].positive;
    let disagreement = entries
        .iter()
        .any(|e| e.positive != first || e.oracle.positive().is_some_and(|o| o != e.positive));
    Ok(ProbeReport {
        rank: n,
        entries,
        disagreement,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_size: u64,
    pub max_n: usize,
    pub qs: Vec<u64>,
    pub budget: u64,
    pub execution: Execution,
}

impl SweepConfig {
    pub fn new(max_size: u64, max_n: usize, qs: Vec<u64>) -> Self {
        Self {
            max_size,
            max_n,
            qs,
            budget: DEFAULT_BUDGET,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DisagreementKind {
    /// LP verdict differs from the tableau count.
    LpVsOracle,
    /// LP verdict changes under scaling.
    Saturation,
    RationalWitness,
    IntegralWitness,
    /// Trivially rejected, yet the LP is feasible.
    TrivialRejectFeasible,
    /// `Σ c·dim V_γ ≠ dim V_α · dim V_β`.
    DimensionIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub kind: DisagreementKind,
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Option<Partition>,
    pub rank: usize,
    pub q: Option<u64>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub instances: u64,
    pub lp_positive: u64,
    pub lp_negative: u64,
    pub trivial_rejects: u64,
    pub oracle_checked: u64,
    pub saturation_checked: u64,
    pub rational_witnesses_checked: u64,
    pub integral_witnesses_checked: u64,
    pub decompositions_checked: u64,
    pub disagreements: Vec<Disagreement>,
    pub budget_failures: u64,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }

    fn absorb(&mut self, other: SweepReport) {
        self.instances += other.instances;
        self.lp_positive += other.lp_positive;
        self.lp_negative += other.lp_negative;
        self.trivial_rejects += other.trivial_rejects;
        self.oracle_checked += other.oracle_checked;
        self.saturation_checked += other.saturation_checked;
        self.rational_witnesses_checked += other.rational_witnesses_checked;
        self.integral_witnesses_checked += other.integral_witnesses_checked;
        self.decompositions_checked += other.decompositions_checked;
        self.disagreements.extend(other.disagreements);
        self.budget_failures += other.budget_failures;
    }
}

/// Runs every triple with `|α|, |β| <= max_size`, `|γ| = |α| + |β|` and all
/// heights `<= max_n` at rank `max_n`, comparing the LP route against the
/// tableau oracle, checking witnesses, the decomposition dimension count,
/// and stability of the verdict under each scale in `qs`.
pub fn sweep(config: &SweepConfig) -> SweepReport {
    let shapes = partitions_up_to(config.max_size, config.max_n);
    let pairs: Vec<(&Partition, &Partition)> = shapes
        .iter()
        .flat_map(|a| shapes.iter().map(move |b| (a, b)))
        .collect();
    let parts = exec::map(&pairs, config.execution, |(a, b)| sweep_pair(a, b, config));
    let mut report = SweepReport::default();
    for part in parts {
        report.absorb(part);
    }
    report
}

fn sweep_pair(alpha: &Partition, beta: &Partition, config: &SweepConfig) -> SweepReport {
    let n = config.max_n;
    let mut rep = SweepReport::default();
    let flag = |kind, gamma: Option<&Partition>, q, detail: String| Disagreement {
        kind,
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.cloned(),
        rank: n,
        q,
        detail,
    };
    let size: u64 = (alpha.size() + beta.size())
        .try_into()
        .expect("desk-scale sweep sizes fit in u64");
    let mut dimension_sum = Some(BigUint::zero());

    for gamma in partitions_of(size, n) {
        rep.instances += 1;
        let d = decide_positive(alpha, beta, &gamma, Some(n)).expect("heights fit the sweep rank");
        if d.positive {
            rep.lp_positive += 1;
        } else {
            rep.lp_negative += 1;
        }
        let sys = build_lr_system(alpha, beta, &gamma, n).expect("heights fit the sweep rank");

        if d.route == Route::TrivialReject {
            rep.trivial_rejects += 1;
            if feasible(&sys).is_feasible() {
                rep.disagreements.push(flag(
                    DisagreementKind::TrivialRejectFeasible,
                    Some(&gamma),
                    None,
                    format!("{:?}", d.obstruction),
                ));
            }
        }

        if let Some(w) = &d.rational_witness {
            rep.rational_witnesses_checked += 1;
            let ok = evaluate_point(&sys, w)
                .map(|r| r.satisfied)
                .unwrap_or(false);
            if !ok {
                rep.disagreements.push(flag(
                    DisagreementKind::RationalWitness,
                    Some(&gamma),
                    None,
                    render_point(w),
                ));
            }
        }

        match count_lr_tableaux(alpha, beta, &gamma, n, config.budget) {
            Ok(count) => {
                rep.oracle_checked += 1;
                if let Some(sum) = dimension_sum.as_mut() {
                    *sum += &count * gamma.weyl_dimension(n).expect("height fits");
                }
                if (!count.is_zero()) != d.positive {
                    rep.disagreements.push(flag(
                        DisagreementKind::LpVsOracle,
                        Some(&gamma),
                        None,
                        format!("lp positive = {}, oracle count = {count}", d.positive),
                    ));
                }
                if !count.is_zero() {
                    check_integral_witness(alpha, beta, &gamma, n, config.budget, &mut rep, &flag);
                }
            }
            Err(_) => {
                rep.budget_failures += 1;
                dimension_sum = None;
            }
        }

        for &q in &config.qs {
            let qb = BigUint::from(q);
            let scaled = (alpha.scale(&qb), beta.scale(&qb), gamma.scale(&qb));
            let verdict = match scaled {
                (Ok(a), Ok(b), Ok(g)) => decide_positive(&a, &b, &g, Some(n)).map(|s| s.positive),
                _ => Err(Error::NonpositiveScale),
            };
            rep.saturation_checked += 1;
            match verdict {
                Ok(v) if v == d.positive => {}
                other => rep.disagreements.push(flag(
                    DisagreementKind::Saturation,
                    Some(&gamma),
                    Some(q),
                    format!("q = 1: {}, q = {q}: {other:?}", d.positive),
                )),
            }
        }
    }

    if let Some(sum) = dimension_sum {
        rep.decompositions_checked += 1;
        let product = alpha.weyl_dimension(n).expect("height fits")
            * beta.weyl_dimension(n).expect("height fits");
        if sum != product {
            rep.disagreements.push(flag(
                DisagreementKind::DimensionIdentity,
                None,
                None,
                format!("sum of c*dim = {sum}, dim*dim = {product}"),
            ));
        }
    }
    rep
}

fn check_integral_witness<F>(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    n: usize,
    budget: u64,
    rep: &mut SweepReport,
    flag: &F,
) where
    F: Fn(DisagreementKind, Option<&Partition>, Option<u64>, String) -> Disagreement,
{
    let w = match integral_witness(alpha, beta, gamma, n, budget) {
        Ok(Some(w)) => w,
        Ok(None) => {
            rep.disagreements.push(flag(
                DisagreementKind::IntegralWitness,
                Some(gamma),
                None,
                "positive count but no witness".into(),
            ));
            return;
        }
        Err(_) => {
            rep.budget_failures += 1;
            return;
        }
    };
    rep.integral_witnesses_checked += 1;
    let content: Option<Vec<usize>> = beta
        .to_u64s()
        .ok()
        .map(|v| v.into_iter().map(|x| x as usize).collect());
    let word_ok = match (w.decode(alpha), content) {
        (Ok(t), Some(c)) => t.is_lr_tableau(&c),
        _ => false,
    };
    let sys = build_lr_system(alpha, beta, gamma, n).expect("heights fit");
    let point_ok = evaluate_point(&sys, &w.to_point())
        .map(|r| r.satisfied)
        .unwrap_or(false);
    if !(word_ok && point_ok && w.total() == beta.size()) {
        rep.disagreements.push(flag(
            DisagreementKind::IntegralWitness,
            Some(gamma),
            None,
            format!("word-level valid = {word_ok}, satisfies system = {point_ok}, filling = {w:?}"),
        ));
    }
}

fn render_point(w: &RationalPoint) -> String {
    w.coords
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}
