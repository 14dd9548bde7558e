//! Guarded claims about corona products, checked against exact solver values.
//!
//! Each claim is evaluated on one `(G, H)` instance: the guard is tested
//! first, and only a satisfied guard leads to solver calls. Solver errors
//! (budget, size limits) make a result inconclusive, never pass or fail.

mod claims;
mod report;
mod sweep;

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::time::Instant;

use num_rational::Ratio;

pub use claims::{parse_claim_list, ClaimId, Relation};
pub use report::{ReportRow, Summary};
pub use sweep::{default_grid, parse_grid, run_sweep, DEFAULT_MAX_CORONA_ORDER};

use crate::construct::{
    construct_from_resolving_set, construct_path_empty_partition, construct_star_partition,
};
use crate::corona::{corona, CoronaGraph};
use crate::error::Result;
use crate::graph::{FamilySpec, Graph, HFeatures};
use crate::resolve::{induce_copy_partition, is_resolving_partition, Partition, VertexSet};
use crate::solver::oracle::for_each_resolving_partition;
use crate::solver::{metric_dimension, partition_dimension, SolveResult, SolverConfig};

/// Exact claim quantity; integral except for the right-hand sides of C2 and C3.
pub type Value = Ratio<i64>;

/// Largest corona order on which C12 enumerates every partition.
pub const C12_MAX_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// A labelled `(G, H)` pair.
#[derive(Clone, Debug)]
pub struct Instance {
    pub g_label: String,
    pub h_label: String,
    pub g: Graph,
    pub h: Graph,
}

impl Instance {
    pub fn new(g_label: impl Into<String>, g: Graph, h_label: impl Into<String>, h: Graph) -> Self {
        Instance {
            g_label: g_label.into(),
            h_label: h_label.into(),
            g,
            h,
        }
    }

    pub fn from_specs(g: &FamilySpec, h: &FamilySpec) -> Result<Self> {
        Ok(Instance::new(
            g.to_string(),
            g.build()?,
            h.to_string(),
            h.build()?,
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: ClaimId,
    pub g_spec: String,
    pub h_spec: String,
    pub guard_satisfied: bool,
    pub status: Status,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub witness: Option<String>,
    pub millis: u64,
    pub note: Option<String>,
}

impl ClaimResult {
    /// Defined only for evaluated (pass or fail) results.
    pub fn pass(&self) -> Option<bool> {
        match self.status {
            Status::Pass => Some(true),
            Status::Fail => Some(false),
            _ => None,
        }
    }

    pub fn is_guarded_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HarnessConfig {
    pub solver: SolverConfig,
}

/// Evaluates one claim on one instance.
pub fn evaluate_claim(id: ClaimId, instance: &Instance, config: &HarnessConfig) -> ClaimResult {
    let solver = SolverConfig {
        threads: None,
        ..config.solver
    };
    config
        .solver
        .run(|| Evaluator::new(instance, solver).evaluate(id))
}

/// Evaluates several claims on one instance, sharing solver results.
pub fn evaluate_claims(
    ids: &[ClaimId],
    instance: &Instance,
    config: &HarnessConfig,
) -> Vec<ClaimResult> {
    let solver = SolverConfig {
        threads: None,
        ..config.solver
    };
    config.solver.run(|| {
        let ev = Evaluator::new(instance, solver);
        ids.iter().map(|&id| ev.evaluate(id)).collect()
    })
}

/// Outcome of a claim whose guard held.
struct Checked {
    lhs: Value,
    rhs: Value,
    /// Set when the verdict is more than the relation between `lhs` and `rhs`.
    verdict: Option<bool>,
    witness: Option<String>,
    note: Option<String>,
}

impl Checked {
    fn new(lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Checked {
            lhs: lhs.into(),
            rhs: rhs.into(),
            verdict: None,
            witness: None,
            note: None,
        }
    }

    fn witness(mut self, w: impl ToString) -> Self {
        self.witness = Some(w.to_string());
        self
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }
}

enum Evaluated {
    Skipped(Option<String>),
    Checked(Checked),
}

fn skip() -> Result<Evaluated> {
    Ok(Evaluated::Skipped(None))
}

fn int(v: usize) -> Value {
    Value::from_integer(v as i64)
}

struct Evaluator<'a> {
    inst: &'a Instance,
    solver: SolverConfig,
    features: HFeatures,
    n1: usize,
    n2: usize,
    corona: OnceCell<Result<CoronaGraph>>,
    pd_c: OnceCell<Result<SolveResult<Partition>>>,
    dim_c: OnceCell<Result<SolveResult<VertexSet>>>,
    pd_g: OnceCell<Result<SolveResult<Partition>>>,
    dim_g: OnceCell<Result<SolveResult<VertexSet>>>,
    pd_h: OnceCell<Result<SolveResult<Partition>>>,
    dim_h: OnceCell<Result<SolveResult<VertexSet>>>,
}

fn cached<T>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

impl<'a> Evaluator<'a> {
    fn new(inst: &'a Instance, solver: SolverConfig) -> Self {
        Evaluator {
            features: inst.h.features(),
            n1: inst.g.order(),
            n2: inst.h.order(),
            inst,
            solver,
            corona: OnceCell::new(),
            pd_c: OnceCell::new(),
            dim_c: OnceCell::new(),
            pd_g: OnceCell::new(),
            dim_g: OnceCell::new(),
            pd_h: OnceCell::new(),
            dim_h: OnceCell::new(),
        }
    }

    fn corona(&self) -> Result<&CoronaGraph> {
        cached(&self.corona, || corona(&self.inst.g, &self.inst.h))
    }

    fn pd_c(&self) -> Result<&SolveResult<Partition>> {
        cached(&self.pd_c, || {
            partition_dimension(&self.corona()?.graph, &self.solver)
        })
    }

    fn dim_c(&self) -> Result<&SolveResult<VertexSet>> {
        cached(&self.dim_c, || {
            metric_dimension(&self.corona()?.graph, &self.solver)
        })
    }

    fn pd_g(&self) -> Result<&SolveResult<Partition>> {
        cached(&self.pd_g, || {
            partition_dimension(&self.inst.g, &self.solver)
        })
    }

    fn dim_g(&self) -> Result<&SolveResult<VertexSet>> {
        cached(&self.dim_g, || metric_dimension(&self.inst.g, &self.solver))
    }

    fn pd_h(&self) -> Result<&SolveResult<Partition>> {
        cached(&self.pd_h, || {
            partition_dimension(&self.inst.h, &self.solver)
        })
    }

    fn dim_h(&self) -> Result<&SolveResult<VertexSet>> {
        cached(&self.dim_h, || metric_dimension(&self.inst.h, &self.solver))
    }

    fn g_connected(&self) -> bool {
        self.inst.g.is_connected()
    }

    fn h_connected(&self) -> bool {
        self.inst.h.is_connected()
    }

    fn evaluate(&self, id: ClaimId) -> ClaimResult {
        let start = Instant::now();
        let outcome = self.dispatch(id);
        let millis = start.elapsed().as_millis() as u64;
        let mut result = ClaimResult {
            claim: id,
            g_spec: self.inst.g_label.clone(),
            h_spec: self.inst.h_label.clone(),
            guard_satisfied: false,
            status: Status::Skipped,
            lhs: None,
            rhs: None,
            witness: None,
            millis,
            note: None,
        };
        match outcome {
            Ok(Evaluated::Skipped(note)) => result.note = note,
            Ok(Evaluated::Checked(c)) => {
                let holds = match id.relation() {
                    Relation::Le => c.lhs <= c.rhs,
                    Relation::Ge => c.lhs >= c.rhs,
                    Relation::Eq => c.lhs == c.rhs,
                };
                let pass = c.verdict.unwrap_or(holds);
                result.guard_satisfied = true;
                result.status = if pass { Status::Pass } else { Status::Fail };
                result.lhs = Some(c.lhs);
                result.rhs = Some(c.rhs);
                result.witness = c.witness;
                result.note = c.note;
            }
            Err(e) => {
                result.guard_satisfied = true;
                result.status = Status::Inconclusive;
                result.note = Some(e.to_string());
            }
        }
        result
    }

    fn dispatch(&self, id: ClaimId) -> Result<Evaluated> {
        use ClaimId::*;
        if !self.g_connected() {
            return Ok(Evaluated::Skipped(Some("G is disconnected".into())));
        }
        match id {
            C1 => self.c1(),
            C2 => self.c2(),
            C3 => self.c3(),
            C4 => self.c4(),
            C5 => self.c5(),
            C6 => self.c6(),
            C7 => self.c7(),
            C8 => self.c8(),
            C9 => self.c9(),
            C10 => self.c10(),
            C11 => self.c11(),
            C12 => self.c12(),
            C13 => self.c13(),
            C14 => self.c14(),
            C15 => self.c15(),
            C16 => self.c16(),
            C17 => self.c17(),
            C18 => self.c18(),
        }
    }

    fn c1(&self) -> Result<Evaluated> {
        let pd = self.pd_c()?;
        let dim = self.dim_c()?;
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(dim.value + 1)).witness(&pd.witness),
        ))
    }

    fn c2(&self) -> Result<Evaluated> {
        if self.n1 < 2 {
            return skip();
        }
        let pd = self.pd_c()?;
        let dim = self.dim_c()?;
        let pd_g = self.pd_g()?;
        let rhs = Value::new(dim.value as i64, self.n1 as i64) + int(pd_g.value + 1);
        let mut checked = Checked::new(int(pd.value), rhs).witness(&pd.witness);
        let cg = self.corona()?;
        match construct_from_resolving_set(cg, &dim.witness, &pd_g.witness) {
            Ok(out) => checked = checked.note(format!("constructed {} blocks", out.size)),
            Err(e) => checked = checked.note(format!("construction unavailable: {e}")),
        }
        Ok(Evaluated::Checked(checked))
    }

    fn c3(&self) -> Result<Evaluated> {
        if !(self.h_connected() && self.n1 >= 2 && self.n2 >= 2) {
            return skip();
        }
        let dim = self.dim_c()?;
        let pd_g = self.pd_g()?;
        let rhs = Value::new((self.n1 * pd_g.value) as i64, (self.n1 - 1) as i64);
        let excluded = self.inst.g.is_complete() && self.inst.h.is_path() && self.n2 <= 3;
        if excluded {
            let holds = int(dim.value) >= rhs;
            return Ok(Evaluated::Skipped(Some(format!(
                "excluded instance: dim={} bound={} holds={holds}",
                dim.value,
                show(&rhs)
            ))));
        }
        Ok(Evaluated::Checked(
            Checked::new(int(dim.value), rhs).witness(&dim.witness),
        ))
    }

    fn c4(&self) -> Result<Evaluated> {
        if !(self.h_connected() && self.n1 >= 2 && self.n2 >= 2) {
            return skip();
        }
        let dim = self.dim_c()?;
        let dim_h = self.dim_h()?;
        Ok(Evaluated::Checked(
            Checked::new(int(dim.value), int(self.n1 * dim_h.value)).witness(&dim.witness),
        ))
    }

    fn c5(&self) -> Result<Evaluated> {
        if !(self.n1 >= 2 && self.n2 >= 2) {
            return skip();
        }
        let f = self.features;
        let dim = self.dim_c()?;
        let rhs = c5_bound(self.n1, self.n2, f.alpha_ge2, f.beta);
        let total = c5_bound(self.n1, self.n2, f.component_count, f.beta);
        let mut note = format!(
            "total-component reading: rhs={total} holds={}",
            dim.value as i64 <= total
        );
        if total != rhs {
            note.push_str("; readings disagree");
        }
        Ok(Evaluated::Checked(
            Checked::new(int(dim.value), Value::from_integer(rhs))
                .witness(&dim.witness)
                .note(note),
        ))
    }

    fn c6(&self) -> Result<Evaluated> {
        if !(self.n1 >= 2 && self.n2 >= 2) {
            return skip();
        }
        let f = self.features;
        let pd = self.pd_c()?;
        let pd_g = self.pd_g()?.value as i64;
        let (n2, alpha) = (self.n2 as i64, f.alpha_ge2 as i64);
        let rhs = match (f.alpha_ge2, f.beta) {
            (0, _) => pd_g + n2,
            (_, 0) => pd_g + n2 - alpha + 1,
            _ => pd_g + n2 - alpha,
        };
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), Value::from_integer(rhs)).witness(&pd.witness),
        ))
    }

    fn small_diameter_guard(&self) -> bool {
        self.h_connected()
            && self.n1 >= 2
            && self.n2 >= 2
            && self.features.diameter.is_some_and(|d| d <= 2)
    }

    fn c7(&self) -> Result<Evaluated> {
        if !self.small_diameter_guard() {
            return skip();
        }
        let pd = self.pd_c()?;
        let rhs = self.pd_g()?.value + self.pd_h()?.value;
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(rhs)).witness(&pd.witness),
        ))
    }

    fn c8(&self) -> Result<Evaluated> {
        if !self.small_diameter_guard() {
            return skip();
        }
        let pd = self.pd_c()?;
        let rhs = self.dim_g()?.value + self.dim_h()?.value + 2;
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(rhs)).witness(&pd.witness),
        ))
    }

    fn c9(&self) -> Result<Evaluated> {
        if !(self.h_connected() && self.n2 >= 2) {
            return skip();
        }
        let pd = self.pd_c()?;
        let pd_h = self.pd_h()?;
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(pd_h.value)).witness(&pd.witness),
        ))
    }

    fn c10(&self) -> Result<Evaluated> {
        if !self.h_connected() {
            return skip();
        }
        let cg = self.corona()?;
        let pd = self.pd_c()?;
        let dm_h = self.inst.h.distances();
        let mut failing = Vec::new();
        for i in 0..self.n1 {
            let induced = induce_copy_partition(cg, &pd.witness, i)?;
            if !is_resolving_partition(&dm_h, &induced) {
                failing.push(format!("{i}:{induced}"));
            }
        }
        let mut checked =
            Checked::new(int(self.n1 - failing.len()), int(self.n1)).witness(&pd.witness);
        if !failing.is_empty() {
            checked = checked.note(format!("non-resolving copies {}", failing.join(" ")));
        }
        Ok(Evaluated::Checked(checked))
    }

    fn c11(&self) -> Result<Evaluated> {
        if !(self.n1 >= 2 && self.n2 >= 2) {
            return skip();
        }
        let cg = self.corona()?;
        let dim = self.dim_c()?;
        let s = &dim.witness;
        let split: Vec<usize> = (0..self.n1)
            .map(|i| cg.copy(i).filter(|&v| s.contains(v)).count())
            .collect();
        let hit = split.iter().filter(|&&k| k > 0).count();
        let centres = cg.centers().filter(|&v| s.contains(v)).count();
        let mut sorted = split.clone();
        sorted.sort_unstable();
        let equal = sorted.first() == sorted.last();
        let mut checked = Checked::new(int(hit), int(self.n1))
            .witness(s)
            .note(format!(
                "centres_in_set={centres} split={sorted:?}{}",
                if equal { "" } else { " unequal" }
            ));
        checked.verdict = Some(hit == self.n1 && centres == 0);
        Ok(Evaluated::Checked(checked))
    }

    fn c12(&self) -> Result<Evaluated> {
        if !self.inst.h.is_complete() {
            return skip();
        }
        let order = self.n1 * (self.n2 + 1);
        if order > C12_MAX_ORDER {
            return Ok(Evaluated::Skipped(Some(format!(
                "exhaustive enumeration limited to corona order <= {C12_MAX_ORDER}"
            ))));
        }
        let cg = self.corona()?;
        let dm = cg.graph.distances();
        let mut worst: Option<(u32, Partition)> = None;
        let count = for_each_resolving_partition(&dm, self.n2 + 1, |p| {
            let far = cg
                .graph
                .vertices()
                .flat_map(|v| p.blocks().iter().map(move |b| (v, b)))
                .map(|(v, b)| dm.to_set(v, b))
                .max()
                .unwrap_or(0);
            if worst.as_ref().is_none_or(|(d, _)| far > *d) {
                worst = Some((far, p.clone()));
            }
        });
        let lhs = worst.as_ref().map_or(0, |(d, _)| *d as usize);
        let mut checked =
            Checked::new(int(lhs), int(3)).note(format!("resolving partitions={count}"));
        if let Some((_, p)) = worst {
            checked = checked.witness(p);
        }
        Ok(Evaluated::Checked(checked))
    }

    fn c13(&self) -> Result<Evaluated> {
        let c = self.features.c;
        if !(c >= 1 && self.n1 > 2 * c + 1 && 2 * c + 1 >= 5) {
            return skip();
        }
        let pd = self.pd_c()?;
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(c + 2)).witness(&pd.witness),
        ))
    }

    fn c14(&self) -> Result<Evaluated> {
        let beta = self.features.beta;
        if !(self.n1 >= 2 && self.n1 > beta && beta >= 2) {
            return skip();
        }
        let pd = self.pd_c()?;
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(beta + 1)).witness(&pd.witness),
        ))
    }

    fn c15(&self) -> Result<Evaluated> {
        let (n1, n2) = (self.n1, self.n2);
        if !(self.inst.g.is_path()
            && self.inst.h.is_complete()
            && n1 > 2 * n2 + 1
            && 2 * n2 + 1 >= 5)
        {
            return skip();
        }
        let pd = self.pd_c()?;
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(n2 + 2)).witness(&pd.witness),
        ))
    }

    fn c16(&self) -> Result<Evaluated> {
        let (n1, n2) = (self.n1, self.n2);
        if !(self.inst.g.is_path() && self.inst.h.edge_count() == 0 && n1 >= n2 && n2 >= 2) {
            return skip();
        }
        let pd = self.pd_c()?;
        let note = match construct_path_empty_partition(n1, n2) {
            Ok((_, out)) => format!("construction verified with {} blocks", out.size),
            Err(e) => format!("construction unavailable: {e}"),
        };
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(n2 + 1))
                .witness(&pd.witness)
                .note(note),
        ))
    }

    fn c17(&self) -> Result<Evaluated> {
        let Some((_, leaves)) = self.inst.h.star_shape() else {
            return skip();
        };
        let (n, n1) = (leaves.len(), self.n1);
        if !((n >= 2 * n1 && 2 * n1 >= 4) || (n > 2 * n1 && n1 == 1)) {
            return skip();
        }
        let pd = self.pd_c()?;
        let note = match construct_star_partition(self.corona()?) {
            Ok(out) => format!("construction verified with {} blocks", out.size),
            Err(e) => format!("construction unavailable: {e}"),
        };
        Ok(Evaluated::Checked(
            Checked::new(int(pd.value), int(n))
                .witness(&pd.witness)
                .note(note),
        ))
    }

    fn c18(&self) -> Result<Evaluated> {
        let Some((_, leaves)) = self.inst.h.star_shape() else {
            return skip();
        };
        if leaves.len() < 2 {
            return skip();
        }
        let pd_h = self.pd_h()?;
        Ok(Evaluated::Checked(
            Checked::new(int(pd_h.value), int(leaves.len())).witness(&pd_h.witness),
        ))
    }
}

fn c5_bound(n1: usize, n2: usize, alpha: usize, beta: usize) -> i64 {
    let (n1, n2, alpha) = (n1 as i64, n2 as i64, alpha as i64);
    match (alpha, beta) {
        (0, _) => n1 * (n2 - 1),
        (_, 0) => n1 * (n2 - alpha),
        _ => n1 * (n2 - alpha - 1),
    }
}

/// `p/q`, or `p` for integers.
pub fn show(v: &Value) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Counts results by status.
pub fn tally(results: &[ClaimResult]) -> BTreeMap<Status, usize> {
    let mut counts = BTreeMap::new();
    for r in results {
        *counts.entry(r.status).or_insert(0) += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: &str, g: &str, h: &str) -> ClaimResult {
        let inst = Instance::from_specs(&g.parse().unwrap(), &h.parse().unwrap()).unwrap();
        evaluate_claim(id.parse().unwrap(), &inst, &HarnessConfig::default())
    }

    #[test]
    fn equality_instance_of_c4() {
        let r = check("C4", "path:3", "complete:3");
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.lhs, Some(int(6)));
        assert_eq!(r.rhs, Some(int(6)));
    }

    #[test]
    fn c16_on_path_empty() {
        let r = check("C16", "path:4", "empty:2");
        assert_eq!(r.status, Status::Pass);
        assert_eq!((r.lhs, r.rhs), (Some(int(3)), Some(int(3))));
    }

    #[test]
    fn c3_excludes_complete_with_short_path() {
        let r = check("C3", "complete:2", "path:2");
        assert_eq!(r.status, Status::Skipped);
        assert!(!r.guard_satisfied);
        assert!(r.note.as_deref().unwrap().starts_with("excluded instance"));
        assert_eq!(r.pass(), None);
    }

    #[test]
    fn c15_path_complete_instance() {
        let r = check("C15", "path:6", "complete:2");
        assert_eq!(r.status, Status::Pass);
        assert_eq!((r.lhs, r.rhs), (Some(int(4)), Some(int(4))));
    }

    #[test]
    fn c2_rational_bound() {
        let r = check("C2", "path:2", "path:3");
        assert!(r.guard_satisfied);
        // dim = 2, n1 = 2, pd(P_2) = 2
        assert_eq!(r.rhs, Some(int(4)));
        let r = check("C2", "path:3", "complete:2");
        // dim = 3, n1 = 3
        assert_eq!(r.rhs.map(|v| show(&v)), Some("4".into()));
    }

    #[test]
    fn c12_small_case() {
        let r = check("C12", "path:2", "complete:2");
        assert_eq!(r.status, Status::Pass);
        assert!(r.lhs.unwrap() <= int(3));
        assert_eq!(check("C12", "path:4", "complete:2").status, Status::Skipped);
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let inst = Instance::from_specs(&"path:6".parse().unwrap(), &"complete:2".parse().unwrap())
            .unwrap();
        let cfg = HarnessConfig {
            solver: SolverConfig::with_budget(5),
        };
        let r = evaluate_claim(ClaimId::C15, &inst, &cfg);
        assert_eq!(r.status, Status::Inconclusive);
        assert_eq!(r.pass(), None);
    }

    #[test]
    fn c11_records_split() {
        let r = check("C11", "path:3", "complete:2");
        assert_eq!(r.status, Status::Pass);
        assert!(r.note.unwrap().contains("split=[1, 1, 1]"));
    }

    #[test]
    fn c5_readings() {
        assert_eq!(c5_bound(3, 3, 0, 3), 6);
        assert_eq!(c5_bound(3, 3, 1, 0), 6);
        assert_eq!(c5_bound(3, 4, 1, 1), 6);
        let r = check("C5", "path:2", "empty:2");
        assert!(r.note.unwrap().contains("readings disagree"));
    }
}
