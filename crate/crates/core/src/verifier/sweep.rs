use std::collections::BTreeSet;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::registry::{self, Identity};
use super::{Status, Verdict, Witness};
use crate::dual_horadam::{self as dh, ClosedForms, DualOct};
use crate::error::{Error, Result};
use crate::horadam::{self, HoradamParams, Sequence};
use crate::scalar::{fmt_rat, parse_rat, rat, BigRat};
use crate::series::{TruncSeries, DEFAULT_ORDER};

/// Candidate values for each of `a, b, p, q`; the grid is their product.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamGrid {
    #[serde(serialize_with = "ser_rats", deserialize_with = "de_rats")]
    pub a: Vec<BigRat>,
    #[serde(serialize_with = "ser_rats", deserialize_with = "de_rats")]
    pub b: Vec<BigRat>,
    #[serde(serialize_with = "ser_rats", deserialize_with = "de_rats")]
    pub p: Vec<BigRat>,
    #[serde(serialize_with = "ser_rats", deserialize_with = "de_rats")]
    pub q: Vec<BigRat>,
}

fn ser_rats<S: Serializer>(v: &[BigRat], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_rat))
}

fn de_rats<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigRat>, D::Error> {
    Vec::<String>::deserialize(d)?
        .iter()
        .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
        .collect()
}

impl ParamGrid {
    pub fn single(params: &HoradamParams) -> Self {
        ParamGrid {
            a: vec![params.a.clone()],
            b: vec![params.b.clone()],
            p: vec![params.p.clone()],
            q: vec![params.q.clone()],
        }
    }

    /// `a, b ∈ {0, 1, 2, -1}`, `p, q ∈ {1, 2, 3, -1}`.
    pub fn default_grid() -> Self {
        let ints = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        ParamGrid {
            a: ints(&[0, 1, 2, -1]),
            b: ints(&[0, 1, 2, -1]),
            p: ints(&[1, 2, 3, -1]),
            q: ints(&[1, 2, 3, -1]),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty() || self.b.is_empty() || self.p.is_empty() || self.q.is_empty()
    }

    /// Distinct grid points in ascending `(a, b, p, q)` order.
    pub fn points(&self, exclude_degenerate: bool) -> Vec<HoradamParams> {
        let mut set = BTreeSet::new();
        for a in &self.a {
            for b in &self.b {
                for p in &self.p {
                    for q in &self.q {
                        let params = HoradamParams::new(a.clone(), b.clone(), p.clone(), q.clone());
                        if !(exclude_degenerate && params.discriminant().is_zero()) {
                            set.insert(params);
                        }
                    }
                }
            }
        }
        set.into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub grid: ParamGrid,
    pub n_min: u64,
    pub n_max: u64,
    /// `None` selects every registered identity.
    #[serde(default)]
    pub identities: Option<Vec<String>>,
    #[serde(default = "default_order")]
    pub series_order: usize,
    /// Drop `D = 0` points from the grid.
    #[serde(default = "default_true")]
    pub exclude_degenerate: bool,
}

fn default_order() -> usize {
    DEFAULT_ORDER
}

fn default_true() -> bool {
    true
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            grid: ParamGrid::default_grid(),
            n_min: 1,
            n_max: 16,
            identities: None,
            series_order: DEFAULT_ORDER,
            exclude_degenerate: true,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::InvalidConfig("parameter grid is empty".into()));
        }
        if self.n_min > self.n_max {
            return Err(Error::InvalidConfig(format!(
                "n range {}..{} is empty",
                self.n_min, self.n_max
            )));
        }
        if self.series_order == 0 {
            return Err(Error::InvalidConfig("series order must be at least 1".into()));
        }
        self.selected().map(|_| ())
    }

    /// The selected identities, in id order.
    pub fn selected(&self) -> Result<Vec<&'static Identity>> {
        match &self.identities {
            None => Ok(registry::builtin().iter().collect()),
            Some(ids) => {
                let mut out = ids.iter().map(|id| registry::find(id)).collect::<Result<Vec<_>>>()?;
                out.sort_by_key(|i| i.id);
                out.dedup_by_key(|i| i.id);
                Ok(out)
            }
        }
    }

    pub fn points(&self) -> Vec<HoradamParams> {
        self.grid.points(self.exclude_degenerate)
    }
}

/// Per-parameter caches for one sweep task. Never shared between tasks.
pub struct PointContext {
    seq: Sequence,
    order: usize,
    closed: Option<Result<ClosedForms>>,
    scalar_series: Option<TruncSeries<BigRat>>,
    dual_series: Option<TruncSeries<DualOct>>,
    fib_series: Option<TruncSeries<DualOct>>,
}

impl PointContext {
    pub fn new(params: &HoradamParams, series_order: usize) -> Self {
        PointContext {
            seq: Sequence::new(params),
            order: series_order,
            closed: None,
            scalar_series: None,
            dual_series: None,
            fib_series: None,
        }
    }

    pub fn params(&self) -> &HoradamParams {
        self.seq.params()
    }

    pub fn series_order(&self) -> usize {
        self.order
    }

    pub fn seq(&mut self) -> &mut Sequence {
        &mut self.seq
    }

    pub fn closed(&mut self) -> Result<&ClosedForms> {
        let params = self.seq.params();
        self.closed
            .get_or_insert_with(|| ClosedForms::new(params))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn with_closed_and_seq<T>(&mut self, f: impl FnOnce(&ClosedForms, &mut Sequence) -> Result<T>) -> Result<T> {
        self.closed()?;
        let cf = self
            .closed
            .as_ref()
            .and_then(|c| c.as_ref().ok())
            .expect("initialised above");
        f(cf, &mut self.seq)
    }

    pub fn scalar_series(&mut self) -> &TruncSeries<BigRat> {
        let (params, order) = (self.seq.params(), self.order);
        self.scalar_series
            .get_or_insert_with(|| horadam::gen_series_scalar(params, order))
    }

    pub fn dual_series(&mut self) -> &TruncSeries<DualOct> {
        let (params, order) = (self.seq.params(), self.order);
        self.dual_series
            .get_or_insert_with(|| dh::gen_dog_series(params, order))
    }

    pub fn fibonacci_series(&mut self) -> &TruncSeries<DualOct> {
        let order = self.order;
        self.fib_series.get_or_insert_with(|| dh::fibonacci::gen_series(order))
    }
}

/// Verdict for one identity at one point.
pub fn judge(identity: &Identity, ctx: &mut PointContext, n: u64) -> Verdict {
    let mut verdict = Verdict {
        identity_id: identity.id.to_string(),
        params: ctx.params().clone(),
        n,
        status: Status::Inapplicable,
        witness: None,
        reason: None,
    };
    if let Some(reason) = identity.violated(ctx, n) {
        verdict.reason = Some(reason);
        return verdict;
    }
    let (lhs, rhs) = identity.evaluate(ctx, n);
    match rhs {
        Err(e) => verdict.reason = Some(e.to_string()),
        Ok(rhs) if rhs == lhs => verdict.status = Status::Match,
        Ok(rhs) => {
            verdict.status = Status::Mismatch;
            verdict.witness = Some(Witness { lhs, rhs });
        }
    }
    verdict
}

/// Runs every selected identity over every grid point and index.
///
/// Points run in parallel on the current rayon pool; the result is sorted by
/// identity id, then parameters, then `n`, so it does not depend on the
/// degree of parallelism.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<Verdict>> {
    config.validate()?;
    let identities = config.selected()?;
    let points = config.points();
    let mut verdicts: Vec<Verdict> = points
        .par_iter()
        .flat_map_iter(|params| {
            let mut ctx = PointContext::new(params, config.series_order);
            let mut out = Vec::with_capacity(identities.len() * (config.n_max - config.n_min + 1) as usize);
            for identity in &identities {
                for n in config.n_min..=config.n_max {
                    out.push(judge(identity, &mut ctx, n));
                }
            }
            out
        })
        .collect();
    verdicts.sort_by(|x, y| (x.identity_id.as_str(), &x.params, x.n).cmp(&(y.identity_id.as_str(), &y.params, y.n)));
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib_config(id: &str, n_min: u64, n_max: u64) -> SweepConfig {
        SweepConfig {
            grid: ParamGrid::single(&HoradamParams::fibonacci()),
            n_min,
            n_max,
            identities: Some(vec![id.to_string()]),
            ..SweepConfig::default()
        }
    }

    #[test]
    fn default_grid_size() {
        // 256 points minus the four with p = 2, q = -1 for each (a, b) pair.
        assert_eq!(SweepConfig::default().points().len(), 240);
        assert_eq!(ParamGrid::default_grid().points(false).len(), 256);
    }

    #[test]
    fn scalar_cassini_witness() {
        let v = run_sweep(&fib_config("eq-2.5-cassini-scalar-as-printed", 2, 2)).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].status, Status::Mismatch);
        let w = v[0].witness.as_ref().unwrap();
        assert_eq!((w.lhs.to_string(), w.rhs.to_string()), ("1".into(), "-1".into()));
    }

    #[test]
    fn unit_root_point_is_inapplicable() {
        let cfg = SweepConfig {
            grid: ParamGrid::single(&HoradamParams::from_ints(0, 1, -1, 2)),
            n_min: 0,
            n_max: 3,
            identities: Some(vec!["eq-3.11-sum-dual".into()]),
            ..SweepConfig::default()
        };
        let v = run_sweep(&cfg).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|x| x.status == Status::Inapplicable));
        assert_eq!(v[0].reason.as_deref(), Some("1 - p - q = 0"));
    }

    #[test]
    fn degenerate_points_kept_when_requested() {
        let cfg = SweepConfig {
            grid: ParamGrid::single(&HoradamParams::from_ints(1, 1, 2, -1)),
            n_min: 3,
            n_max: 3,
            identities: Some(vec!["eq-2.3-binet-scalar".into(), "eq-2.4-genfun-scalar".into()]),
            exclude_degenerate: false,
            ..SweepConfig::default()
        };
        let v = run_sweep(&cfg).unwrap();
        assert_eq!(v[0].status, Status::Inapplicable);
        assert_eq!(v[0].reason.as_deref(), Some("D = 0"));
        assert_eq!(v[1].status, Status::Match);
    }

    #[test]
    fn invalid_configs() {
        let mut cfg = SweepConfig {
            n_min: 5,
            n_max: 4,
            ..SweepConfig::default()
        };
        assert!(matches!(run_sweep(&cfg), Err(Error::InvalidConfig(_))));
        cfg.n_max = 6;
        cfg.identities = Some(vec!["no-such-identity".into()]);
        assert_eq!(
            run_sweep(&cfg).err(),
            Some(Error::UnknownIdentity("no-such-identity".into()))
        );
        cfg.identities = None;
        cfg.grid.q.clear();
        assert!(matches!(run_sweep(&cfg), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn config_round_trips_through_json() {
        let cfg = SweepConfig {
            grid: ParamGrid {
                a: vec![crate::scalar::ratio(1, 2)],
                ..ParamGrid::default_grid()
            },
            ..SweepConfig::default()
        };
        let text = serde_json::to_string(&cfg).unwrap();
        assert!(text.contains("\"1/2\""));
        assert_eq!(serde_json::from_str::<SweepConfig>(&text).unwrap(), cfg);
        let minimal: SweepConfig =
            serde_json::from_str(r#"{"grid":{"a":["0"],"b":["1"],"p":["1"],"q":["1"]},"n_min":0,"n_max":3}"#).unwrap();
        assert_eq!(minimal.series_order, DEFAULT_ORDER);
        assert!(serde_json::from_str::<SweepConfig>(
            r#"{"grid":{"a":["0.5"],"b":["1"],"p":["1"],"q":["1"]},"n_min":0,"n_max":3}"#
        )
        .is_err());
    }
}
