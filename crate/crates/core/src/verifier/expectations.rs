//! Catalogued verdicts for the default grid, used to detect drift.
//!
//! Each identity records its majority status plus the points that differ from
//! it. A sweep verdict drifts when its point is catalogued with a different
//! status; verdicts outside the catalogued domain are reported separately.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::registry;
use super::sweep::ParamGrid;
use super::{point_key, Status, Verdict};
use crate::error::{Error, Result};
use crate::horadam::HoradamParams;

const BUILTIN: &str = include_str!("../../data/expectations.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domain {
    /// Only `"default"` is recognised.
    pub grid: String,
    pub n_min: u64,
    pub n_max: u64,
    pub series_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityExpectation {
    pub default: Status,
    /// Point keys (`"a,b,p,q@n"`) whose status differs from `default`.
    #[serde(default)]
    pub exceptions: BTreeMap<Status, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectations {
    pub domain: Domain,
    pub identities: BTreeMap<String, IdentityExpectation>,
    #[serde(skip)]
    index: HashMap<String, HashMap<String, Status>>,
    #[serde(skip)]
    grid: HashSet<HoradamParams>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drift {
    pub identity_id: String,
    pub point: String,
    pub expected: Status,
    pub actual: Status,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DriftReport {
    pub drifted: Vec<Drift>,
    /// `(identity_id, point)` pairs the catalogue does not cover.
    pub uncatalogued: Vec<(String, String)>,
}

impl DriftReport {
    pub fn is_clean(&self) -> bool {
        self.drifted.is_empty()
    }
}

impl Expectations {
    pub fn builtin() -> &'static Expectations {
        static CELL: OnceLock<Expectations> = OnceLock::new();
        CELL.get_or_init(|| Expectations::parse(BUILTIN).expect("embedded expectations are valid"))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut e: Expectations =
            serde_json::from_str(text).map_err(|err| Error::InvalidConfig(format!("expectations: {err}")))?;
        if e.domain.grid != "default" {
            return Err(Error::InvalidConfig(format!(
                "expectations: unknown grid {:?}",
                e.domain.grid
            )));
        }
        e.reindex();
        Ok(e)
    }

    /// Catalogues `verdicts`, which should cover `domain` in full.
    pub fn from_verdicts(verdicts: &[Verdict], domain: Domain) -> Self {
        let mut grouped: BTreeMap<&str, Vec<&Verdict>> = BTreeMap::new();
        for v in verdicts {
            grouped.entry(&v.identity_id).or_default().push(v);
        }
        let identities = grouped
            .into_iter()
            .map(|(id, vs)| {
                let mut counts: BTreeMap<Status, usize> = BTreeMap::new();
                for v in &vs {
                    *counts.entry(v.status).or_default() += 1;
                }
                let default = counts
                    .iter()
                    .max_by(|x, y| x.1.cmp(y.1).then(y.0.cmp(x.0)))
                    .map(|(s, _)| *s)
                    .expect("group is non-empty");
                let mut exceptions: BTreeMap<Status, Vec<String>> = BTreeMap::new();
                for v in vs.iter().filter(|v| v.status != default) {
                    exceptions.entry(v.status).or_default().push(v.point_key());
                }
                (id.to_string(), IdentityExpectation { default, exceptions })
            })
            .collect();
        let mut e = Expectations {
            domain,
            identities,
            index: HashMap::new(),
            grid: HashSet::new(),
        };
        e.reindex();
        e
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("expectations serialise");
        s.push('\n');
        s
    }

    fn reindex(&mut self) {
        self.grid = ParamGrid::default_grid().points(true).into_iter().collect();
        self.index = self
            .identities
            .iter()
            .map(|(id, exp)| {
                let points = exp
                    .exceptions
                    .iter()
                    .flat_map(|(status, keys)| keys.iter().map(move |k| (k.clone(), *status)))
                    .collect();
                (id.clone(), points)
            })
            .collect();
    }

    fn covers(&self, params: &HoradamParams, n: u64, series: bool, series_order: usize) -> bool {
        self.grid.contains(params)
            && (self.domain.n_min..=self.domain.n_max).contains(&n)
            && (!series || series_order == self.domain.series_order)
    }

    /// The catalogued status, or `None` outside the domain.
    pub fn expected(&self, identity_id: &str, params: &HoradamParams, n: u64, series_order: usize) -> Option<Status> {
        let exp = self.identities.get(identity_id)?;
        let series = registry::find(identity_id).map(|i| i.requires.series).unwrap_or(false);
        if !self.covers(params, n, series, series_order) {
            return None;
        }
        let key = point_key(params, n);
        Some(
            self.index
                .get(identity_id)
                .and_then(|m| m.get(&key))
                .copied()
                .unwrap_or(exp.default),
        )
    }

    /// Compares a sweep run at `series_order` against the catalogue.
    pub fn compare(&self, verdicts: &[Verdict], series_order: usize) -> DriftReport {
        let mut report = DriftReport::default();
        for v in verdicts {
            match self.expected(&v.identity_id, &v.params, v.n, series_order) {
                None => report.uncatalogued.push((v.identity_id.clone(), v.point_key())),
                Some(expected) if expected != v.status => report.drifted.push(Drift {
                    identity_id: v.identity_id.clone(),
                    point: v.point_key(),
                    expected,
                    actual: v.status,
                }),
                Some(_) => {}
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{run_sweep, SweepConfig};

    fn domain() -> Domain {
        Domain {
            grid: "default".into(),
            n_min: 0,
            n_max: 4,
            series_order: 32,
        }
    }

    fn sweep(ids: &[&str], n_max: u64) -> Vec<Verdict> {
        run_sweep(&SweepConfig {
            n_min: 0,
            n_max,
            identities: Some(ids.iter().map(|s| s.to_string()).collect()),
            ..SweepConfig::default()
        })
        .unwrap()
    }

    #[test]
    fn round_trip_and_self_compare() {
        let verdicts = sweep(&["eq-2.5-cassini-scalar-as-printed", "eq-3.11-sum-dual"], 4);
        let e = Expectations::from_verdicts(&verdicts, domain());
        let parsed = Expectations::parse(&e.to_json_string()).unwrap();
        assert_eq!(parsed.identities, e.identities);
        let report = parsed.compare(&verdicts, 32);
        assert!(report.is_clean());
        assert!(report.uncatalogued.is_empty());
    }

    #[test]
    fn flipped_verdict_drifts() {
        let mut verdicts = sweep(&["eq-2.3-binet-scalar"], 2);
        let e = Expectations::from_verdicts(&verdicts, domain());
        assert_eq!(e.identities["eq-2.3-binet-scalar"].default, Status::Match);
        verdicts[5].status = Status::Mismatch;
        let report = e.compare(&verdicts, 32);
        assert_eq!(report.drifted.len(), 1);
        assert_eq!(report.drifted[0].expected, Status::Match);
        assert_eq!(report.drifted[0].actual, Status::Mismatch);
    }

    #[test]
    fn outside_domain_is_uncatalogued() {
        let verdicts = sweep(&["eq-2.4-genfun-scalar"], 5);
        let e = Expectations::from_verdicts(&verdicts[..0], domain());
        let report = e.compare(&verdicts, 32);
        assert_eq!(report.uncatalogued.len(), verdicts.len());
        let e = Expectations::from_verdicts(&verdicts, domain());
        let report = e.compare(&verdicts, 16);
        assert_eq!(report.uncatalogued.len(), verdicts.len());
        let report = e.compare(&verdicts, 32);
        assert_eq!(report.uncatalogued.len(), 240);
    }

    #[test]
    fn rejects_unknown_grid() {
        let text = r#"{"domain":{"grid":"mine","n_min":0,"n_max":1,"series_order":32},"identities":{}}"#;
        assert!(Expectations::parse(text).is_err());
    }
}
