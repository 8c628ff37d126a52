use std::sync::OnceLock;

use num_traits::Zero;
use serde::Serialize;

use super::sweep::PointContext;
use super::Value;
use crate::dual_horadam::{self as dh, fibonacci, CassiniVariant, NormLeadingTerm};
use crate::error::{Error, Result};
use crate::horadam;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    PaperEq,
    PaperQuotedSpecialization,
    CandidateCorrection,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::PaperEq => "paper-eq",
            Source::PaperQuotedSpecialization => "paper-quoted-specialization",
            Source::CandidateCorrection => "candidate-correction",
        }
    }
}

/// Preconditions an identity imposes on a sweep point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Requires {
    pub min_n: u64,
    /// `D = p² + 4q ≠ 0`.
    pub distinct_roots: bool,
    /// `1 - p - q ≠ 0`.
    pub no_unit_root: bool,
    pub fibonacci_only: bool,
    /// `n` must be below the sweep's series order.
    pub series: bool,
}

type Evaluator = fn(&mut PointContext, u64) -> (Value, Result<Value>);

pub struct Identity {
    pub id: &'static str,
    pub source: Source,
    /// The formula being checked, written out.
    pub citation: &'static str,
    pub requires: Requires,
    eval: Evaluator,
}

impl Identity {
    /// The first violated precondition at `(ctx.params, n)`, if any.
    pub fn violated(&self, ctx: &PointContext, n: u64) -> Option<String> {
        let r = &self.requires;
        let params = ctx.params();
        if n < r.min_n {
            return Some(format!("n >= {} required", r.min_n));
        }
        if r.fibonacci_only && !params.is_fibonacci() {
            return Some("Fibonacci parameters (0, 1; 1, 1) required".into());
        }
        if r.distinct_roots && params.discriminant().is_zero() {
            return Some("D = 0".into());
        }
        if r.no_unit_root && params.unit_root_gap().is_zero() {
            return Some("1 - p - q = 0".into());
        }
        if r.series && n as usize >= ctx.series_order() {
            return Some(format!("n < series order {} required", ctx.series_order()));
        }
        None
    }

    /// Left-hand side and closed form at one point. Call only when
    /// [`Identity::violated`] returned `None`.
    pub fn evaluate(&self, ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
        (self.eval)(ctx, n)
    }

    /// Human-readable preconditions.
    pub fn preconditions(&self) -> String {
        let r = &self.requires;
        let mut parts = vec![format!("n >= {}", r.min_n)];
        if r.fibonacci_only {
            parts.push("fibonacci params".into());
        }
        if r.distinct_roots {
            parts.push("D != 0".into());
        }
        if r.no_unit_root {
            parts.push("1 - p - q != 0".into());
        }
        if r.series {
            parts.push("n < series order".into());
        }
        parts.join(", ")
    }
}

const BASE: Requires = Requires {
    min_n: 0,
    distinct_roots: false,
    no_unit_root: false,
    fibonacci_only: false,
    series: false,
};
const BINET: Requires = Requires {
    distinct_roots: true,
    ..BASE
};
const SERIES: Requires = Requires { series: true, ..BASE };
const CASSINI: Requires = Requires { min_n: 1, ..BASE };
const CASSINI_ROOTS: Requires = Requires {
    min_n: 1,
    distinct_roots: true,
    ..BASE
};
const SUM_SCALAR: Requires = Requires {
    no_unit_root: true,
    ..BASE
};
const SUM_ROOTS: Requires = Requires {
    distinct_roots: true,
    no_unit_root: true,
    ..BASE
};
const FIB: Requires = Requires {
    fibonacci_only: true,
    ..BASE
};
const FIB_SERIES: Requires = Requires {
    fibonacci_only: true,
    series: true,
    ..BASE
};
const FIB_N1: Requires = Requires {
    fibonacci_only: true,
    min_n: 1,
    ..BASE
};

fn rat(x: crate::BigRat) -> Value {
    Value::Rat(x)
}

fn closed<T>(r: Result<T>, wrap: impl FnOnce(T) -> Value) -> Result<Value> {
    match r {
        Ok(v) => Ok(wrap(v)),
        Err(Error::Irrational) => Ok(Value::Irrational("closed form keeps a nonzero √D component".into())),
        Err(e) => Err(e),
    }
}

fn binet_scalar(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = rat(ctx.seq().w(n));
    let rhs = ctx.closed().and_then(|cf| horadam::binet_w_with(cf.roots(), n));
    (lhs, closed(rhs, rat))
}

fn genfun_scalar(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = rat(ctx.seq().w(n));
    let rhs = ctx.scalar_series().coeffs()[n as usize].clone();
    (lhs, Ok(rat(rhs)))
}

fn cassini_scalar_printed(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = horadam::cassini_scalar_lhs(ctx.seq(), n);
    (rat(lhs), Ok(rat(horadam::cassini_scalar_rhs_paper(ctx.params(), n))))
}

fn cassini_scalar_neg_q(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = horadam::cassini_scalar_lhs(ctx.seq(), n);
    (rat(lhs), Ok(rat(horadam::cassini_scalar_rhs_neg_q(ctx.params(), n))))
}

fn cassini_scalar_corrected(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = horadam::cassini_scalar_lhs(ctx.seq(), n);
    (
        rat(lhs),
        Ok(rat(horadam::cassini_scalar_rhs_corrected(ctx.params(), n))),
    )
}

fn sum_scalar_printed(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = horadam::sum_scalar_lhs(ctx.seq(), n);
    (rat(lhs), closed(horadam::sum_scalar_rhs_paper(ctx.seq(), n), rat))
}

fn sum_scalar_neg_qw(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = horadam::sum_scalar_lhs(ctx.seq(), n);
    (rat(lhs), closed(horadam::sum_scalar_rhs_neg_qw(ctx.seq(), n), rat))
}

fn binet_dual(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::dog_from(ctx.seq(), n));
    let rhs = ctx.closed().and_then(|cf| cf.binet_dog(n));
    (lhs, closed(rhs, Value::DualOct))
}

fn genfun_dual(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::dog_from(ctx.seq(), n));
    let rhs = ctx.dual_series().coeffs()[n as usize].clone();
    (lhs, Ok(Value::DualOct(rhs)))
}

fn cassini_dual(ctx: &mut PointContext, n: u64, variant: CassiniVariant) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::cassini_dog_lhs(ctx.seq(), n));
    let rhs = ctx.closed().and_then(|cf| cf.cassini_dog_rhs_paper(n, variant));
    (lhs, closed(rhs, Value::DualOct))
}

fn cassini_dual_theorem(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    cassini_dual(ctx, n, CassiniVariant::Theorem)
}

fn cassini_dual_proof(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    cassini_dual(ctx, n, CassiniVariant::Proof)
}

fn cassini_dual_theorem_real(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::Oct(dh::cassini_dog_lhs(ctx.seq(), n).re);
    let rhs = ctx
        .closed()
        .and_then(|cf| cf.cassini_c1(n, CassiniVariant::Theorem).to_rational());
    (lhs, closed(rhs, Value::Oct))
}

fn cassini_dual_candidate(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::cassini_dog_lhs(ctx.seq(), n));
    let rhs = ctx.closed().and_then(|cf| cf.cassini_dog_rhs_candidate(n));
    (lhs, closed(rhs, Value::DualOct))
}

fn sum_dual(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::sum_dog_lhs(ctx.seq(), n));
    let rhs = ctx.closed().and_then(|cf| cf.sum_dog_rhs_paper(n));
    (lhs, closed(rhs, Value::DualOct))
}

fn norm_dual(ctx: &mut PointContext, n: u64, lead: NormLeadingTerm) -> (Value, Result<Value>) {
    let lhs = Value::DualRat(dh::norm_dog_lhs(ctx.seq(), n));
    let rhs = ctx.with_closed_and_seq(|cf, seq| cf.norm_dog_rhs(seq, n, lead));
    (lhs, closed(rhs, Value::DualRat))
}

fn norm_dual_printed(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    norm_dual(ctx, n, NormLeadingTerm::SeedA)
}

fn norm_dual_unit_lead(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    norm_dual(ctx, n, NormLeadingTerm::One)
}

fn norm_dual_part(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = dh::norm_dog_lhs(ctx.seq(), n).du;
    (rat(lhs), Ok(rat(dh::norm_dual_part_closed(ctx.seq(), n))))
}

fn fib_binet(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::dog_from(ctx.seq(), n));
    (lhs, closed(fibonacci::binet(n), Value::DualOct))
}

fn fib_genfun(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::dog_from(ctx.seq(), n));
    let rhs = ctx.fibonacci_series().coeffs()[n as usize].clone();
    (lhs, Ok(Value::DualOct(rhs)))
}

fn fib_cassini(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::cassini_dog_lhs(ctx.seq(), n));
    (lhs, Ok(Value::DualOct(fibonacci::cassini_rhs(n))))
}

fn fib_cassini_candidate(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualOct(dh::cassini_dog_lhs(ctx.seq(), n));
    (lhs, Ok(Value::DualOct(fibonacci::cassini_rhs_candidate(n))))
}

fn fib_sum(_ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    (
        Value::DualOct(fibonacci::sum_lhs(n)),
        Ok(Value::DualOct(fibonacci::sum_rhs(n))),
    )
}

fn fib_sum_candidate(_ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    (
        Value::DualOct(fibonacci::sum_lhs(n)),
        Ok(Value::DualOct(fibonacci::sum_rhs_candidate(n))),
    )
}

fn fib_norm(ctx: &mut PointContext, n: u64) -> (Value, Result<Value>) {
    let lhs = Value::DualRat(dh::norm_dog_lhs(ctx.seq(), n));
    (lhs, Ok(Value::DualRat(fibonacci::norm_rhs(n))))
}

/// The built-in registry, sorted by id.
pub fn builtin() -> &'static [Identity] {
    static REGISTRY: OnceLock<Vec<Identity>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        use Source::*;
        let mut v = vec![
            Identity {
                id: "eq-2.3-binet-scalar",
                source: PaperEq,
                citation: "w_n = (A α^n - B β^n)/(α - β), A = b - aβ, B = b - aα",
                requires: BINET,
                eval: binet_scalar,
            },
            Identity {
                id: "eq-2.4-genfun-scalar",
                source: PaperEq,
                citation: "g(t) = (w_0 + (w_1 - p w_0) t)/(1 - p t - q t^2)",
                requires: SERIES,
                eval: genfun_scalar,
            },
            Identity {
                id: "eq-2.5-cassini-scalar-as-printed",
                source: PaperEq,
                citation: "w_{n+1} w_{n-1} - w_n^2 = q^{n-1} (p w_0 w_1 - w_1^2 - w_0^2 q)",
                requires: CASSINI,
                eval: cassini_scalar_printed,
            },
            Identity {
                id: "eq-2.5-cassini-scalar-neg-q",
                source: CandidateCorrection,
                citation: "w_{n+1} w_{n-1} - w_n^2 = (-q)^{n-1} (p w_0 w_1 - w_1^2 - w_0^2 q)",
                requires: CASSINI,
                eval: cassini_scalar_neg_q,
            },
            Identity {
                id: "eq-2.5-cassini-scalar-corrected",
                source: CandidateCorrection,
                citation: "w_{n+1} w_{n-1} - w_n^2 = (-q)^{n-1} (p w_0 w_1 - w_1^2 + w_0^2 q)",
                requires: CASSINI,
                eval: cassini_scalar_corrected,
            },
            Identity {
                id: "eq-2.6-sum-scalar-as-printed",
                source: PaperEq,
                citation: "Σ_{i=0}^{n} w_i = (w_1 - w_0 (p - 1) + q w_n - w_{n+1})/(1 - p - q)",
                requires: SUM_SCALAR,
                eval: sum_scalar_printed,
            },
            Identity {
                id: "eq-2.6-sum-scalar-neg-qw",
                source: CandidateCorrection,
                citation: "Σ_{i=0}^{n} w_i = (w_1 - w_0 (p - 1) - q w_n - w_{n+1})/(1 - p - q)",
                requires: SUM_SCALAR,
                eval: sum_scalar_neg_qw,
            },
            Identity {
                id: "eq-3.1-binet-dual",
                source: PaperEq,
                citation: "ÔG_n = (A α̲ α^n (1 + α ε) - B β̲ β^n (1 + β ε))/(α - β)",
                requires: BINET,
                eval: binet_dual,
            },
            Identity {
                id: "eq-3.6-genfun-dual",
                source: PaperEq,
                citation: "Σ ÔG_n t^n = (ÔG_0 + (ÔG_1 - p ÔG_0) t)/(1 - p t - q t^2)",
                requires: SERIES,
                eval: genfun_dual,
            },
            Identity {
                id: "eq-3.10-cassini-theorem-variant",
                source: PaperEq,
                citation: "ÔG_{n-1} ÔG_{n+1} - ÔG_n^2 = (c_1, c_2), c_1 = AB(αβ)^{n-1}(β α̲β̲ - α β̲α̲)/(α - β)",
                requires: CASSINI_ROOTS,
                eval: cassini_dual_theorem,
            },
            Identity {
                id: "eq-3.10-cassini-proof-variant",
                source: PaperEq,
                citation: "ÔG_{n-1} ÔG_{n+1} - ÔG_n^2 = (c_1, c_2), c_1 = AB(αβ)^{n-1}(β β̲α̲ - α α̲β̲)/(α - β)",
                requires: CASSINI_ROOTS,
                eval: cassini_dual_proof,
            },
            Identity {
                id: "eq-3.10-cassini-theorem-real-part",
                source: PaperEq,
                citation: "real part of ÔG_{n-1} ÔG_{n+1} - ÔG_n^2 = AB(αβ)^{n-1}(β α̲β̲ - α β̲α̲)/(α - β)",
                requires: CASSINI_ROOTS,
                eval: cassini_dual_theorem_real,
            },
            Identity {
                id: "eq-3.10-cassini-candidate",
                source: CandidateCorrection,
                citation: "ÔG_{n-1} ÔG_{n+1} - ÔG_n^2 = (c_1, p c_1), c_1 = AB(αβ)^{n-1}(β α̲β̲ - α β̲α̲)/(α - β)",
                requires: CASSINI_ROOTS,
                eval: cassini_dual_candidate,
            },
            Identity {
                id: "eq-3.11-sum-dual",
                source: PaperEq,
                citation: "Σ_{i=0}^{n} ÔG_i = (d_1, d_2) with K = (A α̲ (1 - β) - B β̲ (1 - α))/((α - β)(1 - α)(1 - β))",
                requires: SUM_ROOTS,
                eval: sum_dual,
            },
            Identity {
                id: "eq-3.12-norm-as-printed",
                source: PaperEq,
                citation: "Nr(ÔG_n) = (e_1, e_2), L = 2AB(-q)^n (a + (-q) + ... + (-q)^7)/(α - β)^2",
                requires: BINET,
                eval: norm_dual_printed,
            },
            Identity {
                id: "eq-3.12-norm-unit-lead",
                source: CandidateCorrection,
                citation: "Nr(ÔG_n) = (e_1, e_2), L = 2AB(-q)^n (1 + (-q) + ... + (-q)^7)/(α - β)^2",
                requires: BINET,
                eval: norm_dual_unit_lead,
            },
            Identity {
                id: "eq-3.12-norm-dual-part",
                source: PaperEq,
                citation: "e_2 = 2 Σ_{i=0}^{7} w_{n+i} w_{n+1+i}",
                requires: BASE,
                eval: norm_dual_part,
            },
            Identity {
                id: "dual-fib-binet",
                source: PaperQuotedSpecialization,
                citation: "Ô_n = (α̲ α^n (1 + α ε) - β̲ β^n (1 + β ε))/(α - β)",
                requires: FIB,
                eval: fib_binet,
            },
            Identity {
                id: "dual-fib-genfun",
                source: PaperQuotedSpecialization,
                citation: "Σ Ô_n t^n = (Ô_0 + (Ô_1 - Ô_0) t)/(1 - t - t^2)",
                requires: FIB_SERIES,
                eval: fib_genfun,
            },
            Identity {
                id: "dual-fib-cassini",
                source: PaperQuotedSpecialization,
                citation: "Ô_{n-1} Ô_{n+1} - Ô_n^2 = (-1)^n (Ô_1^2 - Ô_0^2 - Ô_1 Ô_0)",
                requires: FIB_N1,
                eval: fib_cassini,
            },
            Identity {
                id: "dual-fib-cassini-candidate",
                source: CandidateCorrection,
                citation: "Ô_{n-1} Ô_{n+1} - Ô_n^2 = (-1)^n (Ô_1^2 - Ô_0^2 - Ô_0 Ô_1)",
                requires: FIB_N1,
                eval: fib_cassini_candidate,
            },
            Identity {
                id: "dual-fib-sum",
                source: PaperQuotedSpecialization,
                citation: "Σ_{i=1}^{n} Ô_i = Ô_2 F_{n+1} + Ô_1 F_{n-1} - Ô_2",
                requires: FIB_N1,
                eval: fib_sum,
            },
            Identity {
                id: "dual-fib-sum-candidate",
                source: CandidateCorrection,
                citation: "Σ_{i=1}^{n} Ô_i = Ô_2 F_{n+1} + Ô_1 F_n - Ô_2",
                requires: FIB_N1,
                eval: fib_sum_candidate,
            },
            Identity {
                id: "dual-fib-norm-21",
                source: PaperQuotedSpecialization,
                citation: "Nr(Ô_n) = 21 (F_{2n+7} + 2 F_{2n+8} ε)",
                requires: FIB,
                eval: fib_norm,
            },
        ];
        v.sort_by_key(|i| i.id);
        v
    })
}

pub fn find(id: &str) -> Result<&'static Identity> {
    builtin()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}
