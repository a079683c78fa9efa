//! Built-in reproduction suite: the worked examples on two-dimensional
//! quotients of `k[x,y,z,w]`, each check carrying its expected value.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactalg::Field;
use crate::groebner::Ideal;
use crate::hilbert::{
    default_n_max, genericity_warning, hilbert_polynomial_value, hilbert_report, ideal_hilbert_function,
    k_plus_j_hilbert, k_plus_j_parameter_hilbert, lambda_map, sample_reductions, ParameterIdeal, QuotientRing,
};
use crate::polyring::{parse_poly, MonomialOrder, Polynomial, Ring, RingSpec};
use crate::secmethods::{
    annihilator_length, e1_e2_via_kernel, e1_via_slice, is_d_sequence, is_superficial, sally_lengths, sally_rank,
    tn_length, unmixed_component, ArtinAlgebra, DEFAULT_KERNEL_WINDOW,
};

/// Parameters of a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub field: Field,
    pub seed: u64,
    /// Sampled reductions per family.
    pub samples: usize,
    /// Largest `n` sampled for Hilbert fits; `None` uses the default.
    pub n_max: Option<u32>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            field: Field::default(),
            seed: 1,
            samples: 5,
            n_max: None,
        }
    }
}

/// One expectation and what was observed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub group: String,
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Check groups in run order.
pub const GROUPS: [&str; 11] = ["1", "2", "3", "4", "5", "6", "7", "8", "9a", "9b", "9f"];

pub fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

struct Ctx {
    cfg: SuiteConfig,
    ring: Ring,
    out: Vec<Check>,
    group: String,
}

impl Ctx {
    fn n_max(&self) -> u32 {
        self.cfg.n_max.unwrap_or(default_n_max(2))
    }

    fn p(&self, s: &str) -> Polynomial {
        parse_poly(&self.ring, s).expect("built-in polynomial parses")
    }

    fn ideal(&self, gens: &[String]) -> Ideal {
        Ideal::parse(&self.ring, gens).expect("built-in ideal parses")
    }

    fn record<T: Display>(&mut self, key: impl Into<String>, expected: impl Display, actual: Result<T>) {
        let expected = expected.to_string();
        let (actual, pass) = match actual {
            Ok(v) => {
                let v = v.to_string();
                let pass = v == expected;
                (v, pass)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        self.out.push(Check {
            group: self.group.clone(),
            key: key.into(),
            expected,
            actual,
            pass,
        });
    }

    /// `R / (I ∩ J)` of dimension 2.
    fn quotient(&self, i: &[String], j: &[String]) -> Result<QuotientRing> {
        let a = self.ideal(i).intersect(&self.ideal(j))?;
        QuotientRing::new(a, 2)
    }

    fn param(&self, a: &QuotientRing, gens: &[String]) -> Result<ParameterIdeal> {
        ParameterIdeal::new(a, gens.iter().map(|s| self.p(s)).collect())
    }
}

fn s(v: &[&str]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn zw() -> Vec<String> {
    s(&["z", "w"])
}

/// Generators of `(x,y)^l`.
fn xy_power(l: u32) -> Vec<String> {
    (0..=l).map(|i| format!("x^{}*y^{}", l - i, i)).collect()
}

/// A worked example with a known `C = R/c` for the kernel identity.
struct KernelCase {
    label: String,
    ring: QuotientRing,
    q: ParameterIdeal,
    c: Vec<String>,
}

fn planes(ctx: &Ctx, l: u32) -> Result<(QuotientRing, ParameterIdeal)> {
    let a = ctx.quotient(&[format!("x^{l}"), format!("y^{l}")], &zw())?;
    let q = ctx.param(&a, &s(&["x - z", "y - w"]))?;
    Ok((a, q))
}

fn group_1(ctx: &mut Ctx) {
    for l in 1..=3u32 {
        let key = format!("(X^{l},Y^{l})∩(Z,W), Q=(x-z,y-w)");
        let want = [(l * l + 1) as i64, -(l as i64), -((l * (l - 1) / 2) as i64)];
        let n_max = ctx.n_max();
        let fit = planes(ctx, l).and_then(|(a, q)| hilbert_report(&a, &q, n_max));
        let e0 = fit.as_ref().map(|r| r.coeffs[0]).unwrap_or(want[0]);
        ctx.record(format!("{key}: (e0,e1,e2) by Hilbert fit"), tuple(&want), fit.map(|r| tuple(&r.coeffs)));
        let c = ctx.ideal(&[format!("x^{l}"), format!("y^{l}"), "z".into(), "w".into()]);
        let kern = ArtinAlgebra::new(&c).and_then(|alg| {
            let act = alg.action_pair(&ctx.p("x - z"), &ctx.p("y - w"));
            let r = e1_e2_via_kernel(&alg, &act, e0, DEFAULT_KERNEL_WINDOW)?;
            Ok(tuple(&[e0, r.e1, r.e2]))
        });
        ctx.record(format!("{key}: (e0,e1,e2) by kernel method"), tuple(&want), kern);
        // dim T_n = (n+1) l - l(l-1)/2 once n >= l + 1
        let tn = ArtinAlgebra::new(&c).map(|alg| {
            let act = alg.action_pair(&ctx.p("x - z"), &ctx.p("y - w"));
            let v: Vec<i64> = (l + 1..=l + 3).map(|n| tn_length(&alg, &act, n) as i64).collect();
            tuple(&v)
        });
        let want_tn: Vec<i64> = (l + 1..=l + 3)
            .map(|n| ((n + 1) * l - l * (l - 1) / 2) as i64)
            .collect();
        ctx.record(format!("{key}: dim T_n for n = {}..{}", l + 1, l + 3), tuple(&want_tn), tn);
    }
}

fn group_2(ctx: &mut Ctx) {
    for l in 2..=3u32 {
        for n in 1..=l {
            let key = format!("(X,Y)^{l}∩(Z,W), Q=(x^{l}-z, y^{n}-w): (e1,e2)");
            let want = [-(((2 * l - n + 1) * n / 2) as i64), 0];
            let n_max = ctx.n_max();
            let got = ctx
                .quotient(&xy_power(l), &zw())
                .and_then(|a| {
                    let q = ctx.param(&a, &[format!("x^{l} - z"), format!("y^{n} - w")])?;
                    hilbert_report(&a, &q, n_max)
                })
                .map(|r| tuple(&r.coeffs[1..]));
            ctx.record(key, tuple(&want), got);
        }
    }
}

fn group_3(ctx: &mut Ctx) {
    let a = match ctx.quotient(&xy_power(2), &zw()) {
        Ok(a) => a,
        Err(e) => return ctx.record("(X,Y)^2∩(Z,W): setup", "ok", Err::<String, _>(e)),
    };
    let m = Ideal::maximal(&ctx.ring);
    let sampled = sample_reductions(&a, &m, ctx.cfg.samples, ctx.cfg.seed.wrapping_add(35));
    let reds = match sampled {
        Ok(s) => s.reductions,
        Err(e) => return ctx.record("(X,Y)^2∩(Z,W): sampling reductions of m", "ok", Err::<String, _>(e)),
    };
    let n_max = ctx.n_max();
    for (k, q) in reds.iter().enumerate() {
        let key = format!("(X,Y)^2∩(Z,W), sampled reduction {} of m", k + 1);
        ctx.record(
            format!("{key}: (e0,e1,e2)"),
            "(4, -2, 0)",
            hilbert_report(&a, q, n_max).map(|r| tuple(&r.coeffs)),
        );
        ctx.record(format!("{key}: is a d-sequence"), true, is_d_sequence(&a, q.lifts()));
        ctx.record(
            format!("{key}: length of U(a)/(a)"),
            2,
            unmixed_component(&a, &q.lifts()[0], &q.lifts()[1]).map(|u| u.length_over_a),
        );
    }
}

fn group_4(ctx: &mut Ctx) {
    let n_max = ctx.n_max();
    for n in 2..=3u32 {
        let name = format!("(X^{n},Y)∩(Z,W)");
        let a = match ctx.quotient(&[format!("x^{n}"), "y".into()], &zw()) {
            Ok(a) => a,
            Err(e) => return ctx.record(format!("{name}: setup"), "ok", Err::<String, _>(e)),
        };
        let c: Vec<String> = vec![format!("x^{n}"), "y".into(), "z".into(), "w".into()];
        ctx.record(format!("{name}: length of A/c, c = (x^{n},y,z,w)"), n, a.colength(ctx.ideal(&c).gens()));
        let seed = ctx.cfg.seed.wrapping_add(33 + n as u64);
        match sample_reductions(&a, &Ideal::maximal(&ctx.ring), ctx.cfg.samples, seed) {
            Ok(s) => {
                for (k, q) in s.reductions.iter().enumerate() {
                    let key = format!("{name}, sampled reduction {} of m", k + 1);
                    ctx.record(format!("{key}: e1"), -1, hilbert_report(&a, q, n_max).map(|r| r.coeffs[1]));
                    ctx.record(format!("{key}: e1 by slice"), -1, e1_via_slice(&a, &q.lifts()[0]));
                }
            }
            Err(e) => ctx.record(format!("{name}: sampling reductions of m"), "ok", Err::<String, _>(e)),
        }
        for l in 1..=n {
            let got = ctx
                .param(&a, &[format!("x^{l} - z"), "y - w".into()])
                .and_then(|q| hilbert_report(&a, &q, n_max))
                .map(|r| r.coeffs[1]);
            ctx.record(format!("{name}, Q=(x^{l}-z, y-w): e1"), -(l as i64), got);
        }
    }
    // colon computed in R with the defining ideal added
    let d = ctx.ideal(&s(&["x^2*z", "x^2*w", "y*z", "y*w"]));
    let a1 = ctx.p("x^2 - z");
    let a2 = ctx.p("y - w");
    let got = d
        .add_gens(std::slice::from_ref(&a1))
        .colon(&a2)
        .and_then(|k| k.equals(&d.add_gens(&[a1.clone(), ctx.p("z")])));
    ctx.record("(X^2,Y)∩(Z,W): ((a1) : a2) = (a1, z) for a1 = x^2-z, a2 = y-w", true, got);
}

fn counterexample_ring(ctx: &Ctx, n: u32) -> Result<QuotientRing> {
    ctx.quotient(&[format!("x^{n}"), format!("y^{n}")], &zw())
}

fn q_pair(ctx: &Ctx, a: &QuotientRing, n: u32) -> Result<(ParameterIdeal, ParameterIdeal)> {
    let q = ctx.param(a, &[format!("x^{n} - z"), format!("y^{n} - w")])?;
    let qp = ctx.param(a, &[format!("x*y^{} - z", n - 1), format!("x^{n} + y^{n} - w")])?;
    Ok((q, qp))
}

/// Generators of `m^n + (z, w)`.
fn m_power_plus_zw(n: u32) -> Vec<String> {
    let mut g = xy_power(n);
    g.extend(zw());
    g
}

fn group_5(ctx: &mut Ctx) {
    let n_max = ctx.n_max().max(5);
    for n in 2..=3u32 {
        let name = format!("(X^{n},Y^{n})∩(Z,W)");
        let setup = counterexample_ring(ctx, n).and_then(|a| {
            let (q, qp) = q_pair(ctx, &a, n)?;
            Ok((a, q, qp))
        });
        let (a, q, qp) = match setup {
            Ok(v) => v,
            Err(e) => return ctx.record(format!("{name}: setup"), "ok", Err::<String, _>(e)),
        };
        let nn = (n * n) as i64;
        let q_label = format!("Q=(x^{n}-z, y^{n}-w)");
        let qp_label = format!("Q'=(xy^{}-z, x^{n}+y^{n}-w)", n - 1);
        let rq = hilbert_report(&a, &q, n_max);
        let rqp = hilbert_report(&a, &qp, n_max);
        ctx.record(format!("{name}, {q_label}: e0"), 2 * nn, rq.as_ref().map(|r| r.coeffs[0]).map_err(Clone::clone));
        ctx.record(format!("{name}, {qp_label}: e0"), 2 * nn, rqp.as_ref().map(|r| r.coeffs[0]).map_err(Clone::clone));
        ctx.record(format!("{name}, {q_label}: e1"), -nn, rq.as_ref().map(|r| r.coeffs[1]).map_err(Clone::clone));
        ctx.record(format!("{name}, {qp_label}: e1"), -nn + n as i64 - 1, rqp.as_ref().map(|r| r.coeffs[1]).map_err(Clone::clone));
        let closed = |lin: i64| -> String {
            let v: Vec<i64> = (0..=5).map(|l| 2 * nn * ((l + 2) * (l + 1) / 2) + lin * (l + 1)).collect();
            tuple(&v)
        };
        let first = |r: &crate::hilbert::HilbertReport| -> String {
            tuple(&(0..=5).map(|l| r.samples[&l]).collect::<Vec<_>>())
        };
        ctx.record(format!("{name}, {q_label}: H(l) for l = 0..5"), closed(nn), rq.as_ref().map(first).map_err(Clone::clone));
        ctx.record(
            format!("{name}, {qp_label}: H(l) for l = 0..5"),
            closed(nn - n as i64 + 1),
            rqp.as_ref().map(first).map_err(Clone::clone),
        );
        ctx.record(
            format!("{name}, {qp_label}: x^{n}+y^{n}-w is superficial"),
            false,
            is_superficial(&a, &qp, &ctx.p(&format!("x^{n} + y^{n} - w")), (2, 6)).map(|r| r.holds),
        );
        let c = ctx.ideal(&[format!("x^{n}"), format!("y^{n}"), "z".into(), "w".into()]);
        let kern = ArtinAlgebra::new(&c).and_then(|alg| {
            let b = ctx.p(&format!("x*y^{} - z", n - 1));
            let ann = annihilator_length(&alg, &b) as i64;
            let act = alg.action_pair(&ctx.p(&format!("x^{n} + y^{n} - w")), &b);
            let e0 = 2 * nn;
            let r = e1_e2_via_kernel(&alg, &act, e0, DEFAULT_KERNEL_WINDOW)?;
            Ok(tuple(&[ann, r.e1, r.e2]))
        });
        ctx.record(
            format!("{name}, {qp_label}: (length (0):_C b, e1, e2) by kernel method, C = A/(x^{n},y^{n},z,w)"),
            tuple(&[nn - n as i64 + 1, -nn + n as i64 - 1, 0]),
            kern,
        );
        let i = ctx.ideal(&m_power_plus_zw(n));
        let named = vec![("Q".to_string(), q.clone()), ("Q'".to_string(), qp.clone())];
        let seed = ctx.cfg.seed.wrapping_add(53 + n as u64);
        let lm = lambda_map(&a, &i, ctx.cfg.samples, seed, n_max, &named);
        let lm_ok = lm.as_ref().map(|r| {
            let has = r.distinct.contains(&-nn) && r.distinct.contains(&(-nn + n as i64 - 1));
            r.distinct.len() >= 2 && has && r.distinct.iter().all(|&e| e < 0)
        });
        ctx.record(
            format!("{name}, I = m^{n}+(z,w): observed e1 values include both -n^2 and -n^2+n-1"),
            true,
            lm_ok.map_err(Clone::clone),
        );
    }
}

fn group_6(ctx: &mut Ctx) {
    let n_max = ctx.n_max();
    for n in 2..=3u32 {
        let name = format!("(X^{n},Y^{n})∩(Z,W)");
        let a = match counterexample_ring(ctx, n) {
            Ok(a) => a,
            Err(e) => return ctx.record(format!("{name}: setup"), "ok", Err::<String, _>(e)),
        };
        let seed = ctx.cfg.seed.wrapping_add(54 + n as u64);
        match lambda_map(&a, &Ideal::maximal(&ctx.ring), ctx.cfg.samples, seed, n_max, &[]) {
            Ok(r) => {
                for e in &r.entries {
                    ctx.record(format!("{name}, {} of m: e1", e.label.replace("sample", "sampled reduction")), -(n as i64), Ok(e.e1));
                }
            }
            Err(e) => ctx.record(format!("{name}: sampled reductions of m"), "ok", Err::<String, _>(e)),
        }
    }
}

fn group_7(ctx: &mut Ctx) {
    let name = "(X^2,Y^2)∩(Z,W), I = m^2+(z,w)";
    let setup = counterexample_ring(ctx, 2).and_then(|a| {
        let (q, qp) = q_pair(ctx, &a, 2)?;
        Ok((a, q, qp))
    });
    let (a, q, qp) = match setup {
        Ok(v) => v,
        Err(e) => return ctx.record(format!("{name}: setup"), "ok", Err::<String, _>(e)),
    };
    let i = ctx.ideal(&m_power_plus_zw(2));
    let lens = |qq: &ParameterIdeal| sally_lengths(&a, &i, qq, 4).map(|m| tuple(&m.values().copied().collect::<Vec<_>>()));
    ctx.record(format!("{name}, Q=(x^2-z, y^2-w): Sally lengths in degrees 1..4"), "(2, 3, 4, 5)", lens(&q));
    ctx.record(format!("{name}, Q'=(xy-z, x^2+y^2-w): Sally lengths in degrees 1..4"), "(1, 1, 1, 1)", lens(&qp));
    let want: Vec<i64> = (1..=5).map(|n| hilbert_polynomial_value(&[8, 2, -4], n)).collect();
    let got = ideal_hilbert_function(&a, i.gens(), 5).map(|h| tuple(&(1..=5).map(|n| h[&n]).collect::<Vec<_>>()));
    ctx.record(format!("{name}: length of A/I^(n+1) for n = 1..5"), tuple(&want), got);
    let n_max = ctx.n_max();
    ctx.record(format!("{name}, Q: Sally rank"), 1, sally_rank(&a, &i, &q, n_max).map(|r| r.rank));
    ctx.record(format!("{name}, Q': Sally rank"), 0, sally_rank(&a, &i, &qp, n_max).map(|r| r.rank));
}

fn group_8(ctx: &mut Ctx) {
    let name = "A = k + J, B = (X^2,Y^2)∩(Z,W), J = (x,y)^2+(z,w)";
    let setup = counterexample_ring(ctx, 2).and_then(|b| {
        let (q, qp) = q_pair(ctx, &b, 2)?;
        Ok((b, q, qp))
    });
    let (b, q, qp) = match setup {
        Ok(v) => v,
        Err(e) => return ctx.record(format!("{name}: setup"), "ok", Err::<String, _>(e)),
    };
    let j = ctx.ideal(&m_power_plus_zw(2));
    let n_max = ctx.n_max();
    let hm = k_plus_j_hilbert(&b, &j, n_max);
    ctx.record(format!("{name}: (e0,e1,e2) of m"), "(8, 2, -6)", hm.as_ref().map(|r| tuple(&r.coeffs)).map_err(Clone::clone));
    ctx.record(format!("{name}: length of A/m^2"), 14, hm.as_ref().map(|r| r.samples[&1]).map_err(Clone::clone));
    let e1q = k_plus_j_parameter_hilbert(&b, &j, &q, n_max).map(|r| r.coeffs[1]);
    let e1qp = k_plus_j_parameter_hilbert(&b, &j, &qp, n_max).map(|r| r.coeffs[1]);
    ctx.record(format!("{name}, Q=(x^2-z, y^2-w)A: e1"), -6, e1q.clone());
    ctx.record(format!("{name}, Q'=(xy-z, x^2+y^2-w)A: e1"), -5, e1qp.clone());
    let rq = sally_rank(&b, &j, &q, n_max).map(|r| r.rank);
    let rqp = sally_rank(&b, &j, &qp, n_max).map(|r| r.rank);
    ctx.record(format!("{name}, Q: Sally rank"), 1, rq.clone());
    ctx.record(format!("{name}, Q': Sally rank"), 0, rqp.clone());
    let identity = (|| -> Result<String> {
        let h = hm.clone()?;
        let rhs = h.coeffs[1] - h.coeffs[0] + 1;
        Ok(tuple(&[e1q.clone()? + rq.clone()?, e1qp.clone()? + rqp.clone()?, rhs]))
    })();
    ctx.record(format!("{name}: (e1_Q + rank_Q, e1_Q' + rank_Q', e1_m - e0_m + 1)"), "(-5, -5, -5)", identity);
}

fn kernel_cases(ctx: &Ctx) -> Result<Vec<KernelCase>> {
    let mut out = Vec::new();
    for l in 1..=3u32 {
        let (a, q) = planes(ctx, l)?;
        out.push(KernelCase {
            label: format!("(X^{l},Y^{l})∩(Z,W), Q=(x-z,y-w)"),
            ring: a,
            q,
            c: vec![format!("x^{l}"), format!("y^{l}"), "z".into(), "w".into()],
        });
    }
    for l in 2..=3u32 {
        for n in 1..=l {
            let a = ctx.quotient(&xy_power(l), &zw())?;
            let q = ctx.param(&a, &[format!("x^{l} - z"), format!("y^{n} - w")])?;
            let mut c = xy_power(l);
            c.extend(zw());
            out.push(KernelCase {
                label: format!("(X,Y)^{l}∩(Z,W), Q=(x^{l}-z, y^{n}-w)"),
                ring: a,
                q,
                c,
            });
        }
    }
    let a = ctx.quotient(&xy_power(2), &zw())?;
    let q = ctx.param(&a, &s(&["x - z", "y - w"]))?;
    out.push(KernelCase {
        label: "(X,Y)^2∩(Z,W), Q=(x-z, y-w)".into(),
        ring: a,
        q,
        c: m_power_plus_zw(2),
    });
    for n in 2..=3u32 {
        let a = ctx.quotient(&[format!("x^{n}"), "y".into()], &zw())?;
        for l in 1..=n {
            let q = ctx.param(&a, &[format!("x^{l} - z"), "y - w".into()])?;
            out.push(KernelCase {
                label: format!("(X^{n},Y)∩(Z,W), Q=(x^{l}-z, y-w)"),
                ring: a.clone(),
                q,
                c: vec![format!("x^{n}"), "y".into(), "z".into(), "w".into()],
            });
        }
        let a = counterexample_ring(ctx, n)?;
        let (q, qp) = q_pair(ctx, &a, n)?;
        for (tag, qq) in [("Q", q), ("Q'", qp)] {
            out.push(KernelCase {
                label: format!("(X^{n},Y^{n})∩(Z,W), {tag}"),
                ring: a.clone(),
                q: qq,
                c: vec![format!("x^{n}"), format!("y^{n}"), "z".into(), "w".into()],
            });
        }
    }
    Ok(out)
}

/// Length of `A/Q^{n+1}` against `e0 C(n+2,2) + ℓ(T_n)`, `n = 0..=6`.
fn group_9a(ctx: &mut Ctx) {
    let cases = match kernel_cases(ctx) {
        Ok(c) => c,
        Err(e) => return ctx.record("kernel identity: setup", "ok", Err::<String, _>(e)),
    };
    let n_max = ctx.n_max();
    for case in cases {
        let got = (|| -> Result<String> {
            let fit = hilbert_report(&case.ring, &case.q, n_max)?;
            let alg = ArtinAlgebra::new(&ctx.ideal(&case.c))?;
            let act = alg.action_pair(&case.q.lifts()[0], &case.q.lifts()[1]);
            let e0 = fit.coeffs[0];
            let bad: Vec<u32> = (0..=6u32)
                .filter(|&n| {
                    let rhs = e0 * ((n as i64 + 2) * (n as i64 + 1) / 2) + tn_length(&alg, &act, n) as i64;
                    fit.samples[&n] != rhs
                })
                .collect();
            Ok(if bad.is_empty() {
                "holds".to_string()
            } else {
                format!("fails at n = {bad:?}")
            })
        })();
        ctx.record(format!("{}: length of A/Q^(n+1) = e0 C(n+2,2) + dim T_n for n = 0..6", case.label), "holds", got);
    }
}

/// `-ℓ(C) <= e1 <= -ℓ((0) :_C Q)` on every kernel case.
fn group_9b(ctx: &mut Ctx) {
    let cases = match kernel_cases(ctx) {
        Ok(c) => c,
        Err(e) => return ctx.record("kernel bounds: setup", "ok", Err::<String, _>(e)),
    };
    let n_max = ctx.n_max();
    for case in cases {
        let got = (|| -> Result<String> {
            let fit = hilbert_report(&case.ring, &case.q, n_max)?;
            let alg = ArtinAlgebra::new(&ctx.ideal(&case.c))?;
            let act = alg.action_pair(&case.q.lifts()[0], &case.q.lifts()[1]);
            let e1 = fit.coeffs[1];
            let (lo, hi) = (-(alg.dim() as i64), -(act.common_kernel() as i64));
            Ok(if lo <= e1 && e1 <= hi {
                "holds".to_string()
            } else {
                format!("e1 = {e1} outside [{lo}, {hi}]")
            })
        })();
        ctx.record(format!("{}: -length(C) <= e1 <= -length((0):_C Q)", case.label), "holds", got);
    }
}

/// Reduced bases do not depend on the order of the generators.
fn group_9f(ctx: &mut Ctx) {
    let mut ideals: Vec<(String, Ideal)> = Vec::new();
    let cases = match kernel_cases(ctx) {
        Ok(c) => c,
        Err(e) => return ctx.record("basis determinism: setup", "ok", Err::<String, _>(e)),
    };
    for case in &cases {
        ideals.push((format!("defining ideal of {}", case.label), case.ring.defining().clone()));
        ideals.push((format!("a + Q for {}", case.label), case.ring.extend(case.q.lifts())));
        ideals.push((format!("c for {}", case.label), ctx.ideal(&case.c)));
    }
    for n in 2..=3 {
        ideals.push((format!("m^{n}+(z,w)"), ctx.ideal(&m_power_plus_zw(n))));
    }
    for (label, ideal) in ideals {
        let got = (|| -> Result<bool> {
            let base = ideal.gb()?;
            let gens = ideal.gens().to_vec();
            let k = gens.len();
            for shift in 1..k.max(1) {
                let mut perm = gens.clone();
                perm.rotate_left(shift);
                if shift % 2 == 1 {
                    perm.reverse();
                }
                let other = Ideal::new(ideal.ring(), perm).groebner(MonomialOrder::DegRevLex)?;
                if *other != *base {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        ctx.record(format!("{label}: reduced basis independent of generator order"), true, got);
    }
}

/// Runs one check group.
pub fn run_group(cfg: &SuiteConfig, group: &str) -> Result<Vec<Check>> {
    let ring = RingSpec::new(&["x", "y", "z", "w"], cfg.field)?;
    let mut ctx = Ctx {
        cfg: cfg.clone(),
        ring,
        out: Vec::new(),
        group: group.to_string(),
    };
    match group {
        "1" => group_1(&mut ctx),
        "2" => group_2(&mut ctx),
        "3" => group_3(&mut ctx),
        "4" => group_4(&mut ctx),
        "5" => group_5(&mut ctx),
        "6" => group_6(&mut ctx),
        "7" => group_7(&mut ctx),
        "8" => group_8(&mut ctx),
        "9a" => group_9a(&mut ctx),
        "9b" => group_9b(&mut ctx),
        "9f" => group_9f(&mut ctx),
        other => {
            return Err(crate::error::Error::InvalidInput(format!("unknown check group `{other}`")));
        }
    }
    Ok(ctx.out)
}

/// Runs every group in order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for g in GROUPS {
        checks.extend(run_group(cfg, g)?);
    }
    Ok(SuiteReport {
        config: cfg.clone(),
        checks,
        warnings: genericity_warning(cfg.field).into_iter().collect(),
    })
}
