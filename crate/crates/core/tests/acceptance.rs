//! End-to-end acceptance matrix: one line per criterion.

use std::collections::BTreeMap;

use hkit_core::groebner::truncated_colength_oracle;
use hkit_core::hilbert::{extract_coeffs, hilbert_report, ParameterIdeal, QuotientRing};
use hkit_core::suite::{run_suite, Check, SuiteConfig, SuiteReport};
use hkit_core::{Field, Ideal, Monomial, Polynomial, RingSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_checks(checks: &[&Check]) -> Outcome {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("\n    {}: expected {}, got {}", c.key, c.expected, c.actual))
        .collect();
    Outcome {
        pass: !checks.is_empty() && failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            format!("{} of {} checks failed{}", failed.len(), checks.len(), failed.concat())
        },
    }
}

fn group<'a>(report: &'a SuiteReport, g: &str) -> Vec<&'a Check> {
    report.checks.iter().filter(|c| c.group == g).collect()
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

fn random_element(rng: &mut ChaCha8Rng, ring: &hkit_core::Ring, max_deg: u32) -> Polynomial {
    let mut f = Polynomial::zero(ring);
    for i in 0..=max_deg {
        for j in 0..=max_deg - i {
            if i + j == 0 || rng.gen_bool(0.4) {
                continue;
            }
            let c = rng.gen_range(-5i64..=5);
            let m = Monomial::from_exponents(&[i, j]);
            f = f.add(&Polynomial::monomial(ring, m, ring.field().from_i64(c)));
        }
    }
    f
}

/// Zero defining ideal in `k[x,y]`: every parameter pair has `e1 = e2 = 0`
/// and `e0 = length(A/Q)`.
fn cohen_macaulay_sanity() -> Outcome {
    let ring = RingSpec::new(&["x", "y"], Field::default()).unwrap();
    let a = QuotientRing::new(Ideal::zero(&ring), 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut tried, mut bad) = (0, Vec::new());
    while tried < 20 {
        let f = random_element(&mut rng, &ring, 2);
        let g = random_element(&mut rng, &ring, 3);
        let Ok(q) = ParameterIdeal::new(&a, vec![f.clone(), g.clone()]) else {
            continue;
        };
        tried += 1;
        let r = hilbert_report(&a, &q, 8).unwrap();
        let colength = a.colength(q.lifts()).unwrap() as i64;
        if r.coeffs[1] != 0 || r.coeffs[2] != 0 || r.coeffs[0] != colength {
            bad.push(format!("({f}, {g}) -> {:?}, colength {colength}", r.coeffs));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{tried} pairs{}", bad.iter().map(|b| format!("\n    {b}")).collect::<String>()),
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, nv: usize, deg: u32) -> Monomial {
    let mut e = vec![0u32; nv];
    for _ in 0..deg {
        e[rng.gen_range(0..nv)] += 1;
    }
    Monomial::from_exponents(&e)
}

/// Local colength against `dim R/(J + m^N)` at the first `N` where the
/// truncations stop growing.
fn local_colength_vs_oracle() -> Outcome {
    let names = ["a", "b", "c", "d"];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad = Vec::new();
    let mut non_global = 0;
    for _ in 0..50 {
        let nv = rng.gen_range(1..=4);
        let ring = RingSpec::new(&names[..nv], Field::default()).unwrap();
        let field = ring.field();
        let mut gens = Vec::new();
        // lowest-degree forms contain a pure power of every variable
        for i in 0..nv {
            let a = rng.gen_range(1..=3u32);
            let mut e = vec![0u32; nv];
            e[i] = a;
            let mut g = Polynomial::monomial(&ring, Monomial::from_exponents(&e), field.one());
            if rng.gen_bool(0.7) {
                let deg = a + rng.gen_range(1..=2);
                let c = [1i64, -1, 2][rng.gen_range(0..3)];
                g = g.add(&Polynomial::monomial(&ring, random_monomial(&mut rng, nv, deg), field.from_i64(c)));
            }
            gens.push(g);
        }
        for _ in 0..rng.gen_range(0..=2) {
            let deg = rng.gen_range(1..=3);
            let m1 = random_monomial(&mut rng, nv, deg);
            let mut g = Polynomial::monomial(&ring, m1, field.one());
            if rng.gen_bool(0.5) {
                let deg = rng.gen_range(1..=4);
                let m2 = random_monomial(&mut rng, nv, deg);
                g = g.sub(&Polynomial::monomial(&ring, m2, field.one()));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        let ideal = Ideal::new(&ring, gens);
        let mut n = 1;
        let mut prev = truncated_colength_oracle(&ideal, n);
        loop {
            let next = truncated_colength_oracle(&ideal, n + 1);
            if next == prev {
                break;
            }
            prev = next;
            n += 1;
        }
        let got = ideal.local_colength();
        let global = ideal.gb().ok().and_then(|gb| gb.standard_monomials(10_000).map(|s| s.len()));
        if global != Some(prev) {
            non_global += 1;
        }
        if got.as_ref().ok() != Some(&prev) {
            let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
            bad.push(format!("({}) oracle {prev}, got {got:?}", gens.join(", ")));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "50 ideals, {non_global} with extra points away from the origin{}",
            bad.iter().map(|b| format!("\n    {b}")).collect::<String>()
        ),
    }
}

/// Samples built from a known tuple, optionally disturbed at small `n`.
fn extraction_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = Vec::new();
    for k in 0..100 {
        let d = rng.gen_range(1..=3usize);
        let mut coeffs = vec![rng.gen_range(1..=60i64)];
        coeffs.extend((0..d).map(|_| rng.gen_range(-40..=40i64)));
        let value = |n: i64| -> i64 {
            (0..=d)
                .map(|i| {
                    let s = if i % 2 == 0 { 1 } else { -1 };
                    s * coeffs[i] * binom(n + (d - i) as i64, (d - i) as i64)
                })
                .sum()
        };
        let mut samples: BTreeMap<u32, i64> = (0..=(d as u32 + 6)).map(|n| (n, value(n as i64))).collect();
        if k % 2 == 1 {
            *samples.get_mut(&0).unwrap() += rng.gen_range(1..=5);
        }
        match extract_coeffs(&samples, d) {
            Ok(r) if r.coeffs == coeffs => {}
            other => bad.push(format!("{coeffs:?} -> {:?}", other.map(|r| r.coeffs))),
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("100 tuples{}", bad.iter().map(|b| format!("\n    {b}")).collect::<String>()),
    }
}

fn fields_agree(fp: &SuiteReport, qq: &SuiteReport) -> Outcome {
    let key = |r: &SuiteReport| -> Vec<(String, String, String)> {
        r.checks.iter().map(|c| (c.group.clone(), c.key.clone(), c.actual.clone())).collect()
    };
    let (a, b) = (key(fp), key(qq));
    let diffs: Vec<String> = a
        .iter()
        .zip(&b)
        .filter(|(x, y)| x != y)
        .map(|(x, y)| format!("\n    {}: {} vs {}", x.1, x.2, y.2))
        .collect();
    Outcome {
        pass: a.len() == b.len() && diffs.is_empty() && qq.all_pass(),
        detail: format!("{} results compared{}", a.len(), diffs.concat()),
    }
}

#[test]
fn acceptance() {
    let fp = run_suite(&SuiteConfig::default()).expect("suite runs over F_32003");
    let qq = run_suite(&SuiteConfig {
        field: Field::Rationals,
        ..SuiteConfig::default()
    })
    .expect("suite runs over Q");

    let mut lines: Vec<(String, Outcome)> = Vec::new();
    for g in ["1", "2", "3", "4", "5", "6", "7", "8", "9a", "9b"] {
        lines.push((g.to_string(), from_checks(&group(&fp, g))));
    }
    lines.push(("9c".into(), cohen_macaulay_sanity()));
    lines.push(("9d".into(), local_colength_vs_oracle()));
    lines.push(("9e".into(), extraction_round_trip()));
    lines.push(("9f".into(), from_checks(&group(&fp, "9f"))));
    lines.push(("9g".into(), fields_agree(&fp, &qq)));

    let nine = lines.iter().filter(|(g, _)| g.starts_with('9')).all(|(_, o)| o.pass);
    for (g, o) in &lines {
        println!("criterion {g:<3} {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("criterion 9   {}", if nine { "PASS" } else { "FAIL" });
    let failed: Vec<&str> = lines.iter().filter(|(_, o)| !o.pass).map(|(g, _)| g.as_str()).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
