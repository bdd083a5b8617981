//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trioct::cubic::{binet_scalar, cubic_roots, BinetKind};
use trioct::genfunc::{generating_function, gf_expand, gf_numerator};
use trioct::octseq::lift;
use trioct::sequence::{direct_sum, partial_sum_formula_with, u_term, V0Coefficient};
use trioct::{
    omega_const, Exact, OctSequenceContext, Octonion, Preset, RecurrenceParams, ReferenceTables,
    RootLine,
};

type Check = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ctx(p: Preset, n_max: usize) -> OctSequenceContext<BigInt> {
    OctSequenceContext::new(p.params(), n_max)
}

fn random_params(rng: &mut ChaCha8Rng, rst: i64, init: i64) -> RecurrenceParams<BigInt> {
    let c = [(); 3].map(|_| rng.gen_range(-rst..=rst));
    let v = [(); 3].map(|_| rng.gen_range(-init..=init));
    RecurrenceParams::from_i64(c, v)
}

fn genfunc_table() -> Check {
    let refs = ReferenceTables::published();
    let mut polys = 0;
    for p in Preset::ALL {
        let num = gf_numerator(&ctx(p, 3));
        for slot in 0..8 {
            let computed = num.slot(slot, 3);
            let expected: Vec<BigInt> = (0..3)
                .map(|pow| BigInt::from(refs.genfunc_expected(p, slot, pow).unwrap()))
                .collect();
            ensure(computed == expected, || {
                format!("{p} e{slot}: {computed:?} vs {expected:?}")
            })?;
            polys += 1;
        }
    }
    let errata: Vec<String> = refs
        .genfunc_errata
        .iter()
        .map(|e| {
            let computed = gf_numerator(&ctx(e.preset, 3)).slot(e.slot, 3)[e.power].clone();
            format!(
                "{} e{} x^{}: printed {}, computed {computed}",
                e.preset, e.slot, e.power, e.printed
            )
        })
        .collect();
    Ok(format!(
        "{polys} polynomials; erratum {}",
        errata.join("; ")
    ))
}

fn sum_table() -> Check {
    let refs = ReferenceTables::published();
    let mut checks = 0;
    for p in Preset::ALL {
        let row = refs.sum_row(p).unwrap();
        let c = ctx(p, 110);
        let constant = Octonion::new(row.subtracted.map(BigInt::from));
        ensure(omega_const(c.params()) == -constant.clone(), || {
            format!(
                "{p}: constant {} vs table {}",
                omega_const(c.params()),
                constant
            )
        })?;
        let divisor = BigRational::from_integer(row.divisor.into());
        let mut running = Octonion::<BigInt>::zero();
        for n in 0..=100 {
            running = &running + &c.oct_term(n);
            let direct = running.map(Exact::to_rational);
            let formula = c.sum_octonions(n).map_err(|e| e.to_string())?;
            let mut numer = Octonion::<BigInt>::zero();
            for &(coef, off) in &row.terms {
                numer = &numer + &c.oct_term(n + off).scale(&BigInt::from(coef));
            }
            let table = (&numer - &constant).map(|x| x.to_rational() / divisor.clone());
            ensure(formula == direct && table == direct, || {
                format!("{p} n={n}")
            })?;
            checks += 1;
        }
    }
    Ok(format!("{checks} sums, n <= 100"))
}

fn shift_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut sets: Vec<RecurrenceParams<BigInt>> = Preset::ALL.iter().map(|p| p.params()).collect();
    sets.extend((0..50).map(|_| random_params(&mut rng, 5, 3)));
    let mut checks = 0;
    for params in sets {
        let c = OctSequenceContext::new(params.clone(), 72);
        for m in 3..=20 {
            for n in 0..=50 {
                let (lhs, rhs) = c.shift_formula(n, m).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, || format!("{params} m={m} n={n}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} index shifts over 54 parameter sets"))
}

fn printed_sign() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut sets, mut counterexamples, mut checks) = (0, 0, 0);
    while sets < 200 {
        let params = random_params(&mut rng, 5, 5);
        if params.delta() == BigInt::from(0) {
            continue;
        }
        sets += 1;
        let mut running = BigInt::from(0);
        for (n, v) in params.terms().take(31).enumerate() {
            running += v;
            let direct = running.to_rational();
            let fixed = partial_sum_formula_with(&params, n as u64, V0Coefficient::RPlusSMinusOne)
                .map_err(|e| e.to_string())?;
            ensure(fixed == direct, || {
                format!("{params} n={n}: {fixed} vs {direct}")
            })?;
            let printed =
                partial_sum_formula_with(&params, n as u64, V0Coefficient::RMinusSMinusOne)
                    .unwrap();
            counterexamples += usize::from(printed != direct);
            checks += 1;
        }
    }
    let witness = RecurrenceParams::<BigInt>::from_i64([1, 1, 1], [1, 0, 0]);
    let printed = partial_sum_formula_with(&witness, 0, V0Coefficient::RMinusSMinusOne).unwrap();
    let direct = direct_sum(&witness, 0).to_rational();
    ensure(printed != direct, || {
        "witness agrees with the printed constant".into()
    })?;
    ensure(counterexamples > 0, || {
        "no counterexample to the printed constant".into()
    })?;
    Ok(format!(
        "{checks} exact sums on {sets} sets; printed constant fails {counterexamples} times, witness gives {printed} vs {direct}"
    ))
}

fn binet() -> Check {
    let mut worst = 0.0f64;
    for p in Preset::ALL {
        let c = ctx(p, 40);
        let roots = cubic_roots(c.params()).map_err(|e| e.to_string())?;
        for n in 0..=40usize {
            let pairs = [
                (
                    binet_scalar(&roots, n as u64, BinetKind::V),
                    c.v(n).to_f64(),
                ),
                (
                    binet_scalar(&roots, n as u64, BinetKind::U),
                    u_term(c.params(), n as u64).to_f64(),
                ),
            ];
            let closed = c.oct_binet(n).map_err(|e| e.to_string())?;
            let exact = lift(&c.oct_term(n));
            let comps = closed
                .components()
                .iter()
                .zip(exact.components())
                .map(|(z, e)| (*z, e.re));
            for (z, e) in pairs.into_iter().chain(comps) {
                let scale = e.abs().max(1.0);
                let rel = ((z.re - e).abs() / scale).max(z.im.abs() / scale);
                worst = worst.max(rel);
                ensure(rel <= 1e-8, || format!("{p} n={n}: {z} vs {e}"))?;
            }
        }
    }
    Ok(format!("max relative residual {worst:.2e}"))
}

fn norm() -> Check {
    let mut worst = 0.0f64;
    for p in Preset::ALL {
        let c = ctx(p, 25);
        for n in 0..=25 {
            let z = c.norm_formula(n).map_err(|e| e.to_string())?;
            let exact = c.oct_term(n).norm_sq().to_f64();
            let rel = (z - exact).norm() / exact.max(1.0);
            worst = worst.max(rel);
            ensure(rel <= 1e-6, || format!("{p} n={n}: {z} vs {exact}"))?;
        }
    }
    Ok(format!("max relative residual {worst:.2e}"))
}

fn quadratic() -> Check {
    let (mut worst, mut against_lhs) = (0.0f64, 0.0f64);
    for p in Preset::ALL {
        let c = ctx(p, 30);
        for n in 0..=30 {
            for line in RootLine::ALL {
                let q = c.quad_approx(n, line).map_err(|e| e.to_string())?;
                let rel = q.relative_residual();
                worst = worst.max(rel);
                against_lhs = against_lhs.max(q.residual_against_lhs());
                ensure(rel <= 1e-8, || format!("{p} n={n} {line:?}: {rel:e}"))?;
            }
        }
    }
    Ok(format!(
        "max residual {worst:.2e} relative to term magnitude ({against_lhs:.2e} relative to max(1,|lhs|))"
    ))
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Octonion<BigRational> {
    Octonion::from_fn(|_| {
        BigRational::new(
            rng.gen_range(-20i64..=20).into(),
            rng.gen_range(1i64..=9).into(),
        )
    })
}

fn algebra_laws<T: Exact>(x: &Octonion<T>, y: &Octonion<T>) -> Result<(), String> {
    let xy = x * y;
    ensure(&(x * x) * y == x * &xy, || {
        format!("left alternative: {x}, {y}")
    })?;
    ensure(&(y * x) * x == y * &(x * x), || {
        format!("right alternative: {x}, {y}")
    })?;
    ensure(&xy * x == x * &(y * x), || format!("flexible: {x}, {y}"))?;
    ensure(xy.norm_sq() == x.norm_sq() * y.norm_sq(), || {
        format!("norm: {x}, {y}")
    })?;
    ensure(xy.conj() == &y.conj() * &x.conj(), || {
        format!("conjugation: {x}, {y}")
    })?;
    ensure(x * &x.conj() == Octonion::from_real(x.norm_sq()), || {
        format!("p conj p: {x}")
    })
}

fn algebra() -> Check {
    let e = |i| Octonion::<BigInt>::basis(i);
    let mut triples = 0;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let x = &e(i) + &e(j);
                algebra_laws(&x, &e(k))?;
                // the associator is alternating
                let assoc = |a: &Octonion<BigInt>, b: &Octonion<BigInt>, c: &Octonion<BigInt>| {
                    &(&(a * b) * c) - &(a * &(b * c))
                };
                ensure(
                    assoc(&e(i), &e(j), &e(k)) == -assoc(&e(j), &e(i), &e(k)),
                    || format!("associator e{i} e{j} e{k}"),
                )?;
                triples += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let (x, y) = (rand_rational(&mut rng), rand_rational(&mut rng));
        algebra_laws(&x, &y)?;
    }
    Ok(format!(
        "{triples} basis triples, 1000 random rational pairs"
    ))
}

fn genfunc_roundtrip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut sets: Vec<RecurrenceParams<BigInt>> = Preset::ALL.iter().map(|p| p.params()).collect();
    sets.extend((0..50).map(|_| random_params(&mut rng, 5, 3)));
    for params in &sets {
        let c = OctSequenceContext::new(params.clone(), 50);
        let series = gf_expand(&generating_function(&c), 50).map_err(|e| e.to_string())?;
        for (n, o) in series.iter().enumerate() {
            ensure(*o == c.oct_term(n), || format!("{params} n={n}"))?;
        }
    }
    Ok(format!("n < 50 on {} parameter sets", sets.len()))
}

fn determinism() -> Check {
    let args = [
        "verify", "--preset", "all", "--n-max", "40", "--report", "json",
    ];
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_trioct"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), || {
        format!(
            "exit {:?}: {}",
            a.status.code(),
            String::from_utf8_lossy(&a.stderr)
        )
    })?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: 1,
            name: "generating function table",
            limit: secs(1),
            run: genfunc_table,
        },
        Criterion {
            id: 2,
            name: "summation table",
            limit: secs(1),
            run: sum_table,
        },
        Criterion {
            id: 3,
            name: "index shift",
            limit: secs(5),
            run: shift_identity,
        },
        Criterion {
            id: 4,
            name: "scalar sum constant",
            limit: secs(2),
            run: printed_sign,
        },
        Criterion {
            id: 5,
            name: "closed-form terms",
            limit: secs(1),
            run: binet,
        },
        Criterion {
            id: 6,
            name: "norm closed form",
            limit: secs(1),
            run: norm,
        },
        Criterion {
            id: 7,
            name: "quadratic relations",
            limit: secs(1),
            run: quadratic,
        },
        Criterion {
            id: 8,
            name: "octonion algebra laws",
            limit: secs(5),
            run: algebra,
        },
        Criterion {
            id: 9,
            name: "generating function round trip",
            limit: secs(2),
            run: genfunc_roundtrip,
        },
        Criterion {
            id: 10,
            name: "verify determinism",
            limit: None,
            run: determinism,
        },
    ];
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (result, c.limit) {
            (Ok(detail), Some(limit)) if elapsed > limit => {
                Err(format!("{detail}; took longer than {:.0?}", limit))
            }
            (r, _) => r,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "criterion {:>2} {status} {} ({:.3}s): {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
        failed += usize::from(outcome.is_err());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
