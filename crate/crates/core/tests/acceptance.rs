//! Acceptance checks. Each criterion prints one PASS/FAIL line with its
//! wall time; the process fails if any criterion fails or runs over time.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use workbench::diophantine::{Domain, Polynomial, SearchResult, Solver};
use workbench::dovetail::{Claim, DiagonalValue, Dovetailer};
use workbench::enumerate::group_size;
use workbench::pairing::{cantor_pair, cantor_unpair};
use workbench::pi::{pi_digits, run_position, RunPosition};
use workbench::primrec::{library, polynomial_to_primrec};
use workbench::tm::{Action, Execution, Quadruple, State, Symbol};
use workbench::{parse_machine, run, Enumeration, Machine, RunOutcome};

type Check = fn() -> Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn linear_example() -> Result<(), String> {
    let p = Polynomial::parse("2*x1 - 3*x2 - 1").map_err(|e| e.to_string())?;
    let expected: Vec<Vec<BigInt>> = (0..7).map(|k| ints(&[2 + 3 * k, 1 + 2 * k])).collect();
    let got = Solver::new(Domain::Natural).search_box(&p, 20).map_err(|e| e.to_string())?;
    ensure(got == SearchResult::AllSolutionsInBox { solutions: expected, bound: 20 }, || format!("{got:?}"))
}

fn quadratic_example() -> Result<(), String> {
    let p = Polynomial::parse("x1^2 - x2^2 - 3").map_err(|e| e.to_string())?;
    let got = Solver::new(Domain::Natural).search_box(&p, 100).map_err(|e| e.to_string())?;
    ensure(got == SearchResult::AllSolutionsInBox { solutions: vec![ints(&[2, 1])], bound: 100 }, || format!("{got:?}"))
}

fn loop_machine() -> Result<(), String> {
    let m = parse_machine("q0 1 P q0\n").map_err(|e| e.to_string())?;
    let mut configs = Vec::new();
    for fuel in [10, 1_000, 1_000_000] {
        let outcome = run(&m, &[1], fuel);
        ensure(outcome == RunOutcome::Exhausted { fuel }, || format!("fuel {fuel}: {outcome}"))?;
        let mut exec = Execution::new(&[1]);
        exec.advance(&m, fuel);
        configs.push(exec.config().clone());
    }
    ensure(configs.windows(2).all(|w| w[0] == w[1]), || format!("configurations differ: {configs:?}"))
}

fn doubling_machine() -> Result<(), String> {
    let m = parse_machine(include_str!("../machines/double.tm")).map_err(|e| e.to_string())?;
    for x in 0..=20 {
        match run(&m, &[x], 100_000) {
            RunOutcome::Halted { output, .. } if output == 2 * x => {}
            other => return Err(format!("x = {x}: {other}")),
        }
    }
    Ok(())
}

fn enumeration_prefix() -> Result<(), String> {
    let e = Enumeration::default();
    let a = e.enumerate_prefix(10_000).map_err(|e| e.to_string())?;
    let b = e.enumerate_prefix(10_000).map_err(|e| e.to_string())?;
    ensure(a == b, || "two runs differ".into())?;
    let distinct: HashSet<&Machine> = a.iter().collect();
    ensure(distinct.len() == a.len(), || format!("{} duplicates", a.len() - distinct.len()))?;

    // Group 1, generated directly: every single quadruple over q0..q2.
    let mut group1 = HashSet::new();
    for s in 0..3 {
        for sym in Symbol::ALL {
            for act in Action::ALL {
                for t in 0..3 {
                    group1.insert(vec![Quadruple::new(State(s), sym, act, State(t))]);
                }
            }
        }
    }
    let streamed: HashSet<Vec<Quadruple>> = a[..72].iter().map(|m| m.quadruples().to_vec()).collect();
    ensure(group1.len() == 72 && group_size(1) == 72, || format!("group 1 has {}", group1.len()))?;
    ensure(streamed == group1, || "group 1 contents differ".into())?;
    ensure(a[72].len() == 2, || "index 72 is not the first two-quadruple machine".into())
}

fn dovetail_soundness_and_coverage() -> Result<(), String> {
    const N: u64 = 30;
    let enumeration = Enumeration::default();
    let emissions = Dovetailer::default().dovetail(N).map_err(|e| e.to_string())?;
    for em in &emissions {
        ensure(em.certificate.replay(&enumeration).map_err(|e| e.to_string())?, || {
            format!("certificate does not replay: {:?}", em.certificate)
        })?;
    }
    let emitted: HashSet<(u64, u64, u64, u64)> = emissions
        .iter()
        .map(|e| (e.certificate.machine_index, e.certificate.input, e.certificate.steps, e.certificate.output))
        .collect();
    let mut halting = 0;
    for n in 0..=N {
        let m = enumeration.machine_at(n).map_err(|e| e.to_string())?;
        for x in 0..=N {
            if let RunOutcome::Halted { output, steps } = run(&m, &[x], N) {
                halting += 1;
                ensure(emitted.contains(&(n, x, steps, output)), || format!("missed ({n}, {x})"))?;
            }
        }
    }
    ensure(halting == emissions.len(), || format!("{} emitted, {halting} halting pairs", emissions.len()))
}

fn pairing_roundtrip() -> Result<(), String> {
    for n in 0..=300u64 {
        for x in 0..=300u64 {
            let z = cantor_pair(n, x);
            ensure(z == BigUint::from((n + x) * (n + x + 1) / 2 + x), || format!("pair({n}, {x}) = {z}"))?;
            ensure(cantor_unpair(&z) == (n.into(), x.into()), || format!("unpair({z})"))?;
        }
    }
    Ok(())
}

/// First index whose machine has no q0 quadruple, so it halts at once on every input.
fn empty_machine_index() -> u64 {
    Enumeration::default()
        .iter_from(0)
        .position(|m| m.quadruples().iter().all(|q| q.state_in != State(0)))
        .expect("group 1 contains one") as u64
}

fn diagonal_value() -> Result<(), String> {
    let n_e = empty_machine_index();
    match Dovetailer::default().diagonal_value(n_e, 1).map_err(|e| e.to_string())? {
        DiagonalValue::Defined { value, .. } if value == n_e + 1 => Ok(()),
        other => Err(format!("n_e = {n_e}: {other:?}")),
    }
}

fn diverges_decider_refuted() -> Result<(), String> {
    let decider = |_: u64, _: u64| Claim::Diverges;
    let cx =
        Dovetailer::default().audit(&decider, 200, 1_000).map_err(|e| e.to_string())?.ok_or("no refutation found")?;
    ensure(cx.certificate.replay(&Enumeration::default()).map_err(|e| e.to_string())?, || {
        format!("{:?} does not replay", cx.certificate)
    })
}

fn primitive_recursion() -> Result<(), String> {
    let (add, mul) = (library::add(), library::mul());
    for a in 0..=50u64 {
        for b in 0..=50u64 {
            let sum = add.eval_u64(&[a, b], 1_000_000).map_err(|e| e.to_string())?;
            let product = mul.eval_u64(&[a, b], 1_000_000).map_err(|e| e.to_string())?;
            ensure(sum == BigUint::from(a + b) && product == BigUint::from(a * b), || format!("({a}, {b})"))?;
        }
    }
    // Random polynomials in x, y: up to three monomials of degree <= 2 with coefficients 1..=5.
    let monomials = [[0u32, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10 {
        let terms: Vec<(Vec<u32>, BigInt)> = (0..rng.gen_range(1..=3))
            .map(|_| (monomials[rng.gen_range(0..6)].to_vec(), BigInt::from(rng.gen_range(1..=5))))
            .collect();
        let p = Polynomial::new(vec!["x".into(), "y".into()], terms);
        let term = polynomial_to_primrec(&p).map_err(|e| e.to_string())?;
        for x in 0..20u64 {
            for y in 0..20u64 {
                let direct = p.evaluate_i64(&[x as i64, y as i64]).map_err(|e| e.to_string())?;
                let value = term.eval_u64(&[x, y], 100_000_000).map_err(|e| e.to_string())?;
                ensure(BigInt::from(value) == direct, || format!("{p} at ({x}, {y})"))?;
            }
        }
    }
    Ok(())
}

fn pi_example() -> Result<(), String> {
    const PUBLISHED: &str = "14159265358979323846264338327950288419716939937510";
    let digits = pi_digits(50).map_err(|e| e.to_string())?;
    ensure(digits.to_string() == PUBLISHED, || format!("got {digits}"))?;
    let p = run_position(1, 100).map_err(|e| e.to_string())?;
    ensure(p == RunPosition::Found(4), || format!("run_position(1) = {p}"))?;
    let a = pi_digits(100).map_err(|e| e.to_string())?;
    let b = pi_digits(200).map_err(|e| e.to_string())?;
    ensure(a.digits() == &b.digits()[..100], || "100 and 200 digit runs disagree".into())
}

fn random_machine(rng: &mut ChaCha8Rng) -> Machine {
    let states = rng.gen_range(1..=5u32);
    let mut quadruples = Vec::new();
    for s in 0..states {
        for sym in Symbol::ALL {
            if rng.gen_bool(0.75) {
                let action = Action::ALL[rng.gen_range(0..4)];
                quadruples.push(Quadruple::new(State(s), sym, action, State(rng.gen_range(0..states))));
            }
        }
    }
    Machine::new(quadruples).expect("one quadruple per key")
}

fn fuel_monotonicity_and_purity() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut violations = Vec::new();
    for i in 0..1000 {
        let m = random_machine(&mut rng);
        let input: Vec<u64> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..10)).collect();
        let low = rng.gen_range(0..500);
        let high = low + rng.gen_range(0..500);
        let (a, b) = (run(&m, &input, low), run(&m, &input, high));
        if a != run(&m, &input, low) || b != run(&m, &input, high) {
            violations.push(format!("machine {i}: impure"));
        }
        if a.is_halted() && a != b {
            violations.push(format!("machine {i}: {a} at {low} but {b} at {high}"));
        }
        if let (RunOutcome::Exhausted { .. }, RunOutcome::Halted { steps, .. }) = (a, b) {
            if steps <= low {
                violations.push(format!("machine {i}: exhausted at {low} but halts in {steps}"));
            }
        }
    }
    ensure(violations.is_empty(), || format!("{} violations, first: {}", violations.len(), violations[0]))
}

fn main() -> ExitCode {
    let criteria: [(&str, Option<u64>, Check); 12] = [
        ("linear equation 2x1 - 3x2 = 1, bound 20: the 7 closed-form solutions", Some(1), linear_example),
        ("quadratic x1^2 - x2^2 = 3, bound 100: exactly (2, 1)", Some(1), quadratic_example),
        ("loop machine exhausted at fuel 10, 1e3, 1e6", Some(5), loop_machine),
        ("doubling machine outputs 2x for x = 0..20", Some(5), doubling_machine),
        ("enumeration prefix of 1e4: distinct, stable, group 1 = 72 machines", Some(10), enumeration_prefix),
        ("dovetail(30): certificates replay, full 30x30 coverage", Some(60), dovetail_soundness_and_coverage),
        ("cantor pair/unpair roundtrip for n, x <= 300", Some(1), pairing_roundtrip),
        ("diagonal value at the empty machine is n_e + 1", None, diagonal_value),
        ("always-diverges decider refuted within limit 200", Some(30), diverges_decider_refuted),
        ("primrec add/mul up to 50, 10 polynomials on a 20x20 grid", Some(30), primitive_recursion),
        ("pi: 50 digits, first 5 at position 4, 100 vs 200 digits stable", Some(10), pi_example),
        ("run is pure and fuel-monotone on 1000 random machines", Some(60), fuel_monotonicity_and_purity),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(()), Some(secs)) if elapsed > Duration::from_secs(secs) => Err(format!("took longer than {secs} s")),
            (r, _) => r,
        };
        let limit = limit.map_or("none".to_string(), |s| format!("{s} s"));
        match result {
            Ok(()) => println!("PASS  {name}  [{elapsed:.2?}, limit {limit}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  [{elapsed:.2?}, limit {limit}]: {why}");
            }
        }
    }
    println!("\n{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
