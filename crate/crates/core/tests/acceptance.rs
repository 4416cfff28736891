//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any FAIL.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use buchi::atoms::{add_automaton, eq_automaton, valuation_automaton};
use buchi::interp::{
    base_square_transform, build_interpretation, digit_embed_transform, domain_automaton_avoiding, identity_family,
    in_pairing_language, interleave_transform, one_dimensionalize, refute_pairing, WitnessKind,
};
use buchi::logic::{compile, parse, satisfying_assignments};
use buchi::numeral::{
    digitavoid_decode, digitavoid_encode, from_digits, interleave_decode, interleave_encode, pairgroup_decode,
    pairgroup_encode, to_digits,
};
use buchi::oracle::{
    check_correspondence, check_domain, check_function_graph, check_source, check_target, satisfying_table,
    Relation, Report,
};
use buchi::{Codec, Dfa, Natural};
use common::battery::{BATTERY, BOUND, QUANTIFIER_BOUND};
use common::machines::{equality_machine, interleaved_machine};
use common::laws::{emitted_automata, padding_violation, random_dfa};
use common::zoo::{hand_built, random_zoo};
use common::b;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pass(label: &str, report: Report) -> Result<u64, String> {
    match report {
        Report::Pass { checked } => Ok(checked),
        Report::Fail(c) => Err(format!("{label}: {c}")),
    }
}

fn hand_built_machines() -> Outcome {
    let eq = compile(&parse("x=y").map_err(|e| e.to_string())?, b(2)).map_err(|e| e.to_string())?;
    let eq_dfa = equality_machine();
    ensure(eq_dfa.num_states() == 2 && eq.minimize().isomorphic(&eq_dfa.minimize()).unwrap(), || {
        "x=y is not the hand-built equality machine".into()
    })?;
    let pairs_dfa = interleaved_machine();
    let interleaved = interleave_transform(&eq_dfa, 2, 1).map_err(|e| e.to_string())?;
    ensure(pairs_dfa.num_states() == 6 && interleaved.minimize().isomorphic(&pairs_dfa.minimize()).unwrap(), || {
        "interleaved equality machine is not the six-state machine".into()
    })?;
    ensure(interleaved.canonical() == pairs_dfa.canonical(), || "raw interleave differs from the six-state machine".into())?;
    Ok("x=y ≅ hand-built equality machine (2 states); its interleave ≅ hand-built pair machine (6 states)".into())
}

fn compiler_oracle_agreement() -> Outcome {
    let mut tuples = 0;
    for case in BATTERY {
        let f = parse(case.text).map_err(|e| e.to_string())?;
        for radix in [2, 3] {
            let got = satisfying_assignments(&f, b(radix), BOUND).map_err(|e| e.to_string())?;
            let want = satisfying_table(&f, b(radix), BOUND, QUANTIFIER_BOUND).map_err(|e| e.to_string())?;
            if got != want {
                let diff = got.symmetric_difference(&want).next().cloned();
                return Err(format!("{} in base {radix}: first difference {diff:?}", case.text));
            }
            tuples += got.len();
        }
    }
    Ok(format!("{} formulas × bases 2, 3 below {BOUND}; {tuples} satisfying tuples", BATTERY.len()))
}

fn interleave_correspondence() -> Outcome {
    let interp = one_dimensionalize(&identity_family(b(2), 2).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let codec = &interp.codec;
    let err = |e: buchi::Error| e.to_string();
    let mut checked = pass("domain", check_domain(&interp.domain, codec, 4096).map_err(err)?)?;
    checked += pass("eq", check_target(&interp.equality, Relation::Equality, codec, 4096).map_err(err)?)?;
    checked += pass("val", check_target(&interp.valuation, Relation::Valuation, codec, 4096).map_err(err)?)?;
    checked += pass("add", check_function_graph(&interp.addition, Relation::Addition, codec, 4096, 4).map_err(err)?)?;
    for (name, d, rel) in [
        ("eq", &interp.equality, Relation::Equality),
        ("val", &interp.valuation, Relation::Valuation),
        ("add", &interp.addition, Relation::Addition),
    ] {
        checked += pass(name, check_source(d, rel, codec, 16).map_err(err)?)?;
    }
    Ok(format!("base 2, m = 2, encodings below 4096; {checked} tuples, 0 mismatches"))
}

fn square_correspondence() -> Outcome {
    let mut checked = 0;
    for k in [2, 3] {
        let big = b(k * k);
        let codec = Codec::PairGroup { k: b(k) };
        for (name, atom, rel) in [
            ("eq", eq_automaton(big), Relation::Equality),
            ("add", add_automaton(big), Relation::Addition),
            ("val", valuation_automaton(big), Relation::Valuation),
        ] {
            let t = base_square_transform(&atom).map_err(|e| e.to_string())?.close_padding().minimize();
            let report = check_correspondence(&t, rel, &codec, 256).map_err(|e| e.to_string())?;
            checked += pass(&format!("{name} {}→{k}", k * k), report)?;
        }
    }
    Ok(format!("4→2 and 9→3, inputs below 256; {checked} tuples, 0 mismatches"))
}

fn embed_correspondence() -> Outcome {
    let mut checked = 0;
    for k in [2, 3] {
        let small = b(k);
        let codec = Codec::DigitAvoid { k: small };
        for (name, atom, rel) in [
            ("eq", eq_automaton(small), Relation::Equality),
            ("add", add_automaton(small), Relation::Addition),
            ("val", valuation_automaton(small), Relation::Valuation),
        ] {
            let t = digit_embed_transform(&atom).map_err(|e| e.to_string())?;
            let report = check_correspondence(&t, rel, &codec, 243).map_err(|e| e.to_string())?;
            checked += pass(&format!("{name} {k}→{}", k + 1), report)?;
        }
        let dom = domain_automaton_avoiding(small).map_err(|e| e.to_string())?;
        for y in 0..1000u64 {
            let free = to_digits(&Natural::from(y), b(k + 1)).digits().iter().all(|&d| d != k);
            ensure(dom.accepts_values(&[y]).unwrap() == free, || format!("domain {k}→{} wrong at {y}", k + 1))?;
        }
    }
    Ok(format!("2→3 and 3→4, inputs below 243; {checked} tuples; domains exact below 1000"))
}

fn composite_interpretations() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    for (k, l) in [(3, 2), (2, 3), (5, 2), (4, 3)] {
        let interp = build_interpretation(b(k), b(l)).map_err(|e| e.to_string())?;
        let path = dir.path().join(format!("{k}-{l}"));
        buchi::cli::write_bundle(&interp, &path).map_err(|e| e.to_string())?;
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let args = ["buchi", "check", "--bundle", path.to_str().unwrap(), "--bound", "100"];
        let code = buchi::cli::run(args, &mut out, &mut err);
        let text = String::from_utf8_lossy(&out).trim().to_string();
        ensure(code == 0, || format!("BA_{k} in BA_{l}: exit {code}: {text}{}", String::from_utf8_lossy(&err)))?;
        lines.push(format!("({k},{l}) {text}"));
    }
    Ok(lines.join("; "))
}

fn refuter() -> Outcome {
    let mut machines: Vec<(String, Dfa)> = hand_built().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    ensure(machines.len() >= 10 && machines.iter().all(|(_, d)| d.num_states() <= 12), || "zoo too small".into())?;
    let hand = machines.len();
    machines.extend(random_zoo(100, 8, 0xB0C4).into_iter().enumerate().map(|(i, d)| (format!("random #{i}"), d)));
    let (mut positives, mut negatives) = (0, 0);
    for (name, d) in &machines {
        let w = refute_pairing(d).map_err(|e| format!("{name}: {e}"))?;
        let x = u128::try_from(&w.pair.0).map_err(|e| e.to_string())?;
        let y = u128::try_from(&w.pair.1).map_err(|e| e.to_string())?;
        let member = x.is_power_of_two() && y.is_power_of_two() && y.trailing_zeros() == 2 * x.trailing_zeros();
        ensure(member == in_pairing_language(&w.pair.0, &w.pair.1), || format!("{name}: membership disagrees"))?;
        let accepted = d.accepts_tuple(&[w.pair.0.clone(), w.pair.1.clone()]).unwrap();
        let ok = match w.kind {
            WitnessKind::FalsePositive => accepted && !member,
            WitnessKind::FalseNegative => !accepted && member,
        };
        ensure(ok, || format!("{name}: {w} not misclassified"))?;
        match w.kind {
            WitnessKind::FalsePositive => positives += 1,
            WitnessKind::FalseNegative => negatives += 1,
        }
    }
    Ok(format!("{hand} hand-built + 100 random; {positives} false positives, {negatives} false negatives, all verified"))
}

fn cli_runs_identically(args: &[&str]) -> Result<(), String> {
    let run = || Command::new(env!("CARGO_BIN_EXE_buchi")).args(args).output().map_err(|e| e.to_string());
    let (a, c) = (run()?, run()?);
    ensure(a.status.success() && a.stdout == c.stdout && a.stderr == c.stderr, || format!("{args:?} differs"))
}

fn structural() -> Outcome {
    let emitted = emitted_automata();
    for (i, (label, d)) in emitted.iter().enumerate() {
        if let Some(w) = padding_violation(d, i as u64) {
            return Err(format!("{label}: padding changes the verdict on {w}"));
        }
    }

    for seed in 0..100u64 {
        let base = b(2 + (seed % 2) as u32);
        let x = random_dfa(seed, base, 2, 5);
        let y = random_dfa(seed + 1000, base, 2, 5);
        let same = |p: &Dfa, q: &Dfa| p.equivalent(q).unwrap().is_equal();
        let laws = [
            same(&x.union(&y).unwrap().complement(), &x.complement().intersect(&y.complement()).unwrap()),
            same(&x.intersect(&y).unwrap().complement(), &x.complement().union(&y.complement()).unwrap()),
            same(&x.complement().complement(), &x),
            x.intersect(&x.complement()).unwrap().is_empty(),
            same(&x.union(&x.complement()).unwrap(), &Dfa::universal(base, 2).unwrap()),
        ];
        ensure(laws.iter().all(|&l| l), || format!("boolean law fails for seed {seed}"))?;
    }

    let n = |x: u64| Natural::from(x);
    for x in 0..10_000u64 {
        for radix in [2, 3, 10] {
            let base = b(radix);
            ensure(from_digits(to_digits(&n(x), base).digits(), base).unwrap() == n(x), || format!("digits {x}"))?;
            for m in 1..=3 {
                let parts: Vec<Natural> = (0..m as u64).map(|i| n((x * (i + 7)) % 997)).collect();
                let back = interleave_decode(&interleave_encode(&parts, base), base, m);
                ensure(back == parts, || format!("interleave {parts:?} in base {radix}"))?;
            }
        }
        for k in [2, 3] {
            ensure(pairgroup_decode(&pairgroup_encode(&n(x), b(k)), b(k)) == n(x), || format!("pairgroup {x}"))?;
            let avoided = digitavoid_decode(&digitavoid_encode(&n(x), b(k)), b(k)).map_err(|e| e.to_string())?;
            ensure(avoided == n(x), || format!("digitavoid {x}"))?;
        }
    }
    for (k, l) in [(3, 2), (2, 3), (5, 2), (4, 3)] {
        let codec = build_interpretation(b(k), b(l)).map_err(|e| e.to_string())?.codec;
        for x in 0..10_000u64 {
            let y = codec.apply(&[n(x)]).map_err(|e| e.to_string())?;
            ensure(codec.invert(&y) == Some(vec![n(x)]), || format!("codec {k}→{l} at {x}"))?;
        }
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let eq_dfa = dir.path().join("eq.json");
    std::fs::write(&eq_dfa, equality_machine().to_json()).map_err(|e| e.to_string())?;
    let eq_dfa = eq_dfa.to_str().unwrap();
    cli_runs_identically(&["decide", "--base", "3", "A x E y (V(y) = y & x <= y)"])?;
    cli_runs_identically(&["compile", "--base", "2", "E z (x + z = y & V(z) = z)"])?;
    cli_runs_identically(&["compile", "--base", "3", "V(x + y) = z", "--format", "dot"])?;
    cli_runs_identically(&["transform", "--in", eq_dfa, "interleave", "--m", "2", "--r", "1"])?;
    cli_runs_identically(&["refute", "--in", eq_dfa])?;
    Ok(format!("{} emitted automata padding-invariant; 100 law checks; codecs round-trip below 10^4; CLI deterministic", emitted.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("hand-built machines", hand_built_machines),
        ("compiler/oracle agreement", compiler_oracle_agreement),
        ("interleave correspondence", interleave_correspondence),
        ("base-square correspondence", square_correspondence),
        ("digit-embed correspondence", embed_correspondence),
        ("composite interpretations", composite_interpretations),
        ("pairing refuter", refuter),
        ("structural suites", structural),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        total += took;
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({:.1} s): {detail}", i + 1, took.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({:.1} s): {detail}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria pass in {:.1} s", criteria.len() - failed, criteria.len(), total.as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
