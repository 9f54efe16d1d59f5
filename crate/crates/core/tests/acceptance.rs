//! Acceptance suite. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p geonum --test acceptance -- --nocapture --test-threads=1`.

use std::time::{Duration, Instant};

use geonum::blade::Blade;
use geonum::classify::{classify_complex, classify_real};
use geonum::expr::{evaluate, format};
use geonum::iso::{build_iso, verify_map, IsoKind};
use geonum::linalg::rank;
use geonum::random::{random_multivector, rng};
use geonum::rep::{null_frame, null_vectors, Representer};
use geonum::{int, Multivector, Rational, Signature};

fn report(id: u32, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("PASS {id:>2} {name}: {detail}"),
        Err(detail) => {
            println!("FAIL {id:>2} {name}: {detail}");
            panic!("criterion {id} ({name}) failed: {detail}");
        }
    }
}

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

fn signatures(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max_n).flat_map(|n| (0..=n).map(move |p| (p, n - p)))
}

/// Table 1 as printed: row `n` lists the entries for `p - q = n, n-2, ..., -n`.
const TABLE1: [&[&str]; 8] = [
    &["R"],
    &["2R", "C"],
    &["M2(R)", "M2(R)", "Q"],
    &["M2(C)", "M2(2R)", "M2(C)", "2Q"],
    &["M2(Q)", "M4(R)", "M4(R)", "M2(Q)", "M2(Q)"],
    &["M2(2Q)", "M4(C)", "M4(2R)", "M4(C)", "M2(2Q)", "M4(C)"],
    &["M4(Q)", "M4(Q)", "M8(R)", "M8(R)", "M4(Q)", "M4(Q)", "M8(R)"],
    &["M8(C)", "M4(2Q)", "M8(C)", "M8(2R)", "M8(C)", "M4(2Q)", "M8(C)", "M8(2R)"],
];

#[test]
fn criterion_01_table1() {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut count = 0;
    for (n, row) in TABLE1.iter().enumerate() {
        for (slot, &want) in row.iter().enumerate() {
            // p - q = n - 2*slot
            let q = slot;
            let p = n - slot;
            count += 1;
            let got = classify_real(p, q).to_string();
            if got != want {
                mismatches.push(format!("G({p},{q}): {got} != {want}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let outcome = if !mismatches.is_empty() {
        Err(mismatches.join("; "))
    } else if count != 36 {
        Err(format!("{count} entries checked"))
    } else if elapsed >= Duration::from_secs(1) {
        Err(format!("took {elapsed:?}"))
    } else {
        let spot = (classify_real(3, 2).to_string(), classify_real(0, 4).to_string());
        if spot != ("M4(2R)".into(), "M2(Q)".into()) {
            Err(format!("spot checks gave {spot:?}"))
        } else {
            Ok(format!("36/36 entries in {elapsed:?}"))
        }
    };
    report(1, "Table 1 oracle", outcome);
}

#[test]
fn criterion_02_table4() {
    let want = ["C", "2C", "M2(C)", "M2(2C)", "M4(C)", "M4(2C)", "M8(C)", "M8(2C)"];
    let bad: Vec<String> = (0..8)
        .filter(|&n| classify_complex(n).to_string() != want[n])
        .map(|n| format!("n={n}: {}", classify_complex(n)))
        .collect();
    report(
        2,
        "Table 4 oracle",
        if bad.is_empty() { Ok("8/8 entries".into()) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_03_derivation_chain() {
    let derived = [
        ((0, 0), "R"),
        ((0, 1), "C"),
        ((0, 2), "Q"),
        ((0, 4), "M2(Q)"),
        ((0, 5), "M4(C)"),
        ((0, 6), "M8(R)"),
        ((0, 7), "M8(2R)"),
        ((1, 0), "2R"),
        ((2, 0), "M2(R)"),
        ((3, 0), "M2(C)"),
        ((4, 0), "M2(Q)"),
        ((5, 0), "M2(2Q)"),
        ((6, 0), "M4(Q)"),
        ((7, 0), "M8(C)"),
    ];
    let mut bad: Vec<String> = derived
        .iter()
        .filter(|((p, q), want)| classify_real(*p, *q).to_string() != *want)
        .map(|((p, q), want)| format!("G({p},{q}) = {} != {want}", classify_real(*p, *q)))
        .collect();
    // intermediate steps of the chain, each realized by a verified map
    let steps = [
        (IsoKind::Shift4, (4, 2), (0, 6)),
        (IsoKind::Swap, (4, 2), (3, 3)),
        (IsoKind::Swap, (2, 0), (1, 1)),
        (IsoKind::Swap, (3, 0), (1, 2)),
        (IsoKind::Swap, (4, 0), (1, 3)),
        (IsoKind::Swap, (5, 0), (1, 4)),
        (IsoKind::Swap, (6, 0), (1, 5)),
        (IsoKind::Swap, (7, 0), (1, 6)),
    ];
    for (kind, (p, q), (dp, dq)) in steps {
        let map = build_iso(kind, p, q).unwrap();
        if map.domain() != sig(dp, dq) {
            bad.push(format!("{kind:?}({p},{q}) has domain {}", map.domain()));
        }
        let r = verify_map(&map);
        if !r.all_passed() {
            bad.push(format!("{kind:?}({p},{q}): {r}"));
        }
        if classify_real(p, q) != classify_real(dp, dq) {
            bad.push(format!("G({p},{q}) and G({dp},{dq}) classify differently"));
        }
    }
    report(
        3,
        "derivation chain",
        if bad.is_empty() { Ok(format!("{} derivations, {} maps", derived.len(), steps.len())) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_04_null_vector_products() {
    let s = sig(1, 1);
    let nv = null_vectors(s, 1).unwrap();
    let (a, b) = (nv.a.clone(), nv.b.clone());
    let ab = &a * &b;
    let ba = &b * &a;
    let zero = Multivector::zero(s);
    let basis = [&a, &b, &ab, &ba];
    let names = ["a", "b", "ab", "ba"];
    // rows: left factor; columns: right factor
    let table = [
        [&zero, &ab, &zero, &a],
        [&ba, &zero, &b, &zero],
        [&a, &zero, &ab, &zero],
        [&zero, &b, &zero, &ba],
    ];
    let mut bad = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let got = basis[i] * basis[j];
            if &got != table[i][j] {
                bad.push(format!("{}*{} = {got}", names[i], names[j]));
            }
        }
    }
    report(
        4,
        "null-vector product table",
        if bad.is_empty() { Ok("16/16 products".into()) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_05_conjugations() {
    let s = sig(2, 3);
    let g = "1+2*e1-3*f12+4*e12*f3";
    let cases = [
        ("reverse", format!("rev({g})"), "1 + 2*e1 + 3*f12 - 4*e12f3"),
        ("inversion", format!("inv({g})"), "1 - 2*e1 + 3*f12 - 4*e12f3"),
        ("mixed", format!("conj({g})"), "1 - 2*e1 + 3*f12 + 4*e12f3"),
    ];
    let mut bad = Vec::new();
    for (name, text, want) in &cases {
        let got = format(&evaluate::<Rational>(text, s).unwrap());
        if got != *want {
            bad.push(format!("{name}: got \"{got}\", printed \"{want}\""));
        }
    }
    report(
        5,
        "conjugation oracle",
        if bad.is_empty() { Ok("3/3 byte-exact".into()) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_06_quaternions() {
    let s = sig(0, 2);
    let i: Multivector = evaluate("f1", s).unwrap();
    let j: Multivector = evaluate("f2", s).unwrap();
    let k = &i * &j;
    let minus_one = Multivector::scalar(s, int(-1));
    let checks = [
        ("i^2", &i * &i),
        ("j^2", &j * &j),
        ("k^2", &k * &k),
        ("ijk", &(&i * &j) * &k),
    ];
    let bad: Vec<String> = checks
        .iter()
        .filter(|(_, v)| *v != minus_one)
        .map(|(n, v)| format!("{n} = {v}"))
        .collect();
    report(
        6,
        "quaternion relations",
        if bad.is_empty() { Ok("i^2 = j^2 = k^2 = ijk = -1".into()) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_07_representation_homomorphism() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (p, q) in signatures(6) {
        let s = sig(p, q);
        let rep = Representer::new(s).unwrap();
        if rep.shape() != classify_real(p, q) {
            bad.push(format!("G({p},{q}) shape {}", rep.shape()));
        }
        let mut r = rng(1000 + 10 * p as u64 + q as u64);
        for _ in 0..100 {
            let g1 = random_multivector(s, &mut r);
            let g2 = random_multivector(s, &mut r);
            let lhs = rep.represent(&(&g1 * &g2)).unwrap();
            let rhs = rep.represent(&g1).unwrap().try_mul(&rep.represent(&g2).unwrap()).unwrap();
            pairs += 1;
            if lhs != rhs {
                bad.push(format!("G({p},{q}): g1 = {g1}, g2 = {g2}"));
                break;
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        bad.push(format!("took {elapsed:?}"));
    }
    report(
        7,
        "representation homomorphism",
        if bad.is_empty() { Ok(format!("{pairs} pairs over 28 signatures in {elapsed:?}")) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_08_faithfulness() {
    let mut bad = Vec::new();
    let mut count = 0;
    for (p, q) in signatures(5) {
        let s = sig(p, q);
        let rep = Representer::new(s).unwrap();
        let rows: Vec<Vec<Rational>> = (0..s.dim() as u32)
            .map(|m| {
                let blade = Multivector::from_blade(s, Blade::from_mask(m), int(1));
                rep.represent(&blade).unwrap().flat_coords()
            })
            .collect();
        let r = rank(&rows);
        count += 1;
        if r != s.dim() {
            bad.push(format!("G({p},{q}): rank {r} of {}", s.dim()));
        }
    }
    report(
        8,
        "faithfulness",
        if bad.is_empty() { Ok(format!("full rank for {count} signatures")) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_09_structure_maps() {
    let mut bad = Vec::new();
    let mut count = 0;
    for (p, q) in signatures(6) {
        for kind in [IsoKind::EvenSub, IsoKind::Swap, IsoKind::Shift4] {
            let valid = match kind {
                IsoKind::EvenSub => true,
                IsoKind::Swap => p >= 1,
                IsoKind::Shift4 => p >= 4,
            };
            if !valid {
                assert!(build_iso(kind, p, q).is_err());
                continue;
            }
            let map = build_iso(kind, p, q).unwrap();
            let r = verify_map(&map);
            count += 1;
            if !r.all_passed() {
                bad.push(format!("{kind:?}({p},{q}):\n{r}"));
            }
            if kind == IsoKind::Shift4 {
                // images of the first three new f-generators multiply to -e4
                let imgs = map.images();
                let first = p - 4;
                let prod = &(&imgs[first] * &imgs[first + 1]) * &imgs[first + 2];
                let e4: Multivector = evaluate("e4", sig(p, q)).unwrap();
                if prod != -e4 {
                    bad.push(format!("Shift4({p},{q}): f'a f'b f'c = {prod}"));
                }
            }
        }
    }
    report(
        9,
        "structure-theorem maps",
        if bad.is_empty() { Ok(format!("{count} maps verified")) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_10_null_frames() {
    let mut bad = Vec::new();
    for k in 1..=3 {
        for plus_one in [false, true] {
            let frame = null_frame(k, plus_one).unwrap();
            let n = frame.size();
            let zero = Multivector::zero(frame.sig());
            for i in 0..n {
                for j in 0..n {
                    for m in 0..n {
                        for l in 0..n {
                            let got = frame.get(i, j) * frame.get(m, l);
                            let want = if j == m { frame.get(i, l) } else { &zero };
                            if &got != want {
                                bad.push(format!("k={k} plus_one={plus_one}: E{i}{j} E{m}{l}"));
                            }
                        }
                    }
                }
            }
            let trace = (0..n).fold(zero.clone(), |acc, i| &acc + frame.get(i, i));
            if trace != Multivector::one(frame.sig()) {
                bad.push(format!("k={k} plus_one={plus_one}: diagonal sums to {trace}"));
            }
        }
    }
    for plus_one in [false, true] {
        let frame = null_frame(2, plus_one).unwrap();
        let s = frame.sig();
        let v1 = null_vectors(s, 1).unwrap();
        let v2 = null_vectors(s, 2).unwrap();
        let (a1, b1, u1) = (&v1.a, &v1.b, &v1.u_plus);
        let (a2, b2, u2) = (&v2.a, &v2.b, &v2.u_plus);
        let u12 = u1 * u2;
        let display: [[Multivector; 4]; 4] = [
            [u12.clone(), b1 * u2, b2 * u1, b2 * b1],
            [a1 * u2, &u1.reverse() * u2, a1 * b2, -(b2 * &u1.reverse())],
            [a2 * u1, a2 * b1, u1 * &u2.reverse(), b1 * &u2.reverse()],
            [a1 * a2, -(a2 * &u1.reverse()), a1 * &u2.reverse(), u12.reverse()],
        ];
        for (i, row) in display.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                if frame.get(i, j) != want {
                    bad.push(format!("k=2 plus_one={plus_one} entry ({i},{j}) = {}", frame.get(i, j)));
                }
            }
        }
    }
    report(
        10,
        "null frames",
        if bad.is_empty() { Ok("matrix-unit law for k <= 3; k=2 display matches".into()) } else { Err(bad.join("; ")) },
    );
}

fn binomial_row(n: usize) -> Vec<usize> {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1usize; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

#[test]
fn criterion_11_algebra_axioms() {
    let mut bad = Vec::new();
    for (p, q) in signatures(5) {
        let s = sig(p, q);
        let mut r = rng(500 + 10 * p as u64 + q as u64);
        for t in 0..100 {
            let a = random_multivector(s, &mut r);
            let b = random_multivector(s, &mut r);
            let c = random_multivector(s, &mut r);
            if &(&a * &b) * &c != &a * &(&b * &c) {
                bad.push(format!("G({p},{q}) associativity, triple {t}"));
                break;
            }
            if (&a * &b).reverse() != &b.reverse() * &a.reverse() {
                bad.push(format!("G({p},{q}) reverse, pair {t}"));
                break;
            }
        }
        let mut by_grade = vec![0usize; s.n() + 1];
        for m in 0..s.dim() as u32 {
            by_grade[Blade::from_mask(m).grade()] += 1;
        }
        if s.dim() != 1 << s.n() || by_grade != binomial_row(s.n()) {
            bad.push(format!("G({p},{q}) grade counts {by_grade:?}"));
        }
    }
    report(
        11,
        "algebra axioms",
        if bad.is_empty() { Ok("associativity, reverse anti-automorphism, 2^n and C(n,k) for p+q <= 5".into()) } else { Err(bad.join("; ")) },
    );
}

#[test]
fn criterion_12_parser_round_trip() {
    let mut bad = Vec::new();
    let mut count = 0;
    for (p, q) in signatures(5) {
        let s = sig(p, q);
        let mut r = rng(700 + 10 * p as u64 + q as u64);
        for _ in 0..200 {
            let g = random_multivector(s, &mut r);
            let text = format(&g);
            count += 1;
            match evaluate::<Rational>(&text, s) {
                Ok(back) if back == g => {}
                other => {
                    bad.push(format!("G({p},{q}): \"{text}\" -> {other:?}"));
                    break;
                }
            }
        }
    }
    report(
        12,
        "parser round-trip",
        if bad.is_empty() { Ok(format!("{count} multivectors")) } else { Err(bad.join("; ")) },
    );
}
