//! Sampled property suite for a single algebra.

use crate::classify::classify_real;
use crate::expr::{evaluate, format};
use crate::iso::{Check, Report, VerifyOptions};
use crate::linalg::rank;
use crate::multivector::Multivector;
use crate::random::{random_multivector, rng};
use crate::rep::Representer;
use crate::scalar::{ComplexRational, Rational, Scalar};
use crate::signature::{Field, Signature};

/// Largest `p + q` for which the matrix-representation checks run.
pub const REP_CHECK_MAX_N: usize = 8;

fn first_failure<S: Scalar>(
    pairs: &[(Multivector<S>, Multivector<S>, Multivector<S>)],
    law: impl Fn(&Multivector<S>, &Multivector<S>, &Multivector<S>) -> bool,
) -> Option<String> {
    pairs
        .iter()
        .position(|(a, b, c)| !law(a, b, c))
        .map(|i| format!("sample {i}: a = {}, b = {}", pairs[i].0, pairs[i].1))
}

fn algebra_checks<S: Scalar>(report: &mut Report, samples: &[(Multivector<S>, Multivector<S>, Multivector<S>)]) {
    let Some((g, _, _)) = samples.first() else { return };
    let sig = g.sig();

    report.push(Check::new(
        "associativity",
        first_failure(samples, |a, b, c| &(a * b) * c == a * &(b * c)),
    ));
    report.push(Check::new(
        "reverse anti-automorphism",
        first_failure(samples, |a, b, _| (a * b).reverse() == &b.reverse() * &a.reverse()),
    ));
    report.push(Check::new(
        "inversion automorphism",
        first_failure(samples, |a, b, _| (a * b).inversion() == &a.inversion() * &b.inversion()),
    ));
    report.push(Check::new(
        "grade partition",
        first_failure(samples, |a, _, _| {
            let sum = (0..=sig.n()).fold(Multivector::zero(sig), |acc, k| &acc + &a.grade_project(k).expect("k <= n"));
            &sum == a
        }),
    ));
    report.push(Check::new(
        "format round-trip",
        first_failure(samples, |a, _, _| evaluate::<S>(&format(a), sig).as_ref() == Ok(a)),
    ));

    let mut failure = None;
    'gens: for i in 0..sig.n() {
        let gi = Multivector::<S>::generator(sig, i);
        let want = Multivector::scalar(sig, S::from_i64(sig.generator_square(i) as i64));
        if &gi * &gi != want {
            failure = Some(format!("generator slot {i} squares to {}", &gi * &gi));
            break;
        }
        for j in i + 1..sig.n() {
            let gj = Multivector::<S>::generator(sig, j);
            if &gi * &gj != -(&gj * &gi) {
                failure = Some(format!("generator slots {i}, {j} commute"));
                break 'gens;
            }
        }
    }
    report.push(Check::new("generator relations", failure));
}

/// Runs the property suite for `sig` with sampled elements.
pub fn verify_algebra(sig: Signature, opts: VerifyOptions) -> Report {
    let mut report = Report::default();
    let real_sig = sig.with_field(Field::Real);
    let mut r = rng(opts.seed);
    let mut draw = || random_multivector(real_sig, &mut r);
    let real: Vec<(Multivector, Multivector, Multivector)> =
        (0..opts.samples.max(1)).map(|_| (draw(), draw(), draw())).collect();

    let dims: usize = (0..=sig.n()).map(|k| binomial(sig.n(), k)).sum();
    report.push(Check::new(
        "dimension",
        (dims != sig.dim()).then(|| format!("grade dimensions sum to {dims}, basis has {}", sig.dim())),
    ));

    match sig.field() {
        Field::Real => algebra_checks(&mut report, &real),
        Field::Complex => {
            let i = Multivector::scalar(sig, ComplexRational::imaginary_unit().expect("complex"));
            let lift = |a: &Multivector, b: &Multivector| {
                &a.convert::<ComplexRational>() + &(&i * &b.convert::<ComplexRational>())
            };
            let complex: Vec<_> = real
                .iter()
                .zip(real.iter().skip(1).chain(real.iter().take(1)))
                .map(|((a, b, c), (d, _, _))| (lift(a, d), lift(b, c), lift(c, a)))
                .collect();
            algebra_checks(&mut report, &complex);
        }
    }

    if sig.field() == Field::Real && sig.n() <= REP_CHECK_MAX_N {
        rep_checks(&mut report, real_sig, &real);
    }
    report
}

fn rep_checks(report: &mut Report, sig: Signature, samples: &[(Multivector, Multivector, Multivector)]) {
    let rep = match Representer::new(sig) {
        Ok(rep) => rep,
        Err(e) => {
            report.push(Check::new("representation", Some(e.to_string())));
            return;
        }
    };
    let want = classify_real(sig.p(), sig.q());
    report.push(Check::new(
        "representation shape",
        (rep.shape() != want).then(|| format!("route gives {}, classification gives {want}", rep.shape())),
    ));
    let failure = samples.iter().position(|(a, b, _)| {
        let lhs = rep.represent(&(a * b));
        let rhs = rep
            .represent(a)
            .and_then(|x| rep.represent(b).and_then(|y| x.try_mul(&y)));
        lhs.is_err() || lhs != rhs
    });
    report.push(Check::new(
        "representation homomorphism",
        failure.map(|i| format!("sample {i}: a = {}, b = {}", samples[i].0, samples[i].1)),
    ));
    let rows: Vec<Vec<Rational>> = (0..sig.dim() as u32)
        .map(|m| {
            let b = Multivector::from_blade(sig, crate::blade::Blade::from_mask(m), Rational::from_i64(1));
            rep.represent(&b).map(|x| x.flat_coords()).unwrap_or_default()
        })
        .collect();
    let r = rank(&rows);
    report.push(Check::new(
        "representation faithful",
        (r != sig.dim()).then(|| format!("blade matrices have rank {r}, expected {}", sig.dim())),
    ));
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
