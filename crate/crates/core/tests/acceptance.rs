//! Exit criteria. Each test prints one `PASS`/`FAIL` line and fails on `FAIL`.

mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use orbeuler::appbench::*;
use orbeuler::germlab::{germ_invariants, CurveGerm, Poly, DEFAULT_CAP};
use orbeuler::localsing::*;
use orbeuler::pairspace::{check_bmy, check_multiplicity_bound, Verdict};
use orbeuler::ratkit::q;
use orbeuler::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {id:>2} {name}: PASS");
    } else {
        println!("criterion {id:>2} {name}: FAIL ({})", failures.join("; "));
        panic!("criterion {id} failed");
    }
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn cusp_arms(d: Rational) -> [StarArm; 3] {
    [StarArm::new(2, 1, q(0, 1)).unwrap(), StarArm::new(3, 1, q(0, 1)).unwrap(), StarArm::new(1, 0, d).unwrap()]
}

#[test]
fn criterion_01_cusp_table() {
    let mut f = Vec::new();
    let table = [
        (q(0, 1), q(1, 1)),
        (q(1, 12), q(5, 6)),
        (q(1, 6), q(2, 3)),
        (q(1, 2), q(1, 6)),
        (q(5, 6), q(0, 1)),
        (q(1, 1), q(0, 1)),
    ];
    for (alpha, want) in table {
        let got = euler_star(1, &cusp_arms(alpha.clone())).unwrap().value;
        check(&mut f, got == want, || format!("alpha {alpha}: {got} != {want}"));
    }
    report(1, "cusp table", f);
}

#[test]
fn criterion_02_oracle_equivalence() {
    let mut f = Vec::new();
    let mut cases = 0;
    for n in 2..=8u64 {
        for l in (1..n).flat_map(|a| (1..n).flat_map(move |b| (1..n).map(move |c| [a, b, c]))) {
            let coeffs: Vec<Rational> = l.iter().map(|&li| q(1, 1) - q(li as i64, n as i64)).collect();
            let closed = euler_ordinary(&coeffs).unwrap().value;
            let oracle = sbar_oracle(n, l).unwrap();
            check(&mut f, closed == oracle, || format!("n {n} l {l:?}: {closed} != {oracle}"));
            cases += 1;
        }
    }
    check(&mut f, cases >= 343, || format!("only {cases} cases"));
    report(2, "sbar oracle equivalence", f);
}

#[test]
fn criterion_03_quotient_reciprocals() {
    let mut f = Vec::new();
    let cases = [
        ("D4", [(2, 1), (2, 1), (2, 1)], 8),
        ("E6", [(2, 1), (3, 2), (3, 2)], 24),
        ("E7", [(2, 1), (3, 2), (4, 3)], 48),
        ("E8", [(2, 1), (3, 2), (5, 4)], 120),
    ];
    for (name, arms, order) in cases {
        let arms = arms.map(|(n, qq)| StarArm::new(n, qq, q(0, 1)).unwrap());
        let value = euler_star(2, &arms).unwrap().value;
        let v = validate_star(2, &arms).unwrap();
        let deg = cover_degree(&v.invariants.b0, v.triple).unwrap().degree;
        check(&mut f, value == q(1, order), || format!("{name}: {value}"));
        check(&mut f, value == deg.clone().recip(), || format!("{name}: cover degree {deg}"));
    }
    report(3, "quotient reciprocals", f);
}

#[test]
fn criterion_04_fermat_equality() {
    let mut f = Vec::new();
    for m in [2, 3, 4, 5, 10] {
        let r = check_arrangement(&fermat_arrangement(m)).unwrap();
        check(&mut f, r.status == ArrangementStatus::Holds, || format!("m {m}: {:?}", r.status));
        check(&mut f, r.linear.equality && r.quadratic.equality, || format!("m {m}: no equality"));
    }
    report(4, "Fermat arrangement equality", f);
}

#[test]
fn criterion_05_global_equality() {
    let mut f = Vec::new();
    let r = check_bmy(&common::pair_fixture("fermat_m2.json")).unwrap();
    check(&mut f, r.lhs == q(1, 1) && r.rhs == q(1, 1), || format!("{} vs {}", r.lhs, r.rhs));
    check(&mut f, r.verdict == Verdict::Proved, || format!("verdict {}", r.verdict));
    check(&mut f, r.equality_flag, || "equality flag unset".into());
    report(5, "global equality on the m = 2 arrangement", f);
}

#[test]
fn criterion_06_cusp_ratio() {
    let mut f = Vec::new();
    let opt = cusp_ratio_optimize(10_000).unwrap();
    let r = &opt.ratio_star;
    let (lo, hi) = (q(30913, 100_000), q(30920, 100_000));
    check(&mut f, *r >= lo && *r <= hi, || {
        format!("grid minimum {} = {} at alpha {} outside [0.30913, 0.30920]", r, r.to_decimal(10), opt.alpha_star)
    });
    check(&mut f, *r < q(5, 16), || "not below 5/16".into());
    check(&mut f, *r > q(9, 32), || "not above 9/32".into());
    // |r - (125 + sqrt 73)/432| < 1e-4, decided exactly
    let tol = q(1, 10_000);
    let above = compare_with_cusp_infimum(&(r - &tol)) == Ordering::Less;
    let below = compare_with_cusp_infimum(&(r + &tol)) == Ordering::Greater;
    check(&mut f, above && below, || "farther than 1e-4 from (125 + sqrt 73)/432".into());
    check(&mut f, compare_with_cusp_infimum(r) != Ordering::Less, || "grid value below the infimum".into());
    report(6, "cusp ratio", f);
}

#[test]
fn criterion_07_cusp_sharpness() {
    let mut f = Vec::new();
    let s = cusp_count_bound(&CuspBoundQuery { d: 6, alpha: q(1, 2) }).unwrap();
    check(&mut f, s == BigInt::from(9), || format!("bound {s}"));
    let query: SingularPointQuery = serde_json::from_str(&common::fixture("nine_cusped_sextic.json")).unwrap();
    let r = check_singular_point_inequality(&query).unwrap();
    check(&mut f, r.equality && r.verdict == Verdict::Proved, || format!("{} vs {}", r.lhs, r.rhs));
    report(7, "cusp sharpness", f);
}

#[test]
fn criterion_08_canonical_degeneration() {
    let mut f = Vec::new();
    for (c1, c2) in [(3, 1), (9, 3), (30, 10), (3000, 1000)] {
        for g in [0, 1] {
            for ordinary in [false, true] {
                let b = canonical_degree_bound(c1, c2, g, ordinary).unwrap();
                check(&mut f, b <= q(0, 1), || format!("c1^2 {c1}, c2 {c2}, g {g}, ordinary {ordinary}: {b}"));
            }
        }
    }
    report(8, "canonical degree degeneration", f);
}

#[test]
fn criterion_09_milnor_tjurina() {
    let mut f = Vec::new();
    let inv = |s: &str| germ_invariants(&s.parse::<CurveGerm>().unwrap(), DEFAULT_CAP).unwrap();
    for p in 2..=6u64 {
        for qq in p..=6u64 {
            let i = inv(&format!("x^{p} + y^{qq}"));
            check(&mut f, i.mu == (p - 1) * (qq - 1), || format!("mu(x^{p} + y^{qq}) = {}", i.mu));
        }
    }
    let mut ade: Vec<String> = (1..=8).map(|k| format!("x^2 + y^{}", k + 1)).collect();
    ade.extend((4..=6).map(|k| format!("x^2*y + y^{}", k - 1)));
    ade.extend(["x^3 + y^4", "x^3 + x*y^3", "x^3 + y^5"].map(String::from));
    for s in &ade {
        let i = inv(s);
        check(&mut f, i.mu == i.tau, || format!("{s}: mu {} tau {}", i.mu, i.tau));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    for _ in 0..50 {
        let p = rng.gen_range(2..=5u32);
        let qq = rng.gen_range(p..=6u32);
        let mut poly = Poly::from_terms([((p, 0), q(1, 1)), ((0, qq), q(1, 1))]);
        for _ in 0..3 {
            let (i, j) = (rng.gen_range(0..=p), rng.gen_range(0..=qq));
            if i * qq + j * p > p * qq {
                poly.add_term((i, j), q(rng.gen_range(1..=4), 1));
            }
        }
        let g = CurveGerm::new(poly).unwrap();
        let i = germ_invariants(&g, DEFAULT_CAP).unwrap();
        check(&mut f, i.mu >= i.tau, || format!("{}: mu {} < tau {}", g.poly(), i.mu, i.tau));
    }
    let e12 = inv("x^4 + y^5 + x^2*y^3");
    check(&mut f, e12.mu == 12 && e12.tau == 11, || format!("perturbed germ: mu {} tau {}", e12.mu, e12.tau));
    report(9, "Milnor and Tjurina numbers", f);
}

#[test]
fn criterion_10_property_gates() {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a7e);
    let coeff = |rng: &mut ChaCha8Rng| q(rng.gen_range(0..=24), 24);
    for _ in 0..500 {
        let len = rng.gen_range(1..=6);
        let mut cs: Vec<Rational> = (0..len).map(|_| coeff(&mut rng)).collect();
        let v = euler_ordinary(&cs).unwrap();
        let a: Rational = cs.iter().sum();
        if v.lc == LcStatus::Lc {
            let bound = (q(1, 1) - a / q(2, 1)).square();
            check(&mut f, v.value <= bound, || format!("{cs:?}: above (1 - a/2)^2"));
            check(&mut f, v.value <= q(1, 1), || format!("{cs:?}: above 1"));
        }
        cs.push(q(1, 1));
        let v = euler_ordinary(&cs).unwrap();
        if v.lc == LcStatus::Lc {
            check(&mut f, v.value.is_zero(), || format!("{cs:?}: coefficient one did not kill"));
        }
    }
    for n in 1..=30u64 {
        for qq in (0..n.max(1)).filter(|&qq| (n == 1 && qq == 0) || (qq > 0 && num_integer::gcd(n, qq) == 1)) {
            let chain = orbeuler::ratkit::ChainDescriptor::new(n, qq).unwrap();
            let (d1, d2) = (coeff(&mut rng), coeff(&mut rng));
            let v = euler_cyclic(&chain, &d1, &d2).unwrap().value;
            let w = euler_ordinary(&[d1.clone(), d2.clone()]).unwrap().value;
            check(&mut f, Rational::from(n) * &v == w, || format!("<{n},{qq}> scaling"));
            let killed = euler_cyclic(&chain, &q(1, 1), &d2).unwrap().value;
            check(&mut f, killed.is_zero(), || format!("<{n},{qq}> coefficient one"));
        }
    }
    // piecewise boundaries
    for _ in 0..200 {
        let rest: Vec<Rational> = (0..rng.gen_range(1..=4)).map(|_| q(rng.gen_range(1..=12), 48)).collect();
        let an: Rational = rest.iter().sum();
        let a = q(2, 1) * &an;
        let first = (q(1, 1) - &a + &an) * (q(1, 1) - &an);
        let second = (q(1, 1) - &a / q(2, 1)).square();
        check(&mut f, first == second, || format!("ordinary boundary at {rest:?}"));
        let (b0, beta) = (q(rng.gen_range(1..50), rng.gen_range(1..50)), q(rng.gen_range(1..50), rng.gen_range(1..50)));
        let alpha = q(2, 1) * &beta + q(1, 1);
        let s1 = (&alpha - q(1, 1)).square() / (q(4, 1) * &b0);
        let s2 = (&alpha - q(1, 1) - &beta) * &beta / &b0;
        check(&mut f, s1 == s2, || format!("star boundary at b0 {b0}, beta {beta}"));
    }
    for cs in [vec![q(1, 1), q(1, 1)], vec![q(2, 3), q(2, 3), q(2, 3)], vec![q(1, 2), q(1, 2), q(1, 1)]] {
        check(&mut f, euler_ordinary(&cs).unwrap().value.is_zero(), || format!("{cs:?} at a = 2"));
    }
    check(&mut f, euler_star(1, &cusp_arms(q(5, 6))).unwrap().value.is_zero(), || "star at alpha = 1".into());
    // never Violation on lc + effective pairs
    let mut corpus: Vec<_> =
        ["smooth_quartic.json", "quartic_generic.json", "fermat_m2.json", "nodal_cubic.json", "quadruple_point.json"]
            .iter()
            .map(|n| common::pair_fixture(n))
            .collect();
    for m in 2..=5 {
        for a in [q(1, 3), q(1, 2), q(2, 3)] {
            corpus.push(common::fermat_pair(m, &a));
        }
    }
    for _ in 0..100 {
        let k = rng.gen_range(3..=9);
        let cs: Vec<Rational> = (0..k).map(|_| coeff(&mut rng)).collect();
        let p = rng.gen_range(2..=k);
        corpus.push(common::pencil_plus_general(&cs, p));
    }
    for (i, pair) in corpus.iter().enumerate() {
        let bmy = check_bmy(pair).unwrap();
        let mult = check_multiplicity_bound(pair).unwrap();
        if bmy.failed_preconditions.is_empty() {
            check(&mut f, bmy.verdict != Verdict::Violation, || format!("pair {i}: BMY violation"));
            check(&mut f, mult.verdict != Verdict::Violation, || format!("pair {i}: multiplicity bound violation"));
        }
    }
    report(10, "property gates", f);
}
