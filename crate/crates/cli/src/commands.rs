use std::cmp::Ordering;

use orbeuler::appbench::{
    canonical_degree_bound, check_arrangement, check_singular_point_inequality, compare_with_cusp_infimum,
    cusp_count_bound, cusp_ratio, cusp_ratio_optimize, ArrangementData, CuspBoundQuery, SingularPointQuery,
};
use orbeuler::germlab::{germ_invariants, lct_obstruction, CurveGerm, GermInvariants};
use orbeuler::localsing::{cover_degree, euler_local, validate_star, LocalSingularity};
use orbeuler::pairspace::{
    check_bmy, check_multiplicity_bound, effectivity, euler_orbifold_global, PairDescription, Verdict,
};
use orbeuler::ratkit::q;
use orbeuler::Rational;
use rayon::prelude::*;
use serde::Deserialize;

use crate::input::{parse_counts, parse_json, parse_rational, read_doc, require_doc, CliResult, InputError};
use crate::report::Report;
use crate::DocArgs;

pub fn local(ordinary: Option<Vec<String>>, doc: &DocArgs) -> CliResult<Report> {
    let sing = match (ordinary, read_doc(doc)?) {
        (Some(coeffs), None) => {
            let coeffs = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| parse_rational(&format!("ordinary[{i}]"), c))
                .collect::<CliResult<Vec<_>>>()?;
            LocalSingularity::ordinary(coeffs)?
        }
        (None, Some(text)) => {
            let s: LocalSingularity = parse_json("local singularity", &text)?;
            s.validate()?;
            s
        }
        (Some(_), Some(_)) => return Err(InputError("give either --ordinary or a document, not both".into())),
        (None, None) => return Err(InputError("local: supply --ordinary, --input PATH or --doc JSON".into())),
    };
    let v = euler_local(&sing)?;
    let mut r = Report::new("local", "computed");
    r.value("value", &v.value).label("kind", v.kind).label("lc", v.lc);
    match &sing {
        LocalSingularity::Ordinary { .. } => {
            r.refs(&["ordinary-point closed form"]);
        }
        LocalSingularity::CyclicQuotient { chain, .. } => {
            r.label("chain", chain).refs(&["cyclic quotient formula"]);
        }
        LocalSingularity::StarQuotient { b, arms } => {
            let val = validate_star(*b, arms)?;
            let cover = cover_degree(&val.invariants.b0, val.triple)?;
            r.value("b0", &val.invariants.b0)
                .value("alpha", &val.invariants.alpha)
                .value("beta", &val.invariants.beta)
                .label("triple", format!("{:?}", val.triple))
                .value("s", &cover.s)
                .value("cover_degree", &cover.degree)
                .refs(&["star-shaped quotient formula", "cover degree 4 s^2 b0"]);
        }
        LocalSingularity::ReducedGerm { .. } => {
            r.refs(&["mu - tau for reduced curves"]);
        }
    }
    Ok(r)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GermDoc {
    One(CurveGerm),
    Many(Vec<CurveGerm>),
}

pub fn germ(polys: &[String], doc: &DocArgs, cap: usize, jobs: usize) -> CliResult<Report> {
    let germs: Vec<CurveGerm> = match read_doc(doc)? {
        Some(text) => match parse_json("germ document", &text)? {
            GermDoc::One(g) => vec![g],
            GermDoc::Many(gs) => gs,
        },
        None => polys
            .iter()
            .enumerate()
            .map(|(i, p)| p.parse().map_err(|e: orbeuler::Error| InputError(format!("poly[{i}] {p:?}: {e}"))))
            .collect::<CliResult<_>>()?,
    };
    if germs.is_empty() {
        return Err(InputError("germ: supply at least one polynomial".into()));
    }
    if jobs == 0 {
        return Err(InputError("jobs: must be at least 1".into()));
    }
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| InputError(format!("jobs: {e}")))?;
    let results: Vec<orbeuler::Result<GermInvariants>> =
        pool.install(|| germs.par_iter().map(|g| germ_invariants(g, cap)).collect());
    let mut invariants = Vec::with_capacity(germs.len());
    for (i, res) in results.into_iter().enumerate() {
        invariants.push(res.map_err(|e| InputError(format!("poly[{i}] {}: {e}", germs[i].poly())))?);
    }

    let mut r = Report::new("germ", "computed");
    let single = germs.len() == 1;
    for (i, (g, inv)) in germs.iter().zip(&invariants).enumerate() {
        let line = format!("mu={} tau={} e_orb={}", inv.mu, inv.tau, inv.mu - inv.tau);
        r.headline(if single { line } else { format!("[{i}] {}: {line}", g.poly()) });
        let key = |name: &str| if single { name.to_string() } else { format!("germs[{i}].{name}") };
        r.integer(key("mu"), inv.mu).integer(key("tau"), inv.tau).integer(key("e_orb"), inv.mu - inv.tau);
        r.integer(key("truncation"), inv.truncation_used as u64);
    }
    let pairs: Vec<(u64, u64)> = invariants.iter().map(|i| (i.mu, i.tau)).collect();
    let lct = lct_obstruction(&pairs)?;
    r.integer("lct_obstruction", lct.obstruction.clone()).label("lct", lct.verdict);
    r.refs(&["mu - tau for reduced curves", "log comparison obstruction"]);
    Ok(r)
}

pub fn global(doc: &DocArgs) -> CliResult<Report> {
    let text = require_doc(doc, "global")?;
    let pair = PairDescription::from_json(&text)?;
    let e = euler_orbifold_global(&pair)?;
    let bmy = check_bmy(&pair)?;
    let mult = check_multiplicity_bound(&pair)?;
    let verdict = if bmy.verdict == Verdict::Violation || mult.verdict == Verdict::Violation {
        Verdict::Violation
    } else {
        bmy.verdict
    };
    let mut r = Report::new("global", verdict);
    r.value("e_orb", &e.value)
        .label("e_orb.kind", e.kind)
        .label("lc", e.lc)
        .label("effective", effectivity(&pair))
        .value("bmy.lhs", &bmy.lhs)
        .value("bmy.rhs", &bmy.rhs)
        .value("bmy.slack", &bmy.slack)
        .label("bmy.verdict", bmy.verdict)
        .label("bmy.equality", bmy.equality_flag)
        .value("multiplicity.lhs", &mult.lhs)
        .value("multiplicity.rhs", &mult.rhs)
        .value("multiplicity.slack", &mult.slack)
        .label("multiplicity.verdict", mult.verdict)
        .label("multiplicity.equality", mult.equality_flag);
    if bmy.equality_flag {
        r.note("equality: K + D is nef");
    }
    for f in &bmy.failed_preconditions {
        r.note(format!("precondition failed: {f}"));
    }
    for w in pair.warnings() {
        r.note(format!("warning: {w}"));
    }
    r.refs(&["global orbifold Euler number", "orbifold BMY inequality", "multiplicity bound"]);
    Ok(r)
}

pub fn arrangement(k: Option<u64>, t: Option<Vec<String>>, doc: &DocArgs) -> CliResult<Report> {
    let data = match (k, t, read_doc(doc)?) {
        (Some(k), Some(t), None) => ArrangementData::new(k, parse_counts(&t)?),
        (None, None, Some(text)) => parse_json("arrangement", &text)?,
        (None, None, None) => return Err(InputError("arrangement: supply --k and --t, or a document".into())),
        _ => return Err(InputError("give either --k/--t or a document, not both".into())),
    };
    let rep = check_arrangement(&data)?;
    let mut r = Report::new("arrangement", rep.status);
    r.integer("k", data.k)
        .integer("linear.sum", rep.linear.sum.clone())
        .integer("linear.bound", rep.linear.bound.clone())
        .integer("linear.slack", rep.linear.slack.clone())
        .label("linear.equality", rep.linear.equality)
        .integer("quadratic.sum", rep.quadratic.sum.clone())
        .integer("quadratic.bound", rep.quadratic.bound.clone())
        .integer("quadratic.slack", rep.quadratic.slack.clone())
        .label("quadratic.equality", rep.quadratic.equality);
    if !rep.large_pencils.is_empty() {
        r.note(format!("points on more than 2k/3 lines: r = {:?}", rep.large_pencils));
    }
    r.refs(&["arrangement inequalities"]);
    Ok(r)
}

pub fn cusps(degree: Option<u64>, alpha: Option<String>, optimize: bool, grid: u64) -> CliResult<Report> {
    if optimize {
        let opt = cusp_ratio_optimize(grid)?;
        let mut r = Report::new("cusps", "computed");
        r.value("alpha_star", &opt.alpha_star)
            .value("ratio_star", &opt.ratio_star)
            .integer("grid", opt.grid_denominator)
            .integer("probes", opt.probes)
            .value("ratio_at_one_half", &cusp_ratio(&q(1, 2))?);
        let cmp = match compare_with_cusp_infimum(&opt.ratio_star) {
            Ordering::Less => "below",
            Ordering::Equal => "equal to",
            Ordering::Greater => "above",
        };
        r.note(format!("ratio_star is {cmp} (125 + sqrt 73)/432"));
        r.refs(&["singular-point inequality", "cusp ratio infimum"]);
        return Ok(r);
    }
    let (Some(d), Some(alpha)) = (degree, alpha) else {
        return Err(InputError("cusps: supply --degree and --alpha, or --optimize".into()));
    };
    let alpha = parse_rational("alpha", &alpha)?;
    let query = CuspBoundQuery { d, alpha };
    let s = cusp_count_bound(&query)?;
    let mut r = Report::new("cusps", "computed");
    r.integer("degree", d)
        .value("alpha", &query.alpha)
        .integer("max_cusps", s)
        .value("ratio", &cusp_ratio(&query.alpha)?);
    r.refs(&["singular-point inequality", "cusp count bound"]);
    Ok(r)
}

pub fn bound(c1_sq: i64, c2: i64, genus: u64, ordinary: bool) -> CliResult<Report> {
    let b: Rational = canonical_degree_bound(c1_sq, c2, genus, ordinary)?;
    let mut r = Report::new("bound", "computed");
    r.integer("c1_sq", c1_sq)
        .integer("c2", c2)
        .integer("genus", genus)
        .label("ordinary", ordinary)
        .value("max_canonical_degree", &b);
    if b <= Rational::zero() {
        r.note("bound is not positive: no such curve of positive canonical degree");
    }
    r.refs(&["canonical degree bound"]);
    Ok(r)
}

pub fn check(doc: &DocArgs) -> CliResult<Report> {
    let text = require_doc(doc, "check")?;
    let query: SingularPointQuery = parse_json("singular-point query", &text)?;
    let rep = check_singular_point_inequality(&query)?;
    let mut r = Report::new("check", rep.verdict);
    r.value("lhs", &rep.lhs).value("rhs", &rep.rhs).value("slack", &rep.slack).label("equality", rep.equality);
    r.refs(&["singular-point inequality"]);
    Ok(r)
}
