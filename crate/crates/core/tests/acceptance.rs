//! One line per acceptance criterion. Exits nonzero when a criterion fails
//! for a reason other than the documented sl2 sign/weight discrepancy.

use std::time::Instant;

use dunkl_core::cli::suites::{
    berest_on, commute_on, generators_on, gf_on, iwasaki_on, jacobi_on, laplacian_on, limit_on, nablapr_on,
    orthogonality_on, phic_poly_on, prop_kernel_on, Report,
};
use dunkl_core::cli::{Params, Setup};
use dunkl_core::dunkl::{sl2_report, DunklContext, Multiplicity};
use dunkl_core::groups::{build_symmetric, GroupKind};
use dunkl_core::invariants::{ebar, elementary_invariant, GeneratorSet};
use dunkl_core::polyring::Poly;
use dunkl_core::scalars::{parse_ratfun, RatFun, Rational, Ring};
use dunkl_core::Result;

type Q = RatFun<Rational>;

struct Outcome {
    pass: bool,
    /// Failure that is expected and explained; does not fail the run.
    known: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn from_reports(reports: Vec<Report>) -> Self {
        let pass = reports.iter().all(Report::passed);
        let mut notes = Vec::new();
        for r in &reports {
            notes.push(format!("{}: {} cases, {} failures", r.suite, r.cases, r.failures.len()));
            for f in r.failures.iter().take(3) {
                notes.push(format!("  input {} expected {} got {}", f.input, f.expected, f.got));
            }
            for v in &r.values {
                notes.push(format!("  {} = {}", v.input, v.value));
            }
        }
        Outcome { pass, known: false, notes }
    }
}

fn setup(kind: GroupKind, params: Params) -> Setup {
    Setup::new(kind, &params).expect("group builds")
}

fn dihedral(m: u32, params: Params) -> Setup {
    setup(GroupKind::Dihedral(m), params)
}

fn c1_commutativity() -> Result<Outcome> {
    let mut reps = Vec::new();
    for (kind, deg) in [
        (GroupKind::Symmetric(3), 6),
        (GroupKind::Symmetric(4), 6),
        (GroupKind::Dihedral(3), 5),
        (GroupKind::Dihedral(4), 6),
    ] {
        let s = setup(kind, Params::Symbolic);
        let mut r = match &s {
            Setup::Symmetric(ctx, _) => commute_on(ctx, deg)?,
            Setup::Dihedral(ctx, _) => commute_on(ctx, deg)?,
        };
        r.suite = format!("commute {kind}");
        reps.push(r);
    }
    Ok(Outcome::from_reports(reps))
}

fn c2_sl2() -> Result<Outcome> {
    let mut literal = true;
    let mut corrected = true;
    let mut notes = Vec::new();
    for (kind, deg) in [(GroupKind::Dihedral(4), 8), (GroupKind::SymmetricReduced(3), 6)] {
        let s = setup(kind, Params::Symbolic);
        let r = match &s {
            Setup::Symmetric(ctx, _) => sl2_report(ctx, deg)?,
            Setup::Dihedral(ctx, _) => sl2_report(ctx, deg)?,
        };
        literal &= r.el_is_h && r.weights_are_2;
        corrected &= r.le_is_h && r.weights_are_8 && r.normalized_ok;
        notes.push(format!(
            "{kind} up to degree {deg}: [E,L]=H {}, [H,E]=2E and [H,L]=-2L {}, [L,E]=H {}, [H,E]=8E and [H,L]=-8L {}, (E/2,-L/2,H/4) standard {}",
            r.el_is_h, r.weights_are_2, r.le_is_h, r.weights_are_8, r.normalized_ok
        ));
    }
    if !literal {
        notes.push(
            "with H = 2l(1-h_c) + 4*deg the relations as stated cannot hold: E raises degree by 2, so [H,E] = 8E; \
             the commutator formula for [L,E^k] at k=1 gives [L,E] = H, the opposite sign of [E,L] = H. \
             The rescaled triple (E/2, -L/2, H/4) satisfies the standard relations exactly."
                .into(),
        );
    }
    Ok(Outcome { pass: literal, known: !literal && corrected, notes })
}

fn c3_berest() -> Result<Outcome> {
    let mut reps = Vec::new();
    for kind in [GroupKind::Symmetric(3), GroupKind::Dihedral(4)] {
        let s = setup(kind, Params::Symbolic);
        let mut r = match &s {
            Setup::Symmetric(ctx, _) => berest_on(ctx, 25, 42)?,
            Setup::Dihedral(ctx, _) => berest_on(ctx, 25, 42)?,
        };
        r.suite = format!("berest {kind}");
        reps.push(r);
    }
    Ok(Outcome::from_reports(reps))
}

/// `scale * (1 - nc) / ((n^2 - n)c - n - shift) * lower + ebar_k`.
fn closed_form(n: usize, scale: Rational, shift: i64, lower: Poly<Q>, k: usize) -> Poly<Q> {
    let names = ["c".to_string()];
    let nn = n as i64;
    let frac = parse_ratfun(&format!("(1-{nn}*c)/({}*c-{})", nn * nn - nn, nn + shift), &names).expect("parses");
    &lower.scale(&frac.mul_rational(&scale)) + &ebar(k, n)
}

fn c4_e4_e5() -> Result<Outcome> {
    let mut pass = true;
    let mut notes = Vec::new();
    for (k, ns) in [(4usize, &[4usize, 5, 6][..]), (5, &[5, 6][..])] {
        for &n in ns {
            let ctx = DunklContext::<Q>::new(build_symmetric(n)?, Multiplicity::symbolic(1))?;
            let gens = GeneratorSet::elementary(n);
            let e = elementary_invariant(k as u32, &gens, &ctx)?;
            let nn = n as i64;
            let want = if k == 4 {
                let s = Rational::new((nn - 2) * (nn - 3), 2 * nn)?;
                closed_form(n, s, 1, ebar::<Q>(2, n).pow(2), 4)
            } else {
                let s = Rational::new((nn - 3) * (nn - 4), nn)?;
                closed_form(n, s, 5, &ebar::<Q>(2, n) * &ebar(3, n), 5)
            };
            let ok = e.poly == want;
            pass &= ok;
            notes.push(format!("e{k} for n={n}: {}", if ok { "matches" } else { "differs" }));
        }
    }
    Ok(Outcome { pass, known: false, notes })
}

fn per_n(ns: std::ops::RangeInclusive<usize>, f: fn(usize) -> Result<Report>) -> Result<Vec<Report>> {
    ns.map(|n| {
        let mut r = f(n)?;
        r.suite = format!("{} n={n}", r.suite);
        Ok(r)
    })
    .collect()
}

fn c5_limits() -> Result<Outcome> {
    Ok(Outcome::from_reports(per_n(2..=5, limit_on)?))
}

fn c6_iwasaki() -> Result<Outcome> {
    let optional = iwasaki_on(5)?;
    let mut out = Outcome::from_reports(per_n(2..=4, iwasaki_on)?);
    out.notes.push(format!(
        "optional n=5: {} cases, {} failures",
        optional.cases,
        optional.failures.len()
    ));
    for v in &optional.values {
        out.notes.push(format!("  {} = {}", v.input, v.value));
    }
    out.pass &= optional.passed();
    Ok(out)
}

fn c7_gf() -> Result<Outcome> {
    let mut reps = Vec::new();
    for m in 3..=6 {
        let s = dihedral(m, Params::Equal);
        let Setup::Dihedral(ctx, gens) = &s else { unreachable!() };
        let mut r = gf_on(ctx, gens, m, 3)?;
        r.suite = format!("gf m={m}");
        reps.push(r);
    }
    Ok(Outcome::from_reports(reps))
}

fn c8_jacobi() -> Result<Outcome> {
    let s = dihedral(4, Params::Symbolic);
    let Setup::Dihedral(ctx, gens) = &s else { unreachable!() };
    Ok(Outcome::from_reports(vec![jacobi_on(ctx, gens, 4, 3)?]))
}

fn c9_laplacian() -> Result<Outcome> {
    let mut reps = Vec::new();
    for m in 3..=5 {
        let s = dihedral(m, Params::Symbolic);
        let Setup::Dihedral(ctx, _) = &s else { unreachable!() };
        let mut r = laplacian_on(ctx, m, 2 * m)?;
        r.suite = format!("laplacian m={m}");
        reps.push(r);
    }
    Ok(Outcome::from_reports(reps))
}

fn c10_power_sums() -> Result<Outcome> {
    Ok(Outcome::from_reports(per_n(2..=5, nablapr_on)?))
}

fn c11_orthogonality() -> Result<Outcome> {
    let d = dihedral(5, Params::Symbolic);
    let Setup::Dihedral(ctx, gens) = &d else { unreachable!() };
    let mut a = orthogonality_on(ctx, gens, 8)?;
    a.suite = "orthogonality I2:5".into();
    let s = setup(GroupKind::Symmetric(4), Params::Symbolic);
    let Setup::Symmetric(ctx, gens) = &s else { unreachable!() };
    let mut b = orthogonality_on(ctx, gens, 6)?;
    b.suite = "orthogonality Sn:4".into();
    Ok(Outcome::from_reports(vec![a, b]))
}

fn c12_dihedral_kernel() -> Result<Outcome> {
    let mut reps = Vec::new();
    for m in [3u32, 4] {
        let s = dihedral(m, Params::Symbolic);
        let Setup::Dihedral(ctx, gens) = &s else { unreachable!() };
        let mut r = prop_kernel_on(ctx, gens, m, 2 * m + 4)?;
        r.suite = format!("kernel m={m}");
        reps.push(r);
    }
    Ok(Outcome::from_reports(reps))
}

fn c13_phic_poly() -> Result<Outcome> {
    let mut reps = Vec::new();
    for kind in [GroupKind::Dihedral(3), GroupKind::Dihedral(4), GroupKind::SymmetricReduced(4)] {
        let s = setup(kind, Params::Symbolic);
        let mut r = match &s {
            Setup::Symmetric(ctx, gens) => phic_poly_on(ctx, gens, 6, 20, 42)?,
            Setup::Dihedral(ctx, gens) => phic_poly_on(ctx, gens, 6, 20, 42)?,
        };
        r.suite = format!("phic-poly {kind}");
        reps.push(r);
    }
    Ok(Outcome::from_reports(reps))
}

fn c14_generators() -> Result<Outcome> {
    Ok(Outcome::from_reports(vec![generators_on(3, 6)?]))
}

type Criterion = fn() -> Result<Outcome>;

fn main() {
    let criteria: [(&str, Criterion); 14] = [
        ("Dunkl operators commute", c1_commutativity),
        ("sl2 relations as stated", c2_sl2),
        ("iterated-commutator formula for nabla_p", c3_berest),
        ("closed forms of e4 and e5 for S_n", c4_e4_e5),
        ("limit at c = 1/n is the centred elementary polynomial", c5_limits),
        ("coset sums are multiples of the elementary invariants", c6_iwasaki),
        ("generating function for dihedral b_(0,k)", c7_gf),
        ("Jacobi closed form for b_(0,k), m = 4", c8_jacobi),
        ("dihedral Laplacian on k[e2, em]", c9_laplacian),
        ("power-sum operators on centred elementary polynomials", c10_power_sums),
        ("orthogonality and triangularity", c11_orthogonality),
        ("dihedral kernel and factorization of b_a", c12_dihedral_kernel),
        ("(u, v)/(1 - h_c) is polynomial", c13_phic_poly),
        ("elementary vs power-sum generators", c14_generators),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(o) => {
                let tag = match (o.pass, o.known) {
                    (true, _) => "PASS",
                    (false, true) => "FAIL (documented)",
                    (false, false) => "FAIL",
                };
                println!("criterion {:>2}: {tag}  {name}  [{secs:.1}s]", i + 1);
                for n in &o.notes {
                    println!("      {n}");
                }
                if !o.pass && !o.known {
                    unexpected += 1;
                }
            }
            Err(e) => {
                println!("criterion {:>2}: FAIL  {name}  [{secs:.1}s]  error: {e}", i + 1);
                unexpected += 1;
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}

