//! Acceptance run: one PASS/FAIL line per criterion, each with its time
//! budget. Built with `harness = false` so the lines always reach stdout.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use k3lab::constants::Constants;
use k3lab::exact::{real_from_i64, BigComplex};
use k3lab::kummer;
use k3lab::lattice::{graph_to_gram, is_e8_dynkin};
use k3lab::modular;
use k3lab::shioda_inose as si;
use k3lab::toric::{self, Singularity};
use k3lab::verify::{self, Suite, VerifyOptions};
use k3lab::weierstrass::{self, FamilyMember, FiberLocation, KodairaType};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn small(rng: &mut ChaCha8Rng) -> BigRational {
    r(rng.gen_range(-60..=60), rng.gen_range(1..=30))
}

fn lambda(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let l = small(rng);
        if !l.is_zero() && !l.is_one() {
            return l;
        }
    }
}

/// `256(λ² − λ + 1)³ / (λ²(λ − 1)²)`.
fn j_of(l: &BigRational) -> BigRational {
    let one = BigRational::one();
    let q = l * l - l + &one;
    let d = l * (l - &one);
    r(256, 1) * &q * &q * &q / (&d * &d)
}

fn k() -> Constants {
    Constants::reference()
}

fn c1_h_sum() -> Outcome {
    let h = si::build_h_polys(&k()).map_err(|e| e.to_string())?;
    ensure(h.h_inf.vars().len() == 6, || "not six variables".into())?;
    ensure(si::verify_h_sum(&h) && h.sum().is_zero(), || {
        format!("sum has {} terms", h.sum().num_terms())
    })?;
    Ok("H_inf + H_plus + H_minus = 0".into())
}

/// Adds `+1` to one monomial of a coefficient expression.
fn bump_term(expr: &str, exps: &[u32], names: &[String]) -> String {
    let mono: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| format!("{n}^{e}"))
        .collect();
    let mono = if mono.is_empty() {
        "1".to_string()
    } else {
        mono.join("*")
    };
    format!("({expr}) + {mono}")
}

fn c2_master() -> Outcome {
    let c = k();
    let e = |e: k3lab::Error| e.to_string();
    let h = si::build_h_polys(&c).map_err(e)?;
    let pts: Vec<Vec<BigRational>> = [
        [(3, 7), (5, 3), (2, 11), (9, 5), (3, 1), (5, 1)],
        [(-4, 3), (7, 2), (1, 5), (-3, 8), (2, 7), (-5, 3)],
    ]
    .iter()
    .map(|p| p.iter().map(|&(a, b)| r(a, b)).collect())
    .collect();
    let kappa = si::fit_kappa(&c, &h, &pts).map_err(e)?;
    ensure(kappa == r(1, 1), || format!("kappa {kappa}"))?;
    ensure(
        si::verify_master_identity(&c, &h, &kappa).map_err(e)?,
        || "identity fails".into(),
    )?;

    let vars = si::var_set();
    let names = vars.names().to_vec();
    let m = si::master_coefficients(&c, &vars).map_err(e)?;
    let mut mutants = 0;
    for (field, poly) in [("x2", &m.x2), ("x1", &m.x1), ("x0", &m.x0), ("zz", &m.zz)] {
        for (exps, _) in poly.terms() {
            let mut cm = c.clone();
            let slot = match field {
                "x2" => &mut cm.master_x2,
                "x1" => &mut cm.master_x1,
                "x0" => &mut cm.master_x0,
                _ => &mut cm.master_zz,
            };
            *slot = bump_term(slot, exps, &names);
            let refit = si::fit_kappa(&cm, &h, &pts);
            let holds = si::verify_master_identity(&cm, &h, &kappa).map_err(e)?;
            ensure(refit.is_err() && !holds, || {
                format!("mutant of {field} survives")
            })?;
            mutants += 1;
        }
    }
    let cm = c.mutate("kappa").map_err(e)?;
    ensure(
        !si::verify_master_identity(&cm, &h, &si::kappa(&cm)).map_err(e)?,
        || "kappa mutant survives".into(),
    )?;
    Ok(format!("kappa = 1, {mutants} coefficient mutants rejected"))
}

fn c3_routes() -> Outcome {
    let c = k();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let (l1, l2) = (lambda(&mut rng), lambda(&mut rng));
        let p = si::ab_powers_from_lambda(&c, &l1, &l2).map_err(|e| e.to_string())?;
        let (j1, j2) = (j_of(&l1), j_of(&l2));
        let a3 = -(&j1 * &j2) / r(110592, 1);
        let b2 = (&j1 - r(1728, 1)) * (&j2 - r(1728, 1)) / r(746496, 1);
        ensure(p.a_cubed == a3 && p.b_squared == b2, || {
            format!("l1 = {l1}, l2 = {l2}")
        })?;
        ensure(si::ab_powers_from_j(&c, &j1, &j2) == p, || {
            format!("j route at {l1}, {l2}")
        })?;
    }
    let (a, b) = si::route_independence_symbolic(&c).map_err(|e| e.to_string())?;
    ensure(a && b, || format!("symbolic a^3 {a}, b^2 {b}"))?;
    Ok("50 pairs and both symbolic identities".into())
}

fn c4_mirror() -> Outcome {
    let c = k();
    let g = toric::mirror_curve_graph(&c).map_err(|e| e.to_string())?;
    ensure(g.len() == 19, || format!("{} nodes", g.len()))?;
    let lat = graph_to_gram(&g);
    let inv = lat.invariants();
    ensure(
        inv.rank == 18 && inv.signature == (1, 17) && inv.is_even,
        || format!("{inv:?}"),
    )?;
    let det = lat.quotient_determinant();
    ensure(det == BigInt::from(1) || det == BigInt::from(-1), || {
        format!("det {det}")
    })?;
    ensure(lat.quotient_basis().is_some(), || {
        "no integral basis".into()
    })?;
    for side in &c.mirror_e8_sides {
        ensure(
            is_e8_dynkin(&g.induced(side).map_err(|e| e.to_string())?),
            || format!("{side:?} is not E8"),
        )?;
    }
    let v = |w| lat.vector(w).map_err(|e| e.to_string());
    let (s, f, ft) = (
        v(&c.mirror_section)?,
        v(&c.mirror_fiber)?,
        v(&c.mirror_fiber_top)?,
    );
    let p = |a: &[i64], b: &[i64]| lat.pair(a, b).unwrap();
    ensure((p(&s, &s), p(&f, &f), p(&s, &f)) == (-2, 0, 1), || {
        "S, F numbers".into()
    })?;
    let diff: Vec<i64> = ft.iter().zip(&f).map(|(a, b)| a - b).collect();
    let neg: Vec<i64> = diff.iter().map(|x| -x).collect();
    let ker = lat.kernel_basis();
    ensure(ker.len() == 1 && (ker[0] == diff || ker[0] == neg), || {
        format!("kernel {ker:?}")
    })?;
    Ok("rank 18, signature (1,17), det -1 basis, E8 sides, S/F, kernel".into())
}

fn c5_kummer() -> Outcome {
    let c = k();
    let e = |e: k3lab::Error| e.to_string();
    let d = kummer::big_d(&c).map_err(e)?;
    ensure(d.square().is_zero(), || format!("D^2 = {}", d.square()))?;
    ensure(kummer::iistar_fiber_check(&c).map_err(e)?.holds(), || {
        "II* decomposition".into()
    })?;
    let (one, two) = kummer::i0star_fibers(&c).map_err(e)?;
    ensure(
        kummer::fiber_sum(&one) == d && kummer::fiber_sum(&two) == d,
        || "I0* sums".into(),
    )?;
    let g = kummer::labeled_graph_check(&c).map_err(e)?;
    ensure(g.labels.len() == 20 && g.mismatches().is_empty(), || {
        format!("{:?}", g.mismatches())
    })?;
    let mut edges = 0;
    for (i, row) in g.pairing.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            let ok = if i == j { x == -2 } else { x == 0 || x == 1 };
            ensure(ok, || format!("entry ({i},{j}) = {x}"))?;
            edges += usize::from(i < j && x == 1);
        }
    }
    ensure(edges == 19, || format!("{edges} edges"))?;
    ensure(g.rank == 18, || format!("rank {}", g.rank))?;
    let oct = kummer::branch_octet(&c).map_err(e)?;
    for (i, (_, a)) in oct.iter().enumerate() {
        for (_, b) in &oct[i + 1..] {
            ensure(a.pair(b).is_zero(), || "octet not orthogonal".into())?;
        }
    }
    for n in [1, 2, 3, 5] {
        let f = kummer::fricke_numbers(&c, n).map_err(e)?;
        ensure(f.proj_square == -4 * n && f.rx_square == -8 * n, || {
            format!("n = {n}: {f:?}")
        })?;
    }
    Ok("D^2 = 0, II*, two I0*, 20-label matrix, octet, rank 18, n = 1,2,3,5".into())
}

fn c6_toric() -> Outcome {
    let c = k();
    let e = |e: k3lab::Error| e.to_string();
    let d = toric::delta(&c).map_err(e)?;
    let dd = d.dual().map_err(e)?;
    ensure(
        dd.vertices() == [[-1, -1, -1], [11, -1, -1], [-1, 2, -1], [-1, -1, 1]],
        || format!("dual {:?}", dd.vertices()),
    )?;
    let mut prof: Vec<Singularity> = dd.edge_reports().iter().map(|r| r.singularity).collect();
    prof.sort();
    use Singularity::*;
    ensure(prof == [Smooth, A(1), A(1), A(2), A(2), A(11)], || {
        format!("{prof:?}")
    })?;
    let mut genera: Vec<u32> = c
        .facet_genera
        .iter()
        .map(|(f, _)| d.facet_genus(*f).unwrap())
        .collect();
    genera.sort();
    ensure(genera == [0, 0, 1, 2], || format!("{genera:?}"))?;
    let pts = dd.lattice_points().len();
    let forms = toric::weighted_monomial_count(&[1, 1, 4, 6], 12);
    ensure(pts == 39 && forms == 39, || {
        format!("{pts} points, {forms} forms")
    })?;
    ensure(d.lattice_points().len() == 9, || "simplex count".into())?;
    let s = toric::support_shift(&c).map_err(e)?;
    ensure(s.shift == [0, -2, -3], || format!("shift {:?}", s.shift))?;
    for (name, v) in ["z", "1/z", "x^3", "y^2"].iter().zip(d.vertices()) {
        ensure(s.shifted(name) == Some(*v), || {
            format!("{name} misses {v:?}")
        })?;
    }
    Ok("dual vertices, A11 A2 A2 A1 A1 smooth, genera 0 0 1 2, 39 points, shift".into())
}

fn orbit(l: &BigRational, k: usize) -> BigRational {
    let one = BigRational::one();
    match k % 5 {
        0 => &one - l,
        1 => l.recip(),
        2 => (&one - l).recip(),
        3 => l / (l - &one),
        _ => (l - &one) / l,
    }
}

fn c7_weierstrass() -> Outcome {
    let c = k();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut n = 0;
    while n < 50 {
        let m = FamilyMember::new(small(&mut rng), small(&mut rng));
        if weierstrass::is_degenerate(&m) {
            continue;
        }
        n += 1;
        let f = weierstrass::fiber_analysis(&m).map_err(|e| e.to_string())?;
        let ends = (f.at(&FiberLocation::Zero), f.at(&FiberLocation::Infinity));
        let extra: u32 = f.extra().iter().map(|(k, t)| k * t.euler_number()).sum();
        ensure(
            ends == (Some(KodairaType::IIStar), Some(KodairaType::IIStar)) && extra == 4,
            || format!("a = {}, b = {}: {ends:?}, extra {extra}", m.a, m.b),
        )?;
        ensure(f.euler_total() == 24, || {
            format!("total {}", f.euler_total())
        })?;
    }
    let flag = |l1: &BigRational, l2: &BigRational| -> Result<bool, String> {
        let p = si::ab_powers_from_lambda(&c, l1, l2).map_err(|e| e.to_string())?;
        Ok(weierstrass::is_degenerate_from_powers(
            &p.a_cubed,
            &p.b_squared,
        ))
    };
    let (mut matched, mut unmatched) = (0, 0);
    while matched < 20 || unmatched < 20 {
        let l1 = lambda(&mut rng);
        let l2 = if matched < 20 {
            orbit(&l1, matched)
        } else {
            lambda(&mut rng)
        };
        let same = j_of(&l1) == j_of(&l2);
        ensure(flag(&l1, &l2)? == same, || format!("l1 = {l1}, l2 = {l2}"))?;
        if same {
            matched += 1;
        } else if matched >= 20 {
            unmatched += 1;
        }
    }
    Ok("50 members II*/II* with budget 24, 20 matched and 20 unmatched pairs".into())
}

fn tau(rng: &mut ChaCha8Rng) -> BigComplex {
    BigComplex::from_f64(rng.gen_range(-0.5..0.5), rng.gen_range(0.7..1.8), 256)
}

fn c8_modular() -> Outcome {
    let e = |e: k3lab::Error| e.to_string();
    let p = 256;
    let at = |y: i64| {
        modular::j_numeric(&BigComplex::new(
            real_from_i64(0, p),
            real_from_i64(y, p),
            p,
        ))
    };
    let ei = at(1).map_err(e)?.dist(&BigComplex::from_i64(1728, p));
    let e2i = at(2).map_err(e)?.dist(&BigComplex::from_i64(287496, p));
    ensure(ei < 1e-15 && e2i < 1e-10, || {
        format!("errors {ei:e}, {e2i:e}")
    })?;

    let dir = tempfile::tempdir().map_err(|x| x.to_string())?;
    let cold = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in [2u32, 3] {
        let rec = modular::build_modular_polynomial(n).map_err(e)?;
        let poly = &rec.poly;
        ensure(poly.is_symmetric() && rec.max_residue < 1e-6, || {
            format!("Phi_{n}: residue {:e}", rec.max_residue)
        })?;
        modular::store_cached(dir.path(), poly).map_err(e)?;
        for _ in 0..10 {
            let (j1, j2) = modular::fricke_pair(&tau(&mut rng), n).map_err(e)?;
            let res = poly.relative_residual(&j1, &j2);
            ensure(res < 1e-4, || format!("Phi_{n} residual {res:e}"))?;
        }
    }
    let phi2 = modular::load_cached(dir.path(), 2)
        .map_err(e)?
        .ok_or("cache empty")?;
    let known = [
        ((3, 0), "1"),
        ((2, 2), "-1"),
        ((2, 1), "1488"),
        ((1, 1), "40773375"),
        ((1, 0), "8748000000"),
        ((0, 0), "-157464000000000"),
    ];
    for ((i, j), v) in known {
        ensure(phi2.coeff(i, j).to_string() == v, || {
            format!("Phi_2[{i},{j}]")
        })?;
    }
    let phi3 = modular::load_cached(dir.path(), 3)
        .map_err(e)?
        .ok_or("cache empty")?;
    ensure(
        phi3.coeff(1, 0).to_string() == "1855425871872000000000"
            && phi3.coeff(3, 1).to_string() == "-1069956"
            && phi3.coeff(3, 3).to_string() == "-1"
            && phi3.coeff(0, 0).is_zero(),
        || "Phi_3 coefficients".into(),
    )?;
    let cold = cold.elapsed();
    ensure(cold < Duration::from_secs(120), || format!("cold {cold:?}"))?;

    let warm = Instant::now();
    let opts = VerifyOptions {
        cache_dir: dir.path().to_path_buf(),
        ..VerifyOptions::default()
    };
    let rep = verify::run(Suite::Modular, &k(), &opts);
    let warm = warm.elapsed();
    ensure(rep.passed(), || {
        format!("{:?}", rep.failures().map(|c| &c.id).collect::<Vec<_>>())
    })?;
    ensure(warm < Duration::from_secs(5), || format!("warm {warm:?}"))?;
    Ok(format!(
        "j(i), j(2i), Phi_2, Phi_3, 20 tau; cold {:.1} s, warm {:.2} s",
        cold.as_secs_f64(),
        warm.as_secs_f64()
    ))
}

fn c9_j() -> Outcome {
    let c = k();
    ensure(si::j_minus_1728_factorization(&c), || {
        "factorization".into()
    })?;
    let j = si::j_from_lambda(&c, &r(1, 4)).map_err(|e| e.to_string())?;
    ensure(j == r(35152, 9) && &j - r(1728, 1) == r(19600, 9), || {
        format!("j(1/4) = {j}")
    })?;
    ensure(j_of(&r(1, 4)) == j, || "oracle disagrees".into())?;
    Ok("64-factor identity, j(1/4) = 35152/9".into())
}

fn k3lab(args: &[&str], cache: &Path) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_k3lab"))
        .args(args)
        .arg("--cache-dir")
        .arg(cache)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn validate_schema(v: &Value) -> Result<Vec<(String, String)>, String> {
    let obj = v.as_object().ok_or("not an object")?;
    for key in ["suite", "status", "checks", "elapsed_ms"] {
        ensure(obj.contains_key(key), || format!("missing {key}"))?;
    }
    ensure(
        obj["suite"].is_string() && obj["elapsed_ms"].is_u64(),
        || "field types".into(),
    )?;
    let status = obj["status"].as_str().ok_or("status type")?;
    ensure(status == "pass" || status == "fail", || {
        format!("status {status}")
    })?;
    let mut out = Vec::new();
    for c in obj["checks"].as_array().ok_or("checks type")? {
        let c = c.as_object().ok_or("check type")?;
        ensure(c.len() == 4, || {
            format!("check keys {:?}", c.keys().collect::<Vec<_>>())
        })?;
        for key in ["id", "description", "status", "witness"] {
            ensure(c.get(key).is_some_and(Value::is_string), || {
                format!("check {key}")
            })?;
        }
        let s = c["status"].as_str().unwrap();
        ensure(s == "pass" || s == "fail", || format!("check status {s}"))?;
        out.push((c["id"].as_str().unwrap().to_string(), s.to_string()));
    }
    let mut ids: Vec<&String> = out.iter().map(|(i, _)| i).collect();
    ids.dedup();
    ensure(
        ids.len() == out.len() && ids.windows(2).all(|w| w[0] < w[1]),
        || "ids unique and ordered".into(),
    )?;
    let all_pass = out.iter().all(|(_, s)| s == "pass");
    ensure(all_pass == (status == "pass"), || "overall status".into())?;
    Ok(out)
}

fn c10_cli() -> Outcome {
    let dir = tempfile::tempdir().map_err(|x| x.to_string())?;
    let (code, json) = k3lab(
        &["verify", "--suite", "all", "--format", "json"],
        dir.path(),
    );
    ensure(code == 0, || format!("clean run exit {code}"))?;
    let v: Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    validate_schema(&v)?;
    let (code, _) = k3lab(&["verify", "--suite", "nonsense"], dir.path());
    ensure(code == 2, || format!("unknown suite exit {code}"))?;
    let mutations = Constants::mutations();
    for m in &mutations {
        let (code, json) = k3lab(
            &[
                "verify", "--suite", "all", "--format", "json", "--mutate", m.id,
            ],
            dir.path(),
        );
        ensure(code == 1, || format!("{} exit {code}", m.id))?;
        let v: Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
        let checks = validate_schema(&v)?;
        ensure(v["status"] == "fail", || format!("{} status", m.id))?;
        let prefix = format!("{}.", m.suite);
        ensure(
            checks
                .iter()
                .any(|(id, s)| s == "fail" && id.starts_with(&prefix)),
            || format!("{} not named in {}", m.id, m.suite),
        )?;
    }
    Ok(format!(
        "exit 0 clean, {} mutations exit 1 with a named check, schema ok",
        mutations.len()
    ))
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("H polynomials sum to zero", 5, c1_h_sum),
        ("master cubic identity with fitted kappa", 60, c2_master),
        ("route independence", 10, c3_routes),
        ("19-curve lattice", 5, c4_mirror),
        ("Kummer classes", 5, c5_kummer),
        ("toric data", 5, c6_toric),
        ("Weierstrass fibers and degeneracy", 10, c7_weierstrass),
        ("modular checks", 120, c8_modular),
        ("j - 1728 factorization and j(1/4)", 1, c9_j),
        ("CLI exit codes, mutations and JSON", 600, c10_cli),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = f();
        let secs = t.elapsed().as_secs_f64();
        let res = res.and_then(|w| {
            if secs < *budget as f64 {
                Ok(w)
            } else {
                Err(format!("{secs:.2} s over the {budget} s budget"))
            }
        });
        match res {
            Ok(w) => println!("PASS criterion {:>2}: {name} ({secs:.2} s) {w}", i + 1),
            Err(w) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({secs:.2} s) {w}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
