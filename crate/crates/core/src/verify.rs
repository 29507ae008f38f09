//! Verification suites.
//!
//! Each suite is a table of named checks. A check returns a pass flag and a
//! witness string; an error inside a check counts as a failure whose witness
//! is the error message. Checks run concurrently and the report is ordered by
//! check id, so output is deterministic for a fixed seed and cache state.

use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constants::Constants;
use crate::exact::{int, rat, BigComplex};
use crate::kummer::{self, KummerClass};
use crate::lattice::{direct_sum, graph_to_gram, is_e8_dynkin, standard_lattice, StandardLattice};
use crate::modular::{self, CacheStatus, ModularPolynomial};
use crate::shioda_inose as si;
use crate::toric::{self, LatticePolytope, Singularity};
use crate::weierstrass::{self, FamilyMember, FiberLocation, KodairaType};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Identities,
    Lattice,
    Kummer,
    Toric,
    Weierstrass,
    Modular,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "all",
        "identities",
        "lattice",
        "kummer",
        "toric",
        "weierstrass",
        "modular",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Identities => "identities",
            Suite::Lattice => "lattice",
            Suite::Kummer => "kummer",
            Suite::Toric => "toric",
            Suite::Weierstrass => "weierstrass",
            Suite::Modular => "modular",
        }
    }

    fn checks(self) -> Vec<&'static CheckDef> {
        let prefix = format!("{}.", self.name());
        CHECKS
            .iter()
            .filter(|d| self == Suite::All || d.id.starts_with(&prefix))
            .collect()
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "identities" => Suite::Identities,
            "lattice" => Suite::Lattice,
            "kummer" => Suite::Kummer,
            "toric" => Suite::Toric,
            "weierstrass" => Suite::Weierstrass,
            "modular" => Suite::Modular,
            other => return Err(Error::UnknownSuite(other.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    /// Pass iff every check passes.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Where modular polynomials are cached.
    pub cache_dir: PathBuf,
    /// Seed for every random sample drawn by the suites.
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 0x006b_336c_6162;

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cache_dir: modular::cache_dir(None),
            seed: DEFAULT_SEED,
        }
    }
}

struct Ctx<'a> {
    c: &'a Constants,
    opts: &'a VerifyOptions,
}

impl Ctx<'_> {
    /// A generator private to one check, so results do not depend on
    /// scheduling.
    fn rng(&self, id: &str) -> ChaCha8Rng {
        let h = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
        });
        ChaCha8Rng::seed_from_u64(self.opts.seed ^ h)
    }
}

type Outcome = Result<(bool, String)>;

struct CheckDef {
    id: &'static str,
    description: &'static str,
    run: fn(&Ctx) -> Outcome,
}

macro_rules! check {
    ($id:literal, $desc:literal, $f:expr) => {
        CheckDef {
            id: $id,
            description: $desc,
            run: $f,
        }
    };
}

const CHECKS: &[CheckDef] = &[
    check!(
        "identities.h_bidegree",
        "H_inf, H_plus, H_minus are bihomogeneous of bidegree (4, 3)",
        h_bidegree
    ),
    check!(
        "identities.h_sum",
        "H_inf + H_plus + H_minus is the zero polynomial",
        h_sum
    ),
    check!(
        "identities.h_sum_samples",
        "H_inf + H_plus + H_minus vanishes at 20 random rational points",
        h_sum_samples
    ),
    check!(
        "identities.square_root_relation",
        "((z-1)/(z+1))^2 is the expected ratio of H polynomials",
        square_root
    ),
    check!(
        "identities.kappa_fit",
        "kappa fitted at random points agrees with the recorded value",
        kappa_fit
    ),
    check!(
        "identities.master_identity",
        "master cubic identity holds exactly with the recorded kappa",
        master_identity
    ),
    check!(
        "identities.master_samples",
        "master cubic identity holds at 10 random rational points",
        master_samples
    ),
    check!(
        "identities.master_control",
        "master cubic identity fails for twice the recorded kappa",
        master_control
    ),
    check!(
        "identities.depressed_cubic",
        "completing the cube in the master cubic recovers a^3 and b^2",
        depressed_cubic
    ),
    check!(
        "identities.route_symbolic",
        "a^3 = -j1 j2/110592 and b^2 = (j1-1728)(j2-1728)/746496 in Q(l1, l2)",
        route_symbolic
    ),
    check!(
        "identities.route_samples",
        "lambda route and j route agree exactly on 50 random rational pairs",
        route_samples
    ),
    check!(
        "identities.j_factorization",
        "256(l^2-l+1)^3 - 1728 l^2 (l-1)^2 = 64((l+1)(l-2)(2l-1))^2",
        j_factorization
    ),
    check!(
        "identities.j_quarter",
        "j(1/4) = 35152/9 and j(1/4) - 1728 = 19600/9",
        j_quarter
    ),
    check!(
        "lattice.mirror_graph",
        "the 19-curve graph is a tree on 19 nodes",
        mirror_graph
    ),
    check!(
        "lattice.invariants",
        "the curve lattice is even of rank 18 and signature (1, 17)",
        mirror_invariants
    ),
    check!(
        "lattice.unimodular_basis",
        "a subset of the curves is an integral basis of determinant -1 or 1",
        unimodular_basis
    ),
    check!(
        "lattice.unimodular_model",
        "U + E8(-1) + E8(-1) has the same invariants",
        unimodular_model
    ),
    check!(
        "lattice.e8_sides",
        "both 8-node sides are E8 Dynkin diagrams",
        e8_sides
    ),
    check!(
        "lattice.section_fiber",
        "S^2 = -2, F^2 = 0, S.F = 1",
        section_fiber
    ),
    check!(
        "lattice.kernel",
        "the kernel is spanned by the difference of the two fiber diagrams",
        kernel
    ),
    check!("lattice.divisors", "l3^2 = 0 and (2 l4)^2 = 8", divisors),
    check!("kummer.d_square", "D^2 = 0", d_square),
    check!(
        "kummer.iistar_fiber",
        "the II* decomposition sums to D and its components are orthogonal to D",
        iistar
    ),
    check!("kummer.i0star_fibers", "both I0* fibers sum to D", i0star),
    check!(
        "kummer.c2_class",
        "C2 from the difference formula equals the displayed class",
        c2_class
    ),
    check!(
        "kummer.curve_classes",
        "all named curves are integral (-2)-classes",
        curve_classes
    ),
    check!(
        "kummer.labeled_graph",
        "the 20-label pairing matrix matches the displayed tree",
        labeled_graph
    ),
    check!(
        "kummer.labeled_rank",
        "the 20 labelled classes span a lattice of rank 18",
        labeled_rank
    ),
    check!(
        "kummer.branch_octet",
        "the branch octet is pairwise orthogonal",
        branch_octet
    ),
    check!(
        "kummer.fricke_numbers",
        "(R_Y - nF2 - F1)^2 = -4n and R_X^2 = -8n for n = 1, 2, 3, 5",
        fricke_numbers
    ),
    check!(
        "toric.delta",
        "the simplex satisfies its vertex relation and has the origin as only interior point",
        delta_check
    ),
    check!(
        "toric.dual_vertices",
        "the polar dual has the listed vertices and dualises back",
        dual_vertices
    ),
    check!(
        "toric.edge_profile",
        "dual edge lengths give the profile A11, A2, A2, A1, A1, smooth",
        edge_profile
    ),
    check!(
        "toric.facet_genera",
        "facet curve genera are 0, 0, 1, 2",
        facet_genera
    ),
    check!(
        "toric.lattice_points",
        "point counts agree with the support and with weighted monomials of degree 12",
        lattice_points
    ),
    check!(
        "toric.support_shift",
        "shift (0,-2,-3) sends z, 1/z, x^3, y^2 to the vertices and xy to the origin",
        support_shift
    ),
    check!(
        "weierstrass.substitution",
        "the Weierstrass model matches the family and is palindromic",
        substitution
    ),
    check!(
        "weierstrass.end_fibers",
        "50 random members have II* at 0 and infinity and Euler budget 24",
        end_fibers
    ),
    check!(
        "weierstrass.degeneracy_examples",
        "degeneracy from (a, b) and from (a^3, b^2) agree",
        degeneracy_examples
    ),
    check!(
        "weierstrass.degeneracy_matched",
        "20 lambda pairs with j1 = j2 are degenerate",
        degeneracy_matched
    ),
    check!(
        "weierstrass.degeneracy_unmatched",
        "20 lambda pairs with j1 != j2 are not degenerate",
        degeneracy_unmatched
    ),
    check!("modular.j_i", "|j(i) - 1728| < 1e-15 at 256 bits", j_at_i),
    check!(
        "modular.j_2i",
        "|j(2i) - 287496| < 1e-10 at 256 bits",
        j_at_2i
    ),
    check!(
        "modular.phi2",
        "Phi_2 has integer symmetric coefficients with rounding residue < 1e-6",
        phi2
    ),
    check!(
        "modular.phi3",
        "Phi_3 has integer symmetric coefficients with rounding residue < 1e-6",
        phi3
    ),
    check!(
        "modular.phi2_coefficients",
        "Phi_2 has the recorded X^2Y^2 coefficient and monic leading terms",
        phi2_coefficients
    ),
    check!(
        "modular.vanishing",
        "Phi_n(j(tau), j(-1/(n tau))) vanishes at 10 random tau for n = 2, 3",
        vanishing
    ),
    check!(
        "modular.family_powers",
        "numeric a, b from a Fricke pair cube and square to the j route",
        family_powers
    ),
];

/// Runs one suite against the given constants.
pub fn run(suite: Suite, c: &Constants, opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let ctx = Ctx { c, opts };
    let mut checks: Vec<Check> = suite
        .checks()
        .par_iter()
        .map(|d| {
            let (passed, witness) = match (d.run)(&ctx) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            Check {
                id: d.id.to_string(),
                description: d.description.to_string(),
                passed,
                witness,
            }
        })
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteReport {
        suite: suite.name().to_string(),
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs a suite by name.
pub fn run_named(name: &str, c: &Constants, opts: &VerifyOptions) -> Result<SuiteReport> {
    Ok(run(name.parse()?, c, opts))
}

/// Ids of every check in a suite.
pub fn check_ids(suite: Suite) -> Vec<&'static str> {
    suite.checks().iter().map(|d| d.id).collect()
}

fn verdict(ok: bool, witness: impl Into<String>) -> Outcome {
    Ok((ok, witness.into()))
}

// Sampling.

fn small_rational(rng: &mut impl Rng) -> BigRational {
    let n: i64 = rng.gen_range(-40..=40);
    let d: i64 = rng.gen_range(1..=25);
    rat(n, d)
}

fn nonzero_rational(rng: &mut impl Rng) -> BigRational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn lambda(rng: &mut impl Rng) -> BigRational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() && !r.is_one() {
            return r;
        }
    }
}

fn point6(rng: &mut impl Rng) -> Vec<BigRational> {
    (0..6).map(|_| nonzero_rational(rng)).collect()
}

// Identities.

fn h_bidegree(x: &Ctx) -> Outcome {
    let h = si::build_h_polys(x.c)?;
    verdict(
        h.has_bidegree_4_3()?,
        "bidegree (4, 3) in (u1, v1), (u2, v2)",
    )
}

fn h_sum(x: &Ctx) -> Outcome {
    let h = si::build_h_polys(x.c)?;
    let s = h.sum();
    verdict(
        si::verify_h_sum(&h),
        format!("sum has {} terms", s.num_terms()),
    )
}

fn h_sum_samples(x: &Ctx) -> Outcome {
    let h = si::build_h_polys(x.c)?;
    let mut rng = x.rng("identities.h_sum_samples");
    let pts: Vec<_> = (0..20).map(|_| point6(&mut rng)).collect();
    verdict(si::h_sum_spot_check(&h, &pts), "20 points")
}

fn square_root(x: &Ctx) -> Outcome {
    let h = si::build_h_polys(x.c)?;
    let ok = si::square_root_relation(x.c, &h)?;
    verdict(ok, format!("z + 1/z scale {}", x.c.zz_scale))
}

/// Points where every denominator of the master identity is nonzero.
fn master_points(x: &Ctx, id: &str, n: usize) -> Result<Vec<Vec<BigRational>>> {
    let h = si::build_h_polys(x.c)?;
    let data = si::build_x1_y1(x.c, &h, &BigRational::one())?;
    let mut rng = x.rng(id);
    let mut out = Vec::with_capacity(n);
    let mut tries = 0;
    while out.len() < n {
        tries += 1;
        if tries > 50 * n {
            return Err(Error::NoKappa);
        }
        let p = point6(&mut rng);
        let ok = si::master_residual_at(x.c, &data, &p).is_ok()
            && !data.y1_squared.evaluate_slice(&p)?.is_zero();
        if ok {
            out.push(p);
        }
    }
    Ok(out)
}

fn kappa_fit(x: &Ctx) -> Outcome {
    let h = si::build_h_polys(x.c)?;
    let pts = master_points(x, "identities.kappa_fit", 3)?;
    let fitted = si::fit_kappa(x.c, &h, &pts)?;
    let recorded = si::kappa(x.c);
    verdict(
        fitted == recorded,
        format!("fitted {fitted}, recorded {recorded}"),
    )
}

fn master_identity(x: &Ctx) -> Outcome {
    let h = si::build_h_polys(x.c)?;
    let k = si::kappa(x.c);
    let s = si::master_sum(x.c, &h, &k)?;
    let n = s.cleared_numerator();
    verdict(
        n.is_zero(),
        format!("kappa {k}, cleared numerator has {} terms", n.num_terms()),
    )
}

fn master_samples(x: &Ctx) -> Outcome {
    let h = si::build_h_polys(x.c)?;
    let pts = master_points(x, "identities.master_samples", 10)?;
    let ok = si::master_spot_check(x.c, &h, &si::kappa(x.c), &pts)?;
    verdict(ok, "10 points")
}

fn master_control(x: &Ctx) -> Outcome {
    let h = si::build_h_polys(x.c)?;
    let k = si::kappa(x.c) * int(2);
    let holds = si::verify_master_identity(x.c, &h, &k)?;
    verdict(!holds, format!("kappa {k} rejected: {}", !holds))
}

fn depressed_cubic(x: &Ctx) -> Outcome {
    let (a, b) = si::depressed_cubic_check(x.c)?;
    verdict(a && b, format!("a^3 {a}, b^2 {b}"))
}

fn route_symbolic(x: &Ctx) -> Outcome {
    let (a, b) = si::route_independence_symbolic(x.c)?;
    verdict(a && b, format!("a^3 {a}, b^2 {b}"))
}

fn route_samples(x: &Ctx) -> Outcome {
    let mut rng = x.rng("identities.route_samples");
    for _ in 0..50 {
        let (l1, l2) = (lambda(&mut rng), lambda(&mut rng));
        let by_lambda = si::ab_powers_from_lambda(x.c, &l1, &l2)?;
        let j1 = si::j_from_lambda(x.c, &l1)?;
        let j2 = si::j_from_lambda(x.c, &l2)?;
        let by_j = si::ab_powers_from_j(x.c, &j1, &j2);
        if by_lambda != by_j {
            return verdict(false, format!("disagree at l1 = {l1}, l2 = {l2}"));
        }
    }
    verdict(true, "50 pairs")
}

fn j_factorization(x: &Ctx) -> Outcome {
    verdict(
        si::j_minus_1728_factorization(x.c),
        format!("factor {}", x.c.factorization_coeff),
    )
}

fn j_quarter(x: &Ctx) -> Outcome {
    let (j, ok) = si::j_quarter_check(x.c)?;
    verdict(
        ok,
        format!("j(1/4) = {j}, j(1/4) - 1728 = {}", &j - int(1728)),
    )
}

// Lattice.

fn mirror_lattice(c: &Constants) -> Result<crate::lattice::GramLattice> {
    Ok(graph_to_gram(&toric::mirror_curve_graph(c)?))
}

fn mirror_graph(x: &Ctx) -> Outcome {
    let g = toric::mirror_curve_graph(x.c)?;
    let (n, e) = (g.len(), g.edge_count());
    verdict(n == 19 && e == 18, format!("{n} nodes, {e} edges"))
}

fn mirror_invariants(x: &Ctx) -> Outcome {
    let inv = mirror_lattice(x.c)?.invariants();
    let ok = inv.is_even && inv.rank == x.c.mirror_rank && inv.signature == x.c.mirror_signature;
    verdict(
        ok,
        format!(
            "rank {}, signature {:?}, even {}",
            inv.rank, inv.signature, inv.is_even
        ),
    )
}

fn unimodular_basis(x: &Ctx) -> Outcome {
    let lat = mirror_lattice(x.c)?;
    let det = lat.quotient_determinant();
    let basis = lat.quotient_basis();
    let ok = det.abs().is_one() && basis.is_some();
    let dropped = match &basis {
        Some(keep) => lat
            .labels()
            .iter()
            .enumerate()
            .filter(|(i, _)| !keep.contains(i))
            .map(|(_, l)| l.as_str())
            .collect::<Vec<_>>()
            .join(","),
        None => "none".into(),
    };
    verdict(ok, format!("determinant {det}, basis drops {dropped}"))
}

fn unimodular_model(x: &Ctx) -> Outcome {
    let e8 = standard_lattice(StandardLattice::E8Negative);
    let model = direct_sum(&direct_sum(&standard_lattice(StandardLattice::U), &e8), &e8);
    let (m, l) = (model.invariants(), mirror_lattice(x.c)?.invariants());
    let ok = m.rank == l.rank
        && m.signature == l.signature
        && m.is_even == l.is_even
        && m.determinant.abs() == l.determinant.abs();
    verdict(
        ok,
        format!(
            "model rank {}, signature {:?}, determinant {}",
            m.rank, m.signature, m.determinant
        ),
    )
}

fn e8_sides(x: &Ctx) -> Outcome {
    let g = toric::mirror_curve_graph(x.c)?;
    let flags: Vec<bool> =
        x.c.mirror_e8_sides
            .iter()
            .map(|side| Ok(is_e8_dynkin(&g.induced(side)?)))
            .collect::<Result<_>>()?;
    verdict(flags.iter().all(|f| *f), format!("{flags:?}"))
}

fn section_fiber(x: &Ctx) -> Outcome {
    let lat = mirror_lattice(x.c)?;
    let s = lat.vector(&x.c.mirror_section)?;
    let f = lat.vector(&x.c.mirror_fiber)?;
    let (ss, ff, sf) = (lat.pair(&s, &s)?, lat.pair(&f, &f)?, lat.pair(&s, &f)?);
    verdict(
        (ss, ff, sf) == (-2, 0, 1),
        format!("S^2 = {ss}, F^2 = {ff}, S.F = {sf}"),
    )
}

fn kernel(x: &Ctx) -> Outcome {
    let lat = mirror_lattice(x.c)?;
    let f = lat.vector(&x.c.mirror_fiber)?;
    let top = lat.vector(&x.c.mirror_fiber_top)?;
    let diff: Vec<i64> = top.iter().zip(&f).map(|(a, b)| a - b).collect();
    let neg: Vec<i64> = diff.iter().map(|v| -v).collect();
    let ker = lat.kernel_basis();
    let ok = ker.len() == 1 && (ker[0] == diff || ker[0] == neg);
    verdict(ok, format!("kernel dimension {}", ker.len()))
}

fn divisors(x: &Ctx) -> Outcome {
    let lat = mirror_lattice(x.c)?;
    let l3 = lat.vector(&x.c.l3_weights)?;
    let l4 = lat.vector(&x.c.l4_weights)?;
    let (a, b) = (lat.pair(&l3, &l3)?, 4 * lat.pair(&l4, &l4)?);
    verdict(a == 0 && b == 8, format!("l3^2 = {a}, (2 l4)^2 = {b}"))
}

// Kummer.

fn d_square(x: &Ctx) -> Outcome {
    let d = kummer::big_d(x.c)?;
    let s = d.square();
    verdict(s.is_zero(), format!("D = {d}, D^2 = {s}"))
}

fn iistar(x: &Ctx) -> Outcome {
    let r = kummer::iistar_fiber_check(x.c)?;
    let off: Vec<String> = r
        .component_pairings
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(l, p)| format!("{l}.D = {p}"))
        .collect();
    let w = if r.sum == r.d {
        format!(
            "sum equals D; {} nonzero pairings {}",
            off.len(),
            off.join(" ")
        )
    } else {
        format!("sum {} differs from D {}", r.sum, r.d)
    };
    verdict(r.holds(), w)
}

fn i0star(x: &Ctx) -> Outcome {
    let d = kummer::big_d(x.c)?;
    let (one, two) = kummer::i0star_fibers(x.c)?;
    let (s1, s2) = (kummer::fiber_sum(&one), kummer::fiber_sum(&two));
    verdict(
        s1 == d && s2 == d,
        format!("first {}, second {}", s1 == d, s2 == d),
    )
}

fn c2_class(x: &Ctx) -> Outcome {
    let m = kummer::named_classes(x.c)?;
    let shown = KummerClass::from_spec(&x.c.c2_class)?;
    verdict(m["C2"] == shown, format!("derived {}", m["C2"]))
}

fn curve_classes(x: &Ctx) -> Outcome {
    let m = kummer::named_classes(x.c)?;
    let bad: Vec<&str> = m
        .iter()
        .filter(|(l, _)| l.as_str() != "D" && l.as_str() != "F1" && l.as_str() != "F2")
        .filter(|(_, k)| !k.is_integral() || k.square() != (-2).into())
        .map(|(l, _)| l.as_str())
        .collect();
    verdict(
        bad.is_empty(),
        format!("{} curves, failing [{}]", m.len() - 3, bad.join(",")),
    )
}

fn labeled_graph(x: &Ctx) -> Outcome {
    let r = kummer::labeled_graph_check(x.c)?;
    let mm = r.mismatches();
    let w = match mm.first() {
        None => format!("{} labels match", r.labels.len()),
        Some((a, b, got, want)) => {
            format!(
                "{} mismatches, first {a}.{b} = {got} expected {want}",
                mm.len()
            )
        }
    };
    verdict(mm.is_empty(), w)
}

fn labeled_rank(x: &Ctx) -> Outcome {
    let r = kummer::labeled_graph_check(x.c)?;
    verdict(r.rank == x.c.labeled_rank, format!("rank {}", r.rank))
}

fn branch_octet(x: &Ctx) -> Outcome {
    let oct = kummer::branch_octet(x.c)?;
    let mut bad = Vec::new();
    for (i, (a, ca)) in oct.iter().enumerate() {
        for (b, cb) in &oct[i + 1..] {
            if !ca.pair(cb).is_zero() {
                bad.push(format!("{a}.{b}"));
            }
        }
    }
    let ok = oct.len() == 8 && bad.is_empty();
    verdict(
        ok,
        format!("{} members, nonorthogonal [{}]", oct.len(), bad.join(",")),
    )
}

fn fricke_numbers(x: &Ctx) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [1, 2, 3, 5] {
        let f = kummer::fricke_numbers(x.c, n)?;
        ok &= f.proj_square == -4 * n && f.rx_square == -8 * n;
        parts.push(format!("n={n}: {} {}", f.proj_square, f.rx_square));
    }
    verdict(ok, parts.join("; "))
}

// Toric.

fn delta_check(x: &Ctx) -> Outcome {
    let d = toric::delta(x.c)?;
    let rel = toric::vertex_relation(&x.c.delta_vertices, &x.c.delta_relation);
    let interior = d.interior_points();
    let ok = rel == [0, 0, 0] && interior == vec![[0, 0, 0]];
    verdict(ok, format!("relation {rel:?}, interior {interior:?}"))
}

fn dual_vertices(x: &Ctx) -> Outcome {
    let d = toric::delta(x.c)?;
    let dd = d.dual()?;
    let back = dd.dual()?.same_as(&d);
    let ok = dd.vertices() == x.c.dual_vertices && back;
    verdict(
        ok,
        format!("dual {:?}, dualises back {back}", dd.vertices()),
    )
}

fn dual_polytope(x: &Ctx) -> Result<LatticePolytope> {
    toric::delta(x.c)?.dual()
}

fn edge_profile(x: &Ctx) -> Outcome {
    let dd = dual_polytope(x)?;
    let reps = dd.edge_reports();
    let v = &x.c.dual_vertices;
    for &(i, j, len) in &x.c.dual_edge_lengths {
        let (a, b) = (v[i], v[j]);
        let found = reps
            .iter()
            .find(|r| r.endpoints == (a, b) || r.endpoints == (b, a));
        match found {
            Some(r) if r.lattice_length == len => {}
            Some(r) => {
                return verdict(
                    false,
                    format!(
                        "edge {a:?}-{b:?} has length {}, recorded {len}",
                        r.lattice_length
                    ),
                )
            }
            None => return verdict(false, format!("no edge {a:?}-{b:?}")),
        }
    }
    let mut profile: Vec<Singularity> = reps.iter().map(|r| r.singularity).collect();
    profile.sort_by(|a, b| b.cmp(a));
    let want = [
        Singularity::A(11),
        Singularity::A(2),
        Singularity::A(2),
        Singularity::A(1),
        Singularity::A(1),
        Singularity::Smooth,
    ];
    let shown: Vec<String> = profile.iter().map(|s| s.to_string()).collect();
    let ok = reps.len() == x.c.dual_edge_lengths.len() && profile == want;
    verdict(ok, shown.join(","))
}

fn facet_genera(x: &Ctx) -> Outcome {
    let d = toric::delta(x.c)?;
    let mut got = Vec::new();
    let mut ok = d.facets().len() == x.c.facet_genera.len();
    for (facet, g) in &x.c.facet_genera {
        let actual = d.facet_genus(*facet)?;
        ok &= actual == *g;
        got.push(actual);
    }
    got.sort();
    verdict(ok, format!("{got:?}"))
}

fn lattice_points(x: &Ctx) -> Outcome {
    let d = toric::delta(x.c)?;
    let dd = d.dual()?;
    let (nd, ndd) = (d.lattice_points().len(), dd.lattice_points().len());
    let support = toric::support_monomials(x.c).len();
    let forms = toric::weighted_monomial_count(&x.c.wp_weights, x.c.wp_degree);
    let ok = nd == support && ndd as u64 == forms;
    verdict(
        ok,
        format!("simplex {nd}, support {support}, dual {ndd}, weighted forms {forms}"),
    )
}

fn support_shift(x: &Ctx) -> Outcome {
    let s = toric::support_shift(x.c)?;
    let d = toric::delta(x.c)?;
    let interior: Vec<&str> = s
        .shifted
        .iter()
        .filter(|(_, p)| d.is_interior(*p))
        .map(|(n, _)| *n)
        .collect();
    let ok = s.shift == [0, -2, -3] && interior == ["xy"] && s.shifted("xy") == Some([0, 0, 0]);
    verdict(ok, format!("shift {:?}, interior {interior:?}", s.shift))
}

// Weierstrass.

fn substitution(x: &Ctx) -> Outcome {
    let mut rng = x.rng("weierstrass.substitution");
    for _ in 0..5 {
        let m = FamilyMember::new(small_rational(&mut rng), small_rational(&mut rng));
        if !weierstrass::substitution_check(&m)?
            || !weierstrass::to_weierstrass(&m).is_palindromic()
        {
            return verdict(false, format!("fails at a = {}, b = {}", m.a, m.b));
        }
    }
    verdict(true, "5 members")
}

fn end_fibers(x: &Ctx) -> Outcome {
    let want: KodairaType = x.c.end_fiber.parse()?;
    let mut rng = x.rng("weierstrass.end_fibers");
    let mut seen = 0;
    while seen < 50 {
        let m = FamilyMember::new(small_rational(&mut rng), small_rational(&mut rng));
        if weierstrass::is_degenerate(&m) {
            continue;
        }
        seen += 1;
        let f = weierstrass::fiber_analysis(&m)?;
        let (z, i) = (f.at(&FiberLocation::Zero), f.at(&FiberLocation::Infinity));
        let extra: u32 = f.extra().iter().map(|(n, t)| n * t.euler_number()).sum();
        if z != Some(want) || i != Some(want) || f.euler_total() != 24 {
            return verdict(
                false,
                format!(
                    "a = {}, b = {}: {z:?} at 0, {i:?} at inf, total {}",
                    m.a,
                    m.b,
                    f.euler_total()
                ),
            );
        }
        if extra != 24 - 2 * want.euler_number() {
            return verdict(false, format!("a = {}, b = {}: extra {extra}", m.a, m.b));
        }
    }
    verdict(
        true,
        format!("50 members: {want} at 0 and inf, budget 10+10+4"),
    )
}

fn degeneracy_examples(x: &Ctx) -> Outcome {
    let mut rng = x.rng("weierstrass.degeneracy_examples");
    let mut members = vec![
        FamilyMember::from_ints(-3, 0),
        FamilyMember::from_ints(0, 2),
        FamilyMember::from_ints(1, 1),
    ];
    members.extend(
        (0..20).map(|_| FamilyMember::new(small_rational(&mut rng), small_rational(&mut rng))),
    );
    for m in &members {
        let a3 = &m.a * &m.a * &m.a;
        let b2 = &m.b * &m.b;
        if weierstrass::is_degenerate(m) != weierstrass::is_degenerate_from_powers(&a3, &b2) {
            return verdict(false, format!("disagree at a = {}, b = {}", m.a, m.b));
        }
    }
    let flags = [
        weierstrass::is_degenerate(&members[0]),
        weierstrass::is_degenerate(&members[1]),
        weierstrass::is_degenerate(&members[2]),
    ];
    verdict(
        flags == [true, true, false],
        format!("{} members, examples {flags:?}", members.len()),
    )
}

/// `λ₂` in the anharmonic orbit of `λ₁`, so `j(λ₁) = j(λ₂)`.
fn orbit_partner(l: &BigRational, k: usize) -> BigRational {
    let one = BigRational::one();
    match k % 6 {
        0 => l.clone(),
        1 => &one - l,
        2 => l.recip(),
        3 => (&one - l).recip(),
        4 => l / (l - &one),
        _ => (l - &one) / l,
    }
}

fn degeneracy_flag(x: &Ctx, l1: &BigRational, l2: &BigRational) -> Result<(bool, bool)> {
    let p = si::ab_powers_from_lambda(x.c, l1, l2)?;
    let same_j = si::j_from_lambda(x.c, l1)? == si::j_from_lambda(x.c, l2)?;
    Ok((
        weierstrass::is_degenerate_from_powers(&p.a_cubed, &p.b_squared),
        same_j,
    ))
}

fn degeneracy_matched(x: &Ctx) -> Outcome {
    let mut rng = x.rng("weierstrass.degeneracy_matched");
    for k in 0..20 {
        let l1 = lambda(&mut rng);
        let l2 = orbit_partner(&l1, k);
        let (flag, same) = degeneracy_flag(x, &l1, &l2)?;
        if !flag || !same {
            return verdict(
                false,
                format!("l1 = {l1}, l2 = {l2}: flag {flag}, j1 = j2 {same}"),
            );
        }
    }
    verdict(true, "20 pairs flagged")
}

fn degeneracy_unmatched(x: &Ctx) -> Outcome {
    let mut rng = x.rng("weierstrass.degeneracy_unmatched");
    let mut seen = 0;
    while seen < 20 {
        let (l1, l2) = (lambda(&mut rng), lambda(&mut rng));
        let (flag, same) = degeneracy_flag(x, &l1, &l2)?;
        if same {
            continue;
        }
        seen += 1;
        if flag {
            return verdict(false, format!("l1 = {l1}, l2 = {l2} flagged"));
        }
    }
    verdict(true, "20 pairs not flagged")
}

// Modular.

const CHECK_PRECISION: usize = 256;

fn j_at(tau_im: i64) -> Result<BigComplex> {
    let tau = BigComplex::new(
        crate::exact::real_from_i64(0, CHECK_PRECISION),
        crate::exact::real_from_i64(tau_im, CHECK_PRECISION),
        CHECK_PRECISION,
    );
    modular::j_numeric(&tau)
}

fn j_at_i(x: &Ctx) -> Outcome {
    let j = j_at(1)?;
    let err = j.dist(&BigComplex::from_i64(x.c.j_at_i, CHECK_PRECISION));
    verdict(err < 1e-15, format!("error {err:e}"))
}

fn j_at_2i(x: &Ctx) -> Outcome {
    let j = j_at(2)?;
    let err = j.dist(&BigComplex::from_i64(x.c.j_at_2i, CHECK_PRECISION));
    verdict(err < 1e-10, format!("error {err:e}"))
}

/// `Φₙ` through the cache, with the rounding residue when freshly built.
fn obtain(x: &Ctx, n: u32) -> Result<(ModularPolynomial, Option<f64>)> {
    match modular::load_cached(&x.opts.cache_dir, n) {
        Ok(Some(p)) if p.is_symmetric() => return Ok((p, None)),
        _ => {}
    }
    let r = modular::build_modular_polynomial(n)?;
    modular::store_cached(&x.opts.cache_dir, &r.poly)?;
    Ok((r.poly, Some(r.max_residue)))
}

fn phi(x: &Ctx, n: u32) -> Outcome {
    let (p, residue) = obtain(x, n)?;
    let deg = n + 1;
    let ok = p.is_symmetric()
        && p.degree_x() == deg
        && p.degree_y() == deg
        && p.coeff(deg, 0).is_one()
        && residue.is_none_or(|r| r < modular::ROUNDING_THRESHOLD);
    let origin = match residue {
        Some(r) => format!("built, residue {r:e}"),
        None => format!("cached ({:?})", CacheStatus::Hit),
    };
    verdict(
        ok,
        format!(
            "{origin}, {} terms, largest {}",
            p.coeffs.len(),
            p.max_coefficient()
        ),
    )
}

fn phi2(x: &Ctx) -> Outcome {
    phi(x, 2)
}

fn phi3(x: &Ctx) -> Outcome {
    phi(x, 3)
}

fn phi2_coefficients(x: &Ctx) -> Outcome {
    let (p, _) = obtain(x, 2)?;
    let got = p.coeff(2, 2);
    let ok = got == BigInt::from(x.c.phi2_x2y2) && p.coeff(3, 0).is_one() && p.coeff(0, 3).is_one();
    verdict(ok, format!("X^2Y^2 coefficient {got}"))
}

fn random_tau(rng: &mut impl Rng) -> BigComplex {
    let re: f64 = rng.gen_range(-0.5..0.5);
    let im: f64 = rng.gen_range(0.8..1.6);
    BigComplex::from_f64(re, im, CHECK_PRECISION)
}

fn vanishing(x: &Ctx) -> Outcome {
    let mut rng = x.rng("modular.vanishing");
    let mut worst: f64 = 0.0;
    for n in [2u32, 3] {
        let (p, _) = obtain(x, n)?;
        for _ in 0..10 {
            let (j1, j2) = modular::fricke_pair(&random_tau(&mut rng), n)?;
            worst = worst.max(p.relative_residual(&j1, &j2));
        }
    }
    verdict(worst < 1e-4, format!("largest relative residual {worst:e}"))
}

fn family_powers(x: &Ctx) -> Outcome {
    let mut rng = x.rng("modular.family_powers");
    let p = CHECK_PRECISION;
    let k = BigComplex::from_i64(x.c.j_1728, p);
    let mut worst: f64 = 0.0;
    for n in [1u32, 2, 3] {
        for _ in 0..3 {
            let tau = random_tau(&mut rng);
            let (j1, j2) = modular::fricke_pair(&tau, n)?;
            let (a, b) = modular::family_coefficients(x.c, &tau, n)?;
            let a3 = -(&(&j1 * &j2) / &BigComplex::from_i64(x.c.a_j_cube_denominator, p));
            let b2 =
                &(&(&j1 - &k) * &(&j2 - &k)) / &BigComplex::from_i64(x.c.b_j_square_denominator, p);
            worst = worst
                .max(a.powi(3).rel_dist(&a3))
                .max(b.powi(2).rel_dist(&b2));
        }
    }
    verdict(worst < 1e-30, format!("largest relative error {worst:e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_ids_are_unique_and_prefixed() {
        let ids = check_ids(Suite::All);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        for id in &ids {
            let suite = id.split('.').next().unwrap();
            assert!(Suite::NAMES[1..].contains(&suite), "{id}");
        }
        for name in &Suite::NAMES[1..] {
            assert!(!check_ids(name.parse().unwrap()).is_empty(), "{name}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!(matches!(
            "nonsense".parse::<Suite>(),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn orbit_partners_share_j() {
        let c = Constants::reference();
        let l = rat(3, 7);
        let j = si::j_from_lambda(&c, &l).unwrap();
        for k in 0..6 {
            assert_eq!(si::j_from_lambda(&c, &orbit_partner(&l, k)).unwrap(), j);
        }
    }
}
