//! Every transcribed constant lives here: polynomials as expression strings,
//! divisor classes as integer data, graphs as edge lists, polytope vertices and
//! the scalar constants of the `(a, b)` parameterisations.
//!
//! [`Constants::reference`] returns the transcription used by all suites.
//! [`Constants::mutate`] returns a copy with exactly one constant perturbed, so
//! that a verification run can demonstrate the corresponding check fails.

use crate::{Error, Result};

/// Integer description of a Kummer class `f1·F₁ + f2·F₂ + Σ g·G_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSpec {
    pub f1: i64,
    pub f2: i64,
    /// `((i, j), coefficient)` with 1-based indices.
    pub g: Vec<((usize, usize), i64)>,
}

impl ClassSpec {
    fn new(f1: i64, f2: i64, g: &[((usize, usize), i64)]) -> Self {
        ClassSpec {
            f1,
            f2,
            g: g.to_vec(),
        }
    }
}

/// Weighted combination of named curves.
pub type Weights = Vec<(String, i64)>;

#[derive(Clone, Debug, PartialEq)]
pub struct Constants {
    // Mirror side: the 19 rational curves on X.
    /// Node order: top chain t1..t8, top branch, connector, bottom chain b1..b8, bottom branch.
    pub mirror_nodes: Vec<String>,
    pub mirror_edges: Vec<(String, String)>,
    /// The two 8-node sides generating the `E8(−1)` summands.
    pub mirror_e8_sides: [Vec<String>; 2],
    /// The section class `S` (a single curve).
    pub mirror_section: Weights,
    /// The fiber class `F` (weighted bottom diagram).
    pub mirror_fiber: Weights,
    /// The weighted top diagram, linearly equivalent to `F`.
    pub mirror_fiber_top: Weights,
    /// Divisor of `l₃` in terms of the 19 curves.
    pub l3_weights: Weights,
    /// Divisor of `l₄` in terms of the 19 curves.
    pub l4_weights: Weights,
    pub mirror_rank: usize,
    pub mirror_signature: (usize, usize),

    // Kummer side.
    pub big_d: ClassSpec,
    /// Components and multiplicities of the II* fiber equal to `D`.
    pub iistar_fiber: Weights,
    /// `(i, j)` pairs of `C₁` and `C₃` as `F₁ + F₂ − ΣG`.
    pub c1_pairs: [(usize, usize); 3],
    pub c3_pairs: [(usize, usize); 3],
    /// Explicit class of `C₂`, to be compared against the difference formula.
    pub c2_class: ClassSpec,
    pub c4_class: ClassSpec,
    /// I₀* fibers: label and multiplicity.
    pub i0star_one: Weights,
    pub i0star_two: Weights,
    /// The 20 labels in display order, and the edges of the labelled tree.
    pub labeled_nodes: Vec<String>,
    pub labeled_edges: Vec<(String, String)>,
    pub labeled_rank: usize,
    pub branch_octet: Vec<String>,
    /// `R_Y·F₁ = ry_f1_per_n·n`, `R_Y·F₂ = ry_f2`.
    pub ry_f1_per_n: i64,
    pub ry_f2: i64,

    // Toric side.
    pub delta_vertices: [[i64; 3]; 4],
    pub delta_relation: [i64; 4],
    pub dual_vertices: [[i64; 3]; 4],
    /// `(i, j, lattice length)` for the dual edges between vertices `i`, `j` (0-based).
    pub dual_edge_lengths: Vec<(usize, usize, i64)>,
    /// Facets of Δ by their vertex indices (0-based) with the genus of the curve.
    pub facet_genera: Vec<([usize; 3], u32)>,
    /// Exponent vectors of `x`, `y`, `z`.
    pub monomial_x: [i64; 3],
    pub monomial_y: [i64; 3],
    pub monomial_z: [i64; 3],
    /// Weights and degree of the weighted projective space whose forms count Δ's points.
    pub wp_weights: [i64; 4],
    pub wp_degree: i64,

    // Weierstrass side.
    /// Kodaira symbol claimed at `t = 0` and `t = ∞`.
    pub end_fiber: String,

    // Explicit formulas over u1, v1, u2, v2, l1, l2.
    pub h_inf: String,
    pub c1_poly: String,
    pub c2_poly: String,
    pub c3_poly: String,
    pub c4_poly: String,
    /// `x₁` numerator as displayed, the restored monomial, and the overall sign.
    pub x1_numerator: String,
    pub x1_restored_term: String,
    pub x1_sign: i64,
    pub x1_denominator: String,
    /// `y₁² = κ · y1_numerator_factor · H₊ · H₋ / y1_denominator`.
    pub y1_numerator_factor: String,
    pub y1_denominator_factors: Vec<(String, u32)>,
    pub kappa: (i64, i64),
    /// Master cubic coefficients of `x₁²`, `x₁`, `1` and of `z + z⁻¹`.
    pub master_x2: String,
    pub master_x1: String,
    pub master_x0: String,
    pub master_zz: String,
    /// `z + z⁻¹ = zz_scale · (H₊ − H₋) / H_∞`.
    pub zz_scale: i64,

    // Scalar constants of the parameterisations.
    pub j_lambda_coeff: i64,
    pub j_1728: i64,
    pub a_lambda_cube_coeff: (i64, i64),
    pub b_lambda_square_coeff: (i64, i64),
    pub a_j_cube_denominator: i64,
    pub b_j_square_denominator: i64,
    pub a_j_denominator: i64,
    pub b_j_denominator: i64,
    pub factorization_coeff: i64,
    pub j_quarter: (i64, i64),
    pub j_quarter_minus_1728: (i64, i64),

    // Classical values used by the modular suite.
    pub j_at_i: i64,
    pub j_at_2i: i64,
    pub phi2_x2y2: i64,
}

fn s(x: &str) -> String {
    x.to_string()
}

fn weights(pairs: &[(&str, i64)]) -> Weights {
    pairs.iter().map(|&(n, w)| (s(n), w)).collect()
}

fn edges(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|&(a, b)| (s(a), s(b))).collect()
}

fn diagram(
    top: [i64; 8],
    top_branch: i64,
    connector: i64,
    bottom: [i64; 8],
    bottom_branch: i64,
) -> Weights {
    let mut w = Vec::with_capacity(19);
    for (k, v) in top.iter().enumerate() {
        w.push((format!("t{}", k + 1), *v));
    }
    w.push((s("tb"), top_branch));
    w.push((s("s"), connector));
    for (k, v) in bottom.iter().enumerate() {
        w.push((format!("b{}", k + 1), *v));
    }
    w.push((s("bb"), bottom_branch));
    w.retain(|(_, v)| *v != 0);
    w
}

impl Constants {
    pub fn reference() -> Self {
        let mut mirror_nodes: Vec<String> = (1..=8).map(|k| format!("t{k}")).collect();
        mirror_nodes.push(s("tb"));
        mirror_nodes.push(s("s"));
        mirror_nodes.extend((1..=8).map(|k| format!("b{k}")));
        mirror_nodes.push(s("bb"));

        let mut mirror_edges = Vec::new();
        for side in ["t", "b"] {
            for k in 1..8 {
                mirror_edges.push((format!("{side}{k}"), format!("{side}{}", k + 1)));
            }
            mirror_edges.push((format!("{side}6"), format!("{side}b")));
        }
        mirror_edges.push((s("t1"), s("s")));
        mirror_edges.push((s("s"), s("b1")));

        let side = |p: &str| -> Vec<String> {
            let mut v: Vec<String> = (2..=8).map(|k| format!("{p}{k}")).collect();
            v.push(format!("{p}b"));
            v
        };
        let affine = [1, 2, 3, 4, 5, 6, 4, 2];

        Constants {
            mirror_nodes,
            mirror_edges,
            mirror_e8_sides: [side("t"), side("b")],
            mirror_section: weights(&[("s", 1)]),
            mirror_fiber: diagram([0; 8], 0, 0, affine, 3),
            mirror_fiber_top: diagram(affine, 3, 0, [0; 8], 0),
            l3_weights: diagram([2, 2, 2, 2, 2, 2, 1, 0], 1, 2, [2, 2, 2, 2, 2, 2, 1, 0], 1),
            l4_weights: diagram([3, 3, 3, 3, 3, 3, 2, 1], 1, 3, [3, 3, 3, 3, 3, 3, 2, 1], 1),
            mirror_rank: 18,
            mirror_signature: (1, 17),

            big_d: ClassSpec::new(
                3,
                4,
                &[
                    ((1, 1), -1),
                    ((1, 2), -1),
                    ((1, 3), -2),
                    ((2, 1), -2),
                    ((2, 2), -2),
                    ((3, 4), -3),
                    ((4, 3), -1),
                ],
            ),
            iistar_fiber: weights(&[
                ("F11", 2),
                ("G14", 4),
                ("G44", 3),
                ("F24", 6),
                ("G24", 5),
                ("F12", 4),
                ("G23", 3),
                ("F23", 2),
                ("G33", 1),
            ]),
            c1_pairs: [(1, 3), (2, 2), (3, 4)],
            c3_pairs: [(1, 3), (2, 1), (3, 4)],
            c2_class: ClassSpec::new(
                2,
                2,
                &[
                    ((1, 2), -1),
                    ((1, 3), -1),
                    ((2, 1), -1),
                    ((2, 2), -1),
                    ((4, 3), -1),
                    ((3, 4), -2),
                ],
            ),
            c4_class: ClassSpec::new(
                2,
                2,
                &[
                    ((1, 1), -1),
                    ((1, 3), -1),
                    ((2, 2), -1),
                    ((2, 1), -1),
                    ((4, 3), -1),
                    ((3, 4), -2),
                ],
            ),
            i0star_one: weights(&[("C1", 1), ("C2", 1), ("G31", 1), ("G41", 1), ("F21", 2)]),
            i0star_two: weights(&[("C3", 1), ("C4", 1), ("G32", 1), ("G42", 1), ("F22", 2)]),
            labeled_nodes: [
                "C1", "C2", "F21", "G41", "G31", "F13", "G33", "F23", "G23", "F12", "G24", "F24",
                "G14", "F11", "G44", "G32", "C4", "F22", "G42", "C3",
            ]
            .iter()
            .map(|x| s(x))
            .collect(),
            labeled_edges: edges(&[
                ("C1", "F21"),
                ("C2", "F21"),
                ("F21", "G41"),
                ("F21", "G31"),
                ("G31", "F13"),
                ("F13", "G33"),
                ("G33", "F23"),
                ("F23", "G23"),
                ("G23", "F12"),
                ("F12", "G24"),
                ("G24", "F24"),
                ("F24", "G14"),
                ("G14", "F11"),
                ("F24", "G44"),
                ("F13", "G32"),
                ("G32", "F22"),
                ("C4", "F22"),
                ("F22", "G42"),
                ("F22", "C3"),
            ]),
            labeled_rank: 18,
            branch_octet: ["C1", "C2", "C3", "C4", "G31", "G32", "G41", "G42"]
                .iter()
                .map(|x| s(x))
                .collect(),
            ry_f1_per_n: 2,
            ry_f2: 2,

            delta_vertices: [[-1, -4, -6], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
            delta_relation: [1, 1, 4, 6],
            dual_vertices: [[-1, -1, -1], [11, -1, -1], [-1, 2, -1], [-1, -1, 1]],
            dual_edge_lengths: vec![
                (0, 1, 12),
                (0, 2, 3),
                (1, 2, 3),
                (0, 3, 2),
                (1, 3, 2),
                (2, 3, 1),
            ],
            facet_genera: vec![
                ([0, 1, 2], 2),
                ([0, 1, 3], 1),
                ([1, 2, 3], 0),
                ([0, 2, 3], 0),
            ],
            monomial_x: [0, 1, 1],
            monomial_y: [0, 1, 2],
            monomial_z: [-1, -2, -3],
            wp_weights: [1, 1, 4, 6],
            wp_degree: 12,

            end_fiber: s("II*"),

            h_inf: s("(l2-1)*(u1-l1*v1)^3*(u1-v1)*u2*v2^2"),
            c1_poly: s("(l1-1)*v1*u2 - u1*v2 + v1*v2"),
            c2_poly: s("l1*(l1-1)*v1^2*v2^2 + l1*(l1*l2-2*l1+1)*v1^2*u2*v2 \
                 - l1*(l1-1)*u1*v1*v2^2 + (2*l1^2-2*l1*l2-l1+1)*u1*v1*u2*v2 \
                 - (l1-1)^2*u1*v1*u2^2 + (l2-1)*u1^2*u2*v2"),
            c3_poly: s("(l1-1)*u1*u2 - l1*u1*v2 + l1*v1*v2"),
            c4_poly: s("-l1^2*(l2-1)*v1^2*u2*v2 + (1-l1)*u1*v1*v2^2 \
                 + (-l1^2+2*l1*l2+l1-2)*u1*v1*u2*v2 + (l1-1)^2*u1*v1*u2^2 \
                 + (l1-1)*u1^2*v2^2 + (-l1-l2+2)*u1^2*u2*v2"),
            x1_numerator: s("(l1^2*l2-2*l1^2+l1)*v1^2*u2*v2 + (2*l1-l1^2-1)*u1*v1*u2^2 \
                 + (2*l1^2-2*l1*l2-l1+1)*u1*v1*u2*v2 + (l1-l1^2)*u1*v1*v2^2 \
                 + (l2-1)*u1^2*u2*v2"),
            x1_restored_term: s("l1*(l1-1)*v1^2*v2^2"),
            x1_sign: -1,
            x1_denominator: s("(u1-v1)*(u1-l1*v1)*(u2-v2)*v2"),
            y1_numerator_factor: s("u2-l2*v2"),
            y1_denominator_factors: vec![
                (s("u1"), 1),
                (s("v1"), 1),
                (s("u2-v2"), 3),
                (s("u1-v1"), 3),
                (s("v2"), 3),
                (s("u1-l1*v1"), 3),
                (s("u2"), 1),
            ],
            kappa: (1, 1),
            master_x2: s("l1*l2 - 2*l1 + l2 + 1"),
            master_x1: s("-(l1*l2 - l1 + 1)*(l1 - l2)"),
            master_x0: s("-1/2*(l1-1)*(l2-1)*l1*l2"),
            master_zz: s("-1/4*l1*(l1-1)*l2*(l2-1)"),
            zz_scale: -2,

            j_lambda_coeff: 256,
            j_1728: 1728,
            a_lambda_cube_coeff: (-16, 27),
            b_lambda_square_coeff: (4, 729),
            a_j_cube_denominator: 110592,
            b_j_square_denominator: 746496,
            a_j_denominator: 48,
            b_j_denominator: 864,
            factorization_coeff: 64,
            j_quarter: (35152, 9),
            j_quarter_minus_1728: (19600, 9),

            j_at_i: 1728,
            j_at_2i: 287496,
            phi2_x2y2: -1,
        }
    }

    /// Identifiers of all supported single-constant mutations.
    pub fn mutations() -> Vec<Mutation> {
        MUTATIONS
            .iter()
            .map(|&(id, suite, description)| Mutation {
                id,
                suite,
                description,
            })
            .collect()
    }

    /// A copy of the reference constants with one entry perturbed.
    pub fn mutate(&self, id: &str) -> Result<Self> {
        let mut c = self.clone();
        let double = |e: &mut String| *e = format!("2*({e})");
        let bump = |w: &mut Weights, k: usize| w[k].1 += 1;
        match id {
            "mirror-edge" => c.mirror_edges[0].1 = s("t3"),
            "mirror-fiber-weight" => bump(&mut c.mirror_fiber, 0),
            "mirror-fiber-top-weight" => bump(&mut c.mirror_fiber_top, 5),
            "mirror-section" => c.mirror_section[0].1 += 1,
            "mirror-e8-side" => c.mirror_e8_sides[0][0] = s("t1"),
            "l3-weight" => bump(&mut c.l3_weights, 0),
            "l4-weight" => bump(&mut c.l4_weights, 0),
            "big-d" => c.big_d.f1 += 1,
            "iistar-weight" => bump(&mut c.iistar_fiber, 3),
            "c1-pair" => c.c1_pairs[0] = (4, 3),
            "c2-class" => c.c2_class.g[0].1 += 1,
            "c4-class" => c.c4_class.f2 += 1,
            "i0star-multiplicity" => bump(&mut c.i0star_two, 4),
            "labeled-edge" => c.labeled_edges[4].1 = s("F11"),
            "branch-octet" => c.branch_octet[7] = s("F22"),
            "ry-f1" => c.ry_f1_per_n += 1,
            "delta-vertex" => c.delta_vertices[0][2] += 1,
            "dual-vertex" => c.dual_vertices[1][0] += 1,
            "dual-edge-length" => c.dual_edge_lengths[0].2 += 1,
            "facet-genus" => c.facet_genera[0].1 += 1,
            "monomial-y" => c.monomial_y[2] += 1,
            "wp-weight" => c.wp_weights[3] += 1,
            "h-inf" => double(&mut c.h_inf),
            "c1-poly" => double(&mut c.c1_poly),
            "c2-poly" => double(&mut c.c2_poly),
            "c3-poly" => double(&mut c.c3_poly),
            "c4-poly" => double(&mut c.c4_poly),
            "x1-numerator" => double(&mut c.x1_numerator),
            "x1-denominator" => double(&mut c.x1_denominator),
            "y1-factor" => double(&mut c.y1_numerator_factor),
            "kappa" => c.kappa.0 += 1,
            "master-x2" => double(&mut c.master_x2),
            "master-x1" => double(&mut c.master_x1),
            "master-x0" => double(&mut c.master_x0),
            "master-zz" => double(&mut c.master_zz),
            "zz-scale" => c.zz_scale += 1,
            "j-lambda-coeff" => c.j_lambda_coeff += 1,
            "j-1728" => c.j_1728 += 1,
            "a-lambda-coeff" => c.a_lambda_cube_coeff.0 += 1,
            "b-lambda-coeff" => c.b_lambda_square_coeff.0 += 1,
            "a-j-cube-denominator" => c.a_j_cube_denominator += 1,
            "b-j-square-denominator" => c.b_j_square_denominator += 1,
            "a-j-denominator" => c.a_j_denominator += 1,
            "b-j-denominator" => c.b_j_denominator += 1,
            "factorization-coeff" => c.factorization_coeff += 1,
            "j-quarter" => c.j_quarter.0 += 1,
            "end-fiber" => c.end_fiber = s("III*"),
            "j-at-i" => c.j_at_i += 1,
            "j-at-2i" => c.j_at_2i += 1,
            "phi2-x2y2" => c.phi2_x2y2 += 1,
            other => return Err(Error::UnknownMutation(other.to_string())),
        }
        Ok(c)
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::reference()
    }
}

/// A single-constant perturbation and the suite expected to catch it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub id: &'static str,
    pub suite: &'static str,
    pub description: &'static str,
}

const MUTATIONS: &[(&str, &str, &str)] = &[
    (
        "mirror-edge",
        "lattice",
        "rewire the first edge of the 19-curve graph",
    ),
    (
        "mirror-fiber-weight",
        "lattice",
        "raise the first weight of the fiber diagram",
    ),
    (
        "mirror-fiber-top-weight",
        "lattice",
        "raise a weight of the top fiber diagram",
    ),
    ("mirror-section", "lattice", "double the section class"),
    (
        "mirror-e8-side",
        "lattice",
        "swap a node of the top E8 side",
    ),
    ("l3-weight", "lattice", "raise a weight of the l3 divisor"),
    ("l4-weight", "lattice", "raise a weight of the l4 divisor"),
    ("big-d", "kummer", "raise the F1 coefficient of D"),
    (
        "iistar-weight",
        "kummer",
        "raise the F24 multiplicity in the II* fiber",
    ),
    ("c1-pair", "kummer", "replace the first G-pair of C1"),
    ("c2-class", "kummer", "change a G coefficient of C2"),
    ("c4-class", "kummer", "raise the F2 coefficient of C4"),
    (
        "i0star-multiplicity",
        "kummer",
        "raise the F22 multiplicity of the second I0* fiber",
    ),
    (
        "labeled-edge",
        "kummer",
        "rewire an edge of the labelled 20-curve tree",
    ),
    (
        "branch-octet",
        "kummer",
        "replace a member of the branch octet",
    ),
    ("ry-f1", "kummer", "change R_Y.F1 per unit n"),
    (
        "delta-vertex",
        "toric",
        "perturb the first vertex of the simplex",
    ),
    ("dual-vertex", "toric", "perturb the second dual vertex"),
    ("dual-edge-length", "toric", "change the A11 edge length"),
    ("facet-genus", "toric", "change the genus of the l4 facet"),
    ("monomial-y", "toric", "perturb the exponent vector of y"),
    (
        "wp-weight",
        "toric",
        "change a weight of the weighted projective space",
    ),
    (
        "end-fiber",
        "weierstrass",
        "claim III* at the ends of the fibration",
    ),
    ("h-inf", "identities", "double H_inf"),
    ("c1-poly", "identities", "double the C1 polynomial"),
    ("c2-poly", "identities", "double the C2 polynomial"),
    ("c3-poly", "identities", "double the C3 polynomial"),
    ("c4-poly", "identities", "double the C4 polynomial"),
    ("x1-numerator", "identities", "double the x1 numerator"),
    ("x1-denominator", "identities", "double the x1 denominator"),
    ("y1-factor", "identities", "double the extra factor of y1^2"),
    (
        "kappa",
        "identities",
        "change the recorded constant of y1^2",
    ),
    (
        "master-x2",
        "identities",
        "double the x1^2 coefficient of the master cubic",
    ),
    (
        "master-x1",
        "identities",
        "double the x1 coefficient of the master cubic",
    ),
    (
        "master-x0",
        "identities",
        "double the constant term of the master cubic",
    ),
    (
        "master-zz",
        "identities",
        "double the z+1/z coefficient of the master cubic",
    ),
    ("zz-scale", "identities", "change the scale of z+1/z"),
    ("j-lambda-coeff", "identities", "change 256 in j(lambda)"),
    ("j-1728", "identities", "change 1728"),
    (
        "a-lambda-coeff",
        "identities",
        "change the constant in a(lambda)^3",
    ),
    (
        "b-lambda-coeff",
        "identities",
        "change the constant in b(lambda)^2",
    ),
    ("a-j-cube-denominator", "identities", "change 110592"),
    ("b-j-square-denominator", "identities", "change 746496"),
    ("a-j-denominator", "modular", "change 48 in a(j1, j2)"),
    ("b-j-denominator", "modular", "change 864 in b(j1, j2)"),
    (
        "factorization-coeff",
        "identities",
        "change 64 in the j - 1728 factorization",
    ),
    ("j-quarter", "identities", "change the value of j(1/4)"),
    ("j-at-i", "modular", "change the value of j(i)"),
    ("j-at-2i", "modular", "change the value of j(2i)"),
    (
        "phi2-x2y2",
        "modular",
        "change the X^2Y^2 coefficient of Phi_2",
    ),
];
