//! Named verification suites over every module, each a list of exact checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::e7::{
    self, census_scan, enumerate_roots, enumerate_weights, odd_form_of_weight,
    orthogonal_root_sets, pi_map, pi_of_pic, reflect, reflection_product_is_minus_identity,
    restriction_decomposition, root_in_simple_coords, root_multiplicities, root_records,
    signed_weights, weight_root_pairing, RootKind, RootLabel, SimpleRootCoords, WeightLabel,
};
use crate::f2sym::{
    enumerate_lagrangians, enumerate_quad_forms, generate_group, orthogonal_group_order,
    quad_transform, transvection_matrix, IsotropicSubspace, Parity, QuadLabel, SympMatrix,
    SympVector,
};
use crate::heisenberg::{
    cnot_operator, h_mul, heisenberg_operator, lift_transvection, normalizer_image, operator_group,
    projective_group, schrodinger_matrix, CycloDyadic, HeisenbergElement, PhasedOperator,
};
use crate::tensor_forms::{
    determinant, hopf_relation, label_permutations, lifts, permutation_group, pfaffian,
    quartic_invariance_check, span_dimension_of_squares,
};

const GOLDEN_POINTS: &str = include_str!("../data/restriction_points.txt");
const GOLDEN_LINES: &str = include_str!("../data/restriction_lines.txt");

/// Transvection labels realizing the `A5` Coxeter chain in `V_2`.
pub const A5_CHAIN: [&str; 5] = ["00:10", "10:10", "01:11", "00:01", "01:01"];
/// `π(α̃)`, the label of the extended node of the `E7` diagram.
pub const HIGHEST_ROOT_IMAGE: &str = "100:111";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Heisenberg,
    Normalizer,
    Coxeter,
    Quadforms,
    Tensors,
    Hopf,
    E7,
    Restriction,
    Orders,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = [
        "heisenberg",
        "normalizer",
        "coxeter",
        "quadforms",
        "tensors",
        "hopf",
        "e7",
        "restriction",
        "orders",
        "all",
    ];

    const INDIVIDUAL: [Suite; 9] = [
        Suite::Heisenberg,
        Suite::Normalizer,
        Suite::Coxeter,
        Suite::Quadforms,
        Suite::Tensors,
        Suite::Hopf,
        Suite::E7,
        Suite::Restriction,
        Suite::Orders,
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        Self::NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| {
                if i < 9 {
                    Self::INDIVIDUAL[i]
                } else {
                    Suite::All
                }
            })
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            write!(f, "{tag}  {:width$}  {}", c.id, c.actual)?;
            if c.status == Status::Fail {
                write!(f, "  (expected {})", c.expected)?;
            }
            writeln!(f)?;
        }
        let passed = self.checks.len() - self.failures().count();
        write!(
            f,
            "{}: {passed}/{} checks passed",
            self.suite,
            self.checks.len()
        )
    }
}

/// Accumulates checks; a check passes when the rendered values agree.
#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq(&mut self, id: &str, expected: impl fmt::Display, actual: impl fmt::Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        self.0.push(Check {
            id: id.to_string(),
            status,
            expected,
            actual,
        });
    }

    fn truth(&mut self, id: &str, holds: bool) {
        self.eq(id, true, holds);
    }

    fn result<T: fmt::Display, E: fmt::Display>(
        &mut self,
        id: &str,
        expected: impl fmt::Display,
        actual: Result<T, E>,
    ) {
        match actual {
            Ok(v) => self.eq(id, expected, v),
            Err(e) => self.eq(id, expected, format!("error: {e}")),
        }
    }
}

fn sv(s: &str) -> SympVector {
    s.parse().expect("valid built-in label")
}

pub fn run_verify(suite: Suite) -> VerificationReport {
    let checks = match suite {
        Suite::All => Suite::INDIVIDUAL
            .iter()
            .flat_map(|&s| {
                run_verify(s).checks.into_iter().map(move |mut c| {
                    c.id = format!("{s}.{}", c.id);
                    c
                })
            })
            .collect(),
        s => {
            let mut c = Checks::default();
            match s {
                Suite::Heisenberg => heisenberg_suite(&mut c),
                Suite::Normalizer => normalizer_suite(&mut c),
                Suite::Coxeter => coxeter_suite(&mut c),
                Suite::Quadforms => quadforms_suite(&mut c),
                Suite::Tensors => tensors_suite(&mut c),
                Suite::Hopf => hopf_suite(&mut c),
                Suite::E7 => e7_suite(&mut c),
                Suite::Restriction => restriction_suite(&mut c),
                Suite::Orders => orders_suite(&mut c),
                Suite::All => unreachable!(),
            }
            c.0
        }
    };
    let overall = if checks.iter().all(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    VerificationReport {
        suite,
        checks,
        overall,
    }
}

fn heisenberg_suite(c: &mut Checks) {
    let one = CycloDyadic::ONE;
    c.truth(
        "pauli_x",
        heisenberg_operator(sv("1:0"))
            == PhasedOperator::from_int_rows(1, one, &[&[0, 1], &[1, 0]]).expect("2x2"),
    );
    c.truth(
        "pauli_z",
        heisenberg_operator(sv("0:1"))
            == PhasedOperator::from_int_rows(1, one, &[&[1, 0], &[0, -1]]).expect("2x2"),
    );
    for k in 1..=3u8 {
        let elems: Vec<HeisenbergElement> =
            HeisenbergElement::all(k).expect("valid rank").collect();
        let images: FxHashSet<PhasedOperator> =
            elems.iter().map(|&h| schrodinger_matrix(h)).collect();
        c.eq(&format!("faithful_k{k}"), 4usize << (2 * k), images.len());
    }
    for k in 1..=2u8 {
        let elems: Vec<HeisenbergElement> =
            HeisenbergElement::all(k).expect("valid rank").collect();
        let mats: Vec<PhasedOperator> = elems.iter().map(|&h| schrodinger_matrix(h)).collect();
        let hom = elems.iter().zip(&mats).all(|(&a, ma)| {
            elems
                .iter()
                .zip(&mats)
                .all(|(&b, mb)| schrodinger_matrix(h_mul(a, b).expect("same rank")) == ma.mul(mb))
        });
        c.truth(&format!("homomorphism_k{k}"), hom);
    }
    let vs: Vec<SympVector> = SympVector::all(2).expect("valid rank").collect();
    let commutation = vs.iter().all(|&v| {
        vs.iter().all(|&w| {
            let (uv, uw) = (heisenberg_operator(v), heisenberg_operator(w));
            let sign = CycloDyadic::from_int(if v.pairing(w) == 1 { -1 } else { 1 });
            uv.mul(&uw) == uw.mul(&uv).scale(sign)
        })
    });
    c.truth("commutation_sign_k2", commutation);
}

fn m_s() -> PhasedOperator {
    PhasedOperator::from_int_rows(1, CycloDyadic::one_minus_i_half(), &[&[1, 1], &[1, -1]])
        .expect("2x2")
}

fn m_t() -> PhasedOperator {
    let h = CycloDyadic::one_minus_i_half();
    let i = CycloDyadic::I;
    PhasedOperator::from_rows(1, vec![vec![h, h * i], vec![h * i, h]]).expect("2x2")
}

/// `M' = H/√2` and `M'' = M' M_T M'`.
pub fn code_generators() -> (PhasedOperator, PhasedOperator) {
    let m1 = PhasedOperator::from_int_rows(1, CycloDyadic::inv_sqrt2(), &[&[1, 1], &[1, -1]])
        .expect("2x2");
    let m2 = m1.mul(&m_t()).mul(&m1);
    (m1, m2)
}

fn phi_of(m: &PhasedOperator) -> Result<SympMatrix, String> {
    normalizer_image(m)
        .map(|i| i.phi)
        .map_err(|e| e.to_string())
}

/// The literal block matrix `C_12` of 2×2 blocks `(I,0,0,0; 0,I,0,0; 0,0,0,I; 0,0,I,0)`.
fn cnot_block_literal() -> PhasedOperator {
    let mut rows = vec![vec![0i64; 8]; 8];
    for (r, row) in rows.iter_mut().enumerate() {
        let col = match r {
            0..=3 => r,
            4 | 5 => r + 2,
            _ => r - 2,
        };
        row[col] = 1;
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    PhasedOperator::from_int_rows(3, CycloDyadic::ONE, &refs).expect("8x8")
}

fn normalizer_suite(c: &mut Checks) {
    let (s, t) = (m_s(), m_t());
    let u = |v: &str| heisenberg_operator(sv(v));
    c.truth(
        "m_s_swaps_u1_u1star",
        s.mul(&u("1:0")) == u("0:1").mul(&s) && s.mul(&u("0:1")) == u("1:0").mul(&s),
    );
    c.truth(
        "m_t_relations",
        t.mul(&u("1:0")) == u("1:0").mul(&t)
            && t.mul(&u("0:1")) == u("1:1").mul(&t).scale(-CycloDyadic::I),
    );
    let flat = |m: SympMatrix| m.to_string().replace('\n', "; ");
    let (sm, tm) = (
        SympMatrix::from_rows(1, &[0b01, 0b10]),
        SympMatrix::from_rows(1, &[0b11, 0b01]),
    );
    c.result("phi_m_s", flat(sm.expect("2x2")), phi_of(&s).map(flat));
    c.result("phi_m_t", flat(tm.expect("2x2")), phi_of(&t).map(flat));
    c.truth("lift_1_equals_m_t", lift_transvection(sv("1:0")) == t);
    let m1star = PhasedOperator::from_rows(
        1,
        vec![
            vec![CycloDyadic::ONE, CycloDyadic::ZERO],
            vec![CycloDyadic::ZERO, -CycloDyadic::I],
        ],
    )
    .expect("2x2");
    c.truth(
        "lift_1star_is_diag_1_minus_i",
        lift_transvection(sv("0:1")) == m1star,
    );

    let mut realized = 0;
    for v in SympVector::nonzero(3).expect("valid rank") {
        if phi_of(&lift_transvection(v)).ok() == Some(transvection_matrix(v)) {
            realized += 1;
        }
    }
    c.eq("lifts_realize_transvections_k3", 63, realized);

    let c12 = cnot_operator(1, 2, 3).expect("valid qubits");
    c.truth(
        "cnot_matrix_is_block_permutation",
        c12 == cnot_block_literal(),
    );
    // x-block C with C = J ᵗA J, J reversing the qubit order
    let structural = SympMatrix::block_diagonal(3, &[0b100, 0b110, 0b001], &[0b110, 0b010, 0b001])
        .expect("blocks");
    c.truth("cnot_phi_block_form", phi_of(&c12).ok() == Some(structural));
    // the literal A = (100; 010; 011) with ᵗA⁻¹ = (100; 011; 001)
    let literal = SympMatrix::block_diagonal(3, &[0b100, 0b010, 0b011], &[0b100, 0b011, 0b001])
        .expect("blocks");
    c.truth(
        "cnot_phi_literal_block_reversed_order",
        phi_of(&cnot_operator(2, 3, 3).expect("valid qubits")).ok() == Some(literal),
    );

    c.result(
        "projective_order_ms_mt",
        24,
        projective_group(&[s, t]).map(|g| g.order()),
    );
    let (m1, m2) = code_generators();
    c.truth("m_prime_squared_identity", m1.mul(&m1).is_identity());
    c.truth("m_double_prime_is_diag_1_minus_i", m2 == m1star);
    let d16 = operator_group(&[m1.clone(), m2.mul(&m2)]).map(|g| g.order());
    c.result("dihedral_order", 16, d16);
    match operator_group(&[m1, m2]) {
        Ok(g) => {
            c.eq("g1_order", 192, g.order());
            c.eq(
                "g1_scalars",
                8,
                g.elements().filter(|m| m.as_scalar().is_some()).count(),
            );
        }
        Err(e) => c.eq("g1_order", 192, format!("error: {e}")),
    }
}

fn coxeter_suite(c: &mut Checks) {
    for k in 2..=3u8 {
        let vs: Vec<SympVector> = SympVector::nonzero(k).expect("valid rank").collect();
        let holds = vs.iter().all(|&v| {
            let tv = transvection_matrix(v);
            tv.mul(&tv).is_identity()
                && vs.iter().all(|&w| {
                    let tw = transvection_matrix(w);
                    if v.pairing(w) == 0 {
                        tv.mul(&tw) == tw.mul(&tv)
                    } else {
                        tv.mul(&tw).mul(&tv) == transvection_matrix(v + w)
                    }
                })
        });
        c.truth(&format!("coxeter_relations_k{k}"), holds);
    }
    let chain: Vec<SympMatrix> = A5_CHAIN
        .iter()
        .map(|s| transvection_matrix(sv(s)))
        .collect();
    c.result(
        "a5_chain_generates_sp4",
        720,
        generate_group(&chain).map(|g| g.order()),
    );
    let chain_shape = (0..5).all(|i| {
        (0..5).all(|j| sv(A5_CHAIN[i]).pairing(sv(A5_CHAIN[j])) == (i.abs_diff(j) == 1) as u8)
    });
    c.truth("a5_chain_pairings", chain_shape);

    match lifts(&A5_CHAIN).and_then(|g| label_permutations(&g, Parity::Odd)) {
        Ok(perms) => {
            c.eq("s6_on_odd_labels", 720, permutation_group(&perms).order());
        }
        Err(e) => c.eq("s6_on_odd_labels", 720, format!("error: {e}")),
    }
    let mut transpositions = BTreeSet::new();
    let mut all_transpositions = true;
    for v in SympVector::nonzero(2).expect("valid rank") {
        match label_permutations(&[lift_transvection(v)], Parity::Odd) {
            Ok(p) => {
                let moved: Vec<usize> = p[0]
                    .iter()
                    .enumerate()
                    .filter(|(i, &x)| *i != x as usize)
                    .map(|(i, _)| i)
                    .collect();
                all_transpositions &= moved.len() == 2;
                transpositions.insert(moved);
            }
            Err(_) => all_transpositions = false,
        }
    }
    c.truth("points_act_as_transpositions", all_transpositions);
    c.eq("distinct_transpositions", 15, transpositions.len());

    let v: Vec<SympVector> = e7::SIMPLE_ROOT_IMAGES.iter().map(|s| sv(s)).collect();
    let cartan = e7::cartan_matrix();
    let diagram =
        (0..7).all(|i| (0..7).all(|j| cartan[i][j].rem_euclid(2) as u8 == v[i].pairing(v[j])));
    c.truth("e7_diagram_labels", diagram);
}

fn quadforms_suite(c: &mut Checks) {
    for (parity, zeros, count) in [(Parity::Even, 36, 36), (Parity::Odd, 28, 28)] {
        let forms = enumerate_quad_forms(3, parity).expect("valid rank");
        c.eq(
            &format!("{parity:?}_count_k3").to_lowercase(),
            count,
            forms.len(),
        );
        c.truth(
            &format!("{parity:?}_zero_counts_k3").to_lowercase(),
            forms.iter().all(|&(_, z)| z == zeros),
        );
    }
    let vs: Vec<SympVector> = SympVector::all(3).expect("valid rank").collect();
    let law = vs.iter().all(|&v| {
        vs.iter().all(|&w| {
            let q = QuadLabel::new(w);
            let q2 = quad_transform(v, q).expect("same rank");
            q2.parity() == q.parity() && vs.iter().all(|&u| q2.eval(u) == q.eval(v.transvect(u)))
        })
    });
    c.truth("transform_law_k3", law);
    for (parity, size) in [(Parity::Even, 36), (Parity::Odd, 28)] {
        let start = enumerate_quad_forms(3, parity).expect("valid rank")[0].0;
        let mut orbit = BTreeSet::from([start]);
        let mut frontier = vec![start];
        while let Some(q) = frontier.pop() {
            for &v in &vs {
                let q2 = quad_transform(v, q).expect("same rank");
                if orbit.insert(q2) {
                    frontier.push(q2);
                }
            }
        }
        c.eq(
            &format!("{parity:?}_orbit_k3").to_lowercase(),
            size,
            orbit.len(),
        );
    }
    c.result(
        "odd_form_of_omega7",
        "A[101:110]",
        odd_form_of_weight("W78".parse().expect("valid")),
    );
    let forms: Result<BTreeSet<QuadLabel>, _> = enumerate_weights()
        .into_iter()
        .map(|(w, _)| odd_form_of_weight(w))
        .collect();
    c.result("odd_forms_of_weights_distinct", 28, forms.map(|s| s.len()));
    let symmetric = signed_weights()
        .into_iter()
        .all(|w| odd_form_of_weight(w).ok() == odd_form_of_weight(w.negate()).ok());
    c.truth("opposite_weights_share_form", symmetric);
}

fn tensors_suite(c: &mut Checks) {
    match quartic_invariance_check(&[m_s(), m_t()], 1) {
        Ok(r) => {
            c.truth(
                "weight_enumerator_identity",
                r.weight_enumerator == Some(true),
            );
            c.truth("quartic_sum_invariant_k1", r.passed());
        }
        Err(e) => c.eq("quartic_sum_invariant_k1", true, format!("error: {e}")),
    }
    let (m1, m2) = code_generators();
    c.result(
        "quartic_sum_invariant_g1",
        true,
        quartic_invariance_check(&[m1, m2], 1).map(|r| r.passed()),
    );
    c.result(
        "quartic_sum_invariant_k2",
        true,
        lifts(&A5_CHAIN)
            .and_then(|g| quartic_invariance_check(&g, 2))
            .map(|r| r.passed()),
    );
    for (k, dim) in [(1u8, 2usize), (2, 5), (3, 15)] {
        c.result(
            &format!("span_of_squares_k{k}"),
            dim,
            span_dimension_of_squares(k),
        );
    }
    let odd = enumerate_quad_forms(3, Parity::Odd).expect("valid rank");
    let good = odd.iter().filter(|(q, _)| match pfaffian(*q) {
        Ok(pf) => pf != 0.into() && &pf * &pf == determinant(*q),
        Err(_) => false,
    });
    c.eq("pfaffians_nonzero_k3", 28, good.count());
}

fn hopf_suite(c: &mut Checks) {
    for k in 1..=4u8 {
        c.result(
            &format!("sum_of_squares_k{k}"),
            [2, 3, 5, 9][k as usize - 1],
            hopf_relation(k).map(|h| h.terms.len()),
        );
    }
}

fn e7_suite(c: &mut Checks) {
    let (roots, weights) = census_scan();
    c.eq("census_roots", 126, roots.len());
    c.eq("census_weights", 56, weights.len());
    let positive = enumerate_roots();
    let fam = |k| positive.iter().filter(|(r, _)| r.kind() == k).count();
    c.eq(
        "positive_root_families",
        "21/35/7",
        format!(
            "{}/{}/{}",
            fam(RootKind::Rij),
            fam(RootKind::Rijk8),
            fam(RootKind::Ri8)
        ),
    );
    let mut wf = [0; 4];
    for w in signed_weights() {
        wf[w.pic().0[0] as usize] += 1;
    }
    c.eq(
        "weight_families",
        "7/21/21/7",
        format!("{}/{}/{}/{}", wf[0], wf[1], wf[2], wf[3]),
    );
    let mut named: Vec<_> = positive.iter().flat_map(|(_, v)| [*v, -*v]).collect();
    named.sort();
    c.truth("census_matches_families", named == roots);

    let records = root_records();
    let compatible = records.iter().all(|a| {
        records
            .iter()
            .all(|b| a.pic.pairing(&b.pic).rem_euclid(2) as u8 == a.image.pairing(b.image))
    });
    c.truth("pi_compatibility", compatible);
    let transfer = records.iter().all(|a| {
        records.iter().all(|b| {
            a.label == b.label || (a.pic.pairing(&b.pic) == 0) == (a.image.pairing(b.image) == 0)
        })
    });
    c.truth("orthogonality_transfer", transfer);
    let images: BTreeSet<SympVector> = records.iter().map(|r| r.image).collect();
    c.eq(
        "pi_onto_nonzero_points",
        63,
        images.iter().filter(|v| !v.is_zero()).count(),
    );
    c.result(
        "highest_root_coords",
        "(2,2,3,4,3,2,1)",
        root_in_simple_coords("R18".parse().expect("valid")),
    );
    c.eq(
        "pi_highest_root",
        HIGHEST_ROOT_IMAGE,
        pi_map(&SimpleRootCoords([2, 2, 3, 4, 3, 2, 1])),
    );
    c.result(
        "r2568_coords",
        "(1,1,1,2,2,1,0)",
        root_in_simple_coords("R2568".parse().expect("valid")),
    );
    c.result(
        "pi_r2568",
        "100:000",
        pi_of_pic(&"R2568".parse::<RootLabel>().expect("valid").pic()),
    );
    c.eq(
        "pi_gamma",
        "000:000",
        pi_map(&SimpleRootCoords([0, 1, 0, 0, 1, 0, 1])),
    );

    let all: Vec<_> = records.iter().flat_map(|r| [r.pic, -r.pic]).collect();
    let equivariant = all.iter().all(|a| {
        let t = pi_of_pic(a).expect("root");
        all.iter().all(|x| {
            let lhs = reflect(a, x).ok().and_then(|y| pi_of_pic(&y).ok());
            lhs == Some(t.transvect(pi_of_pic(x).expect("root")))
        })
    });
    c.truth("equivariance", equivariant);
    let kernel = (0u8..128)
        .filter(|m| {
            pi_map(&SimpleRootCoords(std::array::from_fn(|i| {
                (m >> i & 1) as i64
            })))
            .is_zero()
        })
        .count();
    c.eq("kernel_classes_mod_2", 2, kernel);
    let inv = e7::inverse_cartan();
    let two_p = inv.iter().all(|row| {
        row.iter().all(|x| (*x * 2).is_integer())
            && pi_map(&SimpleRootCoords(row.map(|x| (x * 2).to_integer()))).is_zero()
    });
    c.truth("twice_fundamental_weights_in_kernel", two_p);
    let gamma = SimpleRootCoords([0, 1, 0, 0, 1, 0, 1]);
    let half_gamma = (0..7).all(|i| {
        let mut unit = [0; 7];
        unit[i] = 1;
        gamma.pairing(&SimpleRootCoords(unit)) % 2 == 0
    });
    c.truth("half_gamma_in_weight_lattice", half_gamma);
    let omega7 = e7::rational_simple_coords(&"W78".parse::<WeightLabel>().expect("valid").pic());
    let doubled: Vec<String> = omega7.iter().map(|x| (*x * 2).to_string()).collect();
    c.eq("omega7_doubled_coords", "2,3,4,6,5,4,3", doubled.join(","));

    let r12: RootLabel = "R12".parse().expect("valid");
    c.eq(
        "weights_orthogonal_to_r12",
        32,
        signed_weights()
            .iter()
            .filter(|&&w| weight_root_pairing(w, r12) == 0)
            .count(),
    );
    let rule = signed_weights().iter().all(|w| {
        let (i, j) = w.pair();
        positive.iter().all(|(r, _)| {
            let ix = r.indices();
            let union: BTreeSet<u8> = ix.iter().copied().chain([i, j]).collect();
            let meet = ix.iter().filter(|&&x| x == i || x == j).count();
            (weight_root_pairing(*w, *r).abs() == 1) == ((union.len() - meet) % 4 == 2)
        })
    });
    c.truth("weight_root_parity_rule", rule);

    let sets = orthogonal_root_sets();
    c.eq("orthogonal_root_sets", 135, sets.len());
    let orthogonal = sets.iter().all(|s| {
        s.roots.iter().all(|a| {
            s.roots
                .iter()
                .all(|b| a == b || a.pic().pairing(&b.pic()) == 0)
        })
    });
    c.truth("orthogonal_sets_pairwise_orthogonal", orthogonal);
    let minus = sets
        .iter()
        .all(|s| reflection_product_is_minus_identity(&s.roots).unwrap_or(false));
    c.truth("orthogonal_reflections_multiply_to_minus_identity", minus);
    let surjective = enumerate_weights().iter().all(|(w, _)| {
        let q = odd_form_of_weight(*w).expect("weight form");
        enumerate_lagrangians(3)
            .expect("valid rank")
            .iter()
            .all(|l| l.points().iter().filter(|&&v| q.eval(v) == 0).count() == 3)
    });
    c.truth("weight_forms_surjective_on_lagrangians", surjective);
}

struct GoldenLine {
    letters: String,
    a: u8,
    roots: Vec<String>,
    weights: Vec<String>,
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn golden_points() -> Vec<(char, String, String)> {
    GOLDEN_POINTS
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (
                f[0].chars().next().expect("letter"),
                f[1].to_string(),
                f[2].to_string(),
            )
        })
        .collect()
}

fn golden_lines() -> Vec<GoldenLine> {
    GOLDEN_LINES
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (left, right) = l.split_once('|').expect("separator");
            let f: Vec<&str> = left.split_whitespace().collect();
            GoldenLine {
                letters: f[0].to_string(),
                a: f[1].parse().expect("line index"),
                roots: f[2..].iter().map(|s| s.to_string()).collect(),
                weights: right.split_whitespace().map(str::to_string).collect(),
            }
        })
        .collect()
}

fn restriction_suite(c: &mut Checks) {
    let standard = IsotropicSubspace::standard(3).expect("valid rank");
    let d = match restriction_decomposition(&standard) {
        Ok(d) => d,
        Err(e) => return c.eq("decomposition", "ok", format!("error: {e}")),
    };
    let points = golden_points();
    for (letter, v, root) in &points {
        let actual = d
            .points
            .iter()
            .find(|p| p.v.to_string() == *v)
            .map_or("missing".to_string(), |p| p.root.to_string());
        c.eq(&format!("point_{letter}"), root, actual);
    }
    let letter_point = |ch: char| {
        points
            .iter()
            .find(|p| p.0 == ch)
            .map(|p| p.1.clone())
            .unwrap_or_default()
    };
    for g in golden_lines() {
        let Some(line) = d.lines.iter().find(|l| l.a == Some(g.a)) else {
            c.eq(&format!("line_{}", g.letters), g.a, "missing");
            continue;
        };
        let names =
            |xs: &[_]| -> Vec<String> { xs.iter().map(|x: &RootLabel| x.to_string()).collect() };
        let pts: Vec<String> = line.points.iter().map(|p| p.to_string()).collect();
        let gpts: Vec<String> = g.letters.chars().map(letter_point).collect();
        c.eq(
            &format!("line_{}_points", g.letters),
            sorted(gpts).join(" "),
            sorted(pts).join(" "),
        );
        c.eq(
            &format!("line_{}_roots", g.letters),
            sorted(g.roots).join(" "),
            sorted(names(&line.roots)).join(" "),
        );
        let ws: Vec<String> = line.weights.iter().map(|w| w.to_string()).collect();
        c.eq(
            &format!("line_{}_weights", g.letters),
            sorted(g.weights).join(" "),
            sorted(ws).join(" "),
        );
    }
    let mut all: Vec<WeightLabel> = d.lines.iter().flat_map(|l| l.weights.clone()).collect();
    all.sort();
    all.dedup();
    c.eq("weights_partitioned", 28, all.len());
    let m = root_multiplicities();
    c.eq(
        "multiplicities_n0_32_n1_12",
        63,
        m.iter()
            .filter(|&&(_, n0, n1)| n0 == 32 && n1 == 12)
            .count(),
    );
    let every = enumerate_lagrangians(3)
        .expect("valid rank")
        .iter()
        .all(|l| {
            restriction_decomposition(l)
                .map(|d| d.lines.len() == 7)
                .unwrap_or(false)
        });
    c.truth("every_lagrangian_decomposes", every);
}

/// `φ` of the lifts `M_v`, closed under multiplication.
pub fn lifted_symplectic_order(labels: &[&str]) -> Result<usize, String> {
    let phis: Vec<SympMatrix> = labels
        .iter()
        .map(|s| phi_of(&lift_transvection(sv(s))))
        .collect::<Result<_, _>>()?;
    generate_group(&phis)
        .map(|g| g.order())
        .map_err(|e| e.to_string())
}

fn orders_suite(c: &mut Checks) {
    c.result("sp2", 6, lifted_symplectic_order(&["1:0", "0:1"]));
    c.result("sp4", 720, lifted_symplectic_order(&A5_CHAIN));
    c.result(
        "sp6",
        1_451_520,
        lifted_symplectic_order(&e7::SIMPLE_ROOT_IMAGES),
    );
    c.result(
        "o_even_k3",
        40_320,
        orthogonal_group_order(QuadLabel::new(sv("000:000"))),
    );
    let s8: Vec<SympMatrix> = std::iter::once(HIGHEST_ROOT_IMAGE)
        .chain([0, 2, 3, 4, 5, 6].map(|i| e7::SIMPLE_ROOT_IMAGES[i]))
        .map(|s| transvection_matrix(sv(s)))
        .collect();
    c.result("s8_chain", 40_320, generate_group(&s8).map(|g| g.order()));
    c.result(
        "o_odd_k3",
        51_840,
        orthogonal_group_order(QuadLabel::new(sv("101:110"))),
    );
    let e6: Vec<SympMatrix> = e7::SIMPLE_ROOT_IMAGES[..6]
        .iter()
        .map(|s| transvection_matrix(sv(s)))
        .collect();
    c.result("e6_chain", 51_840, generate_group(&e6).map(|g| g.order()));
    c.eq(
        "lagrangians_k3",
        135,
        enumerate_lagrangians(3).expect("valid rank").len(),
    );
    let w = e7::weyl_report();
    c.eq("weyl_e7", 2_903_040, w.order);
    c.truth("weyl_contains_minus_identity", w.contains_minus_identity);
    c.eq("weyl_kernel", 2, w.kernel.len());
    c.eq("weyl_image", 1_451_520, w.image_order);
}
