//! One pass/fail check per reproduced claim, shared by the command-line
//! runner and the acceptance tests.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Echelon, GaussRat, LinearOp, Rat, SparseMatrix, SparseVec};
use crate::e8::algebra::{LieElem, DIM};
use crate::e8::grading::Graded;
use crate::invariants::{verify_z_forms, InvariantCatalog};
use crate::orbit::jordan::{is_nilpotent, is_semisimple, jordan};
use crate::orbit::mixed::{cartan_basis, verify_mixed_table, MixedTableReport};
use crate::orbit::subspace::{centralizer_of_all, component_basis};
use crate::reflgroup::w0::{row_basis, same_span};
use crate::reflgroup::{verify_stratum_polynomials, W0};
use crate::spinor::clifford::{even_masks, o10_basis, psi, Spin, EXT_DIM, N};
use crate::spinor::identify::Dictionary;
use crate::spinor::weights::{weight_dot, weight_of};
use crate::tables::TABLE1;

/// Seed of the randomized property checks unless another is requested.
pub const DEFAULT_SEED: u64 = 20130;

#[derive(Clone, Debug, serde::Serialize)]
pub struct Check {
    pub criterion: u8,
    pub title: &'static str,
    /// What is being reproduced.
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: Vec<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{:>2}] {} ({})", self.criterion, self.title, self.anchor)?;
        for d in &self.detail {
            write!(f, "\n       {d}")?;
        }
        Ok(())
    }
}

/// Expensive shared state, built on first use.
pub struct Context {
    pub g: Graded,
    pub d: Dictionary,
    cat: std::sync::OnceLock<InvariantCatalog>,
}

impl Context {
    pub fn new() -> Context {
        let g = Graded::new();
        let d = Dictionary::build(&g).expect("identification of g1 with the spinor tensors");
        Context { g, d, cat: std::sync::OnceLock::new() }
    }

    pub fn w0(&self) -> &'static W0 {
        crate::reflgroup::shared()
    }

    pub fn catalog(&self) -> &InvariantCatalog {
        self.cat.get_or_init(InvariantCatalog::build)
    }
}

impl Default for Context {
    fn default() -> Self {
        Context::new()
    }
}

fn check(criterion: u8, title: &'static str, anchor: &'static str, passed: bool, detail: Vec<String>) -> Check {
    Check { criterion, title, anchor, passed, detail }
}

pub fn group_order(cx: &Context) -> Check {
    let n = cx.w0().order();
    check(1, "group order", "|W0| = 46080", n == 46080, vec![format!("closure of s1..s5 has {n} elements")])
}

pub fn table1(cx: &Context) -> Check {
    let w = cx.w0();
    let mut detail = Vec::new();
    let mut ok = true;
    for (row, m) in TABLE1.iter().zip(w.table1()) {
        let printed: Vec<SparseVec> = row_basis(row).iter().map(|b| SparseVec::from_dense(b)).collect();
        let span_ok = same_span(&w.fixed_space(m), &printed);
        let g = w.gamma_check(row.index);
        let gamma = g.normalizer_order / m.order();
        let row_ok = m.order() == row.size && gamma == row.gamma && g.image_order == row.gamma && span_ok;
        ok &= row_ok;
        detail.push(format!(
            "M{}: |M| = {} (printed {}), |Gamma| = {} (printed {}), fixed space {}",
            row.index,
            m.order(),
            row.size,
            gamma,
            row.gamma,
            if span_ok { "matches" } else { "differs" }
        ));
    }
    check(2, "Table 1 sizes, |Gamma| and fixed spaces", "Table 1", ok, detail)
}

pub fn presentation(cx: &Context) -> Check {
    let w = cx.w0();
    let p = w.presentation();
    let detail = vec![
        format!("involutions {}/{}", p.involutions.iter().filter(|&&b| b).count(), p.involutions.len()),
        format!("relations {}/{}", p.relations.iter().filter(|&&b| b).count(), p.relations.len()),
        format!("generated order {}", p.generated_order),
        format!("root pairing {}", p.hyperplane_convention().unwrap_or("none")),
    ];
    check(3, "ST31 presentation", "five involutions and seven relations", p.passed(w.order()), detail)
}

pub fn invariant_identities(cx: &Context) -> Check {
    let r = cx.catalog().verify_identities();
    let mut detail = vec![
        format!("F20 = F8 F12 + 81 Pi20: {}", r.f20),
        format!("F24 = Pi24 - 4 F12^2: {}", r.f24),
        format!("A1 + ... + A6 = 0: {}", r.zero_sum),
    ];
    if !r.f24 {
        let ratio = r.f24_ratio.as_ref().map_or("not proportional".to_string(), |c| c.to_string());
        detail.push(format!("tabulated Hessian scale gives F24 = {ratio} (Pi24 - 4 F12^2)"));
    }
    for (n, b) in &r.invariant {
        detail.push(format!("{n} invariant: {b}"));
    }
    check(4, "invariant identities", "F20 and F24 identities", r.passed(), detail)
}

pub fn action_tables(cx: &Context) -> Check {
    let bad = cx.catalog().action_table_mismatches();
    let detail = if bad.is_empty() {
        vec!["50 quadric and 30 quartic cells match".to_string()]
    } else {
        bad.iter().map(|(kind, k, i)| format!("cell (s{k}, {kind}{i}) differs from the printed entry")).collect()
    };
    check(5, "action tables", "quadric and quartic permutation tables", bad.is_empty(), detail)
}

pub fn z_forms(cx: &Context) -> Check {
    let r = verify_z_forms(cx.catalog());
    let mut detail = Vec::new();
    for &i in &r.quadric_mismatches {
        let c = r.quadric_scalars[i - 1].as_ref().map_or("not proportional".to_string(), |c| c.to_string());
        detail.push(format!("Q{i}: computed = ({c}) times printed z-form"));
    }
    for &i in &r.quartic_mismatches {
        detail.push(format!("A{i}: differs from printed z-form"));
    }
    if detail.is_empty() {
        detail.push("10 quadrics and 6 quartics match".into());
    }
    check(6, "z-basis forms", "change of variables to z1..z4", r.forms_match(), detail)
}

pub fn grading(cx: &Context) -> Check {
    let g = &cx.g;
    let dims = g.dims();
    let ty = g.g0_type_name();
    let t = g.theta();
    let basis: Vec<SparseVec> = (0..DIM).map(SparseVec::unit).collect();
    let images: Vec<SparseVec> = basis.iter().map(|x| t.apply(x)).collect();
    let order_four = basis.iter().zip(&images).all(|(x, y)| t.apply(&t.apply(&t.apply(y))) == *x);
    let mut automorphism = true;
    'outer: for a in 0..DIM {
        for b in a + 1..DIM {
            if t.apply(&g.e8.bracket(&basis[a], &basis[b])) != g.e8.bracket(&images[a], &images[b]) {
                automorphism = false;
                break 'outer;
            }
        }
    }
    let ok = dims == [60, 64, 60, 64] && ty == "D5+A3" && order_four && automorphism;
    let detail = vec![
        format!("eigenspace dimensions {dims:?}"),
        format!("g0 root system {ty}"),
        format!("theta^4 = id: {order_four}"),
        format!("theta preserves all {} basis brackets: {automorphism}", DIM * (DIM - 1) / 2),
    ];
    check(7, "Z/4Z grading", "eigenspaces and g0 of type D5+A3", ok, detail)
}

pub fn spin_construction() -> Check {
    let s = Spin::new();
    let mut clifford = true;
    for a in 1..=N {
        for b in 1..=N {
            let anti = s.lambda(a).mul(s.lambda(b)).add(&s.lambda(b).mul(s.lambda(a)));
            clifford &= anti == SparseMatrix::identity(EXT_DIM).scale(&GaussRat::int(psi(a, b)));
        }
    }
    let basis = o10_basis();
    let rhos: Vec<SparseMatrix> = basis.iter().map(|(_, m)| s.rho(m).expect("o(10) element")).collect();
    let mut hom = true;
    for (x, rx) in basis.iter().zip(&rhos) {
        for (y, ry) in basis.iter().zip(&rhos) {
            hom &= s.rho(&x.1.commutator(&y.1)).expect("o(10) element") == rx.commutator(ry);
        }
    }
    let evens = even_masks();
    let invariant = rhos.iter().all(|r| {
        evens.iter().all(|&m| r.mul_vec(&SparseVec::unit(m)).iter().all(|(t, _)| (t as u32).count_ones().is_multiple_of(2)))
    });
    let ok = clifford && hom && invariant && evens.len() == 16;
    let detail = vec![
        format!("Clifford relations on all {} pairs: {clifford}", N * N),
        format!("rho homomorphism on all {} pairs: {hom}", basis.len() * basis.len()),
        format!("Delta+ invariant: {invariant}, dimension {}", evens.len()),
    ];
    check(8, "spin representation", "16-dimensional semispinor module", ok, detail)
}

pub fn identification(cx: &Context) -> Check {
    let (g, d) = (&cx.g, &cx.d);
    let labels = d.module.labels().to_vec();
    let mut images: Vec<usize> = labels.iter().map(|l| d.image_of(l).0).collect();
    images.sort();
    let bijective = images == g.component(1).to_vec();
    let mut pairing = true;
    let mut values = std::collections::BTreeSet::new();
    for a in &labels {
        let ra = g.e8.root_of_basis(d.image_of(a).0).expect("root vector");
        for b in &labels {
            let rb = g.e8.root_of_basis(d.image_of(b).0).expect("root vector");
            let dot = weight_dot(&weight_of(a), &weight_of(b));
            pairing &= Rat::int(g.e8.roots.inner(&ra, &rb) as i64) == dot;
            values.insert(dot.to_string());
        }
    }
    let ok = bijective && pairing && values.iter().all(|v| ["2", "1", "0", "-1"].contains(&v.as_str()));
    let detail = vec![
        format!("label weights biject with g1 root weights: {bijective}"),
        format!("E8 pairing equals weight pairing on all {} pairs: {pairing}", labels.len() * labels.len()),
        format!("pairing values {{{}}}", values.into_iter().collect::<Vec<_>>().join(", ")),
    ];
    check(9, "identification of g1", "label weights and root pairing", ok, detail)
}

pub fn cartan_subspace(cx: &Context) -> Check {
    let (g, e8) = (&cx.g, &cx.g.e8);
    let p = cartan_basis(&cx.d);
    let commute = (0..4).all(|a| (0..4).all(|b| e8.bracket(&p[a], &p[b]).is_zero()));
    let semisimple = p.iter().all(|x| is_semisimple(e8, x));
    let z1 = centralizer_of_all(e8, &p, &component_basis(g, 1));
    let self_centralizing = same_span(&z1, &p);
    let all: Vec<LieElem> = (0..DIM).map(SparseVec::unit).collect();
    let h = centralizer_of_all(e8, &p, &all);
    let abelian = h.iter().all(|x| h.iter().all(|y| e8.bracket(x, y).is_zero()));
    let h_semisimple = h.iter().all(|x| is_semisimple(e8, x));
    let ok = commute && semisimple && self_centralizing && h.len() == 8 && abelian && h_semisimple;
    let detail = vec![
        format!("[p_i, p_j] = 0: {commute}; each p_i semisimple: {semisimple}"),
        format!("z_g1(c) has dimension {} and equals c: {self_centralizing}", z1.len()),
        format!("z_g(c) has dimension {}, abelian: {abelian}, semisimple basis: {h_semisimple}", h.len()),
    ];
    check(10, "Cartan subspace", "c = span(p1..p4) and h = z_g(c)", ok, detail)
}

pub fn stratum_polynomials(cx: &Context) -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for i in 1..=5 {
        let r = verify_stratum_polynomials(cx.w0(), i);
        ok &= r.passed();
        let split = r.polynomials.iter().filter(|p| p.splits()).count();
        detail.push(format!(
            "M{i}: {} restricted hyperplanes, {split}/{} polynomials split into them, {} uncovered",
            r.restricted_forms,
            r.polynomials.len(),
            r.uncovered
        ));
    }
    check(11, "stratum polynomial lists", "open strata for M1..M5", ok, detail)
}

pub fn mixed_reports(cx: &Context) -> Vec<MixedTableReport> {
    (2..=8).map(|i| verify_mixed_table(&cx.g, &cx.d, cx.w0(), i)).collect()
}

pub fn mixed_tables(reports: &[MixedTableReport]) -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for r in reports {
        let passed = r.rows.iter().filter(|row| r.row_passed(row)).count();
        ok &= r.passed();
        let mut line = format!("Table {}: {passed}/{} rows pass, signs {:?}", r.table, r.rows.len(), r.signs);
        if let Some(c) = &r.convention {
            line.push_str(&format!(", characteristic order {:?} centre scale {}", c.order, c.center_scale));
        }
        detail.push(line);
        for row in r.rows.iter().filter(|row| !r.row_passed(row)) {
            detail.push(format!(
                "  row {}: dim {} (printed {}), centralizer {} / {} (printed {}), characteristic {:?} (printed {:?})",
                row.row,
                row.dim,
                row.printed_dim,
                row.signature,
                row.graded_signature,
                row.printed_signature,
                row.characteristic,
                row.printed_characteristic
            ));
        }
    }
    check(12, "mixed tables", "Tables 2-8", ok, detail)
}

/// Random `g1` elements: up to four root vectors with coefficients in
/// `-2..=2`, plus one of `p_1..p_4` with probability 4/5.
pub fn random_g1_elements(cx: &Context, count: usize, seed: u64) -> Vec<LieElem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g1 = cx.g.component(1);
    let p = cartan_basis(&cx.d);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(0..=4);
            let mut x = SparseVec::from_pairs((0..k).map(|_| (g1[rng.gen_range(0..g1.len())], GaussRat::int(rng.gen_range(-2..=2)))));
            let j = rng.gen_range(0..5);
            if j < 4 {
                x = x.add(&p[j]);
            }
            x
        })
        .collect()
}

#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct JordanStats {
    pub total: usize,
    pub passed: usize,
    pub mixed: usize,
    pub semisimple: usize,
    pub nilpotent: usize,
}

pub fn jordan_round_trips(cx: &Context, count: usize, seed: u64) -> JordanStats {
    let e8 = &cx.g.e8;
    let g1 = Echelon::from_vectors(&component_basis(&cx.g, 1));
    let mut st = JordanStats { total: count, ..Default::default() };
    for x in random_g1_elements(cx, count, seed) {
        let Ok(j) = jordan(e8, &x) else { continue };
        let (s, n) = (&j.semisimple, &j.nilpotent);
        let ok = s.add(n) == x
            && e8.bracket(s, n).is_zero()
            && g1.contains(s)
            && g1.contains(n)
            && is_semisimple(e8, s)
            && is_nilpotent(e8, n);
        if ok {
            st.passed += 1;
            match (s.is_zero(), n.is_zero()) {
                (false, false) => st.mixed += 1,
                (false, true) => st.semisimple += 1,
                _ => st.nilpotent += 1,
            }
        }
    }
    st
}

pub fn properties(cx: &Context, reports: &[MixedTableReport], seed: u64) -> Check {
    let st = jordan_round_trips(cx, 200, seed);
    let rows: Vec<_> = reports.iter().flat_map(|r| r.rows.iter().map(move |row| (r.table, row))).collect();
    let open = rows.iter().filter(|(_, row)| row.open_orbit).count();
    let ok = st.passed == st.total && open == rows.len();
    let mut detail = vec![
        format!(
            "Jordan round trip on {} random g1 elements: {} pass ({} mixed, {} semisimple, {} nilpotent)",
            st.total, st.passed, st.mixed, st.semisimple, st.nilpotent
        ),
        format!("open orbit criterion holds for {open}/{} table nilpotents", rows.len()),
    ];
    for (t, row) in rows.iter().filter(|(_, row)| !row.open_orbit) {
        detail.push(format!("  Table {t} row {}: [z_g0(h), e] differs from M_h", row.row));
    }
    check(13, "property suites", "Jordan decomposition and open orbits", ok, detail)
}

/// Every check, in criterion order.
pub fn all(cx: &Context, seed: u64) -> Vec<Check> {
    let reports = mixed_reports(cx);
    vec![
        group_order(cx),
        table1(cx),
        presentation(cx),
        invariant_identities(cx),
        action_tables(cx),
        z_forms(cx),
        grading(cx),
        spin_construction(),
        identification(cx),
        cartan_subspace(cx),
        stratum_polynomials(cx),
        mixed_tables(&reports),
        properties(cx, &reports, seed),
    ]
}
