use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use spinorbit::arith::{GaussRat, SparseVec};
use spinorbit::checks::{self, Check, Context};
use spinorbit::e8::algebra::{LieElem, DIM};
use spinorbit::e8::grading::Graded;
use spinorbit::orbit::characteristic::{raw_relative, RELATIVE_ORDER};
use spinorbit::orbit::mixed::{cartan_basis, point_of};
use spinorbit::orbit::{
    characteristic as absolute_characteristic, is_nilpotent, is_semisimple, jordan as jordan_of, sl2_complete,
    verify_mixed_table, Ambient, RootDatum,
};
use spinorbit::reflgroup::w0::{row_basis, same_span};
use spinorbit::spinor::identify::Dictionary;
use spinorbit::spinor::label::SpinorTensor;
use spinorbit::spinor::weights::{dynkin_scheme as scheme_of, EdgeStyle};
use spinorbit::tables::TABLE1;

use crate::format::{align, lie, p_combination, parse_p_expr};
use crate::{Failure, Outcome};

fn mark(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn summary(text: &mut String, checks: &[(String, bool)]) -> bool {
    for (name, ok) in checks {
        writeln!(text, "{} {name}", mark(*ok)).unwrap();
    }
    let passed = checks.iter().filter(|c| c.1).count();
    writeln!(text, "summary: {passed}/{} checks passed", checks.len()).unwrap();
    passed == checks.len()
}

fn checks_json(checks: &[(String, bool)]) -> serde_json::Value {
    checks.iter().map(|(name, ok)| json!({ "check": name, "passed": ok })).collect()
}

fn parse_element(s: &str) -> Result<SpinorTensor, Failure> {
    SpinorTensor::parse(s).map_err(|e| Failure::Usage(format!("invalid --element: {e}")))
}

/// The element's image in `g1`, with the model it lives in.
fn element_in_g1(s: &str) -> Result<(Graded, Dictionary, SpinorTensor, LieElem), Failure> {
    let t = parse_element(s)?;
    let g = Graded::new();
    let d = Dictionary::build(&g).map_err(|e| Failure::Internal(e.to_string()))?;
    let x = d.to_g1(&t);
    Ok((g, d, t, x))
}

fn spinor_text(d: &Dictionary, x: &LieElem) -> String {
    d.from_g1(x).map(|t| t.to_string()).unwrap_or_else(|e| format!("not in g1 ({e})"))
}

pub fn verify_all(seed: u64) -> Outcome {
    let cx = Context::new();
    let all: Vec<Check> = checks::all(&cx, seed);
    let mut text = String::new();
    for c in &all {
        writeln!(text, "{c}").unwrap();
    }
    let passed = all.iter().filter(|c| c.passed).count();
    writeln!(text, "summary: {passed}/{} checks passed", all.len()).unwrap();
    let json = json!({ "seed": seed, "checks": all, "passed": passed, "total": all.len() });
    Outcome { text, json, passed: passed == all.len() }
}

#[derive(Serialize)]
struct Table1Row {
    index: usize,
    generators: Vec<&'static str>,
    size: usize,
    printed_size: usize,
    gamma: usize,
    printed_gamma: usize,
    /// Basis of the fixed space in coordinates on `p1..p4`.
    basis: Vec<Vec<GaussRat>>,
    fixed_space_matches: bool,
    centralizer: &'static str,
    /// Copied from the table; not recomputed.
    component_group: &'static str,
    passed: bool,
}

pub fn table1() -> Outcome {
    let w = spinorbit::reflgroup::shared();
    let mut rows = Vec::new();
    for (row, m) in TABLE1.iter().zip(w.table1()) {
        let basis = row_basis(row);
        let printed: Vec<SparseVec> = basis.iter().map(|b| SparseVec::from_dense(b)).collect();
        let fixed_space_matches = same_span(&w.fixed_space(m), &printed);
        let g = w.gamma_check(row.index);
        let gamma = g.normalizer_order / m.order();
        let passed = m.order() == row.size && gamma == row.gamma && g.image_order == row.gamma && fixed_space_matches;
        rows.push(Table1Row {
            index: row.index,
            generators: row.generators.to_vec(),
            size: m.order(),
            printed_size: row.size,
            gamma,
            printed_gamma: row.gamma,
            basis,
            fixed_space_matches,
            centralizer: row.centralizer,
            component_group: row.component_group,
            passed,
        });
    }
    let mut cells = vec![["i", "|M_i|", "printed", "|Gamma_i|", "printed", "c_{M_i}", "fixed space", "Z_{G0}(p)", "K*", ""]
        .map(String::from)
        .to_vec()];
    for r in &rows {
        let basis: Vec<String> = r.basis.iter().map(|b| p_combination(b)).collect();
        cells.push(vec![
            r.index.to_string(),
            r.size.to_string(),
            r.printed_size.to_string(),
            r.gamma.to_string(),
            r.printed_gamma.to_string(),
            if basis.is_empty() { "0".into() } else { basis.join(", ") },
            if r.fixed_space_matches { "matches" } else { "differs" }.into(),
            r.centralizer.into(),
            r.component_group.into(),
            mark(r.passed).into(),
        ]);
    }
    let mut text = align(&cells);
    text.push_str("* component groups are copied from the table and not recomputed\n");
    let checks: Vec<(String, bool)> =
        rows.iter().map(|r| (format!("Table 1 row M{}: sizes, |Gamma| and fixed space", r.index), r.passed)).collect();
    let passed = summary(&mut text, &checks);
    Outcome { text, json: json!({ "rows": rows, "passed": passed }), passed }
}

pub fn invariants() -> Outcome {
    let cx = Context::new();
    let cat = cx.catalog();
    let mut text = String::new();
    let mut polys = Vec::new();
    for (name, p) in cat.named() {
        writeln!(text, "{name} = {p}").unwrap();
        polys.push(json!({ "name": name, "polynomial": p.to_string() }));
    }
    let all = [checks::invariant_identities(&cx), checks::action_tables(&cx), checks::z_forms(&cx)];
    for c in &all {
        writeln!(text, "{c}").unwrap();
    }
    let passed = all.iter().filter(|c| c.passed).count();
    writeln!(text, "summary: {passed}/{} checks passed", all.len()).unwrap();
    Outcome { text, json: json!({ "polynomials": polys, "checks": all }), passed: passed == all.len() }
}

pub fn mixed_table(i: usize) -> Outcome {
    let cx = Context::new();
    let r = verify_mixed_table(&cx.g, &cx.d, cx.w0(), i);
    let coords: Vec<GaussRat> = r.base_point.iter().map(|c| c.parse().expect("printed coordinate")).collect();
    let mut text = String::new();
    writeln!(text, "Table {i}: p = {}, signs {:?}, dim z_g0(p) = {}", p_combination(&coords), r.signs, r.base_centralizer_dim)
        .unwrap();
    if let Some(c) = &r.convention {
        writeln!(
            text,
            "relative characteristic: printed digit k is computed simple root {:?}[k], centre scaled by {} ({} presentations fit row 1)",
            c.order, c.center_scale, r.conventions_after_first_row
        )
        .unwrap();
    }
    let table8 = i == 8;
    let mut head: Vec<String> =
        ["row", "element", "[p,e]=0", "nilpotent", "dim", "printed", "centralizer", "graded", "printed", "dim z", "identity"]
            .map(String::from)
            .to_vec();
    if table8 {
        head.extend(["characteristic", "printed"].map(String::from));
    }
    head.extend(["open orbit", ""].map(String::from));
    let mut cells = vec![head];
    for row in &r.rows {
        let mut c = vec![
            format!("{}{}", row.row, if row.joined { "+" } else { "" }),
            row.element.clone(),
            yes(row.commutes).into(),
            yes(row.nilpotent).into(),
            row.dim.to_string(),
            row.printed_dim.to_string(),
            row.signature.clone(),
            row.graded_signature.clone(),
            row.printed_signature.clone(),
            row.centralizer_dim.to_string(),
            yes(row.consistent(r.base_centralizer_dim)).into(),
        ];
        if table8 {
            c.push(row.characteristic.clone().unwrap_or_else(|| "-".into()));
            c.push(row.printed_characteristic.clone().unwrap_or_else(|| "-".into()));
        }
        c.push(yes(row.open_orbit).into());
        c.push(mark(r.row_passed(row)).into());
        cells.push(c);
    }
    text.push_str(&align(&cells));
    if r.rows.iter().any(|row| row.joined) {
        text.push_str("+ entry printed over two lines and read as one element; flagged for review\n");
    }
    let checks: Vec<(String, bool)> = r.rows.iter().map(|row| (format!("Table {i} row {}", row.row), r.row_passed(row))).collect();
    let passed = summary(&mut text, &checks);
    let mut json = serde_json::to_value(&r).expect("serializable report");
    json["passed"] = json!(passed);
    Outcome { text, json, passed }
}

pub fn dynkin_scheme(element: &str, dot: Option<&Path>) -> Result<Outcome, Failure> {
    let t = parse_element(element)?;
    let s = scheme_of(&t).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut text = String::new();
    writeln!(text, "element {t}").unwrap();
    writeln!(text, "nodes {}", s.nodes.len()).unwrap();
    for (k, l) in s.nodes.iter().enumerate() {
        writeln!(text, "  {k} {l}").unwrap();
    }
    writeln!(text, "edges {}", s.edges.len()).unwrap();
    let style = |e: EdgeStyle| match e {
        EdgeStyle::Solid => "solid",
        EdgeStyle::Dashed => "dashed",
    };
    for &(a, b, e) in &s.edges {
        writeln!(text, "  {} -- {} {}", s.nodes[a], s.nodes[b], style(e)).unwrap();
    }
    if let Some(path) = dot {
        std::fs::write(path, s.to_dot()).map_err(|e| Failure::Internal(format!("writing {}: {e}", path.display())))?;
    }
    let json = json!({
        "element": t.to_string(),
        "nodes": s.nodes.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "edges": s.edges.iter().map(|&(a, b, e)| json!({ "from": s.nodes[a].to_string(), "to": s.nodes[b].to_string(), "style": e })).collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, passed: true })
}

pub fn jordan(element: &str) -> Result<Outcome, Failure> {
    let (g, d, t, x) = element_in_g1(element)?;
    let e8 = &g.e8;
    let j = jordan_of(e8, &x).map_err(|e| Failure::Internal(e.to_string()))?;
    let (s, n) = (&j.semisimple, &j.nilpotent);
    let mut text = String::new();
    writeln!(text, "element     {t}").unwrap();
    writeln!(text, "semisimple  {}", spinor_text(&d, s)).unwrap();
    writeln!(text, "nilpotent   {}", spinor_text(&d, n)).unwrap();
    let checks = vec![
        ("s + n = x".to_string(), s.add(n) == x),
        ("[s, n] = 0".to_string(), e8.bracket(s, n).is_zero()),
        ("s lies in g1".to_string(), d.from_g1(s).is_ok()),
        ("n lies in g1".to_string(), d.from_g1(n).is_ok()),
        ("s is semisimple".to_string(), is_semisimple(e8, s)),
        ("n is nilpotent".to_string(), is_nilpotent(e8, n)),
    ];
    let passed = summary(&mut text, &checks);
    let json = json!({
        "element": t.to_string(),
        "semisimple": spinor_text(&d, s),
        "nilpotent": spinor_text(&d, n),
        "checks": checks_json(&checks),
        "passed": passed,
    });
    Ok(Outcome { text, json, passed })
}

pub fn characteristic(element: &str, relative_to: Option<&str>) -> Result<Outcome, Failure> {
    let coords = relative_to.map(parse_p_expr).transpose().map_err(Failure::Usage)?;
    if coords.as_ref().is_some_and(|c| c.iter().all(GaussRat::is_zero)) {
        return Err(Failure::Usage("--relative-to must be a nonzero combination of p1..p4".into()));
    }
    let (g, d, t, e) = element_in_g1(element)?;
    let e8 = &g.e8;
    let p = coords.as_ref().map(|c| point_of(&cartan_basis(&d), c));
    let amb = match &p {
        Some(p) => Ambient::centralizer(&g, p),
        None => Ambient::full(&g),
    };
    let mut text = String::new();
    writeln!(text, "element  {t}").unwrap();
    match &coords {
        Some(c) => writeln!(text, "ambient  z_g(p), p = {}, dim z_g0(p) = {}", p_combination(c), amb.g0.len()).unwrap(),
        None => writeln!(text, "ambient  g").unwrap(),
    }
    let mut checks = vec![("e is nilpotent".to_string(), is_nilpotent(e8, &e))];
    if let Some(p) = &p {
        checks.push(("[p, e] = 0".to_string(), e8.bracket(p, &e).is_zero()));
    }
    let mut json = json!({ "element": t.to_string(), "relative_to": coords.as_ref().map(|c| p_combination(c)) });
    let triple = if checks.iter().all(|c| c.1) { sl2_complete(e8, &e, &amb).ok() } else { None };
    checks.push(("completes to an sl2-triple (h, e, f)".to_string(), triple.as_ref().is_some_and(|t| t.is_sl2(e8))));
    if let Some(tr) = &triple {
        writeln!(text, "h        {}", lie(e8, &tr.h)).unwrap();
        json["h"] = json!(lie(e8, &tr.h));
        match &coords {
            None => {
                let c = absolute_characteristic(&g, &tr.h).map_err(|e| Failure::Internal(e.to_string()))?;
                writeln!(text, "characteristic  {c}").unwrap();
                json["characteristic"] = json!(c.to_string());
            }
            Some(c) => {
                let rd = RootDatum::split_subalgebra(e8, &amb.g0, &RELATIVE_ORDER).map_err(|e| Failure::Internal(e.to_string()))?;
                let raw = raw_relative(e8, &rd, &tr.h).map_err(|e| Failure::Internal(e.to_string()))?;
                writeln!(text, "z_g0(p) type  {}", rd.type_name()).unwrap();
                writeln!(text, "simple-root values {:?}, centre coordinate {}", raw.values, raw.center).unwrap();
                json["centralizer_type"] = json!(rd.type_name());
                json["raw"] = json!(raw);
                // The printed presentation is only known for Table 8, whose
                // centralizer is that of any nonzero multiple of p1.
                if c[1..].iter().all(GaussRat::is_zero) {
                    let table8 = verify_mixed_table(&g, &d, spinorbit::reflgroup::shared(), 8);
                    if let Some(conv) = &table8.convention {
                        let rel = conv.apply(&raw);
                        writeln!(text, "relative characteristic  {rel}").unwrap();
                        json["relative_characteristic"] = json!(rel.to_string());
                    }
                } else {
                    writeln!(text, "relative characteristic  (no printed presentation for this centralizer)").unwrap();
                }
            }
        }
    }
    let passed = summary(&mut text, &checks);
    json["checks"] = checks_json(&checks);
    json["passed"] = json!(passed);
    Ok(Outcome { text, json, passed })
}

pub fn dump_grading() -> Result<Outcome, Failure> {
    let g = Graded::new();
    let d = Dictionary::build(&g).map_err(|e| Failure::Internal(e.to_string()))?;
    let e8 = &g.e8;
    let dims = g.dims();
    if dims != [60, 64, 60, 64] {
        return Err(Failure::Internal(format!("eigenspace dimensions {dims:?}")));
    }
    let mut text = String::new();
    writeln!(text, "dimensions {} {} {} {}", dims[0], dims[1], dims[2], dims[3]).unwrap();
    writeln!(text, "g0 type {}", g.g0_type_name()).unwrap();
    let mut nodes = Vec::new();
    for n in g.g0_nodes() {
        let root: Vec<String> = n.root.iter().map(|c| c.to_string()).collect();
        writeln!(text, "g0 simple root from E8 node {}: [{}]", n.e8_node, root.join(",")).unwrap();
        nodes.push(json!({ "e8_node": n.e8_node, "root": n.root.to_vec() }));
    }
    let mut degrees = Vec::new();
    for k in 0..4 {
        writeln!(text, "degree {k}").unwrap();
        let mut basis = Vec::new();
        for &b in g.component(k) {
            let label = e8.label(b);
            if k == 1 {
                let t = spinor_text(&d, &SparseVec::unit(b));
                writeln!(text, "  {b:3} {label} = {t}").unwrap();
                basis.push(json!({ "index": b, "label": label, "tensor": t }));
            } else {
                writeln!(text, "  {b:3} {label}").unwrap();
                basis.push(json!({ "index": b, "label": label }));
            }
        }
        degrees.push(json!({ "degree": k, "basis": basis }));
    }
    let total: usize = dims.iter().sum();
    if total != DIM {
        return Err(Failure::Internal(format!("components cover {total} of {DIM} basis vectors")));
    }
    Ok(Outcome { text, json: json!({ "dimensions": dims, "g0_nodes": nodes, "degrees": degrees }), passed: true })
}
