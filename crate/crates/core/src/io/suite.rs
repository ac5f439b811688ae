use serde::Serialize;
use serde_json::json;

use super::run::{Command, Flags, ResultDoc};
use super::session::{Binding, Session};
use crate::caps::Caps;
use crate::error::Result;
use crate::graph::Graph;
use crate::homology::{betti_table, depth, depth_zero_witness, homological_summary, Field, WitnessOutcome};
use crate::ideal::{MonomialIdeal, VarContext};
use crate::polarization::polarize_full;

/// Input files for the reproduction suite, by name.
pub const FIXTURES: &[(&str, &str)] = &[
    ("regularity", include_str!("../../fixtures/regularity.mdi")),
    ("polarization", include_str!("../../fixtures/polarization.mdi")),
    ("kaiser", include_str!("../../fixtures/kaiser.mdi")),
    ("gorenstein", include_str!("../../fixtures/gorenstein.mdi")),
    ("nonadditive", include_str!("../../fixtures/nonadditive.mdi")),
    ("projective_plane", include_str!("../../fixtures/projective_plane.mdi")),
];

/// The parsed fixture with the given name.
pub fn fixture(name: &str) -> Session {
    let text = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture named {name}"))
        .1;
    Session::parse(text).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Pass,
    Fail,
    /// A stretch item stopped at a resource cap.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteItem {
    pub id: String,
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub status: SuiteStatus,
}

fn item(id: &str, claim: &str, expected: impl ToString, observed: impl ToString) -> SuiteItem {
    let (expected, observed) = (expected.to_string(), observed.to_string());
    let status = if expected == observed { SuiteStatus::Pass } else { SuiteStatus::Fail };
    SuiteItem {
        id: id.into(),
        claim: claim.into(),
        expected,
        observed,
        status,
    }
}

fn error_item(id: &str, claim: &str, expected: impl ToString, err: crate::Error) -> SuiteItem {
    SuiteItem {
        id: id.into(),
        claim: claim.into(),
        expected: expected.to_string(),
        observed: err.to_string(),
        status: SuiteStatus::Fail,
    }
}

fn ideal(session: &Session, name: &str) -> MonomialIdeal {
    match session.get(name) {
        Some(Binding::Ideal(i)) => i.clone(),
        Some(Binding::Graph(g)) => g.edge_ideal(),
        Some(Binding::Clutter(c)) => c.edge_ideal(),
        _ => panic!("fixture lacks ideal {name}"),
    }
}

fn graph(session: &Session, name: &str) -> Graph {
    match session.get(name) {
        Some(Binding::Graph(g)) => g.clone(),
        _ => panic!("fixture lacks graph {name}"),
    }
}

/// The same generators over the variables that actually occur in them.
fn restrict_to_support(ideal: &MonomialIdeal) -> MonomialIdeal {
    let keep = ideal.support_vars();
    let ctx = VarContext::new(keep.iter().map(|&i| ideal.ctx().name(i).to_string()))
        .expect("names are distinct");
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            crate::Monomial::new(&ctx, keep.iter().map(|&i| g.deg(i)).collect())
                .expect("length matches")
        })
        .collect();
    MonomialIdeal::new(&ctx, gens).expect("same context")
}

fn ideal_reg(i: &MonomialIdeal, field: Field, caps: &Caps) -> Result<i64> {
    Ok(betti_table(i, field, caps)?.ideal_reg())
}

/// Every numeric example of the reproduction target, compared exactly.
pub fn paper_suite_items(flags: &Flags) -> Vec<SuiteItem> {
    let caps = &flags.caps;
    let q = Field::Rational;
    let mut items = Vec::new();

    let regs = fixture("regularity");
    for (id, name, expected) in [
        ("reg-5-first", "I1", 5),
        ("reg-5-second", "I2", 5),
        ("reg-16", "I", 16),
        ("reg-13", "L", 13),
    ] {
        let claim = format!("reg({name}) = {expected}");
        items.push(match ideal_reg(&ideal(&regs, name), q, caps) {
            Ok(r) => item(id, &claim, expected, r),
            Err(e) => error_item(id, &claim, expected, e),
        });
    }

    let pol = fixture("polarization");
    match polarize_full(&ideal(&pol, "L")) {
        Ok(p) => {
            for (name, expected) in [
                ("f", "x_{1,2}x_{1,3}x_1x_{2,2}x_{2,3}x_2"),
                ("f1", "x_{1,2}x_{1,3}x_{3,2}"),
                ("f2", "x_{1,2}x_{3,2}x_3"),
                ("f3", "x_{2,2}x_{2,3}x_{3,2}"),
            ] {
                let g = ideal(&pol, name).gens()[0].clone();
                let observed = p
                    .polarize_monomial(&g)
                    .map(|m| p.paper_notation(&m))
                    .unwrap_or_else(|e| e.to_string());
                items.push(item(&format!("pol-{name}"), &format!("{name}^pol"), expected, observed));
            }
            items.push(item(
                "pol-new-vars",
                "X_L",
                "\\{x_{1,2},x_{1,3}\\}\\cup\\{x_{2,2},x_{2,3}\\}\\cup\\{x_{3,2}\\}",
                p.paper_new_vars(),
            ));
        }
        Err(e) => items.push(error_item("pol-f", "polarization of L", "a polarization", e)),
    }

    let kaiser = fixture("kaiser");
    let j = ideal(&kaiser, "J");
    items.push(item(
        "kaiser-cover-ideal",
        "J is the cover ideal of G",
        "true",
        graph(&kaiser, "G").clutter().cover_ideal() == j,
    ));
    for k in 1..=2u32 {
        let claim = format!("depth(R/J^{k})");
        let expected = [8, 5][k as usize - 1];
        let observed = j.power_with(k, caps).and_then(|p| depth(&p, q, caps));
        items.push(match observed {
            Ok(d) => item(&format!("kaiser-depth-{k}"), &claim, expected, d),
            Err(e) => error_item(&format!("kaiser-depth-{k}"), &claim, expected, e),
        });
    }
    items.push(kaiser_witness_item(&j, 3, caps));
    items.push(kaiser_stretch_item(&j, caps));

    let fig = graph(&fixture("gorenstein"), "G");
    let i = fig.edge_ideal();
    items.push(match homological_summary(&i, q, caps) {
        Ok(s) => item("gorenstein-gorenstein", "I(G) is Gorenstein", "true", s.is_gorenstein),
        Err(e) => error_item("gorenstein-gorenstein", "I(G) is Gorenstein", "true", e),
    });
    items.push(
        match i.power_with(2, caps).and_then(|sq| homological_summary(&sq, q, caps)) {
            Ok(s) => item("gorenstein-cm-square", "R/I(G)^2 is Cohen-Macaulay", "true", s.is_cohen_macaulay),
            Err(e) => error_item("gorenstein-cm-square", "R/I(G)^2 is Cohen-Macaulay", "true", e),
        },
    );

    let na = fixture("nonadditive");
    let (a, b) = (ideal(&na, "I"), ideal(&na, "J"));
    let squares = [
        ("nonadditive-a", "depth(A/I^2)", restrict_to_support(&a), 0),
        ("nonadditive-b", "depth(B/J^2)", restrict_to_support(&b), 0),
        ("nonadditive-sum", "depth(R/(I+J)^2)", a.sum(&b).expect("same ring"), 1),
    ];
    for (id, claim, base, expected) in squares {
        items.push(match base.power_with(2, caps).and_then(|p| depth(&p, q, caps)) {
            Ok(d) => item(id, claim, expected, d),
            Err(e) => error_item(id, claim, expected, e),
        });
    }
    items
}

fn kaiser_witness_item(j: &MonomialIdeal, k: u32, caps: &Caps) -> SuiteItem {
    let id = format!("kaiser-depth-{k}");
    let claim = format!("depth(R/J^{k}) via socle witness");
    let outcome = j.power_with(k, caps).and_then(|p| depth_zero_witness(&p, caps));
    match outcome {
        Ok(WitnessOutcome::Found(w)) => {
            let mut it = item(&id, &claim, 0, 0);
            it.observed = format!("0 (witness {w})");
            it
        }
        Ok(WitnessOutcome::NoneExists) => item(&id, &claim, 0, "positive"),
        Ok(WitnessOutcome::Inconclusive { cap }) => item(&id, &claim, 0, format!("inconclusive at cap {cap}")),
        Err(e) => error_item(&id, &claim, 0, e),
    }
}

fn kaiser_stretch_item(j: &MonomialIdeal, caps: &Caps) -> SuiteItem {
    let id = "kaiser-depth-4";
    let claim = "depth(R/J^4) (stretch)";
    let inconclusive = |why: String| SuiteItem {
        id: id.into(),
        claim: claim.into(),
        expected: "4".into(),
        observed: format!("inconclusive (resource): {why}"),
        status: SuiteStatus::Inconclusive,
    };
    let power = match j.power_with(4, caps) {
        Ok(p) => p,
        Err(e) if e.is_resource() => return inconclusive(e.to_string()),
        Err(e) => return error_item(id, claim, 4, e),
    };
    match depth_zero_witness(&power, caps) {
        Ok(WitnessOutcome::Found(w)) => item(id, claim, 4, format!("0 (witness {w})")),
        Ok(_) => match betti_table(&power, Field::Rational, caps) {
            Ok(t) => item(id, claim, 4, t.depth()),
            Err(e) if e.is_resource() => inconclusive(e.to_string()),
            Err(e) => error_item(id, claim, 4, e),
        },
        Err(e) => error_item(id, claim, 4, e),
    }
}

/// Run every reproduction item and wrap the outcome in a result document.
pub fn paper_suite(flags: &Flags) -> ResultDoc {
    let items = paper_suite_items(flags);
    let count = |s: SuiteStatus| items.iter().filter(|i| i.status == s).count();
    let mut doc = ResultDoc::new(Command::Paper, 0);
    doc.outputs = json!({
        "items": items,
        "passed": count(SuiteStatus::Pass),
        "failed": count(SuiteStatus::Fail),
        "inconclusive": count(SuiteStatus::Inconclusive),
        "all_passed": count(SuiteStatus::Fail) == 0,
    });
    doc
}
