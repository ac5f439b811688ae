use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::session::{Binding, Session};
use crate::caps::Caps;
use crate::clutter::{
    classify, mfmc_bounded, monotone_sequences, scp_vertices, Clutter, PowerMode,
};
use crate::error::{Error, Result};
use crate::graph::{cm_square_predicates, structure, Graph};
use crate::homology::{betti_table, depth_zero_witness, homological_summary, Field, WitnessOutcome};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::polarization::{lower_top_degree, polarize_full, weighted_digraph_ideal};

/// The operations reachable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Depth,
    Reg,
    Betti,
    Summary,
    Polarize,
    Dual,
    Radical,
    Colon,
    Power,
    Symbolic,
    Lower,
    Classify,
    Scp,
    Mfmc,
    Sequences,
    Cm2,
    Paper,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Depth => "depth",
            Command::Reg => "reg",
            Command::Betti => "betti",
            Command::Summary => "summary",
            Command::Polarize => "polarize",
            Command::Dual => "dual",
            Command::Radical => "radical",
            Command::Colon => "colon",
            Command::Power => "power",
            Command::Symbolic => "symbolic",
            Command::Lower => "lower",
            Command::Classify => "classify",
            Command::Scp => "scp",
            Command::Mfmc => "mfmc",
            Command::Sequences => "sequences",
            Command::Cm2 => "cm2",
            Command::Paper => "paper",
        }
    }

    /// Positional arguments after the input file: `(required, optional)`.
    fn arity(self) -> (usize, usize) {
        match self {
            Command::Paper => (0, 0),
            Command::Colon | Command::Power | Command::Symbolic | Command::Lower => (2, 0),
            _ => (1, 0),
        }
    }
}

/// Options shared by every command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flags {
    /// `0` for the rationals, otherwise a prime.
    pub characteristic: u32,
    pub max_k: u32,
    pub caps: Caps,
    pub symbolic: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            characteristic: 0,
            max_k: 3,
            caps: Caps::default(),
            symbolic: false,
        }
    }
}

/// The JSON document written by every command.  Keys are emitted in sorted
/// order and no wall-clock data is included, so equal inputs give equal bytes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultDoc {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub characteristic: u32,
    pub outputs: Value,
    pub notes: Vec<String>,
}

impl ResultDoc {
    pub fn new(command: Command, characteristic: u32) -> Self {
        ResultDoc {
            command: command.name().to_string(),
            inputs: BTreeMap::new(),
            characteristic,
            outputs: Value::Null,
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("result documents serialize");
        let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
        text.push('\n');
        text
    }
}

/// Process exit status for an error: 1 parse, 2 precondition, 3 resource.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } => 1,
        Error::Resource { .. } => 3,
        Error::Precondition(_) | Error::ContextMismatch | Error::Overflow => 2,
    }
}

fn lookup<'a>(session: &'a Session, name: &str) -> Result<&'a Binding> {
    session
        .get(name)
        .ok_or_else(|| Error::precondition(format!("no object named `{name}` in the input")))
}

fn as_ideal(b: &Binding) -> MonomialIdeal {
    match b {
        Binding::Ideal(i) => i.clone(),
        Binding::Graph(g) => g.edge_ideal(),
        Binding::Clutter(c) => c.edge_ideal(),
        Binding::Digraph(d) => weighted_digraph_ideal(d),
    }
}

fn as_clutter(b: &Binding) -> Result<Clutter> {
    match b {
        Binding::Clutter(c) => Ok(c.clone()),
        Binding::Graph(g) => Ok(g.clutter()),
        Binding::Ideal(i) => Clutter::from_ideal(i),
        Binding::Digraph(_) => Err(Error::precondition("a digraph is not a clutter")),
    }
}

fn as_graph(b: &Binding) -> Result<Graph> {
    match b {
        Binding::Graph(g) => Ok(g.clone()),
        other => Graph::from_clutter(&as_clutter(other)?),
    }
}

fn parse_u32(text: &str, what: &str) -> Result<u32> {
    text.parse()
        .map_err(|_| Error::precondition(format!("{what} must be a nonnegative integer, got `{text}`")))
}

fn gens(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.gens().iter().map(Monomial::to_string).collect()
}

/// Execute one command against a parsed session.
pub fn run(command: Command, session: &Session, args: &[String], flags: &Flags) -> Result<ResultDoc> {
    let field = Field::with_characteristic(flags.characteristic)?;
    let caps = &flags.caps;
    let (required, optional) = command.arity();
    if args.len() < required || args.len() > required + optional {
        return Err(Error::precondition(format!(
            "`{}` takes {required} argument(s) after the input file, got {}",
            command.name(),
            args.len()
        )));
    }
    let mut doc = ResultDoc::new(command, flags.characteristic);
    if command == Command::Paper {
        return Ok(super::suite::paper_suite(flags));
    }
    let target_name = &args[0];
    let target = lookup(session, target_name)?;
    doc.inputs.insert(
        "target".into(),
        format!("{} {target_name}", target.kind()),
    );
    let ideal = as_ideal(target);
    doc.inputs.insert("ideal".into(), ideal.to_string());

    doc.outputs = match command {
        Command::Depth => {
            ideal.require_proper_nonzero("depth")?;
            match depth_zero_witness(&ideal, caps)? {
                WitnessOutcome::Found(w) => json!({
                    "depth": 0,
                    "method": "socle witness",
                    "witness": w.to_string(),
                }),
                outcome => {
                    if let WitnessOutcome::Inconclusive { cap } = outcome {
                        doc.notes.push(format!("socle witness search stopped at cap {cap}"));
                    }
                    let table = betti_table(&ideal, field, caps)?;
                    json!({ "depth": table.depth(), "method": "betti table" })
                }
            }
        }
        Command::Reg => {
            let table = betti_table(&ideal, field, caps)?;
            json!({ "reg_quotient": table.reg(), "reg_ideal": table.ideal_reg() })
        }
        Command::Betti => {
            let table = betti_table(&ideal, field, caps)?;
            let graded: Vec<Value> = table
                .graded()
                .into_iter()
                .map(|((i, j), v)| json!({ "i": i, "j": j, "value": v }))
                .collect();
            json!({
                "pd": table.pd(),
                "depth": table.depth(),
                "reg_quotient": table.reg(),
                "reg_ideal": table.ideal_reg(),
                "totals": table.totals(),
                "graded": graded,
                "multigraded": table,
            })
        }
        Command::Summary => {
            let s = homological_summary(&ideal, field, caps)?;
            let mut v = serde_json::to_value(&s).expect("summaries serialize");
            v["reg_quotient"] = json!(s.reg);
            v["reg_ideal"] = json!(s.reg + 1);
            v.as_object_mut().expect("object").remove("reg");
            v
        }
        Command::Polarize => {
            let pol = polarize_full(&ideal)?;
            let paper: Vec<String> = pol.ideal.gens().iter().map(|g| pol.paper_notation(g)).collect();
            json!({
                "ideal": gens(&pol.ideal),
                "new_vars": pol.new_vars,
                "gammas": pol.gammas,
                "paper_notation": paper,
                "new_vars_paper": pol.paper_new_vars(),
            })
        }
        Command::Dual => json!({ "dual": gens(&ideal.alexander_dual()?) }),
        Command::Radical => json!({ "radical": gens(&ideal.radical()) }),
        Command::Colon => {
            let by = &args[1];
            let result = match session.get(by) {
                Some(b) => ideal.colon_ideal(&as_ideal(b), caps)?,
                None => ideal.colon(&Monomial::parse(session.ctx(), by)?)?,
            };
            doc.inputs.insert("by".into(), by.clone());
            json!({ "colon": gens(&result) })
        }
        Command::Power | Command::Symbolic => {
            let k = parse_u32(&args[1], "k")?;
            doc.inputs.insert("k".into(), k.to_string());
            let p = if command == Command::Power {
                ideal.power_with(k, caps)?
            } else {
                ideal.symbolic_power_with(k, caps)?
            };
            json!({ "generators": gens(&p), "count": p.num_gens() })
        }
        Command::Lower => {
            let var = session.ctx().index_of(&args[1]).ok_or_else(|| {
                Error::precondition(format!("unknown variable `{}`", args[1]))
            })?;
            doc.inputs.insert("var".into(), args[1].clone());
            let data = lower_top_degree(&ideal, var)?;
            let list = |v: &[Monomial]| v.iter().map(Monomial::to_string).collect::<Vec<_>>();
            json!({
                "q": data.q,
                "p": data.p,
                "top": list(&data.top),
                "rest": list(&data.rest),
                "lowered": gens(&data.lowered),
                "clause": data.clause,
            })
        }
        Command::Classify => {
            let c = as_clutter(target)?;
            let covers: Vec<String> = c
                .covers()
                .iter()
                .map(|s| Monomial::from_set(c.ctx(), *s).to_string())
                .collect();
            json!({
                "classification": classify(&c),
                "height": c.height(),
                "minimal_covers": covers,
            })
        }
        Command::Scp => {
            let c = as_clutter(target)?;
            serde_json::to_value(scp_vertices(&c.incidence_matrix(), caps)?).expect("reports serialize")
        }
        Command::Mfmc => {
            let c = as_clutter(target)?;
            doc.inputs.insert("max_k".into(), flags.max_k.to_string());
            let r = mfmc_bounded(&c, flags.max_k, caps)?;
            json!({
                "max_k": r.max_k,
                "holds_up_to_k": r.holds_up_to_k,
                "fails_at_k": r.fails_at_k,
                "witness": r.witness.map(|w| w.to_string()),
            })
        }
        Command::Sequences => {
            let mode = if flags.symbolic { PowerMode::Symbolic } else { PowerMode::Ordinary };
            doc.inputs.insert("max_k".into(), flags.max_k.to_string());
            let r = monotone_sequences(&ideal, flags.max_k, mode, field, caps)?;
            for e in &r.entries {
                if let Some(n) = &e.note {
                    doc.notes.push(format!("k = {}: {n}", e.k));
                }
            }
            let mut v = serde_json::to_value(&r).expect("reports serialize");
            v["depths"] = json!(r.depths());
            v["regs"] = json!(r.regs());
            v
        }
        Command::Cm2 => {
            let g = as_graph(target)?;
            let s = structure(&g);
            let mut v = serde_json::to_value(cm_square_predicates(&g, field, caps)?)
                .expect("records serialize");
            v["limit_depth"] = json!(s.limit_depth);
            v["c0"] = json!(s.c0);
            v
        }
        Command::Paper => unreachable!("handled above"),
    };
    Ok(doc)
}
