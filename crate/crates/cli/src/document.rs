//! JSON documents read and written by the tool.
//!
//! Keys are emitted in declaration order, so output bytes depend only on
//! the input and the tool version.

use std::collections::BTreeMap;

use num::ToPrimitive;
use ordrep::oracle::{Bounded, Budgets, CrossCheck, WeakOrder};
use ordrep::{ClosureMode, MonotoneFn, Preorder, Rat, UpSet};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Closure {
    #[serde(rename = "reflexive-transitive-closure")]
    ReflexiveTransitiveClosure,
    #[serde(rename = "as-given")]
    AsGiven,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreorderDocument {
    pub elements: Vec<String>,
    pub pairs: Vec<(String, String)>,
    pub closure: Closure,
}

impl PreorderDocument {
    /// Every pair `x ⪯ y` with `x ≠ y`, stored as given.
    pub fn from_preorder(p: &Preorder) -> Self {
        let n = p.len();
        let pairs = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && p.leq(x, y))
            .map(|(x, y)| (p.label(x).to_string(), p.label(y).to_string()))
            .collect();
        PreorderDocument {
            elements: p.labels().to_vec(),
            pairs,
            closure: Closure::AsGiven,
        }
    }

    pub fn to_preorder(&self, element_cap: usize) -> Result<Preorder, CliError> {
        if self.elements.len() > element_cap {
            return Err(CliError::Input(format!(
                "{} elements exceed the element cap {element_cap}",
                self.elements.len()
            )));
        }
        let mode = match self.closure {
            Closure::AsGiven => ClosureMode::AsGiven,
            Closure::ReflexiveTransitiveClosure => ClosureMode::ReflexiveTransitiveClosure,
        };
        Preorder::build(&self.elements, &self.pairs, mode)
            .map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed document: {e}")))
    }
}

/// Integers when they fit, decimal strings otherwise.
fn big(v: &num::BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

pub fn rational(v: &Rat) -> Value {
    json!({ "num": big(v.numer()), "den": big(v.denom()) })
}

/// `label → {num, den}`, in ground order.
pub fn monotone(p: &Preorder, f: &MonotoneFn) -> Value {
    let mut m = Map::new();
    for (x, v) in f.values().iter().enumerate() {
        m.insert(p.label(x).to_string(), rational(v));
    }
    Value::Object(m)
}

pub fn labels(p: &Preorder, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| p.label(x).to_string()).collect()
}

pub fn upset(p: &Preorder, s: &UpSet) -> Vec<String> {
    labels(p, &s.indices())
}

/// Levels from bottom to top, each a list of labels in ground order.
pub fn weak_order(p: &Preorder, w: &WeakOrder) -> Vec<Vec<String>> {
    let mut levels: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (x, &r) in w.ranks().iter().enumerate() {
        levels.entry(r).or_default().push(p.label(x).to_string());
    }
    levels.into_values().collect()
}

pub fn bounded(b: &Bounded) -> Value {
    match b {
        Bounded::Exact(n) => json!(n),
        Bounded::Exceeded { at_least } => json!({ "exceeded": true, "at_least": at_least }),
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BudgetRecord {
    pub mu_k: usize,
    pub sep_k: usize,
    pub class_cap: usize,
    pub upset_cap: usize,
    pub element_cap: usize,
}

impl BudgetRecord {
    pub fn new(b: &Budgets, element_cap: usize) -> Self {
        BudgetRecord {
            mu_k: b.mu_k,
            sep_k: b.sep_k,
            class_cap: b.class_cap,
            upset_cap: b.upset_cap,
            element_cap,
        }
    }
}

fn kind_name<K: std::fmt::Debug>(k: K) -> String {
    format!("{k:?}").to_lowercase()
}

/// The report object: classification fields, then version, budgets and
/// witnesses.
pub fn report(p: &Preorder, cc: &CrossCheck, budgets: BudgetRecord) -> Value {
    let r = &cc.report;
    let w = &cc.witnesses;
    let realizers: Map<String, Value> = w
        .realizers
        .iter()
        .map(|(k, orders)| {
            let levels: Vec<_> = orders.iter().map(|o| weak_order(p, o)).collect();
            (kind_name(k), json!(levels))
        })
        .collect();
    let families: Map<String, Value> = w
        .families
        .iter()
        .map(|f| {
            let sets: Vec<_> = f.sets.iter().map(|s| upset(p, s)).collect();
            (kind_name(f.kind), json!(sets))
        })
        .collect();
    json!({
        "quotient_size": r.quotient_size,
        "width": r.width,
        "has_utility": r.has_utility,
        "min_mu": {
            "plain": bounded(&r.min_mu_plain),
            "strict": bounded(&r.min_mu_strict),
            "injective": bounded(&r.min_mu_injective),
        },
        "min_sep": {
            "i": bounded(&r.min_sep_i),
            "ii": bounded(&r.min_sep_ii),
            "iii": bounded(&r.min_sep_iii),
        },
        "debreu_dense_min": r.debreu_dense_min,
        "debreu_upper_min": r.debreu_upper_min,
        "version": env!("CARGO_PKG_VERSION"),
        "budgets": budgets,
        "witnesses": {
            "incomparable_pair": w.incomparable_pair.map(|(x, y)| labels(p, &[x, y])),
            "max_antichain": labels(p, &w.max_antichain),
            "realizers": realizers,
            "separating_families": families,
            "debreu_dense": labels(p, &w.debreu_dense),
            "debreu_upper": labels(p, &w.debreu_upper),
        },
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}
