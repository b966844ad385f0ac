use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::order::TermOrder;
use crate::error::{Error, Result};

/// A ring variable `x_i^{(k)}`.
///
/// `name` is the base symbol as written (`x`, `a12`, `t1`); `base_index`
/// numbers the distinct base symbols of the ring and `jet_order` is `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    pub name: String,
    pub base_index: usize,
    pub jet_order: usize,
}

impl Variable {
    pub fn base(name: impl Into<String>, base_index: usize) -> Self {
        Variable {
            name: name.into(),
            base_index,
            jet_order: 0,
        }
    }

    pub fn jet(name: impl Into<String>, base_index: usize, jet_order: usize) -> Self {
        Variable {
            name: name.into(),
            base_index,
            jet_order,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.jet_order == 0 {
            write!(f, "{}", self.name)
        } else {
            write!(f, "{}_{}", self.name, self.jet_order)
        }
    }
}

/// A polynomial ring over the rationals: an ordered variable table and a
/// term order. Variable id `0` is the largest variable for lex-type orders.
#[derive(Debug, Clone)]
pub struct Ring {
    vars: Vec<Variable>,
    order: TermOrder,
    lookup: HashMap<(String, usize), usize>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(vars: Vec<Variable>, order: TermOrder) -> Result<Arc<Ring>> {
        let mut lookup = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(&v.name) {
                return Err(Error::OutOfRange(format!("bad variable name `{}`", v.name)));
            }
            if lookup.insert((v.name.clone(), v.jet_order), i).is_some() {
                return Err(Error::OutOfRange(format!("duplicate variable `{v}`")));
            }
        }
        if vars.len() > u16::MAX as usize {
            return Err(Error::OutOfRange("too many variables".into()));
        }
        if let TermOrder::Elimination { front } = &order {
            if front.iter().any(|&i| i >= vars.len()) {
                return Err(Error::OutOfRange("elimination block names a missing variable".into()));
            }
        }
        if let TermOrder::Weighted { weights } = &order {
            if weights.len() != vars.len() || weights.contains(&0) {
                return Err(Error::OutOfRange("weights must be positive, one per variable".into()));
            }
        }
        Ok(Arc::new(Ring { vars, order, lookup }))
    }

    /// Ring on plain base symbols, in the given order, graded reverse lex.
    pub fn with_names<S: AsRef<str>>(names: &[S]) -> Result<Arc<Ring>> {
        Self::with_names_and_order(names, TermOrder::GrevLex)
    }

    pub fn with_names_and_order<S: AsRef<str>>(names: &[S], order: TermOrder) -> Result<Arc<Ring>> {
        let vars = names
            .iter()
            .enumerate()
            .map(|(i, n)| Variable::base(n.as_ref(), i))
            .collect();
        Ring::new(vars, order)
    }

    /// Jet ring of order `m` over the given base symbols: variables
    /// `x_i^{(k)}`, `0 <= k <= m`, highest jet order first, then by base
    /// symbol. Under reverse-lex tie breaks this keeps the order-zero
    /// coordinates smallest, which keeps bases of jet ideals small.
    pub fn jets<S: AsRef<str>>(names: &[S], m: usize, order: TermOrder) -> Result<Arc<Ring>> {
        let mut vars = Vec::with_capacity(names.len() * (m + 1));
        for k in (0..=m).rev() {
            for (i, n) in names.iter().enumerate() {
                vars.push(Variable::jet(n.as_ref(), i, k));
            }
        }
        Ring::new(vars, order)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn variable(&self, id: usize) -> &Variable {
        &self.vars[id]
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn find(&self, name: &str, jet_order: usize) -> Option<usize> {
        self.lookup.get(&(name.to_string(), jet_order)).copied()
    }

    /// Distinct base symbols in order of first appearance.
    pub fn base_names(&self) -> Vec<String> {
        let mut out: Vec<(usize, String)> = Vec::new();
        for v in &self.vars {
            if !out.iter().any(|(b, _)| *b == v.base_index) {
                out.push((v.base_index, v.name.clone()));
            }
        }
        out.sort();
        out.into_iter().map(|(_, n)| n).collect()
    }

    pub fn max_jet_order(&self) -> usize {
        self.vars.iter().map(|v| v.jet_order).max().unwrap_or(0)
    }

    /// Same variables, different term order.
    pub fn with_order(&self, order: TermOrder) -> Result<Arc<Ring>> {
        Ring::new(self.vars.clone(), order)
    }

    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric()),
        _ => false,
    }
}
