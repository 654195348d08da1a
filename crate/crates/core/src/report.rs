//! Validation reports.
//!
//! Validators never stop at the first problem: every check whose inputs are
//! well-formed is evaluated and all violations are collected in order.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The well-formedness condition a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// Word indices are not the contiguous range `0..n`.
    TokenIndex,
    /// An edge, root or domain refers to a word that does not exist.
    WordRange,
    /// A dependency type, word class or feature symbol is not declared.
    Inventory,
    /// The root word has an incoming edge, or an edge loops on one word.
    Root,
    /// A word has more than one incoming edge.
    SingleHead,
    /// The head relation contains a cycle.
    Acyclic,
    /// A word is not reachable from the root.
    Connected,
    /// Word-class assignment is missing or disagrees with the lexical entry.
    WordClass,
    /// A token references a lexical entry that does not exist, or its
    /// features disagree with the entry.
    Entry,
    /// An edge is not licensed by the head's valency frame.
    Valency,
    /// A domain is not a continuous stretch of the word string.
    Contiguity,
    /// Two domains overlap without one containing the other.
    Hierarchy,
    /// The top domain does not contain every word.
    TopDomain,
    /// A domain reference in the association map is dangling or a template
    /// slot ordinal is invalid.
    Template,
    /// A word is not contained in exactly one of its own domains.
    OwnDomain,
    /// The domains associated with a word overlap.
    Disjoint,
    /// A word is not contained in a domain of a transitive head.
    HeadDomain,
    /// The domain sequence of a word contradicts word order.
    SequenceOrder,
    /// The positional head is not a transitive head.
    Positional,
    /// Domain contents disagree with the positional-head attachment.
    Linking,
    /// The path between direct and positional head is not licensed.
    Extraction,
    /// A domain cardinality restriction is violated.
    Cardinality,
    /// A domain member lacks a required morphosyntactic feature.
    DomainFeatures,
    /// A precedence predicate is violated.
    Precedence,
}

impl Condition {
    pub fn id(self) -> &'static str {
        match self {
            Condition::TokenIndex => "token-index",
            Condition::WordRange => "word-range",
            Condition::Inventory => "inventory",
            Condition::Root => "root",
            Condition::SingleHead => "single-head",
            Condition::Acyclic => "acyclic",
            Condition::Connected => "connected",
            Condition::WordClass => "word-class",
            Condition::Entry => "entry",
            Condition::Valency => "valency",
            Condition::Contiguity => "contiguity",
            Condition::Hierarchy => "hierarchy",
            Condition::TopDomain => "top-domain",
            Condition::Template => "template",
            Condition::OwnDomain => "cond1-own-domain",
            Condition::Disjoint => "cond2-disjoint",
            Condition::HeadDomain => "cond3-head-domain",
            Condition::SequenceOrder => "cond4-sequence-order",
            Condition::Positional => "positional",
            Condition::Linking => "linking",
            Condition::Extraction => "extraction",
            Condition::Cardinality => "cardinality",
            Condition::DomainFeatures => "domain-features",
            Condition::Precedence => "precedence",
        }
    }

    /// Short statement of the condition, used in rendered reports.
    pub fn statement(self) -> &'static str {
        match self {
            Condition::TokenIndex => "word indices form the range 0..n",
            Condition::WordRange => "referenced words exist",
            Condition::Inventory => "symbols are declared",
            Condition::Root => "the root has no head",
            Condition::SingleHead => "every word has at most one head",
            Condition::Acyclic => "the head relation is acyclic",
            Condition::Connected => "every word is reachable from the root",
            Condition::WordClass => "every word has exactly one class",
            Condition::Entry => "tokens agree with their lexical entries",
            Condition::Valency => "edges are licensed by valency",
            Condition::Contiguity => "order domains are continuous",
            Condition::Hierarchy => "domains nest or are disjoint",
            Condition::TopDomain => "the top domain contains all words",
            Condition::Template => "domain sequences instantiate templates",
            Condition::OwnDomain => "each word is contained in exactly one of its own domains",
            Condition::Disjoint => "the domains of a word are pairwise disjoint",
            Condition::HeadDomain => {
                "each word is contained in at least two domains, one of a transitive head"
            }
            Condition::SequenceOrder => "domain sequences are consistent with the precedence",
            Condition::Positional => "positional heads are transitive heads",
            Condition::Linking => "domains contain exactly the words inserted into them",
            Condition::Extraction => "extraction paths are licensed",
            Condition::Cardinality => "domain cardinalities hold",
            Condition::DomainFeatures => "domain members carry required features",
            Condition::Precedence => "precedence predicates hold",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A single failed condition together with the words or domains involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub indices: Vec<usize>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, condition: Condition, indices: Vec<usize>, message: impl Into<String>) {
        self.violations.push(Violation {
            condition,
            indices,
            message: message.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has(&self, condition: Condition) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// Distinct conditions in order of first occurrence.
    pub fn conditions(&self) -> Vec<Condition> {
        let mut seen = Vec::new();
        for v in &self.violations {
            if !seen.contains(&v.condition) {
                seen.push(v.condition);
            }
        }
        seen
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self
            .indices
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "{} [{}] ({}): {}",
            self.condition,
            idx,
            self.condition.statement(),
            self.message
        )
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return writeln!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}
