//! Lexical constraints evaluated over realized structures.
//!
//! Every check operates on the *immediate members* of a domain: the words
//! of the domain that belong to no proper sub-domain, plus its maximal proper
//! sub-domains. A member is identified with its head word, which is the word
//! itself for a bare word and the introducing word for a sub-domain.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::ValencySlot;
use crate::report::{Condition, ValidationReport};
use crate::structure::{DomainId, Features};
use crate::validate::{Member, StructureView};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Precedes,
    Follows,
}

impl Direction {
    fn holds(self, a: (usize, usize), b: (usize, usize)) -> bool {
        match self {
            Direction::Precedes => a.1 < b.0,
            Direction::Follows => a.0 > b.1,
        }
    }
}

/// Ordering constraint introduced by a word and scoped by its domains.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PrecedencePredicate {
    /// The introducer precedes (or follows) every other member of the
    /// domain that contains it.
    SelfVsAll { direction: Direction },
    /// Members reached by a `left` dependency precede (or follow) members
    /// reached by a `right` dependency, within each domain of the introducer.
    LabeledPair {
        direction: Direction,
        left: BTreeSet<String>,
        right: BTreeSet<String>,
    },
}

impl PrecedencePredicate {
    pub fn labels(&self) -> impl Iterator<Item = &String> {
        let (l, r) = match self {
            PrecedencePredicate::SelfVsAll { .. } => (None, None),
            PrecedencePredicate::LabeledPair { left, right, .. } => (Some(left), Some(right)),
        };
        l.into_iter().flatten().chain(r.into_iter().flatten())
    }
}

impl fmt::Display for PrecedencePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<String>| s.iter().cloned().collect::<Vec<_>>().join(",");
        match self {
            PrecedencePredicate::SelfVsAll { direction } => match direction {
                Direction::Precedes => write!(f, "self < *"),
                Direction::Follows => write!(f, "self > *"),
            },
            PrecedencePredicate::LabeledPair {
                direction,
                left,
                right,
            } => {
                let word = match direction {
                    Direction::Precedes => "before",
                    Direction::Follows => "after",
                };
                write!(f, "<{}> {} <{}>", join(left), word, join(right))
            }
        }
    }
}

/// Bound on the number of immediate members of one template slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CardinalityConstraint {
    pub slot: usize,
    pub min: usize,
    /// `None` is unbounded.
    pub max: Option<usize>,
}

impl CardinalityConstraint {
    pub const fn at_most_one(slot: usize) -> Self {
        Self {
            slot,
            min: 0,
            max: Some(1),
        }
    }

    pub const fn at_least_one(slot: usize) -> Self {
        Self {
            slot,
            min: 1,
            max: None,
        }
    }

    pub const fn exactly_one(slot: usize) -> Self {
        Self {
            slot,
            min: 1,
            max: Some(1),
        }
    }

    pub const fn unconstrained(slot: usize) -> Self {
        Self {
            slot,
            min: 0,
            max: None,
        }
    }

    pub fn admits(&self, count: usize) -> bool {
        count >= self.min && self.max.is_none_or(|m| count <= m)
    }
}

/// Features every immediate member of a template slot must carry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DomainFeatureRequirement {
    pub slot: usize,
    pub required: Features,
}

/// Dependency types allowed on the path between a modifier's direct head
/// and its positional head. Empty forces both heads to coincide.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExtractionPathSet(pub BTreeSet<String>);

impl ExtractionPathSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn contains(&self, dtype: &str) -> bool {
        self.0.contains(dtype)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<S: Into<String>> FromIterator<S> for ExtractionPathSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        ExtractionPathSet(iter.into_iter().map(Into::into).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("unknown dependency type `{0}`")]
    UnknownDtype(String),
    #[error("word {0} does not exist")]
    UnknownWord(usize),
    #[error("word {0} has no lexical entry")]
    MissingEntry(usize),
    #[error("slot {slot} is out of range for the {len}-slot template of word {introducer}")]
    SlotOutOfRange {
        introducer: usize,
        slot: usize,
        len: usize,
    },
    #[error("word {positional} is not a transitive head of word {dependent}")]
    NoPath { dependent: usize, positional: usize },
    #[error("the dependency tree is malformed")]
    MalformedTree,
}

fn check_word(view: &StructureView<'_>, w: usize) -> Result<(), ConstraintError> {
    if w < view.len() {
        Ok(())
    } else {
        Err(ConstraintError::UnknownWord(w))
    }
}

fn member_label<'v>(view: &'v StructureView<'_>, introducer: usize, m: &Member) -> Option<&'v str> {
    if m.head != introducer && view.is_transitive_head(introducer, m.head) {
        view.incoming_dtype(m.head)
    } else {
        None
    }
}

/// Evaluates a precedence predicate in the domains of `introducer`.
pub fn check_precedence(
    pred: &PrecedencePredicate,
    introducer: usize,
    view: &StructureView<'_>,
) -> Result<ValidationReport, ConstraintError> {
    check_word(view, introducer)?;
    for label in pred.labels() {
        if !view.lexicon().inventory().has_dtype(label) {
            return Err(ConstraintError::UnknownDtype(label.clone()));
        }
    }
    let mut report = ValidationReport::new();
    match pred {
        PrecedencePredicate::SelfVsAll { direction } => {
            let Some(own) = view.own_domain(introducer) else {
                return Ok(report);
            };
            let me = (introducer, introducer);
            for m in view.immediate_members(own) {
                if m.head == introducer {
                    continue;
                }
                if !direction.holds(me, m.span) {
                    report.push(
                        Condition::Precedence,
                        vec![introducer, m.head],
                        format!(
                            "`{pred}` of word {introducer} violated by member headed by {}",
                            m.head
                        ),
                    );
                }
            }
        }
        PrecedencePredicate::LabeledPair {
            direction,
            left,
            right,
        } => {
            for sd in view.assoc(introducer) {
                let members = view.immediate_members(sd.domain);
                let labels: Vec<Option<&str>> = members
                    .iter()
                    .map(|m| member_label(view, introducer, m))
                    .collect();
                for (x, lx) in members.iter().zip(&labels) {
                    let Some(lx) = lx else { continue };
                    if !left.contains(*lx) {
                        continue;
                    }
                    for (y, ly) in members.iter().zip(&labels) {
                        let Some(ly) = ly else { continue };
                        if x.head == y.head || !right.contains(*ly) {
                            continue;
                        }
                        if !direction.holds(x.span, y.span) {
                            report.push(
                                Condition::Precedence,
                                vec![introducer, x.head, y.head],
                                format!(
                                    "`{pred}` of word {introducer} violated in {} by words {} and {}",
                                    sd.domain, x.head, y.head
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn slot_domain(
    view: &StructureView<'_>,
    introducer: usize,
    slot: usize,
) -> Result<Option<DomainId>, ConstraintError> {
    check_word(view, introducer)?;
    let entry = view
        .entry(introducer)
        .ok_or(ConstraintError::MissingEntry(introducer))?;
    let len = entry.template.slots.len();
    if slot >= len {
        return Err(ConstraintError::SlotOutOfRange {
            introducer,
            slot,
            len,
        });
    }
    Ok(view
        .assoc(introducer)
        .iter()
        .find(|sd| sd.slot == slot)
        .map(|sd| sd.domain))
}

/// Counts the immediate members of the domain filling a template slot.
/// Unrealized (empty) slots count zero.
pub fn check_cardinality(
    c: &CardinalityConstraint,
    introducer: usize,
    view: &StructureView<'_>,
) -> Result<ValidationReport, ConstraintError> {
    let count = match slot_domain(view, introducer, c.slot)? {
        Some(d) => view.immediate_members(d).len(),
        None => 0,
    };
    let mut report = ValidationReport::new();
    if !c.admits(count) {
        let max = c.max.map_or("*".to_string(), |m| m.to_string());
        report.push(
            Condition::Cardinality,
            vec![introducer],
            format!(
                "slot {} of word {introducer} has {count} members, allowed {}..{max}",
                c.slot, c.min
            ),
        );
    }
    Ok(report)
}

/// Every immediate member's head word must carry the required features.
pub fn check_domain_features(
    r: &DomainFeatureRequirement,
    introducer: usize,
    view: &StructureView<'_>,
) -> ValidationReport {
    let mut report = ValidationReport::new();
    if r.required.is_empty() {
        return report;
    }
    let Ok(Some(d)) = slot_domain(view, introducer, r.slot) else {
        return report;
    };
    for m in view.immediate_members(d) {
        let feats = view.features(m.head);
        for (attr, value) in &r.required {
            if feats.and_then(|f| f.get(attr)) != Some(value) {
                report.push(
                    Condition::DomainFeatures,
                    vec![introducer, m.head],
                    format!(
                        "member {} of slot {} of word {introducer} lacks {attr}={value}",
                        m.head, r.slot
                    ),
                );
            }
        }
    }
    report
}

/// Checks that every dependency on the path from the positional head of
/// `dependent` down to its direct head is in the slot's extraction set.
pub fn check_extraction(
    slot: &ValencySlot,
    dependent: usize,
    view: &StructureView<'_>,
) -> Result<ValidationReport, ConstraintError> {
    check_word(view, dependent)?;
    if !view.tree_ok() {
        return Err(ConstraintError::MalformedTree);
    }
    let mut report = ValidationReport::new();
    let Some(head) = view.head(dependent) else {
        return Ok(report);
    };
    let Some(positional) = view.positional(dependent) else {
        return Err(ConstraintError::NoPath {
            dependent,
            positional: dependent,
        });
    };
    let mut cur = head;
    let mut path = Vec::new();
    while cur != positional {
        let Some(up) = view.head(cur) else {
            return Err(ConstraintError::NoPath {
                dependent,
                positional,
            });
        };
        path.push(view.incoming_dtype(cur).unwrap_or_default());
        cur = up;
    }
    for dtype in path {
        if !slot.extraction.contains(dtype) {
            report.push(
                Condition::Extraction,
                vec![dependent, head, positional],
                format!(
                    "word {dependent} is placed at {positional} across `{dtype}`, \
                     which the `{}` slot of word {head} does not allow",
                    slot.dtype
                ),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinality_combinations() {
        assert!(CardinalityConstraint::exactly_one(0).admits(1));
        assert!(!CardinalityConstraint::exactly_one(0).admits(0));
        assert!(!CardinalityConstraint::exactly_one(0).admits(2));
        assert!(CardinalityConstraint::at_most_one(0).admits(0));
        assert!(!CardinalityConstraint::at_most_one(0).admits(2));
        assert!(CardinalityConstraint::at_least_one(0).admits(5));
        assert!(!CardinalityConstraint::at_least_one(0).admits(0));
        for k in 0..10 {
            assert!(CardinalityConstraint::unconstrained(3).admits(k));
        }
    }

    #[test]
    fn direction_on_spans() {
        assert!(Direction::Precedes.holds((0, 1), (2, 4)));
        assert!(!Direction::Precedes.holds((0, 2), (2, 4)));
        assert!(Direction::Follows.holds((5, 5), (2, 4)));
        assert!(!Direction::Follows.holds((4, 5), (2, 4)));
    }

    #[test]
    fn predicate_display() {
        let p = PrecedencePredicate::LabeledPair {
            direction: Direction::Follows,
            left: ["vpart".to_string()].into(),
            right: ["subj".to_string(), "obj".to_string()].into(),
        };
        assert_eq!(p.to_string(), "<vpart> after <obj,subj>");
        let s = PrecedencePredicate::SelfVsAll {
            direction: Direction::Precedes,
        };
        assert_eq!(s.to_string(), "self < *");
    }
}
