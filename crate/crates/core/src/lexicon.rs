//! Lexical entries and lexica.
//!
//! All grammatical information lives in the lexicon: valency frames, the
//! domain templates a word opens, and the ordering constraints scoped by
//! those domains. See `syntax` for the file format.

mod syntax;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constraints::{
    CardinalityConstraint, DomainFeatureRequirement, ExtractionPathSet, PrecedencePredicate,
};
use crate::structure::{Features, TemplateShape};

pub use syntax::parse_lexicon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: unknown {kind} `{symbol}`")]
    UnknownSymbol {
        line: usize,
        kind: &'static str,
        symbol: String,
    },
    #[error("line {line}: entry \"{form}\" declares more than one `{dtype}` slot")]
    DuplicateSlot {
        line: usize,
        form: String,
        dtype: String,
    },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attribute {
    pub name: String,
    pub values: Vec<String>,
}

/// Declared symbol inventories: dependency types, word classes, attributes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inventory {
    pub dtypes: Vec<String>,
    pub classes: Vec<String>,
    pub attributes: Vec<Attribute>,
}

impl Inventory {
    pub fn has_dtype(&self, d: &str) -> bool {
        self.dtypes.iter().any(|x| x == d)
    }

    pub fn has_class(&self, c: &str) -> bool {
        self.classes.iter().any(|x| x == c)
    }

    pub fn has_value(&self, attr: &str, value: &str) -> bool {
        self.attributes
            .iter()
            .any(|a| a.name == attr && a.values.iter().any(|v| v == value))
    }

    pub fn attribute(&self, attr: &str) -> Option<&Attribute> {
        self.attributes.iter().find(|a| a.name == attr)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassRequirement {
    Any,
    Class(String),
}

impl ClassRequirement {
    pub fn admits(&self, class: &str) -> bool {
        match self {
            ClassRequirement::Any => true,
            ClassRequirement::Class(c) => c == class,
        }
    }
}

/// One dependency a word can or must govern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ValencySlot {
    pub dtype: String,
    pub required: bool,
    pub class: ClassRequirement,
    /// Features the dependent must carry.
    pub features: Features,
    pub extraction: ExtractionPathSet,
}

impl ValencySlot {
    pub fn new(dtype: impl Into<String>) -> Self {
        ValencySlot {
            dtype: dtype.into(),
            required: false,
            class: ClassRequirement::Any,
            features: Features::new(),
            extraction: ExtractionPathSet::empty(),
        }
    }

    /// Whether a word of `class` with `features` may fill this slot.
    pub fn admits(&self, class: &str, features: &Features) -> bool {
        self.class.admits(class)
            && self
                .features
                .iter()
                .all(|(a, v)| features.get(a) == Some(v))
    }
}

/// The sequence of order domains a word opens.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DomainTemplate {
    pub slots: Vec<String>,
    pub self_slot: usize,
    pub cardinality: Vec<CardinalityConstraint>,
    pub features: Vec<DomainFeatureRequirement>,
}

impl DomainTemplate {
    /// A template with one domain that holds the word itself.
    pub fn single(name: impl Into<String>) -> Self {
        DomainTemplate {
            slots: vec![name.into()],
            self_slot: 0,
            cardinality: Vec::new(),
            features: Vec::new(),
        }
    }

    pub fn shape(&self) -> TemplateShape {
        TemplateShape {
            len: self.slots.len(),
            self_slot: self.self_slot,
        }
    }

    pub fn slot_index(&self, name: &str) -> Option<usize> {
        self.slots.iter().position(|s| s == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LexicalEntry {
    pub form: String,
    pub class: String,
    pub features: Features,
    pub valency: Vec<ValencySlot>,
    pub template: DomainTemplate,
    pub predicates: Vec<PrecedencePredicate>,
}

impl LexicalEntry {
    pub fn slot(&self, dtype: &str) -> Option<&ValencySlot> {
        self.valency.iter().find(|s| s.dtype == dtype)
    }

    pub fn slot_mut(&mut self, dtype: &str) -> Option<&mut ValencySlot> {
        self.valency.iter_mut().find(|s| s.dtype == dtype)
    }
}

/// The implicit sentence root: it governs the root word through a single
/// slot and introduces the top domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootEntry {
    pub slot: ValencySlot,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lexicon {
    inventory: Inventory,
    root: Option<RootEntry>,
    entries: BTreeMap<String, Vec<LexicalEntry>>,
}

impl Lexicon {
    pub fn new(inventory: Inventory) -> Self {
        Lexicon {
            inventory,
            root: None,
            entries: BTreeMap::new(),
        }
    }

    /// Parses and validates lexicon source text.
    pub fn load(source: &str) -> Result<Lexicon, LexiconError> {
        parse_lexicon(source)
    }

    pub fn inventory(&self) -> &Inventory {
        &self.inventory
    }

    pub fn root(&self) -> Option<&RootEntry> {
        self.root.as_ref()
    }

    pub fn set_root(&mut self, root: RootEntry) -> Result<(), LexiconError> {
        check_slot(&self.inventory, &root.slot, 0)?;
        if root.slot.dtype != crate::structure::ROOT_DTYPE {
            return Err(LexiconError::Invalid {
                line: 0,
                message: format!(
                    "the root slot must have type `{}`",
                    crate::structure::ROOT_DTYPE
                ),
            });
        }
        self.root = Some(root);
        Ok(())
    }

    /// All entries for a form, in declaration order. Matching is exact.
    pub fn entries_for(&self, form: &str) -> &[LexicalEntry] {
        self.entries.get(form).map_or(&[], Vec::as_slice)
    }

    pub fn entries_for_mut(&mut self, form: &str) -> &mut [LexicalEntry] {
        self.entries
            .get_mut(form)
            .map_or(&mut [], Vec::as_mut_slice)
    }

    pub fn entry(&self, form: &str, ordinal: usize) -> Option<&LexicalEntry> {
        self.entries_for(form).get(ordinal)
    }

    pub fn forms(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexicalEntry> {
        self.entries.values().flatten()
    }

    pub fn entry_count(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    /// Adds an entry after checking it against the inventories.
    pub fn add_entry(&mut self, entry: LexicalEntry) -> Result<(), LexiconError> {
        check_entry(&self.inventory, &entry, 0)?;
        self.entries
            .entry(entry.form.clone())
            .or_default()
            .push(entry);
        Ok(())
    }

    /// Re-checks every entry, e.g. after editing entries in place.
    pub fn check(&self) -> Result<(), LexiconError> {
        if let Some(root) = &self.root {
            check_slot(&self.inventory, &root.slot, 0)?;
        }
        for e in self.entries() {
            check_entry(&self.inventory, e, 0)?;
        }
        Ok(())
    }

    /// Renders the lexicon in its file format. `Lexicon::load` of the result
    /// reproduces `self`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let inv = &self.inventory;
        let _ = writeln!(out, "dtypes:{}", spaced(&inv.dtypes));
        let _ = writeln!(out, "classes:{}", spaced(&inv.classes));
        for a in &inv.attributes {
            let _ = writeln!(out, "attr {}:{}", a.name, spaced(&a.values));
        }
        if let Some(root) = &self.root {
            let _ = writeln!(out, "\nroot {{");
            let _ = writeln!(out, "  {}", render_slot(&root.slot));
            let _ = writeln!(out, "}}");
        }
        for e in self.entries() {
            let _ = writeln!(out, "\nentry {} class={} {{", quote(&e.form), e.class);
            if !e.features.is_empty() {
                let _ = writeln!(out, "  feat {};", render_features(&e.features));
            }
            for s in &e.valency {
                let _ = writeln!(out, "  {}", render_slot(s));
            }
            let t = &e.template;
            let _ = writeln!(
                out,
                "  domains [{}] self={};",
                t.slots.join(" "),
                t.slots[t.self_slot]
            );
            for c in &t.cardinality {
                let name = &t.slots[c.slot];
                let stmt = match (c.min, c.max) {
                    (1, Some(1)) => format!("card {name} = 1;"),
                    (0, Some(1)) => format!("card {name} <= 1;"),
                    (1, None) => format!("card {name} >= 1;"),
                    _ => format!("card {name} >= 0;"),
                };
                let _ = writeln!(out, "  {stmt}");
            }
            for r in &t.features {
                let name = &t.slots[r.slot];
                if r.required.is_empty() {
                    let _ = writeln!(out, "  feat {name};");
                } else {
                    let _ = writeln!(out, "  feat {name} {};", render_features(&r.required));
                }
            }
            for p in &e.predicates {
                match p {
                    PrecedencePredicate::SelfVsAll { .. } => {
                        let _ = writeln!(out, "  order {p} in {};", t.slots[t.self_slot]);
                    }
                    PrecedencePredicate::LabeledPair { .. } => {
                        let _ = writeln!(out, "  order {p};");
                    }
                }
            }
            let _ = writeln!(out, "}}");
        }
        out
    }
}

fn spaced(items: &[String]) -> String {
    items.iter().map(|s| format!(" {s}")).collect()
}

fn quote(s: &str) -> String {
    let mut out = String::from('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn render_features(f: &Features) -> String {
    f.iter()
        .map(|(a, v)| format!("{a}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_slot(s: &ValencySlot) -> String {
    let mut out = format!("slot {}:", s.dtype);
    if let ClassRequirement::Class(c) = &s.class {
        let _ = write!(out, " class={c}");
    }
    if !s.features.is_empty() {
        let _ = write!(out, " feat {}", render_features(&s.features));
    }
    out.push_str(if s.required { " required" } else { " optional" });
    let ext = s.extraction.0.iter().cloned().collect::<Vec<_>>().join(",");
    let _ = write!(out, " extract {{{ext}}};");
    out
}

fn unknown(line: usize, kind: &'static str, symbol: &str) -> LexiconError {
    LexiconError::UnknownSymbol {
        line,
        kind,
        symbol: symbol.to_string(),
    }
}

pub(crate) fn check_features(
    inv: &Inventory,
    features: &Features,
    line: usize,
) -> Result<(), LexiconError> {
    for (a, v) in features {
        if inv.attribute(a).is_none() {
            return Err(unknown(line, "attribute", a));
        }
        if !inv.has_value(a, v) {
            return Err(unknown(line, "value", v));
        }
    }
    Ok(())
}

pub(crate) fn check_slot(
    inv: &Inventory,
    s: &ValencySlot,
    line: usize,
) -> Result<(), LexiconError> {
    if !inv.has_dtype(&s.dtype) {
        return Err(unknown(line, "dependency type", &s.dtype));
    }
    if let ClassRequirement::Class(c) = &s.class {
        if !inv.has_class(c) {
            return Err(unknown(line, "word class", c));
        }
    }
    check_features(inv, &s.features, line)?;
    for d in &s.extraction.0 {
        if !inv.has_dtype(d) {
            return Err(unknown(line, "dependency type", d));
        }
    }
    Ok(())
}

pub(crate) fn check_entry(
    inv: &Inventory,
    e: &LexicalEntry,
    line: usize,
) -> Result<(), LexiconError> {
    if !inv.has_class(&e.class) {
        return Err(unknown(line, "word class", &e.class));
    }
    check_features(inv, &e.features, line)?;
    for (i, s) in e.valency.iter().enumerate() {
        check_slot(inv, s, line)?;
        if e.valency[..i].iter().any(|o| o.dtype == s.dtype) {
            return Err(LexiconError::DuplicateSlot {
                line,
                form: e.form.clone(),
                dtype: s.dtype.clone(),
            });
        }
    }
    let t = &e.template;
    let invalid = |message: String| LexiconError::Invalid { line, message };
    if t.slots.is_empty() {
        return Err(invalid(format!("entry \"{}\" has no domains", e.form)));
    }
    if t.self_slot >= t.slots.len() {
        return Err(invalid(format!(
            "entry \"{}\": self slot out of range",
            e.form
        )));
    }
    for (i, s) in t.slots.iter().enumerate() {
        if t.slots[..i].contains(s) {
            return Err(invalid(format!(
                "entry \"{}\": duplicate domain `{s}`",
                e.form
            )));
        }
    }
    for c in &t.cardinality {
        if c.slot >= t.slots.len() {
            return Err(invalid(format!(
                "entry \"{}\": cardinality slot out of range",
                e.form
            )));
        }
        if c.min > 1 || c.max.is_some_and(|m| m != 1) {
            return Err(invalid(format!(
                "entry \"{}\": cardinality must be at most one, at least one or exactly one",
                e.form
            )));
        }
    }
    for r in &t.features {
        if r.slot >= t.slots.len() {
            return Err(invalid(format!(
                "entry \"{}\": feature slot out of range",
                e.form
            )));
        }
        check_features(inv, &r.required, line)?;
    }
    for p in &e.predicates {
        if let PrecedencePredicate::LabeledPair { left, right, .. } = p {
            if left.is_empty() || right.is_empty() {
                return Err(invalid(format!(
                    "entry \"{}\": labeled predicates need non-empty label sets",
                    e.form
                )));
            }
        }
        for l in p.labels() {
            if !inv.has_dtype(l) {
                return Err(unknown(line, "dependency type", l));
            }
        }
    }
    Ok(())
}

/// Parses and validates lexicon source text.
pub fn load_lexicon(source: &str) -> Result<Lexicon, LexiconError> {
    Lexicon::load(source)
}

/// All entries for a form; empty if the form is unknown.
pub fn entries_for<'a>(form: &str, lex: &'a Lexicon) -> &'a [LexicalEntry] {
    lex.entries_for(form)
}

impl Lexicon {
    pub(crate) fn from_parts(
        inventory: Inventory,
        root: Option<RootEntry>,
        entries: BTreeMap<String, Vec<LexicalEntry>>,
    ) -> Self {
        Lexicon {
            inventory,
            root,
            entries,
        }
    }
}
