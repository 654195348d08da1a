//! Text and JSON renderings of trees and dependency structures.
//!
//! The text format is line oriented; blank lines and lines starting with `#`
//! are ignored on input.
//!
//! ```text
//! token 0 den 0 Det case=acc num=sg     # index form entry-ordinal class features
//! root 2
//! edge 1 det 0                          # head dtype dependent
//! top d0
//! domain d0: 0 1 2 3 4 5                # id: members
//! assoc 2: 0=d3 1=d4                    # word: slot=domain ...
//! positional 1: 2                       # word: positional head
//! ```
//!
//! Tree documents contain only `token` (without features), `root` and
//! `edge` lines. Rendering is canonical, so `parse(render(x)) == x` for every
//! structure whose per-word tables all have one row per word.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::structure::{
    DependencyEdge, DependencyStructure, DependencyTree, DomainId, Features, OrderDomain,
    OrderDomainStructure, SlotDomain, WordToken,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Document(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

fn line_err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Line {
        line,
        message: message.into(),
    })
}

fn render_tokens(out: &mut String, tree: &DependencyTree, features: Option<&[Features]>) {
    for (i, w) in tree.words.iter().enumerate() {
        let class = tree.classes.get(i).map_or("?", String::as_str);
        let _ = write!(out, "token {} {} {} {}", w.index, w.form, w.entry, class);
        if let Some(f) = features.and_then(|f| f.get(i)) {
            for (a, v) in f {
                let _ = write!(out, " {a}={v}");
            }
        }
        out.push('\n');
    }
    let _ = writeln!(out, "root {}", tree.root);
    for e in &tree.edges {
        let _ = writeln!(out, "edge {} {} {}", e.head, e.dtype, e.dependent);
    }
}

pub fn render_tree(tree: &DependencyTree) -> String {
    let mut out = String::new();
    render_tokens(&mut out, tree, None);
    out
}

pub fn render_structure(ds: &DependencyStructure) -> String {
    let mut out = String::new();
    render_tokens(&mut out, &ds.tree, Some(&ds.features));
    let _ = writeln!(out, "top {}", ds.domains.top);
    for d in &ds.domains.domains {
        let _ = write!(out, "domain {}:", d.id);
        for m in &d.members {
            let _ = write!(out, " {m}");
        }
        out.push('\n');
    }
    for (w, seq) in ds.domains.assoc.iter().enumerate() {
        let _ = write!(out, "assoc {w}:");
        for sd in seq {
            let _ = write!(out, " {}={}", sd.slot, sd.domain);
        }
        out.push('\n');
    }
    for (w, p) in ds.positional.iter().enumerate() {
        if let Some(p) = p {
            let _ = writeln!(out, "positional {w}: {p}");
        }
    }
    out
}

fn parse_usize(line: usize, s: &str, what: &str) -> Result<usize, FormatError> {
    s.parse()
        .or_else(|_| line_err(line, format!("expected {what}, found `{s}`")))
}

fn parse_domain_id(line: usize, s: &str) -> Result<DomainId, FormatError> {
    s.strip_prefix('d')
        .and_then(|k| k.parse().ok())
        .map(DomainId)
        .map_or_else(
            || line_err(line, format!("expected a domain id like d3, found `{s}`")),
            Ok,
        )
}

/// Splits `key: rest` where key is the single field before the colon.
fn split_colon(line: usize, rest: &str) -> Result<(String, String), FormatError> {
    match rest.split_once(':') {
        Some((k, v)) => Ok((k.trim().to_string(), v.trim().to_string())),
        None => line_err(line, "missing `:`"),
    }
}

#[derive(Default)]
struct Collected {
    words: Vec<WordToken>,
    classes: Vec<String>,
    features: Vec<Features>,
    any_features: bool,
    root: Option<usize>,
    edges: Vec<DependencyEdge>,
    top: Option<DomainId>,
    domains: Vec<OrderDomain>,
    assoc: BTreeMap<usize, Vec<SlotDomain>>,
    positional: BTreeMap<usize, usize>,
    structure_lines: bool,
}

fn collect(text: &str) -> Result<Collected, FormatError> {
    let mut c = Collected::default();
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "token" => {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() < 4 {
                    return line_err(line, "token needs index, form, entry and class");
                }
                let mut feats = Features::new();
                for f in &fields[4..] {
                    let Some((a, v)) = f.split_once('=') else {
                        return line_err(line, format!("expected attr=value, found `{f}`"));
                    };
                    if feats.insert(a.to_string(), v.to_string()).is_some() {
                        return line_err(line, format!("attribute `{a}` given twice"));
                    }
                    c.any_features = true;
                }
                c.words.push(WordToken {
                    index: parse_usize(line, fields[0], "a word index")?,
                    form: fields[1].to_string(),
                    entry: parse_usize(line, fields[2], "an entry ordinal")?,
                });
                c.classes.push(fields[3].to_string());
                c.features.push(feats);
            }
            "root" => {
                if c.root.is_some() {
                    return line_err(line, "second root line");
                }
                c.root = Some(parse_usize(line, rest, "a word index")?);
            }
            "edge" => {
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 3 {
                    return line_err(line, "edge needs head, dtype and dependent");
                }
                c.edges.push(DependencyEdge {
                    head: parse_usize(line, f[0], "a word index")?,
                    dtype: f[1].to_string(),
                    dependent: parse_usize(line, f[2], "a word index")?,
                });
            }
            "top" => {
                c.structure_lines = true;
                if c.top.is_some() {
                    return line_err(line, "second top line");
                }
                c.top = Some(parse_domain_id(line, rest)?);
            }
            "domain" => {
                c.structure_lines = true;
                let (id, members) = split_colon(line, rest)?;
                let id = parse_domain_id(line, &id)?;
                let members = members
                    .split_whitespace()
                    .map(|m| parse_usize(line, m, "a word index"))
                    .collect::<Result<Vec<_>, _>>()?;
                c.domains.push(OrderDomain { id, members });
            }
            "assoc" => {
                c.structure_lines = true;
                let (w, items) = split_colon(line, rest)?;
                let w = parse_usize(line, &w, "a word index")?;
                let mut seq = Vec::new();
                for item in items.split_whitespace() {
                    let Some((slot, d)) = item.split_once('=') else {
                        return line_err(line, format!("expected slot=domain, found `{item}`"));
                    };
                    seq.push(SlotDomain {
                        slot: parse_usize(line, slot, "a slot ordinal")?,
                        domain: parse_domain_id(line, d)?,
                    });
                }
                if c.assoc.insert(w, seq).is_some() {
                    return line_err(line, format!("second assoc line for word {w}"));
                }
            }
            "positional" => {
                c.structure_lines = true;
                let (w, p) = split_colon(line, rest)?;
                let w = parse_usize(line, &w, "a word index")?;
                let p = parse_usize(line, &p, "a word index")?;
                if c.positional.insert(w, p).is_some() {
                    return line_err(line, format!("second positional line for word {w}"));
                }
            }
            other => return line_err(line, format!("unknown line type `{other}`")),
        }
    }
    Ok(c)
}

fn build_tree(c: &mut Collected) -> Result<DependencyTree, FormatError> {
    if c.words.is_empty() {
        return Err(FormatError::Document("no tokens".into()));
    }
    let root = c
        .root
        .ok_or_else(|| FormatError::Document("missing root line".into()))?;
    Ok(DependencyTree {
        words: std::mem::take(&mut c.words),
        root,
        edges: std::mem::take(&mut c.edges),
        classes: std::mem::take(&mut c.classes),
    })
}

pub fn parse_tree(text: &str) -> Result<DependencyTree, FormatError> {
    let mut c = collect(text)?;
    if c.structure_lines {
        return Err(FormatError::Document(
            "a tree document cannot contain domain, assoc or positional lines".into(),
        ));
    }
    if c.any_features {
        return Err(FormatError::Document(
            "a tree document cannot contain token features".into(),
        ));
    }
    build_tree(&mut c)
}

pub fn parse_structure(text: &str) -> Result<DependencyStructure, FormatError> {
    let mut c = collect(text)?;
    let top = c
        .top
        .ok_or_else(|| FormatError::Document("missing top line".into()))?;
    let features = std::mem::take(&mut c.features);
    let n = c.words.len();
    let tree = build_tree(&mut c)?;
    let mut assoc = vec![Vec::new(); n];
    for (w, seq) in std::mem::take(&mut c.assoc) {
        match assoc.get_mut(w) {
            Some(slot) => *slot = seq,
            None => return Err(FormatError::Document(format!("assoc for unknown word {w}"))),
        }
    }
    let mut positional = vec![None; n];
    for (w, p) in std::mem::take(&mut c.positional) {
        match positional.get_mut(w) {
            Some(slot) => *slot = Some(p),
            None => {
                return Err(FormatError::Document(format!(
                    "positional head for unknown word {w}"
                )))
            }
        }
    }
    Ok(DependencyStructure {
        tree,
        features,
        domains: OrderDomainStructure {
            domains: c.domains,
            top,
            assoc,
        },
        positional,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonToken {
    pub index: usize,
    pub form: String,
    pub entry: usize,
    pub class: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub features: Features,
}

/// Wire form of a tree or structure. Trees omit the domain fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonStructure {
    pub tokens: Vec<JsonToken>,
    pub root: usize,
    /// `[head, dtype, dependent]`
    pub edges: Vec<(usize, String, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<String>,
    /// `[id, members]`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domains: Option<Vec<(String, Vec<usize>)>>,
    /// One row per word: `[[slot, domain-id], ...]`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assoc: Option<Vec<Vec<(usize, String)>>>,
    /// `[word, positional head]`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positional: Option<Vec<(usize, usize)>>,
}

fn json_tree(tree: &DependencyTree, features: Option<&[Features]>) -> JsonStructure {
    JsonStructure {
        tokens: tree
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| JsonToken {
                index: w.index,
                form: w.form.clone(),
                entry: w.entry,
                class: tree.classes.get(i).cloned().unwrap_or_default(),
                features: features.and_then(|f| f.get(i)).cloned().unwrap_or_default(),
            })
            .collect(),
        root: tree.root,
        edges: tree
            .edges
            .iter()
            .map(|e| (e.head, e.dtype.clone(), e.dependent))
            .collect(),
        top: None,
        domains: None,
        assoc: None,
        positional: None,
    }
}

impl From<&DependencyTree> for JsonStructure {
    fn from(tree: &DependencyTree) -> Self {
        json_tree(tree, None)
    }
}

impl From<&DependencyStructure> for JsonStructure {
    fn from(ds: &DependencyStructure) -> Self {
        let mut j = json_tree(&ds.tree, Some(&ds.features));
        j.top = Some(ds.domains.top.to_string());
        j.domains = Some(
            ds.domains
                .domains
                .iter()
                .map(|d| (d.id.to_string(), d.members.clone()))
                .collect(),
        );
        j.assoc = Some(
            ds.domains
                .assoc
                .iter()
                .map(|seq| {
                    seq.iter()
                        .map(|sd| (sd.slot, sd.domain.to_string()))
                        .collect()
                })
                .collect(),
        );
        j.positional = Some(
            ds.positional
                .iter()
                .enumerate()
                .filter_map(|(w, p)| p.map(|p| (w, p)))
                .collect(),
        );
        j
    }
}

fn json_id(s: &str) -> Result<DomainId, FormatError> {
    parse_domain_id(0, s).map_err(|_| FormatError::Json(format!("bad domain id `{s}`")))
}

impl JsonStructure {
    pub fn to_tree(&self) -> DependencyTree {
        DependencyTree {
            words: self
                .tokens
                .iter()
                .map(|t| WordToken {
                    index: t.index,
                    form: t.form.clone(),
                    entry: t.entry,
                })
                .collect(),
            root: self.root,
            edges: self
                .edges
                .iter()
                .map(|(h, d, dep)| DependencyEdge {
                    head: *h,
                    dependent: *dep,
                    dtype: d.clone(),
                })
                .collect(),
            classes: self.tokens.iter().map(|t| t.class.clone()).collect(),
        }
    }

    pub fn to_structure(&self) -> Result<DependencyStructure, FormatError> {
        let n = self.tokens.len();
        let missing = |f: &str| FormatError::Json(format!("missing `{f}`"));
        let top = json_id(self.top.as_deref().ok_or_else(|| missing("top"))?)?;
        let domains = self
            .domains
            .as_ref()
            .ok_or_else(|| missing("domains"))?
            .iter()
            .map(|(id, m)| {
                Ok(OrderDomain {
                    id: json_id(id)?,
                    members: m.clone(),
                })
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        let assoc = self
            .assoc
            .as_ref()
            .ok_or_else(|| missing("assoc"))?
            .iter()
            .map(|seq| {
                seq.iter()
                    .map(|(slot, id)| {
                        Ok(SlotDomain {
                            slot: *slot,
                            domain: json_id(id)?,
                        })
                    })
                    .collect::<Result<Vec<_>, FormatError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut positional = vec![None; n];
        for &(w, p) in self
            .positional
            .as_ref()
            .ok_or_else(|| missing("positional"))?
        {
            *positional
                .get_mut(w)
                .ok_or_else(|| FormatError::Json(format!("positional for unknown word {w}")))? =
                Some(p);
        }
        Ok(DependencyStructure {
            tree: self.to_tree(),
            features: self.tokens.iter().map(|t| t.features.clone()).collect(),
            domains: OrderDomainStructure {
                domains,
                top,
                assoc,
            },
            positional,
        })
    }
}

pub fn structure_to_json(ds: &DependencyStructure) -> String {
    serde_json::to_string(&JsonStructure::from(ds)).expect("structure serializes")
}

pub fn structure_from_json(text: &str) -> Result<DependencyStructure, FormatError> {
    let j: JsonStructure =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    j.to_structure()
}

pub fn tree_to_json(tree: &DependencyTree) -> String {
    serde_json::to_string(&JsonStructure::from(tree)).expect("tree serializes")
}

pub fn tree_from_json(text: &str) -> Result<DependencyTree, FormatError> {
    let j: JsonStructure =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    Ok(j.to_tree())
}
