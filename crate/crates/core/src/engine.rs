//! Parsing and generation by exhaustive search with exact pruning.
//!
//! Both directions share one layered search. Trees are built top-down from
//! the root slot, every dependent then picks a positional head among its
//! transitive heads and a slot in that head's template, and the resulting
//! domain structure is validated. Generation additionally linearizes each
//! placement domain by domain.
//!
//! Pruning only removes candidates that the validator would reject, so the
//! result sets with and without it are identical. [`EngineConfig::prune`]
//! switches it off for differential testing.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::constraints::{check_cardinality, Direction, PrecedencePredicate};
use crate::lexicon::{LexicalEntry, Lexicon, ValencySlot};
use crate::report::ValidationReport;
use crate::serialize::render_structure;
use crate::structure::{
    DependencyEdge, DependencyStructure, DependencyTree, Features, Placement, TemplateShape,
    WordToken,
};
use crate::validate::{
    tree_heads, validate_structure, validate_tree, validate_valency, StructureView,
};

pub const DEFAULT_MAX_CANDIDATES: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub prune: bool,
    /// Upper bound on trees, placements and orders explored.
    pub max_candidates: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            prune: true,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("empty input")]
    EmptyInput,
    #[error("unknown token \"{token}\" at position {position}")]
    UnknownToken { position: usize, token: String },
    #[error("word {word} (\"{form}\") is bound to entry #{entry}, which does not exist")]
    UnboundToken {
        word: usize,
        form: String,
        entry: usize,
    },
    #[error("word {word} has class {class}, but its entry has class {expected}")]
    InconsistentClass {
        word: usize,
        class: String,
        expected: String,
    },
    #[error("invalid tree:\n{0}")]
    InvalidTree(ValidationReport),
    #[error("resource limit of {limit} candidates exceeded")]
    ResourceExceeded { limit: u64 },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub trees: u64,
    pub placements: u64,
    pub orders: u64,
    /// Candidates handed to the full validator.
    pub validated: u64,
    /// Validated candidates that failed.
    pub rejected: u64,
}

#[derive(Clone, Debug, Default)]
pub struct ParseResult {
    pub structures: Vec<DependencyStructure>,
    /// When nothing parses: the violations of the closest candidate.
    pub diagnostics: Vec<String>,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, Default)]
pub struct GenerationResult {
    /// Sorted by surface string, then by serialized structure.
    pub pairs: Vec<(String, DependencyStructure)>,
    pub stats: SearchStats,
}

impl GenerationResult {
    pub fn orders(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.pairs.iter().map(|(s, _)| s.as_str()).collect();
        v.dedup();
        v
    }
}

pub fn parse<S: AsRef<str>>(tokens: &[S], lex: &Lexicon) -> Result<ParseResult, EngineError> {
    Engine::new(lex).parse(tokens)
}

pub fn generate(tree: &DependencyTree, lex: &Lexicon) -> Result<GenerationResult, EngineError> {
    Engine::new(lex).generate(tree)
}

pub struct Engine<'l> {
    lex: &'l Lexicon,
    config: EngineConfig,
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn spend(&mut self) -> Result<(), EngineError> {
        self.used += 1;
        if self.used > self.limit {
            Err(EngineError::ResourceExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// A tree with its entries resolved, as seen by placement enumeration.
struct Frame<'l> {
    tree: DependencyTree,
    heads: Vec<Option<usize>>,
    dtypes: Vec<Option<String>>,
    entries: Vec<&'l LexicalEntry>,
}

impl<'l> Frame<'l> {
    fn new(tree: DependencyTree, entries: Vec<&'l LexicalEntry>) -> Self {
        let n = tree.len();
        let mut heads = vec![None; n];
        let mut dtypes = vec![None; n];
        for e in &tree.edges {
            heads[e.dependent] = Some(e.head);
            dtypes[e.dependent] = Some(e.dtype.clone());
        }
        Frame {
            tree,
            heads,
            dtypes,
            entries,
        }
    }

    fn shapes(&self) -> Vec<TemplateShape> {
        self.entries.iter().map(|e| e.template.shape()).collect()
    }

    fn features(&self) -> Vec<Features> {
        self.entries.iter().map(|e| e.features.clone()).collect()
    }

    fn slot_of(&self, x: usize) -> Option<&'l ValencySlot> {
        let h = self.heads[x]?;
        self.entries[h].slot(self.dtypes[x].as_deref()?)
    }

    /// Positional heads and slots available to the non-root word `x`. With
    /// `ordered`, word indices are surface positions and slot choices that
    /// contradict them are dropped.
    fn options(&self, x: usize, prune: bool, ordered: bool) -> Vec<Placement> {
        let mut out = Vec::new();
        let slot = self.slot_of(x);
        let mut p = self.heads[x];
        while let Some(ph) = p {
            let entry = self.entries[ph];
            let t = &entry.template;
            for k in 0..t.slots.len() {
                if prune && !self.slot_admits(x, ph, k, ordered) {
                    continue;
                }
                out.push(Placement {
                    positional: ph,
                    slot: k,
                });
            }
            if prune {
                let crossed = self.dtypes[ph].as_deref();
                let allowed = match (slot, crossed) {
                    (Some(s), Some(d)) => s.extraction.contains(d),
                    _ => false,
                };
                if !allowed {
                    break;
                }
            }
            p = self.heads[ph];
        }
        out
    }

    fn slot_admits(&self, x: usize, p: usize, k: usize, ordered: bool) -> bool {
        let entry = self.entries[p];
        let t = &entry.template;
        let feats = &self.entries[x].features;
        for req in t.features.iter().filter(|r| r.slot == k) {
            if !req.required.iter().all(|(a, v)| feats.get(a) == Some(v)) {
                return false;
            }
        }
        if !ordered {
            return true;
        }
        if k < t.self_slot {
            return x < p;
        }
        if k > t.self_slot {
            return x > p;
        }
        entry.predicates.iter().all(|pred| match pred {
            PrecedencePredicate::SelfVsAll {
                direction: Direction::Precedes,
            } => x > p,
            PrecedencePredicate::SelfVsAll {
                direction: Direction::Follows,
            } => x < p,
            PrecedencePredicate::LabeledPair { .. } => true,
        })
    }
}

fn all_continuous(ds: &DependencyStructure) -> bool {
    ds.domains.domains.iter().all(|d| d.is_continuous())
}

type PlacementVisitor<'a, E> = dyn FnMut(&[Option<Placement>]) -> Result<(), E> + 'a;

/// Calls `f` on every element of the Cartesian product of `options`.
fn for_each_combination<E>(
    options: &[Vec<Placement>],
    current: &mut Vec<Option<Placement>>,
    words: &[usize],
    f: &mut PlacementVisitor<'_, E>,
) -> Result<(), E> {
    let Some((&x, rest)) = words.split_first() else {
        return f(current);
    };
    for &pl in &options[x] {
        current[x] = Some(pl);
        for_each_combination(options, current, rest, f)?;
    }
    current[x] = None;
    Ok(())
}

struct TreeSearch<'a, 'l> {
    forms: &'a [String],
    cands: Vec<&'l [LexicalEntry]>,
    head: Vec<Option<(usize, usize)>>,
    entry: Vec<Option<usize>>,
    queue: Vec<usize>,
    found: Vec<(Vec<usize>, DependencyTree)>,
    budget: &'a mut Budget,
}

impl<'a, 'l> TreeSearch<'a, 'l> {
    fn entry_of(&self, w: usize) -> &'l LexicalEntry {
        &self.cands[w][self.entry[w].expect("attached word has an entry")]
    }

    fn step(&mut self, qpos: usize, si: usize) -> Result<(), EngineError> {
        let n = self.forms.len();
        if qpos == self.queue.len() {
            if self.queue.len() == n {
                self.emit()?;
            }
            return Ok(());
        }
        let w = self.queue[qpos];
        let entry = self.entry_of(w);
        let Some(slot) = entry.valency.get(si) else {
            return self.step(qpos + 1, 0);
        };
        if !slot.required {
            self.step(qpos, si + 1)?;
        }
        for d in 0..n {
            if self.entry[d].is_some() {
                continue;
            }
            for (ord, de) in self.cands[d].iter().enumerate() {
                if !slot.admits(&de.class, &de.features) {
                    continue;
                }
                self.entry[d] = Some(ord);
                self.head[d] = Some((w, si));
                self.queue.push(d);
                self.step(qpos, si + 1)?;
                self.queue.pop();
                self.head[d] = None;
                self.entry[d] = None;
            }
        }
        Ok(())
    }

    fn emit(&mut self) -> Result<(), EngineError> {
        self.budget.spend()?;
        let n = self.forms.len();
        let root = self.queue[0];
        let entries: Vec<usize> = (0..n).map(|w| self.entry[w].unwrap_or(0)).collect();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        for (d, h) in self.head.iter().enumerate() {
            if let Some((h, si)) = *h {
                edges.push(DependencyEdge {
                    head: h,
                    dependent: d,
                    dtype: self.entry_of(h).valency[si].dtype.clone(),
                });
            }
        }
        let mut tree = DependencyTree {
            words: (0..n)
                .map(|i| WordToken {
                    index: i,
                    form: self.forms[i].clone(),
                    entry: entries[i],
                })
                .collect(),
            root,
            edges,
            classes: (0..n).map(|w| self.entry_of(w).class.clone()).collect(),
        };
        tree.canonicalize();
        self.found.push((entries, tree));
        Ok(())
    }
}

enum Unit {
    Bare,
    Block(usize),
}

impl<'l> Engine<'l> {
    pub fn new(lex: &'l Lexicon) -> Self {
        Engine {
            lex,
            config: EngineConfig::default(),
        }
    }

    pub fn with_config(lex: &'l Lexicon, config: EngineConfig) -> Self {
        Engine { lex, config }
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    fn budget(&self) -> Budget {
        Budget {
            used: 0,
            limit: self.config.max_candidates,
        }
    }

    /// All dependency trees over `forms` licensed by the valency frames,
    /// with the entry ordinal chosen for every word.
    fn trees(
        &self,
        forms: &[String],
        budget: &mut Budget,
    ) -> Result<Vec<(Vec<usize>, DependencyTree)>, EngineError> {
        let n = forms.len();
        let cands: Vec<&[LexicalEntry]> = forms.iter().map(|f| self.lex.entries_for(f)).collect();
        let Some(root) = self.lex.root() else {
            return Ok(Vec::new());
        };
        let mut search = TreeSearch {
            forms,
            cands,
            head: vec![None; n],
            entry: vec![None; n],
            queue: Vec::with_capacity(n),
            found: Vec::new(),
            budget,
        };
        for r in 0..n {
            for ord in 0..search.cands[r].len() {
                let e = &search.cands[r][ord];
                if !root.slot.admits(&e.class, &e.features) {
                    continue;
                }
                search.entry[r] = Some(ord);
                search.queue.push(r);
                search.step(0, 0)?;
                search.queue.pop();
                search.entry[r] = None;
            }
        }
        Ok(search.found)
    }

    pub fn parse<S: AsRef<str>>(&self, tokens: &[S]) -> Result<ParseResult, EngineError> {
        if tokens.is_empty() {
            return Err(EngineError::EmptyInput);
        }
        let forms: Vec<String> = tokens.iter().map(|t| t.as_ref().to_string()).collect();
        for (i, f) in forms.iter().enumerate() {
            if self.lex.entries_for(f).is_empty() {
                return Err(EngineError::UnknownToken {
                    position: i,
                    token: f.clone(),
                });
            }
        }
        let mut budget = self.budget();
        let mut result = ParseResult::default();
        let trees = self.trees(&forms, &mut budget)?;
        result.stats.trees = trees.len() as u64;
        let mut found: BTreeMap<String, DependencyStructure> = BTreeMap::new();
        let mut best: Option<ValidationReport> = None;
        let mut unplaceable: Option<String> = None;
        let prune = self.config.prune;

        for (ords, tree) in trees {
            let entries: Vec<&LexicalEntry> = ords
                .iter()
                .zip(&forms)
                .map(|(&o, f)| &self.lex.entries_for(f)[o])
                .collect();
            let frame = Frame::new(tree, entries);
            let n = frame.tree.len();
            let options: Vec<Vec<Placement>> = (0..n)
                .map(|x| {
                    if x == frame.tree.root {
                        Vec::new()
                    } else {
                        frame.options(x, prune, true)
                    }
                })
                .collect();
            if let Some(x) = (0..n).find(|&x| x != frame.tree.root && options[x].is_empty()) {
                if best.is_none() && unplaceable.is_none() {
                    unplaceable = Some(format!(
                        "word {x} \"{}\" fits no slot of its transitive heads in this order",
                        forms[x]
                    ));
                }
                continue;
            }
            let shapes = frame.shapes();
            let features = frame.features();
            let words: Vec<usize> = (0..n).filter(|&x| x != frame.tree.root).collect();
            let mut current = vec![None; n];
            let mut visit = |placements: &[Option<Placement>]| -> Result<(), EngineError> {
                budget.spend()?;
                result.stats.placements += 1;
                let ds = DependencyStructure::assemble(
                    frame.tree.clone(),
                    features.clone(),
                    &shapes,
                    placements,
                );
                if prune && !all_continuous(&ds) && best.is_some() {
                    return Ok(());
                }
                result.stats.validated += 1;
                let report = validate_structure(&ds, self.lex);
                if report.is_valid() {
                    found.insert(render_structure(&ds), ds);
                } else {
                    result.stats.rejected += 1;
                    if best.as_ref().is_none_or(|b| report.len() < b.len()) {
                        best = Some(report);
                    }
                }
                Ok(())
            };
            for_each_combination(&options, &mut current, &words, &mut visit)?;
        }

        result.structures = found.into_values().collect();
        if result.structures.is_empty() {
            result.diagnostics = match best {
                Some(report) => report.violations().iter().map(|v| v.to_string()).collect(),
                None if result.stats.trees == 0 => vec![
                    "no dependency tree over the tokens satisfies the valency of the lexicon"
                        .into(),
                ],
                None => vec![unplaceable.unwrap_or_else(|| {
                    "no word can be placed in the domains of its transitive heads".into()
                })],
            };
        }
        Ok(result)
    }

    fn bind(&self, tree: &DependencyTree) -> Result<Vec<&'l LexicalEntry>, EngineError> {
        let mut entries = Vec::with_capacity(tree.len());
        for (i, w) in tree.words.iter().enumerate() {
            let e = self
                .lex
                .entry(&w.form, w.entry)
                .ok_or_else(|| EngineError::UnboundToken {
                    word: i,
                    form: w.form.clone(),
                    entry: w.entry,
                })?;
            let class = tree.classes.get(i).cloned().unwrap_or_default();
            if class != e.class {
                return Err(EngineError::InconsistentClass {
                    word: i,
                    class,
                    expected: e.class.clone(),
                });
            }
            entries.push(e);
        }
        Ok(entries)
    }

    pub fn generate(&self, tree: &DependencyTree) -> Result<GenerationResult, EngineError> {
        if tree.is_empty() {
            return Err(EngineError::EmptyInput);
        }
        let entries = self.bind(tree)?;
        let mut report = validate_tree(tree, self.lex.inventory());
        report.extend(validate_valency(tree, self.lex));
        if !report.is_valid() || tree_heads(tree).is_none() {
            return Err(EngineError::InvalidTree(report));
        }
        let mut tree = tree.clone();
        tree.canonicalize();
        let frame = Frame::new(tree, entries);
        let n = frame.tree.len();
        let prune = self.config.prune;
        let root = frame.tree.root;
        let options: Vec<Vec<Placement>> = (0..n)
            .map(|x| {
                if x == root {
                    Vec::new()
                } else {
                    frame.options(x, prune, false)
                }
            })
            .collect();
        let shapes = frame.shapes();
        let features = frame.features();
        let words: Vec<usize> = (0..n).filter(|&x| x != root).collect();

        let mut budget = self.budget();
        let mut stats = SearchStats {
            trees: 1,
            ..SearchStats::default()
        };
        let mut found: BTreeMap<(String, String), DependencyStructure> = BTreeMap::new();
        let mut current = vec![None; n];
        let mut visit = |placements: &[Option<Placement>]| -> Result<(), EngineError> {
            budget.spend()?;
            stats.placements += 1;
            let base = DependencyStructure::assemble(
                frame.tree.clone(),
                features.clone(),
                &shapes,
                placements,
            );
            if prune && !self.cardinality_holds(&base) {
                return Ok(());
            }
            let mut inserted: Vec<Vec<Vec<usize>>> =
                shapes.iter().map(|s| vec![Vec::new(); s.len]).collect();
            for (x, p) in placements.iter().enumerate() {
                if let Some(p) = p {
                    inserted[p.positional][p.slot].push(x);
                }
            }
            for order in self.linearize(&frame, &inserted, root, prune) {
                budget.spend()?;
                stats.orders += 1;
                let mut new_index = vec![0; n];
                for (new, &old) in order.iter().enumerate() {
                    new_index[old] = new;
                }
                let permuted = frame.tree.permuted(&order);
                let feats: Vec<Features> = order.iter().map(|&o| features[o].clone()).collect();
                let sh: Vec<TemplateShape> = order.iter().map(|&o| shapes[o]).collect();
                let pl: Vec<Option<Placement>> = order
                    .iter()
                    .map(|&o| {
                        placements[o].map(|p| Placement {
                            positional: new_index[p.positional],
                            slot: p.slot,
                        })
                    })
                    .collect();
                let ds = DependencyStructure::assemble(permuted, feats, &sh, &pl);
                stats.validated += 1;
                if validate_structure(&ds, self.lex).is_valid() {
                    let surface = ds.surface();
                    found.insert((surface, render_structure(&ds)), ds);
                } else {
                    stats.rejected += 1;
                }
            }
            Ok(())
        };
        for_each_combination(&options, &mut current, &words, &mut visit)?;
        Ok(GenerationResult {
            pairs: found.into_iter().map(|((s, _), ds)| (s, ds)).collect(),
            stats,
        })
    }

    /// Cardinality depends only on which words share a domain, not on their
    /// order, so it can be checked before linearization.
    fn cardinality_holds(&self, ds: &DependencyStructure) -> bool {
        let view = StructureView::new(ds, self.lex);
        (0..ds.len()).all(|w| {
            view.entry(w).is_none_or(|e| {
                e.template
                    .cardinality
                    .iter()
                    .all(|c| check_cardinality(c, w, &view).is_ok_and(|r| r.is_valid()))
            })
        })
    }

    /// Every order of the block of `w`: its realized domains in template
    /// order, each a permutation of its units.
    fn linearize(
        &self,
        frame: &Frame<'_>,
        inserted: &[Vec<Vec<usize>>],
        w: usize,
        prune: bool,
    ) -> Vec<Vec<usize>> {
        let t = &frame.entries[w].template;
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for k in 0..t.slots.len() {
            let mut units: Vec<(Unit, Vec<Vec<usize>>)> = Vec::new();
            if k == t.self_slot {
                units.push((Unit::Bare, vec![vec![w]]));
            }
            for &x in &inserted[w][k] {
                units.push((Unit::Block(x), self.linearize(frame, inserted, x, prune)));
            }
            if units.is_empty() {
                continue;
            }
            let mut domain_orders: Vec<Vec<usize>> = Vec::new();
            for perm in (0..units.len()).permutations(units.len()) {
                if prune && !self.units_ordered(frame, w, k, &units, &perm) {
                    continue;
                }
                let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
                for &u in &perm {
                    partial = partial
                        .iter()
                        .flat_map(|pre| {
                            units[u].1.iter().map(move |o| {
                                let mut v = pre.clone();
                                v.extend_from_slice(o);
                                v
                            })
                        })
                        .collect();
                }
                domain_orders.extend(partial);
            }
            acc = acc
                .iter()
                .flat_map(|pre| {
                    domain_orders.iter().map(move |o| {
                        let mut v = pre.clone();
                        v.extend_from_slice(o);
                        v
                    })
                })
                .collect();
        }
        acc
    }

    /// Precedence predicates of `w` evaluated on whole units of one domain.
    fn units_ordered(
        &self,
        frame: &Frame<'_>,
        w: usize,
        k: usize,
        units: &[(Unit, Vec<Vec<usize>>)],
        perm: &[usize],
    ) -> bool {
        let entry = frame.entries[w];
        let label = |u: usize| match units[u].0 {
            Unit::Bare => None,
            Unit::Block(x) => frame.dtypes[x].as_deref(),
        };
        for pred in &entry.predicates {
            match pred {
                PrecedencePredicate::SelfVsAll { direction } => {
                    if k != entry.template.self_slot || perm.len() < 2 {
                        continue;
                    }
                    let bare = match direction {
                        Direction::Precedes => perm[0],
                        Direction::Follows => perm[perm.len() - 1],
                    };
                    if !matches!(units[bare].0, Unit::Bare) {
                        return false;
                    }
                }
                PrecedencePredicate::LabeledPair {
                    direction,
                    left,
                    right,
                } => {
                    for (i, &u) in perm.iter().enumerate() {
                        for (j, &v) in perm.iter().enumerate() {
                            if i == j {
                                continue;
                            }
                            let (Some(lu), Some(lv)) = (label(u), label(v)) else {
                                continue;
                            };
                            if !left.contains(lu) || !right.contains(lv) {
                                continue;
                            }
                            let ok = match direction {
                                Direction::Precedes => i < j,
                                Direction::Follows => i > j,
                            };
                            if !ok {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    fn toks(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }

    #[test]
    fn fronted_object_has_one_parse() {
        let lex = reference::german();
        let r = parse(&toks("den Mann hat der Junge gesehen"), &lex).unwrap();
        assert_eq!(r.structures.len(), 1);
        let ds = &r.structures[0];
        assert_eq!(ds.positional[1], Some(2));
        assert_eq!(ds.tree.heads()[1], Some(5));
    }

    #[test]
    fn scrambled_order_fails_with_diagnostics() {
        let lex = reference::german();
        let r = parse(&toks("gesehen der hat Junge Mann den"), &lex).unwrap();
        assert!(r.structures.is_empty());
        assert!(!r.diagnostics.is_empty());
    }

    #[test]
    fn unknown_token_is_named() {
        let lex = reference::german();
        let err = parse(&toks("der Hase hat"), &lex).unwrap_err();
        assert_eq!(
            err,
            EngineError::UnknownToken {
                position: 1,
                token: "Hase".into()
            }
        );
        assert_eq!(
            parse::<&str>(&[], &lex).unwrap_err(),
            EngineError::EmptyInput
        );
    }

    #[test]
    fn generation_without_pruning_agrees() {
        let lex = reference::german();
        let tree = parse(&toks("der Junge hat den Mann gesehen"), &lex)
            .unwrap()
            .structures[0]
            .tree
            .clone();
        let pruned = generate(&tree, &lex).unwrap();
        let naive = Engine::with_config(
            &lex,
            EngineConfig {
                prune: false,
                ..EngineConfig::default()
            },
        )
        .generate(&tree)
        .unwrap();
        assert_eq!(pruned.pairs, naive.pairs);
        assert_eq!(pruned.stats.rejected, 0);
        assert!(naive.stats.orders > pruned.stats.orders);
    }

    #[test]
    fn resource_cap_is_reported() {
        let lex = reference::german();
        let engine = Engine::with_config(
            &lex,
            EngineConfig {
                prune: true,
                max_candidates: 2,
            },
        );
        assert_eq!(
            engine
                .parse(&toks("den Mann hat der Junge gesehen"))
                .unwrap_err(),
            EngineError::ResourceExceeded { limit: 2 }
        );
    }

    #[test]
    fn unbound_and_inconsistent_tokens() {
        let lex = reference::german();
        let mut tree = parse(&toks("der Junge hat den Mann gesehen"), &lex)
            .unwrap()
            .structures[0]
            .tree
            .clone();
        tree.classes[2] = "N".into();
        assert!(matches!(
            generate(&tree, &lex),
            Err(EngineError::InconsistentClass { word: 2, .. })
        ));
        tree.words[2].entry = 4;
        assert!(matches!(
            generate(&tree, &lex),
            Err(EngineError::UnboundToken {
                word: 2,
                entry: 4,
                ..
            })
        ));
    }
}
