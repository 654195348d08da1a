//! Brute-force enumeration used as ground truth for the engine.
//!
//! Nothing here is clever. Candidates are generated from plain products
//! (entry choices, head functions, labels, positional heads, slots, word
//! orders) and kept exactly when the validator accepts them. Cheap validator
//! components run first only to save time; anything they reject the full
//! validator would reject as well.

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::lexicon::{LexicalEntry, Lexicon};
use crate::serialize::render_structure;
use crate::structure::{
    DependencyEdge, DependencyStructure, DependencyTree, Placement, TemplateShape, WordToken,
    ROOT_DTYPE,
};
use crate::validate::{
    tree_heads, validate_domain_structure, validate_structure, validate_tree, validate_valency,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Enumerate {
    /// Report accepted word orders only.
    Permutations,
    /// Report every accepted structure.
    #[default]
    Structures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_tokens: usize,
    pub enumerate: Enumerate,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_tokens: 7,
            enumerate: Enumerate::Structures,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{tokens} tokens exceed the oracle limit of {max}")]
    TokenLimit { tokens: usize, max: usize },
    #[error("max-tokens must be at least 1")]
    ZeroLimit,
}

fn check_size(n: usize, config: &OracleConfig) -> Result<(), OracleError> {
    if config.max_tokens == 0 {
        return Err(OracleError::ZeroLimit);
    }
    if n > config.max_tokens {
        return Err(OracleError::TokenLimit {
            tokens: n,
            max: config.max_tokens,
        });
    }
    Ok(())
}

/// Every head function over `n` words (`n` standing for the implicit root)
/// that forms a rooted tree.
fn head_functions(n: usize) -> Vec<(usize, Vec<Option<usize>>)> {
    let mut out = Vec::new();
    for choice in (0..n).map(|_| 0..=n).multi_cartesian_product() {
        let roots: Vec<usize> = (0..n).filter(|&w| choice[w] == n).collect();
        if roots.len() != 1 {
            continue;
        }
        let root = roots[0];
        let probe = DependencyTree {
            words: (0..n)
                .map(|i| WordToken {
                    index: i,
                    form: String::new(),
                    entry: 0,
                })
                .collect(),
            root,
            edges: (0..n)
                .filter(|&w| w != root)
                .map(|w| DependencyEdge {
                    head: choice[w],
                    dependent: w,
                    dtype: ROOT_DTYPE.to_string(),
                })
                .collect(),
            classes: vec![String::new(); n],
        };
        if let Some(heads) = tree_heads(&probe) {
            out.push((root, heads));
        }
    }
    out
}

fn ancestors(heads: &[Option<usize>], x: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = heads[x];
    while let Some(h) = cur {
        out.push(h);
        cur = heads[h];
    }
    out
}

/// Calls `f` with every structure over `tree` obtained by choosing a
/// positional head among the transitive heads and a template slot for each
/// non-root word, provided the structure validates.
fn realizations(
    tree: &DependencyTree,
    lex: &Lexicon,
    f: &mut dyn FnMut(DependencyStructure) -> bool,
) {
    let n = tree.len();
    let Some(heads) = tree_heads(tree) else {
        return;
    };
    let Some(entries): Option<Vec<&LexicalEntry>> = tree
        .words
        .iter()
        .map(|w| lex.entry(&w.form, w.entry))
        .collect()
    else {
        return;
    };
    let shapes: Vec<TemplateShape> = entries.iter().map(|e| e.template.shape()).collect();
    let features: Vec<_> = entries.iter().map(|e| e.features.clone()).collect();
    let choices: Vec<Vec<Option<Placement>>> = (0..n)
        .map(|x| {
            if x == tree.root {
                return vec![None];
            }
            ancestors(&heads, x)
                .into_iter()
                .flat_map(|p| {
                    (0..shapes[p].len).map(move |slot| {
                        Some(Placement {
                            positional: p,
                            slot,
                        })
                    })
                })
                .collect()
        })
        .collect();
    for placements in choices.into_iter().multi_cartesian_product() {
        let ds =
            DependencyStructure::assemble(tree.clone(), features.clone(), &shapes, &placements);
        if !validate_domain_structure(&ds.domains, n).is_valid() {
            continue;
        }
        if validate_structure(&ds, lex).is_valid() && !f(ds) {
            return;
        }
    }
}

/// All valid dependency structures whose surface is `tokens`.
pub fn oracle_parse<S: AsRef<str>>(
    tokens: &[S],
    lex: &Lexicon,
    config: &OracleConfig,
) -> Result<Vec<DependencyStructure>, OracleError> {
    let n = tokens.len();
    check_size(n, config)?;
    let mut found: BTreeMap<String, DependencyStructure> = BTreeMap::new();
    if n == 0 {
        return Ok(Vec::new());
    }
    let forms: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
    let shapes = head_functions(n);
    let entry_choices = forms
        .iter()
        .map(|f| 0..lex.entries_for(f).len())
        .multi_cartesian_product();
    for ords in entry_choices {
        let entries: Vec<&LexicalEntry> = forms
            .iter()
            .zip(&ords)
            .map(|(f, &o)| &lex.entries_for(f)[o])
            .collect();
        for (root, heads) in &shapes {
            let dependents: Vec<usize> = (0..n).filter(|w| w != root).collect();
            let labels = dependents
                .iter()
                .map(|&d| {
                    let h = heads[d].expect("non-root word has a head");
                    entries[h]
                        .valency
                        .iter()
                        .map(|s| s.dtype.clone())
                        .collect::<Vec<_>>()
                })
                .multi_cartesian_product();
            for labelling in labels {
                let mut tree = DependencyTree {
                    words: (0..n)
                        .map(|i| WordToken {
                            index: i,
                            form: forms[i].to_string(),
                            entry: ords[i],
                        })
                        .collect(),
                    root: *root,
                    edges: dependents
                        .iter()
                        .zip(labelling)
                        .map(|(&d, dtype)| DependencyEdge {
                            head: heads[d].expect("non-root word has a head"),
                            dependent: d,
                            dtype,
                        })
                        .collect(),
                    classes: entries.iter().map(|e| e.class.clone()).collect(),
                };
                tree.canonicalize();
                if !validate_tree(&tree, lex.inventory()).is_valid()
                    || !validate_valency(&tree, lex).is_valid()
                {
                    continue;
                }
                realizations(&tree, lex, &mut |mut ds| {
                    ds.canonicalize();
                    found.insert(render_structure(&ds), ds);
                    true
                });
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Every (surface, structure) pair over some order of the words of `tree`.
/// Sorted by surface, then by serialized structure.
pub fn oracle_realizations(
    tree: &DependencyTree,
    lex: &Lexicon,
    config: &OracleConfig,
) -> Result<Vec<(String, DependencyStructure)>, OracleError> {
    let n = tree.len();
    check_size(n, config)?;
    let mut found: BTreeMap<(String, String), DependencyStructure> = BTreeMap::new();
    for order in (0..n).permutations(n) {
        let t = tree.permuted(&order);
        realizations(&t, lex, &mut |mut ds| {
            ds.canonicalize();
            found.insert((ds.surface(), render_structure(&ds)), ds);
            true
        });
    }
    Ok(found.into_iter().map(|((s, _), ds)| (s, ds)).collect())
}

/// The surface strings of all word orders of `tree` that admit at least one
/// valid structure, sorted.
pub fn oracle_orders(
    tree: &DependencyTree,
    lex: &Lexicon,
    config: &OracleConfig,
) -> Result<Vec<String>, OracleError> {
    let n = tree.len();
    check_size(n, config)?;
    let mut found = Vec::new();
    for order in (0..n).permutations(n) {
        let t = tree.permuted(&order);
        let mut accepted = false;
        realizations(&t, lex, &mut |_| {
            accepted = true;
            false
        });
        if accepted {
            found.push(t.surface());
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}
