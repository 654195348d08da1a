//! Dependency trees, order domains and the dependency structures linking them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Flat attribute → atomic value map of a single word.
pub type Features = BTreeMap<String, String>;

/// Per-word feature maps, indexed by word.
pub type FeatureMap = Vec<Features>;

/// Dependency type of the edge from the implicit sentence root to the root word.
pub const ROOT_DTYPE: &str = "propo";

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WordToken {
    pub index: usize,
    pub form: String,
    /// Ordinal of the selected entry among the lexicon entries for `form`.
    pub entry: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DependencyEdge {
    pub head: usize,
    pub dependent: usize,
    pub dtype: String,
}

/// A typed dependency tree with its word-class assignment.
///
/// The tree is not required to be projective. Well-formedness is checked by
/// [`crate::validate::validate_tree`], not by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DependencyTree {
    pub words: Vec<WordToken>,
    pub root: usize,
    pub edges: Vec<DependencyEdge>,
    pub classes: Vec<String>,
}

impl DependencyTree {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Incoming edge of every word. Only meaningful for single-headed trees;
    /// with several incoming edges the last one wins.
    pub fn incoming(&self) -> Vec<Option<&DependencyEdge>> {
        let mut inc = vec![None; self.words.len()];
        for e in &self.edges {
            if let Some(slot) = inc.get_mut(e.dependent) {
                *slot = Some(e);
            }
        }
        inc
    }

    pub fn heads(&self) -> Vec<Option<usize>> {
        self.incoming()
            .into_iter()
            .map(|e| e.map(|e| e.head))
            .collect()
    }

    /// Sorts edges by dependent so that equal trees compare equal.
    pub fn canonicalize(&mut self) {
        self.edges
            .sort_by(|a, b| (a.dependent, a.head, &a.dtype).cmp(&(b.dependent, b.head, &b.dtype)));
    }

    /// Re-indexes the words so that `order[i]` (an old index) becomes word `i`.
    pub fn permuted(&self, order: &[usize]) -> DependencyTree {
        let mut new_index = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let words = order
            .iter()
            .enumerate()
            .map(|(new, &old)| WordToken {
                index: new,
                form: self.words[old].form.clone(),
                entry: self.words[old].entry,
            })
            .collect();
        let classes = order.iter().map(|&old| self.classes[old].clone()).collect();
        let mut tree = DependencyTree {
            words,
            root: new_index[self.root],
            edges: self
                .edges
                .iter()
                .map(|e| DependencyEdge {
                    head: new_index[e.head],
                    dependent: new_index[e.dependent],
                    dtype: e.dtype.clone(),
                })
                .collect(),
            classes,
        };
        tree.canonicalize();
        tree
    }

    pub fn surface(&self) -> String {
        let mut words: Vec<&WordToken> = self.words.iter().collect();
        words.sort_by_key(|w| w.index);
        words
            .iter()
            .map(|w| w.form.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Opaque identifier of an order domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DomainId(pub u32);

impl fmt::Display for DomainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderDomain {
    pub id: DomainId,
    /// Sorted word indices.
    pub members: Vec<usize>,
}

impl OrderDomain {
    pub fn new(id: DomainId, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        OrderDomain { id, members }
    }

    pub fn contains(&self, w: usize) -> bool {
        self.members.binary_search(&w).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn is_continuous(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) => b - a + 1 == self.members.len(),
            _ => true,
        }
    }
}

/// A realized domain together with the template slot it fills.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SlotDomain {
    pub slot: usize,
    pub domain: DomainId,
}

/// The set of realized (non-empty) order domains plus the association of
/// every word with its domain sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderDomainStructure {
    pub domains: Vec<OrderDomain>,
    /// Domain introduced by the implicit sentence root.
    pub top: DomainId,
    /// Per word, its realized domains in template order.
    pub assoc: Vec<Vec<SlotDomain>>,
}

impl OrderDomainStructure {
    pub fn domain(&self, id: DomainId) -> Option<&OrderDomain> {
        self.domains.iter().find(|d| d.id == id)
    }
}

/// A dependency tree linked to features and an order domain structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DependencyStructure {
    pub tree: DependencyTree,
    pub features: FeatureMap,
    pub domains: OrderDomainStructure,
    /// Positional head of every word; `None` for the root word.
    pub positional: Vec<Option<usize>>,
}

/// Number of template slots and the slot holding the word itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TemplateShape {
    pub len: usize,
    pub self_slot: usize,
}

/// Where a non-root word is inserted: a slot of its positional head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub positional: usize,
    pub slot: usize,
}

impl DependencyStructure {
    /// Builds the domain structure implied by a placement of every non-root
    /// word into a template slot of its positional head.
    ///
    /// Domain contents follow from the placement alone; whether the result
    /// is continuous and otherwise well-formed is left to the validator.
    /// Domain ids are canonical: the top domain is `d0`, then the realized
    /// slots of each word in index order.
    pub fn assemble(
        mut tree: DependencyTree,
        features: FeatureMap,
        shapes: &[TemplateShape],
        placements: &[Option<Placement>],
    ) -> DependencyStructure {
        let n = tree.words.len();
        let mut inserted: Vec<Vec<Vec<usize>>> =
            shapes.iter().map(|s| vec![Vec::new(); s.len]).collect();
        for (x, p) in placements.iter().enumerate() {
            if let Some(p) = p {
                if let Some(slot) = inserted
                    .get_mut(p.positional)
                    .and_then(|s| s.get_mut(p.slot))
                {
                    slot.push(x);
                }
            }
        }

        #[derive(Clone, Copy, PartialEq)]
        enum State {
            Todo,
            Busy,
            Done,
        }
        struct Ctx<'a> {
            shapes: &'a [TemplateShape],
            inserted: &'a [Vec<Vec<usize>>],
            contents: Vec<Vec<Vec<usize>>>,
            state: Vec<State>,
        }
        fn fill(ctx: &mut Ctx<'_>, w: usize) {
            if ctx.state[w] != State::Todo {
                return;
            }
            ctx.state[w] = State::Busy;
            let shape = ctx.shapes[w];
            let mut slots = vec![Vec::new(); shape.len];
            for (k, slot) in slots.iter_mut().enumerate() {
                if k == shape.self_slot {
                    slot.push(w);
                }
                for &x in &ctx.inserted[w][k] {
                    fill(ctx, x);
                    if ctx.state[x] == State::Done {
                        slot.extend(ctx.contents[x].iter().flatten().copied());
                    }
                }
                slot.sort_unstable();
            }
            ctx.contents[w] = slots;
            ctx.state[w] = State::Done;
        }

        let mut ctx = Ctx {
            shapes,
            inserted: &inserted,
            contents: vec![Vec::new(); n],
            state: vec![State::Todo; n],
        };
        for w in 0..n {
            fill(&mut ctx, w);
        }

        let mut top_members: Vec<usize> = if tree.root < n {
            ctx.contents[tree.root].iter().flatten().copied().collect()
        } else {
            Vec::new()
        };
        top_members.sort_unstable();
        let mut domains = vec![OrderDomain {
            id: DomainId(0),
            members: top_members,
        }];
        let mut assoc = Vec::with_capacity(n);
        let mut next = 1u32;
        for w in 0..n {
            let mut seq = Vec::new();
            for (k, members) in ctx.contents[w].iter().enumerate() {
                if members.is_empty() {
                    continue;
                }
                let id = DomainId(next);
                next += 1;
                domains.push(OrderDomain {
                    id,
                    members: members.clone(),
                });
                seq.push(SlotDomain {
                    slot: k,
                    domain: id,
                });
            }
            assoc.push(seq);
        }

        tree.canonicalize();
        DependencyStructure {
            tree,
            features,
            domains: OrderDomainStructure {
                domains,
                top: DomainId(0),
                assoc,
            },
            positional: placements.iter().map(|p| p.map(|p| p.positional)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    pub fn surface(&self) -> String {
        self.tree.surface()
    }

    /// Renumbers domains canonically (top first, then by associated word and
    /// slot) and sorts edges. Equal structures have equal canonical forms.
    pub fn canonicalize(&mut self) {
        self.tree.canonicalize();
        let mut remap = BTreeMap::new();
        remap.insert(self.domains.top, DomainId(0));
        let mut next = 1u32;
        for seq in &self.domains.assoc {
            for sd in seq {
                remap.entry(sd.domain).or_insert_with(|| {
                    let id = DomainId(next);
                    next += 1;
                    id
                });
            }
        }
        for d in &self.domains.domains {
            remap.entry(d.id).or_insert_with(|| {
                let id = DomainId(next);
                next += 1;
                id
            });
        }
        let map = |id: DomainId| remap.get(&id).copied().unwrap_or(id);
        self.domains.top = map(self.domains.top);
        for seq in &mut self.domains.assoc {
            for sd in seq.iter_mut() {
                sd.domain = map(sd.domain);
            }
        }
        for d in &mut self.domains.domains {
            d.id = map(d.id);
        }
        self.domains.domains.sort_by_key(|d| d.id);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceOrderError {
    #[error("domain {0} is not continuous in the word order")]
    Discontinuous(DomainId),
    #[error("word {word}: domain {earlier} must precede domain {later}")]
    Inconsistent {
        word: usize,
        earlier: DomainId,
        later: DomainId,
    },
    #[error("word {word}: its domains are interrupted by other words")]
    Interleaved { word: usize },
    #[error("domain {0} is referenced but not defined")]
    UnknownDomain(DomainId),
    #[error("domain {domain} contains word {word}, but there are only {len} words")]
    OutOfRange {
        domain: DomainId,
        word: usize,
        len: usize,
    },
}

/// Returns the words in surface order after checking that the stored word
/// indices agree with the order imposed by domain nesting and by the domain
/// sequences of every word.
pub fn surface_order(ds: &DependencyStructure) -> Result<Vec<usize>, SurfaceOrderError> {
    let n = ds.len();
    for d in &ds.domains.domains {
        if let Some(&w) = d.members.iter().find(|&&w| w >= n) {
            return Err(SurfaceOrderError::OutOfRange {
                domain: d.id,
                word: w,
                len: n,
            });
        }
        if !d.is_continuous() {
            return Err(SurfaceOrderError::Discontinuous(d.id));
        }
    }
    for (w, seq) in ds.domains.assoc.iter().enumerate() {
        let mut resolved = Vec::with_capacity(seq.len());
        for sd in seq {
            let d = ds
                .domains
                .domain(sd.domain)
                .ok_or(SurfaceOrderError::UnknownDomain(sd.domain))?;
            resolved.push(d);
        }
        for pair in resolved.windows(2) {
            if let (Some(a), Some(b)) = (pair[0].last(), pair[1].first()) {
                if a >= b {
                    return Err(SurfaceOrderError::Inconsistent {
                        word: w,
                        earlier: pair[0].id,
                        later: pair[1].id,
                    });
                }
            }
        }
        let total: usize = resolved.iter().map(|d| d.members.len()).sum();
        if let (Some(a), Some(b)) = (
            resolved.iter().filter_map(|d| d.first()).min(),
            resolved.iter().filter_map(|d| d.last()).max(),
        ) {
            if b - a + 1 != total {
                return Err(SurfaceOrderError::Interleaved { word: w });
            }
        }
    }
    let mut order: Vec<usize> = ds.tree.words.iter().map(|w| w.index).collect();
    order.sort_unstable();
    Ok(order)
}
