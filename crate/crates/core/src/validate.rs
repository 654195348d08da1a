//! Well-formedness of trees, domain structures and dependency structures.

use std::collections::BTreeMap;

use crate::constraints::{
    check_cardinality, check_domain_features, check_extraction, check_precedence,
};
use crate::lexicon::{Inventory, LexicalEntry, Lexicon};
use crate::report::{Condition, ValidationReport};
use crate::structure::{
    DependencyStructure, DependencyTree, DomainId, Features, OrderDomain, OrderDomainStructure,
    SlotDomain,
};

/// Heads of a well-formed rooted tree, or `None` if the edges do not form
/// one. Does not look at inventories.
pub(crate) fn tree_heads(tree: &DependencyTree) -> Option<Vec<Option<usize>>> {
    let n = tree.words.len();
    if n == 0 || tree.root >= n {
        return None;
    }
    if tree.words.iter().enumerate().any(|(i, w)| w.index != i) {
        return None;
    }
    let mut heads = vec![None; n];
    for e in &tree.edges {
        if e.head >= n || e.dependent >= n || e.head == e.dependent {
            return None;
        }
        if heads[e.dependent].replace(e.head).is_some() {
            return None;
        }
    }
    if heads[tree.root].is_some() {
        return None;
    }
    for w in 0..n {
        let mut cur = w;
        let mut steps = 0;
        while cur != tree.root {
            cur = heads[cur]?;
            steps += 1;
            if steps > n {
                return None;
            }
        }
    }
    Some(heads)
}

/// Checks that the edges form a single rooted tree over the words and that
/// every word has a declared class. Non-projective trees are fine.
pub fn validate_tree(tree: &DependencyTree, inventory: &Inventory) -> ValidationReport {
    let mut r = ValidationReport::new();
    let n = tree.words.len();
    if n == 0 {
        r.push(Condition::TokenIndex, vec![], "the tree has no words");
        return r;
    }
    for (i, w) in tree.words.iter().enumerate() {
        if w.index != i {
            r.push(
                Condition::TokenIndex,
                vec![i],
                format!("word at position {i} carries index {}", w.index),
            );
        }
    }
    if tree.root >= n {
        r.push(
            Condition::WordRange,
            vec![tree.root],
            "root index out of range",
        );
    }
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in &tree.edges {
        if e.head >= n || e.dependent >= n {
            r.push(
                Condition::WordRange,
                vec![e.head, e.dependent],
                format!(
                    "edge {} -{}-> {} leaves the word range",
                    e.head, e.dtype, e.dependent
                ),
            );
            continue;
        }
        if e.head == e.dependent {
            r.push(
                Condition::Acyclic,
                vec![e.head],
                format!("word {} heads itself", e.head),
            );
            continue;
        }
        if !inventory.has_dtype(&e.dtype) {
            r.push(
                Condition::Inventory,
                vec![e.head, e.dependent],
                format!("undeclared dependency type `{}`", e.dtype),
            );
        }
        incoming[e.dependent].push(e.head);
    }
    for (w, heads) in incoming.iter().enumerate() {
        if w == tree.root && !heads.is_empty() {
            r.push(
                Condition::Root,
                vec![w],
                format!("root word {w} has a head"),
            );
        } else if heads.len() > 1 {
            r.push(
                Condition::SingleHead,
                vec![w],
                format!("word {w} has {} heads", heads.len()),
            );
        }
    }
    // Walk upwards along the first incoming edge of every word.
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        let mut path = vec![start];
        let mut cur = start;
        loop {
            match incoming[cur].first() {
                None => {
                    if cur != tree.root {
                        if cur == start {
                            r.push(
                                Condition::Connected,
                                vec![start],
                                format!("word {start} has no head and is not the root"),
                            );
                        } else {
                            r.push(
                                Condition::Connected,
                                vec![start],
                                format!("word {start} is not reachable from the root"),
                            );
                        }
                    }
                    break;
                }
                Some(&h) => {
                    if let Some(pos) = path.iter().position(|&p| p == h) {
                        let mut cycle = path[pos..].to_vec();
                        cycle.sort_unstable();
                        if !cycles.contains(&cycle) {
                            r.push(
                                Condition::Acyclic,
                                cycle.clone(),
                                format!("the head relation cycles through {cycle:?}"),
                            );
                            cycles.push(cycle);
                        }
                        break;
                    }
                    path.push(h);
                    cur = h;
                }
            }
        }
    }
    if tree.classes.len() != n {
        r.push(
            Condition::WordClass,
            vec![],
            format!("{} class assignments for {n} words", tree.classes.len()),
        );
    }
    for (w, c) in tree.classes.iter().enumerate() {
        if !inventory.has_class(c) {
            r.push(
                Condition::Inventory,
                vec![w],
                format!("undeclared word class `{c}`"),
            );
        }
    }
    r
}

/// Checks tokens against their lexical entries and every edge against the
/// valency frame of its head, including the implicit root's slot.
pub fn validate_valency(tree: &DependencyTree, lex: &Lexicon) -> ValidationReport {
    let mut r = ValidationReport::new();
    let n = tree.words.len();
    let entries: Vec<Option<&LexicalEntry>> = tree
        .words
        .iter()
        .map(|w| lex.entry(&w.form, w.entry))
        .collect();
    for (w, e) in entries.iter().enumerate() {
        match e {
            None => r.push(
                Condition::Entry,
                vec![w],
                format!(
                    "no entry #{} for form \"{}\"",
                    tree.words[w].entry, tree.words[w].form
                ),
            ),
            Some(e) => {
                if tree.classes.get(w) != Some(&e.class) {
                    r.push(
                        Condition::WordClass,
                        vec![w],
                        format!("word {w} must have class {}", e.class),
                    );
                }
            }
        }
    }
    if tree.root < n {
        match lex.root() {
            None => r.push(
                Condition::Valency,
                vec![tree.root],
                "the lexicon has no root entry",
            ),
            Some(root) => {
                if let Some(e) = entries[tree.root] {
                    if !root.slot.admits(&e.class, &e.features) {
                        r.push(
                            Condition::Valency,
                            vec![tree.root],
                            format!("word {} cannot be the sentence root", tree.root),
                        );
                    }
                }
            }
        }
    }
    let mut filled: BTreeMap<(usize, &str), usize> = BTreeMap::new();
    for e in &tree.edges {
        if e.head >= n || e.dependent >= n {
            continue;
        }
        let (Some(he), Some(de)) = (entries[e.head], entries[e.dependent]) else {
            continue;
        };
        let count = filled.entry((e.head, e.dtype.as_str())).or_default();
        *count += 1;
        if *count == 2 {
            r.push(
                Condition::Valency,
                vec![e.head],
                format!("word {} fills its `{}` slot twice", e.head, e.dtype),
            );
        }
        match he.slot(&e.dtype) {
            None => r.push(
                Condition::Valency,
                vec![e.head, e.dependent],
                format!("word {} has no `{}` slot", e.head, e.dtype),
            ),
            Some(slot) => {
                if !slot.admits(&de.class, &de.features) {
                    r.push(
                        Condition::Valency,
                        vec![e.head, e.dependent],
                        format!(
                            "word {} does not satisfy the `{}` slot of word {}",
                            e.dependent, e.dtype, e.head
                        ),
                    );
                }
            }
        }
    }
    for (w, e) in entries.iter().enumerate() {
        let Some(e) = e else { continue };
        for s in e.valency.iter().filter(|s| s.required) {
            if !filled.contains_key(&(w, s.dtype.as_str())) {
                r.push(
                    Condition::Valency,
                    vec![w],
                    format!("required `{}` slot of word {w} is empty", s.dtype),
                );
            }
        }
    }
    r
}

/// Checks contiguity of every domain, nesting of every pair of domains and
/// that the top domain covers all `n_words` words.
pub fn validate_domain_structure(ods: &OrderDomainStructure, n_words: usize) -> ValidationReport {
    let mut r = ValidationReport::new();
    for (i, d) in ods.domains.iter().enumerate() {
        if ods.domains[..i].iter().any(|o| o.id == d.id) {
            r.push(
                Condition::Template,
                vec![],
                format!("domain {} defined twice", d.id),
            );
        }
        if d.members.windows(2).any(|w| w[0] >= w[1]) {
            r.push(
                Condition::Template,
                vec![],
                format!("members of {} are not sorted and distinct", d.id),
            );
        }
        if d.members.is_empty() {
            r.push(
                Condition::Template,
                vec![],
                format!("domain {} is empty", d.id),
            );
        }
        if let Some(&w) = d.members.iter().find(|&&w| w >= n_words) {
            r.push(
                Condition::WordRange,
                vec![w],
                format!("domain {} contains word {w} of {n_words}", d.id),
            );
        }
        if !d.is_continuous() {
            r.push(
                Condition::Contiguity,
                d.members.clone(),
                format!("domain {} is not continuous", d.id),
            );
        }
    }
    for (i, a) in ods.domains.iter().enumerate() {
        for b in &ods.domains[i + 1..] {
            if !nested_or_disjoint(a, b) {
                r.push(
                    Condition::Hierarchy,
                    vec![],
                    format!("domains {} and {} overlap without nesting", a.id, b.id),
                );
            }
        }
    }
    match ods.domain(ods.top) {
        None => r.push(
            Condition::TopDomain,
            vec![],
            format!("top domain {} is not defined", ods.top),
        ),
        Some(top) => {
            if top.members.len() != n_words || !top.members.iter().enumerate().all(|(i, &w)| i == w)
            {
                r.push(
                    Condition::TopDomain,
                    vec![],
                    format!("top domain {} does not contain all {n_words} words", top.id),
                );
            }
        }
    }
    r
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn nested_or_disjoint(a: &OrderDomain, b: &OrderDomain) -> bool {
    subset(&a.members, &b.members)
        || subset(&b.members, &a.members)
        || !a.members.iter().any(|x| b.contains(*x))
}

/// An immediate member of a domain: a bare word or a maximal sub-domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Member {
    /// The word itself, or the word introducing the sub-domain.
    pub head: usize,
    /// First and last word index covered by the member.
    pub span: (usize, usize),
    pub domain: Option<DomainId>,
}

/// Derived indices over a dependency structure, shared by the constraint
/// checks. Tolerates malformed input; queries then return partial answers.
pub struct StructureView<'a> {
    ds: &'a DependencyStructure,
    lex: &'a Lexicon,
    heads: Option<Vec<Option<usize>>>,
    in_dtype: Vec<Option<&'a str>>,
    entries: Vec<Option<&'a LexicalEntry>>,
    domain_pos: BTreeMap<DomainId, usize>,
    owner: BTreeMap<DomainId, usize>,
    /// Words inserted into each domain: those whose positional head
    /// associates the domain and which it contains. The root word is
    /// inserted into the top domain.
    inserted: BTreeMap<DomainId, Vec<usize>>,
}

impl<'a> StructureView<'a> {
    pub fn new(ds: &'a DependencyStructure, lex: &'a Lexicon) -> Self {
        let tree = &ds.tree;
        let n = tree.words.len();
        let heads = tree_heads(tree);
        let mut in_dtype = vec![None; n];
        for e in &tree.edges {
            if e.dependent < n {
                in_dtype[e.dependent] = Some(e.dtype.as_str());
            }
        }
        let entries = tree
            .words
            .iter()
            .map(|w| lex.entry(&w.form, w.entry))
            .collect();
        let domain_pos: BTreeMap<DomainId, usize> = ds
            .domains
            .domains
            .iter()
            .enumerate()
            .map(|(i, d)| (d.id, i))
            .collect();
        let mut owner = BTreeMap::new();
        for (w, seq) in ds.domains.assoc.iter().enumerate() {
            for sd in seq {
                owner.entry(sd.domain).or_insert(w);
            }
        }
        let mut view = StructureView {
            ds,
            lex,
            heads,
            in_dtype,
            entries,
            domain_pos,
            owner,
            inserted: BTreeMap::new(),
        };
        let mut inserted: BTreeMap<DomainId, Vec<usize>> = BTreeMap::new();
        if tree.root < n {
            inserted.entry(ds.domains.top).or_default().push(tree.root);
        }
        for x in 0..n {
            let Some(p) = view.positional(x) else {
                continue;
            };
            for sd in view.assoc(p) {
                if view.domain(sd.domain).is_some_and(|d| d.contains(x)) {
                    inserted.entry(sd.domain).or_default().push(x);
                }
            }
        }
        view.inserted = inserted;
        view
    }

    pub fn structure(&self) -> &'a DependencyStructure {
        self.ds
    }

    pub fn lexicon(&self) -> &'a Lexicon {
        self.lex
    }

    pub fn len(&self) -> usize {
        self.ds.tree.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the edges form a rooted tree.
    pub fn tree_ok(&self) -> bool {
        self.heads.is_some()
    }

    pub fn head(&self, w: usize) -> Option<usize> {
        self.heads.as_ref()?.get(w).copied().flatten()
    }

    pub fn incoming_dtype(&self, w: usize) -> Option<&'a str> {
        self.in_dtype.get(w).copied().flatten()
    }

    pub fn positional(&self, w: usize) -> Option<usize> {
        self.ds.positional.get(w).copied().flatten()
    }

    pub fn entry(&self, w: usize) -> Option<&'a LexicalEntry> {
        self.entries.get(w).copied().flatten()
    }

    pub fn features(&self, w: usize) -> Option<&'a Features> {
        self.ds.features.get(w)
    }

    pub fn assoc(&self, w: usize) -> &'a [SlotDomain] {
        self.ds.domains.assoc.get(w).map_or(&[], Vec::as_slice)
    }

    pub fn domain(&self, id: DomainId) -> Option<&'a OrderDomain> {
        self.domain_pos
            .get(&id)
            .map(|&i| &self.ds.domains.domains[i])
    }

    /// The word whose domain sequence contains `id`.
    pub fn owner(&self, id: DomainId) -> Option<usize> {
        self.owner.get(&id).copied()
    }

    /// Whether `a` is a proper transitive head of `w`.
    pub fn is_transitive_head(&self, a: usize, w: usize) -> bool {
        let Some(heads) = &self.heads else {
            return false;
        };
        let mut cur = w;
        while let Some(h) = heads.get(cur).copied().flatten() {
            if h == a {
                return true;
            }
            cur = h;
        }
        false
    }

    /// The domain of a word's own sequence that contains the word.
    pub fn own_domain(&self, w: usize) -> Option<DomainId> {
        self.assoc(w)
            .iter()
            .find(|sd| self.domain(sd.domain).is_some_and(|d| d.contains(w)))
            .map(|sd| sd.domain)
    }

    pub fn inserted_into(&self, id: DomainId) -> &[usize] {
        self.inserted.get(&id).map_or(&[], Vec::as_slice)
    }

    /// Immediate members of a domain, ordered by position.
    pub fn immediate_members(&self, id: DomainId) -> Vec<Member> {
        let mut out = Vec::new();
        let Some(d) = self.domain(id) else { return out };
        if let Some(p) = self.owner(id) {
            if d.contains(p) {
                out.push(Member {
                    head: p,
                    span: (p, p),
                    domain: None,
                });
            }
        }
        for &x in self.inserted_into(id) {
            for sd in self.assoc(x) {
                if let Some(sub) = self.domain(sd.domain) {
                    if let (Some(a), Some(b)) = (sub.first(), sub.last()) {
                        out.push(Member {
                            head: x,
                            span: (a, b),
                            domain: Some(sd.domain),
                        });
                    }
                }
            }
        }
        out.sort_by_key(|m| m.span);
        out
    }
}

/// Full well-formedness of a dependency structure: tree and domain
/// structure, the four domain conditions, positional-head linking, and every lexical
/// constraint of the selected entries.
pub fn validate_structure(ds: &DependencyStructure, lex: &Lexicon) -> ValidationReport {
    let n = ds.tree.words.len();
    let mut r = validate_tree(&ds.tree, lex.inventory());
    r.extend(validate_valency(&ds.tree, lex));
    r.extend(validate_domain_structure(&ds.domains, n));
    let view = StructureView::new(ds, lex);

    if ds.features.len() != n {
        r.push(
            Condition::Entry,
            vec![],
            format!("{} feature maps for {n} words", ds.features.len()),
        );
    }
    for (w, f) in ds.features.iter().enumerate().take(n) {
        if let Some(e) = view.entry(w) {
            if *f != e.features {
                r.push(
                    Condition::Entry,
                    vec![w],
                    format!("features of word {w} differ from its entry"),
                );
            }
        }
        for (a, v) in f {
            if !lex.inventory().has_value(a, v) {
                r.push(
                    Condition::Inventory,
                    vec![w],
                    format!("undeclared feature {a}={v}"),
                );
            }
        }
    }

    let domains_ok = check_assoc(&view, &mut r);
    check_conditions(&view, &mut r);
    let positional_ok = check_positional(&view, &mut r);
    let linking_ok = domains_ok && positional_ok && check_linking(&view, &mut r);
    if linking_ok {
        check_lexical(&view, &mut r);
    }
    r
}

/// Association map sanity: dangling ids, slot ordinals, ownership.
fn check_assoc(view: &StructureView<'_>, r: &mut ValidationReport) -> bool {
    let ds = view.structure();
    let n = view.len();
    let mut ok = true;
    if ds.domains.assoc.len() != n {
        r.push(
            Condition::Template,
            vec![],
            format!("{} domain sequences for {n} words", ds.domains.assoc.len()),
        );
        ok = false;
    }
    let mut uses: BTreeMap<DomainId, usize> = BTreeMap::new();
    for (w, seq) in ds.domains.assoc.iter().enumerate() {
        for sd in seq {
            *uses.entry(sd.domain).or_default() += 1;
            if view.domain(sd.domain).is_none() {
                r.push(
                    Condition::Template,
                    vec![w],
                    format!("word {w} refers to undefined {}", sd.domain),
                );
                ok = false;
            }
        }
        if seq.windows(2).any(|p| p[0].slot >= p[1].slot) {
            r.push(
                Condition::Template,
                vec![w],
                format!("template slots of word {w} are not strictly increasing"),
            );
            ok = false;
        }
        if let Some(e) = view.entry(w) {
            let t = &e.template;
            if seq.iter().any(|sd| sd.slot >= t.slots.len()) {
                r.push(
                    Condition::Template,
                    vec![w],
                    format!(
                        "word {w} uses a slot beyond its {}-slot template",
                        t.slots.len()
                    ),
                );
                ok = false;
            }
            let own = seq.iter().find(|sd| sd.slot == t.self_slot);
            if !own.is_some_and(|sd| view.domain(sd.domain).is_some_and(|d| d.contains(w))) {
                r.push(
                    Condition::Template,
                    vec![w],
                    format!(
                        "word {w} is not in the domain of its self slot `{}`",
                        t.slots[t.self_slot]
                    ),
                );
            }
        }
    }
    if uses.contains_key(&ds.domains.top) {
        r.push(
            Condition::Linking,
            vec![],
            format!("top domain {} is associated with a word", ds.domains.top),
        );
        ok = false;
    }
    for d in &ds.domains.domains {
        if d.id == ds.domains.top {
            continue;
        }
        match uses.get(&d.id).copied().unwrap_or(0) {
            1 => {}
            0 => {
                r.push(
                    Condition::Linking,
                    vec![],
                    format!("domain {} belongs to no word", d.id),
                );
                ok = false;
            }
            k => {
                r.push(
                    Condition::Linking,
                    vec![],
                    format!("domain {} is associated {k} times", d.id),
                );
                ok = false;
            }
        }
    }
    ok
}

/// Own domain, disjointness, head domain and sequence order.
fn check_conditions(view: &StructureView<'_>, r: &mut ValidationReport) {
    let ds = view.structure();
    let n = view.len();
    for w in 0..n {
        let seq: Vec<&OrderDomain> = view
            .assoc(w)
            .iter()
            .filter_map(|sd| view.domain(sd.domain))
            .collect();
        let own = seq.iter().filter(|d| d.contains(w)).count();
        if own != 1 {
            r.push(
                Condition::OwnDomain,
                vec![w],
                format!("word {w} is contained in {own} of its own domains"),
            );
        }
        for (i, a) in seq.iter().enumerate() {
            for b in &seq[i + 1..] {
                if a.members.iter().any(|x| b.contains(*x)) {
                    r.push(
                        Condition::Disjoint,
                        vec![w],
                        format!(
                            "domains {} and {} of word {w} are not pairwise disjoint",
                            a.id, b.id
                        ),
                    );
                }
            }
        }
        let mut ordered = true;
        for pair in seq.windows(2) {
            if let (Some(a), Some(b)) = (pair[0].last(), pair[1].first()) {
                if a >= b {
                    ordered = false;
                    r.push(
                        Condition::SequenceOrder,
                        vec![w],
                        format!(
                            "domain {} of word {w} is not consistent with the precedence of {}",
                            pair[1].id, pair[0].id
                        ),
                    );
                }
            }
        }
        if ordered && seq.len() > 1 {
            let lo = seq.iter().filter_map(|d| d.first()).min();
            let hi = seq.iter().filter_map(|d| d.last()).max();
            let total: usize = seq.iter().map(|d| d.members.len()).sum();
            if let (Some(lo), Some(hi)) = (lo, hi) {
                if hi - lo + 1 != total {
                    r.push(
                        Condition::SequenceOrder,
                        vec![w],
                        format!("the domains of word {w} are interrupted by other words"),
                    );
                }
            }
        }
    }
    if !view.tree_ok() {
        return;
    }
    let top = ds.domains.domain(ds.domains.top);
    for w in 0..n {
        let containing: Vec<DomainId> = ds
            .domains
            .domains
            .iter()
            .filter(|d| d.contains(w))
            .map(|d| d.id)
            .collect();
        let via_head = containing.iter().any(|&id| {
            if top.is_some_and(|t| t.id == id) {
                return true;
            }
            view.owner(id)
                .is_some_and(|o| o != w && view.is_transitive_head(o, w))
        });
        if containing.len() < 2 || !via_head {
            r.push(
                Condition::HeadDomain,
                vec![w],
                format!(
                    "word {w} is contained in {} domains, {} of a transitive head",
                    containing.len(),
                    if via_head { "one" } else { "none" }
                ),
            );
        }
    }
}

fn check_positional(view: &StructureView<'_>, r: &mut ValidationReport) -> bool {
    let ds = view.structure();
    let n = view.len();
    if ds.positional.len() != n {
        r.push(
            Condition::Positional,
            vec![],
            format!("{} positional entries for {n} words", ds.positional.len()),
        );
        return false;
    }
    if !view.tree_ok() {
        return false;
    }
    let mut ok = true;
    for (w, p) in ds.positional.iter().enumerate() {
        match (w == ds.tree.root, p) {
            (true, None) => {}
            (true, Some(p)) => {
                r.push(
                    Condition::Positional,
                    vec![w, *p],
                    format!("the root word {w} cannot have a positional head"),
                );
                ok = false;
            }
            (false, None) => {
                r.push(
                    Condition::Positional,
                    vec![w],
                    format!("word {w} lacks a positional head"),
                );
                ok = false;
            }
            (false, Some(p)) => {
                if !view.is_transitive_head(*p, w) {
                    r.push(
                        Condition::Positional,
                        vec![w, *p],
                        format!("positional head {p} of word {w} is not a transitive head"),
                    );
                    ok = false;
                }
            }
        }
    }
    ok
}

/// Every domain contains exactly its introducer (for the self slot) and the
/// domains of the words inserted into it.
fn check_linking(view: &StructureView<'_>, r: &mut ValidationReport) -> bool {
    let ds = view.structure();
    let n = view.len();
    let mut ok = true;
    for x in 0..n {
        if x == ds.tree.root {
            continue;
        }
        let Some(p) = view.positional(x) else {
            continue;
        };
        let hits = view
            .assoc(p)
            .iter()
            .filter(|sd| view.domain(sd.domain).is_some_and(|d| d.contains(x)))
            .count();
        if hits != 1 {
            r.push(
                Condition::Linking,
                vec![x, p],
                format!("word {x} lies in {hits} domains of its positional head {p}"),
            );
            ok = false;
        }
    }
    let union_of = |w: usize| -> Vec<usize> {
        view.assoc(w)
            .iter()
            .filter_map(|sd| view.domain(sd.domain))
            .flat_map(|d| d.members.iter().copied())
            .collect()
    };
    for d in &ds.domains.domains {
        let mut expected = Vec::new();
        if let Some(p) = view.owner(d.id) {
            let is_self = view.entry(p).map_or(d.contains(p), |e| {
                view.assoc(p)
                    .iter()
                    .any(|sd| sd.domain == d.id && sd.slot == e.template.self_slot)
            });
            if is_self {
                expected.push(p);
            }
        }
        for &x in view.inserted_into(d.id) {
            expected.extend(union_of(x));
        }
        expected.sort_unstable();
        expected.dedup();
        if expected != d.members {
            r.push(
                Condition::Linking,
                d.members.clone(),
                format!(
                    "domain {} holds {:?}, but its introducer and insertions account for {:?}",
                    d.id, d.members, expected
                ),
            );
            ok = false;
        }
    }
    ok
}

fn check_lexical(view: &StructureView<'_>, r: &mut ValidationReport) {
    let n = view.len();
    for x in 0..n {
        let (Some(h), Some(dtype)) = (view.head(x), view.incoming_dtype(x)) else {
            continue;
        };
        let Some(slot) = view.entry(h).and_then(|e| e.slot(dtype)) else {
            continue;
        };
        match check_extraction(slot, x, view) {
            Ok(rep) => r.extend(rep),
            Err(e) => r.push(Condition::Extraction, vec![x], e.to_string()),
        }
    }
    for w in 0..n {
        let Some(e) = view.entry(w) else { continue };
        for c in &e.template.cardinality {
            match check_cardinality(c, w, view) {
                Ok(rep) => r.extend(rep),
                Err(err) => r.push(Condition::Cardinality, vec![w], err.to_string()),
            }
        }
        for req in &e.template.features {
            r.extend(check_domain_features(req, w, view));
        }
        for p in &e.predicates {
            match check_precedence(p, w, view) {
                Ok(rep) => r.extend(rep),
                Err(err) => r.push(Condition::Precedence, vec![w], err.to_string()),
            }
        }
    }
}
