//! Lexicon file format.
//!
//! ```text
//! # comment
//! dtypes: subj obj vpart det propo
//! classes: Vfin Vpart N Det
//! attr case: nom acc dat gen
//!
//! root {
//!   slot propo: class=Vfin required extract {};
//! }
//!
//! entry "hat" class=Vfin {
//!   feat num=sg;                                    # features of the word
//!   slot subj: class=N feat case=nom required extract {};
//!   slot vpart: class=Vpart required;
//!   domains [vf mf nf] self=mf;
//!   card vf = 1;                                    # also `<= 1`, `>= 1`
//!   feat nf extra=yes;                              # requirement on a domain
//!   order self < * in mf;                           # or `self > *`
//!   order <vpart> after <subj,obj>;                 # or `before`
//!   extract subj {vpart};                           # overrides a slot's set
//! }
//! ```
//!
//! Declarations (`dtypes`, `classes`, `attr`) occupy one line each and must
//! precede their first use. Inside blocks, statements end with `;` and may
//! span lines. Slots default to `optional`, `class=any` and an empty
//! extraction set.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    check_entry, check_features, check_slot, Attribute, ClassRequirement, DomainTemplate,
    Inventory, LexicalEntry, Lexicon, LexiconError, RootEntry, ValencySlot,
};
use crate::constraints::{
    CardinalityConstraint, Direction, DomainFeatureRequirement, ExtractionPathSet,
    PrecedencePredicate,
};
use crate::structure::{Features, ROOT_DTYPE};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Str(String),
    Punct(char),
    Le,
    Ge,
    Newline,
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

const PUNCT: &[char] = &[':', ';', '{', '}', '[', ']', '<', '>', '=', ',', '*'];

fn lex(source: &str) -> Result<Vec<Token>, LexiconError> {
    let mut out = Vec::new();
    for (li, line) in source.lines().enumerate() {
        let line_no = li + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let push = |out: &mut Vec<Token>, tok| {
                out.push(Token {
                    tok,
                    line: line_no,
                    column,
                })
            };
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c == '"' {
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => {
                            return Err(LexiconError::Syntax {
                                line: line_no,
                                column,
                                message: "unterminated string".into(),
                            })
                        }
                        Some('"') => {
                            i += 1;
                            break;
                        }
                        Some('\\') => {
                            match chars.get(i + 1) {
                                Some(&e) => s.push(e),
                                None => {
                                    return Err(LexiconError::Syntax {
                                        line: line_no,
                                        column: i + 1,
                                        message: "dangling escape".into(),
                                    })
                                }
                            }
                            i += 2;
                        }
                        Some(&ch) => {
                            s.push(ch);
                            i += 1;
                        }
                    }
                }
                push(&mut out, Tok::Str(s));
            } else if c == '<' && chars.get(i + 1) == Some(&'=') {
                push(&mut out, Tok::Le);
                i += 2;
            } else if c == '>' && chars.get(i + 1) == Some(&'=') {
                push(&mut out, Tok::Ge);
                i += 2;
            } else if PUNCT.contains(&c) {
                push(&mut out, Tok::Punct(c));
                i += 1;
            } else {
                let start = i;
                while i < chars.len()
                    && !chars[i].is_whitespace()
                    && !PUNCT.contains(&chars[i])
                    && chars[i] != '"'
                    && chars[i] != '#'
                {
                    i += 1;
                }
                push(&mut out, Tok::Ident(chars[start..i].iter().collect()));
            }
        }
        out.push(Token {
            tok: Tok::Newline,
            line: line_no,
            column: chars.len() + 1,
        });
    }
    let last = out.last().map_or(1, |t| t.line + 1);
    out.push(Token {
        tok: Tok::Eof,
        line: last,
        column: 1,
    });
    Ok(out)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Str(s) => format!("\"{s}\""),
        Tok::Punct(c) => format!("`{c}`"),
        Tok::Le => "`<=`".into(),
        Tok::Ge => "`>=`".into(),
        Tok::Newline => "end of line".into(),
        Tok::Eof => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    /// Whether newlines are insignificant (inside blocks).
    in_block: bool,
    inv: Inventory,
}

type PResult<T> = Result<T, LexiconError>;

/// Raw statements of an entry block whose slot names resolve once the
/// `domains` statement is known.
#[derive(Default)]
struct PendingEntry {
    features: Features,
    valency: Vec<ValencySlot>,
    domains: Option<(Vec<String>, String, usize)>,
    cards: Vec<(String, usize, usize, Option<usize>)>,
    domain_feats: Vec<(String, usize, Features)>,
    self_orders: Vec<(Option<String>, usize, Direction)>,
    predicates: Vec<PrecedencePredicate>,
    extracts: Vec<(String, usize, ExtractionPathSet)>,
}

impl Parser {
    fn peek_raw(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn skip_newlines(&mut self) {
        while self.toks[self.pos].tok == Tok::Newline {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> &Token {
        if self.in_block {
            self.skip_newlines();
        }
        &self.toks[self.pos]
    }

    fn peek_at(&mut self, k: usize) -> &Tok {
        if self.in_block {
            self.skip_newlines();
        }
        let mut i = self.pos;
        let mut seen = 0;
        loop {
            let t = &self.toks[i].tok;
            if *t == Tok::Eof {
                return &self.toks[i].tok;
            }
            if !(self.in_block && *t == Tok::Newline) {
                if seen == k {
                    return &self.toks[i].tok;
                }
                seen += 1;
            }
            i += 1;
        }
    }

    fn next(&mut self) -> Token {
        self.peek();
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, t: &Token, message: impl Into<String>) -> PResult<T> {
        Err(LexiconError::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        })
    }

    fn expect_punct(&mut self, c: char) -> PResult<Token> {
        let t = self.next();
        if t.tok == Tok::Punct(c) {
            Ok(t)
        } else {
            self.error(&t, format!("expected `{c}`, found {}", describe(&t.tok)))
        }
    }

    fn ident(&mut self) -> PResult<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            other => self.error(&t, format!("expected a symbol, found {}", describe(other))),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<Token> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == kw => Ok(t),
            other => self.error(&t, format!("expected `{kw}`, found {}", describe(other))),
        }
    }

    fn at_ident(&mut self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn at_punct(&mut self, c: char) -> bool {
        self.peek().tok == Tok::Punct(c)
    }

    fn parse(mut self) -> PResult<Lexicon> {
        let mut root = None;
        let mut entries: BTreeMap<String, Vec<LexicalEntry>> = BTreeMap::new();
        let mut declared = BTreeSet::new();
        loop {
            self.skip_newlines();
            let t = self.peek_raw().clone();
            let Tok::Ident(kw) = &t.tok else {
                if t.tok == Tok::Eof {
                    break;
                }
                return self.error(
                    &t,
                    format!("expected a declaration, found {}", describe(&t.tok)),
                );
            };
            match kw.as_str() {
                "dtypes" | "classes" => {
                    self.next();
                    self.expect_punct(':')?;
                    let items = self.symbol_line()?;
                    let target = if kw == "dtypes" {
                        &mut self.inv.dtypes
                    } else {
                        &mut self.inv.classes
                    };
                    for (s, tok) in items {
                        if target.contains(&s) {
                            return Err(LexiconError::Invalid {
                                line: tok.line,
                                message: format!("`{s}` declared twice"),
                            });
                        }
                        target.push(s);
                    }
                }
                "attr" => {
                    self.next();
                    let (name, tok) = self.ident()?;
                    self.expect_punct(':')?;
                    let items = self.symbol_line()?;
                    if !declared.insert(name.clone()) {
                        return Err(LexiconError::Invalid {
                            line: tok.line,
                            message: format!("attribute `{name}` declared twice"),
                        });
                    }
                    let mut values: Vec<String> = Vec::new();
                    for (v, vt) in items {
                        if values.contains(&v) {
                            return Err(LexiconError::Invalid {
                                line: vt.line,
                                message: format!("value `{v}` declared twice"),
                            });
                        }
                        values.push(v);
                    }
                    self.inv.attributes.push(Attribute { name, values });
                }
                "root" => {
                    self.next();
                    if root.is_some() {
                        return Err(LexiconError::Invalid {
                            line: t.line,
                            message: "more than one root block".into(),
                        });
                    }
                    root = Some(self.root_block(&t)?);
                }
                "entry" => {
                    self.next();
                    let e = self.entry_block()?;
                    entries.entry(e.form.clone()).or_default().push(e);
                }
                other => {
                    return self.error(&t, format!("unknown declaration `{other}`"));
                }
            }
        }
        Ok(Lexicon::from_parts(self.inv, root, entries))
    }

    /// Symbols up to the end of the current line.
    fn symbol_line(&mut self) -> PResult<Vec<(String, Token)>> {
        let mut out = Vec::new();
        loop {
            let t = self.next();
            match &t.tok {
                Tok::Ident(s) => out.push((s.clone(), t.clone())),
                Tok::Newline | Tok::Eof => return Ok(out),
                other => {
                    return self.error(&t, format!("expected a symbol, found {}", describe(other)))
                }
            }
        }
    }

    fn root_block(&mut self, start: &Token) -> PResult<RootEntry> {
        self.expect_punct('{')?;
        self.in_block = true;
        let mut slot: Option<ValencySlot> = None;
        while !self.at_punct('}') {
            let t = self.keyword("slot")?;
            let s = self.slot_stmt()?;
            check_slot(&self.inv, &s, t.line)?;
            if s.dtype != ROOT_DTYPE {
                return Err(LexiconError::Invalid {
                    line: t.line,
                    message: format!("the root slot must have type `{ROOT_DTYPE}`"),
                });
            }
            if slot.is_some() {
                return Err(LexiconError::DuplicateSlot {
                    line: t.line,
                    form: "root".into(),
                    dtype: s.dtype,
                });
            }
            slot = Some(s);
        }
        self.next();
        self.in_block = false;
        match slot {
            Some(slot) => Ok(RootEntry { slot }),
            None => Err(LexiconError::Invalid {
                line: start.line,
                message: "the root block needs a slot".into(),
            }),
        }
    }

    fn features_list(&mut self, line: usize) -> PResult<Features> {
        let mut f = Features::new();
        while matches!(self.peek_at(0), Tok::Ident(_)) && *self.peek_at(1) == Tok::Punct('=') {
            let (a, at) = self.ident()?;
            self.expect_punct('=')?;
            let (v, _) = self.ident()?;
            if f.insert(a.clone(), v).is_some() {
                return self.error(&at, format!("attribute `{a}` given twice"));
            }
        }
        check_features(&self.inv, &f, line)?;
        Ok(f)
    }

    fn dtype_set(&mut self, open: char, close: char) -> PResult<BTreeSet<String>> {
        self.expect_punct(open)?;
        let mut set = BTreeSet::new();
        if self.at_punct(close) {
            self.next();
            return Ok(set);
        }
        loop {
            let (d, t) = self.ident()?;
            if !self.inv.has_dtype(&d) {
                return Err(LexiconError::UnknownSymbol {
                    line: t.line,
                    kind: "dependency type",
                    symbol: d,
                });
            }
            set.insert(d);
            let t = self.next();
            match t.tok {
                Tok::Punct(c) if c == close => return Ok(set),
                Tok::Punct(',') => {}
                ref other => {
                    return self.error(
                        &t,
                        format!("expected `,` or `{close}`, found {}", describe(other)),
                    )
                }
            }
        }
    }

    /// After `slot`: `dtype: options... ;`
    fn slot_stmt(&mut self) -> PResult<ValencySlot> {
        let (dtype, dt) = self.ident()?;
        self.expect_punct(':')?;
        let mut slot = ValencySlot::new(dtype);
        loop {
            let t = self.next();
            match &t.tok {
                Tok::Punct(';') => break,
                Tok::Ident(kw) => match kw.as_str() {
                    "class" => {
                        self.expect_punct('=')?;
                        let (c, _) = self.ident()?;
                        slot.class = if c == "any" {
                            ClassRequirement::Any
                        } else {
                            ClassRequirement::Class(c)
                        };
                    }
                    "feat" => slot.features = self.features_list(t.line)?,
                    "required" => slot.required = true,
                    "optional" => slot.required = false,
                    "extract" => slot.extraction = ExtractionPathSet(self.dtype_set('{', '}')?),
                    other => return self.error(&t, format!("unknown slot option `{other}`")),
                },
                other => {
                    return self.error(
                        &t,
                        format!("expected a slot option, found {}", describe(other)),
                    )
                }
            }
        }
        check_slot(&self.inv, &slot, dt.line)?;
        Ok(slot)
    }

    fn entry_block(&mut self) -> PResult<LexicalEntry> {
        let t = self.next();
        let Tok::Str(form) = t.tok.clone() else {
            return self.error(
                &t,
                format!("expected a quoted form, found {}", describe(&t.tok)),
            );
        };
        let header_line = t.line;
        self.keyword("class")?;
        self.expect_punct('=')?;
        let (class, ct) = self.ident()?;
        if !self.inv.has_class(&class) {
            return Err(LexiconError::UnknownSymbol {
                line: ct.line,
                kind: "word class",
                symbol: class,
            });
        }
        self.expect_punct('{')?;
        self.in_block = true;
        let mut p = PendingEntry::default();
        while !self.at_punct('}') {
            let (kw, kt) = self.ident()?;
            let line = kt.line;
            match kw.as_str() {
                "feat" => {
                    let is_word_features = matches!(self.peek_at(0), Tok::Ident(_))
                        && *self.peek_at(1) == Tok::Punct('=');
                    if is_word_features {
                        let f = self.features_list(line)?;
                        p.features.extend(f);
                    } else {
                        let (slot, _) = self.ident()?;
                        let f = self.features_list(line)?;
                        p.domain_feats.push((slot, line, f));
                    }
                    self.expect_punct(';')?;
                }
                "slot" => {
                    let s = self.slot_stmt()?;
                    if p.valency.iter().any(|o| o.dtype == s.dtype) {
                        return Err(LexiconError::DuplicateSlot {
                            line,
                            form,
                            dtype: s.dtype,
                        });
                    }
                    p.valency.push(s);
                }
                "domains" => {
                    self.expect_punct('[')?;
                    let mut names = Vec::new();
                    while !self.at_punct(']') {
                        names.push(self.ident()?.0);
                    }
                    self.next();
                    self.keyword("self")?;
                    self.expect_punct('=')?;
                    let (me, _) = self.ident()?;
                    self.expect_punct(';')?;
                    if p.domains.is_some() {
                        return Err(LexiconError::Invalid {
                            line,
                            message: "more than one `domains` statement".into(),
                        });
                    }
                    p.domains = Some((names, me, line));
                }
                "card" => {
                    let (slot, _) = self.ident()?;
                    let op = self.next();
                    let (n, nt) = self.ident()?;
                    let value: usize = match n.parse() {
                        Ok(v) => v,
                        Err(_) => {
                            return self.error(&nt, format!("expected a number, found `{n}`"))
                        }
                    };
                    let (min, max) = match (&op.tok, value) {
                        (Tok::Punct('='), 1) => (1, Some(1)),
                        (Tok::Le, 1) => (0, Some(1)),
                        (Tok::Ge, 1) => (1, None),
                        (Tok::Ge, 0) => (0, None),
                        _ => {
                            return self
                                .error(&op, "cardinality must be `= 1`, `<= 1`, `>= 1` or `>= 0`")
                        }
                    };
                    self.expect_punct(';')?;
                    p.cards.push((slot, line, min, max));
                }
                "order" => {
                    if self.at_ident("self") {
                        self.next();
                        let t = self.next();
                        let direction = match t.tok {
                            Tok::Punct('<') => Direction::Precedes,
                            Tok::Punct('>') => Direction::Follows,
                            ref other => {
                                return self.error(
                                    &t,
                                    format!("expected `<` or `>`, found {}", describe(other)),
                                )
                            }
                        };
                        self.expect_punct('*')?;
                        let scope = if self.at_ident("in") {
                            self.next();
                            Some(self.ident()?.0)
                        } else {
                            None
                        };
                        self.expect_punct(';')?;
                        p.self_orders.push((scope, line, direction));
                    } else {
                        let left = self.dtype_set('<', '>')?;
                        let (word, wt) = self.ident()?;
                        let direction = match word.as_str() {
                            "before" => Direction::Precedes,
                            "after" => Direction::Follows,
                            _ => return self.error(&wt, "expected `before` or `after`"),
                        };
                        let right = self.dtype_set('<', '>')?;
                        self.expect_punct(';')?;
                        if left.is_empty() || right.is_empty() {
                            return Err(LexiconError::Invalid {
                                line,
                                message: "labeled predicates need non-empty label sets".into(),
                            });
                        }
                        p.predicates.push(PrecedencePredicate::LabeledPair {
                            direction,
                            left,
                            right,
                        });
                    }
                }
                "extract" => {
                    let (slot, _) = self.ident()?;
                    let set = self.dtype_set('{', '}')?;
                    self.expect_punct(';')?;
                    p.extracts.push((slot, line, ExtractionPathSet(set)));
                }
                other => return self.error(&kt, format!("unknown statement `{other}`")),
            }
        }
        self.next();
        self.in_block = false;
        self.finish_entry(form, class, header_line, p)
    }

    fn finish_entry(
        &self,
        form: String,
        class: String,
        header_line: usize,
        mut p: PendingEntry,
    ) -> PResult<LexicalEntry> {
        let Some((slots, me, dline)) = p.domains.take() else {
            return Err(LexiconError::Invalid {
                line: header_line,
                message: format!("entry \"{form}\" has no `domains` statement"),
            });
        };
        let resolve = |name: &str, line: usize| {
            slots
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| LexiconError::UnknownSymbol {
                    line,
                    kind: "domain",
                    symbol: name.to_string(),
                })
        };
        let self_slot = resolve(&me, dline)?;
        let mut cardinality = Vec::new();
        for (name, line, min, max) in &p.cards {
            cardinality.push(CardinalityConstraint {
                slot: resolve(name, *line)?,
                min: *min,
                max: *max,
            });
        }
        let mut features = Vec::new();
        for (name, line, f) in p.domain_feats {
            features.push(DomainFeatureRequirement {
                slot: resolve(&name, line)?,
                required: f,
            });
        }
        let mut predicates = Vec::new();
        for (scope, line, direction) in &p.self_orders {
            if let Some(scope) = scope {
                if resolve(scope, *line)? != self_slot {
                    return Err(LexiconError::Invalid {
                        line: *line,
                        message: format!(
                            "`order self` is scoped by the domain containing the word (`{me}`), not `{scope}`"
                        ),
                    });
                }
            }
            predicates.push(PrecedencePredicate::SelfVsAll {
                direction: *direction,
            });
        }
        predicates.extend(p.predicates);
        for (dtype, line, set) in p.extracts {
            match p.valency.iter_mut().find(|s| s.dtype == dtype) {
                Some(s) => s.extraction = set,
                None => {
                    return Err(LexiconError::UnknownSymbol {
                        line,
                        kind: "slot",
                        symbol: dtype,
                    })
                }
            }
        }
        let entry = LexicalEntry {
            form,
            class,
            features: p.features,
            valency: p.valency,
            template: DomainTemplate {
                slots,
                self_slot,
                cardinality,
                features,
            },
            predicates,
        };
        check_entry(&self.inv, &entry, header_line)?;
        Ok(entry)
    }
}

/// Parses lexicon source, resolving and checking every symbol.
pub fn parse_lexicon(source: &str) -> Result<Lexicon, LexiconError> {
    let parser = Parser {
        toks: lex(source)?,
        pos: 0,
        in_block: false,
        inv: Inventory::default(),
    };
    parser.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"
dtypes: subj obj propo
classes: V N
attr case: nom acc

root { slot propo: class=V required; }

entry "sees" class=V {
  slot subj: class=N feat case=nom required;
  slot obj: class=N feat case=acc;
  domains [pre main] self=main;
  card pre = 1;
  order self < * in main;
  order <subj> before <obj>;
}
"#;

    #[test]
    fn parses_small_lexicon() {
        let lex = parse_lexicon(SMALL).unwrap();
        assert_eq!(lex.inventory().dtypes, ["subj", "obj", "propo"]);
        let e = &lex.entries_for("sees")[0];
        assert_eq!(e.valency.len(), 2);
        assert!(e.valency[0].required);
        assert!(!e.valency[1].required);
        assert_eq!(e.template.self_slot, 1);
        assert_eq!(
            e.template.cardinality,
            [CardinalityConstraint::exactly_one(0)]
        );
        assert_eq!(e.predicates.len(), 2);
        assert!(lex.root().is_some());
    }

    #[test]
    fn empty_source_is_empty_lexicon() {
        let lex = parse_lexicon("").unwrap();
        assert_eq!(lex.entry_count(), 0);
        assert!(lex.root().is_none());
        let lex = parse_lexicon("dtypes:\nclasses:\n").unwrap();
        assert!(lex.inventory().dtypes.is_empty());
    }

    #[test]
    fn unknown_dtype_reports_line() {
        let src = "dtypes: subj\nclasses: V\nentry \"x\" class=V {\n  slot iobj: required;\n  domains [a] self=a;\n}\n";
        match parse_lexicon(src) {
            Err(LexiconError::UnknownSymbol { line, symbol, .. }) => {
                assert_eq!(line, 4);
                assert_eq!(symbol, "iobj");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_slot_rejected() {
        let src = "dtypes: subj\nclasses: V\nentry \"x\" class=V {\n  slot subj:;\n  slot subj: required;\n  domains [a] self=a;\n}\n";
        assert!(matches!(
            parse_lexicon(src),
            Err(LexiconError::DuplicateSlot { line: 5, .. })
        ));
    }

    #[test]
    fn syntax_error_has_position() {
        let src = "dtypes: subj\nclasses: V\nentry \"x\" class=V {\n  domains [a] self a;\n}\n";
        match parse_lexicon(src) {
            Err(LexiconError::Syntax { line, column, .. }) => {
                assert_eq!(line, 4);
                assert_eq!(column, 20);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn self_order_scope_must_be_own_domain() {
        let src = "dtypes: subj\nclasses: V\nentry \"x\" class=V {\n  domains [a b] self=a;\n  order self < * in b;\n}\n";
        assert!(matches!(
            parse_lexicon(src),
            Err(LexiconError::Invalid { line: 5, .. })
        ));
    }

    #[test]
    fn unknown_domain_in_card() {
        let src = "dtypes: subj\nclasses: V\nentry \"x\" class=V {\n  domains [a] self=a;\n  card zz = 1;\n}\n";
        assert!(matches!(
            parse_lexicon(src),
            Err(LexiconError::UnknownSymbol {
                line: 5,
                kind: "domain",
                ..
            })
        ));
    }

    #[test]
    fn extract_statement_overrides_slot() {
        let src = "dtypes: obj vpart\nclasses: V\nentry \"x\" class=V {\n  slot obj:;\n  extract obj {vpart};\n  domains [a] self=a;\n}\n";
        let lex = parse_lexicon(src).unwrap();
        let e = &lex.entries_for("x")[0];
        assert!(e.slot("obj").unwrap().extraction.contains("vpart"));
    }

    #[test]
    fn undeclared_value_rejected() {
        let src = "dtypes: d\nclasses: V\nattr case: nom\nentry \"x\" class=V {\n  feat case=dat;\n  domains [a] self=a;\n}\n";
        assert!(matches!(
            parse_lexicon(src),
            Err(LexiconError::UnknownSymbol {
                line: 5,
                kind: "value",
                ..
            })
        ));
    }

    #[test]
    fn root_slot_must_be_propo() {
        let src = "dtypes: subj propo\nclasses: V\nroot { slot subj: class=V; }\n";
        assert!(matches!(
            parse_lexicon(src),
            Err(LexiconError::Invalid { line: 3, .. })
        ));
    }
}
