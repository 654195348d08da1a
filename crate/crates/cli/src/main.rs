use std::collections::BTreeSet;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use orderdom::{
    oracle_orders, oracle_parse, oracle_realizations, parse_structure, parse_tree,
    render_structure, structure_from_json, tree_from_json, validate_structure, DependencyStructure,
    DependencyTree, Engine, EngineConfig, EngineError, Enumerate, JsonStructure, Lexicon,
    OracleConfig, OracleError, StructureView,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "orderdom",
    version,
    about = "Parse, generate and validate with word order domains"
)]
struct Cli {
    /// Lexicon file.
    #[arg(long, global = true, env = "ORDERDOM_LEXICON")]
    lexicon: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Report wall-clock time of the command.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Parse sentences into dependency structures.
    Parse {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
    },
    /// Print every word order of a tree with its domain structures.
    Generate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
    },
    /// Check a dependency structure against the lexicon.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Brute-force enumeration, optionally compared against the engine.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Treat the input as a tree and enumerate its word orders.
        #[arg(long)]
        tree: bool,
        /// Print the symmetric difference to the engine result.
        #[arg(long)]
        diff: bool,
        #[arg(long, value_enum, default_value_t = EnumerateArg::Structures)]
        enumerate: EnumerateArg,
        #[arg(long, default_value_t = 7)]
        max_tokens: usize,
        #[command(flatten)]
        search: Search,
    },
    /// Load a lexicon and summarize its inventory.
    CheckLexicon {
        /// Lexicon file; defaults to --lexicon.
        path: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// Read the input from a file instead of the command line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Inline input; standard input is read when neither this nor --file is given.
    text: Vec<String>,
}

#[derive(Args, Clone, Copy)]
struct Search {
    /// Disable pruning and run the naive search.
    #[arg(long)]
    no_prune: bool,
    #[arg(long, default_value_t = orderdom::engine::DEFAULT_MAX_CANDIDATES)]
    max_candidates: u64,
}

impl Search {
    fn config(self) -> EngineConfig {
        EngineConfig {
            prune: !self.no_prune,
            max_candidates: self.max_candidates,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateArg {
    Structures,
    Permutations,
}

/// A failed command: exit status plus message for standard error.
struct Failure {
    status: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: 2,
        message: message.into(),
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let status = match e {
            EngineError::ResourceExceeded { .. } => 3,
            EngineError::InvalidTree(_) => 1,
            _ => 2,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        usage(e.to_string())
    }
}

/// Rendered output and whether the result counts as success.
struct Outcome {
    ok: bool,
    human: String,
    machine: Value,
}

fn read_input(input: &Input) -> Result<String, Failure> {
    if let Some(path) = &input.file {
        if !input.text.is_empty() {
            return Err(usage(
                "give the input either inline or with --file, not both",
            ));
        }
        return std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())));
    }
    if !input.text.is_empty() {
        return Ok(input.text.join(" "));
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
    Ok(s)
}

fn load_lexicon(path: Option<&Path>) -> Result<Lexicon, Failure> {
    let path =
        path.ok_or_else(|| usage("no lexicon given; use --lexicon or set ORDERDOM_LEXICON"))?;
    let src = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Lexicon::load(&src).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Whitespace tokenization. A final "." stands for the implicit root and is
/// dropped.
fn tokenize(line: &str) -> Vec<String> {
    let mut toks: Vec<String> = line.split_whitespace().map(str::to_string).collect();
    if let Some(last) = toks.last_mut() {
        if last.len() > 1 && last.ends_with('.') {
            last.pop();
        } else if last == "." {
            toks.pop();
        }
    }
    toks
}

fn sentences(text: &str) -> Vec<(String, Vec<String>)> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| (l.to_string(), tokenize(l)))
        .collect()
}

fn read_tree(text: &str) -> Result<DependencyTree, Failure> {
    let r = if text.trim_start().starts_with('{') {
        tree_from_json(text)
    } else {
        parse_tree(text)
    };
    r.map_err(|e| usage(format!("malformed tree: {e}")))
}

fn read_structure(text: &str) -> Result<DependencyStructure, Failure> {
    let r = if text.trim_start().starts_with('{') {
        structure_from_json(text)
    } else {
        parse_structure(text)
    };
    r.map_err(|e| usage(format!("malformed structure: {e}")))
}

fn json_of(ds: &DependencyStructure) -> Value {
    serde_json::to_value(JsonStructure::from(ds)).expect("structure serializes")
}

/// Nested brackets, one pair per domain, e.g. `[[[den] Mann] [hat ...]]`.
fn brackets(ds: &DependencyStructure, lex: &Lexicon) -> String {
    fn walk(view: &StructureView<'_>, id: orderdom::DomainId, depth: usize, out: &mut String) {
        out.push('[');
        let members = view.immediate_members(id);
        for (i, m) in members.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            match m.domain {
                Some(sub) if depth <= view.len() => walk(view, sub, depth + 1, out),
                _ => out.push_str(&view.structure().tree.words[m.head].form),
            }
        }
        out.push(']');
    }
    let view = StructureView::new(ds, lex);
    let mut out = String::new();
    walk(&view, ds.domains.top, 0, &mut out);
    out
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn human_structure(ds: &DependencyStructure, lex: &Lexicon) -> String {
    format!("  {}\n{}", brackets(ds, lex), indent(&render_structure(ds)))
}

fn cmd_parse(lex: &Lexicon, input: &Input, search: Search) -> Result<Outcome, Failure> {
    let text = read_input(input)?;
    let batch = sentences(&text);
    if batch.is_empty() {
        return Err(usage("no sentence to parse"));
    }
    let engine = Engine::with_config(lex, search.config());
    let mut human = String::new();
    let mut results = Vec::new();
    let mut ok = true;
    let mut total = 0;
    for (line, tokens) in &batch {
        let r = engine.parse(tokens)?;
        ok &= !r.structures.is_empty();
        total += r.structures.len();
        human.push_str(&format!(
            "sentence: {line}\n{} structure(s)\n",
            r.structures.len()
        ));
        for (i, ds) in r.structures.iter().enumerate() {
            human.push_str(&format!(
                "structure {}\n{}",
                i + 1,
                human_structure(ds, lex)
            ));
        }
        for d in &r.diagnostics {
            human.push_str(&format!("  ! {d}\n"));
        }
        results.push(json!({
            "input": line,
            "tokens": tokens,
            "count": r.structures.len(),
            "structures": r.structures.iter().map(json_of).collect::<Vec<_>>(),
            "diagnostics": r.diagnostics,
            "stats": r.stats,
        }));
    }
    Ok(Outcome {
        ok,
        human,
        machine: json!({ "command": "parse", "count": total, "results": results }),
    })
}

fn cmd_generate(lex: &Lexicon, input: &Input, search: Search) -> Result<Outcome, Failure> {
    let tree = read_tree(&read_input(input)?)?;
    let engine = Engine::with_config(lex, search.config());
    let r = engine.generate(&tree)?;
    let orders = r.orders();
    let mut human = format!(
        "{} order(s), {} structure(s)\n",
        orders.len(),
        r.pairs.len()
    );
    for (s, ds) in &r.pairs {
        human.push_str(&format!("order: {s}\n{}", human_structure(ds, lex)));
    }
    let pairs: Vec<Value> = r
        .pairs
        .iter()
        .map(|(s, ds)| json!({ "surface": s, "structure": json_of(ds) }))
        .collect();
    Ok(Outcome {
        ok: !r.pairs.is_empty(),
        human,
        machine: json!({
            "command": "generate",
            "orders": orders.len(),
            "count": r.pairs.len(),
            "pairs": pairs,
            "stats": r.stats,
        }),
    })
}

fn cmd_validate(lex: &Lexicon, input: &Input) -> Result<Outcome, Failure> {
    let ds = read_structure(&read_input(input)?)?;
    let report = validate_structure(&ds, lex);
    Ok(Outcome {
        ok: report.is_valid(),
        human: report.to_string(),
        machine: json!({
            "command": "validate",
            "valid": report.is_valid(),
            "count": report.len(),
            "violations": report.violations().iter().map(|v| json!({
                "condition": v.condition.id(),
                "statement": v.condition.statement(),
                "indices": v.indices,
                "message": v.message,
            })).collect::<Vec<_>>(),
        }),
    })
}

/// Items listed by the oracle and the engine, as comparable strings.
struct Listing {
    items: BTreeSet<String>,
    human: Vec<String>,
    json: Vec<Value>,
}

impl Listing {
    fn new() -> Self {
        Listing {
            items: BTreeSet::new(),
            human: Vec::new(),
            json: Vec::new(),
        }
    }

    fn order(&mut self, s: &str) {
        if self.items.insert(s.to_string()) {
            self.human.push(format!("order: {s}\n"));
            self.json.push(json!(s));
        }
    }

    fn structure(&mut self, surface: Option<&str>, ds: &DependencyStructure, lex: &Lexicon) {
        let key = match surface {
            Some(s) => format!("{s}\n{}", render_structure(ds)),
            None => render_structure(ds),
        };
        if self.items.insert(key) {
            let head = surface.map_or("structure\n".to_string(), |s| format!("order: {s}\n"));
            self.human
                .push(format!("{head}{}", human_structure(ds, lex)));
            self.json.push(match surface {
                Some(s) => json!({ "surface": s, "structure": json_of(ds) }),
                None => json_of(ds),
            });
        }
    }
}

fn cmd_oracle(
    lex: &Lexicon,
    input: &Input,
    as_tree: bool,
    diff: bool,
    enumerate: Enumerate,
    max_tokens: usize,
    search: Search,
) -> Result<Outcome, Failure> {
    let text = read_input(input)?;
    let config = OracleConfig {
        max_tokens,
        enumerate,
    };
    let engine = Engine::with_config(lex, search.config());
    let mut oracle = Listing::new();
    let mut engine_side = Listing::new();
    let subject;
    if as_tree {
        let tree = read_tree(&text)?;
        subject = tree.surface();
        match enumerate {
            Enumerate::Permutations => {
                for s in oracle_orders(&tree, lex, &config)? {
                    oracle.order(&s);
                }
            }
            Enumerate::Structures => {
                for (s, ds) in oracle_realizations(&tree, lex, &config)? {
                    oracle.structure(Some(&s), &ds, lex);
                }
            }
        }
        if diff {
            for (s, ds) in engine.generate(&tree)?.pairs {
                match enumerate {
                    Enumerate::Permutations => engine_side.order(&s),
                    Enumerate::Structures => engine_side.structure(Some(&s), &ds, lex),
                }
            }
        }
    } else {
        let batch = sentences(&text);
        let [(line, tokens)] = batch.as_slice() else {
            return Err(usage("the oracle takes exactly one sentence"));
        };
        subject = line.clone();
        match enumerate {
            Enumerate::Structures => {
                for ds in oracle_parse(tokens, lex, &config)? {
                    oracle.structure(None, &ds, lex);
                }
                if diff {
                    for ds in engine.parse(tokens)?.structures {
                        engine_side.structure(None, &ds, lex);
                    }
                }
            }
            Enumerate::Permutations => {
                let perms: BTreeSet<Vec<&String>> =
                    tokens.iter().permutations(tokens.len()).collect();
                for perm in perms {
                    let s = perm.iter().join(" ");
                    if !oracle_parse(&perm, lex, &config)?.is_empty() {
                        oracle.order(&s);
                    }
                    if diff && !engine.parse(&perm)?.structures.is_empty() {
                        engine_side.order(&s);
                    }
                }
            }
        }
    }

    let mut human = format!(
        "input: {subject}\noracle: {} result(s)\n",
        oracle.items.len()
    );
    for h in &oracle.human {
        human.push_str(h);
    }
    let mut machine = json!({
        "command": "oracle",
        "input": subject,
        "enumerate": match enumerate {
            Enumerate::Permutations => "permutations",
            Enumerate::Structures => "structures",
        },
        "count": oracle.items.len(),
        "results": oracle.json,
    });
    let ok = if diff {
        let only_oracle: Vec<&String> = oracle.items.difference(&engine_side.items).collect();
        let only_engine: Vec<&String> = engine_side.items.difference(&oracle.items).collect();
        human.push_str(&format!(
            "diff: {} only in oracle, {} only in engine\n",
            only_oracle.len(),
            only_engine.len()
        ));
        for s in &only_oracle {
            human.push_str(&format!("- oracle only:\n{}", indent(s)));
        }
        for s in &only_engine {
            human.push_str(&format!("+ engine only:\n{}", indent(s)));
        }
        machine["diff"] = json!({ "only_oracle": only_oracle, "only_engine": only_engine });
        only_oracle.is_empty() && only_engine.is_empty()
    } else {
        !oracle.items.is_empty()
    };
    Ok(Outcome { ok, human, machine })
}

fn cmd_check_lexicon(path: Option<&Path>) -> Result<Outcome, Failure> {
    let path = path.ok_or_else(|| usage("no lexicon given; pass a path or use --lexicon"))?;
    let src = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let lex = match Lexicon::load(&src) {
        Ok(lex) => lex,
        Err(e) => {
            return Ok(Outcome {
                ok: false,
                human: format!("{}: {e}\n", path.display()),
                machine: json!({ "command": "check-lexicon", "valid": false, "error": e.to_string() }),
            })
        }
    };
    let inv = lex.inventory();
    let forms: Vec<&str> = lex.forms().collect();
    let mut human = format!(
        "dtypes: {}\nclasses: {}\n",
        inv.dtypes.iter().join(" "),
        inv.classes.iter().join(" ")
    );
    for a in &inv.attributes {
        human.push_str(&format!("attr {}: {}\n", a.name, a.values.iter().join(" ")));
    }
    human.push_str(&format!(
        "{} form(s), {} entr{}\n",
        forms.len(),
        lex.entry_count(),
        if lex.entry_count() == 1 { "y" } else { "ies" }
    ));
    Ok(Outcome {
        ok: true,
        human,
        machine: json!({
            "command": "check-lexicon",
            "valid": true,
            "dtypes": inv.dtypes,
            "classes": inv.classes,
            "attributes": inv.attributes.iter().map(|a| json!({ "name": a.name, "values": a.values })).collect::<Vec<_>>(),
            "forms": forms.len(),
            "entries": lex.entry_count(),
        }),
    })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let lexicon = || load_lexicon(cli.lexicon.as_deref());
    match &cli.command {
        Command::Parse { input, search } => cmd_parse(&lexicon()?, input, *search),
        Command::Generate { input, search } => cmd_generate(&lexicon()?, input, *search),
        Command::Validate { input } => cmd_validate(&lexicon()?, input),
        Command::Oracle {
            input,
            tree,
            diff,
            enumerate,
            max_tokens,
            search,
        } => {
            let enumerate = match enumerate {
                EnumerateArg::Structures => Enumerate::Structures,
                EnumerateArg::Permutations => Enumerate::Permutations,
            };
            cmd_oracle(
                &lexicon()?,
                input,
                *tree,
                *diff,
                enumerate,
                *max_tokens,
                *search,
            )
        }
        Command::CheckLexicon { path } => {
            cmd_check_lexicon(path.as_deref().or(cli.lexicon.as_deref()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut out) => {
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            match cli.format {
                Format::Human => {
                    print!("{}", out.human);
                    if cli.timing {
                        println!("time: {elapsed:.3} ms");
                    }
                }
                Format::Machine => {
                    if cli.timing {
                        out.machine["timing_ms"] = json!(elapsed);
                    }
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&out.machine).expect("json")
                    );
                }
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status)
        }
    }
}
