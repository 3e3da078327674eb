//! Command-line calculator for symmetric Thompson groups: parse and emit
//! table elements, run the table calculus and the two embeddings, execute
//! randomized verification suites, and emit tree-pair diagrams.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use vnh::json::{table_from_json, table_to_json, ContextDoc, TableDoc};
use vnh::{
    find_solution, successors_inductive, AlgContext, Alphabet, EvWord, Perm, PermGroup, Table,
    Triple, Word,
};

#[derive(Parser)]
#[command(name = "vnh", version, about = "Calculator for symmetric Thompson groups V_n(H)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Down,
    Up,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    /// Reverse dictionary order (the canonical assignment order).
    Revdict,
    /// The order in which the words are listed on the command line.
    Given,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Alg,
    Topo,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check an element file and report every violated invariant.
    Validate { file: PathBuf },
    /// Print the canonical form: pushed down, fully reduced, columns sorted.
    Normalize { file: PathBuf },
    /// Compose two elements; `compose v.json u.json` applies u first.
    Compose { v: PathBuf, u: PathBuf },
    /// Invert an element.
    Invert { file: PathBuf },
    /// Decide whether two elements describe the same homeomorphism.
    Eq { a: PathBuf, b: PathBuf },
    /// Evaluate an element at an eventually periodic point like "10(01)".
    Eval {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Push all permutations to one row of the table.
    Push {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "down")]
        dir: Direction,
    },
    /// Expand one column into its n children (0-based index).
    Expand {
        file: PathBuf,
        #[arg(long)]
        index: usize,
    },
    /// Print the successor assignment of a code under the letter m-1.
    Successors {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Comma-separated words, e.g. 20,210,211,212,22
        #[arg(long)]
        code: String,
        #[arg(long, value_enum, default_value = "revdict")]
        order: Order,
    },
    /// Embed an element of V_m(G) into V_n(G_ext) by successor coding.
    EmbedAlg {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Embed an element of V_n(H) into V_m(G) over an invariant code.
    EmbedTopo {
        file: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
    },
    /// Search for a G-invariant complete prefix code with n elements.
    FindCode {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Generators as a JSON array of image arrays, e.g. [[1,0,2]]
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        depth: usize,
    },
    /// Compute the permutations induced by a group on an invariant code.
    RootGroup {
        #[arg(long)]
        m: usize,
        /// Generators as a JSON array of image arrays.
        #[arg(long)]
        group: String,
        /// The code as a JSON array of word strings.
        #[arg(long)]
        code: String,
    },
    /// Check the embedding homomorphism identity on random pairs.
    VerifyHom {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Generators of G for the algebraic mode (default trivial).
        #[arg(long)]
        group: Option<String>,
        /// Context file for the topological mode.
        #[arg(long)]
        ctx: Option<PathBuf>,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Generate a seeded random element.
    Random {
        #[arg(long)]
        n: usize,
        /// Generators of H as a JSON array of image arrays (default trivial).
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        seed: u64,
        /// Sample from the subgroup generated by V_n and H (one global twist).
        #[arg(long)]
        uniform: bool,
    },
    /// Emit the tree-pair diagram of an element in DOT format.
    Dot { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cmd: Cmd) -> Result<(), String> {
    match cmd {
        Cmd::Validate { file } => {
            let text = read(&file)?;
            let doc: TableDoc = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let problems = doc.validation_problems();
            if problems.is_empty() {
                println!("ok");
                Ok(())
            } else {
                for p in &problems {
                    println!("error: {p}");
                }
                Err(format!("{} invariant violation(s)", problems.len()))
            }
        }
        Cmd::Normalize { file } => {
            let t = load_table(&file)?;
            print!("{}", table_to_json(t.canonical().table()));
            Ok(())
        }
        Cmd::Compose { v, u } => {
            let v = load_table(&v)?;
            let u = load_table(&u)?;
            let vu = v.compose(&u).map_err(|e| e.to_string())?;
            print!("{}", table_to_json(vu.canonical().table()));
            Ok(())
        }
        Cmd::Invert { file } => {
            let t = load_table(&file)?;
            print!("{}", table_to_json(t.inverse().canonical().table()));
            Ok(())
        }
        Cmd::Eq { a, b } => {
            let a = load_table(&a)?;
            let b = load_table(&b)?;
            if a.equals(&b).map_err(|e| e.to_string())? {
                println!("equal");
            } else {
                println!("not equal");
            }
            Ok(())
        }
        Cmd::Eval { file, point } => {
            let t = load_table(&file)?;
            let z = EvWord::parse(&point, t.alphabet()).map_err(|e| e.to_string())?;
            println!("{}", t.evaluate(&z));
            Ok(())
        }
        Cmd::Push { file, dir } => {
            let t = load_table(&file)?;
            let pushed = match dir {
                Direction::Down => t.push_down(),
                Direction::Up => t.push_up(),
            };
            print!("{}", table_to_json(&pushed));
            Ok(())
        }
        Cmd::Expand { file, index } => {
            let t = load_table(&file)?;
            let expanded = t.expand_column(index).map_err(|e| e.to_string())?;
            print!("{}", table_to_json(&expanded));
            Ok(())
        }
        Cmd::Successors { m, n, code, order } => {
            let alphabet = Alphabet::new(n).map_err(|e| e.to_string())?;
            let mut words = code
                .split(',')
                .map(|s| Word::parse(s, alphabet))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            if matches!(order, Order::Revdict) {
                words.sort_by(|a, b| b.cmp(a));
            }
            let sa = successors_inductive(&words, m, n).map_err(|e| e.to_string())?;
            let width = words.iter().map(|w| w.to_string().len()).max().unwrap_or(0);
            for (i, w) in sa.code().iter().enumerate() {
                let succ: Vec<String> = sa.successors(i).iter().map(Word::to_string).collect();
                println!("{:<width$}  {}", w.to_string(), succ.join(" "));
            }
            Ok(())
        }
        Cmd::EmbedAlg { file, n } => {
            let t = load_table(&file)?;
            let ctx = AlgContext::new((**t.group()).clone(), n).map_err(|e| e.to_string())?;
            let image = ctx.embed(&t).map_err(|e| e.to_string())?;
            print!("{}", table_to_json(&image));
            Ok(())
        }
        Cmd::EmbedTopo { file, ctx } => {
            let t = load_table(&file)?;
            let doc: ContextDoc = serde_json::from_str(&read(&ctx)?).map_err(|e| e.to_string())?;
            let ctx = doc.to_context().map_err(|e| e.to_string())?;
            let image = ctx.embed(&t).map_err(|e| e.to_string())?;
            print!("{}", table_to_json(&image));
            Ok(())
        }
        Cmd::FindCode { m, n, group, depth } => {
            let g = parse_group(m, group.as_deref())?;
            let triple = Triple::new(g, n).map_err(|e| e.to_string())?;
            match find_solution(&triple, depth) {
                Some(code) => print!("{}", vnh::json::code_to_json(&code)),
                None => println!("none up to depth {depth}"),
            }
            Ok(())
        }
        Cmd::RootGroup { m, group, code } => {
            let g = parse_group(m, Some(&group))?;
            let alphabet = Alphabet::new(m).map_err(|e| e.to_string())?;
            let code = vnh::json::code_from_json(&code, alphabet).map_err(|e| e.to_string())?;
            let root = vnh::root_group(&g, &code).map_err(|e| e.to_string())?;
            let doc = serde_json::json!({
                "code": code.words().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "generators": g.generators().iter().map(|p| p.image().to_vec()).collect::<Vec<_>>(),
                "images": g
                    .generators()
                    .iter()
                    .map(|p| root.map(p).expect("generator image").image().to_vec())
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serialize"));
            Ok(())
        }
        Cmd::VerifyHom { mode, m, n, group, ctx, samples, seed, depth } => {
            verify_hom(mode, m, n, group.as_deref(), ctx.as_deref(), samples, seed, depth)
        }
        Cmd::Random { n, group, depth, seed, uniform } => {
            let g = Arc::new(parse_group(n, group.as_deref())?);
            let t = if uniform {
                Table::random_uniform(g, depth, seed)
            } else {
                Table::random(g, depth, seed)
            };
            print!("{}", table_to_json(&t));
            Ok(())
        }
        Cmd::Dot { file } => {
            let t = load_table(&file)?;
            print!("{}", dot(&t));
            Ok(())
        }
    }
}

fn read(path: &std::path::Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_table(path: &std::path::Path) -> Result<Table, String> {
    table_from_json(&read(path)?).map_err(|e| e.to_string())
}

fn parse_group(degree: usize, text: Option<&str>) -> Result<PermGroup, String> {
    let Some(text) = text else {
        return Ok(PermGroup::trivial(degree));
    };
    let images: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let generators = images
        .into_iter()
        .map(Perm::from_image)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    PermGroup::generate(degree, generators, vnh::perm::DEFAULT_CAP).map_err(|e| e.to_string())
}

#[allow(clippy::too_many_arguments)]
fn verify_hom(
    mode: Mode,
    m: Option<usize>,
    n: Option<usize>,
    group: Option<&str>,
    ctx: Option<&std::path::Path>,
    samples: usize,
    seed: u64,
    depth: usize,
) -> Result<(), String> {
    type Embed = Box<dyn Fn(&Table) -> Result<Table, String>>;
    let embed: Embed;
    let source: Arc<PermGroup>;
    match mode {
        Mode::Alg => {
            let m = m.ok_or("--m is required in alg mode")?;
            let n = n.ok_or("--n is required in alg mode")?;
            let g = parse_group(m, group)?;
            let actx = AlgContext::new(g, n).map_err(|e| e.to_string())?;
            source = actx.small_group().clone();
            embed = Box::new(move |t| actx.embed(t).map_err(|e| e.to_string()));
        }
        Mode::Topo => {
            let path = ctx.ok_or("--ctx is required in topo mode")?;
            let doc: ContextDoc = serde_json::from_str(&read(path)?).map_err(|e| e.to_string())?;
            let tctx = doc.to_context().map_err(|e| e.to_string())?;
            source = tctx.large_group().clone();
            embed = Box::new(move |t| tctx.embed(t).map_err(|e| e.to_string()));
        }
    }
    let mut passed = 0usize;
    for i in 0..samples as u64 {
        let g = Table::random_uniform(source.clone(), depth, seed.wrapping_add(2 * i));
        let h = Table::random_uniform(source.clone(), depth, seed.wrapping_add(2 * i + 1));
        let lhs = embed(&h.compose(&g).map_err(|e| e.to_string())?)?;
        let rhs = embed(&h)?.compose(&embed(&g)?).map_err(|e| e.to_string())?;
        if lhs.equals(&rhs).map_err(|e| e.to_string())? {
            passed += 1;
        } else {
            println!("{passed}/{samples} pairs satisfy ι(h∘g)=ι(h)∘ι(g)");
            println!("counterexample g:");
            print!("{}", table_to_json(&g));
            println!("counterexample h:");
            print!("{}", table_to_json(&h));
            return Err(format!("homomorphism identity failed at sample {i}"));
        }
    }
    println!("{passed}/{samples} pairs satisfy ι(h∘g)=ι(h)∘ι(g)");
    Ok(())
}

/// Tree-pair diagram: the domain and range trees with leaves labelled by
/// column index and any nontrivial permutations.
fn dot(table: &Table) -> String {
    let mut out = String::from("digraph tree_pair {\n  rankdir=TB;\n  node [shape=box];\n");
    for (tag, label, words, perms) in [
        (
            "d",
            "domain",
            table.columns().iter().map(|c| c.p.clone()).collect::<Vec<_>>(),
            table.columns().iter().map(|c| c.sigma.clone()).collect::<Vec<_>>(),
        ),
        (
            "r",
            "range",
            table.columns().iter().map(|c| c.q.clone()).collect::<Vec<_>>(),
            table.columns().iter().map(|c| c.tau.clone()).collect::<Vec<_>>(),
        ),
    ] {
        let _ = writeln!(out, "  subgraph cluster_{tag} {{");
        let _ = writeln!(out, "    label=\"{label}\";");
        let mut nodes: Vec<Word> = words
            .iter()
            .flat_map(|w| w.strict_prefixes().collect::<Vec<_>>())
            .collect();
        nodes.sort();
        nodes.dedup();
        for node in &nodes {
            let _ = writeln!(
                out,
                "    {} [label=\"{}\" shape=circle];",
                node_id(tag, node),
                text(node)
            );
        }
        let mut leaves: Vec<(usize, &Word, &Perm)> =
            words.iter().zip(perms.iter()).enumerate().map(|(i, (w, p))| (i, w, p)).collect();
        leaves.sort_by(|a, b| a.1.cmp(b.1));
        for (i, w, p) in &leaves {
            let perm = if p.is_identity() { String::new() } else { format!("\\n{p}") };
            let _ = writeln!(out, "    {} [label=\"{} #{}{}\"];", node_id(tag, w), text(w), i, perm);
        }
        let mut edges: Vec<(Word, Word, usize)> = Vec::new();
        for w in nodes.iter().chain(words.iter()) {
            if let Some((&last, parent)) = w.letters().split_last() {
                let parent = Word::from_letters(w.alphabet(), parent.to_vec()).expect("parent");
                edges.push((parent, w.clone(), last));
            }
        }
        edges.sort();
        edges.dedup();
        for (parent, child, letter) in &edges {
            let _ = writeln!(
                out,
                "    {} -> {} [label=\"{letter}\"];",
                node_id(tag, parent),
                node_id(tag, child)
            );
        }
        let _ = writeln!(out, "  }}");
    }
    out.push_str("}\n");
    out
}

fn text(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

fn node_id(tag: &str, w: &Word) -> String {
    let mut id = format!("{tag}_root");
    for l in w.letters() {
        let _ = write!(id, "_{l}");
    }
    id
}
