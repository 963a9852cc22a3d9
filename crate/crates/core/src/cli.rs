//! The `isodiamond` command line.
//!
//! Exit status: 0 for success and "yes" verdicts, 1 for principled "no"
//! verdicts (a JSON certificate is written to standard output), 2 for usage,
//! input and I/O errors (reported on standard error).

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::certificate::{certificate_json, violation_json};
use crate::diamond::{
    chain_embedding, direct_embedding, is_isometric_diamond_subgraph, poset_width_and_chains, verify_embedding,
    DiamondEmbedding, Obstruction,
};
use crate::draw::{emit_svg, DrawingConfig};
use crate::generators::{generate_diamond_patch, generate_named, DEFAULT_PATCH_CAP};
use crate::graph::{parse_edge_list, Graph};
use crate::partial_cube::{is_partial_cube, PartialCubeError, PartialCubeVerdict, PartialCubeWitness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "isodiamond",
    version,
    about = "Isometric embeddings into hexagonal, diamond and higher generalized diamond graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Built-in graph (desargues, c4, c6, q3, k23, p<N>, c<N>)
    #[arg(long, conflicts_with = "file")]
    named: Option<String>,
    /// Edge-list file; standard input is read when neither option is given
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the graph is an isometric diamond subgraph
    Recognize(GraphInput),
    /// List the Djokovic–Winkler classes and their semicubes
    Classes(GraphInput),
    /// Orient every class's cut by color, or report an incoherent one
    Coherence(GraphInput),
    /// Minimum diamond dimension, cut-order width and chains
    Dimension(GraphInput),
    /// Emit an embedding as JSON
    Embed {
        #[command(flatten)]
        input: GraphInput,
        /// One coordinate per class
        #[arg(long, conflicts_with = "minimum")]
        direct: bool,
        /// Minimum dimension (default)
        #[arg(long)]
        minimum: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an embedding JSON document against the graph
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Print a generated graph in edge-list format
    Generate {
        /// Patch of the K-dimensional diamond with coordinates in -R..=R
        #[arg(long, num_args = 2, value_names = ["K", "R"], conflicts_with = "named", required_unless_present = "named")]
        diamond: Option<Vec<usize>>,
        #[arg(long)]
        named: Option<String>,
        /// Also write the patch coordinates as an embedding document
        #[arg(long, requires = "diamond")]
        coords: Option<PathBuf>,
        /// Vertex cap for patches
        #[arg(long, default_value_t = DEFAULT_PATCH_CAP)]
        cap: usize,
    },
    /// Draw a 2-dimensional embedding as SVG
    Draw {
        #[command(flatten)]
        input: GraphInput,
        /// Embedding document; computed with the minimum construction if absent
        #[arg(long)]
        embedding: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 100.0)]
        scale: f64,
        #[arg(long, default_value_t = 20.0)]
        margin: f64,
        #[arg(long = "vertex-radius", default_value_t = 4.0)]
        vertex_radius: f64,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

enum Outcome {
    Yes,
    No,
}

type CmdResult = Result<Outcome, String>;

/// Runs one command line (including the program name) against the given streams.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli.command, &mut io) {
        Ok(Outcome::Yes) => EXIT_OK,
        Ok(Outcome::No) => EXIT_NO,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> CmdResult {
    match command {
        Command::Recognize(input) => recognize(&load_graph(&input, io)?, io),
        Command::Classes(input) => classes(&load_graph(&input, io)?, io),
        Command::Coherence(input) => coherence(&load_graph(&input, io)?, io),
        Command::Dimension(input) => dimension(&load_graph(&input, io)?, io),
        Command::Embed {
            input,
            direct,
            minimum: _,
            out,
        } => embed(&load_graph(&input, io)?, direct, out.as_deref(), io),
        Command::Verify { input, embedding } => {
            let g = load_graph(&input, io)?;
            verify(&g, &read_embedding(&embedding)?, io)
        }
        Command::Generate {
            diamond,
            named,
            coords,
            cap,
        } => generate(diamond, named, coords.as_deref(), cap, io),
        Command::Draw {
            input,
            embedding,
            out,
            scale,
            margin,
            vertex_radius,
        } => {
            let g = load_graph(&input, io)?;
            let cfg = DrawingConfig {
                scale,
                margin,
                vertex_radius,
            };
            draw(&g, embedding.as_deref(), out.as_deref(), &cfg, io)
        }
    }
}

fn load_graph(input: &GraphInput, io: &mut Io<'_>) -> Result<Graph, String> {
    if let Some(name) = &input.named {
        return generate_named(name).map_err(|e| e.to_string());
    }
    let text = match &input.file {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?,
        None => {
            let mut text = String::new();
            io.stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("standard input: {e}"))?;
            text
        }
    };
    parse_edge_list(&text).map_err(|e| e.to_string())
}

fn read_embedding(path: &Path) -> Result<DiamondEmbedding, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: invalid embedding document: {e}", path.display()))
}

fn print_json(io: &mut Io<'_>, value: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    writeln!(io.stdout, "{text}").map_err(|e| e.to_string())
}

fn reject(io: &mut Io<'_>, obstruction: &Obstruction) -> CmdResult {
    print_json(io, &certificate_json(obstruction))?;
    Ok(Outcome::No)
}

fn edges_json(g: &Graph, edges: &[usize]) -> Value {
    Value::Array(
        edges
            .iter()
            .map(|&e| {
                let (u, v) = g.edge(e);
                json!([u, v])
            })
            .collect(),
    )
}

fn recognize(g: &Graph, io: &mut Io<'_>) -> CmdResult {
    match is_isometric_diamond_subgraph(g) {
        Ok(s) => {
            print_json(
                io,
                &json!({
                    "embeddable": true,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "classes": s.class_count(),
                }),
            )?;
            Ok(Outcome::Yes)
        }
        Err(o) => reject(io, &o),
    }
}

fn classes(g: &Graph, io: &mut Io<'_>) -> CmdResult {
    if g.vertex_count() == 0 {
        return reject(io, &Obstruction::EmptyGraph);
    }
    let pc = match is_partial_cube(g) {
        Ok(PartialCubeVerdict::Yes(pc)) => pc,
        Ok(PartialCubeVerdict::No(PartialCubeWitness::OddCycle(cycle))) => {
            return reject(io, &Obstruction::OddCycle { cycle })
        }
        Ok(PartialCubeVerdict::No(PartialCubeWitness::DistanceMismatch {
            u,
            v,
            graph_distance,
            hamming_distance,
        })) => {
            return reject(
                io,
                &Obstruction::NotPartialCube {
                    u,
                    v,
                    graph_distance,
                    hamming_distance,
                },
            )
        }
        Err(PartialCubeError::Disconnected { unreachable }) => {
            return reject(io, &Obstruction::Disconnected { unreachable })
        }
        Err(PartialCubeError::NotBipartite { cycle }) => return reject(io, &Obstruction::OddCycle { cycle }),
    };
    let list: Vec<Value> = pc
        .classes
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "edges": edges_json(g, &c.edges),
                "semicube_a": c.semicube_a.to_vec(),
                "semicube_b": c.semicube_b.to_vec(),
            })
        })
        .collect();
    print_json(io, &json!({ "partial_cube": true, "classes": list }))?;
    Ok(Outcome::Yes)
}

fn coherence(g: &Graph, io: &mut Io<'_>) -> CmdResult {
    let s = match is_isometric_diamond_subgraph(g) {
        Ok(s) => s,
        Err(o) => return reject(io, &o),
    };
    let cuts: Vec<Value> = s
        .cuts
        .iter()
        .map(|c| {
            json!({
                "class": c.class_id,
                "white_side": c.white_side.to_vec(),
                "black_side": c.black_side.to_vec(),
            })
        })
        .collect();
    print_json(io, &json!({ "coherent": true, "cuts": cuts }))?;
    Ok(Outcome::Yes)
}

fn dimension(g: &Graph, io: &mut Io<'_>) -> CmdResult {
    let s = match is_isometric_diamond_subgraph(g) {
        Ok(s) => s,
        Err(o) => return reject(io, &o),
    };
    let (width, chains) = poset_width_and_chains(&s.poset());
    print_json(
        io,
        &json!({
            "dimension": width.saturating_sub(1),
            "width": width,
            "classes": s.class_count(),
            "chains": chains.chains,
        }),
    )?;
    Ok(Outcome::Yes)
}

fn checked_embedding(g: &Graph, direct: bool) -> Result<Result<DiamondEmbedding, Obstruction>, String> {
    let s = match is_isometric_diamond_subgraph(g) {
        Ok(s) => s,
        Err(o) => return Ok(Err(o)),
    };
    let e = if direct {
        direct_embedding(g, &s)
    } else {
        let (_, chains) = poset_width_and_chains(&s.poset());
        chain_embedding(g, &s, &chains)
    };
    verify_embedding(g, &e).map_err(|v| format!("internal error: constructed embedding is invalid: {v}"))?;
    Ok(Ok(e))
}

fn write_output(io: &mut Io<'_>, out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => io.stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn embed(g: &Graph, direct: bool, out: Option<&Path>, io: &mut Io<'_>) -> CmdResult {
    match checked_embedding(g, direct)? {
        Ok(e) => {
            let text = serde_json::to_string(&e).map_err(|e| e.to_string())? + "\n";
            write_output(io, out, &text)?;
            Ok(Outcome::Yes)
        }
        Err(o) => reject(io, &o),
    }
}

fn verify(g: &Graph, e: &DiamondEmbedding, io: &mut Io<'_>) -> CmdResult {
    match verify_embedding(g, e) {
        Ok(()) => {
            print_json(io, &json!({ "ok": true, "dimension": e.dimension }))?;
            Ok(Outcome::Yes)
        }
        Err(v) => {
            print_json(io, &violation_json(&v))?;
            Ok(Outcome::No)
        }
    }
}

fn generate(
    diamond: Option<Vec<usize>>,
    named: Option<String>,
    coords: Option<&Path>,
    cap: usize,
    io: &mut Io<'_>,
) -> CmdResult {
    let g = if let Some(kr) = diamond {
        let patch = generate_diamond_patch(kr[0], kr[1], cap).map_err(|e| e.to_string())?;
        if let Some(path) = coords {
            let doc = DiamondEmbedding::new(patch.k, patch.coords.clone());
            let text = serde_json::to_string(&doc).map_err(|e| e.to_string())? + "\n";
            fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        patch.graph
    } else {
        let name = named.ok_or("either --diamond or --named is required")?;
        generate_named(&name).map_err(|e| e.to_string())?
    };
    write_output(io, None, &g.to_edge_list())?;
    Ok(Outcome::Yes)
}

fn draw(g: &Graph, embedding: Option<&Path>, out: Option<&Path>, cfg: &DrawingConfig, io: &mut Io<'_>) -> CmdResult {
    cfg.validate().map_err(|e| e.to_string())?;
    let e = match embedding {
        Some(path) => {
            let e = read_embedding(path)?;
            if let Err(v) = verify_embedding(g, &e) {
                print_json(io, &violation_json(&v))?;
                return Ok(Outcome::No);
            }
            e
        }
        None => match checked_embedding(g, false)? {
            Ok(e) => e,
            Err(o) => return reject(io, &o),
        },
    };
    let e = if e.dimension < 2 { e.padded_to(2) } else { e };
    let svg = emit_svg(g, &e, cfg).map_err(|e| e.to_string())?;
    write_output(io, out, &svg)?;
    Ok(Outcome::Yes)
}
