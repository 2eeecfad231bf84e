//! Command-line surface for `coxcube`.
//!
//! [`run_command`] parses an argument vector, runs the command and returns
//! the exit status with the rendered output. Exit status 0 means success,
//! 1 a domain failure (an invalid square, no solution, …) and 2 a usage
//! error.

pub mod json;
pub mod render;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxcube::cube::{
    cube_canonical, cube_collapse, cube_flip, cube_from_terminal_edges, cube_validate, square_complete,
    square_reorient, square_validate, CoxeterSquare, ReorientMove,
};
use coxcube::generic::{CoxeterMatrix, GenericSystem, RootTable, DEFAULT_ROOT_CAP};
use coxcube::groupoid::{decompose_morphism, nu, GroupoidMorphism, NuGenerator};
use coxcube::rect::{
    compatible_subtriangles, enumerate_cube_classes, edge_set, flip_subtriangle, partition_to_tree,
    rectangle_of_element, tree_canonical, tree_to_partition, BinaryTree, RectanglePartition,
    SubtriangleInterval, DEFAULT_ENUMERATION_BOUND,
};
use coxcube::transfer::{solve_transfers, transfer_check, transfer_image};
use coxcube::{GeneratorSet, Permutation, Rank, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

/// Environment variable holding the default enumeration bound.
pub const BOUND_ENV: &str = "COXCUBE_BOUND";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Lib(#[from] coxcube::Error),
}

impl CliError {
    pub fn status(&self) -> i32 {
        use coxcube::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
            CliError::Lib(e) => match e {
                E::InvalidPartition(_)
                | E::InvalidCube(_)
                | E::NotARectangle
                | E::IncompatibleSubtriangle { .. }
                | E::InvalidMorphism(_)
                | E::CapExceeded(_)
                | E::NotReduced
                | E::InvalidInversionSet
                | E::NotOrthogonal => 1,
                _ => 2,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Ascii,
}

#[derive(Debug, Parser)]
#[command(name = "coxcube", version, about = "Coxeter squares, n-cubes, rectangle partitions and binary trees")]
pub struct Cli {
    /// Rank n of A_n, for commands that take elements.
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest rank accepted by the exhaustive enumerations.
    #[arg(long, global = true, env = BOUND_ENV, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub bound: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coxeter squares (w, x, y, z) with wx = yz and w(Φ_x) = Φ_y.
    #[command(subcommand)]
    Square(SquareCmd),
    /// Coxeter n-cubes; CUBE arguments are JSON text, a file, or `-`.
    #[command(subcommand)]
    Cube(CubeCmd),
    /// The equation w(Φ_x) = Φ_y.
    #[command(subcommand)]
    Transfer(TransferCmd),
    /// Based rectangle partitions of the root poset.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Binary trees as nested pairs, e.g. [[0,0],0].
    #[command(subcommand)]
    Tree(TreeCmd),
    /// Edge_n, the elements whose inversion set is a based rectangle.
    #[command(subcommand)]
    Edge(EdgeCmd),
    /// The generator ν(α, Π_base) = w_{base∪{α}} w_base.
    Nu {
        #[arg(long)]
        alpha: usize,
        #[arg(long, default_value = "")]
        base: String,
    },
    /// Decomposes a morphism (Π_target, w, Π_source) into ν generators.
    Decompose {
        #[arg(long, default_value = "")]
        source: String,
        #[arg(long, default_value = "")]
        target: String,
        element: String,
    },
    /// Numeric engine for arbitrary Coxeter matrices.
    #[command(subcommand)]
    Generic(GenericCmd),
}

#[derive(Debug, Subcommand)]
pub enum SquareCmd {
    Check { w: String, x: String, y: String, z: String },
    Complete { x1: String, x2: String },
    Reorient {
        /// diagonal, flip_horizontal or flip_vertical
        #[arg(long = "move")]
        mv: String,
        w: String,
        x: String,
        y: String,
        z: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CubeCmd {
    /// Cube classes modulo reorientation, with representatives.
    Enumerate,
    Validate { cube: String },
    /// Rebuilds a cube from terminal edges listed in direction order.
    FromEdges {
        #[arg(required = true)]
        edges: Vec<String>,
    },
    Flip {
        cube: String,
        #[arg(long)]
        direction: usize,
    },
    Canonical { cube: String },
    Collapse { cube: String, i: usize, j: usize },
}

#[derive(Debug, Subcommand)]
pub enum TransferCmd {
    Check { w: String, x: String, y: String },
    Image { w: String, x: String },
    Solve { x: String, y: String },
}

#[derive(Debug, Subcommand)]
pub enum PartitionCmd {
    ToTree { partition: String },
    Validate { partition: String },
    Flip {
        partition: String,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        c: usize,
    },
    Show { partition: String },
}

#[derive(Debug, Subcommand)]
pub enum TreeCmd {
    ToPartition { tree: String },
    Canonical { tree: String },
}

#[derive(Debug, Subcommand)]
pub enum EdgeCmd {
    List,
    Count,
}

#[derive(Debug, Subcommand)]
pub enum GenericCmd {
    /// Positive roots of the system.
    Roots {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, default_value_t = DEFAULT_ROOT_CAP)]
        cap: usize,
    },
    /// Samples word pairs and checks N(xy) = N(x) Δ x N(y) x⁻¹.
    CheckCocycle {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_ROOT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Matrix JSON (text or file), or a shorthand: A3, B3, I2(5), I2(inf).
    #[arg(long)]
    pub matrix: String,
}

/// Exit status and rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command; `args` excludes the program name.
pub fn run_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("coxcube")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                Outcome { status, stdout: text, stderr: String::new() }
            } else {
                Outcome { status, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(Report { text, success }) => Outcome { status: if success { 0 } else { 1 }, stdout: text, stderr: String::new() },
        Err(e) => Outcome { status: e.status(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Report {
    text: String,
    success: bool,
}

struct Output {
    json: Value,
    dot: Option<String>,
    ascii: Option<String>,
    success: bool,
}

impl Output {
    fn json(json: Value) -> Self {
        Output { json, dot: None, ascii: None, success: true }
    }

    fn dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    fn ascii(mut self, ascii: String) -> Self {
        self.ascii = Some(ascii);
        self
    }

    fn success(mut self, success: bool) -> Self {
        self.success = success;
        self
    }
}

fn finish(format: Format, out: Output) -> Result<Report, CliError> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Dot => out.dot.ok_or_else(|| CliError::Usage("this command has no dot output".into()))?,
        Format::Ascii => out.ascii.ok_or_else(|| CliError::Usage("this command has no ascii output".into()))?,
    };
    Ok(Report { text, success: out.success })
}

/// Parses `[3,1,2]` or a word such as `s2 s1` / `s2*s1` in `A_rank`.
pub fn parse_element(rank: Rank, text: &str) -> Result<Permutation, coxcube::Error> {
    Permutation::parse(rank, text)
}

fn load_text(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') || trimmed == "0" {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("cannot read {arg:?}: {e}")))
}

fn load_json(arg: &str) -> Result<Value, CliError> {
    let text = load_text(arg)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))
}

/// Reads a matrix from JSON or from a shorthand name.
pub fn parse_matrix(arg: &str) -> Result<CoxeterMatrix, CliError> {
    let compact: String = arg.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase();
    let parse_n = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1);
    if let Some(rest) = compact.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        if rest == "INF" || rest == "∞" || rest == "0" {
            return Ok(CoxeterMatrix::dihedral(0));
        }
        return match rest.parse::<u32>() {
            Ok(m) if m >= 2 => Ok(CoxeterMatrix::dihedral(m)),
            _ => Err(CliError::Usage(format!("bad dihedral order in {arg:?}"))),
        };
    }
    if let Some(n) = compact.strip_prefix('A').and_then(parse_n) {
        return Ok(CoxeterMatrix::type_a(n));
    }
    if let Some(n) = compact.strip_prefix('B').and_then(parse_n).filter(|&n| n >= 2) {
        return Ok(CoxeterMatrix::type_b(n));
    }
    json::matrix_from_json(&load_json(arg)?)
}

struct Ctx<'a> {
    cli: &'a Cli,
}

impl Ctx<'_> {
    fn rank(&self) -> Result<Rank, CliError> {
        let n = self.cli.rank.ok_or_else(|| CliError::Usage("--rank is required for this command".into()))?;
        Ok(Rank::new(n)?)
    }

    fn element(&self, text: &str) -> Result<Permutation, CliError> {
        Ok(parse_element(self.rank()?, text)?)
    }

    fn generators(&self, text: &str) -> Result<GeneratorSet, CliError> {
        Ok(GeneratorSet::parse(self.rank()?, text)?)
    }
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let ctx = Ctx { cli };
    let out = match &cli.command {
        Command::Square(cmd) => square(&ctx, cmd)?,
        Command::Cube(cmd) => cube(&ctx, cmd)?,
        Command::Transfer(cmd) => transfer(&ctx, cmd)?,
        Command::Partition(cmd) => partition(cmd)?,
        Command::Tree(cmd) => tree(&ctx, cmd)?,
        Command::Edge(cmd) => edge(&ctx, cmd)?,
        Command::Nu { alpha, base } => {
            let g = nu(ctx.rank()?, *alpha, &ctx.generators(base)?)?;
            Output::json(nu_json(&g))
        }
        Command::Decompose { source, target, element } => {
            let m = GroupoidMorphism::new(ctx.generators(source)?, ctx.element(element)?, ctx.generators(target)?)?;
            let gens = decompose_morphism(&m)?;
            Output::json(json!({
                "source": m.source().iter().collect::<Vec<_>>(),
                "target": m.target().iter().collect::<Vec<_>>(),
                "element": json::element_summary(m.element()),
                "generators": gens.iter().map(nu_json).collect::<Vec<_>>(),
            }))
        }
        Command::Generic(cmd) => generic(&ctx, cmd)?,
    };
    finish(cli.format, out)
}

fn nu_json(g: &NuGenerator) -> Value {
    json!({
        "alpha": g.alpha,
        "base": g.base.iter().collect::<Vec<_>>(),
        "element": g.element.one_line(),
        "word": g.element.canonical_reduced_word().to_string(),
    })
}

fn square(ctx: &Ctx, cmd: &SquareCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        SquareCmd::Check { w, x, y, z } => {
            let q = CoxeterSquare::new(ctx.element(w)?, ctx.element(x)?, ctx.element(y)?, ctx.element(z)?);
            let valid = square_validate(&q)?;
            Output::json(json!({ "valid": valid, "square": json::square_to_json(&q) })).success(valid)
        }
        SquareCmd::Complete { x1, x2 } => match square_complete(&ctx.element(x1)?, &ctx.element(x2)?) {
            Some(q) => Output::json(json!({ "square": json::square_to_json(&q) })),
            None => Output::json(json!({ "square": null })).success(false),
        },
        SquareCmd::Reorient { mv, w, x, y, z } => {
            let mv: ReorientMove = mv.parse()?;
            let q = CoxeterSquare::new(ctx.element(w)?, ctx.element(x)?, ctx.element(y)?, ctx.element(z)?);
            if !square_validate(&q)? {
                return Err(CliError::Domain(format!("{q} is not a Coxeter square")));
            }
            Output::json(json!({ "move": mv.to_string(), "square": json::square_to_json(&square_reorient(&q, mv)) }))
        }
    })
}

fn cube_output(c: &coxcube::cube::CoxeterCube) -> Output {
    Output::json(json::cube_to_json(c)).dot(render::cube_dot(c))
}

fn cube(ctx: &Ctx, cmd: &CubeCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        CubeCmd::Enumerate => {
            let rank = ctx.rank()?;
            let classes = enumerate_cube_classes(rank, ctx.cli.bound)?;
            let mut ascii = format!("{} cube class(es) in {rank}\n", classes.len());
            for (k, class) in classes.iter().enumerate() {
                ascii.push_str(&format!("\nclass {} tree {}\n", k + 1, class.tree));
                ascii.push_str(&render::partition_ascii(&class.partition));
            }
            Output::json(json!({
                "rank": rank.get(),
                "count": classes.len(),
                "classes": classes.iter().map(|class| json!({
                    "tree": json::tree_to_json(&class.tree),
                    "partition": class.partition.triples(),
                    "terminal_edges": class.cube.terminal_edges().iter().map(json::element_summary).collect::<Vec<_>>(),
                    "canonical": json::terminal_to_json(&cube_canonical(&class.cube)),
                })).collect::<Vec<_>>(),
            }))
            .ascii(ascii)
        }
        CubeCmd::Validate { cube } => {
            let c = json::cube_from_json(&load_json(cube)?)?;
            let valid = cube_validate(&c);
            Output::json(json!({ "valid": valid })).success(valid)
        }
        CubeCmd::FromEdges { edges } => {
            let terminal = edges.iter().map(|e| ctx.element(e)).collect::<Result<Vec<_>, _>>()?;
            let c = cube_from_terminal_edges(&terminal)
                .ok_or_else(|| CliError::Domain("these terminal edges do not determine a Coxeter cube".into()))?;
            cube_output(&c)
        }
        CubeCmd::Flip { cube, direction } => {
            let c = json::cube_from_json(&load_json(cube)?)?;
            cube_output(&cube_flip(&c, *direction)?)
        }
        CubeCmd::Canonical { cube } => {
            let c = json::cube_from_json(&load_json(cube)?)?;
            if !cube_validate(&c) {
                return Err(CliError::Domain("input is not a valid Coxeter cube".into()));
            }
            Output::json(json!({ "canonical": json::terminal_to_json(&cube_canonical(&c)) }))
        }
        CubeCmd::Collapse { cube, i, j } => {
            let c = json::cube_from_json(&load_json(cube)?)?;
            cube_output(&cube_collapse(&c, *i, *j)?)
        }
    })
}

fn transfer(ctx: &Ctx, cmd: &TransferCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        TransferCmd::Check { w, x, y } => {
            let holds = transfer_check(&ctx.element(w)?, &ctx.element(x)?, &ctx.element(y)?)?;
            Output::json(json!({ "holds": holds })).success(holds)
        }
        TransferCmd::Image { w, x } => {
            let (w, x) = (ctx.element(w)?, ctx.element(x)?);
            let image = transfer_image(&w, &x)?;
            let ascii = match &image {
                Some(y) => render::root_set_ascii(w.rank(), &y.inversion_set()),
                None => "no image\n".to_string(),
            };
            Output::json(json!({ "y": image.as_ref().map(json::element_summary) }))
                .ascii(ascii)
                .success(image.is_some())
        }
        TransferCmd::Solve { x, y } => {
            let solutions = solve_transfers(&ctx.element(x)?, &ctx.element(y)?)?;
            Output::json(json!({ "solutions": solutions.iter().map(json::element_summary).collect::<Vec<_>>() }))
                .success(!solutions.is_empty())
        }
    })
}

fn partition_output(p: &RectanglePartition) -> Output {
    Output::json(json::partition_to_json(p)).ascii(render::partition_ascii(p))
}

fn partition(cmd: &PartitionCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        PartitionCmd::ToTree { partition } => {
            let p = json::partition_from_json(&load_json(partition)?)?;
            let t = partition_to_tree(&p);
            Output::json(json::tree_to_json(&t)).dot(render::tree_dot(&t))
        }
        PartitionCmd::Validate { partition } => match json::partition_from_json(&load_json(partition)?) {
            Ok(p) => Output::json(json!({
                "valid": true,
                "compatible_subtriangles": compatible_subtriangles(&p).iter().map(|t| [t.a, t.c]).collect::<Vec<_>>(),
            }))
            .ascii(render::partition_ascii(&p)),
            Err(CliError::Lib(e)) if CliError::Lib(e.clone()).status() == 1 || matches!(e, coxcube::Error::MalformedRectangle { .. }) => {
                Output::json(json!({ "valid": false, "reason": e.to_string() })).success(false)
            }
            Err(e) => return Err(e),
        },
        PartitionCmd::Flip { partition, a, c } => {
            let p = json::partition_from_json(&load_json(partition)?)?;
            let t = SubtriangleInterval::new(p.rank(), *a, *c)?;
            partition_output(&flip_subtriangle(&p, t)?)
        }
        PartitionCmd::Show { partition } => {
            let p = json::partition_from_json(&load_json(partition)?)?;
            let t = partition_to_tree(&p);
            Output::json(json!({
                "partition": json::partition_to_json(&p),
                "tree": json::tree_to_json(&t),
                "compatible_subtriangles": compatible_subtriangles(&p).iter().map(|t| [t.a, t.c]).collect::<Vec<_>>(),
                "terminal_edges": p.rectangles().iter().map(|&r| json::element_summary(&coxcube::rect::element_of_rectangle(r))).collect::<Vec<_>>(),
            }))
            .ascii(render::partition_ascii(&p))
        }
    })
}

fn load_tree(arg: &str) -> Result<BinaryTree, CliError> {
    json::tree_from_json(&load_json(arg)?)
}

fn tree(ctx: &Ctx, cmd: &TreeCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        TreeCmd::ToPartition { tree } => {
            let t = load_tree(tree)?;
            let rank = match ctx.cli.rank {
                Some(_) => ctx.rank()?,
                None => Rank::new(t.leaves() - 1)?,
            };
            partition_output(&tree_to_partition(rank, &t)?)
        }
        TreeCmd::Canonical { tree } => {
            let t = tree_canonical(&load_tree(tree)?);
            Output::json(json::tree_to_json(&t)).dot(render::tree_dot(&t))
        }
    })
}

fn edge(ctx: &Ctx, cmd: &EdgeCmd) -> Result<Output, CliError> {
    let rank = ctx.rank()?;
    let edges = edge_set(rank, ctx.cli.bound)?;
    Ok(match cmd {
        EdgeCmd::List => {
            let mut ascii = String::new();
            for x in &edges {
                ascii.push_str(&format!("{x} = {}\n", x.canonical_reduced_word()));
                ascii.push_str(&render::root_set_ascii(rank, &x.inversion_set()));
            }
            Output::json(json!({
                "rank": rank.get(),
                "elements": edges.iter().map(|x| {
                    let r = rectangle_of_element(x).expect("edge elements are rectangles");
                    json!({ "one_line": x.one_line(), "word": x.canonical_reduced_word().to_string(), "rectangle": r.triple() })
                }).collect::<Vec<_>>(),
            }))
            .ascii(ascii)
        }
        EdgeCmd::Count => Output::json(json!({ "rank": rank.get(), "count": edges.len() })),
    })
}

/// Indices of `N(xy)` and of `N(x) Δ x N(y) x⁻¹` for one pair of words.
pub fn cocycle_sides(
    system: &GenericSystem<f64>,
    table: &RootTable<f64>,
    x: &Word,
    y: &Word,
) -> Result<(BTreeSet<usize>, BTreeSet<usize>), CliError> {
    let ex = system.evaluate_word(x)?;
    let ey = system.evaluate_word(y)?;
    let lhs = system.reflection_cocycle(table, &system.compose(&ex, &ey));
    let nx = system.reflection_cocycle(table, &ex);
    let conj = system.conjugate_cocycle(table, &ex, &system.reflection_cocycle(table, &ey));
    Ok((lhs, nx.symmetric_difference(&conj).copied().collect()))
}

/// A uniformly random word with length at most `max_len` and no letter
/// repeated back to back.
pub fn random_word(rng: &mut impl Rng, generators: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<usize> = Vec::with_capacity(len);
    while letters.len() < len {
        let s = rng.gen_range(1..=generators);
        if letters.last() != Some(&s) || generators == 1 {
            letters.push(s);
        }
    }
    Word::new(letters)
}

fn generic(ctx: &Ctx, cmd: &GenericCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        GenericCmd::Roots { matrix, cap } => {
            let system: GenericSystem<f64> = GenericSystem::new(parse_matrix(&matrix.matrix)?)?;
            let table = system.generate_roots(*cap)?;
            Output::json(json!({
                "matrix": json::matrix_to_json(system.matrix()),
                "count": table.len(),
                "roots": table.roots().iter().map(|r| r.coefficients.clone()).collect::<Vec<_>>(),
            }))
        }
        GenericCmd::CheckCocycle { matrix, samples, max_len, cap } => {
            let system: GenericSystem<f64> = GenericSystem::new(parse_matrix(&matrix.matrix)?)?;
            let table = system.generate_roots(*cap)?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.cli.seed);
            let mut violations = Vec::new();
            for _ in 0..*samples {
                let x = random_word(&mut rng, system.size(), *max_len);
                let y = random_word(&mut rng, system.size(), *max_len);
                let (lhs, rhs) = cocycle_sides(&system, &table, &x, &y)?;
                if lhs != rhs {
                    violations.push(json!({ "x": x.to_string(), "y": y.to_string() }));
                }
            }
            let ok = violations.is_empty();
            Output::json(json!({ "checked": samples, "seed": ctx.cli.seed, "violations": violations })).success(ok)
        }
    })
}
