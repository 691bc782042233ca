//! The `wallplates` command line.
//!
//! Exit status: 0 when solved or verified, 1 when there is no solution or a
//! check fails, 2 on bad input.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::fixtures::{self, Fixture, Origin, Period, Scope};
use crate::format::PuzzleFile;
use crate::lattice::{norm_table, GridKind, SublatticeSpec};
use crate::perm::Perm;
use crate::puzzle::{Classification, Plate, Puzzle, Solution, SolveOptions};
use crate::render;
use crate::wallpaper::{enumerate_assignments, parse_table, relations_for, verify_assignment};

#[derive(Parser, Debug)]
#[command(
    name = "wallplates",
    version,
    about = "Periodic plate puzzles on toroidal boards"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sublattice data for a period, or the norm tables of the grids.
    Lattice(LatticeArgs),
    /// Enumerate or verify the assignments of a wallpaper signature.
    Wallpaper(WallpaperArgs),
    /// Solve a puzzle file or named fixture.
    Solve(SolveArgs),
    /// Same as `solve --classify`.
    Classify(SolveArgs),
    /// Draw a board, or one of its natural solutions, as SVG.
    Render(RenderArgs),
    /// The bundled examples.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    /// Period vectors `p1 q1 p2 q2`.
    #[arg(long, num_args = 4, value_names = ["P1", "Q1", "P2", "Q2"], allow_negative_numbers = true, conflicts_with = "table")]
    pub spec: Option<Vec<i64>>,
    /// Print the norm table of a grid.
    #[arg(long, value_enum)]
    pub table: Option<Grid>,
    /// Largest `p` and `q` in the table.
    #[arg(long, default_value_t = 6)]
    pub max: i64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Grid {
    Triangular,
    Square,
}

#[derive(Args, Debug)]
pub struct WallpaperArgs {
    /// Signature name such as p4gm.
    pub signature: String,
    /// Largest degree to enumerate.
    #[arg(long, conflicts_with = "verify")]
    pub n: Option<usize>,
    /// Check every row of a table file, or of the bundled table when the
    /// path does not exist.
    #[arg(long, value_name = "FILE")]
    pub verify: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// A puzzle file, or the name of a bundled fixture.
    pub input: String,
    /// List every natural solution with its group order.
    #[arg(long)]
    pub all: bool,
    /// Group natural solutions into equivalence classes and check the
    /// fixture's claims.
    #[arg(long)]
    pub classify: bool,
    /// Fix a plate on a face, given as `FACE=PLATE` with FACE an index or
    /// `center`. Only solutions symmetric under that face's rotation remain.
    #[arg(long, value_name = "FACE=PLATE")]
    pub pin: Option<String>,
    /// The permutation paired with the pinned face's rotation.
    #[arg(long, value_name = "PERM", requires = "pin")]
    pub rotation_perm: Option<String>,
    /// Stop after this many solutions.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    /// A puzzle file, or the name of a bundled fixture.
    pub input: String,
    /// Index of the natural solution to draw.
    #[arg(long, conflicts_with = "maximal")]
    pub solution: Option<usize>,
    /// Draw a natural solution with the largest group.
    #[arg(long)]
    pub maximal: bool,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum FixturesAction {
    /// Name, period origin and summary of every fixture.
    List,
    /// Recompute the claims of one fixture, or of all.
    Check { name: Option<String> },
}

/// Outcome of a command.
enum Status {
    Ok,
    NoSolution,
}

type Outcome = Result<Status, String>;

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::NoSolution) => ExitCode::from(1),
        Err(msg) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut dyn std::io::Write) -> Outcome {
    let mut text = String::new();
    let status = match command {
        Command::Lattice(a) => lattice(a, &mut text),
        Command::Wallpaper(a) => wallpaper(a, &mut text),
        Command::Solve(a) => solve(a, &mut text),
        Command::Classify(a) => solve(
            SolveArgs {
                classify: true,
                ..a
            },
            &mut text,
        ),
        Command::Render(a) => return render_cmd(a, out),
        Command::Fixtures { action } => fixtures_cmd(action, &mut text),
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    status
}

macro_rules! say {
    ($buf:expr, $($t:tt)*) => {{
        use std::fmt::Write as _;
        let _ = writeln!($buf, $($t)*);
    }};
}

fn lattice(a: LatticeArgs, out: &mut String) -> Outcome {
    if let Some(v) = a.spec {
        let s = SublatticeSpec::new(v[0], v[1], v[2], v[3]).map_err(|e| e.to_string())?;
        let c = s.cycle_counts();
        let conn = s.build_labeling().is_connected();
        say!(out, "period {s}");
        say!(
            out,
            "n={} mu_q={} n/mu_q={} mu_p={} n/mu_p={}",
            s.index(),
            c.mu_q,
            c.u_cycle_len,
            c.mu_p,
            c.v_cycle_len
        );
        say!(
            out,
            "translations {}",
            if conn { "connected" } else { "not connected" }
        );
        return Ok(Status::Ok);
    }
    let Some(grid) = a.table else {
        return Err("give --spec P1 Q1 P2 Q2 or --table GRID".into());
    };
    if a.max < 0 {
        return Err("--max must be non-negative".into());
    }
    let kind = match grid {
        Grid::Triangular => GridKind::Triangular,
        Grid::Square => GridKind::Square,
    };
    let table = norm_table(kind, a.max);
    let width = table
        .iter()
        .flatten()
        .map(|n| n.to_string().len())
        .max()
        .unwrap_or(1)
        .max(3);
    let mut header = format!("{:>width$}", "q\\p");
    for p in 0..=a.max {
        header += &format!(" {p:>width$}");
    }
    say!(out, "{header}");
    for (q, row) in table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|n| format!("{n:>width$}")).collect();
        say!(out, "{q:>width$} {}", cells.join(" "));
    }
    Ok(Status::Ok)
}

fn wallpaper(a: WallpaperArgs, out: &mut String) -> Outcome {
    let sig = relations_for(&a.signature).map_err(|e| e.to_string())?;
    if let Some(path) = a.verify {
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => fixtures::wallpaper_table(sig.name)
                .filter(|_| path.file_stem().is_some_and(|s| s == sig.name))
                .ok_or_else(|| format!("{}: {e}", path.display()))?
                .to_string(),
        };
        let rows = parse_table(&sig, &text).map_err(|e| e.to_string())?;
        let mut failed = 0;
        for row in &rows {
            let rep = verify_assignment(&sig, &row.assignment, &row.declared);
            if rep.passed() {
                say!(
                    out,
                    "line {:>3} ok   {}",
                    row.line,
                    row.assignment.display(&sig)
                );
            } else {
                failed += 1;
                let why: Vec<&str> = rep.failures().iter().map(|c| c.label.as_str()).collect();
                say!(
                    out,
                    "line {:>3} FAIL {} ({})",
                    row.line,
                    row.assignment.display(&sig),
                    why.join("; ")
                );
            }
        }
        say!(out, "{} rows, {} failed", rows.len(), failed);
        return Ok(if failed == 0 {
            Status::Ok
        } else {
            Status::NoSolution
        });
    }
    let n = a.n.unwrap_or(sig.bound);
    let found = enumerate_assignments(&sig, n).map_err(|e| e.to_string())?;
    say!(
        out,
        "n  {}",
        sig.symbols()
            .iter()
            .map(char::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    for x in &found {
        say!(out, "{:<2} {}", x.degree, x.display(&sig));
    }
    say!(out, "{} rows", found.len());
    Ok(Status::Ok)
}

/// A parsed input together with the fixture it came from, if any.
struct Input {
    file: PuzzleFile,
    fixture: Option<&'static Fixture>,
}

fn load(input: &str) -> Result<Input, String> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{input}: {e}"))?;
        let file = PuzzleFile::parse(&text).map_err(|e| format!("{input}: {e}"))?;
        let fixture = fixtures::catalog().iter().find(|f| {
            path.file_stem()
                .is_some_and(|s| f.name.starts_with(&*s.to_string_lossy()))
                && f.file().ok().as_ref() == Some(&file)
        });
        return Ok(Input { file, fixture });
    }
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let fixture = fixtures::get(&stem)
        .ok()
        .or_else(|| {
            fixtures::catalog()
                .iter()
                .find(|f| f.name.starts_with(&stem) && !stem.is_empty())
        })
        .ok_or_else(|| format!("{input}: no such file or fixture"))?;
    let file = fixture.file().map_err(|e| e.to_string())?;
    Ok(Input {
        file,
        fixture: Some(fixture),
    })
}

fn describe(p: &Puzzle, s: &Solution) -> String {
    let parts: Vec<String> = s
        .placement
        .iter()
        .enumerate()
        .map(|(f, &(t, r))| format!("{f}:{}@{r}", p.plates.iter().nth(t).expect("plate index").0))
        .collect();
    parts.join(" ")
}

fn solve(a: SolveArgs, out: &mut String) -> Outcome {
    let input = load(&a.input)?;
    let puzzle = input.file.puzzle().map_err(|e| e.to_string())?;
    let mut opts = SolveOptions {
        limit: a.limit,
        ..SolveOptions::default()
    };
    if let Some(pin) = &a.pin {
        let (face, plate) = pin.split_once('=').ok_or("--pin takes FACE=PLATE")?;
        let face = match face {
            "center" | "centre" => puzzle.board.center_face(),
            f => f.parse::<usize>().map_err(|_| format!("bad face `{f}`"))?,
        };
        if face >= puzzle.board.faces.len() {
            return Err(format!("face {face} out of range"));
        }
        let plate: Plate = plate
            .parse()
            .map_err(|e: crate::puzzle::PuzzleError| e.to_string())?;
        let rot = puzzle
            .board
            .face_rotation(face)
            .ok_or("the pinned face has no rotation")?;
        match &a.rotation_perm {
            Some(text) => opts.require.push((
                Perm::parse(text, puzzle.degree()).map_err(|e| e.to_string())?,
                rot,
            )),
            None => opts.symmetric_under.push(rot),
        }
        say!(out, "pinned {plate} on face {face}");
        opts.pin = Some((face, plate));
    }
    let scoped = opts.pin.is_none()
        && a.limit.is_none()
        && input.fixture.is_some_and(|f| f.scope != Scope::All);
    let solutions = if scoped {
        let f = input.fixture.expect("checked");
        let c = f.classify(&puzzle).map_err(|e| e.to_string())?;
        if let Scope::RotationAtOrigin(k) = f.scope {
            say!(
                out,
                "searching solutions with a {k}-fold rotation about the origin"
            );
        }
        c.solutions
    } else {
        puzzle.solve(&opts).map_err(|e| e.to_string())?
    };
    say!(out, "{} solutions", solutions.len());
    if solutions.is_empty() {
        return Ok(Status::NoSolution);
    }
    if opts.pin.is_some() || a.limit.is_some() {
        for (i, s) in solutions.iter().enumerate() {
            let g = puzzle.solution_group(s).map_err(|e| e.to_string())?.order();
            say!(out, "solution {i}: group {g}: {}", describe(&puzzle, s));
        }
        return Ok(Status::Ok);
    }
    let c = puzzle
        .classify_solutions(solutions)
        .map_err(|e| e.to_string())?;
    say!(
        out,
        "{} natural solutions, largest group {}",
        c.natural.len(),
        c.max_group_order()
    );
    if a.all {
        for (i, s) in c.natural.iter().enumerate() {
            let g = puzzle.solution_group(s).map_err(|e| e.to_string())?.order();
            say!(out, "natural {i}: group {g}: {}", describe(&puzzle, s));
        }
    } else if !a.classify {
        say!(out, "first: {}", describe(&puzzle, &c.solutions[0]));
    }
    if !a.classify {
        return Ok(Status::Ok);
    }
    report_classes(&c, out);
    match input.fixture {
        Some(f) => report_claims(f, out),
        None => Ok(Status::Ok),
    }
}

fn report_classes(c: &Classification, out: &mut String) {
    say!(
        out,
        "{} classes, {} natural solutions, |G_P| = {}",
        c.classes.len(),
        c.natural.len(),
        c.plate_group_order
    );
    say!(
        out,
        "{:>5} {:>6} {:>8} {:>11}",
        "class",
        "size",
        "|G_eps|",
        "stabilizer"
    );
    for (i, k) in c.classes.iter().enumerate() {
        say!(
            out,
            "{:>5} {:>6} {:>8} {:>11}",
            i,
            k.members.len(),
            k.solution_group_order,
            k.stabilizer_order
        );
    }
}

fn report_claims(f: &Fixture, out: &mut String) -> Outcome {
    let checks = f.check().map_err(|e| e.to_string())?;
    let mut ok = true;
    for c in &checks {
        ok &= c.passed;
        let tag = match c.origin {
            Origin::Quoted => "quoted",
            Origin::Derived => "derived",
        };
        let mark = if c.passed { "PASS" } else { "FAIL" };
        say!(
            out,
            "{mark} {} [{tag}] {}: expected {}, found {}",
            f.name,
            c.claim,
            c.expected,
            c.found
        );
    }
    Ok(if ok { Status::Ok } else { Status::NoSolution })
}

fn render_cmd(a: RenderArgs, out: &mut dyn std::io::Write) -> Outcome {
    let input = load(&a.input)?;
    let board = input.file.board().map_err(|e| e.to_string())?;
    let wanted = a.solution.is_some() || a.maximal;
    let svg = if wanted {
        let puzzle = input.file.puzzle().map_err(|e| e.to_string())?;
        let c = match input.fixture {
            Some(f) => f.classify(&puzzle),
            None => puzzle.classify(),
        }
        .map_err(|e| e.to_string())?;
        let index = match a.solution {
            Some(i) => i,
            None => {
                let best = c.max_group_order();
                c.natural
                    .iter()
                    .position(|s| puzzle.solution_group(s).is_ok_and(|g| g.order() == best))
                    .ok_or("the puzzle has no solution")?
            }
        };
        let sol = c
            .natural
            .get(index)
            .ok_or_else(|| format!("unknown solution {index}: there are {}", c.natural.len()))?;
        render::svg(&board, Some((&puzzle, sol)))
    } else {
        render::svg(&board, None)
    };
    match a.out {
        Some(path) => std::fs::write(&path, svg).map_err(|e| format!("{}: {e}", path.display()))?,
        None => out.write_all(svg.as_bytes()).map_err(|e| e.to_string())?,
    }
    Ok(Status::Ok)
}

fn fixtures_cmd(action: FixturesAction, out: &mut String) -> Outcome {
    match action {
        FixturesAction::List => {
            for f in fixtures::catalog() {
                let period = match f.period {
                    Period::Printed => "printed",
                    Period::Reconstructed => "reconstructed",
                };
                say!(out, "{:<7} period {:<13} {}", f.name, period, f.summary);
                if let Some(note) = f.note {
                    say!(out, "        note: {note}");
                }
            }
            Ok(Status::Ok)
        }
        FixturesAction::Check { name } => {
            let list: Vec<&Fixture> = match name {
                Some(n) => vec![fixtures::get(&n).map_err(|e| e.to_string())?],
                None => fixtures::catalog().iter().collect(),
            };
            let mut status = Status::Ok;
            for f in list {
                if let Status::NoSolution = report_claims(f, out)? {
                    status = Status::NoSolution;
                }
            }
            Ok(status)
        }
    }
}
