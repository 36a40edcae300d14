use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use arc3d::coloring::{edge_coloring_vizing, localized_edge_coloring, verify_edge_coloring, verify_localized};
use arc3d::geometry::{perturb, Side};
use arc3d::layout::{
    angular_resolution_3d, bound_checks, default_window, free_layout_with_rotation, slanted_layout, sphere_layout,
    stationary_layout, LayoutError,
};
use arc3d::{ArcDiagram3D, SlantedInterpretation};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{CliError, FormatError};
use crate::generate::{generate, Family};
use crate::graph_file::{emit_graph, parse_graph, ParsedGraph};
use crate::obj::export_obj;
use crate::scene::{emit_scene, parse_scene};

#[derive(Debug, Parser)]
#[command(name = "arc3d", version, about = "3D arc diagrams with certified angular resolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Input document; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Edge-color a graph document (classical, or L-localized).
    ColorEdges {
        #[arg(long)]
        localized: bool,
        /// Window size for --localized (even, >= 2).
        #[arg(long = "L", value_name = "L", requires = "localized")]
        window: Option<usize>,
        #[command(flatten)]
        io: Io,
    },
    /// Lay out a graph document as a 3D scene.
    Layout {
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Window size for the free method (even, >= 2).
        #[arg(long = "L", value_name = "L")]
        window: Option<usize>,
        #[arg(long, value_enum, default_value_t = InterpretationArg::Inplane)]
        slanted_interpretation: InterpretationArg,
        /// Side the slanted arc planes lean to.
        #[arg(long, value_enum, default_value_t = SideArg::Positive)]
        side: SideArg,
        /// Nudge arcs that come closer than --clearance-threshold by this
        /// fraction of the color gap.
        #[arg(long)]
        epsilon_fraction: Option<f64>,
        #[arg(long, default_value_t = 1e-6)]
        clearance_threshold: f64,
        #[arg(long, default_value_t = 33)]
        clearance_samples: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Measure the angular resolution of a scene.
    Measure {
        #[command(flatten)]
        io: Io,
    },
    /// Certify every incident pair of a scene against its guaranteed bound.
    Check {
        #[command(flatten)]
        io: Io,
    },
    /// Export a scene as geometry.
    Export {
        /// Wavefront OBJ polylines (the only format).
        #[arg(long, required = true)]
        obj: bool,
        /// Points per arc (>= 2).
        #[arg(long, default_value_t = 32)]
        samples: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Write a generated graph document.
    Generate {
        #[command(subcommand)]
        family: FamilyArg,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyArg {
    /// Regular star with k leaves.
    Star { k: usize },
    /// k leaves spread over an angle.
    Fan {
        k: usize,
        #[arg(long)]
        spread: f64,
    },
    /// w × h grid.
    Grid { w: usize, h: usize },
    /// Random graph with bounded degree.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Put all vertices within 1e-6 of a line.
        #[arg(long)]
        near_collinear: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Sphere,
    Stationary,
    Slanted,
    Free,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InterpretationArg {
    Inplane,
    Elevation,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Positive,
    Negative,
}

fn read_input(io: &Io, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut text = String::new();
    match &io.input {
        Some(p) if p.as_os_str() != "-" => text = fs::read_to_string(p)?,
        _ => {
            stdin.read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn write_output(path: Option<&PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn check_window(l: usize) -> Result<usize, CliError> {
    if l >= 2 && l.is_multiple_of(2) {
        Ok(l)
    } else {
        Err(CliError::Usage(format!("--L must be an even number >= 2, got {l}")))
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn color_edges(parsed: &ParsedGraph, localized: bool, window: Option<usize>) -> Result<String, CliError> {
    let graph = &parsed.graph;
    if !localized {
        let c = edge_coloring_vizing(graph);
        let conflicts = verify_edge_coloring(graph, &c).map_err(LayoutError::from)?.len();
        return Ok(pretty(&json!({
            "method": "vizing",
            "paletteSize": c.palette_size,
            "colors": c.colors,
            "conflicts": conflicts,
        })));
    }
    let l = check_window(window.unwrap_or_else(|| default_window(graph.max_degree())))?;
    let rot = parsed.effective_rotation()?.ok_or_else(|| {
        FormatError::validation("localized coloring needs vertex coordinates or an explicit rotation")
    })?;
    let c = localized_edge_coloring(graph, &rot, l).map_err(LayoutError::from)?;
    let conflicts = verify_localized(graph, &rot, l, &c).map_err(LayoutError::from)?.len();
    Ok(pretty(&json!({
        "method": "localized",
        "window": l,
        "paletteSize": c.palette_size,
        "colors": c.colors,
        "conflicts": conflicts,
    })))
}

struct LayoutOptions {
    method: MethodArg,
    window: Option<usize>,
    interpretation: SlantedInterpretation,
    side: Side,
    epsilon_fraction: Option<f64>,
    clearance_threshold: f64,
    clearance_samples: usize,
}

fn layout(parsed: &ParsedGraph, opts: &LayoutOptions) -> Result<ArcDiagram3D, CliError> {
    let graph = &parsed.graph;
    let needs_drawing = |name: &str| {
        parsed
            .drawing
            .as_ref()
            .ok_or_else(|| FormatError::validation(format!("the {name} layout needs vertex coordinates")))
    };
    let diagram = match opts.method {
        MethodArg::Sphere => sphere_layout(graph)?,
        MethodArg::Stationary => stationary_layout(graph, needs_drawing("stationary")?)?,
        MethodArg::Slanted => slanted_layout(graph, needs_drawing("slanted")?, opts.interpretation, opts.side)?,
        MethodArg::Free => {
            let drawing = needs_drawing("free")?;
            let window = opts.window.map(check_window).transpose()?;
            let rot = match &parsed.rotation {
                Some(r) => r.clone(),
                None => drawing.rotation_system(graph).map_err(LayoutError::ZeroResolutionDrawing)?,
            };
            free_layout_with_rotation(graph, drawing, &rot, window)?
        }
    };
    match opts.epsilon_fraction {
        None => Ok(diagram),
        Some(eps) => {
            if !(eps >= 0.0 && eps.is_finite()) {
                return Err(CliError::Usage(format!("--epsilon-fraction must be a non-negative number, got {eps}")));
            }
            Ok(perturb(&diagram, eps, opts.clearance_samples, opts.clearance_threshold).map_err(LayoutError::from)?)
        }
    }
}

fn measure(diagram: &ArcDiagram3D) -> Result<String, CliError> {
    let graph = diagram.graph();
    let report = angular_resolution_3d(diagram)?;
    let per_vertex: serde_json::Map<String, serde_json::Value> = report
        .per_vertex_min
        .iter()
        .enumerate()
        .filter_map(|(v, m)| m.map(|m| (graph.vertex_id(v).to_string(), json!(m))))
        .collect();
    let (v, e, f) = report.argmin;
    Ok(pretty(&json!({
        "method": diagram.method().name(),
        "minAngle": report.min_angle,
        "minAngleDegrees": report.min_angle.to_degrees(),
        "argmin": {"vertex": graph.vertex_id(v), "first": e, "second": f},
        "perVertexMin": per_vertex,
    })))
}

fn check(diagram: &ArcDiagram3D, stdout: &mut dyn Write) -> Result<(), CliError> {
    let graph = diagram.graph();
    let checks = bound_checks(diagram);
    let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
    for c in &failed {
        writeln!(
            stdout,
            "FAIL vertex {} edges {} {}: measured {} < guaranteed {} ({})",
            graph.vertex_id(c.vertex),
            c.first,
            c.second,
            c.measured,
            c.guaranteed,
            c.kind.name()
        )?;
    }
    let min = checks.iter().map(|c| c.measured).fold(f64::INFINITY, f64::min);
    if checks.is_empty() {
        writeln!(stdout, "ok: {} layout has no incident pairs", diagram.method().name())?;
    } else {
        writeln!(
            stdout,
            "{}: {} layout, {} pairs checked, {} failed, min angle {}",
            if failed.is_empty() { "ok" } else { "violated" },
            diagram.method().name(),
            checks.len(),
            failed.len(),
            min
        )?;
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::BoundsFailed { failed: failed.len(), total: checks.len() })
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::ColorEdges { localized, window, io } => {
            let parsed = parse_graph(&read_input(&io, stdin)?)?;
            let text = color_edges(&parsed, localized, window)?;
            write_output(io.output.as_ref(), &text, stdout)
        }
        Command::Layout {
            method,
            window,
            slanted_interpretation,
            side,
            epsilon_fraction,
            clearance_threshold,
            clearance_samples,
            io,
        } => {
            let parsed = parse_graph(&read_input(&io, stdin)?)?;
            let opts = LayoutOptions {
                method,
                window,
                interpretation: match slanted_interpretation {
                    InterpretationArg::Inplane => SlantedInterpretation::InPlane,
                    InterpretationArg::Elevation => SlantedInterpretation::Elevation,
                },
                side: match side {
                    SideArg::Positive => Side::Positive,
                    SideArg::Negative => Side::Negative,
                },
                epsilon_fraction,
                clearance_threshold,
                clearance_samples,
            };
            let diagram = layout(&parsed, &opts)?;
            write_output(io.output.as_ref(), &emit_scene(&diagram), stdout)
        }
        Command::Measure { io } => {
            let diagram = parse_scene(&read_input(&io, stdin)?)?;
            write_output(io.output.as_ref(), &measure(&diagram)?, stdout)
        }
        Command::Check { io } => {
            let diagram = parse_scene(&read_input(&io, stdin)?)?;
            match &io.output {
                None => check(&diagram, stdout),
                Some(path) => {
                    let mut buf = Vec::new();
                    let result = check(&diagram, &mut buf);
                    fs::write(path, buf)?;
                    result
                }
            }
        }
        Command::Export { obj: _, samples, io } => {
            if samples < 2 {
                return Err(CliError::Usage(format!("--samples must be at least 2, got {samples}")));
            }
            let diagram = parse_scene(&read_input(&io, stdin)?)?;
            write_output(io.output.as_ref(), &export_obj(&diagram, samples), stdout)
        }
        Command::Generate { family, output } => {
            let family = match family {
                FamilyArg::Star { k } => Family::Star { k },
                FamilyArg::Fan { k, spread } => Family::Fan { k, spread },
                FamilyArg::Grid { w, h } => Family::Grid { w, h },
                FamilyArg::Random { n, d, seed, near_collinear } => Family::Random { n, d, seed, near_collinear },
            };
            let instance = generate(&family).map_err(|e| CliError::Usage(e.to_string()))?;
            write_output(output.as_ref(), &emit_graph(&instance.to_file()), stdout)
        }
    }
}

/// Runs the command line and returns the process exit code: 0 success,
/// 1 usage, 2 invalid input, 3 bound violation.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
