use crate::report::{Failure, Inputs};
use clap::{Parser, Subcommand};
use crosscap::{BoundaryKind, ClosedSurfaceInfo, OneClass, ShSurface};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "crosscap",
    version,
    about = "Orientability computations over surfaces with crosscaps"
)]
pub struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Numerical tolerance, where the command has one.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Euler characteristic, double and quotient of an sh-surface.
    Surface {
        /// Preset (sphere, disk, disk-crosscap, annulus, mobius, torus), a
        /// compact form like `g1:sc`, or a JSON file.
        #[arg(long)]
        surface: String,
    },
    /// Mod-2 cohomology of closed surfaces.
    Cohomology {
        #[command(subcommand)]
        cmd: CohomologyCmd,
    },
    /// Real bundle pairs.
    Bundle {
        #[command(subcommand)]
        cmd: BundleCmd,
    },
    /// First Stiefel-Whitney class of the determinant line over a loop.
    Holonomy {
        #[arg(long = "loop")]
        loop_file: PathBuf,
    },
    /// Classify a sampled clutching loop.
    Clutch {
        #[arg(long = "loop")]
        loop_file: PathBuf,
    },
    /// Kernel dimension on the disk with a crosscap by collocation.
    Spectral {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        trunc: u32,
        #[arg(long)]
        colloc: u32,
    },
    /// Trapezoidal contour integral for the harmonic extension of `-Re z^2k`.
    Quadrature {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 64)]
        points: u32,
    },
    /// Equivariant real rational maps.
    Realcurve {
        #[command(subcommand)]
        cmd: RealCurveCmd,
    },
    /// Run every acceptance criterion.
    VerifyAll,
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Surface { .. } => "surface".into(),
            Command::Cohomology { cmd } => format!(
                "cohomology {}",
                match cmd {
                    CohomologyCmd::Cup { .. } => "cup",
                    CohomologyCmd::Square { .. } => "square",
                    CohomologyCmd::Whitney { .. } => "whitney",
                    CohomologyCmd::Cokernel { .. } => "cokernel",
                }
            ),
            Command::Bundle { cmd } => format!(
                "bundle {}",
                match cmd {
                    BundleCmd::Index { .. } => "index",
                    BundleCmd::Klein { .. } => "klein",
                }
            ),
            Command::Holonomy { .. } => "holonomy".into(),
            Command::Clutch { .. } => "clutch".into(),
            Command::Spectral { .. } => "spectral".into(),
            Command::Quadrature { .. } => "quadrature".into(),
            Command::Realcurve { cmd } => format!(
                "realcurve {}",
                match cmd {
                    RealCurveCmd::Build { .. } => "build",
                    RealCurveCmd::Check { .. } => "check",
                    RealCurveCmd::Delta { .. } => "delta",
                }
            ),
            Command::VerifyAll => "verify-all".into(),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum CohomologyCmd {
    /// Cup product pairing of two classes, e.g. `--closed o2 --a 1000 --b 0100`.
    Cup {
        /// `o<genus>` or `n<crosscaps>`.
        #[arg(long)]
        closed: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Pairing of a square with the fundamental class.
    Square {
        #[arg(long)]
        closed: String,
        #[arg(long)]
        class: String,
    },
    /// `w2` of a sum of line bundles given by comma-separated `w1` classes.
    Whitney {
        #[arg(long)]
        closed: String,
        #[arg(long)]
        lines: String,
    },
    /// Cokernel of squaring for `Z^free + torsion`, torsion as `4x2,6`.
    Cokernel {
        #[arg(long, default_value_t = 0)]
        free: u32,
        #[arg(long, default_value = "")]
        torsion: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum BundleCmd {
    /// Fredholm index of a real Cauchy-Riemann operator.
    Index {
        #[arg(long)]
        rank: u32,
        #[arg(long, allow_hyphen_values = true)]
        maslov: i64,
        /// `w1` on the standard boundary components, e.g. `10`.
        #[arg(long)]
        std_w1: Option<String>,
        #[arg(long)]
        surface: String,
    },
    /// Equivariant `w2` of a pair over the Klein torus.
    Klein {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = false)]
        twist: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum RealCurveCmd {
    Build {
        #[arg(long)]
        params: PathBuf,
    },
    Check {
        #[arg(long)]
        params: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    Delta {
        #[arg(long)]
        params: PathBuf,
    },
}

pub fn parse_surface(arg: &str, inputs: &mut Inputs) -> Result<ShSurface, Failure> {
    use BoundaryKind::*;
    let preset = match arg {
        "sphere" => Some(ShSurface::new(0, vec![])),
        "torus" => Some(ShSurface::new(1, vec![])),
        "disk" => Some(ShSurface::new(0, vec![Standard])),
        "disk-crosscap" => Some(ShSurface::disk_with_crosscap()),
        "annulus" => Some(ShSurface::new(0, vec![Standard, Standard])),
        "mobius" => Some(ShSurface::new(0, vec![Standard, Crosscap])),
        _ => None,
    };
    if let Some(s) = preset {
        return Ok(s);
    }
    if let Some(rest) = arg.strip_prefix('g') {
        let (genus, kinds) = rest.split_once(':').unwrap_or((rest, ""));
        if let Ok(genus) = genus.parse::<u32>() {
            let boundary = kinds
                .chars()
                .map(|c| match c {
                    's' => Ok(Standard),
                    'c' => Ok(Crosscap),
                    other => Err(Failure::Input(format!(
                        "boundary kind '{other}' is not s or c"
                    ))),
                })
                .collect::<Result<_, _>>()?;
            return Ok(ShSurface::new(genus, boundary));
        }
    }
    inputs.read_json(&PathBuf::from(arg))
}

pub fn parse_closed(arg: &str) -> Result<ClosedSurfaceInfo, Failure> {
    let bad = || {
        Failure::Input(format!(
            "closed surface '{arg}' must look like o<genus> or n<crosscaps>"
        ))
    };
    let (kind, num) = arg.split_at(arg.char_indices().nth(1).map_or(arg.len(), |(i, _)| i));
    let k: u32 = num.parse().map_err(|_| bad())?;
    match kind {
        "o" => Ok(ClosedSurfaceInfo::orientable(k)),
        "n" if k > 0 => Ok(ClosedSurfaceInfo::nonorientable(k)),
        _ => Err(bad()),
    }
}

pub fn parse_class(bits: &str) -> Result<OneClass, Failure> {
    bits.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Failure::Input(format!("'{other}' is not a bit"))),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(OneClass)
}

pub fn parse_torsion(arg: &str) -> Result<Vec<(u64, u32)>, Failure> {
    arg.split(',')
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (m, r) = item.split_once('x').unwrap_or((item, "1"));
            match (m.trim().parse(), r.trim().parse()) {
                (Ok(m), Ok(r)) => Ok((m, r)),
                _ => Err(Failure::Input(format!(
                    "torsion entry '{item}' must be <order> or <order>x<mult>"
                ))),
            }
        })
        .collect()
}
