//! Command-line front end. Every command writes plain text: graph6, DOT,
//! certificates or CSV.
//!
//! Exit codes: 0 success, 1 certificate rejected, 2 bad input, 3 capacity
//! limit hit, 4 internal inconsistency or a failed bound check.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{
    bounds_report, chromatic_boxicity_check, chromatic_number, edge_clique_cover, focal_count, needs_extra_part,
    REPORT_HEADER,
};
use crate::constructions::{lemma41_cover, thm42_cover};
use crate::engine::{exact_boxicity, verify_cointerval_cover, CointervalCover, EngineConfig, Verdict, DEFAULT_EDGE_CAP};
use crate::error::Error;
use crate::generators::{focalize, mycielski, Family};
use crate::graph::Graph;
use crate::graph6;
use crate::interval::{interval_representation, is_interval};

pub const SURVEY_HEADER: &str =
    "graph6,n,m,box,chi,theta_comp,focal,lb_cor36,ub_thm42,chk_cor36,chk_thm42,chk_thm11,chk_chi_plus1";

pub const DEFAULT_CERTIFICATE_PATH: &str = "boxicity-certificate.txt";

#[derive(Parser, Debug)]
#[command(name = "boxicity", version, about = "Exact boxicity and Mycielski-graph bounds for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Cap {
    /// Largest complement component, in edges, the exhaustive search accepts.
    #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
    max_complement_edges: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph from a family spec and print its graph6 (or DOT).
    Gen {
        spec: String,
        /// Wrap the result in the generalized Mycielski construction M_R.
        #[arg(long)]
        r: Option<usize>,
        /// Add T focal vertices (applied after --r).
        #[arg(long)]
        focalize: Option<usize>,
        #[arg(long)]
        dot: bool,
    },
    /// Exact boxicity with a verified certificate.
    Box {
        graph6: String,
        #[command(flatten)]
        cap: Cap,
        /// Certificate destination.
        #[arg(long, conflicts_with = "stdout")]
        out: Option<PathBuf>,
        /// Print the certificate instead of writing a file.
        #[arg(long)]
        stdout: bool,
    },
    /// Lower and upper bounds on box(M_2(g)) as one CSV row.
    Bounds {
        graph6: String,
        #[command(flatten)]
        cap: Cap,
    },
    /// Interval recognition with a representation when one exists.
    Interval { graph6: String },
    /// Print one of the explicit covering constructions.
    ConstructCover {
        /// Covering of complement(M_2(K_N)).
        #[arg(long, conflicts_with = "thm42", required_unless_present = "thm42")]
        lemma41: Option<usize>,
        /// Covering of complement(M_2(g)) from a minimum clique cover of complement(g).
        #[arg(long)]
        thm42: Option<String>,
    },
    /// Check a certificate against a graph.
    VerifyCover { graph6: String, certificate: PathBuf },
    /// Compute and cross-check every bound for each graph in a graph6 file.
    Survey {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        mycielski_r: usize,
        #[command(flatten)]
        cap: Cap,
    },
}

/// Outcome of a command other than success.
enum Failure {
    Lib(Error),
    Io(String),
    Reject,
    CheckFailed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Reject => return 1,
                Failure::Io(m) => (2, m),
                Failure::CheckFailed(m) => (4, format!("bound check failed: {m}")),
                Failure::Lib(e @ Error::Capacity { .. }) => (3, e.to_string()),
                Failure::Lib(e @ Error::HardFault(_)) => (4, e.to_string()),
                Failure::Lib(e) => (2, e.to_string()),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Gen { spec, r, focalize: t, dot } => {
            let mut g = spec.parse::<Family>()?.build()?;
            if let Some(r) = r {
                g = mycielski(&g, r)?.0;
            }
            if let Some(t) = t {
                g = focalize(&g, t)?;
            }
            if dot {
                write!(out, "{}", g.to_dot())?;
            } else {
                writeln!(out, "{}", graph6::encode(&g))?;
            }
        }
        Command::Box { graph6: s, cap, out: path, stdout } => {
            let g = graph6::decode(&s)?;
            let result = exact_boxicity(&g, &EngineConfig::with_cap(cap.max_complement_edges))?;
            writeln!(out, "box {}", result.value)?;
            if stdout {
                write!(out, "{}", result.certificate)?;
            } else {
                let path = path.unwrap_or_else(|| PathBuf::from(DEFAULT_CERTIFICATE_PATH));
                fs::write(&path, result.certificate.to_string())?;
                writeln!(out, "certificate {}", path.display())?;
            }
        }
        Command::Bounds { graph6: s, cap } => {
            let g = graph6::decode(&s)?;
            let report = bounds_report(&g, &EngineConfig::with_cap(cap.max_complement_edges))?;
            writeln!(out, "{REPORT_HEADER}\n{report}")?;
        }
        Command::Interval { graph6: s } => {
            let g = graph6::decode(&s)?;
            if is_interval(&g)?.is_interval() {
                write!(out, "interval\n{}", interval_representation(&g)?)?;
            } else {
                writeln!(out, "not-interval")?;
            }
        }
        Command::ConstructCover { lemma41, thm42 } => {
            let cover = match (lemma41, thm42) {
                (Some(n), _) => lemma41_cover(n)?,
                (None, Some(s)) => {
                    let g = graph6::decode(&s)?;
                    thm42_cover(&g, &edge_clique_cover(&g.complement())?.1)?
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            write!(out, "{cover}")?;
        }
        Command::VerifyCover { graph6: s, certificate } => {
            let g = graph6::decode(&s)?;
            let text = fs::read_to_string(&certificate)
                .map_err(|e| Failure::Io(format!("{}: {e}", certificate.display())))?;
            let cover: CointervalCover = text.parse()?;
            let verdict = verify_cointerval_cover(&g, &cover)?;
            writeln!(out, "{verdict}")?;
            if let Verdict::Reject(_) = verdict {
                return Err(Failure::Reject);
            }
        }
        Command::Survey { file, mycielski_r, cap } => {
            let text = fs::read_to_string(&file).map_err(|e| Failure::Io(format!("{}: {e}", file.display())))?;
            let graphs = graph6::decode_lines(&text)?;
            let cfg = EngineConfig::with_cap(cap.max_complement_edges);
            writeln!(out, "{SURVEY_HEADER}")?;
            for g in &graphs {
                let row = survey_row(g, mycielski_r, &cfg)?;
                writeln!(out, "{row}")?;
                if let Some(check) = row.failed_check() {
                    return Err(Failure::CheckFailed(format!("{check} on {}", row.graph6)));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail,
    /// Not decidable under the configured caps.
    Skip,
}

impl Check {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Check::Pass
        } else {
            Check::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Check::Pass => "pass",
            Check::Fail => "fail",
            Check::Skip => "skip",
        }
    }
}

/// One line of `survey` output. Unknown numeric fields are left empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub boxicity: Option<usize>,
    pub chi: Option<usize>,
    pub theta_comp: Option<usize>,
    pub focal: usize,
    pub lb_cor36: Option<usize>,
    pub ub_thm42: Option<usize>,
    pub chk_cor36: Check,
    pub chk_thm42: Check,
    pub chk_thm11: Check,
    pub chk_chi_plus1: Check,
}

impl SurveyRow {
    pub fn failed_check(&self) -> Option<&'static str> {
        [
            ("cor3.6", self.chk_cor36),
            ("thm4.2", self.chk_thm42),
            ("thm1.1", self.chk_thm11),
            ("chi+1", self.chk_chi_plus1),
        ]
        .into_iter()
        .find(|(_, c)| *c == Check::Fail)
        .map(|(name, _)| name)
    }
}

impl std::fmt::Display for SurveyRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let o = |x: Option<usize>| x.map_or_else(String::new, |v| v.to_string());
        write!(
            f,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.m,
            o(self.boxicity),
            o(self.chi),
            o(self.theta_comp),
            self.focal,
            o(self.lb_cor36),
            o(self.ub_thm42),
            self.chk_cor36.as_str(),
            self.chk_thm42.as_str(),
            self.chk_thm11.as_str(),
            self.chk_chi_plus1.as_str()
        )
    }
}

fn capped<T>(r: crate::error::Result<T>) -> crate::error::Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Capacity { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Computes one survey row. Capacity limits turn into empty fields and `skip`.
pub fn survey_row(g: &Graph, r: usize, cfg: &EngineConfig) -> crate::error::Result<SurveyRow> {
    let l = focal_count(g);
    let boxicity = capped(exact_boxicity(g, cfg).map(|b| b.value))?;
    let chi = capped(chromatic_number(g))?;
    let clique_cover = capped(edge_clique_cover(&g.complement()))?;
    let theta_comp = clique_cover.as_ref().map(|c| c.0);
    let lb_cor36 = boxicity.map(|b| b + l.div_ceil(2));
    let ub_thm42 = theta_comp.map(|t| t + l.div_ceil(2) + needs_extra_part(l) as usize);

    let (mr, _) = mycielski(g, r)?;
    let box_mr = capped(exact_boxicity(&mr, cfg).map(|b| b.value))?;

    let thm42_cover_len = match (&clique_cover, r) {
        (Some((_, cc)), 2) => Some(thm42_cover(g, cc)?.len()),
        _ => None,
    };
    let chk_thm42 = match (thm42_cover_len, ub_thm42) {
        (Some(parts), Some(ub)) => Check::from_bool(parts <= ub && box_mr.is_none_or(|b| b <= ub)),
        _ => Check::Skip,
    };
    let chk_cor36 = match (lb_cor36, box_mr, thm42_cover_len) {
        (Some(lb), Some(b), _) => Check::from_bool(lb <= b),
        (Some(lb), None, Some(parts)) => Check::from_bool(lb <= parts),
        _ => Check::Skip,
    };
    let chk_thm11 = match capped(chromatic_boxicity_check(g, cfg))? {
        Some(c) => Check::from_bool(c.holds),
        None => Check::Skip,
    };
    let (m2, _) = mycielski(g, 2)?;
    let chk_chi_plus1 = match (chi, capped(chromatic_number(&m2))?) {
        (Some(c), Some(c2)) => Check::from_bool(c2 == c + 1),
        _ => Check::Skip,
    };
    Ok(SurveyRow {
        graph6: graph6::encode(g),
        n: g.n(),
        m: g.edge_count(),
        boxicity,
        chi,
        theta_comp,
        focal: l,
        lb_cor36,
        ub_thm42,
        chk_cor36,
        chk_thm42,
        chk_thm11,
        chk_chi_plus1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("boxicity").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_and_box() {
        let (code, g6, _) = run_str(&["gen", "mycielski:cycle:4:2"]);
        assert_eq!(code, 0);
        let (code, out, _) = run_str(&["box", g6.trim(), "--stdout"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("box 2\nhost "), "{out}");
        let (code, same, _) = run_str(&["gen", "cycle:4", "--r", "2"]);
        assert_eq!((code, same), (0, g6));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["gen", "blob:3"]).0, 2);
        assert_eq!(run_str(&["box", "!!"]).0, 2);
        assert_eq!(run_str(&["nonsense"]).0, 2);
        let (_, g6, _) = run_str(&["gen", "mycielski:cycle:4:2"]);
        let (code, _, err) = run_str(&["box", g6.trim(), "--stdout", "--max-complement-edges", "10"]);
        assert_eq!(code, 3);
        assert!(err.contains("--max-complement-edges"), "{err}");
    }

    #[test]
    fn interval_output() {
        let (_, p4, _) = run_str(&["gen", "path:4"]);
        let (code, out, _) = run_str(&["interval", p4.trim()]);
        assert_eq!(code, 0);
        assert_eq!(out, "interval\n0 0 0\n1 0 1\n2 1 2\n3 2 2\n");
        let (_, c4, _) = run_str(&["gen", "cycle:4"]);
        assert_eq!(run_str(&["interval", c4.trim()]).1, "not-interval\n");
    }

    #[test]
    fn survey_row_for_c4() {
        let c4 = Family::Cycle(4).build().unwrap();
        let row = survey_row(&c4, 2, &EngineConfig::default()).unwrap();
        assert_eq!(row.to_string(), "Cl,4,4,2,2,2,0,2,2,pass,pass,pass,pass");
    }
}
