//! The `dytri` command line.
//!
//! Exit codes: 0 success (and "isomorphic" for `iso`), 1 failed self-check,
//! 2 usage error, 3 "not isomorphic", 4 domain error.

pub mod json;
pub mod literal;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::classify::{automorphism_group, census, isomorphic, isomorphic_hats, IsoResult};
use crate::error::Error;
use crate::geometry::{AffineMap, Perm, Triangle};
use crate::hats::{all_normalizations, canonical_form, Hat};

pub use literal::{parse_dyadic, parse_shape, Shape};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_ISOMORPHIC: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "dytri", version, about = "Classify dyadic triangles exactly")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; only the exit code carries the answer.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Representative hats of a triangle under all six vertex roles.
    Normalize {
        /// Triangle literal, e.g. "0,0 1,3 2,0".
        shape: String,
        /// Print only the canonical encoding triple.
        #[arg(long)]
        canonical: bool,
        /// Check every witness map against the input vertices.
        #[arg(long)]
        verify: bool,
    },
    /// Automorphism group of the representative hat T i j m.
    Aut {
        #[arg(allow_negative_numbers = true)]
        i: String,
        j: String,
        m: String,
    },
    /// Decide whether two hats or triangles are isomorphic.
    Iso { first: String, second: String },
    /// Canonical encoding triple of a hat or triangle.
    Canon { shape: String },
    /// Census of representative hats over odd j <= jmax, m <= mmax.
    Census {
        #[arg(long)]
        jmax: u64,
        #[arg(long)]
        mmax: u64,
        /// Number of worker threads.
        #[arg(long)]
        par: Option<usize>,
    },
    /// Draw a hat or triangle as SVG.
    Render {
        shape: String,
        #[arg(long)]
        out: PathBuf,
    },
}

struct Output<'a> {
    out: &'a mut dyn Write,
    json: bool,
    quiet: bool,
}

impl Output<'_> {
    fn text(&mut self, line: impl AsRef<str>) {
        if !self.quiet && !self.json {
            let _ = writeln!(self.out, "{}", line.as_ref());
        }
    }

    fn json(&mut self, v: Value) {
        if !self.quiet && self.json {
            let _ = writeln!(self.out, "{v}");
        }
    }
}

/// Runs one command; diagnostics go to stderr.
pub fn run(argv: &[String], out: &mut dyn Write) -> i32 {
    let stderr = std::io::stderr();
    let mut err = stderr.lock();
    run_with(argv, out, &mut err)
}

pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut o = Output {
        out,
        json: cli.json,
        quiet: cli.quiet,
    };
    match execute(cli.command, &mut o) {
        Ok(code) => code,
        Err(e) => {
            let code = match e {
                Error::Parse(_) => EXIT_USAGE,
                _ => EXIT_DOMAIN,
            };
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn parse_big(s: &str) -> Result<BigInt, Error> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("malformed integer {s:?}")))
}

fn describe_map(perm: &Perm, f: &AffineMap) -> String {
    let l = &f.linear;
    format!(
        "{perm} linear [[{}, {}], [{}, {}]] translation ({}, {})",
        l.a, l.b, l.c, l.d, f.translation.x, f.translation.y
    )
}

fn execute(cmd: Command, o: &mut Output<'_>) -> Result<i32, Error> {
    match cmd {
        Command::Normalize {
            shape,
            canonical,
            verify,
        } => {
            let t = parse_shape(&shape)?.triangle();
            if canonical {
                let c = canonical_form(&t)?;
                o.text(c.to_string());
                o.json(json!({"triple": json::triple(&c)}));
                return Ok(EXIT_OK);
            }
            let all = all_normalizations(&t)?;
            let canon = canonical_form(&t)?;
            for n in &all {
                o.text(format!(
                    "{}  {}  triple {}  map {}",
                    n.roles,
                    n.hat,
                    n.hat.pointed_canonical(),
                    describe_map(&n.roles, &n.map)
                ));
            }
            o.text(format!("canonical {canon}"));
            o.json(json!({"normalize": {
                "hats": all.iter().map(json::normalization).collect::<Vec<_>>(),
                "canonical": json::triple(&canon),
            }}));
            if verify {
                let ok = all.iter().all(|n| verify_normalization(&t, n));
                o.text(if ok { "verified" } else { "VERIFICATION FAILED" });
                if !ok {
                    return Ok(EXIT_CHECK_FAILED);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Aut { i, j, m } => {
            let h = Hat::representative(parse_big(&i)?, parse_big(&j)?, parse_big(&m)?)?;
            let g = automorphism_group(&h)?;
            o.text(format!("{} (order {})", g.tag, g.tag.order()));
            for (p, f) in &g.witnesses {
                o.text(describe_map(p, f));
            }
            o.json(json::aut(&g));
            Ok(EXIT_OK)
        }
        Command::Iso { first, second } => {
            let (a, b) = (parse_shape(&first)?, parse_shape(&second)?);
            let r = match (&a, &b) {
                (Shape::Hat(h1), Shape::Hat(h2)) => isomorphic_hats(h1, h2)?,
                _ => isomorphic(&a.triangle(), &b.triangle())?,
            };
            report_iso(&r, o);
            Ok(if r.isomorphic {
                EXIT_OK
            } else {
                EXIT_NOT_ISOMORPHIC
            })
        }
        Command::Canon { shape } => {
            let c = canonical_form(&parse_shape(&shape)?.triangle())?;
            o.text(c.to_string());
            o.json(json!({"triple": json::triple(&c)}));
            Ok(EXIT_OK)
        }
        Command::Census { jmax, mmax, par } => {
            let r = census(jmax, mmax, par)?;
            o.text(format!(
                "{:>4} {:>4} {:>5} {:>7} {:>7} {:>7} {:>5} {:>5} {:>5}  ok",
                "j", "m", "hats", "pointed", "classes", "Trivial", "C2", "C3", "S3"
            ));
            for row in &r.rows {
                let h = |t| row.aut_histogram.get(&t).copied().unwrap_or(0);
                use crate::classify::AutTag::*;
                o.text(format!(
                    "{:>4} {:>4} {:>5} {:>7} {:>7} {:>7} {:>5} {:>5} {:>5}  {}",
                    row.j,
                    row.m,
                    row.hats,
                    row.pointed_classes,
                    row.iso_classes,
                    h(Trivial),
                    h(C2),
                    h(C3),
                    h(S3),
                    if row.ok() { "yes" } else { "NO" }
                ));
            }
            o.json(json::census(&r));
            Ok(if r.ok() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Render { shape, out } => {
            let t = parse_shape(&shape)?.triangle();
            let svg = svg::render(&t);
            std::fs::write(&out, svg)
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", out.display())))?;
            o.text(format!("wrote {}", out.display()));
            o.json(json!({"render": {"out": out.display().to_string()}}));
            Ok(EXIT_OK)
        }
    }
}

fn report_iso(r: &IsoResult, o: &mut Output<'_>) {
    if r.isomorphic {
        let case = r.case.map(|c| format!(" (case {c})")).unwrap_or_default();
        o.text(format!("isomorphic{case}"));
        if let Some((p, f)) = &r.witness {
            o.text(format!("witness {}", describe_map(p, f)));
        }
    } else {
        o.text("not isomorphic");
    }
    o.json(json::iso(r));
}

/// The witness must carry the role vertices onto the hat, and its inverse
/// must carry the hat back onto the input vertex set.
fn verify_normalization(t: &Triangle, n: &crate::hats::Normalized) -> bool {
    let hat = n.hat.to_triangle();
    let forward = (0..3).all(|k| n.map.apply(t.vertex(n.roles.image(k))) == *hat.vertex(k));
    let back = match n.map.invert() {
        Ok(inv) => {
            let mut img: Vec<_> = hat.vertices().iter().map(|p| inv.apply(p)).collect();
            let mut src: Vec<_> = t.vertices().to_vec();
            img.sort();
            src.sort();
            img == src
        }
        Err(_) => false,
    };
    forward && back
}
