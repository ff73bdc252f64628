use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symcap::canonical::{Constants, PhiCache};
use symcap::dgla::{barcode, Truncation};
use symcap::invariants::{
    evaluate_rows, gb_capacity_ellipsoid, is_maximal_short_orbit, nonzero_coeff_polydisk,
    obstruct_ellipsoid, rseep_check, s_d_with, spectral_invariant, stable_sequence, table_inputs, CapacityWord,
    PolydiskVariant, ScanBounds, ScanMode, TableEntry,
};
use symcap::scalar::{format_rational, parse_rational};
use symcap::toric::DomainKind;
use symcap::{Error, PerturbedScalar, Rational, ToricDomain};

#[derive(Parser)]
#[command(name = "symcap", version, about = "Higher symplectic capacities of convex toric domains")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Persistent coefficient cache (also read from SYMCAP_CACHE)
    #[arg(long, global = true, env = "SYMCAP_CACHE")]
    cache: Option<PathBuf>,
    /// Worker threads
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = ConstantsArg::Geometric, global = true)]
    constants: ConstantsArg,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstantsArg {
    Geometric,
    Ones,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Cube,
    Ball,
}

#[derive(Subcommand)]
enum Cmd {
    /// The structure coefficient S_{d;1,x}
    Sd {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        x: String,
    },
    /// S_1..S_max_d and the table rows with d <= max_d
    Table {
        #[arg(long)]
        max_d: u32,
    },
    /// Gutt-Hutchings capacities c_q
    Gh {
        #[arg(long)]
        domain: String,
        /// A single q or a range such as 1..6 (inclusive)
        #[arg(long)]
        q: String,
    },
    /// The capacity g_b of an ellipsoid via the canonical model
    Gb {
        #[arg(long)]
        domain: String,
        /// Word such as t0*t2^2
        #[arg(long)]
        word: String,
    },
    /// The capacity g_b read from the filtered bar complex
    Spectral {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// Persistence barcode of the bar complex in one degree
    Barcode {
        #[arg(long)]
        domain: String,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// Scan for obstructions to stably embedding --target into --source
    Obstruct {
        /// The larger ellipsoid E(a',b')
        #[arg(long)]
        source: String,
        /// The ellipsoid E(a,b) to be embedded
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 8)]
        max_k: u32,
        #[arg(long, default_value_t = 30)]
        max_q: u32,
        /// Report every nonzero coefficient, not only violations
        #[arg(long)]
        all: bool,
    },
    /// The nonvanishing criterion at x = p/q
    Rseep {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Coefficients of the Cube and Ball products at P(1,1)
    PolydiskCoeff {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum)]
        variant: VariantArg,
    },
    /// Whether the short orbit of multiplicity p is maximal
    Maximal {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u64,
    },
    /// Inspect or clear the coefficient cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Inspect,
    Clear,
}

/// A command result in all three output shapes.
struct Output {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    exit: u8,
}

impl Output {
    fn single(json: Value, header: &'static str, value: String) -> Self {
        Output { json, header: vec![header], rows: vec![vec![value]], exit: 0 }
    }

    fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.json),
            Format::Csv => {
                writeln!(out, "{}", self.header.join(","))?;
                for r in &self.rows {
                    writeln!(out, "{}", r.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","))?;
                }
                Ok(())
            }
            Format::Plain => {
                if self.header.len() == 1 && self.rows.len() == 1 {
                    return writeln!(out, "{}", self.rows[0][0]);
                }
                let mut w: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
                for r in &self.rows {
                    for (k, c) in r.iter().enumerate() {
                        w[k] = w[k].max(c.chars().count());
                    }
                }
                let line = |cells: Vec<&str>| {
                    cells.iter().enumerate().map(|(k, c)| format!("{c:<w$}", w = w[k])).collect::<Vec<_>>().join("  ")
                };
                writeln!(out, "{}", line(self.header.clone()).trim_end())?;
                for r in &self.rows {
                    writeln!(out, "{}", line(r.iter().map(|s| s.as_str()).collect()).trim_end())?;
                }
                Ok(())
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn ps(s: &PerturbedScalar) -> String {
    s.to_string()
}

/// Failure of a command, mapped onto the exit code protocol.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain_error() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn parse_q_range(s: &str) -> Result<(u32, u32), Failure> {
    let bad = || Failure::Usage(format!("bad q range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().trim_start_matches('=').parse().map_err(|_| bad())?),
        None => {
            let q = s.trim().parse().map_err(|_| bad())?;
            (q, q)
        }
    };
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn ellipsoid_params(d: &ToricDomain) -> Result<(Rational, Rational), Failure> {
    match d.kind() {
        DomainKind::Ellipsoid { a, b } => Ok((a.clone(), b.clone())),
        _ => Err(Failure::Usage(format!("{} is not an ellipsoid", d.literal()))),
    }
}

fn truncation(max_len: Option<usize>, max_weight: Option<u32>, degree: i64) -> Option<Truncation> {
    if max_len.is_none() && max_weight.is_none() {
        return None;
    }
    let req = Truncation::required(symcap::dgla::Space::Bar, degree);
    Some(Truncation { max_len: max_len.unwrap_or(req.max_len), max_weight: max_weight.unwrap_or(req.max_weight) })
}

fn table_rows(entries: &[TableEntry], kind: &str, rows: &mut Vec<Vec<String>>, json: &mut Vec<Value>) {
    for e in entries {
        let (v, err) = match &e.value {
            Ok(v) => (format_rational(v), String::new()),
            Err(err) => (String::new(), err.to_string()),
        };
        rows.push(vec![kind.into(), e.d.to_string(), format_rational(&e.x), v.clone(), err.clone()]);
        json.push(if err.is_empty() {
            json!({"kind": kind, "d": e.d, "x": format_rational(&e.x), "value": v})
        } else {
            json!({"kind": kind, "d": e.d, "x": format_rational(&e.x), "error": err})
        });
    }
}

fn run(cli: &Cli, cache: &mut Option<PhiCache>) -> Result<Output, Failure> {
    let mode = match cli.constants {
        ConstantsArg::Geometric => Constants::Geometric,
        ConstantsArg::Ones => Constants::Ones,
    };
    match &cli.cmd {
        Cmd::Sd { d, x } => {
            let x = parse_rational(x)?;
            if *d == 0 {
                return Err(Failure::Usage("d must be positive".into()));
            }
            let mut model = symcap::canonical::CanonicalModel::new(Rational::from_integer(1.into()), x.clone(), mode)?;
            if let Some(c) = cache.as_ref() {
                model.seed(c);
            }
            let v = s_d_with(&mut model, *d, &x)?;
            if let Some(c) = cache.as_mut() {
                model.store(c);
            }
            let s = format_rational(&v);
            Ok(Output::single(json!({"d": d, "x": format_rational(&x), "value": s}), "value", s))
        }
        Cmd::Table { max_d } => {
            if *max_d == 0 {
                return Err(Failure::Usage("max-d must be at least 1".into()));
            }
            let t = Instant::now();
            eprintln!("computing S_1..S_{max_d}");
            let seq = stable_sequence(*max_d, mode, cache.as_mut());
            let inputs = table_inputs(*max_d);
            eprintln!("computing {} table rows", inputs.len());
            let rows_e = evaluate_rows(&inputs, mode, cache.as_mut());
            eprintln!("done in {:.2?}", t.elapsed());
            let (mut rows, mut js) = (Vec::new(), Vec::new());
            table_rows(&seq, "stable", &mut rows, &mut js);
            table_rows(&rows_e, "row", &mut rows, &mut js);
            Ok(Output { json: Value::Array(js), header: vec!["kind", "d", "x", "value", "error"], rows, exit: 0 })
        }
        Cmd::Gh { domain, q } => {
            let dom: ToricDomain = domain.parse()?;
            let (lo, hi) = parse_q_range(q)?;
            let (mut rows, mut js) = (Vec::new(), Vec::new());
            for q in lo..=hi {
                let c = dom.gh_capacity(q)?;
                let m = dom.argmin_pair(q)?;
                rows.push(vec![q.to_string(), ps(&c), m.to_string()]);
                js.push(json!({"q": q, "capacity": c.to_json(), "argmin": [m.i, m.j]}));
            }
            Ok(Output { json: Value::Array(js), header: vec!["q", "capacity", "argmin"], rows, exit: 0 })
        }
        Cmd::Gb { domain, word } => {
            let dom: ToricDomain = domain.parse()?;
            let (a, b) = ellipsoid_params(&dom)?;
            let w: CapacityWord = word.parse()?;
            let c = gb_capacity_ellipsoid(&a, &b, &w)?;
            Ok(Output::single(json!({"word": w.to_string(), "capacity": c.to_json()}), "capacity", ps(&c)))
        }
        Cmd::Spectral { domain, word, max_len, max_weight } => {
            let dom: ToricDomain = domain.parse()?;
            let w: CapacityWord = word.parse()?;
            let c = spectral_invariant(&dom, &w, truncation(*max_len, *max_weight, w.degree()))?;
            Ok(Output::single(json!({"word": w.to_string(), "capacity": c.to_json()}), "capacity", ps(&c)))
        }
        Cmd::Barcode { domain, degree, max_len, max_weight } => {
            let dom: ToricDomain = domain.parse()?;
            let bc = barcode(&dom, *degree, truncation(*max_len, *max_weight, *degree))?;
            let rows = bc
                .bars
                .iter()
                .map(|b| vec![b.degree.to_string(), ps(&b.birth), b.death.as_ref().map_or("inf".into(), ps)])
                .collect();
            Ok(Output { json: bc.to_json(), header: vec!["degree", "birth", "death"], rows, exit: 0 })
        }
        Cmd::Obstruct { source, target, max_k, max_q, all } => {
            let (src, tgt): (ToricDomain, ToricDomain) = (source.parse()?, target.parse()?);
            let ((a2, b2), (a, b)) = (ellipsoid_params(&src)?, ellipsoid_params(&tgt)?);
            let scan = if *all { ScanMode::All } else { ScanMode::ViolationsOnly };
            let bounds = ScanBounds { max_k: *max_k, max_q: *max_q };
            let t = Instant::now();
            let v = obstruct_ellipsoid((&a, &b), (&a2, &b2), bounds, mode, scan)?;
            eprintln!("scanned k <= {max_k}, q <= {max_q} in {:.2?}", t.elapsed());
            let violated = v.iter().any(|w| w.violated);
            let rows = v
                .iter()
                .map(|w| {
                    let qs: Vec<String> = w.qs.iter().map(|q| q.to_string()).collect();
                    vec![w.k().to_string(), qs.join(" "), format_rational(&w.coeff), ps(&w.lhs), ps(&w.rhs), w.violated.to_string()]
                })
                .collect();
            Ok(Output {
                json: Value::Array(v.iter().map(|w| w.to_json()).collect()),
                header: vec!["k", "qs", "coeff", "lhs", "rhs", "violated"],
                rows,
                exit: if violated { 3 } else { 0 },
            })
        }
        Cmd::Rseep { p, q } => {
            let v = rseep_check(*p, *q, mode)?;
            let row = vec![v.d.to_string(), v.applies.to_string(), v.nonzero.to_string(), format_rational(&v.value)];
            Ok(Output { json: v.to_json(), header: vec!["d", "applies", "nonzero", "value"], rows: vec![row], exit: 0 })
        }
        Cmd::PolydiskCoeff { d, variant } => {
            if *d == 0 {
                return Err(Failure::Usage("d must be positive".into()));
            }
            let var = match variant {
                VariantArg::Cube => PolydiskVariant::Cube,
                VariantArg::Ball => PolydiskVariant::Ball,
            };
            let c = format_rational(&nonzero_coeff_polydisk(*d, var)?);
            Ok(Output::single(json!({"d": d, "coeff": c}), "coeff", c))
        }
        Cmd::Maximal { p, q, d } => {
            let m = is_maximal_short_orbit(*p, *q, *d)?;
            Ok(Output::single(json!({"p": p, "q": q, "d": d, "maximal": m}), "maximal", m.to_string()))
        }
        Cmd::Cache { action } => {
            let Some(c) = cache.as_mut() else {
                return Err(Failure::Usage("no cache configured (use --cache or SYMCAP_CACHE)".into()));
            };
            match action {
                CacheAction::Inspect => {
                    let rows: Vec<Vec<String>> = c
                        .entries()
                        .map(|((d, m, k), (v, q))| vec![d.clone(), m.clone(), k.clone(), format_rational(v), q.to_string()])
                        .collect();
                    let js = rows
                        .iter()
                        .map(|r| json!({"domain": r[0], "constants": r[1], "key": r[2], "coeff": r[3], "q": r[4]}))
                        .collect();
                    Ok(Output { json: Value::Array(js), header: vec!["domain", "constants", "key", "coeff", "q"], rows, exit: 0 })
                }
                CacheAction::Clear => {
                    c.clear()?;
                    Ok(Output::single(json!({"cleared": true}), "cleared", "true".into()))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let mut cache = match &cli.cache {
        Some(p) => match PhiCache::open(p) {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        },
        None => None,
    };
    let result = run(&cli, &mut cache);
    if let Some(c) = cache.as_mut() {
        if let Err(e) = c.save() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match result {
        Ok(out) => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            if out.write(cli.format, &mut lock).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.exit)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
