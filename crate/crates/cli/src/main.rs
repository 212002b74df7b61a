use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qe7::e7::{
    enumerate_roots, enumerate_weights, odd_form_of_weight, pi_map, restriction_decomposition,
    root_in_simple_coords, weyl_report, RootLabel,
};
use qe7::f2sym::{
    enumerate_lagrangians, enumerate_quad_forms, orthogonal_group_order, IsotropicSubspace, Parity,
    QuadLabel, SympVector,
};
use qe7::heisenberg::lift_transvection;
use qe7::verify::{lifted_symplectic_order, run_verify, Suite, A5_CHAIN};

#[derive(Parser)]
#[command(
    name = "qe7",
    version,
    about = "Exact checks on qubits, the Clifford group and E7"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Format {
    /// JSON output (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Aligned text output.
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Print the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// List roots, weights, Lagrangians or quadratic forms.
    Enumerate {
        what: Enumerable,
        /// Rank for lagrangians and quadforms.
        #[arg(long, default_value_t = 3)]
        k: u8,
        #[command(flatten)]
        format: Format,
        /// Print only the number of items.
        #[arg(long)]
        count_only: bool,
    },
    /// Split V(ω7) over the lines of a Lagrangian's Fano plane.
    Decompose {
        /// Comma-separated basis, e.g. "100:000,010:000,001:000".
        #[arg(long, default_value = "100:000,010:000,001:000")]
        lagrangian: String,
        #[command(flatten)]
        format: Format,
    },
    /// Print the lift M_v of the transvection t_v.
    Lift {
        #[arg(long)]
        v: String,
        /// Rank; must agree with the length of V when given.
        #[arg(long)]
        k: Option<u8>,
        #[command(flatten)]
        format: Format,
    },
    /// Image of a root under the reduction to V_3.
    Pi {
        /// Root name such as R12, R1238, R18 or -R12.
        #[arg(long, allow_hyphen_values = true)]
        root: String,
        #[command(flatten)]
        format: Format,
    },
    /// Group orders over F2 and of W(E7).
    Orders {
        #[arg(long)]
        k: Option<u8>,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Enumerable {
    Roots,
    Weights,
    Lagrangians,
    Quadforms,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
        .map_err(|_| format!("expected one of {}", Suite::NAMES.join(", ")))
}

/// Failures of user input, reported with exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl std::fmt::Display) -> Result<T> {
    Err(Usage(msg.to_string()).into())
}

fn configure_threads() -> Result<()> {
    if let Ok(raw) = std::env::var("QE7_THREADS") {
        let n: usize = match raw.parse() {
            Ok(n) if n > 0 => n,
            _ => {
                return usage(format!(
                    "QE7_THREADS must be a positive integer, got {raw:?}"
                ))
            }
        };
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) -> Result<()> {
    let out = if format.text {
        text()
    } else {
        serde_json::to_string_pretty(value)?
    };
    print_line(&out)
}

/// A closed pipe (`qe7 ... | head`) is not an error.
fn print_line(out: &str) -> Result<()> {
    match writeln!(std::io::stdout().lock(), "{out}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn check_rank(k: u8, max: u8) -> Result<()> {
    if !(1..=max).contains(&k) {
        return usage(format!("--k must be in 1..={max}, got {k}"));
    }
    Ok(())
}

fn enumerate(what: Enumerable, k: u8, format: Format, count_only: bool) -> Result<()> {
    let (name, items, rows): (&str, Vec<Value>, Vec<Vec<String>>) = match what {
        Enumerable::Roots => {
            let mut items = Vec::new();
            let mut rows = vec![vec![
                "root".into(),
                "class".into(),
                "coords".into(),
                "image".into(),
            ]];
            for (r, pic) in enumerate_roots() {
                let coords = root_in_simple_coords(r)?;
                let image = pi_map(&coords);
                items.push(json!({"name": r, "kind": format!("{:?}", r.kind()), "pic": pic, "coords": coords, "image": image}));
                rows.push(vec![
                    r.to_string(),
                    pic.to_string(),
                    coords.to_string(),
                    image.to_string(),
                ]);
            }
            ("roots", items, rows)
        }
        Enumerable::Weights => {
            let mut items = Vec::new();
            let mut rows = vec![vec!["weight".into(), "class".into(), "odd form".into()]];
            for (w, pic) in enumerate_weights() {
                let q = odd_form_of_weight(w)?;
                items.push(json!({"name": w, "pic": pic, "projection_doubled": w.projection_doubled(), "odd_form": q}));
                rows.push(vec![w.to_string(), pic.to_string(), q.to_string()]);
            }
            ("weights", items, rows)
        }
        Enumerable::Lagrangians => {
            check_rank(k, 3)?;
            let mut items = Vec::new();
            let mut rows = vec![vec!["basis".into(), "points".into()]];
            for l in enumerate_lagrangians(k)? {
                let pts: Vec<String> = l.points().iter().map(|p| p.to_string()).collect();
                items.push(json!({"basis": l, "points": pts}));
                rows.push(vec![l.to_string(), pts.join(" ")]);
            }
            ("lagrangians", items, rows)
        }
        Enumerable::Quadforms => {
            check_rank(k, 4)?;
            let mut items = Vec::new();
            let mut rows = vec![vec!["label".into(), "parity".into(), "zeros".into()]];
            for parity in [Parity::Even, Parity::Odd] {
                for (q, zeros) in enumerate_quad_forms(k, parity)? {
                    let p = format!("{parity:?}").to_lowercase();
                    items.push(json!({"label": q, "parity": p, "zeros": zeros}));
                    rows.push(vec![q.to_string(), p, zeros.to_string()]);
                }
            }
            ("quadforms", items, rows)
        }
    };
    if count_only {
        return print_line(&items.len().to_string());
    }
    let mut value = json!({"what": name, "count": items.len(), "items": items});
    if matches!(what, Enumerable::Lagrangians | Enumerable::Quadforms) {
        value["k"] = json!(k);
    }
    emit(format, &value, || table(&rows))
}

fn decompose(basis: &str, format: Format) -> Result<()> {
    let l: IsotropicSubspace = match basis.parse() {
        Ok(l) => l,
        Err(e) => return usage(format!("invalid --lagrangian {basis:?}: {e}")),
    };
    let d = match restriction_decomposition(&l) {
        Ok(d) => d,
        Err(e) => return usage(e),
    };
    emit(format, &serde_json::to_value(&d)?, || {
        d.to_string().trim_end().to_string()
    })
}

fn lift(v: &str, k: Option<u8>, format: Format) -> Result<()> {
    let v: SympVector = match v.parse() {
        Ok(v) => v,
        Err(e) => return usage(format!("invalid --v {v:?}: {e}")),
    };
    if let Some(k) = k {
        if k != v.rank() {
            return usage(format!(
                "--k {k} does not match the rank {} of {v}",
                v.rank()
            ));
        }
    }
    let m = lift_transvection(v);
    emit(format, &serde_json::to_value(&m)?, || m.to_string())
}

fn pi(root: &str, format: Format) -> Result<()> {
    let r: RootLabel = match root.parse() {
        Ok(r) => r,
        Err(e) => return usage(format!("invalid --root {root:?}: {e}")),
    };
    let coords = root_in_simple_coords(r)?;
    let image = pi_map(&coords);
    let value = json!({"root": r, "pic": r.pic(), "coords": coords, "image": image});
    emit(format, &value, || format!("{r}  {coords}  {image}"))
}

fn orders_for(k: u8) -> Result<Value> {
    let generators: Vec<String> = match k {
        1 => vec!["1:0".into(), "0:1".into()],
        2 => A5_CHAIN.iter().map(|s| s.to_string()).collect(),
        _ => qe7::e7::SIMPLE_ROOT_IMAGES
            .iter()
            .map(|s| s.to_string())
            .collect(),
    };
    let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
    let sp = lifted_symplectic_order(&refs).map_err(anyhow::Error::msg)?;
    let zero = SympVector::zero(k)?;
    let even = orthogonal_group_order(QuadLabel::new(zero))?;
    let odd_label = enumerate_quad_forms(k, Parity::Odd)?[0].0;
    let odd = orthogonal_group_order(odd_label)?;
    Ok(json!({
        "k": k,
        "symplectic": sp,
        "transvection_closure_even": even,
        "transvection_closure_odd": odd,
        "lagrangians": enumerate_lagrangians(k)?.len(),
    }))
}

fn orders(k: Option<u8>, format: Format) -> Result<()> {
    if let Some(k) = k {
        check_rank(k, 3)?;
    }
    let ranks: Vec<u8> = k.map_or_else(|| vec![1, 2, 3], |k| vec![k]);
    let per_rank: Vec<Value> = ranks
        .iter()
        .map(|&k| orders_for(k))
        .collect::<Result<_>>()?;
    let mut value = json!({"ranks": per_rank});
    if k.is_none() {
        let w = weyl_report();
        value["weyl_e7"] = json!({
            "order": w.order,
            "contains_minus_identity": w.contains_minus_identity,
            "kernel_order": w.kernel.len(),
            "image_order": w.image_order,
        });
    }
    emit(format, &value, || {
        let mut rows = vec![vec!["group".to_string(), "order".to_string()]];
        for r in &per_rank {
            let k = &r["k"];
            rows.push(vec![
                format!("Sp({}, F2)", 2 * k.as_u64().unwrap_or(0)),
                r["symplectic"].to_string(),
            ]);
            rows.push(vec![
                format!("<t_v : q_0(v) = 1>, k = {k}"),
                r["transvection_closure_even"].to_string(),
            ]);
            rows.push(vec![
                format!("<t_v : q_odd(v) = 1>, k = {k}"),
                r["transvection_closure_odd"].to_string(),
            ]);
            rows.push(vec![
                format!("Lagrangians, k = {k}"),
                r["lagrangians"].to_string(),
            ]);
        }
        if let Some(w) = value.get("weyl_e7") {
            rows.push(vec!["W(E7)".into(), w["order"].to_string()]);
            rows.push(vec![
                "ker(W(E7) -> Sp(6, F2))".into(),
                w["kernel_order"].to_string(),
            ]);
        }
        table(&rows)
    })
}

fn verify(suite: Suite, json: bool) -> Result<bool> {
    let report = run_verify(suite);
    if json {
        print_line(&serde_json::to_string_pretty(&report)?)?;
    } else {
        print_line(&report.to_string())?;
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_threads()?;
    match cli.command {
        Command::Verify { suite, json } => {
            return Ok(if verify(suite, json)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::Enumerate {
            what,
            k,
            format,
            count_only,
        } => enumerate(what, k, format, count_only)?,
        Command::Decompose { lagrangian, format } => decompose(&lagrangian, format)?,
        Command::Lift { v, k, format } => lift(&v, k, format)?,
        Command::Pi { root, format } => pi(&root, format)?,
        Command::Orders { k, format } => orders(k, format)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
