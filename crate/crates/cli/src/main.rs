use std::path::PathBuf;
use std::process::ExitCode;

use chow_core::spec_file::{LoadedRing, TableKind};
use chow_core::{Catalog, Error, Polynomial, Rational, Scope, Status};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "chow", version, about = "Exact computations in Chow rings of compactified moduli of abelian varieties")]
struct Cli {
    /// Extra ring spec files added to the bundled catalog
    #[arg(long = "spec", global = true, value_name = "PATH")]
    specs: Vec<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression
    Nf {
        #[arg(long)]
        ring: String,
        expr: String,
    },
    /// Integrate a top-degree expression
    Degree {
        #[arg(long)]
        ring: String,
        expr: String,
    },
    /// Print ranks of the graded pieces
    Hilbert {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        max: Option<u32>,
    },
    /// Print a pairing matrix between degree K and the complementary degree
    Pairing {
        #[arg(long)]
        ring: String,
        #[arg(long = "deg")]
        degree: u32,
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        rows: Vec<String>,
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        cols: Vec<String>,
    },
    /// Recover a degree-K class from its pairings with probe classes
    SolveClass {
        #[arg(long)]
        ring: String,
        #[arg(long = "deg")]
        degree: u32,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        values: Vec<Rational>,
        /// defaults to the standard basis of the complementary degree
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        probes: Vec<String>,
    },
    /// Apply a pushforward: a tabulated map or the projection of a relative ring
    Push {
        #[arg(long)]
        map: String,
        expr: String,
    },
    /// Re-emit the catalog tables with recomputed entries
    Tables {
        #[arg(long)]
        id: Option<String>,
    },
    /// Run the verification suite
    Verify {
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_catalog(specs: &[PathBuf]) -> Result<Catalog, Failure> {
    let mut current = Catalog::bundled()?;
    for path in specs {
        let ring = current.load_file(path)?;
        current = current.with_ring(ring);
    }
    Ok(current)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let catalog = load_catalog(&cli.specs)?;
    match cli.command {
        Command::Nf { ring, expr } => {
            let r = catalog.get(&ring)?;
            println!("{}", r.ring.normal_form(&r.parse(&expr)?));
        }
        Command::Degree { ring, expr } => {
            let r = catalog.get(&ring)?;
            println!("{}", r.ring.degree(r.functional()?, &r.parse(&expr)?)?);
        }
        Command::Hilbert { ring, max } => {
            let r = catalog.get(&ring)?;
            let max = max
                .or_else(|| r.ring.top_degree())
                .ok_or_else(|| Failure::Usage(format!("ring `{ring}` has no top degree, pass --max")))?;
            let ranks: Vec<String> = r.ring.hilbert_function(max).iter().map(usize::to_string).collect();
            println!("{}", ranks.join(","));
        }
        Command::Pairing { ring, degree, rows, cols } => {
            let r = catalog.get(&ring)?;
            let f = r.functional()?;
            let top = f.top_degree();
            if degree > top {
                return Err(Failure::Usage(format!("degree {degree} exceeds the top degree {top}")));
            }
            let rows = labelled(&r, degree, &rows)?;
            let cols = labelled(&r, top - degree, &cols)?;
            let row_polys: Vec<Polynomial> = rows.iter().map(|(_, p)| p.clone()).collect();
            let col_polys: Vec<Polynomial> = cols.iter().map(|(_, p)| p.clone()).collect();
            let m = r.ring.pairing_matrix(f, degree, &row_polys, &col_polys)?;
            let mut grid = vec![std::iter::once(String::new()).chain(cols.iter().map(|(l, _)| l.clone())).collect::<Vec<_>>()];
            for ((label, _), values) in rows.iter().zip(m) {
                grid.push(std::iter::once(label.clone()).chain(values.iter().map(Rational::to_string)).collect());
            }
            print!("{}", render_grid(&grid));
        }
        Command::SolveClass { ring, degree, values, probes } => {
            let r = catalog.get(&ring)?;
            let f = r.functional()?;
            let top = f.top_degree();
            if degree > top {
                return Err(Failure::Usage(format!("degree {degree} exceeds the top degree {top}")));
            }
            let probes: Vec<Polynomial> = labelled(&r, top - degree, &probes)?.into_iter().map(|(_, p)| p).collect();
            println!("{}", r.ring.solve_class_from_pairings(f, degree, &probes, &values)?);
        }
        Command::Push { map, expr } => println!("{}", push(&catalog, &map, &expr)?),
        Command::Tables { id } => print_tables(&catalog, id.as_deref())?,
        Command::Verify { scope, format } => {
            let scope = Scope::parse(&scope, &catalog)?;
            let report = chow_core::verify(&catalog, &scope);
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            if !report.all_passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

/// Parse the given expressions, or default to the standard basis in `degree`.
fn labelled(r: &LoadedRing, degree: u32, exprs: &[String]) -> Result<Vec<(String, Polynomial)>, Failure> {
    if exprs.is_empty() {
        let gens = r.ring.generators();
        return Ok(r.ring.standard_monomials(degree).iter().map(|m| (m.render(gens), Polynomial::monomial(gens, m.clone()))).collect());
    }
    exprs.iter().map(|e| Ok((e.clone(), r.parse(e)?))).collect()
}

fn push(catalog: &Catalog, map: &str, expr: &str) -> Result<Polynomial, Failure> {
    if let Ok(r) = catalog.get(map) {
        if let Some(rel) = &r.relative {
            return Ok(rel.ring.pushforward(&rel.rule, &r.parse(expr)?)?);
        }
    }
    for r in catalog.rings() {
        if let Ok(tp) = r.pushforward(map) {
            let pushed = tp.push_combination(&tp.parse_combination(expr)?)?;
            return Ok(r.ring.normal_form(&pushed));
        }
    }
    Err(Error::UnknownMap(map.to_string()).into())
}

fn render_grid(grid: &[Vec<String>]) -> String {
    let columns = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns).map(|j| grid.iter().filter_map(|row| row.get(j)).map(String::len).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in grid {
        let cells: Vec<String> = row.iter().enumerate().map(|(j, c)| format!("{c:<w$}", w = widths[j])).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn print_tables(catalog: &Catalog, only: Option<&str>) -> Result<(), Failure> {
    if let Some(id) = only {
        Scope::parse(&format!("table:{id}"), catalog)?;
    }
    let mut failed = false;
    for r in catalog.rings() {
        for t in r.spec.expected.iter().flat_map(|e| e.tables.iter()) {
            if only.is_some_and(|id| id != t.id) {
                continue;
            }
            let report = chow_core::verify(catalog, &Scope::Table(t.id.clone()));
            let kind = match t.kind {
                TableKind::Pairing => "pairing",
                TableKind::RelativePairing => "relative pairing",
                TableKind::Pushforward => "pushforward",
            };
            println!("table {} ({}, {kind}): {}", t.id, r.name(), t.citation);
            let mut grid = vec![std::iter::once(String::new()).chain(t.cols.iter().map(|c| c.label().to_string())).collect::<Vec<_>>()];
            for (i, row) in t.rows.iter().enumerate() {
                let mut line = vec![row.label().to_string()];
                for j in 0..t.cols.len() {
                    let id = format!("{}/table/{}/{i},{j}", r.name(), t.id);
                    let cell = match report.checks.iter().find(|c| c.id == id) {
                        Some(c) if c.status == Status::Skipped && c.computed == "not computable" => format!("n/a ({})", c.expected),
                        Some(c) if c.status == Status::Fail => {
                            failed = true;
                            format!("{} != {}", c.computed, c.expected)
                        }
                        Some(c) => c.computed.clone(),
                        None => "?".to_string(),
                    };
                    line.push(cell);
                }
                grid.push(line);
            }
            print!("{}", render_grid(&grid));
            println!();
        }
    }
    if failed {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}
