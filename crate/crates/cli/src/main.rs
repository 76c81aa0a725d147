use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hilbstab::curves::{lattice_ideal, named_example, tail_curve_spec, MonomialCurveSpec, NamedExample, EXAMPLE_NAMES};
use hilbstab::groebner::{buchberger, buchberger_truncated};
use hilbstab::hilbert::{gotzmann_number, hilbert_function, regularity_probe, HilbertPolynomial};
use hilbstab::moduli::{
    alpha_of_m, chamber_decomposition, m_of_alpha, tail_characters, tail_index_assembled, tail_index_closed_form,
    DeformationChart, TailParams,
};
use hilbstab::poly::{Ideal, Polynomial};
use hilbstab::scalar::parse_scalar;
use hilbstab::stability::json::{hm_report_json, polytope_json, semistability_json, thickening_json};
use hilbstab::stability::{
    hilbert_mumford_index, hilbert_mumford_index_with, is_torus_semistable, state_polytope, thickening_instability,
    SemistabilityCertificate, TraversalOptions,
};
use hilbstab::{Error, MonomialOrder, OneParamSubgroup, Ring, Scalar, TieBreak, Q};

#[derive(Parser)]
#[command(name = "hilbstab", version, about = "Exact Hilbert stability computations for projective curves")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Source {
    /// Ideal file, or the name of a catalogued example.
    #[arg(long)]
    ideal: Option<String>,
    /// Name of a catalogued example.
    #[arg(long)]
    example: Option<String>,
}

#[derive(Args, Clone)]
struct Traversal {
    /// Seed for the random starting weights of the polytope search.
    #[arg(long, default_value_t = TraversalOptions::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl Traversal {
    fn options(&self) -> TraversalOptions {
        TraversalOptions {
            seed: self.seed,
            threads: self.threads,
            ..TraversalOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis.
    Groebner {
        #[command(flatten)]
        source: Source,
        /// grevlex, glex or weighted:<r0,...>:<glex|grevlex>
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Degree-m monomials of the initial ideal.
    InitialIdeal {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: String,
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Hilbert function value, with a regularity probe when a polynomial is known.
    HilbertFunction {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: String,
        /// Hilbert polynomial in `m`, e.g. "6*m - 1".
        #[arg(long)]
        poly: Option<String>,
    },
    /// Gotzmann number of a Hilbert polynomial.
    Gotzmann {
        #[arg(long)]
        poly: String,
    },
    /// Vertices of the degree-m state polytope.
    StatePolytope {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: String,
        #[command(flatten)]
        traversal: Traversal,
    },
    /// Barycenter test for the degree-m Hilbert point.
    IsSemistable {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: String,
        #[command(flatten)]
        traversal: Traversal,
    },
    /// Hilbert–Mumford index against one subgroup.
    HmIndex {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: String,
        /// Comma-separated integer weights.
        #[arg(long)]
        rho: String,
        /// Hilbert polynomial in `m`; defaults to the example's, else to HF(m).
        #[arg(long)]
        poly: Option<String>,
        /// Tie-break for the weighted order: glex or grevlex.
        #[arg(long, default_value = "glex")]
        order: String,
    },
    /// Search for a power of a coordinate inside the ideal.
    Thickening {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        coordinate: usize,
        #[arg(long, default_value_t = 12)]
        r_max: u32,
    },
    /// Ideal of a monomial curve.
    LatticeIdeal {
        /// Curve spec file (`d:` and `pair:` lines).
        #[arg(long)]
        spec: Option<String>,
        /// Genus of a cuspidal tail spec instead of a file.
        #[arg(long)]
        tail: Option<u32>,
    },
    /// Index of a curve with an elliptic-free cuspidal tail of genus b.
    TailIndex {
        #[arg(long)]
        b: i64,
        #[arg(long)]
        g: Option<i64>,
        #[arg(long)]
        m: String,
    },
    /// Characters of lambda, lambda_2, delta and K at a tail curve.
    Characters {
        #[arg(long)]
        b: i64,
    },
    /// Convert between m and alpha.
    AlphaM {
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Chamber decomposition of a weighted deformation chart.
    Chambers {
        /// Chart file (`coord <name> weight <int>` lines).
        #[arg(long)]
        chart: Option<String>,
        /// Built-in chart: `tacnode` or `cusp:<b>`.
        #[arg(long)]
        preset: Option<String>,
    },
    /// Show a catalogued example, or list them.
    Example {
        #[arg(long)]
        example: Option<String>,
    },
}

/// Errors on user input exit with 2, everything else with 1.
enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Out = Result<(String, Value), Failure>;

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{path}: {e}")))
}

fn load(source: &Source) -> Result<(Ideal<Q>, Option<NamedExample<Q>>), Failure> {
    let by_name = |name: &str| -> Result<_, Failure> {
        let ex = named_example::<Q>(name)?;
        Ok((ex.ideal.clone(), Some(ex)))
    };
    match (&source.ideal, &source.example) {
        (Some(_), Some(_)) => Err(input("give only one of --ideal and --example")),
        (None, Some(name)) => by_name(name),
        (Some(arg), None) if Path::new(arg).exists() => {
            let text = read_file(arg)?;
            Ideal::parse_file(&text)
                .map(|i| (i, None))
                .map_err(|e| input(format!("{arg}: {e}")))
        }
        (Some(arg), None) => by_name(arg),
        (None, None) => Err(input("an ideal is required: --ideal FILE|NAME or --example NAME")),
    }
}

fn rational(flag: &str, text: &str) -> Result<Q, Failure> {
    parse_scalar::<Q>(text).ok_or_else(|| input(format!("--{flag}: expected an integer or p/q, got `{text}`")))
}

fn degree(text: &str) -> Result<u32, Failure> {
    let m = rational("m", text)?;
    if !m.is_integer() || m <= Q::from_i64(0) {
        return Err(Error::NonIntegerDegree(m.to_string()).into());
    }
    u32::try_from(m.to_integer()).map_err(|_| input("--m is too large"))
}

fn hilbert_poly(text: &str) -> Result<HilbertPolynomial<Q>, Failure> {
    let ring = Ring::new(["m"])?;
    let p: Polynomial<Q> = ring.parse(text).map_err(|e| input(format!("--poly: {e}")))?;
    let top = p.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Q::from_i64(0); top + 1];
    for (mono, c) in p.terms() {
        coeffs[mono.degree() as usize] = c.clone();
    }
    Ok(HilbertPolynomial::new(coeffs))
}

fn vector<C: std::fmt::Display>(v: &[C]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn format_ideal(ideal: &Ideal<Q>, polys: &[Polynomial<Q>]) -> Vec<String> {
    polys.iter().map(|p| ideal.ring().format(p)).collect()
}

fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Groebner { source, order } => {
            let (ideal, _) = load(source)?;
            let order = MonomialOrder::parse(order)?;
            let gb = buchberger(ideal.nvars(), ideal.generators(), &order)?;
            let lines = format_ideal(&ideal, gb.elements());
            let text = lines.join("\n");
            Ok((text, json!({ "order": order.to_string(), "basis": lines })))
        }
        Command::InitialIdeal { source, m, order } => {
            let (ideal, _) = load(source)?;
            let m = degree(m)?;
            let order = MonomialOrder::parse(order)?;
            let gb = buchberger_truncated(ideal.nvars(), ideal.generators(), &order, m)?;
            let monos: Vec<String> = gb
                .initial_ideal_degree(m)
                .iter()
                .rev()
                .map(|x| ideal.ring().format_monomial(x))
                .collect();
            let sum = gb.initial_exponent_sum(m);
            let text = format!("{}\nexponent sum: {}", monos.join(" "), vector(&sum));
            Ok((text, json!({ "m": m, "order": order.to_string(), "monomials": monos, "exponent_sum": sum })))
        }
        Command::HilbertFunction { source, m, poly } => {
            let (ideal, ex) = load(source)?;
            let m = degree(m)?;
            let gb = buchberger(ideal.nvars(), ideal.generators(), &MonomialOrder::GradedRevLex)?;
            let hf = hilbert_function(&gb, m);
            let p = match poly {
                Some(t) => Some(hilbert_poly(t)?),
                None => ex.map(|e| e.hilbert_polynomial),
            };
            let mut text = format!("HF({m}) = {hf}");
            let mut out = json!({ "m": m, "hilbert_function": hf });
            if let Some(p) = p {
                let probe = regularity_probe(&gb, &p, m.max(1));
                let agree = probe.map_or("none".to_string(), |k| format!("HF(k) = P(k) for {k} <= k <= {m}"));
                text.push_str(&format!("\nP(m) = {p}\nagreement: {agree}"));
                out["hilbert_polynomial"] = json!(p.to_string());
                out["regularity_probe"] = json!(probe);
            }
            Ok((text, out))
        }
        Command::Gotzmann { poly } => {
            let p = hilbert_poly(poly)?;
            let g = gotzmann_number(&p)?;
            Ok((format!("{g}"), json!({ "hilbert_polynomial": p.to_string(), "gotzmann_number": g })))
        }
        Command::StatePolytope { source, m, traversal } => {
            let (ideal, _) = load(source)?;
            let m = degree(m)?;
            let p = state_polytope(&ideal, m, &traversal.options())?;
            let mut text = format!("{} vertices, dimension {}", p.vertices.len(), p.dimension);
            for v in &p.vertices {
                text.push_str(&format!("\n{}", vector(v)));
            }
            Ok((text, polytope_json(&p)))
        }
        Command::IsSemistable { source, m, traversal } => {
            let (ideal, ex) = load(source)?;
            let m = degree(m)?;
            let mut r = is_torus_semistable(&ideal, m, &traversal.options())?;
            if let Some(h) = ex.and_then(|e| e.kempf) {
                r = r.with_kempf(&h);
            }
            let mut text = format!(
                "{}\nbarycenter: {}\nvertices: {}",
                if r.semistable { "semistable" } else { "unstable" },
                vector(&r.barycenter),
                r.polytope.vertices.len()
            );
            if let SemistabilityCertificate::Destabilizing(rep) = &r.certificate {
                text.push_str(&format!("\ndestabilizing rho: {} (index {})", rep.rho, rep.index));
            }
            if let Some(k) = &r.kempf {
                text.push_str(&format!("\nKempf reduction: {k}"));
            }
            Ok((text, semistability_json(&r)))
        }
        Command::HmIndex {
            source,
            m,
            rho,
            poly,
            order,
        } => {
            let (ideal, ex) = load(source)?;
            let mq = rational("m", m)?;
            degree(m)?;
            let rho = OneParamSubgroup::parse(rho)?;
            let tie = match order.as_str() {
                "glex" => TieBreak::GradedLex,
                "grevlex" => TieBreak::GradedRevLex,
                other => return Err(input(format!("--order: expected glex or grevlex, got `{other}`"))),
            };
            let p = match (poly, ex) {
                (Some(t), _) => hilbert_poly(t)?,
                (None, Some(e)) => e.hilbert_polynomial,
                (None, None) => {
                    let gb = buchberger_truncated(
                        ideal.nvars(),
                        ideal.generators(),
                        &MonomialOrder::GradedRevLex,
                        degree(m)?,
                    )?;
                    HilbertPolynomial::constant(Q::from_i64(hilbert_function(&gb, degree(m)?) as i64))
                }
            };
            let r = if tie == TieBreak::GradedLex {
                hilbert_mumford_index(&ideal, &mq, &rho, &p)?
            } else {
                hilbert_mumford_index_with(&ideal, &mq, &rho, &p, tie)?
            };
            let mut text = format!(
                "index = {}\nverdict: {}\nstandard weight sum: {}\naverage term: {}",
                r.index, r.verdict, r.standard_weight_sum, r.average_term
            );
            if r.below_regularity {
                text.push_str(&format!(
                    "\nwarning: P(m) = {} but HF(m) = {}",
                    r.hilbert_polynomial_value, r.hilbert_function_value
                ));
            }
            Ok((text, hm_report_json(&r)))
        }
        Command::Thickening {
            source,
            coordinate,
            r_max,
        } => {
            let (ideal, _) = load(source)?;
            let r = thickening_instability(&ideal, *coordinate, *r_max)?;
            let name = ideal
                .ring()
                .names()
                .get(*coordinate)
                .cloned()
                .unwrap_or_default();
            let text = match (&r.bound, &r.certificate_rho) {
                (Some(b), Some(rho)) => format!("{name}^{} lies in the ideal\nunstable for m > {b}\nrho: {rho}", r.r),
                _ => format!("no power {name}^r with r <= {r_max} lies in the ideal"),
            };
            Ok((text, thickening_json(&r)))
        }
        Command::LatticeIdeal { spec, tail } => {
            let spec = match (spec, tail) {
                (Some(path), None) => MonomialCurveSpec::parse(&read_file(path)?).map_err(|e| input(format!("{path}: {e}")))?,
                (None, Some(b)) => tail_curve_spec(*b)?.0,
                _ => return Err(input("give exactly one of --spec FILE and --tail B")),
            };
            let ideal: Ideal<Q> = lattice_ideal(&spec)?;
            let lines = format_ideal(&ideal, ideal.generators());
            let text = format!("vars: {}\n{}", ideal.ring().names().join(" "), lines.join("\n"));
            Ok((text, json!({ "vars": ideal.ring().names(), "generators": lines })))
        }
        Command::TailIndex { b, g, m } => {
            let mq = rational("m", m)?;
            let closed = tail_index_closed_form(*b, &mq);
            let verdict = if closed < Q::from_i64(0) {
                "unstable"
            } else if closed == Q::from_i64(0) {
                "strictly-semistable"
            } else {
                "stable"
            };
            let mut text = format!("closed form: {closed}\nverdict: {verdict}");
            let mut out = json!({ "b": b, "m": mq.to_string(), "index": closed.to_string(), "verdict": verdict });
            if let Some(g) = g {
                let deg = degree(m)?;
                let params = TailParams::new(*g, *b, mq.clone())?;
                let (spec, rho) = tail_curve_spec(u32::try_from(*b).map_err(|_| input("--b out of range"))?)?;
                let ideal: Ideal<Q> = lattice_ideal(&spec)?;
                let gb = buchberger_truncated(ideal.nvars(), ideal.generators(), &MonomialOrder::weighted(rho.clone()), deg)?;
                let w_r = gb.standard_monomial_weight_sum(deg, &rho)?;
                let assembled = tail_index_assembled(&params, w_r)?;
                text.push_str(&format!("\nw_R = {w_r}\nassembled (g = {g}): {assembled}"));
                out["g"] = json!(g);
                out["w_r"] = json!(w_r.to_string());
                out["assembled"] = json!(assembled.to_string());
            }
            Ok((text, out))
        }
        Command::Characters { b } => {
            let t = tail_characters(*b)?;
            let text = format!(
                "chi_lambda = {}\nchi_lambda2 = {}\nchi_delta = {}\nchi_K = {}",
                t.chi_lambda, t.chi_lambda2, t.chi_delta, t.chi_k
            );
            let out = json!({
                "b": b,
                "chi_lambda": t.chi_lambda,
                "chi_lambda2": t.chi_lambda2,
                "chi_delta": t.chi_delta,
                "chi_K": t.chi_k,
            });
            Ok((text, out))
        }
        Command::AlphaM { m, alpha } => match (m, alpha) {
            (Some(m), None) => {
                let mq = rational("m", m)?;
                let a = alpha_of_m(&mq)?;
                Ok((format!("alpha = {a}"), json!({ "m": mq.to_string(), "alpha": a.to_string() })))
            }
            (None, Some(a)) => {
                let aq = rational("alpha", a)?;
                let mq = m_of_alpha(&aq)?;
                Ok((format!("m = {mq}"), json!({ "m": mq.to_string(), "alpha": aq.to_string() })))
            }
            _ => Err(input("give exactly one of --m and --alpha")),
        },
        Command::Chambers { chart, preset } => {
            let chart = match (chart, preset) {
                (Some(path), None) => DeformationChart::parse(&read_file(path)?).map_err(|e| input(format!("{path}: {e}")))?,
                (None, Some(p)) if p == "tacnode" => DeformationChart::tacnode(),
                (None, Some(p)) => match p.strip_prefix("cusp:").and_then(|b| b.parse::<i64>().ok()) {
                    Some(b) if b >= 1 => DeformationChart::cusp(b),
                    _ => return Err(input(format!("--preset: unknown chart `{p}`"))),
                },
                _ => return Err(input("give exactly one of --chart FILE and --preset NAME")),
            };
            let d = chamber_decomposition(&chart);
            let v = |names: &[String]| format!("V({})", names.join(","));
            let text = format!(
                "complement of negative chamber: {}\ncomplement of positive chamber: {}\nattracted: {}\nfixed tangent: {}\nrepelled: {}",
                v(&d.negative_chamber_complement),
                v(&d.positive_chamber_complement),
                d.attracted.join(" "),
                d.fixed_tangent.join(" "),
                d.repelled.join(" ")
            );
            let out = json!({
                "negative_chamber_complement": d.negative_chamber_complement,
                "positive_chamber_complement": d.positive_chamber_complement,
                "attracted": d.attracted,
                "fixed_tangent": d.fixed_tangent,
                "repelled": d.repelled,
            });
            Ok((text, out))
        }
        Command::Example { example } => {
            let Some(name) = example else {
                return Ok((EXAMPLE_NAMES.join("\n"), json!({ "examples": EXAMPLE_NAMES })));
            };
            let ex = named_example::<Q>(name)?;
            let lines = format_ideal(&ex.ideal, ex.ideal.generators());
            let mut text = format!(
                "vars: {}\n{}\nP(m) = {}\nexpected: {}",
                ex.ideal.ring().names().join(" "),
                lines.join("\n"),
                ex.hilbert_polynomial,
                ex.expectation
            );
            if let Some(rho) = &ex.distinguished_rho {
                text.push_str(&format!("\nrho: {rho}"));
            }
            if let Some(k) = &ex.kempf {
                text.push_str(&format!("\nstabilizer weights: {}", vector(&k.stabilizer_weights)));
            }
            let out = json!({
                "name": ex.name,
                "vars": ex.ideal.ring().names(),
                "generators": lines,
                "hilbert_polynomial": ex.hilbert_polynomial.to_string(),
                "expectation": ex.expectation.to_string(),
                "rho": ex.distinguished_rho.as_ref().map(|r| r.weights().to_vec()),
                "stabilizer_weights": ex.kempf.as_ref().map(|k| k.stabilizer_weights.clone()),
            });
            Ok((text, out))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, value)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
