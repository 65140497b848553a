//! The `speclab` command line: argument parsing and dispatch to the library.
//!
//! Every command produces a [`ReportTable`]; commands that assert something
//! record a verdict, and the binary exits nonzero when any check fails.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arithmetic::{ArithmeticProgression, PrimeSpec};
use crate::error::{Error, Result};
use crate::joining::{
    adjoint_decompositions, graph_disjointness, multivalued_graph_check, off_diagonal_joining,
    uniform_average, AdjointDecompositions, RationalMatrix,
};
use crate::models::{
    gp_reduce, multiplier_for, parse_model_spec, parse_word, truncate, GpAction, GpLetter,
    ProductModel,
};
use crate::perm::Permutation;
use crate::report::{set_cell, Format, Provenance, ReportTable};
use crate::spectral::{
    check_rigidity, check_wl, closed_form_profile, closed_form_summary, hm_prime_powers_u64,
    mm_theorem4, multiplicity_set_theorem5, oracle_profile, prime_power_comparison, ratio_scan,
    theorem4_example, verify_closed_form_range, wl_progressions, ProfileSummary,
};

#[derive(Debug, Parser)]
#[command(
    name = "speclab",
    version,
    about = "Exact spectral multiplicities of discrete-spectrum models"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicity profiles of R^n over a range of n.
    Profile(ProfileArgs),
    /// mm(R^N) = product of the primes of P dividing N.
    Theorem4(Theorem4Args),
    /// Multiplicity sets of R^N and their size 2^m.
    Theorem5(NArgs),
    /// hm(R^n) for prime-power models, or the target-prime comparison.
    Hm(HmArgs),
    /// Distinct values of hm(R^n)/n up to a horizon.
    LimitPoints(LimitArgs),
    /// Closed-form profiles against the cycle-type oracle.
    VerifyOracle(VerifyArgs),
    /// Rigidity R^n → I along a progression on a truncation.
    Rigidity(RigidityArgs),
    /// Weak-limit chain certificate for several models.
    WlVerify(WlArgs),
    /// The multiplier automorphism conjugating R to R^q.
    Conjugacy(ConjugacyArgs),
    /// Off-diagonal joinings, multi-valued graphs and Markov decompositions.
    Joining(JoiningArgs),
    /// Normal forms and the word problem in G_p.
    GpWord(GpArgs),
}

/// A closed range `a..b` or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub start: u64,
    pub end: u64,
}

impl Range {
    pub fn iter(self) -> std::ops::RangeInclusive<u64> {
        self.start..=self.end
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{t:?} is not a non-negative integer"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if start == 0 || start > end {
            return Err(format!("range {s:?} must satisfy 1 ≤ a ≤ b"));
        }
        Ok(Range { start, end })
    }
}

/// `r mod m`, `all`, or `none`.
pub fn parse_progression(s: &str) -> std::result::Result<ArithmeticProgression, String> {
    match s.trim() {
        "all" => return Ok(ArithmeticProgression::all()),
        "none" | "∅" => return Ok(ArithmeticProgression::empty()),
        _ => {}
    }
    let (r, m) = s
        .split_once("mod")
        .ok_or_else(|| format!("expected `r mod m`, found {s:?}"))?;
    let big = |t: &str| {
        BigUint::from_str(t.trim()).map_err(|_| format!("{t:?} is not a non-negative integer"))
    };
    let m = big(m)?;
    if m.is_zero() {
        return Err("modulus must be positive".into());
    }
    Ok(ArithmeticProgression::new(big(r)?, m))
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long)]
    pub n: Range,
    /// Truncation level; defaults to the model depth.
    #[arg(long)]
    pub level: Option<usize>,
    /// Count eigenvalues from the materialized permutation instead of the
    /// closed form.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct Theorem4Args {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long = "N")]
    pub n: Option<Range>,
    /// Evaluate N = p_1⋯p_k + 1 for this k.
    #[arg(long)]
    pub example: Option<usize>,
}

#[derive(Debug, Args)]
pub struct NArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long = "N")]
    pub n: Range,
}

#[derive(Debug, Args)]
pub struct HmArgs {
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<Range>,
    /// Compare the prime-power construction for this prime target with and
    /// without the factor Z_target.
    #[arg(long)]
    pub compare: Option<u64>,
    /// Exponent given to every prime below the comparison target.
    #[arg(long, default_value_t = 10)]
    pub exponent: u32,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub horizon: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    #[arg(long)]
    pub level: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RigidityArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long)]
    pub level: Option<usize>,
    /// `r mod m`; defaults to the multiples of the truncation order.
    #[arg(long, value_parser = parse_progression)]
    pub progression: Option<ArithmeticProgression>,
}

#[derive(Debug, Args)]
pub struct WlArgs {
    /// One spec per model, in chain order.
    #[arg(long, required = true)]
    pub spec: Vec<PathBuf>,
    /// The periods p_1, …, p_k.
    #[arg(long, value_delimiter = ',', required = true)]
    pub primes: Vec<u64>,
    #[arg(long, default_value_t = 1)]
    pub level: usize,
}

#[derive(Debug, Args)]
pub struct ConjugacyArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub level: Option<usize>,
}

#[derive(Debug, Args)]
pub struct JoiningArgs {
    /// Size of the cyclic space Z_N.
    #[arg(long)]
    pub modulus: Option<usize>,
    /// Φ = +phi on Z_N.
    #[arg(long)]
    pub phi: Option<usize>,
    /// R = +r on Z_N.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Order of Φ.
    #[arg(long)]
    pub p: Option<usize>,
    /// Use the cyclic extension of order p over Z_base instead of Z_N.
    #[arg(long, requires = "p")]
    pub extension: Option<usize>,
    /// Markov mode: J is the uniform average of these rotations of Z_N.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["phi", "extension"])]
    pub average: Option<Vec<u64>>,
    /// Append the Markov operator entries to the report.
    #[arg(long)]
    pub dump: bool,
}

#[derive(Debug, Args)]
pub struct GpArgs {
    #[arg(long)]
    pub p: usize,
    /// A word in s, S = s⁻¹, f = φ, F = φ⁻¹.
    #[arg(long, conflicts_with = "random")]
    pub word: Option<String>,
    /// Check the homomorphism property on this many random word pairs.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 16)]
    pub max_len: usize,
}

/// Run a parsed command line. `command_line` is recorded in the footer.
pub fn run(cli: &Cli, command_line: &str) -> Result<ReportTable> {
    let mut prov = Provenance::new(command_line);
    match &cli.command {
        Command::Profile(a) => profile(a, &mut prov),
        Command::Theorem4(a) => theorem4(a, &mut prov),
        Command::Theorem5(a) => theorem5(a, &mut prov),
        Command::Hm(a) => hm(a, &mut prov),
        Command::LimitPoints(a) => limit_points(a, &mut prov),
        Command::VerifyOracle(a) => verify_oracle(a, &mut prov),
        Command::Rigidity(a) => rigidity(a, &mut prov),
        Command::WlVerify(a) => wl_verify(a, &mut prov),
        Command::Conjugacy(a) => conjugacy(a, &mut prov),
        Command::Joining(a) => joining(a, prov),
        Command::GpWord(a) => gp_word(a, cli.seed, prov),
    }
}

/// Render `table` in `format` to `out` or stdout.
pub fn emit(table: &ReportTable, format: Format, out: Option<&Path>) -> Result<()> {
    let text = table.render(format)?;
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_model(path: &Path, prov: &mut Provenance) -> Result<ProductModel> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    prov.record_spec(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| Error::Io(format!("{}: not UTF-8", path.display())))?;
    parse_model_spec(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn prime_spec(model: &ProductModel, path: &Path) -> Result<PrimeSpec> {
    model
        .spec()
        .cloned()
        .ok_or_else(|| Error::InvalidPrimeSpec(format!("{} lists no primes", path.display())))
}

fn model_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn u64_moduli(model: &ProductModel, level: usize) -> Result<Vec<u64>> {
    Ok(truncate(model, level)?.0.moduli().to_vec())
}

fn profile(a: &ProfileArgs, prov: &mut Provenance) -> Result<ReportTable> {
    let model = load_model(&a.spec, prov)?;
    let level = a.level.unwrap_or(model.depth());
    let moduli = model.truncation_moduli(level)?.to_vec();
    let id = model_id(&a.spec);
    let rotation = if a.oracle {
        Some(truncate(&model, level)?.1.permutation()?)
    } else {
        None
    };
    let mut t = ReportTable::new(
        [
            "n",
            "mm",
            "cardm",
            "multiplicity_set",
            "homogeneous",
            "dimension",
            "model-id",
        ],
        prov.clone(),
    );
    for n in a.n.iter() {
        let s: ProfileSummary = match &rotation {
            Some(r) => oracle_profile(&pow_u64(r, n)?)?.summary(),
            None => closed_form_summary(&moduli, &BigUint::from(n))?,
        };
        t.push([
            n.to_string(),
            s.mm.to_string(),
            s.cardm().to_string(),
            set_cell(&s.multiplicity_set),
            s.is_homogeneous().to_string(),
            s.dimension.to_string(),
            id.clone(),
        ]);
    }
    Ok(t)
}

fn pow_u64(perm: &Permutation, n: u64) -> Result<Permutation> {
    let n = i64::try_from(n).map_err(|_| Error::Mismatch(format!("power {n} is too large")))?;
    Ok(perm.pow(n))
}

fn theorem4(a: &Theorem4Args, prov: &mut Provenance) -> Result<ReportTable> {
    let model = load_model(&a.spec, prov)?;
    let spec = prime_spec(&model, &a.spec)?;
    if let Some(k) = a.example {
        let ex = theorem4_example(&spec, k)?;
        let mut t = ReportTable::new(["k", "N", "hypothesis", "mm", "coprime_to_P"], prov.clone());
        t.push([
            k.to_string(),
            ex.n.to_string(),
            ex.hypothesis_holds.to_string(),
            ex.formula_value.to_string(),
            ex.coprime_to_p.to_string(),
        ]);
        return Ok(t);
    }
    let range =
        a.n.ok_or_else(|| Error::Mismatch("theorem4 needs --N or --example".into()))?;
    let mut t = ReportTable::new(["N", "mm", "hit_primes"], prov.clone());
    for n in range.iter() {
        let big = BigUint::from(n);
        let hits: Vec<u64> = crate::arithmetic::factor_against(&big, &spec)?
            .hit_primes()
            .collect();
        t.push([
            n.to_string(),
            mm_theorem4(&big, &spec)?.to_string(),
            set_cell(hits),
        ]);
    }
    Ok(t)
}

fn theorem5(a: &NArgs, prov: &mut Provenance) -> Result<ReportTable> {
    let model = load_model(&a.spec, prov)?;
    let spec = prime_spec(&model, &a.spec)?;
    let mut t = ReportTable::new(
        ["N", "multiplicity_set", "cardm", "m", "status"],
        prov.clone(),
    );
    for n in a.n.iter() {
        let big = BigUint::from(n);
        let set = multiplicity_set_theorem5(&big, &spec)?;
        let m = crate::arithmetic::factor_against(&big, &spec)?.hits.len();
        let status = t.check(set.len() == 1usize << m);
        t.push([
            n.to_string(),
            set_cell(&set),
            set.len().to_string(),
            m.to_string(),
            status.into(),
        ]);
    }
    Ok(t)
}

fn hm(a: &HmArgs, prov: &mut Provenance) -> Result<ReportTable> {
    if let Some(target) = a.compare {
        let c = prime_power_comparison(target, a.exponent)?;
        let mut t = ReportTable::new(
            [
                "configuration",
                "primes",
                "first_n_with_hm_below_n",
                "hm_at_target",
            ],
            prov.clone(),
        );
        for (name, cfg) in [
            ("with_target", &c.with_target),
            ("without_target", &c.without_target),
        ] {
            t.push([
                name.to_string(),
                cfg.spec.len().to_string(),
                cfg.first_prefix_failure
                    .map_or("-".into(), |n| n.to_string()),
                cfg.hm_at_target.to_string(),
            ]);
        }
        t.push([
            "discrepancy".to_string(),
            "-".into(),
            "-".into(),
            c.discrepancy().to_string(),
        ]);
        return Ok(t);
    }
    let (path, range) = match (&a.spec, a.n) {
        (Some(p), Some(r)) => (p, r),
        _ => {
            return Err(Error::Mismatch(
                "hm needs --spec and --n, or --compare".into(),
            ))
        }
    };
    let model = load_model(path, prov)?;
    let spec = prime_spec(&model, path)?;
    let mut t = ReportTable::new(["n", "hm", "hm_equals_n"], prov.clone());
    for n in range.iter() {
        let v = hm_prime_powers_u64(n, &spec)?;
        t.push([n.to_string(), v.to_string(), (v == n).to_string()]);
    }
    Ok(t)
}

fn limit_points(a: &LimitArgs, prov: &mut Provenance) -> Result<ReportTable> {
    let model = load_model(&a.spec, prov)?;
    let spec = prime_spec(&model, &a.spec)?;
    let mut t = ReportTable::new(["value", "witness_n"], prov.clone());
    for lp in ratio_scan(&spec, a.horizon)? {
        t.push([lp.value.to_string(), lp.witness.to_string()]);
    }
    Ok(t)
}

fn verify_oracle(a: &VerifyArgs, prov: &mut Provenance) -> Result<ReportTable> {
    let model = load_model(&a.spec, prov)?;
    let moduli = u64_moduli(&model, a.level.unwrap_or(model.depth()))?;
    let mismatches = verify_closed_form_range(&moduli, a.max_n)?;
    let mut t = ReportTable::new(["n", "mm", "status"], prov.clone());
    for n in 1..=a.max_n {
        let status = t.check(mismatches.binary_search(&n).is_err());
        t.push([
            n.to_string(),
            closed_form_profile(&moduli, n)?.mm().to_string(),
            status.into(),
        ]);
    }
    Ok(t)
}

fn rigidity(a: &RigidityArgs, prov: &mut Provenance) -> Result<ReportTable> {
    let model = load_model(&a.spec, prov)?;
    let level = a.level.unwrap_or(model.depth());
    let progression = match &a.progression {
        Some(p) => p.clone(),
        None => ArithmeticProgression::multiples_of(model.truncation_order(level)?),
    };
    let cert = check_rigidity(&model, &progression, level)?;
    let mut t = ReportTable::new(
        ["level", "progression", "n", "limit", "status"],
        prov.clone(),
    );
    for stage in &cert.stages {
        if stage.vacuous {
            let status = t.check(true);
            t.push([
                level.to_string(),
                stage.progression.to_string(),
                "-".into(),
                stage.limit.clone(),
                status.into(),
            ]);
        }
        for v in &stage.verdicts {
            let status = t.check(v.holds);
            t.push([
                level.to_string(),
                stage.progression.to_string(),
                v.n.to_string(),
                stage.limit.clone(),
                status.into(),
            ]);
        }
    }
    Ok(t)
}

fn wl_verify(a: &WlArgs, prov: &mut Provenance) -> Result<ReportTable> {
    let models = a
        .spec
        .iter()
        .map(|p| load_model(p, prov))
        .collect::<Result<Vec<_>>>()?;
    let primes = a.primes.clone();
    let progressions = wl_progressions(&models, &primes, a.level)?;
    let mut t = ReportTable::new(
        [
            "level",
            "stage",
            "progression",
            "n",
            "limit",
            "status",
            "note",
        ],
        prov.clone(),
    );
    if let Some(idx) = progressions
        .iter()
        .position(ArithmeticProgression::is_empty)
    {
        let status = t.check(false);
        t.push([
            a.level.to_string(),
            (idx + 2).to_string(),
            "∅".into(),
            "-".into(),
            "-".into(),
            status.into(),
            "alignment has no solution".into(),
        ]);
        return Ok(t);
    }
    let cert = check_wl(&models, &primes, &progressions, a.level)?;
    for stage in &cert.stages {
        let note = stage.note.clone().unwrap_or_default();
        if stage.vacuous {
            let status = t.check(true);
            t.push([
                a.level.to_string(),
                stage.stage.to_string(),
                stage.progression.to_string(),
                "-".into(),
                stage.limit.clone(),
                status.into(),
                "single model".into(),
            ]);
        }
        for v in &stage.verdicts {
            let status = t.check(v.holds && stage.note.is_none());
            t.push([
                a.level.to_string(),
                stage.stage.to_string(),
                stage.progression.to_string(),
                v.n.to_string(),
                stage.limit.clone(),
                status.into(),
                note.clone(),
            ]);
        }
    }
    Ok(t)
}

fn conjugacy(a: &ConjugacyArgs, prov: &mut Provenance) -> Result<ReportTable> {
    let model = load_model(&a.spec, prov)?;
    let level = a.level.unwrap_or(model.depth());
    let mut t = ReportTable::new(["check", "level", "q", "status", "detail"], prov.clone());
    let row = |t: &mut ReportTable, check: &str, outcome: Result<String>| {
        let (ok, detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        let status = t.check(ok);
        t.push([
            check.to_string(),
            level.to_string(),
            a.q.to_string(),
            status.into(),
            detail,
        ]);
    };
    let psi = match multiplier_for(&model, a.q, level) {
        Ok(psi) => psi,
        Err(e) => {
            row(&mut t, "multiplier", Err(e));
            return Ok(t);
        }
    };
    row(
        &mut t,
        "multiplier",
        Ok(format!("c = {}", set_cell(psi.coefficients()))),
    );
    row(
        &mut t,
        "automorphism",
        psi.verify_automorphism().map(|_| String::new()),
    );
    let (_, rotation) = truncate(&model, level)?;
    row(
        &mut t,
        "conjugation",
        psi.verify_conjugation(&rotation, a.q)
            .map(|_| "Ψ⁻¹RΨ = R^q".into()),
    );
    let r = rotation.permutation()?;
    let profiles = oracle_profile(&r).and_then(|pr| {
        let pq = oracle_profile(&pow_u64(&r, a.q)?)?;
        if pr == pq {
            Ok(format!(
                "{} eigenvalues, mm = {}",
                pr.distinct_eigenvalues(),
                pr.mm()
            ))
        } else {
            Err(Error::Mismatch("profiles of R and R^q differ".into()))
        }
    });
    row(&mut t, "profile", profiles);
    Ok(t)
}

fn rotation_of(n: usize, k: usize) -> Result<Permutation> {
    Permutation::from_fn(n, |x| (x + k) % n)
}

fn joining(a: &JoiningArgs, prov: Provenance) -> Result<ReportTable> {
    let mut t = ReportTable::new(["check", "subject", "value", "status"], prov);
    if let Some(shifts) = &a.average {
        let n = a
            .modulus
            .ok_or_else(|| Error::Mismatch("--average needs --modulus".into()))?;
        let perms = shifts
            .iter()
            .map(|&k| rotation_of(n, k as usize % n.max(1)))
            .collect::<Result<Vec<_>>>()?;
        let verdict = graph_disjointness(&rotation_of(n, 1)?, &perms)?;
        let status = t.check(verdict.disjoint());
        let detail = match verdict.overlaps.first() {
            Some(&(i, j, x)) => format!("rotations {i} and {j} agree at x = {x}"),
            None => "pairwise disjoint".into(),
        };
        t.push(["disjointness", "graphs", &detail, status]);
        let j = uniform_average(&perms)?;
        markov_rows(&mut t, &j, perms.len())?;
        if a.dump {
            dump_rows(&mut t, &j);
        }
        return Ok(t);
    }

    let p =
        a.p.ok_or_else(|| Error::Mismatch("joining needs --p (or --average)".into()))?;
    let (phi, r) = match a.extension {
        Some(base) => {
            let action = GpAction::cyclic_extension(p, &rotation_of(base, 1)?)?;
            (action.phi().clone(), action.rotation())
        }
        None => {
            let n = a
                .modulus
                .ok_or_else(|| Error::Mismatch("joining needs --modulus or --extension".into()))?;
            let phi = a
                .phi
                .ok_or_else(|| Error::Mismatch("joining needs --phi".into()))?;
            (
                rotation_of(n, phi % n.max(1))?,
                rotation_of(n, a.r % n.max(1))?,
            )
        }
    };
    let graph = multivalued_graph_check(&phi, &r, p)?;
    for (x, images) in graph.domain.iter().zip(&graph.graph) {
        let clash = graph.coincidences.iter().find(|c| c.0 == *x);
        let status = t.check(clash.is_none());
        let value = format!(
            "({})",
            images
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let subject = match clash {
            Some(&(_, j, k)) => format!("x={x} (images {j} and {k} coincide)"),
            None => format!("x={x}"),
        };
        t.push(["graph", &subject, &value, status]);
    }
    let tt = r.pow(p as i64);
    let nu = off_diagonal_joining(&phi, &tt, &r)?;
    let invariance = nu.verify_invariance();
    let status = t.check(invariance.is_ok());
    let detail = invariance
        .err()
        .map_or("ν(T̃a×T̃b) = ν(a×b)".into(), |e| e.to_string());
    t.push(["invariance", "ν", &detail, status]);
    let valued = nu.valuedness();
    let status = t.check(valued == p);
    t.push(["valuedness", "ν", &valued.to_string(), status]);
    let m = nu.markov_operator();
    markov_rows(&mut t, &m, p)?;
    if a.dump {
        dump_rows(&mut t, &m);
    }
    Ok(t)
}

fn markov_rows(t: &mut ReportTable, j: &RationalMatrix, expected: usize) -> Result<()> {
    let AdjointDecompositions { star_j, j_star } = adjoint_decompositions(j)?;
    for (name, d) in [("J*J", &star_j), ("JJ*", &j_star)] {
        let valued = d.valuedness();
        let zero_diag = d
            .remainder
            .as_ref()
            .is_none_or(RationalMatrix::has_zero_diagonal);
        let status = t.check(valued == Some(expected as u64) && zero_diag);
        let value = format!(
            "α = {}, n = {}",
            d.alpha,
            valued.map_or("-".into(), |v| v.to_string())
        );
        t.push(["markov", name, &value, status]);
    }
    Ok(())
}

fn dump_rows(t: &mut ReportTable, m: &RationalMatrix) {
    for (i, line) in m.dump().lines().enumerate() {
        t.push(["matrix", &format!("row {i}"), line, ""]);
    }
}

fn word_string(word: &[GpLetter]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter()
        .map(|l| match l {
            GpLetter::S => 's',
            GpLetter::SInv => 'S',
            GpLetter::Phi => 'f',
            GpLetter::PhiInv => 'F',
        })
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<GpLetter> {
    const LETTERS: [GpLetter; 4] = [GpLetter::S, GpLetter::SInv, GpLetter::Phi, GpLetter::PhiInv];
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| LETTERS[rng.gen_range(0..4)]).collect()
}

/// Relation words: `φ^p` and every commutator `[t_i, t_j]`.
pub fn relation_words(p: usize) -> Vec<(String, Vec<GpLetter>)> {
    let mut out = vec![(format!("f^{p}"), vec![GpLetter::Phi; p])];
    let conj = |i: usize, letter: GpLetter| {
        let mut w = vec![GpLetter::Phi; i];
        w.push(letter);
        w.extend(std::iter::repeat_n(GpLetter::PhiInv, i));
        w
    };
    for i in 0..p {
        for j in i + 1..p {
            let mut w = conj(i, GpLetter::S);
            w.extend(conj(j, GpLetter::S));
            w.extend(conj(i, GpLetter::SInv));
            w.extend(conj(j, GpLetter::SInv));
            out.push((format!("[t_{i},t_{j}]"), w));
        }
    }
    out
}

fn gp_word(a: &GpArgs, seed: u64, prov: Provenance) -> Result<ReportTable> {
    if a.p < 2 {
        return Err(Error::Mismatch("G_p needs p ≥ 2".into()));
    }
    let action = GpAction::cyclic_extension(a.p, &rotation_of(3, 1)?)?;
    let faithful = |w: &[GpLetter]| action.evaluate(&gp_reduce(a.p, w)) == action.evaluate_word(w);
    let mut t = ReportTable::new(["case", "word", "normal_form", "identity", "status"], prov);

    if let Some(text) = &a.word {
        let w = parse_word(text)?;
        let g = gp_reduce(a.p, &w);
        let status = t.check(faithful(&w) && gp_reduce(a.p, &g.to_word()) == g);
        t.push([
            "word".to_string(),
            word_string(&w),
            g.to_string(),
            g.is_identity().to_string(),
            status.into(),
        ]);
        return Ok(t);
    }

    for (name, w) in relation_words(a.p) {
        let g = gp_reduce(a.p, &w);
        let status = t.check(g.is_identity() && action.evaluate_word(&w).is_identity());
        t.push([
            name,
            word_string(&w),
            g.to_string(),
            g.is_identity().to_string(),
            status.into(),
        ]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..a.random.unwrap_or(0) {
        let (w1, w2) = (
            random_word(&mut rng, a.max_len),
            random_word(&mut rng, a.max_len),
        );
        let joined: Vec<GpLetter> = w1.iter().chain(&w2).copied().collect();
        let g = gp_reduce(a.p, &joined);
        let ok = g == gp_reduce(a.p, &w1).mul(&gp_reduce(a.p, &w2)) && faithful(&joined);
        let status = t.check(ok);
        t.push([
            format!("pair {i}"),
            format!("{}·{}", word_string(&w1), word_string(&w2)),
            g.to_string(),
            g.is_identity().to_string(),
            status.into(),
        ]);
    }
    Ok(t)
}
