use std::io::Write;

use serde::Serialize;

use hetmean::simulate::{make_profile, ProfileKind, ProfileSpec};
use hetmean::theory::{
    adaptive_bound, chierichetti_style_bound, gordon_moment_bound, median_interval_bound, s_bar,
    xia_bound, Criterion, Family, SigmaProfile,
};
use hetmean::{Constants, Error};

use crate::error::{CliError, Result};
use crate::BoundsArgs;

pub const CAVEAT: &str =
    "constants-not-tracked: unspecified multiplicative constants are reported as 1";
pub const PRECONDITION: &str = "n/a (precondition)";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub name: String,
    /// `None` when a precondition fails or the quantity does not exist.
    pub value: Option<f64>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub profile: String,
    pub n: usize,
    pub delta: f64,
    pub family: String,
    pub beta: f64,
    pub kappa: f64,
    pub caveat: &'static str,
    pub rows: Vec<BoundRow>,
}

impl BoundsReport {
    pub fn row(&self, name: &str) -> Option<&BoundRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

fn parse_params(spec: &mut ProfileSpec, params: &[String]) -> Result<()> {
    for p in params {
        let (name, value) = p
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--param `{p}` is not NAME=VALUE")))?;
        let v: f64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("--param `{p}`: `{value}` is not a number")))?;
        spec.params.insert(name.trim().to_string(), v);
    }
    Ok(())
}

pub fn profile_from_args(args: &BoundsArgs) -> Result<SigmaProfile> {
    let kind: ProfileKind = args.profile.parse()?;
    let spec = if kind == ProfileKind::Custom {
        let sigmas = args
            .sigmas
            .clone()
            .ok_or_else(|| CliError::Usage("--sigmas is required for a custom profile".into()))?;
        ProfileSpec::custom(sigmas)
    } else {
        let n = args
            .n
            .ok_or_else(|| CliError::Usage("--n is required".into()))?;
        let mut spec = ProfileSpec::new(kind, n);
        parse_params(&mut spec, &args.params)?;
        spec
    };
    Ok(make_profile(&spec)?)
}

fn row(name: impl Into<String>, result: hetmean::Result<f64>, note: String) -> Result<BoundRow> {
    match result {
        Ok(v) => Ok(BoundRow {
            name: name.into(),
            value: Some(v),
            note,
        }),
        Err(Error::Precondition(why)) => Ok(BoundRow {
            name: name.into(),
            value: None,
            note: format!("{PRECONDITION}: {why}"),
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn report(args: &BoundsArgs) -> Result<BoundsReport> {
    let profile = profile_from_args(args)?;
    let family: Family = args.family.parse()?;
    let kappa = args.kappa.unwrap_or(Constants::default().kappa);
    let delta = args.delta;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(CliError::Usage(format!("--delta {delta} is not in (0, 1)")));
    }
    if !(kappa > 0.0) {
        return Err(CliError::Usage(format!("--kappa {kappa} must be positive")));
    }
    let n = profile.len();
    let mut rows = Vec::new();

    for (label, criterion) in [
        ("s_bar (exact)", Criterion::Exact),
        ("s_bar (bounded_density)", Criterion::BoundedDensity),
    ] {
        let v = s_bar(&profile, &family, delta, kappa, criterion);
        let note = if v.is_some() { "" } else { "no admissible half-length" };
        rows.push(BoundRow {
            name: label.into(),
            value: v,
            note: note.into(),
        });
    }

    rows.push(row(
        "median_interval_bound",
        median_interval_bound(&profile, delta, family.beta),
        String::new(),
    )?);

    match adaptive_bound(&profile, &family, delta, kappa) {
        Ok(b) => rows.push(BoundRow {
            name: "adaptive_bound".into(),
            value: Some(b.value),
            note: format!(
                "min(s_bar = {}, median term = {})",
                b.s_bar.map_or("none".to_string(), |s| s.to_string()),
                b.median_term
            ),
        }),
        Err(e) => rows.push(row("adaptive_bound", Err(e), String::new())?),
    }

    let k = args.k.unwrap_or(n.div_ceil(2));
    rows.push(row(
        format!("gordon_moment_bound (k = {k}, p = {})", args.p),
        gordon_moment_bound(&profile, k, args.p, family.beta),
        String::new(),
    )?);

    let xia = xia_bound(&profile, delta);
    rows.push(BoundRow {
        name: "xia_bound".into(),
        value: Some(xia.bound),
        note: format!(
            "applicable: {} ({} <= {})",
            xia.applicable, xia.condition_lhs, xia.condition_rhs
        ),
    });

    rows.push(row(
        format!("chierichetti_style_bound (c = {})", args.c),
        chierichetti_style_bound(&profile, args.c),
        String::new(),
    )?);

    Ok(BoundsReport {
        profile: profile.label().to_string(),
        n,
        delta,
        family: family.name().to_string(),
        beta: family.beta,
        kappa,
        caveat: CAVEAT,
        rows,
    })
}

pub fn run(args: &BoundsArgs, out: &mut dyn Write) -> Result<()> {
    let r = report(args)?;
    if args.json {
        serde_json::to_writer(&mut *out, &r)?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(out, "profile: {} (n = {})", r.profile, r.n)?;
    writeln!(out, "delta: {}", r.delta)?;
    writeln!(out, "family: {} (beta = {})", r.family, r.beta)?;
    writeln!(out, "kappa: {}", r.kappa)?;
    writeln!(out, "caveat: {}", r.caveat)?;
    for row in &r.rows {
        match row.value {
            Some(v) if row.note.is_empty() => writeln!(out, "{}: {v}", row.name)?,
            Some(v) => writeln!(out, "{}: {v}  [{}]", row.name, row.note)?,
            None if row.note.starts_with(PRECONDITION) => {
                writeln!(out, "{}: {PRECONDITION}", row.name)?
            }
            None => writeln!(out, "{}: none  [{}]", row.name, row.note)?,
        }
    }
    Ok(())
}
