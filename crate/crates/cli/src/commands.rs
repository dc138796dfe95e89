//! One function per subcommand. Each numeric column is a single library call
//! evaluated on the configured grid.

use lorentz_harmonics::basis::Mode2D;
use lorentz_harmonics::covariant::{
    contraction_law, decompose_state, evaluate_direct, evaluate_series, overlap,
    series_coefficients, CovariantState,
};
use lorentz_harmonics::density::{
    momentum_distribution, parton_distribution, reduced_kernel_numeric, reduced_spectrum, wigner,
    wigner_numeric,
};
use lorentz_harmonics::form_factor::{
    breit_frame, dipole_model, form_factor_closed, form_factor_numeric, static_form_factor,
};
use lorentz_harmonics::kinematics::{eta_from_beta, SpaceTimePoint};
use lorentz_harmonics::quadrature::{build_rule, QuadratureRule};
use lorentz_harmonics::special::chi;
use lorentz_harmonics::two_mode::n_photon_squeezed;
use lorentz_harmonics::SqueezeParameter;
use serde_json::{json, Map, Value as Json};

use crate::config::{Axis, Command, RunConfig};
use crate::table::{Table, Value};
use crate::CliError;

/// A computed table plus what the sidecar records about how it was made.
#[derive(Debug, Clone)]
pub struct Report {
    pub table: Table,
    pub settings: Map<String, Json>,
    pub quad_order: Option<usize>,
    pub max_tail: Option<f64>,
}

impl Report {
    fn new(table: Table) -> Self {
        Report { table, settings: Map::new(), quad_order: None, max_tail: None }
    }

    fn set(mut self, key: &str, value: Json) -> Self {
        self.settings.insert(key.to_string(), value);
        self
    }

    fn rule(mut self, rule: &QuadratureRule) -> Self {
        self.quad_order = Some(rule.order());
        self
    }

    fn tail(mut self, tail: f64) -> Self {
        self.max_tail = Some(self.max_tail.map_or(tail, |t| t.max(tail)));
        self
    }
}

fn rapidity(cfg: &RunConfig) -> Result<SqueezeParameter, CliError> {
    Ok(match (cfg.eta, cfg.beta) {
        (Some(e), _) => SqueezeParameter::new(e)?,
        (None, Some(b)) => eta_from_beta(b)?,
        (None, None) => SqueezeParameter::ZERO,
    })
}

fn rule(cfg: &RunConfig) -> Result<QuadratureRule, CliError> {
    Ok(build_rule(cfg.quad_order())?)
}

fn state(cfg: &RunConfig) -> Result<CovariantState, CliError> {
    Ok(CovariantState::new(cfg.modes().first, rapidity(cfg)?)?)
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match cfg.command {
        Command::Basis => basis(cfg),
        Command::BoostTable => boost_table(cfg),
        Command::Decompose => decompose(cfg),
        Command::OverlapTable => overlap_table(cfg),
        Command::EntropyCurve => entropy_curve(cfg),
        Command::WignerGrid => wigner_grid(cfg),
        Command::Parton => parton(cfg),
        Command::FormfactorCurve => formfactor_curve(cfg),
        Command::TwoMode => two_mode(cfg),
    }
}

fn basis(cfg: &RunConfig) -> Result<Report, CliError> {
    let modes = cfg.modes();
    let grid = cfg.grid();
    let mut columns = vec!["x".to_string()];
    columns.extend(modes.iter().map(|n| format!("chi_{n}")));
    let mut table = Table::with_columns(columns);
    for x in grid.points() {
        let mut row = vec![Value::from(x)];
        for n in modes.iter() {
            row.push(chi(n, x)?.into());
        }
        table.push(row);
    }
    Ok(Report::new(table).set("n", json!(modes)).set("grid", json!(grid)))
}

fn boost_table(cfg: &RunConfig) -> Result<Report, CliError> {
    let st = state(cfg)?;
    let grid = cfg.grid();
    let tol = cfg.tol();
    let tail = series_coefficients(&st, tol)?.discarded_weight;
    let mut table = Table::new(&["z", "t", "psi_direct", "psi_series"]);
    for z in grid.points() {
        for t in grid.points() {
            let p = SpaceTimePoint::new(z, t);
            table.push(vec![z.into(), t.into(), evaluate_direct(&st, p).into(), evaluate_series(&st, p, tol)?.into()]);
        }
    }
    Ok(Report::new(table)
        .set("n", json!(st.n))
        .set("eta", json!(st.s.eta()))
        .set("grid", json!(grid))
        .set("tol", json!(tol))
        .tail(tail))
}

fn decompose(cfg: &RunConfig) -> Result<Report, CliError> {
    let st = state(cfg)?;
    let rule = rule(cfg)?;
    let k_max = cfg.kmax();
    let tol = cfg.tol();
    let numeric = decompose_state(&st, k_max, &rule)?;
    let series = series_coefficients(&st, tol)?;
    let mut table = Table::new(&["n_a", "n_b", "numeric", "series"]);
    for na in 0..=k_max {
        for nb in 0..=k_max {
            let m = Mode2D::new(na, nb);
            table.push(vec![na.into(), nb.into(), numeric.get(m).into(), series.get(m).into()]);
        }
    }
    Ok(Report::new(table)
        .set("n", json!(st.n))
        .set("eta", json!(st.s.eta()))
        .set("kmax", json!(k_max))
        .set("tol", json!(tol))
        .set("numeric_discarded_weight", json!(numeric.discarded_weight))
        .rule(&rule)
        .tail(series.discarded_weight))
}

fn overlap_table(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = rapidity(cfg)?;
    let rule = rule(cfg)?;
    let modes = cfg.modes();
    let mut table = Table::new(&["n", "eta", "beta", "overlap", "contraction"]);
    for n in modes.iter() {
        let v = overlap(&CovariantState::at_rest(n)?, &CovariantState::new(n, s)?, &rule)?;
        table.push(vec![n.into(), s.eta().into(), s.beta().into(), v.into(), contraction_law(n, s).into()]);
    }
    Ok(Report::new(table).set("n", json!(modes)).set("eta", json!(s.eta())).rule(&rule))
}

fn entropy_curve(cfg: &RunConfig) -> Result<Report, CliError> {
    let modes = cfg.modes();
    let (axis, grid) = cfg.sweep();
    let tol = cfg.tol();
    let mut table = Table::new(&["n", "eta", "beta", "entropy", "purity"]);
    let mut report_tail = 0.0f64;
    for n in modes.iter() {
        for x in grid.points() {
            let s = match axis {
                Axis::Eta => SqueezeParameter::new(x)?,
                Axis::Beta => eta_from_beta(x)?,
            };
            let sp = reduced_spectrum(n, s, tol)?;
            report_tail = report_tail.max(sp.tail);
            let beta = match axis {
                Axis::Beta => x,
                Axis::Eta => s.beta(),
            };
            table.push(vec![n.into(), s.eta().into(), beta.into(), sp.entropy().into(), sp.purity().into()]);
        }
    }
    Ok(Report::new(table)
        .set("n", json!(modes))
        .set("axis", json!(axis))
        .set("grid", json!(grid))
        .set("tol", json!(tol))
        .tail(report_tail))
}

fn wigner_grid(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = rapidity(cfg)?;
    let grid = cfg.grid();
    let rule = if cfg.numeric { Some(rule(cfg)?) } else { None };
    let mut columns = vec!["z", "p", "w"];
    if rule.is_some() {
        columns.push("w_numeric");
    }
    let mut table = Table::new(&columns);
    for z in grid.points() {
        for p in grid.points() {
            let mut row = vec![z.into(), p.into(), wigner(s, z, p).into()];
            if let Some(rule) = &rule {
                row.push(wigner_numeric(s, z, p, rule)?.re.into());
            }
            table.push(row);
        }
    }
    let mut report = Report::new(table).set("eta", json!(s.eta())).set("grid", json!(grid));
    if let Some(rule) = &rule {
        report = report.rule(rule);
    }
    Ok(report)
}

fn parton(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = rapidity(cfg)?;
    let grid = cfg.grid();
    let rule = rule(cfg)?;
    let st = CovariantState::new(0, s)?;
    let mut table = Table::new(&["x", "position", "position_numeric", "momentum"]);
    for x in grid.points() {
        table.push(vec![
            x.into(),
            parton_distribution(s, x).into(),
            reduced_kernel_numeric(&st, x, x, &rule)?.into(),
            momentum_distribution(s, x).into(),
        ]);
    }
    Ok(Report::new(table).set("eta", json!(s.eta())).set("grid", json!(grid)).rule(&rule))
}

fn formfactor_curve(cfg: &RunConfig) -> Result<Report, CliError> {
    let grid = cfg.p_grid();
    let m = cfg.mass();
    let rule = if cfg.numeric { Some(rule(cfg)?) } else { None };
    let mut columns = vec!["p", "eta", "beta", "f", "f_static", "dipole"];
    if rule.is_some() {
        columns.push("f_numeric");
    }
    let mut table = Table::new(&columns);
    for p in grid.points() {
        let k = breit_frame(p, m)?;
        let mut row = vec![
            p.into(),
            k.eta.eta().into(),
            k.beta.into(),
            form_factor_closed(&k).into(),
            static_form_factor(p).into(),
            dipole_model(&k).into(),
        ];
        if let Some(rule) = &rule {
            row.push(form_factor_numeric(&k, rule)?.into());
        }
        table.push(row);
    }
    let mut report = Report::new(table)
        .set("mass", json!(m))
        .set("p_grid", json!(grid))
        .set("dipole", json!("illustrative: square of the closed-form F(p)"));
    if let Some(rule) = &rule {
        report = report.rule(rule);
    }
    Ok(report)
}

fn two_mode(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = rapidity(cfg)?;
    let n = cfg.modes().first;
    let tol = cfg.tol();
    let st = n_photon_squeezed(n, s, tol)?;
    let mut table = Table::new(&["k", "n1", "n2", "amplitude", "probability"]);
    for (k, (&c, p)) in st.amplitudes.iter().zip(st.mode2_distribution()).enumerate() {
        table.push(vec![k.into(), (n + k).into(), k.into(), c.into(), p.into()]);
    }
    Ok(Report::new(table)
        .set("n", json!(n))
        .set("eta", json!(s.eta()))
        .set("tol", json!(tol))
        .set("entanglement_entropy", json!(st.entanglement_entropy()))
        .tail(st.tail))
}
