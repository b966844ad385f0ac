use std::path::Path;

use arcclass::gln::{
    contact_profile, normal_form, verify_conjecture_case, ConjectureReport, TruncatedSeriesMatrix, Verdict,
};
use arcclass::groebner::{saturate, Budget, Ideal};
use arcclass::jets::{jet_ideal, lct_estimate};
use arcclass::multidegree::{elementary_symmetric, ideal_multidegree};
use arcclass::toric::{refinement_compare, Fan};

use crate::input::{ideal_in, parse_ints, parse_naturals, read_file, ring_for, split_polynomials, GradingSpec};
use crate::{exit, CliError, Command, Outcome};

pub(crate) fn dispatch(command: Command, budget: &Budget) -> Result<Outcome, CliError> {
    match command {
        Command::JetEquations { ideal, order, vars } => jet_equations(&ideal, order, vars.as_deref()),
        Command::Multidegree {
            grading,
            ideal,
            jets,
            saturate_by,
        } => multidegree(&grading, &ideal, jets, saturate_by.as_deref(), budget),
        Command::Saturate { ideal, by, jets, vars } => saturation(&ideal, &by, jets, vars.as_deref(), budget),
        Command::Lct {
            ideal,
            max_order,
            vars,
            divisible,
        } => lct(&ideal, max_order, vars.as_deref(), divisible, budget),
        Command::ToricCheck { fan, point } => toric_check(&fan, point.as_deref()),
        Command::ToricRefine { fine, coarse, point } => toric_refine(&fine, &coarse, &point),
        Command::GlnProfile { matrix } => {
            let x = TruncatedSeriesMatrix::parse(&read_file(&matrix)?)?;
            Ok(Outcome::ok(format!("{}\n", contact_profile(&x))))
        }
        Command::GlnNormalForm { matrix } => {
            let x = TruncatedSeriesMatrix::parse(&read_file(&matrix)?)?;
            Ok(Outcome::ok(format!("{}\n", normal_form(&x)?)))
        }
        Command::VerifyConjecture { n, m } => verify(n, &parse_naturals(&m)?, budget),
        Command::ReproducePaper { seed, cusp_grading } => Ok(crate::report::run_report(seed, &cusp_grading, budget)),
    }
}

fn names(vars: Option<&str>) -> Vec<String> {
    vars.map(|v| {
        v.split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    })
    .unwrap_or_default()
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|p| format!("{p}\n")).collect()
}

/// The ideal on `polys`, moved to the jet ring of order `jets` when given.
pub(crate) fn build_ideal(names: &[String], polys: &[&str], jets: Option<usize>) -> Result<Ideal, CliError> {
    let ring = ring_for(names, polys)?;
    let ideal = ideal_in(&ring, polys)?;
    match jets {
        Some(m) => Ok(jet_ideal(&ideal, m)?),
        None => Ok(ideal),
    }
}

fn jet_equations(ideal: &str, order: usize, vars: Option<&str>) -> Result<Outcome, CliError> {
    let j = build_ideal(&names(vars), &split_polynomials(ideal), Some(order))?;
    Ok(Outcome::ok(lines(j.generators())))
}

fn multidegree(
    grading: &str,
    ideal: &str,
    jets: Option<usize>,
    saturate_by: Option<&str>,
    budget: &Budget,
) -> Result<Outcome, CliError> {
    let spec = GradingSpec::parse(grading)?;
    let mut i = build_ideal(&spec.names, &split_polynomials(ideal), jets)?;
    if let Some(by) = saturate_by {
        let j = ideal_in(i.ring(), &split_polynomials(by))?;
        i = saturate(&i, &j, budget)?;
    }
    let g = spec.grading_for(i.ring())?;
    Ok(Outcome::ok(format!("{}\n", ideal_multidegree(&i, &g, budget)?)))
}

fn saturation(
    ideal: &str,
    by: &str,
    jets: Option<usize>,
    vars: Option<&str>,
    budget: &Budget,
) -> Result<Outcome, CliError> {
    let i = build_ideal(&names(vars), &split_polynomials(ideal), jets)?;
    let j = ideal_in(i.ring(), &split_polynomials(by))?;
    let s = saturate(&i, &j, budget)?;
    Ok(Outcome::ok(lines(s.generators())))
}

fn lct(
    ideal: &str,
    max_order: usize,
    vars: Option<&str>,
    divisible: bool,
    budget: &Budget,
) -> Result<Outcome, CliError> {
    let i = build_ideal(&names(vars), &split_polynomials(ideal), None)?;
    let d = i.ring().nvars();
    let est = lct_estimate(&i, d, max_order, divisible, budget)?;
    let dims: Vec<String> = est.dimensions.iter().map(|x| x.to_string()).collect();
    let rel = if est.exact { "=" } else { "<=" };
    Ok(Outcome::ok(format!(
        "lct{rel}{} argmax={} dims={}\n",
        est.value,
        est.argmax,
        dims.join(",")
    )))
}

fn load_fan(path: &Path) -> Result<Fan, CliError> {
    Ok(Fan::from_json(&read_file(path)?)?)
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn toric_check(path: &Path, point: Option<&str>) -> Result<Outcome, CliError> {
    let fan = load_fan(path)?;
    let mut out = format!("{}\nsmooth={}\nsr={}\n", fan.to_json(), fan.is_smooth(), fan.sr_ideal());
    if let Some(p) = point {
        let v = parse_ints(p)?;
        let loc = fan.locate_cone(&v)?;
        let mono = fan.monomial_of_point(&v)?;
        let mono = if mono.is_one() {
            "1".to_string()
        } else {
            arcclass::algebra::format_monomial(&fan.ray_ring(), &mono)
        };
        out.push_str(&format!(
            "cone=[{}] coefficients={} monomial={} pl={}\n",
            join(&fan.cones()[loc.cone]),
            join(&loc.coefficients),
            mono,
            fan.pl_value(&v)?
        ));
    }
    Ok(Outcome::ok(out))
}

fn toric_refine(fine: &Path, coarse: &Path, point: &str) -> Result<Outcome, CliError> {
    let (fine, coarse) = (load_fan(fine)?, load_fan(coarse)?);
    let c = refinement_compare(&fine, &coarse, &parse_ints(point)?)?;
    Ok(Outcome::ok(format!("psi={} phi={} e={}\n", c.psi, c.phi, c.e)))
}

/// `Π e_i^{m_i}` with each elementary symmetric function in parentheses.
pub(crate) fn factored(n: usize, m: &[usize]) -> String {
    let vars: Vec<usize> = (0..n).collect();
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let f = format!("({})", elementary_symmetric(n, &vars, i + 1));
            if e == 1 {
                f
            } else {
                format!("{f}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub(crate) fn verdict_line(r: &ConjectureReport) -> String {
    let fmt_opt = |x: &Option<usize>| x.map_or("?".to_string(), |c| c.to_string());
    match r.verdict {
        Verdict::Equal => format!("EQUAL {}", factored(r.n, &r.m)),
        Verdict::NotEqual => format!(
            "NOT-EQUAL expected={} computed={} codim={} expected-codim={}",
            factored(r.n, &r.m),
            r.computed.as_ref().map_or("?".to_string(), |c| c.to_string()),
            fmt_opt(&r.codimension),
            r.expected_codimension
        ),
        Verdict::BudgetExhausted => format!("BUDGET-EXHAUSTED expected={}", factored(r.n, &r.m)),
    }
}

fn verify(n: usize, m: &[usize], budget: &Budget) -> Result<Outcome, CliError> {
    let r = verify_conjecture_case(n, m, budget)?;
    let code = match r.verdict {
        Verdict::Equal => exit::OK,
        Verdict::NotEqual => exit::VERDICT_FALSE,
        Verdict::BudgetExhausted => exit::BUDGET,
    };
    Ok(Outcome {
        code,
        stdout: format!("{}\n", verdict_line(&r)),
        stderr: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factored_classes() {
        assert_eq!(factored(2, &[1, 1]), "(t1+t2)*(t1*t2)");
        assert_eq!(factored(3, &[0, 2, 0]), "(t1*t2+t1*t3+t2*t3)^2");
        assert_eq!(factored(2, &[0, 0]), "1");
    }
}
