use quadrupole_core::criticality::critical_table;
use quadrupole_core::quadrupole::channels;
use quadrupole_core::{
    char_value, oracle_char_value, pairing_gap, QuadrupoleStrength, Regime, SymmetryClass,
};

use crate::record::OutputRecord;
use crate::{ChannelsArgs, CharArgs, CliError, GapArgs, TableArgs};

fn resolve_class(class: &str, order: Option<u32>) -> Result<(SymmetryClass, u32), CliError> {
    if let Ok(c) = class.parse::<SymmetryClass>() {
        let order = order.ok_or_else(|| CliError::Usage(format!("--order is required with --class {c}")))?;
        c.rank(order)?;
        return Ok((c, order));
    }
    let (c, implied) = SymmetryClass::parse_label(class)
        .map_err(|e| CliError::Usage(format!("bad class or label {class:?}: {e}")))?;
    match order {
        Some(m) if m != implied => Err(CliError::Usage(format!(
            "--order {m} contradicts label {class}"
        ))),
        _ => Ok((c, implied)),
    }
}

pub fn cmd_char(args: &CharArgs) -> Result<Vec<OutputRecord>, CliError> {
    let (class, order) = resolve_class(&args.class, args.order)?;
    let q = match (args.q, args.xi) {
        (Some(q), None) => q,
        (None, Some(xi)) => QuadrupoleStrength::new(xi)?.mathieu_q(),
        _ => return Err(CliError::Usage("give exactly one of --q and --xi".into())),
    };
    let cv = char_value(class, order, q, args.tol)?;
    let mut rec = OutputRecord::new()
        .with("label", cv.label())
        .with("class", class.name())
        .with("order", order)
        .with("q", q)
        .with("value", cv.value)
        .with("truncation", cv.truncation);
    if args.oracle {
        let oracle = oracle_char_value(class, order, q, args.tol)?;
        rec = rec
            .with("oracle_value", oracle)
            .with("discrepancy", (oracle - cv.value).abs());
    }
    Ok(vec![rec])
}

pub fn cmd_table(args: &TableArgs) -> Result<Vec<OutputRecord>, CliError> {
    if args.max_pairs == 0 {
        return Err(CliError::Usage("--max-pairs must be at least 1".into()));
    }
    Ok(critical_table(args.max_pairs, args.tol)?
        .into_iter()
        .map(|p| {
            OutputRecord::new()
                .with("eigenvalue_label", p.label())
                .with("class", p.class.name())
                .with("order", p.order)
                .with("q_c", p.q_c)
                .with("xi_c", p.xi_c)
                .with("residual", p.residual)
        })
        .collect())
}

/// One row per channel; every row repeats the total number of open channels.
pub fn cmd_channels(args: &ChannelsArgs) -> Result<Vec<OutputRecord>, CliError> {
    let xi = QuadrupoleStrength::new(args.xi)?;
    let list = channels(xi, args.max_order)?;
    let open = list
        .iter()
        .filter(|(_, r)| r.regime == Regime::UnboundedBelow)
        .count();
    Ok(list
        .into_iter()
        .map(|(c, r)| {
            OutputRecord::new()
                .with("label", c.label())
                .with("class", c.class.name())
                .with("order", c.order)
                .with("xi", c.xi)
                .with("e_theta", c.e_theta)
                .with("alpha", r.alpha)
                .with("regime", r.regime.name())
                .with("open_channels", open)
        })
        .collect())
}

pub fn cmd_gap(args: &GapArgs) -> Result<Vec<OutputRecord>, CliError> {
    if let Some(bad) = args.q.iter().find(|q| !(q.is_finite() && **q > 0.0)) {
        return Err(CliError::Usage(format!("every q must be positive, got {bad}")));
    }
    args.q
        .iter()
        .map(|&q| {
            let g = pairing_gap(args.m, q)?;
            Ok(OutputRecord::new()
                .with("m", args.m)
                .with("q", q)
                .with("a", g.a)
                .with("b", g.b)
                .with("gap", g.gap)
                .with("log_gap", g.gap.ln()))
        })
        .collect()
}
