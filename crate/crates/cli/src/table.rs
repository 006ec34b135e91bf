//! Fixed-width text output. One header line per block so outputs diff well.

use std::io::{self, Write};

use siegel_weights::boundary::Provenance;
use siegel_weights::verify::VerifyReport;
use siegel_weights::{AnalysisReport, CohomologyEntry, Parabolic};

use crate::SweepRow;

fn stratum_label(m: Parabolic, stratum: Option<siegel_weights::StratumDatum>) -> String {
    match (m, stratum) {
        (Parabolic::Siegel, Some(s)) => format!("Z0(g={},c={})", s.g(), s.c()),
        (Parabolic::Siegel, None) => "Z0".to_string(),
        (Parabolic::Klingen, _) => "Z1".to_string(),
    }
}

fn opt_pair(pair: Option<(i64, i64)>) -> String {
    match pair {
        Some((a, b)) => format!("[{a}, {b}]"),
        None => "[]".to_string(),
    }
}

const ENTRY_HEADER: &str =
    "stratum           n_cl  n_perv  weight  p_weight  rank_lo  rank_hi  nonzero  source";

fn write_entry(out: &mut impl Write, label: &str, e: &CohomologyEntry) -> io::Result<()> {
    let source = match e.provenance {
        Provenance::Proven => "proven",
        Provenance::Derived => "derived",
    };
    writeln!(
        out,
        "{:<16} {:>5} {:>7} {:>7} {:>9} {:>8} {:>8} {:>8}  {}",
        label,
        e.n_classical,
        e.n_perverse,
        e.weight,
        e.perverse_weight,
        e.rank_lower,
        e.rank_upper,
        e.nonzero,
        source
    )
}

pub fn write_report(out: &mut impl Write, report: &AnalysisReport) -> io::Result<()> {
    let l = report.lambda;
    writeln!(
        out,
        "lambda                 ({}, {}, {})",
        l.k1(),
        l.k2(),
        l.r()
    )?;
    writeln!(out, "k                      {}", report.k)?;
    writeln!(
        out,
        "avoided_interval       {}",
        opt_pair(report.avoided_interval)
    )?;
    writeln!(
        out,
        "occurring_weights      {}",
        opt_pair(report.occurring_weights)
    )?;
    writeln!(out, "regular                {}", report.regular)?;
    writeln!(
        out,
        "in_avoidance_category  {}",
        report.in_avoidance_category
    )?;
    writeln!(out, "duality_twist          {}", report.duality_twist)?;
    match report.intermediate.interior_concentration_degree {
        Some(d) => writeln!(out, "interior_degree        {d}")?,
        None => writeln!(out, "interior_degree        -")?,
    }

    writeln!(out)?;
    writeln!(
        out,
        "m  q  highest_weight        levi_dim  restriction  weight"
    )?;
    for table in &report.kostant {
        for module in &table.modules {
            let hw = module.highest_weight;
            writeln!(
                out,
                "{}  {}  {:<20} {:>9} {:>12} {:>7}",
                module.m.index(),
                module.q,
                format!("({}, {}, {})", hw.k1(), hw.k2(), hw.r()),
                module.levi_dim,
                module.restriction_weight,
                module.motivic_weight
            )?;
        }
    }

    writeln!(out)?;
    writeln!(out, "boundary")?;
    writeln!(out, "{ENTRY_HEADER}")?;
    for profile in &report.boundary {
        let label = stratum_label(profile.m, profile.stratum);
        for e in &profile.entries {
            write_entry(out, &label, e)?;
        }
    }

    writeln!(out)?;
    writeln!(out, "intermediate")?;
    writeln!(out, "{ENTRY_HEADER}")?;
    for profile in &report.intermediate.profiles {
        let label = stratum_label(profile.m, profile.stratum);
        for e in &profile.entries {
            write_entry(out, &label, e)?;
        }
        if let Some(kernel) = &profile.kernel_entry {
            write_entry(out, &format!("{label}:ker"), kernel)?;
        }
    }

    writeln!(out)?;
    writeln!(out, "witnesses")?;
    for w in &report.intermediate.witnesses {
        writeln!(
            out,
            "{:<16} n_perverse={} weight={}",
            stratum_label(w.m, w.stratum),
            w.n_perverse,
            w.weight
        )?;
    }
    Ok(())
}

pub fn write_sweep(out: &mut impl Write, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(
        out,
        "{:>5} {:>5} {:>5} {:>5} {:>12}",
        "k1", "k2", "r", "k", "closed_form"
    )?;
    for row in rows {
        writeln!(
            out,
            "{:>5} {:>5} {:>5} {:>5} {:>12}",
            row.k1, row.k2, row.r, row.k, row.closed_form
        )?;
    }
    Ok(())
}

pub fn write_verify(out: &mut impl Write, report: &VerifyReport) -> io::Result<()> {
    writeln!(
        out,
        "{:<28} {:>7} {:>7}  status",
        "suite", "passed", "failed"
    )?;
    for suite in &report.suites {
        let status = if suite.failed == 0 { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{:<28} {:>7} {:>7}  {}",
            suite.name, suite.passed, suite.failed, status
        )?;
    }
    Ok(())
}
