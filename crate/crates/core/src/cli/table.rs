use std::io::Write;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::json;

use super::{csv_err, io, Format};
use crate::codes::{tenengolts, Budget, Statistic, TenengoltsVariant, Word};
use crate::enumerators::{oracle_extended, tenengolts_cardinality, Kind};
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(super) enum TableName {
    /// Codewords and cardinalities of T_{a1,a2}(3,3)
    T33,
    /// Codewords of T_{a1,a2}(2,3) and its three variants
    T23,
    /// Statistics and extended enumerator of T_{0,0}(3,3)
    #[value(name = "t33-extended")]
    T33Extended,
}

fn codewords(n: usize, r: u32, a1: u64, a2: u64, v: TenengoltsVariant, budget: Budget) -> Result<Vec<String>> {
    Ok(tenengolts(n, r, a1, a2, v)?
        .enumerate_codewords(budget)?
        .map(|w| w.to_string())
        .collect())
}

fn braces(words: &[String]) -> String {
    format!("{{{}}}", words.join(", "))
}

/// Left-aligned columns separated by " | ".
fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
    }
    out
}

fn write_csv(rows: &[Vec<String>], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).map_err(csv_err)?;
    }
    out.write_all(&w.into_inner().map_err(|e| Error::invalid(e.to_string()))?)
        .map_err(io)
}

pub(super) fn render(which: TableName, budget: Budget, format: Format, out: &mut dyn Write) -> Result<()> {
    match which {
        TableName::T33 => t33(budget, format, out),
        TableName::T23 => t23(budget, format, out),
        TableName::T33Extended => t33_extended(budget, format, out),
    }
}

fn t33(budget: Budget, format: Format, out: &mut dyn Write) -> Result<()> {
    let (n, r) = (3usize, 3u32);
    let mut words = Vec::new();
    let mut cards: Vec<Vec<BigInt>> = Vec::new();
    for a1 in 0..n as u64 {
        let mut wrow = Vec::new();
        let mut crow = Vec::new();
        for a2 in 0..r as u64 {
            wrow.push(codewords(n, r, a1, a2, TenengoltsVariant::Gt, budget)?);
            crow.push(tenengolts_cardinality(n, r, a1, a2)?);
        }
        words.push(wrow);
        cards.push(crow);
    }
    match format {
        Format::Json => {
            let card_strings: Vec<Vec<String>> =
                cards.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            let v = json!({"n": n, "r": r, "codewords": words, "cardinality": card_strings});
            writeln!(out, "{v}").map_err(io)
        }
        Format::Csv => {
            let mut rows = vec![vec!["a1".to_string(), "a2".into(), "codewords".into(), "cardinality".into()]];
            for a1 in 0..n {
                for a2 in 0..r as usize {
                    rows.push(vec![
                        a1.to_string(),
                        a2.to_string(),
                        words[a1][a2].join(" "),
                        cards[a1][a2].to_string(),
                    ]);
                }
            }
            write_csv(&rows, out)
        }
        Format::Text => {
            let header: Vec<String> =
                std::iter::once("a1\\a2".to_string()).chain((0..r).map(|a| a.to_string())).collect();
            let mut wrows = vec![header.clone()];
            let mut crows = vec![header];
            for a1 in 0..n {
                let mut wr = vec![a1.to_string()];
                wr.extend(words[a1].iter().map(|w| braces(w)));
                wrows.push(wr);
                let mut cr = vec![a1.to_string()];
                cr.extend(cards[a1].iter().map(ToString::to_string));
                crows.push(cr);
            }
            write!(
                out,
                "Codewords of T_{{a1,a2}}(3,3)\n{}\nCardinalities |T_{{a1,a2}}(3,3)|\n{}",
                grid(&wrows),
                grid(&crows)
            )
            .map_err(io)
        }
    }
}

fn t23(budget: Budget, format: Format, out: &mut dyn Write) -> Result<()> {
    let (n, r) = (2usize, 3u32);
    let variants = [
        TenengoltsVariant::Gt,
        TenengoltsVariant::Ge,
        TenengoltsVariant::Lt,
        TenengoltsVariant::Le,
    ];
    let mut rows = Vec::new();
    for a1 in 0..n as u64 {
        for a2 in 0..r as u64 {
            let sets = variants
                .iter()
                .map(|&v| codewords(n, r, a1, a2, v, budget))
                .collect::<Result<Vec<_>>>()?;
            rows.push((a1, a2, sets));
        }
    }
    match format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(a1, a2, s)| json!({"a1": a1, "a2": a2, "gt": s[0], "ge": s[1], "lt": s[2], "le": s[3]}))
                .collect();
            writeln!(out, "{}", json!({"n": n, "r": r, "rows": items})).map_err(io)
        }
        Format::Csv => {
            let mut table = vec![["a1", "a2", "gt", "ge", "lt", "le"].map(String::from).to_vec()];
            for (a1, a2, s) in &rows {
                let mut row = vec![a1.to_string(), a2.to_string()];
                row.extend(s.iter().map(|w| w.join(" ")));
                table.push(row);
            }
            write_csv(&table, out)
        }
        Format::Text => {
            let mut table = vec![["<a1,a2>", "T", "T(>=)", "T(<)", "T(<=)"].map(String::from).to_vec()];
            for (a1, a2, s) in &rows {
                let mut row = vec![format!("<{a1},{a2}>")];
                row.extend(s.iter().map(|w| braces(w)));
                table.push(row);
            }
            write!(out, "Codewords of T_{{a1,a2}}(2,3) and its variants\n{}", grid(&table)).map_err(io)
        }
    }
}

fn monomial(x: &Word, gamma: u64, sigma: u64) -> Result<String> {
    let mut exps = vec![gamma, sigma];
    exps.extend(x.composition());
    let p = IntPoly::from_terms(&["z1", "z2", "w0", "w1", "w2"], [(exps, BigInt::from(1))])?;
    Ok(p.to_string())
}

fn t33_extended(budget: Budget, format: Format, out: &mut dyn Write) -> Result<()> {
    let spec = tenengolts(3, 3, 0, 0, TenengoltsVariant::Gt)?;
    let mut rows = Vec::new();
    for x in spec.enumerate_codewords(budget)? {
        let g = Statistic::GammaGt.evaluate(&x)? as u64;
        let s = Statistic::Sigma.evaluate(&x)? as u64;
        let tau = x.composition();
        let mono = monomial(&x, g, s)?;
        rows.push((x.to_string(), g, s, tau, mono));
    }
    let ext = oracle_extended(&spec, budget)?;
    let complete = ext.specialize(Kind::Complete)?;
    let hamming = ext.specialize(Kind::Hamming)?;
    match format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(x, g, s, t, m)| json!({"x": x, "gamma": g, "sigma": s, "tau": t, "monomial": m}))
                .collect();
            let v = json!({
                "rows": items,
                "extended": ext.to_string(),
                "complete": complete.to_string(),
                "hamming": hamming.to_string(),
            });
            writeln!(out, "{v}").map_err(io)
        }
        Format::Csv => {
            let mut table = vec![["x", "gamma", "sigma", "tau0", "tau1", "tau2", "monomial"].map(String::from).to_vec()];
            for (x, g, s, t, m) in &rows {
                let mut row = vec![x.clone(), g.to_string(), s.to_string()];
                row.extend(t.iter().map(u64::to_string));
                row.push(m.clone());
                table.push(row);
            }
            write_csv(&table, out)
        }
        Format::Text => {
            let mut table = vec![["x", "gamma", "sigma", "tau0", "tau1", "tau2", "monomial"].map(String::from).to_vec()];
            for (x, g, s, t, m) in &rows {
                let mut row = vec![x.clone(), g.to_string(), s.to_string()];
                row.extend(t.iter().map(u64::to_string));
                row.push(m.clone());
                table.push(row);
            }
            write!(
                out,
                "Codewords of T_{{0,0}}(3,3) with (gamma, sigma)\n{}\nextended: {ext}\ncomplete: {complete}\nhamming: {hamming}\n",
                grid(&table)
            )
            .map_err(io)
        }
    }
}
