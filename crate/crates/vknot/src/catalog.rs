//! Named diagram collections and tabulated invariant output.
//!
//! A catalog file is line oriented: `name<TAB>gauss code`, with blank lines
//! and `#` comments skipped. Names must be unique.

use crate::appendix::{format_appendix, AppendixError, AppendixStyle};
use crate::diagram::GaussDiagram;
use crate::invariants::{
    all_invariants, crossing_lower_bound, symmetry_distinctness, virtual_crossing_lower_bound,
    InvariantSet,
};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Clone, Debug)]
pub struct KnotRecord {
    pub name: String,
    pub diagram: GaussDiagram,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Vec<KnotRecord>, CatalogError> {
    parse_catalog(&std::fs::read_to_string(path)?)
}

pub fn parse_catalog(text: &str) -> Result<Vec<KnotRecord>, CatalogError> {
    let mut records: Vec<KnotRecord> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fail = |message: String| CatalogError::Line { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (name, code) = trimmed
            .split_once('\t')
            .ok_or_else(|| fail("missing tab between name and gauss code".into()))?;
        let name = name.trim();
        if records.iter().any(|r| r.name == name) {
            return Err(fail(format!("duplicate name {name}")));
        }
        let diagram = code
            .trim()
            .parse()
            .map_err(|e| fail(format!("bad gauss code: {e}")))?;
        records.push(KnotRecord {
            name: name.to_string(),
            diagram,
        });
    }
    Ok(records)
}

/// One catalog row with every invariant rendered as text, shaped for
/// machine consumption.
#[derive(Serialize, Debug)]
pub struct KnotJson {
    pub name: String,
    pub gauss_code: String,
    pub writhe: i64,
    #[serde(rename = "W")]
    pub w: String,
    #[serde(rename = "Wbar")]
    pub wbar: String,
    pub f01: String,
    pub f10: String,
    pub f00: String,
    pub f11: String,
    #[serde(rename = "I")]
    pub first: String,
    #[serde(rename = "II")]
    pub second: String,
    #[serde(rename = "III_representative")]
    pub third_representative: String,
    #[serde(rename = "III_modulus")]
    pub third_modulus: String,
    pub c_lower_bound: i64,
    pub vc_lower_bound: i64,
    pub symmetry_distinct: bool,
}

pub fn knot_json(name: &str, diagram: &GaussDiagram) -> KnotJson {
    let s = all_invariants(diagram);
    json_from_set(name, diagram, &s)
}

fn json_from_set(name: &str, diagram: &GaussDiagram, s: &InvariantSet) -> KnotJson {
    KnotJson {
        name: name.to_string(),
        gauss_code: diagram.code(),
        writhe: s.writhe,
        w: s.w.to_string(),
        wbar: s.wbar.to_string(),
        f01: s.f01.to_string(),
        f10: s.f10.to_string(),
        f00: s.f00.to_string(),
        f11: s.f11.to_string(),
        first: s.first.to_string(),
        second: s.second.to_string(),
        third_representative: s.third.canonical_representative().to_string(),
        third_modulus: s.third.modulus().to_string(),
        c_lower_bound: crossing_lower_bound(s),
        vc_lower_bound: virtual_crossing_lower_bound(s),
        symmetry_distinct: symmetry_distinctness(s).distinct,
    }
}

pub fn compute_table(records: &[KnotRecord]) -> Vec<KnotJson> {
    records
        .iter()
        .map(|r| knot_json(&r.name, &r.diagram))
        .collect()
}

pub fn to_csv(rows: &[KnotJson]) -> String {
    let mut out = String::from(
        "name,gauss_code,writhe,W,Wbar,f01,f10,f00,f11,I,II,\
         III_representative,III_modulus,c_lower_bound,vc_lower_bound,symmetry_distinct\n",
    );
    for r in rows {
        let cells = [
            csv_cell(&r.name),
            csv_cell(&r.gauss_code),
            r.writhe.to_string(),
            csv_cell(&r.w),
            csv_cell(&r.wbar),
            csv_cell(&r.f01),
            csv_cell(&r.f10),
            csv_cell(&r.f00),
            csv_cell(&r.f11),
            csv_cell(&r.first),
            csv_cell(&r.second),
            csv_cell(&r.third_representative),
            csv_cell(&r.third_modulus),
            r.c_lower_bound.to_string(),
            r.vc_lower_bound.to_string(),
            r.symmetry_distinct.to_string(),
        ];
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Two tab-separated tables: W, I and II in braced low-degree-first
/// notation, then Wbar, f00, f11 and the canonical III representative in
/// symmetric notation. The symmetric table only holds for reciprocal
/// polynomials, which all four of those are.
pub fn to_appendix_tables(records: &[KnotRecord]) -> Result<String, AppendixError> {
    let sets: Vec<(&str, InvariantSet)> = records
        .iter()
        .map(|r| (r.name.as_str(), all_invariants(&r.diagram)))
        .collect();
    let mut out = String::from("name\tW\tI\tII\n");
    for (name, s) in &sets {
        let _ = writeln!(
            out,
            "{name}\t{}\t{}\t{}",
            format_appendix(&s.w, AppendixStyle::Braced)?,
            format_appendix(&s.first, AppendixStyle::Braced)?,
            format_appendix(&s.second, AppendixStyle::Braced)?,
        );
    }
    out.push_str("\nname\tWbar\tf00\tf11\tIII\n");
    for (name, s) in &sets {
        let _ = writeln!(
            out,
            "{name}\t{}\t{}\t{}\t{}",
            format_appendix(&s.wbar, AppendixStyle::Symmetric)?,
            format_appendix(&s.f00, AppendixStyle::Symmetric)?,
            format_appendix(&s.f11, AppendixStyle::Symmetric)?,
            format_appendix(
                &s.third.canonical_representative(),
                AppendixStyle::Symmetric
            )?,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# two knots
trefoil\tO1+U2+O3+U1+O2+U3+

virtual-trefoil\tO1+O2+U1+U2+
";

    #[test]
    fn parses_names_comments_and_blanks() {
        let records = parse_catalog(SAMPLE).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].name, "trefoil");
        assert_eq!(records[1].diagram.n(), 2);
    }

    #[test]
    fn rejects_bad_lines_with_numbers() {
        let err = parse_catalog("a\tO1+U1+\nb O1+U1+\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "line 2: missing tab between name and gauss code"
        );

        let err = parse_catalog("a\tO1+U1+\n\n# x\na\tO1+U1+\n").unwrap_err();
        assert_eq!(err.to_string(), "line 4: duplicate name a");

        let err = parse_catalog("a\tO1+U1-\n").unwrap_err();
        assert!(
            err.to_string().starts_with("line 1: bad gauss code:"),
            "{err}"
        );
    }

    #[test]
    fn json_row_for_the_virtual_trefoil() {
        let records = parse_catalog("vt\tO1+O2+U1+U2+\n").unwrap();
        let rows = compute_table(&records);
        let json = serde_json::to_value(&rows[0]).unwrap();
        assert_eq!(json["W"], "t-2+t^-1");
        assert_eq!(json["I"], "-t+2-t^-1");
        assert_eq!(json["II"], "-2t+4-2t^-1");
        assert_eq!(json["III_representative"], "-t+2-t^-1");
        assert_eq!(json["III_modulus"], "2t-4+2t^-1");
        assert_eq!(json["writhe"], 2);
        assert_eq!(json["c_lower_bound"], 2);
        // 2*f00 and II agree modulo Wbar here, so the symmetry variants are
        // not certified distinct.
        assert_eq!(json["symmetry_distinct"], false);
    }

    #[test]
    fn csv_has_header_and_one_row_per_knot() {
        let records = parse_catalog(SAMPLE).unwrap();
        let csv = to_csv(&compute_table(&records));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("name,gauss_code,writhe,W,"));
        assert!(lines[1].starts_with("trefoil,"));
        assert!(lines[1].ends_with(",0,0,false"), "{}", lines[1]);
    }

    #[test]
    fn appendix_tables_round_trip_through_the_parser() {
        use crate::appendix::parse_appendix;

        let records = parse_catalog(SAMPLE).unwrap();
        let text = to_appendix_tables(&records).unwrap();
        let tables: Vec<&str> = text.split("\n\n").collect();
        assert_eq!(tables.len(), 2);

        let vt_row: Vec<&str> = tables[0].lines().last().unwrap().split('\t').collect();
        assert_eq!(vt_row[1], "{-1}(1-2+1)");
        assert_eq!(
            parse_appendix(vt_row[2], AppendixStyle::Braced).unwrap(),
            "-t+2-t^-1".parse().unwrap()
        );

        let vt_row: Vec<&str> = tables[1]
            .lines()
            .rfind(|l| !l.is_empty())
            .unwrap()
            .split('\t')
            .collect();
        assert_eq!(vt_row[1], "[-4+2");
        assert_eq!(vt_row[4], "[2-1");
    }
}
