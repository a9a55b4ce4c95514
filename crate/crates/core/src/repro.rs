//! Regenerates the reference worked-example tables from first principles and
//! compares them with the printed values transcribed below.
//!
//! Output is plain text, byte-stable across runs.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::alphabet::{to_numbers, Alphabet};
use crate::error::Result;
use crate::geometry::{line_si_through, Point, Poly, Rational};
use crate::scheme::index_line::encode_il;
use crate::scheme::lagrange::{encode_lg, padded_codes};
use crate::scheme::pair_line::encode_pl;

pub const PHRASE: &str = "I_LOVE_MY_MOTHER";
/// Phrase behind the combined polynomial table, and the label printed over
/// the general-form table.
pub const SHORT_PHRASE: &str = "I_LOVE_MOTHER";

/// Printed slope-intercept table, cell text verbatim.
pub const PRINTED_SLOPE_TABLE: [(&str, &str); 16] = [
    ("18.00", "-9.00"),
    ("-15.00", "57.00"),
    ("3.00", "3.00"),
    ("7.00", "-13.00"),
    ("-17.00", "107.00"),
    ("22.00", "-127.00"),
    ("-14.00", "125.00"),
    ("12.00", "-83"),
    ("2.00", "7.00"),
    ("-14.00", "167.00"),
    ("2.00", "-9.00"),
    ("5.00", "-45.00"),
    ("-12.00", "176.00"),
    ("-3.00", "50.00"),
    ("13.00", "-190"),
    ("0.60", "8.40)"),
];

/// Claim made in running text about the line through two points.
pub struct ProseClaim {
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub text: &'static str,
    pub a: &'static str,
    pub b: &'static str,
}

pub const PROSE_CLAIMS: [ProseClaim; 4] = [
    ProseClaim { from: (1, 9), to: (16, 18), text: "y=0.6x+8.4", a: "0.6", b: "8.4" },
    ProseClaim { from: (1, 9), to: (16, 18), text: "a=0.6, b=8.4", a: "0.6", b: "8.4" },
    ProseClaim { from: (1, 9), to: (2, 27), text: "y=18x-10", a: "18", b: "-10" },
    ProseClaim { from: (1, 9), to: (2, 27), text: "a=1, b=29", a: "1", b: "29" },
];

pub const PRINTED_GF_LABEL: &str = SHORT_PHRASE;

pub const PRINTED_GF_POINTS: [(i64, i64); 8] =
    [(9, 27), (12, 15), (22, 5), (27, 13), (25, 27), (13, 15), (20, 8), (5, 18)];

pub const PRINTED_GF_TABLE: [(i64, i64, i64); 8] = [
    (-12, -3, 189),
    (-10, -10, 270),
    (8, -5, -151),
    (14, 2, -404),
    (-12, 12, -24),
    (-7, -7, 196),
    (10, 15, -320),
    (9, -4, 27),
];

pub const PRINTED_COMBINED_Y: [u32; 16] = [9, 27, 12, 15, 22, 5, 27, 13, 15, 20, 8, 5, 18, 27, 27, 27];

pub const PRINTED_POLYS: [[&str; 4]; 4] = [
    ["-93", "161", "-67.5", "8.5"],
    ["184.2", "-207.72", "48.7", "-3.18"],
    ["-55.67", "82.91", "-12.77", "0.52"],
    ["15.92", "2.22", "-0.15", "0.003"],
];

pub const BLOCK_SIZE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscrepancyKind {
    /// Running text disagrees with the two-point formula and its own table.
    ProseSlopeIntercept,
    /// A table cell is not a well-formed number.
    TableCellTypo,
    /// The general-form table is labeled with a phrase whose codes it does not hold.
    PhraseLabel,
    /// Printed polynomial coefficients miss their own nodes.
    NonInterpolatingPolynomials,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub kind: DiscrepancyKind,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ReproReport {
    /// `(file name, contents)`, in write order.
    pub files: Vec<(&'static str, String)>,
    pub discrepancies: Vec<Discrepancy>,
}

fn pt(p: &Point) -> String {
    format!("({},{})", p.x, p.y)
}

fn slope_table(alphabet: &Alphabet, found: &mut Vec<Discrepancy>) -> Result<String> {
    let seq = to_numbers(PHRASE, alphabet)?;
    let cipher = encode_il(&seq)?;
    let n = seq.len();
    let points: Vec<Point> = seq.codes().iter().zip(1i64..).map(|(&c, k)| Point::new(k, c)).collect();

    let mut out = String::new();
    writeln!(out, "# Slope-intercept lines y = a*x + b through consecutive points of {PHRASE}").unwrap();
    writeln!(out, "# record k joins point k and point k+1; record {n} wraps to point 1").unwrap();
    writeln!(
        out,
        "{:>3}  {:<16}  {:>6}  {:>6}  {:>7}  {:>7}  {:>7}  {:>8}  status",
        "k", "points", "a", "b", "a.2dp", "b.2dp", "print.a", "print.b"
    )
    .unwrap();
    let mut typos = Vec::new();
    for (k, line) in cipher.records.iter().enumerate() {
        let pair = format!("{}{}", pt(&points[k]), pt(&points[(k + 1) % n]));
        let (pa, pb) = PRINTED_SLOPE_TABLE[k];
        let mut status = Vec::new();
        for (label, cell, value) in [("a", pa, &line.a), ("b", pb, &line.b)] {
            match Rational::from_decimal(cell) {
                Ok(v) if v == *value => {}
                Ok(v) => status.push(format!("{label} printed {v}, computed {value}")),
                Err(_) => {
                    let cleaned = cell.trim_end_matches(|c: char| !c.is_ascii_digit());
                    let verdict = match Rational::from_decimal(cleaned) {
                        Ok(v) if v == *value => "value otherwise correct",
                        _ => "value also wrong",
                    };
                    status.push(format!("{label} cell {cell:?} malformed"));
                    typos.push(format!("record {} cell {label} = {cell:?} is malformed ({verdict}: {value})", k + 1));
                }
            }
        }
        let status = if status.is_empty() { "ok".to_owned() } else { status.join("; ") };
        writeln!(
            out,
            "{:>3}  {:<16}  {:>6}  {:>6}  {:>7}  {:>7}  {:>7}  {:>8}  {}",
            k + 1,
            pair,
            line.a.to_string(),
            line.b.to_string(),
            line.a.to_decimal(2),
            line.b.to_decimal(2),
            pa,
            pb,
            status
        )
        .unwrap();
    }

    writeln!(out).unwrap();
    writeln!(out, "# Running-text claims").unwrap();
    let mut wrong = Vec::new();
    for claim in &PROSE_CLAIMS {
        let line = line_si_through(&Point::new(claim.from.0, claim.from.1), &Point::new(claim.to.0, claim.to.1))?;
        let a = Rational::from_decimal(claim.a)?;
        let b = Rational::from_decimal(claim.b)?;
        let ok = a == line.a && b == line.b;
        let status = if ok { "ok" } else { "MISMATCH" };
        writeln!(
            out,
            "{:?} for ({},{})-({},{}): computed a={} b={}: {status}",
            claim.text, claim.from.0, claim.from.1, claim.to.0, claim.to.1, line.a, line.b
        )
        .unwrap();
        if !ok {
            wrong.push((claim, line));
        }
    }

    if let Some((first, line)) = wrong.first() {
        let claims: Vec<String> = wrong.iter().map(|(c, _)| format!("{:?}", c.text)).collect();
        found.push(Discrepancy {
            kind: DiscrepancyKind::ProseSlopeIntercept,
            detail: format!(
                "text for points ({},{}),({},{}) states {}; the two-point formula and the table give a={}, b={}",
                first.from.0,
                first.from.1,
                first.to.0,
                first.to.1,
                claims.join(" and "),
                line.a,
                line.b
            ),
        });
    }
    if !typos.is_empty() {
        found.push(Discrepancy {
            kind: DiscrepancyKind::TableCellTypo,
            detail: format!("slope-intercept table: {}", typos.join("; ")),
        });
    }
    Ok(out)
}

fn pair_points(codes: &[u32]) -> Vec<(i64, i64)> {
    codes
        .chunks(2)
        .map(|c| (c[0] as i64, *c.get(1).unwrap_or(&27) as i64))
        .collect()
}

fn general_form_table(alphabet: &Alphabet, found: &mut Vec<Discrepancy>) -> Result<String> {
    let seq = to_numbers(PHRASE, alphabet)?;
    let cipher = encode_pl(&seq, alphabet.interval_code())?;
    let points = pair_points(seq.codes());
    let p = points.len();

    let mut out = String::new();
    writeln!(out, "# General-form lines A*x + B*y + C = 0 through consecutive paired points of {PHRASE}").unwrap();
    writeln!(out, "# A = y2-y1, B = x1-x2, C = y1(x2-x1) - x1(y2-y1); record {p} wraps to point 1").unwrap();
    writeln!(out, "{:>3}  {:<16}  {:>5}  {:>5}  {:>5}  status", "k", "points", "A", "B", "C").unwrap();
    for (k, line) in cipher.records.iter().enumerate() {
        let (x1, y1) = points[k];
        let (x2, y2) = points[(k + 1) % p];
        let printed = PRINTED_GF_TABLE[k];
        let matches = line.a == printed.0.into() && line.b == printed.1.into() && line.c == printed.2.into();
        let status = if matches { "ok".to_owned() } else { format!("printed {printed:?}") };
        writeln!(
            out,
            "{:>3}  {:<16}  {:>5}  {:>5}  {:>5}  {}",
            k + 1,
            format!("({x1},{y1})({x2},{y2})"),
            line.a.to_string(),
            line.b.to_string(),
            line.c.to_string(),
            status
        )
        .unwrap();
    }

    writeln!(out).unwrap();
    writeln!(out, "# Table label").unwrap();
    let label_points = pair_points(to_numbers(PRINTED_GF_LABEL, alphabet)?.codes());
    let phrase_points = pair_points(seq.codes());
    let label_ok = label_points == PRINTED_GF_POINTS;
    let phrase_ok = phrase_points == PRINTED_GF_POINTS;
    writeln!(
        out,
        "label {PRINTED_GF_LABEL:?} pairs to {} points: {}",
        label_points.len(),
        if label_ok { "matches table" } else { "does not match table" }
    )
    .unwrap();
    writeln!(
        out,
        "{PHRASE:?} pairs to {} points: {}",
        phrase_points.len(),
        if phrase_ok { "matches table" } else { "does not match table" }
    )
    .unwrap();
    if !label_ok && phrase_ok {
        found.push(Discrepancy {
            kind: DiscrepancyKind::PhraseLabel,
            detail: format!(
                "general-form table is labeled {PRINTED_GF_LABEL:?} ({} symbols) but its points pair up {PHRASE:?} ({} symbols)",
                PRINTED_GF_LABEL.chars().count(),
                PHRASE.chars().count()
            ),
        });
    }
    Ok(out)
}

fn lagrange_table(alphabet: &Alphabet, found: &mut Vec<Discrepancy>) -> Result<String> {
    let seq = to_numbers(SHORT_PHRASE, alphabet)?;
    let padded = padded_codes(seq.codes(), BLOCK_SIZE, alphabet.interval_code());
    let cipher = encode_lg(&seq, BLOCK_SIZE, alphabet.interval_code())?;

    let mut out = String::new();
    writeln!(out, "# Combined table for {SHORT_PHRASE} in blocks of {BLOCK_SIZE}, padded with the interval symbol").unwrap();
    let row = |label: &str, cells: Vec<String>| {
        let cells: Vec<String> = cells.iter().map(|c| format!("{c:>3}")).collect();
        format!("{label:<3} {}", cells.join(" "))
    };
    writeln!(out, "{}", row("i", (0..padded.len()).map(|k| (k % BLOCK_SIZE).to_string()).collect())).unwrap();
    writeln!(out, "{}", row("x", (1..=padded.len()).map(|k| k.to_string()).collect())).unwrap();
    writeln!(out, "{}", row("y", padded.iter().map(|c| c.to_string()).collect())).unwrap();
    let y_ok = padded == PRINTED_COMBINED_Y;
    writeln!(out, "y row vs printed: {}", if y_ok { "ok" } else { "MISMATCH" }).unwrap();

    let mut misses = Vec::new();
    for (j, poly) in cipher.records.iter().enumerate() {
        let nodes: Vec<(Rational, Rational)> = (0..BLOCK_SIZE)
            .map(|k| {
                let x = j * BLOCK_SIZE + k;
                (Rational::from(x as u32 + 1), Rational::from(padded[x]))
            })
            .collect();
        let printed = Poly::new(
            PRINTED_POLYS[j]
                .iter()
                .map(|c| Rational::from_decimal(c))
                .collect::<Result<Vec<_>>>()?,
        );
        let exact = nodes.iter().all(|(x, y)| poly.eval(x) == *y);
        let worst = nodes
            .iter()
            .map(|(x, y)| (printed.eval(x) - y).abs())
            .max()
            .unwrap_or_else(Rational::zero);

        writeln!(out).unwrap();
        writeln!(out, "# P{} over x = {}..{}", j + 1, j * BLOCK_SIZE + 1, (j + 1) * BLOCK_SIZE).unwrap();
        let exact_coeffs: Vec<String> = poly.coeffs.iter().map(|c| c.to_string()).collect();
        let decimal_coeffs: Vec<String> = poly.coeffs.iter().map(|c| c.to_decimal(4)).collect();
        writeln!(out, "exact    {}", exact_coeffs.join(" ")).unwrap();
        writeln!(out, "decimal  {}", decimal_coeffs.join(" ")).unwrap();
        writeln!(out, "printed  {}", PRINTED_POLYS[j].join(" ")).unwrap();
        writeln!(out, "exact coefficients interpolate all nodes: {}", if exact { "yes" } else { "NO" }).unwrap();
        let values: Vec<String> = nodes.iter().map(|(x, _)| printed.eval(x).to_decimal(4)).collect();
        writeln!(out, "printed coefficients at nodes: {}", values.join(" ")).unwrap();
        writeln!(out, "printed worst node error: {}", worst.to_decimal(4)).unwrap();
        if worst > Rational::new(1, 2) {
            misses.push(format!(
                "P{} (printed {}; exact {}; worst node error {})",
                j + 1,
                PRINTED_POLYS[j].join(" "),
                exact_coeffs.join(" "),
                worst.to_decimal(4)
            ));
        }
    }
    if !misses.is_empty() {
        found.push(Discrepancy {
            kind: DiscrepancyKind::NonInterpolatingPolynomials,
            detail: format!(
                "printed coefficients miss their own nodes by more than 1/2, so rounding cannot recover the y row: {}",
                misses.join("; ")
            ),
        });
    }
    Ok(out)
}

fn discrepancy_file(found: &[Discrepancy]) -> String {
    let mut out = String::new();
    writeln!(out, "# Discrepancies between printed and regenerated values ({})", found.len()).unwrap();
    for (i, d) in found.iter().enumerate() {
        writeln!(out, "{}. [{:?}] {}", i + 1, d.kind, d.detail).unwrap();
    }
    out
}

pub fn build_report() -> Result<ReproReport> {
    let alphabet = Alphabet::builtin();
    let mut slope_found = Vec::new();
    let mut gf_found = Vec::new();
    let mut lg_found = Vec::new();
    let slope = slope_table(&alphabet, &mut slope_found)?;
    let general = general_form_table(&alphabet, &mut gf_found)?;
    let lagrange = lagrange_table(&alphabet, &mut lg_found)?;

    let discrepancies: Vec<Discrepancy> = slope_found.into_iter().chain(gf_found).chain(lg_found).collect();
    let files = vec![
        ("slope_intercept.txt", slope),
        ("general_form.txt", general),
        ("lagrange.txt", lagrange),
        ("discrepancies.txt", discrepancy_file(&discrepancies)),
    ];
    Ok(ReproReport { files, discrepancies })
}

/// Writes the report files into `dir`, creating it if needed.
pub fn repro_report(dir: &Path) -> Result<Vec<PathBuf>> {
    let report = build_report()?;
    fs::create_dir_all(dir)?;
    let mut written = Vec::with_capacity(report.files.len());
    for (name, contents) in &report.files {
        let path = dir.join(name);
        fs::write(&path, contents)?;
        written.push(path);
    }
    Ok(written)
}
