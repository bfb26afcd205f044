//! Table and polynomial rendering for the text, CSV and LaTeX formats.

use std::fmt::Write as _;

use hypinertia_core::qpoly::QPolynomial;
use hypinertia_core::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Rat(Rational),
    Poly(QPolynomial),
    Empty,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<Rational> for Cell {
    fn from(r: Rational) -> Self {
        Cell::Rat(r)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Rat(r) => r.to_string(),
            Cell::Poly(p) => p.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Cell::Text(s) => latex_escape(s),
            Cell::Rat(r) => format!("${}$", latex_rational(*r)),
            Cell::Poly(p) => format!("${}$", latex_poly(p)),
            Cell::Empty => String::new(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::plain).collect())
            .collect();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, row: &[String]| {
            let mut s = String::new();
            for (idx, (c, w)) in row.iter().zip(&widths).enumerate() {
                if idx > 0 {
                    s.push_str("  ");
                }
                let pad = w - c.chars().count();
                s.push_str(c);
                s.extend(std::iter::repeat_n(' ', pad));
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        let headers: Vec<String> = self.headers.iter().map(|h| h.to_string()).collect();
        line(&mut out, &headers);
        for row in &cells {
            line(&mut out, row);
        }
        out
    }

    pub fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::plain))?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "\\begin{{tabular}}{{{}}}",
            "l".repeat(self.headers.len())
        );
        let headers: Vec<String> = self.headers.iter().map(|h| latex_escape(h)).collect();
        let _ = writeln!(out, "{} \\\\", headers.join(" & "));
        out.push_str("\\hline\n");
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::latex).collect();
            let _ = writeln!(out, "{} \\\\", cells.join(" & "));
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Text => Ok(self.to_text()),
            Format::Csv => self.to_csv(),
            Format::Latex => Ok(self.to_latex()),
            Format::Json => {
                anyhow::bail!("tables have no JSON form; serialize the records instead")
            }
        }
    }
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '{' | '}' | '_' | '&' | '%' | '#' | '$' => {
                out.push('\\');
                out.push(ch);
            }
            _ => out.push(ch),
        }
    }
    out
}

pub fn latex_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// `2 + q^{\frac{1}{2}} + 4q^{3}`; exponents are `\frac` when not integral.
pub fn latex_poly(p: &QPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p
        .terms()
        .map(|(e, c)| {
            if e.is_zero() {
                return c.to_string();
            }
            let coeff = if c == 1 { String::new() } else { c.to_string() };
            if e == Rational::ONE {
                format!("{coeff}q")
            } else {
                format!("{coeff}q^{{{}}}", latex_rational(e))
            }
        })
        .collect();
    terms.join(" + ")
}
