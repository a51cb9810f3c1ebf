//! CSV and JSON emission.

use std::io::{self, Write};

use legendre_core::transform::ConjugatePoint;
use serde::Serialize;

/// Shortest decimal that round-trips to the same `f64`. Never uses an
/// exponent, a thousands separator or a locale; `-0` prints as `0`.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        "0".to_owned()
    } else {
        format!("{v}")
    }
}

/// Conjugate table with header `y,x,G` and `\n` line endings.
pub fn write_csv<W: Write>(out: &mut W, rows: &[ConjugatePoint]) -> io::Result<()> {
    out.write_all(b"y,x,G\n")?;
    for p in rows {
        writeln!(
            out,
            "{},{},{}",
            format_number(p.y),
            format_number(p.x),
            format_number(p.value)
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Row {
    y: f64,
    x: f64,
    #[serde(rename = "G")]
    value: f64,
}

/// Conjugate table as a JSON array of `{"y", "x", "G"}` objects.
pub fn write_json_rows<W: Write>(out: &mut W, rows: &[ConjugatePoint]) -> io::Result<()> {
    let rows: Vec<Row> = rows
        .iter()
        .map(|p| Row {
            y: p.y,
            x: p.x,
            value: p.value,
        })
        .collect();
    write_json(out, &rows)
}

/// One JSON document on a single line.
pub fn write_json<W: Write, T: Serialize + ?Sized>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}
