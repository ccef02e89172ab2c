//! CSV and JSON-lines writers.

use std::io::Write;

use serde::Serialize;

use crate::error::SimResult;

/// Float formatting for every emitted number: 15 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.14e}")
}

/// Writes a header and rows of floats, LF terminated.
pub fn write_csv<W: Write>(out: W, header: &[&str], rows: &[Vec<f64>]) -> SimResult<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(|&v| fmt_f64(v)))?;
    }
    w.flush()?;
    Ok(())
}

/// Like [`write_csv`] but with a leading text label column per row.
pub fn write_labeled_csv<W: Write>(
    out: W,
    header: &[&str],
    rows: &[(String, Vec<f64>)],
) -> SimResult<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(header)?;
    for (label, row) in rows {
        let mut rec = vec![label.clone()];
        rec.extend(row.iter().map(|&v| fmt_f64(v)));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_jsonl<W: Write, T: Serialize>(mut out: W, items: &[T]) -> SimResult<()> {
    for item in items {
        serde_json::to_writer(&mut out, item)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &["a", "b"], &[vec![1.0, -0.5]]).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "a,b\n1.00000000000000e0,-5.00000000000000e-1\n");
    }
}
