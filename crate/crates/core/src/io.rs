//! Text emission for sequences and octonion sequences.

use std::fmt::Write as _;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::json;

use crate::octonion::AnyOctonion;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    JsonLines,
    Text,
}

pub const SEQ_CSV_HEADER: &str = "n,value";
pub const OCT_CSV_HEADER: &str = "n,e0,e1,e2,e3,e4,e5,e6,e7";

#[derive(Serialize)]
struct OctRow<'a> {
    n: u64,
    components: &'a [String; 8],
}

/// `label` names the value in text rows, e.g. `V` gives `V_3 = 2`.
pub fn write_scalar_rows<W: Write + ?Sized>(
    out: &mut W,
    format: Format,
    label: &str,
    rows: impl IntoIterator<Item = (u64, Scalar)>,
) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "{SEQ_CSV_HEADER}")?;
    }
    for (n, v) in rows {
        match format {
            Format::Csv => writeln!(out, "{n},{v}")?,
            Format::JsonLines => writeln!(out, "{}", json!({"n": n, "value": v.to_string()}))?,
            Format::Text => writeln!(out, "{label}_{n} = {v}")?,
        }
    }
    Ok(())
}

pub fn write_octonion_rows<W: Write + ?Sized>(
    out: &mut W,
    format: Format,
    rows: impl IntoIterator<Item = (u64, AnyOctonion)>,
) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "{OCT_CSV_HEADER}")?;
    }
    for (n, o) in rows {
        let parts = o.to_strings();
        match format {
            Format::Csv => writeln!(out, "{n},{}", parts.join(","))?,
            Format::JsonLines => {
                let line = serde_json::to_string(&OctRow {
                    n,
                    components: &parts,
                })
                .map_err(io::Error::other)?;
                writeln!(out, "{line}")?
            }
            Format::Text => writeln!(out, "{n}: {}", octonion_text(&parts))?,
        }
    }
    Ok(())
}

/// `a0 + a1 e1 + ... + a7 e7`, zero components included.
pub fn octonion_text(parts: &[String; 8]) -> String {
    let mut s = parts[0].clone();
    for (l, p) in parts.iter().enumerate().skip(1) {
        match p.strip_prefix('-') {
            Some(abs) => write!(s, " - {abs} e{l}"),
            None => write!(s, " + {p} e{l}"),
        }
        .expect("writing to a String");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::Octonion;
    use num_bigint::BigInt;

    fn oct(c: [i64; 8]) -> AnyOctonion {
        AnyOctonion::Int(Octonion::new(c.map(BigInt::from)))
    }

    #[test]
    fn octonion_csv_and_jsonl() {
        let mut buf = Vec::new();
        write_octonion_rows(
            &mut buf,
            Format::Csv,
            [(0, oct([0, 1, 1, 2, 5, 9, 18, 37]))],
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,e0,e1,e2,e3,e4,e5,e6,e7\n0,0,1,1,2,5,9,18,37\n"
        );
        let mut buf = Vec::new();
        write_octonion_rows(
            &mut buf,
            Format::JsonLines,
            [(3, oct([1, -2, 0, 0, 0, 0, 0, 4]))],
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"n\":3,\"components\":[\"1\",\"-2\",\"0\",\"0\",\"0\",\"0\",\"0\",\"4\"]}\n"
        );
    }

    #[test]
    fn scalar_rows() {
        let mut buf = Vec::new();
        let rows = [(6, Scalar::Int(13.into())), (7, Scalar::Int(24.into()))];
        write_scalar_rows(&mut buf, Format::Csv, "V", rows.clone()).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,value\n6,13\n7,24\n");
        let mut buf = Vec::new();
        write_scalar_rows(&mut buf, Format::JsonLines, "V", rows).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"n\":6,\"value\":\"13\"}\n{\"n\":7,\"value\":\"24\"}\n"
        );
    }

    #[test]
    fn text_form() {
        let parts = ["1", "-2", "0", "3", "0", "0", "0", "-1/2"].map(String::from);
        assert_eq!(
            octonion_text(&parts),
            "1 - 2 e1 + 0 e2 + 3 e3 + 0 e4 + 0 e5 + 0 e6 - 1/2 e7"
        );
    }
}
