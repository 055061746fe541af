//! Table records and their CSV/JSON renderings.
//!
//! Numbers are serialized with 17 significant digits so a round-trip
//! through either format reproduces the exact `f64`. The decimal
//! separator is always `.`: the renderers never consult the locale.

use std::fmt::Write as _;

/// One table row.
pub struct Record {
    pub x: f64,
    pub value: f64,
    pub series: &'static str,
}

/// Serialize with 17 significant digits, round-trip exact.
fn full(x: f64) -> String {
    format!("{x:.16e}")
}

/// `x,value,series` lines under the fixed header.
pub fn csv(records: &[Record]) -> String {
    let mut out = String::from("x,value,series\n");
    for r in records {
        let _ = writeln!(out, "{},{},{}", full(r.x), full(r.value), r.series);
    }
    out
}

/// An array of `{x, value, series}` objects.
pub fn json(records: &[Record]) -> String {
    let mut out = String::from("[\n");
    for (i, r) in records.iter().enumerate() {
        let comma = if i + 1 < records.len() { "," } else { "" };
        let _ = writeln!(
            out,
            "  {{\"x\": {}, \"value\": {}, \"series\": \"{}\"}}{comma}",
            full(r.x),
            full(r.value),
            r.series
        );
    }
    out.push_str("]\n");
    out
}

/// Scalar with 12 significant digits, plain decimal notation for
/// moderate magnitudes and scientific otherwise.
pub fn twelve_digits(x: f64) -> String {
    if x == 0.0 {
        return String::from("0");
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&mag) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_header_and_full_precision() {
        let rows = vec![
            Record { x: 0.0, value: 0.0, series: "F" },
            Record { x: 0.1, value: 1.0 / 3.0, series: "F" },
        ];
        let text = csv(&rows);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("x,value,series"));
        let second = lines.nth(1).unwrap();
        let fields: Vec<&str> = second.split(',').collect();
        assert_eq!(fields[2], "F");
        assert_eq!(fields[0].parse::<f64>().unwrap(), 0.1);
        assert_eq!(fields[1].parse::<f64>().unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn json_is_an_array_of_objects() {
        let rows = vec![
            Record { x: 1.0, value: 0.5, series: "g" },
            Record { x: 2.0, value: 0.25, series: "circle" },
        ];
        let text = json(&rows);
        assert!(text.starts_with("[\n"));
        assert!(text.ends_with("]\n"));
        assert!(text.contains("\"series\": \"circle\""));
        // One comma: after the first object only.
        assert_eq!(text.matches("},").count(), 1);
    }

    #[test]
    fn twelve_digit_formatting() {
        assert_eq!(twelve_digits(0.0), "0");
        assert_eq!(twelve_digits(1.0), "1.00000000000");
        assert_eq!(twelve_digits(0.631_838_006_783_55), "0.631838006784");
        assert_eq!(twelve_digits(1.1107207345395915), "1.11072073454");
        assert!(twelve_digits(3.2e-9).contains('e'));
        assert!(twelve_digits(4.7e13).contains('e'));
    }
}
