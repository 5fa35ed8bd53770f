use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::IoError;
use crate::batch::Verdict;

pub const RESULTS_HEADER: &str = "index,x,y,verdict";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResultRecord {
    pub index: usize,
    pub x: f64,
    pub y: f64,
    pub verdict: Verdict,
}

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros removed.
/// Every finite `f64` survives a print/parse round trip unchanged.
pub fn format_g17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let m = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_results_csv(records: &[ResultRecord], path: &Path) -> Result<(), IoError> {
    let file = File::create(path).map_err(|e| IoError::io(path, e))?;
    let mut w = BufWriter::with_capacity(1 << 20, file);
    let mut body = || -> std::io::Result<()> {
        writeln!(w, "{RESULTS_HEADER}")?;
        for r in records {
            writeln!(
                w,
                "{},{},{},{}",
                r.index,
                format_g17(r.x),
                format_g17(r.y),
                r.verdict.label()
            )?;
        }
        w.flush()
    };
    body().map_err(|e| IoError::io(path, e))
}

pub fn read_results_csv(path: &Path) -> Result<Vec<ResultRecord>, IoError> {
    let file = File::open(path).map_err(|e| IoError::io(path, e))?;
    let mut reader = csv::Reader::from_reader(std::io::BufReader::with_capacity(1 << 20, file));
    let header = reader.headers().map_err(|e| IoError::csv(path, e))?.clone();
    if header.iter().collect::<Vec<_>>().join(",") != RESULTS_HEADER {
        return Err(IoError::ColumnMissing(format!(
            "expected header `{RESULTS_HEADER}`, found `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| IoError::csv(path, e))?;
        let row = rec.position().map_or(0, |p| p.line());
        let field = |i: usize, name: &str| -> Result<&str, IoError> {
            rec.get(i).ok_or_else(|| IoError::Parse {
                row,
                column: name.into(),
                reason: "missing field".into(),
            })
        };
        let bad = |name: &str, text: &str| IoError::Parse {
            row,
            column: name.into(),
            reason: format!("cannot parse `{text}`"),
        };
        let index = field(0, "index")?;
        let x = field(1, "x")?;
        let y = field(2, "y")?;
        let verdict = field(3, "verdict")?;
        out.push(ResultRecord {
            index: index.parse().map_err(|_| bad("index", index))?,
            x: x.parse().map_err(|_| bad("x", x))?,
            y: y.parse().map_err(|_| bad("y", y))?,
            verdict: verdict.parse().map_err(|_| bad("verdict", verdict))?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn g17_matches_c_printf() {
        assert_eq!(format_g17(0.5), "0.5");
        assert_eq!(format_g17(0.1), "0.10000000000000001");
        assert_eq!(format_g17(2.0), "2");
        assert_eq!(format_g17(-3.25), "-3.25");
        assert_eq!(format_g17(1e-5), "1.0000000000000001e-05");
        assert_eq!(format_g17(1e17), "1e+17");
        assert_eq!(format_g17(12345678901234567.0), "12345678901234568");
        assert_eq!(format_g17(0.0001), "0.0001");
        assert_eq!(format_g17(-0.0), "-0");
        assert_eq!(format_g17(1e300), "1.0000000000000001e+300");
    }

    #[test]
    fn single_record_and_empty() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.csv");
        write_results_csv(
            &[ResultRecord {
                index: 0,
                x: 0.5,
                y: 0.5,
                verdict: Verdict::Inside,
            }],
            &p,
        )
        .unwrap();
        assert_eq!(
            std::fs::read_to_string(&p).unwrap(),
            "index,x,y,verdict\n0,0.5,0.5,inside\n"
        );

        write_results_csv(&[], &p).unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "index,x,y,verdict\n");
        assert!(read_results_csv(&p).unwrap().is_empty());
    }

    #[test]
    fn ten_thousand_records_roundtrip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let verdicts = [
            Verdict::Inside,
            Verdict::Outside,
            Verdict::Boundary,
            Verdict::DegenerateEdge,
        ];
        let records: Vec<_> = (0..10_000)
            .map(|i| ResultRecord {
                index: i,
                x: rng.gen_range(-180.0..180.0),
                y: rng.gen::<f64>() * 10f64.powi(rng.gen_range(-20..20)),
                verdict: verdicts[rng.gen_range(0..4)],
            })
            .collect();
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.csv");
        write_results_csv(&records, &p).unwrap();
        let back = read_results_csv(&p).unwrap();
        assert_eq!(back.len(), records.len());
        for (a, b) in records.iter().zip(&back) {
            assert_eq!(a.index, b.index);
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.y.to_bits(), b.y.to_bits());
            assert_eq!(a.verdict, b.verdict);
        }
    }

    proptest! {
        #[test]
        fn g17_roundtrips_bitwise(bits in any::<u64>()) {
            let v = f64::from_bits(bits);
            prop_assume!(v.is_finite());
            let back: f64 = format_g17(v).parse().unwrap();
            prop_assert_eq!(back.to_bits(), v.to_bits());
        }
    }
}
