use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::{format_g17, IoError};
use crate::batch::PointBatch;
use crate::geom::Point2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnRef {
    Name(String),
    Index(usize),
}

impl ColumnRef {
    fn describe(&self) -> String {
        match self {
            ColumnRef::Name(n) => n.clone(),
            ColumnRef::Index(i) => format!("#{i}"),
        }
    }
}

impl std::str::FromStr for ColumnRef {
    type Err = std::convert::Infallible;
    /// Non-negative integers are column indices, anything else a header name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(s.parse::<usize>()
            .map_or_else(|_| ColumnRef::Name(s.to_string()), ColumnRef::Index))
    }
}

/// Where and how to read query points.
#[derive(Debug, Clone)]
pub struct PointsFileSpec {
    pub path: PathBuf,
    pub x_column: ColumnRef,
    pub y_column: ColumnRef,
    pub has_header: bool,
    pub delimiter: u8,
    /// Skip and count bad rows instead of failing on the first one.
    pub lenient: bool,
}

impl PointsFileSpec {
    /// Comma-separated with a header; x and y are the first two columns.
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self {
            path: path.into(),
            x_column: ColumnRef::Index(0),
            y_column: ColumnRef::Index(1),
            has_header: true,
            delimiter: b',',
            lenient: false,
        }
    }

    pub fn columns(mut self, x: ColumnRef, y: ColumnRef) -> Self {
        self.x_column = x;
        self.y_column = y;
        self
    }

    pub fn header(mut self, has_header: bool) -> Self {
        self.has_header = has_header;
        self
    }

    pub fn delimiter(mut self, delimiter: u8) -> Self {
        self.delimiter = delimiter;
        self
    }

    pub fn lenient(mut self, lenient: bool) -> Self {
        self.lenient = lenient;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsvPoints {
    pub batch: PointBatch<f64>,
    /// Rows dropped in lenient mode; always 0 in strict mode.
    pub skipped_rows: usize,
}

pub fn read_points_csv(spec: &PointsFileSpec) -> Result<CsvPoints, IoError> {
    if spec.x_column == spec.y_column {
        return Err(IoError::SameColumn(spec.x_column.describe()));
    }
    let file = File::open(&spec.path).map_err(|e| IoError::io(&spec.path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(spec.has_header)
        .delimiter(spec.delimiter)
        .flexible(true)
        .from_reader(std::io::BufReader::with_capacity(1 << 20, file));

    let headers = if spec.has_header {
        Some(
            reader
                .byte_headers()
                .map_err(|e| IoError::csv(&spec.path, e))?
                .clone(),
        )
    } else {
        None
    };
    let resolve = |c: &ColumnRef| -> Result<(usize, String), IoError> {
        match (c, &headers) {
            (ColumnRef::Index(i), Some(h)) => h
                .get(*i)
                .map(|name| (*i, String::from_utf8_lossy(name).into_owned()))
                .ok_or_else(|| IoError::ColumnMissing(c.describe())),
            (ColumnRef::Index(i), None) => Ok((*i, c.describe())),
            (ColumnRef::Name(n), Some(h)) => h
                .iter()
                .position(|f| f == n.as_bytes())
                .map(|i| (i, n.clone()))
                .ok_or_else(|| IoError::ColumnMissing(n.clone())),
            (ColumnRef::Name(n), None) => Err(IoError::ColumnMissing(n.clone())),
        }
    };
    let (xi, xname) = resolve(&spec.x_column)?;
    let (yi, yname) = resolve(&spec.y_column)?;
    if xi == yi {
        return Err(IoError::SameColumn(xname));
    }

    let mut points = Vec::new();
    let mut skipped_rows = 0;
    let mut record = csv::ByteRecord::new();
    loop {
        match reader.read_byte_record(&mut record) {
            Ok(false) => break,
            Ok(true) => {}
            Err(e) => {
                let err = IoError::csv(&spec.path, e);
                if spec.lenient && matches!(err, IoError::Parse { .. }) {
                    skipped_rows += 1;
                    continue;
                }
                return Err(err);
            }
        }
        let row = record.position().map_or(0, |p| p.line());
        let parsed = parse_field(&record, xi, &xname, row)
            .and_then(|x| Ok((x, parse_field(&record, yi, &yname, row)?)));
        match parsed {
            Ok((x, y)) => points.push(Point2::new(x, y).expect("finite checked by parse_field")),
            Err(_) if spec.lenient => skipped_rows += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(CsvPoints {
        batch: PointBatch::new(points),
        skipped_rows,
    })
}

fn parse_field(record: &csv::ByteRecord, idx: usize, name: &str, row: u64) -> Result<f64, IoError> {
    let err = |reason: String| IoError::Parse {
        row,
        column: name.to_string(),
        reason,
    };
    let raw = record.get(idx).ok_or_else(|| err("missing field".into()))?;
    let text = std::str::from_utf8(raw)
        .map_err(|_| err("not valid UTF-8".into()))?
        .trim();
    let v: f64 = text
        .parse()
        .map_err(|_| err(format!("`{text}` is not a number")))?;
    if !v.is_finite() {
        return Err(err(format!("`{text}` is not finite")));
    }
    Ok(v)
}

/// Writes `x,y` rows with a header, coordinates in `%.17g` form.
pub fn write_points_csv(batch: &PointBatch<f64>, path: &Path) -> Result<(), IoError> {
    let file = File::create(path).map_err(|e| IoError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut body = || -> std::io::Result<()> {
        writeln!(w, "x,y")?;
        for p in batch.iter() {
            writeln!(w, "{},{}", format_g17(p.x()), format_g17(p.y()))?;
        }
        w.flush()
    };
    body().map_err(|e| IoError::io(path, e))
}
