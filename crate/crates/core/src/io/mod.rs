//! File formats: points CSV in, GeoJSON polygon in, results CSV out.

mod geojson;
mod points;
mod results;

pub use geojson::{
    parse_polygon_geojson, polygon_to_geojson, read_polygon_geojson, write_polygon_geojson,
};
pub use points::{read_points_csv, write_points_csv, ColumnRef, CsvPoints, PointsFileSpec};
pub use results::{format_g17, read_results_csv, write_results_csv, ResultRecord};

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::geom::GeomError;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("row {row}, column {column}: {reason}")]
    Parse {
        row: u64,
        column: String,
        reason: String,
    },
    #[error("column {0} not present in input")]
    ColumnMissing(String),
    #[error("x and y refer to the same column {0}")]
    SameColumn(String),
    #[error("invalid GeoJSON: {0}")]
    InvalidGeoJson(String),
    #[error("unsupported geometry type {0}; only a single Polygon is supported")]
    UnsupportedGeometry(String),
    #[error("ring {ring} has {len} vertices after closure, at least 4 required")]
    RingTooShort { ring: usize, len: usize },
    #[error("ring {ring}: {source}")]
    InvalidRing {
        ring: usize,
        #[source]
        source: GeomError,
    },
}

impl IoError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        if source.kind() == std::io::ErrorKind::NotFound {
            IoError::FileNotFound(path.to_path_buf())
        } else {
            IoError::Io {
                path: path.to_path_buf(),
                source,
            }
        }
    }

    pub(crate) fn csv(path: &Path, err: csv::Error) -> Self {
        let row = err.position().map_or(0, |p| p.line());
        match err.into_kind() {
            csv::ErrorKind::Io(e) => IoError::io(path, e),
            other => IoError::Parse {
                row,
                column: String::new(),
                reason: format!("{other:?}"),
            },
        }
    }
}
