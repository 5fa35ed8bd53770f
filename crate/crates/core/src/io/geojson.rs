use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use super::IoError;
use crate::geom::{GeomError, Point2, Polygon, Ring};

/// Reads a `Polygon` geometry, or the first feature of a `Feature` /
/// `FeatureCollection` when it is a `Polygon`. GeoJSON positions are
/// `[longitude, latitude]` and map to `(x, y)`.
pub fn read_polygon_geojson(path: &Path) -> Result<Polygon<f64>, IoError> {
    let text = fs::read_to_string(path).map_err(|e| IoError::io(path, e))?;
    parse_polygon_geojson(&text)
}

pub fn parse_polygon_geojson(text: &str) -> Result<Polygon<f64>, IoError> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| IoError::InvalidGeoJson(e.to_string()))?;
    let geometry = locate_geometry(&doc)?;
    match type_of(geometry)? {
        "Polygon" => {}
        other => return Err(IoError::UnsupportedGeometry(other.to_string())),
    }
    let rings = geometry
        .get("coordinates")
        .and_then(Value::as_array)
        .ok_or_else(|| IoError::InvalidGeoJson("Polygon without coordinates array".into()))?;
    if rings.is_empty() {
        return Err(IoError::InvalidGeoJson("Polygon has no rings".into()));
    }
    let mut parsed = rings
        .iter()
        .enumerate()
        .map(|(i, r)| parse_ring(i, r))
        .collect::<Result<Vec<_>, _>>()?;
    let outer = parsed.remove(0);
    Ok(Polygon::new(outer, parsed))
}

fn type_of(v: &Value) -> Result<&str, IoError> {
    v.get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| IoError::InvalidGeoJson("object without a `type` member".into()))
}

fn locate_geometry(doc: &Value) -> Result<&Value, IoError> {
    match type_of(doc)? {
        "Feature" => feature_geometry(doc),
        "FeatureCollection" => {
            let first = doc
                .get("features")
                .and_then(Value::as_array)
                .and_then(|f| f.first())
                .ok_or_else(|| {
                    IoError::InvalidGeoJson("FeatureCollection has no features".into())
                })?;
            feature_geometry(first)
        }
        _ => Ok(doc),
    }
}

fn feature_geometry(feature: &Value) -> Result<&Value, IoError> {
    match feature.get("geometry") {
        Some(g) if g.is_object() => Ok(g),
        _ => Err(IoError::InvalidGeoJson("Feature without geometry".into())),
    }
}

fn parse_ring(index: usize, ring: &Value) -> Result<Ring<f64>, IoError> {
    let positions = ring
        .as_array()
        .ok_or_else(|| IoError::InvalidGeoJson(format!("ring {index} is not an array")))?;
    let mut vertices = Vec::with_capacity(positions.len() + 1);
    for (j, pos) in positions.iter().enumerate() {
        let xy = pos
            .as_array()
            .filter(|a| a.len() >= 2)
            .and_then(|a| Some((a[0].as_f64()?, a[1].as_f64()?)))
            .ok_or_else(|| {
                IoError::InvalidGeoJson(format!("ring {index}, position {j} is not [x, y]"))
            })?;
        let p = Point2::try_from(xy).map_err(|source| IoError::InvalidRing {
            ring: index,
            source,
        })?;
        vertices.push(p);
    }
    Ring::closing(vertices).map_err(|source| match source {
        GeomError::RingTooShort(len) => IoError::RingTooShort { ring: index, len },
        source => IoError::InvalidRing {
            ring: index,
            source,
        },
    })
}

pub fn polygon_to_geojson(poly: &Polygon<f64>) -> Value {
    let rings: Vec<Vec<[f64; 2]>> = poly
        .rings()
        .map(|r| r.vertices().iter().map(|p| [p.x(), p.y()]).collect())
        .collect();
    json!({ "type": "Polygon", "coordinates": rings })
}

pub fn write_polygon_geojson(poly: &Polygon<f64>, path: &Path) -> Result<(), IoError> {
    let text = polygon_to_geojson(poly).to_string();
    fs::write(path, text).map_err(|e| IoError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Polygon<f64> {
        Ring::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)])
            .unwrap()
            .into()
    }

    #[test]
    fn plain_polygon() {
        let p = parse_polygon_geojson(
            r#"{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,1],[0,0]]]}"#,
        )
        .unwrap();
        assert_eq!(p, unit_square());
        assert!(p.holes().is_empty());
    }

    #[test]
    fn auto_closes_open_ring() {
        let p = parse_polygon_geojson(
            r#"{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,1]]]}"#,
        )
        .unwrap();
        assert_eq!(p, unit_square());
    }

    #[test]
    fn feature_and_collection() {
        let f = r#"{"type":"Feature","properties":{},"geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,1],[0,0]]]}}"#;
        assert_eq!(parse_polygon_geojson(f).unwrap(), unit_square());
        let fc = format!(
            r#"{{"type":"FeatureCollection","features":[{f},{{"type":"Feature","geometry":null}}]}}"#
        );
        assert_eq!(parse_polygon_geojson(&fc).unwrap(), unit_square());
    }

    #[test]
    fn holes_follow_outer() {
        let text = r#"{"type":"Polygon","coordinates":[
            [[0,0],[10,0],[10,10],[0,10],[0,0]],
            [[2,2],[4,2],[4,4],[2,4]]]}"#;
        let p = parse_polygon_geojson(text).unwrap();
        assert_eq!(p.holes().len(), 1);
        assert_eq!(p.holes()[0].vertices().len(), 5);
    }

    #[test]
    fn unsupported_and_invalid() {
        assert!(matches!(
            parse_polygon_geojson(r#"{"type":"Point","coordinates":[0,0]}"#),
            Err(IoError::UnsupportedGeometry(t)) if t == "Point"
        ));
        let multi = r#"{"type":"MultiPolygon","coordinates":[[[[0,0],[1,0],[1,1],[0,0]]]]}"#;
        let err = parse_polygon_geojson(multi).unwrap_err();
        assert!(err.to_string().contains("MultiPolygon"));
        assert!(matches!(
            parse_polygon_geojson("{"),
            Err(IoError::InvalidGeoJson(_))
        ));
        assert!(matches!(
            parse_polygon_geojson(r#"{"type":"FeatureCollection","features":[]}"#),
            Err(IoError::InvalidGeoJson(_))
        ));
        assert!(matches!(
            parse_polygon_geojson(r#"{"type":"Polygon","coordinates":[[[0,0],["a",1],[1,1]]]}"#),
            Err(IoError::InvalidGeoJson(_))
        ));
    }

    #[test]
    fn short_ring() {
        assert!(matches!(
            parse_polygon_geojson(r#"{"type":"Polygon","coordinates":[[[0,0],[1,0],[0,0]]]}"#),
            Err(IoError::RingTooShort { ring: 0, len: 3 })
        ));
    }

    #[test]
    fn writer_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.geojson");
        let poly = Polygon::new(
            Ring::from_coords(&[(0.1, 0.2), (10.3, 0.0), (5.0, 8.7), (0.1, 0.2)]).unwrap(),
            vec![Ring::from_coords(&[(4.0, 2.0), (5.0, 2.0), (4.5, 3.0), (4.0, 2.0)]).unwrap()],
        );
        write_polygon_geojson(&poly, &path).unwrap();
        assert_eq!(read_polygon_geojson(&path).unwrap(), poly);
    }
}
