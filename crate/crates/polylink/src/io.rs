//! Reading point clouds and JSON specs from disk.

use std::fs::File;
use std::path::Path;

use polylink_core::PointCloud;
use serde::de::DeserializeOwned;

use crate::error::{HarnessError, Result};

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|source| HarnessError::Io { path: path.display().to_string(), source })
}

/// Points from CSV, one point per row. A first row that does not parse as
/// numbers is taken to be a header.
pub fn load_points_csv(path: &Path) -> Result<PointCloud> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(open(path)?);
    let mut points: Vec<Vec<f64>> = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(p) => points.push(p),
            Err(_) if line == 0 => continue,
            Err(e) => {
                return Err(HarnessError::Input(format!("{}: row {}: {e}", path.display(), line + 1)));
            }
        }
    }
    let mut cloud = PointCloud::from_points(&points)?;
    cloud.polytope_id = path.display().to_string();
    Ok(cloud)
}

pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_reader(std::io::BufReader::new(open(path)?))?)
}
