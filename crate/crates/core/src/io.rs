//! Point-set CSV persistence.
//!
//! One point per line, coordinates comma-separated as decimal integers or
//! exact rationals rendered "p/q". The first line is the header `# dim=k`;
//! a nonempty label is kept on a second header line `# label=...` so that
//! read(write(ps)) reproduces the set exactly.

use crate::census::PointSet;
use crate::error::Error;
use crate::rational::parse_rational;
use crate::vector::RationalVector;
use std::fs;
use std::path::Path;

pub fn pointset_to_csv(ps: &PointSet) -> String {
    let mut out = format!("# dim={}\n", ps.dim());
    if !ps.label().is_empty() {
        out.push_str(&format!("# label={}\n", ps.label()));
    }
    for p in ps.points() {
        out.push_str(&p.render());
        out.push('\n');
    }
    out
}

pub fn pointset_from_csv(text: &str) -> Result<PointSet, Error> {
    let mut dim: Option<usize> = None;
    let mut label = String::new();
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("dim=") {
                dim = Some(v.trim().parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad dim header", lineno + 1))
                })?);
            } else if let Some(v) = rest.strip_prefix("label=") {
                label = v.trim().to_string();
            }
            continue;
        }
        let coords = line
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        points.push(RationalVector::new(coords)?);
    }
    let dim = dim.ok_or_else(|| Error::Parse("missing '# dim=k' header".into()))?;
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::MixedDimensions {
            expected: dim,
            found: p.dim(),
        });
    }
    PointSet::new(points, label)
}

pub fn write_pointset(ps: &PointSet, path: &Path) -> Result<(), Error> {
    fs::write(path, pointset_to_csv(ps))?;
    Ok(())
}

pub fn read_pointset(path: &Path) -> Result<PointSet, Error> {
    let text = fs::read_to_string(path)?;
    pointset_from_csv(&text)
}
