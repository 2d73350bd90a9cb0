//! Region arguments: a family spec, or an explicit list of cells.
//!
//! ```text
//! {"family":"hex","params":{"a":1,"b":1,"c":1}}
//! {"cells":[[0,0,"up"],[0,0,"down"]]}
//! ```
//!
//! An argument that names an existing file is read from that file.

use std::path::Path;

use serde_json::Value;

use qtiling::lattice::{build_region, Region, RegionSpec, UnitTriangle};

use crate::Failure;

pub struct RegionArg {
    /// Present when the region came from a family spec.
    pub spec: Option<RegionSpec>,
    pub region: Region,
}

pub fn read_arg(arg: &str) -> Result<String, Failure> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('{') && path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

pub fn parse_region(arg: &str) -> Result<RegionArg, Failure> {
    let text = read_arg(arg)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("spec is not JSON: {e}")))?;
    if let Some(cells) = v.get("cells") {
        let cells = cells
            .as_array()
            .ok_or_else(|| Failure::Parse("\"cells\" must be an array".into()))?
            .iter()
            .map(parse_cell)
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(RegionArg {
            spec: None,
            region: Region::from_cells(cells),
        });
    }
    let spec = RegionSpec::from_json_value(&v)?;
    Ok(RegionArg {
        spec: Some(spec),
        region: build_region(&spec),
    })
}

fn parse_cell(v: &Value) -> Result<UnitTriangle, Failure> {
    let bad = || Failure::Parse(format!("a cell is [i, j, \"up\"|\"down\"], got {v}"));
    let [i, j, o] = v.as_array().map(Vec::as_slice).ok_or_else(bad)? else {
        return Err(bad());
    };
    let coord = |x: &Value| x.as_i64().and_then(|n| i32::try_from(n).ok()).ok_or_else(bad);
    let (i, j) = (coord(i)?, coord(j)?);
    match o.as_str() {
        Some("up") => Ok(UnitTriangle::up(i, j)),
        Some("down") => Ok(UnitTriangle::down(i, j)),
        _ => Err(bad()),
    }
}
