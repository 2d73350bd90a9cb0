//! Parameter records for the five region families and their JSON form.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Hex,
    K,
    Q,
    B,
    F,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Hex => "hex",
            Family::K => "k",
            Family::Q => "q",
            Family::B => "b",
            Family::F => "f",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "hex" => Family::Hex,
            "k" => Family::K,
            "q" => Family::Q,
            "b" => Family::B,
            "f" => Family::F,
            _ => return None,
        })
    }

    /// Parameter names in the order the positional constructors take them.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Hex => &["a", "b", "c"],
            Family::K => &["a", "x", "y", "z", "t"],
            Family::Q => &["a", "b", "x", "y", "z", "t"],
            Family::B => &["x", "y", "z", "t", "a", "b", "c", "d"],
            Family::F => &["x", "y", "z", "a", "b", "c", "d", "e", "f"],
        }
    }
}

/// One region of one of the five families.
///
/// Parameter order follows the usual notation: `K_a(x,y,z,t)`,
/// `Q_{a,b}(x,y,z,t)`, `B(x,y,z,t; a,b,c,d)` and `F(x,y,z; a,b,c; d,e,f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionSpec {
    Hex { a: u32, b: u32, c: u32 },
    K { a: u32, x: u32, y: u32, z: u32, t: u32 },
    Q { a: u32, b: u32, x: u32, y: u32, z: u32, t: u32 },
    B { x: u32, y: u32, z: u32, t: u32, a: u32, b: u32, c: u32, d: u32 },
    F { x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, d: u32, e: u32, f: u32 },
}

impl RegionSpec {
    pub fn family(&self) -> Family {
        match self {
            RegionSpec::Hex { .. } => Family::Hex,
            RegionSpec::K { .. } => Family::K,
            RegionSpec::Q { .. } => Family::Q,
            RegionSpec::B { .. } => Family::B,
            RegionSpec::F { .. } => Family::F,
        }
    }

    /// Parameters in [`Family::param_names`] order.
    pub fn params(&self) -> Vec<u32> {
        match *self {
            RegionSpec::Hex { a, b, c } => vec![a, b, c],
            RegionSpec::K { a, x, y, z, t } => vec![a, x, y, z, t],
            RegionSpec::Q { a, b, x, y, z, t } => vec![a, b, x, y, z, t],
            RegionSpec::B { x, y, z, t, a, b, c, d } => vec![x, y, z, t, a, b, c, d],
            RegionSpec::F { x, y, z, a, b, c, d, e, f } => vec![x, y, z, a, b, c, d, e, f],
        }
    }

    /// Inverse of [`RegionSpec::params`].
    pub fn from_params(family: Family, p: &[u32]) -> Result<Self> {
        let n = family.param_names().len();
        if p.len() != n {
            return Err(Error::Parse(format!(
                "family {} takes {n} parameters, got {}",
                family.tag(),
                p.len()
            )));
        }
        Ok(match family {
            Family::Hex => RegionSpec::Hex { a: p[0], b: p[1], c: p[2] },
            Family::K => RegionSpec::K { a: p[0], x: p[1], y: p[2], z: p[3], t: p[4] },
            Family::Q => RegionSpec::Q { a: p[0], b: p[1], x: p[2], y: p[3], z: p[4], t: p[5] },
            Family::B => RegionSpec::B {
                x: p[0],
                y: p[1],
                z: p[2],
                t: p[3],
                a: p[4],
                b: p[5],
                c: p[6],
                d: p[7],
            },
            Family::F => RegionSpec::F {
                x: p[0],
                y: p[1],
                z: p[2],
                a: p[3],
                b: p[4],
                c: p[5],
                d: p[6],
                e: p[7],
                f: p[8],
            },
        })
    }

    pub fn hex(a: u32, b: u32, c: u32) -> Self {
        RegionSpec::Hex { a, b, c }
    }

    pub fn k(a: u32, x: u32, y: u32, z: u32, t: u32) -> Self {
        RegionSpec::K { a, x, y, z, t }
    }

    pub fn q(a: u32, b: u32, x: u32, y: u32, z: u32, t: u32) -> Self {
        RegionSpec::Q { a, b, x, y, z, t }
    }

    #[allow(clippy::too_many_arguments)]
    pub fn b(x: u32, y: u32, z: u32, t: u32, a: u32, b: u32, c: u32, d: u32) -> Self {
        RegionSpec::B { x, y, z, t, a, b, c, d }
    }

    #[allow(clippy::too_many_arguments)]
    pub fn f(x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> Self {
        RegionSpec::F { x, y, z, a, b, c, d, e, f }
    }

    pub fn to_json_value(&self) -> Value {
        let params: Map<String, Value> = self
            .family()
            .param_names()
            .iter()
            .zip(self.params())
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({ "family": self.family().tag(), "params": params })
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("spec must be a JSON object".into()))?;
        let tag = obj
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing string field \"family\"".into()))?;
        let family =
            Family::from_tag(tag).ok_or_else(|| Error::Parse(format!("unknown family {tag:?}")))?;
        let params = obj
            .get("params")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing object field \"params\"".into()))?;
        let mut seen = BTreeMap::new();
        for (k, v) in params {
            if !family.param_names().contains(&k.as_str()) {
                return Err(Error::Parse(format!(
                    "family {tag} has no parameter {k:?}"
                )));
            }
            let n = v
                .as_u64()
                .filter(|n| *n <= u32::MAX as u64)
                .ok_or_else(|| Error::Parse(format!("parameter {k} must be a nonnegative integer")))?;
            seen.insert(k.as_str(), n as u32);
        }
        let values = family
            .param_names()
            .iter()
            .map(|k| {
                seen.get(k)
                    .copied()
                    .ok_or_else(|| Error::Parse(format!("missing parameter {k:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_params(family, &values)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

impl fmt::Display for RegionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        let list = |s: &[u32]| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.family() {
            Family::Hex => write!(f, "Hex({})", list(&p)),
            Family::K => write!(f, "K_{}({})", p[0], list(&p[1..])),
            Family::Q => write!(f, "Q_{{{},{}}}({})", p[0], p[1], list(&p[2..])),
            Family::B => write!(f, "B({}; {})", list(&p[..4]), list(&p[4..])),
            Family::F => write!(
                f,
                "F({}; {}; {})",
                list(&p[..3]),
                list(&p[3..6]),
                list(&p[6..])
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let s = RegionSpec::f(1, 2, 3, 4, 5, 6, 7, 8, 9);
        assert_eq!(RegionSpec::from_json(&s.to_json()).unwrap(), s);
        let h = RegionSpec::from_json(r#"{"family":"hex","params":{"a":1,"b":1,"c":1}}"#).unwrap();
        assert_eq!(h, RegionSpec::hex(1, 1, 1));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            r#"{"family":"hex","params":{"a":1,"b":1}}"#,
            r#"{"family":"hex","params":{"a":1,"b":1,"c":-1}}"#,
            r#"{"family":"hex","params":{"a":1,"b":1,"c":1,"q":2}}"#,
            r#"{"family":"z","params":{}}"#,
            r#"{"params":{}}"#,
            r#"[1,2]"#,
            "not json",
        ] {
            assert!(matches!(RegionSpec::from_json(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(RegionSpec::q(2, 3, 2, 2, 3, 2).to_string(), "Q_{2,3}(2,2,3,2)");
        assert_eq!(RegionSpec::k(2, 3, 2, 3, 2).to_string(), "K_2(3,2,3,2)");
    }
}
