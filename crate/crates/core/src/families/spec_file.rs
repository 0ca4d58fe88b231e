//! JSON instance files, e.g.
//!
//! ```json
//! {"family": "B", "n": 1, "p": [1, 2, 3], "q": {"order": 6, "power": 1}}
//! ```
//!
//! `q` is one of `{"order": ℓ, "power": k}` (meaning `ζ_ℓ^k`),
//! `{"rational": "p/q"}`, or an explicit `{"level": ℓ, "coeffs": [...]}`.

use serde::{Deserialize, Serialize};
use serde_path_to_error::{Path, Segment};

use crate::error::InvalidParams;
use crate::scalars::{CycloScalar, Rational};

use super::FamilyParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyTag {
    GroupZ2,
    GroupZSemiZ,
    EnvAbelian,
    EnvNonabelian,
    A,
    B,
    C,
    CLift,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<Rational>>,
}

/// Wire form of [`FamilyParams`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub family: FamilyTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<ScalarSpec>,
}

fn pointer(path: &Path) -> String {
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out.push_str(&format!("/{index}")),
            Segment::Map { key } => out.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { variant } => out.push_str(&format!("/{variant}")),
            Segment::Unknown => {}
        }
    }
    out
}

/// Parses and validates an instance file.
pub fn parse_instance(text: &str) -> Result<FamilyParams, InvalidParams> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let spec: InstanceSpec = serde_path_to_error::deserialize(de).map_err(|e| {
        let msg = e.inner().to_string();
        InvalidParams::new(pointer(e.path()), msg)
    })?;
    spec.to_params()
}

impl ScalarSpec {
    pub fn to_scalar(&self) -> Result<CycloScalar, InvalidParams> {
        match self {
            ScalarSpec { order: Some(o), power, rational: None, level: None, coeffs: None } => {
                if *o == 0 {
                    return Err(InvalidParams::new("/q/order", "order must be positive"));
                }
                Ok(CycloScalar::root_of_unity(*o, power.unwrap_or(1)))
            }
            ScalarSpec { order: None, power: None, rational: Some(r), level: None, coeffs: None } => {
                Ok(CycloScalar::rational(r.clone()))
            }
            ScalarSpec { order: None, power: None, rational: None, level: Some(l), coeffs: Some(c) } => {
                if *l == 0 {
                    return Err(InvalidParams::new("/q/level", "level must be positive"));
                }
                Ok(CycloScalar::from_coeffs(*l, c))
            }
            _ => Err(InvalidParams::new(
                "/q",
                "q must be {\"order\", \"power\"}, {\"rational\"} or {\"level\", \"coeffs\"}",
            )),
        }
    }

    /// Most readable encoding of a scalar.
    pub fn from_scalar(q: &CycloScalar) -> Self {
        if let Some(r) = q.as_rational() {
            return ScalarSpec { rational: Some(r), ..Default::default() };
        }
        if let Some(o) = q.order_of_unity() {
            let o = o as u32;
            if let Some(k) = (1..o as i64).find(|&k| CycloScalar::root_of_unity(o, k) == *q) {
                return ScalarSpec { order: Some(o), power: Some(k), ..Default::default() };
            }
        }
        ScalarSpec { level: Some(q.level()), coeffs: Some(q.coeffs()), ..Default::default() }
    }
}

impl InstanceSpec {
    pub fn to_params(&self) -> Result<FamilyParams, InvalidParams> {
        let n = || self.n.ok_or_else(|| InvalidParams::new("/n", "missing field `n`"));
        let n_pos = || {
            n().and_then(|n| {
                if n < 1 {
                    Err(InvalidParams::new("/n", "n must be a positive integer"))
                } else {
                    Ok(n as u64)
                }
            })
        };
        let q = || {
            self.q
                .as_ref()
                .ok_or_else(|| InvalidParams::new("/q", "missing field `q`"))
                .and_then(ScalarSpec::to_scalar)
        };
        let unexpected = |field: &str, present: bool| {
            if present {
                Err(InvalidParams::new(format!("/{field}"), format!("family {:?} takes no `{field}`", self.family)))
            } else {
                Ok(())
            }
        };
        let params = match self.family {
            FamilyTag::GroupZ2 | FamilyTag::GroupZSemiZ | FamilyTag::EnvAbelian | FamilyTag::EnvNonabelian => {
                unexpected("n", self.n.is_some())?;
                unexpected("p", self.p.is_some())?;
                unexpected("q", self.q.is_some())?;
                match self.family {
                    FamilyTag::GroupZ2 => FamilyParams::GroupZ2,
                    FamilyTag::GroupZSemiZ => FamilyParams::GroupZSemiZ,
                    FamilyTag::EnvAbelian => FamilyParams::EnvAbelian,
                    _ => FamilyParams::EnvNonabelian,
                }
            }
            FamilyTag::A => {
                unexpected("p", self.p.is_some())?;
                FamilyParams::A { n: n()?, q: q()? }
            }
            FamilyTag::B => {
                let p = self.p.as_ref().ok_or_else(|| InvalidParams::new("/p", "missing field `p`"))?;
                if let Some(i) = p.iter().position(|&v| v < 1) {
                    return Err(InvalidParams::new(format!("/p/{i}"), "p entries must be positive"));
                }
                FamilyParams::B { n: n_pos()?, p: p.iter().map(|&v| v as u64).collect(), q: q()? }
            }
            FamilyTag::C => {
                unexpected("p", self.p.is_some())?;
                unexpected("q", self.q.is_some())?;
                FamilyParams::C { n: n_pos()? }
            }
            FamilyTag::CLift => {
                unexpected("p", self.p.is_some())?;
                FamilyParams::CLift { n: n_pos()?, q: q()? }
            }
        };
        params.validate()?;
        Ok(params)
    }

    pub fn from_params(params: &FamilyParams) -> Self {
        let tag = match params {
            FamilyParams::GroupZ2 => FamilyTag::GroupZ2,
            FamilyParams::GroupZSemiZ => FamilyTag::GroupZSemiZ,
            FamilyParams::EnvAbelian => FamilyTag::EnvAbelian,
            FamilyParams::EnvNonabelian => FamilyTag::EnvNonabelian,
            FamilyParams::A { .. } => FamilyTag::A,
            FamilyParams::B { .. } => FamilyTag::B,
            FamilyParams::C { .. } => FamilyTag::C,
            FamilyParams::CLift { .. } => FamilyTag::CLift,
        };
        let n = match params {
            FamilyParams::A { n, .. } => Some(*n),
            FamilyParams::B { n, .. } | FamilyParams::C { n } | FamilyParams::CLift { n, .. } => Some(*n as i64),
            _ => None,
        };
        let p = match params {
            FamilyParams::B { p, .. } => Some(p.iter().map(|&v| v as i64).collect()),
            _ => None,
        };
        InstanceSpec { family: tag, n, p, q: params.q().map(ScalarSpec::from_scalar) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::root_of_unity;

    #[test]
    fn parses_b() {
        let p = parse_instance(r#"{"family":"B","n":1,"p":[1,2,3],"q":{"order":6,"power":1}}"#).unwrap();
        assert_eq!(p, FamilyParams::B { n: 1, p: vec![1, 2, 3], q: root_of_unity(6, 1) });
    }

    #[test]
    fn reports_locations() {
        let e = parse_instance(r#"{"family":"B","n":1,"p":[1,2,4],"q":{"order":8,"power":1}}"#).unwrap_err();
        assert_eq!(e.message, "p not pairwise coprime");
        let e = parse_instance(r#"{"family":"A","n":"two","q":{"rational":"1"}}"#).unwrap_err();
        assert_eq!(e.pointer, "/n");
        let e = parse_instance(r#"{"family":"A","n":1,"q":{"rational":"1/0"}}"#).unwrap_err();
        assert_eq!(e.pointer, "/q/rational");
        let e = parse_instance(r#"{"family":"Q"}"#).unwrap_err();
        assert_eq!(e.pointer, "/family");
        let e = parse_instance(r#"{"family":"B","n":1,"p":[1,-2,3],"q":{"order":6}}"#).unwrap_err();
        assert_eq!(e.pointer, "/p/1");
    }

    #[test]
    fn round_trip() {
        for p in [
            FamilyParams::A { n: -2, q: root_of_unity(5, 3) },
            FamilyParams::A { n: 0, q: CycloScalar::from_int(2) },
            FamilyParams::C { n: 4 },
            FamilyParams::GroupZSemiZ,
            FamilyParams::B { n: 7, p: vec![1, 3, 5], q: root_of_unity(105, 2) },
        ] {
            let text = serde_json::to_string(&InstanceSpec::from_params(&p)).unwrap();
            assert_eq!(parse_instance(&text).unwrap(), p, "{text}");
        }
    }
}
