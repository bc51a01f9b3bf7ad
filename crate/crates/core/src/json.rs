//! JSON wire formats.
//!
//! Arrays are `{"n", "m", "rows"}` with rows bottom to top. Grid functions
//! carry their domain: `{"domain": "triangle", "n", "values"}` with row `v`
//! holding `h(0, v) ..= h(v, v)`, `{"domain": "corner", "n", "m", "values"}`
//! with row `j` holding `f(0, j) ..= f(n, j)`, and `{"domain": "prism", "n",
//! "m", "values"}` with `values[z][y][x]` for `y <= z`. Pairs are `{"a", "b"}`.
//! Every value type validates on the way in and round-trips exactly.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::array::{Array, CornerFunction};
use crate::error::Error;
use crate::hive::{AntiStandardPair, StandardPair, TriangleFunction};
use crate::octahedron::PrismFunction;
use crate::scalar::Scalar;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrayRepr {
    n: usize,
    m: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Serialize for Array {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ArrayRepr {
            n: self.n(),
            m: self.m(),
            rows: self.to_rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Array {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = ArrayRepr::deserialize(deserializer)?;
        if r.rows.len() != r.m || r.rows.iter().any(|row| row.len() != r.n) {
            return Err(serde::de::Error::custom(Error::DimensionMismatch(format!(
                "declared {} x {} but rows do not match",
                r.n, r.m
            ))));
        }
        Array::from_rows(r.rows).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "domain", rename_all = "lowercase", deny_unknown_fields)]
enum GridRepr {
    Triangle {
        n: usize,
        values: Vec<Vec<Scalar>>,
    },
    Corner {
        n: usize,
        m: usize,
        values: Vec<Vec<Scalar>>,
    },
    Prism {
        n: usize,
        m: usize,
        values: Vec<Vec<Vec<Scalar>>>,
    },
}

fn wrong_domain<E: serde::de::Error>(expected: &str) -> E {
    E::custom(format!("expected a grid with domain \"{expected}\""))
}

impl Serialize for TriangleFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GridRepr::Triangle {
            n: self.n(),
            values: self.to_rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TriangleFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match GridRepr::deserialize(deserializer)? {
            GridRepr::Triangle { n, values } if values.len() == n + 1 => {
                TriangleFunction::from_rows(values).map_err(serde::de::Error::custom)
            }
            GridRepr::Triangle { .. } => Err(serde::de::Error::custom("triangle needs n + 1 rows")),
            _ => Err(wrong_domain("triangle")),
        }
    }
}

impl Serialize for CornerFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GridRepr::Corner {
            n: self.n(),
            m: self.m(),
            values: self.to_rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CornerFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match GridRepr::deserialize(deserializer)? {
            GridRepr::Corner { n, m, values } => {
                if values.len() != m + 1 || values.iter().any(|r| r.len() != n + 1) {
                    return Err(serde::de::Error::custom(
                        "corner grid needs m + 1 rows of n + 1 values",
                    ));
                }
                CornerFunction::from_rows(values).map_err(serde::de::Error::custom)
            }
            _ => Err(wrong_domain("corner")),
        }
    }
}

impl Serialize for PrismFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let values = (0..=self.m()).map(|z| self.layer(z)).collect();
        GridRepr::Prism {
            n: self.n(),
            m: self.m(),
            values,
        }
        .serialize(serializer)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairRepr {
    a: Array,
    b: Array,
}

impl Serialize for StandardPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PairRepr {
            a: self.a().clone(),
            b: self.b().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StandardPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = PairRepr::deserialize(deserializer)?;
        StandardPair::new(r.a, r.b).map_err(serde::de::Error::custom)
    }
}

impl Serialize for AntiStandardPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PairRepr {
            a: self.a().clone(),
            b: self.b().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AntiStandardPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = PairRepr::deserialize(deserializer)?;
        AntiStandardPair::new(r.a, r.b).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octahedron::prism_propagate;
    use crate::scalar::s;

    #[test]
    fn array_round_trip() {
        let a = Array::from_rows(vec![vec![s(1), Scalar::ratio(1, 2)], vec![s(0), s(3)]]).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"n":2,"m":2,"rows":[[1,"1/2"],[0,3]]}"#);
        assert_eq!(serde_json::from_str::<Array>(&text).unwrap(), a);
        assert!(serde_json::from_str::<Array>(r#"{"n":3,"m":1,"rows":[[1,2]]}"#).is_err());
        assert!(serde_json::from_str::<Array>(r#"{"n":1,"m":1,"rows":[[-1]]}"#).is_err());
    }

    #[test]
    fn grid_round_trips() {
        let h = TriangleFunction::from_int_rows(&[&[0], &[3, 6], &[5, 9, 11]]);
        let text = serde_json::to_string(&h).unwrap();
        assert_eq!(
            text,
            r#"{"domain":"triangle","n":2,"values":[[0],[3,6],[5,9,11]]}"#
        );
        assert_eq!(serde_json::from_str::<TriangleFunction>(&text).unwrap(), h);
        assert!(serde_json::from_str::<CornerFunction>(&text).is_err());
        let c = Array::from_int_rows(&[&[1, 2]]).integrate();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<CornerFunction>(&text).unwrap(), c);
        let p = serde_json::to_value(prism_propagate(&Array::from_int_rows(&[&[1]]))).unwrap();
        assert_eq!(p["values"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn pairs_validate() {
        let ok = r#"{"a":{"n":1,"m":1,"rows":[[2]]},"b":{"n":1,"m":1,"rows":[[1]]}}"#;
        let p: StandardPair = serde_json::from_str(ok).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), ok);
        let loose =
            r#"{"a":{"n":2,"m":2,"rows":[[0,0],[1,0]]},"b":{"n":2,"m":2,"rows":[[0,0],[0,0]]}}"#;
        assert!(serde_json::from_str::<StandardPair>(loose).is_err());
    }
}
