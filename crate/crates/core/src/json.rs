//! JSON forms of the value types.
//!
//! A matrix is `{"rows": m, "cols": n, "entries": [["p/q", ...], ...]}`.
//! Entries may also be JSON integers. Matrices over `ℤ/n` carry
//! `"modulus": n`. A dual matrix is `{"real": <matrix>, "dual": <matrix>}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dual::DualMatrix;
use crate::matrix::Matrix;
use crate::perturb::series::TruncatedSeries;
use crate::scalar::Scalar;

#[derive(Serialize)]
struct MatrixOut {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixIn {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Entry>>,
    #[serde(default)]
    modulus: Option<u64>,
}

impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixOut {
            rows: self.rows(),
            cols: self.cols(),
            entries: (0..self.rows())
                .map(|i| self.row(i).iter().map(ToString::to_string).collect())
                .collect(),
            modulus: T::modulus(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = MatrixIn::deserialize(d)?;
        if raw.modulus != T::modulus() {
            return Err(D::Error::custom(match (raw.modulus, T::modulus()) {
                (Some(m), None) => {
                    format!("matrix has modulus {m} but rational entries were expected")
                }
                (None, Some(n)) => format!("matrix lacks \"modulus\": {n}"),
                (Some(m), Some(n)) => format!("matrix has modulus {m}, expected {n}"),
                (None, None) => unreachable!(),
            }));
        }
        if raw.entries.len() != raw.rows {
            return Err(D::Error::custom(format!(
                "\"rows\" is {} but {} entry rows were given",
                raw.rows,
                raw.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(raw.rows * raw.cols);
        for (i, row) in raw.entries.into_iter().enumerate() {
            if row.len() != raw.cols {
                return Err(D::Error::custom(format!(
                    "row {i} has {} entries, \"cols\" is {}",
                    row.len(),
                    raw.cols
                )));
            }
            for e in row {
                data.push(match e {
                    Entry::Int(v) => T::from_i64(v),
                    Entry::Text(t) => T::parse(&t).map_err(D::Error::custom)?,
                });
            }
        }
        Matrix::new(raw.rows, raw.cols, data).map_err(D::Error::custom)
    }
}

#[derive(Serialize)]
#[serde(bound = "")]
struct SeriesOut<'a, T: Scalar> {
    order: usize,
    coefficients: &'a [Matrix<T>],
}

#[derive(Deserialize)]
#[serde(bound = "", deny_unknown_fields)]
struct SeriesIn<T: Scalar> {
    order: usize,
    coefficients: Vec<Matrix<T>>,
}

impl<T: Scalar> Serialize for TruncatedSeries<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesOut {
            order: self.order(),
            coefficients: self.coefficients(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for TruncatedSeries<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SeriesIn::<T>::deserialize(d)?;
        if raw.order != raw.coefficients.len() {
            return Err(D::Error::custom(format!(
                "\"order\" is {} but {} coefficients were given",
                raw.order,
                raw.coefficients.len()
            )));
        }
        TruncatedSeries::new(raw.coefficients).map_err(D::Error::custom)
    }
}

#[derive(Serialize)]
#[serde(bound = "")]
struct DualOut<'a, T: Scalar> {
    real: &'a Matrix<T>,
    dual: &'a Matrix<T>,
}

#[derive(Deserialize)]
#[serde(bound = "", deny_unknown_fields)]
struct DualIn<T: Scalar> {
    real: Matrix<T>,
    dual: Matrix<T>,
}

impl<T: Scalar> Serialize for DualMatrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DualOut {
            real: self.real(),
            dual: self.dual(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for DualMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DualIn::<T>::deserialize(d)?;
        DualMatrix::new(raw.real, raw.dual).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, ModInt};
    use crate::QMatrix;

    #[test]
    fn rational_round_trip() {
        let m = QMatrix::from_rows(vec![vec![q(1, 2), q(-3, 1)], vec![q(0, 1), q(7, 9)]]);
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"rows":2,"cols":2,"entries":[["1/2","-3"],["0","7/9"]]}"#
        );
        assert_eq!(serde_json::from_str::<QMatrix>(&text).unwrap(), m);
    }

    #[test]
    fn integer_entries_and_modulus() {
        let m: Matrix<ModInt<5>> =
            serde_json::from_str(r#"{"rows":1,"cols":2,"entries":[[7,"-1"]],"modulus":5}"#)
                .unwrap();
        assert_eq!(m, Matrix::from_i64(&[&[2, 4]]));
        assert!(
            serde_json::from_str::<Matrix<ModInt<5>>>(r#"{"rows":0,"cols":0,"entries":[]}"#)
                .is_err()
        );
        assert!(
            serde_json::from_str::<QMatrix>(r#"{"rows":0,"cols":0,"entries":[],"modulus":5}"#)
                .is_err()
        );
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        assert!(
            serde_json::from_str::<QMatrix>(r#"{"rows":2,"cols":1,"entries":[["1"]]}"#).is_err()
        );
        assert!(
            serde_json::from_str::<QMatrix>(r#"{"rows":1,"cols":2,"entries":[["1"]]}"#).is_err()
        );
        assert!(
            serde_json::from_str::<QMatrix>(r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#).is_err()
        );
    }

    #[test]
    fn series_round_trip() {
        let s = TruncatedSeries::<crate::Rational>::scalar(&[1, -1, 1]);
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.starts_with(r#"{"order":3,"coefficients":[{"rows":1"#));
        assert_eq!(
            serde_json::from_str::<TruncatedSeries<crate::Rational>>(&text).unwrap(),
            s
        );
        assert!(serde_json::from_str::<TruncatedSeries<crate::Rational>>(
            r#"{"order":2,"coefficients":[]}"#
        )
        .is_err());
    }

    #[test]
    fn dual_round_trip() {
        let a = crate::QDualMatrix::from_i64(&[&[1, 0]], &[&[0, -2]]);
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.starts_with(r#"{"real":{"rows":1"#));
        assert_eq!(
            serde_json::from_str::<crate::QDualMatrix>(&text).unwrap(),
            a
        );
        let bad = r#"{"real":{"rows":1,"cols":1,"entries":[[1]]},"dual":{"rows":1,"cols":2,"entries":[[1,2]]}}"#;
        assert!(serde_json::from_str::<crate::QDualMatrix>(bad).is_err());
    }

    #[test]
    fn empty_matrix() {
        let m = QMatrix::zeros(0, 3);
        let back: QMatrix = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back.shape(), (0, 3));
    }
}
