use std::path::Path;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Nonempty list of strictly positive, finite observations.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample<T> {
    values: Vec<T>,
}

impl<T: Real> Sample<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::SampleTooSmall { required: 1, actual: 0 });
        }
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > T::zero()))
        {
            return Err(Error::InvalidObservation {
                index,
                value: value.as_f64(),
            });
        }
        Ok(Self { values })
    }

    #[inline]
    pub fn values(&self) -> &[T] {
        &self.values
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Every observation multiplied by `factor`.
    pub fn scaled(&self, factor: T) -> Result<Self> {
        Self::new(self.values.iter().map(|&v| v * factor).collect())
    }

    /// Parses one observation per line. The first line may be a
    /// non-numeric header; blank lines are skipped. Anything else that is
    /// not a positive number is an error naming its 1-based line.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let field = raw.trim();
            if field.is_empty() {
                continue;
            }
            let parsed: f64 = match field.parse() {
                Ok(v) => v,
                Err(_) if line == 1 => continue,
                Err(_) => {
                    return Err(Error::Parse {
                        line,
                        message: format!("not a number: {field:?}"),
                    })
                }
            };
            let value = T::from_f64(parsed).filter(|v| v.is_finite() && *v > T::zero());
            match value {
                Some(v) => values.push(v),
                None => {
                    return Err(Error::Parse {
                        line,
                        message: format!("observation {field} is not a finite positive number"),
                    })
                }
            }
        }
        if values.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: "no observations".into(),
            });
        }
        Self::new(values)
    }

    pub fn read_csv(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_csv_str(&text)
    }

    /// One value per line under a `value` header, using the shortest
    /// representation that parses back to the same float.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::with_capacity(self.values.len() * 20 + 6);
        out.push_str("value\n");
        for v in &self.values {
            out.push_str(&format!("{v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_positive() {
        assert!(Sample::<f64>::new(vec![]).is_err());
        assert!(matches!(
            Sample::new(vec![1.0, 0.0]),
            Err(Error::InvalidObservation { index: 1, .. })
        ));
        assert!(Sample::new(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn csv_with_and_without_header() {
        let a: Sample<f64> = Sample::from_csv_str("x\n1.5\n2\n\n3e-1\n").unwrap();
        assert_eq!(a.values(), &[1.5, 2.0, 0.3]);
        let b: Sample<f64> = Sample::from_csv_str("1.5\n2\n").unwrap();
        assert_eq!(b.values(), &[1.5, 2.0]);
    }

    #[test]
    fn csv_errors_name_the_line() {
        let err = Sample::<f64>::from_csv_str("value\n1.0\nabc\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "not a number: \"abc\"".into()
            }
        );
        let err = Sample::<f64>::from_csv_str("1.0\n-2.0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Sample::<f64>::from_csv_str("value\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        // only the first line may be a header
        let err = Sample::<f64>::from_csv_str("1.0\nvalue\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn csv_text_round_trips() {
        let s = Sample::new(vec![0.1f64, 1.0 / 3.0, 7.25e-9]).unwrap();
        assert_eq!(Sample::from_csv_str(&s.to_csv_string()).unwrap(), s);
    }
}
