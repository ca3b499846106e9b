use std::fmt;

/// Integer polynomial in the dimension `n`, coefficients in ascending
/// order of degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly(Vec<i64>);

impl Poly {
    /// `Poly::new(&[c0, c1, c2])` is `c0 + c1 n + c2 n^2`.
    pub fn new(coeffs: &[i64]) -> Self {
        let mut v = coeffs.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Self(v)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(&[c])
    }

    pub fn eval(&self, n: i64) -> i64 {
        self.0.iter().rev().fold(0i64, |acc, &c| acc * n + c)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let mut v: Vec<i64> = (0..len)
            .map(|k| self.0.get(k).unwrap_or(&0) + other.0.get(k).unwrap_or(&0))
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        Poly(v)
    }

    /// Renders using `var` as the indeterminate, e.g. `9n^2-3n`.
    pub fn render(&self, var: &str) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => var.to_string(),
                (1, m) => format!("{m}{var}"),
                (k, 1) => format!("{var}^{k}"),
                (k, m) => format!("{m}{var}^{k}"),
            };
            out.push_str(sign);
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("n"))
    }
}
