//! Rectangular evaluation grids with exclusion disks.

use muzeta::Complex64;

/// A rectangular grid in the complex plane. Points are visited in row-major
/// order: the real axis is the row index (outer), the imaginary axis the
/// column (inner), so output order is independent of evaluation strategy.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub re_steps: usize,
    pub im_steps: usize,
    /// Disks whose interior is skipped (verify) or flagged (sweep).
    pub exclusions: Vec<(Complex64, f64)>,
}

impl GridSpec {
    /// Parses "re_min:re_max,im_min:im_max,RxI", e.g. "-5:5,-5:5,21x21".
    pub fn parse(text: &str) -> Result<Self, String> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(format!(
                "grid must be re_min:re_max,im_min:im_max,RxI, got {text:?}"
            ));
        }
        let parse_range = |part: &str, axis: &str| -> Result<(f64, f64), String> {
            let (lo, hi) = part
                .split_once(':')
                .ok_or_else(|| format!("{axis} range must be lo:hi, got {part:?}"))?;
            let lo: f64 = lo
                .parse()
                .map_err(|e| format!("bad {axis} minimum {lo:?}: {e}"))?;
            let hi: f64 = hi
                .parse()
                .map_err(|e| format!("bad {axis} maximum {hi:?}: {e}"))?;
            Ok((lo, hi))
        };
        let (re_min, re_max) = parse_range(parts[0], "re")?;
        let (im_min, im_max) = parse_range(parts[1], "im")?;
        let (r, i) = parts[2]
            .split_once('x')
            .ok_or_else(|| format!("step counts must be RxI, got {:?}", parts[2]))?;
        let re_steps: usize = r.parse().map_err(|e| format!("bad re steps {r:?}: {e}"))?;
        let im_steps: usize = i.parse().map_err(|e| format!("bad im steps {i:?}: {e}"))?;
        let grid = Self {
            re_min,
            re_max,
            im_min,
            im_max,
            re_steps,
            im_steps,
            exclusions: Vec::new(),
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.re_min < self.re_max) || !(self.im_min < self.im_max) {
            return Err(format!(
                "grid ranges must be increasing: re {}:{}, im {}:{}",
                self.re_min, self.re_max, self.im_min, self.im_max
            ));
        }
        if self.re_steps < 1 || self.im_steps < 1 {
            return Err("grid needs at least one step per axis".into());
        }
        if self.exclusions.iter().any(|(_, r)| !(*r > 0.0)) {
            return Err("every exclusion radius must be positive".into());
        }
        Ok(())
    }

    /// The default guard disks for generic-series suites: the pole at 1 and
    /// thin disks around the non-positive integers (their evaluation belongs
    /// to the exact suites).
    pub fn with_default_guards(mut self) -> Self {
        self.exclusions.push((Complex64::new(1.0, 0.0), 0.05));
        let mut m = self.re_min.floor() as i64;
        while m as f64 <= self.re_max {
            if m <= 0 {
                self.exclusions
                    .push((Complex64::new(m as f64, 0.0), 1e-3));
            }
            m += 1;
        }
        self
    }

    pub fn is_excluded(&self, s: Complex64) -> bool {
        self.exclusions.iter().any(|(c, r)| (s - c).norm() < *r)
    }

    fn axis_value(lo: f64, hi: f64, steps: usize, i: usize) -> f64 {
        if steps == 1 {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (steps - 1) as f64
        }
    }

    /// All grid points in row-major order with their exclusion flag.
    pub fn points(&self) -> Vec<(Complex64, bool)> {
        let mut out = Vec::with_capacity(self.re_steps * self.im_steps);
        for i in 0..self.re_steps {
            let re = Self::axis_value(self.re_min, self.re_max, self.re_steps, i);
            for j in 0..self.im_steps {
                let im = Self::axis_value(self.im_min, self.im_max, self.im_steps, j);
                let s = Complex64::new(re, im);
                out.push((s, self.is_excluded(s)));
            }
        }
        out
    }
}
