//! `start:stop:step` grids, or a single value.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct GridError(pub String);

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for GridError {}

/// Points `start + k·step` up to `stop` inclusive. A step wider than the
/// range yields just `start`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, GridError> {
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| GridError(format!("invalid number `{s}` in grid `{spec}`")))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [single] => Ok(vec![num(single)?]),
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if step <= 0.0 {
                return Err(GridError(format!("grid step must be positive in `{spec}`")));
            }
            if stop < start {
                return Err(GridError(format!("grid stop below start in `{spec}`")));
            }
            let slack = 1e-9 * step;
            let mut out = Vec::new();
            for k in 0.. {
                let x = start + k as f64 * step;
                if x > stop + slack {
                    break;
                }
                out.push(if (x - stop).abs() <= slack { stop } else { x });
            }
            Ok(out)
        }
        _ => Err(GridError(format!(
            "expected `start:stop:step` or a number, got `{spec}`"
        ))),
    }
}
