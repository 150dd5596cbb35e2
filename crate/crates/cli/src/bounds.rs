use graphprod_core::products::DEFAULT_PRODUCT_MAX_NODES;
use graphprod_core::reduction::DEFAULT_ORACLE_MAX_NODES;
use graphprod_core::{DEFAULT_FACTOR_MAX_NODES, DEFAULT_ISO_MAX_NODES};

use crate::Failure;

pub const ENV_VAR: &str = "GRAPHPROD_MAX_NODES";

/// Node bounds for each operation. `GRAPHPROD_MAX_NODES` replaces all of them.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub product: usize,
    pub factor: usize,
    pub iso: usize,
    pub oracle: usize,
    overridden: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            product: DEFAULT_PRODUCT_MAX_NODES,
            factor: DEFAULT_FACTOR_MAX_NODES,
            iso: DEFAULT_ISO_MAX_NODES,
            oracle: DEFAULT_ORACLE_MAX_NODES,
            overridden: false,
        }
    }
}

impl Bounds {
    pub fn from_env() -> Result<Self, Failure> {
        match std::env::var(ENV_VAR) {
            Ok(v) => Self::parse(&v),
            Err(_) => Ok(Self::default()),
        }
    }

    fn parse(value: &str) -> Result<Self, Failure> {
        let n: usize = value.trim().parse().map_err(|_| Failure {
            code: 2,
            kind: "argument",
            message: format!("{ENV_VAR} must be a non-negative integer, got {value:?}"),
        })?;
        Ok(Bounds {
            product: n,
            factor: n,
            iso: n,
            oracle: n,
            overridden: true,
        })
    }

    /// Bound for a direct isomorphism test on graphs of order `n`. Without an
    /// explicit override the default is raised to `n` after a warning.
    pub fn iso_direct(&self, n: usize, warn: impl FnOnce(String)) -> usize {
        if self.overridden || n <= self.iso {
            return self.iso;
        }
        warn(format!(
            "warning: {n} nodes exceeds the isomorphism bound of {}; the search may be slow",
            self.iso
        ));
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_applies_everywhere() {
        let b = Bounds::parse("7").unwrap();
        assert_eq!((b.product, b.factor, b.iso, b.oracle), (7, 7, 7, 7));
        assert_eq!(
            b.iso_direct(9, |_| panic!("no warning under an override")),
            7
        );
    }

    #[test]
    fn default_iso_bound_is_raised_with_a_warning() {
        let mut warned = false;
        assert_eq!(Bounds::default().iso_direct(20, |_| warned = true), 20);
        assert!(warned);
    }

    #[test]
    fn bad_value_is_an_argument_error() {
        assert_eq!(Bounds::parse("lots").map(|_| ()).unwrap_err().code, 2);
    }
}
