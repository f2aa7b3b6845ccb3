use crate::error::{Error, Result};

/// Formal order of accuracy of the scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeOrder {
    Third,
    Fifth,
    Seventh,
    Ninth,
}

impl SchemeOrder {
    pub const ALL: [SchemeOrder; 4] = [
        SchemeOrder::Third,
        SchemeOrder::Fifth,
        SchemeOrder::Seventh,
        SchemeOrder::Ninth,
    ];

    pub fn as_usize(self) -> usize {
        match self {
            SchemeOrder::Third => 3,
            SchemeOrder::Fifth => 5,
            SchemeOrder::Seventh => 7,
            SchemeOrder::Ninth => 9,
        }
    }

    /// Half-width of the centre reconstruction window.
    pub fn center_half_width(self) -> usize {
        match self {
            SchemeOrder::Third | SchemeOrder::Fifth => 2,
            SchemeOrder::Seventh => 3,
            SchemeOrder::Ninth => 4,
        }
    }

    /// Boundary window reach `(left, right)`: the window spans offsets
    /// `-left ..= right` about the zone on the left of the boundary.
    pub fn boundary_reach(self) -> (usize, usize) {
        match self {
            SchemeOrder::Third | SchemeOrder::Fifth => (1, 2),
            SchemeOrder::Seventh => (2, 3),
            SchemeOrder::Ninth => (3, 4),
        }
    }

    pub fn boundary_window_len(self) -> usize {
        let (l, r) = self.boundary_reach();
        l + r + 1
    }

    /// Ghost zones needed on each side of a line.
    pub fn ghost_width(self) -> usize {
        match self {
            SchemeOrder::Third | SchemeOrder::Fifth => 4,
            SchemeOrder::Seventh => 6,
            SchemeOrder::Ninth => 8,
        }
    }

    /// Number of odd flux-derivative corrections, `(order - 1) / 2`.
    pub fn correction_terms(self) -> usize {
        (self.as_usize() - 1) / 2
    }
}

impl TryFrom<usize> for SchemeOrder {
    type Error = Error;

    fn try_from(v: usize) -> Result<Self> {
        match v {
            3 => Ok(SchemeOrder::Third),
            5 => Ok(SchemeOrder::Fifth),
            7 => Ok(SchemeOrder::Seventh),
            9 => Ok(SchemeOrder::Ninth),
            _ => Err(Error::usage(format!("unsupported order {v}; use 3, 5, 7 or 9"))),
        }
    }
}

impl std::fmt::Display for SchemeOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_usize())
    }
}
