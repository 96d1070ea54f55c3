use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Torus knot family `T(2, 2t+1)` together with the vector component `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KnotFamilyParams {
    t: u32,
    m: u32,
}

impl KnotFamilyParams {
    pub fn new(t: u32, m: u32) -> Result<Self> {
        if t == 0 || m == 0 || m > t {
            return Err(Error::InvalidParams(format!(
                "need 1 <= m <= t, got t = {t}, m = {m}"
            )));
        }
        Ok(KnotFamilyParams { t, m })
    }

    /// The scalar family `m = 1`.
    pub fn scalar(t: u32) -> Result<Self> {
        Self::new(t, 1)
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub(crate) fn ti(&self) -> i64 {
        self.t as i64
    }

    pub(crate) fn mi(&self) -> i64 {
        self.m as i64
    }

    /// `2t + 1`
    pub fn odd(&self) -> i64 {
        2 * self.ti() + 1
    }

    /// `2t + 1 - 2m`, the residue class where the periodic character is `+1`.
    pub fn r(&self) -> i64 {
        self.odd() - 2 * self.mi()
    }

    /// Every family with `t <= t_max`, in lexicographic order.
    pub fn all_up_to(t_max: u32) -> Vec<Self> {
        (1..=t_max)
            .flat_map(|t| (1..=t).map(move |m| KnotFamilyParams { t, m }))
            .collect()
    }
}

impl fmt::Display for KnotFamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t={}, m={}", self.t, self.m)
    }
}
