//! Arithmetic modes and the dual-prime agreement check.

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Exact, ModP, Scalars};
use crate::modp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    ModP { seed: u64 },
}

impl Default for Mode {
    fn default() -> Self {
        Mode::ModP { seed: 1 }
    }
}

/// How a result was obtained. Every mod-p result carries both primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "arithmetic")]
pub enum Certificate {
    Exact,
    DualPrime { seed: u64, primes: [u64; 2] },
}

impl Mode {
    pub fn certificate(self) -> Certificate {
        match self {
            Mode::Exact => Certificate::Exact,
            Mode::ModP { seed } => Certificate::DualPrime {
                seed,
                primes: modp::prime_pair(seed),
            },
        }
    }
}

/// A computation that can run over any coefficient field and produces a
/// field-independent answer.
pub(crate) trait Job: Sync {
    type Output: PartialEq + Debug + Send;

    fn what(&self) -> String;
    fn run<S: Scalars>(&self, s: &S) -> Result<Self::Output>;
}

/// Run `job` in exact arithmetic, or over both primes with an agreement check.
pub(crate) fn execute<J: Job>(mode: Mode, job: &J) -> Result<(J::Output, Certificate)> {
    match mode.certificate() {
        Certificate::Exact => Ok((job.run(&Exact)?, Certificate::Exact)),
        cert @ Certificate::DualPrime { primes, .. } => {
            let (a, b) = rayon::join(
                || job.run(&ModP::new(primes[0])),
                || job.run(&ModP::new(primes[1])),
            );
            let (a, b) = (a?, b?);
            if a != b {
                return Err(Error::PrimeDisagreement {
                    what: job.what(),
                    primes,
                    first: format!("{a:?}"),
                    second: format!("{b:?}"),
                });
            }
            Ok((a, cert))
        }
    }
}
