//! Sweeps fanned out over a rayon pool. Results keep sweep order, so output
//! does not depend on the thread count.

use ntg_core::oracle::{sweep_notes, verify_config, Ledger, SweepSpec};
use rayon::prelude::*;
use rayon::ThreadPool;

use crate::CliError;

pub const THREADS_VAR: &str = "NTG_THREADS";

/// A pool sized by `NTG_THREADS` when set, by rayon's default otherwise.
pub fn pool() -> Result<ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR}={v}: expected a positive integer")))?;
        b = b.num_threads(n);
    }
    Ok(b.build()?)
}

pub fn verify_parallel(spec: &SweepSpec, pool: &ThreadPool) -> Result<Ledger, CliError> {
    let cases = spec.prepare()?;
    let jobs: Vec<(usize, u32)> = cases
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.exponents.iter().map(move |&n| (i, n)))
        .collect();
    let results: Vec<_> = pool.install(|| {
        jobs.par_iter()
            .map(|&(i, n)| verify_config(&cases[i].ring, &cases[i].ideal, n))
            .collect()
    });
    let mut ledger = Ledger {
        configurations: jobs.len(),
        notes: sweep_notes(spec, &cases)?,
        ..Ledger::default()
    };
    for r in results {
        ledger.entries.extend(r?);
    }
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::{parse_sweep, Format};
    use ntg_core::oracle::verify_all;

    #[test]
    fn matches_sequential_run() {
        let s = parse_sweep(
            "figures = true\n[[group]]\nname = \"g\"\nrings = [\"Fp:7\", \"Fq:2:2\", \"prod(Fp:2,Fp:3)\"]\nn = \"1..4\"",
            Format::Toml,
        )
        .unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
        let par = verify_parallel(&s.spec, &pool).unwrap();
        assert_eq!(par, verify_all(&s.spec).unwrap());
        assert!(par.is_complete());
    }
}
