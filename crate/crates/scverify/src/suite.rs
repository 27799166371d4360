//! Prime-range orchestration: select checks, fan out over primes with
//! work stealing, collect reports deterministically.

use std::collections::HashMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::checks::{run_check, CheckId, CheckParams};
use crate::error::{Error, Result};
use crate::identities::{identity_verify, IdentityId};
use crate::primes::primes_in;
use crate::report::{CheckReport, ReportFormat};

/// Default Gamma_p product-length budget for suite runs: covers the
/// budgeted acceptance set while keeping a full default run fast.
pub const SUITE_GAMMA_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub prime_lo: u64,
    pub prime_hi: u64,
    pub checks: Vec<CheckId>,
    pub identities: Vec<IdentityId>,
    /// Working precision K.
    pub precision: u32,
    pub identity_lo: u64,
    pub identity_hi: u64,
    pub gamma_budget: u64,
    pub recurrence_cap: u64,
    pub format: ReportFormat,
    pub out: Option<PathBuf>,
    /// `None` means let the scheduler pick.
    pub jobs: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            prime_lo: 5,
            prime_hi: 1000,
            checks: CheckId::all(),
            identities: Vec::new(),
            precision: 8,
            identity_lo: 1,
            identity_hi: 200,
            gamma_budget: SUITE_GAMMA_BUDGET,
            recurrence_cap: 2000,
            format: ReportFormat::Jsonl,
            out: None,
            jobs: None,
        }
    }
}

impl SuiteConfig {
    /// Reject configurations that cannot produce meaningful verdicts.
    pub fn validate(&self) -> Result<()> {
        let max_exp = self.checks.iter().map(|c| c.exponent()).max().unwrap_or(0);
        if self.precision < max_exp + 2 {
            return Err(Error::ConfigInvalid(format!(
                "precision {} below required {} (max check exponent {} plus 2 guard digits)",
                self.precision,
                max_exp + 2,
                max_exp
            )));
        }
        if !self.identities.is_empty()
            && (self.identity_lo < 1 || self.identity_lo > self.identity_hi)
        {
            return Err(Error::ConfigInvalid(format!(
                "identity range {}:{} is not a subinterval of [1, inf)",
                self.identity_lo, self.identity_hi
            )));
        }
        if let Some(0) = self.jobs {
            return Err(Error::ConfigInvalid("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// Parse a comma-separated selector list into concrete check sets.
///
/// Tokens: individual check or identity names, plus the groups
/// `THEOREMS` (THM1, THM2, CONJ1, CONJ2), `GAMMA` (VANHAMME_D2,
/// LONG_RAMA), `LEMMAS` (the lettered congruences with WOLSTENHOLME and
/// REFLECTION), `IDENTITIES`, and `ALL`.
pub fn parse_selectors(tokens: &[String]) -> Result<(Vec<CheckId>, Vec<IdentityId>)> {
    let mut checks: Vec<CheckId> = Vec::new();
    let mut idents: Vec<IdentityId> = Vec::new();
    let push_check = |id: CheckId, checks: &mut Vec<CheckId>| {
        if !checks.contains(&id) {
            checks.push(id);
        }
    };
    for raw in tokens {
        let tok = raw.trim();
        if tok.is_empty() {
            continue;
        }
        match tok.to_ascii_uppercase().as_str() {
            "ALL" => {
                for id in CheckId::all() {
                    push_check(id, &mut checks);
                }
                for id in IdentityId::all() {
                    if !idents.contains(&id) {
                        idents.push(id);
                    }
                }
            }
            "THEOREMS" => {
                for id in [CheckId::Thm1, CheckId::Thm2, CheckId::Conj1, CheckId::Conj2] {
                    push_check(id, &mut checks);
                }
            }
            "GAMMA" => {
                for id in [CheckId::VanHammeD2, CheckId::LongRama] {
                    push_check(id, &mut checks);
                }
            }
            "LEMMAS" => {
                for id in CheckId::all() {
                    if matches!(
                        id,
                        CheckId::Lemma(_) | CheckId::Wolstenholme | CheckId::Reflection
                    ) {
                        push_check(id, &mut checks);
                    }
                }
            }
            "IDENTITIES" => {
                for id in IdentityId::all() {
                    if !idents.contains(&id) {
                        idents.push(id);
                    }
                }
            }
            _ => {
                if let Some(id) = CheckId::parse(tok) {
                    push_check(id, &mut checks);
                } else if let Some(id) = IdentityId::parse(tok) {
                    if !idents.contains(&id) {
                        idents.push(id);
                    }
                } else {
                    return Err(Error::ConfigInvalid(format!("unknown check `{tok}`")));
                }
            }
        }
    }
    Ok((checks, idents))
}

#[derive(Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<CheckReport>,
    /// Human-readable evaluation errors (these also fail the run).
    pub errors: Vec<String>,
    /// (check, prime) pairs skipped because a Gamma_p product or the
    /// Bernoulli recurrence would exceed its budget.
    pub budget_skipped: usize,
    pub elapsed: Duration,
}

impl SuiteOutcome {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.reports.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0 && self.errors.is_empty()
    }
}

enum Task {
    Congruence(CheckId, u64),
    Identity(IdentityId),
}

/// Sieve the interval, dispatch every applicable (check, prime) pair and
/// selected identity, and collect reports in deterministic order
/// (checks in registry order, primes ascending, identities last).
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let start = Instant::now();
    let primes = primes_in(config.prime_lo, config.prime_hi);
    let params = CheckParams {
        precision: config.precision,
        gamma_budget: config.gamma_budget,
        recurrence_cap: config.recurrence_cap,
    };

    let mut tasks = Vec::new();
    let mut budget_skipped = 0usize;
    for &check in &config.checks {
        for &p in &primes {
            if !check.applicable(p) {
                continue;
            }
            if let Some(cost) = check.gamma_cost(p) {
                if cost > config.gamma_budget {
                    budget_skipped += 1;
                    continue;
                }
            }
            if check == CheckId::Lemma(crate::checks::LemmaId::New1) && p > config.recurrence_cap {
                budget_skipped += 1;
                continue;
            }
            tasks.push(Task::Congruence(check, p));
        }
    }
    for &id in &config.identities {
        tasks.push(Task::Identity(id));
    }

    let evaluate = |task: &Task| -> (Option<CheckReport>, Option<String>) {
        match task {
            Task::Congruence(check, p) => match run_check(*check, *p, &params) {
                Ok(rep) => (Some(rep), None),
                Err(e) => (None, Some(format!("{} at p = {p}: {e}", check.name()))),
            },
            Task::Identity(id) => (
                Some(identity_verify(
                    *id,
                    config.identity_lo,
                    config.identity_hi,
                    config.precision as i64,
                )),
                None,
            ),
        }
    };

    let results: Vec<(Option<CheckReport>, Option<String>)> = match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::ConfigInvalid(format!("thread pool: {e}")))?
            .install(|| tasks.par_iter().map(evaluate).collect()),
        None => tasks.par_iter().map(evaluate).collect(),
    };

    let mut reports = Vec::with_capacity(results.len());
    let mut errors = Vec::new();
    for (rep, err) in results {
        if let Some(r) = rep {
            reports.push(r);
        }
        if let Some(e) = err {
            errors.push(e);
        }
    }
    Ok(SuiteOutcome {
        reports,
        errors,
        budget_skipped,
        elapsed: start.elapsed(),
    })
}

/// Flat `key=value` config file; `#` starts a comment line.
pub fn parse_config_file(path: &std::path::Path) -> Result<HashMap<String, String>> {
    let text = std::fs::read_to_string(path)?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::ConfigInvalid(format!(
                "{}:{}: expected key=value, got `{line}`",
                path.display(),
                lineno + 1
            )));
        };
        map.insert(key.trim().to_ascii_lowercase(), value.trim().to_string());
    }
    Ok(map)
}

/// Parse `lo:hi` (or a bare value, meaning a one-point interval).
pub fn parse_range(s: &str) -> Result<(u64, u64)> {
    let parse = |t: &str| -> Result<u64> {
        t.trim()
            .parse::<u64>()
            .map_err(|_| Error::ConfigInvalid(format!("bad interval bound `{t}`")))
    };
    match s.split_once(':') {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_groups() {
        let (checks, idents) =
            parse_selectors(&["THM1".into(), "LEMMAS".into(), "IDENTITIES".into()]).unwrap();
        assert!(checks.contains(&CheckId::Thm1));
        assert!(checks.contains(&CheckId::Wolstenholme));
        assert!(checks.contains(&CheckId::Lemma(crate::checks::LemmaId::D9c)));
        assert!(!checks.contains(&CheckId::Thm2));
        assert_eq!(idents.len(), 8);
        assert!(parse_selectors(&["BOGUS".into()]).is_err());
    }

    #[test]
    fn theorem_pair_over_small_interval() {
        let (checks, idents) = parse_selectors(&["THM1".into(), "THM2".into()]).unwrap();
        let config = SuiteConfig {
            prime_lo: 5,
            prime_hi: 50,
            checks,
            identities: idents,
            ..Default::default()
        };
        let outcome = run_suite(&config).unwrap();
        // 6 primes = 1 (mod 3) in [7, 50] and 7 primes = 2 (mod 3) in [5, 50]
        assert_eq!(outcome.reports.len(), 13);
        assert!(outcome.all_pass(), "{:?}", outcome.errors);
        let thm1_primes: Vec<u64> = outcome
            .reports
            .iter()
            .filter(|r| r.check == "THM1")
            .map(|r| r.prime)
            .collect();
        assert_eq!(thm1_primes, vec![7, 13, 19, 31, 37, 43]);
        let thm2_primes: Vec<u64> = outcome
            .reports
            .iter()
            .filter(|r| r.check == "THM2")
            .map(|r| r.prime)
            .collect();
        assert_eq!(thm2_primes, vec![5, 11, 17, 23, 29, 41, 47]);
    }

    #[test]
    fn empty_interval_is_success() {
        let config = SuiteConfig {
            prime_lo: 90,
            prime_hi: 96,
            ..Default::default()
        };
        let outcome = run_suite(&config).unwrap();
        assert_eq!(outcome.reports.len(), 0);
        assert!(outcome.all_pass());
    }

    #[test]
    fn precision_validation() {
        let config = SuiteConfig {
            precision: 6, // LONG_RAMA needs 6 + 2
            ..Default::default()
        };
        assert!(matches!(config.validate(), Err(Error::ConfigInvalid(_))));
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("5:1000").unwrap(), (5, 1000));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("a:b").is_err());
    }

    #[test]
    fn config_file_round_trip() {
        let dir = std::env::temp_dir().join("scverify-test-config");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("suite.conf");
        std::fs::write(
            &path,
            "# comment\nprimes = 5:50\nchecks=THM1,THM2\nprecision=8\n",
        )
        .unwrap();
        let map = parse_config_file(&path).unwrap();
        assert_eq!(map.get("primes").unwrap(), "5:50");
        assert_eq!(map.get("checks").unwrap(), "THM1,THM2");
    }
}
