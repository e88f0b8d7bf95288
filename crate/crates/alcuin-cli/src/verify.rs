//! The cross-check harness behind `alcuin verify`: every selected
//! counting method against the brute-force oracle, the sequence prefix,
//! the generating-function product, the area maximizer, and the
//! odd-shift identity, with per-phase timings.

use std::fmt::Write as _;
use std::time::Instant;

use alcuin::counting::{self, CountMethod, SEQUENCE_PREFIX};
use alcuin::geometry::{area_argmax_bruteforce, heron_16esq, max_area_triple};
use alcuin::series;
use rayon::prelude::*;

/// First disagreement between a method and the oracle.
pub struct Mismatch {
    pub p: i64,
    pub method: CountMethod,
    pub expected: i128,
    pub actual: i128,
}

pub struct VerifyReport {
    pub p_max: i64,
    pub methods: Vec<CountMethod>,
    pub mismatch: Option<Mismatch>,
    pub prefix_ok: bool,
    pub product_failure: Option<String>,
    pub argmax_checked_to: i64,
    pub argmax_failure: Option<String>,
    pub odd_shift_failure: Option<i64>,
    pub timings_ms: Vec<(&'static str, f64)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
            && self.prefix_ok
            && self.product_failure.is_none()
            && self.argmax_failure.is_none()
            && self.odd_shift_failure.is_none()
    }

    /// One line per phase; everything except the timing line is
    /// deterministic for a given outcome.
    pub fn render(&self, show_timing: bool) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.methods.iter().map(|m| m.name()).collect();
        writeln!(out, "verify: p in 1..={}", self.p_max).unwrap();
        writeln!(out, "methods: {}", names.join(" ")).unwrap();
        match &self.mismatch {
            None => writeln!(out, "method agreement OK").unwrap(),
            Some(m) => writeln!(
                out,
                "method agreement FAILED at p={}: {} gave {}, brute-force oracle gives {}",
                m.p, m.method, m.actual, m.expected
            )
            .unwrap(),
        }
        writeln!(
            out,
            "sequence prefix {}",
            if self.prefix_ok { "OK" } else { "FAILED" }
        )
        .unwrap();
        match &self.product_failure {
            None => writeln!(out, "generating-function product OK").unwrap(),
            Some(msg) => writeln!(out, "generating-function product FAILED: {msg}").unwrap(),
        }
        match &self.argmax_failure {
            None => writeln!(
                out,
                "max-area argmax OK (checked 3..={})",
                self.argmax_checked_to
            )
            .unwrap(),
            Some(msg) => writeln!(out, "max-area argmax FAILED: {msg}").unwrap(),
        }
        match self.odd_shift_failure {
            None => writeln!(out, "odd-shift identity OK").unwrap(),
            Some(p) => writeln!(out, "odd-shift identity FAILED at p={p}").unwrap(),
        }
        writeln!(out, "result: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        if show_timing {
            let cells: Vec<String> = self
                .timings_ms
                .iter()
                .map(|(name, ms)| format!("{name}={ms:.1}"))
                .collect();
            writeln!(out, "timings (ms): {}", cells.join(" ")).unwrap();
        }
        out
    }
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn run(p_max: i64, methods: &[CountMethod]) -> VerifyReport {
    let mut timings: Vec<(&'static str, f64)> = Vec::new();

    let start = Instant::now();
    let oracle: Vec<i128> = (1..=p_max)
        .into_par_iter()
        .map(counting::count_bruteforce)
        .collect();
    timings.push(("brute-force", ms_since(start)));

    let value_at = |p: i64| oracle[(p - 1) as usize];

    let mut mismatch: Option<Mismatch> = None;
    for &method in methods {
        if method == CountMethod::BruteForce {
            continue;
        }
        let start = Instant::now();
        let found = match method {
            CountMethod::Series => {
                let table = series::alcuin_coefficients(p_max as usize);
                (1..=p_max).find_map(|p| {
                    let actual = table.coefficient(p as usize);
                    (actual != value_at(p)).then(|| Mismatch {
                        p,
                        method,
                        expected: value_at(p),
                        actual,
                    })
                })
            }
            _ => (1..=p_max)
                .into_par_iter()
                .filter_map(|p| {
                    let actual = match method {
                        CountMethod::ClosedForm => counting::count_closed_form(p),
                        CountMethod::Mod12 => counting::count_mod12(p),
                        CountMethod::BijectionSum => counting::count_sum(p),
                        CountMethod::Series | CountMethod::BruteForce => unreachable!(),
                    };
                    (actual != value_at(p)).then(|| Mismatch {
                        p,
                        method,
                        expected: value_at(p),
                        actual,
                    })
                })
                .min_by_key(|m| m.p),
        };
        timings.push((method.name(), ms_since(start)));
        if mismatch.is_none() {
            mismatch = found;
        }
    }

    // opening terms straight against the oracle
    let prefix_ok = (1..=p_max.min(24) as usize).all(|p| oracle[p - 1] == SEQUENCE_PREFIX[p]);

    let start = Instant::now();
    let product_failure = match series::product_check(p_max as usize) {
        Ok(true) => None,
        Ok(false) => Some("factored product disagrees with the coefficient table".to_string()),
        Err(e) => Some(e.to_string()),
    };
    timings.push(("product", ms_since(start)));

    let argmax_checked_to = p_max.min(2000);
    let start = Instant::now();
    let argmax_failure = (3..=argmax_checked_to)
        .into_par_iter()
        .filter(|&p| p != 4)
        .filter_map(|p| check_argmax(p).err().map(|msg| (p, msg)))
        .min_by_key(|(p, _)| *p)
        .map(|(_, msg)| msg);
    timings.push(("argmax", ms_since(start)));

    let mut odd_shift_failure = None;
    let mut p = 1;
    while p + 3 <= p_max {
        if value_at(p) != value_at(p + 3) {
            odd_shift_failure = Some(p);
            break;
        }
        p += 2;
    }

    VerifyReport {
        p_max,
        methods: methods.to_vec(),
        mismatch,
        prefix_ok,
        product_failure,
        argmax_checked_to,
        argmax_failure,
        odd_shift_failure,
        timings_ms: timings,
    }
}

/// Closed-form maximizer vs exhaustive scan at one perimeter, plus the
/// `432 E^2 = 27 * 16 E^2` identity.
fn check_argmax(p: i64) -> Result<(), String> {
    let closed = max_area_triple(p).map_err(|e| format!("closed form failed at p={p}: {e}"))?;
    let scanned = area_argmax_bruteforce(p).map_err(|e| format!("scan failed at p={p}: {e}"))?;
    if scanned != closed.triple {
        return Err(format!(
            "argmax mismatch at p={p}: closed form {} vs scan {}",
            closed.triple, scanned
        ));
    }
    let heron = heron_16esq(scanned).map_err(|e| format!("area failed at p={p}: {e}"))?;
    if closed.area_sq_432 != 27 * heron.0 {
        return Err(format!(
            "identity broke at p={p}: 432E^2 = {} but 27 * 16E^2 = {}",
            closed.area_sq_432,
            27 * heron.0
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_renders_stably() {
        let report = run(60, &CountMethod::ALL);
        assert!(report.passed());
        let text = report.render(false);
        assert_eq!(
            text,
            "verify: p in 1..=60\n\
             methods: closed-form mod12 bijection-sum series brute-force\n\
             method agreement OK\n\
             sequence prefix OK\n\
             generating-function product OK\n\
             max-area argmax OK (checked 3..=60)\n\
             odd-shift identity OK\n\
             result: PASS\n"
        );
        // timing line appears only on request
        assert!(report.render(true).contains("timings (ms): brute-force="));
    }

    #[test]
    fn subset_of_methods_is_respected() {
        let report = run(40, &[CountMethod::Mod12]);
        assert!(report.passed());
        let text = report.render(false);
        assert!(text.contains("methods: mod12\n"));
        assert_eq!(report.timings_ms.len(), 4); // oracle, mod12, product, argmax
    }

    #[test]
    fn tiny_ranges_have_no_edge_trouble() {
        for p_max in 1..=6 {
            let report = run(p_max, &CountMethod::ALL);
            assert!(report.passed(), "p_max={p_max}");
        }
    }
}
