//! The timing harness behind `alcuin bench`.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use alcuin::counting::{self, CountMethod};
use alcuin::series;

pub struct BenchRow {
    pub method: CountMethod,
    pub total_ms: f64,
    pub checksum: i128,
}

/// Sums `T(p)` over `1..=p_max` with every method, `reps` times each,
/// single-threaded so rows are comparable. The checksum column is the
/// sum itself: five equal checksums double as an agreement check.
pub fn run(p_max: i64, reps: u32) -> Vec<BenchRow> {
    CountMethod::ALL
        .iter()
        .map(|&method| {
            let start = Instant::now();
            let mut checksum = 0i128;
            for _ in 0..reps {
                checksum = black_box(sweep(method, p_max));
            }
            BenchRow {
                method,
                total_ms: start.elapsed().as_secs_f64() * 1e3,
                checksum,
            }
        })
        .collect()
}

fn sweep(method: CountMethod, p_max: i64) -> i128 {
    match method {
        CountMethod::ClosedForm => (1..=p_max).map(counting::count_closed_form).sum(),
        CountMethod::Mod12 => (1..=p_max).map(counting::count_mod12).sum(),
        CountMethod::BijectionSum => (1..=p_max).map(counting::count_sum).sum(),
        CountMethod::BruteForce => (1..=p_max).map(counting::count_bruteforce).sum(),
        CountMethod::Series => series::alcuin_coefficients(p_max as usize)
            .coefficients()
            .iter()
            .sum(),
    }
}

pub fn render(p_max: i64, reps: u32, rows: &[BenchRow], show_timing: bool) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "bench: sum of T(p) for p in 1..={p_max}, {reps} repetition(s) per method"
    )
    .unwrap();
    if show_timing {
        writeln!(out, "{:<15}{:>12}{:>20}", "method", "total-ms", "checksum").unwrap();
        for row in rows {
            writeln!(
                out,
                "{:<15}{:>12.2}{:>20}",
                row.method.name(),
                row.total_ms,
                row.checksum
            )
            .unwrap();
        }
    } else {
        writeln!(out, "{:<15}{:>20}", "method", "checksum").unwrap();
        for row in rows {
            writeln!(out, "{:<15}{:>20}", row.method.name(), row.checksum).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksums_agree_across_methods() {
        let rows = run(200, 1);
        assert_eq!(rows.len(), 5);
        let first = rows[0].checksum;
        assert!(first > 0);
        for row in &rows {
            assert_eq!(row.checksum, first, "{}", row.method);
        }
    }

    #[test]
    fn render_without_timing_is_deterministic() {
        let rows = run(24, 1);
        let text = render(24, 1, &rows, false);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0],
            "bench: sum of T(p) for p in 1..=24, 1 repetition(s) per method"
        );
        assert_eq!(
            lines[1].split_whitespace().collect::<Vec<_>>(),
            ["method", "checksum"]
        );
        // T(1) + ... + T(24) = 120
        for (line, method) in lines[2..].iter().zip(CountMethod::ALL) {
            assert_eq!(
                line.split_whitespace().collect::<Vec<_>>(),
                [method.name(), "120"]
            );
        }
        assert_eq!(lines.len(), 7);
        assert_eq!(render(24, 1, &rows, false), text);
    }
}
