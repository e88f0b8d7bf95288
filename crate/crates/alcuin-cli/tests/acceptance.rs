//! The acceptance gate: seven end-to-end criteria with their runtime
//! bounds, one reported line each. Run it alone with
//!
//! ```text
//! cargo test -p alcuin-cli --test acceptance -- --nocapture
//! ```

use std::cmp::Ordering;
use std::process::Command;
use std::time::Instant;

use alcuin::counting::{count, count_bruteforce, enumerate_triples, CountMethod};
use alcuin::geometry::{heron_16esq, max_area_triple};
use alcuin::series::product_check;
use alcuin::Error;
use alcuin::TriangleTriple;

struct Outcome {
    line: String,
    ok: bool,
}

/// Runs one criterion, enforcing `bound_secs` when the criterion states
/// one. The check returns a short success note or a failure description.
fn criterion(
    name: &str,
    bound_secs: Option<f64>,
    check: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = check();
    let secs = start.elapsed().as_secs_f64();
    let in_time = bound_secs.map_or(true, |b| secs < b);
    let bound_note = match bound_secs {
        Some(b) => format!("{secs:.2}s, bound {b:.0}s"),
        None => format!("{secs:.2}s"),
    };
    let (ok, line) = match (result, in_time) {
        (Ok(note), true) => (true, format!("PASS  {name} ({bound_note}) {note}")),
        (Ok(note), false) => (false, format!("FAIL  {name} ({bound_note}) over time bound; {note}")),
        (Err(why), true) => (false, format!("FAIL  {name} ({bound_note}) {why}")),
        (Err(why), false) => (false, format!("FAIL  {name} ({bound_note}) over time bound; {why}")),
    };
    Outcome { line, ok }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_alcuin"))
}

/// Criterion 1: the table command reproduces the opening 25 terms of the
/// sequence byte-for-byte as CSV.
fn sequence_reproduction() -> Result<String, String> {
    let golden = "p,count\n\
                  0,0\n1,0\n2,0\n3,1\n4,0\n5,1\n6,1\n7,2\n8,1\n9,3\n10,2\n11,4\n12,3\n\
                  13,5\n14,4\n15,7\n16,5\n17,8\n18,7\n19,10\n20,8\n21,12\n22,10\n23,14\n24,12\n";
    let out = bin()
        .args(["table", "0", "24", "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit status {:?}", out.status.code()));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    if text != golden {
        return Err(format!("output diverged from the 25 known terms:\n{text}"));
    }
    Ok("25 terms exact".to_string())
}

/// Criterion 2: the full cross-check to p = 10^4 passes as a user would
/// run it.
fn five_way_agreement() -> Result<String, String> {
    let out = bin()
        .args(["verify", "10000"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    if !out.status.success() {
        return Err(format!(
            "verify exited {:?}:\n{text}{}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    if !text.contains("result: PASS") {
        return Err(format!("verify did not report PASS:\n{text}"));
    }
    Ok("verify 10000 reported PASS".to_string())
}

/// Criterion 3: the factored generating function matches the coefficient
/// table entrywise to degree 10^4.
fn generating_function_product() -> Result<String, String> {
    match product_check(10_000) {
        Ok(true) => Ok("10001 coefficients equal".to_string()),
        Ok(false) => Err("product disagrees with the table".to_string()),
        Err(e) => Err(e.to_string()),
    }
}

/// Criterion 4: for every perimeter to 2000 the closed-form maximizer is
/// the unique exhaustive-search maximizer and satisfies the 432 E^2
/// identity exactly.
fn max_area_identity() -> Result<String, String> {
    let mut checked = 0u32;
    for p in 3..=2000i64 {
        if p == 4 {
            continue;
        }
        let closed = max_area_triple(p).map_err(|e| format!("p={p}: {e}"))?;
        if !(-1..=1).contains(&closed.v) || (p as i128 - closed.v as i128).rem_euclid(3) != 0 {
            return Err(format!("p={p}: shift v={} out of place", closed.v));
        }
        let best = heron_16esq(closed.triple).map_err(|e| format!("p={p}: {e}"))?;
        if closed.area_sq_432 != 27 * best.0 {
            return Err(format!(
                "p={p}: identity broke, 432E^2={} vs 27*16E^2={}",
                closed.area_sq_432,
                27 * best.0
            ));
        }
        let mut maximizers = 0;
        for t in enumerate_triples(p) {
            let area = heron_16esq(t).map_err(|e| format!("p={p}: {e}"))?;
            if area > best {
                return Err(format!("p={p}: scan found larger area at {t}"));
            }
            if area == best {
                maximizers += 1;
                if t != closed.triple {
                    return Err(format!("p={p}: distinct maximizer {t}"));
                }
            }
        }
        if maximizers != 1 {
            return Err(format!("p={p}: {maximizers} maximizers"));
        }
        checked += 1;
    }
    Ok(format!("{checked} perimeters, unique argmax and exact identity"))
}

/// Criterion 5: the fixed-base range lemma. For every perimeter to 300
/// and every side value m used as the base, enumerate the triangles
/// (x, m, y) with x + y = p - m directly; across every ordered pair in
/// a group, a strictly smaller spread |x - y| must mean a strictly
/// larger squared area. The base is a designated side, not necessarily
/// the middle one after canonicalization.
fn range_lemma_exhaustive() -> Result<String, String> {
    let mut pairs = 0u64;
    for p in 3..=300i64 {
        for m in 1..p {
            let s = p - m;
            let mut entries: Vec<(i64, i128)> = Vec::new();
            for x in 1..=s / 2 {
                let y = s - x;
                let Ok(t) = TriangleTriple::new(x, m, y) else { continue };
                let area = heron_16esq(t).map_err(|e| format!("p={p} m={m}: {e}"))?;
                entries.push((y - x, area.0));
            }
            for &(r1, a1) in &entries {
                for &(r2, a2) in &entries {
                    pairs += 1;
                    let consistent = match r1.cmp(&r2) {
                        Ordering::Less => a1 > a2,
                        Ordering::Greater => a1 < a2,
                        Ordering::Equal => a1 == a2,
                    };
                    if !consistent {
                        return Err(format!(
                            "p={p} m={m}: spread {r1} has 16E^2={a1}, spread {r2} has 16E^2={a2}"
                        ));
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} ordered fixed-base pairs"))
}

/// Criterion 6: the odd-to-even shift T(p) = T(p+3), checked by brute
/// force for every odd perimeter below 1000.
fn odd_shift_identity() -> Result<String, String> {
    let mut checked = 0u32;
    for k in 0..500i64 {
        let p = 2 * k + 1;
        if count_bruteforce(p) != count_bruteforce(p + 3) {
            return Err(format!("T({p}) != T({})", p + 3));
        }
        checked += 1;
    }
    Ok(format!("{checked} odd perimeters"))
}

/// Criterion 7: the empty perimeters behave precisely: zero counts from
/// all five methods, max-area errors on exactly {1, 2, 4}, and the
/// enumerate command treats an empty result as success.
fn edge_pins() -> Result<String, String> {
    for p in [1i64, 2, 4] {
        for method in CountMethod::ALL {
            let got = count(p, method).map_err(|e| format!("count({p}, {method}): {e}"))?;
            if got != 0 {
                return Err(format!("count({p}, {method}) = {got}, want 0"));
            }
        }
    }
    for p in 1..=50i64 {
        let outcome = max_area_triple(p);
        let should_fail = p == 1 || p == 2 || p == 4;
        match outcome {
            Err(Error::NoTriangle { perimeter }) if should_fail && perimeter == p => {}
            Ok(_) if !should_fail => {}
            other => return Err(format!("max_area_triple({p}) gave {other:?}")),
        }
    }

    let out = bin()
        .args(["max-area", "4"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(1) {
        return Err(format!("max-area 4 exited {:?}, want 1", out.status.code()));
    }
    if !String::from_utf8_lossy(&out.stderr).contains("no triangle exists") {
        return Err("max-area 4 stderr lacks the no-triangle message".to_string());
    }

    let out = bin()
        .args(["enumerate", "4"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) || !out.stdout.is_empty() {
        return Err(format!(
            "enumerate 4 gave exit {:?} with {} bytes of stdout, want clean empty success",
            out.status.code(),
            out.stdout.len()
        ));
    }
    Ok("gap perimeters pinned".to_string())
}

#[test]
fn acceptance() {
    let outcomes = [
        criterion("sequence reproduction", Some(1.0), sequence_reproduction),
        criterion("five-way method agreement", Some(60.0), five_way_agreement),
        criterion("generating-function product", Some(5.0), generating_function_product),
        criterion("max-area identity", Some(30.0), max_area_identity),
        criterion("range lemma", Some(10.0), range_lemma_exhaustive),
        criterion("odd-shift identity", None, odd_shift_identity),
        criterion("edge pins", None, edge_pins),
    ];
    let mut failures = Vec::new();
    for outcome in &outcomes {
        println!("{}", outcome.line);
        if !outcome.ok {
            failures.push(outcome.line.clone());
        }
    }
    assert!(
        failures.is_empty(),
        "{} acceptance criteria failed:\n{}",
        failures.len(),
        failures.join("\n")
    );
}
