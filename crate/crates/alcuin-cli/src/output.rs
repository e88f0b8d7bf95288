//! Rendering for the three wire formats, including the exact
//! six-decimal area display.

use std::cmp::Ordering;
use std::fmt;

use alcuin::counting::CountMethod;
use alcuin::geometry::MaxAreaResult;
use alcuin::TriangleTriple;
use clap::ValueEnum;
use num_bigint::BigUint;

/// Output format selector shared by all subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

pub fn render_count(p: i64, method: CountMethod, count: i128, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => count.to_string(),
        OutputFormat::Csv => format!("p,method,count\n{p},{method},{count}"),
        OutputFormat::Json => format!("{{\"p\":{p},\"method\":\"{method}\",\"count\":{count}}}"),
    }
}

pub fn render_enumerate(triples: &[TriangleTriple], format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            let lines: Vec<String> = triples
                .iter()
                .map(|t| format!("{} {} {}", t.a(), t.b(), t.c()))
                .collect();
            lines.join("\n")
        }
        OutputFormat::Csv => {
            let mut lines = vec!["a,b,c".to_string()];
            lines.extend(
                triples
                    .iter()
                    .map(|t| format!("{},{},{}", t.a(), t.b(), t.c())),
            );
            lines.join("\n")
        }
        OutputFormat::Json => {
            let cells: Vec<String> = triples
                .iter()
                .map(|t| format!("[{},{},{}]", t.a(), t.b(), t.c()))
                .collect();
            format!("[{}]", cells.join(","))
        }
    }
}

pub fn render_max_area(p: i64, r: &MaxAreaResult, format: OutputFormat) -> String {
    let (a, b, c) = r.triple.sides();
    let area = area_decimal(r.area_sq_432);
    match format {
        OutputFormat::Plain => format!(
            "p = {p}\ntriple = ({a}, {b}, {c})\nv = {v}\narea_sq_432 = {x}\narea = {area}",
            v = r.v,
            x = r.area_sq_432
        ),
        OutputFormat::Csv => format!(
            "p,a,b,c,v,area_sq_432,area\n{p},{a},{b},{c},{v},{x},{area}",
            v = r.v,
            x = r.area_sq_432
        ),
        OutputFormat::Json => format!(
            "{{\"p\":{p},\"triple\":[{a},{b},{c}],\"v\":{v},\"area_sq_432\":{x},\"area_approx\":{area}}}",
            v = r.v,
            x = r.area_sq_432
        ),
    }
}

pub fn render_table(rows: &[(i64, i128)], format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            let lines: Vec<String> = rows.iter().map(|(p, t)| format!("{p} {t}")).collect();
            lines.join("\n")
        }
        OutputFormat::Csv => {
            let mut lines = vec!["p,count".to_string()];
            lines.extend(rows.iter().map(|(p, t)| format!("{p},{t}")));
            lines.join("\n")
        }
        OutputFormat::Json => {
            let cells: Vec<String> = rows
                .iter()
                .map(|(p, t)| format!("{{\"p\":{p},\"count\":{t}}}"))
                .collect();
            format!("[{}]", cells.join(","))
        }
    }
}

/// `E = sqrt(area_sq_432 / 432)` to six decimal places, computed without
/// floating point: take the integer square root of `area * 10^12 / 432`,
/// then round by comparing the remainder against the midpoint, half to
/// even. Integer areas therefore print exactly (perimeter 16 gives
/// `12.000000`), and the midpoint itself is unreachable from integer
/// input, so the even rule is declared policy rather than a live branch.
pub fn area_decimal(area_sq_432: i128) -> String {
    assert!(area_sq_432 >= 0, "squared areas are nonnegative");
    let t = BigUint::from(area_sq_432 as u128) * BigUint::from(10u64.pow(12));
    // integer sqrt of the quotient can undershoot the true floor by one
    let mut k = (&t / 432u32).sqrt();
    loop {
        let next = &k + 1u32;
        if &next * &next * 432u32 <= t {
            k = next;
        } else {
            break;
        }
    }
    // E * 10^6 >= k + 1/2  <=>  t >= 432 k^2 + 432 k + 108
    let rem = &t - &k * &k * 432u32;
    let midpoint = &k * 432u32 + 108u32;
    let up = match rem.cmp(&midpoint) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => &k % 2u32 == BigUint::from(1u32),
    };
    if up {
        k += 1u32;
    }
    let micros = u128::try_from(k).expect("E * 10^6 fits u128 for i128 areas");
    format!("{}.{:06}", micros / 1_000_000, micros % 1_000_000)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alcuin::geometry::max_area_triple;

    #[test]
    fn decimal_reference_values() {
        assert_eq!(area_decimal(0), "0.000000");
        assert_eq!(area_decimal(432), "1.000000");
        assert_eq!(area_decimal(81), "0.433013");
        assert_eq!(area_decimal(3456), "2.828427");
        assert_eq!(area_decimal(1701), "1.984313");
        // perimeter 16: E is exactly 12
        assert_eq!(area_decimal(62208), "12.000000");
    }

    #[test]
    fn decimal_agrees_with_float_sqrt_away_from_boundaries() {
        for p in [3i64, 5, 6, 7, 8, 9, 10, 11, 12, 37, 100, 999, 2000] {
            let r = max_area_triple(p).unwrap();
            let e = ((r.area_sq_432 as f64) / 432.0).sqrt() * 1e6;
            // skip cases the float cannot settle
            if (e.fract() - 0.5).abs() < 1e-3 {
                continue;
            }
            assert_eq!(area_decimal(r.area_sq_432), {
                let k = e.round() as u128;
                format!("{}.{:06}", k / 1_000_000, k % 1_000_000)
            }, "p={p}");
        }
    }

    #[test]
    fn render_shapes_stay_fixed() {
        use alcuin::counting::enumerate_triples;

        assert_eq!(
            render_count(12, CountMethod::ClosedForm, 3, OutputFormat::Csv),
            "p,method,count\n12,closed-form,3"
        );
        assert_eq!(
            render_count(23, CountMethod::Mod12, 14, OutputFormat::Json),
            "{\"p\":23,\"method\":\"mod12\",\"count\":14}"
        );

        let triples = enumerate_triples(12);
        assert_eq!(
            render_enumerate(&triples, OutputFormat::Plain),
            "2 5 5\n3 4 5\n4 4 4"
        );
        assert_eq!(
            render_enumerate(&triples, OutputFormat::Csv),
            "a,b,c\n2,5,5\n3,4,5\n4,4,4"
        );
        assert_eq!(
            render_enumerate(&triples, OutputFormat::Json),
            "[[2,5,5],[3,4,5],[4,4,4]]"
        );
        assert_eq!(render_enumerate(&[], OutputFormat::Plain), "");
        assert_eq!(render_enumerate(&[], OutputFormat::Csv), "a,b,c");
        assert_eq!(render_enumerate(&[], OutputFormat::Json), "[]");

        let r = max_area_triple(8).unwrap();
        assert_eq!(
            render_max_area(8, &r, OutputFormat::Plain),
            "p = 8\ntriple = (2, 3, 3)\nv = -1\narea_sq_432 = 3456\narea = 2.828427"
        );
        assert_eq!(
            render_max_area(8, &r, OutputFormat::Csv),
            "p,a,b,c,v,area_sq_432,area\n8,2,3,3,-1,3456,2.828427"
        );
        assert_eq!(
            render_max_area(8, &r, OutputFormat::Json),
            "{\"p\":8,\"triple\":[2,3,3],\"v\":-1,\"area_sq_432\":3456,\"area_approx\":2.828427}"
        );

        let rows = [(0i64, 0i128), (3, 1), (12, 3)];
        assert_eq!(render_table(&rows, OutputFormat::Plain), "0 0\n3 1\n12 3");
        assert_eq!(render_table(&rows, OutputFormat::Csv), "p,count\n0,0\n3,1\n12,3");
        assert_eq!(
            render_table(&rows, OutputFormat::Json),
            "[{\"p\":0,\"count\":0},{\"p\":3,\"count\":1},{\"p\":12,\"count\":3}]"
        );
    }
}
