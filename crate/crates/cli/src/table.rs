//! The per-type classification counts for the supported primes, and the
//! three output renderings. Totals are unknown (rendered as a dash) for
//! the low types at p = 7 and p = 11, where no complete enumeration
//! exists.

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Row {
    pub prime: u64,
    pub type_n: u64,
    pub product: u64,
    pub automorphic: u64,
    pub partition: u64,
    pub total: Option<u64>,
}

const fn row(prime: u64, type_n: u64, product: u64, automorphic: u64, partition: u64, total: Option<u64>) -> Row {
    Row {
        prime,
        type_n,
        product,
        automorphic,
        partition,
        total,
    }
}

pub fn golden_rows(prime: u64) -> Option<Vec<Row>> {
    let rows = match prime {
        2 => vec![
            row(2, 0, 0, 1, 1, Some(1)),
            row(2, 1, 3, 3, 3, Some(3)),
            row(2, 3, 1, 1, 1, Some(1)),
        ],
        3 => vec![
            row(3, 0, 0, 4, 4, Some(4)),
            row(3, 1, 16, 16, 4, Some(16)),
            row(3, 2, 18, 18, 6, Some(18)),
            row(3, 4, 1, 2, 1, Some(2)),
        ],
        5 => vec![
            row(5, 0, 0, 96, 41, Some(96)),
            row(5, 1, 54, 54, 66, Some(114)),
            row(5, 2, 120, 180, 60, Some(210)),
            row(5, 3, 0, 0, 20, Some(20)),
            row(5, 4, 0, 0, 15, Some(15)),
            row(5, 6, 1, 3, 1, Some(3)),
        ],
        7 => vec![
            row(7, 0, 0, 470, 715, None),
            row(7, 1, 128, 128, 1296, None),
            row(7, 2, 420, 728, 1148, None),
            row(7, 3, 0, 0, 616, Some(616)),
            row(7, 4, 0, 0, 280, Some(280)),
            row(7, 5, 0, 0, 56, Some(56)),
            row(7, 6, 0, 0, 28, Some(28)),
            row(7, 8, 1, 4, 1, Some(4)),
        ],
        11 => vec![
            row(11, 0, 0, 2839, 580317, None),
            row(11, 1, 192, 192, 1179036, None),
            row(11, 2, 990, 2376, 1169652, None),
            row(11, 3, 0, 0, 753500, None),
            row(11, 4, 0, 0, 353925, None),
            row(11, 5, 0, 0, 128304, None),
            row(11, 6, 0, 0, 37884, None),
            row(11, 7, 0, 0, 8712, None),
            row(11, 8, 0, 0, 1980, None),
            row(11, 9, 0, 0, 220, Some(220)),
            row(11, 10, 0, 0, 66, Some(66)),
            row(11, 12, 1, 4, 1, Some(4)),
        ],
        _ => return None,
    };
    Some(rows)
}

/// Render rows: `None` -> pretty, `Some(true)` -> CSV, `Some(false)` -> JSON lines.
pub fn render(rows: &[Row], machine: Option<bool>) -> String {
    let mut out = String::new();
    match machine {
        Some(true) => {
            out.push_str("p,type,product,automorphic,partition,total\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.prime,
                    r.type_n,
                    r.product,
                    r.automorphic,
                    r.partition,
                    r.total.map_or("-".to_string(), |t| t.to_string()),
                ));
            }
        }
        Some(false) => {
            for r in rows {
                out.push_str(&serde_json::to_string(r).unwrap());
                out.push('\n');
            }
        }
        None => {
            out.push_str(&format!(
                "{:>3} {:>5} {:>9} {:>12} {:>10} {:>8}\n",
                "p", "type", "product", "automorphic", "partition", "total"
            ));
            for r in rows {
                out.push_str(&format!(
                    "{:>3} {:>5} {:>9} {:>12} {:>10} {:>8}\n",
                    r.prime,
                    format!("T_{}", r.type_n),
                    r.product,
                    r.automorphic,
                    r.partition,
                    r.total.map_or("-".to_string(), |t| t.to_string()),
                ));
            }
        }
    }
    out
}
