//! CSV and Graphviz output.

use moddeg::orders::HomRow;

use crate::suite::CheckLine;

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.iter().map(|s| csv_field(s)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

pub fn hom_rows_csv(rows: &[HomRow]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| [r.probe, r.into_m, r.into_n, r.from_m, r.from_n].iter().map(usize::to_string).collect())
        .collect();
    csv(&["probe", "x_m", "x_n", "m_x", "n_x"], &body)
}

pub fn checks_csv(lines: &[CheckLine]) -> String {
    let body: Vec<Vec<String>> = lines
        .iter()
        .map(|l| {
            let basis = serde_json::to_value(l.basis).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            vec![l.case.clone(), l.name.clone(), l.expected.clone(), l.actual.clone(), basis, l.pass.to_string()]
        })
        .collect();
    csv(&["case", "check", "expected", "actual", "basis", "pass"], &body)
}

/// Hasse diagram of a preorder on `labels`; `le[i][j]` means `i ≤ j`.
/// Classes that are equivalent in the preorder are drawn with a dashed edge.
pub fn hasse_dot(name: &str, labels: &[String], le: &[Vec<bool>]) -> String {
    let n = labels.len();
    let mut out = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
    for (i, l) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", l.replace('"', "'")));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || !le[i][j] {
                continue;
            }
            if le[j][i] {
                if i < j {
                    out.push_str(&format!("  n{i} -> n{j} [dir=none, style=dashed];\n"));
                }
                continue;
            }
            let covered = (0..n).any(|k| k != i && k != j && le[i][k] && le[k][j] && !le[k][i] && !le[j][k]);
            if !covered {
                out.push_str(&format!("  n{i} -> n{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}
