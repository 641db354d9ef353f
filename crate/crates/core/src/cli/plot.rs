//! Matplotlib script drawing V, Ṽ and the partner levels from the CSV.

use std::path::Path;

use super::{Report, ScenarioConfig};

fn py_list(values: &[f64]) -> String {
    let items: Vec<String> = values.iter().map(|v| format!("{v:?}")).collect();
    format!("[{}]", items.join(", "))
}

fn py_str(s: &str) -> String {
    format!("{s:?}")
}

/// The CSV location as seen from the script: a bare file name resolved
/// against the script directory when both live together.
fn csv_reference(config: &ScenarioConfig, plot: &Path) -> String {
    let csv = &config.csv_path;
    if csv.parent() == plot.parent() {
        if let Some(name) = csv.file_name() {
            return format!("os.path.join(os.path.dirname(os.path.abspath(__file__)), {})", py_str(&name.to_string_lossy()));
        }
    }
    py_str(&csv.display().to_string())
}

pub(super) fn script(config: &ScenarioConfig, report: &Report) -> String {
    let plot = config.plot_path.as_deref().unwrap_or(Path::new("plot.py"));
    let levels = &report.partner.eigenvalues;
    let (l, r) = config.potential.asymptotic_limits();
    let top = [l, r, 0.0].into_iter().filter(|v| v.is_finite()).fold(f64::NEG_INFINITY, f64::max);
    let bottom = levels.iter().copied().fold(top - 1.0, f64::min);
    let span = top - bottom;
    let title = format!("{} ({}, w0 = {})", config.potential.name(), report.classification, config.w0);
    format!(
        r#"import csv
import os

import matplotlib.pyplot as plt

CSV = {csv}
LEVELS = {levels}

xs, v, vt = [], [], []
with open(CSV, newline="") as fh:
    for row in csv.DictReader(fh):
        xs.append(float(row["x"]))
        v.append(float(row["V"]))
        vt.append(float(row["V_tilde"]))

fig, ax = plt.subplots(figsize=(7, 5))
ax.plot(xs, vt, "k-", label="partner")
ax.plot(xs, v, "b--", label="initial")
for e in LEVELS:
    ax.axhline(e, color="r", linestyle=":", linewidth=1)
ax.set_ylim({ymin:?}, {ymax:?})
ax.set_xlabel("x")
ax.set_ylabel("V(x)")
ax.set_title({title})
ax.legend()
fig.tight_layout()
fig.savefig(os.path.splitext(os.path.abspath(__file__))[0] + ".png", dpi=150)
"#,
        csv = csv_reference(config, plot),
        levels = py_list(levels),
        ymin = bottom - 0.25 * span,
        ymax = top + 0.25 * span,
        title = py_str(&title),
    )
}
