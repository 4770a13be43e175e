//! Hand-emitted SVG trajectory plots; no plotting dependency, bit-stable
//! output for fixed inputs.

use miso_core::semigroup::TrajectorySample;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 52.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// Polyline plot of one trajectory per labeled sample, each annotated with
/// its fitted degree when one was detected.
pub fn trajectory_svg(samples: &[(String, TrajectorySample, Option<u32>)]) -> String {
    assert!(!samples.is_empty(), "nothing to plot");
    let t_max = samples
        .iter()
        .flat_map(|(_, s, _)| s.t_grid.iter())
        .fold(0.0f64, |a, &t| a.max(t))
        .max(1e-12);
    let v_max = samples
        .iter()
        .flat_map(|(_, s, _)| s.values.iter())
        .fold(0.0f64, |a, &v| a.max(v))
        .max(1e-12);

    let x = |t: f64| MARGIN + (WIDTH - 2.0 * MARGIN) * t / t_max;
    let y = |v: f64| HEIGHT - MARGIN - (HEIGHT - 2.0 * MARGIN) * v / v_max;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // axes
    out.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    ));
    out.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = MARGIN,
        t = MARGIN,
        b = HEIGHT - MARGIN
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">t = {:.3}</text>\n",
        WIDTH - MARGIN - 30.0,
        HEIGHT - MARGIN + 16.0,
        t_max
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">max = {:.4}</text>\n",
        6.0,
        MARGIN + 4.0,
        v_max
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">||T(t)x||^2</text>\n",
        6.0,
        MARGIN - 16.0,
    ));

    for (idx, (label, sample, degree)) in samples.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let points: Vec<String> = sample
            .t_grid
            .iter()
            .zip(&sample.values)
            .map(|(&t, &v)| format!("{:.2},{:.2}", x(t), y(v)))
            .collect();
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            points.join(" ")
        ));
        let annotation = match degree {
            Some(d) => format!("{label}: degree {d}"),
            None => format!("{label}: no polynomial degree"),
        };
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"{color}\">{annotation}</text>\n",
            MARGIN + 6.0,
            MARGIN + 16.0 * (idx as f64 + 1.0),
        ));
    }
    out.push_str("</svg>\n");
    out
}
