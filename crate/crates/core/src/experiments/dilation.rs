//! Local Dirichlet integrals of dilations `f_r(z) = f(rz)`.

use crate::error::Result;
use crate::local::{local_dirichlet_norm, LocalPoint};
use crate::series::{dilate, CoefficientSeries};

use super::{ExperimentReport, Relation};

/// Rows `(r, D_ζ(f_r), r²(2−r) D_ζ(f), 2r/(1+r) D_ζ(f))`, with checks
/// `col 2 ≤ col 3` and `col 3 ≤ col 4` up to `tol`.
pub fn dilation_experiment(
    f: &CoefficientSeries,
    r_grid: &[f64],
    zeta: LocalPoint,
    tol: f64,
) -> Result<ExperimentReport> {
    let mut report = ExperimentReport::new("dilation");
    report.param("r_grid", r_grid).param("zeta", [zeta.zeta().re, zeta.zeta().im]);
    let d = local_dirichlet_norm(f, zeta)?;
    for &r in r_grid {
        let fr = dilate(f, r)?;
        let dr = local_dirichlet_norm(&fr, zeta)?;
        let sharp = r * r * (2.0 - r) * d;
        let prior = 2.0 * r / (1.0 + r) * d;
        report.row(
            "dilation",
            format!("r={r}"),
            &[("r", r), ("d_fr", dr), ("sharp", sharp), ("prior", prior)],
        );
        report.check(None, format!("D(f_r) <= r^2(2-r) D(f), r={r}"), dr, Relation::Le, sharp, tol);
        report.check(None, format!("r^2(2-r) <= 2r/(1+r), r={r}"), sharp, Relation::Le, prior, tol);
    }
    Ok(report)
}
