pub mod bounds;
pub mod calibrate;
pub mod estimate;
pub mod simulate;

/// Applies command-line overrides to the default constants.
pub(crate) fn constants_with(
    delta: f64,
    kappa: Option<f64>,
    eta: Option<f64>,
    xi: Option<f64>,
) -> hetmean::Constants {
    let mut c = hetmean::Constants::default().with_delta(delta);
    if let Some(v) = kappa {
        c.kappa = v;
    }
    if let Some(v) = eta {
        c.eta = v;
    }
    if let Some(v) = xi {
        c.xi = v;
    }
    c
}
