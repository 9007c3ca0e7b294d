use super::config::{check_s, check_x};
use super::{
    hurwitz_deriv_generic, hurwitz_deriv_neg_int, hurwitz_deriv_pos_int, hurwitz_generic, hurwitz_neg_int,
    hurwitz_pos_int, EvalConfig, EvalOutcome, EvalPoint,
};
use crate::{Result, ZetaError};

/// Evaluates ζ_H(s, ix) or its s-derivative, snapping s within
/// `integer_snap` of an integer other than 1 onto that integer's closed form.
pub fn evaluate(point: EvalPoint, cfg: &EvalConfig) -> Result<EvalOutcome> {
    cfg.validate()?;
    let EvalPoint { s, x, deriv } = point;
    check_s(s)?;
    check_x(x)?;
    if deriv > 1 {
        return Err(ZetaError::Domain(format!("deriv={deriv} must be 0 or 1")));
    }
    if (s - 1.0).abs() <= cfg.pole_guard {
        return Err(ZetaError::Pole);
    }
    let n = s.round();
    if n != 1.0 && (s - n).abs() <= cfg.integer_snap {
        if n <= 0.0 {
            let k = (-n) as u32;
            return match deriv {
                0 => hurwitz_neg_int(k, x, cfg),
                _ => hurwitz_deriv_neg_int(k, x, cfg),
            };
        }
        let k = n as u32;
        return match deriv {
            0 => hurwitz_pos_int(k, x, cfg),
            _ => hurwitz_deriv_pos_int(k, x, cfg),
        };
    }
    match deriv {
        0 => hurwitz_generic(s, x, cfg),
        _ => hurwitz_deriv_generic(s, x, cfg),
    }
}
