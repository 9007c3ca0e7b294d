//! C ABI for zetaix.
//!
//! Every function returns a [`ZetaixStatus`]; results go through out
//! pointers. On failure the message is kept per thread and can be fetched
//! with [`zetaix_last_error_message`]. Panics never cross the boundary.
//!
//! Configuration lives behind an opaque [`ZetaixConfig`] handle. Passing a
//! null handle where one is accepted means the defaults.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zetaix::hurwitz::{evaluate, EvalConfig, EvalPoint, Path};
use zetaix::oracle::{oracle_hurwitz, oracle_hurwitz_deriv, OracleConfig};
use zetaix::polylog::polylog_neg_int;
use zetaix::riemann::riemann_zeta_with;
use zetaix::ZetaError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaixStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Pole = 3,
    Accuracy = 4,
    Singularity = 5,
    UseOtherPath = 6,
    SnapRefused = 7,
    StencilCrossesPole = 8,
    WidenOrder = 9,
    InvalidConfig = 10,
    Panic = 99,
}

/// Which formula produced a value; `None` for oracle results.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaixPath {
    None = 0,
    GenericLeft = 1,
    GenericRight = 2,
    NegEven = 3,
    NegOdd = 4,
    PosEven = 5,
    PosOdd = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaixResult {
    pub re: f64,
    pub im: f64,
    pub error_estimate: f64,
    pub path: ZetaixPath,
}

/// Opaque evaluation settings.
pub struct ZetaixConfig {
    inner: EvalConfig,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &ZetaError) -> ZetaixStatus {
    match e {
        ZetaError::Domain(_) => ZetaixStatus::Domain,
        ZetaError::Pole | ZetaError::PoleProximity { .. } => ZetaixStatus::Pole,
        ZetaError::Accuracy { .. } => ZetaixStatus::Accuracy,
        ZetaError::Singularity => ZetaixStatus::Singularity,
        ZetaError::UseOtherPath(_) => ZetaixStatus::UseOtherPath,
        ZetaError::SnapRefused { .. } => ZetaixStatus::SnapRefused,
        ZetaError::StencilCrossesPole { .. } => ZetaixStatus::StencilCrossesPole,
        ZetaError::WidenOrder { .. } => ZetaixStatus::WidenOrder,
        ZetaError::InvalidConfig(_) => ZetaixStatus::InvalidConfig,
    }
}

fn path_of(p: Path) -> ZetaixPath {
    match p {
        Path::GenericLeft => ZetaixPath::GenericLeft,
        Path::GenericRight => ZetaixPath::GenericRight,
        Path::NegEven => ZetaixPath::NegEven,
        Path::NegOdd => ZetaixPath::NegOdd,
        Path::PosEven => ZetaixPath::PosEven,
        Path::PosOdd => ZetaixPath::PosOdd,
    }
}

// Runs `f` with panics and library errors turned into status codes.
fn guard<F>(f: F) -> ZetaixStatus
where
    F: FnOnce() -> Result<(), ZetaixFailure>,
{
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZetaixStatus::Ok,
        Ok(Err(ZetaixFailure::Null(what))) => {
            set_error(format!("{what} is null"));
            ZetaixStatus::NullPointer
        }
        Ok(Err(ZetaixFailure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            ZetaixStatus::Panic
        }
    }
}

enum ZetaixFailure {
    Null(&'static str),
    Lib(ZetaError),
}

impl From<ZetaError> for ZetaixFailure {
    fn from(e: ZetaError) -> Self {
        ZetaixFailure::Lib(e)
    }
}

fn out_ref<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, ZetaixFailure> {
    // SAFETY: the caller promises a non-null `p` points to writable storage for T.
    unsafe { p.as_mut() }.ok_or(ZetaixFailure::Null(what))
}

fn config_or_default(cfg: *const ZetaixConfig) -> EvalConfig {
    // SAFETY: a non-null handle came from zetaix_config_new and is still live.
    unsafe { cfg.as_ref() }.map(|c| c.inner).unwrap_or_default()
}

/// New handle holding the default settings. Free with [`zetaix_config_free`].
#[no_mangle]
pub extern "C" fn zetaix_config_new() -> *mut ZetaixConfig {
    Box::into_raw(Box::new(ZetaixConfig { inner: EvalConfig::default() }))
}

/// Releases a handle from [`zetaix_config_new`]. Null is ignored.
///
/// # Safety
/// `cfg` must be null or a live handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn zetaix_config_free(cfg: *mut ZetaixConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

fn update(cfg: *mut ZetaixConfig, edit: impl FnOnce(&mut EvalConfig)) -> ZetaixStatus {
    guard(|| {
        let handle = out_ref(cfg, "config")?;
        let mut next = handle.inner;
        edit(&mut next);
        next.validate()?;
        handle.inner = next;
        Ok(())
    })
}

/// Sets the relative series tolerance; rejected values leave the handle unchanged.
///
/// # Safety
/// `cfg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zetaix_config_set_tol(cfg: *mut ZetaixConfig, tol_rel: f64) -> ZetaixStatus {
    update(cfg, |c| c.tol_rel = tol_rel)
}

/// # Safety
/// `cfg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zetaix_config_set_term_cap(cfg: *mut ZetaixConfig, term_cap: usize) -> ZetaixStatus {
    update(cfg, |c| c.term_cap = term_cap)
}

/// # Safety
/// `cfg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zetaix_config_set_integer_snap(cfg: *mut ZetaixConfig, snap: f64) -> ZetaixStatus {
    update(cfg, |c| c.integer_snap = snap)
}

/// # Safety
/// `cfg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zetaix_config_set_pole_guard(
    cfg: *mut ZetaixConfig,
    guard_radius: f64,
) -> ZetaixStatus {
    update(cfg, |c| c.pole_guard = guard_radius)
}

/// ζ_H(s, ix) for `deriv` = 0, ∂_s ζ_H(s, ix) for `deriv` = 1.
///
/// # Safety
/// `cfg` must be null or a live handle; `out` must point to a ZetaixResult.
#[no_mangle]
pub unsafe extern "C" fn zetaix_evaluate(
    cfg: *const ZetaixConfig,
    s: f64,
    x: f64,
    deriv: u8,
    out: *mut ZetaixResult,
) -> ZetaixStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let r = evaluate(EvalPoint::new(s, x, deriv), &config_or_default(cfg))?;
        *out = ZetaixResult {
            re: r.value.re,
            im: r.value.im,
            error_estimate: r.error_estimate,
            path: path_of(r.path),
        };
        Ok(())
    })
}

/// Independent high-precision reference for ζ_H(s, ix) or its s-derivative,
/// with default oracle settings. Much slower than [`zetaix_evaluate`].
///
/// # Safety
/// `out` must point to a ZetaixResult.
#[no_mangle]
pub unsafe extern "C" fn zetaix_oracle(s: f64, x: f64, deriv: u8, out: *mut ZetaixResult) -> ZetaixStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let cfg = OracleConfig::default();
        let r = match deriv {
            0 => oracle_hurwitz(s, x, &cfg)?,
            1 => oracle_hurwitz_deriv(s, x, &cfg)?,
            d => return Err(ZetaError::Domain(format!("deriv={d} must be 0 or 1")).into()),
        };
        *out = ZetaixResult {
            re: r.value.re,
            im: r.value.im,
            error_estimate: r.error_estimate,
            path: ZetaixPath::None,
        };
        Ok(())
    })
}

/// d^order/dσ^order ζ_R(σ), order ∈ {0, 1, 2}.
///
/// # Safety
/// `cfg` must be null or a live handle; `out` must point to a double.
#[no_mangle]
pub unsafe extern "C" fn zetaix_riemann_zeta(
    cfg: *const ZetaixConfig,
    order: u8,
    sigma: f64,
    out: *mut f64,
) -> ZetaixStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = riemann_zeta_with(order, sigma, &config_or_default(cfg))?;
        Ok(())
    })
}

/// Li_{−n}(w) for real w > 0, w ≠ 1.
///
/// # Safety
/// `out` must point to a double.
#[no_mangle]
pub unsafe extern "C" fn zetaix_polylog_neg_int(n: u32, w: f64, out: *mut f64) -> ZetaixStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = polylog_neg_int(n as usize, w)?;
        Ok(())
    })
}

/// Copy of the message from the last failing call on this thread, or null.
/// Free with [`zetaix_string_free`].
#[no_mangle]
pub extern "C" fn zetaix_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer from [`zetaix_last_error_message`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn zetaix_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn zetaix_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
