//! C interface to the radsym operator algebra and verification harness.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns
//! a [`RadsymStatus`]; on failure [`radsym_last_error`] describes the cause.
//! Strings returned through out-pointers are heap allocated and must be
//! released with [`radsym_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use radsym::numerics::{ladder_check, RadialGrid, Tolerances};
use radsym::opalg::{Operator, Rational};
use radsym::systems::{self, OperatorName, SystemId};

/// Result codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadsymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    UnknownName = 4,
    AlgebraError = 5,
    NumericError = 6,
    Panic = 7,
}

/// A physical system: oscillator, hydrogen or generalized power law.
pub struct RadsymSystem(SystemId);

/// An exact operator in canonical form.
pub struct RadsymOperator(Operator);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(RadsymStatus, String);

impl Failure {
    fn new(status: RadsymStatus, msg: impl ToString) -> Self {
        Failure(status, msg.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RadsymStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            RadsymStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RadsymStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(RadsymStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::new(RadsymStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(RadsymStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(RadsymStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure::new(RadsymStatus::InvalidArgument, e))?;
    write_out(out, c.into_raw())
}

fn parse_rational(s: &str, what: &str) -> Result<Rational, Failure> {
    s.parse().map_err(|e| Failure::new(RadsymStatus::InvalidArgument, format!("{what}: {e}")))
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure::new(RadsymStatus::InvalidArgument, e))
}

/// Message for the most recent failure on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn radsym_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn radsym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the oscillator (`"ho"`) or hydrogen (`"ha"`) system.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_system_new(name: *const c_char, out: *mut *mut RadsymSystem) -> RadsymStatus {
    guard(|| {
        let sys = match read_str(name, "name")? {
            "ho" => SystemId::Oscillator,
            "ha" => SystemId::Hydrogen,
            other => return Err(Failure::new(RadsymStatus::UnknownName, format!("unknown system {other:?}"))),
        };
        write_out(out, Box::into_raw(Box::new(RadsymSystem(sys))))
    })
}

/// Creates the generalized system from rational strings such as `"3/2"`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_system_generalized(
    zeta: *const c_char,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut RadsymSystem,
) -> RadsymStatus {
    guard(|| {
        let zeta = parse_rational(read_str(zeta, "zeta")?, "zeta")?;
        let a = parse_rational(read_str(a, "A")?, "A")?;
        let b = parse_rational(read_str(b, "B")?, "B")?;
        let sys = SystemId::generalized(zeta, a, b).map_err(|e| Failure::new(RadsymStatus::InvalidArgument, e))?;
        write_out(out, Box::into_raw(Box::new(RadsymSystem(sys))))
    })
}

/// # Safety
/// `sys` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn radsym_system_free(sys: *mut RadsymSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Builds a named operator (`"H"`, `"D+n"`, `"a1dag"`, ...) with the
/// system's parameters substituted.
///
/// # Safety
/// `sys` must be a live handle, `name` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_build(
    sys: *const RadsymSystem,
    name: *const c_char,
    out: *mut *mut RadsymOperator,
) -> RadsymStatus {
    guard(|| {
        let sys = deref(sys, "system")?;
        let name = read_str(name, "name")?;
        let op: OperatorName =
            name.parse().map_err(|_| Failure::new(RadsymStatus::UnknownName, format!("unknown operator {name:?}")))?;
        let built = systems::build(&sys.0, op).map_err(|e| Failure::new(RadsymStatus::UnknownName, e))?;
        write_out(out, Box::into_raw(Box::new(RadsymOperator(built))))
    })
}

/// # Safety
/// `op` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_free(op: *mut RadsymOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

unsafe fn binary(
    a: *const RadsymOperator,
    b: *const RadsymOperator,
    out: *mut *mut RadsymOperator,
    f: fn(&Operator, &Operator) -> Operator,
) -> RadsymStatus {
    guard(|| {
        let r = f(&deref(a, "lhs")?.0, &deref(b, "rhs")?.0);
        write_out(out, Box::into_raw(Box::new(RadsymOperator(r))))
    })
}

/// `a + b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_add(
    a: *const RadsymOperator,
    b: *const RadsymOperator,
    out: *mut *mut RadsymOperator,
) -> RadsymStatus {
    binary(a, b, out, |x, y| x + y)
}

/// `a − b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_sub(
    a: *const RadsymOperator,
    b: *const RadsymOperator,
    out: *mut *mut RadsymOperator,
) -> RadsymStatus {
    binary(a, b, out, |x, y| x - y)
}

/// `a ∘ b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_compose(
    a: *const RadsymOperator,
    b: *const RadsymOperator,
    out: *mut *mut RadsymOperator,
) -> RadsymStatus {
    binary(a, b, out, Operator::compose)
}

/// `[a, b]`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_commutator(
    a: *const RadsymOperator,
    b: *const RadsymOperator,
    out: *mut *mut RadsymOperator,
) -> RadsymStatus {
    binary(a, b, out, Operator::commutator)
}

/// Multiplies by a rational string such as `"-1/2"`.
///
/// # Safety
/// `op` must be a live handle, `factor` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_scale(
    op: *const RadsymOperator,
    factor: *const c_char,
    out: *mut *mut RadsymOperator,
) -> RadsymStatus {
    guard(|| {
        let op = deref(op, "operator")?;
        let r = parse_rational(read_str(factor, "factor")?, "factor")?;
        write_out(out, Box::into_raw(Box::new(RadsymOperator(op.0.scale_rational(&r)))))
    })
}

/// Writes whether the operator is identically zero.
///
/// # Safety
/// `op` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_is_zero(op: *const RadsymOperator, out: *mut bool) -> RadsymStatus {
    guard(|| write_out(out, deref(op, "operator")?.0.is_zero()))
}

/// Human-readable form of the operator.
///
/// # Safety
/// `op` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_to_string(op: *const RadsymOperator, out: *mut *mut c_char) -> RadsymStatus {
    guard(|| write_string(out, deref(op, "operator")?.0.to_string()))
}

/// Canonical JSON serialization of the operator.
///
/// # Safety
/// `op` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_operator_to_json(op: *const RadsymOperator, out: *mut *mut c_char) -> RadsymStatus {
    guard(|| write_string(out, to_json(&deref(op, "operator")?.0.to_json())?))
}

/// JSON array of registered identity ids with descriptions.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_identity_list(out: *mut *mut c_char) -> RadsymStatus {
    guard(|| {
        #[derive(serde::Serialize)]
        struct Entry {
            id: &'static str,
            description: &'static str,
            asserted: bool,
        }
        let list: Vec<Entry> = systems::identity_ids()
            .into_iter()
            .map(|i| Entry { id: i.id, description: i.description, asserted: i.asserted })
            .collect();
        write_string(out, to_json(&list)?)
    })
}

/// Runs one registered identity. `pass` receives the verdict (true for
/// reported-only identities); `report_json`, if non-null, the full report.
///
/// # Safety
/// `id` must be NUL-terminated; `pass` writable; `report_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_verify_identity(
    id: *const c_char,
    pass: *mut bool,
    report_json: *mut *mut c_char,
) -> RadsymStatus {
    guard(|| {
        let id = read_str(id, "id")?;
        let report = systems::verify_identity(id).map_err(|e| match e {
            systems::SystemsError::UnknownIdentity(_) => Failure::new(RadsymStatus::UnknownName, e),
            _ => Failure::new(RadsymStatus::AlgebraError, e),
        })?;
        write_out(pass, report.ok())?;
        if !report_json.is_null() {
            write_string(report_json, to_json(&report)?)?;
        }
        Ok(())
    })
}

/// Applies a ladder operator to the `(n, m)` eigenstate on the reference
/// grid and reports overlap and proportionality constant as JSON.
///
/// # Safety
/// `sys` must be a live handle, `name` NUL-terminated, `pass` writable,
/// `report_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn radsym_ladder_check(
    sys: *const RadsymSystem,
    name: *const c_char,
    n: i64,
    m: i64,
    pass: *mut bool,
    report_json: *mut *mut c_char,
) -> RadsymStatus {
    guard(|| {
        let sys = deref(sys, "system")?;
        let name = read_str(name, "name")?;
        let op: OperatorName =
            name.parse().map_err(|_| Failure::new(RadsymStatus::UnknownName, format!("unknown operator {name:?}")))?;
        let grid = match sys.0 {
            SystemId::Hydrogen => RadialGrid::hydrogen_reference(),
            _ => RadialGrid::oscillator_reference(),
        };
        let report = ladder_check(&sys.0, op, (n, m), &grid, &Tolerances::default())
            .map_err(|e| Failure::new(RadsymStatus::NumericError, e))?;
        write_out(pass, report.pass)?;
        if !report_json.is_null() {
            write_string(report_json, to_json(&report)?)?;
        }
        Ok(())
    })
}
