//! C ABI over `qtangent`.
//!
//! Every function returns a [`QtStatus`]. Objects cross the boundary as
//! opaque handles owned by the caller and released with the matching
//! `*_free` function. Strings returned through `char **` are released with
//! [`qt_string_free`]. After a failure, [`qt_last_error`] describes it.

use qtangent::cohomology::{cohomology_dims, SpinRep};
use qtangent::coideal::dim_lower_bound;
use qtangent::fixtures::{builtin_calculi, find_calculus};
use qtangent::fodc::{FodcModel, TangentSpace};
use qtangent::oq::OElement;
use qtangent::parse::{parse_o, parse_u};
use qtangent::uq::UElement;
use qtangent::verify::{verify_calculus, VerifyOptions};
use qtangent::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    MixedAlgebra = 4,
    UnknownFixture = 5,
    Schema = 6,
    Computation = 7,
    Panic = 8,
}

/// Element of the dual algebra U.
pub struct QtUElement(UElement);

/// Element of the coordinate algebra O(SL_q(2)).
pub struct QtOElement(OElement);

/// A calculus fixture with its derived model.
pub struct QtModel(FodcModel);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QtStatus {
    match e {
        Error::Syntax { .. } => QtStatus::Syntax,
        Error::MixedAlgebra => QtStatus::MixedAlgebra,
        Error::UnknownFixture(_) => QtStatus::UnknownFixture,
        Error::Schema(_) | Error::Json(_) | Error::Io(_) => QtStatus::Schema,
        _ => QtStatus::Computation,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), QtStatus>) -> QtStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(Ok(())) => QtStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            QtStatus::Panic
        }
    }
}

fn fail(e: Error) -> QtStatus {
    set_error(e.to_string());
    status_of(&e)
}

unsafe fn input<'a>(s: *const c_char) -> Result<&'a str, QtStatus> {
    if s.is_null() {
        set_error("null string".into());
        return Err(QtStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not UTF-8".into());
        QtStatus::InvalidUtf8
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, QtStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle".into());
        QtStatus::NullPointer
    })
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), QtStatus> {
    if out.is_null() {
        set_error("null output pointer".into());
        return Err(QtStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), QtStatus> {
    let c = CString::new(s).map_err(|_| QtStatus::Computation)?;
    write(out, c.into_raw())
}

/// Message for the most recent failure on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn qt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qt_u_parse(src: *const c_char, out: *mut *mut QtUElement) -> QtStatus {
    guard(|| {
        let x = parse_u(input(src)?).map_err(fail)?;
        write(out, Box::into_raw(Box::new(QtUElement(x))))
    })
}

/// # Safety
/// `x` comes from this library or is NULL.
#[no_mangle]
pub unsafe extern "C" fn qt_u_free(x: *mut QtUElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Canonical text of `x`.
///
/// # Safety
/// Pointers are valid.
#[no_mangle]
pub unsafe extern "C" fn qt_u_to_string(x: *const QtUElement, out: *mut *mut c_char) -> QtStatus {
    guard(|| write_string(out, deref(x)?.0.to_string()))
}

/// # Safety
/// Pointers are valid.
#[no_mangle]
pub unsafe extern "C" fn qt_u_mul(
    a: *const QtUElement,
    b: *const QtUElement,
    out: *mut *mut QtUElement,
) -> QtStatus {
    guard(|| {
        let p = deref(a)?.0.mul(&deref(b)?.0);
        write(out, Box::into_raw(Box::new(QtUElement(p))))
    })
}

/// # Safety
/// Pointers are valid.
#[no_mangle]
pub unsafe extern "C" fn qt_u_equal(
    a: *const QtUElement,
    b: *const QtUElement,
    out: *mut bool,
) -> QtStatus {
    guard(|| write(out, deref(a)?.0 == deref(b)?.0))
}

/// Coproduct of `x` as text.
///
/// # Safety
/// Pointers are valid.
#[no_mangle]
pub unsafe extern "C" fn qt_u_coproduct(x: *const QtUElement, out: *mut *mut c_char) -> QtStatus {
    guard(|| write_string(out, deref(x)?.0.coproduct().to_string()))
}

/// Lower bound for the dimension of a right coideal containing `x`.
///
/// # Safety
/// Pointers are valid.
#[no_mangle]
pub unsafe extern "C" fn qt_coideal_bound(x: *const QtUElement, out: *mut usize) -> QtStatus {
    guard(|| {
        let b = dim_lower_bound(&deref(x)?.0).map_err(fail)?;
        write(out, b)
    })
}

/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qt_o_parse(src: *const c_char, out: *mut *mut QtOElement) -> QtStatus {
    guard(|| {
        let x = parse_o(input(src)?).map_err(fail)?;
        write(out, Box::into_raw(Box::new(QtOElement(x))))
    })
}

/// # Safety
/// `x` comes from this library or is NULL.
#[no_mangle]
pub unsafe extern "C" fn qt_o_free(x: *mut QtOElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// # Safety
/// Pointers are valid.
#[no_mangle]
pub unsafe extern "C" fn qt_o_to_string(x: *const QtOElement, out: *mut *mut c_char) -> QtStatus {
    guard(|| write_string(out, deref(x)?.0.to_string()))
}

/// `⟨u, o⟩` as canonical scalar text.
///
/// # Safety
/// Pointers are valid.
#[no_mangle]
pub unsafe extern "C" fn qt_pair(
    u: *const QtUElement,
    o: *const QtOElement,
    out: *mut *mut c_char,
) -> QtStatus {
    guard(|| write_string(out, qtangent::oq::pair(&deref(u)?.0, &deref(o)?.0).to_string()))
}

/// Builds the model of a built-in calculus fixture (`calc3`, `3`, `item9`).
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qt_model_build(name: *const c_char, out: *mut *mut QtModel) -> QtStatus {
    guard(|| {
        let calculi = builtin_calculi();
        let rec = find_calculus(&calculi, input(name)?).map_err(fail)?;
        let model = rec
            .basis()
            .and_then(TangentSpace::new)
            .and_then(|t| FodcModel::build(&t))
            .map_err(fail)?;
        write(out, Box::into_raw(Box::new(QtModel(model))))
    })
}

/// # Safety
/// `m` comes from this library or is NULL.
#[no_mangle]
pub unsafe extern "C" fn qt_model_free(m: *mut QtModel) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Dimensions of Γ^∧0 … Γ^∧4.
///
/// # Safety
/// `out` points to five writable `size_t`.
#[no_mangle]
pub unsafe extern "C" fn qt_model_exterior_dims(m: *const QtModel, out: *mut usize) -> QtStatus {
    guard(|| {
        let dims = deref(m)?.0.exterior.dims();
        if out.is_null() {
            return Err(fail_null());
        }
        ptr::copy_nonoverlapping(dims.as_ptr(), out, dims.len());
        Ok(())
    })
}

/// Cohomology dimensions h0 … h3 twisted by the spin `two_lambda / 2`
/// representation.
///
/// # Safety
/// `out` points to four writable `size_t`.
#[no_mangle]
pub unsafe extern "C" fn qt_model_cohomology(
    m: *const QtModel,
    two_lambda: u32,
    out: *mut usize,
) -> QtStatus {
    guard(|| {
        let dims = cohomology_dims(&deref(m)?.0, SpinRep::new(two_lambda));
        if out.is_null() {
            return Err(fail_null());
        }
        ptr::copy_nonoverlapping(dims.as_ptr(), out, dims.len());
        Ok(())
    })
}

/// Runs the full verification suite on a built-in fixture.
///
/// # Safety
/// `name` is a NUL-terminated string; `passed` is writable.
#[no_mangle]
pub unsafe extern "C" fn qt_verify(name: *const c_char, passed: *mut bool) -> QtStatus {
    guard(|| {
        let calculi = builtin_calculi();
        let rec = find_calculus(&calculi, input(name)?).map_err(fail)?;
        let report = verify_calculus(rec, &VerifyOptions::default()).map_err(fail)?;
        if !report.passed() {
            let bad: Vec<String> = report
                .results
                .iter()
                .filter(|r| !r.passed)
                .map(|r| format!("{}: {}", r.check, r.detail))
                .collect();
            set_error(bad.join("; "));
        }
        write(passed, report.passed())
    })
}

fn fail_null() -> QtStatus {
    set_error("null output pointer".into());
    QtStatus::NullPointer
}
