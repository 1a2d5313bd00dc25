//! C ABI for `mckay-core`.
//!
//! Groups are opaque `MckayGroup` handles created by the `mckay_group_from_*`
//! constructors and released with `mckay_group_free`. Every other function
//! returns a `MckayStatus` and writes its result through an out-pointer.
//! Strings handed out by the library are released with `mckay_string_free`.
//! After a non-OK status, `mckay_last_error_message` describes the failure
//! on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mckay_core::catalog::catalog_group;
use mckay_core::cli::{CliError, EXIT_INTERNAL};
use mckay_core::criteria::{generated_by_pseudo_reflections, passes_pure_codim2};
use mckay_core::group_input::group_from_document;
use mckay_core::hilbcurve::goettsche_series;
use mckay_core::mckay::{euler_tpn, hodge_tpn_detail, stringy_e_linear_symplectic};
use mckay_core::MatrixGroup;
use serde_json::json;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MckayStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidInput = 2,
    Internal = 3,
    Panic = 4,
    InvalidUtf8 = 5,
}

/// A finite matrix group. Opaque to C.
pub struct MckayGroup {
    inner: MatrixGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(MckayStatus, String);

impl<E> From<E> for Failure
where
    CliError: From<E>,
{
    fn from(e: E) -> Self {
        let e = CliError::from(e);
        let status = if e.code == EXIT_INTERNAL {
            MckayStatus::Internal
        } else {
            MckayStatus::InvalidInput
        };
        Failure(status, e.message)
    }
}

fn null(what: &str) -> Failure {
    Failure(MckayStatus::NullArgument, format!("{what} is null"))
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MckayStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MckayStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_owned());
            set_error(&format!("internal panic: {message}"));
            MckayStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(MckayStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn group<'a>(g: *const MckayGroup) -> Result<&'a MatrixGroup, Failure> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("group"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|e| Failure(MckayStatus::Internal, e.to_string()))?;
    out.write(c.into_raw());
    Ok(())
}

unsafe fn write_group(out: *mut *mut MckayGroup, g: MatrixGroup) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(MckayGroup { inner: g })));
    Ok(())
}

/// Builds a catalog group such as `"binary-dihedral:3"`, exploring at most
/// `cap` elements.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_group_from_catalog(
    name: *const c_char,
    cap: usize,
    out: *mut *mut MckayGroup,
) -> MckayStatus {
    guard(|| {
        let name = text(name, "name")?;
        let g = catalog_group(name, cap).map_err(mckay_core::group_input::InputError::from)?;
        write_group(out, g)
    })
}

/// Builds a group from a JSON group document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_group_from_json(
    json: *const c_char,
    cap: usize,
    out: *mut *mut MckayGroup,
) -> MckayStatus {
    guard(|| {
        let g = group_from_document(text(json, "json")?, cap)?;
        write_group(out, g)
    })
}

/// Releases a group. Null is ignored.
///
/// # Safety
/// `g` must come from a `mckay_group_from_*` call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mckay_group_free(g: *mut MckayGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_group_order(g: *const MckayGroup, out: *mut usize) -> MckayStatus {
    guard(|| write(out, group(g)?.order()))
}

/// Matrix size of the group.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_group_dimension(
    g: *const MckayGroup,
    out: *mut usize,
) -> MckayStatus {
    guard(|| write(out, group(g)?.dim()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_group_class_count(
    g: *const MckayGroup,
    out: *mut usize,
) -> MckayStatus {
    guard(|| write(out, group(g)?.class_count()))
}

/// Number of conjugacy classes of the group modulo its scalars.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_group_projective_class_count(
    g: *const MckayGroup,
    out: *mut usize,
) -> MckayStatus {
    guard(|| write(out, group(g)?.projective_class_count()))
}

/// Stringy E-function as JSON `{"polynomial": [{p, q, coeff}], "rendered", "euler"}`.
/// With `cotangent`, the group is first replaced by its action on `V ⊕ V*`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable. Free the result with
/// `mckay_string_free`.
#[no_mangle]
pub unsafe extern "C" fn mckay_stringy_e_json(
    g: *const MckayGroup,
    cotangent: bool,
    out: *mut *mut c_char,
) -> MckayStatus {
    guard(|| {
        let g = group(g)?;
        let lifted;
        let g = if cotangent {
            lifted = g.cotangent_lift();
            &lifted
        } else {
            g
        };
        let e = stringy_e_linear_symplectic(g)?;
        let doc = json!({
            "polynomial": e.to_json_terms(),
            "rendered": e.to_string(),
            "euler": e.euler_number().to_string(),
        });
        write_string(out, doc.to_string())
    })
}

/// Hodge polynomial of a resolution of `T*Pⁿ/G` as JSON, with the class table.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable. Free the result with
/// `mckay_string_free`.
#[no_mangle]
pub unsafe extern "C" fn mckay_hodge_tpn_json(
    g: *const MckayGroup,
    out: *mut *mut c_char,
) -> MckayStatus {
    guard(|| {
        let detail = hodge_tpn_detail(group(g)?)?;
        let classes: Vec<_> = detail
            .classes
            .iter()
            .map(|c| {
                json!({
                    "representative": c.representative,
                    "size": c.size,
                    "multiplicities": c.multiplicities,
                })
            })
            .collect();
        let doc = json!({
            "n": detail.n,
            "polynomial": detail.polynomial.to_json_terms(),
            "rendered": detail.polynomial.to_string(),
            "euler": detail.polynomial.euler_number().to_string(),
            "classes": classes,
        });
        write_string(out, doc.to_string())
    })
}

/// `(n+1)` times the number of projective classes.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_euler_tpn(g: *const MckayGroup, out: *mut i64) -> MckayStatus {
    guard(|| {
        let e = euler_tpn(group(g)?)?;
        let e = i64::try_from(&e)
            .map_err(|_| Failure(MckayStatus::Internal, format!("{e} does not fit in i64")))?;
        write(out, e)
    })
}

/// Whether nontrivial fixed loci have pure codimension 2. The group must
/// preserve the standard symplectic form.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_passes_pure_codim2(
    g: *const MckayGroup,
    out: *mut bool,
) -> MckayStatus {
    guard(|| write(out, passes_pure_codim2(group(g)?)?.passed()))
}

/// Whether the group is generated by pseudo-reflections.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mckay_generated_by_pseudo_reflections(
    g: *const MckayGroup,
    out: *mut bool,
) -> MckayStatus {
    guard(|| write(out, generated_by_pseudo_reflections(group(g)?).generated))
}

/// Poincaré polynomials of `Hilbⁿ(T*Σ)`, `n ≤ terms`, for a genus-`genus`
/// curve, as JSON `{"series": [[c_0, c_1, ...], ...]}` with decimal strings.
///
/// # Safety
/// `out` must be writable. Free the result with `mckay_string_free`.
#[no_mangle]
pub unsafe extern "C" fn mckay_hilb_series_json(
    genus: i64,
    terms: i64,
    out: *mut *mut c_char,
) -> MckayStatus {
    guard(|| {
        let s = goettsche_series(genus, terms)?;
        let series: Vec<Vec<String>> = s
            .coeffs()
            .iter()
            .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect())
            .collect();
        write_string(out, json!({ "series": series }).to_string())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mckay_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn mckay_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
