//! C ABI over the afdweno solver.
//!
//! Every function returns an [`AfdStatus`]. On failure a human readable
//! message is kept per thread and can be fetched with
//! [`afd_last_error_message`]. Simulations are opaque handles created with
//! [`afd_simulation_new`] and released with [`afd_simulation_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString, c_char};
use std::panic::{AssertUnwindSafe, catch_unwind};
use std::ptr;

use afdweno::harness::{RunConfig, Simulation, problem};
use afdweno::scheme::derive_correction_coefficients;
use afdweno::{Error, SchemeOrder};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A state left the admissible set.
    Domain = 3,
    /// A non-finite value was produced.
    Numerical = 4,
    Io = 5,
    BufferTooSmall = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

/// Opaque simulation handle.
pub struct AfdSimulation {
    sim: Simulation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> AfdStatus {
    match err {
        Error::Usage(_) | Error::Config { .. } => AfdStatus::InvalidArgument,
        Error::Domain { .. } => AfdStatus::Domain,
        Error::Numerical { .. } => AfdStatus::Numerical,
        Error::Io(_) | Error::Csv(_) => AfdStatus::Io,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (AfdStatus, String)>) -> AfdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AfdStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AfdStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (AfdStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (AfdStatus, String) {
    (AfdStatus::NullPointer, format!("{what} is null"))
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library from the same thread.
#[unsafe(no_mangle)]
pub extern "C" fn afd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Writes the flux-correction coefficients c2, c4, c6, c8 of `order`
/// (3, 5, 7 or 9) into `out`, which must hold 4 doubles. Unused trailing
/// coefficients are zero.
///
/// # Safety
/// `out` must point to 4 writable doubles.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn afd_correction_coefficients(order: u32, out: *mut f64) -> AfdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let order = SchemeOrder::try_from(order as usize).map_err(lib_err)?;
        let c = derive_correction_coefficients(order).as_f64();
        // SAFETY: caller guarantees 4 writable doubles.
        unsafe { ptr::copy_nonoverlapping(c.as_ptr(), out, 4) };
        Ok(())
    })
}

/// Creates a simulation of a registered problem with its default scheme
/// settings. `order` 0 and `nx` 0 keep the problem defaults; `ny` 0 means
/// square for 2D problems.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn afd_simulation_new(
    name: *const c_char,
    order: u32,
    nx: usize,
    ny: usize,
    out: *mut *mut AfdSimulation,
) -> AfdStatus {
    guard(|| {
        if name.is_null() {
            return Err(null("name"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        // SAFETY: caller guarantees a NUL-terminated string.
        let name = unsafe { CStr::from_ptr(name) }
            .to_str()
            .map_err(|_| (AfdStatus::InvalidArgument, "name is not UTF-8".to_string()))?;
        let spec = problem(name).map_err(lib_err)?;
        let mut cfg = RunConfig::from_problem(&spec);
        if order != 0 {
            cfg.order = SchemeOrder::try_from(order as usize).map_err(lib_err)?;
        }
        if nx != 0 {
            cfg.nx = nx;
            cfg.ny = if !spec.two_d {
                1
            } else if ny != 0 {
                ny
            } else {
                nx
            };
        }
        let sim = Simulation::new(spec, cfg).map_err(lib_err)?;
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(Box::new(AfdSimulation { sim })) };
        Ok(())
    })
}

/// Releases a simulation. Null is ignored.
///
/// # Safety
/// `sim` must come from [`afd_simulation_new`] and not be used afterwards.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn afd_simulation_free(sim: *mut AfdSimulation) {
    if !sim.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { Box::from_raw(sim) });
    }
}

unsafe fn handle<'a>(sim: *mut AfdSimulation) -> Result<&'a mut AfdSimulation, (AfdStatus, String)> {
    // SAFETY: caller passes a live handle or null.
    unsafe { sim.as_mut() }.ok_or_else(|| null("simulation"))
}

/// Takes one time step. `dt` receives the step size, zero once the final
/// time is reached. `dt` may be null.
///
/// # Safety
/// `sim` must be a live handle; `dt` null or writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn afd_simulation_step(sim: *mut AfdSimulation, dt: *mut f64) -> AfdStatus {
    guard(|| {
        let h = unsafe { handle(sim) }?;
        let d = h.sim.step().map_err(lib_err)?;
        if !dt.is_null() {
            // SAFETY: checked non-null.
            unsafe { *dt = d };
        }
        Ok(())
    })
}

/// Steps until the problem's final time.
///
/// # Safety
/// `sim` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn afd_simulation_run(sim: *mut AfdSimulation) -> AfdStatus {
    guard(|| unsafe { handle(sim) }?.sim.run().map_err(lib_err))
}

/// Current time, step count and final time. Any output may be null.
///
/// # Safety
/// `sim` must be a live handle; outputs null or writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn afd_simulation_time(
    sim: *mut AfdSimulation,
    t: *mut f64,
    steps: *mut usize,
    t_end: *mut f64,
) -> AfdStatus {
    guard(|| {
        let h = unsafe { handle(sim) }?;
        // SAFETY: each pointer is checked before writing.
        unsafe {
            if !t.is_null() {
                *t = h.sim.time();
            }
            if !steps.is_null() {
                *steps = h.sim.steps();
            }
            if !t_end.is_null() {
                *t_end = h.sim.config().t_end;
            }
        }
        Ok(())
    })
}

/// Interior zone counts and number of primitive variables per zone.
///
/// # Safety
/// `sim` must be a live handle; outputs null or writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn afd_simulation_shape(
    sim: *mut AfdSimulation,
    nx: *mut usize,
    ny: *mut usize,
    nvar: *mut usize,
) -> AfdStatus {
    guard(|| {
        let h = unsafe { handle(sim) }?;
        let g = h.sim.grid();
        // SAFETY: each pointer is checked before writing.
        unsafe {
            if !nx.is_null() {
                *nx = g.nx;
            }
            if !ny.is_null() {
                *ny = g.ny;
            }
            if !nvar.is_null() {
                *nvar = h.sim.spec().system.nvar();
            }
        }
        Ok(())
    })
}

/// Copies primitive variables of all interior zones into `buf`, zone by zone
/// with x fastest and `nvar` values per zone. `len` is the capacity of `buf`
/// in doubles.
///
/// # Safety
/// `sim` must be a live handle; `buf` must hold `len` writable doubles.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn afd_simulation_primitives(
    sim: *mut AfdSimulation,
    buf: *mut f64,
    len: usize,
) -> AfdStatus {
    guard(|| {
        let h = unsafe { handle(sim) }?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let out = h.sim.output().map_err(lib_err)?;
        let need: usize = out.primitives.iter().map(Vec::len).sum();
        if len < need {
            return Err((AfdStatus::BufferTooSmall, format!("buffer holds {len} doubles, {need} needed")));
        }
        // SAFETY: capacity checked above.
        let dst = unsafe { std::slice::from_raw_parts_mut(buf, need) };
        for (chunk, w) in dst.chunks_mut(out.primitive_names.len()).zip(&out.primitives) {
            chunk.copy_from_slice(w);
        }
        Ok(())
    })
}
