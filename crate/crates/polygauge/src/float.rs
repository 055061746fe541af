//! Float intrinsics for builds without `std`.
//!
//! `core` provides no `sin`/`sqrt`/… methods on `f64`; when the `std`
//! feature is off they are routed through `libm`. Call sites import
//! [`FloatExt`] under `cfg(not(feature = "std"))` and use the inherent std
//! methods otherwise, so the shim compiles away entirely on std builds.

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("polygauge needs the `std` feature or the `libm` feature");

#[cfg(not(feature = "std"))]
pub(crate) trait FloatExt {
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn tan(self) -> Self;
    fn asin(self) -> Self;
    fn acos(self) -> Self;
    fn ln(self) -> Self;
}

#[cfg(not(feature = "std"))]
impl FloatExt for f64 {
    #[inline]
    fn sqrt(self) -> f64 {
        libm::sqrt(self)
    }
    #[inline]
    fn sin(self) -> f64 {
        libm::sin(self)
    }
    #[inline]
    fn cos(self) -> f64 {
        libm::cos(self)
    }
    #[inline]
    fn tan(self) -> f64 {
        libm::tan(self)
    }
    #[inline]
    fn asin(self) -> f64 {
        libm::asin(self)
    }
    #[inline]
    fn acos(self) -> f64 {
        libm::acos(self)
    }
    #[inline]
    fn ln(self) -> f64 {
        libm::log(self)
    }
}
