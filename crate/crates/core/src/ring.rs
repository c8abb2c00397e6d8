//! Exact scalar types and the ring contract shared by the matrix recursions.
//!
//! Sequence values live in [`Integer`] (an unbounded signed integer) and the
//! complex-entry matrix families live in [`Gaussian`], the Gaussian integers
//! `a + b·i` with unbounded parts. Both satisfy [`Ring`], which is all the
//! determinant and permanent recursions ask of their entries.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};

/// Exact signed integer of unbounded magnitude.
pub type Integer = BigInt;

/// Exact Gaussian integer `re + im·i`.
pub type Gaussian = Complex<BigInt>;

/// Commutative ring with identity: zero, one, addition, negation and
/// multiplication. No division.
///
/// Blanket-implemented, so `BigInt`, `Complex<BigInt>`, the primitive
/// integers and floats all qualify.
pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// `self` if `negate` is false, `-self` otherwise.
    fn signed(self, negate: bool) -> Self {
        if negate {
            -self
        } else {
            self
        }
    }
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// `i^e` for the imaginary unit, cycling `1, i, -1, -i`.
pub fn imag_unit_power(e: u64) -> Gaussian {
    match e % 4 {
        0 => Gaussian::new(BigInt::from(1), BigInt::zero()),
        1 => Gaussian::new(BigInt::zero(), BigInt::from(1)),
        2 => Gaussian::new(BigInt::from(-1), BigInt::zero()),
        _ => Gaussian::new(BigInt::zero(), BigInt::from(-1)),
    }
}

/// `i^e` for any integer exponent; `i^-1 = -i`.
pub fn imag_unit_power_signed(e: i64) -> Gaussian {
    imag_unit_power(e.rem_euclid(4) as u64)
}

/// Schoolbook product `(a+bi)(c+di) = (ac-bd) + (ad+bc)i`.
pub fn gaussian_mul(x: &Gaussian, y: &Gaussian) -> Gaussian {
    Gaussian::new(
        &x.re * &y.re - &x.im * &y.im,
        &x.re * &y.im + &x.im * &y.re,
    )
}

/// Real embedding `n ↦ n + 0i`.
pub fn gaussian_from_integer(n: Integer) -> Gaussian {
    Gaussian::new(n, BigInt::zero())
}

/// Real part of `z` if its imaginary part is exactly zero.
pub fn real_part(z: &Gaussian) -> Option<Integer> {
    z.im.is_zero().then(|| z.re.clone())
}

/// Compact text form: `3`, `-i`, `2+i`, `1-4i`.
pub fn format_gaussian(z: &Gaussian) -> String {
    let imag = |b: &BigInt| -> String {
        if b.is_one() {
            "i".to_string()
        } else if *b == BigInt::from(-1) {
            "-i".to_string()
        } else {
            format!("{b}i")
        }
    };
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => imag(&z.im),
        (false, false) => {
            let im = imag(&z.im);
            if im.starts_with('-') {
                format!("{}{}", z.re, im)
            } else {
                format!("{}+{}", z.re, im)
            }
        }
    }
}
