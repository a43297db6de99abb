//! Two bespoke non-Noetherian rings with exact symbolic arithmetic over
//! finitely supported data: the "axes" ring (a reduced local ring whose
//! maximal ideal is a non-minimal strong Krull prime of the ring) and the
//! "bowtie" ring (whose maximal ideal consists of zero-divisors yet is not
//! even a Krull prime of the ring).

pub mod axes;
pub mod bowtie;

use std::fmt;

use num_rational::Ratio;

/// Exact field coefficients shared by the symbolic constructions.
pub trait Coef: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    /// The image of a small integer, for building sample data.
    fn from_int(n: i64) -> Self;
    fn label() -> &'static str;
}

/// The prime field with `P` elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }
}

impl<const P: u64> Coef for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn add(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp((self.0 * o.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        (1..P).map(Fp::<P>).find(|x| self.mul(x).0 == 1 % P)
    }
    fn from_int(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }
    fn label() -> &'static str {
        match P {
            2 => "F2",
            3 => "F3",
            5 => "F5",
            _ => "Fp",
        }
    }
}

impl Coef for Ratio<i64> {
    fn zero() -> Self {
        Ratio::from_integer(0)
    }
    fn one() -> Self {
        Ratio::from_integer(1)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Option<Self> {
        if *self == Ratio::from_integer(0) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }
    fn label() -> &'static str {
        "Q"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_laws_on_small_samples() {
        fn check<F: Coef>() {
            for a in -3..=3i64 {
                let x = F::from_int(a);
                assert_eq!(x.add(&x.neg()), F::zero());
                assert_eq!(x.mul(&F::one()), x);
                if !x.is_zero() {
                    assert_eq!(x.mul(&x.inv().unwrap()), F::one());
                } else {
                    assert!(x.inv().is_none());
                }
            }
        }
        check::<Fp<2>>();
        check::<Fp<3>>();
        check::<Fp<5>>();
        check::<Ratio<i64>>();
    }
}
