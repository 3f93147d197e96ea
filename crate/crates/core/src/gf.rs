//! Arithmetic in GF(p) for odd primes p, 3 <= p < 2^16.

use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// A field element, stored as a canonical residue in `0..p-1`.
pub type Fe = u16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("modulus {0} is not an odd prime in 3..2^16")]
    BadModulus(u32),
    #[error("zero has no inverse")]
    ZeroInverse,
}

/// Inverses are tabulated for moduli below this bound; larger moduli fall
/// back to exponentiation.
const INV_TABLE_LIMIT: u16 = 1 << 12;
/// Square roots by exhaustion below this bound, Tonelli-Shanks above.
const SQRT_EXHAUST_LIMIT: u16 = 1 << 10;

struct CtxInner {
    p: u16,
    inv_table: Vec<u16>,
    qc_table: Vec<i8>,
}

/// A prime modulus with precomputed inversion and quadratic-character tables.
///
/// Cloning is cheap; the tables are shared. All operations are pure, so a
/// context can be used freely from concurrent workers.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<CtxInner>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx(p={})", self.p())
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p()
    }
}
impl Eq for FieldCtx {}

fn is_prime(n: u16) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n as u32 {
        if n as u32 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    pub fn new(p: u16) -> Result<Self, GfError> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(GfError::BadModulus(p as u32));
        }
        let inv_table = if p < INV_TABLE_LIMIT {
            let mut t = vec![0u16; p as usize];
            for a in 1..p {
                t[a as usize] = pow_mod(a, p - 2, p);
            }
            t
        } else {
            Vec::new()
        };
        let qc_table = if p < INV_TABLE_LIMIT {
            let mut t = vec![-1i8; p as usize];
            t[0] = 0;
            for a in 1..p {
                let sq = ((a as u64 * a as u64) % p as u64) as usize;
                t[sq] = 1;
            }
            t
        } else {
            Vec::new()
        };
        Ok(FieldCtx {
            inner: Arc::new(CtxInner { p, inv_table, qc_table }),
        })
    }

    #[inline]
    pub fn p(&self) -> u16 {
        self.inner.p
    }

    /// Reduce an arbitrary integer to its canonical residue.
    #[inline]
    pub fn reduce_i64(&self, v: i64) -> Fe {
        let p = self.p() as i64;
        (((v % p) + p) % p) as Fe
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let s = a as u32 + b as u32;
        let p = self.p() as u32;
        if s >= p { (s - p) as Fe } else { s as Fe }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        if a >= b { a - b } else { a + self.p() - b }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if a == 0 { 0 } else { self.p() - a }
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        ((a as u64 * b as u64) % self.p() as u64) as Fe
    }

    pub fn pow(&self, a: Fe, e: u32) -> Fe {
        let p = self.p() as u64;
        let mut base = a as u64 % p;
        let mut e = e;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as Fe
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, GfError> {
        if a == 0 {
            return Err(GfError::ZeroInverse);
        }
        if !self.inner.inv_table.is_empty() {
            Ok(self.inner.inv_table[a as usize])
        } else {
            Ok(self.pow(a, self.p() as u32 - 2))
        }
    }

    /// Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
    pub fn legendre(&self, a: Fe) -> i8 {
        if a == 0 {
            return 0;
        }
        if !self.inner.qc_table.is_empty() {
            return self.inner.qc_table[a as usize];
        }
        if self.pow(a, (self.p() as u32 - 1) / 2) == 1 { 1 } else { -1 }
    }

    /// Square roots of `a`. Returns `[r, p-r]` with `r <= p-r` for nonzero
    /// squares, `[0]` for zero, and an empty vector for non-residues.
    pub fn sqrt(&self, a: Fe) -> Vec<Fe> {
        if a == 0 {
            return vec![0];
        }
        if self.legendre(a) != 1 {
            return Vec::new();
        }
        let r = if self.p() < SQRT_EXHAUST_LIMIT {
            (1..self.p()).find(|&r| self.mul(r, r) == a).unwrap()
        } else {
            self.tonelli_shanks(a)
        };
        let other = self.p() - r;
        if r <= other { vec![r, other] } else { vec![other, r] }
    }

    fn tonelli_shanks(&self, a: Fe) -> Fe {
        let p = self.p() as u32;
        if p % 4 == 3 {
            return self.pow(a, (p + 1) / 4);
        }
        // p = 1 (mod 4): write p-1 = q * 2^s with q odd
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        // smallest non-residue as the group generator seed; deterministic
        let z = (2..self.p()).find(|&z| self.legendre(z) == -1).unwrap();
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        r
    }
}

fn pow_mod(a: u16, e: u16, p: u16) -> u16 {
    let p = p as u64;
    let mut base = a as u64 % p;
    let mut e = e as u32;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u16
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u16) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        for p in [0u16, 1, 2, 4, 9, 15, 1 << 15] {
            assert!(FieldCtx::new(p).is_err(), "p={p}");
        }
        for p in [3u16, 5, 7, 11, 19, 23, 65521] {
            assert!(FieldCtx::new(p).is_ok(), "p={p}");
        }
    }

    #[test]
    fn inv_examples() {
        assert_eq!(ctx(11).inv(2).unwrap(), 6);
        assert_eq!(ctx(19).inv(1).unwrap(), 1);
        assert_eq!(ctx(3).inv(0), Err(GfError::ZeroInverse));
    }

    #[test]
    fn inv_table_matches_definition() {
        for p in [3u16, 5, 11, 23, 101] {
            let f = ctx(p);
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.inv(f.inv(a).unwrap()).unwrap(), a);
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(ctx(11).legendre(0), 0);
        assert_eq!(ctx(23).legendre(1), 1);
        // squares mod 11 are {1,3,4,5,9}
        assert_eq!(ctx(11).legendre(2), -1);
    }

    #[test]
    fn legendre_multiplicative() {
        for p in [7u16, 11, 19, 23] {
            let f = ctx(p);
            for a in 1..p {
                for b in 1..p {
                    assert_eq!(
                        f.legendre(f.mul(a, b)) as i16,
                        f.legendre(a) as i16 * f.legendre(b) as i16
                    );
                }
            }
        }
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(ctx(11).sqrt(5), vec![4, 7]);
        assert_eq!(ctx(19).sqrt(0), vec![0]);
        assert!(ctx(3).sqrt(2).is_empty());
    }

    #[test]
    fn sqrt_roots_square_back() {
        for p in [3u16, 7, 11, 19, 23] {
            let f = ctx(p);
            for a in 1..p {
                let roots = f.sqrt(a);
                if f.legendre(a) == 1 {
                    assert_eq!(roots.len(), 2);
                    for r in roots {
                        assert_eq!(f.mul(r, r), a);
                    }
                } else {
                    assert!(roots.is_empty());
                }
            }
        }
    }

    #[test]
    fn square_count_is_half() {
        for p in [3u16, 5, 7, 11, 13, 17, 19, 23] {
            let f = ctx(p);
            let squares = (1..p).filter(|&a| f.legendre(a) == 1).count();
            assert_eq!(squares as u16, (p - 1) / 2);
        }
    }

    #[test]
    fn tonelli_shanks_large_prime() {
        // above the exhaustion limit, both branches of p mod 4
        for p in [7919u16, 7537] {
            let f = ctx(p);
            for a in [2u16, 100, 4242, 7000] {
                let roots = f.sqrt(a);
                for r in roots {
                    assert_eq!(f.mul(r, r), a);
                }
            }
        }
    }
}
