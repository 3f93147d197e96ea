//! Built-in matrices: the eight certified right halves plus the two
//! worked-example bases and outputs. Each entry stores the symmetric
//! right half A of a generator (I | A).

use crate::code::LinearCode;
use crate::gf::{Fe, FieldCtx};
use crate::matrix::Mat;

pub struct BuiltinCode {
    pub name: &'static str,
    pub p: u16,
    pub k: usize,
    pub claimed_distance: usize,
    right_half: &'static [Fe],
}

// [32,16,12] over GF(11)
#[rustfmt::skip]
static A11_32: [Fe; 256] = [6, 7, 7, 1, 2, 8, 5, 9, 9, 8, 1, 6, 4, 7, 10, 6, 7, 9, 7, 8, 0, 8, 4, 8, 6, 10, 2, 6, 9, 7, 8, 10, 7, 7, 6, 0, 8, 2, 4, 9, 1, 6, 8, 7, 6, 9, 0, 4, 1, 8, 0, 7, 0, 7, 10, 2, 1, 9, 9, 3, 3, 2, 8, 0, 2, 0, 8, 0, 10, 10, 8, 10, 3, 0, 10, 8, 0, 8, 10, 0, 8, 8, 2, 7, 10, 7, 10, 2, 9, 7, 7, 0, 6, 1, 0, 3, 5, 4, 4, 10, 8, 10, 10, 7, 8, 5, 2, 5, 4, 8, 3, 9, 9, 8, 9, 2, 10, 2, 7, 0, 3, 2, 8, 10, 7, 8, 4, 6, 9, 6, 1, 1, 3, 9, 8, 3, 0, 1, 5, 10, 7, 7, 8, 10, 8, 10, 6, 9, 0, 7, 5, 2, 1, 9, 9, 1, 1, 9, 4, 4, 1, 2, 8, 9, 10, 7, 2, 8, 5, 9, 3, 7, 7, 2, 9, 4, 6, 6, 7, 3, 8, 0, 5, 10, 10, 1, 7, 7, 2, 6, 8, 2, 4, 9, 6, 3, 0, 6, 4, 7, 7, 1, 7, 2, 5, 7, 7, 6, 7, 7, 9, 2, 8, 1, 8, 8, 7, 9, 2, 6, 7, 4, 1, 5, 10, 8, 0, 8, 10, 0, 3, 4, 8, 4, 9, 8, 7, 1, 7, 2, 6, 10, 4, 0, 0, 3, 9, 6, 10, 4, 4, 2, 6, 5, 2, 9];

// [36,18,13] over GF(11)
#[rustfmt::skip]
static A11_36: [Fe; 324] = [5, 10, 6, 7, 5, 4, 7, 1, 9, 4, 4, 7, 7, 8, 1, 8, 8, 8, 10, 10, 8, 7, 6, 4, 5, 8, 9, 7, 10, 1, 3, 0, 5, 8, 9, 9, 6, 8, 10, 6, 4, 2, 4, 6, 10, 0, 1, 5, 6, 9, 1, 9, 5, 1, 7, 7, 6, 3, 4, 3, 4, 2, 1, 10, 4, 1, 5, 3, 7, 8, 4, 6, 5, 6, 4, 4, 6, 3, 7, 4, 8, 9, 9, 9, 9, 10, 0, 4, 5, 9, 4, 4, 2, 3, 3, 1, 7, 2, 2, 0, 3, 7, 6, 6, 5, 1, 1, 4, 7, 5, 4, 4, 7, 7, 6, 4, 10, 7, 1, 2, 9, 1, 4, 0, 6, 7, 1, 8, 6, 2, 4, 2, 4, 3, 7, 8, 4, 1, 1, 1, 2, 2, 1, 4, 9, 9, 10, 1, 8, 2, 10, 7, 3, 8, 7, 6, 9, 9, 3, 3, 1, 7, 4, 7, 0, 10, 9, 0, 7, 8, 8, 0, 5, 0, 0, 8, 0, 4, 8, 10, 4, 10, 1, 4, 9, 3, 1, 4, 7, 5, 2, 10, 3, 3, 2, 0, 1, 3, 7, 1, 5, 1, 9, 7, 2, 1, 6, 0, 10, 0, 0, 8, 6, 5, 0, 0, 7, 3, 6, 5, 9, 6, 9, 1, 9, 0, 3, 0, 9, 7, 6, 7, 5, 0, 8, 0, 9, 3, 10, 6, 1, 1, 9, 8, 3, 8, 7, 8, 8, 1, 5, 10, 1, 5, 1, 7, 0, 5, 4, 2, 3, 0, 2, 6, 6, 8, 10, 0, 8, 7, 8, 8, 9, 8, 4, 1, 0, 2, 3, 4, 0, 5, 7, 1, 0, 2, 9, 2, 8, 9, 5, 4, 5, 1, 6, 1, 1, 8, 1, 0, 5, 5, 8, 9, 4, 10, 8, 9, 1, 6, 9, 4, 7, 4, 7, 10, 3, 0, 0, 10, 7, 2, 10, 6];

// [40,20,14] over GF(11)
#[rustfmt::skip]
static A11_40: [Fe; 400] = [5, 4, 6, 1, 7, 10, 5, 5, 8, 8, 10, 4, 9, 5, 9, 5, 8, 3, 9, 6, 4, 2, 6, 3, 1, 2, 1, 2, 5, 8, 2, 4, 5, 9, 1, 7, 5, 7, 3, 4, 6, 6, 2, 9, 4, 4, 9, 5, 1, 8, 6, 2, 6, 9, 10, 5, 6, 0, 5, 0, 1, 3, 9, 5, 3, 10, 2, 4, 10, 3, 1, 10, 9, 7, 8, 9, 10, 7, 0, 0, 7, 1, 4, 3, 7, 3, 8, 0, 1, 7, 7, 6, 0, 5, 7, 10, 9, 6, 5, 0, 10, 2, 4, 10, 3, 6, 0, 9, 3, 9, 4, 8, 9, 0, 3, 4, 6, 8, 0, 5, 5, 1, 9, 2, 8, 0, 4, 6, 1, 2, 4, 8, 6, 3, 8, 5, 5, 4, 3, 3, 5, 2, 5, 4, 0, 9, 6, 3, 4, 7, 8, 8, 3, 2, 10, 3, 2, 3, 3, 7, 8, 5, 1, 10, 1, 3, 1, 4, 0, 7, 9, 3, 2, 9, 9, 2, 9, 9, 1, 6, 8, 8, 8, 3, 7, 9, 2, 7, 7, 5, 3, 9, 3, 0, 5, 8, 5, 6, 8, 8, 10, 2, 6, 1, 7, 4, 4, 8, 9, 3, 6, 6, 1, 5, 7, 10, 2, 3, 8, 6, 4, 4, 2, 10, 6, 8, 8, 8, 3, 9, 6, 6, 10, 5, 2, 6, 7, 6, 6, 1, 9, 5, 6, 9, 0, 9, 6, 3, 2, 3, 1, 10, 4, 9, 4, 7, 3, 2, 8, 10, 5, 9, 9, 7, 5, 0, 3, 2, 9, 0, 5, 5, 9, 2, 6, 8, 2, 10, 8, 0, 9, 1, 10, 8, 7, 3, 8, 10, 9, 5, 7, 2, 4, 6, 1, 3, 6, 1, 7, 4, 5, 7, 5, 9, 10, 4, 5, 3, 2, 8, 10, 6, 7, 8, 3, 4, 9, 2, 5, 3, 8, 5, 6, 10, 9, 6, 5, 2, 9, 5, 2, 7, 3, 2, 6, 9, 4, 9, 3, 6, 3, 7, 0, 7, 6, 8, 4, 3, 9, 6, 3, 6, 2, 10, 1, 2, 9, 6, 7, 1, 9, 3, 5, 0, 5, 0, 3, 3, 1, 8, 8, 6, 8, 8, 7, 5, 3, 7, 3, 10, 6, 4, 0, 0, 0, 5, 3, 7, 6, 8, 6, 1, 10, 0, 4, 3, 6, 1, 10, 2];

// [36,18,14] over GF(19)
#[rustfmt::skip]
static A19_36: [Fe; 324] = [16, 14, 4, 15, 10, 15, 17, 7, 4, 16, 16, 14, 3, 7, 5, 2, 5, 12, 14, 13, 18, 11, 15, 17, 11, 5, 5, 11, 16, 16, 12, 4, 17, 0, 16, 4, 4, 18, 18, 12, 18, 12, 2, 6, 12, 18, 14, 1, 10, 16, 10, 6, 13, 6, 15, 11, 12, 7, 1, 8, 1, 3, 1, 12, 11, 5, 5, 7, 7, 2, 10, 8, 10, 15, 18, 1, 7, 9, 14, 14, 7, 12, 13, 16, 16, 2, 16, 9, 16, 4, 15, 17, 12, 8, 9, 2, 7, 15, 5, 12, 2, 9, 2, 10, 14, 18, 12, 9, 17, 11, 2, 1, 14, 7, 11, 13, 16, 1, 16, 17, 4, 11, 4, 11, 9, 18, 7, 5, 6, 3, 14, 15, 13, 9, 0, 16, 3, 3, 8, 7, 10, 14, 4, 7, 4, 5, 12, 1, 7, 5, 16, 0, 12, 17, 1, 7, 4, 0, 9, 0, 17, 18, 16, 11, 18, 12, 12, 12, 1, 16, 17, 3, 1, 17, 12, 12, 16, 12, 9, 11, 16, 16, 14, 11, 13, 2, 16, 3, 1, 1, 15, 17, 4, 12, 10, 0, 7, 4, 14, 16, 1, 5, 16, 9, 17, 3, 7, 17, 17, 8, 7, 6, 18, 1, 11, 18, 3, 12, 10, 5, 16, 2, 4, 8, 4, 12, 4, 7, 14, 0, 9, 9, 6, 15, 7, 4, 16, 7, 2, 10, 11, 7, 0, 12, 12, 6, 0, 18, 5, 13, 13, 4, 5, 17, 10, 7, 16, 14, 4, 10, 9, 16, 10, 18, 9, 5, 13, 7, 0, 7, 2, 0, 6, 2, 9, 18, 11, 14, 0, 12, 0, 1, 9, 13, 7, 12, 17, 3, 5, 16, 13, 10, 16, 12, 9, 4, 17, 9, 7, 11, 6, 13, 0, 17, 2, 17, 12, 4, 6, 8, 4, 9, 18, 7, 18, 11, 4, 18, 15, 4, 7, 3, 17, 10];

// [40,20,15] over GF(19)
#[rustfmt::skip]
static A19_40: [Fe; 400] = [8, 7, 12, 5, 0, 13, 15, 11, 16, 6, 17, 14, 6, 6, 6, 4, 18, 14, 13, 14, 7, 16, 13, 4, 13, 3, 1, 13, 4, 11, 5, 12, 6, 4, 13, 16, 11, 6, 6, 16, 12, 13, 5, 6, 13, 11, 12, 12, 16, 9, 3, 0, 16, 17, 2, 8, 6, 14, 6, 9, 5, 4, 6, 1, 7, 15, 0, 4, 16, 14, 1, 8, 0, 9, 12, 9, 10, 5, 16, 2, 0, 13, 13, 7, 17, 17, 18, 17, 16, 16, 8, 0, 1, 13, 14, 3, 11, 6, 9, 14, 13, 3, 11, 15, 17, 9, 0, 0, 11, 2, 11, 1, 11, 13, 15, 16, 16, 15, 0, 0, 15, 1, 12, 0, 18, 0, 0, 14, 4, 15, 13, 8, 14, 17, 17, 9, 0, 5, 15, 0, 11, 13, 12, 4, 17, 0, 14, 6, 12, 5, 18, 18, 12, 8, 3, 13, 15, 10, 11, 18, 16, 4, 16, 16, 16, 11, 4, 12, 7, 2, 10, 3, 4, 16, 1, 13, 16, 8, 12, 17, 6, 11, 9, 14, 16, 2, 15, 5, 2, 12, 12, 12, 8, 5, 14, 3, 5, 1, 17, 9, 17, 5, 3, 1, 8, 11, 13, 18, 10, 12, 18, 0, 16, 8, 11, 18, 5, 17, 10, 10, 14, 12, 0, 8, 0, 1, 8, 18, 3, 12, 0, 16, 1, 11, 14, 10, 14, 7, 7, 17, 6, 6, 16, 0, 1, 11, 14, 12, 4, 8, 16, 1, 6, 10, 7, 13, 9, 6, 4, 0, 6, 4, 17, 9, 13, 13, 17, 8, 16, 5, 8, 11, 10, 5, 5, 9, 11, 7, 13, 4, 6, 13, 2, 12, 14, 15, 17, 3, 1, 14, 11, 14, 7, 5, 6, 13, 10, 15, 14, 8, 4, 16, 8, 9, 3, 16, 9, 13, 13, 3, 18, 10, 13, 9, 13, 13, 15, 17, 0, 17, 18, 11, 6, 10, 11, 16, 0, 15, 16, 5, 5, 14, 9, 11, 10, 15, 8, 6, 18, 17, 14, 6, 14, 5, 6, 15, 5, 10, 8, 1, 17, 7, 6, 7, 15, 17, 6, 7, 11, 17, 13, 6, 6, 16, 9, 0, 15, 11, 12, 17, 10, 7, 4, 13, 14, 0, 18, 11, 13, 5, 14, 16, 9, 2, 14, 0, 0, 18, 17, 9, 10, 17, 0, 4, 8, 17, 17, 17, 5, 17];

// [32,16,12] over GF(23)
#[rustfmt::skip]
static A23_32: [Fe; 256] = [20, 4, 11, 18, 21, 7, 19, 7, 15, 6, 18, 18, 2, 10, 5, 12, 4, 1, 19, 12, 11, 19, 20, 8, 10, 3, 11, 0, 3, 6, 18, 18, 11, 19, 12, 20, 9, 2, 0, 22, 21, 21, 9, 6, 21, 16, 13, 9, 18, 12, 20, 2, 13, 7, 4, 7, 22, 18, 5, 15, 0, 5, 11, 20, 21, 11, 9, 13, 9, 20, 8, 19, 11, 12, 11, 21, 19, 14, 19, 20, 7, 19, 2, 7, 20, 3, 12, 19, 5, 2, 22, 1, 21, 21, 22, 13, 19, 20, 0, 4, 8, 12, 12, 4, 19, 7, 17, 11, 8, 4, 1, 0, 7, 8, 22, 7, 19, 19, 4, 1, 0, 0, 16, 16, 8, 15, 9, 3, 15, 10, 21, 22, 11, 5, 19, 0, 22, 1, 2, 12, 13, 12, 10, 5, 6, 3, 21, 18, 12, 2, 7, 0, 1, 14, 5, 5, 22, 18, 11, 1, 18, 11, 9, 5, 11, 22, 17, 16, 2, 5, 10, 20, 18, 12, 6, 18, 18, 0, 6, 15, 21, 1, 11, 16, 12, 5, 20, 13, 16, 17, 5, 22, 2, 3, 21, 0, 19, 21, 8, 8, 13, 22, 18, 16, 3, 5, 7, 6, 10, 6, 16, 5, 14, 21, 4, 15, 12, 18, 12, 17, 5, 7, 18, 2, 5, 18, 13, 11, 19, 22, 1, 9, 10, 11, 6, 5, 7, 18, 3, 0, 12, 18, 9, 20, 20, 13, 0, 3, 5, 1, 18, 22, 6, 2, 0, 6];

// [36,18,14] over GF(23)
#[rustfmt::skip]
static A23_36: [Fe; 324] = [14, 8, 18, 22, 3, 17, 6, 3, 2, 7, 14, 2, 22, 12, 6, 8, 12, 19, 8, 18, 5, 14, 21, 10, 12, 16, 15, 0, 18, 16, 0, 20, 3, 1, 2, 6, 18, 5, 3, 13, 8, 0, 20, 1, 13, 12, 22, 19, 14, 9, 14, 15, 22, 18, 22, 14, 13, 9, 7, 1, 1, 17, 10, 9, 22, 14, 1, 11, 11, 15, 19, 12, 3, 21, 8, 7, 20, 9, 0, 2, 10, 19, 7, 5, 16, 0, 16, 3, 15, 19, 17, 10, 0, 1, 9, 22, 1, 13, 4, 13, 5, 10, 14, 0, 14, 17, 2, 8, 6, 12, 20, 1, 0, 1, 3, 13, 20, 13, 1, 19, 2, 6, 12, 12, 2, 0, 3, 16, 1, 17, 2, 13, 13, 21, 13, 16, 17, 4, 6, 6, 5, 12, 9, 1, 2, 15, 13, 10, 10, 4, 20, 13, 22, 2, 6, 5, 14, 14, 13, 16, 13, 8, 7, 0, 12, 9, 19, 13, 13, 16, 2, 17, 9, 21, 17, 4, 2, 7, 20, 7, 14, 18, 22, 22, 7, 5, 1, 17, 6, 9, 20, 15, 4, 22, 13, 0, 17, 14, 2, 16, 19, 14, 5, 10, 19, 4, 5, 21, 15, 13, 2, 15, 20, 20, 3, 18, 22, 0, 14, 1, 16, 14, 2, 6, 14, 17, 4, 2, 0, 2, 9, 0, 11, 1, 12, 20, 9, 11, 0, 0, 6, 6, 14, 4, 22, 15, 2, 1, 7, 7, 5, 15, 6, 3, 14, 11, 16, 14, 12, 5, 13, 2, 13, 20, 9, 7, 13, 1, 9, 20, 8, 1, 15, 15, 3, 17, 12, 12, 16, 7, 0, 20, 0, 7, 1, 1, 4, 9, 12, 2, 22, 19, 15, 2, 2, 9, 13, 20, 17, 3, 11, 5, 9, 4, 18, 15, 19, 6, 18, 12, 19, 8, 0, 1, 8, 7, 14, 18, 1, 15, 20, 9, 15, 15];

// [40,20,15] over GF(23)
#[rustfmt::skip]
static A23_40: [Fe; 400] = [3, 3, 17, 18, 20, 7, 20, 7, 8, 12, 14, 0, 8, 22, 18, 0, 0, 8, 9, 19, 3, 8, 11, 22, 1, 4, 11, 4, 4, 9, 8, 20, 7, 21, 19, 16, 13, 9, 22, 10, 17, 11, 8, 10, 0, 11, 3, 6, 20, 11, 3, 20, 15, 1, 14, 4, 11, 8, 19, 6, 18, 22, 10, 1, 0, 6, 14, 2, 1, 15, 22, 19, 11, 1, 2, 3, 5, 12, 12, 16, 20, 1, 0, 0, 12, 5, 0, 15, 0, 5, 20, 1, 13, 16, 21, 14, 8, 21, 10, 3, 7, 4, 11, 6, 5, 15, 2, 7, 9, 0, 22, 15, 1, 16, 22, 2, 8, 13, 16, 7, 20, 11, 3, 14, 0, 2, 17, 4, 17, 6, 0, 6, 14, 5, 19, 8, 11, 11, 17, 5, 7, 4, 6, 2, 15, 7, 4, 5, 9, 19, 16, 19, 7, 12, 12, 14, 11, 15, 22, 3, 8, 4, 20, 1, 0, 9, 17, 9, 12, 10, 13, 18, 5, 6, 19, 10, 21, 5, 5, 10, 12, 9, 11, 15, 5, 0, 6, 19, 10, 5, 2, 16, 14, 13, 5, 6, 5, 9, 20, 14, 14, 8, 3, 22, 20, 22, 0, 16, 13, 2, 0, 14, 10, 9, 10, 19, 7, 12, 7, 21, 0, 20, 20, 19, 1, 15, 6, 19, 18, 16, 14, 13, 18, 4, 9, 10, 4, 11, 2, 9, 8, 7, 15, 11, 13, 1, 14, 7, 5, 14, 10, 18, 15, 19, 6, 20, 20, 12, 15, 22, 22, 21, 1, 1, 16, 16, 5, 12, 6, 13, 9, 4, 19, 9, 16, 6, 17, 20, 8, 12, 18, 19, 14, 2, 21, 22, 19, 12, 19, 5, 10, 9, 6, 16, 17, 14, 13, 15, 3, 13, 0, 16, 4, 3, 14, 2, 8, 14, 10, 6, 19, 10, 20, 6, 14, 15, 4, 1, 9, 12, 0, 13, 11, 5, 8, 8, 11, 11, 21, 5, 7, 4, 20, 17, 13, 4, 12, 22, 18, 19, 8, 9, 8, 12, 21, 13, 11, 15, 5, 9, 12, 11, 12, 20, 15, 1, 22, 18, 14, 8, 9, 22, 19, 12, 10, 16, 17, 22, 5, 20, 7, 2, 15, 8, 3, 9, 18, 14, 20, 5, 19, 10, 6, 16, 3, 7, 5, 3, 10, 14, 21, 9, 22, 12, 13, 12, 19, 8, 5, 2];

// [8,4,3] over GF(3), base of the first worked example
#[rustfmt::skip]
static C3_8: [Fe; 16] = [1, 1, 0, 0, 1, 2, 0, 0, 0, 0, 2, 1, 0, 0, 1, 1];

// [12,6,6] over GF(3), first worked example output
#[rustfmt::skip]
static G1_3_12: [Fe; 36] = [2, 1, 2, 2, 1, 0, 1, 2, 2, 0, 1, 2, 2, 2, 1, 2, 0, 2, 2, 0, 2, 1, 2, 2, 1, 1, 0, 2, 2, 2, 0, 2, 2, 2, 2, 1];

// [8,4,3] over GF(19), base of the second worked example
#[rustfmt::skip]
static C19_8: [Fe; 16] = [18, 13, 0, 0, 13, 1, 0, 0, 0, 0, 1, 6, 0, 0, 6, 18];

// [12,6,7] over GF(19), second worked example output
#[rustfmt::skip]
static G2_19_12: [Fe; 36] = [9, 12, 1, 6, 9, 6, 12, 13, 13, 1, 9, 9, 1, 13, 7, 17, 13, 14, 6, 1, 17, 14, 7, 6, 9, 9, 13, 7, 12, 11, 6, 9, 14, 6, 11, 2];

/// All built-in codes, in a fixed order.
pub fn builtin_codes() -> Vec<BuiltinCode> {
    vec![
        BuiltinCode { name: "a11_32", p: 11, k: 16, claimed_distance: 12, right_half: &A11_32 },
        BuiltinCode { name: "a11_36", p: 11, k: 18, claimed_distance: 13, right_half: &A11_36 },
        BuiltinCode { name: "a11_40", p: 11, k: 20, claimed_distance: 14, right_half: &A11_40 },
        BuiltinCode { name: "a19_36", p: 19, k: 18, claimed_distance: 14, right_half: &A19_36 },
        BuiltinCode { name: "a19_40", p: 19, k: 20, claimed_distance: 15, right_half: &A19_40 },
        BuiltinCode { name: "a23_32", p: 23, k: 16, claimed_distance: 12, right_half: &A23_32 },
        BuiltinCode { name: "a23_36", p: 23, k: 18, claimed_distance: 14, right_half: &A23_36 },
        BuiltinCode { name: "a23_40", p: 23, k: 20, claimed_distance: 15, right_half: &A23_40 },
        BuiltinCode { name: "c3_8", p: 3, k: 4, claimed_distance: 3, right_half: &C3_8 },
        BuiltinCode { name: "g1_3_12", p: 3, k: 6, claimed_distance: 6, right_half: &G1_3_12 },
        BuiltinCode { name: "c19_8", p: 19, k: 4, claimed_distance: 3, right_half: &C19_8 },
        BuiltinCode { name: "g2_19_12", p: 19, k: 6, claimed_distance: 7, right_half: &G2_19_12 },
    ]
}

impl BuiltinCode {
    pub fn right_half(&self) -> Mat {
        let ctx = FieldCtx::new(self.p).expect("builtin modulus");
        Mat::from_flat(&ctx, self.k, self.k, self.right_half.to_vec())
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::from_right_half(&self.right_half()).expect("builtin full rank")
    }

    pub fn n(&self) -> usize {
        2 * self.k
    }
}

/// Look up a built-in code by name.
pub fn builtin(name: &str) -> Option<BuiltinCode> {
    builtin_codes().into_iter().find(|b| b.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_load_and_are_self_dual() {
        let all = builtin_codes();
        assert_eq!(all.len(), 12);
        for b in &all {
            let code = b.code();
            assert!(code.is_self_dual(), "{}", b.name);
            assert!(code.right_half().is_symmetric(), "{}", b.name);
            assert_eq!(code.n(), b.n());
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(builtin("a11_32").is_some());
        assert!(builtin("nope").is_none());
    }
}
