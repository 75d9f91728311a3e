//! Endpoint vectors from powers of the corridor's 0/1 adjacency matrix.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::corridor::{feasible_endpoints, Corridor, Instance};
use crate::count::Count;

/// Element arithmetic for the matrix power: exact, or reduced mod `m`.
pub trait Arith {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// `acc += a * b`
    fn mul_add(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem);
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Exact;

impl Arith for Exact {
    type Elem = BigUint;
    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn mul_add(&self, acc: &mut BigUint, a: &BigUint, b: &BigUint) {
        if !a.is_zero() && !b.is_zero() {
            *acc += a * b;
        }
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
}

/// Residues modulo a fixed `u64`. For benchmarking only.
#[derive(Clone, Copy, Debug)]
pub struct Modular(pub u64);

impl Arith for Modular {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn mul_add(&self, acc: &mut u64, a: &u64, b: &u64) {
        let m = u128::from(self.0);
        *acc = ((u128::from(*acc) + u128::from(*a) * u128::from(*b)) % m) as u64;
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.dim + c]
    }

    pub fn identity<A: Arith<Elem = T>>(ar: &A, dim: usize) -> Self {
        let mut entries = vec![ar.zero(); dim * dim];
        for d in 0..dim {
            entries[d * dim + d] = ar.one();
        }
        Matrix { dim, entries }
    }

    pub fn mul<A: Arith<Elem = T>>(&self, ar: &A, rhs: &Matrix<T>) -> Matrix<T> {
        let dim = self.dim;
        let mut entries = vec![ar.zero(); dim * dim];
        for r in 0..dim {
            for t in 0..dim {
                let a = self.get(r, t);
                if ar.is_zero(a) {
                    continue;
                }
                for c in 0..dim {
                    ar.mul_add(&mut entries[r * dim + c], a, rhs.get(t, c));
                }
            }
        }
        Matrix { dim, entries }
    }

    /// Row vector times matrix.
    pub fn left_mul<A: Arith<Elem = T>>(&self, ar: &A, row: &[T]) -> Vec<T> {
        let mut out = vec![ar.zero(); self.dim];
        for (t, a) in row.iter().enumerate() {
            if ar.is_zero(a) {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                ar.mul_add(slot, a, self.get(t, c));
            }
        }
        out
    }

    pub fn pow<A: Arith<Elem = T>>(&self, ar: &A, mut e: u64) -> Matrix<T> {
        let mut result = Matrix::identity(ar, self.dim);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(ar, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(ar, &base);
            }
        }
        result
    }
}

/// The corridor step matrix: `m[r][c] = 1` iff `|r - c| = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepMatrix {
    pub corridor: Corridor,
}

impl StepMatrix {
    pub fn new(h: u32) -> Self {
        StepMatrix {
            corridor: Corridor::new(h),
        }
    }

    pub fn dim(&self) -> usize {
        self.corridor.h as usize + 1
    }

    pub fn materialize<A: Arith>(&self, ar: &A) -> Matrix<A::Elem> {
        let dim = self.dim();
        let mut entries = vec![ar.zero(); dim * dim];
        for r in 0..dim {
            if r > 0 {
                entries[r * dim + r - 1] = ar.one();
            }
            if r + 1 < dim {
                entries[r * dim + r + 1] = ar.one();
            }
        }
        Matrix { dim, entries }
    }
}

/// `e_i · M^n` by square-and-multiply on the row vector.
pub fn count_vector_with<A: Arith>(ar: &A, h: u32, i: i64, n: u64) -> Vec<A::Elem> {
    let step = StepMatrix::new(h);
    let dim = step.dim();
    let mut row = vec![ar.zero(); dim];
    if !step.corridor.contains(i) {
        return row;
    }
    row[i as usize] = ar.one();
    let mut base = step.materialize(ar);
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            row = base.left_mul(ar, &row);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(ar, &base);
        }
    }
    row
}

/// Endpoint counts `A_{i→ℓ}(n)` for `ℓ ∈ [0..h]`.
pub fn tm_count_vector(h: u32, i: i64, n: u64) -> Vec<Count> {
    count_vector_with(&Exact, h, i, n)
        .into_iter()
        .map(Count::from)
        .collect()
}

/// Endpoint counts reduced mod `modulus` (> 0).
pub fn tm_count_vector_mod(h: u32, i: i64, n: u64, modulus: u64) -> Vec<u64> {
    assert!(modulus > 0, "modulus must be positive");
    count_vector_with(&Modular(modulus), h, i, n)
}

pub fn tm_count_window(h: u32, i: i64, k: i64, j: i64, n: u32) -> Count {
    let inst = Instance::new(h, n, i, k, j);
    let ends = feasible_endpoints(&inst);
    if ends.is_empty() || !inst.corridor.contains(i) {
        return Count::zero();
    }
    let vector = tm_count_vector(h, i, u64::from(n));
    ends.into_iter().map(|l| &vector[l as usize]).sum()
}
