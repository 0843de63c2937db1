//! Dense exact linear algebra over `F_q`.

use alloc::vec;
use alloc::vec::Vec;

use super::field::{FqElem, Field};

pub type Vector = Vec<FqElem>;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FqElem>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![FqElem(0); rows * cols] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = FqElem(1);
        }
        m
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FqElem {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: FqElem) {
        self.data[i * self.cols + j] = x;
    }
    pub fn row(&self, i: usize) -> &[FqElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }
    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j).0 == u16::from(i == j)))
    }
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }
    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zero(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        m
    }
}

impl Field {
    pub fn mat_vec(&self, m: &Matrix, v: &[FqElem]) -> Vector {
        let mut out = vec![FqElem(0); m.rows];
        for (j, &x) in v.iter().enumerate() {
            if x.0 == 0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = m.data[i * m.cols + j];
                if a.0 != 0 {
                    *o = self.add(*o, self.mul(a, x));
                }
            }
        }
        out
    }

    pub fn mat_mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let mut c = Matrix::zero(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x.0 == 0 {
                    continue;
                }
                let brow = b.row(k);
                let crow = &mut c.data[i * b.cols..(i + 1) * b.cols];
                for (cj, &bj) in crow.iter_mut().zip(brow) {
                    if bj.0 != 0 {
                        *cj = self.add(*cj, self.mul(x, bj));
                    }
                }
            }
        }
        c
    }

    pub fn mat_scale(&self, a: &Matrix, s: FqElem) -> Matrix {
        Matrix { rows: a.rows, cols: a.cols, data: a.data.iter().map(|&x| self.mul(x, s)).collect() }
    }

    /// `a ⊗ b` with the index of `b` running fastest.
    pub fn kron(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zero(a.rows * b.rows, a.cols * b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let x = a.get(i, j);
                if x.0 == 0 {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        m.set(i * b.rows + k, j * b.cols + l, self.mul(x, b.get(k, l)));
                    }
                }
            }
        }
        m
    }

    pub fn vec_add(&self, a: &[FqElem], b: &[FqElem]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }
    pub fn vec_sub(&self, a: &[FqElem], b: &[FqElem]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }
    pub fn vec_scale(&self, a: &[FqElem], s: FqElem) -> Vector {
        a.iter().map(|&x| self.mul(x, s)).collect()
    }
    /// `a += s * b`.
    pub fn axpy(&self, a: &mut [FqElem], s: FqElem, b: &[FqElem]) {
        if s.0 == 0 {
            return;
        }
        for (x, &y) in a.iter_mut().zip(b) {
            if y.0 != 0 {
                *x = self.add(*x, self.mul(s, y));
            }
        }
    }

    /// Basis of `{x : m x = 0}`.
    pub fn kernel(&self, m: &Matrix) -> Vec<Vector> {
        let mut a = m.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            let Some(pr) = (r..a.rows).find(|&i| a.get(i, c).0 != 0) else { continue };
            if pr != r {
                for j in 0..a.cols {
                    a.data.swap(pr * a.cols + j, r * a.cols + j);
                }
            }
            let inv = self.inv(a.get(r, c)).expect("pivot is nonzero");
            for j in 0..a.cols {
                let x = a.get(r, j);
                a.set(r, j, self.mul(x, inv));
            }
            let prow: Vector = a.row(r).to_vec();
            for i in 0..a.rows {
                if i != r {
                    let s = a.get(i, c);
                    if s.0 != 0 {
                        let ns = self.neg(s);
                        self.axpy(&mut a.data[i * a.cols..(i + 1) * a.cols], ns, &prow);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == a.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![FqElem(0); a.cols];
                x[fc] = FqElem(1);
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = self.neg(a.get(row, fc));
                }
                x
            })
            .collect()
    }

    pub fn rank(&self, m: &Matrix) -> usize {
        m.cols - self.kernel(m).len()
    }
}

/// A subspace of `F_q^n` in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub n: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        fn sorted(s: &Subspace) -> Vec<(usize, &Vector)> {
            let mut v: Vec<(usize, &Vector)> = s.pivots.iter().copied().zip(&s.rows).collect();
            v.sort();
            v
        }
        self.n == other.n && sorted(self) == sorted(other)
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { n, rows: Vec::new(), pivots: Vec::new() }
    }
    pub fn whole(n: usize) -> Self {
        let mut s = Subspace::zero(n);
        for i in 0..n {
            let mut v = vec![FqElem(0); n];
            v[i] = FqElem(1);
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }
    pub fn spanned_by(field: &Field, n: usize, vs: impl IntoIterator<Item = Vector>) -> Self {
        let mut s = Subspace::zero(n);
        for v in vs {
            s.insert(field, v);
        }
        s
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtract the components along the pivots.
    pub fn reduce(&self, field: &Field, mut v: Vector) -> Vector {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let s = v[pc];
            if s.0 != 0 {
                field.axpy(&mut v, field.neg(s), row);
            }
        }
        v
    }

    pub fn contains(&self, field: &Field, v: &[FqElem]) -> bool {
        self.reduce(field, v.to_vec()).iter().all(|x| x.0 == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, field: &Field, v: Vector) -> bool {
        let mut v = self.reduce(field, v);
        let Some(pc) = v.iter().position(|x| x.0 != 0) else { return false };
        let inv = field.inv(v[pc]).expect("nonzero");
        v = field.vec_scale(&v, inv);
        for row in self.rows.iter_mut() {
            let s = row[pc];
            if s.0 != 0 {
                field.axpy(row, field.neg(s), &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    /// Coordinates of `v` in the stored basis; `None` when `v` is outside.
    pub fn coords(&self, field: &Field, v: &[FqElem]) -> Option<Vector> {
        let c: Vector = self.pivots.iter().map(|&pc| v[pc]).collect();
        let mut r = v.to_vec();
        for (row, &x) in self.rows.iter().zip(&c) {
            field.axpy(&mut r, field.neg(x), row);
        }
        r.iter().all(|x| x.0 == 0).then_some(c)
    }

    pub fn sum(&self, field: &Field, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(field, v.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, field: &Field, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(field, v))
    }

    pub fn intersect(&self, field: &Field, other: &Subspace) -> Subspace {
        // x = sum a_i u_i = sum b_j w_j
        let (k, l) = (self.dim(), other.dim());
        let mut m = Matrix::zero(self.n, k + l);
        for (i, u) in self.rows.iter().enumerate() {
            for (r, &x) in u.iter().enumerate() {
                m.set(r, i, x);
            }
        }
        for (j, w) in other.rows.iter().enumerate() {
            for (r, &x) in w.iter().enumerate() {
                m.set(r, k + j, field.neg(x));
            }
        }
        let vs = field.kernel(&m).into_iter().map(|sol| {
            let mut x = vec![FqElem(0); self.n];
            for (i, u) in self.rows.iter().enumerate() {
                field.axpy(&mut x, sol[i], u);
            }
            x
        });
        Subspace::spanned_by(field, self.n, vs)
    }
}

/// Closure of `start` under the matrices `gens`.
pub fn spin(field: &Field, gens: &[Matrix], start: impl IntoIterator<Item = Vector>, n: usize) -> Subspace {
    let mut space = Subspace::zero(n);
    let mut queue: Vec<Vector> = Vec::new();
    for v in start {
        if space.insert(field, v.clone()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = field.mat_vec(g, &v);
            if space.insert(field, w.clone()) {
                queue.push(w);
            }
        }
    }
    space
}

/// Closure of a subspace under `gens`, starting from an existing subspace.
pub fn spin_from(field: &Field, gens: &[Matrix], start: &Subspace) -> Subspace {
    spin(field, gens, start.basis().iter().cloned(), start.n)
}
