//! Reflection groups: `S_n` on `C^n`, `S_n` on the sum-zero hyperplane, and
//! dihedral groups `I_2(m)` in the basis `z, zbar`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::polyring::Poly;
use crate::scalars::{BaseField, Cyclotomic, Rational, Ring, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// `S_n` permuting the coordinates of `C^n`.
    Symmetric(usize),
    /// `S_n` on the sum-zero hyperplane in coordinates `t_i = x_i - x_n`.
    SymmetricReduced(usize),
    Dihedral(u32),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Symmetric(n) => write!(f, "Sn:{n}"),
            GroupKind::SymmetricReduced(n) => write!(f, "Sn0:{n}"),
            GroupKind::Dihedral(m) => write!(f, "I2:{m}"),
        }
    }
}

impl std::str::FromStr for GroupKind {
    type Err = Error;

    /// Parses `Sn:4`, `Sn0:4` or `I2:5`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group spec `{s}` lacks `:`")))?;
        let n: u32 = arg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad group size `{arg}`")))?;
        match kind.trim() {
            "Sn" if n >= 2 => Ok(GroupKind::Symmetric(n as usize)),
            "Sn0" if n >= 2 => Ok(GroupKind::SymmetricReduced(n as usize)),
            "I2" if n >= 3 => Ok(GroupKind::Dihedral(n)),
            "Sn" | "Sn0" | "I2" => Err(Error::InvalidArgument(format!("group size {n} too small"))),
            other => Err(Error::Parse(format!("unknown group kind `{other}`"))),
        }
    }
}

/// A reflection with its matrix (columns are images of basis vectors), a root
/// spanning its `-1` eigenspace, and the index of its conjugacy class.
#[derive(Clone, Debug)]
pub struct Reflection<K> {
    pub matrix: Matrix<K>,
    pub root: Vec<K>,
    pub class: usize,
    /// `x_j -> scale * x_target` when the matrix is monomial.
    pub monomial: Option<Vec<(usize, K)>>,
    /// The swapped coordinates when the reflection is a coordinate transposition.
    pub transposition: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct ReflectionGroup<K> {
    pub kind: GroupKind,
    pub dim: usize,
    pub reflections: Vec<Reflection<K>>,
    pub classes: Vec<Vec<usize>>,
    pub degrees: Vec<u32>,
    /// Invariant scalar product on `V` in the coordinate basis.
    pub form: Matrix<K>,
}

fn monomial_pattern<K: BaseField>(m: &Matrix<K>) -> Option<Vec<(usize, K)>> {
    (0..m.cols())
        .map(|j| {
            let nz: Vec<usize> = (0..m.rows()).filter(|&i| !m.get(i, j).is_zero()).collect();
            match nz.as_slice() {
                [i] => Some((*i, m.get(*i, j).clone())),
                _ => None,
            }
        })
        .collect()
}

impl<K: BaseField> ReflectionGroup<K> {
    pub fn rank(&self) -> usize {
        self.dim
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn var_names(&self) -> Vec<String> {
        match self.kind {
            GroupKind::Symmetric(n) => (1..=n).map(|i| format!("x{i}")).collect(),
            GroupKind::SymmetricReduced(n) => (1..n).map(|i| format!("t{i}")).collect(),
            GroupKind::Dihedral(_) => vec!["z".into(), "zb".into()],
        }
    }

    /// Linear substitution of the coordinates by a matrix.
    pub fn act_matrix<S: Scalar<Base = K>>(&self, w: &Matrix<K>, f: &Poly<S>) -> Result<Poly<S>> {
        if f.arity() != self.dim || w.cols() != self.dim {
            return Err(Error::ArityMismatch { expected: self.dim, found: f.arity() });
        }
        if let Some(pat) = monomial_pattern(w) {
            let t: Vec<(usize, S)> = pat.into_iter().map(|(i, k)| (i, S::from_base(&k))).collect();
            return Ok(f.monomial_substitute(&t));
        }
        let images: Vec<Poly<S>> = (0..self.dim)
            .map(|j| Poly::linear(&w.column(j).iter().map(S::from_base).collect::<Vec<_>>()))
            .collect();
        f.substitute(&images)
    }

    /// Action of the `i`-th reflection.
    pub fn act<S: Scalar<Base = K>>(&self, i: usize, f: &Poly<S>) -> Result<Poly<S>> {
        let r = &self.reflections[i];
        if f.arity() != self.dim {
            return Err(Error::ArityMismatch { expected: self.dim, found: f.arity() });
        }
        if let Some((a, b)) = r.transposition {
            let mut perm: Vec<usize> = (0..self.dim).collect();
            perm.swap(a, b);
            return Ok(f.permute(&perm));
        }
        if let Some(pat) = &r.monomial {
            let t: Vec<(usize, S)> = pat.iter().map(|(i, k)| (*i, S::from_base(k))).collect();
            return Ok(f.monomial_substitute(&t));
        }
        self.act_matrix(&r.matrix, f)
    }

    /// Root of reflection `i` as a linear polynomial.
    pub fn root_poly<S: Scalar<Base = K>>(&self, i: usize) -> Poly<S> {
        Poly::linear(&self.reflections[i].root.iter().map(S::from_base).collect::<Vec<_>>())
    }

    pub fn is_invariant<S: Scalar<Base = K>>(&self, f: &Poly<S>) -> Result<bool> {
        for i in 0..self.reflections.len() {
            if self.act(i, f)? != *f {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The quadratic invariant `sum (B^{-1})_{ij} x_i x_j`.
    pub fn quadratic_invariant<S: Scalar<Base = K>>(&self) -> Poly<S> {
        let inv = inverse(&self.form);
        let mut out = Poly::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let k = inv.get(i, j);
                if !k.is_zero() {
                    let t = &Poly::var(i, self.dim) * &Poly::var(j, self.dim);
                    out = &out + &t.scale(&S::from_base(k));
                }
            }
        }
        out
    }

    /// Sanity checks on the model: involutions, roots, form invariance.
    pub fn check(&self) -> Result<()> {
        let id = Matrix::<K>::identity(self.dim);
        for (i, r) in self.reflections.iter().enumerate() {
            if r.matrix.mul(&r.matrix) != id {
                return Err(Error::Internal(format!("reflection {i} is not an involution")));
            }
            let img = r.matrix.mul_vec(&r.root);
            if img.iter().zip(&r.root).any(|(a, b)| *a != b.neg()) {
                return Err(Error::Internal(format!("root {i} is not a -1 eigenvector")));
            }
            if r.matrix.transpose().mul(&self.form).mul(&r.matrix) != self.form {
                return Err(Error::Internal(format!("reflection {i} does not preserve the form")));
            }
        }
        Ok(())
    }
}

/// Inverse of a square matrix.
pub fn inverse<K: BaseField>(m: &Matrix<K>) -> Matrix<K> {
    let n = m.rows();
    let cols: Vec<Vec<K>> = (0..n)
        .map(|j| {
            let e: Vec<K> = (0..n).map(|i| if i == j { K::one() } else { K::zero() }).collect();
            m.solve(&e).expect("invertible form").x
        })
        .collect();
    Matrix::from_fn(n, n, |i, j| cols[j][i].clone())
}

fn perm_matrix(n: usize, a: usize, b: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |i, j| {
        let img = if j == a {
            b
        } else if j == b {
            a
        } else {
            j
        };
        if i == img {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `S_n` acting on `C^n` by permuting coordinates.
pub fn build_symmetric(n: usize) -> Result<ReflectionGroup<Rational>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("S_n needs n >= 2, got {n}")));
    }
    let mut reflections = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut root = vec![Rational::zero(); n];
            root[i] = Rational::one();
            root[j] = Rational::from(-1);
            let matrix = perm_matrix(n, i, j);
            reflections.push(Reflection {
                monomial: monomial_pattern(&matrix),
                matrix,
                root,
                class: 0,
                transposition: Some((i, j)),
            });
        }
    }
    let count = reflections.len();
    Ok(ReflectionGroup {
        kind: GroupKind::Symmetric(n),
        dim: n,
        reflections,
        classes: vec![(0..count).collect()],
        degrees: (1..=n as u32).collect(),
        form: Matrix::identity(n),
    })
}

/// `S_n` on the sum-zero hyperplane, coordinates `t_i = x_i - x_n` (`i < n`).
pub fn build_symmetric_reduced(n: usize) -> Result<ReflectionGroup<Rational>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("S_n needs n >= 2, got {n}")));
    }
    let d = n - 1;
    // x_a - x_b in t coordinates, with t_{n-1} = 0
    let diff = |a: usize, b: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); d];
        if a < d {
            v[a] = v[a].add(&Rational::one());
        }
        if b < d {
            v[b] = v[b].sub(&Rational::one());
        }
        v
    };
    let mut reflections = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let sigma = |k: usize| if k == i { j } else if k == j { i } else { k };
            let cols: Vec<Vec<Rational>> = (0..d).map(|k| diff(sigma(k), sigma(n - 1))).collect();
            let matrix = Matrix::from_fn(d, d, |r, c| cols[c][r].clone());
            let transposition = (j < d).then_some((i, j));
            reflections.push(Reflection {
                monomial: monomial_pattern(&matrix),
                matrix,
                root: diff(i, j),
                class: 0,
                transposition,
            });
        }
    }
    let count = reflections.len();
    Ok(ReflectionGroup {
        kind: GroupKind::SymmetricReduced(n),
        dim: d,
        reflections,
        classes: vec![(0..count).collect()],
        degrees: (2..=n as u32).collect(),
        form: Matrix::from_fn(d, d, |i, j| Rational::from(if i == j { 2 } else { 1 })),
    })
}

/// The reflection `s_j`: `z -> -zeta^j zbar` for even `m`, `z -> zeta^j zbar` for odd `m`.
fn dihedral_generator(m: u32, j: i64) -> Matrix<Cyclotomic> {
    // the sign only keeps z^m + zb^m invariant for even m
    let z = |k: i64| {
        let w = Cyclotomic::zeta_pow(m, k);
        if m.is_multiple_of(2) {
            w.neg()
        } else {
            w
        }
    };
    Matrix::from_rows(vec![
        vec![Cyclotomic::zero(), z(-j)],
        vec![z(j), Cyclotomic::zero()],
    ])
}

/// Index `j` of a reflection matrix of the form of [`dihedral_generator`].
fn dihedral_index(m: u32, w: &Matrix<Cyclotomic>) -> Option<i64> {
    (0..m as i64).find(|&j| *w == dihedral_generator(m, j))
}

/// `I_2(m)` on `span{z, zbar}` over `Q(zeta_m)`.
///
/// Reflections are listed as `s_0, ..., s_{m-1}`. For even `m` class 0 holds
/// the odd `s_j` and class 1 the even ones.
pub fn build_dihedral(m: u32) -> Result<ReflectionGroup<Cyclotomic>> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!("I_2(m) needs m >= 3, got {m}")));
    }
    let gens = [dihedral_generator(m, 0), dihedral_generator(m, 1)];
    let mut elements = vec![Matrix::<Cyclotomic>::identity(2)];
    let mut frontier = elements.clone();
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let p = g.mul(&w);
            if !elements.contains(&p) {
                elements.push(p.clone());
                frontier.push(p);
            }
        }
    }
    if elements.len() != 2 * m as usize {
        return Err(Error::Internal(format!("generated {} elements, expected {}", elements.len(), 2 * m)));
    }
    let mut refl: Vec<(i64, Matrix<Cyclotomic>)> = elements
        .into_iter()
        .filter(|w| w.det() == Cyclotomic::from_i64(-1))
        .map(|w| {
            let j = dihedral_index(m, &w).ok_or_else(|| Error::Internal("unexpected reflection".into()))?;
            Ok((j, w))
        })
        .collect::<Result<_>>()?;
    refl.sort_by_key(|(j, _)| *j);

    // conjugacy classes by closure under conjugation with the generators
    let mut class_of = vec![usize::MAX; refl.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in [1usize, 0] {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class_of[start] = id;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for g in &gens {
                let c = g.mul(&refl[i].1).mul(g);
                let j = dihedral_index(m, &c).expect("conjugate of a reflection") as usize;
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort();
        classes.push(members);
    }

    let reflections = refl
        .into_iter()
        .enumerate()
        .map(|(i, (_, matrix))| {
            let shifted = matrix.add(&Matrix::identity(2));
            let mut kernel = shifted.kernel_basis();
            if kernel.len() != 1 {
                return Err(Error::Internal("reflection without a line of roots".into()));
            }
            Ok(Reflection {
                monomial: monomial_pattern(&matrix),
                matrix,
                root: kernel.remove(0),
                class: class_of[i],
                transposition: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let two = Cyclotomic::from_i64(2);
    let group = ReflectionGroup {
        kind: GroupKind::Dihedral(m),
        dim: 2,
        reflections,
        classes,
        degrees: vec![2, m],
        form: Matrix::from_rows(vec![vec![Cyclotomic::zero(), two.clone()], vec![two, Cyclotomic::zero()]]),
    };
    group.check()?;
    Ok(group)
}

/// Sum of `w(f)` over a transversal of `S_n / (S_k x S_{n-k})`, in the
/// coordinates of `C^n`.
pub fn coset_orbit_sum<S: Scalar>(n: usize, k: usize, f: &Poly<S>) -> Result<Poly<S>> {
    if k > n || f.arity() != n {
        return Err(Error::InvalidArgument(format!("bad coset data n={n}, k={k}")));
    }
    for a in 0..n.saturating_sub(1) {
        if a + 1 == k {
            continue;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(a, a + 1);
        if f.permute(&perm) != *f {
            return Err(Error::NotInvariant(format!("not stable under swapping x{} and x{}", a + 1, a + 2)));
        }
    }
    let mut out = Poly::zero(n);
    for subset in k_subsets(n, k) {
        let mut perm = Vec::with_capacity(n);
        perm.extend(subset.iter().copied());
        perm.extend((0..n).filter(|i| !subset.contains(i)));
        out = &out + &f.permute(&perm);
    }
    Ok(out)
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFun;

    type SQ = RatFun<Rational>;
    type SC = RatFun<Cyclotomic>;

    #[test]
    fn symmetric_counts() {
        let g = build_symmetric(2).unwrap();
        assert_eq!(g.reflections.len(), 1);
        assert_eq!(g.reflections[0].root, vec![Rational::one(), Rational::from(-1)]);
        let g4 = build_symmetric(4).unwrap();
        assert_eq!(g4.reflections.len(), 6);
        assert_eq!(g4.degrees, vec![1, 2, 3, 4]);
        let g3 = build_symmetric(3).unwrap();
        assert_eq!(g3.classes, vec![vec![0, 1, 2]]);
        g4.check().unwrap();
    }

    #[test]
    fn reduced_model_is_consistent() {
        for n in 2..=5 {
            let g = build_symmetric_reduced(n).unwrap();
            g.check().unwrap();
            assert_eq!(g.reflections.len(), n * (n - 1) / 2);
            let e2: Poly<SQ> = g.quadratic_invariant();
            assert!(g.is_invariant(&e2).unwrap());
        }
    }

    #[test]
    fn dihedral_counts_and_classes() {
        let g3 = build_dihedral(3).unwrap();
        assert_eq!(g3.reflections.len(), 3);
        assert_eq!(g3.num_classes(), 1);
        let g4 = build_dihedral(4).unwrap();
        assert_eq!(g4.classes, vec![vec![1, 3], vec![0, 2]]);
        assert_eq!(build_dihedral(6).unwrap().degrees, vec![2, 6]);
    }

    #[test]
    fn dihedral_action() {
        let g = build_dihedral(5).unwrap();
        let z: Poly<SC> = Poly::var(0, 2);
        let zb: Poly<SC> = Poly::var(1, 2);
        assert_eq!(g.act(0, &z).unwrap(), zb);
        let e2 = &z * &zb;
        for i in 0..5 {
            assert_eq!(g.act(i, &e2).unwrap(), e2);
        }
        assert_eq!(g.quadratic_invariant::<SC>(), e2);
        assert_eq!(build_dihedral(4).unwrap().act(0, &z).unwrap(), -&Poly::<SC>::var(1, 2));
    }

    #[test]
    fn top_degree_generator_is_invariant() {
        for m in 3..=8u32 {
            let g = build_dihedral(m).unwrap();
            let em = &Poly::<SC>::var(0, 2).pow(m) + &Poly::var(1, 2).pow(m);
            assert!(g.is_invariant(&em).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn symmetric_action_and_cosets() {
        let g = build_symmetric(2).unwrap();
        let x1: Poly<SQ> = Poly::var(0, 2);
        assert_eq!(g.act(0, &x1).unwrap(), Poly::var(1, 2));
        let sum = coset_orbit_sum(2, 1, &x1).unwrap();
        assert_eq!(sum, &x1 + &Poly::var(1, 2));
        let n = 4;
        let prod = (0..2).fold(Poly::<SQ>::one(n), |acc, i| &acc * &Poly::var(i, n));
        let e2 = coset_orbit_sum(n, 2, &prod).unwrap();
        assert_eq!(e2.num_terms(), 6);
        assert_eq!(coset_orbit_sum(n, n, &prod.permute(&[0, 1, 2, 3])).unwrap_err(), Error::NotInvariant("not stable under swapping x2 and x3".into()));
        assert!(matches!(coset_orbit_sum(n, 1, &prod), Err(Error::NotInvariant(_))));
    }
}
