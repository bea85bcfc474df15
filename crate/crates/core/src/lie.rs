//! Exact catalog of the 5×5 isometry-algebra generators over ℚ(√2),
//! bracket computation and table verification, and the invariant-tensor
//! solver: stack the infinitesimal-invariance constraints of a generator
//! set and take an exact nullspace.
//!
//! Naming: `M{AB}` are the antisymmetrized basis generators w.r.t.
//! η⁽⁵⁾ = diag(−1,1,1,1,1); `J{μ} = M{μ4}`; `K{i}±`, `F{i}±`, `L{i}`,
//! `P±`, `R`, `T` are the normalized combinations (curvature length 1).
//! The catalog stores the definitional 1/√2 normalizations throughout;
//! where a reference rendering differs by a scale, the bracket reports
//! carry the exact multiplier.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exact::{QMat, QSqrt2};

/// η⁽⁵⁾ diagonal used to build and test generators.
pub const ETA5_DIAG: [i64; 5] = [-1, 1, 1, 1, 1];

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LieError {
    UnknownGenerator(String),
    UnknownSubalgebra(String),
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::UnknownGenerator(n) => write!(f, "unknown generator name: {n}"),
            LieError::UnknownSubalgebra(n) => write!(f, "unknown subalgebra name: {n}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LieError {}

/// Named exact generator.
#[derive(Clone, PartialEq, Debug)]
pub struct Generator {
    pub name: String,
    pub matrix: QMat,
}

impl Generator {
    /// Exact membership identity `Xᵀη + ηX = 0`.
    pub fn is_in_algebra(&self) -> bool {
        let eta = eta5();
        self.matrix
            .transpose()
            .mul(&eta)
            .add(&eta.mul(&self.matrix))
            .is_zero()
    }

    pub fn to_f64(&self) -> [[f64; 5]; 5] {
        core::array::from_fn(|i| core::array::from_fn(|j| self.matrix[(i, j)].to_f64()))
    }
}

/// η⁽⁵⁾ as an exact matrix.
pub fn eta5() -> QMat {
    QMat::from_fn(5, 5, |i, j| {
        if i == j {
            QSqrt2::from_int(ETA5_DIAG[i])
        } else {
            QSqrt2::zero()
        }
    })
}

/// Basis generator `(M_AB)^C_D = δ_A^C η_BD − δ_B^C η_AD` (valid for any
/// index order; antisymmetric under A ↔ B).
pub fn m_ab(a: usize, b: usize) -> QMat {
    assert!(a < 5 && b < 5 && a != b);
    let mut m = QMat::zeros(5, 5);
    m[(a, b)] = QSqrt2::from_int(ETA5_DIAG[b]);
    m[(b, a)] = QSqrt2::from_int(-ETA5_DIAG[a]);
    m
}

fn half_sqrt2_combo(x: &QMat, y: &QMat, plus: bool) -> QMat {
    let s = QSqrt2::inv_sqrt2();
    let sum = if plus { x.add(y) } else { x.sub(y) };
    sum.scale(&s)
}

/// Look up a generator by name: `M01`, `J2`, `K2+`, `F3-`, `L1`, `P+`,
/// `R`, `T`.
pub fn generator(name: &str) -> Result<Generator, LieError> {
    let mat = match name {
        "R" => m_ab(0, 1),
        "T" => m_ab(2, 3),
        "P+" => half_sqrt2_combo(&m_ab(0, 4), &m_ab(1, 4), true),
        "P-" => half_sqrt2_combo(&m_ab(0, 4), &m_ab(1, 4), false),
        "L1" => m_ab(2, 3),
        "L2" => m_ab(3, 1),
        "L3" => m_ab(1, 2),
        _ => {
            let bytes = name.as_bytes();
            match bytes {
                [b'J', d] if d.is_ascii_digit() => {
                    let mu = (d - b'0') as usize;
                    if mu > 3 {
                        return Err(LieError::UnknownGenerator(name.into()));
                    }
                    m_ab(mu, 4)
                }
                [b'M', d1, d2] if d1.is_ascii_digit() && d2.is_ascii_digit() => {
                    let a = (d1 - b'0') as usize;
                    let b = (d2 - b'0') as usize;
                    if a > 4 || b > 4 || a == b {
                        return Err(LieError::UnknownGenerator(name.into()));
                    }
                    m_ab(a, b)
                }
                [b'K', d, s @ (b'+' | b'-')] if d.is_ascii_digit() => {
                    let i = (d - b'0') as usize;
                    if !(2..=3).contains(&i) {
                        return Err(LieError::UnknownGenerator(name.into()));
                    }
                    half_sqrt2_combo(&m_ab(0, i), &m_ab(1, i), *s == b'+')
                }
                [b'F', d, s @ (b'+' | b'-')] if d.is_ascii_digit() => {
                    let i = (d - b'0') as usize;
                    if !(1..=3).contains(&i) {
                        return Err(LieError::UnknownGenerator(name.into()));
                    }
                    half_sqrt2_combo(&m_ab(0, i), &m_ab(i, 4), *s == b'+')
                }
                _ => return Err(LieError::UnknownGenerator(name.into())),
            }
        }
    };
    Ok(Generator {
        name: name.into(),
        matrix: mat,
    })
}

/// All ten basis generators `M_AB`, A < B.
pub fn basis_m() -> Vec<Generator> {
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            out.push(Generator {
                name: format!("M{a}{b}"),
                matrix: m_ab(a, b),
            });
        }
    }
    out
}

/// Exact commutator `XY − YX`.
pub fn bracket(x: &QMat, y: &QMat) -> QMat {
    x.commutator(y)
}

/// Named subalgebras from the catalog tables. `sign` selects the ±
/// superscript family where one exists (ignored otherwise).
#[derive(Clone, PartialEq, Debug)]
pub struct SubalgebraSpec {
    pub name: String,
    pub generators: Vec<Generator>,
}

impl SubalgebraSpec {
    pub fn from_names(name: &str, names: &[&str]) -> Result<Self, LieError> {
        let generators = names
            .iter()
            .map(|n| generator(n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            name: name.into(),
            generators,
        })
    }

    /// Parse catalog names: `TypeI+`, `TypeII-`, `H1+`..`H8+`, `K1+`..`K5`,
    /// `o(1,4)`, `example1`.
    pub fn by_name(name: &str) -> Result<Self, LieError> {
        let (base, sign) = match name.strip_suffix('+') {
            Some(b) => (b, '+'),
            None => match name.strip_suffix('-') {
                Some(b) => (b, '-'),
                None => (name, '+'),
            },
        };
        let s = sign;
        let k2 = format!("K2{s}");
        let k3 = format!("K3{s}");
        let p = format!("P{s}");
        let f1 = format!("F1{s}");
        let f2 = format!("F2{s}");
        let f3 = format!("F3{s}");
        let names: Vec<&str> = match base {
            "TypeI" => vec![&k2, &k3, "J2", "J3", &p, "R", "T"],
            "TypeII" => vec![&f1, &f2, &f3, "L1", "L2", "L3", "J0"],
            "H1" => vec![&k2, &k3, &p],
            "H2" => vec![&k2, &k3, &p, "R"],
            "H3" => vec![&k2, &k3, &p, "T"],
            "H4" => vec![&k2, &k3, &p, "R", "T"],
            "H5" => vec![&p, "R", "T"],
            "H6" => vec!["J2", "J3", "T"],
            "H7" => vec!["J2", "J3", "R", "T"],
            "H8" => vec![&k2, &k3, &p, "J2", "J3", "T"],
            "K1" => vec![&f1, &f2, &f3],
            "K2" => vec!["L1", "L2", "L3"],
            "K3" => vec![&f1, &f2, &f3, "J0"],
            "K4" => vec!["L1", "L2", "L3", "J0"],
            "K5" => vec![&f1, &f2, &f3, "L1", "L2", "L3"],
            "example1" => vec![&k2, &k3, &p, "T"],
            "o(1,4)" | "o14" => {
                return Ok(Self {
                    name: name.into(),
                    generators: basis_m(),
                })
            }
            _ => return Err(LieError::UnknownSubalgebra(name.into())),
        };
        Self::from_names(name, &names)
    }
}

/// One verified bracket relation.
#[derive(Clone, PartialEq, Debug)]
pub struct RelationReport {
    /// e.g. `"[K2+, J2]"`.
    pub lhs: String,
    /// The tabulated right-hand side, e.g. `"P+"` or `"0"`.
    pub expected: String,
    /// Exact multiplier `m` with `[X, Y] = m · rhs` (`None` for rhs = 0).
    pub multiplier: Option<QSqrt2>,
    pub pass: bool,
}

fn check_relation(
    lhs_name: &str,
    x: &QMat,
    y: &QMat,
    expected: &str,
    rhs: Option<&QMat>,
) -> RelationReport {
    let br = bracket(x, y);
    match rhs {
        None => RelationReport {
            lhs: lhs_name.into(),
            expected: expected.into(),
            multiplier: None,
            pass: br.is_zero(),
        },
        Some(r) => {
            if r.is_zero() {
                return RelationReport {
                    lhs: lhs_name.into(),
                    expected: expected.into(),
                    multiplier: None,
                    pass: br.is_zero(),
                };
            }
            // find the proportionality constant from the first nonzero entry
            let mut mult = None;
            'outer: for i in 0..5 {
                for j in 0..5 {
                    if !r[(i, j)].is_zero() {
                        mult = Some(br[(i, j)].clone() / r[(i, j)].clone());
                        break 'outer;
                    }
                }
            }
            let m = mult.expect("nonzero rhs");
            let pass = br == r.scale(&m) && !br.is_zero();
            RelationReport {
                lhs: lhs_name.into(),
                expected: expected.into(),
                multiplier: Some(m),
                pass,
            }
        }
    }
}

fn combo(terms: &[(i64, &QMat)]) -> QMat {
    let mut acc = QMat::zeros(5, 5);
    for (c, m) in terms {
        acc = acc.add(&m.scale(&QSqrt2::from_int(*c)));
    }
    acc
}

/// Verify every relation of the rank-7 subalgebra tables.
///
/// `table` is `"TypeI"` or `"TypeII"`, `plus` picks the superscript.
/// Each relation passes when the bracket is an exact multiple of the
/// tabulated right-hand side; the multiplier is recorded (so normalization
/// conventions show up as multipliers rather than silent failures).
pub fn verify_bracket_table(table: &str, plus: bool) -> Result<Vec<RelationReport>, LieError> {
    let s = if plus { "+" } else { "-" };
    let sgn: i64 = if plus { 1 } else { -1 };
    let mut reports = Vec::new();
    match table {
        "TypeI" => {
            let k: [QMat; 2] = [
                generator(&format!("K2{s}"))?.matrix,
                generator(&format!("K3{s}"))?.matrix,
            ];
            let j: [QMat; 2] = [generator("J2")?.matrix, generator("J3")?.matrix];
            let p = generator(&format!("P{s}"))?.matrix;
            let r = generator("R")?.matrix;
            let t = generator("T")?.matrix;
            let kname = |i: usize| format!("K{}{s}", i + 2);
            let jname = |i: usize| format!("J{}", i + 2);
            // [K_i, K_j] = 0
            reports.push(check_relation(
                &format!("[{}, {}]", kname(0), kname(1)),
                &k[0],
                &k[1],
                "0",
                None,
            ));
            // [J_i, J_j] = ε_ij T (ε_23 read as +1)
            reports.push(check_relation("[J2, J3]", &j[0], &j[1], "T", Some(&t)));
            // [K_i, J_j] = δ_ij P
            for i in 0..2 {
                for jj in 0..2 {
                    let lhs = format!("[{}, {}]", kname(i), jname(jj));
                    if i == jj {
                        reports.push(check_relation(
                            &lhs,
                            &k[i],
                            &j[jj],
                            &format!("P{s}"),
                            Some(&p),
                        ));
                    } else {
                        reports.push(check_relation(&lhs, &k[i], &j[jj], "0", None));
                    }
                }
            }
            for i in 0..2 {
                // [K_i, P] = 0
                reports.push(check_relation(
                    &format!("[{}, P{s}]", kname(i)),
                    &k[i],
                    &p,
                    "0",
                    None,
                ));
                // [K_i, R] = −K_i
                let neg_k = combo(&[(-1, &k[i])]);
                reports.push(check_relation(
                    &format!("[{}, R]", kname(i)),
                    &k[i],
                    &r,
                    &format!("-{}", kname(i)),
                    Some(&neg_k),
                ));
                // [K_i, T] = ε_ij K_j
                let other = combo(&[(if i == 0 { 1 } else { -1 }, &k[1 - i])]);
                reports.push(check_relation(
                    &format!("[{}, T]", kname(i)),
                    &k[i],
                    &t,
                    &format!("eps*{}", kname(1 - i)),
                    Some(&other),
                ));
                // [J_i, P] = K_i
                reports.push(check_relation(
                    &format!("[{}, P{s}]", jname(i)),
                    &j[i],
                    &p,
                    &kname(i),
                    Some(&k[i]),
                ));
                // [J_i, R] = 0
                reports.push(check_relation(
                    &format!("[{}, R]", jname(i)),
                    &j[i],
                    &r,
                    "0",
                    None,
                ));
                // [J_i, T] = ε_ij J_j
                let otherj = combo(&[(if i == 0 { 1 } else { -1 }, &j[1 - i])]);
                reports.push(check_relation(
                    &format!("[{}, T]", jname(i)),
                    &j[i],
                    &t,
                    &format!("eps*{}", jname(1 - i)),
                    Some(&otherj),
                ));
            }
            // [P, R] = ∓P
            let rhs = combo(&[(-sgn, &p)]);
            reports.push(check_relation(
                &format!("[P{s}, R]"),
                &p,
                &r,
                &format!("{}P{s}", if plus { "-" } else { "+" }),
                Some(&rhs),
            ));
            // [P, T] = 0, [R, T] = 0
            reports.push(check_relation(&format!("[P{s}, T]"), &p, &t, "0", None));
            reports.push(check_relation("[R, T]", &r, &t, "0", None));
        }
        "TypeII" => {
            let f: [QMat; 3] = [
                generator(&format!("F1{s}"))?.matrix,
                generator(&format!("F2{s}"))?.matrix,
                generator(&format!("F3{s}"))?.matrix,
            ];
            let l: [QMat; 3] = [
                generator("L1")?.matrix,
                generator("L2")?.matrix,
                generator("L3")?.matrix,
            ];
            let j0 = generator("J0")?.matrix;
            let eps = |i: usize, j: usize, k: usize| -> i64 {
                match (i, j, k) {
                    (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
                    (2, 1, 0) | (1, 0, 2) | (0, 2, 1) => -1,
                    _ => 0,
                }
            };
            for i in 0..3 {
                for jj in 0..3 {
                    if i < jj {
                        // [F_i, F_j] = 0
                        reports.push(check_relation(
                            &format!("[F{}{s}, F{}{s}]", i + 1, jj + 1),
                            &f[i],
                            &f[jj],
                            "0",
                            None,
                        ));
                        // [L_i, L_j] = −ε_ijk L_k
                        let kk = 3 - i - jj;
                        let rhs = combo(&[(-eps(i, jj, kk), &l[kk])]);
                        reports.push(check_relation(
                            &format!("[L{}, L{}]", i + 1, jj + 1),
                            &l[i],
                            &l[jj],
                            &format!("-eps*L{}", kk + 1),
                            Some(&rhs),
                        ));
                    }
                    // [F_i, L_j] = −ε_ijk F_k
                    let mut rhs = QMat::zeros(5, 5);
                    let mut label = String::from("0");
                    for kk in 0..3 {
                        let e = eps(i, jj, kk);
                        if e != 0 {
                            rhs = combo(&[(-e, &f[kk])]);
                            label = format!("-eps*F{}{s}", kk + 1);
                        }
                    }
                    reports.push(check_relation(
                        &format!("[F{}{s}, L{}]", i + 1, jj + 1),
                        &f[i],
                        &l[jj],
                        &label,
                        if rhs.is_zero() { None } else { Some(&rhs) },
                    ));
                }
                // [F_i, J0] = ±F_i
                let rhs = combo(&[(sgn, &f[i])]);
                reports.push(check_relation(
                    &format!("[F{}{s}, J0]", i + 1),
                    &f[i],
                    &j0,
                    &format!("{}F{}{s}", if plus { "+" } else { "-" }, i + 1),
                    Some(&rhs),
                ));
                // [L_i, J0] = 0
                reports.push(check_relation(
                    &format!("[L{}, J0]", i + 1),
                    &l[i],
                    &j0,
                    "0",
                    None,
                ));
            }
        }
        other => return Err(LieError::UnknownSubalgebra(other.into())),
    }
    Ok(reports)
}

/// Verify the full basis bracket
/// `[M_AB, M_CD] = η_AD M_BC + η_BC M_AD − η_AC M_BD − η_BD M_AC`
/// for every unordered pair; returns the number of pairs checked.
pub fn verify_basis_brackets() -> Result<usize, (String, String)> {
    let eta = ETA5_DIAG;
    let idx: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut checked = 0;
    for (p, &(a, b)) in idx.iter().enumerate() {
        for &(c, d) in idx.iter().skip(p + 1) {
            let lhs = bracket(&m_ab(a, b), &m_ab(c, d));
            let mut rhs = QMat::zeros(5, 5);
            let mut add_term = |coef: i64, i: usize, j: usize| {
                if coef != 0 && i != j {
                    rhs = rhs.add(&m_ab(i, j).scale(&QSqrt2::from_int(coef)));
                }
            };
            if a == d {
                add_term(eta[a], b, c);
            }
            if b == c {
                add_term(eta[b], a, d);
            }
            if a == c {
                add_term(-eta[a], b, d);
            }
            if b == d {
                add_term(-eta[b], a, c);
            }
            if lhs != rhs {
                return Err((format!("M{a}{b}"), format!("M{c}{d}")));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Tensor species for the invariant solver.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Species {
    Vector,
    Symmetric2,
    Antisymmetric2,
}

/// Infinitesimal invariance convention for rank-2 tensors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    /// `Xᵀ C + C X = 0` (lower indices).
    Covariant,
    /// `X C + C Xᵀ = 0` (upper indices).
    Contravariant,
}

/// Basis of the tensors annihilated by every generator of a subalgebra.
#[derive(Clone, PartialEq, Debug)]
pub struct InvariantBasis {
    pub species: Species,
    pub convention: Convention,
    pub dimension: usize,
    /// 5×5 matrices (rank-2 species) or 5×1 column vectors.
    pub basis: Vec<QMat>,
}

fn sym_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    // row-major upper triangle of a 5×5 symmetric matrix
    i * 5 + j - i * (i + 1) / 2
}

fn antisym_pairs() -> Vec<(usize, usize)> {
    (0..5)
        .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
        .collect()
}

/// Solve for the invariant tensors of `spec` by stacking the constraint
/// rows of every generator and taking an exact nullspace.
///
/// ```
/// use beltrami_core::lie::{invariant_space, Convention, Species, SubalgebraSpec};
///
/// // the translation subalgebra leaves a single vector direction
/// let spec = SubalgebraSpec::by_name("K1+").unwrap();
/// let inv = invariant_space(&spec, Species::Vector, Convention::Contravariant);
/// assert_eq!(inv.dimension, 1);
/// ```
pub fn invariant_space(
    spec: &SubalgebraSpec,
    species: Species,
    convention: Convention,
) -> InvariantBasis {
    let n_unknowns = match species {
        Species::Vector => 5,
        Species::Symmetric2 => 15,
        Species::Antisymmetric2 => 10,
    };
    let pairs = antisym_pairs();
    let anti_index = |i: usize, j: usize| -> Option<(usize, i64)> {
        if i == j {
            return None;
        }
        if i < j {
            Some((pairs.iter().position(|&p| p == (i, j)).unwrap(), 1))
        } else {
            Some((pairs.iter().position(|&p| p == (j, i)).unwrap(), -1))
        }
    };

    let rows_per_gen = match species {
        Species::Vector => 5,
        _ => 25,
    };
    let mut big = QMat::zeros(rows_per_gen * spec.generators.len(), n_unknowns);
    for (g, generator) in spec.generators.iter().enumerate() {
        let x = &generator.matrix;
        match species {
            Species::Vector => {
                for a in 0..5 {
                    for b in 0..5 {
                        if !x[(a, b)].is_zero() {
                            let e = big[(g * 5 + a, b)].clone() + x[(a, b)].clone();
                            big[(g * 5 + a, b)] = e;
                        }
                    }
                }
            }
            Species::Symmetric2 | Species::Antisymmetric2 => {
                for a in 0..5 {
                    for b in 0..5 {
                        let row = g * 25 + a * 5 + b;
                        for k in 0..5 {
                            // coefficient of C[k][b] and C[a][k] in the
                            // chosen convention's constraint at (a, b)
                            let (c1, c2) = match convention {
                                Convention::Covariant => (x[(k, a)].clone(), x[(k, b)].clone()),
                                Convention::Contravariant => (x[(a, k)].clone(), x[(b, k)].clone()),
                            };
                            match species {
                                Species::Symmetric2 => {
                                    if !c1.is_zero() {
                                        let col = sym_index(k, b);
                                        let e = big[(row, col)].clone() + c1;
                                        big[(row, col)] = e;
                                    }
                                    if !c2.is_zero() {
                                        let col = sym_index(a, k);
                                        let e = big[(row, col)].clone() + c2;
                                        big[(row, col)] = e;
                                    }
                                }
                                Species::Antisymmetric2 => {
                                    if !c1.is_zero() {
                                        if let Some((col, sgn)) = anti_index(k, b) {
                                            let e = big[(row, col)].clone()
                                                + c1 * QSqrt2::from_int(sgn);
                                            big[(row, col)] = e;
                                        }
                                    }
                                    if !c2.is_zero() {
                                        if let Some((col, sgn)) = anti_index(a, k) {
                                            let e = big[(row, col)].clone()
                                                + c2 * QSqrt2::from_int(sgn);
                                            big[(row, col)] = e;
                                        }
                                    }
                                }
                                Species::Vector => unreachable!(),
                            }
                        }
                    }
                }
            }
        }
    }

    let null = big.nullspace();
    let basis = null
        .into_iter()
        .map(|v| match species {
            Species::Vector => QMat::new(5, 1, v),
            Species::Symmetric2 => QMat::from_fn(5, 5, |i, j| v[sym_index(i, j)].clone()),
            Species::Antisymmetric2 => QMat::from_fn(5, 5, |i, j| match anti_index(i, j) {
                None => QSqrt2::zero(),
                Some((col, sgn)) => v[col].clone() * QSqrt2::from_int(sgn),
            }),
        })
        .collect::<Vec<_>>();
    InvariantBasis {
        species,
        convention,
        dimension: basis.len(),
        basis,
    }
}

/// Is `target` in the exact span of `basis` (all flattened)?
pub fn in_span(basis: &[QMat], target: &QMat) -> bool {
    if basis.is_empty() {
        return target.is_zero();
    }
    let (r, c) = (basis[0].rows, basis[0].cols);
    let flat = |m: &QMat| -> Vec<QSqrt2> {
        let mut v = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                v.push(m[(i, j)].clone());
            }
        }
        v
    };
    let mut cols: Vec<Vec<QSqrt2>> = basis.iter().map(flat).collect();
    let without = QMat::from_fn(r * c, cols.len(), |i, j| cols[j][i].clone());
    let rank_without = without.rank();
    cols.push(flat(target));
    let with = QMat::from_fn(r * c, cols.len(), |i, j| cols[j][i].clone());
    with.rank() == rank_without
}

/// How a generator acts on a fixed vector.
#[derive(Clone, PartialEq, Debug)]
pub enum DirectionAction {
    /// `Xv = 0`.
    Annihilates,
    /// `Xv = λ v` with the exact eigenvalue.
    Eigen(QSqrt2),
    /// Neither; carries `Xv`.
    Other(Vec<QSqrt2>),
}

#[derive(Clone, PartialEq, Debug)]
pub struct DirectionReport {
    pub generator: String,
    pub action: DirectionAction,
}

/// Evaluate `X·v` for every generator of the spec and classify the result
/// exactly (annihilated / eigenvector / other).
pub fn direction_relations(spec: &SubalgebraSpec, v: &[QSqrt2; 5]) -> Vec<DirectionReport> {
    spec.generators
        .iter()
        .map(|g| {
            let xv = g.matrix.apply(v.as_slice());
            let action = if xv.iter().all(|c| c.is_zero()) {
                DirectionAction::Annihilates
            } else {
                // candidate eigenvalue from the first nonzero slot of v
                let mut lambda = None;
                for i in 0..5 {
                    if !v[i].is_zero() {
                        lambda = Some(xv[i].clone() / v[i].clone());
                        break;
                    }
                }
                match lambda {
                    Some(l) => {
                        let ok = (0..5).all(|i| xv[i] == v[i].clone() * l.clone());
                        if ok && !l.is_zero() {
                            DirectionAction::Eigen(l)
                        } else {
                            DirectionAction::Other(xv)
                        }
                    }
                    None => DirectionAction::Other(xv),
                }
            };
            DirectionReport {
                generator: g.name.clone(),
                action,
            }
        })
        .collect()
}

/// Exact vector (𝖺, 0, 0, 0, −𝖺) with 𝖺 = 1.
pub fn vector_v() -> [QSqrt2; 5] {
    [
        QSqrt2::one(),
        QSqrt2::zero(),
        QSqrt2::zero(),
        QSqrt2::zero(),
        -QSqrt2::one(),
    ]
}

/// Exact vector (𝖺, 𝖺, 0, 0, 0) with 𝖺 = 1.
pub fn vector_w() -> [QSqrt2; 5] {
    [
        QSqrt2::one(),
        QSqrt2::one(),
        QSqrt2::zero(),
        QSqrt2::zero(),
        QSqrt2::zero(),
    ]
}

/// Exact symmetric invariant pattern with constants (𝖺, 𝖻) as rationals.
pub fn tensor_c(sa: i64, sb: i64) -> QMat {
    let a = QSqrt2::from_int(sa);
    let b = QSqrt2::from_int(sb);
    let d = b.clone() - a.clone();
    let two_b_minus_a = QSqrt2::from_int(2 * sb - sa);
    let mut m = QMat::zeros(5, 5);
    m[(0, 0)] = a;
    m[(0, 1)] = b.clone();
    m[(1, 0)] = b;
    m[(1, 1)] = two_b_minus_a;
    for i in 2..5 {
        m[(i, i)] = d.clone();
    }
    m
}

/// Exact antisymmetric invariant pattern with constants (𝖺, 𝖻, 𝖼).
pub fn tensor_d(da: i64, db: i64, dc: i64) -> QMat {
    let mut m = QMat::zeros(5, 5);
    for (col, v) in [(2usize, da), (3, db), (4, dc)] {
        m[(0, col)] = QSqrt2::from_int(v);
        m[(1, col)] = QSqrt2::from_int(v);
        m[(col, 0)] = QSqrt2::from_int(-v);
        m[(col, 1)] = QSqrt2::from_int(-v);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::rng::SplitMix64;

    #[test]
    fn printed_matrices_reproduced() {
        // T: entries [2][3] = 1, [3][2] = −1
        let t = generator("T").unwrap().matrix;
        assert_eq!(t[(2, 3)], QSqrt2::one());
        assert_eq!(t[(3, 2)], -QSqrt2::one());

        // K2+: (1/√2)·([0][2] = [1][2] = [2][0] = 1, [2][1] = −1)
        let k2 = generator("K2+").unwrap().matrix;
        let s = QSqrt2::inv_sqrt2();
        assert_eq!(k2[(0, 2)], s);
        assert_eq!(k2[(1, 2)], s);
        assert_eq!(k2[(2, 0)], s);
        assert_eq!(k2[(2, 1)], -s.clone());
        assert!(k2[(3, 3)].is_zero() && k2[(4, 4)].is_zero());

        // K3+ mirrors K2+ in the third spatial slot
        let k3 = generator("K3+").unwrap().matrix;
        assert_eq!(k3[(0, 3)], s);
        assert_eq!(k3[(1, 3)], s);
        assert_eq!(k3[(3, 0)], s);
        assert_eq!(k3[(3, 1)], -s.clone());

        // F1+: (1/√2)·([0][1] = [1][0] = [1][4] = 1, [4][1] = −1)
        let f1 = generator("F1+").unwrap().matrix;
        assert_eq!(f1[(0, 1)], s);
        assert_eq!(f1[(1, 0)], s);
        assert_eq!(f1[(1, 4)], s);
        assert_eq!(f1[(4, 1)], -s.clone());

        // catalog P+ is 1/√2 of the rendering with unit entries: the √2
        // scale shows up explicitly
        let p = generator("P+").unwrap().matrix;
        assert_eq!(p[(0, 4)], s);
        assert_eq!(p[(1, 4)], s);
        assert_eq!(p[(4, 0)], s);
        assert_eq!(p[(4, 1)], -s.clone());
        let printed_scale = QSqrt2::one() / s.clone();
        assert_eq!(printed_scale, QSqrt2::sqrt2());
    }

    #[test]
    fn every_catalog_generator_is_in_algebra() {
        let mut names: Vec<String> = basis_m().iter().map(|g| g.name.clone()).collect();
        for n in [
            "J0", "J1", "J2", "J3", "K2+", "K2-", "K3+", "K3-", "F1+", "F1-", "F2+", "F2-", "F3+",
            "F3-", "L1", "L2", "L3", "P+", "P-", "R", "T",
        ] {
            names.push(n.into());
        }
        for n in names {
            let g = generator(&n).unwrap();
            assert!(g.is_in_algebra(), "{n} fails the membership identity");
        }
        assert!(generator("K1+").is_err());
        assert!(generator("Q").is_err());
    }

    #[test]
    fn basis_brackets_all_pairs() {
        assert_eq!(verify_basis_brackets().unwrap(), 45);
    }

    #[test]
    fn j_bracket_is_minus_rotation() {
        let j0 = generator("J0").unwrap().matrix;
        let j1 = generator("J1").unwrap().matrix;
        let m01 = generator("M01").unwrap().matrix;
        assert_eq!(bracket(&j0, &j1), m01.neg());
        // self-bracket vanishes
        assert!(bracket(&m01, &m01).is_zero());
    }

    #[test]
    fn jacobi_identity_random_triples() {
        let names = [
            "M01", "M02", "M03", "M04", "M12", "M13", "M14", "M23", "M24", "M34", "K2+", "K3-",
            "F1+", "F2-", "F3+", "L1", "L2", "L3", "P+", "P-", "R", "T", "J0", "J1", "J2", "J3",
        ];
        let mut rng = SplitMix64::new(271828);
        for _ in 0..200 {
            let x = generator(names[rng.below(names.len())]).unwrap().matrix;
            let y = generator(names[rng.below(names.len())]).unwrap().matrix;
            let z = generator(names[rng.below(names.len())]).unwrap().matrix;
            let jac = bracket(&bracket(&x, &y), &z)
                .add(&bracket(&bracket(&y, &z), &x))
                .add(&bracket(&bracket(&z, &x), &y));
            assert!(jac.is_zero());
        }
    }

    #[test]
    fn type_one_table_passes() {
        for plus in [true, false] {
            let reports = verify_bracket_table("TypeI", plus).unwrap();
            for r in &reports {
                assert!(r.pass, "{} -> {:?}", r.lhs, r);
            }
            // ε-reading of [J2, J3]: the exact multiplier is −1
            let jj = reports.iter().find(|r| r.lhs == "[J2, J3]").unwrap();
            assert_eq!(jj.multiplier, Some(-QSqrt2::one()));
            // definitional P normalization: multiplier 1 on [K2, J2]
            let kj = reports
                .iter()
                .find(|r| r.lhs.starts_with("[K2") && r.lhs.contains("J2"))
                .unwrap();
            assert_eq!(kj.multiplier, Some(QSqrt2::one()));
        }
    }

    #[test]
    fn type_two_table_passes() {
        for plus in [true, false] {
            let reports = verify_bracket_table("TypeII", plus).unwrap();
            for r in &reports {
                assert!(r.pass, "{} -> {:?}", r.lhs, r);
                if r.multiplier.is_some() {
                    assert_eq!(r.multiplier, Some(QSqrt2::one()), "{}", r.lhs);
                }
            }
        }
    }

    #[test]
    fn invariant_vector_of_translations() {
        let spec = SubalgebraSpec::by_name("K1+").unwrap();
        let inv = invariant_space(&spec, Species::Vector, Convention::Contravariant);
        assert_eq!(inv.dimension, 1);
        let v = QMat::new(5, 1, vector_v().to_vec());
        assert!(in_span(&inv.basis, &v));
    }

    #[test]
    fn invariant_symmetric_family() {
        let spec = SubalgebraSpec::by_name("example1").unwrap();
        let inv = invariant_space(&spec, Species::Symmetric2, Convention::Contravariant);
        assert_eq!(inv.dimension, 2);
        // printed pattern with (𝖺, 𝖻) = (2, 3) and η at (𝖺, 𝖻) = (−1, 0)
        assert!(in_span(&inv.basis, &tensor_c(2, 3)));
        assert!(in_span(&inv.basis, &eta5()));
        assert_eq!(tensor_c(-1, 0), eta5());
    }

    #[test]
    fn invariant_basis_satisfies_constraints_exactly() {
        // each basis element is annihilated by every generator, entrywise
        let spec = SubalgebraSpec::by_name("example1").unwrap();
        for (species, conv) in [
            (Species::Symmetric2, Convention::Contravariant),
            (Species::Symmetric2, Convention::Covariant),
            (Species::Antisymmetric2, Convention::Contravariant),
        ] {
            let inv = invariant_space(&spec, species, conv);
            for c in &inv.basis {
                for g in &spec.generators {
                    let x = &g.matrix;
                    let resid = match conv {
                        Convention::Covariant => x.transpose().mul(c).add(&c.mul(x)),
                        Convention::Contravariant => x.mul(c).add(&c.mul(&x.transpose())),
                    };
                    assert!(resid.is_zero(), "{} breaks a basis element", g.name);
                }
            }
        }
        let vec_spec = SubalgebraSpec::by_name("K1-").unwrap();
        let inv = invariant_space(&vec_spec, Species::Vector, Convention::Contravariant);
        assert_eq!(inv.dimension, 1);
        for v in &inv.basis {
            for g in &vec_spec.generators {
                let col: alloc::vec::Vec<QSqrt2> = (0..5).map(|i| v[(i, 0)].clone()).collect();
                assert!(g.matrix.apply(&col).iter().all(|e| e.is_zero()));
            }
        }
    }

    #[test]
    fn invariant_antisymmetric_family() {
        let spec = SubalgebraSpec::by_name("H1+").unwrap();
        let inv = invariant_space(&spec, Species::Antisymmetric2, Convention::Contravariant);
        assert_eq!(inv.dimension, 3);
        assert!(in_span(&inv.basis, &tensor_d(1, 0, 0)));
        assert!(in_span(&inv.basis, &tensor_d(0, 1, 0)));
        assert!(in_span(&inv.basis, &tensor_d(5, -7, 2)));
        // mixed-sign P breaks the family down
        let mixed = SubalgebraSpec::from_names("H1-mixed", &["K2+", "K3+", "P-"]).unwrap();
        let inv_mixed = invariant_space(&mixed, Species::Antisymmetric2, Convention::Contravariant);
        assert!(inv_mixed.dimension < 3, "dim {}", inv_mixed.dimension);
    }

    #[test]
    fn full_algebra_leaves_only_eta() {
        let spec = SubalgebraSpec::by_name("o(1,4)").unwrap();
        let inv = invariant_space(&spec, Species::Symmetric2, Convention::Contravariant);
        assert_eq!(inv.dimension, 1);
        assert!(in_span(&inv.basis, &eta5()));
    }

    #[test]
    fn conventions_related_by_eta_conjugation() {
        let spec = SubalgebraSpec::by_name("example1").unwrap();
        let co = invariant_space(&spec, Species::Symmetric2, Convention::Covariant);
        let contra = invariant_space(&spec, Species::Symmetric2, Convention::Contravariant);
        assert_eq!(co.dimension, contra.dimension);
        let eta = eta5();
        for b in &contra.basis {
            let conj = eta.mul(b).mul(&eta);
            assert!(in_span(&co.basis, &conj));
        }
        // the printed pattern satisfies the contravariant convention only
        let c = tensor_c(2, 3);
        assert!(in_span(&contra.basis, &c));
        assert!(!in_span(&co.basis, &c));
    }

    #[test]
    fn invariant_space_stable_under_rescaling() {
        let spec = SubalgebraSpec::by_name("H1+").unwrap();
        let scaled = SubalgebraSpec {
            name: "scaled".into(),
            generators: spec
                .generators
                .iter()
                .map(|g| Generator {
                    name: g.name.clone(),
                    matrix: g.matrix.scale(&QSqrt2::new(ratio(3, 2), ratio(-1, 7))),
                })
                .collect(),
        };
        let a = invariant_space(&spec, Species::Antisymmetric2, Convention::Contravariant);
        let b = invariant_space(&scaled, Species::Antisymmetric2, Convention::Contravariant);
        assert_eq!(a.dimension, b.dimension);
        for m in &a.basis {
            assert!(in_span(&b.basis, m));
        }
    }

    #[test]
    fn direction_relations_for_w() {
        let spec =
            SubalgebraSpec::from_names("G1-action", &["K2+", "K3+", "J2", "J3", "T", "P+", "R"])
                .unwrap();
        let reports = direction_relations(&spec, &vector_w());
        for r in &reports {
            match r.generator.as_str() {
                "R" => assert_eq!(r.action, DirectionAction::Eigen(QSqrt2::one())),
                _ => assert_eq!(r.action, DirectionAction::Annihilates, "{}", r.generator),
            }
        }
        // the opposite-sign translation does not annihilate W
        let pminus = SubalgebraSpec::from_names("P-", &["P-"]).unwrap();
        let r = direction_relations(&pminus, &vector_w());
        assert!(matches!(r[0].action, DirectionAction::Other(_)));
    }

    #[test]
    fn direction_relations_for_v() {
        let spec = SubalgebraSpec::by_name("TypeII+").unwrap();
        let reports = direction_relations(&spec, &vector_v());
        for r in &reports {
            match r.generator.as_str() {
                "J0" => assert_eq!(r.action, DirectionAction::Eigen(-QSqrt2::one())),
                _ => assert_eq!(r.action, DirectionAction::Annihilates, "{}", r.generator),
            }
        }
    }

    #[test]
    fn subalgebra_names_resolve() {
        for n in [
            "TypeI+", "TypeI-", "TypeII+", "TypeII-", "H1+", "H2+", "H3-", "H4+", "H5+", "H6",
            "H7", "H8+", "K1+", "K2", "K3-", "K4", "K5+", "o(1,4)", "example1",
        ] {
            assert!(SubalgebraSpec::by_name(n).is_ok(), "{n}");
        }
        assert!(SubalgebraSpec::by_name("H9+").is_err());
    }
}
