//! The named tensors of the matrix-multiplication literature, with their
//! closed-form symmetry dimensions and presented Lie-algebra families.
//!
//! All constructors produce integer tensors with entries in `{−1, 0, 1}`,
//! in the exact coordinates of the classification of 1-generic tensors in
//! `ℂ^m ⊗ ℂ^m ⊗ ℂ^m` of maximal symmetry:
//!
//! | name             | display                                                   | `dim g_T`        |
//! |------------------|-----------------------------------------------------------|------------------|
//! | `rank_one`       | `a₁⊗b₁⊗c₁`                                                | `3m² − 3m`       |
//! | `t0`             | `a₁ ⊗ (Σ_j b_j⊗c_j)`                                      | `2m² − m − 1`    |
//! | `utriv`          | `t0 + Σ_{ρ≥2} a_ρ⊗b₁⊗c_ρ`                                 | `m² − 1`         |
//! | `cw_big`         | `utriv + Σ_{2≤s≤m−1} a_s⊗b_s⊗c_m`  (m = q+2)              | `m(m+1)/2`       |
//! | `max_even`       | `utriv` + skew pairs `a_ξ⊗b_{ξ+q−1}⊗c_m` (m even, q=m/2)  | `m(m+3)/2 − 2`   |
//! | `max_odd_skew`   | odd-m variant with `a₂⊗b₂⊗c_m` (m odd, q=(m−1)/2)         | `m(m+1)/2`       |
//! | `max_minus1_odd` | `utriv` + skew pairs on `c₁` (m odd, p=(m−1)/2)           | `m(m+1)/2 − 1`   |
//! | `strassen`       | `Σ_j (a₁⊗b_{j+1} + a_{j+1}⊗b₁)⊗c_j`, dims (q+1,q+1,q)     | `q² + q`         |
//! | `cw_small`       | `Σ_j a₁⊗b_{j+1}⊗c_{j+1} + ⟲`                              | `binom(q,2) + 1` |
//! | `mcIsym`         | `a₁⊗b₁⊗c₁ + Σ_ρ (a₁⊗b_ρ⊗c_ρ + a_ρ⊗b₁⊗c_ρ + a_ρ⊗b_ρ⊗c₁)`  | `binom(m−1,2)`   |
//! | `skew3`          | `a ∧ b ∧ c` in m = 3                                      | `8`              |
//!
//! The four maximal-symmetry families (`cw_big`, `max_even`,
//! `max_odd_skew`, `max_minus1_odd`) carry the classification theorem's
//! guarantee from `m ≥ 14`; below that, and for the remaining names, the
//! formula is backed by the explicit parametric presentation of `g̃_T`
//! reproduced in [`presentations`].

use alloc::string::String;
use alloc::vec::Vec;

use crate::exact_arith::rat;
use crate::tensor::Tensor3;

/// Identifier of a named tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ZooName {
    RankOne,
    T0,
    Utriv,
    CwBig,
    MaxEven,
    MaxOddSkew,
    MaxMinus1Odd,
    Strassen,
    CwSmall,
    McISym,
    Skew3,
}

impl ZooName {
    pub const ALL: [ZooName; 11] = [
        ZooName::RankOne,
        ZooName::T0,
        ZooName::Utriv,
        ZooName::CwBig,
        ZooName::MaxEven,
        ZooName::MaxOddSkew,
        ZooName::MaxMinus1Odd,
        ZooName::Strassen,
        ZooName::CwSmall,
        ZooName::McISym,
        ZooName::Skew3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ZooName::RankOne => "rank_one",
            ZooName::T0 => "t0",
            ZooName::Utriv => "utriv",
            ZooName::CwBig => "cw_big",
            ZooName::MaxEven => "max_even",
            ZooName::MaxOddSkew => "max_odd_skew",
            ZooName::MaxMinus1Odd => "max_minus1_odd",
            ZooName::Strassen => "strassen",
            ZooName::CwSmall => "cw_small",
            ZooName::McISym => "mcIsym",
            ZooName::Skew3 => "skew3",
        }
    }

    pub fn parse(s: &str) -> Option<ZooName> {
        ZooName::ALL.into_iter().find(|n| n.as_str() == s)
    }

    /// Whether the size parameter is the CW/Strassen `q` rather than the
    /// ambient dimension `m`.
    pub fn size_is_q(self) -> bool {
        matches!(self, ZooName::CwBig | ZooName::Strassen | ZooName::CwSmall)
    }
}

impl core::fmt::Display for ZooName {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the expected dimension is justified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Covered by the classification theorem's hypothesis (`m ≥ 14`).
    TheoremExact,
    /// Backed by the explicit parametric presentation of `g̃_T`, valid at
    /// every admissible size.
    PresentationExact,
    /// A worked example with an individually stated dimension.
    PaperExample,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::TheoremExact => "TheoremExact",
            Provenance::PresentationExact => "PresentationExact",
            Provenance::PaperExample => "PaperExample",
        }
    }
}

impl core::fmt::Display for Provenance {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZooError {
    InvalidSize { name: ZooName, size: usize, detail: String },
}

impl core::fmt::Display for ZooError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ZooError::InvalidSize { name, size, detail } => {
                write!(f, "invalid size {size} for {name}: {detail}")
            }
        }
    }
}

/// A constructed named tensor with its expected symmetry dimension.
#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: ZooName,
    /// The size parameter as given (`q` for `cw_big`/`strassen`/`cw_small`,
    /// `m` otherwise).
    pub size: usize,
    pub tensor: Tensor3,
    pub expected_sym_dim: usize,
    pub provenance: Provenance,
}

/// Stable listing of all names with their parameter constraints.
pub fn list() -> Vec<(ZooName, &'static str)> {
    alloc::vec![
        (ZooName::RankOne, "m ≥ 1"),
        (ZooName::T0, "m ≥ 1"),
        (ZooName::Utriv, "m ≥ 2"),
        (ZooName::CwBig, "q ≥ 1 (m = q + 2)"),
        (ZooName::MaxEven, "even m ≥ 4"),
        (ZooName::MaxOddSkew, "odd m ≥ 5"),
        (ZooName::MaxMinus1Odd, "odd m ≥ 3"),
        (ZooName::Strassen, "q ≥ 2 (dims (q+1, q+1, q))"),
        (ZooName::CwSmall, "q ≥ 2 (m = q + 1)"),
        (ZooName::McISym, "m ≥ 3"),
        (ZooName::Skew3, "fixed size 3"),
    ]
}

fn validate(name: ZooName, size: usize) -> Result<(), ZooError> {
    let bad = |detail: &str| {
        Err(ZooError::InvalidSize { name, size, detail: String::from(detail) })
    };
    match name {
        ZooName::RankOne | ZooName::T0 => {
            if size < 1 {
                return bad("need m ≥ 1");
            }
        }
        ZooName::Utriv => {
            if size < 2 {
                return bad("need m ≥ 2");
            }
        }
        ZooName::McISym => {
            // At m = 2 the tensor degenerates and picks up extra symmetry
            // (computed dimension 2, not binom(1,2) = 0).
            if size < 3 {
                return bad("need m ≥ 3");
            }
        }
        ZooName::CwBig => {
            if size < 1 {
                return bad("need q ≥ 1");
            }
        }
        ZooName::Strassen | ZooName::CwSmall => {
            // Both q = 1 tensors coincide with degenerate forms whose
            // symmetry exceeds the generic formula (3 > q² + q and
            // 3 > binom(q,2) + 1), so the closed form starts at q = 2.
            if size < 2 {
                return bad("need q ≥ 2");
            }
        }
        ZooName::MaxEven => {
            if size < 4 || size % 2 != 0 {
                return bad("need even m ≥ 4");
            }
        }
        ZooName::MaxOddSkew => {
            if size < 5 || size % 2 != 1 {
                return bad("need odd m ≥ 5");
            }
        }
        ZooName::MaxMinus1Odd => {
            if size < 3 || size % 2 != 1 {
                return bad("need odd m ≥ 3");
            }
        }
        ZooName::Skew3 => {
            if size != 3 {
                return bad("skew3 exists only in m = 3");
            }
        }
    }
    Ok(())
}

/// The closed-form expected `dim g_T` and its justification.
pub fn expected_sym_dim(name: ZooName, size: usize) -> Result<(usize, Provenance), ZooError> {
    validate(name, size)?;
    let theorem_or_presentation = |m: usize| {
        if m >= 14 {
            Provenance::TheoremExact
        } else {
            Provenance::PresentationExact
        }
    };
    Ok(match name {
        ZooName::RankOne => (3 * size * size - 3 * size, Provenance::PresentationExact),
        ZooName::T0 => (2 * size * size - size - 1, Provenance::PresentationExact),
        ZooName::Utriv => (size * size - 1, Provenance::PresentationExact),
        ZooName::CwBig => {
            let m = size + 2;
            (m * (m + 1) / 2, theorem_or_presentation(m))
        }
        ZooName::MaxEven => (size * (size + 3) / 2 - 2, theorem_or_presentation(size)),
        ZooName::MaxOddSkew => (size * (size + 1) / 2, theorem_or_presentation(size)),
        ZooName::MaxMinus1Odd => (size * (size + 1) / 2 - 1, theorem_or_presentation(size)),
        ZooName::Strassen => (size * size + size, Provenance::PresentationExact),
        ZooName::CwSmall => (size * (size - 1) / 2 + 1, Provenance::PresentationExact),
        ZooName::McISym => ((size - 1) * (size - 2) / 2, Provenance::PresentationExact),
        ZooName::Skew3 => (8, Provenance::PaperExample),
    })
}

/// Entry lists, 1-based, all values ±1.
fn entry_list(name: ZooName, size: usize) -> ((usize, usize, usize), Vec<(u32, u32, u32, i64)>) {
    let m = if name.size_is_q() {
        match name {
            ZooName::CwBig => size + 2,
            _ => size + 1,
        }
    } else {
        size
    };
    let mu = m as u32;
    let mut e: Vec<(u32, u32, u32, i64)> = Vec::new();
    let t0_entries = |e: &mut Vec<_>| {
        for j in 1..=mu {
            e.push((1, j, j, 1));
        }
    };
    let utriv_entries = |e: &mut Vec<_>| {
        t0_entries(e);
        for rho in 2..=mu {
            e.push((rho, 1, rho, 1));
        }
    };
    match name {
        ZooName::RankOne => {
            e.push((1, 1, 1, 1));
            ((m, m, m), e)
        }
        ZooName::T0 => {
            t0_entries(&mut e);
            ((m, m, m), e)
        }
        ZooName::Utriv => {
            utriv_entries(&mut e);
            ((m, m, m), e)
        }
        ZooName::CwBig => {
            utriv_entries(&mut e);
            for s in 2..=mu - 1 {
                e.push((s, s, mu, 1));
            }
            ((m, m, m), e)
        }
        ZooName::MaxEven => {
            utriv_entries(&mut e);
            let q = mu / 2;
            for xi in 2..=q {
                e.push((xi, xi + q - 1, mu, 1));
                e.push((xi + q - 1, xi, mu, -1));
            }
            ((m, m, m), e)
        }
        ZooName::MaxOddSkew => {
            utriv_entries(&mut e);
            let q = (mu - 1) / 2;
            e.push((2, 2, mu, 1));
            for eta in 3..=q + 1 {
                e.push((eta, eta + q - 1, mu, 1));
                e.push((eta + q - 1, eta, mu, -1));
            }
            ((m, m, m), e)
        }
        ZooName::MaxMinus1Odd => {
            utriv_entries(&mut e);
            let p = (mu - 1) / 2;
            for xi in 2..=p + 1 {
                e.push((xi, xi + p, 1, 1));
                e.push((xi + p, xi, 1, -1));
            }
            ((m, m, m), e)
        }
        ZooName::Strassen => {
            let q = size as u32;
            for j in 1..=q {
                e.push((1, j + 1, j, 1));
                e.push((j + 1, 1, j, 1));
            }
            ((size + 1, size + 1, size), e)
        }
        ZooName::CwSmall => {
            let q = size as u32;
            for j in 1..=q {
                e.push((1, j + 1, j + 1, 1));
                e.push((j + 1, 1, j + 1, 1));
                e.push((j + 1, j + 1, 1, 1));
            }
            ((m, m, m), e)
        }
        ZooName::McISym => {
            e.push((1, 1, 1, 1));
            for rho in 2..=mu {
                e.push((1, rho, rho, 1));
                e.push((rho, 1, rho, 1));
                e.push((rho, rho, 1, 1));
            }
            ((m, m, m), e)
        }
        ZooName::Skew3 => {
            // a ∧ b ∧ c: signs of the six permutations.
            e.extend([
                (1, 2, 3, 1),
                (2, 3, 1, 1),
                (3, 1, 2, 1),
                (1, 3, 2, -1),
                (3, 2, 1, -1),
                (2, 1, 3, -1),
            ]);
            ((3, 3, 3), e)
        }
    }
}

/// Construct a named tensor in its standard presentation.
pub fn construct(name: ZooName, size: usize) -> Result<ZooEntry, ZooError> {
    let (expected, provenance) = expected_sym_dim(name, size)?;
    let (dims, raw) = entry_list(name, size);
    let tensor = Tensor3::from_entries(
        dims,
        raw.into_iter().map(|(i, j, k, v)| (i, j, k, rat(v))),
    )
    .unwrap_or_else(|e| panic!("zoo constructor produced an invalid entry list: {e}"));
    Ok(ZooEntry { name, size, tensor, expected_sym_dim: expected, provenance })
}

/// The big Coppersmith–Winograd tensor in its usual presentation, related
/// to [`ZooName::CwBig`]'s classification coordinates by the swap
/// `c₁ ↔ c_m` (m = q + 2).
pub fn cw_big_usual(q: usize) -> Result<Tensor3, ZooError> {
    let entry = construct(ZooName::CwBig, q)?;
    let m = (q + 2) as u32;
    let swap = |k: u32| match k {
        1 => m,
        k if k == m => 1,
        k => k,
    };
    let entries: Vec<(u32, u32, u32, crate::exact_arith::Rational)> = entry
        .tensor
        .entries()
        .map(|(&(i, j, k), v)| (i, j, swap(k), v.clone()))
        .collect();
    Ok(Tensor3::from_entries(entry.tensor.dims(), entries).expect("permutation keeps entries valid"))
}

/// Exact samplers for the presented parametric families of `g̃_T`.
///
/// Every function draws random small-integer parameter values and emits
/// triples that annihilate the corresponding tensor *exactly*; the
/// families match the presented generic form of `g̃_T`, so the samples
/// also exercise each display's derived couplings (trace conditions,
/// shared blocks, forced sign patterns).
pub mod presentations {
    use alloc::vec::Vec;

    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    use super::ZooName;
    use crate::exact_arith::{Mat, Rational, Ring};
    use crate::symmetry::LieTriple;

    fn ri(rng: &mut ChaCha12Rng) -> Rational {
        Rational::from_integer(BigInt::from(rng.gen_range(-4i64..=4)))
    }

    fn rvec(rng: &mut ChaCha12Rng, n: usize) -> Vec<Rational> {
        (0..n).map(|_| ri(rng)).collect()
    }

    fn rmat(rng: &mut ChaCha12Rng, r: usize, c: usize) -> Mat<Rational> {
        let data: Vec<Rational> = (0..r * c).map(|_| ri(rng)).collect();
        Mat::from_fn(r, c, |i, j| data[i * c + j].clone())
    }

    /// A − Aᵗ ∈ so(n).
    fn so_sample(rng: &mut ChaCha12Rng, n: usize) -> Mat<Rational> {
        let a = rmat(rng, n, n);
        a.sub(&a.transpose())
    }

    /// `[[A, B], [C, −Aᵗ]]` with B, C symmetric ∈ sp(n) for
    /// `J = [[0, I], [−I, 0]]`; `n` must be even.
    fn sp_sample(rng: &mut ChaCha12Rng, n: usize) -> Mat<Rational> {
        assert!(n % 2 == 0, "sp(n) needs even n");
        let h = n / 2;
        let a = rmat(rng, h, h);
        let b0 = rmat(rng, h, h);
        let b = b0.add(&b0.transpose());
        let c0 = rmat(rng, h, h);
        let c = c0.add(&c0.transpose());
        Mat::from_fn(n, n, |r, col| {
            match (r < h, col < h) {
                (true, true) => a.get(r, col).clone(),
                (true, false) => b.get(r, col - h).clone(),
                (false, true) => c.get(r - h, col).clone(),
                (false, false) => a.get(col - h, r - h).neg_ref(),
            }
        })
    }

    /// `J·x` for `J = [[0, I], [−I, 0]]` on an even-length vector.
    fn jmul(x: &[Rational]) -> Vec<Rational> {
        let h = x.len() / 2;
        x[h..].iter().cloned().chain(x[..h].iter().map(|v| v.neg_ref())).collect()
    }

    fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect()
    }

    fn neg_vec(a: &[Rational]) -> Vec<Rational> {
        a.iter().map(|v| v.neg_ref()).collect()
    }

    fn set_row(m: &mut Mat<Rational>, row: usize, start: usize, vals: &[Rational]) {
        for (idx, v) in vals.iter().enumerate() {
            m.set(row, start + idx, v.clone());
        }
    }

    fn set_col(m: &mut Mat<Rational>, col: usize, start: usize, vals: &[Rational]) {
        for (idx, v) in vals.iter().enumerate() {
            m.set(start + idx, col, v.clone());
        }
    }

    /// `m[r0.., c0..] += b`.
    fn add_block(m: &mut Mat<Rational>, r0: usize, c0: usize, b: &Mat<Rational>) {
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                let v = m.get(r0 + r, c0 + c).add_ref(b.get(r, c));
                m.set(r0 + r, c0 + c, v);
            }
        }
    }

    /// `g̃_{T_0}`: `U = [[−(μ+ν), u], [0, Ū]]`, `V = μ·Id + V̄`,
    /// `W = ν·Id − V̄ᵗ` with `Ū, V̄` arbitrary.
    fn sample_t0(rng: &mut ChaCha12Rng, m: usize) -> LieTriple {
        let mu = ri(rng);
        let nu = ri(rng);
        let uvec = rvec(rng, m - 1);
        let ubar = rmat(rng, m - 1, m - 1);
        let vbar = rmat(rng, m, m);
        let mut u = Mat::zero(m, m);
        u.set(0, 0, mu.add_ref(&nu).neg_ref());
        set_row(&mut u, 0, 1, &uvec);
        add_block(&mut u, 1, 1, &ubar);
        let v = Mat::scalar(m, &mu).add(&vbar);
        let w = Mat::scalar(m, &nu).sub(&vbar.transpose());
        LieTriple { u, v, w }
    }

    /// `g̃_{T_utriv}`: scalars λ, μ, ν and vectors u, v free,
    /// `W̄ ∈ sl(m−1)` shared; the lower-right blocks of U and V are
    /// `−(μ+ν)Id − W̄ᵗ` and `−(λ+ν)Id − W̄ᵗ`, and `W` carries
    /// `[−λ−μ; −uᵗ−vᵗ | ν·Id + W̄]`.
    fn sample_utriv(rng: &mut ChaCha12Rng, m: usize) -> LieTriple {
        let (lam, mu, nu) = (ri(rng), ri(rng), ri(rng));
        let uvec = rvec(rng, m - 1);
        let vvec = rvec(rng, m - 1);
        // W̄ ∈ sl(m−1): shift the diagonal by −tr/(m−1).
        let wraw = rmat(rng, m - 1, m - 1);
        let tr = (0..m - 1).fold(<Rational as Ring>::zero(), |acc, i| {
            acc.add_ref(wraw.get(i, i))
        });
        let shift = tr / Rational::from_integer(BigInt::from((m - 1) as i64));
        let wbar = wraw.sub(&Mat::scalar(m - 1, &shift));

        let mut u = Mat::zero(m, m);
        u.set(0, 0, lam.clone());
        set_row(&mut u, 0, 1, &uvec);
        add_block(
            &mut u,
            1,
            1,
            &Mat::scalar(m - 1, &mu.add_ref(&nu).neg_ref()).sub(&wbar.transpose()),
        );
        let mut v = Mat::zero(m, m);
        v.set(0, 0, mu.clone());
        set_row(&mut v, 0, 1, &vvec);
        add_block(
            &mut v,
            1,
            1,
            &Mat::scalar(m - 1, &lam.add_ref(&nu).neg_ref()).sub(&wbar.transpose()),
        );
        let mut w = Mat::zero(m, m);
        w.set(0, 0, lam.add_ref(&mu).neg_ref());
        set_col(&mut w, 0, 1, &neg_vec(&add_vec(&uvec, &vvec)));
        add_block(&mut w, 1, 1, &Mat::scalar(m - 1, &nu).add(&wbar));
        LieTriple { u, v, w }
    }

    /// The scalar web shared by the CW-like families: five free scalars
    /// and the five derived ones.
    #[allow(clippy::type_complexity)]
    fn scalars_cw_like(
        rng: &mut ChaCha12Rng,
    ) -> (Rational, Rational, Rational, Rational, Rational, Rational, Rational, Rational, Rational, Rational)
    {
        let (u11, v11, w, u1m, v1m) = (ri(rng), ri(rng), ri(rng), ri(rng), ri(rng));
        let w11 = u11.add_ref(&v11).neg_ref();
        let u = v11.add_ref(&w).neg_ref();
        let v = u11.add_ref(&w).neg_ref();
        let wmm = u.add_ref(&v).neg_ref();
        let wm1 = u1m.add_ref(&v1m).neg_ref();
        (u11, v11, w, u1m, v1m, w11, u, v, wmm, wm1)
    }

    /// `g̃` of the big CW tensor: free vectors x, y, z with the couplings
    /// `U[mid, m] = −(y+z)`, `V[mid, m] = −(x+z)`, `W[mid, 1] = −(x+y)`,
    /// and a shared `Z ∈ so(m−2)` in all three middle blocks.
    fn sample_cw_big(rng: &mut ChaCha12Rng, m: usize) -> LieTriple {
        let n = m - 2;
        let (u11, v11, wsc, u1m, v1m, w11, usc, vsc, wmm, wm1) = scalars_cw_like(rng);
        let x = rvec(rng, n);
        let y = rvec(rng, n);
        let z = rvec(rng, n);
        let zmat = so_sample(rng, n);

        let mut u = Mat::zero(m, m);
        u.set(0, 0, u11.clone());
        set_row(&mut u, 0, 1, &x);
        u.set(0, m - 1, u1m);
        add_block(&mut u, 1, 1, &Mat::scalar(n, &usc).add(&zmat));
        set_col(&mut u, m - 1, 1, &neg_vec(&add_vec(&y, &z)));
        u.set(m - 1, m - 1, v11.add_ref(&wmm).neg_ref());

        let mut v = Mat::zero(m, m);
        v.set(0, 0, v11);
        set_row(&mut v, 0, 1, &y);
        v.set(0, m - 1, v1m);
        add_block(&mut v, 1, 1, &Mat::scalar(n, &vsc).add(&zmat));
        set_col(&mut v, m - 1, 1, &neg_vec(&add_vec(&x, &z)));
        v.set(m - 1, m - 1, u11.add_ref(&wmm).neg_ref());

        let mut w = Mat::zero(m, m);
        w.set(0, 0, w11);
        set_col(&mut w, 0, 1, &neg_vec(&add_vec(&x, &y)));
        add_block(&mut w, 1, 1, &Mat::scalar(n, &wsc).add(&zmat));
        w.set(m - 1, 0, wm1);
        set_row(&mut w, m - 1, 1, &z);
        w.set(m - 1, m - 1, wmm);
        LieTriple { u, v, w }
    }

    /// `g̃_{T_max,even}`: the CW scalar web, shared `Z ∈ sp(m−2)` with
    /// `−Zᵗ` in W, free vectors xU, xV, cU, and the derived couplings
    /// `cV = cU + J(xU+xV)`, `W[mid,1] = −(xU+xV)`, `W[m,mid] = −(cU+J·xV)ᵗ`.
    fn sample_max_even(rng: &mut ChaCha12Rng, m: usize) -> LieTriple {
        let n = m - 2;
        let (u11, v11, wsc, u1m, v1m, w11, usc, vsc, wmm, wm1) = scalars_cw_like(rng);
        let x_u = rvec(rng, n);
        let x_v = rvec(rng, n);
        let c_u = rvec(rng, n);
        let zmat = sp_sample(rng, n);
        let c_v = add_vec(&c_u, &jmul(&add_vec(&x_u, &x_v)));

        let mut u = Mat::zero(m, m);
        u.set(0, 0, u11.clone());
        set_row(&mut u, 0, 1, &x_u);
        u.set(0, m - 1, u1m);
        add_block(&mut u, 1, 1, &Mat::scalar(n, &usc).add(&zmat));
        set_col(&mut u, m - 1, 1, &c_u);
        u.set(m - 1, m - 1, v11.add_ref(&wmm).neg_ref());

        let mut v = Mat::zero(m, m);
        v.set(0, 0, v11);
        set_row(&mut v, 0, 1, &x_v);
        v.set(0, m - 1, v1m);
        add_block(&mut v, 1, 1, &Mat::scalar(n, &vsc).add(&zmat));
        set_col(&mut v, m - 1, 1, &c_v);
        v.set(m - 1, m - 1, u11.add_ref(&wmm).neg_ref());

        let mut w = Mat::zero(m, m);
        w.set(0, 0, w11);
        set_col(&mut w, 0, 1, &neg_vec(&add_vec(&x_u, &x_v)));
        add_block(&mut w, 1, 1, &Mat::scalar(n, &wsc).sub(&zmat.transpose()));
        w.set(m - 1, 0, wm1);
        set_row(&mut w, m - 1, 1, &neg_vec(&add_vec(&c_u, &jmul(&x_v))));
        w.set(m - 1, m - 1, wmm);
        LieTriple { u, v, w }
    }

    /// `g̃_{T_max,odd,skew}`: the `max_even` core on coordinates `3..m−1`
    /// plus the second coordinate's scalars and the free couplings
    /// u12, u2m, v12 with `v2m = u2m + v12 − u12`, `W[2,1] = −(u12+v12)`,
    /// `W[m,2] = −(v12+u2m)`.
    fn sample_max_odd_skew(rng: &mut ChaCha12Rng, m: usize) -> LieTriple {
        let n = m - 3;
        let (u11, v11, wsc, u1m, v1m, w11, usc, vsc, wmm, wm1) = scalars_cw_like(rng);
        let (u12, u2m, v12) = (ri(rng), ri(rng), ri(rng));
        let x_u = rvec(rng, n);
        let x_v = rvec(rng, n);
        let c_u = rvec(rng, n);
        let zmat = sp_sample(rng, n);
        let c_v = add_vec(&c_u, &jmul(&add_vec(&x_u, &x_v)));

        let mut u = Mat::zero(m, m);
        u.set(0, 0, u11.clone());
        u.set(0, 1, u12.clone());
        set_row(&mut u, 0, 2, &x_u);
        u.set(0, m - 1, u1m);
        u.set(1, 1, usc.clone());
        u.set(1, m - 1, u2m.clone());
        add_block(&mut u, 2, 2, &Mat::scalar(n, &usc).add(&zmat));
        set_col(&mut u, m - 1, 2, &c_u);
        u.set(m - 1, m - 1, v11.add_ref(&wmm).neg_ref());

        let mut v = Mat::zero(m, m);
        v.set(0, 0, v11.clone());
        v.set(0, 1, v12.clone());
        set_row(&mut v, 0, 2, &x_v);
        v.set(0, m - 1, v1m);
        v.set(1, 1, vsc.clone());
        v.set(1, m - 1, u2m.add_ref(&v12).sub_ref(&u12));
        add_block(&mut v, 2, 2, &Mat::scalar(n, &vsc).add(&zmat));
        set_col(&mut v, m - 1, 2, &c_v);
        v.set(m - 1, m - 1, u11.add_ref(&wmm).neg_ref());

        let mut w = Mat::zero(m, m);
        w.set(0, 0, w11);
        w.set(1, 0, u12.add_ref(&v12).neg_ref());
        w.set(1, 1, wsc.clone());
        set_col(&mut w, 0, 2, &neg_vec(&add_vec(&x_u, &x_v)));
        add_block(&mut w, 2, 2, &Mat::scalar(n, &wsc).sub(&zmat.transpose()));
        w.set(m - 1, 0, wm1);
        w.set(m - 1, 1, v12.add_ref(&u2m).neg_ref());
        set_row(&mut w, m - 1, 2, &neg_vec(&add_vec(&c_u, &jmul(&x_v))));
        w.set(m - 1, m - 1, wmm);
        LieTriple { u, v, w }
    }

    /// `g̃_{T_max−1,odd}`: `U = λId + [[0, r], [0, B]]`,
    /// `V = μId + [[0, −r], [0, B]]`, `W = νId + [[0, −rΛ], [0, −Bᵗ]]`
    /// with `λ+μ+ν = 0` and `BΛ + ΛBᵗ = 0` for `Λ = [[0, I_p], [−I_p, 0]]`.
    fn sample_max_minus1_odd(rng: &mut ChaCha12Rng, m: usize) -> LieTriple {
        let n = m - 1;
        let p = n / 2;
        let lam = ri(rng);
        let mu = ri(rng);
        let nu = lam.add_ref(&mu).neg_ref();
        let r = rvec(rng, n);
        let b = sp_sample(rng, n);
        // rΛ for Λ = [[0, I_p], [−I_p, 0]]: concat(−r[p..], r[..p]).
        let r_lam: Vec<Rational> = r[p..]
            .iter()
            .map(|v| v.neg_ref())
            .chain(r[..p].iter().cloned())
            .collect();

        let mut u = Mat::scalar(m, &lam);
        set_row(&mut u, 0, 1, &r);
        add_block(&mut u, 1, 1, &b);
        let mut v = Mat::scalar(m, &mu);
        set_row(&mut v, 0, 1, &neg_vec(&r));
        add_block(&mut v, 1, 1, &b);
        let mut w = Mat::scalar(m, &nu);
        set_row(&mut w, 0, 1, &neg_vec(&r_lam));
        add_block(&mut w, 1, 1, &b.transpose().neg());
        LieTriple { u, v, w }
    }

    /// `g̃_{T_str,q}`: `U = λId + [[0, y], [0, X]]`,
    /// `V = μId + [[0, −y], [0, X]]`, `W = νId − Xᵗ`, `λ+μ+ν = 0`,
    /// `X ∈ gl(q)` free.
    fn sample_strassen(rng: &mut ChaCha12Rng, q: usize) -> LieTriple {
        let lam = ri(rng);
        let mu = ri(rng);
        let nu = lam.add_ref(&mu).neg_ref();
        let y = rvec(rng, q);
        let x = rmat(rng, q, q);
        let mut u = Mat::scalar(q + 1, &lam);
        set_row(&mut u, 0, 1, &y);
        add_block(&mut u, 1, 1, &x);
        let mut v = Mat::scalar(q + 1, &mu);
        set_row(&mut v, 0, 1, &neg_vec(&y));
        add_block(&mut v, 1, 1, &x);
        let w = Mat::scalar(q, &nu).sub(&x.transpose());
        LieTriple { u, v, w }
    }

    /// `g̃` of the small CW tensor: `U = diag(−μ−ν, λId + X)` and cyclic,
    /// `X ∈ so(q)` shared, λ, μ, ν free.
    fn sample_cw_small(rng: &mut ChaCha12Rng, q: usize) -> LieTriple {
        let (lam, mu, nu) = (ri(rng), ri(rng), ri(rng));
        let x = so_sample(rng, q);
        let blk = |s: Rational, d: &Rational, x: &Mat<Rational>| {
            let mut m = Mat::zero(q + 1, q + 1);
            m.set(0, 0, s);
            add_block(&mut m, 1, 1, &Mat::scalar(q, d).add(x));
            m
        };
        LieTriple {
            u: blk(mu.add_ref(&nu).neg_ref(), &lam, &x),
            v: blk(lam.add_ref(&nu).neg_ref(), &mu, &x),
            w: blk(lam.add_ref(&mu).neg_ref(), &nu, &x),
        }
    }

    /// `g̃_{T_mcIsym}`: `(λId + diag(0, Z), μId + diag(0, Z), νId +
    /// diag(0, Z))` with `λ+μ+ν = 0` and `Z ∈ so(m−1)` shared.
    fn sample_mc_i_sym(rng: &mut ChaCha12Rng, m: usize) -> LieTriple {
        let lam = ri(rng);
        let mu = ri(rng);
        let nu = lam.add_ref(&mu).neg_ref();
        let z = so_sample(rng, m - 1);
        let blk = |s: &Rational| {
            let mut mat = Mat::scalar(m, s);
            add_block(&mut mat, 1, 1, &z);
            mat
        };
        LieTriple { u: blk(&lam), v: blk(&mu), w: blk(&nu) }
    }

    /// Random samples of the presented family for a name, or `None` when no
    /// parametric display exists (`rank_one`, `skew3`).  Deterministic in
    /// `seed`.
    pub fn samples(
        name: ZooName,
        size: usize,
        n_samples: usize,
        seed: u64,
    ) -> Option<Vec<LieTriple>> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(n_samples);
        for _ in 0..n_samples {
            let sample = match name {
                ZooName::T0 => sample_t0(&mut rng, size),
                ZooName::Utriv => sample_utriv(&mut rng, size),
                ZooName::CwBig => sample_cw_big(&mut rng, size + 2),
                ZooName::MaxEven => sample_max_even(&mut rng, size),
                ZooName::MaxOddSkew => sample_max_odd_skew(&mut rng, size),
                ZooName::MaxMinus1Odd => sample_max_minus1_odd(&mut rng, size),
                ZooName::Strassen => sample_strassen(&mut rng, size),
                ZooName::CwSmall => sample_cw_small(&mut rng, size),
                ZooName::McISym => sample_mc_i_sym(&mut rng, size),
                ZooName::RankOne | ZooName::Skew3 => return None,
            };
            out.push(sample);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{Mat, Mode};
    use crate::symmetry::{family_membership, symmetry_report};
    use crate::tensor::BasisTriple;
    use num_traits::Signed;

    #[test]
    fn listing_is_complete() {
        let l = list();
        assert_eq!(l.len(), 11);
        assert!(l.iter().any(|(n, _)| *n == ZooName::CwBig));
        assert!(l.iter().any(|(n, c)| *n == ZooName::Skew3 && c.contains('3')));
    }

    #[test]
    fn name_strings_roundtrip() {
        for name in ZooName::ALL {
            assert_eq!(ZooName::parse(name.as_str()), Some(name));
        }
        assert_eq!(ZooName::parse("nonsense"), None);
    }

    #[test]
    fn all_entries_are_signs() {
        let sizes = [
            (ZooName::RankOne, 4),
            (ZooName::T0, 4),
            (ZooName::Utriv, 4),
            (ZooName::CwBig, 2),
            (ZooName::MaxEven, 6),
            (ZooName::MaxOddSkew, 5),
            (ZooName::MaxMinus1Odd, 5),
            (ZooName::Strassen, 3),
            (ZooName::CwSmall, 3),
            (ZooName::McISym, 4),
            (ZooName::Skew3, 3),
        ];
        for (name, size) in sizes {
            let entry = construct(name, size).unwrap();
            for (_, v) in entry.tensor.entries() {
                assert!(v.abs() == rat(1), "{name}: entry {v} is not ±1");
            }
        }
    }

    #[test]
    fn dims_follow_the_definitions() {
        assert_eq!(construct(ZooName::CwBig, 3).unwrap().tensor.dims(), (5, 5, 5));
        assert_eq!(construct(ZooName::Strassen, 3).unwrap().tensor.dims(), (4, 4, 3));
        assert_eq!(construct(ZooName::CwSmall, 3).unwrap().tensor.dims(), (4, 4, 4));
        assert_eq!(construct(ZooName::Skew3, 3).unwrap().tensor.dims(), (3, 3, 3));
    }

    #[test]
    fn invalid_sizes_are_rejected() {
        assert!(construct(ZooName::MaxEven, 5).is_err());
        assert!(construct(ZooName::MaxEven, 2).is_err());
        assert!(construct(ZooName::MaxOddSkew, 6).is_err());
        assert!(construct(ZooName::MaxOddSkew, 3).is_err());
        assert!(construct(ZooName::Skew3, 4).is_err());
        assert!(construct(ZooName::Strassen, 1).is_err());
        assert!(construct(ZooName::CwSmall, 1).is_err());
        assert!(construct(ZooName::McISym, 2).is_err());
    }

    #[test]
    fn provenance_thresholds() {
        assert_eq!(construct(ZooName::CwBig, 12).unwrap().provenance, Provenance::TheoremExact);
        assert_eq!(
            construct(ZooName::CwBig, 11).unwrap().provenance,
            Provenance::PresentationExact
        );
        assert_eq!(construct(ZooName::MaxEven, 14).unwrap().provenance, Provenance::TheoremExact);
        assert_eq!(construct(ZooName::Skew3, 3).unwrap().provenance, Provenance::PaperExample);
    }

    #[test]
    fn formulas_match_computation_at_small_sizes() {
        for (name, size) in [
            (ZooName::RankOne, 3),
            (ZooName::T0, 3),
            (ZooName::Utriv, 3),
            (ZooName::CwBig, 1),
            (ZooName::Strassen, 2),
            (ZooName::CwSmall, 2),
            (ZooName::McISym, 3),
            (ZooName::Skew3, 3),
        ] {
            let entry = construct(name, size).unwrap();
            let rep = symmetry_report(&entry.tensor, Mode::Exact, 0);
            assert_eq!(
                rep.sym_dim,
                entry.expected_sym_dim as i64,
                "{name} at size {size}"
            );
        }
    }

    #[test]
    fn cw_big_usual_is_a_c_permutation() {
        let q = 2;
        let entry = construct(ZooName::CwBig, q).unwrap();
        let usual = cw_big_usual(q).unwrap();
        let m = q + 2;
        // The permutation matrix swapping c₁ ↔ c_m.
        let mut p = Mat::<crate::exact_arith::Rational>::zero(m, m);
        for i in 0..m {
            let j = if i == 0 { m - 1 } else if i == m - 1 { 0 } else { i };
            p.set(i, j, rat(1));
        }
        let g = BasisTriple { x: Mat::identity(m), y: Mat::identity(m), z: p };
        assert_eq!(entry.tensor.apply_triple(&g).unwrap(), usual);
        let a = symmetry_report(&entry.tensor, Mode::Exact, 0).sym_dim;
        let b = symmetry_report(&usual, Mode::Exact, 0).sym_dim;
        assert_eq!(a, b);
    }

    #[test]
    fn presentation_samples_annihilate_small_fixtures() {
        for (name, size) in [
            (ZooName::T0, 4),
            (ZooName::Utriv, 4),
            (ZooName::Strassen, 3),
            (ZooName::CwSmall, 3),
        ] {
            let entry = construct(name, size).unwrap();
            let samples = presentations::samples(name, size, 3, 17).unwrap();
            assert!(family_membership(&entry.tensor, &samples), "{name} display fails");
        }
    }

    #[test]
    fn strassen_presentation_spans_the_whole_algebra() {
        // The display has q² + q + 2 free parameters (λ, μ, y, X), exactly
        // dim g̃; enough generic samples must therefore span the kernel.
        let q = 3;
        let entry = construct(ZooName::Strassen, q).unwrap();
        let rep = symmetry_report(&entry.tensor, Mode::Exact, 0);
        let samples = presentations::samples(ZooName::Strassen, q, rep.tilde_dim + 4, 5).unwrap();
        let rows: alloc::vec::Vec<alloc::vec::Vec<crate::exact_arith::Rational>> =
            samples.iter().map(|l| l.to_flat()).collect();
        let stacked = Mat::from_rows(&rows);
        assert_eq!(stacked.rank_exact(), rep.tilde_dim);
    }
}
