//! Brute-force matrix models of tame Weil–Deligne representations.
//!
//! `G = ⟨τ, φ | φτφ⁻¹ = τ^q, τ^M = 1⟩` is a finite-inertia quotient of the
//! tame Weil group of `F` and `H ⊂ G` the image of `W_E`. The dictionary with
//! characters of `F^×` and `E^×` uses only the two functorialities of class
//! field theory: restriction corresponds to the norm and transfer to the
//! inclusion `F^× ⊂ E^×`. Both are asserted by [`Model::check_functoriality`].
#![allow(dead_code)]

use asai_periods::cyclo::AlgNumber;
use asai_periods::localfield::{Extension, ExtensionKind, Field, LocalField, MultChar, RamifiedClass};
use asai_periods::weildeligne::{Atom, WDRep};

pub type Mat = Vec<Vec<AlgNumber>>;

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![AlgNumber::zero(); c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = AlgNumber::one();
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = zeros(r, c);
    for i in 0..r {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..c {
                if !b[l][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    out
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect())
        .collect()
}

pub fn scale(a: &Mat, s: &AlgNumber) -> Mat {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn mat_pow(a: &Mat, e: u64) -> Mat {
    let mut out = identity(a.len());
    for _ in 0..e {
        out = mat_mul(&out, a);
    }
    out
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

pub fn block_diag(blocks: &[Mat]) -> Mat {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut out = zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                out[off + i][off + j] = x.clone();
            }
        }
        off += b.len();
    }
    out
}

/// Reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &Mat) -> usize {
    rref(&mut m.clone()).len()
}

/// Kernel basis as columns, each with a 1 in its own free coordinate.
pub fn kernel(m: &Mat) -> (Mat, Vec<usize>) {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = zeros(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis[f][k] = AlgNumber::one();
        for (i, &p) in pivots.iter().enumerate() {
            basis[p][k] = -r[i][f].clone();
        }
    }
    (basis, free)
}

/// Element `τ^a φ^b` of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Elem {
    pub a: u64,
    pub b: u64,
}

#[derive(Clone, Copy, Debug)]
pub enum Kind {
    /// `H = ⟨τ, φ²⟩`, coset representative `φ`.
    Unramified,
    /// `H = ⟨τ², τ^j φ⟩`, coset representative `τ`.
    Ramified { j: u64, log_c: u64 },
}

#[derive(Clone, Debug)]
pub struct Model {
    pub base: LocalField,
    pub ext: Extension,
    pub q: u64,
    pub m: u64,
    pub kind: Kind,
}

/// A representation of `G`, given on `τ`, `φ`, with monodromy.
#[derive(Clone, Debug)]
pub struct GRep {
    pub tau: Mat,
    pub phi: Mat,
    pub n: Mat,
}

/// A representation of `H` on its generators `t`, `s`, with monodromy.
#[derive(Clone, Debug)]
pub struct HRep {
    pub t: Mat,
    pub s: Mat,
    pub n: Mat,
}

impl Model {
    /// `alternate` selects the other Frobenius `s ∈ W_E` (uniformizer `-ϖ_E`).
    pub fn new(ext: Extension, alternate: bool) -> Self {
        let base = ext.base();
        let q = base.q();
        match ext.kind() {
            ExtensionKind::Unramified => Model {
                base,
                ext,
                q,
                m: q * q - 1,
                kind: Kind::Unramified,
            },
            ExtensionKind::Ramified(c) => {
                let log_c = match c {
                    RamifiedClass::Square => 0,
                    RamifiedClass::NonSquare => 1,
                };
                let m = 2 * (q - 1);
                // Art_F(-c) = τ^{log(-c)}
                let mut j = ((q - 1) / 2 + log_c) % (q - 1);
                if alternate {
                    j += q - 1;
                }
                Model {
                    base,
                    ext,
                    q,
                    m,
                    kind: Kind::Ramified { j, log_c },
                }
            }
        }
    }

    fn qpow(&self, b: u64) -> u64 {
        let mut r = 1u64;
        for _ in 0..b {
            r = r * self.q % self.m;
        }
        r
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        Elem {
            a: (x.a + y.a * self.qpow(x.b)) % self.m,
            b: x.b + y.b,
        }
    }

    pub fn tau(&self) -> Elem {
        Elem { a: 1, b: 0 }
    }

    pub fn phi(&self) -> Elem {
        Elem { a: 0, b: 1 }
    }

    pub fn coset_rep(&self) -> Elem {
        match self.kind {
            Kind::Unramified => self.phi(),
            Kind::Ramified { .. } => self.tau(),
        }
    }

    /// `|x|` as a power of `q^{-1}`.
    pub fn abs_exp(&self, x: Elem) -> u64 {
        x.b
    }

    /// `x = t^i s^k` when `x ∈ H`.
    pub fn h_coords(&self, x: Elem) -> Option<(u64, u64)> {
        match self.kind {
            Kind::Unramified => x.b.is_multiple_of(2).then_some((x.a, x.b / 2)),
            Kind::Ramified { j, .. } => {
                let s_b: u64 = (0..x.b).map(|i| self.qpow(i)).sum::<u64>() % self.m;
                let r = (x.a + self.m * 4 - (j * s_b) % self.m) % self.m;
                r.is_multiple_of(2).then_some(((r / 2) % (self.q - 1), x.b))
            }
        }
    }

    /// `g r_i = r_{π(i)} h_i` for coset representatives `r_0 = 1`, `r_1`.
    fn coset_action(&self, g: Elem) -> [(usize, (u64, u64)); 2] {
        let r = self.coset_rep();
        let reps = [Elem { a: 0, b: 0 }, r];
        let mut out = [(0, (0, 0)); 2];
        for (i, ri) in reps.iter().enumerate() {
            let x = self.mul(g, *ri);
            out[i] = match self.h_coords(x) {
                Some(h) => (0, h),
                None => {
                    // r^{-1} x, using r^{-1} = τ^{-1} or φ^{-1}
                    let y = match self.kind {
                        Kind::Ramified { .. } => Elem {
                            a: (x.a + self.m - 1) % self.m,
                            b: x.b,
                        },
                        Kind::Unramified => {
                            // φ^{-1} τ^a φ^b = τ^{a q^{-1}} φ^{b-1}
                            let qinv = self.qpow(1); // q² = 1 mod q²-1
                            Elem {
                                a: x.a * qinv % self.m,
                                b: x.b - 1,
                            }
                        }
                    };
                    (1, self.h_coords(y).expect("second coset"))
                }
            };
        }
        out
    }

    pub fn h_eval(&self, rho: &HRep, (i, k): (u64, u64)) -> Mat {
        mat_mul(&mat_pow(&rho.t, i), &mat_pow(&rho.s, k))
    }

    pub fn g_eval(&self, rho: &GRep, x: Elem) -> Mat {
        mat_mul(&mat_pow(&rho.tau, x.a), &mat_pow(&rho.phi, x.b))
    }

    fn inv_abs_rep(&self) -> AlgNumber {
        // |r|^{-1} for the nontrivial coset representative
        match self.kind {
            Kind::Unramified => AlgNumber::from_int(self.q as i64),
            Kind::Ramified { .. } => AlgNumber::one(),
        }
    }

    pub fn induce(&self, rho: &HRep) -> GRep {
        let d = rho.t.len();
        let build = |g: Elem| {
            let act = self.coset_action(g);
            let mut m = zeros(2 * d, 2 * d);
            for (i, (pi, h)) in act.iter().enumerate() {
                let blk = self.h_eval(rho, *h);
                for r in 0..d {
                    for c in 0..d {
                        m[pi * d + r][i * d + c] = blk[r][c].clone();
                    }
                }
            }
            m
        };
        GRep {
            tau: build(self.tau()),
            phi: build(self.phi()),
            n: block_diag(&[rho.n.clone(), scale(&rho.n, &self.inv_abs_rep())]),
        }
    }

    /// Tensor (multiplicative) induction `⊗-Ind_H^G`.
    pub fn tensor_induce(&self, rho: &HRep) -> GRep {
        let d = rho.t.len();
        let build = |g: Elem| {
            let act = self.coset_action(g);
            let a0 = self.h_eval(rho, act[0].1);
            let a1 = self.h_eval(rho, act[1].1);
            // v_0 ⊗ v_1 ↦ (h_0 v_0 in slot π(0)) ⊗ (h_1 v_1 in slot π(1))
            let mut m = zeros(d * d, d * d);
            for i0 in 0..d {
                for i1 in 0..d {
                    for o0 in 0..d {
                        for o1 in 0..d {
                            let c = &a0[o0][i0] * &a1[o1][i1];
                            if c.is_zero() {
                                continue;
                            }
                            let (s0, s1) = if act[0].0 == 0 { (o0, o1) } else { (o1, o0) };
                            m[s0 * d + s1][i0 * d + i1] = c;
                        }
                    }
                }
            }
            m
        };
        let id = identity(d);
        GRep {
            tau: build(self.tau()),
            phi: build(self.phi()),
            n: mat_add(
                &kron(&rho.n, &id),
                &kron(&id, &scale(&rho.n, &self.inv_abs_rep())),
            ),
        }
    }

    fn f_char_values(&self, chi: &MultChar) -> (AlgNumber, AlgNumber) {
        let k = chi.tame_exponent() as i64;
        (
            AlgNumber::root_of_unity(k, (self.q - 1) as u32),
            chi.unram_value().clone(),
        )
    }

    fn e_char_values(&self, chi: &MultChar) -> (AlgNumber, AlgNumber) {
        let qe = chi.field().q();
        (
            AlgNumber::root_of_unity(chi.tame_exponent() as i64, (qe - 1) as u32),
            chi.unram_value().clone(),
        )
    }

    /// `sp(n)` weights: the vector `e_i` has Frobenius eigenvalue
    /// `(√q_L)^{1-n+2i}` and `N e_i = e_{i-1}`.
    fn sp(field: Field, n: u32) -> (Mat, Mat) {
        let n = n as usize;
        let mut frob = zeros(n, n);
        let mut mono = zeros(n, n);
        for i in 0..n {
            frob[i][i] = field.sqrt_q_pow(1 - n as i64 + 2 * i as i64);
            if i > 0 {
                mono[i - 1][i] = AlgNumber::one();
            }
        }
        (frob, mono)
    }

    pub fn f_atom(&self, chi: &MultChar, n: u32) -> GRep {
        let (t, u) = self.f_char_values(chi);
        let (frob, mono) = Self::sp(Field::Base(self.base), n);
        GRep {
            tau: scale(&identity(n as usize), &t),
            phi: scale(&frob, &u),
            n: mono,
        }
    }

    pub fn e_atom(&self, chi: &MultChar, n: u32) -> HRep {
        let (t, u) = self.e_char_values(chi);
        let (frob, mono) = Self::sp(Field::Ext(self.ext), n);
        HRep {
            t: scale(&identity(n as usize), &t),
            s: scale(&frob, &u),
            n: mono,
        }
    }

    pub fn g_sum(parts: &[GRep]) -> GRep {
        GRep {
            tau: block_diag(&parts.iter().map(|p| p.tau.clone()).collect::<Vec<_>>()),
            phi: block_diag(&parts.iter().map(|p| p.phi.clone()).collect::<Vec<_>>()),
            n: block_diag(&parts.iter().map(|p| p.n.clone()).collect::<Vec<_>>()),
        }
    }

    pub fn h_sum(parts: &[HRep]) -> HRep {
        HRep {
            t: block_diag(&parts.iter().map(|p| p.t.clone()).collect::<Vec<_>>()),
            s: block_diag(&parts.iter().map(|p| p.s.clone()).collect::<Vec<_>>()),
            n: block_diag(&parts.iter().map(|p| p.n.clone()).collect::<Vec<_>>()),
        }
    }

    /// Matrix realization of a parameter of `W_F` built from characters.
    pub fn realize_f(&self, rho: &WDRep) -> GRep {
        let parts: Vec<GRep> = rho
            .atoms()
            .iter()
            .map(|a| match a {
                Atom::CharSp { chi, n } => self.f_atom(chi, *n),
                Atom::Induced { ext, chi, n } => {
                    assert_eq!(*ext, self.ext, "induced from a different extension");
                    self.induce(&self.e_atom(chi, *n))
                }
                Atom::Opaque(_) => panic!("opaque atoms have no matrix model"),
            })
            .collect();
        Self::g_sum(&parts)
    }

    /// Matrix realization of a parameter of `W_E` built from characters.
    pub fn realize_e(&self, rho: &WDRep) -> HRep {
        let parts: Vec<HRep> = rho
            .atoms()
            .iter()
            .map(|a| match a {
                Atom::CharSp { chi, n } => self.e_atom(chi, *n),
                _ => panic!("only characters over E"),
            })
            .collect();
        Self::h_sum(&parts)
    }

    /// `ρ(g) N ρ(g)^{-1} = |g| N` on generators.
    pub fn check_monodromy(&self, rho: &GRep) -> bool {
        let qinv = AlgNumber::from_ratio(1, self.q as i64);
        mat_mul(&rho.tau, &rho.n) == mat_mul(&rho.n, &rho.tau)
            && mat_mul(&rho.phi, &rho.n) == scale(&mat_mul(&rho.n, &rho.phi), &qinv)
    }

    /// Restriction of `F`-characters is the norm, and transfer the inclusion.
    pub fn check_functoriality(&self) -> bool {
        let base = self.base;
        let e = self.ext;
        let mut ok = true;
        // characters of F pulled back to H agree with base change χ ∘ Nm
        for k in 0..(self.q - 1) as i64 {
            for u in [AlgNumber::one(), AlgNumber::from_int(-1), AlgNumber::root_of_unity(1, 3)] {
                let chi = MultChar::new(base, k, u).unwrap();
                let g = self.f_atom(&chi, 1);
                let bc = chi.base_change(e).unwrap();
                let h = self.e_atom(&bc, 1);
                // compare on t and s through G
                let (t_elem, s_elem) = self.h_generators();
                ok &= self.g_eval(&g, t_elem) == h.t && self.g_eval(&g, s_elem) == h.s;
            }
        }
        // transfer of E-characters equals restriction to F^×
        for k in 0..(e.base().q().pow(e.residue_degree()) - 1) as i64 {
            let chi = MultChar::new(e, k, AlgNumber::root_of_unity(1, 4)).unwrap();
            let h = self.e_atom(&chi, 1);
            let transfer = self.tensor_induce(&h);
            let r = chi.restrict(base).unwrap();
            let g = self.f_atom(&r, 1);
            ok &= transfer.tau == g.tau && transfer.phi == g.phi;
        }
        ok
    }

    fn h_generators(&self) -> (Elem, Elem) {
        match self.kind {
            Kind::Unramified => (Elem { a: 1, b: 0 }, Elem { a: 0, b: 2 }),
            Kind::Ramified { j, .. } => (Elem { a: 2, b: 0 }, Elem { a: j, b: 1 }),
        }
    }
}

/// Traces of `τ^a φ^b` on `ker N^j`, for `j = 1..=dim`, `a < M`, `b < 2·dim`.
pub fn graded_traces(model: &Model, rho: &GRep, bmax: u64) -> Vec<Vec<AlgNumber>> {
    let d = rho.tau.len();
    let mut out = Vec::new();
    let mut npow = identity(d);
    let taus: Vec<Mat> = (0..model.m).map(|a| mat_pow(&rho.tau, a)).collect();
    let phis: Vec<Mat> = (0..bmax).map(|b| mat_pow(&rho.phi, b)).collect();
    for _ in 0..d {
        npow = mat_mul(&npow, &rho.n);
        let (basis, free) = kernel(&npow);
        let mut row = Vec::new();
        for t in &taus {
            for p in &phis {
                let g = mat_mul(t, p);
                let img = mat_mul(&g, &basis);
                let mut tr = AlgNumber::zero();
                for (i, &f) in free.iter().enumerate() {
                    tr = &tr + &img[f][i];
                }
                row.push(tr);
            }
        }
        out.push(row);
    }
    out
}

/// Isomorphism of Frobenius-semisimple representations via graded traces.
pub fn equivalent(model: &Model, a: &GRep, b: &GRep) -> bool {
    if a.tau.len() != b.tau.len() {
        return false;
    }
    let bmax = 2 * a.tau.len() as u64;
    graded_traces(model, a, bmax) == graded_traces(model, b, bmax)
}

/// Jordan type of the nilpotent `N` from ranks of its powers.
pub fn jordan_type(n: &Mat) -> Vec<usize> {
    let d = n.len();
    let mut ranks = vec![d];
    let mut p = identity(d);
    for _ in 0..d {
        p = mat_mul(&p, n);
        ranks.push(rank(&p));
    }
    // number of blocks of size ≥ k is rank(N^{k-1}) - rank(N^k)
    let mut sizes = Vec::new();
    for k in 1..=d {
        let at_least = ranks[k - 1] - ranks[k];
        let at_least_next = if k < d { ranks[k] - ranks[k + 1] } else { 0 };
        for _ in 0..(at_least - at_least_next) {
            sizes.push(k);
        }
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}
