//! Numeric canonical representation for an arbitrary Coxeter matrix.
//!
//! Roots are coefficient vectors over the simple roots and group elements
//! are stored as the images of the simple roots. Everything is generic over
//! the floating-point [`Scalar`]; comparisons use [`Scalar::tolerance`].
//! Certified results belong to the exact engine in [`crate::typea`]; this
//! module exists to cross-check the general statements outside type A.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};
use crate::typea::Word;

/// Floating-point scalar used by the generic engine.
pub trait Scalar: Float + FloatConst + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Absolute tolerance for sign tests and equality.
    fn tolerance() -> Self;

    fn lit(v: f64) -> Self {
        Self::from(v).expect("literal representable in scalar type")
    }
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-8
    }
}

impl Scalar for f32 {
    fn tolerance() -> Self {
        1e-4
    }
}

/// Root cap used when the caller does not supply one.
pub const DEFAULT_ROOT_CAP: usize = 10_000;

/// A Coxeter matrix; `None` encodes `m(s,s') = ∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    size: usize,
    entries: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    /// Builds and validates a matrix from rows, reading `0` as `∞`.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::MalformedMatrix("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedMatrix(format!("row {} has {} entries", i + 1, row.len())));
            }
            entries.extend(row.iter().map(|&m| (m != 0).then_some(m)));
        }
        let matrix = CoxeterMatrix { size, entries };
        matrix.validate()?;
        Ok(matrix)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `m(s, s')` for 1-based generator indices.
    pub fn get(&self, s: usize, t: usize) -> Option<u32> {
        self.entries[(s - 1) * self.size + (t - 1)]
    }

    /// Rows with `∞` written as `0`.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.size).map(|row| row.iter().map(|m| m.unwrap_or(0)).collect()).collect()
    }

    pub fn validate(&self) -> Result<()> {
        for s in 1..=self.size {
            if self.get(s, s) != Some(1) {
                return Err(Error::MalformedMatrix(format!("m({s},{s}) must be 1")));
            }
            for t in 1..=self.size {
                if self.get(s, t) != self.get(t, s) {
                    return Err(Error::MalformedMatrix(format!("m({s},{t}) ≠ m({t},{s})")));
                }
                if s != t && matches!(self.get(s, t), Some(m) if m < 2) {
                    return Err(Error::MalformedMatrix(format!("m({s},{t}) must be ≥ 2 or ∞")));
                }
            }
        }
        Ok(())
    }

    fn with_entries(size: usize, entry: impl Fn(usize, usize) -> u32) -> Self {
        let rows: Vec<Vec<u32>> =
            (1..=size).map(|s| (1..=size).map(|t| if s == t { 1 } else { entry(s, t) }).collect()).collect();
        Self::from_rows(&rows).expect("well-formed by construction")
    }

    /// `A_n`: a path of 3-edges.
    pub fn type_a(n: usize) -> Self {
        Self::with_entries(n, |s, t| if s.abs_diff(t) == 1 { 3 } else { 2 })
    }

    /// `B_n` with the 4-edge between generators 1 and 2.
    pub fn type_b(n: usize) -> Self {
        Self::with_entries(n, |s, t| match (s.min(t), s.max(t)) {
            (1, 2) => 4,
            (a, b) if b == a + 1 => 3,
            _ => 2,
        })
    }

    /// Dihedral `I_2(m)`; `m = 0` gives the infinite dihedral group.
    pub fn dihedral(m: u32) -> Self {
        Self::with_entries(2, |_, _| m)
    }
}

/// A root as coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq)]
pub struct GenericRoot<T> {
    pub coefficients: Vec<T>,
}

impl<T: Scalar> GenericRoot<T> {
    pub fn simple(size: usize, s: usize) -> Self {
        let mut coefficients = vec![T::zero(); size];
        coefficients[s - 1] = T::one();
        GenericRoot { coefficients }
    }

    pub fn is_positive(&self) -> bool {
        let eps = T::tolerance();
        self.coefficients.iter().all(|&c| c >= -eps) && self.coefficients.iter().any(|&c| c > eps)
    }

    pub fn is_negative(&self) -> bool {
        self.neg().is_positive()
    }

    pub fn neg(&self) -> Self {
        GenericRoot { coefficients: self.coefficients.iter().map(|&c| -c).collect() }
    }

    /// The positive representative of `±self`.
    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        let eps = T::tolerance();
        self.coefficients.len() == other.coefficients.len()
            && self.coefficients.iter().zip(&other.coefficients).all(|(&a, &b)| (a - b).abs() <= eps)
    }

    fn axpy(&mut self, scale: T, other: &Self) {
        for (a, &b) in self.coefficients.iter_mut().zip(&other.coefficients) {
            *a = *a + scale * b;
        }
    }

    fn key(&self) -> Vec<i64> {
        let scale = 1.0 / T::tolerance().to_f64().unwrap_or(1e-8).max(1e-12) / 100.0;
        self.coefficients
            .iter()
            .map(|c| (c.to_f64().unwrap_or(f64::NAN) * scale).round() as i64)
            .collect()
    }
}

/// A Coxeter matrix with its tabulated bilinear form.
#[derive(Debug, Clone)]
pub struct GenericSystem<T> {
    matrix: CoxeterMatrix,
    form: Vec<T>,
}

impl<T: Scalar> GenericSystem<T> {
    /// Tabulates `B(α_s, α_t) = −cos(π / m(s,t))`, with `−1` for `m = ∞`.
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        matrix.validate()?;
        let n = matrix.size();
        let mut form = Vec::with_capacity(n * n);
        for s in 1..=n {
            for t in 1..=n {
                form.push(match matrix.get(s, t) {
                    Some(m) => -(T::PI() / T::lit(f64::from(m))).cos(),
                    None => -T::one(),
                });
            }
        }
        Ok(GenericSystem { matrix, form })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// `B(α_s, α_t)`, 1-based.
    pub fn form(&self, s: usize, t: usize) -> T {
        self.form[(s - 1) * self.size() + (t - 1)]
    }

    /// `B(v, α_s)`.
    fn pair_with_simple(&self, v: &GenericRoot<T>, s: usize) -> T {
        v.coefficients
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (k, &c)| acc + c * self.form(k + 1, s))
    }

    /// `B(u, v)`.
    pub fn bilinear(&self, u: &GenericRoot<T>, v: &GenericRoot<T>) -> T {
        (1..=self.size()).fold(T::zero(), |acc, s| acc + v.coefficients[s - 1] * self.pair_with_simple(u, s))
    }

    /// `s(v) = v − 2B(v, α_s) α_s`.
    pub fn reflect(&self, v: &GenericRoot<T>, s: usize) -> GenericRoot<T> {
        let mut out = v.clone();
        let two = T::lit(2.0);
        out.coefficients[s - 1] = out.coefficients[s - 1] - two * self.pair_with_simple(v, s);
        out
    }

    pub fn identity(&self) -> GenericElement<T> {
        GenericElement {
            simple_images: (1..=self.size()).map(|s| GenericRoot::simple(self.size(), s)).collect(),
            word: Word::default(),
        }
    }

    /// Evaluates a word; `w·s` has images `w(α_k) − 2B(α_k, α_s) w(α_s)`.
    pub fn evaluate_word(&self, word: &Word) -> Result<GenericElement<T>> {
        let mut element = self.identity();
        for &s in word.letters() {
            if s == 0 || s > self.size() {
                return Err(Error::GeneratorOutOfRange { index: s, rank: self.size() });
            }
            let image_s = element.simple_images[s - 1].clone();
            for k in 1..=self.size() {
                let scale = T::lit(-2.0) * self.form(k, s);
                element.simple_images[k - 1].axpy(scale, &image_s);
            }
        }
        element.word = word.clone();
        Ok(element)
    }

    pub fn compose(&self, x: &GenericElement<T>, y: &GenericElement<T>) -> GenericElement<T> {
        GenericElement {
            simple_images: y.simple_images.iter().map(|v| x.apply(v)).collect(),
            word: Word::new([x.word.letters(), y.word.letters()].concat()),
        }
    }

    pub fn inverse(&self, x: &GenericElement<T>) -> GenericElement<T> {
        self.evaluate_word(&x.word.reversed()).expect("word letters already validated")
    }

    /// Orbit of the simple roots under the simple reflections, positive
    /// half only. Fails once more than `cap` positive roots turn up.
    pub fn generate_roots(&self, cap: usize) -> Result<RootTable<T>> {
        let n = self.size();
        let mut table = RootTable { roots: Vec::new(), witnesses: Vec::new(), index: HashMap::new() };
        // BFS over positive roots: for β > 0 and s with sβ > 0, sβ is new or known.
        let mut frontier = Vec::new();
        for s in 1..=n {
            let root = GenericRoot::simple(n, s);
            table.push(root.clone(), Word::default(), s);
            frontier.push(table.roots.len() - 1);
        }
        while let Some(idx) = frontier.pop() {
            for s in 1..=n {
                let image = self.reflect(&table.roots[idx], s);
                if !image.is_positive() || table.index_of(&image).is_some() {
                    continue;
                }
                if table.roots.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                let (word, base) = &table.witnesses[idx];
                let mut letters = vec![s];
                letters.extend_from_slice(word.letters());
                table.push(image, Word::new(letters), *base);
                frontier.push(table.roots.len() - 1);
            }
        }
        if table.roots.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        Ok(table)
    }

    /// The reflection `t_β = u s u⁻¹` where `β = u(α_s)`.
    pub fn reflection(&self, table: &RootTable<T>, index: usize) -> GenericElement<T> {
        let (u, s) = &table.witnesses[index];
        let mut letters = u.letters().to_vec();
        letters.push(*s);
        letters.extend(u.letters().iter().rev());
        self.evaluate_word(&Word::new(letters)).expect("witness words are valid")
    }

    /// `ℓ(w) = |{β > 0 : w(β) < 0}|`.
    pub fn length(&self, table: &RootTable<T>, w: &GenericElement<T>) -> usize {
        table.roots.iter().filter(|b| w.apply(b).is_negative()).count()
    }

    /// `Φ_w = {β > 0 : w⁻¹(β) < 0}`, as indices into `table`.
    pub fn inversion_set(&self, table: &RootTable<T>, w: &GenericElement<T>) -> BTreeSet<usize> {
        let inv = self.inverse(w);
        (0..table.len()).filter(|&k| inv.apply(&table.roots[k]).is_negative()).collect()
    }

    /// `N(w) = {t ∈ T : ℓ(t w) < ℓ(w)}`, each reflection recorded by the
    /// index of its positive root.
    pub fn reflection_cocycle(&self, table: &RootTable<T>, w: &GenericElement<T>) -> BTreeSet<usize> {
        let len = self.length(table, w);
        (0..table.len())
            .filter(|&k| {
                let tw = self.compose(&self.reflection(table, k), w);
                self.length(table, &tw) < len
            })
            .collect()
    }

    /// `x N(y) x⁻¹`, i.e. the roots `|x(β)|` for `β ∈ N(y)`.
    pub fn conjugate_cocycle(
        &self,
        table: &RootTable<T>,
        x: &GenericElement<T>,
        cocycle: &BTreeSet<usize>,
    ) -> BTreeSet<usize> {
        cocycle
            .iter()
            .map(|&k| table.index_of(&x.apply(&table.roots[k]).abs()).expect("root system is W-stable"))
            .collect()
    }

    /// `{β_1, …, β_m}` for a reduced word, without needing the full root
    /// system, so it works in infinite groups. Fails on non-reduced words.
    pub fn inversion_set_of_word(&self, word: &Word) -> Result<Vec<GenericRoot<T>>> {
        let mut prefix = self.identity();
        let mut out: Vec<GenericRoot<T>> = Vec::with_capacity(word.len());
        for &s in word.letters() {
            if s == 0 || s > self.size() {
                return Err(Error::GeneratorOutOfRange { index: s, rank: self.size() });
            }
            let beta = prefix.simple_images[s - 1].clone();
            if !beta.is_positive() || out.iter().any(|b| b.approx_eq(&beta)) {
                return Err(Error::NotReduced);
            }
            out.push(beta);
            prefix = self.evaluate_word(&Word::new([prefix.word.letters(), &[s]].concat()))?;
        }
        Ok(out)
    }
}

/// Positive roots found by [`GenericSystem::generate_roots`], each with a
/// witness `(u, s)` such that the root equals `u(α_s)`.
#[derive(Debug, Clone)]
pub struct RootTable<T> {
    roots: Vec<GenericRoot<T>>,
    witnesses: Vec<(Word, usize)>,
    index: HashMap<Vec<i64>, usize>,
}

impl<T: Scalar> RootTable<T> {
    fn push(&mut self, root: GenericRoot<T>, word: Word, base: usize) {
        self.index.insert(root.key(), self.roots.len());
        self.roots.push(root);
        self.witnesses.push((word, base));
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[GenericRoot<T>] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> &GenericRoot<T> {
        &self.roots[index]
    }

    pub fn index_of(&self, root: &GenericRoot<T>) -> Option<usize> {
        if let Some(&k) = self.index.get(&root.key()) {
            if self.roots[k].approx_eq(root) {
                return Some(k);
            }
        }
        self.roots.iter().position(|r| r.approx_eq(root))
    }

    pub fn collect(&self, indices: &BTreeSet<usize>) -> Vec<GenericRoot<T>> {
        indices.iter().map(|&k| self.roots[k].clone()).collect()
    }
}

/// A group element, stored as the images of the simple roots together with
/// a word that produced it.
#[derive(Debug, Clone)]
pub struct GenericElement<T> {
    pub simple_images: Vec<GenericRoot<T>>,
    pub word: Word,
}

impl<T: Scalar> GenericElement<T> {
    pub fn apply(&self, v: &GenericRoot<T>) -> GenericRoot<T> {
        let mut out = GenericRoot { coefficients: vec![T::zero(); v.coefficients.len()] };
        for (c, image) in v.coefficients.iter().zip(&self.simple_images) {
            out.axpy(*c, image);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.simple_images
            .iter()
            .enumerate()
            .all(|(k, v)| v.approx_eq(&GenericRoot::simple(self.simple_images.len(), k + 1)))
    }
}

/// Equality through the faithful action on the simple roots.
impl<T: Scalar> PartialEq for GenericElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.simple_images.len() == other.simple_images.len()
            && self.simple_images.iter().zip(&other.simple_images).all(|(a, b)| a.approx_eq(b))
    }
}

/// Compares two root lists as sets.
pub fn same_root_set<T: Scalar>(a: &[GenericRoot<T>], b: &[GenericRoot<T>]) -> bool {
    a.len() == b.len() && a.iter().all(|r| b.iter().any(|q| q.approx_eq(r)))
}
