//! `π₀` of Hochschild homology: endomorphisms modulo `g∘f ∼ f∘g`.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::EdgeId;
use crate::error::{Error, Result};
use crate::fincat::{FinCat, Functor, MorId, ObjId, Representation};
use crate::partition::UnionFind;

/// Index of a class in an [`HHTable`], numbered by least member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HHClass(pub usize);

/// The partition of `End(C)` into trace classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HHTable {
    /// Members of each class, ascending; the first is the representative.
    classes: Vec<Vec<MorId>>,
    /// Class of each morphism, `None` off the endomorphisms.
    class_of: Vec<Option<HHClass>>,
}

/// Union-find over `End(C)` with one merge per composable pair
/// `f: x → y`, `g: y → x`.
pub fn compute_hh(c: &FinCat) -> HHTable {
    let endos = c.endomorphisms();
    let mut slot = vec![usize::MAX; c.morphism_count()];
    for (i, e) in endos.iter().enumerate() {
        slot[e.0] = i;
    }
    let mut uf = UnionFind::new(endos.len());
    for f in c.morphism_ids() {
        for &g in c.hom(c.tgt(f), c.src(f)) {
            let gf = c.compose(g, f).expect("composable");
            let fg = c.compose(f, g).expect("composable");
            uf.union(slot[gf.0], slot[fg.0]);
        }
    }
    let (labels, count) = uf.classes();
    let mut classes = vec![Vec::new(); count];
    let mut class_of = vec![None; c.morphism_count()];
    for (i, &e) in endos.iter().enumerate() {
        classes[labels[i]].push(e);
        class_of[e.0] = Some(HHClass(labels[i]));
    }
    HHTable { classes, class_of }
}

impl HHTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> impl Iterator<Item = HHClass> {
        (0..self.classes.len()).map(HHClass)
    }

    pub fn members(&self, cls: HHClass) -> &[MorId] {
        &self.classes[cls.0]
    }

    pub fn representative(&self, cls: HHClass) -> MorId {
        self.classes[cls.0][0]
    }

    pub fn class_of(&self, e: MorId) -> Option<HHClass> {
        self.class_of.get(e.0).copied().flatten()
    }
}

/// A cyclically composable word `f_0, …, f_{n-1}`, with `f_{i+1}` applied
/// after `f_i` and `f_0` after `f_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    pub morphisms: Vec<MorId>,
}

impl CyclicWord {
    pub fn new(c: &FinCat, morphisms: Vec<MorId>) -> Result<Self> {
        if morphisms.is_empty() {
            return Err(Error::EmptyCycle);
        }
        let n = morphisms.len();
        for (i, &m) in morphisms.iter().enumerate() {
            if m.0 >= c.morphism_count() {
                return Err(Error::UnknownMorphism(alloc::format!("#{}", m.0)));
            }
            if c.tgt(m) != c.src(morphisms[(i + 1) % n]) {
                return Err(Error::Incompatible(alloc::format!(
                    "`{}` is not followed by a composable letter",
                    c.morphism_name(m)
                )));
            }
        }
        Ok(CyclicWord { morphisms })
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn rotate(&self, k: usize) -> CyclicWord {
        let mut morphisms = self.morphisms.clone();
        let n = morphisms.len();
        morphisms.rotate_left(k % n);
        CyclicWord { morphisms }
    }

    /// The word repeated `r` times.
    pub fn repeat(&self, r: usize) -> CyclicWord {
        CyclicWord {
            morphisms: self.morphisms.repeat(r),
        }
    }

    /// `f_{n-1} ∘ ⋯ ∘ f_0`, an endomorphism of the source of `f_0`.
    pub fn compose(&self, c: &FinCat) -> MorId {
        c.compose_chain(c.src(self.morphisms[0]), &self.morphisms)
            .expect("cyclic words are composable")
    }

    /// The word as a representation of the cyclic graph on `n` vertices.
    pub fn to_representation(&self, c: &FinCat) -> Representation {
        Representation {
            vertex_labels: self.morphisms.iter().map(|&m| c.src(m)).collect(),
            edge_labels: self.morphisms.clone(),
        }
    }

    pub fn from_representation(r: &Representation) -> CyclicWord {
        CyclicWord {
            morphisms: r.edge_labels.clone(),
        }
    }

    /// Reads the word off a closed walk in a representation.
    pub fn along_walk(r: &Representation, walk: &[EdgeId]) -> CyclicWord {
        CyclicWord {
            morphisms: walk.iter().map(|e| r.edge_labels[e.0]).collect(),
        }
    }
}

pub fn class_of_word(c: &FinCat, table: &HHTable, w: &CyclicWord) -> HHClass {
    table
        .class_of(w.compose(c))
        .expect("composite of a cyclic word is an endomorphism")
}

pub fn trace_end(c: &FinCat, table: &HHTable, e: MorId) -> Result<HHClass> {
    if e.0 >= c.morphism_count() {
        return Err(Error::UnknownMorphism(alloc::format!("#{}", e.0)));
    }
    table.class_of(e).ok_or_else(|| {
        Error::Incompatible(alloc::format!(
            "`{}` is not an endomorphism",
            c.morphism_name(e)
        ))
    })
}

pub fn trace_obj(c: &FinCat, table: &HHTable, x: ObjId) -> Result<HHClass> {
    if x.0 >= c.object_count() {
        return Err(Error::UnknownObject(alloc::format!("#{}", x.0)));
    }
    trace_end(c, table, c.identity(x))
}

/// `ψ_r` on classes: `[e] ↦ [e^r]`.
pub fn psi(c: &FinCat, table: &HHTable, r: usize, cls: HHClass) -> HHClass {
    assert!(r >= 1);
    let e = table.representative(cls);
    table
        .class_of(c.power(e, r))
        .expect("powers are endomorphisms")
}

/// `ψ_r` on words: pull back along the `r`-fold cover, then take the class.
pub fn psi_word(c: &FinCat, table: &HHTable, r: usize, w: &CyclicWord) -> HHClass {
    assert!(r >= 1);
    class_of_word(c, table, &w.repeat(r))
}

/// Image of a class under a functor.
pub fn hh_map(f: &Functor, source: &HHTable, target: &HHTable, cls: HHClass) -> HHClass {
    target
        .class_of(f.apply(source.representative(cls)))
        .expect("functors preserve endomorphisms")
}

/// Offset of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let mut i = fail[j - k - 1];
        while i != usize::MAX && at(j) != at(k + i + 1) {
            if at(j) < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = if i == usize::MAX { 0 } else { i + 1 };
        }
    }
    k % n
}

pub fn canonical_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    let k = least_rotation(s);
    let mut v = s.to_vec();
    v.rotate_left(k);
    v
}

/// Smallest `p` with `s` equal to its rotation by `p`; `p` divides `len`.
pub fn smallest_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    // Prefix function; the word is a power iff n - π(n) divides n.
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    if n == 0 {
        return 0;
    }
    let p = n - pi[n - 1];
    if n % p == 0 {
        p
    } else {
        n
    }
}

pub fn is_primitive<T: Eq>(s: &[T]) -> bool {
    !s.is_empty() && smallest_period(s) == s.len()
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut result = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of primitive necklaces of length `n` over `k` letters,
/// `(1/n) Σ_{d | n} μ(d) k^{n/d}`.
pub fn necklace_count(k: u64, n: u64) -> u64 {
    assert!(n >= 1);
    let total: i64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| mobius(d) * (k as i64).pow((n / d) as u32))
        .sum();
    (total / n as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, symmetric_group, walking_arrow};

    #[test]
    fn hh_examples() {
        assert_eq!(compute_hh(&cyclic_group(3)).len(), 3);
        let arrow = walking_arrow();
        let t = compute_hh(&arrow);
        assert_eq!(t.len(), 2);
        assert_eq!(t.members(HHClass(0)), &[MorId(0)]);
        assert_eq!(compute_hh(&symmetric_group(3)).len(), 3);
        assert_eq!(compute_hh(&symmetric_group(4)).len(), 5);
    }

    #[test]
    fn word_examples() {
        let s3 = symmetric_group(3);
        let t = compute_hh(&s3);
        let a = s3.morphism("(12)").unwrap();
        let b = s3.morphism("(13)").unwrap();
        let w = CyclicWord::new(&s3, vec![a, b]).unwrap();
        let cls = class_of_word(&s3, &t, &w);
        assert_eq!(cls, t.class_of(s3.morphism("(123)").unwrap()).unwrap());
        assert_eq!(class_of_word(&s3, &t, &w.rotate(1)), cls);
        let arrow = walking_arrow();
        let ta = compute_hh(&arrow);
        let w = CyclicWord::new(&arrow, vec![MorId(0)]).unwrap();
        assert_eq!(
            class_of_word(&arrow, &ta, &w),
            trace_obj(&arrow, &ta, ObjId(0)).unwrap()
        );
        assert!(CyclicWord::new(&arrow, vec![MorId(2)]).is_err());
    }

    #[test]
    fn trace_examples() {
        let s3 = symmetric_group(3);
        let t = compute_hh(&s3);
        let c1 = trace_end(&s3, &t, s3.morphism("(123)").unwrap()).unwrap();
        let c2 = trace_end(&s3, &t, s3.morphism("(132)").unwrap()).unwrap();
        assert_eq!(c1, c2);
        let arrow = walking_arrow();
        assert!(trace_end(&arrow, &compute_hh(&arrow), MorId(2)).is_err());
    }

    #[test]
    fn psi_examples() {
        let s3 = symmetric_group(3);
        let t = compute_hh(&s3);
        let tr = trace_end(&s3, &t, s3.morphism("(12)").unwrap()).unwrap();
        assert_eq!(psi(&s3, &t, 2, tr), trace_obj(&s3, &t, ObjId(0)).unwrap());
        for cls in t.classes() {
            assert_eq!(psi(&s3, &t, 1, cls), cls);
        }
        let z7 = cyclic_group(7);
        let t7 = compute_hh(&z7);
        let one = t7.class_of(z7.morphism("1").unwrap()).unwrap();
        let six = t7.class_of(z7.morphism("6").unwrap()).unwrap();
        assert_eq!(psi(&z7, &t7, 2, psi(&z7, &t7, 3, one)), six);
        for cls in t7.classes() {
            assert_eq!(
                psi(&z7, &t7, 2, psi(&z7, &t7, 3, cls)),
                psi(&z7, &t7, 6, cls)
            );
        }
    }

    #[test]
    fn hh_functoriality() {
        let z4 = cyclic_group(4);
        let z2 = cyclic_group(2);
        let q = Functor::from_names(
            z4.clone(),
            z2.clone(),
            &[("*", "*")],
            &[("0", "0"), ("1", "1"), ("2", "0"), ("3", "1")],
        )
        .unwrap();
        let (t4, t2) = (compute_hh(&z4), compute_hh(&z2));
        assert_eq!(hh_map(&q, &t4, &t2, HHClass(1)), HHClass(1));
        assert_eq!(hh_map(&q, &t4, &t2, HHClass(2)), HHClass(0));
        let id = Functor::identity(&z4);
        for cls in t4.classes() {
            assert_eq!(hh_map(&id, &t4, &t4, cls), cls);
            for r in 1..=4 {
                assert_eq!(
                    hh_map(&q, &t4, &t2, psi(&z4, &t4, r, cls)),
                    psi(&z2, &t2, r, hh_map(&q, &t4, &t2, cls))
                );
            }
        }
    }

    #[test]
    fn booth_matches_brute_force() {
        let words: [&[u8]; 7] = [b"a", b"ba", b"abab", b"bcabca", b"cab", b"aab", b"bbaab"];
        for w in words {
            let brute = (0..w.len())
                .map(|k| {
                    let mut v = w.to_vec();
                    v.rotate_left(k);
                    v
                })
                .min()
                .unwrap();
            assert_eq!(canonical_rotation(w), brute);
        }
        assert_eq!(smallest_period(b"abab"), 2);
        assert_eq!(smallest_period(b"aba"), 3);
        assert!(is_primitive(b"ab") && !is_primitive(b"aa"));
    }

    #[test]
    fn necklace_numbers() {
        assert_eq!(necklace_count(2, 1), 2);
        assert_eq!(necklace_count(2, 2), 1);
        assert_eq!(necklace_count(2, 6), 9);
        assert_eq!(necklace_count(3, 4), 18);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
    }
}
