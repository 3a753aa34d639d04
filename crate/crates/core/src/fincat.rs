//! Finite categories as composition tables, functors between them, and
//! set-valued representations of quivers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{exit_path, Cell, ClosedCover, Digraph, Incidence, Subgraph};
use crate::error::{Error, Result};
use crate::quiver::{Path, QuiverMor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A finite category. `compose(g, f)` is `g ∘ f` (apply `f` first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    /// `table[g * |Mor| + f]`
    table: Vec<Option<MorId>>,
    homs: Vec<Vec<MorId>>,
    object_index: BTreeMap<String, ObjId>,
    morphism_index: BTreeMap<String, MorId>,
}

impl FinCat {
    /// Builds and validates a category. Composites with an identity that
    /// are not listed are filled in.
    pub fn from_indices(
        objects: Vec<String>,
        morphisms: Vec<(String, ObjId, ObjId)>,
        identities: Vec<MorId>,
        table: Vec<(MorId, MorId, MorId)>,
    ) -> Result<Self> {
        let c = FinCat::from_indices_unchecked(objects, morphisms, identities, table)?;
        c.validate()?;
        Ok(c)
    }

    /// Like [`FinCat::from_indices`] but only checks that identifiers are
    /// well formed; the laws are left to [`FinCat::validate`].
    pub fn from_indices_unchecked(
        objects: Vec<String>,
        morphisms: Vec<(String, ObjId, ObjId)>,
        identities: Vec<MorId>,
        table: Vec<(MorId, MorId, MorId)>,
    ) -> Result<Self> {
        let mut object_index = BTreeMap::new();
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), ObjId(i)).is_some() {
                return Err(Error::DuplicateId(o.clone()));
            }
        }
        let no = objects.len();
        let mut morphism_index = BTreeMap::new();
        let mut mors = Vec::with_capacity(morphisms.len());
        for (i, (id, s, t)) in morphisms.into_iter().enumerate() {
            if s.0 >= no || t.0 >= no {
                return Err(Error::UnknownObject(format!("endpoint of `{id}`")));
            }
            if morphism_index.insert(id.clone(), MorId(i)).is_some() {
                return Err(Error::DuplicateId(id));
            }
            mors.push(Morphism { id, src: s, tgt: t });
        }
        let nm = mors.len();
        if identities.len() != no {
            return Err(Error::MissingIdentity(format!(
                "{} identities for {} objects",
                identities.len(),
                no
            )));
        }
        for (x, &i) in identities.iter().enumerate() {
            if i.0 >= nm || mors[i.0].src != ObjId(x) || mors[i.0].tgt != ObjId(x) {
                return Err(Error::MissingIdentity(objects[x].clone()));
            }
        }
        let mut homs = vec![Vec::new(); no * no];
        for (i, m) in mors.iter().enumerate() {
            homs[m.src.0 * no + m.tgt.0].push(MorId(i));
        }
        let mut cat = FinCat {
            objects,
            morphisms: mors,
            identities,
            table: vec![None; nm * nm],
            homs,
            object_index,
            morphism_index,
        };
        for (g, f, h) in table {
            if g.0 >= nm || f.0 >= nm || h.0 >= nm {
                return Err(Error::UnknownMorphism(format!(
                    "#{}",
                    g.0.max(f.0).max(h.0)
                )));
            }
            let slot = &mut cat.table[g.0 * nm + f.0];
            match *slot {
                Some(old) if old != h => {
                    return Err(Error::BadComposite {
                        g: cat.morphisms[g.0].id.clone(),
                        f: cat.morphisms[f.0].id.clone(),
                    })
                }
                _ => *slot = Some(h),
            }
        }
        for m in 0..nm {
            let (s, t) = (cat.morphisms[m].src, cat.morphisms[m].tgt);
            let (is, it) = (cat.identities[s.0].0, cat.identities[t.0].0);
            cat.table[m * nm + is].get_or_insert(MorId(m));
            cat.table[it * nm + m].get_or_insert(MorId(m));
        }
        Ok(cat)
    }

    /// Builds a category from identifiers.
    pub fn from_names(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        identities: Vec<(String, String)>,
        table: Vec<(String, String, String)>,
    ) -> Result<Self> {
        let obj_index: BTreeMap<&str, ObjId> = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.as_str(), ObjId(i)))
            .collect();
        let obj = |n: &str| {
            obj_index
                .get(n)
                .copied()
                .ok_or_else(|| Error::UnknownObject(n.to_string()))
        };
        let mor_index: BTreeMap<&str, MorId> = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.0.as_str(), MorId(i)))
            .collect();
        let mor = |n: &str| {
            mor_index
                .get(n)
                .copied()
                .ok_or_else(|| Error::UnknownMorphism(n.to_string()))
        };
        let mut ids = vec![None; objects.len()];
        for (o, m) in &identities {
            ids[obj(o)?.0] = Some(mor(m)?);
        }
        let ids = ids
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::MissingIdentity(objects[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        let mors = morphisms
            .iter()
            .map(|(id, s, t)| Ok((id.clone(), obj(s)?, obj(t)?)))
            .collect::<Result<Vec<_>>>()?;
        let table = table
            .iter()
            .map(|(g, f, h)| Ok((mor(g)?, mor(f)?, mor(h)?)))
            .collect::<Result<Vec<_>>>()?;
        FinCat::from_indices(objects.clone(), mors, ids, table)
    }

    /// Checks closure, identities and associativity, reporting the first
    /// counterexample found.
    pub fn validate(&self) -> Result<()> {
        let nm = self.morphisms.len();
        let name = |m: usize| self.morphisms[m].id.clone();
        for g in 0..nm {
            for f in 0..nm {
                let composable = self.morphisms[g].src == self.morphisms[f].tgt;
                let ok = match (composable, self.table[g * nm + f]) {
                    (true, Some(h)) => {
                        self.morphisms[h.0].src == self.morphisms[f].src
                            && self.morphisms[h.0].tgt == self.morphisms[g].tgt
                    }
                    (false, None) => true,
                    _ => false,
                };
                if !ok {
                    return Err(Error::BadComposite {
                        g: name(g),
                        f: name(f),
                    });
                }
            }
        }
        for (x, &i) in self.identities.iter().enumerate() {
            for m in 0..nm {
                let mm = &self.morphisms[m];
                if (mm.src.0 == x && self.table[m * nm + i.0] != Some(MorId(m)))
                    || (mm.tgt.0 == x && self.table[i.0 * nm + m] != Some(MorId(m)))
                {
                    return Err(Error::MissingIdentity(self.objects[x].clone()));
                }
            }
        }
        for f in 0..nm {
            for g in 0..nm {
                let Some(gf) = self.table[g * nm + f] else {
                    continue;
                };
                for h in 0..nm {
                    let Some(hg) = self.table[h * nm + g] else {
                        continue;
                    };
                    if self.table[h * nm + gf.0] != self.table[hg.0 * nm + f] {
                        return Err(Error::NotAssociative {
                            f: name(f),
                            g: name(g),
                            h: name(h),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = MorId> {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, m: MorId) -> &str {
        &self.morphisms[m.0].id
    }

    pub fn object(&self, name: &str) -> Result<ObjId> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn morphism(&self, name: &str) -> Result<MorId> {
        self.morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    pub fn src(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].src
    }

    pub fn tgt(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].tgt
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identities
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identities[self.src(m).0] == m
    }

    /// `Hom(x, y)` in declaration order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    /// `g ∘ f`, or `None` when not composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.table[g.0 * self.morphisms.len() + f.0]
    }

    /// Composable-pair table entries `(g, f, g∘f)` with neither side an
    /// identity, in `(g, f)` order.
    pub fn non_identity_table(&self) -> Vec<(MorId, MorId, MorId)> {
        let mut out = Vec::new();
        for g in self.morphism_ids() {
            for f in self.morphism_ids() {
                if self.is_identity(g) || self.is_identity(f) {
                    continue;
                }
                if let Some(h) = self.compose(g, f) {
                    out.push((g, f, h));
                }
            }
        }
        out
    }

    /// `f_{n-1} ∘ ⋯ ∘ f_0` for a chain listed in application order.
    pub fn compose_chain(&self, start: ObjId, chain: &[MorId]) -> Option<MorId> {
        chain
            .iter()
            .try_fold(self.identity(start), |acc, &m| self.compose(m, acc))
    }

    /// `f^r`, with `f^0` the identity.
    pub fn power(&self, f: MorId, r: usize) -> MorId {
        let x = self.src(f);
        debug_assert_eq!(x, self.tgt(f));
        (0..r).fold(self.identity(x), |acc, _| {
            self.compose(f, acc).expect("endomorphism")
        })
    }

    pub fn endomorphisms(&self) -> Vec<MorId> {
        self.morphism_ids()
            .filter(|&m| self.src(m) == self.tgt(m))
            .collect()
    }

    /// Every hom-set has at most one element and only identities are
    /// invertible.
    pub fn is_poset(&self) -> bool {
        let n = self.objects.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let h = self.hom(ObjId(x), ObjId(y)).len();
                h <= 1 && (x == y || h == 0 || self.hom(ObjId(y), ObjId(x)).is_empty())
            })
        })
    }

    /// Number of composable chains `x_0 → x_1 → ⋯ → x_p`, read off the
    /// table directly.
    pub fn composable_chain_count(&self, p: usize) -> u64 {
        let n = self.objects.len();
        // ways[x] = number of chains of current length ending at x
        let mut ways = vec![1u64; n];
        for _ in 0..p {
            let mut next = vec![0u64; n];
            for m in &self.morphisms {
                next[m.tgt.0] += ways[m.src.0];
            }
            ways = next;
        }
        ways.iter().sum()
    }
}

/// `0 → 1` with identities `id0`, `id1` and the arrow `f`.
pub fn walking_arrow() -> FinCat {
    FinCat::from_indices(
        vec!["0".into(), "1".into()],
        vec![
            ("id0".into(), ObjId(0), ObjId(0)),
            ("id1".into(), ObjId(1), ObjId(1)),
            ("f".into(), ObjId(0), ObjId(1)),
        ],
        vec![MorId(0), MorId(1)],
        vec![],
    )
    .expect("walking arrow is a category")
}

/// Two objects and an inverse pair `f: 0 → 1`, `g: 1 → 0`.
pub fn walking_iso() -> FinCat {
    FinCat::from_indices(
        vec!["0".into(), "1".into()],
        vec![
            ("id0".into(), ObjId(0), ObjId(0)),
            ("id1".into(), ObjId(1), ObjId(1)),
            ("f".into(), ObjId(0), ObjId(1)),
            ("g".into(), ObjId(1), ObjId(0)),
        ],
        vec![MorId(0), MorId(1)],
        vec![
            (MorId(3), MorId(2), MorId(0)),
            (MorId(2), MorId(3), MorId(1)),
        ],
    )
    .expect("walking isomorphism is a category")
}

/// Two parallel arrows `a, b: 0 → 1`.
pub fn parallel_pair() -> FinCat {
    FinCat::from_indices(
        vec!["0".into(), "1".into()],
        vec![
            ("id0".into(), ObjId(0), ObjId(0)),
            ("id1".into(), ObjId(1), ObjId(1)),
            ("a".into(), ObjId(0), ObjId(1)),
            ("b".into(), ObjId(0), ObjId(1)),
        ],
        vec![MorId(0), MorId(1)],
        vec![],
    )
    .expect("parallel pair is a category")
}

/// One-object category of a finite monoid. `mul[g][f]` is the product
/// `g·f`, used as `g ∘ f`.
pub fn from_monoid(elements: Vec<String>, unit: usize, mul: &[Vec<usize>]) -> Result<FinCat> {
    let n = elements.len();
    if unit >= n || mul.len() != n || mul.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidMorphism("malformed monoid table".into()));
    }
    let morphisms = elements
        .into_iter()
        .map(|e| (e, ObjId(0), ObjId(0)))
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for (g, row) in mul.iter().enumerate() {
        for (f, &h) in row.iter().enumerate() {
            if h >= n {
                return Err(Error::UnknownMorphism(format!("#{h}")));
            }
            table.push((MorId(g), MorId(f), MorId(h)));
        }
    }
    FinCat::from_indices(vec!["*".into()], morphisms, vec![MorId(unit)], table)
}

/// `B(Z/n)`, morphisms named `0, …, n-1`.
pub fn cyclic_group(n: usize) -> FinCat {
    assert!(n >= 1);
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|g| (0..n).map(|f| (g + f) % n).collect())
        .collect();
    from_monoid((0..n).map(|i| i.to_string()).collect(), 0, &mul).expect("Z/n is a group")
}

/// `B({1, e})` with `e·e = e`.
pub fn idempotent_monoid() -> FinCat {
    from_monoid(vec!["1".into(), "e".into()], 0, &[vec![0, 1], vec![1, 1]])
        .expect("idempotent monoid")
}

/// All permutations of `0..n` in lexicographic order of one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // Next lexicographic permutation.
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| p[j] > p[i - 1])
            .expect("pivot exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Cycle notation on `1..=n`, `e` for the identity.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = perm[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// `B(S_n)`; `g ∘ f` applies `f` first.
pub fn symmetric_group(n: usize) -> FinCat {
    let perms = permutations(n);
    let index: BTreeMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mul: Vec<Vec<usize>> = perms
        .iter()
        .map(|g| {
            perms
                .iter()
                .map(|f| index[&f.iter().map(|&x| g[x]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    from_monoid(perms.iter().map(|p| cycle_notation(p)).collect(), 0, &mul).expect("S_n is a group")
}

/// The poset `0 < 1 < ⋯ < k-1`. Morphisms are `id{i}` and `{i}<{j}`.
pub fn chain_poset(k: usize) -> FinCat {
    let mut morphisms = Vec::new();
    let mut index = BTreeMap::new();
    for i in 0..k {
        for j in i..k {
            let name = if i == j {
                format!("id{i}")
            } else {
                format!("{i}<{j}")
            };
            index.insert((i, j), MorId(morphisms.len()));
            morphisms.push((name, ObjId(i), ObjId(j)));
        }
    }
    let mut table = Vec::new();
    for i in 0..k {
        for j in i..k {
            for l in j..k {
                table.push((index[&(j, l)], index[&(i, j)], index[&(i, l)]));
            }
        }
    }
    FinCat::from_indices(
        (0..k).map(|i| i.to_string()).collect(),
        morphisms,
        (0..k).map(|i| index[&(i, i)]).collect(),
        table,
    )
    .expect("chains are posets")
}

/// A functor between finite categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub source: FinCat,
    pub target: FinCat,
    pub object_map: Vec<ObjId>,
    pub morphism_map: Vec<MorId>,
}

impl Functor {
    pub fn new(
        source: FinCat,
        target: FinCat,
        object_map: Vec<ObjId>,
        morphism_map: Vec<MorId>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count()
            || morphism_map.len() != source.morphism_count()
            || object_map.iter().any(|x| x.0 >= target.object_count())
            || morphism_map.iter().any(|m| m.0 >= target.morphism_count())
        {
            return Err(Error::NotAFunctor(
                "maps do not match the categories".into(),
            ));
        }
        let functor = Functor {
            source,
            target,
            object_map,
            morphism_map,
        };
        functor.check()?;
        Ok(functor)
    }

    /// Resolves a functor given by identifier pairs.
    pub fn from_names(
        source: FinCat,
        target: FinCat,
        objects: &[(&str, &str)],
        morphisms: &[(&str, &str)],
    ) -> Result<Self> {
        let mut om = vec![None; source.object_count()];
        for (a, b) in objects {
            om[source.object(a)?.0] = Some(target.object(b)?);
        }
        let mut mm = vec![None; source.morphism_count()];
        for (a, b) in morphisms {
            mm[source.morphism(a)?.0] = Some(target.morphism(b)?);
        }
        let om = om
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotAFunctor("object map is partial".into()))?;
        let mm = mm
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotAFunctor("morphism map is partial".into()))?;
        Functor::new(source, target, om, mm)
    }

    pub fn identity(c: &FinCat) -> Self {
        Functor {
            source: c.clone(),
            target: c.clone(),
            object_map: c.object_ids().collect(),
            morphism_map: c.morphism_ids().collect(),
        }
    }

    fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for x in s.object_ids() {
            if self.morphism_map[s.identity(x).0] != t.identity(self.object_map[x.0]) {
                return Err(Error::NotAFunctor(format!(
                    "identity of `{}` is not preserved",
                    s.object_name(x)
                )));
            }
        }
        for m in s.morphism_ids() {
            let fm = self.morphism_map[m.0];
            if t.src(fm) != self.object_map[s.src(m).0] || t.tgt(fm) != self.object_map[s.tgt(m).0]
            {
                return Err(Error::NotAFunctor(format!(
                    "endpoints of `{}` are not preserved",
                    s.morphism_name(m)
                )));
            }
        }
        for g in s.morphism_ids() {
            for f in s.morphism_ids() {
                if let Some(h) = s.compose(g, f) {
                    let image = t.compose(self.morphism_map[g.0], self.morphism_map[f.0]);
                    if image != Some(self.morphism_map[h.0]) {
                        return Err(Error::NotAFunctor(format!(
                            "composite `{}∘{}` is not preserved",
                            s.morphism_name(g),
                            s.morphism_name(f)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn apply_object(&self, x: ObjId) -> ObjId {
        self.object_map[x.0]
    }

    pub fn apply(&self, m: MorId) -> MorId {
        self.morphism_map[m.0]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Functor) -> Result<Functor> {
        if self.target != g.source {
            return Err(Error::Incomposable);
        }
        Ok(Functor {
            source: self.source.clone(),
            target: g.target.clone(),
            object_map: self.object_map.iter().map(|x| g.object_map[x.0]).collect(),
            morphism_map: self
                .morphism_map
                .iter()
                .map(|m| g.morphism_map[m.0])
                .collect(),
        })
    }
}

/// A representation of a quiver in a category. The graph and category are
/// supplied by context; the ordering is lexicographic in vertex labels,
/// then edge labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Representation {
    pub vertex_labels: Vec<ObjId>,
    pub edge_labels: Vec<MorId>,
}

impl Representation {
    pub fn check(&self, c: &FinCat, g: &Digraph) -> Result<()> {
        if self.vertex_labels.len() != g.vertex_count() || self.edge_labels.len() != g.edge_count()
        {
            return Err(Error::Incompatible(
                "label counts do not match the graph".into(),
            ));
        }
        if self.vertex_labels.iter().any(|x| x.0 >= c.object_count())
            || self.edge_labels.iter().any(|m| m.0 >= c.morphism_count())
        {
            return Err(Error::Incompatible("label outside the category".into()));
        }
        for e in g.edge_ids() {
            let m = self.edge_labels[e.0];
            if c.src(m) != self.vertex_labels[g.src(e).0]
                || c.tgt(m) != self.vertex_labels[g.tgt(e).0]
            {
                return Err(Error::Incompatible(format!(
                    "label of `{}` has the wrong endpoints",
                    g.edge_name(e)
                )));
            }
        }
        Ok(())
    }

    /// Composite of the labels along a path.
    pub fn along(&self, c: &FinCat, path: &Path) -> MorId {
        path.edges
            .iter()
            .fold(c.identity(self.vertex_labels[path.start.0]), |acc, e| {
                c.compose(self.edge_labels[e.0], acc)
                    .expect("representations label paths by chains")
            })
    }

    /// Restriction to a sub-digraph, in the subgraph's declaration order.
    pub fn restrict(&self, part: &Subgraph) -> Representation {
        Representation {
            vertex_labels: part
                .vertices
                .iter()
                .map(|v| self.vertex_labels[v.0])
                .collect(),
            edge_labels: part.edges.iter().map(|e| self.edge_labels[e.0]).collect(),
        }
    }
}

/// Lazily enumerates `Rep_C(Γ)` in canonical order.
pub struct RepIter<'a> {
    cat: &'a FinCat,
    graph: &'a Digraph,
    vertex_labels: Vec<usize>,
    edge_slots: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> RepIter<'a> {
    pub fn new(cat: &'a FinCat, graph: &'a Digraph) -> Self {
        let done = cat.object_count() == 0 && graph.vertex_count() > 0;
        RepIter {
            cat,
            graph,
            vertex_labels: vec![0; graph.vertex_count()],
            edge_slots: vec![0; graph.edge_count()],
            started: false,
            done,
        }
    }

    fn hom_len(&self, e: usize) -> usize {
        let edge = &self.graph.edges()[e];
        self.cat
            .hom(
                ObjId(self.vertex_labels[edge.src.0]),
                ObjId(self.vertex_labels[edge.tgt.0]),
            )
            .len()
    }

    fn edges_inhabited(&self) -> bool {
        (0..self.edge_slots.len()).all(|e| self.hom_len(e) > 0)
    }

    fn advance_vertices(&mut self) -> bool {
        let n = self.cat.object_count();
        for i in (0..self.vertex_labels.len()).rev() {
            self.vertex_labels[i] += 1;
            if self.vertex_labels[i] < n {
                return true;
            }
            self.vertex_labels[i] = 0;
        }
        false
    }

    fn advance_edges(&mut self) -> bool {
        for e in (0..self.edge_slots.len()).rev() {
            self.edge_slots[e] += 1;
            if self.edge_slots[e] < self.hom_len(e) {
                return true;
            }
            self.edge_slots[e] = 0;
        }
        false
    }

    /// Moves to the next vertex labelling admitting at least one edge labelling.
    fn seek_vertices(&mut self, mut advance: bool) -> bool {
        loop {
            if advance && !self.advance_vertices() {
                return false;
            }
            advance = true;
            if self.edges_inhabited() {
                self.edge_slots.iter_mut().for_each(|s| *s = 0);
                return true;
            }
        }
    }

    fn current(&self) -> Representation {
        Representation {
            vertex_labels: self.vertex_labels.iter().map(|&x| ObjId(x)).collect(),
            edge_labels: self
                .edge_slots
                .iter()
                .enumerate()
                .map(|(e, &s)| {
                    let edge = &self.graph.edges()[e];
                    self.cat.hom(
                        ObjId(self.vertex_labels[edge.src.0]),
                        ObjId(self.vertex_labels[edge.tgt.0]),
                    )[s]
                })
                .collect(),
        }
    }
}

impl Iterator for RepIter<'_> {
    type Item = Representation;

    fn next(&mut self) -> Option<Representation> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.seek_vertices(false)
        } else {
            self.advance_edges() || self.seek_vertices(true)
        };
        if ok {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// All representations of `g` in `c`, sorted.
pub fn enumerate_reps(c: &FinCat, g: &Digraph) -> Vec<Representation> {
    RepIter::new(c, g).collect()
}

/// `|Rep_C(Γ)|` as a sum over vertex labellings of products of hom-set sizes.
pub fn count_reps(c: &FinCat, g: &Digraph) -> u64 {
    let no = c.object_count();
    let nv = g.vertex_count();
    if nv == 0 {
        return 1;
    }
    if no == 0 {
        return 0;
    }
    let mut labels = vec![0usize; nv];
    let mut total = 0u64;
    loop {
        total += g
            .edges()
            .iter()
            .map(|e| c.hom(ObjId(labels[e.src.0]), ObjId(labels[e.tgt.0])).len() as u64)
            .product::<u64>();
        let mut i = nv;
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            labels[i] += 1;
            if labels[i] < no {
                break;
            }
            labels[i] = 0;
        }
    }
}

/// A contravariant set-valued diagram on a finite category: object `c`
/// goes to `{0, …, sizes[c]-1}` and a morphism `u: c → c'` to the function
/// `maps[u]` from the set at `c'` to the set at `c`.
#[derive(Debug, Clone)]
pub struct SetDiagram<'a> {
    pub shape: &'a FinCat,
    pub sizes: Vec<usize>,
    pub maps: Vec<Vec<usize>>,
}

impl SetDiagram<'_> {
    pub fn is_functorial(&self) -> bool {
        let s = self.shape;
        let shapes_ok = s.morphism_ids().all(|u| {
            self.maps[u.0].len() == self.sizes[s.tgt(u).0]
                && self.maps[u.0].iter().all(|&x| x < self.sizes[s.src(u).0])
        });
        let ids_ok = s.object_ids().all(|x| {
            self.maps[s.identity(x).0]
                .iter()
                .enumerate()
                .all(|(i, &j)| i == j)
        });
        let comp_ok = s.morphism_ids().all(|v| {
            s.morphism_ids().all(|u| match s.compose(v, u) {
                // F(v∘u) = F(u)∘F(v)
                Some(vu) => (0..self.sizes[s.tgt(v).0])
                    .all(|x| self.maps[vu.0][x] == self.maps[u.0][self.maps[v.0][x]]),
                None => true,
            })
        });
        shapes_ok && ids_ok && comp_ok
    }

    /// The limit as the set of compatible families, sorted lexicographically
    /// in object order.
    pub fn limit(&self) -> Vec<Vec<usize>> {
        let s = self.shape;
        let n = s.object_count();
        // Constraints checked once both ends are chosen.
        let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
        for u in s.morphism_ids() {
            if s.is_identity(u) {
                continue;
            }
            let (a, b) = (s.src(u).0, s.tgt(u).0);
            checks[a.max(b)].push(u.0);
        }
        let mut out = Vec::new();
        let mut family = vec![0usize; n];
        self.extend(0, &checks, &mut family, &mut out);
        out
    }

    fn extend(
        &self,
        k: usize,
        checks: &[Vec<usize>],
        family: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == family.len() {
            out.push(family.clone());
            return;
        }
        let s = self.shape;
        for x in 0..self.sizes[k] {
            family[k] = x;
            let ok = checks[k].iter().all(|&u| {
                let (a, b) = (s.src(MorId(u)).0, s.tgt(MorId(u)).0);
                self.maps[u][family[b]] == family[a]
            });
            if ok {
                self.extend(k + 1, checks, family, out);
            }
        }
    }
}

/// `Rep_C(Γ)` as the limit over the exit-path category of the diagram
/// sending vertex cells to `Obj(C)`, edge cells to `Mor(C)` and incidences
/// to source and target.
pub fn rep_via_exit_limit(c: &FinCat, g: &Digraph) -> Vec<Representation> {
    let exit = exit_path(g);
    let shape = &exit.category;
    let sizes: Vec<usize> = exit
        .cells
        .iter()
        .map(|cell| match cell {
            Cell::Vertex(_) => c.object_count(),
            Cell::Edge(_) => c.morphism_count(),
        })
        .collect();
    let maps: Vec<Vec<usize>> = shape
        .morphism_ids()
        .zip(&exit.incidences)
        .map(|(u, inc)| {
            let n = sizes[shape.tgt(u).0];
            match inc {
                Incidence::Identity => (0..n).collect(),
                Incidence::Source => c.morphism_ids().map(|m| c.src(m).0).collect(),
                Incidence::Target => c.morphism_ids().map(|m| c.tgt(m).0).collect(),
            }
        })
        .collect();
    let diagram = SetDiagram { shape, sizes, maps };
    debug_assert!(diagram.is_functorial());
    let nv = g.vertex_count();
    let mut reps: Vec<Representation> = diagram
        .limit()
        .into_iter()
        .map(|family| Representation {
            vertex_labels: family[..nv].iter().map(|&x| ObjId(x)).collect(),
            edge_labels: family[nv..].iter().map(|&m| MorId(m)).collect(),
        })
        .collect();
    reps.sort();
    reps
}

/// Restriction of `r` along `f: Γ → Ξ`.
pub fn pullback_rep(c: &FinCat, f: &QuiverMor, r: &Representation) -> Result<Representation> {
    r.check(c, &f.target)?;
    Ok(pullback_rep_unchecked(c, f, r))
}

pub(crate) fn pullback_rep_unchecked(
    c: &FinCat,
    f: &QuiverMor,
    r: &Representation,
) -> Representation {
    Representation {
        vertex_labels: f.vertex_map.iter().map(|v| r.vertex_labels[v.0]).collect(),
        edge_labels: f.edge_paths.iter().map(|p| r.along(c, p)).collect(),
    }
}

/// Outcome of a closed-sheaf check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafVerdict {
    pub total: usize,
    pub left: usize,
    pub right: usize,
    pub intersection: usize,
    pub fiber_product: usize,
    pub bijective: bool,
    pub witness: Option<SheafWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SheafWitness {
    /// Two representations with the same restrictions.
    NotInjective(Representation, Representation),
    /// A compatible pair of restrictions not hit by any representation.
    NotSurjective(Representation, Representation),
}

/// Checks that `Rep(Γ) → Rep(Γ₋) ×_{Rep(Γ₀)} Rep(Γ₊)` is a bijection, with
/// every side enumerated on its own.
pub fn check_closed_sheaf(c: &FinCat, cover: &ClosedCover) -> SheafVerdict {
    let d = &cover.ambient;
    let whole = enumerate_reps(c, d);
    let left = enumerate_reps(c, &d.subgraph(&cover.left));
    let right = enumerate_reps(c, &d.subgraph(&cover.right));
    let inter = enumerate_reps(c, &d.subgraph(&cover.intersection));

    // Positions of the intersection inside each part.
    let positions = |part: &Subgraph| Subgraph {
        vertices: cover
            .intersection
            .vertices
            .iter()
            .map(|v| crate::digraph::VertexId(part.vertices.range(..v).count()))
            .collect(),
        edges: cover
            .intersection
            .edges
            .iter()
            .map(|e| crate::digraph::EdgeId(part.edges.range(..e).count()))
            .collect(),
    };
    let (in_left, in_right) = (positions(&cover.left), positions(&cover.right));

    let mut by_key: BTreeMap<Representation, Vec<&Representation>> = BTreeMap::new();
    for r in &right {
        by_key.entry(r.restrict(&in_right)).or_default().push(r);
    }
    let mut image: BTreeMap<(Representation, Representation), &Representation> = BTreeMap::new();
    let mut witness = None;
    for r in &whole {
        let key = (r.restrict(&cover.left), r.restrict(&cover.right));
        if let Some(prev) = image.insert(key, r) {
            witness.get_or_insert(SheafWitness::NotInjective(prev.clone(), r.clone()));
        }
    }
    let mut fiber_product = 0;
    for l in &left {
        if let Some(rs) = by_key.get(&l.restrict(&in_left)) {
            for &r in rs {
                fiber_product += 1;
                if witness.is_none() && !image.contains_key(&(l.clone(), r.clone())) {
                    witness = Some(SheafWitness::NotSurjective(l.clone(), r.clone()));
                }
            }
        }
    }
    let bijective = witness.is_none() && fiber_product == whole.len();
    SheafVerdict {
        total: whole.len(),
        left: left.len(),
        right: right.len(),
        intersection: inter.len(),
        fiber_product,
        bijective,
        witness,
    }
}
