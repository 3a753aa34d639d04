//! Morphism arithmetic for the paracyclic, cyclic and epicyclic categories.
//!
//! A paracyclic morphism `(1/m)Z → (1/n)Z` is a monotone map `G: Z → Z`
//! with `G(k + m) = G(k) + n`, stored as `G(0), …, G(m-1)`. An epicyclic
//! morphism `χ_m → χ_n` sends vertex `v` to `vertex_map[v]` and the edge
//! `v → v+1` to the path of `lengths[v]` consecutive edges starting there.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::digraph::{cyclic, EdgeId, VertexId};
use crate::error::{Error, Result};
use crate::quiver::{Path, QuiverMor};
use crate::simplex::MonotoneMap;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParaMor {
    m: usize,
    n: usize,
    values: Vec<i64>,
}

impl ParaMor {
    pub fn new(m: usize, n: usize, values: Vec<i64>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidMorphism(
                "objects are (1/m)Z with m ≥ 1".into(),
            ));
        }
        if values.len() != m {
            return Err(Error::InvalidMorphism(
                "expected one value per residue".into(),
            ));
        }
        if values.windows(2).any(|w| w[0] > w[1]) || values[m - 1] > values[0] + n as i64 {
            return Err(Error::InvalidMorphism("values are not monotone".into()));
        }
        Ok(ParaMor { m, n, values })
    }

    pub fn identity(n: usize) -> Self {
        ParaMor {
            m: n,
            n,
            values: (0..n as i64).collect(),
        }
    }

    /// `α^k` on `(1/n)Z`: translation by `k` periods.
    pub fn shift(n: usize, k: i64) -> Self {
        ParaMor {
            m: n,
            n,
            values: (0..n as i64).map(|i| i + k * n as i64).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The equivariant extension `G(k)`.
    pub fn eval(&self, k: i64) -> i64 {
        let m = self.m as i64;
        self.values[k.rem_euclid(m) as usize] + self.n as i64 * k.div_euclid(m)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ParaMor) -> Result<ParaMor> {
        compose_para(g, self)
    }
}

/// `g ∘ f`.
pub fn compose_para(g: &ParaMor, f: &ParaMor) -> Result<ParaMor> {
    if f.n != g.m {
        return Err(Error::Incomposable);
    }
    Ok(ParaMor {
        m: f.m,
        n: g.n,
        values: f.values.iter().map(|&x| g.eval(x)).collect(),
    })
}

/// `[p] ↦ (1/(p+1))Z`, acting on each copy of `[p]`.
pub fn delta_to_para(sigma: &MonotoneMap) -> ParaMor {
    ParaMor {
        m: sigma.p() + 1,
        n: sigma.q() + 1,
        values: sigma.values().iter().map(|&v| v as i64).collect(),
    }
}

/// `φ_r` on objects: `(1/m)Z ↦ (1/(rm))Z`.
pub fn para_phi_object(r: usize, m: usize) -> usize {
    r * m
}

/// `φ_r` on morphisms: the same map of integers, now equivariant for the
/// coarser action by `r` periods.
pub fn para_phi(r: usize, f: &ParaMor) -> ParaMor {
    assert!(r >= 1);
    ParaMor {
        m: r * f.m,
        n: r * f.n,
        values: (0..(r * f.m) as i64).map(|k| f.eval(k)).collect(),
    }
}

/// The right adjoint `j ↦ max{i : G(i) ≤ j}`, a morphism `(1/n)Z → (1/m)Z`.
pub fn dualize_para(f: &ParaMor) -> ParaMor {
    let n = f.n as i64;
    ParaMor {
        m: f.n,
        n: f.m,
        values: (0..n)
            .map(|j| {
                // G(i) ≤ j holds for i small enough; G(i) ≥ i·n/m roughly.
                let mut i = f.m as i64 * (j.div_euclid(n) - 1) - 1;
                while f.eval(i) > j {
                    i -= f.m as i64;
                }
                while f.eval(i + 1) <= j {
                    i += 1;
                }
                i
            })
            .collect(),
    }
}

/// The left adjoint `i ↦ min{j : H(j) ≥ i}`; inverse to [`dualize_para`].
pub fn undualize_para(h: &ParaMor) -> ParaMor {
    let n = h.n as i64;
    ParaMor {
        m: h.n,
        n: h.m,
        values: (0..n)
            .map(|i| {
                let mut j = h.m as i64 * (i.div_euclid(n) + 1) + 1;
                while h.eval(j) < i {
                    j += h.m as i64;
                }
                while h.eval(j - 1) >= i {
                    j -= 1;
                }
                j
            })
            .collect(),
    }
}

/// Conjugation by the one-step translation `k ↦ k + 1`, which is what
/// dualizing twice amounts to: `G ↦ (i ↦ G(i + 1) - 1)`.
pub fn unit_conjugate(f: &ParaMor) -> ParaMor {
    ParaMor {
        m: f.m,
        n: f.n,
        values: (0..f.m as i64).map(|i| f.eval(i + 1) - 1).collect(),
    }
}

/// All paracyclic morphisms `(1/m)Z → (1/n)Z` with `0 ≤ G(0) < n`; every
/// morphism is a translate of exactly one of these.
pub fn enumerate_para(m: usize, n: usize) -> Vec<ParaMor> {
    let mut out = Vec::new();
    for g0 in 0..n as i64 {
        let mut values = vec![g0; m];
        loop {
            out.push(ParaMor {
                m,
                n,
                values: values.clone(),
            });
            let mut i = m;
            let mut advanced = false;
            while i > 1 {
                i -= 1;
                if values[i] < g0 + n as i64 {
                    values[i] += 1;
                    let v = values[i];
                    for w in &mut values[i + 1..] {
                        *w = v;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpiMor {
    m: usize,
    n: usize,
    vertex_map: Vec<usize>,
    lengths: Vec<u64>,
}

impl EpiMor {
    pub fn new(m: usize, n: usize, vertex_map: Vec<usize>, lengths: Vec<u64>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyCycle);
        }
        if vertex_map.len() != m || lengths.len() != m {
            return Err(Error::InvalidMorphism(
                "expected one entry per vertex".into(),
            ));
        }
        if vertex_map.iter().any(|&v| v >= n) {
            return Err(Error::InvalidMorphism(
                "vertex outside the target cycle".into(),
            ));
        }
        for v in 0..m {
            let step = (vertex_map[(v + 1) % m] + n - vertex_map[v]) % n;
            if lengths[v] % n as u64 != step as u64 {
                return Err(Error::InvalidMorphism(alloc::format!(
                    "length at vertex {v} does not reach the image of the next vertex"
                )));
            }
        }
        if lengths.iter().all(|&l| l == 0) {
            return Err(Error::InvalidMorphism("constant maps are excluded".into()));
        }
        Ok(EpiMor {
            m,
            n,
            vertex_map,
            lengths,
        })
    }

    pub fn identity(n: usize) -> Self {
        EpiMor {
            m: n,
            n,
            vertex_map: (0..n).collect(),
            lengths: vec![1; n],
        }
    }

    /// The loop `χ_1 → χ_1` wound `r` times.
    pub fn loop_power(r: u64) -> Self {
        assert!(r >= 1);
        EpiMor {
            m: 1,
            n: 1,
            vertex_map: vec![0],
            lengths: vec![r],
        }
    }

    /// The standard covering `χ_{rn} → χ_n`, `i ↦ i mod n`.
    pub fn cover(r: usize, n: usize) -> Self {
        EpiMor {
            m: r * n,
            n,
            vertex_map: (0..r * n).map(|i| i % n).collect(),
            lengths: vec![1; r * n],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &EpiMor) -> Result<EpiMor> {
        compose_epi(g, self)
    }

    /// The same morphism as a functor of free categories on cyclic graphs.
    pub fn to_quiver_mor(&self) -> QuiverMor {
        let source = cyclic(self.m).expect("m ≥ 1");
        let target = cyclic(self.n).expect("n ≥ 1");
        let edge_paths = (0..self.m)
            .map(|v| {
                let a = self.vertex_map[v];
                Path {
                    start: VertexId(a),
                    end: VertexId(self.vertex_map[(v + 1) % self.m]),
                    edges: (0..self.lengths[v] as usize)
                        .map(|j| EdgeId((a + j) % self.n))
                        .collect(),
                }
            })
            .collect();
        QuiverMor {
            source,
            target,
            vertex_map: self.vertex_map.iter().map(|&v| VertexId(v)).collect(),
            edge_paths,
        }
    }

    /// Reads a quiver morphism between cyclic graphs as an epicyclic one.
    pub fn from_quiver_mor(f: &QuiverMor) -> Result<Self> {
        let m = f.source.vertex_count();
        let n = f.target.vertex_count();
        if f.source != cyclic(m.max(1))? || f.target != cyclic(n.max(1))? {
            return Err(Error::Incompatible("not a map of standard cycles".into()));
        }
        EpiMor::new(
            m,
            n,
            f.vertex_map.iter().map(|v| v.0).collect(),
            f.edge_paths.iter().map(|p| p.len() as u64).collect(),
        )
    }
}

/// `g ∘ f`, substituting `g`'s lengths along each of `f`'s paths.
pub fn compose_epi(g: &EpiMor, f: &EpiMor) -> Result<EpiMor> {
    if f.n != g.m {
        return Err(Error::Incomposable);
    }
    let period: u64 = g.lengths.iter().sum();
    Ok(EpiMor {
        m: f.m,
        n: g.n,
        vertex_map: f.vertex_map.iter().map(|&v| g.vertex_map[v]).collect(),
        lengths: (0..f.m)
            .map(|v| {
                // Whole turns around χ_{g.m} contribute the full period.
                let l = f.lengths[v];
                let turns = l / g.m as u64;
                let rest = (l % g.m as u64) as usize;
                turns * period
                    + (0..rest)
                        .map(|j| g.lengths[(f.vertex_map[v] + j) % g.m])
                        .sum::<u64>()
            })
            .collect(),
    })
}

/// Winding number `Σℓ / n`.
pub fn degree(f: &EpiMor) -> u64 {
    f.lengths.iter().sum::<u64>() / f.n as u64
}

/// The quotient by the translation action.
pub fn project_para_to_epi(f: &ParaMor) -> EpiMor {
    let n = f.n as i64;
    EpiMor {
        m: f.m,
        n: f.n,
        vertex_map: f.values.iter().map(|&g| g.rem_euclid(n) as usize).collect(),
        lengths: (0..f.m as i64)
            .map(|v| (f.eval(v + 1) - f.eval(v)) as u64)
            .collect(),
    }
}

/// A paracyclic lift of a degree-one morphism, with `0 ≤ G(0) < n`.
pub fn para_lift(f: &EpiMor) -> Option<ParaMor> {
    if degree(f) != 1 {
        return None;
    }
    let mut values = Vec::with_capacity(f.m);
    let mut g = f.vertex_map[0] as i64;
    for v in 0..f.m {
        values.push(g);
        g += f.lengths[v] as i64;
    }
    Some(ParaMor {
        m: f.m,
        n: f.n,
        values,
    })
}

/// All epicyclic morphisms `χ_m → χ_n` of the given degree.
pub fn enumerate_epi(m: usize, n: usize, deg: u64) -> Vec<EpiMor> {
    let total = deg * n as u64;
    let mut out = Vec::new();
    if total == 0 {
        return out;
    }
    let mut lengths = vec![0u64; m];
    compositions(total, 0, &mut lengths, &mut |ls| {
        for v0 in 0..n {
            let mut vm = Vec::with_capacity(m);
            let mut at = v0;
            for &l in ls {
                vm.push(at);
                at = (at + l as usize) % n;
            }
            out.push(EpiMor {
                m,
                n,
                vertex_map: vm,
                lengths: ls.to_vec(),
            });
        }
    });
    out.sort();
    out
}

fn compositions(rest: u64, i: usize, parts: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    if i + 1 == parts.len() {
        parts[i] = rest;
        emit(parts);
        return;
    }
    for x in 0..=rest {
        parts[i] = x;
        compositions(rest - x, i + 1, parts, emit);
    }
}

/// Factors `f` of degree `r` as `cover ∘ cyc` with `cyc` of degree one and
/// `cover` the standard `χ_{rn} → χ_n`; `cyc` sends vertex 0 to
/// `vertex_map[0]`.
pub fn cartesian_factor(f: &EpiMor) -> (EpiMor, EpiMor) {
    let r = degree(f) as usize;
    let big = r * f.n;
    let mut vm = Vec::with_capacity(f.m);
    let mut at = f.vertex_map[0];
    for &l in &f.lengths {
        vm.push(at);
        at = (at + l as usize) % big;
    }
    let cyc = EpiMor {
        m: f.m,
        n: big,
        vertex_map: vm,
        lengths: f.lengths.clone(),
    };
    (cyc, EpiMor::cover(r, f.n))
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    let mut s = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&alloc::format!("{x}"));
    }
    s
}

impl fmt::Display for ParaMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} : {}", self.m, self.n, join(&self.values))
    }
}

impl fmt::Display for EpiMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} : {} | {}",
            self.m,
            self.n,
            join(&self.vertex_map),
            join(&self.lengths)
        )
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidMorphism(alloc::format!("cannot parse `{t}`")))
        })
        .collect()
}

fn parse_header(s: &str) -> Result<(usize, usize, &str)> {
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| Error::InvalidMorphism("expected `m n : …`".into()))?;
    let mn: Vec<usize> = parse_list(head)?;
    match mn[..] {
        [m, n] => Ok((m, n, rest)),
        _ => Err(Error::InvalidMorphism("expected `m n : …`".into())),
    }
}

impl FromStr for ParaMor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (m, n, rest) = parse_header(s)?;
        ParaMor::new(m, n, parse_list(rest)?)
    }
}

impl FromStr for EpiMor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (m, n, rest) = parse_header(s)?;
        let (vs, ls) = rest
            .split_once('|')
            .ok_or_else(|| Error::InvalidMorphism("expected `… | lengths`".into()))?;
        EpiMor::new(m, n, parse_list(vs)?, parse_list(ls)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::compose_quiver_mor;
    use crate::simplex::all_monotone_maps;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn para(m: usize, n: usize, v: &[i64]) -> ParaMor {
        ParaMor::new(m, n, v.to_vec()).unwrap()
    }

    #[test]
    fn para_composition_examples() {
        let f = para(2, 3, &[0, 2]);
        assert_eq!(compose_para(&ParaMor::identity(3), &f).unwrap(), f);
        let a = ParaMor::shift(2, 1);
        assert_eq!(compose_para(&a, &a).unwrap(), ParaMor::shift(2, 2));
        let g = para(3, 1, &[0, 0, 1]);
        let h = compose_para(&g, &f).unwrap();
        for k in -10..=10 {
            assert_eq!(h.eval(k), g.eval(f.eval(k)));
        }
        assert_eq!(compose_para(&f, &f), Err(Error::Incomposable));
    }

    #[test]
    fn para_rejects_non_monotone() {
        assert!(ParaMor::new(2, 1, vec![0, 2]).is_err());
        assert!(ParaMor::new(2, 1, vec![1, 0]).is_err());
        assert!(ParaMor::new(2, 1, vec![0, 1]).is_ok());
    }

    #[test]
    fn epi_examples() {
        let c = compose_epi(&EpiMor::loop_power(2), &EpiMor::loop_power(3)).unwrap();
        assert_eq!(c, EpiMor::loop_power(6));
        let f = EpiMor::new(2, 1, vec![0, 0], vec![1, 0]).unwrap();
        assert_eq!(compose_epi(&EpiMor::identity(1), &f).unwrap(), f);
        assert_eq!(degree(&f), 1);
        assert_eq!(degree(&EpiMor::identity(4)), 1);
        assert_eq!(degree(&EpiMor::loop_power(5)), 5);
        assert!(EpiMor::new(2, 1, vec![0, 0], vec![0, 0]).is_err());
        assert!(EpiMor::new(2, 3, vec![0, 1], vec![2, 2]).is_err());
    }

    #[test]
    fn epi_composition_matches_quiver_substitution() {
        for m in 1..=3 {
            for n in 1..=3 {
                for p in 1..=3 {
                    for f in enumerate_epi(m, n, 1)
                        .into_iter()
                        .chain(enumerate_epi(m, n, 2))
                    {
                        for g in enumerate_epi(n, p, 1)
                            .into_iter()
                            .chain(enumerate_epi(n, p, 2))
                        {
                            let h = compose_epi(&g, &f).unwrap();
                            let q =
                                compose_quiver_mor(&g.to_quiver_mor(), &f.to_quiver_mor()).unwrap();
                            assert_eq!(h.to_quiver_mor(), q);
                            assert_eq!(EpiMor::from_quiver_mor(&q).unwrap(), h);
                            assert_eq!(degree(&h), degree(&g) * degree(&f));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            project_para_to_epi(&ParaMor::identity(3)),
            EpiMor::identity(3)
        );
        let e = project_para_to_epi(&para(2, 3, &[0, 2]));
        assert_eq!(e.vertex_map(), &[0, 2]);
        assert_eq!(e.lengths(), &[2, 1]);
        assert_eq!(degree(&e), 1);
        for n in 1..=4 {
            assert_eq!(
                project_para_to_epi(&ParaMor::shift(n, 1)),
                EpiMor::identity(n)
            );
        }
    }

    #[test]
    fn projection_is_functorial_and_surjective() {
        for m in 1..=4 {
            for n in 1..=4 {
                let image: BTreeSet<_> = enumerate_para(m, n)
                    .iter()
                    .map(project_para_to_epi)
                    .collect();
                let target: BTreeSet<_> = enumerate_epi(m, n, 1).into_iter().collect();
                assert_eq!(image, target);
                for f in &target {
                    assert_eq!(&project_para_to_epi(&para_lift(f).unwrap()), f);
                }
                for p in 1..=4 {
                    for f in enumerate_para(m, n) {
                        for g in enumerate_para(n, p) {
                            let lhs = project_para_to_epi(&compose_para(&g, &f).unwrap());
                            let rhs =
                                compose_epi(&project_para_to_epi(&g), &project_para_to_epi(&f))
                                    .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            delta_to_para(&MonotoneMap::identity(1)),
            ParaMor::identity(2)
        );
        assert_eq!(
            delta_to_para(&MonotoneMap::new(1, alloc::vec![0]).unwrap()),
            para(1, 2, &[0])
        );
        assert_eq!(
            delta_to_para(&MonotoneMap::new(0, alloc::vec![0, 0]).unwrap()),
            para(2, 1, &[0, 0])
        );
    }

    #[test]
    fn delta_to_para_is_functorial() {
        for p in 0..=3 {
            assert_eq!(
                delta_to_para(&MonotoneMap::identity(p)),
                ParaMor::identity(p + 1)
            );
            for q in 0..=3 {
                for r in 0..=3 {
                    for s in all_monotone_maps(p, q) {
                        for t in all_monotone_maps(q, r) {
                            assert_eq!(
                                delta_to_para(&s.then(&t).unwrap()),
                                compose_para(&delta_to_para(&t), &delta_to_para(&s)).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn phi_laws() {
        let f = para(2, 3, &[0, 2]);
        assert_eq!(para_phi(1, &f), f);
        assert_eq!(para_phi_object(2, 1), 2);
        assert_eq!(para_phi(2, &ParaMor::identity(1)), ParaMor::identity(2));
        // φ_2 of the generator, applied twice, is the generator one level up.
        let a = para_phi(2, &ParaMor::shift(1, 1));
        assert_eq!(compose_para(&a, &a).unwrap(), ParaMor::shift(2, 1));
        for r in 1..=4 {
            for s in 1..=4 {
                for m in 1..=3 {
                    for n in 1..=3 {
                        for f in enumerate_para(m, n) {
                            assert_eq!(para_phi(r, &para_phi(s, &f)), para_phi(r * s, &f));
                        }
                    }
                    let mut power = ParaMor::identity(r * m);
                    let step = para_phi(r, &ParaMor::shift(m, 1));
                    for _ in 0..r {
                        power = compose_para(&step, &power).unwrap();
                    }
                    assert_eq!(power, ParaMor::shift(r * m, 1));
                }
            }
        }
    }

    #[test]
    fn duality_laws() {
        for n in 1..=4 {
            assert_eq!(dualize_para(&ParaMor::identity(n)), ParaMor::identity(n));
            assert_eq!(dualize_para(&ParaMor::shift(n, 1)), ParaMor::shift(n, -1));
        }
        for m in 1..=3 {
            for n in 1..=3 {
                for f in enumerate_para(m, n) {
                    let d = dualize_para(&f);
                    for j in -8..=8 {
                        let max = (-60..=60).filter(|&i| f.eval(i) <= j).max().unwrap();
                        assert_eq!(d.eval(j), max);
                    }
                    assert_eq!(undualize_para(&d), f);
                    assert_eq!(dualize_para(&d), unit_conjugate(&f));
                    for p in 1..=3 {
                        for g in enumerate_para(n, p) {
                            assert_eq!(
                                dualize_para(&compose_para(&g, &f).unwrap()),
                                compose_para(&d, &dualize_para(&g)).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cartesian_factor_examples() {
        let id = EpiMor::identity(3);
        assert_eq!(cartesian_factor(&id), (id.clone(), id.clone()));
        let (cyc, cover) = cartesian_factor(&EpiMor::loop_power(6));
        assert_eq!((cyc.m(), cyc.n(), cyc.lengths()), (1, 6, &[6u64][..]));
        assert_eq!(degree(&cyc), 1);
        assert_eq!(cover, EpiMor::cover(6, 1));
        let f = EpiMor::new(2, 3, vec![1, 0], vec![2, 1]).unwrap();
        assert_eq!(cartesian_factor(&f), (f.clone(), EpiMor::identity(3)));
        for m in 1..=3 {
            for n in 1..=3 {
                for d in 1..=3 {
                    for f in enumerate_epi(m, n, d) {
                        let (cyc, cover) = cartesian_factor(&f);
                        assert_eq!(degree(&cyc), 1);
                        assert_eq!(degree(&cover), d);
                        assert_eq!(compose_epi(&cover, &cyc).unwrap(), f);
                    }
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let f: ParaMor = "2 3 : 0 2".parse().unwrap();
        assert_eq!(f.to_string(), "2 3 : 0 2");
        let e: EpiMor = "2 1 : 0 0 | 1 0".parse().unwrap();
        assert_eq!(e.to_string(), "2 1 : 0 0 | 1 0");
        assert!("2 1 : 0 0".parse::<EpiMor>().is_err());
        assert!("x".parse::<ParaMor>().is_err());
    }
}
