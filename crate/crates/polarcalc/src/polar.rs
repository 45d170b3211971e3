//! The polar space as a point-line geometry.
//!
//! Construction materialises every singular projective point of the form,
//! indexes it, and caches one collinearity bitset per point; from then on
//! perps are bitset intersections and all heavier structure (generators,
//! sub-generators, stars) is enumerated lazily and cached.  Subspaces keep
//! their canonical echelon form, so deduplication during the DFS/BFS
//! enumerations is plain hashing.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::forms::{Form, FormKind};
use crate::gf::Gf;
use crate::linalg::{normalize_point, Subspace};

/// Default cap on the number of points of a materialised space.
pub const DEFAULT_POINT_CAP: usize = 2000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolarError {
    #[error("space too large: {points} singular points exceed the cap {cap}")]
    TooLarge { points: usize, cap: usize },
    #[error("the form defines a degenerate polar space")]
    Degenerate,
    #[error("points are not opposite")]
    NotOpposite,
    #[error("subspace is not a sub-generator")]
    NotSubGenerator,
    #[error("point set is not closed under lines")]
    NotASubspace,
    #[error("the given subspace is not totally singular")]
    NotSingular,
}

/// Bitset over the point indices of one space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PtSet {
    words: Vec<u64>,
    n: usize,
}

impl PtSet {
    pub fn empty(n: usize) -> PtSet {
        PtSet { words: vec![0; n.div_ceil(64)], n }
    }

    pub fn full(n: usize) -> PtSet {
        let mut s = PtSet::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn intersect_with(&mut self, other: &PtSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn union_with(&mut self, other: &PtSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset_of(&self, other: &PtSet) -> bool {
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// How many generators contain a given sub-generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubGeneratorClass {
    Deep,
    Hyperbolic,
    Thick(usize),
}

/// Coarse classification of a corank-2 star.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarClass {
    /// Grid: a hyperbolic-quadric style rank-2 geometry, two lines per point.
    Grid,
    /// Nondegenerate rank-2 quadric in `PG(4)` with a nucleus.
    ParabolicWithNucleus,
    /// Nondegenerate rank-2 geometry in dimension at least 6.
    Rank2HigherDim,
    /// Degenerate: a cone over a rank-1 base.
    Cone,
    /// Two lines through a common point.
    TwoLines,
    /// A single line.
    OneLine,
    /// Anything else (rank < 2, empty, ...).
    Other,
}

/// A star geometry `X^perp / X`, realized on an explicit complement.
#[derive(Clone, Debug)]
pub struct StarGeometry {
    /// Induced form on the complement, in the complement's basis.
    pub form: Form,
    /// Basis of the complement inside the original ambient space (rows).
    pub complement: Subspace,
    /// Taxonomy tag, only computed for corank-2 stars.
    pub class: Option<StarClass>,
}

/// A materialised polar space.
pub struct PolarSpace {
    form: Form,
    points: Vec<Vec<u16>>,
    index: HashMap<Vec<u16>, usize>,
    perp_bits: Vec<PtSet>,
    rank: usize,
    singular_subspaces: OnceLock<Vec<Subspace>>,
    generators: OnceLock<Vec<Subspace>>,
    generator_bits: OnceLock<Vec<PtSet>>,
    sub_generators: OnceLock<Vec<Subspace>>,
    lines: OnceLock<Vec<Subspace>>,
}

impl PolarSpace {
    pub fn new(form: Form) -> Result<PolarSpace, PolarError> {
        PolarSpace::with_cap(form, DEFAULT_POINT_CAP)
    }

    pub fn with_cap(form: Form, cap: usize) -> Result<PolarSpace, PolarError> {
        PolarSpace::build(form, cap, true)
    }

    fn build(form: Form, cap: usize, check_axioms: bool) -> Result<PolarSpace, PolarError> {
        let gf = form.gf().clone();
        let n = form.ambient();
        let mut points = Vec::new();
        let mut index = HashMap::new();
        for p in Subspace::full(&gf, n).projective_points() {
            if form.is_singular(&p) {
                if points.len() >= cap {
                    return Err(PolarError::TooLarge { points: points.len() + 1, cap });
                }
                index.insert(p.clone(), points.len());
                points.push(p);
            }
        }
        if points.is_empty() {
            return Err(PolarError::Degenerate);
        }
        let np = points.len();
        let mut perp_bits = Vec::with_capacity(np);
        for i in 0..np {
            let mut s = PtSet::empty(np);
            for j in 0..np {
                if form.bilin(&points[i], &points[j]) == 0 {
                    s.insert(j);
                }
            }
            perp_bits.push(s);
        }
        // Nondegeneracy: no point collinear with every point.
        let mut all = PtSet::full(np);
        for s in &perp_bits {
            all.intersect_with(s);
        }
        if !all.is_empty() {
            return Err(PolarError::Degenerate);
        }
        let mut space = PolarSpace {
            form,
            points,
            index,
            perp_bits,
            rank: 0,
            singular_subspaces: OnceLock::new(),
            generators: OnceLock::new(),
            generator_bits: OnceLock::new(),
            sub_generators: OnceLock::new(),
            lines: OnceLock::new(),
        };
        space.rank = space.greedy_generator().dim();
        if check_axioms {
            space.one_or_all_self_check();
        }
        Ok(space)
    }

    /// Constructor for internally derived geometries (perp spaces, stars);
    /// skips the axiom self-check that user-facing construction runs.
    pub(crate) fn new_internal(form: Form) -> Result<PolarSpace, PolarError> {
        PolarSpace::build(form, DEFAULT_POINT_CAP, false)
    }

    /// Buekenhout-Shult "one or all" sanity check, exhaustive on small spaces
    /// and windowed above that.
    fn one_or_all_self_check(&self) {
        if self.points.len() > 400 {
            return;
        }
        let q = self.gf().order() as usize;
        for line in self.lines() {
            let pts = self.subspace_points(line);
            for p in 0..self.points.len() {
                let c = pts.iter().filter(|&&x| self.collinear(p, x)).count();
                assert!(
                    c == 1 || c == q + 1,
                    "one-or-all axiom violated at point {p}"
                );
            }
        }
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn gf(&self) -> &Gf {
        self.form.gf()
    }

    pub fn ambient(&self) -> usize {
        self.form.ambient()
    }

    /// Vector-space dimension of the generators (the Witt index).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, i: usize) -> &[u16] {
        &self.points[i]
    }

    pub fn point_index(&self, v: &[u16]) -> Option<usize> {
        let p = normalize_point(self.gf(), v)?;
        self.index.get(&p).copied()
    }

    #[inline]
    pub fn collinear(&self, i: usize, j: usize) -> bool {
        self.perp_bits[i].contains(j)
    }

    pub fn perp_of_point(&self, i: usize) -> &PtSet {
        &self.perp_bits[i]
    }

    /// `X^perp` for a point set; the empty set perps to all points.
    pub fn perp_of_points(&self, pts: &[usize]) -> PtSet {
        let mut acc = PtSet::full(self.points.len());
        for &p in pts {
            acc.intersect_with(&self.perp_bits[p]);
        }
        acc
    }

    /// `X^perp` for a singular subspace, via its basis points.
    pub fn perp_of_subspace(&self, x: &Subspace) -> PtSet {
        let mut acc = PtSet::full(self.points.len());
        for row in x.basis_rows() {
            let i = self.point_index(row).expect("basis rows of singular subspaces are points");
            acc.intersect_with(&self.perp_bits[i]);
        }
        acc
    }

    /// Double perp of a point set.
    pub fn double_perp(&self, pts: &[usize]) -> PtSet {
        let perp = self.perp_of_points(pts);
        let mut acc = PtSet::full(self.points.len());
        for p in perp.iter() {
            acc.intersect_with(&self.perp_bits[p]);
        }
        acc
    }

    /// The hyperbolic line `{a, b}^perp^perp` of two opposite points.
    pub fn hyperbolic_line(&self, a: usize, b: usize) -> Result<PtSet, PolarError> {
        if a == b || self.collinear(a, b) {
            return Err(PolarError::NotOpposite);
        }
        Ok(self.double_perp(&[a, b]))
    }

    /// All points lying inside a subspace of the ambient space.
    pub fn subspace_points(&self, sub: &Subspace) -> Vec<usize> {
        sub.projective_points()
            .into_iter()
            .filter_map(|p| self.index.get(&p).copied())
            .collect()
    }

    /// Whether all points of the subspace are singular and pairwise collinear.
    pub fn is_totally_singular(&self, sub: &Subspace) -> bool {
        let rows: Vec<Vec<u16>> = sub.basis_rows().map(|r| r.to_vec()).collect();
        for (i, r) in rows.iter().enumerate() {
            if !self.form.is_singular(r) {
                return false;
            }
            for s in rows.iter().skip(i + 1) {
                if self.form.bilin(r, s) != 0 {
                    return false;
                }
            }
            // Quadratic forms also need singularity of sums, which pairwise
            // orthogonality plus singular basis vectors already gives in every
            // characteristic; the line check below is the cheap belt.
        }
        match rows.len() {
            0 | 1 => true,
            _ => sub
                .projective_points()
                .iter()
                .all(|p| self.form.is_singular(p)),
        }
    }

    /// Greedy chain extension; yields one generator deterministically.
    fn greedy_generator(&self) -> Subspace {
        let gf = self.gf().clone();
        let mut sub = Subspace::zero(&gf, self.ambient());
        let mut candidates = PtSet::full(self.points.len());
        loop {
            let Some(p) = candidates.iter().next() else { break };
            sub = sub.extend(&self.points[p]);
            candidates.intersect_with(&self.perp_bits[p]);
            let mut remaining = PtSet::empty(self.points.len());
            for i in candidates.iter() {
                if !sub.contains_vec(&self.points[i]) {
                    remaining.insert(i);
                }
            }
            candidates = remaining;
        }
        sub
    }

    /// Maximality of a totally singular subspace.
    pub fn is_generator(&self, sub: &Subspace) -> bool {
        if !self.is_totally_singular(sub) {
            return false;
        }
        let perp = self.perp_of_subspace(sub);
        perp.iter().all(|p| sub.contains_vec(&self.points[p]))
    }

    /// Every nonzero totally singular subspace, canonical order; found by a
    /// breadth-first point-extension search with canonical-form dedup.
    pub fn singular_subspaces(&self) -> &[Subspace] {
        self.singular_subspaces.get_or_init(|| {
            let gf = self.gf().clone();
            let np = self.points.len();
            let mut all: Vec<Subspace> = Vec::new();
            let mut level: Vec<(Subspace, PtSet)> =
                vec![(Subspace::zero(&gf, self.ambient()), PtSet::full(np))];
            let mut seen: HashSet<Subspace> = HashSet::new();
            while !level.is_empty() {
                let mut next: Vec<(Subspace, PtSet)> = Vec::new();
                for (sub, candidates) in level {
                    for p in candidates.iter() {
                        if sub.contains_vec(&self.points[p]) {
                            continue;
                        }
                        let bigger = sub.extend(&self.points[p]);
                        if seen.insert(bigger.clone()) {
                            let mut cand = candidates.clone();
                            cand.intersect_with(&self.perp_bits[p]);
                            next.push((bigger, cand));
                        }
                    }
                    if !sub.is_zero() {
                        all.push(sub);
                    }
                }
                level = next;
            }
            all.sort_by(|a, b| (a.dim(), &a.basis().a).cmp(&(b.dim(), &b.basis().a)));
            all.dedup();
            all
        })
    }

    /// All maximal totally singular subspaces, canonical order.
    pub fn generators(&self) -> &[Subspace] {
        self.generators.get_or_init(|| {
            let out: Vec<Subspace> = self
                .singular_subspaces()
                .iter()
                .filter(|sub| {
                    let perp = self.perp_of_subspace(sub);
                    perp.iter().all(|p| sub.contains_vec(&self.points[p]))
                })
                .cloned()
                .collect();
            for g in &out {
                assert_eq!(g.dim(), self.rank, "generators share one dimension at finite rank");
            }
            out
        })
    }

    /// Point bitsets of the generators, aligned with [`Self::generators`].
    pub fn generator_point_sets(&self) -> &[PtSet] {
        self.generator_bits.get_or_init(|| {
            self.generators()
                .iter()
                .map(|g| {
                    let mut s = PtSet::empty(self.points.len());
                    for p in self.subspace_points(g) {
                        s.insert(p);
                    }
                    s
                })
                .collect()
        })
    }

    /// All sub-generators (hyperplanes of generators), canonical order.
    pub fn sub_generators(&self) -> &[Subspace] {
        self.sub_generators.get_or_init(|| {
            let mut seen: HashSet<Subspace> = HashSet::new();
            for g in self.generators() {
                for h in subspace_hyperplanes(g) {
                    seen.insert(h);
                }
            }
            let mut out: Vec<Subspace> = seen.into_iter().collect();
            out.sort_by(|a, b| a.basis().a.cmp(&b.basis().a));
            out
        })
    }

    /// All totally singular lines.
    pub fn lines(&self) -> &[Subspace] {
        self.lines.get_or_init(|| {
            let mut seen: HashSet<Subspace> = HashSet::new();
            let np = self.points.len();
            for i in 0..np {
                for j in self.perp_bits[i].iter() {
                    if j > i {
                        let sub = Subspace::span(
                            self.gf(),
                            &[self.points[i].clone(), self.points[j].clone()],
                            self.ambient(),
                        )
                        .unwrap();
                        if sub.dim() == 2 {
                            seen.insert(sub);
                        }
                    }
                }
            }
            let mut out: Vec<Subspace> = seen.into_iter().collect();
            out.sort_by(|a, b| a.basis().a.cmp(&b.basis().a));
            out
        })
    }

    /// The projective line through two distinct collinear points, as points.
    pub fn line_through(&self, a: usize, b: usize) -> Vec<usize> {
        debug_assert!(a != b && self.collinear(a, b));
        let sub = Subspace::span(
            self.gf(),
            &[self.points[a].clone(), self.points[b].clone()],
            self.ambient(),
        )
        .unwrap();
        self.subspace_points(&sub)
    }

    /// Closure of a point set under lines: the subspace it generates.
    pub fn line_closure(&self, start: &PtSet) -> PtSet {
        let mut closed = start.clone();
        let mut frontier: Vec<usize> = closed.to_vec();
        while let Some(u) = frontier.pop() {
            let members: Vec<usize> = closed.to_vec();
            for v in members {
                if v != u && self.collinear(u, v) {
                    for w in self.line_through(u, v) {
                        if !closed.contains(w) {
                            closed.insert(w);
                            frontier.push(w);
                        }
                    }
                }
            }
        }
        closed
    }

    /// Is the point set closed under lines?
    pub fn is_line_closed(&self, set: &PtSet) -> bool {
        let members: Vec<usize> = set.to_vec();
        for (k, &u) in members.iter().enumerate() {
            for &v in &members[k + 1..] {
                if self.collinear(u, v) && !self.line_through(u, v).iter().all(|w| set.contains(*w))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Two singular subspaces are opposite when neither meets the perp of the
    /// other; generators are opposite iff they are disjoint.
    pub fn are_opposite(&self, x: &Subspace, y: &Subspace) -> bool {
        let xo = self.form.orth(x);
        if !xo.meet(y).expect("same ambient").is_zero() {
            return false;
        }
        let yo = self.form.orth(y);
        yo.meet(x).unwrap().is_zero()
    }

    /// Number of generators containing the sub-generator `n`, by its star.
    pub fn classify_sub_generator(&self, n: &Subspace) -> Result<SubGeneratorClass, PolarError> {
        if !self.is_totally_singular(n) || n.dim() + 1 != self.rank {
            return Err(PolarError::NotSubGenerator);
        }
        let star = self.star(n)?;
        let count = Subspace::full(star.form.gf(), star.form.ambient())
            .projective_points()
            .iter()
            .filter(|p| star.form.is_singular(p))
            .count();
        Ok(match count {
            1 => SubGeneratorClass::Deep,
            2 => SubGeneratorClass::Hyperbolic,
            c => SubGeneratorClass::Thick(c),
        })
    }

    /// The star of a totally singular subspace: the induced geometry on
    /// `X^perp / X`, realized on a deterministic complement.
    pub fn star(&self, x: &Subspace) -> Result<StarGeometry, PolarError> {
        if !self.is_totally_singular(x) {
            return Err(PolarError::NotSingular);
        }
        let a = self.form.orth(x);
        let comp = x.complement_in(&a).expect("x lies inside its own perp");
        let form = self.form.restrict_to(&comp);
        let corank = self.rank - x.dim();
        let class = (corank == 2).then(|| classify_corank2_star(&form));
        Ok(StarGeometry { form, complement: comp, class })
    }

    /// Rosette test for a line-closed point set, straight from the defining
    /// conditions: a union of more than one singular subspace, all sharing
    /// the radical `K` as a common hyperplane, with pairwise perps equal to
    /// `K`.
    pub fn is_rosette(&self, set: &PtSet) -> Result<bool, PolarError> {
        if !self.is_line_closed(set) {
            return Err(PolarError::NotASubspace);
        }
        let members = set.to_vec();
        if members.is_empty() {
            return Ok(false);
        }
        // Maximal singular subspaces inside the set.
        let maximal = self.maximal_singular_in(set);
        if maximal.len() < 2 {
            return Ok(false);
        }
        // Radical K of the set.
        let mut rad = set.clone();
        for &p in &members {
            rad.intersect_with(&self.perp_bits[p]);
        }
        let k_points = rad.to_vec();
        let k = Subspace::span(
            self.gf(),
            &k_points.iter().map(|&p| self.points[p].clone()).collect::<Vec<_>>(),
            self.ambient(),
        )
        .unwrap();
        let kdim = k.dim();
        // The union must be exactly the set.
        let mut union = PtSet::empty(self.points.len());
        for m in &maximal {
            for p in self.subspace_points(m) {
                union.insert(p);
            }
        }
        if union != *set {
            return Ok(false);
        }
        for (i, m) in maximal.iter().enumerate() {
            if m.dim() != kdim + 1 || !m.contains(&k) {
                return Ok(false);
            }
            for m2 in maximal.iter().skip(i + 1) {
                if m.meet(m2).unwrap() != k {
                    return Ok(false);
                }
                // X_i^perp meet X_j = K.
                let perp_i = self.perp_of_subspace(m);
                let in_both: Vec<usize> = self
                    .subspace_points(m2)
                    .into_iter()
                    .filter(|&p| perp_i.contains(p))
                    .collect();
                let sub = Subspace::span(
                    self.gf(),
                    &in_both.iter().map(|&p| self.points[p].clone()).collect::<Vec<_>>(),
                    self.ambient(),
                )
                .unwrap();
                if sub != k {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Maximal totally singular subspaces contained in a point set.
    fn maximal_singular_in(&self, set: &PtSet) -> Vec<Subspace> {
        let gf = self.gf().clone();
        let members = set.to_vec();
        let mut out: Vec<Subspace> = Vec::new();
        let mut seen: HashSet<Subspace> = HashSet::new();
        let mut level: Vec<(Subspace, Vec<usize>)> =
            vec![(Subspace::zero(&gf, self.ambient()), members)];
        while !level.is_empty() {
            let mut next = Vec::new();
            for (sub, cands) in level {
                let mut extended = false;
                for (ci, &p) in cands.iter().enumerate() {
                    if sub.contains_vec(&self.points[p]) {
                        continue;
                    }
                    extended = true;
                    let bigger = sub.extend(&self.points[p]);
                    if seen.insert(bigger.clone()) {
                        let cand2: Vec<usize> = cands[ci..]
                            .iter()
                            .copied()
                            .filter(|&x| self.collinear(p, x))
                            .collect();
                        next.push((bigger, cand2));
                    }
                }
                if !extended && !sub.is_zero() {
                    out.push(sub);
                }
            }
            level = next;
        }
        out.sort_by(|a, b| a.basis().a.cmp(&b.basis().a));
        out.dedup();
        // Drop non-maximal ones (contained in another).
        let out2: Vec<Subspace> = out
            .iter()
            .filter(|s| !out.iter().any(|t| t.dim() > s.dim() && t.contains(s)))
            .cloned()
            .collect();
        out2
    }
}

/// All hyperplanes of a subspace (codimension-1 subspaces).
pub fn subspace_hyperplanes(sub: &Subspace) -> Vec<Subspace> {
    let d = sub.dim();
    if d == 0 {
        return vec![];
    }
    let gf = sub.gf().clone();
    let ambient = sub.ambient();
    // Hyperplanes of F^d correspond to projective points of the dual F^d.
    let dual_pts = Subspace::full(&gf, d).projective_points();
    dual_pts
        .into_iter()
        .map(|functional| {
            // Kernel of the functional inside coordinate space F^d, mapped up.
            let mut rows: Vec<Vec<u16>> = Vec::new();
            let lead = functional.iter().position(|&c| c != 0).unwrap();
            for i in 0..d {
                if i == lead {
                    continue;
                }
                // e_i - (c_i / c_lead) e_lead spans the kernel.
                let ci = functional[i];
                let coeff = gf.vneg(gf.vmul(ci, gf.vinv(functional[lead])));
                let mut v = vec![0u16; ambient];
                let row_i = sub.basis().row(i);
                let row_l = sub.basis().row(lead);
                for j in 0..ambient {
                    v[j] = gf.vadd(row_i[j], gf.vmul(coeff, row_l[j]));
                }
                rows.push(v);
            }
            Subspace::span(&gf, &rows, ambient).unwrap()
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .collect()
}

/// Taxonomy of a rank-<=2 quadratic/alternating star geometry.
fn classify_corank2_star(form: &Form) -> StarClass {
    let gf = form.gf().clone();
    let m = form.ambient();
    let pts: Vec<Vec<u16>> = Subspace::full(&gf, m)
        .projective_points()
        .into_iter()
        .filter(|p| form.is_singular(p))
        .collect();
    if pts.is_empty() {
        return StarClass::Other;
    }
    // Lines of the star.
    let mut lines: HashSet<Subspace> = HashSet::new();
    for (i, p) in pts.iter().enumerate() {
        for q in pts.iter().skip(i + 1) {
            if form.bilin(p, q) == 0 {
                let l = Subspace::span(&gf, &[p.clone(), q.clone()], m).unwrap();
                if l.projective_points().iter().all(|v| form.is_singular(v)) {
                    lines.insert(l);
                }
            }
        }
    }
    let lines: Vec<Subspace> = lines.into_iter().collect();
    if lines.is_empty() {
        return StarClass::Other;
    }
    if lines.len() == 1 {
        let lp = lines[0].projective_points().len();
        return if lp == pts.len() { StarClass::OneLine } else { StarClass::Other };
    }
    if lines.len() == 2 {
        let meet = lines[0].meet(&lines[1]).unwrap();
        return if meet.dim() == 1 { StarClass::TwoLines } else { StarClass::Other };
    }
    // Geometric radical: singular points collinear with all singular points.
    let radical_pts: Vec<&Vec<u16>> = pts
        .iter()
        .filter(|p| pts.iter().all(|q| form.bilin(p, q) == 0))
        .collect();
    if !radical_pts.is_empty() {
        // Cone: all lines pass through the (unique) vertex.
        if radical_pts.len() == 1 {
            let vtx = radical_pts[0];
            if lines.iter().all(|l| l.contains_vec(vtx)) {
                return StarClass::Cone;
            }
        }
        return StarClass::Other;
    }
    // Nondegenerate rank-2: count lines through a point.
    let through_first = lines.iter().filter(|l| l.contains_vec(&pts[0])).count();
    if through_first == 2 && lines.iter().all(|_| true) {
        // Grids have exactly two lines per point; verify globally.
        let grid = pts.iter().all(|p| lines.iter().filter(|l| l.contains_vec(p)).count() == 2);
        if grid {
            return StarClass::Grid;
        }
    }
    let nucleus = form.kind() == FormKind::Quadratic && form.radical().dim() == 1;
    if m == 5 && nucleus {
        return StarClass::ParabolicWithNucleus;
    }
    if m >= 6 {
        return StarClass::Rank2HigherDim;
    }
    StarClass::Other
}
