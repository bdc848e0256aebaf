//! Finite categories enriched in an [`EnrichingLattice`], their functors,
//! presheaves and Yoneda embeddings.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{check_labels, position, SquareMatrix};
use crate::scalar_algebra::{EnrichingLattice, Kbar};

/// A finite `V`-category: labelled objects and a matrix of hom-objects.
///
/// Construction checks shape, labels and carrier membership only, so that
/// law-violating matrices can still be reported on by [`validate_category`].
#[derive(Debug, Clone, PartialEq)]
pub struct VCategory<L: EnrichingLattice> {
    lattice: L,
    objects: Vec<String>,
    hom: SquareMatrix<L::Value>,
}

/// A generalized metric space: a category enriched in `K̄`.
pub type KCategory<K> = VCategory<Kbar<K>>;

impl<L: EnrichingLattice> VCategory<L> {
    pub fn new(lattice: L, objects: Vec<String>, hom: SquareMatrix<L::Value>) -> Result<Self> {
        check_labels(&objects, hom.size())?;
        for (_, v) in hom.iter_indexed() {
            if !lattice.contains(v) {
                return Err(Error::Domain {
                    value: v.to_string(),
                    lattice: lattice.name().as_str(),
                });
            }
        }
        Ok(VCategory {
            lattice,
            objects,
            hom,
        })
    }

    pub fn from_rows<S: Into<String>>(
        lattice: L,
        objects: impl IntoIterator<Item = S>,
        rows: Vec<Vec<L::Value>>,
    ) -> Result<Self> {
        let objects = objects.into_iter().map(Into::into).collect();
        Self::new(lattice, objects, SquareMatrix::from_rows(rows)?)
    }

    /// Like [`VCategory::new`] but also rejects law violations.
    pub fn validated(lattice: L, objects: Vec<String>, hom: SquareMatrix<L::Value>) -> Result<Self> {
        let c = Self::new(lattice, objects, hom)?;
        let report = validate_category(&c)?;
        if !report.is_valid() {
            return Err(Error::InvalidCategory(report.to_string()));
        }
        Ok(c)
    }

    pub fn lattice(&self) -> &L {
        &self.lattice
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn size(&self) -> usize {
        self.objects.len()
    }

    pub fn hom_matrix(&self) -> &SquareMatrix<L::Value> {
        &self.hom
    }

    pub fn hom(&self, a: usize, b: usize) -> L::Value {
        self.hom[(a, b)]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        position(&self.objects, label)
    }

    /// The same matrix under new object labels.
    pub fn relabel(&self, objects: Vec<String>) -> Result<Self> {
        Self::new(self.lattice.clone(), objects, self.hom.clone())
    }
}

impl<L: EnrichingLattice> fmt::Display for VCategory<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} category on ({}): {}", self.lattice.name(), self.objects.join(","), self.hom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation<V> {
    /// `hom[a][b] ⊗ hom[b][c] ⋢ hom[a][c]`.
    Composition {
        a: String,
        b: String,
        c: String,
        lhs: V,
        rhs: V,
    },
    /// `unit ⋢ hom[a][a]`.
    Identity { a: String, unit: V, value: V },
}

impl<V: fmt::Display> fmt::Display for Violation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Composition { a, b, c, lhs, rhs } => write!(
                f,
                "composition fails at ({a},{b},{c}): hom({a},{b}) ⊗ hom({b},{c}) = {lhs} is not ⊑ hom({a},{c}) = {rhs}"
            ),
            Violation::Identity { a, unit, value } => {
                write!(f, "identity fails at {a}: unit {unit} is not ⊑ hom({a},{a}) = {value}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport<V> {
    pub violations: Vec<Violation<V>>,
}

impl<V> ValidationReport<V> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<V: fmt::Display> fmt::Display for ValidationReport<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks the composition and identity laws, listing every failure.
pub fn validate_category<L: EnrichingLattice>(c: &VCategory<L>) -> Result<ValidationReport<L::Value>> {
    let l = &c.lattice;
    let n = c.size();
    let unit = l.unit();
    let mut violations = Vec::new();
    for a in 0..n {
        if !l.leq(unit, c.hom(a, a)) {
            violations.push(Violation::Identity {
                a: c.objects[a].clone(),
                unit,
                value: c.hom(a, a),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let lhs = l.tensor(c.hom(a, b), c.hom(b, d))?;
                let rhs = c.hom(a, d);
                if !l.leq(lhs, rhs) {
                    violations.push(Violation::Composition {
                        a: c.objects[a].clone(),
                        b: c.objects[b].clone(),
                        c: c.objects[d].clone(),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(ValidationReport { violations })
}

pub fn is_valid<L: EnrichingLattice>(c: &VCategory<L>) -> Result<bool> {
    Ok(validate_category(c)?.is_valid())
}

/// `A^op`: same objects, transposed homs.
pub fn opposite<L: EnrichingLattice>(c: &VCategory<L>) -> VCategory<L> {
    VCategory {
        lattice: c.lattice.clone(),
        objects: c.objects.clone(),
        hom: c.hom.transpose(),
    }
}

/// An object map between two categories. Whether it is actually a functor
/// is decided by [`is_functor`]; equality is equality of object maps.
#[derive(Debug, Clone, PartialEq)]
pub struct VFunctor<L: EnrichingLattice> {
    domain: Arc<VCategory<L>>,
    codomain: Arc<VCategory<L>>,
    object_map: Vec<usize>,
}

impl<L: EnrichingLattice> VFunctor<L> {
    pub fn new(
        domain: Arc<VCategory<L>>,
        codomain: Arc<VCategory<L>>,
        object_map: Vec<usize>,
    ) -> Result<Self> {
        if object_map.len() != domain.size() {
            return Err(Error::Arity {
                expected: domain.size(),
                found: object_map.len(),
            });
        }
        if let Some(&bad) = object_map.iter().find(|&&i| i >= codomain.size()) {
            return Err(Error::Mismatch(format!(
                "object index {bad} is outside a codomain of size {}",
                codomain.size()
            )));
        }
        Ok(VFunctor {
            domain,
            codomain,
            object_map,
        })
    }

    /// Builds the map from `(from, to)` label pairs; every domain object
    /// must appear exactly once.
    pub fn from_labels(
        domain: Arc<VCategory<L>>,
        codomain: Arc<VCategory<L>>,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut map = vec![None; domain.size()];
        for &(from, to) in pairs {
            let i = domain.index_of(from)?;
            if map[i].is_some() {
                return Err(Error::DuplicateLabel(from.to_string()));
            }
            map[i] = Some(codomain.index_of(to)?);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::MissingLabel(domain.objects[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, map)
    }

    pub fn identity(c: Arc<VCategory<L>>) -> Self {
        let map = (0..c.size()).collect();
        VFunctor {
            domain: c.clone(),
            codomain: c,
            object_map: map,
        }
    }

    pub fn constant(domain: Arc<VCategory<L>>, codomain: Arc<VCategory<L>>, target: usize) -> Result<Self> {
        let map = vec![target; domain.size()];
        Self::new(domain, codomain, map)
    }

    pub fn domain(&self) -> &Arc<VCategory<L>> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<VCategory<L>> {
        &self.codomain
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.object_map[a]
    }
}

impl<L: EnrichingLattice> fmt::Display for VFunctor<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &j) in self.object_map.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", self.domain.objects[i], self.codomain.objects[j])?;
        }
        Ok(())
    }
}

/// The increasing condition `hom_A[a][a'] ⊑ hom_B[Fa][Fa']`.
pub fn is_functor<L: EnrichingLattice>(f: &VFunctor<L>) -> bool {
    let (a, b, l) = (&f.domain, &f.codomain, f.domain.lattice());
    let n = a.size();
    (0..n).all(|x| (0..n).all(|y| l.leq(a.hom(x, y), b.hom(f.apply(x), f.apply(y)))))
}

pub fn is_fully_faithful<L: EnrichingLattice>(f: &VFunctor<L>) -> bool {
    let (a, b) = (&f.domain, &f.codomain);
    let n = a.size();
    (0..n).all(|x| (0..n).all(|y| a.hom(x, y) == b.hom(f.apply(x), f.apply(y))))
}

pub fn is_isomorphism<L: EnrichingLattice>(f: &VFunctor<L>) -> bool {
    if f.domain.size() != f.codomain.size() || !is_fully_faithful(f) {
        return false;
    }
    let mut hit = vec![false; f.codomain.size()];
    for &j in &f.object_map {
        if std::mem::replace(&mut hit[j], true) {
            return false;
        }
    }
    true
}

/// `G ∘ F`.
pub fn compose_functors<L: EnrichingLattice>(g: &VFunctor<L>, f: &VFunctor<L>) -> Result<VFunctor<L>> {
    if f.codomain != g.domain {
        return Err(Error::Mismatch(
            "codomain of the first functor differs from the domain of the second".into(),
        ));
    }
    let map = f.object_map.iter().map(|&i| g.apply(i)).collect();
    Ok(VFunctor {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        object_map: map,
    })
}

fn check_parallel<L: EnrichingLattice>(f: &VFunctor<L>, g: &VFunctor<L>) -> Result<()> {
    if f.domain != g.domain || f.codomain != g.codomain {
        return Err(Error::Mismatch("functors are not parallel".into()));
    }
    Ok(())
}

/// Hom-object of the functor category: `⋀_a hom_B[Fa][Ga]`.
pub fn functor_hom<L: EnrichingLattice>(f: &VFunctor<L>, g: &VFunctor<L>) -> Result<L::Value> {
    check_parallel(f, g)?;
    let b = &f.codomain;
    Ok(b.lattice().inf((0..f.domain.size()).map(|a| b.hom(f.apply(a), g.apply(a)))))
}

/// `F ⇒ G`: `unit ⊑ hom_B[Fa][Ga]` for every object `a`.
pub fn canonical_leq<L: EnrichingLattice>(f: &VFunctor<L>, g: &VFunctor<L>) -> Result<bool> {
    check_parallel(f, g)?;
    let b = &f.codomain;
    let unit = b.lattice().unit();
    Ok((0..f.domain.size()).all(|a| b.lattice().leq(unit, b.hom(f.apply(a), g.apply(a)))))
}

/// Calls `visit` on every total map `0..n → 0..m` in lexicographic order.
pub(crate) fn for_each_map(n: usize, m: usize, mut visit: impl FnMut(&[usize])) {
    if n > 0 && m == 0 {
        return;
    }
    let mut map = vec![0usize; n];
    loop {
        visit(&map);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
        }
    }
}

/// All functors `A → B`, in lexicographic order of object maps.
pub fn enumerate_functors<L: EnrichingLattice>(
    a: &Arc<VCategory<L>>,
    b: &Arc<VCategory<L>>,
) -> Vec<VFunctor<L>> {
    let mut out = Vec::new();
    for_each_map(a.size(), b.size(), |map| {
        let f = VFunctor {
            domain: a.clone(),
            codomain: b.clone(),
            object_map: map.to_vec(),
        };
        if is_functor(&f) {
            out.push(f);
        }
    });
    out
}

/// The full subcategory of `V` on `carrier`, with `hom[x][y] = [x,y]`.
/// Objects are labelled by the printed values.
pub fn self_enrichment<L: EnrichingLattice>(lattice: L, carrier: &[L::Value]) -> Result<VCategory<L>> {
    let objects: Vec<String> = carrier.iter().map(|x| x.to_string()).collect();
    check_labels(&objects, carrier.len())?;
    let mut rows = Vec::with_capacity(carrier.len());
    for &x in carrier {
        rows.push(carrier.iter().map(|&y| lattice.hom(x, y)).collect::<Result<Vec<_>>>()?);
    }
    VCategory::new(lattice, objects, SquareMatrix::from_rows(rows)?)
}

/// A `V`-valued function on the objects of a category.
#[derive(Debug, Clone, PartialEq)]
pub struct Presheaf<L: EnrichingLattice> {
    base: Arc<VCategory<L>>,
    values: Vec<L::Value>,
}

impl<L: EnrichingLattice> Presheaf<L> {
    pub fn new(base: Arc<VCategory<L>>, values: Vec<L::Value>) -> Result<Self> {
        if values.len() != base.size() {
            return Err(Error::Arity {
                expected: base.size(),
                found: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| !base.lattice().contains(v)) {
            return Err(Error::Domain {
                value: v.to_string(),
                lattice: base.lattice().name().as_str(),
            });
        }
        Ok(Presheaf { base, values })
    }

    pub fn from_labels(base: Arc<VCategory<L>>, pairs: &[(&str, L::Value)]) -> Result<Self> {
        let mut values = vec![None; base.size()];
        for &(label, v) in pairs {
            let i = base.index_of(label)?;
            if values[i].replace(v).is_some() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::MissingLabel(base.objects[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, values)
    }

    pub fn base(&self) -> &Arc<VCategory<L>> {
        &self.base
    }

    pub fn values(&self) -> &[L::Value] {
        &self.values
    }

    pub fn value(&self, a: usize) -> L::Value {
        self.values[a]
    }
}

/// `hom[a][b] ⊑ [P b, P a]` for all `a, b`.
pub fn is_presheaf<L: EnrichingLattice>(p: &Presheaf<L>) -> Result<bool> {
    let c = &p.base;
    let l = c.lattice();
    for a in 0..c.size() {
        for b in 0..c.size() {
            if !l.leq(c.hom(a, b), l.hom(p.value(b), p.value(a))?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `hom[a][b] ⊑ [Q a, Q b]` for all `a, b`.
pub fn is_copresheaf<L: EnrichingLattice>(q: &Presheaf<L>) -> Result<bool> {
    let c = &q.base;
    let l = c.lattice();
    for a in 0..c.size() {
        for b in 0..c.size() {
            if !l.leq(c.hom(a, b), l.hom(q.value(a), q.value(b))?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `⋀_a [p1 a, p2 a]`.
pub fn presheaf_dist<L: EnrichingLattice>(p1: &Presheaf<L>, p2: &Presheaf<L>) -> Result<L::Value> {
    if p1.base != p2.base {
        return Err(Error::Mismatch("presheaves live on different categories".into()));
    }
    let l = p1.base.lattice();
    let homs = (0..p1.base.size())
        .map(|a| l.hom(p1.value(a), p2.value(a)))
        .collect::<Result<Vec<_>>>()?;
    Ok(l.inf(homs))
}

/// `Y(b) = λa. hom[a][b]`.
pub fn yoneda<L: EnrichingLattice>(c: &Arc<VCategory<L>>, b: usize) -> Presheaf<L> {
    Presheaf {
        base: c.clone(),
        values: (0..c.size()).map(|a| c.hom(a, b)).collect(),
    }
}

/// `Ȳ(a) = λb. hom[a][b]`, as a presheaf on the opposite category.
pub fn co_yoneda<L: EnrichingLattice>(c: &VCategory<L>, a: usize) -> Presheaf<L> {
    Presheaf {
        base: Arc::new(opposite(c)),
        values: c.hom.row(a).to_vec(),
    }
}

/// Full faithfulness of both embeddings:
/// `hom[b][b'] = ⋀_a [hom[a][b], hom[a][b']]` and
/// `hom[a'][a] = ⋀_b [hom[a][b], hom[a'][b]]`.
pub fn verify_yoneda<L: EnrichingLattice>(c: &VCategory<L>) -> Result<bool> {
    let l = c.lattice();
    let n = c.size();
    for x in 0..n {
        for y in 0..n {
            let via_y = (0..n)
                .map(|a| l.hom(c.hom(a, x), c.hom(a, y)))
                .collect::<Result<Vec<_>>>()?;
            if l.inf(via_y) != c.hom(x, y) {
                return Ok(false);
            }
            let via_co = (0..n)
                .map(|b| l.hom(c.hom(y, b), c.hom(x, b)))
                .collect::<Result<Vec<_>>>()?;
            if l.inf(via_co) != c.hom(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
