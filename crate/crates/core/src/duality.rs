//! The dual equivalence between `K̄`-categories and extended L-convex sets,
//! on objects, on maps and on the canonical orderings.

use std::fmt;
use std::sync::Arc;

use crate::enriched_cat::{for_each_map, is_functor, KCategory, VCategory, VFunctor};
use crate::error::{Error, Result};
use crate::lconvex::{grid_equivalent, LConvexSet, PointVector};
use crate::scalar_algebra::{ExtScalar, Kbar, Scalar};

/// Label given to the object or index that stands for `label` on the other side.
pub fn pi_label(label: &str) -> String {
    format!("pi_{label}")
}

/// `[A, K̄]`: index `ob A`, matrix `d_A`. Its members are exactly the
/// nonexpansive maps `A^op → K̄`.
pub fn cat_to_lcs<K: Scalar>(a: &KCategory<K>) -> Result<LConvexSet<K>> {
    LConvexSet::new(a.objects().to_vec(), a.hom_matrix().clone())
}

/// `⟪D, K̄⟫`: one object `pi_v` per index `v`, with `d(pi_v, pi_w) = d[v][w]`.
pub fn lcs_to_cat<K: Scalar>(d: &LConvexSet<K>) -> Result<KCategory<K>> {
    let objects = d.index().iter().map(|v| pi_label(v)).collect();
    VCategory::validated(Kbar::new(), objects, d.dbm().clone())
}

/// A bijection of labels, `source[i] ↦ target[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityWitness {
    pub source: Vec<String>,
    pub target: Vec<String>,
}

impl DualityWitness {
    pub fn image(&self, label: &str) -> Result<&str> {
        self.source
            .iter()
            .position(|s| s == label)
            .map(|i| self.target[i].as_str())
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

impl fmt::Display for DualityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, t)) in self.source.iter().zip(&self.target).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s} ↦ {t}")?;
        }
        Ok(())
    }
}

/// `η_A: a ↦ pi_a`.
pub fn unit_witness<K: Scalar>(a: &KCategory<K>) -> DualityWitness {
    DualityWitness {
        source: a.objects().to_vec(),
        target: a.objects().iter().map(|x| pi_label(x)).collect(),
    }
}

/// `ε_D: v ↦ pi_v`.
pub fn counit_witness<K: Scalar>(d: &LConvexSet<K>) -> DualityWitness {
    DualityWitness {
        source: d.index().to_vec(),
        target: d.index().iter().map(|x| pi_label(x)).collect(),
    }
}

/// `A ≅ ⟪[A,K̄],K̄⟫` along `η_A`, as exact matrix equality.
pub fn roundtrip_cat<K: Scalar>(a: &KCategory<K>) -> Result<bool> {
    let back = lcs_to_cat(&cat_to_lcs(a)?)?;
    Ok(back.objects() == unit_witness(a).target.as_slice() && back.hom_matrix() == a.hom_matrix())
}

/// `D ≅ [⟪D,K̄⟫,K̄]` along `ε_D`, as exact matrix equality.
pub fn roundtrip_lcs<K: Scalar>(d: &LConvexSet<K>) -> Result<bool> {
    let back = cat_to_lcs(&lcs_to_cat(d)?)?;
    Ok(back.index() == counit_witness(d).target.as_slice() && back.dbm() == d.dbm())
}

/// [`roundtrip_lcs`] checked on members instead of matrices: the two sets
/// must have the same grid points at `bound`.
pub fn roundtrip_lcs_on_grid(d: &LConvexSet<i64>, bound: i64) -> Result<bool> {
    let back = cat_to_lcs(&lcs_to_cat(d)?)?;
    Ok(back.index() == counit_witness(d).target.as_slice() && grid_equivalent(d, &back, bound)?)
}

/// A homomorphism `Φ: D → E`, given by an index map `ind E → ind D`.
/// Two homomorphisms are equal exactly when their index maps are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism<K: Scalar> {
    domain: Arc<LConvexSet<K>>,
    codomain: Arc<LConvexSet<K>>,
    index_map: Vec<usize>,
}

impl<K: Scalar> Homomorphism<K> {
    /// `index_map[w]` is the index of `D` that index `w` of `E` reads from.
    /// Only totality is checked here; see [`is_homomorphism`].
    pub fn new(domain: Arc<LConvexSet<K>>, codomain: Arc<LConvexSet<K>>, index_map: Vec<usize>) -> Result<Self> {
        if index_map.len() != codomain.size() {
            return Err(Error::Arity {
                expected: codomain.size(),
                found: index_map.len(),
            });
        }
        if let Some(&bad) = index_map.iter().find(|&&v| v >= domain.size()) {
            return Err(Error::Mismatch(format!(
                "index {bad} is outside a domain of size {}",
                domain.size()
            )));
        }
        Ok(Homomorphism {
            domain,
            codomain,
            index_map,
        })
    }

    /// From `(codomain index, domain index)` label pairs.
    pub fn from_labels(
        domain: Arc<LConvexSet<K>>,
        codomain: Arc<LConvexSet<K>>,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut map = vec![None; codomain.size()];
        for &(w, v) in pairs {
            let i = codomain.index_of(w)?;
            if map[i].replace(domain.index_of(v)?).is_some() {
                return Err(Error::DuplicateLabel(w.to_string()));
            }
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::MissingLabel(codomain.index()[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, map)
    }

    pub fn identity(d: Arc<LConvexSet<K>>) -> Self {
        let map = (0..d.size()).collect();
        Homomorphism {
            domain: d.clone(),
            codomain: d,
            index_map: map,
        }
    }

    pub fn domain(&self) -> &Arc<LConvexSet<K>> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<LConvexSet<K>> {
        &self.codomain
    }

    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    pub fn is_valid(&self) -> bool {
        matrix_condition(&self.index_map, &self.domain, &self.codomain)
    }

    /// The underlying map `Φ₀(p) = p ∘ f`.
    pub fn apply(&self, p: &PointVector<K>) -> Result<PointVector<K>> {
        if p.len() != self.domain.size() {
            return Err(Error::Arity {
                expected: self.domain.size(),
                found: p.len(),
            });
        }
        Ok(PointVector::new(self.index_map.iter().map(|&v| p.get(v)).collect()))
    }
}

impl<K: Scalar> fmt::Display for Homomorphism<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, &v) in self.index_map.iter().enumerate() {
            if w > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", self.codomain.index()[w], self.domain.index()[v])?;
        }
        Ok(())
    }
}

fn matrix_condition<K: Scalar>(f: &[usize], d: &LConvexSet<K>, e: &LConvexSet<K>) -> bool {
    let m = e.size();
    (0..m).all(|w| (0..m).all(|w2| e.entry(w, w2) >= d.entry(f[w], f[w2])))
}

/// `e[w][w'] ≥ d[f w][f w']` for all `w, w'` of `ind E`.
pub fn is_homomorphism<K: Scalar>(f: &[usize], d: &LConvexSet<K>, e: &LConvexSet<K>) -> Result<bool> {
    if f.len() != e.size() {
        return Err(Error::Arity {
            expected: e.size(),
            found: f.len(),
        });
    }
    if f.iter().any(|&v| v >= d.size()) {
        return Err(Error::Mismatch("index map leaves the domain index".into()));
    }
    Ok(matrix_condition(f, d, e))
}

/// `[F, K̄]: [B, K̄] → [A, K̄]` for `F: A → B`, with index map `ob F`.
pub fn functor_to_hom<K: Scalar>(f: &VFunctor<Kbar<K>>) -> Result<Homomorphism<K>> {
    if !is_functor(f) {
        return Err(Error::Mismatch(format!("{f} is not a functor")));
    }
    Ok(Homomorphism {
        domain: Arc::new(cat_to_lcs(f.codomain())?),
        codomain: Arc::new(cat_to_lcs(f.domain())?),
        index_map: f.object_map().to_vec(),
    })
}

/// `⟪Φ, K̄⟫: ⟪E, K̄⟫ → ⟪D, K̄⟫` for `Φ: D → E`, sending `pi_w` to `pi_{f w}`.
pub fn hom_to_functor<K: Scalar>(phi: &Homomorphism<K>) -> Result<VFunctor<Kbar<K>>> {
    if !phi.is_valid() {
        return Err(Error::Mismatch(format!("{phi} is not a homomorphism")));
    }
    VFunctor::new(
        Arc::new(lcs_to_cat(&phi.codomain)?),
        Arc::new(lcs_to_cat(&phi.domain)?),
        phi.index_map.clone(),
    )
}

fn same_up_to_pi<K: Scalar>(original: &KCategory<K>, relabeled: &KCategory<K>) -> bool {
    relabeled.objects() == unit_witness(original).target.as_slice()
        && relabeled.hom_matrix() == original.hom_matrix()
}

/// `⟪[F,K̄],K̄⟫ = F` up to `η` on both ends.
pub fn functor_roundtrip<K: Scalar>(f: &VFunctor<Kbar<K>>) -> Result<bool> {
    let g = hom_to_functor(&functor_to_hom(f)?)?;
    Ok(g.object_map() == f.object_map()
        && same_up_to_pi(f.domain(), g.domain())
        && same_up_to_pi(f.codomain(), g.codomain()))
}

/// `[⟪Φ,K̄⟫,K̄] = Φ` up to `ε` on both ends.
pub fn hom_roundtrip<K: Scalar>(phi: &Homomorphism<K>) -> Result<bool> {
    let psi = functor_to_hom(&hom_to_functor(phi)?)?;
    let relabeled = |orig: &LConvexSet<K>, back: &LConvexSet<K>| {
        back.index() == counit_witness(orig).target.as_slice() && back.dbm() == orig.dbm()
    };
    Ok(psi.index_map == phi.index_map
        && relabeled(&phi.domain, &psi.domain)
        && relabeled(&phi.codomain, &psi.codomain))
}

/// `Φ ⇒ Ψ`, decided by `0 ≥ d_D[f w][g w]` for every index `w` of `E`.
pub fn hom_canonical_leq<K: Scalar>(phi: &Homomorphism<K>, psi: &Homomorphism<K>) -> Result<bool> {
    if phi.domain != psi.domain || phi.codomain != psi.codomain {
        return Err(Error::Mismatch("homomorphisms are not parallel".into()));
    }
    let zero = ExtScalar::zero();
    Ok(phi
        .index_map
        .iter()
        .zip(&psi.index_map)
        .all(|(&f, &g)| zero >= phi.domain.entry(f, g)))
}

/// All homomorphisms `D → E`, in lexicographic order of index maps.
pub fn enumerate_homs<K: Scalar>(d: &Arc<LConvexSet<K>>, e: &Arc<LConvexSet<K>>) -> Vec<Homomorphism<K>> {
    let mut out = Vec::new();
    for_each_map(e.size(), d.size(), |map| {
        if matrix_condition(map, d, e) {
            out.push(Homomorphism {
                domain: d.clone(),
                codomain: e.clone(),
                index_map: map.to_vec(),
            });
        }
    });
    out
}
