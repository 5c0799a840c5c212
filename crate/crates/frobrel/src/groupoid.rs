//! Finite groupoids, their nerves, and the induced Frobenius objects.
//!
//! A [`Groupoid`] stores finite object and arrow sets, source and target
//! tables, an explicit list of defined composites, and identity and inverse
//! tables. Composition follows the convention that `g · h` is defined when
//! the source of `g` equals the target of `h` — `h` is applied first. The
//! file format mirrors this layout so transposed tables fail loudly.
//!
//! [`nerve`](Groupoid::nerve) builds the simplicial set with composable
//! pairs as triangles and the inverse map as the rotation automorphism;
//! [`hcc_frobenius`](Groupoid::hcc_frobenius) builds the
//! Heunen–Contreras–Cattaneo Frobenius object directly. The two routes agree
//! through the simplicial correspondence, and the objects they produce are
//! exactly the special dagger ones.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use thiserror::Error;

use crate::frobenius::FrobeniusObject;
use crate::rel::{Bijection, FiniteSet, RelError};
use crate::simplicial::{AlphaSimplicial, TruncSimplicialSet2};
use crate::verdict::{Verdict, Violation};

/// Errors from building a groupoid or from using one that fails its axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("label `{0}` is unknown")]
    UnknownLabel(String),
    #[error(transparent)]
    BadLabels(#[from] RelError),
    #[error("arrow `{name}` mentions unknown object `{object}`")]
    BadEndpoint { name: String, object: String },
    #[error("composite of `{g}` and `{h}` is defined twice")]
    DuplicateComposite { g: String, h: String },
    #[error("cannot derive a unique identity arrow at object `{0}`")]
    NoIdentity(String),
    #[error("cannot derive a unique inverse for arrow `{0}`")]
    NoInverse(String),
    #[error("provided {what} for `{key}` disagrees with the derived one")]
    CrossCheck { what: &'static str, key: String },
    #[error("groupoid axioms fail: {0}")]
    Invalid(Violation),
    #[error("label `{0}` appears on both sides of a disjoint union")]
    LabelClash(String),
}

/// An arrow declaration: name plus endpoints, target-first composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

impl ArrowDecl {
    pub fn new(name: impl Into<String>, src: impl Into<String>, tgt: impl Into<String>) -> Self {
        ArrowDecl {
            name: name.into(),
            src: src.into(),
            tgt: tgt.into(),
        }
    }
}

/// A finite groupoid with explicit structure tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    objects: Arc<FiniteSet>,
    arrows: Arc<FiniteSet>,
    src: Vec<u16>,
    tgt: Vec<u16>,
    comp: BTreeMap<(u16, u16), u16>,
    ident: Vec<u16>,
    inv: Vec<u16>,
}

impl Groupoid {
    /// Builds a groupoid from declarations.
    ///
    /// Identities and inverses are derived from the composition table when
    /// not provided; when provided and derivable they are cross-checked, and
    /// when provided on a broken table they are stored as-is so that
    /// [`validate`](Groupoid::validate) can point at the offending law.
    pub fn new(
        objects: FiniteSet,
        arrows: Vec<ArrowDecl>,
        compose: Vec<[String; 3]>,
        identities: Option<BTreeMap<String, String>>,
        inverses: Option<BTreeMap<String, String>>,
    ) -> Result<Self, GroupoidError> {
        let objects = Arc::new(objects);
        let arrow_set = Arc::new(FiniteSet::new(arrows.iter().map(|a| a.name.clone()))?);
        let arrow_index = |label: &str| {
            arrow_set
                .index_of(label)
                .map(|i| i as u16)
                .ok_or_else(|| GroupoidError::UnknownLabel(label.to_owned()))
        };

        let mut src = vec![0u16; arrow_set.len()];
        let mut tgt = vec![0u16; arrow_set.len()];
        for decl in &arrows {
            let a = arrow_index(&decl.name)? as usize;
            src[a] = objects.index_of(&decl.src).map(|i| i as u16).ok_or_else(|| {
                GroupoidError::BadEndpoint {
                    name: decl.name.clone(),
                    object: decl.src.clone(),
                }
            })?;
            tgt[a] = objects.index_of(&decl.tgt).map(|i| i as u16).ok_or_else(|| {
                GroupoidError::BadEndpoint {
                    name: decl.name.clone(),
                    object: decl.tgt.clone(),
                }
            })?;
        }

        let mut comp = BTreeMap::new();
        for [g, h, gh] in &compose {
            let key = (arrow_index(g)?, arrow_index(h)?);
            if comp.insert(key, arrow_index(gh)?).is_some() {
                return Err(GroupoidError::DuplicateComposite {
                    g: g.clone(),
                    h: h.clone(),
                });
            }
        }

        let derived_ident = derive_identities(&objects, &arrow_set, &src, &tgt, &comp);
        let ident = match (&identities, derived_ident) {
            (None, Ok(derived)) => derived,
            (None, Err(e)) => return Err(e),
            (Some(given), derived) => {
                let mut table = vec![0u16; objects.len()];
                for (p, slot) in table.iter_mut().enumerate() {
                    let label = objects.label(p);
                    let image = given
                        .get(label)
                        .ok_or_else(|| GroupoidError::NoIdentity(label.to_owned()))?;
                    *slot = arrow_index(image)?;
                }
                if let Ok(derived) = derived {
                    if derived != table {
                        let p = (0..objects.len()).find(|&p| derived[p] != table[p]).unwrap();
                        return Err(GroupoidError::CrossCheck {
                            what: "identity",
                            key: objects.label(p).to_owned(),
                        });
                    }
                }
                table
            }
        };

        let derived_inv = derive_inverses(&arrow_set, &src, &tgt, &comp, &ident);
        let inv = match (&inverses, derived_inv) {
            (None, Ok(derived)) => derived,
            (None, Err(e)) => return Err(e),
            (Some(given), derived) => {
                let mut table = vec![0u16; arrow_set.len()];
                for (g, slot) in table.iter_mut().enumerate() {
                    let label = arrow_set.label(g);
                    let image = given
                        .get(label)
                        .ok_or_else(|| GroupoidError::NoInverse(label.to_owned()))?;
                    *slot = arrow_index(image)?;
                }
                if let Ok(derived) = derived {
                    if derived != table {
                        let g = (0..arrow_set.len()).find(|&g| derived[g] != table[g]).unwrap();
                        return Err(GroupoidError::CrossCheck {
                            what: "inverse",
                            key: arrow_set.label(g).to_owned(),
                        });
                    }
                }
                table
            }
        };

        Ok(Groupoid {
            objects,
            arrows: arrow_set,
            src,
            tgt,
            comp,
            ident,
            inv,
        })
    }

    /// A one-object groupoid from a finite group multiplication table;
    /// `table[i][j]` is the product `labels[i] · labels[j]`.
    pub fn from_group_table(
        labels: &[&str],
        table: &[Vec<&str>],
    ) -> Result<Groupoid, GroupoidError> {
        let objects = FiniteSet::new(["*"])?;
        let arrows = labels
            .iter()
            .map(|l| ArrowDecl::new(*l, "*", "*"))
            .collect();
        let mut compose = Vec::new();
        for (i, row) in table.iter().enumerate() {
            for (j, product) in row.iter().enumerate() {
                compose.push([
                    labels[i].to_owned(),
                    labels[j].to_owned(),
                    (*product).to_owned(),
                ]);
            }
        }
        Groupoid::new(objects, arrows, compose, None, None)
    }

    /// The cyclic group of order `k` as a one-object groupoid, with arrows
    /// named `0, 1, …, k-1`.
    pub fn cyclic_group(k: usize) -> Groupoid {
        assert!((1..=12).contains(&k), "cyclic_group supports orders 1..=12");
        let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
        let labels: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<Vec<&str>> = (0..k)
            .map(|i| (0..k).map(|j| labels[(i + j) % k]).collect())
            .collect();
        Groupoid::from_group_table(&labels, &table).expect("cyclic tables are groups")
    }

    /// The Klein four-group as a one-object groupoid.
    pub fn klein_four() -> Groupoid {
        let labels = ["e", "a", "b", "c"];
        let table = vec![
            vec!["e", "a", "b", "c"],
            vec!["a", "e", "c", "b"],
            vec!["b", "c", "e", "a"],
            vec!["c", "b", "a", "e"],
        ];
        Groupoid::from_group_table(&labels, &table).expect("the Klein table is a group")
    }

    /// The symmetric group on three letters, with permutations named in
    /// one-line notation; `g · h` applies `h` first.
    pub fn sym3() -> Groupoid {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let name = |p: &[usize; 3]| format!("{}{}{}", p[0], p[1], p[2]);
        let names: Vec<String> = perms.iter().map(name).collect();
        let labels: Vec<&str> = names.iter().map(String::as_str).collect();
        let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<&str>> = perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| {
                        let composed = [g[h[0]], g[h[1]], g[h[2]]];
                        labels[index_of(&composed)]
                    })
                    .collect()
            })
            .collect();
        Groupoid::from_group_table(&labels, &table).expect("permutation tables are groups")
    }

    /// The pair groupoid on `k` objects: one arrow `a{i}{j}` from `p{j}` to
    /// `p{i}` for every ordered pair, with `a{i}{j} · a{j}{l} = a{i}{l}`.
    pub fn pair_groupoid(k: usize) -> Groupoid {
        assert!((1..=9).contains(&k), "pair_groupoid supports sizes 1..=9");
        let objects = FiniteSet::new((0..k).map(|i| format!("p{i}"))).unwrap();
        let mut arrows = Vec::new();
        let mut compose = Vec::new();
        let name = |i: usize, j: usize| format!("a{i}{j}");
        for i in 0..k {
            for j in 0..k {
                arrows.push(ArrowDecl::new(name(i, j), format!("p{j}"), format!("p{i}")));
                for l in 0..k {
                    compose.push([name(i, j), name(j, l), name(i, l)]);
                }
            }
        }
        Groupoid::new(objects, arrows, compose, None, None).expect("pair tables are groupoids")
    }

    /// The empty groupoid: no objects, no arrows.
    pub fn empty() -> Groupoid {
        Groupoid::new(FiniteSet::empty(), Vec::new(), Vec::new(), None, None)
            .expect("the empty groupoid is trivially well-formed")
    }

    /// A copy with every object and arrow label prefixed.
    pub fn relabeled(&self, prefix: &str) -> Groupoid {
        let objects = FiniteSet::new(self.objects.iter().map(|l| format!("{prefix}{l}"))).unwrap();
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .map(|(a, l)| {
                ArrowDecl::new(
                    format!("{prefix}{l}"),
                    format!("{prefix}{}", self.objects.label(self.src[a] as usize)),
                    format!("{prefix}{}", self.objects.label(self.tgt[a] as usize)),
                )
            })
            .collect();
        let compose = self
            .comp
            .iter()
            .map(|(&(g, h), &gh)| {
                [
                    format!("{prefix}{}", self.arrows.label(g as usize)),
                    format!("{prefix}{}", self.arrows.label(h as usize)),
                    format!("{prefix}{}", self.arrows.label(gh as usize)),
                ]
            })
            .collect();
        Groupoid::new(objects, arrows, compose, None, None)
            .expect("relabeling preserves the tables")
    }

    /// Componentwise disjoint union; labels must not clash.
    pub fn disjoint_union(&self, other: &Groupoid) -> Result<Groupoid, GroupoidError> {
        for label in self.objects.iter() {
            if other.objects.contains(label) {
                return Err(GroupoidError::LabelClash(label.to_owned()));
            }
        }
        for label in self.arrows.iter() {
            if other.arrows.contains(label) {
                return Err(GroupoidError::LabelClash(label.to_owned()));
            }
        }
        let objects = FiniteSet::new(self.objects.iter().chain(other.objects.iter()))?;
        let decl = |g: &Groupoid| -> Vec<ArrowDecl> {
            g.arrows
                .iter()
                .enumerate()
                .map(|(a, l)| {
                    ArrowDecl::new(
                        l,
                        g.objects.label(g.src[a] as usize),
                        g.objects.label(g.tgt[a] as usize),
                    )
                })
                .collect()
        };
        let mut arrows = decl(self);
        arrows.extend(decl(other));
        let rows = |g: &Groupoid| -> Vec<[String; 3]> {
            g.comp
                .iter()
                .map(|(&(a, b), &c)| {
                    [
                        g.arrows.label(a as usize).to_owned(),
                        g.arrows.label(b as usize).to_owned(),
                        g.arrows.label(c as usize).to_owned(),
                    ]
                })
                .collect()
        };
        let mut compose = rows(self);
        compose.extend(rows(other));
        Groupoid::new(objects, arrows, compose, None, None)
    }

    pub fn objects(&self) -> &Arc<FiniteSet> {
        &self.objects
    }

    pub fn arrows(&self) -> &Arc<FiniteSet> {
        &self.arrows
    }

    pub fn source_of(&self, arrow: &str) -> Result<&str, GroupoidError> {
        let a = self.arrow_index(arrow)?;
        Ok(self.objects.label(self.src[a as usize] as usize))
    }

    pub fn target_of(&self, arrow: &str) -> Result<&str, GroupoidError> {
        let a = self.arrow_index(arrow)?;
        Ok(self.objects.label(self.tgt[a as usize] as usize))
    }

    pub fn identity_of(&self, object: &str) -> Result<&str, GroupoidError> {
        let p = self
            .objects
            .index_of(object)
            .ok_or_else(|| GroupoidError::UnknownLabel(object.to_owned()))?;
        Ok(self.arrows.label(self.ident[p] as usize))
    }

    pub fn inverse_of(&self, arrow: &str) -> Result<&str, GroupoidError> {
        let a = self.arrow_index(arrow)?;
        Ok(self.arrows.label(self.inv[a as usize] as usize))
    }

    /// Looks up `g · h`; undefined composites are an error, not an empty
    /// answer.
    pub fn compose_arrows(&self, g: &str, h: &str) -> Result<&str, GroupoidError> {
        let key = (self.arrow_index(g)?, self.arrow_index(h)?);
        match self.comp.get(&key) {
            Some(&gh) => Ok(self.arrows.label(gh as usize)),
            None => Err(GroupoidError::Invalid(Violation {
                law: "composition undefined".to_owned(),
                witness: vec![g.to_owned(), h.to_owned()],
            })),
        }
    }

    fn arrow_index(&self, arrow: &str) -> Result<u16, GroupoidError> {
        self.arrows
            .index_of(arrow)
            .map(|i| i as u16)
            .ok_or_else(|| GroupoidError::UnknownLabel(arrow.to_owned()))
    }

    /// The composable pairs `(g, h)` with `s(g) = t(h)`, as index pairs.
    fn composable_indices(&self) -> Vec<(u16, u16)> {
        let n = self.arrows.len() as u16;
        let mut out = Vec::new();
        for g in 0..n {
            for h in 0..n {
                if self.src[g as usize] == self.tgt[h as usize] {
                    out.push((g, h));
                }
            }
        }
        out
    }

    /// The composable pairs as label pairs.
    pub fn composable_pairs(&self) -> Vec<(&str, &str)> {
        self.composable_indices()
            .into_iter()
            .map(|(g, h)| {
                (
                    self.arrows.label(g as usize),
                    self.arrows.label(h as usize),
                )
            })
            .collect()
    }

    /// Checks the four groupoid axiom families exhaustively.
    pub fn validate(&self) -> Verdict {
        let arrow = |a: u16| self.arrows.label(a as usize).to_owned();
        let object = |p: u16| self.objects.label(p as usize).to_owned();

        // The composition table must be defined exactly on composable pairs.
        let n = self.arrows.len() as u16;
        for g in 0..n {
            for h in 0..n {
                let composable = self.src[g as usize] == self.tgt[h as usize];
                let defined = self.comp.contains_key(&(g, h));
                if composable && !defined {
                    return Verdict::fail(
                        "composition undefined for a composable pair",
                        vec![arrow(g), arrow(h)],
                    );
                }
                if !composable && defined {
                    return Verdict::fail(
                        "composition defined for a non-composable pair",
                        vec![arrow(g), arrow(h)],
                    );
                }
            }
        }

        // Sources and targets of composites.
        for (&(g, h), &gh) in &self.comp {
            if self.src[gh as usize] != self.src[h as usize]
                || self.tgt[gh as usize] != self.tgt[g as usize]
            {
                return Verdict::fail(
                    "source and target of composites",
                    vec![arrow(g), arrow(h)],
                );
            }
        }

        // Associativity on composable triples.
        for (g, h) in self.composable_indices() {
            let gh = self.comp[&(g, h)];
            for k in 0..n {
                if self.src[h as usize] != self.tgt[k as usize] {
                    continue;
                }
                let hk = self.comp[&(h, k)];
                if self.comp[&(gh, k)] != self.comp[&(g, hk)] {
                    return Verdict::fail("associativity", vec![arrow(g), arrow(h), arrow(k)]);
                }
            }
        }

        // Identity laws.
        for p in 0..self.objects.len() as u16 {
            let e = self.ident[p as usize];
            if self.src[e as usize] != p || self.tgt[e as usize] != p {
                return Verdict::fail("identity endpoints", vec![object(p)]);
            }
        }
        for g in 0..n {
            let e_src = self.ident[self.src[g as usize] as usize];
            let e_tgt = self.ident[self.tgt[g as usize] as usize];
            if self.comp.get(&(g, e_src)) != Some(&g) || self.comp.get(&(e_tgt, g)) != Some(&g) {
                return Verdict::fail("identity laws", vec![arrow(g)]);
            }
        }

        // Inverse laws.
        for g in 0..n {
            let gi = self.inv[g as usize];
            if self.src[gi as usize] != self.tgt[g as usize]
                || self.tgt[gi as usize] != self.src[g as usize]
            {
                return Verdict::fail("inverse endpoints", vec![arrow(g)]);
            }
            let e_tgt = self.ident[self.tgt[g as usize] as usize];
            let e_src = self.ident[self.src[g as usize] as usize];
            if self.comp.get(&(g, gi)) != Some(&e_tgt) || self.comp.get(&(gi, g)) != Some(&e_src) {
                return Verdict::fail("inverse laws", vec![arrow(g)]);
            }
        }
        Verdict::Pass
    }

    fn validated(&self) -> Result<(), GroupoidError> {
        match self.validate() {
            Verdict::Pass => Ok(()),
            Verdict::Fail(violation) => Err(GroupoidError::Invalid(violation)),
        }
    }

    /// The nerve: objects as vertices, arrows as edges, composable pairs as
    /// triangles, with the inverse map as rotation automorphism.
    pub fn nerve(&self) -> Result<AlphaSimplicial, GroupoidError> {
        self.validated()?;
        let pairs = self.composable_indices();
        let base_name = |&(g, h): &(u16, u16)| {
            format!(
                "({},{})",
                self.arrows.label(g as usize),
                self.arrows.label(h as usize)
            )
        };
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for pair in &pairs {
            *counts.entry(base_name(pair)).or_default() += 1;
        }
        let mut used: BTreeMap<String, usize> = BTreeMap::new();
        let named: Vec<(String, (u16, u16))> = pairs
            .iter()
            .map(|pair| {
                let base = base_name(pair);
                let id = if counts[&base] > 1 {
                    let k = used.entry(base.clone()).or_default();
                    let id = format!("{base}#{k}");
                    *k += 1;
                    id
                } else {
                    base
                };
                (id, *pair)
            })
            .collect();
        let x2 = Arc::new(FiniteSet::new(named.iter().map(|(id, _)| id.clone()))?);
        let pair_of: BTreeMap<&str, (u16, u16)> =
            named.iter().map(|(id, p)| (id.as_str(), *p)).collect();
        let triangle_of: BTreeMap<(u16, u16), u16> = x2
            .iter()
            .enumerate()
            .map(|(pos, id)| (pair_of[id], pos as u16))
            .collect();

        let mut d20 = Vec::with_capacity(x2.len());
        let mut d21 = Vec::with_capacity(x2.len());
        let mut d22 = Vec::with_capacity(x2.len());
        for id in x2.iter() {
            let (g, h) = pair_of[id];
            d20.push(h);
            d21.push(self.comp[&(g, h)]);
            d22.push(g);
        }
        let n = self.arrows.len() as u16;
        let mut s10 = Vec::with_capacity(n as usize);
        let mut s11 = Vec::with_capacity(n as usize);
        for g in 0..n {
            let e_tgt = self.ident[self.tgt[g as usize] as usize];
            let e_src = self.ident[self.src[g as usize] as usize];
            s10.push(triangle_of[&(e_tgt, g)]);
            s11.push(triangle_of[&(g, e_src)]);
        }
        let base = TruncSimplicialSet2::from_tables(
            Arc::clone(&self.objects),
            Arc::clone(&self.arrows),
            x2,
            self.src.clone(),
            self.tgt.clone(),
            d20,
            d21,
            d22,
            self.ident.clone(),
            s10,
            s11,
        );
        let alpha = Bijection::from_table(&self.arrows, self.inv.clone());
        Ok(AlphaSimplicial::new(base, alpha).expect("the inverse map lives on the arrows"))
    }

    /// The Heunen–Contreras–Cattaneo Frobenius object: carrier the arrows,
    /// multiplication the graph of composition, unit and counit the
    /// identity arrows.
    pub fn hcc_frobenius(&self) -> Result<FrobeniusObject, GroupoidError> {
        self.validated()?;
        let units: BTreeSet<u16> = self.ident.iter().copied().collect();
        let mut mu = BTreeSet::new();
        let mut delta = BTreeSet::new();
        for (&(g, h), &gh) in &self.comp {
            mu.insert([g, h, gh]);
            delta.insert([gh, g, h]);
        }
        Ok(FrobeniusObject::from_indices(
            Arc::clone(&self.arrows),
            units.clone(),
            units,
            mu,
            delta,
        ))
    }
}

fn derive_identities(
    objects: &FiniteSet,
    arrows: &FiniteSet,
    src: &[u16],
    tgt: &[u16],
    comp: &BTreeMap<(u16, u16), u16>,
) -> Result<Vec<u16>, GroupoidError> {
    let n = arrows.len() as u16;
    (0..objects.len() as u16)
        .map(|p| {
            let candidates: Vec<u16> = (0..n)
                .filter(|&u| {
                    src[u as usize] == p
                        && tgt[u as usize] == p
                        && (0..n).all(|h| {
                            tgt[h as usize] != p || comp.get(&(u, h)) == Some(&h)
                        })
                        && (0..n).all(|g| {
                            src[g as usize] != p || comp.get(&(g, u)) == Some(&g)
                        })
                })
                .collect();
            if candidates.len() == 1 {
                Ok(candidates[0])
            } else {
                Err(GroupoidError::NoIdentity(objects.label(p as usize).to_owned()))
            }
        })
        .collect()
}

fn derive_inverses(
    arrows: &FiniteSet,
    src: &[u16],
    tgt: &[u16],
    comp: &BTreeMap<(u16, u16), u16>,
    ident: &[u16],
) -> Result<Vec<u16>, GroupoidError> {
    let n = arrows.len() as u16;
    (0..n)
        .map(|g| {
            let e_tgt = ident.get(tgt[g as usize] as usize).copied();
            let e_src = ident.get(src[g as usize] as usize).copied();
            let candidates: Vec<u16> = (0..n)
                .filter(|&h| {
                    comp.get(&(g, h)).copied() == e_tgt && comp.get(&(h, g)).copied() == e_src
                })
                .collect();
            if candidates.len() == 1 {
                Ok(candidates[0])
            } else {
                Err(GroupoidError::NoInverse(arrows.label(g as usize).to_owned()))
            }
        })
        .collect()
}

/// Every groupoid with at most `max_arrows` arrows, up to isomorphism.
///
/// A connected groupoid on `k` objects with vertex group `H` has `k²·|H|`
/// arrows, so for `max_arrows ≤ 6` the connected pieces are the groups of
/// order at most six and the pair groupoid on two objects; general members
/// are disjoint unions of those. Pieces of a union are relabeled `c0.`,
/// `c1.`, … to keep labels distinct.
pub fn catalog(max_arrows: usize) -> Vec<Groupoid> {
    assert!(max_arrows <= 6, "the catalog covers up to 6 arrows");
    let pieces: Vec<(usize, Groupoid)> = vec![
        (1, Groupoid::cyclic_group(1)),
        (2, Groupoid::cyclic_group(2)),
        (3, Groupoid::cyclic_group(3)),
        (4, Groupoid::cyclic_group(4)),
        (4, Groupoid::klein_four()),
        (4, Groupoid::pair_groupoid(2)),
        (5, Groupoid::cyclic_group(5)),
        (6, Groupoid::cyclic_group(6)),
        (6, Groupoid::sym3()),
    ];
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    fn extend(
        pieces: &[(usize, Groupoid)],
        from: usize,
        left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for i in from..pieces.len() {
            if pieces[i].0 > left {
                continue;
            }
            current.push(i);
            out.push(current.clone());
            extend(pieces, i, left - pieces[i].0, current, out);
            current.pop();
        }
    }
    extend(&pieces, 0, max_arrows, &mut Vec::new(), &mut multisets);
    multisets.sort_by_key(|ms| {
        (
            ms.iter().map(|&i| pieces[i].0).sum::<usize>(),
            ms.clone(),
        )
    });

    let mut out = vec![Groupoid::empty()];
    for multiset in multisets {
        if multiset.len() == 1 {
            out.push(pieces[multiset[0]].1.clone());
        } else {
            let mut union = Groupoid::empty();
            for (c, &i) in multiset.iter().enumerate() {
                union = union
                    .disjoint_union(&pieces[i].1.relabeled(&format!("c{c}.")))
                    .expect("prefixed labels cannot clash");
            }
            out.push(union);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::simplicial_to_frob;

    #[test]
    fn cyclic_groups_validate() {
        for k in 1..=6 {
            let g = Groupoid::cyclic_group(k);
            assert!(g.validate().passes(), "cyclic group of order {k}");
        }
        let z1 = Groupoid::cyclic_group(1);
        assert_eq!(z1.objects().len(), 1);
        assert_eq!(z1.arrows().len(), 1);
    }

    #[test]
    fn pair_groupoid_composition_goes_through_the_middle_object() {
        let g = Groupoid::pair_groupoid(3);
        assert!(g.validate().passes());
        assert_eq!(g.arrows().len(), 9);
        assert_eq!(g.composable_pairs().len(), 27);
        assert_eq!(g.compose_arrows("a01", "a12").unwrap(), "a02");
        assert!(g.compose_arrows("a01", "a01").is_err());
        assert!(Groupoid::pair_groupoid(1).validate().passes());
    }

    #[test]
    fn broken_inverse_table_fails_validation() {
        // The two-element group, but with the inverse table pinned to the
        // identity arrow everywhere.
        let objects = FiniteSet::new(["*"]).unwrap();
        let arrows = vec![
            ArrowDecl::new("e", "*", "*"),
            ArrowDecl::new("g", "*", "*"),
        ];
        let compose = vec![
            ["e".to_owned(), "e".to_owned(), "e".to_owned()],
            ["e".to_owned(), "g".to_owned(), "g".to_owned()],
            ["g".to_owned(), "e".to_owned(), "g".to_owned()],
            ["g".to_owned(), "g".to_owned(), "e".to_owned()],
        ];
        let inverses: BTreeMap<String, String> = [("e", "e"), ("g", "e")]
            .into_iter()
            .map(|(k, v)| (k.to_owned(), v.to_owned()))
            .collect();
        // Cross-checking catches the lie at construction when derivation
        // succeeds, which it does here.
        let err = Groupoid::new(
            objects.clone(),
            arrows.clone(),
            compose.clone(),
            None,
            Some(inverses),
        );
        assert_eq!(
            err,
            Err(GroupoidError::CrossCheck {
                what: "inverse",
                key: "g".to_owned()
            })
        );

        // With a hole in the composition table the derivation cannot run, so
        // the provided table is stored and validation reports the failure.
        let broken_compose = vec![
            ["e".to_owned(), "e".to_owned(), "e".to_owned()],
            ["e".to_owned(), "g".to_owned(), "g".to_owned()],
            ["g".to_owned(), "e".to_owned(), "g".to_owned()],
        ];
        let identities: BTreeMap<String, String> =
            [("*".to_owned(), "e".to_owned())].into_iter().collect();
        let inverses: BTreeMap<String, String> = [("e", "e"), ("g", "g")]
            .into_iter()
            .map(|(k, v)| (k.to_owned(), v.to_owned()))
            .collect();
        let g = Groupoid::new(objects, arrows, broken_compose, Some(identities), Some(inverses))
            .unwrap();
        let verdict = g.validate();
        assert!(!verdict.passes());
        assert_eq!(
            verdict.violation().unwrap().law,
            "composition undefined for a composable pair"
        );
    }

    #[test]
    fn disjoint_union_counts_add() {
        let z2 = Groupoid::cyclic_group(2).relabeled("a.");
        let z3 = Groupoid::cyclic_group(3).relabeled("b.");
        let u = z2.disjoint_union(&z3).unwrap();
        assert!(u.validate().passes());
        assert_eq!(u.objects().len(), 2);
        assert_eq!(u.arrows().len(), 5);
        assert!(Groupoid::cyclic_group(2)
            .disjoint_union(&Groupoid::cyclic_group(3))
            .is_err());
    }

    #[test]
    fn nerve_of_z2() {
        let g = Groupoid::cyclic_group(2);
        let nerve = g.nerve().unwrap();
        let base = nerve.base();
        assert_eq!(base.x2().len(), 4);
        assert!(base.validate().passes());
        assert!(base.check_p1().passes());
        assert!(base.check_p2().passes());
        assert!(nerve.check_p3().passes());
        assert!(nerve.check_delta2_invariance().passes());
        // The middle face of a composable pair is the composite.
        assert_eq!(base.boundary2("(1,1)").unwrap(), ["1", "1", "0"]);
    }

    #[test]
    fn nerve_quadruples_match_composable_triples() {
        // For a group nerve the 3-simplices are exactly the composable
        // triples (g, h, k), entering the quadruple as
        // ((h,k), (g·h,k), (g,h·k), (g,h)).
        let g = Groupoid::cyclic_group(2);
        let nerve = g.nerve().unwrap();
        let mut from_triples: BTreeSet<[String; 4]> = BTreeSet::new();
        for a in ["0", "1"] {
            for b in ["0", "1"] {
                for c in ["0", "1"] {
                    let mul = |x: &str, y: &str| g.compose_arrows(x, y).unwrap().to_owned();
                    from_triples.insert([
                        format!("({b},{c})"),
                        format!("({},{c})", mul(a, b)),
                        format!("({a},{})", mul(b, c)),
                        format!("({a},{b})"),
                    ]);
                }
            }
        }
        let computed: BTreeSet<[String; 4]> = nerve
            .base()
            .compatible_quadruples()
            .into_iter()
            .map(|q| q.map(str::to_owned))
            .collect();
        assert_eq!(computed, from_triples);
        assert_eq!(computed.len(), 8);
    }

    #[test]
    fn rotating_a_nerve_triangle_stays_in_the_nerve() {
        // With inverse as the automorphism, the rotation of (g, g, e) for
        // the order-two element g walks the orbit inside the triangles.
        let g = Groupoid::cyclic_group(2);
        let nerve = g.nerve().unwrap();
        let triangles: BTreeSet<[String; 3]> = nerve
            .base()
            .compatible_triples()
            .into_iter()
            .map(|t| t.map(str::to_owned))
            .collect();
        assert!(triangles.contains(&["1".to_owned(), "1".to_owned(), "0".to_owned()]));
        let hat = nerve.alpha_hat();
        let rotate = |t: [String; 3]| {
            [
                t[1].clone(),
                hat.apply(&t[2]).to_owned(),
                hat.apply(&t[0]).to_owned(),
            ]
        };
        let mut triple = ["1".to_owned(), "1".to_owned(), "0".to_owned()];
        for _ in 0..3 {
            triple = rotate(triple);
            let in_x2 = nerve
                .base()
                .boundary2_image_labels()
                .contains(&triple);
            assert!(in_x2, "rotation left the triangle set at {triple:?}");
        }
    }

    #[test]
    fn identity_automorphism_fails_p3_on_z3() {
        let g = Groupoid::cyclic_group(3);
        let nerve = g.nerve().unwrap();
        let with_identity =
            AlphaSimplicial::new(nerve.base().clone(), Bijection::identity(g.arrows())).unwrap();
        assert!(!with_identity.check_p3().passes());
    }

    #[test]
    fn hcc_object_of_z2() {
        let g = Groupoid::cyclic_group(2);
        let f = g.hcc_frobenius().unwrap();
        assert!(f.verify().passes());
        assert_eq!(f.mu_triples().len(), 4);
        assert!(f.mu_contains(["1", "1", "0"]));
        assert_eq!(f.eta_labels(), vec!["0"]);
        assert_eq!(f.epsilon_labels(), vec!["0"]);
        assert!(f.is_special());
        assert!(f.is_dagger());
        assert!(f.is_commutative());
        // α̂ is the inverse map; every element of this group is its own
        // inverse.
        let derived = f.extract_alpha().unwrap();
        assert!(derived.alpha_hat().is_identity());
        assert_eq!(f.source("1").unwrap(), "0");
    }

    #[test]
    fn hcc_agrees_with_the_nerve_route() {
        for g in [
            Groupoid::cyclic_group(3),
            Groupoid::pair_groupoid(2),
            Groupoid::sym3(),
        ] {
            let via_nerve = simplicial_to_frob(&g.nerve().unwrap()).unwrap();
            assert_eq!(g.hcc_frobenius().unwrap(), via_nerve);
        }
    }

    #[test]
    fn sym3_is_not_commutative() {
        let g = Groupoid::sym3();
        // Two transpositions that do not commute, straight from the table.
        let rs = g.compose_arrows("021", "102").unwrap().to_owned();
        let sr = g.compose_arrows("102", "021").unwrap().to_owned();
        assert_ne!(rs, sr);
        let f = g.hcc_frobenius().unwrap();
        assert!(!f.is_commutative());
        assert!(f.is_special() && f.is_dagger());
    }

    #[test]
    fn pair_groupoid_nerve_counts_composable_pairs() {
        // Each of the four arrows composes with the two arrows into its
        // source object.
        let nerve = Groupoid::pair_groupoid(2).nerve().unwrap();
        assert_eq!(nerve.base().x2().len(), 8);
    }

    #[test]
    fn commutativity_matches_abelian_unions() {
        let abelian = [
            Groupoid::cyclic_group(1),
            Groupoid::cyclic_group(4),
            Groupoid::cyclic_group(6),
            Groupoid::klein_four(),
            Groupoid::cyclic_group(2)
                .relabeled("l.")
                .disjoint_union(&Groupoid::cyclic_group(3).relabeled("r."))
                .unwrap(),
        ];
        for g in abelian {
            assert!(g.hcc_frobenius().unwrap().is_commutative());
        }
        for g in [Groupoid::sym3(), Groupoid::pair_groupoid(2)] {
            assert!(!g.hcc_frobenius().unwrap().is_commutative());
        }
    }

    #[test]
    fn catalog_covers_the_small_groupoids() {
        let all = catalog(6);
        assert!(all.iter().all(|g| g.validate().passes()));
        let three_arrows: Vec<&Groupoid> =
            all.iter().filter(|g| g.arrows().len() == 3).collect();
        // Exactly the cyclic group of order three, the union of the
        // two-element group with a point, and three points.
        assert_eq!(three_arrows.len(), 3);
        let two_arrows: Vec<&Groupoid> =
            all.iter().filter(|g| g.arrows().len() == 2).collect();
        assert_eq!(two_arrows.len(), 2);
    }
}
