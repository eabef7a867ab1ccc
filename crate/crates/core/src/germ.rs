//! Actions of finite inverse semigroups on finite discrete spaces and their
//! groupoids of germs.
//!
//! For an action `α` with domains `D_e`, the germs are the classes of
//! `Ω = { (s, x) : x ∈ D_{s*s} }` under `(s, x) ~ (t, x)` iff `se = te` for some
//! idempotent `e` with `x ∈ D_e`. Products are `[s, α_t(x)] [t, x] = [st, x]` and
//! inverses `[s, x]⁻¹ = [s*, α_s(x)]`.
//!
//! Every space here is finite and discrete, so every domain is clopen and the
//! topological conditions (effective, essentially principal) collapse to principal.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::order::ElementSet;
use crate::partial_bijection::PartialBijection;
use crate::semigroup::FiniteInverseSemigroup;
use crate::union_find::UnionFind;

/// A set of points of the acted-upon space.
pub type PointSet = BTreeSet<usize>;

/// An action of a finite inverse semigroup by partial bijections of `0..space_size`.
#[derive(Debug, Clone)]
pub struct FiniteAction<'s> {
    semigroup: &'s FiniteInverseSemigroup,
    space_size: usize,
    /// `D_e` for idempotent `e`, `None` elsewhere.
    domains: Vec<Option<PointSet>>,
    maps: Vec<PartialBijection>,
}

impl<'s> FiniteAction<'s> {
    /// Builds and validates an action from per-idempotent domains and per-element maps.
    ///
    /// `maps[s]` is the partial bijection `α_s`. Checks that each `α_s` runs
    /// `D_{s*s} → D_{ss*}` and that `α_{st} = α_s ∘ α_t`.
    pub fn new(
        semigroup: &'s FiniteInverseSemigroup,
        space_size: usize,
        domains: &[(usize, Vec<usize>)],
        maps: Vec<PartialBijection>,
    ) -> Result<Self> {
        let m = semigroup.order();
        let mut dom: Vec<Option<PointSet>> = vec![None; m];
        for (e, points) in domains {
            let e = *e;
            if e >= m || !semigroup.is_idempotent(e) {
                return Err(Error::InvalidAction(format!("domain given for non-idempotent {e}")));
            }
            if dom[e].is_some() {
                return Err(Error::InvalidAction(format!("domain of {e} given twice")));
            }
            if let Some(&p) = points.iter().find(|&&p| p >= space_size) {
                return Err(Error::PointOutOfRange { point: p, ground_size: space_size });
            }
            dom[e] = Some(points.iter().copied().collect());
        }
        if let Some(&e) = semigroup.idempotents().iter().find(|&&e| dom[e].is_none()) {
            return Err(Error::InvalidAction(format!("missing domain for idempotent {e}")));
        }
        if maps.len() != m {
            return Err(Error::InvalidAction(format!("{} maps for {m} elements", maps.len())));
        }
        for map in &maps {
            if map.ground_size() != space_size {
                return Err(Error::GroundSizeMismatch { left: space_size, right: map.ground_size() });
            }
        }
        let action = FiniteAction { semigroup, space_size, domains: dom, maps };
        action.validate()?;
        Ok(action)
    }

    /// The left-translation action `λ_s t = st` on `s*S`, with `D_e = eS`.
    pub fn left_translation(semigroup: &'s FiniteInverseSemigroup) -> Self {
        let m = semigroup.order();
        let domains = semigroup
            .elements()
            .map(|e| semigroup.is_idempotent(e).then(|| semigroup.right_ideal(e).into_iter().collect()))
            .collect();
        let maps = semigroup
            .elements()
            .map(|s| {
                let pairs: Vec<(usize, usize)> =
                    semigroup.right_ideal(semigroup.inv(s)).into_iter().map(|t| (t, semigroup.mul(s, t))).collect();
                PartialBijection::from_pairs(m, &pairs).expect("left translation is injective on s*S")
            })
            .collect();
        FiniteAction { semigroup, space_size: m, domains, maps }
    }

    /// Re-checks the action axioms.
    pub fn validate(&self) -> Result<()> {
        let s = self.semigroup;
        for a in s.elements() {
            let dom: PointSet = self.maps[a].domain().into_iter().collect();
            let ran: PointSet = self.maps[a].range().into_iter().collect();
            if &dom != self.domain(s.mul(s.inv(a), a)) {
                return Err(Error::InvalidAction(format!("domain of element {a} is not D_(s*s)")));
            }
            if &ran != self.domain(s.mul(a, s.inv(a))) {
                return Err(Error::InvalidAction(format!("range of element {a} is not D_(ss*)")));
            }
        }
        for a in s.elements() {
            for b in s.elements() {
                if self.maps[s.mul(a, b)] != self.maps[a].compose(&self.maps[b])? {
                    return Err(Error::InvalidAction(format!("not a homomorphism at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    pub fn semigroup(&self) -> &'s FiniteInverseSemigroup {
        self.semigroup
    }

    pub fn space_size(&self) -> usize {
        self.space_size
    }

    /// `D_e`. Panics if `e` is not idempotent.
    pub fn domain(&self, e: usize) -> &PointSet {
        self.domains[e].as_ref().expect("domain of a non-idempotent")
    }

    /// `D_{s*s}`, the domain of `α_s`.
    pub fn source_domain(&self, s: usize) -> &PointSet {
        self.domain(self.semigroup.mul(self.semigroup.inv(s), s))
    }

    pub fn map(&self, s: usize) -> &PartialBijection {
        &self.maps[s]
    }

    pub fn act(&self, s: usize, x: usize) -> Option<usize> {
        self.maps[s].apply(x)
    }

    /// `(F_s, TF_s)`: points fixed by `α_s`, and `⋃_{e ∈ J_s} D_e`.
    pub fn fixed_sets(&self, s: usize) -> (PointSet, PointSet) {
        let fixed = self.maps[s].pairs().filter(|(x, y)| x == y).map(|(x, _)| x).collect();
        let trivially_fixed = self.semigroup.j_set(s).iter().flat_map(|&e| self.domain(e).iter().copied()).collect();
        (fixed, trivially_fixed)
    }

    /// Whether `(s, x) ~ (t, x)`, by searching all idempotents.
    pub fn germ_equiv_oracle(&self, s: usize, t: usize, x: usize) -> Result<bool> {
        if !self.source_domain(s).contains(&x) || !self.source_domain(t).contains(&x) {
            return Err(Error::Contract(format!("({s}, {x}) or ({t}, {x}) is not in Ω")));
        }
        let sg = self.semigroup;
        Ok(sg.idempotents().iter().any(|&e| self.domain(e).contains(&x) && sg.mul(s, e) == sg.mul(t, e)))
    }

    /// Hook for the closedness of `TF_s` inside the domain of `α_s`.
    ///
    /// Every subset of a discrete space is closed, so this only confirms
    /// `TF_s ⊆ F_s ⊆ D_{s*s}`.
    pub fn trivially_fixed_is_closed(&self, s: usize) -> bool {
        let (fixed, trivially_fixed) = self.fixed_sets(s);
        trivially_fixed.is_subset(&fixed) && fixed.is_subset(self.source_domain(s))
    }
}

/// One element of `Ω` together with its class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Germ {
    pub rep_element: usize,
    pub point: usize,
    pub class_id: usize,
}

/// The groupoid of germs of a [`FiniteAction`].
///
/// Classes are numbered by their smallest `(element, point)` member, which is also
/// their representative.
#[derive(Debug, Clone)]
pub struct GermGroupoid {
    germs: Vec<Germ>,
    index: BTreeMap<(usize, usize), usize>,
    representatives: Vec<(usize, usize)>,
    source_point: Vec<usize>,
    range_point: Vec<usize>,
    unit_at: BTreeMap<usize, usize>,
    units: ElementSet,
    inverse: Vec<usize>,
    composition: BTreeMap<(usize, usize), usize>,
}

/// A failure of a groupoid identity, found by [`GermGroupoid::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupoidViolation {
    /// `[s, α_t(x)][t, x] ≠ [st, x]`.
    Product {
        s: usize,
        t: usize,
        x: usize,
    },
    /// `[s, x]⁻¹ ≠ [s*, α_s(x)]`.
    Inverse {
        s: usize,
        x: usize,
    },
    Associativity {
        a: usize,
        b: usize,
        c: usize,
    },
    SourceRange {
        a: usize,
        b: usize,
    },
    InverseCancellation {
        class: usize,
    },
}

/// A pair `(s, x)` breaking one of the fixed-point identities; `item` is 1, 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedPointViolation {
    pub item: u8,
    pub element: usize,
    pub point: usize,
}

impl GermGroupoid {
    pub fn build(action: &FiniteAction<'_>) -> Self {
        let sg = action.semigroup();
        let mut omega = Vec::new();
        for s in sg.elements() {
            for &x in action.source_domain(s) {
                omega.push((s, x));
            }
        }
        let index: BTreeMap<(usize, usize), usize> = omega.iter().enumerate().map(|(i, &p)| (p, i)).collect();

        let mut at_point: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &(_, x)) in omega.iter().enumerate() {
            at_point.entry(x).or_default().push(i);
        }
        let mut uf = UnionFind::new(omega.len());
        for (&x, members) in &at_point {
            for &e in sg.idempotents() {
                if !action.domain(e).contains(&x) {
                    continue;
                }
                let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
                for &i in members {
                    let key = sg.mul(omega[i].0, e);
                    match seen.get(&key) {
                        Some(&j) => {
                            uf.union(i, j);
                        }
                        None => {
                            seen.insert(key, i);
                        }
                    }
                }
            }
        }
        let class_of = uf.labels();
        let class_count = class_of.iter().copied().max().map_or(0, |c| c + 1);

        let mut representatives = vec![(usize::MAX, usize::MAX); class_count];
        let mut units = ElementSet::new();
        let mut unit_at = BTreeMap::new();
        let mut germs = Vec::with_capacity(omega.len());
        for (i, &(s, x)) in omega.iter().enumerate() {
            let c = class_of[i];
            if representatives[c].0 == usize::MAX {
                representatives[c] = (s, x);
            }
            if sg.is_idempotent(s) {
                units.insert(c);
                unit_at.insert(x, c);
            }
            germs.push(Germ { rep_element: s, point: x, class_id: c });
        }

        let source_point: Vec<usize> = representatives.iter().map(|&(_, x)| x).collect();
        let range_point: Vec<usize> =
            representatives.iter().map(|&(s, x)| action.act(s, x).expect("representative lies in Ω")).collect();
        let inverse =
            representatives.iter().zip(&range_point).map(|(&(s, _), &y)| class_of[index[&(sg.inv(s), y)]]).collect();

        let mut by_source: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (c, &x) in source_point.iter().enumerate() {
            by_source.entry(x).or_default().push(c);
        }
        let mut composition = BTreeMap::new();
        for (second, &(t, x)) in representatives.iter().enumerate() {
            let Some(firsts) = by_source.get(&range_point[second]) else { continue };
            for &first in firsts {
                let (s, _) = representatives[first];
                let product = class_of[index[&(sg.mul(s, t), x)]];
                composition.insert((first, second), product);
            }
        }

        GermGroupoid { germs, index, representatives, source_point, range_point, unit_at, units, inverse, composition }
    }

    /// Every element of `Ω` in `(element, point)` order with its class.
    pub fn germs(&self) -> &[Germ] {
        &self.germs
    }

    pub fn omega_len(&self) -> usize {
        self.germs.len()
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    /// The class of `(s, x)`, if `x ∈ D_{s*s}`.
    pub fn class_of(&self, s: usize, x: usize) -> Option<usize> {
        self.index.get(&(s, x)).map(|&i| self.germs[i].class_id)
    }

    pub fn representative(&self, class: usize) -> (usize, usize) {
        self.representatives[class]
    }

    pub fn units(&self) -> &ElementSet {
        &self.units
    }

    /// The unit `[e, x]` sitting over point `x`.
    pub fn unit_at(&self, x: usize) -> Option<usize> {
        self.unit_at.get(&x).copied()
    }

    /// `d([s, x]) = x`, as a point.
    pub fn source_point(&self, class: usize) -> usize {
        self.source_point[class]
    }

    /// `r([s, x]) = α_s(x)`, as a point.
    pub fn range_point(&self, class: usize) -> usize {
        self.range_point[class]
    }

    /// The unit class over the source point.
    pub fn source(&self, class: usize) -> usize {
        self.unit_at[&self.source_point[class]]
    }

    pub fn range(&self, class: usize) -> usize {
        self.unit_at[&self.range_point[class]]
    }

    pub fn inverse(&self, class: usize) -> usize {
        self.inverse[class]
    }

    /// `first · second`, defined when `d(first) = r(second)`.
    pub fn compose(&self, first: usize, second: usize) -> Option<usize> {
        self.composition.get(&(first, second)).copied()
    }

    pub fn composable_pairs(&self) -> usize {
        self.composition.len()
    }

    /// `Iso(G) = { γ : r(γ) = d(γ) }`.
    pub fn isotropy(&self) -> ElementSet {
        (0..self.class_count()).filter(|&c| self.source_point[c] == self.range_point[c]).collect()
    }

    /// `Θ(s, U) = { [s, x] : x ∈ U }`; `U` must lie inside `D_{s*s}`.
    pub fn slice(&self, s: usize, points: &PointSet) -> Result<ElementSet> {
        points
            .iter()
            .map(|&x| {
                self.class_of(s, x)
                    .ok_or_else(|| Error::Contract(format!("point {x} is outside the domain of element {s}")))
            })
            .collect()
    }

    pub fn is_principal(&self) -> bool {
        self.isotropy() == self.units
    }

    /// The interior of the isotropy equals the unit space. With the discrete
    /// topology the singleton slice `Θ(s, {x})` is open, so this agrees with
    /// [`is_principal`](Self::is_principal).
    pub fn is_effective(&self) -> bool {
        let iso = self.isotropy();
        let interior: ElementSet = iso
            .iter()
            .copied()
            .filter(|&c| {
                let (s, x) = self.representatives[c];
                self.slice(s, &[x].into()).is_ok_and(|open| open.is_subset(&iso))
            })
            .collect();
        interior == self.units
    }

    /// Points with trivial isotropy group are dense in the unit space. Dense in a
    /// discrete space means everything.
    pub fn is_essentially_principal(&self) -> bool {
        let mut isotropy_size: BTreeMap<usize, usize> = BTreeMap::new();
        for c in self.isotropy() {
            *isotropy_size.entry(self.source_point[c]).or_default() += 1;
        }
        self.unit_at.keys().all(|x| isotropy_size.get(x) == Some(&1))
    }

    /// Exhaustively checks the structure maps against the defining identities.
    pub fn check_axioms(&self, action: &FiniteAction<'_>) -> Result<(), GroupoidViolation> {
        let sg = action.semigroup();
        for t in sg.elements() {
            for &x in action.source_domain(t) {
                let y = action.act(t, x).expect("x in domain");
                let tx = self.class_of(t, x).expect("in Ω");
                if self.inverse(tx) != self.class_of(sg.inv(t), y).expect("in Ω") {
                    return Err(GroupoidViolation::Inverse { s: t, x });
                }
                for s in sg.elements() {
                    let Some(sy) = self.class_of(s, y) else { continue };
                    if self.compose(sy, tx) != self.class_of(sg.mul(s, t), x) {
                        return Err(GroupoidViolation::Product { s, t, x });
                    }
                }
            }
        }
        for (&(a, b), &ab) in &self.composition {
            if self.source(ab) != self.source(b) || self.range(ab) != self.range(a) {
                return Err(GroupoidViolation::SourceRange { a, b });
            }
            for (&(b2, c), &bc) in self.composition.range((b, 0)..=(b, usize::MAX)) {
                debug_assert_eq!(b2, b);
                let left = self.compose(ab, c);
                let right = self.compose(a, bc);
                if left.is_none() || left != right {
                    return Err(GroupoidViolation::Associativity { a, b, c });
                }
            }
        }
        for class in 0..self.class_count() {
            let inv = self.inverse(class);
            if self.compose(inv, class) != Some(self.source(class))
                || self.compose(class, inv) != Some(self.range(class))
                || self.inverse(inv) != class
            {
                return Err(GroupoidViolation::InverseCancellation { class });
            }
        }
        Ok(())
    }

    /// For every `(s, x) ∈ Ω`: `x ∈ F_s` iff `[s, x]` is isotropy, `x ∈ TF_s` iff
    /// `[s, x]` is a unit, and `TF_s ⊆ F_s`.
    pub fn check_fixed_point_identities(&self, action: &FiniteAction<'_>) -> Result<(), FixedPointViolation> {
        let iso = self.isotropy();
        for s in action.semigroup().elements() {
            let (fixed, trivially_fixed) = action.fixed_sets(s);
            for &x in action.source_domain(s) {
                let class = self.class_of(s, x).expect("in Ω");
                let violation = |item| FixedPointViolation { item, element: s, point: x };
                if fixed.contains(&x) != iso.contains(&class) {
                    return Err(violation(1));
                }
                if trivially_fixed.contains(&x) != self.units.contains(&class) {
                    return Err(violation(2));
                }
                if trivially_fixed.contains(&x) && !fixed.contains(&x) {
                    return Err(violation(3));
                }
            }
        }
        Ok(())
    }
}

/// For the left-translation action: the first `s` with `F_s ≠ ⋃_{e ∈ J_s} eS`.
pub fn fixed_point_form_violation(semigroup: &FiniteInverseSemigroup) -> Option<usize> {
    semigroup.elements().find(|&s| {
        let fixed: PointSet =
            semigroup.right_ideal(semigroup.inv(s)).into_iter().filter(|&t| semigroup.mul(s, t) == t).collect();
        let covered: PointSet = semigroup.j_set(s).iter().flat_map(|&e| semigroup.right_ideal(e)).collect();
        fixed != covered
    })
}
