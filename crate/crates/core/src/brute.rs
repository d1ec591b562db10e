//! Colimits in generic finite targets by exhaustive cocone search.
//! Deliberately an oracle: candidate apexes are tried in declaration
//! order, legs enumerate lexicographically, and the first initial cocone
//! wins. A configurable budget guards against combinatorial blowups.

use crate::backend::Backend;
use crate::error::{Error, Result};
use crate::fincat::{FinCat, FunctorRep};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A diagram: a functor from a finite shape into a finite target.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub shape: FinCat,
    pub target: FinCat,
    pub functor: FunctorRep,
}

impl Diagram {
    pub fn new(functor: FunctorRep) -> Result<Diagram> {
        let report = functor.validate();
        if !report.is_empty() {
            return Err(Error::InvalidPresentation(format!(
                "diagram functor is invalid: {}",
                report[0]
            )));
        }
        Ok(Diagram { shape: functor.src().clone(), target: functor.dst().clone(), functor })
    }
}

/// A cocone: apex object index plus one leg (morphism index) per shape object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocone {
    pub apex: usize,
    pub legs: Vec<usize>,
}

fn commuting_cocones_at(d: &Diagram, apex: usize) -> Vec<Cocone> {
    let shape_objs = d.shape.object_count();
    let hom_choices: Vec<Vec<usize>> = (0..shape_objs)
        .map(|s| d.target.hom(d.functor.on_object_idx(s), apex))
        .collect();
    let mut out = Vec::new();
    let mut legs = vec![0usize; shape_objs];
    fn rec(
        d: &Diagram,
        hom_choices: &[Vec<usize>],
        legs: &mut Vec<usize>,
        pos: usize,
        out: &mut Vec<Cocone>,
        apex: usize,
    ) {
        if pos == hom_choices.len() {
            // check commutation with every shape morphism
            for m in 0..d.shape.morphism_count() {
                let s = d.shape.dom_index(m);
                let t = d.shape.cod_index(m);
                let img = d.functor.on_morphism_idx(m);
                match d.target.compose_idx(legs[t], img) {
                    Some(r) if r == legs[s] => {}
                    _ => return,
                }
            }
            out.push(Cocone { apex, legs: legs.clone() });
            return;
        }
        for &leg in &hom_choices[pos] {
            legs[pos] = leg;
            rec(d, hom_choices, legs, pos + 1, out, apex);
        }
    }
    if shape_objs == 0 {
        out.push(Cocone { apex, legs: vec![] });
        return out;
    }
    rec(d, &hom_choices, &mut legs, 0, &mut out, apex);
    out
}

/// Morphisms m: apex(a) -> apex(b) with m ∘ a.leg = b.leg for every leg.
fn mediators(d: &Diagram, a: &Cocone, b: &Cocone) -> Vec<usize> {
    d.target
        .hom(a.apex, b.apex)
        .into_iter()
        .filter(|&m| {
            (0..a.legs.len())
                .all(|s| d.target.compose_idx(m, a.legs[s]) == Some(b.legs[s]))
        })
        .collect()
}

/// Exhaustively finds the colimit of `d` as the initial commuting cocone:
/// the one admitting exactly one mediating morphism to every other
/// commuting cocone.
pub fn brute_colimit(d: &Diagram, budget: u64) -> Result<Cocone> {
    // candidate count before searching: Π over shape objects of hom sizes,
    // summed over apexes
    let mut candidates: u64 = 0;
    for apex in 0..d.target.object_count() {
        let mut per_apex: u64 = 1;
        for s in 0..d.shape.object_count() {
            let h = d.target.hom(d.functor.on_object_idx(s), apex).len() as u64;
            per_apex = per_apex.saturating_mul(h);
        }
        candidates = candidates.saturating_add(per_apex);
    }
    if candidates > budget {
        return Err(Error::SearchBudgetExceeded(format!(
            "{candidates} candidate cocones exceed budget {budget}"
        )));
    }
    let mut all = Vec::new();
    for apex in 0..d.target.object_count() {
        all.extend(commuting_cocones_at(d, apex));
    }
    for candidate in &all {
        let initial = all.iter().all(|other| mediators(d, candidate, other).len() == 1);
        if initial {
            return Ok(candidate.clone());
        }
    }
    Err(Error::NoColimit(format!(
        "no initial cocone among {} commuting cocones",
        all.len()
    )))
}

/// A finite category as a cocomplete backend, with every colimit found by
/// search. Objects and morphisms are indices into the target.
#[derive(Debug, Clone)]
pub struct BruteBackend {
    target: FinCat,
    budget: u64,
}

impl BruteBackend {
    pub fn new(target: FinCat, budget: u64) -> BruteBackend {
        BruteBackend { target, budget }
    }

    pub fn target(&self) -> &FinCat {
        &self.target
    }

    fn diagram_colimit(&self, shape: FinCat, images: Vec<(String, String)>, mor_images: Vec<(String, String)>) -> Result<Cocone> {
        let functor = FunctorRep::new(
            shape,
            self.target.clone(),
            images.into_iter().collect(),
            mor_images.into_iter().collect(),
        )?;
        let d = Diagram::new(functor)?;
        brute_colimit(&d, self.budget)
    }
}

impl Backend for BruteBackend {
    type Obj = usize;
    type Mor = usize;

    fn dom(&self, m: &usize) -> usize {
        self.target.dom_index(*m)
    }

    fn cod(&self, m: &usize) -> usize {
        self.target.cod_index(*m)
    }

    fn obj_eq(&self, a: &usize, b: &usize) -> bool {
        a == b
    }

    fn mor_eq(&self, a: &usize, b: &usize) -> bool {
        a == b
    }

    fn identity(&self, o: &usize) -> usize {
        self.target.identity_of(*o)
    }

    fn compose(&self, g: &usize, f: &usize) -> Result<usize> {
        self.target.compose_idx(*g, *f).ok_or_else(|| Error::NotComposable {
            g: self.target.morphism(*g).id.clone(),
            f: self.target.morphism(*f).id.clone(),
        })
    }

    fn coproduct(&self, parts: &[usize]) -> Result<(usize, Vec<usize>)> {
        let shape = crate::fincat::discrete_category(parts.len());
        let obj_images: Vec<(String, String)> = parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (format!("o{i}"), self.target.objects()[p].clone()))
            .collect();
        let mor_images: Vec<(String, String)> = parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                (format!("id{i}"), self.target.morphism(self.target.identity_of(p)).id.clone())
            })
            .collect();
        let cocone = self.diagram_colimit(shape, obj_images, mor_images)?;
        Ok((cocone.apex, cocone.legs))
    }

    fn coequalizer(&self, f: &usize, g: &usize) -> Result<(usize, usize)> {
        if self.dom(f) != self.dom(g) || self.cod(f) != self.cod(g) {
            return Err(Error::BoundaryMismatch(
                "coequalizer needs a parallel pair with shared boundaries".into(),
            ));
        }
        let shape = FinCat::new(
            vec!["x".into(), "y".into()],
            vec![
                crate::fincat::MorInfo { id: "idx".into(), dom: "x".into(), cod: "x".into() },
                crate::fincat::MorInfo { id: "idy".into(), dom: "y".into(), cod: "y".into() },
                crate::fincat::MorInfo { id: "p".into(), dom: "x".into(), cod: "y".into() },
                crate::fincat::MorInfo { id: "q".into(), dom: "x".into(), cod: "y".into() },
            ],
            vec![("x".into(), "idx".into()), ("y".into(), "idy".into())],
            vec![
                ("idx".into(), "idx".into(), "idx".into()),
                ("idy".into(), "idy".into(), "idy".into()),
                ("p".into(), "idx".into(), "p".into()),
                ("idy".into(), "p".into(), "p".into()),
                ("q".into(), "idx".into(), "q".into()),
                ("idy".into(), "q".into(), "q".into()),
            ],
        )?;
        let obj_images = vec![
            ("x".to_string(), self.target.objects()[self.dom(f)].clone()),
            ("y".to_string(), self.target.objects()[self.cod(f)].clone()),
        ];
        let mor_images = vec![
            ("idx".to_string(), self.target.morphism(self.identity(&self.dom(f))).id.clone()),
            ("idy".to_string(), self.target.morphism(self.identity(&self.cod(f))).id.clone()),
            ("p".to_string(), self.target.morphism(*f).id.clone()),
            ("q".to_string(), self.target.morphism(*g).id.clone()),
        ];
        let cocone = self.diagram_colimit(shape, obj_images, mor_images)?;
        Ok((cocone.apex, cocone.legs[1]))
    }

    fn factor_coproduct(
        &self,
        _parts: &[usize],
        injections: &[usize],
        legs: &[usize],
    ) -> Result<usize> {
        if injections.len() != legs.len() {
            return Err(Error::ShapeMismatch("one leg required per coproduct part".into()));
        }
        let total = injections
            .first()
            .map(|&i| self.cod(&i))
            .ok_or_else(|| Error::ShapeMismatch("empty coproduct factorization needs a target".into()))?;
        let target = self.cod(&legs[0]);
        let matches: Vec<usize> = self
            .target
            .hom(total, target)
            .into_iter()
            .filter(|&m| {
                injections
                    .iter()
                    .zip(legs)
                    .all(|(&inj, &leg)| self.target.compose_idx(m, inj) == Some(leg))
            })
            .collect();
        match matches.len() {
            1 => Ok(matches[0]),
            0 => Err(Error::Internal("no mediating morphism out of coproduct".into())),
            _ => Err(Error::Internal("mediating morphism out of coproduct not unique".into())),
        }
    }

    fn factor_coequalizer(&self, proj: &usize, h: &usize) -> Result<usize> {
        let matches: Vec<usize> = self
            .target
            .hom(self.cod(proj), self.cod(h))
            .into_iter()
            .filter(|&m| self.target.compose_idx(m, *proj) == Some(*h))
            .collect();
        match matches.len() {
            1 => Ok(matches[0]),
            0 => Err(Error::Internal("no mediating morphism through coequalizer".into())),
            _ => Err(Error::Internal("mediating morphism through coequalizer not unique".into())),
        }
    }

    fn from_initial(&self, target: &usize) -> Result<usize> {
        let (initial, _) = self.coproduct(&[])?;
        let homs = self.target.hom(initial, *target);
        match homs.len() {
            1 => Ok(homs[0]),
            n => Err(Error::Internal(format!(
                "expected a unique morphism out of the initial object, found {n}"
            ))),
        }
    }

    fn is_iso(&self, m: &usize) -> bool {
        let x = self.dom(m);
        let y = self.cod(m);
        self.target.hom(y, x).iter().any(|&inv| {
            self.target.compose_idx(inv, *m) == Some(self.target.identity_of(x))
                && self.target.compose_idx(*m, inv) == Some(self.target.identity_of(y))
        })
    }

    fn render_obj(&self, o: &usize) -> String {
        self.target.objects()[*o].clone()
    }
}
