//! Defining presentations by generators and relations, including the unit
//! relations `g g^{-1} = 1 = g^{-1} g` for Laurent generators.

use serde::Serialize;

use crate::algebra::{mul, BasisIndex, Element, StructureProvider};
use crate::scalars::CycloScalar;

use super::FamilyParams;

#[derive(Clone, Debug, Serialize)]
pub struct PresentationGenerator {
    pub name: String,
    /// The basis monomial this letter stands for.
    pub image: BasisIndex,
    pub counit: CycloScalar,
}

/// A formal noncommutative polynomial `Σ c · word`.
#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    pub label: String,
    pub terms: Vec<(CycloScalar, Vec<usize>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Presentation {
    pub generators: Vec<PresentationGenerator>,
    pub relations: Vec<Relation>,
}

struct Builder<'a> {
    alg: &'a dyn StructureProvider,
    gens: Vec<PresentationGenerator>,
    rels: Vec<Relation>,
}

impl<'a> Builder<'a> {
    fn letter(&mut self, name: &str, image: BasisIndex) -> usize {
        let counit = self.alg.counit_basis(&image);
        self.gens.push(PresentationGenerator { name: name.to_string(), image, counit });
        self.gens.len() - 1
    }

    /// Letter and its inverse, with both unit relations.
    fn laurent(&mut self, name: &str, image: BasisIndex, inverse: BasisIndex) -> (usize, usize) {
        let g = self.letter(name, image);
        let h = self.letter(&format!("{name}^-1"), inverse);
        let one = self.one();
        self.rel(&format!("{name}·{name}^-1 - 1"), vec![(one.clone(), vec![g, h]), (one.neg(), vec![])]);
        self.rel(&format!("{name}^-1·{name} - 1"), vec![(one.clone(), vec![h, g]), (one.neg(), vec![])]);
        (g, h)
    }

    fn one(&self) -> CycloScalar {
        CycloScalar::one_at(self.alg.level())
    }

    fn rel(&mut self, label: &str, terms: Vec<(CycloScalar, Vec<usize>)>) {
        self.rels.push(Relation { label: label.to_string(), terms });
    }

    /// `u v - c v u`
    fn skew_commutator(&mut self, label: &str, u: usize, v: usize, c: CycloScalar) {
        let one = self.one();
        self.rel(label, vec![(one, vec![u, v]), (c.neg(), vec![v, u])]);
    }
}

/// The presentation the instance is defined by.
pub fn presentation(alg: &dyn StructureProvider) -> Presentation {
    let mut b = Builder { alg, gens: Vec::new(), rels: Vec::new() };
    let one = b.one();
    let yx = BasisIndex::yx;
    match alg.params().clone() {
        FamilyParams::GroupZ2 => {
            let (y, _) = b.laurent("y", yx(1, 0), yx(-1, 0));
            let (x, _) = b.laurent("x", yx(0, 1), yx(0, -1));
            b.skew_commutator("xy - yx", x, y, one);
        }
        FamilyParams::GroupZSemiZ => {
            let (y, yi) = b.laurent("y", yx(1, 0), yx(-1, 0));
            let (x, xi) = b.laurent("x", yx(0, 1), yx(0, -1));
            b.rel("x·y·x^-1 - y^-1", vec![(one.clone(), vec![x, y, xi]), (one.neg(), vec![yi])]);
        }
        FamilyParams::EnvAbelian | FamilyParams::EnvNonabelian => {
            let y = b.letter("y", yx(1, 0));
            let x = b.letter("x", yx(0, 1));
            let mut terms = vec![(one.clone(), vec![x, y]), (one.neg(), vec![y, x])];
            let label = if matches!(alg.params(), FamilyParams::EnvAbelian) {
                "xy - yx"
            } else {
                terms.push((one.neg(), vec![y]));
                "xy - yx - y"
            };
            b.rel(label, terms);
        }
        FamilyParams::A { q, .. } => {
            let y = b.letter("y", yx(1, 0));
            let (x, _) = b.laurent("x", yx(0, 1), yx(0, -1));
            b.skew_commutator("xy - q·yx", x, y, q);
        }
        FamilyParams::B { n, p, q } => {
            let data = FamilyParams::b_data(n, &p).expect("validated parameters");
            let s = data.s();
            let unit = |i: usize, v: i64| {
                let mut d = vec![0; s];
                if i < s {
                    d[i] = v;
                }
                d
            };
            let ys: Vec<usize> =
                (0..s).map(|i| b.letter(&format!("y{}", i + 1), BasisIndex::multi(&unit(i, 1), 0))).collect();
            let (x, _) = b.laurent("x", BasisIndex::multi(&unit(s, 0), 1), BasisIndex::multi(&unit(s, 0), -1));
            for i in 0..s {
                let qm = q.pow(data.mi[i] as i64);
                b.skew_commutator(&format!("x·y{0} - q^{1}·y{0}·x", i + 1, data.mi[i]), x, ys[i], qm);
            }
            for i in 0..s {
                for j in i + 1..s {
                    b.skew_commutator(&format!("y{}·y{} - y{}·y{}", i + 1, j + 1, j + 1, i + 1), ys[i], ys[j], one.clone());
                }
            }
            for i in 0..s {
                for j in i + 1..s {
                    let (pi, pj) = (data.ps[i] as usize, data.ps[j] as usize);
                    b.rel(
                        &format!("y{}^{} - y{}^{}", i + 1, pi, j + 1, pj),
                        vec![(one.clone(), vec![ys[i]; pi]), (one.neg(), vec![ys[j]; pj])],
                    );
                }
            }
        }
        FamilyParams::C { n } | FamilyParams::CLift { n, .. } => {
            let q = alg.params().q().cloned().unwrap_or_else(|| one.clone());
            let (y, _) = b.laurent("y", yx(1, 0), yx(-1, 0));
            let x = b.letter("x", yx(0, 1));
            b.rel(
                "xy - q·yx - y^n + y",
                vec![
                    (one.clone(), vec![x, y]),
                    (q.neg(), vec![y, x]),
                    (one.neg(), vec![y; n as usize]),
                    (one.clone(), vec![y]),
                ],
            );
        }
    }
    Presentation { generators: b.gens, relations: b.rels }
}

impl Presentation {
    /// Value of a relation in the algebra, substituting each letter by its
    /// basis monomial; zero when the relation holds.
    pub fn evaluate(&self, alg: &dyn StructureProvider, rel: &Relation) -> Element {
        let mut total = Element::zero();
        for (c, word) in &rel.terms {
            let mut acc = alg.one();
            for &g in word {
                acc = mul(alg, &acc, &alg.basis(self.generators[g].image.clone()));
            }
            total.add_scaled(&acc, c);
        }
        total
    }
}
