//! Generators for the minimizing polynomial families, the small curve-graph
//! shapes from the classification list, and the two edge-deletion digraph
//! constructions used in the even-genus case analysis.

use serde::{Deserialize, Serialize};

use crate::digraph::{CurveGraph, Digraph};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Lambda,
    Mu,
}

/// Minimizer for the nonnegative-irreducible class: `t^2g - t^g - 1` for odd
/// `g`, `t^2g - t^(g+1) - t^(g-1) - 1` for even `g`.
pub fn lambda_poly(g: usize) -> Result<IntPoly> {
    if g < 1 {
        return Err(Error::invalid("lambda family needs g >= 1"));
    }
    let mut coeffs = vec![0i64; 2 * g + 1];
    coeffs[2 * g] = 1;
    coeffs[0] = -1;
    if g % 2 == 1 {
        coeffs[g] = -1;
    } else {
        coeffs[g + 1] = -1;
        coeffs[g - 1] = -1;
    }
    Ok(IntPoly::from_i64s(&coeffs))
}

/// Minimizer for the primitive class: `t^2g - t^(g+2) - t^(g-2) - 1` for odd
/// `g`, the even case coincides with [`lambda_poly`].
pub fn mu_poly(g: usize) -> Result<IntPoly> {
    if g < 2 {
        return Err(Error::invalid("mu family needs g >= 2"));
    }
    if g.is_multiple_of(2) {
        return lambda_poly(g);
    }
    let mut coeffs = vec![0i64; 2 * g + 1];
    coeffs[2 * g] = 1;
    coeffs[0] = -1;
    coeffs[g + 2] = -1;
    coeffs[g - 2] = -1;
    Ok(IntPoly::from_i64s(&coeffs))
}

pub fn family_poly(tag: FamilyTag, g: usize) -> Result<IntPoly> {
    match tag {
        FamilyTag::Lambda => lambda_poly(g),
        FamilyTag::Mu => mu_poly(g),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShapeName {
    #[serde(rename = "nA1")]
    NA1,
    #[serde(rename = "A2*")]
    A2Star,
    #[serde(rename = "A2**")]
    A2StarStar,
    #[serde(rename = "A2***")]
    A2TripleStar,
    #[serde(rename = "A3*")]
    A3Star,
    #[serde(rename = "Y*")]
    YStar,
}

/// A weighted shape from the classification list. Weight conventions:
/// `nA1` has no edges; `A2*` is `[a, b, c]` with one edge `{a, b}`;
/// `A2**` is `[a, b, c, d]` with one edge `{a, b}`; `A3*` is `[a, b, c, d]`
/// with edges `{a, b}`, `{b, c}` (`b` the degree-two vertex, `d` isolated).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeId {
    pub name: ShapeName,
    pub weights: Vec<u64>,
}

impl ShapeId {
    pub fn na1(weights: &[u64]) -> ShapeId {
        ShapeId {
            name: ShapeName::NA1,
            weights: weights.to_vec(),
        }
    }

    pub fn new(name: ShapeName, weights: &[u64]) -> ShapeId {
        ShapeId {
            name,
            weights: weights.to_vec(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.weights.contains(&0) {
            return Err(Error::invalid("shape weights must be positive"));
        }
        let expect = match self.name {
            ShapeName::NA1 => {
                let n = self.weights.len();
                if !(2..=7).contains(&n) {
                    return Err(Error::invalid("nA1 needs between 2 and 7 vertices"));
                }
                n
            }
            ShapeName::A2Star => 3,
            ShapeName::A2StarStar => 4,
            ShapeName::A3Star => 4,
            ShapeName::A2TripleStar | ShapeName::YStar => {
                return Err(Error::UnsupportedShape(format!(
                    "{:?} is in the classification list but not constructed here",
                    self.name
                )));
            }
        };
        if self.weights.len() != expect {
            return Err(Error::invalid(format!(
                "{:?} expects {expect} weights, got {}",
                self.name,
                self.weights.len()
            )));
        }
        Ok(())
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        match self.name {
            ShapeName::NA1 => Vec::new(),
            ShapeName::A2Star | ShapeName::A2StarStar => vec![(0, 1)],
            ShapeName::A3Star => vec![(0, 1), (1, 2)],
            ShapeName::A2TripleStar | ShapeName::YStar => unreachable!(),
        }
    }
}

/// The weighted shape as an explicit curve graph.
pub fn shape_curve_graph(shape: &ShapeId) -> Result<CurveGraph> {
    shape.validate()?;
    CurveGraph::new(shape.weights.clone(), &shape.edges())
}

/// Symbolic clique polynomial of the shape; agrees with the clique
/// polynomial of [`shape_curve_graph`].
pub fn shape_clique_poly(shape: &ShapeId) -> Result<IntPoly> {
    shape.validate()?;
    let w = &shape.weights;
    let term = |e: u64| IntPoly::monomial(e as usize);
    let mut q = IntPoly::one();
    for &wi in w {
        q = q.sub(&term(wi));
    }
    match shape.name {
        ShapeName::NA1 => {}
        ShapeName::A2Star | ShapeName::A2StarStar => {
            q = q.add(&term(w[0] + w[1]));
        }
        ShapeName::A3Star => {
            q = q.add(&term(w[0] + w[1])).add(&term(w[1] + w[2]));
        }
        ShapeName::A2TripleStar | ShapeName::YStar => unreachable!(),
    }
    Ok(q)
}

/// A digraph construction carrying a distinguished unit edge whose deletion
/// realizes one of the case-analysis reductions. Both clique polynomials are
/// verified against the graph at construction time.
#[derive(Debug, Clone)]
pub struct GammaConstruction {
    pub graph: Digraph,
    pub distinguished_edge: usize,
    pub g: u64,
    /// Clique polynomial of the curve graph of `graph`.
    pub clique_poly: IntPoly,
    /// Clique polynomial after deleting the distinguished edge.
    pub deleted_clique_poly: IntPoly,
}

impl GammaConstruction {
    pub fn deleted_graph(&self) -> Digraph {
        self.graph.delete_edge(self.distinguished_edge)
    }

    fn verify(self) -> Result<GammaConstruction> {
        let q = self.graph.curve_graph()?.clique_polynomial()?;
        if q != self.clique_poly {
            return Err(Error::verification(
                "gamma construction",
                format!(
                    "clique polynomial {} differs from expected {}",
                    q.to_coeff_string(),
                    self.clique_poly.to_coeff_string()
                ),
            ));
        }
        let qd = self.deleted_graph().curve_graph()?.clique_polynomial()?;
        if qd != self.deleted_clique_poly {
            return Err(Error::verification(
                "gamma construction",
                format!(
                    "post-deletion clique polynomial {} differs from expected {}",
                    qd.to_coeff_string(),
                    self.deleted_clique_poly.to_coeff_string()
                ),
            ));
        }
        Ok(self)
    }
}

/// Four simple cycles of weights `a`, `b`, `d` and `c = 2g = b + d`: the
/// `a`- and `b`-cycles are disjoint, every other pair meets, so the curve
/// graph is `A2**` and the clique polynomial is
/// `1 - t^a - t^b - t^c - t^d + t^(a+b)`. Deleting the distinguished unit
/// edge removes the `a`-cycle, leaving the `3A1` polynomial
/// `1 - t^b - t^d - t^2g`.
pub fn gamma_abd(a: u64, b: u64, d: u64) -> Result<GammaConstruction> {
    if a < 1 || a >= b {
        return Err(Error::invalid("need 1 <= a < b"));
    }
    if !(b + d).is_multiple_of(2) {
        return Err(Error::invalid("b + d must be even (it equals 2g)"));
    }
    let two_g = b + d;
    let g = two_g / 2;
    if a + b > two_g - 2 {
        return Err(Error::invalid("need a + b <= 2g - 2"));
    }
    if d >= a + b {
        return Err(Error::invalid("need d < a + b"));
    }
    // Vertices: x = 0 (meets a, c, d), y = 1 (meets b, c, d), w = 2 on the
    // a-cycle when a >= 2.
    let n = if a >= 2 { 3 } else { 2 };
    let mut graph = Digraph::new(n);
    let distinguished = if a >= 2 {
        graph.add_edge(0, 2, a - 1, 1)?;
        graph.add_edge(2, 0, 1, 1)?
    } else {
        graph.add_edge(0, 0, 1, 1)?
    };
    graph.add_edge(1, 1, b, 1)?; // b-cycle
    graph.add_edge(0, 1, b + 1, 1)?; // c-cycle forward leg
    graph.add_edge(1, 0, d - 1, 1)?; // shared return leg (d >= 3 here)
    graph.add_edge(0, 1, 1, 1)?; // d-cycle forward leg

    let t = |e: u64| IntPoly::monomial(e as usize);
    let clique_poly = IntPoly::one()
        .sub(&t(a))
        .sub(&t(b))
        .sub(&t(two_g))
        .sub(&t(d))
        .add(&t(a + b));
    let deleted_clique_poly = IntPoly::one().sub(&t(b)).sub(&t(d)).sub(&t(two_g));
    GammaConstruction {
        graph,
        distinguished_edge: distinguished,
        g,
        clique_poly,
        deleted_clique_poly,
    }
    .verify()
}

/// Four simple cycles of weights `a`, `b`, `c` and `g` with `2a + b = 2g`,
/// `b + c = 2g`: the pairs `{a, b}` and `{b, c}` are disjoint, the `g`-cycle
/// meets everything, so the curve graph is `A3*` and the clique polynomial
/// is `1 - t^a - t^b - t^c - t^g + t^(a+b) + t^(b+c)`. Deleting the
/// distinguished unit edge removes the `a`-cycle, leaving
/// `1 - t^b - t^g - t^(2g-b) + t^2g`. The return leg of the `g`-cycle
/// carries weight `g - a - 1`, folded into the forward leg when `a = g - 1`.
pub fn gamma_prime_abc(a: u64, b: u64, c: u64, g: u64) -> Result<GammaConstruction> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::invalid("weights must be positive"));
    }
    if 2 * a + b != 2 * g {
        return Err(Error::invalid("need 2a + b = 2g"));
    }
    if b + c != 2 * g {
        return Err(Error::invalid("need b + c = 2g"));
    }
    if a > g - 1 {
        return Err(Error::invalid("need a <= g - 1"));
    }
    // Vertices: u = 0 (meets a, c, g), v = 1 (meets b, g), w = 2 on the
    // a-cycle when a >= 2.
    let n = if a >= 2 { 3 } else { 2 };
    let mut graph = Digraph::new(n);
    let distinguished = if a >= 2 {
        graph.add_edge(0, 2, a - 1, 1)?;
        graph.add_edge(2, 0, 1, 1)?
    } else {
        graph.add_edge(0, 0, 1, 1)?
    };
    graph.add_edge(0, 0, c, 1)?; // c-cycle
    graph.add_edge(1, 1, b, 1)?; // b-cycle
    let (fwd, back) = if a == g - 1 {
        (g - 1, 1)
    } else {
        (a + 1, g - a - 1)
    };
    graph.add_edge(0, 1, fwd, 1)?;
    graph.add_edge(1, 0, back, 1)?;

    let t = |e: u64| IntPoly::monomial(e as usize);
    let clique_poly = IntPoly::one()
        .sub(&t(a))
        .sub(&t(b))
        .sub(&t(c))
        .sub(&t(g))
        .add(&t(a + b))
        .add(&t(b + c));
    let deleted_clique_poly = IntPoly::one()
        .sub(&t(b))
        .sub(&t(g))
        .sub(&t(2 * g - b))
        .add(&t(2 * g));
    GammaConstruction {
        graph,
        distinguished_edge: distinguished,
        g,
        clique_poly,
        deleted_clique_poly,
    }
    .verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{companion, is_irreducible, primitivity};
    use crate::poly::is_skew_reciprocal;
    use crate::poly::roots::{gap_exceeds, largest_real_root_isolated};

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_poly(1).unwrap(), p(&[-1, -1, 1]));
        assert_eq!(lambda_poly(2).unwrap(), p(&[-1, -1, 0, -1, 1]));
        assert_eq!(lambda_poly(3).unwrap(), p(&[-1, 0, 0, -1, 0, 0, 1]));
        assert!(lambda_poly(0).is_err());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_poly(2).unwrap(), lambda_poly(2).unwrap());
        assert_eq!(mu_poly(3).unwrap(), p(&[-1, -1, 0, 0, 0, -1, 1]));
        assert_eq!(
            mu_poly(5).unwrap(),
            p(&[-1, 0, 0, -1, 0, 0, 0, -1, 0, 0, 1])
        );
        assert!(mu_poly(1).is_err());
    }

    #[test]
    fn families_are_skew_reciprocal_up_to_30() {
        for g in 1..=30 {
            assert!(is_skew_reciprocal(&lambda_poly(g).unwrap()).unwrap());
            if g >= 2 {
                assert!(is_skew_reciprocal(&mu_poly(g).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn family_companions() {
        for g in 2..=12 {
            let c = companion(&mu_poly(g).unwrap()).unwrap();
            assert!(c.is_nonnegative());
            let pr = primitivity(&c).unwrap();
            assert!(pr.is_primitive, "mu companion must be primitive at g={g}");
        }
        for g in (3..=11).step_by(2) {
            let c = companion(&lambda_poly(g).unwrap()).unwrap();
            assert!(is_irreducible(&c).unwrap());
            let pr = primitivity(&c).unwrap();
            assert!(!pr.is_primitive);
            assert_eq!(pr.cycle_gcd, Some(g));
        }
    }

    #[test]
    fn shape_polynomials() {
        // 3A1 with weights (g-1, g+1, 2g) at g = 4.
        let q = shape_clique_poly(&ShapeId::na1(&[3, 5, 8])).unwrap();
        assert_eq!(q, p(&[1, 0, 0, -1, 0, -1, 0, 0, -1]));

        let q = shape_clique_poly(&ShapeId::new(ShapeName::A2Star, &[1, 3, 2])).unwrap();
        assert_eq!(q, p(&[1, -1, -1, -1, 1]));

        let q = shape_clique_poly(&ShapeId::new(ShapeName::A3Star, &[1, 2, 3, 4])).unwrap();
        assert_eq!(q, p(&[1, -1, -1, 0, -1, 1]));

        assert!(matches!(
            shape_clique_poly(&ShapeId::new(ShapeName::YStar, &[1, 1, 1, 1])),
            Err(Error::UnsupportedShape(_))
        ));
    }

    #[test]
    fn shape_formula_matches_curve_graph() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC11C0E);
        for _ in 0..50 {
            let w = |rng: &mut rand_chacha::ChaCha8Rng| rng.gen_range(1..=9u64);
            let shapes = [
                ShapeId::na1(&[w(&mut rng), w(&mut rng), w(&mut rng), w(&mut rng)]),
                ShapeId::new(ShapeName::A2Star, &[w(&mut rng), w(&mut rng), w(&mut rng)]),
                ShapeId::new(
                    ShapeName::A2StarStar,
                    &[w(&mut rng), w(&mut rng), w(&mut rng), w(&mut rng)],
                ),
                ShapeId::new(
                    ShapeName::A3Star,
                    &[w(&mut rng), w(&mut rng), w(&mut rng), w(&mut rng)],
                ),
            ];
            for s in shapes {
                let formula = shape_clique_poly(&s).unwrap();
                let graph = shape_curve_graph(&s).unwrap().clique_polynomial().unwrap();
                assert_eq!(formula, graph, "shape {s:?}");
            }
        }
    }

    #[test]
    fn gamma_abd_example() {
        let gc = gamma_abd(2, 4, 4).unwrap();
        assert_eq!(gc.g, 4);
        // 1 - t^2 - 2t^4 + t^6 - t^8 (weights b = d = 4 accumulate).
        assert_eq!(gc.clique_poly, p(&[1, 0, -1, 0, -2, 0, 1, 0, -1]));
        assert_eq!(gc.deleted_clique_poly, p(&[1, 0, 0, 0, -2, 0, 0, 0, -1]));
        assert!(is_irreducible(&gc.graph.expand().unwrap()).unwrap());

        assert!(gamma_abd(4, 2, 4).is_err()); // a >= b
        assert!(gamma_abd(2, 4, 5).is_err()); // odd 2g
        assert!(gamma_abd(3, 4, 4).is_err()); // a + b > 2g - 2
        assert!(gamma_abd(1, 8, 3).is_err()); // d < a + b fails other side
    }

    #[test]
    fn gamma_prime_example() {
        let gc = gamma_prime_abc(1, 6, 2, 4).unwrap();
        assert_eq!(gc.clique_poly, p(&[1, -1, -1, 0, -1, 0, -1, 1, 1]));
        assert_eq!(gc.deleted_clique_poly, p(&[1, 0, -1, 0, -1, 0, -1, 0, 1]));

        // Contracted case a = g - 1.
        let gc = gamma_prime_abc(3, 2, 6, 4).unwrap();
        assert_eq!(
            gc.clique_poly,
            IntPoly::one()
                .sub(&IntPoly::monomial(3))
                .sub(&IntPoly::monomial(2))
                .sub(&IntPoly::monomial(6))
                .sub(&IntPoly::monomial(4))
                .add(&IntPoly::monomial(5))
                .add(&IntPoly::monomial(8))
        );

        assert!(gamma_prime_abc(2, 6, 2, 4).is_err()); // 2a + b != 2g
        assert!(gamma_prime_abc(4, 0, 8, 4).is_err());
    }

    #[test]
    fn gamma_expansion_satisfies_duality() {
        // The expanded adjacency matrix's characteristic polynomial is the
        // reciprocal of the curve graph's clique polynomial.
        let gc = gamma_abd(2, 4, 4).unwrap();
        let m = gc.graph.expand().unwrap();
        assert!(crate::digraph::duality_check(&m).unwrap());
        let chi = crate::matrix::char_poly(&m);
        let expected = crate::poly::reciprocal_transform(&gc.clique_poly, m.dim()).unwrap();
        assert_eq!(chi, expected);
    }

    #[test]
    fn gamma_deletion_decreases_perron_root() {
        for gc in [
            gamma_abd(2, 4, 4).unwrap(),
            gamma_abd(1, 4, 4).unwrap(),
            gamma_prime_abc(1, 6, 2, 4).unwrap(),
            gamma_prime_abc(3, 2, 6, 4).unwrap(),
        ] {
            let before = crate::matrix::char_poly(&gc.graph.expand().unwrap());
            let after = crate::matrix::char_poly(&gc.deleted_graph().expand().unwrap());
            let mut rb = largest_real_root_isolated(&before).unwrap().unwrap();
            let mut ra = largest_real_root_isolated(&after).unwrap().unwrap();
            let gap = crate::rat::rat(1, 1_000_000_000);
            assert!(gap_exceeds(&mut ra, &mut rb, &gap).unwrap());
        }
    }
}
