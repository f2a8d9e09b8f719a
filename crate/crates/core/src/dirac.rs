//! Dirac α/β algebra: the standard 4×4 representation, exact relation
//! checks, the symbolic square of `α·p + β·m`, and the gamma-matrix
//! Clifford relation.

use crate::exactnum::{Cyclotomic, Rational};
use crate::linmat::{pauli_x, pauli_y, pauli_z, Matrix, MatrixError};
use crate::ncalg::{expand_power, NCPoly, RelationSet, Rule, Symbol};
use crate::report::{CheckReport, RelationCheck};
use crate::scalar::Scalar;

/// Three α matrices and β.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracSet<S> {
    pub alphas: [Matrix<S>; 3],
    pub beta: Matrix<S>,
}

impl<S: Scalar> DiracSet<S> {
    pub fn dim(&self) -> usize {
        self.beta.dim()
    }

    /// γ⁰ = β, γⁱ = β·αⁱ.
    pub fn gammas(&self) -> Result<[Matrix<S>; 4], MatrixError> {
        Ok([
            self.beta.clone(),
            self.beta.mat_mul(&self.alphas[0])?,
            self.beta.mat_mul(&self.alphas[1])?,
            self.beta.mat_mul(&self.alphas[2])?,
        ])
    }
}

/// Diagonal metric η; defaults to the mostly-minus signature (+, −, −, −).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetricSignature {
    pub eta: [i8; 4],
}

impl Default for MetricSignature {
    fn default() -> Self {
        MetricSignature { eta: [1, -1, -1, -1] }
    }
}

impl MetricSignature {
    pub fn new(eta: [i8; 4]) -> Result<Self, MatrixError> {
        if eta.iter().any(|e| e.abs() != 1) {
            return Err(MatrixError::Domain("metric entries must be +1 or -1".to_string()));
        }
        Ok(MetricSignature { eta })
    }

    pub fn component(&self, mu: usize, nu: usize) -> i8 {
        if mu == nu {
            self.eta[mu]
        } else {
            0
        }
    }
}

fn block_offdiag(sigma: &Matrix<Cyclotomic>) -> Matrix<Cyclotomic> {
    Matrix::from_fn(4, |i, j| match (i < 2, j < 2) {
        (true, false) => sigma.get(i, j - 2).clone(),
        (false, true) => sigma.get(i - 2, j).clone(),
        _ => Cyclotomic::from(0),
    })
}

/// The Dirac representation over Q(i): αⁱ = [[0, σⁱ], [σⁱ, 0]],
/// β = diag(1, 1, −1, −1).
pub fn standard_dirac_set() -> DiracSet<Cyclotomic> {
    DiracSet {
        alphas: [
            block_offdiag(&pauli_x()),
            block_offdiag(&pauli_y()),
            block_offdiag(&pauli_z()),
        ],
        beta: Matrix::from_diagonal([1, 1, -1, -1].map(Cyclotomic::from).to_vec()),
    }
}

fn anticommutator<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>, MatrixError> {
    a.mat_mul(b)?.try_add(&b.mat_mul(a)?)
}

/// Checks (αⁱ)² = 𝟙, β² = 𝟙, αⁱβ + βαⁱ = 0 and, for i < j,
/// αⁱαʲ + αʲαⁱ = 0.
pub fn verify_dirac_algebra<S: Scalar>(set: &DiracSet<S>) -> Result<CheckReport, MatrixError> {
    let dim = set.dim();
    let one = Matrix::<S>::identity(dim);
    let zero = Matrix::<S>::zeros(dim);
    let mut checks = Vec::new();
    for (i, a) in set.alphas.iter().enumerate() {
        checks.push(RelationCheck::equality(format!("alpha{}^2 = 1", i + 1), &a.mat_mul(a)?, &one)?);
    }
    checks.push(RelationCheck::equality("beta^2 = 1", &set.beta.mat_mul(&set.beta)?, &one)?);
    for (i, a) in set.alphas.iter().enumerate() {
        checks.push(RelationCheck::equality(
            format!("alpha{0}*beta + beta*alpha{0} = 0", i + 1),
            &anticommutator(a, &set.beta)?,
            &zero,
        )?);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            checks.push(RelationCheck::equality(
                format!("alpha{}*alpha{} + alpha{}*alpha{} = 0 (mixed pair)", i + 1, j + 1, j + 1, i + 1),
                &anticommutator(&set.alphas[i], &set.alphas[j])?,
                &zero,
            )?);
        }
    }
    let field = set.alphas.iter().try_fold(set.beta.field()?, |acc, a| {
        let f = a.field()?;
        acc.join(f).ok_or(MatrixError::Field(acc, f))
    })?;
    Ok(CheckReport::new("Dirac alpha/beta algebra", dim, field.to_string(), checks))
}

/// Checks γ^μγ^ν + γ^νγ^μ = 2η^{μν}𝟙 for all ten pairs μ ≤ ν.
pub fn verify_clifford<S: Scalar>(
    gammas: &[Matrix<S>; 4],
    eta: &MetricSignature,
) -> Result<CheckReport, MatrixError> {
    let dim = gammas[0].dim();
    let mut checks = Vec::with_capacity(10);
    for mu in 0..4 {
        for nu in mu..4 {
            let rhs = Matrix::<S>::scalar(dim, S::from_i64(2 * eta.component(mu, nu) as i64));
            checks.push(RelationCheck::equality(
                format!("{{gamma{mu}, gamma{nu}}} = {}", 2 * eta.component(mu, nu)),
                &anticommutator(&gammas[mu], &gammas[nu])?,
                &rhs,
            )?);
        }
    }
    let field = gammas.iter().try_fold(gammas[0].field()?, |acc, g| {
        let f = g.field()?;
        acc.join(f).ok_or(MatrixError::Field(acc, f))
    })?;
    let sig: Vec<&str> = eta.eta.iter().map(|e| if *e > 0 { "+" } else { "-" }).collect();
    Ok(CheckReport::new(
        format!("Clifford relation, signature ({})", sig.join(",")),
        dim,
        field.to_string(),
        checks,
    ))
}

/// Which relation families to impose when squaring the Hamiltonian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HamiltonianRules {
    pub beta_anticommutation: bool,
    pub alpha_anticommutation: bool,
}

impl Default for HamiltonianRules {
    fn default() -> Self {
        HamiltonianRules {
            beta_anticommutation: true,
            alpha_anticommutation: true,
        }
    }
}

/// Rewrite rules for symbols `A1, A2, A3, B`: Aᵢ² → 1, B² → 1, and
/// optionally B·Aᵢ → −Aᵢ·B and Aⱼ·Aᵢ → −Aᵢ·Aⱼ (i < j).
pub fn dirac_relations(rules: HamiltonianRules) -> RelationSet<Rational> {
    let one = Rational::from_integer(1.into());
    let minus = -one.clone();
    let mut out = Vec::new();
    for i in 1..=3 {
        out.push(Rule::scaled(&format!("A{i}*A{i}"), one.clone(), "1"));
    }
    out.push(Rule::scaled("B*B", one, "1"));
    if rules.beta_anticommutation {
        for i in 1..=3 {
            out.push(Rule::scaled(&format!("B*A{i}"), minus.clone(), &format!("A{i}*B")));
        }
    }
    if rules.alpha_anticommutation {
        for i in 1..=3 {
            for j in i + 1..=3 {
                out.push(Rule::scaled(
                    &format!("A{j}*A{i}"),
                    minus.clone(),
                    &format!("A{i}*A{j}"),
                ));
            }
        }
    }
    let order: Vec<Symbol> = ["A1", "A2", "A3", "B"].into_iter().map(Symbol::new).collect();
    RelationSet::with_preferred_order(out, &order).expect("Dirac rules are terminating")
}

/// (p1·A1 + p2·A2 + p3·A3 + m·B)² reduced by [`dirac_relations`].
pub fn hamiltonian_square_with(rules: HamiltonianRules) -> NCPoly<Rational> {
    let form: Vec<(&str, Symbol)> = [("p1", "A1"), ("p2", "A2"), ("p3", "A3"), ("m", "B")]
        .into_iter()
        .map(|(v, s)| (v, Symbol::new(s)))
        .collect();
    let square = expand_power(&form, 2).expect("symbols are distinct");
    dirac_relations(rules).reduce(&square)
}

/// The fully reduced square: (p1² + p2² + p3² + m²)·ε.
pub fn hamiltonian_square_symbolic() -> NCPoly<Rational> {
    hamiltonian_square_with(HamiltonianRules::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::CommMonomial;

    #[test]
    fn standard_set_passes() {
        let set = standard_dirac_set();
        let r = verify_dirac_algebra(&set).unwrap();
        assert!(r.all_passed, "{}", r.render_text());
        assert_eq!(r.checks.len(), 10);
        assert!(set.beta.mat_pow(2).is_identity());
        assert!(set.alphas[1].mat_pow(2).is_identity());
    }

    #[test]
    fn beta_identity_breaks_anticommutation() {
        let mut set = standard_dirac_set();
        set.beta = Matrix::identity(4);
        let r = verify_dirac_algebra(&set).unwrap();
        let c = r.check("alpha1*beta + beta*alpha1 = 0").unwrap();
        assert!(!c.passed);
        let expected = set.alphas[0].scale(&Cyclotomic::from(2)).to_string_rows();
        assert_eq!(c.defect.as_ref().unwrap(), &expected);
        assert!(r.check("beta^2 = 1").unwrap().passed);
    }

    #[test]
    fn equal_alphas_break_mutual_anticommutation() {
        let mut set = standard_dirac_set();
        set.alphas[1] = set.alphas[0].clone();
        let r = verify_dirac_algebra(&set).unwrap();
        let c = r.check("alpha1*alpha2 + alpha2*alpha1 = 0 (mixed pair)").unwrap();
        assert!(!c.passed);
        assert_eq!(
            c.defect.as_ref().unwrap(),
            &Matrix::<Cyclotomic>::scalar(4, Cyclotomic::from(2)).to_string_rows()
        );
    }

    #[test]
    fn gammas_satisfy_clifford() {
        let set = standard_dirac_set();
        let g = set.gammas().unwrap();
        let r = verify_clifford(&g, &MetricSignature::default()).unwrap();
        assert!(r.all_passed, "{}", r.render_text());
        assert_eq!(r.checks.len(), 10);
        assert!(g[0].mat_pow(2).is_identity());
        for gi in &g[1..] {
            assert_eq!(gi.mat_pow(2), Matrix::scalar(4, Cyclotomic::from(-1)));
        }
    }

    #[test]
    fn identity_gammas_fail_off_diagonal() {
        let one = Matrix::<Rational>::identity(4);
        let g = [one.clone(), one.clone(), one.clone(), one];
        let r = verify_clifford(&g, &MetricSignature::default()).unwrap();
        assert!(r.check("{gamma0, gamma0} = 2").unwrap().passed);
        let c = r.check("{gamma0, gamma1} = 0").unwrap();
        assert!(!c.passed);
        assert_eq!(c.defect.as_ref().unwrap(), &Matrix::<Rational>::scalar(4, Rational::from_integer(2.into())).to_string_rows());
    }

    #[test]
    fn hamiltonian_square_reduces_to_energy() {
        let h = hamiltonian_square_symbolic();
        assert_eq!(h.to_string(), "(m^2 + p1^2 + p2^2 + p3^2)*1");
    }

    #[test]
    fn without_beta_rules_cross_terms_survive() {
        let h = hamiltonian_square_with(HamiltonianRules {
            beta_anticommutation: false,
            alpha_anticommutation: true,
        });
        for i in 1..=3 {
            let mono = CommMonomial::from_exponents([("m", 1), (format!("p{i}").as_str(), 1)]);
            let ab = h.coefficient(&mono, &crate::ncalg::Word::parse(&format!("A{i}*B")));
            let ba = h.coefficient(&mono, &crate::ncalg::Word::parse(&format!("B*A{i}")));
            assert_eq!(ab, Rational::from_integer(1.into()));
            assert_eq!(ba, Rational::from_integer(1.into()));
        }
    }

    #[test]
    fn massless_specialization() {
        let h = hamiltonian_square_symbolic().specialize("m", &Rational::from_integer(0.into()));
        assert_eq!(h.to_string(), "(p1^2 + p2^2 + p3^2)*1");
    }

    #[test]
    fn relabeling_momenta_is_a_symmetry() {
        let h = hamiltonian_square_symbolic();
        let swapped = h.map_coeffs(|c| c.clone());
        // p1 <-> p3 in the reduced result
        let mut relabeled = NCPoly::zero();
        for (m, w, c) in swapped.iter() {
            let e: Vec<(String, u32)> = m
                .exponents()
                .iter()
                .map(|(v, e)| {
                    let v = match v.as_str() {
                        "p1" => "p3".to_string(),
                        "p3" => "p1".to_string(),
                        other => other.to_string(),
                    };
                    (v, *e)
                })
                .collect();
            let mono = CommMonomial::from_exponents(e.iter().map(|(v, e)| (v.as_str(), *e)));
            relabeled.add_term(mono, w.clone(), c.clone());
        }
        assert_eq!(relabeled, h);
    }
}
