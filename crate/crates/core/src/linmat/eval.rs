use std::collections::{BTreeMap, HashMap};

use super::{Matrix, MatrixError};
use crate::ncalg::{NCPoly, Symbol, Word};
use crate::scalar::{Field, Scalar};

/// Matrix values for symbols and scalar values for commutative variables.
#[derive(Clone, Debug)]
pub struct Bindings<S> {
    dim: usize,
    symbols: BTreeMap<Symbol, Matrix<S>>,
    vars: BTreeMap<String, S>,
}

impl<S: Scalar> Bindings<S> {
    pub fn new(dim: usize) -> Self {
        Bindings {
            dim,
            symbols: BTreeMap::new(),
            vars: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn with_symbol(mut self, name: &str, m: Matrix<S>) -> Result<Self, MatrixError> {
        if m.dim() != self.dim {
            return Err(MatrixError::Shape(format!(
                "symbol {name} bound to a {}x{} matrix, expected {}x{}",
                m.dim(),
                m.dim(),
                self.dim,
                self.dim
            )));
        }
        self.symbols.insert(Symbol::new(name), m);
        Ok(self)
    }

    pub fn with_var(mut self, name: &str, value: S) -> Self {
        self.vars.insert(name.to_string(), value);
        self
    }

    fn field(&self) -> Result<Field, MatrixError> {
        let fields = self
            .symbols
            .values()
            .map(|m| m.field())
            .chain(self.vars.values().map(|v| Ok(v.field())));
        let mut acc: Option<Field> = None;
        for f in fields {
            let f = f?;
            acc = Some(match acc {
                None => f,
                Some(a) => a.join(f).ok_or(MatrixError::Field(a, f))?,
            });
        }
        Ok(acc.unwrap_or(Field::Rational))
    }
}

/// Evaluates `p` at the bindings, exactly: words become matrix products,
/// monomials become scalar products, ε becomes 𝟙.
pub fn evaluate<S: Scalar>(p: &NCPoly<S>, bindings: &Bindings<S>) -> Result<Matrix<S>, MatrixError> {
    for s in p.symbols() {
        if !bindings.symbols.contains_key(&s) {
            return Err(MatrixError::MissingBinding(s.to_string()));
        }
    }
    for v in p.variables() {
        if !bindings.vars.contains_key(&v) {
            return Err(MatrixError::MissingBinding(v));
        }
    }
    let bound = bindings.field()?;
    let coeffs = p
        .field()
        .map_err(|_| MatrixError::Shape("polynomial mixes coefficient fields".to_string()))?;
    if !p.is_zero() {
        bound.join(coeffs).ok_or(MatrixError::Field(bound, coeffs))?;
    }

    let dim = bindings.dim;
    let mut cache: HashMap<Word, Matrix<S>> = HashMap::new();
    let mut out = Matrix::zeros(dim);
    for (mono, word, c) in p.iter() {
        let mut scalar = c.clone();
        for (v, e) in mono.exponents() {
            let value = &bindings.vars[v];
            for _ in 0..*e {
                scalar = scalar * value.clone();
            }
        }
        let m = word_matrix(word, bindings, &mut cache);
        out = out.try_add(&m.scale(&scalar))?;
    }
    Ok(out)
}

fn word_matrix<S: Scalar>(
    word: &Word,
    bindings: &Bindings<S>,
    cache: &mut HashMap<Word, Matrix<S>>,
) -> Matrix<S> {
    if word.is_empty() {
        return Matrix::identity(bindings.dim);
    }
    if let Some(m) = cache.get(word) {
        return m.clone();
    }
    let head = word.slice(0, word.len() - 1);
    let last = &bindings.symbols[&word.symbols()[word.len() - 1]];
    let m = word_matrix(&head, bindings, cache).mul_unchecked(last);
    cache.insert(word.clone(), m.clone());
    m
}
