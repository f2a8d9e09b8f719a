use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A monomial in commuting variables (`x`, `y`, `p1`, `m`, ...).
///
/// Zero exponents are never stored. Monomials order lexicographically with
/// higher powers of earlier variables first, so `x^2 < x*y < y^2 < 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct CommMonomial(BTreeMap<String, u32>);

impl CommMonomial {
    pub fn one() -> Self {
        CommMonomial(BTreeMap::new())
    }

    pub fn var(name: &str) -> Self {
        Self::var_pow(name, 1)
    }

    pub fn var_pow(name: &str, exp: u32) -> Self {
        let mut m = BTreeMap::new();
        if exp > 0 {
            m.insert(name.to_string(), exp);
        }
        CommMonomial(m)
    }

    pub fn from_exponents<'a>(pairs: impl IntoIterator<Item = (&'a str, u32)>) -> Self {
        pairs
            .into_iter()
            .fold(Self::one(), |acc, (v, e)| acc.mul(&Self::var_pow(v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<String, u32> {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &CommMonomial) -> CommMonomial {
        let mut m = self.0.clone();
        for (v, e) in &other.0 {
            *m.entry(v.clone()).or_insert(0) += e;
        }
        CommMonomial(m)
    }

    /// Removes `var`, returning its exponent.
    pub fn without(&self, var: &str) -> (CommMonomial, u32) {
        let mut m = self.0.clone();
        let e = m.remove(var).unwrap_or(0);
        (CommMonomial(m), e)
    }
}

impl Ord for CommMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // `self` has a variable `other` lacks: self is "heavier"
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match eb.cmp(ea) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for CommMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CommMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                f.write_str(v)?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
