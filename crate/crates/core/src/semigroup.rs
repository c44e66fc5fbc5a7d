//! Finite gamma-semigroups.
//!
//! A structure is a finite carrier `S = {0, .., s_size-1}`, a finite operator
//! set `G = {0, .., g_size-1}`, and a ternary product `S x G x S -> S` stored
//! as one flat table. An optional second table `G x S x G -> G` makes the
//! structure both-sided; when it is present the two tables must evaluate every
//! alternating five-letter word unambiguously.

use crate::error::InputError;

/// A finite gamma-semigroup given by explicit product tables.
///
/// `table[(x * g_size + a) * s_size + y]` holds the product of `x` and `y`
/// under operator `a`. The optional `gamma_table[(a * s_size + x) * g_size + b]`
/// holds the operator-valued product of `a` and `b` around element `x`.
/// Construction checks sizes and index ranges only; the axioms are checked by
/// [`GammaSemigroup::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaSemigroup {
    s_size: usize,
    g_size: usize,
    table: Vec<usize>,
    gamma_table: Option<Vec<usize>>,
    s_labels: Option<Vec<String>>,
    g_labels: Option<Vec<String>>,
}

impl GammaSemigroup {
    pub fn new(
        s_size: usize,
        g_size: usize,
        table: Vec<usize>,
        gamma_table: Option<Vec<usize>>,
    ) -> Result<Self, InputError> {
        if s_size == 0 {
            return Err(InputError::ZeroSize { what: "s_size" });
        }
        if g_size == 0 {
            return Err(InputError::ZeroSize { what: "g_size" });
        }
        let want = s_size * g_size * s_size;
        if table.len() != want {
            return Err(InputError::TableSize {
                what: "product table",
                got: table.len(),
                want,
            });
        }
        if let Some(&value) = table.iter().find(|&&v| v >= s_size) {
            return Err(InputError::IndexRange {
                what: "product table",
                value,
                size: s_size,
            });
        }
        if let Some(gt) = &gamma_table {
            let want = g_size * s_size * g_size;
            if gt.len() != want {
                return Err(InputError::TableSize {
                    what: "gamma table",
                    got: gt.len(),
                    want,
                });
            }
            if let Some(&value) = gt.iter().find(|&&v| v >= g_size) {
                return Err(InputError::IndexRange {
                    what: "gamma table",
                    value,
                    size: g_size,
                });
            }
        }
        Ok(GammaSemigroup {
            s_size,
            g_size,
            table,
            gamma_table,
            s_labels: None,
            g_labels: None,
        })
    }

    /// Attaches display names to elements and operators.
    pub fn with_labels(
        mut self,
        s_labels: Vec<String>,
        g_labels: Vec<String>,
    ) -> Result<Self, InputError> {
        if s_labels.len() != self.s_size {
            return Err(InputError::TableSize {
                what: "element labels",
                got: s_labels.len(),
                want: self.s_size,
            });
        }
        if g_labels.len() != self.g_size {
            return Err(InputError::TableSize {
                what: "operator labels",
                got: g_labels.len(),
                want: self.g_size,
            });
        }
        self.s_labels = Some(s_labels);
        self.g_labels = Some(g_labels);
        Ok(self)
    }

    pub fn s_size(&self) -> usize {
        self.s_size
    }

    pub fn g_size(&self) -> usize {
        self.g_size
    }

    pub fn has_gamma_table(&self) -> bool {
        self.gamma_table.is_some()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.s_size
    }

    pub fn operators(&self) -> std::ops::Range<usize> {
        0..self.g_size
    }

    /// The product `x a y`.
    #[inline]
    pub fn product(&self, x: usize, a: usize, y: usize) -> usize {
        debug_assert!(x < self.s_size && a < self.g_size && y < self.s_size);
        self.table[(x * self.g_size + a) * self.s_size + y]
    }

    /// The operator-valued product `a x b`, if a gamma table is present.
    #[inline]
    pub fn gamma_product(&self, a: usize, x: usize, b: usize) -> Option<usize> {
        debug_assert!(a < self.g_size && x < self.s_size && b < self.g_size);
        self.gamma_table
            .as_ref()
            .map(|gt| gt[(a * self.s_size + x) * self.g_size + b])
    }

    pub fn raw_table(&self) -> &[usize] {
        &self.table
    }

    pub fn raw_gamma_table(&self) -> Option<&[usize]> {
        self.gamma_table.as_deref()
    }

    /// Display name for element `x`: its label if set, else the index.
    pub fn s_label(&self, x: usize) -> String {
        match &self.s_labels {
            Some(ls) => ls[x].clone(),
            None => x.to_string(),
        }
    }

    /// Display name for operator `a`: its label if set, else the index.
    pub fn g_label(&self, a: usize) -> String {
        match &self.g_labels {
            Some(ls) => ls[a].clone(),
            None => a.to_string(),
        }
    }

    /// Checks the axioms and reports every violation with a witness.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for x in self.elements() {
            for a in self.operators() {
                for y in self.elements() {
                    for b in self.operators() {
                        for z in self.elements() {
                            let lhs = self.product(self.product(x, a, y), b, z);
                            let rhs = self.product(x, a, self.product(y, b, z));
                            if lhs != rhs {
                                violations.push(AxiomViolation::Associativity {
                                    x,
                                    a,
                                    y,
                                    b,
                                    z,
                                    lhs,
                                    rhs,
                                });
                            }
                            if let Some(c) = self.gamma_product(a, y, b) {
                                let mid = self.product(x, c, z);
                                if lhs != mid {
                                    violations.push(AxiomViolation::MixedElementWord {
                                        x,
                                        a,
                                        y,
                                        b,
                                        z,
                                        lhs,
                                        rhs: mid,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        if self.gamma_table.is_some() {
            for a in self.operators() {
                for x in self.elements() {
                    for b in self.operators() {
                        for y in self.elements() {
                            for c in self.operators() {
                                let u1 = self
                                    .gamma_product(self.gamma_product(a, x, b).unwrap(), y, c)
                                    .unwrap();
                                let u2 = self.gamma_product(a, self.product(x, b, y), c).unwrap();
                                let u3 = self
                                    .gamma_product(a, x, self.gamma_product(b, y, c).unwrap())
                                    .unwrap();
                                if u1 != u2 {
                                    violations.push(AxiomViolation::MixedOperatorWord {
                                        a,
                                        x,
                                        b,
                                        y,
                                        c,
                                        lhs: u1,
                                        rhs: u2,
                                        trees: ("((a x b) y c)", "(a (x b y) c)"),
                                    });
                                }
                                if u1 != u3 {
                                    violations.push(AxiomViolation::MixedOperatorWord {
                                        a,
                                        x,
                                        b,
                                        y,
                                        c,
                                        lhs: u1,
                                        rhs: u3,
                                        trees: ("((a x b) y c)", "(a x (b y c))"),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().violations.is_empty()
    }

    /// First pair `(e, d)` in lexicographic order with `e d s = s` for all `s`.
    pub fn left_unity_pair(&self) -> Option<(usize, usize)> {
        for e in self.elements() {
            for d in self.operators() {
                if self.elements().all(|s| self.product(e, d, s) == s) {
                    return Some((e, d));
                }
            }
        }
        None
    }

    /// First pair `(c, f)` in lexicographic order with `s c f = s` for all `s`.
    pub fn right_unity_pair(&self) -> Option<(usize, usize)> {
        for c in self.operators() {
            for f in self.elements() {
                if self.elements().all(|s| self.product(s, c, f) == s) {
                    return Some((c, f));
                }
            }
        }
        None
    }

    /// True when `x a y == y a x` for all elements and operators.
    pub fn is_commutative(&self) -> bool {
        self.elements().all(|x| {
            self.operators()
                .all(|a| (x..self.s_size).all(|y| self.product(x, a, y) == self.product(y, a, x)))
        })
    }
}

/// Outcome of [`GammaSemigroup::validate`]: empty means the axioms hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A concrete witness that an axiom fails, with both evaluation trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `((x a y) b z) != (x a (y b z))`.
    Associativity {
        x: usize,
        a: usize,
        y: usize,
        b: usize,
        z: usize,
        lhs: usize,
        rhs: usize,
    },
    /// `((x a y) b z) != (x (a y b) z)`; needs the gamma table.
    MixedElementWord {
        x: usize,
        a: usize,
        y: usize,
        b: usize,
        z: usize,
        lhs: usize,
        rhs: usize,
    },
    /// Two parenthesizations of the operator-valued word `a x b y c` disagree.
    MixedOperatorWord {
        a: usize,
        x: usize,
        b: usize,
        y: usize,
        c: usize,
        lhs: usize,
        rhs: usize,
        trees: (&'static str, &'static str),
    },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::Associativity {
                x,
                a,
                y,
                b,
                z,
                lhs,
                rhs,
            } => write!(
                f,
                "associativity: word {x} {a} {y} {b} {z}: ((x a y) b z) = {lhs}, (x a (y b z)) = {rhs}"
            ),
            AxiomViolation::MixedElementWord {
                x,
                a,
                y,
                b,
                z,
                lhs,
                rhs,
            } => write!(
                f,
                "mixed word: word {x} {a} {y} {b} {z}: ((x a y) b z) = {lhs}, (x (a y b) z) = {rhs}"
            ),
            AxiomViolation::MixedOperatorWord {
                a,
                x,
                b,
                y,
                c,
                lhs,
                rhs,
                trees,
            } => write!(
                f,
                "mixed operator word: word {a} {x} {b} {y} {c}: {} = {lhs}, {} = {rhs}",
                trees.0, trees.1
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn product_reads_the_table() {
        let s = samples::i2();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(s.product(x, 0, y), x * y % 2);
            }
        }
    }

    #[test]
    fn size_and_range_checks() {
        assert!(matches!(
            GammaSemigroup::new(0, 1, vec![], None),
            Err(InputError::ZeroSize { what: "s_size" })
        ));
        assert!(matches!(
            GammaSemigroup::new(1, 0, vec![], None),
            Err(InputError::ZeroSize { what: "g_size" })
        ));
        assert!(matches!(
            GammaSemigroup::new(2, 1, vec![0, 0, 0], None),
            Err(InputError::TableSize { .. })
        ));
        assert!(matches!(
            GammaSemigroup::new(2, 1, vec![0, 0, 0, 2], None),
            Err(InputError::IndexRange { value: 2, .. })
        ));
        assert!(matches!(
            GammaSemigroup::new(1, 1, vec![0], Some(vec![0, 0])),
            Err(InputError::TableSize { .. })
        ));
    }

    #[test]
    fn named_samples_validate() {
        assert!(samples::singleton().is_valid());
        assert!(samples::left_zero().is_valid());
        assert!(samples::i2().is_valid());
        assert!(samples::mod2_full().is_valid());
        assert!(samples::strong_rho().is_valid());
    }

    #[test]
    fn broken_sample_reports_an_associativity_witness() {
        // Products: 0 g 1 = 1, everything else 0. The word 1 0 0 0 1 separates
        // the two trees: ((1 g 0) g 1) = 0 g 1 = 1 but (1 g (0 g 1)) = 1 g 1 = 0.
        let report = samples::broken().validate();
        assert!(!report.is_valid());
        assert!(report.violations.contains(&AxiomViolation::Associativity {
            x: 1,
            a: 0,
            y: 0,
            b: 0,
            z: 1,
            lhs: 1,
            rhs: 0,
        }));
        // Every reported witness re-evaluates to the stated values.
        let s = samples::broken();
        for v in &report.violations {
            match *v {
                AxiomViolation::Associativity {
                    x,
                    a,
                    y,
                    b,
                    z,
                    lhs,
                    rhs,
                } => {
                    assert_eq!(s.product(s.product(x, a, y), b, z), lhs);
                    assert_eq!(s.product(x, a, s.product(y, b, z)), rhs);
                    assert_ne!(lhs, rhs);
                }
                _ => panic!("unexpected violation kind"),
            }
        }
    }

    #[test]
    fn commutativity() {
        assert!(samples::singleton().is_commutative());
        assert!(samples::i2().is_commutative());
        // Left zero: 0 g 1 = 0 but 1 g 0 = 1.
        assert!(!samples::left_zero().is_commutative());
    }

    #[test]
    fn labels_default_to_indices() {
        let s = samples::mod2_full();
        assert_eq!(s.s_label(1), "1");
        assert_eq!(s.g_label(0), "0");
        let s = samples::left_zero();
        assert_eq!(s.s_label(1), "b");
        assert_eq!(s.g_label(0), "g");
    }
}
