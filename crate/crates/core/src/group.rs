//! Finite groups by multiplication table; element 0 is the identity.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

/// JSON form: `{"order": n, "table": [[...]], "labels": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDesc {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a Latin square with identity 0 and associativity.
    pub fn from_table(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::malformed("group table is empty"));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::malformed("group table must be n x n with entries < n"));
        }
        for i in 0..n {
            let mut seen = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut seen[table[i][j]], true) {
                    return Err(Error::malformed(format!("group table row {i} repeats an entry")));
                }
            }
            let mut seen = vec![false; n];
            for row in table {
                if std::mem::replace(&mut seen[row[i]], true) {
                    return Err(Error::malformed(format!("group table column {i} repeats an entry")));
                }
            }
        }
        if (0..n).any(|g| table[0][g] != g || table[g][0] != g) {
            return Err(Error::malformed("element 0 is not the identity"));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::malformed(format!("group table not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let inv = (0..n).map(|g| (0..n).find(|&h| table[g][h] == 0).expect("inverse")).collect();
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(_) => return Err(Error::malformed("label count differs from group order")),
            None => (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("g{i}") }).collect(),
        };
        Ok(FiniteGroup { n, table: table.iter().flatten().copied().collect(), inv, labels })
    }

    pub fn from_desc(d: &GroupDesc) -> Result<FiniteGroup> {
        if d.order != d.table.len() {
            return Err(Error::malformed("group order differs from table size"));
        }
        FiniteGroup::from_table(&d.table, d.labels.clone())
    }

    pub fn desc(&self) -> GroupDesc {
        GroupDesc {
            order: self.n,
            table: (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect(),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// `C_n` with labels `1, g, g^2, ...`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        FiniteGroup::from_table(&table, Some(labels)).expect("cyclic group")
    }

    /// `G x H`, pair `(g, h)` encoded as `g * |H| + h`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (ng, nh) = (g.order(), h.order());
        let n = ng * nh;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh)).collect())
            .collect();
        let labels = (0..n).map(|a| format!("({},{})", g.label(a / nh), h.label(a % nh))).collect();
        FiniteGroup::from_table(&table, Some(labels)).expect("product group")
    }

    pub fn with_labels(mut self, labels: &[&str]) -> FiniteGroup {
        assert_eq!(labels.len(), self.n);
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn show_tuple(&self, t: &[usize]) -> String {
        format!("({})", t.iter().map(|&g| self.label(g)).collect::<Vec<_>>().join(","))
    }

    /// Number of n-tuples, `|G|^n`.
    pub fn tuple_count(&self, n: usize) -> usize {
        self.n.pow(n as u32)
    }

    /// The tuple with mixed-radix code `code`, first entry most significant.
    pub fn tuple(&self, n: usize, mut code: usize) -> Vec<usize> {
        let mut t = vec![0; n];
        for i in (0..n).rev() {
            t[i] = code % self.n;
            code /= self.n;
        }
        t
    }

    pub fn tuple_code(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &g| acc * self.n + g)
    }
}
