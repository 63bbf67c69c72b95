use std::sync::Arc;

use crate::atom::{Atom, Term};
use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::model::Model;
use crate::signature::Signature;

/// A product model together with the position of each generator pair.
#[derive(Clone, Debug)]
pub struct ProductModel {
    /// Atomized by the union of the renamed factors; may carry redundant atoms.
    pub model: Model,
    /// `grid[i][j]` is the constant standing for `(a_i, b_j)`.
    pub grid: Vec<Vec<usize>>,
}

impl ProductModel {
    /// The term for the pair `(x, y)`: the sum of every `(a_i, b_j)` with
    /// `a_i` in `x` and `b_j` in `y`.
    pub fn pair(&self, x: &Term, y: &Term) -> Term {
        let comps: IndexSet = x
            .comps()
            .iter()
            .flat_map(|i| y.comps().iter().map(move |j| self.grid[i][j]))
            .collect();
        Term::new(comps).expect("both factors are non-empty")
    }
}

/// `M ⊗ N` over generators `g_ij` named `a_i:b_j`. Constant sets are always
/// treated as disjoint; with `identify_diagonal`, the generator for a shared
/// constant `(c, c)` is named `c` instead.
pub fn product(m: &Model, n: &Model, identify_diagonal: bool) -> Result<ProductModel> {
    let (ms, ns) = (m.signature(), n.signature());
    let (rows, cols) = (ms.len(), ns.len());
    let mut names = Vec::with_capacity(rows * cols);
    let mut grid = vec![vec![0; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            grid[i][j] = names.len();
            let (a, b) = (ms.name(i), ns.name(j));
            names.push(if identify_diagonal && a == b {
                a.to_string()
            } else {
                format!("{a}:{b}")
            });
        }
    }
    let sig = Arc::new(Signature::from_generated(names).map_err(|e| match e {
        Error::DuplicateConstant(name) => Error::NameCollision(name),
        other => other,
    })?);

    let mut atoms = Vec::with_capacity(m.len() + n.len());
    for a in m.atoms() {
        let upper: IndexSet = a.upper().iter().flat_map(|i| grid[i].iter().copied()).collect();
        atoms.push(Atom::new(upper)?);
    }
    for b in n.atoms() {
        let upper: IndexSet = b.upper().iter().flat_map(|j| grid.iter().map(move |row| row[j])).collect();
        atoms.push(Atom::new(upper)?);
    }
    Ok(ProductModel {
        model: Model::from_covering(sig, atoms),
        grid,
    })
}
