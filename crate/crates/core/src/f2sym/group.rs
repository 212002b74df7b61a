use std::hash::Hash;

use indexmap::IndexSet;
use rayon::prelude::*;
use rustc_hash::FxBuildHasher;

use super::matrix::{transvection_matrix, SympMatrix};
use super::quad::QuadLabel;
use super::vector::{check_rank, SympVector};
use super::F2Error;

/// The closure of a generator set, enumerated breadth first.
///
/// Elements are kept in insertion order, so enumeration is deterministic and
/// does not depend on the thread count used during the closure.
#[derive(Clone, Debug)]
pub struct GroupCatalog<E> {
    elements: IndexSet<E, FxBuildHasher>,
    generators: Vec<E>,
}

impl<E> GroupCatalog<E>
where
    E: Clone + Eq + Hash + Send + Sync,
{
    /// Closes `{identity}` under `act(i, g) = generators[i] · g`.
    ///
    /// Each BFS level is expanded in parallel; candidates are then merged
    /// sequentially in frontier order.
    pub fn from_action<F>(identity: E, generators: Vec<E>, act: F) -> Self
    where
        F: Fn(usize, &E) -> E + Sync,
    {
        let mut elements: IndexSet<E, FxBuildHasher> = IndexSet::default();
        elements.insert(identity);
        let mut start = 0;
        let n_gens = generators.len();
        while start < elements.len() {
            let end = elements.len();
            let seen = &elements;
            let candidates: Vec<E> = (start..end)
                .into_par_iter()
                .flat_map_iter(|idx| {
                    let g = &seen[idx];
                    (0..n_gens)
                        .map(|i| act(i, g))
                        .filter(|h| !seen.contains(h))
                        .collect::<Vec<_>>()
                })
                .collect();
            for c in candidates {
                elements.insert(c);
            }
            start = end;
        }
        Self {
            elements,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.contains(e)
    }

    /// Position in BFS order, the identity being 0.
    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.elements.get_index_of(e)
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &E> + '_ {
        self.elements.iter()
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }
}

impl GroupCatalog<SympMatrix> {
    /// Canonical row-bit encodings in BFS order.
    pub fn encodings(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().map(SympMatrix::encode)
    }
}

/// The subgroup of `GL(2k, F2)` generated by `generators`.
pub fn generate_group(generators: &[SympMatrix]) -> Result<GroupCatalog<SympMatrix>, F2Error> {
    let first = generators.first().ok_or(F2Error::EmptyGeneratorSet)?;
    let k = first.rank();
    for (i, g) in generators.iter().enumerate() {
        if g.rank() != k {
            return Err(F2Error::RankMismatch(k, g.rank()));
        }
        if !g.is_invertible() {
            return Err(F2Error::NotInvertible(i));
        }
    }
    let gens = generators.to_vec();
    let identity = SympMatrix::identity(k)?;
    Ok(GroupCatalog::from_action(identity, gens.clone(), |i, g| {
        gens[i].mul(g)
    }))
}

/// All `4^k - 1` nonzero transvections of `V_k`; they generate `Sp(2k, F2)`.
pub fn symplectic_generators(k: u8) -> Result<Vec<SympMatrix>, F2Error> {
    Ok(SympVector::nonzero(k)?.map(transvection_matrix).collect())
}

/// Order of `O(q)`, the closure of the transvections `t_v` with `q(v) = 1`.
pub fn orthogonal_group_order(q: QuadLabel) -> Result<usize, F2Error> {
    let k = q.rank();
    check_rank(k)?;
    if k > 3 {
        return Err(F2Error::InvalidRank(k));
    }
    let gens: Vec<SympMatrix> = SympVector::nonzero(k)?
        .filter(|&v| q.eval(v) == 1)
        .map(transvection_matrix)
        .collect();
    Ok(generate_group(&gens)?.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2sym::Parity;

    fn v(s: &str) -> SympVector {
        s.parse().unwrap()
    }

    #[test]
    fn symplectic_orders_small() {
        assert_eq!(
            generate_group(&symplectic_generators(1).unwrap())
                .unwrap()
                .order(),
            6
        );
        assert_eq!(
            generate_group(&symplectic_generators(2).unwrap())
                .unwrap()
                .order(),
            720
        );
    }

    #[test]
    fn closed_under_product_and_inverse() {
        let g = generate_group(&symplectic_generators(2).unwrap()).unwrap();
        let elems: Vec<_> = g.elements().copied().collect();
        assert!(elems[0].is_identity());
        for a in elems.iter().step_by(7) {
            assert!(a.is_symplectic());
            assert!(g.contains(&a.inverse().unwrap()));
            for b in elems.iter().step_by(13) {
                assert!(g.contains(&a.mul(b)));
            }
        }
        let enc: std::collections::HashSet<u64> = g.encodings().collect();
        assert_eq!(enc.len(), 720);
    }

    #[test]
    fn generator_order_does_not_change_the_set() {
        let mut gens = symplectic_generators(2).unwrap();
        let a = generate_group(&gens).unwrap();
        gens.reverse();
        let b = generate_group(&gens).unwrap();
        assert_eq!(a.order(), b.order());
        assert!(a.elements().all(|e| b.contains(e)));
    }

    #[test]
    fn deterministic_enumeration() {
        let gens = symplectic_generators(2).unwrap();
        let a: Vec<u64> = generate_group(&gens).unwrap().encodings().collect();
        let b: Vec<u64> = generate_group(&gens).unwrap().encodings().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn errors() {
        assert_eq!(generate_group(&[]).unwrap_err(), F2Error::EmptyGeneratorSet);
        let sing = SympMatrix::from_rows(1, &[0b11, 0b11]).unwrap();
        assert_eq!(
            generate_group(&[sing]).unwrap_err(),
            F2Error::NotInvertible(0)
        );
        let mixed = [
            transvection_matrix(v("1:0")),
            transvection_matrix(v("10:00")),
        ];
        assert!(matches!(
            generate_group(&mixed),
            Err(F2Error::RankMismatch(1, 2))
        ));
    }

    #[test]
    fn small_orthogonal_groups() {
        // |Sp(4)| = 6 * |O(q_odd)|
        let odd: QuadLabel = "A[11:10]".parse().unwrap();
        assert_eq!(orthogonal_group_order(odd).unwrap(), 120);
        let even: QuadLabel = "Q[00:00]".parse().unwrap();
        // O+(4, 2) has order 72 but is the one case where transvections only
        // generate an index-two subgroup
        assert_eq!(orthogonal_group_order(even).unwrap(), 36);
        for (q, _) in crate::f2sym::enumerate_quad_forms(2, Parity::Odd).unwrap() {
            assert_eq!(orthogonal_group_order(q).unwrap(), 120);
        }
    }

    /// The five k=2 labels forming an A5 chain generate all of Sp(4) and its 15
    /// transvections.
    #[test]
    fn a5_chain_generates_sp4() {
        let labels = ["00:10", "10:10", "01:11", "00:01", "01:01"].map(v);
        for i in 0..5usize {
            for j in 0..5 {
                let adjacent = i.abs_diff(j) == 1;
                assert_eq!(labels[i].pairing(labels[j]) == 1, adjacent, "{i} {j}");
            }
        }
        let gens: Vec<_> = labels.iter().map(|&l| transvection_matrix(l)).collect();
        let g = generate_group(&gens).unwrap();
        assert_eq!(g.order(), 720);
        let transvections = SympVector::nonzero(2)
            .unwrap()
            .filter(|&u| g.contains(&transvection_matrix(u)))
            .count();
        assert_eq!(transvections, 15);
        // involutions with a 3-dimensional fixed space are exactly the transvections
        let fixed_dim3 = g
            .elements()
            .filter(|m| !m.is_identity() && m.mul(m).is_identity())
            .filter(|m| {
                SympVector::all(2)
                    .unwrap()
                    .filter(|&u| m.apply(u) == u)
                    .count()
                    == 8
            })
            .count();
        assert_eq!(fixed_dim3, 15);
    }
}
