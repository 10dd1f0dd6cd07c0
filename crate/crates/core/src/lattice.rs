//! G-lattices: free Z-modules of finite rank with a G-action by invertible
//! integer matrices, and equivariant maps between them.
//!
//! An action matrix is stored for every group element, not just generators,
//! and the homomorphism law is verified exhaustively at construction. All
//! lattices and maps are immutable.

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::matrix::{
    image_in_kernel_coordinates, kernel_basis, snf, IntMatrix, Matrix, WordMatrix,
};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::sync::Arc;

/// A free Z-module with a G-action.
#[derive(Clone, Debug, PartialEq)]
pub struct GLattice {
    group: Arc<Group>,
    rank: usize,
    action: Vec<WordMatrix>,
    labels: Option<Vec<String>>,
}

impl GLattice {
    /// Builds a lattice, verifying the action table: the identity acts as
    /// the identity matrix and `action(g) * action(h) = action(g * h)` for
    /// every pair. Invertibility over Z follows from the table law.
    pub fn new(
        group: Arc<Group>,
        rank: usize,
        action: Vec<WordMatrix>,
        labels: Option<Vec<String>>,
    ) -> Result<GLattice> {
        let n = group.order();
        if action.len() != n {
            return Err(Error::invalid(format!(
                "action table has {} matrices, group has order {n}",
                action.len()
            )));
        }
        for (g, m) in action.iter().enumerate() {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::invalid(format!(
                    "action matrix of element {g} is {}x{}, expected {rank}x{rank}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if action[group.identity()] != WordMatrix::identity(rank) {
            return Err(Error::invalid("identity element must act as the identity"));
        }
        for g in 0..n {
            for h in 0..n {
                let gh = group.mul(g, h);
                let prod = action[g]
                    .checked_mul_mat(&action[h])
                    .map_err(|_| Error::invalid("action entries overflow machine words"))?;
                if prod != action[gh] {
                    return Err(Error::invalid(format!(
                        "action is not a homomorphism: action({g})*action({h}) != action({gh})"
                    )));
                }
            }
        }
        if let Some(l) = &labels {
            if l.len() != rank {
                return Err(Error::invalid("label count must equal the rank"));
            }
        }
        Ok(GLattice {
            group,
            rank,
            action,
            labels,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self, g: usize) -> &WordMatrix {
        &self.action[g]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The norm matrix `sum_g action(g)`.
    pub fn norm_matrix(&self) -> Result<WordMatrix> {
        let mut acc = WordMatrix::zeros(self.rank, self.rank);
        for m in &self.action {
            acc = acc
                .checked_add_mat(m)
                .map_err(|_| Error::internal("norm matrix overflow"))?;
        }
        Ok(acc)
    }

    /// Restriction to a subgroup: same underlying module, action table
    /// restricted to the subgroup (as a standalone group).
    pub fn restrict(&self, s: &Subgroup) -> GLattice {
        assert!(
            Arc::ptr_eq(s.parent(), &self.group) || s.parent() == &self.group,
            "subgroup of a different group"
        );
        let (sub_group, member_map) = s.as_group();
        let action = member_map
            .iter()
            .map(|&parent_idx| self.action[parent_idx].clone())
            .collect();
        GLattice::new(sub_group, self.rank, action, self.labels.clone())
            .expect("restricted table inherits the homomorphism law")
    }

    /// Serializable dump: rank, labels, generator matrices only.
    pub fn dump(&self) -> LatticeDump {
        LatticeDump {
            rank: self.rank,
            basis_labels: self
                .labels
                .clone()
                .unwrap_or_else(|| (0..self.rank).map(|i| format!("b{i}")).collect()),
            generator_actions: self
                .group
                .generators()
                .iter()
                .map(|(name, idx)| GeneratorAction {
                    generator: name.clone(),
                    matrix: matrix_rows(&self.action[*idx]),
                })
                .collect(),
        }
    }
}

fn matrix_rows(m: &WordMatrix) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row_slice(i).to_vec()).collect()
}

/// JSON form of a lattice: full action tables are omitted for size.
#[derive(Serialize, Debug)]
pub struct LatticeDump {
    pub rank: usize,
    pub basis_labels: Vec<String>,
    pub generator_actions: Vec<GeneratorAction>,
}

#[derive(Serialize, Debug)]
pub struct GeneratorAction {
    pub generator: String,
    pub matrix: Vec<Vec<i64>>,
}

/// A G-equivariant map of lattices, `target.rank x source.rank`.
#[derive(Clone, Debug)]
pub struct LatticeMap {
    pub source: GLattice,
    pub target: GLattice,
    pub matrix: IntMatrix,
}

impl LatticeMap {
    /// Verifies equivariance: `target.action(g) * matrix = matrix *
    /// source.action(g)` for every g.
    pub fn new(source: GLattice, target: GLattice, matrix: IntMatrix) -> Result<LatticeMap> {
        if source.group != target.group {
            return Err(Error::invalid("source and target over different groups"));
        }
        if matrix.rows() != target.rank || matrix.cols() != source.rank {
            return Err(Error::invalid(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.rank,
                source.rank
            )));
        }
        for g in 0..source.group.order() {
            let lhs = target.action[g].to_big().mul_big(&matrix);
            let rhs = matrix.mul_big(&source.action[g].to_big());
            if lhs != rhs {
                return Err(Error::invalid(format!(
                    "map is not equivariant at element {g}"
                )));
            }
        }
        Ok(LatticeMap {
            source,
            target,
            matrix,
        })
    }

    pub fn is_injective(&self) -> bool {
        kernel_basis(&self.matrix).cols() == 0
    }

    pub fn compose(&self, inner: &LatticeMap) -> Result<LatticeMap> {
        LatticeMap::new(
            inner.source.clone(),
            self.target.clone(),
            self.matrix.mul_big(&inner.matrix),
        )
    }
}

/// Rank-1 lattice with the trivial action; the character lattice of the
/// multiplicative group.
pub fn trivial_lattice(group: &Arc<Group>) -> GLattice {
    let action = vec![WordMatrix::identity(1); group.order()];
    GLattice::new(
        Arc::clone(group),
        1,
        action,
        Some(vec!["Z".to_string()]),
    )
    .expect("trivial table is a homomorphism")
}

/// The permutation lattice on the left cosets `G/S`, with 0/1 action
/// matrices. Basis labels name the canonical coset representatives.
pub fn permutation_lattice(group: &Arc<Group>, s: &Subgroup) -> GLattice {
    let cosets = s.cosets();
    let rank = cosets.len();
    let coset_index = |x: usize| -> usize {
        cosets
            .iter()
            .position(|c| c.binary_search(&x).is_ok())
            .expect("cosets partition G")
    };
    let mut action = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let mut m = WordMatrix::zeros(rank, rank);
        for (j, coset) in cosets.iter().enumerate() {
            let i = coset_index(group.mul(g, coset[0]));
            m.set(i, j, 1);
        }
        action.push(m);
    }
    let labels = cosets.iter().map(|c| format!("[{}]", c[0])).collect();
    GLattice::new(Arc::clone(group), rank, action, Some(labels))
        .expect("coset action is a homomorphism")
}

/// The norm map on characters: `Z[G/H+] -> Z[G/H]`, sending a coset of H+
/// to the sum of the H-cosets inside it. Every column has exactly
/// `[H+ : H]` ones.
pub fn fiber_sum_map(group: &Arc<Group>, h: &Subgroup, hplus: &Subgroup) -> Result<LatticeMap> {
    if !h.members().iter().all(|&x| hplus.contains(x)) {
        return Err(Error::invalid("H is not contained in H+"));
    }
    let source = permutation_lattice(group, hplus);
    let target = permutation_lattice(group, h);
    let h_cosets = h.cosets();
    let hp_cosets = hplus.cosets();
    let hp_index = |x: usize| -> usize {
        hp_cosets
            .iter()
            .position(|c| c.binary_search(&x).is_ok())
            .expect("cosets partition G")
    };
    let mut m = IntMatrix::zeros(target.rank, source.rank);
    for (i, hc) in h_cosets.iter().enumerate() {
        let j = hp_index(hc[0]);
        m.set(i, j, 1.into());
    }
    LatticeMap::new(source, target, m)
}

/// The augmentation `Z[G/H] -> Z`, every coset to 1.
pub fn augmentation_map(group: &Arc<Group>, h: &Subgroup) -> LatticeMap {
    let source = permutation_lattice(group, h);
    let target = trivial_lattice(group);
    let m = IntMatrix::from_fn(1, source.rank(), |_, _| 1.into());
    LatticeMap::new(source, target, m).expect("augmentation is equivariant")
}

/// A direct sum with its inclusion and projection maps.
pub struct DirectSum {
    pub parts: Vec<GLattice>,
    pub sum: GLattice,
    offsets: Vec<usize>,
}

/// Block-diagonal direct sum of lattices over the same group.
pub fn direct_sum(parts: &[&GLattice]) -> Result<DirectSum> {
    if parts.is_empty() {
        return Err(Error::invalid("direct sum of no lattices"));
    }
    let group = parts[0].group.clone();
    if !parts.iter().all(|p| p.group == group) {
        return Err(Error::invalid("direct sum over mismatched groups"));
    }
    let rank: usize = parts.iter().map(|p| p.rank).sum();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut off = 0;
    for p in parts {
        offsets.push(off);
        off += p.rank;
    }
    let mut action = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let blocks: Vec<&WordMatrix> = parts.iter().map(|p| &p.action[g]).collect();
        action.push(WordMatrix::block_diag(&blocks));
    }
    let labels = if parts.iter().all(|p| p.labels.is_some()) {
        Some(
            parts
                .iter()
                .flat_map(|p| p.labels.as_ref().unwrap().clone())
                .collect(),
        )
    } else {
        None
    };
    let sum = GLattice::new(group, rank, action, labels)?;
    Ok(DirectSum {
        parts: parts.iter().map(|p| (*p).clone()).collect(),
        sum,
        offsets,
    })
}

impl DirectSum {
    /// The inclusion of part `i` into the sum.
    pub fn inclusion(&self, i: usize) -> LatticeMap {
        let part = &self.parts[i];
        let mut m = IntMatrix::zeros(self.sum.rank, part.rank);
        for j in 0..part.rank {
            m.set(self.offsets[i] + j, j, 1.into());
        }
        LatticeMap::new(part.clone(), self.sum.clone(), m).expect("block inclusion is equivariant")
    }

    /// The projection of the sum onto part `i`.
    pub fn projection(&self, i: usize) -> LatticeMap {
        let part = &self.parts[i];
        let mut m = IntMatrix::zeros(part.rank, self.sum.rank);
        for j in 0..part.rank {
            m.set(j, self.offsets[i] + j, 1.into());
        }
        LatticeMap::new(self.sum.clone(), part.clone(), m).expect("block projection is equivariant")
    }
}

/// Assembles an equivariant map into a direct sum from maps into the parts.
pub fn map_into_sum(sum: &DirectSum, maps: &[&LatticeMap]) -> Result<LatticeMap> {
    if maps.len() != sum.parts.len() {
        return Err(Error::invalid("one map per summand required"));
    }
    if maps.is_empty() {
        return Err(Error::invalid("empty map list"));
    }
    let source = maps[0].source.clone();
    for (i, m) in maps.iter().enumerate() {
        if m.source != source {
            return Err(Error::invalid("maps must share a source"));
        }
        if m.target != sum.parts[i] {
            return Err(Error::invalid(format!("map {i} does not target summand {i}")));
        }
    }
    let blocks: Vec<&IntMatrix> = maps.iter().map(|m| &m.matrix).collect();
    let matrix = IntMatrix::vstack(&blocks);
    LatticeMap::new(source, sum.sum.clone(), matrix)
}

/// A cokernel lattice together with the quotient map.
pub struct Cokernel {
    pub lattice: GLattice,
    pub quotient: LatticeMap,
}

/// The cokernel of an equivariant map, which must be torsion-free (all
/// invariant factors of the map 0 or 1); torsion means the input does not
/// present a torus character lattice and is reported as an error.
///
/// The quotient basis is the canonical complement read off the SNF row
/// transform, so the result is deterministic.
pub fn cokernel_lattice(f: &LatticeMap) -> Result<Cokernel> {
    let n = f.target.rank;
    let snf = snf(&f.matrix);
    if snf.factors().iter().any(|d| !d.is_one()) {
        return Err(Error::invalid(
            "cokernel has torsion: the map does not define a torus character lattice",
        ));
    }
    let r = snf.rank;
    let q_rank = n - r;
    // u * im(f) = span(e_0..e_{r-1}); quotient coordinates are the last
    // q_rank coordinates of u * x.
    let u = &snf.u;
    let uinv = invert_unimodular(u);
    let section = uinv.column_block(r, n);
    let q_matrix = u.row_block(r, n);

    let group = f.target.group.clone();
    let mut action = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let big = u
            .mul_big(&f.target.action[g].to_big())
            .mul_big(&uinv);
        // Stability of im(f) under the action = vanishing lower-left block.
        for i in r..n {
            for j in 0..r {
                if !big.at(i, j).is_zero() {
                    return Err(Error::internal(
                        "image of the map is not action-stable; equivariance should have caught this",
                    ));
                }
            }
        }
        let corner = IntMatrix::from_fn(q_rank, q_rank, |i, j| big.at(r + i, r + j).clone());
        let word = corner
            .to_word()
            .ok_or_else(|| Error::internal("quotient action entries exceed machine words"))?;
        action.push(word);
    }

    let labels = f.target.labels.as_ref().map(|src_labels| {
        (0..q_rank)
            .map(|j| quotient_label(&section, j, src_labels))
            .collect()
    });
    let lattice = GLattice::new(group, q_rank, action, labels)?;
    let quotient = LatticeMap::new(f.target.clone(), lattice.clone(), q_matrix)?;
    // The composite quotient ∘ f must vanish.
    let composite = quotient.matrix.mul_big(&f.matrix);
    if !composite.is_zero() {
        return Err(Error::internal("quotient map does not kill the image"));
    }
    Ok(Cokernel { lattice, quotient })
}

/// Labels a quotient basis vector: when the complement column is plus or
/// minus a standard basis vector, reuse (possibly negate) the source label.
fn quotient_label(section: &IntMatrix, j: usize, src_labels: &[String]) -> String {
    let col = section.column(j);
    let nonzero: Vec<usize> = (0..col.len()).filter(|&i| !col[i].is_zero()).collect();
    if nonzero.len() == 1 && col[nonzero[0]].abs().is_one() {
        let i = nonzero[0];
        if col[i].is_one() {
            src_labels[i].clone()
        } else {
            format!("-{}", src_labels[i])
        }
    } else {
        format!("q{j}")
    }
}

/// Inverts a unimodular integer matrix exactly.
pub fn invert_unimodular(u: &IntMatrix) -> IntMatrix {
    let n = u.rows();
    assert_eq!(n, u.cols());
    let snf = snf(u);
    assert!(
        snf.factors().iter().all(|d| d.is_one()) && snf.rank == n,
        "matrix is not unimodular"
    );
    // u * a * v = I  =>  a^-1 = v * u.
    snf.v.mul_big(&snf.u)
}

/// Solves `f.matrix * x = y` exactly for maps with saturated injective
/// matrix; used to pull vectors back through inclusions.
pub fn solve_exact(m: &IntMatrix, y: &IntMatrix) -> Result<IntMatrix> {
    image_in_kernel_coordinates(y, m)
        .map_err(|e| Error::internal(format!("exact solve failed: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec, DEFAULT_MAX_ORDER};
    use num_bigint::BigInt;

    fn catalog(name: &str) -> Arc<Group> {
        build_group(&GroupSpec::catalog(name), DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn trivial_lattice_basiscs() {
        let g = catalog("S3");
        let t = trivial_lattice(&g);
        assert_eq!(t.rank(), 1);
        for e in 0..g.order() {
            assert_eq!(t.action(e), &WordMatrix::identity(1));
        }
        // Norm element acts as multiplication by |G|.
        let n = t.norm_matrix().unwrap();
        assert_eq!(*n.at(0, 0), g.order() as i64);
        // Invariants sublattice is the whole lattice: (g - 1) acts as zero.
        for e in 0..g.order() {
            let diff = t.action(e).checked_add_mat(&WordMatrix::identity(1).neg());
            assert!(diff.unwrap().is_zero());
        }
    }

    #[test]
    fn permutation_lattice_extremes() {
        let g = catalog("S3");
        let whole = Subgroup::whole(&g);
        let l = permutation_lattice(&g, &whole);
        assert_eq!(l.rank(), 1);
        for e in 0..g.order() {
            assert_eq!(l.action(e), &WordMatrix::identity(1));
        }
        let trivial = Subgroup::trivial(&g);
        let reg = permutation_lattice(&g, &trivial);
        assert_eq!(reg.rank(), g.order());
    }

    #[test]
    fn permutation_lattice_c4_mod_c2() {
        let g = catalog("C4");
        let gen = g.generators()[0].1;
        let g2 = g.mul(gen, gen);
        let s = Subgroup::closure(&g, &[g2]).unwrap();
        let l = permutation_lattice(&g, &s);
        assert_eq!(l.rank(), 2);
        let swap = WordMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(l.action(gen), &swap);
    }

    #[test]
    fn fiber_sum_identity_when_equal() {
        let g = catalog("D8");
        let s = Subgroup::closure(&g, &[g.parse_word("r").unwrap()]).unwrap();
        let f = fiber_sum_map(&g, &s, &s).unwrap();
        assert_eq!(f.matrix, IntMatrix::identity(s.index()));
    }

    #[test]
    fn fiber_sum_c2_from_trivial() {
        let g = catalog("C2");
        let f = fiber_sum_map(&g, &Subgroup::trivial(&g), &Subgroup::whole(&g)).unwrap();
        assert_eq!(f.matrix.rows(), 2);
        assert_eq!(f.matrix.cols(), 1);
        assert_eq!(f.matrix.column(0), vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn fiber_sum_column_sums_and_injectivity() {
        for name in ["D8", "Q8", "C2xC4", "S4"] {
            let g = catalog(name);
            let z = g.central_prime_order_elements()[0].0;
            let h = Subgroup::trivial(&g);
            let hp = Subgroup::closure(&g, &[z]).unwrap();
            let f = fiber_sum_map(&g, &h, &hp).unwrap();
            let expected = hp.order() / h.order();
            for j in 0..f.matrix.cols() {
                let sum: BigInt = f.matrix.column(j).into_iter().sum();
                assert_eq!(sum, BigInt::from(expected));
            }
            assert!(f.is_injective());
        }
    }

    #[test]
    fn fiber_sum_requires_containment() {
        let g = catalog("C2xC2");
        let a = Subgroup::closure(&g, &[g.parse_word("a").unwrap()]).unwrap();
        let b = Subgroup::closure(&g, &[g.parse_word("b").unwrap()]).unwrap();
        assert!(fiber_sum_map(&g, &a, &b).is_err());
    }

    #[test]
    fn direct_sum_ranks_and_projections() {
        let g = catalog("C4");
        let t = trivial_lattice(&g);
        let reg = permutation_lattice(&g, &Subgroup::trivial(&g));
        let ds = direct_sum(&[&t, &reg]).unwrap();
        assert_eq!(ds.sum.rank(), 1 + 4);
        for i in 0..2 {
            let inc = ds.inclusion(i);
            let proj = ds.projection(i);
            let comp = proj.compose(&inc).unwrap();
            assert_eq!(comp.matrix, IntMatrix::identity(ds.parts[i].rank()));
        }
    }

    #[test]
    fn direct_sum_with_rank_zero() {
        let g = catalog("C2");
        let t = trivial_lattice(&g);
        let zero = GLattice::new(
            Arc::clone(&g),
            0,
            vec![WordMatrix::identity(0); g.order()],
            None,
        )
        .unwrap();
        let ds = direct_sum(&[&t, &zero]).unwrap();
        assert_eq!(ds.sum.rank(), 1);
        assert_eq!(ds.sum.action(1), t.action(1));
    }

    #[test]
    fn forged_action_is_rejected() {
        let g = catalog("C4");
        let gen = g.generators()[0].1;
        // rho(g) of order 2 cannot extend to C4's regular-ish table that
        // demands rho(g)^4 = I with rho(g^2) != I.
        let mut action = vec![WordMatrix::identity(2); 4];
        action[gen] = WordMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        let err = GLattice::new(Arc::clone(&g), 2, action, None).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn cokernel_of_identity_is_zero() {
        let g = catalog("C2");
        let t = trivial_lattice(&g);
        let f = LatticeMap::new(t.clone(), t.clone(), IntMatrix::identity(1)).unwrap();
        let c = cokernel_lattice(&f).unwrap();
        assert_eq!(c.lattice.rank(), 0);
    }

    #[test]
    fn cokernel_of_zero_map_is_target() {
        let g = catalog("C2");
        let t = trivial_lattice(&g);
        let zero_src = GLattice::new(
            Arc::clone(&g),
            0,
            vec![WordMatrix::identity(0); g.order()],
            None,
        )
        .unwrap();
        let f = LatticeMap::new(zero_src, t.clone(), IntMatrix::zeros(1, 0)).unwrap();
        let c = cokernel_lattice(&f).unwrap();
        assert_eq!(c.lattice.rank(), 1);
        assert_eq!(c.quotient.matrix, IntMatrix::identity(1));
    }

    #[test]
    fn cokernel_with_torsion_is_refused() {
        let g = catalog("C2");
        let t = trivial_lattice(&g);
        let f = LatticeMap::new(
            t.clone(),
            t.clone(),
            IntMatrix::from_rows(vec![vec![BigInt::from(2)]]),
        )
        .unwrap();
        assert!(cokernel_lattice(&f).is_err());
    }

    #[test]
    fn cokernel_of_norm_inclusion_is_regular_rep() {
        // C2: cokernel of Z -> Z[C2] + Z, 1 -> (N, -1), has rank 2 and the
        // generator acts with trace 0 and torsion-free coinvariants, which
        // pins the regular representation.
        let g = catalog("C2");
        let h = Subgroup::trivial(&g);
        let hp = Subgroup::whole(&g);
        let fs = fiber_sum_map(&g, &h, &hp).unwrap();
        let aug = augmentation_map(&g, &h);
        let ds = direct_sum(&[&fs.target.clone(), &aug.target.clone()]).unwrap();
        let neg_aug = LatticeMap::new(aug.source.clone(), aug.target.clone(), aug.matrix.neg())
            .unwrap();
        let f = map_into_sum(&ds, &[&fs, &neg_aug]).unwrap();
        let c = cokernel_lattice(&f).unwrap();
        assert_eq!(c.lattice.rank(), 2);
        let gen = g.generators()[0].1;
        let m = c.lattice.action(gen);
        let trace = *m.at(0, 0) + *m.at(1, 1);
        assert_eq!(trace, 0);
        let diff = m.to_big().checked_add_mat(&IntMatrix::identity(2).neg()).unwrap();
        let factors = crate::matrix::invariant_factors(&diff);
        assert!(factors.iter().all(|d| d.is_one()), "coinvariants must be torsion-free");
    }

    #[test]
    fn quotient_map_is_surjective_and_kills_image() {
        let g = catalog("C4");
        let h = Subgroup::trivial(&g);
        let z = g.central_prime_order_elements()[0].0;
        let hp = Subgroup::closure(&g, &[z]).unwrap();
        let f = fiber_sum_map(&g, &h, &hp).unwrap();
        let c = cokernel_lattice(&f).unwrap();
        assert!(c.quotient.matrix.mul_big(&f.matrix).is_zero());
        let s = snf(&c.quotient.matrix);
        assert_eq!(s.rank, c.lattice.rank());
        assert!(s.factors().iter().all(|d| d.is_one()));
    }

    #[test]
    fn restrict_examples() {
        let g = catalog("D8");
        let reg = permutation_lattice(&g, &Subgroup::trivial(&g));
        let whole = Subgroup::whole(&g);
        let r = reg.restrict(&whole);
        assert_eq!(r.rank(), reg.rank());
        assert_eq!(r.group().order(), g.order());
        for e in 0..g.order() {
            assert_eq!(r.action(e), reg.action(e));
        }
        let t = reg.restrict(&Subgroup::trivial(&g));
        assert_eq!(t.group().order(), 1);
        assert_eq!(t.rank(), reg.rank());
        assert_eq!(t.action(0), &WordMatrix::identity(reg.rank()));
    }
}
