//! Finite permutation groups with a dense multiplication table, subgroup
//! machinery, coset enumeration, abelianizations, and the transfer map.
//!
//! Groups are immutable after construction. Elements are canonically ordered
//! by their image tuples, so the identity always has index 0 and all derived
//! data (cosets, subgroup lists, transfer values) is byte-stable across runs.

use crate::error::{Error, Result};
use crate::matrix::{quotient_presentation, snf, AbelianPresentation, IntMatrix, Matrix};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

/// Default cap on group order; closures beyond this are refused.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// A permutation of `{0, .., degree-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    fn validate(images: &[usize], degree: usize) -> Result<Perm> {
        if images.len() != degree {
            return Err(Error::invalid(format!(
                "permutation has {} images but degree is {degree}",
                images.len()
            )));
        }
        let mut seen = vec![false; degree];
        for &x in images {
            if x >= degree {
                return Err(Error::invalid(format!(
                    "image {x} out of range for degree {degree}"
                )));
            }
            if seen[x] {
                return Err(Error::invalid(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Perm(images.iter().map(|&x| x as u8).collect()))
    }
}

/// How a group was specified; echoed into reports.
///
/// JSON: `{"catalog": {"name": "D8"}}` or
/// `{"permutations": {"degree": 3, "generators": [[1,2,0]]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    Catalog {
        name: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        params: Vec<u32>,
    },
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn catalog(name: &str) -> Self {
        GroupSpec::Catalog {
            name: name.to_string(),
            params: Vec::new(),
        }
    }
}

/// A finite permutation group with full multiplication structure.
#[derive(Debug)]
pub struct Group {
    degree: usize,
    elems: Vec<Perm>,
    /// `mult[i * n + j]` = index of `elems[i] * elems[j]`.
    mult: Vec<u16>,
    inv: Vec<u16>,
    /// `(name, element index)` per declared generator.
    gens: Vec<(String, usize)>,
    source: GroupSpec,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elems == other.elems
    }
}
impl Eq for Group {}

impl Group {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elems
    }

    pub fn perm(&self, i: usize) -> &Perm {
        &self.elems[i]
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.elems.len() + j] as usize
    }

    #[inline]
    pub fn inverse(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.gens
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.gens.iter().map(|(_, i)| *i).collect()
    }

    pub fn source(&self) -> &GroupSpec {
        &self.source
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, i);
            n += 1;
        }
        n
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g^-1 * x * g
        self.mul(self.mul(self.inverse(g), x), g)
    }

    pub fn is_central(&self, i: usize) -> bool {
        self.gens
            .iter()
            .all(|&(_, g)| self.mul(i, g) == self.mul(g, i))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.is_central(i)).collect()
    }

    /// Central elements of prime order, with the prime.
    pub fn central_prime_order_elements(&self) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for i in 1..self.order() {
            if !self.is_central(i) {
                continue;
            }
            let n = self.element_order(i);
            if is_prime(n as u32) {
                out.push((i, n as u32));
            }
        }
        out
    }

    /// Index of the element with the given image array, if present.
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elems.binary_search(p).ok()
    }

    /// Parses a generator word such as `g^2`, `a*b`, `r*s^-1`, or `1`.
    pub fn parse_word(&self, word: &str) -> Result<usize> {
        let word = word.trim();
        if word.is_empty() {
            return Err(Error::invalid("empty element word"));
        }
        let mut acc = self.identity();
        for factor in word.split('*') {
            let factor = factor.trim();
            if factor == "1" || factor == "e" {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::invalid(format!("bad exponent in '{factor}'")))?;
                    (n.trim(), exp)
                }
                None => (factor, 1),
            };
            let &(_, idx) = self
                .gens
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::invalid(format!("unknown generator '{name}'")))?;
            let base = if exp < 0 { self.inverse(idx) } else { idx };
            for _ in 0..exp.unsigned_abs() {
                acc = self.mul(acc, base);
            }
        }
        Ok(acc)
    }

    /// Left cosets of the member set, each sorted ascending, listed by
    /// minimal element. The minimal element is the canonical representative.
    pub fn left_cosets(&self, members: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut cosets = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = members.iter().map(|&s| self.mul(g, s)).collect();
            coset.sort_unstable();
            for &x in &coset {
                seen[x] = true;
            }
            cosets.push(coset);
        }
        cosets
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds a group from a specification, refusing closures beyond
/// `max_order`.
pub fn build_group(spec: &GroupSpec, max_order: usize) -> Result<Arc<Group>> {
    let (degree, gens): (usize, Vec<(String, Perm)>) = match spec {
        GroupSpec::Catalog { name, params } => catalog_generators(name, params)?,
        GroupSpec::Permutations { degree, generators } => {
            if *degree == 0 || *degree > 255 {
                return Err(Error::invalid("degree must be in 1..=255"));
            }
            let gens = generators
                .iter()
                .enumerate()
                .map(|(i, images)| Ok((format!("x{}", i + 1), Perm::validate(images, *degree)?)))
                .collect::<Result<Vec<_>>>()?;
            (*degree, gens)
        }
    };
    close_group(degree, gens, spec.clone(), max_order)
}

fn close_group(
    degree: usize,
    gens: Vec<(String, Perm)>,
    source: GroupSpec,
    max_order: usize,
) -> Result<Arc<Group>> {
    let mut set: BTreeSet<Perm> = BTreeSet::new();
    set.insert(Perm::identity(degree));
    let mut queue: VecDeque<Perm> = set.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for (_, g) in &gens {
            let y = x.compose(g);
            if set.insert(y.clone()) {
                if set.len() > max_order {
                    return Err(Error::resource(format!(
                        "group closure exceeds the configured maximum order {max_order}"
                    )));
                }
                queue.push_back(y);
            }
        }
    }
    let elems: Vec<Perm> = set.into_iter().collect();
    let n = elems.len();
    debug_assert!(elems[0].is_identity());
    let find = |p: &Perm| elems.binary_search(p).expect("closed set");
    let mut mult = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            mult[i * n + j] = find(&elems[i].compose(&elems[j])) as u16;
        }
    }
    let mut inv = vec![0u16; n];
    for i in 0..n {
        inv[i] = find(&elems[i].inverse()) as u16;
    }
    let gens = gens
        .into_iter()
        .map(|(name, p)| (name, find(&p)))
        .collect();
    Ok(Arc::new(Group {
        degree,
        elems,
        mult,
        inv,
        gens,
        source,
    }))
}

/// Catalog grammar: `C<n>`, `D<order>` (dihedral, named by order),
/// `Q8`, `S<n>` (n <= 4), `E<2^k>` (elementary abelian), and `x`-joined
/// products such as `C2xC4`. Long form: a constructor name plus params,
/// e.g. `{"name": "dihedral", "params": [8]}`.
fn catalog_generators(name: &str, params: &[u32]) -> Result<(usize, Vec<(String, Perm)>)> {
    if !params.is_empty() {
        let n = params[0] as usize;
        return match name {
            "cyclic" => atom_generators(&format!("C{n}")),
            "dihedral" => atom_generators(&format!("D{n}")),
            "quaternion" => atom_generators(&format!("Q{n}")),
            "symmetric" => atom_generators(&format!("S{n}")),
            "elementary_abelian" => atom_generators(&format!("E{n}")),
            _ => Err(Error::invalid(format!("unknown catalog constructor '{name}'"))),
        };
    }
    let factors: Vec<&str> = name.split('x').collect();
    if factors.len() == 1 {
        return atom_generators(factors[0]);
    }
    // Direct product on disjoint points; generators renamed a, b, c, ...
    let mut degree = 0;
    let mut parts = Vec::new();
    for f in &factors {
        let (d, gens) = atom_generators(f)?;
        parts.push((degree, d, gens));
        degree += d;
    }
    let mut gens = Vec::new();
    for (offset, _d, part_gens) in &parts {
        for (_, p) in part_gens {
            let mut images: Vec<u8> = (0..degree as u8).collect();
            for (x, &y) in p.0.iter().enumerate() {
                images[offset + x] = (offset + y as usize) as u8;
            }
            let name = product_gen_name(gens.len());
            gens.push((name, Perm(images)));
        }
    }
    Ok((degree, gens))
}

fn product_gen_name(i: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if i < LETTERS.len() {
        (LETTERS[i] as char).to_string()
    } else {
        format!("g{}", i + 1)
    }
}

fn atom_generators(atom: &str) -> Result<(usize, Vec<(String, Perm)>)> {
    let atom = atom.trim();
    let bad = || Error::invalid(format!("unknown catalog group '{atom}'"));
    if atom.len() < 2 {
        return Err(bad());
    }
    let (kind, num) = atom.split_at(1);
    let n: usize = num.parse().map_err(|_| bad())?;
    match kind {
        "C" => {
            if n < 1 || n > 255 {
                return Err(bad());
            }
            if n == 1 {
                return Ok((1, Vec::new()));
            }
            let rot = Perm((0..n).map(|x| ((x + 1) % n) as u8).collect());
            Ok((n, vec![("g".to_string(), rot)]))
        }
        "D" => {
            // Named by order; order 2n acting on an n-gon.
            if n % 2 != 0 || n < 4 {
                return Err(Error::invalid(format!(
                    "dihedral groups are named by their (even, >= 4) order; got '{atom}'"
                )));
            }
            let half = n / 2;
            if half == 2 {
                // Klein four as <(0 1), (2 3)>.
                let r = Perm(vec![1, 0, 2, 3]);
                let s = Perm(vec![0, 1, 3, 2]);
                return Ok((4, vec![("r".to_string(), r), ("s".to_string(), s)]));
            }
            let r = Perm((0..half).map(|x| ((x + 1) % half) as u8).collect());
            let s = Perm((0..half).map(|x| ((half - x) % half) as u8).collect());
            Ok((half, vec![("r".to_string(), r), ("s".to_string(), s)]))
        }
        "Q" => {
            if n != 8 {
                return Err(bad());
            }
            // Left-regular representation on {1, i, j, k, -1, -i, -j, -k}.
            let table = quaternion_table();
            let perm_of = |g: usize| Perm((0..8).map(|x| table[g][x] as u8).collect());
            Ok((
                8,
                vec![("i".to_string(), perm_of(1)), ("j".to_string(), perm_of(2))],
            ))
        }
        "S" => {
            if n < 1 || n > 4 {
                return Err(Error::invalid(
                    "symmetric groups are supported for n in 1..=4",
                ));
            }
            if n == 1 {
                return Ok((1, Vec::new()));
            }
            let mut gens = Vec::new();
            for i in 0..n - 1 {
                let mut images: Vec<u8> = (0..n as u8).collect();
                images.swap(i, i + 1);
                gens.push((format!("s{}", i + 1), Perm(images)));
            }
            Ok((n, gens))
        }
        "E" => {
            if n < 2 || !n.is_power_of_two() {
                return Err(Error::invalid(
                    "elementary abelian groups are named by a power-of-two order",
                ));
            }
            let k = n.trailing_zeros() as usize;
            let degree = 2 * k;
            let mut gens = Vec::new();
            for i in 0..k {
                let mut images: Vec<u8> = (0..degree as u8).collect();
                images.swap(2 * i, 2 * i + 1);
                gens.push((product_gen_name(i), Perm(images)));
            }
            Ok((degree, gens))
        }
        _ => Err(bad()),
    }
}

/// Multiplication table of the quaternion group on
/// 0:1, 1:i, 2:j, 3:k, 4:-1, 5:-i, 6:-j, 7:-k.
fn quaternion_table() -> [[usize; 8]; 8] {
    // Base units: i*i = -1, i*j = k, j*i = -k, etc.
    let unit = [
        [0, 1, 2, 3],  // 1 * x
        [1, 4, 3, 6],  // i * (1,i,j,k) = (i,-1,k,-j)
        [2, 7, 4, 1],  // j * (1,i,j,k) = (j,-k,-1,i)
        [3, 2, 5, 4],  // k * (1,i,j,k) = (k,j,-i,-1)
    ];
    let mut t = [[0usize; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (ua, sa) = (a % 4, a / 4);
            let (ub, sb) = (b % 4, b / 4);
            let prod = unit[ua][ub];
            let sign = (sa + sb + prod / 4) % 2;
            t[a][b] = (prod % 4) + 4 * sign;
        }
    }
    t
}

/// Names every catalog constructor for the CLI `catalog` command.
pub fn catalog_listing() -> Vec<(&'static str, &'static str)> {
    vec![
        ("C<n>", "cyclic group of order n (generator: g)"),
        (
            "D<order>",
            "dihedral group named by its even order >= 4 (generators: r, s)",
        ),
        ("Q8", "quaternion group of order 8 (generators: i, j)"),
        ("S<n>", "symmetric group on n <= 4 points (generators: s1, ..)"),
        (
            "E<2^k>",
            "elementary abelian 2-group named by its order (generators: a, b, ..)",
        ),
        (
            "AxB",
            "direct product of catalog entries, e.g. C2xC4 (generators renamed a, b, ..)",
        ),
    ]
}

/// A subgroup, stored as sorted member indices into the parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<Group>,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl Subgroup {
    /// Smallest subgroup containing `gens`.
    pub fn closure(parent: &Arc<Group>, gens: &[usize]) -> Result<Subgroup> {
        let n = parent.order();
        for &g in gens {
            if g >= n {
                return Err(Error::invalid(format!("element index {g} out of range")));
            }
        }
        let mut members = BTreeSet::new();
        members.insert(parent.identity());
        let mut queue: VecDeque<usize> = vec![parent.identity()].into();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = parent.mul(x, g);
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Ok(Subgroup {
            parent: Arc::clone(parent),
            members: members.into_iter().collect(),
            gens: gens.to_vec(),
        })
    }

    pub fn whole(parent: &Arc<Group>) -> Subgroup {
        Subgroup {
            parent: Arc::clone(parent),
            members: (0..parent.order()).collect(),
            gens: parent.generator_indices(),
        }
    }

    pub fn trivial(parent: &Arc<Group>) -> Subgroup {
        Subgroup {
            parent: Arc::clone(parent),
            members: vec![parent.identity()],
            gens: Vec::new(),
        }
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        (0..self.parent.order()).all(|g| {
            self.members
                .iter()
                .all(|&s| self.contains(self.parent.conjugate(g, s)))
        })
    }

    /// `g^-1 S g` as a subgroup.
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut members: Vec<usize> = self
            .members
            .iter()
            .map(|&s| self.parent.conjugate(g, s))
            .collect();
        members.sort_unstable();
        let gens = self
            .gens
            .iter()
            .map(|&s| self.parent.conjugate(g, s))
            .collect();
        Subgroup {
            parent: Arc::clone(&self.parent),
            members,
            gens,
        }
    }

    pub fn is_conjugate_to(&self, other: &Subgroup) -> bool {
        if self.order() != other.order() {
            return false;
        }
        (0..self.parent.order()).any(|g| self.conjugate_by(g).members == other.members)
    }

    /// The subgroup extended by one element, closed.
    pub fn extend(&self, g: usize) -> Result<Subgroup> {
        let mut gens = self.members.clone();
        gens.push(g);
        Subgroup::closure(&self.parent, &gens)
    }

    /// Left cosets in the parent, canonical order.
    pub fn cosets(&self) -> Vec<Vec<usize>> {
        self.parent.left_cosets(&self.members)
    }

    /// The subgroup as a standalone group, plus the map from new element
    /// indices to parent element indices. Parent ordering is inherited, so
    /// the map is just the member list.
    pub fn as_group(&self) -> (Arc<Group>, Vec<usize>) {
        let elems: Vec<Perm> = self
            .members
            .iter()
            .map(|&i| self.parent.perm(i).clone())
            .collect();
        let gens: Vec<(String, Perm)> = self
            .gens
            .iter()
            .enumerate()
            .map(|(k, &i)| (format!("h{}", k + 1), self.parent.perm(i).clone()))
            .collect();
        let spec = GroupSpec::Permutations {
            degree: self.parent.degree(),
            generators: gens
                .iter()
                .map(|(_, p)| p.0.iter().map(|&x| x as usize).collect())
                .collect(),
        };
        let group = close_group(self.parent.degree(), gens, spec, self.parent.order())
            .expect("subgroup closure cannot exceed the parent order");
        debug_assert_eq!(group.order(), self.order());
        debug_assert_eq!(
            group.elements(),
            elems.as_slice(),
            "subgroup elements must inherit the canonical order"
        );
        (group, self.members.clone())
    }
}

/// A central element of prime order, the datum `(iota, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralDatum {
    pub iota: usize,
    pub p: u32,
}

impl CentralDatum {
    pub fn validate(group: &Group, iota: usize, p: u32) -> Result<CentralDatum> {
        if iota >= group.order() {
            return Err(Error::invalid(format!("iota index {iota} out of range")));
        }
        if !is_prime(p) {
            return Err(Error::invalid(format!("p = {p} is not prime")));
        }
        if group.element_order(iota) != p as usize {
            return Err(Error::invalid(format!(
                "iota has order {}, expected exact order {p}",
                group.element_order(iota)
            )));
        }
        if !group.is_central(iota) {
            return Err(Error::invalid("iota is not central"));
        }
        Ok(CentralDatum { iota, p })
    }
}

/// One representative per conjugacy class of cyclic subgroups, including
/// the trivial subgroup, sorted by order then by minimal generator index.
pub fn cyclic_subgroup_classes(group: &Arc<Group>) -> Vec<Subgroup> {
    let mut distinct: BTreeMap<Vec<usize>, Subgroup> = BTreeMap::new();
    for g in 0..group.order() {
        let s = Subgroup::closure(group, &[g]).expect("index in range");
        distinct.entry(s.members.clone()).or_insert(s);
    }
    dedupe_by_conjugacy(distinct.into_values().collect())
}

/// One representative per conjugacy class of all subgroups.
pub fn subgroup_classes(group: &Arc<Group>) -> Vec<Subgroup> {
    let mut known: BTreeMap<Vec<usize>, Subgroup> = BTreeMap::new();
    for g in 0..group.order() {
        let s = Subgroup::closure(group, &[g]).expect("index in range");
        known.entry(s.members.clone()).or_insert(s);
    }
    let mut frontier: Vec<Subgroup> = known.values().cloned().collect();
    while let Some(s) = frontier.pop() {
        for g in 0..group.order() {
            if s.contains(g) {
                continue;
            }
            let bigger = s.extend(g).expect("index in range");
            if !known.contains_key(&bigger.members) {
                known.insert(bigger.members.clone(), bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    dedupe_by_conjugacy(known.into_values().collect())
}

fn dedupe_by_conjugacy(mut subgroups: Vec<Subgroup>) -> Vec<Subgroup> {
    subgroups.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    let mut reps: Vec<Subgroup> = Vec::new();
    for s in subgroups {
        if !reps.iter().any(|r| r.is_conjugate_to(&s)) {
            reps.push(s);
        }
    }
    reps.sort_by_key(|s| (s.order(), minimal_generator_index(s)));
    reps
}

fn minimal_generator_index(s: &Subgroup) -> usize {
    // Smallest element generating the subgroup, if cyclic; otherwise the
    // smallest nonidentity member (0 for the trivial subgroup).
    let parent = &s.parent;
    for &g in &s.members {
        let gen = Subgroup::closure(parent, &[g]).expect("in range");
        if gen.members == s.members {
            return g;
        }
    }
    s.members.iter().copied().find(|&g| g != 0).unwrap_or(0)
}

/// The abelianization `S / [S, S]` with its invariant factors and the
/// coordinate map sending each member of `S` to its class.
pub struct Abelianization {
    pub presentation: AbelianPresentation,
    /// Parent element index -> coordinates modulo the invariant factors.
    coords: BTreeMap<usize, Vec<BigInt>>,
}

impl Abelianization {
    pub fn class_of(&self, parent_elem: usize) -> &[BigInt] {
        &self.coords[&parent_elem]
    }

    pub fn identity_class(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.presentation.torsion.len()]
    }

    pub fn add_classes(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.presentation
            .torsion
            .iter()
            .zip(a.iter().zip(b))
            .map(|(d, (x, y))| (x + y).mod_floor(d))
            .collect()
    }
}

use num_integer::Integer as _;

/// Computes `S / [S, S]` by presenting the quotient group through its full
/// multiplication table and reading invariant factors off the SNF.
pub fn abelianization(s: &Subgroup) -> Abelianization {
    let parent = s.parent();
    // Commutator subgroup of S.
    let mut comm_gens = Vec::new();
    for &a in &s.members {
        for &b in &s.members {
            let c = parent.mul(
                parent.mul(parent.inverse(a), parent.inverse(b)),
                parent.mul(a, b),
            );
            comm_gens.push(c);
        }
    }
    let commutator = Subgroup::closure(parent, &comm_gens).expect("members in range");

    // Cosets of [S,S] inside S = elements of the quotient Q.
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for &g in &s.members {
        if seen.contains(&g) {
            continue;
        }
        let mut coset: Vec<usize> = commutator.members.iter().map(|&c| parent.mul(g, c)).collect();
        coset.sort_unstable();
        for &x in &coset {
            seen.insert(x);
        }
        cosets.push(coset);
    }
    cosets.sort();
    let t = cosets.len();
    let coset_of = |g: usize| -> usize {
        cosets
            .iter()
            .position(|c| c.binary_search(&g).is_ok())
            .expect("member of S")
    };

    // Present Q on one generator per element: relations e_x + e_y - e_{xy},
    // plus e_identity.
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    let mut rel = vec![BigInt::zero(); t];
    rel[coset_of(parent.identity())] = BigInt::one();
    relations.push(rel);
    for x in 0..t {
        for y in 0..t {
            let xy = coset_of(parent.mul(cosets[x][0], cosets[y][0]));
            let mut rel = vec![BigInt::zero(); t];
            rel[x] += 1;
            rel[y] += 1;
            rel[xy] -= 1;
            relations.push(rel);
        }
    }
    // Columns = relations; Q = Z^t / colspan.
    let rel_matrix = Matrix::from_rows(relations).transpose();
    let snf = snf(&rel_matrix);
    assert_eq!(snf.rank, t, "quotient of a finite group must be finite");
    let presentation = quotient_presentation(t, &rel_matrix);
    let kept: Vec<usize> = (0..snf.rank)
        .filter(|&i| !snf.s.at(i, i).is_one())
        .collect();
    debug_assert_eq!(kept.len(), presentation.torsion.len());

    let mut coords = BTreeMap::new();
    for &g in &s.members {
        let x = coset_of(g);
        let class: Vec<BigInt> = kept
            .iter()
            .map(|&row| snf.u.at(row, x).mod_floor(snf.s.at(row, row)))
            .collect();
        coords.insert(g, class);
    }
    Abelianization {
        presentation,
        coords,
    }
}

/// The transfer (Verlagerung) `Ver_{G -> S}(g)` as a class in the
/// abelianization of `S`, computed in the orbit form: decompose `G/S` into
/// `<g>`-orbits, each orbit with minimal-index representative coset `rS`
/// contributing `r^-1 g^|orbit| r`.
pub fn transfer(s: &Subgroup, g: usize, ab: &Abelianization) -> Vec<BigInt> {
    let parent = s.parent();
    let cosets = s.cosets();
    let coset_index = |x: usize| -> usize {
        cosets
            .iter()
            .position(|c| c.binary_search(&x).is_ok())
            .expect("cosets partition G")
    };
    let mut acc = parent.identity();
    let mut visited = vec![false; cosets.len()];
    for start in 0..cosets.len() {
        if visited[start] {
            continue;
        }
        // <g>-orbit of the coset under left multiplication.
        let mut orbit_len = 0;
        let mut c = start;
        loop {
            visited[c] = true;
            orbit_len += 1;
            c = coset_index(parent.mul(g, cosets[c][0]));
            if c == start {
                break;
            }
        }
        let r = cosets[start][0];
        let mut gp = parent.identity();
        for _ in 0..orbit_len {
            gp = parent.mul(gp, g);
        }
        let contrib = parent.mul(parent.mul(parent.inverse(r), gp), r);
        debug_assert!(s.contains(contrib), "orbit contribution must land in S");
        acc = parent.mul(acc, contrib);
    }
    ab.class_of(acc).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog(name: &str) -> Arc<Group> {
        build_group(&GroupSpec::catalog(name), DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn cyclic_4() {
        let g = catalog("C4");
        assert_eq!(g.order(), 4);
        assert_eq!(g.generators().len(), 1);
        assert_eq!(g.element_order(g.generators()[0].1), 4);
    }

    #[test]
    fn quaternion_group() {
        let q = catalog("Q8");
        assert_eq!(q.order(), 8);
        assert_eq!(q.center().len(), 2);
        let i = q.parse_word("i").unwrap();
        let j = q.parse_word("j").unwrap();
        assert_eq!(q.element_order(i), 4);
        // i^2 = j^2 is the central involution
        assert_eq!(q.mul(i, i), q.mul(j, j));
        assert_eq!(q.element_order(q.mul(i, i)), 2);
        // i^2 = (i*j)^2 too: -1 = k^2
        let k = q.mul(i, j);
        assert_eq!(q.mul(k, k), q.mul(i, i));
    }

    #[test]
    fn dihedral_8_order_census() {
        let d = catalog("D8");
        assert_eq!(d.order(), 8);
        let count4 = (0..8).filter(|&x| d.element_order(x) == 4).count();
        assert_eq!(count4, 2);
    }

    #[test]
    fn dihedral_4_is_klein() {
        let d = catalog("D4");
        assert_eq!(d.order(), 4);
        assert!((0..4).all(|x| d.element_order(x) <= 2));
    }

    #[test]
    fn group_table_is_associative_with_inverses() {
        for name in ["C6", "D8", "Q8", "S4", "E8", "C2xC4"] {
            let g = catalog(name);
            let n = g.order();
            for a in 0..n {
                assert_eq!(g.mul(a, g.inverse(a)), 0);
                assert_eq!(g.mul(g.inverse(a), a), 0);
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn closure_cap_is_enforced() {
        let err = build_group(&GroupSpec::catalog("C12xC12"), 64).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn bad_permutation_is_rejected() {
        let spec = GroupSpec::Permutations {
            degree: 3,
            generators: vec![vec![0, 0, 1]],
        };
        assert!(matches!(
            build_group(&spec, 64),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn subgroup_closure_examples() {
        let c4 = catalog("C4");
        let trivial = Subgroup::closure(&c4, &[]).unwrap();
        assert_eq!(trivial.members(), &[0]);
        let g = c4.generators()[0].1;
        let g2 = c4.mul(g, g);
        let half = Subgroup::closure(&c4, &[g2]).unwrap();
        assert_eq!(half.order(), 2);

        let q8 = catalog("Q8");
        let i = q8.parse_word("i").unwrap();
        let sub = Subgroup::closure(&q8, &[i]).unwrap();
        assert_eq!(sub.order(), 4);
    }

    #[test]
    fn cyclic_classes_c4_q8_s3() {
        let c4 = catalog("C4");
        let classes = cyclic_subgroup_classes(&c4);
        assert_eq!(
            classes.iter().map(|s| s.order()).collect::<Vec<_>>(),
            vec![1, 2, 4]
        );

        let q8 = catalog("Q8");
        let classes = cyclic_subgroup_classes(&q8);
        assert_eq!(
            classes.iter().map(|s| s.order()).collect::<Vec<_>>(),
            vec![1, 2, 4, 4, 4]
        );

        let s3 = catalog("S3");
        let classes = cyclic_subgroup_classes(&s3);
        assert_eq!(
            classes.iter().map(|s| s.order()).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn all_subgroup_classes_of_s3() {
        let s3 = catalog("S3");
        let classes = subgroup_classes(&s3);
        assert_eq!(
            classes.iter().map(|s| s.order()).collect::<Vec<_>>(),
            vec![1, 2, 3, 6]
        );
    }

    #[test]
    fn abelianization_examples() {
        for n in 2..=6 {
            let g = catalog(&format!("C{n}"));
            let whole = Subgroup::whole(&g);
            let ab = abelianization(&whole);
            assert_eq!(ab.presentation.torsion, vec![BigInt::from(n)]);
        }
        let q8 = catalog("Q8");
        let ab = abelianization(&Subgroup::whole(&q8));
        assert_eq!(ab.presentation.torsion, vec![BigInt::from(2), BigInt::from(2)]);

        let s3 = catalog("S3");
        let ab = abelianization(&Subgroup::whole(&s3));
        assert_eq!(ab.presentation.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn transfer_of_identity_is_trivial() {
        let d8 = catalog("D8");
        for sub in cyclic_subgroup_classes(&d8) {
            let ab = abelianization(&sub);
            assert_eq!(transfer(&sub, 0, &ab), ab.identity_class());
        }
    }

    #[test]
    fn transfer_klein_example() {
        // G = C2 x C2 = <a, b>, S = <a>: Ver(b) = b^2 = 1.
        let g = catalog("C2xC2");
        let a = g.parse_word("a").unwrap();
        let b = g.parse_word("b").unwrap();
        let s = Subgroup::closure(&g, &[a]).unwrap();
        let ab = abelianization(&s);
        assert_eq!(transfer(&s, b, &ab), ab.identity_class());
        // and Ver(a) = a^2 = 1 as well
        assert_eq!(transfer(&s, a, &ab), ab.identity_class());
    }

    #[test]
    fn transfer_abelian_power_law_spot() {
        // For abelian G, Ver_{G->S}(g) = g^[G:S].
        let g = catalog("C2xC4");
        for sub in cyclic_subgroup_classes(&g) {
            let ab = abelianization(&sub);
            let idx = sub.index();
            for x in 0..g.order() {
                let mut p = g.identity();
                for _ in 0..idx {
                    p = g.mul(p, x);
                }
                assert!(sub.contains(p), "power must land in S for abelian G");
                assert_eq!(transfer(&sub, x, &ab), ab.class_of(p).to_vec());
            }
        }
    }

    #[test]
    fn central_prime_order_elements_of_q8() {
        let q8 = catalog("Q8");
        let central = q8.central_prime_order_elements();
        assert_eq!(central.len(), 1);
        assert_eq!(central[0].1, 2);
    }

    #[test]
    fn parse_words() {
        let d8 = catalog("D8");
        let r = d8.parse_word("r").unwrap();
        assert_eq!(d8.parse_word("r^2").unwrap(), d8.mul(r, r));
        assert_eq!(d8.parse_word("r*r").unwrap(), d8.mul(r, r));
        assert_eq!(d8.parse_word("r^-1").unwrap(), d8.inverse(r));
        assert_eq!(d8.parse_word("1").unwrap(), 0);
        assert!(d8.parse_word("z").is_err());
    }

    #[test]
    fn group_spec_json_round_trip() {
        let spec = GroupSpec::Catalog {
            name: "C4".into(),
            params: vec![],
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"catalog":{"name":"C4"}}"#);
        assert_eq!(serde_json::from_str::<GroupSpec>(&json).unwrap(), spec);

        let spec = GroupSpec::Permutations {
            degree: 3,
            generators: vec![vec![1, 2, 0]],
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"permutations":{"degree":3,"generators":[[1,2,0]]}}"#
        );
        assert_eq!(serde_json::from_str::<GroupSpec>(&json).unwrap(), spec);
    }
}
