//! Number-theoretic decision procedures: automorphism criteria for
//! representative hats, the six presentation cases for isomorphisms between
//! almost representative hats, and the census over a grid of `(j, m)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::dyadic::solve_congruence;
use crate::error::{Error, Result};
use crate::geometry::{AffineMap, Perm, Triangle};
use crate::hats::{all_encoding_triples, canonical_form, normalize, Hat};
use crate::oracle::{oracle_automorphisms, oracle_isomorphic, solve_correspondence};

fn divides(d: &BigInt, n: &BigInt) -> bool {
    if d.is_zero() {
        n.is_zero()
    } else {
        n.mod_floor(d).is_zero()
    }
}

/// Automorphism fixing `B` and swapping `A`, `C`: `j | 2i - m`.
pub fn aut_fix_b(h: &Hat) -> bool {
    let (i, j, m) = (h.i(), h.j(), h.m());
    divides(j, &(BigInt::from(2) * i - m))
}

/// Automorphism fixing the origin vertex of `T̄(i, j, m)` and swapping the
/// other two: `m | i`, `m | j` and `mj | m² - i²`.
fn fixes_origin(i: &BigInt, j: &BigInt, m: &BigInt) -> bool {
    divides(m, i) && divides(m, j) && divides(&(m * j), &(m * m - i * i))
}

/// Automorphism fixing `A` and swapping `B`, `C`.
pub fn aut_fix_a(h: &Hat) -> bool {
    fixes_origin(h.i(), h.j(), h.m())
}

/// Automorphism fixing `C` and swapping `A`, `B`.
///
/// Re-pointing at `C` gives the representative hat `T(m - i + j, j, m)`, and
/// the origin criterion applies there. With `k' = (m - i + j)/m` and
/// `l' = j/m` it reads `k'² ≡ 1 (mod l')`.
pub fn aut_fix_c(h: &Hat) -> bool {
    let (i, j, m) = (h.i(), h.j(), h.m());
    if !divides(m, j) || !divides(m, i) {
        return false;
    }
    let k = (m - i + j) / m;
    let l = j / m;
    divides(&l, &(&k * &k - 1u32))
}

/// Automorphism cycling the vertices: boundary type `(m, m, m)` and, with
/// `i = km`, `j = lm`, `l | k² - k + 1`.
pub fn aut_cycle(h: &Hat) -> bool {
    let (i, j, m) = (h.i(), h.j(), h.m());
    let bt = h.to_triangle().boundary_type();
    if !(bt.all_equal() && &bt.r == m) {
        return false;
    }
    let k = i / m;
    let l = j / m;
    divides(&l, &(&k * &k - &k + 1u32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutTag {
    Trivial,
    C2,
    C3,
    S3,
}

impl AutTag {
    pub const ALL: [AutTag; 4] = [AutTag::Trivial, AutTag::C2, AutTag::C3, AutTag::S3];

    pub fn order(self) -> usize {
        match self {
            AutTag::Trivial => 1,
            AutTag::C2 => 2,
            AutTag::C3 => 3,
            AutTag::S3 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AutTag::Trivial => "Trivial",
            AutTag::C2 => "C2",
            AutTag::C3 => "C3",
            AutTag::S3 => "S3",
        }
    }

    pub fn from_name(s: &str) -> Option<AutTag> {
        AutTag::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl fmt::Display for AutTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of the four criteria on one representative hat.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutCriteria {
    pub fix_a: bool,
    pub fix_b: bool,
    pub fix_c: bool,
    pub cycle: bool,
}

impl AutCriteria {
    pub fn evaluate(h: &Hat) -> Result<Self> {
        require_representative(h)?;
        Ok(AutCriteria {
            fix_a: aut_fix_a(h),
            fix_b: aut_fix_b(h),
            fix_c: aut_fix_c(h),
            cycle: aut_cycle(h),
        })
    }

    pub fn transpositions(&self) -> usize {
        [self.fix_a, self.fix_b, self.fix_c]
            .iter()
            .filter(|&&x| x)
            .count()
    }

    /// Assembles the group. Panics on combinations no subgroup of `S3`
    /// allows, which would mean one of the criteria is wrong.
    pub fn tag(&self) -> AutTag {
        let t = self.transpositions();
        assert!(t != 2, "two transpositions generate S3: {self:?}");
        assert!(t != 3 || self.cycle, "S3 contains a 3-cycle: {self:?}");
        assert!(t != 1 || !self.cycle, "a 3-cycle and a transposition generate S3: {self:?}");
        match (t, self.cycle) {
            (3, _) => AutTag::S3,
            (1, _) => AutTag::C2,
            (_, true) => AutTag::C3,
            _ => AutTag::Trivial,
        }
    }
}

fn require_representative(h: &Hat) -> Result<()> {
    if h.is_representative() {
        Ok(())
    } else {
        Err(Error::InvalidHat {
            i: h.i().to_string(),
            j: h.j().to_string(),
            m: h.m().to_string(),
            reason: "automorphism criteria need an odd i",
        })
    }
}

/// Group tag from the criteria alone.
pub fn aut_tag(h: &Hat) -> Result<AutTag> {
    Ok(AutCriteria::evaluate(h)?.tag())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    pub tag: AutTag,
    /// `(vertex permutation, map)` for every automorphism, identity first.
    pub witnesses: Vec<(Perm, AffineMap)>,
}

pub fn automorphism_group(h: &Hat) -> Result<AutGroup> {
    let tag = aut_tag(h)?;
    let witnesses = oracle_automorphisms(&h.to_triangle());
    assert_eq!(
        witnesses.len(),
        tag.order(),
        "criteria and exact solve disagree on {h}"
    );
    Ok(AutGroup { tag, witnesses })
}

/// The six ways a vertex bijection can present the target hat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoCase {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl IsoCase {
    pub const ALL: [IsoCase; 6] = [
        IsoCase::A,
        IsoCase::B,
        IsoCase::C,
        IsoCase::D,
        IsoCase::E,
        IsoCase::F,
    ];

    /// Vertex correspondence: `A, B, C` of the source go to these vertices of
    /// the target (0 = origin, 1 = apex, 2 = base end).
    pub fn correspondence(self) -> Perm {
        match self {
            IsoCase::A => Perm([0, 1, 2]),
            IsoCase::B => Perm([2, 1, 0]),
            IsoCase::C => Perm([0, 2, 1]),
            IsoCase::D => Perm([1, 2, 0]),
            IsoCase::E => Perm([2, 0, 1]),
            IsoCase::F => Perm([1, 0, 2]),
        }
    }

    pub fn letter(self) -> char {
        match self {
            IsoCase::A => 'a',
            IsoCase::B => 'b',
            IsoCase::C => 'c',
            IsoCase::D => 'd',
            IsoCase::E => 'e',
            IsoCase::F => 'f',
        }
    }

    pub fn from_letter(c: char) -> Option<IsoCase> {
        IsoCase::ALL.into_iter().find(|k| k.letter() == c)
    }
}

impl fmt::Display for IsoCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Whether `src = T̄(i,j,m)` and `dst = T̄(k,l,n)` are isomorphic through the
/// correspondence of `case`.
pub fn iso_case(src: &Hat, dst: &Hat, case: IsoCase) -> bool {
    let (i, j, m) = (src.i(), src.j(), src.m());
    let (k, l, n) = (dst.i(), dst.j(), dst.m());
    match case {
        IsoCase::A => l == j && n == m && divides(j, &(k - i)),
        IsoCase::B => l == j && n == m && divides(j, &(k - (m - i))),
        IsoCase::C | IsoCase::E => crossed_case(i, j, m, k, l, n, case == IsoCase::E),
        IsoCase::D | IsoCase::F => crossed_case(&(m - i), j, m, k, l, n, case == IsoCase::F),
    }
}

/// Cases (c)-(f): `n = gcd(x, j)`, `l = mj/n`, and `k` is `a*m` (or `n - a*m`
/// when `flipped`) for some `a` with `a*x ≡ n (mod j)`. The solutions `a`
/// form a class mod `j/n`, so `a*m` sweeps a class mod `l`.
fn crossed_case(
    x: &BigInt,
    j: &BigInt,
    m: &BigInt,
    k: &BigInt,
    l: &BigInt,
    n: &BigInt,
    flipped: bool,
) -> bool {
    if n != &x.gcd(j) || n * l != m * j {
        return false;
    }
    let a = match solve_congruence(x, n, j) {
        Ok(r) => r,
        Err(_) => return false,
    };
    let base = a.value() * m;
    let target = if flipped { n - k } else { k.clone() };
    divides(l, &(target - base))
}

/// First case (in `a..f` order) under which the hats are isomorphic.
pub fn find_case(src: &Hat, dst: &Hat) -> Option<IsoCase> {
    IsoCase::ALL.into_iter().find(|&c| iso_case(src, dst, c))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoResult {
    pub isomorphic: bool,
    pub case: Option<IsoCase>,
    /// Vertex correspondence and a dyadic affine map realising it.
    pub witness: Option<(Perm, AffineMap)>,
}

/// Decides isomorphism of two triangles three ways (canonical forms, shared
/// encoding triples, presentation cases between representative hats) and
/// attaches an exact witness map.
pub fn isomorphic(t1: &Triangle, t2: &Triangle) -> Result<IsoResult> {
    let by_canon = canonical_form(t1)? == canonical_form(t2)?;
    let (e1, e2) = (all_encoding_triples(t1)?, all_encoding_triples(t2)?);
    let by_triples = !e1.is_disjoint(&e2);
    let h1 = normalize(t1, Perm::IDENTITY)?.hat;
    let h2 = normalize(t2, Perm::IDENTITY)?.hat;
    let case = find_case(&h1, &h2);
    assert_eq!(by_canon, by_triples, "encoding triple routes disagree");
    assert_eq!(by_canon, case.is_some(), "case analysis disagrees with encoding triples");

    let witness = oracle_isomorphic(t1, t2);
    assert_eq!(by_canon, witness.is_some(), "exact solve disagrees with criteria");
    Ok(IsoResult {
        isomorphic: by_canon,
        case,
        witness,
    })
}

/// Isomorphism of two almost representative hats, with the case read off the
/// hats as given rather than after normalization.
pub fn isomorphic_hats(h1: &Hat, h2: &Hat) -> Result<IsoResult> {
    let (t1, t2) = (h1.to_triangle(), h2.to_triangle());
    let case = find_case(h1, h2);
    let witness = match case {
        Some(c) => {
            let f = solve_correspondence(&t1, &t2, c.correspondence())
                .expect("case criterion holds, so the map is dyadic");
            Some((c.correspondence(), f))
        }
        None => None,
    };
    let cross_check = isomorphic(&t1, &t2)?;
    assert_eq!(cross_check.isomorphic, case.is_some());
    Ok(IsoResult {
        isomorphic: case.is_some(),
        case,
        witness,
    })
}

/// Per-`(j, m)` census row over the fundamental domain `i ∈ {1, 3, …, 2j-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub j: u64,
    pub m: u64,
    pub hats: usize,
    /// Pointed classes, counted with the exact solver.
    pub pointed_classes: usize,
    /// Distinct canonical forms among the row's hats.
    pub iso_classes: usize,
    pub aut_histogram: BTreeMap<AutTag, usize>,
    /// Every hat satisfies `|encoding triples| * |Aut| = 6`.
    pub orbit_stabilizer: bool,
}

impl CensusRow {
    pub fn ok(&self) -> bool {
        self.pointed_classes as u64 == self.j && self.orbit_stabilizer
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(CensusRow::ok)
    }

    pub fn aut_totals(&self) -> BTreeMap<AutTag, usize> {
        let mut out = BTreeMap::new();
        for row in &self.rows {
            for (tag, n) in &row.aut_histogram {
                *out.entry(*tag).or_insert(0) += n;
            }
        }
        out
    }
}

fn census_row(j: u64, m: u64) -> Result<CensusRow> {
    let hats: Vec<Hat> = (0..j)
        .map(|n| Hat::representative(2 * n + 1, j, m))
        .collect::<Result<_>>()?;
    let triangles: Vec<Triangle> = hats.iter().map(Hat::to_triangle).collect();

    // union of pointed-isomorphic hats, decided by the exact solver
    let mut class_of: Vec<usize> = (0..hats.len()).collect();
    for a in 0..hats.len() {
        if class_of[a] != a {
            continue;
        }
        for b in a + 1..hats.len() {
            if class_of[b] == b
                && solve_correspondence(&triangles[a], &triangles[b], Perm::IDENTITY).is_some()
            {
                class_of[b] = a;
            }
        }
    }
    let pointed_classes = class_of.iter().enumerate().filter(|(k, &c)| *k == c).count();

    let mut canon = BTreeSet::new();
    let mut aut_histogram: BTreeMap<AutTag, usize> = BTreeMap::new();
    let mut orbit_stabilizer = true;
    for (h, t) in hats.iter().zip(&triangles) {
        canon.insert(canonical_form(t)?);
        let tag = aut_tag(h)?;
        *aut_histogram.entry(tag).or_insert(0) += 1;
        orbit_stabilizer &= all_encoding_triples(t)?.len() * tag.order() == 6;
    }
    Ok(CensusRow {
        j,
        m,
        hats: hats.len(),
        pointed_classes,
        iso_classes: canon.len(),
        aut_histogram,
        orbit_stabilizer,
    })
}

/// Census over odd `j <= j_max`, `m <= m_max`. Rows are computed
/// independently (on `threads` workers when given) and returned sorted.
pub fn census(j_max: u64, m_max: u64, threads: Option<usize>) -> Result<CensusReport> {
    for (name, v) in [("jmax", j_max), ("mmax", m_max)] {
        if v == 0 || v % 2 == 0 {
            return Err(Error::InvalidBounds(format!(
                "{name} must be odd and positive, got {v}"
            )));
        }
    }
    if threads == Some(0) {
        return Err(Error::InvalidBounds("--par must be at least 1".into()));
    }
    let cells: Vec<(u64, u64)> = (1..=j_max)
        .step_by(2)
        .flat_map(|j| (1..=m_max).step_by(2).map(move |m| (j, m)))
        .collect();
    let run = || -> Result<Vec<CensusRow>> {
        cells.par_iter().map(|&(j, m)| census_row(j, m)).collect()
    };
    let mut rows = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidBounds(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    rows.sort_by_key(|r| (r.j, r.m));
    Ok(CensusReport { rows })
}
