//! Residue arithmetic behind translate-orbit cliques, and the parameter
//! thresholds that decide when only canonical maximum cliques can occur.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::point::{StructuredPoint, Tag};

/// Exponents above this are rejected to keep big-integer results bounded.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("block must split into residues with exactly two tags and no infinity point (found tags {found:?})")]
    NotTwoTagged { found: Vec<Tag> },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
    #[error("denniston({r},{s}): s < 2r disagrees with the threshold comparison")]
    PredicateMismatch { r: u32, s: u32 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, k)` with `q = p^k`, by trial factorization.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..)
        .find(|&d| d * d > q || q.is_multiple_of(d))
        .filter(|&d| q.is_multiple_of(d))
        .unwrap_or(q);
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// A subset of `Z_modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: u64,
    elements: Vec<u64>,
}

impl ResidueSet {
    /// Reduces every value and removes duplicates.
    pub fn new(modulus: u64, values: impl IntoIterator<Item = u64>) -> Result<Self, ArithError> {
        if modulus == 0 {
            return Err(ArithError::ZeroModulus);
        }
        let mut elements: Vec<u64> = values.into_iter().map(|v| v % modulus).collect();
        elements.sort_unstable();
        elements.dedup();
        Ok(ResidueSet { modulus, elements })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&(x % self.modulus)).is_ok()
    }

    /// `{k·x}`.
    pub fn scaled(&self, k: u64) -> ResidueSet {
        let p = self.modulus;
        ResidueSet::new(p, self.elements.iter().map(|&x| (x * (k % p)) % p))
            .expect("positive modulus")
    }

    /// `{x + d}`.
    pub fn translated(&self, d: u64) -> ResidueSet {
        let p = self.modulus;
        ResidueSet::new(p, self.elements.iter().map(|&x| x + d % p)).expect("positive modulus")
    }

    /// Nonzero residues not in the set.
    pub fn nonzero_complement(&self) -> ResidueSet {
        ResidueSet::new(
            self.modulus,
            (1..self.modulus).filter(|&x| !self.contains(x)),
        )
        .expect("positive modulus")
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elements.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Nonzero quadratic residues mod an odd prime.
pub fn squares_mod(p: u64) -> Result<ResidueSet, ArithError> {
    if p == 2 || !is_prime(p) {
        return Err(ArithError::NotOddPrime(p));
    }
    ResidueSet::new(p, (1..p).map(|i| i * i % p))
}

/// Multiplicity of each residue among all differences `a − b`, zero included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceMultiset {
    modulus: u64,
    counts: Vec<u64>,
}

impl DifferenceMultiset {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn multiplicity(&self, d: u64) -> u64 {
        self.counts[(d % self.modulus) as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Residues grouped by multiplicity, zero multiplicity omitted.
    pub fn by_multiplicity(&self) -> BTreeMap<u64, ResidueSet> {
        let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for (d, &c) in self.counts.iter().enumerate().filter(|(_, &c)| c > 0) {
            groups.entry(c).or_default().push(d as u64);
        }
        groups
            .into_iter()
            .map(|(c, ds)| {
                (
                    c,
                    ResidueSet::new(self.modulus, ds).expect("positive modulus"),
                )
            })
            .collect()
    }
}

/// Written as `3·{0} + 1·{1,3,4,9,10,12}`, highest multiplicity first.
impl fmt::Display for DifferenceMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .by_multiplicity()
            .iter()
            .rev()
            .map(|(c, s)| format!("{c}·{s}"))
            .collect();
        if terms.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

pub fn difference_multiset(s: &ResidueSet) -> DifferenceMultiset {
    let p = s.modulus;
    let mut counts = vec![0; p as usize];
    for &a in &s.elements {
        for &b in &s.elements {
            counts[((a + p - b) % p) as usize] += 1;
        }
    }
    DifferenceMultiset { modulus: p, counts }
}

/// `|(d + s) ∩ s|`.
pub fn translate_intersection(s: &ResidueSet, d: u64) -> usize {
    s.elements
        .iter()
        .filter(|&&x| s.contains(x + d % s.modulus))
        .count()
}

/// Intersection sizes of a two-tagged base block with its translates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCliqueCertificate {
    pub tags: [Tag; 2],
    pub parts: [ResidueSet; 2],
    pub part_diffs: [DifferenceMultiset; 2],
    /// `totals[d]` is `|(B + d) ∩ B|`; index 0 holds the block size.
    pub totals: Vec<usize>,
    pub pairwise_intersecting: bool,
}

impl OrbitCliqueCertificate {
    /// Every nonzero shift meets the block in exactly one point.
    pub fn exactly_once(&self) -> bool {
        self.totals[1..].iter().all(|&t| t == 1)
    }
}

/// The translates `B + d` pairwise intersect iff every nonzero shift meets
/// `B`; the intersection with a shift splits over the two tags and equals the
/// multiplicity of `d` in that part's difference multiset.
pub fn orbit_clique_certificate(
    block: &[StructuredPoint],
    p: u8,
) -> Result<OrbitCliqueCertificate, ArithError> {
    if p == 0 {
        return Err(ArithError::ZeroModulus);
    }
    let mut parts: BTreeMap<Tag, Vec<u64>> = BTreeMap::new();
    let mut infinity = false;
    for point in block {
        match point {
            StructuredPoint::Residue { tag, value } => {
                parts.entry(*tag).or_default().push(u64::from(*value))
            }
            StructuredPoint::Infinity => infinity = true,
        }
    }
    let found: Vec<Tag> = parts.keys().copied().collect();
    if infinity || found.len() != 2 {
        return Err(ArithError::NotTwoTagged { found });
    }
    let modulus = u64::from(p);
    let sets: Vec<ResidueSet> = parts
        .into_values()
        .map(|v| ResidueSet::new(modulus, v))
        .collect::<Result<_, _>>()?;
    let [a, b]: [ResidueSet; 2] = sets.try_into().expect("two parts");
    let totals: Vec<usize> = (0..modulus)
        .map(|d| translate_intersection(&a, d) + translate_intersection(&b, d))
        .collect();
    let pairwise_intersecting = totals[1..].iter().all(|&t| t >= 1);
    Ok(OrbitCliqueCertificate {
        tags: [found[0], found[1]],
        part_diffs: [difference_multiset(&a), difference_multiset(&b)],
        parts: [a, b],
        totals,
        pairwise_intersecting,
    })
}

/// `m³ − 2m² + 2m`: designs with more points have only canonical maximum cliques.
pub fn gm_threshold(m: impl Into<BigUint>) -> BigUint {
    let m: BigUint = m.into();
    let m2 = &m * &m;
    &m2 * &m + 2u32 * &m - 2u32 * &m2
}

pub fn only_canonical_guaranteed(n: impl Into<BigUint>, m: impl Into<BigUint>) -> bool {
    n.into() > gm_threshold(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Points and lines of AG(d, q).
    Affine {
        d: u32,
        q: u64,
    },
    /// Points and lines of PG(d, q).
    Projective {
        d: u32,
        q: u64,
    },
    Unital {
        t: u64,
    },
    /// From a maximal arc of degree `2^r` in PG(2, 2^s).
    Denniston {
        r: u32,
        s: u32,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Affine { d, q } => write!(f, "affine(d={d},q={q})"),
            Family::Projective { d, q } => write!(f, "projective(d={d},q={q})"),
            Family::Unital { t } => write!(f, "unital(t={t})"),
            Family::Denniston { r, s } => write!(f, "denniston(r={r},s={s})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub n: BigUint,
    pub m: BigUint,
}

fn check_exponent(name: &str, e: u32) -> Result<(), ArithError> {
    if e > MAX_EXPONENT {
        return Err(ArithError::BadFamily(format!(
            "{name}={e} exceeds {MAX_EXPONENT}"
        )));
    }
    Ok(())
}

fn check_geometry(d: u32, q: u64) -> Result<BigUint, ArithError> {
    if d < 2 {
        return Err(ArithError::BadFamily(format!(
            "dimension d={d} must be at least 2"
        )));
    }
    check_exponent("d", d)?;
    prime_power(q).ok_or(ArithError::NotPrimePower(q))?;
    Ok(BigUint::from(q))
}

pub fn family_params(family: Family) -> Result<FamilyParams, ArithError> {
    let (n, m) = match family {
        Family::Affine { d, q } => {
            let q = check_geometry(d, q)?;
            (q.pow(d), q)
        }
        Family::Projective { d, q } => {
            let q = check_geometry(d, q)?;
            ((q.pow(d + 1) - 1u32) / (&q - 1u32), q + 1u32)
        }
        Family::Unital { t } => {
            if t < 2 {
                return Err(ArithError::BadFamily(format!("t={t} must be at least 2")));
            }
            let t = BigUint::from(t);
            (t.pow(3) + 1u32, t + 1u32)
        }
        Family::Denniston { r, s } => {
            if !(2 <= r && r < s) {
                return Err(ArithError::BadFamily(format!(
                    "need 2 <= r < s, got r={r}, s={s}"
                )));
            }
            check_exponent("s", s)?;
            let one = BigUint::from(1u32);
            ((&one << (r + s)) + (&one << r) - (&one << s), one << r)
        }
    };
    Ok(FamilyParams { family, n, m })
}

/// `s < 2r`, checked against the threshold comparison for the family's parameters.
pub fn denniston_may_have_noncanonical(r: u32, s: u32) -> Result<bool, ArithError> {
    let params = family_params(Family::Denniston { r, s })?;
    let flag = s < 2 * r;
    if flag == only_canonical_guaranteed(params.n, params.m) {
        return Err(ArithError::PredicateMismatch { r, s });
    }
    Ok(flag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(p: u64, xs: &[u64]) -> ResidueSet {
        ResidueSet::new(p, xs.iter().copied()).unwrap()
    }

    #[test]
    fn squares_and_non_squares_mod_13() {
        let s = squares_mod(13).unwrap();
        assert_eq!(s.elements(), &[1, 3, 4, 9, 10, 12]);
        assert_eq!(s.nonzero_complement().elements(), &[2, 5, 6, 7, 8, 11]);
        assert_eq!(squares_mod(3).unwrap().elements(), &[1]);
        assert_eq!(squares_mod(2), Err(ArithError::NotOddPrime(2)));
        assert_eq!(squares_mod(15), Err(ArithError::NotOddPrime(15)));
    }

    #[test]
    fn difference_multisets() {
        let r = set(13, &[2, 6, 5]);
        let dr = difference_multiset(&r);
        assert_eq!(dr.multiplicity(0), 3);
        assert_eq!(dr.by_multiplicity()[&1], squares_mod(13).unwrap());
        assert_eq!(dr.to_string(), "3·{0} + 1·{1,3,4,9,10,12}");
        let r2 = r.scaled(2);
        assert_eq!(r2.elements(), &[4, 10, 12]);
        assert_eq!(
            difference_multiset(&r2).by_multiplicity()[&1],
            squares_mod(13).unwrap().nonzero_complement()
        );
        let single = difference_multiset(&set(13, &[0]));
        assert_eq!((single.multiplicity(0), single.total()), (1, 1));
    }

    #[test]
    fn translate_intersections() {
        let r = set(13, &[2, 5, 6]);
        assert_eq!(translate_intersection(&r, 1), 1);
        assert_eq!(translate_intersection(&r, 2), 0);
        assert_eq!(translate_intersection(&r, 0), 3);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(49), Some((7, 2)));
    }

    #[test]
    fn certificate_rejects_other_shapes() {
        let one_tag = vec![
            StructuredPoint::residue(0, Tag::A).unwrap(),
            StructuredPoint::residue(1, Tag::A).unwrap(),
        ];
        assert!(matches!(
            orbit_clique_certificate(&one_tag, 13),
            Err(ArithError::NotTwoTagged { .. })
        ));
        let disjoint = vec![
            StructuredPoint::residue(0, Tag::A).unwrap(),
            StructuredPoint::residue(0, Tag::B).unwrap(),
        ];
        let c = orbit_clique_certificate(&disjoint, 13).unwrap();
        assert!(!c.pairwise_intersecting);
        assert_eq!(c.totals[0], 2);
    }

    #[test]
    fn thresholds() {
        assert_eq!(gm_threshold(6u32), BigUint::from(156u32));
        assert!(!only_canonical_guaranteed(66u32, 6u32));
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = family_params(Family::Projective { d: 3, q }).unwrap();
            assert_eq!(f.n, gm_threshold(f.m.clone()));
        }
        for t in 2..50u64 {
            let f = family_params(Family::Unital { t }).unwrap();
            assert!(f.n < gm_threshold(f.m));
        }
    }

    #[test]
    fn families() {
        let f = family_params(Family::Affine { d: 2, q: 3 }).unwrap();
        assert_eq!((f.n, f.m), (9u32.into(), 3u32.into()));
        let f = family_params(Family::Projective { d: 2, q: 3 }).unwrap();
        assert_eq!((f.n, f.m), (13u32.into(), 4u32.into()));
        let f = family_params(Family::Denniston { r: 2, s: 3 }).unwrap();
        assert_eq!((f.n, f.m), (28u32.into(), 4u32.into()));
        assert_eq!(denniston_may_have_noncanonical(2, 3), Ok(true));
        let f = family_params(Family::Denniston { r: 2, s: 5 }).unwrap();
        assert_eq!(f.n, 100u32.into());
        assert_eq!(denniston_may_have_noncanonical(2, 5), Ok(false));
        let f = family_params(Family::Denniston { r: 4, s: 7 }).unwrap();
        assert_eq!(f.n, BigUint::from((1u32 << 11) + (1 << 4) - (1 << 7)));

        assert!(family_params(Family::Affine { d: 2, q: 6 }).is_err());
        assert!(family_params(Family::Projective { d: 1, q: 3 }).is_err());
        assert!(family_params(Family::Unital { t: 1 }).is_err());
        assert!(family_params(Family::Denniston { r: 3, s: 3 }).is_err());
        assert!(family_params(Family::Denniston { r: 1, s: 3 }).is_err());
        assert!(family_params(Family::Denniston {
            r: 2,
            s: MAX_EXPONENT + 1
        })
        .is_err());
    }

    #[test]
    fn denniston_predicate_matches_threshold() {
        for s in 3..=12 {
            for r in 2..s {
                let f = family_params(Family::Denniston { r, s }).unwrap();
                assert_eq!(s < 2 * r, f.n <= gm_threshold(f.m), "r={r} s={s}");
                assert_eq!(denniston_may_have_noncanonical(r, s), Ok(s < 2 * r));
            }
        }
    }

    fn odd_prime() -> impl Strategy<Value = u64> {
        prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31])
    }

    proptest! {
        #[test]
        fn translate_intersection_is_difference_multiplicity(
            p in odd_prime(),
            xs in prop::collection::vec(0u64..31, 0..=4),
            d in 1u64..31,
        ) {
            let s = ResidueSet::new(p, xs).unwrap();
            let d = d % p;
            prop_assume!(d != 0);
            prop_assert_eq!(translate_intersection(&s, d) as u64, difference_multiset(&s).multiplicity(d));
        }

        #[test]
        fn squares_partition_units(p in odd_prime()) {
            let s = squares_mod(p).unwrap();
            let n = s.nonzero_complement();
            prop_assert_eq!(s.len() as u64, (p - 1) / 2);
            prop_assert_eq!(s.len() + n.len(), (p - 1) as usize);
            prop_assert!(s.elements().iter().all(|&x| !n.contains(x)));
        }

        #[test]
        fn difference_total_is_square_of_size(p in odd_prime(), xs in prop::collection::vec(0u64..31, 0..=6)) {
            let s = ResidueSet::new(p, xs).unwrap();
            let dm = difference_multiset(&s);
            prop_assert_eq!(dm.total(), (s.len() * s.len()) as u64);
            prop_assert_eq!(dm.multiplicity(0), s.len() as u64);
        }
    }
}
