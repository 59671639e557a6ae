//! Exact `C_k(Q)` for integer `k` when one of the quotient curves has rank zero.
//!
//! Rank facts are trusted inputs. They can only be refuted, never proved: a searched
//! point of infinite order on `E_{i,k}`, or a searched point of `C_k` outside the torsion
//! preimages, overturns a rank-zero claim.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{height, q};
use crate::cases::case1_roots;
use crate::elliptic::{EPoint, TorsionStructure};
use crate::error::{Error, Result};
use crate::family::{CPoint, CurveIndex, QuarticCurve};
use crate::search::{search_ck, search_e, HeightBound};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct RankFact {
    pub k: i64,
    pub i: CurveIndex,
    pub rank: u32,
    pub source: String,
}

impl fmt::Display for RankFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}_{} = {} ({})", self.i, self.k, self.rank, self.source)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Status {
    Classified,
    NeedsRankFact,
    RankFactRefuted,
}

/// Which of the four possible shapes `C_k(Q)` takes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Branch {
    /// Only the two points at infinity.
    Generic,
    /// `k = a^4 + 2a^3` with `a` not in `{-1, 3}`: adds `(a : a : 1)`.
    Diagonal {
        a: i64,
    },
    MinusOne,
    OneThirtyFive,
}

impl Branch {
    pub fn for_k(k: i64) -> Self {
        match k {
            -1 => Branch::MinusOne,
            135 => Branch::OneThirtyFive,
            _ => match case1_roots(&BigInt::from(k)).into_iter().next() {
                Some(a) => Branch::Diagonal {
                    a: i64::try_from(a).expect("root bounded by k"),
                },
                None => Branch::Generic,
            },
        }
    }

    /// 1-based position among the four shapes.
    pub fn number(self) -> u8 {
        match self {
            Branch::Generic => 1,
            Branch::Diagonal { .. } => 2,
            Branch::MinusOne => 3,
            Branch::OneThirtyFive => 4,
        }
    }

    /// The point set this branch predicts.
    pub fn points(self) -> BTreeSet<CPoint> {
        let mut out = BTreeSet::from([CPoint::infinity_x(), CPoint::infinity_y()]);
        let p = |x, y| CPoint::from_i64(x, y, 1).expect("valid point");
        match self {
            Branch::Generic => {}
            Branch::Diagonal { a } => {
                out.insert(p(a, a));
            }
            Branch::MinusOne => out.extend([p(-1, 0), p(0, -1), p(-1, -1)]),
            Branch::OneThirtyFive => out.extend([p(3, 3), p(-6, 3), p(3, -6)]),
        }
        out
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Generic => write!(f, "1 (k is not a^4 + 2a^3)"),
            Branch::Diagonal { a } => write!(f, "2 (k = a^4 + 2a^3, a = {a})"),
            Branch::MinusOne => write!(f, "3 (k = -1)"),
            Branch::OneThirtyFive => write!(f, "4 (k = 135)"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RankCheck {
    /// No point of infinite order up to the search height; not a proof of rank zero.
    ConfirmedTentative,
    Refuted {
        #[serde(serialize_with = "crate::serde_util::display")]
        witness: EPoint,
    },
}

/// Searches `E_{i,k}` to height `h` for a point of infinite order.
pub fn refute_rank_zero(k: i64, i: CurveIndex, h: HeightBound) -> Result<RankCheck> {
    let e = QuarticCurve::from_int(k)?.elliptic(i);
    let mut witnesses = Vec::new();
    for p in search_e(&e, h) {
        if e.has_infinite_order(&p)? {
            witnesses.push(p);
        }
    }
    let key = |p: &EPoint| {
        let (x, y) = p.coords().expect("affine search output");
        (height(x), height(y), y < &q(0), p.clone())
    };
    Ok(match witnesses.into_iter().min_by_key(key) {
        Some(witness) => RankCheck::Refuted { witness },
        None => RankCheck::ConfirmedTentative,
    })
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Fiber {
    pub curve: CurveIndex,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub image: EPoint,
    pub preimages: BTreeSet<CPoint>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Refutation {
    pub fact: RankFact,
    pub check: RankCheck,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ClassificationCertificate {
    pub facts_used: Vec<RankFact>,
    pub refuted: Vec<Refutation>,
    pub torsion: Vec<(CurveIndex, TorsionStructure)>,
    pub fibers: Vec<Fiber>,
    pub case1_roots: Vec<i64>,
    pub search_height: u64,
    pub searched_points: usize,
    /// The computed set equals the prediction of `branch`.
    pub branch_consistent: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ClassificationResult {
    pub k: i64,
    pub branch: Branch,
    /// Exact `C_k(Q)` when classified; otherwise the points found by search.
    pub points: BTreeSet<CPoint>,
    pub certificate: ClassificationCertificate,
    pub status: Status,
}

/// Torsion preimages on `C_k` for a rank-zero `E_i`.
fn torsion_fibers(c: &QuarticCurve, i: CurveIndex) -> Result<(TorsionStructure, Vec<Fiber>)> {
    let t = c.elliptic(i).torsion_subgroup()?;
    let fibers = t
        .points
        .iter()
        .map(|p| {
            Ok(Fiber {
                curve: i,
                image: p.clone(),
                preimages: c.preimages(i, p)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((t.structure, fibers))
}

/// `C_k(Q)` from the rank-zero facts about `k`, cross-checked by a search to height `h`.
pub fn classify(k: i64, facts: &[RankFact], h: HeightBound) -> Result<ClassificationResult> {
    let c = QuarticCurve::from_int(k).map_err(|_| Error::domain(format!("k = {k} is excluded")))?;
    let branch = Branch::for_k(k);
    let searched = search_ck(&q(k), h)?;

    let mut by_curve: BTreeMap<CurveIndex, BTreeSet<u32>> = BTreeMap::new();
    for f in facts.iter().filter(|f| f.k == k) {
        by_curve.entry(f.i).or_default().insert(f.rank);
    }
    if let Some((i, ranks)) = by_curve.iter().find(|(_, r)| r.len() > 1) {
        return Err(Error::Integrity(format!(
            "conflicting ranks {ranks:?} for {i} at k = {k}"
        )));
    }

    let mut certificate = ClassificationCertificate {
        facts_used: Vec::new(),
        refuted: Vec::new(),
        torsion: Vec::new(),
        fibers: Vec::new(),
        case1_roots: case1_roots(&BigInt::from(k))
            .into_iter()
            .map(|a| i64::try_from(a).expect("root bounded by k"))
            .collect(),
        search_height: h.get(),
        searched_points: searched.len(),
        branch_consistent: false,
    };

    let mut seen = BTreeSet::new();
    let mut sets: Vec<BTreeSet<CPoint>> = Vec::new();
    for fact in facts.iter().filter(|f| f.k == k && f.rank == 0) {
        if !seen.insert(fact.i) {
            continue;
        }
        if let RankCheck::Refuted { witness } = refute_rank_zero(k, fact.i, h)? {
            certificate.refuted.push(Refutation {
                fact: fact.clone(),
                check: RankCheck::Refuted { witness },
            });
            continue;
        }
        let (structure, fibers) = torsion_fibers(&c, fact.i)?;
        let set: BTreeSet<CPoint> = fibers.iter().flat_map(|f| f.preimages.iter().cloned()).collect();
        if let Some(extra) = searched.iter().find(|p| !set.contains(p)) {
            let witness = c.phi(fact.i, extra)?;
            certificate.refuted.push(Refutation {
                fact: fact.clone(),
                check: RankCheck::Refuted { witness },
            });
            continue;
        }
        certificate.facts_used.push(fact.clone());
        certificate.torsion.push((fact.i, structure));
        certificate.fibers.extend(fibers);
        sets.push(set);
    }

    let Some(first) = sets.first().cloned() else {
        let status = if certificate.refuted.is_empty() {
            Status::NeedsRankFact
        } else {
            Status::RankFactRefuted
        };
        return Ok(ClassificationResult {
            k,
            branch,
            points: searched,
            certificate,
            status,
        });
    };
    if let Some(other) = sets.iter().find(|s| **s != first) {
        return Err(Error::Integrity(format!(
            "rank-zero curves disagree at k = {k}: {} vs {} points",
            first.len(),
            other.len()
        )));
    }
    certificate.branch_consistent = first == branch.points();
    Ok(ClassificationResult {
        k,
        branch,
        points: first,
        certificate,
        status: Status::Classified,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub classified: usize,
    pub needs_rank_fact: usize,
    pub refuted: usize,
}

/// Classifies every nonzero `k` in `from..=to`, in order.
pub fn sweep(
    from: i64,
    to: i64,
    facts: &[RankFact],
    h: HeightBound,
) -> Result<(Vec<ClassificationResult>, SweepSummary)> {
    if from > to {
        return Err(Error::domain(format!("empty range {from}..={to}")));
    }
    let results = (from..=to)
        .into_par_iter()
        .filter(|&k| k != 0)
        .map(|k| classify(k, facts, h))
        .collect::<Result<Vec<_>>>()?;
    let mut s = SweepSummary {
        total: results.len(),
        ..Default::default()
    };
    for r in &results {
        match r.status {
            Status::Classified => s.classified += 1,
            Status::NeedsRankFact => s.needs_rank_fact += 1,
            Status::RankFactRefuted => s.refuted += 1,
        }
    }
    Ok((results, s))
}

/// Parses rank facts: `k`, `i`, `rank`, `source` per line, tab separated (whitespace
/// accepted), `#` comments and blank lines ignored.
pub fn parse_rank_facts(text: &str, origin: &str) -> Result<Vec<RankFact>> {
    let mut out = BTreeSet::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            path: origin.to_string(),
            message: format!("line {}: {message}", n + 1),
        };
        let fields: Vec<&str> = if line.contains('\t') {
            line.split('\t').map(str::trim).collect()
        } else {
            line.splitn(4, char::is_whitespace).map(str::trim).collect()
        };
        if fields.len() < 3 {
            return Err(err(format!("expected k, i, rank, source; got {line:?}")));
        }
        let k: i64 = fields[0].parse().map_err(|_| err(format!("bad k {:?}", fields[0])))?;
        if k == 0 {
            return Err(err("k = 0 is excluded".into()));
        }
        let i = fields[1]
            .parse::<u8>()
            .ok()
            .and_then(|i| CurveIndex::from_number(i).ok())
            .ok_or_else(|| err(format!("curve index {:?} not in 1..=3", fields[1])))?;
        let rank: u32 = fields[2]
            .parse()
            .map_err(|_| err(format!("bad rank {:?}", fields[2])))?;
        let source = fields.get(3).copied().unwrap_or("").trim().to_string();
        out.insert(RankFact { k, i, rank, source });
    }
    Ok(out.into_iter().collect())
}

pub fn load_rank_facts(path: &Path) -> Result<Vec<RankFact>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_rank_facts(&text, &path.display().to_string())
}

const TABLE_FACTS: &str = include_str!("../data/ranks_table.tsv");
const SPECIAL_FACTS: &str = include_str!("../data/ranks_special.tsv");
const EXTERNAL_FACTS: &str = include_str!("../data/ranks_external_100.tsv");

/// Ranks for `-10 <= k <= 10` and for the special values of the torsion cases.
pub fn default_rank_facts() -> Vec<RankFact> {
    let mut v = parse_rank_facts(TABLE_FACTS, "ranks_table.tsv").expect("shipped data parses");
    v.extend(parse_rank_facts(SPECIAL_FACTS, "ranks_special.tsv").expect("shipped data parses"));
    v.sort();
    v.dedup();
    v
}

/// Externally computed ranks for `-100 <= k <= 100`.
pub fn external_rank_facts() -> Vec<RankFact> {
    parse_rank_facts(EXTERNAL_FACTS, "ranks_external_100.tsv").expect("shipped data parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: u64) -> HeightBound {
        HeightBound::new(n).unwrap()
    }

    fn pts(v: &[(i64, i64)]) -> BTreeSet<CPoint> {
        let mut s: BTreeSet<CPoint> = v.iter().map(|&(x, y)| CPoint::from_i64(x, y, 1).unwrap()).collect();
        s.insert(CPoint::infinity_x());
        s.insert(CPoint::infinity_y());
        s
    }

    #[test]
    fn classification_examples() {
        let facts = default_rank_facts();
        let r = classify(2, &facts, h(30)).unwrap();
        assert_eq!(r.status, Status::Classified);
        assert_eq!(r.points, pts(&[]));
        assert_eq!(r.branch, Branch::Generic);
        let r = classify(-1, &facts, h(30)).unwrap();
        assert_eq!(r.points, pts(&[(-1, 0), (0, -1), (-1, -1)]));
        assert!(r.certificate.branch_consistent);
        let r = classify(864, &facts, h(30)).unwrap();
        assert_eq!(r.points, pts(&[(-6, -6)]));
        assert_eq!(r.branch, Branch::Diagonal { a: -6 });
        let r = classify(135, &facts, h(30)).unwrap();
        assert_eq!(r.points, pts(&[(3, 3), (-6, 3), (3, -6)]));
    }

    #[test]
    fn missing_and_refuted_facts() {
        let r = classify(7, &default_rank_facts(), h(20)).unwrap();
        assert_eq!(r.status, Status::NeedsRankFact);
        assert!(r.points.contains(&CPoint::infinity_x()));
        let lie = vec![RankFact {
            k: 7,
            i: CurveIndex::E2,
            rank: 0,
            source: "test".into(),
        }];
        let r = classify(7, &lie, h(20)).unwrap();
        assert_eq!(r.status, Status::RankFactRefuted);
        assert!(classify(0, &lie, h(20)).is_err());
    }

    #[test]
    fn refutation_examples() {
        assert_eq!(
            refute_rank_zero(7, CurveIndex::E2, h(50)).unwrap(),
            RankCheck::Refuted {
                witness: EPoint::from_i64(0, 28)
            }
        );
        assert_eq!(
            refute_rank_zero(-1, CurveIndex::E2, h(50)).unwrap(),
            RankCheck::ConfirmedTentative
        );
        assert_eq!(
            refute_rank_zero(3, CurveIndex::E3, h(50)).unwrap(),
            RankCheck::ConfirmedTentative
        );
    }

    #[test]
    fn parsing() {
        let facts = default_rank_facts();
        assert!(facts.contains(&RankFact {
            k: -9,
            i: CurveIndex::E1,
            rank: 0,
            source: "rank-table".into()
        }));
        assert!(parse_rank_facts("", "empty").unwrap().is_empty());
        let err = parse_rank_facts("# c\n5\t4\t0\tx\n", "bad").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let ws = parse_rank_facts("5 1 0 some source\n", "ws").unwrap();
        assert_eq!(ws[0].source, "some source");
        assert!(parse_rank_facts("5\t1\n", "short").is_err());
        assert!(load_rank_facts(Path::new("/nonexistent/ranks.tsv")).is_err());
    }

    #[test]
    fn conflicting_facts_rejected() {
        let f = |rank| RankFact {
            k: 2,
            i: CurveIndex::E1,
            rank,
            source: "t".into(),
        };
        assert!(matches!(classify(2, &[f(0), f(1)], h(10)), Err(Error::Integrity(_))));
    }
}
