//! Named groups of checks, fanned out over a thread pool.
//!
//! Work items are independent; results come back in the order the items
//! were listed, whatever the schedule.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::*;
use crate::catalog::{RootSystemType, TABULATED_TYPES};

use RootSystemType::{A, B, D, I2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    RealRoots,
    SmallestRoots,
    Interlacing,
    Auxiliary,
    Divisibility,
    DerivativeAtOne,
    Fixtures,
    All,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Identities,
        Suite::RealRoots,
        Suite::SmallestRoots,
        Suite::Interlacing,
        Suite::Auxiliary,
        Suite::Divisibility,
        Suite::DerivativeAtOne,
        Suite::Fixtures,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::RealRoots => "conj2",
            Suite::SmallestRoots => "conj3",
            Suite::Interlacing => "conj4",
            Suite::Auxiliary => "section8",
            Suite::Divisibility => "divisibility",
            Suite::DerivativeAtOne => "addendum",
            Suite::Fixtures => "fact73",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Restricts a suite to one type or one series, and caps the rank.
#[derive(Clone, Debug, Default)]
pub struct Selection {
    pub ty: Option<RootSystemType>,
    /// Family letter when a whole series is selected (`A`, `B` or `D`).
    pub series: Option<String>,
    pub l_max: Option<u32>,
}

/// A deferred check.
type Job = Box<dyn Fn() -> Report + Send + Sync>;

fn job(f: impl Fn() -> Report + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn series_of(sel: &Selection) -> Vec<String> {
    if let Some(s) = &sel.series {
        return vec![s.to_ascii_uppercase()];
    }
    match sel.ty {
        Some(A(_)) => vec!["A".into()],
        Some(B(_)) => vec!["B".into()],
        Some(D(_)) => vec!["D".into()],
        _ => vec!["A".into(), "B".into(), "D".into()],
    }
}

fn jobs(suite: Suite, sel: &Selection) -> Result<Vec<Job>, String> {
    let mut out: Vec<Job> = Vec::new();
    match suite {
        Suite::Identities => {
            let l = sel.l_max.unwrap_or(30);
            if l < 5 {
                return Err("identities need --lmax >= 5".into());
            }
            out.push(job(move || verify_identities(l)));
            let (ab, d) = match sel.l_max {
                Some(l) => (l, l),
                None => (40, 30),
            };
            out.push(job(move || verify_constructions(ab, d)));
        }
        Suite::RealRoots => match sel.ty {
            Some(ty) => {
                out.push(job(move || verify_real_roots(ty)));
                if let D(l) = ty {
                    out.push(job(move || verify_d_between_b(l)));
                }
                if let B(l) = ty {
                    out.push(job(move || verify_b_interlacing(l)));
                }
            }
            None => {
                let ab = sel.l_max.unwrap_or(40);
                let d = sel.l_max.unwrap_or(30);
                for l in 1..=ab {
                    out.push(job(move || verify_real_roots(A(l))));
                }
                for l in 1..=ab {
                    out.push(job(move || verify_real_roots(B(l))));
                }
                for l in 4..=d {
                    out.push(job(move || verify_real_roots(D(l))));
                }
                for ty in TABULATED_TYPES {
                    out.push(job(move || verify_real_roots(ty)));
                }
                for p in 3..=12 {
                    out.push(job(move || verify_real_roots(I2(p))));
                }
                for l in 4..=d {
                    out.push(job(move || verify_d_between_b(l)));
                }
                for l in 1..ab {
                    out.push(job(move || verify_b_interlacing(l)));
                }
            }
        },
        Suite::SmallestRoots => {
            let l = sel.l_max.unwrap_or(50);
            for family in series_of(sel) {
                out.push(job(move || verify_smallest_root_decrease(&family, l)));
            }
        }
        Suite::Interlacing => match sel.ty {
            Some(ty) => {
                out.push(job(move || verify_fplus_interlacing(ty)));
                if let A(l) = ty {
                    if l >= 2 {
                        out.push(job(move || verify_aplus_interlacing(l)));
                    }
                }
            }
            None => {
                let ab = sel.l_max.unwrap_or(40);
                let d = sel.l_max.unwrap_or(20);
                for l in 2..=ab {
                    out.push(job(move || verify_fplus_interlacing(A(l))));
                }
                for l in 2..=ab {
                    out.push(job(move || verify_fplus_interlacing(B(l))));
                }
                for l in 4..=d {
                    out.push(job(move || verify_fplus_interlacing(D(l))));
                }
                for l in 2..ab {
                    out.push(job(move || verify_aplus_interlacing(l)));
                }
            }
        },
        Suite::Auxiliary => match sel.ty {
            Some(D(l)) => out.push(job(move || verify_d_auxiliary(l))),
            Some(other) => return Err(format!("section8 applies to D only, got {other}")),
            None => {
                for l in 5..=sel.l_max.unwrap_or(20) {
                    out.push(job(move || verify_d_auxiliary(l)));
                }
            }
        },
        Suite::Divisibility => {
            let l = sel.l_max.unwrap_or(30);
            out.push(job(move || verify_half_divisibility(l)));
        }
        Suite::DerivativeAtOne => {
            let l = sel.l_max.unwrap_or(30);
            for family in series_of(sel) {
                out.push(job(move || verify_derivative_at_one(&family, l)));
            }
        }
        Suite::Fixtures => {
            let types: Vec<RootSystemType> = match sel.ty {
                Some(ty) if fixture_values(ty).is_some() => vec![ty],
                Some(ty) => return Err(format!("no fixtures for {ty}")),
                None => TABULATED_TYPES.into_iter().chain((3..=12).map(I2)).collect(),
            };
            for ty in types {
                out.push(job(move || verify_fixtures_f_side(ty)));
                out.push(job(move || verify_fixtures_fplus_side(ty)));
            }
        }
        Suite::All => {
            for s in Suite::ALL.into_iter().filter(|s| *s != Suite::All) {
                let sub = Selection {
                    ty: None,
                    series: None,
                    l_max: sel.l_max,
                };
                out.extend(jobs(s, &sub)?);
            }
        }
    }
    Ok(out)
}

/// Runs a suite on the current rayon pool.
pub fn run(suite: Suite, sel: &Selection) -> Result<Vec<Report>, String> {
    let work = jobs(suite, sel)?;
    Ok(work.par_iter().map(|j| j()).collect())
}

/// `true` when no report failed.
pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn selected_runs() {
        let sel = Selection {
            ty: Some(D(12)),
            ..Default::default()
        };
        let r = run(Suite::Interlacing, &sel).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].witnesses_with("nu=").count(), 11);
        assert!(all_passed(&r));

        let sel = Selection {
            ty: Some(RootSystemType::E6),
            ..Default::default()
        };
        let r = run(Suite::Fixtures, &sel).unwrap();
        assert_eq!(r[0].status, Status::Pass);
        assert_eq!(r[1].status, Status::Skipped);
        assert!(run(Suite::Auxiliary, &sel).is_err());
    }

    #[test]
    fn order_is_deterministic() {
        let sel = Selection {
            l_max: Some(8),
            ..Default::default()
        };
        let a = run(Suite::RealRoots, &sel).unwrap();
        let b = run(Suite::RealRoots, &sel).unwrap();
        assert_eq!(a, b);
    }
}
