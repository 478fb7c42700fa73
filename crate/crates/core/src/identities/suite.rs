use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;

use super::{IdentityReport, Outcome, Workbench};
use crate::lucas::DEFAULT_MAX_INDEX;

macro_rules! families {
    ($($variant:ident => $id:literal [$($param:literal),*]),* $(,)?) => {
        /// A parametrized family of checks, one report per grid point.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Family {
            $($variant),*
        }

        impl Family {
            pub const ALL: &'static [Family] = &[$(Family::$variant),*];

            pub fn id(self) -> &'static str {
                match self {
                    $(Family::$variant => $id),*
                }
            }

            /// Parameter names, in grid order.
            pub fn params(self) -> &'static [&'static str] {
                match self {
                    $(Family::$variant => &[$($param),*]),*
                }
            }
        }
    };
}

families! {
    Atoms => "atoms" ["n"],
    AtomsFib => "atoms-fib" ["n"],
    CatalanLucas => "catalan-lucas" ["n"],
    CorollaryClassical => "corollary-classical" ["n"],
    CorollaryFib => "corollary-fib" ["n"],
    CorollaryLucas => "corollary-lucas" ["n"],
    DoublingFib => "doubling-fib" ["n"],
    DoublingLucas => "doubling-lucas" ["n"],
    GcdFib => "gcd-fib" ["n"],
    GenFib => "gen-fib" ["r", "n"],
    GenLucas => "gen-lucas" ["r", "n"],
    LemmaFib => "lemma-fib" ["n"],
    LemmaLucas => "lemma-lucas" ["n"],
    Lucanomial => "lucanomial" ["n", "k"],
    MainFib => "main-fib" ["n"],
    MainLucas => "main-lucas" ["n"],
    MikicCatalan => "mikic-catalan" ["n"],
    MikicSuper => "mikic-super" ["n", "l"],
    QuotientFib => "quotient-fib" ["n"],
    QuotientLucas => "quotient-lucas" ["n"],
    RatcatLucas => "ratcat-lucas" ["a", "b"],
    RelationFib => "relation-fib" ["m", "n"],
    SpecialFibM1 => "special-fib-m1" ["n"],
    SpecialFibM2 => "special-fib-m2" ["n"],
    SpecialFibMm => "special-fib-mm" ["m"],
    SpecialFibMm1 => "special-fib-mm1" ["m"],
    SpecialFibR0 => "special-fib-r0" ["n"],
    SpecialFibR1 => "special-fib-r1" ["n"],
    SpecialLucasM1 => "special-lucas-m1" ["n"],
    SpecialLucasM2 => "special-lucas-m2" ["n"],
    SpecialLucasMm => "special-lucas-mm" ["m"],
    SpecialLucasMm1 => "special-lucas-mm1" ["m"],
    SpecialLucasR0 => "special-lucas-r0" ["n"],
    SpecialLucasR1 => "special-lucas-r1" ["n"],
    SpecializeLucas => "specialize-lucas" ["n"],
    SuperFib => "super-fib" ["m", "n"],
    SuperLucas => "super-lucas" ["m", "n"],
    SuperLucasKdiv => "super-lucas-kdiv" ["m", "n", "k"],
    VonSzily => "von-szily" ["m", "n"],
    VonSzilyFibNaive => "von-szily-fib-naive" ["m", "n"],
}

impl Family {
    /// Whether the point lies in the family's domain. Points outside are
    /// skipped by the suite rather than reported.
    pub fn admits(self, p: &[usize]) -> bool {
        use Family::*;
        if p.len() != self.params().len() {
            return false;
        }
        match self {
            Atoms | AtomsFib | CorollaryClassical | CorollaryFib | CorollaryLucas | DoublingFib
            | DoublingLucas | GcdFib | LemmaFib | LemmaLucas | MainFib | MainLucas
            | QuotientFib | QuotientLucas | SpecializeLucas => p[0] >= 1,
            SuperFib | SuperLucas | VonSzily | VonSzilyFibNaive => p[0] + p[1] >= 1,
            SuperLucasKdiv => p[0] + p[1] >= 1 && p[2] >= 1,
            RelationFib => p[0] >= 1,
            Lucanomial => p[1] <= p[0],
            RatcatLucas => p[0] >= 1 && p[1] >= 1 && p[0].gcd(&p[1]) == 1,
            _ => true,
        }
    }

    /// The acceptance grid.
    pub fn default_grid(self) -> Vec<RangeInclusive<usize>> {
        use Family::*;
        match self {
            Atoms | AtomsFib => vec![2..=60],
            SuperLucas => vec![0..=12, 0..=12],
            GenLucas => vec![0..=6, 0..=12],
            SuperFib => vec![0..=30, 0..=30],
            GenFib => vec![0..=8, 0..=30],
            SpecialFibM1 | SpecialFibM2 | SpecialFibMm | SpecialFibMm1 | SpecialFibR0
            | SpecialFibR1 => vec![0..=25],
            RelationFib => vec![1..=12, 0..=25],
            LemmaFib | MainFib | QuotientFib | CorollaryFib => vec![1..=50],
            GcdFib => vec![1..=60],
            DoublingFib => vec![1..=100],
            CorollaryClassical => vec![2..=2],
            LemmaLucas | MainLucas | QuotientLucas | CorollaryLucas | SpecializeLucas => {
                vec![1..=25]
            }
            DoublingLucas => vec![1..=40],
            SpecialLucasM1 | SpecialLucasM2 | SpecialLucasMm | SpecialLucasMm1 | SpecialLucasR0
            | SpecialLucasR1 => {
                vec![0..=25]
            }
            SuperLucasKdiv => vec![0..=8, 0..=8, 1..=4],
            Lucanomial => vec![0..=30, 0..=30],
            CatalanLucas => vec![0..=20],
            RatcatLucas => vec![1..=15, 1..=15],
            VonSzily => vec![0..=15, 0..=15],
            VonSzilyFibNaive => vec![1..=1, 1..=1],
            MikicSuper => vec![0..=8, 0..=8],
            MikicCatalan => vec![0..=15],
        }
    }

    /// Runs the check at one point; evaluation errors become failing reports.
    pub fn evaluate(self, wb: &Workbench, p: &[usize]) -> IdentityReport {
        use Family::*;
        let result = match self {
            Atoms => wb.verify_atoms(p[0]),
            AtomsFib => wb.verify_atoms_fib(p[0]),
            CatalanLucas => wb.verify_catalan_lucas(p[0]),
            CorollaryClassical => wb.verify_corollary_classical(p[0]),
            CorollaryFib => wb.verify_corollary_fib(p[0]),
            CorollaryLucas => wb.verify_corollary_lucas(p[0]),
            DoublingFib => wb.verify_doubling_fib(p[0]),
            DoublingLucas => wb.verify_doubling_lucas(p[0]),
            GcdFib => wb.verify_gcd_fib(p[0]),
            GenFib => wb.verify_gen_fib(p[0], p[1]),
            GenLucas => wb.verify_gen_lucas(p[0], p[1]),
            LemmaFib => wb.verify_lemma_fib(p[0]),
            LemmaLucas => wb.verify_lemma_lucas(p[0]),
            Lucanomial => wb.verify_lucanomial(p[0], p[1]),
            MainFib => wb.verify_main_fib(p[0]),
            MainLucas => wb.verify_main_lucas(p[0]),
            MikicCatalan => wb.verify_mikic_catalan(p[0]),
            MikicSuper => wb.verify_mikic_super(p[0], p[1]),
            QuotientFib => wb.verify_quotient_fib(p[0]),
            QuotientLucas => wb.verify_quotient_lucas(p[0]),
            RatcatLucas => wb.verify_ratcat_lucas(p[0], p[1]),
            RelationFib => wb.verify_relation_fib(p[0], p[1]),
            SpecialFibM1 => wb.verify_special_fib_m1(p[0]),
            SpecialFibM2 => wb.verify_special_fib_m2(p[0]),
            SpecialFibMm => wb.verify_special_fib_mm(p[0]),
            SpecialFibMm1 => wb.verify_special_fib_mm1(p[0]),
            SpecialFibR0 => wb.verify_special_fib_r0(p[0]),
            SpecialFibR1 => wb.verify_special_fib_r1(p[0]),
            SpecialLucasM1 => wb.verify_special_lucas_m1(p[0]),
            SpecialLucasM2 => wb.verify_special_lucas_m2(p[0]),
            SpecialLucasMm => wb.verify_special_lucas_mm(p[0]),
            SpecialLucasMm1 => wb.verify_special_lucas_mm1(p[0]),
            SpecialLucasR0 => wb.verify_special_lucas_r0(p[0]),
            SpecialLucasR1 => wb.verify_special_lucas_r1(p[0]),
            SpecializeLucas => wb.verify_specialize_lucas(p[0]),
            SuperFib => wb.verify_super_fib(p[0], p[1]),
            SuperLucas => wb.verify_super_lucas(p[0], p[1]),
            SuperLucasKdiv => wb.verify_super_lucas_kdiv(p[0], p[1], p[2]),
            VonSzily => wb.verify_von_szily(p[0], p[1]),
            VonSzilyFibNaive => wb.verify_von_szily_fib_naive(p[0], p[1]),
        };
        result.unwrap_or_else(|e| {
            let params: Vec<(&str, usize)> = self
                .params()
                .iter()
                .copied()
                .zip(p.iter().copied())
                .collect();
            IdentityReport::errored(self.id(), &params, &e)
        })
    }

    /// Admissible points of the grid, in lexicographic order.
    pub fn points(self, ranges: &[RangeInclusive<usize>]) -> Vec<Vec<usize>> {
        let mut points = vec![Vec::new()];
        for r in ranges {
            points = points
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    r.clone().map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        points.retain(|p| self.admits(p));
        points
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.id() == s)
            .ok_or_else(|| format!("unknown identity family `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Families to run, each with one inclusive range per parameter.
    pub families: Vec<(Family, Vec<RangeInclusive<usize>>)>,
    /// Worker threads; 0 lets the pool decide.
    pub parallelism: usize,
    pub max_index: usize,
}

impl SuiteConfig {
    pub fn empty() -> Self {
        SuiteConfig {
            families: Vec::new(),
            parallelism: 0,
            max_index: DEFAULT_MAX_INDEX,
        }
    }

    /// Every family over its acceptance grid.
    pub fn acceptance() -> Self {
        Self::of(Family::ALL)
    }

    /// The given families over their acceptance grids.
    pub fn of(families: &[Family]) -> Self {
        SuiteConfig {
            families: families.iter().map(|&f| (f, f.default_grid())).collect(),
            ..Self::empty()
        }
    }

    pub fn with(mut self, family: Family, ranges: Vec<RangeInclusive<usize>>) -> Self {
        self.families.push((family, ranges));
        self
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self::acceptance()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    /// Sorted by identity id, then parameter values.
    pub reports: Vec<IdentityReport>,
    pub passed: usize,
    pub failed: usize,
    /// Reports carrying no expectation.
    pub informational: usize,
    pub timings: Vec<(Family, Duration)>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| r.outcome() == Outcome::Fail)
    }

    fn from_reports(mut reports: Vec<IdentityReport>, timings: Vec<(Family, Duration)>) -> Self {
        reports.sort_by(|a, b| (&a.id, a.param_values()).cmp(&(&b.id, b.param_values())));
        let count = |o| reports.iter().filter(|r| r.outcome() == o).count();
        SuiteReport {
            passed: count(Outcome::Pass),
            failed: count(Outcome::Fail),
            informational: count(Outcome::Info),
            reports,
            timings,
        }
    }
}

/// Runs every configured family on a fresh workbench.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    run_suite_on(&Workbench::new(config.max_index), config)
}

/// Runs every configured family, evaluating points concurrently against
/// the shared caches.
pub fn run_suite_on(wb: &Workbench, config: &SuiteConfig) -> SuiteReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .expect("thread pool");
    let mut reports = Vec::new();
    let mut timings = Vec::new();
    for (family, ranges) in &config.families {
        let start = Instant::now();
        let points = family.points(ranges);
        let batch: Vec<IdentityReport> =
            pool.install(|| points.par_iter().map(|p| family.evaluate(wb, p)).collect());
        timings.push((*family, start.elapsed()));
        reports.extend(batch);
    }
    SuiteReport::from_reports(reports, timings)
}

/// Exact division, coefficient sign, valuation verdict and specialization
/// for the super Lucas, generalized Lucas and k-divisible super Lucas
/// families. Families of `config` outside those three are ignored.
pub fn verify_polynomiality_theorems(wb: &Workbench, config: &SuiteConfig) -> SuiteReport {
    let mut config = config.clone();
    config.families.retain(|(f, _)| {
        matches!(
            f,
            Family::SuperLucas | Family::GenLucas | Family::SuperLucasKdiv
        )
    });
    run_suite_on(wb, &config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_and_are_sorted() {
        for f in Family::ALL {
            assert_eq!(f.id().parse::<Family>().unwrap(), *f);
            assert_eq!(f.default_grid().len(), f.params().len(), "{f}");
        }
        let ids: Vec<_> = Family::ALL.iter().map(|f| f.id()).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn empty_config_gives_empty_report() {
        let r = run_suite(&SuiteConfig::empty());
        assert!(r.reports.is_empty());
        assert_eq!((r.passed, r.failed, r.informational), (0, 0, 0));
    }

    #[test]
    fn contrast_at_two_is_one_expected_negative() {
        let r = run_suite(&SuiteConfig::empty().with(Family::CorollaryClassical, vec![2..=2]));
        assert_eq!(r.reports.len(), 1);
        assert!(!r.reports[0].verdict);
        assert_eq!((r.passed, r.failed), (1, 0));
    }

    #[test]
    fn ordering_is_deterministic_across_parallelism() {
        let mut cfg = SuiteConfig::empty()
            .with(Family::VonSzily, vec![0..=4, 0..=4])
            .with(Family::LemmaFib, vec![1..=10])
            .with(Family::SuperLucas, vec![0..=3, 0..=3]);
        cfg.parallelism = 1;
        let serial = run_suite(&cfg);
        cfg.parallelism = 4;
        let parallel = run_suite(&cfg);
        assert_eq!(serial.reports, parallel.reports);
        assert_eq!(serial.reports[0].id, "lemma-fib");
        assert!(serial.all_passed());
        assert_eq!(
            serial.passed + serial.failed + serial.informational,
            serial.reports.len()
        );
    }

    #[test]
    fn domain_filters() {
        assert!(!Family::SuperLucas.admits(&[0, 0]));
        assert!(!Family::RatcatLucas.admits(&[2, 4]));
        assert!(Family::RatcatLucas.admits(&[2, 3]));
        assert!(!Family::Lucanomial.admits(&[2, 3]));
        assert_eq!(Family::MainFib.points(&[0..=3]).len(), 3);
    }

    #[test]
    fn guard_errors_become_failures() {
        let wb = Workbench::new(10);
        let r = Family::MainLucas.evaluate(&wb, &[20]);
        assert!(r.lhs.starts_with("error:"));
        assert_eq!(r.outcome(), Outcome::Fail);
    }
}
