//! Parallel census pipelines.
//!
//! Work is split into independent per-degree or per-surface pieces, run on a
//! dedicated thread pool, and merged in input order, so the output never
//! depends on the number of threads.

use fk3_core::census::{
    analyze_surface, brute_force_degree, census_key, cubic_fourfold, extra_families_of_degree,
    fourfolds_from_k3_with, k3_surfaces_of_degree, SurfaceRecord, K3_SEARCH_BOUND,
};
use fk3_core::{analyze_family, FamilyRecord, Fk3Filter, WeightSystem};
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

pub struct Driver {
    pool: ThreadPool,
}

impl Driver {
    /// `jobs = None` uses one thread per available core.
    pub fn new(jobs: Option<usize>) -> Result<Self, ThreadPoolBuildError> {
        let pool = ThreadPoolBuilder::new()
            .num_threads(jobs.unwrap_or(0))
            .build()?;
        Ok(Driver { pool })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    fn per_degree<T: Send>(
        &self,
        degrees: std::ops::RangeInclusive<i64>,
        f: impl Fn(i64) -> Vec<T> + Sync + Send,
    ) -> Vec<T> {
        self.pool.install(|| {
            let chunks: Vec<Vec<T>> = degrees.into_par_iter().map(f).collect();
            chunks.into_iter().flatten().collect()
        })
    }

    /// The K3 census over every degree up to the search bound.
    pub fn k3_surfaces(&self) -> Vec<WeightSystem> {
        self.per_degree(1..=K3_SEARCH_BOUND, k3_surfaces_of_degree)
    }

    pub fn analyze_surfaces(&self, k3s: &[WeightSystem]) -> Vec<SurfaceRecord> {
        self.pool.install(|| {
            k3s.par_iter()
                .map(|s| analyze_surface(s).expect("census surfaces are quasi-smooth"))
                .collect()
        })
    }

    /// Fourfold weight systems built from `k3s`, plus the cubic, deduplicated and sorted.
    pub fn fourfolds(&self, k3s: &[WeightSystem], filter: Fk3Filter) -> Vec<WeightSystem> {
        let mut list: Vec<WeightSystem> = self.pool.install(|| {
            k3s.par_iter()
                .flat_map_iter(|s| fourfolds_from_k3_with(s, filter))
                .collect()
        });
        list.push(cubic_fourfold());
        list.sort_by(|x, y| census_key(x).cmp(&census_key(y)));
        list.dedup();
        list
    }

    pub fn analyze_families(&self, list: &[WeightSystem]) -> Vec<FamilyRecord> {
        self.pool.install(|| {
            list.par_iter()
                .map(|w| analyze_family(w).expect("census families pass conditions (1)-(4)"))
                .collect()
        })
    }

    /// Direct six-loop sweep for every degree up to `d_max`.
    pub fn brute_force(&self, d_max: i64, filter: Fk3Filter) -> Vec<WeightSystem> {
        // Cost grows like d^4; splitting by degree keeps the pool busy anyway.
        self.per_degree(1..=d_max, |d| brute_force_degree(d, filter))
    }

    /// The `d = 2 a_5` sweep up to `d_max`, analyzed.
    pub fn extra_families(&self, d_max: i64) -> Vec<FamilyRecord> {
        let list = self.per_degree(1..=d_max, extra_families_of_degree);
        self.analyze_families(&list)
    }
}
