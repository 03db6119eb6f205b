//! Seeded instance sets shared by the benchmarks.

use subtrans::{random_hfree, ClassLabel, GeneratorConfig, Instance};

/// `count` instances of `class` on `n` vertices, seeds `0..count`.
pub fn instances(class: ClassLabel, n: usize, count: u64) -> Vec<Instance> {
    let cfg = GeneratorConfig::default();
    (0..count)
        .map(|seed| random_hfree(n, class, seed, &cfg).expect("generator budget"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets_are_reproducible() {
        let a = instances(ClassLabel::P1P3Free, 9, 3);
        assert_eq!(a, instances(ClassLabel::P1P3Free, 9, 3));
        assert!(a.iter().all(|g| g.n() == 9));
    }
}
