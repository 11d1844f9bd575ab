//! Fixed inputs shared by the benchmarks.

use halfdeg_core::poly::int;
use halfdeg_core::symmetric::{elementary_family, power_sum};
use halfdeg_core::{MultiPoly, UniPoly};

/// `p_2^2 - 2 p_1 p_3 + e_n` style symmetric polynomial of degree `max(4, n)`.
pub fn mixed_symmetric(n: usize) -> MultiPoly {
    let p = |k| power_sum(k, n).expect("k >= 1");
    let e = elementary_family(n);
    let lead = &p(2).pow(2) - &(&p(1) * &p(3)).scale(&int(2));
    &lead + &e[n - 1]
}

/// `prod (t - i)^(i mod 3 + 1)` over `i = 1..=k`.
pub fn repeated_root_poly(k: i64) -> UniPoly {
    let roots: Vec<_> = (1..=k)
        .flat_map(|i| std::iter::repeat_n(int(i), (i % 3 + 1) as usize))
        .collect();
    UniPoly::from_roots(&roots)
}
