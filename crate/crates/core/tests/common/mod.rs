#![allow(dead_code)]

use halfdeg_core::poly::{int, rat, Monomial, MultiPoly, Rational, UniPoly};
use halfdeg_core::symmetric::elementary_family;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    rat(rng.random_range(-max_num..=max_num), rng.random_range(1..=max_den))
}

/// Random polynomial in `z_1..z_n` with every monomial of weighted degree
/// `<= d`, and at least one of weighted degree exactly `d`.
pub fn random_g(rng: &mut ChaCha8Rng, n: usize, d: u32, terms: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(n);
    let exps_for = |rng: &mut ChaCha8Rng, budget: u32, exact: bool| -> Vec<u32> {
        let mut e = vec![0u32; n];
        let mut left = budget;
        loop {
            let fits: Vec<usize> = (0..n).filter(|&i| (i as u32 + 1) <= left).collect();
            if fits.is_empty() || (!exact && rng.random_bool(0.3)) {
                break;
            }
            let i = fits[rng.random_range(0..fits.len())];
            e[i] += 1;
            left -= i as u32 + 1;
            if left == 0 {
                break;
            }
        }
        e
    };
    for t in 0..terms {
        let e = exps_for(rng, d, t == 0);
        let mut c = small_rational(rng, 5, 3);
        if c.is_zero() {
            c = Rational::one();
        }
        g = &g + &MultiPoly::monomial(Monomial::new(e), c);
    }
    g
}

/// Random symmetric `F` built by expanding a random `G` through `e_1..e_n`.
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, d: u32, terms: usize) -> (MultiPoly, MultiPoly) {
    loop {
        let g = random_g(rng, n, d, terms);
        let f = g.substitute(&elementary_family(n)).unwrap();
        if !f.is_zero() {
            return (f, g);
        }
    }
}

pub fn roots_poly(roots: &[Rational]) -> UniPoly {
    UniPoly::from_roots(roots)
}

/// Monic polynomial from `real` roots (with repeats) times irreducible quadratics
/// `t^2 + b t + c` with `b^2 < 4c`.
pub struct Constructed {
    pub poly: UniPoly,
    pub distinct_real: usize,
    pub distinct_complex: usize,
}

pub fn constructed_poly(rng: &mut ChaCha8Rng, max_degree: usize, allow_complex: bool) -> Constructed {
    let degree = rng.random_range(1..=max_degree);
    let mut quads: Vec<(Rational, Rational)> = Vec::new();
    let mut real_slots = degree;
    if allow_complex {
        while real_slots >= 2 && rng.random_bool(0.35) {
            let b = small_rational(rng, 4, 2);
            // c > b^2 / 4
            let c = &b * &b / int(4) + rat(rng.random_range(1..=9), rng.random_range(1..=3));
            // repeated complex pairs count once
            if quads.is_empty() || rng.random_bool(0.7) {
                quads.push((b, c));
            } else {
                let last = quads.last().unwrap().clone();
                quads.push(last);
            }
            real_slots -= 2;
        }
    }
    let pool: Vec<Rational> = (0..real_slots.max(1))
        .map(|_| small_rational(rng, 6, 3))
        .collect();
    let mut roots = Vec::new();
    for _ in 0..real_slots {
        roots.push(pool[rng.random_range(0..pool.len())].clone());
    }
    let mut poly = roots_poly(&roots);
    for (b, c) in &quads {
        poly = &poly * &UniPoly::new(vec![int(1), b.clone(), c.clone()]);
    }
    let mut distinct = roots.clone();
    distinct.sort();
    distinct.dedup();
    let mut dq = quads.clone();
    dq.sort();
    dq.dedup();
    Constructed {
        poly,
        distinct_real: distinct.len(),
        distinct_complex: distinct.len() + 2 * dq.len(),
    }
}

/// Random roots with at least one repeat.
pub fn repeated_roots(rng: &mut ChaCha8Rng, max_degree: usize) -> Vec<Rational> {
    loop {
        let degree = rng.random_range(2..=max_degree);
        let pool_size = rng.random_range(1..degree);
        let pool: Vec<Rational> = (0..pool_size).map(|_| small_rational(rng, 6, 2)).collect();
        let roots: Vec<Rational> = (0..degree)
            .map(|_| pool[rng.random_range(0..pool.len())].clone())
            .collect();
        let mut d = roots.clone();
        d.sort();
        d.dedup();
        if d.len() < roots.len() {
            return roots;
        }
    }
}

pub fn distinct_roots(rng: &mut ChaCha8Rng, degree: usize) -> Vec<Rational> {
    let mut roots: Vec<Rational> = Vec::new();
    while roots.len() < degree {
        let r = small_rational(rng, 8, 3);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    roots
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            let f = &m[r][col] / &m[col][col];
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Characteristic polynomial `det(x I - m)` by interpolation at `0..=n`.
pub fn charpoly(m: &[Vec<Rational>]) -> UniPoly {
    let n = m.len();
    let xs: Vec<Rational> = (0..=n as i64).map(int).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let shifted = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { x.clone() } else { Rational::zero() };
                            d - &m[i][j]
                        })
                        .collect()
                })
                .collect();
            det(shifted)
        })
        .collect();
    // Lagrange interpolation
    let mut out = UniPoly::zero();
    for (i, xi) in xs.iter().enumerate() {
        let mut basis = UniPoly::constant(Rational::one());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = &basis * &UniPoly::new(vec![Rational::one(), -xj.clone()]);
                basis = basis.scale(&(xi - xj).recip());
            }
        }
        out = &out + &basis.scale(&ys[i]);
    }
    out
}

fn sign_variations(coeffs: &[Rational]) -> usize {
    let signs: Vec<bool> = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| *c > Rational::zero())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(positive, negative, zero)` eigenvalue counts of a symmetric matrix from
/// Descartes' rule on its (real-rooted) characteristic polynomial.
pub fn inertia_oracle(m: &[Vec<Rational>]) -> (usize, usize, usize) {
    let cp = charpoly(m);
    let zero = cp.zero_root_multiplicity();
    let asc = cp.ascending();
    let pos = sign_variations(&asc);
    let neg_coeffs: Vec<Rational> = asc
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    (pos, sign_variations(&neg_coeffs), zero)
}
