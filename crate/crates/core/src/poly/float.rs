use super::{to_f64, MultiPoly};

/// `f64` evaluator compiled from a [`MultiPoly`], for inner loops of the numeric
/// search. Never used to decide a verdict.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    nvars: usize,
    max_exp: usize,
    // (coefficient, [(variable, exponent)])
    terms: Vec<(f64, Vec<(usize, usize)>)>,
}

impl FloatPoly {
    pub fn new(p: &MultiPoly) -> Self {
        let mut max_exp = 0;
        let terms = p
            .terms()
            .map(|(m, c)| {
                let factors: Vec<(usize, usize)> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        max_exp = max_exp.max(e as usize);
                        (i, e as usize)
                    })
                    .collect();
                (to_f64(c), factors)
            })
            .collect();
        FloatPoly {
            nvars: p.nvars(),
            max_exp,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.nvars);
        if self.max_exp <= 4 {
            return self
                .terms
                .iter()
                .map(|(c, fs)| fs.iter().fold(*c, |acc, &(i, e)| acc * x[i].powi(e as i32)))
                .sum();
        }
        // table of powers x_i^e
        let stride = self.max_exp + 1;
        let mut table = vec![1.0; self.nvars * stride];
        for (i, &xi) in x.iter().enumerate() {
            for e in 1..stride {
                table[i * stride + e] = table[i * stride + e - 1] * xi;
            }
        }
        self.terms
            .iter()
            .map(|(c, fs)| fs.iter().fold(*c, |acc, &(i, e)| acc * table[i * stride + e]))
            .sum()
    }

    /// Upper bound on `sum_i sup |dF/dx_i|` over the box `[-bound, bound]^n`.
    pub fn lipschitz_bound(&self, bound: f64) -> f64 {
        self.terms
            .iter()
            .map(|(c, fs)| {
                let deg: usize = fs.iter().map(|&(_, e)| e).sum();
                if deg == 0 {
                    0.0
                } else {
                    c.abs() * deg as f64 * bound.powi(deg as i32 - 1)
                }
            })
            .sum()
    }
}
