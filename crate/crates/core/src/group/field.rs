//! Arithmetic in a prime field `F_p` with `p < 2^31`.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..(1 << 31)).contains(&p));
        PrimeField { p }
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn reduce(self, x: u64) -> u64 {
        x % self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be non-zero.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Basis of the right null space of a `rows x cols` matrix.
    pub fn null_space(self, matrix: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = matrix.to_vec();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(pivot) = (row..m.len()).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(row, pivot);
            let scale = self.inv(m[row][col]);
            for x in m[row].iter_mut() {
                *x = self.mul(*x, scale);
            }
            for i in 0..m.len() {
                if i != row && m[i][col] != 0 {
                    let factor = m[i][col];
                    for j in 0..cols {
                        let delta = self.mul(factor, m[row][j]);
                        m[i][j] = self.sub(m[i][j], delta);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, m[r][f]);
                }
                v
            })
            .collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Smallest prime `p` with `p = 1 (mod exponent)` and `p > 2 * order`.
pub fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let exponent = exponent.max(1);
    let mut p = (2 * order).div_ceil(exponent) * exponent + 1;
    while !is_prime(p) {
        p += exponent;
    }
    p
}
