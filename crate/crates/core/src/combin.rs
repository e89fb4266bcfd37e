//! Exact binomials with the convention `C(n, k) = 0` outside `0 ≤ k ≤ n`.

pub fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// `C(n, 2)` for unsigned arguments.
pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn pow2(e: u32) -> u64 {
    1u64.checked_shl(e)
        .filter(|_| e < 64)
        .expect("power of two overflows u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions() {
        assert_eq!(binom(5, 0), 1);
        assert_eq!(binom(5, -1), 0);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(10, 4), 210);
        assert_eq!(binom(62, 31), 465428353255261088);
    }

    #[test]
    fn pascal() {
        for n in 1..40 {
            for k in 0..=n {
                assert_eq!(binom(n, k), binom(n - 1, k) + binom(n - 1, k - 1));
            }
        }
    }
}
