use crate::error::{Error, Result};

/// All primes up to and including `limit`, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeList {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeList {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Sieves until at least `count` primes are available.
    pub fn with_count(count: usize) -> Self {
        let n = count.max(6) as f64;
        // Rosser's bound p_n < n (ln n + ln ln n) for n >= 6.
        let mut limit = (n * (n.ln() + n.ln().ln())).ceil() as u64;
        loop {
            let list = sieve_primes(limit).expect("limit is at least 2");
            if list.len() >= count {
                return list;
            }
            limit *= 2;
        }
    }
}

/// Sieve of Eratosthenes.
///
/// Crossing out stops at the largest prime not exceeding `sqrt(limit)`;
/// everything left standing is prime.
pub fn sieve_primes(limit: u64) -> Result<PrimeList> {
    if limit < 2 {
        return Err(Error::invalid(format!("sieve limit must be >= 2, got {limit}")));
    }
    let size = usize::try_from(limit)
        .ok()
        .and_then(|l| l.checked_add(1))
        .ok_or_else(|| Error::Capacity(format!("sieve limit {limit} does not fit in memory")))?;
    let mut composite = vec![false; size];
    let mut p = 2usize;
    while p * p <= limit as usize {
        if !composite[p] {
            for multiple in (p * p..size).step_by(p) {
                composite[multiple] = true;
            }
        }
        p += 1;
    }
    let primes = (2..size).filter(|&k| !composite[k]).map(|k| k as u64).collect();
    Ok(PrimeList { limit, primes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_prime_by_trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn primes_to_thirty() {
        let list = sieve_primes(30).unwrap();
        assert_eq!(list.as_slice(), &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn smallest_limit() {
        assert_eq!(sieve_primes(2).unwrap().as_slice(), &[2]);
    }

    #[test]
    fn primes_to_one_thousand() {
        let list = sieve_primes(1000).unwrap();
        let oracle: Vec<u64> = (2..=1000).filter(|&n| is_prime_by_trial_division(n)).collect();
        assert_eq!(list.as_slice(), oracle.as_slice());
        assert_eq!(list.len(), 168);
        assert_eq!(*list.as_slice().last().unwrap(), 997);
    }

    #[test]
    fn rejects_small_limits() {
        assert!(matches!(sieve_primes(1), Err(Error::InvalidArgument(_))));
        assert!(matches!(sieve_primes(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn agrees_with_trial_division_up_to_ten_thousand() {
        let full = sieve_primes(10_000).unwrap();
        for limit in 2..=10_000u64 {
            let expected = full.as_slice().partition_point(|&p| p <= limit);
            let list = sieve_primes(limit).unwrap();
            assert_eq!(list.as_slice(), &full.as_slice()[..expected], "limit {limit}");
        }
        for &p in full.as_slice() {
            assert!(is_prime_by_trial_division(p));
        }
        let missing = (2..=10_000u64).filter(|&n| is_prime_by_trial_division(n)).count();
        assert_eq!(missing, full.len());
    }

    #[test]
    fn with_count_covers_request() {
        for count in [1, 2, 5, 6, 10, 51, 100, 1000] {
            let list = PrimeList::with_count(count);
            assert!(list.len() >= count);
            assert_eq!(list.as_slice()[0], 2);
        }
    }
}
