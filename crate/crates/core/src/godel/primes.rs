/// Growable list of primes, `nth(1) == 2`.
#[derive(Debug, Clone)]
pub struct Primes {
    known: Vec<u64>,
}

impl Default for Primes {
    fn default() -> Self {
        Primes { known: vec![2, 3] }
    }
}

impl Primes {
    pub fn new() -> Self {
        Self::default()
    }

    /// The `index`-th prime, 1-based.
    pub fn nth(&mut self, index: usize) -> u64 {
        assert!(index >= 1, "primes are numbered from 1");
        while self.known.len() < index {
            let mut candidate = self.known.last().unwrap() + 2;
            while !self.is_prime_with_known(candidate) {
                candidate += 2;
            }
            self.known.push(candidate);
        }
        self.known[index - 1]
    }

    fn is_prime_with_known(&self, n: u64) -> bool {
        self.known
            .iter()
            .take_while(|&&p| p * p <= n)
            .all(|&p| !n.is_multiple_of(p))
    }
}
