//! Deterministic work partitioning: the index space is cut into fixed-size
//! blocks, workers claim blocks from a shared counter, and results come back
//! in block order. Any randomness is keyed by block index, so output does not
//! depend on the number of workers.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

/// Runs `job(block)` for every block in `0..blocks` on up to `workers`
/// threads and returns the results in block order. On failure, the error of
/// the lowest failing block is returned.
pub fn run_blocks<T, F>(blocks: u64, workers: usize, job: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync,
{
    let workers = workers.max(1).min(blocks.max(1) as usize);
    if workers == 1 {
        return (0..blocks).map(&job).collect();
    }
    let next = AtomicU64::new(0);
    let done = Mutex::new(Vec::with_capacity(blocks as usize));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| {
                let mut local = Vec::new();
                loop {
                    let b = next.fetch_add(1, Ordering::Relaxed);
                    if b >= blocks {
                        break;
                    }
                    local.push((b, job(b)));
                }
                done.lock().expect("worker panicked").extend(local);
            });
        }
    });
    let mut done = done.into_inner().expect("worker panicked");
    done.sort_by_key(|(b, _)| *b);
    done.into_iter().map(|(_, r)| r).collect()
}

/// Number of blocks of size `block` covering `total` items.
pub fn block_count(total: u64, block: u64) -> u64 {
    total.div_ceil(block)
}

/// Item range of block `b`.
pub fn block_range(total: u64, block: u64, b: u64) -> std::ops::Range<u64> {
    let start = b * block;
    start..(start + block).min(total)
}

/// The RNG stream owned by block `b` under master seed `seed`.
pub fn block_rng(seed: u64, b: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(b);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use rand::Rng;

    #[test]
    fn order_and_determinism() {
        let one = run_blocks(37, 1, |b| Ok(block_rng(9, b).gen::<u64>() ^ b)).unwrap();
        for w in [2, 3, 8, 64] {
            assert_eq!(run_blocks(37, w, |b| Ok(block_rng(9, b).gen::<u64>() ^ b)).unwrap(), one);
        }
    }

    #[test]
    fn lowest_error_wins() {
        let r: Result<Vec<u64>> = run_blocks(50, 4, |b| {
            if b % 7 == 3 {
                Err(Error::Internal(format!("{b}")))
            } else {
                Ok(b)
            }
        });
        assert_eq!(r.unwrap_err(), Error::Internal("3".into()));
    }

    #[test]
    fn ranges_cover() {
        let total = 103;
        let ranges: Vec<_> = (0..block_count(total, 10)).map(|b| block_range(total, 10, b)).collect();
        assert_eq!(ranges.len(), 11);
        assert_eq!(ranges.last().unwrap().clone(), 100..103);
        assert_eq!(block_count(0, 10), 0);
    }
}
