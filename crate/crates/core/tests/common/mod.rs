#![allow(dead_code)]

use std::thread;

use palrich::oracle::{enumerate_words, enumerate_words_up_to};
use palrich::Word;

/// Every word over `k` letters of length `1..=max_len`.
pub fn nonempty_words(k: usize, max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|n| enumerate_words(k, n).unwrap()).collect()
}

/// Every word over `k` letters of length `0..=max_len`.
pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    enumerate_words_up_to(k, max_len).unwrap().collect()
}

/// The sweep sizes: length <= 12 over 2 letters and <= 9 over 3 letters.
pub fn sweep_words() -> Vec<Word> {
    let mut words = all_words(2, 12);
    words.extend(all_words(3, 9).into_iter().filter(|w| w.contains(&b'c')));
    words
}

/// Runs `f` over `items` on all cores and returns the failures, in input order.
pub fn par_failures<T, F>(items: &[T], f: F) -> Vec<String>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    let threads = thread::available_parallelism().map_or(4, |n| n.get());
    let chunk = items.len().div_ceil(threads).max(1);
    thread::scope(|s| {
        let handles: Vec<_> =
            items.chunks(chunk).map(|part| s.spawn(|| part.iter().filter_map(&f).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    })
}

/// `Ok` when there are no failures, otherwise the first few.
pub fn verdict(failures: Vec<String>) -> Result<(), String> {
    if failures.is_empty() {
        Ok(())
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        Err(format!("{} failures, e.g. {}", failures.len(), shown.join("; ")))
    }
}

pub fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}
