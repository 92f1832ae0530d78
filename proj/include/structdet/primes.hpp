#ifndef STRUCTDET_PRIMES_HPP
#define STRUCTDET_PRIMES_HPP

#include <structdet/bigint.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <vector>

namespace structdet {

using Prime = std::uint64_t;

/*
 * Monotone cache of the primes 2, 3, 5, ... grown on demand by a segmented
 * sieve of Eratosthenes. The first segment is sieved directly; each later
 * segment [lo, hi) is crossed off using the primes already cached, which is
 * sufficient as long as hi <= lo * lo.
 *
 * Indexing is 1-based: nth(1) == 2. All public members lock an internal
 * mutex, so one cache may be shared between threads.
 */
class PrimeCache {
 public:
  static constexpr std::size_t kDefaultSegmentSize = 32768;

  explicit PrimeCache(std::size_t segment_size = kDefaultSegmentSize)
      : segment_size_(std::max<std::size_t>(segment_size, 4)) {}

  PrimeCache(const PrimeCache&) = delete;
  PrimeCache& operator=(const PrimeCache&) = delete;

  Prime nth(std::int64_t n) {
    if (n < 1) throw DomainError("prime indices are 1-based");
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_count(static_cast<std::size_t>(n));
    return primes_[static_cast<std::size_t>(n) - 1];
  }

  std::vector<Prime> first(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_count(n);
    return {primes_.begin(), primes_.begin() + static_cast<std::ptrdiff_t>(n)};
  }

  // Number of primes currently held.
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return primes_.size();
  }

  // Every integer below this bound has been classified.
  std::uint64_t sieved_limit() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return limit_;
  }

 private:
  void ensure_count(std::size_t n) {
    while (primes_.size() < n) extend();
  }

  void extend() {
    if (limit_ == 0) {
      sieve_first_segment();
      return;
    }
    const std::uint64_t lo = limit_;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + segment_size_, lo * lo);
    std::vector<char> composite(hi - lo, 0);
    for (Prime p : primes_) {
      if (p * p >= hi) break;
      std::uint64_t start = (lo + p - 1) / p * p;
      if (start < p * p) start = p * p;
      for (std::uint64_t m = start; m < hi; m += p) composite[m - lo] = 1;
    }
    for (std::uint64_t v = lo; v < hi; ++v)
      if (!composite[v - lo]) primes_.push_back(v);
    limit_ = hi;
  }

  void sieve_first_segment() {
    const std::uint64_t hi = segment_size_;
    std::vector<char> composite(hi, 0);
    composite[0] = composite[1] = 1;
    for (std::uint64_t i = 2; i * i < hi; ++i) {
      if (composite[i]) continue;
      for (std::uint64_t m = i * i; m < hi; m += i) composite[m] = 1;
    }
    for (std::uint64_t v = 2; v < hi; ++v)
      if (!composite[v]) primes_.push_back(v);
    limit_ = hi;
  }

  const std::size_t segment_size_;
  mutable std::mutex mutex_;
  std::vector<Prime> primes_;
  std::uint64_t limit_ = 0;
};

// Process-wide cache used by the free functions below.
inline PrimeCache& default_prime_cache() {
  static PrimeCache cache;
  return cache;
}

/// The n-th prime, 1-based (nth_prime(1) == 2).
inline Prime nth_prime(std::int64_t n) { return default_prime_cache().nth(n); }

/// [p_1, ..., p_n]; empty for n == 0.
inline std::vector<Prime> first_n_primes(std::size_t n) { return default_prime_cache().first(n); }

}  // namespace structdet

#endif  // STRUCTDET_PRIMES_HPP
