#ifndef STRUCTDET_PRIME_SEQUENCE_HPP
#define STRUCTDET_PRIME_SEQUENCE_HPP

#include <structdet/bigint.hpp>
#include <structdet/primes.hpp>
#include <structdet/structured_det.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <vector>

namespace structdet {

// D_n = det(J + diag(p_1 - 1, ..., p_n - 1)), i.e. the ones matrix with the
// first n primes on the diagonal (OEIS A067549).

// First six terms, used as the built-in ground truth.
inline constexpr std::array<long, 6> kKnownPrimeDeterminants{2, 5, 22, 140, 1448, 17856};

struct SequenceRecord {
  std::size_t n = 0;
  Prime p_n = 0;
  BigInt P_n;  // prod_{k<=n} (p_k - 1)
  BigInt D_n;

  bool operator==(const SequenceRecord&) const = default;
};

inline DiagonalShifts prime_shifts(std::size_t n) {
  std::vector<BigInt> shifts;
  shifts.reserve(n);
  for (Prime p : first_n_primes(n)) shifts.emplace_back(static_cast<unsigned long>(p - 1));
  return DiagonalShifts(std::move(shifts));
}

/// D_n from the closed form with a_k = p_k - 1 (evaluated division-free).
inline BigInt D_direct(std::int64_t n) {
  if (n < 1) throw DomainError("sequence indices are 1-based");
  return det_expanded(prime_shifts(static_cast<std::size_t>(n)));
}

/*
 * Records n = 1..count from the recurrence
 *
 *   P_n = (p_n - 1) P_{n-1},   D_n = (p_n - 1) D_{n-1} + P_{n-1},
 *
 * with D_0 = P_0 = 1. Writing D_n = P_n + sum_k P_n / (p_k - 1), the factor
 * (p_n - 1) applied to D_{n-1} produces every term except P_n / (p_n - 1).
 */
inline std::vector<SequenceRecord> D_sequence(std::size_t count) {
  std::vector<SequenceRecord> records;
  records.reserve(count);
  BigInt P(1);
  BigInt D(1);
  const auto primes = first_n_primes(count);
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt shift(static_cast<unsigned long>(primes[i] - 1));
    D = shift * D + P;
    P *= shift;
    records.push_back({i + 1, primes[i], P, D});
  }
  return records;
}

struct KnownValueMismatch {
  std::size_t n;
  BigInt expected;
  BigInt actual;
};

// Compares the leading records against the built-in fixture.
inline std::vector<KnownValueMismatch> check_known(const std::vector<SequenceRecord>& records) {
  std::vector<KnownValueMismatch> mismatches;
  const std::size_t m = std::min(records.size(), kKnownPrimeDeterminants.size());
  for (std::size_t i = 0; i < m; ++i) {
    BigInt expected(kKnownPrimeDeterminants[i]);
    if (records[i].D_n != expected) mismatches.push_back({records[i].n, expected, records[i].D_n});
  }
  return mismatches;
}

struct VerifyOptions {
  std::size_t oracle_cutoff = 64;
  unsigned workers = 1;
  // Optional reference values keyed by n, e.g. from a b-file.
  std::map<std::size_t, BigInt> reference;
};

struct VerificationEntry {
  std::size_t n = 0;
  BigInt recurrence;
  BigInt direct;
  std::optional<BigInt> oracle;
  std::optional<BigInt> reference;

  bool direct_agrees() const { return direct == recurrence; }
  bool oracle_agrees() const { return !oracle || *oracle == recurrence; }
  bool reference_agrees() const { return !reference || *reference == recurrence; }
  bool ok() const { return direct_agrees() && oracle_agrees() && reference_agrees(); }
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;
  std::optional<std::size_t> first_failure;

  bool passed() const { return !first_failure.has_value(); }

  std::size_t oracle_checks() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const auto& e) { return e.oracle.has_value(); }));
  }
  std::size_t reference_checks() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const auto& e) { return e.reference.has_value(); }));
  }
};

/*
 * Cross-checks the recurrence against D_direct for every n <= count, against
 * Bareiss on the materialized matrix for n <= oracle_cutoff, and against any
 * supplied reference values. Divergence is reported, not thrown.
 *
 * Oracle evaluations are independent and are spread over `workers` threads;
 * entries are always ordered by n.
 */
inline VerificationReport verify_sequence(std::size_t count, const VerifyOptions& options = {}) {
  if (count < 1) throw DomainError("verification needs count >= 1");
  const auto records = D_sequence(count);

  VerificationReport report;
  report.entries.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto& e = report.entries[i];
    e.n = records[i].n;
    e.recurrence = records[i].D_n;
    e.direct = D_direct(static_cast<std::int64_t>(e.n));
    if (auto it = options.reference.find(e.n); it != options.reference.end()) e.reference = it->second;
  }

  const std::size_t oracle_count = std::min(count, options.oracle_cutoff);
  const unsigned workers = std::max(1u, options.workers);
  auto run_oracles = [&](std::size_t offset) {
    for (std::size_t i = offset; i < oracle_count; i += workers)
      report.entries[i].oracle = det_bareiss(materialize_matrix(prime_shifts(i + 1)));
  };
  if (workers == 1) {
    run_oracles(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run_oracles, w));
    for (auto& job : jobs) job.get();
  }

  for (const auto& e : report.entries) {
    if (!e.ok()) {
      report.first_failure = e.n;
      break;
    }
  }
  return report;
}

}  // namespace structdet

#endif  // STRUCTDET_PRIME_SEQUENCE_HPP
