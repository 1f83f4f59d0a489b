// search.hpp
//
// Conjecture scanning over frieze pairs: the Cuntz counterexample (two
// width-5 rational friezes whose middle-row differences never change sign),
// exhaustive scans over all Conway-Coxeter friezes of a width, and seeded
// randomized scans over floating friezes with exact re-verification of any
// candidate violation. Reports are deterministic for a fixed scope and seed
// regardless of the worker count.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "frieze/cyclic.hpp"
#include "frieze/errors.hpp"
#include "frieze/geometry.hpp"
#include "frieze/pattern.hpp"
#include "frieze/rational.hpp"
#include "frieze/sign_analysis.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

// A self-contained witness: rebuilding both friezes from the stored first
// rows and recounting must reproduce count < 4 exactly.
struct ViolationCert {
  std::vector<Rational> first_row_a;
  std::vector<Rational> first_row_b;
  int k = 0;
  std::vector<Rational> difference;
  int count = 0;
};

inline bool reverify(const ViolationCert& cert) {
  const FriezeQ a = FriezeQ::build_from_first_row(cert.first_row_a);
  const FriezeQ b = FriezeQ::build_from_first_row(cert.first_row_b);
  const CyclicSeq<Rational> diff = row_difference(a, b, cert.k);
  if (diff.values() != cert.difference) return false;
  const int count = sign_changes(diff);
  return count == cert.count && count < 4 && !diff.all_zero();
}

struct ScanReport {
  std::string scope;
  long pairs_checked = 0;
  long degenerate_rows = 0;  // (pair, k) combinations with all-zero difference
  std::map<int, int> min_count_per_k;  // over non-degenerate rows only
  std::vector<ViolationCert> violations;
  bool truncated = false;

  void absorb_count(int k, int count) {
    auto it = min_count_per_k.find(k);
    if (it == min_count_per_k.end()) {
      min_count_per_k.emplace(k, count);
    } else {
      it->second = std::min(it->second, count);
    }
  }

  void merge_after(ScanReport&& tail) {
    pairs_checked += tail.pairs_checked;
    degenerate_rows += tail.degenerate_rows;
    for (const auto& [k, c] : tail.min_count_per_k) absorb_count(k, c);
    violations.insert(violations.end(), std::make_move_iterator(tail.violations.begin()),
                      std::make_move_iterator(tail.violations.end()));
    truncated = truncated || tail.truncated;
  }
};

namespace detail {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs worker(chunk_index) over [0, chunks) on up to `threads` threads and
// merges the per-chunk reports in chunk order, so the final report does not
// depend on scheduling.
template <class Worker>
ScanReport run_chunked(int chunks, int threads, const Worker& worker) {
  std::vector<ScanReport> parts(chunks);
  if (threads <= 1 || chunks <= 1) {
    for (int c = 0; c < chunks; ++c) parts[c] = worker(c);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    const int team = std::min(threads, chunks);
    pool.reserve(team);
    for (int t = 0; t < team; ++t) {
      pool.emplace_back([&] {
        for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) parts[c] = worker(c);
      });
    }
    for (auto& th : pool) th.join();
  }
  ScanReport merged = std::move(parts.front());
  for (int c = 1; c < chunks; ++c) merged.merge_after(std::move(parts[c]));
  return merged;
}

}  // namespace detail

// The two period-8, width-5 friezes of the classical rational
// counterexample, ordered so the k = 3 row difference (first minus second)
// is strictly positive; its sign-change count is 0, defeating the
// four-change bound that provably holds for k = 1 and k = 2.
struct CuntzCounterexample {
  FriezeQ first;
  FriezeQ second;
  ScanReport report;
};

inline CuntzCounterexample cuntz_counterexample() {
  auto parse_row = [](std::initializer_list<const char*> tokens) {
    std::vector<Rational> row;
    for (const char* t : tokens) row.push_back(parse_rational(t));
    return row;
  };
  const std::vector<Rational> row_first = parse_row({"5", "21/97", "194", "36/97", "3", "5", "1", "5"});
  const std::vector<Rational> row_second = parse_row({"2", "2", "4", "2", "3", "18/41", "41", "30/41"});

  CuntzCounterexample out{FriezeQ::build_from_first_row(row_first),
                          FriezeQ::build_from_first_row(row_second),
                          {}};
  if (out.first.width() != 5 || !validate(out.first).ok || !validate(out.second).ok)
    throw InternalError("counterexample friezes failed validation");

  out.report.scope = "cuntz counterexample: n=8 width=5 k={1,2,3}";
  out.report.pairs_checked = 1;
  for (int k : {1, 2, 3}) {
    const auto check = check_four_sign_changes(out.first, out.second, k);
    out.report.absorb_count(k, check.count);
    if (k <= 2) {
      if (check.verdict != FourSignVerdict::satisfies_four)
        throw InternalError("counterexample violates the proven k<=2 bound");
    } else {
      const auto& diff = check.difference;
      for (std::size_t i = 0; i < diff.size(); ++i) {
        if (diff[i].sign() <= 0) throw InternalError("k=3 differences are not strictly positive");
        if (diff[i] != diff[(i + 4) % diff.size()])
          throw InternalError("k=3 difference row is not 4-periodic");
      }
      if (check.count != 0) throw InternalError("k=3 difference row has sign changes");
      ViolationCert cert{out.first.first_row(), out.second.first_row(), 3,
                         diff.values(), check.count};
      if (!reverify(cert)) throw InternalError("counterexample certificate failed re-verification");
      out.report.violations.push_back(std::move(cert));
    }
  }
  return out;
}

// Exhaustive scan over all Conway-Coxeter friezes of the given width: every
// unordered pair, every k in k_set, exact arithmetic. Stops (with
// truncated=true) once pair_cap pairs have been checked.
inline ScanReport scan_cc(int width, std::vector<int> k_set, long pair_cap = 20000000,
                          int threads = 1) {
  if (width < 1 || width > 8)
    throw CapExceeded("scan_cc supports widths 1..8, got " + std::to_string(width));
  for (int k : k_set)
    if (k < 1 || k > width) throw IndexOutOfRange("k outside [1, width]");
  std::sort(k_set.begin(), k_set.end());
  const int n = width + 3;

  std::vector<FriezeQ> friezes;
  enumerate_triangulations(n, [&](const Triangulation& t) {
    friezes.push_back(triangulation_to_frieze(t));
    return true;
  });
  const long count = static_cast<long>(friezes.size());
  const long total_pairs = count * (count - 1) / 2;
  const long scanned_pairs = std::min(total_pairs, pair_cap);

  threads = detail::resolve_threads(threads);
  const int chunks = static_cast<int>(std::max<long>(1, std::min<long>(scanned_pairs, threads * 8L)));
  const long per_chunk = (scanned_pairs + chunks - 1) / chunks;

  ScanReport report = detail::run_chunked(chunks, threads, [&](int chunk) {
    ScanReport local;
    const long begin = chunk * per_chunk;
    const long end = std::min(scanned_pairs, begin + per_chunk);
    // Walk (s, t) from the linear pair index `begin`.
    long offset = begin;
    long s = 0;
    long row_len = count - 1;
    while (offset >= row_len && row_len > 0) {
      offset -= row_len;
      ++s;
      --row_len;
    }
    long t = s + 1 + offset;
    for (long p = begin; p < end; ++p) {
      for (int k : k_set) {
        const auto check = check_four_sign_changes(friezes[s], friezes[t], k);
        if (check.verdict == FourSignVerdict::degenerate) {
          ++local.degenerate_rows;
          continue;
        }
        local.absorb_count(k, check.count);
        if (check.verdict == FourSignVerdict::violates) {
          local.violations.push_back(ViolationCert{friezes[s].first_row(),
                                                   friezes[t].first_row(), k,
                                                   check.difference.values(), check.count});
        }
      }
      ++local.pairs_checked;
      if (++t >= count) {
        ++s;
        t = s + 1;
      }
    }
    return local;
  });

  report.truncated = scanned_pairs < total_pairs;
  std::string ks;
  for (std::size_t i = 0; i < k_set.size(); ++i) ks += (i ? "," : "") + std::to_string(k_set[i]);
  report.scope = "cc width=" + std::to_string(width) + " friezes=" + std::to_string(count) +
                 " k={" + ks + "} pair_cap=" + std::to_string(pair_cap);
  return report;
}

// Exact decision on a floating candidate pair: rationalize both patterns,
// recount in exact arithmetic, and build a certificate when the violation
// is real. The exact count also replaces the floating observation.
struct ExactRecheck {
  FourSignVerdict verdict = FourSignVerdict::degenerate;
  int count = 0;
  std::vector<ViolationCert> cert;  // empty, or the single verified witness
};

inline ExactRecheck certify_candidate(const FriezeD& f, const FriezeD& g, int k) {
  const FriezeQ fq = rationalize_pattern(f);
  const FriezeQ gq = rationalize_pattern(g);
  const auto exact = check_four_sign_changes(fq, gq, k);
  ExactRecheck out;
  out.verdict = exact.verdict;
  out.count = exact.count;
  if (exact.verdict == FourSignVerdict::violates)
    out.cert.push_back(ViolationCert{fq.first_row(), gq.first_row(), k,
                                     exact.difference.values(), exact.count});
  return out;
}

// Randomized scan of `samples` pairs of floating friezes of odd period n.
// Floating counts below 4 are re-verified exactly on nearby rational
// friezes before they are certified; verified exact counts also replace
// the floating observation in the minimum statistics.
inline ScanReport scan_random(int n, std::vector<int> k_set, int samples, std::uint64_t seed,
                              int threads = 1, double zero_threshold = kDefaultZeroThreshold) {
  if (n < 5 || n % 2 == 0) throw IndexOutOfRange("scan_random needs odd n >= 5");
  const int width = n - 3;
  for (int k : k_set)
    if (k < 1 || k > width) throw IndexOutOfRange("k outside [1, width]");
  std::sort(k_set.begin(), k_set.end());

  auto sample_frieze = [&](long index) {
    for (int retry = 0;; ++retry) {
      try {
        return random_frieze(n, detail::Rng::derive_seed(seed, static_cast<std::uint64_t>(index) * 8 + retry));
      } catch (const BadAngles&) {
        if (retry >= 5) throw;
      }
    }
  };

  threads = detail::resolve_threads(threads);
  const int chunks = std::max(1, std::min(samples, threads * 8));
  const int per_chunk = (samples + chunks - 1) / chunks;

  ScanReport report = detail::run_chunked(chunks, threads, [&](int chunk) {
    ScanReport local;
    const int begin = chunk * per_chunk;
    const int end = std::min(samples, begin + per_chunk);
    for (int j = begin; j < end; ++j) {
      const FriezeD f = sample_frieze(2L * j);
      const FriezeD g = sample_frieze(2L * j + 1);
      for (int k : k_set) {
        const auto check = check_four_sign_changes(f, g, k, zero_threshold);
        if (check.verdict == FourSignVerdict::degenerate) {
          ++local.degenerate_rows;
          continue;
        }
        int count = check.count;
        if (count < 4) {
          // Candidate: decide it in exact arithmetic on nearby rational friezes.
          ExactRecheck exact = certify_candidate(f, g, k);
          if (exact.verdict == FourSignVerdict::degenerate) {
            ++local.degenerate_rows;
            continue;
          }
          count = exact.count;
          for (auto& cert : exact.cert) local.violations.push_back(std::move(cert));
        }
        local.absorb_count(k, count);
      }
      ++local.pairs_checked;
    }
    return local;
  });

  std::string ks;
  for (std::size_t i = 0; i < k_set.size(); ++i) ks += (i ? "," : "") + std::to_string(k_set[i]);
  report.scope = "random n=" + std::to_string(n) + " k={" + ks + "} samples=" +
                 std::to_string(samples) + " seed=" + std::to_string(seed);
  return report;
}

}  // namespace frieze
