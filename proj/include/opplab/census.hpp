#pragma once

// Exhaustive opposition census over all pairs of Bruhat intervals of S_n.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "opplab/coxeter.hpp"
#include "opplab/opposition.hpp"
#include "opplab/polytope.hpp"

namespace opplab {

/// Worker count: OPPLAB_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("OPPLAB_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(std::min<long>(value, 256));
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Calls body(i) for 0 <= i < count on up to `threads` workers, each taking
/// a strided share. Results must be written to per-index slots.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body body) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Precomputed data of one interval for fast pairwise tests: its elements as
/// a bitset over S_n, and for each k the prefix sets x([k]) as a bitset over
/// subset masks.
struct IntervalSummary {
  static constexpr int max_n = 5;

  BruhatInterval interval;
  std::bitset<120> elements;
  std::vector<std::uint64_t> projections;

  static std::vector<IntervalSummary> all(int n) {
    if (n < 1 || n > max_n) throw InputError("census: n must lie in [1, " + std::to_string(max_n) + "]");
    const auto perms = all_permutations(n);
    std::vector<IntervalSummary> out;
    for (auto& interval : all_intervals(n)) {
      IntervalSummary s{interval, {}, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
      for (std::size_t idx = 0; idx < perms.size(); ++idx) {
        const auto& x = perms[idx];
        if (!interval.contains(x)) continue;
        s.elements.set(idx);
        unsigned mask = 0;
        for (int k = 1; k < n; ++k) {
          mask |= 1u << (x(k) - 1);
          s.projections[static_cast<std::size_t>(k)] |= std::uint64_t{1} << mask;
        }
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  bool intersects(const IntervalSummary& other) const { return (elements & other.elements).any(); }

  bool opposed(const IntervalSummary& other) const {
    for (std::size_t k = 1; k < projections.size(); ++k)
      if ((projections[k] & other.projections[k]) == 0) return false;
    return true;
  }
};

struct CensusEntry {
  BruhatInterval first;
  BruhatInterval second;
  bool opposed = false;
  bool intersect = false;
  bool bip_intersect = false;
};

struct CensusReport {
  int n = 0;
  std::vector<CensusEntry> entries;
  std::size_t opposed = 0;
  std::size_t intersect = 0;
  std::size_t bip_intersect = 0;
  std::size_t opposed_disjoint = 0;
  std::size_t bip_violations = 0;
};

/// Every unordered pair {I, J} (I = J included) in lexicographic order of
/// (I, J). Intersecting intervals share a vertex, so their polytopes meet
/// without an LP.
inline CensusReport census_opposed(int n, int threads = thread_count()) {
  const auto summaries = IntervalSummary::all(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < summaries.size(); ++i)
    for (std::size_t j = i; j < summaries.size(); ++j) pairs.emplace_back(i, j);
  std::vector<PointSet> vertices(summaries.size());
  for (std::size_t i = 0; i < summaries.size(); ++i) vertices[i] = bip_vertices(summaries[i].interval);

  std::vector<CensusEntry> entries(pairs.size(), CensusEntry{summaries[0].interval, summaries[0].interval});
  parallel_for(pairs.size(), threads, [&](std::size_t idx) {
    const auto& a = summaries[pairs[idx].first];
    const auto& b = summaries[pairs[idx].second];
    CensusEntry e{a.interval, b.interval};
    e.opposed = a.opposed(b);
    e.intersect = a.intersects(b);
    e.bip_intersect = e.intersect || hulls_intersect(vertices[pairs[idx].first], vertices[pairs[idx].second]);
    entries[idx] = std::move(e);
  });

  CensusReport report;
  report.n = n;
  for (const auto& e : entries) {
    report.opposed += e.opposed;
    report.intersect += e.intersect;
    report.bip_intersect += e.bip_intersect;
    report.opposed_disjoint += e.opposed && !e.intersect;
    report.bip_violations += e.opposed && !e.bip_intersect;
  }
  report.entries = std::move(entries);
  return report;
}

}  // namespace opplab
