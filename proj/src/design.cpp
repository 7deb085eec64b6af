#include "qdf/design.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace qdf {

std::uint64_t Design::block_count() const noexcept {
  std::uint64_t b = 0;
  for (const Orbit& o : orbits) b += std::uint64_t{o.length} * o.replication;
  return b;
}

Design develop(const DifferenceFamily& fam) {
  const Field& f = fam.field;
  Design d{f, {}, fam.lambda_claim};
  d.orbits.reserve(fam.base_blocks.size());
  for (const Block& b : fam.base_blocks) {
    const StabilizerReport stab = stabilizer_of(f, b);
    d.orbits.push_back(Orbit{b, f.units() / stab.order, stab.order});
  }
  return d;
}

std::vector<Element> coset_transversal(const Field& f,
                                       std::span<const Element> stabilizer) {
  std::vector<Element> out;
  out.reserve(f.units() / std::max<std::size_t>(stabilizer.size(), 1));
  for (Element t = 1; t < f.size(); ++t) {
    bool smallest = true;
    for (Element s : stabilizer) {
      if (f.mul(t, s) < t) {
        smallest = false;
        break;
      }
    }
    if (smallest) out.push_back(t);
  }
  return out;
}

namespace {

std::vector<Element> orbit_multipliers(const Field& f, const Orbit& o) {
  return coset_transversal(f, stabilizer_of(f, o.rep).generators);
}

void scale_into(const Field& f, const Block& rep, Element t, BlockElements& out) {
  for (std::size_t i = 0; i < kBlockSize; ++i) out[i] = f.mul(t, rep.elements[i]);
}

}  // namespace

void for_each_block(
    const Design& d,
    const std::function<void(const BlockElements&, std::uint32_t)>& visit) {
  BlockElements scaled{};
  for (const Orbit& o : d.orbits) {
    for (Element t : orbit_multipliers(d.field, o)) {
      scale_into(d.field, o.rep, t, scaled);
      visit(scaled, o.replication);
    }
  }
}

std::vector<BlockElements> materialize(const Design& d) {
  std::vector<BlockElements> out;
  out.reserve(d.block_count());
  for_each_block(d, [&](const BlockElements& b, std::uint32_t replication) {
    BlockElements sorted = b;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t r = 0; r < replication; ++r) out.push_back(sorted);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t pair_counter_bytes(unsigned n) noexcept {
  const std::uint64_t v = (std::uint64_t{1} << n) - 1;
  return v * (v - 1) / 2 * sizeof(std::uint32_t);
}

PairCounter::PairCounter(std::uint32_t points)
    : points_(points),
      counts_(static_cast<std::size_t>(std::uint64_t{points} * (points - 1) / 2), 0) {}

void PairCounter::add_block(const BlockElements& b, std::uint32_t weight) noexcept {
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    for (std::size_t j = i + 1; j < kBlockSize; ++j) {
      counts_[index(b[i], b[j])] += weight;
    }
  }
}

void PairCounter::add_block_atomic(const BlockElements& b,
                                   std::uint32_t weight) noexcept {
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    for (std::size_t j = i + 1; j < kBlockSize; ++j) {
      std::atomic_ref<std::uint32_t>(counts_[index(b[i], b[j])])
          .fetch_add(weight, std::memory_order_relaxed);
    }
  }
}

void count_pairs(const Design& d, PairCounter& counter, unsigned threads) {
  const Field& f = d.field;
  threads = std::max(1u, threads);
  if (threads == 1) {
    for_each_block(d, [&](const BlockElements& b, std::uint32_t w) {
      counter.add_block(b, w);
    });
    return;
  }
  // Addition commutes, so relaxed atomic increments give scheduling-independent
  // totals.
  auto work = [&](unsigned w) {
    BlockElements scaled{};
    for (std::size_t k = w; k < d.orbits.size(); k += threads) {
      const Orbit& o = d.orbits[k];
      for (Element t : orbit_multipliers(f, o)) {
        scale_into(f, o.rep, t, scaled);
        counter.add_block_atomic(scaled, o.replication);
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
}

VerificationReport verify_2design(const Design& d, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.lambda_claim = d.lambda_claim;
  const std::uint32_t v = d.v();

  PairCounter counter(v);
  count_pairs(d, counter, threads);
  report.blocks_counted = d.block_count();

  std::uint32_t lo = UINT32_MAX, hi = 0;
  std::vector<std::uint64_t> replication(v + 1, 0);
  for (Element q = 2; q <= v; ++q) {
    for (Element p = 1; p < q; ++p) {
      const std::uint32_t c = counter.count(p, q);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      replication[p] += c;
      replication[q] += c;
      if (c != d.lambda_claim && report.offending_pairs.size() < kMaxOffenders) {
        report.offending_pairs.push_back({p, q, c});
      }
    }
  }
  if (v >= 2) {
    report.coverage_min = lo;
    report.coverage_max = hi;
  }
  const bool coverage_ok = report.offending_pairs.empty();
  report.checks.push_back({"pair_coverage", coverage_ok,
                           "every pair of distinct points in exactly lambda blocks"});

  const std::uint64_t lhs = report.blocks_counted * kBlockSize * (kBlockSize - 1);
  const std::uint64_t rhs = std::uint64_t{d.lambda_claim} * v * (v - 1);
  report.checks.push_back({"counting_identity", lhs == rhs,
                           "b*k*(k-1) = " + std::to_string(lhs) +
                               ", lambda*v*(v-1) = " + std::to_string(rhs)});

  // Each block through p contributes k-1 pairs at p.
  const std::uint64_t expected_r =
      std::uint64_t{d.lambda_claim} * (v - 1) / (kBlockSize - 1);
  bool replication_ok = true;
  for (Element p = 1; p <= v; ++p) {
    if (replication[p] != expected_r * (kBlockSize - 1)) replication_ok = false;
  }
  report.checks.push_back({"replication", replication_ok,
                           "every point in r = " + std::to_string(expected_r) +
                               " blocks"});

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

bool check_qanalog(const Design& d) {
  return std::all_of(d.orbits.begin(), d.orbits.end(), [&](const Orbit& o) {
    return is_subspace_block(d.field, o.rep.elements);
  });
}

bool check_simple(const Design& d) {
  std::set<BlockElements> keys;
  for (const Orbit& o : d.orbits) {
    if (o.replication != 1) return false;
    if (!keys.insert(orbit_key(d.field, o.rep.elements)).second) return false;
  }
  return true;
}

}  // namespace qdf
