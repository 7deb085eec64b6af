#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qdf/blocks.hpp"
#include "qdf/family.hpp"
#include "qdf/gf2n.hpp"
#include "qdf/report.hpp"

namespace qdf {

// One multiplicative orbit of the development: length distinct blocks, each
// repeated replication times.
struct Orbit {
  Block rep;
  std::uint32_t length = 0;
  std::uint32_t replication = 1;
};

struct Design {
  Field field;
  std::vector<Orbit> orbits;
  std::uint32_t lambda_claim = 7;

  std::uint32_t v() const noexcept { return field.units(); }
  static constexpr std::uint32_t k() noexcept { return kBlockSize; }
  // Blocks counted with multiplicity.
  std::uint64_t block_count() const noexcept;
};

Design develop(const DifferenceFamily& fam);

// Multipliers t with t the smallest encoding in its coset t * stab; scaling
// the representative by these visits each distinct orbit block once.
std::vector<Element> coset_transversal(const Field& f,
                                       std::span<const Element> stabilizer);

// Calls visit(elements, replication) once per distinct developed block.
void for_each_block(
    const Design& d,
    const std::function<void(const BlockElements&, std::uint32_t)>& visit);

// Every developed block as a sorted tuple, with multiplicity, sorted.
std::vector<BlockElements> materialize(const Design& d);

// Exhaustive pair coverage. Needs 2 * v * (v - 1) bytes of counters.
VerificationReport verify_2design(const Design& d, unsigned threads = 1);

bool check_qanalog(const Design& d);

// Every orbit has trivial stabilizer and no two orbits coincide.
bool check_simple(const Design& d);

// Bytes of pair counters needed to verify a design on 2^n - 1 points.
std::uint64_t pair_counter_bytes(unsigned n) noexcept;

// Triangular array of 32-bit counters over unordered pairs of F*.
class PairCounter {
 public:
  explicit PairCounter(std::uint32_t points);

  static std::uint64_t index(Element p, Element q) noexcept {
    if (p > q) std::swap(p, q);
    const std::uint64_t hi = q - 1;
    return hi * (hi - 1) / 2 + (p - 1);
  }

  void add_block(const BlockElements& b, std::uint32_t weight) noexcept;
  void add_block_atomic(const BlockElements& b, std::uint32_t weight) noexcept;

  std::uint32_t count(Element p, Element q) const noexcept {
    return counts_[index(p, q)];
  }
  std::uint32_t points() const noexcept { return points_; }

 private:
  std::uint32_t points_;
  std::vector<std::uint32_t> counts_;
};

// Adds every developed block of d into counter, splitting orbits over threads.
void count_pairs(const Design& d, PairCounter& counter, unsigned threads);

}  // namespace qdf
