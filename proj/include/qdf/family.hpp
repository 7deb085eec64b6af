#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdf/blocks.hpp"
#include "qdf/gf2n.hpp"

namespace qdf {

struct DifferenceFamily {
  Field field;
  std::vector<Block> base_blocks;
  std::uint32_t lambda_claim = 7;
  // Sorted subgroup the quotients must avoid; empty for ordinary families.
  std::vector<Element> forbidden;
};

// m(t) for every t, indexed by element encoding.
struct MultiplicityProfile {
  std::vector<std::uint32_t> counts;

  std::uint64_t total() const noexcept;
  // Extremes over t not in {0, 1}.
  std::uint32_t min() const noexcept;
  std::uint32_t max() const noexcept;
  bool constant(std::uint32_t value) const noexcept {
    return min() == value && max() == value;
  }
};

// The 42 quotients b_i / b_j with i != j, row-major.
std::vector<Element> delta(const Field& f, const Block& b);

// Entry [i][j] is the i-th over the j-th element of B_x (0-based, block_of
// order); the diagonal is left 0.
using DeltaTable = std::array<std::array<Element, kBlockSize>, kBlockSize>;
DeltaTable delta_table(const Field& f, Element x);

// Direct accumulation of every quotient of every base block.
MultiplicityProfile multiplicity_profile(const DifferenceFamily& fam,
                                         unsigned threads = 1);

// An F_2-affine expression c0 + c1 * t.
struct AffineInT {
  bool one = false;
  bool t = false;

  Element eval(Element tv) const noexcept {
    return (one ? Element{1} : Element{0}) ^ (t ? tv : Element{0});
  }
  friend bool operator==(const AffineInT&, const AffineInT&) = default;
};

// E_ij(t): a x^2 + b x + c = 0 with coefficients affine in t. Indices are
// 1-based as in the block ordering (1, x, x^2, x+1, x^2+1, x^2+x, x^2+x+1).
struct EquationForm {
  unsigned i = 0;
  unsigned j = 0;
  AffineInT a, b, c;

  friend bool operator==(const EquationForm&, const EquationForm&) = default;
};

// The eighteen pairs whose equations keep a nonzero linear term.
const std::array<std::pair<unsigned, unsigned>, 18>& quadratic_pairs();

// The nine matched pairs of equations; exactly one of each is solvable.
const std::array<std::pair<EquationForm, EquationForm>, 9>& matching_table();

// E_ij(t) derived from the block polynomials after cancelling their gcd.
EquationForm reduced_equation(unsigned i, unsigned j);

struct PairOutcome {
  unsigned i = 0;
  unsigned j = 0;
  Element a = 0, b = 0, c = 0;
  unsigned count = 0;
};

struct MatchOutcome {
  std::size_t first = 0;   // index into EquationCertificate::per_pair
  std::size_t second = 0;
  bool exactly_one = false;
};

struct EquationCertificate {
  Element t = 0;
  std::vector<PairOutcome> per_pair;  // matching-table order, 18 entries
  std::array<MatchOutcome, 9> matches{};
  unsigned r = 0;

  bool matching_ok() const noexcept;
  bool ok() const noexcept { return r == 9 && matching_ok(); }
};

EquationCertificate equation_certificate(const Field& f, Element t);

// One block per hexagon, lambda 7.
DifferenceFamily build_family(const Field& f, RepresentativeSystem reps = {});

// B_x for every seed x, lambda 42.
DifferenceFamily build_full_family(const Field& f);

}  // namespace qdf
