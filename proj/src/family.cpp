#include "qdf/family.hpp"

#include <algorithm>
#include <thread>

#include "qdf/error.hpp"

namespace qdf {

std::uint64_t MultiplicityProfile::total() const noexcept {
  std::uint64_t sum = 0;
  for (std::uint32_t c : counts) sum += c;
  return sum;
}

std::uint32_t MultiplicityProfile::min() const noexcept {
  if (counts.size() <= 2) return 0;
  return *std::min_element(counts.begin() + 2, counts.end());
}

std::uint32_t MultiplicityProfile::max() const noexcept {
  if (counts.size() <= 2) return 0;
  return *std::max_element(counts.begin() + 2, counts.end());
}

std::vector<Element> delta(const Field& f, const Block& b) {
  std::vector<Element> out;
  out.reserve(kBlockSize * (kBlockSize - 1));
  std::array<Element, kBlockSize> inverse{};
  for (std::size_t j = 0; j < kBlockSize; ++j) inverse[j] = f.inv(b.elements[j]);
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    for (std::size_t j = 0; j < kBlockSize; ++j) {
      if (i != j) out.push_back(f.mul(b.elements[i], inverse[j]));
    }
  }
  return out;
}

DeltaTable delta_table(const Field& f, Element x) {
  const Block b = block_of(f, x);
  DeltaTable table{};
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    for (std::size_t j = 0; j < kBlockSize; ++j) {
      if (i != j) table[i][j] = f.div(b.elements[i], b.elements[j]);
    }
  }
  return table;
}

MultiplicityProfile multiplicity_profile(const DifferenceFamily& fam,
                                         unsigned threads) {
  const Field& f = fam.field;
  const std::size_t nblocks = fam.base_blocks.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::size_t>(nblocks, 1))));
  std::vector<std::vector<std::uint32_t>> partial(
      threads, std::vector<std::uint32_t>(f.size(), 0));
  auto work = [&](unsigned w) {
    auto& counts = partial[w];
    for (std::size_t k = w; k < nblocks; k += threads) {
      for (Element q : delta(f, fam.base_blocks[k])) ++counts[q];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  MultiplicityProfile profile{std::move(partial[0])};
  for (unsigned w = 1; w < threads; ++w) {
    for (std::size_t e = 0; e < profile.counts.size(); ++e) {
      profile.counts[e] += partial[w][e];
    }
  }
  return profile;
}

const std::array<std::pair<unsigned, unsigned>, 18>& quadratic_pairs() {
  static const std::array<std::pair<unsigned, unsigned>, 18> pairs{{
      {1, 6}, {1, 7}, {2, 5}, {2, 7}, {3, 4}, {3, 7}, {4, 3}, {4, 7}, {5, 2},
      {5, 7}, {6, 1}, {6, 7}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5}, {7, 6},
  }};
  return pairs;
}

namespace {

constexpr AffineInT kOne{true, false};
constexpr AffineInT kT{false, true};
constexpr AffineInT kTPlusOne{true, true};

constexpr EquationForm eq(unsigned i, unsigned j, AffineInT a, AffineInT b,
                          AffineInT c) {
  return EquationForm{i, j, a, b, c};
}

// The block_of elements as polynomials in x over F_2.
constexpr std::array<Poly, kBlockSize> kBlockPolys{0b001, 0b010, 0b100, 0b011,
                                                   0b101, 0b110, 0b111};

Poly poly_quotient(Poly a, Poly d) {
  Poly q = 0;
  const int dd = poly::degree(d);
  for (int da = poly::degree(a); da >= dd; da = poly::degree(a)) {
    q |= Poly{1} << (da - dd);
    a ^= d << (da - dd);
  }
  return q;
}

}  // namespace

const std::array<std::pair<EquationForm, EquationForm>, 9>& matching_table() {
  static const std::array<std::pair<EquationForm, EquationForm>, 9> table{{
      {eq(6, 1, kOne, kOne, kT), eq(7, 1, kOne, kOne, kTPlusOne)},
      {eq(1, 6, kT, kT, kOne), eq(1, 7, kT, kT, kTPlusOne)},
      {eq(5, 2, kOne, kT, kOne), eq(3, 7, kTPlusOne, kT, kT)},
      {eq(7, 2, kOne, kTPlusOne, kOne), eq(2, 7, kT, kTPlusOne, kT)},
      {eq(4, 3, kT, kOne, kOne), eq(7, 3, kTPlusOne, kOne, kOne)},
      {eq(7, 4, kOne, kTPlusOne, kTPlusOne), eq(4, 7, kT, kTPlusOne, kTPlusOne)},
      {eq(7, 5, kTPlusOne, kOne, kTPlusOne), eq(2, 5, kT, kOne, kT)},
      {eq(7, 6, kTPlusOne, kTPlusOne, kOne), eq(6, 7, kTPlusOne, kTPlusOne, kT)},
      {eq(3, 4, kOne, kT, kT), eq(5, 7, kTPlusOne, kT, kTPlusOne)},
  }};
  return table;
}

EquationForm reduced_equation(unsigned i, unsigned j) {
  if (i < 1 || j < 1 || i > kBlockSize || j > kBlockSize || i == j) {
    throw Error(ErrorCode::InvalidInput, "equation indices must be distinct in 1..7");
  }
  // P_i(x) / P_j(x) = t  <=>  N(x) + t D(x) = 0 once the common factor is gone.
  Poly num = kBlockPolys[i - 1];
  Poly den = kBlockPolys[j - 1];
  const Poly g = poly::gcd(num, den);
  num = poly_quotient(num, g);
  den = poly_quotient(den, g);
  auto coeff = [&](int k) {
    return AffineInT{((num >> k) & 1) != 0, ((den >> k) & 1) != 0};
  };
  return EquationForm{i, j, coeff(2), coeff(1), coeff(0)};
}

bool EquationCertificate::matching_ok() const noexcept {
  return std::all_of(matches.begin(), matches.end(),
                     [](const MatchOutcome& m) { return m.exactly_one; });
}

EquationCertificate equation_certificate(const Field& f, Element t) {
  f.check(t);
  if (t <= 1) {
    throw Error(ErrorCode::DegenerateT, "t must not be 0 or 1");
  }
  EquationCertificate cert;
  cert.t = t;
  cert.per_pair.reserve(18);
  auto solve = [&](const EquationForm& e) {
    PairOutcome p{e.i, e.j, e.a.eval(t), e.b.eval(t), e.c.eval(t), 0};
    p.count = f.solve_quadratic(p.a, p.b, p.c).count;
    if (p.count == 2) ++cert.r;
    cert.per_pair.push_back(p);
    return cert.per_pair.size() - 1;
  };
  const auto& table = matching_table();
  for (std::size_t m = 0; m < table.size(); ++m) {
    const std::size_t first = solve(table[m].first);
    const std::size_t second = solve(table[m].second);
    const bool s1 = cert.per_pair[first].count == 2;
    const bool s2 = cert.per_pair[second].count == 2;
    cert.matches[m] = MatchOutcome{first, second, s1 != s2};
  }
  return cert;
}

DifferenceFamily build_family(const Field& f, RepresentativeSystem reps) {
  DifferenceFamily fam{f, {}, 7, {}};
  const auto hexagons = hexagon_partition(f);
  fam.base_blocks.reserve(hexagons.size());
  for (const Hexagon& h : hexagons) fam.base_blocks.push_back(block_of(f, reps.pick(h)));
  return fam;
}

DifferenceFamily build_full_family(const Field& f) {
  DifferenceFamily fam{f, {}, 42, {}};
  fam.base_blocks.reserve(f.size() - 2);
  for (Element x = 2; x < f.size(); ++x) fam.base_blocks.push_back(block_of(f, x));
  return fam;
}

}  // namespace qdf
