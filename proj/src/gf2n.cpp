#include "qdf/gf2n.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qdf/error.hpp"

namespace qdf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EvenDegree: return "EvenDegree";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::AllZeroCoefficients: return "AllZeroCoefficients";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::ForbiddenSeed: return "ForbiddenSeed";
    case ErrorCode::DegenerateT: return "DegenerateT";
    case ErrorCode::WrongResidue: return "WrongResidue";
    case ErrorCode::SubfieldBlockMissing: return "SubfieldBlockMissing";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NeedsForce: return "NeedsForce";
  }
  return "Unknown";
}

namespace poly {

int degree(Poly p) noexcept {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

Poly mod(Poly a, Poly m) noexcept {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

Poly clmul(Poly a, Poly b) noexcept {
  Poly r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b) noexcept {
  while (b != 0) {
    Poly r = mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

bool is_irreducible(Poly p) noexcept {
  const int d = degree(p);
  if (d < 1) return false;
  // Divisors of degree k lie in [2^k, 2^(k+1)).
  for (int k = 1; 2 * k <= d; ++k) {
    for (Poly q = Poly{1} << k; q < (Poly{1} << (k + 1)); ++q) {
      if (mod(p, q) == 0) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(unsigned n) {
  for (Poly p = Poly{1} << n; p < (Poly{1} << (n + 1)); ++p) {
    if (is_irreducible(p)) return p;
  }
  throw Error(ErrorCode::InvalidModulus,
              "no irreducible polynomial of degree " + std::to_string(n));
}

}  // namespace poly

Field Field::make(unsigned n, std::optional<Poly> modulus) {
  if (n % 2 == 0) {
    throw Error(ErrorCode::EvenDegree,
                "extension degree must be odd, got " + std::to_string(n));
  }
  if (n < kMinDegree || n > kMaxDegree) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "extension degree must lie in [3, 25], got " + std::to_string(n));
  }
  if (!modulus) return Field(n, poly::smallest_irreducible(n));
  if (poly::degree(*modulus) != static_cast<int>(n)) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus " + std::to_string(*modulus) + " does not have degree " +
                    std::to_string(n));
  }
  if (!poly::is_irreducible(*modulus)) {
    throw Error(ErrorCode::ReduciblePolynomial,
                "modulus " + std::to_string(*modulus) + " is reducible");
  }
  return Field(n, *modulus);
}

Field::Field(unsigned n, Poly modulus) : n_(n), modulus_(modulus) {
  // Trace is F_2-linear, so it is parity against the traces of the basis.
  for (unsigned i = 0; i < n_; ++i) {
    const Element basis = Element{1} << i;
    Element acc = 0;
    Element power = basis;
    for (unsigned k = 0; k < n_; ++k) {
      acc ^= power;
      power = sqr(power);
    }
    if (acc == 1) trace_mask_ |= basis;
  }
}

void Field::check(Element a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::InvalidElement,
                "element " + std::to_string(a) + " outside GF(2^" +
                    std::to_string(n_) + ")");
  }
}

Element Field::mul(Element a, Element b) const noexcept {
  Poly r = poly::clmul(a, b);
  for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i) {
    if ((r >> i) & 1) r ^= modulus_ << (i - static_cast<int>(n_));
  }
  return static_cast<Element>(r);
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = sqr(a);
    e >>= 1;
  }
  return result;
}

Element Field::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse");
  check(a);
  // Extended Euclid: track u with u*a == r (mod modulus).
  Poly r0 = modulus_, r1 = a;
  Poly u0 = 0, u1 = 1;
  while (r1 != 1) {
    const int shift = poly::degree(r0) - poly::degree(r1);
    if (shift < 0) {
      std::swap(r0, r1);
      std::swap(u0, u1);
      continue;
    }
    r0 ^= r1 << shift;
    u0 ^= u1 << shift;
    if (poly::degree(r0) < poly::degree(r1)) {
      std::swap(r0, r1);
      std::swap(u0, u1);
    }
  }
  return static_cast<Element>(poly::mod(u1, modulus_));
}

unsigned Field::trace(Element a) const noexcept {
  return static_cast<unsigned>(std::popcount(a & trace_mask_) & 1);
}

Element Field::half_trace(Element a) const noexcept {
  Element acc = 0;
  Element term = a;
  for (unsigned i = 0; i <= (n_ - 1) / 2; ++i) {
    acc ^= term;
    term = sqr(sqr(term));
  }
  return acc;
}

Element Field::sqrt(Element a) const noexcept {
  for (unsigned i = 0; i + 1 < n_; ++i) a = sqr(a);
  return a;
}

QuadraticOutcome Field::solve_quadratic(Element a, Element b, Element c) const {
  check(a);
  check(b);
  check(c);
  QuadraticOutcome out;
  if (a == 0 && b == 0) {
    if (c == 0) {
      throw Error(ErrorCode::AllZeroCoefficients,
                  "0 = 0 is not an equation in x");
    }
    out.kind = QuadraticOutcome::Kind::Constant;
    return out;
  }
  if (a == 0) {
    out.kind = QuadraticOutcome::Kind::Linear;
    out.count = 1;
    out.roots[0] = div(c, b);
    return out;
  }
  if (b == 0) {
    out.kind = QuadraticOutcome::Kind::PureSquare;
    out.count = 1;
    out.roots[0] = sqrt(div(c, a));
    return out;
  }
  // x = (b/a) y turns the equation into y^2 + y = ac/b^2.
  const Element u = div(mul(a, c), sqr(b));
  out.kind = QuadraticOutcome::Kind::Quadratic;
  if (trace(u) != 0) return out;
  const Element scale = div(b, a);
  const Element y = half_trace(u);
  Element r0 = mul(scale, y);
  Element r1 = mul(scale, y ^ 1);
  if (r1 < r0) std::swap(r0, r1);
  out.count = 2;
  out.roots = {r0, r1};
  return out;
}

std::vector<Element> Field::subfield(unsigned d) const {
  if (d == 0 || n_ % d != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(d) + " does not divide " + std::to_string(n_));
  }
  // Kernel of the F_2-linear map x -> x^(2^d) + x. Rows pack the image in
  // the low 32 bits and the preimage combination in the high 32 bits.
  std::array<std::uint64_t, 32> pivots{};
  std::vector<Element> kernel;
  for (unsigned i = 0; i < n_; ++i) {
    const Element basis = Element{1} << i;
    Element image = basis;
    for (unsigned k = 0; k < d; ++k) image = sqr(image);
    std::uint64_t row = (std::uint64_t{basis} << 32) | (image ^ basis);
    for (int bit = static_cast<int>(n_) - 1; bit >= 0; --bit) {
      if (((row >> bit) & 1) == 0) continue;
      if (pivots[bit] == 0) {
        pivots[bit] = row;
        row = 0;
        break;
      }
      row ^= pivots[bit];
    }
    if (row != 0) kernel.push_back(static_cast<Element>(row >> 32));
  }
  std::vector<Element> out;
  out.reserve(std::size_t{1} << kernel.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << kernel.size()); ++mask) {
    Element e = 0;
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      if ((mask >> j) & 1) e ^= kernel[j];
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qdf
