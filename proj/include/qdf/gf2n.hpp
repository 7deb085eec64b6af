#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qdf {

// Polynomial-basis coordinate vector of an element of GF(2^n); bit i is the
// coefficient of z^i.
using Element = std::uint32_t;

// Binary polynomial as a bitmask, bit i = coefficient of z^i.
using Poly = std::uint64_t;

inline constexpr unsigned kMinDegree = 3;
inline constexpr unsigned kMaxDegree = 25;

namespace poly {

int degree(Poly p) noexcept;  // -1 for the zero polynomial
Poly mod(Poly a, Poly m) noexcept;
Poly clmul(Poly a, Poly b) noexcept;
Poly gcd(Poly a, Poly b) noexcept;

// Trial division by every polynomial of degree 1..deg(p)/2.
bool is_irreducible(Poly p) noexcept;

// Smallest bitmask of degree n that is irreducible.
Poly smallest_irreducible(unsigned n);

}  // namespace poly

struct QuadraticOutcome {
  enum class Kind {
    Quadratic,   // a != 0, b != 0
    PureSquare,  // a != 0, b == 0
    Linear,      // a == 0, b != 0
    Constant,    // a == b == 0, c != 0
  };
  Kind kind = Kind::Quadratic;
  unsigned count = 0;
  std::array<Element, 2> roots{};

  std::span<const Element> solutions() const noexcept {
    return {roots.data(), count};
  }
};

// GF(2^n) for odd n in [3, 25]. Immutable after construction and cheap to
// copy; every member function is a pure function of its arguments.
class Field {
 public:
  // Default modulus is the lexicographically smallest irreducible
  // polynomial of degree n.
  static Field make(unsigned n, std::optional<Poly> modulus = std::nullopt);

  unsigned degree() const noexcept { return n_; }
  Poly modulus() const noexcept { return modulus_; }
  // 2^n
  std::uint32_t size() const noexcept { return std::uint32_t{1} << n_; }
  // 2^n - 1, the order of the multiplicative group.
  std::uint32_t units() const noexcept { return size() - 1; }
  bool contains(Element a) const noexcept { return a < size(); }
  // Throws InvalidElement if a is out of range.
  void check(Element a) const;

  static constexpr Element add(Element a, Element b) noexcept { return a ^ b; }
  Element mul(Element a, Element b) const noexcept;
  Element sqr(Element a) const noexcept { return mul(a, a); }
  Element pow(Element a, std::uint64_t e) const noexcept;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  // Absolute trace onto F_2.
  unsigned trace(Element a) const noexcept;
  // sum_{i=0}^{(n-1)/2} a^(4^i); solves y^2 + y = a whenever trace(a) == 0.
  Element half_trace(Element a) const noexcept;
  // a^(2^(n-1)), the unique square root.
  Element sqrt(Element a) const noexcept;

  // Distinct roots of a x^2 + b x + c = 0. Throws AllZeroCoefficients for
  // the identically zero equation.
  QuadraticOutcome solve_quadratic(Element a, Element b, Element c) const;

  // Elements with x^(2^d) == x, sorted ascending. Throws NotADivisor.
  std::vector<Element> subfield(unsigned d) const;

  friend bool operator==(const Field& lhs, const Field& rhs) noexcept {
    return lhs.n_ == rhs.n_ && lhs.modulus_ == rhs.modulus_;
  }

 private:
  Field(unsigned n, Poly modulus);

  unsigned n_;
  Poly modulus_;
  Element trace_mask_ = 0;
};

}  // namespace qdf
