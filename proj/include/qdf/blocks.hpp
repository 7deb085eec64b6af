#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdf/gf2n.hpp"

namespace qdf {

inline constexpr std::size_t kBlockSize = 7;

using BlockElements = std::array<Element, kBlockSize>;

// Seven nonzero field elements. Blocks built from a seed x keep the ordering
// (1, x, x^2, x+1, x^2+1, x^2+x, x^2+x+1); equality compares element sets.
struct Block {
  BlockElements elements{};
  std::optional<Element> seed;

  // Elements sorted ascending.
  BlockElements key() const noexcept;

  friend bool operator==(const Block& a, const Block& b) noexcept {
    return a.key() == b.key();
  }
};

// Vertices of a component of the graph on F* \ {1} whose neighbours of v are
// v + 1 and 1/v, listed as (x, x+1, 1/(x+1), x/(x+1), (x+1)/x, 1/x).
struct Hexagon {
  std::array<Element, 6> vertices{};
  Element canonical_rep = 0;

  bool contains(Element v) const noexcept;
};

struct StabilizerReport {
  std::uint32_t order = 1;
  std::vector<Element> generators;  // every t with t * B == B, sorted
};

// Orbit representative choice for one block per hexagon.
struct RepresentativeSystem {
  enum class Kind { Minimal, Maximal, Vertex };
  Kind kind = Kind::Minimal;
  unsigned vertex = 0;  // index into Hexagon::vertices when kind == Vertex

  // "min", "max" or "vertex:K" with K in [0, 5].
  static RepresentativeSystem parse(const std::string& text);
  std::string to_string() const;
  Element pick(const Hexagon& h) const noexcept;
};

Block block_of(const Field& f, Element x);

Hexagon hexagon_of(const Field& f, Element x);

// Partition of F* \ {1} into hexagons, sorted by canonical representative.
std::vector<Hexagon> hexagon_partition(const Field& f);

// True iff s has seven distinct nonzero elements and s + {0} is closed
// under addition.
bool is_subspace_block(const Field& f, std::span<const Element> s);

StabilizerReport stabilizer_of(const Field& f, const Block& b);

// t * B, elementwise in the same order.
Block scale(const Field& f, const Block& b, Element t);

// Some t with t * B_x == B_y, found by aligning 1 in B_y with every element
// of B_x.
std::optional<Element> orbit_scale(const Field& f, Element x, Element y);

// Direct orbit test; agrees with in_hexagon_orbit for odd n.
bool same_orbit(const Field& f, Element x, Element y);

// y lies on the hexagon through x.
bool in_hexagon_orbit(const Field& f, Element x, Element y);

// Lexicographically smallest sorted normalisation b^-1 * B over b in B. Two
// blocks lie in the same multiplicative orbit iff their keys are equal.
BlockElements orbit_key(const Field& f, std::span<const Element> block);

}  // namespace qdf
