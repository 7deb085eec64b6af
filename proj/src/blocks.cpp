#include "qdf/blocks.hpp"

#include <algorithm>

#include "qdf/error.hpp"

namespace qdf {

BlockElements Block::key() const noexcept {
  BlockElements k = elements;
  std::sort(k.begin(), k.end());
  return k;
}

bool Hexagon::contains(Element v) const noexcept {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

RepresentativeSystem RepresentativeSystem::parse(const std::string& text) {
  if (text == "min") return {};
  if (text == "max") return {Kind::Maximal, 0};
  if (text.size() == 8 && text.starts_with("vertex:") && text[7] >= '0' &&
      text[7] <= '5') {
    return {Kind::Vertex, static_cast<unsigned>(text[7] - '0')};
  }
  throw Error(ErrorCode::InvalidInput,
              "seed system must be min, max or vertex:0..5, got '" + text + "'");
}

std::string RepresentativeSystem::to_string() const {
  switch (kind) {
    case Kind::Minimal: return "min";
    case Kind::Maximal: return "max";
    case Kind::Vertex: return "vertex:" + std::to_string(vertex);
  }
  return "min";
}

Element RepresentativeSystem::pick(const Hexagon& h) const noexcept {
  switch (kind) {
    case Kind::Minimal: return h.canonical_rep;
    case Kind::Maximal:
      return *std::max_element(h.vertices.begin(), h.vertices.end());
    case Kind::Vertex: return h.vertices[vertex % 6];
  }
  return h.canonical_rep;
}

namespace {

void require_seed(const Field& f, Element x) {
  f.check(x);
  if (x <= 1) {
    throw Error(ErrorCode::ForbiddenSeed,
                "seed must not be 0 or 1, got " + std::to_string(x));
  }
}

}  // namespace

Block block_of(const Field& f, Element x) {
  require_seed(f, x);
  const Element x2 = f.sqr(x);
  return Block{{1, x, x2, x ^ 1, x2 ^ 1, x2 ^ x, x2 ^ x ^ 1}, x};
}

Hexagon hexagon_of(const Field& f, Element x) {
  require_seed(f, x);
  const Element x1 = x ^ 1;
  const Element inv_x = f.inv(x);
  const Element inv_x1 = f.inv(x1);
  Hexagon h;
  h.vertices = {x, x1, inv_x1, f.mul(x, inv_x1), f.mul(x1, inv_x), inv_x};
  h.canonical_rep = *std::min_element(h.vertices.begin(), h.vertices.end());
  return h;
}

std::vector<Hexagon> hexagon_partition(const Field& f) {
  std::vector<Hexagon> out;
  out.reserve((f.size() - 2) / 6);
  std::vector<bool> seen(f.size(), false);
  for (Element x = 2; x < f.size(); ++x) {
    if (seen[x]) continue;
    Hexagon h = hexagon_of(f, x);
    for (Element v : h.vertices) seen[v] = true;
    out.push_back(h);
  }
  // Ascending scan makes the first unseen vertex the minimum of its hexagon.
  return out;
}

bool is_subspace_block(const Field& f, std::span<const Element> s) {
  if (s.size() != kBlockSize) return false;
  BlockElements sorted{};
  std::copy(s.begin(), s.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.end());
  if (sorted[0] == 0 || !f.contains(sorted.back())) return false;
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    for (std::size_t j = i + 1; j < kBlockSize; ++j) {
      if (!std::binary_search(sorted.begin(), sorted.end(), sorted[i] ^ sorted[j])) {
        return false;
      }
    }
  }
  return true;
}

Block scale(const Field& f, const Block& b, Element t) {
  Block out;
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    out.elements[i] = f.mul(t, b.elements[i]);
  }
  return out;
}

StabilizerReport stabilizer_of(const Field& f, const Block& b) {
  // t * B == B forces t * b0 in B, leaving seven candidates.
  const BlockElements target = b.key();
  const Element inv_b0 = f.inv(b.elements[0]);
  StabilizerReport report;
  for (Element e : b.elements) {
    const Element t = f.mul(e, inv_b0);
    if (scale(f, b, t).key() == target) report.generators.push_back(t);
  }
  std::sort(report.generators.begin(), report.generators.end());
  report.order = static_cast<std::uint32_t>(report.generators.size());
  return report;
}

std::optional<Element> orbit_scale(const Field& f, Element x, Element y) {
  const Block bx = block_of(f, x);
  const BlockElements target = block_of(f, y).key();
  std::optional<Element> found;
  for (Element e : bx.elements) {
    const Element t = f.inv(e);
    if (scale(f, bx, t).key() == target && (!found || t < *found)) found = t;
  }
  return found;
}

bool same_orbit(const Field& f, Element x, Element y) {
  return orbit_scale(f, x, y).has_value();
}

bool in_hexagon_orbit(const Field& f, Element x, Element y) {
  require_seed(f, y);
  return hexagon_of(f, x).contains(y);
}

BlockElements orbit_key(const Field& f, std::span<const Element> block) {
  BlockElements best{};
  bool first = true;
  for (Element b : block) {
    const Element inv_b = f.inv(b);
    BlockElements candidate{};
    for (std::size_t i = 0; i < kBlockSize; ++i) {
      candidate[i] = f.mul(block[i], inv_b);
    }
    std::sort(candidate.begin(), candidate.end());
    if (first || candidate < best) best = candidate;
    first = false;
  }
  return best;
}

}  // namespace qdf
