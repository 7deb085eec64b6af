#include <doctest.h>

#include <algorithm>
#include <set>

#include "qdf/blocks.hpp"
#include "qdf/error.hpp"
#include "qdf/family.hpp"

using qdf::Element;
using qdf::Field;

namespace {

std::set<Element> as_set(std::span<const Element> s) { return {s.begin(), s.end()}; }

// Every block t * B_x, t in F*, as sorted tuples.
std::set<qdf::BlockElements> orbit_of(const Field& f, Element x) {
  std::set<qdf::BlockElements> out;
  const qdf::Block b = qdf::block_of(f, x);
  for (Element t = 1; t < f.size(); ++t) out.insert(qdf::scale(f, b, t).key());
  return out;
}

}  // namespace

TEST_SUITE("blocks") {

TEST_CASE("block_of follows the seven-element ordering") {
  const Field f = Field::make(3);
  const auto b = qdf::block_of(f, 0b010);
  CHECK(b.elements == qdf::BlockElements{1, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});
  CHECK(as_set(b.elements) == std::set<Element>{1, 2, 3, 4, 5, 6, 7});
  CHECK(b.seed == Element{2});
  CHECK_THROWS_AS(qdf::block_of(f, 1), qdf::Error);
  CHECK_THROWS_AS(qdf::block_of(f, 0), qdf::Error);
}

TEST_CASE("B_x and B_(x+1) coincide") {
  for (unsigned n : {5u, 7u, 9u}) {
    const Field f = Field::make(n);
    for (Element x = 2; x < f.size(); ++x) {
      REQUIRE(qdf::block_of(f, x) == qdf::block_of(f, x ^ 1));
    }
  }
}

TEST_CASE("every block is a 3-dimensional subspace minus zero, n <= 13") {
  for (unsigned n = 3; n <= 13; n += 2) {
    const Field f = Field::make(n);
    for (Element x = 2; x < f.size(); ++x) {
      const auto b = qdf::block_of(f, x);
      REQUIRE(as_set(b.elements).size() == 7);
      REQUIRE(qdf::is_subspace_block(f, b.elements));
    }
  }
}

TEST_CASE("hexagon_of") {
  const Field f3 = Field::make(3);
  for (Element x = 2; x < 8; ++x) {
    CHECK(as_set(qdf::hexagon_of(f3, x).vertices) == std::set<Element>{2, 3, 4, 5, 6, 7});
  }
  for (unsigned n : {5u, 7u, 9u}) {
    const Field f = Field::make(n);
    for (Element x = 2; x < f.size(); ++x) {
      const auto h = qdf::hexagon_of(f, x);
      REQUIRE(as_set(h.vertices) == as_set(qdf::hexagon_of(f, f.inv(x)).vertices));
      REQUIRE(as_set(h.vertices).size() == 6);
      REQUIRE(h.canonical_rep == *std::min_element(h.vertices.begin(), h.vertices.end()));
      // Consecutive vertices differ by one of the two moves.
      for (std::size_t i = 0; i < 6; ++i) {
        const Element a = h.vertices[i], b = h.vertices[(i + 1) % 6];
        REQUIRE((b == (a ^ 1) || b == f.inv(a)));
        REQUIRE(a > 1);
      }
    }
  }
  CHECK_THROWS_AS(qdf::hexagon_of(f3, 1), qdf::Error);
}

TEST_CASE("hexagon_partition") {
  CHECK(qdf::hexagon_partition(Field::make(3)).size() == 1);
  CHECK(qdf::hexagon_partition(Field::make(9)).size() == 85);
  for (unsigned n : {5u, 7u, 9u, 11u}) {
    const Field f = Field::make(n);
    const auto parts = qdf::hexagon_partition(f);
    CHECK(parts.size() == (f.size() - 2) / 6);
    std::vector<int> hits(f.size(), 0);
    for (const auto& h : parts) {
      for (Element v : h.vertices) ++hits[v];
    }
    CHECK(hits[0] == 0);
    CHECK(hits[1] == 0);
    CHECK(std::all_of(hits.begin() + 2, hits.end(), [](int c) { return c == 1; }));
    CHECK(std::is_sorted(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return a.canonical_rep < b.canonical_rep;
    }));
  }
  CHECK(qdf::hexagon_partition(Field::make(5)).size() == 5);
}

TEST_CASE("is_subspace_block") {
  const Field f5 = Field::make(5);
  // 1, z, ..., z^6 in GF(32) is not additively closed.
  std::array<Element, 7> powers{};
  for (unsigned i = 0; i < 7; ++i) powers[i] = f5.pow(0b10, i);
  const auto s = as_set(powers);
  REQUIRE(s.size() == 7);
  bool violated = false;
  for (Element a : s) {
    for (Element b : s) {
      if (a != b && s.count(a ^ b) == 0) violated = true;
    }
  }
  REQUIRE(violated);
  CHECK_FALSE(qdf::is_subspace_block(f5, powers));

  const Field f9 = Field::make(9);
  auto k = f9.subfield(3);
  k.erase(k.begin());
  CHECK(qdf::is_subspace_block(f9, k));

  // Duplicates, zero and wrong sizes.
  CHECK_FALSE(qdf::is_subspace_block(f5, std::array<Element, 7>{1, 2, 3, 1, 2, 3, 1}));
  CHECK_FALSE(qdf::is_subspace_block(f5, std::array<Element, 7>{0, 1, 2, 3, 4, 5, 6}));
  CHECK_FALSE(qdf::is_subspace_block(f5, std::array<Element, 3>{1, 2, 3}));
}

TEST_CASE("stabilizer_of") {
  const Field f5 = Field::make(5);
  for (Element x = 2; x < f5.size(); ++x) {
    const auto st = qdf::stabilizer_of(f5, qdf::block_of(f5, x));
    REQUIRE(st.order == 1);
    REQUIRE(st.generators == std::vector<Element>{1});
  }
  const Field f9 = Field::make(9);
  auto k = f9.subfield(3);
  k.erase(k.begin());
  const std::set<Element> kset(k.begin(), k.end());
  for (Element x = 2; x < f9.size(); ++x) {
    const auto b = qdf::block_of(f9, x);
    const auto st = qdf::stabilizer_of(f9, b);
    REQUIRE((st.order == 1 || st.order == 7));
    REQUIRE((st.order == 7) == (as_set(b.elements) == kset));
    REQUIRE((st.order == 7) == (kset.count(x) == 1));
    if (st.order == 7) REQUIRE(st.generators == k);
  }
}

TEST_CASE("same_orbit examples") {
  const Field f = Field::make(7);
  for (Element x = 2; x < f.size(); ++x) {
    REQUIRE(qdf::same_orbit(f, x, x ^ 1));
    const Element y = f.inv(x);
    REQUIRE(qdf::orbit_scale(f, x, y) == f.inv(f.sqr(x)));
  }
}

TEST_CASE("same_orbit agrees with an exhaustive orbit search and the hexagons") {
  for (unsigned n : {5u, 7u}) {
    const Field f = Field::make(n);
    for (Element x = 2; x < f.size(); ++x) {
      const auto orbit = orbit_of(f, x);
      for (Element y = 2; y < f.size(); ++y) {
        const bool direct = orbit.count(qdf::block_of(f, y).key()) == 1;
        REQUIRE(qdf::same_orbit(f, x, y) == direct);
        REQUIRE(qdf::in_hexagon_orbit(f, x, y) == direct);
      }
    }
  }
}

TEST_CASE("blocks on a hexagon share their quotient list, n <= 9") {
  for (unsigned n : {5u, 7u, 9u}) {
    const Field f = Field::make(n);
    for (const auto& h : qdf::hexagon_partition(f)) {
      auto ref = qdf::delta(f, qdf::block_of(f, h.vertices[0]));
      std::sort(ref.begin(), ref.end());
      for (Element y : h.vertices) {
        auto d = qdf::delta(f, qdf::block_of(f, y));
        std::sort(d.begin(), d.end());
        REQUIRE(d == ref);
      }
    }
  }
}

TEST_CASE("orbit_key is constant on orbits and separates them") {
  const Field f = Field::make(5);
  std::set<qdf::BlockElements> keys;
  for (const auto& h : qdf::hexagon_partition(f)) {
    const auto b = qdf::block_of(f, h.canonical_rep);
    const auto key = qdf::orbit_key(f, b.elements);
    for (Element t = 1; t < f.size(); ++t) {
      REQUIRE(qdf::orbit_key(f, qdf::scale(f, b, t).elements) == key);
    }
    keys.insert(key);
  }
  CHECK(keys.size() == 5);
}

TEST_CASE("representative systems") {
  using RS = qdf::RepresentativeSystem;
  CHECK(RS::parse("min").kind == RS::Kind::Minimal);
  CHECK(RS::parse("max").kind == RS::Kind::Maximal);
  CHECK(RS::parse("vertex:4").vertex == 4);
  CHECK(RS::parse("vertex:4").to_string() == "vertex:4");
  CHECK_THROWS_AS(RS::parse("vertex:6"), qdf::Error);
  CHECK_THROWS_AS(RS::parse("random"), qdf::Error);
  const Field f = Field::make(5);
  const auto h = qdf::hexagon_of(f, 7);
  CHECK(RS::parse("max").pick(h) == *std::max_element(h.vertices.begin(), h.vertices.end()));
  CHECK(RS::parse("vertex:2").pick(h) == h.vertices[2]);
}

}  // TEST_SUITE
