#include <doctest.h>

#include <algorithm>
#include <set>

#include "qdf/error.hpp"
#include "qdf/gdd.hpp"

using qdf::Element;
using qdf::Field;

TEST_SUITE("gdd") {

TEST_CASE("build_relative_family") {
  const Field f9 = Field::make(9);
  const auto rel = qdf::build_relative_family(qdf::build_family(f9));
  CHECK(rel.base_blocks.size() == 84);
  CHECK(rel.forbidden.size() == 7);
  CHECK(rel.lambda_claim == 7);
  const std::set<Element> k(rel.forbidden.begin(), rel.forbidden.end());
  for (const auto& b : rel.base_blocks) {
    CHECK(std::set<Element>(b.elements.begin(), b.elements.end()) != k);
  }

  CHECK(qdf::build_relative_family(qdf::build_family(Field::make(3))).base_blocks.empty());

  try {
    qdf::build_relative_family(qdf::build_family(Field::make(5)));
    FAIL("expected WrongResidue");
  } catch (const qdf::Error& e) {
    CHECK(e.code() == qdf::ErrorCode::WrongResidue);
  }

  auto missing = qdf::build_family(f9);
  missing.base_blocks.erase(
      std::remove_if(missing.base_blocks.begin(), missing.base_blocks.end(),
                     [&](const qdf::Block& b) {
                       return qdf::stabilizer_of(f9, b).order == 7;
                     }),
      missing.base_blocks.end());
  try {
    qdf::build_relative_family(missing);
    FAIL("expected SubfieldBlockMissing");
  } catch (const qdf::Error& e) {
    CHECK(e.code() == qdf::ErrorCode::SubfieldBlockMissing);
  }
}

TEST_CASE("desarguesian_spread") {
  const Field f = Field::make(9);
  const auto s = qdf::desarguesian_spread(f);
  CHECK(s.count() == 73);
  std::vector<int> hits(f.size(), 0);
  for (std::size_t g = 0; g < s.count(); ++g) {
    CHECK(qdf::is_subspace_block(f, s.groops[g]));
    for (Element e : s.groops[g]) {
      ++hits[e];
      CHECK(s.groop_of[e] == g);
    }
    if (g > 0) CHECK(s.groops[g - 1][0] < s.groops[g][0]);
  }
  CHECK(std::all_of(hits.begin() + 1, hits.end(), [](int c) { return c == 1; }));
  CHECK(s.groops[0][0] == 1);

  CHECK(qdf::desarguesian_spread(Field::make(3)).count() == 1);
  CHECK(qdf::desarguesian_spread(Field::make(15)).count() == 32767 / 7);
  CHECK_THROWS_AS(qdf::desarguesian_spread(Field::make(7)), qdf::Error);
}

TEST_CASE("verify_relative") {
  const Field f = Field::make(9);
  const auto full = qdf::build_family(f);
  const auto rel = qdf::build_relative_family(full);
  const auto ok = qdf::verify_relative(rel);
  CHECK(ok.pass);
  CHECK(ok.coverage_min == 7u);
  CHECK(ok.coverage_max == 7u);
  CHECK(ok.warnings.empty());

  // Putting the subfield block back covers K* \ {1} too.
  auto bad = rel;
  bad.base_blocks = full.base_blocks;
  const auto r = qdf::verify_relative(bad);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.find("forbidden_avoided")->pass);

  auto thin = rel;
  thin.base_blocks.pop_back();
  CHECK_FALSE(qdf::verify_relative(thin).find("coverage")->pass);

  const auto vac = qdf::verify_relative(
      qdf::build_relative_family(qdf::build_family(Field::make(3))));
  CHECK(vac.pass);
  CHECK(vac.warnings.size() == 1);
  CHECK_FALSE(vac.coverage_min.has_value());
}

TEST_CASE("GDD on GF(2^9)") {
  const Field f = Field::make(9);
  const auto rel = qdf::build_relative_family(qdf::build_family(f));
  const auto d = qdf::develop(rel);
  CHECK(d.block_count() == 42924);
  const auto r = qdf::develop_and_verify_gdd(rel, 2);
  CHECK(r.pass);
  for (const char* name : {"block_groop_intersection", "cross_groop_coverage",
                           "within_groop_coverage", "simple", "qanalog",
                           "counting_identity"}) {
    CAPTURE(name);
    REQUIRE(r.find(name) != nullptr);
    CHECK(r.find(name)->pass);
  }
  CHECK(r.coverage_min == 7u);
  CHECK(r.coverage_max == 7u);
  // 7 * 511 * 504 ordered cross-groop pairs = 42924 * 42.
  CHECK(std::uint64_t{7} * 511 * 504 == std::uint64_t{42924} * 42);

  // A difference family of the whole group is not a GDD for this spread.
  const auto whole = qdf::verify_gdd(qdf::develop(qdf::build_family(f)),
                                     qdf::desarguesian_spread(f));
  CHECK_FALSE(whole.pass);
  CHECK_FALSE(whole.find("within_groop_coverage")->pass);
  CHECK_FALSE(whole.find("simple")->pass);
}

TEST_CASE("GDD for n = 3 is degenerate") {
  const auto rel = qdf::build_relative_family(qdf::build_family(Field::make(3)));
  const auto r = qdf::develop_and_verify_gdd(rel);
  CHECK(r.pass);
  CHECK(r.blocks_counted == 0);
  CHECK(r.warnings.size() == 1);
}

}  // TEST_SUITE
