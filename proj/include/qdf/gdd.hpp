#pragma once

#include <cstdint>
#include <vector>

#include "qdf/design.hpp"
#include "qdf/family.hpp"
#include "qdf/report.hpp"

namespace qdf {

// Cosets t * K* of the nonzero elements of the order-8 subfield K.
struct Spread {
  std::vector<BlockElements> groops;   // each sorted; ordered by smallest point
  std::vector<std::uint32_t> groop_of; // indexed by element, entry 0 unused

  std::size_t count() const noexcept { return groops.size(); }
  bool same_groop(Element p, Element q) const noexcept {
    return groop_of[p] == groop_of[q];
  }
};

// A difference family whose `forbidden` member is the subgroup K*.
using RelativeFamily = DifferenceFamily;

// Drops the base block equal to K* from a family built for n = 3 (mod 6).
RelativeFamily build_relative_family(const DifferenceFamily& fam);

Spread desarguesian_spread(const Field& f);

// Quotients avoid the forbidden subgroup and cover everything else lambda
// times.
VerificationReport verify_relative(const RelativeFamily& fam, unsigned threads = 1);

// Block/groop intersections, cross- and within-groop pair coverage,
// simplicity and the subspace property of a developed relative family.
VerificationReport verify_gdd(const Design& d, const Spread& spread,
                              unsigned threads = 1);

VerificationReport develop_and_verify_gdd(const RelativeFamily& fam,
                                          unsigned threads = 1);

}  // namespace qdf
