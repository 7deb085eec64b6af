#include "qdf/gdd.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "qdf/error.hpp"

namespace qdf {

namespace {

std::vector<Element> subfield_units(const Field& f) {
  std::vector<Element> k = f.subfield(3);
  k.erase(k.begin());  // drop 0
  return k;
}

void require_residue(const Field& f) {
  if (f.degree() % 6 != 3) {
    throw Error(ErrorCode::WrongResidue,
                "n = " + std::to_string(f.degree()) +
                    " is not 3 mod 6; F* has no subgroup of order 7 here");
  }
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

RelativeFamily build_relative_family(const DifferenceFamily& fam) {
  const Field& f = fam.field;
  require_residue(f);
  const std::vector<Element> units = subfield_units(f);
  BlockElements target{};
  std::copy(units.begin(), units.end(), target.begin());

  RelativeFamily rel{f, {}, fam.lambda_claim, units};
  std::size_t removed = 0;
  for (const Block& b : fam.base_blocks) {
    if (b.key() == target) {
      ++removed;
    } else {
      rel.base_blocks.push_back(b);
    }
  }
  if (removed != 1) {
    throw Error(ErrorCode::SubfieldBlockMissing,
                "expected exactly one base block equal to the order-8 subfield, found " +
                    std::to_string(removed));
  }
  return rel;
}

Spread desarguesian_spread(const Field& f) {
  if (f.degree() % 3 != 0) {
    throw Error(ErrorCode::WrongResidue,
                "3 does not divide n = " + std::to_string(f.degree()));
  }
  const std::vector<Element> units = subfield_units(f);
  Spread s;
  s.groop_of.assign(f.size(), std::numeric_limits<std::uint32_t>::max());
  s.groops.reserve(f.units() / 7);
  for (Element p = 1; p < f.size(); ++p) {
    if (s.groop_of[p] != std::numeric_limits<std::uint32_t>::max()) continue;
    BlockElements coset{};
    for (std::size_t i = 0; i < kBlockSize; ++i) coset[i] = f.mul(p, units[i]);
    std::sort(coset.begin(), coset.end());
    for (Element e : coset) s.groop_of[e] = static_cast<std::uint32_t>(s.groops.size());
    s.groops.push_back(coset);
  }
  return s;
}

VerificationReport verify_relative(const RelativeFamily& fam, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const Field& f = fam.field;
  const MultiplicityProfile profile = multiplicity_profile(fam, threads);
  std::vector<bool> forbidden(f.size(), false);
  for (Element g : fam.forbidden) forbidden[g] = true;

  VerificationReport report;
  report.lambda_claim = fam.lambda_claim;
  report.blocks_counted = fam.base_blocks.size();
  std::uint32_t forbidden_max = 0;
  std::uint32_t lo = std::numeric_limits<std::uint32_t>::max(), hi = 0;
  bool any_outside = false;
  for (Element t = 2; t < f.size(); ++t) {
    const std::uint32_t c = profile.counts[t];
    const bool bad = forbidden[t] ? c != 0 : c != fam.lambda_claim;
    if (forbidden[t]) {
      forbidden_max = std::max(forbidden_max, c);
    } else {
      any_outside = true;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (bad && report.offending_pairs.size() < kMaxOffenders) {
      report.offending_pairs.push_back({t, 1, c});
    }
  }
  if (any_outside) {
    report.coverage_min = lo;
    report.coverage_max = hi;
  } else {
    report.warnings.push_back(
        "no elements outside the forbidden subgroup; coverage holds vacuously");
  }
  report.checks.push_back({"forbidden_avoided", forbidden_max == 0,
                           "max multiplicity on G\\{1} = " +
                               std::to_string(forbidden_max)});
  report.checks.push_back(
      {"coverage", !any_outside || (lo == fam.lambda_claim && hi == fam.lambda_claim),
       "every element outside G covered lambda times"});
  report.pass = all_pass(report.checks);
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_gdd(const Design& d, const Spread& spread,
                              unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.lambda_claim = d.lambda_claim;
  report.blocks_counted = d.block_count();

  // Scaling by t maps groops to groops, so representatives suffice.
  bool meets_once = true;
  for (const Orbit& o : d.orbits) {
    std::array<std::uint32_t, kBlockSize> idx{};
    for (std::size_t i = 0; i < kBlockSize; ++i) idx[i] = spread.groop_of[o.rep.elements[i]];
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) meets_once = false;
  }
  report.checks.push_back({"block_groop_intersection", meets_once,
                           "every block meets every groop in at most one point"});

  PairCounter counter(d.v());
  count_pairs(d, counter, threads);
  std::uint32_t lo = std::numeric_limits<std::uint32_t>::max(), hi = 0;
  std::uint32_t within_max = 0;
  std::uint64_t cross_pairs = 0;
  for (Element q = 2; q <= d.v(); ++q) {
    for (Element p = 1; p < q; ++p) {
      const std::uint32_t c = counter.count(p, q);
      const bool within = spread.same_groop(p, q);
      if (within) {
        within_max = std::max(within_max, c);
      } else {
        ++cross_pairs;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      const bool bad = within ? c != 0 : c != d.lambda_claim;
      if (bad && report.offending_pairs.size() < kMaxOffenders) {
        report.offending_pairs.push_back({p, q, c});
      }
    }
  }
  if (cross_pairs > 0) {
    report.coverage_min = lo;
    report.coverage_max = hi;
  } else {
    report.warnings.push_back("single groop and no blocks; GDD is degenerate");
  }
  report.checks.push_back(
      {"cross_groop_coverage",
       cross_pairs == 0 || (lo == d.lambda_claim && hi == d.lambda_claim),
       "pairs from distinct groops lie in exactly lambda blocks"});
  report.checks.push_back({"within_groop_coverage", within_max == 0,
                           "max coverage of a within-groop pair = " +
                               std::to_string(within_max)});
  report.checks.push_back({"simple", check_simple(d), "no repeated blocks"});
  report.checks.push_back({"qanalog", check_qanalog(d),
                           "every block plus zero is a subspace"});

  const std::uint64_t lhs = report.blocks_counted * kBlockSize * (kBlockSize - 1);
  const std::uint64_t rhs = std::uint64_t{d.lambda_claim} * 2 * cross_pairs;
  report.checks.push_back({"counting_identity", lhs == rhs,
                           "b*k*(k-1) = " + std::to_string(lhs) +
                               ", lambda * ordered cross pairs = " + std::to_string(rhs)});
  report.pass = all_pass(report.checks);
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport develop_and_verify_gdd(const RelativeFamily& fam,
                                          unsigned threads) {
  return verify_gdd(develop(fam), desarguesian_spread(fam.field), threads);
}

}  // namespace qdf
