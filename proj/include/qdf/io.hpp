#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qdf/design.hpp"
#include "qdf/family.hpp"
#include "qdf/gdd.hpp"
#include "qdf/report.hpp"

namespace qdf::io {

using Json = nlohmann::ordered_json;

// Lowercase hex, zero-padded to ceil(n/4) digits.
std::string to_hex(const Field& f, Element e);
Element from_hex(const Field& f, std::string_view text);

Json block_to_json(const Field& f, const Block& b);
Json hexagon_to_json(const Field& f, const Hexagon& h);

// {n, modulus, lambda, blocks: [[hex x 7], ...]}
Json family_to_json(const DifferenceFamily& fam);
DifferenceFamily family_from_json(const Json& j);

// {n, modulus, v, k, lambda, orbits: [{rep, length, replication}, ...]}
Json design_to_json(const Design& d);
Design design_from_json(const Json& j);

// {n, modulus, g, lambda, spread: [[hex x 7], ...], orbits: [...]}
Json gdd_to_json(const Design& d, const Spread& s);

// Wall-clock timing is left out so identical runs serialize identically.
Json report_to_json(const Field& f, const VerificationReport& r);

// "t_hex,count" lines for every t outside {0, 1}.
std::string profile_to_csv(const Field& f, const MultiplicityProfile& p);

Json certificates_to_json(const Field& f,
                          const std::vector<EquationCertificate>& certs);
std::string certificates_to_csv(const Field& f,
                                const std::vector<EquationCertificate>& certs);

}  // namespace qdf::io
