#include "qdf/io.hpp"

#include <charconv>
#include <sstream>

#include "qdf/error.hpp"

namespace qdf::io {

namespace {

unsigned hex_digits(const Field& f) { return (f.degree() + 3) / 4; }

Json header(const Field& f) {
  Json j = Json::object();
  j["n"] = f.degree();
  j["modulus"] = f.modulus();
  return j;
}

Json elements_to_json(const Field& f, std::span<const Element> elems) {
  Json arr = Json::array();
  for (Element e : elems) arr.push_back(to_hex(f, e));
  return arr;
}

Block block_from_json(const Field& f, const Json& row) {
  if (!row.is_array() || row.size() != kBlockSize) {
    throw Error(ErrorCode::InvalidInput, "block must be an array of 7 hex strings");
  }
  Block b;
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    if (!row[i].is_string()) {
      throw Error(ErrorCode::InvalidInput, "block entries must be hex strings");
    }
    b.elements[i] = from_hex(f, row[i].get<std::string>());
    if (b.elements[i] == 0) {
      throw Error(ErrorCode::InvalidInput, "blocks may not contain 0");
    }
  }
  // Blocks in seed order carry the seed in position 1.
  const Element x = b.elements[1];
  if (x > 1 && block_of(f, x).elements == b.elements) b.seed = x;
  return b;
}

Field field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("modulus")) {
    throw Error(ErrorCode::InvalidInput, "missing n or modulus");
  }
  return Field::make(j.at("n").get<unsigned>(), j.at("modulus").get<Poly>());
}

Json coefficient_to_json(const AffineInT& a) {
  if (a.one && a.t) return "t+1";
  if (a.t) return "t";
  if (a.one) return "1";
  return "0";
}

}  // namespace

std::string to_hex(const Field& f, Element e) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(hex_digits(f), '0');
  for (std::size_t i = out.size(); i-- > 0; e >>= 4) out[i] = kDigits[e & 0xf];
  return out;
}

Element from_hex(const Field& f, std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  Element value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidInput, "bad hex element '" + std::string(text) + "'");
  }
  f.check(value);
  return value;
}

Json block_to_json(const Field& f, const Block& b) {
  Json j = Json::object();
  j["elements"] = elements_to_json(f, b.elements);
  j["seed"] = b.seed ? Json(to_hex(f, *b.seed)) : Json(nullptr);
  return j;
}

Json hexagon_to_json(const Field& f, const Hexagon& h) {
  return elements_to_json(f, h.vertices);
}

Json family_to_json(const DifferenceFamily& fam) {
  Json j = header(fam.field);
  j["lambda"] = fam.lambda_claim;
  Json blocks = Json::array();
  for (const Block& b : fam.base_blocks) blocks.push_back(elements_to_json(fam.field, b.elements));
  j["blocks"] = std::move(blocks);
  if (!fam.forbidden.empty()) j["forbidden"] = elements_to_json(fam.field, fam.forbidden);
  return j;
}

DifferenceFamily family_from_json(const Json& j) {
  const Field f = field_from_json(j);
  if (!j.contains("lambda") || !j.contains("blocks") || !j.at("blocks").is_array()) {
    throw Error(ErrorCode::InvalidInput, "family JSON needs lambda and blocks");
  }
  DifferenceFamily fam{f, {}, j.at("lambda").get<std::uint32_t>(), {}};
  for (const Json& row : j.at("blocks")) fam.base_blocks.push_back(block_from_json(f, row));
  if (j.contains("forbidden")) {
    for (const Json& e : j.at("forbidden")) {
      fam.forbidden.push_back(from_hex(f, e.get<std::string>()));
    }
    std::sort(fam.forbidden.begin(), fam.forbidden.end());
  }
  return fam;
}

namespace {

Json orbits_to_json(const Design& d) {
  Json orbits = Json::array();
  for (const Orbit& o : d.orbits) {
    Json entry = Json::object();
    entry["rep"] = elements_to_json(d.field, o.rep.elements);
    entry["length"] = o.length;
    entry["replication"] = o.replication;
    orbits.push_back(std::move(entry));
  }
  return orbits;
}

}  // namespace

Json design_to_json(const Design& d) {
  Json j = header(d.field);
  j["v"] = d.v();
  j["k"] = Design::k();
  j["lambda"] = d.lambda_claim;
  j["orbits"] = orbits_to_json(d);
  return j;
}

Design design_from_json(const Json& j) {
  const Field f = field_from_json(j);
  if (!j.contains("lambda") || !j.contains("orbits") || !j.at("orbits").is_array()) {
    throw Error(ErrorCode::InvalidInput, "design JSON needs lambda and orbits");
  }
  Design d{f, {}, j.at("lambda").get<std::uint32_t>()};
  for (const Json& o : j.at("orbits")) {
    Orbit orbit{block_from_json(f, o.at("rep")), o.at("length").get<std::uint32_t>(),
                o.at("replication").get<std::uint32_t>()};
    if (std::uint64_t{orbit.length} * orbit.replication != f.units()) {
      throw Error(ErrorCode::InvalidInput, "orbit length times replication must be 2^n - 1");
    }
    d.orbits.push_back(std::move(orbit));
  }
  return d;
}

Json gdd_to_json(const Design& d, const Spread& s) {
  Json j = header(d.field);
  j["g"] = 3;
  j["lambda"] = d.lambda_claim;
  Json spread = Json::array();
  for (const auto& groop : s.groops) spread.push_back(elements_to_json(d.field, groop));
  j["spread"] = std::move(spread);
  j["orbits"] = orbits_to_json(d);
  return j;
}

Json report_to_json(const Field& f, const VerificationReport& r) {
  Json j = Json::object();
  j["pass"] = r.pass;
  j["lambda"] = r.lambda_claim;
  j["pair_coverage_min"] = r.coverage_min ? Json(*r.coverage_min) : Json(nullptr);
  j["pair_coverage_max"] = r.coverage_max ? Json(*r.coverage_max) : Json(nullptr);
  j["blocks_counted"] = r.blocks_counted;
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json entry = Json::object();
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  Json offenders = Json::array();
  for (const Offender& o : r.offending_pairs) {
    offenders.push_back(Json::array({to_hex(f, o.a), to_hex(f, o.b), o.count}));
  }
  j["offending_pairs"] = std::move(offenders);
  j["warnings"] = r.warnings;
  return j;
}

std::string profile_to_csv(const Field& f, const MultiplicityProfile& p) {
  std::ostringstream out;
  out << "t_hex,count\n";
  for (Element t = 2; t < p.counts.size(); ++t) {
    out << to_hex(f, t) << ',' << p.counts[t] << '\n';
  }
  return out.str();
}

Json certificates_to_json(const Field& f,
                          const std::vector<EquationCertificate>& certs) {
  Json j = header(f);
  Json equations = Json::array();
  Json matching = Json::array();
  for (const auto& [first, second] : matching_table()) {
    for (const EquationForm* e : {&first, &second}) {
      Json entry = Json::object();
      entry["name"] = "E" + std::to_string(e->i) + std::to_string(e->j);
      entry["a"] = coefficient_to_json(e->a);
      entry["b"] = coefficient_to_json(e->b);
      entry["c"] = coefficient_to_json(e->c);
      equations.push_back(std::move(entry));
    }
    matching.push_back(Json::array({"E" + std::to_string(first.i) + std::to_string(first.j),
                                    "E" + std::to_string(second.i) + std::to_string(second.j)}));
  }
  j["equations"] = std::move(equations);
  j["matching"] = std::move(matching);
  bool all_ok = true;
  Json rows = Json::array();
  for (const EquationCertificate& c : certs) {
    Json entry = Json::object();
    entry["t"] = to_hex(f, c.t);
    entry["r"] = c.r;
    Json counts = Json::array();
    for (const PairOutcome& p : c.per_pair) counts.push_back(p.count);
    entry["counts"] = std::move(counts);
    Json matched = Json::array();
    for (const MatchOutcome& m : c.matches) matched.push_back(m.exactly_one);
    entry["exactly_one"] = std::move(matched);
    all_ok = all_ok && c.ok();
    rows.push_back(std::move(entry));
  }
  j["all_ok"] = all_ok;
  j["certificates"] = std::move(rows);
  return j;
}

std::string certificates_to_csv(const Field& f,
                                const std::vector<EquationCertificate>& certs) {
  std::ostringstream out;
  out << "t_hex,r,matching_ok\n";
  for (const EquationCertificate& c : certs) {
    out << to_hex(f, c.t) << ',' << c.r << ',' << (c.matching_ok() ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace qdf::io
