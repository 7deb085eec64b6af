#include "qdf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdf/design.hpp"
#include "qdf/error.hpp"
#include "qdf/family.hpp"
#include "qdf/gdd.hpp"
#include "qdf/io.hpp"

namespace qdf::cli {

namespace {

using io::Json;

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
  Json j = Json::object();
  j["error"] = code;
  j["message"] = message;
  err << j.dump() << '\n';
}

int verdict(bool pass, std::ostream& err, const std::string& what) {
  if (pass) return kExitOk;
  write_error(err, "VerificationFailed", what);
  return kExitVerificationFailed;
}

void emit(const JobConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot open " + cfg.out + " for writing");
  file << payload;
}

void emit_json(const JobConfig& cfg, std::ostream& out, const Json& j) {
  emit(cfg, out, j.dump(2) + "\n");
}

Json load_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  try {
    return Json::parse(file);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QDF_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return 1;
}

void check_ceiling(const JobConfig& cfg, unsigned n, std::ostream& err) {
  if (n <= kDefaultCeiling) return;
  if (!cfg.force) {
    throw Error(ErrorCode::NeedsForce,
                "n = " + std::to_string(n) + " exceeds the default ceiling of " +
                    std::to_string(kDefaultCeiling) + "; pass --force");
  }
  const bool pairs = cfg.command == Command::Verify || cfg.command == Command::Gdd;
  const std::uint64_t units = (std::uint64_t{1} << n) - 1;
  err << "warning: n = " << n << ", " << units << " points";
  if (pairs) {
    err << ", pair counters need ~" << (pair_counter_bytes(n) >> 20) << " MiB and "
        << units * (units - 1) / 6 << " blocks are developed";
  }
  err << '\n';
}

Field field_for(const JobConfig& cfg, std::ostream& err) {
  if (cfg.n == 0) throw Error(ErrorCode::InvalidInput, "--n is required");
  Field f = Field::make(cfg.n, cfg.modulus);
  check_ceiling(cfg, cfg.n, err);
  return f;
}

DifferenceFamily family_for(const JobConfig& cfg, std::ostream& err) {
  if (!cfg.in.empty()) {
    DifferenceFamily fam = io::family_from_json(load_json(cfg.in));
    check_ceiling(cfg, fam.field.degree(), err);
    return fam;
  }
  return build_family(field_for(cfg, err), cfg.seed_system);
}

std::string checks_to_csv(const VerificationReport& r) {
  std::ostringstream csv;
  csv << "check,pass,detail\n";
  for (const CheckResult& c : r.checks) {
    csv << c.name << ',' << (c.pass ? 1 : 0) << ",\"" << c.detail << "\"\n";
  }
  return csv.str();
}

int run_construct(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const DifferenceFamily fam = family_for(cfg, err);
  if (cfg.format == Format::Csv) {
    emit(cfg, out, io::profile_to_csv(fam.field, multiplicity_profile(fam, cfg.threads)));
  } else {
    emit_json(cfg, out, io::family_to_json(fam));
  }
  return kExitOk;
}

int run_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const DifferenceFamily fam = family_for(cfg, err);
  if (!fam.forbidden.empty()) {
    throw Error(ErrorCode::InvalidInput, "relative families are verified by the gdd command");
  }
  const Field& f = fam.field;
  const MultiplicityProfile profile = multiplicity_profile(fam, cfg.threads);
  const Design d = develop(fam);
  VerificationReport report = verify_2design(d, cfg.threads);
  const bool qanalog = check_qanalog(d);
  report.checks.insert(report.checks.begin(),
                       {"difference_family", profile.constant(fam.lambda_claim),
                        "every t outside {0,1} has multiplicity " +
                            std::to_string(profile.min()) + ".." +
                            std::to_string(profile.max())});
  report.checks.push_back({"qanalog", qanalog, "every block plus zero is a subspace"});
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  if (cfg.format == Format::Csv) {
    emit(cfg, out, checks_to_csv(report));
  } else {
    Json j = Json::object();
    j["n"] = f.degree();
    j["modulus"] = f.modulus();
    j["seed_system"] = cfg.in.empty() ? Json(cfg.seed_system.to_string()) : Json(nullptr);
    j["v"] = d.v();
    j["k"] = Design::k();
    j["lambda"] = fam.lambda_claim;
    j["base_blocks"] = fam.base_blocks.size();
    j["blocks"] = d.block_count();
    j["simple"] = check_simple(d);
    j["report"] = io::report_to_json(f, report);
    emit_json(cfg, out, j);
  }
  return verdict(report.pass, err, "the developed design failed verification");
}

int run_certify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field f = field_for(cfg, err);
  std::vector<EquationCertificate> certs;
  certs.reserve(f.size() - 2);
  bool ok = true;
  for (Element t = 2; t < f.size(); ++t) {
    certs.push_back(equation_certificate(f, t));
    ok = ok && certs.back().ok();
  }
  if (cfg.format == Format::Csv) {
    emit(cfg, out, io::certificates_to_csv(f, certs));
  } else {
    emit_json(cfg, out, io::certificates_to_json(f, certs));
  }
  return verdict(ok, err, "some t has r(t) != 9 or a broken matched pair");
}

int run_gdd(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const RelativeFamily rel = [&] {
    if (!cfg.in.empty()) {
      RelativeFamily loaded = io::family_from_json(load_json(cfg.in));
      check_ceiling(cfg, loaded.field.degree(), err);
      return loaded.forbidden.empty() ? build_relative_family(loaded) : loaded;
    }
    const Field f = field_for(cfg, err);
    if (f.degree() % 6 != 3) {
      throw Error(ErrorCode::WrongResidue, "gdd requires n = 3 (mod 6)");
    }
    return build_relative_family(build_family(f, cfg.seed_system));
  }();
  const Field& f = rel.field;
  const VerificationReport relative = verify_relative(rel, cfg.threads);
  const Design d = develop(rel);
  const Spread spread = desarguesian_spread(f);
  const VerificationReport report = verify_gdd(d, spread, cfg.threads);
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';
  const bool pass = relative.pass && report.pass;

  if (cfg.format == Format::Csv) {
    emit(cfg, out, checks_to_csv(relative) + checks_to_csv(report));
  } else {
    Json j = io::gdd_to_json(d, spread);
    j["relative_report"] = io::report_to_json(f, relative);
    j["report"] = io::report_to_json(f, report);
    emit_json(cfg, out, j);
  }
  return verdict(pass, err, "the relative family or its GDD failed verification");
}

int run_export(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.in.empty()) throw Error(ErrorCode::InvalidInput, "export needs --in");
  const Json input = load_json(cfg.in);
  const bool is_family = input.contains("blocks");
  if (!is_family && !input.contains("orbits")) {
    throw Error(ErrorCode::InvalidInput, cfg.in + " is neither a family nor a design");
  }
  const DifferenceFamily fam = [&] {
    if (is_family) return io::family_from_json(input);
    const Design stored = io::design_from_json(input);
    DifferenceFamily reps{stored.field, {}, stored.lambda_claim, {}};
    for (const Orbit& o : stored.orbits) reps.base_blocks.push_back(o.rep);
    return reps;
  }();
  const Design d = is_family ? develop(fam) : io::design_from_json(input);
  check_ceiling(cfg, fam.field.degree(), err);
  if (cfg.to == "design") {
    emit_json(cfg, out, io::design_to_json(d));
  } else if (cfg.to == "family") {
    emit_json(cfg, out, io::family_to_json(fam));
  } else if (cfg.to == "profile") {
    const MultiplicityProfile p = multiplicity_profile(fam, cfg.threads);
    if (cfg.format == Format::Json) {
      Json j = Json::object();
      j["n"] = fam.field.degree();
      j["modulus"] = fam.field.modulus();
      Json counts = Json::object();
      for (Element t = 2; t < p.counts.size(); ++t) counts[io::to_hex(fam.field, t)] = p.counts[t];
      j["counts"] = std::move(counts);
      emit_json(cfg, out, j);
    } else {
      emit(cfg, out, io::profile_to_csv(fam.field, p));
    }
  } else {
    throw Error(ErrorCode::InvalidInput, "--to must be design, family or profile");
  }
  return kExitOk;
}

}  // namespace

Poly parse_modulus(const std::string& text) {
  try {
    std::size_t used = 0;
    Poly value = 0;
    if (text.starts_with("0b") || text.starts_with("0B")) {
      value = std::stoull(text.substr(2), &used, 2);
      used += 2;
    } else {
      value = std::stoull(text, &used, 0);
    }
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidModulus, "cannot parse modulus '" + text + "'");
  }
}

int run(const JobConfig& cfg_in, std::ostream& out, std::ostream& err) {
  JobConfig cfg = cfg_in;
  cfg.threads = resolve_threads(cfg.threads);
  try {
    switch (cfg.command) {
      case Command::Construct: return run_construct(cfg, out, err);
      case Command::Verify: return run_verify(cfg, out, err);
      case Command::Certify: return run_certify(cfg, out, err);
      case Command::Gdd: return run_gdd(cfg, out, err);
      case Command::Export: return run_export(cfg, out, err);
    }
  } catch (const Error& e) {
    write_error(err, to_string(e.code()), e.what());
    return kExitPrecondition;
  } catch (const Json::exception& e) {
    write_error(err, "InvalidInput", e.what());
    return kExitPrecondition;
  }
  return kExitPrecondition;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Difference-family designs over GF(2): construct and verify", "qdf"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string modulus;
  std::string format = "json";
  std::string seed_system = "min";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "odd extension degree");
    sub->add_option("--modulus", modulus, "irreducible modulus as integer, 0x.. or 0b..");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", cfg.threads, "worker threads (default $QDF_THREADS or 1)");
    sub->add_flag("--force", cfg.force, "allow n above the default ceiling of 13");
    sub->add_option("--seed-system", seed_system, "hexagon representatives: min, max, vertex:K");
    sub->add_option("--in", cfg.in, "read a stored family (or design for export)");
  };

  auto* construct = app.add_subcommand("construct", "write the (n,3,7) difference family");
  auto* verify = app.add_subcommand("verify", "develop and exhaustively verify the 2-design");
  auto* certify = app.add_subcommand("certify", "write per-t trace certificates");
  auto* gdd = app.add_subcommand("gdd", "build and verify the GDD for n = 3 (mod 6)");
  auto* exporter = app.add_subcommand("export", "convert stored families and designs");
  for (auto* sub : {construct, verify, certify, gdd, exporter}) add_common(sub);
  exporter->add_option("--to", cfg.to, "design, family or profile")
      ->check(CLI::IsMember({"design", "family", "profile"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what());
    return kExitPrecondition;
  }

  if (construct->parsed()) cfg.command = Command::Construct;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (certify->parsed()) cfg.command = Command::Certify;
  if (gdd->parsed()) cfg.command = Command::Gdd;
  if (exporter->parsed()) cfg.command = Command::Export;
  cfg.format = format == "csv" ? Format::Csv : Format::Json;

  try {
    if (!modulus.empty()) cfg.modulus = parse_modulus(modulus);
    cfg.seed_system = RepresentativeSystem::parse(seed_system);
  } catch (const Error& e) {
    write_error(err, to_string(e.code()), e.what());
    return kExitPrecondition;
  }
  return run(cfg, out, err);
}

}  // namespace qdf::cli
