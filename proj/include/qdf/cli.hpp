#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdf/blocks.hpp"
#include "qdf/gf2n.hpp"

namespace qdf::cli {

inline constexpr unsigned kDefaultCeiling = 13;

enum class Command { Construct, Verify, Certify, Gdd, Export };
enum class Format { Json, Csv };

struct JobConfig {
  Command command = Command::Construct;
  unsigned n = 0;
  std::optional<Poly> modulus;
  std::string in;
  std::string out;  // empty writes to stdout
  std::string to = "design";
  Format format = Format::Json;
  unsigned threads = 0;  // 0: $QDF_THREADS, else 1
  bool force = false;
  RepresentativeSystem seed_system;
};

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitPrecondition = 2;

// Parses "11", "0xb" or "0b1011".
Poly parse_modulus(const std::string& text);

// Full command line, argv[0] excluded. Errors go to err as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qdf::cli
