#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringcount/counting.hpp"
#include "ringcount/pir.hpp"

namespace ringcount {

/// A parsed ring spec. Exactly one of `chain` / `pir` is set. Parsing the
/// same spec twice yields the same handles, so codes read back from JSON
/// compare equal to the originals.
struct RingSpec {
  std::string text;  // normalised spec string
  RingPtr chain;
  PirPtr pir;
  std::vector<std::string> parts;  // component specs of a crt spec

  bool is_pir() const { return pir != nullptr; }
};

/// gf:q | zps:p:s | gr:p:s:n | tp:q:s | crt:(spec,spec,...)
RingSpec parse_ring_spec(const std::string& text);

/// Extension of degree m over a chain-ring spec, shared per (spec, m).
ExtPtr extension_for(const RingSpec& spec, unsigned degree);
PirExtPtr pir_extension_for(const RingSpec& spec, unsigned degree);

/// Element literals: integers, `a` (generator of the top level), `b` (= a^2),
/// `g` (generator of the level below the top), `u` (the uniformizer of a
/// truncated-polynomial ring), combined with + - * ^ and parentheses.
Elem parse_element(const ChainRing& ring, const std::string& text);
std::string format_element(const ChainRing& ring, Elem x);

/// "(1,0,a);(0,1,b)" -> rows
std::vector<Vec> parse_rows(const ChainRing& ring, const std::string& text);
/// Same grammar over a PIR with an integer model: entries are integers mod N.
std::vector<PirVec> parse_pir_rows(const PirRing& ring, const std::string& text);

/// Generator rows in the literal grammar, e.g. "(1,0,a);(0,1,b)".
std::string format_rows(const LinearCode& code);
/// Codeword listing such as "{000, 111}"; entries wider than one character
/// are parenthesised.
std::string format_codewords(const LinearCode& code);

/// {ring, degree, length, rows}; entries are little-endian lists of leaf
/// coefficients. `degree` says which ring of the spec the code lives over.
nlohmann::ordered_json code_to_json(const LinearCode& code, const std::string& ring_spec, unsigned degree);
LinearCode code_from_json(const nlohmann::json& j);

struct CacheHeader {
  std::string ring;
  unsigned degree = 1;
  std::size_t length = 0;
  std::string target;
  std::string count;
  bool operator==(const CacheHeader&) const = default;
};

std::filesystem::path cache_path(const std::filesystem::path& dir, const CacheHeader& header);
void write_cache(const std::filesystem::path& file, const CacheHeader& header, const std::vector<LinearCode>& codes);
/// Reads a cache file; returns false when it is missing or its header
/// differs from `expected` (count aside).
bool read_cache(const std::filesystem::path& file, const CacheHeader& expected, std::vector<LinearCode>& codes);

nlohmann::ordered_json reports_to_json(const std::vector<CountReport>& reports);
std::string reports_to_csv(const std::vector<CountReport>& reports);
std::string reports_to_text(const std::vector<CountReport>& reports);

/// Big integers go out as JSON numbers when they fit in 64 bits, else as
/// decimal strings.
nlohmann::ordered_json bigint_json(const BigInt& v);

}  // namespace ringcount
