#include "ringcount/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "ringcount/errors.hpp"

namespace ringcount {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
  out.push_back(cur);
  return out;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(what + " must be a positive integer, got '" + s + "'");
  }
  if (s.size() > 12) throw ParseError(what + " is too large");
  return std::stoull(s);
}

std::uint32_t parse_prime(const std::string& s) {
  const auto p = parse_uint(s, "p");
  if (!is_prime(p)) throw ParseError("p = " + s + " is not prime");
  return static_cast<std::uint32_t>(p);
}

std::pair<std::uint32_t, std::uint32_t> prime_power(const std::string& s) {
  const auto q = parse_uint(s, "q");
  if (q < 2) throw ParseError("q must be >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t n = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++n;
  }
  if (r != 1) throw ParseError("q = " + s + " is not a prime power");
  return {static_cast<std::uint32_t>(p), n};
}

std::uint32_t positive(const std::string& s, const char* what) {
  const auto v = parse_uint(s, what);
  if (v < 1) throw ParseError(std::string(what) + " must be >= 1");
  return static_cast<std::uint32_t>(v);
}

RingPtr parse_chain(const std::string& kind, const std::vector<std::string>& args, const std::string& text) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("ring spec '" + text + "' expects " + std::to_string(n) + " fields");
  };
  if (kind == "gf") {
    need(1);
    const auto [p, n] = prime_power(args[0]);
    return ChainRing::make(Family::galois_ring, p, 1, n);
  }
  if (kind == "zps") {
    need(2);
    return ChainRing::make(Family::galois_ring, parse_prime(args[0]), positive(args[1], "s"), 1);
  }
  if (kind == "gr") {
    need(3);
    return ChainRing::make(Family::galois_ring, parse_prime(args[0]), positive(args[1], "s"), positive(args[2], "n"));
  }
  if (kind == "tp") {
    need(2);
    const auto [p, n] = prime_power(args[0]);
    return ChainRing::make(Family::truncated_poly, p, positive(args[1], "s"), n);
  }
  throw ParseError("unknown ring kind '" + kind + "' (expected gf, zps, gr, tp or crt)");
}

std::mutex registry_mu;
std::map<std::string, RingSpec> spec_registry;
std::map<std::pair<std::string, unsigned>, ExtPtr> ext_registry;
std::map<std::pair<std::string, unsigned>, PirExtPtr> pir_ext_registry;

RingSpec parse_uncached(const std::string& text) {
  RingSpec spec;
  spec.text = text;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("ring spec '" + text + "' has no ':'");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "crt") {
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
      throw ParseError("crt spec must look like crt:(spec,spec,...)");
    }
    std::vector<RingPtr> comps;
    for (const auto& part : split_top(rest.substr(1, rest.size() - 2), ',')) {
      const RingSpec c = parse_ring_spec(part);
      if (c.is_pir()) throw ParseError("nested crt specs are not supported");
      comps.push_back(c.chain);
      spec.parts.push_back(c.text);
    }
    spec.pir = PirRing::make(std::move(comps));
    return spec;
  }
  std::vector<std::string> args;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ':')) args.push_back(item);
  if (rest.empty() || rest.back() == ':') args.emplace_back();
  spec.chain = parse_chain(kind, args, text);
  return spec;
}

}  // namespace

RingSpec parse_ring_spec(const std::string& raw) {
  const std::string text = strip_spaces(raw);
  {
    std::lock_guard lock(registry_mu);
    auto it = spec_registry.find(text);
    if (it != spec_registry.end()) return it->second;
  }
  RingSpec spec;
  try {
    spec = parse_uncached(text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("ring spec '" + text + "': " + e.what());
  }
  std::lock_guard lock(registry_mu);
  return spec_registry.emplace(text, spec).first->second;
}

ExtPtr extension_for(const RingSpec& spec, unsigned degree) {
  if (spec.is_pir()) throw ParameterError("extension_for needs a chain-ring spec");
  {
    std::lock_guard lock(registry_mu);
    auto it = ext_registry.find({spec.text, degree});
    if (it != ext_registry.end()) return it->second;
  }
  ExtPtr ext = GaloisExtension::make(spec.chain, degree);
  std::lock_guard lock(registry_mu);
  return ext_registry.emplace(std::pair(spec.text, degree), ext).first->second;
}

PirExtPtr pir_extension_for(const RingSpec& spec, unsigned degree) {
  if (!spec.is_pir()) throw ParameterError("pir_extension_for needs a crt spec");
  {
    std::lock_guard lock(registry_mu);
    auto it = pir_ext_registry.find({spec.text, degree});
    if (it != pir_ext_registry.end()) return it->second;
  }
  PirExtPtr ext = PirExtension::make(spec.pir, degree);
  std::lock_guard lock(registry_mu);
  return pir_ext_registry.emplace(std::pair(spec.text, degree), ext).first->second;
}

namespace {

class ElementParser {
 public:
  ElementParser(const ChainRing& ring, std::string text) : R_(ring), s_(strip_spaces(text)) {}

  Elem run() {
    if (s_.empty()) throw ParseError("empty element literal");
    const Elem v = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("element '" + s_ + "': " + msg);
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  bool starts_primary() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '#' || c == 'a' || c == 'b' ||
           c == 'g' || c == 'u';
  }

  Elem expr() {
    Elem v = term();
    while (peek('+') || peek('-')) {
      const char op = s_[pos_++];
      const Elem t = term();
      v = op == '+' ? R_.add(v, t) : R_.sub(v, t);
    }
    return v;
  }

  Elem term() {
    Elem v = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v = R_.mul(v, unary());
      } else if (starts_primary()) {
        v = R_.mul(v, unary());
      } else {
        return v;
      }
    }
  }

  Elem unary() {
    if (peek('-')) {
      ++pos_;
      return R_.neg(unary());
    }
    Elem v = primary();
    if (peek('^')) {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent after '^'");
      v = R_.pow(v, std::stoull(s_.substr(start, pos_ - start)));
    }
    return v;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ - start > 12) fail("integer too large");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  Elem primary() {
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return R_.from_integer(static_cast<std::int64_t>(number() % R_.size()));
    }
    if (c == '#') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected code after '#'");
      const auto code = number();
      if (code >= R_.size()) fail("element code out of range");
      return static_cast<Elem>(code);
    }
    if (c == '(') {
      ++pos_;
      const Elem v = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    ++pos_;
    switch (c) {
      case 'a':
        if (R_.is_leaf()) fail("'a' needs an extension ring, " + R_.name() + " has none");
        return R_.generator();
      case 'b':
        if (R_.is_leaf()) fail("'b' needs an extension ring, " + R_.name() + " has none");
        return R_.pow(R_.generator(), 2);
      case 'g':
        if (R_.is_leaf() || R_.base()->is_leaf()) fail("'g' needs a two-level tower");
        return R_.base()->generator();
      case 'u':
        if (R_.family() != Family::truncated_poly || R_.s() == 1) fail("'u' is only defined for tp rings");
        return R_.theta();
      default:
        fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  const ChainRing& R_;
  std::string s_;
  std::size_t pos_ = 0;
};

bool is_simple(const std::string& s) { return s.find_first_of("+-") == std::string::npos; }

std::string monomial(const std::string& coef, const std::string& var, std::size_t i, bool coef_is_one) {
  std::string mono = var;
  if (i > 1) mono += "^" + std::to_string(i);
  if (coef_is_one) return mono;
  return (is_simple(coef) ? coef : "(" + coef + ")") + "*" + mono;
}

// `depth` counts how many named levels are left: 0 means raw codes.
std::string format_level(const ChainRing& R, Elem x, const char* const* names, int depth) {
  if (x == 0) return "0";
  if (R.is_leaf()) {
    if (R.family() == Family::galois_ring || R.s() == 1) return std::to_string(x);
    std::string out;
    Elem rest = x;
    for (std::size_t j = 0; rest != 0; ++j) {
      const Elem d = rest % R.p();
      rest /= R.p();
      if (d == 0) continue;
      std::string t = j == 0 ? std::to_string(d) : monomial(std::to_string(d), "u", j, d == 1);
      out += (out.empty() ? "" : "+") + t;
    }
    return out;
  }
  if (depth == 0) return "#" + std::to_string(x);
  if (R.level_degree() == 2 && x == R.pow(R.generator(), 2) && names[0][0] == 'a') return "b";
  const auto c = R.coefficients(x);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::string cs = format_level(*R.base(), c[i], names + 1, depth - 1);
    const std::string t = i == 0 ? cs : monomial(cs, names[0], i, c[i] == R.base()->one());
    out += (out.empty() ? "" : "+") + t;
  }
  return out;
}

}  // namespace

Elem parse_element(const ChainRing& ring, const std::string& text) { return ElementParser(ring, text).run(); }

std::string format_element(const ChainRing& ring, Elem x) {
  static const char* const names[] = {"a", "g"};
  return format_level(ring, x, names, 2);
}

std::vector<Vec> parse_rows(const ChainRing& ring, const std::string& raw) {
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw ParseError("empty generator list");
  std::vector<Vec> rows;
  for (std::string part : split_top(text, ';')) {
    if (part.size() >= 2 && part.front() == '(' && part.back() == ')') part = part.substr(1, part.size() - 2);
    if (part.empty()) throw ParseError("empty generator row");
    Vec row;
    for (const auto& e : split_top(part, ',')) row.push_back(parse_element(ring, e));
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("generator rows differ in length");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PirVec> parse_pir_rows(const PirRing& ring, const std::string& raw) {
  if (!ring.has_integer_model()) throw ParseError("PIR literals need an integer model (Z/N)");
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw ParseError("empty generator list");
  std::vector<PirVec> rows;
  for (std::string part : split_top(text, ';')) {
    if (part.size() >= 2 && part.front() == '(' && part.back() == ')') part = part.substr(1, part.size() - 2);
    PirVec row;
    for (const auto& e : split_top(part, ',')) {
      bool neg = !e.empty() && e[0] == '-';
      const auto v = parse_uint(neg ? e.substr(1) : e, "PIR entry") % ring.modulus();
      row.push_back(ring.phi(neg ? (ring.modulus() - v) % ring.modulus() : v));
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("generator rows differ in length");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_rows(const LinearCode& code) {
  const ChainRing& R = *code.ring();
  std::string out;
  auto row_string = [&](std::span<const Elem> row) {
    std::string s = "(";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? "," : "") + format_element(R, row[j]);
    return s + ")";
  };
  if (code.rank() == 0) return row_string(Vec(code.length(), 0));
  for (std::size_t i = 0; i < code.rank(); ++i) out += (i ? ";" : "") + row_string(code.generator().row(i));
  return out;
}

std::string format_codewords(const LinearCode& code) {
  const ChainRing& R = *code.ring();
  auto words = code.codewords();
  std::sort(words.begin(), words.end());
  bool narrow = true;
  std::vector<std::vector<std::string>> cells;
  for (const auto& w : words) {
    std::vector<std::string> row;
    for (Elem x : w) {
      row.push_back(format_element(R, x));
      narrow = narrow && row.back().size() == 1;
    }
    cells.push_back(std::move(row));
  }
  std::string out = "{";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ", ";
    if (narrow) {
      for (const auto& c : cells[i]) out += c;
    } else {
      out += "(";
      for (std::size_t j = 0; j < cells[i].size(); ++j) out += (j ? "," : "") + cells[i][j];
      out += ")";
    }
  }
  return out + "}";
}

nlohmann::ordered_json code_to_json(const LinearCode& code, const std::string& ring_spec, unsigned degree) {
  nlohmann::ordered_json j;
  j["ring"] = ring_spec;
  j["degree"] = degree;
  j["length"] = code.length();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < code.rank(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Elem x : code.generator().row(i)) row.push_back(code.ring()->leaf_digits(x));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

LinearCode code_from_json(const nlohmann::json& j) {
  try {
    const RingSpec spec = parse_ring_spec(j.at("ring").get<std::string>());
    if (spec.is_pir()) throw ParseError("code JSON over a crt ring is not supported");
    const auto degree = j.at("degree").get<unsigned>();
    if (degree < 1) throw ParseError("degree must be >= 1");
    const RingPtr ring = degree == 1 ? spec.chain : extension_for(spec, degree)->ext();
    const auto length = j.at("length").get<std::size_t>();
    std::vector<Vec> rows;
    for (const auto& row : j.at("rows")) {
      if (row.size() != length) throw ParseError("row length differs from code length");
      Vec v;
      for (const auto& entry : row) v.push_back(ring->from_leaf_digits(entry.get<std::vector<std::uint32_t>>()));
      rows.push_back(std::move(v));
    }
    return rows.empty() ? LinearCode(ring, length) : LinearCode::from_generators(ring, length, rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("code JSON: ") + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(std::string("code JSON: ") + e.what());
  }
}

namespace {

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

nlohmann::ordered_json header_json(const CacheHeader& h) {
  nlohmann::ordered_json j;
  j["ring"] = h.ring;
  j["degree"] = h.degree;
  j["length"] = h.length;
  j["target"] = h.target;
  j["count"] = h.count;
  return j;
}

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir, const CacheHeader& header) {
  return dir / (sanitize(header.ring) + "_m" + std::to_string(header.degree) + "_l" + std::to_string(header.length) +
                "_" + sanitize(header.target) + ".jsonl");
}

void write_cache(const std::filesystem::path& file, const CacheHeader& header, const std::vector<LinearCode>& codes) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp);
    CacheHeader h = header;
    h.count = std::to_string(codes.size());
    out << header_json(h).dump() << '\n';
    for (const auto& c : codes) out << code_to_json(c, header.ring, header.degree).dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

bool read_cache(const std::filesystem::path& file, const CacheHeader& expected, std::vector<LinearCode>& codes) {
  std::ifstream in(file);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line)) return false;
  CacheHeader h;
  try {
    const auto j = nlohmann::json::parse(line);
    h.ring = j.at("ring").get<std::string>();
    h.degree = j.at("degree").get<unsigned>();
    h.length = j.at("length").get<std::size_t>();
    h.target = j.at("target").get<std::string>();
    h.count = j.at("count").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  if (h.ring != expected.ring || h.degree != expected.degree || h.length != expected.length ||
      h.target != expected.target) {
    return false;
  }
  std::vector<LinearCode> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(code_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception&) {
      return false;
    }
  }
  if (std::to_string(out.size()) != h.count) return false;
  codes = std::move(out);
  return true;
}

nlohmann::ordered_json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

nlohmann::ordered_json reports_to_json(const std::vector<CountReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["formula"] = r.formula;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["formula_value"] = bigint_json(r.formula_value);
    j["oracle_value"] = bigint_json(r.oracle_value);
    j["verdict"] = r.verdict();
    if (!r.notes.empty()) j["notes"] = r.notes;
    arr.push_back(std::move(j));
  }
  return arr;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_csv(const std::vector<CountReport>& reports) {
  std::string out = "formula,params,formula_value,oracle_value,verdict\n";
  for (const auto& r : reports) {
    out += csv_field(r.formula) + "," + csv_field(r.params_string()) + "," + to_string(r.formula_value) + "," +
           to_string(r.oracle_value) + "," + r.verdict() + "\n";
  }
  return out;
}

std::string reports_to_text(const std::vector<CountReport>& reports) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"formula", "params", "formula", "oracle", "verdict"});
  for (const auto& r : reports) {
    rows.push_back({r.formula, r.params_string(), to_string(r.formula_value), to_string(r.oracle_value), r.verdict()});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < 5; ++i) {
      os << row[i];
      if (i + 1 < 5) os << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ringcount
