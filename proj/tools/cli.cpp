#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringcount/counting.hpp"
#include "ringcount/errors.hpp"
#include "ringcount/io.hpp"
#include "ringcount/pir.hpp"
#include "ringcount/verify.hpp"

namespace ringcount::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGrammar = R"TXT(Ring specs:
  gf:q          finite field F_q
  zps:p:s       Z/p^s
  gr:p:s:n      Galois ring GR(p^s, n)
  tp:q:s        F_q[u]/(u^s)
  crt:(A,B,..)  Chinese product of chain-ring specs, e.g. crt:(zps:2:1,zps:3:1) = Z6
--degree m picks the Galois extension S of degree m over the ring.

Element literals (in --gens, rows separated by ';'):
  integers, a (generator of the top extension level), b (= a^2),
  g (generator of the level below the top), u (uniformizer of a tp ring),
  #n (raw element code), combined with + - * ^ and parentheses.
  Example over F4|F2: --gens "(1,0,a);(0,1,b)". Over crt rings entries are integers mod N.

Exit status: 0 ok, 2 verify --strict failure, 64 bad request, 65 guard exceeded,
70 internal cross-check fault.)TXT";

struct Request {
  std::string ring;
  unsigned degree = 1;
  std::optional<std::size_t> len;
  std::optional<std::size_t> k;
  std::optional<std::size_t> kp;
  std::string gens;
  std::string format;
  unsigned jobs = 1;
  std::string cache_dir;
  bool force = false;
  bool strict = false;
  bool all = false;
  std::string aleph_source = "oracle";
  std::uint64_t guard = kDefaultGuard;
  bool override_guard = false;
  std::vector<int> only;
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw ParameterError(std::string("missing ") + flag);
  return *v;
}

std::string need_gens(const Request& r) {
  if (r.gens.empty()) throw ParameterError("missing --gens");
  return r.gens;
}

Budget budget_of(const Request& r) { return {r.guard, r.override_guard, std::max(1u, r.jobs)}; }

std::string format_or(const Request& r, const char* fallback) { return r.format.empty() ? fallback : r.format; }

void no_csv(const std::string& fmt) {
  if (fmt == "csv") throw ParameterError("--format csv is only available for report output");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void emit_reports(std::ostream& out, const std::vector<CountReport>& reports, const std::string& fmt) {
  if (fmt == "json") {
    emit(out, reports_to_json(reports));
  } else if (fmt == "csv") {
    out << reports_to_csv(reports);
  } else {
    out << reports_to_text(reports);
  }
}

using Params = std::vector<std::pair<std::string, std::string>>;

Params params_of(const Request& r, std::initializer_list<const char*> keys) {
  Params p{{"ring", r.ring}};
  for (const char* key : keys) {
    const std::string k = key;
    if (k == "m") p.emplace_back("m", std::to_string(r.degree));
    if (k == "l") p.emplace_back("l", std::to_string(*r.len));
    if (k == "k") p.emplace_back("k", std::to_string(*r.k));
    if (k == "k'") p.emplace_back("k'", std::to_string(*r.kp));
  }
  return p;
}

struct Context {
  RingSpec spec;
  ExtPtr ext;      // chain ring with degree
  PirExtPtr pext;  // crt ring with degree
};

Context context_of(const Request& r) {
  if (r.ring.empty()) throw ParameterError("missing --ring");
  if (r.degree < 1) throw ParameterError("--degree must be >= 1");
  Context c;
  c.spec = parse_ring_spec(r.ring);
  if (c.spec.is_pir()) {
    c.pext = pir_extension_for(c.spec, r.degree);
  } else {
    c.ext = extension_for(c.spec, r.degree);
  }
  return c;
}

const GaloisExtension& chain_only(const Context& c, const char* cmd) {
  if (!c.ext) throw ParameterError(std::string(cmd) + " is not available for crt rings; run it per component");
  return *c.ext;
}

void check_k(std::size_t l, std::size_t k, std::optional<std::size_t> kp = std::nullopt) {
  if (k > l) throw ParameterError("need k <= l");
  if (kp && *kp > k) throw ParameterError("need k' <= k");
}

std::string code_text(const LinearCode& c) {
  return c.size() <= 256 ? format_codewords(c) : format_rows(c);
}

// ---- commands ------------------------------------------------------------

int cmd_binomial(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const std::size_t k = need(r.k, "--k");
  const std::size_t kp = need(r.kp, "--kp");
  BigInt v;
  std::string kind;
  if (c.pext) {
    v = pir_chain_binomial(*c.pext->ext(), static_cast<std::int64_t>(k), static_cast<std::int64_t>(kp));
    kind = "pir";
  } else {
    const ChainRing& S = *c.ext->ext();
    v = chain_binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(kp), S.q(), S.s());
    kind = S.s() == 1 ? "gaussian" : "chain";
  }
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  if (fmt == "json") {
    Json j;
    j["ring"] = r.ring;
    j["degree"] = r.degree;
    j["k"] = k;
    j["kp"] = kp;
    j["kind"] = kind;
    j["value"] = bigint_json(v);
    emit(out, j);
  } else {
    out << to_string(v) << '\n';
  }
  return ok;
}

int cmd_enum(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const std::size_t l = need(r.len, "--len");
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  const Budget budget = budget_of(r);

  if (c.pext) {
    const std::size_t k = need(r.k, "--k");
    check_k(l, k);
    std::vector<std::vector<LinearCode>> lists;
    BigInt total = 1;
    for (const auto& e : c.pext->components()) {
      lists.push_back(enum_free_codes(e->ext(), l, k, budget));
      total *= lists.back().size();
    }
    check_guard(total, budget, "crt enumeration");
    std::vector<std::size_t> idx(lists.size(), 0);
    const bool empty = std::any_of(lists.begin(), lists.end(), [](const auto& v) { return v.empty(); });
    while (!empty) {
      if (fmt == "json") {
        Json j = Json::array();
        for (std::size_t t = 0; t < lists.size(); ++t) {
          j.push_back(code_to_json(lists[t][idx[t]], c.spec.parts[t], r.degree));
        }
        out << j.dump() << '\n';
      } else {
        for (std::size_t t = 0; t < lists.size(); ++t) out << (t ? " | " : "") << format_rows(lists[t][idx[t]]);
        out << '\n';
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == lists[pos].size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
    return ok;
  }

  const RingPtr ring = c.ext->ext();
  EnumerationPlan plan;
  std::string target;
  if (r.all) {
    plan = all_submodules_plan(ring, l, budget);
    target = "all";
  } else if (!r.gens.empty()) {
    const std::size_t kp = need(r.kp, "--kp");
    const LinearCode parent = LinearCode::from_generators(ring, l, parse_rows(*ring, r.gens));
    plan = free_subcodes_plan(parent, kp, budget);
    target = "subcodes:kp=" + std::to_string(kp) + ":of=" + format_rows(parent);
  } else {
    const std::size_t k = need(r.k, "--k");
    check_k(l, k);
    plan = free_codes_plan(ring, l, k, budget);
    target = "free:k=" + std::to_string(k);
  }

  std::vector<LinearCode> codes;
  std::string cache_dir = r.cache_dir;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv("RINGCOUNT_CACHE_DIR")) cache_dir = env;
  }
  CacheHeader header{r.ring, r.degree, l, target, ""};
  bool cached = false;
  std::filesystem::path file;
  if (!cache_dir.empty()) {
    file = cache_path(cache_dir, header);
    if (!r.force) cached = read_cache(file, header, codes);
  }
  if (!cached) {
    codes = parallel_collect(plan, [](const LinearCode&) { return true; });
    if (!cache_dir.empty()) write_cache(file, header, codes);
  }
  for (const auto& code : codes) {
    if (fmt == "json") {
      out << code_to_json(code, r.ring, r.degree).dump() << '\n';
    } else {
      out << format_rows(code) << '\n';
    }
  }
  return ok;
}

int cmd_aleph(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const GaloisExtension& ext = chain_only(c, "aleph");
  const std::size_t l = need(r.len, "--len");
  const std::size_t k = need(r.k, "--k");
  check_k(l, k);
  const Budget budget = budget_of(r);
  std::string note;
  if (k < kappa(l, r.degree)) note = "rank below kappa: no full-trace code exists, value taken as 0";
  emit_reports(out,
               {make_report("aleph_formula", params_of(r, {"m", "l", "k"}), aleph_formula(ext, l, k, budget),
                            aleph_bruteforce(ext, l, k, budget), note)},
               format_or(r, "text"));
  return ok;
}

std::vector<AlephSource> sources_of(const Request& r) {
  if (r.aleph_source == "oracle") return {AlephSource::oracle};
  if (r.aleph_source == "eq4") return {AlephSource::formula};
  if (r.aleph_source == "both") return {AlephSource::oracle, AlephSource::formula};
  throw ParameterError("--aleph-source must be oracle, eq4 or both");
}

int cmd_omega(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const std::size_t l = need(r.len, "--len");
  const std::size_t k = need(r.k, "--k");
  check_k(l, k, r.kp);
  const Budget budget = budget_of(r);
  std::vector<std::size_t> kps;
  if (r.kp) {
    kps = {*r.kp};
  } else {
    for (std::size_t i = 0; i <= k; ++i) kps.push_back(i);
  }
  std::vector<CountReport> reports;
  Request rq = r;
  if (c.pext) {
    const PirOmegaHistogram walk = pir_omega_bruteforce(*c.pext, l, k, budget);
    for (std::size_t kp : kps) {
      rq.kp = kp;
      const OmegaHat oh = omega_hat(*c.pext, l, k, kp, OmegaFactor::oracle, budget);
      std::string factors;
      for (const auto& f : oh.factors) factors += (factors.empty() ? "" : "*") + to_string(f);
      const std::string flag = walk.shapes_differ ? "; component histograms differ in shape" : "";
      const BigInt by_max = walk.max_rank.count(kp) ? walk.max_rank.at(kp) : BigInt(0);
      const BigInt by_eq = walk.uniform_rank.count(kp) ? walk.uniform_rank.at(kp) : BigInt(0);
      reports.push_back(make_report("omega_hat[max_rank]", params_of(rq, {"m", "l", "k", "k'"}), oh.value, by_max,
                                    "factors " + factors + flag));
      reports.push_back(make_report("omega_hat[equal_rank]", params_of(rq, {"m", "l", "k", "k'"}), oh.value, by_eq,
                                    "factors " + factors + flag));
    }
  } else {
    const auto hist = omega_bruteforce(*c.ext, l, k, budget);
    for (std::size_t kp : kps) {
      rq.kp = kp;
      const BigInt oracle = hist.count(kp) ? hist.at(kp) : BigInt(0);
      for (AlephSource src : sources_of(r)) {
        reports.push_back(make_report("omega_formula[aleph=" + to_string(src) + "]", params_of(rq, {"m", "l", "k", "k'"}),
                                      omega_formula(*c.ext, l, k, kp, src, budget), oracle));
      }
    }
  }
  emit_reports(out, reports, format_or(r, "text"));
  return ok;
}

int cmd_lyle(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const GaloisExtension& ext = chain_only(c, "lyle");
  if (ext.base()->s() != 1) throw ParameterError("the Lyle formula is stated for fields (s = 1)");
  const std::size_t l = need(r.len, "--len");
  const std::size_t k = need(r.k, "--k");
  check_k(l, k, r.kp);
  const auto hist = omega_bruteforce(ext, l, k, budget_of(r));
  std::vector<CountReport> reports;
  Request rq = r;
  for (std::size_t kp = r.kp.value_or(0); kp <= r.kp.value_or(k); ++kp) {
    rq.kp = kp;
    reports.push_back(make_report("lyle_formula", params_of(rq, {"m", "l", "k", "k'"}),
                                  lyle_formula(l, r.degree, k, kp, ext.base()->q()),
                                  hist.count(kp) ? hist.at(kp) : BigInt(0)));
  }
  emit_reports(out, reports, format_or(r, "text"));
  return ok;
}

int cmd_minimal(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const GaloisExtension& ext = chain_only(c, "minimal");
  const std::size_t l = need(r.len, "--len");
  const MinimalSet set = minimal_full_trace_codes(ext, l, budget_of(r));
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  if (fmt == "json") {
    Json j;
    j["ring"] = r.ring;
    j["degree"] = r.degree;
    j["length"] = l;
    j["kappa"] = set.kappa;
    j["count"] = set.members.size();
    Json members = Json::array();
    for (const auto& m : set.members) members.push_back(code_to_json(m, r.ring, r.degree));
    j["members"] = std::move(members);
    emit(out, j);
  } else {
    out << "kappa " << set.kappa << ", " << set.members.size() << " minimal codes\n";
    for (const auto& m : set.members) out << format_rows(m) << '\n';
  }
  return ok;
}

int cmd_msets(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const GaloisExtension& ext = chain_only(c, "msets");
  const std::size_t l = need(r.len, "--len");
  const Budget budget = budget_of(r);
  const auto sizes = m_set_sizes(minimal_full_trace_codes(ext, l, budget), budget);
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  if (fmt == "json") {
    Json j = Json::object();
    for (const auto& [u, n] : sizes) j[std::to_string(u)] = n;
    emit(out, j);
  } else {
    for (const auto& [u, n] : sizes) out << u << ": " << n << '\n';
  }
  return ok;
}

LinearCode code_over_ext(const Request& r, const GaloisExtension& ext) {
  const RingPtr& S = ext.ext();
  auto rows = parse_rows(*S, need_gens(r));
  const std::size_t l = rows.front().size();
  if (r.len && *r.len != l) throw ParameterError("--len does not match the generator rows");
  return LinearCode::from_generators(S, l, rows);
}

void emit_code(std::ostream& out, const LinearCode& code, const Request& r, unsigned degree, const std::string& fmt) {
  if (fmt == "json") {
    emit(out, code_to_json(code, r.ring, degree));
  } else {
    out << code_text(code) << '\n';
  }
}

int cmd_restrict(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const GaloisExtension& ext = chain_only(c, "restrict");
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  emit_code(out, restriction(ext, code_over_ext(r, ext)), r, 1, fmt);
  return ok;
}

int cmd_trace(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const GaloisExtension& ext = chain_only(c, "trace");
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  emit_code(out, trace_code(ext, code_over_ext(r, ext)), r, 1, fmt);
  return ok;
}

int cmd_decompose(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const GaloisExtension& ext = chain_only(c, "decompose");
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  const Decomposition d = decompose(ext, code_over_ext(r, ext));
  if (fmt == "json") {
    Json j;
    j["b0"] = code_to_json(d.b0, r.ring, r.degree);
    j["b1"] = code_to_json(d.b1, r.ring, r.degree);
    emit(out, j);
  } else {
    out << "B0: " << format_rows(d.b0) << '\n' << "B1: " << format_rows(d.b1) << '\n';
  }
  return ok;
}

int cmd_crt(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  if (!c.pext) throw ParameterError("crt needs a crt:(...) ring");
  const PirPtr& R = c.spec.pir;
  auto rows = parse_pir_rows(*R, need_gens(r));
  const std::size_t l = rows.front().size();
  const PirCode code = pir_code_from_generators(R, l, rows);
  const bool is_free = is_free_pir_code(code);
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  if (fmt == "json") {
    Json j;
    j["ring"] = r.ring;
    j["length"] = l;
    j["rank"] = code.rank();
    j["free"] = is_free;
    j["size"] = bigint_json(code.size());
    Json comps = Json::array();
    for (std::size_t t = 0; t < code.components().size(); ++t) {
      comps.push_back(code_to_json(code.components()[t], c.spec.parts[t], 1));
    }
    j["components"] = std::move(comps);
    if (r.degree > 1) {
      if (auto f = c.pext->integer_modulus()) j["modulus"] = *f;
    }
    emit(out, j);
  } else {
    for (std::size_t t = 0; t < code.components().size(); ++t) {
      const auto& comp = code.components()[t];
      out << comp.ring()->name() << ": " << code_text(comp) << '\n';
    }
    out << "rank " << code.rank() << ", " << (is_free ? "free" : "not free") << ", size " << code.size() << '\n';
    if (r.degree > 1) {
      if (auto f = c.pext->integer_modulus()) {
        out << "f =";
        for (std::size_t i = 0; i < f->size(); ++i) out << ' ' << (*f)[i];
        out << "  (coefficients, constant first)\n";
      }
    }
  }
  return ok;
}

int cmd_report(const Request& r, std::ostream& out) {
  const Context c = context_of(r);
  const std::size_t l = need(r.len, "--len");
  const std::size_t k = need(r.k, "--k");
  const std::size_t kp = need(r.kp, "--kp");
  check_k(l, k, kp);
  const Budget budget = budget_of(r);
  std::vector<CountReport> reports;
  if (c.pext) {
    Request rq = r;
    const PirOmegaHistogram walk = pir_omega_bruteforce(*c.pext, l, k, budget);
    const OmegaHat oh = omega_hat(*c.pext, l, k, kp, OmegaFactor::oracle, budget);
    const BigInt by_max = walk.max_rank.count(kp) ? walk.max_rank.at(kp) : BigInt(0);
    const BigInt by_eq = walk.uniform_rank.count(kp) ? walk.uniform_rank.at(kp) : BigInt(0);
    const std::string flag = walk.shapes_differ ? "component histograms differ in shape" : "";
    reports.push_back(make_report("omega_hat[max_rank]", params_of(rq, {"m", "l", "k", "k'"}), oh.value, by_max, flag));
    reports.push_back(make_report("omega_hat[equal_rank]", params_of(rq, {"m", "l", "k", "k'"}), oh.value, by_eq, flag));
    reports.push_back(make_report("pir_chain_binomial", params_of(rq, {"m", "l", "k"}),
                                  pir_chain_binomial(*c.pext->ext(), static_cast<std::int64_t>(l),
                                                     static_cast<std::int64_t>(k)),
                                  walk.total));
    for (std::size_t t = 0; t < c.pext->components().size(); ++t) {
      for (auto& rep : comparison_report(*c.pext->components()[t], c.spec.parts[t], l, k, kp, budget)) {
        reports.push_back(std::move(rep));
      }
    }
  } else {
    reports = comparison_report(*c.ext, r.ring, l, k, kp, budget);
  }
  emit_reports(out, reports, format_or(r, "json"));
  return ok;
}

int cmd_verify(const Request& r, std::ostream& out) {
  const std::string fmt = format_or(r, "text");
  no_csv(fmt);
  const std::set<int> only(r.only.begin(), r.only.end());
  bool all_pass = true;
  Json arr = Json::array();
  run_acceptance(budget_of(r), only, [&](const CriterionResult& res) {
    all_pass = all_pass && res.pass;
    if (fmt == "json") {
      Json j;
      j["id"] = res.id;
      j["name"] = res.name;
      j["pass"] = res.pass;
      j["detail"] = res.detail;
      arr.push_back(std::move(j));
    } else {
      out << format_result(res) << std::endl;
    }
  });
  if (fmt == "json") emit(out, arr);
  return r.strict && !all_pass ? strict_mismatch : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting subring subcodes of linear codes over finite chain rings", "ringcount"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Request req;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", req.ring, "ring spec");
    sub->add_option("--degree,-m", req.degree, "extension degree m")->check(CLI::PositiveNumber);
    sub->add_option("--len,-l", req.len, "code length");
    sub->add_option("--k", req.k, "rank k");
    sub->add_option("--kp", req.kp, "rank k'");
    sub->add_option("--gens", req.gens, "generator rows, e.g. \"(1,0,a);(0,1,b)\"");
    sub->add_option("--format", req.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs,-j", req.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", req.cache_dir, "enumeration cache directory (default $RINGCOUNT_CACHE_DIR)");
    sub->add_flag("--force", req.force, "recompute even when a cache file exists");
    sub->add_option("--aleph-source", req.aleph_source, "aleph factor for omega: oracle, eq4 or both");
    sub->add_option("--guard", req.guard, "largest enumeration allowed without --override-guard");
    sub->add_flag("--override-guard", req.override_guard, "lift the enumeration guard");
  };

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Request&, std::ostream&);
  };
  const Entry entries[] = {
      {"binomial", "Gaussian / chain-ring / PIR binomial [|k k'|]", cmd_binomial},
      {"enum", "stream free codes (--k), all submodules (--all) or free subcodes (--gens --kp)", cmd_enum},
      {"aleph", "aleph(l, m, k): printed formula against enumeration", cmd_aleph},
      {"omega", "Omega(l, m, k, k'): printed formula against the restriction-rank histogram", cmd_omega},
      {"lyle", "Lyle's claimed count against enumeration", cmd_lyle},
      {"minimal", "minimal full-trace codes E(l, m, kappa)", cmd_minimal},
      {"msets", "sizes of the M(l, m, u) sets", cmd_msets},
      {"decompose", "B = B0 + B1 for a free code B over S", cmd_decompose},
      {"restrict", "subring subcode Res_R(B)", cmd_restrict},
      {"trace", "trace code Tr(B)", cmd_trace},
      {"crt", "split a code over a crt ring into components", cmd_crt},
      {"report", "full formula-vs-oracle comparison", cmd_report},
      {"verify", "run the acceptance suites", cmd_verify},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub);
    if (std::string(e.name) == "enum") sub->add_flag("--all", req.all, "enumerate every submodule");
    if (std::string(e.name) == "verify") {
      sub->add_flag("--strict", req.strict, "exit 2 when a criterion fails");
      sub->add_option("--only", req.only, "criterion numbers to run");
    }
    subs.emplace_back(sub, &e);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "error: " << msg << '\n';
    return usage;
  }

  try {
    for (const auto& [sub, entry] : subs) {
      if (sub->parsed()) return entry->fn(req, out);
    }
    return usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << " (raise --guard or pass --override-guard)\n";
    return guard;
  } catch (const InternalFault& e) {
    err << "internal fault: " << e.what() << '\n';
    return internal;
  } catch (const std::exception& e) {
    err << "internal fault: " << e.what() << '\n';
    return internal;
  }
}

}  // namespace ringcount::cli
