#include "ringcount/pir.hpp"

#include <algorithm>
#include <utility>
#include <set>

#include "ringcount/errors.hpp"

namespace ringcount {

namespace {

// Inverse of a modulo n, a and n coprime.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InternalFault("CRT moduli are not coprime");
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

PirRing::PirRing(Private, std::vector<RingPtr> components) : components_(std::move(components)) {
  std::set<std::uint32_t> primes;
  bool integer = true;
  std::uint64_t n = 1;
  for (const auto& r : components_) {
    size_ *= r->size();
    if (!r->is_leaf() || r->family() != Family::galois_ring || !primes.insert(r->p()).second) integer = false;
    n *= r->size();
  }
  if (integer) modulus_ = n;
}

PirPtr PirRing::make(std::vector<RingPtr> components) {
  if (components.empty()) throw ParameterError("a PIR needs at least one component");
  std::uint64_t size = 1;
  for (const auto& r : components) {
    if (!r) throw ParameterError("null PIR component");
    size *= r->size();
    if (size > (1ULL << 32)) throw ParameterError("PIR is too large");
  }
  return std::make_shared<const PirRing>(Private{}, std::move(components));
}

std::string PirRing::name() const {
  if (has_integer_model()) return "Z" + std::to_string(modulus_);
  std::string out = "CRT(";
  for (std::size_t t = 0; t < components_.size(); ++t) out += (t ? "," : "") + components_[t]->name();
  return out + ")";
}

PirElem PirRing::phi(std::uint64_t a) const {
  if (!has_integer_model()) throw ParameterError("PIR has no integer model");
  PirElem out;
  for (const auto& r : components_) out.push_back(static_cast<Elem>(a % modulus_ % r->size()));
  return out;
}

std::uint64_t PirRing::phi_inverse(const PirElem& x) const {
  if (!has_integer_model()) throw ParameterError("PIR has no integer model");
  if (x.size() != components_.size()) throw ParameterError("element has the wrong number of components");
  std::uint64_t acc = 0;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    const std::uint64_t nt = components_[t]->size();
    const std::uint64_t mt = modulus_ / nt;
    const std::uint64_t term = x[t] % nt * inverse_mod(mt % nt, nt) % nt * mt % modulus_;
    acc = (acc + term) % modulus_;
  }
  return acc;
}

std::uint64_t PirRing::index_of(const PirElem& x) const {
  if (x.size() != components_.size()) throw ParameterError("element has the wrong number of components");
  std::uint64_t idx = 0, radix = 1;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    if (x[t] >= components_[t]->size()) throw ParameterError("component element out of range");
    idx += x[t] * radix;
    radix *= components_[t]->size();
  }
  return idx;
}

PirElem PirRing::from_index(std::uint64_t i) const {
  PirElem out;
  for (const auto& r : components_) {
    out.push_back(static_cast<Elem>(i % r->size()));
    i /= r->size();
  }
  return out;
}

PirElem PirRing::add(const PirElem& a, const PirElem& b) const {
  PirElem out(components_.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = components_[t]->add(a[t], b[t]);
  return out;
}

PirElem PirRing::mul(const PirElem& a, const PirElem& b) const {
  PirElem out(components_.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = components_[t]->mul(a[t], b[t]);
  return out;
}

PirCode::PirCode(PirPtr ring, std::vector<LinearCode> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() != ring_->count()) throw ParameterError("one component code per component ring");
  for (std::size_t t = 0; t < components_.size(); ++t) {
    if (components_[t].ring() != ring_->components()[t]) throw RingMismatch("component code over the wrong ring");
    if (components_[t].length() != components_[0].length()) throw ParameterError("component codes differ in length");
  }
}

std::size_t PirCode::rank() const {
  std::size_t r = 0;
  for (const auto& c : components_) r = std::max(r, c.rank());
  return r;
}

BigInt PirCode::size() const {
  BigInt n = 1;
  for (const auto& c : components_) n *= c.size();
  return n;
}

bool PirCode::contains(const PirVec& v) const {
  if (v.size() != length()) throw ParameterError("vector length differs from code length");
  for (std::size_t t = 0; t < components_.size(); ++t) {
    Vec w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j].at(t);
    if (!components_[t].contains(w)) return false;
  }
  return true;
}

std::vector<PirVec> PirCode::codewords() const {
  std::vector<std::vector<Vec>> lists;
  for (const auto& c : components_) lists.push_back(c.codewords());
  std::vector<PirVec> out;
  std::vector<std::size_t> idx(lists.size(), 0);
  const std::size_t l = length();
  while (true) {
    PirVec v(l, PirElem(lists.size()));
    for (std::size_t t = 0; t < lists.size(); ++t) {
      for (std::size_t j = 0; j < l; ++j) v[j][t] = lists[t][idx[t]][j];
    }
    out.push_back(std::move(v));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == lists[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return out;
}

PirCode crt_combine(const PirPtr& ring, std::vector<LinearCode> components) {
  return PirCode(ring, std::move(components));
}

std::vector<LinearCode> crt_split(const PirCode& code) { return code.components(); }

PirCode pir_code_from_generators(const PirPtr& ring, std::size_t length, const std::vector<PirVec>& rows) {
  std::vector<LinearCode> comps;
  for (std::size_t t = 0; t < ring->count(); ++t) {
    std::vector<Vec> crow;
    for (const auto& row : rows) {
      if (row.size() != length) throw ParameterError("generator length differs from code length");
      Vec w(length);
      for (std::size_t j = 0; j < length; ++j) {
        if (row[j].size() != ring->count()) throw ParameterError("element has the wrong number of components");
        w[j] = row[j][t];
      }
      crow.push_back(std::move(w));
    }
    comps.push_back(LinearCode::from_generators(ring->components()[t], length, crow));
  }
  return PirCode(ring, std::move(comps));
}

PirCode pir_zero_code(const PirPtr& ring, std::size_t length) {
  std::vector<LinearCode> comps;
  for (const auto& r : ring->components()) comps.emplace_back(r, length);
  return PirCode(ring, std::move(comps));
}

bool is_free_pir_code(const PirCode& code) {
  const auto& comps = code.components();
  return std::all_of(comps.begin(), comps.end(), [&](const LinearCode& c) {
    return c.is_free() && c.rank() == comps.front().rank();
  });
}

PirCode pir_dual(const PirCode& code) {
  std::vector<LinearCode> comps;
  for (const auto& c : code.components()) comps.push_back(dual(c));
  return PirCode(code.ring(), std::move(comps));
}

PirCode pir_sum(const PirCode& a, const PirCode& b) {
  if (a.ring() != b.ring()) throw RingMismatch("sum of PIR codes over different rings");
  std::vector<LinearCode> comps;
  for (std::size_t t = 0; t < a.components().size(); ++t) comps.push_back(sum_codes(a.components()[t], b.components()[t]));
  return PirCode(a.ring(), std::move(comps));
}

BigInt pir_chain_binomial(const PirRing& ring, std::int64_t k, std::int64_t kp) {
  BigInt n = 1;
  for (const auto& r : ring.components()) n *= chain_binomial(k, kp, r->q(), r->s());
  return n;
}

std::shared_ptr<const PirExtension> PirExtension::make(const PirPtr& base, unsigned degree) {
  if (degree < 1) throw ParameterError("extension degree must be >= 1");
  auto out = std::make_shared<PirExtension>();
  out->base_ = base;
  out->degree_ = degree;
  std::vector<RingPtr> ext_rings;
  for (const auto& r : base->components()) {
    out->components_.push_back(GaloisExtension::make(r, degree));
    ext_rings.push_back(out->components_.back()->ext());
  }
  out->ext_ = PirRing::make(std::move(ext_rings));
  for (unsigned i = 0; i <= degree; ++i) {
    PirElem c;
    for (const auto& e : out->components_) c.push_back(e->modulus()[i]);
    out->modulus_.push_back(std::move(c));
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> PirExtension::integer_modulus() const {
  if (!base_->has_integer_model()) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (const auto& c : modulus_) out.push_back(base_->phi_inverse(c));
  return out;
}

PirElem PirExtension::frobenius(const PirElem& x) const {
  PirElem out(x.size());
  for (std::size_t t = 0; t < components_.size(); ++t) out[t] = components_[t]->frobenius(x.at(t));
  return out;
}

PirElem PirExtension::trace(const PirElem& x) const {
  PirElem out(x.size());
  for (std::size_t t = 0; t < components_.size(); ++t) out[t] = components_[t]->trace(x.at(t));
  return out;
}

PirElem PirExtension::from_coordinates(const std::vector<PirElem>& coords) const {
  if (coords.size() != degree_) throw ParameterError("expected m coordinates");
  PirElem out;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    std::vector<Elem> c;
    for (const auto& x : coords) c.push_back(x.at(t));
    out.push_back(components_[t]->from_coordinates(c));
  }
  return out;
}

PirCode pir_trace_code(const PirExtension& ext, const PirCode& code) {
  if (code.ring() != ext.ext()) throw RingMismatch("code is not over the extension PIR");
  std::vector<LinearCode> comps;
  for (std::size_t t = 0; t < ext.components().size(); ++t) {
    comps.push_back(trace_code(*ext.components()[t], code.components()[t]));
  }
  return PirCode(ext.base(), std::move(comps));
}

PirCode pir_restriction(const PirExtension& ext, const PirCode& code) {
  if (code.ring() != ext.ext()) throw RingMismatch("code is not over the extension PIR");
  std::vector<LinearCode> comps;
  for (std::size_t t = 0; t < ext.components().size(); ++t) {
    comps.push_back(restriction(*ext.components()[t], code.components()[t]));
  }
  return PirCode(ext.base(), std::move(comps));
}

std::string to_string(OmegaFactor f) {
  switch (f) {
    case OmegaFactor::oracle: return "oracle";
    case OmegaFactor::formula_oracle_aleph: return "formula[aleph=oracle]";
    case OmegaFactor::formula_eq4: return "formula[aleph=eq4]";
  }
  return "?";
}

OmegaHat omega_hat(const PirExtension& ext, std::size_t l, std::size_t k, std::size_t kp, OmegaFactor source,
                   Budget budget) {
  OmegaHat out;
  out.value = 1;
  for (const auto& e : ext.components()) {
    BigInt f;
    switch (source) {
      case OmegaFactor::oracle: {
        auto h = omega_bruteforce(*e, l, k, budget);
        f = h.count(kp) ? h[kp] : BigInt(0);
        break;
      }
      case OmegaFactor::formula_oracle_aleph: f = omega_formula(*e, l, k, kp, AlephSource::oracle, budget); break;
      case OmegaFactor::formula_eq4: f = omega_formula(*e, l, k, kp, AlephSource::formula, budget); break;
    }
    out.factors.push_back(f);
    out.value *= f;
  }
  return out;
}

PirOmegaHistogram pir_omega_bruteforce(const PirExtension& ext, std::size_t l, std::size_t k, Budget budget) {
  std::vector<std::vector<std::size_t>> ranks;
  BigInt tuples = 1;
  PirOmegaHistogram out;
  for (const auto& e : ext.components()) {
    std::vector<std::size_t> r;
    std::map<std::size_t, BigInt> hist;
    for (const auto& b : parallel_collect(free_codes_plan(e->ext(), l, k, budget), [](const LinearCode&) { return true; })) {
      r.push_back(restriction(*e, b).rank());
      hist[r.back()] += 1;
    }
    tuples *= r.size();
    ranks.push_back(std::move(r));
    out.component_histograms.push_back(std::move(hist));
  }
  check_guard(tuples, budget, "PIR tuple walk");

  std::vector<std::size_t> idx(ranks.size(), 0);
  out.total = 0;
  const bool any_empty = std::any_of(ranks.begin(), ranks.end(), [](const auto& r) { return r.empty(); });
  while (!any_empty) {
    std::size_t hi = 0;
    bool uniform = true;
    for (std::size_t t = 0; t < ranks.size(); ++t) {
      const std::size_t r = ranks[t][idx[t]];
      hi = std::max(hi, r);
      uniform = uniform && r == ranks[0][idx[0]];
    }
    out.max_rank[hi] += 1;
    if (uniform) out.uniform_rank[hi] += 1;
    out.total += 1;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == ranks[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }

  for (const auto& h : out.component_histograms) {
    std::set<std::size_t> a, b;
    for (const auto& kv : h) a.insert(kv.first);
    for (const auto& kv : out.component_histograms.front()) b.insert(kv.first);
    if (a != b) out.shapes_differ = true;
  }
  return out;
}

}  // namespace ringcount
