// Key-exchange protocols and period analysis.  See LICENSE.
#include "dmw/protocols.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "dmw/bigint.hpp"

namespace dmw {

std::uint64_t SplitMix64::uniform(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("SplitMix64::uniform: n = 0");
  // accept x >= 2^64 mod n, leaving a multiple of n equally likely values
  std::uint64_t cut = (-n) % n;
  for (;;) {
    std::uint64_t x = next();
    if (x >= cut) return x % n;
  }
}

size_t element_power(const Monoid& m, size_t a, unsigned long e) {
  if (a >= m.size()) throw std::invalid_argument("element_power: bad index");
  size_t result = m.unit();
  size_t base = a;
  while (e != 0) {
    if (e & 1UL) result = m.mul(result, base);
    e >>= 1;
    if (e != 0) base = m.mul(base, base);
  }
  return result;
}

namespace {

void check_element(const std::shared_ptr<const Monoid>& m, size_t x,
                   const char* what) {
  if (!m) throw std::invalid_argument(std::string(what) + ": null monoid");
  if (x >= m->size())
    throw std::invalid_argument(std::string(what) + ": element index " +
                                std::to_string(x) + " out of range");
}

// A word of 1..max_len uniform letters over the generator list.
size_t random_word(const Monoid& m, const std::vector<size_t>& gens,
                   size_t max_len, SplitMix64& rng) {
  size_t len = 1 + static_cast<size_t>(rng.uniform(max_len));
  size_t w = m.unit();
  for (size_t i = 0; i < len; ++i)
    w = m.mul(w, gens[rng.uniform(gens.size())]);
  return w;
}

}  // namespace

ProtocolSpec make_su_spec(std::shared_ptr<const Monoid> m, size_t g,
                          std::vector<size_t> gens_a,
                          std::vector<size_t> gens_b, std::uint64_t seed) {
  check_element(m, g, "make_su_spec");
  if (gens_a.empty() || gens_b.empty())
    throw std::invalid_argument("make_su_spec: empty generator list");
  for (size_t x : gens_a) check_element(m, x, "make_su_spec");
  for (size_t x : gens_b) check_element(m, x, "make_su_spec");
  // Generators commuting pairwise across the lists is enough: every word
  // over gens_a then commutes with every word over gens_b.
  for (size_t x : gens_a)
    for (size_t y : gens_b)
      if (m->mul(x, y) != m->mul(y, x)) {
        std::ostringstream os;
        os << "make_su_spec: generators do not commute: " << m->label(x)
           << " vs " << m->label(y);
        throw std::invalid_argument(os.str());
      }
  ProtocolSpec spec;
  spec.monoid = std::move(m);
  spec.g = g;
  spec.gens_a = std::move(gens_a);
  spec.gens_b = std::move(gens_b);
  spec.seed = seed;
  return spec;
}

ProtocolSpec make_stickel_spec(std::shared_ptr<const Monoid> m, size_t g,
                               size_t h, std::uint64_t seed) {
  check_element(m, g, "make_stickel_spec");
  check_element(m, h, "make_stickel_spec");
  if (m->mul(g, h) == m->mul(h, g))
    throw std::invalid_argument(
        "make_stickel_spec: degenerate configuration (gh = hg)");
  ProtocolSpec spec;
  spec.monoid = std::move(m);
  spec.g = g;
  spec.h = h;
  spec.seed = seed;
  return spec;
}

Transcript run_su(const ProtocolSpec& spec) {
  const Monoid& m = *spec.monoid;
  if (spec.gens_a.empty() || spec.gens_b.empty())
    throw std::invalid_argument("run_su: spec has no generator lists");
  SplitMix64 rng(spec.seed);
  size_t a = random_word(m, spec.gens_a, spec.max_word_len, rng);
  size_t a2 = random_word(m, spec.gens_a, spec.max_word_len, rng);
  size_t b = random_word(m, spec.gens_b, spec.max_word_len, rng);
  size_t b2 = random_word(m, spec.gens_b, spec.max_word_len, rng);
  Transcript t;
  t.protocol = "su";
  t.seed = spec.seed;
  t.g = spec.g;
  t.message_a = m.mul(m.mul(a, spec.g), a2);
  t.message_b = m.mul(m.mul(b, spec.g), b2);
  t.secret_a = m.mul(m.mul(a, t.message_b), a2);
  t.secret_b = m.mul(m.mul(b, t.message_a), b2);
  t.equal = (t.secret_a == t.secret_b);
  if (!t.equal)
    throw std::logic_error("run_su: derived secrets differ (invalid spec?)");
  return t;
}

Transcript run_stickel(const ProtocolSpec& spec) {
  const Monoid& m = *spec.monoid;
  SplitMix64 rng(spec.seed);
  unsigned long bound = spec.max_exponent + 1;
  unsigned long a = rng.uniform(bound);
  unsigned long a2 = rng.uniform(bound);
  unsigned long b = rng.uniform(bound);
  unsigned long b2 = rng.uniform(bound);
  size_t ga = element_power(m, spec.g, a);
  size_t gb = element_power(m, spec.g, b);
  size_t ha2 = element_power(m, spec.h, a2);
  size_t hb2 = element_power(m, spec.h, b2);
  Transcript t;
  t.protocol = "stickel";
  t.seed = spec.seed;
  t.g = spec.g;
  t.h = spec.h;
  t.message_a = m.mul(ga, ha2);
  t.message_b = m.mul(gb, hb2);
  t.secret_a = m.mul(m.mul(ga, t.message_b), ha2);
  t.secret_b = m.mul(m.mul(gb, t.message_a), hb2);
  t.equal = (t.secret_a == t.secret_b);
  if (!t.equal)
    throw std::logic_error(
        "run_stickel: derived secrets differ (invalid spec?)");
  return t;
}

DhReport dh_suitability(const Monoid& m, const CellStructure& cs, size_t a) {
  if (a >= m.size())
    throw std::invalid_argument("dh_suitability: element out of range");
  // Walk a, a^2, ... until a power repeats; the first repeat pins down the
  // index i (first position of the cycle) and period p (cycle length).
  std::unordered_map<size_t, unsigned long> seen;
  size_t x = a;
  unsigned long step = 1;
  unsigned long index = 0, period = 0;
  for (;;) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      index = it->second;
      period = step - it->second;
      break;
    }
    seen.emplace(x, step);
    x = m.mul(x, a);
    ++step;
  }
  DhReport r;
  r.element = a;
  r.index = index;
  r.period = period;
  auto factors = factor_int(static_cast<long>(period));
  r.largest_prime = factors.empty() ? 1 : factors.back().first;
  // The unique idempotent power is a^e where e is the smallest multiple of
  // the period that is >= the index.
  unsigned long e = period * ((index + period - 1) / period);
  r.idempotent = element_power(m, a, e);
  if (m.mul(r.idempotent, r.idempotent) != r.idempotent)
    throw std::logic_error("dh_suitability: idempotent power is not");
  Int h_order = 0;
  for (size_t y = 0; y < m.size(); ++y)
    if (cs.h_of[y] == cs.h_of[r.idempotent]) h_order += 1;
  r.h_order = h_order;
  if (!mpz_divisible_ui_p(h_order.get_mpz_t(), period))
    throw std::logic_error(
        "dh_suitability: period does not divide the H-cell order");
  return r;
}

size_t sample_ideal_element(const DiagramMonoid& m, int max_width,
                            SplitMix64& rng) {
  std::vector<size_t> pool;
  for (size_t i = 0; i < m.size(); ++i)
    if (width(m.at(i)) <= max_width) pool.push_back(i);
  if (pool.empty())
    throw std::invalid_argument("sample_ideal_element: empty ideal");
  return pool[rng.uniform(pool.size())];
}

std::pair<size_t, size_t> sample_noncommuting_pair(const Monoid& m,
                                                   SplitMix64& rng,
                                                   size_t tries) {
  for (size_t t = 0; t < tries; ++t) {
    size_t g = rng.uniform(m.size());
    size_t h = rng.uniform(m.size());
    if (m.mul(g, h) != m.mul(h, g)) return {g, h};
  }
  throw std::logic_error(
      "sample_noncommuting_pair: no noncommuting pair found");
}

}  // namespace dmw
