// Key-exchange protocols over finite monoids: the Shpilrain–Ushakov
// commuting-sets exchange, Stickel's power exchange, and Diffie–Hellman
// suitability (index/period) analysis.  See LICENSE.
#ifndef DMW_PROTOCOLS_HPP
#define DMW_PROTOCOLS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dmw/monoid.hpp"

namespace dmw {

// ---------------------------------------------------------------------------
// Deterministic randomness
// ---------------------------------------------------------------------------

// SplitMix64: a small, well-known 64-bit generator.  Every transcript
// records the seed, so runs are reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n) by rejection sampling (no modulo bias).
  std::uint64_t uniform(std::uint64_t n);

 private:
  std::uint64_t state_;
};

// a^e by square-and-multiply; e = 0 gives the unit.
size_t element_power(const Monoid& m, size_t a, unsigned long e);

// ---------------------------------------------------------------------------
// Protocol specifications and transcripts
// ---------------------------------------------------------------------------

struct ProtocolSpec {
  std::shared_ptr<const Monoid> monoid;
  size_t g = 0;  // public element
  size_t h = 0;  // second public element (Stickel only)
  // Commuting generator lists (SU only): party A draws secret words over
  // gens_a, party B over gens_b.
  std::vector<size_t> gens_a, gens_b;
  std::uint64_t seed = 0;
  // SU secrets are uniform words of 1..max_word_len letters; Stickel
  // exponents are uniform in 0..max_exponent.
  size_t max_word_len = 8;
  unsigned long max_exponent = 256;
};

// Validated constructors.  make_su_spec checks that every generator of A
// commutes with every generator of B (which forces the generated submonoids
// to commute elementwise); make_stickel_spec rejects gh = hg as degenerate.
ProtocolSpec make_su_spec(std::shared_ptr<const Monoid> m, size_t g,
                          std::vector<size_t> gens_a,
                          std::vector<size_t> gens_b, std::uint64_t seed);
ProtocolSpec make_stickel_spec(std::shared_ptr<const Monoid> m, size_t g,
                               size_t h, std::uint64_t seed);

struct Transcript {
  std::string protocol;  // "su" or "stickel"
  std::uint64_t seed = 0;
  size_t g = 0;
  std::optional<size_t> h;    // Stickel only
  size_t message_a = 0;       // a g a'   resp.  g^a h^a'
  size_t message_b = 0;       // b g b'   resp.  g^b h^b'
  size_t secret_a = 0;        // a (b g b') a'   resp.  g^a (g^b h^b') h^a'
  size_t secret_b = 0;        // b (a g a') b'   resp.  g^b (g^a h^a') h^b'
  bool equal = false;         // always true; the run asserts it
};

// SU: party A draws secret words a, a' over gens_a and communicates a g a';
// party B draws b, b' over gens_b and sends b g b'.  The common secret is
// a b g b' a' = b a g a' b'.  Throws std::logic_error if the derived secrets
// ever disagree (an algebraic impossibility for a valid spec).
Transcript run_su(const ProtocolSpec& spec);

// Stickel: with public g, h (gh != hg), party A draws exponents a, a' and
// communicates g^a h^a'; party B draws b, b' and sends g^b h^b'.  The common
// secret is g^{a+b} h^{a'+b'}.
Transcript run_stickel(const ProtocolSpec& spec);

// ---------------------------------------------------------------------------
// Diffie–Hellman suitability
// ---------------------------------------------------------------------------

// The monogenic data of a: the smallest i >= 1 and p >= 1 with
// a^{i+p} = a^i, the largest prime factor of p, the idempotent power e of a,
// and |H(e)| — which the period always divides.
struct DhReport {
  size_t element = 0;
  unsigned long index = 1;
  unsigned long period = 1;
  long largest_prime = 1;  // 1 when the period is 1
  size_t idempotent = 0;   // e = a^m, the unique idempotent power
  Int h_order;             // |H(e)|
};

DhReport dh_suitability(const Monoid& m, const CellStructure& cs, size_t a);

// ---------------------------------------------------------------------------
// Sampling helpers for protocol configuration
// ---------------------------------------------------------------------------

// Uniform element of the ideal { x : width(x) <= max_width }.  This is the
// natural public-g pool when the platform is a width truncation: secrets act
// by multiplication, so every message stays inside the ideal.
size_t sample_ideal_element(const DiagramMonoid& m, int max_width,
                            SplitMix64& rng);

// Uniform pair (g, h) with gh != hg, by rejection; throws std::logic_error
// if none is found within the guard (e.g. a commutative monoid).
std::pair<size_t, size_t> sample_noncommuting_pair(const Monoid& m,
                                                   SplitMix64& rng,
                                                   size_t tries = 1000);

}  // namespace dmw

#endif  // DMW_PROTOCOLS_HPP
