// families.hpp — the nine diagram families.  See LICENSE.
//
// Each family is a submonoid of the degree-n partition monoid cut out by a
// shape predicate (block sizes, planarity, through-only blocks).  This module
// provides cardinality formulas, deterministic enumeration, generating sets,
// and membership tests.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmw/bigint.hpp"
#include "dmw/diagram.hpp"

namespace dmw {

enum class Family {
  TL,               // planar perfect matchings (Temperley-Lieb)
  Motzkin,          // planar partial matchings
  Brauer,           // perfect matchings
  PlanarRook,       // planar, blocks <= 2, pairs through-only
  Rook,             // blocks <= 2, pairs through-only (partial injections)
  RookBrauer,       // partial matchings
  PlanarPartition,  // planar set partitions
  Partition,        // all set partitions
  Symmetric,        // permutations
};

// Case-insensitive names: tl, motzkin, brauer, prook, rook, rookbrauer,
// ppartition, partition, sym.
std::optional<Family> parse_family(const std::string& name);
const char* family_name(Family f);

// Thrown when an operation would exceed a configured resource guard; the
// message names the guard and the size that tripped it.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumGuard {
  long max_elements = 3'000'000;
};

// |family_n| by closed formula (exact).
Int family_cardinality(Family f, int n);

// All elements, sorted lexicographically by canonical serialization.  Throws
// resource_error if the cardinality exceeds the guard.
std::vector<Diagram> enumerate_family(Family f, int n, const EnumGuard& guard = {});

// A finite generating set (without the identity).
std::vector<Diagram> family_generators(Family f, int n);

// Shape predicate for membership of an arbitrary diagram.
bool is_member(Family f, const Diagram& d);

// Possible widths of elements, descending: step 2 for the matching families
// TL and Brauer, step 1 otherwise, {n} for the symmetric group.
std::vector<int> family_apex_widths(Family f, int n);

}  // namespace dmw
