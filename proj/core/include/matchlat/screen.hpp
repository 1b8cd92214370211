#pragma once

#include <map>
#include <optional>

#include "matchlat/lattice.hpp"

namespace matchlat {

// The 11-element poset with a top, four middle elements, and six bottom
// elements indexed by middle pairs.
Poset delta_poset();

struct K33Witness {
  std::string element;
  std::vector<std::string> upper_covers;                  // >= 3
  std::vector<std::string> meet_irreducible_lower_covers;  // >= 3
  bool on_dual = false;
};

// An element covered by >= 3 elements that covers >= 3 meet-irreducible
// elements certifies non-matchability. Tries the lattice, then its dual.
std::optional<K33Witness> k33_test(const Lattice& l);

// Injective order-embedding of pattern whose image is convex in host.
// Returned map is pattern label -> host label.
std::optional<std::map<std::string, std::string>> contains_convex_subposet(
    const Poset& host, const Poset& pattern, int max_size = 5000);

struct ScreenVerdict {
  enum class Status { NonMatchable, NotFlagged };
  enum class Reason { None, NotDistributive, K33Criterion, DeltaConvex,
                      FactorPropagation };
  Status status = Status::NotFlagged;
  Reason reason = Reason::None;
  std::optional<K33Witness> k33;
  std::optional<std::map<std::string, std::string>> delta_embedding;
  std::vector<std::string> factor_path;  // combinator path to a flagged factor
  std::shared_ptr<ScreenVerdict> factor_verdict;
};

ScreenVerdict screen(const Lattice& l);

// Independent re-validation of a verdict's certificate against the raw
// lattice. Throws InvariantError when the certificate does not check out.
void validate_certificate(const Lattice& l, const ScreenVerdict& v);

std::string reason_string(ScreenVerdict::Reason r);

}  // namespace matchlat
