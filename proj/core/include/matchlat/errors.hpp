#pragma once

#include <stdexcept>
#include <string>

namespace matchlat {

// Bad input or a precondition violation. CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& w) : std::runtime_error(w) {}
};

// A property the theory guarantees failed to hold. Always a bug or an
// invalid corpus entry. CLI maps this to exit code 3.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& w) : std::logic_error(w) {}
};

#define MATCHLAT_ERROR(NAME, BASE)             \
  struct NAME : BASE {                         \
    explicit NAME(const std::string& w = "")   \
        : BASE(std::string(#NAME) + (w.empty() ? "" : ": " + w)) {} \
  }

MATCHLAT_ERROR(ParseError, ValidationError);
MATCHLAT_ERROR(NotBipartite, ValidationError);
MATCHLAT_ERROR(EdgeCrossing, ValidationError);
MATCHLAT_ERROR(DuplicateEdge, ValidationError);
MATCHLAT_ERROR(DanglingEndpoint, ValidationError);
MATCHLAT_ERROR(Disconnected, ValidationError);
MATCHLAT_ERROR(UnknownCell, ValidationError);
MATCHLAT_ERROR(NotAPerfectMatching, ValidationError);
MATCHLAT_ERROR(CellNotAlternating, ValidationError);
MATCHLAT_ERROR(CellsNotDisjoint, ValidationError);
MATCHLAT_ERROR(NoPerfectMatching, ValidationError);
MATCHLAT_ERROR(CyclicOrder, ValidationError);
MATCHLAT_ERROR(NotALattice, ValidationError);
MATCHLAT_ERROR(NotDistributive, ValidationError);
MATCHLAT_ERROR(HasseMismatch, InvariantError);
MATCHLAT_ERROR(TooLarge, ValidationError);
MATCHLAT_ERROR(GraphIsPlanar, ValidationError);
MATCHLAT_ERROR(NotProperCell, ValidationError);

#undef MATCHLAT_ERROR

}  // namespace matchlat
