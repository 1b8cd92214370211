#pragma once

#include <memory>

#include "matchlat/poset.hpp"

namespace matchlat {

// How a lattice was built; screening propagates non-matchability through
// these combinators.
struct Provenance {
  enum class Kind { Leaf, Product, LinearSum, VerticalSum };
  Kind kind = Kind::Leaf;
  std::vector<std::shared_ptr<const class Lattice>> factors;
};

class Lattice {
 public:
  // Validates that the poset has all pairwise meets and joins.
  static Lattice from_poset(Poset p);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& label(int i) const { return poset_.label(i); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }

  bool is_distributive() const;
  std::vector<int> meet_irreducibles() const;  // exactly one upper cover
  std::vector<int> join_irreducibles() const;  // exactly one lower cover

  Lattice dual() const;

  const Provenance& provenance() const { return prov_; }
  void set_provenance(Provenance p) { prov_ = std::move(p); }

 private:
  Poset poset_;
  std::vector<std::vector<int>> meet_, join_;
  int top_ = -1, bottom_ = -1;
  Provenance prov_;
};

// All up-closed subsets of p under anti-inclusion; meet = union,
// join = intersection. Labels are membership bitstrings over p's order.
Lattice filters(const Poset& p, std::size_t max_size = 1'000'000);

// Poset of join-irreducibles; verifies the round-trip isomorphism
// l ~ filters(birkhoff(l)) via x -> {j : j <=/= x}.
Poset birkhoff(const Lattice& l);

Lattice product(const Lattice& a, const Lattice& b);
Lattice linear_sum(const Lattice& lower, const Lattice& upper);
Lattice vertical_sum(const Lattice& lower, const Lattice& upper);

Lattice chain_lattice(int n);
Lattice boolean_lattice(int k);

}  // namespace matchlat
