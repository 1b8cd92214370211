#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace matchlat {

using Bitset = boost::dynamic_bitset<>;

// Finite poset stored as a transitively reduced cover relation plus the
// full order as bitsets. Elements carry opaque string labels.
class Poset {
 public:
  Poset() = default;
  // covers are (lower, upper) label pairs; implied covers are dropped,
  // cycles rejected
  Poset(std::vector<std::string> labels,
        std::vector<std::pair<std::string, std::string>> covers);

  static Poset from_indices(std::vector<std::string> labels,
                            std::vector<std::pair<int, int>> cover_indices);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index(const std::string& label) const;  // -1 if absent

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool lt(int a, int b) const { return a != b && leq_[a][b]; }
  const Bitset& up_set(int a) const { return up_[a]; }    // {b : a <= b}
  const Bitset& down_set(int a) const { return down_[a]; }  // {b : b <= a}

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int a) const { return uppers_[a]; }
  const std::vector<int>& lower_covers(int a) const { return lowers_[a]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  // length of the longest chain from a minimal element up to a
  int height(int a) const { return height_[a]; }

  Poset dual() const;
  Poset induced(const std::vector<int>& subset) const;
  bool operator==(const Poset& o) const {
    return labels_ == o.labels_ && covers_ == o.covers_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;  // (lower, upper), sorted
  std::vector<Bitset> leq_;  // leq_[a][b] = a <= b (same as up_)
  std::vector<Bitset> up_, down_;
  std::vector<std::vector<int>> uppers_, lowers_;
  std::vector<int> height_;

  void finish(std::vector<std::pair<int, int>> relation);
};

// Order isomorphism p -> q as an index map, if one exists. Backtracking
// with degree/height/up-down-set-size pruning.
std::optional<std::vector<int>> iso(const Poset& p, const Poset& q,
                                    int max_size = 5000);

Poset chain(int n);
Poset antichain(int n);
Poset boolean_poset(int k);  // product of k two-element chains
Poset product_of_chains(const std::vector<int>& lengths);

}  // namespace matchlat
