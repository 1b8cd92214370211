#include "matchlat/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "matchlat/errors.hpp"

namespace matchlat {

Lattice Lattice::from_poset(Poset p) {
  const int n = p.size();
  if (n == 0) throw NotALattice("empty poset");
  Lattice l;
  auto maxima = p.maximal_elements();
  auto minima = p.minimal_elements();
  if (maxima.size() != 1 || minima.size() != 1)
    throw NotALattice("top or bottom is not unique");
  l.top_ = maxima[0];
  l.bottom_ = minima[0];

  auto bound = [&](int a, int b, bool lower) -> int {
    Bitset common = lower ? (p.down_set(a) & p.down_set(b))
                          : (p.up_set(a) & p.up_set(b));
    int best = -1;
    for (auto i = common.find_first(); i != Bitset::npos;
         i = common.find_next(i)) {
      int v = static_cast<int>(i);
      if (best == -1 ||
          (lower ? p.height(v) > p.height(best) : p.height(v) < p.height(best)))
        best = v;
    }
    if (best == -1) return -1;
    // best must bound every common element
    const Bitset& cone = lower ? p.down_set(best) : p.up_set(best);
    if ((common & ~cone).any()) return -1;
    return best;
  };

  l.meet_.assign(n, std::vector<int>(n));
  l.join_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int m = bound(a, b, true);
      int j = bound(a, b, false);
      if (m < 0)
        throw NotALattice("no meet of " + p.label(a) + " and " + p.label(b));
      if (j < 0)
        throw NotALattice("no join of " + p.label(a) + " and " + p.label(b));
      l.meet_[a][b] = l.meet_[b][a] = m;
      l.join_[a][b] = l.join_[b][a] = j;
    }
  l.poset_ = std::move(p);
  return l;
}

std::vector<int> Lattice::meet_irreducibles() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (poset_.upper_covers(i).size() == 1) out.push_back(i);
  return out;
}

std::vector<int> Lattice::join_irreducibles() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (poset_.lower_covers(i).size() == 1) out.push_back(i);
  return out;
}

bool Lattice::is_distributive() const {
  // distributive iff every join-irreducible is join-prime:
  // j <= x v y implies j <= x or j <= y
  const int n = size();
  auto ji = join_irreducibles();
  const int k = static_cast<int>(ji.size());
  std::vector<Bitset> below(n, Bitset(k));  // J(x) = {j in JI : j <= x}
  for (int x = 0; x < n; ++x)
    for (int t = 0; t < k; ++t)
      if (leq(ji[t], x)) below[x].set(t);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (below[join_[x][y]] != (below[x] | below[y])) return false;
  return true;
}

Lattice Lattice::dual() const { return from_poset(poset_.dual()); }

Lattice filters(const Poset& p, std::size_t max_size) {
  const int n = p.size();
  if (n > 64) throw TooLarge("filters over more than 64 elements");
  // up-closed subsets: a set is a filter iff with every element it
  // contains all the element's upper covers
  std::vector<std::uint64_t> up_mask(n, 0);
  for (auto [a, b] : p.covers()) up_mask[a] |= (1ULL << b);

  std::vector<std::uint64_t> filter_masks;
  // decide elements from the top of the poset down
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.height(a) > p.height(b); });
  std::function<void(std::size_t, std::uint64_t)> rec =
      [&](std::size_t k, std::uint64_t cur) {
        if (filter_masks.size() > max_size)
          throw TooLarge("filter count exceeds " + std::to_string(max_size));
        if (k == order.size()) {
          filter_masks.push_back(cur);
          return;
        }
        int v = order[k];
        rec(k + 1, cur);  // v excluded
        if ((up_mask[v] & ~cur) == 0) rec(k + 1, cur | (1ULL << v));
      };
  rec(0, 0);
  std::sort(filter_masks.begin(), filter_masks.end());

  std::map<std::uint64_t, int> index_of;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < filter_masks.size(); ++i) {
    index_of[filter_masks[i]] = static_cast<int>(i);
    std::string lab(n, '0');
    for (int e = 0; e < n; ++e)
      if (filter_masks[i] >> e & 1) lab[e] = '1';
    labels.push_back(lab);
  }
  // anti-inclusion order: F1 <= F2 iff F1 contains F2; covers drop one element
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < filter_masks.size(); ++i) {
    std::uint64_t f = filter_masks[i];
    for (int e = 0; e < n; ++e) {
      if (!(f >> e & 1)) continue;
      auto it = index_of.find(f & ~(1ULL << e));
      if (it != index_of.end())
        covers.emplace_back(static_cast<int>(i), it->second);
    }
  }
  return Lattice::from_poset(
      Poset::from_indices(std::move(labels), std::move(covers)));
}

Poset birkhoff(const Lattice& l) {
  if (!l.is_distributive()) throw NotDistributive("birkhoff");
  auto ji = l.join_irreducibles();
  Poset j = l.poset().induced(ji);

  // verify the round trip x -> {j : j <=/= x} is an isomorphism onto
  // filters(J)
  Lattice fl = filters(j);
  if (fl.size() != l.size())
    throw InvariantError("birkhoff round trip: size mismatch");
  const int k = static_cast<int>(ji.size());
  std::vector<int> image(l.size());
  std::vector<char> hit(fl.size(), 0);
  for (int x = 0; x < l.size(); ++x) {
    std::string lab(k, '0');
    for (int t = 0; t < k; ++t)
      if (!l.leq(ji[t], x)) lab[t] = '1';
    int w = fl.poset().index(lab);
    if (w < 0 || hit[w])
      throw InvariantError("birkhoff round trip: map is not a bijection");
    hit[w] = 1;
    image[x] = w;
  }
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (l.leq(x, y) != fl.leq(image[x], image[y]))
        throw InvariantError("birkhoff round trip: order mismatch");
  return j;
}

Lattice product(const Lattice& a, const Lattice& b) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  auto code = [&](int x, int y) { return x * b.size() + y; };
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  for (int x = 0; x < a.size(); ++x)
    for (auto [lo, hi] : b.poset().covers())
      covers.emplace_back(code(x, lo), code(x, hi));
  for (auto [lo, hi] : a.poset().covers())
    for (int y = 0; y < b.size(); ++y)
      covers.emplace_back(code(lo, y), code(hi, y));
  Lattice l = Lattice::from_poset(
      Poset::from_indices(std::move(labels), std::move(covers)));
  l.set_provenance({Provenance::Kind::Product,
                    {std::make_shared<Lattice>(a), std::make_shared<Lattice>(b)}});
  return l;
}

Lattice linear_sum(const Lattice& lower, const Lattice& upper) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < lower.size(); ++i) labels.push_back("L:" + lower.label(i));
  for (int i = 0; i < upper.size(); ++i) labels.push_back("U:" + upper.label(i));
  for (auto [lo, hi] : lower.poset().covers()) covers.emplace_back(lo, hi);
  int off = lower.size();
  for (auto [lo, hi] : upper.poset().covers())
    covers.emplace_back(off + lo, off + hi);
  covers.emplace_back(lower.top(), off + upper.bottom());
  Lattice l = Lattice::from_poset(
      Poset::from_indices(std::move(labels), std::move(covers)));
  l.set_provenance({Provenance::Kind::LinearSum,
                    {std::make_shared<Lattice>(lower),
                     std::make_shared<Lattice>(upper)}});
  return l;
}

Lattice vertical_sum(const Lattice& lower, const Lattice& upper) {
  // linear sum with top(lower) identified with bottom(upper)
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < lower.size(); ++i) labels.push_back("L:" + lower.label(i));
  std::vector<int> remap(upper.size(), -1);
  int next = lower.size();
  for (int i = 0; i < upper.size(); ++i) {
    if (i == upper.bottom()) {
      remap[i] = lower.top();
    } else {
      remap[i] = next++;
      labels.push_back("U:" + upper.label(i));
    }
  }
  for (auto [lo, hi] : lower.poset().covers()) covers.emplace_back(lo, hi);
  for (auto [lo, hi] : upper.poset().covers())
    covers.emplace_back(remap[lo], remap[hi]);
  Lattice l = Lattice::from_poset(
      Poset::from_indices(std::move(labels), std::move(covers)));
  l.set_provenance({Provenance::Kind::VerticalSum,
                    {std::make_shared<Lattice>(lower),
                     std::make_shared<Lattice>(upper)}});
  return l;
}

Lattice chain_lattice(int n) { return Lattice::from_poset(chain(n)); }

Lattice boolean_lattice(int k) {
  return Lattice::from_poset(boolean_poset(k));
}

}  // namespace matchlat
