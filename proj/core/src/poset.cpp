#include "matchlat/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "matchlat/errors.hpp"

namespace matchlat {

int Poset::index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Poset Poset::from_indices(std::vector<std::string> labels,
                          std::vector<std::pair<int, int>> cover_indices) {
  Poset p;
  p.labels_ = std::move(labels);
  for (auto [a, b] : cover_indices)
    if (a < 0 || b < 0 || a >= p.size() || b >= p.size())
      throw ValidationError("cover index out of range");
  p.finish(std::move(cover_indices));
  return p;
}

Poset::Poset(std::vector<std::string> labels,
             std::vector<std::pair<std::string, std::string>> covers) {
  labels_ = std::move(labels);
  std::map<std::string, int> idx;
  for (int i = 0; i < size(); ++i) {
    if (idx.count(labels_[i])) throw ValidationError("duplicate label");
    idx[labels_[i]] = i;
  }
  std::vector<std::pair<int, int>> ci;
  for (auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end() || b == idx.end())
      throw ValidationError("cover references unknown label");
    ci.emplace_back(a->second, b->second);
  }
  finish(std::move(ci));
}

void Poset::finish(std::vector<std::pair<int, int>> relation) {
  const int n = size();
  std::vector<std::vector<int>> up_adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : relation) {
    if (a == b) throw CyclicOrder("reflexive cover");
    up_adj[a].push_back(b);
    indeg[b]++;
  }
  // topological order, bottom-up
  std::vector<int> topo;
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    topo.push_back(v);
    for (int w : up_adj[v])
      if (--indeg[w] == 0) q.push(w);
  }
  if (static_cast<int>(topo.size()) != n)
    throw CyclicOrder("cover relation contains a directed cycle");

  up_.assign(n, Bitset(n));
  for (int i = n - 1; i >= 0; --i) {
    int v = topo[i];
    up_[v].set(v);
    for (int w : up_adj[v]) up_[v] |= up_[w];
  }
  down_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (up_[a][b]) down_[b].set(a);
  leq_ = up_;

  // transitive reduction
  covers_.clear();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !up_[a][b]) continue;
      Bitset between = up_[a] & down_[b];
      between.reset(a);
      between.reset(b);
      if (between.none()) covers_.emplace_back(a, b);
    }
  std::sort(covers_.begin(), covers_.end());

  uppers_.assign(n, {});
  lowers_.assign(n, {});
  for (auto [a, b] : covers_) {
    uppers_[a].push_back(b);
    lowers_[b].push_back(a);
  }

  height_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = topo[i];
    for (int w : lowers_[v]) height_[v] = std::max(height_[v], height_[w] + 1);
  }
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (lowers_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (uppers_[i].empty()) out.push_back(i);
  return out;
}

Poset Poset::dual() const {
  std::vector<std::pair<int, int>> rev;
  for (auto [a, b] : covers_) rev.emplace_back(b, a);
  return from_indices(labels_, std::move(rev));
}

Poset Poset::induced(const std::vector<int>& subset) const {
  std::vector<std::string> labels;
  for (int v : subset) labels.push_back(labels_[v]);
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (i != j && leq(subset[i], subset[j]))
        rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return from_indices(std::move(labels), std::move(rel));
}

namespace {

struct Signature {
  int height, n_up_cov, n_low_cov, up_size, down_size;
  auto operator<=>(const Signature&) const = default;
};

Signature sig_of(const Poset& p, int v) {
  return {p.height(v), static_cast<int>(p.upper_covers(v).size()),
          static_cast<int>(p.lower_covers(v).size()),
          static_cast<int>(p.up_set(v).count()),
          static_cast<int>(p.down_set(v).count())};
}

}  // namespace

std::optional<std::vector<int>> iso(const Poset& p, const Poset& q,
                                    int max_size) {
  if (p.size() != q.size()) return std::nullopt;
  const int n = p.size();
  if (n > max_size) throw TooLarge("iso on " + std::to_string(n) + " elements");
  if (n == 0) return std::vector<int>{};

  std::vector<Signature> sp(n), sq(n);
  for (int i = 0; i < n; ++i) {
    sp[i] = sig_of(p, i);
    sq[i] = sig_of(q, i);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // assign in a fixed order; candidates must match signatures and relations
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sp[a] < sp[b]; });

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int k) {
    if (k == n) return true;
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || sp[v] != sq[w]) continue;
      bool ok = true;
      for (int k2 = 0; k2 < k && ok; ++k2) {
        int v2 = order[k2];
        if (p.leq(v, v2) != q.leq(w, map[v2]) ||
            p.leq(v2, v) != q.leq(map[v2], w))
          ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (rec(k + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

Poset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < n) covers.emplace_back(i, i + 1);
  }
  return Poset::from_indices(std::move(labels), std::move(covers));
}

Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Poset::from_indices(std::move(labels), {});
}

Poset product_of_chains(const std::vector<int>& lengths) {
  const int k = static_cast<int>(lengths.size());
  int total = 1;
  for (int l : lengths) {
    if (l < 1 || l > 10) throw ValidationError("chain length out of range");
    total *= l;
  }
  std::vector<std::string> labels(total);
  std::vector<std::pair<int, int>> covers;
  // mixed-radix encoding; label is the digit string
  for (int code = 0; code < total; ++code) {
    int c = code;
    std::string lab;
    std::vector<int> digits(k);
    for (int j = k - 1; j >= 0; --j) {
      digits[j] = c % lengths[j];
      c /= lengths[j];
    }
    for (int j = 0; j < k; ++j) lab += static_cast<char>('0' + digits[j]);
    labels[code] = lab;
    int stride = 1;
    for (int j = k - 1; j >= 0; --j) {
      if (digits[j] + 1 < lengths[j]) covers.emplace_back(code, code + stride);
      stride *= lengths[j];
    }
  }
  return Poset::from_indices(std::move(labels), std::move(covers));
}

Poset boolean_poset(int k) {
  return product_of_chains(std::vector<int>(k, 2));
}

}  // namespace matchlat
