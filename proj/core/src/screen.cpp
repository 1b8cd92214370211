#include "matchlat/screen.hpp"

#include <algorithm>
#include <functional>

#include "matchlat/errors.hpp"

namespace matchlat {

Poset delta_poset() {
  std::vector<std::string> labels{"0", "1", "2", "3", "4", "5",
                                  "6", "7", "8", "9", "a"};
  std::vector<std::pair<std::string, std::string>> covers{
      {"1", "0"}, {"2", "0"}, {"3", "0"}, {"4", "0"},
      {"5", "1"}, {"6", "1"}, {"7", "1"},
      {"5", "2"}, {"8", "2"}, {"9", "2"},
      {"6", "3"}, {"8", "3"}, {"a", "3"},
      {"7", "4"}, {"9", "4"}, {"a", "4"}};
  return Poset(std::move(labels), std::move(covers));
}

namespace {

std::optional<K33Witness> k33_scan(const Lattice& l, bool on_dual) {
  std::vector<char> mi(l.size(), 0);
  for (int v : l.meet_irreducibles()) mi[v] = 1;
  for (int x = 0; x < l.size(); ++x) {
    const auto& up = l.poset().upper_covers(x);
    if (up.size() < 3) continue;
    std::vector<int> milc;
    for (int y : l.poset().lower_covers(x))
      if (mi[y]) milc.push_back(y);
    if (milc.size() < 3) continue;
    K33Witness w;
    w.element = l.label(x);
    for (int y : up) w.upper_covers.push_back(l.label(y));
    for (int y : milc) w.meet_irreducible_lower_covers.push_back(l.label(y));
    w.on_dual = on_dual;
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<K33Witness> k33_test(const Lattice& l) {
  if (!l.is_distributive()) throw NotDistributive("k33_test");
  if (auto w = k33_scan(l, false)) return w;
  return k33_scan(l.dual(), true);
}

std::optional<std::map<std::string, std::string>> contains_convex_subposet(
    const Poset& host, const Poset& pattern, int max_size) {
  if (host.size() > max_size) throw TooLarge("convex-subposet search host");
  if (pattern.size() > host.size()) return std::nullopt;
  const int np = pattern.size(), nh = host.size();

  // assign the most connected pattern elements first
  std::vector<int> order(np);
  for (int i = 0; i < np; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    auto deg = [&](int v) {
      return pattern.up_set(v).count() + pattern.down_set(v).count();
    };
    return deg(a) > deg(b);
  });

  std::vector<int> map(np, -1);
  std::vector<char> used(nh, 0);
  Bitset image(nh);

  std::function<bool(int)> rec = [&](int k) {
    if (k == np) {
      // convexity: no host element strictly between two image elements
      // may lie outside the image
      for (int x = 0; x < np; ++x)
        for (int z = 0; z < np; ++z) {
          if (!pattern.lt(x, z)) continue;
          Bitset between = host.up_set(map[x]) & host.down_set(map[z]);
          if ((between & ~image).any()) return false;
        }
      return true;
    }
    int v = order[k];
    for (int w = 0; w < nh; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int k2 = 0; k2 < k && ok; ++k2) {
        int v2 = order[k2];
        if (pattern.leq(v, v2) != host.leq(w, map[v2]) ||
            pattern.leq(v2, v) != host.leq(map[v2], w))
          ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      image.set(w);
      if (rec(k + 1)) return true;
      map[v] = -1;
      used[w] = 0;
      image.reset(w);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::map<std::string, std::string> out;
  for (int i = 0; i < np; ++i) out[pattern.label(i)] = host.label(map[i]);
  return out;
}

ScreenVerdict screen(const Lattice& l) {
  ScreenVerdict v;
  if (!l.is_distributive()) {
    v.status = ScreenVerdict::Status::NonMatchable;
    v.reason = ScreenVerdict::Reason::NotDistributive;
    return v;
  }
  if (auto w = k33_test(l)) {
    v.status = ScreenVerdict::Status::NonMatchable;
    v.reason = ScreenVerdict::Reason::K33Criterion;
    v.k33 = w;
    return v;
  }
  if (auto emb = contains_convex_subposet(birkhoff(l), delta_poset())) {
    v.status = ScreenVerdict::Status::NonMatchable;
    v.reason = ScreenVerdict::Reason::DeltaConvex;
    v.delta_embedding = emb;
    return v;
  }
  if (l.provenance().kind != Provenance::Kind::Leaf) {
    const char* kind_name =
        l.provenance().kind == Provenance::Kind::Product      ? "product"
        : l.provenance().kind == Provenance::Kind::LinearSum  ? "linear_sum"
                                                              : "vertical_sum";
    for (std::size_t i = 0; i < l.provenance().factors.size(); ++i) {
      ScreenVerdict fv = screen(*l.provenance().factors[i]);
      if (fv.status == ScreenVerdict::Status::NonMatchable) {
        v.status = ScreenVerdict::Status::NonMatchable;
        v.reason = ScreenVerdict::Reason::FactorPropagation;
        v.factor_path.push_back(std::string(kind_name) + ":factor" +
                                std::to_string(i));
        for (const auto& s : fv.factor_path) v.factor_path.push_back(s);
        v.factor_verdict = std::make_shared<ScreenVerdict>(std::move(fv));
        return v;
      }
    }
  }
  return v;
}

void validate_certificate(const Lattice& l, const ScreenVerdict& v) {
  using R = ScreenVerdict::Reason;
  if (v.status != ScreenVerdict::Status::NonMatchable) {
    if (v.reason != R::None)
      throw InvariantError("not-flagged verdict carries a reason");
    return;
  }
  switch (v.reason) {
    case R::NotDistributive: {
      // independent route: the distributive law itself, all triples
      const int n = l.size();
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (l.meet(x, l.join(y, z)) !=
                l.join(l.meet(x, y), l.meet(x, z)))
              return;  // confirmed non-distributive
      throw InvariantError("certificate: lattice is distributive after all");
    }
    case R::K33Criterion: {
      const Lattice checked = v.k33->on_dual ? l.dual() : l;
      int x = checked.poset().index(v.k33->element);
      if (x < 0) throw InvariantError("certificate: unknown witness element");
      // recompute cover counts from the raw cover relation
      int ups = 0;
      for (auto [lo, hi] : checked.poset().covers())
        if (lo == x) ++ups;
      if (ups < 3) throw InvariantError("certificate: fewer than 3 upper covers");
      int good_lowers = 0;
      for (const std::string& lab : v.k33->meet_irreducible_lower_covers) {
        int y = checked.poset().index(lab);
        bool is_lower = false;
        int y_ups = 0;
        for (auto [lo, hi] : checked.poset().covers()) {
          if (lo == y && hi == x) is_lower = true;
          if (lo == y) ++y_ups;
        }
        if (is_lower && y_ups == 1) ++good_lowers;
      }
      if (good_lowers < 3)
        throw InvariantError(
            "certificate: fewer than 3 meet-irreducible lower covers");
      return;
    }
    case R::DeltaConvex: {
      Poset host = birkhoff(l);
      Poset pat = delta_poset();
      const auto& emb = *v.delta_embedding;
      std::vector<int> img;
      for (int i = 0; i < pat.size(); ++i) {
        auto it = emb.find(pat.label(i));
        if (it == emb.end())
          throw InvariantError("certificate: embedding is not total");
        int w = host.index(it->second);
        if (w < 0 || std::count(img.begin(), img.end(), w))
          throw InvariantError("certificate: embedding is not injective");
        img.push_back(w);
      }
      for (int i = 0; i < pat.size(); ++i)
        for (int j = 0; j < pat.size(); ++j)
          if (pat.leq(i, j) != host.leq(img[i], img[j]))
            throw InvariantError("certificate: not an order embedding");
      for (int i = 0; i < pat.size(); ++i)
        for (int j = 0; j < pat.size(); ++j) {
          if (!pat.lt(i, j)) continue;
          for (int y = 0; y < host.size(); ++y)
            if (host.lt(img[i], y) && host.lt(y, img[j]) &&
                !std::count(img.begin(), img.end(), y))
              throw InvariantError("certificate: image is not convex");
        }
      return;
    }
    case R::FactorPropagation: {
      if (v.factor_path.empty() || !v.factor_verdict)
        throw InvariantError("certificate: missing factor path");
      if (l.provenance().kind == Provenance::Kind::Leaf)
        throw InvariantError("certificate: no combinator provenance");
      auto tail = v.factor_path.front();
      auto pos = tail.find(":factor");
      std::size_t idx = std::stoul(tail.substr(pos + 7));
      if (idx >= l.provenance().factors.size())
        throw InvariantError("certificate: factor index out of range");
      validate_certificate(*l.provenance().factors[idx], *v.factor_verdict);
      return;
    }
    case R::None:
      throw InvariantError("non-matchable verdict without a reason");
  }
}

std::string reason_string(ScreenVerdict::Reason r) {
  switch (r) {
    case ScreenVerdict::Reason::None: return "none";
    case ScreenVerdict::Reason::NotDistributive: return "not-distributive";
    case ScreenVerdict::Reason::K33Criterion: return "k33-criterion";
    case ScreenVerdict::Reason::DeltaConvex: return "delta-convex";
    case ScreenVerdict::Reason::FactorPropagation: return "factor-propagation";
  }
  return "none";
}

}  // namespace matchlat
