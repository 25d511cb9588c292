#ifndef PARTLOG_TESTS_ORACLES_HPP
#define PARTLOG_TESTS_ORACLES_HPP

// Brute-force reference computations. None of these call into the library's
// algorithms; they only work on plain vectors and sets.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Labels = std::vector<int>;
using PairSet = std::set<std::pair<int, int>>;

/// Renames block labels by order of first appearance.
inline Labels canonical(const Labels& labels) {
  std::map<int, int> rename;
  Labels out;
  for (int l : labels) {
    auto it = rename.find(l);
    if (it == rename.end()) it = rename.emplace(l, static_cast<int>(rename.size())).first;
    out.push_back(it->second);
  }
  return out;
}

/// Every labelling {0..n-1} -> {0..n-1}, quotiented by renaming of labels.
inline std::set<Labels> partitions_by_labelling(int n) {
  std::set<Labels> out;
  Labels f(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (int i = 0; i < n; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(n));
      c /= static_cast<std::uint64_t>(n);
    }
    out.insert(canonical(f));
  }
  return out;
}

inline bool reflexive(const PairSet& r, int n) {
  for (int u = 0; u < n; ++u)
    if (!r.count({u, u})) return false;
  return true;
}

inline bool symmetric(const PairSet& r) {
  for (auto [u, v] : r)
    if (!r.count({v, u})) return false;
  return true;
}

inline bool transitive(const PairSet& r) {
  for (auto [u, v] : r)
    for (auto [x, w] : r)
      if (x == v && !r.count({u, w})) return false;
  return true;
}

inline bool equivalence(const PairSet& r, int n) {
  return reflexive(r, n) && symmetric(r) && transitive(r);
}

/// Relation with bit (u*n + v) of code set.
inline PairSet relation_from_code(std::uint64_t code, int n) {
  PairSet r;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if ((code >> (u * n + v)) & 1u) r.insert({u, v});
  return r;
}

/// All equivalence relations on {0..n-1}, found by scanning every relation.
inline std::vector<PairSet> all_equivalences(int n) {
  std::vector<PairSet> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
    auto r = relation_from_code(code, n);
    if (equivalence(r, n)) out.push_back(std::move(r));
  }
  return out;
}

/// Intersection of all equivalence relations containing s.
inline PairSet closure_by_intersection(const PairSet& s, const std::vector<PairSet>& equivs,
                                       int n) {
  PairSet acc;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) acc.insert({u, v});
  for (const auto& e : equivs) {
    bool contains = true;
    for (const auto& p : s) contains = contains && e.count(p);
    if (!contains) continue;
    PairSet next;
    for (const auto& p : acc)
      if (e.count(p)) next.insert(p);
    acc = std::move(next);
  }
  return acc;
}

/// Reflexive-symmetric-transitive closure by Warshall's algorithm.
inline PairSet closure_by_warshall(const PairSet& s, int n) {
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n),
                                   std::vector<bool>(static_cast<std::size_t>(n)));
  for (auto [u, v] : s) {
    m[u][v] = true;
    m[v][u] = true;
  }
  for (int u = 0; u < n; ++u) m[u][u] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[i][k] && m[k][j]) m[i][j] = true;
  PairSet out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j]) out.insert({i, j});
  return out;
}

inline PairSet dits(const Labels& p) {
  PairSet out;
  const int n = static_cast<int>(p.size());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (p[u] != p[v]) out.insert({u, v});
  return out;
}

inline PairSet indits(const Labels& p) {
  PairSet out;
  const int n = static_cast<int>(p.size());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (p[u] == p[v]) out.insert({u, v});
  return out;
}

/// Canonical labels of the classes of an equivalence relation.
inline Labels classes(const PairSet& e, int n) {
  Labels label(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    int least = 0;
    while (!e.count({u, least})) ++least;
    label[static_cast<std::size_t>(u)] = least;
  }
  return canonical(label);
}

/// Join as the set of non-empty pairwise block intersections.
inline Labels join(const Labels& p, const Labels& q) {
  Labels label;
  for (std::size_t u = 0; u < p.size(); ++u) label.push_back(p[u] * 1000 + q[u]);
  return canonical(label);
}

/// Meet as the classes of the equivalence generated by both inditsets.
inline Labels meet(const Labels& p, const Labels& q) {
  auto s = indits(p);
  for (const auto& x : indits(q)) s.insert(x);
  const int n = static_cast<int>(p.size());
  return classes(closure_by_warshall(s, n), n);
}

/// Block-containment implication written directly from its definition.
inline Labels implication(const Labels& sigma, const Labels& pi) {
  const int n = static_cast<int>(pi.size());
  Labels label(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    bool inside = true;
    for (int v = 0; v < n; ++v)
      if (pi[v] == pi[u] && sigma[v] != sigma[u]) inside = false;
    label[static_cast<std::size_t>(u)] = inside ? 1000 + u : pi[u];
  }
  return canonical(label);
}

}  // namespace oracle

#endif  // PARTLOG_TESTS_ORACLES_HPP
