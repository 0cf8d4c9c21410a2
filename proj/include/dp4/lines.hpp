#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

/// Class a L - sum b_i E_i stored as (a; b_1..b_5) with the lattice form
/// diag(1,-1,-1,-1,-1,-1) applied to the raw coordinates (a, c_1..c_5),
/// where c_i is the coefficient of E_i.
using LineClass = std::array<int, 6>;

inline int intersect(const LineClass& a, const LineClass& b) {
  int s = a[0] * b[0];
  for (std::size_t i = 1; i < 6; ++i) s -= a[i] * b[i];
  return s;
}

/// -K = 3L - E_1 - ... - E_5.
inline LineClass anticanonical() { return {3, -1, -1, -1, -1, -1}; }

inline std::string line_name(const LineClass& c) {
  if (c[0] == 0) {
    for (std::size_t i = 1; i < 6; ++i)
      if (c[i]) return "E" + std::to_string(i);
  }
  if (c[0] == 1) {
    std::string s = "L";
    for (std::size_t i = 1; i < 6; ++i)
      if (c[i]) s += "-E" + std::to_string(i);
    return s;
  }
  return "2L-E1-E2-E3-E4-E5";
}

/// One side of a partition: four disjoint incident pairs with a common
/// conic class (the class of the pair sums).
struct PartitionSide {
  std::vector<std::pair<int, int>> pairs;
  LineClass conic;
};

/// The two sides attached to a singular member; index i (0-based) is the
/// partition whose first side consists of pairs summing to L - E_{i+1}.
struct LinePartition {
  std::array<PartitionSide, 2> sides;
  std::array<int, 16> side_of;  // 0 or 1 for each line
};

struct LineConfiguration {
  std::vector<LineClass> lines;
  std::array<std::array<int, 16>, 16> incidence{};
  std::vector<LinePartition> partitions;
};

namespace detail {

inline std::array<std::array<int, 16>, 16> incidence_matrix(const std::vector<LineClass>& lines) {
  std::array<std::array<int, 16>, 16> m{};
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) m[i][j] = i == j ? 0 : intersect(lines[i], lines[j]);
  return m;
}

inline LineClass add(const LineClass& a, const LineClass& b) {
  LineClass c{};
  for (std::size_t k = 0; k < 6; ++k) c[k] = a[k] + b[k];
  return c;
}

/// All ways to split `set` into incident pairs with one common class sum.
inline void same_class_matchings(const LineConfiguration& cfg, std::vector<int> set, const LineClass* cls,
                                 std::vector<std::pair<int, int>>& pairs, std::vector<PartitionSide>& out) {
  if (set.empty()) {
    out.push_back({pairs, *cls});
    return;
  }
  const int a = set[0];
  for (std::size_t k = 1; k < set.size(); ++k) {
    const int b = set[k];
    if (cfg.incidence[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 1) continue;
    const LineClass c = add(cfg.lines[static_cast<std::size_t>(a)], cfg.lines[static_cast<std::size_t>(b)]);
    if (cls && c != *cls) continue;
    std::vector<int> rest;
    for (int x : set)
      if (x != a && x != b) rest.push_back(x);
    pairs.emplace_back(a, b);
    same_class_matchings(cfg, rest, &c, pairs, out);
    pairs.pop_back();
  }
}

}  // namespace detail

/// Exhaustive search over splits of the 16 lines into two 8-sets, each a
/// union of four incident pairs whose sums are one and the same conic class.
inline std::vector<LinePartition> partitions5(const LineConfiguration& cfg) {
  std::vector<LinePartition> found;
  // Line 0 is always on the first side; choose 7 companions from 1..15.
  for (unsigned mask = 0; mask < (1U << 15); ++mask) {
    if (__builtin_popcount(mask) != 7) continue;
    std::vector<int> a{0}, b;
    for (int k = 1; k < 16; ++k) ((mask >> (k - 1)) & 1U ? a : b).push_back(k);
    std::vector<PartitionSide> ma, mb;
    std::vector<std::pair<int, int>> scratch;
    detail::same_class_matchings(cfg, a, nullptr, scratch, ma);
    if (ma.empty()) continue;
    detail::same_class_matchings(cfg, b, nullptr, scratch, mb);
    if (mb.empty()) continue;
    if (ma.size() != 1 || mb.size() != 1) throw consistency_error("ambiguous pairing inside a partition side");
    LinePartition p;
    p.sides = {ma[0], mb[0]};
    found.push_back(p);
  }
  if (found.size() != 5) throw consistency_error("expected exactly 5 partitions, found " + std::to_string(found.size()));
  // Order by index i, first side summing to L - E_i.
  std::vector<LinePartition> ordered(5);
  std::vector<bool> seen(5, false);
  for (auto p : found) {
    for (int s = 0; s < 2; ++s) {
      const LineClass& c = p.sides[static_cast<std::size_t>(s)].conic;
      if (c[0] != 1) continue;
      std::size_t i = 0;
      while (c[i + 1] == 0) ++i;
      if (s == 1) std::swap(p.sides[0], p.sides[1]);
      for (int side = 0; side < 2; ++side)
        for (const auto& [x, y] : p.sides[static_cast<std::size_t>(side)].pairs)
          p.side_of[static_cast<std::size_t>(x)] = p.side_of[static_cast<std::size_t>(y)] = side;
      if (seen[i]) throw consistency_error("two partitions with the same index");
      seen[i] = true;
      ordered[i] = p;
      break;
    }
  }
  return ordered;
}

/// E_i, then L - E_i - E_j (i < j), then 2L - sum E_i.
inline LineConfiguration lines16() {
  LineConfiguration cfg;
  for (std::size_t i = 1; i <= 5; ++i) {
    LineClass c{};
    c[i] = 1;
    cfg.lines.push_back(c);
  }
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = i + 1; j <= 5; ++j) {
      LineClass c{};
      c[0] = 1;
      c[i] = c[j] = -1;
      cfg.lines.push_back(c);
    }
  cfg.lines.push_back({2, -1, -1, -1, -1, -1});
  // Raw coordinates are coefficients; the form diag(1,-1,...) turns E_i
  // coefficients into intersection numbers E_i.E_j = -delta_ij.
  cfg.incidence = detail::incidence_matrix(cfg.lines);
  cfg.partitions = partitions5(cfg);
  return cfg;
}

/// Element of the hyperoctahedral group: i -> perm[i] with sign[i].
struct SignedPermutation {
  std::array<int, 5> perm;
  std::array<int, 5> sign;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

  static SignedPermutation identity() { return {{0, 1, 2, 3, 4}, {1, 1, 1, 1, 1}}; }
  bool even() const {
    int neg = 0;
    for (int s : sign) neg += s < 0;
    return neg % 2 == 0;
  }
  bool unsigned_only() const {
    for (int s : sign)
      if (s < 0) return false;
    return true;
  }
};

/// (g * h) applies h first.
inline SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h) {
  SignedPermutation r{};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto hi = static_cast<std::size_t>(h.perm[i]);
    r.perm[i] = g.perm[hi];
    r.sign[i] = h.sign[i] * g.sign[hi];
  }
  return r;
}

struct WeylElement {
  std::array<int, 16> on_lines;  // image of each line index
  SignedPermutation on_partitions;
};

struct WeylGroup {
  std::vector<WeylElement> elements;
  std::vector<std::size_t> kernel;     // indices acting trivially on partition indices
  std::vector<std::size_t> s5;         // permutations of E_1..E_5
  std::size_t quotient_order = 0;      // image in the symmetric group on partition indices
};

namespace detail {

inline void automorphisms(const std::array<std::array<int, 16>, 16>& adj, std::array<int, 16>& img,
                          std::array<bool, 16>& used, int v, std::vector<std::array<int, 16>>& out) {
  if (v == 16) {
    out.push_back(img);
    return;
  }
  for (int w = 0; w < 16; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
          adj[static_cast<std::size_t>(img[static_cast<std::size_t>(u)])][static_cast<std::size_t>(w)])
        ok = false;
    if (!ok) continue;
    used[static_cast<std::size_t>(w)] = true;
    img[static_cast<std::size_t>(v)] = w;
    automorphisms(adj, img, used, v + 1, out);
    used[static_cast<std::size_t>(w)] = false;
  }
}

inline SignedPermutation partition_action(const LineConfiguration& cfg, const std::array<int, 16>& g) {
  SignedPermutation sp{};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& side0 = cfg.partitions[i].sides[0].pairs;
    // The image of side 0 of partition i is a side of exactly one partition.
    std::set<int> image;
    for (const auto& [x, y] : side0) {
      image.insert(g[static_cast<std::size_t>(x)]);
      image.insert(g[static_cast<std::size_t>(y)]);
    }
    bool matched = false;
    for (std::size_t j = 0; j < 5 && !matched; ++j)
      for (int s = 0; s < 2; ++s) {
        std::set<int> side;
        for (const auto& [x, y] : cfg.partitions[j].sides[static_cast<std::size_t>(s)].pairs) {
          side.insert(x);
          side.insert(y);
        }
        if (side == image) {
          sp.perm[i] = static_cast<int>(j);
          sp.sign[i] = s == 0 ? 1 : -1;
          matched = true;
          break;
        }
      }
    if (!matched) throw consistency_error("automorphism does not permute the partitions");
  }
  return sp;
}

/// Line permutation induced by permuting E_1..E_5.
inline std::array<int, 16> relabel_points(const LineConfiguration& cfg, const std::array<int, 5>& p) {
  std::map<LineClass, int> index;
  for (std::size_t k = 0; k < 16; ++k) index[cfg.lines[k]] = static_cast<int>(k);
  std::array<int, 16> img{};
  for (std::size_t k = 0; k < 16; ++k) {
    LineClass c{};
    c[0] = cfg.lines[k][0];
    for (std::size_t i = 0; i < 5; ++i) c[static_cast<std::size_t>(p[i]) + 1] = cfg.lines[k][i + 1];
    img[k] = index.at(c);
  }
  return img;
}

}  // namespace detail

/// Automorphisms of the incidence graph (all lines have anticanonical
/// degree 1, so the degree condition is automatic), with their action on
/// the partitions.
inline const WeylGroup& weyl_group(const LineConfiguration& cfg) {
  static WeylGroup group;
  static std::once_flag once;
  std::call_once(once, [&cfg] {
    std::vector<std::array<int, 16>> autos;
    std::array<int, 16> img{};
    std::array<bool, 16> used{};
    detail::automorphisms(cfg.incidence, img, used, 0, autos);
    if (autos.size() != 1920) throw consistency_error("incidence graph has " + std::to_string(autos.size()) + " automorphisms");
    std::set<std::array<int, 5>> quotient;
    std::map<std::array<int, 16>, std::size_t> position;
    for (const auto& a : autos) {
      const SignedPermutation sp = detail::partition_action(cfg, a);
      position[a] = group.elements.size();
      if (sp.perm == SignedPermutation::identity().perm) group.kernel.push_back(group.elements.size());
      quotient.insert(sp.perm);
      group.elements.push_back({a, sp});
    }
    group.quotient_order = quotient.size();
    std::array<int, 5> p{0, 1, 2, 3, 4};
    do group.s5.push_back(position.at(detail::relabel_points(cfg, p)));
    while (std::next_permutation(p.begin(), p.end()));
  });
  return group;
}

/// Order of the subgroup generated by the given signed permutations.
inline std::size_t generated_order(const std::vector<SignedPermutation>& gens) {
  std::set<SignedPermutation> seen{SignedPermutation::identity()};
  std::vector<SignedPermutation> frontier{SignedPermutation::identity()};
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        const SignedPermutation y = g * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Whether every element outside the S5 copy generates the whole group
/// together with S5.
inline bool no_intermediate_subgroup(const LineConfiguration& cfg) {
  const WeylGroup& w = weyl_group(cfg);
  // S5 is generated by a transposition and a 5-cycle of the E_i labels.
  std::vector<SignedPermutation> s5_gens;
  std::set<SignedPermutation> s5;
  for (std::size_t k : w.s5) s5.insert(w.elements[k].on_partitions);
  const SignedPermutation transposition{{1, 0, 2, 3, 4}, {1, 1, 1, 1, 1}};
  const SignedPermutation cycle{{1, 2, 3, 4, 0}, {1, 1, 1, 1, 1}};
  if (!s5.count(transposition) || !s5.count(cycle)) throw consistency_error("S5 copy lacks its generators");
  for (const auto& e : w.elements) {
    if (s5.count(e.on_partitions)) continue;
    if (generated_order({transposition, cycle, e.on_partitions}) != w.elements.size()) return false;
  }
  return true;
}

/// Exact spectrum of the incidence matrix, as eigenvalue -> multiplicity,
/// from the trace identities once the candidate eigenvalues annihilate it.
inline std::map<int, int> incidence_spectrum(const LineConfiguration& cfg) {
  using M = std::array<std::array<long, 16>, 16>;
  auto mul = [](const M& a, const M& b) {
    M c{};
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t k = 0; k < 16; ++k)
        for (std::size_t j = 0; j < 16; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  M a{};
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) a[i][j] = cfg.incidence[i][j];
  auto shifted = [&](long l) {
    M s = a;
    for (std::size_t i = 0; i < 16; ++i) s[i][i] -= l;
    return s;
  };
  const std::array<long, 3> eig{5, 1, -3};
  const M prod = mul(mul(shifted(eig[0]), shifted(eig[1])), shifted(eig[2]));
  for (const auto& row : prod)
    for (long v : row)
      if (v) throw consistency_error("incidence spectrum is not {5, 1, -3}");
  long tr1 = 0, tr2 = 0;
  const M a2 = mul(a, a);
  for (std::size_t i = 0; i < 16; ++i) {
    tr1 += a[i][i];
    tr2 += a2[i][i];
  }
  // m5 + m1 + m3 = 16, 5 m5 + m1 - 3 m3 = tr1, 25 m5 + m1 + 9 m3 = tr2
  std::map<int, int> spec;
  for (long m5 = 0; m5 <= 16; ++m5)
    for (long m1 = 0; m1 + m5 <= 16; ++m1) {
      const long m3 = 16 - m5 - m1;
      if (5 * m5 + m1 - 3 * m3 == tr1 && 25 * m5 + m1 + 9 * m3 == tr2) {
        if (m5) spec[5] = static_cast<int>(m5);
        if (m1) spec[1] = static_cast<int>(m1);
        if (m3) spec[-3] = static_cast<int>(m3);
      }
    }
  return spec;
}

inline bool triangle_free(const LineConfiguration& cfg) {
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = a + 1; b < 16; ++b)
      for (std::size_t c = b + 1; c < 16; ++c)
        if (cfg.incidence[a][b] == 1 && cfg.incidence[b][c] == 1 && cfg.incidence[a][c] == 1) return false;
  return true;
}

}  // namespace dp4
