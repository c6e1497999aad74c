#include "etm/flagmap.hpp"

#include <algorithm>
#include <queue>

namespace etm {

namespace {

std::vector<std::vector<int>> orbits_under(int n, const std::vector<Perm>& gens) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.push_back({});
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      out[id].push_back(p);
      // forward images suffice: inverses are forward powers in a finite group
      for (const auto& g : gens) {
        if (comp[g[p]] < 0) {
          comp[g[p]] = id;
          stack.push_back(g[p]);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace

FlagMap::FlagMap(Perm r0, Perm r1, Perm r2, std::string name)
    : r_{std::move(r0), std::move(r1), std::move(r2)}, name_(std::move(name)) {
  const int n = r_[0].degree();
  if (n < 1) throw error("map '" + name_ + "': needs at least one flag");
  if (r_[1].degree() != n || r_[2].degree() != n)
    throw error("map '" + name_ + "': flag count mismatch between r0/r1/r2");
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < n; ++x)
      if (r_[i][r_[i][x]] != x)
        throw error("map '" + name_ + "': relation r" + std::to_string(i) +
                    "^2 = 1 fails at flag " + std::to_string(x));
  for (int x = 0; x < n; ++x) {
    int y = r_[2][r_[0][r_[2][r_[0][x]]]];
    if (y != x)
      throw error("map '" + name_ + "': relation (r0 r2)^2 = 1 fails at flag " +
                  std::to_string(x));
  }
  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      int q = r_[i][p];
      if (!seen[q]) {
        seen[q] = 1;
        ++count;
        stack.push_back(q);
      }
    }
  }
  if (count != n) {
    int missing = 0;
    while (seen[missing]) ++missing;
    throw error("map '" + name_ + "': disconnected (flag " +
                std::to_string(missing) + " unreachable from flag 0; " +
                std::to_string(n - count) + " flags outside the component)");
  }
}

MapCells cells(const FlagMap& m) {
  const int n = m.flag_count();
  MapCells c;
  c.vertices = orbits_under(n, {m.r(1), m.r(2)});
  c.edges = orbits_under(n, {m.r(0), m.r(2)});
  c.faces = orbits_under(n, {m.r(0), m.r(1)});
  c.petrie_polygons = orbits_under(n, {compose(m.r(0), m.r(2)), m.r(1)});
  return c;
}

int euler_characteristic(const FlagMap& m) {
  MapCells c = cells(m);
  return static_cast<int>(c.vertices.size()) - static_cast<int>(c.edges.size()) +
         static_cast<int>(c.faces.size());
}

bool has_boundary(const FlagMap& m) {
  for (int i = 0; i < 3; ++i)
    if (m.r(i).count_fixed_points() > 0) return true;
  return false;
}

bool is_orientable(const FlagMap& m) {
  const int n = m.flag_count();
  std::vector<int> color(n, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      int q = m.r(i)[p];
      if (q == p) return false;  // boundary flag: no consistent 2-coloring
      if (color[q] < 0) {
        color[q] = 1 - color[p];
        stack.push_back(q);
      } else if (color[q] == color[p]) {
        return false;
      }
    }
  }
  return true;
}

Surface genus_or_crosscap(const FlagMap& m) {
  if (has_boundary(m))
    throw error("map '" + m.name() + "': genus undefined, boundary present");
  int chi = euler_characteristic(m);
  Surface s;
  if (is_orientable(m)) {
    if ((2 - chi) % 2 != 0)
      throw error("map '" + m.name() + "': orientable with odd Euler characteristic " +
                  std::to_string(chi) + " (orbifold quotient, no surface genus)");
    s.orientable = true;
    s.genus = (2 - chi) / 2;
  } else {
    s.orientable = false;
    s.crosscaps = 2 - chi;
  }
  return s;
}

FlagMap dual(const FlagMap& m) {
  return FlagMap(m.r(2), m.r(1), m.r(0),
                 m.name().empty() ? "" : "dual(" + m.name() + ")");
}

FlagMap petrie(const FlagMap& m) {
  return FlagMap(compose(m.r(0), m.r(2)), m.r(1), m.r(2),
                 m.name().empty() ? "" : "petrie(" + m.name() + ")");
}

// ------------------------------------------------------------- isomorphism

namespace {

// per-flag invariant: fixed-point pattern and incident cell sizes
std::vector<uint64_t> flag_signatures(const FlagMap& m) {
  const int n = m.flag_count();
  std::vector<uint64_t> sig(n, 0);
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < n; ++x) sig[x] = sig[x] * 2 + (m.r(i)[x] == x ? 1 : 0);
  MapCells c = cells(m);
  for (const auto* part : {&c.vertices, &c.edges, &c.faces, &c.petrie_polygons})
    for (const auto& cell : *part)
      for (int x : cell) sig[x] = sig[x] * 1315423911u + cell.size();
  return sig;
}

}  // namespace

std::optional<Perm> map_isomorphism(const FlagMap& a, const FlagMap& b) {
  const int n = a.flag_count();
  if (n != b.flag_count()) return std::nullopt;

  auto siga = flag_signatures(a);
  auto sigb = flag_signatures(b);
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // BFS order on a's flags from flag 0
  std::vector<int> order;
  {
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i)
      for (int g = 0; g < 3; ++g) {
        int q = a.r(g)[order[i]];
        if (!seen[q]) {
          seen[q] = 1;
          order.push_back(q);
        }
      }
  }

  std::vector<int> c(n);
  for (int x = 0; x < n; ++x) {
    if (sigb[x] != siga[0]) continue;
    std::fill(c.begin(), c.end(), -1);
    c[0] = x;
    bool ok = true;
    for (int p : order) {
      for (int g = 0; g < 3 && ok; ++g) {
        int q = a.r(g)[p];
        int want = b.r(g)[c[p]];
        if (c[q] < 0)
          c[q] = want;
        else if (c[q] != want)
          ok = false;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    // c is onto (transitivity) hence a bijection
    return Perm(c);
  }
  return std::nullopt;
}

bool are_isomorphic(const FlagMap& a, const FlagMap& b) {
  return map_isomorphism(a, b).has_value();
}

PermGroup monodromy_group(const FlagMap& m) {
  return PermGroup(m.flag_count(), {m.r(0), m.r(1), m.r(2)},
                   m.name().empty() ? "monodromy" : "Mon(" + m.name() + ")");
}

PermGroup automorphism_group(const FlagMap& m) {
  return centralizer_in_sym(m.flag_count(), {m.r(0), m.r(1), m.r(2)});
}

FlagMap quotient_by_automorphisms(const FlagMap& m) {
  return quotient_by_automorphisms(m, automorphism_group(m));
}

FlagMap quotient_by_automorphisms(const FlagMap& m, const PermGroup& aut) {
  const int n = m.flag_count();
  auto orbits = orbits_under(n, [&] {
    std::vector<Perm> gens = aut.generators();
    if (gens.empty()) gens.push_back(Perm(n));
    return gens;
  }());
  // relabel orbits by smallest member
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  std::vector<int> orbit_of(n, -1);
  for (size_t i = 0; i < orbits.size(); ++i)
    for (int x : orbits[i]) orbit_of[x] = static_cast<int>(i);
  std::array<std::vector<int>, 3> img;
  for (int g = 0; g < 3; ++g) {
    img[g].assign(orbits.size(), -1);
    for (size_t i = 0; i < orbits.size(); ++i) {
      int target = orbit_of[m.r(g)[orbits[i].front()]];
      for (int x : orbits[i])
        if (orbit_of[m.r(g)[x]] != target)
          throw error("quotient: automorphism orbits are not monodromy blocks");
      img[g][i] = target;
    }
  }
  return FlagMap(Perm(img[0]), Perm(img[1]), Perm(img[2]),
                 m.name().empty() ? "" : m.name() + "/aut");
}

bool is_edge_transitive(const FlagMap& m) {
  return is_edge_transitive(m, automorphism_group(m));
}

bool is_edge_transitive(const FlagMap& m, const PermGroup& aut) {
  MapCells c = cells(m);
  if (c.edges.size() <= 1) return true;
  const int n = m.flag_count();
  std::vector<int> edge_of(n, -1);
  for (size_t e = 0; e < c.edges.size(); ++e)
    for (int x : c.edges[e]) edge_of[x] = static_cast<int>(e);
  // orbit of edge 0 under the automorphism generators
  std::vector<char> seen(c.edges.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    int flag = c.edges[e].front();
    for (const auto& g : aut.generators()) {
      int e2 = edge_of[g[flag]];
      if (!seen[e2]) {
        seen[e2] = 1;
        ++count;
        stack.push_back(e2);
      }
    }
  }
  return count == c.edges.size();
}

}  // namespace etm
