#include "etm/zoo.hpp"

#include <algorithm>

namespace etm {

PermGroup symmetric(int n) {
  if (n < 1 || n > 16) throw error("symmetric(n): n out of range");
  if (n == 1) return PermGroup(1, {}, "S1");
  std::vector<int> tr(n), cyc(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Perm(tr), Perm(cyc)}, "S" + std::to_string(n));
}

PermGroup alternating(int n) {
  if (n < 1 || n > 16) throw error("alternating(n): n out of range");
  if (n <= 2) return PermGroup(n < 1 ? 1 : n, {}, "A" + std::to_string(n));
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<int> big(n);
  std::iota(big.begin(), big.end(), 0);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    big[0] = 0;
    for (int i = 1; i < n; ++i) big[i] = (i % (n - 1)) + 1;
  }
  return PermGroup(n, {Perm(three), Perm(big)}, "A" + std::to_string(n));
}

PermGroup cyclic(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Perm(cyc)}, "C" + std::to_string(n));
}

// ---------------------------------------------------------- projective line

ProjectiveLine::ProjectiveLine(uint32_t q)
    : field([&] {
        auto fs = prime_factors(q);
        if (fs.size() != 1) throw error("projective line: q must be a prime power");
        int p = static_cast<int>(fs[0]);
        int e = 0;
        uint32_t t = q;
        while (t > 1) {
          t /= p;
          ++e;
        }
        return Field(p, e);
      }()) {}

Perm ProjectiveLine::matrix_perm(Field::Elt a, Field::Elt b, Field::Elt c,
                                 Field::Elt d) const {
  const Field& F = field;
  if (F.sub(F.mul(a, d), F.mul(b, c)) == 0)
    throw error("projective line: singular matrix");
  const int q = static_cast<int>(F.size());
  std::vector<int> img(q + 1);
  for (int zi = 0; zi < q; ++zi) {
    Field::Elt z = static_cast<Field::Elt>(zi);
    Field::Elt num = F.add(F.mul(a, z), b);
    Field::Elt den = F.add(F.mul(c, z), d);
    img[zi] = den == 0 ? q : static_cast<int>(F.mul(num, F.inv(den)));
  }
  img[q] = c == 0 ? q : static_cast<int>(F.mul(a, F.inv(c)));
  return Perm(std::move(img));
}

Perm ProjectiveLine::matrix_perm_int(int64_t a, int64_t b, int64_t c,
                                     int64_t d) const {
  return matrix_perm(field.from_int(a), field.from_int(b), field.from_int(c),
                     field.from_int(d));
}

Perm ProjectiveLine::frobenius_perm() const {
  const int q = static_cast<int>(field.size());
  std::vector<int> img(q + 1);
  for (int zi = 0; zi < q; ++zi)
    img[zi] = static_cast<int>(field.frobenius(static_cast<Field::Elt>(zi)));
  img[q] = q;
  return Perm(std::move(img));
}

namespace {
uint64_t psl2_order(uint32_t q) {
  uint64_t n = uint64_t(q) * (uint64_t(q) * q - 1);
  return (q % 2 == 0) ? n : n / 2;
}
}  // namespace

PermGroup psl2(uint32_t q) {
  if (q < 2) throw error("psl2: q must be at least 2");
  ProjectiveLine line(q);
  const Field& F = line.field;
  Field::Elt lam = F.primitive_root();
  std::vector<Perm> gens;
  gens.push_back(line.matrix_perm(1, 1, 0, 1));                    // z -> z+1
  if (q > 3) gens.push_back(line.matrix_perm(F.mul(lam, lam), 0, 0, 1));  // z -> lam^2 z
  gens.push_back(line.matrix_perm(0, 1, F.neg(1), 0));             // z -> -1/z
  PermGroup g(line.degree(), std::move(gens), "psl2_" + std::to_string(q));
  if (g.order() != psl2_order(q))
    throw error("psl2(" + std::to_string(q) + "): order self-check failed");
  return g;
}

PermGroup pgl2(uint32_t q) {
  ProjectiveLine line(q);
  const Field& F = line.field;
  Field::Elt lam = F.primitive_root();
  PermGroup base = psl2(q);
  std::vector<Perm> gens = base.generators();
  gens.push_back(line.matrix_perm(lam, 0, 0, 1));
  PermGroup g(line.degree(), std::move(gens), "pgl2_" + std::to_string(q));
  if (g.order() != uint64_t(q) * (uint64_t(q) * q - 1))
    throw error("pgl2(" + std::to_string(q) + "): order self-check failed");
  return g;
}

PermGroup pgammal2(uint32_t q) {
  ProjectiveLine line(q);
  PermGroup base = pgl2(q);
  std::vector<Perm> gens = base.generators();
  gens.push_back(line.frobenius_perm());
  PermGroup g(line.degree(), std::move(gens), "pgammal2_" + std::to_string(q));
  uint64_t e = static_cast<uint64_t>(line.field.extension_degree());
  if (g.order() != e * uint64_t(q) * (uint64_t(q) * q - 1))
    throw error("pgammal2(" + std::to_string(q) + "): order self-check failed");
  return g;
}

// ------------------------------------------------------------ coset action

Perm CosetAction::induced(const Perm& g) const {
  const int n = degree();
  std::vector<int> img(n, -1);
  for (int i = 0; i < n; ++i) {
    Perm moved = compose(coset_reps[i], g);
    int target = -1;
    for (int j = 0; j < n; ++j) {
      if (subgroup_chain.contains(compose(moved, coset_reps[j].inverse()))) {
        target = j;
        break;
      }
    }
    if (target < 0) throw error("coset action: element leaves the coset space");
    img[i] = target;
  }
  return Perm(std::move(img));
}

CosetAction coset_action(const PermGroup& g, const std::vector<Perm>& subgroup_gens,
                         int max_index) {
  CosetAction out;
  out.subgroup_gens = subgroup_gens;
  out.ambient_degree = g.degree();
  out.subgroup_chain.build(g.degree(), subgroup_gens);

  out.coset_reps.push_back(Perm(g.degree()));
  auto find_coset = [&](const Perm& x) {
    for (size_t j = 0; j < out.coset_reps.size(); ++j)
      if (out.subgroup_chain.contains(compose(x, out.coset_reps[j].inverse())))
        return static_cast<int>(j);
    return -1;
  };
  for (size_t i = 0; i < out.coset_reps.size(); ++i) {
    for (const auto& gen : g.generators()) {
      Perm moved = compose(out.coset_reps[i], gen);
      if (find_coset(moved) < 0) {
        out.coset_reps.push_back(std::move(moved));
        if (static_cast<int>(out.coset_reps.size()) > max_index)
          throw error("coset action: index exceeds bound");
      }
    }
  }
  std::vector<Perm> action_gens;
  for (const auto& gen : g.generators()) action_gens.push_back(out.induced(gen));
  out.action = PermGroup(static_cast<int>(out.coset_reps.size()),
                         std::move(action_gens), g.name() + "_cosets");
  return out;
}

// ------------------------------------------------------------- isomorphism

const Perm& IsoMap::operator()(const Perm& x) const {
  auto it = fwd.find(x);
  if (it == fwd.end()) throw error("isomorphism map: element not in domain");
  return it->second;
}

std::optional<std::vector<Perm>> find_generating_pair(const PermGroup& g) {
  const auto& elems = g.elements();
  uint64_t n = g.order();
  // prefer high-order elements; scan deterministically
  std::vector<int> by_order(elems.size());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return elems[a].order() > elems[b].order();
  });
  for (size_t i = 0; i < by_order.size(); ++i)
    for (size_t j = 0; j < std::min(by_order.size(), size_t(64)); ++j) {
      const Perm& a = elems[by_order[i]];
      const Perm& b = elems[by_order[j]];
      if (subgroup_order(g.degree(), {a, b}) == n)
        return std::vector<Perm>{a, b};
    }
  return std::nullopt;
}

namespace {
Perm graph_perm(int deg_a, int deg_b, const Perm& x, const Perm& y) {
  std::vector<int> img(deg_a + deg_b);
  for (int p = 0; p < deg_a; ++p) img[p] = x[p];
  for (int p = 0; p < deg_b; ++p) img[deg_a + p] = deg_a + y[p];
  return Perm(std::move(img));
}
}  // namespace

std::optional<IsoMap> find_isomorphism(const PermGroup& a,
                                       const std::vector<Perm>& a_gens,
                                       const PermGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const uint64_t n = a.order();
  if (subgroup_order(a.degree(), a_gens) != n)
    throw error("find_isomorphism: given tuple does not generate the source");

  const auto& belems = b.elements();
  std::vector<std::vector<int>> candidates(a_gens.size());
  for (size_t k = 0; k < a_gens.size(); ++k) {
    uint64_t want = a_gens[k].order();
    for (size_t i = 0; i < belems.size(); ++i)
      if (belems[i].order() == want) candidates[k].push_back(static_cast<int>(i));
    if (candidates[k].empty()) return std::nullopt;
  }

  const size_t slots = a_gens.size();
  std::vector<size_t> idx(slots, 0);
  std::vector<Perm> dst(slots, Perm(b.degree()));
  for (;;) {
    for (size_t k = 0; k < slots; ++k) dst[k] = belems[candidates[k][idx[k]]];
    if (subgroup_order(b.degree(), dst) == n) {
      std::vector<Perm> graph_gens;
      for (size_t k = 0; k < slots; ++k)
        graph_gens.push_back(graph_perm(a.degree(), b.degree(), a_gens[k], dst[k]));
      if (subgroup_order(a.degree() + b.degree(), graph_gens) == n) {
        PermGroup graph(a.degree() + b.degree(), graph_gens);
        IsoMap map;
        for (const auto& pair : graph.elements()) {
          std::vector<int> left(a.degree()), right(b.degree());
          for (int p = 0; p < a.degree(); ++p) left[p] = pair[p];
          for (int p = 0; p < b.degree(); ++p)
            right[p] = pair[a.degree() + p] - a.degree();
          map.fwd.emplace(Perm(std::move(left)), Perm(std::move(right)));
        }
        return map;
      }
    }
    size_t pos = 0;
    while (pos < slots && ++idx[pos] == candidates[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == slots) return std::nullopt;
  }
}

}  // namespace etm
