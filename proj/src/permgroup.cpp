#include "etm/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace etm {

// ---------------------------------------------------------------- StabChain

void StabChain::build(int degree, const std::vector<Perm>& gens) {
  degree_ = degree;
  levels_.clear();
  std::vector<QItem> queue;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw error("stabilizer chain: degree mismatch");
    if (!g.is_identity()) queue.push_back({g, 0});
  }
  while (!queue.empty()) {
    QItem item = std::move(queue.back());
    queue.pop_back();
    sift_in(std::move(item), queue);
  }
}

void StabChain::sift_in(QItem item, std::vector<QItem>& queue) {
  Perm g = std::move(item.g);
  size_t j = item.level;
  for (;;) {
    if (g.is_identity()) return;
    if (j == levels_.size()) {
      Level lv;
      lv.base_point = g.smallest_moved_point();
      lv.pos.assign(degree_, -1);
      lv.orbit.push_back(lv.base_point);
      lv.pos[lv.base_point] = 0;
      lv.transversal.push_back(Perm(degree_));
      levels_.push_back(std::move(lv));
      break;
    }
    Level& lv = levels_[j];
    int x = g[lv.base_point];
    if (lv.pos[x] < 0) break;
    g = compose(g, lv.transversal[lv.pos[x]].inverse());
    ++j;
  }
  // the residue fixes the bases of levels item.level..j-1, so it is a strong
  // generator for every level from its provenance down to where it stuck
  for (size_t k = item.level; k <= j; ++k) {
    levels_[k].gens.push_back(g);
    grow_orbit(k, levels_[k].gens.size() - 1, queue);
  }
}

// Extends the orbit/transversal of one level after a generator was added and
// queues the resulting Schreier generators for deeper sifting.
void StabChain::grow_orbit(size_t lev, size_t new_gen_index,
                           std::vector<QItem>& queue) {
  Level& lv = levels_[lev];
  const size_t old_size = lv.orbit.size();

  auto schreier = [&](size_t orbit_pos, const Perm& h) {
    int p = lv.orbit[orbit_pos];
    int q = h[p];
    Perm s = compose(compose(lv.transversal[orbit_pos], h),
                     lv.transversal[lv.pos[q]].inverse());
    if (!s.is_identity()) queue.push_back({std::move(s), lev + 1});
  };

  // New points reachable from old ones via the new generator.
  std::deque<size_t> frontier;
  const Perm& ng = lv.gens[new_gen_index];
  for (size_t i = 0; i < old_size; ++i) {
    int q = ng[lv.orbit[i]];
    if (lv.pos[q] < 0) {
      lv.pos[q] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(q);
      lv.transversal.push_back(compose(lv.transversal[i], ng));
      frontier.push_back(lv.orbit.size() - 1);
    }
  }
  // Close up under all generators from the new points.
  while (!frontier.empty()) {
    size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& h : lv.gens) {
      int q = h[lv.orbit[i]];
      if (lv.pos[q] < 0) {
        lv.pos[q] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(compose(lv.transversal[i], h));
        frontier.push_back(lv.orbit.size() - 1);
      }
    }
  }
  // Schreier generators: old points with the new generator, and every new
  // point with every generator. Pairs (old, old gen) were queued earlier.
  for (size_t i = 0; i < old_size; ++i) schreier(i, ng);
  for (size_t i = old_size; i < lv.orbit.size(); ++i)
    for (const auto& h : lv.gens) schreier(i, h);
}

uint64_t StabChain::order() const {
  uint64_t n = 1;
  for (const auto& lv : levels_) n *= static_cast<uint64_t>(lv.orbit.size());
  return n;
}

bool StabChain::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  Perm r = p;
  for (const auto& lv : levels_) {
    if (r.is_identity()) return true;
    int x = r[lv.base_point];
    if (lv.pos[x] < 0) return false;
    r = compose(r, lv.transversal[lv.pos[x]].inverse());
  }
  return r.is_identity();
}

std::vector<int> StabChain::base() const {
  std::vector<int> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

uint64_t subgroup_order(int degree, const std::vector<Perm>& gens) {
  StabChain c;
  c.build(degree, gens);
  return c.order();
}

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(int degree, std::vector<Perm> gens, std::string name)
    : degree_(degree), gens_(std::move(gens)), name_(std::move(name)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw error("group '" + name_ + "': generator degree mismatch");
}

PermGroup::PermGroup(const PermGroup& o)
    : degree_(o.degree_), gens_(o.gens_), name_(o.name_),
      known_order_(o.known_order_) {
  std::lock_guard<std::mutex> lock(o.lazy_mutex_);
  chain_ = o.chain_;
  elements_ = o.elements_;
  element_index_ = o.element_index_;
  classes_ = o.classes_;
}

PermGroup& PermGroup::operator=(const PermGroup& o) {
  if (this == &o) return *this;
  PermGroup tmp(o);
  *this = std::move(tmp);
  return *this;
}

PermGroup::PermGroup(PermGroup&& o) noexcept
    : degree_(o.degree_), gens_(std::move(o.gens_)), name_(std::move(o.name_)),
      known_order_(o.known_order_) {
  std::lock_guard<std::mutex> lock(o.lazy_mutex_);
  chain_ = std::move(o.chain_);
  elements_ = std::move(o.elements_);
  element_index_ = std::move(o.element_index_);
  classes_ = std::move(o.classes_);
}

PermGroup& PermGroup::operator=(PermGroup&& o) noexcept {
  if (this == &o) return *this;
  std::scoped_lock lock(lazy_mutex_, o.lazy_mutex_);
  degree_ = o.degree_;
  gens_ = std::move(o.gens_);
  name_ = std::move(o.name_);
  known_order_ = o.known_order_;
  chain_ = std::move(o.chain_);
  elements_ = std::move(o.elements_);
  element_index_ = std::move(o.element_index_);
  classes_ = std::move(o.classes_);
  return *this;
}

void PermGroup::ensure_chain() const {
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  if (chain_) return;
  if (degree_ > 4096)
    throw error("group '" + name_ +
                "': refusing stabilizer chain at degree " +
                std::to_string(degree_) + "; set a known order instead");
  StabChain c;
  c.build(degree_, gens_);
  chain_ = std::move(c);
}

uint64_t PermGroup::order() const {
  if (known_order_) return *known_order_;
  ensure_chain();
  return chain_->order();
}

bool PermGroup::contains(const Perm& p) const {
  ensure_chain();
  return chain_->contains(p);
}

std::vector<int> PermGroup::orbit_of(int point) const {
  std::vector<int> orbit{point};
  std::vector<char> seen(degree_, 0);
  seen[point] = 1;
  for (size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens_) {
      int q = g[orbit[i]];
      if (!seen[q]) {
        seen[q] = 1;
        orbit.push_back(q);
      }
    }
  return orbit;
}

std::vector<std::vector<int>> PermGroup::orbit_partition() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<int>> parts;
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit_of(p);
    std::sort(orb.begin(), orb.end());
    for (int x : orb) seen[x] = 1;
    parts.push_back(std::move(orb));
  }
  return parts;
}

std::vector<std::vector<int>> PermGroup::orbit_partition(
    const std::vector<int>& points) const {
  std::vector<char> wanted(degree_, 0);
  for (int p : points) wanted[p] = 1;
  std::vector<std::vector<int>> out;
  for (const auto& orb : orbit_partition()) {
    std::vector<int> part;
    for (int p : orb)
      if (wanted[p]) part.push_back(p);
    if (!part.empty()) out.push_back(std::move(part));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 &&
         static_cast<int>(orbit_of(0).size()) == degree_;
}

// Minimal block containing {0, j}: union-find closure under the generators.
namespace {
int uf_find(std::vector<int>& up, int x) {
  while (up[x] != x) {
    up[x] = up[up[x]];
    x = up[x];
  }
  return x;
}
}  // namespace

bool PermGroup::is_primitive(std::vector<std::vector<int>>* witness) const {
  if (!is_transitive())
    throw error("primitivity is only defined for transitive groups");
  if (degree_ <= 2) return true;
  size_t best_size = 0;
  std::vector<int> best_up;
  for (int j = 1; j < degree_; ++j) {
    std::vector<int> up(degree_);
    for (int i = 0; i < degree_; ++i) up[i] = i;
    std::vector<std::pair<int, int>> todo{{0, j}};
    up[uf_find(up, j)] = uf_find(up, 0);
    while (!todo.empty()) {
      auto [a, b] = todo.back();
      todo.pop_back();
      for (const auto& g : gens_) {
        int ra = uf_find(up, g[a]), rb = uf_find(up, g[b]);
        if (ra != rb) {
          up[ra] = rb;
          todo.push_back({g[a], g[b]});
        }
      }
    }
    size_t block_size = 0;
    int root0 = uf_find(up, 0);
    for (int i = 0; i < degree_; ++i)
      if (uf_find(up, i) == root0) ++block_size;
    if (block_size < static_cast<size_t>(degree_) &&
        (best_size == 0 || block_size < best_size)) {
      best_size = block_size;
      best_up = up;
    }
  }
  if (best_size == 0) return true;
  if (witness) {
    std::vector<std::vector<int>> blocks(degree_);
    std::vector<int> up = best_up;
    for (int i = 0; i < degree_; ++i) blocks[uf_find(up, i)].push_back(i);
    witness->clear();
    for (auto& b : blocks)
      if (!b.empty()) witness->push_back(std::move(b));
  }
  return false;
}

void PermGroup::ensure_elements(const SearchLimits& lim) const {
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  if (elements_) return;
  std::vector<Perm> elems{Perm(degree_)};
  std::unordered_map<Perm, int, PermHash> index;
  index.emplace(elems[0], 0);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens_) {
      Perm p = compose(elems[i], g);
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (elems.size() > lim.element_enumeration)
          throw error("group '" + name_ + "': element enumeration exceeds " +
                      std::to_string(lim.element_enumeration));
      }
    }
  }
  elements_ = std::move(elems);
  element_index_ = std::move(index);
}

const std::vector<Perm>& PermGroup::elements(const SearchLimits& lim) const {
  ensure_elements(lim);
  return *elements_;
}

int PermGroup::element_index(const Perm& p) const {
  ensure_elements({});
  auto it = element_index_.find(p);
  return it == element_index_.end() ? -1 : it->second;
}

void PermGroup::ensure_classes(const SearchLimits& lim) const {
  ensure_elements(lim);
  std::lock_guard<std::mutex> lock(lazy_mutex_);
  if (classes_) return;
  const auto& elems = *elements_;
  std::vector<char> assigned(elems.size(), 0);
  std::vector<ConjClass> classes;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (assigned[i]) continue;
    ConjClass cls;
    cls.rep_index = static_cast<int>(i);
    cls.element_order = elems[i].order();
    cls.members.push_back(static_cast<int>(i));
    assigned[i] = 1;
    for (size_t k = 0; k < cls.members.size(); ++k) {
      const Perm& x = elems[cls.members[k]];
      for (const auto& g : gens_) {
        int idx = element_index_.at(x.conjugate_by(g));
        if (!assigned[idx]) {
          assigned[idx] = 1;
          cls.members.push_back(idx);
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const ConjClass& a, const ConjClass& b) {
              if (a.element_order != b.element_order)
                return a.element_order < b.element_order;
              if (a.members.size() != b.members.size())
                return a.members.size() > b.members.size();
              return elems[a.rep_index] < elems[b.rep_index];
            });
  classes_ = std::move(classes);
}

const std::vector<ConjClass>& PermGroup::conjugacy_classes(
    const SearchLimits& lim) const {
  ensure_classes(lim);
  return *classes_;
}

uint64_t PermGroup::count_elements_of_order(uint64_t k,
                                            const SearchLimits& lim) const {
  uint64_t n = 0;
  for (const auto& e : elements(lim))
    if (e.order() == k) ++n;
  return n;
}

std::vector<int> PermGroup::involution_indices(const SearchLimits& lim) const {
  std::vector<int> out;
  const auto& elems = elements(lim);
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].order() == 2) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<Perm> PermGroup::inverting_involution(
    const Perm& x, const SearchLimits& lim) const {
  Perm xinv = x.inverse();
  for (int i : involution_indices(lim)) {
    const Perm& a = elements(lim)[i];
    if (x.conjugate_by(a) == xinv) return a;
  }
  return std::nullopt;
}

bool PermGroup::is_perfect() const {
  uint64_t target = order();
  std::vector<Perm> kgens;
  for (const auto& a : gens_)
    for (const auto& b : gens_) {
      Perm c = compose(compose(compose(a.inverse(), b.inverse()), a), b);
      if (!c.is_identity()) kgens.push_back(std::move(c));
    }
  if (kgens.empty()) return target == 1;
  StabChain chain;
  chain.build(degree_, kgens);
  // normal closure of the commutators
  bool changed = true;
  while (changed) {
    changed = false;
    if (chain.order() == target) return true;
    size_t cur = kgens.size();
    for (size_t i = 0; i < cur; ++i)
      for (const auto& g : gens_) {
        Perm x = kgens[i].conjugate_by(g);
        if (!chain.contains(x)) {
          kgens.push_back(std::move(x));
          chain.build(degree_, kgens);
          changed = true;
        }
      }
  }
  return chain.order() == target;
}

bool is_strongly_real(const PermGroup& g, const Perm& x, Perm* witness,
                      const SearchLimits& lim) {
  auto a = g.inverting_involution(x, lim);
  if (!a) return false;
  if (witness) *witness = *a;
  return true;
}

// ------------------------------------------------- automorphism extension

namespace {
Perm side_by_side(const Perm& a, const Perm& b) {
  int n = a.degree();
  std::vector<int> img(2 * n);
  for (int i = 0; i < n; ++i) {
    img[i] = a[i];
    img[n + i] = n + b[i];
  }
  return Perm(std::move(img));
}
}  // namespace

bool tuple_map_extends(int degree, uint64_t group_order,
                       const std::vector<Perm>& src,
                       const std::vector<Perm>& dst) {
  std::vector<Perm> diag;
  diag.reserve(src.size());
  for (size_t i = 0; i < src.size(); ++i)
    diag.push_back(side_by_side(src[i], dst[i]));
  return subgroup_order(2 * degree, diag) == group_order;
}

bool extends_to_automorphism(const PermGroup& g, const std::vector<Perm>& src,
                             const std::vector<Perm>& dst) {
  if (src.size() != dst.size())
    throw error("extends_to_automorphism: tuple length mismatch");
  uint64_t n = g.order();
  if (subgroup_order(g.degree(), src) != n)
    throw error("extends_to_automorphism: src does not generate the group");
  if (!tuple_map_extends(g.degree(), n, src, dst)) return false;
  return subgroup_order(g.degree(), dst) == n;
}

bool extends_to_isomorphism(const PermGroup& g, const std::vector<Perm>& src,
                            int dst_degree, const std::vector<Perm>& dst,
                            uint64_t dst_group_order) {
  if (src.size() != dst.size())
    throw error("extends_to_isomorphism: tuple length mismatch");
  uint64_t n = g.order();
  if (n != dst_group_order) return false;
  if (subgroup_order(g.degree(), src) != n)
    throw error("extends_to_isomorphism: src does not generate the group");
  if (subgroup_order(dst_degree, dst) != n) return false;
  int offset = g.degree();
  std::vector<Perm> diag;
  for (size_t i = 0; i < src.size(); ++i) {
    std::vector<int> img(offset + dst_degree);
    for (int p = 0; p < offset; ++p) img[p] = src[i][p];
    for (int p = 0; p < dst_degree; ++p) img[offset + p] = offset + dst[i][p];
    diag.push_back(Perm(std::move(img)));
  }
  return subgroup_order(offset + dst_degree, diag) == n;
}

// ------------------------------------------------------ centralizer in Sym

namespace {

struct ActionTree {
  std::vector<int> order;       // BFS discovery order
  std::vector<int> parent;      // parent point, -1 at base
  std::vector<int> parent_gen;  // generator index used from parent
  std::vector<std::pair<int, int>> non_tree;  // (point, gen) closing edges
};

ActionTree bfs_tree(int degree, const std::vector<Perm>& gens, int base) {
  ActionTree t;
  t.parent.assign(degree, -2);
  t.parent_gen.assign(degree, -1);
  t.parent[base] = -1;
  t.order.push_back(base);
  for (size_t i = 0; i < t.order.size(); ++i) {
    int p = t.order[i];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int q = gens[gi][p];
      if (t.parent[q] == -2) {
        t.parent[q] = p;
        t.parent_gen[q] = static_cast<int>(gi);
        t.order.push_back(q);
      } else {
        t.non_tree.push_back({p, static_cast<int>(gi)});
      }
    }
  }
  return t;
}

// transport permutation: base -> p along tree edges
Perm transport(const ActionTree& t, const std::vector<Perm>& gens, int degree,
               int p) {
  std::vector<int> path;
  while (t.parent[p] >= 0) {
    path.push_back(t.parent_gen[p]);
    p = t.parent[p];
  }
  Perm u(degree);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = compose(u, gens[*it]);
  return u;
}

}  // namespace

PermGroup centralizer_in_sym(int degree, const std::vector<Perm>& gens) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw error("centralizer_in_sym: degree mismatch");
  const int base = 0;
  ActionTree tree = bfs_tree(degree, gens, base);
  if (static_cast<int>(tree.order.size()) != degree)
    throw error("centralizer_in_sym: group is not transitive (map would be disconnected)");

  // cheap per-point signature: which generators fix the point, and the cycle
  // length of the point under each generator
  auto signature = [&](int p) {
    uint64_t s = 0;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int len = 1, q = gens[gi][p];
      while (q != p && len < 64) {
        q = gens[gi][q];
        ++len;
      }
      s = s * 131 + static_cast<uint64_t>(len);
    }
    return s;
  };
  const uint64_t base_sig = signature(base);

  // loop words at the base point prune candidates hard when the point
  // stabilizer is nontrivial
  std::vector<Perm> loops;
  {
    size_t step = std::max<size_t>(1, tree.non_tree.size() / 24);
    for (size_t k = 0; k < tree.non_tree.size() && loops.size() < 24; k += step) {
      auto [p, gi] = tree.non_tree[k];
      Perm u = transport(tree, gens, degree, p);
      Perm v = transport(tree, gens, degree, gens[gi][p]);
      Perm w = compose(compose(u, gens[gi]), v.inverse());
      if (!w.is_identity()) loops.push_back(std::move(w));
    }
  }

  // attempt to extend base -> x to a bijection commuting with every generator
  std::vector<int> cimg(degree);
  auto try_extend = [&](int x, Perm* out) {
    std::fill(cimg.begin(), cimg.end(), -1);
    cimg[base] = x;
    for (int p : tree.order) {
      int cp = cimg[p];
      if (cp < 0) return false;  // unreachable; cannot happen when transitive
      for (const auto& g : gens) {
        int q = g[p];
        int want = g[cp];
        if (cimg[q] < 0)
          cimg[q] = want;
        else if (cimg[q] != want)
          return false;
      }
    }
    *out = Perm(cimg);
    return true;
  };

  std::vector<Perm> cgens;
  std::vector<char> in_orbit(degree, 0);
  std::vector<int> orbit{base};
  in_orbit[base] = 1;
  auto grow = [&] {
    for (size_t i = 0; i < orbit.size(); ++i)
      for (const auto& c : cgens) {
        int q = c[orbit[i]];
        if (!in_orbit[q]) {
          in_orbit[q] = 1;
          orbit.push_back(q);
        }
      }
  };
  for (int x = 0; x < degree; ++x) {
    if (in_orbit[x]) continue;
    if (signature(x) != base_sig) continue;
    bool pass = true;
    for (const auto& w : loops)
      if (w[x] != x) {
        pass = false;
        break;
      }
    if (!pass) continue;
    Perm c;
    if (try_extend(x, &c)) {
      if (!c.is_identity() && c.count_fixed_points() != 0)
        throw error("centralizer_in_sym: non-semiregular element found");
      cgens.push_back(std::move(c));
      grow();
    }
  }
  PermGroup result(degree, std::move(cgens));
  result.set_known_order(orbit.size());
  return result;
}

}  // namespace etm
