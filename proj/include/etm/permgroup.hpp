#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "etm/perm.hpp"

namespace etm {

// Brute-force bounds, sized so the full acceptance run stays desk-scale.
struct SearchLimits {
  uint64_t element_enumeration = 500000;
  uint64_t class_pair_products = 100000000;  // |A|*|B| in structure counts
};

// Base-and-strong-generating-set certificate. Deterministic base selection:
// smallest moved point first, so repeated runs agree.
class StabChain {
public:
  void build(int degree, const std::vector<Perm>& gens);
  uint64_t order() const;
  bool contains(const Perm& p) const;
  std::vector<int> base() const;

private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens;
    std::vector<int> orbit;        // discovery order
    std::vector<int> pos;          // point -> index into orbit, -1 outside
    std::vector<Perm> transversal; // transversal[i] maps base_point -> orbit[i]
  };
  struct QItem {
    Perm g;
    size_t level;  // g fixes the base points of all earlier levels
  };
  void sift_in(QItem item, std::vector<QItem>& queue);
  void grow_orbit(size_t lev, size_t new_gen_index, std::vector<QItem>& queue);

  int degree_ = 0;
  std::vector<Level> levels_;
};

struct ConjClass {
  int rep_index = 0;           // index into PermGroup::elements()
  uint64_t element_order = 0;
  std::vector<int> members;    // element indices
  size_t size() const { return members.size(); }
};

// Finitely generated permutation group. Immutable after construction; the
// stabilizer chain and the element table are built lazily on first use.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> gens, std::string name = "");

  PermGroup(const PermGroup& o);
  PermGroup& operator=(const PermGroup& o);
  PermGroup(PermGroup&& o) noexcept;
  PermGroup& operator=(PermGroup&& o) noexcept;

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  uint64_t order() const;
  bool contains(const Perm& p) const;

  // Trusts `n` as the exact order; used where the order is known by
  // construction (e.g. semiregular centralizers counted by orbit size) and
  // a chain at this degree would be wasteful.
  void set_known_order(uint64_t n) { known_order_ = n; }

  std::vector<int> orbit_of(int point) const;
  std::vector<std::vector<int>> orbit_partition() const;
  // restriction of the orbit partition to a chosen point set
  std::vector<std::vector<int>> orbit_partition(const std::vector<int>& points) const;
  bool is_transitive() const;

  // Witness is a nontrivial block system (minimal block size) when false.
  bool is_primitive(std::vector<std::vector<int>>* witness = nullptr) const;

  const std::vector<Perm>& elements(const SearchLimits& lim = {}) const;
  int element_index(const Perm& p) const;  // -1 when absent
  const std::vector<ConjClass>& conjugacy_classes(const SearchLimits& lim = {}) const;

  uint64_t count_elements_of_order(uint64_t k, const SearchLimits& lim = {}) const;
  std::vector<int> involution_indices(const SearchLimits& lim = {}) const;

  // Involution a with x^a = x^-1, if one exists.
  std::optional<Perm> inverting_involution(const Perm& x, const SearchLimits& lim = {}) const;

  bool is_perfect() const;

private:
  void ensure_chain() const;
  void ensure_elements(const SearchLimits& lim) const;
  void ensure_classes(const SearchLimits& lim) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::string name_;
  std::optional<uint64_t> known_order_;

  mutable std::mutex lazy_mutex_;
  mutable std::optional<StabChain> chain_;
  mutable std::optional<std::vector<Perm>> elements_;
  mutable std::unordered_map<Perm, int, PermHash> element_index_;
  mutable std::optional<std::vector<ConjClass>> classes_;
};

uint64_t subgroup_order(int degree, const std::vector<Perm>& gens);

bool is_strongly_real(const PermGroup& g, const Perm& x, Perm* witness = nullptr,
                      const SearchLimits& lim = {});

// True iff some automorphism of G maps src[i] -> dst[i] for all i. Decided
// abstractly by the diagonal-subgroup criterion on two disjoint copies of
// the point set, so outer automorphisms are covered without overgroup data.
bool extends_to_automorphism(const PermGroup& g, const std::vector<Perm>& src,
                             const std::vector<Perm>& dst);

// Diagonal criterion only; caller guarantees src generates a group of the
// stated order and that <dst> = <src>. This is the search-loop fast path.
bool tuple_map_extends(int degree, uint64_t group_order,
                       const std::vector<Perm>& src,
                       const std::vector<Perm>& dst);

// Graph of an isomorphism <src> -> <dst> across two (possibly different)
// permutation domains; src must generate g.
bool extends_to_isomorphism(const PermGroup& g, const std::vector<Perm>& src,
                            int dst_degree, const std::vector<Perm>& dst,
                            uint64_t dst_group_order);

// Full centralizer of a transitive group B in Sym(points of B). Computed by
// deterministic extension from a base point: a candidate image either
// propagates along the action to a full commuting bijection or fails.
// The result carries its exact order (number of valid base images).
PermGroup centralizer_in_sym(int degree, const std::vector<Perm>& gens);

}  // namespace etm
