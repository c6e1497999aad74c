#pragma once

#include <array>
#include <optional>
#include <unordered_map>

#include "etm/field.hpp"
#include "etm/permgroup.hpp"

namespace etm {

PermGroup symmetric(int n);
PermGroup alternating(int n);
PermGroup cyclic(int n);

// Projective line over GF(q): points 0..q-1 are the field elements (by
// element encoding), point q is infinity.
struct ProjectiveLine {
  Field field;
  explicit ProjectiveLine(uint32_t q);
  int degree() const { return static_cast<int>(field.size()) + 1; }

  // [[a,b],[c,d]] acting on column vectors: z -> (az+b)/(cz+d)
  Perm matrix_perm(Field::Elt a, Field::Elt b, Field::Elt c, Field::Elt d) const;
  Perm matrix_perm_int(int64_t a, int64_t b, int64_t c, int64_t d) const;
  Perm frobenius_perm() const;
};

PermGroup psl2(uint32_t q);
PermGroup pgl2(uint32_t q);
PermGroup pgammal2(uint32_t q);

// Action of g on the right cosets of <subgroup_gens>; cosets are numbered in
// BFS discovery order from the trivial coset. Also reports the coset
// representatives and the induced images of chosen elements.
struct CosetAction {
  PermGroup action;              // degree = index
  std::vector<Perm> coset_reps;  // rep[0] = identity
  Perm induced(const Perm& g) const;
  int degree() const { return static_cast<int>(coset_reps.size()); }

  std::vector<Perm> subgroup_gens;
  StabChain subgroup_chain;
  int ambient_degree = 0;
};
CosetAction coset_action(const PermGroup& g, const std::vector<Perm>& subgroup_gens,
                         int max_index = 4096);

// Element-level isomorphism between two concrete groups, realized as an
// element lookup table (both groups must be small enough to enumerate).
struct IsoMap {
  std::unordered_map<Perm, Perm, PermHash> fwd;
  const Perm& operator()(const Perm& x) const;
};

std::optional<std::vector<Perm>> find_generating_pair(const PermGroup& g);

// Searches for images of src_gens in the candidate group that extend to an
// isomorphism; deterministic scan order. Returns the full element map.
std::optional<IsoMap> find_isomorphism(const PermGroup& a,
                                       const std::vector<Perm>& a_gens,
                                       const PermGroup& b);

}  // namespace etm
