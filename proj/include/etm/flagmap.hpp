#pragma once

#include <optional>

#include "etm/permgroup.hpp"

namespace etm {

// A map on a surface, given combinatorially: a flag set {0..n-1} and three
// involutions r0, r1, r2 with (r0 r2)^2 = 1, acting transitively. Fixed
// points of the r_i are allowed (boundary / free edges).
class FlagMap {
public:
  FlagMap(Perm r0, Perm r1, Perm r2, std::string name = "");

  int flag_count() const { return r_[0].degree(); }
  const Perm& r(int i) const { return r_[i]; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool operator==(const FlagMap& o) const {
    return r_[0] == o.r_[0] && r_[1] == o.r_[1] && r_[2] == o.r_[2];
  }

private:
  std::array<Perm, 3> r_;
  std::string name_;
};

struct MapCells {
  std::vector<std::vector<int>> vertices;  // orbits of <r1, r2>
  std::vector<std::vector<int>> edges;     // orbits of <r0, r2>
  std::vector<std::vector<int>> faces;     // orbits of <r0, r1>
  std::vector<std::vector<int>> petrie_polygons;  // orbits of <r0 r2, r1>
};

MapCells cells(const FlagMap& m);
int euler_characteristic(const FlagMap& m);  // V - E + F

bool has_boundary(const FlagMap& m);  // some r_i has a fixed point
// True iff the map is orientable and without boundary: the flag graph under
// r0, r1, r2 is 2-colorable, i.e. the even subgroup has two flag orbits.
bool is_orientable(const FlagMap& m);

struct Surface {
  bool orientable = false;
  int genus = 0;     // when orientable
  int crosscaps = 0;  // when non-orientable
};
// Refuses maps with boundary, and orientable maps of odd Euler
// characteristic (quotient maps may live on orbifolds, not surfaces).
Surface genus_or_crosscap(const FlagMap& m);

FlagMap dual(const FlagMap& m);    // swaps r0 and r2
FlagMap petrie(const FlagMap& m);  // replaces r0 by r0 r2

// Flag bijection c with c(x . r_i) = c(x) . r_i', found by fixing a base
// flag and deterministically extending each candidate image.
std::optional<Perm> map_isomorphism(const FlagMap& a, const FlagMap& b);
bool are_isomorphic(const FlagMap& a, const FlagMap& b);

// Aut M = centralizer of the monodromy group in Sym(flags); semiregular on
// flags, order = number of valid base-flag images.
PermGroup automorphism_group(const FlagMap& m);

PermGroup monodromy_group(const FlagMap& m);

// Flags are Aut M-orbits, relabelled 0..k-1 by smallest member; the induced
// r_i are well-defined because Aut M centralizes the monodromy action.
FlagMap quotient_by_automorphisms(const FlagMap& m);
FlagMap quotient_by_automorphisms(const FlagMap& m, const PermGroup& aut);

bool is_edge_transitive(const FlagMap& m);
bool is_edge_transitive(const FlagMap& m, const PermGroup& aut);

}  // namespace etm
