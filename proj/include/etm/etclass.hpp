#pragma once

#include "etm/parent.hpp"

namespace etm {

// Classifies an edge-transitive map by matching its quotient by the full
// automorphism group against the 14 one-edge basic maps. Throws on maps that
// are not edge-transitive; failure to match any basic map is an internal
// error (the quotient of an edge-transitive map always has one edge).
MapClass classify(const FlagMap& m);
MapClass classify(const FlagMap& m, const PermGroup& aut);

struct ClassifyReport {
  MapClass cls;
  size_t vertices = 0, edges = 0, faces = 0;
  int euler = 0;
  bool orientable = false;
  bool boundary = false;
  uint64_t aut_order = 0;
};
ClassifyReport classify_report(const FlagMap& m);

}  // namespace etm
