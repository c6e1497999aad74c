#include "etm/etclass.hpp"

namespace etm {

MapClass classify(const FlagMap& m) {
  return classify(m, automorphism_group(m));
}

MapClass classify(const FlagMap& m, const PermGroup& aut) {
  if (!is_edge_transitive(m, aut))
    throw error("classify: map '" + m.name() + "' is not edge-transitive");
  FlagMap q = quotient_by_automorphisms(m, aut);
  for (MapClass t : all_map_classes)
    if (are_isomorphic(q, basic_map(t))) return t;
  throw error("classify: quotient matches no one-edge map (internal error)");
}

ClassifyReport classify_report(const FlagMap& m) {
  ClassifyReport r;
  PermGroup aut = automorphism_group(m);
  r.cls = classify(m, aut);
  MapCells c = cells(m);
  r.vertices = c.vertices.size();
  r.edges = c.edges.size();
  r.faces = c.faces.size();
  r.euler = static_cast<int>(r.vertices) - static_cast<int>(r.edges) +
            static_cast<int>(r.faces);
  r.orientable = is_orientable(m);
  r.boundary = has_boundary(m);
  r.aut_order = aut.order();
  return r;
}

}  // namespace etm
