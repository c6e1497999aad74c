#pragma once

#include <array>
#include <string>
#include <vector>

#include "etm/perm.hpp"

namespace etm {

// The 14 edge-transitive classes in Graver-Watkins labelling. The row/column
// layout mirrors the orbit structure of the duality group: six rows, four of
// them {T, T*, TP} triples, two fixed singletons (1 and 3).
enum class MapClass {
  C1,
  C2, C2s, C2p,
  C2ex, C2sex, C2pex,
  C3,
  C4, C4s, C4p,
  C5, C5s, C5p,
};

inline constexpr std::array<MapClass, 14> all_map_classes = {
    MapClass::C1,   MapClass::C2,    MapClass::C2s,  MapClass::C2p,
    MapClass::C2ex, MapClass::C2sex, MapClass::C2pex, MapClass::C3,
    MapClass::C4,   MapClass::C4s,   MapClass::C4p,  MapClass::C5,
    MapClass::C5s,  MapClass::C5p,
};

const std::string& class_label(MapClass t);       // "2*ex", "5P", ...
MapClass class_from_label(const std::string& s);  // throws on unknown label

// Row index 0..5 and position 0..2 within the row (singleton rows use 0).
int class_row(MapClass t);
int class_column(MapClass t);
MapClass class_at(int row, int column);

enum class MapOp { D, P };  // duality and Petrie duality

// D transposes the first two classes of each 3-element row and fixes the
// third; P transposes the last two and fixes the first; rows 1 and 3 are
// fixed pointwise. Applied left to right for a word of operations.
MapClass omega_act(MapOp op, MapClass t);
MapClass omega_act(const std::vector<MapOp>& word, MapClass t);

}  // namespace etm
