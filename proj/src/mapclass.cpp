#include "etm/mapclass.hpp"

#include <unordered_map>

namespace etm {

namespace {

const std::array<std::string, 14> labels = {
    "1", "2", "2*", "2P", "2ex", "2*ex", "2Pex", "3", "4", "4*", "4P",
    "5", "5*", "5P"};

// rows of the duality orbit table; -1 pads the singleton rows
constexpr int row_table[6][3] = {
    {0, -1, -1},   // 1
    {1, 2, 3},     // 2, 2*, 2P
    {4, 5, 6},     // 2ex, 2*ex, 2Pex
    {7, -1, -1},   // 3
    {8, 9, 10},    // 4, 4*, 4P
    {11, 12, 13},  // 5, 5*, 5P
};

}  // namespace

const std::string& class_label(MapClass t) {
  return labels[static_cast<int>(t)];
}

MapClass class_from_label(const std::string& s) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return static_cast<MapClass>(i);
  throw error("unknown edge-transitive class label '" + s + "'");
}

int class_row(MapClass t) {
  int idx = static_cast<int>(t);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 3; ++c)
      if (row_table[r][c] == idx) return r;
  throw error("bad class");
}

int class_column(MapClass t) {
  int idx = static_cast<int>(t);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 3; ++c)
      if (row_table[r][c] == idx) return c;
  throw error("bad class");
}

MapClass class_at(int row, int column) {
  int idx = row_table[row][column];
  if (idx < 0) throw error("bad class row/column");
  return static_cast<MapClass>(idx);
}

MapClass omega_act(MapOp op, MapClass t) {
  int r = class_row(t), c = class_column(t);
  if (row_table[r][1] < 0) return t;  // singleton rows are fixed
  if (op == MapOp::D) {
    if (c == 0) c = 1;
    else if (c == 1) c = 0;
  } else {
    if (c == 1) c = 2;
    else if (c == 2) c = 1;
  }
  return class_at(r, c);
}

MapClass omega_act(const std::vector<MapOp>& word, MapClass t) {
  for (MapOp op : word) t = omega_act(op, t);
  return t;
}

}  // namespace etm
