#pragma once

#include <optional>

#include "etm/parent.hpp"
#include "etm/permgroup.hpp"

namespace etm {

// Group file: { "degree": n, "generators": [[images...] | "(1,2)(3,4)", ...],
//               "name": str } plus optional "asserted_order", "provenance",
// "aut_order". Cycle strings are 1-based.
PermGroup load_group_file(const std::string& path);
void save_group_file(const PermGroup& g, const std::string& path,
                     std::optional<uint64_t> asserted_order = std::nullopt,
                     const std::string& provenance = "",
                     std::optional<uint64_t> aut_order = std::nullopt);
std::optional<uint64_t> group_file_aut_order(const std::string& path);

// Map file: { "flags": n, "r0": [...], "r1": [...], "r2": [...], "name": str }
FlagMap load_map_file(const std::string& path);
void save_map_file(const FlagMap& m, const std::string& path);

// Tuple file: { "class": label, "group": reference, "images": [[...], ...] }
struct TupleFile {
  std::string class_label;
  std::string group_ref;
  std::vector<std::vector<int>> images;
};
TupleFile load_tuple_file(const std::string& path);
void save_tuple_file(const GeneratorTuple& t, const std::string& group_ref,
                     const std::string& path);

// ETM_DATA_DIR, else ./data
std::string default_data_dir();

// Resolves constructor names (A5..A8, S3..S8, psl2_q, pgl2_q, L3_2) and
// fixture names (M11, U3_3, U3_3_36, U3_3_aut); anything containing a path
// separator or .json suffix is loaded as a group file. Fixture files are
// revalidated: asserted order always, plus primitivity and perfectness for
// the groups whose simplicity the toolkit leans on.
PermGroup resolve_group(const std::string& name, const std::string& data_dir);

uint64_t file_digest(const std::string& path);  // FNV-1a over the bytes

}  // namespace etm
