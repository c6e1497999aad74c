#pragma once

#include "etm/flagmap.hpp"
#include "etm/mapclass.hpp"
#include "etm/permgroup.hpp"

namespace etm {

// Words in the generators R0, R1, R2 of the rank-3 reflection free product
// (R_i^2 = (R0 R2)^2 = 1). Letters are 0, 1, 2. The normal form cancels
// adjacent equal letters and sorts {0,2}-blocks as R0 before R2, which is a
// confluent rewriting system for this group.
namespace gw {

using Word = std::vector<int>;

Word normalize(Word w);
Word concat(Word a, const Word& b);
inline Word inverse(Word w) {  // letters are involutions
  std::reverse(w.begin(), w.end());
  return w;
}
// substitute R0 -> s0 and R2 -> s2 (R1 fixed), then normalize
Word substitute(const Word& w, const Word& s0, const Word& s2);

}  // namespace gw

// A word in the generators of one parent group: (slot index, exponent +-1).
using SlotWord = std::vector<std::pair<int, int>>;

struct TupleSlot {
  std::string name;
  gw::Word word;  // the generator as a word in R0, R1, R2
  bool torsion;   // image must have order dividing 2
};

// One coset-table entry: right-multiplying transversal coset j by a letter
// lands in coset `next` and emits `emit` in the parent-group generators
// (t_j . L = emit . t_next).
struct RewriteStep {
  int next = 0;
  SlotWord emit;
};

// Everything the artifact knows about one of the 14 classes: the parent
// group's generators as words, its coset transversal and rewrite table, the
// tuple shape, and the forbidden-automorphism patterns.
struct ClassSystem {
  MapClass cls;
  std::vector<gw::Word> transversal;
  // rows indexed by letter: 0 = R0, 1 = R1, 2 = R2, 3 = R0R2
  std::array<std::vector<RewriteStep>, 4> rows;
  std::vector<TupleSlot> slots;
  // each pattern maps slot i to (source slot, inverted) of the dst tuple
  std::vector<std::vector<std::pair<int, bool>>> forbidden;
  std::vector<SlotWord> extra_relations;  // must evaluate to the identity

  int index() const { return static_cast<int>(transversal.size()); }
};

const ClassSystem& class_system(MapClass t);

// Constructive membership: rewrites a Gamma-word lying in the parent group
// into a word in the parent's generators (errors if the word leaves coset 0).
SlotWord rewrite_in_class(const ClassSystem& cs, const gw::Word& w);

Perm evaluate_slot_word(const SlotWord& w, const std::vector<Perm>& images,
                        int degree);

struct GeneratorTuple {
  MapClass cls = MapClass::C1;
  std::vector<Perm> images;
  bool verified = false;
};

// Checks shape, torsion relations, extra relations and generation.
GeneratorTuple validate_tuple(MapClass t, std::vector<Perm> images,
                              const PermGroup& g);

// True iff some forbidden pattern of the class extends to an automorphism of
// G; the index of the first extending pattern is reported through `pattern`.
bool forbidden_automorphism_exists(const GeneratorTuple& t, const PermGroup& g,
                                   int* pattern = nullptr);

// The class-T map of a validated tuple: |transversal| x |G| flags, with the
// monodromy action read off the rewrite table. With the trivial group this
// collapses to the one-edge basic map of the class.
FlagMap build_map(const GeneratorTuple& t, const PermGroup& g);

FlagMap basic_map(MapClass t);
const PermGroup& trivial_group();

// Tuple for omega_act(word, t.cls) whose built map is the corresponding
// dual/Petrie image of build_map(t): target generator words are pulled back
// through the operation and rewritten in the source class's table.
GeneratorTuple omega_transform_tuple(const GeneratorTuple& t,
                                     const std::vector<MapOp>& word,
                                     const PermGroup& g);

// Witness transfers between classes (regular -> reflection classes, class 2
// closure, chirality -> free classes, strongly-real descent). The output is
// validated and guaranteed forbidden-free; hypothesis failures throw.
GeneratorTuple transfer_witness(const GeneratorTuple& t, MapClass to,
                                const PermGroup& g);

}  // namespace etm
