#pragma once

#include <random>

#include "etm/etclass.hpp"
#include "etm/io.hpp"

namespace etm {

// Exhaustive enumeration of generating involution triples (r0, r1, r2) with
// r0 and r2 commuting. The outer coordinate runs over involution class
// representatives; class sizes weight the exact count m, since generation
// and the relations are conjugation-invariant.
struct MazurovEnumeration {
  uint64_t m = 0;  // exact number of triples in the full (unreduced) space
  uint64_t scanned = 0;
  std::vector<GeneratorTuple> witnesses;  // representative-first tuples
};
MazurovEnumeration enumerate_mazurov_triples(const PermGroup& g,
                                             bool reversed = false,
                                             size_t max_witnesses = SIZE_MAX);

// Number of isomorphism classes of maps built from the given tuples.
uint64_t count_maps_up_to_iso(const PermGroup& g,
                              const std::vector<GeneratorTuple>& tuples);

enum class SearchMode { Exhaustive, Budgeted };

struct SearchOptions {
  SearchMode mode = SearchMode::Exhaustive;
  uint64_t budget = 20000;  // attempts in budgeted mode
  uint64_t seed = 1;
  size_t max_witnesses = 4;
  size_t max_forbidden_examples = 0;
  bool reversed = false;          // reverse scan order (stability re-runs)
  uint64_t max_work = 20000000;   // exhaustive feasibility bound
  int jobs = 1;  // exhaustive scans shard the first-slot domain; results
                 // merge by exact count and ordered witness list
};

struct ClassSearchResult {
  MapClass cls = MapClass::C1;
  bool exhaustive = false;
  uint64_t scanned = 0;
  uint64_t generating = 0;   // candidates that generated the whole group
  uint64_t admissible = 0;   // generating and forbidden-free
  std::vector<GeneratorTuple> witnesses;
  std::vector<GeneratorTuple> forbidden_examples;
};

// Scans class-shaped tuples: torsion slots over involutions, free slots over
// non-identity elements, first slot over class representatives in exhaustive
// mode. Class 1 uses the commuting-pair enumeration above.
ClassSearchResult search_class_tuples(const PermGroup& g, MapClass t,
                                      const SearchOptions& opt = {});

// Primitive plus a prime-length cycle with at least three fixed points
// (found among powers of group elements): certifies that the group contains
// the full alternating group of its degree.
bool jordan_certificate(const PermGroup& h, const SearchLimits& lim = {});

// End-to-end check of one tuple: build the map, classify, compare the
// automorphism order. Admissible tuples must round-trip to their own class
// with |Aut| = |G|; tuples with a forbidden automorphism must land in a
// different class with a strictly larger automorphism group.
struct RoundtripOutcome {
  bool ok = false;
  MapClass classified = MapClass::C1;
  uint64_t aut_order = 0;
  std::string detail;
};
RoundtripOutcome roundtrip_check(const GeneratorTuple& t, const PermGroup& g,
                                 bool expect_admissible);

enum class Verdict { Realized, NotRealized, OutOfScope };
std::string verdict_name(Verdict v);

struct CellReport {
  std::string group;
  MapClass cls = MapClass::C1;
  Verdict verdict = Verdict::OutOfScope;
  bool expected_realized = false;
  bool matches_expectation = false;
  bool exhaustive = false;
  uint64_t scanned = 0;
  uint64_t generating = 0;
  uint64_t admissible = 0;
  double seconds = 0;
  uint64_t seed = 0;
  std::string note;
  std::vector<GeneratorTuple> witnesses;
};

// The desk-scale roster with the expected verdict per duality row.
struct RosterEntry {
  std::string name;
  std::array<bool, 6> realized_by_row;
};
const std::vector<RosterEntry>& default_roster();

CellReport verify_table_cell(const PermGroup& g, const std::string& name,
                             MapClass cls, const std::array<bool, 6>& expected,
                             uint64_t seed, const std::string& data_dir);

struct TableReport {
  std::vector<CellReport> cells;
  bool all_match = true;
  std::string to_text() const;
  // When witness_dir is nonempty, witness tuples are saved there as tuple
  // files and the report references them by path.
  std::string to_json_text(const std::string& tool_version,
                           const std::string& digest_note,
                           const std::string& witness_dir = "") const;
};
TableReport verify_table(const std::string& data_dir, uint64_t seed = 1,
                         int jobs = 1);

// Deterministic constructions on the degree-28 unitary fixture: a maximal
// L2(7)-isomorphic subgroup located by seeded search, with the subgroup
// element map, plus the tuples behind its class-3/4/5 memberships.
struct UnitaryFixtureFacts {
  std::vector<Perm> subgroup_gens;      // generate the located L2(7) copy
  std::vector<Perm> quad;               // class-3 involution quadruple
  PermGroup action36;                   // coset action on the subgroup
  std::vector<uint64_t> subdegrees;     // point-stabilizer orbit sizes
  uint64_t involutions_total = 0;
  uint64_t involutions_in_subgroup = 0;
};
UnitaryFixtureFacts unitary_fixture_facts(const PermGroup& u33);

GeneratorTuple u33_class4_tuple(const PermGroup& u33,
                                const UnitaryFixtureFacts& facts);
GeneratorTuple u33_class5_tuple(const PermGroup& u33, uint64_t seed = 5);

}  // namespace etm
