#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "etm/etclass.hpp"
#include "etm/search.hpp"
#include "etm/zoo.hpp"

using namespace etm;

namespace {

gw::Word substitute_slot_word(const ClassSystem& cs, const SlotWord& w) {
  gw::Word out;
  for (auto [slot, exp] : w) {
    gw::Word piece = cs.slots[slot].word;
    if (exp < 0) piece = gw::inverse(piece);
    out = gw::concat(out, piece);
  }
  return out;
}

}  // namespace

TEST_CASE("word normal form") {
  CHECK(gw::normalize({0, 0}) == gw::Word{});
  CHECK(gw::normalize({2, 0}) == gw::Word{0, 2});
  CHECK(gw::normalize({0, 2, 0}) == gw::Word{2});
  CHECK(gw::normalize({2, 0, 2}) == gw::Word{0});
  CHECK(gw::normalize({1, 2, 2, 1}) == gw::Word{});
  CHECK(gw::normalize({0, 1, 2, 0}) == gw::Word{0, 1, 0, 2});
}

TEST_CASE("rewrite tables are symbolically consistent for all 14 classes") {
  // t_j . R = emit(slot words) . t_next must hold as words in the ambient
  // reflection group, for every class, coset and letter
  const gw::Word letter_word[4] = {{0}, {1}, {2}, {0, 2}};
  for (MapClass t : all_map_classes) {
    const ClassSystem& cs = class_system(t);
    REQUIRE(cs.transversal.size() == cs.rows[0].size());
    for (int letter = 0; letter < 4; ++letter) {
      REQUIRE(cs.rows[letter].size() == cs.transversal.size());
      for (size_t j = 0; j < cs.transversal.size(); ++j) {
        const RewriteStep& step = cs.rows[letter][j];
        gw::Word lhs = gw::concat(cs.transversal[j], letter_word[letter]);
        gw::Word rhs = gw::concat(substitute_slot_word(cs, step.emit),
                                  cs.transversal[step.next]);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("membership rewriting reproduces the generator words") {
  for (MapClass t : all_map_classes) {
    const ClassSystem& cs = class_system(t);
    for (size_t s = 0; s < cs.slots.size(); ++s) {
      SlotWord w = rewrite_in_class(cs, cs.slots[s].word);
      gw::Word back = substitute_slot_word(cs, w);
      CHECK(back == gw::normalize(cs.slots[s].word));
    }
    // a word outside the parent group must be rejected
    if (cs.transversal.size() > 1)
      CHECK_THROWS_AS(rewrite_in_class(cs, cs.transversal[1]), error);
  }
}

TEST_CASE("basic maps have the right flag counts") {
  CHECK(basic_map(MapClass::C1).flag_count() == 1);
  CHECK(basic_map(MapClass::C2).flag_count() == 2);
  CHECK(basic_map(MapClass::C2ex).flag_count() == 2);
  CHECK(basic_map(MapClass::C2pex).flag_count() == 2);
  CHECK(basic_map(MapClass::C3).flag_count() == 4);
  CHECK(basic_map(MapClass::C4).flag_count() == 4);
  CHECK(basic_map(MapClass::C5).flag_count() == 4);
}

TEST_CASE("the class-2 basic map is the two-vertex one-edge map") {
  FlagMap m = basic_map(MapClass::C2);
  CHECK(m.r(0) == Perm::from_cycles("(1,2)", 2));
  CHECK(m.r(1).is_identity());
  CHECK(m.r(2).is_identity());
  MapCells c = cells(m);
  CHECK(c.vertices.size() == 2);
  CHECK(c.edges.size() == 1);
  CHECK(c.faces.size() == 1);
  // its dual has a single vertex
  CHECK(cells(basic_map(MapClass::C2s)).vertices.size() == 1);
}

TEST_CASE("the 14 basic maps are pairwise non-isomorphic") {
  std::vector<FlagMap> maps;
  for (MapClass t : all_map_classes) maps.push_back(basic_map(t));
  for (size_t i = 0; i < maps.size(); ++i)
    for (size_t j = i + 1; j < maps.size(); ++j)
      CHECK_FALSE(are_isomorphic(maps[i], maps[j]));
}

TEST_CASE("the basic maps exhaust the one-edge possibilities") {
  // enumerate all transitive edge-group actions on 1, 2 and 4 points up to
  // relabelling, and match each against the 14 basic maps
  std::vector<FlagMap> found;
  auto consider = [&](const Perm& r0, const Perm& r1, const Perm& r2) {
    // relations
    Perm a = compose(r0, r2);
    if (!compose(a, a).is_identity()) return;
    // the edge subgroup <r0, r2> must act transitively
    std::vector<char> seen(r0.degree(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (const Perm* g : {&r0, &r2}) {
        int q = (*g)[p];
        if (!seen[q]) {
          seen[q] = 1;
          ++count;
          stack.push_back(q);
        }
      }
    }
    if (count != r0.degree()) return;
    FlagMap m(r0, r1, r2);
    for (const auto& other : found)
      if (are_isomorphic(m, other)) return;
    found.push_back(std::move(m));
  };
  for (int n : {1, 2, 4}) {
    // all involutions of degree n
    std::vector<Perm> involutions;
    auto s = symmetric(n);
    for (const auto& e : s.elements())
      if (e.is_involution()) involutions.push_back(e);
    for (const auto& r0 : involutions)
      for (const auto& r1 : involutions)
        for (const auto& r2 : involutions) consider(r0, r1, r2);
  }
  CHECK(found.size() == 14);
  for (const auto& m : found) {
    bool matched = false;
    for (MapClass t : all_map_classes)
      if (are_isomorphic(m, basic_map(t))) {
        matched = true;
        break;
      }
    CHECK(matched);
  }
}

TEST_CASE("dual and petrie of basic maps move along the rows") {
  CHECK(dual(basic_map(MapClass::C2)) == basic_map(MapClass::C2s));
  CHECK(petrie(basic_map(MapClass::C2s)) == basic_map(MapClass::C2p));
  CHECK(dual(basic_map(MapClass::C2ex)) == basic_map(MapClass::C2sex));
  CHECK(petrie(basic_map(MapClass::C2sex)) == basic_map(MapClass::C2pex));
  CHECK(dual(basic_map(MapClass::C4)) == basic_map(MapClass::C4s));
  CHECK(petrie(basic_map(MapClass::C4s)) == basic_map(MapClass::C4p));
  CHECK(dual(basic_map(MapClass::C5)) == basic_map(MapClass::C5s));
  CHECK(petrie(basic_map(MapClass::C5s)) == basic_map(MapClass::C5p));
  CHECK(dual(basic_map(MapClass::C1)) == basic_map(MapClass::C1));
  CHECK(are_isomorphic(dual(basic_map(MapClass::C3)), basic_map(MapClass::C3)));
}

TEST_CASE("omega action on labels") {
  CHECK(omega_act(MapOp::D, MapClass::C2) == MapClass::C2s);
  CHECK(omega_act(MapOp::P, MapClass::C2s) == MapClass::C2p);
  CHECK(omega_act(MapOp::D, MapClass::C1) == MapClass::C1);
  CHECK(omega_act(MapOp::P, MapClass::C3) == MapClass::C3);
  // (DP)^3 is the identity on every label
  for (MapClass t : all_map_classes) {
    MapClass u = t;
    for (int i = 0; i < 3; ++i) u = omega_act(MapOp::P, omega_act(MapOp::D, u));
    CHECK(u == t);
  }
  CHECK(class_from_label("2*ex") == MapClass::C2sex);
  CHECK(class_label(MapClass::C5p) == "5P");
}

TEST_CASE("explicit class-2 triples validate with the right product orders") {
  auto a6 = alternating(6);
  std::vector<Perm> tuple = {Perm::from_cycles("(1,2)(3,4)", 6),
                             Perm::from_cycles("(2,6)(4,5)", 6),
                             Perm::from_cycles("(2,3)(4,5)", 6)};
  GeneratorTuple t = validate_tuple(MapClass::C2, tuple, a6);
  CHECK(t.verified);
  CHECK(compose(tuple[0], tuple[1]).order() == 3);
  CHECK(compose(tuple[0], tuple[2]).order() == 5);
  CHECK(compose(tuple[1], tuple[2]).order() == 3);
  CHECK_FALSE(forbidden_automorphism_exists(t, a6));
}

TEST_CASE("class-1 relation violations are rejected") {
  auto s4 = symmetric(4);
  // r0 r2 of order 3 violates the commuting relation
  std::vector<Perm> bad = {Perm::from_cycles("(1,2)", 4),
                           Perm::from_cycles("(3,4)", 4),
                           Perm::from_cycles("(2,3)", 4)};
  CHECK_THROWS_AS(validate_tuple(MapClass::C1, bad, s4), error);
}

TEST_CASE("tuples failing generation are rejected with the subgroup order") {
  auto a5 = alternating(5);
  std::vector<Perm> sub = {Perm::from_cycles("(1,2)(3,4)", 5),
                           Perm::from_cycles("(1,3)(2,4)", 5),
                           Perm::from_cycles("(1,2)(3,4)", 5)};
  try {
    validate_tuple(MapClass::C2, sub, a5);
    FAIL("expected a generation failure");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("order 4") != std::string::npos);
  }
}

TEST_CASE("build_map with the trivial group collapses to the basic map") {
  for (MapClass t : all_map_classes) {
    const ClassSystem& cs = class_system(t);
    std::vector<Perm> ids(cs.slots.size(), Perm(1));
    GeneratorTuple tup = validate_tuple(t, ids, trivial_group());
    CHECK(build_map(tup, trivial_group()) == basic_map(t));
  }
}

TEST_CASE("regular map from a commuting involution triple of S4") {
  auto s4 = symmetric(4);
  std::vector<Perm> tuple = {Perm::from_cycles("(1,2)", 4),
                             Perm::from_cycles("(2,3)", 4),
                             Perm::from_cycles("(3,4)", 4)};
  GeneratorTuple t = validate_tuple(MapClass::C1, tuple, s4);
  FlagMap m = build_map(t, s4);
  CHECK(m.flag_count() == 24);
  MapCells c = cells(m);
  CHECK(c.vertices.size() == 4);
  CHECK(c.edges.size() == 6);
  CHECK(c.faces.size() == 4);
  CHECK(euler_characteristic(m) == 2);
  CHECK(is_orientable(m));
  PermGroup aut = automorphism_group(m);
  CHECK(aut.order() == 24);
  CHECK(classify(m, aut) == MapClass::C1);
}

TEST_CASE("classify of all basic maps, frozen") {
  // one-edge maps are themselves more symmetric than their class: all
  // quotient to the one-flag map except the class-4 row, which quotients to
  // the class-2 row
  using MC = MapClass;
  std::vector<std::pair<MC, MC>> golden = {
      {MC::C1, MC::C1},    {MC::C2, MC::C1},    {MC::C2s, MC::C1},
      {MC::C2p, MC::C1},   {MC::C2ex, MC::C1},  {MC::C2sex, MC::C1},
      {MC::C2pex, MC::C1}, {MC::C3, MC::C1},    {MC::C4, MC::C2},
      {MC::C4s, MC::C2s},  {MC::C4p, MC::C2p},  {MC::C5, MC::C1},
      {MC::C5s, MC::C1},   {MC::C5p, MC::C1},
  };
  for (auto [t, expect] : golden) CHECK(classify(basic_map(t)) == expect);
}

TEST_CASE("omega transform of tuples tracks dual and petrie") {
  auto a6 = alternating(6);
  std::vector<Perm> tuple = {Perm::from_cycles("(1,2)(3,4)", 6),
                             Perm::from_cycles("(2,6)(4,5)", 6),
                             Perm::from_cycles("(2,3)(4,5)", 6)};
  GeneratorTuple t2 = validate_tuple(MapClass::C2, tuple, a6);

  GeneratorTuple t2s = omega_transform_tuple(t2, {MapOp::D}, a6);
  CHECK(t2s.cls == MapClass::C2s);
  CHECK(are_isomorphic(build_map(t2s, a6), dual(build_map(t2, a6))));

  GeneratorTuple t2p = omega_transform_tuple(t2s, {MapOp::P}, a6);
  CHECK(t2p.cls == MapClass::C2p);
  CHECK(are_isomorphic(build_map(t2p, a6), petrie(build_map(t2s, a6))));

  // double application of D returns the original tuple
  GeneratorTuple back = omega_transform_tuple(t2s, {MapOp::D}, a6);
  CHECK(back.cls == MapClass::C2);
  CHECK(back.images == t2.images);
}

TEST_CASE("omega transforms track dual and petrie in every class row") {
  // one admissible witness per representative class, on small groups, then
  // check build(transform) against dual/petrie(build) for both operations
  auto s4 = symmetric(4);
  auto a6 = alternating(6);
  auto l27 = psl2(7);
  auto a7 = alternating(7);

  std::vector<std::pair<GeneratorTuple, const PermGroup*>> witnesses;
  witnesses.push_back(
      {validate_tuple(MapClass::C1,
                      {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(2,3)", 4),
                       Perm::from_cycles("(3,4)", 4)},
                      s4),
       &s4});
  GeneratorTuple t2 = validate_tuple(
      MapClass::C2,
      {Perm::from_cycles("(1,2)(3,4)", 6), Perm::from_cycles("(2,6)(4,5)", 6),
       Perm::from_cycles("(2,3)(4,5)", 6)},
      a6);
  witnesses.push_back({t2, &a6});
  witnesses.push_back({transfer_witness(t2, MapClass::C3, a6), &a6});
  {
    ProjectiveLine line(7);
    GeneratorTuple l2 = validate_tuple(MapClass::C2,
                                       {line.matrix_perm_int(0, 1, -1, 0),
                                        line.matrix_perm_int(0, 2, 3, 0),
                                        line.matrix_perm_int(1, 3, -3, -1)},
                                       l27);
    witnesses.push_back({transfer_witness(l2, MapClass::C4, l27), &l27});
  }
  witnesses.push_back(
      {validate_tuple(MapClass::C5,
                      {Perm::from_cycles("(1,2,3,4,5)", 7),
                       Perm::from_cycles("(1,6,7)(2,4,5)", 7)},
                      a7),
       &a7});
  // a chiral-shape pair on a solvable group exercises the even-subgroup row
  // without costing a large map (the S3 pair is the forbidden-present case)
  auto s3 = symmetric(3);
  witnesses.push_back(
      {validate_tuple(MapClass::C2pex,
                      {Perm::from_cycles("(1,2,3)", 3), Perm::from_cycles("(1,2)", 3)},
                      s3),
       &s3});

  for (const auto& [t, gp] : witnesses) {
    const PermGroup& g = *gp;
    FlagMap m = build_map(t, g);
    GeneratorTuple td = omega_transform_tuple(t, {MapOp::D}, g);
    CHECK(td.cls == omega_act(MapOp::D, t.cls));
    CHECK(are_isomorphic(build_map(td, g), dual(m)));
    GeneratorTuple tp = omega_transform_tuple(t, {MapOp::P}, g);
    CHECK(tp.cls == omega_act(MapOp::P, t.cls));
    CHECK(are_isomorphic(build_map(tp, g), petrie(m)));
    // applying the involutions twice returns to the original representation
    GeneratorTuple tdd = omega_transform_tuple(td, {MapOp::D}, g);
    CHECK(tdd.images == t.images);
    GeneratorTuple tpp = omega_transform_tuple(tp, {MapOp::P}, g);
    CHECK(tpp.images == t.images);
  }
}

TEST_CASE("transfers from a regular triple") {
  auto s4 = symmetric(4);
  std::vector<Perm> tuple = {Perm::from_cycles("(1,2)", 4),
                             Perm::from_cycles("(2,3)", 4),
                             Perm::from_cycles("(3,4)", 4)};
  GeneratorTuple t1 = validate_tuple(MapClass::C1, tuple, s4);
  GeneratorTuple t2 = transfer_witness(t1, MapClass::C2, s4);
  CHECK(t2.cls == MapClass::C2);
  CHECK(compose(t2.images[0], t2.images[2]).order() <= 2);
  CHECK(compose(t2.images[1], t2.images[2]).order() > 2);
  CHECK_FALSE(forbidden_automorphism_exists(t2, s4));

  GeneratorTuple t3 = transfer_witness(t1, MapClass::C3, s4);
  CHECK(t3.cls == MapClass::C3);
  GeneratorTuple t4 = transfer_witness(t1, MapClass::C4, s4);
  CHECK(t4.cls == MapClass::C4);

  // class-2 closure transfers
  GeneratorTuple t3b = transfer_witness(t2, MapClass::C3, s4);
  CHECK_FALSE(forbidden_automorphism_exists(t3b, s4));
  GeneratorTuple t4b = transfer_witness(t2, MapClass::C4, s4);
  CHECK_FALSE(forbidden_automorphism_exists(t4b, s4));
}

TEST_CASE("a symmetric-group rotation pair with the inverting symmetry builds a regular map") {
  auto s3 = symmetric(3);
  std::vector<Perm> pair = {Perm::from_cycles("(1,2,3)", 3),
                            Perm::from_cycles("(1,2)", 3)};
  GeneratorTuple t = validate_tuple(MapClass::C2pex, pair, s3);
  CHECK(forbidden_automorphism_exists(t, s3));
  FlagMap m = build_map(t, s3);
  CHECK(m.flag_count() == 12);
  CHECK(classify(m) == MapClass::C1);
}
