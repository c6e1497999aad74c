#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "etm/permgroup.hpp"
#include "etm/zoo.hpp"

using namespace etm;

TEST_CASE("orders of standard groups") {
  CHECK(symmetric(5).order() == 120);
  CHECK(symmetric(6).order() == 720);
  CHECK(alternating(6).order() == 360);
  CHECK(alternating(7).order() == 2520);
  CHECK(alternating(8).order() == 20160);
  CHECK(cyclic(12).order() == 12);
}

TEST_CASE("chain order equals element enumeration on small groups") {
  for (const auto& g : {symmetric(5), alternating(5), alternating(6), cyclic(9),
                        psl2(7), psl2(8), psl2(11)}) {
    CHECK(g.order() == g.elements().size());
    for (const auto& gen : g.generators()) CHECK(g.contains(gen));
  }
}

TEST_CASE("chain order equals element enumeration on random subgroups") {
  std::mt19937_64 rng(99);
  SearchLimits lim;
  lim.element_enumeration = 400000;
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5 + static_cast<int>(rng() % 5);  // degrees 5..9
    std::vector<Perm> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Perm(std::move(img)));
    }
    PermGroup g(n, gens, "random");
    CHECK(g.order() == g.elements(lim).size());
    // membership agrees with the enumeration on random products
    for (int k = 0; k < 5; ++k) {
      Perm p = compose(gens[rng() % gens.size()],
                       gens[rng() % gens.size()].inverse());
      CHECK(g.contains(p));
      CHECK(g.element_index(p) >= 0);
    }
  }
}

TEST_CASE("orbit partition properties") {
  PermGroup trivial(4, {}, "trivial4");
  CHECK(trivial.orbit_partition().size() == 4);

  PermGroup c4(4, {Perm::from_cycles("(1,2,3,4)", 4)});
  auto parts = c4.orbit_partition();
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].size() == 4);

  // orbits are closed under every generator and partition the points
  PermGroup g(7, {Perm::from_cycles("(1,2,3)", 7), Perm::from_cycles("(4,5)", 7)});
  auto orbits = g.orbit_partition();
  std::set<int> all;
  for (const auto& orb : orbits) {
    std::set<int> members(orb.begin(), orb.end());
    for (int x : orb)
      for (const auto& gen : g.generators()) CHECK(members.count(gen[x]) == 1);
    all.insert(orb.begin(), orb.end());
  }
  CHECK(all.size() == 7);

  // restriction to a subset keeps only the requested points
  auto sub = g.orbit_partition({0, 1, 3, 5});
  CHECK(sub.size() == 3);  // {0,1} from the 3-cycle, {3}, {5} split off {3,4}
}

TEST_CASE("primitivity with block witness") {
  PermGroup c4(4, {Perm::from_cycles("(1,2,3,4)", 4)});
  std::vector<std::vector<int>> blocks;
  CHECK_FALSE(c4.is_primitive(&blocks));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{0, 2});
  CHECK(blocks[1] == std::vector<int>{1, 3});

  // transitive of prime degree is primitive
  CHECK(cyclic(7).is_primitive());
  CHECK(psl2(7).is_primitive());
  CHECK_THROWS_AS(PermGroup(4, {}).is_primitive(), error);
}

TEST_CASE("conjugacy classes of A5 and abelian groups") {
  auto a5 = alternating(5);
  const auto& classes = a5.conjugacy_classes();
  std::multiset<size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 15, 20, 12, 12});

  auto c3 = cyclic(3);
  CHECK(c3.conjugacy_classes().size() == 3);
}

TEST_CASE("count elements of given order") {
  CHECK(alternating(5).count_elements_of_order(5) == 24);
  CHECK(alternating(5).count_elements_of_order(2) == 15);
  CHECK(alternating(5).count_elements_of_order(3) == 20);
}

TEST_CASE("centralizer in the symmetric group") {
  // regular group: centralizer order equals the degree
  auto c6 = cyclic(6);
  PermGroup z = centralizer_in_sym(6, c6.generators());
  CHECK(z.order() == 6);

  // full symmetric group of degree >= 3 has trivial centralizer
  auto s4 = symmetric(4);
  CHECK(centralizer_in_sym(4, s4.generators()).order() == 1);

  CHECK_THROWS_AS(centralizer_in_sym(4, std::vector<Perm>{}), error);
}

TEST_CASE("centralizer elements commute with all generators") {
  // the flag action of the full tetrahedral reflection group on 24 flags:
  // the regular action of S4 on itself by right multiplication
  auto s4 = symmetric(4);
  const auto& elems = s4.elements();
  REQUIRE(elems.size() == 24);
  std::vector<Perm> right;
  for (const auto& g : {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(2,3)", 4),
                        Perm::from_cycles("(3,4)", 4)}) {
    std::vector<int> img(24);
    for (int i = 0; i < 24; ++i) img[i] = s4.element_index(compose(elems[i], g));
    right.push_back(Perm(img));
  }
  PermGroup cent = centralizer_in_sym(24, right);
  CHECK(cent.order() == 24);
  // brute-force commuting filter: transport each candidate and check products
  for (const auto& c : cent.generators())
    for (const auto& b : right) CHECK(compose(c, b) == compose(b, c));
}

TEST_CASE("automorphism extension via the diagonal criterion") {
  auto a6 = alternating(6);
  std::vector<Perm> tuple = {Perm::from_cycles("(1,2)(3,4)", 6),
                             Perm::from_cycles("(2,6)(4,5)", 6),
                             Perm::from_cycles("(2,3)(4,5)", 6)};
  REQUIRE(subgroup_order(6, tuple) == 360);
  CHECK(extends_to_automorphism(a6, tuple, tuple));  // identity automorphism
  // transposing the first two while fixing the third is obstructed by the
  // differing product orders
  std::vector<Perm> swapped = {tuple[1], tuple[0], tuple[2]};
  CHECK_FALSE(extends_to_automorphism(a6, tuple, swapped));
}

TEST_CASE("extension preserves the orders of random words") {
  auto g = psl2(7);
  const auto& elems = g.elements();
  std::mt19937_64 rng(23);
  // a pair and its simultaneous inverse are automorphic images, so every
  // word has the same order under both tuples
  for (int found = 0; found < 5;) {
    const Perm& x = elems[rng() % elems.size()];
    const Perm& y = elems[rng() % elems.size()];
    if (subgroup_order(g.degree(), {x, y}) != 168) continue;
    std::vector<Perm> src{x, y}, dst{x.inverse(), y.inverse()};
    REQUIRE(extends_to_automorphism(g, src, dst));
    for (size_t i = 0; i < src.size(); ++i)
      CHECK(src[i].order() == dst[i].order());
    for (int w = 0; w < 12; ++w) {
      Perm ws(g.degree()), wd(g.degree());
      int len = 2 + static_cast<int>(rng() % 6);
      for (int k = 0; k < len; ++k) {
        size_t pick = rng() % 2;
        ws = compose(ws, src[pick]);
        wd = compose(wd, dst[pick]);
      }
      CHECK(ws.order() == wd.order());
    }
    ++found;
  }
}

TEST_CASE("tuple reachability is symmetric and transitive") {
  auto a5 = alternating(5);
  std::vector<Perm> t1 = {Perm::from_cycles("(1,2,3,4,5)", 5),
                          Perm::from_cycles("(1,2,3)", 5)};
  REQUIRE(subgroup_order(5, t1) == 60);
  // conjugate image: reachable by an inner automorphism
  Perm c = Perm::from_cycles("(1,4)(2,3)", 5);
  std::vector<Perm> t2 = {t1[0].conjugate_by(c), t1[1].conjugate_by(c)};
  Perm d = Perm::from_cycles("(2,5,3)", 5);
  std::vector<Perm> t3 = {t2[0].conjugate_by(d), t2[1].conjugate_by(d)};
  CHECK(extends_to_automorphism(a5, t1, t1));
  CHECK(extends_to_automorphism(a5, t1, t2));
  CHECK(extends_to_automorphism(a5, t2, t1));  // symmetric
  CHECK(extends_to_automorphism(a5, t2, t3));
  CHECK(extends_to_automorphism(a5, t1, t3));  // transitive
}

TEST_CASE("every generating pair of psl2(7) is simultaneously inverted") {
  auto g = psl2(7);
  const auto& elems = g.elements();
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 40) {
    const Perm& x = elems[rng() % elems.size()];
    const Perm& y = elems[rng() % elems.size()];
    if (subgroup_order(g.degree(), {x, y}) != 168) continue;
    CHECK(extends_to_automorphism(g, {x, y}, {x.inverse(), y.inverse()}));
    ++tested;
  }
}

TEST_CASE("strongly real elements") {
  auto a4 = alternating(4);
  Perm three_cycle = Perm::from_cycles("(1,2,3)", 4);
  CHECK_FALSE(is_strongly_real(a4, three_cycle));
  // every involution is strongly real (inverted by itself)
  auto a5 = alternating(5);
  Perm invol = Perm::from_cycles("(1,2)(3,4)", 5);
  Perm witness;
  CHECK(is_strongly_real(a5, invol, &witness));
  CHECK(compose(compose(witness.inverse(), invol), witness) == invol.inverse());
}

TEST_CASE("perfectness") {
  CHECK(alternating(5).is_perfect());
  CHECK(psl2(7).is_perfect());
  CHECK_FALSE(symmetric(4).is_perfect());
  CHECK_FALSE(cyclic(5).is_perfect());
}
