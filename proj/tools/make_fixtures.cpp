// Writes the derived fixture files into a data directory: the degree-28
// unitary group built from SU(3,3) matrices on the isotropic points of the
// Hermitian form sum x_i y_i^3 over GF(9), its extension by the field
// automorphism, the degree-36 coset action, and two reference maps.

#include <array>
#include <filesystem>
#include <iostream>

#include "etm/field.hpp"
#include "etm/io.hpp"
#include "etm/search.hpp"
#include "etm/zoo.hpp"

using namespace etm;

namespace {

using Elt = Field::Elt;
using Mat = std::array<Elt, 9>;  // row major 3x3

struct Hermitian {
  Field f{3, 2};
  std::vector<std::array<Elt, 3>> points;  // isotropic projective points

  Hermitian() {
    const uint32_t q = f.size();
    // canonical projective representatives: first nonzero coordinate = 1
    for (uint32_t x = 0; x < q; ++x)
      for (uint32_t y = 0; y < q; ++y)
        for (uint32_t z = 0; z < q; ++z) {
          std::array<Elt, 3> v{x, y, z};
          if (x == 0 && y == 0 && z == 0) continue;
          Elt lead = x ? x : (y ? y : z);
          if (lead != 1) continue;
          if (norm(v) == 0) points.push_back(v);
        }
    if (points.size() != 28)
      throw error("expected 28 isotropic points, found " +
                  std::to_string(points.size()));
  }

  Elt conj(Elt a) const { return f.frobenius(a); }  // x -> x^3
  Elt norm(const std::array<Elt, 3>& v) const {
    Elt s = 0;
    for (Elt c : v) s = f.add(s, f.mul(c, conj(c)));
    return s;
  }

  bool unitary_det1(const Mat& m) const {
    // columns orthonormal under the form, determinant 1
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Elt s = 0;
        for (int k = 0; k < 3; ++k)
          s = f.add(s, f.mul(m[3 * k + i], conj(m[3 * k + j])));
        if (s != (i == j ? 1u : 0u)) return false;
      }
    Elt det = f.sub(
        f.add(f.add(f.mul(m[0], f.mul(m[4], m[8])), f.mul(m[1], f.mul(m[5], m[6]))),
              f.mul(m[2], f.mul(m[3], m[7]))),
        f.add(f.add(f.mul(m[2], f.mul(m[4], m[6])), f.mul(m[0], f.mul(m[5], m[7]))),
              f.mul(m[1], f.mul(m[3], m[8]))));
    return det == 1;
  }

  int point_index(std::array<Elt, 3> v) const {
    // projectivize: scale so the first nonzero coordinate is 1
    Elt lead = v[0] ? v[0] : (v[1] ? v[1] : v[2]);
    Elt li = f.inv(lead);
    for (auto& c : v) c = f.mul(c, li);
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i] == v) return static_cast<int>(i);
    return -1;
  }

  Perm matrix_perm(const Mat& m) const {
    std::vector<int> img(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
      std::array<Elt, 3> w{0, 0, 0};
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          w[r] = f.add(w[r], f.mul(m[3 * r + c], points[i][c]));
      int target = point_index(w);
      if (target < 0) throw error("matrix does not preserve the isotropic set");
      img[i] = target;
    }
    return Perm(std::move(img));
  }

  Perm frobenius_perm() const {
    std::vector<int> img(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
      std::array<Elt, 3> w = points[i];
      for (auto& c : w) c = conj(c);
      img[i] = point_index(w);
    }
    return Perm(std::move(img));
  }
};

PermGroup build_u33(const Hermitian& h) {
  const Field& f = h.f;
  Elt lam = f.primitive_root();       // order 8
  Elt i4 = f.mul(lam, lam);           // order 4
  Elt ali = f.inv(lam);

  Mat cycle{0, 0, 1, 1, 0, 0, 0, 1, 0};  // e1 -> e2 -> e3 -> e1
  Mat diag{i4, 0, 0, 0, f.inv(i4), 0, 0, 0, 1};
  Mat plane{lam, lam, 0, ali, f.neg(ali), 0, 0, 0, 1};

  std::vector<Perm> gens;
  for (const Mat& m : {cycle, diag, plane}) {
    if (!h.unitary_det1(m)) throw error("generator matrix is not special unitary");
    gens.push_back(h.matrix_perm(m));
  }
  if (subgroup_order(28, gens) != 6048) {
    // top up from the plane subgroup if the seed generators fall short
    for (uint32_t a = 0; a < 9 && subgroup_order(28, gens) != 6048; ++a)
      for (uint32_t b = 0; b < 9; ++b)
        for (uint32_t c = 0; c < 9; ++c)
          for (uint32_t d = 0; d < 9; ++d) {
            Mat m{a, b, 0, c, d, 0, 0, 0, 1};
            if (!h.unitary_det1(m)) continue;
            gens.push_back(h.matrix_perm(m));
            if (subgroup_order(28, gens) == 6048) goto done;
            gens.pop_back();
          }
  done:;
  }
  PermGroup g(28, gens, "U3_3");
  if (g.order() != 6048) throw error("unitary group construction failed");
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    std::string dir = argc > 1 ? argv[1] : default_data_dir();
    std::filesystem::create_directories(dir + "/groups");
    std::filesystem::create_directories(dir + "/maps");

    Hermitian h;
    PermGroup u33 = build_u33(h);
    save_group_file(u33, dir + "/groups/u3_3.json", 6048,
                    "SU(3,3) matrices on the 28 isotropic points of the "
                    "Hermitian form sum x_i y_i^3 over GF(9); see "
                    "tools/make_fixtures.cpp",
                    12096);

    std::vector<Perm> aut_gens = u33.generators();
    aut_gens.push_back(h.frobenius_perm());
    PermGroup u33aut(28, aut_gens, "U3_3_aut");
    if (u33aut.order() != 12096)
      throw error("field-automorphism extension has the wrong order");
    save_group_file(u33aut, dir + "/groups/u3_3_aut.json", 12096,
                    "degree-28 unitary fixture extended by the coordinatewise "
                    "field automorphism x -> x^3");

    UnitaryFixtureFacts facts = unitary_fixture_facts(u33);
    PermGroup g36(36, facts.action36.generators(), "U3_3_36");
    if (g36.order() != 6048) throw error("coset action has the wrong order");
    save_group_file(g36, dir + "/groups/u3_3_36.json", 6048,
                    "action of the degree-28 unitary fixture on the 36 cosets "
                    "of a located L2(7)-isomorphic maximal subgroup");

    // the tetrahedron: regular map of the reflection triple of S4
    {
      auto s4 = symmetric(4);
      GeneratorTuple t = validate_tuple(
          MapClass::C1,
          {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(2,3)", 4),
           Perm::from_cycles("(3,4)", 4)},
          s4);
      FlagMap m = build_map(t, s4);
      m.set_name("tetrahedron");
      save_map_file(m, dir + "/maps/tetrahedron.json");
    }

    // the 6-vertex complete graph embedded in the projective plane: the
    // regular triple of A5 with pentagonal vertices and triangular faces
    {
      auto a5 = alternating(5);
      MazurovEnumeration e = enumerate_mazurov_triples(a5, false, SIZE_MAX);
      bool written = false;
      for (const auto& w : e.witnesses) {
        if (compose(w.images[1], w.images[2]).order() != 5) continue;
        if (compose(w.images[0], w.images[1]).order() != 3) continue;
        FlagMap m = build_map(w, a5);
        MapCells c = cells(m);
        if (c.vertices.size() != 6 || c.edges.size() != 15 || c.faces.size() != 10)
          continue;
        m.set_name("k6_projective");
        save_map_file(m, dir + "/maps/k6_projective.json");
        written = true;
        break;
      }
      if (!written) throw error("no K6 embedding found among the regular triples");
    }

    std::cout << "fixtures written to " << dir << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "make_fixtures: " << e.what() << "\n";
    return 1;
  }
}
