#include "etm/parent.hpp"

#include <algorithm>

namespace etm {

namespace gw {

Word normalize(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
      if (!out.empty() && out.back() == letter) {
        out.pop_back();  // R_i^2 = 1
        changed = true;
      } else if (letter == 0 && !out.empty() && out.back() == 2) {
        out.pop_back();  // R2 R0 = R0 R2
        out.push_back(0);
        out.push_back(2);
        changed = true;
      } else {
        out.push_back(letter);
      }
    }
    w = std::move(out);
  }
  return w;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return normalize(std::move(a));
}

Word substitute(const Word& w, const Word& s0, const Word& s2) {
  Word out;
  for (int letter : w) {
    if (letter == 0)
      out.insert(out.end(), s0.begin(), s0.end());
    else if (letter == 2)
      out.insert(out.end(), s2.begin(), s2.end());
    else
      out.push_back(letter);
  }
  return normalize(std::move(out));
}

}  // namespace gw

namespace {

using Pattern = std::vector<std::pair<int, bool>>;

ClassSystem make_rep(MapClass cls, std::vector<gw::Word> transversal,
                     std::vector<TupleSlot> slots,
                     std::array<std::vector<RewriteStep>, 3> rows012,
                     std::vector<Pattern> forbidden,
                     std::vector<SlotWord> extra = {}) {
  ClassSystem cs;
  cs.cls = cls;
  cs.transversal = std::move(transversal);
  cs.slots = std::move(slots);
  for (int i = 0; i < 3; ++i) cs.rows[i] = std::move(rows012[i]);
  // the R0R2 row is the composite of the R0 and R2 rows
  cs.rows[3].resize(cs.transversal.size());
  for (size_t j = 0; j < cs.transversal.size(); ++j) {
    const RewriteStep& a = cs.rows[0][j];
    const RewriteStep& b = cs.rows[2][a.next];
    RewriteStep step;
    step.next = b.next;
    step.emit = a.emit;
    step.emit.insert(step.emit.end(), b.emit.begin(), b.emit.end());
    cs.rows[3][j] = std::move(step);
  }
  cs.forbidden = std::move(forbidden);
  cs.extra_relations = std::move(extra);
  return cs;
}

// letter permutations of {R0, R2, R0R2} for the two derivation kinds
struct Derivation {
  int inv[4];          // preimage letter per letter (R1 fixed)
  gw::Word sub0, sub2; // substitution words for R0 and R2
};

const Derivation kDual{{2, 1, 0, 3}, {2}, {0}};
// first-and-then: dual followed by Petrie; letters map R0->R2->R0R2->R0
const Derivation kDualPetrie{{3, 1, 0, 2}, {2}, {0, 2}};

ClassSystem derive(const ClassSystem& base, MapClass cls, const Derivation& d) {
  ClassSystem cs;
  cs.cls = cls;
  for (const auto& t : base.transversal)
    cs.transversal.push_back(gw::substitute(t, d.sub0, d.sub2));
  for (const auto& s : base.slots)
    cs.slots.push_back({s.name, gw::substitute(s.word, d.sub0, d.sub2), s.torsion});
  for (int letter = 0; letter < 4; ++letter) cs.rows[letter] = base.rows[d.inv[letter]];
  cs.forbidden = base.forbidden;
  cs.extra_relations = base.extra_relations;
  return cs;
}

std::array<ClassSystem, 14> build_all_systems() {
  using W = gw::Word;
  auto S = [](std::initializer_list<std::pair<int, int>> l) { return SlotWord(l); };

  // class 1: the whole reflection group, one coset
  ClassSystem c1 = make_rep(
      MapClass::C1, {W{}},
      {{"r0", {0}, true}, {"r1", {1}, true}, {"r2", {2}, true}},
      {{{{0, S({{0, 1}})}}, {{0, S({{1, 1}})}}, {{0, S({{2, 1}})}}}},
      {}, {S({{0, 1}, {2, 1}, {0, 1}, {2, 1}})});

  // class 2: three reflections, index 2
  ClassSystem c2 = make_rep(
      MapClass::C2, {W{}, W{0}},
      {{"s1", {1}, true}, {"s2", {0, 1, 0}, true}, {"s3", {2}, true}},
      {{// R0
        {{1, {}}, {0, {}}},
        // R1
        {{0, S({{0, 1}})}, {1, S({{1, 1}})}},
        // R2
        {{0, S({{2, 1}})}, {1, S({{2, 1}})}}}},
      {{{1, false}, {0, false}, {2, false}}});

  // class 2ex: reflection and free generator, index 2
  ClassSystem c2ex = make_rep(
      MapClass::C2ex, {W{}, W{0}},
      {{"s1", {2}, true}, {"s", {0, 1}, false}},
      {{// R0
        {{1, {}}, {0, {}}},
        // R1
        {{1, S({{1, -1}})}, {0, S({{1, 1}})}},
        // R2
        {{0, S({{0, 1}})}, {1, S({{0, 1}})}}}},
      {{{0, false}, {1, true}}});

  // class 2Pex: the even subgroup with rotation pair (x, y), index 2
  ClassSystem c2pex = make_rep(
      MapClass::C2pex, {W{}, W{0}},
      {{"x", {1, 2}, false}, {"y", {0, 2}, true}},
      {{// R0
        {{1, {}}, {0, {}}},
        // R1
        {{1, S({{0, 1}, {1, 1}})}, {0, S({{1, 1}, {0, -1}})}},
        // R2
        {{1, S({{1, 1}})}, {0, S({{1, 1}})}}}},
      {{{0, true}, {1, false}}});

  // class 3: four conjugate reflections, index 4 (normal)
  ClassSystem c3 = make_rep(
      MapClass::C3, {W{}, W{0}, W{2}, W{0, 2}},
      {{"s0", {1}, true},
       {"s1", {0, 1, 0}, true},
       {"s2", {2, 1, 2}, true},
       {"s3", {0, 2, 1, 0, 2}, true}},
      {{// R0
        {{1, {}}, {0, {}}, {3, {}}, {2, {}}},
        // R1
        {{0, S({{0, 1}})}, {1, S({{1, 1}})}, {2, S({{2, 1}})}, {3, S({{3, 1}})}},
        // R2
        {{2, {}}, {3, {}}, {0, {}}, {1, {}}}}},
      {{{1, false}, {0, false}, {3, false}, {2, false}},
       {{2, false}, {3, false}, {0, false}, {1, false}},
       {{3, false}, {2, false}, {1, false}, {0, false}}});

  // class 4: two reflections and a free generator, index 4
  ClassSystem c4 = make_rep(
      MapClass::C4, {W{}, W{0}, W{2}, W{0, 2}},
      {{"s1", {1}, true}, {"s2", {2, 1, 2}, true}, {"s", {0, 1, 2, 0}, false}},
      {{// R0
        {{1, {}}, {0, {}}, {3, {}}, {2, {}}},
        // R1
        {{0, S({{0, 1}})}, {3, S({{2, 1}})}, {2, S({{1, 1}})}, {1, S({{2, -1}})}},
        // R2
        {{2, {}}, {3, {}}, {0, {}}, {1, {}}}}},
      {{{1, false}, {0, false}, {2, true}}});

  // class 5: two free generators, index 4
  ClassSystem c5 = make_rep(
      MapClass::C5, {W{}, W{0}, W{2}, W{0, 2}},
      {{"s", {1, 2}, false}, {"sp", {0, 1, 2, 0}, false}},
      {{// R0
        {{1, {}}, {0, {}}, {3, {}}, {2, {}}},
        // R1
        {{2, S({{0, 1}})}, {3, S({{1, 1}})}, {0, S({{0, -1}})}, {1, S({{1, -1}})}},
        // R2
        {{2, {}}, {3, {}}, {0, {}}, {1, {}}}}},
      {{{0, true}, {1, true}}, {{1, false}, {0, false}}, {{1, true}, {0, true}}});

  std::array<ClassSystem, 14> all = {
      std::move(c1),
      std::move(c2),
      ClassSystem{},
      ClassSystem{},
      std::move(c2ex),
      ClassSystem{},
      std::move(c2pex),
      std::move(c3),
      std::move(c4),
      ClassSystem{},
      ClassSystem{},
      std::move(c5),
      ClassSystem{},
      ClassSystem{},
  };
  auto at = [&](MapClass t) -> ClassSystem& {
    return all[static_cast<int>(t)];
  };
  at(MapClass::C2s) = derive(at(MapClass::C2), MapClass::C2s, kDual);
  at(MapClass::C2p) = derive(at(MapClass::C2), MapClass::C2p, kDualPetrie);
  at(MapClass::C2sex) = derive(at(MapClass::C2ex), MapClass::C2sex, kDual);
  at(MapClass::C4s) = derive(at(MapClass::C4), MapClass::C4s, kDual);
  at(MapClass::C4p) = derive(at(MapClass::C4), MapClass::C4p, kDualPetrie);
  at(MapClass::C5s) = derive(at(MapClass::C5), MapClass::C5s, kDual);
  at(MapClass::C5p) = derive(at(MapClass::C5), MapClass::C5p, kDualPetrie);
  return all;
}

const std::array<ClassSystem, 14>& all_systems() {
  static const std::array<ClassSystem, 14> systems = build_all_systems();
  return systems;
}

}  // namespace

const ClassSystem& class_system(MapClass t) {
  return all_systems()[static_cast<int>(t)];
}

SlotWord rewrite_in_class(const ClassSystem& cs, const gw::Word& w) {
  int coset = 0;
  SlotWord emit;
  for (int letter : w) {
    const RewriteStep& step = cs.rows[letter][coset];
    emit.insert(emit.end(), step.emit.begin(), step.emit.end());
    coset = step.next;
  }
  if (coset != 0)
    throw error("rewrite_in_class: word lies outside the parent group");
  return emit;
}

Perm evaluate_slot_word(const SlotWord& w, const std::vector<Perm>& images,
                        int degree) {
  Perm out(degree);
  for (auto [slot, exp] : w) {
    const Perm& g = images[slot];
    out = compose(out, exp >= 0 ? g : g.inverse());
  }
  return out;
}

GeneratorTuple validate_tuple(MapClass t, std::vector<Perm> images,
                              const PermGroup& g) {
  const ClassSystem& cs = class_system(t);
  if (images.size() != cs.slots.size())
    throw error("tuple for class " + class_label(t) + ": expected " +
                std::to_string(cs.slots.size()) + " images, got " +
                std::to_string(images.size()));
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != g.degree())
      throw error("tuple image degree mismatch in slot " + cs.slots[i].name);
    if (cs.slots[i].torsion && !images[i].is_involution())
      throw error("tuple relation failure: " + cs.slots[i].name +
                  "^2 = 1 does not hold");
    if (!g.contains(images[i]))
      throw error("tuple image for slot " + cs.slots[i].name +
                  " lies outside the group");
  }
  for (const auto& rel : cs.extra_relations)
    if (!evaluate_slot_word(rel, images, g.degree()).is_identity())
      throw error("tuple relation failure: commuting relation does not hold");
  uint64_t sub = subgroup_order(g.degree(), images);
  if (sub != g.order())
    throw error("tuple generation failure: images generate order " +
                std::to_string(sub) + " of " + std::to_string(g.order()));
  GeneratorTuple out;
  out.cls = t;
  out.images = std::move(images);
  out.verified = true;
  return out;
}

bool forbidden_automorphism_exists(const GeneratorTuple& t, const PermGroup& g,
                                   int* pattern) {
  if (!t.verified) throw error("forbidden check requires a validated tuple");
  const ClassSystem& cs = class_system(t.cls);
  const int degree = g.degree();
  const uint64_t n = g.order();
  for (size_t pi = 0; pi < cs.forbidden.size(); ++pi) {
    std::vector<Perm> dst;
    dst.reserve(t.images.size());
    for (auto [src, inv] : cs.forbidden[pi])
      dst.push_back(inv ? t.images[src].inverse() : t.images[src]);
    if (tuple_map_extends(degree, n, t.images, dst)) {
      if (pattern) *pattern = static_cast<int>(pi);
      return true;
    }
  }
  return false;
}

const PermGroup& trivial_group() {
  static const PermGroup g = [] {
    PermGroup t(1, {}, "trivial");
    t.set_known_order(1);
    return t;
  }();
  return g;
}

FlagMap build_map(const GeneratorTuple& t, const PermGroup& g) {
  if (!t.verified) throw error("build_map requires a validated tuple");
  const ClassSystem& cs = class_system(t.cls);
  const int k = cs.index();
  const auto& elems = g.elements();
  const int n = static_cast<int>(elems.size()) * k;

  // right-multiplication index maps per (coset, letter)
  std::array<std::vector<std::vector<int>>, 3> rmul;
  for (int letter = 0; letter < 3; ++letter) {
    rmul[letter].resize(k);
    for (int j = 0; j < k; ++j) {
      Perm theta =
          evaluate_slot_word(cs.rows[letter][j].emit, t.images, g.degree());
      auto& tbl = rmul[letter][j];
      tbl.resize(elems.size());
      if (theta.is_identity()) {
        std::iota(tbl.begin(), tbl.end(), 0);
      } else {
        for (size_t e = 0; e < elems.size(); ++e) {
          int target = g.element_index(compose(elems[e], theta));
          if (target < 0) throw error("build_map: product left the group");
          tbl[e] = target;
        }
      }
    }
  }
  std::array<std::vector<int>, 3> img;
  for (int letter = 0; letter < 3; ++letter) {
    img[letter].resize(n);
    for (size_t e = 0; e < elems.size(); ++e)
      for (int j = 0; j < k; ++j)
        img[letter][e * k + j] =
            rmul[letter][j][e] * k + cs.rows[letter][j].next;
  }
  std::string name = "class " + class_label(t.cls);
  if (!g.name().empty()) name += " over " + g.name();
  return FlagMap(Perm(img[0]), Perm(img[1]), Perm(img[2]), name);
}

FlagMap basic_map(MapClass t) {
  const ClassSystem& cs = class_system(t);
  std::vector<Perm> ids(cs.slots.size(), Perm(1));
  GeneratorTuple tup = validate_tuple(t, ids, trivial_group());
  FlagMap m = build_map(tup, trivial_group());
  m.set_name("basic " + class_label(t));
  return m;
}

GeneratorTuple omega_transform_tuple(const GeneratorTuple& t,
                                     const std::vector<MapOp>& word,
                                     const PermGroup& g) {
  if (!t.verified) throw error("omega transform requires a validated tuple");
  MapClass target = omega_act(word, t.cls);
  const ClassSystem& src = class_system(t.cls);
  const ClassSystem& dst = class_system(target);
  std::vector<Perm> images;
  for (const auto& slot : dst.slots) {
    // pull the target generator back through the operations (each is an
    // involutory substitution), then rewrite in the source parent group
    gw::Word v = slot.word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it == MapOp::D)
        v = gw::substitute(v, {2}, {0});
      else
        v = gw::substitute(v, {0, 2}, {2});
    }
    images.push_back(
        evaluate_slot_word(rewrite_in_class(src, v), t.images, g.degree()));
  }
  return validate_tuple(target, std::move(images), g);
}

GeneratorTuple transfer_witness(const GeneratorTuple& t, MapClass to,
                                const PermGroup& g) {
  if (!t.verified) throw error("transfer requires a validated tuple");
  auto finish = [&](std::vector<Perm> images) {
    GeneratorTuple out = validate_tuple(to, std::move(images), g);
    if (forbidden_automorphism_exists(out, g))
      throw error("transfer to class " + class_label(to) +
                  ": forbidden automorphism appeared (hypothesis failure)");
    return out;
  };

  if (t.cls == MapClass::C1 &&
      (to == MapClass::C2 || to == MapClass::C3 || to == MapClass::C4)) {
    GeneratorTuple s = t;
    if (compose(s.images[1], s.images[2]).order() <= 2)
      s = omega_transform_tuple(s, {MapOp::D}, g);  // move the long product to r1 r2
    if (compose(s.images[1], s.images[2]).order() <= 2)
      throw error("transfer from a regular tuple: both vertex and face "
                  "rotations have order <= 2 (group too abelian)");
    const Perm& r0 = s.images[0];
    const Perm& r1 = s.images[1];
    const Perm& r2 = s.images[2];
    if (to == MapClass::C2 || to == MapClass::C4)
      return finish({r0, r1, r2});
    return finish({r1, r2, r0, r2});
  }

  if (t.cls == MapClass::C2 && (to == MapClass::C3 || to == MapClass::C4)) {
    if (forbidden_automorphism_exists(t, g))
      throw error("transfer from class 2 requires a forbidden-free tuple");
    const Perm& s1 = t.images[0];
    const Perm& s2 = t.images[1];
    const Perm& s3 = t.images[2];
    if (to == MapClass::C4) return finish({s1, s2, s3});
    return finish({s3, s1, s2, s3});
  }

  if (t.cls == MapClass::C2pex &&
      (to == MapClass::C2 || to == MapClass::C4 || to == MapClass::C5)) {
    if (forbidden_automorphism_exists(t, g))
      throw error("transfer from a chiral pair requires a forbidden-free tuple");
    const Perm& x = t.images[0];
    const Perm& y = t.images[1];
    if (to == MapClass::C5) return finish({x, y});
    if (to == MapClass::C4) return finish({y, y, x});
    Perm a;
    if (!is_strongly_real(g, x, &a))
      throw error("transfer to class 2 requires a strongly real rotation");
    return finish({a, compose(a, x), y});
  }

  throw error("unsupported transfer: class " + class_label(t.cls) + " -> " +
              class_label(to));
}

}  // namespace etm
