#include "etm/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"

namespace etm {

using nlohmann::json;

CharacterTable CharacterTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open character table: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("bad JSON in " + path + ": " + e.what());
  }
  CharacterTable t;
  t.group_ = j.at("group").get<std::string>();
  t.order_ = j.at("order").get<uint64_t>();
  for (const auto& c : j.at("classes")) {
    CharClass cc;
    cc.label = c.at("label").get<std::string>();
    cc.size = c.at("size").get<uint64_t>();
    cc.element_order = c.at("element_order").get<uint64_t>();
    t.classes_.push_back(std::move(cc));
  }
  for (const auto& row : j.at("characters")) {
    std::vector<std::complex<double>> r;
    for (const auto& v : row) {
      if (v.is_number()) {
        r.push_back({v.get<double>(), 0.0});
      } else {
        r.push_back({v.value("re", 0.0), v.value("im", 0.0)});
      }
    }
    t.chars_.push_back(std::move(r));
  }
  t.validate();
  return t;
}

void CharacterTable::validate() const {
  const size_t k = classes_.size();
  if (chars_.size() != k)
    throw error("character table " + group_ + ": expected " + std::to_string(k) +
                " irreducibles for " + std::to_string(k) + " classes");
  for (const auto& row : chars_)
    if (row.size() != k)
      throw error("character table " + group_ + ": ragged character row");
  if (classes_.empty() || classes_[0].size != 1 || classes_[0].element_order != 1)
    throw error("character table " + group_ + ": first class must be the identity");
  uint64_t total = 0;
  for (const auto& c : classes_) total += c.size;
  if (total != order_)
    throw error("character table " + group_ + ": class sizes sum to " +
                std::to_string(total) + ", group order is " +
                std::to_string(order_));
  // degrees are integers with sum of squares equal to the group order
  uint64_t degsq = 0;
  for (const auto& row : chars_) {
    double d = row[0].real();
    if (std::abs(row[0].imag()) > 1e-9 || std::abs(d - std::round(d)) > 1e-9 ||
        d < 1)
      throw error("character table " + group_ + ": non-integral degree");
    uint64_t dd = static_cast<uint64_t>(std::llround(d));
    degsq += dd * dd;
  }
  if (degsq != order_)
    throw error("character table " + group_ +
                ": degrees violate sum-of-squares identity");
  // row orthogonality within 1e-6 * |G|
  const double tol = 1e-6 * static_cast<double>(order_);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      std::complex<double> s{0, 0};
      for (size_t c = 0; c < k; ++c)
        s += static_cast<double>(classes_[c].size) * chars_[i][c] *
             std::conj(chars_[j][c]);
      double want = i == j ? static_cast<double>(order_) : 0.0;
      if (std::abs(s.real() - want) > tol || std::abs(s.imag()) > tol)
        throw error("character table " + group_ + ": row orthogonality fails at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  // column orthogonality, secondary validation
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a; b < k; ++b) {
      std::complex<double> s{0, 0};
      for (size_t i = 0; i < k; ++i) s += chars_[i][a] * std::conj(chars_[i][b]);
      double want = a == b ? static_cast<double>(order_) /
                                 static_cast<double>(classes_[a].size)
                           : 0.0;
      if (std::abs(s.real() - want) > tol || std::abs(s.imag()) > tol)
        throw error("character table " + group_ +
                    ": column orthogonality fails at (" + classes_[a].label +
                    "," + classes_[b].label + ")");
    }
}

int CharacterTable::class_index(const std::string& label) const {
  for (size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return static_cast<int>(i);
  throw error("character table " + group_ + ": no class labelled '" + label + "'");
}

uint64_t CharacterTable::frobenius_count(int a, int b, int c,
                                         double* residual) const {
  const size_t k = classes_.size();
  if (a < 0 || b < 0 || c < 0 || a >= static_cast<int>(k) ||
      b >= static_cast<int>(k) || c >= static_cast<int>(k))
    throw error("frobenius_count: class index out of range");
  std::complex<double> sum{0, 0};
  for (size_t i = 0; i < k; ++i)
    sum += chars_[i][a] * chars_[i][b] * chars_[i][c] / chars_[i][0].real();
  double coef = static_cast<double>(classes_[a].size) *
                static_cast<double>(classes_[b].size) / static_cast<double>(order_) *
                static_cast<double>(classes_[c].size);
  double value = coef * sum.real();
  double rounded = std::round(value);
  double res = std::max(std::abs(value - rounded),
                        std::abs(coef * sum.imag()));
  if (residual) *residual = res;
  if (res > 1e-3)
    throw error("frobenius_count: rounding residual " + std::to_string(res) +
                " too large (unstable or corrupt table)");
  if (rounded < 0) throw error("frobenius_count: negative count (corrupt table)");
  return static_cast<uint64_t>(rounded);
}

uint64_t CharacterTable::frobenius_count(const std::string& a,
                                         const std::string& b,
                                         const std::string& c,
                                         double* residual) const {
  return frobenius_count(class_index(a), class_index(b), class_index(c),
                         residual);
}

uint64_t brute_force_count(const PermGroup& g, const std::vector<int>& class_a,
                           const std::vector<int>& class_b,
                           const std::vector<int>& class_c,
                           const SearchLimits& lim) {
  if (static_cast<uint64_t>(class_a.size()) * class_b.size() >
      lim.class_pair_products)
    throw error("brute_force_count: |A|*|B| exceeds bound");
  const auto& elems = g.elements(lim);
  std::vector<char> in_c(elems.size(), 0);
  for (int i : class_c) in_c[i] = 1;
  uint64_t count = 0;
  for (int ia : class_a) {
    const Perm& x = elems[ia];
    for (int ib : class_b) {
      Perm prod_inv = compose(elems[ib].inverse(), x.inverse());
      int idx = g.element_index(prod_inv);
      if (idx >= 0 && in_c[idx]) ++count;
    }
  }
  return count;
}

std::vector<std::vector<std::vector<uint64_t>>> brute_force_all_triples(
    const PermGroup& g, const SearchLimits& lim) {
  const auto& elems = g.elements(lim);
  const auto& classes = g.conjugacy_classes(lim);
  if (static_cast<uint64_t>(elems.size()) * elems.size() > lim.class_pair_products)
    throw error("brute_force_all_triples: |G|^2 exceeds bound");
  std::vector<int> class_of(elems.size(), -1);
  for (size_t ci = 0; ci < classes.size(); ++ci)
    for (int e : classes[ci].members) class_of[e] = static_cast<int>(ci);
  const size_t k = classes.size();
  std::vector<std::vector<std::vector<uint64_t>>> out(
      k, std::vector<std::vector<uint64_t>>(k, std::vector<uint64_t>(k, 0)));
  for (size_t x = 0; x < elems.size(); ++x) {
    for (size_t y = 0; y < elems.size(); ++y) {
      Perm prod_inv = compose(elems[y].inverse(), elems[x].inverse());
      int z = g.element_index(prod_inv);
      ++out[class_of[x]][class_of[y]][class_of[z]];
    }
  }
  return out;
}

std::optional<std::vector<int>> match_classes_to_group(const CharacterTable& tab,
                                                       const PermGroup& g) {
  if (tab.group_order() != g.order()) return std::nullopt;
  const auto& gclasses = g.conjugacy_classes();
  const auto& tclasses = tab.classes();
  if (gclasses.size() != tclasses.size()) return std::nullopt;

  // bucket by (element order, class size); bijections only permute buckets
  std::vector<std::vector<int>> candidates(tclasses.size());
  for (size_t t = 0; t < tclasses.size(); ++t)
    for (size_t c = 0; c < gclasses.size(); ++c)
      if (tclasses[t].element_order == gclasses[c].element_order &&
          tclasses[t].size == gclasses[c].size())
        candidates[t].push_back(static_cast<int>(c));

  auto grid = brute_force_all_triples(g);
  std::vector<int> assign(tclasses.size(), -1);
  std::vector<char> used(gclasses.size(), 0);

  // check only triples whose assignment is already complete
  auto consistent = [&](size_t upto) {
    for (size_t a = 0; a <= upto; ++a)
      for (size_t b = 0; b <= upto; ++b)
        for (size_t c = 0; c <= upto; ++c) {
          if (assign[a] < 0 || assign[b] < 0 || assign[c] < 0) continue;
          uint64_t want = grid[assign[a]][assign[b]][assign[c]];
          if (tab.frobenius_count(static_cast<int>(a), static_cast<int>(b),
                                  static_cast<int>(c)) != want)
            return false;
        }
    return true;
  };

  // backtracking over the (tiny) bucket permutations
  size_t t = 0;
  std::vector<size_t> pick(tclasses.size(), 0);
  while (true) {
    if (t == tclasses.size()) return assign;
    bool advanced = false;
    for (size_t& p = pick[t]; p < candidates[t].size(); ++p) {
      int c = candidates[t][p];
      if (used[c]) continue;
      assign[t] = c;
      used[c] = 1;
      if (consistent(t)) {
        ++t;
        if (t < tclasses.size()) pick[t] = 0;
        advanced = true;
        break;
      }
      used[c] = 0;
      assign[t] = -1;
    }
    if (advanced) continue;
    if (t == 0) return std::nullopt;
    pick[t] = 0;
    --t;
    used[assign[t]] = 0;
    assign[t] = -1;
    ++pick[t];
  }
}

}  // namespace etm
