#pragma once

#include <complex>
#include <optional>

#include "etm/permgroup.hpp"

namespace etm {

struct CharClass {
  std::string label;       // ATLAS style: element order + letter
  uint64_t size = 0;
  uint64_t element_order = 0;
};

// A character table read from fixture data. Irrational values are carried as
// high-precision decimal literals in the file; the integrality of every
// structure-constant count is the correctness gate for that choice.
class CharacterTable {
public:
  static CharacterTable load(const std::string& path);

  const std::string& group_name() const { return group_; }
  uint64_t group_order() const { return order_; }
  const std::vector<CharClass>& classes() const { return classes_; }
  int class_index(const std::string& label) const;
  const std::vector<std::vector<std::complex<double>>>& characters() const {
    return chars_;
  }

  // Frobenius count of solutions abc = 1 with a, b, c in the given classes.
  // The rounding residual must stay below 1e-3.
  uint64_t frobenius_count(int a, int b, int c, double* residual = nullptr) const;
  uint64_t frobenius_count(const std::string& a, const std::string& b,
                           const std::string& c, double* residual = nullptr) const;

private:
  void validate() const;

  std::string group_;
  uint64_t order_ = 0;
  std::vector<CharClass> classes_;
  std::vector<std::vector<std::complex<double>>> chars_;
};

// Exact count of (x, y) with x in A, y in B and (xy)^-1 in C, by iteration
// over the two classes with a membership map for the third. Independent
// oracle for the character-theoretic count.
uint64_t brute_force_count(const PermGroup& g, const std::vector<int>& class_a,
                           const std::vector<int>& class_b,
                           const std::vector<int>& class_c,
                           const SearchLimits& lim = {});

// All structure constants of a concrete group at once:
// result[a][b][c] = #{(x,y) : x in class a, y in class b, (xy)^-1 in class c}.
std::vector<std::vector<std::vector<uint64_t>>> brute_force_all_triples(
    const PermGroup& g, const SearchLimits& lim = {});

// A bijection table-class -> concrete-class index, respecting order and size,
// under which every Frobenius count equals the brute-force count. Character
// tables determine classes only up to table automorphism, so the bijection is
// existential; the full grid match is what the caller asserts.
std::optional<std::vector<int>> match_classes_to_group(const CharacterTable& tab,
                                                       const PermGroup& g);

}  // namespace etm
