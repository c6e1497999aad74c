#pragma once

#include <cstdint>
#include <vector>

#include "etm/perm.hpp"

namespace etm {

// GF(p^e) with elements encoded as integers in [0, p^e): the base-p digits
// are the coordinates w.r.t. the fixed irreducible modulus polynomial
// (lexicographically least monic irreducible, low-degree digits least
// significant — reproducible without external polynomial tables).
class Field {
public:
  using Elt = uint32_t;

  Field(int p, int e);

  int characteristic() const { return p_; }
  int extension_degree() const { return e_; }
  uint32_t size() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(int64_t v) const;  // prime-subfield embedding

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt pow(Elt a, uint64_t n) const;
  Elt frobenius(Elt a) const { return pow(a, p_); }

  Elt primitive_root() const { return primitive_root_; }
  uint64_t multiplicative_order(Elt a) const;

private:
  void find_modulus();
  void find_primitive_root();

  int p_ = 0, e_ = 0;
  uint32_t q_ = 0;
  std::vector<int> modulus_;          // monic, degree e; modulus_[i] = coeff of x^i
  std::vector<uint64_t> q1_factors_;  // distinct primes of q-1
  Elt primitive_root_ = 0;
};

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);  // distinct, ascending

// True iff the designated primitive root is Galois-conjugate to its inverse;
// by the primitive-root lemma this happens exactly when q <= 4.
bool primitive_root_self_inverse_conjugate(uint32_t q);

}  // namespace etm
