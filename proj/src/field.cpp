#include "etm/field.hpp"

#include <algorithm>

namespace etm {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// dense polynomials over F_p, poly[i] = coefficient of x^i
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int da = static_cast<int>(a.size()) - 1;
    int lead = a[da] % p;
    if (lead) {
      for (int i = 0; i <= dm; ++i) {
        int j = da - dm + i;
        a[j] = ((a[j] - lead * m[i]) % p + p * p) % p;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

bool divides(const Poly& d, Poly a, int p) {
  return poly_mod(std::move(a), d, p).empty();
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
  if (!is_prime(static_cast<uint64_t>(p)))
    throw error("finite field: characteristic " + std::to_string(p) +
                " is not prime");
  if (e < 1 || e > 20) throw error("finite field: extension degree out of range");
  uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= static_cast<uint64_t>(p);
    if (q > (1u << 20)) throw error("finite field: size exceeds 2^20");
  }
  q_ = static_cast<uint32_t>(q);
  find_modulus();
  q1_factors_ = prime_factors(q_ - 1);
  find_primitive_root();
}

void Field::find_modulus() {
  if (e_ == 1) {
    modulus_ = {0, 1};  // x, unused
    return;
  }
  // candidates ordered by the integer encoding of (c_0, ..., c_{e-1})
  for (uint32_t code = 0; code < q_; ++code) {
    Poly f(e_ + 1, 0);
    f[e_] = 1;
    uint32_t c = code;
    for (int i = 0; i < e_; ++i) {
      f[i] = static_cast<int>(c % p_);
      c /= p_;
    }
    // trial division by every monic polynomial of degree 1..e/2
    bool irreducible = true;
    for (int dd = 1; irreducible && 2 * dd <= e_; ++dd) {
      uint64_t count = 1;
      for (int i = 0; i < dd; ++i) count *= p_;
      for (uint64_t dc = 0; dc < count; ++dc) {
        Poly d(dd + 1, 0);
        d[dd] = 1;
        uint64_t t = dc;
        for (int i = 0; i < dd; ++i) {
          d[i] = static_cast<int>(t % p_);
          t /= p_;
        }
        if (divides(d, f, p_)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw error("finite field: no irreducible modulus found (internal error)");
}

Field::Elt Field::from_int(int64_t v) const {
  int64_t r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

Field::Elt Field::add(Elt a, Elt b) const {
  Elt out = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    int da = static_cast<int>(a % p_), db = static_cast<int>(b % p_);
    out += static_cast<Elt>((da + db) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

Field::Elt Field::neg(Elt a) const {
  Elt out = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    int da = static_cast<int>(a % p_);
    out += static_cast<Elt>((p_ - da) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

Field::Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Field::Elt Field::mul(Elt a, Elt b) const {
  if (e_ == 1) return static_cast<Elt>((uint64_t(a) * b) % p_);
  std::vector<int> da(e_), db(e_);
  for (int i = 0; i < e_; ++i) {
    da[i] = static_cast<int>(a % p_);
    a /= p_;
    db[i] = static_cast<int>(b % p_);
    b /= p_;
  }
  std::vector<int> prod(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // reduce modulo the modulus polynomial
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    int lead = prod[d];
    if (!lead) continue;
    prod[d] = 0;
    for (int i = 0; i < e_; ++i)
      prod[d - e_ + i] = ((prod[d - e_ + i] - lead * modulus_[i]) % p_ + p_ * p_) % p_;
  }
  Elt out = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    out += static_cast<Elt>(prod[i]) * mult;
    mult *= p_;
  }
  return out;
}

Field::Elt Field::pow(Elt a, uint64_t n) const {
  Elt r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Field::Elt Field::inv(Elt a) const {
  if (a == 0) throw error("finite field: inverse of zero");
  return pow(a, q_ - 2);
}

uint64_t Field::multiplicative_order(Elt a) const {
  if (a == 0) throw error("finite field: order of zero");
  uint64_t ord = q_ - 1;
  for (uint64_t f : q1_factors_)
    while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
  return ord;
}

void Field::find_primitive_root() {
  for (Elt a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) {
      primitive_root_ = a;
      return;
    }
  }
  throw error("finite field: no primitive root found (internal error)");
}

bool primitive_root_self_inverse_conjugate(uint32_t q) {
  auto fs = prime_factors(q);
  if (fs.size() != 1) throw error("not a prime power: " + std::to_string(q));
  int p = static_cast<int>(fs[0]);
  int e = 0;
  uint32_t t = q;
  while (t > 1) {
    t /= p;
    ++e;
  }
  Field F(p, e);
  Field::Elt lam = F.primitive_root();
  Field::Elt lam_inv = F.inv(lam);
  Field::Elt g = lam;
  for (int f = 0; f < e; ++f) {
    if (g == lam_inv) return true;
    g = F.frobenius(g);
  }
  return false;
}

}  // namespace etm
