#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace etm {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A permutation of {0..n-1} as an image array. All group actions in this
// project act on the right: x.g means img[x], and compose(p,q) is
// "apply p, then q".
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    validate();
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  friend Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
      throw error("compose: degree mismatch (" + std::to_string(p.degree()) +
                  " vs " + std::to_string(q.degree()) + ")");
    Perm r;
    r.img_.resize(p.img_.size());
    for (int i = 0; i < p.degree(); ++i) r.img_[i] = q.img_[p.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  // x^g = g^-1 x g
  Perm conjugate_by(const Perm& g) const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
    return r;
  }

  uint64_t order() const;
  int smallest_moved_point() const;  // -1 for the identity
  int count_fixed_points() const;
  bool is_involution() const {  // order dividing 2
    for (int i = 0; i < degree(); ++i)
      if (img_[img_[i]] != i) return false;
    return true;
  }

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles only
  std::string cycle_string() const;              // 1-based, "(1,2)(3,4)" style

  // Parses 1-based cycle notation; "()" or "" is the identity.
  static Perm from_cycles(const std::string& text, int degree);

private:
  void validate() const {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
      if (x < 0 || x >= degree() || seen[x])
        throw error("permutation image array is not a bijection");
      seen[x] = 1;
    }
  }
  std::vector<int> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    uint64_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace etm
