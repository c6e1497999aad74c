#include "etm/perm.hpp"

#include <sstream>

namespace etm {

uint64_t Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  uint64_t ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

int Perm::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return -1;
}

int Perm::count_fixed_points() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] == i) ++c;
  return c;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = 1;
      continue;
    }
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) os << ',';
      os << c[k] + 1;
    }
    os << ')';
  }
  return os.str();
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw error("cycle notation: expected '('");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      size_t start = i;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start) throw error("cycle notation: expected point number");
      int pt = std::stoi(text.substr(start, i - start)) - 1;
      if (pt < 0 || pt >= degree)
        throw error("cycle notation: point out of range for degree " +
                    std::to_string(degree));
      if (used[pt]) throw error("cycle notation: point repeated");
      used[pt] = 1;
      cyc.push_back(pt);
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

}  // namespace etm
