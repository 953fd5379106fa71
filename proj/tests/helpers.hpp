#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "spoverma/algebra.hpp"
#include "spoverma/tableaux.hpp"

namespace spoverma::test {

// Parses a space-separated row like "1 0 -1" into letters.
inline std::vector<Letter> row(const std::string& cells) {
  std::istringstream is(cells);
  std::vector<Letter> out;
  int v;
  while (is >> v) out.push_back(letter_from_int(v));
  return out;
}

// Builds a tableau from its two rows; the shape is implied.
inline Tableau tab(const std::string& r1, const std::string& r2 = "") {
  auto a = row(r1);
  auto b = row(r2);
  return Tableau(Shape(static_cast<int>(a.size()), static_cast<int>(b.size())), a, b);
}

// Naive 5x5 product, kept test-local as the oracle for bracket checks.
inline SuperMatrix mat_mul(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

inline SuperMatrix unit(int i, int j) {  // 1-based matrix unit E_ij
  SuperMatrix m;
  m.at(i - 1, j - 1) = 1;
  return m;
}

}  // namespace spoverma::test
