#include "spoverma/verma.hpp"

#include <algorithm>
#include <optional>

#include <json.hpp>

namespace spoverma {

std::ostream& operator<<(std::ostream& os, const BVector& b) {
  return os << "(" << b.b1 << "," << b.b2 << "," << b.b3 << "," << b.b4 << ")";
}

bool satisfies_inequalities(const BVector& b, const Shape& s) {
  const int m1 = s.m1();
  const int m2 = s.m2();
  if (b.b1 < 0 || b.b2 < 0 || b.b3 < 0 || b.b4 < 0) return false;
  if (b.b1 > 2 * m2) return false;
  if (b.b2 > m1 + b.b1) return false;
  if (b.b3 > std::min(b.b2 + m1, 2 * b.b2)) return false;
  // b4 <= min(m1, b3/2) without rounding: b4 <= m1 and 2*b4 <= b3
  if (b.b4 > m1 || 2 * b.b4 > b.b3) return false;
  return true;
}

std::vector<BVector> enumerate_b(const Shape& s) {
  const int m1 = s.m1();
  const int m2 = s.m2();
  std::vector<BVector> out;
  for (int b1 = 0; b1 <= 2 * m2; ++b1)
    for (int b2 = 0; b2 <= m1 + b1; ++b2)
      for (int b3 = 0; b3 <= std::min(b2 + m1, 2 * b2); ++b3)
        for (int b4 = 0; b4 <= std::min(m1, b3 / 2); ++b4)
          out.push_back({b1, b2, b3, b4});
  return out;
}

BVector psi(const Tableau& t) {
  if (!is_kn(t)) throw std::invalid_argument("psi: tableau is not a KN tableau");
  int r2_geq_2bar = 0, r2_zero = 0, r2_gt_2bar = 0;
  for (Letter x : t.row2()) {
    if (x >= Letter::two_bar) ++r2_geq_2bar;
    if (x == Letter::zero) ++r2_zero;
    if (x > Letter::two_bar) ++r2_gt_2bar;
  }
  int r1_gt_one = 0, r1_geq_2bar = 0, r1_zero = 0, r1_gt_2bar = 0;
  for (Letter x : t.row1()) {
    if (x > Letter::one) ++r1_gt_one;
    if (x >= Letter::two_bar) ++r1_geq_2bar;
    if (x == Letter::zero) ++r1_zero;
    if (x > Letter::two_bar) ++r1_gt_2bar;
  }
  return {2 * r2_geq_2bar + r2_zero, r1_gt_one + r2_gt_2bar,
          2 * r1_geq_2bar + r1_zero, r1_gt_2bar};
}

Tableau tableau_of_b(const BVector& b, const Shape& s) {
  if (!satisfies_inequalities(b, s))
    throw std::invalid_argument("tableau_of_b: b violates the inequality system");
  std::optional<Tableau> found;
  int hits = 0;
  for_each_kn(s, [&](const Tableau& t) {
    if (psi(t) == b) {
      ++hits;
      if (!found) found = t;
    }
  });
  if (hits != 1)
    throw internal_error("tableau_of_b: expected exactly one preimage, found " +
                         std::to_string(hits));
  return *found;
}

Weight verma_weight(const BVector& b, const Shape& s) {
  const int m1 = s.m1();
  const int m2 = s.m2();
  return {m1 + m2 - b.b2 - b.b4, m2 - b.b1 + b.b2 - b.b3 + b.b4};
}

std::string to_json(const BVector& b) {
  return nlohmann::json{b.b1, b.b2, b.b3, b.b4}.dump();
}

BVector bvector_from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("bvector_from_json: expected [b1,b2,b3,b4]");
  return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>()};
}

}  // namespace spoverma
