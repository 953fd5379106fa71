#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "spoverma/algebra.hpp"
#include "spoverma/tableaux.hpp"

namespace spoverma {

/*
 * Exponents of the monomial f1^b4 f2^b3 f1^b2 f2^b1 applied to the
 * highest weight vector (rightmost factor acts first). Validity with
 * respect to a shape is a predicate, not a structural invariant.
 */
struct BVector {
  int b1 = 0;
  int b2 = 0;
  int b3 = 0;
  int b4 = 0;

  friend bool operator==(const BVector&, const BVector&) = default;
  friend auto operator<=>(const BVector&, const BVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const BVector& b);

// The inequality system: b1 <= 2*m2, b2 <= m1 + b1, b3 <= min(b2+m1, 2*b2),
// b4 <= m1 and 2*b4 <= b3 (integer form of b4 <= min(m1, b3/2)).
bool satisfies_inequalities(const BVector& b, const Shape& s);

// All valid exponent vectors in lexicographic (b1,b2,b3,b4) order.
std::vector<BVector> enumerate_b(const Shape& s);

/*
 * The tableau-to-exponent map: b1 counts second-row entries >= -2 twice
 * plus second-row 0s, b2 counts first-row entries > 1 plus second-row
 * entries > -2, b3 counts first-row entries >= -2 twice plus first-row
 * 0s, b4 counts first-row entries > -2. Rejects non-KN input.
 */
BVector psi(const Tableau& t);

// The unique KN preimage of a valid b, found by search over the shape's
// KN tableaux. Zero or multiple preimages raise internal_error: either
// the KN predicate reading is wrong or b is invalid.
Tableau tableau_of_b(const BVector& b, const Shape& s);

// Closed-form weight (m1+m2-b2-b4, m2-b1+b2-b3+b4); total in b.
Weight verma_weight(const BVector& b, const Shape& s);

// [b1,b2,b3,b4]
std::string to_json(const BVector& b);
BVector bvector_from_json(std::string_view text);

}  // namespace spoverma
