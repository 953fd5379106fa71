#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spoverma/algebra.hpp"
#include "spoverma/tableaux.hpp"
#include "spoverma/verma.hpp"

namespace spoverma {

/*
 * A canonical factor of the super exterior square: lo < hi, or
 * lo = hi = 0 (the symmetric square of the odd line). Comparison is
 * (lo, hi) lexicographic, i.e. column top-to-bottom.
 */
struct WedgePair {
  Letter lo;
  Letter hi;

  friend bool operator==(const WedgePair&, const WedgePair&) = default;
  friend auto operator<=>(const WedgePair&, const WedgePair&) = default;
};

bool is_canonical_pair(const WedgePair& p);
constexpr int pair_parity(const WedgePair& p) {
  return (letter_parity(p.lo) + letter_parity(p.hi)) % 2;
}

/*
 * Canonical tensor basis element of W = V^{m1} (x) (Wedge^2 V)^{m2}:
 * singles[0] is the first tensor factor (the rightmost one-box column of
 * the corresponding tableau), pairs[0] the rightmost two-box column.
 * The default lexicographic comparison equals the tableau total order
 * transported through u_of_tableau.
 */
struct BasisIndex {
  std::vector<Letter> singles;
  std::vector<WedgePair> pairs;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

int basis_index_parity(const BasisIndex& idx);
Weight basis_index_weight(const BasisIndex& idx);

// Normalizes a wedge of two letters using x^y = -(-1)^{|x||y|} y^x:
// ascending pairs pass through, descending ones flip with the sign,
// equal letters vanish except 0^0. Returns nullopt for the zero result.
std::optional<std::pair<int, WedgePair>> canonical_wedge(Letter a, Letter c);

// The tensor basis element of a column-strict tableau: one-box columns
// right-to-left, then two-box columns right-to-left. Rejects non-CST input.
BasisIndex u_of_tableau(const Tableau& y);

// Inverse of u_of_tableau (the shape is implied by the factor counts).
Tableau tableau_of_index(const BasisIndex& idx);

/*
 * An element of W with exact integer coefficients, stored as terms
 * sorted ascending in the basis order with no zero coefficients.
 */
class SparseVector {
 public:
  using Term = std::pair<BasisIndex, Int>;

  explicit SparseVector(Shape shape);  // the zero vector
  SparseVector(Shape shape, std::vector<Term> terms);

  const Shape& shape() const { return shape_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Shape shape_;
  std::vector<Term> terms_;
};

SparseVector operator+(const SparseVector& a, const SparseVector& b);
SparseVector operator*(const Int& c, const SparseVector& v);

// v_lambda: coefficient 1 on the index of the highest weight filling.
SparseVector highest_vector(const Shape& s);

/*
 * Super-derivation action across all tensor factors. An odd generator
 * picks up (-1)^(sum of parities of the factors to the left); inside a
 * wedge x^y it acts as g(x)^y + (-1)^{|g||x|} x^g(y) followed by
 * canonicalization. H1/H2 act diagonally by the index weight.
 */
SparseVector apply_generator(Generator g, const SparseVector& v);

// f1^b4 f2^b3 f1^b2 f2^b1 v_lambda by iterated application. Defined for
// every b; invalid exponents may produce the zero vector.
SparseVector verma_vector(const BVector& b, const Shape& s);

// Visits every valid b with its expanded vector, in lexicographic b
// order, sharing common application prefixes across the enumeration.
void for_each_verma_vector(
    const Shape& s,
    const std::function<void(const BVector&, const SparseVector&)>& fn);

/*
 * Closed form of f2^b1 v_lambda for b1 <= 2*m2: with k = floor(b1/2),
 * k! times the sum over k-subsets of pair positions replaced by (1,-2),
 * and for odd b1 additionally one position replaced by (1,0).
 */
SparseVector f2_power_closed_form(const Shape& s, int b1);

// The maximal term of the support under the tableau order, with its
// coefficient; nullopt for the zero vector.
std::optional<std::pair<Int, BasisIndex>> leading_term(const SparseVector& v);

// floor(b1/2)! * b2! * floor(b3/2)! * b4!
Int verma_leading_coefficient(const BVector& b);

Int factorial(unsigned n);

// Rank over the rationals, computed by integer-preserving elimination
// (cross-multiplication with exact content division). All vectors must
// share one shape.
std::size_t rank(const std::vector<SparseVector>& vectors);

// Dimension of the smallest subspace containing v_lambda and closed
// under E1, E2, F1, F2: breadth-first generator closure with exact
// rank-growth tracking.
std::size_t submodule_dimension(const Shape& s);

// 5^m1 * 11^m2, the dimension of W.
Int ambient_dimension(const Shape& s);

// {"shape":[l1,l2],"terms":[{"coeff":"<decimal>","singles":[...],
//  "pairs":[[j,k],...]}]} with terms sorted descending (leading first).
std::string to_json(const SparseVector& v);
SparseVector sparse_vector_from_json(std::string_view text);

}  // namespace spoverma
