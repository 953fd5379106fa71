#pragma once

// Internal fraction-free elimination state shared by the rank, closure
// and verification code. Not installed.

#include <map>
#include <vector>

#include "spoverma/modulespace.hpp"

namespace spoverma::detail {

using Terms = std::vector<SparseVector::Term>;

// a*x + b*y over sorted term lists, exact cancellation included.
Terms axpy(const Int& a, const Terms& x, const Int& b, const Terms& y);

// Divides by the gcd of the coefficients and flips signs so the leading
// (largest-index) coefficient is positive. No-op on the empty list.
void divide_content(Terms& ts);

/*
 * Row basis in sparse echelon form. Pivots are keyed by their leading
 * basis index (the largest of the support, i.e. the tableau order
 * maximum), so elimination always pivots on the rightmost column first.
 * All arithmetic is integer-preserving: cross-multiplication followed by
 * exact content division.
 */
class EchelonBasis {
 public:
  // Reduces v against the stored pivots. If a nonzero remainder is left
  // it becomes a new pivot and a pointer to the stored row is returned;
  // otherwise nullptr (v was in the span).
  const Terms* try_insert(Terms v);

  std::size_t size() const { return rows_.size(); }

 private:
  std::map<BasisIndex, Terms> rows_;
};

}  // namespace spoverma::detail
