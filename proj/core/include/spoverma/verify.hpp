#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spoverma/algebra.hpp"

namespace spoverma {

inline constexpr std::uint64_t default_closure_budget = 200000;

struct SuiteFailure {
  std::string check;  // check id
  std::string input;  // offending input, serialized
};

/*
 * Outcome of one verification suite on one shape. Deterministic except
 * for wall_time_ms. A suite passed iff failures is empty; skipped marks
 * a closure run whose ambient dimension exceeded the budget.
 */
struct SuiteReport {
  std::string suite;
  Shape shape{0, 0};
  std::size_t checks_run = 0;
  std::vector<SuiteFailure> failures;
  std::int64_t wall_time_ms = 0;
  bool skipped = false;

  bool passed() const { return failures.empty(); }
};

std::string to_json(const SuiteReport& r);

// Generator relations: pairwise brackets stay in the spo(4|1) pattern,
// [E1,F1] = H1-H2 and {E2,F2} = H2, H-brackets reproduce the root values
// of F1 and F2, the letter action table matches matrix-vector products,
// and letter weights match the (H1,H2) eigenvalues. The subset overload
// runs only checks whose inputs all lie in the subset.
SuiteReport suite_algebra();
SuiteReport suite_algebra(std::span<const Generator> subset);

// psi is a bijection KN(s) <-> B(s): valid images, injectivity,
// surjectivity, equal counts, and both round trips.
SuiteReport suite_bijection(const Shape& s);

// For every valid b: the closed-form weight equals the weight of the
// paired tableau and of every index in the expanded vector's support.
SuiteReport suite_weights(const Shape& s);

// For every valid b: the expansion's leading index is u(T(b)) and its
// coefficient is floor(b1/2)!*b2!*floor(b3/2)!*b4!, positive.
SuiteReport suite_leading(const Shape& s);

// For every b1 <= 2*m2 the closed form equals iterated application; the
// value at b1 = 2*m2+1 is computed and recorded without being asserted.
SuiteReport suite_lemma(const Shape& s);

// rank of the Verma family equals |B(s)|.
SuiteReport suite_independence(const Shape& s);

// rank(Verma family) = |B(s)| = |KN(s)| = submodule_dimension(s).
// Shapes whose ambient dimension exceeds the budget are skipped, never
// silently passed.
SuiteReport suite_closure(const Shape& s,
                          std::uint64_t budget = default_closure_budget);

}  // namespace spoverma
