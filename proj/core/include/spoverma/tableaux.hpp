#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "spoverma/algebra.hpp"

namespace spoverma {

/*
 * A two-row filling of a shape with letters. Row lengths always match
 * the shape; cell (i,j) is admissible iff j is within row i.
 */
class Tableau {
 public:
  Tableau(Shape shape, std::vector<Letter> row1, std::vector<Letter> row2);

  const Shape& shape() const { return shape_; }
  const std::vector<Letter>& row1() const { return row1_; }
  const std::vector<Letter>& row2() const { return row2_; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Shape shape_;
  std::vector<Letter> row1_;
  std::vector<Letter> row2_;
};

// Column-strict: every height-2 column increases strictly, except that a
// (0,0) column is allowed. Rows are unconstrained.
bool is_cst(const Tableau& t);

// Kashiwara-Nakashima: rows weakly increase with at most one 0 per row,
// columns as in is_cst, no column contains both 1 and -1, and the two
// adjacent-column patterns (2 resp. 0 in the first row of column j, -2 in
// the second row of column j+1) are forbidden.
bool is_kn(const Tableau& t);

// The minimum filling: all 1s in the first row over all 2s in the second.
Tableau highest_weight_filling(const Shape& s);

// Enumeration in ascending order of compare_tableaux. The callback forms
// visit without materializing the full list.
void for_each_cst(const Shape& s, const std::function<void(const Tableau&)>& fn);
void for_each_kn(const Shape& s, const std::function<void(const Tableau&)>& fn);
std::vector<Tableau> enumerate_cst(const Shape& s);
std::vector<Tableau> enumerate_kn(const Shape& s);
std::uint64_t count_cst(const Shape& s);
std::uint64_t count_kn(const Shape& s);

/*
 * Total order on same-shape tableaux: scan cells rightmost column first,
 * top-to-bottom within a column; the first differing cell decides by
 * letter order. Shape mismatch is rejected.
 */
std::strong_ordering compare_tableaux(const Tableau& a, const Tableau& b);

// Sum of letter weights over all cells.
Weight tableau_weight(const Tableau& t);

// {"shape":[l1,l2],"row1":[...],"row2":[...]} with letters as 1,2,0,-2,-1.
std::string to_json(const Tableau& t);
Tableau tableau_from_json(std::string_view text);

// One row per line, cells right-padded to width 2 so bars align.
std::string render_ascii(const Tableau& t);

}  // namespace spoverma
