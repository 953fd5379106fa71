#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace spoverma {

// Exact scalar used throughout; no floating point anywhere in the library.
using Int = mpz_class;

// Raised when a structural theorem the code relies on fails at runtime,
// as opposed to a caller error (std::invalid_argument).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/*
 * The five-letter alphabet indexing the natural representation of
 * spo(4|1), with total order 1 < 2 < 0 < -2 < -1 ("-2" and "-1" are
 * the barred letters). The underlying value is the rank in this order,
 * so the builtin enum comparison is the letter order.
 */
enum class Letter : std::uint8_t {
  one = 0,
  two = 1,
  zero = 2,
  two_bar = 3,
  one_bar = 4,
};

inline constexpr std::array<Letter, 5> all_letters = {
    Letter::one, Letter::two, Letter::zero, Letter::two_bar, Letter::one_bar};

constexpr int letter_rank(Letter x) { return static_cast<int>(x); }

// Only the letter 0 is odd.
constexpr int letter_parity(Letter x) { return x == Letter::zero ? 1 : 0; }

// Serialized form: 1, 2, 0, -2, -1 (sign marks the bar).
int letter_to_int(Letter x);
Letter letter_from_int(int v);
std::string letter_text(Letter x);

// An integral weight c1*eps1 + c2*eps2.
struct Weight {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  friend Weight operator+(Weight a, Weight b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
  friend Weight operator-(Weight a, Weight b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
  friend Weight operator-(Weight a) { return {-a.c1, -a.c2}; }
  friend bool operator==(Weight, Weight) = default;
};

std::ostream& operator<<(std::ostream& os, Weight w);

// eps-coordinates of a letter: 1 -> (1,0), 2 -> (0,1), 0 -> (0,0),
// -2 -> (0,-1), -1 -> (-1,0).
Weight letter_weight(Letter x);

/*
 * A two-row partition shape (l1 >= l2 >= 0). The highest weight it
 * denotes is (m1+m2, m2) with m1 = l1 - l2, m2 = l2.
 */
class Shape {
 public:
  Shape(int l1, int l2);

  int l1() const { return l1_; }
  int l2() const { return l2_; }
  int m1() const { return l1_ - l2_; }
  int m2() const { return l2_; }
  Weight highest_weight() const { return {l1_, l2_}; }

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  int l1_;
  int l2_;
};

std::ostream& operator<<(std::ostream& os, const Shape& s);

/*
 * The six distinguished generators. E2 and F2 are odd (root +-eps2),
 * the others even.
 */
enum class Generator : std::uint8_t { E1, E2, F1, F2, H1, H2 };

inline constexpr std::array<Generator, 6> all_generators = {
    Generator::E1, Generator::E2, Generator::F1,
    Generator::F2, Generator::H1, Generator::H2};
inline constexpr std::array<Generator, 4> raising_lowering_generators = {
    Generator::E1, Generator::E2, Generator::F1, Generator::F2};

constexpr int generator_parity(Generator g) {
  return (g == Generator::E2 || g == Generator::F2) ? 1 : 0;
}

std::string generator_name(Generator g);

/*
 * A 5x5 matrix over exact integers in the spo(4|1) realization.
 * Row/column indices 0..3 are even, index 4 is odd.
 */
class SuperMatrix {
 public:
  SuperMatrix() = default;  // zero matrix

  Int& at(int i, int j) { return e_[static_cast<std::size_t>(5 * i + j)]; }
  const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(5 * i + j)]; }

  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;
  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator*(const Int& c, const SuperMatrix& a);

 private:
  std::array<Int, 25> e_{};
};

// Parity of a homogeneous matrix (0 for the zero matrix); nullopt if the
// nonzero entries mix parities.
std::optional<int> homogeneous_parity(const SuperMatrix& m);

// The fixed matrices of the six generators: F1 = E21-E34, F2 = E52-E45,
// H1 = E11-E33, H2 = E22-E44, E1 = E12-E43, E2 = E25+E54.
SuperMatrix generator_matrix(Generator g);

// AB - (-1)^{|A||B|} BA for homogeneous A, B; rejects mixed-parity input.
SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b);

// Whether m matches the spo(4|1) block pattern: symmetric b and c blocks,
// lower-right block -a^T, and coupled fifth row/column (p,q-pattern).
bool is_spo_matrix(const SuperMatrix& m);

/*
 * Action of a raising/lowering generator on a letter under the
 * identifications eps_0 = e5, eps_{-2} = -e4, eps_{-1} = e3.
 * Returns nullopt when the image vanishes. H1/H2 are rejected here;
 * use letter_weight for the diagonal action.
 */
std::optional<std::pair<int, Letter>> act_letter(Generator g, Letter x);

std::string render_ascii(const SuperMatrix& m);

}  // namespace spoverma
