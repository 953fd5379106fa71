#include "spoverma/algebra.hpp"

#include <sstream>

namespace spoverma {

int letter_to_int(Letter x) {
  switch (x) {
    case Letter::one: return 1;
    case Letter::two: return 2;
    case Letter::zero: return 0;
    case Letter::two_bar: return -2;
    case Letter::one_bar: return -1;
  }
  throw std::invalid_argument("letter_to_int: bad letter");
}

Letter letter_from_int(int v) {
  switch (v) {
    case 1: return Letter::one;
    case 2: return Letter::two;
    case 0: return Letter::zero;
    case -2: return Letter::two_bar;
    case -1: return Letter::one_bar;
    default: throw std::invalid_argument("letter_from_int: expected 1, 2, 0, -2 or -1");
  }
}

std::string letter_text(Letter x) { return std::to_string(letter_to_int(x)); }

Weight letter_weight(Letter x) {
  switch (x) {
    case Letter::one: return {1, 0};
    case Letter::two: return {0, 1};
    case Letter::zero: return {0, 0};
    case Letter::two_bar: return {0, -1};
    case Letter::one_bar: return {-1, 0};
  }
  throw std::invalid_argument("letter_weight: bad letter");
}

std::ostream& operator<<(std::ostream& os, Weight w) {
  return os << "(" << w.c1 << "," << w.c2 << ")";
}

Shape::Shape(int l1, int l2) : l1_(l1), l2_(l2) {
  if (l2 < 0 || l1 < l2) throw std::invalid_argument("Shape: need l1 >= l2 >= 0");
}

std::ostream& operator<<(std::ostream& os, const Shape& s) {
  return os << "(" << s.l1() << "," << s.l2() << ")";
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::E1: return "E1";
    case Generator::E2: return "E2";
    case Generator::F1: return "F1";
    case Generator::F2: return "F2";
    case Generator::H1: return "H1";
    case Generator::H2: return "H2";
  }
  throw std::invalid_argument("generator_name: bad generator");
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

SuperMatrix operator*(const Int& c, const SuperMatrix& a) {
  SuperMatrix r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.at(i, j) = c * a.at(i, j);
  return r;
}

namespace {

// Index parity in the 5x5 realization: 0..3 even, 4 odd.
int slot_parity(int i) { return i == 4 ? 1 : 0; }

SuperMatrix multiply(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix r;
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < 5; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

}  // namespace

std::optional<int> homogeneous_parity(const SuperMatrix& m) {
  int p = -1;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (m.at(i, j) == 0) continue;
      int q = (slot_parity(i) + slot_parity(j)) % 2;
      if (p == -1)
        p = q;
      else if (p != q)
        return std::nullopt;
    }
  return p == -1 ? 0 : p;
}

SuperMatrix generator_matrix(Generator g) {
  SuperMatrix m;
  switch (g) {
    case Generator::F1:  // E21 - E34
      m.at(1, 0) = 1;
      m.at(2, 3) = -1;
      break;
    case Generator::F2:  // E52 - E45
      m.at(4, 1) = 1;
      m.at(3, 4) = -1;
      break;
    case Generator::E1:  // E12 - E43
      m.at(0, 1) = 1;
      m.at(3, 2) = -1;
      break;
    case Generator::E2:  // E25 + E54
      m.at(1, 4) = 1;
      m.at(4, 3) = 1;
      break;
    case Generator::H1:  // E11 - E33
      m.at(0, 0) = 1;
      m.at(2, 2) = -1;
      break;
    case Generator::H2:  // E22 - E44
      m.at(1, 1) = 1;
      m.at(3, 3) = -1;
      break;
  }
  return m;
}

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b) {
  auto pa = homogeneous_parity(a);
  auto pb = homogeneous_parity(b);
  if (!pa || !pb)
    throw std::invalid_argument("supercommutator: inputs must be parity-homogeneous");
  SuperMatrix ab = multiply(a, b);
  SuperMatrix ba = multiply(b, a);
  return (*pa == 1 && *pb == 1) ? ab + ba : ab - ba;
}

bool is_spo_matrix(const SuperMatrix& m) {
  // b and c blocks symmetric
  if (m.at(0, 3) != m.at(1, 2)) return false;
  if (m.at(3, 0) != m.at(2, 1)) return false;
  // lower-right block equals -a^T
  if (m.at(2, 2) != -m.at(0, 0)) return false;
  if (m.at(2, 3) != -m.at(1, 0)) return false;
  if (m.at(3, 2) != -m.at(0, 1)) return false;
  if (m.at(3, 3) != -m.at(1, 1)) return false;
  // fifth row (-q1,-q2,p1,p2,0) against fifth column (p1,p2,q1,q2,0)
  if (m.at(4, 0) != -m.at(2, 4)) return false;
  if (m.at(4, 1) != -m.at(3, 4)) return false;
  if (m.at(4, 2) != m.at(0, 4)) return false;
  if (m.at(4, 3) != m.at(1, 4)) return false;
  if (m.at(4, 4) != 0) return false;
  return true;
}

std::optional<std::pair<int, Letter>> act_letter(Generator g, Letter x) {
  using enum Letter;
  switch (g) {
    case Generator::F1:
      if (x == one) return {{1, two}};
      if (x == two_bar) return {{1, one_bar}};
      return std::nullopt;
    case Generator::F2:
      if (x == two) return {{1, zero}};
      if (x == zero) return {{1, two_bar}};
      return std::nullopt;
    case Generator::E1:
      if (x == two) return {{1, one}};
      if (x == one_bar) return {{1, two_bar}};
      return std::nullopt;
    case Generator::E2:
      if (x == zero) return {{1, two}};
      if (x == two_bar) return {{-1, zero}};
      return std::nullopt;
    case Generator::H1:
    case Generator::H2:
      throw std::invalid_argument("act_letter: H1/H2 act diagonally, use letter_weight");
  }
  throw std::invalid_argument("act_letter: bad generator");
}

std::string render_ascii(const SuperMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (j) os << ' ';
      std::string cell = m.at(i, j).get_str();
      for (std::size_t k = cell.size(); k < 2; ++k) os << ' ';
      os << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace spoverma
