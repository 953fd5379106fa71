#include "spoverma/tableaux.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace spoverma {

Tableau::Tableau(Shape shape, std::vector<Letter> row1, std::vector<Letter> row2)
    : shape_(shape), row1_(std::move(row1)), row2_(std::move(row2)) {
  if (row1_.size() != static_cast<std::size_t>(shape_.l1()) ||
      row2_.size() != static_cast<std::size_t>(shape_.l2()))
    throw std::invalid_argument("Tableau: row lengths must match the shape");
}

bool is_cst(const Tableau& t) {
  for (int c = 0; c < t.shape().l2(); ++c) {
    Letter a = t.row1()[static_cast<std::size_t>(c)];
    Letter b = t.row2()[static_cast<std::size_t>(c)];
    if (!(a < b || (a == Letter::zero && b == Letter::zero))) return false;
  }
  return true;
}

namespace {

bool row_ok_kn(const std::vector<Letter>& row) {
  int zeros = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == Letter::zero) ++zeros;
    if (i + 1 < row.size() && row[i + 1] < row[i]) return false;
  }
  return zeros <= 1;
}

}  // namespace

bool is_kn(const Tableau& t) {
  if (!is_cst(t)) return false;
  if (!row_ok_kn(t.row1()) || !row_ok_kn(t.row2())) return false;
  for (int c = 0; c < t.shape().l2(); ++c) {
    // no column with both 1 and -1
    if (t.row1()[static_cast<std::size_t>(c)] == Letter::one &&
        t.row2()[static_cast<std::size_t>(c)] == Letter::one_bar)
      return false;
  }
  // forbidden adjacent-column patterns: 2 (resp. 0) in row 1 of column j
  // with -2 in row 2 of column j+1
  for (int c = 0; c + 1 < t.shape().l2(); ++c) {
    Letter a = t.row1()[static_cast<std::size_t>(c)];
    if ((a == Letter::two || a == Letter::zero) &&
        t.row2()[static_cast<std::size_t>(c + 1)] == Letter::two_bar)
      return false;
  }
  return true;
}

Tableau highest_weight_filling(const Shape& s) {
  return Tableau(s,
                 std::vector<Letter>(static_cast<std::size_t>(s.l1()), Letter::one),
                 std::vector<Letter>(static_cast<std::size_t>(s.l2()), Letter::two));
}

namespace {

/*
 * Fills columns right to left, the top cell of a column before the
 * bottom one, choosing letters in ascending order at each cell. That is
 * exactly the scan order of the total order, so tableaux are visited
 * ascending. Constraints are pruned as soon as their cells are fixed.
 */
template <bool Kn, typename OnComplete>
void fill_column(const Shape& s, std::vector<Letter>& r1, std::vector<Letter>& r2,
                 int c, int zeros1, int zeros2, OnComplete&& done) {
  if (c < 0) {
    done();
    return;
  }
  const auto cu = static_cast<std::size_t>(c);
  const bool two_cells = c < s.l2();
  for (Letter a : all_letters) {
    if constexpr (Kn) {
      // row 1 weakly increases to the right; at most one 0 per row
      if (cu + 1 < r1.size() && r1[cu + 1] < a) continue;
      if (a == Letter::zero && zeros1 > 0) continue;
      // adjacent-column patterns against the already fixed column c+1
      if (c + 1 < s.l2() && (a == Letter::two || a == Letter::zero) &&
          r2[cu + 1] == Letter::two_bar)
        continue;
    }
    r1[cu] = a;
    int z1 = zeros1 + (a == Letter::zero ? 1 : 0);
    if (!two_cells) {
      fill_column<Kn>(s, r1, r2, c - 1, z1, zeros2, done);
      continue;
    }
    for (Letter b : all_letters) {
      if (!(a < b || (a == Letter::zero && b == Letter::zero))) continue;
      if constexpr (Kn) {
        if (cu + 1 < r2.size() && r2[cu + 1] < b) continue;
        if (b == Letter::zero && zeros2 > 0) continue;
        if (a == Letter::one && b == Letter::one_bar) continue;
      }
      r2[cu] = b;
      fill_column<Kn>(s, r1, r2, c - 1, z1, zeros2 + (b == Letter::zero ? 1 : 0), done);
    }
  }
}

template <bool Kn, typename OnComplete>
void generate(const Shape& s, OnComplete&& done_with_rows) {
  std::vector<Letter> r1(static_cast<std::size_t>(s.l1()));
  std::vector<Letter> r2(static_cast<std::size_t>(s.l2()));
  fill_column<Kn>(s, r1, r2, s.l1() - 1, 0, 0, [&] { done_with_rows(r1, r2); });
}

}  // namespace

void for_each_cst(const Shape& s, const std::function<void(const Tableau&)>& fn) {
  generate<false>(s, [&](const std::vector<Letter>& r1, const std::vector<Letter>& r2) {
    fn(Tableau(s, r1, r2));
  });
}

void for_each_kn(const Shape& s, const std::function<void(const Tableau&)>& fn) {
  generate<true>(s, [&](const std::vector<Letter>& r1, const std::vector<Letter>& r2) {
    fn(Tableau(s, r1, r2));
  });
}

std::vector<Tableau> enumerate_cst(const Shape& s) {
  std::vector<Tableau> out;
  for_each_cst(s, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> enumerate_kn(const Shape& s) {
  std::vector<Tableau> out;
  for_each_kn(s, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_cst(const Shape& s) {
  std::uint64_t n = 0;
  generate<false>(s, [&](const auto&, const auto&) { ++n; });
  return n;
}

std::uint64_t count_kn(const Shape& s) {
  std::uint64_t n = 0;
  generate<true>(s, [&](const auto&, const auto&) { ++n; });
  return n;
}

std::strong_ordering compare_tableaux(const Tableau& a, const Tableau& b) {
  if (a.shape() != b.shape())
    throw std::invalid_argument("compare_tableaux: shapes differ");
  const Shape& s = a.shape();
  for (int c = s.l1() - 1; c >= 0; --c) {
    const auto cu = static_cast<std::size_t>(c);
    if (auto o = a.row1()[cu] <=> b.row1()[cu]; o != 0) return o;
    if (c < s.l2())
      if (auto o = a.row2()[cu] <=> b.row2()[cu]; o != 0) return o;
  }
  return std::strong_ordering::equal;
}

Weight tableau_weight(const Tableau& t) {
  Weight w;
  for (Letter x : t.row1()) w = w + letter_weight(x);
  for (Letter x : t.row2()) w = w + letter_weight(x);
  return w;
}

std::string to_json(const Tableau& t) {
  nlohmann::ordered_json j;
  j["shape"] = {t.shape().l1(), t.shape().l2()};
  auto row = [](const std::vector<Letter>& r) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (Letter x : r) a.push_back(letter_to_int(x));
    return a;
  };
  j["row1"] = row(t.row1());
  j["row2"] = row(t.row2());
  return j.dump();
}

Tableau tableau_from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  Shape s(j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>());
  auto row = [&](const char* key) {
    std::vector<Letter> r;
    for (const auto& v : j.at(key)) r.push_back(letter_from_int(v.get<int>()));
    return r;
  };
  return Tableau(s, row("row1"), row("row2"));
}

std::string render_ascii(const Tableau& t) {
  std::ostringstream os;
  auto put_row = [&](const std::vector<Letter>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ' ';
      std::string cell = letter_text(r[i]);
      for (std::size_t k = cell.size(); k < 2; ++k) os << ' ';
      os << cell;
    }
    os << '\n';
  };
  put_row(t.row1());
  if (t.shape().l2() > 0) put_row(t.row2());
  return os.str();
}

}  // namespace spoverma
