#include "spoverma/modulespace.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "echelon.hpp"

namespace spoverma {

bool is_canonical_pair(const WedgePair& p) {
  return p.lo < p.hi || (p.lo == Letter::zero && p.hi == Letter::zero);
}

int basis_index_parity(const BasisIndex& idx) {
  int p = 0;
  for (Letter x : idx.singles) p += letter_parity(x);
  for (const WedgePair& w : idx.pairs) p += pair_parity(w);
  return p % 2;
}

Weight basis_index_weight(const BasisIndex& idx) {
  Weight w;
  for (Letter x : idx.singles) w = w + letter_weight(x);
  for (const WedgePair& p : idx.pairs) w = w + letter_weight(p.lo) + letter_weight(p.hi);
  return w;
}

std::optional<std::pair<int, WedgePair>> canonical_wedge(Letter a, Letter c) {
  if (a < c) return {{1, WedgePair{a, c}}};
  if (a > c) {
    // x^y = -(-1)^{|x||y|} y^x
    int sign = (letter_parity(a) && letter_parity(c)) ? 1 : -1;
    return {{sign, WedgePair{c, a}}};
  }
  if (a == Letter::zero) return {{1, WedgePair{a, a}}};
  return std::nullopt;
}

BasisIndex u_of_tableau(const Tableau& y) {
  if (!is_cst(y)) throw std::invalid_argument("u_of_tableau: tableau is not column-strict");
  const Shape& s = y.shape();
  BasisIndex idx;
  idx.singles.reserve(static_cast<std::size_t>(s.m1()));
  idx.pairs.reserve(static_cast<std::size_t>(s.m2()));
  for (int c = s.l1() - 1; c >= s.l2(); --c)
    idx.singles.push_back(y.row1()[static_cast<std::size_t>(c)]);
  for (int c = s.l2() - 1; c >= 0; --c)
    idx.pairs.push_back(WedgePair{y.row1()[static_cast<std::size_t>(c)],
                                  y.row2()[static_cast<std::size_t>(c)]});
  return idx;
}

Tableau tableau_of_index(const BasisIndex& idx) {
  for (const WedgePair& p : idx.pairs)
    if (!is_canonical_pair(p))
      throw std::invalid_argument("tableau_of_index: non-canonical wedge pair");
  const int m1 = static_cast<int>(idx.singles.size());
  const int m2 = static_cast<int>(idx.pairs.size());
  Shape s(m1 + m2, m2);
  std::vector<Letter> r1(static_cast<std::size_t>(s.l1()));
  std::vector<Letter> r2(static_cast<std::size_t>(s.l2()));
  for (int c = 0; c < m2; ++c) {
    const WedgePair& p = idx.pairs[static_cast<std::size_t>(m2 - 1 - c)];
    r1[static_cast<std::size_t>(c)] = p.lo;
    r2[static_cast<std::size_t>(c)] = p.hi;
  }
  for (int c = m2; c < s.l1(); ++c)
    r1[static_cast<std::size_t>(c)] = idx.singles[static_cast<std::size_t>(s.l1() - 1 - c)];
  return Tableau(s, std::move(r1), std::move(r2));
}

namespace {

using Terms = std::vector<SparseVector::Term>;

void sort_combine(Terms& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  std::size_t r = 0;
  while (r < ts.size()) {
    BasisIndex idx = std::move(ts[r].first);
    Int c = std::move(ts[r].second);
    ++r;
    while (r < ts.size() && ts[r].first == idx) {
      c += ts[r].second;
      ++r;
    }
    if (c != 0) {
      ts[w].first = std::move(idx);
      ts[w].second = std::move(c);
      ++w;
    }
  }
  ts.resize(w);
}

void validate_terms(const Shape& s, const Terms& ts) {
  for (const auto& [idx, c] : ts) {
    if (idx.singles.size() != static_cast<std::size_t>(s.m1()) ||
        idx.pairs.size() != static_cast<std::size_t>(s.m2()))
      throw std::invalid_argument("SparseVector: index does not match the shape");
    for (const WedgePair& p : idx.pairs)
      if (!is_canonical_pair(p))
        throw std::invalid_argument("SparseVector: non-canonical wedge pair");
  }
}

}  // namespace

SparseVector::SparseVector(Shape shape) : shape_(shape) {}

SparseVector::SparseVector(Shape shape, std::vector<Term> terms)
    : shape_(shape), terms_(std::move(terms)) {
  validate_terms(shape_, terms_);
  sort_combine(terms_);
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("SparseVector+: shapes differ");
  return SparseVector(a.shape(), detail::axpy(1, a.terms(), 1, b.terms()));
}

SparseVector operator*(const Int& c, const SparseVector& v) {
  if (c == 0) return SparseVector(v.shape());
  Terms out;
  out.reserve(v.terms().size());
  for (const auto& [idx, x] : v.terms()) out.emplace_back(idx, c * x);
  return SparseVector(v.shape(), std::move(out));
}

SparseVector highest_vector(const Shape& s) {
  Terms t;
  t.emplace_back(u_of_tableau(highest_weight_filling(s)), 1);
  return SparseVector(s, std::move(t));
}

SparseVector apply_generator(Generator g, const SparseVector& v) {
  const Shape& s = v.shape();
  if (g == Generator::H1 || g == Generator::H2) {
    Terms out;
    out.reserve(v.terms().size());
    for (const auto& [idx, c] : v.terms()) {
      Weight w = basis_index_weight(idx);
      long eig = static_cast<long>(g == Generator::H1 ? w.c1 : w.c2);
      if (eig != 0) out.emplace_back(idx, c * eig);
    }
    return SparseVector(s, std::move(out));
  }

  const bool odd = generator_parity(g) == 1;
  Terms out;
  for (const auto& [idx, c] : v.terms()) {
    int left = 0;  // parity of the factors left of the current one
    for (std::size_t p = 0; p < idx.singles.size(); ++p) {
      Letter x = idx.singles[p];
      if (auto r = act_letter(g, x)) {
        int sgn = (odd && (left & 1)) ? -r->first : r->first;
        BasisIndex nidx = idx;
        nidx.singles[p] = r->second;
        out.emplace_back(std::move(nidx), c * sgn);
      }
      left += letter_parity(x);
    }
    for (std::size_t q = 0; q < idx.pairs.size(); ++q) {
      const WedgePair& pr = idx.pairs[q];
      const int kos = (odd && (left & 1)) ? -1 : 1;
      if (auto r = act_letter(g, pr.lo)) {
        if (auto w = canonical_wedge(r->second, pr.hi)) {
          BasisIndex nidx = idx;
          nidx.pairs[q] = w->second;
          out.emplace_back(std::move(nidx), c * (kos * r->first * w->first));
        }
      }
      if (auto r = act_letter(g, pr.hi)) {
        int inner = (odd && letter_parity(pr.lo)) ? -1 : 1;
        if (auto w = canonical_wedge(pr.lo, r->second)) {
          BasisIndex nidx = idx;
          nidx.pairs[q] = w->second;
          out.emplace_back(std::move(nidx), c * (kos * inner * r->first * w->first));
        }
      }
      left += pair_parity(pr);
    }
  }
  return SparseVector(s, std::move(out));
}

SparseVector verma_vector(const BVector& b, const Shape& s) {
  SparseVector v = highest_vector(s);
  for (int i = 0; i < b.b1; ++i) v = apply_generator(Generator::F2, v);
  for (int i = 0; i < b.b2; ++i) v = apply_generator(Generator::F1, v);
  for (int i = 0; i < b.b3; ++i) v = apply_generator(Generator::F2, v);
  for (int i = 0; i < b.b4; ++i) v = apply_generator(Generator::F1, v);
  return v;
}

void for_each_verma_vector(
    const Shape& s,
    const std::function<void(const BVector&, const SparseVector&)>& fn) {
  const int m1 = s.m1();
  const int m2 = s.m2();
  SparseVector v1 = highest_vector(s);
  for (int b1 = 0; b1 <= 2 * m2; ++b1) {
    if (b1) v1 = apply_generator(Generator::F2, v1);
    SparseVector v2 = v1;
    for (int b2 = 0; b2 <= m1 + b1; ++b2) {
      if (b2) v2 = apply_generator(Generator::F1, v2);
      SparseVector v3 = v2;
      const int b3max = std::min(b2 + m1, 2 * b2);
      for (int b3 = 0; b3 <= b3max; ++b3) {
        if (b3) v3 = apply_generator(Generator::F2, v3);
        SparseVector v4 = v3;
        const int b4max = std::min(m1, b3 / 2);
        for (int b4 = 0; b4 <= b4max; ++b4) {
          if (b4) v4 = apply_generator(Generator::F1, v4);
          fn(BVector{b1, b2, b3, b4}, v4);
        }
      }
    }
  }
}

SparseVector f2_power_closed_form(const Shape& s, int b1) {
  const int m1 = s.m1();
  const int m2 = s.m2();
  if (b1 < 0 || b1 > 2 * m2)
    throw std::invalid_argument("f2_power_closed_form: need 0 <= b1 <= 2*m2");
  const int k = b1 / 2;
  const bool odd = b1 % 2 != 0;
  const Int coeff = factorial(static_cast<unsigned>(k));

  BasisIndex base;
  base.singles.assign(static_cast<std::size_t>(m1), Letter::one);
  base.pairs.assign(static_cast<std::size_t>(m2), WedgePair{Letter::one, Letter::two});

  Terms out;
  std::vector<int> subset(static_cast<std::size_t>(k));
  // visit every k-subset of the pair positions
  auto visit = [&](auto&& self, int next, int chosen) -> void {
    if (chosen == k) {
      BasisIndex idx = base;
      for (int i : subset)
        idx.pairs[static_cast<std::size_t>(i)] = WedgePair{Letter::one, Letter::two_bar};
      if (!odd) {
        out.emplace_back(std::move(idx), coeff);
        return;
      }
      for (int j = 0; j < m2; ++j) {
        if (std::find(subset.begin(), subset.end(), j) != subset.end()) continue;
        BasisIndex jdx = idx;
        jdx.pairs[static_cast<std::size_t>(j)] = WedgePair{Letter::one, Letter::zero};
        out.emplace_back(std::move(jdx), coeff);
      }
      return;
    }
    for (int i = next; i < m2; ++i) {
      subset[static_cast<std::size_t>(chosen)] = i;
      self(self, i + 1, chosen + 1);
    }
  };
  visit(visit, 0, 0);
  return SparseVector(s, std::move(out));
}

std::optional<std::pair<Int, BasisIndex>> leading_term(const SparseVector& v) {
  if (v.is_zero()) return std::nullopt;
  const auto& t = v.terms().back();
  return {{t.second, t.first}};
}

Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Int verma_leading_coefficient(const BVector& b) {
  return factorial(static_cast<unsigned>(b.b1 / 2)) * factorial(static_cast<unsigned>(b.b2)) *
         factorial(static_cast<unsigned>(b.b3 / 2)) * factorial(static_cast<unsigned>(b.b4));
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
  if (vectors.empty()) return 0;
  const Shape& s = vectors.front().shape();
  for (const SparseVector& v : vectors)
    if (v.shape() != s) throw std::invalid_argument("rank: vectors must share one shape");
  detail::EchelonBasis ech;
  for (const SparseVector& v : vectors)
    if (!v.is_zero()) ech.try_insert(v.terms());
  return ech.size();
}

std::size_t submodule_dimension(const Shape& s) {
  detail::EchelonBasis ech;
  std::deque<Terms> queue;
  if (const Terms* r = ech.try_insert(highest_vector(s).terms())) queue.push_back(*r);
  while (!queue.empty()) {
    SparseVector w(s, std::move(queue.front()));
    queue.pop_front();
    for (Generator g : raising_lowering_generators) {
      SparseVector u = apply_generator(g, w);
      if (u.is_zero()) continue;
      if (const Terms* r = ech.try_insert(u.terms())) queue.push_back(*r);
    }
  }
  return ech.size();
}

Int ambient_dimension(const Shape& s) {
  Int a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 5, static_cast<unsigned long>(s.m1()));
  mpz_ui_pow_ui(b.get_mpz_t(), 11, static_cast<unsigned long>(s.m2()));
  return a * b;
}

std::string to_json(const SparseVector& v) {
  nlohmann::ordered_json j;
  j["shape"] = {v.shape().l1(), v.shape().l2()};
  auto terms = nlohmann::ordered_json::array();
  // leading term first
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    nlohmann::ordered_json t;
    t["coeff"] = it->second.get_str();
    auto singles = nlohmann::ordered_json::array();
    for (Letter x : it->first.singles) singles.push_back(letter_to_int(x));
    t["singles"] = singles;
    auto pairs = nlohmann::ordered_json::array();
    for (const WedgePair& p : it->first.pairs)
      pairs.push_back({letter_to_int(p.lo), letter_to_int(p.hi)});
    t["pairs"] = pairs;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

SparseVector sparse_vector_from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  Shape s(j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>());
  Terms out;
  for (const auto& t : j.at("terms")) {
    BasisIndex idx;
    for (const auto& v : t.at("singles")) idx.singles.push_back(letter_from_int(v.get<int>()));
    for (const auto& p : t.at("pairs"))
      idx.pairs.push_back(
          WedgePair{letter_from_int(p.at(0).get<int>()), letter_from_int(p.at(1).get<int>())});
    out.emplace_back(std::move(idx), Int(t.at("coeff").get<std::string>()));
  }
  return SparseVector(s, std::move(out));
}

namespace detail {

Terms axpy(const Int& a, const Terms& x, const Int& b, const Terms& y) {
  Terms out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (i->first < j->first) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (j->first < i->first) {
      out.emplace_back(j->first, b * j->second);
      ++j;
    } else {
      Int c = a * i->second + b * j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i != x.end(); ++i) out.emplace_back(i->first, a * i->second);
  for (; j != y.end(); ++j) out.emplace_back(j->first, b * j->second);
  return out;
}

void divide_content(Terms& ts) {
  if (ts.empty()) return;
  Int g = 0;
  for (const auto& [idx, c] : ts) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(ts.back().second) < 0) g = -g;
  if (g == 1) return;
  for (auto& [idx, c] : ts) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

const Terms* EchelonBasis::try_insert(Terms v) {
  while (!v.empty()) {
    auto it = rows_.find(v.back().first);
    if (it == rows_.end()) {
      divide_content(v);
      auto [pos, inserted] = rows_.emplace(v.back().first, std::move(v));
      return &pos->second;
    }
    const Terms& pivot = it->second;
    Int a = pivot.back().second;
    Int c = -v.back().second;
    v = axpy(a, v, c, pivot);
    divide_content(v);
  }
  return nullptr;
}

}  // namespace detail

}  // namespace spoverma
