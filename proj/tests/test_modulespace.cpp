#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "spoverma/modulespace.hpp"

using namespace spoverma;
using test::tab;

namespace {

const Letter L1 = Letter::one;
const Letter L2 = Letter::two;
const Letter L0 = Letter::zero;
const Letter L2b = Letter::two_bar;
const Letter L1b = Letter::one_bar;

SparseVector single_term(const Shape& s, BasisIndex idx, long c = 1) {
  return SparseVector(s, {{std::move(idx), Int(c)}});
}

// Deterministic small pseudo-random vectors over the full CST basis.
SparseVector sample_vector(const Shape& s, unsigned seed) {
  auto basis = enumerate_cst(s);
  std::vector<SparseVector::Term> terms;
  unsigned long state = 6364136223846793005ULL * seed + 1442695040888963407ULL;
  for (const Tableau& t : basis) {
    state = 6364136223846793005ULL * state + 1442695040888963407ULL;
    long c = static_cast<long>((state >> 33) % 7) - 3;
    if (c != 0) terms.emplace_back(u_of_tableau(t), Int(c));
  }
  return SparseVector(s, std::move(terms));
}

}  // namespace

TEST_CASE("canonical_wedge sign rule") {
  CHECK(canonical_wedge(L0, L0) == std::pair{1, WedgePair{L0, L0}});
  CHECK(canonical_wedge(L2, L1) == std::pair{-1, WedgePair{L1, L2}});
  CHECK(canonical_wedge(L2b, L0) == std::pair{-1, WedgePair{L0, L2b}});
  CHECK(canonical_wedge(L0, L2b) == std::pair{1, WedgePair{L0, L2b}});
  CHECK(canonical_wedge(L1, L1) == std::nullopt);
  CHECK(canonical_wedge(L1b, L1b) == std::nullopt);
}

TEST_CASE("wedge pair parity") {
  CHECK(pair_parity(WedgePair{L1, L2}) == 0);
  CHECK(pair_parity(WedgePair{L1, L0}) == 1);
  CHECK(pair_parity(WedgePair{L0, L0}) == 0);
  CHECK(pair_parity(WedgePair{L1, L2b}) == 0);
}

TEST_CASE("u_of_tableau") {
  BasisIndex y1 = u_of_tableau(tab("1 0 -1", "2 0"));
  CHECK(y1.singles == std::vector<Letter>{L1b});
  CHECK(y1.pairs == std::vector<WedgePair>{{L0, L0}, {L1, L2}});

  BasisIndex hw = u_of_tableau(highest_weight_filling(Shape(3, 2)));
  CHECK(hw.singles == std::vector<Letter>{L1});
  CHECK(hw.pairs == std::vector<WedgePair>{{L1, L2}, {L1, L2}});

  BasisIndex empty = u_of_tableau(tab(""));
  CHECK(empty.singles.empty());
  CHECK(empty.pairs.empty());

  CHECK_THROWS_AS(u_of_tableau(tab("1", "1")), std::invalid_argument);
}

TEST_CASE("u_of_tableau is an order isomorphism") {
  for (Shape s : {Shape(2, 1), Shape(3, 2), Shape(2, 2)}) {
    auto list = enumerate_cst(s);
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      CHECK(u_of_tableau(list[i]) < u_of_tableau(list[i + 1]));
      CHECK(tableau_of_index(u_of_tableau(list[i])) == list[i]);
    }
  }
}

TEST_CASE("basis_index_weight") {
  CHECK(basis_index_weight(u_of_tableau(highest_weight_filling(Shape(3, 2)))) == Weight{3, 2});
  CHECK(basis_index_weight(u_of_tableau(tab("1 0 -1", "2 0"))) == Weight{0, 1});
  CHECK(basis_index_weight(BasisIndex{}) == Weight{0, 0});
}

TEST_CASE("highest_vector") {
  SparseVector v = highest_vector(Shape(1, 0));
  REQUIRE(v.terms().size() == 1);
  CHECK(v.terms()[0].first.singles == std::vector<Letter>{L1});
  CHECK(v.terms()[0].second == 1);

  CHECK(highest_vector(Shape(0, 0)).terms().size() == 1);

  SparseVector w = highest_vector(Shape(1, 1));
  REQUIRE(w.terms().size() == 1);
  CHECK(w.terms()[0].first.pairs == std::vector<WedgePair>{{L1, L2}});
}

TEST_CASE("apply_generator on the natural representation") {
  SparseVector v = apply_generator(Generator::F1, highest_vector(Shape(1, 0)));
  CHECK(v == single_term(Shape(1, 0), BasisIndex{{L2}, {}}));

  for (Shape s : {Shape(1, 0), Shape(1, 1), Shape(2, 1)}) {
    CHECK(apply_generator(Generator::E1, highest_vector(s)).is_zero());
    CHECK(apply_generator(Generator::E2, highest_vector(s)).is_zero());
  }
}

TEST_CASE("highest weight vector has H-eigenvalues lambda") {
  for (Shape s : {Shape(1, 0), Shape(3, 2), Shape(2, 2)}) {
    SparseVector v = highest_vector(s);
    CHECK(apply_generator(Generator::H1, v) == Int(s.highest_weight().c1) * v);
    CHECK(apply_generator(Generator::H2, v) == Int(s.highest_weight().c2) * v);
  }
}

TEST_CASE("two F2 applications: Koszul cross terms vanish") {
  Shape s(2, 2);
  SparseVector v = apply_generator(
      Generator::F2, apply_generator(Generator::F2, highest_vector(s)));
  // expected: (1,-2) at one position each, coefficient 1; in particular
  // no (1,0)x(1,0) term survives f(p)f(q) = -f(q)f(p)
  SparseVector expected =
      single_term(s, BasisIndex{{}, {{L1, L2b}, {L1, L2}}}) +
      single_term(s, BasisIndex{{}, {{L1, L2}, {L1, L2b}}});
  CHECK(v == expected);
  for (const auto& [idx, c] : v.terms())
    CHECK(idx.pairs != std::vector<WedgePair>{{L1, L0}, {L1, L0}});
}

TEST_CASE("bracket coherence on sample vectors") {
  using G = Generator;
  struct Pair {
    G a;
    G b;
    // action of the bracket as H-combination coefficients (h1, h2) or a
    // scalar multiple of a generator
    int h1;
    int h2;
  };
  for (int m1 = 0; m1 <= 2; ++m1)
    for (int m2 = 0; m2 <= 2; ++m2) {
      Shape s(m1 + m2, m2);
      for (unsigned seed = 1; seed <= 3; ++seed) {
        SparseVector v = sample_vector(s, seed);

        // [E1,F1] = H1 - H2
        SparseVector lhs = apply_generator(G::E1, apply_generator(G::F1, v)) +
                           Int(-1) * apply_generator(G::F1, apply_generator(G::E1, v));
        SparseVector rhs = apply_generator(G::H1, v) + Int(-1) * apply_generator(G::H2, v);
        CHECK(lhs == rhs);

        // {E2,F2} = H2 (both odd: anticommutator)
        lhs = apply_generator(G::E2, apply_generator(G::F2, v)) +
              apply_generator(G::F2, apply_generator(G::E2, v));
        CHECK(lhs == apply_generator(G::H2, v));

        // [H1,H2] = 0
        lhs = apply_generator(G::H1, apply_generator(G::H2, v)) +
              Int(-1) * apply_generator(G::H2, apply_generator(G::H1, v));
        CHECK(lhs.is_zero());

        // [H_i, X] = root(X)(H_i) * X for all four E/F generators
        const struct {
          G h;
          G x;
          long c;
        } roots[] = {
            {G::H1, G::E1, 1},  {G::H2, G::E1, -1}, {G::H1, G::F1, -1}, {G::H2, G::F1, 1},
            {G::H1, G::E2, 0},  {G::H2, G::E2, 1},  {G::H1, G::F2, 0},  {G::H2, G::F2, -1},
        };
        for (const auto& r : roots) {
          SparseVector br = apply_generator(r.h, apply_generator(r.x, v)) +
                            Int(-1) * apply_generator(r.x, apply_generator(r.h, v));
          CHECK(br == Int(r.c) * apply_generator(r.x, v));
        }
      }
    }
}

TEST_CASE("verma_vector examples") {
  CHECK(verma_vector({0, 1, 2, 0}, Shape(1, 0)) ==
        single_term(Shape(1, 0), BasisIndex{{L2b}, {}}));

  for (Shape s : {Shape(0, 0), Shape(1, 0), Shape(2, 1)})
    CHECK(verma_vector({0, 0, 0, 0}, s) == highest_vector(s));

  SparseVector v = verma_vector({1, 2, 3, 1}, Shape(3, 2));
  auto lt = leading_term(v);
  REQUIRE(lt.has_value());
  CHECK(lt->first == 2);
  CHECK(lt->second == u_of_tableau(tab("1 0 -1", "2 0")));
  // every other term is strictly smaller
  for (const auto& [idx, c] : v.terms())
    CHECK((idx == lt->second || idx < lt->second));
}

TEST_CASE("f2_power_closed_form") {
  for (Shape s : {Shape(0, 0), Shape(2, 2), Shape(3, 3)})
    CHECK(f2_power_closed_form(s, 0) == highest_vector(s));

  Shape s(2, 2);
  SparseVector b1_1 = f2_power_closed_form(s, 1);
  SparseVector expected = single_term(s, BasisIndex{{}, {{L1, L0}, {L1, L2}}}) +
                          single_term(s, BasisIndex{{}, {{L1, L2}, {L1, L0}}});
  CHECK(b1_1 == expected);

  // the b1 = 4 value is pinned by the iterated-application oracle
  SparseVector iterated = highest_vector(s);
  for (int i = 0; i < 4; ++i) iterated = apply_generator(Generator::F2, iterated);
  CHECK(f2_power_closed_form(s, 4) == iterated);
  CHECK(f2_power_closed_form(s, 4) ==
        Int(2) * single_term(s, BasisIndex{{}, {{L1, L2b}, {L1, L2b}}}));

  CHECK_THROWS_AS(f2_power_closed_form(s, 5), std::invalid_argument);
  CHECK_THROWS_AS(f2_power_closed_form(s, -1), std::invalid_argument);
}

TEST_CASE("lemma equivalence: closed form vs iterated application") {
  for (int m1 = 0; m1 <= 1; ++m1)
    for (int m2 = 0; m2 <= 3; ++m2) {
      Shape s(m1 + m2, m2);
      SparseVector v = highest_vector(s);
      for (int b1 = 0; b1 <= 2 * m2; ++b1) {
        if (b1) v = apply_generator(Generator::F2, v);
        CHECK(v == f2_power_closed_form(s, b1));
      }
    }
}

TEST_CASE("leading_term") {
  for (Shape s : {Shape(1, 0), Shape(2, 1)}) {
    auto lt = leading_term(highest_vector(s));
    REQUIRE(lt.has_value());
    CHECK(lt->first == 1);
    CHECK(lt->second == u_of_tableau(highest_weight_filling(s)));
  }

  auto lt = leading_term(verma_vector({0, 1, 1, 0}, Shape(1, 0)));
  REQUIRE(lt.has_value());
  CHECK(lt->first == 1);
  CHECK(lt->second == BasisIndex{{L0}, {}});

  CHECK(leading_term(SparseVector(Shape(1, 0))) == std::nullopt);
}

TEST_CASE("verma_leading_coefficient formula") {
  CHECK(verma_leading_coefficient({0, 0, 0, 0}) == 1);
  CHECK(verma_leading_coefficient({1, 2, 3, 1}) == 2);
  CHECK(verma_leading_coefficient({4, 3, 2, 1}) == 12);
  CHECK(verma_leading_coefficient({4, 3, 4, 1}) == 24);
}

TEST_CASE("leading term of b = (4,3,2,1)") {
  // valid on shape (8,4): the triangularity theorem applies exactly
  Shape valid(8, 4);
  REQUIRE(satisfies_inequalities({4, 3, 2, 1}, valid));
  auto lt = leading_term(verma_vector({4, 3, 2, 1}, valid));
  REQUIRE(lt.has_value());
  CHECK(lt->first == verma_leading_coefficient({4, 3, 2, 1}));
  CHECK(lt->second == u_of_tableau(tableau_of_b({4, 3, 2, 1}, valid)));

  // on shape (4,4) the same b is out of range (b4 > m1 = 0); the monomial
  // does not vanish and its observed leading coefficient is 24, which the
  // formula does not cover
  Shape invalid(4, 4);
  REQUIRE_FALSE(satisfies_inequalities({4, 3, 2, 1}, invalid));
  auto lt2 = leading_term(verma_vector({4, 3, 2, 1}, invalid));
  REQUIRE(lt2.has_value());
  CHECK(lt2->first == 24);
}

TEST_CASE("triangularity over small shapes") {
  for (int m1 = 0; m1 <= 2; ++m1)
    for (int m2 = 0; m2 <= 1; ++m2) {
      Shape s(m1 + m2, m2);
      std::map<BVector, Tableau> pairing;
      for (const Tableau& t : enumerate_kn(s)) pairing.emplace(psi(t), t);
      for_each_verma_vector(s, [&](const BVector& b, const SparseVector& v) {
        auto lt = leading_term(v);
        REQUIRE(lt.has_value());
        CHECK(lt->first == verma_leading_coefficient(b));
        CHECK(lt->second == u_of_tableau(pairing.at(b)));
      });
    }
}

TEST_CASE("weight homogeneity of Verma vectors") {
  for (Shape s : {Shape(2, 1), Shape(2, 2)})
    for_each_verma_vector(s, [&](const BVector& b, const SparseVector& v) {
      Weight mu = verma_weight(b, s);
      for (const auto& [idx, c] : v.terms()) CHECK(basis_index_weight(idx) == mu);
    });
}

TEST_CASE("for_each_verma_vector matches verma_vector and enumerate_b") {
  Shape s(2, 1);
  auto expected = enumerate_b(s);
  std::size_t i = 0;
  for_each_verma_vector(s, [&](const BVector& b, const SparseVector& v) {
    REQUIRE(i < expected.size());
    CHECK(b == expected[i]);
    CHECK(v == verma_vector(b, s));
    ++i;
  });
  CHECK(i == expected.size());
}

TEST_CASE("rank") {
  CHECK(rank({}) == 0);

  std::vector<SparseVector> natural;
  for (const BVector& b : enumerate_b(Shape(1, 0)))
    natural.push_back(verma_vector(b, Shape(1, 0)));
  CHECK(rank(natural) == 5);

  SparseVector v = verma_vector({1, 1, 1, 0}, Shape(2, 2));
  CHECK(rank({v, Int(2) * v}) == 1);

  SparseVector sum = natural[0] + natural[1];
  CHECK(rank({natural[0], natural[1], sum}) == 2);

  CHECK_THROWS_AS(rank({highest_vector(Shape(1, 0)), highest_vector(Shape(1, 1))}),
                  std::invalid_argument);
}

TEST_CASE("out-of-range monomials stay in the span of the Verma family") {
  Shape s(2, 1);
  std::vector<SparseVector> family;
  for_each_verma_vector(s, [&](const BVector&, const SparseVector& v) {
    family.push_back(v);
  });
  std::size_t base = rank(family);
  CHECK(base == family.size());
  for (BVector b : {BVector{3, 0, 0, 0}, BVector{0, 0, 1, 0}, BVector{1, 2, 4, 1}}) {
    REQUIRE_FALSE(satisfies_inequalities(b, s));
    family.push_back(verma_vector(b, s));
    CHECK(rank(family) == base);
    family.pop_back();
  }
}

TEST_CASE("submodule_dimension") {
  CHECK(submodule_dimension(Shape(0, 0)) == 1);
  CHECK(submodule_dimension(Shape(1, 0)) == 5);
  CHECK(submodule_dimension(Shape(3, 2)) == 105);
}

TEST_CASE("natural representation coordinates") {
  // the five Verma vectors of V are eps1, eps2, eps5, -eps4, eps3
  Shape s(1, 0);
  auto bs = enumerate_b(s);
  REQUIRE(bs.size() == 5);
  const Letter expected_letter[5] = {L1, L2, L0, L2b, L1b};
  for (std::size_t i = 0; i < 5; ++i) {
    SparseVector v = verma_vector(bs[i], s);
    REQUIRE(v.terms().size() == 1);
    CHECK(v.terms()[0].first.singles[0] == expected_letter[i]);
    CHECK(v.terms()[0].second == 1);
  }
}

TEST_CASE("SparseVector JSON round trip") {
  SparseVector v = verma_vector({1, 2, 3, 1}, Shape(3, 2));
  std::string j = to_json(v);
  CHECK(sparse_vector_from_json(j) == v);
  CHECK(j.find("\"coeff\":\"2\"") != std::string::npos);

  // leading term first in the serialized form
  SparseVector hw2 = highest_vector(Shape(1, 1));
  CHECK(to_json(hw2) == R"({"shape":[1,1],"terms":[{"coeff":"1","singles":[],"pairs":[[1,2]]}]})");
}

TEST_CASE("SparseVector validation") {
  CHECK_THROWS_AS(SparseVector(Shape(1, 0), {{BasisIndex{{}, {}}, Int(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SparseVector(Shape(1, 1), {{BasisIndex{{L1}, {{L2, L1}}}, Int(1)}}),
                  std::invalid_argument);
  // zero coefficients are pruned, equal indices combined
  SparseVector v(Shape(1, 0), {{BasisIndex{{L1}, {}}, Int(2)},
                               {BasisIndex{{L1}, {}}, Int(-2)},
                               {BasisIndex{{L2}, {}}, Int(0)}});
  CHECK(v.is_zero());
}
