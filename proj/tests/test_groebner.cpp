#include <doctest.h>

#include <random>

#include "diffgb/groebner.hpp"
#include "diffgb/hilbert.hpp"

using namespace diffgb;

namespace {

const MonomialOrder lex = MonomialOrder::weighted_lex();
const MonomialOrder revlex = MonomialOrder::weighted_revlex();

Polynomial P(std::string_view s, const MonomialOrder& ord = lex) { return Polynomial::parse(s, ord); }
Monomial M(std::string_view s) { return Polynomial::parse(s).leading_monomial(); }

std::vector<Monomial> monos(std::initializer_list<const char*> names) {
  std::vector<Monomial> out;
  for (auto n : names) out.push_back(M(n));
  return out;
}

}  // namespace

TEST_CASE("s-polynomial") {
  const Polynomial s34 = s_polynomial(gen_f_x2(3, lex), gen_f_x2(4, lex), lex);
  CHECK(s34 == P("-x2^3"));
  CHECK(s34.monic() == P("x2^3"));
  const Polynomial f = gen_f_x2(5, lex);
  CHECK(s_polynomial(f, f, lex).is_zero());
  const Polynomial s45 = s_polynomial(gen_f_x2(4, lex), gen_f_x2(5, lex), lex);
  CHECK(s45.is_scalar_multiple_of(P("x2^2*x4 - 3*x2*x3^2")));
  CHECK_THROWS_AS(s_polynomial(Polynomial(lex), f, lex), std::invalid_argument);
}

TEST_CASE("s-polynomial is homogeneous of the lcm weight") {
  for (int a = 2; a <= 9; ++a)
    for (int b = a + 1; b <= 10; ++b) {
      const Polynomial f = gen_f_x2(a, lex), g = gen_f_x2(b, lex);
      const Polynomial s = s_polynomial(f, g, lex);
      if (s.is_zero()) continue;
      CHECK(s.homogeneous_weight() == lcm(f.leading_monomial(), g.leading_monomial()).weight());
    }
}

TEST_CASE("reduction") {
  const std::vector<Polynomial> b{gen_f_x2(2, lex), gen_f_x2(3, lex)};
  // neither x1^2 nor x1*x2 divides x1*x3 or x2^2: f_4 is already reduced
  CHECK(reduce(gen_f_x2(4, lex), b, lex) == gen_f_x2(4, lex));
  const std::vector<Polynomial> b2{gen_f_x2(2, lex), gen_f_x2(3, lex), P("x1*x3")};
  CHECK(reduce(gen_f_x2(4, lex), b2, lex) == P("2*x2^2"));
  CHECK(reduce(Polynomial(lex), b, lex).is_zero());
  const std::vector<Polynomial> c{P("x2^3 + x1*x3*x2")};
  CHECK(reduce(P("x1*x2*x3"), c, lex).is_zero() == false);
  CHECK(reduce(P("x1^2*x2^2"), std::vector<Polynomial>{P("x1^2")}, lex).is_zero());
  // remainder has no monomial divisible by a leading monomial
  const Polynomial rem = reduce(P("x1*x2*x3 + x2^3 + x3^2"), c, lex);
  for (const auto& t : rem.terms()) CHECK_FALSE(c[0].leading_monomial().divides(t.monomial));
}

TEST_CASE("buchberger examples") {
  {
    const std::vector<Polynomial> g{gen_f_x2(2, revlex), gen_f_x2(3, revlex), gen_f_x2(4, revlex)};
    const auto init = initial_generators(buchberger_truncated(g, revlex, 4));
    CHECK(init.generators == monos({"x1^2", "x1*x2", "x2^2"}));
  }
  {
    const std::vector<Polynomial> g{gen_f_xy(2, revlex), gen_f_xy(3, revlex)};
    const auto init = initial_generators(buchberger_truncated(g, revlex, 3));
    CHECK(init.generators == monos({"x1*y1", "x2*y1"}));
  }
  {
    const std::vector<Polynomial> g{P("x2*x3^2")};
    const Basis b = buchberger_truncated(g, lex, 12);
    REQUIRE(b.elements.size() == 1);
    CHECK(b.elements[0] == g[0]);
  }
  CHECK_THROWS_AS(buchberger_truncated(std::vector<Polynomial>{P("x1 + x2^2")}, lex, 5), std::invalid_argument);
}

TEST_CASE("basis invariants") {
  for (const auto& ord : {lex, revlex}) {
    const auto gens = differential_generators(P("x1*y1", ord), 7);
    const Basis b = buchberger_truncated(gens, ord, 7);
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      const auto& e = b.elements[i];
      CHECK(e.leading_coeff() == 1);
      CHECK(*e.homogeneous_weight() <= 7);
      for (std::size_t j = 0; j < b.elements.size(); ++j)
        if (i != j) CHECK_FALSE(b.elements[j].leading_monomial().divides(e.leading_monomial()));
    }
  }
}

TEST_CASE("initial generators") {
  CHECK(minimal_monomials(monos({"x1^2", "x1*x2", "x1^3"}), lex) == monos({"x1^2", "x1*x2"}));
  const auto gens = differential_generators(P("x1^2", revlex), 7);
  CHECK(gens.size() == 6);
  const auto init = initial_generators(buchberger_truncated(gens, revlex, 7));
  CHECK(init.generators == IdealPattern::gap2(1).minimal_generators(7, revlex));
  const auto gxy = differential_generators(P("x1*y1", revlex), 6);
  const auto ixy = initial_generators(buchberger_truncated(gxy, revlex, 6));
  CHECK(ixy.generators == IdealPattern::node(1).minimal_generators(6, revlex));
}

TEST_CASE("parallel mode gives the same basis") {
  for (const auto& ord : {lex, revlex}) {
    const auto gens = differential_generators(P("x1*y1", ord), 8);
    const Basis a = buchberger_truncated(gens, ord, 8);
    const Basis b = buchberger_truncated(gens, ord, 8, nullptr, {.parallel = true});
    REQUIRE(a.elements.size() == b.elements.size());
    for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i] == b.elements[i]);
  }
}

TEST_CASE("dimension oracle on random homogeneous ideals") {
  std::mt19937 rng(4242);
  // up to four variables, drawn from x1, x2, y1, y2
  const std::vector<Variable> vars{Variable::x(1), Variable::x(2), Variable::y(1), Variable::y(2)};
  const Ambient amb = Ambient::xy();
  const int W = 8;
  for (int trial = 0; trial < 30; ++trial) {
    const auto& ord = trial % 2 ? lex : revlex;
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < count; ++g) {
      const int w = 2 + static_cast<int>(rng() % 3);
      std::vector<Monomial> pool;
      for (const auto& m : monomials_of_weight(w, amb, ord)) {
        bool ok = true;
        for (const auto& f : m.factors()) ok = ok && std::find(vars.begin(), vars.end(), f.var) != vars.end();
        if (ok) pool.push_back(m);
      }
      std::vector<Term> terms;
      for (int t = 0; t < 3; ++t)
        terms.push_back({pool[rng() % pool.size()], Rational(static_cast<long>(rng() % 7) - 3)});
      Polynomial p(terms, ord);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const Basis b = buchberger_truncated(gens, ord, W);
    const auto counts = standard_monomial_counts(initial_generators(b), amb);
    const auto ranks = quotient_dims_by_rank(gens, amb, W, ord);
    CHECK(counts == ranks);
    for (int w = 0; w <= W; ++w)
      for (const auto& e : graded_piece_basis(gens, amb, w, ord)) CHECK(reduce(e, b.elements, ord).is_zero());
  }
}

TEST_CASE("F-family") {
  CHECK(f_family(2) == P("x2^3"));
  CHECK(f_family(3).is_scalar_multiple_of(P("5*x2*x3^2")));
  const Polynomial f4 = f_family(4);
  CHECK(f4.is_scalar_multiple_of(P("7/3*x2*x4^2 + 7/2*x3^2*x4")));
  CHECK(f4.coefficient(M("x3^2*x4")) / f4.coefficient(M("x2*x4^2")) == Rational(3, 2));
  CHECK_THROWS_AS(f_family(1), std::invalid_argument);
  const auto chain = f_family_chain(10);
  for (const auto& st : chain) {
    const Monomial expect = Monomial::of(Variable::x(2)) * Monomial::of(Variable::x(st.k), 2);
    CHECK(leading_term(st.element, lex).monomial == expect);
    CHECK(st.element.homogeneous_weight() == (st.k == 2 ? 6 : 2 + 2 * st.k));
    if (st.k >= 4) {
      const Monomial anchor = M("x2") * M("x" + std::to_string(st.k - 1)) * M("x" + std::to_string(st.k + 1));
      CHECK(leading_term(st.pair_s, lex).monomial == anchor);
    }
  }
}

TEST_CASE("G determinants") {
  const std::vector<int> a{1, 1};
  CHECK(g_determinant(a) == P("x1^2*y2", revlex));
  const std::vector<int> b{1, 2};
  const Polynomial gb = g_determinant(b);
  CHECK(leading_term(gb, revlex).monomial == M("x1*x2*y2"));
  CHECK(g_expected_leading(b) == M("x1*x2*y2"));
  const std::vector<int> bad{2, 1}, zero{0, 1}, single{3};
  CHECK_THROWS_AS(g_determinant(bad), std::invalid_argument);
  CHECK_THROWS_AS(g_determinant(zero), std::invalid_argument);
  CHECK_THROWS_AS(g_determinant(single), std::invalid_argument);
}

TEST_CASE("G determinants lie in the node ideal") {
  const auto gens = differential_generators(P("x1*y1", revlex), 9);
  const Basis basis = buchberger_truncated(gens, revlex, 9);
  for (int i1 = 1; i1 <= 3; ++i1)
    for (int i2 = i1; i2 <= 4; ++i2)
      for (int i3 = i2; i3 <= 4; ++i3) {
        const std::vector<int> idx{i1, i2, i3};
        const Polynomial g = g_determinant(idx);
        if (*g.homogeneous_weight() > 9) continue;
        CHECK(reduce(g, basis.elements, revlex).is_zero());
      }
}

TEST_CASE("witness") {
  const WitnessReport w = ndf_witness(12);
  CHECK(w.support_is_x3_4);
  CHECK(w.s_poly.is_scalar_multiple_of(P("5*x3^4")));
  CHECK(w.divisible_by_none);
  CHECK(w.ok());
  CHECK(w.divisibility.size() > 11);
  const auto j = to_json(w);
  CHECK(j["divisible_by_none"] == true);
}
