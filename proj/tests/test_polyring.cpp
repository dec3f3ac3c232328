#include <doctest.h>

#include <random>

#include "diffgb/polyring.hpp"

using namespace diffgb;

namespace {

const MonomialOrder lex = MonomialOrder::weighted_lex();
const MonomialOrder revlex = MonomialOrder::weighted_revlex();

Monomial mono(std::string_view s) { return Polynomial::parse(s).leading_monomial(); }

// Pool of every monomial of weight <= 12 in a few x and y variables.
std::vector<Monomial> sample_pool() {
  std::vector<Monomial> pool;
  for (int w = 0; w <= 12; ++w)
    for (auto& m : monomials_of_weight(w, Ambient::xy(), lex))
      if (m.degree() <= 5) pool.push_back(m);
  return pool;
}

}  // namespace

TEST_CASE("variables") {
  CHECK(Variable::x(3).weight() == 3);
  CHECK(Variable::y(2).weight() == 2);
  CHECK(Variable::x(1).shifted() == Variable::x(2));
  CHECK_THROWS_AS(Variable::x(0), std::invalid_argument);
  CHECK_THROWS_AS(Variable::y(-1), std::invalid_argument);
  // ranking: x1 > x2 > ... > y1 > y2
  CHECK(Variable::x(1) < Variable::x(2));
  CHECK(Variable::x(9) < Variable::y(1));
}

TEST_CASE("monomials") {
  const Monomial m = mono("x2*x4^2*y1");
  CHECK(m.weight() == 11);
  CHECK(m.degree() == 4);
  CHECK(m.exponent(Variable::x(4)) == 2);
  CHECK(m.to_string() == "x2*x4^2*y1");
  CHECK(mono("x4").divides(m));
  CHECK_FALSE(mono("x4^3").divides(m));
  CHECK(*mono("x4*y1").quotient_of(m) == mono("x2*x4"));
  CHECK(lcm(mono("x1^2*x3"), mono("x1*x3^2")) == mono("x1^2*x3^2"));
  CHECK(mono("x1*x2").is_coprime(mono("x3")));
  CHECK(Monomial().to_string() == "1");
  CHECK_THROWS_AS(Monomial({{Variable::x(1), -1}}), std::invalid_argument);
}

TEST_CASE("order anchors") {
  CHECK(lex.greater(mono("x1*x3"), mono("x2^2")));
  CHECK(revlex.greater(mono("x2^2"), mono("x1*x3")));
  CHECK(revlex.greater(mono("x2*y1"), mono("x1*y2")));
  CHECK(lex.greater(mono("x1*x2"), mono("x1^3")) == false);  // weight 3 == 3: x1^3 wins under lex
  CHECK(lex.greater(mono("x5"), mono("x1^4")));              // weight first
  CHECK(MonomialOrder::parse("wlex") == lex);
  CHECK(MonomialOrder::parse("wrevlex") == revlex);
  CHECK_THROWS_AS(MonomialOrder::parse("grevlex"), std::invalid_argument);
}

TEST_CASE("order axioms on random samples") {
  const auto pool = sample_pool();
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (const auto& ord : {lex, revlex}) {
    for (int t = 0; t < 10000; ++t) {
      const Monomial& a = pool[pick(rng)];
      const Monomial& b = pool[pick(rng)];
      const Monomial& c = pool[pick(rng)];
      const auto ab = ord.compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(ord.compare(b, a) == (0 <=> ab));
      if (ab > 0) CHECK(ord.compare(a * c, b * c) > 0);
      if (ab > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
      if (a.weight() != b.weight()) CHECK((ab > 0) == (a.weight() > b.weight()));
    }
  }
}

TEST_CASE("polynomial parsing and rendering") {
  const Polynomial p = Polynomial::parse("7/3*x2*x4^2 + 7/2*x3^2*x4");
  CHECK(p.to_string() == "7/3*x2*x4^2 + 7/2*x3^2*x4");
  CHECK(Polynomial::parse(p.to_string()) == p);
  CHECK(Polynomial::parse("x_1*y_1") == Polynomial::parse("x1*y1"));
  CHECK(Polynomial::parse("0").is_zero());
  CHECK(Polynomial::parse("x1 - x1").is_zero());
  CHECK(Polynomial::parse("2 - 3*x1").to_string() == "-3*x1 + 2");
  CHECK_THROWS(Polynomial::parse("x1 +"));
  CHECK_THROWS(Polynomial::parse("z3"));
}

TEST_CASE("leading term") {
  CHECK(leading_term(gen_f_x2(5), lex).monomial == mono("x1*x4"));
  CHECK(leading_term(gen_f_x2(5), lex).coeff == 2);
  CHECK(leading_term(gen_f_x2(4), revlex).monomial == mono("x2^2"));
  CHECK(leading_term(gen_f_x2(4), revlex).coeff == 2);
  CHECK(leading_term(Polynomial::parse("3*x2*y5"), lex).coeff == 3);
  CHECK_THROWS_AS(Polynomial().leading_term(), std::domain_error);
  for (int n = 3; n <= 20; ++n) {
    CHECK(leading_term(gen_f_x2(n), lex).monomial == mono("x1*x" + std::to_string(n - 1)));
    CHECK(leading_term(gen_f_xy(n), revlex).monomial == mono("x" + std::to_string(n - 1) + "*y1"));
  }
}

TEST_CASE("arithmetic") {
  const Polynomial a = Polynomial::parse("x1 + x2");
  CHECK(a * a == Polynomial::parse("x1^2 + 2*x1*x2 + x2^2"));
  CHECK(a - a == Polynomial());
  CHECK((a * Rational(1, 2)).to_string() == "1/2*x2 + 1/2*x1");
  CHECK(Polynomial::parse("2*x1 + 4*x2").monic() == Polynomial::parse("x2 + 1/2*x1"));
  CHECK(Polynomial::parse("2*x1 + 4*x2").is_scalar_multiple_of(Polynomial::parse("-x1 - 2*x2")));
  Polynomial b = Polynomial::parse("x1*x3 + x2^2");
  b.subtract_multiple(1, mono("x1"), Polynomial::parse("x3"));
  CHECK(b == Polynomial::parse("x2^2"));
  CHECK(a.with_order(revlex) == a);
}

TEST_CASE("derivation") {
  CHECK(derive(Polynomial::parse("x1^2")) == Polynomial::parse("2*x1*x2"));
  CHECK(derive(Polynomial::parse("5")).is_zero());
  CHECK(derive(Polynomial::parse("x1*y1")) == Polynomial::parse("x2*y1 + x1*y2"));
  CHECK(derive(Polynomial::parse("x1^2"), 2) == Polynomial::parse("2*x1*x3 + 2*x2^2"));
}

TEST_CASE("derivation raises weight and keeps degree") {
  std::mt19937 rng(7);
  const auto pool = sample_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < 500; ++t) {
    const int w = pool[pick(rng)].weight();
    auto same = monomials_of_weight(w, Ambient::xy(), lex);
    std::vector<Term> terms;
    for (int r = 0; r < 3; ++r) terms.push_back({same[static_cast<std::size_t>(rng() % same.size())], coef(rng)});
    const Polynomial p(terms, lex);
    if (p.is_zero()) continue;
    const Polynomial d = derive(p);
    if (p.homogeneous_weight() == 0) {
      CHECK(d.is_zero());
      continue;
    }
    REQUIRE_FALSE(d.is_zero());
    CHECK(d.homogeneous_weight() == *p.homogeneous_weight() + 1);
    CHECK(d.degree() == p.degree());
  }
}

TEST_CASE("generator families") {
  CHECK(gen_f_x2(2) == Polynomial::parse("x1^2"));
  CHECK(gen_f_x2(4) == Polynomial::parse("2*x1*x3 + 2*x2^2"));
  CHECK(gen_f_x2(5) == Polynomial::parse("2*x1*x4 + 6*x2*x3"));
  CHECK(gen_f_xy(2) == Polynomial::parse("x1*y1"));
  CHECK(gen_f_xy(3) == Polynomial::parse("x2*y1 + x1*y2"));
  CHECK(gen_f_xy(4) == Polynomial::parse("x3*y1 + 2*x2*y2 + x1*y3"));
  CHECK_THROWS_AS(gen_f_x2(1), std::invalid_argument);
  CHECK_THROWS_AS(gen_f_xy(0), std::invalid_argument);
}

TEST_CASE("binomial form equals iterated derivative up to n = 40") {
  Polynomial x2 = Polynomial::parse("x1^2");
  Polynomial xy = Polynomial::parse("x1*y1");
  for (int n = 2; n <= 40; ++n) {
    CHECK(gen_f_x2(n) == x2);
    CHECK(gen_f_xy(n) == xy);
    x2 = derive(x2);
    xy = derive(xy);
  }
}

TEST_CASE("ambient and monomial listing") {
  CHECK(monomials_of_weight(4, Ambient::x_only(), lex).size() == 5);
  CHECK(monomials_of_weight(2, Ambient::xy(), lex).size() == 5);
  CHECK(monomials_of_weight(0, Ambient::xy(), lex).size() == 1);
  CHECK(monomials_of_weight(3, Ambient::x_only(2), lex).size() == 1);
  const auto l = monomials_of_weight(6, Ambient::xy(), revlex);
  for (std::size_t i = 1; i < l.size(); ++i) CHECK(revlex.greater(l[i - 1], l[i]));
  CHECK(Ambient::xy(1, 3).contains(Variable::y(3)));
  CHECK_FALSE(Ambient::xy(1, 3).contains(Variable::y(2)));
  CHECK_FALSE(Ambient::x_only().contains(Variable::y(1)));
}
