#include <doctest.h>

#include "diffgb/groebner.hpp"
#include "diffgb/hilbert.hpp"
#include "diffgb/partitions.hpp"

using namespace diffgb;

namespace {

Monomial M(std::string_view s) { return Polynomial::parse(s).leading_monomial(); }

}  // namespace

TEST_CASE("pattern membership") {
  const auto b = IdealPattern::size_vs_smallest(1);
  CHECK(b.contains(M("x1^2")));
  CHECK(b.contains(M("x3*x2*x2")));
  CHECK_FALSE(b.contains(M("x4*x2")));
  CHECK_FALSE(b.contains(M("x3^2")));
  CHECK(b.contains(M("x3^3*x5")));

  const auto c = IdealPattern::gap2(1);
  CHECK(c.contains(M("x3*x4")));
  CHECK(c.contains(M("x5^2")));
  CHECK_FALSE(c.contains(M("x1*x3*x6")));

  const auto d = IdealPattern::node(1);
  CHECK(d.contains(M("x1*y1")));
  CHECK(d.contains(M("x5*x2*y2")));
  CHECK_FALSE(d.contains(M("x5*y2")));
  CHECK_FALSE(d.contains(M("y1^3")));
  CHECK_THROWS_AS(IdealPattern::gap2(2).contains(M("x1")), std::invalid_argument);

  const auto a = IdealPattern::max_products(3, 2);
  CHECK(a.contains(M("x2^2*x7")));
  CHECK_FALSE(a.contains(M("x9*x2")));
  CHECK(IdealPattern::max_products(0, 1).contains(Monomial()));
}

TEST_CASE("minimal generators") {
  const auto lex = MonomialOrder::weighted_lex();
  const auto revlex = MonomialOrder::weighted_revlex();
  const auto g = IdealPattern::gap2(1).minimal_generators(5, revlex);
  CHECK(g.size() == 4);  // x1^2, x1x2, x2^2, x2x3
  const auto n = IdealPattern::node(1).minimal_generators(3, revlex);
  CHECK(n == std::vector<Monomial>{M("x1*y1"), M("x2*y1")});
  const auto b = IdealPattern::size_vs_smallest(1).minimal_generators(6, lex);
  CHECK(std::find(b.begin(), b.end(), M("x2^3")) != b.end());
  CHECK(std::find(b.begin(), b.end(), M("x1*x5")) != b.end());
}

TEST_CASE("standard monomial counts") {
  CHECK(standard_monomial_dim(IdealPattern::size_vs_smallest(1), 6) == 3);
  CHECK(standard_monomial_dim(IdealPattern::node(1), 2) == 4);
  for (auto p : {IdealPattern::gap2(1), IdealPattern::node(2), IdealPattern::max_products(2, 3),
                 IdealPattern::size_vs_smallest(2)})
    CHECK(standard_monomial_dim(p, 0) == 1);
  CHECK_THROWS_AS(standard_monomial_dim(IdealPattern::gap2(1), -1), std::invalid_argument);
}

TEST_CASE("fast counts match monomial enumeration") {
  for (int w = 0; w <= 14; ++w) {
    for (auto p : {IdealPattern::gap2(1), IdealPattern::gap2(2), IdealPattern::size_vs_smallest(1),
                   IdealPattern::size_vs_smallest(3), IdealPattern::max_products(3, 2), IdealPattern::node(1),
                   IdealPattern::node(2)})
      CHECK(standard_monomial_dim(p, w) == standard_monomial_dim_by_enumeration(p, w));
  }
}

TEST_CASE("bijections with partition counts") {
  const auto b = standard_monomial_dims(IdealPattern::size_vs_smallest(1), 60);
  const auto c = standard_monomial_dims(IdealPattern::gap2(2), 60);
  const auto d = standard_monomial_dims(IdealPattern::node(1), 60);
  const auto a = standard_monomial_dims(IdealPattern::max_products(4, 2), 60);
  for (int w = 0; w <= 60; ++w) {
    CHECK(b[w] == count_size_le_smallest(w, 1));
    CHECK(c[w] == count_gap2(w, 2));
    CHECK(d[w] == count_2c_right(w, 1));
    CHECK(a[w] == count_minpart_maxsize(w, 2, 3));
  }
}

TEST_CASE("hp series") {
  const int N = 40;
  CHECK(hp_truncated(IdealPattern::max_products(3, 2), N) == series_hnl(3, 2, N));
  CHECK(hp_truncated(IdealPattern::size_vs_smallest(1), N) == series_hk_closed(1, N));
  CHECK(hp_truncated(IdealPattern::node(1), N) == series_node(N));
  for (int n = 1; n <= 6; ++n) CHECK(hp_truncated(IdealPattern::max_products(n, 1), N) == inv_q_pochhammer(n - 1, N));
}

TEST_CASE("colon recursions") {
  CHECK(verify_colon_recursion(ColonInstance::max_products(3, 2), 30));
  CHECK(verify_colon_recursion(ColonInstance::node(1), 30));
  CHECK(verify_colon_recursion(ColonInstance::size_vs_smallest(2), 30));
  auto wrong = ColonInstance::node(1);
  wrong.exponent_shift = 1;
  CHECK_FALSE(verify_colon_recursion(wrong, 30));
  const auto chk = colon_recursion(ColonInstance::node(2), 30);
  CHECK(chk.holds);
  REQUIRE(chk.colon_closed_form.has_value());
  CHECK(*chk.colon_closed_form);
  CHECK_THROWS_AS(colon_recursion(ColonInstance{IdealPattern::Kind::Gap2, 1}, 10), std::invalid_argument);
}

TEST_CASE("colon quotients match direct enumeration") {
  const int N = 12;
  auto check = [&](const IdealPattern& p, Variable v, const IdealPattern& plus, const std::vector<Integer>& colon) {
    const auto [a, b] = colon_split_by_enumeration(p, v, N);
    const auto pd = standard_monomial_dims(plus, N);
    for (int w = 0; w <= N; ++w) {
      CHECK(a[w] == pd[w]);
      CHECK(b[w] == colon[w]);
    }
  };
  check(IdealPattern::max_products(3, 2), Variable::x(2), IdealPattern::max_products(3, 3),
        standard_monomial_dims(IdealPattern::max_products(2, 2), N));
  check(IdealPattern::size_vs_smallest(2), Variable::x(2), IdealPattern::size_vs_smallest(3),
        standard_monomial_dims(IdealPattern::max_products(2, 2), N));
  check(IdealPattern::node(1), Variable::y(1), IdealPattern::node(2), partition_gf(N).coeffs());
}

TEST_CASE("groebner counts agree with the node pattern") {
  const auto revlex = MonomialOrder::weighted_revlex();
  const int W = 7;
  const auto gens = differential_generators(Polynomial::parse("x1*y1", revlex), W);
  const auto counts = standard_monomial_counts(initial_generators(buchberger_truncated(gens, revlex, W)), Ambient::xy());
  const auto dims = standard_monomial_dims(IdealPattern::node(1), W);
  for (int w = 0; w <= W; ++w) CHECK(Integer(static_cast<unsigned long>(counts[w])) == dims[w]);
}
