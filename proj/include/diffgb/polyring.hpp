#ifndef DIFFGB_POLYRING_HPP
#define DIFFGB_POLYRING_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffgb {

using Rational = mpq_class;

enum class Family : std::uint8_t { X = 0, Y = 1 };

/// A variable x_i or y_i of weight i. Comparison follows the ranking
/// x_1 > x_2 > ... > y_1 > y_2 > ...: a < b means a is ranked higher.
struct Variable {
  Family family;
  int index;

  static Variable x(int i);
  static Variable y(int i);

  int weight() const { return index; }
  /// The image under D: x_i -> x_{i+1}, y_i -> y_{i+1}.
  Variable shifted() const { return {family, index + 1}; }
  std::string to_string() const;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Power product with positive exponents, stored sparsely in ranking order.
class Monomial {
 public:
  struct Factor {
    Variable var;
    int exp;
    friend auto operator<=>(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  /// Sorts and merges factors, drops zero exponents, rejects negative ones.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(Variable v, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  int weight() const { return weight_; }
  int degree() const { return degree_; }
  int exponent(Variable v) const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& other) const;
  /// other / *this when it divides, else nullopt.
  std::optional<Monomial> quotient_of(const Monomial& other) const;
  bool is_coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  /// Order-independent canonical comparison, for use as a container key.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

  /// "x2*x4^2*y1"; the unit monomial renders as "1".
  std::string to_string() const;

 private:
  void recompute();

  std::vector<Factor> factors_;
  int weight_ = 0;
  int degree_ = 0;
};

/// Weight-graded order, ties broken lexicographically or reverse
/// lexicographically along the variable ranking.
class MonomialOrder {
 public:
  enum class Kind { WeightedLex, WeightedRevLex };

  static MonomialOrder weighted_lex() { return MonomialOrder(Kind::WeightedLex); }
  static MonomialOrder weighted_revlex() { return MonomialOrder(Kind::WeightedRevLex); }
  /// "wlex" or "wrevlex".
  static MonomialOrder parse(std::string_view name);

  Kind kind() const { return kind_; }
  std::string_view name() const { return kind_ == Kind::WeightedLex ? "wlex" : "wrevlex"; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial over the rationals. Terms are kept sorted by the
/// attached order, largest first, so the leading term is terms().front().
class Polynomial {
 public:
  explicit Polynomial(MonomialOrder ord = MonomialOrder::weighted_lex()) : order_(ord) {}
  /// Combines like terms and drops zero coefficients.
  Polynomial(std::vector<Term> terms, MonomialOrder ord);

  static Polynomial constant(const Rational& c, MonomialOrder ord = MonomialOrder::weighted_lex());
  static Polynomial term(const Monomial& m, const Rational& c = 1,
                         MonomialOrder ord = MonomialOrder::weighted_lex());
  static Polynomial variable(Variable v, MonomialOrder ord = MonomialOrder::weighted_lex());

  /// Parses "7/3*x2*x4^2 - x3^2*x4 + 2".
  static Polynomial parse(std::string_view text, MonomialOrder ord = MonomialOrder::weighted_lex());

  const MonomialOrder& order() const { return order_; }
  Polynomial with_order(const MonomialOrder& ord) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Throws std::domain_error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Rational coefficient(const Monomial& m) const;
  std::vector<Monomial> support() const;

  /// Common weight of all terms; nullopt when not weighted-homogeneous or zero.
  std::optional<int> homogeneous_weight() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_weight().has_value(); }
  /// Largest usual degree among the terms (0 for the zero polynomial).
  int degree() const;

  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& p, const Monomial& m);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Removes and returns the leading term.
  Term pop_leading_term();

  /// a - c * m * b in one merge pass; the core step of division.
  void subtract_multiple(const Rational& c, const Monomial& m, const Polynomial& b);

  /// Same set of terms, regardless of the attached order.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// True when b = c * a for some nonzero rational c.
  bool is_scalar_multiple_of(const Polynomial& other) const;

  std::string to_string() const;

 private:
  void normalize();

  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Leading term of p under ord (p need not carry ord).
Term leading_term(const Polynomial& p, const MonomialOrder& ord);

/// The derivation D(x_i) = x_{i+1}, D(y_i) = y_{i+1}, extended by Leibniz.
Polynomial derive(const Polynomial& p);
Polynomial derive(const Polynomial& p, int times);

/// f_n = D^{n-2}(x_1^2) = sum_i C(n-2, i) x_{1+i} x_{n-1-i}; throws for n < 2.
Polynomial gen_f_x2(int n, MonomialOrder ord = MonomialOrder::weighted_lex());
/// f_n = D^{n-2}(x_1 y_1) = sum_i C(n-2, i) x_{1+i} y_{n-1-i}; throws for n < 2.
Polynomial gen_f_xy(int n, MonomialOrder ord = MonomialOrder::weighted_lex());

/// The ambient ring k[x_i : i >= x_from, y_j : j >= y_from]; either family
/// may be absent.
struct Ambient {
  std::optional<int> x_from = 1;
  std::optional<int> y_from;

  static Ambient x_only(int from = 1) { return {from, std::nullopt}; }
  static Ambient xy(int x_from = 1, int y_from = 1) { return {x_from, y_from}; }

  bool contains(Variable v) const;
  bool contains(const Monomial& m) const;
  /// Variables of weight <= w in ranking order.
  std::vector<Variable> variables_up_to(int w) const;
  std::string to_string() const;
};

/// Every monomial of the given weight in the ambient ring, descending
/// under ord.
std::vector<Monomial> monomials_of_weight(int w, const Ambient& ambient, const MonomialOrder& ord);

}  // namespace diffgb

#endif  // DIFFGB_POLYRING_HPP
