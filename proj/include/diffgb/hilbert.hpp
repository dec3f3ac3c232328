#ifndef DIFFGB_HILBERT_HPP
#define DIFFGB_HILBERT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffgb/polyring.hpp"
#include "diffgb/qseries.hpp"

namespace diffgb {

/// Monomial ideal given by an infinite generator family, decided by a
/// predicate on the monomial's parts (variable indices with multiplicity).
///
///   max_products(n, l)   in k[x_l, ...]:  x_{i_1}...x_{i_n}, i_j >= l
///   size_vs_smallest(j)  in k[x_j, ...]:  x_{i_1}...x_{i_k} x_k,
///                                         i_1 >= ... >= i_k >= k >= j
///   gap2(k)              in k[x_k, ...]:  x_i^2, x_i x_{i+1}, i >= k
///   node(n0)             in k[x_i, y_j : j >= n0]:
///                                         x_{i_1}...x_{i_k} y_k, k >= n0
class IdealPattern {
 public:
  enum class Kind { MaxProducts, SizeVsSmallest, Gap2, Node };

  /// n >= 0 (n = 0 is the unit ideal), l >= 1.
  static IdealPattern max_products(int n, int l);
  static IdealPattern size_vs_smallest(int j);
  static IdealPattern gap2(int k);
  static IdealPattern node(int n0);

  Kind kind() const { return kind_; }
  std::string name() const;
  Ambient ambient() const;

  /// Membership of a monomial of the ambient ring; throws
  /// std::invalid_argument for monomials outside it.
  bool contains(const Monomial& m) const;
  /// Same predicate on descending part lists (x indices, y indices).
  bool contains_parts(std::span<const int> x_parts, std::span<const int> y_parts = {}) const;

  /// Divisibility-minimal members of weight <= W.
  std::vector<Monomial> minimal_generators(int W, const MonomialOrder& ord) const;

 private:
  IdealPattern(Kind k, int a, int b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  int a_;
  int b_;
};

/// Standard monomials of weight w.
Integer standard_monomial_dim(const IdealPattern& p, int w);
/// Standard monomial counts for every weight 0..N.
std::vector<Integer> standard_monomial_dims(const IdealPattern& p, int N);
/// HP(R/I) truncated at N.
QSeries hp_truncated(const IdealPattern& p, int N);

/// Brute-force count over all monomials of weight w; a test oracle for
/// standard_monomial_dim.
Integer standard_monomial_dim_by_enumeration(const IdealPattern& p, int w);

/// One instance of HP(R/I) = HP(R/(I + v)) + q^{wt v} HP(R/(I : v)) with the
/// quotients realized as the named patterns:
///   max_products(n, l):  I+x_l -> max_products(n, l+1), I:x_l -> max_products(n-1, l)
///   size_vs_smallest(j): I+x_j -> size_vs_smallest(j+1), I:x_j -> max_products(j, j)
///   node(n0):            I+y_n0 -> node(n0+1),
///                        I:y_n0 -> max_products(n0, 1) (x) k[y_n0, y_n0+1, ...]
/// exponent_shift offsets the power of q (nonzero gives a negative control).
struct ColonInstance {
  IdealPattern::Kind kind;
  int first;
  int second = 0;
  int exponent_shift = 0;

  static ColonInstance max_products(int n, int l) { return {IdealPattern::Kind::MaxProducts, n, l}; }
  static ColonInstance size_vs_smallest(int j) { return {IdealPattern::Kind::SizeVsSmallest, j}; }
  static ColonInstance node(int n0) { return {IdealPattern::Kind::Node, n0}; }

  Variable distinguished() const;
  std::string name() const;
};

struct ColonCheck {
  QSeries whole;
  QSeries without_v;
  /// HP(R/(I : v)), not yet multiplied by q^{wt v}.
  QSeries colon;
  bool holds;
  std::optional<int> first_mismatch;
  /// Node instances only: colon equals prod_{i>=1} 1/(1-q^i).
  std::optional<bool> colon_closed_form;
};

/// Throws std::invalid_argument for the Gap2 kind, which has no instance.
ColonCheck colon_recursion(const ColonInstance& inst, int N);
bool verify_colon_recursion(const ColonInstance& inst, int N);

/// (dims of R/(I + v), dims of R/(I : v)) for weights 0..N obtained by
/// enumerating monomials and testing membership directly.
std::pair<std::vector<Integer>, std::vector<Integer>> colon_split_by_enumeration(const IdealPattern& p, Variable v,
                                                                                 int N);

}  // namespace diffgb

#endif  // DIFFGB_HILBERT_HPP
