#ifndef DIFFGB_QSERIES_HPP
#define DIFFGB_QSERIES_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace diffgb {

using Integer = mpz_class;

/// Power series in q truncated at an inclusive order N, with exact integer
/// coefficients. Binary operations truncate to the smaller of the two orders.
class QSeries {
 public:
  /// Zero series of the given order.
  explicit QSeries(int order);
  explicit QSeries(std::vector<Integer> coeffs);

  static QSeries one(int order);
  /// c * q^exponent; zero when exponent exceeds the order.
  static QSeries monomial(int exponent, const Integer& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Restriction to a smaller order.
  QSeries truncated(int order) const;
  /// Multiplication by q^e (e >= 0), keeping the order.
  QSeries shifted(int e) const;

  bool is_nonnegative() const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Integer& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Integer& c) { return a *= c; }
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// "1 + q + 2*q^4 + O(q^7)"
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

/// 1/(1 - q^j) truncated at N. Throws std::invalid_argument for j < 1.
QSeries inv_one_minus(int j, int N);

/// prod_{i=1..N} 1/(1 - q^i): the unrestricted partition generating function.
QSeries partition_gf(int N);

/// 1 / ((1-q)(1-q^2)...(1-q^m)) truncated at N; m = 0 gives 1.
QSeries inv_q_pochhammer(int m, int N);

/// 1 + q^l/(1-q) + ... + q^{(n-1)l}/((1-q)...(1-q^{n-1})).
/// Counts partitions with parts >= l and at most n-1 parts.
QSeries series_hnl(int n, int l, int N);

/// 1 + sum_{m>=1} q^{m(m+k-1)} / ((1-q)...(1-q^m)).
QSeries series_hk_closed(int k, int N);

/// 1/(1-q) * prod_{i>=1} 1/(1-q^i).
QSeries series_node(int N);

/// prod_{i=1}^{2j-1} 1/(1-q^i) * prod_{i>=1} 1/(1-q^i): two colors allowed on
/// 1..2j-1, red only elsewhere. Equals series_node for j = 1.
QSeries series_two_color_left(int j, int N);

/// prod_{i>=j} 1/(1-q^i) * prod_{i=j}^{2j-1} 1/(1-q^i): the variant where
/// every part is at least j.
QSeries series_two_color_shifted(int j, int N);

/// Coefficients (A_{k+i}, B_{k+i+1}) with
///   H_k = A_{k+i} H_{k+i} + B_{k+i+1} H_{k+i+1},
/// starting from A_{k+1} = 1, B_{k+2} = q^k.
std::pair<QSeries, QSeries> series_ab_recursion(int k, int i, int N);

void to_json(nlohmann::json& j, const QSeries& s);
void from_json(const nlohmann::json& j, QSeries& s);

}  // namespace diffgb

#endif  // DIFFGB_QSERIES_HPP
