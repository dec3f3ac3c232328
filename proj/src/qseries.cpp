#include "diffgb/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diffgb {

namespace {

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

// In-place division by (1 - q^j).
void divide_one_minus(std::vector<Integer>& c, int j) {
  for (std::size_t m = static_cast<std::size_t>(j); m < c.size(); ++m) c[m] += c[m - j];
}

}  // namespace

QSeries::QSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

QSeries::QSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

QSeries QSeries::one(int order) { return monomial(0, 1, order); }

QSeries QSeries::monomial(int exponent, const Integer& c, int order) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  QSeries s(order);
  if (exponent <= order) s.coeffs_[exponent] = c;
  return s;
}

QSeries QSeries::truncated(int order) const {
  require_order(order);
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return QSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries QSeries::shifted(int e) const {
  if (e < 0) throw std::invalid_argument("negative shift");
  QSeries s(order());
  for (int i = 0; i + e <= order(); ++i) s.coeffs_[i + e] = coeffs_[i];
  return s;
}

bool QSeries::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

QSeries& QSeries::operator+=(const QSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  QSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  os << " + O(q^" << order() + 1 << ")";
  return os.str();
}

QSeries inv_one_minus(int j, int N) {
  if (j < 1) throw std::invalid_argument("inv_one_minus: j must be >= 1");
  require_order(N);
  std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
  for (int m = 0; m <= N; m += j) c[m] = 1;
  return QSeries(std::move(c));
}

QSeries inv_q_pochhammer(int m, int N) {
  require_order(N);
  if (m < 0) throw std::invalid_argument("inv_q_pochhammer: m must be >= 0");
  std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
  c[0] = 1;
  for (int j = 1; j <= std::min(m, N); ++j) divide_one_minus(c, j);
  return QSeries(std::move(c));
}

QSeries partition_gf(int N) { return inv_q_pochhammer(N, N); }

QSeries series_hnl(int n, int l, int N) {
  if (n < 1 || l < 1) throw std::invalid_argument("series_hnl: n and l must be >= 1");
  QSeries s(N);
  for (int m = 0; m < n; ++m) {
    const long long e = static_cast<long long>(m) * l;
    if (e > N) break;
    s += inv_q_pochhammer(m, N).shifted(static_cast<int>(e));
  }
  return s;
}

QSeries series_hk_closed(int k, int N) {
  if (k < 1) throw std::invalid_argument("series_hk_closed: k must be >= 1");
  QSeries s = QSeries::one(N);
  for (int m = 1;; ++m) {
    const long long e = static_cast<long long>(m) * (m + k - 1);
    if (e > N) break;
    s += inv_q_pochhammer(m, N).shifted(static_cast<int>(e));
  }
  return s;
}

QSeries series_node(int N) { return inv_one_minus(1, N) * partition_gf(N); }

QSeries series_two_color_left(int j, int N) {
  if (j < 1) throw std::invalid_argument("series_two_color_left: j must be >= 1");
  return inv_q_pochhammer(std::min(2 * j - 1, N), N) * partition_gf(N);
}

QSeries series_two_color_shifted(int j, int N) {
  if (j < 1) throw std::invalid_argument("series_two_color_shifted: j must be >= 1");
  std::vector<Integer> c(static_cast<std::size_t>(N) + 1, Integer(0));
  c[0] = 1;
  for (int i = j; i <= N; ++i) divide_one_minus(c, i);
  for (int i = j; i <= std::min(2 * j - 1, N); ++i) divide_one_minus(c, i);
  return QSeries(std::move(c));
}

std::pair<QSeries, QSeries> series_ab_recursion(int k, int i, int N) {
  if (k < 1) throw std::invalid_argument("series_ab_recursion: k must be >= 1");
  if (i < 1) throw std::invalid_argument("series_ab_recursion: i must be >= 1");
  // a = A_{k+step}, b = B_{k+step+1}
  QSeries a = QSeries::one(N);
  QSeries b = QSeries::monomial(k, 1, N);
  for (int step = 2; step <= i; ++step) {
    QSeries next_a = a + b;
    QSeries next_b = a.shifted(k + step - 1);
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return {std::move(a), std::move(b)};
}

void to_json(nlohmann::json& j, const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, QSeries& s) {
  const int order = j.at("order").get<int>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || static_cast<int>(arr.size()) != order + 1)
    throw std::invalid_argument("QSeries JSON: coeffs length must be order + 1");
  std::vector<Integer> c;
  c.reserve(arr.size());
  for (const auto& v : arr) c.emplace_back(v.get<std::string>());
  s = QSeries(std::move(c));
}

}  // namespace diffgb
