#include "diffgb/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "diffgb/partitions.hpp"

namespace diffgb {

IdealPattern IdealPattern::max_products(int n, int l) {
  if (n < 0 || l < 1) throw std::invalid_argument("max_products: need n >= 0, l >= 1");
  return IdealPattern(Kind::MaxProducts, n, l);
}

IdealPattern IdealPattern::size_vs_smallest(int j) {
  if (j < 1) throw std::invalid_argument("size_vs_smallest: need j >= 1");
  return IdealPattern(Kind::SizeVsSmallest, j, 0);
}

IdealPattern IdealPattern::gap2(int k) {
  if (k < 1) throw std::invalid_argument("gap2: need k >= 1");
  return IdealPattern(Kind::Gap2, k, 0);
}

IdealPattern IdealPattern::node(int n0) {
  if (n0 < 1) throw std::invalid_argument("node: need n0 >= 1");
  return IdealPattern(Kind::Node, n0, 0);
}

std::string IdealPattern::name() const {
  switch (kind_) {
    case Kind::MaxProducts:
      return "MaxProducts(n=" + std::to_string(a_) + ",l=" + std::to_string(b_) + ")";
    case Kind::SizeVsSmallest:
      return "SizeVsSmallest(j=" + std::to_string(a_) + ")";
    case Kind::Gap2:
      return "Gap2(k=" + std::to_string(a_) + ")";
    case Kind::Node:
      return "NodeJ(n0=" + std::to_string(a_) + ")";
  }
  return {};
}

Ambient IdealPattern::ambient() const {
  switch (kind_) {
    case Kind::MaxProducts:
      return Ambient::x_only(b_);
    case Kind::SizeVsSmallest:
    case Kind::Gap2:
      return Ambient::x_only(a_);
    case Kind::Node:
      return Ambient::xy(1, a_);
  }
  return {};
}

bool IdealPattern::contains_parts(std::span<const int> x, std::span<const int> y) const {
  switch (kind_) {
    case Kind::MaxProducts:
      return static_cast<int>(x.size()) >= a_;
    case Kind::SizeVsSmallest:
      // Some part value v >= j occurs with at least v further parts >= v.
      for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p] < a_) continue;
        if (p + 1 < x.size() && x[p + 1] == x[p]) continue;  // last copy of this value
        if (static_cast<int>(p) + 1 >= x[p] + 1) return true;
      }
      return false;
    case Kind::Gap2:
      for (std::size_t p = 0; p + 1 < x.size(); ++p)
        if (x[p + 1] >= a_ && x[p] - x[p + 1] <= 1) return true;
      return false;
    case Kind::Node: {
      if (y.empty()) return false;
      const int smallest_y = *std::min_element(y.begin(), y.end());
      return smallest_y >= a_ && smallest_y <= static_cast<int>(x.size());
    }
  }
  return false;
}

bool IdealPattern::contains(const Monomial& m) const {
  const Ambient amb = ambient();
  if (!amb.contains(m)) throw std::invalid_argument(name() + ": monomial " + m.to_string() + " outside " + amb.to_string());
  std::vector<int> x, y;
  for (const auto& f : m.factors()) {
    auto& dst = f.var.family == Family::X ? x : y;
    for (int e = 0; e < f.exp; ++e) dst.push_back(f.var.index);
  }
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  return contains_parts(x, y);
}

std::vector<Monomial> IdealPattern::minimal_generators(int W, const MonomialOrder& ord) const {
  const Ambient amb = ambient();
  std::vector<Monomial> out;
  for (int w = 0; w <= W; ++w) {
    for (const auto& m : monomials_of_weight(w, amb, ord)) {
      if (!contains(m)) continue;
      const bool minimal = std::none_of(m.factors().begin(), m.factors().end(), [&](const Monomial::Factor& f) {
        return contains(*Monomial::of(f.var).quotient_of(m));
      });
      if (minimal) out.push_back(m);
    }
  }
  return out;
}

namespace {

Integer x_only_dim(const IdealPattern& p, int w) {
  const int from = *p.ambient().x_from;
  Integer count = 0;
  // Every prefix divides the final monomial, so a prefix inside the ideal
  // cuts the whole subtree.
  for_each_partition(
      w, from, [&](std::span<const int> prefix) { return !p.contains_parts(prefix); },
      [&](std::span<const int> parts) {
        if (!p.contains_parts(parts)) ++count;
      });
  return count;
}

// Node membership depends only on the number of x parts and the smallest y
// part, so standard monomials are counted by those two statistics.
std::vector<Integer> node_dims(const IdealPattern& p, int N) {
  const int n0 = *p.ambient().y_from;
  const auto by_size = count_table_by_size(N);
  const auto by_smallest = count_table_by_smallest(N);
  std::vector<Integer> dims(static_cast<std::size_t>(N) + 1, Integer(0));
  for (int w = 0; w <= N; ++w) {
    Integer total = 0;
    for (int a = 0; a <= w; ++a) {
      const int b = w - a;
      for (int d = 0; d <= a; ++d) {
        if (by_size[a][d] == 0) continue;
        const std::vector<int> xs(static_cast<std::size_t>(d), 1);
        Integer y_ways = 0;
        if (b == 0) {
          if (!p.contains_parts(xs, {})) y_ways = 1;
        } else {
          for (int k = n0; k <= b; ++k) {
            if (by_smallest[b][k] == 0) continue;
            const int ys[1] = {k};
            if (!p.contains_parts(xs, ys)) y_ways += by_smallest[b][k];
          }
        }
        total += by_size[a][d] * y_ways;
      }
    }
    dims[w] = total;
  }
  return dims;
}

}  // namespace

std::vector<Integer> standard_monomial_dims(const IdealPattern& p, int N) {
  if (N < 0) throw std::invalid_argument("order must be >= 0");
  if (p.kind() == IdealPattern::Kind::Node) return node_dims(p, N);
  std::vector<Integer> dims;
  for (int w = 0; w <= N; ++w) dims.push_back(x_only_dim(p, w));
  return dims;
}

Integer standard_monomial_dim(const IdealPattern& p, int w) {
  if (w < 0) throw std::invalid_argument("weight must be >= 0");
  if (p.kind() == IdealPattern::Kind::Node) return node_dims(p, w)[w];
  return x_only_dim(p, w);
}

QSeries hp_truncated(const IdealPattern& p, int N) { return QSeries(standard_monomial_dims(p, N)); }

Integer standard_monomial_dim_by_enumeration(const IdealPattern& p, int w) {
  Integer c = 0;
  for (const auto& m : monomials_of_weight(w, p.ambient(), MonomialOrder::weighted_lex()))
    if (!p.contains(m)) ++c;
  return c;
}

Variable ColonInstance::distinguished() const {
  switch (kind) {
    case IdealPattern::Kind::MaxProducts:
      return Variable::x(second);
    case IdealPattern::Kind::SizeVsSmallest:
      return Variable::x(first);
    case IdealPattern::Kind::Node:
      return Variable::y(first);
    case IdealPattern::Kind::Gap2:
      break;
  }
  throw std::invalid_argument("no colon recursion instance for Gap2");
}

std::string ColonInstance::name() const {
  std::string s;
  switch (kind) {
    case IdealPattern::Kind::MaxProducts:
      s = "H_n^l recursion (n=" + std::to_string(first) + ", l=" + std::to_string(second) + ")";
      break;
    case IdealPattern::Kind::SizeVsSmallest:
      s = "H_j recursion (j=" + std::to_string(first) + ")";
      break;
    case IdealPattern::Kind::Node:
      s = "HP_n recursion (n=" + std::to_string(first) + ")";
      break;
    case IdealPattern::Kind::Gap2:
      s = "Gap2 (no instance)";
      break;
  }
  if (exponent_shift != 0) s += " shifted by " + std::to_string(exponent_shift);
  return s;
}

ColonCheck colon_recursion(const ColonInstance& inst, int N) {
  const Variable v = inst.distinguished();
  std::optional<QSeries> whole, without, colon;
  std::optional<bool> closed;
  switch (inst.kind) {
    case IdealPattern::Kind::MaxProducts: {
      const int n = inst.first, l = inst.second;
      whole = hp_truncated(IdealPattern::max_products(n, l), N);
      without = hp_truncated(IdealPattern::max_products(n, l + 1), N);
      colon = hp_truncated(IdealPattern::max_products(n - 1, l), N);
      break;
    }
    case IdealPattern::Kind::SizeVsSmallest: {
      const int j = inst.first;
      whole = hp_truncated(IdealPattern::size_vs_smallest(j), N);
      without = hp_truncated(IdealPattern::size_vs_smallest(j + 1), N);
      colon = hp_truncated(IdealPattern::max_products(j, j), N);
      break;
    }
    case IdealPattern::Kind::Node: {
      const int n = inst.first;
      whole = hp_truncated(IdealPattern::node(n), N);
      without = hp_truncated(IdealPattern::node(n + 1), N);
      QSeries y_ring = QSeries::one(N);
      for (int i = n; i <= N; ++i) y_ring = y_ring * inv_one_minus(i, N);
      colon = hp_truncated(IdealPattern::max_products(n, 1), N) * y_ring;
      closed = (*colon == partition_gf(N));
      break;
    }
    case IdealPattern::Kind::Gap2:
      break;
  }
  const QSeries rhs = *without + colon->shifted(v.weight() + inst.exponent_shift);
  std::optional<int> mismatch;
  for (int i = 0; i <= N; ++i)
    if ((*whole)[i] != rhs[i]) {
      mismatch = i;
      break;
    }
  return ColonCheck{*whole, *without, *colon, !mismatch.has_value(), mismatch, closed};
}

bool verify_colon_recursion(const ColonInstance& inst, int N) { return colon_recursion(inst, N).holds; }

std::pair<std::vector<Integer>, std::vector<Integer>> colon_split_by_enumeration(const IdealPattern& p, Variable v,
                                                                                 int N) {
  const Ambient amb = p.ambient();
  if (!amb.contains(v)) throw std::invalid_argument("variable outside the pattern's ring");
  const Monomial mv = Monomial::of(v);
  std::vector<Integer> plus, colon;
  for (int w = 0; w <= N; ++w) {
    Integer a = 0, b = 0;
    for (const auto& m : monomials_of_weight(w, amb, MonomialOrder::weighted_lex())) {
      if (!mv.divides(m) && !p.contains(m)) ++a;
      if (!p.contains(m * mv)) ++b;
    }
    plus.push_back(a);
    colon.push_back(b);
  }
  return {plus, colon};
}

}  // namespace diffgb
