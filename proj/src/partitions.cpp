#include "diffgb/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diffgb {

namespace {

void require_nonneg(int n) {
  if (n < 0) throw std::invalid_argument("partition target must be >= 0");
}

void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

using Table = std::vector<std::vector<Integer>>;

// at_most[m][c] = partitions of m with at most c parts.
Table at_most_parts_table(int n) {
  Table by_size = count_table_by_size(n);
  Table t(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  for (int m = 0; m <= n; ++m) {
    Integer acc = 0;
    for (int c = 0; c <= n; ++c) {
      acc += by_size[m][c];
      t[m][c] = acc;
    }
  }
  return t;
}

// parts_at_least[m][r] = partitions of m with every part >= r, r in 1..n+1.
Table parts_at_least_table(int n) {
  Table t(n + 1, std::vector<Integer>(n + 2, Integer(0)));
  for (int m = 0; m <= n; ++m) {
    for (int r = n + 1; r >= 1; --r) {
      if (r > m) {
        t[m][r] = (m == 0) ? 1 : 0;
        continue;
      }
      t[m][r] = t[m][r + 1] + t[m - r][r];
    }
  }
  return t;
}

Integer lookup_at_most(const Table& at_most, int m, int c) {
  if (m < 0 || c < 0) return 0;
  return at_most[m][std::min<int>(c, static_cast<int>(at_most[m].size()) - 1)];
}

// Partitions of m with parts >= l and at most c parts, via exact-size counts
// after subtracting l-1 from every part.
Integer at_most_with_min(const Table& by_size, int m, int l, int c) {
  Integer total = 0;
  for (int d = 0; d <= c; ++d) {
    const long long rest = static_cast<long long>(m) - static_cast<long long>(d) * (l - 1);
    if (rest < d) break;
    total += by_size[static_cast<int>(rest)][d];
  }
  return total;
}

}  // namespace

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::optional<int> Partition::smallest() const {
  if (parts.empty()) return std::nullopt;
  return parts.back();
}

bool Partition::is_canonical() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
  }
  return true;
}

ColoredPartition ColoredPartition::canonical(std::vector<ColoredPart> parts) {
  for (const auto& p : parts) require_positive(p.value, "colored part value");
  std::sort(parts.begin(), parts.end(),
            [](const ColoredPart& a, const ColoredPart& b) { return a.rank() > b.rank(); });
  return ColoredPartition{std::move(parts)};
}

int ColoredPartition::weight() const {
  int w = 0;
  for (const auto& p : parts) w += p.value;
  return w;
}

int ColoredPartition::blue_count() const {
  return static_cast<int>(
      std::count_if(parts.begin(), parts.end(), [](const ColoredPart& p) { return p.color == Color::Blue; }));
}

std::optional<int> ColoredPartition::smallest_red() const {
  std::optional<int> r;
  for (const auto& p : parts)
    if (p.color == Color::Red) r = r ? std::min(*r, p.value) : p.value;
  return r;
}

bool ColoredPartition::is_canonical() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].value < 1) return false;
    if (i + 1 < parts.size() && parts[i].rank() < parts[i + 1].rank()) return false;
  }
  return true;
}

namespace family {

PartitionFamily unrestricted() {
  return {"unrestricted", 1, [](const Partition&) { return true; }};
}

PartitionFamily gap2(int k) {
  require_positive(k, "gap2 minimum part");
  return {"gap2(k=" + std::to_string(k) + ")", k, [k](const Partition& p) {
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
              if (p.parts[i] < k) return false;
              if (i + 1 < p.parts.size() && p.parts[i] - p.parts[i + 1] < 2) return false;
            }
            return true;
          }};
}

PartitionFamily mod5_14() {
  return {"mod5_14", 1, [](const Partition& p) {
            return std::all_of(p.parts.begin(), p.parts.end(), [](int v) { return v % 5 == 1 || v % 5 == 4; });
          }};
}

PartitionFamily minpart_maxsize(int l, int s) {
  require_positive(l, "minimum part");
  if (s < 0) throw std::invalid_argument("maximum size must be >= 0");
  return {"minpart_maxsize(l=" + std::to_string(l) + ",s=" + std::to_string(s) + ")", l,
          [l, s](const Partition& p) {
            return p.size() <= s && std::all_of(p.parts.begin(), p.parts.end(), [l](int v) { return v >= l; });
          }};
}

PartitionFamily size_le_smallest(int k) {
  require_positive(k, "shift parameter");
  return {"size_le_smallest(k=" + std::to_string(k) + ")", k, [k](const Partition& p) {
            if (p.parts.empty()) return true;
            const int s = *p.smallest();
            return s >= k && p.size() <= s - (k - 1);
          }};
}

ColoredFamily two_color_left(int j) {
  require_positive(j, "color threshold");
  return {"two_color_left(j=" + std::to_string(j) + ")", [j](const ColoredPartition& p) {
            return std::all_of(p.parts.begin(), p.parts.end(), [j](const ColoredPart& c) {
              return c.color == Color::Red || c.value <= 2 * j - 1;
            });
          }};
}

ColoredFamily two_color_right(int j) {
  require_positive(j, "color threshold");
  return {"two_color_right(j=" + std::to_string(j) + ")", [j](const ColoredPartition& p) {
            const auto red = p.smallest_red();
            return !red || p.blue_count() < *red - (j - 1);
          }};
}

ColoredFamily two_color_left_shifted(int j) {
  auto base = two_color_left(j);
  return {"two_color_left_shifted(j=" + std::to_string(j) + ")", [j, inner = base.accepts](const ColoredPartition& p) {
            return inner(p) && std::all_of(p.parts.begin(), p.parts.end(),
                                           [j](const ColoredPart& c) { return c.value >= j; });
          }};
}

ColoredFamily two_color_right_shifted(int j) {
  auto base = two_color_right(j);
  return {"two_color_right_shifted(j=" + std::to_string(j) + ")", [j, inner = base.accepts](const ColoredPartition& p) {
            return inner(p) && std::all_of(p.parts.begin(), p.parts.end(),
                                           [j](const ColoredPart& c) { return c.value >= j; });
          }};
}

}  // namespace family

void for_each_partition(int n, int min_part, const std::function<bool(std::span<const int>)>& keep_prefix,
                        const std::function<void(std::span<const int>)>& visit) {
  require_nonneg(n);
  require_positive(min_part, "minimum part");
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
      const int rest = remaining - p;
      if (rest != 0 && rest < min_part) continue;
      parts.push_back(p);
      if (keep_prefix(parts)) self(self, rest, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
}

std::vector<Partition> enum_partitions(int n, const PartitionFamily& fam) {
  require_nonneg(n);
  std::vector<Partition> out;
  for_each_partition(
      n, std::max(1, fam.min_part), [](std::span<const int>) { return true; },
      [&](std::span<const int> parts) {
        Partition p{std::vector<int>(parts.begin(), parts.end())};
        if (fam.accepts(p)) out.push_back(std::move(p));
      });
  return out;
}

std::vector<ColoredPartition> enum_colored_partitions(int n, const ColoredFamily& fam) {
  require_nonneg(n);
  std::vector<ColoredPartition> out;
  std::vector<ColoredPart> parts;
  auto rec = [&](auto&& self, int remaining, int max_rank) -> void {
    if (remaining == 0) {
      ColoredPartition p{parts};
      if (fam.accepts(p)) out.push_back(std::move(p));
      return;
    }
    for (int rank = std::min(max_rank, 2 * remaining + 1); rank >= 2; --rank) {
      const int v = rank / 2;
      parts.push_back({v, rank % 2 == 1 ? Color::Blue : Color::Red});
      self(self, remaining - v, rank);
      parts.pop_back();
    }
  };
  rec(rec, n, 2 * n + 1);
  return out;
}

std::vector<std::vector<Integer>> count_table_by_size(int n) {
  require_nonneg(n);
  Table t(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  t[0][0] = 1;
  // Either a part equals 1 (drop it) or all parts are >= 2 (lower each by 1).
  for (int m = 1; m <= n; ++m)
    for (int d = 1; d <= m; ++d) t[m][d] = t[m - 1][d - 1] + t[m - d][d];
  return t;
}

std::vector<std::vector<Integer>> count_table_by_smallest(int n) {
  require_nonneg(n);
  Table at_least = parts_at_least_table(n);
  Table t(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  t[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) t[m][k] = at_least[m - k][k];
  return t;
}

Integer count_minpart_maxsize(int n, int l, int s) {
  require_nonneg(n);
  require_positive(l, "minimum part");
  if (s < 0) throw std::invalid_argument("maximum size must be >= 0");
  return at_most_with_min(count_table_by_size(n), n, l, s);
}

Integer count_gap2(int n, int k) {
  require_nonneg(n);
  require_positive(k, "minimum part");
  // g[m][p]: gap-2 partitions of m with parts >= p, for p <= m.
  Table g(n + 1, std::vector<Integer>(n + 3, Integer(0)));
  auto get = [&](int m, int p) -> Integer { return p > m ? Integer(m == 0 ? 1 : 0) : g[m][p]; };
  for (int m = 1; m <= n; ++m) {
    // Condition on the smallest part p; the others are >= p + 2.
    Integer tail = 0;
    for (int p = m; p >= 1; --p) {
      tail += get(m - p, p + 2);
      g[m][p] = tail;
    }
  }
  return get(n, k);
}

Integer count_mod5_14(int n) {
  require_nonneg(n);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  c[0] = 1;
  for (int v = 1; v <= n; ++v) {
    if (v % 5 != 1 && v % 5 != 4) continue;
    for (int m = v; m <= n; ++m) c[m] += c[m - v];
  }
  return c[n];
}

Integer count_size_le_smallest(int n, int k) {
  require_nonneg(n);
  require_positive(k, "shift parameter");
  if (n == 0) return 1;
  Table at_most = at_most_parts_table(n);
  Integer total = 0;
  // Smallest part s, t parts in total; the other t-1 parts are >= s.
  for (int s = k; s <= n; ++s)
    for (int t = 1; t <= s - k + 1; ++t) {
      const long long rest = static_cast<long long>(n) - static_cast<long long>(t) * s;
      if (rest < 0) break;
      total += lookup_at_most(at_most, static_cast<int>(rest), t - 1);
    }
  return total;
}

Integer count_2c_left(int n, int j) {
  require_nonneg(n);
  require_positive(j, "color threshold");
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  c[0] = 1;
  auto coin = [&](int v) {
    for (int m = v; m <= n; ++m) c[m] += c[m - v];
  };
  for (int v = 1; v <= n; ++v) coin(v);
  for (int v = 1; v <= std::min(2 * j - 1, n); ++v) coin(v);
  return c[n];
}

Integer count_2c_right(int n, int j) {
  require_nonneg(n);
  require_positive(j, "color threshold");
  Table at_most = at_most_parts_table(n);
  Table at_least = parts_at_least_table(n);
  Integer total = lookup_at_most(at_most, n, n);  // no red part
  // Smallest red value r; blue parts number at most r - j.
  for (int r = 1; r <= n; ++r)
    for (int b = 0; b + r <= n; ++b) total += lookup_at_most(at_most, b, r - j) * at_least[n - b - r][r];
  return total;
}

Integer count_2c_left_shifted(int n, int j) {
  require_nonneg(n);
  require_positive(j, "color threshold");
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  c[0] = 1;
  auto coin = [&](int v) {
    for (int m = v; m <= n; ++m) c[m] += c[m - v];
  };
  for (int v = j; v <= n; ++v) coin(v);
  for (int v = j; v <= std::min(2 * j - 1, n); ++v) coin(v);
  return c[n];
}

Integer count_2c_right_shifted(int n, int j) {
  require_nonneg(n);
  require_positive(j, "color threshold");
  Table by_size = count_table_by_size(n);
  Table at_least = parts_at_least_table(n);
  Integer total = j <= n + 1 ? at_least[n][j] : Integer(n == 0 ? 1 : 0);  // no red part
  for (int r = j; r <= n; ++r)
    for (int b = 0; b + r <= n; ++b) total += at_most_with_min(by_size, b, j, r - j) * at_least[n - b - r][r];
  return total;
}

void to_json(nlohmann::json& j, const Partition& p) { j = nlohmann::json{{"n", p.weight()}, {"parts", p.parts}}; }

void to_json(nlohmann::json& j, const ColoredPartition& p) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& c : p.parts) parts.push_back({{"v", c.value}, {"c", c.color == Color::Blue ? "b" : "r"}});
  j = nlohmann::json{{"parts", std::move(parts)}};
}

std::string to_string(const Partition& p) {
  if (p.parts.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(p.parts[i]);
  }
  return s;
}

std::string to_string(const ColoredPartition& p) {
  if (p.parts.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(p.parts[i].value) + (p.parts[i].color == Color::Blue ? "b" : "r");
  }
  return s;
}

}  // namespace diffgb
