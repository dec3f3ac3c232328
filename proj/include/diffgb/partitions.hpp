#ifndef DIFFGB_PARTITIONS_HPP
#define DIFFGB_PARTITIONS_HPP

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace diffgb {

using Integer = mpz_class;

/// Weakly decreasing sequence of positive parts.
struct Partition {
  std::vector<int> parts;

  int weight() const;
  int size() const { return static_cast<int>(parts.size()); }
  /// Smallest part; nullopt for the empty partition.
  std::optional<int> smallest() const;
  bool is_canonical() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

enum class Color { Blue, Red };

struct ColoredPart {
  int value;
  Color color;

  /// Position in the canonical order: larger values first, blue before red
  /// at equal value.
  int rank() const { return 2 * value + (color == Color::Blue ? 1 : 0); }
  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

struct ColoredPartition {
  std::vector<ColoredPart> parts;

  /// Sorts into the unique canonical representative of the multiset.
  static ColoredPartition canonical(std::vector<ColoredPart> parts);

  int weight() const;
  int blue_count() const;
  std::optional<int> smallest_red() const;
  bool is_canonical() const;

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
};

/// Named membership predicate over partitions. min_part is a lower bound on
/// every accepted part; the enumerator uses it to skip hopeless branches.
struct PartitionFamily {
  std::string name;
  int min_part = 1;
  std::function<bool(const Partition&)> accepts;
};

struct ColoredFamily {
  std::string name;
  std::function<bool(const ColoredPartition&)> accepts;
};

namespace family {
PartitionFamily unrestricted();
/// Parts >= k, successive parts differ by at least 2.
PartitionFamily gap2(int k);
PartitionFamily mod5_14();
/// Parts >= l, at most s parts.
PartitionFamily minpart_maxsize(int l, int s);
/// Parts >= k, number of parts <= smallest - (k - 1).
PartitionFamily size_le_smallest(int k);

/// Blue allowed only on 1..2j-1, red on every value.
ColoredFamily two_color_left(int j);
/// If a red part exists: #blue < smallest red - (j - 1).
ColoredFamily two_color_right(int j);
/// two_color_left / two_color_right restricted to parts >= j.
ColoredFamily two_color_left_shifted(int j);
ColoredFamily two_color_right_shifted(int j);
}  // namespace family

/// All partitions of n accepted by the family, in descending lexicographic
/// order of part sequences. Throws std::invalid_argument for n < 0.
std::vector<Partition> enum_partitions(int n, const PartitionFamily& fam);
std::vector<ColoredPartition> enum_colored_partitions(int n, const ColoredFamily& fam);

/// Recursive descent over partitions of n with parts >= min_part, largest
/// part first. keep_prefix sees every partial part list and may cut the
/// subtree by returning false; visit sees every completed partition.
void for_each_partition(int n, int min_part,
                        const std::function<bool(std::span<const int>)>& keep_prefix,
                        const std::function<void(std::span<const int>)>& visit);

// Dynamic-programming counts.

Integer count_minpart_maxsize(int n, int l, int s);
Integer count_gap2(int n, int k);
Integer count_mod5_14(int n);
Integer count_size_le_smallest(int n, int k);
Integer count_2c_left(int n, int j);
Integer count_2c_right(int n, int j);
Integer count_2c_left_shifted(int n, int j);
Integer count_2c_right_shifted(int n, int j);

/// table[m][d] = number of partitions of m with exactly d parts, m, d <= n.
std::vector<std::vector<Integer>> count_table_by_size(int n);
/// table[m][k] = number of partitions of m whose smallest part is exactly k
/// (k <= m); table[0][0] = 1 stands for the empty partition.
std::vector<std::vector<Integer>> count_table_by_smallest(int n);

void to_json(nlohmann::json& j, const Partition& p);
void to_json(nlohmann::json& j, const ColoredPartition& p);
std::string to_string(const Partition& p);
std::string to_string(const ColoredPartition& p);

}  // namespace diffgb

#endif  // DIFFGB_PARTITIONS_HPP
