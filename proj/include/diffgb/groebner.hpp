#ifndef DIFFGB_GROEBNER_HPP
#define DIFFGB_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffgb/polyring.hpp"

namespace diffgb {

/// Weight-truncated Groebner basis: monic, weighted-homogeneous elements of
/// weight <= weight_bound, no leading monomial dividing another.
struct Basis {
  std::vector<Polynomial> elements;
  MonomialOrder order;
  int weight_bound;
};

/// Minimal monomial generators of a leading-term ideal up to weight_bound,
/// sorted by weight then descending order.
struct InitialIdeal {
  std::vector<Monomial> generators;
  MonomialOrder order;
  int weight_bound;
};

struct BuchbergerStats {
  std::size_t generators_used = 0;
  std::size_t pairs_created = 0;
  std::size_t pairs_coprime = 0;
  std::size_t pairs_beyond_bound = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
};

struct BuchbergerOptions {
  /// Reduce the candidates of one weight in parallel against a snapshot of the
  /// basis, then merge them in queue order.
  bool parallel = false;
};

/// S(f, g) = (m/LT(f)) f - (m/LT(g)) g with m = lcm of the leading monomials.
/// Throws std::invalid_argument on a zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Full remainder of f on division by basis: at each step the earliest basis
/// element whose leading monomial divides the current leading monomial is used.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& ord);

/// Buchberger completion restricted to weight <= W. Candidates (generators and
/// S-pairs) are processed by increasing weight, then increasing order of the
/// leading monomial or LCM. Pairs with LCM weight above W are dropped. The
/// caller supplies every generator needed up to weight W; inputs must be
/// weighted-homogeneous (std::invalid_argument otherwise).
Basis buchberger_truncated(std::span<const Polynomial> gens, const MonomialOrder& ord, int W,
                           BuchbergerStats* stats = nullptr, BuchbergerOptions opts = {});

/// Divisibility-minimal subset, sorted by weight then descending under ord.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> monos, const MonomialOrder& ord);

InitialIdeal initial_generators(const Basis& b);

/// {D^i(seed) : weight <= W}, under ord.
std::vector<Polynomial> differential_generators(const Polynomial& seed, int W);

/// Number of monomials of each weight 0..W in the ambient ring not divisible
/// by any generator.
std::vector<std::size_t> standard_monomial_counts(const InitialIdeal& ideal, const Ambient& ambient);

/// Echelon basis of the weight-w piece of the ideal generated by gens, built
/// from every product m * f of weight w. Independent of S-pair machinery.
std::vector<Polynomial> graded_piece_basis(std::span<const Polynomial> gens, const Ambient& ambient, int w,
                                           const MonomialOrder& ord);

/// dim of the weight-w piece of the quotient: #monomials - rank, w = 0..W.
std::vector<std::size_t> quotient_dims_by_rank(std::span<const Polynomial> gens, const Ambient& ambient, int W,
                                               const MonomialOrder& ord);

// ---- the F-family chain for [x_1^2] under weighted lex

struct FFamilyStep {
  int k;
  /// Second derivative of the previous element (empty for k = 2).
  Polynomial previous_second_derivative;
  /// S(f_{k+1}, f_{k+2}) for k >= 3, S(f_3, f_4) itself for k = 2.
  Polynomial pair_s;
  /// The S-polynomial exactly as computed, before normalization.
  Polynomial raw;
  Polynomial element;
};

/// Steps k = 2..K; step k = 2 is F_{x_2^3} = S(f_3, f_4), step k >= 3 is
/// S(D^2 F_{k-1}, S(f_{k+1}, f_{k+2})). Throws for K < 2.
std::vector<FFamilyStep> f_family_chain(int K);
/// Monic element k of the chain.
Polynomial f_family(int k);

// ---- determinant family for [x_1 y_1]

/// The k x k determinant whose row r (1-based) is
///   x_{i_r-k+1+r}, ..., x_{i_r+r-1}, f_{i_r+r},
/// with f the derivatives of x_1 y_1 and entries x_m, m <= 0, taken as 0.
/// Requires k >= 2 and 1 <= i_1 <= ... <= i_k.
Polynomial g_determinant(std::span<const int> indices, MonomialOrder ord = MonomialOrder::weighted_revlex());
/// x_{i_1} ... x_{i_k} y_k.
Monomial g_expected_leading(std::span<const int> indices);

// ---- non-differential-finiteness witness

struct WitnessRow {
  std::string source;
  Monomial leading;
  bool divides;
};

struct WitnessReport {
  Polynomial f;
  Polynomial f_derivative;
  Polynomial s_poly;
  bool support_is_x3_4 = false;
  int weight_bound = 0;
  std::vector<WitnessRow> divisibility;
  bool divisible_by_none = false;

  bool ok() const { return support_is_x3_4 && divisible_by_none; }
};

/// S(F, D F) for F = F_{x_2 x_3^2} under weighted lex, and the divisibility of
/// x_3^4 by every f_i, F-family element and derivative of weight <= weight_bound.
WitnessReport ndf_witness(int weight_bound = 12);

nlohmann::json to_json(const Basis& b);
nlohmann::json to_json(const InitialIdeal& ideal);
nlohmann::json to_json(const FFamilyStep& step);
nlohmann::json to_json(const WitnessReport& w);

}  // namespace diffgb

#endif  // DIFFGB_GROEBNER_HPP
