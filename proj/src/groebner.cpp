#include "diffgb/groebner.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

namespace diffgb {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of a zero polynomial");
  const Polynomial a = f.with_order(ord);
  const Polynomial b = g.with_order(ord);
  const Monomial m = lcm(a.leading_monomial(), b.leading_monomial());
  Polynomial s = (a * *a.leading_monomial().quotient_of(m)) * Rational(1 / a.leading_coeff());
  s.subtract_multiple(1 / b.leading_coeff(), *b.leading_monomial().quotient_of(m), b);
  return s;
}

namespace {

// Division against a basis already carrying ord.
Polynomial reduce_same_order(Polynomial h, std::span<const Polynomial> basis, const MonomialOrder& ord) {
  std::vector<Term> rem;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const Monomial q = *divisor->leading_monomial().quotient_of(lt.monomial);
      h.subtract_multiple(lt.coeff / divisor->leading_coeff(), q, *divisor);
    } else {
      rem.push_back(h.pop_leading_term());
    }
  }
  return Polynomial(std::move(rem), ord);
}

void require_homogeneous(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("generator is zero");
  if (!p.homogeneous_weight()) throw std::invalid_argument("generator is not weighted-homogeneous: " + p.to_string());
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& ord) {
  for (const auto& g : basis)
    if (g.is_zero()) throw std::invalid_argument("reduce: zero basis element");
  const bool same = std::all_of(basis.begin(), basis.end(), [&](const Polynomial& g) { return g.order() == ord; });
  if (same) return reduce_same_order(f.with_order(ord), basis, ord);
  std::vector<Polynomial> converted;
  converted.reserve(basis.size());
  for (const auto& g : basis) converted.push_back(g.with_order(ord));
  return reduce_same_order(f.with_order(ord), converted, ord);
}

Basis buchberger_truncated(std::span<const Polynomial> gens, const MonomialOrder& ord, int W, BuchbergerStats* stats,
                           BuchbergerOptions opts) {
  if (W < 0) throw std::invalid_argument("weight bound must be >= 0");
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  st = {};

  std::vector<Polynomial> inputs;
  for (const auto& g : gens) {
    require_homogeneous(g);
    if (*g.homogeneous_weight() <= W) inputs.push_back(g.with_order(ord));
  }
  st.generators_used = inputs.size();

  struct Candidate {
    Monomial key;
    bool is_pair;
    std::size_t a, b;
  };
  std::map<int, std::vector<Candidate>> queue;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    queue[inputs[i].leading_monomial().weight()].push_back({inputs[i].leading_monomial(), false, i, 0});

  std::vector<Polynomial> basis;
  auto candidate_poly = [&](const Candidate& c) {
    return c.is_pair ? s_polynomial(basis[c.a], basis[c.b], ord) : inputs[c.a];
  };

  for (auto it = queue.begin(); it != queue.end(); ++it) {
    const int w = it->first;
    auto& cands = it->second;
    std::sort(cands.begin(), cands.end(), [&](const Candidate& x, const Candidate& y) {
      const auto c = ord.compare(x.key, y.key);
      if (c != 0) return c < 0;
      if (x.is_pair != y.is_pair) return !x.is_pair;
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });

    std::vector<Polynomial> pre;
    if (opts.parallel && cands.size() > 1) {
      std::vector<std::future<Polynomial>> jobs;
      const std::vector<Polynomial> snapshot = basis;
      for (const auto& c : cands)
        jobs.push_back(std::async(std::launch::async, [&, c] {
          Polynomial p = c.is_pair ? s_polynomial(snapshot[c.a], snapshot[c.b], ord) : inputs[c.a];
          return reduce_same_order(std::move(p), snapshot, ord);
        }));
      for (auto& j : jobs) pre.push_back(j.get());
    }

    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      Polynomial r = reduce_same_order(pre.empty() ? candidate_poly(cands[ci]) : pre[ci], basis, ord);
      ++st.reductions;
      if (r.is_zero()) {
        ++st.zero_reductions;
        continue;
      }
      basis.push_back(r.monic());
      const std::size_t added = basis.size() - 1;
      const Monomial& lm = basis[added].leading_monomial();
      for (std::size_t j = 0; j < added; ++j) {
        const Monomial& other = basis[j].leading_monomial();
        if (lm.is_coprime(other)) {
          ++st.pairs_coprime;
          continue;
        }
        Monomial l = lcm(other, lm);
        if (l.weight() > W) {
          ++st.pairs_beyond_bound;
          continue;
        }
        // A reduced leading monomial of weight w cannot share an LCM of weight w.
        if (l.weight() <= w) throw std::logic_error("buchberger_truncated: pair weight did not increase");
        ++st.pairs_created;
        queue[l.weight()].push_back({std::move(l), true, j, added});
      }
    }
  }

  // Tail reduction; leading monomials are already pairwise non-dividing.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Polynomial tail = basis[i];
    const Term lt = tail.pop_leading_term();
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    Polynomial reduced = reduce_same_order(std::move(tail), others, ord);
    reduced += Polynomial::term(lt.monomial, lt.coeff, ord);
    basis[i] = std::move(reduced);
  }

  return Basis{std::move(basis), ord, W};
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> monos, const MonomialOrder& ord) {
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Monomial> kept;
  for (auto& m : monos)
    if (std::none_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); }))
      kept.push_back(std::move(m));
  std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return ord.greater(a, b);
  });
  return kept;
}

InitialIdeal initial_generators(const Basis& b) {
  std::vector<Monomial> lms;
  for (const auto& p : b.elements) lms.push_back(leading_term(p, b.order).monomial);
  return InitialIdeal{minimal_monomials(std::move(lms), b.order), b.order, b.weight_bound};
}

std::vector<Polynomial> differential_generators(const Polynomial& seed, int W) {
  require_homogeneous(seed);
  std::vector<Polynomial> out;
  Polynomial p = seed;
  while (*p.homogeneous_weight() <= W) {
    out.push_back(p);
    p = derive(p);
  }
  return out;
}

std::vector<std::size_t> standard_monomial_counts(const InitialIdeal& ideal, const Ambient& ambient) {
  std::vector<std::size_t> counts;
  for (int w = 0; w <= ideal.weight_bound; ++w) {
    std::size_t c = 0;
    for (const auto& m : monomials_of_weight(w, ambient, ideal.order))
      if (std::none_of(ideal.generators.begin(), ideal.generators.end(),
                       [&](const Monomial& g) { return g.divides(m); }))
        ++c;
    counts.push_back(c);
  }
  return counts;
}

std::vector<Polynomial> graded_piece_basis(std::span<const Polynomial> gens, const Ambient& ambient, int w,
                                           const MonomialOrder& ord) {
  std::map<Monomial, Polynomial> pivots;
  for (const auto& g : gens) {
    require_homogeneous(g);
    const int gw = *g.homogeneous_weight();
    if (gw > w) continue;
    const Polynomial f = g.with_order(ord);
    for (const auto& m : monomials_of_weight(w - gw, ambient, ord)) {
      Polynomial row = f * m;
      while (!row.is_zero()) {
        auto hit = pivots.find(row.leading_monomial());
        if (hit == pivots.end()) break;
        row.subtract_multiple(row.leading_coeff() / hit->second.leading_coeff(), Monomial(), hit->second);
      }
      if (!row.is_zero()) {
        Monomial lm = row.leading_monomial();
        pivots.emplace(std::move(lm), std::move(row));
      }
    }
  }
  std::vector<Polynomial> rows;
  for (auto& [m, p] : pivots) rows.push_back(std::move(p));
  std::sort(rows.begin(), rows.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  return rows;
}

std::vector<std::size_t> quotient_dims_by_rank(std::span<const Polynomial> gens, const Ambient& ambient, int W,
                                               const MonomialOrder& ord) {
  std::vector<std::size_t> dims;
  for (int w = 0; w <= W; ++w) {
    const std::size_t total = monomials_of_weight(w, ambient, ord).size();
    dims.push_back(total - graded_piece_basis(gens, ambient, w, ord).size());
  }
  return dims;
}

// ------------------------------------------------------------- F-family

std::vector<FFamilyStep> f_family_chain(int K) {
  if (K < 2) throw std::invalid_argument("f_family: k must be >= 2");
  const auto lex = MonomialOrder::weighted_lex();
  std::vector<FFamilyStep> chain;
  {
    Polynomial s = s_polynomial(gen_f_x2(3, lex), gen_f_x2(4, lex), lex);
    chain.push_back({2, Polynomial(lex), s, s, s.monic()});
  }
  for (int k = 3; k <= K; ++k) {
    Polynomial second = derive(chain.back().element, 2);
    Polynomial pair = s_polynomial(gen_f_x2(k + 1, lex), gen_f_x2(k + 2, lex), lex);
    Polynomial raw = s_polynomial(second, pair, lex);
    if (raw.is_zero()) throw std::logic_error("f_family: chain collapsed to zero at k=" + std::to_string(k));
    Polynomial element = raw.monic();
    chain.push_back({k, std::move(second), std::move(pair), std::move(raw), std::move(element)});
  }
  return chain;
}

Polynomial f_family(int k) { return f_family_chain(k).back().element; }

// ------------------------------------------------------- G determinants

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const PolyMatrix& m, const MonomialOrder& ord) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det(ord);
  const std::size_t last = n - 1;
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r][last].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin(), m[i].begin() + static_cast<std::ptrdiff_t>(last));
    }
    Polynomial cofactor = m[r][last] * determinant(minor, ord);
    if ((r + last) % 2 == 0)
      det += cofactor;
    else
      det -= cofactor;
  }
  return det;
}

void require_g_indices(std::span<const int> idx) {
  if (idx.size() < 2) throw std::invalid_argument("g_determinant: need at least two indices");
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (idx[r] < 1) throw std::invalid_argument("g_determinant: indices must be >= 1");
    if (r > 0 && idx[r] < idx[r - 1]) throw std::invalid_argument("g_determinant: indices must be weakly increasing");
  }
}

}  // namespace

Polynomial g_determinant(std::span<const int> indices, MonomialOrder ord) {
  require_g_indices(indices);
  const int k = static_cast<int>(indices.size());
  PolyMatrix m(k);
  for (int r = 1; r <= k; ++r) {
    const int i = indices[r - 1];
    auto& row = m[r - 1];
    for (int c = 1; c <= k - 1; ++c) {
      const int x_index = i - k + r + c;
      row.push_back(x_index >= 1 ? Polynomial::variable(Variable::x(x_index), ord) : Polynomial(ord));
    }
    row.push_back(gen_f_xy(i + r, ord));
  }
  return determinant(m, ord);
}

Monomial g_expected_leading(std::span<const int> indices) {
  require_g_indices(indices);
  std::vector<Monomial::Factor> fs;
  for (int i : indices) fs.push_back({Variable::x(i), 1});
  fs.push_back({Variable::y(static_cast<int>(indices.size())), 1});
  return Monomial(std::move(fs));
}

// ------------------------------------------------------------- witness

WitnessReport ndf_witness(int weight_bound) {
  const auto lex = MonomialOrder::weighted_lex();
  const int depth = std::max(3, (weight_bound - 2) / 2);
  const auto chain = f_family_chain(depth);

  WitnessReport rep;
  rep.weight_bound = weight_bound;
  rep.f = chain[1].element;  // k = 3
  rep.f_derivative = derive(rep.f);
  rep.s_poly = s_polynomial(rep.f, rep.f_derivative, lex);
  const Monomial target = Monomial::of(Variable::x(3), 4);
  rep.support_is_x3_4 = rep.s_poly.size() == 1 && rep.s_poly.leading_monomial() == target;

  for (int i = 2; i <= weight_bound; ++i) {
    const Monomial lm = gen_f_x2(i, lex).leading_monomial();
    rep.divisibility.push_back({"f_" + std::to_string(i), lm, lm.divides(target)});
  }
  for (const auto& step : chain) {
    const std::string name = "F[" + step.element.leading_monomial().to_string() + "]";
    Polynomial p = step.element;
    for (int m = 0; *p.homogeneous_weight() <= weight_bound; ++m) {
      const Monomial lm = p.leading_monomial();
      const std::string label = m == 0 ? name : "D^" + std::to_string(m) + " " + name;
      rep.divisibility.push_back({label, lm, lm.divides(target)});
      p = derive(p);
    }
  }
  rep.divisible_by_none = std::none_of(rep.divisibility.begin(), rep.divisibility.end(),
                                       [](const WitnessRow& r) { return r.divides; });
  return rep;
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const Basis& b) {
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& p : b.elements)
    elems.push_back({{"polynomial", p.to_string()},
                     {"leading_monomial", p.leading_monomial().to_string()},
                     {"weight", *p.homogeneous_weight()}});
  return {{"order", std::string(b.order.name())}, {"weight_bound", b.weight_bound}, {"elements", elems}};
}

nlohmann::json to_json(const InitialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& m : ideal.generators) gens.push_back(m.to_string());
  return {{"order", std::string(ideal.order.name())}, {"weight_bound", ideal.weight_bound}, {"generators", gens}};
}

nlohmann::json to_json(const FFamilyStep& step) {
  nlohmann::json j{{"k", step.k},
                   {"pair_s", step.pair_s.to_string()},
                   {"raw", step.raw.to_string()},
                   {"element", step.element.to_string()},
                   {"leading_monomial", step.element.leading_monomial().to_string()}};
  if (step.k >= 3) {
    j["previous_second_derivative"] = step.previous_second_derivative.to_string();
    j["pair_s_leading"] = step.pair_s.leading_monomial().to_string();
    j["derivation"] = "S(D^2 F_" + std::to_string(step.k - 1) + ", S(f_" + std::to_string(step.k + 1) + ", f_" +
                      std::to_string(step.k + 2) + "))";
  } else {
    j["derivation"] = "S(f_3, f_4)";
  }
  return j;
}

nlohmann::json to_json(const WitnessReport& w) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : w.divisibility)
    rows.push_back({{"source", r.source}, {"leading_monomial", r.leading.to_string()}, {"divides", r.divides}});
  return {{"F", w.f.to_string()},
          {"D_F", w.f_derivative.to_string()},
          {"s_polynomial", w.s_poly.to_string()},
          {"support_is_x3^4", w.support_is_x3_4},
          {"weight_bound", w.weight_bound},
          {"divisibility", rows},
          {"divisible_by_none", w.divisible_by_none}};
}

}  // namespace diffgb
