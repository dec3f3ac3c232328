#include "diffgb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "diffgb/groebner.hpp"
#include "diffgb/hilbert.hpp"
#include "diffgb/partitions.hpp"
#include "diffgb/polyring.hpp"
#include "diffgb/qseries.hpp"

namespace diffgb {

using nlohmann::json;

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  return v;
}

std::string str(const Integer& z) { return z.get_str(); }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string coeff_list(const QSeries& s) {
  std::vector<std::string> c;
  for (const auto& z : s.coeffs()) c.push_back(str(z));
  return join(c, ", ");
}

template <class T>
std::vector<std::string> to_strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& m : v) out.push_back(m.to_string());
  return out;
}

// Fills results[t] = work(t) for t in [0, count) on a small pool of threads.
// Each slot is written by exactly one worker, so the output order is fixed.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& work) {
  std::vector<T> results(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t t = w; t < count; t += workers) results[t] = work(t);
    }));
  for (auto& j : jobs) j.get();
  return results;
}

}  // namespace

Range Range::parse(std::string_view text) {
  const auto dots = text.find("..");
  Range r{};
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::string Range::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

json RunConfig::to_json() const {
  json j = json::object();
  j["command"] = command;
  j["ideal"] = ideal;
  j["order"] = order;
  j["weight_bound"] = weight_bound ? json(*weight_bound) : json(nullptr);
  j["order_n"] = series_order;
  j["name"] = name;
  j["range"] = range;
  j["j"] = this->j;
  j["k"] = k;
  j["n"] = n;
  j["l"] = l;
  j["s"] = s;
  j["i"] = i;
  j["check"] = check;
  j["shifted"] = shifted;
  j["format"] = format;
  return j;
}

json Report::envelope() const {
  return json{{"command", command}, {"config", config}, {"results", results}, {"pass", pass}};
}

std::string Report::render(std::string_view format) const {
  std::ostringstream os;
  if (format == "json") {
    os << envelope().dump(2) << "\n";
  } else if (format == "csv") {
    os << join(columns, ",") << "\n";
    for (const auto& r : rows) os << join(r, ",") << "\n";
  } else if (format == "table") {
    std::vector<std::size_t> width(columns.size(), 0);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      width[c] = columns[c].size();
      for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) os << "  ";
        os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
      }
      os << "\n";
    };
    os << command << "\n";
    if (!columns.empty()) {
      line(columns);
      for (const auto& r : rows) line(r);
    }
    for (const auto& n : notes) os << n << "\n";
    os << (pass ? "PASS" : "FAIL") << "\n";
  } else {
    throw std::invalid_argument("unknown format '" + std::string(format) + "'");
  }
  return os.str();
}

// ---- identity

Report cmd_identity(const RunConfig& cfg) {
  const Range nr = Range::parse(cfg.range);
  if (nr.lo < 0) throw std::invalid_argument("range must be nonnegative");
  const std::string& name = cfg.name;

  std::string param_name;
  Range pr{1, 1};
  std::function<Integer(int, int)> left, right;
  std::function<QSeries(int, int)> series;
  if (name == "rr") {
    left = [](int n, int) { return count_gap2(n, 1); };
    right = [](int n, int) { return count_mod5_14(n); };
    series = [](int, int N) { return series_hk_closed(1, N); };
  } else if (name == "rrnm1") {
    left = [](int n, int) { return count_size_le_smallest(n, 1); };
    right = [](int n, int) { return count_gap2(n, 1); };
    series = [](int, int N) { return series_hk_closed(1, N); };
  } else if (name == "rrnm2") {
    param_name = "k";
    pr = Range::parse(cfg.k);
    left = [](int n, int k) { return count_size_le_smallest(n, k); };
    right = [](int n, int k) { return count_gap2(n, k); };
    series = [](int k, int N) { return series_hk_closed(k, N); };
  } else if (name == "twocolor") {
    param_name = "j";
    pr = Range::parse(cfg.j);
    if (cfg.shifted) {
      left = [](int n, int j) { return count_2c_left_shifted(n, j); };
      right = [](int n, int j) { return count_2c_right_shifted(n, j); };
      series = [](int j, int N) { return series_two_color_shifted(j, N); };
    } else {
      left = [](int n, int j) { return count_2c_left(n, j); };
      right = [](int n, int j) { return count_2c_right(n, j); };
      series = [](int j, int N) { return series_two_color_left(j, N); };
    }
  } else {
    throw std::invalid_argument("unknown identity '" + name + "' (expected rr, rrnm1, rrnm2, twocolor)");
  }
  if (pr.lo < 1) throw std::invalid_argument(param_name + " must be >= 1");

  struct Cell {
    int p, n;
    Integer l, r, s;
  };
  std::vector<std::pair<int, int>> tasks;
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int n = nr.lo; n <= nr.hi; ++n) tasks.emplace_back(p, n);
  std::vector<QSeries> by_param;
  for (int p = pr.lo; p <= pr.hi; ++p) by_param.push_back(series(p, nr.hi));
  const auto cells = parallel_map<Cell>(tasks.size(), [&](std::size_t t) {
    const auto [p, n] = tasks[t];
    return Cell{p, n, left(n, p), right(n, p), by_param[static_cast<std::size_t>(p - pr.lo)][n]};
  });

  Report rep;
  rep.command = "identity";
  rep.config = cfg.to_json();
  if (!param_name.empty()) rep.columns.push_back(param_name);
  rep.columns.insert(rep.columns.end(), {"n", "left", "right", "series", "ok"});
  std::optional<Cell> first_bad;
  for (const auto& c : cells) {
    const bool ok = c.l == c.r && c.r == c.s;
    if (!ok && !first_bad) first_bad = c;
    json row{{"n", c.n}, {"left", str(c.l)}, {"right", str(c.r)}, {"series", str(c.s)}, {"ok", ok}};
    std::vector<std::string> cells_row;
    if (!param_name.empty()) {
      row[param_name] = c.p;
      cells_row.push_back(std::to_string(c.p));
    }
    cells_row.insert(cells_row.end(), {std::to_string(c.n), str(c.l), str(c.r), str(c.s), ok ? "yes" : "NO"});
    rep.results.push_back(row);
    rep.rows.push_back(cells_row);
  }
  rep.pass = !first_bad.has_value();
  if (first_bad) {
    std::string where = param_name.empty() ? "" : param_name + "=" + std::to_string(first_bad->p) + " ";
    rep.notes.push_back("counterexample: " + where + "n=" + std::to_string(first_bad->n) + " left=" + str(first_bad->l) +
                        " right=" + str(first_bad->r) + " series=" + str(first_bad->s));
  } else {
    rep.notes.push_back("all " + std::to_string(cells.size()) + " cases agree");
  }
  return rep;
}

// ---- gb

Report cmd_gb(const RunConfig& cfg) {
  const MonomialOrder ord = MonomialOrder::parse(cfg.order);
  const bool lex = ord.kind() == MonomialOrder::Kind::WeightedLex;
  std::optional<Polynomial> seed;
  std::optional<IdealPattern> pattern;
  std::string expected_name;
  Ambient amb;
  QSeries (*series)(int) = nullptr;
  if (cfg.ideal == "x2") {
    seed = Polynomial::parse("x1^2", ord);
    pattern = lex ? IdealPattern::size_vs_smallest(1) : IdealPattern::gap2(1);
    amb = Ambient::x_only();
    series = [](int N) { return series_hk_closed(1, N); };
  } else if (cfg.ideal == "xy") {
    if (lex) throw std::invalid_argument("unsupported combination: ideal xy with order wlex");
    seed = Polynomial::parse("x1*y1", ord);
    pattern = IdealPattern::node(1);
    amb = Ambient::xy();
    series = series_node;
  } else {
    throw std::invalid_argument("unknown ideal '" + cfg.ideal + "' (expected x2 or xy)");
  }
  const int W = cfg.weight_bound.value_or(cfg.ideal == "x2" ? 9 : 8);
  if (W < 2) throw std::invalid_argument("weight bound must be >= 2");

  const auto gens = differential_generators(*seed, W);
  BuchbergerStats stats;
  const Basis basis = buchberger_truncated(gens, ord, W, &stats);
  const InitialIdeal init = initial_generators(basis);
  const auto expected = pattern->minimal_generators(W, ord);

  std::vector<Monomial> missing, extra;
  for (const auto& m : expected)
    if (std::find(init.generators.begin(), init.generators.end(), m) == init.generators.end()) missing.push_back(m);
  for (const auto& m : init.generators)
    if (std::find(expected.begin(), expected.end(), m) == expected.end()) extra.push_back(m);
  const bool match = missing.empty() && extra.empty();

  const auto gb_dims = standard_monomial_counts(init, amb);
  const auto rank_dims = quotient_dims_by_rank(gens, amb, W, ord);
  const auto pat_dims = standard_monomial_dims(*pattern, W);
  const QSeries ser = series(W);

  Report rep;
  rep.command = "gb";
  rep.config = cfg.to_json();
  rep.config["weight_bound"] = W;
  rep.columns = {"weight", "pattern", "series", "groebner", "rank"};
  bool oracle_agrees = true;
  bool all_agree = true;
  json dims = json::array();
  for (int w = 0; w <= W; ++w) {
    const auto i = static_cast<std::size_t>(w);
    const Integer g(static_cast<unsigned long>(gb_dims[i]));
    const Integer r(static_cast<unsigned long>(rank_dims[i]));
    oracle_agrees = oracle_agrees && g == r;
    all_agree = all_agree && g == r && g == pat_dims[i] && g == ser[w];
    dims.push_back(json{{"weight", w},
                        {"pattern", str(pat_dims[i])},
                        {"series", str(ser[w])},
                        {"groebner", str(g)},
                        {"rank", str(r)}});
    rep.rows.push_back({std::to_string(w), str(pat_dims[i]), str(ser[w]), str(g), str(r)});
  }

  const std::string status = lex ? "conjectural" : "claimed";
  json res{{"ideal", cfg.ideal},
           {"order", std::string(ord.name())},
           {"weight_bound", W},
           {"expected_pattern", pattern->name()},
           {"status", status},
           {"generators_match", match},
           {"dimension_oracle_agrees", oracle_agrees},
           {"all_dimensions_agree", all_agree},
           {"initial_generators", to_strings(init.generators)},
           {"missing", to_strings(missing)},
           {"extra", to_strings(extra)},
           {"stats",
            {{"generators_used", stats.generators_used},
             {"pairs_created", stats.pairs_created},
             {"pairs_coprime", stats.pairs_coprime},
             {"pairs_beyond_bound", stats.pairs_beyond_bound},
             {"reductions", stats.reductions},
             {"zero_reductions", stats.zero_reductions}}},
           {"basis", to_json(basis)},
           {"dims", dims}};
  rep.results.push_back(res);

  rep.notes.push_back("expected pattern " + pattern->name() + " [" + status + "]");
  rep.notes.push_back("initial generators (" + std::to_string(init.generators.size()) +
                      "): " + join(to_strings(init.generators), ", "));
  rep.notes.push_back(std::string("generators match: ") + (match ? "yes" : "no"));
  if (!missing.empty()) rep.notes.push_back("missing: " + join(to_strings(missing), ", "));
  if (!extra.empty()) rep.notes.push_back("extra: " + join(to_strings(extra), ", "));
  if (lex) {
    // A conjecture mismatch is a finding; only disagreement with the rank
    // oracle points at the implementation.
    rep.pass = oracle_agrees;
    if (!match && oracle_agrees) rep.notes.push_back("finding: conjectured initial ideal differs at this truncation");
  } else {
    rep.pass = match && all_agree;
  }
  return rep;
}

// ---- witness

Report cmd_witness(const RunConfig& cfg) {
  const Range kr = Range::parse(cfg.k);
  const int K = kr.hi;
  const auto chain = f_family_chain(K);
  const WitnessReport w = ndf_witness(12);

  Report rep;
  rep.command = "witness";
  rep.config = cfg.to_json();
  rep.columns = {"k", "leading", "expected", "ok", "element"};
  bool all = true;
  json steps = json::array();
  for (const auto& st : chain) {
    const Monomial expected = Monomial::of(Variable::x(2)) * Monomial::of(Variable::x(st.k), 2);
    const Monomial& lead = st.element.leading_monomial();
    const bool ok = lead == expected;
    all = all && ok;
    json js = to_json(st);
    js["expected_leading"] = expected.to_string();
    js["ok"] = ok;
    steps.push_back(js);
    rep.rows.push_back({std::to_string(st.k), lead.to_string(), expected.to_string(), ok ? "yes" : "NO",
                        st.element.to_string()});
  }
  rep.results.push_back(json{{"chain", steps}, {"witness", to_json(w)}});
  rep.notes.push_back("S(F, DF) = " + w.s_poly.to_string() + " for F = " + w.f.to_string());
  rep.notes.push_back(std::string("support is {x3^4}: ") + (w.support_is_x3_4 ? "yes" : "no"));
  rep.notes.push_back("x3^4 divisible by none of " + std::to_string(w.divisibility.size()) +
                      " leading monomials up to weight " + std::to_string(w.weight_bound) + ": " +
                      (w.divisible_by_none ? "yes" : "no"));
  rep.pass = all && w.ok();
  return rep;
}

// ---- series

Report cmd_series(const RunConfig& cfg) {
  const int N = cfg.series_order;
  if (N < 0) throw std::invalid_argument("order must be >= 0");
  const std::string& name = cfg.name;
  const int k = Range::parse(cfg.k).lo;
  const int j = Range::parse(cfg.j).lo;

  Report rep;
  rep.command = "series";
  rep.config = cfg.to_json();

  // (label, values) routes compared against the series when --check is given.
  std::vector<std::pair<std::string, std::function<Integer(int)>>> routes;
  std::vector<std::pair<std::string, QSeries>> out;
  if (name == "hnl") {
    out.emplace_back("H_n^l", series_hnl(cfg.n, cfg.l, N));
    const int n = cfg.n, l = cfg.l;
    routes.emplace_back("count_minpart_maxsize", [=](int w) { return count_minpart_maxsize(w, l, n - 1); });
    const auto dims = standard_monomial_dims(IdealPattern::max_products(n, l), N);
    routes.emplace_back("pattern", [dims](int w) { return dims[static_cast<std::size_t>(w)]; });
  } else if (name == "hk" || name == "rr_sum") {
    const int kk = name == "hk" ? k : 1;
    out.emplace_back("H_" + std::to_string(kk), series_hk_closed(kk, N));
    routes.emplace_back("count_gap2", [=](int w) { return count_gap2(w, kk); });
    routes.emplace_back("count_size_le_smallest", [=](int w) { return count_size_le_smallest(w, kk); });
    if (kk == 1) routes.emplace_back("count_mod5_14", [](int w) { return count_mod5_14(w); });
  } else if (name == "node") {
    out.emplace_back("HP(S/J)", series_node(N));
    routes.emplace_back("count_2c_left", [](int w) { return count_2c_left(w, 1); });
    routes.emplace_back("count_2c_right", [](int w) { return count_2c_right(w, 1); });
    const auto dims = standard_monomial_dims(IdealPattern::node(1), N);
    routes.emplace_back("pattern", [dims](int w) { return dims[static_cast<std::size_t>(w)]; });
  } else if (name == "partition") {
    out.emplace_back("P", partition_gf(N));
    const auto table = count_table_by_size(N);
    routes.emplace_back("count_table_by_size", [table](int w) {
      Integer t = 0;
      for (const auto& c : table[static_cast<std::size_t>(w)]) t += c;
      return t;
    });
  } else if (name == "two_color_left") {
    out.emplace_back("two_color_left_" + std::to_string(j), series_two_color_left(j, N));
    routes.emplace_back("count_2c_left", [=](int w) { return count_2c_left(w, j); });
  } else if (name == "ab") {
    const auto [A, B] = series_ab_recursion(k, cfg.i, N);
    out.emplace_back("A", A);
    out.emplace_back("B", B);
  } else {
    throw std::invalid_argument("unknown series '" + name +
                                "' (expected hnl, hk, rr_sum, node, partition, two_color_left, ab)");
  }

  for (const auto& [label, s] : out) {
    json js = s;
    rep.results.push_back(json{{"name", label}, {"series", js}});
    rep.notes.push_back(label + " coeffs: " + coeff_list(s));
  }

  if (cfg.check) {
    bool ok = true;
    std::optional<std::string> first_bad;
    if (name == "ab") {
      // H_k = A_{k+i} H_{k+i} + B_{k+i+1} H_{k+i+1}
      const QSeries rhs = out[0].second * series_hk_closed(k + cfg.i, N) + out[1].second * series_hk_closed(k + cfg.i + 1, N);
      const QSeries lhs = series_hk_closed(k, N);
      ok = lhs == rhs;
      if (!ok) first_bad = "H_k differs from A H_{k+i} + B H_{k+i+1}";
    } else {
      rep.columns = {"n", "series"};
      for (const auto& r : routes) rep.columns.push_back(r.first);
      const QSeries& s = out[0].second;
      for (int w = 0; w <= N; ++w) {
        std::vector<std::string> row{std::to_string(w), str(s[w])};
        for (const auto& r : routes) {
          const Integer v = r.second(w);
          row.push_back(str(v));
          if (v != s[w]) {
            ok = false;
            if (!first_bad) first_bad = "n=" + std::to_string(w) + " " + r.first + "=" + str(v) + " series=" + str(s[w]);
          }
        }
        rep.rows.push_back(row);
      }
    }
    rep.results.push_back(json{{"check", ok}});
    rep.notes.push_back(ok ? std::string("check: all routes agree") : "counterexample: " + *first_bad);
    rep.pass = ok;
  }
  return rep;
}

// ---- partitions

Report cmd_partitions(const RunConfig& cfg) {
  const int n = cfg.n;
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const int k = Range::parse(cfg.k).lo;
  const int j = Range::parse(cfg.j).lo;
  const std::string& name = cfg.name;

  std::vector<std::string> listed;
  json items = json::array();
  std::optional<Integer> dp;
  auto plain = [&](const PartitionFamily& fam) {
    for (const auto& p : enum_partitions(n, fam)) {
      listed.push_back(to_string(p));
      items.push_back(p);
    }
  };
  auto colored = [&](const ColoredFamily& fam) {
    for (const auto& p : enum_colored_partitions(n, fam)) {
      listed.push_back(to_string(p));
      items.push_back(p);
    }
  };
  if (name == "unrestricted") {
    plain(family::unrestricted());
    dp = count_minpart_maxsize(n, 1, n);
  } else if (name == "gap2") {
    plain(family::gap2(k));
    dp = count_gap2(n, k);
  } else if (name == "mod5_14") {
    plain(family::mod5_14());
    dp = count_mod5_14(n);
  } else if (name == "minpart_maxsize") {
    plain(family::minpart_maxsize(cfg.l, cfg.s));
    dp = count_minpart_maxsize(n, cfg.l, cfg.s);
  } else if (name == "size_le_smallest") {
    plain(family::size_le_smallest(k));
    dp = count_size_le_smallest(n, k);
  } else if (name == "two_color_left") {
    colored(cfg.shifted ? family::two_color_left_shifted(j) : family::two_color_left(j));
    dp = cfg.shifted ? count_2c_left_shifted(n, j) : count_2c_left(n, j);
  } else if (name == "two_color_right") {
    colored(cfg.shifted ? family::two_color_right_shifted(j) : family::two_color_right(j));
    dp = cfg.shifted ? count_2c_right_shifted(n, j) : count_2c_right(n, j);
  } else {
    throw std::invalid_argument("unknown partition family '" + name + "'");
  }

  Report rep;
  rep.command = "partitions";
  rep.config = cfg.to_json();
  rep.columns = {"partition"};
  for (const auto& s : listed) rep.rows.push_back({s});
  const Integer count(static_cast<unsigned long>(listed.size()));
  json res{{"family", name}, {"n", n}, {"count", listed.size()}, {"partitions", items}};
  rep.notes.push_back("count: " + std::to_string(listed.size()));
  if (cfg.check) {
    const bool ok = count == *dp;
    res["dp_count"] = str(*dp);
    res["check"] = ok;
    rep.notes.push_back("dp count: " + str(*dp) + (ok ? " (agrees)" : " (MISMATCH)"));
    rep.pass = ok;
  }
  rep.results.push_back(res);
  return rep;
}

Report run(const RunConfig& cfg) {
  if (cfg.command == "identity") return cmd_identity(cfg);
  if (cfg.command == "gb") return cmd_gb(cfg);
  if (cfg.command == "witness") return cmd_witness(cfg);
  if (cfg.command == "series") return cmd_series(cfg);
  if (cfg.command == "partitions") return cmd_partitions(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace diffgb
