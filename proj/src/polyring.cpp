#include "diffgb/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace diffgb {

Variable Variable::x(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  return {Family::X, i};
}

Variable Variable::y(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  return {Family::Y, i};
}

std::string Variable::to_string() const {
  return (family == Family::X ? "x" : "y") + std::to_string(index);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
  for (const auto& f : factors) {
    if (f.exp < 0) throw std::invalid_argument("negative exponent in monomial");
    if (f.var.index < 1) throw std::invalid_argument("variable index must be >= 1");
    if (f.exp == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var)
      factors_.back().exp += f.exp;
    else
      factors_.push_back(f);
  }
  recompute();
}

Monomial Monomial::of(Variable v, int exp) { return Monomial({{v, exp}}); }

void Monomial::recompute() {
  weight_ = 0;
  degree_ = 0;
  for (const auto& f : factors_) {
    weight_ += f.var.index * f.exp;
    degree_ += f.exp;
  }
}

int Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& var) { return f.var < var; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || weight_ > other.weight_) return false;
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) return std::nullopt;
  Monomial q;
  auto it = factors_.begin();
  for (const auto& f : other.factors_) {
    int e = f.exp;
    if (it != factors_.end() && it->var == f.var) {
      e -= it->exp;
      ++it;
    }
    if (e > 0) q.factors_.push_back({f.var, e});
  }
  q.recompute();
  return q;
}

bool Monomial::is_coprime(const Monomial& other) const {
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->var == j->var) return false;
    if (i->var < j->var)
      ++i;
    else
      ++j;
  }
  return true;
}

namespace {

template <class Combine>
Monomial merge_factors(const Monomial& a, const Monomial& b, Combine combine) {
  std::vector<Monomial::Factor> out;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() || j != b.factors().end()) {
    if (j == b.factors().end() || (i != a.factors().end() && i->var < j->var)) {
      out.push_back({i->var, combine(i->exp, 0)});
      ++i;
    } else if (i == a.factors().end() || j->var < i->var) {
      out.push_back({j->var, combine(0, j->exp)});
      ++j;
    } else {
      out.push_back({i->var, combine(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(out));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return merge_factors(a, b, [](int x, int y) { return x + y; });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return merge_factors(a, b, [](int x, int y) { return std::max(x, y); });
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "*";
    s += factors_[i].var.to_string();
    if (factors_[i].exp != 1) s += "^" + std::to_string(factors_[i].exp);
  }
  return s;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "wlex") return weighted_lex();
  if (name == "wrevlex") return weighted_revlex();
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "' (expected wlex|wrevlex)");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.weight() != b.weight()) return a.weight() <=> b.weight();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (kind_ == Kind::WeightedLex) {
    // First ranked variable with differing exponent; larger exponent wins.
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
      if (i == fa.size()) return std::strong_ordering::less;
      if (j == fb.size()) return std::strong_ordering::greater;
      if (fa[i].var == fb[j].var) {
        if (fa[i].exp != fb[j].exp) return fa[i].exp <=> fb[j].exp;
        ++i;
        ++j;
      } else {
        return fa[i].var < fb[j].var ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }
  // Last ranked variable with differing exponent; smaller exponent wins.
  auto i = static_cast<std::ptrdiff_t>(fa.size()) - 1;
  auto j = static_cast<std::ptrdiff_t>(fb.size()) - 1;
  while (i >= 0 || j >= 0) {
    if (i < 0) return std::strong_ordering::greater;
    if (j < 0) return std::strong_ordering::less;
    if (fa[i].var == fb[j].var) {
      if (fa[i].exp != fb[j].exp) return fb[j].exp <=> fa[i].exp;
      --i;
      --j;
    } else {
      return fb[j].var < fa[i].var ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Term> terms, MonomialOrder ord) : order_(ord), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(const Rational& c, MonomialOrder ord) { return term(Monomial(), c, ord); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c, MonomialOrder ord) {
  Polynomial p(ord);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(Variable v, MonomialOrder ord) { return term(Monomial::of(v), 1, ord); }

Polynomial Polynomial::with_order(const MonomialOrder& ord) const {
  if (ord == order_) return *this;
  return Polynomial(terms_, ord);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Term Polynomial::pop_leading_term() {
  Term t = leading_term();
  terms_.erase(terms_.begin());
  return t;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& t : terms_) s.push_back(t.monomial);
  return s;
}

std::optional<int> Polynomial::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.front().monomial.weight();
  for (const auto& t : terms_)
    if (t.monomial.weight() != w) return std::nullopt;
  return w;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading_coeff());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two descending term lists: a + c * m * b.
std::vector<Term> merge_axpy(const std::vector<Term>& a, const Rational& c, const Monomial& m,
                             const std::vector<Term>& b, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  const bool unit = m.is_one();
  while (i != a.end() || j != b.end()) {
    if (j == b.end()) {
      out.push_back(*i++);
      continue;
    }
    Monomial mj = unit ? j->monomial : j->monomial * m;
    if (i == a.end()) {
      out.push_back({std::move(mj), c * j->coeff});
      ++j;
      continue;
    }
    const auto cmp = ord.compare(i->monomial, mj);
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({std::move(mj), c * j->coeff});
      ++j;
    } else {
      Rational s = i->coeff + c * j->coeff;
      if (s != 0) out.push_back({i->monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void Polynomial::subtract_multiple(const Rational& c, const Monomial& m, const Polynomial& b) {
  if (b.order_ != order_) {
    subtract_multiple(c, m, b.with_order(order_));
    return;
  }
  terms_ = merge_axpy(terms_, -c, m, b.terms_, order_);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.order_ != order_) return *this += other.with_order(order_);
  terms_ = merge_axpy(terms_, 1, Monomial(), other.terms_, order_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  subtract_multiple(1, Monomial(), other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Monomial& m) {
  Polynomial r = p;
  if (m.is_one()) return r;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) prods.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial(std::move(prods), a.order());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.order_ != b.order_) return a == b.with_order(a.order_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

bool Polynomial::is_scalar_multiple_of(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return false;
  const Polynomial o = other.with_order(order_);
  if (o.size() != size()) return false;
  const Rational ratio = terms_.front().coeff / o.terms_.front().coeff;
  for (std::size_t i = 0; i < size(); ++i)
    if (terms_[i].monomial != o.terms_[i].monomial || terms_[i].coeff != ratio * o.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool neg = t.coeff < 0;
    if (i == 0)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    Rational mag = abs(t.coeff);
    if (t.monomial.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << t.monomial.to_string();
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = get() == '-';
      skip_ws();
    }
    for (;;) {
      Term t = parse_term();
      if (neg) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      neg = op == '-';
      skip_ws();
    }
    return terms;
  }

 private:
  Term parse_term() {
    Rational coeff = 1;
    std::vector<Monomial::Factor> factors;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Rational num(read_digits());
        skip_ws();
        if (peek() == '/') {
          get();
          skip_ws();
          mpz_class den(read_digits());
          if (den == 0) fail("zero denominator");
          num /= Rational(den);
        }
        coeff *= num;
      } else if (c == 'x' || c == 'y') {
        get();
        if (peek() == '_') get();
        const int idx = std::stoi(read_digits());
        int exp = 1;
        skip_ws();
        if (peek() == '^') {
          get();
          skip_ws();
          exp = std::stoi(read_digits());
        }
        factors.push_back({c == 'x' ? Variable::x(idx) : Variable::y(idx), exp});
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (peek() != '*') break;
      get();
    }
    return {Monomial(std::move(factors)), coeff};
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, MonomialOrder ord) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  if (trimmed == "0") return Polynomial(ord);
  return Polynomial(PolyParser(text).parse(), ord);
}

Term leading_term(const Polynomial& p, const MonomialOrder& ord) {
  if (p.order() == ord) return p.leading_term();
  if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (ord.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Polynomial derive(const Polynomial& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const auto& fs = t.monomial.factors();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      std::vector<Monomial::Factor> g = fs;
      g[k].exp -= 1;
      g.push_back({fs[k].var.shifted(), 1});
      out.push_back({Monomial(std::move(g)), t.coeff * fs[k].exp});
    }
  }
  return Polynomial(std::move(out), p.order());
}

Polynomial derive(const Polynomial& p, int times) {
  if (times < 0) throw std::invalid_argument("derivative order must be >= 0");
  Polynomial r = p;
  for (int i = 0; i < times; ++i) r = derive(r);
  return r;
}

namespace {

Polynomial binomial_family(int n, Family second, MonomialOrder ord) {
  if (n < 2) throw std::invalid_argument("generator weight must be >= 2");
  std::vector<Term> terms;
  for (int i = 0; i <= n - 2; ++i) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - 2), static_cast<unsigned long>(i));
    terms.push_back({Monomial({{Variable::x(1 + i), 1}, {Variable{second, n - 1 - i}, 1}}), Rational(c)});
  }
  return Polynomial(std::move(terms), ord);
}

}  // namespace

Polynomial gen_f_x2(int n, MonomialOrder ord) { return binomial_family(n, Family::X, ord); }

Polynomial gen_f_xy(int n, MonomialOrder ord) { return binomial_family(n, Family::Y, ord); }

// ----------------------------------------------------------------- Ambient

bool Ambient::contains(Variable v) const {
  const auto& from = v.family == Family::X ? x_from : y_from;
  return from && v.index >= *from;
}

bool Ambient::contains(const Monomial& m) const {
  return std::all_of(m.factors().begin(), m.factors().end(),
                     [this](const Monomial::Factor& f) { return contains(f.var); });
}

std::vector<Variable> Ambient::variables_up_to(int w) const {
  std::vector<Variable> vars;
  if (x_from)
    for (int i = *x_from; i <= w; ++i) vars.push_back(Variable::x(i));
  if (y_from)
    for (int i = *y_from; i <= w; ++i) vars.push_back(Variable::y(i));
  return vars;
}

std::string Ambient::to_string() const {
  std::string s = "k[";
  if (x_from) s += "x_i:i>=" + std::to_string(*x_from);
  if (x_from && y_from) s += ", ";
  if (y_from) s += "y_j:j>=" + std::to_string(*y_from);
  return s + "]";
}

std::vector<Monomial> monomials_of_weight(int w, const Ambient& ambient, const MonomialOrder& ord) {
  if (w < 0) throw std::invalid_argument("weight must be >= 0");
  const auto vars = ambient.variables_up_to(w);
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> current;
  auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (k == vars.size()) return;
    const int wt = vars[k].weight();
    for (int e = remaining / wt; e >= 0; --e) {
      if (e > 0) current.push_back({vars[k], e});
      self(self, k + 1, remaining - e * wt);
      if (e > 0) current.pop_back();
    }
  };
  rec(rec, 0, w);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

}  // namespace diffgb
