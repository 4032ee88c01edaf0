#include "yhecke/coeffring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

namespace yh {

namespace {

struct CycloTable {
  int phi = 0;
  std::vector<long> poly;                 // Phi_d, low degree first, monic
  std::vector<std::vector<long>> powers;  // zeta^k reduced, k = 0..d-1
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic
  const std::size_t dd = den.size() - 1;
  std::vector<long> q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long c = num[i];
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

const std::array<CycloTable, kMaxCyclotomicOrder + 1>& cyclo_tables() {
  static const auto tables = [] {
    std::array<CycloTable, kMaxCyclotomicOrder + 1> t{};
    for (int d = 1; d <= kMaxCyclotomicOrder; ++d) {
      std::vector<long> p(d + 1, 0);
      p[0] = -1;
      p[d] = 1;
      for (int k = 1; k < d; ++k)
        if (d % k == 0) p = poly_divide_exact(p, t[k].poly);
      CycloTable& ct = t[d];
      ct.poly = p;
      ct.phi = static_cast<int>(p.size()) - 1;
      ct.powers.assign(d, std::vector<long>(ct.phi, 0));
      std::vector<long> cur(ct.phi, 0);
      cur[0] = 1;
      for (int k = 0; k < d; ++k) {
        ct.powers[k] = cur;
        // multiply by zeta and reduce with zeta^phi = -sum p_i zeta^i
        std::vector<long> next(ct.phi, 0);
        const long top = cur[ct.phi - 1];
        for (int i = ct.phi - 1; i > 0; --i) next[i] = cur[i - 1];
        for (int i = 0; i < ct.phi; ++i) next[i] -= top * p[i];
        cur = std::move(next);
      }
    }
    return t;
  }();
  return tables;
}

const CycloTable& table(int d) {
  if (d < 1 || d > kMaxCyclotomicOrder)
    throw std::invalid_argument("cyclotomic order out of supported range: " + std::to_string(d));
  return cyclo_tables()[d];
}

std::string rational_string(const Rational& r) { return r.get_str(); }

}  // namespace

int euler_phi(int d) { return table(d).phi; }

const std::vector<long>& cyclotomic_polynomial(int d) { return table(d).poly; }

// ---------------------------------------------------------------- CycNumber

CycNumber::CycNumber(Rational r, int d) : d_(d), c_(table(d).phi) {
  r.canonicalize();
  c_[0] = std::move(r);
}

CycNumber CycNumber::zeta_power(int d, long k) {
  const CycloTable& t = table(d);
  long kk = k % d;
  if (kk < 0) kk += d;
  CycNumber z;
  z.d_ = d;
  z.c_.assign(t.phi, Rational(0));
  for (int i = 0; i < t.phi; ++i) z.c_[i] = t.powers[kk][i];
  return z;
}

CycNumber CycNumber::from_coords(int d, std::vector<Rational> coords) {
  const CycloTable& t = table(d);
  if (static_cast<int>(coords.size()) != t.phi)
    throw std::invalid_argument("coordinate vector length must equal phi(d)");
  CycNumber z;
  z.d_ = d;
  z.c_ = std::move(coords);
  for (auto& c : z.c_) c.canonicalize();
  return z;
}

bool CycNumber::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool CycNumber::is_one() const { return c_[0] == 1 && is_rational(); }

bool CycNumber::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

CycNumber CycNumber::inverse() const {
  if (!is_rational() || sgn(c_[0]) == 0)
    throw std::domain_error("only nonzero rational cyclotomic numbers are inverted");
  CycNumber r = *this;
  r.c_[0] = 1 / c_[0];
  return r;
}

int CycNumber::common_order(int a, int b) {
  if (a == b || b == 1) return a;
  if (a == 1) return b;
  throw OrderMismatch("cyclotomic orders differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

void CycNumber::promote_to(int d) {
  if (d_ == d) return;
  c_.resize(table(d).phi, Rational(0));
  d_ = d;
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  const int d = common_order(d_, o.d_);
  promote_to(d);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  const int d = common_order(d_, o.d_);
  promote_to(d);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  *this = *this * o;
  return *this;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  const int d = CycNumber::common_order(a.d_, b.d_);
  CycNumber r;
  r.d_ = d;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const CycNumber& big = a.c_.size() == 1 ? b : a;
    const Rational& s = a.c_.size() == 1 ? a.c_[0] : b.c_[0];
    r.c_ = big.c_;
    for (auto& c : r.c_) c *= s;
    r.c_.resize(table(d).phi, Rational(0));
    return r;
  }
  const CycloTable& t = table(d);
  std::vector<Rational> prod(2 * t.phi - 1, Rational(0));
  for (int i = 0; i < t.phi; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < t.phi; ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  r.c_.assign(t.phi, Rational(0));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    if (static_cast<int>(k) < t.phi) {
      r.c_[k] += prod[k];
      continue;
    }
    const auto& row = t.powers[k % d];
    for (int i = 0; i < t.phi; ++i)
      if (row[i] != 0) r.c_[i] += prod[k] * row[i];
  }
  return r;
}

CycNumber cyc_mul(const CycNumber& a, const CycNumber& b) {
  if (a.order() != b.order()) throw OrderMismatch("cyc_mul: cyclotomic orders differ");
  return a * b;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  if (a.d_ != b.d_ && a.d_ != 1 && b.d_ != 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& x = i < a.c_.size() ? a.c_[i] : Rational(0);
    const Rational& y = i < b.c_.size() ? b.c_[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

std::string CycNumber::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& r = c_[k];
    if (sgn(r) == 0) continue;
    const bool neg = sgn(r) < 0;
    const Rational mag = abs(r);
    std::string body;
    if (k == 0) {
      body = rational_string(mag);
    } else {
      const std::string zp = k == 1 ? "z" : "z^" + std::to_string(k);
      body = mag == 1 ? zp : rational_string(mag) + "*" + zp;
    }
    if (first) {
      out += (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return first ? "0" : out;
}

// -------------------------------------------------------------------- VarId

namespace {
std::mutex g_names_mutex;
std::set<std::string>& name_registry() {
  static std::set<std::string> names;
  return names;
}
const std::string kEmptyName;
}  // namespace

VarId VarId::xparam(int k, int a) {
  if (a == 0) throw std::invalid_argument("x_0 is the constant 1, not a variable");
  return VarId(VarKind::XParam, k, a, nullptr);
}

VarId VarId::named(std::string_view name) {
  std::lock_guard lock(g_names_mutex);
  auto it = name_registry().emplace(name).first;
  return VarId(VarKind::Named, 0, 0, &*it);
}

const std::string& VarId::name() const { return name_ ? *name_ : kEmptyName; }

std::string VarId::to_string() const {
  switch (kind_) {
    case VarKind::U: return "u";
    case VarKind::V: return "v";
    case VarKind::Gamma: return "gamma";
    case VarKind::XParam: return "x(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
    case VarKind::Named: return name();
  }
  return "?";
}

bool operator<(const VarId& a, const VarId& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.i_ != b.i_) return a.i_ < b.i_;
  if (a.j_ != b.j_) return a.j_ < b.j_;
  if (a.name_ == b.name_) return false;
  return a.name() < b.name();
}

// ----------------------------------------------------------------- Monomial

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      const int e = i->second + j->second;
      if (e != 0) out.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

int monomial_exponent(const Monomial& m, const VarId& var) {
  for (const auto& [v, e] : m)
    if (v == var) return e;
  return 0;
}

namespace {
std::string exponent_suffix(int doubled) {
  if (doubled == 2) return "";
  if (doubled % 2 == 0) return "^" + std::to_string(doubled / 2);
  return "^" + std::to_string(doubled) + "/2";
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += "*";
    s += v.to_string() + exponent_suffix(e);
  }
  return s;
}
}  // namespace

// -------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) : LaurentPoly(CycNumber(c)) {}
LaurentPoly::LaurentPoly(const Rational& c) : LaurentPoly(CycNumber(c)) {}
LaurentPoly::LaurentPoly(const CycNumber& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::var(const VarId& v, int power) { return var_half(v, 2 * power); }

LaurentPoly LaurentPoly::var_half(const VarId& v, int doubled_power) {
  if (doubled_power == 0) return LaurentPoly(1);
  return term(CycNumber(1), Monomial{{v, doubled_power}});
}

LaurentPoly LaurentPoly::term(const CycNumber& c, Monomial m) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

LaurentPoly LaurentPoly::x(int k, int a) {
  if (a == 0) return LaurentPoly(1);
  return var(VarId::xparam(k, a));
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

CycNumber LaurentPoly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? CycNumber(0) : it->second;
}

bool LaurentPoly::contains(const VarId& v) const {
  for (const auto& [m, c] : terms_)
    if (monomial_exponent(m, v) != 0) return true;
  return false;
}

void LaurentPoly::add_term(const Monomial& m, const CycNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::times_term(const Monomial& m, const CycNumber& c) const {
  LaurentPoly r;
  if (c.is_zero()) return r;
  for (const auto& [mm, cc] : terms_) r.add_term(monomial_mul(mm, m), cc * c);
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("inverse of a non-monomial Laurent polynomial");
  const auto& [m, c] = *terms_.begin();
  Monomial inv = m;
  for (auto& [v, e] : inv) e = -e;
  return term(c.inverse(), std::move(inv));
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::pow_half(int doubled) const {
  if (doubled % 2 == 0) return pow(doubled / 2);
  if (terms_.size() != 1 || !terms_.begin()->second.is_one())
    throw std::domain_error("half-integer power of a non-unit monomial");
  Monomial m = terms_.begin()->first;
  for (auto& [v, e] : m) {
    if (e % 2 != 0) throw std::domain_error("quarter exponents are not representable");
    e = e / 2 * doubled;
  }
  return term(CycNumber(1), std::move(m));
}

std::string LaurentPoly::to_string() const { return poly_canonical_string(*this); }

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly poly_substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& map) {
  std::map<std::pair<VarId, int>, LaurentPoly> power_cache;
  auto power_of = [&](const VarId& v, int e) -> const LaurentPoly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    LaurentPoly val;
    auto mit = map.find(v);
    if (mit == map.end()) {
      val = LaurentPoly::var_half(v, e);
    } else {
      try {
        val = mit->second.pow_half(e);
      } catch (const std::domain_error& err) {
        throw NonInvertibleSubstitution("cannot substitute " + v.to_string() + exponent_suffix(e) +
                                        " by a power of (" + mit->second.to_string() + "): " + err.what());
      }
    }
    return power_cache.emplace(key, std::move(val)).first->second;
  };
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly t(c);
    for (const auto& [v, e] : m) t *= power_of(v, e);
    out += t;
  }
  return out;
}

std::string poly_canonical_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = monomial_string(m);
    if (c.is_rational()) {
      const Rational& r = c.rational();
      const bool neg = sgn(r) < 0;
      const Rational mag = abs(r);
      std::string body;
      if (mono.empty())
        body = mag.get_str();
      else if (mag == 1)
        body = mono;
      else
        body = mag.get_str() + "*" + mono;
      out += first ? (neg ? "-" : "") + body : (neg ? " - " : " + ") + body;
    } else {
      std::string body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += "*" + mono;
      out += first ? body : " + " + body;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << poly_canonical_string(p); }
std::ostream& operator<<(std::ostream& os, const CycNumber& c) { return os << c.to_string(); }

LaurentPoly markov_z() { return LaurentPoly::v(-1) - LaurentPoly::u(2) * LaurentPoly::v(-1); }

// ------------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int d) : s_(s), d_(d) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view s_;
  int d_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                     std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    const bool neg = accept('-');
    long v = std::stol(digits());
    return neg ? -v : v;
  }

  LaurentPoly expr() {
    LaurentPoly acc;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    LaurentPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  // doubled exponent
  int exponent() {
    const bool paren = accept('(');
    const long num = integer();
    long doubled = 2 * num;
    if (accept('/')) {
      const long den = std::stol(digits());
      if (den != 2) fail("only half-integer exponents are supported");
      doubled = num;
    }
    if (paren) expect(')');
    return static_cast<int>(doubled);
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (accept('^')) {
      const int e = exponent();
      try {
        return base.pow_half(e);
      } catch (const std::domain_error& err) {
        fail(err.what());
      }
    }
    return base;
  }

  LaurentPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        num += "/" + digits();
      }
      Rational r(num);
      r.canonicalize();
      return LaurentPoly(r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string id(s_.substr(start, pos_ - start));
      if (id == "u") return LaurentPoly::u();
      if (id == "v") return LaurentPoly::v();
      if (id == "gamma") return LaurentPoly::gamma();
      if (id == "z") return LaurentPoly(CycNumber::zeta_power(d_, 1));
      if (id == "x") {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '(') {
          ++pos_;
          const long k = integer();
          expect(',');
          const long a = integer();
          expect(')');
          return LaurentPoly::x(static_cast<int>(k), static_cast<int>(a));
        }
      }
      return LaurentPoly::var(VarId::named(id));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, int d) { return PolyParser(text, d).parse(); }

}  // namespace yh
