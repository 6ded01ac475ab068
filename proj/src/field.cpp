#include "cbox/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "cbox/errors.hpp"

namespace cbox {

// ---------------------------------------------------------------------------
// Rat helpers

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    std::size_t k = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (k >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(k), part.end(),
                       [](unsigned char ch) { return std::isdigit(ch) != 0; });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw SyntaxError("not a rational number: '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ZeroDenominator("zero denominator in '" + s + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  Poly p;
  p.c_ = std::move(v);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  Rat inv = 1 / leading();
  return *this * inv;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rat> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Rat> quo(rem.size() - db);
  const Rat lead_inv = 1 / d.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rat q = rem[k] * lead_inv;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * d[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_constant()) return a * (1 / b.leading());
  return divmod(a, b).quotient;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic();
  Poly y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return Poly(1);
    Poly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// ---------------------------------------------------------------------------
// RatFunc

namespace {

PositivityWitness weaker(PositivityWitness a, PositivityWitness b) {
  return static_cast<int>(a) < static_cast<int>(b) ? a : b;
}

}  // namespace

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = g.is_one() ? num : exact_div(num, g);
  Poly d = g.is_one() ? den : exact_div(den, g);
  Rat lead = d.leading();
  if (lead != 1) {
    Rat inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFunc RatFunc::with_witness(PositivityWitness w) const {
  RatFunc r = *this;
  r.witness_ = w;
  return r;
}

std::size_t RatFunc::weight() const noexcept {
  std::size_t w = 64 * static_cast<std::size_t>(num_.degree() + 1 + den_.degree());
  for (const auto& c : num_.coeffs()) {
    w += mpz_size(c.get_num_mpz_t()) + mpz_size(c.get_den_mpz_t());
  }
  for (const auto& c : den_.coeffs()) {
    w += mpz_size(c.get_num_mpz_t()) + mpz_size(c.get_den_mpz_t());
  }
  return w;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(s)");
  Rat lead = num_.leading();
  Poly n = den_ * (1 / lead);
  Poly d = num_ * (1 / lead);
  return RatFunc(Canonical{}, std::move(n), std::move(d), witness_);
}

RatFunc RatFunc::operator-() const {
  return RatFunc(Canonical{}, -num_, den_, PositivityWitness::Unchecked);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto w = weaker(a.witness_, b.witness_);
  if (a.den_.is_one() && b.den_.is_one()) {
    return RatFunc(RatFunc::Canonical{}, a.num_ + b.num_, Poly(1), w);
  }
  // Henrici: only the gcd of the denominators can survive in the sum.
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    Poly n = a.num_ * b.den_ + b.num_ * a.den_;
    if (n.is_zero()) return RatFunc();
    return RatFunc(RatFunc::Canonical{}, std::move(n), a.den_ * b.den_, w);
  }
  Poly ad = exact_div(a.den_, g);
  Poly bd = exact_div(b.den_, g);
  Poly n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return RatFunc();
  Poly d = ad * b.den_;
  Poly h = gcd(n, g);
  if (!h.is_one()) {
    n = exact_div(n, h);
    d = exact_div(d, h);
  }
  return RatFunc(RatFunc::Canonical{}, std::move(n), std::move(d), w);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  RatFunc r = a + (-b);
  r.witness_ = PositivityWitness::Unchecked;
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  const auto w = weaker(a.witness_, b.witness_);
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) {
    return RatFunc(RatFunc::Canonical{}, a.num_ * b.num_, Poly(1), w);
  }
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = g1.is_one() ? a.num_ : exact_div(a.num_, g1);
  Poly bd = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
  Poly bn = g2.is_one() ? b.num_ : exact_div(b.num_, g2);
  Poly ad = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
  Poly n = an * bn;
  Poly d = ad * bd;
  Rat lead = d.leading();
  if (lead != 1) {
    Rat inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  return RatFunc(RatFunc::Canonical{}, std::move(n), std::move(d), w);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Q(s)");
  return a * b.inv();
}

namespace {

// Scales p by k and returns integer coefficients.
std::vector<mpz_class> integer_coeffs(const Poly& p, const mpz_class& k) {
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rat v = c * k;
    out.push_back(v.get_num());
  }
  return out;
}

std::string poly_text(const std::vector<mpz_class>& c) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const mpz_class& a = c[k];
    if (a == 0) continue;
    const bool neg = a < 0;
    mpz_class mag = neg ? mpz_class(-a) : a;
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (out == "+") out.clear();
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "s";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string RatFunc::to_string() const {
  mpz_class l = 1;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  auto n = integer_coeffs(num_, l);
  auto d = integer_coeffs(den_, l);
  mpz_class g = 0;
  for (const auto* v : {&n, &d}) {
    for (const auto& c : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g > 1) {
    for (auto* v : {&n, &d}) {
      for (auto& c : *v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
  if (d.size() == 1 && d[0] == 1) return poly_text(n);
  return "(" + poly_text(n) + ")/(" + poly_text(d) + ")";
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)*
//         term := unary (('*'|'/') unary | implicit-factor)*
//         unary := ('-'|'+') unary | power
//         power := primary ('^' digits)?
//         primary := digits | 's' | '(' expr ')'

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw SyntaxError("cannot parse rational function '" + std::string(text_) + "' at " +
                      std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v = v + term();
      } else if (c == '-') {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * unary();
      } else if (c == '/') {
        ++pos_;
        RatFunc d = unary();
        if (d.is_zero()) throw ZeroDenominator("division by zero in '" + std::string(text_) + "'");
        v = v / d;
      } else if (c == 's' || c == '(') {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 4096) fail("exponent too large");
    RatFunc out(1);
    for (unsigned long k = 0; k < e; ++k) out = out * base;
    return out;
  }

  RatFunc primary() {
    char c = peek();
    if (c == 's') {
      ++pos_;
      return RatFunc::s();
    }
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(Rat(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------

Rat eval_at(const RatFunc& f, const Rat& sigma) {
  Rat d = f.den()(sigma);
  if (d == 0) throw PoleAtPoint("pole at s = " + to_string(sigma));
  return f.num()(sigma) / d;
}

RatFunc impedance(ComponentKind kind, const Rat& value) {
  if (value <= 0) throw NonPositiveValue("component value must be positive, got " + to_string(value));
  RatFunc z;
  switch (kind) {
    case ComponentKind::Resistor:
      z = RatFunc(value);
      break;
    case ComponentKind::Inductor:
      z = RatFunc(Poly::monomial(value, 1));
      break;
    case ComponentKind::Capacitor:
      z = RatFunc(Poly::monomial(value, 1)).inv();
      break;
  }
  return z.with_witness(PositivityWitness::Structural);
}

bool is_positive_sampled(const RatFunc& f, std::span<const Rat> points) {
  if (points.empty()) throw EmptySampleSet("positivity check needs at least one sample point");
  bool ok = true;
  for (const auto& sigma : points) {
    if (sigma <= 0) throw NonPositiveValue("sample point must be positive, got " + to_string(sigma));
    if (eval_at(f, sigma) <= 0) ok = false;
  }
  return ok;
}

std::span<const Rat> default_sample_points() {
  static const std::array<Rat, 6> grid = {Rat(1, 3), Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(7)};
  return grid;
}

}  // namespace cbox
