#pragma once

// Exact scalars: rationals Q and the rational-function field Q(s).

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbox {

using Rat = mpq_class;

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

/// Univariate polynomial over Q in the variable s, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(const Rat& constant);
  Poly(long constant) : Poly(Rat(constant)) {}

  static Poly monomial(const Rat& c, std::size_t degree);
  static Poly s() { return monomial(1, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }

  Rat operator()(const Rat& x) const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rat& k);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& k) { return a *= k; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws DivisionByZero when `b` is zero.
PolyDivision divmod(const Poly& a, const Poly& b);
/// Exact quotient, assuming `b` divides `a`.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd by the Euclidean algorithm over Q; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// How a value is known to lie in the positive cone used for impedances.
enum class PositivityWitness { Unchecked = 0, Sampled = 1, Structural = 2 };

/// Element of Q(s) in canonical form: coprime numerator and denominator,
/// denominator monic. Equality is therefore structural. The positivity
/// witness is metadata and takes no part in comparisons.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long constant) : num_(constant), den_(1) {}
  RatFunc(const Rat& constant) : num_(constant), den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}
  /// Throws ZeroDenominator when `den` is zero.
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc s() { return RatFunc(Poly::s()); }
  /// Parses e.g. `(3*s^2+2*s+2)/(s)`, `2s+1`, `1/2`. Throws SyntaxError.
  static RatFunc parse(std::string_view text);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  PositivityWitness witness() const noexcept { return witness_; }
  RatFunc with_witness(PositivityWitness w) const;

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant element; only meaningful when is_constant().
  Rat constant_value() const { return num_.coeff(0); }
  /// Rough size used to prefer simple pivots during elimination.
  std::size_t weight() const noexcept;

  RatFunc inv() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
  RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
  RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }
  RatFunc& operator/=(const RatFunc& rhs) { return *this = *this / rhs; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer-coefficient text form: `N` when the denominator is 1, else `(N)/(D)`.
  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(Canonical, Poly num, Poly den, PositivityWitness w)
      : num_(std::move(num)), den_(std::move(den)), witness_(w) {}

  Poly num_;
  Poly den_;
  PositivityWitness witness_ = PositivityWitness::Unchecked;
};

/// Exact value f(sigma); throws PoleAtPoint when sigma is a root of den(f).
Rat eval_at(const RatFunc& f, const Rat& sigma);

enum class ComponentKind { Resistor, Inductor, Capacitor };

/// R, s*L or 1/(s*C), tagged as structurally positive. Throws NonPositiveValue.
RatFunc impedance(ComponentKind kind, const Rat& value);

/// Necessary condition for positive-realness: f(sigma) > 0 at every sample.
bool is_positive_sampled(const RatFunc& f, std::span<const Rat> points);

/// {1/3, 1/2, 1, 2, 3, 7}
std::span<const Rat> default_sample_points();

}  // namespace cbox
