#pragma once

#include <gmpxx.h>

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace ado {

/// Comparison tolerance for approximate scalars. Exact comparisons ignore it.
struct Tolerance {
  double epsilon = 1e-9;
};

/// A complex number that is either an exact Gaussian rational (re + im i with
/// re, im in Q) or an approximate double-precision complex value.
///
/// Arithmetic between two exact values stays exact; as soon as one operand is
/// approximate the result is approximate.
class Scalar {
 public:
  enum class Mode { Exact, Approx };

  Scalar() = default;
  Scalar(int value) : value_(ExactValue{mpq_class(value), mpq_class(0)}) {}
  Scalar(long value) : value_(ExactValue{mpq_class(value), mpq_class(0)}) {}
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar exact(mpq_class re, mpq_class im = 0) { return Scalar(std::move(re), std::move(im)); }
  static Scalar rational(long num, long den, long im_num = 0, long im_den = 1);
  static Scalar approx(std::complex<double> z);
  static Scalar approx(double re, double im = 0.0) { return approx(std::complex<double>(re, im)); }
  static Scalar imaginary_unit() { return Scalar(0, 1); }

  /// Parses `rational [(+|-) rational i]`, a pure imaginary `rational i`, or
  /// the same with decimal literals. Any decimal literal makes the result
  /// approximate; rationals are stored reduced.
  static Scalar parse(std::string_view text);

  Mode mode() const { return std::holds_alternative<ExactValue>(value_) ? Mode::Exact : Mode::Approx; }
  bool is_exact() const { return mode() == Mode::Exact; }

  /// Exact components; throws DomainError for approximate scalars.
  const mpq_class& exact_real() const;
  const mpq_class& exact_imag() const;

  std::complex<double> to_complex() const;
  double real() const { return to_complex().real(); }
  double imag() const { return to_complex().imag(); }
  Scalar to_approx() const { return approx(to_complex()); }

  /// Modulus as a double (exact values are converted first).
  double magnitude() const { return std::abs(to_complex()); }
  /// max(|re|, |im|), the norm used for approximate equality.
  double max_component() const;
  Scalar conjugate() const;

  bool is_zero(Tolerance tol = {}) const;
  bool is_exact_zero() const;
  bool equals(const Scalar& other, Tolerance tol = {}) const;

  /// Canonical text in the grammar accepted by parse(). Approximate values
  /// always carry a decimal point or exponent so they reparse as approximate.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;
  Scalar operator+() const { return *this; }

  /// Exact values compare exactly; otherwise equality within the default
  /// tolerance.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.equals(b); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !a.equals(b); }

 private:
  struct ExactValue {
    mpq_class re;
    mpq_class im;
  };
  std::variant<ExactValue, std::complex<double>> value_ = ExactValue{mpq_class(0), mpq_class(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Eigen's numext fallbacks.
inline Scalar conj(const Scalar& s) { return s.conjugate(); }
inline Scalar real(const Scalar& s) { return s.is_exact() ? Scalar(s.exact_real()) : Scalar::approx(s.real()); }
inline Scalar imag(const Scalar& s) { return s.is_exact() ? Scalar(s.exact_imag()) : Scalar::approx(s.imag()); }
inline Scalar abs2(const Scalar& s) { return s * s.conjugate(); }

/// All complex roots, with multiplicity, of the polynomial whose coefficients
/// are given highest degree first. Degree must be 1..4 with a nonzero leading
/// coefficient. Roots are approximate and sorted by (re, im) after rounding
/// both parts to 12 decimals, so repeated calls select the same root.
std::vector<Scalar> poly_roots(std::span<const Scalar> coeffs);
std::vector<Scalar> poly_roots(std::initializer_list<Scalar> coeffs);

/// Evaluates the polynomial (highest degree first) at z by Horner's rule.
Scalar poly_eval(std::span<const Scalar> coeffs, const Scalar& z);

/// Principal k-th root of value: the root of z^k = value whose argument lies
/// in (-pi/k, pi/k].
Scalar principal_root(const Scalar& value, int k);

/// Looks for a Gaussian rational with denominators up to max_den close to the
/// approximate value z and returns it if `verify` accepts it exactly.
std::optional<Scalar> recover_exact(const Scalar& z, const std::function<bool(const Scalar&)>& verify,
                                    long max_den = 10000);

}  // namespace ado

namespace Eigen {

template <>
struct NumTraits<ado::Scalar> : GenericNumTraits<ado::Scalar> {
  using Real = ado::Scalar;
  using NonInteger = ado::Scalar;
  using Literal = ado::Scalar;
  using Nested = ado::Scalar;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };

  static inline Real epsilon() { return ado::Scalar::approx(1e-9); }
  static inline Real dummy_precision() { return ado::Scalar::approx(1e-9); }
  static inline int digits10() { return 15; }
};

}  // namespace Eigen
