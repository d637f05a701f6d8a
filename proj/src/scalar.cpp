#include "ado/scalar.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ado/error.hpp"

namespace ado {

Scalar::Scalar(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  value_ = ExactValue{std::move(re), std::move(im)};
}

Scalar Scalar::rational(long num, long den, long im_num, long im_den) {
  if (den == 0 || im_den == 0) throw DomainError("zero denominator in rational literal");
  return Scalar(mpq_class(num, den), mpq_class(im_num, im_den));
}

Scalar Scalar::approx(std::complex<double> z) {
  Scalar s;
  // Normalise negative zeros so text output is stable.
  s.value_ = std::complex<double>(z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag());
  return s;
}

const mpq_class& Scalar::exact_real() const {
  if (!is_exact()) throw DomainError("exact_real() on an approximate scalar");
  return std::get<ExactValue>(value_).re;
}

const mpq_class& Scalar::exact_imag() const {
  if (!is_exact()) throw DomainError("exact_imag() on an approximate scalar");
  return std::get<ExactValue>(value_).im;
}

std::complex<double> Scalar::to_complex() const {
  if (const auto* e = std::get_if<ExactValue>(&value_)) return {e->re.get_d(), e->im.get_d()};
  return std::get<std::complex<double>>(value_);
}

double Scalar::max_component() const {
  const auto z = to_complex();
  return std::max(std::abs(z.real()), std::abs(z.imag()));
}

Scalar Scalar::conjugate() const {
  if (const auto* e = std::get_if<ExactValue>(&value_)) return Scalar(e->re, -e->im);
  return approx(std::conj(std::get<std::complex<double>>(value_)));
}

bool Scalar::is_exact_zero() const {
  if (const auto* e = std::get_if<ExactValue>(&value_)) return sgn(e->re) == 0 && sgn(e->im) == 0;
  const auto& z = std::get<std::complex<double>>(value_);
  return z.real() == 0.0 && z.imag() == 0.0;
}

bool Scalar::is_zero(Tolerance tol) const {
  if (is_exact()) return is_exact_zero();
  return max_component() <= tol.epsilon;
}

bool Scalar::equals(const Scalar& other, Tolerance tol) const {
  if (is_exact() && other.is_exact()) {
    const auto& a = std::get<ExactValue>(value_);
    const auto& b = std::get<ExactValue>(other.value_);
    return a.re == b.re && a.im == b.im;
  }
  const auto d = to_complex() - other.to_complex();
  return std::max(std::abs(d.real()), std::abs(d.imag())) <= tol.epsilon;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    auto& a = std::get<ExactValue>(value_);
    const auto& b = std::get<ExactValue>(rhs.value_);
    a.re += b.re;
    a.im += b.im;
    return *this;
  }
  *this = approx(to_complex() + rhs.to_complex());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    auto& a = std::get<ExactValue>(value_);
    const auto& b = std::get<ExactValue>(rhs.value_);
    a.re -= b.re;
    a.im -= b.im;
    return *this;
  }
  *this = approx(to_complex() - rhs.to_complex());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    auto& a = std::get<ExactValue>(value_);
    const auto& b = std::get<ExactValue>(rhs.value_);
    if (sgn(a.im) == 0 && sgn(b.im) == 0) {
      a.re *= b.re;
      return *this;
    }
    mpq_class re = a.re * b.re - a.im * b.im;
    mpq_class im = a.re * b.im + a.im * b.re;
    a.re = std::move(re);
    a.im = std::move(im);
    return *this;
  }
  *this = approx(to_complex() * rhs.to_complex());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_exact_zero()) throw DomainError("division by zero");
  if (is_exact() && rhs.is_exact()) {
    auto& a = std::get<ExactValue>(value_);
    const auto& b = std::get<ExactValue>(rhs.value_);
    if (sgn(a.im) == 0 && sgn(b.im) == 0) {
      a.re /= b.re;
      return *this;
    }
    const mpq_class norm = b.re * b.re + b.im * b.im;
    mpq_class re = (a.re * b.re + a.im * b.im) / norm;
    mpq_class im = (a.im * b.re - a.re * b.im) / norm;
    a.re = std::move(re);
    a.im = std::move(im);
    return *this;
  }
  *this = approx(to_complex() / rhs.to_complex());
  return *this;
}

Scalar Scalar::operator-() const {
  if (const auto* e = std::get_if<ExactValue>(&value_)) return Scalar(-e->re, -e->im);
  return approx(-std::get<std::complex<double>>(value_));
}

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

// Imaginary coefficient without sign, ready to be followed by 'i'.
std::string imag_body(const std::string& magnitude) { return magnitude == "1" ? "" : magnitude; }

std::string join_parts(const std::string& re, bool re_zero, const std::string& im_abs, bool im_negative,
                       bool im_zero) {
  if (im_zero) return re;
  const std::string sign = im_negative ? "-" : "+";
  if (re_zero) return (im_negative ? "-" : "") + im_abs + "i";
  return re + sign + im_abs + "i";
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar run() {
    skip_ws();
    if (at_end()) fail("empty scalar");
    Term first = term(sign());
    skip_ws();
    if (at_end()) return assemble(first, std::nullopt);
    const char c = text_[pos_];
    if (c != '+' && c != '-') unexpected();
    Term second = term(sign());
    skip_ws();
    if (!at_end()) unexpected();
    if (first.imaginary == second.imaginary) {
      throw ParseError("scalar '" + std::string(text_) + "' has two " +
                       (first.imaginary ? "imaginary" : "real") + " parts");
    }
    return assemble(first, second);
  }

 private:
  struct Term {
    mpq_class exact;
    double value = 0.0;
    bool decimal = false;
    bool imaginary = false;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " in scalar '" + std::string(text_) + "'");
  }
  [[noreturn]] void unexpected() const {
    if (at_end()) fail("unexpected end of input");
    fail("unexpected token '" + std::string(1, text_[pos_]) + "' at position " + std::to_string(pos_));
  }

  int sign() {
    skip_ws();
    if (at_end()) unexpected();
    if (text_[pos_] == '+') {
      ++pos_;
      skip_ws();
      return 1;
    }
    if (text_[pos_] == '-') {
      ++pos_;
      skip_ws();
      return -1;
    }
    return 1;
  }

  Term term(int sgn) {
    Term t;
    const std::size_t start = pos_;
    while (!at_end()) {
      const char c = text_[pos_];
      const bool exponent_sign =
          (c == '+' || c == '-') && pos_ > start && (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E');
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == 'e' || c == 'E' ||
          exponent_sign) {
        ++pos_;
      } else {
        break;
      }
    }
    const std::string_view token = text_.substr(start, pos_ - start);
    if (token.empty()) {
      if (!at_end() && text_[pos_] == 'i') {
        t.exact = 1;
      } else {
        unexpected();
      }
    } else if (token.find('/') != std::string_view::npos) {
      const auto slash = token.find('/');
      const std::string num(token.substr(0, slash));
      const std::string den(token.substr(slash + 1));
      if (!all_digits(num) || !all_digits(den)) fail("malformed rational '" + std::string(token) + "'");
      mpz_class d(den);
      if (d == 0) fail("zero denominator in '" + std::string(token) + "'");
      t.exact = mpq_class(mpz_class(num), d);
      t.exact.canonicalize();
    } else if (token.find_first_of(".eE") != std::string_view::npos) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        fail("malformed decimal '" + std::string(token) + "'");
      }
      t.value = v;
      t.decimal = true;
    } else {
      if (!all_digits(std::string(token))) fail("malformed integer '" + std::string(token) + "'");
      t.exact = mpq_class(mpz_class(std::string(token)));
    }
    if (!at_end() && text_[pos_] == 'i') {
      t.imaginary = true;
      ++pos_;
    }
    if (sgn < 0) {
      t.exact = -t.exact;
      t.value = -t.value;
    }
    return t;
  }

  static bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  }

  static Scalar assemble(const Term& a, const std::optional<Term>& b) {
    const bool decimal = a.decimal || (b && b->decimal);
    const Term* re = a.imaginary ? (b ? &*b : nullptr) : &a;
    const Term* im = a.imaginary ? &a : (b ? &*b : nullptr);
    if (decimal) {
      auto to_d = [](const Term* t) { return t == nullptr ? 0.0 : (t->decimal ? t->value : t->exact.get_d()); };
      return Scalar::approx(to_d(re), to_d(im));
    }
    return Scalar(re ? re->exact : mpq_class(0), im ? im->exact : mpq_class(0));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double round12(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

using cd = std::complex<double>;

cd horner(const std::vector<cd>& c, cd z) {
  cd acc = 0.0;
  for (const auto& a : c) acc = acc * z + a;
  return acc;
}

cd horner_derivative(const std::vector<cd>& c, cd z) {
  cd acc = 0.0;
  const int d = static_cast<int>(c.size()) - 1;
  for (int k = 0; k < d; ++k) acc = acc * z + c[k] * static_cast<double>(d - k);
  return acc;
}

std::optional<mpq_class> best_rational(double x, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const double tol = 1e-9 * std::max(1.0, std::abs(x));
  // Continued-fraction convergents h/k.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    const mpq_class cand(h, k);
    if (std::abs(cand.get_d() - x) <= tol) return cand;
    if (frac < 1e-15) break;
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

std::string Scalar::to_string() const {
  if (const auto* e = std::get_if<ExactValue>(&value_)) {
    const bool im_neg = sgn(e->im) < 0;
    const mpq_class im_abs = abs(e->im);
    return join_parts(e->re.get_str(), sgn(e->re) == 0, imag_body(im_abs.get_str()), im_neg, sgn(e->im) == 0);
  }
  const auto& z = std::get<std::complex<double>>(value_);
  return join_parts(format_double(z.real()), z.real() == 0.0, format_double(std::abs(z.imag())), z.imag() < 0,
                    z.imag() == 0.0);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::vector<Scalar> poly_roots(std::span<const Scalar> coeffs) {
  if (coeffs.size() < 2 || coeffs.size() > 5) {
    throw DomainError("poly_roots supports degrees 1..4, got degree " + std::to_string(int(coeffs.size()) - 1));
  }
  if (coeffs.front().is_exact_zero()) throw DomainError("poly_roots: leading coefficient is zero");

  std::vector<cd> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(s.to_complex());
  const cd lead = c.front();
  for (auto& a : c) a /= lead;
  const int degree = static_cast<int>(c.size()) - 1;

  std::vector<cd> roots;
  if (degree == 1) {
    roots.push_back(-c[1]);
  } else if (degree == 2) {
    const cd b = c[1], cc = c[2];
    cd disc = std::sqrt(b * b - 4.0 * cc);
    if ((std::conj(b) * disc).real() < 0.0) disc = -disc;
    const cd q = -0.5 * (b + disc);
    if (std::abs(q) == 0.0) {
      roots = {0.0, 0.0};
    } else {
      roots = {q, cc / q};
    }
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int k = 0; k < degree; ++k) companion(0, k) = -c[k + 1];
    for (int k = 1; k < degree; ++k) companion(k, k - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    for (int k = 0; k < degree; ++k) roots.push_back(solver.eigenvalues()(k));
  }

  // Newton polishing against the original polynomial; keep a step only if it
  // reduces the residual.
  for (auto& r : roots) {
    for (int it = 0; it < 8; ++it) {
      const cd f = horner(c, r);
      const cd df = horner_derivative(c, r);
      if (std::abs(f) == 0.0 || std::abs(df) == 0.0) break;
      const cd next = r - f / df;
      if (std::abs(horner(c, next)) >= std::abs(f)) break;
      r = next;
    }
  }

  std::sort(roots.begin(), roots.end(), [](const cd& a, const cd& b) {
    const double ar = round12(a.real()), br = round12(b.real());
    if (ar != br) return ar < br;
    return round12(a.imag()) < round12(b.imag());
  });

  std::vector<Scalar> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(Scalar::approx(r));
  return out;
}

std::vector<Scalar> poly_roots(std::initializer_list<Scalar> coeffs) {
  return poly_roots(std::span<const Scalar>(coeffs.begin(), coeffs.size()));
}

Scalar poly_eval(std::span<const Scalar> coeffs, const Scalar& z) {
  Scalar acc;
  for (const auto& a : coeffs) acc = acc * z + a;
  return acc;
}

Scalar principal_root(const Scalar& value, int k) {
  if (k < 1 || k > 4) throw DomainError("principal_root supports k = 1..4");
  if (k == 1) return value;
  if (value.is_exact_zero()) return Scalar::approx(0.0);
  std::vector<Scalar> coeffs(k + 1, Scalar(0));
  coeffs.front() = Scalar(1);
  coeffs.back() = -value;
  const auto roots = poly_roots(coeffs);
  const double target = std::arg(value.to_complex()) / k;
  // The principal branch has argument in (-pi/k, pi/k]; the candidate closest
  // to arg(value)/k is it. Ties cannot occur because roots differ in
  // argument by 2*pi/k.
  const Scalar* best = &roots.front();
  double best_gap = std::numbers::pi * 4;
  for (const auto& r : roots) {
    const double gap = std::abs(std::arg(r.to_complex()) - target);
    if (gap < best_gap) {
      best_gap = gap;
      best = &r;
    }
  }
  return *best;
}

std::optional<Scalar> recover_exact(const Scalar& z, const std::function<bool(const Scalar&)>& verify,
                                    long max_den) {
  if (z.is_exact()) return verify(z) ? std::optional<Scalar>(z) : std::nullopt;
  const auto re = best_rational(z.real(), max_den);
  const auto im = best_rational(z.imag(), max_den);
  if (!re || !im) return std::nullopt;
  Scalar candidate(*re, *im);
  if (verify(candidate)) return candidate;
  return std::nullopt;
}

}  // namespace ado
