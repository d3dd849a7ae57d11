#include "core/oracle.hpp"

#include <cmath>
#include <sstream>

#include "core/numeric.hpp"

namespace geozeta {

GaussianRational::GaussianRational(mpq_class a, mpq_class b) : re(std::move(a)), im(std::move(b)) {
  re.canonicalize();
  im.canonicalize();
}

GaussianRational GaussianRational::operator+(const GaussianRational& o) const {
  return {re + o.re, im + o.im};
}
GaussianRational GaussianRational::operator-(const GaussianRational& o) const {
  return {re - o.re, im - o.im};
}
GaussianRational GaussianRational::operator-() const { return {-re, -im}; }
GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}
GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  const mpq_class d = o.norm();
  if (d == 0) throw Error(ErrorKind::domain, "exact division by zero");
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}
GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}
bool GaussianRational::operator==(const GaussianRational& o) const {
  return re == o.re && im == o.im;
}
GaussianRational GaussianRational::conj() const { return {re, -im}; }
mpq_class GaussianRational::norm() const { return re * re + im * im; }
bool GaussianRational::is_zero() const { return re == 0 && im == 0; }
std::string GaussianRational::str() const { return re.get_str() + " + " + im.get_str() + "i"; }

GaussianRational pow(const GaussianRational& x, long e) {
  GaussianRational base = x;
  if (e < 0) {
    base = GaussianRational(1) / x;
    e = -e;
  }
  GaussianRational acc(1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
  if (q < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  out = mpq_class(a, b);
  out.canonicalize();
  return true;
}

}  // namespace

ExactClass::ExactClass(mpq_class q, GaussianRational u, std::optional<GaussianRational> u_half)
    : q_(std::move(q)), u_(std::move(u)), h_(std::move(u_half)) {
  q_.canonicalize();
  if (!(q_ > 0 && q_ < 1)) throw Error(ErrorKind::validation, "exact class: q must lie in (0, 1)");
  if (!rational_sqrt(q_, r_))
    throw Error(ErrorKind::validation, "exact class: q is not the square of a rational");
  if (u_.norm() != 1) throw Error(ErrorKind::validation, "exact class: |u| != 1");
  if (h_ && !(*h_ * *h_ == u_))
    throw Error(ErrorKind::validation, "exact class: u_half^2 != u");
}

ExactClass ExactClass::from_half(mpq_class q, GaussianRational u_half) {
  GaussianRational u = u_half * u_half;
  return ExactClass(std::move(q), std::move(u), std::move(u_half));
}

GeodesicEntry ExactClass::to_entry() const {
  GeodesicEntry e;
  e.length = -std::log(q_.get_d());
  e.angle = reduce_angle(std::atan2(u_.im.get_d(), u_.re.get_d()));
  e.spin_sign = 1;
  if (h_) {
    const cplx h(h_->re.get_d(), h_->im.get_d());
    const cplx half = std::polar(1.0, 0.5 * e.angle);
    e.spin_sign = (h * std::conj(half)).real() > 0.0 ? 1 : -1;
  }
  return e;
}

HalfInt HalfInt::from_double(double s) {
  const double t = 2.0 * s;
  if (!std::isfinite(t) || t != std::nearbyint(t) || std::abs(t) > 1e9)
    throw Error(ErrorKind::argument, "exact check needs s in Z/2");
  return {static_cast<long>(t)};
}

std::string exact_case_name(const ExactCase& c) {
  std::ostringstream os;
  switch (c.id) {
    case ExactIdentity::ruelle_decomposition: os << "prop-ruelle-dec(m=" << c.M << ")"; break;
    case ExactIdentity::selberg_rho_decomposition:
      os << "selberg-rho-dec(m=" << c.M << ",k=" << c.k << ")";
      break;
    case ExactIdentity::four_selberg_quotient: os << "four-selberg(m=" << c.M << ")"; break;
    case ExactIdentity::rho_selberg_quotient: os << "rho-selberg(m=" << c.M << ")"; break;
    case ExactIdentity::zograf_ratio_f: os << "zograf-ratio(F,n=" << c.M << ")"; break;
    case ExactIdentity::zograf_ratio_g: os << "zograf-ratio(G,n=" << c.M << ")"; break;
    case ExactIdentity::corollary_f: os << "corollary-FG(F,n=" << c.M << ")"; break;
    case ExactIdentity::corollary_g: os << "corollary-FG(G,n=" << c.M << ")"; break;
  }
  os << " at s=" << c.s.value();
  return os.str();
}

ExactSides exact_sides(const ExactCase& c) {
  using K = ExactKind;
  ExactSides out;
  const int M = c.M;
  const bool needs_positive = c.id == ExactIdentity::zograf_ratio_f ||
                              c.id == ExactIdentity::corollary_f ||
                              c.id == ExactIdentity::corollary_g;
  if (M < 0 || (needs_positive && M < 1))
    throw Error(ErrorKind::argument, "exact case index out of range");
  switch (c.id) {
    case ExactIdentity::ruelle_decomposition:
      out.lhs.push_back({K::ruelle_rho, 0, M, 0, 1});
      for (int l = 0; l <= M; ++l) out.rhs.push_back({K::ruelle, M - 2 * l, 0, -M + 2 * l, 1});
      break;
    case ExactIdentity::selberg_rho_decomposition:
      out.lhs.push_back({K::selberg_rho, c.k, M, 0, 1});
      for (int l = 0; l <= M; ++l)
        out.rhs.push_back({K::selberg, M - 2 * l + c.k, 0, -M + 2 * l, 1});
      break;
    case ExactIdentity::four_selberg_quotient:
      out.lhs.push_back({K::ruelle_rho, 0, M, 0, 1});
      out.rhs = {{K::selberg, M, 0, -M, 1},
                 {K::selberg, -M, 0, M + 4, 1},
                 {K::selberg, M + 2, 0, -M + 2, -1},
                 {K::selberg, -(M + 2), 0, M + 2, -1}};
      break;
    case ExactIdentity::rho_selberg_quotient:
      out.lhs.push_back({K::ruelle_rho, 0, M, 0, 1});
      out.rhs = {{K::selberg_rho, 0, M, 0, 1},
                 {K::selberg_rho, 0, M, 4, 1},
                 {K::selberg_rho, 2, M, 2, -1},
                 {K::selberg_rho, -2, M, 2, -1}};
      break;
    case ExactIdentity::zograf_ratio_f:
      out.lhs.push_back({K::zograf_f, 0, M, 0, 1});
      out.rhs = {{K::selberg, -2 * M, 0, 2 * M, 1}, {K::selberg, -2 * (M - 1), 0, 2 * M + 2, -1}};
      break;
    case ExactIdentity::zograf_ratio_g:
      out.lhs.push_back({K::zograf_g, 0, M, 0, 1});
      out.rhs = {{K::selberg, -(2 * M + 1), 0, 2 * M + 1, 1},
                 {K::selberg, -(2 * M - 1), 0, 2 * M + 3, -1}};
      break;
    case ExactIdentity::corollary_f:
      out.lhs = {{K::zograf_f, 0, M, 0, 2}, {K::ruelle_rho, 0, 2 * (M - 1), 0, 1}};
      out.rhs = {{K::selberg, 2 * (M - 1), 0, -2 * M + 2, 1},
                 {K::selberg, -2 * M, 0, 2 * M, 1},
                 {K::selberg, -2 * (M - 1), 0, 2 * M + 2, -1},
                 {K::selberg, 2 * M, 0, -2 * M + 4, -1}};
      break;
    case ExactIdentity::corollary_g:
      out.lhs = {{K::zograf_g, 0, M, 0, 2}, {K::ruelle_rho, 0, 2 * M - 1, 0, 1}};
      out.rhs = {{K::selberg, 2 * M - 1, 0, -2 * M + 1, 1},
                 {K::selberg, -(2 * M + 1), 0, 2 * M + 1, 1},
                 {K::selberg, 2 * M + 1, 0, -2 * M + 3, -1},
                 {K::selberg, -(2 * M - 1), 0, 2 * M + 3, -1}};
      break;
  }
  return out;
}

namespace {

/// Quantities of one power γ₀^j shared by every factor.
class PowerTerms {
 public:
  PowerTerms(const ExactClass& c, int j) : c_(c), j_(j) {
    const GaussianRational z = GaussianRational(c.q()) * c.u().conj();
    zj_ = pow(z, j);
    const GaussianRational one(1);
    weight_ = one / ((one - zj_) * (one - zj_.conj()));
    one_minus_zj_ = one - zj_;
  }

  /// u_half^e, falling back to u^{e/2} for even e.
  GaussianRational half_pow(long e) const {
    if (e % 2 == 0) return pow(c_.u(), e / 2);
    if (!c_.u_half()) throw Error(ErrorKind::argument, "u_half missing for an odd character");
    return pow(*c_.u_half(), e);
  }

  /// e^{−s jℓ} with s = twice/2.
  GaussianRational decay(long twice) const { return pow(GaussianRational(c_.root_q()), twice * j_); }

  /// tr ρ_M(γ₀^j) by the Clebsch-Gordan recurrence.
  GaussianRational trace(int M) const {
    const GaussianRational one(1);
    if (M == 0) return one;
    if (M % 2 == 0) {
      // Even M: recurrence in μ = λ² with S_a = Σ_{|b|≤a} μ^{bj}.
      const GaussianRational mu = half_pow(2L * j_) / GaussianRational(pow_q(j_));
      const GaussianRational t = mu + one / mu;
      GaussianRational prev = one, cur = t + one;
      for (int a = 2; a <= M / 2; ++a) {
        GaussianRational next = t * cur - prev;
        prev = cur;
        cur = next;
      }
      return cur;
    }
    const GaussianRational lambda = half_pow(j_) / GaussianRational(pow_r(j_));
    const GaussianRational t1 = lambda + one / lambda;
    GaussianRational prev = one, cur = t1;
    for (int b = 2; b <= M; ++b) {
      GaussianRational next = t1 * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  GaussianRational factor(const ExactFactor& f, HalfInt s) const {
    const long x2 = s.twice + f.shift_twice;
    GaussianRational v;
    switch (f.kind) {
      case ExactKind::ruelle: v = half_pow(static_cast<long>(f.k) * j_) * decay(x2); break;
      case ExactKind::selberg:
        v = half_pow(static_cast<long>(f.k) * j_) * decay(x2) * weight_;
        break;
      case ExactKind::ruelle_rho: v = trace(f.M) * decay(x2); break;
      case ExactKind::selberg_rho:
        v = trace(f.M) * half_pow(static_cast<long>(f.k) * j_) * decay(x2) * weight_;
        break;
      case ExactKind::zograf_f: v = decay(x2) * pow(zj_, f.M) / one_minus_zj_; break;
      case ExactKind::zograf_g: {
        const long e = static_cast<long>(2 * f.M + 1) * j_;
        v = decay(x2) * GaussianRational(pow_r(e)) * half_pow(-e) / one_minus_zj_;
        break;
      }
    }
    return GaussianRational(mpq_class(-f.sign, j_)) * v;
  }

 private:
  mpq_class pow_r(long e) const { return pow(GaussianRational(c_.root_q()), e).re; }
  mpq_class pow_q(long e) const { return pow(GaussianRational(c_.q()), e).re; }

  const ExactClass& c_;
  int j_;
  GaussianRational zj_, weight_, one_minus_zj_;
};

}  // namespace

ExactCheckResult exact_check(const std::vector<ExactClass>& classes, const ExactSides& sides,
                             HalfInt s, int max_power) {
  if (max_power < 1) throw Error(ErrorKind::argument, "max_power must be >= 1");
  ExactCheckResult out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int j = 1; j <= max_power; ++j) {
      const PowerTerms terms(classes[c], j);
      ExactTerm t;
      for (const auto& f : sides.lhs) t.lhs += terms.factor(f, s);
      for (const auto& f : sides.rhs) t.rhs += terms.factor(f, s);
      ++out.terms_checked;
      if (!(t.lhs == t.rhs) && out.passed) {
        out.passed = false;
        out.first_failure = std::make_pair(c, j);
        out.failing_term = t;
      }
      out.ledger.emplace(std::make_pair(c, j), std::move(t));
    }
  }
  return out;
}

ExactCheckResult exact_identity_check(const std::vector<ExactClass>& classes, const ExactCase& c,
                                      int max_power) {
  return exact_check(classes, exact_sides(c), c.s, max_power);
}

std::vector<ExactClass> exact_fixture_classes() {
  return {
      ExactClass::from_half(mpq_class(1, 4), GaussianRational(mpq_class(3, 5), mpq_class(4, 5))),
      ExactClass::from_half(mpq_class(4, 9), GaussianRational(mpq_class(5, 13), mpq_class(12, 13))),
      ExactClass::from_half(mpq_class(9, 25),
                            GaussianRational(mpq_class(-8, 17), mpq_class(-15, 17))),
  };
}

std::vector<ExactCase> exact_battery() {
  std::vector<ExactCase> out;
  const long integer_s[] = {8, 10, 12};  // s = 4, 5, 6
  const long half_s[] = {9, 11};         // s = 4.5, 5.5
  for (const long s2 : integer_s) {
    const HalfInt s{s2};
    for (int M = 0; M <= 3; ++M) {
      out.push_back({ExactIdentity::ruelle_decomposition, M, 0, s});
      for (const int k : {-2, 0, 1, 2})
        out.push_back({ExactIdentity::selberg_rho_decomposition, M, k, s});
      out.push_back({ExactIdentity::four_selberg_quotient, M, 0, s});
      out.push_back({ExactIdentity::rho_selberg_quotient, M, 0, s});
    }
    for (int n = 3; n <= 5; ++n) out.push_back({ExactIdentity::zograf_ratio_f, n, 0, s});
    for (int n = 2; n <= 4; ++n) out.push_back({ExactIdentity::zograf_ratio_g, n, 0, s});
    out.push_back({ExactIdentity::corollary_f, 3, 0, s});
    out.push_back({ExactIdentity::corollary_g, 2, 0, s});
  }
  for (const long s2 : half_s)
    for (int n = 2; n <= 4; ++n) out.push_back({ExactIdentity::zograf_ratio_g, n, 0, HalfInt{s2}});
  return out;
}

}  // namespace geozeta
