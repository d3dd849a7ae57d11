#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace geozeta {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class ErrorKind { parse, validation, domain, missing_eta, strip, argument };

/// Every failure raised by the core carries one of the kinds above; the C API
/// maps them onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Neumaier (improved Kahan-Babuska) summation applied to the real and
/// imaginary parts independently. The result depends only on the order of
/// the add() calls.
class CompensatedSum {
 public:
  void add(cplx x) {
    add_part(sum_re_, comp_re_, x.real());
    add_part(sum_im_, comp_im_, x.imag());
  }
  cplx value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0;
  double sum_im_ = 0.0, comp_im_ = 0.0;
};

/// log(1 - x) on the principal branch. Uses the Taylor series when |x| < 1/2.
cplx log1m(cplx x);

/// |a - b| / max(|a|, |b|, 1e-14).
double relative_residual(cplx a, cplx b);

/// Reduce an angle to [0, 2π).
double reduce_angle(double angle);

}  // namespace geozeta
