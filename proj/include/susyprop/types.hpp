#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace susyprop {

using Complex = std::complex<double>;

inline constexpr Complex kImagUnit{0.0, 1.0};

// Base class for everything this library throws on invalid input or
// failed numerics.  Callers that only want "did it work" can catch this.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Propagator requested at a caustic (oscillator t = n*pi) or at t = 0.
struct SingularTimeError : Error {
  using Error::Error;
};

// Special-function argument in a region where the result overflows double.
struct RangeError : Error {
  using Error::Error;
};

// Resolvent energy on (or too close to) the continuous spectrum.
struct SpectralBoundaryError : Error {
  using Error::Error;
};

// Transformation function u(x) vanishes (or nearly so) on the real line.
struct NearZeroError : Error {
  using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance; the message
// carries the achieved error estimate.
struct QuadratureError : Error {
  QuadratureError(const std::string& msg, double achieved)
      : Error(msg + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

// Sampled state has non-negligible mass at the grid/window boundary.
struct DomainTooSmallError : Error {
  using Error::Error;
};

struct GridMismatchError : Error {
  using Error::Error;
};

// Requested the added bound state of an isospectral (case I) transformation.
struct NoBoundStateError : Error {
  using Error::Error;
};

// Scenario/config file is malformed or inconsistent.
struct ConfigError : Error {
  using Error::Error;
};

// Uniform spatial grid on [x_min, x_max]; all sampled functions in this
// library live on one of these.
class Grid1D {
 public:
  Grid1D(double x_min, double x_max, int n_points)
      : x_min_(x_min), x_max_(x_max), n_(n_points) {
    if (!(x_min < x_max)) throw Error("Grid1D: x_min must be < x_max");
    if (n_points < 3) throw Error("Grid1D: need at least 3 points");
  }

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int size() const { return n_; }
  double spacing() const { return (x_max_ - x_min_) / (n_ - 1); }
  double point(int i) const { return x_min_ + i * spacing(); }

  std::vector<double> points() const {
    std::vector<double> xs(n_);
    for (int i = 0; i < n_; ++i) xs[i] = point(i);
    return xs;
  }

  bool operator==(const Grid1D& o) const {
    return x_min_ == o.x_min_ && x_max_ == o.x_max_ && n_ == o.n_;
  }

 private:
  double x_min_;
  double x_max_;
  int n_;
};

}  // namespace susyprop
