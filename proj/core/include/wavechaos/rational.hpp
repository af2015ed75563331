#ifndef WAVECHAOS_RATIONAL_HPP
#define WAVECHAOS_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace wavechaos {

/// Exact rational on 64-bit integers. The combinatorial identities evaluated
/// with it involve factorials up to 8! and stay far below overflow.
class rational {
public:
  rational() : num_(0), den_(1) {}
  rational(std::int64_t n) : num_(n), den_(1) {}
  rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  rational operator+(const rational& o) const {
    return rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  rational operator-(const rational& o) const {
    return rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  rational operator*(const rational& o) const {
    return rational(num_ * o.num_, den_ * o.den_);
  }
  rational operator/(const rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return rational(num_ * o.den_, den_ * o.num_);
  }
  rational& operator+=(const rational& o) { return *this = *this + o; }
  bool operator==(const rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const rational& o) const { return !(*this == o); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline std::ostream& operator<<(std::ostream& os, const rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

}  // namespace wavechaos

#endif
