#pragma once

#include "aktangent/bigint.hpp"

#include <ostream>

namespace aktangent {

/// Element re + im*i of Q(i).
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() = default;
  GaussianRational(const BigRational& r, const BigRational& i = 0) : re(r), im(i) {}  // NOLINT
  GaussianRational(int r) : re(r), im(0) {}                                          // NOLINT
  GaussianRational(long r) : re(r), im(0) {}                                         // NOLINT

  static GaussianRational i() { return {0, 1}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const BigRational norm = b.re * b.re + b.im * b.im;
    if (norm == 0) throw PreconditionError("division by zero");
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z.re) << (z.im < 0 ? "-" : "+") << to_string(z.im < 0 ? BigRational(-z.im) : z.im)
              << "i";
  }
};

}  // namespace aktangent
