#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellar {

// A face is a sorted list of 1-based vertex labels.
using Face = std::vector<int>;

enum class ErrorKind { Domain, Usage, Parse, Budget, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

// C(a,b), with 0 for b < 0 or b > a. Exact in 64 bits for the sizes used here.
inline std::uint64_t binom(long long a, long long b) {
  if (b < 0 || b > a || a < 0) return 0;
  if (b > a - b) b = a - b;
  std::uint64_t result = 1;
  for (long long i = 1; i <= b; ++i) {
    result = result * static_cast<std::uint64_t>(a - b + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

// Exact rational with small terms; enough for the half-integer bounds and
// ratio tables produced here.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Sorted-vector set helpers for faces.
Face face_intersect(const Face& a, const Face& b);
Face face_diff(const Face& a, const Face& b);
bool face_subset(const Face& a, const Face& b);  // a subseteq b
Face face_union(const Face& a, const Face& b);

}  // namespace shellar
