#pragma once

// Overflow-checked 128-bit integer arithmetic and reduced rationals.

#include <cstdint>
#include <span>
#include <string>

#include "bspec/errors.hpp"

namespace bspec {

__extension__ typedef __int128 Int128;

Int128 checked_add(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);

/// C(n, k); zero outside 0 <= k <= n. Throws CapacityError on overflow.
Int128 binomial(int n, int k);
Int128 factorial(int n);

/// |A|! / prod_v count(v)! for the values of an index map (zeros allowed).
Int128 multinomial_class_size(std::span<const int> index_map);

std::string to_string(Int128 value);
double to_double(Int128 value);

class Rational {
 public:
  Rational() = default;
  Rational(Int128 num, Int128 den);

  Int128 numerator() const { return num_; }
  Int128 denominator() const { return den_; }
  double to_double() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  Int128 num_ = 0;
  Int128 den_ = 1;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);

}  // namespace bspec
