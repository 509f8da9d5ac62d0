#include "bspec/exact.hpp"

#include <algorithm>
#include <map>

namespace bspec {

namespace {

Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

Int128 gcd128(Int128 a, Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const Int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("128-bit overflow in addition");
  return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("128-bit overflow in multiplication");
  return r;
}

Int128 binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int128 r = 1;
  for (int i = 0; i < k; ++i) {
    // r * (n - i) is divisible by (i + 1) after the multiplication.
    const Int128 g = gcd128(r, i + 1);
    r = checked_mul(r / g, Int128(n - i) / ((i + 1) / g));
  }
  return r;
}

Int128 factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Int128 r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

Int128 multinomial_class_size(std::span<const int> index_map) {
  std::map<int, int> counts;
  for (int v : index_map) {
    if (v < 0) throw DomainError("index map entries must be non-negative");
    ++counts[v];
  }
  // Product of binomials avoids forming |A|! directly.
  Int128 r = 1;
  int placed = 0;
  for (const auto& [value, count] : counts) {
    placed += count;
    r = checked_mul(r, binomial(placed, count));
  }
  return r;
}

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  // Work with negative remainders so the minimum value is representable.
  while (value != 0) {
    const int digit = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -digit : digit)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

double to_double(Int128 value) { return static_cast<double>(value); }

Rational::Rational(Int128 num, Int128 den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const Int128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

double Rational::to_double() const {
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

Rational operator+(const Rational& a, const Rational& b) {
  const Int128 g = gcd128(a.denominator(), b.denominator());
  const Int128 lhs = checked_mul(a.numerator(), b.denominator() / g);
  const Int128 rhs = checked_mul(b.numerator(), a.denominator() / g);
  return Rational(checked_add(lhs, rhs), checked_mul(a.denominator() / g, b.denominator()));
}

Rational operator*(const Rational& a, const Rational& b) {
  const Int128 g1 = gcd128(a.numerator(), b.denominator());
  const Int128 g2 = gcd128(b.numerator(), a.denominator());
  const Int128 s1 = g1 == 0 ? 1 : g1;
  const Int128 s2 = g2 == 0 ? 1 : g2;
  return Rational(checked_mul(a.numerator() / s1, b.numerator() / s2),
                  checked_mul(a.denominator() / s2, b.denominator() / s1));
}

}  // namespace bspec
