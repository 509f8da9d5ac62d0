#pragma once

// Functions on the Boolean cube {-1,+1}^n and their Fourier-Walsh spectra.
//
// Point indexing: row r encodes x(r) with x_i = -1 iff bit (i-1) of r is set,
// so row 0 is the all-(+1) point and chi_S(x(r)) = (-1)^popcount(r & S).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bspec {

using Mask = std::uint64_t;

inline constexpr int kMaxDenseDimension = 24;
inline constexpr int kMaxSparseDimension = 64;
inline constexpr double kCoefficientDropTolerance = 1e-14;

inline int popcount(Mask m) { return std::popcount(m); }

/// Value of x_i at row r, for 1-based coordinate i.
inline int coordinate_sign(Mask row, int i) { return ((row >> (i - 1)) & 1u) ? -1 : 1; }

/// chi_S(x(r)).
inline int character(Mask row, Mask subset) { return (popcount(row & subset) & 1) ? -1 : 1; }

/// Dense value table of f over the 2^n cube points.
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<double> values);

  static BooleanFunction constant(int n, double c);

  /// Builds a table from fn(row) for every row index.
  template <class Fn>
  static BooleanFunction tabulate(int n, Fn&& fn) {
    check_dense_dimension(n);
    std::vector<double> values(std::size_t{1} << n);
    for (std::size_t r = 0; r < values.size(); ++r) values[r] = fn(static_cast<Mask>(r));
    return BooleanFunction(n, std::move(values));
  }

  int dimension() const { return n_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t row) const { return values_[row]; }

  static void check_dense_dimension(int n);

 private:
  int n_;
  std::vector<double> values_;
};

struct Coefficient {
  Mask mask;
  double value;
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

/// Sparse subset-indexed coefficients, sorted by mask, no stored zeros.
class FourierSpectrum {
 public:
  explicit FourierSpectrum(int n);
  FourierSpectrum(int n, std::vector<Coefficient> coefficients);

  int dimension() const { return n_; }
  int degree() const { return degree_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Coefficient> coefficients() const { return coeffs_; }
  double coefficient(Mask mask) const;

  FourierSpectrum scaled(double factor) const;

  friend bool operator==(const FourierSpectrum&, const FourierSpectrum&) = default;

 private:
  int n_;
  int degree_ = 0;
  std::vector<Coefficient> coeffs_;
};

FourierSpectrum walsh_transform(const BooleanFunction& f);
BooleanFunction inverse_transform(const FourierSpectrum& s);

/// Coefficient vector of length 2^n indexed by mask.
std::vector<double> dense_coefficients(const FourierSpectrum& s);

/// In-place unnormalised Walsh-Hadamard butterfly over a power-of-two array.
void walsh_hadamard_in_place(std::span<double> data);

int degree(const FourierSpectrum& s);
FourierSpectrum homogeneous_part(const FourierSpectrum& s, int level);
/// Levels <= max_level.
FourierSpectrum truncate_degree(const FourierSpectrum& s, int max_level);

struct SupNorm {
  double value;
  Mask row;  // smallest row attaining the maximum
};

SupNorm sup_norm(const BooleanFunction& f);
double p_norm(const BooleanFunction& f, double p);
/// E[f].
double mean(const BooleanFunction& f);

FourierSpectrum noise_operator(const FourierSpectrum& s, double rho);

double variance(const FourierSpectrum& s);
double influence(const FourierSpectrum& s, int j);
/// sum_j Inf_j = sum_S |S| fhat(S)^2.
double total_influence(const FourierSpectrum& s);
std::vector<double> influences(const FourierSpectrum& s);

struct MaxInfluence {
  double value;
  int coordinate;  // 1-based, smallest among ties
};
MaxInfluence max_influence(const FourierSpectrum& s);

}  // namespace bspec
