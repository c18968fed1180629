#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pfac {

using Integer = mpz_class;
using Rational = mpq_class;

// "num/den" or "num"; result is canonical.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

Rational pow2(long e);
Rational rpow(const Rational& base, unsigned long e);
Integer ipow(long base, unsigned long e);
bool is_multiple_of(const Rational& x, const Rational& unit);

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : v_(n) {}
  RatVector(std::initializer_list<Rational> xs) : v_(xs) {}
  explicit RatVector(std::vector<Rational> xs) : v_(std::move(xs)) {}

  static RatVector unit(std::size_t n, std::size_t i);
  static RatVector ones(std::size_t n);

  std::size_t dim() const { return v_.size(); }
  Rational& operator[](std::size_t i) { return v_[i]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Rational>& entries() const { return v_; }

  Rational sum() const;
  bool operator==(const RatVector& o) const { return v_ == o.v_; }

 private:
  std::vector<Rational> v_;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;
  bool operator==(const RatMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& m);
RatVector operator*(const RatVector& v, const RatMatrix& m);  // row vector times matrix
RatVector operator*(const RatMatrix& m, const RatVector& v);  // matrix times column vector
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& m);
RatMatrix block_diag(const std::vector<RatMatrix>& blocks);
RatMatrix submatrix(const RatMatrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
void set_block(RatMatrix& m, std::size_t r0, std::size_t c0, const RatMatrix& b);
RatMatrix chain_product(const std::vector<RatMatrix>& ms, std::size_t dim);

bool is_row_stochastic(const RatMatrix& m);
bool is_positive(const RatMatrix& m);
bool is_nonnegative(const RatMatrix& m);
bool is_distribution(const RatVector& v);

// Least common denominator of all entries.
Integer common_denominator(const RatMatrix& m);
Integer common_denominator(const RatVector& v);

}  // namespace pfac
