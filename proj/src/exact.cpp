#include "pfac/exact.hpp"

#include <stdexcept>

namespace pfac {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational rpow(const Rational& base, unsigned long e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(n, d);  // already coprime
}

Integer ipow(long base, unsigned long e) {
  Integer r;
  Integer b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

bool is_multiple_of(const Rational& x, const Rational& unit) {
  Rational q = x / unit;
  return q.get_den() == 1;
}

RatVector RatVector::unit(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

RatVector RatVector::ones(std::size_t n) {
  RatVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1;
  return v;
}

Rational RatVector::sum() const {
  Rational s = 0;
  for (const auto& x : v_) s += x;
  return s;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  a_.reserve(r_ * c_);
  for (const auto& row : rows) {
    if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  RatVector v(c_);
  for (std::size_t j = 0; j < c_; ++j) v[j] = (*this)(i, j);
  return v;
}

RatVector RatMatrix::col(std::size_t j) const {
  RatVector v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  RatMatrix c(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) == 0) continue;
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        c(i, j) += t;
      }
    }
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return mat_mul(a, b); }

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix add: dimension mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + Rational(-1) * b; }

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
  RatMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = s * m(i, j);
  return c;
}

RatVector operator*(const RatVector& v, const RatMatrix& m) {
  if (v.dim() != m.rows()) throw std::invalid_argument("vector-matrix: dimension mismatch");
  RatVector r(m.cols());
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) == 0) continue;
      mpq_mul(t.get_mpq_t(), v[i].get_mpq_t(), m(i, j).get_mpq_t());
      r[j] += t;
    }
  }
  return r;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
  if (v.dim() != m.cols()) throw std::invalid_argument("matrix-vector: dimension mismatch");
  RatVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) r[i] += m(i, j) * v[j];
  return r;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector add: dimension mismatch");
  RatVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  RatMatrix m(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    set_block(m, r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

RatMatrix submatrix(const RatMatrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > m.rows() || c0 + nc > m.cols()) throw std::out_of_range("submatrix out of range");
  RatMatrix s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = m(r0 + i, c0 + j);
  return s;
}

void set_block(RatMatrix& m, std::size_t r0, std::size_t c0, const RatMatrix& b) {
  if (r0 + b.rows() > m.rows() || c0 + b.cols() > m.cols()) throw std::out_of_range("set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

RatMatrix chain_product(const std::vector<RatMatrix>& ms, std::size_t dim) {
  RatMatrix p = RatMatrix::identity(dim);
  for (const auto& m : ms) p = p * m;
  return p;
}

bool is_nonnegative(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) < 0) return false;
  return true;
}

bool is_row_stochastic(const RatMatrix& m) {
  if (!is_nonnegative(m)) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row(i).sum() != 1) return false;
  return true;
}

bool is_positive(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) <= 0) return false;
  return true;
}

bool is_distribution(const RatVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (sgn(v[i]) < 0) return false;
  return v.sum() == 1;
}

Integer common_denominator(const RatMatrix& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

Integer common_denominator(const RatVector& v) {
  Integer l = 1;
  for (std::size_t i = 0; i < v.dim(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
  return l;
}

}  // namespace pfac
