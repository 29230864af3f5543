#include "ptolemy/exactmat.hpp"

#include <stdexcept>

namespace ptolemy {

IntMat int_identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? 1 : 0;
  return m;
}

IntVec int_zero(int n) {
  IntVec v(n);
  for (int i = 0; i < n; ++i) v(i) = 0;
  return v;
}

bool is_zero(const IntVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

bool is_zero(const IntMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

RatMat to_rational(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = mpq_class(m(i, j));
  return out;
}

RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = mpq_class(v(i));
  return out;
}

mpz_class det(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  IntMat a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : mpz_class(-a(n - 1, n - 1));
}

RatMat inverse_rational(RatMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  int n = static_cast<int>(m.rows());
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = (i == j) ? 1 : 0;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    mpq_class d = m(k, k);
    for (int j = 0; j < n; ++j) {
      m(k, j) /= d;
      inv(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      mpq_class f = m(i, k);
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMat inverse_unimodular(const IntMat& m) {
  mpz_class d = det(m);
  if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: determinant is not ±1");
  RatMat inv = inverse_rational(to_rational(m));
  IntMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      mpq_class v = inv(i, j);
      v.canonicalize();
      if (v.get_den() != 1)
        throw std::logic_error("inverse_unimodular: non-integer entry");
      out(i, j) = v.get_num();
    }
  return out;
}

bool solve_rational(const RatMat& a, const RatVec& b, RatVec& x) {
  int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  RatMat m(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b(i);
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j <= cols; ++j) std::swap(m(row, j), m(piv, j));
    mpq_class d = m(row, col);
    for (int j = 0; j <= cols; ++j) m(row, j) /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      mpq_class f = m(i, col);
      for (int j = 0; j <= cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (m(i, cols) != 0) return false;  // inconsistent
  if (static_cast<int>(pivot_col.size()) != cols) return false;  // underdetermined
  x = RatVec(cols);
  for (int i = 0; i < cols; ++i) x(i) = m(i, cols);  // pivots are the first cols rows in order
  return true;
}

IntMat hermite_normal_form(IntMat m) {
  int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    // Clear the column below `row` with Euclidean row operations.
    while (true) {
      int piv = -1;
      for (int i = row; i < rows; ++i)
        if (m(i, col) != 0 && (piv < 0 || abs(m(i, col)) < abs(m(piv, col)))) piv = i;
      if (piv < 0) break;
      if (piv != row)
        for (int j = 0; j < cols; ++j) std::swap(m(row, j), m(piv, j));
      bool cleared = true;
      for (int i = row + 1; i < rows; ++i) {
        if (m(i, col) == 0) continue;
        mpz_class q = m(i, col) / m(row, col);  // truncated division is fine here
        for (int j = 0; j < cols; ++j) m(i, j) -= q * m(row, j);
        if (m(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0)
      for (int j = 0; j < cols; ++j) m(row, j) = -m(row, j);
    // Reduce entries above the pivot.
    for (int i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(row, col).get_mpz_t());
      if (q != 0)
        for (int j = 0; j < cols; ++j) m(i, j) -= q * m(row, j);
    }
    ++row;
  }
  return m;
}

bool rows_span_full_lattice(const IntMat& m) {
  int cols = static_cast<int>(m.cols());
  if (m.rows() < cols) return false;
  IntMat h = hermite_normal_form(m);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j)
      if (h(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

bool is_primitive(const IntVec& v) {
  mpz_class g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v(i).get_mpz_t());
  }
  return g == 1;
}

}  // namespace ptolemy
