#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

namespace Eigen {

// Exact integer and rational scalars for Eigen dense types.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace ptolemy {

using IntVec = Eigen::Matrix<mpz_class, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<mpq_class, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;

IntMat int_identity(int n);
IntVec int_zero(int n);
bool is_zero(const IntVec& v);
bool is_zero(const IntMat& m);

RatMat to_rational(const IntMat& m);
RatVec to_rational(const IntVec& v);

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class det(const IntMat& m);

// Inverse of a matrix with determinant ±1; throws otherwise.
IntMat inverse_unimodular(const IntMat& m);

// Gauss-Jordan inverse over Q; throws on a singular matrix.
RatMat inverse_rational(RatMat m);

// Solves A x = b over Q; returns false iff the system is inconsistent or A
// is column-rank deficient in a way that leaves x undetermined.
bool solve_rational(const RatMat& a, const RatVec& b, RatVec& x);

// Row Hermite normal form (nonnegative pivots, reduced above).  The lattice
// spanned by the rows of `m` is all of Z^cols iff the form's top block is
// the identity.
IntMat hermite_normal_form(IntMat m);
bool rows_span_full_lattice(const IntMat& m);

// True iff v is a primitive integer vector (gcd of entries is 1).
bool is_primitive(const IntVec& v);

}  // namespace ptolemy
