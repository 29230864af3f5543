#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ptolemy/word.hpp"

namespace ptolemy {

// An element of the integral group ring Z[F]: a finite Z-linear combination
// of reduced words.  Coefficients are arbitrary precision; zero coefficients
// are never stored.  Terms are kept in the canonical length-then-lex order.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, mpz_class coeff = 1);
  static GroupRingElement one() { return GroupRingElement(Word()); }

  const std::map<Word, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement operator-() const;
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

  // Substitutes generator images into every term.
  GroupRingElement substituted(const EndoMap& phi) const;

  // Ring homomorphism sending every word to 1.
  mpz_class augmentation() const;

  // `coef:word;coef:word` with terms in canonical order.
  std::string str() const;
  static GroupRingElement parse(const std::string& s);

 private:
  void add_term(const Word& w, const mpz_class& c);
  std::map<Word, mpz_class> terms_;
};

// Fox free derivative d/dx_i, extended linearly to the group ring.
// On a word it is computed left to right by the product rule
// d(w1 w2) = d(w1) + w1 d(w2), with d(x_i) = 1 and d(inv x_i) = -inv x_i.
GroupRingElement fox_derivative(const Word& w, int i);
GroupRingElement fox_derivative(const GroupRingElement& e, int i);

// An element of the Laurent ring Z[t_1^{±1},...,t_rank^{±1}], the image of
// the group ring under abelianization.  Keys are exponent vectors.
class LaurentElement {
 public:
  LaurentElement() = default;
  explicit LaurentElement(std::vector<long long> expo, mpz_class coeff = 1);
  static LaurentElement one(int rank) { return LaurentElement(std::vector<long long>(rank, 0)); }

  const std::map<std::vector<long long>, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentElement& operator+=(const LaurentElement& rhs);
  LaurentElement operator-() const;
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);

  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentElement& a, const LaurentElement& b) { return !(a == b); }

  std::string str() const;  // e.g. "1 + t1 - t2^-1"

 private:
  std::map<std::vector<long long>, mpz_class> terms_;
};

// Abelianization Z[F_rank] -> Z[H], word terms to monomials.
LaurentElement abelianize(const GroupRingElement& e, int rank);

}  // namespace ptolemy
