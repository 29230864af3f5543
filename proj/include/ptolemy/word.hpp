#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptolemy {

// A reduced word in the free group on generators x_1, x_2, ... .
// Letters are nonzero integers: +i stands for x_i, -i for its inverse.
// Words are kept reduced at all times; every constructor and operation
// cancels adjacent inverse pairs eagerly.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) { reduce(); }
  static Word letter(int i);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  // Length-then-lexicographic order; used as the canonical term order.
  friend bool operator<(const Word& a, const Word& b);

  // Largest generator index appearing (0 for the empty word).
  int max_index() const;

  // Exponent-sum vector of length `rank`.
  std::vector<long long> exponent_sums(int rank) const;

  std::string str() const;                   // signed decimals, e.g. "3 -2 -3 4"
  static Word parse(const std::string& s);   // inverse of str(); throws on junk

 private:
  void reduce();
  std::vector<int> letters_;
};

inline Word Word::letter(int i) { return Word(std::vector<int>{i}); }

// A map F_rank -> F_rank given by the images of the generators.
// Automorphism status is a property, not an invariant.
struct EndoMap {
  std::vector<Word> images;  // images[i-1] = image of x_i

  int rank() const { return static_cast<int>(images.size()); }
  static EndoMap identity(int rank);
  bool is_identity() const;
  // Applies the substitution x_i -> images[i-1] to w.
  Word apply(const Word& w) const;

  friend bool operator==(const EndoMap& a, const EndoMap& b) { return a.images == b.images; }
};

// Substitution composition: result(x_i) = psi(x_i) with every letter x_j
// replaced by phi(x_j).  This is the composition rule used for move
// sequences: later moves are written in the letters of earlier graphs.
EndoMap compose_endos(const EndoMap& phi, const EndoMap& psi);

}  // namespace ptolemy
