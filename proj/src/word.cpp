#include "ptolemy/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ptolemy {

void Word::reduce() {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int l : letters_) {
    if (l == 0) throw std::invalid_argument("Word: zero letter");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  letters_ = std::move(out);
}

Word Word::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  for (int& l : rev) l = -l;
  Word w;
  w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  std::size_t i = 0;
  while (!letters_.empty() && i < rhs.letters_.size() && letters_.back() == -rhs.letters_[i]) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + i, rhs.letters_.end());
  return *this;
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
  return a.letters_ < b.letters_;
}

int Word::max_index() const {
  int m = 0;
  for (int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

std::vector<long long> Word::exponent_sums(int rank) const {
  std::vector<long long> v(rank, 0);
  for (int l : letters_) {
    int i = std::abs(l);
    if (i > rank) throw std::out_of_range("Word::exponent_sums: letter exceeds rank");
    v[i - 1] += (l > 0) ? 1 : -1;
  }
  return v;
}

std::string Word::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i];
  }
  return os.str();
}

Word Word::parse(const std::string& s) {
  std::istringstream is(s);
  std::vector<int> letters;
  int l;
  while (is >> l) letters.push_back(l);
  if (!is.eof()) throw std::invalid_argument("Word::parse: trailing junk in \"" + s + "\"");
  return Word(std::move(letters));
}

EndoMap EndoMap::identity(int rank) {
  EndoMap e;
  e.images.reserve(rank);
  for (int i = 1; i <= rank; ++i) e.images.push_back(Word::letter(i));
  return e;
}

bool EndoMap::is_identity() const { return *this == identity(rank()); }

Word EndoMap::apply(const Word& w) const {
  Word out;
  for (int l : w.letters()) {
    int i = std::abs(l);
    if (i > rank()) throw std::out_of_range("EndoMap::apply: letter exceeds rank");
    out *= (l > 0) ? images[i - 1] : images[i - 1].inverse();
  }
  return out;
}

EndoMap compose_endos(const EndoMap& phi, const EndoMap& psi) {
  if (phi.rank() != psi.rank()) throw std::invalid_argument("compose_endos: rank mismatch");
  EndoMap out;
  out.images.reserve(psi.rank());
  for (const Word& w : psi.images) out.images.push_back(phi.apply(w));
  return out;
}

}  // namespace ptolemy
