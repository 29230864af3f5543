#include "ptolemy/groupring.hpp"

#include <sstream>
#include <stdexcept>

namespace ptolemy {

GroupRingElement::GroupRingElement(const Word& w, mpz_class coeff) {
  add_term(w, coeff);
}

bool GroupRingElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

void GroupRingElement::add_term(const Word& w, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

GroupRingElement GroupRingElement::substituted(const EndoMap& phi) const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.add_term(phi.apply(w), c);
  return out;
}

mpz_class GroupRingElement::augmentation() const {
  mpz_class s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

std::string GroupRingElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << ';';
    first = false;
    os << c.get_str() << ':' << w.str();
  }
  return os.str();
}

GroupRingElement GroupRingElement::parse(const std::string& s) {
  GroupRingElement out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t semi = s.find(';', pos);
    std::string item = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("GroupRingElement::parse: missing ':' in term");
    mpz_class c(item.substr(0, colon));
    out.add_term(Word::parse(item.substr(colon + 1)), c);
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, int i) {
  if (i <= 0) throw std::out_of_range("fox_derivative: index must be positive");
  GroupRingElement out;
  std::vector<int> prefix;
  for (int l : w.letters()) {
    if (l == i) {
      out += GroupRingElement(Word(prefix));
    } else if (l == -i) {
      std::vector<int> p = prefix;
      p.push_back(l);
      out -= GroupRingElement(Word(std::move(p)));
    }
    prefix.push_back(l);
  }
  return out;
}

GroupRingElement fox_derivative(const GroupRingElement& e, int i) {
  GroupRingElement out;
  for (const auto& [w, c] : e.terms()) {
    GroupRingElement d = fox_derivative(w, i);
    for (const auto& [wd, cd] : d.terms()) out += GroupRingElement(wd, c * cd);
  }
  return out;
}

LaurentElement::LaurentElement(std::vector<long long> expo, mpz_class coeff) {
  if (coeff != 0) terms_.emplace(std::move(expo), std::move(coeff));
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  LaurentElement out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<long long> e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out += LaurentElement(std::move(e), ca * cb);
    }
  return out;
}

std::string LaurentElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 't' + std::to_string(k + 1);
      if (e[k] != 1) mono += '^' + std::to_string(e[k]);
    }
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << mono;
    }
  }
  return os.str();
}

LaurentElement abelianize(const GroupRingElement& e, int rank) {
  LaurentElement out;
  for (const auto& [w, c] : e.terms()) out += LaurentElement(w.exponent_sums(rank), c);
  return out;
}

}  // namespace ptolemy
