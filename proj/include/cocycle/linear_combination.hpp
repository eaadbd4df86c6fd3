#ifndef COCYCLE_LINEAR_COMBINATION_HPP
#define COCYCLE_LINEAR_COMBINATION_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "cocycle/rational.hpp"

namespace cocycle {

/// Finite formal sum  sum_k c_k * k  kept sorted by key with no zero coefficients.
template <class Key>
class LinearCombination {
 public:
  using Term = std::pair<Key, Rational>;

  LinearCombination() = default;
  LinearCombination(const Key& key, const Rational& coeff) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (is_zero(coeff)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Key& k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.insert(it, Term{key, coeff});
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Key& k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return Rational{0};
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& term : terms_) term.second *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational{-1}; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace cocycle

#endif  // COCYCLE_LINEAR_COMBINATION_HPP
