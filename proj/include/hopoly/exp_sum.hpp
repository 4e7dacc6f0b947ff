#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "hopoly/kpoly.hpp"
#include "hopoly/rational.hpp"
#include "hopoly/weight.hpp"

namespace hopoly {

/// Finite sum  sum_mu c_mu e^mu  with no zero coefficients stored.
/// S is BigRational (numeric mode) or KPoly (cleared-symbolic mode).
template <class S>
class ExpSum {
 public:
  using Map = std::map<Weight, S>;
  using const_iterator = typename Map::const_iterator;

  ExpSum() = default;

  static ExpSum monomial(const Weight& w, const S& c = S(1L)) {
    ExpSum e;
    e.add(w, c);
    return e;
  }

  void add(const Weight& w, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Coefficient of e^w; zero when absent.
  S coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S{} : it->second;
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  ExpSum& operator+=(const ExpSum& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
  }
  ExpSum& operator-=(const ExpSum& other) {
    for (const auto& [w, c] : other.terms_) add(w, S(-c));
    return *this;
  }
  template <class T>
  ExpSum& scale(const T& factor) {
    if (is_zero(S(factor))) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= factor;
    return *this;
  }

  friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
  friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }
  bool operator==(const ExpSum& other) const { return terms_ == other.terms_; }

 private:
  Map terms_;
};

using NumericSum = ExpSum<BigRational>;
using ClearedSum = ExpSum<KPoly>;

/// Substitutes numeric k into every coefficient.
NumericSum specialize(const ClearedSum& f, const KValues& k);

}  // namespace hopoly
