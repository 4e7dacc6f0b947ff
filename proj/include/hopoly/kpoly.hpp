#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "hopoly/rational.hpp"

namespace hopoly {

/// The two multiplicity parameters. Simply-laced systems only ever use Short.
enum class ParamClass : int { Short = 0, Long = 1 };

/// Numeric assignment of the parameters k_s and k_l.
struct KValues {
  BigRational short_k{1};
  BigRational long_k{1};

  static KValues uniform(const BigRational& k) { return {k, k}; }

  const BigRational& operator[](ParamClass c) const {
    return c == ParamClass::Short ? short_k : long_k;
  }
  bool operator==(const KValues&) const = default;
};

/// Polynomial in k_s, k_l with rational coefficients.
///
/// Stored sparsely as (e_short, e_long) -> coefficient with no zero entries,
/// so structurally equal objects are equal polynomials.
class KPoly {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, BigRational>;

  KPoly() = default;
  KPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  KPoly(long constant);                // NOLINT(google-explicit-constructor)

  static KPoly param(ParamClass c);
  static KPoly monomial(Exponents e, const BigRational& coeff);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  BigRational constant_term() const;
  BigRational coefficient(Exponents e) const;
  bool uses_long_param() const;

  BigRational specialize(const KValues& k) const;

  KPoly& operator+=(const KPoly& other);
  KPoly& operator-=(const KPoly& other);
  KPoly& operator*=(const KPoly& other);
  KPoly& operator*=(const BigRational& scalar);

  friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
  friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
  friend KPoly operator*(KPoly a, const KPoly& b) { return a *= b; }
  friend KPoly operator*(KPoly a, const BigRational& s) { return a *= s; }
  friend KPoly operator*(const BigRational& s, KPoly a) { return a *= s; }
  friend KPoly operator*(KPoly a, long s) { return a *= BigRational(s); }
  friend KPoly operator*(long s, KPoly a) { return a *= BigRational(s); }
  KPoly operator-() const;

  bool operator==(const KPoly& other) const { return terms_ == other.terms_; }

  /// Canonical rendering, e.g. "1 + 2*k_s + k_s*k_l". Terms are ordered by
  /// ascending total degree, then by descending power of k_s.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const BigRational& c);

  TermMap terms_;
};

inline bool is_zero(const KPoly& p) { return p.is_zero(); }

/// Degree <= 1, non-negative integer coefficients, constant term >= 1.
bool is_in_P1(const KPoly& p);

/// All coefficients are non-negative integers.
bool is_in_Zplus(const KPoly& p);

std::ostream& operator<<(std::ostream& os, const KPoly& p);

}  // namespace hopoly
