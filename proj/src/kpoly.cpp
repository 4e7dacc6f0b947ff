#include "hopoly/kpoly.hpp"

#include <algorithm>
#include <vector>

namespace hopoly {

KPoly::KPoly(const BigRational& constant) { add_term({0, 0}, constant); }

KPoly::KPoly(long constant) : KPoly(BigRational(constant)) {}

KPoly KPoly::param(ParamClass c) {
  return monomial(c == ParamClass::Short ? Exponents{1, 0} : Exponents{0, 1}, 1);
}

KPoly KPoly::monomial(Exponents e, const BigRational& coeff) {
  KPoly p;
  p.add_term(e, coeff);
  return p;
}

void KPoly::add_term(const Exponents& e, const BigRational& c) {
  if (hopoly::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (hopoly::is_zero(it->second)) terms_.erase(it);
  }
}

int KPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.first + e.second);
  return deg;
}

BigRational KPoly::constant_term() const { return coefficient({0, 0}); }

BigRational KPoly::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

bool KPoly::uses_long_param() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.second != 0; });
}

namespace {

BigRational power(const BigRational& base, int e) {
  BigRational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

BigRational KPoly::specialize(const KValues& k) const {
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c * power(k.short_k, e.first) * power(k.long_k, e.second);
  }
  return sum;
}

KPoly& KPoly::operator+=(const KPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

KPoly& KPoly::operator-=(const KPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

KPoly& KPoly::operator*=(const KPoly& other) {
  KPoly product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      product.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

KPoly& KPoly::operator*=(const BigRational& scalar) {
  if (hopoly::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

KPoly KPoly::operator-() const {
  KPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

std::string monomial_text(const KPoly::Exponents& e) {
  std::string out;
  auto factor = [&out](const char* name, int p) {
    if (p == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (p > 1) out += '^' + std::to_string(p);
  };
  factor("k_s", e.first);
  factor("k_l", e.second);
  return out;
}

}  // namespace

std::string KPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigRational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = sgn(c) < 0;
    const BigRational magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == Exponents{0, 0}) {
      out += hopoly::to_string(magnitude);
    } else {
      if (magnitude != 1) out += hopoly::to_string(magnitude) + '*';
      out += monomial_text(e);
    }
  }
  return out;
}

bool is_in_Zplus(const KPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) {
    return is_integer(t.second) && sgn(t.second) > 0;
  });
}

bool is_in_P1(const KPoly& p) {
  return p.total_degree() <= 1 && is_in_Zplus(p) && p.constant_term() >= 1;
}

std::ostream& operator<<(std::ostream& os, const KPoly& p) { return os << p.to_string(); }

}  // namespace hopoly
