#include "braidpoly/laurent.hpp"

#include <sstream>

namespace braidpoly {

LaurentPoly LaurentPoly::constant(Int c) {
  return monomial(std::move(c));
}

LaurentPoly LaurentPoly::monomial(Int coeff, int a_exp, int z_exp, int t_exp) {
  LaurentPoly p;
  p.add_term({a_exp, z_exp, t_exp}, coeff);
  return p;
}

Int LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      r.add_term({e1.a + e2.a, e1.z + e2.z, e1.t + e2.t}, c1 * c2);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  *this = *this * q;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly r = p;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

namespace {

void append_power(std::ostream& os, bool& first_factor, char var, int exp) {
  if (exp == 0) return;
  if (!first_factor) os << '*';
  first_factor = false;
  os << var;
  if (exp != 1) os << '^' << exp;
}

// Magnitude of one term without the leading sign.
std::string term_str(const Exponents& e, const Int& coeff) {
  std::ostringstream os;
  Int mag = coeff < 0 ? Int(-coeff) : coeff;
  bool has_vars = e.a != 0 || e.z != 0 || e.t != 0;
  bool first_factor = true;
  if (mag != 1 || !has_vars) {
    os << mag.str();
    first_factor = false;
  }
  append_power(os, first_factor, 'a', e.a);
  append_power(os, first_factor, 'z', e.z);
  append_power(os, first_factor, 't', e.t);
  return os.str();
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << term_str(e, c);
  }
  return os.str();
}

LaurentPoly substitute_a_one(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({0, e.z, e.t}, c);
  return r;
}

LaurentPoly derivative_a(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.a == 0) continue;
    r.add_term({e.a - 1, e.z, e.t}, c * e.a);
  }
  return r;
}

LaurentPoly coefficient_of_t(const LaurentPoly& p, int k) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.t == k) r.add_term({e.a, e.z, 0}, c);
  }
  return r;
}

}  // namespace braidpoly
