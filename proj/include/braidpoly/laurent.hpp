#ifndef BRAIDPOLY_LAURENT_HPP
#define BRAIDPOLY_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <tuple>

namespace braidpoly {

using Int = boost::multiprecision::cpp_int;

// Exponents of a single monomial a^a * z^z * t^t. All exponents may be
// negative; produced values keep t >= 0 but the ring is closed without
// that restriction.
struct Exponents {
  int a = 0;
  int z = 0;
  int t = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
  // Canonical term order: lexicographic on (t, z, a).
  friend bool operator<(const Exponents& x, const Exponents& y) {
    return std::tie(x.t, x.z, x.a) < std::tie(y.t, y.z, y.a);
  }
};

// Sparse Laurent polynomial in a, z, t with exact integer coefficients.
// Invariant: no stored coefficient is zero; equality is term-set equality.
class LaurentPoly {
 public:
  using Terms = std::map<Exponents, Int>;

  LaurentPoly() = default;

  static LaurentPoly constant(Int c);
  static LaurentPoly monomial(Int coeff, int a_exp = 0, int z_exp = 0,
                              int t_exp = 0);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  // Coefficient of a^a z^z t^t (zero when absent).
  Int coeff(const Exponents& e) const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);
  LaurentPoly& operator*=(const Int& c);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) {
    p += q;
    return p;
  }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) {
    p -= q;
    return p;
  }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(LaurentPoly p, const Int& c) {
    p *= c;
    return p;
  }
  friend LaurentPoly operator-(const LaurentPoly& p);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Deterministic rendering, terms in canonical order, e.g. "3*z*t^2 + z^3*t^2".
  std::string str() const;

  void add_term(const Exponents& e, const Int& c);

 private:
  Terms terms_;
};

// a -> 1 substitution (ring homomorphism onto polynomials in z, t).
LaurentPoly substitute_a_one(const LaurentPoly& p);

// Termwise partial derivative in a: a^n -> n*a^(n-1), n possibly negative.
LaurentPoly derivative_a(const LaurentPoly& p);

// Sum of terms with t-exponent k, with t zeroed out.
LaurentPoly coefficient_of_t(const LaurentPoly& p, int k);

}  // namespace braidpoly

#endif
