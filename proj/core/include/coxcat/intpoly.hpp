// Exact multivariate polynomials with arbitrary-precision integer
// coefficients in the variables t_1..t_n (one per simple root), and rational
// functions whose denominators are products of integer linear forms.  All
// cancellation happens by exact division by linear factors; no general
// multivariate gcd is ever needed because every denominator arising from
// localization is a product of root forms.
#pragma once

#include "coxcat/numeric.hpp"

#include <map>

namespace coxcat {

using ExpVec = std::vector<int>;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(int nvars) : n_(nvars) {}
  static IntPoly constant(int nvars, Int c);
  static IntPoly variable(int nvars, int i);
  static IntPoly linear_form(const IVec& coeffs);  // sum_i coeffs[i] * t_i

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpVec, Int>& terms() const { return terms_; }
  Int coeff(const ExpVec& e) const;
  Int constant_term() const;
  Int content() const;  // gcd of coefficients, 0 for the zero polynomial
  int total_degree() const;
  // homogeneous of a single degree? (zero counts as homogeneous)
  bool is_homogeneous() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly& operator*=(const Int& c);
  bool operator==(const IntPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  // exact division by a primitive integer linear form; nullopt if not divisible
  std::optional<IntPoly> divide_by_linear(const IVec& form) const;
  bool divisible_by_linear(const IVec& form) const { return divide_by_linear(form).has_value(); }

  // substitute t_i -> images[i]
  IntPoly substitute(const std::vector<IntPoly>& images) const;
  IntPoly set_t_zero() const;  // all variables to 0, as a constant polynomial

  std::string to_string() const;  // human-readable, deterministic term order

 private:
  int n_ = 0;
  std::map<ExpVec, Int> terms_;  // exponent vector -> nonzero coefficient

  void add_term(const ExpVec& e, const Int& c);
  friend class RationalFn;
};

// Normalizes an integer linear form to (primitive form with positive leading
// coefficient, unit, content): coeffs = unit * content * primitive.
struct NormalizedForm {
  IVec primitive;
  int unit = 1;  // +-1
  long content = 1;
};
NormalizedForm normalize_form(const IVec& coeffs);

// num / (dcontent * prod forms^mult); forms are primitive and sign-normalized.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(IntPoly num) : num_(std::move(num)) {}
  static RationalFn zero(int nvars) { return RationalFn(IntPoly(nvars)); }
  static RationalFn one(int nvars) { return RationalFn(IntPoly::constant(nvars, 1)); }
  // 1 / (c * prod of forms)
  static RationalFn reciprocal(int nvars, const std::vector<IVec>& forms, const Int& c);

  const IntPoly& num() const { return num_; }
  const std::map<IVec, int>& den() const { return den_; }
  const Int& den_content() const { return dcontent_; }

  bool is_zero() const { return num_.is_zero(); }
  // true iff the reduced form has trivial denominator
  bool is_polynomial() const { return den_.empty() && dcontent_ == 1; }
  const IntPoly& as_polynomial() const;  // throws unless is_polynomial()

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  bool operator==(const RationalFn& o) const;

 private:
  IntPoly num_;
  std::map<IVec, int> den_;
  Int dcontent_ = 1;

  void reduce();
};

}  // namespace coxcat
