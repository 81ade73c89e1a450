#include "coxcat/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace coxcat {

IntPoly IntPoly::constant(int nvars, Int c) {
  IntPoly p(nvars);
  if (c != 0) p.terms_[ExpVec(nvars, 0)] = std::move(c);
  return p;
}

IntPoly IntPoly::variable(int nvars, int i) {
  IntPoly p(nvars);
  ExpVec e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

IntPoly IntPoly::linear_form(const IVec& coeffs) {
  IntPoly p((int)coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) {
      ExpVec e(coeffs.size(), 0);
      e[i] = 1;
      p.terms_[e] = (long)coeffs[i];
    }
  return p;
}

Int IntPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Int IntPoly::constant_term() const { return coeff(ExpVec(n_, 0)); }

Int IntPoly::content() const {
  Int g = 0;
  for (auto& [e, c] : terms_) g = gcd(g, c);
  return g;
}

int IntPoly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

bool IntPoly::is_homogeneous() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    if (d < 0)
      d = t;
    else if (t != d)
      return false;
  }
  return true;
}

void IntPoly::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator-() const {
  IntPoly r(n_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.n_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      ExpVec e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

IntPoly& IntPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::optional<IntPoly> IntPoly::divide_by_linear(const IVec& form) const {
  int k = -1;
  for (size_t i = 0; i < form.size(); ++i)
    if (form[i] != 0) { k = (int)i; break; }
  if (k < 0) return std::nullopt;  // zero form
  if (is_zero()) return IntPoly(n_);
  Int a((long)form[k]);

  // view as a polynomial in t_k: degree -> (exponents without k) -> coeff
  std::map<int, std::map<ExpVec, Int>> slices;
  int m = 0;
  for (auto& [e, c] : terms_) {
    ExpVec rest = e;
    int d = rest[k];
    rest[k] = 0;
    slices[d][rest] = c;
    m = std::max(m, d);
  }
  if (m == 0) return std::nullopt;  // nonzero constant-in-t_k cannot be a multiple

  // R = form - a t_k, on the other variables
  IVec rform = form;
  rform[k] = 0;
  IntPoly R = IntPoly::linear_form(rform);

  IntPoly q(n_);
  std::map<ExpVec, Int> carry;  // R * q_{d+1} slice, exponents without k
  for (int d = m - 1; d >= 0; --d) {
    // c_{d+1} - R*q_{d+1} must be divisible by a
    IntPoly cd1(n_);
    auto it = slices.find(d + 1);
    if (it != slices.end())
      for (auto& [e, c] : it->second) cd1.add_term(e, c);
    for (auto& [e, c] : carry) cd1.add_term(e, -c);
    IntPoly qd(n_);
    for (auto& [e, c] : cd1.terms_) {
      Int quo, rem;
      mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
      if (rem != 0) return std::nullopt;
      qd.terms_[e] = quo;
    }
    // accumulate into the quotient with t_k exponent d
    for (auto& [e, c] : qd.terms_) {
      ExpVec full = e;
      full[k] = d;
      q.add_term(full, c);
    }
    IntPoly rq = R * qd;
    carry.clear();
    for (auto& [e, c] : rq.terms_) carry[e] = c;
  }
  // remainder check: c_0 == R * q_0
  IntPoly c0(n_);
  auto it0 = slices.find(0);
  if (it0 != slices.end())
    for (auto& [e, c] : it0->second) c0.add_term(e, c);
  for (auto& [e, c] : carry) c0.add_term(e, -c);
  if (!c0.is_zero()) return std::nullopt;
  return q;
}

IntPoly IntPoly::substitute(const std::vector<IntPoly>& images) const {
  IntPoly out(images.empty() ? n_ : images[0].nvars());
  for (auto& [e, c] : terms_) {
    IntPoly term = IntPoly::constant(out.nvars(), c);
    for (int i = 0; i < n_; ++i)
      for (int p = 0; p < e[i]; ++p) term = term * images[i];
    out += term;
  }
  return out;
}

IntPoly IntPoly::set_t_zero() const { return IntPoly::constant(n_, constant_term()); }

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Int a = abs(c);
    bool has_var = false;
    for (int x : e)
      if (x) has_var = true;
    if (a != 1 || !has_var) os << a.get_str();
    bool star = (a != 1);
    for (int i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      if (star) os << "*";
      os << "t" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

NormalizedForm normalize_form(const IVec& coeffs) {
  NormalizedForm nf;
  long g = ivec_gcd(coeffs);
  if (g == 0) throw coxcat_error("zero linear form");
  nf.content = g;
  nf.primitive.assign(coeffs.size(), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) nf.primitive[i] = coeffs[i] / g;
  for (long x : nf.primitive) {
    if (x > 0) break;
    if (x < 0) {
      nf.unit = -1;
      for (auto& y : nf.primitive) y = -y;
      break;
    }
  }
  return nf;
}

RationalFn RationalFn::reciprocal(int nvars, const std::vector<IVec>& forms, const Int& c) {
  if (c == 0) throw coxcat_error("division by zero constant");
  RationalFn r;
  Int unit = c > 0 ? 1 : -1;
  r.dcontent_ = abs(c);
  for (const auto& f : forms) {
    NormalizedForm nf = normalize_form(f);
    unit *= nf.unit;
    r.dcontent_ *= nf.content;
    r.den_[nf.primitive] += 1;
  }
  r.num_ = IntPoly::constant(nvars, unit);  // 1/(unit * |..|) = unit/|..|
  r.reduce();
  return r;
}

const IntPoly& RationalFn::as_polynomial() const {
  if (!is_polynomial()) throw coxcat_error("rational function is not a polynomial");
  return num_;
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    dcontent_ = 1;
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.divide_by_linear(it->first);
      if (!q) break;
      num_ = *q;
      --it->second;
    }
    it = (it->second == 0) ? den_.erase(it) : std::next(it);
  }
  Int g = gcd(num_.content(), dcontent_);
  if (g > 1) {
    for (auto& [e, c] : num_.terms_) c /= g;
    dcontent_ /= g;
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  RationalFn r;
  r.num_ = IntPoly(a.num_.nvars() ? a.num_.nvars() : b.num_.nvars());
  // common denominator: max multiplicities, lcm of contents
  std::map<IVec, int> den = a.den_;
  for (auto& [f, m] : b.den_) den[f] = std::max(den[f], m);
  Int dc = a.dcontent_ / gcd(a.dcontent_, b.dcontent_) * b.dcontent_;
  IntPoly na = a.num_, nb = b.num_;
  na *= dc / a.dcontent_;
  nb *= dc / b.dcontent_;
  for (auto& [f, m] : den) {
    IntPoly lf = IntPoly::linear_form(f);
    auto ita = a.den_.find(f);
    int ma = ita == a.den_.end() ? 0 : ita->second;
    for (int k = ma; k < m; ++k) na = na * lf;
    auto itb = b.den_.find(f);
    int mb = itb == b.den_.end() ? 0 : itb->second;
    for (int k = mb; k < m; ++k) nb = nb * lf;
  }
  r.num_ = na + nb;
  r.den_ = std::move(den);
  r.dcontent_ = dc;
  r.reduce();
  return r;
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  RationalFn r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (auto& [f, m] : b.den_) r.den_[f] += m;
  r.dcontent_ = a.dcontent_ * b.dcontent_;
  r.reduce();
  return r;
}

bool RationalFn::operator==(const RationalFn& o) const {
  return (*this - o).is_zero();
}

}  // namespace coxcat
