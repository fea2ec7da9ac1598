#include "ado/scalar.hpp"

#include <numbers>
#include <sstream>

namespace ado {

namespace {
constexpr int kGcdThreshold = 64;  // lazy full-gcd trigger, in stored terms
}

SPoly SPoly::zero(int N) { return SPoly(N, 0, {}); }

SPoly SPoly::constant(const CycScalar& c) {
  return SPoly(c.level(), 0, {c});
}

SPoly SPoly::monomial(const CycScalar& c, long exp) {
  return SPoly(c.level(), exp, {c});
}

void SPoly::normalize() {
  size_t begin = 0, end = c_.size();
  while (end > begin && c_[end - 1].is_zero()) --end;
  while (begin < end && c_[begin].is_zero()) ++begin;
  if (begin == end) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (begin > 0 || end < c_.size()) {
    c_ = std::vector<CycScalar>(c_.begin() + static_cast<long>(begin),
                                c_.begin() + static_cast<long>(end));
    low_ += static_cast<long>(begin);
  }
}

void SPoly::check_level(const SPoly& o) const {
  if (level_ != o.level_) throw std::invalid_argument("SPoly level mismatch");
}

int SPoly::term_count() const {
  int n = 0;
  for (const CycScalar& c : c_)
    if (!c.is_zero()) ++n;
  return n;
}

CycScalar SPoly::coeff(long exp) const {
  if (is_zero() || exp < low_ || exp > high()) return CycScalar::zero(level_);
  return c_[static_cast<size_t>(exp - low_)];
}

bool SPoly::is_constant() const {
  return is_zero() || (low_ == 0 && c_.size() == 1);
}

SPoly SPoly::operator+(const SPoly& o) const {
  check_level(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  std::vector<CycScalar> out(static_cast<size_t>(hi - lo + 1),
                             CycScalar::zero(level_));
  for (size_t k = 0; k < c_.size(); ++k)
    out[static_cast<size_t>(low_ - lo) + k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k)
    out[static_cast<size_t>(o.low_ - lo) + k] += o.c_[k];
  return SPoly(level_, lo, std::move(out));
}

SPoly SPoly::operator-(const SPoly& o) const { return *this + (-o); }

SPoly SPoly::operator-() const {
  SPoly r = *this;
  for (CycScalar& c : r.c_) c = -c;
  return r;
}

SPoly SPoly::operator*(const SPoly& o) const {
  check_level(o);
  if (is_zero() || o.is_zero()) return zero(level_);
  std::vector<CycScalar> out(c_.size() + o.c_.size() - 1,
                             CycScalar::zero(level_));
  for (size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (size_t b = 0; b < o.c_.size(); ++b) {
      if (o.c_[b].is_zero()) continue;
      out[a + b] += c_[a] * o.c_[b];
    }
  }
  return SPoly(level_, low_ + o.low_, std::move(out));
}

SPoly SPoly::scaled(const CycScalar& c) const {
  if (c.is_zero()) return zero(level_);
  SPoly r = *this;
  for (CycScalar& x : r.c_) x = x * c;
  r.normalize();
  return r;
}

SPoly SPoly::shifted(long k) const {
  SPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

bool SPoly::operator==(const SPoly& o) const {
  check_level(o);
  return low_ == o.low_ && c_ == o.c_;
}

SPoly SPoly::conj() const {
  if (is_zero()) return *this;
  std::vector<CycScalar> out(c_.rbegin(), c_.rend());
  for (CycScalar& c : out) c = c.conj();
  return SPoly(level_, -high(), std::move(out));
}

namespace {

// Division with remainder on the ordinary-polynomial parts (low = 0).
void poly_divrem(const SPoly& a, const SPoly& b, SPoly& q, SPoly& r,
                 int level) {
  q = SPoly::zero(level);
  r = a;
  const long db = b.high();
  const CycScalar leadInv = b.leading().inverse();
  while (!r.is_zero() && r.high() >= db) {
    const long shift = r.high() - db;
    CycScalar c = r.leading() * leadInv;
    SPoly term = SPoly::monomial(c, shift);
    q = q + term;
    r = r - b * term;
  }
}

}  // namespace

SPoly SPoly::divide_exact(const SPoly& d) const {
  check_level(d);
  if (d.is_zero()) throw std::domain_error("SPoly: division by zero");
  if (is_zero()) return zero(level_);
  SPoly a = shifted(-low_);
  SPoly b = d.shifted(-d.low_);
  SPoly q = zero(level_), r = zero(level_);
  poly_divrem(a, b, q, r, level_);
  if (!r.is_zero()) throw std::logic_error("SPoly: division not exact");
  return q.shifted(low_ - d.low_);
}

SPoly SPoly::gcd(const SPoly& a, const SPoly& b) {
  a.check_level(b);
  SPoly x = a.shifted(a.is_zero() ? 0 : -a.low());
  SPoly y = b.shifted(b.is_zero() ? 0 : -b.low());
  while (!y.is_zero()) {
    SPoly q = SPoly::zero(a.level()), r = SPoly::zero(a.level());
    poly_divrem(x, y, q, r, a.level());
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(x.leading().inverse());  // monic representative
}

std::complex<double> SPoly::eval(const std::complex<double>& sval) const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t k = c_.size(); k-- > 0;)
    acc = acc * sval + c_[k].to_complex();
  return acc * std::pow(sval, static_cast<double>(low_));
}

std::string SPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = high(); e >= low_; --e) {
    const CycScalar c = coeff(e);
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negated = false;
    if (!first && cs.size() > 1 && cs[0] == '-' && cs.find(" - ") == std::string::npos &&
        cs.find(" + ") == std::string::npos) {
      cs = cs.substr(1);
      negated = true;
    }
    if (first) {
      first = false;
    } else {
      os << (negated ? " - " : " + ");
    }
    bool wrap = cs.find(' ') != std::string::npos;
    bool isOne = (cs == "1");
    if (e == 0) {
      os << (wrap ? "(" + cs + ")" : cs);
    } else {
      if (!isOne) os << (wrap ? "(" + cs + ")" : cs) << "*";
      os << "s";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

bool SPoly::has_integer_coeffs() const {
  for (const CycScalar& c : c_)
    if (!c.has_integer_coeffs()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ScalarExt

ScalarExt ScalarExt::zero(int N) {
  ScalarExt r;
  r.level_ = N;
  r.num_ = SPoly::zero(N);
  r.den_ = SPoly::constant(CycScalar::one(N));
  return r;
}

ScalarExt ScalarExt::one(int N) { return from_cyc(CycScalar::one(N)); }

ScalarExt ScalarExt::from_cyc(const CycScalar& c) {
  ScalarExt r = zero(c.level());
  r.num_ = SPoly::constant(c);
  r.canonicalize();
  return r;
}

ScalarExt ScalarExt::from_rational(int N, const Rat& v) {
  return from_cyc(CycScalar::rational(N, v));
}

ScalarExt ScalarExt::from_poly(SPoly p) {
  ScalarExt r = zero(p.level());
  r.num_ = std::move(p);
  r.canonicalize();
  return r;
}

ScalarExt ScalarExt::s_power(int N, long k) {
  return from_poly(SPoly::monomial(CycScalar::one(N), k));
}

ScalarExt ScalarExt::q_power(int N, long k) {
  return from_cyc(CycScalar::xi_power(N, k));
}

ScalarExt ScalarExt::t_power(int N, long k) {
  ScalarExt r = one(N);
  r.tExp_ = k;
  return r;
}

ScalarExt ScalarExt::fraction(SPoly num, SPoly den, long tExp) {
  if (num.level() != den.level())
    throw std::invalid_argument("ScalarExt: numerator/denominator level mismatch");
  ScalarExt r;
  r.level_ = num.level();
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.tExp_ = tExp;
  if (r.den_.is_zero()) throw std::domain_error("ScalarExt: zero denominator");
  r.canonicalize();
  return r;
}

void ScalarExt::canonicalize() {
  if (num_.is_zero()) {
    den_ = SPoly::constant(CycScalar::one(level_));
    tExp_ = 0;
    return;
  }
  // monomial content: pin the denominator's lowest exponent to 0
  if (den_.low() != 0) {
    num_ = num_.shifted(-den_.low());
    den_ = den_.shifted(-den_.low());
  }
  if (den_.is_constant()) {
    if (!(den_.coeff(0) == CycScalar::one(level_))) {
      CycScalar inv = den_.coeff(0).inverse();
      num_ = num_.scaled(inv);
      den_ = SPoly::constant(CycScalar::one(level_));
    }
    return;
  }
  if (num_.term_count() + den_.term_count() > kGcdThreshold) {
    SPoly g = SPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
      if (den_.low() != 0) {
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
      }
    }
  }
  // monic denominator
  CycScalar lead = den_.leading();
  if (!(lead == CycScalar::one(level_))) {
    CycScalar inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool ScalarExt::has_integer_coeffs() const {
  return is_laurent() && num_.has_integer_coeffs();
}

ScalarExt ScalarExt::operator+(const ScalarExt& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (level_ != o.level_) throw std::invalid_argument("ScalarExt level mismatch");
  if (tExp_ != o.tExp_)
    throw std::logic_error("ScalarExt: adding values with distinct t-exponents");
  ScalarExt r;
  r.level_ = level_;
  r.tExp_ = tExp_;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.canonicalize();
  return r;
}

ScalarExt ScalarExt::operator-(const ScalarExt& o) const { return *this + (-o); }

ScalarExt ScalarExt::operator-() const {
  ScalarExt r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarExt ScalarExt::operator*(const ScalarExt& o) const {
  if (level_ != o.level_) throw std::invalid_argument("ScalarExt level mismatch");
  if (is_zero() || o.is_zero()) return zero(level_);
  ScalarExt r;
  r.level_ = level_;
  r.tExp_ = tExp_ + o.tExp_;
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.canonicalize();
  return r;
}

ScalarExt ScalarExt::operator/(const ScalarExt& o) const {
  return *this * o.inverse();
}

ScalarExt ScalarExt::inverse() const {
  if (is_zero()) throw std::domain_error("ScalarExt: inverse of zero");
  ScalarExt r;
  r.level_ = level_;
  r.tExp_ = -tExp_;
  r.num_ = den_;
  r.den_ = num_;
  r.canonicalize();
  return r;
}

bool ScalarExt::operator==(const ScalarExt& o) const {
  if (level_ != o.level_) throw std::invalid_argument("ScalarExt level mismatch");
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (tExp_ != o.tExp_) return false;
  return num_ * o.den_ == o.num_ * den_;
}

ScalarExt ScalarExt::bar() const {
  ScalarExt r;
  r.level_ = level_;
  r.tExp_ = -tExp_;
  r.num_ = num_.conj();
  r.den_ = den_.conj();
  r.canonicalize();
  return r;
}

ScalarExt ScalarExt::with_t_shift(long dt) const {
  if (is_zero()) return *this;
  ScalarExt r = *this;
  r.tExp_ += dt;
  return r;
}

ScalarExt ScalarExt::reduced() const {
  if (is_zero() || den_.is_constant()) return *this;
  ScalarExt r = *this;
  SPoly g = SPoly::gcd(r.num_, r.den_);
  if (!g.is_constant()) {
    r.num_ = r.num_.divide_exact(g);
    r.den_ = r.den_.divide_exact(g);
  }
  r.canonicalize();
  return r;
}

std::string ScalarExt::to_string() const {
  std::ostringstream os;
  if (tExp_ != 0) os << "t^" << tExp_ << " * ";
  std::string n = num_.to_string();
  if (den_.is_constant()) {
    os << n;
  } else {
    os << "(" << n << ") / (" << den_.to_string() << ")";
  }
  return os.str();
}

std::complex<double> ScalarExt::eval(const std::complex<double>& lambda) const {
  const LevelData& ld = level_data(level_);
  const std::complex<double> sval = std::exp(
      std::complex<double>(0.0, std::numbers::pi / ld.N) * lambda);
  const std::complex<double> dv = den_.eval(sval);
  if (std::abs(dv) < 1e-12)
    throw DegenerateSpecialization("denominator vanishes at this lambda");
  std::complex<double> v = num_.eval(sval) / dv;
  if (tExp_ != 0) {
    const std::complex<double> tval = std::exp(
        std::complex<double>(0.0, std::numbers::pi / (2.0 * ld.N)) * lambda *
        lambda);
    v *= std::pow(tval, static_cast<double>(tExp_));
  }
  return v;
}

ScalarExt quantum_integer(int N, long k) {
  // [k] = (q^k - q^{-k}) / (q - q^{-1}), a cyclotomic constant.
  CycScalar numc = CycScalar::xi_power(N, k) - CycScalar::xi_power(N, -k);
  CycScalar denc = CycScalar::xi_power(N, 1) - CycScalar::xi_power(N, -1);
  return ScalarExt::from_cyc(numc * denc.inverse());
}

ScalarExt quantum_integer_lambda(int N, long offset) {
  SPoly num = SPoly::monomial(CycScalar::xi_power(N, offset), 1) -
              SPoly::monomial(CycScalar::xi_power(N, -offset), -1);
  CycScalar denc = CycScalar::xi_power(N, 1) - CycScalar::xi_power(N, -1);
  return ScalarExt::from_poly(num.scaled(denc.inverse()));
}

ScalarExt SpecializationMap::map_x(int N) const {
  switch (kind) {
    case Kind::Psi:
      return ScalarExt::s_power(N, -2);  // q^{-2 lambda}
    case Kind::Gamma:
      return ScalarExt::s_power(N, 2);
    default:
      throw std::invalid_argument("map_x: numeric map has no symbolic image");
  }
}

ScalarExt SpecializationMap::map_d(int N) const {
  switch (kind) {
    case Kind::Psi:
      return -ScalarExt::q_power(N, 2);
    case Kind::Gamma:
      return -ScalarExt::q_power(N, -2);
    default:
      throw std::invalid_argument("map_d: numeric map has no symbolic image");
  }
}

std::complex<double> specialize(const ScalarExt& x, const SpecializationMap& map) {
  if (map.kind != SpecializationMap::Kind::EtaNumeric || !map.lambda)
    throw std::invalid_argument("specialize requires an etaNumeric map with lambda");
  return x.eval(*map.lambda);
}

}  // namespace ado
