#include "ado/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace ado {

namespace {

// Exact division of integer polynomials, used to build Phi_n recursively.
std::vector<long> poly_div_exact(const std::vector<long>& num,
                                 const std::vector<long>& den) {
  std::vector<long> rem = num;
  const int dn = static_cast<int>(rem.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<long> quot(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    long c = rem[k + dd] / den[dd];
    quot[k] = c;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= c * den[j];
  }
  for (long r : rem)
    if (r != 0) throw std::logic_error("cyclotomic division not exact");
  return quot;
}

std::map<int, std::vector<long>>& phi_cache() {
  static std::map<int, std::vector<long>> cache;
  return cache;
}

std::mutex g_tables_mutex;

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

static std::vector<long> cyclotomic_impl(int n) {
  auto& cache = phi_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_div_exact(poly, cyclotomic_impl(d));
  }
  cache[n] = poly;
  return poly;
}

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1");
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return cyclotomic_impl(n);
}

const LevelData& level_data(int N) {
  if (N < 1) throw std::invalid_argument("level N must be >= 1");
  static std::map<int, LevelData> cache;
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  LevelData data;
  data.N = N;
  data.degree = euler_phi(2 * N);
  data.modulus = cyclotomic_impl(2 * N);
  data.root = std::polar(1.0, std::numbers::pi / N);

  // xi^k for k = 0..2N-1 reduced modulo Phi_{2N}. Powers below the degree are
  // basis vectors; the rest are obtained by repeated x*(previous) reduction.
  const int deg = data.degree;
  std::vector<Rat> cur(deg, Rat(0));
  cur[0] = 1;
  for (int k = 0; k < 2 * N; ++k) {
    data.xiPower.push_back(cur);
    // multiply by x
    Rat top = cur[deg - 1];
    for (int j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < deg; ++j) cur[j] -= top * data.modulus[j];
    }
  }
  auto [pos, inserted] = cache.emplace(N, std::move(data));
  return pos->second;
}

CycScalar CycScalar::zero(int N) {
  const LevelData& ld = level_data(N);
  return CycScalar(N, std::vector<Rat>(ld.degree, Rat(0)));
}

CycScalar CycScalar::one(int N) { return integer(N, 1); }

CycScalar CycScalar::integer(int N, long v) {
  CycScalar r = zero(N);
  r.c_[0] = v;
  return r;
}

CycScalar CycScalar::rational(int N, Rat v) {
  CycScalar r = zero(N);
  r.c_[0] = std::move(v);
  return r;
}

CycScalar CycScalar::xi_power(int N, long k) {
  const LevelData& ld = level_data(N);
  long m = k % (2 * N);
  if (m < 0) m += 2 * N;
  return CycScalar(N, ld.xiPower[static_cast<size_t>(m)]);
}

bool CycScalar::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

bool CycScalar::has_integer_coeffs() const {
  for (const Rat& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

Rat CycScalar::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

void CycScalar::check_level(const CycScalar& o) const {
  if (level_ != o.level_)
    throw std::invalid_argument("CycScalar level mismatch");
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  check_level(o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  check_level(o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  CycScalar r = *this;
  r += o;
  return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
  CycScalar r = *this;
  r -= o;
  return r;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  check_level(o);
  const LevelData& ld = level_data(level_);
  const int deg = ld.degree;
  std::vector<Rat> prod(2 * deg - 1, Rat(0));
  for (int a = 0; a < deg; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < deg; ++b) {
      if (o.c_[b] == 0) continue;
      prod[a + b] += c_[a] * o.c_[b];
    }
  }
  // reduce: x^k = -(lower part of Phi) * x^{k-deg}
  for (int k = 2 * deg - 2; k >= deg; --k) {
    Rat top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (int j = 0; j < deg; ++j) prod[k - deg + j] -= top * ld.modulus[j];
  }
  prod.resize(deg);
  return CycScalar(level_, std::move(prod));
}

CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) { return a * b; }

namespace {

// Polynomial helpers over Q for the extended Euclid inverse.
using QPoly = std::vector<Rat>;

int qdeg(const QPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (p[static_cast<size_t>(k)] != 0) return k;
  return -1;
}

void qtrim(QPoly& p) { p.resize(static_cast<size_t>(qdeg(p) + 1)); }

QPoly qsub_mul(const QPoly& a, const QPoly& b, const Rat& c, int shift) {
  QPoly r = a;
  if (r.size() < b.size() + static_cast<size_t>(shift))
    r.resize(b.size() + static_cast<size_t>(shift), Rat(0));
  for (size_t j = 0; j < b.size(); ++j) r[j + static_cast<size_t>(shift)] -= c * b[j];
  qtrim(r);
  return r;
}

}  // namespace

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: inverse of zero");
  const LevelData& ld = level_data(level_);
  // Extended Euclid for gcd(a, Phi) = 1 in Q[x]: find u with u*a = 1 mod Phi.
  QPoly r0(ld.modulus.begin(), ld.modulus.end());
  QPoly r1 = c_;
  qtrim(r1);
  QPoly u0(1, Rat(0));
  QPoly u1(1, Rat(1));
  while (qdeg(r1) > 0) {
    // divide r0 by r1
    QPoly rem = r0;
    QPoly q;
    int d1 = qdeg(r1);
    Rat lead = r1[static_cast<size_t>(d1)];
    while (qdeg(rem) >= d1) {
      int dr = qdeg(rem);
      Rat c = rem[static_cast<size_t>(dr)] / lead;
      if (static_cast<int>(q.size()) < dr - d1 + 1) q.resize(static_cast<size_t>(dr - d1 + 1), Rat(0));
      q[static_cast<size_t>(dr - d1)] = c;
      rem = qsub_mul(rem, r1, c, dr - d1);
    }
    // (r0, r1) <- (r1, rem); (u0, u1) <- (u1, u0 - q*u1)
    QPoly nu = u0;
    for (size_t k = 0; k < q.size(); ++k) {
      if (q[k] == 0) continue;
      nu = qsub_mul(nu, u1, q[k], static_cast<int>(k));
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(nu);
  }
  if (qdeg(r1) != 0)
    throw std::logic_error("CycScalar: modulus not coprime to element");
  Rat scale = Rat(1) / r1[0];
  std::vector<Rat> out(static_cast<size_t>(ld.degree), Rat(0));
  for (size_t k = 0; k < u1.size() && k < out.size(); ++k) out[k] = u1[k] * scale;
  return CycScalar(level_, std::move(out));
}

CycScalar CycScalar::conj() const {
  const int twoN = 2 * level_;
  CycScalar out = zero(level_);
  for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
    if (c_[static_cast<size_t>(k)] == 0) continue;
    CycScalar p = xi_power(level_, (twoN - k) % twoN);
    for (size_t j = 0; j < out.c_.size(); ++j)
      out.c_[j] += c_[static_cast<size_t>(k)] * p.c_[j];
  }
  return out;
}

bool CycScalar::operator==(const CycScalar& o) const {
  check_level(o);
  return c_ == o.c_;
}

std::complex<double> CycScalar::to_complex() const {
  const LevelData& ld = level_data(level_);
  std::complex<double> acc(0.0, 0.0);
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
    acc = acc * ld.root + c_[static_cast<size_t>(k)].get_d();
  return acc;
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat a = c_[k];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unitCoeff = (a == 1 && k > 0);
    if (!unitCoeff) os << a.get_str();
    if (k > 0) {
      if (!unitCoeff) os << "*";
      os << "xi";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace ado
