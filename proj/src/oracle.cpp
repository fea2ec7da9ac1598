#include "ado/oracle.hpp"

#include <numbers>
#include <sstream>

namespace ado {

IntLaurent::IntLaurent(long low, std::vector<long long> coeffs)
    : low_(low), c_(std::move(coeffs)) {
  normalize();
}

IntLaurent IntLaurent::constant(long long v) { return IntLaurent(0, {v}); }

IntLaurent IntLaurent::monomial(long long c, long exp) {
  return IntLaurent(exp, {c});
}

void IntLaurent::normalize() {
  size_t begin = 0, end = c_.size();
  while (end > begin && c_[end - 1] == 0) --end;
  while (begin < end && c_[begin] == 0) ++begin;
  if (begin == end) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (begin > 0 || end < c_.size()) {
    c_ = std::vector<long long>(c_.begin() + static_cast<long>(begin),
                                c_.begin() + static_cast<long>(end));
    low_ += static_cast<long>(begin);
  }
}

long long IntLaurent::coeff(long exp) const {
  if (is_zero() || exp < low_ || exp > high()) return 0;
  return c_[static_cast<size_t>(exp - low_)];
}

IntLaurent IntLaurent::operator+(const IntLaurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  std::vector<long long> out(static_cast<size_t>(hi - lo + 1), 0);
  for (size_t k = 0; k < c_.size(); ++k)
    out[static_cast<size_t>(low_ - lo) + k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k)
    out[static_cast<size_t>(o.low_ - lo) + k] += o.c_[k];
  return IntLaurent(lo, std::move(out));
}

IntLaurent IntLaurent::operator-(const IntLaurent& o) const {
  return *this + (-o);
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (long long& x : r.c_) x = -x;
  return r;
}

IntLaurent IntLaurent::operator*(const IntLaurent& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<long long> out(c_.size() + o.c_.size() - 1, 0);
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) out[a + b] += c_[a] * o.c_[b];
  return IntLaurent(low_ + o.low_, std::move(out));
}

bool IntLaurent::operator==(const IntLaurent& o) const {
  return low_ == o.low_ && c_ == o.c_;
}

IntLaurent IntLaurent::divide_exact(const IntLaurent& d) const {
  if (d.is_zero()) throw std::domain_error("IntLaurent: division by zero");
  if (is_zero()) return zero();
  if (high() - low_ < d.high() - d.low_)
    throw std::logic_error("IntLaurent: division not exact");
  IntLaurent rem = *this;
  const long qlow = low_ - d.low_;
  std::vector<long long> q(static_cast<size_t>((high() - d.high()) - qlow) + 1, 0);
  while (!rem.is_zero()) {
    if (rem.high() - d.high() < qlow)
      throw std::logic_error("IntLaurent: division not exact");
    const long shift = rem.high() - d.high();
    const long long lead = d.c_.back();
    if (rem.c_.back() % lead != 0)
      throw std::logic_error("IntLaurent: division not exact");
    const long long c = rem.c_.back() / lead;
    q[static_cast<size_t>(shift - qlow)] = c;
    rem = rem - d * monomial(c, shift);
  }
  return IntLaurent(qlow, std::move(q));
}

IntLaurent IntLaurent::reversed() const {
  if (is_zero()) return *this;
  std::vector<long long> out(c_.rbegin(), c_.rend());
  return IntLaurent(-high(), std::move(out));
}

long long IntLaurent::value_at_one() const {
  long long s = 0;
  for (long long x : c_) s += x;
  return s;
}

std::complex<double> IntLaurent::eval(const std::complex<double>& t) const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t k = c_.size(); k-- > 0;)
    acc = acc * t + static_cast<double>(c_[k]);
  return acc * std::pow(t, static_cast<double>(low_));
}

std::string IntLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = high(); e >= low_; --e) {
    long long c = coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = std::abs(c);
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

ScalarExt IntLaurent::to_scalar(int N) const {
  ScalarExt acc = ScalarExt::zero(N);
  for (long e = low(); !is_zero() && e <= high(); ++e) {
    long long c = coeff(e);
    if (c == 0) continue;
    acc += ScalarExt::from_rational(N, make_rat(c)) *
           ScalarExt::s_power(N, -2 * e);
  }
  return acc;
}

namespace {

using LMatrix = std::vector<std::vector<IntLaurent>>;

LMatrix lidentity(int n) {
  LMatrix m(static_cast<size_t>(n),
            std::vector<IntLaurent>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = IntLaurent::constant(1);
  return m;
}

LMatrix lmul(const LMatrix& a, const LMatrix& b) {
  const size_t n = a.size();
  LMatrix r(n, std::vector<IntLaurent>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      IntLaurent acc;
      for (size_t k = 0; k < n; ++k) acc = acc + a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  return r;
}

// Reduced Burau image of sigma_i^{+1} in B_n, acting on e_1..e_{n-1}:
//   e_{i-1} -> e_{i-1} + t e_i,   e_i -> -t e_i,   e_{i+1} -> e_i + e_{i+1},
// columns holding the images. Differs from the identity only in row i.
LMatrix burau_generator(int n, int i) {
  LMatrix m = lidentity(n - 1);
  auto set = [&](int r, int c, IntLaurent v) {
    m[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = std::move(v);
  };
  set(i, i, IntLaurent::monomial(-1, 1));
  if (i > 1) set(i, i - 1, IntLaurent::monomial(1, 1));
  if (i < n - 1) set(i, i + 1, IntLaurent::constant(1));
  return m;
}

LMatrix burau_generator_inverse(int n, int i) {
  LMatrix m = lidentity(n - 1);
  auto set = [&](int r, int c, IntLaurent v) {
    m[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = std::move(v);
  };
  set(i, i, IntLaurent::monomial(-1, -1));
  if (i > 1) set(i, i - 1, IntLaurent::constant(1));
  if (i < n - 1) set(i, i + 1, IntLaurent::monomial(1, -1));
  return m;
}

IntLaurent ldet(const LMatrix& m) {
  const size_t n = m.size();
  if (n == 0) return IntLaurent::constant(1);
  if (n == 1) return m[0][0];
  IntLaurent acc;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    LMatrix minor(n - 1, std::vector<IntLaurent>(n - 1));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor[r - 1][cc++] = m[r][k];
      }
    }
    IntLaurent term = m[0][c] * ldet(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

std::vector<std::vector<IntLaurent>> burau_reduced(const BraidWord& word) {
  word.validate();
  const int n = word.strands;
  if (n < 2) return {};
  LMatrix m = lidentity(n - 1);
  for (int l : word.letters) {
    LMatrix g = l > 0 ? burau_generator(n, l) : burau_generator_inverse(n, -l);
    m = lmul(m, g);
  }
  return m;
}

IntLaurent alexander_burau(const BraidWord& word) {
  word.validate();
  // knot check: the closure permutation must be a single cycle
  std::vector<int> perm = word.permutation();
  {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) seen[j] = true;
    }
    if (cycles != 1)
      throw std::invalid_argument(
          "alexander_burau: closure is not a knot (multiple components)");
  }
  const int n = word.strands;
  if (n == 1) return IntLaurent::constant(1);

  LMatrix b = burau_reduced(word);
  LMatrix iminus = lidentity(n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j)
      iminus[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          iminus[static_cast<size_t>(i)][static_cast<size_t>(j)] -
          b[static_cast<size_t>(i)][static_cast<size_t>(j)];
  IntLaurent det = ldet(iminus);

  std::vector<long long> ones(static_cast<size_t>(n), 1);
  IntLaurent cyclic(0, std::move(ones));  // 1 + t + ... + t^{n-1}
  IntLaurent delta = det.divide_exact(cyclic);

  if (delta.is_zero())
    throw std::logic_error("alexander_burau: vanishing determinant");
  // symmetric representative with positive value at t = 1
  const long span = delta.high() + delta.low();
  if (span % 2 != 0)
    throw std::logic_error("alexander_burau: no symmetric representative");
  delta = delta * IntLaurent::monomial(1, -span / 2);
  if (delta.value_at_one() < 0) delta = -delta;
  if (std::abs(delta.value_at_one()) != 1)
    throw std::logic_error("alexander_burau: Delta(1) != +-1");
  return delta;
}

double kashaev_figure_eight(int N) {
  return kashaev_figure_eight(
      N, std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(N)));
}

double kashaev_figure_eight(int N, std::complex<double> omega) {
  if (N < 1) throw std::invalid_argument("kashaev_figure_eight: N >= 1");
  double total = 0.0;
  std::complex<double> poch(1.0, 0.0);
  for (int k = 0; k < N; ++k) {
    if (k > 0) poch *= (1.0 - std::pow(omega, k));
    total += std::norm(poch);
  }
  return total;
}

}  // namespace ado
