#include "reflekt/cyclotomic.hpp"

#include <array>
#include <climits>
#include <functional>
#include <mutex>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "reflekt/detail/expr_parser.hpp"

namespace reflekt {

struct CycNum::BigRep {
  mpz_class den;
  std::vector<mpz_class> num;
};

std::string to_string(const Rational& q) { return q.get_str(); }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<long> compute_cyclotomic(long n) {
  // Phi_n = prod_{d | n} (X^d - 1)^mu(n/d): multiply the positive factors
  // first, then divide out the negative ones.
  std::vector<mpz_class> poly{1};
  std::vector<long> divisors;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  for (long d : divisors) {
    if (moebius(n / d) != 1) continue;
    std::vector<mpz_class> next(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + d] += poly[i];
      next[i] -= poly[i];
    }
    poly.swap(next);
  }
  for (long d : divisors) {
    if (moebius(n / d) != -1) continue;
    // divide by X^d - 1: q_i = q_{i-d} - p_i  (from the low end)
    std::size_t m = poly.size() - d;
    std::vector<mpz_class> q(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      q[i] = -poly[i];
      if (i >= static_cast<std::size_t>(d)) q[i] += q[i - d];
    }
    poly.swap(q);
  }
  std::vector<long> out;
  out.reserve(poly.size());
  for (auto& c : poly) {
    if (!c.fits_slong_p()) throw Error(ErrorCode::Internal, "cyclotomic coefficient overflow");
    out.push_back(c.get_si());
  }
  return out;
}

struct Ctx {
  long n = 1;
  int phi = 1;
  std::vector<long> poly;                      // Phi_n, ascending, monic
  std::vector<std::pair<int, long>> low_terms;  // nonzero (j, coeff) for j < phi
  std::vector<long> primes;
};

const Ctx& context(long n) {
  struct Slot {
    long n = 0;
    const Ctx* ctx = nullptr;
  };
  thread_local std::array<Slot, 8> recent{};
  thread_local unsigned next_slot = 0;
  for (auto& s : recent)
    if (s.n == n) return *s.ctx;

  static std::mutex mu;
  static std::unordered_map<long, std::unique_ptr<Ctx>> table;
  const Ctx* found = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(n);
    if (it == table.end()) {
      auto ctx = std::make_unique<Ctx>();
      ctx->n = n;
      ctx->poly = compute_cyclotomic(n);
      ctx->phi = static_cast<int>(ctx->poly.size()) - 1;
      for (int j = 0; j < ctx->phi; ++j)
        if (ctx->poly[j] != 0) ctx->low_terms.emplace_back(j, ctx->poly[j]);
      ctx->primes = prime_factors(n);
      it = table.emplace(n, std::move(ctx)).first;
    }
    found = it->second.get();
  }
  recent[next_slot++ % recent.size()] = {n, found};
  return *found;
}

long checked_lcm(long a, long b) {
  long l = std::lcm(a, b);
  if (l > kMaxConductor)
    throw Error(ErrorCode::ConductorTooLarge, "conductor " + std::to_string(l) + " exceeds cap");
  return l;
}

long mod_inverse(long a, long m) {
  if (m == 1) return 0;
  long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
  while (newr != 0) {
    long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  return ((t % m) + m) % m;
}

// ---- integer kernels --------------------------------------------------

struct Overflow {};

struct I128 {
  __int128 v = 0;
  I128() = default;
  I128(__int128 x) : v(x) {}
  I128(long x) : v(x) {}
  I128(int x) : v(x) {}
};

inline I128 operator+(I128 a, I128 b) {
  __int128 r;
  if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
  return r;
}
inline I128 operator-(I128 a, I128 b) {
  __int128 r;
  if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
  return r;
}
inline I128 operator*(I128 a, I128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
  return r;
}
inline I128 operator-(I128 a) { return I128(0) - a; }
inline I128& operator+=(I128& a, I128 b) { return a = a + b; }
inline I128& operator-=(I128& a, I128 b) { return a = a - b; }

inline bool is_zero(const I128& a) { return a.v == 0; }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline int sign_of(const I128& a) { return a.v < 0 ? -1 : (a.v > 0 ? 1 : 0); }
inline int sign_of(const mpz_class& a) { return sgn(a); }

inline I128 gcd_abs(I128 a, I128 b) {
  unsigned __int128 x = a.v < 0 ? -static_cast<unsigned __int128>(a.v) : a.v;
  unsigned __int128 y = b.v < 0 ? -static_cast<unsigned __int128>(b.v) : b.v;
  while (y != 0) {
    unsigned __int128 t = x % y;
    x = y;
    y = t;
  }
  if (x > static_cast<unsigned __int128>(~static_cast<unsigned __int128>(0) >> 1)) throw Overflow{};
  return static_cast<__int128>(x);
}
inline mpz_class gcd_abs(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline I128 div_exact(I128 a, I128 b) { return a.v / b.v; }
inline mpz_class div_exact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline I128 scale(I128 a, long c) { return a * I128(static_cast<__int128>(c)); }
inline mpz_class scale(const mpz_class& a, long c) { return a * c; }

template <class T>
using Vec = boost::container::small_vector<T, 8>;

template <class T>
struct Dense {
  long n = 1;
  T den{1};
  Vec<T> c;
};

// Reduce a polynomial in zeta_n (any length) to the power basis mod Phi_n.
template <class T>
void reduce_mod(Vec<T>& a, const Ctx& ctx) {
  const long n = ctx.n;
  if (static_cast<long>(a.size()) > n) {
    for (std::size_t i = n; i < a.size(); ++i)
      if (!is_zero(a[i])) a[i % n] += a[i];
    a.resize(n);
  }
  for (long k = static_cast<long>(a.size()) - 1; k >= ctx.phi; --k) {
    if (is_zero(a[k])) continue;
    T top = a[k];
    long shift = k - ctx.phi;
    for (auto [j, coef] : ctx.low_terms) a[shift + j] -= scale(top, coef);
    a[k] = T(0);
  }
  a.resize(ctx.phi, T(0));
}

template <class T>
bool all_zero(const Vec<T>& a) {
  for (auto& x : a)
    if (!is_zero(x)) return false;
  return true;
}

template <class T>
void lift(Dense<T>& d, long target) {
  if (d.n == target) return;
  const long f = target / d.n;
  Vec<T> out(static_cast<std::size_t>(target), T(0));
  for (std::size_t i = 0; i < d.c.size(); ++i) out[i * f] = d.c[i];
  reduce_mod(out, context(target));
  d.c.swap(out);
  d.n = target;
}

// Move d to the smallest conductor containing its value.
template <class T>
void minimize_conductor(Dense<T>& d) {
  for (;;) {
    bool rational = true;
    for (std::size_t i = 1; i < d.c.size(); ++i)
      if (!is_zero(d.c[i])) {
        rational = false;
        break;
      }
    if (rational) {
      d.c.resize(1);
      d.n = 1;
      return;
    }
    const Ctx& ctx = context(d.n);
    bool reduced = false;
    for (long p : ctx.primes) {
      const long m = d.n / p;
      if (m % p == 0) {
        bool ok = true;
        for (std::size_t i = 0; i < d.c.size() && ok; ++i)
          if (static_cast<long>(i) % p != 0 && !is_zero(d.c[i])) ok = false;
        if (!ok) continue;
        const int phi_m = context(m).phi;
        Vec<T> out(static_cast<std::size_t>(phi_m), T(0));
        for (int j = 0; j < phi_m; ++j) out[j] = d.c[static_cast<std::size_t>(j) * p];
        d.c.swap(out);
        d.n = m;
        reduced = true;
        break;
      }
      // p exactly divides n: write d = sum_x zeta_p^x B_x with
      // zeta_p = zeta_n^m, zeta_m = zeta_n^p; d lies in Q(zeta_m) iff all
      // B_x - B_{p-1} vanish for 1 <= x <= p-2.
      const long inv_m = mod_inverse(m % p, p);
      const long inv_p = mod_inverse(p % m, m);
      std::vector<Vec<T>> B(static_cast<std::size_t>(p), Vec<T>(static_cast<std::size_t>(m), T(0)));
      for (std::size_t i = 0; i < d.c.size(); ++i) {
        if (is_zero(d.c[i])) continue;
        long x = (static_cast<long>(i) % p) * inv_m % p;
        long y = m == 1 ? 0 : (static_cast<long>(i) % m) * inv_p % m;
        B[x][y] += d.c[i];
      }
      const Ctx& cm = context(m);
      bool ok = true;
      for (long x = 1; x + 1 < p && ok; ++x) {
        Vec<T> diff(static_cast<std::size_t>(m), T(0));
        for (long y = 0; y < m; ++y) diff[y] = B[x][y] - B[p - 1][y];
        reduce_mod(diff, cm);
        ok = all_zero(diff);
      }
      if (!ok) continue;
      Vec<T> out(static_cast<std::size_t>(m), T(0));
      for (long y = 0; y < m; ++y) out[y] = B[0][y] - B[p - 1][y];
      reduce_mod(out, cm);
      d.c.swap(out);
      d.n = m;
      reduced = true;
      break;
    }
    if (!reduced) return;
  }
}

template <class T>
void normalize(Dense<T>& d) {
  T g = d.den;
  for (auto& x : d.c) {
    if (is_zero(x)) continue;
    g = gcd_abs(g, x);
  }
  g = gcd_abs(g, T(0));
  if (sign_of(d.den) < 0) g = -g;
  if (!is_zero(g - T(1))) {
    d.den = div_exact(d.den, g);
    for (auto& x : d.c) x = div_exact(x, g);
  }
}

template <class T>
void finish(Dense<T>& d) {
  minimize_conductor(d);
  normalize(d);
}

template <class T>
Dense<T> add(Dense<T> a, Dense<T> b, bool subtract) {
  long L = checked_lcm(a.n, b.n);
  lift(a, L);
  lift(b, L);
  T g = gcd_abs(a.den, b.den);
  T fa = div_exact(b.den, g);
  T fb = div_exact(a.den, g);
  Dense<T> r;
  r.n = L;
  r.den = a.den * fa;
  r.c.resize(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    T x = a.c[i] * fa;
    T y = b.c[i] * fb;
    r.c[i] = subtract ? T(x - y) : T(x + y);
  }
  finish(r);
  return r;
}

template <class T>
Dense<T> mul(Dense<T> a, Dense<T> b) {
  long L = checked_lcm(a.n, b.n);
  lift(a, L);
  lift(b, L);
  Dense<T> r;
  r.n = L;
  r.den = a.den * b.den;
  r.c.assign(a.c.size() + b.c.size() - 1, T(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (is_zero(b.c[j])) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  reduce_mod(r.c, context(L));
  finish(r);
  return r;
}

inline bool fits64(const I128& x) { return x.v >= -INT64_MAX && x.v <= INT64_MAX; }
inline bool fits64(const mpz_class& x) {
  return x.fits_slong_p() && x.get_si() != LONG_MIN;
}
inline std::int64_t to64(const I128& x) { return static_cast<std::int64_t>(x.v); }
inline std::int64_t to64(const mpz_class& x) { return x.get_si(); }
inline mpz_class to_mpz(const I128& x) {
  bool neg = x.v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x.v) : x.v;
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & ~0UL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}
inline mpz_class to_mpz(const mpz_class& x) { return x; }

}  // namespace

struct CycAccess {
  template <class T>
  static Dense<T> dense(const CycNum& a);

  template <class T>
  static CycNum store(const Dense<T>& d) {
    CycNum out;
    out.n_ = d.n;
    bool small = fits64(d.den);
    for (auto& x : d.c) small = small && fits64(x);
    if (small) {
      out.den_ = to64(d.den);
      out.num_.assign(d.c.size(), 0);
      for (std::size_t i = 0; i < d.c.size(); ++i) out.num_[i] = to64(d.c[i]);
      return out;
    }
    auto big = std::make_shared<CycNum::BigRep>();
    big->den = to_mpz(d.den);
    for (auto& x : d.c) big->num.push_back(to_mpz(x));
    out.big_ = std::move(big);
    out.num_.clear();
    return out;
  }

  template <class F>
  static CycNum apply(const CycNum& a, const CycNum& b, F f) {
    if (!a.big_ && !b.big_) {
      try {
        return store(f(dense<I128>(a), dense<I128>(b)));
      } catch (const Overflow&) {
      }
    }
    return store(f(dense<mpz_class>(a), dense<mpz_class>(b)));
  }

  template <class F>
  static CycNum apply1(const CycNum& a, F f) {
    if (!a.big_) {
      try {
        return store(f(dense<I128>(a)));
      } catch (const Overflow&) {
      }
    }
    return store(f(dense<mpz_class>(a)));
  }

  static bool is_big(const CycNum& a) { return static_cast<bool>(a.big_); }
};

template <>
Dense<I128> CycAccess::dense<I128>(const CycNum& a) {
  Dense<I128> d;
  d.n = a.n_;
  d.den = I128(a.den_);
  d.c.reserve(a.num_.size());
  for (auto x : a.num_) d.c.emplace_back(x);
  return d;
}

template <>
Dense<mpz_class> CycAccess::dense<mpz_class>(const CycNum& a) {
  Dense<mpz_class> d;
  d.n = a.n_;
  if (a.big_) {
    d.den = a.big_->den;
    for (auto& x : a.big_->num) d.c.push_back(x);
  } else {
    d.den = mpz_class(static_cast<long>(a.den_));
    for (auto x : a.num_) d.c.emplace_back(static_cast<long>(x));
  }
  return d;
}

CycNum::CycNum(long v) {
  if (v == LONG_MIN) *this = CycNum(Rational(mpz_class(v)));
  else num_[0] = v;
}

CycNum::CycNum(const Rational& q) {
  Dense<mpz_class> d;
  d.n = 1;
  d.den = q.get_den();
  d.c.push_back(q.get_num());
  *this = CycAccess::store(d);
}

CycNum CycNum::root_of_unity(long n, long k) {
  if (n <= 0) throw Error(ErrorCode::ParseError, "root of unity needs n >= 1");
  if (n > kMaxConductor)
    throw Error(ErrorCode::ConductorTooLarge, "conductor " + std::to_string(n) + " exceeds cap");
  k %= n;
  if (k < 0) k += n;
  long g = std::gcd(k, n);
  if (k == 0) g = n;
  n /= g;
  k /= g;
  Dense<mpz_class> d;
  d.n = n;
  d.den = 1;
  Vec<mpz_class> a(static_cast<std::size_t>(n), mpz_class(0));
  a[static_cast<std::size_t>(k)] = 1;
  reduce_mod(a, context(n));
  d.c = std::move(a);
  finish(d);
  return CycAccess::store(d);
}

int CycNum::basis_size() const { return static_cast<int>(big_ ? big_->num.size() : num_.size()); }

Rational CycNum::coeff(int k) const {
  if (k < 0 || k >= basis_size()) return Rational(0);
  Rational q;
  if (big_) q = Rational(big_->num[k], big_->den);
  else q = Rational(mpz_class(static_cast<long>(num_[k])), mpz_class(static_cast<long>(den_)));
  q.canonicalize();
  return q;
}

Rational CycNum::denominator() const {
  return big_ ? Rational(big_->den) : Rational(mpz_class(static_cast<long>(den_)));
}

bool CycNum::is_zero() const { return !big_ && n_ == 1 && num_[0] == 0; }
bool CycNum::is_one() const { return !big_ && n_ == 1 && num_[0] == 1 && den_ == 1; }

Rational CycNum::to_rational() const {
  if (n_ != 1) throw Error(ErrorCode::Internal, "value " + str() + " is not rational");
  return coeff(0);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  if (big_) {
    auto b = std::make_shared<BigRep>(*big_);
    for (auto& x : b->num) x = -x;
    r.big_ = std::move(b);
  } else {
    for (auto& x : r.num_) x = -x;
  }
  return r;
}

CycNum& CycNum::operator+=(const CycNum& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  *this = CycAccess::apply(*this, b, [](auto x, auto y) { return add(std::move(x), std::move(y), false); });
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
  if (b.is_zero()) return *this;
  *this = CycAccess::apply(*this, b, [](auto x, auto y) { return add(std::move(x), std::move(y), true); });
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return CycNum();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return CycAccess::apply(a, b, [](auto x, auto y) { return mul(std::move(x), std::move(y)); });
}

CycNum& CycNum::operator*=(const CycNum& b) { return *this = *this * b; }

CycNum& CycNum::operator/=(const CycNum& b) { return *this = *this * b.inverse(); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (n_ == 1) return CycNum(Rational(1) / to_rational());
  // Solve (a * x = 1) as a linear system in the power basis.
  const Ctx& ctx = context(n_);
  const int phi = ctx.phi;
  Dense<mpz_class> a = CycAccess::dense<mpz_class>(*this);
  std::vector<std::vector<Rational>> M(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    Vec<mpz_class> col(static_cast<std::size_t>(phi + j), mpz_class(0));
    for (int i = 0; i < phi; ++i) col[i + j] = a.c[i];
    reduce_mod(col, ctx);
    for (int i = 0; i < phi; ++i) M[i][j] = Rational(col[i], a.den);
  }
  for (auto& row : M)
    for (auto& x : row) x.canonicalize();
  M[0][phi] = 1;
  for (int col = 0, row = 0; col < phi; ++col, ++row) {
    int piv = row;
    while (piv < phi && M[piv][col] == 0) ++piv;
    if (piv == phi) throw Error(ErrorCode::Internal, "singular multiplication matrix");
    std::swap(M[piv], M[row]);
    Rational inv = 1 / M[row][col];
    for (int k = col; k <= phi; ++k) M[row][k] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == row || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (int k = col; k <= phi; ++k) M[r][k] -= f * M[row][k];
    }
  }
  mpz_class den = 1;
  for (int i = 0; i < phi; ++i) {
    mpz_class d = M[i][phi].get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  Dense<mpz_class> r;
  r.n = n_;
  r.den = den;
  for (int i = 0; i < phi; ++i) {
    mpz_class num = M[i][phi].get_num() * (den / M[i][phi].get_den());
    r.c.push_back(num);
  }
  finish(r);
  return CycAccess::store(r);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycNum CycNum::galois(long k) const {
  if (n_ <= 2) return *this;
  long n = n_;
  k %= n;
  if (k < 0) k += n;
  if (std::gcd(k, n) != 1) throw Error(ErrorCode::Internal, "galois exponent not a unit");
  return CycAccess::apply1(*this, [n, k](auto d) {
    using T = std::decay_t<decltype(d.den)>;
    Vec<T> out(static_cast<std::size_t>(n), T(0));
    for (std::size_t i = 0; i < d.c.size(); ++i)
      out[(static_cast<long>(i) * k) % n] = d.c[i];
    reduce_mod(out, context(n));
    d.c = std::move(out);
    finish(d);
    return d;
  });
}

std::string CycNum::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  const int m = basis_size();
  for (int k = 0; k < m; ++k) {
    Rational q = coeff(k);
    if (q == 0) continue;
    bool neg = q < 0;
    if (neg) q = -q;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += q.get_str();
      continue;
    }
    if (q != 1) out += q.get_str() + "*";
    out += "z(" + std::to_string(n_) + ")";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

void CycNum::append_key(std::string& out) const {
  auto put = [&out](std::int64_t v) { out.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(n_);
  if (big_) {
    out += 'B';
    out += big_->den.get_str(32);
    for (auto& x : big_->num) {
      out += ',';
      out += x.get_str(32);
    }
    out += ';';
    return;
  }
  put(den_);
  for (auto x : num_) put(x);
}

std::size_t CycNum::hash() const {
  std::size_t h = std::hash<long>{}(n_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (big_) {
    mix(std::hash<std::string>{}(big_->den.get_str(16)));
    for (auto& x : big_->num) mix(std::hash<std::string>{}(x.get_str(16)));
  } else {
    mix(static_cast<std::size_t>(den_));
    for (auto x : num_) mix(static_cast<std::size_t>(x));
  }
  return h;
}

int CycNum::compare(const CycNum& b) const {
  if (n_ != b.n_) return n_ < b.n_ ? -1 : 1;
  if (!big_ && !b.big_) {
    if (den_ != b.den_) return den_ < b.den_ ? -1 : 1;
    for (std::size_t i = 0; i < num_.size(); ++i)
      if (num_[i] != b.num_[i]) return num_[i] < b.num_[i] ? -1 : 1;
    return 0;
  }
  if (!big_) return -1;
  if (!b.big_) return 1;
  int c = cmp(big_->den, b.big_->den);
  if (c != 0) return c < 0 ? -1 : 1;
  for (std::size_t i = 0; i < big_->num.size(); ++i) {
    c = cmp(big_->num[i], b.big_->num[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

namespace {

struct CycOps {
  CycNum number(const mpz_class& z) { return CycNum(Rational(z)); }
  CycNum zeta(long n) { return CycNum::zeta(n); }
  CycNum variable(std::string_view name) {
    throw Error(ErrorCode::ParseError, "unexpected identifier '" + std::string(name) + "'");
  }
  CycNum divide(const CycNum& a, const CycNum& b) { return a / b; }
  CycNum power(const CycNum& a, long e) { return a.pow(e); }
};

}  // namespace

CycNum CycNum::parse(std::string_view text) {
  CycOps ops;
  return detail::ExprParser<CycNum, CycOps>(text, ops).parse();
}

const std::vector<long>& cyclotomic_polynomial(long n) { return context(n).poly; }

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

}  // namespace reflekt
