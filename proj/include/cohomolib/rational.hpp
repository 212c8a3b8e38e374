#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohomolib {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

// thrown for bad user input (exit code 2 in the cli)
struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// thrown when a configured size bound would be exceeded (exit code 3)
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Q& x) { return sgn(x) == 0; }
inline Q qll(long long x) { return Q(static_cast<long>(x)); }

Q parse_rational(const std::string& s);
std::string to_string(const Q& x);
QVec to_qvec(const IVec& v);
// throws if some entry is not an integer
IVec to_ivec(const QVec& v);
bool is_integral(const QVec& v);
long long to_ll(const Z& z);

std::string join(const IVec& v, const char* sep = ",");
IVec parse_ivec(const std::string& s);

IVec operator+(const IVec& a, const IVec& b);
IVec operator-(const IVec& a, const IVec& b);
IVec operator*(long long k, const IVec& a);
IVec operator-(const IVec& a);
IVec mat_vec(const IMat& m, const IVec& v);
IMat mat_mul(const IMat& a, const IMat& b);
IMat identity_imat(int n);

// Eisenstein rationals a + b*w with w^2 + w + 1 = 0.  Only used where a
// Cartan element has to sit on the zero locus of a positive form.
struct QOmega {
  Q a, b;
  QOmega() = default;
  QOmega(const Q& x) : a(x), b(0) {}  // NOLINT
  QOmega(const Q& x, const Q& y) : a(x), b(y) {}
  bool zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool rational() const { return sgn(b) == 0; }
  QOmega operator+(const QOmega& o) const { return {a + o.a, b + o.b}; }
  QOmega operator-(const QOmega& o) const { return {a - o.a, b - o.b}; }
  QOmega operator-() const { return {-a, -b}; }
  QOmega operator*(const QOmega& o) const {
    Q bd = b * o.b;
    return {a * o.a - bd, a * o.b + b * o.a - bd};
  }
  QOmega inverse() const;
  QOmega operator/(const QOmega& o) const { return *this * o.inverse(); }
  QOmega& operator+=(const QOmega& o) { return *this = *this + o; }
  QOmega& operator-=(const QOmega& o) { return *this = *this - o; }
  QOmega& operator*=(const QOmega& o) { return *this = *this * o; }
  bool operator==(const QOmega& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QOmega& o) const { return !(*this == o); }
};

inline bool is_zero(const QOmega& x) { return x.zero(); }
std::string to_string(const QOmega& x);
// accepts "p/q", "p/q+r/sw", "r/sw", "-w"
QOmega parse_qomega(const std::string& s);

// arithmetic mod the Mersenne prime 2^61-1
struct Fp {
  static constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;
  std::uint64_t v = 0;
  Fp() = default;
  explicit Fp(std::uint64_t x) : v(x % P) {}
  static Fp from_ll(long long x) {
    long long r = x % (long long)P;
    if (r < 0) r += (long long)P;
    Fp f;
    f.v = std::uint64_t(r);
    return f;
  }
  // throws if the denominator vanishes mod P
  static Fp from_q(const Q& q);
  Fp operator+(Fp o) const {
    Fp r;
    r.v = v + o.v;
    if (r.v >= P) r.v -= P;
    return r;
  }
  Fp operator-(Fp o) const {
    Fp r;
    r.v = v >= o.v ? v - o.v : v + P - o.v;
    return r;
  }
  Fp operator-() const { return Fp() - *this; }
  Fp operator*(Fp o) const {
    unsigned __int128 m = (unsigned __int128)v * o.v;
    std::uint64_t lo = std::uint64_t(m & P), hi = std::uint64_t(m >> 61);
    Fp r;
    r.v = lo + hi;
    if (r.v >= P) r.v -= P;
    return r;
  }
  Fp inverse() const;
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  bool operator==(Fp o) const { return v == o.v; }
  bool operator!=(Fp o) const { return v != o.v; }
};

inline bool is_zero(const Fp& x) { return x.v == 0; }

}  // namespace cohomolib
