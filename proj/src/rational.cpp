#include "cohomolib/rational.hpp"

#include <climits>
#include <sstream>

#include "cohomolib/linalg.hpp"

namespace cohomolib {

Q parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (t.empty()) throw UserError("empty rational");
  if (t[0] == '+') t = t.substr(1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    char ch = t[i];
    bool ok = std::isdigit((unsigned char)ch) || ch == '/' || (ch == '-' && i == 0);
    if (!ok) throw UserError("malformed rational '" + s + "'");
  }
  Q q;
  if (q.set_str(t, 10) != 0) throw UserError("malformed rational '" + s + "'");
  if (t.find('/') != std::string::npos && q.get_den() == 0) throw UserError("zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Q& x) { return x.get_str(); }

QVec to_qvec(const IVec& v) {
  QVec q;
  q.reserve(v.size());
  for (long long x : v) q.push_back(qll(x));
  return q;
}

bool is_integral(const QVec& v) {
  for (auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

long long to_ll(const Z& z) {
  if (!z.fits_slong_p()) throw BudgetError("integer overflow");
  return z.get_si();
}

IVec to_ivec(const QVec& v) {
  IVec out;
  for (auto& x : v) {
    if (x.get_den() != 1) throw UserError("weight is not integral: " + x.get_str());
    out.push_back(to_ll(x.get_num()));
  }
  return out;
}

std::string join(const IVec& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

IVec parse_ivec(const std::string& s) {
  IVec v;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw UserError("malformed integer list '" + s + "'");
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(cur, &used);
    } catch (...) {
      throw UserError("malformed integer '" + cur + "'");
    }
    if (used != cur.size()) throw UserError("malformed integer '" + cur + "'");
    v.push_back(x);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']') continue;
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  return v;
}

IVec operator+(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
IVec operator-(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
IVec operator*(long long k, const IVec& a) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
  return c;
}
IVec operator-(const IVec& a) { return -1 * a; }

IVec mat_vec(const IMat& m, const IVec& v) {
  IVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat c(n, IVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      long long x = a[i][t];
      if (!x) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += x * b[t][j];
    }
  return c;
}

IMat identity_imat(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QOmega QOmega::inverse() const {
  Q n = a * a - a * b + b * b;
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  return {(a - b) / n, -b / n};
}

std::string to_string(const QOmega& x) {
  if (x.rational()) return x.a.get_str();
  std::string s;
  if (sgn(x.a) != 0) s = x.a.get_str();
  if (x.b == 1)
    s += s.empty() ? "w" : "+w";
  else if (x.b == -1)
    s += "-w";
  else {
    if (!s.empty() && sgn(x.b) > 0) s += "+";
    s += x.b.get_str() + "w";
  }
  return s;
}

QOmega parse_qomega(const std::string& in) {
  std::string s;
  for (char ch : in)
    if (ch != ' ') s += ch;
  if (s.empty()) throw UserError("empty number");
  if (s.back() != 'w') return QOmega(parse_rational(s));
  std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not leading
  std::size_t cut = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if (body[i] == '+' || body[i] == '-') {
      cut = i;
      break;
    }
  std::string re = cut == std::string::npos ? "" : body.substr(0, cut);
  std::string im = cut == std::string::npos ? body : body.substr(cut);
  Q b;
  if (im.empty() || im == "+")
    b = 1;
  else if (im == "-")
    b = -1;
  else
    b = parse_rational(im);
  return {re.empty() ? Q(0) : parse_rational(re), b};
}

Fp Fp::inverse() const {
  if (v == 0) throw std::domain_error("inverse of zero mod p");
  // Fermat
  Fp base = *this, r = Fp(1);
  std::uint64_t e = P - 2;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Fp Fp::from_q(const Q& q) {
  Z p(std::to_string(P));
  Z num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw std::domain_error("denominator divisible by p");
  Fp n, d;
  n.v = num.get_ui();
  d.v = den.get_ui();
  return n / d;
}

Matrix<Fp> reduce_mod_p(const QMat& m) {
  Matrix<Fp> out(m.r, m.c);
  for (std::size_t i = 0; i < m.a.size(); ++i)
    if (sgn(m.a[i]) != 0) out.a[i] = Fp::from_q(m.a[i]);
  return out;
}

QMat from_imat(const IMat& m) {
  int r = int(m.size()), c = r ? int(m[0].size()) : 0;
  QMat q(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) q(i, j) = qll(m[i][j]);
  return q;
}

}  // namespace cohomolib
