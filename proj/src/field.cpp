#include "ybcube/field.hpp"

#include <algorithm>
#include <numeric>

namespace ybcube {

namespace {

int64_t mod_pos(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int64_t ipow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> fs;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// remainder of a by monic b
Poly poly_rem(Poly a, const Poly& b, int64_t p) {
  trim(a);
  while (deg(a) >= deg(b)) {
    int64_t coef = a.back();
    int shift = deg(a) - deg(b);
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = mod_pos(a[i + shift] - coef * b[i], p);
    trim(a);
  }
  return a;
}

bool poly_is_irreducible(const Poly& f, int64_t p) {
  // trial division by every monic polynomial of degree 1..deg(f)/2
  int n = deg(f);
  for (int d = 1; 2 * d <= n; ++d) {
    int64_t count = ipow(p, d);
    for (int64_t enc = 0; enc < count; ++enc) {
      Poly g(d + 1, 0);
      int64_t v = enc;
      for (int i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FieldCtx {
  int64_t p;
  Poly modulus;
  int n;  // deg(modulus) = 2e

  Poly reduce(Poly a) const {
    a = poly_rem(std::move(a), modulus, p);
    a.resize(n, 0);
    return a;
  }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(poly_mul(a, b, p)); }
  Poly pow(Poly a, int64_t k) const {
    Poly r = one();
    while (k > 0) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  Poly one() const {
    Poly r(n, 0);
    r[0] = 1;
    return r;
  }
  int64_t encode(const Poly& a) const {
    int64_t v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return v;
  }
  Poly decode(int64_t v) const {
    Poly a(n, 0);
    for (int i = 0; i < n; ++i) {
      a[i] = v % p;
      v /= p;
    }
    return a;
  }
};

// order of a in the multiplicative group of size `group_order`
bool has_full_order(const FieldCtx& F, const Poly& a, int64_t group_order) {
  if (F.encode(a) == 0) return false;
  if (F.pow(a, group_order) != F.one()) return false;  // not a unit of that order? (sanity)
  for (int64_t r : prime_factors(group_order))
    if (F.pow(a, group_order / r) == F.one()) return false;
  return true;
}

}  // namespace

int64_t FieldSpec::q() const { return ipow(p, e); }
int64_t FieldSpec::order() const { return q() * q() - 1; }

FieldSpec FieldSpec::with_default_modulus(int64_t p, int e, int64_t delta_exponent) {
  if (!is_prime(p)) throw Error("field: p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw Error("field: e must be >= 1");
  int n = 2 * e;
  int64_t count = ipow(p, n);
  for (int64_t enc = 0; enc < count; ++enc) {
    Poly f(n + 1, 0);
    int64_t v = enc;
    for (int i = 0; i < n; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[n] = 1;
    if (poly_is_irreducible(f, p)) {
      FieldSpec spec;
      spec.p = p;
      spec.e = e;
      spec.modulus = f;
      spec.delta_exponent = delta_exponent;
      return spec;
    }
  }
  throw Error("field: no irreducible polynomial found");  // unreachable
}

int64_t ZechTable::zech(int64_t t) const { return z_[mod_pos(t, order_)]; }

ZechTable build_field(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw Error("field: p = " + std::to_string(spec.p) + " is not prime");
  if (spec.e < 1) throw Error("field: e must be >= 1");
  const int n = 2 * spec.e;
  Poly modulus = spec.modulus;
  trim(modulus);
  if (deg(modulus) != n || modulus.back() != 1)
    throw Error("field: modulus must be monic of degree 2e");
  for (int64_t c : modulus)
    if (c < 0 || c >= spec.p) throw Error("field: modulus coefficients must lie in [0, p)");
  if (!poly_is_irreducible(modulus, spec.p)) throw Error("field: modulus is reducible");

  FieldCtx F{spec.p, modulus, n};
  const int64_t q = spec.q();
  const int64_t order = q * q - 1;

  if (std::gcd(mod_pos(spec.delta_exponent, order), order) != 1)
    throw Error("field: delta_exponent " + std::to_string(spec.delta_exponent) +
                " does not select a generator of order " + std::to_string(order));

  // default primitive root: the generator with the smallest element encoding
  Poly g0;
  for (int64_t enc = 2; enc < ipow(spec.p, n); ++enc) {
    Poly a = F.decode(enc);
    if (has_full_order(F, a, order)) {
      g0 = a;
      break;
    }
  }
  if (g0.empty()) throw Error("field: no primitive root found");  // unreachable for a field

  Poly delta = F.pow(g0, mod_pos(spec.delta_exponent, order));

  // dlog of every power of delta, indexed by element encoding
  std::vector<int64_t> dlog(ipow(spec.p, n), -1);
  Poly x = F.one();
  for (int64_t t = 0; t < order; ++t) {
    dlog[F.encode(x)] = t;
    x = F.mul(x, delta);
  }

  ZechTable table;
  table.spec_ = spec;
  table.spec_.modulus = modulus;
  table.q_ = q;
  table.order_ = order;
  table.delta_ = delta;
  table.z_.assign(order, ZechTable::kMinusInfinity);
  x = F.one();
  for (int64_t t = 0; t < order; ++t) {
    Poly s = x;
    s[0] = mod_pos(s[0] + 1, spec.p);  // 1 + delta^t
    int64_t enc = F.encode(s);
    table.z_[t] = (enc == 0) ? ZechTable::kMinusInfinity : dlog[enc];
    x = F.mul(x, delta);
  }
  return table;
}

KlPair kl_pair(const ZechTable& table, int64_t i, int64_t j) {
  const int64_t order = table.order();
  const int64_t step = table.q() - 1;
  i = mod_pos(i, order);
  j = mod_pos(j, order);
  if (mod_pos(i - j, step) == 0)
    throw Error("kl_pair: i = " + std::to_string(i) + ", j = " + std::to_string(j) +
                " are congruent mod q-1; no square relation exists");
  const int64_t x = table.zech(j - i);
  const int64_t y = mod_pos(x + i - j, order);
  return KlPair{mod_pos(j - y * step, order), mod_pos(i - x * step, order)};
}

}  // namespace ybcube
