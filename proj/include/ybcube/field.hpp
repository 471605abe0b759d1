#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ybcube/common.hpp"

namespace ybcube {

// Polynomial over F_p, little-endian coefficients (index = degree).
using Poly = std::vector<int64_t>;

// Description of F_{q^2}, q = p^e, realized as F_p[t]/(modulus) with
// modulus monic irreducible of degree 2e.  delta is selected as
// g0^delta_exponent where g0 is the default primitive root (the generator
// of smallest element encoding), so runs are reproducible.
struct FieldSpec {
  int64_t p = 0;
  int e = 1;
  Poly modulus;  // monic, degree 2e, coefficients in [0, p)
  int64_t delta_exponent = 1;

  int64_t q() const;      // p^e
  int64_t order() const;  // q^2 - 1

  // Spec with the lexicographically smallest monic irreducible modulus of
  // degree 2e (smallest when coefficients (c_0..c_{2e-1}) are read as base-p
  // digits of an integer).
  static FieldSpec with_default_modulus(int64_t p, int e, int64_t delta_exponent = 1);

  bool operator==(const FieldSpec&) const = default;
};

// Discrete-log table for delta: zech(t) is the exponent z with
// delta^z = 1 + delta^t, or kMinusInfinity when 1 + delta^t = 0.
// Immutable after construction; safe for shared concurrent reads.
class ZechTable {
public:
  static constexpr int64_t kMinusInfinity = -1;

  int64_t q() const { return q_; }
  int64_t order() const { return order_; }  // q^2 - 1
  const FieldSpec& spec() const { return spec_; }
  const Poly& delta() const { return delta_; }

  // z(t) for t taken mod (q^2 - 1).
  int64_t zech(int64_t t) const;

private:
  friend ZechTable build_field(const FieldSpec& spec);

  FieldSpec spec_;
  int64_t q_ = 0;
  int64_t order_ = 0;
  Poly delta_;
  std::vector<int64_t> z_;
};

// Validates the spec (p prime, modulus irreducible, delta a generator) and
// computes the full table.  Throws Error on any violated precondition.
ZechTable build_field(const FieldSpec& spec);

struct KlPair {
  int64_t k = 0;
  int64_t l = 0;
  bool operator==(const KlPair&) const = default;
};

// k(i,j) = j - y(q-1) and l(i,j) = i - x(q-1) with x = z(j-i),
// y = x + i - j, all mod q^2-1.  Requires i != j mod (q-1).
KlPair kl_pair(const ZechTable& table, int64_t i, int64_t j);

}  // namespace ybcube
