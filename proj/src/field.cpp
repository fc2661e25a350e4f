#include "psmc/field.hpp"

#include <algorithm>

#include "psmc/errors.hpp"

namespace psmc {

namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// dense coefficient vectors, low degree first
using Poly = std::vector<uint32_t>;

size_t poly_degree(const Poly& a) {
  size_t d = a.size();
  while (d > 0 && a[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
  // p is a small prime
  uint32_t r = 1;
  uint32_t e = p - 2;
  uint64_t base = a % p;
  while (e) {
    if (e & 1) r = static_cast<uint32_t>(r * base % p);
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

// remainder of a mod b over GF(p); b must be nonzero
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
  size_t db = poly_degree(b);
  uint32_t lead_inv = mod_inv(b[db], p);
  while (!poly_is_zero(a) && poly_degree(a) >= db) {
    size_t da = poly_degree(a);
    uint32_t f = static_cast<uint32_t>(static_cast<uint64_t>(a[da]) * lead_inv % p);
    for (size_t i = 0; i <= db; ++i) {
      uint64_t sub = static_cast<uint64_t>(f) * b[i] % p;
      a[da - db + i] = static_cast<uint32_t>((a[da - db + i] + p - sub) % p);
    }
  }
  return a;
}

// irreducible over GF(p): no monic divisor of degree 1..deg/2
bool poly_irreducible(const Poly& m, uint32_t p) {
  size_t deg = poly_degree(m);
  if (deg == 0) return false;
  if (deg == 1) return true;
  if (m[0] == 0) return false;  // divisible by x
  for (size_t d = 1; 2 * d <= deg; ++d) {
    // enumerate monic divisor candidates of degree d
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t enc = 0; enc < count; ++enc) {
      Poly cand(d + 1, 0);
      uint64_t e = enc;
      for (size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<uint32_t>(e % p);
        e /= p;
      }
      cand[d] = 1;
      if (poly_is_zero(poly_mod(m, cand, p))) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(uint32_t p, uint32_t lambda, std::vector<uint32_t> modulus)
    : p_(p), lambda_(lambda), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw ValidationError("field characteristic must be prime");
  if (lambda_ < 1 || lambda_ > 16) throw ValidationError("extension degree must be in [1,16]");
  uint64_t q = 1;
  for (uint32_t i = 0; i < lambda_; ++i) {
    q *= p_;
    if (q > 65536) throw ValidationError("field order exceeds 2^16");
  }
  q_ = static_cast<uint32_t>(q);
  if (modulus_.size() != lambda_ + 1) throw ValidationError("modulus degree must equal extension degree");
  for (uint32_t c : modulus_) {
    if (c >= p_) throw ValidationError("modulus coefficient out of range");
  }
  if (modulus_[lambda_] != 1) throw ValidationError("modulus must be monic");
  if (!poly_irreducible(modulus_, p_)) throw ValidationError("modulus is reducible");

  if (q_ <= kTableLimit) {
    mul_table_.resize(static_cast<size_t>(q_) * q_);
    for (uint32_t a = 0; a < q_; ++a) {
      for (uint32_t b = 0; b <= a; ++b) {
        uint32_t m = mul_generic(a, b);
        mul_table_[static_cast<size_t>(a) * q_ + b] = m;
        mul_table_[static_cast<size_t>(b) * q_ + a] = m;
      }
    }
    inv_table_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a) {
      for (uint32_t b = 1; b < q_; ++b) {
        if (mul_table_[static_cast<size_t>(a) * q_ + b] == 1) {
          inv_table_[a] = b;
          break;
        }
      }
    }
  }
}

FieldPtr FieldSpec::make(uint32_t p, uint32_t lambda, const std::vector<uint32_t>& modulus) {
  return FieldPtr(new FieldSpec(p, lambda, modulus));
}

FieldPtr FieldSpec::make(uint32_t p, uint32_t lambda) {
  if (!is_prime(p)) throw ValidationError("field characteristic must be prime");
  if (lambda < 1 || lambda > 16) throw ValidationError("extension degree must be in [1,16]");
  // smallest monic irreducible of degree lambda, by integer encoding of the
  // non-leading coefficients
  uint64_t count = 1;
  for (uint32_t i = 0; i < lambda; ++i) count *= p;
  for (uint64_t enc = 0; enc < count; ++enc) {
    std::vector<uint32_t> cand(lambda + 1, 0);
    uint64_t e = enc;
    for (uint32_t i = 0; i < lambda; ++i) {
      cand[i] = static_cast<uint32_t>(e % p);
      e /= p;
    }
    cand[lambda] = 1;
    if (poly_irreducible(cand, p)) return FieldPtr(new FieldSpec(p, lambda, cand));
  }
  throw ValidationError("no irreducible modulus found");  // unreachable
}

uint64_t FieldSpec::modulus_encoding() const {
  uint64_t enc = 0;
  for (size_t i = modulus_.size(); i-- > 0;) enc = enc * p_ + modulus_[i];
  return enc;
}

bool FieldSpec::same_field(const FieldSpec& o) const {
  if (this == &o) return true;
  return p_ == o.p_ && lambda_ == o.lambda_ && modulus_ == o.modulus_;
}

void FieldSpec::check_element(uint32_t a) const {
  if (a >= q_) throw ValidationError("element encoding out of range");
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  uint32_t out = 0;
  uint32_t mult = 1;
  for (uint32_t i = 0; i < lambda_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

uint32_t FieldSpec::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t out = 0;
  uint32_t mult = 1;
  for (uint32_t i = 0; i < lambda_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldSpec::mul_generic(uint32_t a, uint32_t b) const {
  // convolution of digit vectors, reduced mod the modulus
  std::vector<uint32_t> da(lambda_, 0), db(lambda_, 0);
  for (uint32_t i = 0; i < lambda_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::vector<uint32_t> prod(2 * lambda_ - 1, 0);
  for (uint32_t i = 0; i < lambda_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < lambda_; ++j) {
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  prod = poly_mod(std::move(prod), modulus_, p_);
  uint32_t out = 0;
  uint32_t mult = 1;
  for (uint32_t i = 0; i < lambda_ && i < prod.size(); ++i) {
    out += prod[i] * mult;
    mult *= p_;
  }
  return out;
}

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
  return mul_generic(a, b);
}

uint32_t FieldSpec::inv(uint32_t a) const {
  if (a == 0) throw ValidationError("inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);  // a^(q-1) = 1
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t FieldSpec::digit(uint32_t value, uint32_t i) const {
  for (uint32_t k = 0; k < i; ++k) value /= p_;
  return value % p_;
}

uint32_t FieldSpec::phi_clear_constant(uint32_t a) const {
  if (p_ != 2) throw ValidationError("phi projection requires characteristic 2");
  return a & ~1u;
}

std::vector<uint32_t> FieldSpec::subspace_f() const {
  if (p_ != 2) throw ValidationError("the set F requires characteristic 2");
  std::vector<uint32_t> out;
  out.reserve(q_ / 2);
  for (uint32_t v = 0; v < q_; v += 2) out.push_back(v);
  return out;
}

FieldElement::FieldElement(const FieldSpec& spec, uint32_t value) : spec_(&spec), v_(value) {
  spec.check_element(value);
}

namespace {
const FieldSpec& common_spec(const FieldElement& a, const FieldElement& b) {
  if (!a.spec().same_field(b.spec())) throw ValidationError("elements from different fields");
  return a.spec();
}
}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  const FieldSpec& s = common_spec(a, b);
  return FieldElement(s, s.add(a.value(), b.value()));
}

FieldElement operator-(FieldElement a, FieldElement b) {
  const FieldSpec& s = common_spec(a, b);
  return FieldElement(s, s.sub(a.value(), b.value()));
}

FieldElement operator*(FieldElement a, FieldElement b) {
  const FieldSpec& s = common_spec(a, b);
  return FieldElement(s, s.mul(a.value(), b.value()));
}

FieldElement FieldElement::operator-() const { return FieldElement(*spec_, spec_->neg(v_)); }

FieldElement FieldElement::inverse() const { return FieldElement(*spec_, spec_->inv(v_)); }

FieldElement FieldElement::pow(uint64_t e) const { return FieldElement(*spec_, spec_->pow(v_, e)); }

bool operator==(FieldElement a, FieldElement b) {
  common_spec(a, b);
  return a.value() == b.value();
}

bool is_base_subfield(FieldElement a) { return a.spec().in_base_subfield(a.value()); }

FieldElement phi_project(FieldElement a) {
  return FieldElement(a.spec(), a.spec().phi_clear_constant(a.value()));
}

std::vector<FieldElement> enumerate_f(const FieldPtr& spec) {
  std::vector<FieldElement> out;
  for (uint32_t v : spec->subspace_f()) out.emplace_back(*spec, v);
  return out;
}

}  // namespace psmc
