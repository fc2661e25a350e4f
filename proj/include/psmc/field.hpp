#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace psmc {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// GF(p^lambda) in polynomial-basis integer encoding: the base-p digits of an
// element's encoding (least significant first) are its coefficients over the
// basis x^0, ..., x^(lambda-1).  Immutable after construction; arithmetic on
// raw encodings lives here, the FieldElement wrapper adds spec checking.
class FieldSpec {
 public:
  // Canonical modulus: the monic irreducible of degree lambda over GF(p)
  // with the smallest integer encoding.
  static FieldPtr make(uint32_t p, uint32_t lambda);
  // Explicit modulus given as coefficients a_0..a_lambda (monic, irreducible).
  static FieldPtr make(uint32_t p, uint32_t lambda, const std::vector<uint32_t>& modulus);

  uint32_t characteristic() const { return p_; }
  uint32_t extension_degree() const { return lambda_; }
  uint32_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  uint64_t modulus_encoding() const;

  bool same_field(const FieldSpec& o) const;

  // arithmetic on encodings in [0, q)
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // a != 0
  uint32_t pow(uint32_t a, uint64_t e) const;

  uint32_t digit(uint32_t value, uint32_t i) const;

  // a_1 = ... = a_{lambda-1} = 0, i.e. the element lies in the base subfield
  bool in_base_subfield(uint32_t a) const { return a < p_; }

  // zero out the constant coefficient a_0 (characteristic 2 only)
  uint32_t phi_clear_constant(uint32_t a) const;

  // the set F = { a : a_0 = 0 } of size 2^(lambda-1) (characteristic 2 only)
  std::vector<uint32_t> subspace_f() const;

  void check_element(uint32_t a) const;

 private:
  FieldSpec(uint32_t p, uint32_t lambda, std::vector<uint32_t> modulus);

  uint32_t mul_generic(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0;
  uint32_t lambda_ = 0;
  uint32_t q_ = 0;
  std::vector<uint32_t> modulus_;       // coefficients a_0..a_lambda, monic
  std::vector<uint32_t> mul_table_;     // q*q, built for q <= kTableLimit
  std::vector<uint32_t> inv_table_;
  static constexpr uint32_t kTableLimit = 256;
};

// An element with its owning field; lightweight view, the FieldSpec must
// outlive it (normally it is kept alive by a shared_ptr in the container).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldSpec& spec, uint32_t value);

  uint32_t value() const { return v_; }
  const FieldSpec& spec() const { return *spec_; }
  bool is_zero() const { return v_ == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(uint64_t e) const;
  friend bool operator==(FieldElement a, FieldElement b);
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  const FieldSpec* spec_ = nullptr;
  uint32_t v_ = 0;
};

bool is_base_subfield(FieldElement a);
FieldElement phi_project(FieldElement a);
std::vector<FieldElement> enumerate_f(const FieldPtr& spec);

}  // namespace psmc
