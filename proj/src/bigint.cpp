#include "psmc/bigint.hpp"

#include <cmath>
#include <limits>

#include "psmc/errors.hpp"

namespace psmc {

BigUint::BigUint(uint64_t v) {
  while (v) {
    limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
}

void BigUint::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUint::bit(size_t i) const {
  size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigUint::set_bit(size_t i) {
  size_t limb = i / 32;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] |= (1u << (i % 32));
}

void BigUint::shift_left_one() {
  uint32_t carry = 0;
  for (auto& l : limbs_) {
    uint32_t next = l >> 31;
    l = (l << 1) | carry;
    carry = next;
  }
  if (carry) limbs_.push_back(carry);
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (compare(o) < 0) throw ValidationError("BigUint subtraction underflow");
  int64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    int64_t d = static_cast<int64_t>(limbs_[i]) - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0);
    if (d < 0) {
      d += (int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<uint32_t>(d);
  }
  normalize();
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& o) {
  if (is_zero() || o.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < o.limbs_.size(); ++j) {
      uint64_t cur = out[i + j] + static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
      out[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + o.limbs_.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  limbs_ = std::move(out);
  normalize();
  return *this;
}

BigUint& BigUint::mul_small(uint32_t m) {
  uint64_t carry = 0;
  for (auto& l : limbs_) {
    uint64_t cur = static_cast<uint64_t>(l) * m + carry;
    l = static_cast<uint32_t>(cur);
    carry = cur >> 32;
  }
  while (carry) {
    limbs_.push_back(static_cast<uint32_t>(carry));
    carry >>= 32;
  }
  normalize();
  return *this;
}

uint32_t BigUint::divmod_small(uint32_t d) {
  if (d == 0) throw ValidationError("BigUint division by zero");
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  normalize();
  return static_cast<uint32_t>(rem);
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& a, const BigUint& b) {
  if (b.is_zero()) throw ValidationError("BigUint division by zero");
  if (a.compare(b) < 0) return {BigUint{}, a};
  BigUint q, r;
  for (size_t i = a.bit_length(); i-- > 0;) {
    r.shift_left_one();
    if (a.bit(i)) {
      if (r.limbs_.empty()) r.limbs_.push_back(0);
      r.limbs_[0] |= 1u;
    }
    if (r.compare(b) >= 0) {
      r -= b;
      q.set_bit(i);
    }
  }
  q.normalize();
  r.normalize();
  return {q, r};
}

BigUint BigUint::pow(const BigUint& base, uint64_t exp) {
  BigUint result{1};
  BigUint b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

BigUint BigUint::binomial(uint64_t n, uint64_t k) {
  if (k > n) return BigUint{};
  if (k > n - k) k = n - k;
  BigUint c{1};
  for (uint64_t i = 0; i < k; ++i) {
    // exact at every step: c * (n-i) is divisible by (i+1)
    c *= BigUint{n - i};
    uint32_t rem = c.divmod_small(static_cast<uint32_t>(i + 1));
    if (rem != 0) throw ValidationError("binomial internal error");
  }
  return c;
}

BigUint BigUint::from_decimal(const std::string& digits) {
  if (digits.empty()) throw ValidationError("empty decimal string");
  BigUint v;
  for (char c : digits) {
    if (c < '0' || c > '9') throw ValidationError("bad decimal digit");
    v.mul_small(10);
    v += BigUint{static_cast<uint64_t>(c - '0')};
  }
  return v;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    uint32_t chunk = tmp.divmod_small(1000000000u);
    std::string part = std::to_string(chunk);
    if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
    out.insert(0, part);
  }
  return out;
}

uint64_t BigUint::to_u64() const {
  if (limbs_.size() > 2) throw ValidationError("BigUint does not fit in 64 bits");
  uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

double BigUint::log2d() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  // top 64 bits as mantissa, remainder as exponent
  size_t bits = bit_length();
  uint64_t top = 0;
  size_t take = bits < 64 ? bits : 64;
  for (size_t i = 0; i < take; ++i) {
    if (bit(bits - 1 - i)) top |= (uint64_t{1} << (take - 1 - i));
  }
  return std::log2(static_cast<double>(top)) + static_cast<double>(bits - take);
}

}  // namespace psmc
