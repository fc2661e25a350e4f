#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psmc {

// Arbitrary-precision unsigned integer, little-endian 32-bit limbs.
// Sized for exact bound evaluation (values around q^n for n <= a few hundred);
// all operations are plain schoolbook, which is more than fast enough here.
class BigUint {
 public:
  BigUint() = default;
  BigUint(uint64_t v);  // NOLINT(google-explicit-constructor)

  static BigUint from_decimal(const std::string& digits);
  static BigUint pow(const BigUint& base, uint64_t exp);
  static BigUint binomial(uint64_t n, uint64_t k);

  bool is_zero() const { return limbs_.empty(); }
  size_t bit_length() const;

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // requires *this >= o
  BigUint& operator*=(const BigUint& o);
  BigUint& mul_small(uint32_t m);
  uint32_t divmod_small(uint32_t d);  // in-place quotient, returns remainder

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

  // floor(a / b) and a mod b
  static std::pair<BigUint, BigUint> divmod(const BigUint& a, const BigUint& b);

  int compare(const BigUint& o) const;
  friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

  std::string to_string() const;
  uint64_t to_u64() const;  // throws ValidationError if it does not fit
  double log2d() const;     // -inf for zero

 private:
  void normalize();
  bool bit(size_t i) const;
  void set_bit(size_t i);
  void shift_left_one();

  std::vector<uint32_t> limbs_;
};

}  // namespace psmc
