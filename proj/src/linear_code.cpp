#include "psmc/linear_code.hpp"

#include <algorithm>
#include <string>

#include "psmc/bigint.hpp"
#include "psmc/errors.hpp"

namespace psmc {

LinearCode::LinearCode(MatrixF generator, MatrixF parity_check)
    : generator_(std::move(generator)),
      parity_check_(std::move(parity_check)),
      parity_check_t_(parity_check_.transposed()) {}

LinearCode LinearCode::from_generator(MatrixF generator) {
  if (rank(generator) != generator.rows()) throw ValidationError("generator matrix is not full rank");
  MatrixF h = kernel(generator);
  return LinearCode(std::move(generator), std::move(h));
}

LinearCode LinearCode::from_parity_check(MatrixF parity_check) {
  if (rank(parity_check) != parity_check.rows()) {
    throw ValidationError("parity-check matrix is not full rank");
  }
  MatrixF g = kernel(parity_check);
  return LinearCode(std::move(g), std::move(parity_check));
}

LinearCode LinearCode::from_both(MatrixF generator, MatrixF parity_check) {
  if (generator.cols() != parity_check.cols()) throw ValidationError("generator/parity length mismatch");
  if (rank(generator) != generator.rows()) throw ValidationError("generator matrix is not full rank");
  if (rank(parity_check) != parity_check.rows()) {
    throw ValidationError("parity-check matrix is not full rank");
  }
  if (generator.rows() + parity_check.rows() != generator.cols()) {
    throw ValidationError("generator and parity-check dimensions are inconsistent");
  }
  MatrixF prod = mat_mul(generator, parity_check.transposed());
  for (size_t r = 0; r < prod.rows(); ++r) {
    for (size_t c = 0; c < prod.cols(); ++c) {
      if (prod.at(r, c) != 0) throw ValidationError("generator * parity_check^T != 0");
    }
  }
  return LinearCode(std::move(generator), std::move(parity_check));
}

VectorF LinearCode::syndrome(const VectorF& word) const { return vec_mat_mul(word, parity_check_t_); }

bool LinearCode::contains(const VectorF& word) const { return syndrome(word).hamming_weight() == 0; }

VectorF encode_linear(const VectorF& message, const LinearCode& code) {
  if (message.size() != code.dimension()) throw ValidationError("message length != code dimension");
  return vec_mat_mul(message, code.generator());
}

size_t min_distance(const LinearCode& code, uint64_t budget) {
  const FieldSpec& f = *code.spec();
  uint32_t q = f.order();
  size_t k = code.dimension();
  size_t n = code.length();
  if (k == 0) throw ValidationError("minimum distance undefined for the zero code");

  BigUint total = BigUint::pow(BigUint{q}, k);
  if (total > BigUint{budget}) {
    throw BudgetExceeded(
        "q^k codeword sweep exceeds the exhaustive budget; use the "
        "parity-check column-independence certificate instead");
  }
  uint64_t steps = total.to_u64();

  const MatrixF& g = code.generator();
  std::vector<uint32_t> digits(k, 0);
  std::vector<uint32_t> cw(n, 0);
  size_t best = n + 1;
  for (uint64_t step = 1; step < steps; ++step) {
    // mixed-radix odometer; amortized O(1) digit changes per message
    for (size_t i = 0;; ++i) {
      uint32_t old = digits[i];
      uint32_t next = old + 1 == q ? 0 : old + 1;
      digits[i] = next;
      uint32_t delta = f.sub(next, old);
      for (size_t c = 0; c < n; ++c) cw[c] = f.add(cw[c], f.mul(delta, g.at(i, c)));
      if (next != 0) break;
    }
    size_t w = 0;
    for (uint32_t x : cw) w += (x != 0);
    if (w < best) best = w;
  }
  return best;
}

bool contains_all_one(const LinearCode& code) {
  const FieldSpec& f = *code.spec();
  // equivalent to parity_check * 1^T = 0: every parity row sums to zero
  const MatrixF& h = code.parity_check();
  for (size_t r = 0; r < h.rows(); ++r) {
    uint32_t s = 0;
    for (size_t c = 0; c < h.cols(); ++c) s = f.add(s, h.at(r, c));
    if (s != 0) return false;
  }
  return true;
}

LinearCode dual(const LinearCode& code) {
  return LinearCode::from_both(code.parity_check(), code.generator());
}

namespace {
std::string make_key(const VectorF& s) {
  std::string key;
  key.reserve(s.size() * 2);
  for (uint32_t x : s.v) {
    key.push_back(static_cast<char>(x & 0xff));
    key.push_back(static_cast<char>((x >> 8) & 0xff));
  }
  return key;
}
}  // namespace

SyndromeDecoder::SyndromeDecoder(const LinearCode& code, size_t t, uint64_t budget)
    : code_(code), t_(t) {
  const FieldSpec& f = *code_.spec();
  uint32_t q = f.order();
  size_t n = code_.length();
  if (t > n) throw ValidationError("decoding radius exceeds code length");

  BigUint count{0};
  for (size_t j = 0; j <= t; ++j) {
    count += BigUint::binomial(n, j) * BigUint::pow(BigUint{q - 1}, j);
  }
  if (count > BigUint{budget}) throw BudgetExceeded("syndrome table exceeds the exhaustive budget");

  // enumerate every error pattern of weight j <= t
  for (size_t j = 0; j <= t; ++j) {
    std::vector<size_t> pos(j);
    for (size_t i = 0; i < j; ++i) pos[i] = i;
    bool more = (j <= n);
    while (more) {
      std::vector<uint32_t> vals(j, 1);
      while (true) {
        VectorF e(code_.spec(), n);
        Pattern pat;
        pat.reserve(j);
        for (size_t i = 0; i < j; ++i) {
          e.v[pos[i]] = vals[i];
          pat.emplace_back(pos[i], vals[i]);
        }
        std::string key = make_key(code_.syndrome(e));
        auto [it, inserted] = table_.emplace(std::move(key), pat);
        if (!inserted && it->second != pat) {
          throw ValidationError(
              "syndrome collision: two error patterns of weight <= t share a "
              "syndrome, so the minimum distance is below 2t+1");
        }
        // next nonzero value tuple
        size_t i = 0;
        for (; i < j; ++i) {
          if (vals[i] + 1 < q) {
            ++vals[i];
            break;
          }
          vals[i] = 1;
        }
        if (i == j) break;
      }
      // next combination of positions
      if (j == 0) break;
      size_t i = j;
      while (i-- > 0) {
        if (pos[i] + 1 <= n - (j - i)) {
          ++pos[i];
          for (size_t k2 = i + 1; k2 < j; ++k2) pos[k2] = pos[k2 - 1] + 1;
          break;
        }
        if (i == 0) {
          more = false;
          break;
        }
      }
    }
  }
}

std::optional<VectorF> SyndromeDecoder::decode(const VectorF& received) const {
  if (received.size() != code_.length()) throw ValidationError("received word has wrong length");
  VectorF s = code_.syndrome(received);
  if (s.hamming_weight() == 0) return received;
  auto it = table_.find(make_key(s));
  if (it == table_.end()) return std::nullopt;
  const FieldSpec& f = *code_.spec();
  VectorF out = received;
  for (const auto& [p, val] : it->second) out.v[p] = f.sub(out.v[p], val);
  return out;
}

std::optional<VectorF> syndrome_decode(const VectorF& received, const LinearCode& code, size_t t,
                                       uint64_t budget) {
  SyndromeDecoder dec(code, t, budget);
  return dec.decode(received);
}

}  // namespace psmc
