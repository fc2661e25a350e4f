#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "psmc/matrix.hpp"

namespace psmc {

inline constexpr uint64_t kDefaultExhaustiveBudget = uint64_t{1} << 24;

// [n, k] linear block code held as a generator and a parity-check matrix
// (either can be supplied, the other is derived).  Immutable.
class LinearCode {
 public:
  static LinearCode from_generator(MatrixF generator);
  static LinearCode from_parity_check(MatrixF parity_check);
  static LinearCode from_both(MatrixF generator, MatrixF parity_check);

  const FieldPtr& spec() const { return generator_.spec(); }
  size_t length() const { return generator_.cols(); }
  size_t dimension() const { return generator_.rows(); }
  const MatrixF& generator() const { return generator_; }
  const MatrixF& parity_check() const { return parity_check_; }

  bool contains(const VectorF& word) const;  // zero syndrome
  VectorF syndrome(const VectorF& word) const;

 private:
  LinearCode(MatrixF generator, MatrixF parity_check);
  MatrixF generator_;
  MatrixF parity_check_;
  MatrixF parity_check_t_;  // cached transpose for syndrome computation
};

VectorF encode_linear(const VectorF& message, const LinearCode& code);

// exhaustive minimum Hamming weight over all nonzero codewords;
// throws BudgetExceeded when q^k exceeds the budget
size_t min_distance(const LinearCode& code, uint64_t budget = kDefaultExhaustiveBudget);

bool contains_all_one(const LinearCode& code);

LinearCode dual(const LinearCode& code);

// Bounded-distance decoder: a table from syndromes to the unique error
// pattern of weight <= t.  A collision between two patterns would contradict
// d >= 2t+1, so table construction doubles as a distance certificate.
class SyndromeDecoder {
 public:
  SyndromeDecoder(const LinearCode& code, size_t t, uint64_t budget = kDefaultExhaustiveBudget);

  size_t radius() const { return t_; }
  // nearest codeword within distance t, or nullopt (decoding failure)
  std::optional<VectorF> decode(const VectorF& received) const;

 private:
  using Pattern = std::vector<std::pair<size_t, uint32_t>>;  // (position, value)

  LinearCode code_;
  size_t t_;
  std::unordered_map<std::string, Pattern> table_;
};

// convenience wrapper building a fresh table per call
std::optional<VectorF> syndrome_decode(const VectorF& received, const LinearCode& code, size_t t,
                                       uint64_t budget = kDefaultExhaustiveBudget);

}  // namespace psmc
