#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psmc/error_model.hpp"
#include "psmc/matrix.hpp"
#include "psmc/rng.hpp"
#include "psmc/scheme.hpp"

namespace psmc {

// u distinct positions, uniform without replacement, all at the given level
StuckProfile sample_stuck(size_t n, size_t u, uint32_t level, uint64_t seed);
StuckProfile sample_stuck(size_t n, size_t u, uint32_t level, SplitMix64& rng);

// Exactly t_actual coordinates change.  Non-overlapping errors avoid stuck
// cells; overlapping errors may hit them but draw the new value from the
// admissible levels [s, q-1] minus the original.
VectorF inject_errors(const VectorF& word, size_t t_actual, ErrorModel model,
                      const StuckProfile& phi, uint64_t seed);
VectorF inject_errors(const VectorF& word, size_t t_actual, ErrorModel model,
                      const StuckProfile& phi, SplitMix64& rng);

// Anything the trial harness can exercise: sample a message, encode under a
// stuck profile, decode.  Messages travel as flat encoding vectors.
class PsmcCodec {
 public:
  virtual ~PsmcCodec() = default;
  virtual const FieldPtr& spec() const = 0;
  virtual size_t word_length() const = 0;
  virtual size_t max_stuck() const = 0;
  virtual size_t max_errors() const = 0;
  virtual std::vector<uint32_t> sample_message(SplitMix64& rng) const = 0;
  virtual VectorF encode(const std::vector<uint32_t>& message, const StuckProfile& phi) const = 0;
  virtual std::optional<std::vector<uint32_t>> decode(const VectorF& received) const = 0;
};

// message layout: k1 symbols of m, then l symbols of m'
class Construction1Codec : public PsmcCodec {
 public:
  explicit Construction1Codec(const PsmcScheme& scheme) : scheme_(&scheme) {}
  const FieldPtr& spec() const override { return scheme_->spec(); }
  size_t word_length() const override { return scheme_->n() + 1; }
  size_t max_stuck() const override { return scheme_->u(); }
  size_t max_errors() const override { return scheme_->t(); }
  std::vector<uint32_t> sample_message(SplitMix64& rng) const override;
  VectorF encode(const std::vector<uint32_t>& message, const StuckProfile& phi) const override;
  std::optional<std::vector<uint32_t>> decode(const VectorF& received) const override;

 private:
  const PsmcScheme* scheme_;
};

class AllOneCodec : public PsmcCodec {
 public:
  AllOneCodec(const AllOnePsmc& scheme, size_t max_stuck)
      : scheme_(&scheme), max_stuck_(max_stuck) {}
  const FieldPtr& spec() const override { return scheme_->code().spec(); }
  size_t word_length() const override { return scheme_->length(); }
  size_t max_stuck() const override { return max_stuck_; }
  size_t max_errors() const override { return scheme_->radius(); }
  std::vector<uint32_t> sample_message(SplitMix64& rng) const override;
  VectorF encode(const std::vector<uint32_t>& message, const StuckProfile& phi) const override;
  std::optional<std::vector<uint32_t>> decode(const VectorF& received) const override;

 private:
  const AllOnePsmc* scheme_;
  size_t max_stuck_;
};

struct TrialReport {
  uint64_t trials = 0;
  size_t t_actual = 0;
  ErrorModel model = ErrorModel::kNonOverlapping;
  uint64_t seed = 0;
  uint64_t masking_violations = 0;
  uint64_t decode_failures = 0;
  uint64_t message_mismatches = 0;

  static const char* csv_header();
  std::string csv_row() const;
};

// Per trial: sample message and stuck profile, encode, check masking, inject
// exactly t_actual errors, decode, compare.  A trial lands in at most one
// failure class, checked in that order.
TrialReport run_trials(const PsmcCodec& codec, uint64_t trials, size_t t_actual, ErrorModel model,
                       uint64_t seed);

}  // namespace psmc
