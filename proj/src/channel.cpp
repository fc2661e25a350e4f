#include "psmc/channel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "psmc/errors.hpp"

namespace psmc {

StuckProfile sample_stuck(size_t n, size_t u, uint32_t level, SplitMix64& rng) {
  if (u > n) throw ValidationError("cannot have more stuck cells than cells");
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  for (size_t i = 0; i < u; ++i) {
    size_t j = i + static_cast<size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<size_t> positions(idx.begin(), idx.begin() + u);
  std::sort(positions.begin(), positions.end());
  return StuckProfile::uniform(n, std::move(positions), level);
}

StuckProfile sample_stuck(size_t n, size_t u, uint32_t level, uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_stuck(n, u, level, rng);
}

VectorF inject_errors(const VectorF& word, size_t t_actual, ErrorModel model,
                      const StuckProfile& phi, SplitMix64& rng) {
  const FieldSpec& f = *word.spec;
  uint32_t q = f.order();
  if (phi.cell_count != word.size()) throw ValidationError("stuck profile does not match word length");
  for (uint32_t s : phi.levels) {
    if (s >= q) throw ValidationError("stuck level out of range for the field");
  }

  std::vector<uint32_t> level_at(word.size(), 0);
  for (size_t i = 0; i < phi.count(); ++i) level_at[phi.positions[i]] = phi.levels[i];

  // positions where a substitute value exists under the model
  std::vector<size_t> usable;
  for (size_t pos = 0; pos < word.size(); ++pos) {
    uint32_t s = level_at[pos];
    if (s == 0) {
      usable.push_back(pos);
    } else if (model == ErrorModel::kOverlapping && s <= q - 2) {
      usable.push_back(pos);
    }
  }
  if (t_actual > usable.size()) {
    throw ValidationError("not enough positions admit an error of the requested weight");
  }

  for (size_t i = 0; i < t_actual; ++i) {
    size_t j = i + static_cast<size_t>(rng.below(usable.size() - i));
    std::swap(usable[i], usable[j]);
  }

  VectorF out = word;
  for (size_t i = 0; i < t_actual; ++i) {
    size_t pos = usable[i];
    uint32_t s = level_at[pos];
    uint32_t orig = out.v[pos];
    uint32_t next;
    if (s == 0) {
      uint32_t r = static_cast<uint32_t>(rng.below(q - 1));
      next = r >= orig ? r + 1 : r;
    } else if (orig < s) {
      next = s + static_cast<uint32_t>(rng.below(q - s));
    } else {
      uint32_t r = static_cast<uint32_t>(rng.below(q - s - 1));
      next = s + r;
      if (next >= orig) ++next;
    }
    out.v[pos] = next;
  }
  return out;
}

VectorF inject_errors(const VectorF& word, size_t t_actual, ErrorModel model,
                      const StuckProfile& phi, uint64_t seed) {
  SplitMix64 rng(seed);
  return inject_errors(word, t_actual, model, phi, rng);
}

std::vector<uint32_t> Construction1Codec::sample_message(SplitMix64& rng) const {
  uint32_t q = scheme_->spec()->order();
  std::vector<uint32_t> msg(scheme_->k1() + scheme_->l());
  for (size_t i = 0; i < scheme_->k1(); ++i) msg[i] = static_cast<uint32_t>(rng.below(q));
  for (size_t i = 0; i < scheme_->l(); ++i) {
    msg[scheme_->k1() + i] = 2 * static_cast<uint32_t>(rng.below(q / 2));  // a_0 = 0
  }
  return msg;
}

VectorF Construction1Codec::encode(const std::vector<uint32_t>& message,
                                   const StuckProfile& phi) const {
  if (message.size() != scheme_->k1() + scheme_->l()) throw ValidationError("bad message length");
  VectorF m(scheme_->spec(), std::vector<uint32_t>(message.begin(), message.begin() + scheme_->k1()));
  VectorF mp(scheme_->spec(), std::vector<uint32_t>(message.begin() + scheme_->k1(), message.end()));
  return scheme_->encode(m, mp, phi);
}

std::optional<std::vector<uint32_t>> Construction1Codec::decode(const VectorF& received) const {
  auto dec = scheme_->decode(received);
  if (!dec) return std::nullopt;
  std::vector<uint32_t> msg;
  msg.reserve(scheme_->k1() + scheme_->l());
  msg.insert(msg.end(), dec->m.v.begin(), dec->m.v.end());
  msg.insert(msg.end(), dec->m_prime.v.begin(), dec->m_prime.v.end());
  return msg;
}

std::vector<uint32_t> AllOneCodec::sample_message(SplitMix64& rng) const {
  uint32_t q = scheme_->code().spec()->order();
  std::vector<uint32_t> msg(scheme_->message_length());
  for (auto& x : msg) x = static_cast<uint32_t>(rng.below(q));
  return msg;
}

VectorF AllOneCodec::encode(const std::vector<uint32_t>& message, const StuckProfile& phi) const {
  return scheme_->encode(VectorF(scheme_->code().spec(), message), phi);
}

std::optional<std::vector<uint32_t>> AllOneCodec::decode(const VectorF& received) const {
  auto dec = scheme_->decode(received);
  if (!dec) return std::nullopt;
  return dec->v;
}

const char* TrialReport::csv_header() {
  return "trials,t_actual,model,seed,masking_violations,decode_failures,message_mismatches";
}

std::string TrialReport::csv_row() const {
  std::ostringstream out;
  out << trials << ',' << t_actual << ',' << to_string(model) << ',' << seed << ','
      << masking_violations << ',' << decode_failures << ',' << message_mismatches;
  return out.str();
}

TrialReport run_trials(const PsmcCodec& codec, uint64_t trials, size_t t_actual, ErrorModel model,
                       uint64_t seed) {
  TrialReport report;
  report.trials = trials;
  report.t_actual = t_actual;
  report.model = model;
  report.seed = seed;

  for (uint64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_stream_seed(seed, trial));
    std::vector<uint32_t> message = codec.sample_message(rng);
    StuckProfile phi = sample_stuck(codec.word_length(), codec.max_stuck(), 1, rng);
    VectorF sent = codec.encode(message, phi);

    bool masked = true;
    for (size_t i = 0; i < phi.count(); ++i) {
      if (sent.v[phi.positions[i]] < phi.levels[i]) masked = false;
    }
    if (!masked) {
      ++report.masking_violations;
      continue;
    }

    VectorF received = inject_errors(sent, t_actual, model, phi, rng);
    auto decoded = codec.decode(received);
    if (!decoded) {
      ++report.decode_failures;
      continue;
    }
    if (*decoded != message) ++report.message_mismatches;
  }
  return report;
}

}  // namespace psmc
