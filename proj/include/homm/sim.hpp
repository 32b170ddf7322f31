#pragma once

// Pauli-frame Monte Carlo of the measurement protocols under
// phenomenological noise. CSS circuits made of CNOTs and Z-basis
// measurements never mix X and Z frame components, so tracking the two
// bit vectors per block simulates the protocols exactly.
//
// Readout model: measuring the ancilla block prepared in logical |0..0>
// yields a uniformly random X-stabilizer codeword, XORed with the
// accumulated ancilla X frame and with per-bit measurement flips. The
// classical decode corrects that string against H_Z'; each measured
// generator's bit is the parity of the corrected string on its
// ancilla-side kernel vector.
//
// Ground truth per generator is the logical value carried by the data
// block: the X frame reduced by an ideal decode of its H_Z syndrome,
// paired with the generator's data-block support. Correctable data X
// errors therefore do not flip the truth; they propagate into the
// readout string, where they act exactly like measurement errors and
// get removed by the classical decode. A trial counts as a readout
// error when a reported bit differs from that truth.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "homm/decoder.hpp"
#include "homm/errors.hpp"
#include "homm/f2.hpp"
#include "homm/gadget.hpp"

namespace homm {

struct PauliFrame {
  f2::BitVec x;
  f2::BitVec z;
};

inline PauliFrame make_frame(std::size_t n) { return PauliFrame{f2::BitVec(n), f2::BitVec(n)}; }

// X propagates control -> target, Z propagates target -> control.
inline std::pair<PauliFrame, PauliFrame> apply_interaction(const f2::BitMatrix& gamma,
                                                           PauliFrame data, PauliFrame anc) {
  if (gamma.rows() != data.x.size() || gamma.cols() != anc.x.size())
    throw DimensionMismatch("apply_interaction: frame sizes do not match the gate matrix");
  anc.x ^= gamma.transpose().mul(data.x);
  data.z ^= gamma.mul(anc.z);
  return {std::move(data), std::move(anc)};
}

struct NoiseModel {
  double p_data = 0.0;          // X and Z flip rate per data qubit before interaction
  double p_anc_residual = 0.0;  // X flip rate per prepared ancilla qubit
  double p_meas = 0.0;          // per-bit readout flip rate
  std::uint64_t seed = 0;

  void check() const {
    for (double p : {p_data, p_anc_residual, p_meas})
      if (p < 0.0 || p > 1.0) throw std::invalid_argument("NoiseModel: probability outside [0,1]");
  }
};

namespace rng {

// splitmix64 of (seed, stream): every trial owns an independent
// generator, so results do not depend on execution order.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline double uniform(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline f2::BitVec bernoulli_vec(std::mt19937_64& g, std::size_t n, double p) {
  f2::BitVec v(n);
  if (p <= 0.0) return v;
  for (std::size_t i = 0; i < n; ++i)
    if (uniform(g) < p) v.set(i);
  return v;
}

}  // namespace rng

struct BinomialStat {
  std::uint64_t trials = 0;
  std::uint64_t count = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
};

// 95% Wilson score interval.
inline BinomialStat binomial_stat(std::uint64_t trials, std::uint64_t count) {
  BinomialStat s;
  s.trials = trials;
  s.count = count;
  if (trials == 0) return s;
  const double z = 1.959963984540054;
  double n = static_cast<double>(trials);
  double p = static_cast<double>(count) / n;
  s.rate = p;
  double denom = 1.0 + z * z / n;
  double center = (p + z * z / (2 * n)) / denom;
  double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  s.ci_low = std::max(0.0, center - half);
  s.ci_high = std::min(1.0, center + half);
  return s;
}

struct MeasurementResult {
  f2::BitVec logical_outcomes;  // one bit per measured-group generator
  f2::BitVec check_syndrome;    // H_Z' applied to the raw readout
  f2::BitVec corrected_readout;
};

struct RunStats {
  std::uint64_t trials = 0;
  std::uint64_t readout_errors = 0;
  std::uint64_t data_errors = 0;
  BinomialStat readout;
  BinomialStat data;
  std::uint64_t seed = 0;
};

class HomomorphicSimulator {
 public:
  explicit HomomorphicSimulator(HomGadget gadget, DecoderMode mode = DecoderMode::Exact)
      : g_(std::move(gadget)),
        mode_(mode),
        mg_(measured_group(g_)),
        gamma_t_(g_.gamma.transpose()),
        anc_decoder_(DecodingGraph::from_checks(g_.ancilla.h_z)),
        z_stab_(g_.data.h_z) {
    if (mg_.rank == 0)
      throw std::invalid_argument("HomomorphicSimulator: gadget measures no logical operator");
    auto rr = f2::rref(g_.ancilla.h_x);
    for (std::size_t i = 0; i < rr.rank; ++i) codeword_basis_.push_back(rr.reduced.row(i));
    auto matchable = [this](const f2::BitMatrix& checks) {
      for (std::size_t q = 0; q < g_.data.n; ++q)
        if (checks.col(q).weight() > 2) return false;
      return true;
    };
    if (matchable(g_.data.h_x)) data_z_decoder_.emplace(DecodingGraph::from_checks(g_.data.h_x));
    if (matchable(g_.data.h_z)) data_x_decoder_.emplace(DecodingGraph::from_checks(g_.data.h_z));
  }

  const HomGadget& gadget() const { return g_; }
  const MeasuredGroup& measured() const { return mg_; }

  MeasurementResult readout_ancilla(const PauliFrame& anc, double p_meas,
                                    std::mt19937_64& eng) const {
    f2::BitVec word(g_.ancilla.n);
    for (const auto& row : codeword_basis_)
      if (eng() & 1) word ^= row;
    f2::BitVec readout = word ^ anc.x ^ rng::bernoulli_vec(eng, g_.ancilla.n, p_meas);
    f2::BitVec syndrome = g_.ancilla.h_z.mul(readout);
    f2::BitVec correction = anc_decoder_.decode(syndrome, mode_);
    if (g_.ancilla.h_z.mul(correction) != syndrome)
      throw std::logic_error("readout_ancilla: correction does not reproduce the syndrome");
    MeasurementResult res;
    res.check_syndrome = syndrome;
    res.corrected_readout = readout ^ correction;
    res.logical_outcomes = f2::BitVec(mg_.rank);
    for (std::size_t i = 0; i < mg_.rank; ++i)
      if (mg_.anc_kernel.row(i).dot(res.corrected_readout)) res.logical_outcomes.set(i);
    return res;
  }

  struct Trial {
    bool readout_error = false;
    bool data_error = false;
    MeasurementResult result;
    PauliFrame residual_data;
  };

  Trial run_trial(const NoiseModel& noise, std::uint64_t index) const {
    std::mt19937_64 eng(rng::mix(noise.seed, index));
    PauliFrame data{rng::bernoulli_vec(eng, g_.data.n, noise.p_data),
                    rng::bernoulli_vec(eng, g_.data.n, noise.p_data)};
    PauliFrame anc{rng::bernoulli_vec(eng, g_.ancilla.n, noise.p_anc_residual),
                   f2::BitVec(g_.ancilla.n)};
    anc.x ^= gamma_t_.mul(data.x);
    data.z ^= g_.gamma.mul(anc.z);

    Trial trial;
    trial.result = readout_ancilla(anc, noise.p_meas, eng);
    f2::BitVec data_x_class = data.x;
    if (data_x_decoder_) {
      // ideal reference decode of the data X frame; exact mode always
      f2::BitVec defects = g_.data.h_z.mul(data.x);
      data_x_class ^= data_x_decoder_->decode(defects, DecoderMode::Exact);
    }
    for (std::size_t i = 0; i < mg_.rank; ++i) {
      bool truth = mg_.basis.row(i).dot(data_x_class);
      if (trial.result.logical_outcomes.get(i) != truth) trial.readout_error = true;
    }

    if (data_z_decoder_) {
      f2::BitVec defects = g_.data.h_x.mul(data.z);
      f2::BitVec correction = data_z_decoder_->decode(defects, mode_);
      if (g_.data.h_x.mul(correction) != defects)
        throw std::logic_error("run_trial: data correction does not reproduce the syndrome");
      trial.data_error = !z_stab_.contains(data.z ^ correction);
    } else {
      trial.data_error = !data.z.zero() && !z_stab_.contains(data.z);
    }
    trial.residual_data = std::move(data);
    return trial;
  }

  RunStats run(const NoiseModel& noise, std::uint64_t trials) const {
    noise.check();
    RunStats stats;
    stats.trials = trials;
    stats.seed = noise.seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
      auto trial = run_trial(noise, t);
      if (trial.readout_error) ++stats.readout_errors;
      if (trial.data_error) ++stats.data_errors;
    }
    stats.readout = binomial_stat(stats.trials, stats.readout_errors);
    stats.data = binomial_stat(stats.trials, stats.data_errors);
    return stats;
  }

 private:
  HomGadget g_;
  DecoderMode mode_;
  MeasuredGroup mg_;
  f2::BitMatrix gamma_t_;
  MatchingDecoder anc_decoder_;
  std::optional<MatchingDecoder> data_z_decoder_;
  std::optional<MatchingDecoder> data_x_decoder_;
  f2::Reducer z_stab_;
  std::vector<f2::BitVec> codeword_basis_;
};

inline RunStats run_homomorphic(const HomGadget& gadget, const NoiseModel& noise,
                                std::uint64_t trials, DecoderMode mode = DecoderMode::Exact) {
  return HomomorphicSimulator(gadget, mode).run(noise, trials);
}

inline MeasurementResult readout_ancilla(const PauliFrame& anc, const HomGadget& gadget,
                                         const NoiseModel& noise,
                                         DecoderMode mode = DecoderMode::Exact) {
  std::mt19937_64 eng(rng::mix(noise.seed, 0));
  return HomomorphicSimulator(gadget, mode).readout_ancilla(anc, noise.p_meas, eng);
}

inline double shor_single_round_accuracy(double p, std::size_t w) {
  return 0.5 + 0.5 * std::pow(1.0 - 2.0 * p, static_cast<double>(w));
}

struct ShorStats {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double accuracy = 1.0;
  BinomialStat error_stat;
  std::uint64_t seed = 0;
};

// Repeated ideal-cat-state readout of the operator on `support`:
// `rounds` independent readouts with per-bit flip rate p, majority
// vote. Data is refreshed by ideal error correction between rounds, so
// the only noise is the readout flips; rounds must be odd.
inline ShorStats run_shor_repeated(const CssCode& code, const f2::BitVec& support, double p,
                                   std::uint64_t rounds, std::uint64_t trials,
                                   std::uint64_t seed = 0) {
  if (rounds == 0 || rounds % 2 == 0)
    throw std::invalid_argument("run_shor_repeated: rounds must be odd (majority vote)");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("run_shor_repeated: p outside [0,1]");
  if (support.size() != code.n)
    throw DimensionMismatch("run_shor_repeated: support length != qubit count");
  if (!code.h_x.mul(support).zero())
    throw std::invalid_argument("run_shor_repeated: support is not a Z-type operator");
  const std::size_t w = support.weight();
  ShorStats stats;
  stats.trials = trials;
  stats.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 eng(rng::mix(seed, t));
    std::uint64_t wrong_rounds = 0;
    for (std::uint64_t r = 0; r < rounds; ++r) {
      bool parity = false;
      for (std::size_t i = 0; i < w; ++i)
        if (rng::uniform(eng) < p) parity = !parity;
      if (parity) ++wrong_rounds;
    }
    if (2 * wrong_rounds > rounds) ++stats.errors;
  }
  stats.error_stat = binomial_stat(stats.trials, stats.errors);
  stats.accuracy = trials == 0 ? 1.0 : 1.0 - stats.error_stat.rate;
  return stats;
}

}  // namespace homm
