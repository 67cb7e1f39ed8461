#pragma once

#include <cstdint>
#include <vector>

#include "scldpc/lifting.hpp"
#include "scldpc/matrix.hpp"

namespace scldpc {

enum class SnrConvention { ebn0, esn0 };

// Noise std-dev for BPSK (unit symbol energy) at the given SNR in dB.
double snr_to_sigma(double snr_db, double rate, SnrConvention conv);

struct BpResult {
  bool valid_codeword = false;  // zero syndrome reached
  int iterations = 0;
  std::vector<uint8_t> hard;
};

// Flooding sum-product decoder over a fixed parity-check matrix.
class BpDecoder {
 public:
  explicit BpDecoder(const SparseBinaryMatrix& h);
  BpResult decode(const std::vector<double>& llr, int max_iters) const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_, cols_;
  std::vector<int> row_start_;   // CSR offsets into edge_col_
  std::vector<int> edge_col_;
  std::vector<int> col_start_;   // CSC offsets into col_edge_
  std::vector<int> col_edge_;    // edge ids per column
};

// Deterministic per-frame Gaussian source: the stream is a pure function of
// (seed, stream, frame), so results do not depend on batching or threads.
class FrameRng {
 public:
  FrameRng(uint64_t seed, uint64_t stream, uint64_t frame);
  uint64_t next_u64();
  double next_unit();      // (0, 1]
  double next_gaussian();  // standard normal (Box-Muller)

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct SimConfig {
  std::vector<double> snr_db;
  SnrConvention convention = SnrConvention::ebn0;
  // Non-empty: per-point noise levels used directly (one per snr_db entry,
  // which then only labels the point). This is how a calibrated operating
  // point is pinned when the axis convention of reference data is unknown.
  std::vector<double> sigma_override;
  int max_bp_iters = 50;
  long long min_frame_errors = 50;
  long long max_frames = 2'000'000;
  long long batch = 200;
  uint64_t seed = 1;
  int threads = 1;
  double rate_override = -1.0;  // < 0: use the code's design rate
};

struct BerPoint {
  double snr_db = 0.0;
  double sigma = 0.0;
  double ber = 0.0;
  double fer = 0.0;
  double std_err = 0.0;  // standard error of the BER estimate (frames as clusters)
  long long frames = 0;
  long long bit_errors = 0;
  long long frame_errors = 0;
};

// All-zero-codeword BPSK/AWGN Monte-Carlo sweep. Each point runs until
// min_frame_errors frame errors (checked at batch boundaries) or max_frames.
std::vector<BerPoint> simulate_ber(const LiftedCode& code, const SimConfig& cfg);

}  // namespace scldpc
