#include "scldpc/simulate.hpp"

#include <cmath>
#include <thread>

namespace scldpc {

double snr_to_sigma(double snr_db, double rate, SnrConvention conv) {
  // esn0 reads the axis as SNR = 1/sigma^2 in dB, independent of code rate.
  if (conv == SnrConvention::esn0) return std::pow(10.0, -snr_db / 20.0);
  if (rate <= 0.0 || rate > 1.0)
    throw validation_error("rate must be in (0, 1] for an Eb/N0 sweep");
  return 1.0 / std::sqrt(2.0 * rate * std::pow(10.0, snr_db / 10.0));
}

BpDecoder::BpDecoder(const SparseBinaryMatrix& h) : rows_(h.rows), cols_(h.cols) {
  row_start_.assign(rows_ + 1, 0);
  for (int r = 0; r < rows_; ++r) row_start_[r + 1] = row_start_[r] + static_cast<int>(h.row_adj[r].size());
  edge_col_.resize(row_start_[rows_]);
  for (int r = 0; r < rows_; ++r) {
    int e = row_start_[r];
    for (int c : h.row_adj[r]) edge_col_[e++] = c;
  }
  col_start_.assign(cols_ + 1, 0);
  for (int e = 0; e < static_cast<int>(edge_col_.size()); ++e) col_start_[edge_col_[e] + 1]++;
  for (int c = 0; c < cols_; ++c) col_start_[c + 1] += col_start_[c];
  col_edge_.resize(edge_col_.size());
  std::vector<int> fill = col_start_;
  for (int e = 0; e < static_cast<int>(edge_col_.size()); ++e) col_edge_[fill[edge_col_[e]]++] = e;
}

BpResult BpDecoder::decode(const std::vector<double>& llr, int max_iters) const {
  if (static_cast<int>(llr.size()) != cols_) throw validation_error("llr length mismatch");
  int n_edges = static_cast<int>(edge_col_.size());
  std::vector<double> v2c(n_edges), c2v(n_edges, 0.0), tanh_half(n_edges);
  for (int e = 0; e < n_edges; ++e) v2c[e] = llr[edge_col_[e]];

  BpResult res;
  res.hard.assign(cols_, 0);
  std::vector<double> fwd;
  for (int it = 1; it <= max_iters; ++it) {
    // check-node half: forward/backward partial products of tanh(v/2)
    for (int e = 0; e < n_edges; ++e) tanh_half[e] = std::tanh(0.5 * v2c[e]);
    for (int r = 0; r < rows_; ++r) {
      int lo = row_start_[r], hi = row_start_[r + 1], deg = hi - lo;
      if (deg == 0) continue;
      fwd.assign(deg + 1, 1.0);
      for (int k = 0; k < deg; ++k) fwd[k + 1] = fwd[k] * tanh_half[lo + k];
      double bwd = 1.0;
      for (int k = deg - 1; k >= 0; --k) {
        double prod = fwd[k] * bwd;
        if (prod > 0.9999999999999) prod = 0.9999999999999;
        if (prod < -0.9999999999999) prod = -0.9999999999999;
        c2v[lo + k] = 2.0 * std::atanh(prod);
        bwd *= tanh_half[lo + k];
      }
    }
    // variable-node half plus hard decision
    for (int c = 0; c < cols_; ++c) {
      double tot = llr[c];
      for (int k = col_start_[c]; k < col_start_[c + 1]; ++k) tot += c2v[col_edge_[k]];
      for (int k = col_start_[c]; k < col_start_[c + 1]; ++k) {
        int e = col_edge_[k];
        v2c[e] = tot - c2v[e];
      }
      res.hard[c] = tot < 0.0;
    }
    res.iterations = it;
    bool ok = true;
    for (int r = 0; r < rows_ && ok; ++r) {
      uint8_t parity = 0;
      for (int e = row_start_[r]; e < row_start_[r + 1]; ++e) parity ^= res.hard[edge_col_[e]];
      ok = parity == 0;
    }
    if (ok) {
      res.valid_codeword = true;
      break;
    }
  }
  return res;
}

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

// Frames get splitmix64 windows 2^20 steps apart, far wider than any frame's
// draw count, so streams never overlap.
FrameRng::FrameRng(uint64_t seed, uint64_t stream, uint64_t frame)
    : state_((mix64(seed + kGolden * (stream + 1)) + frame * (kGolden << 20))) {}

uint64_t FrameRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double FrameRng::next_unit() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double FrameRng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = next_unit(), u2 = next_unit();
  double r = std::sqrt(-2.0 * std::log(u1)), a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

namespace {

struct FrameTally {
  long long frames = 0;
  long long bit_errors = 0;
  long long frame_errors = 0;
  double sum_e = 0.0, sum_e2 = 0.0;  // per-frame bit-error counts and squares
};

FrameTally run_frames(const BpDecoder& dec, double sigma, int max_iters, uint64_t seed,
                      uint64_t stream, long long frame_begin, long long frame_end) {
  FrameTally tally;
  int n = dec.cols();
  std::vector<double> llr(n);
  double scale = 2.0 / (sigma * sigma);
  for (long long f = frame_begin; f < frame_end; ++f) {
    FrameRng rng(seed, stream, static_cast<uint64_t>(f));
    for (int j = 0; j < n; ++j) llr[j] = scale * (1.0 + sigma * rng.next_gaussian());
    BpResult res = dec.decode(llr, max_iters);
    long long e = 0;
    for (int j = 0; j < n; ++j) e += res.hard[j];
    tally.frames++;
    tally.bit_errors += e;
    tally.frame_errors += e > 0;
    tally.sum_e += static_cast<double>(e);
    tally.sum_e2 += static_cast<double>(e) * static_cast<double>(e);
  }
  return tally;
}

}  // namespace

std::vector<BerPoint> simulate_ber(const LiftedCode& code, const SimConfig& cfg) {
  if (cfg.snr_db.empty()) throw validation_error("snr list is empty");
  if (cfg.max_bp_iters < 1) throw validation_error("max_bp_iters must be >= 1");
  if (cfg.batch < 1 || cfg.max_frames < 1) throw validation_error("batch and max_frames must be >= 1");
  if (!cfg.sigma_override.empty() && cfg.sigma_override.size() != cfg.snr_db.size())
    throw validation_error("sigma_override must match the snr list length");
  for (double s : cfg.sigma_override)
    if (s <= 0.0) throw validation_error("sigma_override entries must be positive");
  int threads = cfg.threads < 1 ? 1 : cfg.threads;
  double rate = cfg.rate_override > 0 ? cfg.rate_override : code.design_rate();
  BpDecoder dec(code.h);
  int n = dec.cols();

  std::vector<BerPoint> out;
  for (size_t si = 0; si < cfg.snr_db.size(); ++si) {
    BerPoint pt;
    pt.snr_db = cfg.snr_db[si];
    pt.sigma = cfg.sigma_override.empty() ? snr_to_sigma(pt.snr_db, rate, cfg.convention)
                                          : cfg.sigma_override[si];
    double sum_e = 0.0, sum_e2 = 0.0;
    long long next_frame = 0;
    while (pt.frames < cfg.max_frames &&
           (pt.frame_errors < cfg.min_frame_errors || pt.frames == 0)) {
      long long batch = std::min(cfg.batch, cfg.max_frames - pt.frames);
      long long begin = next_frame, end = next_frame + batch;
      next_frame = end;
      std::vector<FrameTally> parts(threads);
      if (threads == 1) {
        parts[0] = run_frames(dec, pt.sigma, cfg.max_bp_iters, cfg.seed, si, begin, end);
      } else {
        std::vector<std::thread> pool;
        long long chunk = (batch + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
          long long b = begin + t * chunk, e = std::min(end, b + chunk);
          if (b >= e) break;
          pool.emplace_back([&, t, b, e] {
            parts[t] = run_frames(dec, pt.sigma, cfg.max_bp_iters, cfg.seed, si, b, e);
          });
        }
        for (auto& th : pool) th.join();
      }
      for (const FrameTally& p : parts) {
        pt.frames += p.frames;
        pt.bit_errors += p.bit_errors;
        pt.frame_errors += p.frame_errors;
        sum_e += p.sum_e;
        sum_e2 += p.sum_e2;
      }
    }
    double fr = static_cast<double>(pt.frames);
    pt.ber = static_cast<double>(pt.bit_errors) / (fr * n);
    pt.fer = static_cast<double>(pt.frame_errors) / fr;
    if (pt.frames > 1) {
      double mean = sum_e / fr;
      double var = (sum_e2 - fr * mean * mean) / (fr - 1.0);
      if (var < 0) var = 0;
      pt.std_err = std::sqrt(var / fr) / n;
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace scldpc
