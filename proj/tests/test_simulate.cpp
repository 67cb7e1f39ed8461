#include <cmath>

#include "doctest.h"
#include "scldpc/presets.hpp"
#include "scldpc/simulate.hpp"

using namespace scldpc;

TEST_SUITE("simulate") {

TEST_CASE("snr to sigma in both conventions") {
  CHECK(snr_to_sigma(0.0, -1.0, SnrConvention::esn0) == doctest::Approx(1.0));
  CHECK(snr_to_sigma(6.0206, -1.0, SnrConvention::esn0) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(snr_to_sigma(5.0, -1.0, SnrConvention::esn0) == doctest::Approx(0.5623413).epsilon(1e-6));
  CHECK(snr_to_sigma(5.0, 0.5, SnrConvention::ebn0) == doctest::Approx(0.5623413).epsilon(1e-6));
  CHECK(snr_to_sigma(0.0, 1.0, SnrConvention::ebn0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(snr_to_sigma(5.0, 0.0, SnrConvention::ebn0), validation_error);
  CHECK_THROWS_AS(snr_to_sigma(5.0, 1.5, SnrConvention::ebn0), validation_error);
}

TEST_CASE("frame rng is a pure function of (seed, stream, frame)") {
  FrameRng a(12, 3, 1000), b(12, 3, 1000);
  for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());

  FrameRng c(12, 3, 1001), d(12, 4, 1000), e(13, 3, 1000);
  FrameRng base(12, 3, 1000);
  uint64_t first = base.next_u64();
  CHECK(first != c.next_u64());
  CHECK(first != d.next_u64());
  CHECK(first != e.next_u64());

  FrameRng u(1, 0, 0);
  for (int i = 0; i < 1000; ++i) {
    double x = u.next_unit();
    CHECK(x > 0.0);
    CHECK(x <= 1.0);
  }
}

TEST_CASE("gaussian moments") {
  double sum = 0.0, sum2 = 0.0;
  int n = 0;
  for (uint64_t f = 0; f < 3000; ++f) {
    FrameRng rng(99, 0, f);
    for (int i = 0; i < 16; ++i) {
      double g = rng.next_gaussian();
      sum += g;
      sum2 += g * g;
      ++n;
    }
  }
  double mean = sum / n;
  double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
}

TEST_CASE("bp decoder fixes a weak bit and validates input") {
  SparseBinaryMatrix h =
      SparseBinaryMatrix::from_dense(BinaryMatrix::from_rows({"110", "011"}));
  BpDecoder dec(h);
  CHECK(dec.rows() == 2);
  CHECK(dec.cols() == 3);

  BpResult clean = dec.decode({5.0, 5.0, 5.0}, 20);
  CHECK(clean.valid_codeword);
  CHECK(clean.hard == std::vector<uint8_t>{0, 0, 0});

  BpResult weak = dec.decode({-1.0, 8.0, 8.0}, 20);
  CHECK(weak.valid_codeword);
  CHECK(weak.hard == std::vector<uint8_t>{0, 0, 0});

  CHECK_THROWS_AS(dec.decode({1.0, 1.0}, 20), validation_error);
}

TEST_CASE("bp decoder corrects a single flipped bit of a block code") {
  LiftedCode code = preset_code(make_preset("lc1"));
  BpDecoder dec(code.h);
  std::vector<double> llr(code.h.cols, 6.0);
  llr[8] = -6.0;
  BpResult res = dec.decode(llr, 50);
  CHECK(res.valid_codeword);
  for (uint8_t bit : res.hard) CHECK(bit == 0);
}

TEST_CASE("tallies do not depend on the thread count") {
  LiftedCode code = preset_code(make_preset("lc1"));
  SimConfig cfg;
  cfg.snr_db = {3.0};
  cfg.min_frame_errors = 10;
  cfg.max_frames = 400;
  cfg.batch = 16;
  cfg.seed = 7;

  cfg.threads = 1;
  BerPoint one = simulate_ber(code, cfg)[0];
  cfg.threads = 3;
  BerPoint three = simulate_ber(code, cfg)[0];

  CHECK(one.frames == three.frames);
  CHECK(one.bit_errors == three.bit_errors);
  CHECK(one.frame_errors == three.frame_errors);
  CHECK(one.ber == three.ber);
  CHECK(one.std_err == three.std_err);
  CHECK(one.frames % cfg.batch == 0);  // stopping only at batch boundaries

  cfg.threads = 1;
  BerPoint again = simulate_ber(code, cfg)[0];
  CHECK(again.bit_errors == one.bit_errors);
}

TEST_CASE("error rate falls with snr") {
  LiftedCode code = preset_code(make_preset("lc1"));
  SimConfig cfg;
  cfg.snr_db = {2.0, 5.0};
  cfg.min_frame_errors = 25;
  cfg.max_frames = 3000;
  cfg.batch = 100;
  cfg.seed = 3;
  std::vector<BerPoint> pts = simulate_ber(code, cfg);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].ber > pts[1].ber);
  CHECK(pts[1].ber > 0.0);
  CHECK(pts[0].fer >= pts[0].ber);
  CHECK(pts[0].std_err > 0.0);
  CHECK(pts[1].std_err > 0.0);
  CHECK(pts[0].frame_errors >= cfg.min_frame_errors);
}

TEST_CASE("clean channel produces a clean tally") {
  LiftedCode code = preset_code(make_preset("lc1"));
  SimConfig cfg;
  cfg.snr_db = {12.0};
  cfg.min_frame_errors = 1;
  cfg.max_frames = 60;
  cfg.batch = 20;
  std::vector<BerPoint> pts = simulate_ber(code, cfg);
  CHECK(pts[0].frames == 60);
  CHECK(pts[0].frame_errors == 0);
  CHECK(pts[0].ber == 0.0);
  CHECK(pts[0].std_err == 0.0);
  CHECK(pts[0].sigma == doctest::Approx(0.2025148).epsilon(1e-5));
}

TEST_CASE("config validation") {
  LiftedCode code = preset_code(make_preset("tiny"));
  SimConfig cfg;
  CHECK_THROWS_AS(simulate_ber(code, cfg), validation_error);  // empty snr list
  cfg.snr_db = {3.0};
  cfg.batch = 0;
  CHECK_THROWS_AS(simulate_ber(code, cfg), validation_error);
  cfg.batch = 10;
  cfg.max_bp_iters = 0;
  CHECK_THROWS_AS(simulate_ber(code, cfg), validation_error);
  cfg.max_bp_iters = 5;
  cfg.sigma_override = {0.5, 0.6};  // length mismatch with one snr point
  CHECK_THROWS_AS(simulate_ber(code, cfg), validation_error);
  cfg.sigma_override = {-0.5};
  CHECK_THROWS_AS(simulate_ber(code, cfg), validation_error);
}

TEST_CASE("explicit sigma overrides the convention mapping") {
  LiftedCode code = preset_code(make_preset("lc1"));
  SimConfig cfg;
  cfg.snr_db = {5.0};
  cfg.min_frame_errors = 5;
  cfg.max_frames = 200;
  cfg.batch = 50;
  cfg.seed = 11;
  BerPoint mapped = simulate_ber(code, cfg)[0];

  cfg.sigma_override = {mapped.sigma};
  BerPoint pinned = simulate_ber(code, cfg)[0];
  CHECK(pinned.sigma == mapped.sigma);
  CHECK(pinned.bit_errors == mapped.bit_errors);  // same noise, same tallies

  cfg.sigma_override = {0.75};  // labeled 5 dB but run much dirtier
  BerPoint dirty = simulate_ber(code, cfg)[0];
  CHECK(dirty.snr_db == 5.0);
  CHECK(dirty.sigma == 0.75);
  CHECK(dirty.ber > mapped.ber);
}

}  // TEST_SUITE
