#pragma once

#include <span>
#include <vector>

#include "scldpc/matrix.hpp"

namespace scldpc {

// Mutual information between a BPSK symbol and a consistent Gaussian LLR
// message with standard deviation s (mean s^2/2). Monotone curve fit
// J(s) = (1 - 2^(-h1 s^(2 h2)))^h3 with h1=0.3073, h2=0.8935, h3=1.1064;
// it has an exact closed-form inverse and stays strictly inside [0, 1).
double j_function(double s);
double j_inverse(double i);

// Variable-node EXIT update: combine channel (LLR std dev s_ch) with all
// incoming check messages except the one on the output edge.
double vn_update(double s_ch, std::span<const double> incoming);
// Check-node EXIT update via the duality approximation.
double cn_update(std::span<const double> incoming);

struct ExitOptions {
  int max_iters = 2000;
  // Converged when every VN's a-posteriori MI exceeds 1 - eps. Graphs with
  // many degree-2 VNs approach full MI sub-geometrically and flatline around
  // 1e-5 short of it near threshold, so eps tighter than ~1e-4 measures the
  // plateau height instead of the decodability transition.
  double eps = 1e-4;
};

struct ExitTrace {
  std::vector<double> min_app;  // per iteration, the worst VN a-posteriori MI
  int iterations = 0;
  bool converged = false;
};

// Runs the flooding EXIT recursion on a bipartite graph (rows = CNs,
// cols = VNs) over an AWGN channel with noise std dev sigma. Messages are
// non-decreasing across iterations; iteration stops on convergence, on
// max_iters, or when the worst VN stalls below the target.
bool exit_converges(const SparseBinaryMatrix& graph, double sigma, const ExitOptions& opt = {});
ExitTrace exit_trace(const SparseBinaryMatrix& graph, double sigma, const ExitOptions& opt = {});

struct ThresholdResult {
  double sigma_star = 0.0;
  double tol = 0.0;
  double bracket_lo = 0.0;  // certified converging
  double bracket_hi = 0.0;  // certified failing
  std::vector<int> probe_iters;
};

// Bisection for the largest noise level the EXIT recursion tolerates,
// bracketed in [0.01, 3].
ThresholdResult compute_threshold(const SparseBinaryMatrix& graph, double tol = 1e-4,
                                  const ExitOptions& opt = {});

struct RegularOrderingResult {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  bool comparable = false;      // equal kappa or equal gamma
  bool ordering_holds = false;  // more checks (or fewer variables) never hurts
};

// Thresholds of two regular all-ones protographs plus the monotone-ordering
// verdict: at equal kappa the larger gamma has the larger threshold; at equal
// gamma the larger kappa has the smaller one.
RegularOrderingResult threshold_ordering_regular(int gamma1, int kappa1, int gamma2, int kappa2,
                                                 double tol = 1e-4);

}  // namespace scldpc
