#include "scldpc/exit.hpp"

#include <cmath>
#include <string>

namespace scldpc {

namespace {

constexpr double kH1 = 0.3073;
constexpr double kH2 = 0.8935;
constexpr double kH3 = 1.1064;
// Largest representable MI: keeps j_inverse finite (~17.6) and sums of
// squared inverses well away from overflow.
constexpr double kMiCap = 1.0 - 1e-15;

}  // namespace

double j_function(double s) {
  if (s < 0) throw validation_error("j_function needs s >= 0");
  if (s == 0) return 0.0;
  double v = 1.0 - std::exp2(-kH1 * std::pow(s, 2.0 * kH2));
  if (v <= 0) return 0.0;
  double i = std::pow(v, kH3);
  return i < kMiCap ? i : kMiCap;
}

double j_inverse(double i) {
  if (i < 0 || i >= 1) throw validation_error("j_inverse needs i in [0, 1)");
  if (i == 0) return 0.0;
  if (i > kMiCap) i = kMiCap;
  double v = 1.0 - std::pow(i, 1.0 / kH3);
  return std::pow(-std::log2(v) / kH1, 0.5 / kH2);
}

namespace {

// Message MIs can saturate at exactly 1 (a degree-1 CN pins its variable, so
// cn_update of an empty set is 1); fold anything at or above the cap back to
// it so the inverse transform stays finite.
double saturating_j_inverse(double i) { return j_inverse(i < kMiCap ? i : kMiCap); }

}  // namespace

double vn_update(double s_ch, std::span<const double> incoming) {
  if (s_ch < 0) throw validation_error("channel std dev must be >= 0");
  double sum = s_ch * s_ch;
  for (double i : incoming) {
    if (i < 0 || i > 1) throw validation_error("exit values must be in [0, 1]");
    double s = saturating_j_inverse(i);
    sum += s * s;
  }
  return j_function(std::sqrt(sum));
}

double cn_update(std::span<const double> incoming) {
  double sum = 0.0;
  for (double i : incoming) {
    if (i < 0 || i > 1) throw validation_error("exit values must be in [0, 1]");
    double s = saturating_j_inverse(1.0 - i);
    sum += s * s;
  }
  return 1.0 - j_function(std::sqrt(sum));
}

namespace {

// Flooding EXIT recursion with per-edge messages. Edge e runs between
// row_of[e] and col_of[e]; updates use sum-minus-own over squared J-inverses,
// so each half-iteration costs O(E) transform evaluations.
class ExitEngine {
 public:
  explicit ExitEngine(const SparseBinaryMatrix& g) : g_(g) {
    edge_row_start_.reserve(g.rows + 1);
    int e = 0;
    for (int r = 0; r < g.rows; ++r) {
      edge_row_start_.push_back(e);
      e += static_cast<int>(g.row_adj[r].size());
    }
    edge_row_start_.push_back(e);
    edges_ = e;
    col_edges_.resize(g.cols);
    for (int r = 0; r < g.rows; ++r)
      for (size_t k = 0; k < g.row_adj[r].size(); ++k)
        col_edges_[g.row_adj[r][k]].push_back(edge_row_start_[r] + static_cast<int>(k));
  }

  ExitTrace run(double sigma, const ExitOptions& opt) {
    if (sigma <= 0) throw validation_error("sigma must be positive");
    double s_ch = 2.0 / sigma;  // LLR std dev of the BPSK AWGN channel
    std::vector<double> c2v(edges_, 0.0);
    std::vector<double> v2c(edges_, 0.0);
    std::vector<double> sq(edges_, 0.0);  // scratch: squared J-inverses

    ExitTrace trace;
    double prev_min_app = 0.0;
    int stalled = 0;
    for (int iter = 1; iter <= opt.max_iters; ++iter) {
      // VN side: v2c = J(sqrt(channel + sum of squares except own)).
      for (int e = 0; e < edges_; ++e) {
        double s = saturating_j_inverse(c2v[e]);
        sq[e] = s * s;
      }
      double min_app = 1.0;
      for (int v = 0; v < g_.cols; ++v) {
        double total = s_ch * s_ch;
        for (int e : col_edges_[v]) total += sq[e];
        for (int e : col_edges_[v]) v2c[e] = j_function(std::sqrt(total - sq[e]));
        double app = j_function(std::sqrt(total));
        if (col_edges_[v].empty()) app = j_function(s_ch);
        if (app < min_app) min_app = app;
      }
      trace.min_app.push_back(min_app);
      trace.iterations = iter;
      if (min_app > 1.0 - opt.eps) {
        trace.converged = true;
        return trace;
      }
      // Stall cut: the recursion is monotone, so a long run of vanishing
      // improvement below target means a fixed point short of convergence.
      if (min_app - prev_min_app < 1e-13) {
        if (++stalled >= 50) return trace;
      } else {
        stalled = 0;
      }
      prev_min_app = min_app;

      // CN side: c2v = 1 - J(sqrt(sum of squares of J^-1(1 - v2c) except own)).
      for (int e = 0; e < edges_; ++e) {
        double s = saturating_j_inverse(1.0 - v2c[e]);
        sq[e] = s * s;
      }
      for (int r = 0; r < g_.rows; ++r) {
        int lo = edge_row_start_[r], hi = edge_row_start_[r + 1];
        double total = 0.0;
        for (int e = lo; e < hi; ++e) total += sq[e];
        for (int e = lo; e < hi; ++e) c2v[e] = 1.0 - j_function(std::sqrt(total - sq[e]));
      }
    }
    return trace;
  }

 private:
  const SparseBinaryMatrix& g_;
  int edges_ = 0;
  std::vector<int> edge_row_start_;
  std::vector<std::vector<int>> col_edges_;
};

}  // namespace

ExitTrace exit_trace(const SparseBinaryMatrix& graph, double sigma, const ExitOptions& opt) {
  ExitEngine engine(graph);
  return engine.run(sigma, opt);
}

bool exit_converges(const SparseBinaryMatrix& graph, double sigma, const ExitOptions& opt) {
  return exit_trace(graph, sigma, opt).converged;
}

ThresholdResult compute_threshold(const SparseBinaryMatrix& graph, double tol,
                                  const ExitOptions& opt) {
  if (tol <= 0) throw validation_error("threshold tolerance must be positive");
  ExitEngine engine(graph);
  ThresholdResult res;
  res.tol = tol;
  double lo = 0.01, hi = 3.0;
  auto probe = [&](double sigma) {
    ExitTrace t = engine.run(sigma, opt);
    res.probe_iters.push_back(t.iterations);
    return t.converged;
  };
  if (!probe(lo))
    throw validation_error("no convergence at sigma = " + std::to_string(lo) +
                           "; bracket not found");
  if (probe(hi))
    throw validation_error("still converging at sigma = " + std::to_string(hi) +
                           "; bracket not found");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (probe(mid) ? lo : hi) = mid;
  }
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.sigma_star = 0.5 * (lo + hi);
  return res;
}

namespace {

SparseBinaryMatrix all_ones_graph(int gamma, int kappa) {
  if (gamma < 1 || kappa < 1) throw validation_error("regular protograph needs gamma, kappa >= 1");
  SparseBinaryMatrix g(gamma, kappa);
  for (int r = 0; r < gamma; ++r)
    for (int c = 0; c < kappa; ++c) g.add_edge(r, c);
  return g;
}

}  // namespace

RegularOrderingResult threshold_ordering_regular(int gamma1, int kappa1, int gamma2, int kappa2,
                                                 double tol) {
  RegularOrderingResult out;
  out.sigma1 = compute_threshold(all_ones_graph(gamma1, kappa1), tol).sigma_star;
  out.sigma2 = compute_threshold(all_ones_graph(gamma2, kappa2), tol).sigma_star;
  double slack = 2.0 * tol;
  if (kappa1 == kappa2) {
    out.comparable = true;
    out.ordering_holds = gamma1 <= gamma2 ? out.sigma1 <= out.sigma2 + slack
                                          : out.sigma2 <= out.sigma1 + slack;
  } else if (gamma1 == gamma2) {
    out.comparable = true;
    out.ordering_holds = kappa1 <= kappa2 ? out.sigma2 <= out.sigma1 + slack
                                          : out.sigma1 <= out.sigma2 + slack;
  }
  return out;
}

}  // namespace scldpc
