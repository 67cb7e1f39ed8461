#include "scldpc/cycles.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <vector>

#include "scldpc/protograph.hpp"

namespace scldpc {

long long count_cycles6_row_triple(long long t_all, long long t12, long long t13, long long t23) {
  if (t_all < 0 || t12 < 0 || t13 < 0 || t23 < 0)
    throw validation_error("overlap counts must be non-negative");
  if (t_all > std::min({t12, t13, t23}))
    throw validation_error("triple overlap cannot exceed a pairwise overlap");
  auto pos = [](long long v) { return v > 0 ? v : 0; };
  // Split by whether c1 (shared by rows 1,2) and c2 (shared by rows 1,3) come
  // from the triple overlap; c3 (shared by rows 2,3) must avoid whichever of
  // them lies in its own pool.
  return t_all * pos(t_all - 1) * pos(t23 - 2) + t_all * (t13 - t_all) * pos(t23 - 1) +
         (t12 - t_all) * t_all * pos(t23 - 1) + (t12 - t_all) * (t13 - t_all) * t23;
}

namespace {

std::vector<std::vector<uint64_t>> row_bitsets(const BinaryMatrix& m) {
  int words = (m.cols() + 63) / 64;
  std::vector<std::vector<uint64_t>> bits(m.rows(), std::vector<uint64_t>(words, 0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) bits[r][c / 64] |= uint64_t(1) << (c % 64);
  return bits;
}

long long popcount_and2(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  long long n = 0;
  for (size_t w = 0; w < a.size(); ++w) n += std::popcount(a[w] & b[w]);
  return n;
}

long long popcount_and3(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                        const std::vector<uint64_t>& c) {
  long long n = 0;
  for (size_t w = 0; w < a.size(); ++w) n += std::popcount(a[w] & b[w] & c[w]);
  return n;
}

}  // namespace

long long count_cycles6_by_row_triples(const BinaryMatrix& m) {
  auto bits = row_bitsets(m);
  int n = m.rows();
  long long total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long tij = popcount_and2(bits[i], bits[j]);
      if (tij == 0) continue;
      for (int k = j + 1; k < n; ++k) {
        long long tik = popcount_and2(bits[i], bits[k]);
        if (tik == 0) continue;
        long long tjk = popcount_and2(bits[j], bits[k]);
        if (tjk == 0) continue;
        long long t_all = popcount_and3(bits[i], bits[j], bits[k]);
        total += count_cycles6_row_triple(t_all, tij, tik, tjk);
      }
    }
  return total;
}

long long closed_form_cycles6_3rows(const BinaryMatrix& m) {
  if (m.rows() != 3) throw validation_error("overlap form for 3 rows needs a 3-row matrix");
  return count_cycles6_by_row_triples(m);
}

long long closed_form_cycles6_4rows(const BinaryMatrix& m) {
  if (m.rows() != 4) throw validation_error("overlap form for 4 rows needs a 4-row matrix");
  return count_cycles6_by_row_triples(m);
}

namespace {

// Closed walks of length 2k from an anchor row that stay above the anchor,
// never repeat a node and end on a column adjacent to the anchor. Each cycle
// is walked once per direction, so the caller halves the sum.
class CycleWalker {
 public:
  CycleWalker(const SparseBinaryMatrix& m, int k) : m_(m), k_(k), anchor_col_(m.cols, 0), col_used_(m.cols, 0) {}

  long long walks_from(int anchor) {
    anchor_ = anchor;
    for (int c : m_.row_adj[anchor]) anchor_col_[c] = 1;
    walks_ = 0;
    path_rows_[0] = anchor;
    extend(anchor, 0);
    for (int c : m_.row_adj[anchor]) anchor_col_[c] = 0;
    return walks_;
  }

 private:
  void extend(int row, int used) {
    if (used == k_ - 1) {
      for (int c : m_.row_adj[row])
        if (anchor_col_[c] && !col_used_[c]) ++walks_;
      return;
    }
    for (int c : m_.row_adj[row]) {
      if (col_used_[c]) continue;
      col_used_[c] = 1;
      for (int r2 : m_.col_adj[c]) {
        if (r2 <= anchor_) continue;  // anchor is the smallest row in the cycle
        bool seen = false;
        for (int i = 1; i <= used; ++i)
          if (path_rows_[i] == r2) { seen = true; break; }
        if (seen) continue;
        path_rows_[used + 1] = r2;
        extend(r2, used + 1);
      }
      col_used_[c] = 0;
    }
  }

  const SparseBinaryMatrix& m_;
  int k_;
  int anchor_ = 0;
  long long walks_ = 0;
  int path_rows_[8] = {0};  // k_ <= 4 uses at most 4 slots; oversized to keep
                            // recursive bounds obvious to the compiler
  std::vector<uint8_t> anchor_col_;
  std::vector<uint8_t> col_used_;
};

}  // namespace

long long enumerate_cycles(const SparseBinaryMatrix& m, int length, int threads) {
  if (length != 4 && length != 6 && length != 8)
    throw validation_error("cycle length must be 4, 6 or 8");
  if (threads < 1) threads = 1;
  int k = length / 2;

  auto count_range = [&](int lo, int hi) {
    CycleWalker walker(m, k);
    long long walks = 0;
    for (int a = lo; a < hi; ++a)
      if (m.row_adj[a].size() >= 2) walks += walker.walks_from(a);
    return walks;
  };

  long long walks = 0;
  if (threads == 1 || m.rows < 2 * threads) {
    walks = count_range(0, m.rows);
  } else {
    std::vector<long long> partial(threads, 0);
    std::vector<std::thread> pool;
    int chunk = (m.rows + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        int lo = t * chunk, hi = std::min(m.rows, lo + chunk);
        if (lo < hi) partial[t] = count_range(lo, hi);
      });
    for (auto& th : pool) th.join();
    for (long long p : partial) walks += p;
  }
  return walks / 2;
}

long long enumerate_cycles(const BinaryMatrix& m, int length, int threads) {
  return enumerate_cycles(SparseBinaryMatrix::from_dense(m), length, threads);
}

CoupledCycleCount count_coupled_cycles(const BinaryMatrix& b0, const BinaryMatrix& b1,
                                       int coupling_length, int length) {
  if (coupling_length < 1) throw validation_error("coupling length must be >= 1");
  CoupledCycleCount out;
  out.coupling_length = coupling_length;
  out.length = length;
  int max_span = length == 8 ? 3 : 2;
  long long n1 = enumerate_cycles(unroll_coupled_protograph(b0, b1, 1), length);
  out.f1 = n1;
  if (coupling_length >= 2 && max_span >= 2) {
    long long n2 = enumerate_cycles(unroll_coupled_protograph(b0, b1, 2), length);
    out.f2 = n2 - 2 * n1;
  }
  if (coupling_length >= 3 && max_span >= 3) {
    long long n3 = enumerate_cycles(unroll_coupled_protograph(b0, b1, 3), length);
    out.f3 = n3 - 3 * out.f1 - 2 * out.f2;
  }
  return out;
}

}  // namespace scldpc
