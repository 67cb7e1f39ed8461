#include "scldpc/overlap.hpp"

#include <bit>

namespace scldpc {

uint32_t row_mask(std::initializer_list<int> rows) {
  uint32_t m = 0;
  for (int r : rows) {
    if (r < 0 || r >= 32) throw validation_error("row index out of mask range");
    m |= uint32_t(1) << r;
  }
  return m;
}

int OverlapSet::t(uint32_t mask) const {
  if (mask == 0) return kappa_;
  auto it = counts_.find(mask);
  if (it == counts_.end()) throw validation_error("overlap subset outside the recorded family");
  return it->second;
}

bool OverlapSet::is_structural_zero(uint32_t mask) const {
  // Two rows with equal residue (mod gamma) are the same circulant position
  // seen from B0 and B1; disjoint supports force t = 0.
  uint32_t lo = mask & ((uint32_t(1) << gamma_) - 1);
  uint32_t hi = mask >> gamma_;
  return (lo & hi) != 0;
}

namespace {

void collect_subsets(const std::vector<std::vector<uint64_t>>& row_bits, int words, int max_size,
                     int first, uint32_t mask, const std::vector<uint64_t>& acc, int size,
                     OverlapSet& out) {
  int nrows = static_cast<int>(row_bits.size());
  for (int r = first; r < nrows; ++r) {
    std::vector<uint64_t> next(words);
    int cnt = 0;
    for (int w = 0; w < words; ++w) {
      next[w] = acc[w] & row_bits[r][w];
      cnt += std::popcount(next[w]);
    }
    uint32_t m = mask | (uint32_t(1) << r);
    out.set(m, cnt);
    if (size + 1 < max_size) collect_subsets(row_bits, words, max_size, r + 1, m, next, size + 1, out);
  }
}

}  // namespace

OverlapSet overlap_parameters(const BinaryMatrix& replica) {
  if (replica.rows() % 2 != 0) throw validation_error("replica must have 2*gamma rows");
  int gamma = replica.rows() / 2;
  if (gamma < 1 || gamma > 16) throw validation_error("replica gamma must be in [1, 16]");
  int kappa = replica.cols();
  int words = (kappa + 63) / 64;
  std::vector<std::vector<uint64_t>> row_bits(replica.rows(), std::vector<uint64_t>(words, 0));
  for (int r = 0; r < replica.rows(); ++r)
    for (int c = 0; c < kappa; ++c)
      if (replica.get(r, c)) row_bits[r][c / 64] |= uint64_t(1) << (c % 64);

  OverlapSet out(gamma, kappa);
  std::vector<uint64_t> all(words, ~uint64_t(0));
  if (kappa % 64) all[words - 1] = (uint64_t(1) << (kappa % 64)) - 1;
  collect_subsets(row_bits, words, gamma, 0, 0, all, 0, out);
  return out;
}

std::vector<uint32_t> independent_overlap_set(int gamma_c, int gamma_l) {
  if (gamma_c < 0 || gamma_l < 0 || gamma_c + gamma_l < 1)
    throw validation_error("need gamma_c + gamma_l >= 1");
  if (gamma_c > 16) throw validation_error("gamma_c must be <= 16");
  std::vector<uint32_t> subsets;
  for (int size = 1; size <= gamma_c; ++size)
    for (uint32_t m = 1; m < (uint32_t(1) << gamma_c); ++m)
      if (std::popcount(m) == size) subsets.push_back(m);
  return subsets;
}

}  // namespace scldpc
