#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "scldpc/matrix.hpp"

namespace scldpc {

// Row subsets are bitmasks over replica rows: bit i is row i of [B0; B1],
// i in [0, 2*gamma). Keeps gamma <= 16 so masks fit in 32 bits.
uint32_t row_mask(std::initializer_list<int> rows);

// Overlap parameters of a replica matrix [B0; B1]: for each subset S of
// replica rows with 1 <= |S| <= gamma, t(S) = number of columns in which
// every row of S holds a 1. Subsets taking two rows with the same residue
// (mod gamma) pair a circulant position with itself across B0/B1; disjoint
// supports make those counts structurally zero, and they are flagged as such.
class OverlapSet {
 public:
  OverlapSet() = default;
  OverlapSet(int gamma, int kappa) : gamma_(gamma), kappa_(kappa) {}

  int gamma() const { return gamma_; }
  int kappa() const { return kappa_; }

  // t(empty) = kappa by convention.
  int t(uint32_t mask) const;
  int t(std::initializer_list<int> rows) const { return t(row_mask(rows)); }
  bool is_structural_zero(uint32_t mask) const;

  const std::map<uint32_t, int>& counts() const { return counts_; }

  void set(uint32_t mask, int value) { counts_[mask] = value; }

 private:
  int gamma_ = 0;
  int kappa_ = 0;
  std::map<uint32_t, int> counts_;
};

// Computes all overlap parameters of a replica matrix (rows must be 2*gamma).
OverlapSet overlap_parameters(const BinaryMatrix& replica);

// Subsets of B0 rows whose overlaps determine every other overlap parameter
// once the local rows carry an all-zero partition (or there are none): all
// non-empty subsets of the coupling rows {0..gamma_c-1}, sizes 1..gamma_c,
// in (size, mask) order.
std::vector<uint32_t> independent_overlap_set(int gamma_c, int gamma_l);

}  // namespace scldpc
