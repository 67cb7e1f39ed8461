#pragma once

#include <utility>

#include "scldpc/matrix.hpp"
#include "scldpc/protograph.hpp"

namespace scldpc {

// Quasi-cyclic parity-check matrix produced by circulant lifting, possibly
// assembled into a terminated coupled chain. Row layout: row blocks of
// gamma*p rows each; the lifted copy s of protograph row g in row block rb is
// row rb*gamma*p + g*p + s. Column block j of sub-block r is column
// r*kappa*p + j*p + c.
struct LiftedCode {
  SparseBinaryMatrix h;
  int p = 0;
  int gamma_c = 0;
  int gamma_l = 0;
  int kappa = 0;
  int coupling_length = 1;  // number of sub-blocks (1 = plain single lift)
  int memory = 0;           // 0 for a plain lift, 1 for a coupled chain

  int gamma() const { return gamma_c + gamma_l; }
  int block_cols() const { return kappa * p; }
  double design_rate() const { return 1.0 - static_cast<double>(h.rows) / h.cols; }

  // Global row range [first, last) of the local check nodes of a sub-block.
  // Local rows only appear through their H0 copies, in the sub-block's own
  // row block, so the range is contiguous.
  std::pair<int, int> lcn_row_range(int subblock) const;
};

// Circulant lift: every 1 at (g, j) becomes the p x p identity cyclically
// shifted by g*j (mod p); row s of the block has its 1 in column
// (s + g*j) mod p. p must be prime and >= max(gamma, kappa), which keeps the
// shift map injective per row pair and the lifted graph free of 4-cycles.
LiftedCode ab_lift(const Protograph& b, int p);

// Lifts the partitioned protograph and tiles [H0; H1] into the terminated
// chain: (coupling_length+1)*gamma*p rows by coupling_length*kappa*p columns.
LiftedCode build_coupled(const Protograph& b, const PartitionMatrix& part, int p,
                         int coupling_length);

// The local code a sub-block's LCN rows impose on its own columns, in the
// canonical orientation of ab_lift applied to the local rows alone (the raw
// sub-matrix differs from it by a per-column-group cyclic rotation, i.e. a
// graph isomorphism). Identical for every sub-block.
SparseBinaryMatrix extract_local_code(const LiftedCode& code, int subblock);

}  // namespace scldpc
