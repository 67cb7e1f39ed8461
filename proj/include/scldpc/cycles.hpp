#pragma once

#include "scldpc/matrix.hpp"

namespace scldpc {

// Number of 6-cycles threading a fixed row triple (r1, r2, r3), given the
// pairwise overlaps t12, t13, t23 and the triple overlap t_all: choices of
// distinct columns c1 in overlap(r1,r2), c2 in overlap(r1,r3),
// c3 in overlap(r2,r3).
long long count_cycles6_row_triple(long long t_all, long long t12, long long t13, long long t23);

// Overlap-form 6-cycle counts for 3- and 4-row matrices (errors otherwise):
// evaluate count_cycles6_row_triple on the matrix's own overlaps, summed over
// row triples.
long long closed_form_cycles6_3rows(const BinaryMatrix& m);
long long closed_form_cycles6_4rows(const BinaryMatrix& m);

// Same overlap sweep generalized to any row count. Equal to
// enumerate_cycles(m, 6) but much faster on dense rows; the optimizer's
// scoring path.
long long count_cycles6_by_row_triples(const BinaryMatrix& m);

// Exact count of simple cycles (no repeated nodes) of length 4, 6 or 8 in the
// bipartite row/column graph, each cycle counted once. Walk-based: anchors on
// the cycle's smallest row index and divides the two traversal directions
// out. Deterministic for any thread count.
long long enumerate_cycles(const SparseBinaryMatrix& m, int length, int threads = 1);
long long enumerate_cycles(const BinaryMatrix& m, int length, int threads = 1);

// Cycle count of the terminated coupled chain, decomposed by replica span.
// A length-4/6 cycle spans at most 2 consecutive replicas; a length-8 cycle
// can span 3 (two rows in each of two adjacent row groups). Totals follow by
// translation invariance of the chain interior.
struct CoupledCycleCount {
  int coupling_length = 0;
  int length = 0;
  long long f1 = 0;  // cycles within one replica
  long long f2 = 0;  // cycles spanning exactly two consecutive replicas
  long long f3 = 0;  // cycles spanning exactly three (length 8 only)
  long long total() const {
    long long l = coupling_length;
    return l * f1 + (l - 1) * f2 + (l >= 2 ? (l - 2) * f3 : 0);
  }
};

CoupledCycleCount count_coupled_cycles(const BinaryMatrix& b0, const BinaryMatrix& b1,
                                       int coupling_length, int length);

}  // namespace scldpc
