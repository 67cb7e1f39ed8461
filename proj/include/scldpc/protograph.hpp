#pragma once

#include "scldpc/matrix.hpp"

namespace scldpc {

// Binary protograph with its rows split into gamma_c coupling rows (first)
// and gamma_l local rows (last). Construction validates that every row and
// every column has at least one 1.
class Protograph {
 public:
  Protograph(BinaryMatrix m, int gamma_c, int gamma_l);

  const BinaryMatrix& matrix() const { return m_; }
  int gamma() const { return gamma_c_ + gamma_l_; }
  int gamma_c() const { return gamma_c_; }
  int gamma_l() const { return gamma_l_; }
  int kappa() const { return m_.cols(); }

  bool operator==(const Protograph&) const = default;

 private:
  BinaryMatrix m_;
  int gamma_c_ = 0;
  int gamma_l_ = 0;
};

// Ternary partition aligned with a protograph: 0 keeps a circulant in H0,
// 1 moves it to H1, X removes it. Local rows must not contain 1s (sub-block
// locality: local checks never couple across replicas).
class PartitionMatrix {
 public:
  PartitionMatrix(TernaryMatrix m, int gamma_c, int gamma_l);

  const TernaryMatrix& matrix() const { return m_; }
  int gamma() const { return gamma_c_ + gamma_l_; }
  int gamma_c() const { return gamma_c_; }
  int gamma_l() const { return gamma_l_; }
  int kappa() const { return m_.cols(); }

  bool operator==(const PartitionMatrix&) const = default;

 private:
  TernaryMatrix m_;
  int gamma_c_ = 0;
  int gamma_l_ = 0;
};

// All-ones protograph with gamma_c coupling rows and gamma_l local rows.
Protograph regular_protograph(int gamma_c, int gamma_l, int kappa);

// Stacks gamma_c all-ones coupling rows on top of a local-only protograph.
Protograph stack_coupling_rows(const Protograph& local, int gamma_c);

// Local-code construction: gamma_l x kappa with nu zeros spread as evenly as
// possible (each row gets a = nu/gamma_l zeros from the Q blocks; the
// b = nu mod gamma_l leftover zeros sit on the anti-diagonal of an S block).
Protograph build_balanced(int gamma_l, int kappa, int nu);

// Local-code construction: all nu zeros in row 0, other rows all-ones.
Protograph build_unbalanced(int gamma_l, int kappa, int nu);

struct SplitProtograph {
  BinaryMatrix b0;  // circulants kept in the same replica
  BinaryMatrix b1;  // circulants coupled to the next replica
};

// Applies a partition to a protograph. Requires p to assign 0/1 only where
// b has a 1; X removes the circulant from both components.
SplitProtograph split_by_partition(const Protograph& b, const PartitionMatrix& p);

// Stacks [b0; b1] into the 2*gamma x kappa replica matrix. Requires equal
// shapes and disjoint supports.
BinaryMatrix replica_matrix(const BinaryMatrix& b0, const BinaryMatrix& b1);

// Terminated chain of coupling_length replicas with memory 1:
// (coupling_length+1)*gamma rows x coupling_length*kappa columns. Replica r
// occupies column block r; its b0 rows land in row block r and its b1 rows in
// row block r+1.
BinaryMatrix unroll_coupled_protograph(const BinaryMatrix& b0, const BinaryMatrix& b1,
                                       int coupling_length);

}  // namespace scldpc
