#include "scldpc/protograph.hpp"

#include <string>

namespace scldpc {

Protograph::Protograph(BinaryMatrix m, int gamma_c, int gamma_l)
    : m_(std::move(m)), gamma_c_(gamma_c), gamma_l_(gamma_l) {
  if (gamma_c < 0 || gamma_l < 0 || gamma_c + gamma_l == 0)
    throw validation_error("protograph needs gamma_c + gamma_l >= 1");
  if (m_.rows() != gamma_c + gamma_l)
    throw validation_error("protograph rows must equal gamma_c + gamma_l");
  if (m_.cols() < 1) throw validation_error("protograph needs at least one column");
  for (int r = 0; r < m_.rows(); ++r)
    if (m_.row_weight(r) == 0)
      throw validation_error("protograph row " + std::to_string(r) + " is all-zero");
  for (int c = 0; c < m_.cols(); ++c)
    if (m_.col_weight(c) == 0)
      throw validation_error("protograph column " + std::to_string(c) + " is all-zero");
}

PartitionMatrix::PartitionMatrix(TernaryMatrix m, int gamma_c, int gamma_l)
    : m_(std::move(m)), gamma_c_(gamma_c), gamma_l_(gamma_l) {
  if (gamma_c < 0 || gamma_l < 0 || gamma_c + gamma_l == 0)
    throw validation_error("partition needs gamma_c + gamma_l >= 1");
  if (m_.rows() != gamma_c + gamma_l)
    throw validation_error("partition rows must equal gamma_c + gamma_l");
  if (m_.cols() < 1) throw validation_error("partition needs at least one column");
  for (int r = gamma_c; r < m_.rows(); ++r)
    for (int c = 0; c < m_.cols(); ++c)
      if (m_.get(r, c) == PEntry::H1)
        throw validation_error("local row " + std::to_string(r) +
                               " assigns a circulant to H1; locality forbids that");
}

Protograph regular_protograph(int gamma_c, int gamma_l, int kappa) {
  if (kappa < 1) throw validation_error("kappa must be >= 1");
  int gamma = gamma_c + gamma_l;
  if (gamma < 1) throw validation_error("need gamma_c + gamma_l >= 1");
  BinaryMatrix m(gamma, kappa);
  for (int r = 0; r < gamma; ++r)
    for (int c = 0; c < kappa; ++c) m.set(r, c, 1);
  return Protograph(std::move(m), gamma_c, gamma_l);
}

Protograph stack_coupling_rows(const Protograph& local, int gamma_c) {
  if (local.gamma_c() != 0)
    throw validation_error("local protograph already has coupling rows");
  if (gamma_c < 0) throw validation_error("gamma_c must be >= 0");
  BinaryMatrix m(gamma_c + local.gamma_l(), local.kappa());
  for (int r = 0; r < gamma_c; ++r)
    for (int c = 0; c < local.kappa(); ++c) m.set(r, c, 1);
  for (int r = 0; r < local.gamma_l(); ++r)
    for (int c = 0; c < local.kappa(); ++c) m.set(gamma_c + r, c, local.matrix().get(r, c));
  return Protograph(std::move(m), gamma_c, local.gamma_l());
}

Protograph build_balanced(int gamma_l, int kappa, int nu) {
  if (gamma_l < 1) throw validation_error("gamma_l must be >= 1");
  if (kappa < 1) throw validation_error("kappa must be >= 1");
  if (nu < 0 || nu >= kappa) throw validation_error("nu must satisfy 0 <= nu < kappa");
  int a = nu / gamma_l;
  int b = nu % gamma_l;
  // [ ones(gamma_l, kappa-nu) | S(gamma_l, b) | Q(gamma_l, a; gamma_l-1) | ... | Q(gamma_l, a; 0) ]
  // S has zeros on the anti-diagonal (row s, column b-s-1); Q(.,a;i) is all
  // ones except row i, which is all-zero.
  BinaryMatrix m(gamma_l, kappa);
  for (int r = 0; r < gamma_l; ++r)
    for (int c = 0; c < kappa; ++c) m.set(r, c, 1);
  int off = kappa - nu;
  for (int s = 0; s < b; ++s) m.set(s, off + b - s - 1, 0);
  off += b;
  for (int q = gamma_l - 1; q >= 0; --q) {
    for (int c = 0; c < a; ++c) m.set(q, off + c, 0);
    off += a;
  }
  return Protograph(std::move(m), 0, gamma_l);  // constructor rejects degenerate cases
}

Protograph build_unbalanced(int gamma_l, int kappa, int nu) {
  if (gamma_l < 1) throw validation_error("gamma_l must be >= 1");
  if (kappa < 1) throw validation_error("kappa must be >= 1");
  if (nu < 0 || nu >= kappa) throw validation_error("nu must satisfy 0 <= nu < kappa");
  BinaryMatrix m(gamma_l, kappa);
  for (int r = 0; r < gamma_l; ++r)
    for (int c = 0; c < kappa; ++c) m.set(r, c, r == 0 && c >= kappa - nu ? 0 : 1);
  return Protograph(std::move(m), 0, gamma_l);
}

SplitProtograph split_by_partition(const Protograph& b, const PartitionMatrix& p) {
  if (b.gamma_c() != p.gamma_c() || b.gamma_l() != p.gamma_l() || b.kappa() != p.kappa())
    throw validation_error("protograph and partition shapes disagree");
  SplitProtograph out{BinaryMatrix(b.gamma(), b.kappa()), BinaryMatrix(b.gamma(), b.kappa())};
  for (int r = 0; r < b.gamma(); ++r) {
    for (int c = 0; c < b.kappa(); ++c) {
      PEntry e = p.matrix().get(r, c);
      if (e == PEntry::X) continue;
      if (!b.matrix().get(r, c))
        throw validation_error("partition assigns a circulant where the protograph has none");
      (e == PEntry::H0 ? out.b0 : out.b1).set(r, c, 1);
    }
  }
  return out;
}

BinaryMatrix replica_matrix(const BinaryMatrix& b0, const BinaryMatrix& b1) {
  if (b0.rows() != b1.rows() || b0.cols() != b1.cols())
    throw validation_error("replica components must have equal shapes");
  BinaryMatrix r(2 * b0.rows(), b0.cols());
  for (int i = 0; i < b0.rows(); ++i)
    for (int c = 0; c < b0.cols(); ++c) {
      if (b0.get(i, c) && b1.get(i, c))
        throw validation_error("replica components overlap at a circulant position");
      r.set(i, c, b0.get(i, c));
      r.set(b0.rows() + i, c, b1.get(i, c));
    }
  return r;
}

BinaryMatrix unroll_coupled_protograph(const BinaryMatrix& b0, const BinaryMatrix& b1,
                                       int coupling_length) {
  if (b0.rows() != b1.rows() || b0.cols() != b1.cols())
    throw validation_error("coupled components must have equal shapes");
  if (coupling_length < 1) throw validation_error("coupling length must be >= 1");
  int g = b0.rows(), k = b0.cols();
  BinaryMatrix m((coupling_length + 1) * g, coupling_length * k);
  for (int rep = 0; rep < coupling_length; ++rep)
    for (int i = 0; i < g; ++i)
      for (int c = 0; c < k; ++c) {
        if (b0.get(i, c)) m.set(rep * g + i, rep * k + c, 1);
        if (b1.get(i, c)) m.set((rep + 1) * g + i, rep * k + c, 1);
      }
  return m;
}

}  // namespace scldpc
