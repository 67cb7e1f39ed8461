#include "scldpc/lifting.hpp"

#include <string>

namespace scldpc {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_lift_params(const Protograph& b, int p) {
  if (!is_prime(p))
    throw validation_error("lift size p must be prime, got " + std::to_string(p));
  if (p < b.gamma() || p < b.kappa())
    throw validation_error("lift size p must be >= max(gamma, kappa)");
}

// Adds the circulant for protograph edge (g, j) into row block rb / column
// block (sub-block rep, group j).
void add_circulant(SparseBinaryMatrix& h, int gamma, int kappa, int p, int rb, int rep, int g,
                   int j) {
  int row0 = (rb * gamma + g) * p;
  int col0 = (rep * kappa + j) * p;
  int shift = (g * j) % p;
  for (int s = 0; s < p; ++s) h.add_edge(row0 + s, col0 + (s + shift) % p);
}

}  // namespace

std::pair<int, int> LiftedCode::lcn_row_range(int subblock) const {
  if (subblock < 0 || subblock >= coupling_length)
    throw validation_error("sub-block index out of range");
  if (gamma_l == 0) throw validation_error("code has no local rows");
  int first = (subblock * gamma() + gamma_c) * p;
  return {first, first + gamma_l * p};
}

LiftedCode ab_lift(const Protograph& b, int p) {
  check_lift_params(b, p);
  LiftedCode code;
  code.p = p;
  code.gamma_c = b.gamma_c();
  code.gamma_l = b.gamma_l();
  code.kappa = b.kappa();
  code.h = SparseBinaryMatrix(b.gamma() * p, b.kappa() * p);
  for (int g = 0; g < b.gamma(); ++g)
    for (int j = 0; j < b.kappa(); ++j)
      if (b.matrix().get(g, j)) add_circulant(code.h, b.gamma(), b.kappa(), p, 0, 0, g, j);
  code.h.sort_adjacency();
  return code;
}

LiftedCode build_coupled(const Protograph& b, const PartitionMatrix& part, int p,
                         int coupling_length) {
  check_lift_params(b, p);
  if (coupling_length < 1) throw validation_error("coupling length must be >= 1");
  SplitProtograph split = split_by_partition(b, part);

  LiftedCode code;
  code.p = p;
  code.gamma_c = b.gamma_c();
  code.gamma_l = b.gamma_l();
  code.kappa = b.kappa();
  code.coupling_length = coupling_length;
  code.memory = 1;
  int gamma = b.gamma();
  code.h = SparseBinaryMatrix((coupling_length + 1) * gamma * p, coupling_length * b.kappa() * p);
  for (int rep = 0; rep < coupling_length; ++rep)
    for (int g = 0; g < gamma; ++g)
      for (int j = 0; j < b.kappa(); ++j) {
        if (split.b0.get(g, j)) add_circulant(code.h, gamma, b.kappa(), p, rep, rep, g, j);
        if (split.b1.get(g, j)) add_circulant(code.h, gamma, b.kappa(), p, rep + 1, rep, g, j);
      }
  code.h.sort_adjacency();
  return code;
}

SparseBinaryMatrix extract_local_code(const LiftedCode& code, int subblock) {
  auto [first, last] = code.lcn_row_range(subblock);
  int col0 = subblock * code.block_cols();
  SparseBinaryMatrix local(code.gamma_l * code.p, code.block_cols());
  for (int r = first; r < last; ++r) {
    for (int c : code.h.row_adj[r]) {
      if (c < col0 || c >= col0 + code.block_cols())
        throw validation_error("local row has support outside its sub-block");
      int j = (c - col0) / code.p;
      // Undo the gamma_c*j part of the shift so row indices start at zero,
      // matching ab_lift of the local rows alone.
      int cc = (c - col0) % code.p;
      int canon = (cc - (code.gamma_c * j) % code.p + code.p) % code.p;
      local.add_edge(r - first, j * code.p + canon);
    }
  }
  local.sort_adjacency();
  return local;
}

}  // namespace scldpc
