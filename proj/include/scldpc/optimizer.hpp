#pragma once

#include <map>
#include <vector>

#include "scldpc/cycles.hpp"
#include "scldpc/matrix.hpp"
#include "scldpc/protograph.hpp"

namespace scldpc {

// Coupling-row partition candidate. p_c is gamma_c x kappa with 1 meaning the
// circulant moves to H1. objective is the 6-cycle count of the coupled code
// the candidate induces (including local rows, when present).
struct PartitionCandidate {
  BinaryMatrix p_c;
  long long objective = 0;
  long long search_objective = 0;  // what the search itself minimized
  CoupledCycleCount cycles6;
  CoupledCycleCount cycles8;                // reported, not optimized
  std::map<uint32_t, int> overlaps;         // independent overlap vector of p_c
};

// Baseline partition: row i sends columns j >= zeta_i to H1 with the uniform
// cutting vector zeta_i = (i+1) * floor(kappa / (gamma_c + 1)).
BinaryMatrix cutting_vector_partition(int gamma_c, int kappa);

// Independent overlap vector of a coupling partition: for each non-empty
// subset S of coupling rows, the number of columns every row of S keeps in H0.
std::map<uint32_t, int> independent_overlaps_of(const BinaryMatrix& p_c);

// Realizes a partition with the requested overlap vector (keys must be
// exactly independent_overlap_set(gamma_c, 0)), or fails if none exists.
// Columns are emitted in canonical order: sorted by H1-row set, row 0 most
// significant, which is also the search's tie-break order.
BinaryMatrix overlaps_to_partition(const std::map<uint32_t, int>& target, int gamma_c, int kappa);

// Exhaustive search over independent overlap vectors (nested loops with
// monotonicity and intersection-bound pruning; infeasible vectors are
// rejected by the column-type counts turning negative) minimizing the
// coupled-chain 6-cycle count. Local rows, if any, are carried through the
// scoring with an all-zero partition. Ties break to the lexicographically
// smallest overlap vector, then the canonical column order makes p_c unique.
PartitionCandidate optimize_locality_aware(int gamma_c, int gamma_l, int kappa,
                                           int coupling_length);
// Same search run as if the local rows did not exist (gamma_l = 0), after
// which the winner is embedded above an all-zero local partition and
// re-scored against the full code; `objective` is the re-scored value and
// `search_objective` the locality-blind one.
PartitionCandidate optimize_locality_blind(int gamma_c, int gamma_l, int kappa,
                                           int coupling_length);

// Partition assembly: coupling rows from p_c over gamma_l all-zero local rows
// (full all-ones local code)...
PartitionMatrix embed_over_zero_locals(const BinaryMatrix& p_c, int gamma_l);
// ...or over a structured local protograph: 0 where the local code has a
// circulant, X where it has none.
PartitionMatrix embed_over_local_protograph(const BinaryMatrix& p_c, const Protograph& local);

}  // namespace scldpc
