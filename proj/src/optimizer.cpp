#include "scldpc/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "scldpc/overlap.hpp"

namespace scldpc {

BinaryMatrix cutting_vector_partition(int gamma_c, int kappa) {
  if (gamma_c < 1) throw validation_error("gamma_c must be >= 1");
  int q = kappa / (gamma_c + 1);
  if (q < 1)
    throw validation_error("kappa must be at least gamma_c + 1 for a cutting vector");
  BinaryMatrix p(gamma_c, kappa);
  for (int i = 0; i < gamma_c; ++i)
    for (int j = (i + 1) * q; j < kappa; ++j) p.set(i, j, 1);
  return p;
}

std::map<uint32_t, int> independent_overlaps_of(const BinaryMatrix& p_c) {
  int gamma_c = p_c.rows();
  if (gamma_c < 1 || gamma_c > 16) throw validation_error("p_c needs 1..16 rows");
  std::map<uint32_t, int> t;
  for (uint32_t s = 1; s < (uint32_t(1) << gamma_c); ++s) {
    int cnt = 0;
    for (int j = 0; j < p_c.cols(); ++j) {
      bool all_h0 = true;
      for (int i = 0; i < gamma_c; ++i)
        if ((s >> i & 1) && p_c.get(i, j)) { all_h0 = false; break; }
      cnt += all_h0;
    }
    t[s] = cnt;
  }
  return t;
}

namespace {

// Column types are subsets of coupling rows sent to H1 (bit i = row i).
// t(S) = sum of counts over types disjoint from S, so the type counts follow
// from the overlap vector by Moebius inversion over the complement lattice.
std::vector<long long> type_counts_from_overlaps(const std::function<long long(uint32_t)>& t,
                                                 int gamma_c) {
  uint32_t full = (uint32_t(1) << gamma_c) - 1;
  std::vector<long long> n(full + 1, 0);
  for (uint32_t type = 0; type <= full; ++type) {
    long long v = 0;
    uint32_t f = type;
    while (true) {  // iterate subsets f of type
      int sign = (std::popcount(type) - std::popcount(f)) % 2 ? -1 : 1;
      v += sign * t(full & ~f);
      if (f == 0) break;
      f = (f - 1) & type;
    }
    n[type] = v;
  }
  return n;
}

// Canonical column order: sort H1-sets with row 0 most significant.
uint32_t canonical_key(uint32_t type, int gamma_c) {
  uint32_t key = 0;
  for (int i = 0; i < gamma_c; ++i)
    if (type >> i & 1) key |= uint32_t(1) << (gamma_c - 1 - i);
  return key;
}

BinaryMatrix partition_from_type_counts(const std::vector<long long>& n, int gamma_c, int kappa) {
  std::vector<uint32_t> types;
  for (uint32_t type = 0; type < n.size(); ++type) types.push_back(type);
  std::sort(types.begin(), types.end(), [&](uint32_t a, uint32_t b) {
    return canonical_key(a, gamma_c) < canonical_key(b, gamma_c);
  });
  BinaryMatrix p(gamma_c, kappa);
  int j = 0;
  for (uint32_t type : types)
    for (long long rep = 0; rep < n[type]; ++rep, ++j)
      for (int i = 0; i < gamma_c; ++i)
        if (type >> i & 1) p.set(i, j, 1);
  if (j != kappa) throw validation_error("overlap vector does not describe kappa columns");
  return p;
}

// 6-cycle count of a small graph given as row bitmasks (<= 64 columns).
long long cycles6_of_masks(const std::vector<uint64_t>& rows) {
  auto pos = [](long long v) { return v > 0 ? v : 0; };
  int n = static_cast<int>(rows.size());
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    if (!rows[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      long long tij = std::popcount(rows[i] & rows[j]);
      if (!tij) continue;
      for (int k = j + 1; k < n; ++k) {
        long long tik = std::popcount(rows[i] & rows[k]);
        if (!tik) continue;
        long long tjk = std::popcount(rows[j] & rows[k]);
        if (!tjk) continue;
        long long ta = std::popcount(rows[i] & rows[j] & rows[k]);
        total += ta * pos(ta - 1) * pos(tjk - 2) + ta * (tik - ta) * pos(tjk - 1) +
                 (tij - ta) * ta * pos(tjk - 1) + (tij - ta) * (tik - ta) * tjk;
      }
    }
  }
  return total;
}

// Scores a column-type assignment by the chain 6-cycle count
// L*F1 + (L-1)*F2, evaluated on one- and two-replica windows. Local rows ride
// along as all-ones in H0.
class WindowScorer {
 public:
  WindowScorer(int gamma_c, int gamma_l, int kappa, int coupling_length)
      : gc_(gamma_c), gl_(gamma_l), kappa_(kappa), len_(coupling_length) {
    if (kappa > 32) throw validation_error("optimizer supports kappa <= 32");
    ones_ = (kappa == 32) ? 0xffffffffull : ((uint64_t(1) << kappa) - 1);
  }

  long long score(const std::vector<long long>& type_counts) {
    build_masks(type_counts);
    long long f1 = cycles6_of_masks(w1_);
    long long n2 = cycles6_of_masks(w2_);
    return static_cast<long long>(len_) * f1 + static_cast<long long>(len_ - 1) * (n2 - 2 * f1);
  }

 private:
  void build_masks(const std::vector<long long>& type_counts) {
    // Give each type a contiguous run of column positions; cycle counts do
    // not depend on the column order.
    std::vector<uint64_t> b0(gc_, 0), b1(gc_, 0);
    int j = 0;
    for (uint32_t type = 0; type < type_counts.size(); ++type) {
      long long cnt = type_counts[type];
      if (!cnt) continue;
      uint64_t run = ((cnt == 64 ? ~uint64_t(0) : (uint64_t(1) << cnt) - 1)) << j;
      for (int i = 0; i < gc_; ++i) ((type >> i & 1) ? b1[i] : b0[i]) |= run;
      j += static_cast<int>(cnt);
    }
    w1_.clear();
    for (int i = 0; i < gc_; ++i) w1_.push_back(b0[i]);
    for (int i = 0; i < gl_; ++i) w1_.push_back(ones_);
    for (int i = 0; i < gc_; ++i) w1_.push_back(b1[i]);
    // B1 local rows are all-zero; leave them out.
    w2_.clear();
    for (int i = 0; i < gc_; ++i) w2_.push_back(b0[i]);
    for (int i = 0; i < gl_; ++i) w2_.push_back(ones_);
    for (int i = 0; i < gc_; ++i) w2_.push_back(b1[i] | (b0[i] << kappa_));
    for (int i = 0; i < gl_; ++i) w2_.push_back(ones_ << kappa_);
    for (int i = 0; i < gc_; ++i) w2_.push_back(b1[i] << kappa_);
  }

  int gc_, gl_, kappa_, len_;
  uint64_t ones_;
  std::vector<uint64_t> w1_, w2_;
};

// Nested-loop enumeration of overlap vectors in canonical (size, mask) order,
// ascending values, which makes the first minimum the lexicographic
// tie-break winner. Prunes by monotonicity (upper bound from immediate
// subsets) and the pairwise intersection bound; leaves are kept only when the
// Moebius column-type counts all come out non-negative.
void enumerate_overlap_vectors(
    int gamma_c, int kappa,
    const std::function<void(const std::vector<int>&, const std::vector<long long>&)>& yield) {
  std::vector<uint32_t> subsets = independent_overlap_set(gamma_c, 0);
  std::vector<int> index(uint32_t(1) << gamma_c, -1);
  for (size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);
  std::vector<int> t(subsets.size(), 0);
  auto t_of = [&](uint32_t mask) { return mask == 0 ? kappa : t[index[mask]]; };

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == subsets.size()) {
      auto n = type_counts_from_overlaps([&](uint32_t m) { return t_of(m); }, gamma_c);
      for (long long v : n)
        if (v < 0) return;
      yield(t, n);
      return;
    }
    uint32_t s = subsets[idx];
    int ub = kappa, lb = 0;
    for (int j = 0; j < gamma_c; ++j)
      if (s >> j & 1) ub = std::min(ub, t_of(s & ~(uint32_t(1) << j)));
    for (int j1 = 0; j1 < gamma_c; ++j1)
      for (int j2 = j1 + 1; j2 < gamma_c; ++j2)
        if ((s >> j1 & 1) && (s >> j2 & 1)) {
          uint32_t m1 = s & ~(uint32_t(1) << j1), m2 = s & ~(uint32_t(1) << j2);
          lb = std::max(lb, t_of(m1) + t_of(m2) - t_of(m1 & m2));
        }
    for (int v = lb; v <= ub; ++v) {
      t[idx] = v;
      rec(idx + 1);
    }
  };
  rec(0);
}

struct SearchResult {
  bool found = false;
  long long score = 0;
  std::vector<int> t;
  std::vector<long long> type_counts;
};

SearchResult search_partitions(int gamma_c, int gamma_l, int kappa, int coupling_length) {
  if (gamma_c < 1 || gamma_c > 8) throw validation_error("optimizer supports gamma_c in [1, 8]");
  if (gamma_l < 0) throw validation_error("gamma_l must be >= 0");
  if (kappa < 1) throw validation_error("kappa must be >= 1");
  if (coupling_length < 2) throw validation_error("coupling length must be >= 2");
  WindowScorer scorer(gamma_c, gamma_l, kappa, coupling_length);
  SearchResult best;
  enumerate_overlap_vectors(gamma_c, kappa,
                            [&](const std::vector<int>& t, const std::vector<long long>& n) {
                              long long s = scorer.score(n);
                              if (!best.found || s < best.score) {
                                best.found = true;
                                best.score = s;
                                best.t = t;
                                best.type_counts = n;
                              }
                            });
  if (!best.found) throw validation_error("no feasible partition found");
  return best;
}

PartitionCandidate finish_candidate(const SearchResult& res, int gamma_c, int gamma_l, int kappa,
                                    int coupling_length) {
  PartitionCandidate cand;
  cand.p_c = partition_from_type_counts(res.type_counts, gamma_c, kappa);
  std::vector<uint32_t> subsets = independent_overlap_set(gamma_c, 0);
  for (size_t i = 0; i < subsets.size(); ++i) cand.overlaps[subsets[i]] = res.t[i];

  Protograph b = regular_protograph(gamma_c, gamma_l, kappa);
  SplitProtograph split = split_by_partition(b, embed_over_zero_locals(cand.p_c, gamma_l));
  cand.cycles6 = count_coupled_cycles(split.b0, split.b1, coupling_length, 6);
  cand.cycles8 = count_coupled_cycles(split.b0, split.b1, coupling_length, 8);
  cand.objective = cand.cycles6.total();
  return cand;
}

}  // namespace

BinaryMatrix overlaps_to_partition(const std::map<uint32_t, int>& target, int gamma_c,
                                   int kappa) {
  if (gamma_c < 1 || gamma_c > 16) throw validation_error("gamma_c must be in [1, 16]");
  std::vector<uint32_t> subsets = independent_overlap_set(gamma_c, 0);
  if (target.size() != subsets.size())
    throw validation_error("overlap vector must cover every non-empty coupling-row subset");
  auto t_of = [&](uint32_t mask) -> long long {
    if (mask == 0) return kappa;
    auto it = target.find(mask);
    if (it == target.end())
      throw validation_error("overlap vector must cover every non-empty coupling-row subset");
    return it->second;
  };
  auto n = type_counts_from_overlaps(t_of, gamma_c);
  for (long long v : n)
    if (v < 0) throw validation_error("overlap vector is not realizable by any partition");
  return partition_from_type_counts(n, gamma_c, kappa);
}

PartitionCandidate optimize_locality_aware(int gamma_c, int gamma_l, int kappa,
                                           int coupling_length) {
  SearchResult res = search_partitions(gamma_c, gamma_l, kappa, coupling_length);
  PartitionCandidate cand = finish_candidate(res, gamma_c, gamma_l, kappa, coupling_length);
  cand.search_objective = res.score;
  if (cand.objective != res.score)
    throw std::logic_error("window scorer and chain recount disagree");
  return cand;
}

PartitionCandidate optimize_locality_blind(int gamma_c, int gamma_l, int kappa,
                                           int coupling_length) {
  SearchResult res = search_partitions(gamma_c, 0, kappa, coupling_length);
  PartitionCandidate cand = finish_candidate(res, gamma_c, gamma_l, kappa, coupling_length);
  cand.search_objective = res.score;
  return cand;
}

PartitionMatrix embed_over_zero_locals(const BinaryMatrix& p_c, int gamma_l) {
  if (gamma_l < 0) throw validation_error("gamma_l must be >= 0");
  TernaryMatrix m(p_c.rows() + gamma_l, p_c.cols());
  for (int i = 0; i < p_c.rows(); ++i)
    for (int j = 0; j < p_c.cols(); ++j)
      m.set(i, j, p_c.get(i, j) ? PEntry::H1 : PEntry::H0);
  return PartitionMatrix(std::move(m), p_c.rows(), gamma_l);
}

PartitionMatrix embed_over_local_protograph(const BinaryMatrix& p_c, const Protograph& local) {
  if (local.gamma_c() != 0) throw validation_error("local protograph must have no coupling rows");
  if (local.kappa() != p_c.cols())
    throw validation_error("partition and local protograph widths disagree");
  TernaryMatrix m(p_c.rows() + local.gamma_l(), p_c.cols());
  for (int i = 0; i < p_c.rows(); ++i)
    for (int j = 0; j < p_c.cols(); ++j)
      m.set(i, j, p_c.get(i, j) ? PEntry::H1 : PEntry::H0);
  for (int i = 0; i < local.gamma_l(); ++i)
    for (int j = 0; j < p_c.cols(); ++j)
      m.set(p_c.rows() + i, j, local.matrix().get(i, j) ? PEntry::H0 : PEntry::X);
  return PartitionMatrix(std::move(m), p_c.rows(), local.gamma_l());
}

}  // namespace scldpc
