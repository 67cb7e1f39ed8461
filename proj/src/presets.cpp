#include "scldpc/presets.hpp"

#include "scldpc/optimizer.hpp"

namespace scldpc {

namespace {

// Frozen partitions over the coupling rows of the gamma_c=3, kappa=13 family.
BinaryMatrix chain_partition(const std::string& name) {
  if (name == "cv") return cutting_vector_partition(3, 13);
  if (name == "blind")
    return BinaryMatrix::from_rows({"0111111111111", "1000000111111", "0111111000000"});
  if (name == "aware")
    return BinaryMatrix::from_rows({"0101010101011", "1010101010100", "0010101010111"});
  throw validation_error("unknown chain partition: " + name);
}

PartitionMatrix empty_partition(int gamma_l, int kappa) {
  return PartitionMatrix(TernaryMatrix(gamma_l, kappa), 0, gamma_l);
}

Preset coupled_preset(std::string name, std::string description, Protograph b,
                      PartitionMatrix part, int p, int coupling_length) {
  return Preset{std::move(name), std::move(description), p, coupling_length, true, std::move(b),
                std::move(part)};
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"sc1", "sc2", "sc3", "sc4", "sc5", "lc1", "lc2", "tiny"};
}

Preset make_preset(const std::string& name) {
  const int p = 13, len = 10;
  if (name == "sc1")
    return coupled_preset("sc1", "all-ones protograph, cutting-vector partition",
                          regular_protograph(3, 3, 13),
                          embed_over_zero_locals(chain_partition("cv"), 3), p, len);
  if (name == "sc2")
    return coupled_preset("sc2", "all-ones protograph, locality-blind optimized partition",
                          regular_protograph(3, 3, 13),
                          embed_over_zero_locals(chain_partition("blind"), 3), p, len);
  if (name == "sc3")
    return coupled_preset("sc3", "all-ones protograph, locality-aware optimized partition",
                          regular_protograph(3, 3, 13),
                          embed_over_zero_locals(chain_partition("aware"), 3), p, len);
  if (name == "sc4") {
    Protograph local = build_balanced(3, 13, 10);
    return coupled_preset("sc4", "balanced local rows, locality-aware partition",
                          stack_coupling_rows(local, 3),
                          embed_over_local_protograph(chain_partition("aware"), local), p, len);
  }
  if (name == "sc5") {
    Protograph local = build_unbalanced(3, 13, 10);
    return coupled_preset("sc5", "unbalanced local rows, locality-aware partition",
                          stack_coupling_rows(local, 3),
                          embed_over_local_protograph(chain_partition("aware"), local), p, len);
  }
  if (name == "lc1")
    return Preset{"lc1", "balanced local block code", p, 1, false, build_balanced(3, 13, 10),
                  empty_partition(3, 13)};
  if (name == "lc2")
    return Preset{"lc2", "unbalanced local block code", p, 1, false, build_unbalanced(3, 13, 10),
                  empty_partition(3, 13)};
  if (name == "tiny")
    return coupled_preset("tiny", "minimal coupled chain for smoke runs",
                          regular_protograph(1, 1, 3),
                          embed_over_zero_locals(cutting_vector_partition(1, 3), 1), 3, 4);
  throw validation_error("unknown preset: " + name);
}

LiftedCode preset_code(const Preset& preset) {
  if (preset.coupled) return build_coupled(preset.b, preset.part, preset.p, preset.coupling_length);
  return ab_lift(preset.b, preset.p);
}

}  // namespace scldpc
