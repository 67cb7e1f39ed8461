#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scldpc/cycles.hpp"
#include "scldpc/exit.hpp"
#include "scldpc/io.hpp"
#include "scldpc/lifting.hpp"
#include "scldpc/optimizer.hpp"
#include "scldpc/presets.hpp"
#include "scldpc/protograph.hpp"
#include "scldpc/simulate.hpp"

using nlohmann::json;
using namespace scldpc;

namespace {

struct GlobalOpts {
  std::string out_dir;
  std::string format = "text";
  uint64_t seed = 1;
  int threads = 1;
};

void ensure_out_dir(const std::string& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw validation_error("cannot create output directory: " + dir);
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void emit(const GlobalOpts& g, const json& result, const std::string& text) {
  if (g.format == "json")
    std::cout << result.dump(2) << "\n";
  else
    std::cout << text;
}

std::string partition_rows_text(const BinaryMatrix& p) {
  std::string out;
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.cols(); ++j) out.push_back(p.get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

json overlaps_json(const std::map<uint32_t, int>& t) {
  json j = json::object();
  for (const auto& [mask, val] : t) {
    std::string rows;
    for (int i = 0; i < 16; ++i)
      if (mask >> i & 1) rows += std::to_string(i);
    j["t_" + rows] = val;
  }
  return j;
}

double sigma_to_ebn0_db(double sigma, double rate) {
  return 10.0 * std::log10(1.0 / (2.0 * rate * sigma * sigma));
}

// ---- construct ----------------------------------------------------------

int cmd_construct(const GlobalOpts& g, const std::string& preset_name,
                  const std::string& local_kind, int gamma_l, int kappa, int nu) {
  json result;
  std::string text;
  if (!preset_name.empty()) {
    Preset pr = make_preset(preset_name);
    result["name"] = pr.name;
    result["description"] = pr.description;
    result["p"] = pr.p;
    result["coupling_length"] = pr.coupling_length;
    result["coupled"] = pr.coupled;
    result["protograph"] = protograph_to_json(pr.b);
    if (pr.coupled) result["partition"] = partition_to_json(pr.part);
    text = "preset " + pr.name + ": " + pr.description + "\n" + format_protograph(pr.b);
    if (pr.coupled) text += format_partition(pr.part);
    if (!g.out_dir.empty()) {
      ensure_out_dir(g.out_dir);
      write_text_file(join_path(g.out_dir, pr.name + "_protograph.txt"), format_protograph(pr.b));
      if (pr.coupled)
        write_text_file(join_path(g.out_dir, pr.name + "_partition.txt"), format_partition(pr.part));
    }
  } else {
    Protograph b = local_kind == "balanced" ? build_balanced(gamma_l, kappa, nu)
                                            : build_unbalanced(gamma_l, kappa, nu);
    result["protograph"] = protograph_to_json(b);
    text = format_protograph(b);
    if (!g.out_dir.empty()) {
      ensure_out_dir(g.out_dir);
      write_text_file(join_path(g.out_dir, local_kind + "_local_protograph.txt"),
                      format_protograph(b));
    }
  }
  emit(g, result, text);
  return 0;
}

// ---- optimize -----------------------------------------------------------

int cmd_optimize(const GlobalOpts& g, const std::string& mode, int gamma_c, int gamma_l,
                 int kappa, int coupling_length) {
  json result;
  std::string text;
  if (mode == "cv") {
    BinaryMatrix pc = cutting_vector_partition(gamma_c, kappa);
    Protograph b = regular_protograph(gamma_c, gamma_l, kappa);
    SplitProtograph split = split_by_partition(b, embed_over_zero_locals(pc, gamma_l));
    CoupledCycleCount c6 = count_coupled_cycles(split.b0, split.b1, coupling_length, 6);
    result["mode"] = mode;
    result["objective"] = c6.total();
    result["partition_rows"] = json::array();
    for (int i = 0; i < pc.rows(); ++i) {
      std::string row;
      for (int j = 0; j < pc.cols(); ++j) row.push_back(pc.get(i, j) ? '1' : '0');
      result["partition_rows"].push_back(row);
    }
    result["overlaps"] = overlaps_json(independent_overlaps_of(pc));
    text = "cutting-vector partition, chain 6-cycles " + std::to_string(c6.total()) + "\n" +
           partition_rows_text(pc);
    if (!g.out_dir.empty()) {
      ensure_out_dir(g.out_dir);
      write_text_file(join_path(g.out_dir, "partition_cv.txt"),
                      format_partition(embed_over_zero_locals(pc, gamma_l)));
    }
    emit(g, result, text);
    return 0;
  }
  PartitionCandidate cand = mode == "aware"
                                ? optimize_locality_aware(gamma_c, gamma_l, kappa, coupling_length)
                                : optimize_locality_blind(gamma_c, gamma_l, kappa, coupling_length);
  result["mode"] = mode;
  result["objective"] = cand.objective;
  result["search_objective"] = cand.search_objective;
  result["chain_cycles6"] = cand.cycles6.total();
  result["chain_cycles8"] = cand.cycles8.total();
  result["partition_rows"] = json::array();
  for (int i = 0; i < cand.p_c.rows(); ++i) {
    std::string row;
    for (int j = 0; j < cand.p_c.cols(); ++j) row.push_back(cand.p_c.get(i, j) ? '1' : '0');
    result["partition_rows"].push_back(row);
  }
  result["overlaps"] = overlaps_json(cand.overlaps);
  text = "locality-" + std::string(mode == "aware" ? "aware" : "blind") +
         " optimum, chain 6-cycles " + std::to_string(cand.objective) + " (search objective " +
         std::to_string(cand.search_objective) + ")\n" + partition_rows_text(cand.p_c);
  if (!g.out_dir.empty()) {
    ensure_out_dir(g.out_dir);
    write_text_file(join_path(g.out_dir, "partition_" + mode + ".txt"),
                    format_partition(embed_over_zero_locals(cand.p_c, gamma_l)));
  }
  emit(g, result, text);
  return 0;
}

// ---- lift ---------------------------------------------------------------

int cmd_lift(const GlobalOpts& g, const std::string& preset_name) {
  Preset pr = make_preset(preset_name);
  LiftedCode code = preset_code(pr);
  json geom = code_geometry_json(code);
  geom["preset"] = pr.name;
  std::string text = "lifted " + pr.name + ": " + std::to_string(code.h.rows) + " x " +
                     std::to_string(code.h.cols) + " parity-check, " +
                     std::to_string(code.h.edge_count()) + " edges, design rate " +
                     std::to_string(code.design_rate()) + "\n";
  if (!g.out_dir.empty()) {
    ensure_out_dir(g.out_dir);
    write_text_file(join_path(g.out_dir, pr.name + ".alist"), to_alist(code.h));
    write_text_file(join_path(g.out_dir, pr.name + "_geometry.json"), geom.dump(2) + "\n");
    text += "wrote " + join_path(g.out_dir, pr.name + ".alist") + "\n";
  }
  emit(g, geom, text);
  return 0;
}

// ---- cycles -------------------------------------------------------------

int cmd_cycles(const GlobalOpts& g, const std::string& preset_name, int length,
               const std::string& graph) {
  Preset pr = make_preset(preset_name);
  json result;
  result["preset"] = pr.name;
  result["length"] = length;
  result["graph"] = graph;
  std::string text;
  if (graph == "proto") {
    if (pr.coupled) {
      SplitProtograph split = split_by_partition(pr.b, pr.part);
      CoupledCycleCount c = count_coupled_cycles(split.b0, split.b1, pr.coupling_length, length);
      result["single_window"] = c.f1;
      result["two_window"] = c.f2;
      result["three_window"] = c.f3;
      result["count"] = c.total();
      text = pr.name + " protograph chain " + std::to_string(length) + "-cycles: " +
             std::to_string(c.total()) + " (window terms " + std::to_string(c.f1) + ", " +
             std::to_string(c.f2) + ", " + std::to_string(c.f3) + ")\n";
    } else {
      long long c = enumerate_cycles(pr.b.matrix(), length, g.threads);
      result["count"] = c;
      text = pr.name + " protograph " + std::to_string(length) + "-cycles: " + std::to_string(c) +
             "\n";
    }
  } else {
    LiftedCode code = preset_code(pr);
    long long c = enumerate_cycles(code.h, length, g.threads);
    result["count"] = c;
    text = pr.name + " lifted " + std::to_string(length) + "-cycles: " + std::to_string(c) + "\n";
  }
  emit(g, result, text);
  return 0;
}

// ---- threshold ----------------------------------------------------------

int cmd_threshold(const GlobalOpts& g, const std::string& preset_name, double tol) {
  Preset pr = make_preset(preset_name);
  BinaryMatrix graph = [&] {
    if (!pr.coupled) return pr.b.matrix();
    SplitProtograph split = split_by_partition(pr.b, pr.part);
    return unroll_coupled_protograph(split.b0, split.b1, pr.coupling_length);
  }();
  ThresholdResult th = compute_threshold(SparseBinaryMatrix::from_dense(graph), tol);
  double rate = 1.0 - static_cast<double>(graph.rows()) / graph.cols();
  json result;
  result["preset"] = pr.name;
  result["sigma_star"] = th.sigma_star;
  result["ebn0_star_db"] = sigma_to_ebn0_db(th.sigma_star, rate);
  result["design_rate"] = rate;
  result["probes"] = th.probe_iters.size();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s threshold sigma* = %.4f (Eb/N0* = %.3f dB at rate %.4f)\n",
                pr.name.c_str(), th.sigma_star, sigma_to_ebn0_db(th.sigma_star, rate), rate);
  emit(g, result, buf);
  return 0;
}

// ---- simulate -----------------------------------------------------------

int cmd_simulate(const GlobalOpts& g, const std::string& preset_name, std::vector<double> snrs,
                 std::vector<double> sigmas, long long min_errors, long long max_frames,
                 long long batch, int max_iters, bool esn0, const std::string& out_file) {
  Preset pr = make_preset(preset_name);
  LiftedCode code = preset_code(pr);
  SimConfig cfg;
  cfg.snr_db = std::move(snrs);
  cfg.sigma_override = std::move(sigmas);
  cfg.convention = esn0 ? SnrConvention::esn0 : SnrConvention::ebn0;
  cfg.max_bp_iters = max_iters;
  cfg.min_frame_errors = min_errors;
  cfg.max_frames = max_frames;
  cfg.batch = batch;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  std::vector<BerPoint> pts = simulate_ber(code, cfg);

  json params;
  params["preset"] = pr.name;
  params["snr_db"] = cfg.snr_db;
  params["convention"] =
      cfg.sigma_override.empty() ? (esn0 ? "esn0" : "ebn0") : "calibrated-sigma";
  if (!cfg.sigma_override.empty()) params["sigma"] = cfg.sigma_override;
  params["max_bp_iters"] = cfg.max_bp_iters;
  params["min_frame_errors"] = cfg.min_frame_errors;
  params["max_frames"] = cfg.max_frames;
  params["batch"] = cfg.batch;
  json manifest = make_manifest("simulate", cfg.seed, params);
  std::string hash = manifest_hash_hex(manifest);
  std::string mode = pr.coupled ? "global" : "local";

  json result;
  result["preset"] = pr.name;
  result["mode"] = mode;
  result["manifest"] = manifest;
  result["manifest_hash"] = hash;
  result["points"] = json::array();
  std::string text;
  char buf[200];
  for (const BerPoint& p : pts) {
    json jp;
    jp["snr_db"] = p.snr_db;
    jp["sigma"] = p.sigma;
    jp["ber"] = p.ber;
    jp["fer"] = p.fer;
    jp["std_err"] = p.std_err;
    jp["frames"] = p.frames;
    jp["bit_errors"] = p.bit_errors;
    jp["frame_errors"] = p.frame_errors;
    result["points"].push_back(jp);
    std::snprintf(buf, sizeof buf,
                  "%s %.2f dB: ber %.6e fer %.6e (frames %lld, frame errors %lld)\n",
                  pr.name.c_str(), p.snr_db, p.ber, p.fer, static_cast<long long>(p.frames),
                  static_cast<long long>(p.frame_errors));
    text += buf;
  }
  if (!out_file.empty()) {
    std::string path = g.out_dir.empty() ? out_file : join_path(g.out_dir, out_file);
    ensure_out_dir(g.out_dir);
    write_text_file(path, ber_csv(pts, mode, pr.name, hash));
    std::string mpath = path + ".manifest.json";
    write_text_file(mpath, manifest.dump(2) + "\n");
    text += "wrote " + path + "\n";
  }
  emit(g, result, text);
  return 0;
}

// ---- pipeline -----------------------------------------------------------

int cmd_pipeline(const GlobalOpts& g, const std::string& preset_name, bool with_sim,
                 std::vector<double> snrs, long long min_errors, long long max_frames) {
  Preset pr = make_preset(preset_name);
  json row;
  row["preset"] = pr.name;
  row["description"] = pr.description;

  long long proto6, proto8;
  if (pr.coupled) {
    SplitProtograph split = split_by_partition(pr.b, pr.part);
    proto6 = count_coupled_cycles(split.b0, split.b1, pr.coupling_length, 6).total();
    proto8 = count_coupled_cycles(split.b0, split.b1, pr.coupling_length, 8).total();
  } else {
    proto6 = enumerate_cycles(pr.b.matrix(), 6, g.threads);
    proto8 = enumerate_cycles(pr.b.matrix(), 8, g.threads);
  }
  row["proto_cycles6"] = proto6;
  row["proto_cycles8"] = proto8;

  LiftedCode code = preset_code(pr);
  long long lifted6 = enumerate_cycles(code.h, 6, g.threads);
  long long lifted8 = enumerate_cycles(code.h, 8, g.threads);
  row["lifted_cycles6"] = lifted6;
  row["lifted_cycles8"] = lifted8;

  BinaryMatrix graph = [&] {
    if (!pr.coupled) return pr.b.matrix();
    SplitProtograph split = split_by_partition(pr.b, pr.part);
    return unroll_coupled_protograph(split.b0, split.b1, pr.coupling_length);
  }();
  ThresholdResult th = compute_threshold(SparseBinaryMatrix::from_dense(graph), 1e-4);
  row["sigma_star"] = th.sigma_star;

  std::string text;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "%s: proto c6 %lld, lifted c6 %lld, proto c8 %lld, lifted c8 %lld, sigma* %.4f\n",
                pr.name.c_str(), proto6, lifted6, proto8, lifted8, th.sigma_star);
  text += buf;

  if (with_sim) {
    SimConfig cfg;
    cfg.snr_db = snrs.empty() ? std::vector<double>{5.0} : std::move(snrs);
    cfg.min_frame_errors = min_errors;
    cfg.max_frames = max_frames;
    cfg.seed = g.seed;
    cfg.threads = g.threads;
    std::vector<BerPoint> pts = simulate_ber(code, cfg);
    row["ber"] = json::array();
    for (const BerPoint& p : pts) {
      json jp;
      jp["snr_db"] = p.snr_db;
      jp["ber"] = p.ber;
      jp["frames"] = p.frames;
      row["ber"].push_back(jp);
      std::snprintf(buf, sizeof buf, "  %.2f dB: ber %.6e (frames %lld)\n", p.snr_db, p.ber,
                    static_cast<long long>(p.frames));
      text += buf;
    }
  }
  if (!g.out_dir.empty()) {
    ensure_out_dir(g.out_dir);
    write_text_file(join_path(g.out_dir, pr.name + "_summary.json"), row.dump(2) + "\n");
  }
  emit(g, row, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"design and evaluation toolkit for coupled LDPC codes with sub-block locality"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global options after the subcommand too
  GlobalOpts g;
  app.add_option("--out-dir", g.out_dir, "directory for generated files");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "base RNG seed");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);

  std::string preset, local_kind = "balanced", mode = "aware", graph = "proto", out_file;
  int gamma_c = 3, gamma_l = 3, kappa = 13, nu = 10, coupling_length = 10, length = 6;
  int max_iters = 50;
  long long min_errors = 50, max_frames = 2'000'000, batch = 200;
  double tol = 1e-4;
  bool esn0 = false, with_sim = false;
  std::vector<double> snrs, sigmas;

  auto* c_construct = app.add_subcommand("construct", "emit a protograph and partition");
  c_construct->add_option("--preset", preset, "preset name")
      ->check(CLI::IsMember(preset_names()));
  c_construct->add_option("--local", local_kind, "standalone local construction")
      ->check(CLI::IsMember({"balanced", "unbalanced"}));
  c_construct->add_option("--gamma-l", gamma_l, "local rows");
  c_construct->add_option("--kappa", kappa, "columns per sub-block");
  c_construct->add_option("--nu", nu, "zeros per local construction");

  auto* c_opt = app.add_subcommand("optimize", "search partitions minimizing chain 6-cycles");
  c_opt->add_option("--mode", mode, "aware | blind | cv")
      ->check(CLI::IsMember({"aware", "blind", "cv"}));
  c_opt->add_option("--gamma-c", gamma_c, "coupling rows");
  c_opt->add_option("--gamma-l", gamma_l, "local rows");
  c_opt->add_option("--kappa", kappa, "columns per sub-block");
  c_opt->add_option("--coupling-length", coupling_length, "replicas in the chain");

  auto* c_lift = app.add_subcommand("lift", "emit the lifted parity-check matrix");
  c_lift->add_option("--preset", preset, "preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));

  auto* c_cycles = app.add_subcommand("cycles", "count short cycles");
  c_cycles->add_option("--preset", preset, "preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  c_cycles->add_option("--length", length, "cycle length")->check(CLI::IsMember({4, 6, 8}));
  c_cycles->add_option("--graph", graph, "proto | lifted")
      ->check(CLI::IsMember({"proto", "lifted"}));

  auto* c_thr = app.add_subcommand("threshold", "iterative decoding threshold");
  c_thr->add_option("--preset", preset, "preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  c_thr->add_option("--tol", tol, "bisection tolerance");

  auto* c_sim = app.add_subcommand("simulate", "Monte-Carlo error-rate sweep");
  c_sim->add_option("--preset", preset, "preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  c_sim->add_option("--snr", snrs, "SNR points in dB")->required()->delimiter(',');
  c_sim->add_option("--sigma", sigmas, "explicit noise levels, one per SNR point (overrides the convention)")
      ->delimiter(',');
  c_sim->add_option("--min-errors", min_errors, "frame errors to collect per point");
  c_sim->add_option("--max-frames", max_frames, "frame cap per point");
  c_sim->add_option("--batch", batch, "frames per stopping check");
  c_sim->add_option("--max-iters", max_iters, "decoder iterations");
  c_sim->add_flag("--esn0", esn0, "interpret SNR as Es/N0 instead of Eb/N0");
  c_sim->add_option("--out", out_file, "CSV output file");

  auto* c_pipe = app.add_subcommand("pipeline", "construct, count, threshold (and simulate)");
  c_pipe->add_option("--preset", preset, "preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  c_pipe->add_flag("--with-sim", with_sim, "append a Monte-Carlo sweep");
  c_pipe->add_option("--snr", snrs, "SNR points in dB")->delimiter(',');
  c_pipe->add_option("--min-errors", min_errors, "frame errors to collect per point");
  c_pipe->add_option("--max-frames", max_frames, "frame cap per point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_construct->parsed()) {
      if (preset.empty() && !c_construct->count("--local"))
        throw validation_error("construct needs --preset or --local");
      return cmd_construct(g, preset, local_kind, gamma_l, kappa, nu);
    }
    if (c_opt->parsed()) return cmd_optimize(g, mode, gamma_c, gamma_l, kappa, coupling_length);
    if (c_lift->parsed()) return cmd_lift(g, preset);
    if (c_cycles->parsed()) return cmd_cycles(g, preset, length, graph);
    if (c_thr->parsed()) return cmd_threshold(g, preset, tol);
    if (c_sim->parsed())
      return cmd_simulate(g, preset, snrs, sigmas, min_errors, max_frames, batch, max_iters, esn0,
                          out_file);
    if (c_pipe->parsed()) return cmd_pipeline(g, preset, with_sim, snrs, min_errors, max_frames);
    throw validation_error("no subcommand given");
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
