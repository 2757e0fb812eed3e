// Command-line front end: generate / select / embed / evaluate / bench.
// Every run prints its full resolved configuration to stderr; all randomness
// comes from explicit seeds (default 0), never from the wall clock.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dissim/datagen.hpp"
#include "dissim/embedding.hpp"
#include "dissim/evaluation.hpp"
#include "dissim/io.hpp"
#include "dissim/parallel.hpp"
#include "dissim/selection.hpp"

namespace {

using dissim::Index;
using dissim::Scalar;

void echo(const std::string& key, const std::string& value) {
  std::cerr << "[config] " << key << " = " << value << "\n";
}
void echo(const std::string& key, std::uint64_t value) { echo(key, std::to_string(value)); }
void echo(const std::string& key, Index value) { echo(key, std::to_string(value)); }
void echo(const std::string& key, int value) { echo(key, std::to_string(value)); }
void echo(const std::string& key, Scalar value) { echo(key, dissim::format_real(value)); }

dissim::DistanceKernel parse_kernel(const std::string& name) {
  const auto kernel = dissim::kernel_from_string(name);
  if (!kernel) throw CLI::ValidationError("--kernel", "unknown kernel '" + name + "'");
  return *kernel;
}

std::vector<dissim::SelectionPolicy> parse_policies(const std::vector<std::string>& names) {
  std::vector<dissim::SelectionPolicy> policies;
  for (const std::string& name : names) {
    const auto policy = dissim::policy_from_string(name);
    if (!policy) throw CLI::ValidationError("--policy", "unknown policy '" + name + "'");
    policies.push_back(*policy);
  }
  return policies;
}

dissim::PairSamplingSpec parse_pairs(const std::string& text, std::uint64_t pair_seed) {
  if (text == "all") return dissim::PairSamplingSpec::all();
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      const long long count = std::stoll(text.substr(prefix.size()));
      if (count >= 2) return dissim::PairSamplingSpec::random(static_cast<Index>(count), pair_seed);
    } catch (const std::exception&) {
    }
  }
  throw CLI::ValidationError("--pairs", "expected 'all' or 'random:COUNT', got '" + text + "'");
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += parts[i];
  }
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prototype-based dissimilarity embedding for streamlines and point clouds"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "Worker thread cap (0 = hardware concurrency)")
      ->capture_default_str();

  // ---- generate ----
  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic dataset");
  generate->require_subcommand(1);

  dissim::GaussianCloudSpec gauss;
  std::string gauss_out;
  CLI::App* gen_gauss = generate->add_subcommand("gaussian", "2D standard-normal point cloud");
  gen_gauss->add_option("--n", gauss.n, "Number of points")->capture_default_str();
  gen_gauss->add_option("--seed", gauss.seed, "Generator seed")->capture_default_str();
  gen_gauss->add_option("--out", gauss_out, "Output streamline file")->required();
  gen_gauss->callback([&] {
    dissim::set_max_threads(threads);
    echo("command", "generate gaussian");
    echo("n", gauss.n);
    echo("seed", gauss.seed);
    echo("out", gauss_out);
    echo("threads", threads);
    dissim::write_streamlines(dissim::generate_gaussian(gauss), gauss_out);
  });

  dissim::PolylineCloudSpec poly;
  std::string poly_out;
  CLI::App* gen_poly = generate->add_subcommand("polylines", "Smooth 3D random-walk polylines");
  gen_poly->add_option("--n", poly.n, "Number of polylines")->capture_default_str();
  gen_poly->add_option("--min-points", poly.min_points, "Minimum points per polyline")
      ->capture_default_str();
  gen_poly->add_option("--max-points", poly.max_points, "Maximum points per polyline")
      ->capture_default_str();
  gen_poly->add_option("--extent", poly.extent, "Start positions lie in [0, extent]^3 (mm)")
      ->capture_default_str();
  gen_poly->add_option("--step", poly.step_length, "Step length (mm)")->capture_default_str();
  gen_poly->add_option("--momentum", poly.momentum, "Direction persistence in [0, 1)")
      ->capture_default_str();
  gen_poly->add_option("--seed", poly.seed, "Generator seed")->capture_default_str();
  gen_poly->add_option("--out", poly_out, "Output streamline file")->required();
  gen_poly->callback([&] {
    dissim::set_max_threads(threads);
    echo("command", "generate polylines");
    echo("n", poly.n);
    echo("min_points", poly.min_points);
    echo("max_points", poly.max_points);
    echo("extent", poly.extent);
    echo("step", poly.step_length);
    echo("momentum", poly.momentum);
    echo("seed", poly.seed);
    echo("out", poly_out);
    echo("threads", threads);
    dissim::write_streamlines(dissim::generate_polylines(poly), poly_out);
  });

  // ---- select ----
  CLI::App* select = app.add_subcommand("select", "Select prototypes from a dataset");
  std::string sel_input, sel_policy, sel_kernel = "mam";
  std::string sel_indices_out = "prototype_indices.txt";
  std::string sel_protos_out = "prototypes.txt";
  Index sel_p = 0;
  Scalar sel_c = 3.0;
  std::uint64_t sel_seed = 0;
  std::optional<Index> sel_start;
  select->add_option("--input", sel_input, "Input streamline file")->required();
  select->add_option("--policy", sel_policy, "random | fft | sff")
      ->required()
      ->check(CLI::IsMember({"random", "fft", "sff"}));
  select->add_option("--p", sel_p, "Number of prototypes")->required();
  select->add_option("--c", sel_c, "SFF subset-size constant")->capture_default_str();
  select->add_option("--seed", sel_seed, "Selection seed")->capture_default_str();
  select->add_option("--kernel", sel_kernel, "euclidean | mam")
      ->capture_default_str()
      ->check(CLI::IsMember({"euclidean", "mam"}));
  select->add_option("--start-index", sel_start,
                     "Force the first FFT prototype (fft only, for reproducible traces)");
  select->add_option("--indices-out", sel_indices_out, "Output file: one index per line")
      ->capture_default_str();
  select->add_option("--prototypes-out", sel_protos_out, "Output streamline file of prototypes")
      ->capture_default_str();
  select->callback([&] {
    if (sel_start && sel_policy != "fft")
      throw CLI::ValidationError("--start-index", "only valid with --policy fft");
    dissim::set_max_threads(threads);
    echo("command", "select");
    echo("input", sel_input);
    echo("policy", sel_policy);
    echo("p", sel_p);
    echo("c", sel_c);
    echo("seed", sel_seed);
    echo("kernel", sel_kernel);
    echo("start_index", sel_start ? std::to_string(*sel_start) : std::string("random"));
    echo("indices_out", sel_indices_out);
    echo("prototypes_out", sel_protos_out);
    echo("threads", threads);

    const dissim::Dataset dataset = dissim::read_streamlines(sel_input);
    const dissim::DistanceKernel kernel = parse_kernel(sel_kernel);
    dissim::PrototypeSet prototypes;
    if (sel_policy == "random") {
      prototypes = dissim::select_random(dataset, sel_p, sel_seed);
    } else if (sel_policy == "fft") {
      prototypes = dissim::select_fft(dataset, sel_p, kernel, sel_seed, sel_start);
    } else {
      prototypes = dissim::select_sff(dataset, dissim::SffParams{sel_c, sel_p}, kernel, sel_seed);
    }
    dissim::write_prototype_indices(prototypes, sel_indices_out);
    dissim::write_streamlines(
        dissim::make_dataset(prototypes.streamlines), sel_protos_out);
  });

  // ---- embed ----
  CLI::App* embed = app.add_subcommand("embed", "Project a dataset against prototypes");
  std::string emb_input, emb_protos, emb_out, emb_kernel = "mam";
  bool emb_normalized = false;
  embed->add_option("--input", emb_input, "Input streamline file")->required();
  embed->add_option("--prototypes", emb_protos, "Prototype streamline file")->required();
  embed->add_option("--kernel", emb_kernel, "euclidean | mam")
      ->capture_default_str()
      ->check(CLI::IsMember({"euclidean", "mam"}));
  embed->add_option("--out", emb_out, "Output CSV (N x p matrix)")->required();
  embed->add_flag("--normalized", emb_normalized,
                  "Scale rows by 1/sqrt(p) for cross-p comparisons (off per the plain definition)");
  embed->callback([&] {
    dissim::set_max_threads(threads);
    echo("command", "embed");
    echo("input", emb_input);
    echo("prototypes", emb_protos);
    echo("kernel", emb_kernel);
    echo("normalized", emb_normalized ? "true" : "false");
    echo("out", emb_out);
    echo("threads", threads);

    const dissim::Dataset dataset = dissim::read_streamlines(emb_input);
    const dissim::Dataset protos = dissim::read_streamlines(emb_protos);
    dissim::EmbeddedDataset embedded =
        dissim::project_all(dataset, protos.streamlines, parse_kernel(emb_kernel));
    if (emb_normalized) embedded /= std::sqrt(static_cast<Scalar>(embedded.cols()));
    dissim::write_embedded_csv(embedded, emb_out);
  });

  // ---- evaluate ----
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Correlation between original and embedded distances over repetitions");
  std::string eval_input, eval_out, eval_kernel = "mam", eval_pairs = "random:100000";
  std::vector<std::string> eval_policies = {"random", "fft", "sff"};
  std::vector<Index> eval_p_list;
  int eval_reps = 50;
  Scalar eval_c = 3.0;
  std::uint64_t eval_seed = 0, eval_pair_seed = 0;
  evaluate->add_option("--input", eval_input, "Input streamline file")->required();
  evaluate->add_option("--policy", eval_policies, "Policies to evaluate")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::IsMember({"random", "fft", "sff"}));
  evaluate->add_option("--p-list", eval_p_list, "Prototype counts, e.g. 5,10,20")
      ->delimiter(',')
      ->required();
  evaluate->add_option("--repetitions", eval_reps, "Repetitions per (policy, p)")
      ->capture_default_str();
  evaluate->add_option("--pairs", eval_pairs, "Pair sample: all | random:COUNT")
      ->capture_default_str();
  evaluate->add_option("--pair-seed", eval_pair_seed, "Seed of the pair sample")
      ->capture_default_str();
  evaluate->add_option("--kernel", eval_kernel, "euclidean | mam")
      ->capture_default_str()
      ->check(CLI::IsMember({"euclidean", "mam"}));
  evaluate->add_option("--c", eval_c, "SFF subset-size constant")->capture_default_str();
  evaluate->add_option("--seed", eval_seed, "Base selection seed (repetition r uses seed + r)")
      ->capture_default_str();
  evaluate->add_option("--out", eval_out, "Output results CSV")->required();
  evaluate->callback([&] {
    dissim::set_max_threads(threads);
    echo("command", "evaluate");
    echo("input", eval_input);
    echo("policy", join(eval_policies));
    echo("p_list", join_numbers(eval_p_list));
    echo("repetitions", eval_reps);
    echo("pairs", eval_pairs);
    echo("pair_seed", eval_pair_seed);
    echo("kernel", eval_kernel);
    echo("c", eval_c);
    echo("seed", eval_seed);
    echo("out", eval_out);
    echo("threads", threads);

    const dissim::Dataset dataset = dissim::read_streamlines(eval_input);
    const dissim::DistanceKernel kernel = parse_kernel(eval_kernel);
    const dissim::PairSamplingSpec pairs = parse_pairs(eval_pairs, eval_pair_seed);
    std::vector<dissim::ExperimentReport> reports;
    for (dissim::SelectionPolicy policy : parse_policies(eval_policies)) {
      auto policy_reports = dissim::run_experiment(dataset, policy, eval_p_list, eval_reps,
                                                   kernel, pairs, eval_seed, eval_c);
      for (auto& report : policy_reports) reports.push_back(std::move(report));
    }
    dissim::write_results_csv(reports, eval_seed, eval_out);
  });

  // ---- bench ----
  CLI::App* bench = app.add_subcommand(
      "bench", "Time prototype selection on generated polyline datasets of several sizes");
  std::string bench_out, bench_kernel = "mam";
  std::vector<std::string> bench_policies = {"random", "fft", "sff"};
  std::vector<Index> bench_sizes;
  Index bench_p = 50;
  int bench_reps = 1;
  Scalar bench_c = 3.0;
  std::uint64_t bench_seed = 0;
  dissim::PolylineCloudSpec bench_gen;
  bench->add_option("--policy", bench_policies, "Policies to time")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::IsMember({"random", "fft", "sff"}));
  bench->add_option("--p", bench_p, "Number of prototypes")->capture_default_str();
  bench->add_option("--sizes", bench_sizes, "Dataset sizes, e.g. 1000,10000")
      ->delimiter(',')
      ->required();
  bench->add_option("--repetitions", bench_reps, "Timed repetitions per (policy, size)")
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Generation and selection seed")->capture_default_str();
  bench->add_option("--kernel", bench_kernel, "euclidean | mam")
      ->capture_default_str()
      ->check(CLI::IsMember({"euclidean", "mam"}));
  bench->add_option("--c", bench_c, "SFF subset-size constant")->capture_default_str();
  bench->add_option("--min-points", bench_gen.min_points, "Minimum points per polyline")
      ->capture_default_str();
  bench->add_option("--max-points", bench_gen.max_points, "Maximum points per polyline")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "Output timing CSV")->required();
  bench->callback([&] {
    dissim::set_max_threads(threads);
    echo("command", "bench");
    echo("policy", join(bench_policies));
    echo("p", bench_p);
    echo("sizes", join_numbers(bench_sizes));
    echo("repetitions", bench_reps);
    echo("seed", bench_seed);
    echo("kernel", bench_kernel);
    echo("c", bench_c);
    echo("min_points", bench_gen.min_points);
    echo("max_points", bench_gen.max_points);
    echo("out", bench_out);
    echo("threads", threads);

    const dissim::DistanceKernel kernel = parse_kernel(bench_kernel);
    const auto policies = parse_policies(bench_policies);
    using Clock = std::chrono::steady_clock;
    std::vector<dissim::BenchRow> rows;
    for (Index n : bench_sizes) {
      dissim::PolylineCloudSpec spec = bench_gen;
      spec.n = n;
      spec.seed = bench_seed;
      const dissim::Dataset dataset = dissim::generate_polylines(spec);
      for (dissim::SelectionPolicy policy : policies) {
        for (int rep = 0; rep < bench_reps; ++rep) {
          const std::uint64_t seed = bench_seed + static_cast<std::uint64_t>(rep);
          const auto t0 = Clock::now();
          switch (policy) {
            case dissim::SelectionPolicy::Random:
              dissim::select_random(dataset, bench_p, seed);
              break;
            case dissim::SelectionPolicy::Fft:
              dissim::select_fft(dataset, bench_p, kernel, seed);
              break;
            case dissim::SelectionPolicy::Sff:
              dissim::select_sff(dataset, dissim::SffParams{bench_c, bench_p}, kernel, seed);
              break;
          }
          const auto t1 = Clock::now();
          rows.push_back({policy, n, bench_p, rep, seed,
                          std::chrono::duration<Scalar, std::milli>(t1 - t0).count()});
        }
      }
    }
    dissim::write_bench_csv(rows, bench_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const dissim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
