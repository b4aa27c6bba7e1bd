#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <thread>

#include <CLI11.hpp>

#include <srmk/decoder.hpp>
#include <srmk/io.hpp>
#include <srmk/linalg.hpp>
#include <srmk/random.hpp>
#include <srmk/skew.hpp>
#include <srmk/worked_example.hpp>

namespace srmk::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

std::string join(const std::vector<std::size_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

template <class Field>
void print_matrix(std::ostream& out, const std::string& name, const Matrix<Field>& M) {
  out << name << " (" << M.shape() << "):\n";
  for (std::size_t i = 0; i < M.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (j) out << ' ';
      if constexpr (std::is_same_v<Field, FieldTower>)
        out << M.field().to_wire(M(i, j));
      else
        out << M(i, j);
    }
    out << "]\n";
  }
}

void write_json_if(const std::string& path, const json& j) {
  if (!path.empty()) io::write_file(path, j);
}

void write_text_if(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw FormatError("cannot write " + path);
  f << text;
}

// Compares one intermediate; returns false and names it on mismatch.
struct StageLog {
  std::ostream& out;
  std::string first_failure;

  bool check(const std::string& name, bool ok) {
    out << (ok ? "  match     " : "  MISMATCH  ") << name << '\n';
    if (!ok && first_failure.empty()) first_failure = name;
    return ok;
  }
};

}  // namespace

// ---------------------------------------------------------------- example

int cmd_example(const ExampleOptions& options, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  const auto& ex = example::worked_example();
  const auto& F = *ex.tower;
  MatrixExt Y = ex.Y;
  if (options.perturb) Y(0, 0) = F.add(Y(0, 0), F.one());

  if (!options.export_dir.empty()) {
    std::filesystem::create_directories(options.export_dir);
    LinearCode code(ex.tower, ex.partition, ex.H, ex.G, ex.d);
    io::write_file(std::filesystem::path(options.export_dir) / "code.json", io::to_json(code));
    io::write_file(std::filesystem::path(options.export_dir) / "received.json", io::to_json(Y));
  }

  out << "worked example over " << F.describe() << ", partition (" << join(ex.partition.parts(), ',')
      << "), k = " << ex.k << ", s = " << ex.s << (options.perturb ? ", Y perturbed" : "") << '\n';
  StageLog log{out, {}};

  const auto S = syndrome(ex.H, Y);
  if (common.verbose) print_matrix(out, "S = H Y^T", S);
  log.check("S", S == ex.S);

  const auto ref = ref_with_transform(S);
  if (common.verbose) {
    print_matrix(out, "P", ref.transform);
    print_matrix(out, "P S", ref.reduced);
  }
  log.check("REF(S)", ref.reduced == ex.P * ex.S);

  json report_json;
  try {
    auto rec = compute_hsub(ex.H, S);
    if (common.verbose) print_matrix(out, "H_sub", rec.h_sub);
    log.check("H_sub (row space)", rec.h_sub.rows() == ex.H_sub.rows() && same_row_space(rec.h_sub, ex.H_sub));

    recover_block_supports(rec, ex.partition);
    for (std::size_t i = 0; i < rec.block_kernels.size(); ++i) {
      if (common.verbose) print_matrix(out, "B^(" + std::to_string(i + 1) + ")", rec.block_kernels[i]);
      log.check("B^(" + std::to_string(i + 1) + ")", rec.block_kernels[i] == ex.B_blocks[i]);
    }
    auto B = block_diag<BaseField>(rec.block_kernels, F.base_ptr());
    auto A = erasure_decode(ex.H, B, S);
    if (common.verbose) print_matrix(out, "A", A);
    log.check("A", A == ex.A_t.transpose());
    auto E_hat = A * embed(B, ex.tower);
    if (common.verbose) print_matrix(out, "E_hat", E_hat);
    log.check("E_hat", E_hat == ex.E);
    auto C_hat = Y - E_hat;
    if (common.verbose) print_matrix(out, "C_hat", C_hat);
    log.check("C_hat", C_hat == ex.C);

    auto report = decode(ex.code(), Y);
    log.check("residual H C_hat^T = 0", report.residual_ok);
    report_json = io::to_json(report);
  } catch (const DecodeFailure& f) {
    log.check(std::string("decoding (") + std::string(to_string(f.kind())) + ")", false);
    report_json = io::to_json(f);
  } catch (const Error& e) {
    log.check(std::string("decoding (") + e.what() + ")", false);
    report_json = {{"status", "failure"}, {"detail", e.what()}};
  }

  report_json["first_mismatch"] = log.first_failure.empty() ? json(nullptr) : json(log.first_failure);
  write_json_if(common.json_out, report_json);
  if (log.first_failure.empty()) {
    out << "PASS\n";
    return kSuccess;
  }
  out << "FAIL at " << log.first_failure << '\n';
  err << "worked example diverges at " << log.first_failure << '\n';
  return kFailure;
}

// ---------------------------------------------------------------- trial

TrialSummary run_trials(const TrialConfig& config, std::uint64_t master_seed, std::vector<TrialRecord>* records) {
  auto tower = make_tower(config.p, config.m);
  LengthPartition partition(config.parts);
  if (!config.profile.empty() && config.profile.size() != partition.blocks())
    throw Infeasible("profile has " + std::to_string(config.profile.size()) + " entries for " +
                     std::to_string(partition.blocks()) + " blocks");
  const std::size_t t = config.profile.empty()
                            ? config.t
                            : std::accumulate(config.profile.begin(), config.profile.end(), std::size_t{0});
  if (config.s == 0) throw Infeasible("interleaving order must be at least 1");
  if (config.full_rank && t > config.s) throw Infeasible("full-rank errors need t <= s");
  {
    Rng probe(0);
    if (config.profile.empty()) random_profile(partition, t, tower->m() * config.s, probe);
  }

  auto code = random_code(tower, partition, config.k, derive_seed(master_seed, ~std::uint64_t{0}));
  TrialSummary summary;
  summary.trials = config.trials;
  try {
    summary.distance = min_sum_rank_distance(code, config.distance_budget, config.threads);
  } catch (const BudgetExceeded&) {
  }
  InterleavedCode icode(code, config.s);

  std::vector<TrialRecord> rec(config.trials);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < config.trials; i += stride) {
      TrialRecord& r = rec[i];
      r.index = i;
      r.seed = derive_seed(master_seed, i);
      Rng rng(r.seed);
      r.profile = config.profile.empty() ? random_profile(partition, t, tower->m() * config.s, rng) : config.profile;
      auto model = sample_error(tower, partition, r.profile, config.s, config.full_rank, derive_seed(r.seed, 1));
      auto C = encode(code.generator(), random_matrix(tower, config.s, config.k, rng));
      auto Y = C + model.E;
      const auto start = Clock::now();
      try {
        auto report = decode(icode, Y);
        r.micros = micros_since(start);
        r.status = report.C_hat == C ? "success" : "miscorrection";
      } catch (const DecodeFailure& f) {
        r.micros = micros_since(start);
        r.status = std::string(to_string(f.kind()));
      }
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1 || config.trials < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (auto& th : pool) th.join();
  }

  std::vector<double> times;
  for (const auto& r : rec) {
    times.push_back(r.micros);
    if (r.status == "success")
      ++summary.successes;
    else if (r.status == "miscorrection")
      ++summary.miscorrections;
    else
      ++summary.failures[r.status];
  }
  if (!times.empty()) {
    summary.min_us = *std::min_element(times.begin(), times.end());
    summary.max_us = *std::max_element(times.begin(), times.end());
    summary.median_us = median(times);
  }
  if (records) *records = std::move(rec);
  return summary;
}

json to_json(const TrialSummary& summary, const TrialConfig& config, std::uint64_t seed) {
  json j{{"config",
          {{"p", config.p},
           {"m", config.m},
           {"parts", config.parts},
           {"k", config.k},
           {"s", config.s},
           {"t", config.t},
           {"profile", config.profile},
           {"full_rank", config.full_rank},
           {"trials", config.trials}}},
         {"seed", seed},
         {"trials", summary.trials},
         {"successes", summary.successes},
         {"miscorrections", summary.miscorrections},
         {"failures", summary.failures},
         {"d", summary.distance ? json(*summary.distance) : json(nullptr)}};
  if (config.timing)
    j["timing_us"] = {{"min", summary.min_us}, {"median", summary.median_us}, {"max", summary.max_us}};
  return j;
}

int cmd_trial(const TrialConfig& config, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  TrialSummary summary;
  std::vector<TrialRecord> records;
  try {
    summary = run_trials(config, common.seed, &records);
  } catch (const InvalidField& e) {
    err << "invalid field: " << e.what() << '\n';
    return kUsage;
  } catch (const Infeasible& e) {
    err << "infeasible configuration: " << e.what() << '\n';
    return kUsage;
  } catch (const StructuralError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kUsage;
  } catch (const SamplingFailure& e) {
    err << "sampling failed: " << e.what() << '\n';
    return kFailure;
  }

  out << "trials " << summary.trials << ", successes " << summary.successes << ", miscorrections "
      << summary.miscorrections << '\n';
  out << "d = " << (summary.distance ? std::to_string(*summary.distance) : std::string("unknown")) << '\n';
  if (summary.failures.empty()) {
    out << "failures: none\n";
  } else {
    out << "failures:";
    for (const auto& [name, count] : summary.failures) out << ' ' << name << '=' << count;
    out << '\n';
  }
  if (config.timing && summary.trials > 0)
    out << "decode time (us): min " << summary.min_us << ", median " << summary.median_us << ", max "
        << summary.max_us << '\n';
  if (common.verbose)
    for (const auto& r : records)
      out << "  trial " << r.index << " profile (" << join(r.profile, ',') << ") " << r.status << '\n';

  write_json_if(common.json_out, to_json(summary, config, common.seed));
  if (!common.csv_out.empty()) {
    std::string csv = config.timing ? "trial,seed,profile,status,decode_us\n" : "trial,seed,profile,status\n";
    for (const auto& r : records) {
      csv += std::to_string(r.index) + ',' + std::to_string(r.seed) + ',' + join(r.profile, ' ') + ',' + r.status;
      if (config.timing) csv += ',' + std::to_string(r.micros);
      csv += '\n';
    }
    write_text_if(common.csv_out, csv);
  }
  return summary.successes == summary.trials ? kSuccess : kFailure;
}

// ---------------------------------------------------------------- bench

std::vector<BenchRow> run_bench(const BenchOptions& options, std::uint64_t seed) {
  auto tower = make_tower(options.p, options.m);
  std::vector<BenchRow> rows;
  for (auto n : options.sizes) {
    if (options.block == 0 || n % options.block != 0)
      throw Infeasible("length " + std::to_string(n) + " is not a multiple of the block size");
    auto partition = LengthPartition::uniform(n / options.block, options.block);
    const std::size_t k = n / 2;
    auto code = random_code(tower, partition, k, derive_seed(seed, n));
    for (auto s : options.orders) {
      BenchRow row;
      row.n = n;
      row.k = k;
      row.s = s;
      row.t = std::min(s, (n - k) / 4);
      row.reps = options.reps;
      InterleavedCode icode(code, s);
      std::vector<double> times;
      for (std::size_t rep = 0; rep < options.reps; ++rep) {
        const auto trial_seed = derive_seed(derive_seed(seed, n * 1000 + s), rep);
        Rng rng(trial_seed);
        auto profile = random_profile(partition, row.t, tower->m() * s, rng);
        auto model = sample_error(tower, partition, profile, s, true, derive_seed(trial_seed, 1));
        auto C = encode(code.generator(), random_matrix(tower, s, k, rng));
        auto Y = C + model.E;
        const auto start = Clock::now();
        try {
          auto report = decode(icode, Y);
          times.push_back(micros_since(start));
          row.successes += report.C_hat == C;
        } catch (const DecodeFailure&) {
          times.push_back(micros_since(start));
        }
      }
      row.median_us = median(times);
      rows.push_back(row);
    }
  }
  return rows;
}

int cmd_bench(const BenchOptions& options, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  std::vector<BenchRow> rows;
  try {
    rows = run_bench(options, common.seed);
  } catch (const Error& e) {
    err << "bench: " << e.what() << '\n';
    return kUsage;
  }
  std::string csv = "n,k,s,t,reps,successes,median_us\n";
  for (const auto& r : rows)
    csv += std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + std::to_string(r.s) + ',' + std::to_string(r.t) +
           ',' + std::to_string(r.reps) + ',' + std::to_string(r.successes) + ',' + std::to_string(r.median_us) +
           '\n';
  out << csv;
  write_text_if(common.csv_out, csv);
  if (!common.json_out.empty()) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"n", r.n}, {"k", r.k}, {"s", r.s}, {"t", r.t}, {"reps", r.reps}, {"successes", r.successes},
                   {"median_us", r.median_us}});
    io::write_file(common.json_out, j);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- decode / mindist / gen

int cmd_decode(const std::string& code_file, const std::string& received_file, const std::string& isometry_file,
               const CommonOptions& common, std::ostream& out, std::ostream& err) {
  json report;
  int status = kSuccess;
  try {
    auto code = io::code_from_json(io::read_file(code_file));
    auto received = io::read_file(received_file);
    const json& yj = received.is_object() && received.contains("Y") ? received["Y"] : received;
    auto Y = io::ext_matrix_from_json(yj, code.tower());
    if (Y.cols() != code.length())
      throw FormatError(received_file + ": received matrix has " + std::to_string(Y.cols()) + " columns, code length is " +
                        std::to_string(code.length()));
    InterleavedCode icode(code, Y.rows());
    try {
      if (isometry_file.empty()) {
        report = io::to_json(decode(icode, Y));
      } else {
        auto iso = io::isometry_from_json(io::read_file(isometry_file), code.tower(), code.partition());
        report = io::to_json(skew_decode(icode, iso, Y));
      }
    } catch (const DecodeFailure& f) {
      report = io::to_json(f);
      status = kFailure;
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << report.dump(2) << '\n';
  if (common.verbose && report.contains("t_hat")) out << "t_hat = " << report["t_hat"] << '\n';
  write_json_if(common.json_out, report);
  return status;
}

int cmd_mindist(const std::string& code_file, std::uint64_t budget, unsigned threads, const CommonOptions& common,
                std::ostream& out, std::ostream& err) {
  try {
    auto code = io::code_from_json(io::read_file(code_file));
    const auto start = Clock::now();
    const auto d = min_sum_rank_distance(code, budget, threads);
    const double ms = micros_since(start) / 1000.0;
    out << "d = " << d << '\n';
    if (common.verbose) out << "enumeration took " << ms << " ms\n";
    if (code.distance() && *code.distance() != d) {
      err << "code file states d = " << *code.distance() << ", enumeration gives " << d << '\n';
      write_json_if(common.json_out, {{"d", d}, {"stated_d", *code.distance()}});
      return kFailure;
    }
    write_json_if(common.json_out, {{"d", d}});
    return kSuccess;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

int cmd_gen(const GenOptions& options, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  try {
    auto tower = make_tower(options.p, options.m);
    LengthPartition partition(options.parts);
    auto code = random_code(tower, partition, options.k, derive_seed(common.seed, 0));
    if (options.with_distance) {
      try {
        code.set_distance(min_sum_rank_distance(code));
      } catch (const BudgetExceeded&) {
      }
    }
    Rng rng(derive_seed(common.seed, 1));
    auto profile = random_profile(partition, options.t, tower->m() * options.s, rng);
    auto model = sample_error(tower, partition, profile, options.s, options.full_rank, derive_seed(common.seed, 2));
    auto C = encode(code.generator(), random_matrix(tower, options.s, options.k, rng));
    auto Y = C + model.E;

    const std::filesystem::path dir(options.out_dir);
    std::filesystem::create_directories(dir);
    io::write_file(dir / "code.json", io::to_json(code));
    io::write_file(dir / "received.json", io::to_json(Y));
    io::write_file(dir / "truth.json", {{"codeword", io::to_json(C)}, {"error", io::to_json(model)}});
    out << "wrote code.json, received.json, truth.json to " << dir.string() << '\n';
    if (common.verbose)
      out << "d = " << (code.distance() ? std::to_string(*code.distance()) : std::string("unknown")) << ", profile ("
          << join(profile, ',') << ")\n";
    write_json_if(common.json_out, {{"dir", dir.string()}, {"profile", profile}, {"seed", common.seed}});
    return kSuccess;
  } catch (const Error& e) {
    err << "gen: " << e.what() << '\n';
    return kUsage;
  }
}

// ---------------------------------------------------------------- argument parsing

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decoder for high-order interleaved sum-rank-metric codes", "srmk"};
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Master seed")->capture_default_str();
    sub->add_option("--json-out", common.json_out, "Write a JSON result to PATH");
    sub->add_option("--csv-out", common.csv_out, "Write CSV rows to PATH");
    sub->add_flag("--verbose,-v", common.verbose, "Print intermediate values");
  };

  ExampleOptions ex;
  auto* example = app.add_subcommand("example", "Replay the F_25 example and compare every intermediate");
  add_common(example);
  example->add_flag("--perturb", ex.perturb, "Add 1 to Y[0][0] before decoding");
  example->add_option("--export", ex.export_dir, "Write code.json and received.json to DIR");

  TrialConfig trial;
  bool rank_deficient = false, no_timing = false;
  auto* trial_cmd = app.add_subcommand("trial", "Monte Carlo decoding trials on a random code");
  add_common(trial_cmd);
  trial_cmd->add_option("-p", trial.p, "Characteristic (prime, base field F_p)")->capture_default_str();
  trial_cmd->add_option("-m", trial.m, "Extension degree")->capture_default_str();
  trial_cmd->add_option("--parts", trial.parts, "Length partition, e.g. 2,2,2")->delimiter(',')->capture_default_str();
  trial_cmd->add_option("-k", trial.k, "Code dimension")->capture_default_str();
  trial_cmd->add_option("-s", trial.s, "Interleaving order")->capture_default_str();
  trial_cmd->add_option("-t", trial.t, "Total error weight")->capture_default_str();
  trial_cmd->add_option("--profile", trial.profile, "Per-block error ranks (overrides -t)")->delimiter(',');
  trial_cmd->add_option("--trials,-n", trial.trials, "Number of trials")->capture_default_str();
  trial_cmd->add_option("--threads", trial.threads, "Worker threads")->capture_default_str();
  trial_cmd->add_flag("--rank-deficient", rank_deficient, "Do not require rk(E) = t");
  trial_cmd->add_flag("--no-timing", no_timing, "Omit wall-clock figures (byte-stable output)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Median decode time against n and s (CSV)");
  add_common(bench_cmd);
  bench_cmd->add_option("--sizes", bench.sizes, "Code lengths")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--orders,-s", bench.orders, "Interleaving orders")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("-p", bench.p)->capture_default_str();
  bench_cmd->add_option("-m", bench.m)->capture_default_str();
  bench_cmd->add_option("--block", bench.block, "Block size of the uniform partition")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Decodes per point")->capture_default_str();

  std::string code_file, received_file, isometry_file;
  auto* decode_cmd = app.add_subcommand("decode", "Decode a received matrix against a code file");
  add_common(decode_cmd);
  decode_cmd->add_option("--code", code_file, "Code JSON")->required();
  decode_cmd->add_option("--received", received_file, "Received matrix JSON")->required();
  decode_cmd->add_option("--isometry", isometry_file, "Skew isometry JSON {\"D_diag\": [...]}");

  std::uint64_t budget = 1'000'000;
  unsigned threads = 0;
  auto* mindist_cmd = app.add_subcommand("mindist", "Exact minimum sum-rank distance by enumeration");
  add_common(mindist_cmd);
  mindist_cmd->add_option("--code", code_file, "Code JSON")->required();
  mindist_cmd->add_option("--budget", budget, "Maximum q^{mk}")->capture_default_str();
  mindist_cmd->add_option("--threads", threads, "Worker threads (0: hardware)")->capture_default_str();

  GenOptions gen;
  bool gen_rank_deficient = false, gen_no_distance = false;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random code, received matrix and ground truth");
  add_common(gen_cmd);
  gen_cmd->add_option("-p", gen.p)->capture_default_str();
  gen_cmd->add_option("-m", gen.m)->capture_default_str();
  gen_cmd->add_option("--parts", gen.parts)->delimiter(',')->capture_default_str();
  gen_cmd->add_option("-k", gen.k)->capture_default_str();
  gen_cmd->add_option("-s", gen.s)->capture_default_str();
  gen_cmd->add_option("-t", gen.t)->capture_default_str();
  gen_cmd->add_option("--out", gen.out_dir, "Output directory")->capture_default_str();
  gen_cmd->add_flag("--rank-deficient", gen_rank_deficient, "Do not require rk(E) = t");
  gen_cmd->add_flag("--no-distance", gen_no_distance, "Skip the distance enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*example) return cmd_example(ex, common, out, err);
    if (*trial_cmd) {
      trial.full_rank = !rank_deficient;
      trial.timing = !no_timing;
      return cmd_trial(trial, common, out, err);
    }
    if (*bench_cmd) return cmd_bench(bench, common, out, err);
    if (*decode_cmd) return cmd_decode(code_file, received_file, isometry_file, common, out, err);
    if (*mindist_cmd) return cmd_mindist(code_file, budget, threads, common, out, err);
    if (*gen_cmd) {
      gen.full_rank = !gen_rank_deficient;
      gen.with_distance = !gen_no_distance;
      return cmd_gen(gen, common, out, err);
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace srmk::cli
