// gkpack command line tool: instance generation, solving, verification,
// rendering and a small benchmark harness around the library.

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkpack/gap.hpp"
#include "gkpack/gen.hpp"
#include "gkpack/io.hpp"
#include "gkpack/lpack.hpp"
#include "gkpack/ratios.hpp"
#include "gkpack/render.hpp"
#include "gkpack/solvers.hpp"
#include "gkpack/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitParse = 4;

gk::Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos)
    return gk::Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  const auto dot = s.find('.');
  if (dot == std::string::npos) return gk::Rational(std::stoll(s));
  const std::string frac = s.substr(dot + 1);
  long long den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  const long long whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
  return gk::Rational(whole) + gk::Rational(std::stoll(frac), den);
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw gk::parse_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gk::parse_error("cannot write " + path);
  out << text;
}

// Validates before writing; returns the exit code.
int emit_packing(const gk::Instance& inst, const gk::Packing& p, const std::string& out) {
  const auto rep = gk::validate_packing(inst, p);
  if (!rep.ok) {
    for (const auto& v : rep.violations) std::cerr << "validation: " << v << "\n";
    return kExitValidation;
  }
  write_all(out, gk::serialize_packing(p));
  return kExitOk;
}

gk::GapInstance parse_gap(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw gk::parse_error("malformed JSON");
  gk::GapInstance g;
  try {
    g.capacities = j.at("capacities").get<std::vector<long long>>();
    g.sizes = j.at("sizes").get<std::vector<std::vector<long long>>>();
    g.profits = j.at("profits").get<std::vector<std::vector<long long>>>();
  } catch (const nlohmann::json::exception& e) {
    throw gk::parse_error(std::string("gap instance: ") + e.what());
  }
  g.check();
  return g;
}

struct BenchRow {
  std::string name;
  long long profit = 0;
  long long oracle = -1;
  double ratio = 0;
  double wall_ms = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D geometric knapsack toolkit"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  int gen_n = 10;
  long long gen_N = 100;
  uint64_t gen_seed = 1;
  std::string gen_profile = "uniform", gen_out = "-";
  bool gen_rot = false;
  gen->add_option("--n", gen_n, "number of items");
  gen->add_option("--N", gen_N, "knapsack side length");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--profile", gen_profile, "uniform|long-heavy|small-only|mixed-skewed");
  gen->add_flag("--rotations", gen_rot, "mark the instance as rotatable");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // --- solve ---------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "run the constructive solver");
  std::string solve_eps = "1/13", solve_mode = "card", solve_in, solve_out = "-";
  bool solve_rot = false, solve_oracle = false;
  uint64_t solve_seed = 1;
  solve->add_option("--eps", solve_eps, "accuracy parameter (fraction or decimal)");
  solve->add_option("--mode", solve_mode, "card|weighted");
  solve->add_flag("--rotations", solve_rot, "use the rotation-aware solver");
  solve->add_flag("--oracle", solve_oracle, "also run the brute-force oracle");
  solve->add_option("--seed", solve_seed, "seed for randomized candidates");
  solve->add_option("--in", solve_in, "instance file")->required();
  solve->add_option("--out", solve_out, "packing output file (default stdout)");

  // --- lpack ---------------------------------------------------------------
  auto* lpack = app.add_subcommand("lpack", "L-packing of long items");
  std::string lp_eps = "1/2", lp_in, lp_out = "-";
  bool lp_exact = false, lp_oracle = false;
  lpack->add_option("--eps", lp_eps, "accuracy parameter");
  lpack->add_flag("--exact", lp_exact, "exact pseudo-polynomial grid DP");
  lpack->add_flag("--oracle", lp_oracle, "exhaustive oracle");
  lpack->add_option("--in", lp_in, "L-instance file (instance plus w_l/h_l)")->required();
  lpack->add_option("--out", lp_out, "packing output file (default stdout)");

  // --- gap -----------------------------------------------------------------
  auto* gap = app.add_subcommand("gap", "generalized assignment");
  std::string gap_eps = "1/4", gap_mode = "ptas", gap_in;
  gap->add_option("--eps", gap_eps, "accuracy parameter");
  gap->add_option("--mode", gap_mode, "oracle|dp|augmented|ptas");
  gap->add_option("--in", gap_in, "gap instance file")->required();

  // --- ratios ----------------------------------------------------------------
  auto* ratios = app.add_subcommand("ratios", "case-analysis linear programs");
  bool ratios_table = false;
  ratios->add_flag("--table", ratios_table, "print the reproduced case table");

  // --- verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "validate a packing against an instance");
  std::string ver_inst, ver_pack;
  verify->add_option("--instance", ver_inst, "instance file")->required();
  verify->add_option("--packing", ver_pack, "packing file")->required();

  // --- render ---------------------------------------------------------------
  auto* render = app.add_subcommand("render", "render a packing as SVG");
  std::string ren_inst, ren_pack, ren_out = "-";
  render->add_option("--instance", ren_inst, "instance file")->required();
  render->add_option("--packing", ren_pack, "packing file")->required();
  render->add_option("--out", ren_out, "SVG output file (default stdout)");

  // --- bench ---------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "benchmark solver modes over a generated corpus");
  int bench_count = 20, bench_n = 6;
  long long bench_N = 12;
  uint64_t bench_seed = 1;
  std::string bench_profile = "uniform", bench_mode = "card", bench_eps = "1/13",
              bench_out = "-";
  int bench_oracle_cap = 8;
  bench->add_option("--count", bench_count, "number of instances");
  bench->add_option("--n", bench_n, "items per instance");
  bench->add_option("--N", bench_N, "knapsack side length");
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--profile", bench_profile, "generator profile");
  bench->add_option("--mode", bench_mode, "card|weighted|rotations");
  bench->add_option("--eps", bench_eps, "accuracy parameter");
  bench->add_option("--oracle-cap", bench_oracle_cap, "max n for the oracle column");
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto inst =
          gk::generate_instance(gen_n, gen_N, gen_seed, gk::parse_profile(gen_profile), gen_rot);
      write_all(gen_out, gk::serialize_instance(inst));
      return kExitOk;
    }

    if (*solve) {
      const gk::Rational eps = parse_rational(solve_eps);
      gk::Instance inst = gk::parse_instance(read_all(solve_in));
      gk::SolveReport rep;
      if (solve_rot) {
        inst.rotations = true;
        rep = gk::solve_rotations(inst, eps);
      } else if (solve_mode == "card") {
        rep = gk::solve_cardinality(inst, eps);
      } else if (solve_mode == "weighted") {
        rep = gk::solve_weighted(inst, eps);
      } else {
        throw CLI::ValidationError("--mode must be card or weighted");
      }
      if (solve_oracle) {
        const auto orc = gk::brute_force_oracle(inst);
        rep.oracle_profit = orc.profit;
        rep.ratio = orc.profit ? static_cast<double>(rep.best_profit) / orc.profit : 1.0;
        std::cerr << "profit " << rep.best_profit << " oracle " << orc.profit << " ratio "
                  << rep.ratio << "\n";
      } else {
        std::cerr << "profit " << rep.best_profit << "\n";
      }
      return emit_packing(inst, rep.best, solve_out);
    }

    if (*lpack) {
      const std::string text = read_all(lp_in);
      gk::Instance base = gk::parse_instance(text);
      const auto j = nlohmann::json::parse(text);
      gk::LInstance li;
      li.shape.N = base.N;
      li.shape.h_l = j.value("h_l", base.N);
      li.shape.w_l = j.value("w_l", base.N);
      for (const auto& it : base.items) {
        if (2 * it.w > base.N)
          li.hor.push_back(it);
        else if (2 * it.h > base.N)
          li.ver.push_back(it);
        else
          throw gk::parse_error("item " + std::to_string(it.id) +
                                " has no side longer than N/2");
      }
      gk::LPackResult res;
      if (lp_oracle) {
        res = gk::lpack_oracle(li);
      } else if (lp_exact) {
        std::vector<gk::Rational> grid;
        for (long long v = 0; v <= base.N; ++v) grid.emplace_back(v);
        res = gk::lpack_exact_dp(li, grid, grid);
      } else {
        res = gk::lpack_ptas(li, parse_rational(lp_eps));
      }
      std::cerr << "profit " << res.profit << "\n";
      return emit_packing(base, res.packing, lp_out);
    }

    if (*gap) {
      const auto g = parse_gap(read_all(gap_in));
      gk::GapResult res;
      if (gap_mode == "oracle")
        res = gk::gap_oracle(g);
      else if (gap_mode == "dp")
        res = gk::gap_dp(g);
      else if (gap_mode == "augmented")
        res = gk::gap_augmented(g, parse_rational(gap_eps));
      else if (gap_mode == "ptas")
        res = gk::gap_ptas(g, parse_rational(gap_eps));
      else
        throw CLI::ValidationError("--mode must be oracle|dp|augmented|ptas");
      nlohmann::json out = {{"profit", res.profit}, {"assignment", res.assignment}};
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (*ratios) {
      if (ratios_table) {
        std::cout << gk::format_case_table();
      } else {
        const auto mixes = gk::worst_case_mixes();
        std::cout << "cardinality mix: " << mixes.cardinality << "\n"
                  << "weighted mix: " << mixes.weighted << "\n";
      }
      return kExitOk;
    }

    if (*verify) {
      const auto inst = gk::load_instance(ver_inst);
      const auto pack = gk::load_packing(ver_pack);
      const auto rep = gk::validate_packing(inst, pack);
      if (rep.ok) {
        std::cout << "ok\n";
        return kExitOk;
      }
      for (const auto& v : rep.violations) std::cout << v << "\n";
      return kExitValidation;
    }

    if (*render) {
      const auto inst = gk::load_instance(ren_inst);
      const auto pack = gk::load_packing(ren_pack);
      const auto rep = gk::validate_packing(inst, pack);
      if (!rep.ok) {
        for (const auto& v : rep.violations) std::cerr << "validation: " << v << "\n";
        return kExitValidation;
      }
      write_all(ren_out, gk::render_svg(inst, pack));
      return kExitOk;
    }

    if (*bench) {
      const gk::Rational eps = parse_rational(bench_eps);
      const auto profile = gk::parse_profile(bench_profile);
      std::vector<std::future<BenchRow>> jobs;
      for (int i = 0; i < bench_count; ++i) {
        jobs.push_back(std::async(std::launch::async, [=]() {
          const bool rot = bench_mode == "rotations";
          gk::Instance inst =
              gk::generate_instance(bench_n, bench_N, bench_seed + i, profile, rot);
          BenchRow row;
          row.name = "i" + std::to_string(i);
          const auto t0 = std::chrono::steady_clock::now();
          gk::SolveReport rep;
          if (bench_mode == "card")
            rep = gk::solve_cardinality(inst, eps);
          else if (bench_mode == "weighted")
            rep = gk::solve_weighted(inst, eps);
          else if (bench_mode == "rotations")
            rep = gk::solve_rotations(inst, eps);
          else
            throw CLI::ValidationError("--mode must be card|weighted|rotations");
          row.wall_ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
          const auto vrep = gk::validate_packing(inst, rep.best);
          if (!vrep.ok) throw gk::validation_error("bench: invalid packing on " + row.name);
          row.profit = rep.best_profit;
          if (bench_n <= bench_oracle_cap) {
            const auto orc = gk::brute_force_oracle(inst, bench_oracle_cap);
            row.oracle = orc.profit;
            row.ratio = orc.profit ? static_cast<double>(row.profit) / orc.profit : 1.0;
          }
          return row;
        }));
      }
      std::ostringstream csv;
      csv << "instance,profit,oracle,ratio,wall_ms\n";
      for (auto& job : jobs) {
        const BenchRow row = job.get();
        csv << row.name << ',' << row.profit << ',';
        if (row.oracle >= 0)
          csv << row.oracle << ',' << row.ratio;
        else
          csv << ',';
        csv << ',' << row.wall_ms << "\n";
      }
      write_all(bench_out, csv.str());
      return kExitOk;
    }
  } catch (const gk::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const gk::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const gk::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
