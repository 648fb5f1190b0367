#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"
#include "suites.hpp"

namespace {

using hopf::cli::Context;
using hopf::cli::Record;
using Suite = std::function<std::vector<Record>(Context&)>;

constexpr int kUsageError = 2;

// Runs suites on a small pool; results are concatenated in the order given,
// so output does not depend on scheduling.
std::vector<Record> run_suites(Context& ctx, std::vector<Suite> const& suites, unsigned jobs) {
  std::vector<std::vector<Record>> parts(suites.size());
  if (jobs <= 1 || suites.size() <= 1) {
    for (std::size_t i = 0; i < suites.size(); ++i) parts[i] = suites[i](ctx);
  } else {
    // Shared objects are built up front; suites only read them afterwards.
    ctx.catalog();
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next++) < suites.size();) parts[i] = suites[i](ctx);
      }));
    for (auto& f : workers) f.get();
  }
  std::vector<Record> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string command_echo(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of a 16-dimensional Hopf algebra, its double, "
               "Yetter-Drinfeld modules, Nichols algebras and liftings"};
  app.require_subcommand(1);

  std::optional<int> cap;
  std::string out_path;
  bool json = false, table = false;
  unsigned seed = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--cap", cap, "Degree cap (Nichols ranks default 6, rewriting default 12)");
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  auto* fj = app.add_flag("--json", json, "JSON report");
  app.add_flag("--table", table, "Table report (default)")->excludes(fj);
  app.add_option("--seed", seed, "Seed for randomized invariant checks");
  app.add_option("--jobs", jobs, "Worker threads for `all`")->check(CLI::PositiveNumber);

  auto* kashina = app.add_subcommand("verify-kashina", "Axioms, antipode, dual, automorphisms of H");
  auto* dbl = app.add_subcommand("double", "The Drinfeld double D(H^cop)");
  auto* simples = app.add_subcommand("simples", "Census of simple D-modules");
  simples->add_flag("--census", "Run the full census (the default)");
  auto* yd = app.add_subcommand("yd", "Yetter-Drinfeld modules, braidings, twists");
  auto* nichols = app.add_subcommand("nichols", "Nichols algebra dimensions and the pair table");
  std::string module;
  nichols->add_option("--module", module, "One module: V1, M7, chi_0110, W1_100, U_1002, ...");

  auto* lifting = app.add_subcommand("lifting", "Liftings U1_1 ... U19");
  hopf::cli::LiftingRequest req;
  std::map<std::string, std::string> raw;
  bool all_families = false, zero_compare = false, param_iso = false, mutation = false;
  std::string presentation;
  lifting->add_option("family", req.family, "Family id, e.g. U1_1 or U6");
  for (auto const* p : {"lambda", "mu", "alpha", "beta", "gamma", "eta"})
    lifting->add_option(std::string("--") + p, raw[p], std::string("Value of ") + p)
        ->default_str("0");
  lifting->add_flag("--verify", req.verify, "Check every Hopf axiom on the result");
  lifting->add_flag("--completed", req.completed, "Also build the completed presentation");
  lifting->add_flag("--all", all_families, "Every family at zeros, ones and a mixed set");
  lifting->add_flag("--zero-compare", zero_compare, "Compare zero parameters with B(N)#H");
  lifting->add_flag("--param-iso", param_iso, "Scaling isomorphisms between parameter sets");
  lifting->add_flag("--mutation", mutation, "Sign-flip sensitivity of the checker");
  lifting->add_option("--presentation", presentation, "Build a presentation file");

  auto* all = app.add_subcommand("all", "Every suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  Context ctx;
  hopf::cli::Report report;
  report.command = command_echo(argc, argv);
  auto const start = std::chrono::steady_clock::now();
  unsigned const ncap = static_cast<unsigned>(cap.value_or(6));
  int const rcap = cap.value_or(12);

  try {
    std::vector<Suite> suites;
    if (kashina->parsed()) {
      suites.push_back([&](Context& c) { return hopf::cli::kashina_suite(c, seed); });
    } else if (dbl->parsed()) {
      suites.push_back(hopf::cli::double_suite);
    } else if (simples->parsed()) {
      suites.push_back(hopf::cli::simples_suite);
    } else if (yd->parsed()) {
      suites.push_back(hopf::cli::yd_suite);
    } else if (nichols->parsed()) {
      if (module.empty())
        suites.push_back([&](Context& c) { return hopf::cli::nichols_suite(c, ncap); });
      else
        suites.push_back([&](Context& c) { return hopf::cli::nichols_module(c, module, ncap); });
    } else if (lifting->parsed()) {
      bool const one = !req.family.empty();
      if (!one && !all_families && !zero_compare && !param_iso && !mutation && presentation.empty())
        throw CLI::ValidationError("lifting", "give a family or one of --all, --zero-compare, "
                                              "--param-iso, --mutation, --presentation");
      if (one) {
        for (auto const& [k, v] : raw)
          if (!v.empty()) req.values[k] = hopf::Scalar::parse(v);
        req.cap = rcap;
        suites.push_back([&](Context& c) { return hopf::cli::lifting_one(c, req); });
      }
      if (all_families)
        suites.push_back([&](Context& c) { return hopf::cli::lifting_all(c, rcap); });
      if (zero_compare) suites.push_back(hopf::cli::zero_compare_all);
      if (param_iso) suites.push_back(hopf::cli::parameter_iso_suite);
      if (mutation)
        suites.push_back([&](Context& c) { return hopf::cli::mutation_suite(c, seed); });
      if (!presentation.empty())
        suites.push_back([&](Context&) {
          return hopf::cli::presentation_file(presentation, req.verify, rcap);
        });
    } else if (all->parsed()) {
      suites = {
          [&](Context& c) { return hopf::cli::kashina_suite(c, seed); },
          hopf::cli::double_suite,
          hopf::cli::simples_suite,
          hopf::cli::yd_suite,
          [&](Context& c) { return hopf::cli::nichols_suite(c, ncap); },
          [&](Context& c) { return hopf::cli::lifting_all(c, rcap); },
          hopf::cli::zero_compare_all,
          hopf::cli::parameter_iso_suite,
          [&](Context& c) { return hopf::cli::mutation_suite(c, seed); },
      };
    }
    report.records = run_suites(ctx, suites, all->parsed() ? jobs : 1);
  } catch (CLI::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (std::invalid_argument const& e) {
    // unknown family, module or parameter, unreadable file
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (std::out_of_range const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (hopf::ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string const text =
      json ? hopf::cli::render_json(report) : hopf::cli::render_table(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kUsageError;
    }
    f << text;
  }
  return report.exit_code();
}
