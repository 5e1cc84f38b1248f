// superhopf: run verification suites and write JSON reports.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage, config or parse error.

#include "superhopf/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace superhopf;

namespace {

struct leaf {
  CLI::App* app;
  std::string suite;
};

void add_gl_options(CLI::App* a, suite_config& c) {
  a->add_option("--m", c.m, "even size m");
  a->add_option("--n", c.n, "odd size n");
  a->add_option("--thetas", c.thetas, "number of Grassmann generators");
  a->add_option("--points", c.points, "number of sampled points");
  a->add_option("--seed", c.seed, "RNG seed (required)");
}

int emit(const report& rep, const std::string& format, const std::string& out) {
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << '\n';
      return 2;
    }
    f << rep.to_json().dump(2) << '\n';
  }
  if (format == "json") std::cout << rep.to_json().dump(2) << '\n';
  else std::cout << rep.text();
  return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of super Hopf algebra constructions"};
  app.set_version_flag("--version", std::string(engine_version));
  app.require_subcommand(1);

  suite_config cfg;
  std::string format = "text", out;
  std::vector<leaf> leaves;
  auto common = [&](CLI::App* a, std::string suite) {
    a->add_option("--emit", format, "output format on stdout")->check(CLI::IsMember({"json", "text"}));
    a->add_option("--out", out, "write the JSON report to this file");
    leaves.push_back({a, std::move(suite)});
  };

  auto* verify = app.add_subcommand("verify", "Hopf axiom suites");
  verify->require_subcommand(1);
  auto* vgl = verify->add_subcommand("gl", "GL(m|n): antipode oracle and pointwise axioms");
  add_gl_options(vgl, cfg);
  common(vgl, "verify gl");
  for (auto [name, help] : {std::pair{"exterior", "exterior Hopf algebra: axioms and self-duality"},
                            std::pair{"bosonize", "bosonization of the exterior algebra"},
                            std::pair{"integrals", "integrals of the exterior algebra"}}) {
    auto* s = verify->add_subcommand(name, help);
    s->add_option("--dim", cfg.dim, "number of odd generators");
    common(s, std::string("verify ") + name);
  }
  auto* vp = verify->add_subcommand("presentation", "symbolic axioms of a .shp presentation");
  vp->add_option("--file", cfg.file, "presentation file")->required()->check(CLI::ExistingFile);
  common(vp, "verify presentation");

  auto* hy = app.add_subcommand("hy", "truncated hyperalgebra, primitives and PBW counts");
  hy->add_option("--group", cfg.group, "ga11, gl or exterior")->check(CLI::IsMember({"ga11", "gl", "exterior"}));
  hy->add_option("--file", cfg.file, "presentation file (overrides --group)")->check(CLI::ExistingFile);
  hy->add_option("--m", cfg.m, "even size for gl");
  hy->add_option("--n", cfg.n, "odd size for gl");
  hy->add_option("--dim", cfg.dim, "odd generators for exterior");
  hy->add_option("--order", cfg.order, "truncation order");
  common(hy, "hy");

  auto* hc = app.add_subcommand("hcpair", "symplectic Harish-Chandra pair axioms and super Jacobi");
  hc->add_option("--r", cfg.r, "rank r of sp(2r)");
  hc->add_flag("--no-half", cfg.no_half, "drop the factor 1/2 in the bracket");
  hc->add_option("--points", cfg.points, "group elements for the equivariance check")->default_val(10);
  hc->add_option("--seed", cfg.seed, "seed for the group equivariance check");
  common(hc, "hcpair");

  auto* env = app.add_subcommand("envelope", "truncated enveloping algebra by PBW rewriting");
  env->add_option("--r", cfg.r, "rank r of spo(1|2r)");
  env->add_option("--degree", cfg.degree, "truncation degree");
  common(env, "envelope");

  auto* dec = app.add_subcommand("decompose", "decomposition coordinates on GL(m|n) points");
  add_gl_options(dec, cfg);
  common(dec, "decompose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (const auto& l : leaves)
    if (l.app->parsed()) cfg.suite = l.suite;

  try {
    return emit(run_suite(cfg), format, out);
  } catch (const parse_error& e) {
    std::cerr << (cfg.file.empty() ? "" : cfg.file + ":") << e.what() << '\n';
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
