#include "crown_cli/app.hpp"

#include <unistd.h>

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "crown_cli/suites.hpp"

namespace crown::cli {
namespace {

std::string writable_problem(const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path p(path);
  const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
  std::error_code ec;
  if (p.filename().empty()) return "not a file path";
  if (!fs::is_directory(dir, ec)) return "directory does not exist";
  if (fs::is_directory(p, ec)) return "path is a directory";
  if (::access(dir.c_str(), W_OK) != 0) return "directory is not writable";
  if (fs::exists(p, ec) && ::access(p.c_str(), W_OK) != 0) return "file is not writable";
  return {};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& s) {
  std::vector<std::complex<double>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates and numeric experiments for complex crowns", "crown"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string json_path, csv_path;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  bool strict = false;
  app.add_option("--json", json_path, "Also write the JSON report to PATH");
  app.add_option("--csv", csv_path, "Write CSV curve data to PATH");
  app.add_option("--seed", seed, "Seed for random sampling")->capture_default_str();
  app.add_option("--tol", tol, "Acceptance tolerance where the suite has one");
  app.add_flag("--strict", strict, "Treat flagged items as failures");

  std::function<SuiteResult()> job;

  // verify
  auto* verify = app.add_subcommand("verify", "Certificate suites")->require_subcommand(1);
  std::string type = "E8", convention = "canonical";
  int rank = 0;
  auto* roots = verify->add_subcommand("roots", "Boundary case analysis of Omega for one root system");
  roots->add_option("--type", type, "Root system name (E8, B3), label with --rank, or a .json file")->required();
  roots->add_option("--rank", rank, "Rank when --type is a bare label");
  roots->add_option("--convention", convention, "canonical, dual or both")->capture_default_str();
  roots->callback([&] { job = [&] { return verify_roots(type, rank, convention); }; });

  auto* omega = verify->add_subcommand("omega", "Exact comparisons of crown polytopes");
  omega->callback([&] { job = [] { return verify_omega(); }; });

  JordanRun jrun;
  auto add_jordan = [&](CLI::App* sub) {
    sub->add_option("--algebra", jrun.algebra, "sym:N, herm:N or spin:N")->capture_default_str();
    sub->add_option("--samples", jrun.samples, "Member points")->capture_default_str();
  };
  auto* vj = verify->add_subcommand("jordan", "Jordan algebra identities and certificates");
  add_jordan(vj);
  vj->add_option("--identity-samples", jrun.identity_samples, "Samples per operator identity")->capture_default_str();
  vj->callback([&] {
    job = [&] {
      jrun.seed = seed;
      if (tol) jrun.tol = *tol;
      return verify_jordan(jrun);
    };
  });

  int hsamples = 100;
  auto* vh = verify->add_subcommand("hermitian", "Classification and bounded realizations");
  vh->add_option("--samples", hsamples, "Random samples per check")->capture_default_str();
  vh->callback([&] { job = [&] { return verify_hermitian(seed, hsamples); }; });

  // jordan
  auto* jordan = app.add_subcommand("jordan", "Jordan algebra experiments")->require_subcommand(1);
  auto* jh = jordan->add_subcommand("hessian", "Closed Hessian formula against finite differences");
  add_jordan(jh);
  jh->callback([&] {
    job = [&] {
      jrun.seed = seed;
      if (tol) jrun.tol = *tol;
      return jordan_hessian(jrun);
    };
  });

  // sl2
  auto* sl2 = app.add_subcommand("sl2", "SL(2,R) crown experiments")->require_subcommand(1);
  std::string lambda = "1.0i";
  double theta = 0.5;
  int nodes = 512;
  auto* sph = sl2->add_subcommand("spherical", "Spherical functions and the s_pi profile");
  sph->add_option("--lambda", lambda, "Spectral parameter, e.g. 1.0i or 0.25+0.5i")->capture_default_str();
  sph->add_option("--theta", theta, "Point exp(i theta H), |theta| < pi/4")->capture_default_str();
  sph->add_option("--nodes", nodes, "Trapezoid nodes on K")->capture_default_str();
  sph->callback([&] { job = [&] { return sl2_spherical(parse_complex(lambda), theta, nodes, seed); }; });

  double t = 0.5, s = 0;
  std::string probe = "all";
  auto* heat = sl2->add_subcommand("heat", "Heat kernel probes");
  heat->add_option("--t", t, "Time")->capture_default_str();
  heat->add_option("--probe", probe, "all, calibration, mass, positivity, fourier, 6.7 or semigroup")
      ->capture_default_str();
  heat->add_option("--s", s, "Second time for the semigroup probe (default t)");
  heat->callback([&] { job = [&] { return sl2_heat(t, probe, s); }; });

  double eps_min = 1.0 / 1024;
  auto* blow = sl2->add_subcommand("blowup", "Growth of s_pi near the boundary");
  blow->add_option("--lambda", lambda, "Spectral parameter in iR")->capture_default_str();
  blow->add_option("--eps-min", eps_min, "Smallest distance parameter")->capture_default_str();
  blow->callback([&] { job = [&] { return sl2_blowup(parse_complex(lambda), eps_min); }; });

  double width = 1.5;
  auto* tr = sl2->add_subcommand("transform", "Heat kernel transform on the crown");
  tr->add_option("--t", t, "Time")->capture_default_str();
  tr->add_option("--width", width, "Radius of the bump profile")->capture_default_str();
  tr->callback([&] { job = [&] { return sl2_transform(t, width, seed); }; });

  // geom
  auto* geom = app.add_subcommand("geom", "Metric and measure on exp(i Omega)")->require_subcommand(1);
  int gsamples = 200;
  auto add_geom = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Root system name, label with --rank, or a .json file")->required();
    sub->add_option("--rank", rank, "Rank when --type is a bare label");
    sub->add_option("--samples", gsamples, "Random points")->capture_default_str();
  };
  auto* gd = geom->add_subcommand("density", "Invariant measure density");
  add_geom(gd);
  gd->callback([&] { job = [&] { return geom_density(type, rank, gsamples, seed); }; });
  auto* gm = geom->add_subcommand("metric", "Crown metric");
  add_geom(gm);
  gm->callback([&] { job = [&] { return geom_metric(type, rank, gsamples, seed); }; });

  // classify
  std::string pair;
  auto* cl = app.add_subcommand("classify", "Rank criterion for one causal pair");
  cl->add_option("--pair", pair, "g label such as so(1,5), or g/s")->required();
  cl->callback([&] { job = [&] { return classify(pair); }; });

  // appendix
  AppendixRun arun;
  std::string zlist;
  auto* ap = app.add_subcommand("appendix", "Orbit of 0 under the flat in the bounded realization");
  ap->add_option("--case", arun.which, "so_pq or so_nc")->capture_default_str();
  ap->add_option("--p", arun.p)->capture_default_str();
  ap->add_option("--q", arun.q)->capture_default_str();
  ap->add_option("--n", arun.n)->capture_default_str();
  ap->add_option("--samples", arun.samples, "Random strip points when --z is absent")->capture_default_str();
  ap->add_option("--z", zlist, "Comma separated strip parameters");
  ap->callback([&] {
    job = [&] {
      arun.seed = seed;
      if (tol) arun.tol = *tol;
      if (!zlist.empty()) arun.z = parse_complex_list(zlist);
      return appendix(arun);
    };
  });

  auto* ls = app.add_subcommand("list", "Catalog of suites");
  ls->callback([&] { job = [] { return list_suites(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto* path : {&json_path, &csv_path}) {
    if (path->empty()) continue;
    const std::string why = writable_problem(*path);
    if (!why.empty()) {
      err << "crown: cannot write " << *path << ": " << why << '\n';
      return kExitUnwritable;
    }
  }

  SuiteResult res;
  try {
    res = job();
  } catch (const std::invalid_argument& e) {
    err << "crown: " << e.what() << '\n';
    return kExitInvalidTarget;
  } catch (const std::domain_error& e) {
    err << "crown: " << e.what() << '\n';
    return kExitInvalidTarget;
  } catch (const std::exception& e) {
    err << "crown: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  const std::string report = res.report.to_json(strict);
  out << report;
  try {
    if (!json_path.empty()) write_atomic(json_path, report);
    if (!csv_path.empty()) write_atomic(csv_path, res.csv);
  } catch (const std::exception& e) {
    err << "crown: " << e.what() << '\n';
    return kExitUnwritable;
  }
  return res.report.failed(strict) ? kExitCheckFailed : kExitOk;
}

}  // namespace crown::cli
