#include "resatlas/json_io.hpp"

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace resatlas;

namespace {

struct Output {
  std::string path;  // empty: stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
  }
};

RatVec parse_rat_list(const std::string& csv) {
  RatVec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
  return out;
}

GroupSpec make_spec(const std::string& group, long n) {
  GroupSpec spec{family_parse(group), n};
  validate(spec);
  return spec;
}

std::string fixed6(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

std::string atlas_table(const ResonanceAtlas& a) {
  std::ostringstream os;
  os << "# " << family_name(a.spec.family);
  if (a.spec.family != Family::F4) os << " n=" << a.spec.n;
  os << "  tau=(";
  for (size_t i = 0; i < a.tau.a.size(); ++i) os << (i ? "," : "") << rat_str(a.tau.a[i]);
  os << ")\n";
  os << "sigma              k_thm  k_s5   v           z_paper      z_hc         exact\n";
  for (const auto& fam : a.families) {
    std::string sig = "(";
    for (size_t i = 0; i < fam.sigma.tuple.size(); ++i)
      sig += (i ? "," : "") + rat_str(fam.sigma.tuple[i]);
    sig += ")";
    if (fam.resonances.empty()) {
      os << std::left << std::setw(18) << sig << " (no resonances)\n";
      continue;
    }
    for (const auto& r : fam.resonances) {
      os << std::left << std::setw(18) << sig << " " << std::setw(6) << r.k_theorem
         << " " << std::setw(6) << r.k_section5 << " " << std::setw(11)
         << fixed6(to_double(r.v)) << " " << std::setw(12) << fixed6(to_double(r.z_paper))
         << " " << std::setw(12) << fixed6(to_double(r.z_hc)) << " v=" << rat_str(r.v)
         << " z_paper=" << rat_str(r.z_paper) << " z_hc=" << rat_str(r.z_hc)
         << " res=" << rat_str(r.residue_coeff) << "\n";
    }
  }
  return os.str();
}

size_t tau_length(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::F4: return 4;
    case Family::SpinEven:
    case Family::SpinOdd: return static_cast<size_t>(spec.n);
    default: return static_cast<size_t>(spec.n + 1);
  }
}

std::vector<QuadratureReport> verify_suite(const std::vector<GroupSpec>& specs, long poles_per) {
  std::vector<QuadratureReport> reports;
  for (const GroupSpec& spec : specs) {
    if (group_constants(spec).pole_free) continue;
    KTypeParam triv{spec, RatVec(tau_length(spec), Rat(0))};
    for (const MTypeParam& sigma : mhat(spec, triv)) {
      PlancherelDensity d = density(spec, sigma);
      auto ps = poles(d, poles_per);
      for (const PoleRecord& rec : ps) reports.push_back(residue_quadrature(d, rec, 0.25, 512));
      if (ps.empty()) continue;
      try {
        Rat shift = ps.front().v + Rat(5, 4);  // crosses two poles
        reports.push_back(contour_shift_check(d, std::complex<double>(0.3, 1.0), shift, 0.0, 1e-6));
      } catch (const std::domain_error&) {
        // densities with a genuine pole at 0 have no convergent real-line integral
      }
    }
  }
  return reports;
}

int run(int argc, char** argv) {
  CLI::App app{"resonance-atlas: resonances of the Laplacian on rank-one homogeneous "
               "vector bundles and their residue representations"};
  app.require_subcommand(1);
  app.footer(
      "Tuple coordinates per family (comma-separated rationals, e.g. 5/2):\n"
      "  K-types (--tau):   spin-even/spin-odd (a_1..a_n), su (a_1..a_{n+1}),\n"
      "                     sp (a_1..a_n,a_{n+1}), f4 (a_1..a_4)\n"
      "  M-types (--sigma): spin-even (b_1..b_{n-1}), spin-odd (b_1..b_n),\n"
      "                     su (b_0,b_2..b_n), sp (b_0,b_1,b_2..b_n), f4 (b_1,b_2,b_3)\n"
      "spin-even means Spin(2n,1); spin-odd means Spin(2n+1,1) (pole-free).");

  std::string group, tau_csv, sigma_csv, case_name_arg, format = "json", out_path, tgrid;
  long n = 2, k = 0, k_max = 32, bound = -1, t_single = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_n) {
    cmd->add_option("--group", group, "spin-even | spin-odd | su | sp | f4")->required();
    if (needs_n) cmd->add_option("--n", n, "rank parameter (ignored for f4)");
    cmd->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
  };

  auto* c_constants = app.add_subcommand("constants", "group constants of the family");
  add_common(c_constants, true);

  auto* c_branch = app.add_subcommand("branch", "M-types of tau restricted to M");
  add_common(c_branch, true);
  c_branch->add_option("--tau", tau_csv, "K-type tuple, comma-separated rationals")->required();

  auto* c_density = app.add_subcommand("density", "factored Plancherel density and poles");
  add_common(c_density, true);
  c_density->add_option("--sigma", sigma_csv, "M-type tuple, comma-separated rationals")
      ->required();
  c_density->add_option("--k-max", k_max, "pole window size");

  auto* c_res = app.add_subcommand("resonances", "resonance atlas over M^(tau)");
  add_common(c_res, true);
  c_res->add_option("--tau", tau_csv, "K-type tuple")->required();
  c_res->add_option("--k-max", k_max, "resonances per family");

  auto* c_classify = app.add_subcommand("classify", "residue representation at the k-th pole");
  add_common(c_classify, true);
  c_classify->add_option("--tau", tau_csv, "K-type tuple")->required();
  c_classify->add_option("--k", k, "pole index (section-5 numbering)")->required();

  auto* c_gk = app.add_subcommand("gk", "K-type counting function and growth exponent");
  add_common(c_gk, true);
  c_gk->add_option("--case", case_name_arg, "infinite|finite|east|north|south|west")->required();
  c_gk->add_option("--k", k, "pole index")->required();
  c_gk->add_option("--t", t_single, "single integer cutoff: exact count N(t)");
  c_gk->add_option("--t-grid", tgrid, "lo:hi:npts geometric grid for the exponent estimate");

  auto* c_orbits = app.add_subcommand("orbits", "nilpotent orbit catalogue");
  add_common(c_orbits, true);

  auto* c_verify = app.add_subcommand("verify", "numerical residue and contour-shift checks");
  add_common(c_verify, true);
  c_verify->add_option("--k-max", k_max, "poles per density to verify");

  auto* c_constituent = app.add_subcommand("constituent", "lattice points of a constituent");
  add_common(c_constituent, true);
  c_constituent->add_option("--case", case_name_arg)->required();
  c_constituent->add_option("--k", k)->required();
  c_constituent->add_option("--bound", bound, "coordinate bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // usage errors exit 1; --help exits 0
  }
  Output out{out_path};

  auto parse_case = [&](const std::string& s) {
    if (s == "infinite") return CaseLabel::spin_infinite;
    if (s == "finite") return CaseLabel::spin_finite;
    if (s == "east") return CaseLabel::east;
    if (s == "north") return CaseLabel::north;
    if (s == "south") return CaseLabel::south;
    if (s == "west") return CaseLabel::west;
    throw std::invalid_argument("unknown case label: " + s);
  };

  if (c_constants->parsed()) {
    GroupSpec spec = make_spec(group, n);
    json j = to_json(group_constants(spec));
    j["group"] = to_json(spec);
    out.write(dump_canonical(j));
  } else if (c_branch->parsed()) {
    GroupSpec spec = make_spec(group, n);
    KTypeParam tau{spec, parse_rat_list(tau_csv)};
    auto sigmas = mhat(spec, tau);
    Int total = 0;
    json arr = json::array();
    for (const auto& s : sigmas) {
      total += Int(s.multiplicity) * m_dim(s);
      arr.push_back(to_json(s));
    }
    json j;
    j["group"] = to_json(spec);
    j["tau"] = rat_array(tau.a);
    j["dim_tau"] = weyl_dim(spec, Algebra::k, k_weight(tau)).str();
    j["dim_sum"] = total.str();
    j["mtypes"] = std::move(arr);
    out.write(dump_canonical(j));
  } else if (c_density->parsed()) {
    GroupSpec spec = make_spec(group, n);
    MTypeParam sigma{spec, parse_rat_list(sigma_csv), 1, 1, false};
    PlancherelDensity d = density(spec, sigma);
    json j = to_json(d);
    j["group"] = to_json(spec);
    j["poles"] = to_json(poles(d, k_max));
    out.write(dump_canonical(j));
  } else if (c_res->parsed()) {
    GroupSpec spec = make_spec(group, n);
    KTypeParam tau{spec, parse_rat_list(tau_csv)};
    ResonanceAtlas a = atlas(spec, tau, k_max);
    out.write(format == "table" ? atlas_table(a) : dump_canonical(to_json(a)));
  } else if (c_classify->parsed()) {
    GroupSpec spec = make_spec(group, n);
    KTypeParam tau{spec, parse_rat_list(tau_csv)};
    out.write(dump_canonical(to_json(classify(spec, tau, k))));
  } else if (c_gk->parsed()) {
    GroupSpec spec = make_spec(group, n);
    CaseLabel c = parse_case(case_name_arg);
    json j;
    j["group"] = to_json(spec);
    j["case"] = case_name_arg;
    j["k"] = k;
    if (t_single > 0) {
      j["t"] = t_single;
      j["count"] = gk_count(spec, c, k, Rat(t_single)).str();
    }
    if (!tgrid.empty()) {
      double lo, hi;
      long npts;
      char c1, c2;
      std::stringstream ss(tgrid);
      if (!(ss >> lo >> c1 >> hi >> c2 >> npts) || c1 != ':' || c2 != ':' || npts < 4)
        throw std::invalid_argument("--t-grid expects lo:hi:npts with npts >= 4");
      std::vector<double> grid;
      for (long i = 0; i < npts; ++i)
        grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (npts - 1)));
      j["t_grid"] = grid;
      j["exponent"] = gk_exponent_estimate(spec, c, k, grid);
    }
    out.write(dump_canonical(j));
  } else if (c_orbits->parsed()) {
    GroupSpec spec = make_spec(group, n);
    json arr = json::array();
    for (const auto& o : nilpotent_orbits(spec)) arr.push_back(to_json(o));
    json j;
    j["group"] = to_json(spec);
    j["orbits"] = std::move(arr);
    out.write(dump_canonical(j));
  } else if (c_verify->parsed()) {
    GroupSpec spec = make_spec(group, n);
    auto reports = verify_suite({spec}, std::min(k_max, 6L));
    bool all_pass = true;
    json arr = json::array();
    std::ostringstream table;
    for (const auto& r : reports) {
      all_pass = all_pass && r.passed;
      arr.push_back(to_json(r));
      table << (r.passed ? "[PASS] " : "[FAIL] ") << r.target
            << "  rel_err=" << fixed6(std::log10(std::max(r.rel_err, 1e-300))) << " (log10)\n";
    }
    json j;
    j["reports"] = std::move(arr);
    j["all_passed"] = all_pass;
    out.write(format == "table" ? table.str() : dump_canonical(j));
    if (!all_pass) return 3;
  } else if (c_constituent->parsed()) {
    GroupSpec spec = make_spec(group, n);
    CaseLabel c = parse_case(case_name_arg);
    json pts = json::array();
    for (const auto& p : constituent_ktypes(spec, c, k, bound))
      pts.push_back(json::array({p.x, p.y}));
    json j;
    j["group"] = to_json(spec);
    j["case"] = case_name_arg;
    j["k"] = k;
    j["bound"] = bound;
    j["points"] = std::move(pts);
    out.write(dump_canonical(j));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NotApplicableError& e) {
    json err;
    err["error"]["type"] = "not_applicable";
    err["error"]["message"] = e.what();
    std::cout << dump_canonical(err);
    return 2;
  } catch (const std::domain_error& e) {
    json err;
    err["error"]["type"] = "domain";
    err["error"]["message"] = e.what();
    std::cout << dump_canonical(err);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
