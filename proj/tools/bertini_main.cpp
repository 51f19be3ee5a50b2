// Command-line front end: identity suites, involution evaluation,
// ramification data and polynomial dumps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error,
// 3 degenerate input (basepoint, contracted locus, undefined chart).

#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bertini/geiser.hpp"
#include "bertini/pencil_io.hpp"
#include "bertini/verify.hpp"

using namespace bertini;

namespace {

constexpr int kOk = 0, kVerifyFail = 1, kUsage = 2, kDegenerate = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::array<std::string, 3> split_point(const std::string& text) {
  std::array<std::string, 3> out;
  std::stringstream ss(text);
  for (int i = 0; i < 3; ++i)
    if (!std::getline(ss, out[i], ',')) throw UsageError("point needs three comma-separated values");
  std::string extra;
  if (std::getline(ss, extra, ',')) throw UsageError("point needs exactly three values");
  return out;
}

template <class C>
C parse_coord(const std::string&, std::uint64_t);

template <>
Rat parse_coord<Rat>(const std::string& s, std::uint64_t) {
  return rat_parse(s);
}
template <>
Fp parse_coord<Fp>(const std::string& s, std::uint64_t p) {
  return fp_from_rat(rat_parse(s), p);
}

template <class C>
std::string coord_str(const C& c) {
  return coef_to_string(c);
}

template <class C>
ProjPoint<C> read_point(const std::string& text, std::uint64_t prime) {
  auto parts = split_point(text);
  return ProjPoint<C>(parse_coord<C>(parts[0], prime), parse_coord<C>(parts[1], prime),
                      parse_coord<C>(parts[2], prime));
}

// ---- eval ----

template <class C>
int run_eval(const PencilSpec<C>& spec, const std::string& point, bool geiser,
             std::uint64_t prime) {
  ProjPoint<C> y = read_point<C>(point, prime);
  ProjPoint<C> z;
  if (geiser) {
    if (!spec.is_geiser()) throw UsageError("--geiser requires a1 = a2 = 0 in the pencil file");
    z = geiser_apply(build_geiser(spec), y);
  } else {
    z = apply_bertini(spec, y);
  }
  std::cout << coord_str(z.x[0]) << "," << coord_str(z.x[1]) << "," << coord_str(z.x[2]) << "\n";
  return kOk;
}

// ---- ram ----

template <class C>
std::string entry_str(const Poly<C>& p, bool generic) {
  if (generic) return p.canonical_text();
  return coef_to_string(p.is_zero() ? C{} : p.constant_value());
}

template <class C, std::size_t N>
nlohmann::ordered_json entries_json(const std::array<Poly<C>, N>& arr, bool generic) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (auto& e : arr) a.push_back(entry_str(e, generic));
  return a;
}

template <class C>
int run_ram(const PencilSpec<C>& spec, bool generic, bool geiser) {
  nlohmann::ordered_json j;
  if (geiser) {
    if (!spec.is_geiser()) throw UsageError("--geiser requires a1 = a2 = 0");
    auto gram = geiser_ram(ram_eval(spec));
    j["st"] = entries_json(gram.st, generic);
    j["p"] = entries_json(gram.p, generic);
    j["qt"] = entries_json(gram.qt, generic);
    j["rt"] = entries_json(gram.rt, generic);
  } else {
    auto ram = ram_eval(spec);
    j["s"] = entries_json(ram.s, generic);
    j["p"] = entries_json(ram.p, generic);
    j["q"] = entries_json(ram.q, generic);
    j["r"] = entries_json(ram.r, generic);
  }
  std::cout << j.dump() << "\n";
  return kOk;
}

// ---- poly ----

template <class C>
const Poly<C>* bertini_poly(const BertiniBundle<C>& b, const std::string& name) {
  static const std::map<std::string, const Poly<C> BertiniBundle<C>::*> table = {
      {"w", &BertiniBundle<C>::w},         {"wp", &BertiniBundle<C>::wp},
      {"A1", &BertiniBundle<C>::A1},       {"A2", &BertiniBundle<C>::A2},
      {"B1", &BertiniBundle<C>::B1},       {"B2", &BertiniBundle<C>::B2},
      {"B3", &BertiniBundle<C>::B3},       {"C1", &BertiniBundle<C>::C1},
      {"C2", &BertiniBundle<C>::C2},       {"kappa", &BertiniBundle<C>::kappa},
      {"gamma4", &BertiniBundle<C>::gamma4}, {"rp1", &BertiniBundle<C>::rp1},
      {"rp3", &BertiniBundle<C>::rp3},     {"r1", &BertiniBundle<C>::r1},
      {"r2", &BertiniBundle<C>::r2},       {"r3", &BertiniBundle<C>::r3},
      {"C5", &BertiniBundle<C>::C5},       {"phi6", &BertiniBundle<C>::phi6},
      {"psi6", &BertiniBundle<C>::psi6},   {"z1", &BertiniBundle<C>::z1},
      {"z2", &BertiniBundle<C>::z2},       {"z3", &BertiniBundle<C>::z3},
      {"K", &BertiniBundle<C>::K},
  };
  auto it = table.find(name);
  return it == table.end() ? nullptr : &(b.*(it->second));
}

template <class C>
const Poly<C>* geiser_poly(const GeiserBundle<C>& g, const std::string& name) {
  static const std::map<std::string, const Poly<C> GeiserBundle<C>::*> table = {
      {"gamma1", &GeiserBundle<C>::gamma1}, {"rtp1", &GeiserBundle<C>::rtp1},
      {"rtp3", &GeiserBundle<C>::rtp3},     {"rt1", &GeiserBundle<C>::rt1},
      {"rt2", &GeiserBundle<C>::rt2},       {"rt3", &GeiserBundle<C>::rt3},
      {"Ct", &GeiserBundle<C>::Ct},         {"phi3", &GeiserBundle<C>::phi3},
      {"psi3", &GeiserBundle<C>::psi3},     {"zt1", &GeiserBundle<C>::z1},
      {"zt2", &GeiserBundle<C>::z2},        {"zt3", &GeiserBundle<C>::z3},
      {"Kt", &GeiserBundle<C>::Kt},
  };
  auto it = table.find(name);
  return it == table.end() ? nullptr : &(g.*(it->second));
}

bool is_geiser_name(const std::string& name) {
  static const std::map<std::string, bool> names = {
      {"gamma1", 1}, {"rtp1", 1}, {"rtp3", 1}, {"rt1", 1}, {"rt2", 1}, {"rt3", 1}, {"Ct", 1},
      {"phi3", 1},   {"psi3", 1}, {"zt1", 1},  {"zt2", 1}, {"zt3", 1}, {"Kt", 1},
  };
  return names.count(name) > 0;
}

template <class C>
int run_poly(const PencilSpec<C>& spec, const std::string& name) {
  if (is_geiser_name(name)) {
    if (!spec.is_geiser())
      throw UsageError("polynomial " + name + " needs a pencil with a1 = a2 = 0");
    auto g = build_geiser(spec);
    std::cout << geiser_poly(g, name)->canonical_text() << "\n";
    return kOk;
  }
  auto b = build_bundle(spec);
  const Poly<C>* p = bertini_poly(b, name);
  if (!p) throw UsageError("unknown polynomial name: " + name);
  std::cout << p->canonical_text() << "\n";
  return kOk;
}

// ---- map ----

template <class C>
int run_map(const PencilSpec<C>& spec, const std::string& point, const std::string& target,
            std::uint64_t prime) {
  ProjPoint<C> y = read_point<C>(point, prime);
  if (target == "cone") {
    auto b = build_bundle(spec, Corrupt::none, BuildLevel::core);
    ConePoint<C> c = cone_map(b, y);
    std::cout << coord_str(c.z[0]) << "," << coord_str(c.z[1]) << "," << coord_str(c.z[2]) << ","
              << coord_str(c.z[3]) << "\n";
    return kOk;
  }
  if (target == "sigma2") {
    auto b = build_bundle(spec, Corrupt::none, BuildLevel::core);
    Sigma2Point<C> s = sigma2_chart(b, y);
    if (!s.ybar) throw ChartUndefined("no affine ybar: the second cubic vanishes at the point");
    std::cout << coord_str(s.x_num) << ":" << coord_str(s.x_den) << "," << coord_str(*s.ybar)
              << "\n";
    return kOk;
  }
  if (target == "plane") {
    if (!spec.is_geiser()) throw UsageError("plane target needs a pencil with a1 = a2 = 0");
    auto g = build_geiser(spec);
    ProjPoint<C> img = anticanonical_map(g, y);
    std::cout << coord_str(img.x[0]) << "," << coord_str(img.x[1]) << "," << coord_str(img.x[2])
              << "\n";
    return kOk;
  }
  throw UsageError("unknown map target: " + target);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and identity checks for two classical plane involutions"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity suite and print a JSON report");
  std::string suite = "all", mode = "symbolic";
  VerifyOptions vopts;
  verify->add_option("--suite", suite)->check(CLI::IsMember({"bertini", "sigma2", "geiser", "all"}));
  verify->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "modular"}));
  verify->add_option("--trials", vopts.trials);
  verify->add_option("--prime", vopts.prime);
  verify->add_option("--seed", vopts.seed);
  verify->add_option("--mem-budget", vopts.mem_budget);

  // eval
  auto* eval = app.add_subcommand("eval", "apply the involution to a projective point");
  std::string pencil_path, point_text;
  bool geiser_flag = false;
  eval->add_option("--pencil", pencil_path)->required();
  eval->add_option("--point", point_text)->required();
  eval->add_flag("--geiser", geiser_flag);

  // ram
  auto* ram = app.add_subcommand("ram", "ramification data as JSON");
  std::string ram_pencil;
  bool ram_generic = false, ram_geiser = false;
  ram->add_option("--pencil", ram_pencil);
  ram->add_flag("--generic", ram_generic);
  ram->add_flag("--geiser", ram_geiser);

  // poly
  auto* poly = app.add_subcommand("poly", "canonical text of a named polynomial");
  std::string poly_name, poly_pencil;
  bool poly_generic = false;
  poly->add_option("--name", poly_name)->required();
  poly->add_option("--pencil", poly_pencil);
  poly->add_flag("--generic", poly_generic);

  // map
  auto* mapc = app.add_subcommand("map", "map a point to the cone, Sigma_2 chart or target plane");
  std::string map_pencil, map_point, map_target;
  mapc->add_option("--pencil", map_pencil)->required();
  mapc->add_option("--point", map_point)->required();
  mapc->add_option("--target", map_target)->required()->check(CLI::IsMember({"cone", "sigma2", "plane"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      vopts.suite = suite == "bertini"  ? Suite::bertini
                    : suite == "sigma2" ? Suite::sigma2
                    : suite == "geiser" ? Suite::geiser
                                        : Suite::all;
      vopts.mode = mode == "modular" ? Mode::modular : Mode::symbolic;
      if (vopts.trials < 1) throw UsageError("--trials must be at least 1");
      if (!is_prime_u64(vopts.prime)) throw UsageError("--prime must be prime");
      Report rep = run_suite(vopts);
      std::cout << report_to_json(rep) << "\n";
      return rep.pass() ? kOk : kVerifyFail;
    }

    if (eval->parsed()) {
      LoadedPencil lp = load_pencil_file(pencil_path);
      return lp.modular ? run_eval(lp.fp, point_text, geiser_flag, lp.prime)
                        : run_eval(lp.rat, point_text, geiser_flag, 0);
    }

    if (ram->parsed()) {
      if (ram_generic == !ram_pencil.empty())
        throw UsageError("ram needs exactly one of --pencil or --generic");
      if (ram_generic) {
        return ram_geiser ? run_ram(generic_geiser_pencil(), true, true)
                          : run_ram(generic_pencil(), true, false);
      }
      LoadedPencil lp = load_pencil_file(ram_pencil);
      return lp.modular ? run_ram(lp.fp, false, ram_geiser) : run_ram(lp.rat, false, ram_geiser);
    }

    if (poly->parsed()) {
      if (poly_generic == !poly_pencil.empty())
        throw UsageError("poly needs exactly one of --pencil or --generic");
      if (poly_generic) {
        return is_geiser_name(poly_name) ? run_poly(generic_geiser_pencil(), poly_name)
                                         : run_poly(generic_pencil(), poly_name);
      }
      LoadedPencil lp = load_pencil_file(poly_pencil);
      return lp.modular ? run_poly(lp.fp, poly_name) : run_poly(lp.rat, poly_name);
    }

    if (mapc->parsed()) {
      LoadedPencil lp = load_pencil_file(map_pencil);
      return lp.modular ? run_map(lp.fp, map_point, map_target, lp.prime)
                        : run_map(lp.rat, map_point, map_target, 0);
    }
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const DegeneratePoint&) {
    std::cerr << "degenerate: basepoint or contracted locus\n";
    return kDegenerate;
  } catch (const ChartUndefined& e) {
    std::cerr << e.what() << "\n";
    return kDegenerate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
