#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "stlyap/io/json.hpp"

using namespace stlyap;
using io::Json;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::EnumerationOverflow:
    case ErrorKind::OrbitOverflow:
    case ErrorKind::ThinOrUnbounded: return 3;
    case ErrorKind::DegreeInconsistency:
    case ErrorKind::UncoveredImageCusp:
    case ErrorKind::DivisibilityViolation:
    case ErrorKind::InconsistentSpec:
    case ErrorKind::RadicalDimensionMismatch:
    case ErrorKind::NonUnimodular:
    case ErrorKind::PathNotClosed:
    case ErrorKind::NotInvariant:
    case ErrorKind::DegenerateForm:
    case ErrorKind::OrderMismatch:
    case ErrorKind::NotParabolic: return 4;
    default: return 2;
  }
}

struct Options {
  std::string format = "table";
  std::size_t max_cosets = default_max_cosets;
  std::size_t max_orbit = default_max_orbit;
};

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

void print_subgroup_table(const ModularSubgroup& g, std::ostream& os) {
  os << "index " << g.index() << ", " << g.cusps().size() << " cusps, " << g.schreier_generators().size()
     << " Schreier generators\n";
  os << "  " << pad("cusp", 8) << pad("width", 7) << pad("rep", 16) << "parabolic\n";
  for (const auto& c : g.cusps())
    os << "  " << pad(c.at_infinity ? "inf" : to_string(c.point), 8) << pad(std::to_string(c.width), 7)
       << pad(c.rep_word.to_string(), 16) << c.parabolic_word.to_string() << "\n";
  os << "  generators:";
  for (const auto& s : g.schreier_generators()) os << "  " << s.word.to_string();
  os << "\n";
}

void print_lyapunov_table(const LyapunovReport& r, std::ostream& os) {
  if (!r.lattice) {
    os << "finite image of order " << r.finite_order << ", lambda = 0\n";
    return;
  }
  os << "image index " << r.image_index << ", domain index " << r.domain_index << "\n";
  os << "  " << pad("cusp", 8) << pad("width", 7) << pad("parabolic", 18) << pad("image", 22) << pad("type", 13)
     << pad("image cusp", 12) << "k\n";
  for (const auto& c : r.cusp_table) {
    os << "  " << pad(c.cusp.at_infinity ? "inf" : to_string(c.cusp.point), 8) << pad(std::to_string(c.cusp.width), 7)
       << pad(c.cusp.parabolic_word.to_string(), 18) << pad(c.image.to_string(), 22)
       << pad(class_name(c.image_class), 13);
    if (c.parabolic)
      os << pad(std::to_string(c.image_cusp + 1) + " (w=" + std::to_string(c.image_width) + ")", 12) << c.index.str();
    else
      os << pad("-", 12) << "-";
    os << "\n";
  }
  os << "deg = " << r.degree.str() << ", vol ratio = " << to_string(r.vol_ratio) << ", lambda = " << to_string(r.lambda)
     << "\n";
}

int cmd_analyze(const std::string& input, const Options& opt) {
  auto o = io::load_origami(input);
  auto a = analyze(o, {opt.max_orbit, opt.max_cosets});
  if (opt.format == "json") {
    std::cout << io::to_json(a).dump(2) << "\n";
    return 0;
  }
  std::cout << "origami   " << o.to_string() << " (" << o.degree() << " squares)\n";
  std::cout << "stratum   H(";
  for (std::size_t i = 0; i < a.stratum.kappa.size(); ++i) std::cout << (i ? "," : "") << a.stratum.kappa[i];
  std::cout << "), genus " << a.stratum.genus << "\n";
  std::cout << "veech     ";
  print_subgroup_table(a.rep.veech.subgroup, std::cout);
  std::cout << "pieces\n";
  std::cout << "  " << pad("#", 4) << pad("dim", 5) << pad("invariant", 11) << pad("domain", 8) << pad("lambda", 8)
            << "source\n";
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    const auto& p = a.pieces[i];
    std::cout << "  " << pad(std::to_string(i + 1), 4) << pad(std::to_string(p.space.dim()), 5)
              << pad(p.veech_invariant ? "yes" : "no", 11)
              << pad(p.rank2 ? std::to_string(p.rank2->domain.index()) : "-", 8)
              << pad(p.lyapunov ? to_string(p.lyapunov->lambda) : "n/a", 8) << p.source
              << (p.note.empty() ? "" : " [" + p.note + "]") << "\n";
  }
  std::cout << "spectrum ";
  for (const auto& l : a.spectrum) std::cout << " " << to_string(l);
  for (auto it = a.spectrum.rbegin(); it != a.spectrum.rend(); ++it) std::cout << " " << to_string(Rational(-*it));
  std::cout << "\n";
  return 0;
}

int cmd_veech(const std::string& input, const Options& opt) {
  auto v = veech_group(io::load_origami(input), opt.max_orbit);
  if (opt.format == "json")
    std::cout << io::to_json(v).dump(2) << "\n";
  else
    print_subgroup_table(v.subgroup, std::cout);
  return 0;
}

int cmd_monodromy(const std::string& input, const Options& opt) {
  auto o = io::load_origami(input);
  auto rep = homology_rep(o, veech_group(o, opt.max_orbit));
  if (opt.format == "json") {
    std::cout << io::to_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << "genus " << rep.genus << ", radical dimension " << rep.reduction.radical.size() << "\n";
  for (const auto& g : rep.generators) std::cout << g.word.to_string() << "  " << g.matrix.to_string() << "\n";
  return 0;
}

int cmd_lyapunov(const std::string& input, const Options& opt) {
  auto d = io::load_embedding(input, opt.max_cosets);
  auto r = lyapunov_exponent(d, opt.max_cosets);
  if (opt.format == "json")
    std::cout << io::to_json(r).dump(2) << "\n";
  else
    print_lyapunov_table(r, std::cout);
  return 0;
}

int cmd_construct(const std::string& text, const Options& opt) {
  Rational lambda = parse_rational(text);
  Json out{{"lambda", io::to_json(lambda)}};
  if (lambda == 0) {
    out["constant_family"] = true;
  } else {
    auto spec = build_covering(solve_parameters(lambda));
    auto cert = certify(spec);
    out["covering"] = io::to_json(spec);
    out["certificate"] = io::to_json(cert);
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (lambda == 0) {
    std::cout << "lambda 0: constant family, no covering\n";
    return 0;
  }
  const auto& c = out["covering"];
  std::cout << "r = " << c["r"] << ", d = " << c["d"] << ", t = " << c["t"].dump() << "\n";
  for (const auto& l : c["loops"])
    std::cout << "  " << pad(l["label"].get<std::string>(), 5) << pad(l["kind"].get<std::string>(), 10)
              << l["permutation"].get<std::string>() << (l["determined"].get<bool>() ? "  (product relation)" : "") << "\n";
  const auto& ce = out["certificate"];
  std::cout << "genus " << ce["genus"] << ", cusps " << ce["cusps"] << ", chi " << ce["euler_characteristic"]
            << ", lambda " << ce["lambda"].get<std::string>() << "\n";
  return 0;
}

int cmd_commensurable(const std::string& a, const std::string& b, const Options& opt) {
  auto d1 = io::load_embedding(a, opt.max_cosets), d2 = io::load_embedding(b, opt.max_cosets);
  auto res = commensurable(d1, d2, opt.max_cosets);
  auto w1 = weak_invariants(d1, opt.max_cosets), w2 = weak_invariants(d2, opt.max_cosets);
  bool weak_no = weak_verdict(w1, w2) == WeakVerdict::No;
  std::string weak = res.commensurable ? "yes" : (weak_no ? "no" : "undecided");
  Json out{{"commensurable", res.commensurable ? "yes" : "no"}, {"weakly_commensurable", weak}};
  out["common_subgroup_index"] = res.common.index();
  if (res.witness)
    out["witness"] = Json{{"word", res.witness->word.to_string()},
                          {"first", io::to_json(res.witness->first)},
                          {"first_type", class_name(classify(res.witness->first))},
                          {"second", io::to_json(res.witness->second)},
                          {"second_type", class_name(classify(res.witness->second))}};
  Json inv = Json::array();
  for (const auto* w : {&w1, &w2}) {
    Json prof = Json::object();
    for (const auto& [k, v] : w->cusp_image_profile) prof[k] = v;
    inv.push_back(Json{{"lambda", io::to_json(w->report.lambda)}, {"cusp_image_profile", prof}});
  }
  out["invariants"] = inv;
  out["note"] = "only lambda is a proven weak-commensurability invariant; cusp image profiles are heuristic";
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "commensurable: " << out["commensurable"].get<std::string>() << " (common subgroup index "
            << res.common.index() << ")\n";
  if (res.witness)
    std::cout << "witness " << res.witness->word.to_string() << ": " << res.witness->first.to_string() << " ("
              << out["witness"]["first_type"].get<std::string>() << ") vs " << res.witness->second.to_string() << " ("
              << out["witness"]["second_type"].get<std::string>() << ")\n";
  std::cout << "lambda: " << to_string(w1.report.lambda) << " vs " << to_string(w2.report.lambda) << "\n";
  std::cout << "weakly commensurable: " << weak << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lyapunov exponents of square-tiled surfaces and modular embeddings"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--max-cosets", opt.max_cosets, "coset enumeration limit")->check(CLI::PositiveNumber);
  app.add_option("--max-orbit", opt.max_orbit, "orbit size limit")->check(CLI::PositiveNumber);

  std::string in1, in2;
  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline for an origami");
  analyze_cmd->add_option("origami", in1, "file or inline origami")->required();
  auto* veech_cmd = app.add_subcommand("veech", "Veech group of an origami");
  veech_cmd->add_option("origami", in1, "file or inline origami")->required();
  auto* mono_cmd = app.add_subcommand("monodromy", "symplectic monodromy of an origami");
  mono_cmd->add_option("origami", in1, "file or inline origami")->required();
  auto* lyap_cmd = app.add_subcommand("lyapunov", "exponent of a modular embedding");
  lyap_cmd->add_option("embedding", in1, "embedding JSON file or inline")->required();
  auto* rat_cmd = app.add_subcommand("construct-rational", "covering realizing a rational exponent");
  rat_cmd->add_option("lambda", in1, "p/q in [0,1]")->required();
  auto* comm_cmd = app.add_subcommand("commensurable", "compare two modular embeddings");
  comm_cmd->add_option("first", in1, "embedding JSON")->required();
  comm_cmd->add_option("second", in2, "embedding JSON")->required();
  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(in1, opt);
    if (*veech_cmd) return cmd_veech(in1, opt);
    if (*mono_cmd) return cmd_monodromy(in1, opt);
    if (*lyap_cmd) return cmd_lyapunov(in1, opt);
    if (*rat_cmd) return cmd_construct(in1, opt);
    if (*comm_cmd) return cmd_commensurable(in1, in2, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
