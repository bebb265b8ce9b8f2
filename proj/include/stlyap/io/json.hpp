#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "stlyap/analysis.hpp"
#include "stlyap/commensurability/commensurability.hpp"
#include "stlyap/rational/rational_lyap.hpp"

namespace stlyap::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& z) {
  if (fits_int64(z)) return static_cast<long long>(z);
  return z.str();
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Mat2Z& m) { return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})}); }

inline Json to_json(const MatZ& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json to_json(const VecZ& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json cycles_json(const Permutation& p) {
  Json out = Json::array();
  for (const auto& c : p.cycles()) {
    Json cyc = Json::array();
    for (int v : c) cyc.push_back(v + 1);
    out.push_back(cyc);
  }
  return out;
}

inline Json to_json(const Origami& o) {
  return Json{{"d", o.degree()}, {"r", cycles_json(o.r)}, {"u", cycles_json(o.u)}, {"text", o.to_string()}};
}

inline Json to_json(const StratumData& s) {
  return Json{{"genus", s.genus}, {"kappa", s.kappa}, {"vertex_cycle_lengths", s.vertex_cycle_lengths}, {"punctures", s.punctures}};
}

inline Json to_json(const ModularSubgroup& g) {
  Json gens = Json::array();
  for (const auto& s : g.schreier_generators()) gens.push_back(s.word.to_string());
  Json cusps = Json::array();
  for (const auto& c : g.cusps())
    cusps.push_back(Json{{"width", c.width},
                         {"rep_word", c.rep_word.to_string()},
                         {"point", c.at_infinity ? std::string("inf") : to_string(c.point)},
                         {"parabolic", c.parabolic_word.to_string()}});
  Json out{{"index", g.index()}, {"sigma_S", cycles_json(g.sigma_S())}, {"sigma_T", cycles_json(g.sigma_T())}, {"generators", gens}};
  if (!g.caller_generators().empty()) {
    Json cg = Json::array();
    for (const auto& w : g.caller_generators()) cg.push_back(w.to_string());
    out["caller_generators"] = cg;
  }
  out["cusps"] = cusps;
  return out;
}

inline Json to_json(const VeechGroup& v) {
  Json out = to_json(v.subgroup);
  out["orbit_size"] = v.orbit.size();
  out["contains_minus_identity"] = v.contains_minus_identity;
  return out;
}

inline Json to_json(const SymplecticRep& rep) {
  Json gens = Json::array();
  for (const auto& g : rep.generators)
    gens.push_back(Json{{"word", g.word.to_string()}, {"sl2", to_json(g.matrix2)}, {"matrix", to_json(g.matrix)}});
  Json out{{"genus", rep.genus}, {"radical_dim", rep.reduction.radical.size()}, {"generators", gens}};
  if (rep.minus_identity) out["minus_identity"] = to_json(rep.minus_identity->matrix);
  return out;
}

inline Json to_json(const RankTwoRep& r) {
  Json imgs = Json::array();
  for (std::size_t k = 0; k < r.images.size(); ++k)
    imgs.push_back(Json{{"word", r.domain.schreier_generators()[k].word.to_string()}, {"matrix", to_json(r.images[k])}});
  return Json{{"domain", to_json(r.domain)}, {"images", imgs}, {"scale", to_json(r.scale)}, {"b1", to_json(r.b1)}, {"b2", to_json(r.b2)}};
}

inline Json to_json(const CuspContribution& c) {
  Json out{{"cusp", c.cusp.at_infinity ? std::string("inf") : to_string(c.cusp.point)},
           {"width", c.cusp.width},
           {"primitive_parabolic", c.cusp.parabolic_word.to_string()},
           {"image", to_json(c.image)},
           {"image_type", class_name(c.image_class)}};
  if (c.parabolic) {
    out["image_cusp"] = c.image_cusp + 1;
    out["image_cusp_width"] = c.image_width;
    out["translation"] = to_json(c.translation);
    out["k"] = to_json(c.index);
  }
  return out;
}

inline Json to_json(const LyapunovReport& r) {
  Json out{{"lambda", to_json(r.lambda)}, {"classification", r.lattice ? "Lattice" : "Finite"}};
  if (!r.lattice) {
    out["finite_order"] = r.finite_order;
    return out;
  }
  out["degree"] = to_json(r.degree);
  out["vol_ratio"] = to_json(r.vol_ratio);
  out["domain_index"] = r.domain_index;
  out["image"] = to_json(*r.image);
  Json table = Json::array();
  for (const auto& c : r.cusp_table) table.push_back(to_json(c));
  out["cusp_table"] = table;
  return out;
}

inline Json to_json(const CoveringSpec& s) {
  Json loops = Json::array();
  for (const auto& l : s.loops)
    loops.push_back(Json{{"label", l.label},
                         {"kind", l.cusp ? "cusp" : "interior"},
                         {"permutation", l.sigma.to_string()},
                         {"cycles", l.sigma.cycle_count()},
                         {"determined", l.determined}});
  return Json{{"r", s.params.r}, {"d", s.params.d}, {"t", s.params.t}, {"loops", loops}};
}

inline Json to_json(const Certificate& c) {
  return Json{{"genus", c.genus}, {"cusps", c.cusps}, {"euler_characteristic", to_json(c.euler)}, {"lambda", to_json(c.lambda)}};
}

inline Json to_json(const AnalysisReport& a) {
  Json pieces = Json::array();
  for (const auto& p : a.pieces) {
    Json j{{"source", p.source}, {"dim", p.space.dim()}, {"veech_invariant", p.veech_invariant}};
    if (p.lyapunov) {
      j["domain_index"] = p.rank2->domain.index();
      j["scale"] = to_json(p.rank2->scale);
      j["lambda"] = to_json(p.lyapunov->lambda);
      j["degree"] = to_json(p.lyapunov->degree);
      j["vol_ratio"] = to_json(p.lyapunov->vol_ratio);
    } else {
      j["lambda"] = "n/a";
      j["note"] = p.note;
    }
    pieces.push_back(j);
  }
  Json spectrum = Json::array(), full = Json::array();
  for (const auto& l : a.spectrum) spectrum.push_back(to_json(l));
  for (const auto& l : a.spectrum) full.push_back(to_json(l));
  for (auto it = a.spectrum.rbegin(); it != a.spectrum.rend(); ++it) full.push_back(to_json(Rational(-*it)));
  return Json{{"origami", to_json(a.origami)},
              {"stratum", to_json(a.stratum)},
              {"veech", to_json(a.rep.veech)},
              {"representation", Json{{"genus", a.rep.genus}, {"radical_dim", a.rep.reduction.radical.size()},
                                      {"generators", a.rep.generators.size()}}},
              {"pieces", pieces},
              {"spectrum", spectrum},
              {"full_spectrum", full}};
}

// ---- input ----

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Argument is a path if such a file exists, otherwise inline text.
inline std::string read_argument(const std::string& arg) {
  std::ifstream probe(arg);
  return probe ? read_file(arg) : arg;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

inline std::vector<std::vector<int>> cycles_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "cycles must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& c : j) {
    if (!c.is_array()) fail(ErrorKind::InvalidInput, "cycles must be an array of arrays");
    std::vector<int> cyc;
    for (const auto& v : c) {
      if (!v.is_number_integer() || v.get<long long>() < 1) fail(ErrorKind::InvalidInput, "cycle entries are positive integers");
      cyc.push_back(static_cast<int>(v.get<long long>() - 1));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

inline Origami origami_from_json(const Json& j) {
  if (j.is_string()) return parse_origami_text(j.get<std::string>());
  if (!j.is_object() || !j.contains("r") || !j.contains("u")) fail(ErrorKind::InvalidInput, "origami JSON needs r and u");
  auto rc = cycles_from_json(j["r"]), uc = cycles_from_json(j["u"]);
  std::size_t d = 0;
  if (j.contains("d")) {
    if (!j["d"].is_number_integer() || j["d"].get<long long>() < 1) fail(ErrorKind::InvalidInput, "d must be a positive integer");
    d = static_cast<std::size_t>(j["d"].get<long long>());
  }
  std::size_t largest = 0;
  for (const auto* cs : {&rc, &uc})
    for (const auto& c : *cs)
      for (int v : c) largest = std::max(largest, static_cast<std::size_t>(v + 1));
  if (d == 0) d = std::max<std::size_t>(largest, 1);
  if (largest > d) fail(ErrorKind::InvalidInput, "cycle entry exceeds d");
  Origami o(Permutation::from_cycles(d, rc), Permutation::from_cycles(d, uc));
  validate(o);
  return o;
}

/// Path, inline JSON, or inline "r=…; u=…" text.
inline Origami load_origami(const std::string& arg) {
  std::string text = read_argument(arg);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '"')) return origami_from_json(parse_json(text));
  return parse_origami_text(text);
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    auto q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) fail(ErrorKind::InvalidInput, "expected an integer, got " + j.get<std::string>());
    return numerator_of(q);
  }
  fail(ErrorKind::InvalidInput, "expected an integer");
}

inline Mat2Z mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
    fail(ErrorKind::InvalidInput, "a 2x2 matrix is [[a,b],[c,d]]");
  return Mat2Z{integer_from_json(j[0][0]), integer_from_json(j[0][1]), integer_from_json(j[1][0]), integer_from_json(j[1][1])};
}

inline Permutation permutation_from_cycles_json(const Json& j, std::size_t d) { return Permutation::from_cycles(d, cycles_from_json(j)); }

/// Either {"generators": [words], "images": [matrices]} for a subgroup given
/// by generating words, or {"domain": {"index", "sigma_S", "sigma_T"},
/// "images": [...]} with one image per Schreier generator.
inline ModularEmbeddingData embedding_from_json(const Json& j, std::size_t max_cosets = default_max_cosets) {
  if (!j.is_object() || !j.contains("images") || !j["images"].is_array())
    fail(ErrorKind::InvalidInput, "embedding JSON needs an images array");
  std::vector<Mat2Z> imgs;
  for (const auto& m : j["images"]) imgs.push_back(mat2_from_json(m.is_object() ? m.at("matrix") : m));
  if (j.contains("generators")) {
    std::vector<WordST> words;
    for (const auto& w : j["generators"]) {
      if (!w.is_string()) fail(ErrorKind::InvalidInput, "generators are S/T word strings");
      words.push_back(WordST::parse(w.get<std::string>()));
    }
    return ModularEmbeddingData::from_generator_images(words, imgs, max_cosets);
  }
  if (j.contains("domain")) {
    const auto& dj = j["domain"];
    if (!dj.contains("index") || !dj.contains("sigma_S") || !dj.contains("sigma_T"))
      fail(ErrorKind::InvalidInput, "domain needs index, sigma_S and sigma_T");
    auto n = static_cast<std::size_t>(integer_from_json(dj["index"]));
    auto g = ModularSubgroup::from_action(permutation_from_cycles_json(dj["sigma_S"], n),
                                          permutation_from_cycles_json(dj["sigma_T"], n));
    return ModularEmbeddingData(g, imgs);
  }
  fail(ErrorKind::InvalidInput, "embedding JSON needs generators or domain");
}

inline ModularEmbeddingData load_embedding(const std::string& arg, std::size_t max_cosets = default_max_cosets) {
  return embedding_from_json(parse_json(read_argument(arg)), max_cosets);
}

}  // namespace stlyap::io
