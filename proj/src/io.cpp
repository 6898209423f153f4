// io.cpp
#include "adesheaf/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "adesheaf/errors.hpp"

namespace ade {

Json to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidInput("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const CurveConfig& config) {
  Json edges = Json::array();
  for (const auto& e : config.edges()) edges.push_back({e.a, e.b});
  return Json{{"kind", config.kind().name()}, {"edges", edges}};
}

Json to_json(const CurveConfig& config, const Cycle& z) {
  return Json{{"kind", config.kind().name()}, {"mult", z.multiplicities()}};
}

std::string to_dot(const CurveConfig& config) {
  std::ostringstream out;
  out << "graph " << config.kind().name() << " {\n";
  for (int c : config.components()) out << "  C" << c << " [label=\"C" << c << " (-2)\"];\n";
  for (const auto& e : config.edges()) out << "  C" << e.a << " -- C" << e.b << ";\n";
  out << "}\n";
  return out.str();
}

Json to_json(const LineBundle& bundle) {
  Json deg = Json::object();
  for (std::size_t k = 0; k < bundle.support().size(); ++k)
    deg[std::to_string(bundle.support()[k])] = bundle.degrees()[k];
  return Json{{"support", bundle.support()}, {"deg", deg}, {"name", bundle.name()}};
}

LineBundle bundle_from_json(const CurveConfig& config, const Json& j) {
  try {
    if (!j.is_object() || !j.contains("support")) throw InvalidInput("bundle needs a \"support\" list");
    std::vector<int> support = j.at("support").get<std::vector<int>>();
    std::vector<int> degrees;
    const Json deg = j.value("deg", Json::object());
    for (int c : support) {
      const std::string key = std::to_string(c);
      degrees.push_back(deg.contains(key) ? deg.at(key).get<int>() : 0);
    }
    for (const auto& [key, value] : deg.items()) {
      if (std::find(support.begin(), support.end(), std::stoi(key)) == support.end()) {
        throw InvalidInput("degree given for C" + key + ", which is not in the support");
      }
    }
    return LineBundle(config, std::move(support), std::move(degrees));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed bundle: ") + e.what());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const InvalidInput*>(&e)) throw;
    throw InvalidInput(std::string("malformed bundle: ") + e.what());
  }
}

Json to_json(const ExtPresentation& pres) {
  Json f = Json::array(), g = Json::array(), eps = Json::array();
  for (const auto& l : pres.f()) f.push_back(to_json(l));
  for (const auto& l : pres.g()) g.push_back(to_json(l));
  for (std::size_t i = 0; i < pres.epsilon().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < pres.epsilon().cols(); ++j) row.push_back(to_json(pres.epsilon()(i, j)));
    eps.push_back(row);
  }
  return Json{{"config", pres.config().kind().name()},
              {"F", f},
              {"G", g},
              {"epsilon", eps},
              {"c1", pres.c1().multiplicities()},
              {"rank", pres.rank()},
              {"germs", pres.germ_count()}};
}

ExtPresentation presentation_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("config")) throw InvalidInput("presentation needs a \"config\"");
    const auto cfg = CurveConfig::build(j.at("config").get<std::string>());
    std::vector<LineBundle> f, g;
    for (const auto& b : j.value("F", Json::array())) f.push_back(bundle_from_json(cfg, b));
    for (const auto& b : j.value("G", Json::array())) g.push_back(bundle_from_json(cfg, b));
    if (!j.contains("epsilon")) return universal_extension(cfg, std::move(f), std::move(g));
    const Json& e = j.at("epsilon");
    if (!e.is_array() || e.size() != f.size()) throw InvalidInput("epsilon needs one row per F summand");
    Matrix eps(f.size(), g.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!e[i].is_array() || e[i].size() != g.size()) throw InvalidInput("epsilon needs one column per G summand");
      for (std::size_t k = 0; k < g.size(); ++k) eps(i, k) = rational_from_json(e[i][k]);
    }
    return ExtPresentation(cfg, std::move(f), std::move(g), std::move(eps));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed presentation: ") + e.what());
  }
}

Json to_json(const HomSpace& space, const CurveConfig& config) {
  Json nodes = Json::array(), values = Json::array();
  std::vector<std::pair<int, int>> boundary;
  for (int c : space.common())
    for (int nb : config.neighbors(c))
      if (std::find(space.common().begin(), space.common().end(), nb) == space.common().end()) {
        boundary.emplace_back(c, nb);
        nodes.push_back(Node::between(c, nb).name());
      }
  for (const auto& phi : space.basis()) {
    Json row = Json::array();
    for (auto [c, nb] : boundary) row.push_back(to_json(phi.value_at(config, c, nb)));
    values.push_back(row);
  }
  Json twisted = Json::array();
  for (auto [c, nb] : space.twisted_nodes()) twisted.push_back(Node::between(c, nb).name());
  return Json{{"source", to_json(space.source())},
              {"target", to_json(space.target())},
              {"dim", space.dimension()},
              {"common", space.common()},
              {"twisted_nodes", twisted},
              {"nodes", nodes},
              {"basis_values", values}};
}

Json to_json(const Ext1Germs& germs) {
  Json nodes = Json::array();
  for (const auto& n : germs.nodes) nodes.push_back(n.name());
  return Json{{"source", to_json(germs.source)},
              {"target", to_json(germs.target)},
              {"dim", germs.dimension()},
              {"nodes", nodes}};
}

Json to_json(const RigidityReport& r) {
  Json j{{"end_dimension", r.end_dimension},
         {"c1_square", r.c1_square},
         {"hom1", r.hom1},
         {"rigid", r.rigid},
         {"hypotheses", r.hypotheses},
         {"generated_dimension", r.generated_dimension},
         {"ext_dimension", r.ext_dimension}};
  j["criterion_b"] = r.criterion_b ? Json(*r.criterion_b) : Json(nullptr);
  return j;
}

Json to_json(const DecompositionReport& rep) {
  Json parts = Json::array();
  for (const auto& p : rep.parts) {
    parts.push_back(Json{{"presentation", to_json(p.presentation)},
                         {"rows", p.rows},
                         {"cols", p.cols},
                         {"multiplicity", p.multiplicity},
                         {"indecomposable", is_indecomposable(p.presentation)}});
  }
  Json a = Json::array(), b = Json::array(), nf = Json::array();
  for (const auto& x : rep.a) a.push_back(to_json(x));
  for (const auto& x : rep.b) b.push_back(to_json(x));
  for (std::size_t i = 0; i < rep.normal_form.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < rep.normal_form.cols(); ++k) row.push_back(to_json(rep.normal_form(i, k)));
    nf.push_back(row);
  }
  return Json{{"parts", parts}, {"a", a}, {"b", b}, {"normal_form", nf}, {"steps", rep.steps}};
}

Json to_json(const EnumerationResult& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json f = Json::array(), g = Json::array();
    for (const auto& l : w.f) f.push_back(l.name());
    for (const auto& l : w.g) g.push_back(l.name());
    witnesses.push_back(Json{{"rank", w.rank}, {"F", f}, {"G", g}, {"epsilon", w.epsilon}});
  }
  return Json{{"config", r.config},
              {"f_candidates", r.f_candidates},
              {"g_candidates", r.g_candidates},
              {"f_multisets", r.f_multisets},
              {"g_multisets", r.g_multisets},
              {"pattern_pairs", r.pattern_pairs},
              {"epsilons_solved", r.epsilons_solved},
              {"presentations", r.presentations},
              {"rigid_indecomposable_by_rank", r.rigid_indecomposable_by_rank},
              {"max_rigid_rank", r.max_rigid_rank},
              {"min_hom1", r.min_hom1},
              {"sides_rigid", r.sides_rigid},
              {"witnesses", witnesses}};
}

Json to_json(const BundlePoset& poset) {
  Json elements = Json::array(), relation = Json::array();
  for (const auto& e : poset.elements) elements.push_back(e.name());
  for (std::size_t p = 0; p < poset.size(); ++p)
    for (std::size_t q = 0; q < poset.size(); ++q)
      if (p != q && poset.leq[p][q]) relation.push_back({p, q});
  const std::size_t w = width(poset);
  return Json{{"elements", elements},
              {"relation", relation},
              {"width", w},
              {"max_minimal", poset.size() <= 20 ? max_minimal_exhaustive(poset) : max_antichain(poset).size()}};
}

Json load_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return Json::parse(text);
    std::ifstream in(text);
    if (!in) throw InvalidInput("cannot read " + text);
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ade
