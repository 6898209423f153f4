// adesheaf command-line front end.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adesheaf/errors.hpp"
#include "adesheaf/io.hpp"
#include "adesheaf/verify.hpp"

using namespace ade;

namespace {

constexpr int kInputError = 3;

int workers_from_env() {
  const char* v = std::getenv("ADESHEAF_WORKERS");
  if (v == nullptr || *v == '\0') return 1;
  try {
    const int n = std::stoi(v);
    if (n < 1) throw InvalidInput("ADESHEAF_WORKERS must be a positive integer");
    return n;
  } catch (const std::logic_error&) {
    throw InvalidInput(std::string("ADESHEAF_WORKERS must be a positive integer, got ") + v);
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

void emit(const Json& j, const std::string& json_path) {
  const std::string text = j.dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << text;
  } else {
    write_file(json_path, text);
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InvalidInput("");
    } catch (const std::logic_error&) {
      throw InvalidInput("expected a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  return out;
}

void print_summary(const VerificationReport& r) {
  std::cout << r.suite << ": " << status_name(r.status()) << " (" << r.checks.size() << " checks, " << r.failures()
            << " failed)\n";
  for (const auto& c : r.checks) {
    if (c.pass && !c.informational) continue;
    std::cout << "  " << (c.informational ? "[info] " : "[FAIL] ") << c.claim << ": computed " << c.computed.dump()
              << ", expected " << c.expected.dump() << "\n";
  }
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure sheaves on ADE exceptional curves: Hom/Ext calculus, extensions, rigidity and verification"};
  app.require_subcommand(1);

  std::string config_name = "D4";
  std::string json_path, dot_path, source_text, target_text, input_text, anchors_text;
  int rmax = 6, max_f = 4, max_g = 3;

  auto* config = app.add_subcommand("config", "Dual graph, intersection form and fundamental cycle");
  config->add_option("--config", config_name, "D(n), E(n) or A(n) symbol")->capture_default_str();
  config->add_option("--json", json_path, "Write JSON here instead of stdout");
  config->add_option("--dot", dot_path, "Write the dual graph in DOT format");

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--config", config_name)->capture_default_str();
    sub->add_option("--source", source_text, "Bundle JSON or file, e.g. {\"support\":[4],\"deg\":{\"4\":0}}")
        ->required();
    sub->add_option("--target", target_text, "Bundle JSON or file")->required();
    sub->add_option("--json", json_path);
  };
  auto* hom = app.add_subcommand("hom", "Hom between two line bundles");
  add_pair(hom);
  auto* chi = app.add_subcommand("chi", "Euler pairing and hom1 on the surface");
  add_pair(chi);
  auto* ext1 = app.add_subcommand("ext1", "Ext^1 germs on the reduced curve");
  add_pair(ext1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input_text, "Presentation JSON or file")->required();
    sub->add_option("--json", json_path);
  };
  auto* universal = app.add_subcommand("construct-universal", "Universal extension (epsilon = 1 on every germ)");
  add_input(universal);
  auto* decomp = app.add_subcommand("decompose", "Krull-Schmidt decomposition of a presentation");
  add_input(decomp);
  auto* rigid = app.add_subcommand("rigid-check", "O_X-rigidity report");
  add_input(rigid);
  auto* endalg = app.add_subcommand("end-algebra", "Endomorphism algebra of a presentation");
  add_input(endalg);

  auto* enumerate = app.add_subcommand("enumerate", "Bounded enumeration of rigid indecomposables");
  enumerate->add_option("--config", config_name)->capture_default_str();
  enumerate->add_option("--max-f", max_f)->capture_default_str();
  enumerate->add_option("--max-g", max_g)->capture_default_str();
  enumerate->add_option("--anchors", anchors_text, "Comma-separated anchors, one per component");
  enumerate->add_option("--json", json_path);

  auto* verify = app.add_subcommand("verify", "Verification suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "all, rank, rigid, tables or hom")
      ->check(CLI::IsMember({"all", "rank", "rigid", "tables", "hom"}))
      ->capture_default_str();
  verify->add_option("--config", config_name, "Configuration for the rigid suite")->capture_default_str();
  verify->add_option("--rmax", rmax)->capture_default_str();
  verify->add_option("--max-f", max_f)->capture_default_str();
  verify->add_option("--max-g", max_g)->capture_default_str();
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_option("--dot", dot_path, "Write the D4 table poset Hasse diagram here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*config) {
      const auto cfg = CurveConfig::build(config_name);
      Json j = to_json(cfg);
      j["fundamental_cycle"] = to_json(cfg, fundamental_cycle(cfg)).at("mult");
      j["intersection_matrix"] = cfg.intersection_matrix();
      emit(j, json_path);
      if (!dot_path.empty()) write_file(dot_path, to_dot(cfg));
      return 0;
    }
    if (*hom || *chi || *ext1) {
      const auto cfg = CurveConfig::build(config_name);
      const auto a = bundle_from_json(cfg, load_json(source_text));
      const auto b = bundle_from_json(cfg, load_json(target_text));
      if (*hom) {
        Json j = to_json(hom0(cfg, a, b), cfg);
        j["oracle_dim"] = hom0_oracle(cfg, a, b);
        emit(j, json_path);
      } else if (*chi) {
        emit(Json{{"source", a.name()},
                  {"target", b.name()},
                  {"chi", chi_X(cfg, a, b)},
                  {"hom0", hom0(cfg, a, b).dimension()},
                  {"hom0_back", hom0(cfg, b, a).dimension()},
                  {"hom1", hom1_X(cfg, a, b)}},
             json_path);
      } else {
        emit(to_json(ext1_Z(cfg, a, b)), json_path);
      }
      return 0;
    }
    if (*universal || *decomp || *rigid || *endalg) {
      Json in = load_json(input_text);
      if (*universal) in.erase("epsilon");
      const auto pres = presentation_from_json(in);
      if (*universal) {
        emit(to_json(pres), json_path);
      } else if (*decomp) {
        emit(to_json(decompose(pres)), json_path);
      } else if (*rigid) {
        Json j = to_json(is_OX_rigid(pres));
        j["indecomposable"] = is_indecomposable(pres);
        j["rank"] = pres.rank();
        emit(j, json_path);
      } else {
        const auto end = end_algebra(pres);
        Json basis = Json::array();
        for (const auto& v : end.basis) {
          Json row = Json::array();
          for (const auto& x : v) row.push_back(to_json(x));
          basis.push_back(row);
        }
        emit(Json{{"dimension", end.dimension()},
                  {"radical_dimension", end.algebra.radical().dimension()},
                  {"semisimple_dimension", end.algebra.semisimple_dimension()},
                  {"local", end.algebra.semisimple_dimension() == 1},
                  {"f_dimension", end.f_dimension},
                  {"basis", basis}},
             json_path);
      }
      return 0;
    }
    if (*enumerate) {
      const auto cfg = CurveConfig::build(config_name);
      EnumerationBounds b{max_f, max_g, parse_int_list(anchors_text)};
      emit(to_json(enumerate_presentations(cfg, b, workers_from_env())), json_path);
      return 0;
    }
    if (*verify) {
      const int workers = workers_from_env();
      std::vector<VerificationReport> reports;
      if (suite == "all") {
        reports = verify_all(rmax, workers);
      } else if (suite == "rank") {
        reports.push_back(verify_unbounded_rank(rmax));
      } else if (suite == "rigid") {
        reports.push_back(
            verify_rigid_bound(CurveConfig::build(config_name), EnumerationBounds{max_f, max_g, {}}, workers));
      } else if (suite == "tables") {
        reports.push_back(verify_tables());
      } else {
        reports.push_back(verify_hom_engine());
      }
      for (const auto& r : reports) print_summary(r);
      const Status status = combined_status(reports);
      std::cout << "overall: " << status_name(status) << "\n";
      if (!json_path.empty()) {
        Json suites = Json::array();
        for (const auto& r : reports) suites.push_back(to_json(r));
        write_file(json_path, Json{{"status", status_name(status)}, {"suites", suites}}.dump(2) + "\n");
      }
      if (!dot_path.empty()) write_file(dot_path, to_dot(d4_table_poset()));
      return exit_code(status);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
