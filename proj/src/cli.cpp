#include "lpakit/cli.hpp"

#include "lpakit/errors.hpp"
#include "lpakit/expression.hpp"
#include "lpakit/graph_json.hpp"
#include "lpakit/invariants.hpp"
#include "lpakit/unitary.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace lpakit {

namespace {

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string data = buffer.str();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

IntVector parse_vector(const std::string& text) {
  std::vector<BigInt> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty entry in vector '" + text + "'");
    item = item.substr(first, last - first + 1);
    const std::size_t digits_from = item[0] == '-' || item[0] == '+' ? 1 : 0;
    if (digits_from == item.size() || item.find_first_not_of("0123456789", digits_from) != std::string::npos)
      throw InputError("'" + item + "' is not an integer");
    values.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  IntVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

std::string q_ideal_string(const PathAlgebra& ctx, const std::map<Monomial, Rational>& coords) {
  if (coords.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : coords) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (mag != 1) out += mag.str() + "*";
    if (!m.alpha.trivial()) out += ctx.path_string(m.alpha) + "*";
    out += "q_" + ctx.graph().vertex_name(m.alpha.dst);
    if (!m.beta.trivial()) out += "*" + ctx.monomial_string({ctx.vertex_path(m.beta.dst), m.beta});
  }
  return out;
}

void render(const nlohmann::json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    out << pad << it.key() << ":";
    if (v.is_object()) {
      out << "\n";
      render(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_array()) {
      out << "\n";
      for (const auto& row : v) out << pad << "  " << row.dump() << "\n";
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << "\n";
      for (const auto& item : v) out << pad << "  - " << item.dump() << "\n";
    } else {
      out << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

struct Options {
  bool pretty = false;
  bool no_verify = false;
  std::uint64_t budget = 10000;
  std::string graph, graph2, target = "ell", x, context = "leavitt", expression;
  bool boundary_check = false;
};

nlohmann::json cmd_invariants(const Options& o) {
  const Graph g = load_graph_file(o.graph);
  auto j = to_json(compute_invariants(g));
  j["vertices"] = g.vertex_names();
  return j;
}

nlohmann::json cmd_classify(const Options& o) {
  const Graph e = load_graph_file(o.graph);
  const Graph f = load_graph_file(o.graph2);
  return to_json(classify(e, f, options_from_env(o.budget)));
}

nlohmann::json cmd_ext(const Options& o) {
  const Graph e = load_graph_file(o.graph);
  if (o.target == "ell") return to_json(ext_group(e, GroundField{}));
  return to_json(ext_group(e, load_graph_file(o.target)));
}

nlohmann::json cmd_unitary(const Options& o) {
  const Graph g = load_graph_file(o.graph);
  const auto ctx = PathAlgebra::create(g, AlgebraKind::Leavitt);
  const auto bundle = build_U<Rational>(ctx, parse_vector(o.x), !o.no_verify);
  auto j = to_json(bundle);
  if (o.boundary_check) j["boundary"] = to_json(boundary_class(bundle, !o.no_verify));
  return j;
}

nlohmann::json cmd_eval(const Options& o) {
  const Graph g = load_graph_file(o.graph);
  AlgebraKind kind;
  if (o.context == "leavitt")
    kind = AlgebraKind::Leavitt;
  else if (o.context == "cohn")
    kind = AlgebraKind::Cohn;
  else
    throw InputError("context must be 'leavitt' or 'cohn'");
  const auto ctx = PathAlgebra::create(g, kind);
  const auto a = parse_expression<Rational>(o.expression, ctx);
  nlohmann::json j{{"context", o.context}, {"normal_form", a.to_string()}, {"terms", a.size()}};
  if (kind == AlgebraKind::Leavitt) {
    j["in_DL"] = is_in_DL(a);
    j["basis"] = "monomials alpha beta^* not both ending in the first edge emitted by r(alpha)";
  } else {
    j["in_DC"] = is_in_DC(a);
    if (const auto coords = q_ideal_coordinates(a)) j["q_ideal_form"] = q_ideal_string(*ctx, *coords);
  }
  return j;
}

nlohmann::json cmd_canonical(const Options& o) {
  const Graph g = load_graph_file(o.graph);
  const Graph c = canonical_representative(g);
  return {{"graph", graph_to_json(c)}, {"k0", to_json(cokernel(bk_matrix(c)).group)}};
}

nlohmann::json cmd_simple_check(const Options& o) {
  const Graph g = load_graph_file(o.graph);
  const auto cls = classify_vertices(g);
  auto names = [&](const std::vector<std::size_t>& vs) {
    std::vector<std::string> out;
    for (std::size_t v : vs) out.push_back(g.vertex_name(v));
    return out;
  };
  nlohmann::json j{{"regular", names(cls.regular)},
                   {"sinks", names(cls.sinks)},
                   {"sources", names(cls.sources)},
                   {"condition_L", condition_L(g)},
                   {"simple", is_simple(g)},
                   {"purely_infinite_simple", is_purely_infinite_simple(g)},
                   {"simplicity", simplicity_of(g).name()}};
  if (const auto n = matrix_algebra_size(g)) j["matrix_size"] = to_json(*n);
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-theory invariants and unitaries of Leavitt path algebras"};
  app.name("lpakit");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Human-readable rendering instead of JSON");
  app.add_flag("--no-verify", o.no_verify, "Skip postcondition verification");

  auto* inv = app.add_subcommand("invariants", "Pointed K_0, ker(I - A_E^t) and K_1 of L(E)");
  inv->add_option("graph", o.graph, "Graph JSON file")->required();
  auto* cls = app.add_subcommand("classify", "Homotopy classification verdict for L(E) and L(F)");
  cls->add_option("E", o.graph, "Graph JSON file")->required();
  cls->add_option("F", o.graph2, "Graph JSON file")->required();
  cls->add_option("--budget", o.budget, "Largest torsion subgroup searched exhaustively");
  auto* ext = app.add_subcommand("ext", "Ext(L(E), R) for R = l or a purely infinite simple L(F)");
  ext->add_option("graph", o.graph, "Graph JSON file")->required();
  ext->add_option("--target", o.target, "'ell' or a graph JSON file");
  auto* uni = app.add_subcommand("unitary", "Build U(x) for x in ker(I - A_E^t)");
  uni->add_option("graph", o.graph, "Graph JSON file")->required();
  uni->add_option("--x", o.x, "Comma-separated integers indexed by regular vertices")->required();
  uni->add_flag("--boundary-check", o.boundary_check, "Compute the boundary in the Cohn algebra");
  auto* ev = app.add_subcommand("eval", "Normal form of an expression in L(E) or C(E)");
  ev->add_option("graph", o.graph, "Graph JSON file")->required();
  ev->add_option("expression", o.expression, "Expression")->required();
  ev->add_option("--context", o.context, "'leavitt' or 'cohn'");
  auto* can = app.add_subcommand("canonical", "Sum of roses with the same finite K_0");
  can->add_option("graph", o.graph, "Graph JSON file")->required();
  auto* sc = app.add_subcommand("simple-check", "Vertex classification and simplicity predicates");
  sc->add_option("graph", o.graph, "Graph JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::vector<std::pair<CLI::App*, std::function<nlohmann::json(const Options&)>>> commands{
      {inv, cmd_invariants}, {cls, cmd_classify}, {ext, cmd_ext},          {uni, cmd_unitary},
      {ev, cmd_eval},        {can, cmd_canonical}, {sc, cmd_simple_check}};

  nlohmann::json report;
  int status = 0;
  for (const auto& [sub, run] : commands) {
    if (!sub->parsed()) continue;
    report["command"] = sub->get_name();
    report["inputs"] = nlohmann::json::array();
    try {
      for (const auto* path : {&o.graph, &o.graph2}) {
        if (path->empty()) continue;
        report["inputs"].push_back({{"path", *path}, {"sha256", sha256_file(*path)}});
      }
      if (sub == ext && o.target != "ell")
        report["inputs"].push_back({{"path", o.target}, {"sha256", sha256_file(o.target)}});
      report["result"] = run(o);
      report["status"] = "ok";
    } catch (const VerificationError& e) {
      report["status"] = "verification-failed";
      report["error"] = e.what();
      status = 3;
    } catch (const InputError& e) {
      report["status"] = "input-error";
      report["error"] = e.what();
      status = 2;
    } catch (const std::exception& e) {
      report["status"] = "internal-error";
      report["error"] = e.what();
      status = 3;
    }
    report["verified"] = !o.no_verify;
  }

  if (o.pretty)
    render(report, out, 0);
  else
    out << report.dump(2) << "\n";
  if (status != 0) err << "lpakit: " << report["error"].get<std::string>() << "\n";
  return status;
}

}  // namespace lpakit
