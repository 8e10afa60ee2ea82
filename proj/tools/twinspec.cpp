// Command-line front end: builds graphs, computes exact polynomials and
// spectra, produces displacement reports and regenerates the reference tables.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twinspec/charpoly.hpp"
#include "twinspec/displacement.hpp"
#include "twinspec/error.hpp"
#include "twinspec/graph.hpp"
#include "twinspec/report.hpp"
#include "twinspec/reproduce.hpp"
#include "twinspec/spectrum.hpp"

namespace ts = twinspec;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string graph_path;
  std::string nsg;
  std::string pair = "auto";
  double tol = ts::kDefaultTolerance;
  std::string format = "text";
  std::string out;
  std::string poly;
  std::string table = "all";
  std::string data_dir;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ts::Error(ts::ErrorCode::InvalidArgument, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ts::Error(ts::ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ts::Graph load_graph(const Options& o) {
  const bool has_file = !o.graph_path.empty();
  const bool has_nsg = !o.nsg.empty();
  if (has_file == has_nsg) {
    throw ts::Error(ts::ErrorCode::InvalidArgument, "give exactly one of --graph or --nsg");
  }
  if (has_nsg) return ts::build_nsg(ts::CreationSequence::parse(o.nsg));
  return ts::parse_graph(read_input(o.graph_path));
}

ts::TwinPair resolve_pair(const ts::Graph& g, const std::string& text) {
  if (text == "auto") {
    const auto twins = ts::find_twins(g);
    if (twins.empty()) throw ts::Error(ts::ErrorCode::NotTwins, "graph has no twin pair");
    return twins.front();
  }
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ts::Error(ts::ErrorCode::ParseError, "--pair must be 'l,k' or 'auto', got '" + text + "'");
  }
  try {
    std::size_t used_l = 0;
    std::size_t used_k = 0;
    const std::string ls = text.substr(0, comma);
    const std::string ks = text.substr(comma + 1);
    const int l = std::stoi(ls, &used_l);
    const int k = std::stoi(ks, &used_k);
    if (used_l != ls.size() || used_k != ks.size()) throw std::invalid_argument("trailing characters");
    return ts::make_twin_pair(g, l, k);
  } catch (const std::logic_error&) {
    throw ts::Error(ts::ErrorCode::ParseError, "--pair must be 'l,k' or 'auto', got '" + text + "'");
  }
}

/// Comma-separated integer coefficients, highest degree first.
ts::Polynomial parse_poly(const std::string& text) {
  std::vector<ts::Integer> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    ts::Integer c;
    if (item.empty() || c.set_str(item, 10) != 0) {
      throw ts::Error(ts::ErrorCode::ParseError, "--poly: '" + item + "' is not an integer");
    }
    coeffs.push_back(c);
  }
  std::reverse(coeffs.begin(), coeffs.end());
  return ts::Polynomial(std::move(coeffs));
}

void emit_polynomial_text(std::ostream& os, const ts::Polynomial& p) {
  os << ts::to_string(p) << '\n' << ts::to_factored_string(p) << '\n';
}

json polynomial_json(const ts::Polynomial& p) {
  return {{"coefficients", ts::polynomial_to_json(p)},
          {"expanded", ts::to_string(p)},
          {"factored", ts::to_factored_string(p)}};
}

std::string spectrum_text(const ts::Spectrum& s) {
  std::ostringstream os;
  for (const auto& r : s.roots) {
    os << (r.exact ? r.exact->get_str() : ts::format_sig(r.value, 15));
    if (r.multiplicity > 1) os << "  (x" << r.multiplicity << ")";
    os << '\n';
  }
  return os.str();
}

int cmd_nsg(const Options& o) {
  if (o.nsg.empty()) throw ts::Error(ts::ErrorCode::InvalidArgument, "nsg requires --nsg");
  Output out(o.out);
  out.stream() << ts::to_json_string(ts::build_nsg(ts::CreationSequence::parse(o.nsg))) << '\n';
  return 0;
}

int cmd_twins(const Options& o) {
  const auto twins = ts::find_twins(load_graph(o));
  Output out(o.out);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& p : twins) j.push_back(ts::twin_pair_to_json(p));
    out.stream() << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out.stream() << "ell,k,kind\n";
    for (const auto& p : twins) out.stream() << p.ell << ',' << p.k << ',' << ts::to_string(p.kind) << '\n';
  } else {
    for (const auto& p : twins) out.stream() << p.ell << ' ' << p.k << ' ' << ts::to_string(p.kind) << '\n';
  }
  return 0;
}

int cmd_charpoly(const Options& o) {
  const auto p = ts::charpoly(load_graph(o));
  Output out(o.out);
  if (o.format == "json") {
    out.stream() << polynomial_json(p).dump(2) << '\n';
  } else {
    emit_polynomial_text(out.stream(), p);
  }
  return 0;
}

int cmd_mainpoly(const Options& o) {
  const auto p = ts::main_polynomial(load_graph(o));
  Output out(o.out);
  if (o.format == "json") {
    json j = polynomial_json(p);
    j["degree"] = p.degree();
    out.stream() << j.dump(2) << '\n';
  } else {
    emit_polynomial_text(out.stream(), p);
  }
  return 0;
}

int cmd_cofactor(const Options& o) {
  const auto g = load_graph(o);
  const auto pair = resolve_pair(g, o.pair);
  const auto h = ts::cofactor(g, pair.ell, pair.k);
  Output out(o.out);
  if (o.format == "json") {
    json j = polynomial_json(h);
    j["pair"] = ts::twin_pair_to_json(pair);
    out.stream() << j.dump(2) << '\n';
  } else {
    emit_polynomial_text(out.stream(), h);
  }
  return 0;
}

int cmd_spectrum(const Options& o) {
  ts::Spectrum s;
  if (!o.poly.empty()) {
    if (!o.graph_path.empty() || !o.nsg.empty()) {
      throw ts::Error(ts::ErrorCode::InvalidArgument, "give exactly one of --graph, --nsg or --poly");
    }
    s = ts::isolate_real_roots(parse_poly(o.poly), o.tol, false);
    if (!s.all_real()) {
      std::cerr << "warning: " << s.real_count() << " of " << s.degree << " roots are real\n";
    }
  } else {
    s = ts::eigenvalues(load_graph(o), o.tol);
  }
  Output out(o.out);
  if (o.format == "json") {
    out.stream() << json{{"degree", s.degree}, {"real_count", s.real_count()}, {"roots", ts::spectrum_to_json(s)}}.dump(2)
                 << '\n';
  } else if (o.format == "csv") {
    out.stream() << "value,multiplicity,exact,lo,hi\n";
    for (const auto& r : s.roots) {
      out.stream() << ts::format_sig(r.value, 17) << ',' << r.multiplicity << ','
                   << (r.exact ? r.exact->get_str() : "") << ',' << r.isolating_interval.lo.get_str() << ','
                   << r.isolating_interval.hi.get_str() << '\n';
    }
  } else {
    out.stream() << spectrum_text(s);
  }
  return 0;
}

int cmd_estimate(const Options& o) {
  const auto g = load_graph(o);
  const auto report = ts::displacement_report(g, resolve_pair(g, o.pair), o.tol);
  Output out(o.out);
  if (o.format == "json") {
    out.stream() << ts::report_to_json(report).dump(2) << '\n';
  } else if (o.format == "csv") {
    out.stream() << ts::report_to_csv(report);
  } else {
    out.stream() << ts::report_to_text(report);
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const auto g = load_graph(o);
  const auto pair = resolve_pair(g, o.pair);
  const auto r = ts::verify_twin_identity(g, pair);
  Output out(o.out);
  if (o.format == "json") {
    json j = ts::identity_report_to_json(r);
    j["pair"] = ts::twin_pair_to_json(pair);
    out.stream() << j.dump(2) << '\n';
  } else {
    auto& os = out.stream();
    os << "pair " << pair.ell << ',' << pair.k << " (" << ts::to_string(pair.kind) << ")\n";
    os << "Φ(G)     = " << ts::to_factored_string(r.phi_g) << '\n';
    os << "Φ(G-v)   = " << ts::to_factored_string(r.phi_g_minus) << '\n';
    os << "h        = " << ts::to_string(r.h) << '\n';
    os << "identity " << (r.identity_holds ? "holds" : "FAILS") << '\n';
    if (r.discrepancy) os << "discrepancy = " << ts::to_string(*r.discrepancy) << '\n';
  }
  return r.identity_holds ? 0 : kExitVerifyFailed;
}

int cmd_reproduce(const Options& o) {
  const std::filesystem::path data_dir = o.data_dir.empty() ? ts::default_data_dir() : std::filesystem::path(o.data_dir);
  std::vector<ts::TableId> ids;
  if (o.table == "all") {
    ids.assign(std::begin(ts::kAllTables), std::end(ts::kAllTables));
  } else {
    ids.push_back(ts::parse_table_id(o.table));
  }
  Output out(o.out);
  bool all_pass = true;
  json j = json::array();
  for (auto id : ids) {
    const auto r = ts::reproduce(id, data_dir, o.tol);
    all_pass = all_pass && r.passed();
    if (o.format == "json") {
      j.push_back(ts::reproduction_to_json(r));
    } else {
      out.stream() << ts::reproduction_to_text(r) << '\n';
    }
  }
  if (o.format == "json") out.stream() << (ids.size() == 1 ? j.front() : j).dump(2) << '\n';
  return all_pass ? 0 : kExitVerifyFailed;
}

int cmd_reconstruct(const Options& o) {
  const auto r = ts::reconstruct_g8();
  std::cerr << r.matches.size() << " matching graphs among " << r.candidates_examined
            << " connected candidates, " << r.isomorphism_classes << " isomorphism class(es)\n";
  Output out(o.out);
  json j = ts::g8_fixture_json(r);
  if (o.format == "json") {
    json all = json::array();
    for (const auto& g : r.matches) all.push_back(json::parse(ts::to_json_string(g)));
    j["all_matches"] = all;
  }
  out.stream() << j.dump(2) << '\n';
  return 0;
}

bool wants_json(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--format=json") return true;
    if (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json") return true;
  }
  return false;
}

int report_error(bool json_errors, const std::string& code, const std::string& message) {
  if (json_errors) {
    std::cout << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
  }
  std::cerr << "error: " << message << '\n';
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  const bool json_errors = wants_json(argc, argv);
  Options o;
  CLI::App app{"Exact spectra of graphs with twin vertices"};
  app.require_subcommand(1);

  auto add_input = [&o](CLI::App* sub) {
    sub->add_option("--graph", o.graph_path, "Graph file: JSON {n, edges} or an edge list ('-' for stdin)");
    sub->add_option("--nsg", o.nsg, "Nested split graph creation sequence, e.g. 2,2,1,1");
  };
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Root isolation tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", o.out, "Write output here instead of stdout");
  };
  auto add_pair = [&o](CLI::App* sub) {
    sub->add_option("--pair", o.pair, "Twin pair 'l,k' (l is deleted) or 'auto'");
  };

  auto* nsg = app.add_subcommand("nsg", "Build a nested split graph and print it as JSON");
  nsg->add_option("--nsg", o.nsg, "Creation sequence")->required();
  add_common(nsg);
  auto* twins = app.add_subcommand("twins", "List twin pairs");
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial (expanded, then factored)");
  auto* mainpoly = app.add_subcommand("mainpoly", "Polynomial whose roots are the main eigenvalues");
  auto* cofactor = app.add_subcommand("cofactor", "Adjugate entry h_{l,k} of λI - A");
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues with multiplicities");
  spectrum->add_option("--poly", o.poly, "Integer coefficients, highest degree first, instead of a graph");
  auto* estimate = app.add_subcommand("estimate", "Displacement report for deleting a twin vertex");
  auto* verify = app.add_subcommand("verify", "Check the twin-deletion identity (exit 1 if it fails)");
  for (auto* sub : {twins, charpoly, mainpoly, cofactor, spectrum, estimate, verify}) {
    add_input(sub);
    add_common(sub);
  }
  for (auto* sub : {cofactor, estimate, verify}) add_pair(sub);

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a reference table and diff it (exit 1 on mismatch)");
  reproduce->add_option("table", o.table, "A1, A2, A3, B1, B2 or all")->default_val("all");
  reproduce->add_option("--data-dir", o.data_dir, "Directory with reference/ and g8.json");
  add_common(reproduce);
  auto* reconstruct = app.add_subcommand("reconstruct-g8", "Search for the 8-vertex example graph and emit its fixture");
  add_common(reconstruct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(json_errors, "UsageError", e.what());
  }

  try {
    if (*nsg) return cmd_nsg(o);
    if (*twins) return cmd_twins(o);
    if (*charpoly) return cmd_charpoly(o);
    if (*mainpoly) return cmd_mainpoly(o);
    if (*cofactor) return cmd_cofactor(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*estimate) return cmd_estimate(o);
    if (*verify) return cmd_verify(o);
    if (*reproduce) return cmd_reproduce(o);
    if (*reconstruct) return cmd_reconstruct(o);
  } catch (const ts::Error& e) {
    return report_error(json_errors, std::string(ts::to_string(e.code())), e.what());
  }
  return kExitUsage;
}
