#include "twinspec/reproduce.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "twinspec/charpoly.hpp"
#include "twinspec/error.hpp"
#include "twinspec/report.hpp"

#ifndef TWINSPEC_DEFAULT_DATA_DIR
#define TWINSPEC_DEFAULT_DATA_DIR "data"
#endif

namespace twinspec {

std::string_view to_string(TableId id) noexcept {
  switch (id) {
    case TableId::A1: return "A1";
    case TableId::A2: return "A2";
    case TableId::A3: return "A3";
    case TableId::B1: return "B1";
    case TableId::B2: return "B2";
  }
  return "unknown";
}

TableId parse_table_id(std::string_view text) {
  for (TableId id : kAllTables) {
    if (to_string(id) == text) return id;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown table '" + std::string(text) + "' (expected A1, A2, A3, B1 or B2)");
}

std::filesystem::path default_data_dir() { return TWINSPEC_DEFAULT_DATA_DIR; }

bool matches_printed(double computed, std::string_view expected) {
  const double e = std::stod(std::string(expected));
  if (!std::isfinite(computed)) return false;
  if (e == 0.0) return std::fabs(computed) <= 1e-9;
  const double unit = std::pow(10.0, std::floor(std::log10(std::fabs(e))) - 2.0);
  return std::fabs(computed - e) <= 1.5 * unit;
}

Polynomial polynomial_from_factors(const nlohmann::json& factors) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& f : factors) {
    std::vector<Integer> ascending;
    for (const auto& c : f.at("descending")) ascending.emplace_back(c.get<long>());
    std::reverse(ascending.begin(), ascending.end());
    const Polynomial factor(std::move(ascending));
    for (int i = 0; i < f.at("power").get<int>(); ++i) out = out * factor;
  }
  return out;
}

int TableReproduction::failed_cells() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const CellCheck& c) { return !c.pass; }));
}

bool TableReproduction::polynomials_pass() const {
  return std::all_of(polynomials.begin(), polynomials.end(),
                     [](const PolynomialCheck& p) { return p.pass || p.documented_discrepancy; });
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FixtureMissing, "fixture not found: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json load_fixture(TableId id, const std::filesystem::path& data_dir) {
  const auto path = data_dir / "reference" / (std::string(to_string(id)) + ".json");
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

Graph load_graph(const nlohmann::json& where, const std::filesystem::path& data_dir) {
  if (where.contains("nsg")) return build_nsg(CreationSequence::parse(where["nsg"].get<std::string>()));
  return parse_graph(read_file(data_dir / where.at("file").get<std::string>()));
}

CellCheck check(const std::string& row, const std::string& column, const nlohmann::json& expected,
                std::optional<double> computed) {
  CellCheck c;
  c.row = row;
  c.column = column;
  c.expected = expected.get<std::string>();
  c.computed = computed.value_or(kNaN);
  c.pass = computed && matches_printed(*computed, c.expected);
  return c;
}

bool kind_matches(const DisplacementRow& row, const std::string& kind) { return to_string(row.kind) == kind; }

/// First unused report row of the right kind whose G (and G') values match.
std::optional<std::size_t> match_row(const DisplacementReport& report, const nlohmann::json& expected,
                                     const std::vector<bool>& used) {
  const std::string kind = expected.at("kind").get<std::string>();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    if (used[i] || !kind_matches(row, kind)) continue;
    if (!matches_printed(row.lambda_g, expected.at("g").get<std::string>())) continue;
    if (expected.contains("gp") &&
        !(row.lambda_gp && matches_printed(*row.lambda_gp, expected["gp"].get<std::string>()))) {
      continue;
    }
    return i;
  }
  return std::nullopt;
}

void second_cells(const std::string& label, const nlohmann::json& expected, const DisplacementRow* row,
                  std::vector<CellCheck>& out) {
  const std::string kind = expected.at("kind").get<std::string>();
  const SecondOrder* s = row && row->second ? &*row->second : nullptr;
  if (kind == "conjugate") {
    const bool ok = s && s->kind == SecondOrderKind::Conjugate;
    out.push_back(check(label, "second.re", expected.at("re"), ok ? std::optional(s->real_part) : std::nullopt));
    out.push_back(check(label, "second.im", expected.at("im"), ok ? std::optional(s->imag_part) : std::nullopt));
    return;
  }
  const auto& values = expected.at("values");
  const bool ok = s && s->kind == SecondOrderKind::RealPair && s->roots.size() == values.size();
  std::vector<std::optional<double>> roots(values.size());
  if (ok) {
    // Pair listed values with computed roots, trying both orders.
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> best = order;
    int best_hits = -1;
    do {
      int hits = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        hits += matches_printed(s->roots[order[i]], values[i].get<std::string>()) ? 1 : 0;
      }
      if (hits > best_hits) {
        best_hits = hits;
        best = order;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    for (std::size_t i = 0; i < best.size(); ++i) roots[i] = s->roots[best[i]];
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.push_back(check(label, "second[" + std::to_string(i) + "]", values[i], roots[i]));
  }
}

std::vector<CellCheck> compare_rows(const DisplacementReport& report, const nlohmann::json& rows,
                                    bool estimates_only) {
  std::vector<CellCheck> out;
  std::vector<bool> used(report.rows.size(), false);
  for (const auto& expected : rows) {
    const std::string label = expected.at("source").get<std::string>();
    const auto index = match_row(report, expected, used);
    const DisplacementRow* row = index ? &report.rows[*index] : nullptr;
    if (index) used[*index] = true;
    if (!estimates_only) {
      out.push_back(check(label, "g", expected.at("g"), row ? std::optional(row->lambda_g) : std::nullopt));
      if (expected.contains("gp")) out.push_back(check(label, "gp", expected["gp"], row ? row->lambda_gp : std::nullopt));
      if (expected.contains("actual")) {
        out.push_back(check(label, "actual", expected["actual"], row ? row->actual : std::nullopt));
      }
    }
    if (expected.contains("first")) out.push_back(check(label, "first", expected["first"], row ? row->first : std::nullopt));
    if (expected.contains("second")) second_cells(label, expected["second"], row, out);
    if (expected.contains("chosen")) {
      std::optional<double> chosen;
      if (row && row->selection) chosen = row->selection->chosen;
      out.push_back(check(label, "chosen", expected["chosen"], chosen));
    }
  }
  return out;
}

}  // namespace

TableReproduction reproduce(TableId id, const std::filesystem::path& data_dir, double tol) {
  const nlohmann::json fixture = load_fixture(id, data_dir);
  const Graph g = load_graph(fixture.at("graph"), data_dir);
  const auto& pair_json = fixture.at("pair");
  const TwinPair pair = make_twin_pair(g, pair_json.at(0).get<int>(), pair_json.at(1).get<int>());

  TableReproduction out;
  out.id = id;
  out.title = fixture.value("title", std::string());

  const Polynomial ref_phi_g = polynomial_from_factors(fixture.at("phi_g"));
  const Polynomial ref_h = polynomial_from_factors(fixture.at("h"));
  const Polynomial ref_phi_gp = polynomial_from_factors(fixture.at("phi_gp"));
  const TwinIdentityReport identity = verify_twin_identity(g, pair);

  out.polynomials.push_back({"phi_g", ref_phi_g, identity.phi_g, identity.phi_g == ref_phi_g, false});
  out.polynomials.push_back({"h", ref_h, identity.h, identity.h == ref_h, false});
  out.polynomials.push_back({"phi_gp", ref_phi_gp, identity.phi_g_minus, identity.phi_g_minus == ref_phi_gp, false});
  if (!identity.identity_holds) out.notes.push_back("computed polynomials violate the twin-deletion identity");

  // A reference h that cannot produce the reference Φ(G') is a transcription
  // error in the reference data, provided the computed side is consistent.
  bool reference_consistent = true;
  try {
    reference_consistent = exact_div(ref_phi_g, Polynomial::shifted_variable(pair.a)) + ref_h == ref_phi_gp;
  } catch (const Error&) {
    reference_consistent = false;
  }
  PolynomialCheck& h_check = out.polynomials[1];
  if (!h_check.pass && !reference_consistent && identity.identity_holds && out.polynomials[0].pass &&
      out.polynomials[2].pass) {
    h_check.documented_discrepancy = true;
    out.notes.push_back("reference h_{" + std::to_string(pair.ell) + "," + std::to_string(pair.k) + "} = " +
                        to_string(ref_h) + " does not satisfy the twin-deletion identity with the reference " +
                        "Φ(G) and Φ(G'); computed h = " + to_string(identity.h) +
                        " does, and the computed Φ(G') equals the reference Φ(G')");
  }

  out.report = displacement_report(g, pair, tol);
  out.cells = compare_rows(out.report, fixture.at("rows"), false);

  if (h_check.documented_discrepancy) {
    const auto alt = displacement_report(g, pair, build_estimator(identity.phi_g, pair.a, ref_h), tol);
    out.diagnostic_cells = compare_rows(alt, fixture.at("rows"), true);
    const auto hits = std::count_if(out.diagnostic_cells.begin(), out.diagnostic_cells.end(),
                                    [](const CellCheck& c) { return c.pass; });
    out.notes.push_back("estimates recomputed with f = Φ(G)/(λ+" + std::to_string(pair.a) +
                        ") + reference h match " + std::to_string(hits) + " of " +
                        std::to_string(out.diagnostic_cells.size()) + " reference estimate cells");
  }
  return out;
}

namespace {

std::string cell_line(const CellCheck& c) {
  std::ostringstream os;
  os << (c.pass ? "ok   " : "FAIL ") << c.row << "  " << c.column << "  expected " << c.expected << "  computed "
     << format_sig(c.computed, 6);
  return os.str();
}

nlohmann::json cell_json(const CellCheck& c) {
  return {{"row", c.row},
          {"column", c.column},
          {"expected", c.expected},
          {"computed", std::isfinite(c.computed) ? nlohmann::json(c.computed) : nlohmann::json(nullptr)},
          {"pass", c.pass}};
}

}  // namespace

std::string reproduction_to_text(const TableReproduction& r) {
  std::ostringstream os;
  os << "Table " << to_string(r.id) << ": " << r.title << "\n\n";
  os << report_to_text(r.report) << '\n';
  for (const auto& p : r.polynomials) {
    os << (p.pass ? "ok   " : (p.documented_discrepancy ? "NOTE " : "FAIL ")) << p.name << " = "
       << to_factored_string(p.computed);
    if (!p.pass) os << "  (reference " << to_factored_string(p.expected) << ")";
    os << '\n';
  }
  os << '\n';
  for (const auto& c : r.cells) os << cell_line(c) << '\n';
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (!r.diagnostic_cells.empty()) {
    os << "diagnostic (estimates from the reference h):\n";
    for (const auto& c : r.diagnostic_cells) os << "  " << cell_line(c) << '\n';
  }
  const int failed = r.failed_cells();
  os << "summary " << to_string(r.id) << ": " << r.cells.size() - static_cast<std::size_t>(failed) << "/"
     << r.cells.size() << " cells match, polynomials " << (r.polynomials_pass() ? "match" : "DIFFER") << " -> "
     << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

nlohmann::json reproduction_to_json(const TableReproduction& r) {
  nlohmann::json out;
  out["table"] = std::string(to_string(r.id));
  out["title"] = r.title;
  out["passed"] = r.passed();
  out["failed_cells"] = r.failed_cells();
  out["polynomials"] = nlohmann::json::array();
  for (const auto& p : r.polynomials) {
    out["polynomials"].push_back({{"name", p.name},
                                  {"pass", p.pass},
                                  {"documented_discrepancy", p.documented_discrepancy},
                                  {"expected", polynomial_to_json(p.expected)},
                                  {"computed", polynomial_to_json(p.computed)}});
  }
  out["cells"] = nlohmann::json::array();
  for (const auto& c : r.cells) out["cells"].push_back(cell_json(c));
  out["diagnostic_cells"] = nlohmann::json::array();
  for (const auto& c : r.diagnostic_cells) out["diagnostic_cells"].push_back(cell_json(c));
  out["notes"] = r.notes;
  out["report"] = report_to_json(r.report);
  return out;
}

Polynomial g8_reference_charpoly() {
  return Polynomial{0, 1} * Polynomial{1, 1} * Polynomial{0, -13, 19, 7, -9, -1, 1};
}

namespace {

constexpr int kG8Order = 8;

/// Free edge slots; the pairs in each group are switched on together.
std::vector<std::vector<Edge>> g8_free_groups() {
  std::vector<std::vector<Edge>> groups;
  for (int u = 3; u <= 6; ++u) {
    for (int v = u + 1; v <= 6; ++v) groups.push_back({{u, v}});
  }
  for (int v = 3; v <= 6; ++v) groups.push_back({{1, v}, {2, v}});
  groups.push_back({{1, 7}, {1, 8}, {2, 7}, {2, 8}});
  for (int v = 3; v <= 6; ++v) groups.push_back({{v, 7}, {v, 8}});
  return groups;
}

/// Smallest upper-triangle bit pattern over all relabellings.
std::uint32_t canonical_code(const Graph& g) {
  std::array<int, kG8Order> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  do {
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < kG8Order; ++i) {
      for (int j = i + 1; j < kG8Order; ++j, ++bit) {
        if (g.adjacent(perm[i] + 1, perm[j] + 1)) code |= 1u << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

G8Reconstruction reconstruct_g8(const Polynomial& target) {
  if (target.degree() != kG8Order) {
    throw Error(ErrorCode::InvalidArgument, "target characteristic polynomial must have degree 8");
  }
  // The λ^{n-2} coefficient of a graph's characteristic polynomial is -|E|.
  const long edge_target = -target.coeff(kG8Order - 2).get_si();
  const auto groups = g8_free_groups();
  G8Reconstruction out;
  for (std::uint32_t mask = 0; mask < (1u << groups.size()); ++mask) {
    std::vector<Edge> edges{{1, 2}};
    for (std::size_t b = 0; b < groups.size(); ++b) {
      if (mask & (1u << b)) edges.insert(edges.end(), groups[b].begin(), groups[b].end());
    }
    if (static_cast<long>(edges.size()) != edge_target) continue;
    const Graph g = Graph::from_edges(kG8Order, edges);
    if (!is_connected(g)) continue;
    ++out.candidates_examined;
    if (charpoly(g) == target) out.matches.push_back(g);
  }
  if (out.matches.empty()) throw Error(ErrorCode::NoMatch, "no candidate graph has the target characteristic polynomial");
  std::set<std::uint32_t> classes;
  for (const auto& g : out.matches) classes.insert(canonical_code(g));
  out.isomorphism_classes = static_cast<int>(classes.size());
  out.chosen = out.matches.front();
  return out;
}

nlohmann::json g8_fixture_json(const G8Reconstruction& r) {
  nlohmann::json out = nlohmann::json::parse(to_json_string(r.chosen));
  out["provenance"] =
      "recovered by exhaustive search over 8-vertex graphs with vertices 1,2 adjacent twins and 7,8 "
      "non-adjacent twins whose characteristic polynomial is " + to_factored_string(g8_reference_charpoly()) +
      "; first match in enumeration order";
  out["match_count"] = r.matches.size();
  out["isomorphism_classes"] = r.isomorphism_classes;
  out["candidates_examined"] = r.candidates_examined;
  out["ambiguity"] = r.isomorphism_classes == 1
                         ? "all matches are isomorphic; the choice of labelling does not affect any spectrum"
                         : "matches fall into several isomorphism classes; all share the spectrum of G";
  return out;
}

Graph load_g8(const std::filesystem::path& data_dir) { return parse_graph(read_file(data_dir / "g8.json")); }

}  // namespace twinspec
