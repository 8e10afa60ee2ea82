#include "twinspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "twinspec/error.hpp"

namespace twinspec {

std::string format_sig(double value, int digits) {
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.*g", digits, value);
  std::string out = buf;
  // %#g keeps a bare trailing point for integral values ("11." at 2 digits).
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

namespace {

std::string full(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json second_to_json(const std::optional<SecondOrder>& s) {
  nlohmann::json j;
  if (!s) {
    j["kind"] = "none";
    j["values"] = nlohmann::json::array();
    return j;
  }
  switch (s->kind) {
    case SecondOrderKind::RealPair:
      j["kind"] = "real_pair";
      j["values"] = s->roots;
      break;
    case SecondOrderKind::Single:
      j["kind"] = "single";
      j["values"] = s->roots;
      break;
    case SecondOrderKind::Conjugate:
      j["kind"] = "conjugate";
      j["values"] = {s->real_part, s->imag_part};
      break;
  }
  return j;
}

/// "r1, *r2*" or "*re* ± im j", the chosen value starred.
std::string second_display(const DisplacementRow& row, int digits) {
  if (!row.second) return "---";
  const auto& s = *row.second;
  auto fmt = [digits](double v) { return digits > 0 ? format_sig(v, digits) : full(v); };
  if (s.kind == SecondOrderKind::Conjugate) {
    return "*" + fmt(s.real_part) + "* ± " + fmt(s.imag_part) + "j";
  }
  std::string out;
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    if (i > 0) out += ", ";
    const bool chosen = row.selection && row.selection->source == ChosenSource::RealRoot &&
                        row.selection->chosen == s.roots[i];
    out += chosen ? "*" + fmt(s.roots[i]) + "*" : fmt(s.roots[i]);
  }
  return out;
}

std::string eigen_display(double value, const std::optional<Rational>& exact, int digits) {
  if (exact) return exact->get_str();
  return digits > 0 ? format_sig(value, digits) : full(value);
}

}  // namespace

nlohmann::json polynomial_to_json(const Polynomial& p) { return to_decimal_strings(p); }

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial JSON must be an array of decimal strings");
  std::vector<std::string> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw Error(ErrorCode::ParseError, "polynomial coefficients must be strings");
    coeffs.push_back(c.get<std::string>());
  }
  return from_decimal_strings(coeffs);
}

nlohmann::json spectrum_to_json(const Spectrum& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : s.roots) {
    nlohmann::json j;
    j["value"] = r.value;
    j["multiplicity"] = r.multiplicity;
    j["exact"] = r.exact ? nlohmann::json(r.exact->get_str()) : nlohmann::json(nullptr);
    j["interval"] = {r.isolating_interval.lo.get_str(), r.isolating_interval.hi.get_str()};
    out.push_back(std::move(j));
  }
  return out;
}

nlohmann::json twin_pair_to_json(const TwinPair& p) {
  return {{"ell", p.ell}, {"k", p.k}, {"kind", std::string(to_string(p.kind))}, {"a", p.a}};
}

nlohmann::json identity_report_to_json(const TwinIdentityReport& r) {
  nlohmann::json j;
  j["phi_g"] = polynomial_to_json(r.phi_g);
  j["phi_g_minus"] = polynomial_to_json(r.phi_g_minus);
  j["h"] = polynomial_to_json(r.h);
  j["quotient"] = r.quotient ? polynomial_to_json(*r.quotient) : nlohmann::json(nullptr);
  j["identity_holds"] = r.identity_holds;
  j["discrepancy"] = r.discrepancy ? polynomial_to_json(*r.discrepancy) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json report_to_json(const DisplacementReport& r) {
  nlohmann::json out;
  out["graph"] = nlohmann::json::parse(to_json_string(r.graph));
  out["pair"] = twin_pair_to_json(r.pair);
  out["tol"] = r.tol;
  out["f"] = polynomial_to_json(r.estimator.f);
  out["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j;
    j["kind"] = std::string(to_string(row.kind));
    j["lambda_g"] = row.lambda_g;
    j["lambda_gp"] = optional_number(row.lambda_gp);
    j["actual"] = optional_number(row.actual);
    j["first"] = optional_number(row.first);
    j["second"] = second_to_json(row.second);
    j["chosen"] = row.selection ? nlohmann::json(row.selection->chosen) : nlohmann::json(nullptr);
    j["source"] = row.selection ? nlohmann::json(std::string(to_string(row.selection->source)))
                                : nlohmann::json(nullptr);
    j["window"] = row.window ? nlohmann::json{row.window->lo, row.window->hi} : nlohmann::json(nullptr);
    j["notes"] = row.notes;
    out["rows"].push_back(std::move(j));
  }
  return out;
}

std::string report_to_csv(const DisplacementReport& r) {
  auto quote = [](const std::string& s) {
    return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
  };
  std::ostringstream os;
  os << "G,G',Displacement,First-order,Second-order\n";
  for (const auto& row : r.rows) {
    os << eigen_display(row.lambda_g, row.exact_g, 0) << ','
       << (row.lambda_gp ? full(*row.lambda_gp) : "---") << ','
       << (row.actual ? full(*row.actual) : "---") << ','
       << (row.first ? full(*row.first) : "---") << ','
       << quote(second_display(row, 0)) << '\n';
  }
  return os.str();
}

std::string report_to_text(const DisplacementReport& r) {
  std::ostringstream os;
  os << "Removing vertex " << r.pair.ell << " (" << to_string(r.pair.kind) << " of " << r.pair.k
     << "), n = " << r.graph.order() << "\n\n";
  os << std::left << std::setw(10) << "G" << std::setw(12) << "G'" << std::setw(14) << "Displacement"
     << std::setw(14) << "First-order" << "Second-order\n";
  std::vector<std::string> footnotes;
  const DisplacementRow* previous = nullptr;
  for (const auto& row : r.rows) {
    // One line per block of repeated retained eigenvalues.
    const bool repeat = previous && previous->kind == RowKind::Retained && row.kind == RowKind::Retained &&
                        previous->exact_g == row.exact_g;
    previous = &row;
    if (repeat) continue;
    std::string mark;
    if (!row.notes.empty()) {
      footnotes.push_back(row.notes.front());
      mark = "[" + std::to_string(footnotes.size()) + "]";
    }
    const std::string gp = row.lambda_gp ? format_sig(*row.lambda_gp) : "---";
    os << std::setw(10) << eigen_display(row.lambda_g, row.exact_g, 3) + (row.lambda_gp ? "" : mark)
       << std::setw(12) << (row.lambda_gp ? gp + mark : gp) << std::setw(14)
       << (row.actual ? format_sig(*row.actual) : "---") << std::setw(14)
       << (row.first ? format_sig(*row.first) : "---") << second_display(row, 3) << '\n';
  }
  if (!footnotes.empty()) {
    os << '\n';
    for (std::size_t i = 0; i < footnotes.size(); ++i) os << "[" << i + 1 << "] " << footnotes[i] << '\n';
  }
  return os.str();
}

}  // namespace twinspec
