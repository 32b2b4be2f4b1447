#include "supm/report.hpp"

#include <sstream>

#include <json.hpp>

#include "supm/parser.hpp"

namespace supm {

using nlohmann::ordered_json;

Report analyze_and_certify(const Poly& P, const ChainOptions& opts,
                           const std::string& command) {
  Report report;
  report.command = command;
  report.input_echo = render_poly(P);
  report.structure = analyze(P);
  report.certificates = run_certification_chain(*report.structure, opts);
  auto [overall, by] = strongest_conclusion(report.certificates);
  report.overall = overall;
  report.certified_by = by;
  return report;
}

int report_exit_code(const Report& report) {
  if (report.overall == Conclusion::SUPM) return 0;
  if (report.overall == Conclusion::UPM) return 1;
  return 2;
}

namespace {

std::string point_label(const CriticalPoint& pt, char var) {
  if (pt.is_explicit()) return pt.point->str();
  return "roots of " + render_poly(pt.min_poly, var);
}

}  // namespace

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  out << "input: " << report.input_echo << "\n";
  if (report.structure) {
    const CriticalStructure& cs = *report.structure;
    out << "degree: " << cs.degree() << "\n";
    out << "critical points (k = " << cs.k << "):\n";
    for (const auto& pt : cs.points) {
      out << "  z = " << point_label(pt, 'z') << "   q = " << pt.derivative_multiplicity
          << "   value order = " << pt.value_order;
      if (pt.critical_value)
        out << "   P(z) = " << pt.critical_value->str();
      else
        out << "   P(z) = root of " << render_poly(pt.value_poly, 'w');
      out << "\n";
    }
    out << "simple zeros: " << (cs.simple_zeros ? "yes" : "no") << "\n";
    out << "critically injective: " << (cs.critically_injective ? "yes" : "no") << "\n";
    out << "critical value poly R(w) = " << render_poly(cs.critical_value_poly, 'w') << "\n";
    out << "fiber counts:\n";
    for (const auto& fc : fiber_counts(cs)) {
      out << "  value "
          << (fc.value ? fc.value->str() : "roots of " + render_poly(fc.value_factor, 'w'))
          << ": " << fc.distinct_preimages << " distinct preimages\n";
    }
  }
  if (report.lemma) {
    out << "lemma " << report.lemma->lemma_id << ": "
        << (report.lemma->holds ? "holds" : "fails") << "\n";
    for (const auto& [key, value] : report.lemma->witness)
      out << "  " << key << " = " << value << "\n";
  }
  if (!report.certificates.empty()) {
    out << "certificates:\n";
    for (const auto& cert : report.certificates) {
      out << "  [" << to_string(cert.verdict) << "] " << to_string(cert.theorem_id);
      if (cert.conclusion != Conclusion::None && cert.verdict == Verdict::Certified)
        out << " -> " << to_string(cert.conclusion);
      if (cert.failed_hypothesis) out << "  failed: " << *cert.failed_hypothesis;
      out << "\n";
      for (const auto& [key, value] : cert.witnesses)
        out << "      " << key << " = " << value << "\n";
    }
  }
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  if (!report.lemma) {
    out << "overall: " << to_string(report.overall);
    if (report.certified_by) out << " (via " << to_string(*report.certified_by) << ")";
    out << "\n";
  }
  return out.str();
}

namespace {

ordered_json poly_json(const Poly& p, char var) { return render_poly(p, var); }

ordered_json certificate_json(const Certificate& cert) {
  ordered_json j;
  j["theorem_id"] = to_string(cert.theorem_id);
  j["verdict"] = to_string(cert.verdict);
  j["failed_hypothesis"] =
      cert.failed_hypothesis ? ordered_json(*cert.failed_hypothesis) : ordered_json(nullptr);
  j["witnesses"] = cert.witnesses;
  j["conclusion"] = to_string(cert.conclusion);
  return j;
}

ordered_json structure_json(const CriticalStructure& cs) {
  ordered_json j;
  j["polynomial"] = poly_json(cs.polynomial, 'z');
  j["degree"] = cs.degree();
  j["k"] = cs.k;
  j["simple_zeros"] = cs.simple_zeros;
  j["critically_injective"] = cs.critically_injective;
  j["critical_value_poly"] = poly_json(cs.critical_value_poly, 'w');
  j["weighted_value_poly"] = poly_json(cs.weighted_value_poly, 'w');
  j["critical_points"] = ordered_json::array();
  for (const auto& pt : cs.points) {
    ordered_json p;
    p["point"] = pt.point ? ordered_json(pt.point->str()) : ordered_json(nullptr);
    p["min_poly"] = poly_json(pt.min_poly, 'z');
    p["derivative_multiplicity"] = pt.derivative_multiplicity;
    p["value_order"] = pt.value_order;
    p["critical_value"] =
        pt.critical_value ? ordered_json(pt.critical_value->str()) : ordered_json(nullptr);
    p["value_poly"] = poly_json(pt.value_poly, 'w');
    p["splitting_complete"] = pt.splitting_complete;
    j["critical_points"].push_back(std::move(p));
  }
  j["fiber_counts"] = ordered_json::array();
  for (const auto& fc : fiber_counts(cs)) {
    ordered_json f;
    f["value"] = fc.value ? ordered_json(fc.value->str()) : ordered_json(nullptr);
    f["value_factor"] = poly_json(fc.value_factor, 'w');
    f["multiplicity_in_weighted_poly"] = fc.multiplicity_in_weighted_poly;
    f["distinct_preimages"] = fc.distinct_preimages;
    f["splitting_complete"] = fc.splitting_complete;
    j["fiber_counts"].push_back(std::move(f));
  }
  return j;
}

}  // namespace

std::string report_to_json(const Report& report) {
  ordered_json j;
  j["schema"] = "supm-cert/v1";
  j["command"] = report.command;
  j["input"] = report.input_echo;
  j["structure"] =
      report.structure ? structure_json(*report.structure) : ordered_json(nullptr);
  j["certificates"] = ordered_json::array();
  for (const auto& cert : report.certificates)
    j["certificates"].push_back(certificate_json(cert));
  if (report.lemma) {
    ordered_json l;
    l["lemma_id"] = report.lemma->lemma_id;
    l["holds"] = report.lemma->holds;
    l["witness"] = report.lemma->witness;
    j["lemma"] = std::move(l);
  } else {
    j["lemma"] = nullptr;
  }
  ordered_json overall;
  overall["conclusion"] = to_string(report.overall);
  overall["certified_by"] =
      report.certified_by ? ordered_json(to_string(*report.certified_by)) : ordered_json(nullptr);
  j["overall"] = std::move(overall);
  j["notes"] = report.notes;
  return j.dump(2);
}

namespace {

Conclusion conclusion_from_string(const std::string& s) {
  if (s == "UPM") return Conclusion::UPM;
  if (s == "SUPM") return Conclusion::SUPM;
  if (s == "URSM_l") return Conclusion::URSM_l;
  if (s == "URSE_l") return Conclusion::URSE_l;
  return Conclusion::None;
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "Certified") return Verdict::Certified;
  if (s == "HypothesisFailed") return Verdict::HypothesisFailed;
  return Verdict::Inconclusive;
}

}  // namespace

Report report_from_json(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  if (j.at("schema").get<std::string>() != "supm-cert/v1")
    throw std::invalid_argument("report_from_json: unknown schema");
  Report report;
  report.command = j.at("command").get<std::string>();
  report.input_echo = j.at("input").get<std::string>();
  if (!j.at("structure").is_null()) {
    const auto& s = j.at("structure");
    CriticalStructure cs;
    cs.polynomial = parse_poly(s.at("polynomial").get<std::string>());
    cs.k = s.at("k").get<int>();
    cs.simple_zeros = s.at("simple_zeros").get<bool>();
    cs.critically_injective = s.at("critically_injective").get<bool>();
    cs.critical_value_poly = parse_poly(s.at("critical_value_poly").get<std::string>(), 'w');
    cs.weighted_value_poly = parse_poly(s.at("weighted_value_poly").get<std::string>(), 'w');
    for (const auto& p : s.at("critical_points")) {
      CriticalPoint pt;
      if (!p.at("point").is_null())
        pt.point = parse_scalar(p.at("point").get<std::string>());
      pt.min_poly = parse_poly(p.at("min_poly").get<std::string>());
      pt.derivative_multiplicity = p.at("derivative_multiplicity").get<int>();
      pt.value_order = p.at("value_order").get<int>();
      if (!p.at("critical_value").is_null())
        pt.critical_value = parse_scalar(p.at("critical_value").get<std::string>());
      pt.value_poly = parse_poly(p.at("value_poly").get<std::string>(), 'w');
      pt.splitting_complete = p.at("splitting_complete").get<bool>();
      cs.points.push_back(std::move(pt));
    }
    report.structure = std::move(cs);
  }
  for (const auto& c : j.at("certificates")) {
    Certificate cert;
    auto id = theorem_id_from_string(c.at("theorem_id").get<std::string>());
    if (!id) throw std::invalid_argument("report_from_json: unknown theorem id");
    cert.theorem_id = *id;
    cert.verdict = verdict_from_string(c.at("verdict").get<std::string>());
    if (!c.at("failed_hypothesis").is_null())
      cert.failed_hypothesis = c.at("failed_hypothesis").get<std::string>();
    cert.witnesses = c.at("witnesses").get<std::map<std::string, std::string>>();
    cert.conclusion = conclusion_from_string(c.at("conclusion").get<std::string>());
    report.certificates.push_back(std::move(cert));
  }
  if (!j.at("lemma").is_null()) {
    Report::LemmaSection lemma;
    lemma.lemma_id = j.at("lemma").at("lemma_id").get<std::string>();
    lemma.holds = j.at("lemma").at("holds").get<bool>();
    lemma.witness = j.at("lemma").at("witness").get<std::map<std::string, std::string>>();
    report.lemma = std::move(lemma);
  }
  report.overall = conclusion_from_string(j.at("overall").at("conclusion").get<std::string>());
  if (!j.at("overall").at("certified_by").is_null()) {
    auto id = theorem_id_from_string(j.at("overall").at("certified_by").get<std::string>());
    if (!id) throw std::invalid_argument("report_from_json: unknown theorem id");
    report.certified_by = *id;
  }
  report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

}  // namespace supm
