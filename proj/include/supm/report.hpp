#ifndef SUPM_REPORT_HPP
#define SUPM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "supm/certify.hpp"

namespace supm {

// Everything a command run produced: canonical input echo, the critical
// structure (when a polynomial was analyzed), certificates, and the
// strongest conclusion reached. One Report value backs both the human and
// the JSON output.
struct Report {
  std::string command;     // check | family | lemma | urs
  std::string input_echo;  // canonical polynomial text or parameter echo
  std::optional<CriticalStructure> structure;
  std::vector<Certificate> certificates;
  Conclusion overall = Conclusion::None;
  std::optional<TheoremId> certified_by;

  struct LemmaSection {
    std::string lemma_id;
    bool holds = false;
    std::map<std::string, std::string> witness;
  };
  std::optional<LemmaSection> lemma;
  std::vector<std::string> notes;
};

// analyze + certification chain + overall conclusion, shared by the check
// and family commands.
Report analyze_and_certify(const Poly& P, const ChainOptions& opts,
                           const std::string& command);

std::string report_to_text(const Report& report);
// Schema "supm-cert/v1"; field names follow the certificate/report types.
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& json_text);

// 0 = some Certified SUPM, 1 = UPM only, 2 = nothing certified.
int report_exit_code(const Report& report);

}  // namespace supm

#endif
