#include <sstream>

#include "tritile/casework.hpp"

namespace tritile {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::unsat: return "unsat";
    case Verdict::family: return "family";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool CertificateReport::checks_ok() const {
  for (const auto& c : checks)
    if (!c.pass && !c.known_defect) return false;
  return true;
}

bool CertificateReport::checks_exact() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void CertificateReport::check(const std::string& label, const std::string& expected,
                              const std::string& computed, bool known_defect_if_mismatch) {
  Check c{label, expected, computed, expected == computed, false};
  c.known_defect = !c.pass && known_defect_if_mismatch;
  checks.push_back(std::move(c));
}

std::string CertificateReport::str() const {
  std::ostringstream o;
  o << "case " << name << "\n";
  for (const auto& e : equations) o << "eq " << e << "\n";
  for (const auto& c : checks) {
    o << "check " << c.label << ": " << (c.pass ? "ok" : c.known_defect ? "DEFECT" : "FAIL") << "\n";
    if (!c.pass) {
      o << "  printed:  " << c.expected << "\n";
      o << "  computed: " << c.computed << "\n";
    }
  }
  for (const auto& s : steps) o << "step [" << s.rule << "] " << s.text << "\n";
  for (const auto& f : facts) o << "fact " << f << "\n";
  for (const auto& n : notes) o << "note " << n << "\n";
  o << "verdict " << to_string(verdict);
  if (verdict == Verdict::family) o << " (" << family << ")";
  o << "\n";
  return o.str();
}

}  // namespace tritile
