#include "confalg/report.hpp"

#include <algorithm>
#include <sstream>

namespace confalg {

void AxiomReport::mark_checked(const std::string& identity) {
  if (std::find(checked_.begin(), checked_.end(), identity) == checked_.end()) checked_.push_back(identity);
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& name : other.checked_) mark_checked(name);
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  if (space_.dim() == 0) space_ = other.space_;
}

bool AxiomReport::failed(const std::string& identity) const {
  return std::any_of(failures_.begin(), failures_.end(), [&](const Failure& f) { return f.identity == identity; });
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  for (const auto& f : failures_) {
    out << f.identity << " (";
    for (std::size_t n = 0; n < f.indices.size(); ++n) {
      if (n) out << ", ";
      out << (f.indices[n] < space_.dim() ? space_.name(f.indices[n]) : std::to_string(f.indices[n]));
    }
    out << ")";
    if (!f.note.empty()) out << " " << f.note;
    out << ": " << (f.residual_text.empty() ? f.residual.to_string(space_) : f.residual_text) << "\n";
  }
  return out.str();
}

}  // namespace confalg
