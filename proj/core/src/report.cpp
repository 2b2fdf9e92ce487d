#include "ybco/report.hpp"

#include <algorithm>

namespace ybco {

bool Report::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

const CheckLine* Report::find(const std::string& name) const {
  for (const auto& l : lines) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const CheckLine* l = find(name);
  return l != nullptr && l->pass;
}

void Report::add(std::string name, bool pass, std::string detail) {
  CheckLine l;
  l.name = std::move(name);
  l.pass = pass;
  l.residual_zero = pass;
  l.detail = std::move(detail);
  lines.push_back(std::move(l));
}

void Report::add_residual(std::string name, const TensorOperator& residual) {
  CheckLine l;
  l.name = std::move(name);
  l.residual_zero = residual.is_zero();
  l.pass = l.residual_zero;
  if (!l.pass) {
    l.detail = std::to_string(residual.nonzeros()) + " nonzero residual entries";
    l.residual = residual;
  }
  lines.push_back(std::move(l));
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto l : other.lines) {
    l.name = prefix + l.name;
    lines.push_back(std::move(l));
  }
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& l : lines) {
    out += l.name + ": " + (l.pass ? "PASS" : "FAIL") +
           " residual_zero=" + (l.residual_zero ? "true" : "false");
    if (!l.detail.empty()) out += " (" + l.detail + ")";
    out += "\n";
  }
  return out;
}

}  // namespace ybco
