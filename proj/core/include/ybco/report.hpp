#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybco/tensor.hpp"

namespace ybco {

struct CheckLine {
  std::string name;
  bool pass = false;
  bool residual_zero = false;
  std::string detail;
  std::optional<TensorOperator> residual;
};

// Outcome of a verification: one line per checked equation.
struct Report {
  std::vector<CheckLine> lines;

  bool ok() const;
  const CheckLine* find(const std::string& name) const;
  bool passed(const std::string& name) const;

  void add(std::string name, bool pass, std::string detail = {});
  // Residual = lhs - rhs; passes when it vanishes.
  void add_residual(std::string name, const TensorOperator& residual);
  void append(const Report& other, const std::string& prefix = {});

  // "name: PASS residual_zero=true" per line.
  std::string to_text() const;
};

}  // namespace ybco
