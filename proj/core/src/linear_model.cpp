#include "hhcflex/linear_model.hpp"

#include <set>
#include <stdexcept>

namespace hhcflex {

int LinearModel::add_variable(std::string tag, VarKind kind, double lo,
                              double hi) {
  vars_.push_back(Variable{std::move(tag), kind, lo, hi});
  return static_cast<int>(vars_.size()) - 1;
}

void LinearModel::set_objective(int col, double coeff) {
  if (coeff != 0.0) objective_.emplace_back(col, coeff);
}

void LinearModel::add_row(std::string name,
                          std::vector<std::pair<int, double>> coeffs,
                          Sense sense, double rhs) {
  rows_.push_back(LinRow{std::move(name), std::move(coeffs), sense, rhs});
}

LinearModel::Stats LinearModel::stats() const {
  Stats s;
  s.columns = static_cast<int>(vars_.size());
  for (const auto& v : vars_)
    if (v.kind == VarKind::Binary) ++s.binaries;
  s.rows = static_cast<int>(rows_.size());
  for (const auto& r : rows_) s.nonzeros += static_cast<std::int64_t>(r.coeffs.size());
  return s;
}

std::vector<std::string> LinearModel::check() const {
  std::vector<std::string> problems;
  const int cols = static_cast<int>(vars_.size());
  std::set<std::string> names;
  for (const auto& v : vars_) {
    if (v.kind == VarKind::Binary && (v.lo != 0.0 || v.hi != 1.0))
      problems.push_back("binary variable " + v.tag + " has bounds outside [0,1]");
  }
  for (const auto& [col, coeff] : objective_) {
    (void)coeff;
    if (col < 0 || col >= cols)
      problems.push_back("objective references unknown column " +
                         std::to_string(col));
  }
  for (const auto& r : rows_) {
    if (!names.insert(r.name).second)
      problems.push_back("duplicate constraint name " + r.name);
    for (const auto& [col, coeff] : r.coeffs) {
      (void)coeff;
      if (col < 0 || col >= cols)
        problems.push_back("row " + r.name + " references unknown column " +
                           std::to_string(col));
    }
  }
  return problems;
}

void VarMap::insert(const std::string& tag, int col) {
  if (tag_to_col_.count(tag))
    throw std::invalid_argument("duplicate variable tag " + tag);
  tag_to_col_[tag] = col;
  if (static_cast<std::size_t>(col) >= col_to_tag_.size())
    col_to_tag_.resize(col + 1);
  col_to_tag_[col] = tag;
}

int VarMap::column(const std::string& tag) const {
  auto it = tag_to_col_.find(tag);
  if (it == tag_to_col_.end())
    throw std::invalid_argument("unknown variable tag " + tag);
  return it->second;
}

bool VarMap::contains(const std::string& tag) const {
  return tag_to_col_.count(tag) > 0;
}

const std::string& VarMap::tag(int col) const {
  if (col < 0 || static_cast<std::size_t>(col) >= col_to_tag_.size())
    throw std::invalid_argument("unknown column " + std::to_string(col));
  return col_to_tag_[col];
}

}  // namespace hhcflex
