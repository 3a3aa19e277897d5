#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hhcflex {

enum class VarKind { Binary, Continuous };
enum class Sense { LE, EQ, GE };

struct Variable {
  std::string tag;  // semantic name, e.g. x[k1,D,p2s1] or delta[1,2]
  VarKind kind = VarKind::Continuous;
  double lo = 0.0;
  double hi = 0.0;
};

struct LinRow {
  std::string name;
  std::vector<std::pair<int, double>> coeffs;  // (column, coefficient)
  Sense sense = Sense::LE;
  double rhs = 0.0;
};

// An abstract minimization MILP: typed columns, sparse rows, sparse
// objective. Immutable once built; shareable across threads.
class LinearModel {
 public:
  int add_variable(std::string tag, VarKind kind, double lo, double hi);
  void set_objective(int col, double coeff);
  void add_row(std::string name, std::vector<std::pair<int, double>> coeffs,
               Sense sense, double rhs);

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<std::pair<int, double>>& objective() const {
    return objective_;
  }
  const std::vector<LinRow>& rows() const { return rows_; }

  struct Stats {
    int columns = 0;
    int binaries = 0;
    int rows = 0;
    std::int64_t nonzeros = 0;
  };
  Stats stats() const;

  // Invariant check: column references valid, row names unique, binary
  // bounds within [0,1]. Returns problems; empty means consistent.
  std::vector<std::string> check() const;

 private:
  std::vector<Variable> vars_;
  std::vector<std::pair<int, double>> objective_;
  std::vector<LinRow> rows_;
};

// Bijective tag <-> column map.
class VarMap {
 public:
  void insert(const std::string& tag, int col);
  int column(const std::string& tag) const;            // throws if unknown
  bool contains(const std::string& tag) const;
  const std::string& tag(int col) const;               // throws if unknown
  std::size_t size() const { return tag_to_col_.size(); }

 private:
  std::unordered_map<std::string, int> tag_to_col_;
  std::vector<std::string> col_to_tag_;
};

}  // namespace hhcflex
