#pragma once

#include "msplect/action.hpp"
#include "msplect/complexify.hpp"
#include "msplect/plectic.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msplect {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_, col_;
};

// A parsed expression value. Degree-0 results normalize to Scalar.
struct Value {
    enum class Kind { Scalar, Form, MultiVec };
    Kind kind = Kind::Scalar;
    CPoly scalar;
    CForm form;
    CMultiVec mv;

    bool is_real() const;
    bool is_zero() const;
    std::string to_text(const ChartPtr& chart) const;
};

struct TaskSpec {
    std::string name;
    std::vector<std::string> args;
    // key=value arguments
    std::optional<std::string> arg(const std::string& key) const;
    bool operator==(const TaskSpec& o) const { return name == o.name && args == o.args; }
};

// Parsed .msw workspace: chart, optional Lie algebra + action, the system
// data, named defines, and the task list.
struct WorkspaceFile {
    ChartPtr chart;
    std::map<std::string, Value> defines;
    std::vector<std::string> define_order;
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> complex_decls;
    std::optional<LieAlgebraData> algebra;
    std::vector<MultiVec> generators; // one per basis element when [action] present
    std::optional<Form> omega;
    std::optional<Form> hamiltonian;
    Convention convention;
    std::vector<TaskSpec> tasks;
    std::vector<std::string> warnings;

    ActionData action() const;
    const Value& lookup(const std::string& name) const;

    // Canonical text form; parse(to_text()) reproduces this workspace.
    std::string to_text() const;

    bool operator==(const WorkspaceFile& o) const;
};

// Evaluates a single expression over a chart with optional named values and
// complex coordinate declarations (z -> (re index, im index)).
Value evaluate_expression(const std::string& text, const ChartPtr& chart,
                          const std::map<std::string, Value>& names,
                          const std::map<std::string, std::pair<int, int>>& complex_coords);

WorkspaceFile parse_workspace_text(const std::string& text);
WorkspaceFile parse_workspace_file(const std::string& path);

} // namespace msplect
