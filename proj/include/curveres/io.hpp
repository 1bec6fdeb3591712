#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "curveres/isotopy.hpp"

namespace curveres {

/// On-disk branch description. Rationals travel as "p/q" strings:
///
///   {"dim": 2, "precision": 16,
///    "coordinates": [[{"exp": 2, "re": "1", "im": "0"}],
///                    [{"exp": 3, "re": "1", "im": "0"}]]}
struct BranchFile {
  int dim = 2;
  int precision = 2;
  std::vector<std::vector<Term>> coordinates;
};

/// Throws CurveError(InvalidBranch) naming the offending field.
BranchFile parse_branch_file(const nlohmann::json& j);
BranchFile read_branch_file(const std::filesystem::path& path);
nlohmann::json to_json(const BranchFile& f);
/// Also enforces the Branch invariants (primitivity included).
Branch to_branch(const BranchFile& f);

nlohmann::json to_json(const ExactComplex& z);
nlohmann::json to_json(const Series& s);
nlohmann::json to_json(const ChartRecord& c);
nlohmann::json to_json(const TangencySignature& sig);
nlohmann::json to_json(const ResolutionReport& report);
nlohmann::json to_json(const CompareReport& report);
nlohmann::json to_json(const FieldSpec& f);
nlohmann::json to_json(const IsotopySchedule& schedule);

/// "t,coord_1_re,coord_1_im,...,coord_n_re,coord_n_im"
std::string trajectory_csv_header(int dim);
std::string trajectory_csv_row(double t, const Point& p);

}  // namespace curveres
