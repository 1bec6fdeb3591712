#include "curveres/cli.hpp"

#include <fstream>

#include "curveres/error.hpp"
#include "curveres/io.hpp"

namespace curveres::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const CurveError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
}

int exit_code_for(ResolutionStatus status) {
  switch (status) {
    case ResolutionStatus::Resolved: return kOk;
    case ResolutionStatus::PrecisionExhausted: return kPrecision;
    case ResolutionStatus::StepLimit: return kStepLimit;
  }
  return kMalformed;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidBranch:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::TooLarge:
      return kMalformed;
    case ErrorKind::NotAUnit:
    case ErrorKind::OrderUnknown:
    case ErrorKind::NotDivisible:
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::OrderNotOne:
    case ErrorKind::DegenerateCurve:
      return kPrecision;
    case ErrorKind::StepLimit:
      return kStepLimit;
    case ErrorKind::NotEquisingular:
      return kNotSame;
    case ErrorKind::TangencyMismatch:
    case ErrorKind::LemmaHypothesisUnmet:
      return kLemmaUnmet;
  }
  return kMalformed;
}

int cmd_resolve(const std::filesystem::path& path, const ResolveOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Branch b = to_branch(read_branch_file(path));
    const ResolutionReport report = resolve(b, options.max_steps);
    const std::string payload = dump(to_json(report));
    out << payload;
    if (options.json) write_file(*options.json, payload);
    if (options.dot) write_file(*options.dot, to_dot(report.graph) + "\n");
    if (report.status != ResolutionStatus::Resolved) err << "error: " << report.detail << "\n";
    return exit_code_for(report.status);
  });
}

int cmd_compare(const std::filesystem::path& first, const std::filesystem::path& second, int max_steps,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Branch b1 = to_branch(read_branch_file(first));
    const Branch b2 = to_branch(read_branch_file(second));
    const CompareReport report = equisingular(b1, b2, max_steps);
    out << dump(to_json(report));
    for (auto status : {report.status1, report.status2}) {
      if (status != ResolutionStatus::Resolved) return exit_code_for(status);
    }
    return static_cast<int>(report.same_graph ? kOk : kNotSame);
  });
}

int cmd_isotopy(const std::filesystem::path& first, const std::filesystem::path& second,
                const IsotopyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (options.samples < 1) throw std::invalid_argument("--samples must be >= 1");
    const Branch b1 = to_branch(read_branch_file(first));
    const Branch b2 = to_branch(read_branch_file(second));
    const IsotopySchedule schedule = make_equal(b1, b2, options.mode, options.max_steps);
    nlohmann::json j = to_json(schedule);
    j["mode"] = to_string(options.mode);
    j["finalEqual"] = same_curve(schedule.result, b2, options.max_steps);
    const std::string payload = dump(j);
    out << payload;
    if (options.json) write_file(*options.json, payload);
    if (options.csv) {
      std::string csv = trajectory_csv_header(b1.dim()) + "\n";
      constexpr int kTimes = 10;
      for (const auto& step : schedule.steps) {
        for (int s = 1; s <= options.samples; ++s) {
          // Points of the moving curve spread over the inner bump region.
          const double x = options.bump.inner * s / (options.samples + 1);
          const Point start = step.source.evaluate({x, 0.0});
          for (int k = 0; k <= kTimes; ++k) {
            const double t = static_cast<double>(k) / kTimes;
            csv += trajectory_csv_row(t, blended_flow(step.field, options.bump, t, start)) + "\n";
          }
        }
      }
      write_file(*options.csv, csv);
    }
    return kOk;
  });
}

int cmd_random(std::uint64_t seed, const CorpusOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    std::mt19937_64 rng(seed);
    out << dump(to_json(random_branch_file(rng, options)));
    return kOk;
  });
}

}  // namespace curveres::cli
