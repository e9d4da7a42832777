#pragma once

#include <stdexcept>
#include <string>

namespace lcfact {

/// Base class for all library errors. `code()` is a stable snake_case
/// identifier suitable for machine-readable reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct IncidentCenterError : Error {
  explicit IncidentCenterError(const std::string& what)
      : Error("incident_center", what) {}
};

struct NonIncidentCenterError : Error {
  explicit NonIncidentCenterError(const std::string& what)
      : Error("non_incident_center", what) {}
};

struct CoincidentPlanesError : Error {
  explicit CoincidentPlanesError(const std::string& what)
      : Error("coincident_planes", what) {}
};

struct RankDeficientError : Error {
  explicit RankDeficientError(const std::string& what)
      : Error("rank_deficient", what) {}
};

struct UnnormalizableError : Error {
  explicit UnnormalizableError(const std::string& what)
      : Error("unnormalizable", what) {}
};

struct NotPinholeError : Error {
  explicit NotPinholeError(const std::string& what)
      : Error("not_pinhole", what) {}
};

struct NotAffineError : Error {
  explicit NotAffineError(const std::string& what)
      : Error("not_affine", what) {}
};

struct RankDeficientSystemError : Error {
  explicit RankDeficientSystemError(const std::string& what)
      : Error("rank_deficient_system", what) {}
};

struct NoBranchAcceptedError : Error {
  explicit NoBranchAcceptedError(const std::string& what)
      : Error("no_branch_accepted", what) {}
};

struct NotReducibleError : Error {
  explicit NotReducibleError(const std::string& what)
      : Error("not_reducible", what) {}
};

struct DegenerateAffineError : Error {
  explicit DegenerateAffineError(const std::string& what)
      : Error("degenerate_affine", what) {}
};

struct SingularError : Error {
  explicit SingularError(const std::string& what) : Error("singular", what) {}
};

struct NotUnitError : Error {
  explicit NotUnitError(const std::string& what) : Error("not_unit", what) {}
};

struct AllLinesParallelError : Error {
  explicit AllLinesParallelError(const std::string& what)
      : Error("all_lines_parallel", what) {}
};

struct ParallelLinesError : Error {
  explicit ParallelLinesError(const std::string& what)
      : Error("parallel_lines", what) {}
};

struct ImagePointAtInfinityError : Error {
  explicit ImagePointAtInfinityError(const std::string& what)
      : Error("image_point_at_infinity", what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse_error", what) {}
};

}  // namespace lcfact
