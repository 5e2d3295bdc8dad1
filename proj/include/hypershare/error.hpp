#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypershare {

enum class ErrorCode {
  ParseError,
  InvalidHypergraph,
  UniformityError,
  NotConnected,
  NotPathConnected,
  HasCycle,
  ComponentNotConnected,
  EdgeOutsideComponents,
  InvalidCluster,
  DomainMismatch,
  SingularSystem,
  TooLarge,
  UnknownFixture,
  InvalidStrategy,
  Inconsistent,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InvalidHypergraph: return "INVALID_HYPERGRAPH";
    case ErrorCode::UniformityError: return "UNIFORMITY_ERROR";
    case ErrorCode::NotConnected: return "NOT_CONNECTED";
    case ErrorCode::NotPathConnected: return "NOT_PATH_CONNECTED";
    case ErrorCode::HasCycle: return "HAS_CYCLE";
    case ErrorCode::ComponentNotConnected: return "COMPONENT_NOT_CONNECTED";
    case ErrorCode::EdgeOutsideComponents: return "EDGE_OUTSIDE_COMPONENTS";
    case ErrorCode::InvalidCluster: return "INVALID_CLUSTER";
    case ErrorCode::DomainMismatch: return "DOMAIN_MISMATCH";
    case ErrorCode::SingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::UnknownFixture: return "UNKNOWN_FIXTURE";
    case ErrorCode::InvalidStrategy: return "INVALID_STRATEGY";
    case ErrorCode::Inconsistent: return "INCONSISTENT";
  }
  return "UNKNOWN";
}

/// True for the errors raised while validating a cluster decomposition.
constexpr bool is_cluster_error(ErrorCode code) {
  return code == ErrorCode::NotPathConnected || code == ErrorCode::HasCycle ||
         code == ErrorCode::ComponentNotConnected ||
         code == ErrorCode::EdgeOutsideComponents || code == ErrorCode::InvalidCluster;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypershare
