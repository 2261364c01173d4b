#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

enum class ErrorKind {
  Parse,
  Validation,
  DimensionMismatch,
  Unbounded,
  Empty,
  Infeasible,
  NotPointed,
  OriginNotInterior,
  NotComplete,
  NotQGorenstein,
  NotCartier,
  NotCartierOnWall,
  NotSmooth,
  NotFano,
  NoPartition,
  Inconsistency,
};

const char* to_string(ErrorKind kind);

/// Every failure the library reports carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::NotQGorenstein: return "NotQGorenstein";
    case ErrorKind::NotCartier: return "NotCartier";
    case ErrorKind::NotCartierOnWall: return "NotCartierOnWall";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotFano: return "NotFano";
    case ErrorKind::NoPartition: return "NoPartition";
    case ErrorKind::Inconsistency: return "Inconsistency";
  }
  return "Error";
}

}  // namespace mukai
