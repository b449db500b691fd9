#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dltag {

enum class ErrorCode {
  kIllegalSite,        // adjoining outside the governing right frontier
  kFeatureConflict,    // unification failed at the junction node
  kNoSite,             // substitution requested but nothing is pending
  kSiteMismatch,       // caller named a site other than the most embedded one
  kNoSubstitutionSite, // inner frontier requested on a siteless tree
  kAmbiguousSiteDepth, // two substitution sites share the maximal depth
  kInvalidTemplate,
  kInvalidTree,
  kDeadEnd,
  kIllegalAction,
  kFormat,
  kIo,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// No legal attachment exists for a unit.
class DeadEndError : public Error {
 public:
  DeadEndError(std::string unit_id, const std::string& message)
      : Error(ErrorCode::kDeadEnd, message), unit_id_(std::move(unit_id)) {}

  const std::string& unit_id() const { return unit_id_; }

 private:
  std::string unit_id_;
};

// Replay failed; `index` is the position of the offending action and
// `cause` the error the underlying operation raised.
class IllegalActionError : public Error {
 public:
  IllegalActionError(std::size_t index, ErrorCode cause,
                     const std::string& message)
      : Error(ErrorCode::kIllegalAction, message),
        index_(index),
        cause_(cause) {}

  std::size_t index() const { return index_; }
  ErrorCode cause() const { return cause_; }

 private:
  std::size_t index_;
  ErrorCode cause_;
};

}  // namespace dltag
