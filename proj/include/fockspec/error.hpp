#pragma once

#include <stdexcept>
#include <string>

namespace fockspec {

enum class ErrorCode {
  kDomain = 1,       // argument outside the mathematical domain
  kDegenerate = 2,   // empty set / zero measure
  kPrecondition = 3, // contract precondition failed (e.g. non-monotone weights)
  kConvergence = 4,  // iteration failed to converge
  kOverlap = 5,      // disks intersect
  kEmptySet = 6,     // superlevel set is empty
  kParse = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace fockspec
