#pragma once

#include <stdexcept>
#include <string>

namespace smallq {

// Error taxonomy shared across modules.  Every error carries a short
// machine-readable tag (used by the CLI to pick exit codes) plus a
// human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string tag, const std::string& msg)
      : std::runtime_error(tag + ": " + msg), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

private:
  std::string tag_;
};

#define SMALLQ_ERROR(NAME)                                        \
  class NAME : public Error {                                     \
  public:                                                         \
    explicit NAME(const std::string& msg) : Error(#NAME, msg) {}  \
  }

SMALLQ_ERROR(DenominatorVanishes);
SMALLQ_ERROR(NotLaurent);
SMALLQ_ERROR(NotSublattice);
SMALLQ_ERROR(NotFiniteType);
SMALLQ_ERROR(InconsistentComponent);
SMALLQ_ERROR(OutsideRootLattice);
SMALLQ_ERROR(MissingGramExtension);
SMALLQ_ERROR(NotInCharacterLattice);
SMALLQ_ERROR(NotDominant);
SMALLQ_ERROR(RankTooLarge);
SMALLQ_ERROR(WindowExceeded);
SMALLQ_ERROR(NotCyclic);
SMALLQ_ERROR(NotStabilized);
SMALLQ_ERROR(InputError);
SMALLQ_ERROR(IoError);
SMALLQ_ERROR(InternalError);

#undef SMALLQ_ERROR

}  // namespace smallq
