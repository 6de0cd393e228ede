#pragma once

#include <stdexcept>
#include <string>

namespace g2scroll {

enum class Errc {
  SmallPrime,
  NotPrime,
  BadDegree,
  NonSquarefree,
  AmbientMismatch,
  LengthMismatch,
  UnsupportedMultiplicity,
  PointNotOnCurve,
  PoleAtPoint,
  NotAPencil,
  InsufficientPoints,
  DegreeTooSmall,
  DegenerateFiber,
  UnexpectedRank,
  BoundViolation,
  NoAdmissibleD,
  NoRowMatched,
  PreconditionViolated,
  BadExpression,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace g2scroll
