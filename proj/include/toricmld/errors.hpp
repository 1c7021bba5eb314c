#pragma once

#include <stdexcept>
#include <string>

namespace toricmld {

// Every failure mode carries a stable code naming the violated invariant, so
// callers (and the command-line front end) can report it in one line.
enum class Errc {
  InvalidInput,
  NotInLattice,
  NotPrimitive,
  DuplicateRay,
  NonConvex,
  NotFullDimensional,
  NotRCartier,
  NotLogCanonical,
  NotAFace,
  ResourceLimit,
  InternalError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotInLattice: return "NotInLattice";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::DuplicateRay: return "DuplicateRay";
    case Errc::NonConvex: return "NonConvex";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::NotRCartier: return "NotRCartier";
    case Errc::NotLogCanonical: return "NotLogCanonical";
    case Errc::NotAFace: return "NotAFace";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::InternalError: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace toricmld
