#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

// Error conditions surfaced by the library. The CLI maps these onto exit
// codes, so the set is part of the public contract.
enum class Errc {
  NotPacked,
  NotPermutation,
  OutOfRange,
  EmptyWord,
  SizeMismatch,
  SplitUnsupported,
  NotCompatibleShuffle,
  CapExceeded,
  UnknownElement,
  NotInternalEdge,
  TooFewParts,
  LeafHasNoWedge,
  LeafHasNoRelations,
  LeafIndexOutOfRange,
  UnitUndefined,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace bruhat
