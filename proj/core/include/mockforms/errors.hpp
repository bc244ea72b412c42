#pragma once

#include <stdexcept>
#include <string>

namespace mockforms {

// Every library error carries a short machine-readable kind ("PoleAtQZero", ...)
// that the registry and CLI surface verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MOCKFORMS_ERROR(Name)                                   \
  struct Name : Error {                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

MOCKFORMS_ERROR(AmbientOrderTooSmall);
MOCKFORMS_ERROR(OrderMismatch);
MOCKFORMS_ERROR(ExponentOverflow);
MOCKFORMS_ERROR(ParseError);
MOCKFORMS_ERROR(PoleAtQZero);
MOCKFORMS_ERROR(InvalidLevel);
MOCKFORMS_ERROR(NotAUnit);
MOCKFORMS_ERROR(ZeroDivision);
MOCKFORMS_ERROR(InsufficientPrecision);
MOCKFORMS_ERROR(NearPole);
MOCKFORMS_ERROR(RankUnstable);
MOCKFORMS_ERROR(ModeUnsupported);
MOCKFORMS_ERROR(InvalidParams);
MOCKFORMS_ERROR(UnknownIdentity);

#undef MOCKFORMS_ERROR

}  // namespace mockforms
