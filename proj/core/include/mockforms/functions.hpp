#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "mockforms/mock.hpp"

namespace mockforms {

// A named function with string-valued arguments, as taken from the command line:
//   theta      j level sign K alpha beta gamma
//   eta        k
//   vartheta   kind K alpha beta gamma
//   phi        m s sign part K alpha1 beta1 gamma1 alpha2 beta2 gamma2 t
//   numerator  m s p
// Missing arguments take the defaults listed by function_defaults().
struct FunctionSpec {
  std::string fn;
  std::map<std::string, std::string> args;
};

const std::vector<std::string>& function_names();
// InvalidParams for an unknown function.
const std::map<std::string, std::string>& function_defaults(const std::string& fn);

// Validates the argument names and values (InvalidParams / ParseError).
FunctionSpec normalise(const FunctionSpec& spec);

QXSeries expand_function(const FunctionSpec& spec, const ExpRational& trunc);

// Direct numeric summation of the same function at (tau, z); for phi both
// z-arguments are the affine images of the single z.
std::complex<double> evaluate_function(const FunctionSpec& spec, std::complex<double> tau,
                                       std::complex<double> z);

}  // namespace mockforms
