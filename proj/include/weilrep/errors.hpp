#pragma once

#include <stdexcept>
#include <string>

namespace weilrep {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WEILREP_DEFINE_ERROR(Name)        \
  class Name : public Error {             \
   public:                                \
    explicit Name(const std::string& msg) \
        : Error(#Name ": " + msg) {}      \
  }

WEILREP_DEFINE_ERROR(NotAUnit);
WEILREP_DEFINE_ERROR(NotPrime);
WEILREP_DEFINE_ERROR(NotCoprime);
WEILREP_DEFINE_ERROR(ModulusMismatch);
WEILREP_DEFINE_ERROR(InvalidParams);
WEILREP_DEFINE_ERROR(NoSolution);
WEILREP_DEFINE_ERROR(DegenerateSolutionSpace);
WEILREP_DEFINE_ERROR(Singular);
WEILREP_DEFINE_ERROR(TooLarge);
WEILREP_DEFINE_ERROR(NotFound);
WEILREP_DEFINE_ERROR(NotRegularSemisimple);
WEILREP_DEFINE_ERROR(UnknownSuite);

#undef WEILREP_DEFINE_ERROR

}  // namespace weilrep
