#pragma once

#include <stdexcept>
#include <string>

namespace lfa {

/// Base class of every failure raised by the analysis library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LFA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

// exact algebra / symbols
LFA_DEFINE_ERROR(NotHermitian)
LFA_DEFINE_ERROR(BasisTooSmall)
LFA_DEFINE_ERROR(SingularAnsatz)
LFA_DEFINE_ERROR(ParseError)

// analysis
LFA_DEFINE_ERROR(UnsupportedSmoother)
LFA_DEFINE_ERROR(CoarseSymbolZeroDivisor)
LFA_DEFINE_ERROR(IrreducibleSpectrum)
LFA_DEFINE_ERROR(DimensionMismatch)

// quantifier elimination
LFA_DEFINE_ERROR(PoleInDomain)
LFA_DEFINE_ERROR(NotAffine)
LFA_DEFINE_ERROR(Unbounded)

// numeric verification
LFA_DEFINE_ERROR(BadGridSize)
LFA_DEFINE_ERROR(Divergence)

#undef LFA_DEFINE_ERROR

}  // namespace lfa
