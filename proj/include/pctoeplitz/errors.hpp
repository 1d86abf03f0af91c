#pragma once

#include <stdexcept>
#include <string>

namespace pctoeplitz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PCTOEPLITZ_ERROR(Name)           \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// symbol construction
PCTOEPLITZ_ERROR(EmptyError);
PCTOEPLITZ_ERROR(OverlapError);

// coefficient-space operators
PCTOEPLITZ_ERROR(SizeError);
PCTOEPLITZ_ERROR(NotAnalyticError);
PCTOEPLITZ_ERROR(GridTooCoarseError);
PCTOEPLITZ_ERROR(TruncationError);
PCTOEPLITZ_ERROR(TooCloseError);
PCTOEPLITZ_ERROR(UnderResolvedError);

// spectra
PCTOEPLITZ_ERROR(DomainError);
PCTOEPLITZ_ERROR(EndpointError);
PCTOEPLITZ_ERROR(DegenerateError);
PCTOEPLITZ_ERROR(InSpectrumError);
PCTOEPLITZ_ERROR(HasJumpsError);
PCTOEPLITZ_ERROR(NotTrigPolynomialError);

// oscillation
PCTOEPLITZ_ERROR(LengthError);
PCTOEPLITZ_ERROR(DeltaError);

// experiments
PCTOEPLITZ_ERROR(BudgetError);

// symbol files
PCTOEPLITZ_ERROR(ParseError);

#undef PCTOEPLITZ_ERROR

}  // namespace pctoeplitz
