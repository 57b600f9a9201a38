#pragma once

#include <stdexcept>
#include <string>

namespace ncmult {

// Base of every error raised by the library. Each failure mode has its own
// type so callers (and tests) can catch exactly what they expect.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct InvalidExponent : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct InvalidMatrix : Error { using Error::Error; };

struct UnknownFamily : Error { using Error::Error; };
struct InvalidGroup : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };

struct DegenerateSpectrum : Error { using Error::Error; };
struct ExhaustedRetries : Error { using Error::Error; };

struct InvalidTrials : Error { using Error::Error; };
struct NotSeparating : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace ncmult
