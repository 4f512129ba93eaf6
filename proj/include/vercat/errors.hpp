#ifndef VERCAT_ERRORS_HPP
#define VERCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vercat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input validation
struct InvalidPrime : Error { using Error::Error; };
struct NotACharacter : Error { using Error::Error; };
struct BadSimpleIndex : Error { using Error::Error; };
struct NotDominant : Error { using Error::Error; };
struct UnsupportedType : Error { using Error::Error; };
struct NotInClosedAlcove : Error { using Error::Error; };
struct PrimeTooSmall : Error { using Error::Error; };
struct NotInAn : Error { using Error::Error; };
struct PromiseViolated : Error { using Error::Error; };

// Mathematical-consistency failures (never silently returned)
struct CartanSingular : Error { using Error::Error; };
struct FusionConsistency : Error { using Error::Error; };

// Internal bug signals
struct NotInNonnegativeSpan : Error { using Error::Error; };
struct DivisionNotExact : Error { using Error::Error; };

} // namespace vercat

#endif
