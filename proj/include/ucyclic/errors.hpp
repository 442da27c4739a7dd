#pragma once

#include <stdexcept>
#include <string>

namespace ucyclic {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// field / ring construction and arithmetic
struct ReducibleModulus : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct SpecMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// y-adic polynomials
struct ModulusMismatch : Error { using Error::Error; };

// solution spaces
struct InconsistentSystem : Error { using Error::Error; };
struct MissingAssignment : Error { using Error::Error; };
struct SizeOverflow : Error { using Error::Error; };

// enumeration / oracle
struct UnsupportedFamily : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct CardinalityMismatch : Error { using Error::Error; };

}  // namespace ucyclic
