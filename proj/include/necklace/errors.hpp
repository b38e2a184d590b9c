#pragma once

#include <stdexcept>
#include <string>

namespace necklace {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define NECKLACE_ERROR(Name)                  \
  struct Name : Error {                       \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  }

NECKLACE_ERROR(DivisionByZero);
NECKLACE_ERROR(ParseError);
NECKLACE_ERROR(SizeBudgetExceeded);
NECKLACE_ERROR(SpectrumNotResolved);
NECKLACE_ERROR(NotDiagonalizable);
NECKLACE_ERROR(CapExceeded);
NECKLACE_ERROR(NonCyclotomicEntries);
NECKLACE_ERROR(AlphabetMismatch);
NECKLACE_ERROR(ParameterDegenerate);
NECKLACE_ERROR(RestrictionViolated);
NECKLACE_ERROR(TagMismatch);
NECKLACE_ERROR(ConfigParseError);
NECKLACE_ERROR(CorruptCheckpoint);
NECKLACE_ERROR(WordTooLong);

#undef NECKLACE_ERROR

}  // namespace necklace
