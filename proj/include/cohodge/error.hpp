#pragma once

#include <stdexcept>
#include <string>

namespace cohodge {

/// Failure categories surfaced by the library. The CLI maps these to
/// machine-readable error reports and nonzero exit codes.
enum class Errc {
    NotAComplex,
    DegreeOutOfRange,
    MissingScalar,
    SingularMatrix,
    DependentBasis,
    DegenerateEnergy,
    BudgetExceeded,
    NotACycle,
    NotPseudoRegular,
    NotSurjective,
    RankDeficientBothWays,
    WrongDimension,
    NotATreeComplex,
    ParseError,
    Unsupported,
    Internal,
};

const char* errcName(Errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message);
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace cohodge
