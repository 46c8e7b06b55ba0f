#include "cohodge/error.hpp"

namespace cohodge {

const char* errcName(Errc code) noexcept
{
    switch (code)
    {
        case Errc::NotAComplex:           return "NotAComplex";
        case Errc::DegreeOutOfRange:      return "DegreeOutOfRange";
        case Errc::MissingScalar:         return "MissingScalar";
        case Errc::SingularMatrix:        return "SingularMatrix";
        case Errc::DependentBasis:        return "DependentBasis";
        case Errc::DegenerateEnergy:      return "DegenerateEnergy";
        case Errc::BudgetExceeded:        return "BudgetExceeded";
        case Errc::NotACycle:             return "NotACycle";
        case Errc::NotPseudoRegular:      return "NotPseudoRegular";
        case Errc::NotSurjective:         return "NotSurjective";
        case Errc::RankDeficientBothWays: return "RankDeficientBothWays";
        case Errc::WrongDimension:        return "WrongDimension";
        case Errc::NotATreeComplex:       return "NotATreeComplex";
        case Errc::ParseError:            return "ParseError";
        case Errc::Unsupported:           return "Unsupported";
        case Errc::Internal:              return "Internal";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errcName(code)) + ": " + message), code_(code)
{
}

void fail(Errc code, const std::string& message)
{
    throw Error(code, message);
}

}  // namespace cohodge
