#pragma once

#include <stdexcept>
#include <string>

namespace trifact {

enum class Errc {
    NotPrime,
    DegreeZero,
    Singular,
    DimensionMismatch,
    AmbientMismatch,
    NotInAmbient,
    NotContained,
    BadDimensions,
    BadParams,
    TooLarge,
    NoSuchPair,
    PreconditionViolated,
    PredicateFails,
    UnimplementedCase,
    NotPairwiseDisjoint,
    NotFound,
    BaseCaseMissing,
    BadRange,
    BadSubsets,
    DegenerateGeometry,
    Parse,
    CertificationFailed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace trifact
