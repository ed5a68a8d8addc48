#ifndef QSW_ERRORS_HPP
#define QSW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact-series
struct LogTimesLog : Error {
    LogTimesLog() : Error("product of two log-bearing series leaves the representable space") {}
};
struct DivisionByZeroSeries : Error {
    DivisionByZeroSeries() : Error("division by a series that vanishes up to its truncation") {}
};
struct ZeroSeries : Error {
    ZeroSeries() : Error("operation requires a nonzero series") {}
};
struct NotMonic : Error {
    NotMonic() : Error("series is not monic (leading term must be exactly 1*q^0)") {}
};
struct NonPositiveLead : Error {
    NonPositiveLead() : Error("series must have positive leading exponent") {}
};

// schwarz-operator
struct ZeroDerivative : Error {
    ZeroDerivative() : Error("D(h) vanishes up to truncation") {}
};
struct LogInDenominator : Error {
    LogInDenominator() : Error("Moebius map would place a log-bearing series in a denominator") {}
};

// frobenius-solver
struct NonPositiveR : Error {
    NonPositiveR() : Error("indicial parameter r must be positive") {}
};
struct InconsistentKR : Error {
    InconsistentKR() : Error("weight k does not satisfy k = 6r - 1 for the solved basis") {}
};

// halfplane-numerics
struct TailBoundViolated : Error {
    explicit TailBoundViolated(const std::string& what) : Error(what) {}
};
struct NonUpperHalfPlane : Error {
    NonUpperHalfPlane() : Error("evaluation point must satisfy Im tau > 0") {}
};
struct PoleHit : Error {
    PoleHit() : Error("Moebius denominator c*z + d vanishes") {}
};
struct NotInGamma5 : Error {
    NotInGamma5() : Error("matrix is not congruent to the identity mod 5") {}
};
struct DegeneratePoints : Error {
    DegeneratePoints() : Error("evaluation points map to coincident values") {}
};
struct NotUnimodular : Error {
    NotUnimodular() : Error("matrix determinant is not 1") {}
};

// workbench
struct UnknownSeries : Error {
    explicit UnknownSeries(const std::string& name) : Error("unknown series name: " + name) {}
};
struct UnknownCheck : Error {
    explicit UnknownCheck(const std::string& name) : Error("unknown check name: " + name) {}
};

}  // namespace qsw

#endif
