#ifndef QSW_CHECKS_HPP
#define QSW_CHECKS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsw/halfplane.hpp"
#include "qsw/rat.hpp"

namespace qsw {

/// Parameters a check can consume; each check reads the subset it documents
/// and ignores the rest. Exact checks never read tolerance/precision/terms.
struct CheckParams {
    long order = 200;
    std::optional<Rat> k;         // kk-residual, exponent-probe
    std::optional<Rat> r;         // equivariance, restricts to one r
    std::optional<Rat> exponent;  // kk-residual: override the eta exponent
    double tolerance = 1e-8;
    long precision = 60;
    long terms = 0;  // 0 = adaptive
};

struct CheckReport {
    std::string name;
    bool pass;
    nlohmann::json details;
};

/// Catalog order; names are stable CLI surface.
const std::vector<std::string>& check_names();
bool check_is_numeric(const std::string& name);
bool is_known_check(const std::string& name);

/// Runs one catalog entry. Throws UnknownCheck for names outside the
/// catalog and propagates precondition errors (bad k, tail bound, ...).
CheckReport run_check(const std::string& name, const CheckParams& params);

// Fixed numeric test sets, shared with the acceptance suite so that
// doubling reruns exercise exactly the published points.
const std::vector<UniModularMatrix>& gamma5_test_matrices();
std::vector<BigComplex> gamma5_test_points(const UniModularMatrix& g);
std::vector<UniModularMatrix> equivariance_gammas(const Rat& r);
const std::array<BigComplex, 4>& equivariance_taus();

/// One Gamma(5) evaluation, exposed for doubling reruns.
NumericResult gamma5_once(const UniModularMatrix& g, const BigComplex& tau,
                          const EvalContext& ctx);
/// One equivariance evaluation: solves the basis at a row count derived
/// from ctx (ctx.terms = 0 picks it from the tail bound) and compares
/// cross-ratios for gamma.
NumericResult equivariance_once(const Rat& r, const UniModularMatrix& g,
                                const EvalContext& ctx);

}  // namespace qsw

#endif
