#ifndef QSW_CLASSIFIER_HPP
#define QSW_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsw/rat.hpp"

namespace qsw {

/// Outcome of the modularity decision for D^2 y = (r^2/4) E4 y with
/// r = (k+1)/6 = n/m in lowest terms:
///   FullyModular     2 <= m <= 5; both solutions modular, invariance
///                    group Gamma(m), level m
///   QuasiModular     m = 1; one solution quasi-modular of weight k+1,
///                    depth 1
///   PartiallyModular m = 6 and k an integer (k = 0, 4 mod 6); a
///                    one-dimensional modular solution space exists
///   NoFullModularity every other rational k with r > 0
enum class ModularityTag {
    FullyModular,
    PartiallyModular,
    QuasiModular,
    NoFullModularity,
};

struct QuasiNote {
    Rat weight;  // k + 1
    long depth;  // 1
};

struct ModularityClass {
    ModularityTag tag;
    long n;  // numerator of r
    long m;  // denominator of r
    Rat r;
    std::optional<long> level;      // = m when fully modular
    std::optional<QuasiNote> note;  // present when quasi-modular
};

const char* tag_name(ModularityTag tag);

/// Decides the class of k from (n, m) and the integrality of k.
/// k <= -1 is out of the theorem's range and rejected.
ModularityClass classify(const Rat& k);

/// The level-5 family k = 6n/5 - 1 for 1 <= n <= bound with 5 not
/// dividing n; every member classifies as fully modular with m = 5.
std::vector<Rat> level5_ks(long bound);

}  // namespace qsw

#endif
