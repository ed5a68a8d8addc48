#include "qsw/classifier.hpp"

#include "qsw/errors.hpp"

namespace qsw {

const char* tag_name(ModularityTag tag) {
    switch (tag) {
        case ModularityTag::FullyModular: return "FullyModular";
        case ModularityTag::PartiallyModular: return "PartiallyModular";
        case ModularityTag::QuasiModular: return "QuasiModular";
        case ModularityTag::NoFullModularity: return "NoFullModularity";
    }
    return "?";
}

ModularityClass classify(const Rat& k) {
    Rat r = Rat((k + 1) / 6);
    if (r <= 0) throw NonPositiveR();
    long n = r.get_num().get_si();
    long m = r.get_den().get_si();

    ModularityClass out{ModularityTag::NoFullModularity, n, m, r,
                        std::nullopt, std::nullopt};
    if (m >= 2 && m <= 5) {
        out.tag = ModularityTag::FullyModular;
        out.level = m;
    } else if (m == 1) {
        out.tag = ModularityTag::QuasiModular;
        out.note = QuasiNote{Rat(k + 1), 1};
    } else if (m == 6 && is_integer(k)) {
        out.tag = ModularityTag::PartiallyModular;
    }
    return out;
}

std::vector<Rat> level5_ks(long bound) {
    std::vector<Rat> out;
    for (long n = 1; n <= bound; ++n) {
        if (n % 5 == 0) continue;
        out.push_back(Rat(Rat(6 * n, 5) - 1));
    }
    return out;
}

}  // namespace qsw
