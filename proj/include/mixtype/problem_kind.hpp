#pragma once

#include <stdexcept>
#include <string>

namespace mixtype {

enum class ProblemFamily { HyperbolicElliptic, HyperbolicParabolic };

enum class ProblemTag {
    FineHE,        // wave / elliptic alternating on n cells
    FineHP,        // wave / heat alternating on n cells
    LimitHE,       // homogenized limit of FineHE
    LimitHP,       // homogenized limit of FineHP
    PureWave,      // degenerate duty = 1 baseline
    PureElliptic,  // degenerate duty = 0 baseline of the HE family
    PureParabolic, // degenerate duty = 0 baseline of the HP family
};

/// Problem selector. Fine-scale tags carry the period count n; limit and
/// degenerate tags do not.
struct ProblemKind {
    ProblemTag tag = ProblemTag::LimitHE;
    int n = 0; // periods, fine-scale tags only

    static ProblemKind fine_he(int n) { return make_fine(ProblemTag::FineHE, n); }
    static ProblemKind fine_hp(int n) { return make_fine(ProblemTag::FineHP, n); }
    static ProblemKind limit_he() { return {ProblemTag::LimitHE, 0}; }
    static ProblemKind limit_hp() { return {ProblemTag::LimitHP, 0}; }
    static ProblemKind pure_wave() { return {ProblemTag::PureWave, 0}; }
    static ProblemKind pure_elliptic() { return {ProblemTag::PureElliptic, 0}; }
    static ProblemKind pure_parabolic() { return {ProblemTag::PureParabolic, 0}; }

    bool is_fine() const { return tag == ProblemTag::FineHE || tag == ProblemTag::FineHP; }
    bool is_limit() const { return tag == ProblemTag::LimitHE || tag == ProblemTag::LimitHP; }

    ProblemFamily family() const {
        switch (tag) {
        case ProblemTag::FineHE:
        case ProblemTag::LimitHE:
        case ProblemTag::PureWave:
        case ProblemTag::PureElliptic:
            return ProblemFamily::HyperbolicElliptic;
        default:
            return ProblemFamily::HyperbolicParabolic;
        }
    }

    std::string name() const {
        switch (tag) {
        case ProblemTag::FineHE: return "fine_he(n=" + std::to_string(n) + ")";
        case ProblemTag::FineHP: return "fine_hp(n=" + std::to_string(n) + ")";
        case ProblemTag::LimitHE: return "limit_he";
        case ProblemTag::LimitHP: return "limit_hp";
        case ProblemTag::PureWave: return "pure_wave";
        case ProblemTag::PureElliptic: return "pure_elliptic";
        case ProblemTag::PureParabolic: return "pure_parabolic";
        }
        return "?";
    }

private:
    static ProblemKind make_fine(ProblemTag tag, int n) {
        if (n < 1)
            throw std::invalid_argument("fine-scale problem needs n >= 1, got " +
                                        std::to_string(n));
        return {tag, n};
    }
};

} // namespace mixtype
