#ifndef BESOVK_QUERY_HPP
#define BESOVK_QUERY_HPP

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "besovk/grid.hpp"

namespace besovk {

enum class CaseTag {
    P_EQUAL_S_DIFF_Q_EQUAL,
    P_EQUAL_S_DIFF_Q_DIFF,
    P_EQUAL_S_EQUAL,
    Q_EQUAL_P_DIFF,
    GENERAL,
    DEGENERATE,
    ORACLE_ONLY,
};

inline std::string_view to_string(CaseTag c) {
    switch (c) {
        case CaseTag::P_EQUAL_S_DIFF_Q_EQUAL: return "P_EQUAL_S_DIFF_Q_EQUAL";
        case CaseTag::P_EQUAL_S_DIFF_Q_DIFF: return "P_EQUAL_S_DIFF_Q_DIFF";
        case CaseTag::P_EQUAL_S_EQUAL: return "P_EQUAL_S_EQUAL";
        case CaseTag::Q_EQUAL_P_DIFF: return "Q_EQUAL_P_DIFF";
        case CaseTag::GENERAL: return "GENERAL";
        case CaseTag::DEGENERATE: return "DEGENERATE";
        case CaseTag::ORACLE_ONLY: return "ORACLE_ONLY";
    }
    return "?";
}

/// A couple of Besov sequence spaces together with the (theta, r) parameters of the
/// interpolation norm and the aggregation exponent xi of K_xi.
struct InterpQuery {
    BesovIndex idx0;
    BesovIndex idx1;
    double theta = 0.5;
    double r = 1.0;
    double xi = 1.0;

    double s_tilde(int n) const {
        return idx1.s - idx0.s + ratio_over(n, idx0.p) - ratio_over(n, idx1.p);
    }

    /// The same couple in reverse order; K(t, A0, A1) = t K(1/t, A1, A0).
    InterpQuery swapped() const {
        InterpQuery out = *this;
        out.idx0 = idx1;
        out.idx1 = idx0;
        out.theta = 1.0 - theta;
        return out;
    }

    CaseTag case_tag() const {
        if (idx0 == idx1) return CaseTag::DEGENERATE;
        if (idx0.p == idx1.p) {
            if (idx0.s == idx1.s) return CaseTag::P_EQUAL_S_EQUAL;
            return idx0.q == idx1.q ? CaseTag::P_EQUAL_S_DIFF_Q_EQUAL
                                    : CaseTag::P_EQUAL_S_DIFF_Q_DIFF;
        }
        if (idx0.q == idx1.q) return CaseTag::Q_EQUAL_P_DIFF;
        if (std::isfinite(idx0.q) && std::isfinite(idx1.q)) return CaseTag::GENERAL;
        return CaseTag::ORACLE_ONLY;
    }

    void validate() const {
        if (!idx0.valid() || !idx1.valid())
            throw UsageError("InterpQuery: p and q must be positive, s finite");
        if (!(xi > 0.0)) throw UsageError("InterpQuery: xi must be positive");
    }
};

/// Sampled K(t) values, t strictly increasing.
struct KCurve {
    std::vector<std::pair<double, double>> samples;
    std::string method;
};

/// t_k = 2^{k / points_per_unit} for k from t_min_exp*ppu to t_max_exp*ppu inclusive.
inline std::vector<double> make_t_grid(int t_min_exp, int t_max_exp, int points_per_unit) {
    if (t_min_exp > t_max_exp) throw UsageError("t grid: t_min_exp must not exceed t_max_exp");
    if (points_per_unit < 1) throw UsageError("t grid: points per decade must be >= 1");
    std::vector<double> out;
    const long lo = static_cast<long>(t_min_exp) * points_per_unit;
    const long hi = static_cast<long>(t_max_exp) * points_per_unit;
    for (long k = lo; k <= hi; ++k) out.push_back(std::exp2(static_cast<double>(k) / points_per_unit));
    return out;
}

}  // namespace besovk

#endif  // BESOVK_QUERY_HPP
