#pragma once

#include "efdepth/canonical.hpp"
#include "efdepth/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace efdepth {

struct LowerBoundTerms {
    double size_term = 0;    ///< floor(l/2 - 2 log2 l + 3)
    double chromatic = 0;    ///< chi(F)
    double density = 0;      ///< e(F)/v(F) + 2
    double real_value = 0;   ///< max of the three
    int integer_bound = 0;   ///< ceiling of real_value
};

inline LowerBoundTerms lower_bound_terms(const Graph& f)
{
    const int l = f.order();
    if (l < 1)
        throw GraphError("lower bound needs a pattern with at least one vertex");
    LowerBoundTerms t;
    t.size_term = std::floor(0.5 * l - 2.0 * std::log2(static_cast<double>(l)) + 3.0);
    t.chromatic = chromatic_number(f);
    t.density = static_cast<double>(f.size()) / l + 2.0;
    t.real_value = std::max({t.size_term, t.chromatic, t.density});
    t.integer_bound = static_cast<int>(std::ceil(t.real_value - 1e-12));
    return t;
}

struct GeneralBound {
    double real_value;
    int integer_bound;
};

/// Closed-form lower bound on D[F]; with `use_complement` the larger of the
/// values for F and its complement (D[F] = D[complement F]).
inline GeneralBound general_lower_bound(const Graph& f, bool use_complement = false)
{
    LowerBoundTerms a = lower_bound_terms(f);
    GeneralBound out{a.real_value, a.integer_bound};
    if (use_complement) {
        LowerBoundTerms b = lower_bound_terms(complement(f));
        out.real_value = std::max(out.real_value, b.real_value);
        out.integer_bound = std::max(out.integer_bound, b.integer_bound);
    }
    return out;
}

} // namespace efdepth
