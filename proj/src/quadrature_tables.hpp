#pragma once

namespace mwx::detail {

// Each entry of `data` is dim reference coordinates followed by a weight.
struct RawRule {
    int dim;
    int degree;
    int num_points;
    const double* data;
};

extern const RawRule kRawRules[];
extern const int kRawRuleCount;

}  // namespace mwx::detail
