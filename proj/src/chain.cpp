#include "ckc/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ckc {

ChainSpec::ChainSpec(std::vector<double> links) : links_(std::move(links)) {
    if (links_.size() < 4)
        throw invalid_chain_error("chain needs at least 4 links, got " +
                                  std::to_string(links_.size()));
    for (double a : links_)
        if (!(a > 0.0) || !std::isfinite(a))
            throw invalid_chain_error("link lengths must be positive and finite");

    sq_prefix_.resize(links_.size() + 1, 0.0);
    for (std::size_t i = 0; i < links_.size(); ++i) {
        sq_prefix_[i + 1] = sq_prefix_[i] + links_[i] * links_[i];
        total_ += links_[i];
    }
    max_link_ = *std::max_element(links_.begin(), links_.end());
    feasible_ = 2.0 * max_link_ <= total_;
}

double ChainSpec::sum_squares(std::size_t m) const {
    if (m < 1 || m > links_.size())
        throw dimension_error("sum_squares: m = " + std::to_string(m) +
                              " outside [1, " + std::to_string(links_.size()) + "]");
    return sq_prefix_[m];
}

AngleVector::AngleVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty())
        throw dimension_error("angle vector must hold at least one angle");
    for (double& v : values_) {
        if (!std::isfinite(v))
            throw invalid_parameter_error("angle vector entries must be finite");
        v = normalize_angle(v);
    }
}

}  // namespace ckc
