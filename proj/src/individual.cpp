#include "xover/individual.hpp"

#include <stdexcept>

namespace xover {

ObjectiveVector::ObjectiveVector(std::initializer_list<std::int64_t> values) {
    if (values.size() == 0 || values.size() > max_arity) {
        throw std::invalid_argument("ObjectiveVector: arity must be 1 or 2");
    }
    std::size_t j = 0;
    for (const auto v : values) values_[j++] = v;
    arity_ = values.size();
}

std::string ObjectiveVector::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < arity_; ++j) {
        if (j) s += ',';
        s += std::to_string(values_[j]);
    }
    return s + ")";
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominates: arity mismatch");
    bool strict = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < b[j]) return false;
        if (a[j] > b[j]) strict = true;
    }
    return strict;
}

}  // namespace xover
