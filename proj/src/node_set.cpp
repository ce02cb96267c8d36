#include <algorithm>
#include <cmath>

#include "unirat/types.hpp"

namespace unirat {

namespace {

void validate_full(const std::vector<double>& nodes) {
    if (nodes.empty() || nodes.size() % 2 == 0)
        throw DomainError("a degree-n node set has 2n+1 entries");
    for (const double x : nodes)
        if (!std::isfinite(x)) throw DomainError("nodes must be finite");
    if (nodes.front() <= -1.0 || nodes.back() >= 1.0)
        throw DomainError("nodes must lie strictly inside (-1, 1)");
    for (std::size_t j = 1; j < nodes.size(); ++j)
        if (!(nodes[j - 1] < nodes[j]))
            throw DomainError("nodes must be strictly increasing");
}

bool exact_mirror(const std::vector<double>& nodes) {
    const std::size_t n = nodes.size() / 2;
    if (nodes[n] != 0.0) return false;
    for (std::size_t j = 0; j < n; ++j)
        if (nodes[j] != -nodes[nodes.size() - 1 - j]) return false;
    return true;
}

}  // namespace

NodeSet NodeSet::of(std::vector<double> nodes) {
    std::sort(nodes.begin(), nodes.end());
    validate_full(nodes);
    NodeSet out;
    out.n_ = static_cast<int>(nodes.size() / 2);
    if (exact_mirror(nodes)) {
        out.symmetric_ = true;
        out.store_.assign(nodes.begin() + out.n_, nodes.end());
    } else {
        out.symmetric_ = false;
        out.store_ = std::move(nodes);
    }
    return out;
}

NodeSet NodeSet::from_half(std::vector<double> half) {
    if (half.empty() || half.front() != 0.0)
        throw DomainError("the nonnegative half must start at 0");
    if (half.back() >= 1.0) throw DomainError("nodes must lie inside (-1, 1)");
    for (const double x : half)
        if (!std::isfinite(x)) throw DomainError("nodes must be finite");
    for (std::size_t j = 1; j < half.size(); ++j)
        if (!(half[j - 1] < half[j]))
            throw DomainError("nodes must be strictly increasing");
    NodeSet out;
    out.n_ = static_cast<int>(half.size()) - 1;
    out.symmetric_ = true;
    out.store_ = std::move(half);
    return out;
}

std::vector<double> NodeSet::values() const {
    if (!symmetric_) return store_;
    std::vector<double> out;
    out.reserve(size());
    for (std::size_t j = store_.size(); j-- > 1;) out.push_back(-store_[j]);
    out.insert(out.end(), store_.begin(), store_.end());
    return out;
}

const std::vector<double>& NodeSet::half() const {
    if (!symmetric_)
        throw PreconditionNotMet("half() is only defined for symmetric node sets");
    return store_;
}

}  // namespace unirat
