#include "evidec/frame.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace evidec {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyFocal: return "EmptyFocal";
        case ErrorCode::MassSumViolation: return "MassSumViolation";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::NonPositiveMass: return "NonPositiveMass";
        case ErrorCode::NoSingletonMass: return "NoSingletonMass";
        case ErrorCode::MissingRho: return "MissingRho";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::EmptyOutcome: return "EmptyOutcome";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

Frame::Frame(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "frame must be nonempty");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidArgument, "frame values must be finite");
        }
    }
    std::sort(values_.begin(), values_.end());
    auto dup = std::adjacent_find(values_.begin(), values_.end());
    if (dup != values_.end()) {
        std::ostringstream msg;
        msg << "duplicate frame value " << *dup;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

bool Frame::contains(double v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

namespace {

std::vector<double> canonical_subset(const Frame& frame, std::vector<double> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (double v : subset) {
        if (!frame.contains(v)) {
            std::ostringstream msg;
            msg << "value " << v << " is not in the frame";
            throw Error(ErrorCode::UnknownElement, msg.str());
        }
    }
    return subset;
}

// A contained in B, both sorted.
bool subset_of(const std::vector<double>& a, const std::vector<double>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

MassFunction::MassFunction(Frame frame,
                           std::vector<std::pair<std::vector<double>, double>> assignments)
    : frame_(std::move(frame)) {
    std::map<std::vector<double>, double> merged;
    for (auto& [subset, mass] : assignments) {
        if (subset.empty()) {
            throw Error(ErrorCode::EmptyFocal, "the empty set may not carry mass");
        }
        if (!(mass > 0.0) || !std::isfinite(mass)) {
            std::ostringstream msg;
            msg << "mass " << mass << " must be strictly positive";
            throw Error(ErrorCode::NonPositiveMass, msg.str());
        }
        merged[canonical_subset(frame_, std::move(subset))] += mass;
    }
    if (merged.empty()) {
        throw Error(ErrorCode::MassSumViolation, "no focal elements given");
    }
    double total = 0.0;
    for (const auto& [subset, mass] : merged) {
        focals_.push_back(FocalElement{subset, mass});
        total += mass;
    }
    if (std::abs(total - 1.0) > kMassSumTolerance) {
        std::ostringstream msg;
        msg << "masses sum to " << total << ", expected 1";
        throw Error(ErrorCode::MassSumViolation, msg.str());
    }
}

MassFunction make_mass_function(std::vector<double> frame,
                                std::vector<std::pair<std::vector<double>, double>> assignments) {
    return MassFunction(Frame(std::move(frame)), std::move(assignments));
}

double support(const MassFunction& m, const std::vector<double>& subset) {
    auto a = canonical_subset(m.frame(), subset);
    double total = 0.0;
    for (const auto& focal : m.focals()) {
        if (subset_of(focal.elements, a)) total += focal.mass;
    }
    return total;
}

double plausibility(const MassFunction& m, const std::vector<double>& subset) {
    auto a = canonical_subset(m.frame(), subset);
    if (a.empty()) return 0.0;
    std::vector<double> complement;
    std::set_difference(m.frame().values().begin(), m.frame().values().end(), a.begin(), a.end(),
                        std::back_inserter(complement));
    return 1.0 - support(m, complement);
}

BeliefInterval belief_interval(const MassFunction& m, const std::vector<double>& subset) {
    return BeliefInterval{support(m, subset), plausibility(m, subset)};
}

bool is_bayesian(const MassFunction& m) {
    return std::all_of(m.focals().begin(), m.focals().end(),
                       [](const FocalElement& f) { return f.is_singleton(); });
}

}  // namespace evidec
