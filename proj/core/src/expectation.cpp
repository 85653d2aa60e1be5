#include "evidec/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace evidec {

Rho::Rho(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << "rho " << value << " must lie in [0, 1]";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

void RhoMap::set(const std::vector<double>& focal_elements, double rho) {
    std::vector<double> key = focal_elements;
    std::sort(key.begin(), key.end());
    per_focal_[std::move(key)] = Rho(rho).value();
}

std::optional<double> RhoMap::lookup(const FocalElement& focal) const {
    auto it = per_focal_.find(focal.elements);
    if (it != per_focal_.end()) return it->second;
    return default_;
}

PointDistribution::PointDistribution(Frame f, std::vector<double> probs)
    : frame(std::move(f)), probabilities(std::move(probs)) {
    if (probabilities.size() != frame.size()) {
        throw Error(ErrorCode::InvalidArgument, "probability vector must match the frame size");
    }
    double total = 0.0;
    for (double p : probabilities) {
        if (p < 0.0 || !std::isfinite(p)) {
            throw Error(ErrorCode::InvalidArgument, "probabilities must be nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "probabilities sum to " << total << ", expected 1";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

double probabilistic_expect(const PointDistribution& p) {
    double e = 0.0;
    for (std::size_t i = 0; i < p.frame.size(); ++i) {
        e += p.frame.values()[i] * p.probabilities[i];
    }
    return e;
}

ExpectedValueInterval evi(const MassFunction& m) {
    double lower = 0.0;
    double upper = 0.0;
    for (const auto& focal : m.focals()) {
        lower += focal.inf() * focal.mass;
        upper += focal.sup() * focal.mass;
    }
    return ExpectedValueInterval{lower, upper};
}

double rho_expect(const ExpectedValueInterval& e, Rho rho) {
    return e.lower + rho.value() * (e.upper - e.lower);
}

double rho_expect_per_source(const MassFunction& m, const RhoMap& rhos) {
    double value = 0.0;
    for (const auto& focal : m.focals()) {
        value += focal.inf() * focal.mass;
        if (focal.is_singleton()) continue;
        auto rho = rhos.lookup(focal);
        if (!rho) {
            std::ostringstream msg;
            msg << "no cooperation probability for a focal element of size "
                << focal.elements.size();
            throw Error(ErrorCode::MissingRho, msg.str());
        }
        value += *rho * (focal.sup() - focal.inf()) * focal.mass;
    }
    return value;
}

namespace {

std::size_t frame_index(const Frame& frame, double v) {
    auto it = std::lower_bound(frame.values().begin(), frame.values().end(), v);
    return static_cast<std::size_t>(it - frame.values().begin());
}

}  // namespace

PointDistribution induced_distribution(const MassFunction& m, Rho rho) {
    std::vector<double> probs(m.frame().size(), 0.0);
    for (const auto& focal : m.focals()) {
        // Singleton focals (sup == inf) receive the full mass regardless of rho.
        probs[frame_index(m.frame(), focal.sup())] += rho.value() * focal.mass;
        probs[frame_index(m.frame(), focal.inf())] += (1.0 - rho.value()) * focal.mass;
    }
    return PointDistribution(m.frame(), std::move(probs));
}

PointDistribution pignistic_distribution(const MassFunction& m) {
    std::vector<double> probs(m.frame().size(), 0.0);
    for (const auto& focal : m.focals()) {
        double share = focal.mass / static_cast<double>(focal.elements.size());
        for (double v : focal.elements) {
            probs[frame_index(m.frame(), v)] += share;
        }
    }
    return PointDistribution(m.frame(), std::move(probs));
}

PointDistribution proportional_distribution(const MassFunction& m) {
    std::vector<double> singleton(m.frame().size(), 0.0);
    for (const auto& focal : m.focals()) {
        if (focal.is_singleton()) {
            singleton[frame_index(m.frame(), focal.inf())] += focal.mass;
        }
    }
    // Each non-singleton focal element's mass is split over its own members
    // in proportion to their singleton masses. Mass never leaves the focal
    // element, so the result stays consistent with the belief function.
    std::vector<double> probs = singleton;
    for (const auto& focal : m.focals()) {
        if (focal.is_singleton()) continue;
        double base = 0.0;
        for (double v : focal.elements) base += singleton[frame_index(m.frame(), v)];
        if (base <= 0.0) {
            throw Error(ErrorCode::NoSingletonMass,
                        "proportional redistribution needs singleton mass inside every "
                        "non-singleton focal element");
        }
        for (double v : focal.elements) {
            std::size_t i = frame_index(m.frame(), v);
            probs[i] += focal.mass * singleton[i] / base;
        }
    }
    return PointDistribution(m.frame(), std::move(probs));
}

double pignistic_expect(const MassFunction& m) {
    return probabilistic_expect(pignistic_distribution(m));
}

double proportional_expect(const MassFunction& m) {
    return probabilistic_expect(proportional_distribution(m));
}

double lesh_eeb(const MassFunction& m, const std::vector<double>& subset, double tau) {
    BeliefInterval b = belief_interval(m, subset);
    double width = b.plausibility - b.support;
    return (b.support + b.plausibility) / 2.0 + tau * width * width / 2.0;
}

double lesh_eev(const MassFunction& m, double tau) {
    double value = 0.0;
    for (double a : m.frame().values()) {
        value += a * lesh_eeb(m, {a}, tau);
    }
    return value;
}

}  // namespace evidec
