#pragma once

#include <utility>
#include <vector>

#include "evidec/error.hpp"

namespace evidec {

/// Finite set of scalar payoffs, kept sorted and distinct.
class Frame {
  public:
    explicit Frame(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool contains(double v) const;

    double min() const { return values_.front(); }
    double max() const { return values_.back(); }

    friend bool operator==(const Frame&, const Frame&) = default;

  private:
    std::vector<double> values_;
};

/// Subset of a frame carrying strictly positive mass. Elements are sorted.
struct FocalElement {
    std::vector<double> elements;
    double mass = 0.0;

    double inf() const { return elements.front(); }
    double sup() const { return elements.back(); }
    bool is_singleton() const { return elements.size() == 1; }
};

struct BeliefInterval {
    double support = 0.0;
    double plausibility = 0.0;
};

class MassFunction {
  public:
    /// Canonicalizes and validates: subsets sorted, duplicates merged by
    /// summing masses, unit sum checked to 1e-9.
    MassFunction(Frame frame, std::vector<std::pair<std::vector<double>, double>> assignments);

    const Frame& frame() const { return frame_; }
    const std::vector<FocalElement>& focals() const { return focals_; }

    static constexpr double kMassSumTolerance = 1e-9;

  private:
    Frame frame_;
    std::vector<FocalElement> focals_;
};

MassFunction make_mass_function(std::vector<double> frame,
                                std::vector<std::pair<std::vector<double>, double>> assignments);

/// Spt(A): total mass of focal elements contained in A. Empty A yields 0.
double support(const MassFunction& m, const std::vector<double>& subset);

/// Pls(A) = 1 - Spt(complement of A). Empty A yields 0.
double plausibility(const MassFunction& m, const std::vector<double>& subset);

BeliefInterval belief_interval(const MassFunction& m, const std::vector<double>& subset);

/// True iff every focal element is a singleton (ordinary probability distribution).
bool is_bayesian(const MassFunction& m);

}  // namespace evidec
