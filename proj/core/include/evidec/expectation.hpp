#pragma once

#include <map>
#include <optional>
#include <vector>

#include "evidec/frame.hpp"

namespace evidec {

struct ExpectedValueInterval {
    double lower = 0.0;
    double upper = 0.0;

    double width() const { return upper - lower; }

    friend bool operator==(const ExpectedValueInterval&, const ExpectedValueInterval&) = default;
};

/// Cooperation probability: the chance that residual ignorance resolves
/// favorably. Checked to lie in [0, 1].
class Rho {
  public:
    explicit Rho(double value);
    double value() const { return value_; }

  private:
    double value_;
};

/// Per-focal-element cooperation probabilities, with an optional default for
/// elements not listed explicitly.
class RhoMap {
  public:
    RhoMap() = default;
    explicit RhoMap(double default_rho) : default_(Rho(default_rho).value()) {}

    void set(const std::vector<double>& focal_elements, double rho);

    std::optional<double> lookup(const FocalElement& focal) const;

  private:
    std::map<std::vector<double>, double> per_focal_;
    std::optional<double> default_;
};

struct PointDistribution {
    Frame frame;
    std::vector<double> probabilities;  // aligned with frame.values()

    PointDistribution(Frame f, std::vector<double> probs);
};

/// E = sum of a * p(a).
double probabilistic_expect(const PointDistribution& p);

/// Expected value interval: lower uses each focal element's inf, upper its sup.
ExpectedValueInterval evi(const MassFunction& m);

/// Linear interpolation lower + rho * (upper - lower).
double rho_expect(const ExpectedValueInterval& e, Rho rho);

/// Per-source variant: each focal element's ignorance resolves favorably with
/// its own probability. Reduces to rho_expect(evi(m), rho) for a constant map.
double rho_expect_per_source(const MassFunction& m, const RhoMap& rhos);

/// The probability distribution that routes each focal element's mass to its
/// sup with probability rho and to its inf otherwise.
PointDistribution induced_distribution(const MassFunction& m, Rho rho);

PointDistribution pignistic_distribution(const MassFunction& m);
PointDistribution proportional_distribution(const MassFunction& m);

/// Expected value after splitting each focal element's mass uniformly over
/// its members.
double pignistic_expect(const MassFunction& m);

/// Expected value after redistributing non-singleton mass in proportion to
/// the singleton masses. Requires positive total singleton mass.
double proportional_expect(const MassFunction& m);

/// (Spt + Pls) / 2 + tau * (Pls - Spt)^2 / 2 for the hypothesis A.
double lesh_eeb(const MassFunction& m, const std::vector<double>& subset, double tau);

/// Payoff-weighted sum of lesh_eeb over singleton hypotheses.
double lesh_eev(const MassFunction& m, double tau);

}  // namespace evidec
