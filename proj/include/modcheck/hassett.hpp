#pragma once

#include "modcheck/exact.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modcheck::hassett {

using exact::EpsValue;
using exact::Rational;

struct MarkedPoint {
    int component = 0;
    int coincidence = 0;  // points sharing an id coincide
};

// Genus-0 nodal curve with marked points; components are indexed 0..k-1.
struct StableCurveConfig {
    std::vector<std::string> components;
    std::vector<std::pair<int, int>> nodes;
    std::vector<MarkedPoint> points;  // marked index i+1 lives at points[i]

    int node_count(int component) const;
    // throws std::invalid_argument unless the dual graph is a tree and points are consistent
    void validate() const;
    std::vector<std::vector<int>> coincidence_classes() const;  // each sorted, classes ordered by first index
};

// Tokens separated by whitespace or ';': "A" declares a component, "A-B" a node,
// "3@A" a distinct marked point and "{1,2,3}@A" a coincidence class.
StableCurveConfig parse_config(const std::string& text);
std::string format_config(const StableCurveConfig& cfg);

enum class ViolationKind { CoincidenceOverweight, ComponentUnderweight };

struct Violation {
    ViolationKind kind;
    std::string location;
    EpsValue value;  // class weight, or N + sum of weights on the component
};

struct StabilityVerdict {
    bool ok = true;
    std::vector<Violation> violations;
};

std::string kind_name(ViolationKind k);

StabilityVerdict is_weighted_stable(const StableCurveConfig& cfg, const std::vector<EpsValue>& weights);

enum class ReductionFailure { CoincidenceOverweight, TotalWeightAtMostTwo, NotStableAtSource };

class ReductionError : public std::runtime_error {
public:
    ReductionError(ReductionFailure kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ReductionFailure kind() const { return kind_; }

private:
    ReductionFailure kind_;
};

// Contract a leaf component onto its neighbour: its marked points become one
// coincidence class at the former node. Throws ReductionError when that class
// violates the coincidence bound under the given weights.
StableCurveConfig contract_tail(const StableCurveConfig& cfg, int component, const std::vector<EpsValue>& weights);

// Contracts unstable components (leaves first, lowest index first; then
// point-free bridges) until the configuration is stable for to.
StableCurveConfig reduction_image(const StableCurveConfig& cfg, const std::vector<EpsValue>& from,
                                  const std::vector<EpsValue>& to);

struct Census {
    long type_a = 0;  // pair collisions
    long type_b = 0;  // balanced one-node splittings
};

Census codim1_strata_census(int n);

std::vector<EpsValue> uniform_weights(int n, const Rational& constant, const Rational& eps_coef);


}  // namespace modcheck::hassett
