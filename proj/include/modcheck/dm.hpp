#pragma once

#include "modcheck/exact.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modcheck::dm {

using exact::Rational;

struct WeightSystem {
    std::vector<Rational> weights;  // non-increasing

    std::size_t n() const { return weights.size(); }
    Rational sum() const;
};

class WeightParseError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exponent notation, e.g. "(1/2)(1/3)^4(1/6)". Whitespace is ignored.
WeightSystem parse_weights(const std::string& text);
// Sorts and validates a raw list (each weight in (0,1), sum 2).
WeightSystem make_weights(std::vector<Rational> weights);
std::string format_weights(const WeightSystem& ws);

enum class Verdict { Int, SigmaInt, Fails };

struct Classification {
    Verdict verdict = Verdict::Int;
    long m = 0;                                        // SigmaInt only
    std::vector<std::pair<std::size_t, std::size_t>> witnesses;  // Fails only
};

// Raised when two different equal-weight classes both need the relaxed condition.
class AmbiguousSigmaInt : public std::runtime_error {
public:
    AmbiguousSigmaInt(std::vector<Rational> classes);
    const std::vector<Rational>& class_weights() const { return classes_; }

private:
    std::vector<Rational> classes_;
};

Classification classify(const WeightSystem& ws);
std::string verdict_string(const Classification& c);

enum class Ring { Eisenstein, Gaussian };
std::string ring_name(Ring r);

struct TableRow {
    std::string notation;
    WeightSystem weights;
    Classification expected;
    Ring ring;
};

// Rows of the Eisenstein (36) and Gaussian (6) tables, in printed order.
const std::vector<TableRow>& builtin_tables();

struct RowResult {
    const TableRow* row;
    Classification got;
    bool match;
    std::string detail;
};

struct TableReport {
    std::vector<RowResult> rows;
    std::size_t matches = 0;
    bool all_match() const { return matches == rows.size(); }
    std::string to_json() const;
};

TableReport verify_tables();

// lcm of the weight denominators
exact::Integer denominator_lcm(const WeightSystem& ws);

// Splitting direction of the collision correspondence: pairing lists pairs of
// indices of the finer system (size n + pairs.size()); each pair receives the
// two halves of one coarse weight. Unpaired fine slots take the remaining
// coarse weights in order.
WeightSystem collide_embed(const WeightSystem& coarse, const std::vector<std::pair<std::size_t, std::size_t>>& pairing);
// Collision direction: each pair of equal fine weights merges into their sum.
WeightSystem collide(const WeightSystem& fine, const std::vector<std::pair<std::size_t, std::size_t>>& pairing);

}  // namespace modcheck::dm
