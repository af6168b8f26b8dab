#pragma once

#include "modcheck/exact.hpp"
#include "modcheck/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modcheck::cubic {

using exact::EpsValue;
using exact::Rational;
using poly::Ideal;
using poly::Poly;

using Point = std::array<Rational, 4>;  // homogeneous coordinates in P^3
using Point2 = std::array<Rational, 3>; // homogeneous coordinates in P^2

struct NarukiParams {
    Rational lambda = 0;
    Rational mu = 0;
    Rational nu = 0;
    Rational rho = 0;
};

// Parameter symbols lambda, mu, nu, rho are variables x4..x7 of the symbolic family.
Poly parse_param_poly(const std::string& text);
Poly specialize(const Poly& symbolic, const NarukiParams& p);

Poly naruki_cubic_symbolic();
Poly naruki_cubic(const NarukiParams& p);

enum class Tritangent { PComma, Theta };
Tritangent parse_tritangent(const std::string& name);  // "(p,)" or "(theta)"
std::string tritangent_name(Tritangent t);
Poly tritangent_symbolic(Tritangent t);
Poly tritangent_equation(Tritangent t, const NarukiParams& p);
// rho -> 0 limit of the displayed tritangent
Poly tritangent_limit(Tritangent t, const NarukiParams& p);

// Point normalised so the first nonzero coordinate is 1; throws on the zero vector.
Point normalize(const Point& p);
std::string point_string(const Point& p);
bool same_point(const Point& a, const Point& b);

struct Line3 {
    Poly form1, form2;  // independent linear forms
    Point p, q;         // two distinct points spanning the line

    static Line3 from_forms(const Poly& f1, const Poly& f2);
    static Line3 through(const Point& a, const Point& b);
    bool contains(const Point& x) const;
    bool consistent() const;  // both points annihilate both forms
    bool same_as(const Line3& o) const;
    bool lies_on(const Poly& surface) const;
};

// Intersection of two lines: a point, nothing (skew) or the whole line (equal).
std::optional<Point> intersect(const Line3& a, const Line3& b);

Rational evaluate_form(const Poly& f, const Point& x);

// Points A_i, B_j, C_k (index 1..3) for given lambda, mu, nu.
Point point_a(int i, const NarukiParams& p);
Point point_b(int j, const NarukiParams& p);
Point point_c(int k, const NarukiParams& p);

struct LimitLine {
    std::string label;  // e.g. "B1C2"
    int plane;          // 0, 1, 2: x_plane = 0
    std::string form_text;  // in-plane equation as printed
    Line3 line;
    std::array<Point, 2> defining_points;
};

// Nine lines per plane H0, H1, H2 with the printed in-plane equations.
std::vector<LimitLine> limit_lines(const NarukiParams& p);

// Cayley label -> spanning-point label of the rho -> 0 limit ("a1" -> "B1C1").
const std::vector<std::pair<std::string, std::string>>& cayley_limit_table();

struct TritangentTriple {
    std::string cayley;    // e.g. "(w)"
    std::string schlafli;  // e.g. "(16)"
    std::array<std::string, 3> lines;
};
const std::vector<TritangentTriple>& tritangent_partition();
std::vector<std::string> schlafli_labels();  // a1..a6, b1..b6, c12..c56

enum class Stratum { Smooth, A1, A1Sq, A1Cube, A1Four, N, A1N, A1SqN, A1CubeN };
std::string stratum_name(Stratum s);
Stratum parse_stratum(const std::string& name);
const std::vector<Stratum>& all_strata();
bool is_three_planes(Stratum s);

enum class SurfaceKind { IrreducibleCubic, ThreePlanes };

struct WeightedLine {
    std::string label;
    Line3 line;
    int multiplicity = 1;
    int plane = -1;  // ThreePlanes only
};

struct PairConfig {
    Stratum stratum = Stratum::Smooth;
    SurfaceKind kind = SurfaceKind::IrreducibleCubic;
    Poly surface;
    std::vector<Point> singular_points;  // A1 points
    std::vector<WeightedLine> lines;
    EpsValue coefficient{Rational(1, 9), 1};

    int multiplicity_sum() const;
    std::map<int, int> multiplicity_census() const;  // multiplicity -> number of lines
};

// Default parameters used when a stratum is requested without explicit values.
NarukiParams default_params(Stratum s);

class StratumError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

PairConfig stratum_config(Stratum s, const NarukiParams& p);
PairConfig stratum_config(Stratum s);

// Smooth cubic as the blow-up of P^2 in six points; lines labelled a_i, b_i, c_ij.
struct BlowUpModel {
    std::array<Point2, 6> points;
    std::array<Poly, 4> cubics;  // basis of cubics through the points (variables x0..x2)
    Poly surface;
    std::map<std::string, Line3> lines;
};
BlowUpModel blow_up_model(const std::array<Point2, 6>& points);
std::array<Point2, 6> default_six_points();
PairConfig smooth_config(const std::array<Point2, 6>& points);

struct LCEntry {
    Point point;
    std::vector<std::string> branches;
    std::vector<EpsValue> coefficients;
    EpsValue sum;
    EpsValue discrepancy;
    bool singular = false;  // routed through the A1 rule
    bool ok = true;
    std::string note;
};

LCEntry lc_at_smooth_point(const std::vector<EpsValue>& coeffs);
LCEntry lc_at_A1(const std::vector<EpsValue>& coeffs);

struct StabilityReport {
    bool stable = false;
    bool census_ok = false;
    bool lc_ok = false;
    bool ample_ok = false;
    int multiplicity_sum = 0;
    std::vector<int> plane_sums;          // ThreePlanes
    std::vector<EpsValue> ampleness;      // H-coefficient of K + cB (one per plane for ThreePlanes)
    std::vector<LCEntry> lc_points;       // points with at least two branches, and all A1 points
    std::vector<int> multiple_points;     // per plane: points with >= 3 branches (ThreePlanes)
    EpsValue worst_sum;
    std::vector<std::string> failures;
};

StabilityReport check_stable_pair(const PairConfig& cfg);

// Ideals as in the flatness scripts: the (A1^3,N) limit lines and the Cayley configuration.
Ideal config_ideal(const PairConfig& cfg);
Ideal script_ideal_three_planes();
Ideal script_ideal_cayley();
Poly cayley_cubic();
// Generic builder: intersection of ideal(plane, l^m) over the weighted lines of a ThreePlanes config.
Ideal weighted_lines_ideal(const PairConfig& cfg);
// Intersection of the ideals of the lines, ignoring multiplicities.
Ideal reduced_lines_ideal(const PairConfig& cfg);

// Cross-ratio of four distinct collinear points; basis chosen from p1, p2 or,
// with second_chart, from p3, p4.
Rational cross_ratio(const Point& p1, const Point& p2, const Point& p3, const Point& p4, bool second_chart = false);

// Singular points of the surface lying on a line (rational roots only).
std::vector<Point> singular_points_on_line(const Poly& surface, const Line3& line);
// rank of the Hessian at a point (3 for an A1 point on a cubic surface)
int hessian_rank(const Poly& surface, const Point& x);
bool is_singular_point(const Poly& surface, const Point& x);

}  // namespace modcheck::cubic
