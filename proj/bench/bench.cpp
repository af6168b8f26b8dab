// Serial reference kernels against their OpenMP versions.
#include "modcheck/cubic.hpp"
#include "modcheck/poly.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace modcheck;

namespace {

double seconds(const std::function<void()>& f, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
              << serial << std::setw(10) << parallel << std::setw(8) << std::setprecision(2) << serial / parallel
              << (agree ? "  same" : "  DIFFERENT") << "\n";
}

// t*I + (1-t)*J where I, J are the ideals of two halves of the 27 lines on a smooth cubic
poly::Ideal elimination_ideal() {
    auto cfg = cubic::stratum_config(cubic::Stratum::Smooth);
    auto half = cfg;
    half.lines.resize(13);
    auto rest = cfg;
    rest.lines.erase(rest.lines.begin(), rest.lines.begin() + 13);
    auto a = cubic::reduced_lines_ideal(half), b = cubic::reduced_lines_ideal(rest);
    poly::Ideal out;
    out.nvars = 5;
    const poly::Poly t = poly::Poly::var(4);
    for (const auto& g : a.generators) out.generators.push_back(t * g);
    for (const auto& g : b.generators) out.generators.push_back((poly::Poly(1) - t) * g);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modcheck_bench"};
    bool quick = false;
    int reps = 3, degree = 40;
    app.add_flag("--quick", quick, "one repetition, smaller degrees");
    app.add_option("--reps", reps)->check(CLI::PositiveNumber);
    app.add_option("--degree", degree, "degree for standard monomial counting")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    if (quick) {
        reps = 1;
        degree = 16;
    }
    std::cout << "threads: " << omp_get_max_threads() << "\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
              << "parallel" << std::setw(8) << "ratio" << "\n";

    const poly::MonomialOrder grevlex{poly::OrderKind::Grevlex, 4};
    bool all_agree = true;
    struct Case {
        std::string name;
        poly::Ideal ideal;
    };
    std::vector<Case> cases = {{"buchberger three-planes", cubic::script_ideal_three_planes()},
                               {"buchberger cayley", cubic::script_ideal_cayley()}};
    if (!quick) {
        cases.push_back({"elimination step, 27 lines", elimination_ideal()});
        cases.push_back({"buchberger jacobian (2,3,5,7)", [] {
                             poly::Ideal j;
                             auto f = cubic::naruki_cubic({2, 3, 5, 7});
                             j.generators.push_back(f);
                             for (int i = 0; i < 4; ++i) j.generators.push_back(f.derivative(i));
                             return j;
                         }()});
    }
    const poly::MonomialOrder elim{poly::OrderKind::Elimination, 5};
    for (const auto& c : cases) {
        poly::GroebnerBasis a, b;
        const auto& ord = c.ideal.nvars == 5 ? elim : grevlex;
        double s = seconds([&] { a = poly::buchberger(c.ideal, ord); }, reps);
        double p = seconds([&] { b = poly::buchberger_parallel(c.ideal, ord); }, reps);
        bool agree = a.basis == b.basis;
        all_agree = all_agree && agree;
        row(c.name, s, p, agree);
    }

    auto gb = poly::buchberger(cubic::script_ideal_three_planes(), grevlex);
    auto lead = gb.leading_monomials();
    long x = 0, y = 0;
    double s = seconds([&] { x = poly::count_standard_monomials(lead, 4, degree); }, reps);
    double p = seconds([&] { y = poly::count_standard_monomials_parallel(lead, 4, degree); }, reps);
    all_agree = all_agree && x == y;
    row("standard monomials deg " + std::to_string(degree), s, p, x == y);
    return all_agree ? 0 : 1;
}
