#include "modcheck/poly.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace modcheck::poly {

namespace {

struct Term {
    Monomial m;
    Rational c;
};

// Terms sorted by decreasing monomial under the working order.
struct SPoly {
    std::vector<Term> terms;

    bool zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().m; }
};

struct OrderCmp {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
};

SPoly to_sorted(const Poly& p, const MonomialOrder& ord) {
    SPoly s;
    for (const auto& [m, c] : p.terms()) s.terms.push_back({m, c});
    std::sort(s.terms.begin(), s.terms.end(), [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return s;
}

Poly to_poly(const SPoly& s) {
    Poly p;
    for (const auto& t : s.terms) p += Poly::term(t.c, t.m);
    return p;
}

void make_monic(SPoly& s) {
    if (s.zero() || s.terms.front().c == 1) return;
    Rational inv = 1 / s.terms.front().c;
    for (auto& t : s.terms) t.c *= inv;
}

// Full reduction of f by the monic polynomials basis[idx] for idx in active.
SPoly reduce(const SPoly& f, const std::vector<SPoly>& basis, const std::vector<std::size_t>& active,
             const MonomialOrder& ord) {
    std::map<Monomial, Rational, OrderCmp> work(OrderCmp{&ord});
    for (const auto& t : f.terms) work.emplace(t.m, t.c);
    SPoly out;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        Rational c = it->second;
        const SPoly* divisor = nullptr;
        for (std::size_t idx : active)
            if (basis[idx].lm().divides(m)) {
                divisor = &basis[idx];
                break;
            }
        work.erase(it);
        if (!divisor) {
            out.terms.push_back({m, c});
            continue;
        }
        Monomial q = m / divisor->lm();
        for (std::size_t k = 1; k < divisor->terms.size(); ++k) {
            const Term& t = divisor->terms[k];
            Monomial mm = t.m * q;
            auto [pos, inserted] = work.emplace(mm, -c * t.c);
            if (!inserted) {
                pos->second -= c * t.c;
                if (pos->second == 0) work.erase(pos);
            }
        }
    }
    return out;
}

SPoly s_polynomial(const SPoly& f, const SPoly& g, const MonomialOrder& ord) {
    Monomial l = f.lm().lcm(g.lm());
    Monomial qf = l / f.lm(), qg = l / g.lm();
    std::map<Monomial, Rational, OrderCmp> acc(OrderCmp{&ord});
    for (std::size_t k = 1; k < f.terms.size(); ++k) acc[f.terms[k].m * qf] += f.terms[k].c;
    for (std::size_t k = 1; k < g.terms.size(); ++k) acc[g.terms[k].m * qg] -= g.terms[k].c;
    SPoly s;
    for (auto& [m, c] : acc)
        if (c != 0) s.terms.push_back({m, c});
    return s;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
};

class Engine {
public:
    Engine(const MonomialOrder& ord, BuchbergerStats* stats) : ord_(ord), stats_(stats) {}

    void add_generators(const Ideal& ideal) {
        std::vector<SPoly> input;
        for (const auto& g : ideal.generators) {
            if (g.is_zero()) continue;
            if (g.max_var() >= ord_.nvars) throw std::invalid_argument("generator uses a variable outside the ring");
            input.push_back(to_sorted(g, ord_));
        }
        // process in increasing leading monomial for determinism
        std::sort(input.begin(), input.end(), [&](const SPoly& a, const SPoly& b) { return ord_.greater(b.lm(), a.lm()); });
        for (auto& f : input) {
            SPoly h = reduce(f, polys_, active_, ord_);
            if (h.zero()) continue;
            make_monic(h);
            update(std::move(h));
        }
    }

    void run_serial() {
        while (!pairs_.empty()) {
            Pair p = pop_pair();
            if (stats_) ++stats_->pairs_considered;
            SPoly s = s_polynomial(polys_[p.i], polys_[p.j], ord_);
            SPoly h = reduce(s, polys_, active_, ord_);
            if (stats_) ++stats_->pairs_reduced;
            if (h.zero()) {
                if (stats_) ++stats_->zero_reductions;
                continue;
            }
            make_monic(h);
            update(std::move(h));
        }
    }

    void run_parallel() {
        while (!pairs_.empty()) {
            std::vector<Pair> batch = pop_batch();
            std::vector<SPoly> reduced(batch.size());
            const std::vector<std::size_t> snapshot = active_;
            const long n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic, 1)
            for (long k = 0; k < n; ++k) {
                SPoly s = s_polynomial(polys_[batch[k].i], polys_[batch[k].j], ord_);
                reduced[k] = reduce(s, polys_, snapshot, ord_);
            }
            for (long k = 0; k < n; ++k) {
                if (stats_) {
                    ++stats_->pairs_considered;
                    ++stats_->pairs_reduced;
                }
                if (reduced[k].zero()) {
                    if (stats_) ++stats_->zero_reductions;
                    continue;
                }
                SPoly h = reduce(reduced[k], polys_, active_, ord_);
                if (h.zero()) {
                    if (stats_) ++stats_->zero_reductions;
                    continue;
                }
                make_monic(h);
                update(std::move(h));
            }
        }
    }

    GroebnerBasis finish() {
        // minimal basis is already maintained by update(); interreduce
        std::vector<SPoly> minimal;
        for (std::size_t idx : active_) minimal.push_back(polys_[idx]);
        std::vector<SPoly> result;
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<SPoly> others;
            std::vector<std::size_t> ids;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != k) {
                    ids.push_back(others.size());
                    others.push_back(minimal[j]);
                }
            SPoly tail;
            tail.terms.assign(minimal[k].terms.begin() + 1, minimal[k].terms.end());
            SPoly red = reduce(tail, others, ids, ord_);
            SPoly g;
            g.terms.push_back(minimal[k].terms.front());
            g.terms.insert(g.terms.end(), red.terms.begin(), red.terms.end());
            result.push_back(std::move(g));
        }
        std::sort(result.begin(), result.end(), [&](const SPoly& a, const SPoly& b) { return ord_.greater(b.lm(), a.lm()); });
        GroebnerBasis gb;
        gb.order = ord_;
        for (const auto& g : result) gb.basis.push_back(to_poly(g));
        return gb;
    }

private:
    // Gebauer-Moeller installation of a new basis element.
    void update(SPoly h) {
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        const Monomial hm = polys_[hi].lm();

        std::vector<Pair> cand;
        for (std::size_t g : active_) {
            Monomial l = hm.lcm(polys_[g].lm());
            cand.push_back({g, hi, l, l.degree()});
        }
        // chain criterion among the new pairs
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            const Pair& p = cand[a];
            bool coprime = hm.coprime(polys_[p.i].lm());
            bool drop = false;
            if (!coprime) {
                for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
                    if (b == a) continue;
                    if (!cand[b].lcm.divides(p.lcm)) continue;
                    // strict divisibility, or equal lcm with a tie broken by position
                    if (cand[b].lcm != p.lcm) drop = true;
                    else if (b < a) drop = true;
                }
            }
            if (!drop) kept.push_back(p);
        }
        // product criterion
        std::vector<Pair> fresh;
        for (const auto& p : kept)
            if (!hm.coprime(polys_[p.i].lm())) fresh.push_back(p);
        // prune old pairs
        std::vector<Pair> old;
        for (const auto& p : pairs_) {
            bool divides = hm.divides(p.lcm);
            bool drop = divides && hm.lcm(polys_[p.i].lm()) != p.lcm && hm.lcm(polys_[p.j].lm()) != p.lcm;
            if (!drop) old.push_back(p);
        }
        old.insert(old.end(), fresh.begin(), fresh.end());
        pairs_ = std::move(old);
        // drop basis elements made redundant by h
        std::vector<std::size_t> act;
        for (std::size_t g : active_)
            if (!hm.divides(polys_[g].lm())) act.push_back(g);
        act.push_back(hi);
        active_ = std::move(act);
    }

    bool pair_before(const Pair& a, const Pair& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.lcm != b.lcm) return ord_.greater(b.lcm, a.lcm);
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }

    Pair pop_pair() {
        auto best = pairs_.begin();
        for (auto it = pairs_.begin(); it != pairs_.end(); ++it)
            if (pair_before(*it, *best)) best = it;
        Pair p = *best;
        pairs_.erase(best);
        return p;
    }

    std::vector<Pair> pop_batch() {
        int d = pairs_.front().degree;
        for (const auto& p : pairs_) d = std::min(d, p.degree);
        std::vector<Pair> batch, rest;
        for (const auto& p : pairs_) (p.degree == d ? batch : rest).push_back(p);
        std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) { return pair_before(a, b); });
        pairs_ = std::move(rest);
        return batch;
    }

    MonomialOrder ord_;
    BuchbergerStats* stats_;
    std::vector<SPoly> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis) out.push_back(g.leading_monomial(order));
    return out;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, BuchbergerStats* stats) {
    Engine e(ord, stats);
    e.add_generators(ideal);
    e.run_serial();
    return e.finish();
}

GroebnerBasis buchberger_parallel(const Ideal& ideal, const MonomialOrder& ord, BuchbergerStats* stats) {
    Engine e(ord, stats);
    e.add_generators(ideal);
    e.run_parallel();
    return e.finish();
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    std::vector<SPoly> basis;
    std::vector<std::size_t> ids;
    for (const auto& g : gb.basis) {
        ids.push_back(basis.size());
        SPoly s = to_sorted(g, gb.order);
        make_monic(s);
        basis.push_back(std::move(s));
    }
    return to_poly(reduce(to_sorted(f, gb.order), basis, ids, gb.order));
}

bool ideal_member(const Poly& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
    for (const auto& g : a.basis)
        if (!ideal_member(g, b)) return false;
    for (const auto& g : b.basis)
        if (!ideal_member(g, a)) return false;
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("ideal_sum: different ambient rings");
    Ideal r = a;
    r.generators.insert(r.generators.end(), b.generators.begin(), b.generators.end());
    return r;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("ideal_intersect: different ambient rings");
    const int n = a.nvars;
    if (n + 1 > kMaxVars) throw std::invalid_argument("ideal_intersect: too many variables");
    Poly t = Poly::var(n);
    Ideal aux;
    aux.nvars = n + 1;
    for (const auto& f : a.generators) aux.generators.push_back(t * f);
    for (const auto& g : b.generators) aux.generators.push_back((Poly(1) - t) * g);
    GroebnerBasis gb = buchberger(aux, MonomialOrder{OrderKind::Elimination, n + 1});
    Ideal out;
    out.nvars = n;
    for (const auto& g : gb.basis)
        if (g.max_var() < n) out.generators.push_back(g);
    return out;
}

Ideal ideal_intersect(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw std::invalid_argument("ideal_intersect: empty list");
    Ideal acc = ideals.front();
    for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_intersect(acc, ideals[k]);
    return acc;
}

bool jacobian_smoothness(const Poly& f, int nvars) {
    if (f.is_zero()) throw std::invalid_argument("jacobian_smoothness: zero polynomial");
    if (!f.is_homogeneous()) throw std::invalid_argument("jacobian_smoothness: polynomial is not homogeneous");
    Ideal jac;
    jac.nvars = nvars;
    jac.generators.push_back(f);
    for (int i = 0; i < nvars; ++i) {
        Poly d = f.derivative(i);
        if (!d.is_zero()) jac.generators.push_back(d);
    }
    GroebnerBasis gb = buchberger(jac, MonomialOrder{OrderKind::Grevlex, nvars});
    auto lead = gb.leading_monomials();
    for (int i = 0; i < nvars; ++i) {
        bool pure = false;
        for (const auto& m : lead)
            if (m.exp[i] > 0 && m.degree() == m.exp[i]) pure = true;
        if (!pure) return false;
    }
    return true;
}

}  // namespace modcheck::poly
