#pragma once

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <thread>

#include "toric_ci/cayley.hpp"
#include "toric_ci/checks.hpp"
#include "toric_ci/graded.hpp"

namespace toric_ci {

enum class Method { jacobian, colon };

inline const char* to_string(Method m) {
    return m == Method::jacobian ? "jacobian" : "colon";
}

inline unsigned thread_count() {
    if (const char* env = std::getenv("TORIC_CI_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 256) return unsigned(v);
    }
    return 1;
}

// variable middle cohomology, one entry per p in [s, d]; entry p carries the
// Hodge number h^{p-s, d-p} of the primitive part
struct VarHodgeTable {
    long d = 0, s = 0;
    Method method = Method::jacobian;
    std::vector<std::size_t> entries;
    long middle_p = -1;       // where the ambient correction was subtracted
    Int middle_correction{0};
    std::size_t entry(long p) const { return entries.at(std::size_t(p - s)); }
};

// graded dimensions of the chosen quotient ring at (d+s-p) beta - beta0.
// The quotient by the ideal of partials overcounts at p = (d+s-1)/2 by the
// difference of two ambient Betti numbers; the colon ring needs no fix.
inline VarHodgeTable variable_hodge(const CayleySetup& cs, Method method) {
    VarHodgeTable t;
    t.d = long(cs.d);
    t.s = long(cs.s);
    t.method = method;
    if (t.s > t.d) return t;

    const std::size_t count = std::size_t(t.d - t.s + 1);
    t.entries.assign(count, 0);

    auto compute = [&](std::size_t i) {
        GroupElement gamma = hodge_degree(cs, t.s + long(i));
        t.entries[i] = method == Method::colon ? colon_ring_dim(cs, gamma)
                                               : jacobian_ring_dim(cs, gamma);
    };
    unsigned workers = std::min<unsigned>(thread_count(), unsigned(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) compute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    try {
                        compute(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    if (method == Method::jacobian && (t.d + t.s - 1) % 2 == 0) {
        long mid = (t.d + t.s - 1) / 2;
        if (mid >= t.s && mid <= t.d) {
            IntVec betti = toric_betti(cs.base);
            Int corr = betti.at(std::size_t(t.d + t.s - 1));
            if (t.d - t.s - 1 >= 0) corr -= betti.at(std::size_t(t.d - t.s - 1));
            Int adjusted = Int(long(t.entries[std::size_t(mid - t.s)])) - corr;
            if (adjusted < 0)
                throw toric_error("NegativeEntry",
                                  "entry at p = " + std::to_string(mid) + " would drop below zero (" +
                                      adjusted.get_str() + ") after the ambient correction");
            t.middle_p = mid;
            t.middle_correction = corr;
            t.entries[std::size_t(mid - t.s)] = adjusted.get_ui();
        }
    }
    return t;
}

struct HodgeDiamond {
    long dim = 0;                      // complex dimension of the intersection
    std::vector<std::vector<Int>> h;   // h[p][q], 0 <= p, q <= dim
};

// ambient (p,p) classes below the middle, the variable table on the middle
// antidiagonal, duality above
inline HodgeDiamond hodge_diamond(const CayleySetup& cs, const VarHodgeTable& t) {
    if (t.s > t.d)
        throw hypothesis_error("more hypersurfaces than ambient dimensions leaves nothing to assemble");
    const long m = t.d - t.s;
    HodgeDiamond dia;
    dia.dim = m;
    dia.h.assign(std::size_t(m + 1), std::vector<Int>(std::size_t(m + 1), Int(0)));
    IntVec betti = toric_betti(cs.base);

    for (long k = 0; 2 * k < m; ++k) dia.h[std::size_t(k)][std::size_t(k)] = betti[std::size_t(2 * k)];
    for (long p = t.s; p <= t.d; ++p)
        dia.h[std::size_t(p - t.s)][std::size_t(t.d - p)] = Int(long(t.entry(p)));
    if (m % 2 == 0) dia.h[std::size_t(m / 2)][std::size_t(m / 2)] += betti[std::size_t(m)];
    for (long p = 0; p <= m; ++p)
        for (long q = 0; q <= m; ++q)
            if (p + q > m) dia.h[std::size_t(p)][std::size_t(q)] = dia.h[std::size_t(m - p)][std::size_t(m - q)];
    return dia;
}

inline Int euler_characteristic(const HodgeDiamond& dia) {
    Int chi(0);
    for (long p = 0; p <= dia.dim; ++p)
        for (long q = 0; q <= dia.dim; ++q) {
            const Int& v = dia.h[std::size_t(p)][std::size_t(q)];
            chi += ((p + q) % 2 == 0) ? v : -v;
        }
    return chi;
}

// named consistency assertions on the finished numbers
inline std::vector<std::pair<std::string, bool>> structural_report(const VarHodgeTable& t,
                                                                   const HodgeDiamond& dia) {
    std::vector<std::pair<std::string, bool>> out;
    bool palindrome = true;
    for (long p = t.s; p <= t.d; ++p)
        if (t.entry(p) != t.entry(t.d + t.s - p)) palindrome = false;
    out.emplace_back("middle_row_palindromic", palindrome);

    bool conj = true;
    for (long p = 0; p <= dia.dim; ++p)
        for (long q = 0; q <= dia.dim; ++q)
            if (dia.h[std::size_t(p)][std::size_t(q)] != dia.h[std::size_t(q)][std::size_t(p)]) conj = false;
    out.emplace_back("diamond_symmetric", conj);

    if (t.s < t.d)
        out.emplace_back("connected", dia.h[0][0] == 1);
    return out;
}

struct HypothesisReport {
    SmoothVerdict quasi_smooth = SmoothVerdict::QuasiSmooth;
    bool smoothness_checked = true;  // false when the caller opted out
    std::string qs_witness;
    bool nondegenerate = false;
    std::vector<int> nd_cone, nd_subset;
    std::vector<bool> ample_each;
    std::vector<bool> in_b_each;  // membership in the irrelevant ideal

    bool all_ample() const {
        for (bool b : ample_each)
            if (!b) return false;
        return true;
    }
    bool all_in_b() const {
        for (bool b : in_b_each)
            if (!b) return false;
        return true;
    }
};

inline HypothesisReport run_checks(const CayleySetup& cs, bool skip_smoothness = false) {
    HypothesisReport rep;
    if (skip_smoothness) {
        rep.smoothness_checked = false;  // quasi-smoothness taken on faith
    } else {
        auto qs = quasi_smooth_check(cs.base, cs.fs);
        rep.quasi_smooth = qs.verdict;
        rep.qs_witness = qs.witness;
    }
    auto nd = nondegenerate_check(cs.base, cs.fs);
    rep.nondegenerate = nd.nondegenerate;
    rep.nd_cone = nd.witness_cone;
    rep.nd_subset = nd.witness_subset;
    auto irr = irrelevant_generators(cs.base);
    for (std::size_t j = 0; j < cs.s; ++j) {
        rep.ample_each.push_back(is_ample(cs.base, cs.cartier[j]));
        rep.in_b_each.push_back(in_monomial_ideal(cs.fs[j], irr));
    }
    return rep;
}

struct AnalysisOptions {
    std::optional<Method> method;     // unset picks colon when nondegenerate
    bool assume_hypotheses = false;   // push past failed checks, uncertified
    bool skip_smoothness = false;     // trust quasi-smoothness, uncertified
    bool with_diamond = true;
};

struct Analysis {
    CayleySetup cs;
    HypothesisReport hyp;
    Method method = Method::jacobian;
    bool certified = true;
    bool empty_intersection = false;
    std::optional<VarHodgeTable> table;
    std::optional<HodgeDiamond> diamond;
    std::optional<Int> euler;
    std::vector<std::pair<std::string, bool>> structure;
    std::vector<std::string> notes;
};

namespace detail {

inline std::string index_list(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

inline std::vector<std::string> failed_hypotheses(const HypothesisReport& hyp, Method method) {
    std::vector<std::string> bad;
    for (std::size_t j = 0; j < hyp.ample_each.size(); ++j)
        if (!hyp.ample_each[j]) bad.push_back("hypersurface " + std::to_string(j + 1) + " is not ample");
    if (method == Method::colon) {
        if (!hyp.nondegenerate)
            bad.push_back("system degenerates on stratum " + index_list(hyp.nd_cone) + " for subset " +
                          index_list(hyp.nd_subset));
    } else if (hyp.quasi_smooth == SmoothVerdict::NotQuasiSmooth) {
        bad.push_back("intersection is singular near " + hyp.qs_witness);
    }
    return bad;
}

}  // namespace detail

inline Analysis analyze(const Fan& fan, const std::vector<MultiPoly>& fs,
                        const AnalysisOptions& opt = {}) {
    Analysis a{build_cayley(fan, fs), {}};
    a.hyp = run_checks(a.cs, opt.skip_smoothness);
    a.method = opt.method ? *opt.method : (a.hyp.nondegenerate ? Method::colon : Method::jacobian);
    if (opt.skip_smoothness) {
        a.certified = false;
        a.notes.push_back("UNCERTIFIED: quasi-smoothness was not checked");
    }

    auto failed = detail::failed_hypotheses(a.hyp, a.method);
    if (!failed.empty()) {
        std::string what;
        for (std::size_t i = 0; i < failed.size(); ++i) what += (i ? "; " : "") + failed[i];
        if (!opt.assume_hypotheses) throw hypothesis_error(what);
        a.certified = false;
        a.notes.push_back("UNCERTIFIED: " + what);
    }

    if (a.hyp.quasi_smooth == SmoothVerdict::QuasiSmoothEmpty) {
        a.empty_intersection = true;
        a.notes.push_back("the hypersurfaces have no common point off the irrelevant locus");
        return a;
    }

    a.table = variable_hodge(a.cs, a.method);

    if (opt.with_diamond && a.cs.s <= a.cs.d) {
        if (a.hyp.all_in_b() || opt.assume_hypotheses) {
            a.diamond = hodge_diamond(a.cs, *a.table);
            a.euler = euler_characteristic(*a.diamond);
            a.structure = structural_report(*a.table, *a.diamond);
            if (!a.hyp.all_in_b()) {
                a.certified = false;
                a.notes.push_back("UNCERTIFIED: some hypersurface lies outside the irrelevant ideal");
            }
        } else {
            a.notes.push_back(
                "some hypersurface lies outside the irrelevant ideal; only the middle table is reported");
        }
    }
    return a;
}

}  // namespace toric_ci
