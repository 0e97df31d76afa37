#pragma once

#include <cassert>
#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "toric_ci/abelian.hpp"
#include "toric_ci/errors.hpp"
#include "toric_ci/fourier_motzkin.hpp"

namespace toric_ci {

// Polynomial ring over Q graded by a finitely generated abelian group.
struct RingSpec {
    AbelianGroup group;
    std::vector<std::string> names;
    std::vector<GroupElement> degrees;  // one per variable
    std::map<std::string, std::size_t> index;

    std::size_t arity() const { return names.size(); }
};

inline std::shared_ptr<const RingSpec> make_ring_spec(AbelianGroup group,
                                                      std::vector<std::string> names,
                                                      std::vector<GroupElement> degrees) {
    assert(names.size() == degrees.size());
    auto spec = std::make_shared<RingSpec>();
    spec->group = std::move(group);
    spec->names = std::move(names);
    spec->degrees = std::move(degrees);
    for (std::size_t i = 0; i < spec->names.size(); ++i) spec->index[spec->names[i]] = i;
    assert(spec->index.size() == spec->names.size());
    return spec;
}

inline GroupElement monomial_degree(const RingSpec& ring, const ExpVec& e) {
    GroupElement d = zero_element(ring.group);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) d = d + Int(e[i]) * ring.degrees[i];
    return d;
}

inline std::string monomial_to_string(const RingSpec& ring, const ExpVec& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

// Sparse polynomial with exact rational coefficients. Terms are kept in a
// map ordered lexicographically on exponent vectors; no zero coefficient is
// ever stored.
struct MultiPoly {
    std::shared_ptr<const RingSpec> ring;
    std::map<ExpVec, Rat> terms;

    explicit MultiPoly(std::shared_ptr<const RingSpec> r = nullptr) : ring(std::move(r)) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const ExpVec& e, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(e, c);
        if (!fresh) {
            it->second += c;
            it->second.canonicalize();
            if (it->second == 0) terms.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        assert(ring == o.ring);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        assert(ring == o.ring);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        assert(ring == o.ring);
        MultiPoly r(ring);
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                ExpVec e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    friend MultiPoly operator*(const Rat& c, const MultiPoly& p) {
        MultiPoly r(p.ring);
        for (const auto& [e, v] : p.terms) r.add_term(e, c * v);
        return r;
    }
    bool operator==(const MultiPoly& o) const { return terms == o.terms; }
};

inline MultiPoly monomial_poly(std::shared_ptr<const RingSpec> ring, const ExpVec& e,
                               const Rat& c = Rat(1)) {
    MultiPoly p(std::move(ring));
    p.add_term(e, c);
    return p;
}

inline MultiPoly constant_poly(std::shared_ptr<const RingSpec> ring, const Rat& c) {
    ExpVec e(ring->arity(), 0u);
    return monomial_poly(std::move(ring), e, c);
}

inline MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
    MultiPoly r(p.ring);
    for (const auto& [e, c] : p.terms) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

inline MultiPoly substitute_zero(const MultiPoly& p, std::size_t var) {
    MultiPoly r(p.ring);
    for (const auto& [e, c] : p.terms)
        if (e[var] == 0) r.add_term(e, c);
    return r;
}

inline std::string to_string(const MultiPoly& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    // leading term first: iterate the map backwards
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        Rat c = it->second;
        if (out.empty()) {
            if (sign_of(c) < 0) out += "-";
        } else {
            out += sign_of(c) < 0 ? " - " : " + ";
        }
        Rat a = abs(c);
        std::string mono = monomial_to_string(*p.ring, it->first);
        if (mono == "1") out += to_string(a);
        else if (a == 1) out += mono;
        else out += to_string(a) + "*" + mono;
    }
    return out;
}

inline GroupElement degree_of(const MultiPoly& p) {
    if (p.terms.empty()) throw toric_error("ZeroPolynomial", "the zero polynomial has no degree");
    auto it = p.terms.begin();
    GroupElement d = monomial_degree(*p.ring, it->first);
    for (++it; it != p.terms.end(); ++it) {
        GroupElement d2 = monomial_degree(*p.ring, it->first);
        if (!(d2 == d))
            throw not_homogeneous_error(
                "terms " + monomial_to_string(*p.ring, p.terms.begin()->first) + " and " +
                monomial_to_string(*p.ring, it->first) + " have different degrees");
    }
    return d;
}

namespace detail {

struct PolyParser {
    const RingSpec& ring;
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw syntax_error("column " + std::to_string(pos + 1) + ": " + msg);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos == text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return parse_int(text.substr(start, pos - start));
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos;
        auto ok = [&](char c, bool first) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                   (!first && std::isdigit(static_cast<unsigned char>(c)));
        };
        if (pos == text.size() || !ok(text[pos], true)) fail("expected a variable name");
        while (pos < text.size() && ok(text[pos], false)) ++pos;
        return text.substr(start, pos - start);
    }

    // factor: integer or fraction p/q, or var, or var^k
    void parse_factor(Rat& coeff, ExpVec& expo) {
        skip_ws();
        if (pos == text.size()) fail("expected a factor");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_number();
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                std::size_t denom_at = pos;
                Int den = parse_number();
                if (den == 0) {
                    pos = denom_at;
                    fail("zero denominator");
                }
                coeff *= Rat(num, den);
            } else {
                coeff *= Rat(num);
            }
            coeff.canonicalize();
            return;
        }
        std::size_t name_at = pos;
        std::string name = parse_name();
        auto it = ring.index.find(name);
        if (it == ring.index.end()) {
            pos = name_at;
            throw unknown_variable_error("column " + std::to_string(pos + 1) +
                                         ": unknown variable '" + name + "'");
        }
        unsigned k = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            Int e = parse_number();
            if (e < 0 || e > 1000000) fail("exponent out of range");
            k = unsigned(e.get_ui());
        }
        expo[it->second] += k;
    }

    void parse_term(MultiPoly& acc, int sign) {
        Rat coeff(sign);
        ExpVec expo(ring.arity(), 0u);
        parse_factor(coeff, expo);
        while (peek() == '*') {
            ++pos;
            parse_factor(coeff, expo);
        }
        acc.add_term(expo, coeff);
    }
};

}  // namespace detail

inline MultiPoly parse_polynomial(std::shared_ptr<const RingSpec> ring, const std::string& text) {
    detail::PolyParser pp{*ring, text};
    MultiPoly p(ring);
    if (pp.at_end()) pp.fail("empty polynomial");
    int sign = 1;
    if (pp.peek() == '+' || pp.peek() == '-') {
        sign = pp.peek() == '-' ? -1 : 1;
        ++pp.pos;
    }
    pp.parse_term(p, sign);
    while (!pp.at_end()) {
        char op = pp.peek();
        if (op != '+' && op != '-') pp.fail("expected '+', '-' or end of input");
        ++pp.pos;
        pp.parse_term(p, op == '-' ? -1 : 1);
    }
    return p;
}

// All exponent vectors of degree exactly gamma, in increasing lexicographic
// order. Empty when the degree is not attained. Throws UnboundedFiber when
// the grading admits a nonzero nonnegative vector of degree zero (the fiber
// polytope is then unbounded, which a complete-fan grading never allows).
inline std::vector<ExpVec> monomials_of_degree(const RingSpec& ring, const GroupElement& gamma) {
    const std::size_t k = ring.arity();
    auto sol = solve_over_group(ring.degrees, gamma);
    if (!sol) return {};
    const IntMatrix& ker = sol->kernel;
    const std::size_t q = ker.cols;

    {
        // recession direction check: K t >= 0 with K t != 0
        IneqSystem rec;
        rec.nvars = q;
        LinIneq sum;
        sum.a.assign(q, Int(0));
        for (std::size_t i = 0; i < k; ++i) {
            LinIneq r;
            r.a.resize(q);
            for (std::size_t j = 0; j < q; ++j) {
                r.a[j] = -ker(i, j);
                sum.a[j] -= ker(i, j);
            }
            r.b = 0;
            rec.rows.push_back(std::move(r));
        }
        sum.b = -1;
        rec.rows.push_back(std::move(sum));
        if (q > 0 && feasible(rec))
            throw unbounded_fiber_error("the grading admits infinitely many monomials per degree");
    }

    auto to_expvec = [&](const IntVec& e) {
        ExpVec v(k);
        for (std::size_t i = 0; i < k; ++i) {
            assert(e[i] >= 0 && e[i].fits_uint_p());
            v[i] = unsigned(e[i].get_ui());
        }
        return v;
    };

    std::vector<ExpVec> out;
    if (q == 0) {
        bool ok = true;
        for (const auto& x : sol->particular)
            if (x < 0) ok = false;
        if (ok) out.push_back(to_expvec(sol->particular));
        return out;
    }

    // e = particular + K t >= 0, i.e. (-K) t <= particular
    std::vector<IneqSystem> chain(q + 1);
    chain[q].nvars = q;
    for (std::size_t i = 0; i < k; ++i) {
        LinIneq r;
        r.a.resize(q);
        for (std::size_t j = 0; j < q; ++j) r.a[j] = -ker(i, j);
        r.b = sol->particular[i];
        chain[q].rows.push_back(std::move(r));
    }
    for (std::size_t lvl = q; lvl > 1; --lvl) chain[lvl - 1] = project_last(chain[lvl]);
    if (!feasible(chain[1])) return out;

    IntVec t(q, Int(0));
    IntVec e(k);
    auto dfs = [&](auto&& self, std::size_t lvl) -> void {
        IntVec prefix(t.begin(), t.begin() + (lvl - 1));
        VarRange r = last_var_range(chain[lvl], prefix);
        if (!r.lo || !r.hi)
            throw unbounded_fiber_error("unbounded enumeration level");
        for (Int v = *r.lo; v <= *r.hi; ++v) {
            t[lvl - 1] = v;
            if (lvl == q) {
                for (std::size_t i = 0; i < k; ++i) {
                    e[i] = sol->particular[i];
                    for (std::size_t j = 0; j < q; ++j) e[i] += ker(i, j) * t[j];
                }
                out.push_back(to_expvec(e));
            } else {
                self(self, lvl + 1);
            }
        }
    };
    dfs(dfs, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Membership in a monomial ideal: every term divisible by some generator.
inline bool in_monomial_ideal(const MultiPoly& p, const std::vector<ExpVec>& gens) {
    for (const auto& [e, c] : p.terms) {
        bool divisible = false;
        for (const auto& g : gens) {
            bool ok = true;
            for (std::size_t i = 0; i < g.size() && ok; ++i)
                if (g[i] > e[i]) ok = false;
            if (ok) {
                divisible = true;
                break;
            }
        }
        if (!divisible) return false;
    }
    return true;
}

}  // namespace toric_ci
