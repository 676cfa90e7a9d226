// Exact sparse polynomial arithmetic over Z, specialized to the lex orders
// used by polyomino ideals: inner 2-minors, S-polynomials, deterministic
// reduction, Buchberger's algorithm, reduced bases and initial ideals.
//
// Variables are vertices of a polyomino; a VariableOrder ranks them
// (rank 0 = greatest). Monomials store (rank, exponent) factors sorted by
// rank so a lex comparison is a single linear walk.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "polyalg/geometry.hpp"

namespace polyalg {

// Stable small-integer ids for the vertices of one polyomino.
class VertexTable {
public:
    explicit VertexTable(const std::set<Point>& vs) {
        points_.assign(vs.begin(), vs.end());
        for (int i = 0; i < static_cast<int>(points_.size()); ++i) index_[points_[i]] = i;
    }
    int id(Point p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex");
        return it->second;
    }
    Point point(int id) const { return points_.at(static_cast<size_t>(id)); }
    int size() const { return static_cast<int>(points_.size()); }

private:
    std::vector<Point> points_;
    std::map<Point, int> index_;
};

// Total order on variables; ranked[0] is the greatest variable.
struct VariableOrder {
    std::vector<int> ranked;
    std::vector<int> rank_of;

    static VariableOrder from_ranked(std::vector<int> ranked) {
        VariableOrder o;
        o.rank_of.assign(ranked.size(), -1);
        for (int r = 0; r < static_cast<int>(ranked.size()); ++r) {
            assert(o.rank_of[ranked[r]] == -1);
            o.rank_of[ranked[r]] = r;
        }
        o.ranked = std::move(ranked);
        return o;
    }
    int rank(int var) const { return rank_of.at(static_cast<size_t>(var)); }
    int size() const { return static_cast<int>(ranked.size()); }
};

// Monomial as sparse factors (rank, exponent), sorted by rank ascending.
// The rank is relative to one fixed VariableOrder per computation.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    static Monomial one() { return {}; }
    static Monomial var(int rank, int exp = 1) {
        Monomial m;
        if (exp > 0) m.factors.push_back({rank, exp});
        return m;
    }
    static Monomial quadratic(int rank_a, int rank_b) {
        if (rank_a == rank_b) return var(rank_a, 2);
        Monomial m;
        m.factors.push_back({std::min(rank_a, rank_b), 1});
        m.factors.push_back({std::max(rank_a, rank_b), 1});
        return m;
    }

    bool is_one() const { return factors.empty(); }
    int degree() const {
        int d = 0;
        for (auto [r, e] : factors) d += e;
        return d;
    }
    bool squarefree() const {
        for (auto [r, e] : factors)
            if (e > 1) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        size_t i = 0, j = 0;
        while (i < a.factors.size() || j < b.factors.size()) {
            if (j == b.factors.size() ||
                (i < a.factors.size() && a.factors[i].first < b.factors[j].first))
                out.factors.push_back(a.factors[i++]);
            else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first)
                out.factors.push_back(b.factors[j++]);
            else {
                out.factors.push_back({a.factors[i].first, a.factors[i].second + b.factors[j].second});
                ++i, ++j;
            }
        }
        return out;
    }

    bool divides(const Monomial& m) const {
        size_t j = 0;
        for (auto [r, e] : factors) {
            while (j < m.factors.size() && m.factors[j].first < r) ++j;
            if (j == m.factors.size() || m.factors[j].first != r || m.factors[j].second < e)
                return false;
        }
        return true;
    }

    // this / d, assuming d divides this
    Monomial divided_by(const Monomial& d) const {
        Monomial out;
        size_t j = 0;
        for (auto [r, e] : factors) {
            int sub = 0;
            if (j < d.factors.size() && d.factors[j].first == r) sub = d.factors[j++].second;
            if (e - sub > 0) out.factors.push_back({r, e - sub});
        }
        assert(j == d.factors.size());
        return out;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out;
        size_t i = 0, j = 0;
        while (i < a.factors.size() || j < b.factors.size()) {
            if (j == b.factors.size() ||
                (i < a.factors.size() && a.factors[i].first < b.factors[j].first))
                out.factors.push_back(a.factors[i++]);
            else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first)
                out.factors.push_back(b.factors[j++]);
            else {
                out.factors.push_back(
                    {a.factors[i].first, std::max(a.factors[i].second, b.factors[j].second)});
                ++i, ++j;
            }
        }
        return out;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        size_t i = 0, j = 0;
        while (i < a.factors.size() && j < b.factors.size()) {
            if (a.factors[i].first < b.factors[j].first) ++i;
            else if (b.factors[j].first < a.factors[i].first) ++j;
            else return false;
        }
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }

    // lex order on exponent vectors read along the ranking
    friend bool lex_less(const Monomial& a, const Monomial& b) {
        size_t i = 0, j = 0;
        while (i < a.factors.size() && j < b.factors.size()) {
            if (a.factors[i].first < b.factors[j].first) return false;  // a has the bigger var
            if (b.factors[j].first < a.factors[i].first) return true;
            if (a.factors[i].second != b.factors[j].second)
                return a.factors[i].second < b.factors[j].second;
            ++i, ++j;
        }
        return i == a.factors.size() && j < b.factors.size();
    }
};

inline bool lex_greater(const Monomial& a, const Monomial& b) { return lex_less(b, a); }

using Coeff = mpz_class;

// Terms sorted strictly descending in lex; no zero coefficients.
struct Polynomial {
    std::vector<std::pair<Monomial, Coeff>> terms;

    static Polynomial zero() { return {}; }
    static Polynomial from_terms(std::vector<std::pair<Monomial, Coeff>> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const auto& s, const auto& t) { return lex_greater(s.first, t.first); });
        Polynomial p;
        for (auto& [m, c] : raw) {
            if (!p.terms.empty() && p.terms.back().first == m)
                p.terms.back().second += c;
            else
                p.terms.push_back({m, c});
            if (p.terms.back().second == 0) p.terms.pop_back();
        }
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    const Monomial& lead_monomial() const { return terms.front().first; }
    const Coeff& lead_coeff() const { return terms.front().second; }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        size_t i = 0, j = 0;
        while (i < a.terms.size() || j < b.terms.size()) {
            if (j == b.terms.size() ||
                (i < a.terms.size() && lex_greater(a.terms[i].first, b.terms[j].first)))
                out.terms.push_back(a.terms[i++]);
            else if (i == a.terms.size() || lex_greater(b.terms[j].first, a.terms[i].first)) {
                out.terms.push_back({b.terms[j].first, -b.terms[j].second});
                ++j;
            } else {
                Coeff c = a.terms[i].second - b.terms[j].second;
                if (c != 0) out.terms.push_back({a.terms[i].first, std::move(c)});
                ++i, ++j;
            }
        }
        return out;
    }

    // p * (m, c)
    Polynomial scaled(const Monomial& m, const Coeff& c) const {
        Polynomial out;
        out.terms.reserve(terms.size());
        for (const auto& [tm, tc] : terms) out.terms.push_back({tm * m, tc * c});
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms == b.terms; }
};

// Two-term view used for generators and basis elements.
struct Binomial {
    Monomial lead, trail;
    Coeff lead_coeff, trail_coeff;

    Polynomial poly() const {
        Polynomial p;
        p.terms = {{lead, lead_coeff}, {trail, trail_coeff}};
        return p;
    }
    static std::optional<Binomial> from_poly(const Polynomial& p) {
        if (p.terms.size() != 2) return std::nullopt;
        return Binomial{p.terms[0].first, p.terms[1].first, p.terms[0].second, p.terms[1].second};
    }
};

// Inner 2-minor as an order-free descriptor: the generator is
// x_a x_b - x_c x_d with {a,b} diagonal and {c,d} anti-diagonal corners.
struct GeneratorQuad {
    Interval interval;
    std::array<Point, 2> diagonal;
    std::array<Point, 2> anti_diagonal;
};

inline std::vector<GeneratorQuad> inner_two_minors(const Polyomino& P) {
    std::vector<GeneratorQuad> out;
    for (const Interval& iv : P.inner_intervals())
        out.push_back({iv, iv.diagonal(), iv.anti_diagonal()});
    return out;
}

// Orient a quad under the given order: lead = the lex-greater product.
inline Binomial to_binomial(const GeneratorQuad& q, const VertexTable& vt,
                            const VariableOrder& ord) {
    Monomial diag = Monomial::quadratic(ord.rank(vt.id(q.diagonal[0])), ord.rank(vt.id(q.diagonal[1])));
    Monomial anti = Monomial::quadratic(ord.rank(vt.id(q.anti_diagonal[0])),
                                        ord.rank(vt.id(q.anti_diagonal[1])));
    if (lex_greater(diag, anti)) return {diag, anti, 1, -1};
    return {anti, diag, 1, -1};
}

inline std::vector<Binomial> oriented_generators(const Polyomino& P, const VertexTable& vt,
                                                 const VariableOrder& ord) {
    std::vector<Binomial> gens;
    for (const GeneratorQuad& q : inner_two_minors(P)) gens.push_back(to_binomial(q, vt, ord));
    return gens;
}

// Standard S-polynomial. With unit lead coefficients the result stays in Z.
inline Polynomial spoly(const Binomial& f, const Binomial& g) {
    Monomial l = lcm(f.lead, g.lead);
    Polynomial pf = f.poly().scaled(l.divided_by(f.lead), g.lead_coeff);
    Polynomial pg = g.poly().scaled(l.divided_by(g.lead), f.lead_coeff);
    return pf - pg;
}

// Normal form of p against the basis: repeatedly cancels the greatest
// reducible term using the first matching basis element. Deterministic;
// requires unit lead coefficients on the basis.
inline Polynomial reduce(Polynomial p, const std::vector<Binomial>& basis) {
    for (const Binomial& b : basis) assert(b.lead_coeff == 1 || b.lead_coeff == -1);
    size_t start = 0;  // terms above start are in normal form
    while (start < p.terms.size()) {
        bool reduced = false;
        for (const Binomial& b : basis) {
            if (!b.lead.divides(p.terms[start].first)) continue;
            Monomial q = p.terms[start].first.divided_by(b.lead);
            Coeff c = p.terms[start].second;
            if (b.lead_coeff == -1) c = -c;
            p = p - b.poly().scaled(q, c);
            reduced = true;
            break;
        }
        if (!reduced) ++start;
    }
    return p;
}

struct BuchbergerOptions {
    long pair_budget = 1'000'000;
};

namespace detail {

struct PairKey {
    int degree;
    Monomial l;
    size_t i, j;
};

inline bool pair_key_less(const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (!(a.l == b.l)) return lex_less(a.l, b.l);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

inline Binomial monic(Binomial b) {
    if (b.lead_coeff < 0) {
        b.lead_coeff = -b.lead_coeff;
        b.trail_coeff = -b.trail_coeff;
    }
    return b;
}

}  // namespace detail

// True iff every S-pair of gens reduces to zero against gens as given.
inline bool is_groebner(const std::vector<Binomial>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!reduce(spoly(gens[i], gens[j]), gens).is_zero()) return false;
    return true;
}

// Buchberger with the normal selection strategy (least lcm degree first,
// lex tie-break), first criterion, and a final inter-reduction yielding the
// unique reduced basis with +1 lead coefficients.
inline std::vector<Binomial> buchberger(std::vector<Binomial> basis,
                                        const BuchbergerOptions& opt = {}) {
    for (Binomial& b : basis) b = detail::monic(b);
    std::vector<detail::PairKey> queue;
    auto push_pairs = [&](size_t upto) {
        for (size_t i = 0; i < upto; ++i) {
            Monomial l = lcm(basis[i].lead, basis[upto].lead);
            queue.push_back({l.degree(), l, i, upto});
        }
    };
    for (size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    long processed = 0;
    std::set<std::pair<size_t, size_t>> done;
    while (!queue.empty()) {
        if (++processed > opt.pair_budget)
            throw BudgetExceededError("buchberger pair budget exceeded");
        auto it = std::min_element(queue.begin(), queue.end(), detail::pair_key_less);
        detail::PairKey key = *it;
        queue.erase(it);
        done.insert({key.i, key.j});
        if (coprime(basis[key.i].lead, basis[key.j].lead)) continue;
        // chain criterion: some k with lm_k | lcm and both subpairs done
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == key.i || k == key.j) continue;
            if (!basis[k].lead.divides(key.l)) continue;
            auto sub = [&](size_t a, size_t b) {
                return done.count({std::min(a, b), std::max(a, b)}) > 0;
            };
            if (sub(key.i, k) && sub(key.j, k)) chained = true;
        }
        if (chained) continue;
        Polynomial r = reduce(spoly(basis[key.i], basis[key.j]), basis);
        if (r.is_zero()) continue;
        auto nb = Binomial::from_poly(r);
        if (!nb)
            throw std::logic_error("binomial ideal reduction produced a non-binomial remainder");
        basis.push_back(detail::monic(*nb));
        push_pairs(basis.size() - 1);
    }

    // inter-reduce: drop elements whose lead is divisible by another lead,
    // then put every tail in normal form
    std::vector<Binomial> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lead.divides(basis[i].lead) && !(basis[i].lead == basis[j].lead))
                redundant = true;
            if (basis[i].lead == basis[j].lead && j < i) redundant = true;
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Binomial> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        Polynomial nf = reduce(reduced[i].poly(), others);
        if (nf.is_zero() || nf.terms.size() != 2)
            throw std::logic_error("inter-reduction of a reduced basis element degenerated");
        reduced[i] = detail::monic(*Binomial::from_poly(nf));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Binomial& a, const Binomial& b) {
        if (!(a.lead == b.lead)) return lex_greater(a.lead, b.lead);
        return lex_greater(a.trail, b.trail);
    });
    return reduced;
}

// Minimal generators of the lead-term ideal (antichain under divisibility).
struct MonomialIdeal {
    std::vector<Monomial> min_gens;

    bool squarefree() const {
        return std::all_of(min_gens.begin(), min_gens.end(),
                           [](const Monomial& m) { return m.squarefree(); });
    }
    bool generated_in_degree(int d) const {
        return std::all_of(min_gens.begin(), min_gens.end(),
                           [d](const Monomial& m) { return m.degree() == d; });
    }
};

inline MonomialIdeal initial_ideal(const std::vector<Binomial>& gb) {
    std::vector<Monomial> leads;
    for (const Binomial& b : gb) leads.push_back(b.lead);
    std::vector<Monomial> min;
    for (size_t i = 0; i < leads.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < leads.size() && keep; ++j) {
            if (i == j) continue;
            if (leads[j].divides(leads[i]) && !(leads[i] == leads[j])) keep = false;
            if (leads[i] == leads[j] && j < i) keep = false;
        }
        if (keep) min.push_back(leads[i]);
    }
    std::sort(min.begin(), min.end(), lex_greater);
    return {std::move(min)};
}

}  // namespace polyalg
