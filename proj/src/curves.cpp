#include "kummerlab/curves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kummerlab {

namespace {

int64_t binom_i64(int n, int k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int monomial_count(int m) { return (m + 1) * (m + 2) / 2; }

template <class K>
K pow_small(const K& x, int e) {
    K acc = field_one(x);
    for (int i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

// Hasse-derivative value of order (i, j) in the affine chart at a point.
// chart = index of the coordinate equal to 1; (u, v) the other two indices.
template <class K>
K hasse_value(const std::vector<std::array<int, 3>>& monos, const std::vector<K>& coeffs,
              const std::array<K, 3>& pt, int chart, int i, int j) {
    const int u = chart == 0 ? 1 : 0;
    const int v = chart == 2 ? 1 : 2;
    K acc = field_zero(pt[0]);
    for (size_t t = 0; t < monos.size(); ++t) {
        const int eu = monos[t][static_cast<size_t>(u)];
        const int ev = monos[t][static_cast<size_t>(v)];
        if (eu < i || ev < j) continue;
        K term = small_scalar(pt[0], static_cast<uint64_t>(binom_i64(eu, i)));
        term = term * small_scalar(pt[0], static_cast<uint64_t>(binom_i64(ev, j)));
        term = term * pow_small(pt[u], eu - i) * pow_small(pt[v], ev - j);
        acc = acc + coeffs[t] * term;
    }
    return acc;
}

template <class K>
int chart_index(const std::array<K, 3>& pt) {
    if (!is_zero(pt[0])) return 0;
    if (!is_zero(pt[1])) return 1;
    require_invariant(!is_zero(pt[2]), "projective point is nonzero");
    return 2;
}

// Smallest total Hasse order with a nonvanishing derivative; 0 if off-curve.
template <class K>
int multiplicity_at_impl(const std::vector<std::array<int, 3>>& monos,
                         const std::vector<K>& coeffs, int degree, const std::array<K, 3>& pt) {
    const int chart = chart_index(pt);
    for (int order = 0; order <= degree; ++order) {
        for (int i = 0; i <= order; ++i)
            if (!is_zero(hasse_value(monos, coeffs, pt, chart, i, order - i))) return order;
    }
    require_invariant(false, "nonzero form has bounded vanishing order");
    return degree + 1;
}

// Binary forms in (s, t) as ascending powers of s; length = degree + 1.
std::vector<Fp> bf_mul(const std::vector<Fp>& a, const std::vector<Fp>& b, const Fp& zero) {
    std::vector<Fp> out(a.size() + b.size() - 1, zero);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

std::vector<Fp> bf_pow(const std::vector<Fp>& lin, int e, const Fp& zero, const Fp& one) {
    std::vector<Fp> acc{one};
    for (int i = 0; i < e; ++i) acc = bf_mul(acc, lin, zero);
    return acc;
}

// Two independent points spanning the line (kernel of the 1x3 system).
std::pair<ProjPoint, ProjPoint> span_of_line(const LinearForm& l) {
    const Fp zero = field_zero(l.a0);
    Matrix<Fp> M(1, 3, zero);
    M.at(0, 0) = l.a0;
    M.at(0, 1) = l.a1;
    M.at(0, 2) = l.a2;
    auto sol = solve_exact(M, std::vector<Fp>{zero});
    if (sol.kernel.size() != 2) throw std::invalid_argument("degenerate linear form");
    auto mk = [](const std::vector<Fp>& v) { return ProjPoint{v[0], v[1], v[2]}; };
    return {mk(sol.kernel[0]), mk(sol.kernel[1])};
}

// Splits a product of distinct monic irreducible quadratics into its factors:
// Frobenius trace scan (x + x^p is constant mod each factor), then a norm
// scan inside blocks that share a trace.
std::vector<UniPoly<Fp>> split_quadratics(const UniPoly<Fp>& split2, uint32_t p) {
    std::vector<UniPoly<Fp>> quads;
    if (split2.degree() <= 0) return quads;
    if (split2.degree() == 2) {
        quads.push_back(make_monic(split2));
        return quads;
    }
    const Fp zero(0, p), one(1, p);
    UniPoly<Fp> x(std::vector<Fp>{zero, one});
    UniPoly<Fp> sigma = poly_powmod(x, p, split2);
    UniPoly<Fp> trace = sigma + x;
    UniPoly<Fp> w = make_monic(split2);
    for (uint32_t a = 0; a < p && w.degree() > 0; ++a) {
        if (w.degree() == 2) {
            quads.push_back(w);
            w = poly_constant(one);
            break;
        }
        UniPoly<Fp> g = poly_gcd(w, poly_mod(trace - poly_constant(Fp(a, p)), w));
        if (g.degree() <= 0) continue;
        if (g.degree() == 2) {
            quads.push_back(g);
            w = divrem(w, g).first;
            continue;
        }
        // several factors share trace a; separate by the constant term
        for (uint32_t n = 0; n < p && g.degree() > 0; ++n) {
            UniPoly<Fp> cand(std::vector<Fp>{Fp(n, p), -Fp(a, p), one});
            if (divides(cand, g)) {
                quads.push_back(cand);
                g = divrem(g, cand).first;
                w = divrem(w, cand).first;
            }
        }
        require_invariant(g.degree() <= 0, "trace block fully split by norm scan");
    }
    require_invariant(w.degree() <= 0, "all quadratic factors extracted");
    return quads;
}

ProjPoint point_on_line(const ProjPoint& P, const ProjPoint& Q, const Fp& s, const Fp& t) {
    return ProjPoint{s * P.x0 + t * Q.x0, s * P.x1 + t * Q.x1, s * P.x2 + t * Q.x2}.normalized();
}

// Smoothness of a conic via the symmetric matrix; the doubled Gram matrix
// avoids halving and has the same vanishing determinant (char != 2).
bool conic_is_irreducible(const PlaneCurve& c) {
    require_invariant(c.degree == 2, "conic expected");
    const Fp two(2 % c.p, c.p);
    Fp a = two * c.coeffs[0], b = c.coeffs[1], d = c.coeffs[2];
    Fp e = two * c.coeffs[3], f = c.coeffs[4], g = two * c.coeffs[5];
    // det [[a, b, d], [b, e, f], [d, f, g]]
    Fp det = a * (e * g - f * f) - b * (b * g - f * d) + d * (b * f - e * d);
    return !det.is_zero();
}

// Trivariate form evaluation with per-point power tables; the workhorse of
// the singular-point scans.
template <class K>
K eval_form(const std::vector<std::array<int, 3>>& monos, const std::vector<K>& coeffs,
            const std::array<K, 3>& pt, int degree) {
    std::array<std::vector<K>, 3> pw;
    for (int axis = 0; axis < 3; ++axis) {
        pw[static_cast<size_t>(axis)].reserve(static_cast<size_t>(degree) + 1);
        K acc = field_one(pt[0]);
        for (int e = 0; e <= degree; ++e) {
            pw[static_cast<size_t>(axis)].push_back(acc);
            acc = acc * pt[static_cast<size_t>(axis)];
        }
    }
    K out = field_zero(pt[0]);
    for (size_t t = 0; t < monos.size(); ++t) {
        if (is_zero(coeffs[t])) continue;
        out = out + coeffs[t] * pw[0][static_cast<size_t>(monos[t][0])] *
                        pw[1][static_cast<size_t>(monos[t][1])] *
                        pw[2][static_cast<size_t>(monos[t][2])];
    }
    return out;
}

} // namespace

std::vector<std::array<int, 3>> monomials_of_degree(int m) {
    if (m < 1) throw std::invalid_argument("curve degree must be >= 1");
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<size_t>(monomial_count(m)));
    for (int e0 = m; e0 >= 0; --e0)
        for (int e1 = m - e0; e1 >= 0; --e1) out.push_back({e0, e1, m - e0 - e1});
    return out;
}

PlaneCurve normalize_curve(PlaneCurve c) {
    for (const Fp& a : c.coeffs) {
        if (!a.is_zero()) {
            Fp inv = inverse(a);
            for (Fp& x : c.coeffs) x = inv * x;
            return c;
        }
    }
    throw std::invalid_argument("plane curve is identically zero");
}

PlaneCurve make_plane_curve(uint32_t p, int degree, const std::vector<int64_t>& coeffs) {
    validate_odd_prime(p);
    if (degree < 1) throw std::invalid_argument("curve degree must be >= 1");
    if (coeffs.size() != static_cast<size_t>(monomial_count(degree)))
        throw std::invalid_argument("expected " + std::to_string(monomial_count(degree)) +
                                    " coefficients for degree " + std::to_string(degree));
    PlaneCurve c;
    c.p = p;
    c.degree = degree;
    c.coeffs.reserve(coeffs.size());
    for (int64_t x : coeffs) c.coeffs.push_back(Fp::make(x, p));
    return normalize_curve(std::move(c));
}

Fp eval_curve(const PlaneCurve& c, const ProjPoint& q) {
    auto monos = monomials_of_degree(c.degree);
    Fp acc(0, c.p);
    for (size_t t = 0; t < monos.size(); ++t) {
        Fp term = pow_small(q.x0, monos[t][0]) * pow_small(q.x1, monos[t][1]) *
                  pow_small(q.x2, monos[t][2]);
        acc = acc + c.coeffs[t] * term;
    }
    return acc;
}

PlaneCurve kummer_conic(uint32_t p) {
    // monomial order: x0^2, x0 x1, x0 x2, x1^2, x1 x2, x2^2
    return make_plane_curve(p, 2, {0, 0, -1, 1, 0, 0});
}

int multiplicity_at(const PlaneCurve& c, const ProjPoint& q) {
    auto monos = monomials_of_degree(c.degree);
    ProjPoint n = q.normalized();
    return multiplicity_at_impl<Fp>(monos, c.coeffs, c.degree, {n.x0, n.x1, n.x2});
}

std::vector<PlaneCurve> linear_system_basis(uint32_t p, int degree,
                                            const std::vector<std::pair<ProjPoint, int>>& through) {
    validate_odd_prime(p);
    if (degree < 1 || degree > 6)
        throw std::invalid_argument("linear systems supported for degree 1..6");
    auto monos = monomials_of_degree(degree);
    const Fp zero(0, p);

    size_t rows = 0;
    for (const auto& [q, mu] : through) {
        if (mu < 1) throw std::invalid_argument("point multiplicity must be >= 1");
        rows += static_cast<size_t>(mu) * (mu + 1) / 2;
    }

    std::vector<PlaneCurve> basis;
    if (rows == 0) {
        for (size_t t = 0; t < monos.size(); ++t) {
            PlaneCurve c;
            c.p = p;
            c.degree = degree;
            c.coeffs.assign(monos.size(), zero);
            c.coeffs[t] = Fp(1, p);
            basis.push_back(std::move(c));
        }
        return basis;
    }

    Matrix<Fp> M(rows, monos.size(), zero);
    size_t r = 0;
    for (const auto& [q, mu] : through) {
        ProjPoint n = q.normalized();
        std::array<Fp, 3> pt{n.x0, n.x1, n.x2};
        const int chart = chart_index(pt);
        for (int order = 0; order < mu; ++order) {
            for (int i = 0; i <= order; ++i) {
                const int j = order - i;
                for (size_t t = 0; t < monos.size(); ++t) {
                    std::vector<Fp> unit(monos.size(), zero);
                    unit[t] = Fp(1, p);
                    M.at(r, t) = hasse_value(monos, unit, pt, chart, i, j);
                }
                ++r;
            }
        }
    }
    auto sol = solve_exact(M, std::vector<Fp>(rows, zero));
    for (auto& v : sol.kernel) {
        PlaneCurve c;
        c.p = p;
        c.degree = degree;
        c.coeffs = std::move(v);
        basis.push_back(normalize_curve(std::move(c)));
    }
    return basis;
}

std::vector<PlaneCurve> linear_system_basis(const ConfigurationSpec& spec,
                                            const KummerPlaneConfig& cfg) {
    std::vector<std::pair<ProjPoint, int>> through;
    through.reserve(spec.through.size());
    for (const auto& [pair, mu] : spec.through)
        through.emplace_back(point_of_pair(cfg, pair.first, pair.second).q, mu);
    for (int j : spec.tangent_to)
        if (j < 0 || j >= 6) throw std::invalid_argument("tangency line index out of range");
    return linear_system_basis(cfg.p, spec.degree, through);
}

LineContactReport line_contacts(const PlaneCurve& c, const LinearForm& line) {
    const uint32_t p = c.p;
    const Fp zero(0, p), one(1, p);
    auto [P, Q] = span_of_line(line);
    auto monos = monomials_of_degree(c.degree);

    // restriction as a binary form in (s, t), ascending powers of s
    std::vector<Fp> form(static_cast<size_t>(c.degree) + 1, zero);
    for (size_t t = 0; t < monos.size(); ++t) {
        if (c.coeffs[t].is_zero()) continue;
        std::vector<Fp> term{one};
        const std::array<std::vector<Fp>, 3> lins = {
            std::vector<Fp>{Q.x0, P.x0}, std::vector<Fp>{Q.x1, P.x1}, std::vector<Fp>{Q.x2, P.x2}};
        for (int axis = 0; axis < 3; ++axis)
            term = bf_mul(term, bf_pow(lins[static_cast<size_t>(axis)],
                                       monos[t][static_cast<size_t>(axis)], zero, one),
                          zero);
        require_invariant(term.size() == form.size(), "restriction degree");
        for (size_t i = 0; i < form.size(); ++i) form[i] = form[i] + c.coeffs[t] * term[i];
    }

    LineContactReport rep;
    rep.total_multiplicity = c.degree;

    UniPoly<Fp> u(form);
    if (u.is_zero_poly()) {
        rep.line_is_component = true;
        return rep;
    }

    // root of the parameter at (s : t) = (1 : 0), i.e. the point P
    const int inf_mult = c.degree - u.degree();
    if (inf_mult > 0)
        rep.contacts.push_back(Contact{true, P.normalized(), {}, inf_mult});

    // tangency over the closure: a repeated root exists iff the restriction
    // is not square-free (derivative zero means p-th powers, multiplicity >= p)
    UniPoly<Fp> du = derivative(u);
    rep.tangent = inf_mult >= 2 ||
                  (u.degree() >= 1 && (du.is_zero_poly() || poly_gcd(u, du).degree() >= 1));

    // rational finite roots by scan
    UniPoly<Fp> work = u;
    for (uint32_t s0 = 0; s0 < p && work.degree() >= 1; ++s0) {
        Fp r(s0, p);
        if (!is_zero(eval(work, r))) continue;
        auto [mult, rest] = root_multiplicity(work, r);
        work = std::move(rest);
        rep.contacts.push_back(Contact{true, point_on_line(P, Q, r, one), {}, mult});
    }

    if (work.degree() >= 1) {
        // conjugate contact pairs over F_{p^2}
        const uint32_t nonsq = least_nonsquare(p);
        UniPoly<Fp> hm = make_monic(work);
        UniPoly<Fp> x(std::vector<Fp>{zero, one});
        UniPoly<Fp> sigma = poly_powmod(x, p, hm);
        UniPoly<Fp> tau = poly_powmod(sigma, p, hm); // x^(p^2) mod hm
        UniPoly<Fp> split2 = poly_gcd(hm, tau - x);

        const Fp2 one2 = Fp2::from_base(one, nonsq);
        const Fp2 half2 = Fp2::from_base(inverse(one + one), nonsq);
        std::array<Fp2, 3> P2{Fp2::from_base(P.x0, nonsq), Fp2::from_base(P.x1, nonsq),
                              Fp2::from_base(P.x2, nonsq)};
        std::array<Fp2, 3> Q2{Fp2::from_base(Q.x0, nonsq), Fp2::from_base(Q.x1, nonsq),
                              Fp2::from_base(Q.x2, nonsq)};

        UniPoly<Fp> leftover = work;
        for (const UniPoly<Fp>& quad : split_quadratics(split2, p)) {
            // multiplicity of the quadratic factor in the restriction
            int mult = 0;
            while (divides(quad, leftover)) {
                leftover = divrem(leftover, quad).first;
                ++mult;
            }
            require_invariant(mult >= 1, "detected quadratic factor divides the restriction");
            Fp s_tr = -quad.c[1];
            Fp disc = s_tr * s_tr - (one + one + one + one) * quad.c[0];
            Fp2 sq = fp2_sqrt_of_base(disc, nonsq);
            for (int sign = 0; sign < 2; ++sign) {
                Fp2 root = (Fp2::from_base(s_tr, nonsq) + (sign ? -sq : sq)) * half2;
                std::array<Fp2, 3> pt{root * P2[0] + one2 * Q2[0], root * P2[1] + one2 * Q2[1],
                                      root * P2[2] + one2 * Q2[2]};
                Contact ct;
                ct.rational = false;
                ct.point_ext = pt;
                ct.multiplicity = mult;
                rep.contacts.push_back(std::move(ct));
            }
        }
        rep.unresolved_degree = std::max(leftover.degree(), 0);
        if (leftover.degree() >= 1)
            rep.unresolved_is_square = monic_sqrt(make_monic(leftover)).has_value();
    }
    rep.split_fp2 = rep.unresolved_degree == 0;

    int accounted = rep.unresolved_degree;
    for (const auto& ct : rep.contacts) accounted += ct.multiplicity;
    require_invariant(accounted == c.degree, "contact multiplicities sum to the degree");
    return rep;
}

LineContactReport is_tangent(const PlaneCurve& c, const LinearForm& line) {
    LineContactReport rep = line_contacts(c, line);
    if (rep.line_is_component)
        throw std::invalid_argument("line is a component of the curve");
    return rep;
}

ConicSearchResult find_humbert_conic(const KummerPlaneConfig& cfg,
                                     const std::array<std::pair<int, int>, 5>& pairs,
                                     int line_index) {
    std::set<std::pair<int, int>> distinct(pairs.begin(), pairs.end());
    if (distinct.size() != 5) throw std::invalid_argument("the five points must be distinct");
    std::set<int> used;
    for (const auto& [i, j] : pairs) {
        used.insert(i);
        used.insert(j);
    }
    if (line_index < 0 || line_index >= 6)
        throw std::invalid_argument("line index out of range");
    if (used.count(line_index))
        throw std::invalid_argument("tangency line must avoid the chosen points' defining pairs");

    std::vector<std::pair<ProjPoint, int>> through;
    for (const auto& [i, j] : pairs) through.emplace_back(point_of_pair(cfg, i, j).q, 1);

    auto basis = linear_system_basis(cfg.p, 2, through);
    if (basis.size() != 1) return {std::nullopt, ConicReject::DegenerateFivePoints};
    PlaneCurve conic = basis[0];
    for (const auto& [q, mu] : through)
        require_invariant(eval_curve(conic, q).is_zero(), "conic passes through its five points");

    if (!conic_is_irreducible(conic)) return {std::nullopt, ConicReject::Reducible};

    LineContactReport rep = line_contacts(conic, cfg.lines[static_cast<size_t>(line_index)]);
    if (rep.line_is_component) return {std::nullopt, ConicReject::LineIsComponent};
    if (!rep.tangent) return {std::nullopt, ConicReject::NotTangent};
    return {std::move(conic), ConicReject::None};
}

std::vector<SearchHit> humbert_conic_scan(const KummerPlaneConfig& cfg, bool stop_after_first) {
    std::vector<SearchHit> hits;
    const int n = static_cast<int>(cfg.points.size());
    std::array<int, 5> idx{0, 1, 2, 3, 4};
    while (true) {
        std::array<std::pair<int, int>, 5> pairs;
        std::set<int> used;
        for (int t = 0; t < 5; ++t) {
            const PlanePoint& pt = cfg.points[static_cast<size_t>(idx[static_cast<size_t>(t)])];
            pairs[static_cast<size_t>(t)] = {pt.i, pt.j};
            used.insert(pt.i);
            used.insert(pt.j);
        }
        for (int line = 0; line < 6; ++line) {
            if (used.count(line)) continue;
            ConicSearchResult res = find_humbert_conic(cfg, pairs, line);
            if (res.conic) {
                hits.push_back(SearchHit{pairs, line, std::move(*res.conic)});
                if (stop_after_first) return hits;
            }
        }
        // next 5-combination of {0..n-1}
        int t = 4;
        while (t >= 0 && idx[static_cast<size_t>(t)] == n - 5 + t) --t;
        if (t < 0) break;
        ++idx[static_cast<size_t>(t)];
        for (int s = t + 1; s < 5; ++s) idx[static_cast<size_t>(s)] = idx[static_cast<size_t>(s - 1)] + 1;
    }
    return hits;
}

BwReport verify_bw_configuration(const PlaneCurve& c, const HumbertClass& h,
                                 const KummerPlaneConfig& cfg) {
    BwReport rep;
    rep.degree = c.degree;
    rep.expected_degree = expected_degree(h);
    rep.degree_ok = rep.degree == rep.expected_degree;

    for (const auto& pt : cfg.points)
        if (eval_curve(c, pt.q).is_zero()) ++rep.torsion_on_curve;
    rep.torsion_budget = torsion_budget(h);
    rep.torsion_ok = rep.torsion_on_curve == rep.torsion_budget;

    rep.even_multiplicity_ok = true;
    rep.contacts_complete = true;
    for (int i = 0; i < 6; ++i) {
        LineContactReport lr = line_contacts(c, cfg.lines[static_cast<size_t>(i)]);
        if (lr.line_is_component)
            throw std::invalid_argument("curve contains branch line " + std::to_string(i + 1));
        rep.line_total += lr.total_multiplicity;
        rep.contacts_complete = rep.contacts_complete && lr.split_fp2;

        // the torsion points on L_i are the five q_ij with i in the pair
        std::vector<ProjPoint> torsion_here;
        for (const auto& pt : cfg.points)
            if (pt.i == i || pt.j == i) torsion_here.push_back(pt.q.normalized());

        for (const auto& ct : lr.contacts) {
            bool is_torsion = false;
            if (ct.rational)
                for (const auto& tq : torsion_here)
                    if (ct.point == tq) { is_torsion = true; break; }
            if (!is_torsion && ct.multiplicity % 2 != 0) rep.even_multiplicity_ok = false;
        }
        if (!lr.unresolved_is_square) rep.even_multiplicity_ok = false;
    }
    rep.expected_line_total = line_intersection_total(h);
    rep.line_total_ok = rep.line_total == rep.expected_line_total;
    return rep;
}

RationalityReport rationality_report(const PlaneCurve& c) {
    RationalityReport rep;
    const int m = c.degree;
    rep.arithmetic_genus = (m - 1) * (m - 2) / 2;

    if (m == 1) {
        rep.rational = true;
        rep.scan_complete = true;
        return rep;
    }
    if (m == 2) {
        rep.scan_complete = true;
        if (conic_is_irreducible(c)) rep.rational = true;
        else rep.undetermined = true; // reducible conic: not an irreducible rational curve
        return rep;
    }

    const uint32_t p = c.p;
    auto monos = monomials_of_degree(m);
    const bool scan_fp = p <= 1009;
    const bool scan_fp2 = p <= 31;
    rep.scan_complete = scan_fp && scan_fp2;

    auto consider = [&](int mult, auto&& tangent_cone_disc_is_zero) {
        if (mult < 2) return;
        if (mult > 2) {
            rep.nonnodal_singularity = true;
            return;
        }
        if (tangent_cone_disc_is_zero()) rep.nonnodal_singularity = true;
        else ++rep.nodes_found;
    };

    if (scan_fp) {
        const Fp zero(0, p), one(1, p);
        auto visit = [&](const std::array<Fp, 3>& pt) {
            if (!eval_form(monos, c.coeffs, pt, m).is_zero()) return;
            int mult = multiplicity_at_impl<Fp>(monos, c.coeffs, m, pt);
            consider(mult, [&]() {
                const int chart = chart_index(pt);
                Fp d20 = hasse_value(monos, c.coeffs, pt, chart, 2, 0);
                Fp d11 = hasse_value(monos, c.coeffs, pt, chart, 1, 1);
                Fp d02 = hasse_value(monos, c.coeffs, pt, chart, 0, 2);
                Fp four = small_scalar(zero, 4);
                return (d11 * d11 - four * d20 * d02).is_zero();
            });
        };
        for (uint32_t y = 0; y < p; ++y)
            for (uint32_t z = 0; z < p; ++z) visit({one, Fp(y, p), Fp(z, p)});
        for (uint32_t z = 0; z < p; ++z) visit({zero, one, Fp(z, p)});
        visit({zero, zero, one});
    }
    if (scan_fp2) {
        const uint32_t nonsq = least_nonsquare(p);
        std::vector<Fp2> coeffs2;
        coeffs2.reserve(c.coeffs.size());
        for (const Fp& a : c.coeffs) coeffs2.push_back(Fp2::from_base(a, nonsq));
        const Fp2 zero2 = Fp2::from_base(Fp(0, p), nonsq);
        const Fp2 one2 = Fp2::from_base(Fp(1, p), nonsq);
        std::vector<Fp2> elems;
        for (uint32_t a = 0; a < p; ++a)
            for (uint32_t b = 0; b < p; ++b) elems.push_back(Fp2(Fp(a, p), Fp(b, p), nonsq));
        auto visit = [&](const std::array<Fp2, 3>& pt) {
            // skip points already counted over F_p
            if (pt[0].im.is_zero() && pt[1].im.is_zero() && pt[2].im.is_zero()) return;
            if (!eval_form(monos, coeffs2, pt, m).is_zero()) return;
            int mult = multiplicity_at_impl<Fp2>(monos, coeffs2, m, pt);
            consider(mult, [&]() {
                const int chart = chart_index(pt);
                Fp2 d20 = hasse_value(monos, coeffs2, pt, chart, 2, 0);
                Fp2 d11 = hasse_value(monos, coeffs2, pt, chart, 1, 1);
                Fp2 d02 = hasse_value(monos, coeffs2, pt, chart, 0, 2);
                Fp2 four = small_scalar(zero2, 4);
                return (d11 * d11 - four * d20 * d02).is_zero();
            });
        };
        for (const Fp2& y : elems)
            for (const Fp2& z : elems) visit({one2, y, z});
        for (const Fp2& z : elems) visit({zero2, one2, z});
    }

    if (rep.nonnodal_singularity) {
        rep.undetermined = true;
        return rep;
    }
    if (rep.nodes_found == rep.arithmetic_genus) rep.rational = true;
    else rep.undetermined = true;
    return rep;
}

} // namespace kummerlab
