#include "kummerlab/plane.hpp"

#include <set>
#include <stdexcept>

namespace kummerlab {

namespace {

TangencyCertificate make_tangency_certificate(const KummerPlaneConfig& cfg, int i) {
    // Parametrize L_i by s -> (1 : s : 2 l s - l^2) (the line's point at
    // infinity, (0 : 1 : 2 l), is never on the conic since the conic meets
    // x0 = 0 only at (0 : 0 : 1)). Restricting x1^2 - x0 x2:
    //   s^2 - (2 l s - l^2) = (s - l)^2.
    const Fp& l = cfg.lambda[static_cast<size_t>(i)];
    const Fp one(1, cfg.p);
    const Fp two = one + one;

    TangencyCertificate cert;
    cert.line = i;
    cert.contact = ProjPoint{one, l, l * l};
    cert.restriction = {l * l, -(two * l), one}; // ascending in the parameter
    // double root at s = l: value and derivative vanish, leading coeff nonzero
    Fp value = cert.restriction[0] + cert.restriction[1] * l + cert.restriction[2] * l * l;
    Fp deriv = cert.restriction[1] + two * cert.restriction[2] * l;
    cert.double_root = value.is_zero() && deriv.is_zero() && !cert.restriction[2].is_zero();
    return cert;
}

} // namespace

ProjPoint ProjPoint::normalized() const {
    require_invariant(!(x0.is_zero() && x1.is_zero() && x2.is_zero()),
                      "projective point has a nonzero coordinate");
    Fp s = !x0.is_zero() ? x0 : (!x1.is_zero() ? x1 : x2);
    Fp inv = inverse(s);
    return ProjPoint{x0 * inv, x1 * inv, x2 * inv};
}

WeierstrassSet make_weierstrass_set(uint32_t p, const std::array<int64_t, 6>& values) {
    validate_odd_prime(p);
    WeierstrassSet w;
    w.p = p;
    for (size_t i = 0; i < 6; ++i) w.lambda[i] = Fp::make(values[i], p);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            if (w.lambda[i] == w.lambda[j])
                throw std::invalid_argument("Weierstrass values must be pairwise distinct");
    return w;
}

KummerPlaneConfig build_plane(const WeierstrassSet& w) {
    KummerPlaneConfig cfg;
    cfg.p = w.p;
    cfg.lambda = w.lambda;

    const Fp one(1, w.p);
    const Fp two = one + one;
    const Fp half = inverse(two);

    for (int i = 0; i < 6; ++i) {
        const Fp& l = w.lambda[i];
        cfg.lines[i] = LinearForm{l * l, -(two * l), one};
    }
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            const Fp &li = w.lambda[i], &lj = w.lambda[j];
            cfg.points.push_back(PlanePoint{i, j, ProjPoint{one, (li + lj) * half, li * lj}});
        }
    }

    // pairwise-distinct check; in this coordinate model distinct lambdas make
    // coincidences impossible, but the flag is part of the contract
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (const auto& pt : cfg.points) {
        ProjPoint n = pt.q.normalized();
        if (!seen.insert({n.x1.v, n.x2.v}).second) cfg.degenerate = true;
    }

    // internal verification: incidence and tangency
    for (const auto& pt : cfg.points) {
        require_invariant(cfg.lines[pt.i].eval(pt.q).is_zero(), "q_ij lies on L_i");
        require_invariant(cfg.lines[pt.j].eval(pt.q).is_zero(), "q_ij lies on L_j");
    }
    for (int i = 0; i < 6; ++i)
        require_invariant(make_tangency_certificate(cfg, i).double_root,
                          "L_i tangent to the conic");
    return cfg;
}

const PlanePoint& point_of_pair(const KummerPlaneConfig& cfg, int i, int j) {
    for (const auto& pt : cfg.points)
        if (pt.i == i && pt.j == j) return pt;
    throw std::invalid_argument("no such point pair");
}

std::vector<IncidenceRow> incidence_report(const KummerPlaneConfig& cfg) {
    std::vector<IncidenceRow> rows;
    rows.reserve(cfg.points.size());
    for (const auto& pt : cfg.points) {
        IncidenceRow r{pt.i, pt.j, {}};
        for (int k = 0; k < 6; ++k)
            if (cfg.lines[k].eval(pt.q).is_zero()) r.lines_through.push_back(k);
        rows.push_back(std::move(r));
    }
    return rows;
}

TangencyCertificate tangency_certificate(const KummerPlaneConfig& cfg, int i) {
    if (i < 0 || i >= 6) throw std::invalid_argument("line index out of range");
    return make_tangency_certificate(cfg, i);
}

std::array<Fp, 6> lambdas_from_branch_points(const std::vector<Fp>& finite_roots,
                                             bool root_at_infinity) {
    const size_t need = root_at_infinity ? 5 : 6;
    if (finite_roots.size() != need)
        throw std::invalid_argument("expected " + std::to_string(need) + " finite branch points");
    const uint32_t p = finite_roots.at(0).p;

    std::array<Fp, 6> out;
    if (!root_at_infinity) {
        for (size_t i = 0; i < 6; ++i) out[i] = finite_roots[i];
        return out;
    }
    // x -> 1/(x - a) for any a distinct from all roots; infinity goes to 0
    for (uint32_t av = 0; av < p; ++av) {
        Fp a(av, p);
        bool hits_root = false;
        for (const Fp& r : finite_roots)
            if (r == a) { hits_root = true; break; }
        if (hits_root) continue;
        for (size_t i = 0; i < 5; ++i) out[i] = inverse(finite_roots[i] - a);
        out[5] = Fp(0, p);
        return out;
    }
    throw std::invalid_argument("no admissible Moebius center: p too small for 6 branch points");
}

} // namespace kummerlab
