#include "kummerlab/jsonio.hpp"

namespace kummerlab {

json json_of_rat(const Rat& r) { return rat_to_string(r); }

std::vector<int64_t> curve_coeffs_i64(const PlaneCurve& c) {
    std::vector<int64_t> out;
    out.reserve(c.coeffs.size());
    for (const Fp& a : c.coeffs) out.push_back(a.v);
    return out;
}

json json_of_summary(const FrobeniusSummary& s) {
    RmDisc rm = rm_discriminant(s);
    json j;
    j["p"] = s.p;
    j["n1"] = s.n1;
    j["n2"] = s.n2;
    j["s1"] = s.s1;
    j["s2"] = s.s2;
    j["ordinary"] = is_ordinary(s);
    if (rm.split) j["rm_disc"] = "split";
    else j["rm_disc"] = rm.disc;
    j["rm"] = {{"disc", rm.disc},
               {"real_subfield", rm.real_subfield},
               {"split", rm.split},
               {"fundamental", rm.fundamental}};
    j["classification"] = reduction_class_name(classify_reduction(s));
    return j;
}

static json json_of_point(const ProjPoint& q) {
    ProjPoint n = q.normalized();
    return json::array({n.x0.v, n.x1.v, n.x2.v});
}

json json_of_plane(const KummerPlaneConfig& cfg) {
    json j;
    j["p"] = cfg.p;
    json lam = json::array();
    for (const Fp& l : cfg.lambda) lam.push_back(l.v);
    j["lambdas"] = lam;
    j["conic"] = "x1^2 - x0*x2";
    json lines = json::array();
    for (const auto& l : cfg.lines) lines.push_back(json::array({l.a0.v, l.a1.v, l.a2.v}));
    j["lines"] = lines;
    json pts = json::array();
    for (const auto& pt : cfg.points)
        pts.push_back({{"i", pt.i + 1}, {"j", pt.j + 1}, {"coords", json_of_point(pt.q)}});
    j["points"] = pts;
    json certs = json::array();
    for (int i = 0; i < 6; ++i) {
        TangencyCertificate c = tangency_certificate(cfg, i);
        certs.push_back({{"line", i + 1},
                         {"contact", json_of_point(c.contact)},
                         {"double_root", c.double_root},
                         {"restriction", json::array({c.restriction[0].v, c.restriction[1].v,
                                                      c.restriction[2].v})}});
    }
    j["tangency"] = certs;
    j["degenerate"] = cfg.degenerate;
    json extra = json::array();
    for (const auto& row : incidence_report(cfg)) {
        if (row.lines_through.size() != 2) {
            json lines1 = json::array();
            for (int k : row.lines_through) lines1.push_back(k + 1);
            extra.push_back({{"i", row.i + 1}, {"j", row.j + 1}, {"lines", lines1}});
        }
    }
    j["extra_incidences"] = extra;
    return j;
}

json json_of_contact(const Contact& c) {
    json j;
    j["multiplicity"] = c.multiplicity;
    if (c.rational) {
        j["field"] = "Fp";
        j["point"] = json_of_point(c.point);
    } else {
        j["field"] = "Fp2";
        json coords = json::array();
        for (const Fp2& x : c.point_ext) coords.push_back(json::array({x.re.v, x.im.v}));
        j["point"] = coords;
    }
    return j;
}

json json_of_contact_report(const LineContactReport& r) {
    json j;
    j["line_is_component"] = r.line_is_component;
    j["tangent"] = r.tangent;
    json contacts = json::array();
    for (const auto& c : r.contacts) contacts.push_back(json_of_contact(c));
    j["contacts"] = contacts;
    j["unresolved_degree"] = r.unresolved_degree;
    j["split_fp2"] = r.split_fp2;
    j["total_multiplicity"] = r.total_multiplicity;
    return j;
}

json json_of_class(const HumbertClass& h) {
    json j;
    j["case"] = delta_case_name(h.kase);
    j["d"] = h.d;
    j["k"] = h.k;
    j["delta"] = h.delta;
    j["N"] = sum_bundle_exponent(h);
    j["degree"] = expected_degree(h);
    j["torsion_budget"] = torsion_budget(h);
    j["line_total"] = line_intersection_total(h);
    if (h.kase == DeltaCase::I) {
        CaseIExponents e = case_I_exponents(h);
        j["exponents"] = {{"a1", e.a1}, {"b1", e.b1}, {"a2", e.a2}, {"b2", e.b2}};
        j["n_derivation"] = "verified";
    } else {
        j["n_derivation"] = "case I verified only";
    }
    return j;
}

json json_of_bw_report(const BwReport& r) {
    return json{{"degree", r.degree},
                {"expected_degree", r.expected_degree},
                {"degree_ok", r.degree_ok},
                {"torsion_on_curve", r.torsion_on_curve},
                {"torsion_budget", r.torsion_budget},
                {"torsion_ok", r.torsion_ok},
                {"even_multiplicity_ok", r.even_multiplicity_ok},
                {"line_total", r.line_total},
                {"expected_line_total", r.expected_line_total},
                {"line_total_ok", r.line_total_ok},
                {"contacts_complete", r.contacts_complete}};
}

json json_of_hit(const SearchHit& hit, const KummerPlaneConfig& cfg) {
    json j;
    json pts = json::array();
    for (const auto& [a, b] : hit.pairs) pts.push_back(json::array({a + 1, b + 1}));
    j["points"] = pts;
    j["line"] = hit.line + 1;
    j["conic"] = curve_coeffs_i64(hit.conic);

    json ver;
    bool incidences_ok = true;
    for (const auto& [a, b] : hit.pairs)
        incidences_ok = incidences_ok && eval_curve(hit.conic, point_of_pair(cfg, a, b).q).is_zero();
    ver["incidences_ok"] = incidences_ok;
    LineContactReport lc = line_contacts(hit.conic, cfg.lines[static_cast<size_t>(hit.line)]);
    ver["tangency"] = json_of_contact_report(lc);
    ver["irreducible"] = true; // hits are produced through the determinant test
    RationalityReport rr = rationality_report(hit.conic);
    ver["rational"] = rr.rational;
    // the classical invariant-5 budget: case I, d = 1, k = 6
    HumbertClass h{5, DeltaCase::I, 1, 6};
    ver["bw_case_I_d1"] = json_of_bw_report(verify_bw_configuration(hit.conic, h, cfg));
    j["verification"] = ver;
    return j;
}

json json_of_fiber_graph(const SpecialFiberGraph& g) {
    json j;
    j["labels"] = g.labels;
    j["gram"] = g.gram;
    j["mult"] = g.mult;
    return j;
}

json json_of_boundary_solution(const BoundarySolution& s) {
    json j;
    j["a"] = json_of_rat(s.a);
    j["b"] = json_of_rat(s.b);
    json chain = json::array();
    for (const Rat& c : s.chain) chain.push_back(json_of_rat(c));
    j["c"] = chain;
    json kernel = json::array();
    for (const Rat& k : s.kernel) kernel.push_back(json_of_rat(k));
    j["kernel"] = kernel;
    return j;
}

json json_of_versal_report(const VersalFiberReport& r) {
    json j;
    j["m"] = r.m;
    json sing = json::array();
    for (const auto& s : r.singular_points)
        sing.push_back({{"a", rat_to_string(s.location)},
                        {"n", s.n},
                        {"delta", s.delta},
                        {"germ", s.germ}});
    j["singular_points"] = sing;
    j["total_delta"] = r.total_delta;
    j["admissible"] = r.admissible;
    return j;
}

} // namespace kummerlab
