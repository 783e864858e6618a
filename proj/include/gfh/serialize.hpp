#pragma once

// JSON serialization for the documented output schemas: chain complexes,
// homology tables, squeeze verdicts and contact residual reports. Rationals
// are serialized as "p/q" strings so that round trips stay exact.

#include <string>

#include "json.hpp"

#include "chain.hpp"
#include "contact.hpp"
#include "squeeze.hpp"

namespace gfh {

using nlohmann::json;

inline json to_json(const HomologyTable& t) {
    json degrees = json::array();
    for (const auto& [d, e] : t.entries()) {
        json tors = json::array();
        for (const Int& f : e.torsion) tors.push_back(f.str());
        degrees.push_back({{"degree", d}, {"rank", e.rank}, {"torsion", tors}});
    }
    return {{"degrees", degrees}};
}

inline json to_json(const Generator& g) {
    return {{"stratum", to_string(g.stratum)},
            {"inner_degree", g.inner_degree},
            {"total_degree", g.total_degree},
            {"filtration", to_string(g.filtration)},
            {"orbit", g.orbit}};
}

inline json to_json(const GradedChainComplex& c) {
    json degrees = json::array();
    for (const auto& [d, gens] : c.all_generators()) {
        json jg = json::array();
        for (const auto& g : gens) jg.push_back(to_json(g));
        IntMatrix b = c.boundary(d);
        json rows = json::array();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < b.cols(); ++j)
                row.push_back(b.at(i, j).str());
            rows.push_back(row);
        }
        degrees.push_back({{"degree", d},
                           {"generators", jg},
                           {"boundary",
                            {{"rows", b.rows()}, {"cols", b.cols()},
                             {"entries", rows}}}});
    }
    return {{"coefficients", c.coefficients() == Coeff::Fk ? "Fk" : "Z"},
            {"prime", c.prime()},
            {"degrees", degrees}};
}

inline json to_json(const SqueezeVerdict& v, const Rational& R,
                    const Rational& Rp) {
    json j = {{"status", to_string(v.status)},
              {"R", to_string(R)},
              {"Rp", to_string(Rp)}};
    j["witness"] = v.witness ? json(*v.witness) : json();
    j["degree"] = v.degree ? json(*v.degree) : json();
    if (v.diagram)
        j["diagram"] = {{"Rpp", v.diagram->big},
                        {"R", v.diagram->mid},
                        {"Rp", v.diagram->small}};
    else
        j["diagram"] = json();
    return j;
}

inline json residual_report(const std::vector<double>& point, double lambda,
                            double residual, double tolerance) {
    return {{"point", point},
            {"lambda", lambda},
            {"residual", residual},
            {"tolerance", tolerance},
            {"pass", residual < tolerance}};
}

}  // namespace gfh
