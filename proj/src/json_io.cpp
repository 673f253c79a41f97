#include "idealarr/json_io.hpp"

#include <stdexcept>

namespace idealarr {

using nlohmann::json;

json root_system_json(const RootSystem& rs) {
    json out;
    out["type"] = rs.rtype.str();
    out["cartan"] = rs.cartan;
    json roots = json::array();
    for (const Root& r : rs.positive_roots) roots.push_back(r.coeffs);
    out["positive_roots"] = roots;
    out["coxeter_number"] = rs.coxeter_number;
    if (!rs.alias_note.empty()) out["note"] = rs.alias_note;
    return out;
}

json ideal_json(const Ideal& I) {
    json out;
    out["members"] = I.members.indices();
    out["generators"] = I.generators.indices();
    return out;
}

json exponents_json(const RootSystem& rs, const Ideal& I) {
    json out;
    out["type"] = rs.rtype.str();
    out["ideal"] = ideal_json(I);
    out["height_distribution"] = height_distribution(rs, I);
    out["exponents"] = ideal_exponents(rs, I);
    return out;
}

json lattice_json(const RootSystem& rs, const Ideal& I) {
    json out;
    out["type"] = rs.rtype.str();
    out["ideal"] = ideal_json(I);
    std::vector<Flat> flats = build_lattice(rs, I);
    json jf = json::array();
    for (const Flat& f : flats) {
        json one;
        one["loc"] = f.loc.indices();
        one["dim"] = f.dim;
        one["mu"] = f.mu;
        jf.push_back(one);
    }
    out["flats"] = jf;
    out["charpoly"] = characteristic_polynomial(rs, flats);
    return out;
}

json certificate_json(const MatCertificate& cert) {
    json out;
    out["ok"] = cert.ok;
    if (cert.failed_layer >= 0)
        out["failed_layer"] = cert.failed_layer;
    else
        out["failed_layer"] = nullptr;
    out["exponents"] = cert.exponents;
    json layers = json::array();
    for (const MatLayer& L : cert.layers) {
        json one;
        one["layer"] = L.layer;
        one["d"] = L.d;
        one["p"] = L.p;
        one["q"] = L.q;
        one["condition_codim"] = L.cond_codim;
        one["condition_avoid"] = L.cond_avoid;
        one["condition_count"] = L.cond_count;
        one["q_le_p"] = L.q_le_p;
        one["exponents_match"] = L.exponents_match;
        one["exponents"] = L.exponents;
        layers.push_back(one);
    }
    out["layers"] = layers;
    return out;
}

json local_global_json(const RootSystem& rs, const LocalGlobalReport& rep) {
    json out;
    out["root"] = rs.root(rep.root_index).coeffs;
    out["height"] = rs.root(rep.root_index).height;
    out["lhs"] = rep.lhs;
    out["rhs"] = rep.rhs;
    out["pass"] = rep.pass;
    return out;
}

json poly_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        json one;
        one["monomial"] = mono;
        one["numerator"] = coeff.get_num().get_str();
        one["denominator"] = coeff.get_den().get_str();
        terms.push_back(one);
    }
    return terms;
}

json derivation_json(const Derivation& d) {
    json out;
    out["degree"] = d.degree;
    json coeffs = json::array();
    for (const Poly& p : d.coeffs) coeffs.push_back(poly_json(p));
    out["coefficients"] = coeffs;
    return out;
}

json basis_build_json(const BasisBuild& b) {
    json out;
    json basis = json::array();
    for (const Derivation& d : b.basis) basis.push_back(derivation_json(d));
    out["basis"] = basis;
    json degs = json::array();
    for (const Derivation& d : b.basis) degs.push_back(d.degree);
    out["degrees"] = degs;
    return out;
}

IndexSet parse_generator_list(const RootSystem& rs, const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("generators: not valid JSON: ") + e.what());
    }
    if (!parsed.is_array())
        throw std::invalid_argument("generators: expected an array of coefficient vectors");
    IndexSet gens;
    for (const auto& entry : parsed) {
        if (!entry.is_array())
            throw std::invalid_argument("generators: each entry must be a coefficient vector");
        std::vector<int> coeffs;
        for (const auto& c : entry) {
            if (!c.is_number_integer())
                throw std::invalid_argument("generators: coefficients must be integers");
            coeffs.push_back(c.get<int>());
        }
        if (static_cast<int>(coeffs.size()) != rs.rank())
            throw std::invalid_argument("generators: coefficient vector length " +
                                        std::to_string(coeffs.size()) + " does not match rank " +
                                        std::to_string(rs.rank()));
        int idx = rs.index_of(coeffs);
        if (idx < 0) {
            std::string s = "[";
            for (size_t i = 0; i < coeffs.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(coeffs[i]);
            }
            s += "]";
            throw std::invalid_argument("generators: " + s + " is not a positive root of " +
                                        rs.rtype.str());
        }
        gens.set(idx);
    }
    return gens;
}

}  // namespace idealarr
