#pragma once

#include <json.hpp>

#include "idealarr/derivations.hpp"
#include "idealarr/lattice.hpp"
#include "idealarr/localheight.hpp"
#include "idealarr/matengine.hpp"
#include "idealarr/partition.hpp"
#include "idealarr/rootposet.hpp"
#include "idealarr/rootsys.hpp"

namespace idealarr {

nlohmann::json root_system_json(const RootSystem& rs);
nlohmann::json ideal_json(const Ideal& I);
nlohmann::json exponents_json(const RootSystem& rs, const Ideal& I);
nlohmann::json lattice_json(const RootSystem& rs, const Ideal& I);
nlohmann::json certificate_json(const MatCertificate& cert);
nlohmann::json local_global_json(const RootSystem& rs, const LocalGlobalReport& rep);
nlohmann::json poly_json(const Poly& p);
nlohmann::json derivation_json(const Derivation& d);
nlohmann::json basis_build_json(const BasisBuild& b);

// parses [[c1..cl],...] into root indices
IndexSet parse_generator_list(const RootSystem& rs, const std::string& text);

}  // namespace idealarr
