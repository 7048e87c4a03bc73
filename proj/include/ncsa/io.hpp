#pragma once

#include "ncsa/action.hpp"
#include "ncsa/nc_torus.hpp"
#include "ncsa/suq2.hpp"

#include <json.hpp>
#include <optional>
#include <string>

namespace ncsa {

using json = nlohmann::json;

struct TorusInput {
    int n = 0;
    Theta theta;
    bool diophantine_asserted = false;
    OneFormTorus A;
};

struct SuqInput {
    std::optional<double> q;
    LadderElem A;
    std::size_t forms = 0;
};

struct ActionInput {
    Cutoff cutoff;
    std::optional<double> lambda;
    std::map<int, cplx> integrals;
    std::optional<cplx> zeta0;
};

// All parsers raise ErrorKind::schema on malformed input.
json read_json_file(const std::string& path);
TorusInput parse_torus(const json& j);
SuqInput parse_suq_one_form(const json& j);
Cutoff parse_cutoff(const json& j);
ActionInput parse_action(const json& j);

json to_json(cplx z);
json to_json(const ExpansionReport& r);
json to_json(const CutoffMoments& m);

}  // namespace ncsa
