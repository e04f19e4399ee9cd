#include "polyadic/json_io.hpp"

namespace polyadic {

using nlohmann::json;

json splitting_to_json(const Splitting& sp) {
    json j;
    j["q"] = sp.params.q;
    j["n"] = sp.params.n;
    j["r"] = sp.params.r;
    j["m"] = sp.m;
    j["s"] = sp.s;
    j["classes"] = sp.classes;
    return j;
}

json code_to_json(const LinearCode& code) {
    json j;
    j["q"] = code.ctx->size().to_uint64();
    j["n"] = code.n;
    j["k"] = code.k;
    j["provenance"] = provenance_name(code.provenance);
    if (code.constacyclic) {
        const auto& data = *code.constacyclic;
        j["lambda_index"] = data.lambda.index();
        std::vector<uint64_t> gen_indices;
        for (const auto& c : data.generator.coeffs()) gen_indices.push_back(c.index());
        j["generator_poly"] = gen_indices;
        j["zeros"] = data.zero_exponents;
    }
    return j;
}

json report_to_json(const BuildReport& rep) {
    json j;
    j["family"] = rep.family;
    j["params"] = {{"q", rep.params.q}, {"n", rep.params.n}, {"r", rep.params.r}};
    j["splitting"] = splitting_to_json(rep.splitting);
    j["code"] = code_to_json(rep.code);
    if (rep.distance) j["code"]["d"] = *rep.distance;
    if (rep.certified_distance) j["code"]["d_certified"] = *rep.certified_distance;
    j["distance_mode"] = rep.distance_mode;
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass();
    return j;
}

}  // namespace polyadic
