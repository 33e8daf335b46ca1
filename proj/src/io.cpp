#include "psiq/io.hpp"

#include "psiq/errors.hpp"

namespace psiq {

nlohmann::ordered_json to_json(const Solution& s)
{
    nlohmann::ordered_json j;
    j["kind"] = {{"power", s.kind.power},
                 {"equal", s.kind.equal},
                 {"free", s.kind.free},
                 {"name", s.kind.name.empty() ? kind_label(s.kind) : s.kind.name}};
    j["equal_entries"] = s.equal_entries;
    j["free_entries"] = s.free_entries;
    j["psi"] = s.psi_value;
    j["target"] = to_string(s.target);
    return j;
}

std::string to_json_line(const Solution& s)
{
    return to_json(s).dump();
}

Solution solution_from_json(const nlohmann::json& j)
{
    try {
        TupleKind kind;
        const auto& k = j.at("kind");
        kind.power = k.at("power").get<int>();
        kind.equal = k.at("equal").get<int>();
        kind.free = k.at("free").get<int>();
        if (k.contains("name")) kind.name = k.at("name").get<std::string>();
        const auto eq = j.at("equal_entries").get<std::vector<u64>>();
        const auto fr = j.at("free_entries").get<std::vector<u64>>();
        Solution s = canonicalize(kind, eq, fr);
        if (j.contains("psi") && j.at("psi").get<u64>() != s.psi_value)
            throw InvalidInput("psi field disagrees with recomputed psi");
        if (j.contains("target")) {
            auto t = parse_u128(j.at("target").get<std::string>());
            if (!t || *t != s.target) throw InvalidInput("target field disagrees with recomputed target");
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed solution json: ") + e.what());
    }
}

std::string csv_header(const TupleKind& kind)
{
    std::string h = "name,power";
    for (int i = 1; i <= kind.equal; ++i) h += ",equal_" + std::to_string(i);
    for (int i = 1; i <= kind.free; ++i) h += ",free_" + std::to_string(i);
    return h + ",psi,target";
}

std::string to_csv_row(const Solution& s)
{
    std::string r = (s.kind.name.empty() ? kind_label(s.kind) : s.kind.name) + "," + std::to_string(s.kind.power);
    for (u64 a : s.equal_entries) r += "," + std::to_string(a);
    for (u64 b : s.free_entries) r += "," + std::to_string(b);
    return r + "," + std::to_string(s.psi_value) + "," + to_string(s.target);
}

} // namespace psiq
