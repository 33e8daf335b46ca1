#ifndef PSIQ_IO_HPP_
#define PSIQ_IO_HPP_

// Canonical JSON and CSV renderings of solutions.
//
// JSON (one object per line):
//   {"kind":{"power":p,"equal":e,"free":f,"name":"..."},
//    "equal_entries":[...],"free_entries":[...],"psi":v,"target":"t"}
// target is a decimal string since it may exceed 64 bits.
//
// CSV: name,power,equal_1..equal_e,free_1..free_f,psi,target

#include <string>

#include <json.hpp>

#include "psiq/tuple.hpp"

namespace psiq {

nlohmann::ordered_json to_json(const Solution& s);
std::string to_json_line(const Solution& s);

// Parses and re-verifies; throws InvalidInput on a malformed object or a
// tuple that does not satisfy its equation.
Solution solution_from_json(const nlohmann::json& j);

std::string csv_header(const TupleKind& kind);
std::string to_csv_row(const Solution& s);

} // namespace psiq

#endif // PSIQ_IO_HPP_
