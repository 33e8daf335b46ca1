#include "psiq/tables.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "psiq/errors.hpp"

namespace psiq {

namespace {

TableSpec make(int id, const char* kind_name, u64 default_bound, std::vector<std::vector<u64>> rows)
{
    return TableSpec{id, *lookup_kind(kind_name), std::move(rows), default_bound};
}

} // namespace

// Rows transcribed in printed order. Default bounds cover the printed range
// where a search to that range is desk-feasible; larger rows are spot-verified.
const std::vector<TableSpec>& paper_tables()
{
    static const std::vector<TableSpec> tables = {
    // Table 1: 18 rows
    make(1, "quadratic-triple", 262144,
         {
            {2, 2, 1}, {4, 4, 2}, {8, 8, 4}, {16, 16, 8}, {32, 32, 16}, {64, 64, 32}, {128, 128, 64},
            {256, 256, 128}, {512, 512, 256}, {1024, 1024, 512}, {2048, 2048, 1024}, {4096, 4096, 2048},
            {8192, 8192, 4096}, {16384, 16384, 8192}, {32768, 32768, 16384}, {65536, 65536, 32768},
            {131072, 131072, 65536}, {262144, 262144, 131072},
         }),
    // Table 2: 33 rows
    make(2, "quadratic-quadruple", 1408,
         {
            {6, 6, 6, 6}, {12, 12, 12, 12}, {18, 18, 18, 18}, {18, 22, 22, 2}, {24, 24, 24, 24}, {36, 36, 36, 36},
            {36, 44, 44, 4}, {48, 48, 48, 48}, {54, 54, 54, 54}, {72, 72, 72, 72}, {72, 88, 88, 8},
            {96, 96, 96, 96}, {108, 108, 108, 108}, {144, 144, 144, 144}, {144, 176, 176, 16}, {162, 162, 162, 162},
            {192, 192, 192, 192}, {216, 216, 216, 216}, {288, 288, 288, 288}, {288, 352, 352, 32},
            {324, 324, 324, 324}, {384, 384, 384, 384}, {432, 432, 432, 432}, {486, 486, 486, 486},
            {576, 576, 576, 576}, {576, 704, 704, 64}, {648, 648, 648, 648}, {768, 768, 768, 768},
            {864, 864, 864, 864}, {972, 972, 972, 972}, {1152, 1152, 1152, 1152}, {1152, 1408, 1408, 128},
            {1296, 1296, 1296, 1296},
         }),
    // Table 3: 46 rows
    make(3, "cubic-triple", 1615,
         {
            {4, 3, 5}, {5, 3, 4}, {6, 8, 10}, {8, 6, 10}, {12, 16, 20}, {16, 12, 20}, {18, 24, 30}, {24, 32, 40},
            {25, 15, 20}, {32, 24, 40}, {36, 48, 60}, {48, 64, 80}, {53, 12, 19}, {54, 72, 90}, {58, 59, 69},
            {64, 48, 80}, {72, 96, 120}, {96, 128, 160}, {102, 26, 208}, {102, 117, 195}, {108, 144, 180},
            {116, 118, 138}, {118, 116, 138}, {125, 75, 100}, {128, 96, 160}, {144, 192, 240}, {162, 216, 270},
            {192, 256, 320}, {204, 52, 416}, {204, 234, 390}, {216, 288, 360}, {232, 236, 276}, {236, 232, 276},
            {256, 192, 320}, {258, 126, 504}, {288, 384, 480}, {306, 78, 624}, {306, 351, 585}, {324, 432, 540},
            {384, 512, 640}, {408, 104, 832}, {408, 468, 780}, {426, 6, 828}, {426, 646, 668}, {432, 576, 720},
            {1615, 1065, 1670},
         }),
    // Table 4: 33 rows
    make(4, "cubic-quadruple", 675,
         {
            {14, 16, 5, 19}, {28, 32, 10, 38}, {30, 45, 43, 56}, {42, 48, 40, 86}, {54, 68, 58, 84},
            {56, 64, 20, 76}, {60, 72, 63, 129}, {84, 96, 80, 172}, {90, 135, 129, 168}, {108, 136, 116, 168},
            {112, 128, 40, 152}, {120, 126, 144, 258}, {124, 161, 52, 95}, {126, 144, 120, 258},
            {150, 225, 215, 280}, {168, 192, 160, 344}, {174, 200, 12, 322}, {180, 216, 189, 387},
            {216, 272, 232, 336}, {224, 256, 80, 304}, {240, 252, 288, 516}, {252, 288, 240, 516},
            {270, 405, 387, 504}, {308, 322, 78, 504}, {336, 384, 320, 688}, {348, 400, 24, 644},
            {360, 378, 432, 774}, {378, 432, 360, 774}, {432, 544, 464, 672}, {448, 512, 160, 608},
            {450, 675, 645, 840}, {480, 504, 576, 1032}, {504, 576, 480, 1032},
         }),
    // Table 5: 31 rows
    make(5, "cubic-quintuple", 2101,
         {
            {6, 9, 9, 3, 3}, {12, 14, 16, 7, 17}, {18, 27, 27, 9, 9}, {24, 28, 32, 14, 34}, {30, 36, 40, 48, 50},
            {30, 55, 55, 11, 23}, {40, 44, 46, 12, 50}, {40, 46, 51, 29, 38}, {45, 46, 51, 21, 35},
            {48, 56, 64, 28, 68}, {56, 63, 77, 7, 13}, {62, 62, 69, 4, 43}, {54, 81, 81, 27, 27},
            {60, 72, 72, 75, 117}, {60, 72, 80, 96, 100}, {66, 72, 72, 45, 123}, {66, 72, 115, 2, 93},
            {66, 88, 92, 62, 100}, {70, 88, 119, 12, 65}, {70, 92, 99, 21, 96}, {80, 88, 92, 24, 100},
            {92, 92, 94, 36, 82}, {78, 78, 98, 82, 132}, {96, 112, 128, 56, 136}, {96, 124, 128, 69, 123},
            {930, 1280, 2101, 74, 379}, {960, 1152, 1152, 1200, 1872}, {960, 1152, 1280, 1536, 1600},
            {960, 1528, 1532, 117, 1611}, {1056, 1152, 1152, 720, 1968}, {1056, 1408, 1472, 992, 1600},
         }),
    // Table 6: 6 rows
    make(6, "quartic-quintuple", 1000,
         {
            {538, 96, 532, 548, 648}, {34432, 6144, 34048, 35072, 41472}, {68864, 12288, 68096, 70144, 82944},
            {137728, 24576, 136192, 140288, 165888}, {275456, 49152, 272384, 280576, 331776},
            {550912, 98304, 544768, 561152, 663552},
         }),
    // Table 7: 5 rows
    make(7, "quintic-quintuple", 1139,
         {
            {46, 19, 43, 47, 67}, {92, 38, 86, 94, 134}, {94, 38, 86, 92, 134}, {946, 418, 1012, 1034, 1474},
            {1139, 323, 731, 782, 799},
         }),
    };
    return tables;
}

const TableSpec& table_by_id(int id)
{
    if (id < 1 || id > 7) throw InvalidInput("table id must be in 1..7, got " + std::to_string(id));
    return paper_tables()[static_cast<std::size_t>(id - 1)];
}

Solution row_solution(const TableSpec& table, const std::vector<u64>& row)
{
    const auto e = static_cast<std::size_t>(table.kind.equal);
    if (row.size() != e + static_cast<std::size_t>(table.kind.free))
        throw InvalidInput("row arity does not match table " + std::to_string(table.table_id));
    return canonicalize(table.kind, std::span(row).first(e), std::span(row).subspan(e));
}

bool TableDiff::ok() const
{
    return missing.empty() &&
           std::all_of(out_of_bound.begin(), out_of_bound.end(), [](const OutOfBoundRow& r) { return r.verified; });
}

TableDiff diff_table(const TableSpec& table, u64 bound, const std::vector<Solution>& found)
{
    TableDiff diff;
    diff.table_id = table.table_id;
    diff.bound = bound;

    std::vector<Solution> printed;
    for (const auto& row : table.printed_rows) {
        const auto e = static_cast<std::size_t>(table.kind.equal);
        const u64 top = *std::max_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(e));
        if (top > bound) {
            bool verified = false;
            try {
                verified = verify_solution(table.kind, std::span(row).first(e), std::span(row).subspan(e)).ok;
            } catch (const std::exception&) {
            }
            diff.out_of_bound.push_back({row, verified});
            continue;
        }
        printed.push_back(row_solution(table, row));
    }
    std::sort(printed.begin(), printed.end());
    printed.erase(std::unique(printed.begin(), printed.end()), printed.end());

    std::set_intersection(found.begin(), found.end(), printed.begin(), printed.end(), std::back_inserter(diff.matched));
    std::set_difference(found.begin(), found.end(), printed.begin(), printed.end(), std::back_inserter(diff.extra));
    std::set_difference(printed.begin(), printed.end(), found.begin(), found.end(), std::back_inserter(diff.missing));
    return diff;
}

TableDiff reproduce_table(const TableSpec& table, u64 bound, unsigned jobs)
{
    SearchConfig config;
    config.kind = table.kind;
    config.bound = bound;
    config.jobs = jobs;
    return diff_table(table, bound, search(config));
}

} // namespace psiq
