#ifndef PSIQ_TABLES_HPP_
#define PSIQ_TABLES_HPP_

#include <vector>

#include "psiq/search.hpp"
#include "psiq/tuple.hpp"

namespace psiq {

// A published solution table: rows are flat tuples, equal entries first.
struct TableSpec
{
    int table_id = 0;
    TupleKind kind;
    std::vector<std::vector<u64>> printed_rows;
    u64 default_bound = 1;
};

// Tables 1..7 in order.
const std::vector<TableSpec>& paper_tables();

// Throws InvalidInput unless id is in 1..7.
const TableSpec& table_by_id(int id);

// Canonical form of a printed row. Throws InvalidInput if it does not verify.
Solution row_solution(const TableSpec& table, const std::vector<u64>& row);

struct OutOfBoundRow
{
    std::vector<u64> row;
    bool verified = false;
};

struct TableDiff
{
    int table_id = 0;
    u64 bound = 0;
    std::vector<Solution> matched; // found and printed
    std::vector<Solution> extra;   // found, not printed
    std::vector<Solution> missing; // printed, within bound, not found
    std::vector<OutOfBoundRow> out_of_bound; // printed, above bound; spot-verified

    [[nodiscard]] bool ok() const;
};

// Searches table.kind up to bound and diffs the result against the printed rows.
TableDiff reproduce_table(const TableSpec& table, u64 bound, unsigned jobs = 1);

// Diff of an existing search result (searched up to bound) against the table.
TableDiff diff_table(const TableSpec& table, u64 bound, const std::vector<Solution>& found);

} // namespace psiq

#endif // PSIQ_TABLES_HPP_
