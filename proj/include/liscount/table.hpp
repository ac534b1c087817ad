#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "liscount/oracles.hpp"

namespace liscount {

enum class TableFormat { csv, json, markdown };

TableFormat parse_table_format(const std::string& name);

struct MethodMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableRequest {
    int r = 2;
    std::vector<int> d_values;
    int n_max = 1;
    std::string method = "gessel";  // gessel | rsk | brute | all
    TableFormat format = TableFormat::markdown;
    BigInt cap = BigInt(kDefaultBruteCap);
};

struct TableRow {
    int d = 0;
    std::vector<BigInt> values;  // n = 1..n_max
};

struct Table {
    int r = 0;
    int n_max = 0;
    std::string method;
    std::vector<TableRow> rows;
};

// Dispatches on a method name; "all" runs every applicable method and
// throws MethodMismatch on disagreement (brute is skipped above the cap).
CountResult count_with_method(int d, int r, int n, const std::string& method, const BigInt& cap);

Table build_table(const TableRequest& req);

std::string render_csv(const Table& table);
std::string render_json(const Table& table);  // big values as decimal strings
std::string render_markdown(const Table& table);
std::string render_table(const Table& table, TableFormat format);

}  // namespace liscount
