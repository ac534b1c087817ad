#include "liscount/table.hpp"

#include <sstream>

#include <json.hpp>

namespace liscount {

TableFormat parse_table_format(const std::string& name) {
    if (name == "csv")
        return TableFormat::csv;
    if (name == "json")
        return TableFormat::json;
    if (name == "markdown")
        return TableFormat::markdown;
    throw std::invalid_argument("unknown table format: '" + name + "'");
}

CountResult count_with_method(int d, int r, int n, const std::string& method,
                              const BigInt& cap) {
    if (method == "gessel")
        return count_via_gessel(d, r, n);
    if (method == "rsk")
        return count_via_rsk(d, r, n);
    if (method == "brute")
        return count_via_brute(d, r, n, cap);
    if (method == "all") {
        CountResult g = count_via_gessel(d, r, n);
        const CountResult k = count_via_rsk(d, r, n);
        if (g.value != k.value)
            throw MethodMismatch("gessel/rsk disagree at d=" + std::to_string(d) +
                                 " r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " +
                                 g.value.get_str() + " vs " + k.value.get_str());
        if (total_word_count(r, n) <= cap) {
            const CountResult b = count_via_brute(d, r, n, cap);
            if (g.value != b.value)
                throw MethodMismatch("gessel/brute disagree at d=" + std::to_string(d) +
                                     " r=" + std::to_string(r) + " n=" + std::to_string(n) +
                                     ": " + g.value.get_str() + " vs " + b.value.get_str());
        }
        return g;
    }
    throw std::invalid_argument("unknown method: '" + method + "'");
}

Table build_table(const TableRequest& req) {
    if (req.n_max < 1 || req.d_values.empty())
        throw std::invalid_argument("table: need n_max >= 1 and a non-empty d list");
    for (int d : req.d_values)
        if (d < 1)
            throw std::invalid_argument("table: every d must be >= 1");
    Table table;
    table.r = req.r;
    table.n_max = req.n_max;
    table.method = req.method;
    for (int d : req.d_values) {
        TableRow row;
        row.d = d;
        for (int n = 1; n <= req.n_max; ++n)
            row.values.push_back(count_with_method(d, req.r, n, req.method, req.cap).value);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string render_csv(const Table& table) {
    std::ostringstream os;
    os << "d,n,value,method\n";
    for (const TableRow& row : table.rows)
        for (std::size_t i = 0; i < row.values.size(); ++i)
            os << row.d << "," << i + 1 << "," << row.values[i].get_str() << ","
               << table.method << "\n";
    return os.str();
}

std::string render_json(const Table& table) {
    nlohmann::ordered_json j;
    j["r"] = table.r;
    j["rows"] = nlohmann::ordered_json::array();
    for (const TableRow& row : table.rows) {
        nlohmann::ordered_json jr;
        jr["d"] = row.d;
        jr["values"] = nlohmann::ordered_json::array();
        for (const BigInt& v : row.values)
            jr["values"].push_back(v.get_str());  // strings: values exceed 64 bits
        j["rows"].push_back(std::move(jr));
    }
    j["method"] = table.method;
    return j.dump() + "\n";
}

std::string render_markdown(const Table& table) {
    std::ostringstream os;
    os << "| d\\n |";
    for (int n = 1; n <= table.n_max; ++n)
        os << " " << n << " |";
    os << "\n|---|";
    for (int n = 1; n <= table.n_max; ++n)
        os << "---|";
    os << "\n";
    for (const TableRow& row : table.rows) {
        os << "| " << row.d << " |";
        for (const BigInt& v : row.values)
            os << " " << v.get_str() << " |";
        os << "\n";
    }
    return os.str();
}

std::string render_table(const Table& table, TableFormat format) {
    switch (format) {
        case TableFormat::csv: return render_csv(table);
        case TableFormat::json: return render_json(table);
        case TableFormat::markdown: return render_markdown(table);
    }
    throw std::invalid_argument("render_table: bad format");
}

}  // namespace liscount
