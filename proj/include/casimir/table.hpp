#ifndef CASIMIR_TABLE_HPP
#define CASIMIR_TABLE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

/// One result row of the fixed output schema
/// d_m,T_K,model,geometry,value,unit,m_terms,rel_err.
struct Row {
    double d_m;
    double T_K;
    std::string model;
    std::string geometry;
    double value;
    std::string unit;
    long m_terms;
    double rel_err;
};

enum class TableFormat { csv, json_lines };
TableFormat table_format_from_string(const std::string& s);

/// Scientific notation with 9 significant digits; byte-deterministic.
std::string format_sci(double v);

/// Writes rows (CSV with header, or one JSON object per line) and returns
/// the number of bytes written.
std::size_t emit_table(const std::vector<Row>& rows, TableFormat fmt, std::ostream& out);

}  // namespace casimir

#endif
